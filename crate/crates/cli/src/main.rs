use std::io::Write;

fn main() {
    let out = nilcomm_cli::run(std::env::args_os());
    // stdout is written once, at the end
    std::io::stdout().write_all(out.stdout.as_bytes()).expect("write stdout");
    std::io::stderr().write_all(out.stderr.as_bytes()).expect("write stderr");
    std::process::exit(out.code);
}
