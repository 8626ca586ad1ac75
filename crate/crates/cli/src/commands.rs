//! Subcommands and exit-code policy.

use clap::{Parser, Subcommand};
use nilcomm::commutator_calculus::compare_closed_forms;
use nilcomm::grassmann::GrassmannAlgebra;
use nilcomm::tideal::{member, MultilinearFrame};
use nilcomm::verify::{self, CharCase, ClaimStatus, VerificationTask, DEFAULT_SEED};
use nilcomm::{Algebra, Error, FieldTag, TensorAlgebra};
use serde_json::{json, Value};

use crate::parse::parse;
use crate::target::{eval_free, expand, EvalError, Target};

pub const EXIT_OK: i32 = 0;
pub const EXIT_REFUTED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_UNKNOWN: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "nilcomm", version, about = "Exact checks for products of commutator ideals")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build the witness algebra for (m, n) and check every claim.
    Verify {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        n: u32,
        /// 0 for any characteristic other than 2 (computed over ℚ), or 2.
        #[arg(long = "char", value_parser = ["0", "2"])]
        characteristic: String,
        /// Number of extra commutator factors.
        #[arg(long, default_value_t = 0)]
        ell: u32,
        #[arg(long, env = "NILCOMM_SEED", default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Largest generator index handled by the characteristic-2 construction.
        #[arg(long)]
        support: Option<u32>,
        /// Override the number of random samples in sampled checks.
        #[arg(long)]
        samples: Option<u64>,
        /// Largest support for exact ideal membership.
        #[arg(long)]
        exact_limit: Option<u32>,
    },
    /// Decide membership of a multilinear polynomial in T^(n).
    Tideal {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        degree: usize,
        #[arg(long, default_value = "q")]
        field: String,
        #[arg(long)]
        target: String,
        /// Exit 1 unless the verdict matches.
        #[arg(long)]
        expect: Option<bool>,
    },
    /// Print the canonical form of an expression.
    Expand {
        #[arg(long)]
        algebra: String,
        #[arg(long, default_value = "q")]
        field: String,
        expr: String,
    },
    /// Compare the closed commutator expansion with the direct one on random inputs.
    LemmaCl {
        #[arg(long, default_value_t = 7)]
        lmax: usize,
        #[arg(long, default_value_t = 200)]
        trials: u64,
        #[arg(long, env = "NILCOMM_SEED", default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

/// What a run printed and how it exits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn json(code: i32, v: &Value) -> Self {
        Outcome { code, stdout: format!("{v}\n"), stderr: String::new() }
    }

    fn error(code: i32, msg: impl std::fmt::Display) -> Self {
        Outcome { code, stdout: String::new(), stderr: format!("error: {msg}\n") }
    }
}

/// Parses `argv` (including the program name) and runs the subcommand.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code, stdout: String::new(), stderr: text }
            } else {
                Outcome { code, stdout: text, stderr: String::new() }
            };
        }
    };
    match cli.command {
        Command::Verify { m, n, characteristic, ell, seed, support, samples, exact_limit } => {
            let char_case = if characteristic == "2" { CharCase::Char2 } else { CharCase::CharNot2 };
            run_verify(m, n, char_case, ell, seed, support, samples, exact_limit)
        }
        Command::Tideal { n, degree, field, target, expect } => run_tideal(n, degree, &field, &target, expect),
        Command::Expand { algebra, field, expr } => run_expand(&algebra, &field, &expr),
        Command::LemmaCl { lmax, trials, seed } => run_lemma_cl(lmax, trials, seed),
    }
}

/// Exit code for failures the library reports as errors: parameters outside
/// what can be decided exactly are "unknown", everything else is misuse.
fn error_code(e: &Error) -> i32 {
    match e {
        Error::UnsupportedParameters(_) | Error::DegreeTooLarge { .. } => EXIT_UNKNOWN,
        _ => EXIT_USAGE,
    }
}

#[allow(clippy::too_many_arguments)]
fn run_verify(
    m: u32,
    n: u32,
    char_case: CharCase,
    ell: u32,
    seed: u64,
    support: Option<u32>,
    samples: Option<u64>,
    exact_limit: Option<u32>,
) -> Outcome {
    let task = match VerificationTask::new(m, n, char_case) {
        Ok(t) => t,
        Err(e) => return Outcome::error(EXIT_USAGE, e),
    };
    let mut task = task.with_ell(ell).with_seed(seed);
    if let Some(b) = support {
        task = task.with_support_bound(b);
    }
    if let Some(s) = samples {
        task = task.with_samples(s);
    }
    if let Some(l) = exact_limit {
        task = task.with_exact_limit(l);
    }
    match verify::run(&task) {
        Ok(report) => {
            let statuses: Vec<ClaimStatus> = report.claims.iter().map(|c| c.status).collect();
            let code = if statuses.contains(&ClaimStatus::Refuted) {
                EXIT_REFUTED
            } else if statuses.contains(&ClaimStatus::Unknown) {
                EXIT_UNKNOWN
            } else {
                EXIT_OK
            };
            Outcome { code, stdout: format!("{}\n", report.to_json()), stderr: String::new() }
        }
        Err(e) => Outcome::error(error_code(&e), e),
    }
}

fn parse_field(s: &str) -> Result<FieldTag, Outcome> {
    s.parse().map_err(|e: Error| Outcome::error(EXIT_USAGE, e))
}

fn eval_error(e: EvalError) -> Outcome {
    match e {
        EvalError::Algebra(inner) => Outcome::error(error_code(&inner), inner),
        other => Outcome::error(EXIT_USAGE, other),
    }
}

fn run_tideal(n: usize, degree: usize, field: &str, target: &str, expect: Option<bool>) -> Outcome {
    let field = match parse_field(field) {
        Ok(f) => f,
        Err(o) => return o,
    };
    let frame = match MultilinearFrame::new(field, degree) {
        Ok(f) => f,
        Err(e) => return Outcome::error(error_code(&e), e),
    };
    let poly = match parse(target).map_err(EvalError::from).and_then(|e| eval_free(field, &e)) {
        Ok(p) => p,
        Err(e) => return eval_error(e),
    };
    match member(&poly, n, &frame) {
        Ok(verdict) => {
            let code = match expect {
                Some(want) if want != verdict => EXIT_REFUTED,
                _ => EXIT_OK,
            };
            Outcome::json(code, &json!({ "member": verdict }))
        }
        Err(e) => Outcome::error(error_code(&e), e),
    }
}

fn run_expand(algebra: &str, field: &str, text: &str) -> Outcome {
    let field = match parse_field(field) {
        Ok(f) => f,
        Err(o) => return o,
    };
    let result = algebra
        .parse::<Target>()
        .and_then(|t| Ok((t, parse(text)?)))
        .and_then(|(t, e)| expand(&t, field, &e));
    match result {
        Ok(text) => Outcome { code: EXIT_OK, stdout: format!("{text}\n"), stderr: String::new() },
        Err(e) => eval_error(e),
    }
}

/// `E^(10) ⊗ E_6` over ℚ, as in the acceptance suite.
pub const LEMMA_LEFT_RANK: u32 = 10;
pub const LEMMA_RIGHT_RANK: u32 = 6;
pub const LEMMA_TERMS: usize = 3;

fn run_lemma_cl(lmax: usize, trials: u64, seed: u64) -> Outcome {
    if lmax < 2 {
        return Outcome::error(EXIT_USAGE, "--lmax must be at least 2");
    }
    let q = FieldTag::Rational;
    let g = GrassmannAlgebra::new(q, LEMMA_LEFT_RANK).expect("ℚ is not characteristic 2");
    let h = GrassmannAlgebra::new(q, LEMMA_RIGHT_RANK).expect("ℚ is not characteristic 2");
    let t = TensorAlgebra::new(g.clone(), h.clone()).expect("same field");
    match compare_closed_forms(&t, &g.basis(), &h.basis(), 2..=lmax, trials, LEMMA_TERMS, seed) {
        Ok(tallies) => {
            let holds = tallies.iter().all(|x| x.mismatches == 0);
            let v = json!({
                "algebra": t.describe(),
                "seed": seed,
                "trials": trials,
                "lengths": tallies,
                "holds": holds,
            });
            Outcome::json(if holds { EXIT_OK } else { EXIT_REFUTED }, &v)
        }
        Err(e) => Outcome::error(error_code(&e), e),
    }
}
