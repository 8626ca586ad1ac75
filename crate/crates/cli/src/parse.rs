//! Surface syntax for algebra elements.
//!
//! ```text
//! expr   := ['-'] term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := atom [('⊗' | '(x)') atom]
//! atom   := INT | GEN | '[' expr (',' expr)+ ']' | '(' expr ')'
//! GEN    := [xey][1-9][0-9]*
//! ```
//!
//! [`Expr`]'s `Display` prints the canonical form, which parses back to the
//! same tree.

use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Int(BigInt),
    Gen(char, u32),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    /// Left-normed commutator `[a_1, ..., a_l]`, `l ≥ 2`.
    Comm(Vec<Expr>),
    Tensor(Box<Expr>, Box<Expr>),
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("generator {found} does not belong to {target}")]
    GeneratorMismatch { found: String, target: String },
    #[error("commutator at byte {offset} has {slots} slot(s); at least 2 are needed")]
    Arity { offset: usize, slots: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Gen(char, u32),
    Plus,
    Minus,
    Star,
    LBracket,
    RBracket,
    Comma,
    LParen,
    RParen,
    Tensor,
}

fn syntax(offset: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax { offset, message: message.into() }
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'[' => Tok::LBracket,
            b']' => Tok::RBracket,
            b',' => Tok::Comma,
            b'(' if text[i..].starts_with("(x)") => {
                i += 3;
                out.push((start, Tok::Tensor));
                continue;
            }
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((start, Tok::Int(text[start..i].parse().expect("ascii digits"))));
                continue;
            }
            b'x' | b'e' | b'y' => {
                i += 1;
                if i >= bytes.len() || !(b'1'..=b'9').contains(&bytes[i]) {
                    return Err(syntax(i, "generator index must start with a nonzero digit"));
                }
                let digits = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let idx = text[digits..i].parse().map_err(|_| syntax(digits, "generator index too large"))?;
                out.push((start, Tok::Gen(c as char, idx)));
                continue;
            }
            _ if text[i..].starts_with('⊗') => {
                i += '⊗'.len_utf8();
                out.push((start, Tok::Tensor));
                continue;
            }
            _ => {
                let ch = text[i..].chars().next().expect("in bounds");
                return Err(syntax(i, format!("unexpected character {ch:?}")));
            }
        };
        i += 1;
        out.push((start, tok));
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(o, _)| *o)
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == Some(t) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, t: &Tok, what: &str) -> Result<(), ParseError> {
        if self.eat(t) {
            Ok(())
        } else {
            Err(syntax(self.offset(), format!("expected {what}")))
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut acc = if self.eat(&Tok::Minus) { Expr::Neg(Box::new(self.term()?)) } else { self.term()? };
        loop {
            if self.eat(&Tok::Plus) {
                acc = Expr::Add(Box::new(acc), Box::new(self.term()?));
            } else if self.eat(&Tok::Minus) {
                acc = Expr::Sub(Box::new(acc), Box::new(self.term()?));
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut acc = self.factor()?;
        while self.eat(&Tok::Star) {
            acc = Expr::Mul(Box::new(acc), Box::new(self.factor()?));
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        let a = self.atom()?;
        if self.eat(&Tok::Tensor) {
            return Ok(Expr::Tensor(Box::new(a), Box::new(self.atom()?)));
        }
        Ok(a)
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let offset = self.offset();
        let Some(tok) = self.peek().cloned() else {
            return Err(syntax(offset, "unexpected end of input"));
        };
        self.pos += 1;
        match tok {
            Tok::Int(v) => Ok(Expr::Int(v)),
            Tok::Gen(c, i) => Ok(Expr::Gen(c, i)),
            Tok::LParen => {
                let e = self.expr()?;
                self.expect(&Tok::RParen, "')'")?;
                Ok(e)
            }
            Tok::LBracket => {
                let mut slots = vec![self.expr()?];
                while self.eat(&Tok::Comma) {
                    slots.push(self.expr()?);
                }
                if slots.len() < 2 && self.peek() == Some(&Tok::RBracket) {
                    return Err(ParseError::Arity { offset, slots: slots.len() });
                }
                self.expect(&Tok::RBracket, "',' or ']'")?;
                Ok(Expr::Comm(slots))
            }
            _ => Err(syntax(offset, "expected a number, generator, '[' or '('")),
        }
    }
}

/// Parses `text` without reference to a target algebra.
pub fn parse(text: &str) -> Result<Expr, ParseError> {
    let mut p = Parser { toks: lex(text)?, pos: 0, end: text.len() };
    let e = p.expr()?;
    if p.pos < p.toks.len() {
        return Err(syntax(p.offset(), "unexpected trailing input"));
    }
    Ok(e)
}

impl Expr {
    fn is_atom(&self) -> bool {
        matches!(self, Expr::Int(_) | Expr::Gen(..) | Expr::Comm(_))
    }

    fn is_factor(&self) -> bool {
        self.is_atom() || matches!(self, Expr::Tensor(..))
    }

    fn is_term(&self) -> bool {
        self.is_factor() || matches!(self, Expr::Mul(..))
    }

    /// Every generator letter and index, in reading order.
    pub fn generators(&self) -> Vec<(char, u32)> {
        let mut out = Vec::new();
        self.walk(&mut |e| {
            if let Expr::Gen(c, i) = e {
                out.push((*c, *i));
            }
        });
        out
    }

    fn walk(&self, f: &mut impl FnMut(&Expr)) {
        f(self);
        match self {
            Expr::Int(_) | Expr::Gen(..) => {}
            Expr::Neg(a) => a.walk(f),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Tensor(a, b) => {
                a.walk(f);
                b.walk(f);
            }
            Expr::Comm(xs) => xs.iter().for_each(|x| x.walk(f)),
        }
    }
}

struct Wrapped<'a>(&'a Expr, bool);

impl fmt::Display for Wrapped<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.1 {
            write!(f, "({})", self.0)
        } else {
            write!(f, "{}", self.0)
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Int(v) => write!(f, "{v}"),
            Expr::Gen(c, i) => write!(f, "{c}{i}"),
            Expr::Neg(a) => write!(f, "-{}", Wrapped(a, !a.is_term())),
            Expr::Add(a, b) => write!(f, "{} + {}", a, Wrapped(b, !b.is_term())),
            Expr::Sub(a, b) => write!(f, "{} - {}", a, Wrapped(b, !b.is_term())),
            Expr::Mul(a, b) => write!(f, "{}*{}", Wrapped(a, !a.is_term()), Wrapped(b, !b.is_factor())),
            Expr::Tensor(a, b) => write!(f, "{} ⊗ {}", Wrapped(a, !a.is_atom()), Wrapped(b, !b.is_atom())),
            Expr::Comm(xs) => {
                write!(f, "[")?;
                for (k, x) in xs.iter().enumerate() {
                    if k > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{x}")?;
                }
                write!(f, "]")
            }
        }
    }
}
