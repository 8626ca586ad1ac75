//! Algebra descriptors (`free`, `grassmann:R`, `group:R`, `quotient:R`,
//! `tensor:A,B`) and evaluation of parsed expressions in them.

use std::fmt;
use std::str::FromStr;

use nilcomm::commutator_calculus::left_normed_generic;
use nilcomm::free_algebra::{FreeAlgebra, NcPoly};
use nilcomm::grassmann::GrassmannAlgebra;
use nilcomm::group_construction::{GroupAlgebra, QuotientAlgebra};
use nilcomm::{Algebra, Elem, Error, FieldTag, Scalar, TensorAlgebra};

use crate::parse::{Expr, ParseError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Target {
    Free,
    Grassmann(u32),
    Group(u32),
    Quotient(u32),
    Tensor(Box<Target>, Box<Target>),
}

#[derive(Debug, thiserror::Error)]
pub enum EvalError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Algebra(#[from] Error),
    #[error("unknown algebra {0:?}; expected free, grassmann:R, group:R, quotient:R or tensor:A,B")]
    UnknownAlgebra(String),
    #[error("{0}")]
    Shape(String),
}

impl FromStr for Target {
    type Err = EvalError;

    fn from_str(s: &str) -> Result<Self, EvalError> {
        let bad = || EvalError::UnknownAlgebra(s.to_string());
        let rank = |r: &str| r.parse::<u32>().map_err(|_| bad());
        if s == "free" {
            return Ok(Target::Free);
        }
        let (kind, rest) = s.split_once(':').ok_or_else(bad)?;
        match kind {
            "grassmann" => Ok(Target::Grassmann(rank(rest)?)),
            "group" => Ok(Target::Group(rank(rest)?)),
            "quotient" => Ok(Target::Quotient(rank(rest)?)),
            "tensor" => {
                // factors are never tensors themselves, so the first comma splits
                let (a, b) = rest.split_once(',').ok_or_else(bad)?;
                let (a, b): (Target, Target) = (a.parse()?, b.parse()?);
                if matches!(a, Target::Tensor(..)) || matches!(b, Target::Tensor(..)) {
                    return Err(bad());
                }
                Ok(Target::Tensor(Box::new(a), Box::new(b)))
            }
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Target::Free => write!(f, "free"),
            Target::Grassmann(r) => write!(f, "grassmann:{r}"),
            Target::Group(r) => write!(f, "group:{r}"),
            Target::Quotient(r) => write!(f, "quotient:{r}"),
            Target::Tensor(a, b) => write!(f, "tensor:{a},{b}"),
        }
    }
}

impl Target {
    fn letter(&self) -> Option<char> {
        match self {
            Target::Free => Some('x'),
            Target::Grassmann(_) => Some('e'),
            Target::Group(_) | Target::Quotient(_) => Some('y'),
            Target::Tensor(..) => None,
        }
    }
}

/// How generators and `⊗` are interpreted while evaluating into `A`.
trait Interp {
    type A: Algebra;
    fn algebra(&self) -> &Self::A;
    fn generator(&self, c: char, i: u32) -> Result<Elem<Self::A>, EvalError>;
    fn tensor(&self, a: &Expr, b: &Expr) -> Result<Elem<Self::A>, EvalError>;
}

fn eval<I: Interp>(it: &I, e: &Expr) -> Result<Elem<I::A>, EvalError> {
    let alg = it.algebra();
    Ok(match e {
        Expr::Int(v) => alg.scalar(&Scalar::from_bigint(alg.field(), v)),
        Expr::Gen(c, i) => it.generator(*c, *i)?,
        Expr::Neg(a) => eval(it, a)?.neg(),
        Expr::Add(a, b) => alg.add(&eval(it, a)?, &eval(it, b)?),
        Expr::Sub(a, b) => alg.sub(&eval(it, a)?, &eval(it, b)?),
        Expr::Mul(a, b) => alg.mul(&eval(it, a)?, &eval(it, b)?),
        Expr::Comm(xs) => {
            let args = xs.iter().map(|x| eval(it, x)).collect::<Result<Vec<_>, _>>()?;
            left_normed_generic(alg, &args)?
        }
        Expr::Tensor(a, b) => it.tensor(a, b)?,
    })
}

fn mismatch(c: char, i: u32, target: &str) -> EvalError {
    ParseError::GeneratorMismatch { found: format!("{c}{i}"), target: target.to_string() }.into()
}

/// A plain (non-tensor) algebra whose generators are `letter_i`.
struct Plain<A, F> {
    alg: A,
    letter: char,
    name: String,
    make: F,
}

impl<A: Algebra, F: Fn(&A, u32) -> Elem<A>> Interp for Plain<A, F> {
    type A = A;

    fn algebra(&self) -> &A {
        &self.alg
    }

    fn generator(&self, c: char, i: u32) -> Result<Elem<A>, EvalError> {
        if c != self.letter {
            return Err(mismatch(c, i, &self.name));
        }
        let x = (self.make)(&self.alg, i);
        self.alg.check(&x)?;
        Ok(x)
    }

    fn tensor(&self, _: &Expr, _: &Expr) -> Result<Elem<A>, EvalError> {
        Err(EvalError::Shape(format!("'⊗' needs a tensor algebra, not {}", self.name)))
    }
}

struct Pair<L: Interp, R: Interp> {
    alg: TensorAlgebra<L::A, R::A>,
    left: L,
    right: R,
    name: String,
}

impl<L: Interp, R: Interp> Interp for Pair<L, R>
where
    L::A: Clone,
    R::A: Clone,
{
    type A = TensorAlgebra<L::A, R::A>;

    fn algebra(&self) -> &Self::A {
        &self.alg
    }

    fn generator(&self, c: char, i: u32) -> Result<Elem<Self::A>, EvalError> {
        Err(mismatch(c, i, &format!("{} outside a '⊗' pair", self.name)))
    }

    fn tensor(&self, a: &Expr, b: &Expr) -> Result<Elem<Self::A>, EvalError> {
        Ok(self.alg.pure(&eval(&self.left, a)?, &eval(&self.right, b)?)?)
    }
}

/// Evaluates `expr` in `target` over `field` and returns the canonical
/// serialization `{"terms":[{"monomial":..,"coeff":".."}, ..]}`.
// Some factor algebras are `Copy`, but the macro clones generically.
#[allow(clippy::clone_on_copy)]
pub fn expand(target: &Target, field: FieldTag, expr: &Expr) -> Result<String, EvalError> {
    fn run<I: Interp>(it: &I, e: &Expr) -> Result<String, EvalError> {
        Ok(serde_json::to_string(&eval(it, e)?).expect("elements serialize"))
    }
    // Monomorphization needs each (left, right) combination spelled out.
    macro_rules! with_plain {
        ($t:expr, |$it:ident| $body:expr) => {
            match $t {
                Target::Free => {
                    let $it = Plain { alg: FreeAlgebra::new(field), letter: 'x', name: $t.to_string(), make: |a: &FreeAlgebra, i| a.x(i) };
                    $body
                }
                Target::Grassmann(r) => {
                    let $it = Plain { alg: GrassmannAlgebra::new(field, *r)?, letter: 'e', name: $t.to_string(), make: |a: &GrassmannAlgebra, i| a.e(i) };
                    $body
                }
                Target::Group(r) => {
                    group_field(field)?;
                    let $it = Plain { alg: GroupAlgebra::bounded(*r), letter: 'y', name: $t.to_string(), make: |a: &GroupAlgebra, i| a.y(i) };
                    $body
                }
                Target::Quotient(r) => {
                    group_field(field)?;
                    let $it = Plain { alg: QuotientAlgebra::new(*r)?, letter: 'y', name: $t.to_string(), make: |a: &QuotientAlgebra, i| a.ybar(i) };
                    $body
                }
                Target::Tensor(..) => unreachable!("tensor factors are plain"),
            }
        };
    }
    match target {
        Target::Tensor(a, b) => with_plain!(a.as_ref(), |l| with_plain!(b.as_ref(), |r| {
            let alg = TensorAlgebra::new(l.alg.clone(), r.alg.clone())?;
            run(&Pair { alg, left: l, right: r, name: target.to_string() }, expr)
        })),
        plain => {
            debug_assert!(plain.letter().is_some());
            with_plain!(plain, |it| run(&it, expr))
        }
    }
}

/// Evaluates `expr` in the free algebra over `field`.
pub fn eval_free(field: FieldTag, expr: &Expr) -> Result<NcPoly, EvalError> {
    let it = Plain { alg: FreeAlgebra::new(field), letter: 'x', name: Target::Free.to_string(), make: |a: &FreeAlgebra, i| a.x(i) };
    eval(&it, expr)
}

fn group_field(field: FieldTag) -> Result<(), EvalError> {
    if field != FieldTag::Gf2 {
        return Err(EvalError::Shape(format!("the group algebra is defined over gf2, not {field}")));
    }
    Ok(())
}
