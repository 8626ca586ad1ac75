//! The free unital associative algebra `F<x_1, x_2, ...>`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::coeff::{FieldTag, Scalar};
use crate::error::{Error, Result};
use crate::lincomb::LinComb;
use crate::tensor_product::{Algebra, Elem};

/// A word in the 1-based generators; the empty word is the unit.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(Vec<u32>);

impl Word {
    pub fn new(letters: Vec<u32>) -> Self {
        assert!(letters.iter().all(|&l| l > 0), "generator indices are 1-based");
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + other.0.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.0.iter().map(|i| format!("x{i}")).collect();
        write!(f, "{}", parts.join("*"))
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

pub type NcPoly = LinComb<Word>;

/// `F<X>` over a fixed field.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FreeAlgebra {
    field: FieldTag,
}

impl FreeAlgebra {
    pub fn new(field: FieldTag) -> Self {
        FreeAlgebra { field }
    }

    pub fn x(&self, i: u32) -> NcPoly {
        x(self.field, i)
    }
}

impl Algebra for FreeAlgebra {
    type Basis = Word;

    fn field(&self) -> FieldTag {
        self.field
    }

    fn unit_basis(&self) -> Word {
        Word::empty()
    }

    fn basis_mul(&self, a: &Word, b: &Word) -> NcPoly {
        LinComb::basis(self.field, a.concat(b))
    }

    fn contains(&self, _: &Word) -> bool {
        true
    }

    fn describe(&self) -> String {
        format!("F<X> over {}", self.field)
    }
}

/// The generator `x_i`.
pub fn x(field: FieldTag, i: u32) -> NcPoly {
    LinComb::basis(field, Word::new(vec![i]))
}

fn same_field(p: &NcPoly, q: &NcPoly) -> Result<()> {
    if p.field() != q.field() {
        return Err(Error::MixedFields(p.field(), q.field()));
    }
    Ok(())
}

pub fn poly_mul(p: &NcPoly, q: &NcPoly) -> Result<NcPoly> {
    same_field(p, q)?;
    Ok(FreeAlgebra::new(p.field()).mul(p, q))
}

/// `pq - qp`.
pub fn bracket(p: &NcPoly, q: &NcPoly) -> Result<NcPoly> {
    same_field(p, q)?;
    Ok(FreeAlgebra::new(p.field()).bracket(p, q))
}

/// `[a_1, ..., a_n] = [[a_1, ..., a_{n-1}], a_n]`.
pub fn left_normed(args: &[NcPoly]) -> Result<NcPoly> {
    if args.len() < 2 {
        return Err(Error::TooFewArguments(args.len()));
    }
    let mut acc = args[0].clone();
    for a in &args[1..] {
        acc = bracket(&acc, a)?;
    }
    Ok(acc)
}

/// `[x_from, x_{from+1}, ..., x_to]`.
pub fn generator_commutator(field: FieldTag, from: u32, to: u32) -> Result<NcPoly> {
    let args: Vec<NcPoly> = (from..=to).map(|i| x(field, i)).collect();
    left_normed(&args)
}

/// Image of `p` under the unital homomorphism sending `x_i` to `assignment[i]`
/// (and unassigned generators to zero).
pub fn evaluate<A: Algebra>(p: &NcPoly, assignment: &BTreeMap<u32, Elem<A>>, algebra: &A) -> Result<Elem<A>> {
    if p.field() != algebra.field() {
        return Err(Error::FieldMismatch { poly: p.field(), algebra: algebra.field() });
    }
    for v in assignment.values() {
        algebra.check(v)?;
    }
    let zero = algebra.zero();
    let mut out = algebra.zero();
    for (w, c) in p.terms() {
        let mut acc = algebra.one();
        for l in w.letters() {
            let img = assignment.get(l).unwrap_or(&zero);
            acc = algebra.mul(&acc, img);
            if acc.is_zero() {
                break;
            }
        }
        out.add_scaled(&acc, c);
    }
    Ok(out)
}

/// Whether every term is a permutation word of `x_1, ..., x_d`.
pub fn is_multilinear(p: &NcPoly, d: usize) -> bool {
    p.basis_elements().all(|w| {
        if w.len() != d {
            return false;
        }
        let mut seen = vec![false; d + 1];
        w.letters().iter().all(|&l| {
            let l = l as usize;
            l <= d && !std::mem::replace(&mut seen[l], true)
        })
    })
}

/// Convenience constructor from `(coefficient, letters)` pairs.
pub fn poly_from_words(field: FieldTag, terms: &[(i64, &[u32])]) -> NcPoly {
    let mut p = LinComb::zero(field);
    for (c, w) in terms {
        p.add_term(Word::new(w.to_vec()), &Scalar::from_i64(field, *c));
    }
    p
}
