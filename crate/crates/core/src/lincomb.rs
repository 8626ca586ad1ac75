//! Finite linear combinations of basis elements with exact coefficients.
//!
//! Every algebra element in the crate is a `LinComb` over that algebra's
//! canonical basis. Terms are kept in the basis type's `Ord` order with no
//! zero coefficients, so structural equality is equality of elements.

use std::collections::BTreeMap;
use std::fmt;

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::coeff::{FieldTag, Scalar};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinComb<B: Ord> {
    field: FieldTag,
    terms: BTreeMap<B, Scalar>,
}

impl<B: Ord + Clone> LinComb<B> {
    pub fn zero(field: FieldTag) -> Self {
        LinComb { field, terms: BTreeMap::new() }
    }

    pub fn basis(field: FieldTag, b: B) -> Self {
        LinComb::monomial(field, b, Scalar::one(field))
    }

    pub fn monomial(field: FieldTag, b: B, c: Scalar) -> Self {
        let mut out = LinComb::zero(field);
        out.add_term(b, &c);
        out
    }

    /// Collects `(basis, coefficient)` pairs, summing repeats.
    pub fn from_terms<I: IntoIterator<Item = (B, Scalar)>>(field: FieldTag, terms: I) -> Result<Self> {
        let mut out = LinComb::zero(field);
        for (b, c) in terms {
            if c.field() != field {
                return Err(Error::MixedFields(field, c.field()));
            }
            out.add_term(b, &c);
        }
        Ok(out)
    }

    pub fn field(&self) -> FieldTag {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&B, &Scalar)> {
        self.terms.iter()
    }

    pub fn basis_elements(&self) -> impl Iterator<Item = &B> {
        self.terms.keys()
    }

    pub fn coeff(&self, b: &B) -> Option<&Scalar> {
        self.terms.get(b)
    }

    /// Adds `c * b` in place. `c` must be in this combination's field.
    pub fn add_term(&mut self, b: B, c: &Scalar) {
        debug_assert_eq!(c.field(), self.field);
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&b) {
            Some(existing) => {
                let sum = &*existing + c;
                if sum.is_zero() {
                    self.terms.remove(&b);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(b, c.clone());
            }
        }
    }

    /// Adds `c * other` in place.
    pub fn add_scaled(&mut self, other: &LinComb<B>, c: &Scalar) {
        debug_assert_eq!(other.field, self.field);
        for (b, v) in &other.terms {
            self.add_term(b.clone(), &(v * c));
        }
    }

    fn check_field(&self, other: &Self) -> Result<()> {
        if self.field != other.field {
            return Err(Error::MixedFields(self.field, other.field));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_field(other)?;
        let mut out = self.clone();
        out.add_scaled(other, &Scalar::one(self.field));
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_field(other)?;
        let mut out = self.clone();
        out.add_scaled(other, &Scalar::from_i64(self.field, -1));
        Ok(out)
    }

    pub fn scale(&self, c: &Scalar) -> Result<Self> {
        if c.field() != self.field {
            return Err(Error::MixedFields(self.field, c.field()));
        }
        let mut out = LinComb::zero(self.field);
        out.add_scaled(self, c);
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        let mut out = LinComb::zero(self.field);
        out.add_scaled(self, &Scalar::from_i64(self.field, -1));
        out
    }

    /// Applies a linear map given on basis elements.
    pub fn map_linear<C: Ord + Clone>(&self, field: FieldTag, f: impl Fn(&B) -> LinComb<C>) -> LinComb<C> {
        let mut out = LinComb::zero(field);
        for (b, c) in &self.terms {
            out.add_scaled(&f(b), c);
        }
        out
    }
}

impl<B: Ord + fmt::Debug> fmt::Debug for LinComb<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (b, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}*{b:?}")?;
        }
        Ok(())
    }
}

#[derive(Serialize)]
struct TermRef<'a, B> {
    monomial: &'a B,
    coeff: &'a Scalar,
}

struct Terms<'a, B: Ord>(&'a BTreeMap<B, Scalar>);

impl<B: Ord + Serialize> Serialize for Terms<'_, B> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.0.len()))?;
        for (monomial, coeff) in self.0 {
            seq.serialize_element(&TermRef { monomial, coeff })?;
        }
        seq.end()
    }
}

/// Serializes as `{"terms":[{"monomial":..,"coeff":".."}, ..]}` in canonical order.
impl<B: Ord + Serialize> Serialize for LinComb<B> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Wrapper<'a, B: Ord + Serialize> {
            terms: Terms<'a, B>,
        }
        Wrapper { terms: Terms(&self.terms) }.serialize(s)
    }
}
