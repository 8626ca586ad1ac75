//! Exact coefficient fields and the sparse vectors the linear solver works on.
//!
//! Three fields are supported: the rationals (arbitrary precision), GF(2) and
//! GF(3). Every algebra in the crate is built over one of these, and every
//! membership question is eventually answered by [`solve_in_span`].

mod solve;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

pub use solve::{solve_in_span, SpanBasis};

/// Which exact field a value lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldTag {
    Rational,
    Gf2,
    Gf3,
}

impl FieldTag {
    pub fn characteristic(self) -> u32 {
        match self {
            FieldTag::Rational => 0,
            FieldTag::Gf2 => 2,
            FieldTag::Gf3 => 3,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            FieldTag::Rational => "q",
            FieldTag::Gf2 => "gf2",
            FieldTag::Gf3 => "gf3",
        }
    }

    pub const ALL: [FieldTag; 3] = [FieldTag::Rational, FieldTag::Gf2, FieldTag::Gf3];
}

impl fmt::Display for FieldTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FieldTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "q" | "rational" | "0" => Ok(FieldTag::Rational),
            "gf2" | "2" => Ok(FieldTag::Gf2),
            "gf3" | "3" => Ok(FieldTag::Gf3),
            other => Err(Error::UnknownField(other.to_string())),
        }
    }
}

impl Serialize for FieldTag {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

/// An element of one of the supported fields, always in canonical form.
///
/// Rationals are kept reduced with a positive denominator; residues are kept
/// in `0..p`. Structural equality is therefore field equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Gf2(u8),
    Gf3(u8),
}

impl Scalar {
    pub fn zero(field: FieldTag) -> Self {
        Scalar::from_i64(field, 0)
    }

    pub fn one(field: FieldTag) -> Self {
        Scalar::from_i64(field, 1)
    }

    pub fn from_i64(field: FieldTag, v: i64) -> Self {
        match field {
            FieldTag::Rational => Scalar::Rational(BigRational::from_integer(BigInt::from(v))),
            FieldTag::Gf2 => Scalar::Gf2(v.rem_euclid(2) as u8),
            FieldTag::Gf3 => Scalar::Gf3(v.rem_euclid(3) as u8),
        }
    }

    pub fn from_bigint(field: FieldTag, v: &BigInt) -> Self {
        match field {
            FieldTag::Rational => Scalar::Rational(BigRational::from_integer(v.clone())),
            FieldTag::Gf2 => {
                let r = v.mod_floor(&BigInt::from(2));
                Scalar::Gf2(r.to_u8().unwrap_or(0))
            }
            FieldTag::Gf3 => {
                let r = v.mod_floor(&BigInt::from(3));
                Scalar::Gf3(r.to_u8().unwrap_or(0))
            }
        }
    }

    /// A rational `num/den`; `den` must be nonzero.
    pub fn rational(num: i64, den: i64) -> Result<Self> {
        if den == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(Scalar::Rational(BigRational::new(num.into(), den.into())))
    }

    pub fn field(&self) -> FieldTag {
        match self {
            Scalar::Rational(_) => FieldTag::Rational,
            Scalar::Gf2(_) => FieldTag::Gf2,
            Scalar::Gf3(_) => FieldTag::Gf3,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Gf2(v) | Scalar::Gf3(v) => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Gf2(v) | Scalar::Gf3(v) => *v == 1,
        }
    }

    pub fn try_add(&self, other: &Scalar) -> Result<Scalar> {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Ok(Scalar::Rational(a + b)),
            (Scalar::Gf2(a), Scalar::Gf2(b)) => Ok(Scalar::Gf2((a + b) % 2)),
            (Scalar::Gf3(a), Scalar::Gf3(b)) => Ok(Scalar::Gf3((a + b) % 3)),
            _ => Err(Error::MixedFields(self.field(), other.field())),
        }
    }

    pub fn try_sub(&self, other: &Scalar) -> Result<Scalar> {
        self.try_add(&other.neg())
    }

    pub fn try_mul(&self, other: &Scalar) -> Result<Scalar> {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Ok(Scalar::Rational(a * b)),
            (Scalar::Gf2(a), Scalar::Gf2(b)) => Ok(Scalar::Gf2((a * b) % 2)),
            (Scalar::Gf3(a), Scalar::Gf3(b)) => Ok(Scalar::Gf3((a * b) % 3)),
            _ => Err(Error::MixedFields(self.field(), other.field())),
        }
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Gf2(a) => Scalar::Gf2(*a),
            Scalar::Gf3(a) => Scalar::Gf3((3 - a) % 3),
        }
    }

    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match self {
            Scalar::Rational(a) => Scalar::Rational(a.recip()),
            Scalar::Gf2(a) => Scalar::Gf2(*a),
            // 1 and 2 are their own inverses mod 3.
            Scalar::Gf3(a) => Scalar::Gf3(*a),
        })
    }

    /// Whether the value reads as negative; always false in positive characteristic.
    pub fn is_negative(&self) -> bool {
        matches!(self, Scalar::Rational(q) if q.is_negative())
    }

    /// `self` as a rational, if it is an integer (in characteristic 0) or a residue.
    pub fn to_bigint(&self) -> Option<BigInt> {
        match self {
            Scalar::Rational(q) if q.is_integer() => Some(q.to_integer()),
            Scalar::Rational(_) => None,
            Scalar::Gf2(v) | Scalar::Gf3(v) => Some(BigInt::from(*v)),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) if q.is_integer() => write!(f, "{}", q.numer()),
            Scalar::Rational(q) => write!(f, "{}/{}", q.numer(), q.denom()),
            Scalar::Gf2(v) | Scalar::Gf3(v) => write!(f, "{v}"),
        }
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

// Operator forms panic on mixed fields; they are for code that has already
// checked its inputs live in one field.
impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.try_add(rhs).expect("scalar fields must match")
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self.try_sub(rhs).expect("scalar fields must match")
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.try_mul(rhs).expect("scalar fields must match")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::neg(self)
    }
}

/// Sparse coordinate vector: basis index to nonzero scalar.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SparseVector {
    field: FieldTag,
    coords: BTreeMap<usize, Scalar>,
}

impl SparseVector {
    pub fn zero(field: FieldTag) -> Self {
        SparseVector { field, coords: BTreeMap::new() }
    }

    /// Builds a vector from `(index, value)` pairs, summing repeats and dropping zeros.
    pub fn from_pairs<I>(field: FieldTag, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, Scalar)>,
    {
        let mut v = SparseVector::zero(field);
        for (i, c) in pairs {
            v.add_at(i, &c)?;
        }
        Ok(v)
    }

    /// Builds a vector from small integer entries, coerced into `field`.
    pub fn from_ints<I>(field: FieldTag, pairs: I) -> Self
    where
        I: IntoIterator<Item = (usize, i64)>,
    {
        let mut v = SparseVector::zero(field);
        for (i, c) in pairs {
            v.add_at(i, &Scalar::from_i64(field, c)).expect("coerced into the vector's field");
        }
        v
    }

    pub fn unit(field: FieldTag, index: usize) -> Self {
        SparseVector::from_ints(field, [(index, 1)])
    }

    pub fn field(&self) -> FieldTag {
        self.field
    }

    pub fn add_at(&mut self, index: usize, c: &Scalar) -> Result<()> {
        if c.field() != self.field {
            return Err(Error::MixedFields(self.field, c.field()));
        }
        if c.is_zero() {
            return Ok(());
        }
        match self.coords.get_mut(&index) {
            Some(existing) => {
                let sum = &*existing + c;
                if sum.is_zero() {
                    self.coords.remove(&index);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.coords.insert(index, c.clone());
            }
        }
        Ok(())
    }

    pub fn get(&self, index: usize) -> Option<&Scalar> {
        self.coords.get(&index)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Scalar)> {
        self.coords.iter().map(|(i, c)| (*i, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.coords.len()
    }

    pub fn max_index(&self) -> Option<usize> {
        self.coords.keys().next_back().copied()
    }

    pub fn leading(&self) -> Option<(usize, &Scalar)> {
        self.coords.iter().next().map(|(i, c)| (*i, c))
    }

    pub fn scaled(&self, c: &Scalar) -> Result<SparseVector> {
        let mut out = SparseVector::zero(self.field);
        for (i, v) in self.iter() {
            out.add_at(i, &v.try_mul(c)?)?;
        }
        Ok(out)
    }

    pub fn try_add(&self, other: &SparseVector) -> Result<SparseVector> {
        if self.field != other.field {
            return Err(Error::MixedFields(self.field, other.field));
        }
        let mut out = self.clone();
        for (i, c) in other.iter() {
            out.add_at(i, c)?;
        }
        Ok(out)
    }
}
