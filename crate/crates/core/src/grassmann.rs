//! The unital Grassmann algebra `E` on anticommuting generators `e_1, e_2, ...`
//! and its finitely generated subalgebras `E_r`.

use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::coeff::{FieldTag, Scalar};
use crate::error::{Error, Result};
use crate::lincomb::LinComb;
use crate::tensor_product::{Algebra, Elem};

/// `e_{i_1} ... e_{i_k}` with `i_1 < ... < i_k`; the empty product is the unit.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GMonomial(Vec<u32>);

impl GMonomial {
    pub fn new(indices: Vec<u32>) -> Result<Self> {
        if indices.first() == Some(&0) || indices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::ShapeViolation(format!(
                "Grassmann monomial indices must be positive and strictly increasing: {indices:?}"
            )));
        }
        Ok(GMonomial(indices))
    }

    pub fn unit() -> Self {
        GMonomial(Vec::new())
    }

    pub fn generator(i: u32) -> Self {
        assert!(i > 0, "generators are 1-based");
        GMonomial(vec![i])
    }

    /// `e_1 e_2 ... e_n`.
    pub fn initial(n: u32) -> Self {
        GMonomial((1..=n).collect())
    }

    pub fn indices(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn max_index(&self) -> u32 {
        self.0.last().copied().unwrap_or(0)
    }
}

impl Ord for GMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for GMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for GMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.0.iter().map(|i| format!("e{i}")).collect();
        write!(f, "{}", parts.join("*"))
    }
}

impl Serialize for GMonomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

/// Product of two basis monomials: `None` when they share an index, otherwise
/// the merged monomial with sign `(-1)^{#{(i, j) : i in a, j in b, i > j}}`.
pub fn g_monomial_mul(a: &GMonomial, b: &GMonomial) -> Option<(i8, GMonomial)> {
    let (x, y) = (&a.0, &b.0);
    let mut merged = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    let mut inversions = 0usize;
    while i < x.len() && j < y.len() {
        match x[i].cmp(&y[j]) {
            Ordering::Less => {
                merged.push(x[i]);
                i += 1;
            }
            Ordering::Greater => {
                // y[j] moves left past every remaining element of x.
                inversions += x.len() - i;
                merged.push(y[j]);
                j += 1;
            }
            Ordering::Equal => return None,
        }
    }
    merged.extend_from_slice(&x[i..]);
    merged.extend_from_slice(&y[j..]);
    let sign = if inversions.is_multiple_of(2) { 1 } else { -1 };
    Some((sign, GMonomial(merged)))
}

pub type GrassmannElement = LinComb<GMonomial>;

/// `E` (unbounded) or the subalgebra generated by `e_1, ..., e_r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrassmannAlgebra {
    field: FieldTag,
    generators: Option<u32>,
}

impl GrassmannAlgebra {
    /// `E_r`. `r = 0` gives the ground field.
    pub fn new(field: FieldTag, r: u32) -> Result<Self> {
        Self::build(field, Some(r))
    }

    pub fn unbounded(field: FieldTag) -> Result<Self> {
        Self::build(field, None)
    }

    fn build(field: FieldTag, generators: Option<u32>) -> Result<Self> {
        if field.characteristic() == 2 {
            return Err(Error::CharacteristicTwo);
        }
        Ok(GrassmannAlgebra { field, generators })
    }

    pub fn generators(&self) -> Option<u32> {
        self.generators
    }

    pub fn e(&self, i: u32) -> GrassmannElement {
        self.basis_elem(GMonomial::generator(i))
    }

    /// All `2^r` basis monomials in canonical order. Panics on the unbounded algebra.
    pub fn basis(&self) -> Vec<GMonomial> {
        let r = self.generators.expect("basis of a finitely generated Grassmann algebra");
        let mut out: Vec<GMonomial> = (0u64..1 << r)
            .map(|mask| GMonomial((1..=r).filter(|i| mask >> (i - 1) & 1 == 1).collect()))
            .collect();
        out.sort();
        out
    }
}

impl Algebra for GrassmannAlgebra {
    type Basis = GMonomial;

    fn field(&self) -> FieldTag {
        self.field
    }

    fn unit_basis(&self) -> GMonomial {
        GMonomial::unit()
    }

    fn basis_mul(&self, a: &GMonomial, b: &GMonomial) -> GrassmannElement {
        match g_monomial_mul(a, b) {
            None => self.zero(),
            Some((s, m)) => LinComb::monomial(self.field, m, Scalar::from_i64(self.field, s as i64)),
        }
    }

    fn contains(&self, b: &GMonomial) -> bool {
        self.generators.is_none_or(|r| b.max_index() <= r)
    }

    fn describe(&self) -> String {
        match self.generators {
            Some(r) => format!("E_{r} over {}", self.field),
            None => format!("E over {}", self.field),
        }
    }
}

/// Convenience: the element `c * e_{i_1} ... e_{i_k}` (indices in any order,
/// reordered with the matching sign).
pub fn grassmann_word(alg: &GrassmannAlgebra, indices: &[u32]) -> Elem<GrassmannAlgebra> {
    indices.iter().fold(alg.one(), |acc, &i| alg.mul(&acc, &alg.e(i)))
}
