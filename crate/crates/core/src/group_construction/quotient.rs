//! The quotient `F𝒢_r / I_r`, stored in reduced normal form.
//!
//! A basis element is `ȳ_A · d̄_Q` where `d_Q` runs over the reduced
//! `d`-monomials (those that survive [`IdealReducer::reduce`]). Every stored
//! element is fully reduced, so zero tests are structural.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex};

use serde::Serialize;

use super::ideal::IdealReducer;
use super::{crossings, from_dbasis, psi, DMonomial, DPoly, GroupAlgebraElement, GroupNF, Pair, TPoly, GF2};
use crate::coeff::{FieldTag, Scalar};
use crate::error::{Error, Result};
use crate::lincomb::LinComb;
use crate::tensor_product::{Algebra, Elem};

/// `ȳ_{gens} · d̄_{d}`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize)]
pub struct QBasis {
    pub gens: Vec<u32>,
    pub d: DMonomial,
}

impl QBasis {
    pub fn max_index(&self) -> u32 {
        self.gens.last().copied().unwrap_or(0).max(self.d.max_index())
    }
}

impl fmt::Debug for QBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.gens.iter().map(|i| format!("y{i}")).collect();
        if !self.d.is_empty() || parts.is_empty() {
            parts.push(format!("{:?}", self.d));
        }
        write!(f, "{}", parts.join("*"))
    }
}

/// `F𝒢_r / I_r` over GF(2), for `r` within the reducer's exact limit.
#[derive(Debug)]
pub struct QuotientAlgebra {
    r: u32,
    reducer: Arc<IdealReducer>,
    products: Mutex<HashMap<(QBasis, QBasis), Elem<QuotientAlgebra>>>,
}

impl Clone for QuotientAlgebra {
    fn clone(&self) -> Self {
        QuotientAlgebra { r: self.r, reducer: self.reducer.clone(), products: Mutex::new(HashMap::new()) }
    }
}

impl QuotientAlgebra {
    pub fn new(r: u32) -> Result<Self> {
        Self::with_reducer(r, IdealReducer::shared())
    }

    pub fn with_reducer(r: u32, reducer: Arc<IdealReducer>) -> Result<Self> {
        if r > reducer.exact_limit() {
            return Err(Error::UnsupportedParameters(format!(
                "quotient on {r} generators exceeds the exact membership limit {}",
                reducer.exact_limit()
            )));
        }
        Ok(QuotientAlgebra { r, reducer, products: Mutex::new(HashMap::new()) })
    }

    pub fn rank(&self) -> u32 {
        self.r
    }

    pub fn reducer(&self) -> &IdealReducer {
        &self.reducer
    }

    /// `ȳ_i`.
    pub fn ybar(&self, i: u32) -> Elem<Self> {
        self.basis_elem(QBasis { gens: vec![i], d: DMonomial::one() })
    }

    /// `y_A · p` with `p` reduced first.
    fn place(&self, gens: &[u32], p: &DPoly) -> Elem<Self> {
        let mut out = LinComb::zero(GF2);
        for (m, _) in self.reducer.reduce(p).terms() {
            out.add_term(QBasis { gens: gens.to_vec(), d: m.clone() }, &Scalar::one(GF2));
        }
        out
    }

    /// Image of a group-algebra element under `F𝒢_r → F𝒢_r / I_r`.
    pub fn from_group(&self, x: &GroupAlgebraElement) -> Result<Elem<Self>> {
        if x.field() != GF2 {
            return Err(Error::MixedFields(GF2, x.field()));
        }
        let mut out = self.zero();
        for (g, _) in x.terms() {
            if g.max_index() > self.r {
                return Err(Error::SupportExceeded { index: g.max_index(), bound: self.r });
            }
            let reduced = self.reducer.reduce_comms(g.comms());
            for (m, _) in reduced.terms() {
                out.add_term(QBasis { gens: g.gens().to_vec(), d: m.clone() }, &Scalar::one(GF2));
            }
        }
        Ok(out)
    }

    /// Image of a single group element.
    pub fn group_element(&self, g: &GroupNF) -> Result<Elem<Self>> {
        self.from_group(&LinComb::basis(GF2, g.clone()))
    }

    /// Re-reduces an element assembled from arbitrary basis labels.
    pub fn reduce(&self, x: &Elem<Self>) -> Elem<Self> {
        let mut by_gens: std::collections::BTreeMap<&[u32], DPoly> = Default::default();
        for (b, _) in x.terms() {
            by_gens.entry(&b.gens).or_insert_with(|| LinComb::zero(GF2)).add_term(b.d.clone(), &Scalar::one(GF2));
        }
        let mut out = self.zero();
        for (gens, p) in by_gens {
            out = self.add(&out, &self.place(gens, &p));
        }
        out
    }

    /// A representative in `F𝒢_r`.
    pub fn lift(&self, x: &Elem<Self>) -> GroupAlgebraElement {
        let mut out = LinComb::zero(GF2);
        for (b, _) in x.terms() {
            let y = GroupNF::new(b.gens.clone(), BTreeSet::new()).expect("stored gens are canonical");
            for (g, _) in from_dbasis(&LinComb::basis(GF2, b.d.clone())).terms() {
                out.add_term(super::group_mul(&y, g), &Scalar::one(GF2));
            }
        }
        out
    }

    /// Reduced `d`-monomials on `1..=r`: the monomials that occur in normal
    /// forms. Together with the `ȳ_A` they form a basis of the quotient.
    pub fn standard_dmonomials(&self) -> Vec<DMonomial> {
        let pairs = super::all_pairs(self.r);
        let mut seen = BTreeSet::new();
        for mask in 0u64..1 << pairs.len() {
            let m = DMonomial::from_pairs(pairs.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, p)| *p))
                .expect("distinct pairs");
            for (q, _) in self.reducer.reduce(&LinComb::basis(GF2, m)).terms() {
                seen.insert(q.clone());
            }
        }
        seen.into_iter().collect()
    }

    /// Basis `ȳ_A d̄_Q` of `F𝒢_r / I_r`, in canonical order.
    pub fn basis(&self) -> Vec<QBasis> {
        let ds = self.standard_dmonomials();
        let mut out = Vec::new();
        for gmask in 0u64..1 << self.r {
            let gens: Vec<u32> = (1..=self.r).filter(|i| gmask >> (i - 1) & 1 == 1).collect();
            out.extend(ds.iter().map(|d| QBasis { gens: gens.clone(), d: d.clone() }));
        }
        out.sort();
        out
    }

    /// `ψ` of the `F𝒢'`-component of `x` sitting over `ȳ_{gens}`.
    pub fn psi_component(&self, x: &Elem<Self>, gens: &[u32]) -> TPoly {
        let mut p = LinComb::zero(GF2);
        for (b, _) in x.terms().filter(|(b, _)| b.gens == gens) {
            p.add_term(b.d.clone(), &Scalar::one(GF2));
        }
        psi(&p)
    }
}

impl Algebra for QuotientAlgebra {
    type Basis = QBasis;

    fn field(&self) -> FieldTag {
        GF2
    }

    fn unit_basis(&self) -> QBasis {
        QBasis::default()
    }

    fn basis_mul(&self, a: &QBasis, b: &QBasis) -> Elem<Self> {
        let key = (a.clone(), b.clone());
        if let Some(v) = self.products.lock().expect("product cache").get(&key) {
            return v.clone();
        }
        // y_A d_a y_B d_b = y_{AΔB} · ∏_{crossings} c_p · d_a d_b
        let gens = super::sym_diff_sorted(&a.gens, &b.gens);
        let cross: BTreeSet<Pair> = crossings(&a.gens, &b.gens);
        let mut out = LinComb::zero(GF2);
        if let Some(m) = a.d.mul(&b.d) {
            let p = self.reducer.reduce_times_comms(&LinComb::basis(GF2, m), &cross);
            for (q, _) in p.terms() {
                out.add_term(QBasis { gens: gens.clone(), d: q.clone() }, &Scalar::one(GF2));
            }
        }
        self.products.lock().expect("product cache").insert(key, out.clone());
        out
    }

    fn contains(&self, b: &QBasis) -> bool {
        b.max_index() <= self.r
    }

    fn describe(&self) -> String {
        format!("GF(2)[G_{}]/I_{}", self.r, self.r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group_construction::{d, dpoly_mul, s_generator, GroupAlgebra};
    use crate::tensor_product::ZeroVerdict;

    #[test]
    fn generators_are_involutions() {
        let q = QuotientAlgebra::new(4).unwrap();
        for i in 1..=4 {
            assert_eq!(q.mul(&q.ybar(i), &q.ybar(i)), q.one());
        }
    }

    #[test]
    fn matches_group_algebra_then_reduce() {
        let q = QuotientAlgebra::new(4).unwrap();
        let g = GroupAlgebra::bounded(4);
        let a = g.add(&g.y(1), &g.group(GroupNF::c(2, 3)));
        let b = g.add(&g.y(2), &g.y(4));
        let lhs = q.mul(&q.from_group(&a).unwrap(), &q.from_group(&b).unwrap());
        let rhs = q.from_group(&g.mul(&a, &b)).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn ideal_generators_vanish() {
        let q = QuotientAlgebra::new(4).unwrap();
        assert!(q.from_group(&from_dbasis(&s_generator(1, 2, 3, 4))).unwrap().is_zero());
        assert!(q.from_group(&from_dbasis(&dpoly_mul(&d(1, 3), &d(2, 3)))).unwrap().is_zero());
        let x = q.from_group(&from_dbasis(&dpoly_mul(&d(1, 2), &d(3, 4)))).unwrap();
        assert_eq!(q.zero_verdict(&x), ZeroVerdict::NonZero);
    }

    #[test]
    fn lift_round_trip() {
        let q = QuotientAlgebra::new(3).unwrap();
        let x = q.bracket(&q.ybar(1), &q.ybar(2));
        let back = q.from_group(&q.lift(&x)).unwrap();
        assert_eq!(back, x);
        assert!(!x.is_zero());
    }

    #[test]
    fn basis_dimensions() {
        // F𝒢_2/I_2 = span{ȳ_A, ȳ_A d̄_12}
        assert_eq!(QuotientAlgebra::new(2).unwrap().basis().len(), 8);
        let q = QuotientAlgebra::new(4).unwrap();
        let ds = q.standard_dmonomials();
        assert!(ds.contains(&DMonomial::one()));
        assert!(!ds.iter().any(|m| q.reducer().contains(&LinComb::basis(GF2, m.clone()))));
    }

    #[test]
    fn rejects_large_rank() {
        assert!(matches!(QuotientAlgebra::new(DEFAULT_LIMIT_PLUS_ONE), Err(Error::UnsupportedParameters(_))));
    }

    const DEFAULT_LIMIT_PLUS_ONE: u32 = super::super::DEFAULT_EXACT_LIMIT + 1;
}
