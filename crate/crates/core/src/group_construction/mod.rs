//! The characteristic-2 construction.
//!
//! `𝒢` is the group generated by involutions `y_1, y_2, ...` in which every
//! commutator `c_ij = (y_i, y_j)` is central. Elements have the normal form
//! `y_{i_1} ... y_{i_q} · c_{j_1 j_2} ... c_{j_{2q'-1} j_{2q'}}` (see [`GroupNF`]).
//! The group algebra `F𝒢` is taken over GF(2). Its derived part `F𝒢'` is
//! handled in the basis of squarefree monomials in `d_ij = c_ij + 1`
//! ([`DPoly`]). The ideal `I` is generated by
//! `d_{i1 i2} d_{i3 i4} + d_{i1 i3} d_{i2 i4}`. Exact membership in `I` lives
//! in [`ideal`], and the quotient algebras `F𝒢/I`, `F𝒢_r/I_r` in
//! [`quotient`].

pub mod ideal;
pub mod quotient;

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::coeff::{FieldTag, Scalar};
use crate::error::{Error, Result};
use crate::lincomb::LinComb;
use crate::tensor_product::Algebra;

pub use ideal::{ideal_member, quotient_is_zero, IdealReducer, IdealVerdict, DEFAULT_EXACT_LIMIT};
pub use quotient::{QBasis, QuotientAlgebra};

const GF2: FieldTag = FieldTag::Gf2;

/// Unordered pair `{lo, hi}` with `lo < hi`, ordered lexicographically.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Pair {
    lo: u32,
    hi: u32,
}

impl Pair {
    /// `None` on the diagonal, where `c_ii = 1` and `d_ii = 0`.
    pub fn new(i: u32, j: u32) -> Option<Pair> {
        match i.cmp(&j) {
            Ordering::Less => Some(Pair { lo: i, hi: j }),
            Ordering::Greater => Some(Pair { lo: j, hi: i }),
            Ordering::Equal => None,
        }
    }

    pub fn lo(self) -> u32 {
        self.lo
    }

    pub fn hi(self) -> u32 {
        self.hi
    }

    pub fn shares_index(self, other: Pair) -> bool {
        self.lo == other.lo || self.lo == other.hi || self.hi == other.lo || self.hi == other.hi
    }
}

impl fmt::Debug for Pair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.lo, self.hi)
    }
}

impl Serialize for Pair {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.lo, self.hi].serialize(s)
    }
}

fn toggle(set: &mut BTreeSet<Pair>, p: Pair) {
    if !set.remove(&p) {
        set.insert(p);
    }
}

fn sym_diff_sorted(a: &[u32], b: &[u32]) -> Vec<u32> {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::with_capacity(a.len() + b.len());
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

/// Central commutator factors picked up when `y_A · y_B` is collected:
/// one `c_uv` for each `u ∈ A`, `v ∈ B` with `u > v`, counted mod 2.
pub(crate) fn crossings(a: &[u32], b: &[u32]) -> BTreeSet<Pair> {
    let mut out = BTreeSet::new();
    for &v in b {
        for &u in a.iter().rev().take_while(|&&u| u > v) {
            toggle(&mut out, Pair::new(u, v).expect("u > v"));
        }
    }
    out
}

/// Normal form `y_{gens} · ∏ c_{comms}` of an element of `𝒢`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize)]
pub struct GroupNF {
    gens: Vec<u32>,
    comms: BTreeSet<Pair>,
}

impl GroupNF {
    pub fn new(gens: Vec<u32>, comms: BTreeSet<Pair>) -> Result<Self> {
        if gens.first() == Some(&0) || gens.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::ShapeViolation(format!("group generators must be strictly increasing: {gens:?}")));
        }
        if comms.iter().any(|p| p.lo == 0) {
            return Err(Error::ShapeViolation("group generators are 1-based".into()));
        }
        Ok(GroupNF { gens, comms })
    }

    pub fn identity() -> Self {
        GroupNF::default()
    }

    pub fn y(i: u32) -> Self {
        assert!(i > 0, "generators are 1-based");
        GroupNF { gens: vec![i], comms: BTreeSet::new() }
    }

    /// `c_ij = (y_i, y_j)`; the identity when `i = j`.
    pub fn c(i: u32, j: u32) -> Self {
        GroupNF { gens: Vec::new(), comms: Pair::new(i, j).into_iter().collect() }
    }

    pub fn gens(&self) -> &[u32] {
        &self.gens
    }

    pub fn comms(&self) -> &BTreeSet<Pair> {
        &self.comms
    }

    pub fn is_identity(&self) -> bool {
        self.gens.is_empty() && self.comms.is_empty()
    }

    pub fn max_index(&self) -> u32 {
        let g = self.gens.last().copied().unwrap_or(0);
        let c = self.comms.iter().map(|p| p.hi).max().unwrap_or(0);
        g.max(c)
    }
}

impl fmt::Debug for GroupNF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "1");
        }
        let mut parts: Vec<String> = self.gens.iter().map(|i| format!("y{i}")).collect();
        parts.extend(self.comms.iter().map(|p| format!("c{p:?}")));
        write!(f, "{}", parts.join("*"))
    }
}

pub fn group_mul(a: &GroupNF, b: &GroupNF) -> GroupNF {
    let gens = sym_diff_sorted(&a.gens, &b.gens);
    let mut comms: BTreeSet<Pair> = a.comms.symmetric_difference(&b.comms).copied().collect();
    for p in crossings(&a.gens, &b.gens) {
        toggle(&mut comms, p);
    }
    GroupNF { gens, comms }
}

pub fn group_inv(a: &GroupNF) -> GroupNF {
    let mut comms = a.comms.clone();
    for (k, &u) in a.gens.iter().enumerate() {
        for &v in &a.gens[k + 1..] {
            toggle(&mut comms, Pair::new(u, v).expect("strictly increasing"));
        }
    }
    GroupNF { gens: a.gens.clone(), comms }
}

/// `(a, b) = a^{-1} b^{-1} a b`, via bilinearity: `∏ c_uv` over `u ∈ a`, `v ∈ b`.
pub fn group_comm(a: &GroupNF, b: &GroupNF) -> GroupNF {
    let mut comms = BTreeSet::new();
    for &u in &a.gens {
        for &v in &b.gens {
            if let Some(p) = Pair::new(u, v) {
                toggle(&mut comms, p);
            }
        }
    }
    GroupNF { gens: Vec::new(), comms }
}

/// Element of `F𝒢` over GF(2): a set of group elements.
pub type GroupAlgebraElement = LinComb<GroupNF>;

/// The group algebra `F𝒢` (or `F𝒢_r` when bounded) over GF(2), unreduced.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GroupAlgebra {
    support: Option<u32>,
}

impl GroupAlgebra {
    pub fn unbounded() -> Self {
        GroupAlgebra { support: None }
    }

    pub fn bounded(r: u32) -> Self {
        GroupAlgebra { support: Some(r) }
    }

    pub fn y(&self, i: u32) -> GroupAlgebraElement {
        LinComb::basis(GF2, GroupNF::y(i))
    }

    pub fn group(&self, g: GroupNF) -> GroupAlgebraElement {
        LinComb::basis(GF2, g)
    }

    /// Every element of `𝒢_r`, in canonical order. Size `2^r · 2^{r(r-1)/2}`.
    pub fn group_elements(r: u32) -> Vec<GroupNF> {
        let pairs: Vec<Pair> = all_pairs(r);
        let mut out = Vec::new();
        for gmask in 0u64..1 << r {
            let gens: Vec<u32> = (1..=r).filter(|i| gmask >> (i - 1) & 1 == 1).collect();
            for cmask in 0u64..1 << pairs.len() {
                let comms = pairs.iter().enumerate().filter(|(k, _)| cmask >> k & 1 == 1).map(|(_, p)| *p).collect();
                out.push(GroupNF { gens: gens.clone(), comms });
            }
        }
        out.sort();
        out
    }
}

pub(crate) fn all_pairs(r: u32) -> Vec<Pair> {
    (1..=r).flat_map(|i| (i + 1..=r).map(move |j| Pair { lo: i, hi: j })).collect()
}

impl Algebra for GroupAlgebra {
    type Basis = GroupNF;

    fn field(&self) -> FieldTag {
        GF2
    }

    fn unit_basis(&self) -> GroupNF {
        GroupNF::identity()
    }

    fn basis_mul(&self, a: &GroupNF, b: &GroupNF) -> GroupAlgebraElement {
        LinComb::basis(GF2, group_mul(a, b))
    }

    fn contains(&self, b: &GroupNF) -> bool {
        self.support.is_none_or(|r| b.max_index() <= r)
    }

    fn describe(&self) -> String {
        match self.support {
            Some(r) => format!("GF(2)[G_{r}]"),
            None => "GF(2)[G]".to_string(),
        }
    }
}

pub fn ga_mul(x: &GroupAlgebraElement, y: &GroupAlgebraElement) -> GroupAlgebraElement {
    GroupAlgebra::unbounded().mul(x, y)
}

/// Squarefree monomial `∏ d_p` in the commuting variables `d_ij`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct DMonomial(BTreeSet<Pair>);

impl DMonomial {
    pub fn one() -> Self {
        DMonomial::default()
    }

    pub fn from_pairs<I: IntoIterator<Item = Pair>>(pairs: I) -> Option<Self> {
        let mut set = BTreeSet::new();
        for p in pairs {
            if !set.insert(p) {
                return None;
            }
        }
        Some(DMonomial(set))
    }

    /// `d_ij`, or `None` for the diagonal (`d_ii = 0`).
    pub fn d(i: u32, j: u32) -> Option<Self> {
        Pair::new(i, j).map(|p| DMonomial([p].into_iter().collect()))
    }

    pub fn pairs(&self) -> &BTreeSet<Pair> {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Product with another monomial; `None` if a pair repeats (`d^2 = 0`).
    pub fn mul(&self, other: &DMonomial) -> Option<DMonomial> {
        let (small, large) = if self.0.len() <= other.0.len() { (self, other) } else { (other, self) };
        let mut out = large.0.clone();
        for p in &small.0 {
            if !out.insert(*p) {
                return None;
            }
        }
        Some(DMonomial(out))
    }

    pub fn max_index(&self) -> u32 {
        self.0.iter().map(|p| p.hi).max().unwrap_or(0)
    }

    /// Vertex degrees of the monomial viewed as a graph, sorted by vertex.
    pub fn multidegree(&self) -> Vec<(u32, u8)> {
        let mut deg: std::collections::BTreeMap<u32, u8> = Default::default();
        for p in &self.0 {
            *deg.entry(p.lo).or_default() += 1;
            *deg.entry(p.hi).or_default() += 1;
        }
        deg.into_iter().collect()
    }
}

impl Ord for DMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.iter().cmp(other.0.iter()))
    }
}

impl PartialOrd for DMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for DMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.0.iter().map(|p| format!("d{p:?}")).collect();
        write!(f, "{}", parts.join("*"))
    }
}

impl Serialize for DMonomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.0.iter())
    }
}

/// Element of `F𝒢'` in the `d`-basis.
pub type DPoly = LinComb<DMonomial>;

pub fn d(i: u32, j: u32) -> DPoly {
    match DMonomial::d(i, j) {
        Some(m) => LinComb::basis(GF2, m),
        None => LinComb::zero(GF2),
    }
}

pub fn dpoly_mul(x: &DPoly, y: &DPoly) -> DPoly {
    let mut out = LinComb::zero(GF2);
    for (a, _) in x.terms() {
        for (b, _) in y.terms() {
            if let Some(m) = a.mul(b) {
                out.add_term(m, &Scalar::one(GF2));
            }
        }
    }
    out
}

/// The element `d_{i1 i2} d_{i3 i4} + d_{i1 i3} d_{i2 i4}` of `S`.
pub fn s_generator(i1: u32, i2: u32, i3: u32, i4: u32) -> DPoly {
    let t1 = dpoly_mul(&d(i1, i2), &d(i3, i4));
    let t2 = dpoly_mul(&d(i1, i3), &d(i2, i4));
    t1.try_add(&t2).expect("both over GF(2)")
}

/// `c_P = ∏ (d_p + 1)`, expanded over all subsets of `P`.
fn expand_comms(comms: &BTreeSet<Pair>) -> DPoly {
    let pairs: Vec<Pair> = comms.iter().copied().collect();
    let mut out = LinComb::zero(GF2);
    for mask in 0u64..1 << pairs.len() {
        let m = DMonomial(pairs.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, p)| *p).collect());
        out.add_term(m, &Scalar::one(GF2));
    }
    out
}

/// Rewrites an element of `F𝒢'` in the `d`-basis.
pub fn to_dbasis(x: &GroupAlgebraElement) -> Result<DPoly> {
    let mut out = LinComb::zero(GF2);
    for (g, _) in x.terms() {
        if !g.gens.is_empty() {
            return Err(Error::NotInDerivedSubalgebra);
        }
        out.add_scaled(&expand_comms(&g.comms), &Scalar::one(GF2));
    }
    Ok(out)
}

/// Inverse change of basis: `d_Q = ∏ (c_q + 1)` back to group elements.
pub fn from_dbasis(p: &DPoly) -> GroupAlgebraElement {
    let mut out = LinComb::zero(GF2);
    for (m, _) in p.terms() {
        for (q, _) in expand_comms(&m.0).terms() {
            out.add_term(GroupNF { gens: Vec::new(), comms: q.0.clone() }, &Scalar::one(GF2));
        }
    }
    out
}

/// Squarefree monomial in commuting `t_i`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct TMonomial(Vec<u32>);

impl TMonomial {
    pub fn new(mut indices: Vec<u32>) -> Option<Self> {
        indices.sort_unstable();
        if indices.windows(2).any(|w| w[0] == w[1]) {
            return None;
        }
        Some(TMonomial(indices))
    }

    pub fn indices(&self) -> &[u32] {
        &self.0
    }
}

impl Ord for TMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for TMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for TMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.0.iter().map(|i| format!("t{i}")).collect();
        write!(f, "{}", parts.join("*"))
    }
}

impl Serialize for TMonomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

/// Element of `GF(2)[t_1, t_2, ...] / (t_i^2)`.
pub type TPoly = LinComb<TMonomial>;

fn tpoly_mul(x: &TPoly, y: &TPoly) -> TPoly {
    let mut out = LinComb::zero(GF2);
    for (a, _) in x.terms() {
        for (b, _) in y.terms() {
            let mut v = a.0.clone();
            v.extend_from_slice(&b.0);
            if let Some(m) = TMonomial::new(v) {
                out.add_term(m, &Scalar::one(GF2));
            }
        }
    }
    out
}

/// `ψ(d_ij) = t_i t_j` modulo `t^2`.
pub fn psi(x: &DPoly) -> TPoly {
    let mut out = LinComb::zero(GF2);
    for (m, _) in x.terms() {
        let v: Vec<u32> = m.0.iter().flat_map(|p| [p.lo, p.hi]).collect();
        if let Some(t) = TMonomial::new(v) {
            out.add_term(t, &Scalar::one(GF2));
        }
    }
    out
}

/// `ψ(c_P) = ∏ (t_i t_j + 1)`, computed multiplicatively so large `P` stays cheap.
pub(crate) fn psi_of_comms(comms: &BTreeSet<Pair>) -> TPoly {
    let one = LinComb::basis(GF2, TMonomial::default());
    comms.iter().fold(one.clone(), |acc, p| {
        let factor = one.try_add(&LinComb::basis(GF2, TMonomial(vec![p.lo, p.hi]))).expect("GF(2)");
        tpoly_mul(&acc, &factor)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nf(gens: &[u32], comms: &[(u32, u32)]) -> GroupNF {
        GroupNF::new(gens.to_vec(), comms.iter().map(|&(i, j)| Pair::new(i, j).unwrap()).collect()).unwrap()
    }

    #[test]
    fn collection_examples() {
        assert_eq!(group_mul(&GroupNF::y(2), &GroupNF::y(1)), nf(&[1, 2], &[(1, 2)]));
        assert_eq!(group_mul(&GroupNF::y(1), &GroupNF::y(1)), GroupNF::identity());
        let a = nf(&[1, 2], &[]);
        assert_eq!(group_mul(&a, &a), nf(&[], &[(1, 2)]));
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(group_inv(&GroupNF::y(1)), GroupNF::y(1));
        assert_eq!(group_inv(&GroupNF::identity()), GroupNF::identity());
        let a = nf(&[1, 2], &[]);
        assert_eq!(group_inv(&a), nf(&[1, 2], &[(1, 2)]));
        assert!(group_mul(&a, &group_inv(&a)).is_identity());
    }

    #[test]
    fn commutator_examples() {
        assert_eq!(group_comm(&GroupNF::y(1), &GroupNF::y(2)), nf(&[], &[(1, 2)]));
        let a = nf(&[1, 3], &[(2, 4)]);
        assert!(group_comm(&a, &a).is_identity());
        // (y1y2, y2y3): pairs 12, 13, 22(diag), 23
        let got = group_comm(&nf(&[1, 2], &[]), &nf(&[2, 3], &[]));
        assert_eq!(got, nf(&[], &[(1, 2), (1, 3), (2, 3)]));
        let direct = group_mul(
            &group_mul(&group_inv(&nf(&[1, 2], &[])), &group_inv(&nf(&[2, 3], &[]))),
            &group_mul(&nf(&[1, 2], &[]), &nf(&[2, 3], &[])),
        );
        assert_eq!(got, direct);
    }

    #[test]
    fn group_algebra_examples() {
        let g = GroupAlgebra::unbounded();
        let one_plus_y1 = g.add(&g.one(), &g.y(1));
        assert!(ga_mul(&one_plus_y1, &one_plus_y1).is_zero());
        assert_eq!(ga_mul(&one_plus_y1, &g.one()), one_plus_y1);
        // [y_i, y_j] = y_i y_j ((y_i, y_j) + 1)
        let lhs = g.bracket(&g.y(1), &g.y(3));
        let cp1 = g.add(&g.group(GroupNF::c(1, 3)), &g.one());
        let rhs = ga_mul(&ga_mul(&g.y(1), &g.y(3)), &cp1);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn dbasis_examples() {
        let g = GroupAlgebra::unbounded();
        let c12 = g.group(GroupNF::c(1, 2));
        assert_eq!(to_dbasis(&c12).unwrap(), d(1, 2).try_add(&LinComb::basis(GF2, DMonomial::one())).unwrap());
        assert_eq!(to_dbasis(&g.one()).unwrap(), LinComb::basis(GF2, DMonomial::one()));
        let c12c34 = g.group(nf(&[], &[(1, 2), (3, 4)]));
        let got = to_dbasis(&c12c34).unwrap();
        assert_eq!(got.len(), 4);
        assert!(matches!(to_dbasis(&g.y(1)), Err(Error::NotInDerivedSubalgebra)));
        assert_eq!(from_dbasis(&got), c12c34);
    }

    #[test]
    fn dpoly_products() {
        assert!(dpoly_mul(&d(1, 2), &d(1, 2)).is_zero());
        assert_eq!(dpoly_mul(&d(1, 2), &d(3, 4)).len(), 1);
        let lhs = dpoly_mul(&d(1, 2).try_add(&d(1, 3)).unwrap(), &d(2, 3));
        let rhs = dpoly_mul(&d(1, 2), &d(2, 3)).try_add(&dpoly_mul(&d(1, 3), &d(2, 3))).unwrap();
        assert_eq!(lhs, rhs);
        assert!(d(2, 2).is_zero());
        assert_eq!(d(2, 1), d(1, 2));
    }

    #[test]
    fn psi_examples() {
        assert!(psi(&s_generator(1, 2, 3, 4)).is_zero());
        assert_eq!(psi(&d(1, 2)), LinComb::basis(GF2, TMonomial(vec![1, 2])));
        let p = psi(&dpoly_mul(&d(1, 2), &d(3, 4)));
        assert_eq!(p, LinComb::basis(GF2, TMonomial(vec![1, 2, 3, 4])));
        // d13 d23 has t3 twice
        assert!(psi(&dpoly_mul(&d(1, 3), &d(2, 3))).is_zero());
    }

    #[test]
    fn psi_of_comms_matches_dbasis_route() {
        let comms: BTreeSet<Pair> = [(1, 2), (1, 3), (2, 4), (3, 4)].iter().map(|&(i, j)| Pair::new(i, j).unwrap()).collect();
        let via_d = psi(&to_dbasis(&LinComb::basis(GF2, GroupNF { gens: vec![], comms: comms.clone() })).unwrap());
        assert_eq!(psi_of_comms(&comms), via_d);
    }

    #[test]
    fn group_enumeration() {
        let g2 = GroupAlgebra::group_elements(2);
        assert_eq!(g2.len(), 8);
        assert_eq!(g2[0], GroupNF::identity());
        assert_eq!(GroupAlgebra::group_elements(3).len(), 64);
    }
}
