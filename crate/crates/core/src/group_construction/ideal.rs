//! Exact membership in the ideal `I` generated by `S`.
//!
//! `I = ⊕_A y_A · (F𝒢' · S)`, so membership splits over the `y`-part of each
//! term. Inside `F𝒢'` the generators `μ · s` (μ a squarefree `d`-monomial,
//! `s ∈ S`) are homogeneous for the grading that gives `d_ij` the degree
//! `e_i + e_j`, so each graded component is decided separately by exact
//! GF(2) elimination over the monomials of that degree (the simple graphs
//! with the given degree sequence).

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use serde::Serialize;

use super::{dpoly_mul, psi_of_comms, s_generator, DMonomial, DPoly, GroupAlgebraElement, Pair, GF2};
use crate::coeff::{Scalar, SparseVector, SpanBasis};
use crate::error::{Error, Result};
use crate::lincomb::LinComb;
use crate::tensor_product::ZeroVerdict;

/// Largest support (number of generator indices) decided by exact elimination.
pub const DEFAULT_EXACT_LIMIT: u32 = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum IdealVerdict {
    InIdeal,
    NotInIdeal,
    Unknown,
}

type Multidegree = Vec<(u32, u8)>;

#[derive(Debug)]
struct Component {
    graphs: Vec<DMonomial>,
    index: HashMap<DMonomial, usize>,
    span: SpanBasis,
}

/// All squarefree `d`-monomials (simple graphs) with the given vertex degrees,
/// in canonical order.
pub(crate) fn graphs_with_degrees(deg: &Multidegree) -> Vec<DMonomial> {
    let verts: Vec<u32> = deg.iter().map(|(v, _)| *v).collect();
    let pairs: Vec<Pair> = verts
        .iter()
        .enumerate()
        .flat_map(|(a, &i)| verts[a + 1..].iter().map(move |&j| Pair::new(i, j).expect("distinct")))
        .collect();
    let pos: HashMap<u32, usize> = verts.iter().enumerate().map(|(k, v)| (*v, k)).collect();
    // avail[k][v]: pairs at index >= k touching vertex v
    let mut avail = vec![vec![0u8; verts.len()]; pairs.len() + 1];
    for k in (0..pairs.len()).rev() {
        avail[k] = avail[k + 1].clone();
        avail[k][pos[&pairs[k].lo()]] += 1;
        avail[k][pos[&pairs[k].hi()]] += 1;
    }
    let mut remaining: Vec<u8> = deg.iter().map(|(_, d)| *d).collect();
    let mut chosen = Vec::new();
    let mut out = Vec::new();

    fn walk(
        k: usize,
        pairs: &[Pair],
        pos: &HashMap<u32, usize>,
        avail: &[Vec<u8>],
        remaining: &mut [u8],
        chosen: &mut Vec<Pair>,
        out: &mut Vec<DMonomial>,
    ) {
        if remaining.iter().zip(&avail[k]).any(|(r, a)| r > a) {
            return;
        }
        if k == pairs.len() {
            out.push(DMonomial::from_pairs(chosen.iter().copied()).expect("distinct pairs"));
            return;
        }
        let p = pairs[k];
        let (a, b) = (pos[&p.lo()], pos[&p.hi()]);
        if remaining[a] > 0 && remaining[b] > 0 {
            remaining[a] -= 1;
            remaining[b] -= 1;
            chosen.push(p);
            walk(k + 1, pairs, pos, avail, remaining, chosen, out);
            chosen.pop();
            remaining[a] += 1;
            remaining[b] += 1;
        }
        walk(k + 1, pairs, pos, avail, remaining, chosen, out);
    }

    walk(0, &pairs, &pos, &avail, &mut remaining, &mut chosen, &mut out);
    out.sort();
    out
}

fn subtract_degree(deg: &Multidegree, idx: [u32; 4]) -> Option<Multidegree> {
    let mut m: BTreeMap<u32, u8> = deg.iter().copied().collect();
    for i in idx {
        let e = m.get_mut(&i)?;
        *e = e.checked_sub(1)?;
    }
    Some(m.into_iter().filter(|(_, d)| *d > 0).collect())
}

fn build_component(deg: &Multidegree) -> Component {
    let graphs = graphs_with_degrees(deg);
    let index: HashMap<DMonomial, usize> = graphs.iter().cloned().enumerate().map(|(k, g)| (g, k)).collect();
    let mut span = SpanBasis::new(GF2);
    let verts: Vec<u32> = deg.iter().map(|(v, _)| *v).collect();
    let mut cofactor_cache: HashMap<Multidegree, Vec<DMonomial>> = HashMap::new();
    'outer: for &i1 in &verts {
        for &i2 in &verts {
            for &i3 in &verts {
                for &i4 in &verts {
                    let Some(rest) = subtract_degree(deg, [i1, i2, i3, i4]) else { continue };
                    let s = s_generator(i1, i2, i3, i4);
                    if s.is_zero() {
                        continue;
                    }
                    let cofactors = cofactor_cache.entry(rest.clone()).or_insert_with(|| graphs_with_degrees(&rest));
                    for mu in cofactors.iter() {
                        let g = dpoly_mul(&LinComb::basis(GF2, mu.clone()), &s);
                        if g.is_zero() {
                            continue;
                        }
                        let v = SparseVector::from_pairs(GF2, g.terms().map(|(m, c)| (index[m], c.clone())))
                            .expect("GF(2) throughout");
                        span.insert(&v).expect("GF(2) throughout");
                        if span.rank() == graphs.len() {
                            break 'outer;
                        }
                    }
                }
            }
        }
    }
    Component { graphs, index, span }
}

/// Normal forms modulo `F𝒢' · S`, with a per-degree cache of echelon bases.
#[derive(Debug)]
pub struct IdealReducer {
    exact_limit: u32,
    cache: Mutex<HashMap<Multidegree, Arc<Component>>>,
}

impl Default for IdealReducer {
    fn default() -> Self {
        IdealReducer::new(DEFAULT_EXACT_LIMIT)
    }
}

impl IdealReducer {
    pub fn new(exact_limit: u32) -> Self {
        IdealReducer { exact_limit, cache: Mutex::new(HashMap::new()) }
    }

    /// Process-wide reducer with [`DEFAULT_EXACT_LIMIT`].
    pub fn shared() -> Arc<IdealReducer> {
        static SHARED: OnceLock<Arc<IdealReducer>> = OnceLock::new();
        SHARED.get_or_init(|| Arc::new(IdealReducer::default())).clone()
    }

    pub fn exact_limit(&self) -> u32 {
        self.exact_limit
    }

    fn component(&self, deg: &Multidegree) -> Arc<Component> {
        if let Some(c) = self.cache.lock().expect("cache lock").get(deg) {
            return c.clone();
        }
        let built = Arc::new(build_component(deg));
        self.cache.lock().expect("cache lock").entry(deg.clone()).or_insert(built).clone()
    }

    /// Canonical representative of `p` modulo `F𝒢' · S`.
    pub fn reduce(&self, p: &DPoly) -> DPoly {
        let mut by_degree: BTreeMap<Multidegree, Vec<&DMonomial>> = BTreeMap::new();
        for (m, _) in p.terms() {
            by_degree.entry(m.multidegree()).or_default().push(m);
        }
        let mut out = LinComb::zero(GF2);
        for (deg, monos) in by_degree {
            if deg.is_empty() {
                // the unit; no generator of S has degree zero
                out.add_term(DMonomial::one(), &Scalar::one(GF2));
                continue;
            }
            let comp = self.component(&deg);
            let v = SparseVector::from_ints(GF2, monos.iter().map(|m| (comp.index[*m], 1)));
            let r = comp.span.reduce(&v).expect("GF(2) throughout");
            for (k, _) in r.iter() {
                out.add_term(comp.graphs[k].clone(), &Scalar::one(GF2));
            }
        }
        out
    }

    pub fn contains(&self, p: &DPoly) -> bool {
        self.reduce(p).is_zero()
    }

    /// Normal form of `p · ∏_{q ∈ comms} c_q`, multiplying one factor
    /// `c_q = 1 + d_q` at a time and reducing in between.
    pub fn reduce_times_comms(&self, p: &DPoly, comms: &BTreeSet<Pair>) -> DPoly {
        let mut e = self.reduce(p);
        for q in comms {
            if e.is_zero() {
                break;
            }
            let dq = LinComb::basis(GF2, DMonomial::from_pairs([*q]).expect("single pair"));
            let shifted = dpoly_mul(&e, &dq);
            e = self.reduce(&e.try_add(&shifted).expect("GF(2) throughout"));
        }
        e
    }

    /// Normal form of the group element `c_P`.
    pub fn reduce_comms(&self, comms: &BTreeSet<Pair>) -> DPoly {
        self.reduce_times_comms(&LinComb::basis(GF2, DMonomial::one()), comms)
    }

    /// Decides `x ∈ I` for `x` supported on generators `1..=support_bound`.
    ///
    /// Exact when `support_bound` is within the exact limit. Above it only
    /// the `ψ` certificate is available: a nonzero image proves
    /// `NotInIdeal`, otherwise the answer is `Unknown`.
    pub fn ideal_member(&self, x: &GroupAlgebraElement, support_bound: u32) -> Result<IdealVerdict> {
        if x.field() != GF2 {
            return Err(Error::MixedFields(GF2, x.field()));
        }
        if let Some(index) = x.basis_elements().map(|g| g.max_index()).find(|&i| i > support_bound) {
            return Err(Error::SupportExceeded { index, bound: support_bound });
        }
        let mut by_gens: BTreeMap<&[u32], Vec<&BTreeSet<Pair>>> = BTreeMap::new();
        for (g, _) in x.terms() {
            by_gens.entry(g.gens()).or_default().push(g.comms());
        }
        if support_bound <= self.exact_limit {
            for comms in by_gens.values() {
                let mut acc = LinComb::zero(GF2);
                for c in comms {
                    acc = acc.try_add(&self.reduce_comms(c)).expect("GF(2) throughout");
                }
                if !acc.is_zero() {
                    return Ok(IdealVerdict::NotInIdeal);
                }
            }
            return Ok(IdealVerdict::InIdeal);
        }
        for comms in by_gens.values() {
            let mut acc = LinComb::zero(GF2);
            for c in comms {
                acc = acc.try_add(&psi_of_comms(c)).expect("GF(2) throughout");
            }
            if !acc.is_zero() {
                return Ok(IdealVerdict::NotInIdeal);
            }
        }
        Ok(IdealVerdict::Unknown)
    }
}

/// [`IdealReducer::ideal_member`] with the shared default reducer.
pub fn ideal_member(x: &GroupAlgebraElement, support_bound: u32) -> Result<IdealVerdict> {
    IdealReducer::shared().ideal_member(x, support_bound)
}

/// Zero test in `F𝒢/I` (or `F𝒢_r/I_r`, by taking `support_bound = r`).
pub fn quotient_is_zero(x: &GroupAlgebraElement, support_bound: u32) -> Result<ZeroVerdict> {
    Ok(match ideal_member(x, support_bound)? {
        IdealVerdict::InIdeal => ZeroVerdict::Zero,
        IdealVerdict::NotInIdeal => ZeroVerdict::NonZero,
        IdealVerdict::Unknown => ZeroVerdict::Unknown,
    })
}
