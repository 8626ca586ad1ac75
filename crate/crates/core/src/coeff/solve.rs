//! Incremental sparse Gaussian elimination over the supported fields.
//!
//! Rows are kept in (non-reduced) echelon form with the pivot at the first
//! nonzero entry, normalized to 1. Reducing a vector sweeps the pivot columns
//! in ascending order, so the remainder has zeros in every pivot column; that
//! remainder is the canonical representative of the vector modulo the span.

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, ToPrimitive, Zero};

use super::{FieldTag, Scalar, SparseVector};
use crate::error::{Error, Result};

pub(crate) trait Coef: Clone + std::fmt::Debug {
    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    /// Caller guarantees `self` is nonzero.
    fn inv(&self) -> Self;
    fn from_scalar(s: &Scalar) -> Self;
    fn to_scalar(&self) -> Scalar;
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Fp<const P: u8>(u8);

impl<const P: u8> Coef for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn add(&self, o: &Self) -> Self {
        Fp((self.0 + o.0) % P)
    }
    fn sub(&self, o: &Self) -> Self {
        Fp((self.0 + P - o.0) % P)
    }
    fn mul(&self, o: &Self) -> Self {
        Fp(((self.0 as u16 * o.0 as u16) % P as u16) as u8)
    }
    fn inv(&self) -> Self {
        // P is 2 or 3, where every nonzero residue is an involution.
        *self
    }
    fn from_scalar(s: &Scalar) -> Self {
        match s {
            Scalar::Gf2(v) | Scalar::Gf3(v) => Fp(*v % P),
            Scalar::Rational(_) => unreachable!("rational scalar in a finite-field solver"),
        }
    }
    fn to_scalar(&self) -> Scalar {
        match P {
            2 => Scalar::Gf2(self.0),
            _ => Scalar::Gf3(self.0),
        }
    }
}

/// Rational with a machine-word fast path; falls back to big integers on overflow.
#[derive(Clone, Debug)]
pub(crate) enum QCoef {
    Small(Ratio<i64>),
    Big(BigRational),
}

impl QCoef {
    fn big(&self) -> BigRational {
        match self {
            QCoef::Small(r) => BigRational::new(BigInt::from(*r.numer()), BigInt::from(*r.denom())),
            QCoef::Big(b) => b.clone(),
        }
    }

    fn demote(b: BigRational) -> QCoef {
        match (b.numer().to_i64(), b.denom().to_i64()) {
            (Some(n), Some(d)) => QCoef::Small(Ratio::new_raw(n, d)),
            _ => QCoef::Big(b),
        }
    }

    fn binop(
        &self,
        o: &Self,
        small: impl Fn(&Ratio<i64>, &Ratio<i64>) -> Option<Ratio<i64>>,
        big: impl Fn(BigRational, BigRational) -> BigRational,
    ) -> Self {
        if let (QCoef::Small(a), QCoef::Small(b)) = (self, o) {
            if let Some(r) = small(a, b) {
                return QCoef::Small(r);
            }
        }
        QCoef::demote(big(self.big(), o.big()))
    }
}

impl Coef for QCoef {
    fn zero() -> Self {
        QCoef::Small(Ratio::zero())
    }
    fn is_zero(&self) -> bool {
        match self {
            QCoef::Small(r) => r.is_zero(),
            QCoef::Big(b) => b.is_zero(),
        }
    }
    fn add(&self, o: &Self) -> Self {
        self.binop(o, |a, b| a.checked_add(b), |a, b| a + b)
    }
    fn sub(&self, o: &Self) -> Self {
        self.binop(o, |a, b| a.checked_sub(b), |a, b| a - b)
    }
    fn mul(&self, o: &Self) -> Self {
        self.binop(o, |a, b| a.checked_mul(b), |a, b| a * b)
    }
    fn inv(&self) -> Self {
        match self {
            QCoef::Small(r) if *r.numer() != i64::MIN => QCoef::Small(r.recip()),
            other => QCoef::demote(other.big().recip()),
        }
    }
    fn from_scalar(s: &Scalar) -> Self {
        match s {
            Scalar::Rational(q) => QCoef::demote(q.clone()),
            _ => unreachable!("finite-field scalar in the rational solver"),
        }
    }
    fn to_scalar(&self) -> Scalar {
        Scalar::Rational(self.big())
    }
}

/// How an echelon row was produced: `row = scale * (gen[source] - sum mult_j * row_j)`.
#[derive(Clone, Debug)]
struct Provenance<K> {
    source: usize,
    scale: K,
    mult: Vec<(usize, K)>,
}

#[derive(Clone, Debug)]
pub(crate) struct Echelon<K> {
    rows: Vec<Vec<(usize, K)>>,
    pivot_row: Vec<Option<usize>>,
    provenance: Option<Vec<Provenance<K>>>,
}

impl<K: Coef> Echelon<K> {
    pub(crate) fn new(dim: usize, track: bool) -> Self {
        Echelon {
            rows: Vec::new(),
            pivot_row: vec![None; dim],
            provenance: track.then(Vec::new),
        }
    }

    fn grow(&mut self, dim: usize) {
        if dim > self.pivot_row.len() {
            self.pivot_row.resize(dim, None);
        }
    }

    pub(crate) fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Eliminates every pivot column `>= from` in `v`, in ascending order.
    fn sweep(&self, v: &mut [K], from: usize, mut record: impl FnMut(usize, K)) {
        for c in from..v.len().min(self.pivot_row.len()) {
            if v[c].is_zero() {
                continue;
            }
            if let Some(r) = self.pivot_row[c] {
                let lambda = v[c].clone();
                for (j, a) in &self.rows[r] {
                    v[*j] = v[*j].sub(&lambda.mul(a));
                }
                record(r, lambda);
            }
        }
    }

    fn densify(&self, v: &SparseVector, dim: usize) -> Vec<K> {
        let mut d = vec![K::zero(); dim];
        for (i, c) in v.iter() {
            d[i] = K::from_scalar(c);
        }
        d
    }

    /// Adds `v` (generator number `source`) to the span. Returns the new row's
    /// pivot column when the rank grows.
    fn insert_dense(&mut self, mut v: Vec<K>, source: usize) -> Option<usize> {
        let track = self.provenance.is_some();
        let mut mult = Vec::new();
        self.sweep(&mut v, 0, |r, l| {
            if track {
                mult.push((r, l))
            }
        });
        let lead = v.iter().position(|c| !c.is_zero())?;
        let scale = v[lead].inv();
        let row: Vec<(usize, K)> = v
            .iter()
            .enumerate()
            .skip(lead)
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, c)| (j, c.mul(&scale)))
            .collect();
        self.pivot_row[lead] = Some(self.rows.len());
        self.rows.push(row);
        if let Some(p) = self.provenance.as_mut() {
            p.push(Provenance { source, scale, mult });
        }
        Some(lead)
    }

    /// Expresses `sum coef_rows[k] * row_k` in terms of the original generators.
    fn expand(&self, mut coef_rows: Vec<K>, n_gens: usize) -> Vec<K> {
        let prov = self.provenance.as_ref().expect("provenance tracking enabled");
        let mut out = vec![K::zero(); n_gens];
        for k in (0..self.rows.len()).rev() {
            let c = coef_rows[k].clone();
            if c.is_zero() {
                continue;
            }
            let p = &prov[k];
            let cs = c.mul(&p.scale);
            out[p.source] = out[p.source].add(&cs);
            for (j, l) in &p.mult {
                coef_rows[*j] = coef_rows[*j].sub(&cs.mul(l));
            }
        }
        out
    }
}

fn solve_generic<K: Coef>(generators: &[SparseVector], target: &SparseVector) -> Option<Vec<(usize, Scalar)>> {
    let dim = generators
        .iter()
        .chain(std::iter::once(target))
        .filter_map(SparseVector::max_index)
        .max()
        .map_or(0, |m| m + 1);
    let mut ech: Echelon<K> = Echelon::new(dim, true);
    let mut t: Vec<K> = ech.densify(target, dim);
    let mut mu: Vec<K> = Vec::new();
    let finish = |ech: &Echelon<K>, mu: Vec<K>| {
        let coefs = ech.expand(mu, generators.len());
        coefs
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i, c.to_scalar()))
            .collect::<Vec<_>>()
    };
    if t.iter().all(Coef::is_zero) {
        return Some(Vec::new());
    }
    for (gi, g) in generators.iter().enumerate() {
        let dense = ech.densify(g, dim);
        let Some(pivot) = ech.insert_dense(dense, gi) else { continue };
        mu.push(K::zero());
        if t[pivot].is_zero() {
            continue;
        }
        ech.sweep(&mut t, pivot, |r, l| mu[r] = mu[r].add(&l));
        if t.iter().all(Coef::is_zero) {
            return Some(finish(&ech, mu));
        }
    }
    None
}

/// Finds coefficients expressing `target` as a combination of `generators`.
///
/// Returns `None` when `target` is outside their span. The combination is
/// sparse and listed by ascending generator index. Generators are consumed in
/// order and elimination stops as soon as the target is reached.
pub fn solve_in_span(generators: &[SparseVector], target: &SparseVector) -> Result<Option<Vec<(usize, Scalar)>>> {
    let field = target.field();
    if let Some(g) = generators.iter().find(|g| g.field() != field) {
        return Err(Error::MixedFields(field, g.field()));
    }
    Ok(match field {
        FieldTag::Rational => solve_generic::<QCoef>(generators, target),
        FieldTag::Gf2 => solve_generic::<Fp<2>>(generators, target),
        FieldTag::Gf3 => solve_generic::<Fp<3>>(generators, target),
    })
}

#[derive(Clone, Debug)]
enum Engine {
    Q(Echelon<QCoef>),
    F2(Echelon<Fp<2>>),
    F3(Echelon<Fp<3>>),
}

/// A growing subspace with canonical reduction modulo it.
#[derive(Clone, Debug)]
pub struct SpanBasis {
    field: FieldTag,
    dim: usize,
    engine: Engine,
}

macro_rules! with_engine {
    ($self:expr, $e:ident => $body:expr) => {
        match $self {
            Engine::Q($e) => $body,
            Engine::F2($e) => $body,
            Engine::F3($e) => $body,
        }
    };
}

fn reduce_with<K: Coef>(ech: &Echelon<K>, v: &SparseVector, dim: usize) -> SparseVector {
    let mut d = ech.densify(v, dim);
    ech.sweep(&mut d, 0, |_, _| {});
    let mut out = SparseVector::zero(v.field());
    for (i, c) in d.iter().enumerate() {
        if !c.is_zero() {
            out.add_at(i, &c.to_scalar()).expect("same field");
        }
    }
    out
}

impl SpanBasis {
    pub fn new(field: FieldTag) -> Self {
        let engine = match field {
            FieldTag::Rational => Engine::Q(Echelon::new(0, false)),
            FieldTag::Gf2 => Engine::F2(Echelon::new(0, false)),
            FieldTag::Gf3 => Engine::F3(Echelon::new(0, false)),
        };
        SpanBasis { field, dim: 0, engine }
    }

    pub fn field(&self) -> FieldTag {
        self.field
    }

    pub fn rank(&self) -> usize {
        with_engine!(&self.engine, e => e.rank())
    }

    /// Adds `v`; returns whether the rank grew.
    pub fn insert(&mut self, v: &SparseVector) -> Result<bool> {
        if v.field() != self.field {
            return Err(Error::MixedFields(self.field, v.field()));
        }
        self.dim = self.dim.max(v.max_index().map_or(0, |m| m + 1));
        let dim = self.dim;
        Ok(with_engine!(&mut self.engine, e => {
            e.grow(dim);
            let d = e.densify(v, dim);
            e.insert_dense(d, 0).is_some()
        }))
    }

    /// The unique representative of `v` modulo the span with zeros in every pivot column.
    pub fn reduce(&self, v: &SparseVector) -> Result<SparseVector> {
        if v.field() != self.field {
            return Err(Error::MixedFields(self.field, v.field()));
        }
        let dim = self.dim.max(v.max_index().map_or(0, |m| m + 1));
        Ok(with_engine!(&self.engine, e => reduce_with(e, v, dim)))
    }

    pub fn contains(&self, v: &SparseVector) -> Result<bool> {
        Ok(self.reduce(v)?.is_zero())
    }
}
