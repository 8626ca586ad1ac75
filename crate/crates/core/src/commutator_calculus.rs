//! Left-normed commutators in any [`Algebra`], the closed forms for
//! commutators of pure tensors over factors of Lie class at most 2, and
//! basis-level sweeps for commutator-product and nilpotency conditions.
//!
//! Sweeps enumerate tuples of basis indices in lexicographic (odometer) order,
//! last position fastest; sampled sweeps draw every position uniformly from a
//! `ChaCha8Rng` seeded with the given seed, so counterexamples reproduce.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::coeff::{FieldTag, Scalar};
use crate::error::{Error, Result};
use crate::tensor_product::{Algebra, Elem, TensorAlgebra, TensorElement};

/// `[a_1, ..., a_n] = [[a_1, ..., a_{n-1}], a_n]`.
pub fn left_normed_generic<A: Algebra>(alg: &A, args: &[Elem<A>]) -> Result<Elem<A>> {
    if args.len() < 2 {
        return Err(Error::TooFewArguments(args.len()));
    }
    let mut acc = args[0].clone();
    for a in &args[1..] {
        if acc.is_zero() {
            break;
        }
        acc = alg.bracket(&acc, a);
    }
    Ok(acc)
}

/// The factors `g_1..g_ℓ` and `h_1..h_ℓ` of the pure tensors `g_i ⊗ h_i`.
#[derive(Clone, Debug)]
pub struct PureTensorList<G: Algebra, H: Algebra> {
    gs: Vec<Elem<G>>,
    hs: Vec<Elem<H>>,
}

impl<G: Algebra, H: Algebra> PureTensorList<G, H> {
    pub fn new(gs: Vec<Elem<G>>, hs: Vec<Elem<H>>) -> Result<Self> {
        if gs.len() != hs.len() {
            return Err(Error::ShapeViolation(format!("{} left factors but {} right factors", gs.len(), hs.len())));
        }
        Ok(PureTensorList { gs, hs })
    }

    pub fn len(&self) -> usize {
        self.gs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gs.is_empty()
    }

    pub fn gs(&self) -> &[Elem<G>] {
        &self.gs
    }

    pub fn hs(&self) -> &[Elem<H>] {
        &self.hs
    }

    /// The pure tensors `g_i ⊗ h_i`.
    pub fn tensors(&self, t: &TensorAlgebra<G, H>) -> Result<Vec<TensorElement<G, H>>> {
        self.gs.iter().zip(&self.hs).map(|(g, h)| t.pure(g, h)).collect()
    }
}

/// `[g_1 ⊗ h_1, ..., g_ℓ ⊗ h_ℓ]` by direct recursive expansion.
pub fn c_ell_direct<G: Algebra, H: Algebra>(
    t: &TensorAlgebra<G, H>,
    input: &PureTensorList<G, H>,
) -> Result<TensorElement<G, H>> {
    if input.len() < 2 {
        return Err(Error::LengthTooSmall(input.len()));
    }
    left_normed_generic(t, &input.tensors(t)?)
}

/// Closed form of `[g_1 ⊗ h_1, ..., g_ℓ ⊗ h_ℓ]`, valid when both factors
/// satisfy `[a, b, c] = 0`.
///
/// * `ℓ = 2`: `[g1,g2] ⊗ h1h2 + g2g1 ⊗ [h1,h2]`
/// * `ℓ = 2k > 2`: `[g1,g2]…[g_{2k-1},g_{2k}] ⊗ [h1h2,h3][h4,h5]…[h_{2k-2},h_{2k-1}] h_{2k}
///   + [g2g1,g3][g4,g5]…[g_{2k-2},g_{2k-1}] g_{2k} ⊗ [h1,h2]…[h_{2k-1},h_{2k}]`
/// * `ℓ = 2k+1`: `[g1,g2]…[g_{2k-1},g_{2k}] g_{2k+1} ⊗ [h1h2,h3][h4,h5]…[h_{2k},h_{2k+1}]
///   + [g2g1,g3][g4,g5]…[g_{2k},g_{2k+1}] ⊗ [h1,h2]…[h_{2k-1},h_{2k}] h_{2k+1}`
pub fn c_ell_closed<G: Algebra, H: Algebra>(
    t: &TensorAlgebra<G, H>,
    input: &PureTensorList<G, H>,
) -> Result<TensorElement<G, H>> {
    let l = input.len();
    if l < 2 {
        return Err(Error::LengthTooSmall(l));
    }
    let (ga, ha) = (t.left(), t.right());
    for (g, h) in input.gs.iter().zip(&input.hs) {
        ga.check(g)?;
        ha.check(h)?;
    }
    // 1-based accessors
    let g = |i: usize| &input.gs[i - 1];
    let h = |i: usize| &input.hs[i - 1];

    if l == 2 {
        let first = t.pure(&ga.bracket(g(1), g(2)), &ha.mul(h(1), h(2)))?;
        let second = t.pure(&ga.mul(g(2), g(1)), &ha.bracket(h(1), h(2)))?;
        return Ok(t.add(&first, &second));
    }

    let k = l / 2;
    // ∏_{i=1..k} [x_{2i-1}, x_{2i}]
    fn odd_pairs<A: Algebra>(alg: &A, xs: &[Elem<A>], k: usize) -> Elem<A> {
        (1..=k).fold(alg.one(), |acc, i| alg.mul(&acc, &alg.bracket(&xs[2 * i - 2], &xs[2 * i - 1])))
    }
    // [head, x3] (head = x2x1 or x1x2), times ∏_{i=2..last} [x_{2i}, x_{2i+1}]
    fn shifted_pairs<A: Algebra>(alg: &A, xs: &[Elem<A>], head: Elem<A>, last: usize) -> Elem<A> {
        let mut acc = alg.bracket(&head, &xs[2]);
        for i in 2..=last {
            acc = alg.mul(&acc, &alg.bracket(&xs[2 * i - 1], &xs[2 * i]));
        }
        acc
    }

    let g21 = ga.mul(g(2), g(1));
    let h12 = ha.mul(h(1), h(2));
    let (g1, h1, g2, h2) = if l.is_multiple_of(2) {
        (
            odd_pairs(ga, &input.gs, k),
            ha.mul(&shifted_pairs(ha, &input.hs, h12, k - 1), h(2 * k)),
            ga.mul(&shifted_pairs(ga, &input.gs, g21, k - 1), g(2 * k)),
            odd_pairs(ha, &input.hs, k),
        )
    } else {
        (
            ga.mul(&odd_pairs(ga, &input.gs, k), g(2 * k + 1)),
            shifted_pairs(ha, &input.hs, h12, k),
            shifted_pairs(ga, &input.gs, g21, k),
            ha.mul(&odd_pairs(ha, &input.hs, k), h(2 * k + 1)),
        )
    };
    Ok(t.add(&t.pure(&g1, &h1)?, &t.pure(&g2, &h2)?))
}

/// Closed form of `[v_1, ..., v_{2m'}][w_1, ..., w_{2n'}]` for
/// `v_1 = g_1 ⊗ 1`, `v_i = g_i ⊗ h_i`, `v_{2m'} = g_{2m'} ⊗ 1` (and likewise
/// for the `w`): `∏[g_{2i-1}, g_{2i}] ∏[g'_{2i-1}, g'_{2i}] ⊗ ∏[h_{2i}, h_{2i+1}] ∏[h'_{2i}, h'_{2i+1}]`.
pub fn nilp2_closed<G: Algebra, H: Algebra>(
    t: &TensorAlgebra<G, H>,
    vs: &PureTensorList<G, H>,
    ws: &PureTensorList<G, H>,
) -> Result<TensorElement<G, H>> {
    let (ga, ha) = (t.left(), t.right());
    let one = ha.one();
    for (name, list) in [("v", vs), ("w", ws)] {
        let l = list.len();
        if l < 2 || l % 2 != 0 {
            return Err(Error::ShapeViolation(format!("{name} must have positive even length, got {l}")));
        }
        if list.hs[0] != one || list.hs[l - 1] != one {
            return Err(Error::ShapeViolation(format!("{name}_1 and {name}_{l} must have right factor 1")));
        }
        for (g, h) in list.gs.iter().zip(&list.hs) {
            ga.check(g)?;
            ha.check(h)?;
        }
    }
    let mut left = ga.one();
    let mut right = ha.one();
    for list in [vs, ws] {
        let half = list.len() / 2;
        for i in 1..=half {
            left = ga.mul(&left, &ga.bracket(&list.gs[2 * i - 2], &list.gs[2 * i - 1]));
        }
        for i in 1..half {
            right = ha.mul(&right, &ha.bracket(&list.hs[2 * i - 1], &list.hs[2 * i]));
        }
    }
    t.pure(&left, &right)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SweepMode {
    Exhaustive,
    Sampled { seed: u64, trials: u64 },
}

/// Result of a basis-level sweep.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepOutcome {
    pub holds: bool,
    pub exhaustive: bool,
    /// Tuples covered, including those settled by a vanishing prefix.
    pub checked: u64,
    /// Basis indices of the first failing tuple.
    pub counterexample: Option<Vec<usize>>,
}

/// Depth-first odometer over `len`-tuples of `0..base`. `step` extends the
/// running value by one index and returns `None` once it is zero, which
/// prunes every extension.
fn odometer<T>(
    base: usize,
    len: usize,
    init: T,
    step: &dyn Fn(&T, usize, usize) -> Option<T>,
    fails: &dyn Fn(&T) -> bool,
) -> SweepOutcome {
    #[allow(clippy::too_many_arguments)]
    fn walk<T>(
        depth: usize,
        base: usize,
        len: usize,
        cur: &T,
        prefix: &mut Vec<usize>,
        checked: &mut u64,
        step: &dyn Fn(&T, usize, usize) -> Option<T>,
        fails: &dyn Fn(&T) -> bool,
    ) -> bool {
        if depth == len {
            *checked += 1;
            return fails(cur);
        }
        for i in 0..base {
            prefix.push(i);
            match step(cur, depth, i) {
                None => *checked = checked.saturating_add((base as u64).saturating_pow((len - depth - 1) as u32)),
                Some(next) => {
                    if walk(depth + 1, base, len, &next, prefix, checked, step, fails) {
                        return true;
                    }
                }
            }
            prefix.pop();
        }
        false
    }
    let mut prefix = Vec::with_capacity(len);
    let mut checked = 0;
    let failed = walk(0, base, len, &init, &mut prefix, &mut checked, step, fails);
    SweepOutcome { holds: !failed, exhaustive: true, checked, counterexample: failed.then_some(prefix) }
}

fn sampled(base: usize, len: usize, seed: u64, trials: u64, fails: impl Fn(&[usize]) -> bool) -> SweepOutcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for n in 0..trials {
        let tuple: Vec<usize> = (0..len).map(|_| rng.gen_range(0..base)).collect();
        if fails(&tuple) {
            return SweepOutcome { holds: false, exhaustive: false, checked: n + 1, counterexample: Some(tuple) };
        }
    }
    SweepOutcome { holds: true, exhaustive: false, checked: trials, counterexample: None }
}

/// Checks `[f_1, f_2][f_3, f_4]…[f_{2k-1}, f_{2k}] = 0` for `f_j` drawn from
/// `basis` (which should span `H`; by multilinearity that suffices).
pub fn check_commutator_product_hypothesis<H: Algebra>(
    h: &H,
    k: usize,
    basis: &[Elem<H>],
    mode: SweepMode,
) -> SweepOutcome {
    let b = basis.len();
    if b == 0 {
        return SweepOutcome { holds: true, exhaustive: true, checked: 0, counterexample: None };
    }
    let comm: Vec<Vec<Elem<H>>> = basis.iter().map(|x| basis.iter().map(|y| h.bracket(x, y)).collect()).collect();
    match mode {
        SweepMode::Exhaustive => {
            // Walk pairs of indices as single digits in base b^2.
            let base = b * b;
            let step = |acc: &Elem<H>, _: usize, pair: usize| {
                let next = h.mul(acc, &comm[pair / b][pair % b]);
                (!next.is_zero()).then_some(next)
            };
            let mut out = odometer(base, k, h.one(), &step, &|acc: &Elem<H>| !acc.is_zero());
            out.counterexample = out.counterexample.map(|pairs| pairs.iter().flat_map(|p| [p / b, p % b]).collect());
            out
        }
        SweepMode::Sampled { seed, trials } => sampled(b, 2 * k, seed, trials, |t| {
            let prod = (0..k).fold(h.one(), |acc, i| h.mul(&acc, &comm[t[2 * i]][t[2 * i + 1]]));
            !prod.is_zero()
        }),
    }
}

/// Checks `[b_1, ..., b_len] = 0` for basis elements `b_j`. When exhaustive
/// this proves that every `len`-fold commutator in the span vanishes.
pub fn check_commutators_vanish_on_basis<A: Algebra>(
    alg: &A,
    basis: &[Elem<A>],
    len: usize,
    mode: SweepMode,
) -> Result<SweepOutcome> {
    if len < 2 {
        return Err(Error::TooFewArguments(len));
    }
    Ok(match mode {
        SweepMode::Exhaustive => {
            let step = |acc: &Option<Elem<A>>, _: usize, i: usize| {
                let next = match acc {
                    None => basis[i].clone(),
                    Some(c) => alg.bracket(c, &basis[i]),
                };
                (!next.is_zero()).then_some(Some(next))
            };
            odometer(basis.len(), len, None, &step, &|acc: &Option<Elem<A>>| acc.as_ref().is_some_and(|c| !c.is_zero()))
        }
        SweepMode::Sampled { seed, trials } => sampled(basis.len(), len, seed, trials, |t| {
            let args: Vec<Elem<A>> = t.iter().map(|&i| basis[i].clone()).collect();
            !left_normed_generic(alg, &args).expect("len >= 2").is_zero()
        }),
    })
}

/// A random nonzero coefficient: `±1..±3` over ℚ, any nonzero element otherwise.
pub fn random_coefficient(field: FieldTag, rng: &mut impl Rng) -> Scalar {
    match field {
        FieldTag::Rational => {
            let v: i64 = rng.gen_range(1..=3);
            Scalar::from_i64(field, if rng.gen_bool(0.5) { v } else { -v })
        }
        FieldTag::Gf2 => Scalar::one(field),
        FieldTag::Gf3 => Scalar::from_i64(field, rng.gen_range(1..=2)),
    }
}

/// A random combination of `terms` basis elements (repeats allowed).
pub fn random_element<A: Algebra>(alg: &A, basis: &[A::Basis], terms: usize, rng: &mut impl Rng) -> Elem<A> {
    let mut out = alg.zero();
    for _ in 0..terms {
        let b = basis[rng.gen_range(0..basis.len())].clone();
        out.add_term(b, &random_coefficient(alg.field(), rng));
    }
    out
}

/// Checks that `samples` left-normed `len`-fold commutators of random
/// elements (each a combination of up to `terms` basis elements) vanish.
/// The counterexample, if any, is the failing sample number.
pub fn check_random_commutators_vanish<A: Algebra>(
    alg: &A,
    basis: &[A::Basis],
    len: usize,
    samples: u64,
    terms: usize,
    seed: u64,
) -> Result<SweepOutcome> {
    if len < 2 {
        return Err(Error::TooFewArguments(len));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for n in 0..samples {
        let args: Vec<Elem<A>> = (0..len).map(|_| random_element(alg, basis, terms, &mut rng)).collect();
        if !left_normed_generic(alg, &args)?.is_zero() {
            return Ok(SweepOutcome { holds: false, exhaustive: false, checked: n + 1, counterexample: Some(vec![n as usize]) });
        }
    }
    Ok(SweepOutcome { holds: true, exhaustive: false, checked: samples, counterexample: None })
}

/// Outcome of comparing [`c_ell_closed`] against [`c_ell_direct`] at one length.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClosedFormTally {
    pub ell: usize,
    pub checked: u64,
    pub mismatches: u64,
    pub first_mismatch: Option<u64>,
}

/// For each `ℓ` in `ells`, compares the closed form with the direct expansion
/// on `trials` random pure-tensor lists; each factor is a combination of
/// `terms` basis elements. One RNG stream (from `seed`) feeds all lengths.
pub fn compare_closed_forms<G: Algebra, H: Algebra>(
    t: &TensorAlgebra<G, H>,
    g_basis: &[G::Basis],
    h_basis: &[H::Basis],
    ells: std::ops::RangeInclusive<usize>,
    trials: u64,
    terms: usize,
    seed: u64,
) -> Result<Vec<ClosedFormTally>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for ell in ells {
        let mut tally = ClosedFormTally { ell, checked: 0, mismatches: 0, first_mismatch: None };
        for n in 0..trials {
            let gs = (0..ell).map(|_| random_element(t.left(), g_basis, terms, &mut rng)).collect();
            let hs = (0..ell).map(|_| random_element(t.right(), h_basis, terms, &mut rng)).collect();
            let list = PureTensorList::new(gs, hs)?;
            tally.checked += 1;
            if c_ell_closed(t, &list)? != c_ell_direct(t, &list)? {
                tally.mismatches += 1;
                tally.first_mismatch.get_or_insert(n);
            }
        }
        out.push(tally);
    }
    Ok(out)
}
