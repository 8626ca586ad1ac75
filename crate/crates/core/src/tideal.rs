//! Multilinear components of the commutator ideals `T^(n)` of `F<X>`.
//!
//! `T^(n)` is spanned by the products `u · [a_1, ..., a_n] · v`. In the
//! multilinear component of degree `d` it is enough to take `u`, `v` and the
//! `a_i` to be words that split `x_1 … x_d` between them, so membership
//! becomes a finite linear-algebra question in the `d!`-dimensional space of
//! permutation words.

use std::collections::HashSet;

use crate::coeff::{solve_in_span, FieldTag, Scalar, SparseVector};
use crate::error::{Error, Result};
use crate::free_algebra::{is_multilinear, NcPoly, Word};
use crate::lincomb::LinComb;

/// Largest degree accepted unless a frame is built with an explicit limit.
pub const DEFAULT_DEGREE_LIMIT: usize = 6;

/// Coordinates for the multilinear component of degree `d`: permutation words
/// of `x_1..x_d`, indexed by lexicographic rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultilinearFrame {
    degree: usize,
    field: FieldTag,
}

impl MultilinearFrame {
    pub fn new(field: FieldTag, degree: usize) -> Result<Self> {
        Self::with_limit(field, degree, DEFAULT_DEGREE_LIMIT)
    }

    pub fn with_limit(field: FieldTag, degree: usize, limit: usize) -> Result<Self> {
        if degree > limit {
            return Err(Error::DegreeTooLarge { degree, limit });
        }
        Ok(MultilinearFrame { degree, field })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn field(&self) -> FieldTag {
        self.field
    }

    pub fn dimension(&self) -> usize {
        (1..=self.degree).product()
    }

    /// Lexicographic rank of a permutation word (its Lehmer code), or `None`
    /// if `letters` is not a permutation of `1..=d`.
    pub fn coordinate(&self, letters: &[u32]) -> Option<usize> {
        let d = self.degree;
        if letters.len() != d {
            return None;
        }
        let mut used = vec![false; d + 1];
        let mut rank = 0usize;
        for (pos, &l) in letters.iter().enumerate() {
            let l = l as usize;
            if l == 0 || l > d || used[l] {
                return None;
            }
            let smaller_unused = (1..l).filter(|&s| !used[s]).count();
            rank = rank * (d - pos) + smaller_unused;
            used[l] = true;
        }
        Some(rank)
    }

    /// Inverse of [`coordinate`](Self::coordinate).
    pub fn word(&self, mut rank: usize) -> Word {
        let d = self.degree;
        let mut pool: Vec<u32> = (1..=d as u32).collect();
        let mut radix: Vec<usize> = (0..d).map(|pos| (1..d - pos).product()).collect();
        let mut out = Vec::with_capacity(d);
        for r in radix.drain(..) {
            let k = rank / r;
            rank %= r;
            out.push(pool.remove(k));
        }
        Word::new(out)
    }

    pub fn to_vector(&self, p: &NcPoly) -> Result<SparseVector> {
        if !is_multilinear(p, self.degree) {
            return Err(Error::NotMultilinear(self.degree));
        }
        if p.field() != self.field {
            return Err(Error::MixedFields(self.field, p.field()));
        }
        let pairs = p.terms().map(|(w, c)| (self.coordinate(w.letters()).expect("multilinear"), c.clone()));
        SparseVector::from_pairs(self.field, pairs)
    }

    pub fn to_poly(&self, v: &SparseVector) -> NcPoly {
        let mut out = LinComb::zero(self.field);
        for (k, c) in v.iter() {
            out.add_term(self.word(k), c);
        }
        out
    }
}

/// An element `w0 · [m_1, ..., m_n] · w1` of a spanning set, as index blocks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpanningShape {
    pub prefix: Vec<u32>,
    pub blocks: Vec<Vec<u32>>,
    pub suffix: Vec<u32>,
}

/// `d! · C(d+1, n+1)`: permutations of the letters times the ways to cut one
/// into a possibly-empty prefix, `n` nonempty blocks and a possibly-empty suffix.
pub fn spanning_count(n: usize, d: usize) -> u64 {
    if n > d {
        return 0;
    }
    let fact: u64 = (1..=d as u64).product();
    let (top, k) = (d as u64 + 1, n as u64 + 1);
    let binom = (0..k).fold(1u64, |acc, i| acc * (top - i) / (i + 1));
    fact * binom
}

/// Iterates over all permutations of `1..=d` in lexicographic order.
fn permutations(d: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur: Vec<u32> = (1..=d as u32).collect();
    loop {
        out.push(cur.clone());
        // next lexicographic permutation
        let Some(i) = (1..cur.len()).rev().find(|&i| cur[i - 1] < cur[i]) else { break };
        let j = (i..cur.len()).rev().find(|&j| cur[j] > cur[i - 1]).expect("pivot has a successor");
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
    out
}

/// Compositions of `d` into `parts` parts where the first and last may be empty.
fn cut_points(d: usize, n: usize) -> Vec<Vec<usize>> {
    // lengths (l0, l1..ln, l_{n+1}) with l1..ln >= 1
    let mut out = Vec::new();
    fn rec(rem: usize, left: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            let mut v = acc.clone();
            v.push(rem);
            out.push(v);
            return;
        }
        for l in 1..=rem.saturating_sub(left - 1) {
            acc.push(l);
            rec(rem - l, left - 1, acc, out);
            acc.pop();
        }
    }
    for l0 in 0..=d.saturating_sub(n) {
        let mut acc = vec![l0];
        rec(d - l0, n, &mut acc, &mut out);
    }
    out
}

/// Every `(prefix, blocks, suffix)` split used by [`spanning_set`].
pub fn spanning_shapes(n: usize, d: usize) -> Vec<SpanningShape> {
    if n > d {
        return Vec::new();
    }
    let cuts = cut_points(d, n);
    let mut out = Vec::with_capacity(spanning_count(n, d) as usize);
    for perm in permutations(d) {
        for lens in &cuts {
            let mut pos = 0;
            let mut take = |l: usize| {
                let s = perm[pos..pos + l].to_vec();
                pos += l;
                s
            };
            let prefix = take(lens[0]);
            let blocks = lens[1..=n].iter().map(|&l| take(l)).collect();
            let suffix = take(lens[n + 1]);
            out.push(SpanningShape { prefix, blocks, suffix });
        }
    }
    out
}

/// Expansion of `prefix · [b_1, ..., b_n] · suffix` as signed words.
fn expand_shape(shape: &SpanningShape) -> Vec<(i64, Vec<u32>)> {
    let mut terms: Vec<(i64, Vec<u32>)> = vec![(1, shape.blocks[0].clone())];
    for b in &shape.blocks[1..] {
        let mut next = Vec::with_capacity(terms.len() * 2);
        for (s, w) in &terms {
            next.push((*s, [w.as_slice(), b].concat()));
            next.push((-*s, [b.as_slice(), w].concat()));
        }
        terms = next;
    }
    terms
        .into_iter()
        .map(|(s, w)| (s, [shape.prefix.as_slice(), &w, &shape.suffix].concat()))
        .collect()
}

fn check_arity(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::TooFewArguments(n));
    }
    Ok(())
}

/// Spanning vectors in frame coordinates, deduplicated up to sign (each
/// normalized so its lowest coordinate has coefficient `+1`).
pub fn spanning_vectors(n: usize, frame: &MultilinearFrame) -> Result<Vec<SparseVector>> {
    check_arity(n)?;
    let mut seen: HashSet<Vec<(usize, i64)>> = HashSet::new();
    let mut out = Vec::new();
    for shape in spanning_shapes(n, frame.degree) {
        let mut coords: Vec<(usize, i64)> = expand_shape(&shape)
            .into_iter()
            .map(|(s, w)| (frame.coordinate(&w).expect("shapes are permutations"), s))
            .collect();
        coords.sort_unstable();
        if coords[0].1 < 0 {
            coords.iter_mut().for_each(|c| c.1 = -c.1);
        }
        if seen.insert(coords.clone()) {
            out.push(SparseVector::from_ints(frame.field, coords));
        }
    }
    Ok(out)
}

/// The spanning set of the multilinear component of `T^(n)` in degree `d`,
/// one polynomial per split, without deduplication.
pub fn spanning_set(n: usize, frame: &MultilinearFrame) -> Result<Vec<NcPoly>> {
    check_arity(n)?;
    Ok(spanning_shapes(n, frame.degree)
        .iter()
        .map(|shape| {
            let mut p = LinComb::zero(frame.field);
            for (s, w) in expand_shape(shape) {
                p.add_term(Word::new(w), &Scalar::from_i64(frame.field, s));
            }
            p
        })
        .collect())
}

/// Whether the multilinear `target` lies in `T^(n)`, over the frame's field.
pub fn member(target: &NcPoly, n: usize, frame: &MultilinearFrame) -> Result<bool> {
    Ok(membership_certificate(target, n, frame)?.is_some())
}

/// Like [`member`], but returns the combination of (deduplicated) spanning
/// vectors that produces the target.
pub fn membership_certificate(
    target: &NcPoly,
    n: usize,
    frame: &MultilinearFrame,
) -> Result<Option<Vec<(SparseVector, Scalar)>>> {
    let t = frame.to_vector(target)?;
    let gens = spanning_vectors(n, frame)?;
    let sol = solve_in_span(&gens, &t)?;
    Ok(sol.map(|coefs| coefs.into_iter().map(|(i, c)| (gens[i].clone(), c)).collect()))
}
