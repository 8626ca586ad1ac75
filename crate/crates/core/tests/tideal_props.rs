//! Multilinear components of `T^(n)`: spanning sets and membership.

use nilcomm::coeff::SpanBasis;
use nilcomm::free_algebra::{left_normed, poly_mul, x, NcPoly};
use nilcomm::tideal::{member, spanning_count, spanning_set, spanning_shapes, spanning_vectors, MultilinearFrame};
use nilcomm::FieldTag;
use proptest::prelude::*;

const FIELDS: [FieldTag; 3] = [FieldTag::Rational, FieldTag::Gf2, FieldTag::Gf3];

/// Counts `(l_0, ..., l_{n+1})` summing to `d` with the middle `n` entries
/// positive, by trying every vector in `[0, d]^{n+2}`, then multiplies by `d!`.
fn recount(n: usize, d: usize) -> u64 {
    let parts = n + 2;
    let mut count = 0u64;
    let total = (d + 1).pow(parts as u32);
    for code in 0..total {
        let mut c = code;
        let lens: Vec<usize> = (0..parts)
            .map(|_| {
                let l = c % (d + 1);
                c /= d + 1;
                l
            })
            .collect();
        if lens.iter().sum::<usize>() == d && lens[1..=n].iter().all(|&l| l > 0) {
            count += 1;
        }
    }
    count * (1..=d as u64).product::<u64>()
}

fn commutator(field: FieldTag, letters: std::ops::RangeInclusive<u32>) -> NcPoly {
    let xs: Vec<NcPoly> = letters.map(|i| x(field, i)).collect();
    left_normed(&xs).unwrap()
}

fn product(field: FieldTag, a: std::ops::RangeInclusive<u32>, b: std::ops::RangeInclusive<u32>) -> NcPoly {
    poly_mul(&commutator(field, a), &commutator(field, b)).unwrap()
}

fn rank(field: FieldTag, vs: impl IntoIterator<Item = nilcomm::SparseVector>) -> usize {
    let mut basis = SpanBasis::new(field);
    for v in vs {
        basis.insert(&v).unwrap();
    }
    basis.rank()
}

#[test]
fn spanning_count_matches_recount() {
    for d in 2..=6 {
        for n in 2..=d {
            assert_eq!(spanning_count(n, d), recount(n, d), "n={n} d={d}");
        }
    }
    assert_eq!(spanning_shapes(3, 4).len() as u64, recount(3, 4));
}

#[test]
fn shapes_partition_a_permutation() {
    let d = 4;
    for shape in spanning_shapes(3, d) {
        let mut all: Vec<u32> = shape.prefix.clone();
        shape.blocks.iter().for_each(|b| all.extend(b));
        all.extend(&shape.suffix);
        all.sort_unstable();
        assert_eq!(all, (1..=d as u32).collect::<Vec<_>>());
        assert!(shape.blocks.iter().all(|b| !b.is_empty()));
    }
}

#[test]
fn dedup_does_not_change_the_span() {
    for field in FIELDS {
        for d in 2..=4 {
            let frame = MultilinearFrame::new(field, d).unwrap();
            for n in 2..=d {
                let full = spanning_set(n, &frame).unwrap().iter().map(|p| frame.to_vector(p).unwrap()).collect::<Vec<_>>();
                let dedup = spanning_vectors(n, &frame).unwrap();
                assert!(dedup.len() <= full.len());
                assert_eq!(rank(field, full), rank(field, dedup), "{field:?} n={n} d={d}");
            }
        }
    }
}

#[test]
fn field_sensitivity() {
    let q = MultilinearFrame::new(FieldTag::Rational, 5).unwrap();
    let f3 = MultilinearFrame::new(FieldTag::Gf3, 5).unwrap();
    assert!(member(&product(FieldTag::Rational, 1..=3, 4..=5), 4, &q).unwrap());
    assert!(!member(&product(FieldTag::Gf3, 1..=3, 4..=5), 4, &f3).unwrap());
    // and again over ℚ, so nothing leaks from the GF(3) run
    assert!(member(&product(FieldTag::Rational, 1..=3, 4..=5), 4, &q).unwrap());
}

#[test]
fn product_of_two_commutators_is_not_in_t3() {
    for field in FIELDS {
        let frame = MultilinearFrame::new(field, 4).unwrap();
        assert!(!member(&product(field, 1..=2, 3..=4), 3, &frame).unwrap(), "{field:?}");
        assert!(member(&product(field, 1..=2, 3..=4), 2, &frame).unwrap(), "{field:?}");
    }
}

#[test]
fn products_drop_two_levels() {
    for field in FIELDS {
        let frame = MultilinearFrame::new(field, 5).unwrap();
        assert!(member(&product(field, 1..=3, 4..=5), 3, &frame).unwrap(), "{field:?}");
    }
}

#[test]
fn three_by_three_in_t5() {
    for field in [FieldTag::Rational, FieldTag::Gf2] {
        let frame = MultilinearFrame::new(field, 6).unwrap();
        assert!(member(&product(field, 1..=3, 4..=6), 5, &frame).unwrap(), "{field:?}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    /// `T^(k) ⊂ T^(l)` for `k > l`, on sampled spanning elements.
    #[test]
    fn spanning_elements_are_members_of_lower_ideals(
        field in prop::sample::select(FIELDS.to_vec()),
        d in 3usize..=5,
        pick in any::<prop::sample::Index>(),
        gap in 1usize..=3,
    ) {
        let frame = MultilinearFrame::new(field, d).unwrap();
        for k in 3..=d {
            let l = k.saturating_sub(gap).max(2);
            if l >= k {
                continue;
            }
            let set = spanning_set(k, &frame).unwrap();
            let p = pick.get(&set);
            prop_assert!(member(p, l, &frame).unwrap(), "k={} l={} {:?}", k, l, p);
        }
    }
}
