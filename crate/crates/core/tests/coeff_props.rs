//! Scalars and the span solver against brute-force oracles.

use nilcomm::coeff::{solve_in_span, SpanBasis};
use nilcomm::{FieldTag, Scalar, SparseVector};
use proptest::prelude::*;

fn small_field() -> impl Strategy<Value = FieldTag> {
    prop_oneof![Just(FieldTag::Gf2), Just(FieldTag::Gf3)]
}

fn int_vectors(dim: usize, count: std::ops::Range<usize>) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(-2i64..=2, dim..=dim), count)
}

fn to_sparse(field: FieldTag, v: &[i64]) -> SparseVector {
    SparseVector::from_ints(field, v.iter().enumerate().map(|(i, &c)| (i, c)))
}

fn recombine(field: FieldTag, gens: &[SparseVector], coefs: &[(usize, Scalar)]) -> SparseVector {
    let mut acc = SparseVector::zero(field);
    for (i, c) in coefs {
        acc = acc.try_add(&gens[*i].scaled(c).unwrap()).unwrap();
    }
    acc
}

/// Every vector in the span over GF(p), by enumerating all combinations.
fn brute_span(p: i64, gens: &[Vec<i64>], dim: usize) -> std::collections::HashSet<Vec<i64>> {
    let mut out = std::collections::HashSet::new();
    let k = gens.len() as u32;
    for code in 0..p.pow(k) {
        let mut c = code;
        let mut v = vec![0i64; dim];
        for g in gens {
            let a = c % p;
            c /= p;
            for (x, y) in v.iter_mut().zip(g) {
                *x = (*x + a * y).rem_euclid(p);
            }
        }
        out.insert(v);
    }
    out
}

proptest! {
    #[test]
    fn scalar_field_axioms(a in -50i64..50, b in -50i64..50, c in -50i64..50, field in prop_oneof![Just(FieldTag::Rational), Just(FieldTag::Gf2), Just(FieldTag::Gf3)]) {
        let (a, b, c) = (Scalar::from_i64(field, a), Scalar::from_i64(field, b), Scalar::from_i64(field, c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn rational_display_is_reduced(num in -1000i64..1000, den in 1i64..1000) {
        let s = Scalar::rational(num, den).unwrap();
        let text = s.to_string();
        let g = num_integer::gcd(num, den);
        let expected = if den / g == 1 { format!("{}", num / g) } else { format!("{}/{}", num / g, den / g) };
        prop_assert_eq!(text, expected);
    }

    /// Membership over GF(2)/GF(3) agrees with enumerating the whole span.
    #[test]
    fn small_field_membership_is_complete(
        field in small_field(),
        gens in int_vectors(4, 0..5),
        target in prop::collection::vec(-2i64..=2, 4..=4),
    ) {
        let p = field.characteristic() as i64;
        let span = brute_span(p, &gens, 4);
        let reduced: Vec<i64> = target.iter().map(|x| x.rem_euclid(p)).collect();
        let gs: Vec<SparseVector> = gens.iter().map(|g| to_sparse(field, g)).collect();
        let t = to_sparse(field, &target);
        let sol = solve_in_span(&gs, &t).unwrap();
        prop_assert_eq!(sol.is_some(), span.contains(&reduced));
        if let Some(coefs) = sol {
            prop_assert_eq!(recombine(field, &gs, &coefs), t);
        }
    }

    /// Over ℚ, solutions recombine exactly, and a miss is confirmed by rank.
    #[test]
    fn rational_solutions_recombine(
        gens in int_vectors(5, 0..6),
        mix in prop::collection::vec(-3i64..=3, 6),
        perturb in any::<bool>(),
    ) {
        let f = FieldTag::Rational;
        let gs: Vec<SparseVector> = gens.iter().map(|g| to_sparse(f, g)).collect();
        let mut t = SparseVector::zero(f);
        for (g, c) in gs.iter().zip(&mix) {
            t = t.try_add(&g.scaled(&Scalar::from_i64(f, *c)).unwrap()).unwrap();
        }
        if perturb {
            t.add_at(4, &Scalar::rational(1, 7).unwrap()).unwrap();
        }
        match solve_in_span(&gs, &t).unwrap() {
            Some(coefs) => prop_assert_eq!(recombine(f, &gs, &coefs), t),
            None => {
                prop_assert!(perturb);
                let mut with = SpanBasis::new(f);
                let mut without = SpanBasis::new(f);
                for g in &gs {
                    with.insert(g).unwrap();
                    without.insert(g).unwrap();
                }
                with.insert(&t).unwrap();
                prop_assert_eq!(with.rank(), without.rank() + 1);
            }
        }
    }

    /// Reduction is a linear projection: v and v + (span element) reduce alike.
    #[test]
    fn reduction_is_canonical(
        field in small_field(),
        gens in int_vectors(5, 1..5),
        v in prop::collection::vec(-2i64..=2, 5..=5),
        mix in prop::collection::vec(-2i64..=2, 5),
    ) {
        let mut basis = SpanBasis::new(field);
        let gs: Vec<SparseVector> = gens.iter().map(|g| to_sparse(field, g)).collect();
        for g in &gs {
            basis.insert(g).unwrap();
        }
        let v = to_sparse(field, &v);
        let mut shifted = v.clone();
        for (g, c) in gs.iter().zip(&mix) {
            shifted = shifted.try_add(&g.scaled(&Scalar::from_i64(field, *c)).unwrap()).unwrap();
        }
        prop_assert_eq!(basis.reduce(&v).unwrap(), basis.reduce(&shifted).unwrap());
    }
}

#[test]
fn two_by_two_example() {
    let f = FieldTag::Rational;
    let gens = [to_sparse(f, &[1, 2]), to_sparse(f, &[3, 4])];
    let sol = solve_in_span(&gens, &to_sparse(f, &[2, 2])).unwrap().unwrap();
    assert_eq!(sol, vec![(0, Scalar::from_i64(f, -1)), (1, Scalar::from_i64(f, 1))]);
}
