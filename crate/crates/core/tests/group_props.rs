//! The group 𝒢, its algebra over GF(2), the ideal I and the ψ certificate.

use std::collections::BTreeSet;

use nilcomm::group_construction::{
    d, dpoly_mul, from_dbasis, group_comm, group_inv, group_mul, ideal_member, psi, s_generator, to_dbasis,
    GroupAlgebra, GroupAlgebraElement, GroupNF, IdealVerdict, Pair,
};
use nilcomm::{Algebra, FieldTag, LinComb, Scalar};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const GF2: FieldTag = FieldTag::Gf2;
const SUPPORT: u32 = 5;

/// A generator word is collected by repeatedly swapping adjacent out-of-order
/// letters (each swap leaves behind `c_ab`) and cancelling squares.
fn collect(word: &[u32]) -> (Vec<u32>, BTreeSet<(u32, u32)>) {
    let mut w = word.to_vec();
    let mut comms = BTreeSet::new();
    let mut toggle = |a: u32, b: u32| {
        let key = (a.min(b), a.max(b));
        if !comms.remove(&key) {
            comms.insert(key);
        }
    };
    loop {
        let mut changed = false;
        let mut i = 0;
        while i + 1 < w.len() {
            if w[i] == w[i + 1] {
                w.drain(i..i + 2);
                changed = true;
            } else if w[i] > w[i + 1] {
                toggle(w[i], w[i + 1]);
                w.swap(i, i + 1);
                changed = true;
                i += 1;
            } else {
                i += 1;
            }
        }
        if !changed {
            return (w, comms);
        }
    }
}

/// A word spelling `g`: its generators followed by each commutator written out.
fn spell(g: &GroupNF) -> Vec<u32> {
    let mut w = g.gens().to_vec();
    for p in g.comms() {
        // (y_i, y_j) = y_i y_j y_i y_j for involutions
        w.extend([p.lo(), p.hi(), p.lo(), p.hi()]);
    }
    w
}

fn to_nf((gens, comms): (Vec<u32>, BTreeSet<(u32, u32)>)) -> GroupNF {
    GroupNF::new(gens, comms.into_iter().map(|(i, j)| Pair::new(i, j).unwrap()).collect()).unwrap()
}

fn group_elem(r: u32) -> impl Strategy<Value = GroupNF> {
    prop::collection::vec(1..=r, 0..8).prop_map(|w| to_nf(collect(&w)))
}

fn random_ga(rng: &mut ChaCha8Rng, r: u32) -> GroupAlgebraElement {
    let mut out = LinComb::zero(GF2);
    for _ in 0..rng.gen_range(1..=4) {
        let w: Vec<u32> = (0..rng.gen_range(0..6)).map(|_| rng.gen_range(1..=r)).collect();
        out.add_term(to_nf(collect(&w)), &Scalar::one(GF2));
    }
    out
}

fn c_plus_one(i: u32, j: u32) -> GroupAlgebraElement {
    let a = GroupAlgebra::unbounded();
    a.add(&a.group(GroupNF::c(i, j)), &a.one())
}

proptest! {
    #[test]
    fn multiplication_matches_word_collection(a in group_elem(6), b in group_elem(6)) {
        let mut w = spell(&a);
        w.extend(spell(&b));
        prop_assert_eq!(group_mul(&a, &b), to_nf(collect(&w)));
    }

    #[test]
    fn group_axioms_and_class_two(a in group_elem(6), b in group_elem(6), c in group_elem(6)) {
        let e = GroupNF::identity();
        prop_assert_eq!(group_mul(&group_mul(&a, &b), &c), group_mul(&a, &group_mul(&b, &c)));
        prop_assert_eq!(group_mul(&a, &e), a.clone());
        prop_assert_eq!(group_mul(&a, &group_inv(&a)), e.clone());
        let k = group_comm(&a, &b);
        // (a,b) = a⁻¹b⁻¹ab, and it is central
        prop_assert_eq!(&k, &group_mul(&group_mul(&group_inv(&a), &group_inv(&b)), &group_mul(&a, &b)));
        prop_assert_eq!(group_mul(&k, &c), group_mul(&c, &k));
        // squares lie in 𝒢'
        prop_assert!(group_mul(&a, &a).gens().is_empty());
    }

    #[test]
    fn dbasis_round_trip(comms in prop::collection::btree_set((1u32..=5, 1u32..=5), 0..5)) {
        let comms: BTreeSet<Pair> = comms.into_iter().filter_map(|(i, j)| Pair::new(i, j)).collect();
        let g = GroupAlgebra::unbounded().group(GroupNF::new(Vec::new(), comms).unwrap());
        prop_assert_eq!(from_dbasis(&to_dbasis(&g).unwrap()), g);
    }

    #[test]
    fn psi_is_sound_on_ideal_members(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = GroupAlgebra::bounded(SUPPORT);
        let x = a.bracket(&a.bracket(&random_ga(&mut rng, SUPPORT), &random_ga(&mut rng, SUPPORT)), &random_ga(&mut rng, SUPPORT));
        // the 𝒢'-component of an ideal element
        let derived: GroupAlgebraElement = x.terms().filter(|(g, _)| g.gens().is_empty()).map(|(g, c)| (g.clone(), c.clone())).collect_in(GF2);
        if ideal_member(&derived, SUPPORT).unwrap() == IdealVerdict::InIdeal {
            prop_assert!(psi(&to_dbasis(&derived).unwrap()).is_zero());
        }
    }
}

trait CollectIn {
    fn collect_in(self, f: FieldTag) -> GroupAlgebraElement;
}

impl<I: Iterator<Item = (GroupNF, Scalar)>> CollectIn for I {
    fn collect_in(self, f: FieldTag) -> GroupAlgebraElement {
        let mut out = LinComb::zero(f);
        for (g, c) in self {
            out.add_term(g, &c);
        }
        out
    }
}

#[test]
fn triple_commutators_lie_in_ideal() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let a = GroupAlgebra::bounded(SUPPORT);
    for _ in 0..200 {
        let u: Vec<_> = (0..3).map(|_| random_ga(&mut rng, SUPPORT)).collect();
        let x = a.bracket(&a.bracket(&u[0], &u[1]), &u[2]);
        assert_eq!(ideal_member(&x, SUPPORT).unwrap(), IdealVerdict::InIdeal, "{u:?}");
    }
}

#[test]
fn commutator_products_are_congruent_to_sums() {
    let a = GroupAlgebra::bounded(SUPPORT);
    for j in 1..=SUPPORT {
        let others: Vec<u32> = (1..=SUPPORT).filter(|&i| i != j).collect();
        for mask in 1u32..1 << others.len() {
            let set: Vec<u32> = others.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &i)| i).collect();
            let prod = set.iter().fold(a.one(), |acc, &i| a.mul(&acc, &a.group(group_comm(&GroupNF::y(j), &GroupNF::y(i)))));
            let sum = set.iter().fold(LinComb::zero(GF2), |acc, &i| acc.try_add(&d(j, i)).unwrap());
            let diff = a.add(&a.add(&prod, &a.one()), &from_dbasis(&sum));
            assert_eq!(ideal_member(&diff, SUPPORT).unwrap(), IdealVerdict::InIdeal, "j={j} set={set:?}");
        }
    }
}

#[test]
fn acbc_elements_lie_in_ideal() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let alg = GroupAlgebra::bounded(SUPPORT);
    let elem = |rng: &mut ChaCha8Rng| {
        let w: Vec<u32> = (0..rng.gen_range(1..6)).map(|_| rng.gen_range(1..=SUPPORT)).collect();
        to_nf(collect(&w))
    };
    for _ in 0..100 {
        let (a, b, c) = (elem(&mut rng), elem(&mut rng), elem(&mut rng));
        let x = alg.mul(
            &alg.add(&alg.group(group_comm(&a, &c)), &alg.one()),
            &alg.add(&alg.group(group_comm(&b, &c)), &alg.one()),
        );
        assert_eq!(ideal_member(&x, SUPPORT).unwrap(), IdealVerdict::InIdeal, "a={a:?} b={b:?} c={c:?}");
    }
}

#[test]
fn disjoint_commutator_products_are_not_in_ideal() {
    let a = GroupAlgebra::unbounded();
    for ell in 1..=3u32 {
        let x = (1..=ell).fold(a.one(), |acc, i| a.mul(&acc, &c_plus_one(2 * i - 1, 2 * i)));
        assert_eq!(ideal_member(&x, 2 * ell).unwrap(), IdealVerdict::NotInIdeal);
        let t = psi(&to_dbasis(&x).unwrap());
        assert!(!t.is_zero());
        assert_eq!(t.terms().count(), 1);
    }
}

#[test]
fn psi_kills_every_s_generator() {
    for i1 in 1..=8 {
        for i2 in 1..=8 {
            for i3 in 1..=8 {
                for i4 in 1..=8 {
                    assert!(psi(&s_generator(i1, i2, i3, i4)).is_zero(), "({i1},{i2},{i3},{i4})");
                }
            }
        }
    }
}

#[test]
fn psi_of_a_perfect_matching() {
    let x = dpoly_mul(&d(1, 2), &d(3, 4));
    assert_eq!(psi(&x).terms().next().unwrap().0.indices(), &[1, 2, 3, 4]);
}
