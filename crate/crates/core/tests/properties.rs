use std::collections::BTreeSet;

use proptest::prelude::*;

use spets_core::combinatorics::irrep_dimension;
use spets_core::cyclotomic::prime_power;
use spets_core::induction::{j_geen_to_ge1n, j_sum};
use spets_core::invariants::{b_value, fake_degree, is_special, poincare_polynomial};
use spets_core::oracle::OracleGroup;
use spets_core::springer::{springer_reps, springer_type};
use spets_core::symbols::{parse_rows, prec};
use spets_core::*;

fn g(d: usize, e: usize, n: usize) -> GroupSpec {
    GroupSpec::new(d, e, n).unwrap()
}

fn partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1u32..4, 0..3).prop_map(Partition::new)
}

fn multipartition(e: usize) -> impl Strategy<Value = Multipartition> {
    prop::collection::vec(partition(), e).prop_map(Multipartition::new)
}

fn triple() -> impl Strategy<Value = (Multipartition, Multipartition, Multipartition)> {
    (1usize..=4).prop_flat_map(|e| (multipartition(e), multipartition(e), multipartition(e)))
}

/// Every G(de,e,n) with de <= 6 and order at most `bound`.
fn groups_up_to(bound: u128) -> Vec<GroupSpec> {
    let mut out = Vec::new();
    for de in 1..=6 {
        for e in (1..=de).filter(|e| de % e == 0) {
            for n in 1..=5 {
                let grp = g(de / e, e, n);
                if grp.order() <= bound {
                    out.push(grp);
                }
            }
        }
    }
    out
}

proptest! {
    #[test]
    fn add_is_associative_and_commutative((a, b, c) in triple()) {
        let e = a.num_components();
        prop_assert_eq!(a.add(&b).unwrap(), b.add(&a).unwrap());
        prop_assert_eq!(a.add(&b).unwrap().add(&c).unwrap(), a.add(&b.add(&c).unwrap()).unwrap());
        prop_assert_eq!(a.add(&Multipartition::empty(e)).unwrap(), a);
    }

    #[test]
    fn rotating_e_times_by_d_is_the_identity(d in 1usize..=3, e in 1usize..=4, seed in prop::collection::vec(partition(), 12)) {
        let mp = Multipartition::new(seed[..d * e].to_vec());
        let mut x = mp.clone();
        for _ in 0..e {
            x = x.rotate(d);
        }
        prop_assert_eq!(x, mp);
    }

    #[test]
    fn b_c_ignores_shift_and_type((a, _, _) in triple(), extra in 0usize..3) {
        let e = a.num_components();
        let w = Weight::b(e);
        let shape = w.shape(w.min_depth(&a) + 1);
        let base = Presymbol::from_multipartition(&a, SymbolType::new(1, 0), &shape).unwrap();
        for (r, s) in [(1, 1), (2, 0), (2, 1), (3, 1), (3, 3)] {
            let other = Presymbol::from_multipartition(&a, SymbolType::new(r, s), &shape).unwrap();
            prop_assert_eq!(other.b_c(), base.b_c(), "type ({},{})", r, s);
        }
        prop_assert_eq!(base.shifted(extra).b_c(), base.b_c());
    }

    #[test]
    fn prec_is_transitive(rows in 1usize..=6, pts in prop::collection::vec((0usize..6, 0usize..40), 3)) {
        let p: Vec<(usize, usize)> = pts.iter().map(|&(i, j)| (i % rows, j)).collect();
        if prec(rows, p[0], p[1]) && prec(rows, p[1], p[2]) {
            prop_assert!(prec(rows, p[0], p[2]));
        }
    }
}

#[test]
fn stabilizer_times_orbit_size_is_e() {
    for grp in groups_up_to(50_000) {
        for orbit in enumerate_multipartitions(&grp) {
            assert_eq!(orbit.lifts().len() * orbit.stabilizer_order, grp.e, "{grp} {orbit}");
            let distinct: BTreeSet<_> = orbit.lifts().into_iter().collect();
            assert_eq!(distinct.len(), orbit.lifts().len());
        }
    }
}

#[test]
fn conjugation_is_an_involution_up_to_twelve() {
    for n in 0..=12 {
        for p in Partition::all(n) {
            assert_eq!(p.conjugate().conjugate(), p);
        }
    }
}

#[test]
fn squared_dimensions_sum_to_the_group_order() {
    for grp in groups_up_to(5000) {
        let mut total = 0u128;
        for orbit in enumerate_multipartitions(&grp) {
            let s = orbit.stabilizer_order as u128;
            let full = irrep_dimension(&orbit.representative);
            assert_eq!(full % s, 0);
            total += s * (full / s) * (full / s);
        }
        assert_eq!(total, grp.order(), "{grp}");
    }
}

#[test]
fn prec_is_a_strict_total_order_on_small_shapes() {
    // Every shape with at most 30 positions sits inside one of these rectangles.
    for rows in 1..=6usize {
        for cols in 1..=30usize {
            let pos: Vec<(usize, usize)> = (0..rows).flat_map(|i| (0..cols).map(move |j| (i, j))).collect();
            for &a in &pos {
                assert!(!prec(rows, a, a));
                for &b in &pos {
                    if a != b {
                        assert!(prec(rows, a, b) ^ prec(rows, b, a), "{a:?} {b:?} rows={rows}");
                    }
                }
            }
            if rows * cols <= 30 {
                for &a in &pos {
                    for &b in &pos {
                        for &c in &pos {
                            if prec(rows, a, b) && prec(rows, b, c) {
                                assert!(prec(rows, a, c));
                            }
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn print_then_parse_is_the_identity() {
    for e in 1..=4 {
        for n in 0..=5 {
            for mp in Multipartition::all(e, n) {
                assert_eq!(Multipartition::parse(&mp.to_string(), Some(e)).unwrap(), mp);
                let w = Weight::b(e);
                let p = Presymbol::from_multipartition(&mp, SymbolType::new(1, 0), &w.shape(w.min_depth(&mp))).unwrap();
                let back = Presymbol::new(SymbolType::new(1, 0), parse_rows(&p.to_string()).unwrap()).unwrap();
                assert_eq!(back, p);
            }
        }
    }
}

#[test]
fn fake_degrees_are_positive_and_give_dimensions() {
    for grp in groups_up_to(5000) {
        for orbit in enumerate_multipartitions(&grp) {
            let r = fake_degree(&grp, &orbit.representative).unwrap();
            assert!(r.has_nonnegative_coefficients(), "{grp} {orbit}: {r}");
            assert_eq!(r.eval_at_one() as u128, orbit.component_dimension(), "{grp} {orbit}");
        }
    }
}

#[test]
fn oracle_fake_degrees_sum_to_the_poincare_polynomial() {
    for grp in [g(1, 2, 2), g(2, 1, 2), g(1, 3, 2), g(1, 2, 3)] {
        let oracle = OracleGroup::new(&grp, 5000).unwrap();
        let mut sum = LaurentPoly::zero();
        for orbit in enumerate_multipartitions(&grp) {
            // The oracle sees the restricted character, which is the sum of all components.
            let r = oracle.fake_degree(&orbit.representative).unwrap();
            sum = &sum + &r.scale(orbit.component_dimension() as i128);
        }
        assert_eq!(sum, poincare_polynomial(&grp), "{grp}");
    }
}

#[test]
fn j_sum_adds_b_values() {
    for e in 1..=3 {
        for n1 in 0..=5u32 {
            for n2 in 0..=5 - n1 {
                for a in Multipartition::all(e, n1) {
                    for b in Multipartition::all(e, n2) {
                        let s = j_sum(&a, &b).unwrap();
                        let ba = b_value(&GroupSpec::ge1n(e, n1 as usize).unwrap(), &a).unwrap();
                        let bb = b_value(&GroupSpec::ge1n(e, n2 as usize).unwrap(), &b).unwrap();
                        let bs = b_value(&GroupSpec::ge1n(e, (n1 + n2) as usize).unwrap(), &s).unwrap();
                        assert_eq!(bs, ba + bb, "{a} + {b}");
                    }
                }
            }
        }
    }
}

#[test]
fn distinguished_orbits_have_exactly_one_good_lift() {
    for e in 2..=4 {
        for n in 0..=4 {
            let grp = GroupSpec::geen(e, n).unwrap();
            for orbit in enumerate_multipartitions(&grp) {
                for r in 1..=2 {
                    let sym = Symbol::new(&grp, &orbit.representative, SymbolType::new(r, 0), &Weight::d(e)).unwrap();
                    if !sym.is_distinguished() {
                        continue;
                    }
                    let lift = j_geen_to_ge1n(&orbit, r).unwrap();
                    assert!(orbit.lifts().contains(&lift));
                    let in_b = Symbol::of(&lift, SymbolType::new(r, r), &Weight::b(e)).unwrap();
                    assert!(in_b.is_distinguished(), "{orbit} r={r}: {lift}");
                }
            }
        }
    }
}

#[test]
fn springer_sets_contain_the_specials() {
    let mut cases = Vec::new();
    for e in 1..=4 {
        for n in 1..=4 {
            cases.push((GroupSpec::ge1n(e, n).unwrap(), LatticeKind::L1));
            cases.push((GroupSpec::ge1n(e, n).unwrap(), LatticeKind::L2));
            if e >= 2 && n >= 3 {
                cases.push((GroupSpec::geen(e, n).unwrap(), LatticeKind::L2));
                if prime_power(e).is_none() {
                    cases.push((GroupSpec::geen(e, n).unwrap(), LatticeKind::L1));
                }
            }
        }
    }
    for (grp, lattice) in cases {
        let reps: BTreeSet<Multipartition> = springer_reps(&grp, lattice)
            .unwrap()
            .into_iter()
            .map(|l| l.multipartition().clone())
            .collect();
        for orbit in enumerate_multipartitions(&grp) {
            if is_special(&grp, &orbit.representative).unwrap() {
                assert!(reps.contains(&orbit.representative), "{grp} {lattice}: {orbit}");
            }
        }
    }
}

/// Monotonicity read straight off the definition of the order: sort the
/// positions with a comparison sort driven by `prec` alone.
fn monotone_by_hand(p: &Presymbol) -> bool {
    let rows = p.rows().len();
    let mut pos: Vec<(usize, usize)> = p
        .rows()
        .iter()
        .enumerate()
        .flat_map(|(i, r)| (0..r.len()).map(move |j| (i, j)))
        .collect();
    pos.sort_by(|&a, &b| {
        if prec(rows, a, b) {
            std::cmp::Ordering::Less
        } else if prec(rows, b, a) {
            std::cmp::Ordering::Greater
        } else {
            std::cmp::Ordering::Equal
        }
    });
    pos.windows(2).all(|w| p.entry(w[0]) <= p.entry(w[1]))
}

#[test]
fn springer_set_of_b_n_by_brute_force() {
    for n in 1..=6 {
        let grp = GroupSpec::ge1n(2, n).unwrap();
        assert_eq!(springer_type(&grp, LatticeKind::L1).unwrap(), SymbolType::new(2, 0));
        let w = Weight::b(2);
        let brute = Multipartition::all(2, n as u32)
            .into_iter()
            .filter(|mp| {
                let p = Presymbol::from_multipartition(mp, SymbolType::new(2, 0), &w.shape(w.min_depth(mp))).unwrap();
                monotone_by_hand(&p)
            })
            .count();
        assert_eq!(springer_reps(&grp, LatticeKind::L1).unwrap().len(), brute, "n={n}");
    }
}

#[test]
fn weight_d_comparison_needs_the_rotated_symbol() {
    // For α = ([1],∅) in G(2,1,1), the unrotated weight-d symbol (1|0) has
    // a^c = b = 0 without being monotone; its rotation (0|1) is monotone.
    let alpha = Multipartition::parse("1|-", Some(2)).unwrap();
    let b = b_value(&GroupSpec::ge1n(2, 1).unwrap(), &alpha).unwrap();
    let p = Presymbol::from_multipartition(&alpha, SymbolType::new(1, 0), &Weight::d(2).shape(1)).unwrap();
    assert_eq!(p.to_string(), "1|0");
    assert_eq!((p.a_c(), b), (0, 0));
    assert!(!p.is_monotone());
    assert!(p.rotate().is_monotone());
    assert_eq!(p.rotate().a_c(), 0);
    let s1 = Presymbol::from_multipartition(&alpha, SymbolType::new(1, 1), &Weight::d(2).shape(1)).unwrap();
    assert_eq!(s1.a_c(), 1);
}
