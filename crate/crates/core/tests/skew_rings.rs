mod common;

use ordact_core::fixtures;
use ordact_core::*;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn ordered(a: &POAction) -> OrderedSkewRing {
    build_ordered_skew(build_skew(a).unwrap()).unwrap()
}

#[test]
fn unital_fixtures_have_associative_skew_rings() {
    for a in [
        fixtures::swap_global_action(),
        fixtures::swap_restriction().0,
        fixtures::nested_loops_action(),
        fixtures::brandt_partial_action().to_groupoid_action().unwrap(),
    ] {
        let s = build_skew(&a).unwrap();
        let r = s.associativity_report();
        assert!(r.is_ok(), "{r}");
        assert!(s.grading_report().is_ok());
    }
    for a in [fixtures::brandt_swap_action(), fixtures::brandt_partial_action()] {
        assert!(build_inv_sgp_skew_ring(&a).unwrap().is_associative());
    }
}

#[test]
fn non_unital_action_breaks_associativity() {
    let s = build_skew(&fixtures::non_associative_action()).unwrap();
    assert!(!s.associativity_report().is_ok());
    assert!(s.grading_report().is_ok());
    assert!(matches!(build_ordered_skew(s), Err(Error::NotAssociative(_))));
}

#[test]
fn ordered_quotients_match_the_oracle() {
    for a in [fixtures::swap_restriction().0, fixtures::nested_loops_action(), fixtures::swap_global_action()] {
        let o = ordered(&a);
        assert_eq!(o.dim(), common::naive_quotient_dim(o.skew(), &a.groupoid().strict_pairs()));
        let one = skew_unit(&o).unwrap();
        assert!(o.is_identity(&one));
    }
}

#[test]
fn swap_restriction_skew_dimensions() {
    // Pieces: A_{r(s)} = 2, A_{d(s)} = A_s = A_{s^-1} = A_e = 1.
    let o = ordered(&fixtures::swap_restriction().0);
    assert_eq!(o.skew().dim(), 6);
    assert_eq!(o.n_ideal().rank(), 6 - o.dim());
}

#[test]
fn trivially_ordered_groupoid_has_no_relations() {
    let a = POAction::trivial(fixtures::order_two_group(), fixtures::dual_numbers()).unwrap();
    let o = ordered(&a);
    assert!(o.n_ideal().is_zero());
    assert_eq!(o.dim(), 4);
    assert_eq!(skew_unit(&o).unwrap(), o.project(&o.skew().element(0, &[1, 0]).unwrap()).unwrap());
}

#[test]
fn missing_units_are_reported() {
    let o = build_ordered_skew(build_skew(&fixtures::dual_number_action()).unwrap()).unwrap();
    assert!(skew_unit(&o).is_ok());
    let s = build_skew(&POAction::trivial(fixtures::order_two_group(), fixtures::truncated_nilpotent()).unwrap()).unwrap();
    assert!(matches!(s.unit_sum(), Err(Error::NotPreunital(_))));
}

fn semigroup_strict(s: &InverseSemigroup) -> Vec<(usize, usize)> {
    (0..s.len()).flat_map(|x| (0..s.len()).map(move |y| (x, y))).filter(|&(x, y)| x != y && s.natural_leq(x, y)).collect()
}

#[test]
fn semigroup_quotients_match_the_oracle() {
    let p = fixtures::p5();
    let cases = [
        InvSgpAction::trivial(fixtures::semilattice(), Algebra::pointwise(p, 2)).unwrap(),
        InvSgpAction::trivial(fixtures::symmetric_inverse_monoid_one(), Algebra::pointwise(p, 2)).unwrap(),
        fixtures::brandt_swap_action(),
        fixtures::brandt_partial_action(),
    ];
    for a in cases {
        let o = build_inv_sgp_skew(&a).unwrap();
        assert_eq!(o.dim(), common::naive_quotient_dim(o.skew(), &semigroup_strict(a.semigroup())));
    }
}

#[test]
fn semilattice_collapses_to_the_top() {
    let a = InvSgpAction::trivial(fixtures::semilattice(), fixtures::dual_numbers()).unwrap();
    let o = build_inv_sgp_skew(&a).unwrap();
    assert_eq!(o.dim(), 2);
    let one = o.quotient().identity_of(&Subspace::full(fixtures::p5(), 2)).unwrap();
    assert!(one.is_some());
}

#[test]
fn one_element_semigroup_gives_the_algebra() {
    let s = InverseSemigroup::from_names(&["1"], &[vec!["1"]]).unwrap();
    let a = InvSgpAction::trivial(s, fixtures::dual_numbers()).unwrap();
    let o = build_inv_sgp_skew(&a).unwrap();
    let (q, d) = (o.quotient(), fixtures::dual_numbers());
    assert_eq!(q.dim(), 2);
    for i in 0..2 {
        for j in 0..2 {
            assert_eq!(q.basis_product(i, j), d.basis_product(i, j));
        }
    }
}

#[test]
fn non_unital_semigroup_action_has_no_ordered_skew_ring() {
    assert!(matches!(build_inv_sgp_skew(&fixtures::dual_number_semigroup_action()), Err(Error::NotUnital(_))));
}

fn random_permutation(rng: &mut ChaCha8Rng, n: usize) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    perm
}

#[test]
fn quotient_dimension_ignores_arrow_order() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for a in [fixtures::swap_restriction().0, fixtures::nested_loops_action()] {
        let dim = ordered(&a).dim();
        for _ in 0..10 {
            let perm = random_permutation(&mut rng, a.groupoid().len());
            assert_eq!(ordered(&a.relabel(&perm).unwrap()).dim(), dim);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn unital_actions_have_associative_graded_skew_rings(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = common::random_action(&mut rng);
        let s = build_skew(&a).unwrap();
        prop_assert!(s.grading_report().is_ok());
        if a.is_unital() {
            prop_assert!(s.is_associative());
            let o = build_ordered_skew(s).unwrap();
            prop_assert_eq!(o.dim(), common::naive_quotient_dim(o.skew(), &a.groupoid().strict_pairs()));
            prop_assert!(o.is_identity(&skew_unit(&o).unwrap()));
            let perm = random_permutation(&mut rng, a.groupoid().len());
            prop_assert_eq!(ordered(&a.relabel(&perm).unwrap()).dim(), o.dim());
        }
    }
}
