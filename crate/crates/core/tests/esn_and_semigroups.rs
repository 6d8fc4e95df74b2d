mod common;

use ordact_core::fixtures;
use ordact_core::*;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn semigroup_round_trips() {
    for s in [fixtures::semilattice(), fixtures::symmetric_inverse_monoid_one(), fixtures::brandt()] {
        let back = esn_to_semigroup(&esn_to_groupoid(&s).unwrap()).unwrap();
        assert_eq!(back.table(), s.table());
        assert_eq!(back, s);
    }
}

#[test]
fn groupoid_round_trips() {
    for g in [fixtures::arrow_over_bottom(), fixtures::nested_loops()] {
        assert_eq!(esn_to_groupoid(&esn_to_semigroup(&g).unwrap()).unwrap(), g);
    }
}

#[test]
fn brandt_groupoid_has_trivial_order_above_zero() {
    let g = esn_to_groupoid(&fixtures::brandt()).unwrap();
    let zero = g.index_of("0").unwrap();
    assert!(g.is_object(zero));
    assert_eq!(g.objects().count(), 3);
    for x in g.arrows() {
        assert!(g.leq(zero, x) || !g.is_object(x));
    }
    let a = g.index_of("a").unwrap();
    assert_eq!(g.comp(a, g.inv(a)), g.index_of("aa^-1"));
}

#[test]
fn partial_brandt_action_globalizes() {
    let a = fixtures::brandt_partial_action();
    let glob = globalize_inverse_semigroup_action(&a).unwrap();
    let r = glob.verify();
    assert!(r.is_ok(), "{r}");
    assert!(glob.global().is_global());
    assert!(glob.global().validate().is_ok());
}

#[test]
fn global_brandt_action_is_its_own_globalization() {
    let a = fixtures::brandt_swap_action();
    let identity = a.semigroup().idempotents().map(|e| (e, LinMap::identity(a.ideal(e).clone()))).collect();
    assert!(verify_semigroup_globalization(&a, &a, &identity).is_ok());
    assert!(globalize_inverse_semigroup_action(&a).unwrap().verify().is_ok());
}

#[test]
fn non_unital_semigroup_action_has_no_globalization() {
    let a = fixtures::dual_number_semigroup_action();
    assert!(a.is_preunital());
    assert!(matches!(globalize_inverse_semigroup_action(&a), Err(Error::NotUnital(_))));
}

#[test]
fn brandt_globalization_gives_a_morita_context() {
    for a in [fixtures::brandt_partial_action(), fixtures::brandt_swap_action()] {
        let glob = globalize_inverse_semigroup_action(&a).unwrap();
        let m = morita_context_inv_sgp(&a, &glob).unwrap();
        assert!(m.is_ok(), "{}", m.report);
    }
}

#[test]
fn tampered_semigroup_globalization_is_rejected() {
    let a = fixtures::brandt_partial_action();
    let glob = globalize_inverse_semigroup_action(&a).unwrap();
    let mut embeddings = glob.embeddings().clone();
    let e = a.semigroup().index_of("aa^-1").unwrap();
    let f = a.semigroup().index_of("a^-1a").unwrap();
    let swapped = embeddings[&f].clone();
    embeddings.insert(e, swapped);
    assert!(!verify_semigroup_globalization(&a, glob.global(), &embeddings).is_ok());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn esn_round_trip_on_random_semigroups(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (s, _) = common::random_partial_bijections(&mut rng, 3, 12);
        let g = esn_to_groupoid(&s).unwrap();
        prop_assert!(g.is_inductive());
        prop_assert!(g.is_pseudoassociative());
        prop_assert_eq!(esn_to_semigroup(&g).unwrap(), s);
        prop_assert_eq!(esn_to_groupoid(&esn_to_semigroup(&g).unwrap()).unwrap(), g);
    }

    #[test]
    fn pushforward_actions_transfer_to_semigroups(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = common::random_prime(&mut rng);
        let coeff = common::random_coefficients(&mut rng);
        let (s, elems) = common::random_partial_bijections(&mut rng, 3, 8);
        let beta = common::pushforward_action(p, coeff, &s, &elems);
        let sg = InvSgpAction::from_groupoid_action(&beta, &s).unwrap();
        prop_assert!(sg.validate().is_ok());
        prop_assert!(sg.is_global());
        prop_assert_eq!(sg.to_groupoid_action().unwrap(), beta);
    }
}
