mod common;

use ordact_core::*;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn holds(a: &POAction, c: &POAction, w: &EquivalenceWitness) -> bool {
    verify_equivalence(a, c, w).is_ok_and(|r| r.is_ok())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn equivalence_is_an_equivalence_relation(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = common::random_action(&mut rng);
        let (p, n) = (a.carrier().modulus(), a.carrier().dim());
        prop_assert!(holds(&a, &a, &EquivalenceWitness::identity(&a)));
        let (b, w) = common::transport(&a, &common::random_invertible(&mut rng, p, n));
        prop_assert!(holds(&a, &b, &w));
        prop_assert!(holds(&b, &a, &w.inverse().unwrap()));
        let (c, v) = common::transport(&b, &common::random_invertible(&mut rng, p, n));
        prop_assert!(holds(&a, &c, &w.then(&v).unwrap()));
    }

    #[test]
    fn search_agrees_with_transport(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = common::random_action(&mut rng);
        let (p, n) = (a.carrier().modulus(), a.carrier().dim());
        let (b, _) = common::transport(&a, &common::random_invertible(&mut rng, p, n));
        match search_equivalence(&a, &b, 200_000) {
            Ok(SearchOutcome::Found(w)) => prop_assert!(holds(&a, &b, &w)),
            Ok(other) => prop_assert!(false, "equivalent actions reported as {:?}", other),
            Err(Error::BudgetExceeded(_)) => {}
            Err(e) => prop_assert!(false, "{}", e),
        }
    }
}
