mod common;

use ordact_core::*;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// The minimal globalization, or `None` when the construction breaks only
/// the order axiom.
fn minimal_or_order_failure(a: &POAction) -> Result<Option<Globalization>, TestCaseError> {
    match build_minimal_globalization(a) {
        Ok(g) => Ok(Some(g)),
        Err(Error::NotOrdered(r)) => {
            prop_assert!(r.violations().iter().all(|v| v.clause == Clause::PO), "{}", r);
            Ok(None)
        }
        Err(e) => Err(TestCaseError::fail(e.to_string())),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn unital_actions_globalize(seed in any::<u64>()) {
        let a = common::random_action(&mut ChaCha8Rng::seed_from_u64(seed));
        match build_globalization(&a) {
            Ok(glob) => {
                prop_assert!(a.is_unital());
                let r = glob.verify();
                prop_assert!(r.is_ok(), "{}", r);
                let c = glob.construction_report().unwrap();
                prop_assert!(c.is_ok(), "{}", c);
            }
            Err(Error::NotUnital(_)) => prop_assert!(!a.is_unital()),
            Err(e) => prop_assert!(false, "{}", e),
        }
    }

    #[test]
    fn minimal_globalization_is_no_larger(seed in any::<u64>()) {
        let a = common::random_action(&mut ChaCha8Rng::seed_from_u64(seed));
        if !a.is_unital() || !a.is_strong() || !a.groupoid().is_pseudoassociative() {
            return Ok(());
        }
        let full = build_globalization(&a).unwrap();
        let Some(min) = minimal_or_order_failure(&a)? else { return Ok(()) };
        let r = min.verify();
        prop_assert!(r.is_ok(), "{}", r);
        for (m, f) in min.dims().iter().zip(full.dims()) {
            prop_assert!(*m <= f);
        }
        prop_assert!(min.global().carrier().dim() <= full.global().carrier().dim());
    }

    #[test]
    fn minimal_globalization_gives_a_morita_context(seed in any::<u64>()) {
        let a = common::random_action(&mut ChaCha8Rng::seed_from_u64(seed));
        if !a.is_unital() || !a.is_strong() || !a.groupoid().is_pseudoassociative() {
            return Ok(());
        }
        let Some(min) = minimal_or_order_failure(&a)? else { return Ok(()) };
        let m = morita_context(&a, &min).unwrap();
        prop_assert!(m.is_ok(), "{}", m.report);
    }
}
