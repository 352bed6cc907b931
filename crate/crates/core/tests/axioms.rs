mod common;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::*;

#[test]
fn fixtures_satisfy_the_axioms() {
    for (name, c) in category_fixtures() {
        assert!(c.validate().is_ok(), "{name}");
        assert!(is_category(&c), "{name}");
    }
    for (name, c) in fcategory_fixtures() {
        c.validate().unwrap_or_else(|e| panic!("{name}: {e}"));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn corrupted_category_names_a_real_violation(seed in any::<u64>(), which in 0usize..16) {
        let fixtures = category_fixtures();
        let (name, c) = &fixtures[which % fixtures.len()];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (desc, bad) = corrupt_category(&mut rng, c);
        let v = bad.validate();
        prop_assert!(v.is_err(), "{name}: {desc} accepted");
        let v = v.unwrap_err();
        prop_assert!(recheck(&bad, &v), "{name}: {desc}: {v} does not hold");
    }

    #[test]
    fn corrupted_fcategory_is_rejected_by_name(seed in any::<u64>(), which in 0usize..16) {
        let fixtures = fcategory_fixtures();
        let (name, c) = &fixtures[which % fixtures.len()];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let words = vocabulary(c);
        for _ in 0..50 {
            if let Some((desc, built)) = corrupt_fcategory(&mut rng, c) {
                let err = built.err();
                prop_assert!(err.is_some(), "{name}: {desc} accepted");
                let msg = err.unwrap().to_string();
                prop_assert!(words.iter().any(|w| msg.contains(w.as_str())), "{name}: {desc}: unlocated {msg}");
                return Ok(());
            }
        }
    }
}
