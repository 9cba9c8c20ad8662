mod common;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tdesign::codes::{weight_distribution_bruteforce, DEFAULT_BUDGET};
use tdesign::spectra::{macwilliams_naive, macwilliams_transform};

#[test]
fn involution_on_fifty_random_cyclic_codes() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut by_field = [0usize; 2];
    for _ in 0..50 {
        let c = common::small_random_cyclic(&mut rng, 1 << 16);
        by_field[(c.q() == 3) as usize] += 1;
        let side = if c.dim() * 2 <= c.len() { c.clone() } else { c.dual() };
        let wd = weight_distribution_bruteforce(&side, DEFAULT_BUDGET).unwrap();
        let dual = macwilliams_transform(&wd).unwrap();
        assert_eq!(macwilliams_transform(&dual).unwrap(), wd);
        assert_eq!(macwilliams_naive(&wd).unwrap(), dual);
        if side.dual().size() <= 1 << 16 {
            assert_eq!(weight_distribution_bruteforce(&side.dual(), DEFAULT_BUDGET).unwrap(), dual);
        }
    }
    assert!(by_field[0] > 0 && by_field[1] > 0, "both fields sampled: {by_field:?}");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn transform_matches_enumerated_dual(seed in any::<u64>(), q in prop::sample::select(vec![2u32, 3, 5]), v in 2usize..12, k in 1usize..6) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let c = common::random_code(&mut rng, q, v, k.min(v));
        let wd = weight_distribution_bruteforce(&c, DEFAULT_BUDGET).unwrap();
        let dual = weight_distribution_bruteforce(&c.dual(), DEFAULT_BUDGET).unwrap();
        prop_assert_eq!(macwilliams_transform(&wd).unwrap(), dual);
    }
}
