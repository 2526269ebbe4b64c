mod common;

use common::*;
use dgn_ainfty::h0_category;
use dgn_nerve::homotopy_category_dim;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    /// `h(N(D))(x, y)` and `H⁰Hom(x, y)` have the same dimension for every pair.
    #[test]
    fn homotopy_category_of_the_nerve_is_h0(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let c = chain_category(&mut rng, 3);
        let h = h0_category(&c).unwrap();
        for x in 0..3 {
            for y in 0..3 {
                prop_assert_eq!(homotopy_category_dim(&c, x, y).unwrap(), h.dim(x, y));
            }
        }
    }
}

#[test]
fn homotopy_category_over_a_non_dg_category() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let (_, _, g) = gauged(&mut rng, 4);
    let h = h0_category(&g).unwrap();
    for x in 0..4 {
        for y in 0..4 {
            assert_eq!(homotopy_category_dim(&g, x, y).unwrap(), h.dim(x, y));
        }
    }
}
