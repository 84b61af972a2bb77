//! Classification does not depend on coordinates.

use cubic_lines::sample::{murre_pair, random_transform, LineKind};
use cubic_lines_core::classify::{classify, fano_tangent_space, m_curve_jacobian_rank, ClassifyOptions};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn kind() -> impl Strategy<Value = LineKind> {
    prop_oneof![Just(LineKind::Any), Just(LineKind::SecondType), Just(LineKind::Triple)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn invariants_survive_a_change_of_coordinates(seed in any::<u64>(), kind in kind()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (x, l) = murre_pair(&mut rng, kind, 3, false);
        let g = random_transform(&mut rng);
        let (y, m) = (x.transform(&g), g.inverse().apply_line(&l));
        prop_assert!(y.contains_line(&m));
        let opts = ClassifyOptions { check_smooth: false, ..Default::default() };
        let (a, b) = (classify(&x, &l, &opts), classify(&y, &m, &opts));
        prop_assert_eq!(a.is_ok(), b.is_ok());
        if let (Ok(a), Ok(b)) = (a, b) {
            prop_assert_eq!(a.is_second_type(), b.is_second_type());
            prop_assert_eq!(a.is_triple(), b.is_triple());
            if a.is_second_type() {
                prop_assert_eq!(m_curve_jacobian_rank(&x, &l).unwrap(), m_curve_jacobian_rank(&y, &m).unwrap());
            }
        }
        prop_assert_eq!(fano_tangent_space(&x, &l).unwrap().0, fano_tangent_space(&y, &m).unwrap().0);
    }
}
