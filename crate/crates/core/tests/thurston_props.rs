//! Invariants of the Thurston-metric estimators.

use proptest::prelude::*;
use stretch_core::shear::{build_s11, stretch, ShearSurface, StretchPath, SurfaceKind};
use stretch_core::slopes::slope_word;
use stretch_core::thurston::{sup_length_ratio, twist, TwistMethod, TwistTarget};

fn torus() -> impl Strategy<Value = ShearSurface<f64>> {
    (-2.5..2.5_f64, -2.5..2.5_f64)
        .prop_filter("third shear too large", |(a, b)| (a + b).abs() <= 2.5)
        .prop_map(|(a, b)| build_s11(a, b, -(a + b)).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn ratio_to_itself_is_zero(x in torus()) {
        let r = sup_length_ratio(&x, &x, 10).unwrap();
        prop_assert!(r.log_ratio.abs() < 1e-12);
    }

    #[test]
    fn ratio_grows_with_the_catalog(x in torus(), t in 0.1..1.5_f64) {
        let y = stretch(&StretchPath::new(x.clone()).unwrap(), t);
        let small = sup_length_ratio(&x, &y, 5).unwrap().log_ratio;
        let large = sup_length_ratio(&x, &y, 15).unwrap().log_ratio;
        prop_assert!(large >= small - 1e-12);
        prop_assert!(large <= t + 1e-9);
    }

    #[test]
    fn twist_methods_agree(x in torus(), t in 0.0..2.0_f64, p in 1i64..4) {
        let y = stretch(&StretchPath::new(x.clone()).unwrap(), t);
        let gamma = slope_word(&format!("{p}/1").parse().unwrap(), SurfaceKind::S11).unwrap();
        for e in 0..3 {
            let a = twist(&y, &gamma, TwistTarget::Edge(e), TwistMethod::ProjectionFormula);
            let b = twist(&y, &gamma, TwistTarget::Edge(e), TwistMethod::FundamentalDomainCount);
            if let (Ok(a), Ok(b)) = (a, b) {
                prop_assert!((a.value - b.value).abs() <= 3.0, "edge {e}: {} vs {}", a.value, b.value);
            }
        }
    }
}
