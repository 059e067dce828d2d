//! Invariants of the horizontality detector on the four-punctured-sphere stretch path.

use proptest::prelude::*;
use stretch_core::horizon::{check_horizontal, HorizontalQuery, Horizontality, HorizontalityCertificate, Leaf, Window};
use stretch_core::hyp2::{dist, MoebiusMap};
use stretch_core::shear::{build_s04_example, curve_length, ShearSurface, StretchPath};
use stretch_core::slopes::{slope_to_word, Slope};

const EPS_B: f64 = 1.762_747_174_039_086;

const LEAVES: [&str; 5] = ["1/0", "1/1", "-1/1", "1/2", "1/3"];
const ALPHAS: [&str; 8] = ["1/0", "1/1", "-1/1", "1/2", "3/1", "5/1", "-6/1", "2/3"];

fn setup(eps: f64, t: f64, leaf: &str, alpha: &str, n: usize, l: f64) -> (ShearSurface<f64>, HorizontalQuery<f64>) {
    let x = StretchPath::new(build_s04_example(eps).unwrap()).unwrap().at(t);
    let leaf = Leaf::Word(slope_to_word(&leaf.parse().unwrap(), &x).unwrap());
    let q = HorizontalQuery::new(alpha.parse().unwrap(), Slope::new(0, 1).unwrap(), leaf, n, l, EPS_B)
        .with_window(Window::Periods(2));
    (x, q)
}

fn any_certificate(h: &Horizontality<f64>) -> Option<&HorizontalityCertificate<f64>> {
    match h {
        Horizontality::Certified(c) => Some(c),
        Horizontality::NotFound { best, .. } => best.as_ref(),
    }
}

fn case() -> impl Strategy<Value = (f64, f64, &'static str, &'static str, usize, f64)> {
    (
        -3.0..-1.0_f64,
        0.0..1.0_f64,
        prop::sample::select(LEAVES.to_vec()),
        prop::sample::select(ALPHAS.to_vec()),
        1usize..10,
        0.0..8.0_f64,
    )
        .prop_map(|(le, t, leaf, alpha, n, l)| (10f64.powf(le), t, leaf, alpha, n, l))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn certificates_recheck_exactly((eps, t, leaf, alpha, n, l) in case()) {
        let (x, q) = setup(eps, t, leaf, alpha, n, l);
        let h = check_horizontal(&x, &q).unwrap();
        if let Some(c) = any_certificate(&h) {
            prop_assert!(c.validate());
            let spaced = c.points.windows(2).all(|w| dist(&w[0].p, &w[1].p) >= c.l);
            let close = c.points.iter().all(|w| dist(&w.p, &w.q) <= c.eps_b);
            prop_assert_eq!((spaced, close), (c.check().h1, c.check().h2));
            prop_assert_eq!(h.is_certified(), c.n >= n);
        }
    }

    #[test]
    fn weaker_requests_still_certify((eps, t, leaf, alpha, n, l) in case()) {
        let (x, q) = setup(eps, t, leaf, alpha, n, l);
        if let Horizontality::Certified(c) = check_horizontal(&x, &q).unwrap() {
            for (n2, l2) in [(n.saturating_sub(1).max(1), l), (n, l / 2.0), (1, 0.0)] {
                let weaker = HorizontalQuery { n: n2, l: l2, ..q.clone() };
                prop_assert!(check_horizontal(&x, &weaker).unwrap().is_certified(), "({}, {}) from {}", n2, l2, c.n);
            }
        }
    }

    #[test]
    fn json_round_trip_is_exact((eps, t, leaf, alpha, n, l) in case()) {
        let (x, q) = setup(eps, t, leaf, alpha, n, l);
        if let Some(c) = any_certificate(&check_horizontal(&x, &q).unwrap()) {
            let back = HorizontalityCertificate::<f64>::from_json(&c.to_json()).unwrap();
            prop_assert_eq!(&back, c);
        }
    }

    #[test]
    fn sliding_along_the_leaf_preserves_certificates((eps, t, leaf, alpha, n, l) in case(), k in -2i32..=2) {
        let (x, q) = setup(eps, t, leaf, alpha, n, l);
        let Leaf::Word(w) = &q.leaf else { unreachable!() };
        // the leaf's own holonomy acts on the leaf frame as z ↦ e^{kℓ} z
        let shift = MoebiusMap::translation(f64::from(k) * curve_length(&x, w).unwrap());
        if let Some(c) = any_certificate(&check_horizontal(&x, &q).unwrap()) {
            let moved = c.transform(&shift).unwrap();
            prop_assert!(moved.check_with_slack(1e-9).passed());
            prop_assert!(moved.incidence_error() < 1e-6);
            prop_assert!((moved.min_spacing() - c.min_spacing()).abs() < 1e-6 || c.n < 2);
        }
    }
}
