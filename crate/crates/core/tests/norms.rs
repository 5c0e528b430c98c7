use proptest::prelude::*;
use tdamarket_core::geometry::WindowCloud;
use tdamarket_core::norms::{compute_norm_series, window_indicators, MaxScale};
use tdamarket_testkit::synth;

fn window(seed: u64, t: usize) -> (Vec<Vec<f64>>, WindowCloud) {
    let pts = synth::random_cloud(&mut synth::rng(seed), 14, 4);
    let cloud = WindowCloud::from_points(&pts, t).unwrap();
    (pts, cloud)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn indicators_are_homogeneous_of_degree_two(seed in any::<u64>(), c in 0.1f64..20.0) {
        let (_, cloud) = window(seed, 0);
        let a = window_indicators(&cloud, MaxScale::Auto).unwrap();
        let b = window_indicators(&cloud.scaled(c), MaxScale::Auto).unwrap();
        prop_assert!(a.l0 >= 0.0 && a.l1 >= 0.0);
        prop_assert!((b.l0 - c * c * a.l0).abs() <= 1e-9 * b.l0.max(1e-300));
        prop_assert!((b.l1 - c * c * a.l1).abs() <= 1e-9 * b.l1.max(1e-300));
    }

    #[test]
    fn asset_order_does_not_matter(seed in any::<u64>()) {
        let (pts, cloud) = window(seed, 0);
        let permuted: Vec<Vec<f64>> = pts.iter().map(|p| vec![p[2], p[0], p[3], p[1]]).collect();
        let a = window_indicators(&cloud, MaxScale::Auto).unwrap();
        let b = window_indicators(&WindowCloud::from_points(&permuted, 0).unwrap(), MaxScale::Auto).unwrap();
        prop_assert!((a.l0 - b.l0).abs() <= 1e-12 * a.l0.max(1.0));
        prop_assert!((a.l1 - b.l1).abs() <= 1e-12 * a.l1.max(1.0));
    }

    #[test]
    fn series_is_windowwise(seed in any::<u64>()) {
        let windows: Vec<WindowCloud> = (0..5).map(|t| window(seed.wrapping_add(t as u64), t).1).collect();
        let series = compute_norm_series(&windows, MaxScale::Auto).unwrap();
        for (i, w) in windows.iter().enumerate() {
            let alone = window_indicators(w, MaxScale::Auto).unwrap();
            prop_assert_eq!(series.rows[i].t, i);
            prop_assert_eq!(series.rows[i].l0, alone.l0);
            prop_assert_eq!(series.rows[i].l1, alone.l1);
            if i > 0 {
                prop_assert_eq!(series.rows[i].c1, Some(2.0 * alone.l1 - series.rows[i - 1].l1));
            }
        }
        prop_assert_eq!(series.rows[0].c1, None);
    }
}
