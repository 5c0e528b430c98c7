use proptest::prelude::*;
use tdamarket_core::landscape::Landscape;
use tdamarket_testkit::{adaptive_simpson, kth_largest_tent, synth};

fn support(bars: &[(f64, f64)]) -> (f64, f64) {
    let lo = bars.iter().map(|b| b.0).fold(f64::INFINITY, f64::min);
    let hi = bars.iter().map(|b| b.1).fold(f64::NEG_INFINITY, f64::max);
    (lo, hi)
}

#[test]
fn square_loop_tent_matches_grid_and_quadrature() {
    let s2 = std::f64::consts::SQRT_2;
    let l = Landscape::from_bars(&[(1.0, s2)]);
    for i in 0..=1000 {
        let x = 0.9 + 0.6 * i as f64 / 1000.0;
        assert!((l.eval(1, x) - kth_largest_tent(&[(1.0, s2)], 1, x)).abs() < 1e-15);
    }
    let q = adaptive_simpson(|x| l.eval(1, x), 1.0, s2, 1e-15, 16);
    assert!((l.lp_norm_level(1, 1.0) - q).abs() / q < 1e-9);
}

#[test]
fn single_tent_area_matches_quadrature() {
    for (b, d) in [(0.0, 1.0), (0.3, 2.9), (5.0, 5.001)] {
        let l = Landscape::from_bars(&[(b, d)]);
        let exact = (d - b) * (d - b) / 4.0;
        let q = adaptive_simpson(|x| l.eval(1, x), b, d, 1e-16, 8);
        assert!((l.lp_norm_level(1, 1.0) - exact).abs() <= 1e-12 * exact);
        assert!((q - exact).abs() <= 1e-9 * exact);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn agrees_with_grid_oracle(seed in any::<u64>(), count in 1usize..20) {
        let bars = synth::random_diagram(&mut synth::rng(seed), count);
        let l = Landscape::from_bars(&bars);
        prop_assert!(l.depth() <= count);
        let (lo, hi) = support(&bars);
        for i in 0..=400 {
            let x = lo - 0.5 + (hi - lo + 1.0) * i as f64 / 400.0;
            for k in 1..=count + 1 {
                let want = kth_largest_tent(&bars, k, x);
                prop_assert!((l.eval(k, x) - want).abs() <= 1e-12, "k={} x={}", k, x);
                prop_assert!(l.eval(k, x) >= l.eval(k + 1, x));
            }
        }
    }

    #[test]
    fn norms_agree_with_quadrature(seed in any::<u64>(), count in 1usize..12) {
        let bars = synth::random_diagram(&mut synth::rng(seed), count);
        let l = Landscape::from_bars(&bars);
        let (lo, hi) = support(&bars);
        for k in 1..=l.depth() {
            for p in [1.0, 2.0] {
                let q = adaptive_simpson(|x| l.eval(k, x).powf(p), lo, hi, 1e-14, 4096).powf(1.0 / p);
                let exact = l.lp_norm_level(k, p);
                prop_assert!((exact - q).abs() <= 1e-9 * q.max(1e-300), "k={} p={} {} vs {}", k, p, exact, q);
            }
        }
        let sum: f64 = (1..=l.depth()).map(|k| l.lp_norm_level(k, 1.0)).sum();
        prop_assert!((l.full_lp_norm(1.0) - sum).abs() <= 1e-12 * sum);
    }

    #[test]
    fn levels_are_one_lipschitz(seed in any::<u64>(), x in -1f64..9.0, y in -1f64..9.0) {
        let bars = synth::random_diagram(&mut synth::rng(seed), 10);
        let l = Landscape::from_bars(&bars);
        for k in 1..=l.depth() {
            prop_assert!((l.eval(k, x) - l.eval(k, y)).abs() <= (x - y).abs() + 1e-12);
        }
    }

    #[test]
    fn area_scales_quadratically(seed in any::<u64>(), c in 0.1f64..10.0) {
        let bars = synth::random_diagram(&mut synth::rng(seed), 8);
        let scaled: Vec<(f64, f64)> = bars.iter().map(|&(b, d)| (c * b, c * d)).collect();
        let (l, m) = (Landscape::from_bars(&bars), Landscape::from_bars(&scaled));
        prop_assert_eq!(l.depth(), m.depth());
        for k in 1..=l.depth() {
            let (a, b) = (l.lp_norm_level(k, 1.0), m.lp_norm_level(k, 1.0));
            prop_assert!((b - c * c * a).abs() <= 1e-9 * b);
        }
    }
}
