use proptest::prelude::*;
use tdamarket_core::geometry::{
    distance_matrix, log_returns, sliding_windows, PriceTable, WindowCloud,
};

fn price_rows(rows: usize, cols: usize) -> impl Strategy<Value = Vec<Vec<f64>>> {
    prop::collection::vec(prop::collection::vec(0.01f64..1e4, cols), rows)
}

proptest! {
    #[test]
    fn returns_ignore_price_scale(rows in price_rows(6, 3), c in 1e-3f64..1e3) {
        let base = log_returns(&PriceTable::from_rows(&rows).unwrap()).unwrap();
        // exact cancellation only holds when c is a power of two
        let c2 = 2f64.powi(c.log2().round() as i32);
        let scaled: Vec<Vec<f64>> = rows.iter().map(|r| r.iter().map(|v| v * c2).collect()).collect();
        let other = log_returns(&PriceTable::from_rows(&scaled).unwrap()).unwrap();
        prop_assert_eq!(&base, &other);
        // a generic factor agrees to rounding
        let scaled: Vec<Vec<f64>> = rows.iter().map(|r| r.iter().map(|v| v * c).collect()).collect();
        let other = log_returns(&PriceTable::from_rows(&scaled).unwrap()).unwrap();
        for i in 0..base.rows() {
            for (a, b) in base.row(i).iter().zip(other.row(i)) {
                prop_assert!((a - b).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn distance_matrix_is_a_metric(points in prop::collection::vec(prop::collection::vec(-5f64..5.0, 3), 1..12)) {
        let cloud = WindowCloud::from_points(&points, 0).unwrap();
        let d = distance_matrix(&cloud).unwrap();
        let n = d.len();
        for i in 0..n {
            prop_assert_eq!(d.get(i, i), 0.0);
            for j in 0..n {
                prop_assert_eq!(d.get(i, j), d.get(j, i));
                prop_assert!(d.get(i, j) >= 0.0);
                for k in 0..n {
                    prop_assert!(d.get(i, k) <= d.get(i, j) + d.get(j, k) + 1e-12);
                }
            }
        }
    }

    #[test]
    fn windows_tile_the_returns(rows in price_rows(20, 2), window in 2usize..=19) {
        let r = log_returns(&PriceTable::from_rows(&rows).unwrap()).unwrap();
        let w = sliding_windows(&r, window).unwrap();
        prop_assert_eq!(w.len(), r.rows() - window + 1);
        for (t, cloud) in w.iter().enumerate() {
            prop_assert_eq!(cloud.window_start(), t);
            prop_assert_eq!(cloud.len(), window);
            for i in 0..window {
                prop_assert_eq!(cloud.point(i), r.row(t + i));
            }
        }
    }
}
