//! Brute-force persistent homology of a full Rips 2-skeleton.
//!
//! For every pair of threshold indices `(a, b)` the persistent Betti number
//! `beta^{a,b} = dim Z(K_a) - dim(Z(K_a) ∩ B(K_b))` is computed from scratch,
//! and pair multiplicities are read off by inclusion-exclusion.

/// Diagrams as sorted `(birth, death)` lists, `death = f64::INFINITY` for
/// essential classes. Zero-persistence pairs never appear.
#[derive(Debug, Clone, PartialEq)]
pub struct OracleDiagrams {
    pub h0: Vec<(f64, f64)>,
    pub h1: Vec<(f64, f64)>,
}

fn euclid(a: &[f64], b: &[f64]) -> f64 {
    let mut acc = 0.0;
    for (x, y) in a.iter().zip(b) {
        acc += (x - y) * (x - y);
    }
    acc.sqrt()
}

/// Rank over GF(2) of a set of bit vectors.
fn rank(vectors: &[u64]) -> usize {
    let mut basis: Vec<u64> = Vec::new();
    for &v in vectors {
        let mut v = v;
        for &b in &basis {
            // basis kept with distinct leading bits, sorted by leading bit descending
            if v & (1u64 << (63 - b.leading_zeros())) != 0 {
                v ^= b;
            }
        }
        if v != 0 {
            basis.push(v);
            basis.sort_by(|x, y| y.leading_zeros().cmp(&x.leading_zeros()).reverse());
        }
    }
    basis.len()
}

/// Basis of the kernel of the linear map sending edge `e` to `images[e]`.
/// Returned vectors live in edge space (bit `e` = edge index).
fn kernel_basis(edge_ids: &[usize], images: &[u64]) -> Vec<u64> {
    // Each row: (image, combination of edges producing it)
    let mut pivots: Vec<(u64, u64)> = Vec::new();
    let mut kernel = Vec::new();
    for &e in edge_ids {
        let mut img = images[e];
        let mut comb = 1u64 << e;
        loop {
            if img == 0 {
                kernel.push(comb);
                break;
            }
            let lead = 63 - img.leading_zeros();
            match pivots.iter().find(|(p, _)| 63 - p.leading_zeros() == lead) {
                Some(&(p, c)) => {
                    img ^= p;
                    comb ^= c;
                }
                None => {
                    pivots.push((img, comb));
                    break;
                }
            }
        }
    }
    kernel
}

/// Persistence diagrams in dimensions 0 and 1 of the Rips filtration of
/// `points`, built to full scale with simplices up to dimension 2.
///
/// Supports at most 11 points (edge count must fit a `u64`).
pub fn brute_force_diagrams(points: &[Vec<f64>]) -> OracleDiagrams {
    let n = points.len();
    assert!((1..=11).contains(&n), "oracle supports 1..=11 points");

    let mut edges: Vec<(usize, usize, f64)> = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            edges.push((i, j, euclid(&points[i], &points[j])));
        }
    }
    let edge_index = |i: usize, j: usize| -> usize {
        edges
            .iter()
            .position(|&(a, b, _)| a == i && b == j)
            .unwrap()
    };
    let mut triangles: Vec<(u64, f64)> = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let (eij, eik, ejk) = (edge_index(i, j), edge_index(i, k), edge_index(j, k));
                let diam = edges[eij].2.max(edges[eik].2).max(edges[ejk].2);
                triangles.push(((1 << eij) | (1 << eik) | (1 << ejk), diam));
            }
        }
    }
    let edge_images: Vec<u64> = edges
        .iter()
        .map(|&(i, j, _)| (1u64 << i) | (1u64 << j))
        .collect();

    let mut thresholds: Vec<f64> = vec![0.0];
    thresholds.extend(edges.iter().map(|e| e.2));
    thresholds.sort_by(|a, b| a.partial_cmp(b).unwrap());
    thresholds.dedup();
    let m = thresholds.len();

    let edges_upto = |a: usize| -> Vec<usize> {
        (0..edges.len())
            .filter(|&e| edges[e].2 <= thresholds[a])
            .collect()
    };
    let boundaries_upto = |b: usize| -> Vec<u64> {
        triangles
            .iter()
            .filter(|t| t.1 <= thresholds[b])
            .map(|t| t.0)
            .collect()
    };

    let mut beta0 = vec![vec![0i64; m]; m];
    let mut beta1 = vec![vec![0i64; m]; m];
    for b in 0..m {
        let eb: Vec<u64> = edges_upto(b).iter().map(|&e| edge_images[e]).collect();
        let components = n - rank(&eb);
        let bd = boundaries_upto(b);
        let rank_b = rank(&bd);
        for a in 0..=b {
            beta0[a][b] = components as i64;
            let z = kernel_basis(&edges_upto(a), &edge_images);
            let mut sum = z.clone();
            sum.extend_from_slice(&bd);
            let inter = z.len() + rank_b - rank(&sum);
            beta1[a][b] = (z.len() - inter) as i64;
        }
    }

    let read_pairs = |beta: &Vec<Vec<i64>>| -> Vec<(f64, f64)> {
        let get = |i: isize, j: usize| -> i64 {
            if i < 0 {
                0
            } else {
                beta[i as usize][j]
            }
        };
        let mut out = Vec::new();
        for i in 0..m {
            let ii = i as isize;
            for j in i + 1..m {
                let mu = get(ii, j - 1) - get(ii, j) - get(ii - 1, j - 1) + get(ii - 1, j);
                assert!(mu >= 0, "negative multiplicity");
                for _ in 0..mu {
                    out.push((thresholds[i], thresholds[j]));
                }
            }
            let ess = get(ii, m - 1) - get(ii - 1, m - 1);
            assert!(ess >= 0);
            for _ in 0..ess {
                out.push((thresholds[i], f64::INFINITY));
            }
        }
        out.sort_by(|x, y| x.partial_cmp(y).unwrap());
        out
    };

    OracleDiagrams {
        h0: read_pairs(&beta0),
        h1: read_pairs(&beta1),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_has_one_loop() {
        let pts = vec![
            vec![0.0, 0.0],
            vec![1.0, 0.0],
            vec![1.0, 1.0],
            vec![0.0, 1.0],
        ];
        let d = brute_force_diagrams(&pts);
        assert_eq!(
            d.h0,
            vec![(0.0, 1.0), (0.0, 1.0), (0.0, 1.0), (0.0, f64::INFINITY)]
        );
        assert_eq!(d.h1, vec![(1.0, 2f64.sqrt())]);
    }

    #[test]
    fn three_point_example() {
        let pts = vec![vec![0.0, 0.0], vec![1.0, 1.0], vec![1.0, 0.0]];
        let d = brute_force_diagrams(&pts);
        assert_eq!(d.h0, vec![(0.0, 1.0), (0.0, 1.0), (0.0, f64::INFINITY)]);
        assert!(d.h1.is_empty());
    }

    #[test]
    fn collinear_has_no_loops() {
        let pts: Vec<Vec<f64>> = (0..6).map(|i| vec![i as f64, 0.0]).collect();
        assert!(brute_force_diagrams(&pts).h1.is_empty());
    }
}
