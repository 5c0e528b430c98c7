//! Persistence diagrams in dimensions 0 and 1.
//!
//! Dimension 0 is a union-find sweep over the edges in filtration order.
//! Dimension 1 runs the standard left-to-right column reduction of the
//! mod-2 boundary matrix. Pairs with `birth == death` are dropped in both.

use alloc::vec::Vec;
use core::fmt;

use crate::filtration::{BoundaryColumn, Filtration};

/// Errors raised by the persistence computations.
#[derive(Debug, Clone, PartialEq)]
pub enum PersistenceError {
    /// Dimension 1 persistence needs triangles in the filtration.
    FiltrationDimensionTooLow,
}

impl fmt::Display for PersistenceError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::FiltrationDimensionTooLow => {
                f.write_str("dimension 1 persistence requires a filtration built with triangles")
            }
        }
    }
}

impl core::error::Error for PersistenceError {}

/// One bar of a diagram. `death` is `f64::INFINITY` for essential classes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PersistencePair {
    /// Scale at which the class is born.
    pub birth: f64,
    /// Scale at which it dies.
    pub death: f64,
    /// Homological dimension.
    pub dim: usize,
}

impl PersistencePair {
    /// Never dies within the filtration.
    pub fn is_essential(&self) -> bool {
        self.death == f64::INFINITY
    }

    /// `death - birth`.
    pub fn persistence(&self) -> f64 {
        self.death - self.birth
    }
}

/// Multiset of bars of one homological dimension.
#[derive(Debug, Clone, PartialEq)]
pub struct PersistenceDiagram {
    dim: usize,
    pairs: Vec<PersistencePair>,
    essential_count: usize,
}

impl PersistenceDiagram {
    /// Wraps bars of dimension `dim`, sorted by `(birth, death)`.
    pub fn new(dim: usize, bars: impl IntoIterator<Item = (f64, f64)>) -> Self {
        let mut pairs: Vec<PersistencePair> = bars
            .into_iter()
            .map(|(birth, death)| PersistencePair { birth, death, dim })
            .collect();
        pairs.sort_by(|a, b| {
            a.birth
                .total_cmp(&b.birth)
                .then(a.death.total_cmp(&b.death))
        });
        let essential_count = pairs.iter().filter(|p| p.is_essential()).count();
        Self {
            dim,
            pairs,
            essential_count,
        }
    }

    /// Homological dimension.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// All bars, finite and essential.
    pub fn pairs(&self) -> &[PersistencePair] {
        &self.pairs
    }

    /// Number of bars with infinite death.
    pub fn essential_count(&self) -> usize {
        self.essential_count
    }

    /// Finite bars as `(birth, death)`.
    pub fn finite_bars(&self) -> Vec<(f64, f64)> {
        self.pairs
            .iter()
            .filter(|p| !p.is_essential())
            .map(|p| (p.birth, p.death))
            .collect()
    }

    /// Number of bars.
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    /// True when there are no bars.
    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Joins the two classes under the smaller root index. Returns false if
    /// they were already joined.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (keep, merge) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[merge] = keep;
        true
    }
}

/// Dimension 0 diagram: one `(0, len)` bar per merging edge and one
/// essential bar per component left at the end of the filtration.
pub fn compute_h0(filtration: &Filtration) -> PersistenceDiagram {
    let n = filtration.vertex_count();
    let mut uf = UnionFind::new(n);
    let mut bars = Vec::with_capacity(n);
    let mut components = n;
    for s in filtration.simplices().iter().filter(|s| s.dim() == 1) {
        let v = s.vertices();
        if uf.union(v[0] as usize, v[1] as usize) {
            components -= 1;
            if s.appearance() > 0.0 {
                bars.push((0.0, s.appearance()));
            }
        }
    }
    bars.extend(core::iter::repeat((0.0, f64::INFINITY)).take(components));
    PersistenceDiagram::new(0, bars)
}

/// Result of reducing a boundary matrix.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Reduction {
    /// Reduced columns, same order as the input.
    pub columns: Vec<Vec<usize>>,
    /// `(low_row, column)` for every nonzero reduced column, in column order.
    pub pairs: Vec<(usize, usize)>,
}

impl Reduction {
    /// Positions that are neither a pivot row nor a nonzero column.
    pub fn unpaired(&self) -> Vec<usize> {
        let mut paired = alloc::vec![false; self.columns.len()];
        for &(low, col) in &self.pairs {
            paired[low] = true;
            paired[col] = true;
        }
        (0..self.columns.len()).filter(|&i| !paired[i]).collect()
    }
}

/// `out = a xor b` for ascending index lists.
fn symmetric_difference(a: &[usize], b: &[usize], out: &mut Vec<usize>) {
    out.clear();
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            core::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            core::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            core::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
}

/// Left-to-right column reduction over Z/2.
///
/// Column `j` is XORed with the earlier column owning its lowest row until
/// that row is unowned or the column empties. Row indices refer to column
/// positions, as in a filtration boundary matrix.
pub fn reduce_matrix(columns: &[BoundaryColumn]) -> Reduction {
    let m = columns.len();
    let mut owner: Vec<Option<usize>> = alloc::vec![None; m];
    let mut reduced: Vec<Vec<usize>> = Vec::with_capacity(m);
    let mut pairs = Vec::new();
    let mut scratch = Vec::new();
    for (j, input) in columns.iter().enumerate() {
        let mut col = input.faces.clone();
        while let Some(&low) = col.last() {
            match owner.get(low).copied().flatten() {
                Some(k) => {
                    symmetric_difference(&col, &reduced[k], &mut scratch);
                    core::mem::swap(&mut col, &mut scratch);
                }
                None => {
                    if low >= owner.len() {
                        owner.resize(low + 1, None);
                    }
                    owner[low] = Some(j);
                    pairs.push((low, j));
                    break;
                }
            }
        }
        reduced.push(col);
    }
    Reduction {
        columns: reduced,
        pairs,
    }
}

/// Dimension 1 diagram from reducing the full boundary matrix.
///
/// A triangle whose reduced low is edge `i` kills the cycle born at `i`.
/// Cycle-creating edges never used as a low are essential.
pub fn compute_h1(filtration: &Filtration) -> Result<PersistenceDiagram, PersistenceError> {
    if filtration.max_dim() < 2 {
        return Err(PersistenceError::FiltrationDimensionTooLow);
    }
    let simplices = filtration.simplices();
    let reduction = reduce_matrix(&filtration.boundary_matrix());
    let mut is_low = alloc::vec![false; simplices.len()];
    let mut bars = Vec::new();
    for &(low, col) in &reduction.pairs {
        is_low[low] = true;
        if simplices[low].dim() == 1 {
            let (b, d) = (simplices[low].appearance(), simplices[col].appearance());
            if d > b {
                bars.push((b, d));
            }
        }
    }
    for (i, s) in simplices.iter().enumerate() {
        if s.dim() == 1 && reduction.columns[i].is_empty() && !is_low[i] {
            bars.push((s.appearance(), f64::INFINITY));
        }
    }
    Ok(PersistenceDiagram::new(1, bars))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::filtration::build_rips;
    use crate::geometry::{distance_matrix, WindowCloud};
    use alloc::vec;
    use core::f64::consts::SQRT_2;

    fn rips(points: &[[f64; 2]], max_dim: usize) -> Filtration {
        let d = distance_matrix(&WindowCloud::from_points(points, 0).unwrap()).unwrap();
        build_rips(&d, max_dim, f64::INFINITY).unwrap()
    }

    const SQUARE: [[f64; 2]; 4] = [[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]];

    #[test]
    fn three_point_diagrams() {
        let f = rips(&[[0.0, 0.0], [1.0, 1.0], [1.0, 0.0]], 2);
        let h0 = compute_h0(&f);
        assert_eq!(h0.finite_bars(), vec![(0.0, 1.0), (0.0, 1.0)]);
        assert_eq!(h0.essential_count(), 1);
        assert_eq!(h0.len(), 3);
        assert!(compute_h1(&f).unwrap().is_empty());
    }

    #[test]
    fn single_point() {
        let f = rips(&[[2.0, 3.0]], 2);
        let h0 = compute_h0(&f);
        assert_eq!(
            h0.pairs(),
            &[PersistencePair {
                birth: 0.0,
                death: f64::INFINITY,
                dim: 0
            }]
        );
        assert!(compute_h1(&f).unwrap().is_empty());
    }

    #[test]
    fn unit_square() {
        let f = rips(&SQUARE, 2);
        assert_eq!(compute_h0(&f).finite_bars(), vec![(0.0, 1.0); 3]);
        let h1 = compute_h1(&f).unwrap();
        assert_eq!(h1.finite_bars(), vec![(1.0, SQRT_2)]);
        assert_eq!(h1.essential_count(), 0);
    }

    #[test]
    fn collinear_points_have_no_loops() {
        let pts: Vec<[f64; 2]> = (0..10).map(|i| [0.5 * i as f64, 0.0]).collect();
        assert!(compute_h1(&rips(&pts, 2)).unwrap().is_empty());
    }

    #[test]
    fn h1_needs_triangles() {
        assert_eq!(
            compute_h1(&rips(&SQUARE, 1)),
            Err(PersistenceError::FiltrationDimensionTooLow)
        );
    }

    #[test]
    fn truncated_scale_leaves_essential_cycle() {
        let d = distance_matrix(&WindowCloud::from_points(&SQUARE, 0).unwrap()).unwrap();
        let f = build_rips(&d, 2, 1.2).unwrap();
        let h1 = compute_h1(&f).unwrap();
        assert_eq!(
            h1.pairs(),
            &[PersistencePair {
                birth: 1.0,
                death: f64::INFINITY,
                dim: 1
            }]
        );
        assert_eq!(h1.essential_count(), 1);
        assert!(h1.finite_bars().is_empty());
    }

    #[test]
    fn coincident_points_drop_zero_bars() {
        let f = rips(&[[1.0, 1.0], [1.0, 1.0], [1.0, 1.0]], 2);
        let h0 = compute_h0(&f);
        assert_eq!(h0.len(), 1);
        assert_eq!(h0.essential_count(), 1);
        assert!(compute_h1(&f).unwrap().is_empty());
    }

    #[test]
    fn reduce_empty_matrix() {
        assert_eq!(reduce_matrix(&[]), Reduction::default());
    }

    #[test]
    fn single_triangle_column_pairs_with_latest_edge() {
        let col = BoundaryColumn {
            faces: vec![3, 4, 5],
        };
        let r = reduce_matrix(&[col]);
        assert_eq!(r.pairs, vec![(5, 0)]);
        assert_eq!(r.columns[0], vec![3, 4, 5]);
    }

    #[test]
    fn square_reduction_pairs_the_loop() {
        let f = rips(&SQUARE, 2);
        let r = reduce_matrix(&f.boundary_matrix());
        let s = f.simplices();
        // the fourth unit edge (position 7) closes the loop; a triangle kills it
        let (_, killer) = *r.pairs.iter().find(|&&(low, _)| low == 7).unwrap();
        assert_eq!(s[7].appearance(), 1.0);
        assert_eq!(s[killer].dim(), 2);
        assert_eq!(s[killer].appearance(), SQRT_2);
        // every simplex is a birth or a death exactly once
        assert_eq!(2 * r.pairs.len() + r.unpaired().len(), f.len());
    }

    #[test]
    fn union_find_joins_under_smaller_root() {
        let mut uf = UnionFind::new(4);
        assert!(uf.union(3, 2));
        assert!(uf.union(2, 1));
        assert!(!uf.union(3, 1));
        assert_eq!(uf.find(3), 1);
    }
}
