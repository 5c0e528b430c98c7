//! Vietoris-Rips filtration up to triangles and its mod-2 boundary operator.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::geometry::DistanceMatrix;

const ABSENT: u32 = u32::MAX;

/// Errors raised while building or querying a filtration.
#[derive(Debug, Clone, PartialEq)]
pub enum FiltrationError {
    /// The distance matrix has no points.
    EmptyCloud,
    /// Only simplex dimensions 1 and 2 are supported.
    UnsupportedDimension(usize),
    /// Scale threshold is NaN or negative.
    InvalidScale,
    /// A face of the queried simplex is not in the filtration.
    MissingFace,
}

impl fmt::Display for FiltrationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::EmptyCloud => f.write_str("cannot build a filtration of an empty cloud"),
            Self::UnsupportedDimension(d) => {
                write!(f, "maximum simplex dimension {d} is not 1 or 2")
            }
            Self::InvalidScale => f.write_str("maximum scale must be a nonnegative number"),
            Self::MissingFace => f.write_str("filtration is not closed under faces"),
        }
    }
}

impl core::error::Error for FiltrationError {}

/// A vertex, edge or triangle with the scale at which it enters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Simplex {
    vertices: [u32; 3],
    dim: u8,
    appearance: f64,
}

impl Simplex {
    /// Sorted vertex indices, `dim + 1` of them.
    pub fn vertices(&self) -> &[u32] {
        &self.vertices[..=self.dim as usize]
    }

    /// 0, 1 or 2.
    pub fn dim(&self) -> usize {
        self.dim as usize
    }

    /// Diameter of the vertex set.
    pub fn appearance(&self) -> f64 {
        self.appearance
    }

    fn filtration_cmp(&self, other: &Self) -> Ordering {
        self.appearance
            .total_cmp(&other.appearance)
            .then(self.dim.cmp(&other.dim))
            .then_with(|| self.vertices().cmp(other.vertices()))
    }
}

/// Positions of the codimension-1 faces of a simplex, ascending. Over Z/2
/// the coefficients are all one.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BoundaryColumn {
    /// Face positions in the filtration.
    pub faces: Vec<usize>,
}

/// Simplices sorted by `(appearance, dim, vertices)`.
#[derive(Debug, Clone)]
pub struct Filtration {
    simplices: Vec<Simplex>,
    max_dim: usize,
    vertex_count: usize,
    // position lookups; ABSENT when the simplex exceeds the scale cutoff
    edge_pos: Vec<u32>,
    triangle_pos: Vec<u32>,
}

#[inline]
fn choose2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

#[inline]
fn choose3(n: usize) -> usize {
    n * n.saturating_sub(1) * n.saturating_sub(2) / 6
}

impl Filtration {
    /// All simplices in filtration order.
    pub fn simplices(&self) -> &[Simplex] {
        &self.simplices
    }

    /// Number of simplices.
    pub fn len(&self) -> usize {
        self.simplices.len()
    }

    /// Never true for a built filtration.
    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }

    /// Highest simplex dimension enumerated.
    pub fn max_dim(&self) -> usize {
        self.max_dim
    }

    /// Number of points of the underlying cloud.
    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Position of the simplex with the given sorted vertex set.
    pub fn index_of(&self, vertices: &[u32]) -> Option<usize> {
        let pos = match *vertices {
            [v] if (v as usize) < self.vertex_count => return self.vertex_position(v as usize),
            [a, b] if a < b && (b as usize) < self.vertex_count => {
                self.edge_pos[a as usize * self.vertex_count + b as usize]
            }
            [a, b, c]
                if a < b && b < c && (c as usize) < self.vertex_count && self.max_dim == 2 =>
            {
                self.triangle_pos[choose3(c as usize) + choose2(b as usize) + a as usize]
            }
            _ => ABSENT,
        };
        (pos != ABSENT).then_some(pos as usize)
    }

    fn vertex_position(&self, v: usize) -> Option<usize> {
        // vertices all appear at scale 0 and sort first, in index order
        (v < self.vertex_count).then_some(v)
    }

    /// Boundary columns of every simplex, in filtration order.
    pub fn boundary_matrix(&self) -> Vec<BoundaryColumn> {
        self.simplices
            .iter()
            .map(|s| boundary(s, self).expect("built filtrations are face-closed"))
            .collect()
    }
}

/// Builds the Rips filtration of `dist` with every simplex of dimension at
/// most `max_dim` whose diameter is at most `max_scale`.
pub fn build_rips(
    dist: &DistanceMatrix,
    max_dim: usize,
    max_scale: f64,
) -> Result<Filtration, FiltrationError> {
    let n = dist.len();
    if n == 0 {
        return Err(FiltrationError::EmptyCloud);
    }
    if !(1..=2).contains(&max_dim) {
        return Err(FiltrationError::UnsupportedDimension(max_dim));
    }
    if max_scale.is_nan() || max_scale < 0.0 {
        return Err(FiltrationError::InvalidScale);
    }
    assert!(n < ABSENT as usize, "too many points");

    let mut simplices =
        Vec::with_capacity(n + choose2(n) + if max_dim == 2 { choose3(n) } else { 0 });
    for v in 0..n as u32 {
        simplices.push(Simplex {
            vertices: [v, 0, 0],
            dim: 0,
            appearance: 0.0,
        });
    }
    for b in 0..n {
        for a in 0..b {
            let d = dist.get(a, b);
            if d <= max_scale {
                simplices.push(Simplex {
                    vertices: [a as u32, b as u32, 0],
                    dim: 1,
                    appearance: d,
                });
            }
        }
    }
    if max_dim == 2 {
        for c in 0..n {
            for b in 0..c {
                let dbc = dist.get(b, c);
                if dbc > max_scale {
                    continue;
                }
                for a in 0..b {
                    let diam = dbc.max(dist.get(a, b)).max(dist.get(a, c));
                    if diam <= max_scale {
                        simplices.push(Simplex {
                            vertices: [a as u32, b as u32, c as u32],
                            dim: 2,
                            appearance: diam,
                        });
                    }
                }
            }
        }
    }
    simplices.sort_unstable_by(Simplex::filtration_cmp);

    let mut edge_pos = alloc::vec![ABSENT; n * n];
    let mut triangle_pos = alloc::vec![ABSENT; if max_dim == 2 { choose3(n) } else { 0 }];
    for (p, s) in simplices.iter().enumerate() {
        let v = s.vertices();
        match s.dim {
            1 => edge_pos[v[0] as usize * n + v[1] as usize] = p as u32,
            2 => {
                triangle_pos[choose3(v[2] as usize) + choose2(v[1] as usize) + v[0] as usize] =
                    p as u32
            }
            _ => debug_assert_eq!(p, v[0] as usize),
        }
    }
    Ok(Filtration {
        simplices,
        max_dim,
        vertex_count: n,
        edge_pos,
        triangle_pos,
    })
}

/// Mod-2 boundary of `simplex`: the positions of its `dim + 1` facets.
pub fn boundary(
    simplex: &Simplex,
    filtration: &Filtration,
) -> Result<BoundaryColumn, FiltrationError> {
    let v = simplex.vertices();
    let mut faces = Vec::with_capacity(v.len());
    if v.len() > 1 {
        let mut facet = [0u32; 2];
        for skip in 0..v.len() {
            let mut k = 0;
            for (i, &x) in v.iter().enumerate() {
                if i != skip {
                    facet[k] = x;
                    k += 1;
                }
            }
            let pos = filtration
                .index_of(&facet[..k])
                .ok_or(FiltrationError::MissingFace)?;
            faces.push(pos);
        }
        faces.sort_unstable();
    }
    Ok(BoundaryColumn { faces })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{distance_matrix, WindowCloud};
    use alloc::vec;
    use core::f64::consts::SQRT_2;

    fn rips(points: &[[f64; 2]], max_dim: usize, scale: f64) -> Filtration {
        let d = distance_matrix(&WindowCloud::from_points(points, 0).unwrap()).unwrap();
        build_rips(&d, max_dim, scale).unwrap()
    }

    fn summary(f: &Filtration) -> Vec<(usize, f64)> {
        f.simplices()
            .iter()
            .map(|s| (s.dim(), s.appearance()))
            .collect()
    }

    #[test]
    fn three_point_example() {
        let f = rips(&[[0.0, 0.0], [1.0, 1.0], [1.0, 0.0]], 2, f64::INFINITY);
        assert_eq!(
            summary(&f),
            vec![
                (0, 0.0),
                (0, 0.0),
                (0, 0.0),
                (1, 1.0),
                (1, 1.0),
                (1, SQRT_2),
                (2, SQRT_2)
            ]
        );
        // (0,0)-(1,0) is the edge [0, 2]; (1,0)-(1,1) is [1, 2]
        assert_eq!(f.simplices()[3].vertices(), &[0, 2]);
        assert_eq!(f.simplices()[4].vertices(), &[1, 2]);
    }

    #[test]
    fn scale_cutoff_drops_long_edges() {
        let f = rips(&[[0.0, 0.0], [3.0, 4.0]], 2, 3.0);
        assert_eq!(summary(&f), vec![(0, 0.0), (0, 0.0)]);
        assert_eq!(f.index_of(&[0, 1]), None);
    }

    #[test]
    fn unit_square_counts() {
        let f = rips(
            &[[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]],
            2,
            f64::INFINITY,
        );
        let s = summary(&f);
        assert_eq!(s.iter().filter(|x| x.0 == 0).count(), 4);
        assert_eq!(s.iter().filter(|x| *x == &(1, 1.0)).count(), 4);
        assert_eq!(s.iter().filter(|x| *x == &(1, SQRT_2)).count(), 2);
        assert_eq!(s.iter().filter(|x| *x == &(2, SQRT_2)).count(), 4);
        assert_eq!(s.len(), 14);
    }

    #[test]
    fn max_dim_one_has_no_triangles() {
        let f = rips(&[[0.0, 0.0], [1.0, 0.0], [1.0, 1.0]], 1, f64::INFINITY);
        assert!(f.simplices().iter().all(|s| s.dim() < 2));
        assert_eq!(f.index_of(&[0, 1, 2]), None);
    }

    #[test]
    fn build_errors() {
        let d = DistanceMatrix::from_flat(0, vec![]).unwrap();
        assert_eq!(
            build_rips(&d, 2, 1.0).unwrap_err(),
            FiltrationError::EmptyCloud
        );
        let d = DistanceMatrix::from_flat(1, vec![0.0]).unwrap();
        assert_eq!(
            build_rips(&d, 3, 1.0).unwrap_err(),
            FiltrationError::UnsupportedDimension(3)
        );
        assert_eq!(
            build_rips(&d, 0, 1.0).unwrap_err(),
            FiltrationError::UnsupportedDimension(0)
        );
        assert_eq!(
            build_rips(&d, 2, f64::NAN).unwrap_err(),
            FiltrationError::InvalidScale
        );
    }

    #[test]
    fn edge_boundary_is_its_endpoints() {
        let f = rips(&[[0.0, 0.0], [1.0, 1.0], [1.0, 0.0]], 2, f64::INFINITY);
        let edge = f.simplices()[3];
        assert_eq!(boundary(&edge, &f).unwrap().faces, vec![0, 2]);
        assert!(boundary(&f.simplices()[0], &f).unwrap().faces.is_empty());
    }

    #[test]
    fn boundary_of_boundary_vanishes() {
        let f = rips(&[[0.0, 0.0], [1.0, 1.0], [1.0, 0.0]], 2, f64::INFINITY);
        let tri = f.simplices()[6];
        let col = boundary(&tri, &f).unwrap();
        assert_eq!(col.faces, vec![3, 4, 5]);
        let mut parity = vec![0u8; f.len()];
        for &e in &col.faces {
            for v in boundary(&f.simplices()[e], &f).unwrap().faces {
                parity[v] ^= 1;
            }
        }
        assert!(parity.iter().all(|&p| p == 0));
    }

    #[test]
    fn missing_face_is_reported() {
        let full = rips(&[[0.0, 0.0], [3.0, 4.0], [3.0, 0.0]], 2, f64::INFINITY);
        let cut = rips(&[[0.0, 0.0], [3.0, 4.0], [3.0, 0.0]], 2, 4.0);
        let tri = *full.simplices().last().unwrap();
        assert_eq!(boundary(&tri, &cut), Err(FiltrationError::MissingFace));
    }
}
