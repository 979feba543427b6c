use std::fmt;

use crate::error::{Error, Result};
use crate::exact::{rational_to_f64, Rational};
use crate::graph::GraphInstance;

#[derive(Debug, Clone, PartialEq)]
pub enum MatrixKind {
    Adjacency,
    Laplacian,
    Signless,
    /// `alpha D + (1 - alpha) A`.
    AAlpha(Rational),
    Distance,
    DistanceLaplacian,
    Quotient,
}

impl fmt::Display for MatrixKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MatrixKind::Adjacency => f.write_str("adjacency"),
            MatrixKind::Laplacian => f.write_str("laplacian"),
            MatrixKind::Signless => f.write_str("signless"),
            MatrixKind::AAlpha(a) => write!(f, "a-alpha({a})"),
            MatrixKind::Distance => f.write_str("distance"),
            MatrixKind::DistanceLaplacian => f.write_str("distance-laplacian"),
            MatrixKind::Quotient => f.write_str("quotient"),
        }
    }
}

/// Symmetric matrix with full row-major storage; every constructor mirrors
/// the upper triangle, so symmetry is exact.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseSymmetricMatrix {
    dim: usize,
    data: Vec<f64>,
    kind: MatrixKind,
}

impl DenseSymmetricMatrix {
    /// Builds from `f(i, j)` evaluated on `i <= j`.
    pub fn from_upper(dim: usize, kind: MatrixKind, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut data = vec![0.0; dim * dim];
        for i in 0..dim {
            for j in i..dim {
                let v = f(i, j);
                data[i * dim + j] = v;
                data[j * dim + i] = v;
            }
        }
        Self { dim, data, kind }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn kind(&self) -> &MatrixKind {
        &self.kind
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.dim + j]
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.dim..(i + 1) * self.dim]
    }

    pub fn trace(&self) -> f64 {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    pub fn frobenius_norm_sq(&self) -> f64 {
        self.data.iter().map(|x| x * x).sum()
    }

    pub fn mul_vec(&self, v: &[f64]) -> Vec<f64> {
        (0..self.dim)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }
}

/// Integer distance Laplacian `Tr - D_dist`, row-major.
pub fn distance_laplacian_integer(g: &GraphInstance) -> Result<Vec<i64>> {
    let n = g.order();
    let dist = g.distance_matrix()?;
    let mut out: Vec<i64> = dist.iter().map(|&d| -(d as i64)).collect();
    for i in 0..n {
        let transmission: i64 = dist[i * n..(i + 1) * n].iter().map(|&d| d as i64).sum();
        out[i * n + i] = transmission;
    }
    Ok(out)
}

pub fn assemble_matrix(g: &GraphInstance, kind: MatrixKind) -> Result<DenseSymmetricMatrix> {
    let n = g.order();
    let adj = |i: usize, j: usize| if i != j && g.has_edge(i, j) { 1.0 } else { 0.0 };
    let deg = |i: usize| g.degree(i) as f64;
    Ok(match &kind {
        MatrixKind::Adjacency => DenseSymmetricMatrix::from_upper(n, kind, adj),
        MatrixKind::Laplacian => {
            DenseSymmetricMatrix::from_upper(n, kind, |i, j| if i == j { deg(i) } else { -adj(i, j) })
        }
        MatrixKind::Signless => {
            DenseSymmetricMatrix::from_upper(n, kind, |i, j| if i == j { deg(i) } else { adj(i, j) })
        }
        MatrixKind::AAlpha(alpha) => {
            if alpha < &Rational::from_integer(0.into()) || alpha > &Rational::from_integer(1.into()) {
                return Err(Error::AlphaOutOfRange(alpha.to_string()));
            }
            let a = rational_to_f64(alpha);
            DenseSymmetricMatrix::from_upper(n, kind, |i, j| if i == j { a * deg(i) } else { (1.0 - a) * adj(i, j) })
        }
        MatrixKind::Distance => {
            let dist = g.distance_matrix()?;
            DenseSymmetricMatrix::from_upper(n, kind, |i, j| dist[i * n + j] as f64)
        }
        MatrixKind::DistanceLaplacian => {
            let lap = distance_laplacian_integer(g)?;
            DenseSymmetricMatrix::from_upper(n, kind, |i, j| lap[i * n + j] as f64)
        }
        MatrixKind::Quotient => {
            return Err(Error::Domain(
                "quotient matrices are built from a level partition, not a graph".into(),
            ))
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational;
    use crate::graph::build_graph_by_rule;
    use crate::ring::RingParams;

    fn graph(p: u64, c: u32) -> GraphInstance {
        build_graph_by_rule(&RingParams::new(p, c).unwrap()).unwrap()
    }

    #[test]
    fn k2_laplacian() {
        let m = assemble_matrix(&graph(3, 2), MatrixKind::Laplacian).unwrap();
        assert_eq!(m.row(0), [1.0, -1.0]);
        assert_eq!(m.row(1), [-1.0, 1.0]);
    }

    #[test]
    fn distance_entries_at_most_two() {
        let m = assemble_matrix(&graph(2, 5), MatrixKind::Distance).unwrap();
        assert_eq!(m.dim(), 15);
        for i in 0..15 {
            for j in 0..15 {
                let d = m.get(i, j);
                assert!(d == 0.0 || d == 1.0 || d == 2.0);
                assert_eq!(d == 0.0, i == j);
            }
        }
    }

    #[test]
    fn a_alpha_half_is_half_signless() {
        let g = graph(2, 6);
        let half = assemble_matrix(&g, MatrixKind::AAlpha(rational(1, 2))).unwrap();
        let q = assemble_matrix(&g, MatrixKind::Signless).unwrap();
        for i in 0..g.order() {
            for j in 0..g.order() {
                assert_eq!(2.0 * half.get(i, j), q.get(i, j));
            }
        }
        assert!(matches!(
            assemble_matrix(&g, MatrixKind::AAlpha(rational(3, 2))),
            Err(Error::AlphaOutOfRange(_))
        ));
    }

    #[test]
    fn distance_laplacian_rows_sum_to_zero() {
        for (p, c) in [(2, 5), (3, 4), (5, 2)] {
            let g = graph(p, c);
            let n = g.order();
            let lap = distance_laplacian_integer(&g).unwrap();
            for row in lap.chunks(n) {
                assert_eq!(row.iter().sum::<i64>(), 0);
            }
        }
    }
}
