//! Quotient matrices of the level partition.
//!
//! For the equitable partition `{V_i}` the adjacency quotient is
//!
//! ```text
//! Q_ii = n_i - 1   if 2i >= c, else 0
//! Q_ij = n_j       if i != j and i + j >= c, else 0
//! ```
//!
//! and `D* = diag(d_i)`, `L̄ = D* - Q`, `B(alpha) = alpha D* + (1 - alpha) Q`.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::{IntMatrix, Rational};
use crate::levels::LevelPartition;
use crate::numeric::{DenseSymmetricMatrix, MatrixKind};
use crate::ring::RingParams;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientMatrices {
    params: RingParams,
    sizes: Vec<u64>,
    dstar: IntMatrix,
    q: IntMatrix,
    lbar: IntMatrix,
}

pub fn build_quotient(lp: &LevelPartition) -> QuotientMatrices {
    let c = lp.params().c() as usize;
    let dim = lp.len();
    let mut q = IntMatrix::zeros(dim);
    for i in 1..=dim {
        for j in 1..=dim {
            let n_j = lp.level(j).size as i128;
            let entry = match (i == j, i + j >= c) {
                (_, false) => 0,
                (true, true) => n_j - 1,
                (false, true) => n_j,
            };
            q.set(i - 1, j - 1, entry);
        }
    }
    let dstar = IntMatrix::diagonal(&lp.degrees().map(i128::from).collect::<Vec<_>>());
    let lbar = dstar.sub(&q);
    QuotientMatrices {
        params: *lp.params(),
        sizes: lp.sizes().collect(),
        dstar,
        q,
        lbar,
    }
}

impl QuotientMatrices {
    pub fn params(&self) -> &RingParams {
        &self.params
    }

    pub fn dim(&self) -> usize {
        self.sizes.len()
    }

    pub fn sizes(&self) -> &[u64] {
        &self.sizes
    }

    pub fn dstar(&self) -> &IntMatrix {
        &self.dstar
    }

    pub fn q(&self) -> &IntMatrix {
        &self.q
    }

    pub fn lbar(&self) -> &IntMatrix {
        &self.lbar
    }

    /// `D* + Q`, the signless-Laplacian quotient.
    pub fn signless(&self) -> IntMatrix {
        self.dstar.add(&self.q)
    }

    /// `B(alpha)` with exact rational entries, row-major.
    pub fn b_of_alpha(&self, alpha: &Rational) -> Vec<Rational> {
        let one_minus = Rational::from_integer(1.into()) - alpha;
        let n = self.dim();
        (0..n * n)
            .map(|k| {
                let (i, j) = (k / n, k % n);
                alpha * Rational::from_integer(self.dstar.get(i, j).into())
                    + &one_minus * Rational::from_integer(self.q.get(i, j).into())
            })
            .collect()
    }

    /// `diag_weight * D* + q_weight * Q`, conjugated by `diag(sqrt(n_i))` so
    /// that it is symmetric with the same eigenvalues.
    pub fn symmetrized(&self, diag_weight: f64, q_weight: f64) -> DenseSymmetricMatrix {
        let sizes = &self.sizes;
        DenseSymmetricMatrix::from_upper(self.dim(), MatrixKind::Quotient, |i, j| {
            let b = diag_weight * self.dstar.get(i, j) as f64 + q_weight * self.q.get(i, j) as f64;
            if i == j {
                b
            } else {
                b * (sizes[i] as f64 / sizes[j] as f64).sqrt()
            }
        })
    }

    /// Copy with `Q[row][col]` shifted by `delta` (0-based indices) and `L̄`
    /// recomputed. Used to exercise failure paths of the verifier.
    pub fn with_corrupted_entry(&self, row: usize, col: usize, delta: i128) -> Result<Self> {
        if row >= self.dim() || col >= self.dim() {
            return Err(Error::Domain(format!(
                "quotient entry ({row}, {col}) outside a {0}x{0} matrix",
                self.dim()
            )));
        }
        let mut out = self.clone();
        out.q.set(row, col, out.q.get(row, col) + delta);
        out.lbar = out.dstar.sub(&out.q);
        Ok(out)
    }

    /// Whether `n_i Q_ij = n_j Q_ji` for all `i, j` (edge counts between
    /// levels agree from both sides).
    pub fn is_balanced(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| {
            (0..n).all(|j| self.sizes[i] as i128 * self.q.get(i, j) == self.sizes[j] as i128 * self.q.get(j, i))
        })
    }
}

/// `(B(alpha) - B(beta)) / (alpha - beta)`, exact.
pub fn alpha_difference_quotient(q: &QuotientMatrices, alpha: &Rational, beta: &Rational) -> Result<Vec<Rational>> {
    let diff = alpha - beta;
    if diff.is_zero() {
        return Err(Error::Domain("alpha and beta must differ".into()));
    }
    Ok(q.b_of_alpha(alpha)
        .into_iter()
        .zip(q.b_of_alpha(beta))
        .map(|(a, b)| (a - b) / &diff)
        .collect())
}
