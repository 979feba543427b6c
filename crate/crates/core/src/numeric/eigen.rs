//! Householder tridiagonalisation followed by implicit QL with shifts
//! (the EISPACK `tred2`/`tql2` pair).

use crate::error::{Error, Result};

use super::matrix::DenseSymmetricMatrix;

/// Largest dimension accepted by [`symmetric_eigensolve`].
pub const DENSE_BUDGET: usize = 4000;

const MAX_SWEEPS_PER_EIGENVALUE: usize = 60;

#[derive(Debug, Clone, PartialEq)]
pub struct EigenResult {
    /// Sorted descending.
    pub eigenvalues: Vec<f64>,
    /// `max_i |M v_i - lambda_i v_i| / max(1, |M|)`.
    pub residual_bound: f64,
    pub iterations: usize,
    /// Spectral norm, `max |lambda_i|`.
    pub norm: f64,
}

pub fn symmetric_eigensolve(m: &DenseSymmetricMatrix, tol: f64) -> Result<EigenResult> {
    symmetric_eigensolve_with_budget(m, tol, DENSE_BUDGET)
}

pub fn symmetric_eigensolve_with_budget(m: &DenseSymmetricMatrix, tol: f64, budget: usize) -> Result<EigenResult> {
    let n = m.dim();
    if n > budget {
        return Err(Error::TooLarge {
            what: "dense eigensolve dimension",
            requested: n as u64,
            budget: budget as u64,
        });
    }
    if !tol.is_finite() || tol <= 0.0 || tol < f64::EPSILON * n as f64 {
        return Err(Error::InvalidTolerance(tol));
    }
    if n == 0 {
        return Ok(EigenResult {
            eigenvalues: Vec::new(),
            residual_bound: 0.0,
            iterations: 0,
            norm: 0.0,
        });
    }

    let mut v: Vec<Vec<f64>> = (0..n).map(|i| m.row(i).to_vec()).collect();
    let mut d = vec![0.0; n];
    let mut e = vec![0.0; n];
    tred2(&mut v, &mut d, &mut e);
    // Eigenvectors are the columns of v; work on rows of the transpose.
    let mut w: Vec<Vec<f64>> = (0..n).map(|j| (0..n).map(|i| v[i][j]).collect()).collect();
    drop(v);
    let iterations = tql2(&mut w, &mut d, &mut e).map_err(|iterations| {
        let residual = residual_bound(m, &d, &w);
        Error::NoConvergence { iterations, residual }
    })?;

    let residual = residual_bound(m, &d, &w);
    if residual.is_nan() || residual > tol {
        return Err(Error::ResidualTooLarge { residual, tol });
    }
    let norm = d.iter().fold(0.0f64, |a, x| a.max(x.abs()));
    d.sort_by(|a, b| b.total_cmp(a));
    Ok(EigenResult {
        eigenvalues: d,
        residual_bound: residual,
        iterations,
        norm,
    })
}

fn residual_bound(m: &DenseSymmetricMatrix, d: &[f64], w: &[Vec<f64>]) -> f64 {
    let norm = d.iter().fold(0.0f64, |a, x| a.max(x.abs())).max(1.0);
    d.iter()
        .zip(w)
        .map(|(&lambda, vec)| {
            let mv = m.mul_vec(vec);
            mv.iter()
                .zip(vec)
                .map(|(a, b)| (a - lambda * b).powi(2))
                .sum::<f64>()
                .sqrt()
        })
        .fold(0.0f64, f64::max)
        / norm
}

fn tred2(v: &mut [Vec<f64>], d: &mut [f64], e: &mut [f64]) {
    let n = d.len();
    d.copy_from_slice(&v[n - 1]);

    for i in (1..n).rev() {
        let scale: f64 = d[..i].iter().map(|x| x.abs()).sum();
        let mut h = 0.0;
        if scale == 0.0 {
            e[i] = d[i - 1];
            for j in 0..i {
                d[j] = v[i - 1][j];
                v[i][j] = 0.0;
                v[j][i] = 0.0;
            }
        } else {
            for x in &mut d[..i] {
                *x /= scale;
                h += *x * *x;
            }
            let f = d[i - 1];
            let mut g = h.sqrt();
            if f > 0.0 {
                g = -g;
            }
            e[i] = scale * g;
            h -= f * g;
            d[i - 1] = f - g;
            e[..i].fill(0.0);

            for j in 0..i {
                let f = d[j];
                v[j][i] = f;
                let mut g = e[j] + v[j][j] * f;
                for k in j + 1..i {
                    g += v[k][j] * d[k];
                    e[k] += v[k][j] * f;
                }
                e[j] = g;
            }
            let mut f = 0.0;
            for j in 0..i {
                e[j] /= h;
                f += e[j] * d[j];
            }
            let hh = f / (h + h);
            for j in 0..i {
                e[j] -= hh * d[j];
            }
            for j in 0..i {
                let f = d[j];
                let g = e[j];
                for k in j..i {
                    v[k][j] -= f * e[k] + g * d[k];
                }
                d[j] = v[i - 1][j];
                v[i][j] = 0.0;
            }
        }
        d[i] = h;
    }

    // Accumulate transformations.
    for i in 0..n - 1 {
        v[n - 1][i] = v[i][i];
        v[i][i] = 1.0;
        let h = d[i + 1];
        if h != 0.0 {
            for k in 0..=i {
                d[k] = v[k][i + 1] / h;
            }
            for j in 0..=i {
                let g: f64 = (0..=i).map(|k| v[k][i + 1] * v[k][j]).sum();
                for k in 0..=i {
                    v[k][j] -= g * d[k];
                }
            }
        }
        for row in v.iter_mut().take(i + 1) {
            row[i + 1] = 0.0;
        }
    }
    for j in 0..n {
        d[j] = v[n - 1][j];
        v[n - 1][j] = 0.0;
    }
    v[n - 1][n - 1] = 1.0;
    e[0] = 0.0;
}

/// `w` holds eigenvectors as rows. Returns the total number of QL sweeps,
/// or the sweep count reached when one eigenvalue fails to converge.
fn tql2(w: &mut [Vec<f64>], d: &mut [f64], e: &mut [f64]) -> std::result::Result<usize, usize> {
    let n = d.len();
    for i in 1..n {
        e[i - 1] = e[i];
    }
    e[n - 1] = 0.0;

    let mut total = 0;
    let mut f = 0.0;
    let mut tst1 = 0.0f64;
    let eps = f64::EPSILON;
    for l in 0..n {
        tst1 = tst1.max(d[l].abs() + e[l].abs());
        let mut m = l;
        while m < n - 1 && e[m].abs() > eps * tst1 {
            m += 1;
        }
        if m > l {
            let mut iter = 0;
            loop {
                iter += 1;
                total += 1;
                if iter > MAX_SWEEPS_PER_EIGENVALUE {
                    return Err(total);
                }
                let g = d[l];
                let mut p = (d[l + 1] - g) / (2.0 * e[l]);
                let mut r = p.hypot(1.0);
                if p < 0.0 {
                    r = -r;
                }
                d[l] = e[l] / (p + r);
                d[l + 1] = e[l] * (p + r);
                let dl1 = d[l + 1];
                let mut h = g - d[l];
                for x in &mut d[l + 2..n] {
                    *x -= h;
                }
                f += h;

                p = d[m];
                let mut c = 1.0;
                let mut c2 = c;
                let mut c3 = c;
                let el1 = e[l + 1];
                let mut s = 0.0;
                let mut s2 = 0.0;
                for i in (l..m).rev() {
                    c3 = c2;
                    c2 = c;
                    s2 = s;
                    let g = c * e[i];
                    h = c * p;
                    r = p.hypot(e[i]);
                    e[i + 1] = s * r;
                    s = e[i] / r;
                    c = p / r;
                    p = c * d[i] - s * g;
                    d[i + 1] = h + s * (c * g + s * d[i]);

                    let (lo, hi) = w.split_at_mut(i + 1);
                    let (wi, wi1) = (&mut lo[i], &mut hi[0]);
                    for (a, b) in wi.iter_mut().zip(wi1.iter_mut()) {
                        let t = *b;
                        *b = s * *a + c * t;
                        *a = c * *a - s * t;
                    }
                }
                p = -s * s2 * c3 * el1 * e[l] / dl1;
                e[l] = s * p;
                d[l] = c * p;
                if e[l].abs() <= eps * tst1 {
                    break;
                }
            }
        }
        d[l] += f;
        e[l] = 0.0;
    }
    Ok(total)
}
