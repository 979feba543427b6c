//! Closed-form spectra of the zero-divisor graph.
//!
//! Every spectrum splits into a *fixed part* and a *quotient part*. The
//! sum-zero vectors supported on a single level `V_i` are eigenvectors of
//! `A_alpha` with eigenvalue `alpha (p^i - 1) - [2i >= c]`, giving
//! `n_i - 1` copies per level. The remaining `c - 1` eigenvalues are those
//! of the quotient `B(alpha)`. The Laplacian quotient `L̄` has the integer
//! eigenvalues `0` and `p^k - 1` for `k != s`, certified by the explicit
//! eigenvectors built in [`laplacian_eigenvector`].

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{IntMatrix, Rational};
use crate::graph::GraphInstance;
use crate::levels::LevelPartition;
use crate::numeric::{symmetric_eigensolve, DenseSymmetricMatrix, DENSE_BUDGET};
use crate::quotient::{build_quotient, QuotientMatrices};
use crate::spectrum::{Eigenvalue, Spectrum, SpectrumKind};

/// Residual tolerance for eigensolves of the small quotient matrices.
pub const QUOTIENT_TOL: f64 = 1e-9;

fn check_alpha(alpha: &Rational) -> Result<()> {
    if alpha < &Rational::zero() || alpha > &Rational::one() {
        return Err(Error::AlphaOutOfRange(alpha.to_string()));
    }
    Ok(())
}

/// `alpha (p^i - 1) - [2i >= c]`, the eigenvalue on level-`i` sum-zero vectors.
pub fn fixed_eigenvalue(lp: &LevelPartition, i: usize) -> Eigenvalue {
    let p_i = lp.params().pow(i as u32) as i128;
    Eigenvalue::Affine {
        slope: p_i - 1,
        intercept: -i128::from(lp.is_clique(i)),
    }
}

fn push_quotient_tail(spec: &mut Spectrum, m: &DenseSymmetricMatrix) -> Result<()> {
    let r = symmetric_eigensolve(m, QUOTIENT_TOL)?;
    for &v in &r.eigenvalues {
        spec.push(Eigenvalue::Numeric(v), 1);
    }
    spec.residual_bound = Some(r.residual_bound);
    Ok(())
}

/// Spectrum of `A_alpha = alpha D + (1 - alpha) A`: affine fixed part plus
/// the numeric eigenvalues of `B(alpha)`.
pub fn a_alpha_spectrum(lp: &LevelPartition, alpha: &Rational) -> Result<Spectrum> {
    a_alpha_spectrum_with(lp, &build_quotient(lp), alpha)
}

/// As [`a_alpha_spectrum`] but with a caller-supplied quotient.
pub fn a_alpha_spectrum_with(lp: &LevelPartition, q: &QuotientMatrices, alpha: &Rational) -> Result<Spectrum> {
    check_alpha(alpha)?;
    let mut spec = a_alpha_fixed_part(lp, alpha);
    let a = crate::exact::rational_to_f64(alpha);
    push_quotient_tail(&mut spec, &q.symmetrized(a, 1.0 - a))?;
    spec.sort();
    Ok(spec)
}

/// Fixed part with the quotient eigenvalues left as a single unevaluated
/// entry of multiplicity `c - 1`.
pub fn a_alpha_spectrum_symbolic(lp: &LevelPartition, alpha: &Rational) -> Result<Spectrum> {
    check_alpha(alpha)?;
    let mut spec = a_alpha_fixed_part(lp, alpha);
    spec.push(Eigenvalue::QuotientRoots("B(alpha)"), lp.len() as u64);
    spec.sort();
    Ok(spec)
}

fn a_alpha_fixed_part(lp: &LevelPartition, alpha: &Rational) -> Spectrum {
    let mut spec = Spectrum::new(SpectrumKind::AAlpha, Some(alpha.clone()));
    for level in lp.levels() {
        spec.push(fixed_eigenvalue(lp, level.index), level.size - 1);
    }
    spec
}

pub fn adjacency_spectrum(lp: &LevelPartition) -> Result<Spectrum> {
    adjacency_spectrum_with(lp, &build_quotient(lp))
}

pub fn adjacency_spectrum_with(lp: &LevelPartition, q: &QuotientMatrices) -> Result<Spectrum> {
    let mut spec = Spectrum::new(SpectrumKind::Adjacency, None);
    for level in lp.levels() {
        let v = if lp.is_clique(level.index) { -1 } else { 0 };
        spec.push_exact(Eigenvalue::Integer(v), level.size - 1);
    }
    push_quotient_tail(&mut spec, &q.symmetrized(0.0, 1.0))?;
    spec.sort();
    Ok(spec)
}

pub fn signless_laplacian_spectrum(lp: &LevelPartition) -> Result<Spectrum> {
    signless_laplacian_spectrum_with(lp, &build_quotient(lp))
}

pub fn signless_laplacian_spectrum_with(lp: &LevelPartition, q: &QuotientMatrices) -> Result<Spectrum> {
    let mut spec = Spectrum::new(SpectrumKind::SignlessLaplacian, None);
    for level in lp.levels() {
        let p_i = lp.params().pow(level.index as u32) as i128;
        let v = if lp.is_clique(level.index) { p_i - 3 } else { p_i - 1 };
        spec.push_exact(Eigenvalue::Integer(v), level.size - 1);
    }
    push_quotient_tail(&mut spec, &q.symmetrized(1.0, 1.0))?;
    spec.sort();
    Ok(spec)
}

/// Eigenvalues of `L̄`: `0` and `p^k - 1` for `k != s`, ascending.
pub fn quotient_laplacian_eigenvalues(lp: &LevelPartition) -> Vec<i128> {
    let s = lp.params().special_level();
    std::iter::once(0)
        .chain(
            (1..=lp.len())
                .filter(|&k| k != s)
                .map(|k| lp.params().pow(k as u32) as i128 - 1),
        )
        .collect()
}

/// Integer Laplacian spectrum `{0} ∪ {(p^i-1)^[n_i]: i != s} ∪ {(p^s-1)^[n_s-1]}`.
pub fn laplacian_spectrum(lp: &LevelPartition) -> Spectrum {
    let s = lp.params().special_level();
    let mut spec = Spectrum::new(SpectrumKind::Laplacian, None);
    spec.push_exact(Eigenvalue::Integer(0), 1);
    for level in lp.levels() {
        let v = lp.params().pow(level.index as u32) as i128 - 1;
        let mult = if level.index == s { level.size - 1 } else { level.size };
        spec.push_exact(Eigenvalue::Integer(v), mult);
    }
    spec.sort();
    spec
}

/// `{0} ∪ {2n - λ : λ != 0}` over the Laplacian spectrum; valid because the
/// graph is connected with diameter at most 2.
pub fn distance_laplacian_spectrum(lp: &LevelPartition) -> Result<Spectrum> {
    let diameter = crate::structure::closed_form_structure(lp).diameter;
    if diameter > 2 {
        return Err(Error::DiameterTooLarge(diameter));
    }
    let two_n = 2 * lp.order() as i128;
    let mut spec = Spectrum::new(SpectrumKind::DistanceLaplacian, None);
    spec.push_exact(Eigenvalue::Integer(0), 1);
    for e in &laplacian_spectrum(lp).entries {
        let Eigenvalue::Integer(v) = e.value else {
            unreachable!("laplacian spectrum is integral")
        };
        if v != 0 {
            spec.push_exact(Eigenvalue::Integer(two_n - v), e.multiplicity);
        }
    }
    spec.sort();
    Ok(spec)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EigenvectorShape {
    /// `k < s`: `-Γ_k` at `k`, ones on `k+1..=c-1-k`.
    Lower,
    /// `k > s`: `-δ_k` on `c-k..=k-1`, one at `k`.
    Upper,
}

/// An eigenvector of `L̄` in level coordinates (index `j - 1` for level `j`).
#[derive(Debug, Clone, PartialEq)]
pub struct LaplacianEigenvector {
    pub k: usize,
    pub eigenvalue: i128,
    pub shape: EigenvectorShape,
    /// `Γ_k` for [`EigenvectorShape::Lower`], `δ_k` for [`EigenvectorShape::Upper`].
    pub scalar: Rational,
    pub coords: Vec<Rational>,
}

impl LaplacianEigenvector {
    /// `L̄ v - λ v`, exactly.
    pub fn residual(&self, lbar: &IntMatrix) -> Vec<Rational> {
        let lambda = Rational::from_integer(self.eigenvalue.into());
        lbar.mul_rational_vec(&self.coords)
            .into_iter()
            .zip(&self.coords)
            .map(|(lv, v)| lv - &lambda * v)
            .collect()
    }

    pub fn is_exact_eigenvector(&self, lbar: &IntMatrix) -> bool {
        self.residual(lbar).iter().all(Zero::is_zero)
    }
}

/// Explicit eigenvector of `L̄` for `p^k - 1`, `k != s`.
///
/// With `e = 2k - c + 1`:
/// `Γ_k = (1 - p^e) / (p - 1)` and `δ_k = (p - 1) / (p^e - p)`.
pub fn laplacian_eigenvector(lp: &LevelPartition, k: usize) -> Result<LaplacianEigenvector> {
    let params = lp.params();
    params.check_level(k)?;
    let s = params.special_level();
    if k == s {
        return Err(Error::Domain(format!(
            "level {k} is the special level; p^{k} - 1 has no quotient eigenvector"
        )));
    }
    let c = params.c() as usize;
    let p = BigInt::from(params.p());
    let dim = lp.len();
    let exponent = 2 * k as i64 - c as i64 + 1;
    let p_pow = |e: i64| -> Rational {
        if e >= 0 {
            Rational::from_integer(num_traits::pow(p.clone(), e as usize))
        } else {
            Rational::new(BigInt::one(), num_traits::pow(p.clone(), (-e) as usize))
        }
    };
    let p_minus_1 = Rational::from_integer(&p - 1);
    let mut coords = vec![Rational::zero(); dim];
    let (shape, scalar) = if k < s {
        let gamma = (Rational::one() - p_pow(exponent)) / &p_minus_1;
        coords[k - 1] = -gamma.clone();
        for x in &mut coords[k..c - 1 - k] {
            *x = Rational::one();
        }
        (EigenvectorShape::Lower, gamma)
    } else {
        let delta = &p_minus_1 / (p_pow(exponent) - Rational::from_integer(p.clone()));
        for x in &mut coords[c - k - 1..k - 1] {
            *x = -delta.clone();
        }
        coords[k - 1] = Rational::one();
        (EigenvectorShape::Upper, delta)
    };
    Ok(LaplacianEigenvector {
        k,
        eigenvalue: params.pow(k as u32) as i128 - 1,
        shape,
        scalar,
        coords,
    })
}

/// Index of the first vertex of level `i` in the enumeration order.
fn level_offset(lp: &LevelPartition, i: usize) -> usize {
    lp.levels()[..i - 1].iter().map(|l| l.size as usize).sum()
}

/// Difference basis `e_{v_1} - e_{v_j}` of the sum-zero vectors on `V_i`,
/// as full-length integer vectors in enumeration order.
pub fn fixed_eigenvector_basis(lp: &LevelPartition, i: usize) -> Result<Vec<Vec<i64>>> {
    lp.params().check_level(i)?;
    let n = lp.order();
    if n > DENSE_BUDGET as u64 {
        return Err(Error::TooLarge {
            what: "explicit eigenvector length",
            requested: n,
            budget: DENSE_BUDGET as u64,
        });
    }
    let n = n as usize;
    let start = level_offset(lp, i);
    let size = lp.level(i).size as usize;
    Ok((1..size)
        .map(|j| {
            let mut x = vec![0i64; n];
            x[start] = 1;
            x[start + j] = -1;
            x
        })
        .collect())
}

/// Checks `D x = d_i x` and `A x = -[2i >= c] x` exactly on the explicit
/// graph, which together give `A_alpha x = λ_i(alpha) x` for every `alpha`.
pub fn is_fixed_eigenvector(g: &GraphInstance, lp: &LevelPartition, i: usize, x: &[i64]) -> bool {
    if x.len() != g.order() || i == 0 || i > lp.len() {
        return false;
    }
    let degree = lp.level(i).degree as i64;
    let adjacency = -i64::from(lp.is_clique(i));
    (0..g.order()).all(|v| {
        let ax: i64 = g.neighbors(v).iter().map(|&w| x[w]).sum();
        g.degree(v) as i64 * x[v] == degree * x[v] && ax == adjacency * x[v]
    })
}
