use serde::Serialize;

use crate::error::{Error, Result};
use crate::spectrum::{Eigenvalue, Spectrum, SpectrumKind};

use super::eigen::EigenResult;

/// Relative gap below which numeric eigenvalues count as one cluster.
pub const CLUSTER_GAP: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClusterAgreement {
    pub value: f64,
    pub numeric_count: u64,
    pub closed_count: u64,
    pub agrees: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ComparisonReport {
    pub max_deviation: f64,
    pub tol: f64,
    pub clusters: Vec<ClusterAgreement>,
    pub passed: bool,
}

/// Groups descending `values` into `(mean, count)` runs whose consecutive
/// gaps are at most `gap`.
pub fn cluster(values: &[f64], gap: f64) -> Vec<(f64, u64)> {
    let mut out: Vec<(f64, u64, f64)> = Vec::new();
    for &v in values {
        match out.last_mut() {
            Some((sum, count, last)) if (*last - v).abs() <= gap => {
                *sum += v;
                *count += 1;
                *last = v;
            }
            _ => out.push((v, 1, v)),
        }
    }
    out.into_iter()
        .map(|(sum, count, _)| (sum / count as f64, count))
        .collect()
}

fn gap_for(numeric: &EigenResult) -> f64 {
    CLUSTER_GAP * numeric.norm.max(1.0)
}

/// Numeric eigenvalues as a spectrum, clustering near-equal values.
pub fn numeric_spectrum(kind: SpectrumKind, numeric: &EigenResult) -> Spectrum {
    let mut s = Spectrum::new(kind, None);
    for (value, count) in cluster(&numeric.eigenvalues, gap_for(numeric)) {
        s.push(Eigenvalue::Numeric(value), count);
    }
    s.residual_bound = Some(numeric.residual_bound);
    s
}

/// Matches sorted closed-form values against sorted numeric eigenvalues.
pub fn compare_spectra(closed: &Spectrum, numeric: &EigenResult, tol: f64) -> Result<ComparisonReport> {
    let closed_total = closed.total_multiplicity();
    let numeric_total = numeric.eigenvalues.len() as u64;
    if closed_total != numeric_total {
        return Err(Error::MultiplicityMismatch {
            closed: closed_total,
            numeric: numeric_total,
        });
    }
    let closed_values = closed
        .expanded_f64()
        .ok_or_else(|| Error::Domain("closed-form spectrum has unevaluated entries".into()))?;

    let max_deviation = closed_values
        .iter()
        .zip(&numeric.eigenvalues)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max);

    let gap = gap_for(numeric);
    let window = gap + tol;
    let clusters: Vec<ClusterAgreement> = cluster(&numeric.eigenvalues, gap)
        .into_iter()
        .map(|(value, numeric_count)| {
            let closed_count = closed_values.iter().filter(|&&v| (v - value).abs() <= window).count() as u64;
            ClusterAgreement {
                value,
                numeric_count,
                closed_count,
                agrees: closed_count == numeric_count,
            }
        })
        .collect();
    let passed = max_deviation <= tol && clusters.iter().all(|c| c.agrees);
    Ok(ComparisonReport {
        max_deviation,
        tol,
        clusters,
        passed,
    })
}
