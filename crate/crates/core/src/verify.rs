//! The full invariant suite for one `(p, c)`: oracle graph equivalence,
//! equitability of the level partition, every closed-form spectrum against a
//! dense eigensolve, exact eigenvector residuals, trace identities and the
//! brute-force structural values.

use num_traits::Zero;
use serde::Serialize;

use crate::closed_form::{
    a_alpha_spectrum_with, adjacency_spectrum_with, distance_laplacian_spectrum, fixed_eigenvector_basis,
    is_fixed_eigenvector, laplacian_eigenvector, laplacian_spectrum, quotient_laplacian_eigenvalues,
    signless_laplacian_spectrum_with,
};
use crate::error::{Error, Result};
use crate::exact::{rational, IntPoly, Rational};
use crate::graph::{build_graph_by_ring, build_graph_by_rule, GraphInstance};
use crate::levels::{level_partition, LevelPartition};
use crate::numeric::{
    assemble_matrix, compare_spectra, distance_laplacian_integer, symmetric_eigensolve_with_budget,
    DenseSymmetricMatrix, EigenResult, MatrixKind, DENSE_BUDGET,
};
use crate::quotient::{alpha_difference_quotient, build_quotient, QuotientMatrices};
use crate::ring::RingParams;
use crate::spectrum::Spectrum;
use crate::structure::structure_report;

/// Shift applied to one entry of the adjacency quotient before checking.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuotientFault {
    pub row: usize,
    pub col: usize,
    pub delta: i128,
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyOptions {
    pub tol: f64,
    /// Largest order for which graph-level and dense checks run.
    pub dense_budget: usize,
    pub alphas: Vec<Rational>,
    pub quotient_fault: Option<QuotientFault>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            tol: 1e-8,
            dense_budget: DENSE_BUDGET,
            alphas: [(0, 1), (1, 4), (1, 2), (3, 4), (1, 1)]
                .into_iter()
                .map(|(n, d)| rational(n, d))
                .collect(),
            quotient_fault: None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub status: CheckStatus,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyReport {
    pub params: RingParams,
    pub order: u64,
    pub checks: Vec<CheckResult>,
    /// Largest eigensolver residual bound seen over the dense checks.
    pub residual_bound: Option<f64>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != CheckStatus::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| c.status == CheckStatus::Fail)
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }
}

struct Checks {
    out: Vec<CheckResult>,
    residual: Option<f64>,
}

impl Checks {
    fn record(&mut self, name: impl Into<String>, ok: bool, detail: impl Into<String>) {
        self.out.push(CheckResult {
            name: name.into(),
            status: if ok { CheckStatus::Pass } else { CheckStatus::Fail },
            detail: detail.into(),
        });
    }

    fn skip(&mut self, name: impl Into<String>, detail: impl Into<String>) {
        self.out.push(CheckResult {
            name: name.into(),
            status: CheckStatus::Skipped,
            detail: detail.into(),
        });
    }

    fn error(&mut self, name: impl Into<String>, err: &Error) {
        self.record(name, false, err.to_string());
    }

    fn note_residual(&mut self, r: f64) {
        self.residual = Some(self.residual.map_or(r, |x| x.max(r)));
    }
}

pub fn verify(params: &RingParams, opts: &VerifyOptions) -> Result<VerifyReport> {
    if !(opts.tol.is_finite() && opts.tol > 0.0) {
        return Err(Error::InvalidTolerance(opts.tol));
    }
    for a in &opts.alphas {
        if a < &Rational::zero() || a > &Rational::from_integer(1.into()) {
            return Err(Error::AlphaOutOfRange(a.to_string()));
        }
    }
    let lp = level_partition(params);
    let mut q = build_quotient(&lp);
    if let Some(f) = opts.quotient_fault {
        q = q.with_corrupted_entry(f.row, f.col, f.delta)?;
    }
    let mut checks = Checks {
        out: Vec::new(),
        residual: None,
    };

    quotient_checks(&mut checks, &lp, &q, opts);

    let n = params.graph_order();
    if n > opts.dense_budget as u64 {
        checks.skip(
            "graph-checks",
            format!("order {n} exceeds the dense budget {}", opts.dense_budget),
        );
    } else {
        let g = build_graph_by_rule(params)?;
        graph_checks(&mut checks, &g, &lp, &q);
        dense_checks(&mut checks, &g, &lp, &q, opts);
        structure_checks(&mut checks, &g, &lp);
    }

    Ok(VerifyReport {
        params: *params,
        order: n,
        checks: checks.out,
        residual_bound: checks.residual,
    })
}

fn quotient_checks(checks: &mut Checks, lp: &LevelPartition, q: &QuotientMatrices, opts: &VerifyOptions) {
    let degrees: Vec<i128> = lp.degrees().map(i128::from).collect();
    let row_sums = q.q().row_sums();
    checks.record(
        "quotient-row-sums",
        row_sums == degrees && q.lbar().row_sums().iter().all(|&s| s == 0),
        format!("Q row sums {row_sums:?}, level degrees {degrees:?}"),
    );
    checks.record(
        "quotient-balance",
        q.is_balanced(),
        "n_i Q_ij = n_j Q_ji for all level pairs",
    );

    let roots = quotient_laplacian_eigenvalues(lp);
    let chi = q.lbar().characteristic_polynomial();
    let expected = IntPoly::from_roots(&roots);
    let vanishing = roots.iter().all(|&r| chi.eval(&r.into()).is_zero());
    checks.record(
        "laplacian-charpoly-exact",
        vanishing && chi == expected,
        format!("det(tI - L̄) = {chi}; claimed roots {roots:?}"),
    );

    let s = lp.params().special_level();
    let mut bad = Vec::new();
    for k in (1..=lp.len()).filter(|&k| k != s) {
        match laplacian_eigenvector(lp, k) {
            Ok(v) if v.is_exact_eigenvector(q.lbar()) => {}
            Ok(_) => bad.push(k),
            Err(e) => {
                checks.error("laplacian-eigenvectors-exact", &e);
                return;
            }
        }
    }
    checks.record(
        "laplacian-eigenvectors-exact",
        bad.is_empty(),
        if bad.is_empty() {
            format!("{} eigenvectors with zero residual", lp.len().saturating_sub(1))
        } else {
            format!("nonzero residual for k in {bad:?}")
        },
    );

    let name = "a-alpha-interpolation";
    let distinct: Vec<&Rational> = opts.alphas.iter().fold(Vec::new(), |mut acc, a| {
        if !acc.contains(&a) {
            acc.push(a);
        }
        acc
    });
    if distinct.len() < 2 {
        checks.skip(name, "needs two distinct alpha values");
    } else {
        let target: Vec<Rational> = q
            .lbar()
            .rows()
            .into_iter()
            .flatten()
            .map(|x| Rational::from_integer(x.into()))
            .collect();
        let ok = distinct
            .windows(2)
            .all(|w| alpha_difference_quotient(q, w[0], w[1]).is_ok_and(|d| d == target));
        checks.record(
            name,
            ok,
            format!("(B(a) - B(b)) / (a - b) = L̄ over {} alpha pairs", distinct.len() - 1),
        );
    }

    let lap = laplacian_spectrum(lp);
    let two_m = Rational::from_integer((2 * lp.edge_count()).into());
    let adj_fixed = adjacency_fixed_sum(lp);
    let signless_fixed = signless_fixed_sum(lp);
    let adjacency_sum = adj_fixed + Rational::from_integer(q.q().trace().into());
    let signless_sum = signless_fixed + Rational::from_integer(q.signless().trace().into());
    let weighted: u128 = lp.levels().iter().map(|l| l.size as u128 * l.degree as u128).sum();
    checks.record(
        "trace-identities",
        adjacency_sum.is_zero()
            && lap.exact_sum() == two_m
            && signless_sum == two_m
            && Rational::from_integer(weighted.into()) == two_m,
        format!(
            "sum adjacency = {adjacency_sum}, sum laplacian = {}, sum signless = {signless_sum}, 2m = {two_m}, sum n_i d_i = {weighted}",
            lap.exact_sum()
        ),
    );
}

/// Exact sum of the fixed part of the adjacency spectrum.
fn adjacency_fixed_sum(lp: &LevelPartition) -> Rational {
    let total: i128 = lp
        .levels()
        .iter()
        .filter(|l| lp.is_clique(l.index))
        .map(|l| -(l.size as i128 - 1))
        .sum();
    Rational::from_integer(total.into())
}

fn signless_fixed_sum(lp: &LevelPartition) -> Rational {
    let total: i128 = lp
        .levels()
        .iter()
        .map(|l| {
            let p_i = lp.params().pow(l.index as u32) as i128;
            let v = if lp.is_clique(l.index) { p_i - 3 } else { p_i - 1 };
            v * (l.size as i128 - 1)
        })
        .sum();
    Rational::from_integer(total.into())
}

fn graph_checks(checks: &mut Checks, g: &GraphInstance, lp: &LevelPartition, q: &QuotientMatrices) {
    match build_graph_by_ring(g.params()) {
        Ok(oracle) => {
            let same = oracle == *g;
            checks.record(
                "graph-oracle-equivalence",
                same,
                format!(
                    "ring multiplication: {} edges, level rule: {} edges",
                    oracle.edge_count(),
                    g.edge_count()
                ),
            );
        }
        Err(e) => checks.error("graph-oracle-equivalence", &e),
    }

    let bad_degree = (0..g.order()).find(|&v| g.degree(v) as u64 != lp.level(g.vertex(v).level).degree);
    checks.record(
        "level-degrees",
        bad_degree.is_none(),
        match bad_degree {
            None => "every vertex has its level degree".to_string(),
            Some(v) => format!("vertex {v} has degree {}", g.degree(v)),
        },
    );

    let degree_sum: u128 = (0..g.order()).map(|v| g.degree(v) as u128).sum();
    checks.record(
        "handshake",
        degree_sum == 2 * g.edge_count() as u128 && degree_sum == 2 * lp.edge_count(),
        format!("sum of degrees {degree_sum}, edges {}", g.edge_count()),
    );

    // Every vertex of V_i has exactly Q_ij neighbours in V_j.
    let dim = lp.len();
    let mut mismatch = None;
    'outer: for v in 0..g.order() {
        let i = g.vertex(v).level;
        let mut counts = vec![0i128; dim];
        for &w in g.neighbors(v) {
            counts[g.vertex(w).level - 1] += 1;
        }
        for (j, &count) in counts.iter().enumerate() {
            if count != q.q().get(i - 1, j) {
                mismatch = Some((v, i, j + 1, count, q.q().get(i - 1, j)));
                break 'outer;
            }
        }
    }
    checks.record(
        "equitability",
        mismatch.is_none(),
        match mismatch {
            None => "neighbour counts match the quotient for every vertex".to_string(),
            Some((v, i, j, got, want)) => {
                format!("vertex {v} in level {i} has {got} neighbours in level {j}, quotient says {want}")
            }
        },
    );

    let name = "fixed-eigenvector-basis";
    let mut failed = None;
    let mut count = 0usize;
    for i in 1..=lp.len() {
        match fixed_eigenvector_basis(lp, i) {
            Ok(basis) => {
                count += basis.len();
                if let Some(k) = basis.iter().position(|x| !is_fixed_eigenvector(g, lp, i, x)) {
                    failed = Some((i, k));
                    break;
                }
            }
            Err(e) => {
                checks.error(name, &e);
                return;
            }
        }
    }
    checks.record(
        name,
        failed.is_none(),
        match failed {
            None => format!("{count} level-supported sum-zero vectors are exact eigenvectors"),
            Some((i, k)) => format!("basis vector {k} of level {i} is not an eigenvector"),
        },
    );

    match g.diameter() {
        Ok(d) => checks.record("diameter-at-most-2", d <= 2, format!("BFS diameter {d}")),
        Err(e) => checks.error("diameter-at-most-2", &e),
    }

    match distance_laplacian_integer(g) {
        Ok(m) => {
            let n = g.order();
            let ok = (0..n).all(|i| m[i * n..(i + 1) * n].iter().sum::<i64>() == 0);
            checks.record("distance-laplacian-row-sums", ok, "integer row sums of Tr - D");
        }
        Err(e) => checks.error("distance-laplacian-row-sums", &e),
    }
}

fn solve(checks: &mut Checks, m: &DenseSymmetricMatrix, opts: &VerifyOptions) -> Result<EigenResult> {
    let r = symmetric_eigensolve_with_budget(m, opts.tol, opts.dense_budget)?;
    checks.note_residual(r.residual_bound);
    Ok(r)
}

fn dense_checks(
    checks: &mut Checks,
    g: &GraphInstance,
    lp: &LevelPartition,
    q: &QuotientMatrices,
    opts: &VerifyOptions,
) {
    let n = g.order();
    let mut closed: Vec<(String, MatrixKind, Result<Spectrum>)> = vec![
        ("laplacian".into(), MatrixKind::Laplacian, Ok(laplacian_spectrum(lp))),
        (
            "signless".into(),
            MatrixKind::Signless,
            signless_laplacian_spectrum_with(lp, q),
        ),
        (
            "adjacency".into(),
            MatrixKind::Adjacency,
            adjacency_spectrum_with(lp, q),
        ),
    ];
    for a in &opts.alphas {
        closed.push((
            format!("a-alpha({a})"),
            MatrixKind::AAlpha(a.clone()),
            a_alpha_spectrum_with(lp, q, a),
        ));
    }
    if n >= 2 {
        closed.push((
            "distance-laplacian".into(),
            MatrixKind::DistanceLaplacian,
            distance_laplacian_spectrum(lp),
        ));
    }

    let mut identities = Vec::new();
    for (label, kind, spectrum) in closed {
        let name = format!("closed-vs-dense-{label}");
        let spectrum = match spectrum {
            Ok(s) => s,
            Err(e) => {
                checks.error(name, &e);
                continue;
            }
        };
        let psd = matches!(kind, MatrixKind::Laplacian | MatrixKind::Signless);
        let result = assemble_matrix(g, kind).and_then(|m| {
            let r = solve(checks, &m, opts)?;
            Ok((m, r))
        });
        let (m, numeric) = match result {
            Ok(x) => x,
            Err(e) => {
                checks.error(name, &e);
                continue;
            }
        };
        identities.push(dense_identities(&label, &m, &numeric, opts.tol));
        if psd {
            let min = numeric.eigenvalues.last().copied().unwrap_or(0.0);
            checks.record(
                format!("positive-semidefinite-{label}"),
                min >= -opts.tol * numeric.norm.max(1.0),
                format!("smallest eigenvalue {min:e}"),
            );
        }
        match compare_spectra(&spectrum, &numeric, opts.tol) {
            Ok(report) => {
                let bad: Vec<String> = report
                    .clusters
                    .iter()
                    .filter(|c| !c.agrees)
                    .map(|c| {
                        format!(
                            "{:.6}: {} numeric vs {} closed",
                            c.value, c.numeric_count, c.closed_count
                        )
                    })
                    .collect();
                checks.record(
                    name,
                    report.passed,
                    if bad.is_empty() {
                        format!("max deviation {:e} (tol {:e})", report.max_deviation, report.tol)
                    } else {
                        format!(
                            "max deviation {:e} (tol {:e}); multiplicity mismatch at {}",
                            report.max_deviation,
                            report.tol,
                            bad.join(", ")
                        )
                    },
                );
            }
            Err(e) => checks.error(name, &e),
        }
    }
    let failing: Vec<&String> = identities.iter().filter_map(|r| r.as_ref().err()).collect();
    checks.record(
        "dense-trace-frobenius",
        failing.is_empty(),
        if failing.is_empty() {
            format!("{} dense solves preserve trace and Frobenius norm", identities.len())
        } else {
            failing.iter().map(|s| s.as_str()).collect::<Vec<_>>().join("; ")
        },
    );
}

fn dense_identities(
    label: &str,
    m: &DenseSymmetricMatrix,
    r: &EigenResult,
    tol: f64,
) -> std::result::Result<(), String> {
    let n = m.dim() as f64;
    let norm = r.norm.max(1.0);
    let sum: f64 = r.eigenvalues.iter().sum();
    let sq: f64 = r.eigenvalues.iter().map(|x| x * x).sum();
    let trace_err = (sum - m.trace()).abs();
    let frob_err = (sq - m.frobenius_norm_sq()).abs();
    if trace_err <= tol * n * norm && frob_err <= tol * n * norm * norm {
        Ok(())
    } else {
        Err(format!(
            "{label}: trace error {trace_err:e}, Frobenius error {frob_err:e}"
        ))
    }
}

fn structure_checks(checks: &mut Checks, g: &GraphInstance, lp: &LevelPartition) {
    let report = match structure_report(g, lp) {
        Ok(r) => r,
        Err(e) => {
            checks.error("structure", &e);
            return;
        }
    };
    for a in &report.agreement {
        let name = format!("structure-{}", a.field.replace('_', "-"));
        match (a.agrees, &a.brute_force) {
            (Some(ok), Some(b)) => checks.record(name, ok, format!("closed form {}, brute force {b}", a.closed_form)),
            _ => checks.skip(name, format!("closed form {}, brute force over budget", a.closed_form)),
        }
    }
}
