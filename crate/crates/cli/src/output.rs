//! Rendering of command results as JSON, CSV or plain text.
//!
//! Every JSON document has the same top-level keys: `params`, `method`,
//! `spectrum` or `report`, `residual_bound` and `checks`.

use std::fmt::Write as _;

use serde::Serialize;
use serde_json::{json, Value};
use zdg_core::numeric::ComparisonReport;
use zdg_core::structure::StructureReport;
use zdg_core::{CheckResult, CheckStatus, Eigenvalue, LevelPartition, RingParams, Spectrum, VerifyReport};

pub fn params_json(params: &RingParams) -> Value {
    json!({
        "p": params.p(),
        "c": params.c(),
        "order": params.graph_order(),
        "ring": params.to_string(),
    })
}

pub fn entry_kind(value: &Eigenvalue) -> &'static str {
    match value {
        Eigenvalue::Integer(_) | Eigenvalue::Rational(_) => "exact",
        Eigenvalue::Affine { .. } => "affine",
        Eigenvalue::Numeric(_) => "numeric",
        Eigenvalue::QuotientRoots(_) => "symbolic",
    }
}

pub fn spectrum_json(spec: &Spectrum) -> Value {
    let alpha = spec.alpha.as_ref();
    let entries: Vec<Value> = spec
        .entries
        .iter()
        .map(|e| {
            let mut v = json!({
                "value": e.value.to_string(),
                "multiplicity": e.multiplicity,
                "kind": entry_kind(&e.value),
                "approx": e.value.to_f64(alpha),
            });
            if let (Eigenvalue::Affine { .. }, Some(exact)) = (&e.value, e.value.exact(alpha)) {
                v["at_alpha"] = json!(exact.to_string());
            }
            v
        })
        .collect();
    json!({
        "kind": spec.kind,
        "alpha": alpha.map(ToString::to_string),
        "total_multiplicity": spec.total_multiplicity(),
        "entries": entries,
    })
}

pub fn check_json(check: &CheckResult) -> Value {
    serde_json::to_value(check).expect("check results serialize")
}

pub fn comparison_check(name: String, report: &ComparisonReport) -> (CheckResult, Value) {
    let check = CheckResult {
        name,
        status: if report.passed {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail
        },
        detail: format!("max deviation {:e} (tol {:e})", report.max_deviation, report.tol),
    };
    let mut v = check_json(&check);
    v["comparison"] = serde_json::to_value(report).expect("reports serialize");
    (check, v)
}

pub fn envelope(
    params: &RingParams,
    method: &str,
    body_key: &str,
    body: Value,
    residual: Option<f64>,
    checks: Vec<Value>,
) -> String {
    let mut doc = json!({
        "params": params_json(params),
        "method": method,
        "residual_bound": residual,
        "checks": checks,
    });
    doc[body_key] = body;
    let mut s = serde_json::to_string_pretty(&doc).expect("json output");
    s.push('\n');
    s
}

pub fn spectrum_csv(spec: &Spectrum) -> String {
    let mut out = String::from("eigenvalue,multiplicity,kind\n");
    for e in &spec.entries {
        let _ = writeln!(out, "{},{},{}", e.value, e.multiplicity, entry_kind(&e.value));
    }
    out
}

pub fn spectrum_text(spec: &Spectrum, params: &RingParams) -> String {
    let mut out = format!(
        "{} spectrum of Gamma({params}), {} vertices",
        spec.kind,
        params.graph_order()
    );
    if let Some(a) = &spec.alpha {
        let _ = write!(out, ", alpha = {a}");
    }
    out.push('\n');
    for e in &spec.entries {
        let shown = match (&e.value, e.value.exact(spec.alpha.as_ref())) {
            (Eigenvalue::Affine { .. }, Some(v)) => format!("{} = {v}", e.value),
            _ => e.value.to_string(),
        };
        let _ = writeln!(out, "  {shown:<32} x{}", e.multiplicity);
    }
    if let Some(r) = spec.residual_bound {
        let _ = writeln!(out, "residual bound {r:e}");
    }
    out
}

pub fn checks_text(checks: &[CheckResult]) -> String {
    let mut out = String::new();
    for c in checks {
        let status = match c.status {
            CheckStatus::Pass => "PASS",
            CheckStatus::Fail => "FAIL",
            CheckStatus::Skipped => "SKIP",
        };
        let _ = writeln!(out, "{status} {}: {}", c.name, c.detail);
    }
    out
}

pub fn checks_csv(checks: &[CheckResult]) -> String {
    let mut out = String::from("check,status,detail\n");
    for c in checks {
        let status = serde_json::to_value(c.status).expect("status serializes");
        let _ = writeln!(
            out,
            "{},{},\"{}\"",
            c.name,
            status.as_str().unwrap_or_default(),
            c.detail.replace('"', "\"\"")
        );
    }
    out
}

#[derive(Serialize)]
struct StructureBody<'a> {
    levels: &'a [zdg_core::LevelInfo],
    #[serde(flatten)]
    report: &'a StructureReport,
    consistent: bool,
}

pub fn structure_json(lp: &LevelPartition, report: &StructureReport) -> Value {
    serde_json::to_value(StructureBody {
        levels: lp.levels(),
        report,
        consistent: report.consistent(),
    })
    .expect("structure report serializes")
}

pub fn structure_checks(report: &StructureReport) -> Vec<CheckResult> {
    report
        .agreement
        .iter()
        .map(|a| CheckResult {
            name: format!("structure-{}", a.field.replace('_', "-")),
            status: match a.agrees {
                Some(true) => CheckStatus::Pass,
                Some(false) => CheckStatus::Fail,
                None => CheckStatus::Skipped,
            },
            detail: match &a.brute_force {
                Some(b) => format!("closed form {}, brute force {b}", a.closed_form),
                None => format!("closed form {}", a.closed_form),
            },
        })
        .collect()
}

pub fn structure_text(lp: &LevelPartition, report: &StructureReport) -> String {
    let v = &report.closed_form;
    let params = lp.params();
    let mut out = format!("Gamma({params}): order {}, size {}\n", v.order, v.size);
    out.push_str("level  size  degree  kind\n");
    for l in lp.levels() {
        let kind = if lp.is_clique(l.index) { "clique" } else { "independent" };
        let _ = writeln!(out, "{:>5}  {:>4}  {:>6}  {kind}", l.index, l.size, l.degree);
    }
    let show = |x: Option<u64>| x.map_or_else(|| "-".to_string(), |x| x.to_string());
    let _ = writeln!(out, "clique number        {}", show(v.clique_number));
    let _ = writeln!(out, "independence number  {}", show(v.independence_number));
    let _ = writeln!(out, "domination number    {}", show(v.domination_number));
    let _ = writeln!(out, "diameter             {}", v.diameter);
    let _ = writeln!(out, "girth                {}", v.girth);
    let _ = writeln!(out, "universal vertices   {}", v.universal_vertex_count);
    if report.brute_force.is_some() {
        out.push_str(&checks_text(&structure_checks(report)));
    }
    for claim in report.claims.iter().filter(|c| !c.holds) {
        let _ = writeln!(
            out,
            "note: {} does not hold here (claimed {}, actual {})",
            claim.statement, claim.claimed, claim.actual
        );
    }
    out
}

pub fn verify_json(report: &VerifyReport) -> Value {
    let count = |s: CheckStatus| report.checks.iter().filter(|c| c.status == s).count();
    json!({
        "passed": report.passed(),
        "order": report.order,
        "pass": count(CheckStatus::Pass),
        "fail": count(CheckStatus::Fail),
        "skipped": count(CheckStatus::Skipped),
    })
}
