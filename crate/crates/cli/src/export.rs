use std::fmt::Write as _;

use zdg_core::GraphInstance;

fn coeff_vector(coeffs: &[u64]) -> String {
    let parts: Vec<String> = coeffs.iter().map(u64::to_string).collect();
    format!("[{}]", parts.join(","))
}

/// One `# vertex` comment per vertex, then `u v` per edge with `u < v`,
/// sorted.
pub fn edgelist(g: &GraphInstance) -> String {
    let mut out = String::new();
    for (id, v) in g.vertices().iter().enumerate() {
        let _ = writeln!(
            out,
            "# vertex {id} level {} label {}",
            v.level,
            coeff_vector(v.label.coeffs())
        );
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn dot(g: &GraphInstance) -> String {
    let mut out = String::from("graph zero_divisors {\n");
    let _ = writeln!(out, "  label=\"Gamma({})\";", g.params());
    for (id, v) in g.vertices().iter().enumerate() {
        let _ = writeln!(
            out,
            "  {id} [label=\"{}\", level={}, coeffs=\"{}\"];",
            v.label,
            v.level,
            coeff_vector(v.label.coeffs())
        );
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}
