//! Structural invariants: closed forms over the level partition and exact
//! brute-force counterparts on explicit graphs.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::GraphInstance;
use crate::levels::LevelPartition;

/// Largest order for which the brute-force clique number is computed.
pub const CLIQUE_BUDGET: usize = 200;
/// Largest order for brute-force independence and domination numbers.
pub const INDEPENDENCE_BUDGET: usize = 60;
pub const DOMINATION_BUDGET: usize = 60;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Girth {
    Finite(u64),
    Infinite,
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Infinite => f.write_str("infinite"),
        }
    }
}

impl Serialize for Girth {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Girth::Finite(g) => s.serialize_u64(*g),
            Girth::Infinite => s.serialize_str("infinite"),
        }
    }
}

/// Values of the structural invariants. Optional fields are `None` when the
/// brute-force computation is over budget.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructureValues {
    pub order: u64,
    pub size: u128,
    pub clique_number: Option<u64>,
    pub independence_number: Option<u64>,
    pub domination_number: Option<u64>,
    pub diameter: u64,
    pub girth: Girth,
    pub universal_vertex_count: u64,
}

/// A general statement about the family checked against the true value.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Claim {
    pub name: &'static str,
    pub statement: String,
    pub claimed: String,
    pub actual: String,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FieldAgreement {
    pub field: &'static str,
    pub closed_form: String,
    pub brute_force: Option<String>,
    pub agrees: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructureReport {
    pub closed_form: StructureValues,
    pub brute_force: Option<StructureValues>,
    pub agreement: Vec<FieldAgreement>,
    pub claims: Vec<Claim>,
}

impl StructureReport {
    /// True when every brute-force value that was computed matches.
    pub fn consistent(&self) -> bool {
        self.agreement.iter().all(|a| a.agrees != Some(false))
    }
}

/// Closed-form invariants; every field is populated.
pub fn closed_form_structure(lp: &LevelPartition) -> StructureValues {
    let params = lp.params();
    let p = params.p();
    let c = params.c();
    let s = params.special_level() as u32;
    let p_s = params.pow(s);
    let odd = u64::from(!params.is_even());
    let even = u64::from(params.is_even());

    // The clique levels together form a clique of size p^s - 1; for odd c
    // one vertex of V_s extends it. Dually the independent levels carry
    // p^(c-1) - p^s vertices; for even c one vertex of V_s extends them.
    let diameter = match (c, p) {
        (2, 2) => 0,
        (2, _) => 1,
        _ => 2,
    };
    let girth = match (c, p) {
        (2, p) if p >= 5 => Girth::Finite(3),
        (2, _) | (3, 2) => Girth::Infinite,
        _ => Girth::Finite(3),
    };
    StructureValues {
        order: params.graph_order(),
        size: lp.edge_count(),
        clique_number: Some(p_s - 1 + odd),
        independence_number: Some(params.graph_order() + 1 - p_s + even),
        domination_number: Some(1),
        diameter,
        girth,
        universal_vertex_count: p - 1,
    }
}

fn claims(lp: &LevelPartition, actual: &StructureValues) -> Vec<Claim> {
    let params = lp.params();
    let s = params.special_level() as u32;
    let p_s = params.pow(s);
    let omega = if params.is_even() { p_s - 1 } else { p_s };
    let alpha = params.graph_order() + 1 - p_s;
    let show = |v: Option<u64>| v.map_or_else(|| "unknown".to_string(), |v| v.to_string());
    let mut out = vec![
        Claim {
            name: "clique-number",
            statement: "omega = p^s - 1 (c even), p^s (c odd)".into(),
            claimed: omega.to_string(),
            actual: show(actual.clique_number),
            holds: actual.clique_number == Some(omega),
        },
        Claim {
            name: "independence-number",
            statement: "alpha = p^(c-1) - p^s".into(),
            claimed: alpha.to_string(),
            actual: show(actual.independence_number),
            holds: actual.independence_number == Some(alpha),
        },
        Claim {
            name: "domination-number",
            statement: "gamma = 1".into(),
            claimed: "1".into(),
            actual: show(actual.domination_number),
            holds: actual.domination_number == Some(1),
        },
    ];
    if params.c() >= 3 {
        out.push(Claim {
            name: "diameter",
            statement: "diameter = 2".into(),
            claimed: "2".into(),
            actual: actual.diameter.to_string(),
            holds: actual.diameter == 2,
        });
    }
    out.push(Claim {
        name: "girth",
        statement: "girth = 3".into(),
        claimed: "3".into(),
        actual: actual.girth.to_string(),
        holds: actual.girth == Girth::Finite(3),
    });
    out
}

fn agreement(closed: &StructureValues, brute: Option<&StructureValues>) -> Vec<FieldAgreement> {
    fn field<T: ToString + PartialEq>(name: &'static str, closed: &T, brute: Option<&T>) -> FieldAgreement {
        FieldAgreement {
            field: name,
            closed_form: closed.to_string(),
            brute_force: brute.map(ToString::to_string),
            agrees: brute.map(|b| b == closed),
        }
    }
    fn opt(v: &Option<u64>) -> String {
        v.map_or_else(|| "unknown".into(), |v| v.to_string())
    }
    let b = brute;
    let mut out = vec![
        field("order", &closed.order, b.map(|b| &b.order)),
        field("size", &closed.size, b.map(|b| &b.size)),
    ];
    for (name, cv, bv) in [
        ("clique_number", closed.clique_number, b.and_then(|b| b.clique_number)),
        (
            "independence_number",
            closed.independence_number,
            b.and_then(|b| b.independence_number),
        ),
        (
            "domination_number",
            closed.domination_number,
            b.and_then(|b| b.domination_number),
        ),
    ] {
        out.push(FieldAgreement {
            field: name,
            closed_form: opt(&cv),
            brute_force: bv.map(|v| v.to_string()),
            agrees: bv.map(|v| Some(v) == cv),
        });
    }
    out.push(field("diameter", &closed.diameter, b.map(|b| &b.diameter)));
    out.push(field("girth", &closed.girth, b.map(|b| &b.girth)));
    out.push(field(
        "universal_vertex_count",
        &closed.universal_vertex_count,
        b.map(|b| &b.universal_vertex_count),
    ));
    out
}

/// Report built from the closed forms alone (no graph needed).
pub fn closed_form_report(lp: &LevelPartition) -> StructureReport {
    let closed = closed_form_structure(lp);
    StructureReport {
        agreement: agreement(&closed, None),
        claims: claims(lp, &closed),
        closed_form: closed,
        brute_force: None,
    }
}

/// Closed forms cross-checked by brute force on `g`. Claims are judged
/// against the brute-force value where one exists.
pub fn structure_report(g: &GraphInstance, lp: &LevelPartition) -> Result<StructureReport> {
    if g.params() != lp.params() {
        return Err(Error::ParamsMismatch(format!(
            "graph built for {} but partition for {}",
            g.params(),
            lp.params()
        )));
    }
    let closed = closed_form_structure(lp);
    let brute = brute_force_structure(g)?;
    let mut actual = closed.clone();
    actual.clique_number = brute.clique_number.or(closed.clique_number);
    actual.independence_number = brute.independence_number.or(closed.independence_number);
    actual.domination_number = brute.domination_number.or(closed.domination_number);
    actual.diameter = brute.diameter;
    actual.girth = brute.girth;
    Ok(StructureReport {
        agreement: agreement(&closed, Some(&brute)),
        claims: claims(lp, &actual),
        closed_form: closed,
        brute_force: Some(brute),
    })
}

pub fn brute_force_structure(g: &GraphInstance) -> Result<StructureValues> {
    let n = g.order();
    Ok(StructureValues {
        order: n as u64,
        size: g.edge_count() as u128,
        clique_number: (n <= CLIQUE_BUDGET).then(|| clique_number(g) as u64),
        independence_number: (n <= INDEPENDENCE_BUDGET).then(|| independence_number(g) as u64),
        domination_number: (n <= DOMINATION_BUDGET).then(|| domination_number(g) as u64),
        diameter: g.diameter()?,
        girth: girth(g),
        universal_vertex_count: (0..n).filter(|&v| g.degree(v) + 1 == n).count() as u64,
    })
}

#[derive(Clone)]
struct BitSet(Vec<u64>);

impl BitSet {
    fn new(n: usize) -> Self {
        BitSet(vec![0; n.div_ceil(64)])
    }
    fn insert(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }
    fn contains(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }
}

fn adjacency_bits(n: usize, adjacent: impl Fn(usize, usize) -> bool) -> Vec<BitSet> {
    (0..n)
        .map(|u| {
            let mut row = BitSet::new(n);
            for v in (0..n).filter(|&v| v != u && adjacent(u, v)) {
                row.insert(v);
            }
            row
        })
        .collect()
}

/// Exact maximum clique: branch and bound with greedy-colouring bounds.
fn max_clique(adj: &[BitSet]) -> usize {
    fn colour_sort(candidates: &[usize], adj: &[BitSet]) -> (Vec<usize>, Vec<usize>) {
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for &v in candidates {
            match classes
                .iter_mut()
                .find(|class| class.iter().all(|&u| !adj[v].contains(u)))
            {
                Some(class) => class.push(v),
                None => classes.push(vec![v]),
            }
        }
        let mut order = Vec::with_capacity(candidates.len());
        let mut bounds = Vec::with_capacity(candidates.len());
        for (k, class) in classes.into_iter().enumerate() {
            for v in class {
                order.push(v);
                bounds.push(k + 1);
            }
        }
        (order, bounds)
    }

    fn expand(depth: usize, candidates: Vec<usize>, adj: &[BitSet], best: &mut usize) {
        let (order, bounds) = colour_sort(&candidates, adj);
        let mut live: Vec<usize> = order.clone();
        for idx in (0..order.len()).rev() {
            if depth + bounds[idx] <= *best {
                return;
            }
            let v = order[idx];
            live.pop();
            let next: Vec<usize> = live.iter().copied().filter(|&u| adj[v].contains(u)).collect();
            if next.is_empty() {
                *best = (*best).max(depth + 1);
            } else {
                expand(depth + 1, next, adj, best);
            }
        }
    }

    let mut best = 0;
    let mut start: Vec<usize> = (0..adj.len()).collect();
    // High-degree vertices last so they are branched on first.
    start.sort_by_key(|&v| adj[v].0.iter().map(|w| w.count_ones()).sum::<u32>());
    expand(0, start, adj, &mut best);
    best
}

pub fn clique_number(g: &GraphInstance) -> usize {
    max_clique(&adjacency_bits(g.order(), |u, v| g.has_edge(u, v)))
}

pub fn independence_number(g: &GraphInstance) -> usize {
    max_clique(&adjacency_bits(g.order(), |u, v| !g.has_edge(u, v)))
}

/// Smallest dominating set size by exhaustive search over subset sizes.
pub fn domination_number(g: &GraphInstance) -> usize {
    let n = g.order();
    let closed: Vec<BitSet> = (0..n)
        .map(|v| {
            let mut s = BitSet::new(n);
            s.insert(v);
            for &w in g.neighbors(v) {
                s.insert(w);
            }
            s
        })
        .collect();
    let full = {
        let mut s = BitSet::new(n);
        (0..n).for_each(|v| s.insert(v));
        s
    };

    fn search(start: usize, left: usize, covered: &BitSet, closed: &[BitSet], full: &BitSet) -> bool {
        if left == 0 {
            return covered.0 == full.0;
        }
        (start..closed.len()).any(|v| {
            let mut next = covered.clone();
            next.0.iter_mut().zip(&closed[v].0).for_each(|(a, b)| *a |= b);
            search(v + 1, left - 1, &next, closed, full)
        })
    }

    (0..=n)
        .find(|&k| search(0, k, &BitSet::new(n), &closed, &full))
        .unwrap_or(n)
}

/// Shortest cycle length via BFS from every vertex.
pub fn girth(g: &GraphInstance) -> Girth {
    let n = g.order();
    let mut best: Option<u64> = None;
    for root in 0..n {
        let mut dist = vec![u64::MAX; n];
        let mut parent = vec![usize::MAX; n];
        let mut queue = std::collections::VecDeque::from([root]);
        dist[root] = 0;
        while let Some(u) = queue.pop_front() {
            if best.is_some_and(|b| 2 * dist[u] + 1 >= b) {
                break;
            }
            for &w in g.neighbors(u) {
                if dist[w] == u64::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    let len = dist[u] + dist[w] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best.map_or(Girth::Infinite, Girth::Finite)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_graph_by_rule;
    use crate::levels::level_partition;
    use crate::ring::RingParams;

    fn setup(p: u64, c: u32) -> (GraphInstance, LevelPartition) {
        let r = RingParams::new(p, c).unwrap();
        (build_graph_by_rule(&r).unwrap(), level_partition(&r))
    }

    #[test]
    fn odd_example() {
        let (g, lp) = setup(2, 5);
        let report = structure_report(&g, &lp).unwrap();
        let cf = &report.closed_form;
        assert_eq!(cf.clique_number, Some(4));
        assert_eq!(cf.independence_number, Some(12));
        assert_eq!(cf.diameter, 2);
        assert_eq!(cf.girth, Girth::Finite(3));
        assert!(report.consistent());
        assert!(report.claims.iter().all(|c| c.holds));
    }

    #[test]
    fn even_example() {
        let (g, lp) = setup(2, 6);
        let report = structure_report(&g, &lp).unwrap();
        assert_eq!(report.closed_form.clique_number, Some(7));
        assert_eq!(report.closed_form.girth, Girth::Finite(3));
        assert!(report.consistent());
        // The independent levels plus one vertex of V_3 are independent.
        assert_eq!(report.brute_force.as_ref().unwrap().independence_number, Some(25));
        let alpha = report.claims.iter().find(|c| c.name == "independence-number").unwrap();
        assert!(!alpha.holds);
    }

    #[test]
    fn k2() {
        let (g, lp) = setup(3, 2);
        let report = structure_report(&g, &lp).unwrap();
        let bf = report.brute_force.as_ref().unwrap();
        assert_eq!(bf.diameter, 1);
        assert_eq!(bf.girth, Girth::Infinite);
        assert_eq!(bf.clique_number, Some(2));
        assert!(report.consistent());
        assert!(!report.claims.iter().find(|c| c.name == "girth").unwrap().holds);
    }

    #[test]
    fn degenerate_table() {
        for (p, c, diameter, girth) in [
            (2, 2, 0, Girth::Infinite),
            (3, 2, 1, Girth::Infinite),
            (5, 2, 1, Girth::Finite(3)),
            (2, 3, 2, Girth::Infinite),
            (3, 3, 2, Girth::Finite(3)),
            (2, 4, 2, Girth::Finite(3)),
        ] {
            let (g, lp) = setup(p, c);
            let report = structure_report(&g, &lp).unwrap();
            let bf = report.brute_force.unwrap();
            assert_eq!((bf.diameter, bf.girth), (diameter, girth), "p={p} c={c}");
            assert_eq!(report.closed_form.diameter, diameter);
            assert_eq!(report.closed_form.girth, girth);
        }
    }

    #[test]
    fn closed_form_matches_brute_force_on_small_instances() {
        for p in [2u64, 3, 5] {
            for c in 2..=6u32 {
                let r = RingParams::new(p, c).unwrap();
                if r.graph_order() > 200 {
                    continue;
                }
                let (g, lp) = setup(p, c);
                let report = structure_report(&g, &lp).unwrap();
                assert!(report.consistent(), "p={p} c={c}: {:?}", report.agreement);
                assert_eq!(report.brute_force.unwrap().universal_vertex_count, p - 1);
            }
        }
    }

    #[test]
    fn mismatched_params() {
        let (g, _) = setup(2, 5);
        let (_, lp) = setup(2, 6);
        assert!(matches!(structure_report(&g, &lp), Err(Error::ParamsMismatch(_))));
    }

    #[test]
    fn girth_of_small_cycles() {
        // p=2, c=4: V_2 is an edge and both vertices see x^3, a triangle.
        let (g, _) = setup(2, 4);
        assert_eq!(girth(&g), Girth::Finite(3));
    }
}
