//! Parameter sets shared by the benchmarks.

use zdg_core::RingParams;

/// Instances small enough for dense eigensolves, ordered by graph order.
pub fn dense_instances() -> Vec<RingParams> {
    [(2, 5), (2, 7), (3, 4), (2, 9), (3, 5), (5, 4)]
        .into_iter()
        .map(|(p, c)| RingParams::new(p, c).expect("valid parameters"))
        .collect()
}

/// Instances far beyond any dense budget; only closed forms apply.
pub fn closed_form_instances() -> Vec<RingParams> {
    [(2, 20), (3, 30), (101, 8), (65_521, 4)]
        .into_iter()
        .map(|(p, c)| RingParams::new(p, c).expect("valid parameters"))
        .collect()
}
