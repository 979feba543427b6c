//! Zero-divisor graphs of the truncated polynomial rings `Z_p[x]/<x^c>`.
//!
//! The crate builds the graph two independent ways (from ring
//! multiplication and from the min-degree level rule), computes its
//! adjacency, Laplacian, signless Laplacian, `A_alpha` and distance
//! Laplacian spectra in closed form from the level partition, and checks
//! every closed form against dense eigensolves and exact rational
//! arithmetic.
//!
//! ```
//! use zdg_core::{level_partition, laplacian_spectrum, RingParams};
//!
//! let params = RingParams::new(2, 5).unwrap();
//! let spectrum = laplacian_spectrum(&level_partition(&params));
//! assert_eq!(spectrum.total_multiplicity(), 15);
//! ```

pub mod closed_form;
pub mod error;
pub mod exact;
pub mod graph;
pub mod levels;
pub mod numeric;
pub mod quotient;
pub mod ring;
pub mod spectrum;
pub mod structure;
pub mod verify;

pub use closed_form::{
    a_alpha_spectrum, a_alpha_spectrum_symbolic, adjacency_spectrum, distance_laplacian_spectrum,
    fixed_eigenvector_basis, laplacian_eigenvector, laplacian_spectrum, signless_laplacian_spectrum,
    LaplacianEigenvector,
};
pub use error::{Error, Result};
pub use exact::{IntMatrix, IntPoly, Rational};
pub use graph::{build_graph_by_ring, build_graph_by_rule, GraphInstance};
pub use levels::{adjacent_levels, level_partition, LevelInfo, LevelKind, LevelPartition};
pub use numeric::{
    assemble_matrix, compare_spectra, symmetric_eigensolve, ComparisonReport, DenseSymmetricMatrix, EigenResult,
    MatrixKind,
};
pub use quotient::{build_quotient, QuotientMatrices};
pub use ring::{enumerate_zero_divisors, is_unit, mindeg, multiply, RingElement, RingParams};
pub use spectrum::{graph_energy, Eigenvalue, Spectrum, SpectrumEntry, SpectrumKind};
pub use structure::{structure_report, Girth, StructureReport};
pub use verify::{verify, CheckResult, CheckStatus, VerifyOptions, VerifyReport};
