//! Dense symmetric matrices of explicit graphs and their eigenvalues; the
//! independent route against which the closed forms are checked.

mod compare;
mod eigen;
mod matrix;

pub use compare::{cluster, compare_spectra, numeric_spectrum, ClusterAgreement, ComparisonReport};
pub use eigen::{symmetric_eigensolve, symmetric_eigensolve_with_budget, EigenResult, DENSE_BUDGET};
pub use matrix::{assemble_matrix, distance_laplacian_integer, DenseSymmetricMatrix, MatrixKind};
