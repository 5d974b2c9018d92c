//! Matrix-side checks: membership in `S(G)` and the SAP/SSP/SMP kernels.

use thiserror::Error;

pub mod exact;
pub mod families;
pub mod kernel;
pub mod matrix;
pub mod sample;

pub use families::{cn_even_matrix, corona_matrix, lollipop_jdup_matrix};
pub use kernel::{property_kernel, property_kernel_float, Arithmetic, Property, PropertyReport};
pub use matrix::{parse_matrix, parse_rational, SymMatrix};
pub use sample::{sample_matrix, ssp_evidence, SspEvidence};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SspError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("matrix is not symmetric at ({}, {})", .row + 1, .col + 1)]
    Asymmetric { row: usize, col: usize },
    #[error("{0}")]
    Shape(String),
    #[error("hypothesis not met: {0}")]
    Hypothesis(String),
    #[error("{0}")]
    FamilyFailed(String),
    #[error("indeterminate: singular value {sigma:e} is within a factor of 10 of the threshold {tolerance:e}")]
    Indeterminate { sigma: f64, tolerance: f64 },
}
