//! Exact substrate: square matrices and dense univariate polynomials over a
//! generic ring, characteristic polynomials, reciprocity and a proof-producing
//! finite-order test for unimodular matrices.

mod matrix;
mod order;
mod poly;

pub use matrix::Matrix;
pub use order::{admissible_orders, cyclotomic, euler_phi, finite_order_test, Order};
pub use poly::{reciprocity_class, Poly, Reciprocity};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("matrix must be square with dimension >= 1 (got {rows} rows of lengths {cols:?})")]
    Shape { rows: usize, cols: Vec<usize> },
    #[error("matrix is not unimodular (determinant {det})")]
    NotUnimodular { det: String },
}
