//! Exact rational linear algebra: sparse vectors and matrices, echelon
//! forms, kernels, homology dimensions, and small polynomial utilities.

mod echelon;
mod frame;
mod matrix;
pub mod poly;
mod vector;

pub use echelon::Echelon;
pub use frame::Frame;
pub use matrix::{homology_dim, SparseMatrix, SparseVec};
pub use vector::{fmt_q, parse_q, q, qf, sqrt_q, Vector, Q};
