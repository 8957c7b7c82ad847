//! Exact scalar ring and dense matrix algebra over it.
//!
//! Every identity downstream is decided by comparing canonical forms, so
//! "holds" always means "the residual is exactly zero".

pub mod format;
pub mod json;
mod matrix;
mod poly;
mod rad;
pub mod series;

pub use format::parse_hpoly;
pub use matrix::{PolyMatrix, Residual};
pub use poly::HPoly;
pub use rad::{squarefree_split, RadScalar};
