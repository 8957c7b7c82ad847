//! Exact representation theory of the Jordanian quantum algebra `U_h(sl(2))`.

pub mod algebra;
pub mod cli;
pub mod coupling;
pub mod error;
pub mod halfint;
pub mod report;
pub mod scalar;
pub mod suite;
pub mod tensor_ops;
pub mod wigner_eckart;

pub use error::{Error, Result};
pub use halfint::HalfInt;
