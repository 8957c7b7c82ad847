//! Coupling of two irreducible representations.

pub mod alpha;
pub mod basis;
pub mod cgc;
pub mod intermediate;

pub use alpha::{alpha, binom_ext, AlphaTable};
pub use basis::{coupled_basis, decompose, verify_cgc_invertibility, verify_decomposition, CoupledBasis, CoupledVector};
pub use cgc::{sl2_cgc, uh_cgc, verify_classical_cgc};
pub use intermediate::{
    intermediate_bra, intermediate_ket, verify_alpha_orthogonality, verify_intermediate_action,
    verify_intermediate_orthonormality,
};
