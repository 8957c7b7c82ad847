//! The algebra `U_h(sl(2))`: Hopf structure, irreducible representations and
//! exact verification of the defining relations.

pub mod hopf;
pub mod irrep;
pub mod rep;
pub mod verify;

pub use hopf::Generator;
pub use irrep::{casimir_matrix, exp_hx, exp_hx_mobius, realize, sl2_irrep, x_matrix, y_matrix, Irrep, Sl2Irrep};
pub use rep::{Block, Representation};
