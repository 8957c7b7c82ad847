//! Tensor operators: the adjoint action, the tensor-operator criterion and
//! three concrete realizations (fermion, boson, generators).

pub mod adjoint;
pub mod boson;
pub mod family;
pub mod fermion;
pub mod rank1;

pub use adjoint::{adjoint_action, verify_adjoint_is_representation, OpSpaceContext};
pub use boson::{boson_lowering, boson_raising, boson_realization, verify_boson_actions, BosonRealization};
pub use family::{couple_tensor_ops, identity_family, verify_classical_limit, verify_tensor_operator, TensorOpFamily};
pub use fermion::{fermion_realization, verify_fermion_structure, FermionRealization, FockBlock, FockKind};
pub use rank1::{rank1_generators, rank1_on};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::halfint::HalfInt;

    #[test]
    fn coupled_fermion_families() {
        let f = fermion_realization().unwrap();
        for j in [HalfInt::ONE, HalfInt::ZERO] {
            let t = couple_tensor_ops(&f.first, &f.second, j).unwrap();
            let r = verify_tensor_operator(&t).unwrap();
            assert!(r.passed(), "{r}");
        }
        assert!(couple_tensor_ops(&f.first, &f.second, HalfInt::from_twice(3)).is_err());
    }

    #[test]
    fn coupled_boson_raising() {
        let inner = boson_raising(HalfInt::HALF).unwrap();
        let outer = boson_raising(HalfInt::ONE).unwrap();
        let t = couple_tensor_ops(&outer, &inner, HalfInt::ONE).unwrap();
        assert_eq!(t.context.shape(), (4, 2));
        let r = verify_tensor_operator(&t).unwrap();
        assert!(r.passed(), "{r}");
        // composition order matters
        assert!(couple_tensor_ops(&inner, &outer, HalfInt::ONE).is_err());
    }

    #[test]
    fn restricted_fermion_family() {
        let f = fermion_realization().unwrap();
        let b = &f.fock.blocks;
        let t = f.first.restrict(&b[0], &b[1]);
        assert_eq!(t.context.shape(), (1, 2));
        assert!(verify_tensor_operator(&t).unwrap().passed());
    }
}
