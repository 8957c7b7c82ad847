//! Rank-1 tensor operators built from the generators:
//! `t_{1,1} = -e^{hX} sinh(hX)/h`, `t_{1,0} = e^{hX} H / sqrt 2`,
//! `t_{1,-1} = e^{-hX/2} Y e^{-hX/2} + (h/2) e^{hX/2} H e^{hX/2} - (h/2) H^2`.

use std::sync::Arc;

use crate::algebra::{Irrep, Representation};
use crate::error::Result;
use crate::halfint::HalfInt;
use crate::scalar::{HPoly, PolyMatrix, RadScalar};
use crate::tensor_ops::adjoint::OpSpaceContext;
use crate::tensor_ops::family::TensorOpFamily;

pub fn rank1_on(rep: Arc<Representation>) -> Result<TensorOpFamily> {
    let r = &rep;
    let t11 = -&(&r.exp_hx * &r.sinh_over_h()?);
    let t10 = (&r.exp_hx * &r.h).scale_scalar(&RadScalar::sqrt_int(2).scale(&num_rational::BigRational::new(1.into(), 2.into())));
    let half_h = HPoly::monomial(RadScalar::from_ratio(1, 2), 1);
    let t1m = &(&(&(&r.exp_half_mhx * &r.y) * &r.exp_half_mhx) + &(&(&r.exp_half_hx * &r.h) * &r.exp_half_hx).scale(&half_h))
        - &(&r.h * &r.h).scale(&half_h);
    let name = format!("generators on {}", r.name);
    TensorOpFamily::new(name, HalfInt::ONE, vec![t11, t10, t1m], OpSpaceContext::endo(rep))
}

pub fn rank1_generators(j: HalfInt) -> Result<TensorOpFamily> {
    rank1_on(Arc::new(Irrep::new(j)?.rep))
}

/// The `h = 0` limit `(-Z+, H/sqrt 2, Z-)`.
pub fn classical_rank1(j: HalfInt) -> Result<[PolyMatrix; 3]> {
    let irrep = Irrep::new(j)?;
    let s = &irrep.sl2;
    let inv_sqrt2 = RadScalar::sqrt_int(2).scale(&num_rational::BigRational::new(1.into(), 2.into()));
    Ok([-&s.zp, s.hm.scale_scalar(&inv_sqrt2), s.zm.clone()])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::hopf::Generator;
    use crate::tensor_ops::family::verify_tensor_operator;

    #[test]
    fn verified_through_three_halves() {
        for t in 0..=3 {
            let fam = rank1_generators(HalfInt::from_twice(t)).unwrap();
            let r = verify_tensor_operator(&fam).unwrap();
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn classical_limit() {
        let j = HalfInt::ONE;
        let fam = rank1_generators(j).unwrap();
        assert_eq!(fam.at_zero(), classical_rank1(j).unwrap().to_vec());
    }

    #[test]
    fn ad_h_kills_t10() {
        let fam = rank1_generators(HalfInt::ONE).unwrap();
        assert!(fam.context.ad(Generator::H, &fam.components[1]).is_zero());
    }

    #[test]
    fn on_fermion_fock_space() {
        let rep = Arc::new(crate::tensor_ops::fermion::fermion_representation());
        let fam = rank1_on(rep).unwrap();
        assert!(verify_tensor_operator(&fam).unwrap().passed());
    }
}
