//! Fermion quasi-spin realization on the 4-dimensional Fock space.
//!
//! Basis order: `|0>, a1+|0>, a2+|0>, a1+ a2+|0>`. `J+ = a1+ a2+`, `J- = a2 a1`,
//! `J0 = N1 + N2 - 1`; `W(1/2)` is spanned by `a1+ a2+|0>` (m = 1/2) and `|0>`,
//! and each of `a1+|0>`, `a2+|0>` spans a copy of `W(0)`.

use std::sync::Arc;

use crate::algebra::{realize, Block, Representation};
use crate::error::Result;
use crate::halfint::HalfInt;
use crate::report::{Check, Report};
use crate::scalar::{HPoly, PolyMatrix};
use crate::tensor_ops::adjoint::OpSpaceContext;
use crate::tensor_ops::family::TensorOpFamily;

pub const FERMION_LABELS: [&str; 4] = ["|0>", "a1+|0>", "a2+|0>", "a1+a2+|0>"];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FockKind {
    Fermion,
    Boson,
}

/// A finite piece of a Fock space with labelled basis and its irreducible blocks.
#[derive(Clone, Debug)]
pub struct FockBlock {
    pub kind: FockKind,
    pub labels: Vec<String>,
    pub blocks: Vec<Block>,
}

/// Creation and annihilation matrices with Jordan-Wigner signs.
#[derive(Clone, Debug)]
pub struct FermionOps {
    pub a1d: PolyMatrix,
    pub a2d: PolyMatrix,
    pub a1: PolyMatrix,
    pub a2: PolyMatrix,
    pub n1: PolyMatrix,
    pub n2: PolyMatrix,
}

impl FermionOps {
    pub fn new() -> Self {
        let mut a1d = PolyMatrix::zeros(4, 4);
        a1d.set(1, 0, HPoly::one());
        a1d.set(3, 2, HPoly::one());
        let mut a2d = PolyMatrix::zeros(4, 4);
        a2d.set(2, 0, HPoly::one());
        // a2+ a1+|0> = -a1+ a2+|0>
        a2d.set(3, 1, HPoly::from_int(-1));
        let a1 = a1d.transpose();
        let a2 = a2d.transpose();
        let n1 = &a1d * &a1;
        let n2 = &a2d * &a2;
        FermionOps { a1d, a2d, a1, a2, n1, n2 }
    }

    pub fn quasi_spin(&self) -> (PolyMatrix, PolyMatrix, PolyMatrix) {
        let jp = &self.a1d * &self.a2d;
        let jm = &self.a2 * &self.a1;
        let j0 = &(&self.n1 + &self.n2) - &PolyMatrix::identity(4);
        (jp, jm, j0)
    }
}

impl Default for FermionOps {
    fn default() -> Self {
        Self::new()
    }
}

pub fn fermion_blocks() -> Vec<Block> {
    vec![Block::new(HalfInt::HALF, vec![3, 0]), Block::new(HalfInt::ZERO, vec![1]), Block::new(HalfInt::ZERO, vec![2])]
}

pub fn fermion_representation() -> Representation {
    let (jp, jm, j0) = FermionOps::new().quasi_spin();
    realize("Fock(fermion)", &jp, &jm, j0, fermion_blocks())
}

#[derive(Clone, Debug)]
pub struct FermionRealization {
    pub fock: FockBlock,
    pub ops: FermionOps,
    pub rep: Arc<Representation>,
    /// `t_{1/2} = -a1+`, `t_{-1/2} = -a2 + h (N2 - 1) a1+`.
    pub first: TensorOpFamily,
    /// `t_{1/2} = a2+`, `t_{-1/2} = -a1 - h (N1 - 1) a2+`.
    pub second: TensorOpFamily,
}

pub fn fermion_realization() -> Result<FermionRealization> {
    let ops = FermionOps::new();
    let rep = Arc::new(fermion_representation());
    let ctx = OpSpaceContext::endo(Arc::clone(&rep));
    let h = HPoly::h();
    let id = PolyMatrix::identity(4);
    let first = TensorOpFamily::new(
        "fermion (a1+, a2)",
        HalfInt::HALF,
        vec![-&ops.a1d, &-&ops.a2 + &(&(&ops.n2 - &id) * &ops.a1d).scale(&h)],
        ctx.clone(),
    )?;
    let second = TensorOpFamily::new(
        "fermion (a2+, a1)",
        HalfInt::HALF,
        vec![ops.a2d.clone(), &-&ops.a1 - &(&(&ops.n1 - &id) * &ops.a2d).scale(&h)],
        ctx,
    )?;
    let fock = FockBlock {
        kind: FockKind::Fermion,
        labels: FERMION_LABELS.iter().map(|s| s.to_string()).collect(),
        blocks: fermion_blocks(),
    };
    Ok(FermionRealization { fock, ops, rep, first, second })
}

/// Rows of `m` outside `allowed` vanish on the given columns.
fn lands_in(m: &PolyMatrix, cols: &[usize], allowed: &[usize]) -> bool {
    (0..m.rows()).filter(|r| !allowed.contains(r)).all(|r| cols.iter().all(|&c| m.get(r, c).is_zero()))
}

/// Anticommutators, the Fock structure of the `U_h` generators, and the
/// exchange `W(1/2) <-> W(0)` by both families.
pub fn verify_fermion_structure(f: &FermionRealization) -> Report {
    Report::timed("fermion Fock space", |r| {
        let o = &f.ops;
        let id = PolyMatrix::identity(4);
        let anti = |a: &PolyMatrix, b: &PolyMatrix| &(a * b) + &(b * a);
        r.push(Check::zero("{a1, a1+} = 1", &(&anti(&o.a1, &o.a1d) - &id)));
        r.push(Check::zero("{a2, a2+} = 1", &(&anti(&o.a2, &o.a2d) - &id)));
        r.push(Check::zero("{a1, a2+} = 0", &anti(&o.a1, &o.a2d)));
        r.push(Check::zero("{a1+, a2+} = 0", &anti(&o.a1d, &o.a2d)));
        r.push(Check::zero("{a1, a2} = 0", &anti(&o.a1, &o.a2)));
        let (jp, jm, j0) = o.quasi_spin();
        r.push(Check::zero("X^2 = 0", &(&f.rep.x * &f.rep.x)));
        r.push(Check::zero("X = J+", &(&f.rep.x - &jp)));
        r.push(Check::zero("Y = J-", &(&f.rep.y - &jm)));
        r.push(Check::zero("H = J0", &(&f.rep.h - &j0)));
        r.extend(crate::algebra::verify::relation_checks(&f.rep));
        let half = [3usize, 0];
        let zero = [1usize, 2];
        for fam in [&f.first, &f.second] {
            let ok = fam.components.iter().all(|t| lands_in(t, &half, &zero) && lands_in(t, &zero, &half));
            r.push(Check::from_bool(
                format!("{} exchanges W(1/2) and W(0)", fam.name),
                ok,
                "maps span{a1+a2+|0>, |0>} into span{a1+|0>, a2+|0>} and back",
            ));
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tensor_ops::adjoint::verify_adjoint_is_representation;
    use crate::tensor_ops::family::{verify_classical_limit, verify_tensor_operator};

    #[test]
    fn structure() {
        let f = fermion_realization().unwrap();
        let r = verify_fermion_structure(&f);
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn both_families_are_tensor_operators() {
        let f = fermion_realization().unwrap();
        for fam in [&f.first, &f.second] {
            let r = verify_tensor_operator(fam).unwrap();
            assert!(r.passed(), "{r}");
            assert!(verify_classical_limit(fam).unwrap().passed());
        }
    }

    #[test]
    fn adjoint_representation_on_a1_dagger() {
        let f = fermion_realization().unwrap();
        let ctx = f.first.context.clone();
        let r = verify_adjoint_is_representation(&ctx, &[("a1+".into(), f.ops.a1d.clone())]).unwrap();
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn sign_convention() {
        let o = FermionOps::new();
        assert_eq!(o.a2d.get(3, 1), &HPoly::from_int(-1));
        let (jp, _, _) = o.quasi_spin();
        assert!(jp.get(3, 0).is_one());
    }
}
