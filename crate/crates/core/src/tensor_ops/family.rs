//! Tensor operator families and the criterion
//! `ad c(t_{j m}) = sum_k D(c)^{(j)}_{k m} t_{j k}`.

use std::sync::Arc;

use crate::algebra::hopf::Generator;
use crate::algebra::{Block, Irrep};
use crate::coupling::alpha::AlphaTable;
use crate::coupling::cgc::sl2_cgc;
use crate::error::{domain, Error, Result};
use crate::halfint::HalfInt;
use crate::report::{Check, Report};
use crate::scalar::PolyMatrix;
use crate::tensor_ops::adjoint::OpSpaceContext;

/// Components `t_{j m}` for `m = j, j-1, ..., -j`.
#[derive(Clone, Debug)]
pub struct TensorOpFamily {
    pub name: String,
    pub rank: HalfInt,
    pub components: Vec<PolyMatrix>,
    pub context: OpSpaceContext,
}

impl TensorOpFamily {
    pub fn new(name: impl Into<String>, rank: HalfInt, components: Vec<PolyMatrix>, context: OpSpaceContext) -> Result<Self> {
        if rank.twice() < 0 || components.len() != rank.multiplicity() {
            return Err(domain(format!("rank {rank} needs {} components, got {}", rank.multiplicity(), components.len())));
        }
        for c in &components {
            if c.shape() != context.shape() {
                return Err(Error::DimensionMismatch {
                    op: "tensor operator component",
                    left: context.shape(),
                    right: c.shape(),
                });
            }
        }
        Ok(TensorOpFamily { name: name.into(), rank, components, context })
    }

    pub fn component(&self, m: HalfInt) -> Option<&PolyMatrix> {
        m.index_in(self.rank).map(|i| &self.components[i])
    }

    /// Restriction to invariant blocks of the source and target.
    pub fn restrict(&self, source: &Block, target: &Block) -> TensorOpFamily {
        let ctx =
            OpSpaceContext::new(Arc::new(self.context.source.restrict(source)), Arc::new(self.context.target.restrict(target)));
        TensorOpFamily {
            name: format!("{} on W({}) -> W({})", self.name, source.j, target.j),
            rank: self.rank,
            components: self.components.iter().map(|c| c.select(&target.indices, &source.indices)).collect(),
            context: ctx,
        }
    }

    pub fn at_zero(&self) -> Vec<PolyMatrix> {
        self.components.iter().map(PolyMatrix::at_zero).collect()
    }
}

/// The rank-0 family `{1}` on a space.
pub fn identity_family(ctx: OpSpaceContext) -> TensorOpFamily {
    let n = ctx.source.dim();
    TensorOpFamily { name: "identity".into(), rank: HalfInt::ZERO, components: vec![PolyMatrix::identity(n)], context: ctx }
}

pub const CRITERION_GENERATORS: [Generator; 5] = [Generator::X, Generator::Y, Generator::H, Generator::ExpHX, Generator::ExpmHX];

/// Residual `ad c(t_m) - sum_k D(c)_{k m} t_k` for each generator and component.
pub fn tensor_operator_residuals(fam: &TensorOpFamily) -> Result<Vec<(Generator, HalfInt, PolyMatrix)>> {
    let d = Irrep::new(fam.rank)?;
    let mut out = Vec::new();
    for g in CRITERION_GENERATORS {
        let dm = d.rep.generator(g);
        for (mi, m) in fam.rank.weights().enumerate() {
            let lhs = fam.context.ad(g, &fam.components[mi]);
            let rhs = fam
                .components
                .iter()
                .enumerate()
                .filter(|(k, _)| !dm.get(*k, mi).is_zero())
                .fold(PolyMatrix::zeros(lhs.rows(), lhs.cols()), |acc, (k, t)| &acc + &t.scale(dm.get(k, mi)));
            out.push((g, m, &lhs - &rhs));
        }
    }
    Ok(out)
}

pub fn verify_tensor_operator(fam: &TensorOpFamily) -> Result<Report> {
    let residuals = tensor_operator_residuals(fam)?;
    Ok(Report::timed(format!("tensor operator {} (rank {})", fam.name, fam.rank), |r| {
        for (g, m, res) in &residuals {
            r.push(Check::zero(format!("ad {g}(t_{{{},{m}}}) = sum_k D({g})_{{k,{m}}} t_k", fam.rank), res));
        }
    }))
}

/// Families whose `h = 0` limits are classical `sl(2)` tensor operators under
/// `Z+-, H` of the classical-limit representations.
pub fn verify_classical_limit(fam: &TensorOpFamily) -> Result<Report> {
    let d = Irrep::new(fam.rank)?;
    let zero = fam.at_zero();
    let (s, t) = (&fam.context.source, &fam.context.target);
    Ok(Report::timed(format!("classical limit {}", fam.name), |r| {
        for (g, sm, tm, dm) in [
            ("Z+", s.x.at_zero(), t.x.at_zero(), &d.sl2.zp),
            ("Z-", s.y.at_zero(), t.y.at_zero(), &d.sl2.zm),
            ("H", s.h.at_zero(), t.h.at_zero(), &d.sl2.hm),
        ] {
            for (mi, m) in fam.rank.weights().enumerate() {
                let lhs = &(&tm * &zero[mi]) - &(&zero[mi] * &sm);
                let rhs = zero
                    .iter()
                    .enumerate()
                    .fold(PolyMatrix::zeros(lhs.rows(), lhs.cols()), |acc, (k, z)| &acc + &z.scale(dm.get(k, mi)));
                r.push(Check::zero(format!("h=0: [{g}, t_{m}]"), &(&lhs - &rhs)));
            }
        }
    }))
}

/// Rank-`j` family from `A (x) B`:
/// `T_{j m} = sum_{m1+m2=m} C^{jA jB j}_{m1 m2 m} sum_{k1,k2} alpha_{k1,k2}^{m1,m2} A_{k1} B_{k2}`.
/// `B` maps source to an intermediate space, `A` maps that space to the target.
pub fn couple_tensor_ops(a: &TensorOpFamily, b: &TensorOpFamily, j: HalfInt) -> Result<TensorOpFamily> {
    let (ja, jb) = (a.rank, b.rank);
    if !HalfInt::triangle(ja, jb, j) {
        return Err(Error::SelectionRule { j1: ja, j2: jb, j });
    }
    if a.context.source != b.context.target {
        return Err(domain(format!(
            "cannot compose: {} is not the target {} of the right factor",
            a.context.source.name, b.context.target.name
        )));
    }
    let table = AlphaTable::cached(ja, jb)?;
    let products: Vec<Vec<PolyMatrix>> = a.components.iter().map(|x| b.components.iter().map(|y| x * y).collect()).collect();
    let (rows, cols) = (a.context.target.dim(), b.context.source.dim());
    let mut comps = Vec::with_capacity(j.multiplicity());
    for m in j.weights() {
        let mut acc = PolyMatrix::zeros(rows, cols);
        for m1 in ja.weights() {
            let m2 = m - m1;
            let c = sl2_cgc(ja, jb, j, m1, m2);
            if c.is_zero() {
                continue;
            }
            for (i1, k1) in ja.weights().enumerate() {
                for (i2, k2) in jb.weights().enumerate() {
                    let al = table.get(k1, k2, m1, m2);
                    if !al.is_zero() {
                        acc = &acc + &products[i1][i2].scale(&al.scale(&c));
                    }
                }
            }
        }
        comps.push(acc);
    }
    let ctx = OpSpaceContext::new(Arc::clone(&b.context.source), Arc::clone(&a.context.target));
    TensorOpFamily::new(format!("[{} x {}]_{j}", a.name, b.name), j, comps, ctx)
}
