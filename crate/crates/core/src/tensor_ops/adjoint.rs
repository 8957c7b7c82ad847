//! The adjoint action `ad c(t) = sum_i c_i t S(c'_i)` on operators `t: V -> W`.

use std::sync::Arc;

use crate::algebra::hopf::{self, Generator};
use crate::algebra::Representation;
use crate::error::{Error, Result};
use crate::report::{Check, Report};
use crate::scalar::{HPoly, PolyMatrix};

/// Source and target spaces of a family of operators. Target-side matrices
/// multiply `t` on the left, source-side ones on the right.
#[derive(Clone, Debug)]
pub struct OpSpaceContext {
    pub source: Arc<Representation>,
    pub target: Arc<Representation>,
    plans: Arc<Vec<Vec<(i64, PolyMatrix, PolyMatrix)>>>,
}

impl PartialEq for OpSpaceContext {
    fn eq(&self, other: &Self) -> bool {
        self.source == other.source && self.target == other.target
    }
}

fn plan(g: Generator, source: &Representation, target: &Representation) -> Vec<(i64, PolyMatrix, PolyMatrix)> {
    hopf::coproduct(g)
        .into_iter()
        .map(|(sign, l, r)| {
            let (s, w) = hopf::antipode_word(&r);
            (sign * s, target.word(&l), source.word(&w))
        })
        .collect()
}

impl OpSpaceContext {
    pub fn new(source: Arc<Representation>, target: Arc<Representation>) -> Self {
        let plans = Generator::ALL.iter().map(|&g| plan(g, &source, &target)).collect();
        OpSpaceContext { source, target, plans: Arc::new(plans) }
    }

    /// Operators from a space to itself.
    pub fn endo(rep: Arc<Representation>) -> Self {
        Self::new(Arc::clone(&rep), rep)
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.target.dim(), self.source.dim())
    }

    pub fn ad(&self, g: Generator, t: &PolyMatrix) -> PolyMatrix {
        let idx = Generator::ALL.iter().position(|&x| x == g).expect("generator listed");
        let (r, c) = self.shape();
        self.plans[idx]
            .iter()
            .fold(PolyMatrix::zeros(r, c), |acc, (sign, left, right)| &acc + &(&(left * t) * right).scale_int(*sign))
    }

    /// `ad cosh(hX) = (ad e^{hX} + ad e^{-hX}) / 2`.
    pub fn ad_cosh(&self, t: &PolyMatrix) -> PolyMatrix {
        let half = num_rational::BigRational::new(1.into(), 2.into());
        (&self.ad(Generator::ExpHX, t) + &self.ad(Generator::ExpmHX, t)).scale_rational(&half)
    }
}

pub fn adjoint_action(g: Generator, t: &PolyMatrix, ctx: &OpSpaceContext) -> Result<PolyMatrix> {
    if t.shape() != ctx.shape() {
        return Err(Error::DimensionMismatch { op: "adjoint action", left: ctx.shape(), right: t.shape() });
    }
    Ok(ctx.ad(g, t))
}

/// Residuals of the three defining relations under `ad`, applied to `t`.
pub fn adjoint_relation_residuals(ctx: &OpSpaceContext, t: &PolyMatrix) -> Result<[PolyMatrix; 3]> {
    use Generator::*;
    let ad = |g, m: &PolyMatrix| ctx.ad(g, m);
    let (xt, yt, ht) = (ad(X, t), ad(Y, t), ad(H, t));
    let r1 = &(&ad(X, &yt) - &ad(Y, &xt)) - &ht;
    let sinh = (&ad(ExpHX, t) - &ad(ExpmHX, t)).divide_by_h(1)?;
    let r2 = &(&ad(H, &xt) - &ad(X, &ht)) - &sinh;
    let r3 = &(&(&ad(H, &yt) - &ad(Y, &ht)) + &ad(Y, &ctx.ad_cosh(t))) + &ctx.ad_cosh(&yt);
    Ok([r1, r2, r3])
}

pub fn verify_adjoint_is_representation(ctx: &OpSpaceContext, samples: &[(String, PolyMatrix)]) -> Result<Report> {
    for (_, t) in samples {
        if t.shape() != ctx.shape() {
            return Err(Error::DimensionMismatch { op: "adjoint action", left: ctx.shape(), right: t.shape() });
        }
    }
    Ok(Report::timed(format!("adjoint representation {} -> {}", ctx.source.name, ctx.target.name), |r| {
        let names = ["ad[X,Y] = ad H", "ad[H,X] = ad(2 sinh(hX)/h)", "ad[H,Y] = -ad(Y cosh hX + cosh hX Y)"];
        for (label, t) in samples {
            match adjoint_relation_residuals(ctx, t) {
                Ok(res) => {
                    for (n, m) in names.iter().zip(res.iter()) {
                        r.push(Check::zero(format!("{n} on {label}"), m));
                    }
                }
                Err(e) => r.push(Check::fail(format!("relations on {label}"), e.to_string())),
            }
            r.push(Check::zero(format!("ad 1 = id on {label}"), &(&ctx.ad(Generator::Unit, t) - t)));
            let round = ctx.ad(Generator::ExpHX, &ctx.ad(Generator::ExpmHX, t));
            r.push(Check::zero(format!("ad e^hX ad e^-hX = id on {label}"), &(&round - t)));
        }
    }))
}

/// `ad X` as a plain commutator, `[X, t]` with target `X` on the left.
pub fn mixed_commutator(ctx: &OpSpaceContext, t: &PolyMatrix) -> PolyMatrix {
    &(&ctx.target.x * t) - &(t * &ctx.source.x)
}

/// `e^{-hX} [e^{hX} c, t] e^{-hX}` for `c = Y` or `H`.
pub fn twisted_commutator(ctx: &OpSpaceContext, c: Generator, t: &PolyMatrix) -> PolyMatrix {
    let (s, tg) = (&ctx.source, &ctx.target);
    let left = &tg.exp_hx * tg.generator(c).as_ref();
    let right = &s.exp_hx * s.generator(c).as_ref();
    let comm = &(&left * t) - &(t * &right);
    &(&tg.exp_mhx * &comm) * &s.exp_mhx
}

/// The operator with a single unit entry, for sampling the operator space.
pub fn unit_operator(ctx: &OpSpaceContext, row: usize, col: usize) -> PolyMatrix {
    let (r, c) = ctx.shape();
    let mut m = PolyMatrix::zeros(r, c);
    m.set(row, col, HPoly::one());
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Irrep;
    use crate::halfint::HalfInt;

    fn ctx(j: i64) -> OpSpaceContext {
        OpSpaceContext::endo(Arc::new(Irrep::new(HalfInt::from_twice(j)).unwrap().rep))
    }

    #[test]
    fn unit_acts_trivially_and_x_is_commutator() {
        let c = ctx(2);
        let t = unit_operator(&c, 0, 2);
        assert_eq!(c.ad(Generator::Unit, &t), t);
        assert_eq!(c.ad(Generator::X, &t), mixed_commutator(&c, &t));
    }

    #[test]
    fn y_and_h_are_twisted_commutators() {
        let c = ctx(3);
        for (row, col) in [(0, 0), (1, 3), (3, 0), (2, 1)] {
            let t = unit_operator(&c, row, col);
            assert_eq!(c.ad(Generator::Y, &t), twisted_commutator(&c, Generator::Y, &t));
            assert_eq!(c.ad(Generator::H, &t), twisted_commutator(&c, Generator::H, &t));
        }
    }

    #[test]
    fn adjoint_representation_on_h_and_identity() {
        let c = ctx(2);
        let samples = vec![("H".to_string(), c.source.h.clone()), ("1".to_string(), PolyMatrix::identity(3))];
        let r = verify_adjoint_is_representation(&c, &samples).unwrap();
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn mixed_context_dimensions() {
        let s = Arc::new(Irrep::new(HalfInt::ONE).unwrap().rep);
        let t = Arc::new(Irrep::new(HalfInt::from_twice(3)).unwrap().rep);
        let c = OpSpaceContext::new(s, t);
        assert_eq!(c.shape(), (4, 3));
        assert!(adjoint_action(Generator::X, &PolyMatrix::zeros(3, 3), &c).is_err());
        let t = unit_operator(&c, 1, 2);
        let r = verify_adjoint_is_representation(&c, &[("e12".into(), t)]).unwrap();
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn classical_limit_of_ad_y() {
        let c = ctx(2);
        let t = unit_operator(&c, 1, 0);
        let zm = &c.source.y.at_zero();
        let classical = &(zm * &t) - &(&t * zm);
        assert_eq!(c.ad(Generator::Y, &t).at_zero(), classical);
    }
}
