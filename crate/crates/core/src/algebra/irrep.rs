//! The `(2j+1)`-dimensional irreducible representation.
//!
//! Built from the undeformed `sl(2)` matrices `Z+, Z-, H` by inverting the
//! nonlinear map: `X = (2/h) arctanh(h Z+ / 2)` and
//! `Y = sqrt(1 - (h Z+/2)^2) Z- sqrt(1 - (h Z+/2)^2)`. Both series terminate
//! because `Z+` is nilpotent. The basis is ordered `m = j, j-1, ..., -j`.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::algebra::rep::{Block, Representation};
use crate::error::{domain, Result};
use crate::halfint::HalfInt;
use crate::scalar::{series, HPoly, PolyMatrix, RadScalar};

/// Undeformed `sl(2)` matrices of highest weight `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sl2Irrep {
    pub zp: PolyMatrix,
    pub zm: PolyMatrix,
    pub hm: PolyMatrix,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Irrep {
    pub j: HalfInt,
    pub sl2: Sl2Irrep,
    pub rep: Representation,
}

fn check_j(j: HalfInt) -> Result<()> {
    if j.twice() < 0 {
        return Err(domain(format!("highest weight must be non-negative, got {j}")));
    }
    Ok(())
}

/// `sqrt((j - m)(j + m + 1))`, the raising matrix element.
fn raising(j: HalfInt, m: HalfInt) -> RadScalar {
    let a = (j - m).twice();
    let b = (j + m).twice() + 2;
    // (a/2)(b/2) = ab/4
    RadScalar::sqrt_rational(&BigRational::new(BigInt::from(a * b), BigInt::from(4))).expect("non-negative")
}

pub fn sl2_irrep(j: HalfInt) -> Result<Sl2Irrep> {
    check_j(j)?;
    let d = j.multiplicity();
    let mut zp = PolyMatrix::zeros(d, d);
    let mut zm = PolyMatrix::zeros(d, d);
    for (i, m) in j.weights().enumerate() {
        if i > 0 {
            zp.set(i - 1, i, HPoly::constant(raising(j, m)));
        }
        if i + 1 < d {
            // sqrt((j + m)(j - m + 1)) = raising(j, -m)
            zm.set(i + 1, i, HPoly::constant(raising(j, -m)));
        }
    }
    let hm = PolyMatrix::diagonal(j.weights().map(|m| HPoly::from_int(m.twice())));
    Ok(Sl2Irrep { zp, zm, hm })
}

/// `h Z+ / 2`.
fn half_h_zp(zp: &PolyMatrix) -> PolyMatrix {
    zp.scale(&HPoly::monomial(RadScalar::from_ratio(1, 2), 1))
}

pub fn x_matrix(j: HalfInt) -> Result<PolyMatrix> {
    let sl2 = sl2_irrep(j)?;
    Ok(x_from_zp(&sl2.zp))
}

fn x_from_zp(zp: &PolyMatrix) -> PolyMatrix {
    series::arctanh(&half_h_zp(zp)).scale_int(2).divide_by_h(1).expect("arctanh series is odd in h")
}

pub fn y_matrix(j: HalfInt) -> Result<PolyMatrix> {
    let sl2 = sl2_irrep(j)?;
    Ok(y_from(&sl2.zp, &sl2.zm))
}

fn y_from(zp: &PolyMatrix, zm: &PolyMatrix) -> PolyMatrix {
    let u = half_h_zp(zp);
    let root = series::sqrt_one_minus(&(&u * &u));
    &(&root * zm) * &root
}

/// `e^{sign * hX}` by the terminating exponential series.
pub fn exp_hx(j: HalfInt, sign: i64) -> Result<PolyMatrix> {
    let x = x_matrix(j)?;
    let hx = x.scale(&HPoly::monomial(RadScalar::from_int(sign.signum()), 1));
    Ok(series::exp(&hx))
}

/// `e^{sign * hX}` in the closed form `(1 + s h Z+/2)(1 - s h Z+/2)^{-1}`.
pub fn exp_hx_mobius(j: HalfInt, sign: i64) -> Result<PolyMatrix> {
    let sl2 = sl2_irrep(j)?;
    let u = half_h_zp(&sl2.zp).scale_int(sign.signum());
    let id = PolyMatrix::identity(sl2.zp.rows());
    Ok(&(&id + &u) * &series::neumann_inverse(&u))
}

/// A `U_h(sl(2))` representation from any `sl(2)` representation `J+, J-, J0`
/// with nilpotent `J+`, through the same nonlinear map as the irreducibles.
pub fn realize(name: impl Into<String>, jp: &PolyMatrix, jm: &PolyMatrix, j0: PolyMatrix, blocks: Vec<Block>) -> Representation {
    Representation::from_xyh(name, x_from_zp(jp), y_from(jp, jm), j0, blocks)
}

impl Irrep {
    pub fn new(j: HalfInt) -> Result<Self> {
        let sl2 = sl2_irrep(j)?;
        let x = x_from_zp(&sl2.zp);
        let y = y_from(&sl2.zp, &sl2.zm);
        let rep = Representation::from_xyh(format!("W({j})"), x, y, sl2.hm.clone(), vec![Block::full(j)]);
        Ok(Irrep { j, sl2, rep })
    }

    pub fn dim(&self) -> usize {
        self.j.multiplicity()
    }

    /// Casimir in the `sl(2)` form `Z+ Z- + (H/2)(H/2 - 1)`.
    pub fn casimir_sl2_form(&self) -> PolyMatrix {
        let half_h = self.sl2.hm.scale_rational(&BigRational::new(BigInt::from(1), BigInt::from(2)));
        let shifted = &half_h - &PolyMatrix::identity(self.dim());
        &(&self.sl2.zp * &self.sl2.zm) + &(&half_h * &shifted)
    }

    /// `j(j+1) I`.
    pub fn casimir_value(&self) -> PolyMatrix {
        let t = self.j.twice();
        // j(j+1) = t(t+2)/4
        let c = RadScalar::from_ratio(t * (t + 2), 4);
        PolyMatrix::identity(self.dim()).scale_scalar(&c)
    }
}

/// Casimir matrix from the `X, Y, H` form.
pub fn casimir_matrix(j: HalfInt) -> Result<PolyMatrix> {
    Irrep::new(j)?.rep.casimir()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(v: i64) -> HPoly {
        HPoly::from_int(v)
    }

    fn sq(n: u64) -> HPoly {
        HPoly::constant(RadScalar::sqrt_int(n))
    }

    fn mat(rows: Vec<Vec<HPoly>>) -> PolyMatrix {
        PolyMatrix::from_rows(rows).unwrap()
    }

    #[test]
    fn spin_half_sl2_matrices() {
        let s = sl2_irrep(HalfInt::HALF).unwrap();
        assert_eq!(s.zp, mat(vec![vec![c(0), c(1)], vec![c(0), c(0)]]));
        assert_eq!(s.hm, PolyMatrix::diagonal([c(1), c(-1)]));
    }

    #[test]
    fn spin_one_zp_superdiagonal() {
        let s = sl2_irrep(HalfInt::ONE).unwrap();
        assert_eq!(s.zp.get(0, 1), &sq(2));
        assert_eq!(s.zp.get(1, 2), &sq(2));
    }

    #[test]
    fn spin_zero_is_zero() {
        let s = sl2_irrep(HalfInt::ZERO).unwrap();
        assert!(s.zp.is_zero() && s.zm.is_zero() && s.hm.is_zero());
    }

    #[test]
    fn negative_j_rejected() {
        assert!(sl2_irrep(HalfInt::from_twice(-1)).is_err());
        assert!(Irrep::new(HalfInt::from_twice(-2)).is_err());
    }

    #[test]
    fn x_three_halves_has_h_squared_correction() {
        // X = Zp + (h^2/12) Zp^3, and Zp^3 has the single entry sqrt3*2*sqrt3 = 6
        let x = x_matrix(HalfInt::from_twice(3)).unwrap();
        assert_eq!(x.get(0, 1), &sq(3));
        assert_eq!(x.get(1, 2), &c(2));
        assert_eq!(x.get(2, 3), &sq(3));
        assert_eq!(x.get(0, 3), &HPoly::monomial(RadScalar::from_ratio(1, 2), 2));
    }

    #[test]
    fn exp_spin_half() {
        let e = exp_hx(HalfInt::HALF, 1).unwrap();
        assert_eq!(e, mat(vec![vec![c(1), HPoly::h()], vec![c(0), c(1)]]));
    }

    #[test]
    fn casimir_small_values() {
        assert_eq!(casimir_matrix(HalfInt::HALF).unwrap(), PolyMatrix::identity(2).scale_scalar(&RadScalar::from_ratio(3, 4)));
        assert_eq!(casimir_matrix(HalfInt::ONE).unwrap(), PolyMatrix::identity(3).scale_int(2));
        assert!(casimir_matrix(HalfInt::ZERO).unwrap().is_zero());
    }
}
