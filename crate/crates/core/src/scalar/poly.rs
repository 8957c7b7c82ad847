//! Polynomials in the deformation parameter `h`.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::RadScalar;

/// Polynomial in `h` with [`RadScalar`] coefficients, lowest power first.
///
/// Trailing zero coefficients are trimmed; the zero polynomial is empty.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct HPoly {
    coeffs: Vec<RadScalar>,
}

impl HPoly {
    pub fn zero() -> Self {
        HPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(RadScalar::one())
    }

    pub fn constant(c: RadScalar) -> Self {
        Self::monomial(c, 0)
    }

    pub fn from_int(v: i64) -> Self {
        Self::constant(RadScalar::from_int(v))
    }

    /// `c * h^power`.
    pub fn monomial(c: RadScalar, power: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![RadScalar::zero(); power + 1];
        coeffs[power] = c;
        HPoly { coeffs }
    }

    /// The polynomial `h`.
    pub fn h() -> Self {
        Self::monomial(RadScalar::one(), 1)
    }

    pub fn from_coeffs(mut coeffs: Vec<RadScalar>) -> Self {
        while coeffs.last().is_some_and(RadScalar::is_zero) {
            coeffs.pop();
        }
        HPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[RadScalar] {
        &self.coeffs
    }

    pub fn coeff(&self, power: usize) -> RadScalar {
        self.coeffs.get(power).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Lowest power with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// The classical limit `h = 0`.
    pub fn at_zero(&self) -> RadScalar {
        self.coeff(0)
    }

    /// Exact substitution `h = value`.
    pub fn eval(&self, value: &BigRational) -> RadScalar {
        let mut acc = RadScalar::zero();
        for c in self.coeffs.iter().rev() {
            acc = &acc.scale(value) + c;
        }
        acc
    }

    /// `p / h^k`, failing unless the `k` lowest coefficients vanish.
    pub fn divide_by_h(&self, k: usize) -> Result<Self> {
        if let Some((power, c)) = self.coeffs.iter().enumerate().take(k).find(|(_, c)| !c.is_zero()) {
            return Err(Error::NotDivisibleByH { k, power, coefficient: c.to_string() });
        }
        Ok(HPoly { coeffs: self.coeffs.iter().skip(k).cloned().collect() })
    }

    /// `p(factor * h)`.
    pub fn rescale_h(&self, factor: &BigRational) -> Self {
        let mut pow = BigRational::one();
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            coeffs.push(c.scale(&pow));
            pow *= factor;
        }
        Self::from_coeffs(coeffs)
    }

    /// Multiplies every coefficient by a scalar.
    pub fn scale(&self, c: &RadScalar) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn scale_rational(&self, q: &BigRational) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        HPoly { coeffs: self.coeffs.iter().map(|a| a.scale(q)).collect() }
    }

    pub fn scale_int(&self, v: i64) -> Self {
        self.scale_rational(&BigRational::from_integer(BigInt::from(v)))
    }

    /// `self * h^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![RadScalar::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        HPoly { coeffs }
    }

    /// Divides by a nonzero monomial scalar `q * sqrt(n)`.
    pub fn div_scalar(&self, divisor: &RadScalar) -> Result<Self> {
        Ok(self.scale(&divisor.inverse()?))
    }

    /// Nonzero terms as `(coefficient, radicand, power)`, ordered by power then radicand.
    pub fn terms(&self) -> impl Iterator<Item = (&BigRational, u64, usize)> {
        self.coeffs.iter().enumerate().flat_map(|(k, c)| c.terms().iter().map(move |(n, q)| (q, *n, k)))
    }

    fn zip_with(&self, other: &HPoly, f: impl Fn(&RadScalar, &RadScalar) -> RadScalar) -> HPoly {
        let len = self.coeffs.len().max(other.coeffs.len());
        let zero = RadScalar::zero();
        let coeffs = (0..len).map(|i| f(self.coeffs.get(i).unwrap_or(&zero), other.coeffs.get(i).unwrap_or(&zero))).collect();
        Self::from_coeffs(coeffs)
    }
}

impl From<RadScalar> for HPoly {
    fn from(c: RadScalar) -> Self {
        HPoly::constant(c)
    }
}

impl Add<&HPoly> for &HPoly {
    type Output = HPoly;
    fn add(self, rhs: &HPoly) -> HPoly {
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return rhs.clone();
        }
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub<&HPoly> for &HPoly {
    type Output = HPoly;
    fn sub(self, rhs: &HPoly) -> HPoly {
        if rhs.is_zero() {
            return self.clone();
        }
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Mul<&HPoly> for &HPoly {
    type Output = HPoly;
    fn mul(self, rhs: &HPoly) -> HPoly {
        if self.is_zero() || rhs.is_zero() {
            return HPoly::zero();
        }
        let mut coeffs = vec![RadScalar::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += &(a * b);
                }
            }
        }
        HPoly::from_coeffs(coeffs)
    }
}

impl Neg for &HPoly {
    type Output = HPoly;
    fn neg(self) -> HPoly {
        HPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for HPoly {
    type Output = HPoly;
    fn neg(self) -> HPoly {
        -&self
    }
}

impl AddAssign<&HPoly> for HPoly {
    fn add_assign(&mut self, rhs: &HPoly) {
        if rhs.is_zero() {
            return;
        }
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), RadScalar::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        while self.coeffs.last().is_some_and(RadScalar::is_zero) {
            self.coeffs.pop();
        }
    }
}

impl SubAssign<&HPoly> for HPoly {
    fn sub_assign(&mut self, rhs: &HPoly) {
        *self += &(-rhs);
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr<HPoly> for HPoly {
            type Output = HPoly;
            fn $method(self, rhs: HPoly) -> HPoly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&HPoly> for HPoly {
            type Output = HPoly;
            fn $method(self, rhs: &HPoly) -> HPoly {
                (&self).$method(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for HPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<_> = self.terms().collect();
        f.write_str(&crate::scalar::format::format_terms(&terms))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(cs: &[i64]) -> HPoly {
        HPoly::from_coeffs(cs.iter().map(|&c| RadScalar::from_int(c)).collect())
    }

    #[test]
    fn divide_by_h_examples() {
        assert_eq!(poly(&[0, 1, 0, 1]).divide_by_h(1).unwrap(), poly(&[1, 0, 1]));
        assert!(matches!(poly(&[0, 0, 1]).divide_by_h(3), Err(Error::NotDivisibleByH { k: 3, power: 2, .. })));
        assert_eq!(HPoly::zero().divide_by_h(4).unwrap(), HPoly::zero());
    }

    #[test]
    fn eval_examples() {
        let p = poly(&[1, 0, 3]);
        assert_eq!(p.eval(&BigRational::zero()), RadScalar::one());
        assert_eq!(p.eval(&BigRational::one()), RadScalar::from_int(4));
        assert_eq!(p.at_zero(), RadScalar::one());
    }

    #[test]
    fn trims_trailing_zeros() {
        let p = &poly(&[1, 2]) - &poly(&[0, 2]);
        assert_eq!(p.degree(), Some(0));
        assert!((&p - &p).is_zero());
        assert_eq!((&p - &p).degree(), None);
    }

    #[test]
    fn rescale_halves_powers() {
        let half = BigRational::new(1.into(), 2.into());
        let p = poly(&[1, 1, 1]).rescale_h(&half);
        assert_eq!(p.coeff(2), RadScalar::from_ratio(1, 4));
    }
}
