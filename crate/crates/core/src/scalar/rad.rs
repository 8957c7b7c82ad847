//! Exact scalars of the form `sum_i q_i * sqrt(n_i)`.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Finite `Q`-linear combination of square roots of squarefree naturals.
///
/// Terms are kept sorted by radicand with no zero coefficients, so structural
/// equality is value equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct RadScalar {
    terms: Vec<(u64, BigRational)>,
}

/// Splits `n = outside^2 * squarefree`.
pub fn squarefree_split(n: &BigUint) -> (BigUint, u64) {
    let mut outside = BigUint::one();
    let mut squarefree: u64 = 1;
    let mut rem = n.clone();
    let mut p: u64 = 2;
    loop {
        if let Some(small) = rem.to_u64() {
            let (o, s) = squarefree_split_u64(small, p);
            let squarefree = squarefree.checked_mul(s).expect("squarefree radicand exceeds u64");
            return (outside * o, squarefree);
        }
        let pb = BigUint::from(p);
        if &pb * &pb > rem {
            break;
        }
        let mut count = 0u32;
        loop {
            let (q, r) = rem.div_rem(&pb);
            if !r.is_zero() {
                break;
            }
            rem = q;
            count += 1;
        }
        if count % 2 == 1 {
            squarefree = squarefree.checked_mul(p).expect("squarefree radicand exceeds u64");
        }
        outside *= pb.pow(count / 2);
        p += if p == 2 { 1 } else { 2 };
    }
    panic!("squarefree radicand exceeds u64")
}

fn squarefree_split_u64(mut n: u64, start: u64) -> (BigUint, u64) {
    let mut outside = BigUint::one();
    let mut squarefree = 1u64;
    if n == 0 {
        return (BigUint::zero(), 1);
    }
    let mut p = start;
    while p.saturating_mul(p) <= n {
        let mut count = 0u32;
        while n.is_multiple_of(p) {
            n /= p;
            count += 1;
        }
        if count % 2 == 1 {
            squarefree *= p;
        }
        if count >= 2 {
            outside *= BigUint::from(p).pow(count / 2);
        }
        p += if p == 2 { 1 } else { 2 };
    }
    (outside, squarefree * n)
}

fn int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

impl RadScalar {
    pub fn zero() -> Self {
        RadScalar { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_rational(BigRational::one())
    }

    pub fn from_int(v: i64) -> Self {
        Self::from_rational(int(v))
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_rational(q: BigRational) -> Self {
        if q.is_zero() {
            Self::zero()
        } else {
            RadScalar { terms: vec![(1, q)] }
        }
    }

    /// Canonical form of `q * sqrt(n)`; a zero radicand gives zero.
    pub fn rad_normalize(q: BigRational, n: &BigUint) -> Self {
        if q.is_zero() || n.is_zero() {
            return Self::zero();
        }
        let (outside, squarefree) = squarefree_split(n);
        let coeff = q * BigRational::from_integer(BigInt::from(outside));
        RadScalar { terms: vec![(squarefree, coeff)] }
    }

    /// `sqrt(n)` for a natural `n`.
    pub fn sqrt_int(n: u64) -> Self {
        Self::rad_normalize(BigRational::one(), &BigUint::from(n))
    }

    /// `sqrt(q)` for a non-negative rational `q`.
    pub fn sqrt_rational(q: &BigRational) -> Result<Self> {
        if q.is_negative() {
            return Err(Error::Domain(format!("square root of negative rational {q}")));
        }
        // sqrt(p/d) = sqrt(p*d) / d
        let num = q.numer().to_biguint().unwrap_or_default();
        let den = q.denom().to_biguint().expect("positive denominator");
        let inv_den = BigRational::new(BigInt::one(), BigInt::from(den.clone()));
        Ok(Self::rad_normalize(inv_den, &(num * den)))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == 1 && self.terms[0].1.is_one()
    }

    /// The rational value, if there are no irrational terms.
    pub fn as_rational(&self) -> Option<BigRational> {
        match self.terms.as_slice() {
            [] => Some(BigRational::zero()),
            [(1, q)] => Some(q.clone()),
            _ => None,
        }
    }

    /// The single term `(q, n)` if this is a monomial `q * sqrt(n)`.
    pub fn as_monomial(&self) -> Option<(&BigRational, u64)> {
        match self.terms.as_slice() {
            [(n, q)] => Some((q, *n)),
            _ => None,
        }
    }

    /// Terms `(radicand, coefficient)` sorted by radicand.
    pub fn terms(&self) -> &[(u64, BigRational)] {
        &self.terms
    }

    /// Builds a scalar from arbitrary (not necessarily canonical) terms.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (BigRational, BigUint)>,
    {
        let mut acc = Self::zero();
        for (q, n) in terms {
            acc += &Self::rad_normalize(q, &n);
        }
        acc
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        RadScalar { terms: self.terms.iter().map(|(n, c)| (*n, c * q)).collect() }
    }

    /// Inverse of a monomial `q * sqrt(n)`, which is `sqrt(n) / (q n)`.
    pub fn inverse(&self) -> Result<Self> {
        match self.as_monomial() {
            Some((q, n)) => {
                let denom = q * int(n as i64);
                Ok(RadScalar { terms: vec![(n, denom.recip())] })
            }
            None if self.is_zero() => Err(Error::NotInvertible("zero".into())),
            None => Err(Error::NotInvertible(format!("{self} is not a single radical term"))),
        }
    }

    /// Exact quotient by a monomial divisor.
    pub fn div_exact(&self, divisor: &RadScalar) -> Result<Self> {
        Ok(self * &divisor.inverse()?)
    }

    fn merge(&self, other: &RadScalar, sign: bool) -> RadScalar {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        let neg = |c: &BigRational| if sign { c.clone() } else { -c };
        while i < a.len() || j < b.len() {
            if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
                out.push(a[i].clone());
                i += 1;
            } else if i == a.len() || b[j].0 < a[i].0 {
                out.push((b[j].0, neg(&b[j].1)));
                j += 1;
            } else {
                let c = if sign { &a[i].1 + &b[j].1 } else { &a[i].1 - &b[j].1 };
                if !c.is_zero() {
                    out.push((a[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
        RadScalar { terms: out }
    }

    fn mul_terms(&self, other: &RadScalar) -> RadScalar {
        if self.is_zero() || other.is_zero() {
            return RadScalar::zero();
        }
        if let [(1, q)] = self.terms.as_slice() {
            return other.scale(q);
        }
        if let [(1, q)] = other.terms.as_slice() {
            return self.scale(q);
        }
        let mut acc: Vec<(u64, BigRational)> = Vec::new();
        for (na, qa) in &self.terms {
            for (nb, qb) in &other.terms {
                let g = na.gcd(nb);
                let radicand = (na / g).checked_mul(nb / g).expect("radicand product exceeds u64");
                let coeff = qa * qb * int(g as i64);
                match acc.binary_search_by_key(&radicand, |t| t.0) {
                    Ok(pos) => acc[pos].1 += coeff,
                    Err(pos) => acc.insert(pos, (radicand, coeff)),
                }
            }
        }
        acc.retain(|(_, c)| !c.is_zero());
        RadScalar { terms: acc }
    }

    /// Real value as `f64`, for display and sanity checks only.
    pub fn to_f64(&self) -> f64 {
        self.terms.iter().map(|(n, q)| q.to_f64().unwrap_or(f64::NAN) * (*n as f64).sqrt()).sum()
    }
}

impl From<i64> for RadScalar {
    fn from(v: i64) -> Self {
        RadScalar::from_int(v)
    }
}

impl From<BigRational> for RadScalar {
    fn from(q: BigRational) -> Self {
        RadScalar::from_rational(q)
    }
}

impl Add<&RadScalar> for &RadScalar {
    type Output = RadScalar;
    fn add(self, rhs: &RadScalar) -> RadScalar {
        self.merge(rhs, true)
    }
}

impl Sub<&RadScalar> for &RadScalar {
    type Output = RadScalar;
    fn sub(self, rhs: &RadScalar) -> RadScalar {
        self.merge(rhs, false)
    }
}

impl Mul<&RadScalar> for &RadScalar {
    type Output = RadScalar;
    fn mul(self, rhs: &RadScalar) -> RadScalar {
        self.mul_terms(rhs)
    }
}

impl Neg for &RadScalar {
    type Output = RadScalar;
    fn neg(self) -> RadScalar {
        RadScalar { terms: self.terms.iter().map(|(n, c)| (*n, -c)).collect() }
    }
}

impl Neg for RadScalar {
    type Output = RadScalar;
    fn neg(self) -> RadScalar {
        -&self
    }
}

impl AddAssign<&RadScalar> for RadScalar {
    fn add_assign(&mut self, rhs: &RadScalar) {
        *self = self.merge(rhs, true);
    }
}

impl SubAssign<&RadScalar> for RadScalar {
    fn sub_assign(&mut self, rhs: &RadScalar) {
        *self = self.merge(rhs, false);
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr<RadScalar> for RadScalar {
            type Output = RadScalar;
            fn $method(self, rhs: RadScalar) -> RadScalar {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&RadScalar> for RadScalar {
            type Output = RadScalar;
            fn $method(self, rhs: &RadScalar) -> RadScalar {
                (&self).$method(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for RadScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<_> = self.terms.iter().map(|(n, q)| (q, *n, 0usize)).collect();
        f.write_str(&crate::scalar::format::format_terms(&terms))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn normalize_extracts_squares() {
        let r = RadScalar::rad_normalize(q(1, 1), &BigUint::from(8u32));
        assert_eq!(r.as_monomial(), Some((&q(2, 1), 2)));
        let r = RadScalar::rad_normalize(q(3, 1), &BigUint::from(1u32));
        assert_eq!(r, RadScalar::from_int(3));
        let r = RadScalar::rad_normalize(q(1, 2), &BigUint::from(12u32));
        assert_eq!(r, RadScalar::sqrt_int(3));
        assert!(RadScalar::rad_normalize(q(5, 1), &BigUint::zero()).is_zero());
    }

    #[test]
    fn normalize_handles_big_smooth_radicands() {
        // (20!)^2 * 6
        let f20: BigUint = (1u32..=20).map(BigUint::from).product();
        let n = &f20 * &f20 * BigUint::from(6u32);
        let r = RadScalar::rad_normalize(q(1, 1), &n);
        let (coeff, rad) = r.as_monomial().unwrap();
        assert_eq!(rad, 6);
        assert_eq!(coeff, &BigRational::from_integer(BigInt::from(f20)));
    }

    #[test]
    fn basic_ring_examples() {
        let s2 = RadScalar::sqrt_int(2);
        assert_eq!(&s2 * &s2, RadScalar::from_int(2));
        let one_plus = &RadScalar::one() + &s2;
        assert_eq!(&one_plus + &(-&s2), RadScalar::one());
        let s6 = &s2 * &RadScalar::sqrt_int(3);
        assert_eq!(s6, RadScalar::sqrt_int(6));
        assert_eq!(&s6 * &RadScalar::sqrt_int(10), &RadScalar::from_int(2) * &RadScalar::sqrt_int(15));
    }

    #[test]
    fn monomial_inverse() {
        let x = RadScalar::rad_normalize(q(3, 4), &BigUint::from(5u32));
        let inv = x.inverse().unwrap();
        assert!((&x * &inv).is_one());
        assert!(RadScalar::zero().inverse().is_err());
        assert!((&RadScalar::one() + &RadScalar::sqrt_int(2)).inverse().is_err());
    }

    #[test]
    fn sqrt_of_rational() {
        let r = RadScalar::sqrt_rational(&q(1, 2)).unwrap();
        assert_eq!(r.as_monomial(), Some((&q(1, 2), 2)));
        assert!(RadScalar::sqrt_rational(&q(-1, 2)).is_err());
    }
}
