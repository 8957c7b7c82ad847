//! Power series of nilpotent matrices, which always terminate.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::scalar::PolyMatrix;

/// `sum_k c_k N^k` for a nilpotent `N`; stops at the first vanishing power.
pub fn nilpotent_series(n: &PolyMatrix, mut coeff: impl FnMut(u32) -> BigRational) -> PolyMatrix {
    assert!(n.is_square(), "series of a non-square matrix");
    let dim = n.rows();
    let mut acc = PolyMatrix::zeros(dim, dim);
    let mut power = PolyMatrix::identity(dim);
    let mut k = 0u32;
    while !power.is_zero() {
        assert!(k as usize <= dim, "matrix is not nilpotent");
        let c = coeff(k);
        if !c.is_zero() {
            acc = &acc + &power.scale_rational(&c);
        }
        power = &power * n;
        k += 1;
    }
    acc
}

fn factorial(k: u32) -> BigInt {
    (1..=k).map(BigInt::from).product()
}

fn ratio(n: BigInt, d: BigInt) -> BigRational {
    BigRational::new(n, d)
}

/// `e^N`.
pub fn exp(n: &PolyMatrix) -> PolyMatrix {
    nilpotent_series(n, |k| ratio(BigInt::one(), factorial(k)))
}

/// `(I - N)^{-1}`.
pub fn neumann_inverse(n: &PolyMatrix) -> PolyMatrix {
    nilpotent_series(n, |_| BigRational::one())
}

/// `log(I + N)`.
pub fn log_one_plus(n: &PolyMatrix) -> PolyMatrix {
    nilpotent_series(n, |k| match k {
        0 => BigRational::zero(),
        _ => {
            let sign = if k % 2 == 1 { 1 } else { -1 };
            ratio(BigInt::from(sign), BigInt::from(k))
        }
    })
}

/// `arctanh(N) = sum_k N^{2k+1} / (2k+1)`.
pub fn arctanh(n: &PolyMatrix) -> PolyMatrix {
    nilpotent_series(n, |k| if k % 2 == 1 { ratio(BigInt::one(), BigInt::from(k)) } else { BigRational::zero() })
}

/// Generalised binomial coefficient `binom(a, k)` for rational `a`.
pub fn binom_rational(a: &BigRational, k: u32) -> BigRational {
    let mut acc = BigRational::one();
    for i in 0..k {
        acc = acc * (a - BigRational::from_integer(BigInt::from(i))) / BigRational::from_integer(BigInt::from(i + 1));
    }
    acc
}

/// `(I - N)^{1/2} = sum_k binom(1/2, k) (-N)^k`.
pub fn sqrt_one_minus(n: &PolyMatrix) -> PolyMatrix {
    let half = ratio(BigInt::one(), BigInt::from(2));
    nilpotent_series(n, |k| {
        let c = binom_rational(&half, k);
        if k % 2 == 1 {
            -c
        } else {
            c
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::HPoly;

    fn shift(n: usize) -> PolyMatrix {
        PolyMatrix::from_fn(n, n, |i, j| if j == i + 1 { HPoly::h() } else { HPoly::zero() })
    }

    #[test]
    fn exp_and_log_invert() {
        let n = shift(4);
        let e = exp(&n);
        let back = log_one_plus(&(&e - &PolyMatrix::identity(4)));
        assert_eq!(back, n);
    }

    #[test]
    fn sqrt_squares_back() {
        let n = shift(5);
        let s = sqrt_one_minus(&n);
        assert_eq!(&s * &s, &PolyMatrix::identity(5) - &n);
    }

    #[test]
    fn neumann_is_inverse() {
        let n = shift(3);
        let inv = neumann_inverse(&n);
        assert!((&inv * &(&PolyMatrix::identity(3) - &n)).is_identity());
    }

    #[test]
    fn binom_half() {
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(binom_rational(&half, 2), BigRational::new((-1).into(), 8.into()));
    }
}
