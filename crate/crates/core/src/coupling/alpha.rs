//! Transition coefficients between the product basis and the intermediate
//! vectors of `W(j1) (x) W(j2)`.
//!
//! `alpha_{k1,k2}^{m1,m2} = (-1)^{k2-m2} (h/2)^{k1+k2-m1-m2} D (b_{k1,k2} - b_{k1-1,k2-1})`
//! with `D = sqrt[(j1-m1)!(j1+k1)!(j2-m2)!(j2+k2)! / ((j1+m1)!(j1-k1)!(j2+m2)!(j2-k2)!)]`
//! and `b_{k1,k2} = binom(m1+k1, k2-m2) binom(m2+k2, k1-m1)`, where the
//! binomial is the falling-factorial one, zero for a negative lower index.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{domain, Error, Result};
use crate::halfint::HalfInt;
use crate::scalar::{HPoly, RadScalar};

pub(crate) fn factorial(n: i64) -> BigInt {
    assert!(n >= 0, "factorial of negative {n}");
    (1..=n).map(BigInt::from).product()
}

/// `n(n-1)...(n-m+1)/m!` for `m >= 0`, zero for `m < 0`; `n` may be negative
/// but must be an integer.
pub fn binom_ext(n: HalfInt, m: i64) -> Result<BigRational> {
    let n = n.to_integer().ok_or_else(|| Error::Domain(format!("binomial upper index {n} is not an integer")))?;
    if m < 0 {
        return Ok(BigRational::zero());
    }
    let mut acc = BigRational::one();
    for i in 0..m {
        acc = acc * BigRational::from_integer(BigInt::from(n - i)) / BigRational::from_integer(BigInt::from(i + 1));
    }
    Ok(acc)
}

fn int_diff(a: HalfInt, b: HalfInt) -> i64 {
    (a - b).to_integer().expect("indices of equal parity")
}

fn check_weight(label: &str, m: HalfInt, j: HalfInt) -> Result<()> {
    if !m.is_weight_of(j) {
        return Err(domain(format!("{label} = {m} is not a weight of j = {j}")));
    }
    Ok(())
}

/// `alpha_{k1,k2}^{m1,m2}` for `W(j1) (x) W(j2)`: a monomial in `h`.
pub fn alpha(j1: HalfInt, j2: HalfInt, k1: HalfInt, k2: HalfInt, m1: HalfInt, m2: HalfInt) -> Result<HPoly> {
    check_weight("k1", k1, j1)?;
    check_weight("m1", m1, j1)?;
    check_weight("k2", k2, j2)?;
    check_weight("m2", m2, j2)?;
    let d1 = int_diff(k1, m1);
    let d2 = int_diff(k2, m2);
    let b = |shift: i64| -> Result<BigRational> {
        let s = HalfInt::from_int(shift);
        Ok(binom_ext(m1 + k1 - s, d2 - shift)? * binom_ext(m2 + k2 - s, d1 - shift)?)
    };
    let bdiff = b(0)? - b(1)?;
    if bdiff.is_zero() {
        return Ok(HPoly::zero());
    }
    // a nonzero b forces k1 >= m1 and k2 >= m2
    debug_assert!(d1 >= 0 && d2 >= 0);
    let f = |a: HalfInt, b: HalfInt| factorial(int_diff(a, b));
    let num = f(j1, m1) * f(j1, -k1) * f(j2, m2) * f(j2, -k2);
    let den = f(j1, -m1) * f(j1, k1) * f(j2, -m2) * f(j2, k2);
    let d = RadScalar::sqrt_rational(&BigRational::new(num, den))?;
    let power = (d1 + d2) as usize;
    let sign = if d2 % 2 == 0 { 1 } else { -1 };
    let half_pow = BigRational::new(BigInt::from(sign), BigInt::from(2).pow(power as u32));
    Ok(HPoly::monomial(d.scale(&(bdiff * half_pow)), power))
}

/// All `alpha` values for a fixed `(j1, j2)`, indexed by basis positions.
#[derive(Clone, Debug)]
pub struct AlphaTable {
    pub j1: HalfInt,
    pub j2: HalfInt,
    values: Vec<HPoly>,
}

impl AlphaTable {
    pub fn new(j1: HalfInt, j2: HalfInt) -> Result<Self> {
        if j1.twice() < 0 || j2.twice() < 0 {
            return Err(domain(format!("negative highest weight ({j1}, {j2})")));
        }
        let (d1, d2) = (j1.multiplicity(), j2.multiplicity());
        let mut values = Vec::with_capacity(d1 * d1 * d2 * d2);
        for k1 in j1.weights() {
            for k2 in j2.weights() {
                for m1 in j1.weights() {
                    for m2 in j2.weights() {
                        values.push(alpha(j1, j2, k1, k2, m1, m2)?);
                    }
                }
            }
        }
        Ok(AlphaTable { j1, j2, values })
    }

    /// Memoized table shared across threads.
    #[allow(clippy::type_complexity)]
    pub fn cached(j1: HalfInt, j2: HalfInt) -> Result<Arc<Self>> {
        static CACHE: OnceLock<Mutex<HashMap<(i64, i64), Arc<AlphaTable>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        let key = (j1.twice(), j2.twice());
        if let Some(t) = cache.lock().expect("alpha cache poisoned").get(&key) {
            return Ok(Arc::clone(t));
        }
        let table = Arc::new(AlphaTable::new(j1, j2)?);
        cache.lock().expect("alpha cache poisoned").insert(key, Arc::clone(&table));
        Ok(table)
    }

    /// `alpha_{k1,k2}^{m1,m2}`; zero outside the weight ranges.
    pub fn get(&self, k1: HalfInt, k2: HalfInt, m1: HalfInt, m2: HalfInt) -> &HPoly {
        static ZERO: OnceLock<HPoly> = OnceLock::new();
        let idx = (|| {
            let (d1, d2) = (self.j1.multiplicity(), self.j2.multiplicity());
            let (a, b) = (k1.index_in(self.j1)?, k2.index_in(self.j2)?);
            let (c, d) = (m1.index_in(self.j1)?, m2.index_in(self.j2)?);
            Some(((a * d2 + b) * d1 + c) * d2 + d)
        })();
        match idx {
            Some(i) => &self.values[i],
            None => ZERO.get_or_init(HPoly::zero),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hi(twice: i64) -> HalfInt {
        HalfInt::from_twice(twice)
    }

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn binom_ext_examples() {
        assert_eq!(binom_ext(HalfInt::from_int(3), 2).unwrap(), q(3));
        assert_eq!(binom_ext(HalfInt::from_int(5), -1).unwrap(), q(0));
        // (-1)(-2)/2!
        assert_eq!(binom_ext(HalfInt::from_int(-1), 2).unwrap(), q(1));
        assert!(binom_ext(HalfInt::HALF, 1).is_err());
    }

    #[test]
    fn diagonal_alpha_is_one() {
        for (t1, t2) in [(1, 1), (2, 1), (3, 4), (4, 4)] {
            let (j1, j2) = (hi(t1), hi(t2));
            for m1 in j1.weights() {
                for m2 in j2.weights() {
                    assert!(alpha(j1, j2, m1, m2, m1, m2).unwrap().is_one());
                }
            }
        }
    }

    #[test]
    fn spin_half_off_diagonal() {
        let a = alpha(hi(1), hi(1), hi(1), hi(1), hi(1), hi(-1)).unwrap();
        assert_eq!(a, HPoly::monomial(RadScalar::from_ratio(-1, 2), 1));
    }

    #[test]
    fn vanishes_below_m() {
        let (j1, j2) = (hi(2), hi(3));
        for k1 in j1.weights() {
            for k2 in j2.weights() {
                for m1 in j1.weights() {
                    for m2 in j2.weights() {
                        let a = alpha(j1, j2, k1, k2, m1, m2).unwrap();
                        if k1 < m1 || k2 < m2 {
                            assert!(a.is_zero());
                        } else if !a.is_zero() {
                            let deg = (k1 + k2 - m1 - m2).to_integer().unwrap() as usize;
                            assert_eq!(a.valuation(), Some(deg));
                            assert_eq!(a.degree(), Some(deg));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(alpha(hi(1), hi(1), hi(3), hi(1), hi(1), hi(1)).is_err());
        assert!(alpha(hi(2), hi(1), hi(1), hi(1), hi(0), hi(1)).is_err());
    }

    #[test]
    fn classical_limit_is_delta() {
        let (j1, j2) = (hi(2), hi(2));
        for k1 in j1.weights() {
            for k2 in j2.weights() {
                for m1 in j1.weights() {
                    for m2 in j2.weights() {
                        let a0 = alpha(j1, j2, k1, k2, m1, m2).unwrap().at_zero();
                        assert_eq!(a0.is_one(), k1 == m1 && k2 == m2);
                        assert_eq!(a0.is_zero(), !(k1 == m1 && k2 == m2));
                    }
                }
            }
        }
    }
}
