//! Clebsch-Gordan coefficients of `sl(2)` (Racah single-sum formula,
//! Condon-Shortley phases) and of `U_h(sl(2))`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::coupling::alpha::{factorial, AlphaTable};
use crate::error::{Error, Result};
use crate::halfint::HalfInt;
use crate::report::{Check, Report};
use crate::scalar::{HPoly, RadScalar};

fn int(v: HalfInt) -> i64 {
    v.to_integer().expect("integral combination of weights")
}

/// `<j1 m1; j2 m2 | j m1+m2>`; zero outside the triangle or weight ranges.
pub fn sl2_cgc(j1: HalfInt, j2: HalfInt, j: HalfInt, m1: HalfInt, m2: HalfInt) -> RadScalar {
    let m = m1 + m2;
    if !HalfInt::triangle(j1, j2, j) || !m1.is_weight_of(j1) || !m2.is_weight_of(j2) || !m.is_weight_of(j) {
        return RadScalar::zero();
    }
    let f = |v: HalfInt| factorial(int(v));
    let triangle = BigRational::new(
        BigInt::from(j.twice() + 1) * f(j1 + j2 - j) * f(j1 - j2 + j) * f(j2 - j1 + j),
        f(j1 + j2 + j + HalfInt::ONE),
    );
    let weights = BigRational::from_integer(f(j1 + m1) * f(j1 - m1) * f(j2 + m2) * f(j2 - m2) * f(j + m) * f(j - m));

    let a = [int(j1 + j2 - j), int(j1 - m1), int(j2 + m2)];
    let b = [int(j - j2 + m1), int(j - j1 - m2)];
    let k_min = 0.max(-b[0]).max(-b[1]);
    let k_max = a.into_iter().min().expect("non-empty");
    let mut sum = BigRational::zero();
    for k in k_min..=k_max {
        let denom = factorial(k)
            * factorial(a[0] - k)
            * factorial(a[1] - k)
            * factorial(a[2] - k)
            * factorial(b[0] + k)
            * factorial(b[1] + k);
        let sign = if k % 2 == 0 { 1 } else { -1 };
        sum += BigRational::new(BigInt::from(sign), denom);
    }
    if sum.is_zero() {
        return RadScalar::zero();
    }
    RadScalar::sqrt_rational(&(triangle * weights)).expect("positive").scale(&sum)
}

/// Coefficient of `|j1 k1> (x) |j2 k2>` in the coupled vector `|j m>`:
/// `sum_{m1+m2=m} C^{j1 j2 j}_{m1 m2 m} alpha_{k1,k2}^{m1,m2}`.
pub fn uh_cgc(j1: HalfInt, j2: HalfInt, j: HalfInt, k1: HalfInt, k2: HalfInt, m: HalfInt) -> Result<HPoly> {
    if !HalfInt::triangle(j1, j2, j) {
        return Err(Error::SelectionRule { j1, j2, j });
    }
    let table = AlphaTable::cached(j1, j2)?;
    Ok(uh_cgc_with(&table, j, k1, k2, m))
}

pub(crate) fn uh_cgc_with(table: &AlphaTable, j: HalfInt, k1: HalfInt, k2: HalfInt, m: HalfInt) -> HPoly {
    let (j1, j2) = (table.j1, table.j2);
    let mut acc = HPoly::zero();
    for m1 in j1.weights() {
        let m2 = m - m1;
        if !m2.is_weight_of(j2) {
            continue;
        }
        let c = sl2_cgc(j1, j2, j, m1, m2);
        if c.is_zero() {
            continue;
        }
        let a = table.get(k1, k2, m1, m2);
        if !a.is_zero() {
            acc += &a.scale(&c);
        }
    }
    acc
}

/// At `h = 0` every deformed coefficient is the undeformed one, and the
/// undeformed coefficients form an orthogonal matrix.
pub fn verify_classical_cgc(j1: HalfInt, j2: HalfInt) -> Result<Report> {
    let table = AlphaTable::cached(j1, j2)?;
    Ok(Report::timed(format!("cgc classical limit j1={j1} j2={j2}"), |r| {
        let mut bad = Vec::new();
        let mut count = 0usize;
        for j in HalfInt::coupled_range(j1, j2) {
            for m in j.weights() {
                for k1 in j1.weights() {
                    for k2 in j2.weights() {
                        count += 1;
                        let expected = if k1 + k2 == m { sl2_cgc(j1, j2, j, k1, k2) } else { RadScalar::zero() };
                        if uh_cgc_with(&table, j, k1, k2, m).at_zero() != expected {
                            bad.push(format!("(j={j}, m={m}, k1={k1}, k2={k2})"));
                        }
                    }
                }
            }
        }
        r.push(if bad.is_empty() {
            Check::pass("U_h CGC at h=0 = sl(2) CGC", format!("{count} coefficients"))
        } else {
            Check::fail("U_h CGC at h=0 = sl(2) CGC", bad.join(", "))
        });
        let mut bad = Vec::new();
        for m1 in j1.weights() {
            for m2 in j2.weights() {
                for n1 in j1.weights() {
                    let n2 = m1 + m2 - n1;
                    if !n2.is_weight_of(j2) {
                        continue;
                    }
                    let mut acc = RadScalar::zero();
                    for j in HalfInt::coupled_range(j1, j2) {
                        acc += &(&sl2_cgc(j1, j2, j, m1, m2) * &sl2_cgc(j1, j2, j, n1, n2));
                    }
                    let expected = if m1 == n1 { RadScalar::one() } else { RadScalar::zero() };
                    if acc != expected {
                        bad.push(format!("({m1},{m2}) ({n1},{n2})"));
                    }
                }
            }
        }
        r.push(if bad.is_empty() {
            Check::pass("sl(2) CGC orthogonality", "sum_j C C = delta")
        } else {
            Check::fail("sl(2) CGC orthogonality", bad.join(", "))
        });
    }))
}
