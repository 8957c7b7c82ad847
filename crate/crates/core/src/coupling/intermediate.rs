//! Intermediate vectors: the alpha-weighted combinations of product vectors on
//! which `Delta(Z+-)` and `Delta(H)` act with undeformed `sl(2)` matrix elements.
//!
//! Vectors live in `W(j1) (x) W(j2)` with index `i1 * (2 j2 + 1) + i2`.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::algebra::Irrep;
use crate::coupling::alpha::AlphaTable;
use crate::error::{domain, Result};
use crate::halfint::HalfInt;
use crate::report::{Check, Report};
use crate::scalar::{HPoly, PolyMatrix, RadScalar};

pub type Vector = Vec<HPoly>;

fn product_index(j1: HalfInt, j2: HalfInt, k1: HalfInt, k2: HalfInt) -> usize {
    k1.index_in(j1).expect("weight of j1") * j2.multiplicity() + k2.index_in(j2).expect("weight of j2")
}

fn check(j1: HalfInt, j2: HalfInt, m1: HalfInt, m2: HalfInt) -> Result<()> {
    if !m1.is_weight_of(j1) || !m2.is_weight_of(j2) {
        return Err(domain(format!("({m1}, {m2}) is not a weight pair of ({j1}, {j2})")));
    }
    Ok(())
}

pub(crate) fn ket_with(table: &AlphaTable, m1: HalfInt, m2: HalfInt) -> Vector {
    let (j1, j2) = (table.j1, table.j2);
    let mut v = vec![HPoly::zero(); j1.multiplicity() * j2.multiplicity()];
    // alpha vanishes for k < m, so summing over the full range is the same
    for k1 in j1.weights() {
        for k2 in j2.weights() {
            let a = table.get(k1, k2, m1, m2);
            if !a.is_zero() {
                v[product_index(j1, j2, k1, k2)] = a.clone();
            }
        }
    }
    v
}

pub(crate) fn bra_with(table: &AlphaTable, m1: HalfInt, m2: HalfInt) -> Vector {
    let (j1, j2) = (table.j1, table.j2);
    let mut v = vec![HPoly::zero(); j1.multiplicity() * j2.multiplicity()];
    for k1 in j1.weights() {
        for k2 in j2.weights() {
            let a = table.get(-k1, -k2, -m1, -m2);
            if !a.is_zero() {
                v[product_index(j1, j2, k1, k2)] = a.clone();
            }
        }
    }
    v
}

/// `|(j1 m1)(j2 m2)> = sum_k alpha_{k1,k2}^{m1,m2} |j1 k1> (x) |j2 k2>`.
pub fn intermediate_ket(j1: HalfInt, j2: HalfInt, m1: HalfInt, m2: HalfInt) -> Result<Vector> {
    check(j1, j2, m1, m2)?;
    Ok(ket_with(&*AlphaTable::cached(j1, j2)?, m1, m2))
}

/// `<(j1 m1)(j2 m2)| = sum_k alpha_{-k1,-k2}^{-m1,-m2} <j1 k1| (x) <j2 k2|`.
pub fn intermediate_bra(j1: HalfInt, j2: HalfInt, m1: HalfInt, m2: HalfInt) -> Result<Vector> {
    check(j1, j2, m1, m2)?;
    Ok(bra_with(&*AlphaTable::cached(j1, j2)?, m1, m2))
}

pub fn dot(a: &[HPoly], b: &[HPoly]) -> HPoly {
    let mut acc = HPoly::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc += &(x * y);
        }
    }
    acc
}

/// Row vector times matrix.
pub fn covector_apply(v: &[HPoly], m: &PolyMatrix) -> Vector {
    m.transpose().apply(v)
}

pub(crate) fn axpy(acc: &mut Vector, c: &RadScalar, v: &[HPoly]) {
    if c.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a += &x.scale(c);
        }
    }
}

pub(crate) fn sub_vec(a: &[HPoly], b: &[HPoly]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub(crate) fn first_nonzero(v: &[HPoly]) -> Option<(usize, &HPoly)> {
    v.iter().enumerate().find(|(_, x)| !x.is_zero())
}

/// `sqrt((j - s m)(j + s m + 1))`: the `sl(2)` coefficient of `Z_s |j m>`.
pub(crate) fn ladder(j: HalfInt, m: HalfInt, s: i64) -> RadScalar {
    let a = if s > 0 { j - m } else { j + m };
    let b = if s > 0 { j + m } else { j - m };
    let prod = a.twice() * (b.twice() + 2);
    RadScalar::sqrt_rational(&BigRational::new(BigInt::from(prod.max(0)), BigInt::from(4))).expect("non-negative")
}

fn shift(m: HalfInt, s: i64) -> HalfInt {
    if s > 0 {
        m + HalfInt::ONE
    } else {
        m - HalfInt::ONE
    }
}

fn zero_vec(n: usize) -> Vector {
    vec![HPoly::zero(); n]
}

/// `Delta(H)` and `Delta(Z+-)` act on intermediate kets and bras exactly as
/// the undeformed coproducts act on product vectors.
pub fn verify_intermediate_action(j1: HalfInt, j2: HalfInt) -> Result<Report> {
    let a = Irrep::new(j1)?;
    let b = Irrep::new(j2)?;
    let table = AlphaTable::cached(j1, j2)?;
    let t = a.rep.tensor(&b.rep);
    let zp = t.z_plus()?;
    let zm = t.z_minus();
    let n = t.dim();
    let kets: Vec<Vec<Vector>> = j1.weights().map(|m1| j2.weights().map(|m2| ket_with(&table, m1, m2)).collect()).collect();
    let bras: Vec<Vec<Vector>> = j1.weights().map(|m1| j2.weights().map(|m2| bra_with(&table, m1, m2)).collect()).collect();
    let get = |vs: &Vec<Vec<Vector>>, m1: HalfInt, m2: HalfInt| -> Vector {
        match (m1.index_in(j1), m2.index_in(j2)) {
            (Some(i), Some(k)) => vs[i][k].clone(),
            _ => zero_vec(n),
        }
    };

    Ok(Report::timed(format!("intermediate action j1={j1} j2={j2}"), |r| {
        let mut ket_fail = Vec::new();
        let mut bra_fail = Vec::new();
        let mut variant_misses = 0usize;
        for m1 in j1.weights() {
            for m2 in j2.weights() {
                let ket = get(&kets, m1, m2);
                let weight = RadScalar::from_int((m1 + m2).twice());
                let hk = sub_vec(&t.h.apply(&ket), &ket.iter().map(|x| x.scale(&weight)).collect::<Vec<_>>());
                if first_nonzero(&hk).is_some() {
                    ket_fail.push(format!("H ({m1},{m2})"));
                }
                for (s, z) in [(1i64, &zp), (-1, &zm)] {
                    let lhs = z.apply(&ket);
                    let mut rhs = zero_vec(n);
                    axpy(&mut rhs, &ladder(j1, m1, s), &get(&kets, shift(m1, s), m2));
                    axpy(&mut rhs, &ladder(j2, m2, s), &get(&kets, m1, shift(m2, s)));
                    if first_nonzero(&sub_vec(&lhs, &rhs)).is_some() {
                        ket_fail.push(format!("Z{} ({m1},{m2})", if s > 0 { '+' } else { '-' }));
                    }
                    // variant with j1 in place of j2 in the second coefficient
                    let mut variant = zero_vec(n);
                    axpy(&mut variant, &ladder(j1, m1, s), &get(&kets, shift(m1, s), m2));
                    axpy(&mut variant, &ladder_variant(j1, j2, m2, s), &get(&kets, m1, shift(m2, s)));
                    if first_nonzero(&sub_vec(&lhs, &variant)).is_some() {
                        variant_misses += 1;
                    }
                }

                let bra = get(&bras, m1, m2);
                let hb = sub_vec(&covector_apply(&bra, &t.h), &bra.iter().map(|x| x.scale(&weight)).collect::<Vec<_>>());
                if first_nonzero(&hb).is_some() {
                    bra_fail.push(format!("H ({m1},{m2})"));
                }
                // <m| Z+ = sqrt((j+m)(j-m+1)) <m-1|, <m| Z- = sqrt((j-m)(j+m+1)) <m+1|
                for (s, z) in [(1i64, &zp), (-1, &zm)] {
                    let lhs = covector_apply(&bra, z);
                    let mut rhs = zero_vec(n);
                    axpy(&mut rhs, &ladder(j1, m1, -s), &get(&bras, shift(m1, -s), m2));
                    axpy(&mut rhs, &ladder(j2, m2, -s), &get(&bras, m1, shift(m2, -s)));
                    if first_nonzero(&sub_vec(&lhs, &rhs)).is_some() {
                        bra_fail.push(format!("Z{} ({m1},{m2})", if s > 0 { '+' } else { '-' }));
                    }
                }
            }
        }
        r.push(if ket_fail.is_empty() {
            Check::pass("ket action", "H, Z+, Z- act with sl(2) coefficients on all (m1,m2)")
        } else {
            Check::fail("ket action", format!("fails at {}", ket_fail.join(", ")))
        });
        r.push(if bra_fail.is_empty() {
            Check::pass("bra action", "H, Z+, Z- act with sl(2) coefficients on all (m1,m2)")
        } else {
            Check::fail("bra action", format!("fails at {}", bra_fail.join(", ")))
        });
        let detail = format!(
            "second coefficient written with j1 instead of j2, sqrt((j1 -+ m2)(j2 +- m2 + 1)): \
             {variant_misses} of {} ladder identities fail with that form",
            2 * j1.multiplicity() * j2.multiplicity()
        );
        r.push(if variant_misses == 0 { Check::pass("j1/j2 variant", detail) } else { Check::flagged("j1/j2 variant", detail) });
    }))
}

fn ladder_variant(j1: HalfInt, j2: HalfInt, m2: HalfInt, s: i64) -> RadScalar {
    let a = if s > 0 { j1 - m2 } else { j1 + m2 };
    let b = if s > 0 { j2 + m2 } else { j2 - m2 };
    let prod = a.twice() * (b.twice() + 2);
    if prod < 0 {
        // a negative product has no real root; treat as a mismatch marker
        return RadScalar::from_int(-1);
    }
    RadScalar::sqrt_rational(&BigRational::new(BigInt::from(prod), BigInt::from(4))).expect("non-negative")
}

/// Orthogonality of the alpha coefficients,
/// `sum_k alpha_{k1,k2}^{m1,m2} alpha_{-k1,-k2}^{-n1,-n2} = delta delta`.
pub fn verify_alpha_orthogonality(j1: HalfInt, j2: HalfInt) -> Result<Report> {
    let table = AlphaTable::cached(j1, j2)?;
    Ok(Report::timed(format!("alpha orthogonality j1={j1} j2={j2}"), |r| {
        let mut bad = Vec::new();
        let mut count = 0usize;
        for m1 in j1.weights() {
            for m2 in j2.weights() {
                for n1 in j1.weights() {
                    for n2 in j2.weights() {
                        count += 1;
                        let mut acc = HPoly::zero();
                        for k1 in j1.weights() {
                            for k2 in j2.weights() {
                                let a = table.get(k1, k2, m1, m2);
                                let b = table.get(-k1, -k2, -n1, -n2);
                                if !a.is_zero() && !b.is_zero() {
                                    acc += &(a * b);
                                }
                            }
                        }
                        let expected = m1 == n1 && m2 == n2;
                        if (expected && !acc.is_one()) || (!expected && !acc.is_zero()) {
                            bad.push(format!("m=({m1},{m2}) n=({n1},{n2}): {acc}"));
                        }
                    }
                }
            }
        }
        r.push(if bad.is_empty() {
            Check::pass("alpha orthogonality", format!("{count} index quadruples exact"))
        } else {
            Check::fail("alpha orthogonality", bad.join("; "))
        });
    }))
}

/// `<(j1 n1)(j2 n2) | (j1 m1)(j2 m2)> = delta delta`.
pub fn verify_intermediate_orthonormality(j1: HalfInt, j2: HalfInt) -> Result<Report> {
    let table = AlphaTable::cached(j1, j2)?;
    Ok(Report::timed(format!("intermediate orthonormality j1={j1} j2={j2}"), |r| {
        let mut bad = Vec::new();
        let mut count = 0usize;
        for n1 in j1.weights() {
            for n2 in j2.weights() {
                let bra = bra_with(&table, n1, n2);
                for m1 in j1.weights() {
                    for m2 in j2.weights() {
                        count += 1;
                        let p = dot(&bra, &ket_with(&table, m1, m2));
                        let expected = m1 == n1 && m2 == n2;
                        if (expected && !p.is_one()) || (!expected && !p.is_zero()) {
                            bad.push(format!("<({n1},{n2})|({m1},{m2})> = {p}"));
                        }
                    }
                }
            }
        }
        r.push(if bad.is_empty() {
            Check::pass("intermediate orthonormality", format!("{count} pairings exact"))
        } else {
            Check::fail("intermediate orthonormality", bad.join("; "))
        });
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hi(twice: i64) -> HalfInt {
        HalfInt::from_twice(twice)
    }

    #[test]
    fn classical_limit_is_product_vector() {
        let (j1, j2) = (hi(2), hi(1));
        for m1 in j1.weights() {
            for m2 in j2.weights() {
                let v = intermediate_ket(j1, j2, m1, m2).unwrap();
                for (i, x) in v.iter().enumerate() {
                    let expected = i == product_index(j1, j2, m1, m2);
                    assert_eq!(x.at_zero().is_one(), expected);
                    assert_eq!(x.at_zero().is_zero(), !expected);
                }
            }
        }
    }

    #[test]
    fn top_vector_is_single_term() {
        let v = intermediate_ket(hi(2), hi(3), hi(2), hi(3)).unwrap();
        assert_eq!(v.iter().filter(|x| !x.is_zero()).count(), 1);
        assert!(v[0].is_one());
    }

    #[test]
    fn spin_half_orthonormality() {
        let r = verify_intermediate_orthonormality(hi(1), hi(1)).unwrap();
        assert!(r.passed(), "{r}");
        let r = verify_alpha_orthogonality(hi(1), hi(1)).unwrap();
        assert!(r.passed(), "{r}");
        assert!(r.checks[0].detail.starts_with("16 "));
    }

    #[test]
    fn orthogonality_one_three_halves() {
        let r = verify_alpha_orthogonality(hi(2), hi(3)).unwrap();
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn action_spin_half_and_one_half() {
        for (a, b) in [(1, 1), (2, 1), (1, 2)] {
            let r = verify_intermediate_action(hi(a), hi(b)).unwrap();
            assert!(r.checks.iter().take(2).all(|c| !c.is_failure()), "{r}");
        }
    }

    #[test]
    fn delta_h_eigenvalue_on_top_ket() {
        let a = Irrep::new(hi(1)).unwrap();
        let t = a.rep.tensor(&a.rep);
        let ket = intermediate_ket(hi(1), hi(1), hi(1), hi(1)).unwrap();
        let hk = t.h.apply(&ket);
        assert_eq!(hk, ket.iter().map(|x| x.scale_int(2)).collect::<Vec<_>>());
    }

    #[test]
    fn bad_weights_rejected() {
        assert!(intermediate_ket(hi(1), hi(1), hi(3), hi(1)).is_err());
        assert!(intermediate_bra(hi(1), hi(2), hi(1), hi(1)).is_err());
    }
}
