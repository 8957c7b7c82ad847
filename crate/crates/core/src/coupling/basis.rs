//! The coupled basis `|j m> = sum_{m1+m2=m} C^{j1 j2 j}_{m1 m2 m} |(j1 m1)(j2 m2)>`
//! of `W(j1) (x) W(j2)` and the resulting decomposition into irreducibles.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::algebra::hopf::Generator;
use crate::algebra::{Block, Irrep, Representation};
use crate::coupling::alpha::AlphaTable;
use crate::coupling::cgc::sl2_cgc;
use crate::coupling::intermediate::{axpy, bra_with, first_nonzero, ket_with, sub_vec, Vector};
use crate::error::Result;
use crate::halfint::HalfInt;
use crate::report::{Check, Report};
use crate::scalar::{PolyMatrix, RadScalar};

#[derive(Clone, Debug)]
pub struct CoupledVector {
    pub j: HalfInt,
    pub m: HalfInt,
    pub ket: Vector,
    pub bra: Vector,
}

/// Coupled vectors ordered by `j` descending, then `m` descending.
#[derive(Clone, Debug)]
pub struct CoupledBasis {
    pub j1: HalfInt,
    pub j2: HalfInt,
    pub vectors: Vec<CoupledVector>,
    pub blocks: Vec<Block>,
}

impl CoupledBasis {
    pub fn new(j1: HalfInt, j2: HalfInt) -> Result<Self> {
        let table = AlphaTable::cached(j1, j2)?;
        let n = j1.multiplicity() * j2.multiplicity();
        let mut vectors = Vec::with_capacity(n);
        let mut blocks = Vec::new();
        for j in HalfInt::coupled_range(j1, j2) {
            let start = vectors.len();
            for m in j.weights() {
                let mut ket = vec![Default::default(); n];
                let mut bra = vec![Default::default(); n];
                for m1 in j1.weights() {
                    let m2 = m - m1;
                    let c = sl2_cgc(j1, j2, j, m1, m2);
                    if c.is_zero() {
                        continue;
                    }
                    axpy(&mut ket, &c, &ket_with(&table, m1, m2));
                    axpy(&mut bra, &c, &bra_with(&table, m1, m2));
                }
                vectors.push(CoupledVector { j, m, ket, bra });
            }
            blocks.push(Block::new(j, (start..vectors.len()).collect()));
        }
        Ok(CoupledBasis { j1, j2, vectors, blocks })
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    /// Columns are the coupled kets.
    pub fn ket_matrix(&self) -> PolyMatrix {
        let n = self.dim();
        PolyMatrix::from_fn(n, n, |r, c| self.vectors[c].ket[r].clone())
    }

    /// Rows are the coupled bras.
    pub fn bra_matrix(&self) -> PolyMatrix {
        let n = self.dim();
        PolyMatrix::from_fn(n, n, |r, c| self.vectors[r].bra[c].clone())
    }

    /// `"j_a (+) j_b (+) ..."`.
    pub fn summary(&self) -> String {
        self.blocks.iter().map(|b| b.j.to_string()).collect::<Vec<_>>().join(" ⊕ ")
    }
}

pub fn coupled_basis(j1: HalfInt, j2: HalfInt) -> Result<CoupledBasis> {
    CoupledBasis::new(j1, j2)
}

/// Block-diagonal direct sum of the irreducible matrices of `g`.
fn direct_sum(blocks: &[Block], g: Generator) -> Result<PolyMatrix> {
    let n: usize = blocks.iter().map(|b| b.indices.len()).sum();
    let mut out = PolyMatrix::zeros(n, n);
    for b in blocks {
        let irrep = Irrep::new(b.j)?;
        let m = irrep.rep.generator(g);
        for (a, &r) in b.indices.iter().enumerate() {
            for (c, &col) in b.indices.iter().enumerate() {
                out.set(r, col, m.get(a, c).clone());
            }
        }
    }
    Ok(out)
}

/// The tensor product with its coupled-basis blocks: the returned
/// representation is `P^{-1} Delta(g) P` in the coupled basis.
pub fn decompose(j1: HalfInt, j2: HalfInt) -> Result<(CoupledBasis, Representation)> {
    let basis = CoupledBasis::new(j1, j2)?;
    let t = Irrep::new(j1)?.rep.tensor(&Irrep::new(j2)?.rep);
    let p = basis.ket_matrix();
    let q = basis.bra_matrix();
    let conj = |m: &PolyMatrix| &(&q * m) * &p;
    let mut rep = Representation {
        name: format!("W({j1}) (x) W({j2}) coupled"),
        x: conj(&t.x),
        y: conj(&t.y),
        h: conj(&t.h),
        exp_hx: conj(&t.exp_hx),
        exp_mhx: conj(&t.exp_mhx),
        exp_half_hx: conj(&t.exp_half_hx),
        exp_half_mhx: conj(&t.exp_half_mhx),
        blocks: Vec::new(),
    };
    rep.blocks = basis.blocks.clone();
    Ok((basis, rep))
}

/// Certifies the decomposition: the coupled bras invert the coupled kets,
/// the generators become block diagonal with the irreducible matrices, the
/// coproduct Casimir acts by `j(j+1)` on each `|j m>`, and the `h = 0` change
/// of basis is orthogonal.
pub fn verify_decomposition(j1: HalfInt, j2: HalfInt) -> Result<Report> {
    let (basis, coupled) = decompose(j1, j2)?;
    let t = Irrep::new(j1)?.rep.tensor(&Irrep::new(j2)?.rep);
    let p = basis.ket_matrix();
    let q = basis.bra_matrix();
    let mut sums = Vec::new();
    for g in [Generator::X, Generator::Y, Generator::H, Generator::ExpHX, Generator::ExpmHX] {
        sums.push((g, direct_sum(&basis.blocks, g)?));
    }
    let casimir = t.casimir()?;
    Ok(Report::timed(format!("decomposition {j1} (x) {j2} = {}", basis.summary()), |r| {
        let n = basis.dim();
        r.push(Check::from_bool("dimension count", n == j1.multiplicity() * j2.multiplicity(), format!("{n} coupled vectors")));
        r.push(Check::zero("bra * ket = 1", &(&(&q * &p) - &PolyMatrix::identity(n))));
        r.push(Check::zero("ket * bra = 1", &(&(&p * &q) - &PolyMatrix::identity(n))));
        for (g, sum) in &sums {
            r.push(Check::zero(format!("P^-1 Delta({g}) P block diagonal"), &(coupled.generator(*g).as_ref() - sum)));
        }
        let mut bad = Vec::new();
        for v in &basis.vectors {
            let value = RadScalar::from_ratio(v.j.twice() * (v.j.twice() + 2), 4);
            let mut expected = vec![Default::default(); n];
            axpy(&mut expected, &value, &v.ket);
            if first_nonzero(&sub_vec(&casimir.apply(&v.ket), &expected)).is_some() {
                bad.push(format!("|{} {}>", v.j, v.m));
            }
        }
        r.push(if bad.is_empty() {
            Check::pass("Delta(C) |j m> = j(j+1) |j m>", format!("{n} vectors"))
        } else {
            Check::fail("Delta(C) |j m> = j(j+1) |j m>", bad.join(", "))
        });
        let p0 = p.at_zero();
        r.push(Check::zero(
            "P(h=0) orthogonal, so the coupled kets are independent",
            &(&(&p0.transpose() * &p0) - &PolyMatrix::identity(n)),
        ));
    }))
}

/// `sum_{j,m} C^{j}_{m1 m2 m}(h) C^{j}_{n1 n2 m}` recovers the product vector:
/// the deformed coefficients are invertible with the undeformed ones on the bra side.
pub fn verify_cgc_invertibility(j1: HalfInt, j2: HalfInt) -> Result<Report> {
    let basis = CoupledBasis::new(j1, j2)?;
    let table = AlphaTable::cached(j1, j2)?;
    Ok(Report::timed(format!("cgc invertibility j1={j1} j2={j2}"), |r| {
        let n = basis.dim();
        let mut bad = Vec::new();
        for m1 in j1.weights() {
            for m2 in j2.weights() {
                let mut acc: Vector = vec![Default::default(); n];
                for v in basis.vectors.iter().filter(|v| v.m == m1 + m2) {
                    axpy(&mut acc, &sl2_cgc(j1, j2, v.j, m1, m2), &v.ket);
                }
                if first_nonzero(&sub_vec(&acc, &ket_with(&table, m1, m2))).is_some() {
                    bad.push(format!("({m1},{m2})"));
                }
            }
        }
        r.push(if bad.is_empty() {
            Check::pass("sum_j C |j m> = |(j1 m1)(j2 m2)>", format!("{} intermediate vectors", n))
        } else {
            Check::fail("sum_j C |j m> = |(j1 m1)(j2 m2)>", bad.join(", "))
        });
    }))
}

/// `j(j+1)` as a rational.
pub fn casimir_eigenvalue(j: HalfInt) -> BigRational {
    BigRational::new(BigInt::from(j.twice() * (j.twice() + 2)), BigInt::from(4))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hi(twice: i64) -> HalfInt {
        HalfInt::from_twice(twice)
    }

    #[test]
    fn two_halves_make_one_plus_zero() {
        let b = coupled_basis(hi(1), hi(1)).unwrap();
        assert_eq!(b.summary(), "1 ⊕ 0");
        assert_eq!(b.blocks[1].indices, vec![3]);
    }

    #[test]
    fn decomposition_small_pairs() {
        for (a, c) in [(1, 1), (2, 1), (2, 2), (3, 1)] {
            let r = verify_decomposition(hi(a), hi(c)).unwrap();
            assert!(r.passed(), "{r}");
            let r = verify_cgc_invertibility(hi(a), hi(c)).unwrap();
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn singlet_has_h_correction() {
        // |0 0> = (1/2)sqrt2 (|+-> - |-+>) plus the alpha correction on |++>
        let b = coupled_basis(hi(1), hi(1)).unwrap();
        let singlet = &b.vectors[3].ket;
        assert!(!singlet[0].is_zero());
        assert_eq!(singlet[0].degree(), Some(1));
        assert_eq!(casimir_eigenvalue(hi(3)), BigRational::new(15.into(), 4.into()));
    }
}
