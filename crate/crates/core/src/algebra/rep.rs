//! Finite-dimensional representations given by generator matrices.

use std::borrow::Cow;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::algebra::hopf::{self, Generator};
use crate::error::Result;
use crate::halfint::HalfInt;
use crate::scalar::{series, HPoly, PolyMatrix};

/// An irreducible summand: highest weight and the basis indices of
/// `m = j, j-1, ..., -j` inside the ambient space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub j: HalfInt,
    pub indices: Vec<usize>,
}

impl Block {
    pub fn new(j: HalfInt, indices: Vec<usize>) -> Self {
        assert_eq!(indices.len(), j.multiplicity(), "block size must be 2j+1");
        Block { j, indices }
    }

    /// The whole space `0..2j+1` as a single block.
    pub fn full(j: HalfInt) -> Self {
        Block { j, indices: (0..j.multiplicity()).collect() }
    }

    pub fn index_of(&self, m: HalfInt) -> Option<usize> {
        m.index_in(self.j).map(|i| self.indices[i])
    }
}

/// Matrices of `X`, `Y`, `H` and of the exponentials `e^{+-hX}`, `e^{+-hX/2}`
/// on a common space, plus its known decomposition into irreducible blocks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    pub name: String,
    pub x: PolyMatrix,
    pub y: PolyMatrix,
    pub h: PolyMatrix,
    pub exp_hx: PolyMatrix,
    pub exp_mhx: PolyMatrix,
    pub exp_half_hx: PolyMatrix,
    pub exp_half_mhx: PolyMatrix,
    pub blocks: Vec<Block>,
}

fn half() -> BigRational {
    BigRational::new(BigInt::from(1), BigInt::from(2))
}

impl Representation {
    /// Builds the exponentials from a nilpotent `X` by terminating series.
    pub fn from_xyh(name: impl Into<String>, x: PolyMatrix, y: PolyMatrix, h: PolyMatrix, blocks: Vec<Block>) -> Self {
        let hx = x.scale(&HPoly::h());
        let half_hx = hx.scale_rational(&half());
        Representation {
            name: name.into(),
            exp_hx: series::exp(&hx),
            exp_mhx: series::exp(&-&hx),
            exp_half_hx: series::exp(&half_hx),
            exp_half_mhx: series::exp(&-&half_hx),
            x,
            y,
            h,
            blocks,
        }
    }

    pub fn dim(&self) -> usize {
        self.x.rows()
    }

    pub fn identity(&self) -> PolyMatrix {
        PolyMatrix::identity(self.dim())
    }

    pub fn generator(&self, g: Generator) -> Cow<'_, PolyMatrix> {
        match g {
            Generator::Unit => Cow::Owned(self.identity()),
            Generator::X => Cow::Borrowed(&self.x),
            Generator::Y => Cow::Borrowed(&self.y),
            Generator::H => Cow::Borrowed(&self.h),
            Generator::ExpHX => Cow::Borrowed(&self.exp_hx),
            Generator::ExpmHX => Cow::Borrowed(&self.exp_mhx),
        }
    }

    /// Matrix of a product of generators.
    pub fn word(&self, w: &[Generator]) -> PolyMatrix {
        match w {
            [] => self.identity(),
            [g] => self.generator(*g).into_owned(),
            [first, rest @ ..] => {
                rest.iter().fold(self.generator(*first).into_owned(), |acc, g| &acc * self.generator(*g).as_ref())
            }
        }
    }

    /// `sinh(hX)/h`.
    pub fn sinh_over_h(&self) -> Result<PolyMatrix> {
        (&self.exp_hx - &self.exp_mhx).scale_rational(&half()).divide_by_h(1)
    }

    /// `cosh(hX)`.
    pub fn cosh(&self) -> PolyMatrix {
        (&self.exp_hx + &self.exp_mhx).scale_rational(&half())
    }

    /// `cosh(hX/2)`.
    pub fn cosh_half(&self) -> PolyMatrix {
        (&self.exp_half_hx + &self.exp_half_mhx).scale_rational(&half())
    }

    /// `Z+ = (2/h) tanh(hX/2)`, via `tanh(hX/2) = (E - 1)(E + 1)^{-1}` with `E = e^{hX}`.
    pub fn z_plus(&self) -> Result<PolyMatrix> {
        let m = &self.exp_hx - &self.identity();
        // (E + 1)^{-1} = (1/2) (1 + M/2)^{-1}
        let inv = series::neumann_inverse(&m.scale_rational(&-half()));
        (&m * &inv).divide_by_h(1)
    }

    /// `Z- = cosh(hX/2) Y cosh(hX/2)`.
    pub fn z_minus(&self) -> PolyMatrix {
        let c = self.cosh_half();
        &(&c * &self.y) * &c
    }

    /// The Casimir element in the `X, Y, H` form
    /// `(Y sinh hX + sinh hX Y)/2h + H^2/4 + sinh^2(hX)/4`.
    pub fn casimir(&self) -> Result<PolyMatrix> {
        let s = self.sinh_over_h()?;
        let quarter = BigRational::new(BigInt::from(1), BigInt::from(4));
        let sym = (&(&self.y * &s) + &(&s * &self.y)).scale_rational(&half());
        let h2 = (&self.h * &self.h).scale_rational(&quarter);
        let s2 = (&s * &s).scale(&HPoly::h()).scale(&HPoly::h()).scale_rational(&quarter);
        Ok(&(&sym + &h2) + &s2)
    }

    /// The representation `Delta` induces on `self (x) other`.
    pub fn tensor(&self, other: &Representation) -> Representation {
        let kron_sum = |g: Generator| {
            hopf::coproduct(g)
                .into_iter()
                .fold(PolyMatrix::zeros(self.dim() * other.dim(), self.dim() * other.dim()), |acc, (sign, l, r)| {
                    &acc + &self.word(&l).kron(&other.word(&r)).scale_int(sign)
                })
        };
        Representation {
            name: format!("{} (x) {}", self.name, other.name),
            x: kron_sum(Generator::X),
            y: kron_sum(Generator::Y),
            h: kron_sum(Generator::H),
            exp_hx: self.exp_hx.kron(&other.exp_hx),
            exp_mhx: self.exp_mhx.kron(&other.exp_mhx),
            exp_half_hx: self.exp_half_hx.kron(&other.exp_half_hx),
            exp_half_mhx: self.exp_half_mhx.kron(&other.exp_half_mhx),
            blocks: Vec::new(),
        }
    }

    /// Restriction to the span of the given basis indices; the generators
    /// must leave that span invariant.
    pub fn restrict(&self, block: &Block) -> Representation {
        let idx = &block.indices;
        let sel = |m: &PolyMatrix| m.select(idx, idx);
        Representation {
            name: format!("{}|{}", self.name, block.j),
            x: sel(&self.x),
            y: sel(&self.y),
            h: sel(&self.h),
            exp_hx: sel(&self.exp_hx),
            exp_mhx: sel(&self.exp_mhx),
            exp_half_hx: sel(&self.exp_half_hx),
            exp_half_mhx: sel(&self.exp_half_mhx),
            blocks: vec![Block::full(block.j)],
        }
    }

    pub fn block(&self, j: HalfInt) -> Option<&Block> {
        self.blocks.iter().find(|b| b.j == j)
    }
}
