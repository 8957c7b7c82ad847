//! Dense matrices over [`HPoly`].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::scalar::{HPoly, RadScalar};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<HPoly>,
}

/// First nonzero entry of a residual, for failure reports.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Residual {
    pub row: usize,
    pub col: usize,
    pub value: HPoly,
    pub max_degree: usize,
}

impl fmt::Display for Residual {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "entry ({}, {}) = {} (max residual degree {})", self.row, self.col, self.value, self.max_degree)
    }
}

impl PolyMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        PolyMatrix { rows, cols, entries: vec![HPoly::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { HPoly::one() } else { HPoly::zero() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> HPoly) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        PolyMatrix { rows, cols, entries }
    }

    pub fn from_rows(rows: Vec<Vec<HPoly>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|row| row.len() != c) {
            return Err(Error::DimensionMismatch { op: "from_rows", left: (r, c), right: (1, bad.len()) });
        }
        Ok(PolyMatrix { rows: r, cols: c, entries: rows.into_iter().flatten().collect() })
    }

    pub fn diagonal(values: impl IntoIterator<Item = HPoly>) -> Self {
        let values: Vec<_> = values.into_iter().collect();
        let n = values.len();
        let mut m = Self::zeros(n, n);
        for (i, v) in values.into_iter().enumerate() {
            m.set(i, i, v);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &HPoly {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: HPoly) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> &[HPoly] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(HPoly::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.rows)
    }

    /// The first nonzero entry, or `None` if the matrix vanishes exactly.
    pub fn residual(&self) -> Option<Residual> {
        let max_degree = self.entries.iter().filter_map(HPoly::degree).max()?;
        let pos = self.entries.iter().position(|e| !e.is_zero())?;
        Some(Residual { row: pos / self.cols, col: pos % self.cols, value: self.entries[pos].clone(), max_degree })
    }

    /// Largest `h` degree among the entries.
    pub fn degree(&self) -> Option<usize> {
        self.entries.iter().filter_map(HPoly::degree).max()
    }

    fn check_same_shape(&self, other: &Self, op: &'static str) -> Result<()> {
        if self.shape() != other.shape() {
            return Err(Error::DimensionMismatch { op, left: self.shape(), right: other.shape() });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other, "add")?;
        Ok(self.zip(other, |a, b| a + b))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other, "sub")?;
        Ok(self.zip(other, |a, b| a - b))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch { op: "mul", left: self.shape(), right: other.shape() });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.entries[i * other.cols + j] += &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    /// `[a, b] = ab - ba`.
    pub fn try_commutator(&self, other: &Self) -> Result<Self> {
        self.try_mul(other)?.try_sub(&other.try_mul(self)?)
    }

    pub fn commutator(&self, other: &Self) -> Self {
        self.try_commutator(other).unwrap_or_else(|e| panic!("{e}"))
    }

    /// Kronecker product; the left factor is the outer (slow) index.
    pub fn kron(&self, other: &Self) -> Self {
        let (r, c) = (self.rows * other.rows, self.cols * other.cols);
        let mut out = Self::zeros(r, c);
        for i1 in 0..self.rows {
            for j1 in 0..self.cols {
                let a = self.get(i1, j1);
                if a.is_zero() {
                    continue;
                }
                for i2 in 0..other.rows {
                    for j2 in 0..other.cols {
                        let b = other.get(i2, j2);
                        if !b.is_zero() {
                            out.set(i1 * other.rows + i2, j1 * other.cols + j2, a * b);
                        }
                    }
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn scale(&self, c: &HPoly) -> Self {
        self.map(|e| e * c)
    }

    pub fn scale_scalar(&self, c: &RadScalar) -> Self {
        self.map(|e| e.scale(c))
    }

    pub fn scale_rational(&self, q: &BigRational) -> Self {
        self.map(|e| e.scale_rational(q))
    }

    pub fn scale_int(&self, v: i64) -> Self {
        self.map(|e| e.scale_int(v))
    }

    pub fn pow(&self, n: u32) -> Self {
        assert!(self.is_square(), "power of a non-square matrix");
        let mut acc = Self::identity(self.rows);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Entrywise `h = value`.
    pub fn eval_h(&self, value: &BigRational) -> Self {
        self.map(|e| HPoly::constant(e.eval(value)))
    }

    /// Entrywise classical limit `h = 0`.
    pub fn at_zero(&self) -> Self {
        self.map(|e| HPoly::constant(e.at_zero()))
    }

    /// Entrywise `p / h^k`.
    pub fn divide_by_h(&self, k: usize) -> Result<Self> {
        let entries = self.entries.iter().map(|e| e.divide_by_h(k)).collect::<Result<Vec<_>>>()?;
        Ok(PolyMatrix { rows: self.rows, cols: self.cols, entries })
    }

    /// Entrywise `p(factor * h)`.
    pub fn rescale_h(&self, factor: &BigRational) -> Self {
        self.map(|e| e.rescale_h(factor))
    }

    /// Column `j` as a vector.
    pub fn column(&self, j: usize) -> Vec<HPoly> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[HPoly]) -> Vec<HPoly> {
        assert_eq!(self.cols, v.len(), "matrix-vector dimension mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = HPoly::zero();
                for (k, vk) in v.iter().enumerate() {
                    let a = self.get(i, k);
                    if !a.is_zero() && !vk.is_zero() {
                        acc += &(a * vk);
                    }
                }
                acc
            })
            .collect()
    }

    /// Sub-matrix on the given row and column index lists.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self::from_fn(rows.len(), cols.len(), |i, j| self.get(rows[i], cols[j]).clone())
    }

    pub fn map(&self, f: impl Fn(&HPoly) -> HPoly) -> Self {
        PolyMatrix { rows: self.rows, cols: self.cols, entries: self.entries.iter().map(f).collect() }
    }

    fn zip(&self, other: &Self, f: impl Fn(&HPoly, &HPoly) -> HPoly) -> Self {
        PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| f(a, b)).collect(),
        }
    }
}

impl Add<&PolyMatrix> for &PolyMatrix {
    type Output = PolyMatrix;
    fn add(self, rhs: &PolyMatrix) -> PolyMatrix {
        self.try_add(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Sub<&PolyMatrix> for &PolyMatrix {
    type Output = PolyMatrix;
    fn sub(self, rhs: &PolyMatrix) -> PolyMatrix {
        self.try_sub(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Mul<&PolyMatrix> for &PolyMatrix {
    type Output = PolyMatrix;
    fn mul(self, rhs: &PolyMatrix) -> PolyMatrix {
        self.try_mul(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Neg for &PolyMatrix {
    type Output = PolyMatrix;
    fn neg(self) -> PolyMatrix {
        self.map(|e| -e)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr<PolyMatrix> for PolyMatrix {
            type Output = PolyMatrix;
            fn $method(self, rhs: PolyMatrix) -> PolyMatrix {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&PolyMatrix> for PolyMatrix {
            type Output = PolyMatrix;
            fn $method(self, rhs: &PolyMatrix) -> PolyMatrix {
                (&self).$method(rhs)
            }
        }
        impl $tr<PolyMatrix> for &PolyMatrix {
            type Output = PolyMatrix;
            fn $method(self, rhs: PolyMatrix) -> PolyMatrix {
                self.$method(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for PolyMatrix {
    type Output = PolyMatrix;
    fn neg(self) -> PolyMatrix {
        -&self
    }
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.entries.iter().map(ToString::to_string).collect();
        let width = cells.iter().map(|c| c.chars().count()).max().unwrap_or(1);
        for i in 0..self.rows {
            f.write_str("[ ")?;
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str("  ")?;
                }
                write!(f, "{:>width$}", cells[i * self.cols + j])?;
            }
            f.write_str(" ]\n")?;
        }
        Ok(())
    }
}
