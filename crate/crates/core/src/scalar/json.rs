//! JSON encoding of exact scalars and matrices.
//!
//! A scalar is an array of terms `{num, den, radicand, hpow}` meaning
//! `num/den * sqrt(radicand) * h^hpow`; integers are decimal strings so that
//! arbitrary precision survives. A matrix is `{"shape": [rows, cols], "data": [...]}`
//! with the scalars in row-major order.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{HPoly, PolyMatrix, RadScalar};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub num: String,
    pub den: String,
    pub radicand: String,
    pub hpow: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub shape: [usize; 2],
    pub data: Vec<Vec<TermJson>>,
}

pub fn encode_hpoly(p: &HPoly) -> Vec<TermJson> {
    p.terms()
        .map(|(q, n, k)| TermJson {
            num: q.numer().to_string(),
            den: q.denom().to_string(),
            radicand: n.to_string(),
            hpow: k as u32,
        })
        .collect()
}

pub fn encode_scalar(s: &RadScalar) -> Vec<TermJson> {
    encode_hpoly(&HPoly::constant(s.clone()))
}

pub fn decode_hpoly(terms: &[TermJson]) -> Result<HPoly> {
    let bad = |what: &str, t: &TermJson| Error::Parse(format!("bad {what} in term {t:?}"));
    let mut acc = HPoly::zero();
    for t in terms {
        let num: BigInt = t.num.parse().map_err(|_| bad("num", t))?;
        let den: BigInt = t.den.parse().map_err(|_| bad("den", t))?;
        if den == BigInt::from(0) {
            return Err(bad("den", t));
        }
        let radicand: BigUint = t.radicand.parse().map_err(|_| bad("radicand", t))?;
        let c = RadScalar::rad_normalize(BigRational::new(num, den), &radicand);
        acc += &HPoly::monomial(c, t.hpow as usize);
    }
    Ok(acc)
}

pub fn encode_matrix(m: &PolyMatrix) -> MatrixJson {
    MatrixJson { shape: [m.rows(), m.cols()], data: m.entries().iter().map(encode_hpoly).collect() }
}

pub fn decode_matrix(m: &MatrixJson) -> Result<PolyMatrix> {
    let [rows, cols] = m.shape;
    if m.data.len() != rows * cols {
        return Err(Error::Parse(format!("matrix shape {rows}x{cols} but {} entries", m.data.len())));
    }
    let mut it = m.data.iter();
    let mut err = None;
    let out = PolyMatrix::from_fn(rows, cols, |_, _| match decode_hpoly(it.next().expect("length checked")) {
        Ok(p) => p,
        Err(e) => {
            err.get_or_insert(e);
            HPoly::zero()
        }
    });
    match err {
        Some(e) => Err(e),
        None => Ok(out),
    }
}

pub fn matrix_to_string(m: &PolyMatrix) -> String {
    serde_json::to_string(&encode_matrix(m)).expect("matrix json is serializable")
}

pub fn matrix_from_str(s: &str) -> Result<PolyMatrix> {
    let parsed: MatrixJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
    decode_matrix(&parsed)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_has_two_unit_entries() {
        let json = serde_json::to_value(encode_matrix(&PolyMatrix::identity(2))).unwrap();
        assert_eq!(json["shape"], serde_json::json!([2, 2]));
        let unit = serde_json::json!([{ "num": "1", "den": "1", "radicand": "1", "hpow": 0 }]);
        assert_eq!(json["data"][0], unit);
        assert_eq!(json["data"][3], unit);
        assert_eq!(json["data"][1], serde_json::json!([]));
    }

    #[test]
    fn rejects_wrong_length() {
        let m = MatrixJson { shape: [2, 2], data: vec![vec![]] };
        assert!(decode_matrix(&m).is_err());
    }
}
