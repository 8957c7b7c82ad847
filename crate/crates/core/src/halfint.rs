//! Half-integer labels for angular-momentum style weights.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::Error;

/// A value in `Z/2`, stored as twice its value. Serializes as its text form, `"-3/2"`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct HalfInt {
    twice: i64,
}

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt { twice: 0 };
    pub const HALF: HalfInt = HalfInt { twice: 1 };
    pub const ONE: HalfInt = HalfInt { twice: 2 };

    pub const fn from_twice(twice: i64) -> Self {
        HalfInt { twice }
    }

    pub const fn from_int(value: i64) -> Self {
        HalfInt { twice: 2 * value }
    }

    pub const fn twice(self) -> i64 {
        self.twice
    }

    pub const fn is_integer(self) -> bool {
        self.twice % 2 == 0
    }

    /// The integer value, if this is an integer.
    pub fn to_integer(self) -> Option<i64> {
        self.is_integer().then_some(self.twice / 2)
    }

    pub fn to_rational(self) -> BigRational {
        BigRational::new(BigInt::from(self.twice), BigInt::from(2))
    }

    pub fn abs(self) -> Self {
        HalfInt { twice: self.twice.abs() }
    }

    /// `2j + 1` for a highest weight `j`.
    pub fn multiplicity(self) -> usize {
        debug_assert!(self.twice >= 0);
        (self.twice + 1) as usize
    }

    /// Weights `j, j-1, ..., -j`, highest first.
    pub fn weights(self) -> impl DoubleEndedIterator<Item = HalfInt> + ExactSizeIterator {
        let twice = self.twice;
        (0..(twice + 1).max(0) as usize).map(move |i| HalfInt { twice: twice - 2 * i as i64 })
    }

    /// `j1 + j2, j1 + j2 - 1, ..., |j1 - j2|`.
    pub fn coupled_range(j1: HalfInt, j2: HalfInt) -> impl Iterator<Item = HalfInt> {
        let hi = j1.twice + j2.twice;
        let lo = (j1.twice - j2.twice).abs();
        (lo..=hi).rev().step_by(2).map(|twice| HalfInt { twice })
    }

    pub fn triangle(j1: HalfInt, j2: HalfInt, j: HalfInt) -> bool {
        let (a, b, c) = (j1.twice, j2.twice, j.twice);
        a >= 0 && b >= 0 && c >= 0 && (a - b).abs() <= c && c <= a + b && (a + b + c) % 2 == 0
    }

    /// True if `m` is one of the weights of the highest weight `j`.
    pub fn is_weight_of(self, j: HalfInt) -> bool {
        j.twice >= 0 && self.twice.abs() <= j.twice && (j.twice - self.twice) % 2 == 0
    }

    /// Row/column position of weight `self` in the basis `m = j..-j`.
    pub fn index_in(self, j: HalfInt) -> Option<usize> {
        self.is_weight_of(j).then(|| ((j.twice - self.twice) / 2) as usize)
    }

    /// Weight at position `index` of the basis `m = j..-j`.
    pub fn weight_at(j: HalfInt, index: usize) -> HalfInt {
        HalfInt { twice: j.twice - 2 * index as i64 }
    }
}

impl Ord for HalfInt {
    fn cmp(&self, other: &Self) -> Ordering {
        self.twice.cmp(&other.twice)
    }
}

impl PartialOrd for HalfInt {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt { twice: self.twice + rhs.twice }
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: HalfInt) -> HalfInt {
        HalfInt { twice: self.twice - rhs.twice }
    }
}

impl Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt { twice: -self.twice }
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}

impl From<HalfInt> for String {
    fn from(v: HalfInt) -> String {
        v.to_string()
    }
}

impl TryFrom<String> for HalfInt {
    type Error = Error;

    fn try_from(s: String) -> Result<Self, Error> {
        s.parse()
    }
}

impl FromStr for HalfInt {
    type Err = Error;

    /// Accepts `"3/2"`, `"1.5"`, `"-1"` and `"-0.5"`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        let bad = || Error::Parse(format!("not a half-integer: {s:?}"));
        if let Some((num, den)) = s.split_once('/') {
            let num: i64 = num.trim().parse().map_err(|_| bad())?;
            let den: i64 = den.trim().parse().map_err(|_| bad())?;
            return match den {
                1 => Ok(HalfInt::from_int(num)),
                2 => Ok(HalfInt::from_twice(num)),
                _ => Err(bad()),
            };
        }
        if let Some((int, frac)) = s.split_once('.') {
            let negative = int.starts_with('-');
            let int: i64 = if int == "-" || int.is_empty() { 0 } else { int.parse().map_err(|_| bad())? };
            let frac = frac.trim_end_matches('0');
            let half = match frac {
                "" => 0,
                "5" => 1,
                _ => return Err(bad()),
            };
            let twice = 2 * int.abs() + half;
            return Ok(HalfInt::from_twice(if negative { -twice } else { twice }));
        }
        s.parse::<i64>().map(HalfInt::from_int).map_err(|_| bad())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hi(s: &str) -> HalfInt {
        s.parse().unwrap()
    }

    #[test]
    fn parses_all_forms() {
        assert_eq!(hi("3/2"), HalfInt::from_twice(3));
        assert_eq!(hi("1.5"), HalfInt::from_twice(3));
        assert_eq!(hi("1"), HalfInt::from_twice(2));
        assert_eq!(hi("-1/2"), HalfInt::from_twice(-1));
        assert_eq!(hi("-0.5"), HalfInt::from_twice(-1));
        assert_eq!(hi("2.0"), HalfInt::from_twice(4));
        assert_eq!(hi("4/2"), HalfInt::from_int(2));
        assert!("1.25".parse::<HalfInt>().is_err());
        assert!("1/3".parse::<HalfInt>().is_err());
        assert!("x".parse::<HalfInt>().is_err());
    }

    #[test]
    fn weight_range_has_2j_plus_1_values_of_matching_parity() {
        for twice in 0..9 {
            let j = HalfInt::from_twice(twice);
            let ws: Vec<_> = j.weights().collect();
            assert_eq!(ws.len(), j.multiplicity());
            assert!(ws.iter().all(|m| (m.twice() - twice) % 2 == 0));
            for (i, m) in ws.iter().enumerate() {
                assert_eq!(m.index_in(j), Some(i));
                assert_eq!(HalfInt::weight_at(j, i), *m);
            }
        }
    }

    #[test]
    fn coupled_range_matches_triangle() {
        let r: Vec<_> = HalfInt::coupled_range(HalfInt::ONE, HalfInt::HALF).collect();
        assert_eq!(r, vec![HalfInt::from_twice(3), HalfInt::from_twice(1)]);
        assert!(HalfInt::triangle(HalfInt::HALF, HalfInt::HALF, HalfInt::ZERO));
        assert!(!HalfInt::triangle(HalfInt::HALF, HalfInt::HALF, HalfInt::HALF));
    }

    #[test]
    fn display_round_trips() {
        for twice in -5..6 {
            let v = HalfInt::from_twice(twice);
            assert_eq!(hi(&v.to_string()), v);
        }
    }
}
