//! Canonical text form of exact scalars.
//!
//! A scalar is printed as a sum of terms `rational[*sqrt(n)][*h^k]`, where the
//! rational is an integer like `3` or a parenthesised fraction like `(3/4)`, the
//! first power of `h` is written `h`, and terms are joined by ` + ` / ` - `.
//! Zero prints as `0`. Example: `-(1/2)*h`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::scalar::{HPoly, RadScalar};

fn magnitude(q: &BigRational) -> String {
    let q = q.abs();
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("({}/{})", q.numer(), q.denom())
    }
}

/// Formats `(coefficient, radicand, power)` terms in the given order.
pub(crate) fn format_terms(terms: &[(&BigRational, u64, usize)]) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (q, n, k)) in terms.iter().enumerate() {
        let negative = q.is_negative();
        match (i, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(&magnitude(q));
        if *n != 1 {
            out.push_str(&format!("*sqrt({n})"));
        }
        match k {
            0 => {}
            1 => out.push_str("*h"),
            _ => out.push_str(&format!("*h^{k}")),
        }
    }
    out
}

fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::Parse(format!("bad rational {s:?}"));
    let inner = s.strip_prefix('(').and_then(|t| t.strip_suffix(')')).unwrap_or(s);
    match inner.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.parse().map_err(|_| bad())?;
            let d: BigInt = d.parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(inner.parse().map_err(|_| bad())?)),
    }
}

fn parse_term(term: &str, negative: bool) -> Result<HPoly> {
    let bad = || Error::Parse(format!("bad term {term:?}"));
    let mut q = BigRational::one();
    let mut radicand = 1u64;
    let mut power = 0usize;
    for (i, factor) in term.split('*').enumerate() {
        if let Some(r) = factor.strip_prefix("sqrt(").and_then(|f| f.strip_suffix(')')) {
            radicand = r.parse().map_err(|_| bad())?;
        } else if factor == "h" {
            power = 1;
        } else if let Some(k) = factor.strip_prefix("h^") {
            power = k.parse().map_err(|_| bad())?;
        } else if i == 0 {
            q = parse_rational(factor)?;
        } else {
            return Err(bad());
        }
    }
    if negative {
        q = -q;
    }
    let c = RadScalar::rad_normalize(q, &radicand.into());
    Ok(HPoly::monomial(c, power))
}

/// Parses the canonical text form back into a polynomial.
pub fn parse_hpoly(s: &str) -> Result<HPoly> {
    let s = s.trim();
    if s == "0" {
        return Ok(HPoly::zero());
    }
    let (mut negative, mut rest) = match s.strip_prefix('-') {
        Some(r) => (true, r),
        None => (false, s),
    };
    let mut acc = HPoly::zero();
    loop {
        let next = [" + ", " - "].iter().filter_map(|sep| rest.find(sep).map(|pos| (pos, *sep))).min_by_key(|(pos, _)| *pos);
        match next {
            Some((pos, sep)) => {
                acc += &parse_term(&rest[..pos], negative)?;
                negative = sep == " - ";
                rest = &rest[pos + 3..];
            }
            None => {
                acc += &parse_term(rest, negative)?;
                return Ok(acc);
            }
        }
    }
}
