//! Symbolic coproduct, counit and antipode on generators.
//!
//! Every structure map sends a generator to a short signed combination of
//! words, which is all the matrix-level checks and the adjoint action need.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Generator {
    Unit,
    X,
    Y,
    H,
    ExpHX,
    ExpmHX,
}

impl Generator {
    pub const ALL: [Generator; 6] =
        [Generator::Unit, Generator::X, Generator::Y, Generator::H, Generator::ExpHX, Generator::ExpmHX];
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Generator::Unit => "1",
            Generator::X => "X",
            Generator::Y => "Y",
            Generator::H => "H",
            Generator::ExpHX => "expHX",
            Generator::ExpmHX => "expmHX",
        })
    }
}

impl FromStr for Generator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "1" | "unit" => Ok(Generator::Unit),
            "X" | "x" => Ok(Generator::X),
            "Y" | "y" => Ok(Generator::Y),
            "H" | "h" => Ok(Generator::H),
            "expHX" | "exphx" => Ok(Generator::ExpHX),
            "expmHX" | "expmhx" => Ok(Generator::ExpmHX),
            _ => Err(Error::Parse(format!("unknown generator {s:?}"))),
        }
    }
}

/// A product of generators, applied left to right as written.
pub type Word = Vec<Generator>;

/// `Delta(g)` as `sum sign * left (x) right`.
pub fn coproduct(g: Generator) -> Vec<(i64, Word, Word)> {
    use Generator::*;
    match g {
        Unit => vec![(1, vec![], vec![])],
        X => vec![(1, vec![X], vec![]), (1, vec![], vec![X])],
        Y => vec![(1, vec![Y], vec![ExpHX]), (1, vec![ExpmHX], vec![Y])],
        H => vec![(1, vec![H], vec![ExpHX]), (1, vec![ExpmHX], vec![H])],
        ExpHX => vec![(1, vec![ExpHX], vec![ExpHX])],
        ExpmHX => vec![(1, vec![ExpmHX], vec![ExpmHX])],
    }
}

/// `epsilon(g)`.
pub fn counit(g: Generator) -> i64 {
    use Generator::*;
    match g {
        Unit | ExpHX | ExpmHX => 1,
        X | Y | H => 0,
    }
}

/// `S(g)` as a signed word.
pub fn antipode(g: Generator) -> (i64, Word) {
    use Generator::*;
    match g {
        Unit => (1, vec![]),
        X => (-1, vec![X]),
        Y => (-1, vec![ExpHX, Y, ExpmHX]),
        H => (-1, vec![ExpHX, H, ExpmHX]),
        ExpHX => (1, vec![ExpmHX]),
        ExpmHX => (1, vec![ExpHX]),
    }
}

pub fn counit_word(w: &[Generator]) -> i64 {
    w.iter().map(|&g| counit(g)).product()
}

/// `S` is an anti-homomorphism: `S(ab) = S(b) S(a)`.
pub fn antipode_word(w: &[Generator]) -> (i64, Word) {
    let mut sign = 1;
    let mut out = Vec::new();
    for &g in w.iter().rev() {
        let (s, word) = antipode(g);
        sign *= s;
        out.extend(word);
    }
    (sign, out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn antipode_of_word_reverses() {
        let (sign, w) = antipode_word(&[Generator::X, Generator::ExpHX]);
        assert_eq!(sign, -1);
        assert_eq!(w, vec![Generator::ExpmHX, Generator::X]);
    }

    #[test]
    fn counit_kills_generators() {
        assert_eq!(counit_word(&[Generator::ExpHX, Generator::ExpmHX]), 1);
        assert_eq!(counit_word(&[Generator::ExpHX, Generator::Y]), 0);
    }

    #[test]
    fn parse_labels() {
        for g in Generator::ALL {
            assert_eq!(g.to_string().parse::<Generator>().unwrap(), g);
        }
        assert!("Z".parse::<Generator>().is_err());
    }
}
