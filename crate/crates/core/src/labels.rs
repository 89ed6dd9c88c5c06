//! Orbit names.
//!
//! Complex orbits are `S0`, `T<ab>`, `U<ab/cd>`, `V<a>`, `W`, `X<ab/cd>`;
//! real orbits add the hatted families `Vhat<a>`, `What`, `Xhat<ab>` and
//! carry a `^r` suffix. Pair subscripts are unordered and a split `ab/cd`
//! is an unordered pair of pairs, so `T31 = T13` and `U43/12 = U12/34`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::gates::QubitPair;

/// A 2|2 split of the four qubits, named by the half containing qubit 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Split(QubitPair);

impl Split {
    pub fn new(half: QubitPair) -> Self {
        if half.contains(1) {
            Split(half)
        } else {
            Split(half.complement())
        }
    }

    /// `12|34`, `13|24`, `14|23`
    pub fn all() -> [Split; 3] {
        [2, 3, 4].map(|q| Split(QubitPair::new(1, q)))
    }

    /// Position in [`Split::all`].
    pub fn ordinal(&self) -> usize {
        self.0.hi as usize - 2
    }

    pub fn first(&self) -> QubitPair {
        self.0
    }

    pub fn second(&self) -> QubitPair {
        self.0.complement()
    }

    /// True if `pair` is one of the two halves.
    pub fn has_half(&self, pair: QubitPair) -> bool {
        pair == self.first() || pair == self.second()
    }
}

impl fmt::Display for Split {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.first(), self.second())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    S0,
    T(QubitPair),
    U(Split),
    V(u8),
    W,
    X(Split),
    VHat(u8),
    WHat,
    XHat(QubitPair),
}

impl Family {
    pub fn is_hatted(&self) -> bool {
        matches!(self, Family::VHat(_) | Family::WHat | Family::XHat(_))
    }

    /// The complex family a real orbit refines: hats removed, `Xhat<ab>`
    /// mapped to the split containing `ab`.
    pub fn unhatted(&self) -> Family {
        match *self {
            Family::VHat(a) => Family::V(a),
            Family::WHat => Family::W,
            Family::XHat(p) => Family::X(Split::new(p)),
            f => f,
        }
    }

    /// Family kind without indices, e.g. `"T"` or `"Xhat"`.
    pub fn kind(&self) -> &'static str {
        match self {
            Family::S0 => "S0",
            Family::T(_) => "T",
            Family::U(_) => "U",
            Family::V(_) => "V",
            Family::W => "W",
            Family::X(_) => "X",
            Family::VHat(_) => "Vhat",
            Family::WHat => "What",
            Family::XHat(_) => "Xhat",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::S0 => write!(f, "S0"),
            Family::T(p) => write!(f, "T{p}"),
            Family::U(s) => write!(f, "U{s}"),
            Family::V(a) => write!(f, "V{a}"),
            Family::W => write!(f, "W"),
            Family::X(s) => write!(f, "X{s}"),
            Family::VHat(a) => write!(f, "Vhat{a}"),
            Family::WHat => write!(f, "What"),
            Family::XHat(p) => write!(f, "Xhat{p}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrbitLabel {
    pub family: Family,
    pub real: bool,
}

impl OrbitLabel {
    pub fn complex(family: Family) -> Self {
        Self { family, real: false }
    }

    pub fn real(family: Family) -> Self {
        Self { family, real: true }
    }

    /// All 18 complex labels in listing order.
    pub fn all_complex() -> Vec<OrbitLabel> {
        let mut out = vec![Family::S0];
        out.extend(QubitPair::all().map(Family::T));
        out.extend(Split::all().map(Family::U));
        out.extend((1..=4).map(Family::V));
        out.push(Family::W);
        out.extend(Split::all().map(Family::X));
        out.into_iter().map(OrbitLabel::complex).collect()
    }

    /// All 29 real labels in listing order.
    pub fn all_real() -> Vec<OrbitLabel> {
        let mut out = vec![Family::S0];
        out.extend(QubitPair::all().map(Family::T));
        out.extend(Split::all().map(Family::U));
        out.extend((1..=4).map(Family::V));
        out.extend((1..=4).map(Family::VHat));
        out.push(Family::W);
        out.push(Family::WHat);
        out.extend(Split::all().map(Family::X));
        out.extend(QubitPair::all().map(Family::XHat));
        out.into_iter().map(OrbitLabel::real).collect()
    }
}

impl fmt::Display for OrbitLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.real {
            write!(f, "{}^r", self.family)
        } else {
            write!(f, "{}", self.family)
        }
    }
}

impl FromStr for OrbitLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = |reason: &str| Error::Parse {
            what: "orbit label",
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let trimmed = s.trim();
        let (body, real) = match trimmed.strip_suffix("^r") {
            Some(b) => (b, true),
            None => (trimmed, false),
        };
        let digit = |c: char| -> Result<u8> {
            match c.to_digit(10) {
                Some(d @ 1..=4) => Ok(d as u8),
                _ => Err(err("qubit index must be 1..4")),
            }
        };
        let pair = |t: &str| -> Result<QubitPair> {
            let cs: Vec<char> = t.chars().collect();
            if cs.len() != 2 {
                return Err(err("expected two qubit indices"));
            }
            let (a, b) = (digit(cs[0])?, digit(cs[1])?);
            if a == b {
                return Err(err("pair indices must differ"));
            }
            Ok(QubitPair::new(a, b))
        };
        let split = |t: &str| -> Result<Split> {
            let (a, b) = t.split_once('/').ok_or_else(|| err("expected ab/cd"))?;
            let (a, b) = (pair(a)?, pair(b)?);
            if b != a.complement() {
                return Err(err("split halves must be complementary"));
            }
            Ok(Split::new(a))
        };
        let single = |t: &str| -> Result<u8> {
            let mut cs = t.chars();
            match (cs.next(), cs.next()) {
                (Some(c), None) => digit(c),
                _ => Err(err("expected one qubit index")),
            }
        };
        let family = if body == "S0" {
            Family::S0
        } else if body == "What" {
            Family::WHat
        } else if body == "W" {
            Family::W
        } else if let Some(r) = body.strip_prefix("Vhat") {
            Family::VHat(single(r)?)
        } else if let Some(r) = body.strip_prefix("Xhat") {
            Family::XHat(pair(r)?)
        } else if let Some(r) = body.strip_prefix('T') {
            Family::T(pair(r)?)
        } else if let Some(r) = body.strip_prefix('U') {
            Family::U(split(r)?)
        } else if let Some(r) = body.strip_prefix('V') {
            Family::V(single(r)?)
        } else if let Some(r) = body.strip_prefix('X') {
            Family::X(split(r)?)
        } else {
            return Err(err("unknown family"));
        };
        if family.is_hatted() && !real {
            return Err(err("hatted families only exist for real orbits"));
        }
        Ok(OrbitLabel { family, real })
    }
}
