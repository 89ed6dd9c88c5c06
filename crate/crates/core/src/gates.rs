//! Gate tokens, circuits, and the generator sets of the two Clifford groups.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact_state::{qubit_mask, ExactState, GaussianInt, RawState, DIM, NUM_QUBITS};

/// A single gate. Qubits are numbered 1 to 4.
///
/// The declaration order of the variants, then of the qubit indices, is the
/// canonical gate order used for tie-breaking.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Gate {
    H(u8),
    /// `diag(1, i)`
    P(u8),
    /// `diag(1, -1)`
    Z(u8),
    /// Bit flip.
    X(u8),
    /// Control, target.
    Cnot(u8, u8),
    /// Symmetric; stored with the smaller index first.
    Cz(u8, u8),
}

fn check_qubit(q: u8) -> Result<u8> {
    if (1..=NUM_QUBITS as u8).contains(&q) {
        Ok(q)
    } else {
        Err(Error::InvalidGate(format!("qubit {q} out of range 1..=4")))
    }
}

impl Gate {
    pub fn h(q: u8) -> Result<Self> {
        check_qubit(q).map(Gate::H)
    }

    pub fn p(q: u8) -> Result<Self> {
        check_qubit(q).map(Gate::P)
    }

    pub fn z(q: u8) -> Result<Self> {
        check_qubit(q).map(Gate::Z)
    }

    pub fn x(q: u8) -> Result<Self> {
        check_qubit(q).map(Gate::X)
    }

    pub fn cnot(control: u8, target: u8) -> Result<Self> {
        check_qubit(control)?;
        check_qubit(target)?;
        if control == target {
            return Err(Error::InvalidGate(format!("CNOT({control},{target}) has control = target")));
        }
        Ok(Gate::Cnot(control, target))
    }

    pub fn cz(a: u8, b: u8) -> Result<Self> {
        check_qubit(a)?;
        check_qubit(b)?;
        if a == b {
            return Err(Error::InvalidGate(format!("CZ({a},{b}) acts on one qubit")));
        }
        Ok(Gate::Cz(a.min(b), a.max(b)))
    }

    /// CNOT and CZ count as entangling gates.
    pub fn is_entangling(&self) -> bool {
        matches!(self, Gate::Cnot(..) | Gate::Cz(..))
    }

    pub fn is_real(&self) -> bool {
        !matches!(self, Gate::P(_))
    }

    /// Unordered qubit pair of an entangling gate, smaller index first.
    pub fn pair(&self) -> Option<QubitPair> {
        match *self {
            Gate::Cnot(a, b) | Gate::Cz(a, b) => Some(QubitPair::new(a, b)),
            _ => None,
        }
    }

    /// Gates whose product, applied left to right, undoes this gate.
    pub fn inverse(&self) -> Vec<Gate> {
        match *self {
            Gate::P(q) => vec![Gate::P(q); 3],
            g => vec![g],
        }
    }

    pub fn apply(&self, s: &ExactState) -> ExactState {
        match *self {
            Gate::H(q) => apply_h(s, qubit_mask(q)),
            Gate::P(q) => map_components(s, |b, [re, im]| {
                if b & qubit_mask(q) != 0 {
                    [-im, re]
                } else {
                    [re, im]
                }
            }),
            Gate::Z(q) => map_components(s, |b, [re, im]| {
                if b & qubit_mask(q) != 0 {
                    [-re, -im]
                } else {
                    [re, im]
                }
            }),
            Gate::X(q) => permute(s, |b| b ^ qubit_mask(q)),
            Gate::Cnot(c, t) => permute(s, |b| {
                if b & qubit_mask(c) != 0 {
                    b ^ qubit_mask(t)
                } else {
                    b
                }
            }),
            Gate::Cz(a, b) => {
                let both = qubit_mask(a) | qubit_mask(b);
                map_components(s, |idx, [re, im]| {
                    if idx & both == both {
                        [-re, -im]
                    } else {
                        [re, im]
                    }
                })
            }
        }
    }
}

fn map_components(s: &ExactState, f: impl Fn(usize, [i8; 2]) -> [i8; 2]) -> ExactState {
    let src = s.raw_components();
    let amps = std::array::from_fn(|b| f(b, src[b]));
    ExactState::from_components_unchecked(s.k() as u8, amps)
}

/// `perm` must be an involution on basis indices.
fn permute(s: &ExactState, perm: impl Fn(usize) -> usize) -> ExactState {
    let src = s.raw_components();
    let amps = std::array::from_fn(|b| src[perm(b)]);
    ExactState::from_components_unchecked(s.k() as u8, amps)
}

fn apply_h(s: &ExactState, mask: usize) -> ExactState {
    let mut amps = [GaussianInt::ZERO; DIM];
    for b in (0..DIM).filter(|b| b & mask == 0) {
        let (z0, z1) = (s.amp(b), s.amp(b | mask));
        amps[b] = z0 + z1;
        amps[b | mask] = z0 - z1;
    }
    crate::exact_state::canonicalize(&RawState { amps, k: s.k() + 1 })
        .expect("Hadamard image of a valid state violates the amplitude bounds")
}

impl fmt::Display for Gate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gate::H(q) => write!(f, "H{q}"),
            Gate::P(q) => write!(f, "P{q}"),
            Gate::Z(q) => write!(f, "Z{q}"),
            Gate::X(q) => write!(f, "X{q}"),
            Gate::Cnot(c, t) => write!(f, "CNOT({c},{t})"),
            Gate::Cz(a, b) => write!(f, "CZ({a},{b})"),
        }
    }
}

impl FromStr for Gate {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = |reason: &str| Error::Parse {
            what: "gate",
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let upper = t.to_ascii_uppercase();
        let two = |rest: &str| -> Result<(u8, u8)> {
            let inner = rest
                .strip_prefix('(')
                .and_then(|r| r.strip_suffix(')'))
                .ok_or_else(|| err("expected (i,j)"))?;
            let (a, b) = inner.split_once(',').ok_or_else(|| err("expected (i,j)"))?;
            let a = a.parse().map_err(|_| err("bad qubit index"))?;
            let b = b.parse().map_err(|_| err("bad qubit index"))?;
            Ok((a, b))
        };
        if let Some(rest) = upper.strip_prefix("CNOT") {
            let (c, t) = two(rest)?;
            return Gate::cnot(c, t);
        }
        if let Some(rest) = upper.strip_prefix("CZ") {
            let (a, b) = two(rest)?;
            return Gate::cz(a, b);
        }
        let mut chars = upper.chars();
        let kind = chars.next().ok_or_else(|| err("empty gate"))?;
        let rest: String = chars.collect();
        let rest = rest
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .unwrap_or(&rest);
        let q: u8 = rest.parse().map_err(|_| err("bad qubit index"))?;
        match kind {
            'H' => Gate::h(q),
            'P' | 'S' => Gate::p(q),
            'Z' => Gate::z(q),
            'X' => Gate::x(q),
            _ => Err(err("unknown gate kind")),
        }
    }
}

/// Unordered pair of distinct qubits, stored as `lo < hi`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct QubitPair {
    pub lo: u8,
    pub hi: u8,
}

impl QubitPair {
    pub fn new(a: u8, b: u8) -> Self {
        assert!(a != b && (1..=4).contains(&a) && (1..=4).contains(&b));
        Self {
            lo: a.min(b),
            hi: a.max(b),
        }
    }

    /// The six pairs in lexicographic order.
    pub fn all() -> impl Iterator<Item = QubitPair> {
        (1..=4u8).flat_map(|a| (a + 1..=4).map(move |b| QubitPair::new(a, b)))
    }

    pub fn complement(&self) -> Self {
        let rest: Vec<u8> = (1..=4).filter(|q| !self.contains(*q)).collect();
        Self::new(rest[0], rest[1])
    }

    pub fn contains(&self, q: u8) -> bool {
        self.lo == q || self.hi == q
    }

    pub fn shares_one(&self, other: &QubitPair) -> bool {
        (self.contains(other.lo) as u8 + self.contains(other.hi) as u8) == 1
    }

    pub fn mask(&self) -> u8 {
        (1 << (self.lo - 1)) | (1 << (self.hi - 1))
    }
}

impl fmt::Display for QubitPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.lo, self.hi)
    }
}

/// An ordered gate list, applied left to right.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Circuit {
    pub gates: Vec<Gate>,
}

impl Circuit {
    pub fn new(gates: Vec<Gate>) -> Self {
        Self { gates }
    }

    pub fn len(&self) -> usize {
        self.gates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    pub fn push(&mut self, g: Gate) {
        self.gates.push(g);
    }

    pub fn extend(&mut self, other: &Circuit) {
        self.gates.extend_from_slice(&other.gates);
    }

    pub fn cnot_count(&self) -> usize {
        self.gates.iter().filter(|g| g.is_entangling()).count()
    }

    pub fn apply(&self, s: &ExactState) -> ExactState {
        self.gates.iter().fold(*s, |acc, g| g.apply(&acc))
    }

    /// Gate-wise inverse: reversed order, `P` replaced by `P³`.
    pub fn inverse(&self) -> Circuit {
        Circuit::new(self.gates.iter().rev().flat_map(Gate::inverse).collect())
    }

    /// Cancels adjacent self-inverse pairs and runs of four `P` on the same
    /// qubit. The result acts identically on every state.
    pub fn simplify(&self) -> Circuit {
        let mut out: Vec<Gate> = Vec::with_capacity(self.gates.len());
        for &g in &self.gates {
            match g {
                Gate::P(_) => {
                    let run = out.iter().rev().take_while(|&&x| x == g).count();
                    if run == 3 {
                        out.truncate(out.len() - 3);
                    } else {
                        out.push(g);
                    }
                }
                _ if out.last() == Some(&g) => {
                    out.pop();
                }
                _ => out.push(g),
            }
        }
        Circuit::new(out)
    }
}

impl fmt::Display for Circuit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.gates.iter().map(Gate::to_string).collect();
        f.write_str(&parts.join(", "))
    }
}

impl FromStr for Circuit {
    type Err = Error;

    /// Comma-separated gates; commas inside parentheses belong to the gate.
    fn from_str(s: &str) -> Result<Self> {
        let mut gates = Vec::new();
        let mut depth = 0;
        let mut start = 0;
        for (i, c) in s.char_indices() {
            match c {
                '(' => depth += 1,
                ')' => depth -= 1,
                ',' if depth == 0 => {
                    gates.push(s[start..i].parse()?);
                    start = i + 1;
                }
                _ => {}
            }
        }
        if !s[start..].trim().is_empty() {
            gates.push(s[start..].parse()?);
        } else if !gates.is_empty() {
            return Err(Error::Parse {
                what: "circuit",
                input: s.to_string(),
                reason: "trailing comma".into(),
            });
        }
        Ok(Circuit::new(gates))
    }
}

/// Complex or real Clifford setting.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Complex,
    Real,
}

impl Mode {
    pub fn local_generators(self) -> GeneratorSet {
        match self {
            Mode::Complex => GeneratorSet::local_complex(),
            Mode::Real => GeneratorSet::local_real(),
        }
    }

    pub fn full_generators(self) -> GeneratorSet {
        match self {
            Mode::Complex => GeneratorSet::full_complex(),
            Mode::Real => GeneratorSet::full_real(),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Mode::Complex => "complex",
            Mode::Real => "real",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Mode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "complex" => Ok(Mode::Complex),
            "real" => Ok(Mode::Real),
            _ => Err(Error::Parse {
                what: "mode",
                input: s.into(),
                reason: "expected complex or real".into(),
            }),
        }
    }
}

/// A named list of generators, kept in canonical gate order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorSet {
    pub name: String,
    pub gates: Vec<Gate>,
}

pub const LOCAL_C: &str = "LOCAL_C";
pub const LOCAL_R: &str = "LOCAL_R";
pub const FULL_C: &str = "FULL_C";
pub const FULL_R: &str = "FULL_R";

fn qubits() -> impl Iterator<Item = u8> + Clone {
    1..=NUM_QUBITS as u8
}

fn all_cnots() -> impl Iterator<Item = Gate> {
    qubits().flat_map(|c| qubits().filter(move |&t| t != c).map(move |t| Gate::Cnot(c, t)))
}

impl GeneratorSet {
    pub fn new(name: impl Into<String>, mut gates: Vec<Gate>) -> Self {
        gates.sort();
        gates.dedup();
        Self {
            name: name.into(),
            gates,
        }
    }

    /// `H` and `P` on every qubit.
    pub fn local_complex() -> Self {
        Self::new(LOCAL_C, qubits().flat_map(|q| [Gate::H(q), Gate::P(q)]).collect())
    }

    /// `H` and `Z` on every qubit.
    pub fn local_real() -> Self {
        Self::new(LOCAL_R, qubits().flat_map(|q| [Gate::H(q), Gate::Z(q)]).collect())
    }

    pub fn full_complex() -> Self {
        let mut gates = Self::local_complex().gates;
        gates.extend(all_cnots());
        Self::new(FULL_C, gates)
    }

    pub fn full_real() -> Self {
        let mut gates = Self::local_real().gates;
        gates.extend(all_cnots());
        Self::new(FULL_R, gates)
    }

    pub fn len(&self) -> usize {
        self.gates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }
}

/// All six CZ gates in pair order.
pub fn cz_gates() -> Vec<Gate> {
    QubitPair::all().map(|p| Gate::Cz(p.lo, p.hi)).collect()
}

/// All twelve CNOT gates in canonical order.
pub fn cnot_gates() -> Vec<Gate> {
    all_cnots().collect()
}
