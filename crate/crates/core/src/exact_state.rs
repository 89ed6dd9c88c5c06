//! Exact four-qubit state vectors.
//!
//! Every amplitude of a Clifford state is a Gaussian integer divided by a
//! common power of √2, so a state is stored as sixteen Gaussian-integer
//! numerators plus one shared exponent `k`:
//!
//! ```text
//! amplitude[b] = amps[b] / (√2)^k
//! ```
//!
//! The representation is kept canonical (see [`canonicalize`]), which makes
//! vector equality, hashing and ordering purely structural. Global phases
//! are *not* quotiented: `i·|ψ⟩` and `|ψ⟩` are different states.
//!
//! Basis index `b` of the ket `|c₁c₂c₃c₄⟩` (characters read left to right)
//! is `8·c₁ + 4·c₂ + 2·c₃ + c₄`, so `|0001⟩` is index 1. Which character a
//! gate's qubit number addresses is fixed by [`qubit_mask`].

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

pub const NUM_QUBITS: usize = 4;
pub const DIM: usize = 1 << NUM_QUBITS;

/// Largest absolute value allowed for a canonical amplitude component.
pub const COMPONENT_LIMIT: i64 = 16;
/// Largest denominator exponent allowed for a canonical state.
pub const K_LIMIT: u32 = 8;

/// Length of [`ExactState::encode`] output: one byte `k`, then `(re, im)`
/// as signed bytes for each basis index in order.
pub const ENCODED_LEN: usize = 1 + 2 * DIM;

/// Bit of the basis index addressed by qubit `q` (1-based).
///
/// Qubit 1 is the rightmost ket character (least significant bit), qubit 4
/// the leftmost.
#[inline]
pub const fn qubit_mask(q: u8) -> usize {
    1 << (q as usize - 1)
}

/// A Gaussian integer `re + i·im`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct GaussianInt {
    pub re: i64,
    pub im: i64,
}

impl GaussianInt {
    pub const ZERO: Self = Self::new(0, 0);
    pub const ONE: Self = Self::new(1, 0);
    pub const I: Self = Self::new(0, 1);

    pub const fn new(re: i64, im: i64) -> Self {
        Self { re, im }
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.re == 0 && self.im == 0
    }

    /// Multiplication by `i`.
    #[inline]
    pub fn mul_i(self) -> Self {
        Self::new(-self.im, self.re)
    }

    #[inline]
    pub fn conj(self) -> Self {
        Self::new(self.re, -self.im)
    }

    /// `|z|²`
    #[inline]
    pub fn norm(self) -> i64 {
        self.re * self.re + self.im * self.im
    }

    #[inline]
    fn is_even(self) -> bool {
        self.re % 2 == 0 && self.im % 2 == 0
    }

    /// Exact division by a nonzero Gaussian integer, `None` if the quotient
    /// is not a Gaussian integer.
    pub fn div_exact(self, rhs: Self) -> Option<Self> {
        let n = rhs.norm();
        if n == 0 {
            return None;
        }
        let num = self * rhs.conj();
        if num.re % n != 0 || num.im % n != 0 {
            return None;
        }
        Some(Self::new(num.re / n, num.im / n))
    }
}

impl Add for GaussianInt {
    type Output = Self;
    #[inline]
    fn add(self, rhs: Self) -> Self {
        Self::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl Sub for GaussianInt {
    type Output = Self;
    #[inline]
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.re - rhs.re, self.im - rhs.im)
    }
}

impl Mul for GaussianInt {
    type Output = Self;
    #[inline]
    fn mul(self, rhs: Self) -> Self {
        Self::new(
            self.re * rhs.re - self.im * rhs.im,
            self.re * rhs.im + self.im * rhs.re,
        )
    }
}

impl Neg for GaussianInt {
    type Output = Self;
    #[inline]
    fn neg(self) -> Self {
        Self::new(-self.re, -self.im)
    }
}

impl fmt::Display for GaussianInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re, self.im) {
            (re, 0) => write!(f, "{re}"),
            (0, 1) => write!(f, "i"),
            (0, -1) => write!(f, "-i"),
            (0, im) => write!(f, "{im}i"),
            (re, -1) => write!(f, "{re}-i"),
            (re, 1) => write!(f, "{re}+i"),
            (re, im) if im < 0 => write!(f, "{re}-{}i", -im),
            (re, im) => write!(f, "{re}+{im}i"),
        }
    }
}

/// Unreduced numerators over `(√2)^k`, as produced mid-computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RawState {
    pub amps: [GaussianInt; DIM],
    pub k: u32,
}

impl RawState {
    pub fn norm(&self) -> u64 {
        self.amps.iter().map(|z| z.norm() as u64).sum()
    }
}

/// A canonical exact four-qubit state.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct ExactState {
    k: u8,
    amps: [[i8; 2]; DIM],
}

/// Reduces a raw state to its unique canonical representative.
///
/// A state is canonical when `k ≤ 1` or some amplitude has an odd
/// component. The only reduction is halving every numerator with `k ← k−2`;
/// `(a+bi)/√2` is never a Gaussian integer unless `a = b = 0`.
pub fn canonicalize(raw: &RawState) -> Result<ExactState> {
    if raw.k >= 64 {
        return Err(Error::AmplitudeBound {
            component: 0,
            limit: COMPONENT_LIMIT,
            k: raw.k,
            k_limit: K_LIMIT,
        });
    }
    let expected = 1u64 << raw.k;
    let found = raw.norm();
    if found != expected {
        return Err(Error::NormalizationViolation {
            k: raw.k,
            found,
            expected,
        });
    }
    let mut amps = raw.amps;
    let mut k = raw.k;
    while k >= 2 && amps.iter().all(|z| z.is_even()) {
        for z in amps.iter_mut() {
            *z = GaussianInt::new(z.re / 2, z.im / 2);
        }
        k -= 2;
    }
    ExactState::from_reduced(&amps, k)
}

impl ExactState {
    /// The computational basis state with index `b`.
    pub fn basis(b: usize) -> Self {
        assert!(b < DIM, "basis index {b} out of range");
        let mut amps = [[0i8; 2]; DIM];
        amps[b][0] = 1;
        Self { k: 0, amps }
    }

    /// `|0000⟩`
    pub fn zero() -> Self {
        Self::basis(0)
    }

    /// Builds a state from numerators over `(√2)^k`, canonicalizing.
    pub fn new(amps: [GaussianInt; DIM], k: u32) -> Result<Self> {
        canonicalize(&RawState { amps, k })
    }

    fn from_reduced(amps: &[GaussianInt; DIM], k: u32) -> Result<Self> {
        let worst = amps
            .iter()
            .map(|z| z.re.abs().max(z.im.abs()))
            .max()
            .unwrap_or(0);
        if worst > COMPONENT_LIMIT || k > K_LIMIT {
            return Err(Error::AmplitudeBound {
                component: worst,
                limit: COMPONENT_LIMIT,
                k,
                k_limit: K_LIMIT,
            });
        }
        let mut out = [[0i8; 2]; DIM];
        for (dst, z) in out.iter_mut().zip(amps) {
            *dst = [z.re as i8, z.im as i8];
        }
        Ok(Self { k: k as u8, amps: out })
    }

    /// Denominator exponent: amplitudes are divided by `(√2)^k`.
    #[inline]
    pub fn k(&self) -> u32 {
        self.k as u32
    }

    /// Numerator of the amplitude at basis index `b`.
    #[inline]
    pub fn amp(&self, b: usize) -> GaussianInt {
        let [re, im] = self.amps[b];
        GaussianInt::new(re as i64, im as i64)
    }

    pub fn amps(&self) -> [GaussianInt; DIM] {
        std::array::from_fn(|b| self.amp(b))
    }

    pub fn to_raw(&self) -> RawState {
        RawState {
            amps: self.amps(),
            k: self.k(),
        }
    }

    pub(crate) fn raw_components(&self) -> &[[i8; 2]; DIM] {
        &self.amps
    }

    /// Rebuilds a state from components that already satisfy the canonical
    /// form, as produced by phase, sign and permutation gates.
    pub(crate) fn from_components_unchecked(k: u8, amps: [[i8; 2]; DIM]) -> Self {
        Self { k, amps }
    }

    /// `Σ |amps[b]|²`, equal to `2^k` for every valid state.
    pub fn norm(&self) -> u64 {
        self.amps
            .iter()
            .map(|[re, im]| (*re as i64 * *re as i64 + *im as i64 * *im as i64) as u64)
            .sum()
    }

    pub fn is_normalized(&self) -> bool {
        self.norm() == 1u64 << self.k
    }

    pub fn is_canonical(&self) -> bool {
        self.k <= 1
            || self
                .amps
                .iter()
                .any(|[re, im]| re % 2 != 0 || im % 2 != 0)
    }

    pub fn is_real(&self) -> bool {
        self.amps.iter().all(|[_, im]| *im == 0)
    }

    /// Bitmask of basis indices with a nonzero amplitude.
    pub fn support_mask(&self) -> u16 {
        self.amps
            .iter()
            .enumerate()
            .filter(|(_, [re, im])| *re != 0 || *im != 0)
            .fold(0u16, |m, (b, _)| m | (1 << b))
    }

    /// Multiplies the whole vector by `i^power`.
    pub fn times_i_pow(&self, power: u32) -> Self {
        let mut out = *self;
        for _ in 0..power % 4 {
            for a in out.amps.iter_mut() {
                *a = [-a[1], a[0]];
            }
        }
        out
    }

    pub fn encode(&self) -> [u8; ENCODED_LEN] {
        let mut out = [0u8; ENCODED_LEN];
        out[0] = self.k;
        for (b, [re, im]) in self.amps.iter().enumerate() {
            out[1 + 2 * b] = *re as u8;
            out[2 + 2 * b] = *im as u8;
        }
        out
    }

    pub fn decode(bytes: &[u8]) -> Result<Self> {
        if bytes.len() != ENCODED_LEN {
            return Err(Error::Decode(format!(
                "expected {ENCODED_LEN} bytes, got {}",
                bytes.len()
            )));
        }
        let k = bytes[0];
        let mut amps = [[0i8; 2]; DIM];
        for (b, a) in amps.iter_mut().enumerate() {
            *a = [bytes[1 + 2 * b] as i8, bytes[2 + 2 * b] as i8];
        }
        let state = Self { k, amps };
        if k as u32 > K_LIMIT
            || amps
                .iter()
                .flatten()
                .any(|c| (*c as i64).abs() > COMPONENT_LIMIT)
        {
            return Err(Error::Decode("component or exponent out of range".into()));
        }
        if !state.is_normalized() {
            return Err(Error::Decode(format!(
                "norm {} does not match k = {k}",
                state.norm()
            )));
        }
        if !state.is_canonical() {
            return Err(Error::Decode("state is not in canonical form".into()));
        }
        Ok(state)
    }

    /// Hex string of the byte encoding.
    pub fn to_hex(&self) -> String {
        hex::encode(self.encode())
    }

    pub fn from_hex(s: &str) -> Result<Self> {
        let bytes = hex::decode(s.trim()).map_err(|e| Error::Decode(e.to_string()))?;
        Self::decode(&bytes)
    }
}

/// The canonical state order is the *descending* lexicographic order of the
/// byte encodings, which lists the basis states as `|0000⟩, |0001⟩, …`.
impl Ord for ExactState {
    fn cmp(&self, other: &Self) -> Ordering {
        other.encode().cmp(&self.encode())
    }
}

impl PartialOrd for ExactState {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ExactState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ExactState({self})")
    }
}

impl fmt::Display for ExactState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::ket::format_state(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn raw_with(entries: &[(usize, GaussianInt)], k: u32) -> RawState {
        let mut amps = [GaussianInt::ZERO; DIM];
        for &(b, z) in entries {
            amps[b] = z;
        }
        RawState { amps, k }
    }

    #[test]
    fn factor_of_two_reduction() {
        let s = canonicalize(&raw_with(&[(0, GaussianInt::new(2, 0))], 2)).unwrap();
        assert_eq!(s, ExactState::zero());
        assert_eq!(s.k(), 0);
    }

    #[test]
    fn k_one_is_already_canonical() {
        let raw = raw_with(&[(0, GaussianInt::ONE), (8, GaussianInt::ONE)], 1);
        let s = canonicalize(&raw).unwrap();
        assert_eq!(s.to_raw(), raw);
    }

    #[test]
    fn single_reduction_step() {
        // |2+2i|² + |-2|² + |2i|² + |2|² = 8 + 4 + 4 = 16 = 2^4
        let raw = raw_with(
            &[
                (0, GaussianInt::new(2, 2)),
                (15, GaussianInt::new(-2, 0)),
                (3, GaussianInt::new(0, 2)),
            ],
            4,
        );
        let s = canonicalize(&raw).unwrap();
        assert_eq!(s.k(), 2);
        assert_eq!(s.amp(0), GaussianInt::new(1, 1));
        assert_eq!(s.amp(15), GaussianInt::new(-1, 0));
        assert_eq!(s.amp(3), GaussianInt::new(0, 1));
        assert!(s.is_canonical());
    }

    #[test]
    fn rejects_unnormalized_input() {
        let raw = raw_with(&[(0, GaussianInt::ONE), (1, GaussianInt::ONE)], 0);
        assert!(matches!(
            canonicalize(&raw),
            Err(Error::NormalizationViolation { found: 2, expected: 1, .. })
        ));
    }

    #[test]
    fn canonicalize_is_idempotent() {
        let raw = raw_with(&[(5, GaussianInt::new(0, 4))], 4);
        let once = canonicalize(&raw).unwrap();
        let twice = canonicalize(&once.to_raw()).unwrap();
        assert_eq!(once, twice);
    }

    #[test]
    fn global_phase_distinguishes_states() {
        let zero = ExactState::zero();
        assert_eq!(zero, ExactState::zero());
        assert_ne!(zero, zero.times_i_pow(1));
        assert_eq!(zero, zero.times_i_pow(4));
    }

    #[test]
    fn encoding_round_trip_and_layout() {
        let s = ExactState::zero();
        let bytes = s.encode();
        assert_eq!(bytes.len(), 33);
        assert_eq!(bytes[0], 0);
        assert_eq!(bytes[1], 1);
        assert_eq!(ExactState::decode(&bytes).unwrap(), s);

        let neg = ExactState::new(
            std::array::from_fn(|b| if b == 3 { GaussianInt::new(0, -1) } else { GaussianInt::ZERO }),
            0,
        )
        .unwrap();
        assert_eq!(neg.encode()[8], 0xff);
    }

    #[test]
    fn decode_rejects_malformed_input() {
        assert!(ExactState::decode(&[0u8; 5]).is_err());
        let mut bytes = ExactState::zero().encode();
        bytes[3] = 1; // second unit amplitude breaks the norm
        assert!(ExactState::decode(&bytes).is_err());
        let mut bytes = [0u8; ENCODED_LEN];
        bytes[0] = 2;
        bytes[1] = 2; // 2/2 is not reduced
        assert!(ExactState::decode(&bytes).is_err());
    }

    #[test]
    fn basis_states_sort_in_index_order() {
        let mut states: Vec<_> = (0..DIM).rev().map(ExactState::basis).collect();
        states.sort();
        let expected: Vec<_> = (0..DIM).map(ExactState::basis).collect();
        assert_eq!(states, expected);
    }

    #[test]
    fn gaussian_arithmetic() {
        let a = GaussianInt::new(1, 2);
        let b = GaussianInt::new(3, -1);
        assert_eq!(a * b, GaussianInt::new(5, 5));
        assert_eq!(a.mul_i(), a * GaussianInt::I);
        assert_eq!((a * b).div_exact(b), Some(a));
        assert_eq!(GaussianInt::ONE.div_exact(GaussianInt::new(1, 1)), None);
        assert_eq!(a.norm(), 5);
    }
}
