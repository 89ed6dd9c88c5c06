//! Local-gate orbits and their entanglement invariants.
//!
//! Entropies are exact: the reduced spectrum of a Clifford state across any
//! cut is flat, so the von Neumann entropy in bits is `log₂` of the Schmidt
//! rank. The *entanglement entropy* of a state is the mean over the three
//! 2|2 cuts, an integer multiple of 1/3.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::anchors::Anchor;
use crate::closure::{closure, StateSet};
use crate::error::{Error, Result};
use crate::exact_state::{qubit_mask, ExactState, GaussianInt, DIM, NUM_QUBITS};
use crate::gates::{GeneratorSet, Mode, QubitPair};
use crate::ket::parse_state;
use crate::labels::{Family, OrbitLabel, Split};
use crate::linalg::Matrix;
use crate::reference;
use crate::transitions::TransitionCensus;

/// One side of a bipartition of the four qubits.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Bipartition {
    /// Bit `q-1` set for each qubit `q` on side A.
    side_a: u8,
}

impl Bipartition {
    pub fn new(qubits: &[u8]) -> Result<Self> {
        let mut side_a = 0u8;
        for &q in qubits {
            if !(1..=NUM_QUBITS as u8).contains(&q) {
                return Err(Error::InvalidGate(format!("qubit {q} out of range")));
            }
            side_a |= 1 << (q - 1);
        }
        if side_a == 0 || side_a == 0b1111 {
            return Err(Error::InvalidGate("bipartition side must be nonempty and proper".into()));
        }
        Ok(Self { side_a })
    }

    pub fn single(q: u8) -> Self {
        Self::new(&[q]).expect("qubit in range")
    }

    pub fn from_pair(p: QubitPair) -> Self {
        Self::new(&[p.lo, p.hi]).expect("pair in range")
    }

    /// The three 2|2 cuts `12|34`, `13|24`, `14|23`.
    pub fn two_two_cuts() -> [Bipartition; 3] {
        Split::all().map(|s| Self::from_pair(s.first()))
    }

    pub fn side_a(&self) -> Vec<u8> {
        (1..=NUM_QUBITS as u8).filter(|q| self.side_a & (1 << (q - 1)) != 0).collect()
    }

    pub fn side_b(&self) -> Vec<u8> {
        (1..=NUM_QUBITS as u8).filter(|q| self.side_a & (1 << (q - 1)) == 0).collect()
    }
}

impl fmt::Display for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |qs: Vec<u8>| qs.iter().map(u8::to_string).collect::<String>();
        write!(f, "{}|{}", join(self.side_a()), join(self.side_b()))
    }
}

/// Packs the bits of basis index `b` selected by `qubits` into a row or
/// column index (first listed qubit most significant).
fn gather(b: usize, qubits: &[u8]) -> usize {
    qubits
        .iter()
        .fold(0, |acc, &q| (acc << 1) | usize::from(b & qubit_mask(q) != 0))
}

/// Amplitude numerators reshaped into a `2^|A| × 2^|B|` matrix.
pub fn reshape(s: &ExactState, cut: Bipartition) -> Matrix {
    let (a, b) = (cut.side_a(), cut.side_b());
    let mut m = Matrix::zeros(1 << a.len(), 1 << b.len());
    for idx in 0..DIM {
        m.set(gather(idx, &a), gather(idx, &b), s.amp(idx));
    }
    m
}

/// Schmidt rank across `cut`, with a check that the reduced spectrum is flat:
/// `r·(MM†)² = tr(MM†)·MM†`.
pub fn schmidt_rank(s: &ExactState, cut: Bipartition) -> Result<usize> {
    let m = reshape(s, cut);
    let rank = m.rank();
    let gram = m.mul(&m.adjoint());
    let lhs = gram.mul(&gram).scale(GaussianInt::new(rank as i64, 0));
    let rhs = gram.scale(gram.trace());
    if lhs != rhs {
        return Err(Error::FlatSpectrumViolation { cut: cut.to_string() });
    }
    Ok(rank)
}

/// Entropy in bits across `cut`.
pub fn cut_entropy(s: &ExactState, cut: Bipartition) -> Result<u8> {
    let r = schmidt_rank(s, cut)?;
    assert!(r.is_power_of_two(), "Schmidt rank {r} of a Clifford state is not a power of two");
    Ok(r.trailing_zeros() as u8)
}

/// Exact entropy value, stored in thirds of a bit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Entropy {
    thirds: u32,
}

impl Entropy {
    pub const fn from_thirds(thirds: u32) -> Self {
        Self { thirds }
    }

    pub fn thirds(&self) -> u32 {
        self.thirds
    }

    /// Reduced `(numerator, denominator)`.
    pub fn ratio(&self) -> (u32, u32) {
        if self.thirds.is_multiple_of(3) {
            (self.thirds / 3, 1)
        } else {
            (self.thirds, 3)
        }
    }

    /// Always `p/q`, e.g. `0/1` or `4/3`.
    pub fn as_fraction(&self) -> String {
        let (p, q) = self.ratio();
        format!("{p}/{q}")
    }

    pub fn to_f64(&self) -> f64 {
        self.thirds as f64 / 3.0
    }
}

impl fmt::Display for Entropy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.ratio() {
            (p, 1) => write!(f, "{p}"),
            (p, q) => write!(f, "{p}/{q}"),
        }
    }
}

/// Mean entropy over the three 2|2 cuts.
pub fn entanglement_entropy(s: &ExactState) -> Result<Entropy> {
    let mut sum = 0u32;
    for cut in Bipartition::two_two_cuts() {
        sum += cut_entropy(s, cut)? as u32;
    }
    Ok(Entropy::from_thirds(sum))
}

/// Single-qubit and 2|2-cut entropies, invariant under local gates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct EntropyProfile {
    pub single_entropies: [u8; 4],
    pub cut_entropies: [u8; 3],
}

impl EntropyProfile {
    pub fn of(s: &ExactState) -> Result<Self> {
        let mut single_entropies = [0u8; 4];
        for (q, e) in single_entropies.iter_mut().enumerate() {
            *e = cut_entropy(s, Bipartition::single(q as u8 + 1))?;
        }
        let mut cut_entropies = [0u8; 3];
        for (c, cut) in Bipartition::two_two_cuts().into_iter().enumerate() {
            cut_entropies[c] = cut_entropy(s, cut)?;
        }
        Ok(Self {
            single_entropies,
            cut_entropies,
        })
    }

    pub fn entropy(&self) -> Entropy {
        Entropy::from_thirds(self.cut_entropies.iter().map(|&e| e as u32).sum())
    }

    /// Complex family implied by the entropies alone.
    pub fn family(&self) -> Option<Family> {
        let s = self.single_entropies;
        let c = self.cut_entropies;
        let ones: Vec<u8> = (1..=4).filter(|q| s[*q as usize - 1] == 1).collect();
        let zeros: Vec<u8> = (1..=4).filter(|q| s[*q as usize - 1] == 0).collect();
        let cut_with = |v: u8| -> Option<Split> {
            let hits: Vec<Split> = Split::all().into_iter().filter(|sp| c[sp.ordinal()] == v).collect();
            (hits.len() == 1).then(|| hits[0])
        };
        let others_are = |sp: Split, v: u8| Split::all().iter().all(|o| *o == sp || c[o.ordinal()] == v);
        match (ones.len(), zeros.len()) {
            (0, 4) if c == [0, 0, 0] => Some(Family::S0),
            (2, 2) => {
                let pair = QubitPair::new(ones[0], ones[1]);
                let sp = cut_with(0)?;
                (sp.has_half(pair) && others_are(sp, 1)).then_some(Family::T(pair))
            }
            (3, 1) if c == [1, 1, 1] => Some(Family::V(zeros[0])),
            (4, 0) if c == [1, 1, 1] => Some(Family::W),
            (4, 0) => {
                if let Some(sp) = cut_with(0).filter(|sp| others_are(*sp, 2)) {
                    Some(Family::U(sp))
                } else {
                    cut_with(1).filter(|sp| others_are(*sp, 2)).map(Family::X)
                }
            }
            _ => None,
        }
    }
}

/// Per-state fingerprint: entropies plus support size. Only the entropy
/// part is constant on an orbit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Fingerprint {
    pub single_entropies: [u8; 4],
    pub cut_entropies: [u8; 3],
    pub support_size: u8,
}

impl Fingerprint {
    pub fn of(s: &ExactState) -> Result<Self> {
        let p = EntropyProfile::of(s)?;
        Ok(Self {
            single_entropies: p.single_entropies,
            cut_entropies: p.cut_entropies,
            support_size: s.support_mask().count_ones() as u8,
        })
    }

    pub fn profile(&self) -> EntropyProfile {
        EntropyProfile {
            single_entropies: self.single_entropies,
            cut_entropies: self.cut_entropies,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Orbit {
    pub id: usize,
    pub label: Option<OrbitLabel>,
    pub size: usize,
    pub entropy: Entropy,
    pub profile: EntropyProfile,
    /// Smallest member in canonical order.
    pub representative: ExactState,
}

impl Orbit {
    pub fn name(&self) -> String {
        match &self.label {
            Some(l) => l.to_string(),
            None => format!("orbit{}", self.id),
        }
    }
}

/// Connected components of a state set under local generators.
#[derive(Clone, Debug)]
pub struct OrbitPartition {
    orbit_of: Vec<u32>,
    orbits: Vec<Orbit>,
}

/// Splits `set` into orbits of `locals`. Orbit ids follow the canonical
/// order of each orbit's smallest member.
pub fn partition(set: &StateSet, locals: &GeneratorSet) -> Result<OrbitPartition> {
    let mut orbit_of = vec![u32::MAX; set.len()];
    let mut orbits = Vec::new();
    for start in 0..set.len() {
        if orbit_of[start] != u32::MAX {
            continue;
        }
        let id = orbits.len();
        let rep = set.get(start);
        let members = closure(&[rep], locals)?;
        for s in members.iter() {
            let idx = set.index_of(s).ok_or_else(|| Error::NotClosed {
                gate: locals.name.clone(),
            })?;
            orbit_of[idx] = id as u32;
        }
        let profile = EntropyProfile::of(&rep)?;
        orbits.push(Orbit {
            id,
            label: None,
            size: members.len(),
            entropy: profile.entropy(),
            profile,
            representative: rep,
        });
    }
    Ok(OrbitPartition { orbit_of, orbits })
}

impl OrbitPartition {
    pub fn len(&self) -> usize {
        self.orbits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orbits.is_empty()
    }

    pub fn orbits(&self) -> &[Orbit] {
        &self.orbits
    }

    pub fn orbit(&self, id: usize) -> &Orbit {
        &self.orbits[id]
    }

    /// Orbit id of the state at `state_idx` in the partitioned set.
    #[inline]
    pub fn orbit_of(&self, state_idx: usize) -> usize {
        self.orbit_of[state_idx] as usize
    }

    pub fn orbit_of_state(&self, set: &StateSet, s: &ExactState) -> Option<usize> {
        set.index_of(s).map(|i| self.orbit_of(i))
    }

    pub fn members(&self, id: usize) -> impl Iterator<Item = usize> + '_ {
        self.orbit_of
            .iter()
            .enumerate()
            .filter(move |(_, &o)| o as usize == id)
            .map(|(i, _)| i)
    }

    pub fn by_label(&self, label: &OrbitLabel) -> Option<usize> {
        self.orbits.iter().position(|o| o.label.as_ref() == Some(label))
    }

    /// Sorted multiset of orbit sizes, largest first.
    pub fn size_multiset(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for o in &self.orbits {
            *m.entry(o.size).or_insert(0) += 1;
        }
        m
    }

    /// Exhaustively checks that every state has its orbit's entropy profile
    /// (and hence a flat spectrum on every cut).
    pub fn check_profiles(&self, set: &StateSet) -> Result<()> {
        (0..set.len()).into_par_iter().try_for_each(|i| {
            let p = EntropyProfile::of(&set.get(i))?;
            let orbit = &self.orbits[self.orbit_of(i)];
            if p != orbit.profile {
                return Err(Error::AmbiguousLabel(format!(
                    "state {} has profile {p:?} but its orbit {} has {:?}",
                    set.get(i),
                    orbit.name(),
                    orbit.profile
                )));
            }
            Ok(())
        })
    }
}

/// Outcome of checking one published representative against the labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnchorStatus {
    /// Lies in the orbit carrying its label.
    Confirmed,
    /// Lies in an orbit whose structure gives a different label; another
    /// anchor confirms that orbit, so the listed state is a duplicate.
    Duplicate { actual: OrbitLabel },
    /// Does not parse or is not normalized.
    Malformed { reason: String },
    /// Valid state outside the enumerated set.
    NotEnumerated,
}

#[derive(Clone, Debug)]
pub struct AnchorFinding {
    pub label: OrbitLabel,
    pub ket: &'static str,
    pub status: AnchorStatus,
}

impl AnchorFinding {
    pub fn is_inconsistent(&self) -> bool {
        self.status != AnchorStatus::Confirmed
    }
}

impl fmt::Display for AnchorFinding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.status {
            AnchorStatus::Confirmed => write!(f, "{}: {} confirmed", self.label, self.ket),
            AnchorStatus::Duplicate { actual } => write!(
                f,
                "{}: listed state {} lies in {actual}, not {}",
                self.label, self.ket, self.label
            ),
            AnchorStatus::Malformed { reason } => {
                write!(f, "{}: listed state {} is malformed: {reason}", self.label, self.ket)
            }
            AnchorStatus::NotEnumerated => {
                write!(f, "{}: listed state {} is not in the enumerated set", self.label, self.ket)
            }
        }
    }
}

/// Names every orbit.
///
/// Labels come from structure: the entropy profile fixes the complex
/// family, orbit size separates hatted from unhatted real orbits, and the
/// pair of a real `Xhat` orbit is the unique CZ pair carrying it into
/// `What`. The published representatives are then checked against these
/// labels. A representative that contradicts its orbit's label is accepted
/// as a known misprint only when another representative confirms that
/// orbit; otherwise labeling fails with [`Error::AmbiguousLabel`].
pub fn label_orbits(
    partition: &mut OrbitPartition,
    set: &StateSet,
    mode: Mode,
    anchors: &[Anchor],
    census: Option<&TransitionCensus>,
) -> Result<Vec<AnchorFinding>> {
    let mut labels: Vec<OrbitLabel> = Vec::with_capacity(partition.len());
    for o in &partition.orbits {
        let family = o.profile.family().ok_or_else(|| {
            Error::AmbiguousLabel(format!("orbit {} has unrecognized profile {:?}", o.id, o.profile))
        })?;
        let label = match mode {
            Mode::Complex => OrbitLabel::complex(family),
            Mode::Real => OrbitLabel::real(hat_by_size(family, o.size).ok_or_else(|| {
                Error::AmbiguousLabel(format!("real orbit {} of family {family} has size {}", o.id, o.size))
            })?),
        };
        labels.push(label);
    }

    if mode == Mode::Real {
        resolve_xhat_pairs(partition, &mut labels, census)?;
    }

    let distinct: BTreeSet<_> = labels.iter().collect();
    if distinct.len() != labels.len() {
        return Err(Error::AmbiguousLabel("two orbits received the same label".into()));
    }

    let wanted_real = mode == Mode::Real;
    let mut findings = Vec::new();
    for anchor in anchors {
        for text in anchor.labels {
            let label: OrbitLabel = text.parse()?;
            if label.real != wanted_real {
                continue;
            }
            let status = match parse_state(anchor.ket) {
                Err(e) => AnchorStatus::Malformed { reason: e.to_string() },
                Ok(s) => match partition.orbit_of_state(set, &s) {
                    None => AnchorStatus::NotEnumerated,
                    Some(o) if labels[o] == label => AnchorStatus::Confirmed,
                    Some(o) => AnchorStatus::Duplicate { actual: labels[o] },
                },
            };
            findings.push(AnchorFinding {
                label,
                ket: anchor.ket,
                status,
            });
        }
    }

    let confirmed: BTreeSet<OrbitLabel> = findings
        .iter()
        .filter(|f| f.status == AnchorStatus::Confirmed)
        .map(|f| f.label)
        .collect();
    for f in &findings {
        if let AnchorStatus::Duplicate { actual } = &f.status {
            if !confirmed.contains(actual) {
                return Err(Error::AmbiguousLabel(format!(
                    "representative for {} lies in the orbit structurally labeled {actual}, \
                     and no other representative confirms that orbit",
                    f.label
                )));
            }
        }
    }

    for (o, l) in partition.orbits.iter_mut().zip(labels) {
        o.label = Some(l);
    }
    Ok(findings)
}

fn hat_by_size(family: Family, size: usize) -> Option<Family> {
    let plain = reference::real_orbit_size(&OrbitLabel::real(family))?;
    match family {
        Family::V(a) if size != plain => {
            (Some(size) == reference::real_orbit_size(&OrbitLabel::real(Family::VHat(a)))).then_some(Family::VHat(a))
        }
        Family::W if size != plain => {
            (Some(size) == reference::real_orbit_size(&OrbitLabel::real(Family::WHat))).then_some(Family::WHat)
        }
        Family::X(sp) if size != plain => {
            // pair fixed later from transitions
            (Some(size) == reference::real_orbit_size(&OrbitLabel::real(Family::XHat(sp.first()))))
                .then_some(Family::XHat(sp.first()))
        }
        f => (size == plain).then_some(f),
    }
}

fn resolve_xhat_pairs(
    partition: &OrbitPartition,
    labels: &mut [OrbitLabel],
    census: Option<&TransitionCensus>,
) -> Result<()> {
    let xhats: Vec<usize> = (0..labels.len())
        .filter(|&i| matches!(labels[i].family, Family::XHat(_)))
        .collect();
    if xhats.is_empty() {
        return Ok(());
    }
    let census = census.ok_or_else(|| {
        Error::AmbiguousLabel("real Xhat orbits need a CZ census to fix their qubit pair".into())
    })?;
    let what = labels
        .iter()
        .position(|l| l.family == Family::WHat)
        .ok_or_else(|| Error::AmbiguousLabel("no What orbit to resolve Xhat pairs".into()))?;
    for &o in &xhats {
        let Family::XHat(half) = labels[o].family else { unreachable!() };
        let split = Split::new(half);
        let into_what: Vec<QubitPair> = QubitPair::all()
            .filter(|p| census.count(o, crate::gates::Gate::Cz(p.lo, p.hi), what) > 0)
            .collect();
        match into_what.as_slice() {
            [p] if split.has_half(*p) => labels[o].family = Family::XHat(*p),
            _ => {
                return Err(Error::AmbiguousLabel(format!(
                    "orbit {} ({} states) reaches What via CZ pairs {:?}",
                    o,
                    partition.orbit(o).size,
                    into_what.iter().map(|p| p.to_string()).collect::<Vec<_>>()
                )))
            }
        }
    }
    Ok(())
}

/// One line of the JSON-lines orbit report.
#[derive(Clone, Debug, Serialize)]
pub struct OrbitRecord {
    pub label: String,
    pub size: usize,
    pub entropy: String,
    pub fingerprint: EntropyProfile,
    pub representative: String,
}

impl From<&Orbit> for OrbitRecord {
    fn from(o: &Orbit) -> Self {
        Self {
            label: o.name(),
            size: o.size,
            entropy: o.entropy.as_fraction(),
            fingerprint: o.profile,
            representative: o.representative.to_hex(),
        }
    }
}

/// Orbit report, one JSON object per line in orbit-id order.
pub fn orbit_report(partition: &OrbitPartition) -> String {
    partition
        .orbits()
        .iter()
        .map(|o| serde_json::to_string(&OrbitRecord::from(o)).expect("orbit record serializes") + "\n")
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ket::parse_state;

    fn ket(s: &str) -> ExactState {
        parse_state(s).unwrap()
    }

    #[test]
    fn product_state_has_unit_ranks() {
        let z = ExactState::zero();
        for cut in Bipartition::two_two_cuts() {
            assert_eq!(schmidt_rank(&z, cut).unwrap(), 1);
        }
        for q in 1..=4 {
            assert_eq!(schmidt_rank(&z, Bipartition::single(q)).unwrap(), 1);
        }
        assert_eq!(entanglement_entropy(&z).unwrap(), Entropy::from_thirds(0));
    }

    #[test]
    fn two_bell_pairs() {
        let u = ket("1/2(|1111> + |1100> - |0011> - |0000>)");
        let cuts = Bipartition::two_two_cuts();
        assert_eq!(schmidt_rank(&u, cuts[0]).unwrap(), 1);
        assert_eq!(schmidt_rank(&u, cuts[1]).unwrap(), 4);
        assert_eq!(schmidt_rank(&u, cuts[2]).unwrap(), 4);
        assert_eq!(entanglement_entropy(&u).unwrap().to_string(), "4/3");
    }

    #[test]
    fn representative_entropies() {
        assert_eq!(entanglement_entropy(&ket("1/sqrt2(|1110> - |1101>)")).unwrap().to_string(), "2/3");
        assert_eq!(entanglement_entropy(&ket("1/sqrt2(|1000> - |0111>)")).unwrap().to_string(), "1");
    }

    #[test]
    fn flat_spectrum_violation_is_reported() {
        // normalized (9 + 7 = 16 = 2^4) but with unequal Schmidt weights
        let mut amps = [GaussianInt::ZERO; DIM];
        amps[0] = GaussianInt::new(3, 0);
        for b in [3, 5, 6, 9, 10, 12, 15] {
            amps[b] = GaussianInt::ONE;
        }
        let s = ExactState::new(amps, 4).unwrap();
        let err = schmidt_rank(&s, Bipartition::two_two_cuts()[0]);
        assert!(matches!(err, Err(Error::FlatSpectrumViolation { .. })), "{err:?}");
    }

    #[test]
    fn entropy_formatting() {
        assert_eq!(Entropy::from_thirds(0).as_fraction(), "0/1");
        assert_eq!(Entropy::from_thirds(3).to_string(), "1");
        assert_eq!(Entropy::from_thirds(5).to_string(), "5/3");
        assert_eq!(Entropy::from_thirds(4).as_fraction(), "4/3");
    }

    #[test]
    fn profile_families() {
        let fam = |k: &str| EntropyProfile::of(&ket(k)).unwrap().family().unwrap().to_string();
        assert_eq!(fam("|0000>"), "S0");
        assert_eq!(fam("1/sqrt2(|1110> - |1101>)"), "T12");
        assert_eq!(fam("1/sqrt2(|1011> - |0111>)"), "T34");
        assert_eq!(fam("1/sqrt2(|1100> - |1011>)"), "V4");
        assert_eq!(fam("1/sqrt2(|1000> - |0111>)"), "W");
        assert_eq!(fam("1/2(|1111> + |1010> - |0101> - |0000>)"), "U13/24");
        assert_eq!(fam("1/2(|1111> - |1001> - |0110> - |0000>)"), "X14/23");
    }

    #[test]
    fn bipartition_validation() {
        assert!(Bipartition::new(&[]).is_err());
        assert!(Bipartition::new(&[1, 2, 3, 4]).is_err());
        assert!(Bipartition::new(&[5]).is_err());
        assert_eq!(Bipartition::new(&[1, 3]).unwrap().to_string(), "13|24");
    }

    #[test]
    fn trivial_partition() {
        let set = closure(&[ExactState::zero()], &GeneratorSet::new("none", vec![])).unwrap();
        let p = partition(&set, &GeneratorSet::new("none", vec![])).unwrap();
        assert_eq!(p.len(), 1);
        assert_eq!(p.orbit(0).size, 1);
    }

    #[test]
    fn partition_detects_open_sets() {
        let set = closure(&[ExactState::zero()], &GeneratorSet::new("h1", vec![crate::gates::Gate::H(1)])).unwrap();
        let err = partition(&set, &GeneratorSet::local_complex()).unwrap_err();
        assert!(matches!(err, Error::NotClosed { .. }));
    }
}
