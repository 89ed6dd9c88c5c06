//! The full pipeline for one mode, and the invariant checks run by
//! `--verify`.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;
use std::fs;
use std::io::{BufReader, BufWriter};
use std::path::{Path, PathBuf};

use rayon::prelude::*;

use crate::anchors::ANCHORS;
use crate::closure::{closure_with, ClosureOptions, StateSet};
use crate::error::{Error, Result};
use crate::exact_state::ExactState;
use crate::gates::{cnot_gates, Gate, Mode, QubitPair};
use crate::labels::{Family, OrbitLabel};
use crate::orbits::{label_orbits, partition, AnchorFinding, Entropy, OrbitPartition};
use crate::populations::population_census;
use crate::reference::{self, ExpectedCell};
use crate::transitions::{build_graph, cnot_census, cz_census, Connector, OrbitGraph, TransitionCensus};

/// Enumerated set, labeled orbits, CZ census and orbit graph for one mode.
pub struct Analysis {
    pub mode: Mode,
    pub set: StateSet,
    pub partition: OrbitPartition,
    pub anchors: Vec<AnchorFinding>,
    pub census: TransitionCensus,
    pub graph: OrbitGraph,
}

/// Enumerates the closure of `seed` under the mode's full generators.
pub fn enumerate(mode: Mode, seed: ExactState, capacity: usize) -> Result<StateSet> {
    let opts = ClosureOptions {
        capacity,
        record_tree: false,
    };
    closure_with(&[seed], &mode.full_generators(), &opts)
}

/// Cache file for the default enumeration of `mode`.
pub fn cache_path(dir: &Path, mode: Mode) -> PathBuf {
    dir.join(format!("clifford4-{mode}-v{}.states", env!("CARGO_PKG_VERSION")))
}

/// Reads the cached enumeration from `dir`, or enumerates and writes it.
/// A cache file that fails to load is rebuilt.
pub fn enumerate_cached(mode: Mode, dir: &Path, capacity: usize) -> Result<StateSet> {
    let path = cache_path(dir, mode);
    if let Ok(f) = fs::File::open(&path) {
        if let Ok(set) = StateSet::read_from(BufReader::new(f)) {
            if set.generators().name == mode.full_generators().name && set.len() <= capacity {
                return Ok(set);
            }
        }
    }
    let set = enumerate(mode, ExactState::zero(), capacity)?;
    fs::create_dir_all(dir)?;
    let tmp = path.with_extension(format!("tmp{}", std::process::id()));
    set.write_to(BufWriter::new(fs::File::create(&tmp)?))?;
    fs::rename(&tmp, &path)?;
    Ok(set)
}

impl Analysis {
    /// Runs the pipeline from `|0000⟩`.
    pub fn build(mode: Mode) -> Result<Self> {
        Self::from_set(mode, enumerate(mode, ExactState::zero(), crate::closure::DEFAULT_CAPACITY)?)
    }

    pub fn from_set(mode: Mode, set: StateSet) -> Result<Self> {
        let mut partition = partition(&set, &mode.local_generators())?;
        let census = cz_census(&set, &partition)?;
        let anchors = label_orbits(&mut partition, &set, mode, ANCHORS, Some(&census))?;
        let graph = build_graph(&census, &partition);
        Ok(Self {
            mode,
            set,
            partition,
            anchors,
            census,
            graph,
        })
    }

    pub fn label_of(&self, orbit: usize) -> OrbitLabel {
        self.partition.orbit(orbit).label.expect("orbits are labeled")
    }

    pub fn orbit_id(&self, label: &OrbitLabel) -> Option<usize> {
        self.partition.by_label(label)
    }

    pub fn orbit_of_state(&self, s: &ExactState) -> Option<usize> {
        self.partition.orbit_of_state(&self.set, s)
    }

    pub fn connector(&self) -> Result<Connector<'_>> {
        Connector::new(self.mode, &self.set, &self.partition)
    }

    /// Computed CZ row of `orbit`, keyed by target label.
    pub fn census_row(&self, orbit: usize, pair: QubitPair) -> BTreeMap<OrbitLabel, u64> {
        self.census
            .row(orbit, Gate::Cz(pair.lo, pair.hi))
            .into_iter()
            .map(|(t, n)| (self.label_of(t), n))
            .collect()
    }

    /// Compares every computed CZ row against the published table.
    pub fn compare_census(&self) -> Vec<RowComparison> {
        let mut out = Vec::new();
        for o in self.partition.orbits() {
            let source = self.label_of(o.id);
            for pair in QubitPair::all() {
                let expected = reference::expected_transitions(&source, pair);
                let computed = self.census_row(o.id, pair);
                let want: BTreeMap<OrbitLabel, u64> = expected.iter().map(|c| (c.target, c.count)).collect();
                out.push(RowComparison {
                    source,
                    pair,
                    matches: computed == want,
                    computed,
                    expected,
                });
            }
        }
        out
    }
}

/// One row of the transition table: computed against published.
#[derive(Clone, Debug)]
pub struct RowComparison {
    pub source: OrbitLabel,
    pub pair: QubitPair,
    pub computed: BTreeMap<OrbitLabel, u64>,
    /// Consistent values, with printed misprints attached.
    pub expected: Vec<ExpectedCell>,
    pub matches: bool,
}

impl RowComparison {
    pub fn misprints(&self) -> impl Iterator<Item = &ExpectedCell> {
        self.expected.iter().filter(|c| c.misprint.is_some())
    }

    pub fn describe_computed(&self) -> String {
        let parts: Vec<String> = self.computed.iter().map(|(l, n)| format!("{n} to {l}")).collect();
        parts.join(", ")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    /// A known inconsistency in the published data; not a failure.
    Warn,
    Fail,
}

#[derive(Clone, Debug)]
pub struct Check {
    pub name: String,
    pub outcome: Outcome,
    pub detail: String,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.outcome {
            Outcome::Pass => "ok",
            Outcome::Warn => "warning",
            Outcome::Fail => "FAILED",
        };
        write!(f, "[{tag}] {}: {}", self.name, self.detail)
    }
}

#[derive(Clone, Debug, Default)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    fn push(&mut self, name: impl Into<String>, ok: bool, detail: impl Into<String>) {
        self.checks.push(Check {
            name: name.into(),
            outcome: if ok { Outcome::Pass } else { Outcome::Fail },
            detail: detail.into(),
        });
    }

    fn warn(&mut self, name: impl Into<String>, detail: impl Into<String>) {
        self.checks.push(Check {
            name: name.into(),
            outcome: Outcome::Warn,
            detail: detail.into(),
        });
    }

    fn result(&mut self, name: &str, r: Result<String>) {
        match r {
            Ok(detail) => self.push(name, true, detail),
            Err(e) => self.push(name, false, e.to_string()),
        }
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn has_failures(&self) -> bool {
        self.checks.iter().any(|c| c.outcome == Outcome::Fail)
    }

    pub fn warnings(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.outcome == Outcome::Warn)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Every gate of the mode's alphabet plus CZ, on every qubit or pair.
fn all_gates(mode: Mode) -> Vec<Gate> {
    let mut gates: Vec<Gate> = (1..=4)
        .flat_map(|q| [Gate::H(q), Gate::P(q), Gate::Z(q), Gate::X(q)])
        .filter(|g| mode == Mode::Complex || g.is_real())
        .collect();
    gates.extend(cnot_gates());
    gates.extend(QubitPair::all().map(|p| Gate::Cz(p.lo, p.hi)));
    gates
}

/// Enumeration-level checks: count, closure, encoding, gate algebra.
pub fn verify_enumeration(a: &Analysis) -> Report {
    let mut r = Report::default();
    let m = a.mode;
    let n = a.set.len();
    let want = reference::total_states(m);
    r.push(format!("{m} state count"), n == want, format!("{n} states (published {want})"));

    r.result(
        &format!("{m} closure"),
        a.set
            .check_closed_under(&m.full_generators())
            .map(|_| format!("closed under {}", m.full_generators().name)),
    );

    let encodings: HashSet<_> = a.set.states().par_iter().map(|s| s.encode()).collect();
    let roundtrip = a.set.states().par_iter().all(|s| {
        s.is_canonical() && s.is_normalized() && ExactState::decode(&s.encode()).ok() == Some(*s)
    });
    r.push(
        format!("{m} canonical encoding"),
        roundtrip && encodings.len() == n,
        format!("{} distinct encodings, round trip {}", encodings.len(), if roundtrip { "exact" } else { "broken" }),
    );

    let gates = all_gates(m);
    let bad = a
        .set
        .states()
        .par_iter()
        .filter(|s| {
            gates.iter().any(|g| {
                let img = g.apply(s);
                let back = g.inverse().iter().fold(img, |acc, h| h.apply(&acc));
                !img.is_normalized() || back != **s || (g.is_real() && s.is_real() && !img.is_real())
            })
        })
        .count();
    r.push(
        format!("{m} gate algebra"),
        bad == 0,
        format!("norm, inverses and realness preserved by {} gates on every state ({bad} violations)", gates.len()),
    );
    r
}

/// Orbit-level checks: sizes, entropies, anchors.
pub fn verify_orbits(a: &Analysis) -> Report {
    let mut r = Report::default();
    let m = a.mode;
    let labels: BTreeSet<OrbitLabel> = (0..a.partition.len()).map(|o| a.label_of(o)).collect();
    let want: BTreeSet<OrbitLabel> = reference::all_labels(m).into_iter().collect();
    r.push(
        format!("{m} orbit labels"),
        labels == want,
        format!("{} orbits, {} published", labels.len(), want.len()),
    );
    let bad_sizes: Vec<String> = a
        .partition
        .orbits()
        .iter()
        .filter(|o| reference::orbit_size(&a.label_of(o.id)) != Some(o.size))
        .map(|o| format!("{} has {}", o.name(), o.size))
        .collect();
    r.push(
        format!("{m} orbit sizes"),
        bad_sizes.is_empty(),
        if bad_sizes.is_empty() {
            format!("{:?}", a.partition.size_multiset())
        } else {
            bad_sizes.join("; ")
        },
    );
    let bad_entropy: Vec<String> = a
        .partition
        .orbits()
        .iter()
        .filter(|o| reference::orbit_entropy(&a.label_of(o.id)) != o.entropy)
        .map(|o| format!("{} has {}", o.name(), o.entropy))
        .collect();
    r.push(
        format!("{m} orbit entropies"),
        bad_entropy.is_empty(),
        if bad_entropy.is_empty() {
            "every orbit matches the published entropy".to_string()
        } else {
            bad_entropy.join("; ")
        },
    );
    r.result(
        &format!("{m} entropy constancy"),
        a.partition.check_profiles(&a.set).map(|_| {
            let values: BTreeSet<Entropy> = a.partition.orbits().iter().map(|o| o.entropy).collect();
            let shown: Vec<String> = values.iter().map(Entropy::to_string).collect();
            format!("entropy profile constant on every orbit, flat spectra; values {{{}}}", shown.join(", "))
        }),
    );
    for f in &a.anchors {
        if f.is_inconsistent() {
            r.warn(format!("{m} published representative"), f.to_string());
        }
    }
    let confirmed = a.anchors.iter().filter(|f| !f.is_inconsistent()).count();
    r.push(
        format!("{m} published representatives"),
        true,
        format!("{confirmed} of {} confirmed", a.anchors.len()),
    );
    r
}

/// Census and graph checks.
pub fn verify_transitions(a: &Analysis) -> Report {
    let mut r = Report::default();
    let m = a.mode;
    r.result(
        &format!("{m} census row sums"),
        a.census.check_row_sums(&a.partition).map(|_| "every row sums to its orbit size".into()),
    );
    match cnot_census(&a.set, &a.partition) {
        Ok(cn) => {
            let bad = a.census.mismatched_forms(&cn);
            r.push(
                format!("{m} CZ/CNOT equality"),
                bad.is_empty(),
                format!("CZ(i,j), CNOT(i,j), CNOT(j,i) agree on every orbit ({} mismatches)", bad.len()),
            );
        }
        Err(e) => r.push(format!("{m} CZ/CNOT equality"), false, e.to_string()),
    }
    let n = a.partition.len();
    let asym = QubitPair::all()
        .flat_map(|p| (0..n).flat_map(move |x| (0..n).map(move |y| (p, x, y))))
        .filter(|&(p, x, y)| {
            let g = Gate::Cz(p.lo, p.hi);
            a.census.count(x, g, y) != a.census.count(y, g, x)
        })
        .count();
    r.push(
        format!("{m} census symmetry"),
        asym == 0,
        format!("A->B equals B->A under every CZ ({asym} violations)"),
    );

    let rows = a.compare_census();
    let failed: Vec<&RowComparison> = rows.iter().filter(|row| !row.matches).collect();
    for row in &failed {
        r.push(
            format!("{m} transition table"),
            false,
            format!("{} under CZ{}: computed {}", row.source, row.pair, row.describe_computed()),
        );
    }
    for row in rows.iter().filter(|row| row.matches) {
        for cell in row.misprints() {
            let mp = cell.misprint.as_ref().expect("filtered");
            r.warn(
                format!("{m} transition table"),
                format!(
                    "{} under CZ{}: published \"{}\", computed {} to {} ({})",
                    row.source, row.pair, mp.printed, cell.count, cell.target, mp.reason
                ),
            );
        }
    }
    if failed.is_empty() {
        r.push(
            format!("{m} transition table"),
            true,
            format!("{} rows reproduced", rows.len()),
        );
    }

    let golden: BTreeSet<(String, String)> = reference::diagram_edges(m)
        .into_iter()
        .map(|(x, y)| (x.to_string(), y.to_string()))
        .map(|(x, y)| if x <= y { (x, y) } else { (y, x) })
        .collect();
    let edges = a.graph.named_edges();
    let missing: Vec<_> = golden.difference(&edges).collect();
    let extra: Vec<_> = edges.difference(&golden).collect();
    r.push(
        format!("{m} connectivity diagram"),
        missing.is_empty() && extra.is_empty(),
        format!("{} edges; missing {missing:?}; extra {extra:?}", edges.len()),
    );
    let want = reference::diameter(m);
    r.result(
        &format!("{m} diameter"),
        a.graph.diameter().and_then(|d| {
            if d == want {
                Ok(format!("{d}"))
            } else {
                Err(Error::AmbiguousLabel(format!("diameter {d}, published {want}")))
            }
        }),
    );
    r
}

/// Replays `samples` deterministic state pairs through the connector.
pub fn verify_connect(a: &Analysis, samples: usize) -> Report {
    let mut r = Report::default();
    let m = a.mode;
    let conn = match a.connector() {
        Ok(c) => c,
        Err(e) => {
            r.push(format!("{m} connect"), false, e.to_string());
            return r;
        }
    };
    let n = a.set.len();
    let failures: Vec<String> = (0..samples)
        .into_par_iter()
        .filter_map(|i| {
            let x = a.set.get((i * 7919 + 17) % n);
            let y = a.set.get((i * 104_729 + 1) % n);
            let d = a.graph.distance(a.orbit_of_state(&x)?, a.orbit_of_state(&y)?)?;
            match conn.connect(&x, &y) {
                Ok(c) if c.apply(&x) == y && c.cnot_count() <= d => None,
                Ok(c) => Some(format!("{x} -> {y}: circuit {c} fails")),
                Err(e) => Some(e.to_string()),
            }
        })
        .collect();
    r.push(
        format!("{m} connect"),
        failures.is_empty(),
        if failures.is_empty() {
            format!("{samples} pairs replay exactly within the orbit-graph distance")
        } else {
            failures.join("; ")
        },
    );
    r
}

pub fn verify_populations(a: &Analysis) -> Report {
    let mut r = Report::default();
    let m = a.mode;
    match population_census(&a.set) {
        Ok(pc) => {
            let by_size = pc.by_size();
            let affine = pc.non_affine().is_empty();
            match m {
                Mode::Complex => {
                    let want = reference::population_counts();
                    r.push(
                        "complex populations",
                        by_size == want && affine,
                        format!("uniform; {by_size:?}, total {}; all affine: {affine}", pc.total()),
                    );
                }
                Mode::Real => r.push(
                    "real populations (not tabulated in the paper)",
                    affine,
                    format!("uniform; {by_size:?}, total {}; all affine: {affine}", pc.total()),
                ),
            }
        }
        Err(e) => r.push(format!("{m} populations"), false, e.to_string()),
    }
    r
}

/// Complex orbit containing each real orbit.
pub fn refinement(complex: &Analysis, real: &Analysis) -> Result<BTreeMap<OrbitLabel, OrbitLabel>> {
    let mut map = BTreeMap::new();
    for o in real.partition.orbits() {
        let targets: BTreeSet<usize> = real
            .partition
            .members(o.id)
            .map(|i| {
                complex
                    .orbit_of_state(&real.set.get(i))
                    .ok_or_else(|| Error::NotEnumerated(real.set.get(i).to_string()))
            })
            .collect::<Result<_>>()?;
        if targets.len() != 1 {
            return Err(Error::AmbiguousLabel(format!("{} meets {} complex orbits", o.name(), targets.len())));
        }
        let c = *targets.iter().next().expect("one target");
        map.insert(real.label_of(o.id), complex.label_of(c));
    }
    Ok(map)
}

pub fn verify_refinement(complex: &Analysis, real: &Analysis) -> Report {
    let mut r = Report::default();
    match refinement(complex, real) {
        Ok(map) => {
            let mut pieces: BTreeMap<OrbitLabel, usize> = BTreeMap::new();
            let mut consistent = true;
            for (rl, cl) in &map {
                *pieces.entry(*cl).or_insert(0) += 1;
                consistent &= rl.family.unhatted() == cl.family;
            }
            let expected = |f: &Family| match f {
                Family::V(_) | Family::W => 2,
                Family::X(_) => 3,
                _ => 1,
            };
            let ok = consistent
                && pieces.len() == complex.partition.len()
                && pieces.iter().all(|(l, &k)| k == expected(&l.family));
            let shown: Vec<String> = pieces.iter().map(|(l, k)| format!("{l}:{k}")).collect();
            r.push("real refinement", ok, shown.join(" "));
        }
        Err(e) => r.push("real refinement", false, e.to_string()),
    }
    r
}

/// All checks for one mode.
pub fn verify(a: &Analysis, connect_samples: usize) -> Report {
    let mut r = verify_enumeration(a);
    r.extend(verify_orbits(a));
    r.extend(verify_transitions(a));
    r.extend(verify_connect(a, connect_samples));
    r.extend(verify_populations(a));
    r
}
