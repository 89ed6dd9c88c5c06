//! Entangling-gate census between orbits, the orbit graph, and circuit
//! synthesis between states.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::closure::{closure_with, ClosureOptions, StateSet};
use crate::error::{Error, Result};
use crate::exact_state::ExactState;
use crate::gates::{cnot_gates, cz_gates, Circuit, Gate, GeneratorSet, Mode, QubitPair};
use crate::orbits::OrbitPartition;

const NO_WITNESS: u32 = u32::MAX;

/// For each (source orbit, gate, target orbit): how many members of the
/// source orbit the gate sends into the target, and the first such member in
/// canonical order.
#[derive(Clone, Debug)]
pub struct TransitionCensus {
    gates: Vec<Gate>,
    orbits: usize,
    counts: Vec<u64>,
    witnesses: Vec<u32>,
}

impl TransitionCensus {
    #[inline]
    fn slot(&self, orbit: usize, gate: usize, target: usize) -> usize {
        (orbit * self.gates.len() + gate) * self.orbits + target
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    pub fn num_orbits(&self) -> usize {
        self.orbits
    }

    fn gate_index(&self, gate: Gate) -> Option<usize> {
        self.gates.iter().position(|&g| g == gate)
    }

    /// Zero if `gate` was not part of the census.
    pub fn count(&self, orbit: usize, gate: Gate, target: usize) -> u64 {
        self.gate_index(gate)
            .map_or(0, |g| self.counts[self.slot(orbit, g, target)])
    }

    /// Nonzero targets of `orbit` under `gate`, by orbit id.
    pub fn row(&self, orbit: usize, gate: Gate) -> BTreeMap<usize, u64> {
        let Some(g) = self.gate_index(gate) else {
            return BTreeMap::new();
        };
        (0..self.orbits)
            .filter_map(|t| {
                let n = self.counts[self.slot(orbit, g, t)];
                (n > 0).then_some((t, n))
            })
            .collect()
    }

    /// Index in the state set of the first member of `orbit` that `gate`
    /// sends into `target`.
    pub fn witness(&self, orbit: usize, gate: Gate, target: usize) -> Option<usize> {
        let g = self.gate_index(gate)?;
        let w = self.witnesses[self.slot(orbit, g, target)];
        (w != NO_WITNESS).then_some(w as usize)
    }

    /// Every row sums to its orbit size.
    pub fn check_row_sums(&self, partition: &OrbitPartition) -> Result<()> {
        for o in 0..self.orbits {
            for (gi, g) in self.gates.iter().enumerate() {
                let sum: u64 = (0..self.orbits).map(|t| self.counts[self.slot(o, gi, t)]).sum();
                if sum as usize != partition.orbit(o).size {
                    return Err(Error::NotClosed {
                        gate: format!("{g} on {}: row sums to {sum}", partition.orbit(o).name()),
                    });
                }
            }
        }
        Ok(())
    }

    /// Pairs `(gate, other)` whose rows differ on some orbit.
    pub fn mismatched_forms(&self, other: &TransitionCensus) -> Vec<(Gate, Gate, usize)> {
        let mut out = Vec::new();
        for &g in &self.gates {
            for &h in &other.gates {
                if g.pair() != h.pair() {
                    continue;
                }
                for o in 0..self.orbits {
                    if self.row(o, g) != other.row(o, h) {
                        out.push((g, h, o));
                    }
                }
            }
        }
        out
    }

    /// TSV rows `orbit  gate  target  count` with orbit names.
    pub fn to_tsv(&self, partition: &OrbitPartition) -> String {
        let mut out = String::from("orbit\tgate\ttarget\tcount\n");
        for o in 0..self.orbits {
            for &g in &self.gates {
                for (t, n) in self.row(o, g) {
                    let _ = writeln!(
                        out,
                        "{}\t{g}\t{}\t{n}",
                        partition.orbit(o).name(),
                        partition.orbit(t).name()
                    );
                }
            }
        }
        out
    }
}

/// Tallies, for every state and every gate, the orbit of the image.
pub fn census(set: &StateSet, partition: &OrbitPartition, gates: &[Gate]) -> Result<TransitionCensus> {
    let n = partition.len();
    let cells = n * gates.len() * n;
    let slot = |o: usize, g: usize, t: usize| (o * gates.len() + g) * n + t;
    let empty = || (vec![0u64; cells], vec![NO_WITNESS; cells]);
    let (counts, witnesses) = (0..set.len())
        .into_par_iter()
        .try_fold(empty, |(mut counts, mut wit), i| {
            let s = set.get(i);
            let o = partition.orbit_of(i);
            for (gi, g) in gates.iter().enumerate() {
                let img = g.apply(&s);
                let j = set.index_of(&img).ok_or_else(|| Error::NotClosed { gate: g.to_string() })?;
                let k = slot(o, gi, partition.orbit_of(j));
                counts[k] += 1;
                wit[k] = wit[k].min(i as u32);
            }
            Ok::<_, Error>((counts, wit))
        })
        .try_reduce(empty, |(mut c1, mut w1), (c2, w2)| {
            for k in 0..cells {
                c1[k] += c2[k];
                w1[k] = w1[k].min(w2[k]);
            }
            Ok((c1, w1))
        })?;
    Ok(TransitionCensus {
        gates: gates.to_vec(),
        orbits: n,
        counts,
        witnesses,
    })
}

/// Census over the six CZ pairs.
pub fn cz_census(set: &StateSet, partition: &OrbitPartition) -> Result<TransitionCensus> {
    census(set, partition, &cz_gates())
}

/// Census over the twelve ordered CNOTs.
pub fn cnot_census(set: &StateSet, partition: &OrbitPartition) -> Result<TransitionCensus> {
    census(set, partition, &cnot_gates())
}

/// Orbits joined by an entangling gate.
#[derive(Clone, Debug)]
pub struct OrbitGraph {
    names: Vec<String>,
    /// `(a, b)` with `a < b` → CZ pairs realizing the edge.
    edges: BTreeMap<(usize, usize), BTreeSet<QubitPair>>,
    /// Orbit → CZ pairs mapping some member back into the same orbit.
    self_loops: BTreeMap<usize, BTreeSet<QubitPair>>,
    adjacency: Vec<Vec<usize>>,
}

/// Builds the graph from a census; any gate with a qubit pair contributes.
pub fn build_graph(census: &TransitionCensus, partition: &OrbitPartition) -> OrbitGraph {
    let n = census.num_orbits();
    let mut edges: BTreeMap<(usize, usize), BTreeSet<QubitPair>> = BTreeMap::new();
    let mut self_loops: BTreeMap<usize, BTreeSet<QubitPair>> = BTreeMap::new();
    for o in 0..n {
        for &g in census.gates() {
            let Some(pair) = g.pair() else { continue };
            for t in census.row(o, g).into_keys() {
                if t == o {
                    self_loops.entry(o).or_default().insert(pair);
                } else {
                    edges.entry((o.min(t), o.max(t))).or_default().insert(pair);
                }
            }
        }
    }
    let mut adjacency = vec![Vec::new(); n];
    for &(a, b) in edges.keys() {
        adjacency[a].push(b);
        adjacency[b].push(a);
    }
    for adj in &mut adjacency {
        adj.sort_unstable();
    }
    OrbitGraph {
        names: partition.orbits().iter().map(|o| o.name()).collect(),
        edges,
        self_loops,
        adjacency,
    }
}

#[derive(Serialize)]
struct JsonEdge<'a> {
    source: &'a str,
    target: &'a str,
    pairs: Vec<String>,
}

#[derive(Serialize)]
struct JsonGraph<'a> {
    nodes: &'a [String],
    edges: Vec<JsonEdge<'a>>,
    self_loops: BTreeMap<&'a str, Vec<String>>,
    diameter: Option<usize>,
}

impl OrbitGraph {
    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, node: usize) -> &str {
        &self.names[node]
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, &BTreeSet<QubitPair>)> {
        self.edges.iter().map(|(&(a, b), p)| (a, b, p))
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.contains_key(&(a.min(b), a.max(b)))
    }

    pub fn neighbors(&self, node: usize) -> &[usize] {
        &self.adjacency[node]
    }

    pub fn self_loop_pairs(&self, node: usize) -> Option<&BTreeSet<QubitPair>> {
        self.self_loops.get(&node)
    }

    /// Edges as sorted name pairs.
    pub fn named_edges(&self) -> BTreeSet<(String, String)> {
        self.edges
            .keys()
            .map(|&(a, b)| {
                let (x, y) = (self.names[a].clone(), self.names[b].clone());
                if x <= y {
                    (x, y)
                } else {
                    (y, x)
                }
            })
            .collect()
    }

    /// BFS distances from `source`; `None` for unreachable nodes.
    pub fn distances(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.len()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].expect("queued nodes have a distance");
            for &v in &self.adjacency[u] {
                if dist[v].is_none() {
                    dist[v] = Some(d + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    pub fn distance(&self, a: usize, b: usize) -> Option<usize> {
        self.distances(a)[b]
    }

    /// Shortest path from `a` to `b`, preferring lower node ids at each step.
    pub fn shortest_path(&self, a: usize, b: usize) -> Option<Vec<usize>> {
        let dist_to_b = self.distances(b);
        dist_to_b[a]?;
        let mut path = vec![a];
        let mut cur = a;
        while cur != b {
            let d = dist_to_b[cur].expect("on a shortest path");
            cur = *self.adjacency[cur]
                .iter()
                .find(|&&v| dist_to_b[v] == Some(d - 1))
                .expect("some neighbor is closer");
            path.push(cur);
        }
        Some(path)
    }

    /// Largest shortest-path length over all node pairs.
    pub fn diameter(&self) -> Result<usize> {
        let mut best = 0;
        for s in 0..self.len() {
            for d in self.distances(s) {
                best = best.max(d.ok_or(Error::Disconnected)?);
            }
        }
        Ok(best)
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph orbits {\n");
        for (i, name) in self.names.iter().enumerate() {
            let _ = writeln!(out, "  n{i} [label=\"{name}\"];");
        }
        for (&(a, b), pairs) in &self.edges {
            let label: Vec<String> = pairs.iter().map(QubitPair::to_string).collect();
            let _ = writeln!(out, "  n{a} -- n{b} [label=\"{}\"];", label.join(","));
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> String {
        let pairs = |s: &BTreeSet<QubitPair>| s.iter().map(QubitPair::to_string).collect::<Vec<_>>();
        let graph = JsonGraph {
            nodes: &self.names,
            edges: self
                .edges
                .iter()
                .map(|(&(a, b), p)| JsonEdge {
                    source: &self.names[a],
                    target: &self.names[b],
                    pairs: pairs(p),
                })
                .collect(),
            self_loops: self
                .self_loops
                .iter()
                .map(|(&o, p)| (self.names[o].as_str(), pairs(p)))
                .collect(),
            diameter: self.diameter().ok(),
        };
        serde_json::to_string_pretty(&graph).expect("graph serializes") + "\n"
    }
}

/// Precomputed indices for state-to-state circuit synthesis.
///
/// A query walks the shortest orbit path. Each hop moves the current state
/// onto the edge witness with local gates, then applies the witness CNOT.
/// Local words come from BFS trees over each orbit rooted at its
/// representative: `rep → cur` inverted, followed by `rep → witness`.
pub struct Connector<'a> {
    mode: Mode,
    set: &'a StateSet,
    partition: &'a OrbitPartition,
    cnots: TransitionCensus,
    graph: OrbitGraph,
    trees: Vec<StateSet>,
}

impl<'a> Connector<'a> {
    pub fn new(mode: Mode, set: &'a StateSet, partition: &'a OrbitPartition) -> Result<Self> {
        let cnots = cnot_census(set, partition)?;
        let graph = build_graph(&cnots, partition);
        let locals: GeneratorSet = mode.local_generators();
        let opts = ClosureOptions {
            capacity: set.len(),
            record_tree: true,
        };
        let trees = partition
            .orbits()
            .par_iter()
            .map(|o| closure_with(&[o.representative], &locals, &opts))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            mode,
            set,
            partition,
            cnots,
            graph,
            trees,
        })
    }

    pub fn graph(&self) -> &OrbitGraph {
        &self.graph
    }

    fn orbit_of(&self, s: &ExactState) -> Result<usize> {
        if self.mode == Mode::Real && !s.is_real() {
            return Err(Error::RealModeViolation(s.to_string()));
        }
        self.partition
            .orbit_of_state(self.set, s)
            .ok_or_else(|| Error::NotEnumerated(s.to_string()))
    }

    /// Local word carrying `from` onto `to`, both in `orbit`.
    fn local_word(&self, orbit: usize, from: &ExactState, to: &ExactState) -> Result<Circuit> {
        let tree = &self.trees[orbit];
        let mut word = tree.word_to(from)?.inverse();
        word.extend(&tree.word_to(to)?);
        Ok(word)
    }

    /// Circuit over the mode's gate alphabet mapping `a` exactly onto `b`,
    /// with one CNOT per hop of the shortest orbit path.
    pub fn connect(&self, a: &ExactState, b: &ExactState) -> Result<Circuit> {
        let (oa, ob) = (self.orbit_of(a)?, self.orbit_of(b)?);
        let path = self.graph.shortest_path(oa, ob).ok_or(Error::Disconnected)?;
        let mut circuit = Circuit::default();
        let mut cur = *a;
        for hop in path.windows(2) {
            let (src, dst) = (hop[0], hop[1]);
            let (gate, w) = self
                .cnots
                .gates()
                .iter()
                .filter_map(|&g| self.cnots.witness(src, g, dst).map(|w| (g, w)))
                .min_by_key(|&(_, w)| w)
                .expect("graph edges have witnesses");
            let w = self.set.get(w);
            circuit.extend(&self.local_word(src, &cur, &w)?);
            circuit.push(gate);
            cur = gate.apply(&w);
        }
        circuit.extend(&self.local_word(ob, &cur, b)?);
        let circuit = circuit.simplify();
        debug_assert_eq!(circuit.apply(a), *b);
        Ok(circuit)
    }
}
