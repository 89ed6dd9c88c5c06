//! Breadth-first closure of seed states under a generator set.
//!
//! Starting from the seeds, every generator is applied to every state of the
//! current frontier; images not seen before form the next frontier. The
//! loop stops when a frontier adds nothing, at which point the collected
//! set is the smallest one containing the seeds and closed under the
//! generators.
//!
//! Frontier expansion runs on the rayon pool, but images are inserted in
//! frontier order and generator order, so the discovery order, the BFS
//! tree, and the final canonically sorted set do not depend on the number
//! of workers.

use std::collections::HashMap;
use std::io::{Read, Write};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exact_state::{ExactState, ENCODED_LEN};
use crate::gates::{Circuit, Gate, GeneratorSet};

pub const DEFAULT_CAPACITY: usize = 1 << 20;

const MAGIC: &[u8; 4] = b"C4SS";
const FORMAT_VERSION: u16 = 1;
const PARALLEL_FRONTIER: usize = 4096;

#[derive(Clone, Debug)]
pub struct ClosureOptions {
    /// Upper bound on the number of states before giving up.
    pub capacity: usize,
    /// Keep one parent edge per state for [`StateSet::word_to`].
    pub record_tree: bool,
}

impl Default for ClosureOptions {
    fn default() -> Self {
        Self {
            capacity: DEFAULT_CAPACITY,
            record_tree: false,
        }
    }
}

impl ClosureOptions {
    pub fn with_tree(mut self) -> Self {
        self.record_tree = true;
        self
    }
}

/// Parent of a state in the BFS tree: `state = generators[gate](parent)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TreeEdge {
    pub parent: u32,
    pub gate: u16,
}

/// A deduplicated set of states in canonical order.
#[derive(Clone, Debug)]
pub struct StateSet {
    generators: GeneratorSet,
    seeds: Vec<ExactState>,
    states: Vec<ExactState>,
    index: HashMap<ExactState, u32>,
    tree: Option<Vec<Option<TreeEdge>>>,
}

/// `closure` with default options.
pub fn closure(seeds: &[ExactState], generators: &GeneratorSet) -> Result<StateSet> {
    closure_with(seeds, generators, &ClosureOptions::default())
}

pub fn closure_with(
    seeds: &[ExactState],
    generators: &GeneratorSet,
    opts: &ClosureOptions,
) -> Result<StateSet> {
    let mut found: Vec<ExactState> = Vec::new();
    let mut parents: Vec<Option<TreeEdge>> = Vec::new();
    let mut index: HashMap<ExactState, u32> = HashMap::new();

    for s in seeds {
        if !index.contains_key(s) {
            index.insert(*s, found.len() as u32);
            found.push(*s);
            parents.push(None);
        }
    }
    if found.len() > opts.capacity {
        return Err(Error::CapacityExceeded {
            capacity: opts.capacity,
        });
    }

    let gates = &generators.gates;
    let mut frontier = 0..found.len();
    while !frontier.is_empty() && !gates.is_empty() {
        let slice = &found[frontier.clone()];
        let expand = |s: &ExactState| {
            let s = *s;
            gates.iter().map(move |g| g.apply(&s))
        };
        let images: Vec<ExactState> = if slice.len() >= PARALLEL_FRONTIER {
            slice.par_iter().flat_map_iter(expand).collect()
        } else {
            slice.iter().flat_map(expand).collect()
        };

        let next_start = found.len();
        for (n, img) in images.into_iter().enumerate() {
            if index.contains_key(&img) {
                continue;
            }
            if found.len() >= opts.capacity {
                return Err(Error::CapacityExceeded {
                    capacity: opts.capacity,
                });
            }
            index.insert(img, found.len() as u32);
            found.push(img);
            parents.push(Some(TreeEdge {
                parent: (frontier.start + n / gates.len()) as u32,
                gate: (n % gates.len()) as u16,
            }));
        }
        frontier = next_start..found.len();
    }

    // Re-index in canonical order.
    let mut order: Vec<u32> = (0..found.len() as u32).collect();
    order.par_sort_unstable_by(|&a, &b| found[a as usize].cmp(&found[b as usize]));
    let mut rank = vec![0u32; found.len()];
    for (new, &old) in order.iter().enumerate() {
        rank[old as usize] = new as u32;
    }
    let states: Vec<ExactState> = order.iter().map(|&old| found[old as usize]).collect();
    let tree = opts.record_tree.then(|| {
        order
            .iter()
            .map(|&old| {
                parents[old as usize].map(|e| TreeEdge {
                    parent: rank[e.parent as usize],
                    gate: e.gate,
                })
            })
            .collect()
    });
    for v in index.values_mut() {
        *v = rank[*v as usize];
    }

    Ok(StateSet {
        generators: generators.clone(),
        seeds: seeds.to_vec(),
        states,
        index,
        tree,
    })
}

impl StateSet {
    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn states(&self) -> &[ExactState] {
        &self.states
    }

    pub fn get(&self, idx: usize) -> ExactState {
        self.states[idx]
    }

    pub fn iter(&self) -> impl Iterator<Item = &ExactState> {
        self.states.iter()
    }

    pub fn index_of(&self, s: &ExactState) -> Option<usize> {
        self.index.get(s).map(|&i| i as usize)
    }

    pub fn contains(&self, s: &ExactState) -> bool {
        self.index.contains_key(s)
    }

    pub fn generators(&self) -> &GeneratorSet {
        &self.generators
    }

    pub fn seeds(&self) -> &[ExactState] {
        &self.seeds
    }

    pub fn has_tree(&self) -> bool {
        self.tree.is_some()
    }

    /// Parent edge of the state at `idx`, `None` for seeds.
    pub fn tree_edge(&self, idx: usize) -> Option<TreeEdge> {
        self.tree.as_ref().and_then(|t| t[idx])
    }

    /// Circuit over the generators mapping the seed that discovered `target`
    /// onto `target` exactly. Its length is the BFS depth of `target`.
    pub fn word_to(&self, target: &ExactState) -> Result<Circuit> {
        let tree = self
            .tree
            .as_ref()
            .ok_or_else(|| Error::Format("state set was built without a BFS tree".into()))?;
        let mut idx = self
            .index_of(target)
            .ok_or_else(|| Error::NotInSet(target.to_string()))?;
        let mut gates: Vec<Gate> = Vec::new();
        while let Some(edge) = tree[idx] {
            gates.push(self.generators.gates[edge.gate as usize]);
            idx = edge.parent as usize;
        }
        gates.reverse();
        Ok(Circuit::new(gates))
    }

    /// Seed at the root of `target`'s BFS branch.
    pub fn root_of(&self, target: &ExactState) -> Option<ExactState> {
        let tree = self.tree.as_ref()?;
        let mut idx = self.index_of(target)?;
        while let Some(edge) = tree[idx] {
            idx = edge.parent as usize;
        }
        Some(self.states[idx])
    }

    /// Checks that every generator maps every member back into the set.
    pub fn check_closed_under(&self, generators: &GeneratorSet) -> Result<()> {
        self.check_closed_on(generators, &self.states)
    }

    /// Fixed-point check restricted to `members`.
    pub fn check_closed_on(&self, generators: &GeneratorSet, members: &[ExactState]) -> Result<()> {
        members.par_iter().try_for_each(|s| {
            for g in &generators.gates {
                if !self.contains(&g.apply(s)) {
                    return Err(Error::NotClosed { gate: g.to_string() });
                }
            }
            Ok(())
        })
    }

    /// Writes the set: header, then fixed-width state records in canonical
    /// order. The BFS tree is not persisted.
    pub fn write_to(&self, mut w: impl Write) -> Result<()> {
        w.write_all(MAGIC)?;
        w.write_all(&FORMAT_VERSION.to_le_bytes())?;
        let name = self.generators.name.as_bytes();
        let name_len = u8::try_from(name.len())
            .map_err(|_| Error::Format("generator set name longer than 255 bytes".into()))?;
        w.write_all(&[name_len])?;
        w.write_all(name)?;
        w.write_all(&(self.generators.gates.len() as u16).to_le_bytes())?;
        for g in &self.generators.gates {
            let text = g.to_string();
            w.write_all(&[text.len() as u8])?;
            w.write_all(text.as_bytes())?;
        }
        w.write_all(&(self.seeds.len() as u16).to_le_bytes())?;
        for s in &self.seeds {
            w.write_all(&s.encode())?;
        }
        w.write_all(&(self.states.len() as u32).to_le_bytes())?;
        for s in &self.states {
            w.write_all(&s.encode())?;
        }
        Ok(())
    }

    pub fn read_from(mut r: impl Read) -> Result<Self> {
        let mut magic = [0u8; 4];
        r.read_exact(&mut magic)?;
        if &magic != MAGIC {
            return Err(Error::Format("bad magic".into()));
        }
        let version = u16::from_le_bytes(read_array(&mut r)?);
        if version != FORMAT_VERSION {
            return Err(Error::Format(format!("unsupported version {version}")));
        }
        let [name_len] = read_array::<1>(&mut r)?;
        let name = read_string(&mut r, name_len as usize)?;
        let gate_count = u16::from_le_bytes(read_array(&mut r)?);
        let mut gates = Vec::with_capacity(gate_count as usize);
        for _ in 0..gate_count {
            let [len] = read_array::<1>(&mut r)?;
            gates.push(read_string(&mut r, len as usize)?.parse::<Gate>()?);
        }
        let seed_count = u16::from_le_bytes(read_array(&mut r)?);
        let mut seeds = Vec::with_capacity(seed_count as usize);
        for _ in 0..seed_count {
            seeds.push(ExactState::decode(&read_array::<ENCODED_LEN>(&mut r)?)?);
        }
        let count = u32::from_le_bytes(read_array(&mut r)?) as usize;
        let mut states = Vec::with_capacity(count);
        let mut index = HashMap::with_capacity(count);
        for i in 0..count {
            let s = ExactState::decode(&read_array::<ENCODED_LEN>(&mut r)?)?;
            if let Some(prev) = states.last() {
                if *prev >= s {
                    return Err(Error::Format(format!("record {i} is out of canonical order")));
                }
            }
            index.insert(s, i as u32);
            states.push(s);
        }
        let mut rest = [0u8; 1];
        if r.read(&mut rest)? != 0 {
            return Err(Error::Format("trailing bytes after records".into()));
        }
        Ok(StateSet {
            generators: GeneratorSet { name, gates },
            seeds,
            states,
            index,
            tree: None,
        })
    }
}

fn read_array<const N: usize>(r: &mut impl Read) -> Result<[u8; N]> {
    let mut buf = [0u8; N];
    r.read_exact(&mut buf)
        .map_err(|e| Error::Format(format!("truncated file: {e}")))?;
    Ok(buf)
}

fn read_string(r: &mut impl Read, len: usize) -> Result<String> {
    let mut buf = vec![0u8; len];
    r.read_exact(&mut buf)
        .map_err(|e| Error::Format(format!("truncated file: {e}")))?;
    String::from_utf8(buf).map_err(|_| Error::Format("name is not UTF-8".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gates::Gate;

    #[test]
    fn phase_fixes_zero() {
        let set = closure(&[ExactState::zero()], &GeneratorSet::new("P1", vec![Gate::P(1)])).unwrap();
        assert_eq!(set.len(), 1);
    }

    #[test]
    fn empty_generators_keep_seeds() {
        let set = closure(&[ExactState::zero()], &GeneratorSet::new("none", vec![])).unwrap();
        assert_eq!(set.states(), &[ExactState::zero()]);
    }

    #[test]
    fn single_qubit_orbit() {
        // six single-qubit stabilizer rays, each with eight phases
        let set = closure(
            &[ExactState::zero()],
            &GeneratorSet::new("q1", vec![Gate::H(1), Gate::P(1)]),
        )
        .unwrap();
        assert_eq!(set.len(), 48);
    }

    #[test]
    fn word_to_seed_and_neighbour() {
        let gens = GeneratorSet::local_complex();
        let set = closure_with(&[ExactState::zero()], &gens, &ClosureOptions::default().with_tree()).unwrap();
        assert!(set.word_to(&ExactState::zero()).unwrap().is_empty());
        let target = Gate::H(1).apply(&ExactState::zero());
        let w = set.word_to(&target).unwrap();
        assert_eq!(w.gates, vec![Gate::H(1)]);
        assert_eq!(set.root_of(&target), Some(ExactState::zero()));
        let far = Circuit::new(vec![Gate::H(2), Gate::P(2), Gate::H(3), Gate::P(3), Gate::P(3)])
            .apply(&ExactState::zero());
        assert_eq!(set.word_to(&far).unwrap().apply(&ExactState::zero()), far);
        let ghz = crate::ket::parse_state("1/sqrt2(|0000> + |1111>)").unwrap();
        assert!(matches!(set.word_to(&ghz), Err(Error::NotInSet(_))));
    }

    #[test]
    fn capacity_is_enforced() {
        let opts = ClosureOptions {
            capacity: 100,
            record_tree: false,
        };
        let err = closure_with(&[ExactState::zero()], &GeneratorSet::local_complex(), &opts).unwrap_err();
        assert!(matches!(err, Error::CapacityExceeded { capacity: 100 }));
    }

    #[test]
    fn sorted_and_closed() {
        let gens = GeneratorSet::local_real();
        let set = closure(&[ExactState::zero()], &gens).unwrap();
        assert!(set.states().windows(2).all(|w| w[0] < w[1]));
        set.check_closed_under(&gens).unwrap();
        for (i, s) in set.iter().enumerate() {
            assert_eq!(set.index_of(s), Some(i));
        }
    }

    #[test]
    fn persistence_round_trip() {
        let gens = GeneratorSet::local_real();
        let set = closure(&[ExactState::zero()], &gens).unwrap();
        let mut bytes = Vec::new();
        set.write_to(&mut bytes).unwrap();
        let back = StateSet::read_from(bytes.as_slice()).unwrap();
        assert_eq!(back.states(), set.states());
        assert_eq!(back.generators(), set.generators());
        assert_eq!(back.seeds(), set.seeds());

        let mut again = Vec::new();
        back.write_to(&mut again).unwrap();
        assert_eq!(again, bytes);

        assert!(StateSet::read_from(&bytes[..bytes.len() - 1]).is_err());
        let mut bad = bytes.clone();
        bad[0] = b'X';
        assert!(StateSet::read_from(bad.as_slice()).is_err());
    }
}
