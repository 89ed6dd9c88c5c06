//! Supports and measurement populations of enumerated states.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::closure::StateSet;
use crate::error::{Error, Result};
use crate::exact_state::{ExactState, DIM};

/// Basis indices with nonzero amplitude, as a bit mask over `0..16`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Support(u16);

impl Support {
    pub fn from_mask(mask: u16) -> Self {
        Support(mask)
    }

    pub fn mask(&self) -> u16 {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn indices(&self) -> Vec<usize> {
        (0..DIM).filter(|b| self.0 & (1 << b) != 0).collect()
    }

    /// True if the support is a coset of a linear subspace of `F₂⁴`, i.e.
    /// closed under `x ⊕ y ⊕ z`.
    pub fn is_affine(&self) -> bool {
        let idx = self.indices();
        idx.iter().all(|&x| {
            idx.iter()
                .all(|&y| idx.iter().all(|&z| self.0 & (1 << (x ^ y ^ z)) != 0))
        })
    }
}

impl fmt::Display for Support {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.indices().iter().map(usize::to_string).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

impl Serialize for Support {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.indices().serialize(s)
    }
}

/// Support of `s`, checking that every supported ket has probability
/// `1/|support|`.
pub fn support(s: &ExactState) -> Result<Support> {
    let sup = Support(s.support_mask());
    let n = sup.len() as u64;
    let total = 1u64 << s.k();
    if n == 0 || !total.is_multiple_of(n) {
        return Err(Error::NonUniform(s.to_string()));
    }
    let each = total / n;
    if sup.indices().iter().any(|&b| s.amp(b).norm() as u64 != each) {
        return Err(Error::NonUniform(s.to_string()));
    }
    Ok(sup)
}

/// Distinct supports of a state set.
#[derive(Clone, Debug)]
pub struct PopulationCensus {
    supports: BTreeSet<Support>,
}

pub fn population_census(set: &StateSet) -> Result<PopulationCensus> {
    let supports = set
        .states()
        .par_iter()
        .map(support)
        .collect::<Result<BTreeSet<_>>>()?;
    Ok(PopulationCensus { supports })
}

impl PopulationCensus {
    pub fn supports(&self) -> &BTreeSet<Support> {
        &self.supports
    }

    pub fn total(&self) -> usize {
        self.supports.len()
    }

    /// Support size → number of distinct supports of that size.
    pub fn by_size(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for s in &self.supports {
            *m.entry(s.len()).or_insert(0) += 1;
        }
        m
    }

    /// Supports that are not affine subspaces.
    pub fn non_affine(&self) -> Vec<Support> {
        self.supports.iter().copied().filter(|s| !s.is_affine()).collect()
    }

    pub fn to_table(&self) -> String {
        let mut out = String::from("size\tcount\n");
        for (size, count) in self.by_size() {
            out.push_str(&format!("{size}\t{count}\n"));
        }
        out.push_str(&format!("total\t{}\n", self.total()));
        out
    }

    pub fn to_json(&self) -> String {
        let supports: Vec<&Support> = self.supports.iter().collect();
        serde_json::to_string(&supports).expect("supports serialize") + "\n"
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ket::parse_state;

    /// Affine subspaces of F₂⁴ by brute force: every span of a point and up
    /// to four directions.
    fn affine_subspaces() -> BTreeSet<u16> {
        let mut out = BTreeSet::new();
        for base in 0..16usize {
            for dirs in 0u32..1 << 16 {
                if dirs.count_ones() > 4 {
                    continue;
                }
                let dirs: Vec<usize> = (0..16).filter(|d| dirs & (1 << d) != 0).collect();
                let mut pts = BTreeSet::from([base]);
                for &d in &dirs {
                    let shifted: Vec<usize> = pts.iter().map(|p| p ^ d).collect();
                    pts.extend(shifted);
                }
                out.insert(pts.iter().fold(0u16, |m, &p| m | 1 << p));
            }
        }
        out
    }

    #[test]
    fn affine_subspace_counts() {
        let mut by_size = BTreeMap::new();
        for m in affine_subspaces() {
            *by_size.entry(m.count_ones()).or_insert(0) += 1;
            assert!(Support(m).is_affine());
        }
        assert_eq!(by_size, BTreeMap::from([(1, 16), (2, 120), (4, 140), (8, 30), (16, 1)]));
    }

    #[test]
    fn non_affine_sets_are_rejected() {
        assert!(!Support(0b0111).is_affine());
        assert!(!Support(0b1110_0000_0000_0001).is_affine());
        assert!(Support(0b1001_0110_0110_1001).is_affine());
    }

    #[test]
    fn supports_of_representatives() {
        assert_eq!(support(&ExactState::zero()).unwrap().indices(), vec![0]);
        let t = parse_state("1/sqrt2(|1110> - |1101>)").unwrap();
        assert_eq!(support(&t).unwrap().indices(), vec![13, 14]);
        let w = parse_state(
            "1/(2sqrt2)(|1110> + |1101> + |1011> - |1000> + |0111> - |0100> - |0010> - |0001>)",
        )
        .unwrap();
        assert_eq!(support(&w).unwrap().len(), 8);
    }

    #[test]
    fn non_uniform_population_is_reported() {
        let s = parse_state("1/2(|0000> + |0001> + (1+i)|0010>)").unwrap();
        assert!(matches!(support(&s), Err(Error::NonUniform(_))));
    }
}
