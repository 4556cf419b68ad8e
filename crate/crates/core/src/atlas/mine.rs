//! Empirical implication lattice between the closed-type classes, and
//! first-witness search for conjunctions of class and normality flags.

use rayon::prelude::*;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::TopologyError;
use crate::ladder::{FamilyId, Ladder};
use crate::report::SpaceDocument;
use crate::separation::{is_normal_variant, NormalityVariant};
use crate::space::FiniteSpace;
use crate::subset::Subset;

use super::enumerate::universe;
use super::enumeration_cap;

/// A space from the labeled enumeration together with one of its subsets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsetWitness {
    /// Position of `space` among the labeled topologies on its ground size.
    pub index: usize,
    pub space: FiniteSpace,
    pub subset: Subset,
}

impl Serialize for SubsetWitness {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let doc = SpaceDocument::from_space(&self.space);
        let mut st = s.serialize_struct("SubsetWitness", 3)?;
        st.serialize_field("index", &self.index)?;
        st.serialize_field("subset", &doc.labels_of(self.subset))?;
        st.serialize_field("space", &doc)?;
        st.end()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum EdgeStatus {
    HoldsOnUniverse,
    FailsWithWitness,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Edge {
    pub source: FamilyId,
    pub target: FamilyId,
    pub status: EdgeStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<SubsetWitness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ImplicationLattice {
    pub n_max: usize,
    pub nodes: Vec<FamilyId>,
    /// One edge per ordered pair of distinct nodes, source-major in node order.
    pub edges: Vec<Edge>,
}

impl ImplicationLattice {
    pub fn edge(&self, source: FamilyId, target: FamilyId) -> Option<&Edge> {
        self.edges
            .iter()
            .find(|e| e.source == source && e.target == target)
    }

    pub fn holds(&self, source: FamilyId, target: FamilyId) -> bool {
        self.edge(source, target)
            .is_some_and(|e| e.status == EdgeStatus::HoldsOnUniverse)
    }
}

/// Ordering key of a (space, subset) pair in enumeration order.
type Position = (usize, usize, u64);

/// Tests every implication between closed-type classes on every subset of
/// every topology with at most `n_max` points (at most the enumeration cap).
pub fn mine_implications(n_max: usize) -> Result<ImplicationLattice, TopologyError> {
    if n_max == 0 {
        return Err(TopologyError::EmptyGround);
    }
    let cap = enumeration_cap();
    if n_max > cap {
        return Err(TopologyError::GroundTooLarge { n: n_max, max: cap });
    }
    let nodes: Vec<FamilyId> = FamilyId::closed_types().collect();
    let k = nodes.len();

    // first failing position per (source, target), over all spaces
    let mut first: Vec<Option<Position>> = vec![None; k * k];
    for n in 1..=n_max {
        let per_space: Vec<Vec<Option<Position>>> = universe(n)
            .par_iter()
            .enumerate()
            .map(|(idx, l)| {
                let flags: Vec<u32> = l
                    .subsets()
                    .map(|a| {
                        nodes
                            .iter()
                            .enumerate()
                            .filter(|(_, &f)| l.contains(f, a))
                            .fold(0u32, |acc, (i, _)| acc | 1 << i)
                    })
                    .collect();
                let mut local = vec![None; k * k];
                for (bits, &fl) in flags.iter().enumerate() {
                    for s in 0..k {
                        if fl & (1 << s) == 0 {
                            continue;
                        }
                        for t in 0..k {
                            if fl & (1 << t) == 0 && local[s * k + t].is_none() {
                                local[s * k + t] = Some((n, idx, bits as u64));
                            }
                        }
                    }
                }
                local
            })
            .collect();
        for local in per_space {
            for (slot, found) in first.iter_mut().zip(local) {
                if slot.is_none() {
                    *slot = found;
                }
            }
        }
    }

    let mut edges = Vec::with_capacity(k * (k - 1));
    for (s, &source) in nodes.iter().enumerate() {
        for (t, &target) in nodes.iter().enumerate() {
            if s == t {
                continue;
            }
            let witness = first[s * k + t].map(|(n, idx, bits)| {
                let space = universe(n)[idx].space().clone();
                SubsetWitness {
                    index: idx,
                    subset: Subset::from_bits(bits, n).expect("in range"),
                    space,
                }
            });
            edges.push(Edge {
                source,
                target,
                status: if witness.is_some() {
                    EdgeStatus::FailsWithWitness
                } else {
                    EdgeStatus::HoldsOnUniverse
                },
                witness,
            });
        }
    }
    Ok(ImplicationLattice {
        n_max,
        nodes,
        edges,
    })
}

/// A flag that a query can pin to true or false.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QueryFlag {
    /// Membership of the subset in a class.
    Class(FamilyId),
    /// A normality variant of the whole space.
    Normality(NormalityVariant),
}

impl std::str::FromStr for QueryFlag {
    type Err = crate::ladder::UnknownTag;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.parse::<NormalityVariant>()
            .map(QueryFlag::Normality)
            .or_else(|_| s.parse::<FamilyId>().map(QueryFlag::Class))
    }
}

/// The first (space, subset) in enumeration order, over ground sizes
/// `min_n..=max_n`, matching every `(flag, wanted)` pair of `query`.
///
/// Space order is the labeled enumeration order and subsets go by bit value,
/// so a query with only normality flags reports the empty subset.
pub fn find_witness(
    query: &[(QueryFlag, bool)],
    min_n: usize,
    max_n: usize,
) -> Result<Option<SubsetWitness>, TopologyError> {
    if min_n == 0 {
        return Err(TopologyError::EmptyGround);
    }
    let cap = enumeration_cap();
    if max_n > cap {
        return Err(TopologyError::GroundTooLarge { n: max_n, max: cap });
    }
    let space_ok = |l: &Ladder| {
        query.iter().all(|&(flag, want)| match flag {
            QueryFlag::Normality(v) => is_normal_variant(l, v) == want,
            QueryFlag::Class(_) => true,
        })
    };
    let subset_ok = |l: &Ladder, a: Subset| {
        query.iter().all(|&(flag, want)| match flag {
            QueryFlag::Class(f) => l.contains(f, a) == want,
            QueryFlag::Normality(_) => true,
        })
    };
    for n in min_n..=max_n {
        let hit = universe(n)
            .par_iter()
            .enumerate()
            .filter_map(|(idx, l)| {
                if !space_ok(l) {
                    return None;
                }
                l.subsets().find(|&a| subset_ok(l, a)).map(|a| (idx, a))
            })
            .min_by_key(|&(idx, _)| idx);
        if let Some((index, subset)) = hit {
            return Ok(Some(SubsetWitness {
                index,
                space: universe(n)[index].space().clone(),
                subset,
            }));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ladder::FamilyId::*;

    #[test]
    fn closed_implies_g_closed_never_fails() {
        let q = [(QueryFlag::Class(Closed), true), (QueryFlag::Class(GClosed), false)];
        assert_eq!(find_witness(&q, 1, 4).unwrap(), None);
    }

    #[test]
    fn witness_satisfies_its_query() {
        let q = [(QueryFlag::Class(HStarClosed), true), (QueryFlag::Class(Closed), false)];
        let w = find_witness(&q, 1, 4).unwrap().expect("exists at four points");
        let l = Ladder::new(w.space.clone()).unwrap();
        assert!(l.contains(HStarClosed, w.subset));
        assert!(!l.contains(Closed, w.subset));
    }

    #[test]
    fn lattice_has_every_ordered_pair() {
        let lat = mine_implications(2).unwrap();
        assert_eq!(lat.nodes.len(), 16);
        assert_eq!(lat.edges.len(), 16 * 15);
        assert!(lat.holds(Closed, GClosed));
    }

    #[test]
    fn failing_edges_carry_valid_witnesses() {
        let lat = mine_implications(3).unwrap();
        for e in &lat.edges {
            if let Some(w) = &e.witness {
                let l = Ladder::new(w.space.clone()).unwrap();
                assert!(l.contains(e.source, w.subset) && !l.contains(e.target, w.subset));
            }
        }
    }

    #[test]
    fn query_flags_parse() {
        assert_eq!("g-normal".parse::<QueryFlag>().unwrap(), QueryFlag::Normality(NormalityVariant::GNormal));
        assert_eq!("H*-closed".parse::<QueryFlag>().unwrap(), QueryFlag::Class(HStarClosed));
    }
}
