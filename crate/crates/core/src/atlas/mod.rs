//! Exhaustive enumeration of small spaces and maps, theorem audits and
//! implication mining.

mod audit;
mod canonical;
mod enumerate;
mod mine;

use std::sync::Arc;

pub use audit::{
    audit_theorem, hierarchy_edges, verify_witness, AuditReport, Bounds, Shape, TheoremId, UniverseSummary, Witness,
    WitnessError, SCHEMA_VERSION,
};
pub use canonical::{canonical_form, canonical_relabeling, permutations};
pub use enumerate::enumerate_topologies;
pub use mine::{find_witness, mine_implications, Edge, EdgeStatus, ImplicationLattice, QueryFlag, SubsetWitness};

use crate::ladder::Ladder;
use crate::maps::{MapPropertyId, SpaceMap};

/// No enumeration ever goes beyond this many points.
pub const HARD_MAX_N: usize = 6;
/// Default ceiling for audits and mining; `HSTAR_MAX_N` can only lower it.
pub const DEFAULT_MAX_N: usize = 5;
pub const MAX_N_ENV: &str = "HSTAR_MAX_N";

/// The ground-size ceiling for enumeration workflows in this process.
pub fn enumeration_cap() -> usize {
    let env = std::env::var(MAX_N_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok());
    match env {
        Some(v) => v.clamp(1, DEFAULT_MAX_N),
        None => DEFAULT_MAX_N,
    }
}

/// Ladders for every labeled topology on `n` points (`1 ≤ n ≤ HARD_MAX_N`),
/// built once per process and shared.
pub fn labeled_universe(n: usize) -> &'static [Arc<Ladder>] {
    assert!((1..=HARD_MAX_N).contains(&n), "ground size {n} outside 1..={HARD_MAX_N}");
    enumerate::universe(n)
}

/// Every total function from `x` to `y` in lexicographic table order, keeping
/// those with all of `filter`'s properties.
pub fn enumerate_maps<'a>(
    x: &Arc<Ladder>,
    y: &Arc<Ladder>,
    filter: &'a [MapPropertyId],
) -> impl Iterator<Item = SpaceMap> + 'a {
    let (x, y) = (x.clone(), y.clone());
    enumerate::all_tables(x.n(), y.n()).filter_map(move |table| {
        let m = SpaceMap::new(x.clone(), y.clone(), table).expect("generated table is valid");
        filter.iter().all(|&p| m.check(p)).then_some(m)
    })
}
