//! Generation of every topology on a small ground set.
//!
//! A finite topology is determined by the minimal open neighbourhood `U_x` of
//! each point, and an assignment `x ↦ U_x` comes from a topology exactly when
//! `x ∈ U_x` and `y ∈ U_x ⇒ U_y ⊆ U_x`. The generator backtracks over those
//! assignments one point at a time, checking each new neighbourhood against
//! the ones already chosen, so every topology is produced exactly once.

use std::collections::HashSet;
use std::sync::{Arc, OnceLock};

use rayon::prelude::*;

use crate::error::TopologyError;
use crate::ladder::Ladder;
use crate::space::FiniteSpace;
use crate::subset::Subset;

use super::canonical::canonical_form;
use super::HARD_MAX_N;

/// Every topology on `n` points, ordered by their sorted open families.
///
/// With `up_to_homeo`, only the first space of each homeomorphism class is
/// kept.
pub fn enumerate_topologies(n: usize, up_to_homeo: bool) -> Result<Vec<FiniteSpace>, TopologyError> {
    if n == 0 {
        return Err(TopologyError::EmptyGround);
    }
    if n > HARD_MAX_N {
        return Err(TopologyError::GroundTooLarge { n, max: HARD_MAX_N });
    }
    let labeled = labeled_topologies(n);
    if !up_to_homeo {
        return Ok(labeled.to_vec());
    }
    let mut seen = HashSet::new();
    Ok(labeled
        .iter()
        .filter(|s| seen.insert(canonical_form(s)))
        .cloned()
        .collect())
}

fn labeled_topologies(n: usize) -> &'static [FiniteSpace] {
    static CACHE: [OnceLock<Vec<FiniteSpace>>; HARD_MAX_N + 1] =
        [const { OnceLock::new() }; HARD_MAX_N + 1];
    CACHE[n].get_or_init(|| generate(n))
}

/// Ladders for every labeled topology on `n` points, shared process-wide.
pub(crate) fn universe(n: usize) -> &'static [Arc<Ladder>] {
    static CACHE: [OnceLock<Vec<Arc<Ladder>>>; HARD_MAX_N + 1] =
        [const { OnceLock::new() }; HARD_MAX_N + 1];
    CACHE[n].get_or_init(|| {
        labeled_topologies(n)
            .par_iter()
            .map(|s| Arc::new(Ladder::new(s.clone()).expect("enumerated spaces fit the ladder")))
            .collect()
    })
}

fn generate(n: usize) -> Vec<FiniteSpace> {
    let mut hoods = vec![0u64; n];
    let mut out = Vec::new();
    assign(n, 0, &mut hoods, &mut out);
    out.sort_unstable();
    out
}

fn assign(n: usize, x: usize, hoods: &mut [u64], out: &mut Vec<FiniteSpace>) {
    if x == n {
        out.push(space_from_hoods(n, hoods));
        return;
    }
    let me = 1u64 << x;
    let others = crate::subset::full_mask(n) & !me;
    // every superset of {x}
    let mut extra = others;
    loop {
        let u = me | extra;
        let consistent = (0..x).all(|y| {
            let uy = hoods[y];
            (u & (1 << y) == 0 || uy & !u == 0) && (uy & me == 0 || u & !uy == 0)
        });
        if consistent {
            hoods[x] = u;
            assign(n, x + 1, hoods, out);
        }
        if extra == 0 {
            break;
        }
        extra = (extra - 1) & others;
    }
}

fn space_from_hoods(n: usize, hoods: &[u64]) -> FiniteSpace {
    let opens = Subset::all(n)
        .filter(|a| a.points().all(|x| hoods[x] & !a.bits() == 0))
        .collect();
    FiniteSpace::from_sorted_opens(n, opens)
}

/// Every map table from an `n_from`-point set into an `n_to`-point set, in
/// lexicographic order of the table.
pub(crate) fn all_tables(n_from: usize, n_to: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = (n_to as u64).pow(n_from as u32);
    (0..total).map(move |mut code| {
        let mut table = vec![0; n_from];
        for slot in table.iter_mut().rev() {
            *slot = (code % n_to as u64) as usize;
            code /= n_to as u64;
        }
        table
    })
}
