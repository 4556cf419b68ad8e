//! Finite point-set topology engine.
//!
//! The crate builds validated finite topological spaces ([`FiniteSpace`]),
//! computes the full ladder of generalized closed-set classes on them
//! ([`Ladder`]), decides normality variants, checks properties of maps between
//! spaces, and audits implications over every small space by exhaustive
//! enumeration ([`atlas`]). The [`report`] module holds the document format
//! and the command-line front end used by the `hstar` binary.

pub mod atlas;
mod error;
pub mod fixtures;
pub mod ladder;
pub mod maps;
pub mod report;
pub mod separation;
pub mod space;
pub mod subset;

pub use error::{MapError, TopologyError};
pub use ladder::{ClassVector, ClosureOpId, FamilyId, Ladder};
pub use maps::{MapPropertyId, SpaceMap};
pub use separation::NormalityVariant;
pub use space::{validate_topology, FiniteSpace, Regularity};
pub use subset::{Family, Subset};

const LETTERS: [&str; 11] = ["p", "q", "r", "s", "t", "u", "v", "w", "x", "y", "z"];

/// Default display label of a point: `p, q, r, ...`, then `pt11, pt12, ...`.
pub fn point_label(i: usize) -> String {
    match LETTERS.get(i) {
        Some(l) => (*l).to_string(),
        None => format!("pt{i}"),
    }
}
