//! Space documents, discrepancy records and the command-line front end.

mod cli;
mod document;
mod repro;

pub use cli::run_command;
pub use document::{parse_space, print_space, DocumentError, LabeledSpace, SpaceDocument};
pub use repro::{
    repro, verify_record, DiscrepancyRecord, Evidence, EvidenceError, Observation, Verdict,
    OPENS_ARE_HSTAR_OPEN,
};
