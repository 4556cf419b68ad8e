use thiserror::Error;

use crate::subset::Subset;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TopologyError {
    #[error("ground set must have at least one point")]
    EmptyGround,
    #[error("ground size {n} exceeds the supported maximum of {max}")]
    GroundTooLarge { n: usize, max: usize },
    #[error("subset with bit pattern {subset:#b} does not fit a ground set of {n} points")]
    SubsetOutOfRange { subset: u64, n: usize },
    #[error("family must contain both the empty set and the whole space")]
    MissingEmptyOrFull,
    #[error("family is not closed under union: {0} ∪ {1} is missing")]
    NotClosedUnderUnion(Subset, Subset),
    #[error("family is not closed under intersection: {0} ∩ {1} is missing")]
    NotClosedUnderIntersection(Subset, Subset),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MapError {
    #[error("map table has {got} entries but the domain has {expected} points")]
    TableLength { expected: usize, got: usize },
    #[error("domain point {point} maps to {image}, outside a codomain of {codomain} points")]
    ImageOutOfRange {
        point: usize,
        image: usize,
        codomain: usize,
    },
    #[error("codomain of the first map is not the domain of the second")]
    DomainMismatch,
    #[error("precondition not met: {0}")]
    PreconditionUnmet(&'static str),
}
