//! Named spaces used as regression fixtures.

use crate::space::{validate_topology, FiniteSpace};
use crate::subset::Subset;

fn build(n: usize, opens: &[&[usize]]) -> FiniteSpace {
    let family: Vec<Subset> = opens
        .iter()
        .map(|pts| Subset::from_points(n, pts.iter().copied()))
        .collect();
    validate_topology(n, &family).expect("fixture is a topology")
}

/// `X = {p,q,r,s}`, opens `∅, {p}, {q}, {p,q}, {p,q,r}, X`.
pub fn e1() -> FiniteSpace {
    build(4, &[&[], &[0], &[1], &[0, 1], &[0, 1, 2], &[0, 1, 2, 3]])
}

/// `X = {p,q,r,s,t}`, opens generated by `{p}, {s}, {t}` plus `X`.
pub fn e2() -> FiniteSpace {
    build(
        5,
        &[
            &[],
            &[0],
            &[3],
            &[4],
            &[0, 3],
            &[0, 4],
            &[3, 4],
            &[0, 3, 4],
            &[0, 1, 2, 3, 4],
        ],
    )
}

/// `X = {p,q,r,s}`, the partition topology of `{p} | {q} | {r,s}`.
pub fn e3() -> FiniteSpace {
    build(
        4,
        &[
            &[],
            &[0],
            &[1],
            &[0, 1],
            &[2, 3],
            &[0, 2, 3],
            &[1, 2, 3],
            &[0, 1, 2, 3],
        ],
    )
}
