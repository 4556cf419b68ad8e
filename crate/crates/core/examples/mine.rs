//! Which implications between the closed-type classes survive every subset of
//! every topology on at most four points.

use hstar::atlas::{mine_implications, EdgeStatus};

fn main() {
    let lattice = mine_implications(4).unwrap();
    for e in &lattice.edges {
        if e.status == EdgeStatus::HoldsOnUniverse {
            println!("{} => {}", e.source, e.target);
        }
    }
    let failing = lattice
        .edges
        .iter()
        .filter(|e| e.status == EdgeStatus::FailsWithWitness)
        .count();
    println!("{failing} other ordered pairs fail");
}
