//! Properties of a map from the four-point space onto the Sierpinski space,
//! and both sides of each characterization.

use std::sync::Arc;

use hstar::maps::{characterization_check, Characterization};
use hstar::{fixtures, FiniteSpace, Ladder, MapPropertyId, SpaceMap};

fn main() {
    let x = Arc::new(Ladder::new(fixtures::e1()).unwrap());
    let y = Arc::new(Ladder::new(FiniteSpace::sierpinski()).unwrap());
    // p, q go to the open point; r, s to the closed one
    let phi = SpaceMap::new(x, y, vec![0, 0, 1, 1]).unwrap();

    for &p in MapPropertyId::ALL {
        println!("{:<24} {}", p.name(), phi.check(p));
    }
    println!();
    for c in Characterization::ALL {
        match characterization_check(&phi, c) {
            Ok((lhs, rhs)) => println!("{:<14} lhs {lhs:<5} rhs {rhs}", c.tag()),
            Err(e) => println!("{:<14} {e}", c.tag()),
        }
    }
}
