//! Counts of topologies on small ground sets, labeled and up to
//! homeomorphism, and canonical forms of the three-point classes.

use hstar::atlas::{canonical_form, enumerate_topologies};

fn main() {
    for n in 1..=5 {
        let labeled = enumerate_topologies(n, false).unwrap().len();
        let classes = enumerate_topologies(n, true).unwrap().len();
        println!("n = {n}: {labeled:>5} labeled, {classes:>3} up to homeomorphism");
    }
    println!();
    for space in enumerate_topologies(3, true).unwrap() {
        let form: Vec<String> = canonical_form(&space).iter().map(|b| format!("{b:02x}")).collect();
        println!("{:<60} {}", format!("{space:?}"), form.join(""));
    }
}
