//! First spaces and subsets matching a few flag combinations.

use hstar::atlas::{find_witness, QueryFlag};

fn main() {
    let queries: [&[(&str, bool)]; 4] = [
        &[("H*-closed", true), ("closed", false)],
        &[("rgh-closed", true), ("gh-closed", false)],
        &[("g-normal", true), ("normal", false)],
        &[("H*-normal", true), ("g-normal", false)],
    ];
    for q in queries {
        let query: Vec<(QueryFlag, bool)> = q.iter().map(|&(f, v)| (f.parse().unwrap(), v)).collect();
        let shown: Vec<String> = q.iter().map(|(f, v)| format!("{f}={v}")).collect();
        match find_witness(&query, 1, 5).unwrap() {
            Some(w) => println!("{}: {} in {:?}", shown.join(" "), w.subset, w.space),
            None => println!("{}: none on five points or fewer", shown.join(" ")),
        }
    }
}
