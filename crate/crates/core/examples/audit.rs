//! Audits one statement over every small space or map and prints the report
//! as JSON.
//!
//!     cargo run --example audit -- T2.5 3

use hstar::atlas::{audit_theorem, TheoremId};

fn main() {
    let mut args = std::env::args().skip(1);
    let t: TheoremId = args
        .next()
        .as_deref()
        .unwrap_or("T2.5")
        .parse()
        .expect("a theorem tag such as T2.5");
    let mut bounds = t.default_bounds();
    if let Some(max_n) = args.next() {
        bounds.max_n = max_n.parse().expect("a ground size");
    }
    let report = audit_theorem(t, &bounds).expect("bounds within the cap");
    println!("{}", serde_json::to_string_pretty(&report).unwrap());
}
