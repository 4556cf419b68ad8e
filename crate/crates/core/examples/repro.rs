//! Re-derives the worked examples and prints each record as JSON.

use hstar::report::{repro, verify_record};

fn main() {
    for record in repro() {
        assert!(verify_record(&record).unwrap());
        println!("{}", serde_json::to_string_pretty(&record).unwrap());
    }
}
