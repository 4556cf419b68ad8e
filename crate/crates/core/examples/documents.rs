//! Reading a space document with custom labels, and the errors bad ones give.

use hstar::report::{parse_space, print_space};

fn main() {
    let text = r#"{ "points": ["a", "b", "c"], "opens": [[], ["a"], ["a", "b"], ["a", "b", "c"]] }"#;
    let space = parse_space(text).unwrap();
    println!("{}", print_space(&space));

    for bad in [
        r#"{ "points": ["a", "a"], "opens": [] }"#,
        r#"{ "points": ["a", "b"], "opens": [[], ["c"]] }"#,
        r#"{ "points": ["a", "b"], "opens": [[], ["a"], ["b"]] }"#,
        r#"{ "points": ["a", "b"], "opens": [[], ["a"], ["b"], ["a", "b"]"#,
    ] {
        println!("{}", parse_space(bad).unwrap_err());
    }
}
