//! Class membership of {r} in the four-point space, and its derived closures.

use hstar::report::LabeledSpace;
use hstar::{fixtures, ClosureOpId, Ladder};

fn main() {
    let space = LabeledSpace::with_default_labels(fixtures::e1());
    let ladder = Ladder::new(space.space.clone()).expect("four points");
    let r = space.subset_from_labels(&["r"]).unwrap();

    println!("{:?}", space.space);
    println!("{} belongs to:", space.show(r));
    for class in ladder.classify(r).members() {
        println!("  {class}");
    }
    for op in ClosureOpId::ALL {
        println!(
            "{}({}) = {}   {}({}) = {}",
            op.name(),
            space.show(r),
            space.show(ladder.derived_closure(r, op)),
            op.interior_name(),
            space.show(r),
            space.show(ladder.derived_interior(r, op)),
        );
    }
}
