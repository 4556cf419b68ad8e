//! Normality variants on a normal partition space and on a space that is not
//! normal, with the pair of closed sets that cannot be separated.

use hstar::separation::{first_inseparable_pair, hstar_normal_characterization, HStarForm};
use hstar::{fixtures, validate_topology, FiniteSpace, Ladder, NormalityVariant, Subset};

fn report(name: &str, space: FiniteSpace) {
    let ladder = Ladder::new(space).unwrap();
    println!("{name}: {:?}", ladder.space());
    for v in NormalityVariant::ALL {
        match first_inseparable_pair(&ladder, v) {
            None => println!("  {v}: yes"),
            Some((a, b)) => println!("  {v}: no, {a} and {b} cannot be separated"),
        }
    }
    let forms: Vec<bool> = HStarForm::ALL
        .iter()
        .map(|&f| hstar_normal_characterization(&ladder, f))
        .collect();
    println!("  H*-normal forms 1,2,3: {forms:?}");
}

fn main() {
    report("partition space", fixtures::e3());

    // {p} open, {q} and {r} closed: q and r share every neighbourhood of p
    let opens = [vec![], vec![0], vec![0, 1], vec![0, 2], vec![0, 1, 2]]
        .map(|pts| Subset::from_points(3, pts));
    report("three points", validate_topology(3, &opens).unwrap());
}
