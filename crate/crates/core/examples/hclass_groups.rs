//! Maximal subgroups of ID∞ at partial identities of Z.

use isomon::int::{hclass_group, restriction_isometries};
use isomon::FiniteIntSet;

fn main() {
    let sets = [
        FiniteIntSet::new(),
        FiniteIntSet::from([0, 3]),
        FiniteIntSet::from([-1, 0, 1]),
        FiniteIntSet::from([0, 1, 3]),
    ];
    for set in sets {
        let group = serde_json::to_string(&hclass_group(&set)).unwrap();
        print!("Z ∖ {set}: {group}");
        match restriction_isometries(&set) {
            Ok(isos) => println!(", isometries {:?}", isos.iter().map(|g| g.unit()).collect::<Vec<_>>()),
            Err(e) => println!(" ({e})"),
        }
    }
}
