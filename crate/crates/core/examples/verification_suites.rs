//! Running verification suites from code, with custom bounds.

use isomon::harness::{run_checks, run_suite, CheckOptions, UniverseSpec, SUITES};

fn main() -> Result<(), isomon::Error> {
    println!("{} suites available", SUITES.len());
    let report = run_suite("lemma-3.6", &UniverseSpec::nat(4, 1))?;
    println!("{report}");

    let opts = CheckOptions {
        suites: vec!["lemma-3.4".into(), "decompose-filtered".into()],
        exception_bound: Some(4),
        shift_bound: Some(1),
    };
    for report in run_checks(&opts)? {
        println!("{report}");
    }
    Ok(())
}
