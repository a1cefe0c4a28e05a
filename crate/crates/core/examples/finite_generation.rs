//! The gap filtration and a witness that no finite set generates IN∞.

use isomon::homs::{eps_conjugation, refute_finite_generation};
use isomon::ElemIN;

fn main() -> Result<(), isomon::Error> {
    let gens = vec![ElemIN::alpha(), ElemIN::beta(), ElemIN::eps(2)?, ElemIN::eps(3)?];
    for g in &gens {
        println!("{g}: gap {}", g.gap());
    }
    let w = refute_finite_generation(&gens)?;
    println!("largest generator gap {}; {} has gap {}", w.bound_k, w.element, w.certificate);

    // every smaller idempotent e[l] already comes from e[k]
    for l in 2..5 {
        println!("a^{} e[5] b^{} = {}", 5 - l, 5 - l, eps_conjugation(5, l)?);
    }
    Ok(())
}
