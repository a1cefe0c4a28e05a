//! Homomorphisms out of IN∞: extension to Z and the images in Iso(Z).

use isomon::homs::{extend_in, hom_translation, hom_z2};
use isomon::word::parse;

fn main() -> Result<(), isomon::Error> {
    let g = parse("e[3] b a^3")?.eval();
    let h = parse("b e[2]")?.eval();
    for n in [0, -2] {
        let (fg, fh) = (extend_in(&g, n)?, extend_in(&h, n)?);
        let product = extend_in(&g.compose(&h), n)?;
        println!("n = {n}: extension of {g} is {}", serde_json::to_string(&fg).unwrap());
        println!("  product agrees: {}, monotone: {}", fg.compose(&fh) == product, product.is_monotone());
        let points: Vec<String> = (n - 1..8).map(|x| format!("{x}->{:?}", fg.apply(x))).collect();
        println!("  {}", points.join(" "));
    }
    for x in [&g, &h] {
        println!("{x}: translation image {}, Z2 image {}", hom_translation(x), hom_z2(x));
    }
    Ok(())
}
