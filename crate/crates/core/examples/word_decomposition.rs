//! Words over a, b and e[k]: parsing, evaluation and decomposition.

use isomon::word::{decompose, decompose_filtered, parse};

fn main() -> Result<(), isomon::Error> {
    let w = parse("e[3] b a^3")?;
    let gamma = w.eval();
    println!("{w} evaluates to {gamma} (gap {})", gamma.gap());

    let plain = decompose(&gamma);
    println!("decompose:       {plain}");
    for k in 2..=4 {
        let word = decompose_filtered(&gamma, k)?;
        println!("over a, b, e[{k}]: {word}  -> {}", word.eval());
    }

    let wide = parse("e[2] e[3] e[4]")?.eval();
    match decompose_filtered(&wide, 2) {
        Ok(word) => println!("{word}"),
        Err(e) => println!("{wide}: {e}"),
    }
    Ok(())
}
