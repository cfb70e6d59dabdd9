//! Free-word reduction as an independent model of the product.
//!
//! ```bash
//! cargo run --example rewriting_oracle
//! ```

use polymon::green::ball;
use polymon::rewriting::{all_words, mul_oracle, reduce_with, step, FreeWord, Strategy};
use polymon::{Alphabet, Letter, SignedLetter};

fn main() -> polymon::Result<()> {
    let a = SignedLetter::positive(Letter(0));
    let a_inv = SignedLetter::inverse(Letter(0));
    let b = SignedLetter::positive(Letter(1));
    let b_inv = SignedLetter::inverse(Letter(1));

    let mut w: FreeWord = vec![a, b, b_inv, a_inv, b_inv, a].into();
    println!("reducing {w}");
    while let Some(next) = step(&w, Strategy::Leftmost) {
        println!("  -> {next}");
        w = next;
    }

    let alphabet = Alphabet::finite(2)?;
    let b3 = ball(&alphabet, 3)?;
    let mut mismatches = 0;
    for x in &b3 {
        for y in &b3 {
            if x.product(y) != mul_oracle(&alphabet, x, y)? {
                mismatches += 1;
            }
        }
    }
    println!("closed form vs rewriting on ball(3)^2: {mismatches} mismatches");

    let mut disagreements = 0;
    let mut words = 0;
    for len in 0..=6 {
        for w in all_words(2, len) {
            words += 1;
            if reduce_with(&w, Strategy::Leftmost) != reduce_with(&w, Strategy::Rightmost) {
                disagreements += 1;
            }
        }
    }
    println!("leftmost vs rightmost on {words} words: {disagreements} disagreements");
    Ok(())
}
