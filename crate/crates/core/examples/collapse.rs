//! Derivations of `0 ∼ 1` from identifying two distinct elements.
//!
//! ```bash
//! cargo run --example collapse
//! ```

use polymon::collapse::{collapse_witness, CollapseOutcome};
use polymon::green::ball;
use polymon::{Alphabet, Element};

fn main() -> polymon::Result<()> {
    let alphabet = Alphabet::finite(2)?;
    let e = Element::from_indices(&[0], &[0]);
    if let CollapseOutcome::Found(d) = collapse_witness(&alphabet, &e, &Element::one(), 8)? {
        print!("{d}");
        println!("replays: {:?}", d.replay());
    }

    let b2 = ball(&alphabet, 2)?;
    let mut lengths = std::collections::BTreeMap::new();
    for a in &b2 {
        for b in &b2 {
            if a == b {
                continue;
            }
            let len = match collapse_witness(&alphabet, a, b, 8)? {
                CollapseOutcome::Found(d) => d.len(),
                CollapseOutcome::NotFound { .. } => 0,
            };
            *lengths.entry(len).or_insert(0) += 1;
        }
    }
    println!("trace lengths over all pairs in ball(2) (0 = not found): {lengths:?}");
    Ok(())
}
