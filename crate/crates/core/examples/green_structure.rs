//! R-classes, balls and the finite solver for `a·x·b = c`.
//!
//! ```bash
//! cargo run --example green_structure
//! ```

use std::collections::BTreeSet;

use polymon::green::{
    ball, ball_cardinality, in_subsemigroup, rclass_key, rclass_witness, solve_axb_checked,
};
use polymon::{Alphabet, Element, Letter};

fn show(xs: &[Element]) -> String {
    xs.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}

fn main() -> polymon::Result<()> {
    let alphabet = Alphabet::finite(2)?;
    for radius in 0..=5 {
        let b = ball(&alphabet, radius)?;
        println!(
            "|ball({radius})| = {} (formula {})",
            b.len(),
            ball_cardinality(2, radius).unwrap()
        );
    }

    let x = Element::from_indices(&[0], &[1]);
    let y = Element::from_indices(&[0], &[]);
    println!(
        "{x} and {y} share an R-class: {}",
        rclass_key(&x) == rclass_key(&y)
    );
    let s = rclass_witness(&x, &y)?;
    println!("{x} · {s} = {}", x.product(&s));

    // Group the non-zero elements of ball(2) by R-class.
    let mut classes: std::collections::BTreeMap<Element, Vec<Element>> = Default::default();
    for z in ball(&alphabet, 2)?.nonzero() {
        classes
            .entry(rclass_key(z).representative())
            .or_default()
            .push(z.clone());
    }
    for (rep, members) in &classes {
        println!("R[{rep}] ∩ ball(2) = {{{}}}", show(members));
    }

    let a = Element::generator(Letter(0));
    let sols = solve_axb_checked(&alphabet, &a, &a.inverse(), &Element::one())?;
    println!("a x a' = 1: {{{}}}", show(&sols));

    let only_a: BTreeSet<Letter> = [Letter(0)].into();
    println!("a'b in S_{{a}}: {}", in_subsemigroup(&x, &only_a));
    Ok(())
}
