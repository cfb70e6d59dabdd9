//! The cofinite topology at zero: separately but not jointly continuous.
//!
//! ```bash
//! cargo run --example topology
//! ```

use polymon::green::ball;
use polymon::topology::{
    certify_translation, joint_discontinuity_family, rclass_growth, CofiniteNbhd,
};
use polymon::{Alphabet, Element, PositiveWord};

fn main() -> polymon::Result<()> {
    let alphabet = Alphabet::finite(2)?;
    let u = CofiniteNbhd::new(ball(&alphabet, 2)?.nonzero().cloned())?;

    let a = Element::from_indices(&[1], &[0]);
    let report = certify_translation(&alphabet, &a, &u, 6)?;
    println!(
        "translation by {a}: V leaves out {} points, {} checked, {} counterexamples",
        report.output.excluded().len(),
        report.checked,
        report.counterexamples.len()
    );

    // Every neighborhood of zero contains a pair multiplying to 1.
    for n in [2, 5, 9] {
        let excluded = ball(&alphabet, n)?.nonzero().cloned().collect::<Vec<_>>();
        let nbhd = CofiniteNbhd::new(excluded)?;
        let family = joint_discontinuity_family(&alphabet, &Element::one(), n + 1)?;
        let (x, y) = family.escaping_pair(&nbhd).expect("pair outside ball(n)");
        println!("U misses ball({n}), yet {x} · {y} = {}", x.product(y));
    }

    let eps = PositiveWord::empty();
    let counts: Vec<u128> = (0..=6)
        .map(|l| rclass_growth(&alphabet, &u, &eps, l).unwrap())
        .collect();
    println!("|U ∩ R_1 ∩ ball(L)| for L = 0..=6: {counts:?}");
    Ok(())
}
