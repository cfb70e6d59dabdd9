//! Normal forms, products, inverses, idempotents and downsets.
//!
//! ```bash
//! cargo run --example arithmetic
//! ```

use polymon::{Alphabet, Element, Letter};

fn main() -> polymon::Result<()> {
    let alphabet = Alphabet::finite(3)?;
    let a = Element::generator(Letter(0));
    let b = Element::generator(Letter(1));
    let c = Element::generator(Letter(2));

    println!("a · a' = {}", alphabet.mul(&a, &a.inverse())?);
    println!("a · b' = {}", alphabet.mul(&a, &b.inverse())?);

    // (ab)⁻¹c is stored as the pair (ab, c) and printed as b'a'c.
    let x = Element::from_indices(&[0, 1], &[2]);
    println!("x = {x}, x' = {}", x.inverse());
    println!("x x' x = {}", x.product(&x.inverse()).product(&x));

    // The junction v·p⁻¹ cancels from the right: ab · b' = a.
    let ab = a.product(&b);
    println!("ab · b' = {}", ab.product(&b.inverse()));
    println!("b · (ab)' = {}", b.product(&ab.inverse()));

    let e = a.inverse().product(&a);
    println!("{e} is idempotent: {}", e.is_idempotent());
    println!(
        "a'b is idempotent: {}",
        Element::from_indices(&[0], &[1]).is_idempotent()
    );

    let down: Vec<String> = x.downset()?.iter().map(ToString::to_string).collect();
    println!("downset of {x}: {{{}}}", down.join(", "));

    println!(
        "structured form of {x}: {}",
        serde_json::to_string(&x).unwrap()
    );
    println!("c has index {}", c.letters().next().unwrap().index());

    match Alphabet::finite(1) {
        Err(e) => println!("one generator: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
