//! Elements as partial maps on stacks of letters (top on the right).
//!
//! ```bash
//! cargo run --example stack_action
//! ```

use polymon::green::act;
use polymon::{Element, PositiveWord};

fn main() {
    let push_b = Element::from_indices(&[], &[1]);
    let pop_a = Element::from_indices(&[0], &[]);
    let swap_top_a_for_b = pop_a.product(&push_b);
    println!("pop a then push b = {swap_top_a_for_b}");

    for stack in [&[2u32, 0][..], &[0, 0], &[1], &[]] {
        let w = PositiveWord::from_indices(stack);
        match act(&swap_top_a_for_b, &w) {
            Some(out) => println!("  {w} -> {out}"),
            None => println!("  {w} -> undefined"),
        }
    }

    // Composition of actions matches the product.
    let x = Element::from_indices(&[1], &[0, 0]);
    let y = Element::from_indices(&[0], &[1]);
    let w = PositiveWord::from_indices(&[0, 1]);
    let show = |r: Option<PositiveWord>| r.map_or("undefined".to_string(), |t| t.to_string());
    let stepwise = act(&x, &w).and_then(|t| act(&y, &t));
    println!("{w} under {x} then {y}: {}", show(stepwise));
    println!(
        "{w} under {}: {}",
        x.product(&y),
        show(act(&x.product(&y), &w))
    );
}
