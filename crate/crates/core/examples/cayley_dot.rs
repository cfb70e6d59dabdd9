//! Prints the right Cayley graph of a small ball as Graphviz DOT.
//!
//! ```bash
//! cargo run --example cayley_dot -- 3 | dot -Tsvg > ball.svg
//! ```

use polymon::green::cayley_dot;
use polymon::Alphabet;

fn main() -> polymon::Result<()> {
    let radius = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(2);
    print!("{}", cayley_dot(&Alphabet::finite(2)?, radius)?);
    Ok(())
}
