//! Parsing and evaluating expressions such as `b (ab)'`.
//!
//! ```bash
//! cargo run --example expressions -- "a'a b (ab)'"
//! ```

use polymon::cli::{evaluate, parse};
use polymon::Alphabet;

fn main() {
    let alphabet = Alphabet::finite(3).unwrap();
    let inputs: Vec<String> = match std::env::args().skip(1).collect::<Vec<_>>() {
        args if !args.is_empty() => args,
        _ => ["a a'", "a b'", "b (ab)'", "(ab)' c", "a^-1 * a", "g2", "q"]
            .map(String::from)
            .to_vec(),
    };
    for input in inputs {
        match parse(&input, &alphabet) {
            Ok(expr) => println!("{input:>12}  parsed as {expr}  =  {}", evaluate(&expr)),
            Err(e) => println!("{input:>12}  {e}"),
        }
    }
}
