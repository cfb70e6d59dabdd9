//! Exact computation in the λ-polycyclic monoid `P_λ`.
//!
//! `P_λ` is the inverse monoid with zero generated by `λ ≥ 2` letters subject
//! to `xx⁻¹ = 1` and `xy⁻¹ = 0` for distinct generators. Every non-zero
//! element has a unique normal form `u⁻¹v` with `u`, `v` positive words.
//!
//! * [`element`]: normal forms, the product, inverses, idempotents, downsets.
//! * [`rewriting`]: free-word reduction, an independent model of the product.
//! * [`collapse`]: bounded searches showing a pair generates the universal congruence.
//! * [`green`]: R-classes, balls, the finite solver for `axb = c`, the stack action.
//! * [`topology`]: the cofinite topology at zero, continuity certificates
//!   and witnesses against joint continuity.
//! * [`cli`]: the expression language and the `polymon` command line.
//!
//! Runnable walkthroughs of each area live in the crate's `examples/`
//! directory (`cargo run --example arithmetic`).

pub mod cli;
pub mod collapse;
pub mod element;
pub mod error;
pub mod green;
pub mod rewriting;
pub mod sample;
pub mod topology;

pub use collapse::{collapse_witness, CollapseOutcome, Derivation, Rule, Step};
pub use element::{Alphabet, AlphabetSize, Element, Letter, PositiveWord, SignedLetter};
pub use error::{Error, Result};
pub use green::{
    act, ball, in_subsemigroup, rclass_key, rclass_witness, solve_axb, Ball, RClassKey,
};
pub use rewriting::{mul_oracle, reduce, FreeWord, Strategy};
pub use topology::{joint_discontinuity_family, shrink_neighborhood, CofiniteNbhd, WitnessFamily};
