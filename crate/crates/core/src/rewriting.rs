//! Free words over `{x, x⁻¹}` reduced by the defining relations.
//!
//! This is an independent semantics for the monoid: it never looks at the
//! normal-form product in [`Element::product`], so the two can be checked
//! against each other.

use std::fmt;

use crate::element::{Alphabet, Element, PositiveWord, SignedLetter};
use crate::error::Result;

/// A word in the free monoid on signed letters, with an external zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FreeWord {
    Zero,
    Word(Vec<SignedLetter>),
}

/// Which redex to rewrite first.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    Leftmost,
    Rightmost,
}

impl FreeWord {
    pub fn empty() -> Self {
        FreeWord::Word(Vec::new())
    }

    /// The signed string `u⁻¹v` of an element, unreduced.
    pub fn from_element(x: &Element) -> Self {
        match x {
            Element::Zero => FreeWord::Zero,
            _ => FreeWord::Word(x.signed_letters()),
        }
    }

    pub fn concat(&self, other: &FreeWord) -> FreeWord {
        match (self, other) {
            (FreeWord::Word(a), FreeWord::Word(b)) => {
                FreeWord::Word(a.iter().chain(b.iter()).copied().collect())
            }
            _ => FreeWord::Zero,
        }
    }
}

impl From<Vec<SignedLetter>> for FreeWord {
    fn from(letters: Vec<SignedLetter>) -> Self {
        FreeWord::Word(letters)
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FreeWord::Zero => f.write_str("0"),
            FreeWord::Word(w) if w.is_empty() => f.write_str("1"),
            FreeWord::Word(w) => w.iter().try_for_each(|s| write!(f, "{s}")),
        }
    }
}

// A redex is a positive letter immediately followed by an inverted one.
fn is_redex(pair: &[SignedLetter]) -> bool {
    !pair[0].inverted && pair[1].inverted
}

/// Applies one rewrite step. Returns `None` at a fixpoint.
pub fn step(word: &FreeWord, strategy: Strategy) -> Option<FreeWord> {
    let letters = match word {
        FreeWord::Zero => return None,
        FreeWord::Word(w) => w,
    };
    let mut redexes = letters.windows(2).enumerate().filter(|(_, p)| is_redex(p));
    let (i, pair) = match strategy {
        Strategy::Leftmost => redexes.next()?,
        Strategy::Rightmost => redexes.next_back()?,
    };
    if pair[0].letter != pair[1].letter {
        return Some(FreeWord::Zero);
    }
    let mut out = Vec::with_capacity(letters.len() - 2);
    out.extend_from_slice(&letters[..i]);
    out.extend_from_slice(&letters[i + 2..]);
    Some(FreeWord::Word(out))
}

/// Rewrites to a fixpoint and reads the residue `(inverted)(positive)` off as
/// a normal form.
pub fn reduce_with(word: &FreeWord, strategy: Strategy) -> Element {
    let mut current = word.clone();
    while let Some(next) = step(&current, strategy) {
        current = next;
    }
    match current {
        FreeWord::Zero => Element::Zero,
        FreeWord::Word(w) => {
            let split = w.iter().position(|s| !s.inverted).unwrap_or(w.len());
            debug_assert!(w[split..].iter().all(|s| !s.inverted));
            let u: PositiveWord = w[..split].iter().rev().map(|s| s.letter).collect();
            let v: PositiveWord = w[split..].iter().map(|s| s.letter).collect();
            Element::new(u, v)
        }
    }
}

pub fn reduce(word: &FreeWord) -> Element {
    reduce_with(word, Strategy::Leftmost)
}

/// Product by concatenation and reduction.
pub fn mul_oracle(alphabet: &Alphabet, x: &Element, y: &Element) -> Result<Element> {
    alphabet.check(x)?;
    alphabet.check(y)?;
    Ok(reduce(
        &FreeWord::from_element(x).concat(&FreeWord::from_element(y)),
    ))
}

/// Every signed word of exactly `len` letters over the first `lambda`
/// generators, in lexicographic order.
pub fn all_words(lambda: u32, len: usize) -> impl Iterator<Item = FreeWord> {
    let alphabet: Vec<SignedLetter> = (0..lambda)
        .flat_map(|l| {
            let l = crate::element::Letter(l);
            [SignedLetter::positive(l), SignedLetter::inverse(l)]
        })
        .collect();
    let base = alphabet.len();
    let total = base.checked_pow(len as u32).expect("word count overflow");
    (0..total).map(move |mut code| {
        let mut w = vec![alphabet[0]; len];
        for slot in w.iter_mut().rev() {
            *slot = alphabet[code % base];
            code /= base;
        }
        FreeWord::Word(w)
    })
}
