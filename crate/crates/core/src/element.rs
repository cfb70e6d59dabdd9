//! Elements of the polycyclic monoid and their normal-form arithmetic.
//!
//! Every non-zero element has a unique normal form `u⁻¹v` with `u`, `v`
//! positive words. The defining relations are `xx⁻¹ = 1` and `xy⁻¹ = 0`
//! for distinct generators, so in a product `u⁻¹v · p⁻¹q` the junction
//! `v·p⁻¹` cancels from the *ends* of `v` and `p` inward:
//!
//! * if `v = w·p` the product is `u⁻¹(w·q)`;
//! * if `p = s·v` the product is `(s·u)⁻¹q`;
//! * otherwise the last letters disagree somewhere and the product is `0`.
//!
//! Much of the literature writes the relations the other way round
//! (`x⁻¹x = 1`) and matches prefixes instead. This crate matches suffixes
//! throughout, including the stack action in [`crate::green::act`] where the
//! top of the stack is the right end of the word.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::de::{self, Deserializer};
use serde::ser::{SerializeMap, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A generator, identified by its 0-based index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Letter(pub u32);

impl Letter {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for Letter {
    /// `a`..`z` for the first 26 generators, `g{n}` beyond that.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 < 26 {
            write!(f, "{}", (b'a' + self.0 as u8) as char)
        } else {
            write!(f, "g{}", self.0)
        }
    }
}

/// A generator or the inverse of one.
///
/// Ordered by letter index first, so `a < a' < b < b'`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedLetter {
    pub letter: Letter,
    pub inverted: bool,
}

impl SignedLetter {
    pub fn positive(letter: Letter) -> Self {
        Self {
            letter,
            inverted: false,
        }
    }

    pub fn inverse(letter: Letter) -> Self {
        Self {
            letter,
            inverted: true,
        }
    }
}

impl fmt::Display for SignedLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter)?;
        if self.inverted {
            f.write_str("'")?;
        }
        Ok(())
    }
}

/// Size of the generating set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AlphabetSize {
    Finite(usize),
    CountablyInfinite,
}

impl FromStr for AlphabetSize {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "inf" | "infinite" | "omega" => Ok(AlphabetSize::CountablyInfinite),
            _ => s
                .parse::<usize>()
                .map(AlphabetSize::Finite)
                .map_err(|_| format!("expected a generator count or `inf`, got `{s}`")),
        }
    }
}

/// The generating set of a polycyclic monoid.
///
/// At least two generators are required: with a single generator the
/// relations force `0 = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Alphabet {
    size: AlphabetSize,
}

impl Alphabet {
    pub fn new(size: AlphabetSize) -> Result<Self> {
        match size {
            AlphabetSize::Finite(n) if n < 2 => Err(Error::TooFewGenerators(n)),
            _ => Ok(Self { size }),
        }
    }

    pub fn finite(n: usize) -> Result<Self> {
        Self::new(AlphabetSize::Finite(n))
    }

    pub fn countably_infinite() -> Self {
        Self {
            size: AlphabetSize::CountablyInfinite,
        }
    }

    pub fn size(&self) -> AlphabetSize {
        self.size
    }

    /// The number of generators, or `None` for a countably infinite alphabet.
    pub fn finite_size(&self) -> Option<usize> {
        match self.size {
            AlphabetSize::Finite(n) => Some(n),
            AlphabetSize::CountablyInfinite => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        self.finite_size().is_some()
    }

    pub fn contains(&self, letter: Letter) -> bool {
        match self.size {
            AlphabetSize::Finite(n) => letter.index() < n,
            AlphabetSize::CountablyInfinite => true,
        }
    }

    /// All generators, in index order. Fails for infinite alphabets.
    pub fn letters(&self) -> Result<Vec<Letter>> {
        let n = self.finite_size().ok_or(Error::InfiniteAlphabet)?;
        Ok((0..n as u32).map(Letter).collect())
    }

    pub fn check_letter(&self, letter: Letter) -> Result<()> {
        match self.size {
            AlphabetSize::Finite(size) if letter.index() >= size => {
                Err(Error::AlphabetMismatch { letter, size })
            }
            _ => Ok(()),
        }
    }

    pub fn check_word(&self, word: &PositiveWord) -> Result<()> {
        word.iter().try_for_each(|&l| self.check_letter(l))
    }

    pub fn check(&self, x: &Element) -> Result<()> {
        x.letters().try_for_each(|l| self.check_letter(l))
    }

    /// Product of two elements, both validated against this alphabet.
    pub fn mul(&self, x: &Element, y: &Element) -> Result<Element> {
        self.check(x)?;
        self.check(y)?;
        Ok(x.product(y))
    }

    /// Letters used by the given elements, followed by the smallest unused
    /// letter of the alphabet if there is one.
    pub(crate) fn letters_with_fresh<'a>(
        &self,
        elements: impl IntoIterator<Item = &'a Element>,
    ) -> Vec<Letter> {
        let mut used: Vec<Letter> = elements.into_iter().flat_map(Element::letters).collect();
        used.sort_unstable();
        used.dedup();
        let fresh = (0u32..)
            .map(Letter)
            .take_while(|&l| self.contains(l))
            .find(|l| used.binary_search(l).is_err());
        used.extend(fresh);
        used.sort_unstable();
        used
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.size {
            AlphabetSize::Finite(n) => write!(f, "{n}"),
            AlphabetSize::CountablyInfinite => f.write_str("inf"),
        }
    }
}

/// A word over the generators only. The empty word stands for `1`.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PositiveWord(Vec<Letter>);

impl PositiveWord {
    pub fn new(letters: Vec<Letter>) -> Self {
        Self(letters)
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn from_indices(indices: &[u32]) -> Self {
        Self(indices.iter().copied().map(Letter).collect())
    }

    /// Repeats a single letter `n` times.
    pub fn power(letter: Letter, n: usize) -> Self {
        Self(vec![letter; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Letter> {
        self.0.iter()
    }

    pub fn concat(&self, other: &PositiveWord) -> PositiveWord {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.0);
        letters.extend_from_slice(&other.0);
        PositiveWord(letters)
    }

    /// `Some(w)` when `self = w·suffix`.
    pub fn strip_suffix(&self, suffix: &PositiveWord) -> Option<PositiveWord> {
        self.0
            .strip_suffix(suffix.0.as_slice())
            .map(|w| PositiveWord(w.to_vec()))
    }

    pub fn ends_with(&self, suffix: &PositiveWord) -> bool {
        self.0.ends_with(&suffix.0)
    }

    pub fn push(&mut self, letter: Letter) {
        self.0.push(letter);
    }
}

impl From<Vec<Letter>> for PositiveWord {
    fn from(letters: Vec<Letter>) -> Self {
        Self(letters)
    }
}

impl FromIterator<Letter> for PositiveWord {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        Self(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a PositiveWord {
    type Item = &'a Letter;
    type IntoIter = std::slice::Iter<'a, Letter>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl fmt::Display for PositiveWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("1");
        }
        self.0.iter().try_for_each(|l| write!(f, "{l}"))
    }
}

/// An element of the polycyclic monoid: zero, or `u⁻¹v` in normal form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Element {
    Zero,
    NormalForm { u: PositiveWord, v: PositiveWord },
}

impl Element {
    pub fn zero() -> Self {
        Element::Zero
    }

    pub fn one() -> Self {
        Element::NormalForm {
            u: PositiveWord::empty(),
            v: PositiveWord::empty(),
        }
    }

    pub fn new(u: PositiveWord, v: PositiveWord) -> Self {
        Element::NormalForm { u, v }
    }

    /// Shorthand for tests and examples: `from_indices(&[0, 1], &[2])` is `(ab)⁻¹c`.
    pub fn from_indices(u: &[u32], v: &[u32]) -> Self {
        Self::new(PositiveWord::from_indices(u), PositiveWord::from_indices(v))
    }

    pub fn generator(letter: Letter) -> Self {
        Self::positive(PositiveWord::new(vec![letter]))
    }

    pub fn generator_inverse(letter: Letter) -> Self {
        Self::new(PositiveWord::new(vec![letter]), PositiveWord::empty())
    }

    /// The element `w` for a positive word `w`.
    pub fn positive(w: PositiveWord) -> Self {
        Self::new(PositiveWord::empty(), w)
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Element::Zero)
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Element::NormalForm { u, v } if u.is_empty() && v.is_empty())
    }

    /// The pair `(u, v)` of a non-zero element.
    pub fn parts(&self) -> Option<(&PositiveWord, &PositiveWord)> {
        match self {
            Element::Zero => None,
            Element::NormalForm { u, v } => Some((u, v)),
        }
    }

    /// `|u| + |v|`; zero has length 0.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.parts().map_or(0, |(u, v)| u.len() + v.len())
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        self.parts()
            .into_iter()
            .flat_map(|(u, v)| u.iter().chain(v.iter()).copied())
    }

    /// Normal-form product by suffix matching.
    pub fn product(&self, other: &Element) -> Element {
        let ((u, v), (p, q)) = match (self.parts(), other.parts()) {
            (Some(x), Some(y)) => (x, y),
            _ => return Element::Zero,
        };
        if let Some(w) = v.strip_suffix(p) {
            Element::new(u.clone(), w.concat(q))
        } else if let Some(s) = p.strip_suffix(v) {
            Element::new(s.concat(u), q.clone())
        } else {
            Element::Zero
        }
    }

    pub fn inverse(&self) -> Element {
        match self {
            Element::Zero => Element::Zero,
            Element::NormalForm { u, v } => Element::new(v.clone(), u.clone()),
        }
    }

    pub fn is_idempotent(&self) -> bool {
        match self {
            Element::Zero => true,
            Element::NormalForm { u, v } => u == v,
        }
    }

    /// The signed-letter string of `u⁻¹v`: `u` reversed and inverted, then `v`.
    /// Zero has no string and yields an empty vector, as does `1`.
    pub fn signed_letters(&self) -> Vec<SignedLetter> {
        match self {
            Element::Zero => Vec::new(),
            Element::NormalForm { u, v } => u
                .iter()
                .rev()
                .map(|&l| SignedLetter::inverse(l))
                .chain(v.iter().map(|&l| SignedLetter::positive(l)))
                .collect(),
        }
    }

    /// All prefixes of the string `u⁻¹v`, shortest first. Always starts with
    /// `1`, ends with `self`, and has `|u| + |v| + 1` members.
    pub fn downset(&self) -> Result<Vec<Element>> {
        let (u, v) = self.parts().ok_or(Error::ZeroHasNoDownset)?;
        let mut out = Vec::with_capacity(u.len() + v.len() + 1);
        // Prefixes of u⁻¹ are the inverses of suffixes of u.
        for k in 0..=u.len() {
            let suffix = PositiveWord::new(u.letters()[u.len() - k..].to_vec());
            out.push(Element::new(suffix, PositiveWord::empty()));
        }
        for k in 1..=v.len() {
            out.push(Element::new(
                u.clone(),
                PositiveWord::new(v.letters()[..k].to_vec()),
            ));
        }
        Ok(out)
    }
}

impl Default for Element {
    fn default() -> Self {
        Element::one()
    }
}

impl Ord for Element {
    /// Zero first, then by length, then lexicographically on the signed
    /// string with `a < a' < b < b' < …`.
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Element::Zero, Element::Zero) => Ordering::Equal,
            (Element::Zero, _) => Ordering::Less,
            (_, Element::Zero) => Ordering::Greater,
            _ => self
                .len()
                .cmp(&other.len())
                .then_with(|| self.signed_letters().cmp(&other.signed_letters())),
        }
    }
}

impl PartialOrd for Element {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Zero => f.write_str("0"),
            x if x.is_one() => f.write_str("1"),
            x => x.signed_letters().iter().try_for_each(|s| write!(f, "{s}")),
        }
    }
}

impl Serialize for Element {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Element::Zero => {
                let mut map = serializer.serialize_map(Some(1))?;
                map.serialize_entry("zero", &true)?;
                map.end()
            }
            Element::NormalForm { u, v } => {
                let mut map = serializer.serialize_map(Some(2))?;
                map.serialize_entry("u", u)?;
                map.serialize_entry("v", v)?;
                map.end()
            }
        }
    }
}

impl<'de> Deserialize<'de> for Element {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(deny_unknown_fields)]
        struct Raw {
            zero: Option<bool>,
            u: Option<PositiveWord>,
            v: Option<PositiveWord>,
        }

        match Raw::deserialize(deserializer)? {
            Raw {
                zero: Some(true),
                u: None,
                v: None,
            } => Ok(Element::Zero),
            Raw {
                zero: None,
                u: Some(u),
                v: Some(v),
            } => Ok(Element::new(u, v)),
            _ => Err(de::Error::custom(
                r#"expected {"zero":true} or {"u":[...],"v":[...]}"#,
            )),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const A: u32 = 0;
    const B: u32 = 1;
    const C: u32 = 2;

    fn el(u: &[u32], v: &[u32]) -> Element {
        Element::from_indices(u, v)
    }

    #[test]
    fn alphabet_guard() {
        assert!(Alphabet::finite(2).is_ok());
        assert_eq!(Alphabet::finite(1), Err(Error::TooFewGenerators(1)));
        assert_eq!(Alphabet::finite(0), Err(Error::TooFewGenerators(0)));
        let inf = Alphabet::new(AlphabetSize::CountablyInfinite).unwrap();
        assert_eq!(inf.finite_size(), None);
        assert!(inf.contains(Letter(1_000_000)));
    }

    #[test]
    fn defining_relations() {
        let a = el(&[], &[A]);
        let a_inv = el(&[A], &[]);
        let b_inv = el(&[B], &[]);
        assert_eq!(a.product(&a_inv), Element::one());
        assert_eq!(a.product(&b_inv), Element::Zero);
    }

    #[test]
    fn suffix_cancellation() {
        // ab · b⁻¹ = a
        assert_eq!(el(&[], &[A, B]).product(&el(&[B], &[])), el(&[], &[A]));
        // b · (ab)⁻¹ = a⁻¹
        assert_eq!(el(&[], &[B]).product(&el(&[A, B], &[])), el(&[A], &[]));
        // ab · a⁻¹ = 0: the junction is b·a⁻¹
        assert_eq!(el(&[], &[A, B]).product(&el(&[A], &[])), Element::Zero);
    }

    #[test]
    fn unit_and_zero() {
        let x = el(&[A, B], &[C]);
        assert_eq!(Element::one().product(&x), x);
        assert_eq!(x.product(&Element::one()), x);
        assert_eq!(Element::Zero.product(&x), Element::Zero);
        assert_eq!(x.product(&Element::Zero), Element::Zero);
    }

    #[test]
    fn inverse_swaps_components() {
        assert_eq!(el(&[A, B], &[C]).inverse(), el(&[C], &[A, B]));
        assert_eq!(Element::Zero.inverse(), Element::Zero);
        let a = el(&[], &[A]);
        assert_eq!(a.product(&a.inverse()), Element::one());
    }

    #[test]
    fn idempotents() {
        assert!(el(&[A], &[A]).is_idempotent());
        assert!(!el(&[A], &[B]).is_idempotent());
        assert_eq!(el(&[A], &[B]).product(&el(&[A], &[B])), Element::Zero);
        assert!(Element::one().is_idempotent());
        assert!(Element::Zero.is_idempotent());
    }

    #[test]
    fn downsets() {
        assert_eq!(
            el(&[A], &[B]).downset().unwrap(),
            vec![Element::one(), el(&[A], &[]), el(&[A], &[B])]
        );
        assert_eq!(Element::one().downset().unwrap(), vec![Element::one()]);
        // (ab)⁻¹a = b⁻¹a⁻¹a
        assert_eq!(
            el(&[A, B], &[A]).downset().unwrap(),
            vec![
                Element::one(),
                el(&[B], &[]),
                el(&[A, B], &[]),
                el(&[A, B], &[A])
            ]
        );
        assert_eq!(Element::Zero.downset(), Err(Error::ZeroHasNoDownset));
    }

    #[test]
    fn rendering() {
        assert_eq!(el(&[A, B], &[C]).to_string(), "b'a'c");
        assert_eq!(Element::Zero.to_string(), "0");
        assert_eq!(Element::one().to_string(), "1");
        assert_eq!(el(&[], &[25, 26]).to_string(), "zg26");
    }

    #[test]
    fn json_form() {
        let x = el(&[A, B], &[C]);
        assert_eq!(serde_json::to_string(&x).unwrap(), r#"{"u":[0,1],"v":[2]}"#);
        assert_eq!(
            serde_json::to_string(&Element::Zero).unwrap(),
            r#"{"zero":true}"#
        );
        let back: Element = serde_json::from_str(r#"{"u":[0,1],"v":[2]}"#).unwrap();
        assert_eq!(back, x);
        let zero: Element = serde_json::from_str(r#"{"zero":true}"#).unwrap();
        assert_eq!(zero, Element::Zero);
        assert!(serde_json::from_str::<Element>(r#"{"zero":false}"#).is_err());
        assert!(serde_json::from_str::<Element>(r#"{"u":[0]}"#).is_err());
    }

    #[test]
    fn checked_mul_rejects_foreign_letters() {
        let two = Alphabet::finite(2).unwrap();
        let c = el(&[], &[C]);
        assert_eq!(
            two.mul(&c, &Element::one()),
            Err(Error::AlphabetMismatch {
                letter: Letter(C),
                size: 2
            })
        );
        assert!(Alphabet::countably_infinite()
            .mul(&c, &Element::one())
            .is_ok());
    }

    #[test]
    fn order_is_length_lexicographic() {
        let mut xs = vec![
            el(&[B], &[]),
            el(&[], &[A, A]),
            Element::one(),
            el(&[], &[A]),
            Element::Zero,
        ];
        xs.sort();
        assert_eq!(
            xs,
            vec![
                Element::Zero,
                Element::one(),
                el(&[], &[A]),
                el(&[B], &[]),
                el(&[], &[A, A])
            ]
        );
    }
}
