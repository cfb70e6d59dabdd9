//! Green's R-structure, finite balls, the `axb = c` solver and the stack
//! action of the monoid on positive words.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::element::{Alphabet, Element, Letter, PositiveWord};
use crate::error::{Error, Result};

/// Identifies an R-class. The non-zero class of `u⁻¹v` is determined by `u`
/// alone and equals `{u⁻¹w : w positive}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RClassKey {
    ZeroClass,
    Class(PositiveWord),
}

impl RClassKey {
    /// `u⁻¹` for the class of `u`, `0` for the zero class.
    pub fn representative(&self) -> Element {
        match self {
            RClassKey::ZeroClass => Element::Zero,
            RClassKey::Class(u) => Element::new(u.clone(), PositiveWord::empty()),
        }
    }
}

pub fn rclass_key(x: &Element) -> RClassKey {
    match x.parts() {
        None => RClassKey::ZeroClass,
        Some((u, _)) => RClassKey::Class(u.clone()),
    }
}

/// An `s` with `x·s = y` for R-related non-zero `x = u⁻¹v`, `y = u⁻¹q`,
/// namely `s = v⁻¹q`.
pub fn rclass_witness(x: &Element, y: &Element) -> Result<Element> {
    match (x.parts(), y.parts()) {
        (Some((u, v)), Some((p, q))) if u == p => Ok(Element::new(v.clone(), q.clone())),
        _ => Err(Error::KeyMismatch),
    }
}

/// `1 + Σ_{k=0..n} (k+1)·λᵏ`, the number of elements of length at most `n`
/// plus zero.
pub fn ball_cardinality(lambda: usize, radius: usize) -> Option<u128> {
    let lambda = lambda as u128;
    (0..=radius as u32).try_fold(1u128, |acc, k| {
        lambda
            .checked_pow(k)?
            .checked_mul(k as u128 + 1)
            .and_then(|t| acc.checked_add(t))
    })
}

fn words_of_len(letters: &[Letter], len: usize) -> Vec<PositiveWord> {
    let mut words = vec![PositiveWord::empty()];
    for _ in 0..len {
        words = words
            .iter()
            .flat_map(|w| {
                letters.iter().map(move |&l| {
                    let mut next = w.clone();
                    next.push(l);
                    next
                })
            })
            .collect();
    }
    words
}

/// Positive words of length at most `max_len`, shortest first.
pub fn positive_words(letters: &[Letter], max_len: usize) -> Vec<PositiveWord> {
    (0..=max_len)
        .flat_map(|len| words_of_len(letters, len))
        .collect()
}

/// Zero and every `u⁻¹v` over `letters` with `|u| + |v|` in `min_len..=max_len`,
/// in ascending [`Element`] order.
pub(crate) fn elements_between(letters: &[Letter], min_len: usize, max_len: usize) -> Vec<Element> {
    let mut out = Vec::new();
    if min_len == 0 {
        out.push(Element::Zero);
    }
    for total in min_len..=max_len {
        let mut shell: Vec<Element> = (0..=total)
            .flat_map(|ulen| {
                let us = words_of_len(letters, ulen);
                let vs = words_of_len(letters, total - ulen);
                us.into_iter().flat_map(move |u| {
                    vs.clone()
                        .into_iter()
                        .map(move |v| Element::new(u.clone(), v))
                })
            })
            .collect();
        shell.sort();
        out.extend(shell);
    }
    out
}

/// Zero and all elements over `letters` with `|u| + |v| ≤ radius`.
pub fn elements_within(letters: &[Letter], radius: usize) -> Vec<Element> {
    elements_between(letters, 0, radius)
}

/// The finite truncation of the monoid to elements of length at most `radius`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ball {
    alphabet: Alphabet,
    radius: usize,
    elements: Vec<Element>,
}

impl Ball {
    pub fn new(alphabet: Alphabet, radius: usize) -> Result<Self> {
        let letters = alphabet.letters()?;
        Ok(Self {
            alphabet,
            radius,
            elements: elements_within(&letters, radius),
        })
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn radius(&self) -> usize {
        self.radius
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Element> {
        self.elements.iter()
    }

    pub fn nonzero(&self) -> impl Iterator<Item = &Element> {
        self.elements.iter().filter(|x| !x.is_zero())
    }

    pub fn contains(&self, x: &Element) -> bool {
        self.elements.binary_search(x).is_ok()
    }

    pub fn into_vec(self) -> Vec<Element> {
        self.elements
    }
}

impl<'a> IntoIterator for &'a Ball {
    type Item = &'a Element;
    type IntoIter = std::slice::Iter<'a, Element>;

    fn into_iter(self) -> Self::IntoIter {
        self.elements.iter()
    }
}

pub fn ball(alphabet: &Alphabet, radius: usize) -> Result<Ball> {
    Ball::new(*alphabet, radius)
}

/// Length bound used by [`solve_axb`]: `|a| + |b| + |c|`.
///
/// Each letter of a solution either cancels against a letter of `a` or `b`,
/// or survives into `c`.
pub fn solver_bound(a: &Element, b: &Element, c: &Element) -> usize {
    a.len() + b.len() + c.len()
}

fn check_solver_args(alphabet: &Alphabet, a: &Element, b: &Element, c: &Element) -> Result<()> {
    if a.is_zero() || b.is_zero() || c.is_zero() {
        return Err(Error::ZeroArgument);
    }
    alphabet.check(a)?;
    alphabet.check(b)?;
    alphabet.check(c)
}

/// The finite set `{x ≠ 0 : a·x·b = c}`, in ascending order.
///
/// Candidates are enumerated up to [`solver_bound`] over the letters that
/// occur in `a`, `b` and `c`; no other letter can cancel, so no other
/// letter can occur in a solution.
pub fn solve_axb(
    alphabet: &Alphabet,
    a: &Element,
    b: &Element,
    c: &Element,
) -> Result<Vec<Element>> {
    check_solver_args(alphabet, a, b, c)?;
    let mut letters: Vec<Letter> = a.letters().chain(b.letters()).chain(c.letters()).collect();
    letters.sort_unstable();
    letters.dedup();
    let bound = solver_bound(a, b, c);
    Ok(elements_within(&letters, bound)
        .into_iter()
        .filter(|x| !x.is_zero() && &a.product(x).product(b) == c)
        .collect())
}

/// Solutions of length in `(B, B + width]` where `B` is the solver bound,
/// searched over the letters of `a`, `b`, `c` and one unused letter. A
/// correct bound leaves this empty.
pub fn sentinel_band(
    alphabet: &Alphabet,
    a: &Element,
    b: &Element,
    c: &Element,
    width: usize,
) -> Result<Vec<Element>> {
    check_solver_args(alphabet, a, b, c)?;
    let letters = alphabet.letters_with_fresh([a, b, c]);
    let bound = solver_bound(a, b, c);
    Ok(elements_between(&letters, bound + 1, bound + width)
        .into_iter()
        .filter(|x| &a.product(x).product(b) == c)
        .collect())
}

/// [`solve_axb`] followed by a sentinel band of width 2.
pub fn solve_axb_checked(
    alphabet: &Alphabet,
    a: &Element,
    b: &Element,
    c: &Element,
) -> Result<Vec<Element>> {
    let solutions = solve_axb(alphabet, a, b, c)?;
    if let Some(x) = sentinel_band(alphabet, a, b, c, 2)?.first() {
        return Err(Error::BoundViolated {
            bound: solver_bound(a, b, c),
            length: x.len(),
        });
    }
    Ok(solutions)
}

/// Membership in the submonoid generated by `F ∪ F⁻¹ ∪ {0, 1}`.
pub fn in_subsemigroup(x: &Element, generators: &BTreeSet<Letter>) -> bool {
    x.is_zero() || x.is_one() || x.letters().all(|l| generators.contains(&l))
}

/// The right action of `x = u⁻¹v` on a stack `w` whose top is the right end:
/// pop `u`, then push `v`. Undefined (`None`) when `u` is not a suffix of `w`,
/// and everywhere for zero.
pub fn act(x: &Element, w: &PositiveWord) -> Option<PositiveWord> {
    let (u, v) = x.parts()?;
    w.strip_suffix(u).map(|t| t.concat(v))
}

/// Graphviz rendering of the right Cayley graph on `ball(radius)`: one edge
/// `x → x·g` per generator `g`, kept when the target is inside the ball.
pub fn cayley_dot(alphabet: &Alphabet, radius: usize) -> Result<String> {
    let ball = Ball::new(*alphabet, radius)?;
    let letters = alphabet.letters()?;
    let ids: BTreeMap<&Element, usize> = ball.iter().enumerate().map(|(i, x)| (x, i)).collect();

    let mut out = String::new();
    writeln!(out, "digraph cayley {{").unwrap();
    for (i, x) in ball.iter().enumerate() {
        writeln!(out, "  n{i} [label=\"{x}\"];").unwrap();
    }
    for (i, x) in ball.iter().enumerate() {
        for &g in &letters {
            if let Some(j) = ids.get(&x.product(&Element::generator(g))) {
                writeln!(out, "  n{i} -> n{j} [label=\"{g}\"];").unwrap();
            }
        }
    }
    writeln!(out, "}}").unwrap();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(u: &[u32], v: &[u32]) -> Element {
        Element::from_indices(u, v)
    }

    fn word(ix: &[u32]) -> PositiveWord {
        PositiveWord::from_indices(ix)
    }

    fn two() -> Alphabet {
        Alphabet::finite(2).unwrap()
    }

    #[test]
    fn keys() {
        assert_eq!(rclass_key(&el(&[0], &[1])), RClassKey::Class(word(&[0])));
        assert_eq!(rclass_key(&Element::one()), RClassKey::Class(word(&[])));
        assert_eq!(rclass_key(&Element::Zero), RClassKey::ZeroClass);
    }

    #[test]
    fn witnesses() {
        let x = el(&[0], &[1]);
        let y = el(&[0], &[]);
        let s = rclass_witness(&x, &y).unwrap();
        assert_eq!(s, el(&[1], &[]));
        assert_eq!(x.product(&s), y);

        assert_eq!(rclass_witness(&x, &x).unwrap(), el(&[1], &[1]));

        let x = el(&[1], &[0]);
        let y = el(&[1], &[1, 1]);
        let s = rclass_witness(&x, &y).unwrap();
        assert_eq!(s, el(&[0], &[1, 1]));
        assert_eq!(x.product(&s), y);

        assert_eq!(rclass_witness(&x, &el(&[0], &[])), Err(Error::KeyMismatch));
        assert_eq!(
            rclass_witness(&Element::Zero, &Element::Zero),
            Err(Error::KeyMismatch)
        );
    }

    #[test]
    fn ball_sizes() {
        let b0 = ball(&two(), 0).unwrap();
        assert_eq!(b0.elements(), &[Element::Zero, Element::one()]);
        assert_eq!(ball(&two(), 2).unwrap().len(), 18);
        assert_eq!(ball(&two(), 4).unwrap().len(), 130);
        assert_eq!(ball_cardinality(2, 4), Some(130));
        assert_eq!(
            ball(&Alphabet::countably_infinite(), 1),
            Err(Error::InfiniteAlphabet)
        );
    }

    #[test]
    fn ball_is_sorted_and_searchable() {
        let b = ball(&Alphabet::finite(3).unwrap(), 3).unwrap();
        assert!(b.elements().windows(2).all(|w| w[0] < w[1]));
        assert!(b.contains(&el(&[2], &[0, 1])));
        assert!(!b.contains(&el(&[2, 2], &[0, 1])));
    }

    #[test]
    fn solver_fixtures() {
        let one = Element::one();
        assert_eq!(
            solve_axb(&two(), &one, &one, &one).unwrap(),
            vec![one.clone()]
        );

        let a = el(&[], &[0]);
        assert_eq!(
            solve_axb_checked(&two(), &a, &a.inverse(), &one).unwrap(),
            vec![one.clone(), el(&[0], &[0])]
        );
        assert_eq!(
            solve_axb(&two(), &a, &one, &Element::Zero),
            Err(Error::ZeroArgument)
        );
        assert_eq!(
            solve_axb(&two(), &Element::Zero, &one, &one),
            Err(Error::ZeroArgument)
        );
    }

    #[test]
    fn solver_over_infinite_alphabet() {
        let inf = Alphabet::countably_infinite();
        let a = el(&[], &[40]);
        let sols = solve_axb_checked(&inf, &a, &a.inverse(), &Element::one()).unwrap();
        assert_eq!(sols, vec![Element::one(), el(&[40], &[40])]);
    }

    #[test]
    fn subsemigroup_membership() {
        let ab: BTreeSet<Letter> = [Letter(0), Letter(1)].into();
        let a: BTreeSet<Letter> = [Letter(0)].into();
        assert!(in_subsemigroup(&el(&[0], &[1]), &ab));
        assert!(!in_subsemigroup(&el(&[0], &[1]), &a));
        assert!(in_subsemigroup(&Element::Zero, &BTreeSet::new()));
        assert!(in_subsemigroup(&Element::one(), &BTreeSet::new()));
    }

    #[test]
    fn subsemigroup_matches_closure() {
        // Close {0, 1, a, a'} under products, truncated to ball(2).
        let within = ball(&two(), 2).unwrap();
        let gens = [Element::Zero, Element::one(), el(&[], &[0]), el(&[0], &[])];
        let mut closure: BTreeSet<Element> = gens.iter().cloned().collect();
        loop {
            let next: BTreeSet<Element> = closure
                .iter()
                .flat_map(|x| gens.iter().map(move |g| x.product(g)))
                .filter(|x| within.contains(x))
                .collect();
            let before = closure.len();
            closure.extend(next);
            if closure.len() == before {
                break;
            }
        }
        let a: BTreeSet<Letter> = [Letter(0)].into();
        for x in within.iter() {
            assert_eq!(in_subsemigroup(x, &a), closure.contains(x), "{x}");
        }
    }

    #[test]
    fn stack_action() {
        let ca = word(&[2, 0]);
        assert_eq!(act(&el(&[0], &[1]), &ca), Some(word(&[2, 1])));
        assert_eq!(
            Element::positive(ca.clone()).product(&el(&[0], &[1])),
            Element::positive(word(&[2, 1]))
        );
        assert_eq!(act(&Element::one(), &ca), Some(ca.clone()));
        assert_eq!(act(&el(&[0, 1], &[]), &word(&[1])), None);
        assert_eq!(act(&Element::Zero, &ca), None);
    }

    #[test]
    fn dot_export() {
        let dot = cayley_dot(&two(), 1).unwrap();
        assert!(dot.starts_with("digraph cayley {\n"));
        assert!(dot.contains("  n0 [label=\"0\"];"));
        // 1 -a-> a
        assert!(dot.contains("  n1 -> n2 [label=\"a\"];"));
        assert!(dot.contains("  n0 -> n0 [label=\"b\"];"));
        // x·g = u⁻¹(vg) leaves radius 1 for every x other than 0 and 1.
        assert_eq!(dot.matches("->").count(), 4);
    }
}
