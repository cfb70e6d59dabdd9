//! The compact topology on the monoid: every non-zero point is isolated and
//! the neighborhoods of `0` are exactly the cofinite sets containing `0`.
//!
//! A neighborhood of zero is stored as the finite set it leaves out. With
//! that representation, separate continuity of the product comes with a
//! constructive certificate ([`shrink_neighborhood`]), while joint
//! continuity at `(0, 0)` fails for every target `c ≠ 0`
//! ([`joint_discontinuity_family`]).

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::element::{Alphabet, Element, Letter, PositiveWord};
use crate::error::{Error, Result};
use crate::green::{elements_within, solve_axb};

/// A neighborhood of zero, represented by its finite complement.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawNbhd")]
pub struct CofiniteNbhd {
    excluded: BTreeSet<Element>,
}

#[derive(Deserialize)]
struct RawNbhd {
    excluded: BTreeSet<Element>,
}

impl TryFrom<RawNbhd> for CofiniteNbhd {
    type Error = Error;

    fn try_from(raw: RawNbhd) -> Result<Self> {
        CofiniteNbhd::new(raw.excluded)
    }
}

impl CofiniteNbhd {
    /// The whole monoid.
    pub fn full() -> Self {
        Self::default()
    }

    pub fn new(excluded: impl IntoIterator<Item = Element>) -> Result<Self> {
        let excluded: BTreeSet<Element> = excluded.into_iter().collect();
        if excluded.contains(&Element::Zero) {
            return Err(Error::ExcludesZero);
        }
        Ok(Self { excluded })
    }

    pub fn excluded(&self) -> &BTreeSet<Element> {
        &self.excluded
    }

    pub fn contains(&self, x: &Element) -> bool {
        x.is_zero() || !self.excluded.contains(x)
    }
}

/// A neighborhood `V` of zero with `a·V ⊆ U` and `V·a ⊆ U`.
///
/// `V` leaves out `U`'s exclusions and every solution of `a·x = f` or
/// `x·a = f` for an excluded `f`; each of those solution sets is finite.
pub fn shrink_neighborhood(
    alphabet: &Alphabet,
    a: &Element,
    nbhd: &CofiniteNbhd,
) -> Result<CofiniteNbhd> {
    if a.is_zero() {
        return Err(Error::ZeroTranslation);
    }
    alphabet.check(a)?;
    let one = Element::one();
    let mut excluded = nbhd.excluded.clone();
    for f in &nbhd.excluded {
        excluded.extend(solve_axb(alphabet, a, &one, f)?);
        excluded.extend(solve_axb(alphabet, &one, a, f)?);
    }
    CofiniteNbhd::new(excluded)
}

/// Outcome of checking a [`shrink_neighborhood`] result on a finite ball.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContinuityReport {
    pub translation: Element,
    pub input: CofiniteNbhd,
    pub output: CofiniteNbhd,
    pub verified_radius: usize,
    pub checked: usize,
    /// Points `x ∈ V` with `a·x ∉ U` or `x·a ∉ U`.
    pub counterexamples: Vec<Element>,
}

impl ContinuityReport {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

/// Runs [`shrink_neighborhood`] and checks both translations on every
/// element of length at most `radius`. For an infinite alphabet the check
/// covers the letters in play plus one unused letter.
pub fn certify_translation(
    alphabet: &Alphabet,
    a: &Element,
    nbhd: &CofiniteNbhd,
    radius: usize,
) -> Result<ContinuityReport> {
    let output = shrink_neighborhood(alphabet, a, nbhd)?;
    let letters = match alphabet.letters() {
        Ok(all) => all,
        Err(_) => alphabet.letters_with_fresh(std::iter::once(a).chain(&nbhd.excluded)),
    };
    let sample = elements_within(&letters, radius);
    let counterexamples = sample
        .iter()
        .filter(|x| output.contains(x))
        .filter(|x| !nbhd.contains(&a.product(x)) || !nbhd.contains(&x.product(a)))
        .cloned()
        .collect();
    Ok(ContinuityReport {
        translation: a.clone(),
        input: nbhd.clone(),
        output,
        verified_radius: radius,
        checked: sample.len(),
        counterexamples,
    })
}

/// Pairs `(a_k, b_k)` with `a_k·b_k = c`, all `a_k` distinct and all `b_k`
/// distinct, escaping to infinity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessFamily {
    pub target: Element,
    pub pairs: Vec<(Element, Element)>,
}

impl WitnessFamily {
    /// The first pair with both factors in `nbhd`.
    pub fn escaping_pair(&self, nbhd: &CofiniteNbhd) -> Option<&(Element, Element)> {
        self.pairs
            .iter()
            .find(|(x, y)| nbhd.contains(x) && nbhd.contains(y))
    }
}

/// For `c = u⁻¹v`, the pairs `(u⁻¹w_k, w_k⁻¹v)` with `w_k = g^k`,
/// `k = 1..=count`, where `g` is the first generator.
///
/// Any cofinite `U` leaves out finitely many pairs, so some `x, y ∈ U`
/// multiply to `c`, outside the open set `M \ {c}` around `0 = 0·0`.
pub fn joint_discontinuity_family(
    alphabet: &Alphabet,
    c: &Element,
    count: usize,
) -> Result<WitnessFamily> {
    let (u, v) = c.parts().ok_or(Error::ZeroTarget)?;
    alphabet.check(c)?;
    let first = Letter(0);
    let pairs = (1..=count)
        .map(|k| {
            let w = PositiveWord::power(first, k);
            (
                Element::new(u.clone(), w.clone()),
                Element::new(w, v.clone()),
            )
        })
        .collect();
    Ok(WitnessFamily {
        target: c.clone(),
        pairs,
    })
}

/// `U \ V` for neighborhoods of zero, i.e. `excluded(V) \ excluded(U)`.
pub fn finite_difference(u: &CofiniteNbhd, v: &CofiniteNbhd) -> BTreeSet<Element> {
    v.excluded.difference(&u.excluded).cloned().collect()
}

/// The points of the R-class `{u⁻¹w}` missing from `nbhd`.
pub fn rclass_missing(nbhd: &CofiniteNbhd, u: &PositiveWord) -> BTreeSet<Element> {
    nbhd.excluded
        .iter()
        .filter(|x| x.parts().is_some_and(|(p, _)| p == u))
        .cloned()
        .collect()
}

/// `|U ∩ R_{u⁻¹} ∩ ball(radius)|`.
pub fn rclass_growth(
    alphabet: &Alphabet,
    nbhd: &CofiniteNbhd,
    u: &PositiveWord,
    radius: usize,
) -> Result<u128> {
    let lambda = alphabet.finite_size().ok_or(Error::InfiniteAlphabet)? as u128;
    alphabet.check_word(u)?;
    if radius < u.len() {
        return Err(Error::RadiusTooSmall {
            radius,
            min: u.len(),
        });
    }
    let free = radius - u.len();
    let total = (0..=free as u32).try_fold(0u128, |acc, j| {
        lambda
            .checked_pow(j)
            .and_then(|t| acc.checked_add(t))
            .ok_or(Error::CountOverflow)
    })?;
    let missing = rclass_missing(nbhd, u)
        .iter()
        .filter(|x| x.len() <= radius)
        .count() as u128;
    Ok(total - missing)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::green::ball;

    fn el(u: &[u32], v: &[u32]) -> Element {
        Element::from_indices(u, v)
    }

    fn two() -> Alphabet {
        Alphabet::finite(2).unwrap()
    }

    fn nonzero_ball(radius: usize) -> CofiniteNbhd {
        CofiniteNbhd::new(ball(&two(), radius).unwrap().nonzero().cloned()).unwrap()
    }

    #[test]
    fn neighborhoods_contain_zero() {
        assert_eq!(CofiniteNbhd::new([Element::Zero]), Err(Error::ExcludesZero));
        let u = CofiniteNbhd::new([Element::one()]).unwrap();
        assert!(u.contains(&Element::Zero));
        assert!(!u.contains(&Element::one()));
        assert!(u.contains(&el(&[], &[0])));
    }

    #[test]
    fn identity_translation_keeps_neighborhood() {
        let u = nonzero_ball(2);
        assert_eq!(shrink_neighborhood(&two(), &Element::one(), &u).unwrap(), u);
        assert_eq!(
            shrink_neighborhood(&two(), &Element::Zero, &u),
            Err(Error::ZeroTranslation)
        );
    }

    #[test]
    fn generator_translation() {
        let a = el(&[], &[0]);
        let u = CofiniteNbhd::new([Element::one()]).unwrap();
        let v = shrink_neighborhood(&two(), &a, &u).unwrap();
        // a·x = 1 only for x = a', and x·a = 1 has no solution.
        let expected: BTreeSet<Element> = [Element::one(), el(&[0], &[])].into();
        assert_eq!(v.excluded(), &expected);
        let report = certify_translation(&two(), &a, &u, 5).unwrap();
        assert!(report.passed());
    }

    #[test]
    fn witness_family_for_unit() {
        let fam = joint_discontinuity_family(&two(), &Element::one(), 3).unwrap();
        assert_eq!(
            fam.pairs,
            vec![
                (el(&[], &[0]), el(&[0], &[])),
                (el(&[], &[0, 0]), el(&[0, 0], &[])),
                (el(&[], &[0, 0, 0]), el(&[0, 0, 0], &[])),
            ]
        );
        for (x, y) in &fam.pairs {
            assert_eq!(x.product(y), Element::one());
        }
    }

    #[test]
    fn witness_family_for_nonunit() {
        let c = el(&[0], &[1]);
        let fam = joint_discontinuity_family(&two(), &c, 2).unwrap();
        assert_eq!(fam.pairs[0], (el(&[0], &[0]), el(&[0], &[1])));
        assert_eq!(fam.pairs[1], (el(&[0], &[0, 0]), el(&[0, 0], &[1])));
        assert!(fam.pairs.iter().all(|(x, y)| x.product(y) == c));
        assert_eq!(
            joint_discontinuity_family(&two(), &Element::Zero, 2),
            Err(Error::ZeroTarget)
        );
    }

    #[test]
    fn differences() {
        let u = CofiniteNbhd::new([Element::one()]).unwrap();
        let v = CofiniteNbhd::new([Element::one(), el(&[], &[0])]).unwrap();
        assert!(finite_difference(&u, &u).is_empty());
        assert_eq!(finite_difference(&u, &v), [el(&[], &[0])].into());
    }

    #[test]
    fn missing_class_points() {
        let u = CofiniteNbhd::new([el(&[0], &[1]), el(&[], &[1])]).unwrap();
        let a = PositiveWord::from_indices(&[0]);
        assert_eq!(rclass_missing(&u, &a), [el(&[0], &[1])].into());
        assert!(rclass_missing(&CofiniteNbhd::full(), &a).is_empty());

        let ab = PositiveWord::from_indices(&[0, 1]);
        assert_eq!(
            rclass_missing(&nonzero_ball(2), &ab),
            [el(&[0, 1], &[])].into()
        );
    }

    #[test]
    fn growth_counts() {
        let eps = PositiveWord::empty();
        assert_eq!(
            rclass_growth(&two(), &CofiniteNbhd::full(), &eps, 2).unwrap(),
            7
        );
        let no_one = CofiniteNbhd::new([Element::one()]).unwrap();
        assert_eq!(rclass_growth(&two(), &no_one, &eps, 2).unwrap(), 6);
        let a = PositiveWord::from_indices(&[0]);
        assert_eq!(
            rclass_growth(&two(), &CofiniteNbhd::full(), &a, 1).unwrap(),
            1
        );
        assert_eq!(
            rclass_growth(&two(), &CofiniteNbhd::full(), &a, 0),
            Err(Error::RadiusTooSmall { radius: 0, min: 1 })
        );
        assert_eq!(
            rclass_growth(
                &Alphabet::countably_infinite(),
                &CofiniteNbhd::full(),
                &a,
                3
            ),
            Err(Error::InfiniteAlphabet)
        );
    }

    #[test]
    fn json_shape() {
        let u = CofiniteNbhd::new([el(&[], &[0]), Element::one()]).unwrap();
        let s = serde_json::to_string(&u).unwrap();
        assert_eq!(s, r#"{"excluded":[{"u":[],"v":[]},{"u":[],"v":[0]}]}"#);
        assert_eq!(serde_json::from_str::<CofiniteNbhd>(&s).unwrap(), u);
        assert!(serde_json::from_str::<CofiniteNbhd>(r#"{"excluded":[{"zero":true}]}"#).is_err());
    }
}
