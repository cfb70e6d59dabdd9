//! Bounded breadth-first search for derivations of `0 ∼ 1` from a seed pair.
//!
//! The monoid is congruence-free, so identifying any two distinct elements
//! collapses everything. A successful search returns a replayable trace; an
//! exhausted search only reports the depth it gave up at.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::element::{Alphabet, Element};
use crate::error::{Error, Result};
use crate::green::elements_within;

/// How a derivation step was obtained. Indices point at earlier steps.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Rule {
    Seed,
    LeftMultiply { by: Element, from: usize },
    RightMultiply { by: Element, from: usize },
    Symmetry { from: usize },
    Transitivity(usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Step {
    pub pair: (Element, Element),
    pub rule: Rule,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Derivation {
    pub steps: Vec<Step>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CollapseOutcome {
    Found(Derivation),
    NotFound { max_depth: usize },
}

impl CollapseOutcome {
    pub fn derivation(&self) -> Option<&Derivation> {
        match self {
            CollapseOutcome::Found(d) => Some(d),
            CollapseOutcome::NotFound { .. } => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ReplayError {
    #[error("derivation is empty")]
    Empty,
    #[error("step {0} is not a seed but comes first, or a seed comes later")]
    MisplacedSeed(usize),
    #[error("step {step} refers to step {premise}, which is not earlier")]
    ForwardReference { step: usize, premise: usize },
    #[error("step {0} does not follow from its premises")]
    Unjustified(usize),
    #[error("derivation ends in ({0}, {1}) instead of (0, 1)")]
    WrongConclusion(Element, Element),
}

impl Derivation {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn seed(&self) -> Option<&(Element, Element)> {
        self.steps.first().map(|s| &s.pair)
    }

    pub fn conclusion(&self) -> Option<&(Element, Element)> {
        self.steps.last().map(|s| &s.pair)
    }

    /// Re-checks every step with the normal-form product and confirms the
    /// last pair is `(0, 1)`.
    pub fn replay(&self) -> Result<(), ReplayError> {
        if self.steps.is_empty() {
            return Err(ReplayError::Empty);
        }
        for (i, step) in self.steps.iter().enumerate() {
            let premise = |j: usize| -> Result<&(Element, Element), ReplayError> {
                if j < i {
                    Ok(&self.steps[j].pair)
                } else {
                    Err(ReplayError::ForwardReference {
                        step: i,
                        premise: j,
                    })
                }
            };
            let (x, y) = &step.pair;
            let ok = match &step.rule {
                Rule::Seed => {
                    if i != 0 {
                        return Err(ReplayError::MisplacedSeed(i));
                    }
                    true
                }
                _ if i == 0 => return Err(ReplayError::MisplacedSeed(0)),
                Rule::LeftMultiply { by, from } => {
                    let (p, q) = premise(*from)?;
                    *x == by.product(p) && *y == by.product(q)
                }
                Rule::RightMultiply { by, from } => {
                    let (p, q) = premise(*from)?;
                    *x == p.product(by) && *y == q.product(by)
                }
                Rule::Symmetry { from } => {
                    let (p, q) = premise(*from)?;
                    x == q && y == p
                }
                Rule::Transitivity(first, second) => {
                    let (p, q) = premise(*first)?;
                    let (r, s) = premise(*second)?;
                    x == p && q == r && y == s
                }
            };
            if !ok {
                return Err(ReplayError::Unjustified(i));
            }
        }
        match self.conclusion() {
            Some((x, y)) if x.is_zero() && y.is_one() => Ok(()),
            Some((x, y)) => Err(ReplayError::WrongConclusion(x.clone(), y.clone())),
            None => unreachable!(),
        }
    }
}

impl fmt::Display for Derivation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, step) in self.steps.iter().enumerate() {
            let (x, y) = &step.pair;
            write!(f, "{i}: ({x}, {y}) ")?;
            match &step.rule {
                Rule::Seed => writeln!(f, "seed")?,
                Rule::LeftMultiply { by, from } => writeln!(f, "left-multiply {by} [{from}]")?,
                Rule::RightMultiply { by, from } => writeln!(f, "right-multiply {by} [{from}]")?,
                Rule::Symmetry { from } => writeln!(f, "symmetry [{from}]")?,
                Rule::Transitivity(p, q) => writeln!(f, "transitivity [{p}, {q}]")?,
            }
        }
        Ok(())
    }
}

/// Multipliers tried by the search: the non-trivial elements of `ball(2)`
/// over the letters of the seed plus one unused letter, in ball order.
pub fn multiplier_pool(alphabet: &Alphabet, a: &Element, b: &Element) -> Vec<Element> {
    let letters = alphabet.letters_with_fresh([a, b]);
    elements_within(&letters, 2)
        .into_iter()
        .filter(|m| !m.is_zero() && !m.is_one())
        .collect()
}

struct Node {
    pair: (Element, Element),
    rule: Rule,
}

struct Search {
    nodes: Vec<Node>,
    index: HashMap<(Element, Element), usize>,
    by_first: HashMap<Element, Vec<usize>>,
    by_second: HashMap<Element, Vec<usize>>,
}

impl Search {
    /// Records a new pair; returns its id when it is new and non-reflexive.
    fn insert(&mut self, pair: (Element, Element), rule: Rule) -> Option<usize> {
        if pair.0 == pair.1 || self.index.contains_key(&pair) {
            return None;
        }
        let id = self.nodes.len();
        self.index.insert(pair.clone(), id);
        self.by_first.entry(pair.0.clone()).or_default().push(id);
        self.by_second.entry(pair.1.clone()).or_default().push(id);
        self.nodes.push(Node { pair, rule });
        Some(id)
    }

    fn is_target(&self, id: usize) -> bool {
        let (x, y) = &self.nodes[id].pair;
        x.is_zero() && y.is_one()
    }

    /// Linearises the proof DAG below `target`, premises first.
    fn derivation(&self, target: usize) -> Derivation {
        let mut order: HashMap<usize, usize> = HashMap::new();
        let mut steps = Vec::new();
        let mut stack = vec![(target, false)];
        while let Some((id, expanded)) = stack.pop() {
            if order.contains_key(&id) {
                continue;
            }
            let premises: Vec<usize> = match &self.nodes[id].rule {
                Rule::Seed => vec![],
                Rule::LeftMultiply { from, .. }
                | Rule::RightMultiply { from, .. }
                | Rule::Symmetry { from } => vec![*from],
                Rule::Transitivity(p, q) => vec![*p, *q],
            };
            if expanded || premises.iter().all(|p| order.contains_key(p)) {
                let remap = |j: &usize| order[j];
                let rule = match &self.nodes[id].rule {
                    Rule::Seed => Rule::Seed,
                    Rule::LeftMultiply { by, from } => Rule::LeftMultiply {
                        by: by.clone(),
                        from: remap(from),
                    },
                    Rule::RightMultiply { by, from } => Rule::RightMultiply {
                        by: by.clone(),
                        from: remap(from),
                    },
                    Rule::Symmetry { from } => Rule::Symmetry { from: remap(from) },
                    Rule::Transitivity(p, q) => Rule::Transitivity(remap(p), remap(q)),
                };
                order.insert(id, steps.len());
                steps.push(Step {
                    pair: self.nodes[id].pair.clone(),
                    rule,
                });
            } else {
                stack.push((id, true));
                stack.extend(premises.iter().rev().map(|&p| (p, false)));
            }
        }
        Derivation { steps }
    }
}

/// Searches the congruence generated by `(a, b)` for the pair `(0, 1)`.
///
/// Each round applies, to every pair derived in the previous round and in
/// derivation order: left multiplication by each pool element, right
/// multiplication by each pool element, symmetry, then transitivity against
/// every pair known so far. The first `(0, 1)` produced ends the search, so
/// results are deterministic and the derivation has minimal round count.
pub fn collapse_witness(
    alphabet: &Alphabet,
    a: &Element,
    b: &Element,
    max_depth: usize,
) -> Result<CollapseOutcome> {
    if a == b {
        return Err(Error::EqualPair);
    }
    alphabet.check(a)?;
    alphabet.check(b)?;

    let pool = multiplier_pool(alphabet, a, b);
    let mut search = Search {
        nodes: Vec::new(),
        index: HashMap::new(),
        by_first: HashMap::new(),
        by_second: HashMap::new(),
    };
    let seed = search
        .insert((a.clone(), b.clone()), Rule::Seed)
        .expect("distinct seed");
    if search.is_target(seed) {
        return Ok(CollapseOutcome::Found(search.derivation(seed)));
    }

    let mut frontier = vec![seed];
    for _ in 0..max_depth {
        let mut next = Vec::new();
        for &id in &frontier {
            let (x, y) = search.nodes[id].pair.clone();
            let mut candidates: Vec<((Element, Element), Rule)> = Vec::new();
            for m in &pool {
                candidates.push((
                    (m.product(&x), m.product(&y)),
                    Rule::LeftMultiply {
                        by: m.clone(),
                        from: id,
                    },
                ));
            }
            for m in &pool {
                candidates.push((
                    (x.product(m), y.product(m)),
                    Rule::RightMultiply {
                        by: m.clone(),
                        from: id,
                    },
                ));
            }
            candidates.push(((y.clone(), x.clone()), Rule::Symmetry { from: id }));
            // (x, y) then (y, z)
            for &j in search.by_first.get(&y).into_iter().flatten() {
                let z = &search.nodes[j].pair.1;
                candidates.push(((x.clone(), z.clone()), Rule::Transitivity(id, j)));
            }
            // (w, x) then (x, y)
            for &j in search.by_second.get(&x).into_iter().flatten() {
                let w = &search.nodes[j].pair.0;
                candidates.push(((w.clone(), y.clone()), Rule::Transitivity(j, id)));
            }

            for (pair, rule) in candidates {
                if let Some(new) = search.insert(pair, rule) {
                    if search.is_target(new) {
                        return Ok(CollapseOutcome::Found(search.derivation(new)));
                    }
                    next.push(new);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        frontier = next;
    }
    Ok(CollapseOutcome::NotFound { max_depth })
}
