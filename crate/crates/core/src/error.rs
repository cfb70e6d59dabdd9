use thiserror::Error;

use crate::element::Letter;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a polycyclic monoid needs at least 2 generators, got {0}")]
    TooFewGenerators(usize),

    #[error("letter {letter} is outside the alphabet of size {size}")]
    AlphabetMismatch { letter: Letter, size: usize },

    #[error("zero has no downset")]
    ZeroHasNoDownset,

    #[error("collapse search needs two distinct elements")]
    EqualPair,

    #[error("elements lie in different R-classes")]
    KeyMismatch,

    #[error("the solution set is only finite for non-zero arguments")]
    ZeroArgument,

    #[error("operation needs a finite alphabet")]
    InfiniteAlphabet,

    #[error("translation by zero is trivially continuous")]
    ZeroTranslation,

    #[error("witness families need a non-zero target")]
    ZeroTarget,

    #[error("radius {radius} is smaller than the class prefix length {min}")]
    RadiusTooSmall { radius: usize, min: usize },

    #[error("a neighborhood of zero cannot exclude zero")]
    ExcludesZero,

    #[error("solution of length {length} found beyond the solver bound {bound}")]
    BoundViolated { bound: usize, length: usize },

    #[error("count does not fit in 128 bits")]
    CountOverflow,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
