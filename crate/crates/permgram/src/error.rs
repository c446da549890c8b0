use crate::poly::Var;
use crate::trees::Side;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("cannot substitute `{var}`: it occurs with a negative exponent, so its replacement must be a single-term monomial with nonzero coefficient")]
    NonInvertibleSubstitution { var: Var },

    #[error("series truncation orders differ: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("n = {n} exceeds the exhaustive enumeration limit of {limit}")]
    SizeTooLarge { n: usize, limit: usize },

    #[error("not a permutation: {0}")]
    MalformedPermutation(String),

    #[error("not a disjoint cycle decomposition: {0}")]
    MalformedCycles(String),

    #[error("malformed tree: {0}")]
    MalformedTree(String),

    #[error("vertex {parent} has no {side} leaf")]
    NoSuchLeaf { parent: usize, side: Side },

    #[error("slot {slot} out of range 1..={max}")]
    SlotOutOfRange { slot: usize, max: usize },

    #[error("permutation and tree are not coherent: {0}")]
    Incoherent(String),

    #[error("unknown grammar `{0}` (built-ins: dumont, dumont-b)")]
    UnknownGrammar(String),

    #[error("unknown statistic `{0}`")]
    UnknownStatistic(String),

    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),

    #[error("unknown suite `{0}` (available: all, grammar, series, identities, bijection)")]
    UnknownSuite(String),

    #[error("parse error: {0}")]
    Parse(String),
}
