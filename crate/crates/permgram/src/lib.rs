//! Exact symbolic machinery for grammar-driven permutation enumeration.
//!
//! A context-free grammar over the variables `a, b, x, y, z` induces a formal
//! derivative `D` that acts on Laurent polynomials by the Leibniz rule.  For
//! Dumont's grammar `{a -> az, x -> xy, y -> xy, z -> xy}` the iterates
//! `D^n(a)` enumerate permutations of `[n]` by excedances, drops, and fixed
//! points — and, less obviously, by jumps, descents, and left successions.
//! This crate implements the calculus, the permutation statistics, slot
//! labelings that realize each derivation step as an element insertion, the
//! companion increasing binary trees, and the resulting bijection `phi`
//! carrying a prescribed left-succession set to the same fixed-point set.
//!
//! Entry points:
//!
//! * [`poly::LaurentPolynomial`] — exact sparse arithmetic over `a, b, x, y, z`
//! * [`grammar::Grammar`] — substitution rules and the formal derivative
//! * [`series::TruncatedEgf`] — truncated exponential generating functions
//! * [`perms`] — permutations, scalar and set-valued statistics, distributions
//! * [`labeling`] — grammatical slot labelings and element insertion
//! * [`trees`] — leaf-labeled complete increasing binary trees
//! * [`bijection`] — the coherence pairing and the map `phi`
//! * [`verify`] — the named-check verification suites and EGF identity catalog
//!
//! The `examples/` directory exercises every capability end to end; the
//! `permgram` binary exposes the same operations as subcommands.

pub mod bijection;
pub mod grammar;
pub mod labeling;
pub mod perms;
pub mod poly;
pub mod series;
pub mod trees;
pub mod verify;

mod error;

pub use error::Error;
