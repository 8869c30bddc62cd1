//! Combinatorics of pattern-avoiding permutations on grids.
//!
//! The crate has four layers:
//!
//! * [`perm`] — permutations, classical pattern containment, left-to-right
//!   minima / right-to-left maxima, avoidance-class enumeration, and skew
//!   decomposition.
//! * [`staircase`] — the staircase grid `B_a`, the staircase encoding of a
//!   permutation, its downcore graph, and the inverse decoding back to the
//!   unique 132-avoider.
//! * [`grid`] — general box sets, boundary grids of 123-avoiding
//!   permutations, skew Young diagrams, downcore graphs, maximal
//!   independent sets, and purity.
//! * [`closed`] / [`series`] — exact arbitrary-precision closed forms
//!   (`I(n,k)`, `J(l,k)`, Catalan, Fibonacci) and the truncated bivariate
//!   power-series engine for the generating-function identity.
//!
//! [`verify`] ties these together into named cross-checking suites where
//! every closed form is compared against an independent brute-force count.

pub mod closed;
pub mod grid;
pub mod perm;
pub mod series;
pub mod staircase;
pub mod verify;

/// Crate-wide error type.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("resource limit exceeded: {0}")]
    Resource(String),
}

pub type Result<T> = std::result::Result<T, Error>;
