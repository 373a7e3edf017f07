//! Exact computation of torsion functors and locally nilradicals for
//! finitely generated modules over `Z` and `Z/nZ`.
//!
//! The crate is organised around a Smith-normal-form engine ([`matrix`]),
//! a canonical module layer ([`fgmod`]), the functor layer ([`functor`]),
//! brute-force submodule lattices ([`lattice`]), degree-bounded polynomial
//! checks ([`poly`]) and principal local cohomology ([`cohomology`]).
//! [`suites`] bundles everything into deterministic verification fleets
//! driven by the `locnil` binary.

pub mod cohomology;
pub mod fgmod;
pub mod functor;
pub mod lattice;
pub mod matrix;
pub mod parse;
pub mod poly;
pub mod report;
pub mod ring;
pub mod suites;

use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("input must be positive, got 0")]
    ZeroInput,
    #[error("factorization input {0} exceeds the trial-division cap {1}")]
    FactorCapExceeded(String, String),
    #[error("exponent k must be positive")]
    ZeroExponent,
    #[error("matrix dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("modules live over different rings")]
    RingMismatch,
    #[error("submodule parent mismatch")]
    ParentMismatch,
    #[error("torsion coefficient must be >= 2, got {0}")]
    BadCoefficient(String),
    #[error("module is not finite")]
    NotFinite,
    #[error("cardinality {0} exceeds the cap {1}")]
    CapExceeded(String, String),
    #[error("module is not cyclic")]
    NotCyclic,
    #[error("module is not reduced")]
    NotReduced,
    #[error("module is not a-reduced for a = {0}")]
    NotAReduced(String),
    #[error("submodule must be proper")]
    NotProper,
    #[error("search space {0} exceeds the cap {1}")]
    SearchCapExceeded(String, String),
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
}

pub type Result<T> = std::result::Result<T, Error>;
