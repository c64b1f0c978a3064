//! Exact arithmetic foundation for the whole workspace.
//!
//! Everything downstream (Toeplitz determinants, differential operators,
//! Painleve residuals) is built on four ingredients that live here:
//!
//! * [`Rat`] — arbitrary-precision rationals, always reduced, positive
//!   denominator,
//! * [`TruncatedSeries`] — power series with rational exponents on a
//!   ramified ladder (exponents in (1/r)Z), explicit `valid_order`
//!   bookkeeping, and exact-polynomial support,
//! * [`Poly`] / [`RationalFunction`] — dense univariate polynomials over Q
//!   and reduced ratios of them,
//! * [`MultiPoly`] — sparse multivariate polynomials over a fixed symbol
//!   set, with graded-lex canonical term order and Sylvester-resultant
//!   elimination,
//!
//! plus fraction-free integer linear algebra ([`linalg`]) for exact
//! nullspaces, and a serialization layer ([`serial`]) that round-trips all
//! of the above bit-exactly through JSON.
//!
//! No floating point appears anywhere; every operation either returns an
//! exact object (with a truncation bound where one applies) or an error.

pub mod linalg;
pub mod multipoly;
pub mod pfq;
pub mod poly;
pub mod ratfun;
pub mod rational;
pub mod serial;
pub mod series;

pub use multipoly::{MultiPoly, Sym};
pub use pfq::{pfq_at_one, pfq_series};
pub use poly::Poly;
pub use ratfun::RationalFunction;
pub use rational::{rat, rat_i, Rat};
pub use series::{binomial_series, TruncatedSeries, Var, VarMap};

/// Errors shared by the exact-arithmetic layer.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("series variables differ: {0} vs {1}")]
    VariableMismatch(Var, Var),
    #[error("series is not invertible: {0}")]
    NotInvertible(String),
    #[error("ill-posed hypergeometric parameters: {0}")]
    IllPosedParameters(String),
    #[error("unsupported operation: {0}")]
    Unsupported(String),
    #[error("division is not exact: {0}")]
    InexactDivision(String),
    #[error("truncation deficit: needed valid order {needed}, have {have}")]
    TruncationDeficit { needed: i64, have: i64 },
    #[error("nothing to eliminate: {0}")]
    NothingToEliminate(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("insufficient series length: need {needed} usable coefficients, have {have}")]
    InsufficientSeries { needed: i64, have: i64 },
    #[error("ambiguous: enlarge margin (nullspace dimension {0})")]
    Ambiguous(usize),
    #[error("no operator within bounds")]
    NoOperatorWithinBounds,
}

pub type Result<T> = std::result::Result<T, Error>;
