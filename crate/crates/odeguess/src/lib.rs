//! Recovery of annihilating operators from truncated series by exact
//! linear algebra.
//!
//! A candidate shape (order, per-coefficient degree bounds) spans a finite
//! basis of monomial operators p(t) D^i. Applying each to the input series
//! and equating ladder coefficients to zero gives a rational linear system;
//! a one-dimensional nullspace is the operator, zero dimensions means the
//! shape cannot annihilate the series, more than one is reported as
//! under-determined rather than picked from arbitrarily.
//!
//! Soundness is split between the fit and the check: only the first
//! `unknowns + safety_margin` ladder slots are used as equations, and the
//! candidate must then annihilate the entire input window. Callers enforce
//! the anti-overfit contract by passing series longer than the fit window.

pub mod fit;
pub mod profile;

pub use fit::{guess_ode, minimal_ode};
pub use profile::{DegreeProfile, GuessSpec};

pub use exactcore::{Error, Result};
