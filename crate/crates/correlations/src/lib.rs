//! Diagonal Ising correlation series and their closed forms.
//!
//! The pipeline: hypergeometric Toeplitz entries feed an exact minor-expansion
//! determinant (`toeplitz`), complete elliptic integral series evaluate E/K
//! polynomial closed forms (`elliptic`, `ekpoly`), and the second-order
//! hypergeometric solution shares its leading coefficients with the
//! correlation series up to a computable boundary term (`hyper`).
//!
//! Everything is exact rational arithmetic on truncated series; every series
//! carries its own validity bound, so precision bookkeeping is checked by the
//! type rather than by convention.

pub mod ekpoly;
pub mod elliptic;
pub mod hyper;
pub mod toeplitz;

pub use ekpoly::{ek_evaluate, CoefficientFunction, EKPolynomial};
pub use elliptic::{elliptic_series, elliptic_series_t, EllipticKind};
pub use hyper::{
    boundary_gap, boundary_gap_dual, hyper_operator, hyper_solution, leading_data, BoundaryGap,
    HyperSolution, LeadingData,
};
pub use toeplitz::{correlation_diag, series_determinant, toeplitz_entry, ToeplitzSpec};

pub use exactcore::{Error, Result};
