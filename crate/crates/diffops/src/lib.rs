//! Linear ordinary differential operators with rational-function
//! coefficients, and the structural analysis built on them.
//!
//! The pieces:
//!   - [`DiffOperator`]: the ring element itself (apply, compose, right
//!     Euclidean division).
//!   - [`change_var`]: variable substitutions and conjugations.
//!   - [`series_sol`]: local power-series machinery (indicial data,
//!     recurrence extension, Frobenius solutions).
//!   - [`algfield`]: arithmetic in quotient rings, with on-demand
//!     splitting of reducible moduli.
//!   - [`fuchsian`]: singular-point classification, critical exponents,
//!     apparent-singularity detection.
//!   - [`euclid`]: GCRD and LCLM.
//!   - [`sympow`]: symmetric powers of second-order operators.
//!   - [`intertwine`]: linear search for intertwining pairs.

pub mod algfield;
pub mod change_var;
pub mod euclid;
pub mod fuchsian;
pub mod intertwine;
pub mod op;
pub mod serial;
pub mod series_sol;
pub mod sympow;

pub use euclid::{gcrd, lclm};
pub use fuchsian::{fuchsian_analysis, ExponentReport, Location, PointAnalysis};
pub use op::DiffOperator;
pub use series_sol::{extend_series, indicial_polynomial, LocalData};
pub use sympow::symmetric_power;

pub use exactcore::{Error, Result};
