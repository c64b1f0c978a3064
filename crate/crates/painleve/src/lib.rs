//! Exact verification toolkit for the nonlinear side of the diagonal
//! correlation story: the quadratic second-derivative relations their
//! logarithmic derivatives satisfy, the local expansion coefficients at
//! the singular points, reduction of annihilating operators to
//! first-order-variable polynomial form, elimination down to plane curves
//! with rational parametrizations, and the Hamiltonian formulation.
//!
//! Everything is exact: series residuals carry explicit validity windows,
//! curve and parametrization identities are polynomial or rational-function
//! zeros, never numerical approximations.

pub mod hamilton;
pub mod jimbo;
pub mod printed;
pub mod riccati;
pub mod sigma;
pub mod pvi;

pub use hamilton::{
    hamiltonian_residual, ising_n_set, EKPolynomialT, Hamiltonian, HamiltonianData, RationalEK,
};
pub use jimbo::{degeneration_condition, jimbo_coefficients, DegenerationReport, JimboData, JimboMode};
pub use riccati::{
    curve_residual, eliminate_curve, param_verify, riccati_consistency, riccatize, CurveRelation,
    ParamData, RiccatiData,
};
pub use sigma::{sigma_bundle, power_product_sigma, Regime, SigmaBundle};
pub use pvi::{
    ising_params, jm_poly, pvi_poly, pvi_residual, pvi_residual_general, tau_power_check,
    PVIParams, TauPowerReport,
};

pub use exactcore::{Error, Result};
