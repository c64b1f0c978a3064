//! The quadratic-in-second-derivative relations as explicit polynomials,
//! and residual evaluation on series jets.

use exactcore::multipoly::{MultiPoly, Sym};
use exactcore::rational::{rat, rat_i, Rat};
use exactcore::series::{TruncatedSeries, Var};
use exactcore::Result;

use crate::sigma::{power_product_sigma, Regime, SigmaBundle};

/// Parameter quadruple of the four-parameter relation, with the two
/// derived combinations entering the tau-function shift.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PVIParams {
    pub v: [Rat; 4],
}

impl PVIParams {
    pub fn new(v: [Rat; 4]) -> Self {
        PVIParams { v }
    }

    /// v1 v2 - v1 v3 - v2 v3.
    pub fn k1(&self) -> Rat {
        let [v1, v2, v3, _] = &self.v;
        v1 * v2 - v1 * v3 - v2 * v3
    }

    /// -(v1 v2 - v1 v3 - v1 v4 - v2 v3 - v2 v4 + v3 v4)/2.
    pub fn k2(&self) -> Rat {
        let [v1, v2, v3, v4] = &self.v;
        -(v1 * v2 - v1 * v3 - v1 * v4 - v2 * v3 - v2 * v4 + v3 * v4) * rat(1, 2)
    }
}

/// The parameter set that specializes the four-parameter relation to the
/// n-indexed one: (n/2, (1-n)/2, (1+n)/2, n/2).
pub fn ising_params(n: &Rat) -> PVIParams {
    let half = rat(1, 2);
    PVIParams::new([
        n * &half,
        (rat_i(1) - n) * &half,
        (rat_i(1) + n) * &half,
        n * &half,
    ])
}

fn tpoly(coeffs: &[i64]) -> MultiPoly {
    MultiPoly::from_poly(&exactcore::poly::Poly::from_ints(coeffs), Sym::T)
}

/// The n-indexed relation as a polynomial in S0, S1, S2 and T:
/// (t(t-1) S2)^2 - n^2 ((t-1) S1 - S0)^2
/// + 4 S1 ((t-1) S1 - S0 - 1/4)(t S1 - S0).
pub fn jm_poly(n: &Rat) -> MultiPoly {
    let s0 = MultiPoly::var(Sym::S0);
    let s1 = MultiPoly::var(Sym::S1);
    let s2 = MultiPoly::var(Sym::S2);
    let tt1 = tpoly(&[0, -1, 1]);
    let lead = tt1.mul(&s2).pow(2);
    let a = tpoly(&[-1, 1]).mul(&s1).sub(&s0);
    let b = a.sub(&MultiPoly::constant(rat(1, 4)));
    let c = tpoly(&[0, 1]).mul(&s1).sub(&s0);
    let nn = MultiPoly::constant(n * n);
    lead.sub(&nn.mul(&a.pow(2)))
        .add(&s1.scale(&rat_i(4)).mul(&b).mul(&c))
}

/// The four-parameter relation in the shifted variable, as a polynomial in
/// S0 (the value), S1, S2 and T:
/// S1 (t(t-1) S2)^2 + (2 S1 (t S1 - S0) - S1^2 - v1 v2 v3 v4)^2
/// - (S1 + v1^2)(S1 + v2^2)(S1 + v3^2)(S1 + v4^2).
pub fn pvi_poly(params: &PVIParams) -> MultiPoly {
    let s0 = MultiPoly::var(Sym::S0);
    let s1 = MultiPoly::var(Sym::S1);
    let s2 = MultiPoly::var(Sym::S2);
    let tt1 = tpoly(&[0, -1, 1]);
    let lead = s1.mul(&tt1.mul(&s2).pow(2));
    let vprod = params.v.iter().fold(rat_i(1), |acc, vi| acc * vi);
    let mid = s1
        .scale(&rat_i(2))
        .mul(&tpoly(&[0, 1]).mul(&s1).sub(&s0))
        .sub(&s1.pow(2))
        .sub(&MultiPoly::constant(vprod));
    let mut rhs = MultiPoly::one();
    for vi in &params.v {
        rhs = rhs.mul(&s1.add(&MultiPoly::constant(vi * vi)));
    }
    lead.add(&mid.pow(2)).sub(&rhs)
}

fn t_series(var: Var) -> TruncatedSeries {
    TruncatedSeries::monomial(var, rat_i(1), 1, 1)
}

fn eval_on_jet(rel: &MultiPoly, s: &SigmaBundle) -> Result<TruncatedSeries> {
    let var = s.variable();
    rel.eval_series(&[
        (Sym::S0, s.s[0].clone()),
        (Sym::S1, s.s[1].clone()),
        (Sym::S2, s.s[2].clone()),
        (Sym::T, t_series(var)),
    ])
}

/// Residual of the n-indexed relation on a sigma jet; identically zero to
/// the jet's valid order exactly when the jet solves the relation.
pub fn pvi_residual(s: &SigmaBundle) -> Result<TruncatedSeries> {
    eval_on_jet(&jm_poly(&s.n), s)
}

/// Residual of the four-parameter relation on a jet of the shifted
/// variable supplied by the caller.
pub fn pvi_residual_general(zeta: &SigmaBundle, params: &PVIParams) -> Result<TruncatedSeries> {
    eval_on_jet(&pvi_poly(params), zeta)
}

/// Report of the power-product membership test.
#[derive(Debug, Clone)]
pub struct TauPowerReport {
    /// (4 beta - 1)^2 n^2 + 16 beta (4 alpha + 1)(alpha + beta).
    pub constraint: Rat,
    /// Exact residual of the relation on sigma built from t^alpha (1-t)^beta.
    pub residual: TruncatedSeries,
}

/// Tests whether t^alpha (1-t)^beta generates a solution of the n-indexed
/// relation. The sigma value is the exact linear polynomial
/// (alpha+beta) t - alpha - 1/4, so the residual is exact as well and the
/// vanishing of the printed constraint is equivalent to its vanishing.
pub fn tau_power_check(alpha: &Rat, beta: &Rat, n: &Rat, var: Var) -> Result<TauPowerReport> {
    let four_beta = beta * rat_i(4) - rat_i(1);
    let constraint = &four_beta * &four_beta * (n * n)
        + rat_i(16) * beta * (alpha * rat_i(4) + rat_i(1)) * (alpha + beta);
    let s0 = power_product_sigma(alpha, beta, var);
    let jet = SigmaBundle::from_sigma(s0, Regime::HighT, n.clone());
    let residual = pvi_residual(&jet)?;
    Ok(TauPowerReport { constraint, residual })
}
