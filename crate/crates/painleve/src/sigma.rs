//! Logarithmic-derivative variables attached to a correlation series.

use exactcore::rational::{rat, rat_i, Rat};
use exactcore::series::{TruncatedSeries, Var};
use exactcore::Result;

/// Which of the two temperature expansions the series belongs to. The
/// regimes differ in the constant subtracted from the logarithmic
/// derivative and in the expected leading behavior of the input.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    HighT,
    LowT,
}

/// A function of t together with its first three derivatives, all exact
/// truncated series on a common exponent grid.
#[derive(Debug, Clone)]
pub struct SigmaBundle {
    pub regime: Regime,
    pub n: Rat,
    pub s: [TruncatedSeries; 4],
}

impl SigmaBundle {
    /// Builds the jet of an explicitly given value series.
    pub fn from_sigma(s0: TruncatedSeries, regime: Regime, n: Rat) -> Self {
        let s1 = s0.derivative();
        let s2 = s1.derivative();
        let s3 = s2.derivative();
        SigmaBundle { regime, n, s: [s0, s1, s2, s3] }
    }

    pub fn variable(&self) -> Var {
        self.s[0].variable()
    }

    /// Shifts the value by -n^2 t/4 + 1/8 and the first derivative by
    /// -n^2/4, the change of dependent variable that turns the Ising-form
    /// relation into the four-parameter one.
    pub fn to_zeta(&self) -> Result<SigmaBundle> {
        let var = self.variable();
        let q = &self.n * &self.n * rat(1, 4);
        let shift0 = TruncatedSeries::from_int_coeffs(var, 0, vec![rat(1, 8), -q.clone()]);
        let s0 = self.s[0].add(&shift0)?;
        let s1 = self.s[1].sub(&TruncatedSeries::constant(var, q))?;
        Ok(SigmaBundle {
            regime: self.regime,
            n: self.n.clone(),
            s: [s0, s1, self.s[2].clone(), self.s[3].clone()],
        })
    }
}

/// Builds sigma = t(t-1) (log C)' - 1/4 (high temperature) or - t/4 (low
/// temperature) and its derivative jet.
pub fn sigma_bundle(c: &TruncatedSeries, regime: Regime, n: &Rat) -> Result<SigmaBundle> {
    let var = c.variable();
    let tt1 = TruncatedSeries::from_int_coeffs(var, 1, vec![rat_i(-1), rat_i(1)]);
    let log_deriv = c.derivative().mul(&c.recip()?)?;
    let shift = match regime {
        Regime::HighT => TruncatedSeries::constant(var, rat(1, 4)),
        Regime::LowT => TruncatedSeries::monomial(var, rat(1, 4), 1, 1),
    };
    let s0 = tt1.mul(&log_deriv)?.sub(&shift)?;
    Ok(SigmaBundle::from_sigma(s0, regime, n.clone()))
}

impl SigmaBundle {
    /// The value at t = 0, when the grid retains it.
    pub fn value_at_origin(&self) -> Option<Rat> {
        self.s[0].coeff(0, self.s[0].ramification())
    }
}

/// Realizes sigma for the pure power product t^alpha (1-t)^beta, whose
/// logarithmic derivative is alpha/t - beta/(1-t) exactly, so the result
/// is the exact polynomial (alpha+beta) t - alpha - 1/4.
pub fn power_product_sigma(alpha: &Rat, beta: &Rat, var: Var) -> TruncatedSeries {
    let linear = alpha + beta;
    let constant = -alpha - rat(1, 4);
    TruncatedSeries::from_int_coeffs(var, 0, vec![constant, linear])
}

#[cfg(test)]
mod tests {
    use super::*;
    use correlations::toeplitz::{correlation_diag, ToeplitzSpec};

    fn bundle(n: u32, dual: bool, order: i64) -> SigmaBundle {
        let c = correlation_diag(&ToeplitzSpec { n, dual, order }).unwrap();
        let regime = if dual { Regime::LowT } else { Regime::HighT };
        sigma_bundle(&c, regime, &rat_i(n as i64)).unwrap()
    }

    #[test]
    fn origin_values_follow_the_leading_exponent() {
        assert_eq!(bundle(1, false, 12).value_at_origin(), Some(rat(-3, 4)));
        assert_eq!(bundle(2, false, 12).value_at_origin(), Some(rat(-5, 4)));
        assert_eq!(bundle(3, false, 12).value_at_origin(), Some(rat(-7, 4)));
    }

    #[test]
    fn low_temperature_value_vanishes_at_origin() {
        for n in 1..=3u32 {
            let b = bundle(n, true, 12);
            assert_eq!(b.value_at_origin(), Some(rat_i(0)));
            // The gap at t^1..t^n also closes: the first activity appears
            // at the correction order of the dual correlation.
            for j in 1..=(n as i64) {
                assert_eq!(b.s[0].coeff(j, 1), Some(rat_i(0)), "n={n} j={j}");
            }
        }
    }

    #[test]
    fn jet_entries_are_successive_derivatives() {
        let b = bundle(2, false, 15);
        for k in 0..3 {
            assert!(b.s[k].derivative().sub(&b.s[k + 1]).unwrap().is_zero());
        }
    }

    #[test]
    fn power_product_sigma_matches_series_route() {
        // tau = t^{1/2} (1-t)^{3} expanded as a series must give the same
        // sigma as the closed form.
        let alpha = rat(1, 2);
        let beta = rat_i(3);
        let order = 12;
        let pow = TruncatedSeries::monomial(Var::T, rat_i(1), 1, 2);
        let cube = TruncatedSeries::from_int_coeffs(Var::T, 0, vec![rat_i(1), rat_i(-1)])
            .pow(3)
            .unwrap();
        let tau = pow.mul(&cube).unwrap().truncate_order(order);
        let via_series = sigma_bundle(&tau, Regime::HighT, &rat_i(0)).unwrap();
        let closed = power_product_sigma(&alpha, &beta, Var::T);
        assert!(via_series.s[0].sub(&closed).unwrap().is_zero());
    }

    #[test]
    fn zeta_shift_moves_value_and_slope_only() {
        let b = bundle(2, false, 15);
        let z = b.to_zeta().unwrap();
        let back = z.s[0]
            .sub(&TruncatedSeries::from_int_coeffs(Var::T, 0, vec![rat(1, 8), rat_i(-1)]))
            .unwrap();
        assert!(back.sub(&b.s[0]).unwrap().is_zero());
        assert!(z.s[2].sub(&b.s[2]).unwrap().is_zero());
        assert!(z.s[1].derivative().sub(&z.s[2]).unwrap().is_zero());
    }
}
