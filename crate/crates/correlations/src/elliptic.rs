//! Complete elliptic integral series in both variable conventions.
//!
//! `elliptic_series` expands in s with argument s^4 (the low-order gaps are
//! real: only every fourth power appears); `elliptic_series_t` expands the
//! same hypergeometric function with argument t, which is what the derivative
//! identities and the Toeplitz entries use. The two are related by t = s^4.

use exactcore::pfq::pfq_series;
use exactcore::rational::{rat, rat_i, Rat};
use exactcore::series::{binomial_series, TruncatedSeries, Var, VarMap};
use exactcore::Result;

/// Which complete elliptic integral to expand.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EllipticKind {
    /// Second kind: upper parameters (1/2, -1/2).
    E,
    /// First kind: upper parameters (1/2, 1/2).
    K,
}

impl EllipticKind {
    fn second_upper(self) -> Rat {
        match self {
            EllipticKind::E => rat(-1, 2),
            EllipticKind::K => rat(1, 2),
        }
    }
}

/// E or K as a series in s, valid through s^(order-1).
pub fn elliptic_series(kind: EllipticKind, order: i64) -> Result<TruncatedSeries> {
    let inner = (order.max(0) + 3).div_euclid(4);
    let f = pfq_series(
        &[rat(1, 2), kind.second_upper()],
        &[rat(1, 1)],
        Var::S,
        inner,
    )?;
    Ok(f
        .change_variable(&VarMap::Power {
            new_var: Var::S,
            k: 4,
        })?
        .truncate_order(order))
}

/// E or K with series argument t, valid through t^(order-1).
pub fn elliptic_series_t(kind: EllipticKind, order: i64) -> Result<TruncatedSeries> {
    pfq_series(&[rat(1, 2), kind.second_upper()], &[rat(1, 1)], Var::T, order)
}

/// (1 + s^2)^(1/2), valid through s^(order-1).
pub fn sqrt_one_plus_square(order: i64) -> Result<TruncatedSeries> {
    let inner = (order.max(0) + 1).div_euclid(2);
    binomial_series(&rat(1, 2), Var::S, inner)
        .change_variable(&VarMap::Power {
            new_var: Var::S,
            k: 2,
        })
        .map(|s| s.truncate_order(order))
}

/// (1 - x)^a, valid through x^(order-1).
pub fn power_one_minus(a: &Rat, variable: Var, order: i64) -> TruncatedSeries {
    let n = order.max(0) as usize;
    let mut coeffs = Vec::with_capacity(n);
    let mut c = rat_i(1);
    for k in 0..n {
        coeffs.push(c.clone());
        // Next binomial term of (1 + (-x))^a.
        c = -c * (a - rat_i(k as i64)) / rat_i(k as i64 + 1);
    }
    TruncatedSeries::truncated_from(variable, 0, coeffs, order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use exactcore::rational::rat_i;

    fn coeff(s: &TruncatedSeries, n: i64) -> Rat {
        s.coeff_int(n).unwrap_or_else(|| rat_i(0))
    }

    #[test]
    fn series_match_known_expansions() {
        let e = elliptic_series(EllipticKind::E, 16).unwrap();
        assert_eq!(coeff(&e, 0), rat_i(1));
        assert_eq!(coeff(&e, 4), rat(-1, 4));
        assert_eq!(coeff(&e, 8), rat(-3, 64));
        assert_eq!(coeff(&e, 12), rat(-5, 256));
        assert_eq!(coeff(&e, 2), rat_i(0));

        let k = elliptic_series(EllipticKind::K, 16).unwrap();
        assert_eq!(coeff(&k, 0), rat_i(1));
        assert_eq!(coeff(&k, 4), rat(1, 4));
        assert_eq!(coeff(&k, 8), rat(9, 64));
        assert_eq!(coeff(&k, 12), rat(25, 256));
    }

    #[test]
    fn t_derivative_identities() {
        // E'(t) = (E - K) / (2t) and K'(t) = (E - (1-t)K) / (2t(1-t)).
        let order = 24;
        let e = elliptic_series_t(EllipticKind::E, order).unwrap();
        let k = elliptic_series_t(EllipticKind::K, order).unwrap();
        let two_t = TruncatedSeries::monomial(Var::T, rat_i(2), 1, 1);
        let lhs_e = e.derivative().mul(&two_t).unwrap();
        let rhs_e = e.sub(&k).unwrap();
        assert!(lhs_e.sub(&rhs_e).unwrap().is_zero());

        let one_minus_t = TruncatedSeries::from_int_coeffs(
            Var::T,
            0,
            vec![rat_i(1), rat_i(-1)],
        );
        let lhs_k = k
            .derivative()
            .mul(&two_t)
            .unwrap()
            .mul(&one_minus_t)
            .unwrap();
        let rhs_k = e.sub(&one_minus_t.mul(&k).unwrap()).unwrap();
        assert!(lhs_k.sub(&rhs_k).unwrap().is_zero());
    }

    #[test]
    fn sqrt_factor_squares_back() {
        let r = sqrt_one_plus_square(20).unwrap();
        assert_eq!(coeff(&r, 0), rat_i(1));
        assert_eq!(coeff(&r, 2), rat(1, 2));
        assert_eq!(coeff(&r, 4), rat(-1, 8));
        let squared = r.mul(&r).unwrap();
        assert_eq!(coeff(&squared, 0), rat_i(1));
        assert_eq!(coeff(&squared, 2), rat_i(1));
        for n in [4, 6, 8, 10] {
            assert_eq!(coeff(&squared, n), rat_i(0));
        }
    }

    #[test]
    fn one_minus_power_inverts() {
        let a = rat(1, 4);
        let p = power_one_minus(&a, Var::T, 18);
        let q = power_one_minus(&-a, Var::T, 18);
        let product = p.mul(&q).unwrap();
        assert_eq!(coeff(&product, 0), rat_i(1));
        for n in 1..17 {
            assert_eq!(coeff(&product, n), rat_i(0));
        }
        assert_eq!(coeff(&p, 1), rat(-1, 4));
        assert_eq!(coeff(&p, 2), rat(-3, 32));
    }
}
