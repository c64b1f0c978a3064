//! Generalized hypergeometric series pFq by term recurrence.
//!
//! The k-th term obeys `T_{k+1} = T_k * prod(a_i + k) / (prod(b_j + k) * (k+1))`,
//! so the whole truncation is one pass of exact rational updates. An upper
//! parameter hitting zero terminates the series (all later terms vanish);
//! a lower parameter hitting zero *before* termination is ill-posed and
//! reported.

use crate::rational::{rat_i, Rat};
use crate::series::{TruncatedSeries, Var};
use crate::{Error, Result};
use num::traits::{One, Zero};

/// pFq(upper; lower; x) as a series in `variable` through `x^(order-1)`.
pub fn pfq_series(
    upper: &[Rat],
    lower: &[Rat],
    variable: Var,
    order: i64,
) -> Result<TruncatedSeries> {
    Ok(TruncatedSeries::truncated_from(
        variable,
        0,
        pfq_coefficients(upper, lower, order.max(0) as usize)?,
        order,
    ))
}

/// Sum of a *terminating* pFq at x = 1 (exact). Errors when no upper
/// parameter terminates the series.
pub fn pfq_at_one(upper: &[Rat], lower: &[Rat]) -> Result<Rat> {
    // Termination index: smallest -a over nonpositive-integer uppers.
    let k_stop = upper
        .iter()
        .filter(|a| crate::rational::is_nonpositive_integer(a))
        .map(|a| -a.numer().clone())
        .min()
        .ok_or_else(|| {
            Error::IllPosedParameters(
                "pFq at unit argument needs a terminating upper parameter".into(),
            )
        })?;
    let k_stop = usize::try_from(k_stop).map_err(|_| {
        Error::IllPosedParameters("termination index does not fit a machine word".into())
    })?;
    let coeffs = pfq_coefficients(upper, lower, k_stop + 1)?;
    Ok(coeffs.into_iter().sum())
}

fn pfq_coefficients(upper: &[Rat], lower: &[Rat], n: usize) -> Result<Vec<Rat>> {
    let mut coeffs = Vec::with_capacity(n);
    let mut term = Rat::one();
    for k in 0..n {
        coeffs.push(term.clone());
        if term.is_zero() {
            continue;
        }
        let kk = rat_i(k as i64);
        let mut num = Rat::one();
        let mut terminated = false;
        for a in upper {
            let f = a + &kk;
            if f.is_zero() {
                terminated = true;
                break;
            }
            num *= f;
        }
        if terminated {
            term = Rat::zero();
            continue;
        }
        let mut den = &kk + Rat::one();
        for b in lower {
            let f = b + &kk;
            if f.is_zero() {
                return Err(Error::IllPosedParameters(format!(
                    "lower parameter {b} reaches zero at k = {k} before any upper \
                     parameter terminates the series"
                )));
            }
            den *= f;
        }
        term = term * num / den;
    }
    Ok(coeffs)
}
