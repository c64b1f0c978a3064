//! Polynomial closed forms in the complete elliptic integrals.
//!
//! A form is a finite sum of monomials E^i K^j, each weighted by a Laurent
//! polynomial in s that may carry one factor of (1 + s^2)^(1/2). Evaluation
//! substitutes the elliptic series; the s-budget is padded by the deepest
//! pole among the weights, so negative weight exponents cannot silently eat
//! the requested validity.

use std::collections::{BTreeMap, BTreeSet};

use exactcore::rational::{parse_rat, Rat};
use exactcore::series::{TruncatedSeries, Var};
use exactcore::{Error, Result};
use num::traits::Zero;
use serde::{Deserialize, Serialize};

use crate::elliptic::{elliptic_series, sqrt_one_plus_square, EllipticKind};

/// Weight of one E^i K^j monomial: a Laurent polynomial in s, times
/// (1 + s^2)^(1/2) when `sqrt` is set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoefficientFunction {
    /// Exponent of the first entry of `coeffs`.
    pub base: i64,
    /// Ascending contiguous coefficients from `base`.
    pub coeffs: Vec<Rat>,
    pub sqrt: bool,
}

impl CoefficientFunction {
    pub fn new(base: i64, coeffs: Vec<Rat>, sqrt: bool) -> Self {
        CoefficientFunction { base, coeffs, sqrt }
    }

    pub fn from_ints(base: i64, coeffs: &[i64], sqrt: bool) -> Self {
        CoefficientFunction {
            base,
            coeffs: coeffs.iter().map(|&c| Rat::from_integer(c.into())).collect(),
            sqrt,
        }
    }

    /// The Laurent factor as an exact series.
    pub fn laurent(&self) -> TruncatedSeries {
        TruncatedSeries::new(Var::S, 1, self.base, self.coeffs.clone(), None)
    }

    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }
}

/// A labeled sum of E^i K^j monomials with `CoefficientFunction` weights.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct EKPolynomial {
    pub label: String,
    pub monomials: BTreeMap<(u32, u32), CoefficientFunction>,
}

impl EKPolynomial {
    pub fn new(label: impl Into<String>) -> Self {
        EKPolynomial {
            label: label.into(),
            monomials: BTreeMap::new(),
        }
    }

    /// Adds the weight for E^i K^j; a second insert for the key replaces.
    pub fn insert(&mut self, i: u32, j: u32, weight: CoefficientFunction) {
        self.monomials.insert((i, j), weight);
    }

    /// Total degrees i + j that actually occur.
    pub fn degrees(&self) -> BTreeSet<u32> {
        self.monomials
            .iter()
            .filter(|(_, w)| !w.is_zero())
            .map(|(&(i, j), _)| i + j)
            .collect()
    }
}

/// Substitutes the elliptic series into the form; valid through s^(order-1).
pub fn ek_evaluate(form: &EKPolynomial, order: i64) -> Result<TruncatedSeries> {
    let margin = form
        .monomials
        .values()
        .map(|w| (-w.base).max(0))
        .max()
        .unwrap_or(0);
    let needed = order.max(0) + margin;
    let e = elliptic_series(EllipticKind::E, needed)?;
    let k = elliptic_series(EllipticKind::K, needed)?;
    let root = if form.monomials.values().any(|w| w.sqrt) {
        Some(sqrt_one_plus_square(needed)?)
    } else {
        None
    };
    let mut acc = TruncatedSeries::zero_truncated(Var::S, order);
    for (&(i, j), weight) in &form.monomials {
        let mut term = e.pow(i)?.mul(&k.pow(j)?)?;
        term = term.mul(&weight.laurent())?;
        if weight.sqrt {
            let root = root.as_ref().expect("computed when any weight needs it");
            term = term.mul(root)?;
        }
        acc = acc.add(&term)?;
    }
    Ok(acc.truncate_order(order))
}

/// Serialized weight: rationals as strings, exponents explicit.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct EKMonomialDto {
    pub i: u32,
    pub j: u32,
    pub base: i64,
    pub laurent_coefficients: Vec<String>,
    pub sqrt_flag: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct EKPolynomialDto {
    pub label: String,
    pub monomials: Vec<EKMonomialDto>,
}

impl From<&EKPolynomial> for EKPolynomialDto {
    fn from(form: &EKPolynomial) -> Self {
        EKPolynomialDto {
            label: form.label.clone(),
            monomials: form
                .monomials
                .iter()
                .map(|(&(i, j), w)| EKMonomialDto {
                    i,
                    j,
                    base: w.base,
                    laurent_coefficients: w.coeffs.iter().map(Rat::to_string).collect(),
                    sqrt_flag: w.sqrt,
                })
                .collect(),
        }
    }
}

impl TryFrom<&EKPolynomialDto> for EKPolynomial {
    type Error = Error;

    fn try_from(dto: &EKPolynomialDto) -> Result<Self> {
        let mut form = EKPolynomial::new(dto.label.clone());
        for m in &dto.monomials {
            if form.monomials.contains_key(&(m.i, m.j)) {
                return Err(Error::Parse(format!(
                    "duplicate monomial E^{} K^{} in \"{}\"",
                    m.i, m.j, dto.label
                )));
            }
            let coeffs = m
                .laurent_coefficients
                .iter()
                .map(|s| parse_rat(s))
                .collect::<Result<Vec<_>>>()?;
            form.insert(m.i, m.j, CoefficientFunction::new(m.base, coeffs, m.sqrt_flag));
        }
        Ok(form)
    }
}
