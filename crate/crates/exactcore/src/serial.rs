//! Serde mirrors for the exact types.
//!
//! Rationals travel as strings ("p" or "p/q") so JSON numbers never round.
//! The mirrors are plain data; conversions to the working types validate.

use crate::multipoly::{Expo, MultiPoly, SYM_COUNT};
use crate::poly::Poly;
use crate::ratfun::RationalFunction;
use crate::rational::{parse_rat, Rat};
use crate::series::{TruncatedSeries, Var};
use crate::{Error, Result};
use num::traits::One;
use serde::{Deserialize, Serialize};

pub fn rat_to_string(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn rats_to_strings(rs: &[Rat]) -> Vec<String> {
    rs.iter().map(rat_to_string).collect()
}

pub fn strings_to_rats(ss: &[String]) -> Result<Vec<Rat>> {
    ss.iter().map(|s| parse_rat(s)).collect()
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct SeriesDto {
    pub variable: String,
    pub ramification: u32,
    pub base_exponent: i64,
    pub coefficients: Vec<String>,
    pub valid_order: Option<i64>,
}

impl From<&TruncatedSeries> for SeriesDto {
    fn from(s: &TruncatedSeries) -> Self {
        SeriesDto {
            variable: s.variable().name().to_string(),
            ramification: s.ramification(),
            base_exponent: s.base_units(),
            coefficients: rats_to_strings(s.coefficients()),
            valid_order: s.valid_units(),
        }
    }
}

impl TryFrom<&SeriesDto> for TruncatedSeries {
    type Error = Error;

    fn try_from(d: &SeriesDto) -> Result<TruncatedSeries> {
        if d.ramification == 0 {
            return Err(Error::Parse("ramification must be positive".into()));
        }
        Ok(TruncatedSeries::new(
            Var::parse(&d.variable)?,
            d.ramification,
            d.base_exponent,
            strings_to_rats(&d.coefficients)?,
            d.valid_order,
        ))
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct MultiPolyTermDto {
    pub exponents: Vec<u32>,
    pub coefficient: String,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct MultiPolyDto {
    pub terms: Vec<MultiPolyTermDto>,
}

impl From<&MultiPoly> for MultiPolyDto {
    fn from(p: &MultiPoly) -> Self {
        MultiPolyDto {
            terms: p
                .terms()
                .map(|(e, c)| MultiPolyTermDto {
                    exponents: e.0.to_vec(),
                    coefficient: rat_to_string(c),
                })
                .collect(),
        }
    }
}

impl TryFrom<&MultiPolyDto> for MultiPoly {
    type Error = Error;

    fn try_from(d: &MultiPolyDto) -> Result<MultiPoly> {
        let mut out = MultiPoly::zero();
        for t in &d.terms {
            if t.exponents.len() != SYM_COUNT {
                return Err(Error::Parse(format!(
                    "term needs {SYM_COUNT} exponents, got {}",
                    t.exponents.len()
                )));
            }
            let mut e = Expo::zero();
            e.0.copy_from_slice(&t.exponents);
            out = out.add(&MultiPoly::monomial(parse_rat(&t.coefficient)?, e));
        }
        Ok(out)
    }
}

/// One operator coefficient as a reduced fraction of polynomials, each a
/// list of ascending coefficients.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct RatFunDto {
    pub numerator_coeffs: Vec<String>,
    pub denominator_coeffs: Vec<String>,
}

impl From<&RationalFunction> for RatFunDto {
    fn from(f: &RationalFunction) -> Self {
        RatFunDto {
            numerator_coeffs: rats_to_strings(f.numerator().coeffs()),
            denominator_coeffs: rats_to_strings(f.denominator().coeffs()),
        }
    }
}

impl TryFrom<&RatFunDto> for RationalFunction {
    type Error = Error;

    fn try_from(d: &RatFunDto) -> Result<RationalFunction> {
        RationalFunction::new(
            Poly::new(strings_to_rats(&d.numerator_coeffs)?),
            Poly::new(strings_to_rats(&d.denominator_coeffs)?),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multipoly::Sym;
    use crate::rational::rat;

    #[test]
    fn series_round_trip() {
        let s = TruncatedSeries::new(
            Var::T,
            2,
            -1,
            vec![rat(1, 2), rat(0, 1), rat(-3, 4)],
            Some(7),
        );
        let dto = SeriesDto::from(&s);
        let json = serde_json::to_string(&dto).unwrap();
        let back: SeriesDto = serde_json::from_str(&json).unwrap();
        assert_eq!(TruncatedSeries::try_from(&back).unwrap(), s);
    }

    #[test]
    fn multipoly_round_trip() {
        let p = MultiPoly::var(Sym::S0)
            .pow(2)
            .sub(&MultiPoly::var(Sym::T).scale(&rat(3, 7)));
        let dto = MultiPolyDto::from(&p);
        let json = serde_json::to_string(&dto).unwrap();
        let back: MultiPolyDto = serde_json::from_str(&json).unwrap();
        assert_eq!(MultiPoly::try_from(&back).unwrap(), p);
        let bad = MultiPolyDto {
            terms: vec![MultiPolyTermDto {
                exponents: vec![1, 2],
                coefficient: "1".into(),
            }],
        };
        assert!(MultiPoly::try_from(&bad).is_err());
    }

    #[test]
    fn ratfun_round_trip() {
        let f = RationalFunction::new(
            Poly::from_ints(&[0, 0, 1]),
            Poly::from_ints(&[-1, 1]),
        )
        .unwrap();
        let dto = RatFunDto::from(&f);
        assert_eq!(RationalFunction::try_from(&dto).unwrap(), f);
        let bad = RatFunDto {
            numerator_coeffs: vec!["1".into()],
            denominator_coeffs: vec!["0".into()],
        };
        assert!(RationalFunction::try_from(&bad).is_err());
    }
}
