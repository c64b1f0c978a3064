//! Kind-specific fixture payloads and their conversions into the working
//! types of the sibling crates.
//!
//! Operator and elliptic-form payloads reuse the serialization types those
//! crates already define; the composite payloads below cover the objects
//! that only exist as structs (parametrization, flow, canonical
//! coordinates, expansion table).

use exactcore::multipoly::MultiPoly;
use exactcore::poly::Poly;
use exactcore::ratfun::RationalFunction;
use exactcore::rational::parse_rat;
use exactcore::serial::{strings_to_rats, MultiPolyDto, RatFunDto};
use exactcore::{Error, Result};
use painleve::{
    EKPolynomialT, Hamiltonian, HamiltonianData, JimboData, ParamData, RationalEK, RiccatiData,
};
use serde::{Deserialize, Serialize};

fn poly_from_strings(coeffs: &[String]) -> Result<Poly> {
    Ok(Poly::new(strings_to_rats(coeffs)?))
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ParamDto {
    pub s0_num: MultiPolyDto,
    pub s0_den: MultiPolyDto,
    pub s1_num: MultiPolyDto,
    pub s1_den: MultiPolyDto,
}

impl TryFrom<&ParamDto> for ParamData {
    type Error = Error;

    fn try_from(d: &ParamDto) -> Result<ParamData> {
        Ok(ParamData {
            s0_num: MultiPoly::try_from(&d.s0_num)?,
            s0_den: MultiPoly::try_from(&d.s0_den)?,
            s1_num: MultiPoly::try_from(&d.s1_num)?,
            s1_den: MultiPoly::try_from(&d.s1_den)?,
        })
    }
}

/// Flow scale(t) u' = c2(t) u^2 + c1(t) u + c0(t), each entry an ascending
/// coefficient list.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RiccatiDto {
    pub scale: Vec<String>,
    pub c2: Vec<String>,
    pub c1: Vec<String>,
    pub c0: Vec<String>,
}

impl TryFrom<&RiccatiDto> for RiccatiData {
    type Error = Error;

    fn try_from(d: &RiccatiDto) -> Result<RiccatiData> {
        Ok(RiccatiData {
            scale: poly_from_strings(&d.scale)?,
            c2: poly_from_strings(&d.c2)?,
            c1: poly_from_strings(&d.c1)?,
            c0: poly_from_strings(&d.c0)?,
        })
    }
}

/// One E^e K^k term with a polynomial coefficient in t.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EKTermDto {
    pub e_pow: u32,
    pub k_pow: u32,
    pub coefficients: Vec<String>,
}

/// Products of E, K polynomials over a t-polynomial head on each side of
/// the fraction, plus a rational scalar.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RationalEKDto {
    pub scalar: String,
    pub numerator_t: Vec<String>,
    pub numerator: Vec<Vec<EKTermDto>>,
    pub denominator_t: Vec<String>,
    pub denominator: Vec<Vec<EKTermDto>>,
}

fn ek_factor(terms: &[EKTermDto]) -> Result<EKPolynomialT> {
    let mut out = Vec::with_capacity(terms.len());
    for t in terms {
        out.push((t.e_pow, t.k_pow, poly_from_strings(&t.coefficients)?));
    }
    Ok(EKPolynomialT::new(out))
}

fn ek_factors(factors: &[Vec<EKTermDto>]) -> Result<Vec<EKPolynomialT>> {
    factors.iter().map(|f| ek_factor(f)).collect()
}

impl TryFrom<&RationalEKDto> for RationalEK {
    type Error = Error;

    fn try_from(d: &RationalEKDto) -> Result<RationalEK> {
        Ok(RationalEK {
            scalar: parse_rat(&d.scalar)?,
            numerator_t: poly_from_strings(&d.numerator_t)?,
            numerator: ek_factors(&d.numerator)?,
            denominator_t: poly_from_strings(&d.denominator_t)?,
            denominator: ek_factors(&d.denominator)?,
        })
    }
}

/// Canonical coordinates plus the parameter quadruple of the Hamiltonian
/// they satisfy.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct HamiltonianPQDto {
    pub n: [String; 4],
    pub p: RationalEKDto,
    pub q: RationalEKDto,
}

impl TryFrom<&HamiltonianPQDto> for HamiltonianData {
    type Error = Error;

    fn try_from(d: &HamiltonianPQDto) -> Result<HamiltonianData> {
        let mut n = Vec::with_capacity(4);
        for s in &d.n {
            n.push(parse_rat(s)?);
        }
        let n: [_; 4] = n.try_into().expect("four entries by construction");
        Ok(HamiltonianData {
            hamiltonian: Hamiltonian::new(n),
            p: RationalEK::try_from(&d.p)?,
            q: RationalEK::try_from(&d.q)?,
        })
    }
}

/// Boundary expansion coefficients: the three quadratic exponents and the
/// first five correction terms, all in the boundary parameter.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct JimboTableDto {
    pub p0: Vec<String>,
    pub p1: Vec<String>,
    pub p_infinity: Vec<String>,
    pub a1_0_m1: RatFunDto,
    pub a1_0_p1: RatFunDto,
    pub a1_1_0: RatFunDto,
    pub a1_0_m2: RatFunDto,
    pub a1_0_p2: RatFunDto,
}

impl TryFrom<&JimboTableDto> for JimboData {
    type Error = Error;

    fn try_from(d: &JimboTableDto) -> Result<JimboData> {
        Ok(JimboData {
            p0: poly_from_strings(&d.p0)?,
            p1: poly_from_strings(&d.p1)?,
            p_infinity: poly_from_strings(&d.p_infinity)?,
            a1_0_m1: RationalFunction::try_from(&d.a1_0_m1)?,
            a1_0_p1: RationalFunction::try_from(&d.a1_0_p1)?,
            a1_1_0: RationalFunction::try_from(&d.a1_1_0)?,
            a1_0_m2: RationalFunction::try_from(&d.a1_0_m2)?,
            a1_0_p2: RationalFunction::try_from(&d.a1_0_p2)?,
        })
    }
}
