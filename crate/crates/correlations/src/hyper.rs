//! The second-order hypergeometric companion of the diagonal correlations.
//!
//! `hyper_operator(N)` is the annihilator with exponents (+-N/2) at 0,
//! (1/4, 1/4) at 1 and (1/4 +- N/2) at infinity. Its solutions f_plus and
//! f_minus exist as a pair only for non-integer N; at integer N the second
//! solution picks up a logarithm and only the analytic branch survives,
//! normalized so that it shares its leading coefficients with C(N,N). The
//! first coefficient where they part ways is the boundary gap.

use diffops::DiffOperator;
use exactcore::pfq::{pfq_at_one, pfq_series};
use exactcore::poly::Poly;
use exactcore::rational::{as_i64, factorial, pochhammer, rat, rat_i, Rat};
use exactcore::ratfun::RationalFunction;
use exactcore::series::{TruncatedSeries, Var};
use exactcore::{Error, Result};
use num::traits::{One, Signed, Zero};
use num::ToPrimitive;

use crate::elliptic::power_one_minus;
use crate::toeplitz::{correlation_diag, ToeplitzSpec};

/// First two series coefficients of the diagonal correlation C(N,N).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeadingData {
    /// Coefficient of t^(N/2): (2N)! / (N!^2 4^N).
    pub d0: Rat,
    /// Coefficient of t^(N/2 + 1): (2N)! N / (N! (N+1)! 4^(N+1)).
    pub d1: Rat,
}

pub fn leading_data(n: u32) -> LeadingData {
    let two_n = factorial(2 * n);
    let four_n = rat_i(4).pow(n as i32);
    let d0 = &two_n / (factorial(n) * factorial(n) * &four_n);
    let d1 = &two_n * rat_i(i64::from(n))
        / (factorial(n) * factorial(n + 1) * four_n * rat_i(4));
    LeadingData { d0, d1 }
}

/// Solution pair of `hyper_operator(N)` with mixing weight lambda.
#[derive(Clone, Debug)]
pub struct HyperSolution {
    pub n: Rat,
    pub lambda: Rat,
    /// Leading exponent +N/2. For integer N this is the normalized series
    /// sharing its leading coefficients with C(N,N).
    pub f_plus: TruncatedSeries,
    /// Leading exponent -N/2; absent for integer N (logarithmic case).
    pub f_minus: Option<TruncatedSeries>,
}

impl HyperSolution {
    /// f_plus + lambda f_minus (just f_plus when the pair degenerates).
    pub fn mixture(&self) -> Result<TruncatedSeries> {
        match &self.f_minus {
            Some(fm) => self.f_plus.add(&fm.scale(&self.lambda)),
            None => Ok(self.f_plus.clone()),
        }
    }
}

fn monomial_power(n: &Rat) -> Result<TruncatedSeries> {
    let num = n.numer().to_i64().ok_or_else(|| {
        Error::Unsupported("solution exponent numerator exceeds machine range".into())
    })?;
    let den = n.denom().to_u32().ok_or_else(|| {
        Error::Unsupported("solution exponent denominator exceeds machine range".into())
    })?;
    Ok(TruncatedSeries::monomial(Var::T, Rat::one(), num, den))
}

fn branch(n: &Rat, sign: i64, order: i64) -> Result<TruncatedSeries> {
    let half = n / rat_i(2) * rat_i(sign);
    // Budget: the prefactor shifts by sign*N/2, so the analytic factors need
    // order + ceil(|N/2|) extra terms to keep the requested window.
    let pad = (n / rat_i(2)).abs().ceil().to_integer().to_i64().unwrap_or(0) + 1;
    let inner = order.max(1) + pad;
    let f = pfq_series(
        &[rat(1, 2), rat(1, 2) + n * rat_i(sign)],
        &[rat_i(1) + n * rat_i(sign)],
        Var::T,
        inner,
    )?;
    let quarter_root = power_one_minus(&rat(1, 4), Var::T, inner);
    let prefactor = monomial_power(&half)?;
    Ok(f
        .mul(&quarter_root)?
        .mul(&prefactor)?
        .truncate_order(order))
}

/// Solution data at the given N and mixing weight, valid through
/// t^(order - 1).
///
/// Integer N: lambda must be 0 (the second solution is logarithmic) and
/// f_plus comes back normalized by d0(N).
pub fn hyper_solution(n: &Rat, lambda: &Rat, order: i64) -> Result<HyperSolution> {
    match as_i64(n) {
        Some(k) if k >= 0 => {
            if !lambda.is_zero() {
                return Err(Error::Unsupported(
                    "logarithmic second solution unsupported".into(),
                ));
            }
            let d0 = leading_data(k as u32).d0;
            Ok(HyperSolution {
                n: n.clone(),
                lambda: lambda.clone(),
                f_plus: branch(n, 1, order)?.scale(&d0),
                f_minus: None,
            })
        }
        Some(_) => Err(Error::IllPosedParameters(
            "negative integer N leaves no analytic branch".into(),
        )),
        None => Ok(HyperSolution {
            n: n.clone(),
            lambda: lambda.clone(),
            f_plus: branch(n, 1, order)?,
            f_minus: Some(branch(n, -1, order)?),
        }),
    }
}

/// Coefficient of t^(N/2 + k) in the normalized analytic solution, computed
/// through the terminating 3F2 route rather than by series assembly.
pub fn hyper_coefficient(n: u32, k: u32) -> Result<Rat> {
    let d0 = leading_data(n).d0;
    let nn = rat_i(i64::from(n));
    let kk = rat_i(i64::from(k));
    let f = pfq_at_one(
        &[rat(1, 2), rat(1, 2) + &nn, -kk],
        &[rat_i(1) + &nn, rat(5, 4) - rat_i(i64::from(k))],
    )?;
    Ok(d0 * pochhammer(&rat(-1, 4), k) / factorial(k) * f)
}

/// The annihilator of f_plus and f_minus:
/// D^2 + (1/t + 1/(2(t-1))) D - N^2/(4 t^2) + 1/(16 (t-1)^2).
pub fn hyper_operator(n: &Rat) -> DiffOperator {
    let n2 = n * n;
    let c1 = RationalFunction::new(Poly::from_ints(&[-2, 3]), Poly::from_ints(&[0, -2, 2]))
        .expect("fixed nonzero denominator");
    // (-4N^2 (t-1)^2 + t^2) / (16 t^2 (t-1)^2)
    let num = Poly::new(vec![
        -rat_i(4) * &n2,
        rat_i(8) * &n2,
        rat_i(1) - rat_i(4) * &n2,
    ]);
    let den = Poly::from_ints(&[0, 0, 16, -32, 16]);
    let c0 = RationalFunction::new(num, den).expect("fixed nonzero denominator");
    DiffOperator::new(
        Var::T,
        vec![c0, c1, RationalFunction::one()],
    )
}

/// Where and how the correlation series and the analytic solution separate.
#[derive(Clone, Debug)]
pub struct BoundaryGap {
    pub leading_exponent: Rat,
    pub leading_coefficient: Rat,
    /// The full difference series, valid through the requested order.
    pub gap: TruncatedSeries,
}

/// Predicted gap location and size in the high-temperature regime:
/// exponent 3N/2 + 2, coefficient (1/2)_N ((3/2)_N)^2 / (16 (N+1)! ((N+2)!)^2).
pub fn boundary_gap_prediction(n: u32) -> (Rat, Rat) {
    let exponent = rat(3 * i64::from(n) + 4, 2);
    let coefficient = pochhammer(&rat(1, 2), n) * pochhammer(&rat(3, 2), n).pow(2)
        / (rat_i(16) * factorial(n + 1) * factorial(n + 2).pow(2));
    (exponent, coefficient)
}

/// Low-temperature analogue for C*(N,N) - (1-t)^(1/4):
/// exponent N + 1, coefficient (1/2)_N (3/2)_N / (4 ((N+1)!)^2).
pub fn boundary_gap_dual_prediction(n: u32) -> (Rat, Rat) {
    let exponent = rat_i(i64::from(n) + 1);
    let coefficient = pochhammer(&rat(1, 2), n) * pochhammer(&rat(3, 2), n)
        / (rat_i(4) * factorial(n + 1).pow(2));
    (exponent, coefficient)
}

fn gap_from(difference: TruncatedSeries, needed: Rat, order: i64) -> Result<BoundaryGap> {
    match difference.leading() {
        Some((e, c)) => Ok(BoundaryGap {
            leading_exponent: e,
            leading_coefficient: c.clone(),
            gap: difference.clone(),
        }),
        None => Err(Error::TruncationDeficit {
            needed: needed.ceil().to_integer().to_i64().unwrap_or(i64::MAX) + 1,
            have: order,
        }),
    }
}

/// C(N,N) - h_N computed from both definitions, valid through
/// t^(order - 1). Errors with a truncation deficit if the order does not
/// reach the gap.
pub fn boundary_gap(n: u32, order: i64) -> Result<BoundaryGap> {
    if n == 0 {
        return Err(Error::Unsupported("diagonal separation must be positive".into()));
    }
    let c = correlation_diag(&ToeplitzSpec { n, dual: false, order })?;
    let h = hyper_solution(&rat_i(i64::from(n)), &rat_i(0), order)?;
    let difference = c.sub(&h.f_plus)?;
    gap_from(difference, boundary_gap_prediction(n).0, order)
}

/// C*(N,N) - (1-t)^(1/4), valid through t^(order - 1).
pub fn boundary_gap_dual(n: u32, order: i64) -> Result<BoundaryGap> {
    if n == 0 {
        return Err(Error::Unsupported("diagonal separation must be positive".into()));
    }
    let c = correlation_diag(&ToeplitzSpec { n, dual: true, order })?;
    let difference = c.sub(&power_one_minus(&rat(1, 4), Var::T, order))?;
    gap_from(difference, boundary_gap_dual_prediction(n).0, order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use diffops::{fuchsian_analysis, Location};

    #[test]
    fn leading_data_examples() {
        let l1 = leading_data(1);
        assert_eq!(l1.d0, rat(1, 2));
        assert_eq!(l1.d1, rat(1, 16));
        let l2 = leading_data(2);
        assert_eq!(l2.d0, rat(3, 8));
        assert_eq!(l2.d1, rat(1, 16));
    }

    #[test]
    fn normalized_solution_matches_correlation_window() {
        for n in 1..=3u32 {
            let order = 3 * i64::from(n) / 2 + 4;
            let c = correlation_diag(&ToeplitzSpec { n, dual: false, order }).unwrap();
            let h = hyper_solution(&rat_i(i64::from(n)), &rat_i(0), order).unwrap();
            let gap_at = boundary_gap_prediction(n).0;
            let diff = c.sub(&h.f_plus).unwrap();
            let (lead, _) = diff.leading().expect("gap inside window");
            assert_eq!(lead, gap_at, "N = {n}");
        }
    }

    #[test]
    fn coefficient_route_agrees_with_assembly() {
        for n in 1..=3u32 {
            let h = hyper_solution(&rat_i(i64::from(n)), &rat_i(0), 9).unwrap();
            for k in 0..6u32 {
                let direct = hyper_coefficient(n, k).unwrap();
                let assembled = h
                    .f_plus
                    .coeff(i64::from(n) + 2 * i64::from(k), 2)
                    .unwrap_or_else(|| rat_i(0));
                assert_eq!(direct, assembled, "N = {n}, k = {k}");
            }
            assert_eq!(hyper_coefficient(n, 0).unwrap(), leading_data(n).d0);
            assert_eq!(hyper_coefficient(n, 1).unwrap(), leading_data(n).d1);
        }
    }

    #[test]
    fn boundary_gap_examples() {
        let g1 = boundary_gap(1, 6).unwrap();
        assert_eq!(g1.leading_exponent, rat(7, 2));
        assert_eq!(g1.leading_coefficient, rat(1, 1024));
        let (pe, pc) = boundary_gap_prediction(1);
        assert_eq!((pe, pc), (rat(7, 2), rat(1, 1024)));

        let g2 = boundary_gap(2, 8).unwrap();
        assert_eq!(g2.leading_exponent, rat_i(5));
        assert_eq!(g2.leading_coefficient, rat(25, 131072));
        assert_eq!(boundary_gap_prediction(2).1, rat(25, 131072));
    }

    #[test]
    fn dual_boundary_gap_examples() {
        let g1 = boundary_gap_dual(1, 6).unwrap();
        assert_eq!(g1.leading_exponent, rat_i(2));
        assert_eq!(g1.leading_coefficient, rat(3, 64));

        let g2 = boundary_gap_dual(2, 7).unwrap();
        assert_eq!(g2.leading_exponent, rat_i(3));
        assert_eq!(g2.leading_coefficient, rat(5, 256));

        for n in 1..=4u32 {
            let order = i64::from(n) + 3;
            let g = boundary_gap_dual(n, order).unwrap();
            let (pe, pc) = boundary_gap_dual_prediction(n);
            assert_eq!(g.leading_exponent, pe, "N = {n}");
            assert_eq!(g.leading_coefficient, pc, "N = {n}");
        }
    }

    #[test]
    fn gap_outside_window_is_a_deficit_error() {
        match boundary_gap(1, 3) {
            Err(Error::TruncationDeficit { needed, have }) => {
                assert_eq!(have, 3);
                assert!(needed > 3);
            }
            other => panic!("expected truncation deficit, got {other:?}"),
        }
    }

    #[test]
    fn operator_annihilates_integer_solution() {
        for n in 1..=3u32 {
            let op = hyper_operator(&rat_i(i64::from(n)));
            let h = hyper_solution(&rat_i(i64::from(n)), &rat_i(0), 14).unwrap();
            assert!(op.annihilates(&h.f_plus), "N = {n}");
        }
    }

    #[test]
    fn operator_annihilates_noninteger_pair() {
        for (p, q) in [(1i64, 3i64), (2, 5)] {
            let n = rat(p, q);
            let op = hyper_operator(&n);
            let h = hyper_solution(&n, &rat_i(1), 10).unwrap();
            assert!(op.annihilates(&h.f_plus));
            assert!(op.annihilates(h.f_minus.as_ref().unwrap()));
            assert!(op.annihilates(&h.mixture().unwrap()));
        }
    }

    #[test]
    fn noninteger_leading_exponents() {
        let n = rat(1, 3);
        let h = hyper_solution(&n, &rat_i(1), 8).unwrap();
        assert_eq!(h.f_plus.leading().unwrap().0, rat(1, 6));
        assert_eq!(h.f_minus.as_ref().unwrap().leading().unwrap().0, rat(-1, 6));
        // Opposite prefactors cancel: the product is analytic with value 1.
        let product = h.f_plus.mul(h.f_minus.as_ref().unwrap()).unwrap();
        assert_eq!(product.leading().unwrap(), (rat_i(0), &rat_i(1)));
    }

    #[test]
    fn integer_mixture_requests_are_rejected() {
        match hyper_solution(&rat_i(2), &rat_i(1), 8) {
            Err(Error::Unsupported(msg)) => {
                assert_eq!(msg, "logarithmic second solution unsupported")
            }
            other => panic!("expected unsupported, got {other:?}"),
        }
    }

    #[test]
    fn operator_exponent_structure() {
        let op = hyper_operator(&rat_i(2));
        let report = fuchsian_analysis(&op).unwrap();
        let find = |loc: &Location| {
            report
                .iter()
                .find(|p| p.location == *loc)
                .expect("analyzed point")
        };
        let at0 = find(&Location::Finite(rat_i(0)));
        assert_eq!(at0.exponents.rational, vec![(rat_i(-1), 1), (rat_i(1), 1)]);
        let at1 = find(&Location::Finite(rat_i(1)));
        assert_eq!(at1.exponents.rational, vec![(rat(1, 4), 2)]);
        let atinf = find(&Location::Infinity);
        assert_eq!(
            atinf.exponents.rational,
            vec![(rat(-3, 4), 1), (rat(5, 4), 1)]
        );
        assert!(report.iter().all(|p| p.regular));
    }
}
