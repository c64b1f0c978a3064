//! Hamiltonian form of the sigma equation and its printed (p, q) data.
//!
//! The canonical coordinates attached to a diagonal correlation are
//! homogeneous-degree-balanced rational functions of the two complete
//! elliptic integrals, so the series checks below evaluate E and K with
//! their hypergeometric normalization (both 1 at t = 0) and never need
//! the pi/2 prefactors.

use correlations::{elliptic_series_t, EllipticKind};
use exactcore::poly::Poly;
use exactcore::rational::{rat, Rat};
use exactcore::series::{TruncatedSeries, Var};
use exactcore::{Error, Result};
use num::traits::Zero;

/// Homogeneous polynomial in (E, K) with t-polynomial coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EKPolynomialT {
    /// (E power, K power, coefficient in t) triples.
    pub terms: Vec<(u32, u32, Poly)>,
}

impl EKPolynomialT {
    pub fn new(terms: Vec<(u32, u32, Poly)>) -> Self {
        EKPolynomialT { terms }
    }

    pub fn eval(&self, e: &TruncatedSeries, k: &TruncatedSeries) -> Result<TruncatedSeries> {
        let var = e.variable();
        let mut acc = TruncatedSeries::zero_exact(var);
        for (ep, kp, c) in &self.terms {
            let mut term = poly_series(var, c);
            if *ep > 0 {
                term = term.mul(&e.pow(*ep)?)?;
            }
            if *kp > 0 {
                term = term.mul(&k.pow(*kp)?)?;
            }
            acc = acc.add(&term)?;
        }
        Ok(acc)
    }
}

/// Product-form rational function of (E, K, t):
/// scalar * numerator_t * prod(numerator) / (denominator_t * prod(denominator)).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalEK {
    pub scalar: Rat,
    pub numerator_t: Poly,
    pub numerator: Vec<EKPolynomialT>,
    pub denominator_t: Poly,
    pub denominator: Vec<EKPolynomialT>,
}

impl RationalEK {
    pub fn eval(&self, e: &TruncatedSeries, k: &TruncatedSeries) -> Result<TruncatedSeries> {
        let var = e.variable();
        let mut num = poly_series(var, &self.numerator_t).scale(&self.scalar);
        for f in &self.numerator {
            num = num.mul(&f.eval(e, k)?)?;
        }
        let mut den = poly_series(var, &self.denominator_t);
        for f in &self.denominator {
            den = den.mul(&f.eval(e, k)?)?;
        }
        if den.is_exact() {
            den = match e.valid_exponent() {
                Some(v) => {
                    let units = (v * Rat::from_integer(i64::from(e.ramification()).into()))
                        .floor()
                        .to_integer();
                    let units = i64::try_from(units)
                        .map_err(|_| Error::Unsupported("validity bound overflow".into()))?;
                    den.truncate_exponent(units, e.ramification())
                }
                None => {
                    return Err(Error::Unsupported(
                        "cannot invert an exact denominator against exact series".into(),
                    ))
                }
            };
        }
        num.div(&den)
    }
}

fn poly_series(var: Var, p: &Poly) -> TruncatedSeries {
    TruncatedSeries::from_int_coeffs(var, 0, p.coeffs().to_vec())
}

/// t(t-1) H as a polynomial in p (outer index) and q (inner index) with
/// t-polynomial coefficients:
/// q(q-1)(q-t) p^2 - Q(q) p + (n3-n1)(n3-n2)(q-t).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hamiltonian {
    n: [Rat; 4],
    coeffs: Vec<Vec<Poly>>,
}

impl Hamiltonian {
    pub fn new(n: [Rat; 4]) -> Self {
        let [n1, n2, n3, n4] = n.clone();
        let a = Poly::constant(&n3 * rat(2, 1) - &n1 - &n2);
        let b = Poly::new(vec![
            -(&n3 + &n4) + (&n1 + &n2),
            -(&n3 + &n4) - (&n3 - &n4),
        ]);
        let c = Poly::new(vec![Rat::zero(), &n3 + &n4]);
        let tail = (&n3 - &n1) * (&n3 - &n2);
        let coeffs = vec![
            // p^0: (n3-n1)(n3-n2) (q - t)
            vec![Poly::new(vec![Rat::zero(), -tail.clone()]), Poly::constant(tail)],
            // p^1: -Q(q) = -(A q^2 + B q + C)
            vec![c.neg(), b.neg(), a.neg()],
            // p^2: q(q-1)(q-t) = q^3 - (1+t) q^2 + t q
            vec![
                Poly::zero(),
                Poly::new(vec![Rat::zero(), Rat::from_integer(1.into())]),
                Poly::from_ints(&[-1, -1]),
                Poly::from_ints(&[1]),
            ],
        ];
        Hamiltonian { n, coeffs }
    }

    pub fn n(&self) -> &[Rat; 4] {
        &self.n
    }

    fn eval_grid(
        &self,
        grid: &[Vec<Poly>],
        p: &TruncatedSeries,
        q: &TruncatedSeries,
    ) -> Result<TruncatedSeries> {
        let var = p.variable();
        let mut acc = TruncatedSeries::zero_exact(var);
        for (i, qpolys) in grid.iter().enumerate() {
            let mut inner = TruncatedSeries::zero_exact(var);
            for (j, c) in qpolys.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                inner = inner.add(&poly_series(var, c).mul(&q.pow(j as u32)?)?)?;
            }
            acc = acc.add(&inner.mul(&p.pow(i as u32)?)?)?;
        }
        Ok(acc)
    }

    /// t(t-1) H(p, q, t).
    pub fn tt_value(&self, p: &TruncatedSeries, q: &TruncatedSeries) -> Result<TruncatedSeries> {
        self.eval_grid(&self.coeffs, p, q)
    }

    /// t(t-1) dH/dq.
    pub fn tt_dq(&self, p: &TruncatedSeries, q: &TruncatedSeries) -> Result<TruncatedSeries> {
        let grid: Vec<Vec<Poly>> = self
            .coeffs
            .iter()
            .map(|qpolys| {
                qpolys
                    .iter()
                    .enumerate()
                    .skip(1)
                    .map(|(j, c)| c.scale(&Rat::from_integer((j as i64).into())))
                    .collect()
            })
            .collect();
        self.eval_grid(&grid, p, q)
    }

    /// t(t-1) dH/dp.
    pub fn tt_dp(&self, p: &TruncatedSeries, q: &TruncatedSeries) -> Result<TruncatedSeries> {
        let grid: Vec<Vec<Poly>> = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, qpolys)| {
                qpolys
                    .iter()
                    .map(|c| c.scale(&Rat::from_integer((i as i64).into())))
                    .collect()
            })
            .collect();
        // Shifting the p index down by one happens through the grid having
        // lost its first row.
        self.eval_grid(&grid, p, q)
    }
}

/// The restriction the diagonal correlations live on.
pub fn ising_n_set(n: &Rat) -> [Rat; 4] {
    let half = rat(1, 2);
    [
        n * &half,
        (Rat::from_integer(1.into()) - n) * &half,
        (Rat::from_integer(1.into()) + n) * &half,
        n * &half,
    ]
}

/// A Hamiltonian together with printed canonical coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HamiltonianData {
    pub hamiltonian: Hamiltonian,
    pub p: RationalEK,
    pub q: RationalEK,
}

/// Residuals of the Hamilton equations p' = -dH/dq and q' = dH/dp on the
/// (E, K)-rational coordinates, as series in t through `order`.
pub fn hamiltonian_residual(
    data: &HamiltonianData,
    order: i64,
) -> Result<(TruncatedSeries, TruncatedSeries)> {
    let pad = 12;
    let work = order + pad;
    let e = elliptic_series_t(EllipticKind::E, work)?;
    let k = elliptic_series_t(EllipticKind::K, work)?;
    let var = e.variable();
    let p = data.p.eval(&e, &k)?;
    let q = data.q.eval(&e, &k)?;
    let tt = poly_series(var, &Poly::from_ints(&[0, -1, 1])).truncate_order(work);
    let tt_inv = tt.recip()?;
    let r1 = p
        .derivative()
        .add(&data.hamiltonian.tt_dq(&p, &q)?.mul(&tt_inv)?)?;
    let r2 = q
        .derivative()
        .sub(&data.hamiltonian.tt_dp(&p, &q)?.mul(&tt_inv)?)?;
    Ok((r1.truncate_order(order), r2.truncate_order(order)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::printed::malmquist_pq_n2;
    use exactcore::rational::rat_i;

    #[test]
    fn printed_coordinates_satisfy_hamilton_equations() {
        let data = malmquist_pq_n2();
        let (r1, r2) = hamiltonian_residual(&data, 20).unwrap();
        assert!(r1.is_zero(), "p-equation residual: {r1}");
        assert!(r2.is_zero(), "q-equation residual: {r2}");
    }

    #[test]
    fn negating_p_breaks_the_p_equation() {
        let mut data = malmquist_pq_n2();
        data.p.scalar = -data.p.scalar;
        let (r1, _) = hamiltonian_residual(&data, 12).unwrap();
        assert!(!r1.is_zero());
    }

    #[test]
    fn coordinates_have_the_expected_local_behavior() {
        let data = malmquist_pq_n2();
        let e = elliptic_series_t(EllipticKind::E, 24).unwrap();
        let k = elliptic_series_t(EllipticKind::K, 24).unwrap();
        let p = data.p.eval(&e, &k).unwrap();
        let q = data.q.eval(&e, &k).unwrap();
        // p has a simple pole at t = 0, q vanishes there.
        assert_eq!(p.leading().map(|(e, _)| e), Some(rat_i(-1)));
        let q_lead = q.leading().map(|(e, _)| e).unwrap();
        assert!(q_lead >= rat_i(1), "q leading exponent {q_lead}");
    }

    #[test]
    fn equal_outer_indices_kill_the_momentum_free_part() {
        // With n1 = n3 the p-free part of t(t-1)H drops out, so H vanishes
        // on the zero-momentum line.
        let h = Hamiltonian::new([rat(3, 2), rat(1, 2), rat(3, 2), rat(1, 1)]);
        let e = elliptic_series_t(EllipticKind::E, 16).unwrap();
        let k = elliptic_series_t(EllipticKind::K, 16).unwrap();
        let zero = TruncatedSeries::zero_truncated(e.variable(), 16);
        let q = e.add(&k).unwrap();
        let val = h.tt_value(&zero, &q).unwrap();
        assert!(val.is_zero());
    }

    #[test]
    fn ising_restriction_values() {
        let n = ising_n_set(&rat_i(2));
        assert_eq!(n, [rat_i(1), rat(-1, 2), rat(3, 2), rat_i(1)]);
        let h = Hamiltonian::new(n);
        assert_eq!(h.n()[2], rat(3, 2));
    }
}
