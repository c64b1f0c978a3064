//! Local analysis at the origin: the shifted coefficient table of an
//! operator, its indicial polynomial, and recurrence-based extension of
//! truncated solutions.
//!
//! For `L = sum_i p_i(x) D^i` with polynomial `p_i = sum_j p_ij x^j`,
//! applying L to `x^s` gives `sum_m P_m(s) x^(s+m)` where
//! `P_m(s) = sum_(j-i=m) p_ij * s(s-1)...(s-i+1)`. Everything local to
//! x = 0 reads off this table: `P_mu` for the minimal shift `mu` is the
//! indicial polynomial, and the solution recurrence along an exponent
//! coset `rho + k` is `P_mu(rho+k) u_k = -sum_(l<k) P_(mu+k-l)(rho+l) u_l`.

use crate::op::DiffOperator;
use exactcore::poly::Poly;
use exactcore::rational::{rat_i, Rat};
use exactcore::series::TruncatedSeries;
use exactcore::{Error, Result};
use num::traits::{One, Zero};

/// Falling factorial `s(s-1)...(s-k+1)` as a polynomial in `s`.
pub fn falling_poly(k: usize) -> Poly {
    let mut p = Poly::one();
    for l in 0..k {
        p = p.mul(&Poly::new(vec![rat_i(-(l as i64)), Rat::one()]));
    }
    p
}

/// The table of shift polynomials `P_m(s)` of an operator at x = 0.
#[derive(Debug, Clone)]
pub struct LocalData {
    /// (shift, P_shift), ascending, only nonzero entries.
    shifts: Vec<(i64, Poly)>,
    order: usize,
}

impl LocalData {
    pub fn from_operator(op: &DiffOperator) -> Result<LocalData> {
        let order = op
            .order()
            .ok_or_else(|| Error::Unsupported("zero operator has no local data".into()))?;
        let (polys, _) = op.cleared_raw();
        let mut map: std::collections::BTreeMap<i64, Poly> = Default::default();
        for (i, p) in polys.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            let fall = falling_poly(i);
            for (j, c) in p.coeffs().iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let m = j as i64 - i as i64;
                let entry = map.entry(m).or_insert_with(Poly::zero);
                *entry = entry.add(&fall.scale(c));
            }
        }
        let shifts: Vec<(i64, Poly)> = map.into_iter().filter(|(_, p)| !p.is_zero()).collect();
        if shifts.is_empty() {
            return Err(Error::Unsupported("operator cleared to zero".into()));
        }
        Ok(LocalData { shifts, order })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// The minimal shift `mu` (valuation of the operator action).
    pub fn min_shift(&self) -> i64 {
        self.shifts[0].0
    }

    pub fn max_shift(&self) -> i64 {
        self.shifts.last().unwrap().0
    }

    /// The indicial polynomial `P_mu`.
    pub fn indicial(&self) -> &Poly {
        &self.shifts[0].1
    }

    pub fn shift_poly(&self, m: i64) -> Option<&Poly> {
        self.shifts
            .iter()
            .find(|(s, _)| *s == m)
            .map(|(_, p)| p)
    }

    pub fn eval_shift(&self, m: i64, s: &Rat) -> Rat {
        self.shift_poly(m).map_or_else(Rat::zero, |p| p.eval(s))
    }
}

/// The indicial polynomial of the operator at x = 0.
pub fn indicial_polynomial(op: &DiffOperator) -> Result<Poly> {
    Ok(LocalData::from_operator(op)?.indicial().clone())
}

/// Extends a truncated solution of `op` to validity `target` (in the
/// seed's ladder units) by the solution recurrence. The seed must cover
/// every resonant slot (exponents where the indicial polynomial vanishes);
/// known slots are verified against the recurrence, so an inconsistent
/// seed is reported rather than propagated.
pub fn extend_series(
    op: &DiffOperator,
    seed: &TruncatedSeries,
    target: i64,
) -> Result<TruncatedSeries> {
    if op.variable() != seed.variable() {
        return Err(Error::VariableMismatch(op.variable(), seed.variable()));
    }
    let Some(v) = seed.valid_units() else {
        return Err(Error::Unsupported(
            "seed must be truncated; exact inputs carry no extension frontier".into(),
        ));
    };
    if seed.is_zero() {
        return Err(Error::Unsupported(
            "cannot extend a stored-zero seed: no coset to anchor".into(),
        ));
    }
    if target <= v {
        return Ok(seed.truncate_exponent(target, seed.ramification()));
    }
    let data = LocalData::from_operator(op)?;
    let r = i64::from(seed.ramification());
    let base = seed.base_units();
    let width = (data.max_shift() - data.min_shift()) as usize;

    let len = (target - base) as usize;
    let mut out: Vec<Rat> = vec![Rat::zero(); len];
    for (k, c) in seed.coefficients().iter().enumerate() {
        out[k] = c.clone();
    }
    // Work coset by coset: slots with units congruent mod the ramification
    // evolve independently because the operator shifts exponents by
    // integers (r units).
    for c0 in 0..r {
        let rho0_units = base + (c0 - base.rem_euclid(r) + r).rem_euclid(r);
        if rho0_units >= target {
            continue;
        }
        let rho0 = Rat::new(rho0_units.into(), r.into());
        let known = if v > rho0_units {
            ((v - rho0_units + r - 1) / r) as usize
        } else {
            0
        };
        let total = ((target - rho0_units + r - 1) / r) as usize;
        let coset_coeff = |out: &Vec<Rat>, m: usize| -> Rat {
            let idx = rho0_units + m as i64 * r - base;
            out.get(idx as usize).cloned().unwrap_or_else(Rat::zero)
        };
        for m in 0..total {
            let s_m = &rho0 + rat_i(m as i64);
            let ind = data.eval_shift(data.min_shift(), &s_m);
            let mut rhs = Rat::zero();
            for back in 1..=width.min(m) {
                let l = m - back;
                let u_l = coset_coeff(&out, l);
                if u_l.is_zero() {
                    continue;
                }
                let p = data.eval_shift(
                    data.min_shift() + back as i64,
                    &(&rho0 + rat_i(l as i64)),
                );
                rhs += u_l * p;
            }
            if m < known {
                // Verify the seed against the recurrence.
                let lhs = ind * coset_coeff(&out, m) + rhs;
                if !lhs.is_zero() {
                    return Err(Error::Unsupported(format!(
                        "seed is inconsistent with the operator at exponent {s_m}"
                    )));
                }
            } else if ind.is_zero() {
                return Err(Error::Unsupported(format!(
                    "resonant exponent {s_m} is beyond the seeded window; \
                     supply it explicitly"
                )));
            } else {
                let idx = (rho0_units + m as i64 * r - base) as usize;
                out[idx] = -rhs / ind;
            }
        }
    }
    Ok(TruncatedSeries::new(
        seed.variable(),
        seed.ramification(),
        base,
        out,
        Some(target),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use exactcore::ratfun::RationalFunction;
    use exactcore::series::Var;

    fn rf(n: &[i64], d: &[i64]) -> RationalFunction {
        RationalFunction::new(Poly::from_ints(n), Poly::from_ints(d)).unwrap()
    }

    #[test]
    fn indicial_of_euler_operator() {
        // x^2 D^2 + x D - 1/4: indicial s(s-1) + s - 1/4 = s^2 - 1/4.
        let op = DiffOperator::new(
            Var::X,
            vec![
                RationalFunction::constant(exactcore::rational::rat(-1, 4)),
                rf(&[0, 1], &[1]),
                rf(&[0, 0, 1], &[1]),
            ],
        );
        let ind = indicial_polynomial(&op).unwrap();
        let expect = Poly::new(vec![exactcore::rational::rat(-1, 4), Rat::zero(), Rat::one()]);
        assert_eq!(ind, expect);
        let data = LocalData::from_operator(&op).unwrap();
        assert_eq!(data.min_shift(), 0);
        assert_eq!(data.max_shift(), 0);
    }

    #[test]
    fn extend_geometric_series() {
        // (1-x) y' - y = 0 with seed 1 + x extends to the geometric series.
        let op = DiffOperator::new(Var::X, vec![rf(&[-1], &[1]), rf(&[1, -1], &[1])]);
        let seed = TruncatedSeries::truncated_from(Var::X, 0, vec![Rat::one(), Rat::one()], 2);
        let ext = extend_series(&op, &seed, 8).unwrap();
        let want = TruncatedSeries::truncated_from(Var::X, 0, vec![Rat::one(); 8], 8);
        assert_eq!(ext, want);
    }

    #[test]
    fn extend_respects_ramified_ladders() {
        // 2x y' - y annihilates sqrt(x); seed x^(1/2) on the half ladder.
        let op = DiffOperator::new(Var::X, vec![rf(&[-1], &[1]), rf(&[0, 2], &[1])]);
        let seed = TruncatedSeries::new(Var::X, 2, 1, vec![Rat::one()], Some(3));
        let ext = extend_series(&op, &seed, 12).unwrap();
        assert_eq!(ext.coeff(1, 2), Some(Rat::one()));
        assert_eq!(ext.coeff(3, 2), Some(Rat::zero()));
        assert_eq!(ext.coeff(2, 1), Some(Rat::zero()));
        assert_eq!(ext.valid_units(), Some(12));
        assert!(op.annihilates(&ext));
    }

    #[test]
    fn inconsistent_seed_is_rejected() {
        let op = DiffOperator::new(Var::X, vec![rf(&[-1], &[1]), rf(&[1, -1], &[1])]);
        let seed = TruncatedSeries::truncated_from(
            Var::X,
            0,
            vec![Rat::one(), rat_i(7)],
            2,
        );
        assert!(extend_series(&op, &seed, 8).is_err());
    }

    #[test]
    fn resonant_slot_needs_seed() {
        // x y'' - y' = 0 has exponents {0, 2}: extending from just the
        // constant 1 must stop at the resonance at exponent 2.
        let op = DiffOperator::new(
            Var::X,
            vec![
                RationalFunction::zero(),
                rf(&[-1], &[1]),
                rf(&[0, 1], &[1]),
            ],
        );
        let seed1 = TruncatedSeries::truncated_from(Var::X, 0, vec![Rat::one()], 1);
        assert!(extend_series(&op, &seed1, 6).is_err());
        // Seeding through the resonance works: y = 1 + x^2.
        let seed2 = TruncatedSeries::truncated_from(
            Var::X,
            0,
            vec![Rat::one(), Rat::zero(), Rat::one()],
            3,
        );
        let ext = extend_series(&op, &seed2, 6).unwrap();
        assert!(op.annihilates(&ext));
        assert_eq!(ext.coeff_int(2), Some(Rat::one()));
        assert_eq!(ext.coeff_int(5), Some(Rat::zero()));
    }
}
