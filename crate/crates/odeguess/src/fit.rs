//! Exact fitting of annihilating operators.

use diffops::DiffOperator;
use exactcore::linalg::rational_nullspace;
use exactcore::poly::Poly;
use exactcore::rational::Rat;
use exactcore::series::{TruncatedSeries, Var};
use exactcore::{Error, Result};
use num::traits::Zero;
use num::ToPrimitive;

use crate::profile::{basis, BasisElement, GuessSpec};

fn poly_series(variable: Var, p: &Poly) -> TruncatedSeries {
    TruncatedSeries::new(variable, 1, 0, p.coeffs().to_vec(), None)
}

/// Exponent of the series' slot grid in 1/r units; exact by construction
/// since every product stays on the input coset ladder.
fn units(e: &Rat, r: i64) -> i64 {
    let scaled = e * Rat::from_integer(r.into());
    debug_assert!(scaled.is_integer(), "exponent off the common ladder");
    scaled.to_integer().to_i64().expect("grid exponent fits machine range")
}

/// Fits one candidate shape to the series.
///
/// The first `unknowns + safety_margin` ladder slots form the equation
/// system; the candidate from a one-dimensional nullspace is then required
/// to annihilate the whole input window, so slots beyond the fit act as
/// verification. Returns the canonicalized operator, or none when the shape
/// admits no annihilator (including overfit candidates that fail the full
/// window).
pub fn guess_ode(y: &TruncatedSeries, spec: &GuessSpec) -> Result<Option<DiffOperator>> {
    let elements = basis(spec)?;
    let unknowns = elements.len();
    let needed = unknowns + spec.safety_margin;
    let variable = y.variable();
    let r = i64::from(y.ramification());

    let mut derivatives: Vec<TruncatedSeries> = Vec::with_capacity(spec.order + 1);
    derivatives.push(y.clone());
    for _ in 0..spec.order {
        derivatives.push(derivatives.last().expect("nonempty").derivative());
    }
    let products: Vec<TruncatedSeries> = elements
        .iter()
        .map(|e| derivatives[e.derivative].mul(&poly_series(variable, &e.poly)))
        .collect::<Result<_>>()?;

    // Common slot window: from the lowest leading exponent up to the
    // tightest validity bound among the applied basis elements.
    let lo = products
        .iter()
        .filter_map(|p| p.leading().map(|(e, _)| units(&e, r)))
        .min();
    let hi = products
        .iter()
        .filter_map(|p| p.valid_exponent().map(|v| units(&v, r)))
        .min();

    let rows: Vec<Vec<Rat>> = match lo {
        None => Vec::new(),
        Some(lo) => {
            let hi = match hi {
                Some(hi) => {
                    let usable = hi - lo;
                    if usable < needed as i64 {
                        return Err(Error::InsufficientSeries {
                            needed: needed as i64,
                            have: usable.max(0),
                        });
                    }
                    lo + needed as i64
                }
                // All products exact: every slot is known, the fit window
                // suffices.
                None => lo + needed as i64,
            };
            (lo..hi)
                .map(|j| {
                    products
                        .iter()
                        .map(|p| {
                            p.coeff(j, r as u32)
                                .expect("slot below every validity bound")
                        })
                        .collect()
                })
                .collect()
        }
    };

    let kernel = if rows.is_empty() {
        // Every basis element already kills the series; only a single
        // unknown makes that unambiguous.
        if unknowns == 1 {
            vec![vec![Rat::from_integer(1.into())]]
        } else {
            return Err(Error::Ambiguous(unknowns));
        }
    } else {
        rational_nullspace(&rows)
    };

    match kernel.len() {
        0 => Ok(None),
        1 => {
            let op = assemble(variable, spec.order, &elements, &kernel[0]);
            if op.annihilates(y) {
                Ok(Some(op))
            } else {
                Ok(None)
            }
        }
        dim => Err(Error::Ambiguous(dim)),
    }
}

fn assemble(
    variable: Var,
    order: usize,
    elements: &[BasisElement],
    weights: &[Rat],
) -> DiffOperator {
    let mut polys = vec![Poly::zero(); order + 1];
    for (e, w) in elements.iter().zip(weights) {
        if w.is_zero() {
            continue;
        }
        polys[e.derivative] = polys[e.derivative].add(&e.poly.scale(w));
    }
    let raw = DiffOperator::from_polys(variable, polys);
    DiffOperator::from_polys(variable, raw.canonical_polys())
}

/// Iterative deepening over free shapes, graded by order + degree with the
/// order ascending inside one budget, so the lowest-order annihilator wins
/// ties. The first shape whose fit survives the full-window check is
/// returned.
pub fn minimal_ode(
    y: &TruncatedSeries,
    max_order: usize,
    max_degree: usize,
) -> Result<DiffOperator> {
    if max_order == 0 {
        return Err(Error::Unsupported("order bound must be positive".into()));
    }
    for budget in 1..=(max_order + max_degree) {
        for order in 1..=max_order.min(budget) {
            let degree = budget - order;
            if degree > max_degree {
                continue;
            }
            if let Some(op) = guess_ode(y, &GuessSpec::free(order, degree))? {
                return Ok(op);
            }
        }
    }
    Err(Error::NoOperatorWithinBounds)
}

#[cfg(test)]
mod tests {
    use super::*;
    use correlations::toeplitz::{correlation_diag, ToeplitzSpec};
    use correlations::{elliptic_series, EllipticKind};
    use exactcore::rational::{rat, rat_i};

    fn geometric(order: i64) -> TruncatedSeries {
        let den = TruncatedSeries::from_int_coeffs(Var::T, 0, vec![rat_i(1), rat_i(-1)]);
        den.truncate_order(order).recip().unwrap()
    }

    #[test]
    fn geometric_series_first_order() {
        let y = geometric(40);
        let op = guess_ode(&y, &GuessSpec::free(1, 1)).unwrap().unwrap();
        // Canonical form of (1-t) D - 1 flips the sign: (t-1) D + 1.
        assert_eq!(
            op.canonical_polys(),
            vec![Poly::from_ints(&[1]), Poly::from_ints(&[-1, 1])]
        );
    }

    #[test]
    fn degree_zero_shape_misses_geometric() {
        let y = geometric(40);
        assert_eq!(guess_ode(&y, &GuessSpec::free(1, 0)).unwrap(), None);
    }

    #[test]
    fn oversized_shape_is_ambiguous() {
        let y = geometric(60);
        match guess_ode(&y, &GuessSpec::free(2, 2)) {
            Err(Error::Ambiguous(dim)) => assert!(dim > 1),
            other => panic!("expected ambiguity, got {other:?}"),
        }
    }

    #[test]
    fn short_series_is_rejected_with_count() {
        let y = geometric(8);
        match guess_ode(&y, &GuessSpec::free(1, 1)) {
            Err(Error::InsufficientSeries { needed, have }) => {
                // Four shape unknowns plus the default margin of ten.
                assert_eq!(needed, 14);
                assert!(have < needed);
            }
            other => panic!("expected insufficiency, got {other:?}"),
        }
    }

    /// The diagonal correlation annihilator at N = 1, cleared form
    /// 4t^2(t-1) D^2 + 4t(t-1) D + 1.
    fn l11() -> Vec<Poly> {
        vec![
            Poly::from_ints(&[1]),
            Poly::from_ints(&[0, -4, 4]),
            Poly::from_ints(&[0, 0, -4, 4]),
        ]
    }

    /// N = 2: 2t^3(t-1)^2 D^3 + 4t^2(t-1)(t-2) D^2 - 2t(t-1) D - (t+2).
    fn l22() -> Vec<Poly> {
        vec![
            Poly::from_ints(&[-2, -1]),
            Poly::from_ints(&[0, 2, -2]),
            Poly::from_ints(&[0, 0, 8, -12, 4]),
            Poly::from_ints(&[0, 0, 0, 2, -4, 2]),
        ]
    }

    #[test]
    fn structured_profile_recovers_first_annihilator() {
        let y = correlation_diag(&ToeplitzSpec { n: 1, dual: false, order: 18 }).unwrap();
        let op = guess_ode(&y, &GuessSpec::structured(2)).unwrap().unwrap();
        assert_eq!(op.canonical_polys(), l11());
    }

    #[test]
    fn structured_profile_recovers_second_annihilator() {
        let y = correlation_diag(&ToeplitzSpec { n: 2, dual: false, order: 30 }).unwrap();
        let op = guess_ode(&y, &GuessSpec::structured(3)).unwrap().unwrap();
        assert_eq!(op.canonical_polys(), l22());
    }

    #[test]
    fn lower_order_attempts_fail_before_the_real_order() {
        let y = correlation_diag(&ToeplitzSpec { n: 2, dual: false, order: 60 }).unwrap();
        for degree in 0..=5 {
            assert_eq!(guess_ode(&y, &GuessSpec::free(2, degree)).unwrap(), None);
        }
        let op = minimal_ode(&y, 4, 6).unwrap();
        assert_eq!(op.order(), Some(3));
        assert_eq!(op.canonical_polys(), l22());
    }

    #[test]
    fn elliptic_series_minimal_operator() {
        let e = elliptic_series(EllipticKind::E, 60).unwrap();
        let op = minimal_ode(&e, 3, 6).unwrap();
        // s(s^4-1) D^2 + (s^4-1) D - 4s^3.
        assert_eq!(
            op.canonical_polys(),
            vec![
                Poly::from_ints(&[0, 0, 0, -4]),
                Poly::from_ints(&[-1, 0, 0, 0, 1]),
                Poly::from_ints(&[0, -1, 0, 0, 0, 1]),
            ]
        );
    }

    #[test]
    fn constant_series_yields_bare_derivative() {
        let y = TruncatedSeries::constant(Var::T, rat(5, 3));
        let op = minimal_ode(&y, 2, 3).unwrap();
        assert_eq!(op.canonical_polys(), vec![Poly::zero(), Poly::from_ints(&[1])]);
    }

    #[test]
    fn bounds_exhaustion_is_reported() {
        let y = geometric(40);
        match minimal_ode(&y, 1, 0) {
            Err(Error::NoOperatorWithinBounds) => {}
            other => panic!("expected exhaustion, got {other:?}"),
        }
    }

    #[test]
    fn ramified_ladder_and_squared_variable_routes_agree() {
        let y = correlation_diag(&ToeplitzSpec { n: 1, dual: false, order: 25 }).unwrap();
        let direct = guess_ode(&y, &GuessSpec::structured(2)).unwrap().unwrap();

        let y_x = y
            .change_variable(&exactcore::series::VarMap::Power { new_var: Var::X, k: 2 })
            .unwrap();
        let via_x = minimal_ode(&y_x, 2, 4).unwrap();
        let pushed = diffops::change_var::subst_power(&direct, 2, Var::X).unwrap();
        assert_eq!(via_x.canonical_polys(), pushed.canonical_polys());
        // x^2(x^2-1) D^2 + x(x^2-1) D + 1 after clearing.
        assert_eq!(
            via_x.canonical_polys(),
            vec![
                Poly::from_ints(&[1]),
                Poly::from_ints(&[0, -1, 0, 1]),
                Poly::from_ints(&[0, 0, -1, 0, 1]),
            ]
        );
    }
}
