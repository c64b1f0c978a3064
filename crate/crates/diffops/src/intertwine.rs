//! Intertwiner search: operators `u, v` with `u ∘ p = q ∘ v`, so `v` maps
//! solutions of `p` to solutions of `q`.
//!
//! The search is linear algebra: with the orders fixed and every unknown
//! coefficient written as a polynomial of bounded degree over a candidate
//! denominator, `u ∘ p - q ∘ v = 0` becomes a rational nullspace problem
//! over the basis operators `(x^d / den) D^i`. Order and degree deepen
//! iteratively until a solution appears or the caps are hit.

use crate::op::DiffOperator;
use exactcore::linalg::rational_nullspace;
use exactcore::poly::Poly;
use exactcore::ratfun::RationalFunction;
use exactcore::rational::Rat;
use exactcore::series::Var;
use exactcore::{Error, Result};
use num::traits::{One, Zero};

pub struct IntertwineOptions {
    /// Largest order tried for `u`.
    pub max_order: usize,
    /// Largest numerator degree tried for the unknown coefficients.
    pub max_degree: usize,
    /// Denominator shared by every unknown coefficient.
    pub denominator: Poly,
}

impl Default for IntertwineOptions {
    fn default() -> Self {
        IntertwineOptions {
            max_order: 3,
            max_degree: 8,
            denominator: Poly::one(),
        }
    }
}

fn poly_lcm(a: &Poly, b: &Poly) -> Poly {
    let g = a.gcd(b);
    a.mul(&b.exact_div(&g).expect("gcd divides"))
}

/// One basis monomial `(x^d / den) D^i` as an operator.
fn basis_term(var: Var, den: &Poly, i: usize, d: usize) -> DiffOperator {
    let num = Poly::monomial(Rat::one(), d);
    let coeff = RationalFunction::new(num, den.clone()).expect("nonzero denominator");
    let mut coeffs = vec![RationalFunction::zero(); i + 1];
    coeffs[i] = coeff;
    DiffOperator::new(var, coeffs)
}

/// Searches for `(u, v)` with `u ∘ p = q ∘ v` at one fixed shape: order of
/// `u` equal to `ord_u` and numerator degrees up to `deg`.
fn search_at(
    p: &DiffOperator,
    q: &DiffOperator,
    den: &Poly,
    ord_u: usize,
    ord_v: usize,
    deg: usize,
) -> Result<Option<(DiffOperator, DiffOperator)>> {
    // Basis operators: contributions of each unknown coefficient to
    // u ∘ p - q ∘ v.
    let mut basis: Vec<DiffOperator> = Vec::new();
    for i in 0..=ord_u {
        for d in 0..=deg {
            basis.push(basis_term(p.variable(), den, i, d).compose(p)?);
        }
    }
    for j in 0..=ord_v {
        for d in 0..=deg {
            basis.push(q.compose(&basis_term(p.variable(), den, j, d))?.neg());
        }
    }

    // Common denominator across all basis operators.
    let mut common = Poly::one();
    for b in &basis {
        let (_, bden) = b.cleared_raw();
        common = poly_lcm(&common, &bden);
    }
    // Per basis operator: polynomial coefficient rows after clearing.
    let mut flat: Vec<Vec<Poly>> = Vec::with_capacity(basis.len());
    let mut max_order = 0usize;
    let mut max_deg = 0usize;
    for b in &basis {
        let (polys, bden) = b.cleared_raw();
        let extra = common.exact_div(&bden).expect("lcm divides");
        let polys: Vec<Poly> = polys.iter().map(|p| p.mul(&extra)).collect();
        for (k, pl) in polys.iter().enumerate() {
            if let Some(dg) = pl.degree() {
                max_order = max_order.max(k);
                max_deg = max_deg.max(dg);
            }
        }
        flat.push(polys);
    }

    // Equations: one row per (derivative slot, x power); columns are the
    // unknowns in basis order.
    let mut rows: Vec<Vec<Rat>> = Vec::new();
    for slot in 0..=max_order {
        for power in 0..=max_deg {
            let mut row = Vec::with_capacity(flat.len());
            let mut nonzero = false;
            for polys in &flat {
                let c = polys
                    .get(slot)
                    .map(|p| p.coeff(power))
                    .unwrap_or_else(Rat::zero);
                if !c.is_zero() {
                    nonzero = true;
                }
                row.push(c);
            }
            if nonzero {
                rows.push(row);
            }
        }
    }

    if rows.is_empty() {
        return Ok(None);
    }
    let kernel = rational_nullspace(&rows);
    let vec = match kernel.first() {
        Some(v) => v,
        None => return Ok(None),
    };

    let chunk = deg + 1;
    let var = p.variable();
    let build = |offset: usize, ord: usize| -> DiffOperator {
        let mut coeffs = Vec::with_capacity(ord + 1);
        for i in 0..=ord {
            let cs = &vec[offset + i * chunk..offset + (i + 1) * chunk];
            let num = Poly::new(cs.to_vec());
            coeffs.push(
                RationalFunction::new(num, den.clone()).expect("nonzero denominator"),
            );
        }
        DiffOperator::new(var, coeffs)
    };
    let u = build(0, ord_u);
    let v = build((ord_u + 1) * chunk, ord_v);
    if u.is_zero() || v.is_zero() {
        return Ok(None);
    }
    // Exact recheck guards the flattening.
    let residual = u.compose(p)?.sub(&q.compose(&v)?)?;
    if !residual.is_zero() {
        return Err(Error::Unsupported(
            "intertwiner candidate failed the exact recheck".into(),
        ));
    }
    Ok(Some((u, v)))
}

/// Finds the smallest intertwiner pair `u ∘ p = q ∘ v` within the option
/// caps, deepening order plus degree jointly. `Ok(None)` when the caps are
/// exhausted.
pub fn intertwiner(
    p: &DiffOperator,
    q: &DiffOperator,
    opts: &IntertwineOptions,
) -> Result<Option<(DiffOperator, DiffOperator)>> {
    let np = p
        .order()
        .ok_or_else(|| Error::Unsupported("intertwiner with a zero operator".into()))?;
    let nq = q
        .order()
        .ok_or_else(|| Error::Unsupported("intertwiner with a zero operator".into()))?;
    for effort in 0..=(opts.max_order + opts.max_degree) {
        for ord_u in 0..=effort.min(opts.max_order) {
            let deg = effort - ord_u;
            if deg > opts.max_degree {
                continue;
            }
            // Orders balance: ord(u ∘ p) = ord(q ∘ v).
            let ord_v = match (ord_u + np).checked_sub(nq) {
                Some(o) => o,
                None => continue,
            };
            if let Some(pair) = search_at(p, q, &opts.denominator, ord_u, ord_v, deg)? {
                return Ok(Some(pair));
            }
        }
    }
    Ok(None)
}
