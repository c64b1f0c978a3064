//! From linear operators to rational curves.
//!
//! An order-(n+1) operator annihilating C turns into a polynomial relation
//! between S0..Sn once every derivative of C is rewritten through
//! C' = (S0 + 1/4)/(t(t-1)) * C. Pairing that relation with the quadratic
//! sigma relation (and its t-derivatives) eliminates the top slots one
//! resultant at a time, down to a plane curve in (S0, S1). The curve is
//! recovered from the resultant by fitting its known monomial support on
//! the correlation series and certifying the fit divides the resultant.

use crate::pvi::jm_poly;
use crate::sigma::{sigma_bundle, Regime, SigmaBundle};
use correlations::toeplitz::{correlation_diag, ToeplitzSpec};
use diffops::op::DiffOperator;
use exactcore::linalg::rational_nullspace;
use exactcore::multipoly::{Expo, MultiPoly, Sym};
use exactcore::poly::Poly;
use exactcore::rational::{rat, rat_i, Rat};
use exactcore::series::TruncatedSeries;
use exactcore::{Error, Result};
use num::traits::Zero;

/// Plane curve in (S0, S1) with t as a parameter, stored primitive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveRelation {
    pub polynomial: MultiPoly,
    /// Set when the part of the resultant left after dividing the curve
    /// out still vanishes on the generating series.
    pub multiple_components: bool,
}

/// Rational parametrization S0 = s0_num/s0_den, S1 = s1_num/s1_den in the
/// symbols u and t.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParamData {
    pub s0_num: MultiPoly,
    pub s0_den: MultiPoly,
    pub s1_num: MultiPoly,
    pub s1_den: MultiPoly,
}

/// Riccati flow scale(t) * du/dt = c2(t) u^2 + c1(t) u + c0(t).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RiccatiData {
    pub scale: Poly,
    pub c2: Poly,
    pub c1: Poly,
    pub c0: Poly,
}

const SLOTS: [Sym; 4] = [Sym::S0, Sym::S1, Sym::S2, Sym::S3];

fn tt_poly() -> MultiPoly {
    MultiPoly::from_poly(&Poly::from_ints(&[0, -1, 1]), Sym::T)
}

/// Total t-derivative in the slot ring: d/dt plus the shift S_j -> S_{j+1}.
fn slot_derivative(p: &MultiPoly) -> Result<MultiPoly> {
    if p.uses(Sym::S3) {
        return Err(Error::Unsupported(
            "slot tower ends at S3: cannot differentiate past it".into(),
        ));
    }
    let mut out = p.derivative(Sym::T);
    for j in 0..3 {
        let up = MultiPoly::var(SLOTS[j + 1]);
        out = out.add(&p.derivative(SLOTS[j]).mul(&up));
    }
    Ok(out)
}

/// Numerators N_k with C^(k) = N_k / (t(t-1))^k * C under the logarithmic
/// substitution C'/C = (S0 + 1/4)/(t(t-1)).
fn tower_numerators(count: usize) -> Result<Vec<MultiPoly>> {
    let tt = tt_poly();
    let two_t_minus_1 = MultiPoly::from_poly(&Poly::from_ints(&[-1, 2]), Sym::T);
    let s_quarter = MultiPoly::var(Sym::S0).add(&MultiPoly::constant(rat(1, 4)));
    let mut out = vec![MultiPoly::one()];
    for k in 0..count.saturating_sub(1) {
        let prev = &out[k];
        let next = tt
            .mul(&slot_derivative(prev)?)
            .sub(&two_t_minus_1.scale(&rat_i(k as i64)).mul(prev))
            .add(&s_quarter.mul(prev));
        out.push(next);
    }
    Ok(out)
}

/// Divides out the Q[t]-content (the gcd of the t-coefficient polynomials
/// over all slot monomials) and returns the rational-primitive part.
fn strip_content(p: &MultiPoly) -> MultiPoly {
    if p.is_zero() {
        return MultiPoly::zero();
    }
    let ti = Sym::T.index();
    let mut groups: std::collections::BTreeMap<Expo, Vec<(usize, Rat)>> = Default::default();
    for (e, c) in p.terms() {
        let mut key = *e;
        let tpow = key.0[ti] as usize;
        key.0[ti] = 0;
        groups.entry(key).or_default().push((tpow, c.clone()));
    }
    let mut content = Poly::zero();
    for coeffs in groups.values() {
        let len = coeffs.iter().map(|(k, _)| k + 1).max().unwrap_or(1);
        let mut v = vec![Rat::zero(); len];
        for (k, c) in coeffs {
            v[*k] = c.clone();
        }
        content = content.gcd(&Poly::new(v));
        if content.degree() == Some(0) {
            break;
        }
    }
    let reduced = if content.degree().unwrap_or(0) > 0 {
        p.exact_div(&MultiPoly::from_poly(&content, Sym::T))
            .expect("content divides every coefficient")
    } else {
        p.clone()
    };
    reduced.primitive().1
}

/// Rewrites L(C) = 0 as a polynomial relation between t and the slots
/// S0..Sn, where n + 1 is the operator order. The relation is returned
/// with Q[t]-content removed and primitive over Q.
pub fn riccatize(op: &DiffOperator, n: usize) -> Result<MultiPoly> {
    let order = op
        .order()
        .ok_or_else(|| Error::Unsupported("zero operator has no Riccati form".into()))?;
    if order != n + 1 {
        return Err(Error::Unsupported(format!(
            "operator order {order} does not match requested depth {n}",
        )));
    }
    if order > 4 {
        return Err(Error::Unsupported(
            "slot tower ends at S3: operator order above 4 unsupported".into(),
        ));
    }
    let polys = op.canonical_polys();
    let numerators = tower_numerators(order + 1)?;
    let tt = tt_poly();
    let mut rel = MultiPoly::zero();
    for (i, a) in polys.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        let term = MultiPoly::from_poly(a, Sym::T)
            .mul(&numerators[i])
            .mul(&tt.pow((order - i) as u32));
        rel = rel.add(&term);
    }
    if rel.is_zero() {
        return Err(Error::Unsupported(
            "operator reduced to the zero relation".into(),
        ));
    }
    Ok(strip_content(&rel))
}

fn slot_series(bundle: &SigmaBundle) -> Vec<(Sym, TruncatedSeries)> {
    vec![
        (Sym::S0, bundle.s[0].clone()),
        (Sym::S1, bundle.s[1].clone()),
        (Sym::S2, bundle.s[2].clone()),
        (Sym::S3, bundle.s[3].clone()),
        (Sym::T, TruncatedSeries::identity(bundle.variable())),
    ]
}

/// Substitutes the bundle's series into the curve; a zero result through
/// the valid order certifies membership.
pub fn curve_residual(curve: &CurveRelation, s: &SigmaBundle) -> Result<TruncatedSeries> {
    curve.polynomial.eval_series(&slot_series(s))
}

/// Monomial support of the plane curves: S1^i carries t^i (t-1)^i and a
/// cofactor of S0-degree at most 2(n-i) and extra t-degree at most 2n-2i.
fn curve_template(n: usize) -> Vec<MultiPoly> {
    let tt = tt_poly();
    let s0 = MultiPoly::var(Sym::S0);
    let s1 = MultiPoly::var(Sym::S1);
    let t = MultiPoly::var(Sym::T);
    let mut out = Vec::new();
    for i in 0..=n {
        let base = tt.pow(i as u32).mul(&s1.pow(i as u32));
        for m in 0..=2 * (n - i) {
            for k in 0..=2 * n - 2 * i {
                out.push(base.mul(&s0.pow(m as u32)).mul(&t.pow(k as u32)));
            }
        }
    }
    out
}

/// Fits the template to the (S0, S1) series of the order-n diagonal
/// correlation; a one-dimensional kernel pins the curve.
fn fit_curve_on_series(n: usize) -> Result<MultiPoly> {
    let template = curve_template(n);
    let unknowns = template.len();
    let margin = 15i64;
    let order = unknowns as i64 + margin + 10;
    let c = correlation_diag(&ToeplitzSpec {
        n: n as u32,
        dual: false,
        order,
    })?;
    let bundle = sigma_bundle(&c, Regime::HighT, &rat_i(n as i64))?;
    let env = slot_series(&bundle);
    let evaluated: Vec<TruncatedSeries> = template
        .iter()
        .map(|m| m.eval_series(&env))
        .collect::<Result<_>>()?;
    let ram = evaluated
        .iter()
        .map(|s| i64::from(s.ramification()))
        .fold(1i64, num::integer::lcm);
    let lo = evaluated
        .iter()
        .filter_map(|s| s.leading().map(|(e, _)| e))
        .min()
        .map(|e| {
            let scaled = e * rat_i(ram);
            debug_assert!(scaled.is_integer());
            scaled.to_integer()
        })
        .unwrap_or_else(Zero::zero);
    // Exact evaluations (pure t-monomials) impose no validity bound.
    let hi = evaluated
        .iter()
        .filter_map(|s| s.valid_exponent().map(|v| (v * rat_i(ram)).floor().to_integer()))
        .min()
        .ok_or_else(|| Error::Unsupported("template evaluations are all exact".into()))?;
    let lo = i64::try_from(lo.clone()).map_err(|_| Error::Unsupported("exponent overflow".into()))?;
    let hi = i64::try_from(hi.clone()).map_err(|_| Error::Unsupported("exponent overflow".into()))?;
    let have = hi - lo;
    if have < unknowns as i64 + margin {
        return Err(Error::InsufficientSeries {
            needed: unknowns as i64 + margin,
            have,
        });
    }
    let ram_u = u32::try_from(ram).expect("small ramification");
    let rows: Vec<Vec<Rat>> = (lo..hi)
        .map(|j| {
            evaluated
                .iter()
                .map(|s| s.coeff(j, ram_u).unwrap_or_else(Rat::zero))
                .collect()
        })
        .collect();
    let kernel = rational_nullspace(&rows);
    match kernel.len() {
        0 => Err(Error::Unsupported(
            "no surviving factor: the correlation series fits no curve of the expected support"
                .into(),
        )),
        1 => {
            let mut fitted = MultiPoly::zero();
            for (w, m) in kernel[0].iter().zip(template.iter()) {
                if !w.is_zero() {
                    fitted = fitted.add(&m.scale(w));
                }
            }
            Ok(strip_content(&fitted))
        }
        d => Err(Error::Ambiguous(d)),
    }
}

/// k-th total t-derivative of the quadratic sigma relation for index n.
fn sigma_relation_derivative(n: &Rat, k: usize) -> Result<MultiPoly> {
    let mut p = jm_poly(n);
    for _ in 0..k {
        p = slot_derivative(&p)?;
    }
    Ok(p)
}

/// Eliminates the slots above S1 between the operator relation and the
/// quadratic sigma relation (with its t-derivatives), then extracts the
/// primitive factor vanishing on the generating correlation series.
pub fn eliminate_curve(riccati_rel: &MultiPoly, n: usize) -> Result<CurveRelation> {
    if n < 1 || n > 3 {
        return Err(Error::Unsupported(
            "curve elimination is implemented for n = 1, 2, 3".into(),
        ));
    }
    let n_rat = rat_i(n as i64);
    let quad = jm_poly(&n_rat);
    let mut g = riccati_rel.clone();
    for slot in (2..=n).rev() {
        let partner = sigma_relation_derivative(&n_rat, slot - 2)?;
        if slot == 2 && g.degree(Sym::S2) >= 2 {
            // The quadratic's leading S2 coefficient is a pure t-polynomial,
            // so pseudo-reduction only scales by t-content and keeps the
            // final Sylvester block small.
            let (_, _, rem) = g.pseudo_div(&quad, Sym::S2)?;
            if rem.is_zero() {
                return Err(Error::Unsupported(
                    "elimination collapsed: relation is a multiple of the sigma relation".into(),
                ));
            }
            g = strip_content(&rem);
        }
        g = g.resultant_eliminate(&partner, SLOTS[slot])?;
        if g.is_zero() {
            return Err(Error::Unsupported(
                "elimination produced the zero polynomial".into(),
            ));
        }
        g = strip_content(&g);
    }
    if g.uses(Sym::S2) || g.uses(Sym::S3) {
        return Err(Error::Unsupported(
            "elimination left slots above S1 in the relation".into(),
        ));
    }
    let fitted = fit_curve_on_series(n)?;
    // Certificate: the fitted curve divides the eliminated relation (up to
    // powers of the leading coefficient when plain division fails).
    let mut cofactor = match g.exact_div(&fitted) {
        Ok(q) => q,
        Err(_) => {
            let (_, q, r) = g.pseudo_div(&fitted, Sym::S1)?;
            if !r.is_zero() {
                return Err(Error::Unsupported(
                    "no surviving factor: the fitted curve does not divide the resultant".into(),
                ));
            }
            q
        }
    };
    while let Ok(q) = cofactor.exact_div(&fitted) {
        cofactor = q;
    }
    let multiple_components = if cofactor.is_constant() || !cofactor.uses(Sym::S0) {
        false
    } else {
        let order = 40 + 10 * n as i64;
        let c = correlation_diag(&ToeplitzSpec {
            n: n as u32,
            dual: false,
            order,
        })?;
        let bundle = sigma_bundle(&c, Regime::HighT, &n_rat)?;
        cofactor.eval_series(&slot_series(&bundle))?.is_zero()
    };
    Ok(CurveRelation {
        polynomial: fitted,
        multiple_components,
    })
}

/// Substitutes a rational parametrization into the curve polynomial and
/// reduces over a common denominator; true means the curve vanishes
/// identically in (u, t).
pub fn param_verify(curve: &CurveRelation, param: &ParamData) -> Result<bool> {
    let poly = &curve.polynomial;
    for sym in [Sym::S2, Sym::S3, Sym::U, Sym::Alpha] {
        if poly.uses(sym) {
            return Err(Error::Unsupported(format!(
                "curve polynomial involves {}, expected only S0, S1, t",
                sym.name()
            )));
        }
    }
    let m_max = poly.degree(Sym::S0);
    let i_max = poly.degree(Sym::S1);
    let pow_table = |base: &MultiPoly, top: u32| -> Vec<MultiPoly> {
        (0..=top).map(|k| base.pow(k)).collect()
    };
    let s0n = pow_table(&param.s0_num, m_max);
    let s0d = pow_table(&param.s0_den, m_max);
    let s1n = pow_table(&param.s1_num, i_max);
    let s1d = pow_table(&param.s1_den, i_max);
    let mut acc = MultiPoly::zero();
    for (e, c) in poly.terms() {
        let m = e.0[Sym::S0.index()];
        let i = e.0[Sym::S1.index()];
        let mut t_only = Expo::zero();
        t_only.0[Sym::T.index()] = e.0[Sym::T.index()];
        let term = MultiPoly::monomial(c.clone(), t_only)
            .mul(&s0n[m as usize])
            .mul(&s0d[(m_max - m) as usize])
            .mul(&s1n[i as usize])
            .mul(&s1d[(i_max - i) as usize]);
        acc = acc.add(&term);
    }
    Ok(acc.is_zero())
}

/// Checks that the chain rule closes: dS0/du * du/dt + dS0/dt = S1 as an
/// exact rational identity in (u, t), with du/dt given by the Riccati flow.
pub fn riccati_consistency(param: &ParamData, riccati: &RiccatiData) -> Result<bool> {
    if riccati.scale.is_zero() {
        return Err(Error::Unsupported("Riccati scale must be nonzero".into()));
    }
    let p = &param.s0_num;
    let q = &param.s0_den;
    let du = {
        let u = MultiPoly::var(Sym::U);
        let c2 = MultiPoly::from_poly(&riccati.c2, Sym::T).mul(&u.pow(2));
        let c1 = MultiPoly::from_poly(&riccati.c1, Sym::T).mul(&u);
        let c0 = MultiPoly::from_poly(&riccati.c0, Sym::T);
        c2.add(&c1).add(&c0)
    };
    let scale = MultiPoly::from_poly(&riccati.scale, Sym::T);
    let d_du = p.derivative(Sym::U).mul(q).sub(&p.mul(&q.derivative(Sym::U)));
    let d_dt = p.derivative(Sym::T).mul(q).sub(&p.mul(&q.derivative(Sym::T)));
    // [(dS0/du) * du + scale * dS0/dt] * s1_den = scale * s1_num * q^2
    let lhs = d_du
        .mul(&du)
        .add(&scale.mul(&d_dt))
        .mul(&param.s1_den);
    let rhs = scale.mul(&param.s1_num).mul(&q.pow(2));
    Ok(lhs.sub(&rhs).is_zero())
}
