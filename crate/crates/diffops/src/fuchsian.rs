//! Singular-point analysis: locations, regularity, indicial exponents,
//! and detection of apparent singularities.
//!
//! Finite rational singularities are analyzed directly. The non-rational
//! roots of the leading coefficient are grouped into classes, each a monic
//! squarefree polynomial, first refined so that every coefficient has a
//! uniform valuation across a class, then analyzed in Q[x]/(f); whenever
//! the quotient-ring arithmetic must branch on a zero divisor, the class
//! splits and both factors rerun. The point at infinity is handled by the
//! substitution x -> 1/x, and its exponents are the indicial roots of the
//! transformed operator at 0.
//!
//! One limitation is deliberate: a class whose exponent-sum is not a
//! rational constant reports `apparent: Some(false)` as a whole. That is
//! correct for irreducible moduli (a non-constant sum cannot be an
//! integer at every root), and reducible moduli with mixed behavior would
//! need polynomial factorization to do better.

use crate::algfield::{FResult, FieldCtx, QuotCtx, RatCtx, Split};
use crate::change_var::subst_invert;
use crate::op::DiffOperator;
use crate::series_sol::falling_poly;
use exactcore::poly::Poly;
use exactcore::rational::{as_i64, Rat};
use exactcore::{Error, Result};
use num::traits::{One, Signed, Zero};

/// Scan ceiling for the integer-exponent search; a regular point whose
/// exponent sum exceeds it gets no apparentness verdict.
const TRACE_SCAN_LIMIT: i64 = 50_000;

#[derive(Debug, Clone, PartialEq)]
pub enum Location {
    Finite(Rat),
    /// Every root of a monic squarefree polynomial, analyzed jointly.
    Class(Poly),
    Infinity,
}

#[derive(Debug, Clone, Default)]
pub struct ExponentReport {
    /// Rational indicial roots with multiplicities.
    pub rational: Vec<(Rat, usize)>,
    /// Monic factor of the indicial polynomial carrying any remaining
    /// non-rational roots.
    pub nonrational: Option<Poly>,
}

#[derive(Debug, Clone)]
pub struct PointAnalysis {
    pub location: Location,
    /// Regular singular in the Fuchsian sense.
    pub regular: bool,
    /// Monic indicial polynomial when its coefficients are uniform
    /// rationals over the location; `None` when they vary over a class.
    pub indicial: Option<Poly>,
    pub exponents: ExponentReport,
    /// `Some(true)` when every local solution is analytic despite the
    /// singular appearance; `None` when the point is irregular or the
    /// exponent scan exceeded its ceiling.
    pub apparent: Option<bool>,
}

impl PointAnalysis {
    /// Number of singular points this entry stands for.
    pub fn weight(&self) -> usize {
        match &self.location {
            Location::Class(f) => f.degree().unwrap_or(0),
            _ => 1,
        }
    }

    /// Sum of the indicial roots at one representative point.
    pub fn exponent_sum(&self) -> Option<Rat> {
        let p = self.indicial.as_ref()?;
        let d = p.degree()?;
        if d == 0 {
            return Some(Rat::zero());
        }
        Some(-(p.coeff(d - 1) / p.coeff(d)))
    }
}

/// Sum of all exponents over all reported points minus the value the
/// classical relation demands, `(S - 2) n (n-1) / 2` with `S` the number
/// of singular points counted with class weight. Zero for an operator
/// whose singularities are all regular.
pub fn fuchs_defect(analyses: &[PointAnalysis], order: usize) -> Option<Rat> {
    let mut total = Rat::zero();
    let mut points = 0i64;
    for a in analyses {
        let s = a.exponent_sum()?;
        let w = a.weight() as i64;
        points += w;
        total = total + s * exactcore::rat_i(w);
    }
    let n = order as i64;
    Some(total - exactcore::rat_i((points - 2) * n * (n - 1)) / exactcore::rat_i(2))
}

/// Full singular-point report for an operator: one entry per rational
/// singularity, per class of conjugate singularities, and for infinity
/// when it is singular. Ordinary points are not reported.
pub fn fuchsian_analysis(op: &DiffOperator) -> Result<Vec<PointAnalysis>> {
    let n = op
        .order()
        .ok_or_else(|| Error::Unsupported("singularity analysis of the zero operator".into()))?;
    if n == 0 {
        return Err(Error::Unsupported(
            "singularity analysis needs order at least one".into(),
        ));
    }
    let (polys, _) = op.cleared();
    let mut out = Vec::new();

    let (roots, leftover) = polys[n].rational_roots();
    for (a, _) in &roots {
        if let Some(pa) = analyze_rational(&polys, n, a) {
            out.push(pa);
        }
    }

    if leftover.degree().map_or(false, |d| d >= 1) {
        let sqf = squarefree_part(&leftover);
        for block in refine_by_valuations(&sqf, &polys) {
            out.extend(analyze_class_driver(&polys, n, block)?);
        }
    }

    let at_inf = subst_invert(op, op.variable())?;
    let (ipolys, _) = at_inf.cleared();
    if let Some(mut pa) = analyze_rational(&ipolys, n, &Rat::zero()) {
        pa.location = Location::Infinity;
        out.push(pa);
    }

    Ok(out)
}

fn squarefree_part(p: &Poly) -> Poly {
    let g = p.gcd(&p.derivative());
    let q = p.exact_div(&g).expect("gcd divides");
    monic(&q)
}

fn monic(p: &Poly) -> Poly {
    match p.lc() {
        Some(l) => {
            let inv = l.clone().recip();
            p.scale(&inv)
        }
        None => p.clone(),
    }
}

/// Splits a squarefree block into monic sub-blocks whose factors share one
/// valuation in `p`; `None` marks the zero polynomial (infinite valuation).
fn split_by_valuation(block: &Poly, p: &Poly) -> Vec<(Poly, Option<usize>)> {
    if p.is_zero() {
        return vec![(block.clone(), None)];
    }
    let mut out = Vec::new();
    let e1 = block.gcd(p);
    let val0 = block.exact_div(&e1).expect("gcd divides");
    if val0.degree().map_or(false, |d| d >= 1) {
        out.push((monic(&val0), Some(0)));
    }
    let mut cur = e1;
    let mut rest = p.exact_div(&cur).expect("gcd divides");
    let mut k = 1usize;
    while cur.degree().map_or(false, |d| d >= 1) {
        let deeper = cur.gcd(&rest);
        let exact = cur.exact_div(&deeper).expect("gcd divides");
        if exact.degree().map_or(false, |d| d >= 1) {
            out.push((monic(&exact), Some(k)));
        }
        if deeper.degree().map_or(true, |d| d == 0) {
            break;
        }
        rest = rest.exact_div(&deeper).expect("valuation layers divide");
        cur = deeper;
        k += 1;
    }
    out
}

/// Refines a squarefree class so each returned block has a uniform
/// valuation vector across all coefficient polynomials.
fn refine_by_valuations(f: &Poly, polys: &[Poly]) -> Vec<Poly> {
    let mut blocks = vec![f.clone()];
    for p in polys {
        let mut next = Vec::new();
        for b in &blocks {
            for (piece, _) in split_by_valuation(b, p) {
                next.push(piece);
            }
        }
        blocks = next;
    }
    blocks
}

/// Polynomials over the context field, coefficient vectors in ascending
/// degree with no trailing zeros.
fn epoly_trim<C: FieldCtx>(ctx: &C, v: &mut Vec<C::E>) {
    while v.last().map_or(false, |e| ctx.is_zero(e)) {
        v.pop();
    }
}

fn epoly_add_scaled<C: FieldCtx>(ctx: &C, target: &mut Vec<C::E>, p: &Poly, c: &C::E) {
    let coeffs = p.coeffs();
    if target.len() < coeffs.len() {
        target.resize(coeffs.len(), ctx.zero());
    }
    for (slot, pc) in target.iter_mut().zip(coeffs) {
        let term = ctx.mul(c, &ctx.from_rat(pc));
        *slot = ctx.add(slot, &term);
    }
}

fn epoly_eval<C: FieldCtx>(ctx: &C, p: &[C::E], at: &Rat) -> C::E {
    let x = ctx.from_rat(at);
    let mut acc = ctx.zero();
    for c in p.iter().rev() {
        acc = ctx.add(&ctx.mul(&acc, &x), c);
    }
    acc
}

fn epoly_derivative<C: FieldCtx>(ctx: &C, p: &[C::E]) -> Vec<C::E> {
    let mut out = Vec::with_capacity(p.len().saturating_sub(1));
    for (k, c) in p.iter().enumerate().skip(1) {
        out.push(ctx.mul(c, &ctx.from_rat(&exactcore::rat_i(k as i64))));
    }
    out
}

/// Local data at a point: `P_m(s)` for each exponent shift `m`, where the
/// operator maps `x^s` to `sum_m P_m(s) x^(s+m)`.
struct LocalShifts<E> {
    min_shift: i64,
    shifts: Vec<Vec<E>>,
}

impl<E> LocalShifts<E> {
    fn indicial(&self) -> &[E] {
        &self.shifts[0]
    }

    fn shift(&self, m: i64) -> Option<&[E]> {
        let idx = m - self.min_shift;
        if idx < 0 {
            return None;
        }
        self.shifts.get(idx as usize).map(Vec::as_slice)
    }

    fn width(&self) -> i64 {
        self.shifts.len() as i64 - 1
    }
}

/// Builds the shift table from Taylor rows of the cleared coefficients
/// around the point: `rows[i][j]` is the `j`-th Taylor coefficient of the
/// coefficient of `D^i`.
fn local_shifts<C: FieldCtx>(ctx: &C, rows: &[Vec<C::E>]) -> LocalShifts<C::E> {
    let mut min_shift = i64::MAX;
    let mut max_shift = i64::MIN;
    for (i, row) in rows.iter().enumerate() {
        for (j, a) in row.iter().enumerate() {
            if ctx.is_zero(a) {
                continue;
            }
            let m = j as i64 - i as i64;
            min_shift = min_shift.min(m);
            max_shift = max_shift.max(m);
        }
    }
    assert!(min_shift <= max_shift, "zero operator has no local data");
    let mut shifts = vec![Vec::new(); (max_shift - min_shift + 1) as usize];
    for (i, row) in rows.iter().enumerate() {
        let fall = falling_poly(i);
        for (j, a) in row.iter().enumerate() {
            if ctx.is_zero(a) {
                continue;
            }
            let m = j as i64 - i as i64;
            epoly_add_scaled(ctx, &mut shifts[(m - min_shift) as usize], &fall, a);
        }
    }
    for s in &mut shifts {
        epoly_trim(ctx, s);
    }
    LocalShifts { min_shift, shifts }
}

/// Decides whether a regular singular point has only analytic solutions:
/// the indicial roots must be distinct non-negative integers, a full set
/// of them, and every resonance in the recurrence must be resolvable
/// without logarithms. `Ok(None)` when the scan ceiling is exceeded.
fn apparent_check<C: FieldCtx>(
    ctx: &C,
    ls: &LocalShifts<C::E>,
    n: usize,
) -> FResult<Option<bool>> {
    let ind = ls.indicial();
    debug_assert_eq!(ind.len(), n + 1, "regular point has indicial degree n");
    let lead_inv = ctx.inv(&ind[n])?;
    let trace_e = ctx.neg(&ctx.mul(&ind[n - 1], &lead_inv));
    let trace = match ctx.as_rat(&trace_e) {
        Some(t) => t,
        None => return Ok(Some(false)),
    };
    if !trace.is_integer() || trace.is_negative() {
        return Ok(Some(false));
    }
    let bound = match as_i64(&trace) {
        Some(b) if b <= TRACE_SCAN_LIMIT => b,
        _ => return Ok(None),
    };

    let mut roots: Vec<i64> = Vec::new();
    let ind_der = epoly_derivative(ctx, ind);
    for k in 0..=bound {
        let v = epoly_eval(ctx, ind, &exactcore::rat_i(k));
        if ctx.is_zero(&v) {
            let dv = epoly_eval(ctx, &ind_der, &exactcore::rat_i(k));
            if ctx.is_zero(&dv) {
                return Ok(Some(false));
            }
            ctx.certify(&dv)?;
            roots.push(k);
            if roots.len() == n {
                break;
            }
        } else {
            ctx.certify(&v)?;
        }
    }
    if roots.len() != n {
        return Ok(Some(false));
    }

    let top = roots[n - 1];
    let width = ls.width();
    for &rho in &roots[..n - 1] {
        let span = (top - rho) as usize;
        let mut u: Vec<C::E> = Vec::with_capacity(span + 1);
        u.push(ctx.one());
        for k in 1..=span as i64 {
            let mut rhs = ctx.zero();
            for back in 1..=width.min(k) {
                let p = match ls.shift(ls.min_shift + back) {
                    Some(p) if !p.is_empty() => p,
                    _ => continue,
                };
                let arg = exactcore::rat_i(rho + k - back);
                let term = ctx.mul(&epoly_eval(ctx, p, &arg), &u[(k - back) as usize]);
                rhs = ctx.sub(&rhs, &term);
            }
            let denom = epoly_eval(ctx, ind, &exactcore::rat_i(rho + k));
            if ctx.is_zero(&denom) {
                if ctx.is_zero(&rhs) {
                    u.push(ctx.zero());
                } else {
                    ctx.certify(&rhs)?;
                    return Ok(Some(false));
                }
            } else {
                u.push(ctx.mul(&rhs, &ctx.inv(&denom)?));
            }
        }
    }
    Ok(Some(true))
}

/// Exponent report from a monic rational indicial polynomial.
fn report_from_indicial(ind: &Poly) -> ExponentReport {
    let (rational, leftover) = ind.rational_roots();
    let nonrational = if leftover.degree().map_or(false, |d| d >= 1) {
        Some(monic(&leftover))
    } else {
        None
    };
    ExponentReport {
        rational,
        nonrational,
    }
}

/// Analysis at a finite rational point; `None` when the point is ordinary.
fn analyze_rational(polys: &[Poly], n: usize, a: &Rat) -> Option<PointAnalysis> {
    let val_n = polys[n].root_multiplicity(a);
    if val_n == 0 {
        return None;
    }
    let mut ordinary = true;
    let mut regular = true;
    for (i, p) in polys.iter().enumerate().take(n) {
        if p.is_zero() {
            continue;
        }
        let vi = p.root_multiplicity(a);
        if vi < val_n {
            ordinary = false;
        }
        if val_n as i64 - vi as i64 > (n - i) as i64 {
            regular = false;
        }
    }
    if ordinary {
        return None;
    }
    let ctx = RatCtx;
    let rows: Vec<Vec<Rat>> = polys.iter().map(|p| p.shift(a).coeffs().to_vec()).collect();
    let ls = local_shifts(&ctx, &rows);
    let indicial = monic(&Poly::new(ls.indicial().to_vec()));
    let exponents = report_from_indicial(&indicial);
    let apparent = if regular {
        match apparent_check(&ctx, &ls, n) {
            Ok(v) => v,
            Err(_) => unreachable!("rational arithmetic never splits"),
        }
    } else {
        None
    };
    Some(PointAnalysis {
        location: Location::Finite(a.clone()),
        regular,
        indicial: Some(indicial),
        exponents,
        apparent,
    })
}

/// Analysis over a class, splitting and retrying whenever the quotient
/// arithmetic branches on a zero divisor.
fn analyze_class_driver(polys: &[Poly], n: usize, f: Poly) -> Result<Vec<PointAnalysis>> {
    let mut queue = vec![f];
    let mut out = Vec::new();
    while let Some(f) = queue.pop() {
        match f.degree() {
            None | Some(0) => continue,
            Some(1) => {
                // Monic linear block: a rational point after all.
                let a = -f.coeff(0);
                if let Some(pa) = analyze_rational(polys, n, &a) {
                    out.push(pa);
                }
                continue;
            }
            _ => {}
        }
        match analyze_class_once(polys, n, &f) {
            Ok(Some(pa)) => out.push(pa),
            Ok(None) => {}
            Err(Split(g)) => {
                let g = monic(&g);
                let h = f
                    .exact_div(&g)
                    .map_err(|_| Error::Unsupported("split factor does not divide".into()))?;
                queue.push(g);
                queue.push(monic(&h));
            }
        }
    }
    Ok(out)
}

fn analyze_class_once(polys: &[Poly], n: usize, f: &Poly) -> FResult<Option<PointAnalysis>> {
    // Valuations are uniform across the block after refinement.
    let val = |p: &Poly| -> Option<usize> {
        if p.is_zero() {
            None
        } else {
            Some(p.factor_multiplicity(f))
        }
    };
    let val_n = val(&polys[n]).expect("leading coefficient is nonzero");
    if val_n == 0 {
        return Ok(None);
    }
    let mut ordinary = true;
    let mut regular = true;
    for (i, p) in polys.iter().enumerate().take(n) {
        match val(p) {
            None => {}
            Some(vi) => {
                if vi < val_n {
                    ordinary = false;
                }
                if val_n as i64 - vi as i64 > (n - i) as i64 {
                    regular = false;
                }
            }
        }
    }
    if ordinary {
        return Ok(None);
    }

    let ctx = QuotCtx::new(f);
    let rows: Vec<Vec<Poly>> = polys.iter().map(|p| taylor_row(&ctx, p)).collect();
    let ls = local_shifts(&ctx, &rows);

    // Monicize the indicial polynomial inside the quotient ring; if every
    // coefficient is then a plain rational, the exponents are uniform.
    let ind_e = ls.indicial();
    let lead_inv = ctx.inv(&ind_e[ind_e.len() - 1])?;
    let monic_ind: Vec<Poly> = ind_e.iter().map(|c| ctx.mul(c, &lead_inv)).collect();
    let rational_ind: Option<Vec<Rat>> = monic_ind.iter().map(|c| ctx.as_rat(c)).collect();
    let (indicial, exponents) = match rational_ind {
        Some(coeffs) => {
            let p = Poly::new(coeffs);
            let report = report_from_indicial(&p);
            (Some(p), report)
        }
        None => (None, ExponentReport::default()),
    };
    let apparent = if regular {
        apparent_check(&ctx, &ls, n)?
    } else {
        None
    };
    Ok(Some(PointAnalysis {
        location: Location::Class(f.clone()),
        regular,
        indicial,
        exponents,
        apparent,
    }))
}

/// Taylor coefficients of `p` around the class point: successive
/// derivatives reduced mod the modulus, divided by factorials.
fn taylor_row(ctx: &QuotCtx, p: &Poly) -> Vec<Poly> {
    let mut out = Vec::new();
    let mut der = p.clone();
    let mut fact = Rat::one();
    let mut j = 0u64;
    loop {
        if j > 0 {
            fact = fact * exactcore::rat_i(j as i64);
        }
        let inv = fact.clone().recip();
        out.push(ctx.reduce(&der).scale(&inv));
        if der.degree().map_or(true, |d| d == 0) {
            break;
        }
        der = der.derivative();
        j += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use exactcore::rational::{rat, rat_i};
    use exactcore::ratfun::RationalFunction;
    use exactcore::series::Var;

    fn op_from_ints(coeffs: &[&[i64]]) -> DiffOperator {
        DiffOperator::from_polys(Var::X, coeffs.iter().map(|c| Poly::from_ints(c)).collect())
    }

    fn find<'a>(
        analyses: &'a [PointAnalysis],
        loc: &Location,
    ) -> &'a PointAnalysis {
        analyses
            .iter()
            .find(|a| &a.location == loc)
            .unwrap_or_else(|| panic!("no analysis at {loc:?}"))
    }

    #[test]
    fn two_power_solutions() {
        // x^2 D^2 - 6 x D + 10: solutions x^2 and x^5.
        let op = op_from_ints(&[&[10], &[0, -6], &[0, 0, 1]]);
        let an = fuchsian_analysis(&op).unwrap();
        assert_eq!(an.len(), 2);
        let zero = find(&an, &Location::Finite(Rat::zero()));
        assert!(zero.regular);
        assert_eq!(
            zero.exponents.rational,
            vec![(rat_i(2), 1), (rat_i(5), 1)]
        );
        assert_eq!(zero.apparent, Some(true));
        let inf = find(&an, &Location::Infinity);
        assert!(inf.regular);
        assert_eq!(inf.exponent_sum(), Some(rat_i(-7)));
        assert_eq!(inf.apparent, Some(false));
        assert_eq!(fuchs_defect(&an, 2), Some(Rat::zero()));
    }

    #[test]
    fn double_root_blocks_apparency() {
        // x(1-x) D^2 + (1-2x) D: indicial s^2 at 0.
        let op = op_from_ints(&[&[], &[1, -2], &[0, 1, -1]]);
        let an = fuchsian_analysis(&op).unwrap();
        let zero = find(&an, &Location::Finite(Rat::zero()));
        assert!(zero.regular);
        assert_eq!(zero.exponents.rational, vec![(rat_i(0), 2)]);
        assert_eq!(zero.apparent, Some(false));
        let one = find(&an, &Location::Finite(Rat::one()));
        assert!(one.regular);
        assert_eq!(fuchs_defect(&an, 2), Some(Rat::zero()));
    }

    #[test]
    fn apparent_point_versus_log_point() {
        // x D^2 - D: solutions 1 and x^2, apparent at 0.
        let plain = op_from_ints(&[&[], &[-1], &[0, 1]]);
        let an = fuchsian_analysis(&plain).unwrap();
        let zero = find(&an, &Location::Finite(Rat::zero()));
        assert_eq!(
            zero.exponents.rational,
            vec![(rat_i(0), 1), (rat_i(2), 1)]
        );
        assert_eq!(zero.apparent, Some(true));

        // x D^2 - D + 1: same exponents, but the resonance fails.
        let logged = op_from_ints(&[&[1], &[-1], &[0, 1]]);
        let an = fuchsian_analysis(&logged).unwrap();
        let zero = find(&an, &Location::Finite(Rat::zero()));
        assert_eq!(
            zero.exponents.rational,
            vec![(rat_i(0), 1), (rat_i(2), 1)]
        );
        assert_eq!(zero.apparent, Some(false));
    }

    #[test]
    fn irregular_point_identified() {
        // x^2 D - 1: essential singularity at 0 (solution e^{-1/x}).
        let op = op_from_ints(&[&[-1], &[0, 0, 1]]);
        let an = fuchsian_analysis(&op).unwrap();
        let zero = find(&an, &Location::Finite(Rat::zero()));
        assert!(!zero.regular);
        assert_eq!(zero.apparent, None);
    }

    #[test]
    fn quadratic_class_uniform_exponents() {
        // (x^2-2) D - 2x: solution x^2 - 2, exponent 1 at both roots.
        let op = op_from_ints(&[&[0, -2], &[-2, 0, 1]]);
        let an = fuchsian_analysis(&op).unwrap();
        let class = find(&an, &Location::Class(Poly::from_ints(&[-2, 0, 1])));
        assert!(class.regular);
        assert_eq!(class.weight(), 2);
        assert_eq!(class.exponents.rational, vec![(rat_i(1), 1)]);
        assert_eq!(class.apparent, Some(true));
        // Fractional exponent variant: (x^2-2) D - x has exponent 1/2.
        let op = op_from_ints(&[&[0, -1], &[-2, 0, 1]]);
        let an = fuchsian_analysis(&op).unwrap();
        let class = find(&an, &Location::Class(Poly::from_ints(&[-2, 0, 1])));
        assert_eq!(class.exponents.rational, vec![(rat(1, 2), 1)]);
        assert_eq!(class.apparent, Some(false));
    }

    #[test]
    fn valuation_refinement_drops_ordinary_block() {
        // (x^2-3) * [(x^2-2) D - 2x]: the x^2-3 factor is shared and its
        // roots are ordinary; only the x^2-2 class is singular.
        let f = Poly::from_ints(&[-2, 0, 1]);
        let g = Poly::from_ints(&[-3, 0, 1]);
        let op = DiffOperator::from_polys(
            Var::X,
            vec![
                Poly::from_ints(&[0, -2]).mul(&g),
                f.mul(&g),
            ],
        );
        let an = fuchsian_analysis(&op).unwrap();
        let classes: Vec<_> = an
            .iter()
            .filter(|a| matches!(a.location, Location::Class(_)))
            .collect();
        assert_eq!(classes.len(), 1);
        assert_eq!(classes[0].location, Location::Class(f));
    }

    #[test]
    fn hypergeometric_shape() {
        // x(1-x) D^2 + (c - (a+b+1)x) D - ab with a=1/2, b=1/2, c=1:
        // exponents {0,0} at 0, {0, c-a-b=0} at 1, {a,b} at infinity.
        let half = rat(1, 2);
        let c0 = RationalFunction::from_poly(Poly::constant(-(half.clone() * half.clone())));
        let c1 = RationalFunction::from_poly(Poly::new(vec![Rat::one(), rat_i(-2)]));
        let c2 = RationalFunction::from_poly(Poly::from_ints(&[0, 1, -1]));
        let op = DiffOperator::new(Var::X, vec![c0, c1, c2]);
        let an = fuchsian_analysis(&op).unwrap();
        assert_eq!(an.len(), 3);
        let inf = find(&an, &Location::Infinity);
        assert_eq!(inf.exponents.rational, vec![(rat(1, 2), 2)]);
        assert_eq!(fuchs_defect(&an, 2), Some(Rat::zero()));
    }
}
