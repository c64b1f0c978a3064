//! Polynomials in the fixed symbol set (S3, S2, S1, S0, u, t, alpha).
//!
//! Everything downstream that mixes a logarithmic-derivative tower with
//! curve parameters lives in this one ring, so the symbol list is closed:
//! S0..S3 are the tower slots, u a curve parameter, t the base variable,
//! alpha a free exponent. Term order is graded lexicographic over that
//! listing, which makes leading terms stable and exact division by
//! long division terminate.

use crate::poly::Poly;
use crate::rational::{rat_i, Rat};
use crate::series::TruncatedSeries;
use crate::{Error, Result};
use num::traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;

pub const SYM_COUNT: usize = 7;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sym {
    S3,
    S2,
    S1,
    S0,
    U,
    T,
    Alpha,
}

pub const ALL_SYMS: [Sym; SYM_COUNT] = [
    Sym::S3,
    Sym::S2,
    Sym::S1,
    Sym::S0,
    Sym::U,
    Sym::T,
    Sym::Alpha,
];

impl Sym {
    pub fn index(self) -> usize {
        match self {
            Sym::S3 => 0,
            Sym::S2 => 1,
            Sym::S1 => 2,
            Sym::S0 => 3,
            Sym::U => 4,
            Sym::T => 5,
            Sym::Alpha => 6,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Sym::S3 => "S3",
            Sym::S2 => "S2",
            Sym::S1 => "S1",
            Sym::S0 => "S0",
            Sym::U => "u",
            Sym::T => "t",
            Sym::Alpha => "alpha",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        ALL_SYMS
            .iter()
            .copied()
            .find(|v| v.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown symbol {s:?}")))
    }
}

/// Exponent vector, ordered graded-lex over the symbol listing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Expo(pub [u32; SYM_COUNT]);

impl Expo {
    pub fn zero() -> Self {
        Expo([0; SYM_COUNT])
    }

    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    fn checked_add(&self, other: &Expo) -> Expo {
        let mut out = [0u32; SYM_COUNT];
        for i in 0..SYM_COUNT {
            out[i] = self.0[i]
                .checked_add(other.0[i])
                .expect("exponent overflow");
        }
        Expo(out)
    }

    fn divides(&self, other: &Expo) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    fn sub(&self, other: &Expo) -> Expo {
        let mut out = [0u32; SYM_COUNT];
        for i in 0..SYM_COUNT {
            out[i] = self.0[i] - other.0[i];
        }
        Expo(out)
    }
}

impl Ord for Expo {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.total()
            .cmp(&other.total())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Expo {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiPoly {
    terms: BTreeMap<Expo, Rat>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Expo::zero(), c);
        }
        MultiPoly { terms }
    }

    pub fn var(s: Sym) -> Self {
        Self::monomial(Rat::one(), {
            let mut e = Expo::zero();
            e.0[s.index()] = 1;
            e
        })
    }

    pub fn monomial(c: Rat, e: Expo) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        MultiPoly { terms }
    }

    /// Lifts a univariate polynomial onto one symbol.
    pub fn from_poly(p: &Poly, s: Sym) -> Self {
        let mut out = MultiPoly::zero();
        for (k, c) in p.coeffs().iter().enumerate() {
            if !c.is_zero() {
                let mut e = Expo::zero();
                e.0[s.index()] = k as u32;
                out.terms.insert(e, c.clone());
            }
        }
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Expo, &Rat)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() <= 1 && self.terms.keys().all(|e| *e == Expo::zero())
    }

    pub fn constant_value(&self) -> Option<Rat> {
        if self.is_zero() {
            return Some(Rat::zero());
        }
        self.is_constant()
            .then(|| self.terms.values().next().unwrap().clone())
    }

    /// Leading term under graded lex.
    pub fn leading(&self) -> Option<(&Expo, &Rat)> {
        self.terms.iter().next_back()
    }

    pub fn degree(&self, s: Sym) -> u32 {
        self.terms
            .keys()
            .map(|e| e.0[s.index()])
            .max()
            .unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Expo::total).max().unwrap_or(0)
    }

    pub fn uses(&self, s: Sym) -> bool {
        self.terms.keys().any(|e| e.0[s.index()] > 0)
    }

    fn insert(&mut self, e: Expo, c: Rat) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert(*e, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert(*e, -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        MultiPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = MultiPoly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                out.insert(ea.checked_add(eb), ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = MultiPoly::one();
        let mut sq = self.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&sq);
            }
            e >>= 1;
            if e > 0 {
                sq = sq.mul(&sq);
            }
        }
        acc
    }

    /// Partial derivative with respect to one symbol.
    pub fn derivative(&self, s: Sym) -> Self {
        let i = s.index();
        let mut out = MultiPoly::zero();
        for (e, c) in &self.terms {
            if e.0[i] > 0 {
                let mut e2 = *e;
                e2.0[i] -= 1;
                out.insert(e2, c * rat_i(e.0[i] as i64));
            }
        }
        out
    }

    /// Coefficients as polynomials in the remaining symbols, ascending in
    /// powers of `s` (length degree+1; empty for the zero polynomial).
    pub fn coefficients_in(&self, s: Sym) -> Vec<MultiPoly> {
        if self.is_zero() {
            return vec![];
        }
        let i = s.index();
        let d = self.degree(s) as usize;
        let mut out = vec![MultiPoly::zero(); d + 1];
        for (e, c) in &self.terms {
            let k = e.0[i] as usize;
            let mut e2 = *e;
            e2.0[i] = 0;
            out[k].insert(e2, c.clone());
        }
        out
    }

    /// Substitutes a polynomial for one symbol (Horner along that symbol).
    pub fn subst(&self, s: Sym, value: &MultiPoly) -> Self {
        if !self.uses(s) {
            return self.clone();
        }
        let coeffs = self.coefficients_in(s);
        let mut acc = MultiPoly::zero();
        for c in coeffs.iter().rev() {
            acc = acc.mul(value).add(c);
        }
        acc
    }

    pub fn subst_rat(&self, s: Sym, value: &Rat) -> Self {
        self.subst(s, &MultiPoly::constant(value.clone()))
    }

    /// Evaluates on truncated series. Every symbol appearing with positive
    /// degree must be bound; all bound series must share a variable.
    pub fn eval_series(&self, env: &[(Sym, TruncatedSeries)]) -> Result<TruncatedSeries> {
        let var = match env.first() {
            Some((_, s)) => s.variable(),
            None => {
                return Err(Error::Unsupported(
                    "series evaluation needs at least one binding".into(),
                ))
            }
        };
        for s in ALL_SYMS {
            if self.uses(s) && !env.iter().any(|(b, _)| *b == s) {
                return Err(Error::Unsupported(format!(
                    "symbol {} unbound in series evaluation",
                    s.name()
                )));
            }
        }
        // Cache powers per symbol to keep the term loop linear.
        let mut pows: BTreeMap<(usize, u32), TruncatedSeries> = BTreeMap::new();
        let mut acc = TruncatedSeries::zero_exact(var);
        for (e, c) in &self.terms {
            let mut term = TruncatedSeries::constant(var, c.clone());
            for (sym, series) in env {
                let k = e.0[sym.index()];
                if k == 0 {
                    continue;
                }
                let key = (sym.index(), k);
                let p = match pows.get(&key) {
                    Some(p) => p.clone(),
                    None => {
                        let p = series.pow(k)?;
                        pows.insert(key, p.clone());
                        p
                    }
                };
                term = term.mul(&p)?;
            }
            acc = acc.add(&term)?;
        }
        Ok(acc)
    }

    /// Extracts a univariate polynomial when only `s` occurs.
    pub fn as_univariate(&self, s: Sym) -> Result<Poly> {
        for other in ALL_SYMS {
            if other != s && self.uses(other) {
                return Err(Error::Unsupported(format!(
                    "polynomial also involves {}",
                    other.name()
                )));
            }
        }
        let i = s.index();
        let mut coeffs = vec![Rat::zero(); self.degree(s) as usize + 1];
        for (e, c) in &self.terms {
            coeffs[e.0[i] as usize] = c.clone();
        }
        Ok(Poly::new(coeffs))
    }

    /// Rational content: the positive scalar `g` with `self = g * primitive`
    /// where the primitive part has integer coefficients with gcd 1 and
    /// positive leading coefficient.
    pub fn primitive(&self) -> (Rat, MultiPoly) {
        use num::bigint::BigInt;
        use num::integer::Integer;
        if self.is_zero() {
            return (Rat::one(), MultiPoly::zero());
        }
        let mut den_lcm = BigInt::one();
        for c in self.terms.values() {
            den_lcm = den_lcm.lcm(c.denom());
        }
        let mut num_gcd = BigInt::zero();
        for c in self.terms.values() {
            num_gcd = num_gcd.gcd(&(c.numer() * &den_lcm / c.denom()));
        }
        let mut scale = Rat::new(num_gcd, den_lcm);
        if self.leading().unwrap().1 < &Rat::zero() {
            scale = -scale;
        }
        let prim = MultiPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (*e, c / &scale))
                .collect(),
        };
        (scale, prim)
    }

    /// Exact division in the ring (errors when `other` does not divide).
    pub fn exact_div(&self, other: &Self) -> Result<MultiPoly> {
        if other.is_zero() {
            return Err(Error::NotInvertible("division by zero polynomial".into()));
        }
        let mut rem = self.clone();
        let mut quot = MultiPoly::zero();
        let (lt_e, lt_c) = {
            let (e, c) = other.leading().unwrap();
            (*e, c.clone())
        };
        while let Some((re, rc)) = rem.leading().map(|(e, c)| (*e, c.clone())) {
            if !lt_e.divides(&re) {
                return Err(Error::InexactDivision(
                    "leading term not divisible".into(),
                ));
            }
            let qe = re.sub(&lt_e);
            let qc = rc / &lt_c;
            let m = MultiPoly::monomial(qc, qe);
            rem = rem.sub(&m.mul(other));
            quot = quot.add(&m);
        }
        Ok(quot)
    }

    /// Pseudo-division by `other` along `s`: returns `(k, q, r)` with
    /// `lc^k * self = q*other + r`, `deg_s r < deg_s other`, where `lc` is
    /// the leading coefficient of `other` in `s`.
    pub fn pseudo_div(&self, other: &Self, s: Sym) -> Result<(usize, MultiPoly, MultiPoly)> {
        let d = other.degree(s);
        if other.is_zero() {
            return Err(Error::NotInvertible("pseudo-division by zero".into()));
        }
        if d == 0 {
            // Divisor free of s: lc is the divisor itself.
            return Ok((1, self.clone(), MultiPoly::zero()));
        }
        let lc = other.coefficients_in(s)[d as usize].clone();
        let mut k = 0usize;
        let mut rem = self.clone();
        let mut quot = MultiPoly::zero();
        while rem.degree(s) >= d && !rem.is_zero() {
            let rd = rem.degree(s);
            let rlead = rem.coefficients_in(s)[rd as usize].clone();
            let shift = {
                let mut e = Expo::zero();
                e.0[s.index()] = rd - d;
                e
            };
            let m = rlead.mul(&MultiPoly::monomial(Rat::one(), shift));
            rem = rem.mul(&lc).sub(&m.mul(other));
            quot = quot.mul(&lc).add(&m);
            k += 1;
        }
        Ok((k, quot, rem))
    }

    /// Resultant of `self` and `other` with respect to `s`, eliminating it.
    /// Computed as the Sylvester determinant by fraction-free elimination.
    pub fn resultant_eliminate(&self, other: &Self, s: Sym) -> Result<MultiPoly> {
        let m = self.degree(s) as usize;
        let n = other.degree(s) as usize;
        if self.is_zero() || other.is_zero() {
            return Err(Error::NothingToEliminate(
                "resultant with zero polynomial".into(),
            ));
        }
        if m == 0 && n == 0 {
            return Err(Error::NothingToEliminate(format!(
                "neither side involves {}",
                s.name()
            )));
        }
        if m == 0 {
            return Ok(self.pow(n as u32));
        }
        if n == 0 {
            return Ok(other.pow(m as u32));
        }
        let a = self.coefficients_in(s);
        let b = other.coefficients_in(s);
        let size = m + n;
        let mut rows: Vec<Vec<MultiPoly>> = Vec::with_capacity(size);
        for i in 0..n {
            let mut row = vec![MultiPoly::zero(); size];
            for (j, c) in a.iter().rev().enumerate() {
                row[i + j] = c.clone();
            }
            rows.push(row);
        }
        for i in 0..m {
            let mut row = vec![MultiPoly::zero(); size];
            for (j, c) in b.iter().rev().enumerate() {
                row[i + j] = c.clone();
            }
            rows.push(row);
        }
        bareiss_determinant(rows)
    }
}

/// Fraction-free determinant over the polynomial ring. Exact divisions by
/// the previous pivot are guaranteed by the Bareiss identity.
fn bareiss_determinant(mut m: Vec<Vec<MultiPoly>>) -> Result<MultiPoly> {
    let n = m.len();
    if n == 0 {
        return Ok(MultiPoly::one());
    }
    let mut sign = false;
    let mut prev = MultiPoly::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let swap = (k + 1..n).find(|&i| !m[i][k].is_zero());
            match swap {
                Some(i) => {
                    m.swap(k, i);
                    sign = !sign;
                }
                None => return Ok(MultiPoly::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[k][k].mul(&m[i][j]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = num.exact_div(&prev)?;
            }
            m[i][k] = MultiPoly::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    Ok(if sign { det.neg() } else { det })
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            if *e == Expo::zero() {
                write!(f, "{c}")?;
                continue;
            }
            write!(f, "({c})")?;
            for s in ALL_SYMS {
                let k = e.0[s.index()];
                match k {
                    0 => {}
                    1 => write!(f, "*{}", s.name())?,
                    _ => write!(f, "*{}^{}", s.name(), k)?,
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;
    use crate::series::Var;

    fn s0() -> MultiPoly {
        MultiPoly::var(Sym::S0)
    }
    fn t() -> MultiPoly {
        MultiPoly::var(Sym::T)
    }

    #[test]
    fn ring_ops_and_degrees() {
        let p = s0().mul(&t()).add(&MultiPoly::one()); // S0*t + 1
        let q = p.mul(&p);
        assert_eq!(q.degree(Sym::S0), 2);
        assert_eq!(q.degree(Sym::T), 2);
        assert_eq!(q.total_degree(), 4);
        assert_eq!(q.term_count(), 3);
        assert!(p.sub(&p).is_zero());
        assert_eq!(p.derivative(Sym::S0), t());
        assert_eq!(q.derivative(Sym::S0), p.mul(&t()).scale(&rat(2, 1)));
    }

    #[test]
    fn coefficient_split_and_subst() {
        // p = S0^2 - t  ->  coefficients in S0: [-t, 0, 1]
        let p = s0().pow(2).sub(&t());
        let cs = p.coefficients_in(Sym::S0);
        assert_eq!(cs.len(), 3);
        assert_eq!(cs[0], t().neg());
        assert!(cs[1].is_zero());
        assert_eq!(cs[2], MultiPoly::one());
        // Substituting S0 = t gives t^2 - t.
        let sub = p.subst(Sym::S0, &t());
        assert_eq!(sub, t().pow(2).sub(&t()));
        assert_eq!(
            sub.as_univariate(Sym::T).unwrap(),
            Poly::from_ints(&[0, -1, 1])
        );
    }

    #[test]
    fn exact_division_round_trip() {
        let a = s0().add(&t()).pow(3);
        let b = s0().add(&t());
        let q = a.exact_div(&b).unwrap();
        assert_eq!(q, b.pow(2));
        assert!(a.add(&MultiPoly::one()).exact_div(&b).is_err());
    }

    #[test]
    fn pseudo_division_identity() {
        // Divide S0^3 by (t*S0 - 1) along S0 and check lc^k f = q g + r.
        let f = s0().pow(3);
        let g = t().mul(&s0()).sub(&MultiPoly::one());
        let (k, q, r) = f.pseudo_div(&g, Sym::S0).unwrap();
        let lc = t();
        let lhs = f.mul(&lc.pow(k as u32));
        assert_eq!(lhs, q.mul(&g).add(&r));
        assert_eq!(r.degree(Sym::S0), 0);
    }

    #[test]
    fn resultant_detects_common_roots() {
        // f = S0^2 - t, g = S0 - u: Res_{S0} = u^2 - t.
        let f = s0().pow(2).sub(&t());
        let g = s0().sub(&MultiPoly::var(Sym::U));
        let r = f.resultant_eliminate(&g, Sym::S0).unwrap();
        assert_eq!(r, MultiPoly::var(Sym::U).pow(2).sub(&t()));
        // Specialization check: Res(f, S0 - 2) at t = 4 vanishes.
        let spec = r.subst(Sym::U, &MultiPoly::constant(rat(2, 1)));
        assert_eq!(
            spec.subst(Sym::T, &MultiPoly::constant(rat(4, 1))),
            MultiPoly::zero()
        );
    }

    #[test]
    fn series_evaluation_binds_symbols() {
        let ints = |v: &[i64]| v.iter().map(|&c| rat(c, 1)).collect::<Vec<_>>();
        // p = S0^2 + t with S0 = x + x^2, t = x gives x + x^2 + 2x^3 + x^4.
        let p = s0().pow(2).add(&t());
        let sx = TruncatedSeries::truncated_from(Var::X, 1, ints(&[1, 1]), 8);
        let tx = TruncatedSeries::truncated_from(Var::X, 1, ints(&[1]), 8);
        let got = p
            .eval_series(&[(Sym::S0, sx), (Sym::T, tx)])
            .unwrap();
        let want = TruncatedSeries::truncated_from(Var::X, 1, ints(&[1, 1, 2, 1]), 8);
        assert_eq!(got, want);
        assert!(p.eval_series(&[(Sym::S0, TruncatedSeries::one(Var::X))]).is_err());
    }

    #[test]
    fn primitive_part() {
        let p = s0().scale(&rat(-2, 3)).add(&t().scale(&rat(4, 3)));
        let (scale, prim) = p.primitive();
        // Leading term under graded lex among {S0, t}: S0 comes first, so
        // the primitive part is made positive in S0.
        assert_eq!(prim, s0().scale(&rat(1, 1)).sub(&t().scale(&rat(2, 1))));
        assert_eq!(prim.scale(&scale), p);
    }
}
