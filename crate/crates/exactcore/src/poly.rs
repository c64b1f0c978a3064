//! Dense univariate polynomials over Q.
//!
//! The coefficient vector is ascending with no trailing zeros, so the zero
//! polynomial is the empty vector. These carry the operator coefficients
//! downstream, so besides ring arithmetic they expose exact division, gcd,
//! root multiplicities, translation, and a Sylvester-matrix resultant.

use crate::linalg;
use crate::rational::{rat_i, Rat};
use crate::{Error, Result};
use num::bigint::BigInt;
use num::integer::Integer;
use num::traits::{One, Signed, Zero};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poly(Vec<Rat>);

impl Poly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        Poly(coeffs)
    }

    pub fn zero() -> Self {
        Poly(vec![])
    }

    pub fn one() -> Self {
        Poly(vec![Rat::one()])
    }

    pub fn constant(c: Rat) -> Self {
        Poly::new(vec![c])
    }

    /// The monomial `c * x^k`.
    pub fn monomial(c: Rat, k: usize) -> Self {
        let mut v = vec![Rat::zero(); k + 1];
        v[k] = c;
        Poly::new(v)
    }

    pub fn x() -> Self {
        Poly::monomial(Rat::one(), 1)
    }

    /// Convenience: integer coefficients, ascending.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| rat_i(c)).collect())
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.0
    }

    pub fn coeff(&self, k: usize) -> Rat {
        self.0.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.0.len() == 1 && self.0[0].is_one()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    /// Leading coefficient (zero polynomial has none).
    pub fn lc(&self) -> Option<&Rat> {
        self.0.last()
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.0.len().max(other.0.len());
        let mut v = Vec::with_capacity(n);
        for k in 0..n {
            v.push(self.coeff(k) + other.coeff(k));
        }
        Poly::new(v)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Poly {
        Poly(self.0.iter().map(|c| -c.clone()).collect())
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly(self.0.iter().map(|x| x * c).collect())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut v = vec![Rat::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.0.iter().enumerate() {
                if !b.is_zero() {
                    v[i + j] += a * b;
                }
            }
        }
        Poly::new(v)
    }

    pub fn pow(&self, n: u32) -> Poly {
        let mut acc = Poly::one();
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

    /// Euclidean division over Q: `(q, r)` with `self = q*other + r` and
    /// `deg r < deg other`. Panics on zero divisor.
    pub fn divrem(&self, other: &Poly) -> (Poly, Poly) {
        assert!(!other.is_zero(), "division by the zero polynomial");
        let d = other.degree().unwrap();
        let lc = other.lc().unwrap();
        let mut rem = self.0.clone();
        if rem.len() <= d {
            return (Poly::zero(), Poly::new(rem));
        }
        let mut quot = vec![Rat::zero(); rem.len() - d];
        for k in (d..rem.len()).rev() {
            let c = &rem[k] / lc;
            if !c.is_zero() {
                quot[k - d] = c.clone();
                for j in 0..=d {
                    let t = &other.0[j] * &c;
                    rem[k - d + j] -= t;
                }
            }
        }
        (Poly::new(quot), Poly::new(rem))
    }

    /// Division that must be exact.
    pub fn exact_div(&self, other: &Poly) -> Result<Poly> {
        let (q, r) = self.divrem(other);
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::InexactDivision(format!(
                "remainder {r} dividing {self} by {other}"
            )))
        }
    }

    /// Monic gcd over Q.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r;
        }
        match a.lc() {
            Some(l) if !l.is_one() => {
                let inv = l.recip();
                a.scale(&inv)
            }
            _ => a,
        }
    }

    pub fn derivative(&self) -> Poly {
        if self.0.len() <= 1 {
            return Poly::zero();
        }
        Poly::new(
            self.0[1..]
                .iter()
                .enumerate()
                .map(|(k, c)| c * rat_i(k as i64 + 1))
                .collect(),
        )
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.0.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Multiplicity of the rational root `a` (0 when not a root).
    pub fn root_multiplicity(&self, a: &Rat) -> usize {
        if self.is_zero() {
            return 0;
        }
        let lin = Poly::new(vec![-a.clone(), Rat::one()]);
        let mut m = 0;
        let mut p = self.clone();
        loop {
            let (q, r) = p.divrem(&lin);
            if r.is_zero() {
                m += 1;
                p = q;
            } else {
                return m;
            }
        }
    }

    /// f-adic valuation: how often the (nonconstant) factor `f` divides.
    pub fn factor_multiplicity(&self, f: &Poly) -> usize {
        assert!(f.degree().map_or(false, |d| d >= 1));
        if self.is_zero() {
            return 0;
        }
        let mut m = 0;
        let mut p = self.clone();
        loop {
            let (q, r) = p.divrem(f);
            if r.is_zero() {
                m += 1;
                p = q;
            } else {
                return m;
            }
        }
    }

    /// `p(x + a)`: translation by Horner, exact.
    pub fn shift(&self, a: &Rat) -> Poly {
        let lin = Poly::new(vec![a.clone(), Rat::one()]);
        let mut acc = Poly::zero();
        for c in self.0.iter().rev() {
            acc = acc.mul(&lin).add(&Poly::constant(c.clone()));
        }
        acc
    }

    /// `p(x^k)`.
    pub fn subst_power(&self, k: u32) -> Poly {
        assert!(k >= 1);
        if self.is_zero() {
            return Poly::zero();
        }
        let mut v = vec![Rat::zero(); (self.0.len() - 1) * k as usize + 1];
        for (i, c) in self.0.iter().enumerate() {
            v[i * k as usize] = c.clone();
        }
        Poly::new(v)
    }

    /// Coefficient reversal: `x^(deg p) * p(1/x)`.
    pub fn reversed(&self) -> Poly {
        Poly::new(self.0.iter().rev().cloned().collect())
    }

    /// Scales to integer coefficients with content 1, returning
    /// `(scale, primitive)` with `self = scale * primitive`. The primitive
    /// part keeps the sign of the leading coefficient.
    pub fn primitive(&self) -> (Rat, Poly) {
        if self.is_zero() {
            return (Rat::one(), Poly::zero());
        }
        let mut den_lcm = BigInt::one();
        for c in &self.0 {
            den_lcm = den_lcm.lcm(c.denom());
        }
        let mut num_gcd = BigInt::zero();
        for c in &self.0 {
            num_gcd = num_gcd.gcd(&(c.numer() * &den_lcm / c.denom()));
        }
        let scale = Rat::new(num_gcd.clone(), den_lcm.clone());
        let prim = Poly(
            self.0
                .iter()
                .map(|c| c / &scale)
                .collect(),
        );
        (scale, prim)
    }

    /// Resultant with respect to the variable, via the Sylvester matrix in
    /// exact arithmetic. `Res(p, q) = 0` iff they share a root.
    pub fn resultant(&self, other: &Poly) -> Rat {
        let (m, n) = match (self.degree(), other.degree()) {
            (Some(m), Some(n)) => (m, n),
            // Res with a zero polynomial is zero unless the other is a
            // nonzero constant (empty matrix, resultant 1).
            (None, Some(0)) | (Some(0), None) => return Rat::one(),
            _ => return Rat::zero(),
        };
        if m == 0 {
            return self.0[0].clone().pow(n as i32);
        }
        if n == 0 {
            return other.0[0].clone().pow(m as i32);
        }
        let size = m + n;
        let mut rows = Vec::with_capacity(size);
        for i in 0..n {
            let mut row = vec![Rat::zero(); size];
            for (j, c) in self.0.iter().rev().enumerate() {
                row[i + j] = c.clone();
            }
            rows.push(row);
        }
        for i in 0..m {
            let mut row = vec![Rat::zero(); size];
            for (j, c) in other.0.iter().rev().enumerate() {
                row[i + j] = c.clone();
            }
            rows.push(row);
        }
        linalg::determinant(&rows)
    }

    /// Rational roots with multiplicities, found by the rational root
    /// theorem on the primitive part and deflation. The second component
    /// is the root-free cofactor (constant when every root is rational).
    pub fn rational_roots(&self) -> (Vec<(Rat, usize)>, Poly) {
        if self.degree().map_or(true, |d| d == 0) {
            return (vec![], self.clone());
        }
        let mut p = self.clone();
        let mut roots: Vec<(Rat, usize)> = Vec::new();
        // Strip x = 0 first so the trailing coefficient is nonzero.
        let zero_mult = {
            let mut m = 0;
            while p.coeff(0).is_zero() && !p.is_zero() {
                p = p.exact_div(&Poly::x()).unwrap();
                m += 1;
            }
            m
        };
        if zero_mult > 0 {
            roots.push((Rat::zero(), zero_mult));
        }
        if p.degree().map_or(true, |d| d == 0) {
            return (roots, p);
        }
        let (_, prim) = p.primitive();
        let a0 = prim.coeff(0).numer().clone().abs();
        let an = prim.lc().unwrap().numer().clone().abs();
        let (num_divs, num_complete) = divisors(&a0);
        let (den_divs, den_complete) = divisors(&an);
        let mut candidates: Vec<Rat> = Vec::new();
        for nn in &num_divs {
            for dd in &den_divs {
                let c = Rat::new(nn.clone(), dd.clone());
                candidates.push(c.clone());
                candidates.push(-c);
            }
        }
        candidates.sort();
        candidates.dedup();
        for c in candidates {
            let m = p.root_multiplicity(&c);
            if m > 0 {
                roots.push((c.clone(), m));
                let lin = Poly::new(vec![-c, Rat::one()]).pow(m as u32);
                p = p.exact_div(&lin).unwrap();
            }
        }
        // Incomplete divisor enumeration can hide roots; callers see the
        // leftover factor either way.
        let _ = (num_complete, den_complete);
        roots.sort_by(|a, b| a.0.cmp(&b.0));
        (roots, p)
    }
}

/// Divisors of |n| by trial division; the bool reports completeness (false
/// when a large cofactor was left unfactored and only partially covered).
fn divisors(n: &BigInt) -> (Vec<BigInt>, bool) {
    if n.is_zero() {
        // Convention: every integer divides 0; callers never hit this with
        // a primitive polynomial (trailing coefficient nonzero).
        return (vec![BigInt::one()], true);
    }
    let mut m = n.clone().abs();
    let mut primes: Vec<(BigInt, u32)> = Vec::new();
    let mut d = BigInt::from(2u32);
    let limit = BigInt::from(1_000_000u64);
    while &d * &d <= m && d <= limit {
        let mut e = 0;
        while (&m % &d).is_zero() {
            m /= &d;
            e += 1;
        }
        if e > 0 {
            primes.push((d.clone(), e));
        }
        d += 1u32;
    }
    let mut complete = true;
    if !m.is_one() {
        // Leftover cofactor: treat as prime (true unless it is a product
        // of two primes both above the trial limit).
        if &m > &(&limit * &limit) {
            complete = false;
        }
        primes.push((m, 1));
    }
    let mut divs = vec![BigInt::one()];
    for (p, e) in primes {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for d0 in &divs {
            let mut pk = BigInt::one();
            for _ in 0..=e {
                next.push(d0 * &pk);
                pk *= &p;
            }
        }
        divs = next;
    }
    divs.sort();
    divs.dedup();
    (divs, complete)
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.0.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*x")?,
                _ => write!(f, "({c})*x^{k}")?,
            }
        }
        Ok(())
    }
}
