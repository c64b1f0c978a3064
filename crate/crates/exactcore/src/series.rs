//! Truncated power series with rational exponents.
//!
//! A series lives on a ramified ladder: with ramification `r`, exponents are
//! integers over `r` (so `t^(1/2)` has `r = 2`). The representation is
//!
//! * `base_exponent` — exponent of the first stored slot, in units of 1/r,
//! * `coefficients[k]` — coefficient of `x^((base_exponent+k)/r)`,
//! * `valid_order` — exponents strictly below `valid_order/r` are correct;
//!   `None` means the series is exact (a Laurent polynomial: every
//!   unstored coefficient is zero).
//!
//! Arithmetic propagates `valid_order` pessimistically:
//!
//! * sum: min of the two bounds,
//! * product: `min(va + lead_b, vb + lead_a)` (the unknown tail of one
//!   factor meets the leading term of the other),
//! * reciprocal: leading exponent `e` costs `2e` (the bound is relative to
//!   the new leading exponent `-e`),
//! * derivative: one whole power.
//!
//! Normalization reduces the ramification to the smallest ladder that
//! carries the support, trims zero fringes, and canonicalizes the zero
//! series, so `PartialEq` is semantic equality.

use crate::rational::{rat_i, Rat};
use crate::{Error, Result};
use num::integer::Integer;
use num::traits::{One, Zero};
use std::fmt;

/// Series/operator variables. `X` is the local variable introduced by a
/// shift to an ordinary point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    T,
    S,
    X,
}

impl Var {
    pub fn name(self) -> &'static str {
        match self {
            Var::T => "t",
            Var::S => "s",
            Var::X => "x",
        }
    }

    pub fn parse(s: &str) -> Result<Var> {
        match s {
            "t" => Ok(Var::T),
            "s" => Ok(Var::S),
            "x" => Ok(Var::X),
            other => Err(Error::Parse(format!("unknown variable {other:?}"))),
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Exponent substitutions supported by [`TruncatedSeries::change_variable`].
#[derive(Debug, Clone, PartialEq)]
pub enum VarMap {
    /// Substitute `old = new^k`: every exponent is multiplied by `k`.
    Power { new_var: Var, k: u32 },
    /// `x -> 1/x`. Only exact series qualify: a truncated tail would land
    /// below every stored exponent.
    Invert,
    /// `old = offset + new`: re-expansion around a rational point. Only
    /// exact series with nonnegative integer exponents qualify.
    Shift { new_var: Var, offset: Rat },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    variable: Var,
    ramification: u32,
    base_exponent: i64,
    coefficients: Vec<Rat>,
    valid_order: Option<i64>,
}

fn opt_add(a: Option<i64>, b: i64) -> Option<i64> {
    a.map(|v| v + b)
}

fn opt_min(a: Option<i64>, b: Option<i64>) -> Option<i64> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (Some(x), None) | (None, Some(x)) => Some(x),
        (None, None) => None,
    }
}

impl TruncatedSeries {
    /// Raw constructor; normalizes (fringe trimming, ramification
    /// reduction, canonical zero).
    pub fn new(
        variable: Var,
        ramification: u32,
        base_exponent: i64,
        coefficients: Vec<Rat>,
        valid_order: Option<i64>,
    ) -> Self {
        assert!(ramification >= 1, "ramification must be positive");
        let mut s = TruncatedSeries {
            variable,
            ramification,
            base_exponent,
            coefficients,
            valid_order,
        };
        s.normalize();
        s
    }

    /// The zero series known to the given integer order.
    pub fn zero_truncated(variable: Var, valid: i64) -> Self {
        TruncatedSeries::new(variable, 1, 0, vec![], Some(valid))
    }

    /// The exact zero polynomial.
    pub fn zero_exact(variable: Var) -> Self {
        TruncatedSeries::new(variable, 1, 0, vec![], None)
    }

    /// An exact constant.
    pub fn constant(variable: Var, c: Rat) -> Self {
        TruncatedSeries::new(variable, 1, 0, vec![c], None)
    }

    pub fn one(variable: Var) -> Self {
        Self::constant(variable, Rat::one())
    }

    /// Exact monomial `c * x^(num/den)`.
    pub fn monomial(variable: Var, c: Rat, num: i64, den: u32) -> Self {
        assert!(den >= 1);
        TruncatedSeries::new(variable, den, num, vec![c], None)
    }

    /// The identity series `x`.
    pub fn identity(variable: Var) -> Self {
        Self::monomial(variable, Rat::one(), 1, 1)
    }

    /// Exact polynomial with integer exponents `base, base+1, ...`.
    pub fn from_int_coeffs(variable: Var, base: i64, coeffs: Vec<Rat>) -> Self {
        TruncatedSeries::new(variable, 1, base, coeffs, None)
    }

    /// Truncated series with integer exponents.
    pub fn truncated_from(variable: Var, base: i64, coeffs: Vec<Rat>, valid: i64) -> Self {
        TruncatedSeries::new(variable, 1, base, coeffs, Some(valid))
    }

    pub fn variable(&self) -> Var {
        self.variable
    }

    pub fn ramification(&self) -> u32 {
        self.ramification
    }

    /// Exponent of the first stored slot, in 1/ramification units.
    pub fn base_units(&self) -> i64 {
        self.base_exponent
    }

    pub fn coefficients(&self) -> &[Rat] {
        &self.coefficients
    }

    /// Validity bound in 1/ramification units; `None` = exact.
    pub fn valid_units(&self) -> Option<i64> {
        self.valid_order
    }

    /// Validity bound as an exponent.
    pub fn valid_exponent(&self) -> Option<Rat> {
        self.valid_order
            .map(|v| Rat::new(v.into(), i64::from(self.ramification).into()))
    }

    pub fn is_exact(&self) -> bool {
        self.valid_order.is_none()
    }

    /// True when no nonzero coefficient is stored (zero to the validity
    /// bound, or literally zero for exact series).
    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    /// Leading exponent and coefficient, if any term is stored.
    pub fn leading(&self) -> Option<(Rat, &Rat)> {
        self.coefficients.first().map(|c| {
            (
                Rat::new(self.base_exponent.into(), i64::from(self.ramification).into()),
                c,
            )
        })
    }

    /// Coefficient of `x^(num/den)`. `None` when the slot is at or beyond
    /// the validity bound; zero for known-absent slots.
    pub fn coeff(&self, num: i64, den: u32) -> Option<Rat> {
        assert!(den >= 1);
        let r = i64::from(self.ramification);
        let d = i64::from(den);
        // Exponent num/den in 1/r units, when representable on the ladder.
        let units = if (num * r) % d == 0 {
            Some(num * r / d)
        } else {
            None
        };
        match units {
            Some(u) => {
                if let Some(v) = self.valid_order {
                    if u >= v {
                        return None;
                    }
                }
                let idx = u - self.base_exponent;
                if idx < 0 || idx as usize >= self.coefficients.len() {
                    Some(Rat::zero())
                } else {
                    Some(self.coefficients[idx as usize].clone())
                }
            }
            None => {
                // Off-ladder exponents are known zero below the bound.
                if let Some(v) = self.valid_order {
                    let vr = Rat::new(v.into(), r.into());
                    let e = Rat::new(num.into(), d.into());
                    if e >= vr {
                        return None;
                    }
                }
                Some(Rat::zero())
            }
        }
    }

    /// Integer-exponent convenience for `coeff`.
    pub fn coeff_int(&self, n: i64) -> Option<Rat> {
        self.coeff(n, 1)
    }

    fn normalize(&mut self) {
        // Clip slots at or beyond the validity bound.
        if let Some(v) = self.valid_order {
            let end = v - self.base_exponent;
            if end <= 0 {
                self.coefficients.clear();
            } else if (end as usize) < self.coefficients.len() {
                self.coefficients.truncate(end as usize);
            }
        }
        // Trim zero fringes.
        let lead = self.coefficients.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            self.coefficients.drain(..lead);
            self.base_exponent += lead as i64;
        }
        while self.coefficients.last().map_or(false, |c| c.is_zero()) {
            self.coefficients.pop();
        }
        if self.coefficients.is_empty() {
            // Canonical zero: coarsest ladder that still carries the bound.
            self.base_exponent = 0;
            let r = i64::from(self.ramification);
            match self.valid_order {
                Some(v) => {
                    let g = r.gcd(&v);
                    self.valid_order = Some(v / g);
                    self.ramification = (r / g) as u32;
                }
                None => self.ramification = 1,
            }
            return;
        }
        // Reduce the ramification to the coarsest ladder carrying every
        // stored slot and the validity bound (a coarser one would claim
        // zero coefficients in slots the bound leaves unknown).
        let r = i64::from(self.ramification);
        let mut g = r.gcd(&self.base_exponent);
        if let Some(v) = self.valid_order {
            g = g.gcd(&v);
        }
        for (k, c) in self.coefficients.iter().enumerate() {
            if !c.is_zero() {
                g = g.gcd(&(self.base_exponent + k as i64));
            }
            if g == 1 {
                break;
            }
        }
        if g > 1 {
            let stride = g as usize;
            let mut packed = Vec::with_capacity(self.coefficients.len() / stride + 1);
            for (k, c) in self.coefficients.iter().enumerate() {
                if (k as i64) % g == 0 {
                    packed.push(c.clone());
                } else {
                    debug_assert!(c.is_zero());
                }
            }
            self.coefficients = packed;
            self.base_exponent /= g;
            self.ramification = (r / g) as u32;
            self.valid_order = self.valid_order.map(|v| v / g);
        }
    }

    /// Rewrites onto a finer ladder whose ramification is a multiple of the
    /// current one. Internal: callers pair it with `normalize`.
    fn promoted(&self, ram: u32) -> TruncatedSeries {
        assert!(ram % self.ramification == 0);
        let f = i64::from(ram / self.ramification);
        if f == 1 {
            return self.clone();
        }
        let mut coeffs = Vec::with_capacity(self.coefficients.len() * f as usize);
        for c in &self.coefficients {
            coeffs.push(c.clone());
            for _ in 1..f {
                coeffs.push(Rat::zero());
            }
        }
        TruncatedSeries {
            variable: self.variable,
            ramification: ram,
            base_exponent: self.base_exponent * f,
            coefficients: coeffs,
            valid_order: self.valid_order.map(|v| v * f),
        }
    }

    fn check_var(&self, other: &TruncatedSeries) -> Result<()> {
        if self.variable != other.variable {
            Err(Error::VariableMismatch(self.variable, other.variable))
        } else {
            Ok(())
        }
    }

    /// Leading exponent in 1/r units for validity propagation: the bound
    /// itself for a stored-zero series, `None` (infinity) for exact zero.
    fn effective_lead(&self) -> Option<i64> {
        if self.coefficients.is_empty() {
            self.valid_order
        } else {
            Some(self.base_exponent)
        }
    }

    pub fn add(&self, other: &TruncatedSeries) -> Result<TruncatedSeries> {
        self.check_var(other)?;
        let ram = self.ramification.lcm(&other.ramification);
        let a = self.promoted(ram);
        let b = other.promoted(ram);
        let valid = opt_min(a.valid_order, b.valid_order);
        if a.coefficients.is_empty() && b.coefficients.is_empty() {
            return Ok(TruncatedSeries::new(self.variable, ram, 0, vec![], valid));
        }
        let base = match (a.coefficients.is_empty(), b.coefficients.is_empty()) {
            (true, false) => b.base_exponent,
            (false, true) => a.base_exponent,
            _ => a.base_exponent.min(b.base_exponent),
        };
        let end_a = a.base_exponent + a.coefficients.len() as i64;
        let end_b = b.base_exponent + b.coefficients.len() as i64;
        let mut end = end_a.max(end_b);
        if let Some(v) = valid {
            end = end.min(v);
        }
        let len = (end - base).max(0) as usize;
        let mut coeffs = vec![Rat::zero(); len];
        for (src, sbase) in [(&a, a.base_exponent), (&b, b.base_exponent)] {
            for (k, c) in src.coefficients.iter().enumerate() {
                let pos = sbase + k as i64 - base;
                if pos >= 0 && (pos as usize) < len {
                    coeffs[pos as usize] += c;
                }
            }
        }
        Ok(TruncatedSeries::new(self.variable, ram, base, coeffs, valid))
    }

    pub fn sub(&self, other: &TruncatedSeries) -> Result<TruncatedSeries> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> TruncatedSeries {
        let mut out = self.clone();
        for c in &mut out.coefficients {
            *c = -c.clone();
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> TruncatedSeries {
        if c.is_zero() {
            // Exactly zero regardless of truncation.
            return TruncatedSeries::zero_exact(self.variable);
        }
        let mut out = self.clone();
        for x in &mut out.coefficients {
            *x *= c;
        }
        out
    }

    pub fn mul(&self, other: &TruncatedSeries) -> Result<TruncatedSeries> {
        self.check_var(other)?;
        if (self.is_exact() && self.is_zero()) || (other.is_exact() && other.is_zero()) {
            return Ok(TruncatedSeries::zero_exact(self.variable));
        }
        let ram = self.ramification.lcm(&other.ramification);
        let a = self.promoted(ram);
        let b = other.promoted(ram);
        let valid = opt_min(
            match b.effective_lead() {
                Some(eb) => opt_add(a.valid_order, eb),
                None => None,
            },
            match a.effective_lead() {
                Some(ea) => opt_add(b.valid_order, ea),
                None => None,
            },
        );
        if a.coefficients.is_empty() || b.coefficients.is_empty() {
            return Ok(TruncatedSeries::new(self.variable, ram, 0, vec![], valid));
        }
        let base = a.base_exponent + b.base_exponent;
        let full = a.coefficients.len() + b.coefficients.len() - 1;
        let len = match valid {
            Some(v) => ((v - base).max(0) as usize).min(full),
            None => full,
        };
        let mut coeffs = vec![Rat::zero(); len];
        for (i, ca) in a.coefficients.iter().enumerate() {
            if ca.is_zero() || i >= len {
                continue;
            }
            let jmax = (len - i).min(b.coefficients.len());
            for (j, cb) in b.coefficients.iter().enumerate().take(jmax) {
                if !cb.is_zero() {
                    coeffs[i + j] += ca * cb;
                }
            }
        }
        Ok(TruncatedSeries::new(self.variable, ram, base, coeffs, valid))
    }

    pub fn pow(&self, n: u32) -> Result<TruncatedSeries> {
        let mut acc = TruncatedSeries::one(self.variable);
        let mut sq = self.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&sq)?;
            }
            e >>= 1;
            if e > 0 {
                sq = sq.mul(&sq)?;
            }
        }
        Ok(acc)
    }

    /// Multiplicative inverse as a series. The leading exponent `e` flips
    /// sign and the validity bound drops by `2e`. Exact inputs must be
    /// monomials (anything else has an infinite reciprocal series:
    /// truncate first).
    pub fn recip(&self) -> Result<TruncatedSeries> {
        if self.coefficients.is_empty() {
            return Err(Error::NotInvertible(
                "zero series (to its validity bound)".into(),
            ));
        }
        let lead = &self.coefficients[0];
        if self.is_exact() {
            if self.coefficients.len() == 1 {
                return Ok(TruncatedSeries::new(
                    self.variable,
                    self.ramification,
                    -self.base_exponent,
                    vec![lead.recip()],
                    None,
                ));
            }
            return Err(Error::NotInvertible(
                "exact non-monomial: truncate before inverting".into(),
            ));
        }
        let v = self.valid_order.unwrap();
        let m = (v - self.base_exponent) as usize; // relative precision
        let inv0 = lead.recip();
        let mut out = vec![Rat::zero(); m];
        out[0] = inv0.clone();
        for k in 1..m {
            let mut s = Rat::zero();
            let jmax = k.min(self.coefficients.len() - 1);
            for j in 1..=jmax {
                if !self.coefficients[j].is_zero() {
                    s += &self.coefficients[j] * &out[k - j];
                }
            }
            out[k] = -(&inv0 * s);
        }
        Ok(TruncatedSeries::new(
            self.variable,
            self.ramification,
            -self.base_exponent,
            out,
            Some(v - 2 * self.base_exponent),
        ))
    }

    pub fn div(&self, other: &TruncatedSeries) -> Result<TruncatedSeries> {
        self.mul(&other.recip()?)
    }

    /// d/dx. Costs one whole power of validity.
    pub fn derivative(&self) -> TruncatedSeries {
        let r = i64::from(self.ramification);
        let coeffs = self
            .coefficients
            .iter()
            .enumerate()
            .map(|(k, c)| c * Rat::new((self.base_exponent + k as i64).into(), r.into()))
            .collect();
        TruncatedSeries::new(
            self.variable,
            self.ramification,
            self.base_exponent - r,
            coeffs,
            self.valid_order.map(|v| v - r),
        )
    }

    /// Restricts the validity bound to the exponent `num/den` (no-op if
    /// already tighter).
    pub fn truncate_exponent(&self, num: i64, den: u32) -> TruncatedSeries {
        assert!(den >= 1);
        let ram = self.ramification.lcm(&den);
        let p = self.promoted(ram);
        let units = num * i64::from(ram / den);
        let valid = Some(match p.valid_order {
            Some(v) => v.min(units),
            None => units,
        });
        TruncatedSeries::new(p.variable, ram, p.base_exponent, p.coefficients, valid)
    }

    /// Integer-order convenience for `truncate_exponent`.
    pub fn truncate_order(&self, order: i64) -> TruncatedSeries {
        self.truncate_exponent(order, 1)
    }

    /// Multiplies by the exact monomial `x^(num/den)`.
    pub fn shift_exponent(&self, num: i64, den: u32) -> TruncatedSeries {
        let m = TruncatedSeries::monomial(self.variable, Rat::one(), num, den);
        self.mul(&m).expect("same variable")
    }

    /// Exponent substitutions; see [`VarMap`].
    pub fn change_variable(&self, map: &VarMap) -> Result<TruncatedSeries> {
        match map {
            VarMap::Power { new_var, k } => {
                if *k == 0 {
                    return Err(Error::Unsupported("power substitution with k = 0".into()));
                }
                let f = i64::from(*k);
                let mut coeffs =
                    Vec::with_capacity(self.coefficients.len().saturating_mul(*k as usize));
                for (i, c) in self.coefficients.iter().enumerate() {
                    if i > 0 {
                        for _ in 1..f {
                            coeffs.push(Rat::zero());
                        }
                    }
                    coeffs.push(c.clone());
                }
                Ok(TruncatedSeries::new(
                    *new_var,
                    self.ramification,
                    self.base_exponent * f,
                    coeffs,
                    self.valid_order.map(|v| v * f),
                ))
            }
            VarMap::Invert => {
                if !self.is_exact() {
                    return Err(Error::Unsupported(
                        "x -> 1/x on a truncated series: the unknown tail becomes \
                         an infinite stack of negative exponents"
                            .into(),
                    ));
                }
                let mut coeffs: Vec<Rat> = self.coefficients.iter().rev().cloned().collect();
                let top = self.base_exponent + self.coefficients.len() as i64 - 1;
                if coeffs.is_empty() {
                    coeffs = vec![];
                }
                Ok(TruncatedSeries::new(
                    self.variable,
                    self.ramification,
                    -top,
                    coeffs,
                    None,
                ))
            }
            VarMap::Shift { new_var, offset } => {
                if !self.is_exact() {
                    return Err(Error::Unsupported(
                        "shift of a truncated series: unknown terms feed every output order"
                            .into(),
                    ));
                }
                if self.ramification != 1 {
                    return Err(Error::Unsupported(
                        "shift of a ramified series is not a power series".into(),
                    ));
                }
                if self.base_exponent < 0 {
                    return Err(Error::Unsupported(
                        "shift of a Laurent polynomial with poles".into(),
                    ));
                }
                // Horner in (offset + x), exactly.
                let mut acc = TruncatedSeries::zero_exact(*new_var);
                let lin = TruncatedSeries::from_int_coeffs(
                    *new_var,
                    0,
                    vec![offset.clone(), Rat::one()],
                );
                let top = self.base_exponent + self.coefficients.len() as i64;
                for n in (0..top).rev() {
                    acc = acc.mul(&lin)?;
                    let idx = n - self.base_exponent;
                    if idx >= 0 {
                        if let Some(c) = self.coefficients.get(idx as usize) {
                            acc = acc.add(&TruncatedSeries::constant(*new_var, c.clone()))?;
                        }
                    }
                }
                Ok(acc)
            }
        }
    }

    /// Substitutes the value `v` into an exact polynomial series.
    pub fn eval_exact(&self, v: &Rat) -> Result<Rat> {
        if !self.is_exact() || self.ramification != 1 {
            return Err(Error::Unsupported(
                "evaluation needs an exact integer-exponent series".into(),
            ));
        }
        if self.base_exponent < 0 && v.is_zero() {
            return Err(Error::NotInvertible("pole at the evaluation point".into()));
        }
        let mut acc = Rat::zero();
        for c in self.coefficients.iter().rev() {
            acc = acc * v + c;
        }
        if self.base_exponent != 0 {
            let mut p = Rat::one();
            let e = self.base_exponent.unsigned_abs();
            for _ in 0..e {
                p *= v;
            }
            if self.base_exponent > 0 {
                acc *= p;
            } else {
                acc /= p;
            }
        }
        Ok(acc)
    }

    /// All stored terms as (exponent, coefficient) pairs, increasing.
    pub fn terms(&self) -> impl Iterator<Item = (Rat, &Rat)> + '_ {
        let r = i64::from(self.ramification);
        self.coefficients.iter().enumerate().filter_map(move |(k, c)| {
            if c.is_zero() {
                None
            } else {
                Some((Rat::new((self.base_exponent + k as i64).into(), r.into()), c))
            }
        })
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in self.terms() {
            if first {
                first = false;
            } else {
                f.write_str(" + ")?;
            }
            if e.is_zero() {
                write!(f, "{c}")?;
            } else if e.is_one() {
                write!(f, "({c})*{}", self.variable)?;
            } else {
                write!(f, "({c})*{}^({e})", self.variable)?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        match self.valid_exponent() {
            Some(v) => write!(f, " + O({}^({v}))", self.variable),
            None => Ok(()),
        }
    }
}

/// Binomial series `(1+x)^a` through `x^(order-1)`.
pub fn binomial_series(a: &Rat, variable: Var, order: i64) -> TruncatedSeries {
    let n = order.max(0) as usize;
    let mut coeffs = Vec::with_capacity(n);
    let mut c = Rat::one();
    for k in 0..n {
        coeffs.push(c.clone());
        let kk = rat_i(k as i64);
        c = c * (a - &kk) / (kk + Rat::one());
    }
    TruncatedSeries::new(variable, 1, 0, coeffs, Some(order))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn ts(base: i64, coeffs: &[(i64, i64)], valid: i64) -> TruncatedSeries {
        TruncatedSeries::truncated_from(
            Var::T,
            base,
            coeffs.iter().map(|&(n, d)| rat(n, d)).collect(),
            valid,
        )
    }

    #[test]
    fn normalization_reduces_ramification() {
        // t^(1/2)*(1 + t) written on the 1/2 ladder with gaps.
        let s = TruncatedSeries::new(
            Var::T,
            2,
            1,
            vec![rat(1, 1), rat(0, 1), rat(1, 1)],
            Some(7),
        );
        assert_eq!(s.ramification(), 2);
        // All-even support drops to ramification 1.
        let e = TruncatedSeries::new(Var::T, 2, 2, vec![rat(5, 1), rat(0, 1), rat(7, 1)], None);
        assert_eq!(e.ramification(), 1);
        assert_eq!(e.base_units(), 1);
        assert_eq!(e.coeff_int(2), Some(rat(7, 1)));
    }

    #[test]
    fn add_aligns_ladders_and_bounds() {
        let a = ts(0, &[(1, 1), (1, 2)], 3); // 1 + t/2 + O(t^3)
        let b = TruncatedSeries::new(Var::T, 2, 1, vec![rat(1, 1)], Some(5)); // t^(1/2) + O(t^(5/2))
        let c = a.add(&b).unwrap();
        assert_eq!(c.ramification(), 2);
        assert_eq!(c.coeff(1, 2), Some(rat(1, 1)));
        assert_eq!(c.coeff_int(1), Some(rat(1, 2)));
        assert_eq!(c.valid_exponent(), Some(rat(5, 2)));
        // Slot at/beyond the bound is unknown.
        assert_eq!(c.coeff_int(3), None);
    }

    #[test]
    fn mul_propagates_validity_by_leading_exponents() {
        // a = t^2 + O(t^5): exact? no: valid 5. b = t^3 + O(t^4).
        let a = ts(2, &[(1, 1)], 5);
        let b = ts(3, &[(1, 1)], 4);
        let p = a.mul(&b).unwrap();
        // valid = min(5+3, 4+2) = 6; the t^5 slot survives.
        assert_eq!(p.valid_units(), Some(6));
        assert_eq!(p.coeff_int(5), Some(rat(1, 1)));
        let z = TruncatedSeries::zero_truncated(Var::T, 3);
        let pz = a.mul(&z).unwrap();
        // Zero to order 3 times leading t^2: zero to order 5.
        assert_eq!(pz.valid_units(), Some(5));
        assert!(pz.is_zero());
    }

    #[test]
    fn exact_polynomials_multiply_exactly() {
        let p = TruncatedSeries::from_int_coeffs(Var::T, 0, vec![rat(1, 1), rat(1, 1)]);
        let q = p.mul(&p).unwrap();
        assert!(q.is_exact());
        assert_eq!(q.coeff_int(0), Some(rat(1, 1)));
        assert_eq!(q.coeff_int(1), Some(rat(2, 1)));
        assert_eq!(q.coeff_int(2), Some(rat(1, 1)));
    }

    #[test]
    fn recip_of_geometric() {
        // 1/(1 - t) = 1 + t + t^2 + ...
        let a = ts(0, &[(1, 1), (-1, 1)], 6);
        let r = a.recip().unwrap();
        for k in 0..6 {
            assert_eq!(r.coeff_int(k), Some(rat(1, 1)));
        }
        assert_eq!(r.valid_units(), Some(6));
        // Reciprocal of an offset series: 1/(2 t^(1/2) (1 + t)) leading.
        let b = TruncatedSeries::new(Var::T, 2, 1, vec![rat(2, 1), rat(0, 1), rat(2, 1)], Some(9));
        let rb = b.recip().unwrap();
        assert_eq!(rb.coeff(-1, 2), Some(rat(1, 2)));
        assert_eq!(rb.coeff(1, 2), Some(rat(-1, 2)));
        // valid drops by twice the leading exponent: 9 - 2 = 7 units of 1/2.
        assert_eq!(rb.valid_units(), Some(7));
        // Monomial exact reciprocal stays exact.
        let m = TruncatedSeries::monomial(Var::T, rat(2, 1), 1, 2);
        let rm = m.recip().unwrap();
        assert!(rm.is_exact());
        assert_eq!(rm.coeff(-1, 2), Some(rat(1, 2)));
        // Exact non-monomial refuses.
        let p = TruncatedSeries::from_int_coeffs(Var::T, 0, vec![rat(1, 1), rat(1, 1)]);
        assert!(p.recip().is_err());
    }

    #[test]
    fn derivative_on_ramified_ladder() {
        // d/dt [ t^(1/2) ] = (1/2) t^(-1/2)
        let s = TruncatedSeries::monomial(Var::T, rat(1, 1), 1, 2);
        let d = s.derivative();
        assert_eq!(d.coeff(-1, 2), Some(rat(1, 2)));
        // Validity drops a whole power.
        let a = ts(0, &[(1, 1), (1, 1)], 4);
        assert_eq!(a.derivative().valid_units(), Some(3));
    }

    #[test]
    fn change_variable_power() {
        // t^(1/2) + t -> s^2 + s^4 under t = s^4.
        let s = TruncatedSeries::new(Var::T, 2, 1, vec![rat(1, 1), rat(1, 1)], Some(5));
        let out = s
            .change_variable(&VarMap::Power { new_var: Var::S, k: 4 })
            .unwrap();
        assert_eq!(out.variable(), Var::S);
        assert_eq!(out.ramification(), 1);
        assert_eq!(out.coeff_int(2), Some(rat(1, 1)));
        assert_eq!(out.coeff_int(4), Some(rat(1, 1)));
        assert_eq!(out.valid_units(), Some(10));
    }

    #[test]
    fn change_variable_invert_and_shift() {
        let p = TruncatedSeries::from_int_coeffs(Var::T, 0, vec![rat(1, 1), rat(1, 1)]);
        let inv = p.change_variable(&VarMap::Invert).unwrap();
        assert_eq!(inv.coeff_int(-1), Some(rat(1, 1)));
        assert_eq!(inv.coeff_int(0), Some(rat(1, 1)));
        let sh = p
            .change_variable(&VarMap::Shift { new_var: Var::X, offset: rat(1, 2) })
            .unwrap();
        assert_eq!(sh.coeff_int(0), Some(rat(3, 2)));
        assert_eq!(sh.coeff_int(1), Some(rat(1, 1)));
        // Truncated input refuses both maps.
        let tr = ts(0, &[(1, 1)], 3);
        assert!(tr.change_variable(&VarMap::Invert).is_err());
        assert!(tr
            .change_variable(&VarMap::Shift { new_var: Var::X, offset: rat(1, 2) })
            .is_err());
    }

    #[test]
    fn shift_cubic_exactly() {
        // (t0 + x)^3 expands with binomial coefficients.
        let p = TruncatedSeries::monomial(Var::T, rat(1, 1), 3, 1);
        let sh = p
            .change_variable(&VarMap::Shift { new_var: Var::X, offset: rat(2, 1) })
            .unwrap();
        assert_eq!(sh.coeff_int(0), Some(rat(8, 1)));
        assert_eq!(sh.coeff_int(1), Some(rat(12, 1)));
        assert_eq!(sh.coeff_int(2), Some(rat(6, 1)));
        assert_eq!(sh.coeff_int(3), Some(rat(1, 1)));
    }

    #[test]
    fn variable_mismatch_is_reported() {
        let a = TruncatedSeries::one(Var::T);
        let b = TruncatedSeries::one(Var::S);
        assert!(matches!(a.add(&b), Err(Error::VariableMismatch(_, _))));
        assert!(matches!(a.mul(&b), Err(Error::VariableMismatch(_, _))));
    }

    #[test]
    fn binomial_series_quarter_power() {
        // (1+x)^(1/4) = 1 + x/4 - 3x^2/32 + 7x^3/128 - ...
        let b = binomial_series(&rat(1, 4), Var::T, 4);
        assert_eq!(b.coeff_int(0), Some(rat(1, 1)));
        assert_eq!(b.coeff_int(1), Some(rat(1, 4)));
        assert_eq!(b.coeff_int(2), Some(rat(-3, 32)));
        assert_eq!(b.coeff_int(3), Some(rat(7, 128)));
    }

    #[test]
    fn eval_exact_polynomial() {
        let p = TruncatedSeries::from_int_coeffs(Var::T, 1, vec![rat(2, 1), rat(3, 1)]);
        // 2t + 3t^2 at t = 1/2 -> 1 + 3/4.
        assert_eq!(p.eval_exact(&rat(1, 2)).unwrap(), rat(7, 4));
    }
}
