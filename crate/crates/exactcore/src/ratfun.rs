//! Rational functions in one variable, the coefficient field for
//! differential operators.
//!
//! Normal form: numerator and denominator coprime, denominator monic and
//! nonzero, zero represented as 0/1. Equality is therefore structural.

use crate::poly::Poly;
use crate::rational::Rat;
use crate::{Error, Result};
use num::traits::{One, Zero};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Poly,
    den: Poly,
}

impl RationalFunction {
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::NotInvertible("zero denominator".into()));
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return RationalFunction {
                num: Poly::zero(),
                den: Poly::one(),
            };
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.exact_div(&g).unwrap(), den.exact_div(&g).unwrap())
        };
        let lc = den.lc().unwrap().clone();
        if lc.is_one() {
            RationalFunction { num, den }
        } else {
            let inv = lc.recip();
            RationalFunction {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub fn from_poly(p: Poly) -> Self {
        RationalFunction {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn constant(c: Rat) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn zero() -> Self {
        Self::from_poly(Poly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(Poly::one())
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_poly(&self) -> Option<&Poly> {
        self.is_polynomial().then_some(&self.num)
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::reduce(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        RationalFunction {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::reduce(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    pub fn scale(&self, c: &Rat) -> Self {
        RationalFunction {
            num: self.num.scale(c),
            den: if c.is_zero() {
                Poly::one()
            } else {
                self.den.clone()
            },
        }
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::NotInvertible(
                "reciprocal of the zero rational function".into(),
            ));
        }
        Ok(Self::reduce(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.recip()?))
    }

    pub fn derivative(&self) -> Self {
        // (n/d)' = (n'd - nd')/d^2; reduce handles the common factor.
        Self::reduce(
            self.num
                .derivative()
                .mul(&self.den)
                .sub(&self.num.mul(&self.den.derivative())),
            self.den.mul(&self.den),
        )
    }

    pub fn eval(&self, x: &Rat) -> Result<Rat> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(Error::NotInvertible(format!("pole at {x}")));
        }
        Ok(self.num.eval(x) / d)
    }

    /// Pole order at the rational point `a` (0 when regular there).
    pub fn pole_order(&self, a: &Rat) -> usize {
        if self.is_zero() {
            return 0;
        }
        self.den.root_multiplicity(a)
    }

    /// Pole order at x = infinity: deg num - deg den when positive.
    pub fn pole_order_infinity(&self) -> usize {
        match (self.num.degree(), self.den.degree()) {
            (Some(n), Some(d)) if n > d => n - d,
            _ => 0,
        }
    }

    /// Substitutes x -> 1/x, staying rational.
    pub fn subst_invert(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let n = self.num.degree().unwrap();
        let d = self.den.degree().unwrap();
        // num(1/x)/den(1/x) = x^(d-n) rev(num)/rev(den) after clearing.
        let mut num = self.num.reversed();
        let mut den = self.den.reversed();
        if d > n {
            num = num.mul(&Poly::monomial(Rat::one(), d - n));
        } else {
            den = den.mul(&Poly::monomial(Rat::one(), n - d));
        }
        Self::reduce(num, den)
    }

    /// Substitutes x -> x^k.
    pub fn subst_power(&self, k: u32) -> Self {
        Self::reduce(self.num.subst_power(k), self.den.subst_power(k))
    }

    /// Substitutes x -> p(x) for polynomial p.
    pub fn subst_poly(&self, p: &Poly) -> Self {
        let horner = |q: &Poly| -> Poly {
            let mut acc = Poly::zero();
            for c in q.coeffs().iter().rev() {
                acc = acc.mul(p).add(&Poly::constant(c.clone()));
            }
            acc
        };
        Self::reduce(horner(&self.num), horner(&self.den))
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}
