//! Coefficient fields for local analysis: plain rationals, and quotient
//! rings Q[x]/(f) for analysis at an algebraic point class.
//!
//! The modulus is only required square-free, not irreducible. Arithmetic
//! proceeds as if in a field; inverting a zero divisor surfaces a proper
//! factor of the modulus instead, and the caller splits the analysis and
//! reruns per factor. Any nonzero-vs-zero branch that matters must go
//! through `certify`, which forces that split rather than letting one
//! factor's answer stand in for the others.

use exactcore::poly::Poly;
use exactcore::rational::Rat;
use num::traits::Zero;

/// A proper monic factor of the modulus, discovered mid-computation.
#[derive(Debug, Clone)]
pub struct Split(pub Poly);

pub type FResult<T> = std::result::Result<T, Split>;

pub trait FieldCtx {
    type E: Clone + PartialEq + std::fmt::Debug;

    fn zero(&self) -> Self::E;
    fn one(&self) -> Self::E;
    fn from_rat(&self, r: &Rat) -> Self::E;
    fn add(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn sub(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn mul(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn neg(&self, a: &Self::E) -> Self::E;
    fn is_zero(&self, a: &Self::E) -> bool;
    /// Multiplicative inverse of a nonzero element; `Err` carries a
    /// modulus factor when the element is a zero divisor.
    fn inv(&self, a: &Self::E) -> FResult<Self::E>;
    /// The element as a rational constant, when it is one.
    fn as_rat(&self, a: &Self::E) -> Option<Rat>;

    /// Certifies that a branch on zero-vs-nonzero is uniform over every
    /// factor of the modulus.
    fn certify(&self, a: &Self::E) -> FResult<()> {
        if self.is_zero(a) {
            Ok(())
        } else {
            self.inv(a).map(|_| ())
        }
    }
}

/// Plain rational arithmetic; nothing ever splits.
pub struct RatCtx;

impl FieldCtx for RatCtx {
    type E = Rat;

    fn zero(&self) -> Rat {
        Rat::zero()
    }
    fn one(&self) -> Rat {
        num::traits::One::one()
    }
    fn from_rat(&self, r: &Rat) -> Rat {
        r.clone()
    }
    fn add(&self, a: &Rat, b: &Rat) -> Rat {
        a + b
    }
    fn sub(&self, a: &Rat, b: &Rat) -> Rat {
        a - b
    }
    fn mul(&self, a: &Rat, b: &Rat) -> Rat {
        a * b
    }
    fn neg(&self, a: &Rat) -> Rat {
        -a.clone()
    }
    fn is_zero(&self, a: &Rat) -> bool {
        a.is_zero()
    }
    fn inv(&self, a: &Rat) -> FResult<Rat> {
        assert!(!a.is_zero(), "inverse of zero");
        Ok(a.recip())
    }
    fn as_rat(&self, a: &Rat) -> Option<Rat> {
        Some(a.clone())
    }
}

/// Q[x]/(modulus), elements as reduced polynomials.
pub struct QuotCtx {
    modulus: Poly,
}

impl QuotCtx {
    /// The modulus is monicized; it must be nonconstant (and should be
    /// square-free for the splitting logic to terminate usefully).
    pub fn new(modulus: &Poly) -> Self {
        let lc = modulus.lc().expect("nonzero modulus").clone();
        let inv = lc.recip();
        QuotCtx {
            modulus: modulus.scale(&inv),
        }
    }

    pub fn modulus(&self) -> &Poly {
        &self.modulus
    }

    pub fn reduce(&self, p: &Poly) -> Poly {
        p.divrem(&self.modulus).1
    }
}

/// Extended Euclid on polynomials: returns `(g, u)` with `g` monic,
/// `g = gcd(a, b)` and `u*a = g (mod b)`.
fn half_ext_gcd(a: &Poly, b: &Poly) -> (Poly, Poly) {
    let mut r0 = a.clone();
    let mut r1 = b.clone();
    let mut u0 = Poly::one();
    let mut u1 = Poly::zero();
    while !r1.is_zero() {
        let (q, r) = r0.divrem(&r1);
        let u = u0.sub(&q.mul(&u1));
        r0 = r1;
        r1 = r;
        u0 = u1;
        u1 = u;
    }
    match r0.lc() {
        Some(l) if !l.is_zero() => {
            let inv = l.clone().recip();
            (r0.scale(&inv), u0.scale(&inv))
        }
        _ => (r0, u0),
    }
}

impl FieldCtx for QuotCtx {
    type E = Poly;

    fn zero(&self) -> Poly {
        Poly::zero()
    }
    fn one(&self) -> Poly {
        Poly::one()
    }
    fn from_rat(&self, r: &Rat) -> Poly {
        Poly::constant(r.clone())
    }
    fn add(&self, a: &Poly, b: &Poly) -> Poly {
        a.add(b)
    }
    fn sub(&self, a: &Poly, b: &Poly) -> Poly {
        a.sub(b)
    }
    fn mul(&self, a: &Poly, b: &Poly) -> Poly {
        self.reduce(&a.mul(b))
    }
    fn neg(&self, a: &Poly) -> Poly {
        a.neg()
    }
    fn is_zero(&self, a: &Poly) -> bool {
        a.is_zero()
    }
    fn inv(&self, a: &Poly) -> FResult<Poly> {
        assert!(!a.is_zero(), "inverse of zero");
        let (g, u) = half_ext_gcd(a, &self.modulus);
        match g.degree() {
            Some(0) => Ok(self.reduce(&u)),
            _ => Err(Split(g)),
        }
    }
    fn as_rat(&self, a: &Poly) -> Option<Rat> {
        match a.degree() {
            None => Some(Rat::zero()),
            Some(0) => Some(a.coeff(0)),
            _ => None,
        }
    }
}
