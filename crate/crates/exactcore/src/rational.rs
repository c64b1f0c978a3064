//! Arbitrary-precision rationals and the small number-theoretic helpers
//! (Pochhammer symbols, factorials) used by the series constructors.
//!
//! `Rat` is `num::BigRational`: it keeps numerator and denominator coprime
//! with the sign on the numerator, so the canonical-form invariant and the
//! "p/q" text format come for free.

use num::bigint::BigInt;
use num::traits::{One, Signed};

pub use num::BigRational as Rat;

/// `n/d` as an exact rational. Panics on `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// The integer `n` as a rational.
pub fn rat_i(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Parses "p/q" or "p". Whitespace is not tolerated; the format is the
/// same one `Display` produces, so round-trips are bit-exact.
pub fn parse_rat(s: &str) -> crate::Result<Rat> {
    s.parse::<Rat>()
        .map_err(|e| crate::Error::Parse(format!("bad rational {s:?}: {e}")))
}

/// Pochhammer symbol (a)_k = a (a+1) ... (a+k-1), with (a)_0 = 1.
pub fn pochhammer(a: &Rat, k: u32) -> Rat {
    let mut acc = Rat::one();
    let mut term = a.clone();
    for _ in 0..k {
        acc *= &term;
        term += Rat::one();
    }
    acc
}

/// k! as a rational.
pub fn factorial(k: u32) -> Rat {
    let mut acc = BigInt::one();
    for i in 2..=k {
        acc *= BigInt::from(i);
    }
    Rat::from_integer(acc)
}

/// True when `r` is an integer <= 0 (the Pochhammer termination test).
pub fn is_nonpositive_integer(r: &Rat) -> bool {
    r.is_integer() && !r.is_positive()
}

/// Exact integer value when `r` is an integer that fits in i64.
pub fn as_i64(r: &Rat) -> Option<i64> {
    if !r.is_integer() {
        return None;
    }
    let n = r.numer();
    i64::try_from(n.clone()).ok()
}
