//! Right-Euclidean algorithm on operators: greatest common right divisor
//! and least common left multiple.
//!
//! The remainder chain tracks cofactors `r_i = u_i ∘ a + v_i ∘ b`; at the
//! first zero remainder that identity reads `u ∘ a = -(v ∘ b)`, which is
//! the lclm. Intermediate remainders are monicized to curb coefficient
//! growth; scaling a remainder together with its cofactors preserves the
//! identity and the right-ideal chain.

use crate::op::DiffOperator;
use exactcore::{Error, Result};

struct Row {
    r: DiffOperator,
    u: DiffOperator,
    v: DiffOperator,
}

impl Row {
    fn scale_monic(self) -> Result<Row> {
        let lead = self.r.leading().expect("nonzero remainder").clone();
        let inv = lead.recip()?;
        Ok(Row {
            r: self.r.scale_function(&inv),
            u: self.u.scale_function(&inv),
            v: self.v.scale_function(&inv),
        })
    }
}

/// Runs the chain until the remainder vanishes; returns the last nonzero
/// row (the gcrd) and the vanishing row's cofactors (the lclm data).
fn euclid_chain(a: &DiffOperator, b: &DiffOperator) -> Result<(Row, Row)> {
    let var = a.variable();
    let mut prev = Row {
        r: a.clone(),
        u: DiffOperator::identity(var),
        v: DiffOperator::zero(var),
    };
    let mut cur = Row {
        r: b.clone(),
        u: DiffOperator::zero(var),
        v: DiffOperator::identity(var),
    }
    .scale_monic()?;
    loop {
        let (q, rem) = prev.r.right_divrem(&cur.r)?;
        let next = Row {
            r: rem,
            u: prev.u.sub(&q.compose(&cur.u)?)?,
            v: prev.v.sub(&q.compose(&cur.v)?)?,
        };
        if next.r.is_zero() {
            return Ok((cur, next));
        }
        prev = cur;
        cur = next.scale_monic()?;
    }
}

/// Greatest common right divisor, in monic form. `a ∘ x = b ∘ y = g` for
/// suitable left factors; every common right divisor divides `g` on the
/// right.
pub fn gcrd(a: &DiffOperator, b: &DiffOperator) -> Result<DiffOperator> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::Unsupported("gcrd of two zero operators".into()));
    }
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    let (last, _) = euclid_chain(a, b)?;
    Ok(last.r)
}

/// Least common left multiple: the monic operator of minimal order with
/// both `a` and `b` as right factors. Its solution space is the sum of the
/// two solution spaces.
pub fn lclm(a: &DiffOperator, b: &DiffOperator) -> Result<DiffOperator> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::Unsupported("lclm with a zero operator".into()));
    }
    let (_, vanish) = euclid_chain(a, b)?;
    let m = vanish.u.compose(a)?;
    debug_assert_eq!(
        m.canonical_polys(),
        vanish.v.compose(b)?.neg().canonical_polys()
    );
    m.monic()
}

#[cfg(test)]
mod tests {
    use super::*;
    use exactcore::poly::Poly;
    use exactcore::ratfun::RationalFunction;
    use exactcore::rational::Rat;
    use exactcore::series::{TruncatedSeries, Var};
    use num::traits::One;

    fn rf(n: &[i64], d: &[i64]) -> RationalFunction {
        RationalFunction::new(Poly::from_ints(n), Poly::from_ints(d)).unwrap()
    }

    /// x D - c, annihilator of x^c.
    fn euler_minus(c: i64) -> DiffOperator {
        DiffOperator::new(Var::X, vec![rf(&[-c], &[1]), rf(&[0, 1], &[1])])
    }

    #[test]
    fn lclm_of_distinct_powers() {
        // Annihilators of x^2 and x^5; the lclm kills both monomials.
        let a = euler_minus(2);
        let b = euler_minus(5);
        let m = lclm(&a, &b).unwrap();
        assert_eq!(m.order(), Some(2));
        let x2 = TruncatedSeries::monomial(Var::X, Rat::one(), 2, 1);
        let x5 = TruncatedSeries::monomial(Var::X, Rat::one(), 5, 1);
        assert!(m.annihilates(&x2));
        assert!(m.annihilates(&x5));
        // Both inputs divide on the right.
        let (_, ra) = m.right_divrem(&a).unwrap();
        let (_, rb) = m.right_divrem(&b).unwrap();
        assert!(ra.is_zero());
        assert!(rb.is_zero());
    }

    #[test]
    fn lclm_with_common_factor() {
        // a = q ∘ g, b = p ∘ g share the right factor g; lclm order is
        // ord a + ord b - ord g.
        let g = euler_minus(1);
        let q = euler_minus(3);
        let p = DiffOperator::new(Var::X, vec![rf(&[1], &[1]), rf(&[0, 0, 1], &[1])]);
        let a = q.compose(&g).unwrap();
        let b = p.compose(&g).unwrap();
        let m = lclm(&a, &b).unwrap();
        assert_eq!(m.order(), Some(3));
        let cg = gcrd(&a, &b).unwrap();
        assert_eq!(cg.canonical_polys(), g.canonical_polys());
    }

    #[test]
    fn gcrd_of_coprime_is_one() {
        let a = euler_minus(2);
        let b = euler_minus(3);
        let g = gcrd(&a, &b).unwrap();
        assert_eq!(g.order(), Some(0));
        assert_eq!(g, DiffOperator::identity(Var::X));
    }
}
