//! Operator transport along variable changes and gauge factors.
//!
//! Each substitution rewrites `D` in the old variable as a first-order
//! operator in the new one and pushes the coefficients through; the
//! expansion is plain operator composition, so correctness reduces to the
//! product rule already tested on [`DiffOperator`].

use crate::op::DiffOperator;
use exactcore::poly::Poly;
use exactcore::ratfun::RationalFunction;
use exactcore::rational::{rat_i, Rat};
use exactcore::series::Var;
use exactcore::{Error, Result};
use num::traits::{One, Zero};

/// Rewrites the operator through the composed rule `D_old = m ∘ ...`,
/// with `images[i]` the image of `c_i(old)` in the new variable.
fn push_through(
    new_var: Var,
    images: Vec<RationalFunction>,
    d_image: DiffOperator,
) -> Result<DiffOperator> {
    let mut acc = DiffOperator::zero(new_var);
    let mut power = DiffOperator::identity(new_var);
    for (i, c) in images.into_iter().enumerate() {
        if i > 0 {
            power = d_image.compose(&power)?;
        }
        if !c.is_zero() {
            acc = acc.add(&power.scale_function(&c))?;
        }
    }
    Ok(acc)
}

/// Substitutes `old = new^k`, e.g. rewriting an operator in t as one in s
/// with t = s^4. `D_old` becomes `(1/(k s^(k-1))) D_new`.
pub fn subst_power(op: &DiffOperator, k: u32, new_var: Var) -> Result<DiffOperator> {
    if k == 0 {
        return Err(Error::Unsupported("power substitution needs k >= 1".into()));
    }
    let images: Vec<RationalFunction> = op
        .coeffs()
        .iter()
        .map(|c| c.subst_power(k))
        .collect();
    let mut den = vec![Rat::zero(); k as usize];
    den[k as usize - 1] = rat_i(i64::from(k));
    let d_image = DiffOperator::new(
        new_var,
        vec![
            RationalFunction::zero(),
            RationalFunction::new(Poly::one(), Poly::new(den))?,
        ],
    );
    push_through(new_var, images, d_image)
}

/// Substitutes `old = 1/new`: `D_old` becomes `-u^2 D_new`.
pub fn subst_invert(op: &DiffOperator, new_var: Var) -> Result<DiffOperator> {
    let images: Vec<RationalFunction> = op
        .coeffs()
        .iter()
        .map(RationalFunction::subst_invert)
        .collect();
    let d_image = DiffOperator::new(
        new_var,
        vec![
            RationalFunction::zero(),
            RationalFunction::from_poly(Poly::from_ints(&[0, 0, -1])),
        ],
    );
    push_through(new_var, images, d_image)
}

/// Recenters at a point: `old = a + new`.
pub fn shift_point(op: &DiffOperator, a: &Rat, new_var: Var) -> Result<DiffOperator> {
    let shift = Poly::new(vec![a.clone(), Rat::one()]);
    let images: Vec<RationalFunction> = op
        .coeffs()
        .iter()
        .map(|c| c.subst_poly(&shift))
        .collect();
    push_through(new_var, images, DiffOperator::d(new_var))
}

/// Gauge conjugation `g^{-1} L g` for a factor with logarithmic derivative
/// `dlog = g'/g`: replaces `D` by `D + dlog`. Annihilators of `y` become
/// annihilators of `y/g`.
pub fn conjugate_dlog(op: &DiffOperator, dlog: &RationalFunction) -> Result<DiffOperator> {
    let var = op.variable();
    let images: Vec<RationalFunction> = op.coeffs().to_vec();
    let d_image = DiffOperator::new(
        var,
        vec![dlog.clone(), RationalFunction::one()],
    );
    push_through(var, images, d_image)
}

/// The logarithmic derivative of `x^a (1-x)^b`: `a/x - b/(1-x)`.
pub fn power_prefactor_dlog(a: &Rat, b: &Rat) -> RationalFunction {
    let at = RationalFunction::new(Poly::constant(a.clone()), Poly::from_ints(&[0, 1])).unwrap();
    let bt = RationalFunction::new(Poly::constant(b.clone()), Poly::from_ints(&[1, -1])).unwrap();
    at.sub(&bt)
}
