//! Symmetric powers of second-order operators.
//!
//! For monic `D^2 + p D + q` with solution space spanned by `y1, y2`, the
//! n-th symmetric power annihilates every product of n solutions. The
//! module spanned by `w_m = y^(n-m) (y')^m` is closed under d/dx:
//!
//!   w_m' = (n-m) w_{m+1} - m p w_m - m q w_{m-1}
//!
//! so the derivatives of `y^n = w_0` live in an (n+1)-dimensional space
//! over Q(x) and the first linear dependence among them is the minimal
//! annihilator, generically of order n+1.

use crate::op::DiffOperator;
use exactcore::ratfun::RationalFunction;
use exactcore::rational::rat_i;
use exactcore::{Error, Result};

struct Reducer {
    vec: Vec<RationalFunction>,
    combo: Vec<RationalFunction>,
    pivot: usize,
}

/// Incremental Gaussian elimination over Q(x). Feeding vectors one at a
/// time, reports the combination proving the first one that is dependent
/// on its predecessors; the returned combo has last entry 1.
struct DependenceFinder {
    reducers: Vec<Reducer>,
    fed: usize,
}

impl DependenceFinder {
    fn new() -> Self {
        DependenceFinder {
            reducers: vec![],
            fed: 0,
        }
    }

    fn feed(&mut self, col: &[RationalFunction]) -> Result<Option<Vec<RationalFunction>>> {
        let j = self.fed;
        self.fed += 1;
        let mut v = col.to_vec();
        let mut combo = vec![RationalFunction::zero(); j + 1];
        combo[j] = RationalFunction::one();
        for r in &self.reducers {
            let c = v[r.pivot].clone();
            if c.is_zero() {
                continue;
            }
            for (vi, ri) in v.iter_mut().zip(&r.vec) {
                *vi = vi.sub(&ri.mul(&c));
            }
            for (ci, ri) in combo.iter_mut().zip(&r.combo) {
                *ci = ci.sub(&ri.mul(&c));
            }
        }
        match v.iter().position(|e| !e.is_zero()) {
            None => Ok(Some(combo)),
            Some(pivot) => {
                let inv = v[pivot].recip()?;
                self.reducers.push(Reducer {
                    vec: v.iter().map(|e| e.mul(&inv)).collect(),
                    combo: combo.iter().map(|e| e.mul(&inv)).collect(),
                    pivot,
                });
                Ok(None)
            }
        }
    }
}

/// Minimal operator annihilating n-th powers of solutions of a
/// second-order operator. Monic output, order n+1 generically.
pub fn symmetric_power(op: &DiffOperator, n: u32) -> Result<DiffOperator> {
    if op.order() != Some(2) {
        return Err(Error::Unsupported(
            "symmetric power expects a second-order operator".into(),
        ));
    }
    if n == 0 {
        return Ok(DiffOperator::d(op.variable()));
    }
    let lead = op.leading().unwrap();
    let p = op.coeff(1).div(lead)?;
    let q = op.coeff(0).div(lead)?;
    let dim = n as usize + 1;

    let mut finder = DependenceFinder::new();
    // Row of coordinates of (y^n)^(j) in the w-basis.
    let mut row = vec![RationalFunction::zero(); dim];
    row[0] = RationalFunction::one();
    loop {
        if let Some(combo) = finder.feed(&row)? {
            return Ok(DiffOperator::new(op.variable(), combo));
        }
        let mut next = vec![RationalFunction::zero(); dim];
        for (m, slot) in next.iter_mut().enumerate() {
            let mut acc = row[m].derivative();
            if m > 0 {
                acc = acc.add(&row[m - 1].scale(&rat_i((n as usize - m + 1) as i64)));
            }
            if !row[m].is_zero() {
                acc = acc.sub(&row[m].mul(&p).scale(&rat_i(m as i64)));
            }
            if m + 1 < dim && !row[m + 1].is_zero() {
                acc = acc.sub(&row[m + 1].mul(&q).scale(&rat_i((m + 1) as i64)));
            }
            *slot = acc;
        }
        row = next;
    }
}
