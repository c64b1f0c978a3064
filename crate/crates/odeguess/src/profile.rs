//! Candidate operator shapes.
//!
//! The structured profile hard-wires the singularity pattern seen in the
//! diagonal correlation annihilators: the coefficient of D^i carries the
//! factor t^i (t-1)^(i-1) for i >= 2 and t(t-1) for i = 1, with short free
//! polynomial cofactors whose degrees taper off. The free profile puts an
//! independent polynomial of one fixed degree on every D^i.

use exactcore::poly::Poly;
use exactcore::rational::Rat;
use exactcore::{Error, Result};
use num::traits::One;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DegreeProfile {
    /// t^i (t-1)^(i-1) cofactors with degree N+1-i for i >= 2 (N = order-1),
    /// t(t-1) with degree N-1 at i = 1, degree N-1 at i = 0.
    Structured,
    /// Degree bound `degree` on every coefficient polynomial.
    Free { degree: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GuessSpec {
    /// Operator order m >= 1.
    pub order: usize,
    pub profile: DegreeProfile,
    /// Extra equations beyond the unknown count.
    pub safety_margin: usize,
}

pub const DEFAULT_SAFETY_MARGIN: usize = 10;

impl GuessSpec {
    pub fn structured(order: usize) -> Self {
        GuessSpec {
            order,
            profile: DegreeProfile::Structured,
            safety_margin: DEFAULT_SAFETY_MARGIN,
        }
    }

    pub fn free(order: usize, degree: usize) -> Self {
        GuessSpec {
            order,
            profile: DegreeProfile::Free { degree },
            safety_margin: DEFAULT_SAFETY_MARGIN,
        }
    }
}

/// One column of the linear system: the operator poly * D^derivative.
#[derive(Clone, Debug)]
pub(crate) struct BasisElement {
    pub derivative: usize,
    pub poly: Poly,
}

pub(crate) fn basis(spec: &GuessSpec) -> Result<Vec<BasisElement>> {
    if spec.order == 0 {
        return Err(Error::Unsupported("guess shape needs order at least 1".into()));
    }
    let m = spec.order;
    let mut out = Vec::new();
    match spec.profile {
        DegreeProfile::Free { degree } => {
            for i in 0..=m {
                for k in 0..=degree {
                    out.push(BasisElement {
                        derivative: i,
                        poly: Poly::monomial(Rat::one(), k),
                    });
                }
            }
        }
        DegreeProfile::Structured => {
            if m < 2 {
                return Err(Error::Unsupported(
                    "structured profile needs order at least 2".into(),
                ));
            }
            let n = m - 1;
            let t = Poly::x();
            let t1 = Poly::from_ints(&[-1, 1]);
            for k in 0..=(n - 1) {
                out.push(BasisElement {
                    derivative: 0,
                    poly: Poly::monomial(Rat::one(), k),
                });
            }
            let low = t.mul(&t1);
            for k in 0..=(n - 1) {
                out.push(BasisElement {
                    derivative: 1,
                    poly: low.mul(&Poly::monomial(Rat::one(), k)),
                });
            }
            for i in 2..=m {
                let prefactor = t.pow(i as u32).mul(&t1.pow(i as u32 - 1));
                for k in 0..=(m - i) {
                    out.push(BasisElement {
                        derivative: i,
                        poly: prefactor.mul(&Poly::monomial(Rat::one(), k)),
                    });
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn structured_counts_taper() {
        // order 3: degrees (1, 1) at D^0, D^1 and (1, 0) cofactors above.
        let b = basis(&GuessSpec::structured(3)).unwrap();
        assert_eq!(b.len(), 2 + 2 + 2 + 1);
        assert!(basis(&GuessSpec::structured(1)).is_err());
    }

    #[test]
    fn free_counts() {
        let b = basis(&GuessSpec::free(2, 3)).unwrap();
        assert_eq!(b.len(), 3 * 4);
    }

    #[test]
    fn structured_prefactors_vanish_at_singular_points() {
        let b = basis(&GuessSpec::structured(4)).unwrap();
        for e in &b {
            if e.derivative >= 2 {
                assert!(e.poly.root_multiplicity(&Rat::one()) >= e.derivative - 1);
                assert!(
                    e.poly.root_multiplicity(&exactcore::rational::rat_i(0)) >= e.derivative
                );
            }
        }
    }
}
