//! The operator type: sum of `c_i(x) * D^i` with rational-function
//! coefficients, indexed by derivative order.
//!
//! Invariant: the coefficient list either is empty (the zero operator) or
//! ends in a nonzero function. Composition is the non-commutative product;
//! right division is Euclidean in the order.

use exactcore::poly::Poly;
use exactcore::rational::Rat;
use exactcore::ratfun::RationalFunction;
use exactcore::series::{TruncatedSeries, Var};
use exactcore::{Error, Result};
use num::traits::{One, Zero};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiffOperator {
    variable: Var,
    coeffs: Vec<RationalFunction>,
}

/// An exact polynomial as a series, for coefficient-by-series products.
pub(crate) fn poly_series(variable: Var, p: &Poly) -> TruncatedSeries {
    TruncatedSeries::new(variable, 1, 0, p.coeffs().to_vec(), None)
}

impl DiffOperator {
    pub fn new(variable: Var, mut coeffs: Vec<RationalFunction>) -> Self {
        while coeffs.last().map_or(false, RationalFunction::is_zero) {
            coeffs.pop();
        }
        DiffOperator { variable, coeffs }
    }

    pub fn zero(variable: Var) -> Self {
        DiffOperator {
            variable,
            coeffs: vec![],
        }
    }

    pub fn identity(variable: Var) -> Self {
        Self::new(variable, vec![RationalFunction::one()])
    }

    /// The derivation `D` itself.
    pub fn d(variable: Var) -> Self {
        Self::new(
            variable,
            vec![RationalFunction::zero(), RationalFunction::one()],
        )
    }

    /// Multiplication operator by a rational function (order zero).
    pub fn from_function(variable: Var, f: RationalFunction) -> Self {
        Self::new(variable, vec![f])
    }

    /// Builds from polynomial coefficients, ascending in derivative order.
    pub fn from_polys(variable: Var, polys: Vec<Poly>) -> Self {
        Self::new(
            variable,
            polys.into_iter().map(RationalFunction::from_poly).collect(),
        )
    }

    pub fn variable(&self) -> Var {
        self.variable
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Order of the operator; `None` for the zero operator.
    pub fn order(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> RationalFunction {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(RationalFunction::zero)
    }

    pub fn coeffs(&self) -> &[RationalFunction] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&RationalFunction> {
        self.coeffs.last()
    }

    fn check_var(&self, other: &DiffOperator) -> Result<()> {
        if self.variable != other.variable {
            return Err(Error::VariableMismatch(self.variable, other.variable));
        }
        Ok(())
    }

    pub fn add(&self, other: &DiffOperator) -> Result<DiffOperator> {
        self.check_var(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i).add(&other.coeff(i)));
        }
        Ok(DiffOperator::new(self.variable, coeffs))
    }

    pub fn sub(&self, other: &DiffOperator) -> Result<DiffOperator> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> DiffOperator {
        DiffOperator {
            variable: self.variable,
            coeffs: self.coeffs.iter().map(RationalFunction::neg).collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> DiffOperator {
        DiffOperator::new(
            self.variable,
            self.coeffs
                .iter()
                .map(|f| f.scale(c))
                .collect(),
        )
    }

    /// Left-multiplies by a function: `f * L`.
    pub fn scale_function(&self, f: &RationalFunction) -> DiffOperator {
        DiffOperator::new(
            self.variable,
            self.coeffs.iter().map(|c| c.mul(f)).collect(),
        )
    }

    /// Composition `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &DiffOperator) -> Result<DiffOperator> {
        self.check_var(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(DiffOperator::zero(self.variable));
        }
        let m = self.order().unwrap();
        let n = other.order().unwrap();
        // D^i ∘ (b D^j) = sum_k C(i,k) b^(k) D^(i+j-k); precompute b^(k).
        let mut ders: Vec<Vec<RationalFunction>> = Vec::with_capacity(n + 1);
        for b in &other.coeffs {
            let mut row = Vec::with_capacity(m + 1);
            row.push(b.clone());
            for k in 1..=m {
                let prev: &RationalFunction = &row[k - 1];
                row.push(prev.derivative());
            }
            ders.push(row);
        }
        let mut out = vec![RationalFunction::zero(); m + n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let mut binom = Rat::one();
            for k in 0..=i {
                if k > 0 {
                    binom = binom * exactcore::rat_i((i - k + 1) as i64)
                        / exactcore::rat_i(k as i64);
                }
                for (j, row) in ders.iter().enumerate() {
                    let term = a.mul(&row[k]).scale(&binom);
                    out[i + j - k] = out[i + j - k].add(&term);
                }
            }
        }
        Ok(DiffOperator::new(self.variable, out))
    }

    /// Applies to a series: `sum c_i y^(i)`. Coefficients with genuine
    /// denominators are expanded as Laurent series, so the result may
    /// carry negative exponents; monomial denominators keep exact inputs
    /// exact, other denominators need a truncated input.
    pub fn apply(&self, y: &TruncatedSeries) -> Result<TruncatedSeries> {
        let (polys, den) = self.cleared_raw();
        let cleared = self.apply_polys(&polys, y)?;
        if den.is_one() {
            return Ok(cleared);
        }
        let delta = den.root_multiplicity(&Rat::zero()) as i64;
        if cleared.is_zero() {
            // Dividing O(x^beta) by a unit times x^delta.
            return Ok(cleared.shift_exponent(-delta, 1));
        }
        let den_series = poly_series(self.variable, &den);
        let inv = match cleared.valid_exponent() {
            Some(beta) => {
                // Precision so that the product keeps validity beta - delta.
                let lam = cleared.leading().map(|(e, _)| e).unwrap();
                let tau = beta - lam + exactcore::rat_i(delta);
                let (tn, td) = small_frac(&tau)?;
                den_series.truncate_exponent(tn, td).recip()?
            }
            None => den_series.recip().map_err(|_| {
                Error::Unsupported(
                    "image of an exact series under a non-monomial denominator; \
                     truncate the input first"
                        .into(),
                )
            })?,
        };
        cleared.mul(&inv)
    }

    /// Applies the denominator-cleared form: `(den * L)(y)` with purely
    /// polynomial coefficients. Total on every series; the tool of choice
    /// for annihilation checks.
    pub fn apply_cleared(&self, y: &TruncatedSeries) -> Result<TruncatedSeries> {
        let (polys, _) = self.cleared_raw();
        self.apply_polys(&polys, y)
    }

    fn apply_polys(&self, polys: &[Poly], y: &TruncatedSeries) -> Result<TruncatedSeries> {
        if y.variable() != self.variable {
            return Err(Error::VariableMismatch(self.variable, y.variable()));
        }
        let mut acc = TruncatedSeries::zero_exact(self.variable);
        let mut dy = y.clone();
        for (i, p) in polys.iter().enumerate() {
            if i > 0 {
                dy = dy.derivative();
            }
            if p.is_zero() {
                continue;
            }
            acc = acc.add(&poly_series(self.variable, p).mul(&dy)?)?;
        }
        Ok(acc)
    }

    /// True when the operator maps the series to zero through its whole
    /// validity window.
    pub fn annihilates(&self, y: &TruncatedSeries) -> bool {
        self.apply_cleared(y).map_or(false, |r| r.is_zero())
    }

    /// Exact denominator clearing: `polys[i] = c_i * den` with `den` the
    /// monic lcm of the coefficient denominators, no rescaling.
    pub fn cleared_raw(&self) -> (Vec<Poly>, Poly) {
        if self.is_zero() {
            return (vec![], Poly::one());
        }
        let mut den = Poly::one();
        for c in &self.coeffs {
            let g = den.gcd(c.denominator());
            den = den.mul(&c.denominator().exact_div(&g).unwrap());
        }
        let polys: Vec<Poly> = self
            .coeffs
            .iter()
            .map(|c| {
                c.numerator()
                    .mul(&den.exact_div(c.denominator()).unwrap())
            })
            .collect();
        (polys, den)
    }

    /// Denominator-cleared canonical form: polynomial coefficients with
    /// integer content 1 overall and positive leading coefficient in the
    /// top-order slot. Operators equal up to a rational factor clear to
    /// the same vector.
    pub fn cleared(&self) -> (Vec<Poly>, Poly) {
        let (polys, den) = self.cleared_raw();
        if polys.is_empty() {
            return (polys, den);
        }
        // Joint primitive normalization across all coefficients.
        let mut content: Option<Rat> = None;
        for p in &polys {
            if p.is_zero() {
                continue;
            }
            let (s, _) = p.primitive();
            content = Some(match content {
                None => s,
                Some(c) => gcd_rat(&c, &s),
            });
        }
        let mut scale = content.unwrap_or_else(Rat::one);
        if polys
            .last()
            .and_then(Poly::lc)
            .map_or(false, |l| l < &Rat::zero())
        {
            scale = -scale;
        }
        let inv = scale.recip();
        (polys.iter().map(|p| p.scale(&inv)).collect(), den)
    }

    /// Same cleared polynomial vector; two operators are equal up to a
    /// rational factor iff these agree.
    pub fn canonical_polys(&self) -> Vec<Poly> {
        self.cleared().0
    }

    /// Monic form: leading coefficient 1.
    pub fn monic(&self) -> Result<DiffOperator> {
        let lead = self
            .leading()
            .ok_or_else(|| Error::Unsupported("zero operator has no monic form".into()))?;
        let inv = lead.recip()?;
        Ok(self.scale_function(&inv))
    }

    /// Right Euclidean division: `self = q ∘ other + r`, order r < order
    /// other. Errors on a zero divisor.
    pub fn right_divrem(&self, other: &DiffOperator) -> Result<(DiffOperator, DiffOperator)> {
        self.check_var(other)?;
        let n = other
            .order()
            .ok_or_else(|| Error::NotInvertible("division by the zero operator".into()))?;
        let bn = other.leading().unwrap();
        let mut q = DiffOperator::zero(self.variable);
        let mut r = self.clone();
        while let Some(m) = r.order() {
            if m < n {
                break;
            }
            let c = r.leading().unwrap().div(bn)?;
            let mut term_coeffs = vec![RationalFunction::zero(); m - n + 1];
            term_coeffs[m - n] = c;
            let term = DiffOperator::new(self.variable, term_coeffs);
            q = q.add(&term)?;
            r = r.sub(&term.compose(other)?)?;
        }
        Ok((q, r))
    }
}

fn gcd_rat(a: &Rat, b: &Rat) -> Rat {
    use num::integer::Integer;
    // gcd on Q: gcd of numerators over lcm of denominators, positive.
    let num = a.numer().gcd(b.numer());
    let den = a.denom().lcm(b.denom());
    Rat::new(num, den)
}

/// A rational exponent as (numerator, denominator) machine ints.
fn small_frac(r: &Rat) -> Result<(i64, u32)> {
    use num::ToPrimitive;
    let n = r
        .numer()
        .to_i64()
        .ok_or_else(|| Error::Unsupported("exponent out of range".into()))?;
    let d = r
        .denom()
        .to_u32()
        .ok_or_else(|| Error::Unsupported("exponent denominator out of range".into()))?;
    Ok((n, d))
}

impl fmt::Display for DiffOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*D")?,
                _ => write!(f, "({c})*D^{i}")?,
            }
        }
        Ok(())
    }
}
