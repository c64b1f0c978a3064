//! Diagonal correlation series as Toeplitz determinants.
//!
//! The matrix entry a_n is hypergeometric with a half-integer leading
//! exponent; two parameter branches cover n >= 0 and n <= -1 and agree at
//! n = -1. The high-temperature series C(N,N) is det(a_{i-j}), the
//! low-temperature one C*(N,N) is (-1)^N det(a_{i-j-1}), both over
//! 1 <= i,j <= N.
//!
//! Entry budget: every permutation product has leading exponent at least
//! that of the determinant, and validity min-propagation over products and
//! sums can only land at or above the entry budget. Entries are computed at
//! order + N + 1, so the deficit guard at the end is unreachable unless the
//! bookkeeping itself regresses.

use std::collections::HashMap;

use exactcore::rational::{factorial, pochhammer, rat, rat_i};
use exactcore::series::{TruncatedSeries, Var};
use exactcore::{pfq::pfq_series, Error, Result};
use num::ToPrimitive;

/// Which diagonal correlation determinant to expand, and how far.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ToeplitzSpec {
    /// Diagonal separation N; must be positive.
    pub n: u32,
    /// false: high-temperature C(N,N); true: low-temperature C*(N,N).
    pub dual: bool,
    /// Result is valid through t^(order - 1).
    pub order: i64,
}

/// Toeplitz entry a_n, valid through t^(order - 1).
pub fn toeplitz_entry(n: i64, order: i64) -> Result<TruncatedSeries> {
    if n >= 0 {
        entry_upper(n, order)
    } else {
        entry_lower(n, order)
    }
}

/// Branch for n >= -1: leading exponent (n+1)/2.
pub(crate) fn entry_upper(n: i64, order: i64) -> Result<TruncatedSeries> {
    assert!(n >= -1);
    let m = (n + 1) as u32;
    let c = -pochhammer(&rat(-1, 2), m) / factorial(m);
    let inner = ((2 * order - n).div_euclid(2)).max(1);
    let f = pfq_series(
        &[rat(1, 2), rat(2 * n + 1, 2)],
        &[rat_i(n + 2)],
        Var::T,
        inner,
    )?;
    Ok(f.shift_exponent(n + 1, 2).scale(&c).truncate_order(order))
}

/// Branch for n <= -1: leading exponent (-n-1)/2.
pub(crate) fn entry_lower(n: i64, order: i64) -> Result<TruncatedSeries> {
    assert!(n <= -1);
    let m = (-n - 1) as u32;
    let c = -pochhammer(&rat(1, 2), m) / factorial(m);
    let inner = ((2 * order + n + 2).div_euclid(2)).max(1);
    let f = pfq_series(
        &[rat(-1, 2), rat(-2 * n - 1, 2)],
        &[rat_i(-n)],
        Var::T,
        inner,
    )?;
    Ok(f.shift_exponent(-n - 1, 2).scale(&c).truncate_order(order))
}

/// Determinant of a square series matrix by minor expansion over column
/// subsets. Exponential in the dimension; the dimensions here are small.
pub fn series_determinant(rows: &[Vec<TruncatedSeries>]) -> Result<TruncatedSeries> {
    let n = rows.len();
    if n == 0 || n > 63 {
        return Err(Error::Unsupported("determinant dimension out of range".into()));
    }
    if rows.iter().any(|r| r.len() != n) {
        return Err(Error::Unsupported("determinant of a non-square matrix".into()));
    }
    let variable = rows[0][0].variable();
    let mut memo: HashMap<u64, TruncatedSeries> = HashMap::new();
    memo.insert(0, TruncatedSeries::one(variable));
    det_minor(rows, (1u64 << n) - 1, &mut memo)
}

fn det_minor(
    rows: &[Vec<TruncatedSeries>],
    mask: u64,
    memo: &mut HashMap<u64, TruncatedSeries>,
) -> Result<TruncatedSeries> {
    if let Some(v) = memo.get(&mask) {
        return Ok(v.clone());
    }
    let n = rows.len();
    let row = n - mask.count_ones() as usize;
    let variable = rows[0][0].variable();
    let mut acc = TruncatedSeries::zero_exact(variable);
    let mut pos = 0u32;
    for col in 0..n {
        if mask & (1 << col) == 0 {
            continue;
        }
        let minor = det_minor(rows, mask & !(1 << col), memo)?;
        let term = rows[row][col].mul(&minor)?;
        acc = if pos % 2 == 0 { acc.add(&term)? } else { acc.sub(&term)? };
        pos += 1;
    }
    memo.insert(mask, acc.clone());
    Ok(acc)
}

/// Diagonal correlation series, valid through t^(spec.order - 1).
///
/// Leading exponent N/2 in the high-temperature regime, 0 (constant term 1)
/// in the low-temperature one.
pub fn correlation_diag(spec: &ToeplitzSpec) -> Result<TruncatedSeries> {
    if spec.n == 0 {
        return Err(Error::Unsupported("diagonal separation must be positive".into()));
    }
    let n = i64::from(spec.n);
    let budget = spec.order + n + 1;
    let offset = if spec.dual { -1 } else { 0 };
    let mut cache: HashMap<i64, TruncatedSeries> = HashMap::new();
    for m in (1 - n + offset)..=(n - 1 + offset) {
        cache.insert(m, toeplitz_entry(m, budget)?);
    }
    let rows: Vec<Vec<TruncatedSeries>> = (1..=n)
        .map(|i| (1..=n).map(|j| cache[&(i - j + offset)].clone()).collect())
        .collect();
    let mut det = series_determinant(&rows)?;
    if spec.dual && spec.n % 2 == 1 {
        det = det.neg();
    }
    match det.valid_exponent() {
        Some(v) if v < rat_i(spec.order) => Err(Error::TruncationDeficit {
            needed: spec.order,
            have: v.floor().to_integer().to_i64().unwrap_or(i64::MIN),
        }),
        _ => Ok(det.truncate_order(spec.order)),
    }
}
