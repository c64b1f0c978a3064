//! Exact linear algebra over Q via fraction-free elimination.
//!
//! Rows are cleared to integers, reduced by Bareiss (single-step
//! fraction-free Gaussian elimination, exact divisions by the previous
//! pivot), and answers are reconstructed rationally. This keeps
//! intermediate growth polynomial where naive rational elimination
//! explodes on the dense series-collocation matrices the guessers build.

use crate::rational::Rat;
use num::bigint::BigInt;
use num::integer::Integer;
use num::traits::{One, Signed, Zero};

/// Row echelon data over the integers, shared by the public entry points.
struct Echelon {
    mat: Vec<Vec<BigInt>>,
    /// (row, column) of each pivot, in elimination order.
    pivots: Vec<(usize, usize)>,
    ncols: usize,
}

fn clear_rows(rows: &[Vec<Rat>]) -> Vec<Vec<BigInt>> {
    rows.iter()
        .map(|row| {
            let mut l = BigInt::one();
            for c in row {
                l = l.lcm(c.denom());
            }
            row.iter().map(|c| c.numer() * &l / c.denom()).collect()
        })
        .collect()
}

fn echelonize(rows: &[Vec<Rat>]) -> Echelon {
    let ncols = rows.first().map_or(0, Vec::len);
    assert!(rows.iter().all(|r| r.len() == ncols), "ragged matrix");
    let mut mat = clear_rows(rows);
    let nrows = mat.len();
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !mat[i][c].is_zero()) else {
            continue;
        };
        mat.swap(r, p);
        for i in r + 1..nrows {
            for j in c + 1..ncols {
                let num = &mat[r][c] * &mat[i][j] - &mat[i][c] * &mat[r][j];
                let (q, rem) = num.div_rem(&prev);
                debug_assert!(rem.is_zero(), "Bareiss division must be exact");
                mat[i][j] = q;
            }
            mat[i][c] = BigInt::zero();
        }
        prev = mat[r][c].clone();
        pivots.push((r, c));
        r += 1;
    }
    Echelon { mat, pivots, ncols }
}

pub fn rational_rank(rows: &[Vec<Rat>]) -> usize {
    echelonize(rows).pivots.len()
}

/// Basis of the right nullspace, one vector per free column. Each vector
/// is integer-primitive with positive first nonzero entry, and has a 1 in
/// its own free column before scaling, so the basis is canonical.
pub fn rational_nullspace(rows: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    let ech = echelonize(rows);
    let n = ech.ncols;
    let pivot_cols: Vec<usize> = ech.pivots.iter().map(|&(_, c)| c).collect();
    let mut basis = Vec::new();
    for f in 0..n {
        if pivot_cols.contains(&f) {
            continue;
        }
        let mut x = vec![Rat::zero(); n];
        x[f] = Rat::one();
        for &(r, c) in ech.pivots.iter().rev() {
            let mut s = Rat::zero();
            for j in c + 1..n {
                if !x[j].is_zero() && !ech.mat[r][j].is_zero() {
                    s += Rat::from(ech.mat[r][j].clone()) * &x[j];
                }
            }
            x[c] = -s / Rat::from(ech.mat[r][c].clone());
        }
        basis.push(canonical_vector(x));
    }
    basis
}

/// One solution of `A x = b` when consistent.
pub fn solve_linear(rows: &[Vec<Rat>], rhs: &[Rat]) -> Option<Vec<Rat>> {
    assert_eq!(rows.len(), rhs.len());
    let ncols = rows.first().map_or(0, Vec::len);
    let aug: Vec<Vec<Rat>> = rows
        .iter()
        .zip(rhs)
        .map(|(r, b)| {
            let mut row = r.clone();
            row.push(b.clone());
            row
        })
        .collect();
    if aug.is_empty() {
        return Some(vec![]);
    }
    let ech = echelonize(&aug);
    if ech.pivots.iter().any(|&(_, c)| c == ncols) {
        return None;
    }
    let mut x = vec![Rat::zero(); ncols];
    for &(r, c) in ech.pivots.iter().rev() {
        let mut s = Rat::from(ech.mat[r][ncols].clone());
        for j in c + 1..ncols {
            if !x[j].is_zero() && !ech.mat[r][j].is_zero() {
                s -= Rat::from(ech.mat[r][j].clone()) * &x[j];
            }
        }
        x[c] = s / Rat::from(ech.mat[r][c].clone());
    }
    Some(x)
}

/// Determinant of a square matrix (fraction-free, with per-row scaling
/// factors tracked from clearing denominators).
pub fn determinant(rows: &[Vec<Rat>]) -> Rat {
    let n = rows.len();
    if n == 0 {
        return Rat::one();
    }
    assert!(rows.iter().all(|r| r.len() == n), "determinant needs square");
    let mut scale = Rat::one();
    let mut mat: Vec<Vec<BigInt>> = Vec::with_capacity(n);
    for row in rows {
        let mut l = BigInt::one();
        for c in row {
            l = l.lcm(c.denom());
        }
        scale *= Rat::from(l.clone());
        mat.push(row.iter().map(|c| c.numer() * &l / c.denom()).collect());
    }
    let mut sign = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if mat[k][k].is_zero() {
            match (k + 1..n).find(|&i| !mat[i][k].is_zero()) {
                Some(i) => {
                    mat.swap(k, i);
                    sign = !sign;
                }
                None => return Rat::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &mat[k][k] * &mat[i][j] - &mat[i][k] * &mat[k][j];
                let (q, rem) = num.div_rem(&prev);
                debug_assert!(rem.is_zero());
                mat[i][j] = q;
            }
            mat[i][k] = BigInt::zero();
        }
        prev = mat[k][k].clone();
    }
    let det = Rat::from(mat[n - 1][n - 1].clone()) / scale;
    if sign {
        -det
    } else {
        det
    }
}

/// Scales a rational vector to integer entries with gcd 1 and positive
/// first nonzero entry. The zero vector is returned unchanged.
pub fn canonical_vector(v: Vec<Rat>) -> Vec<Rat> {
    let mut den_lcm = BigInt::one();
    for c in &v {
        den_lcm = den_lcm.lcm(c.denom());
    }
    let mut num_gcd = BigInt::zero();
    for c in &v {
        num_gcd = num_gcd.gcd(&(c.numer() * &den_lcm / c.denom()));
    }
    if num_gcd.is_zero() {
        return v;
    }
    let mut scale = Rat::new(num_gcd, den_lcm);
    if let Some(first) = v.iter().find(|c| !c.is_zero()) {
        if first.is_negative() {
            scale = -scale;
        }
    }
    v.into_iter().map(|c| c / &scale).collect()
}
