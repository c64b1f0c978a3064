//! Reference closed forms for the low-order diagonal correlations: the
//! depth-two and depth-three first-order-variable relations, the plane
//! curves they reduce to, the rational parametrization and flow of the
//! depth-two curve, and the canonical coordinates of its Hamiltonian.
//!
//! Everything here is data, transcribed once and pinned by the tests in
//! the sibling modules, which recompute each object from scratch.

use crate::hamilton::{ising_n_set, EKPolynomialT, Hamiltonian, HamiltonianData, RationalEK};
use crate::riccati::{ParamData, RiccatiData};
use exactcore::multipoly::{MultiPoly, Sym};
use exactcore::poly::Poly;
use exactcore::rational::{rat, rat_i};

fn tp(coeffs: &[i64]) -> Poly {
    Poly::from_ints(coeffs)
}

fn tmp(coeffs: &[i64]) -> MultiPoly {
    MultiPoly::from_poly(&tp(coeffs), Sym::T)
}

/// t-polynomial coefficients, ascending in S0.
fn s0poly(coeffs: &[&[i64]]) -> MultiPoly {
    let s0 = MultiPoly::var(Sym::S0);
    let mut acc = MultiPoly::zero();
    for (i, c) in coeffs.iter().enumerate() {
        acc = acc.add(&tmp(c).mul(&s0.pow(i as u32)));
    }
    acc
}

/// t-polynomial coefficients, ascending in U.
fn upoly(coeffs: &[&[i64]]) -> MultiPoly {
    let u = MultiPoly::var(Sym::U);
    let mut acc = MultiPoly::zero();
    for (i, c) in coeffs.iter().enumerate() {
        acc = acc.add(&tmp(c).mul(&u.pow(i as u32)));
    }
    acc
}

fn ek(terms: &[(u32, u32, &[i64])]) -> EKPolynomialT {
    EKPolynomialT::new(terms.iter().map(|(e, k, c)| (*e, *k, tp(c))).collect())
}

/// Depth-two relation for the n = 2 diagonal correlation, linear in S2.
pub fn c22s() -> MultiPoly {
    let s1 = MultiPoly::var(Sym::S1);
    let s2 = MultiPoly::var(Sym::S2);
    let s0 = MultiPoly::var(Sym::S0);
    tmp(&[0, 0, 64, -128, 64])
        .mul(&s2)
        .add(&tmp(&[0, 80, 48, -128]).mul(&s1))
        .add(&tmp(&[0, -192, 192]).mul(&s0).mul(&s1))
        .add(&s0poly(&[&[45], &[-84, 64, 128], &[-16, -256], &[64]]))
}

/// Plane curve in (S0, S1) cut out by the n = 2 diagonal correlation.
pub fn nappe22() -> MultiPoly {
    let s1 = MultiPoly::var(Sym::S1);
    let front = s0poly(&[&[-3], &[4]]);
    let cubic = s0poly(&[&[45], &[-84, -64, 256], &[-16, -256], &[64]]);
    let cross = s0poly(&[&[-1, 8], &[-4]]);
    front
        .mul(&cubic)
        .add(&tmp(&[0, 32, -32]).mul(&front).mul(&cross).mul(&s1))
        .add(&tmp(&[0, 0, 256, -512, 256]).mul(&s1.pow(2)))
}

/// Plane curve in (S0, S1) cut out by the n = 3 diagonal correlation.
pub fn ratio_n3() -> MultiPoly {
    let s1 = MultiPoly::var(Sym::S1);
    let q2 = s0poly(&[&[55, 448, 64], &[-104, -176], &[48]]);
    let q1 = s0poly(&[
        &[1125, 2880, -25920],
        &[400, 12256, 31744, 6144],
        &[-4000, -18688, -12032],
        &[3328, 5632],
        &[-768],
    ]);
    let q0 = s0poly(&[
        &[1575],
        &[-2320, -1760, -1536, 9216],
        &[288, -1792, -8448],
        &[768, 2560],
        &[-256],
    ]);
    let head = s0poly(&[&[45], &[-56, -16], &[16]]);
    tmp(&[0, 0, 0, -4096, 12288, -12288, 4096])
        .mul(&s1.pow(3))
        .add(&tmp(&[0, 0, 256, -512, 256]).mul(&q2).mul(&s1.pow(2)))
        .add(&tmp(&[0, 16, -16]).mul(&q1).mul(&s1))
        .sub(&head.mul(&q0))
}

/// Rational parametrization of the n = 2 plane curve: S0 and S1 as
/// rational functions of the uniformizing variable U with t as parameter.
pub fn param_n2() -> ParamData {
    let den = upoly(&[
        &[-112, -272, 192],
        &[24, 280, 496, -384],
        &[45, 51, -168, -260, 192],
    ]);
    let s0_num = upoly(&[
        &[-176, 48, -320, 256],
        &[120, 184, -144, 768, -512],
        &[9, -57, 24, 76, -448, 256],
    ])
    .scale(&rat(3, 4));
    let s1_num = upoly(&[&[4, -8], &[-3, -6, 8]])
        .mul(&upoly(&[
            &[1088, 384, 2624, 1280, -1536],
            &[-1296, -2816, 688, -7776, -3840, 4608],
            &[108, 1848, 636, -3328, 8304, 4416, -4608],
            &[189, 36, -1323, 210, 2460, -2792, -1856, 1536],
        ]))
        .scale(&rat_i(3));
    ParamData {
        s0_num,
        s0_den: den.clone(),
        s1_num,
        s1_den: tmp(&[0, 1]).mul(&den.pow(2)),
    }
}

/// Riccati flow of the uniformizing variable along the n = 2 curve:
/// scale(t) du/dt = c2(t) u^2 + c1(t) u + c0(t).
pub fn riccati_n2() -> RiccatiData {
    RiccatiData {
        scale: tp(&[0, 144, -64, -176, 96]),
        c2: tp(&[63, -135, -120, -140, 192]),
        c1: tp(&[120, 408, 368, -480]),
        c0: tp(&[-272, -112, 192]),
    }
}

/// Canonical coordinates of the n = 2 diagonal correlation as rational
/// functions of the elliptic integrals E and K, with the Hamiltonian they
/// satisfy.
pub fn malmquist_pq_n2() -> HamiltonianData {
    let l1 = ek(&[(1, 0, &[1, 1]), (0, 1, &[-1, 1])]);
    let l2 = ek(&[(1, 0, &[2]), (0, 1, &[-1, 1])]);
    let np1 = ek(&[
        (0, 2, &[1, -11, 19, -9]),
        (1, 1, &[-2, 36, -34]),
        (2, 0, &[1, -34, 1]),
    ]);
    let np2 = ek(&[(0, 2, &[1, -1]), (1, 1, &[-2]), (2, 0, &[1])]);
    let dp1 = ek(&[(0, 2, &[-3, 6, -3]), (1, 1, &[8, -8]), (2, 0, &[-5, 1])]);
    let dp2 = ek(&[(0, 2, &[-1, 2, -1]), (1, 1, &[2, -4, 2]), (2, 0, &[-1, 5])]);
    let nq = ek(&[
        (0, 2, &[11, -25, 17, -3]),
        (1, 1, &[-28, 30, -8, 6]),
        (2, 0, &[17, -2, 17]),
    ]);
    let p = RationalEK {
        scalar: rat(-1, 2),
        numerator_t: tp(&[1]),
        numerator: vec![l1.clone(), np1.clone(), np2],
        denominator_t: tp(&[0, 1]),
        denominator: vec![l2.clone(), dp1, dp2],
    };
    let q = RationalEK {
        scalar: rat_i(-1),
        numerator_t: tp(&[0, 1]),
        numerator: vec![l2, nq],
        denominator_t: tp(&[1]),
        denominator: vec![l1, np1],
    };
    HamiltonianData {
        hamiltonian: Hamiltonian::new(ising_n_set(&rat_i(2))),
        p,
        q,
    }
}
