//! Randomized algebraic laws for the exact kernel.
//!
//! Truncated-series identities are checked by subtracting both sides: the
//! difference's stored window is exactly the overlap of the two validity
//! windows, so `is_zero` on it is the right notion of "equal where both
//! are defined".

use exactcore::linalg;
use exactcore::poly::Poly;
use exactcore::rational::{parse_rat, rat};
use exactcore::serial::{rat_to_string, SeriesDto};
use exactcore::{MultiPoly, Rat, Sym, TruncatedSeries, Var};
use num::traits::Zero;
use proptest::prelude::*;

fn small_rat() -> impl Strategy<Value = Rat> {
    (-20i64..=20, 1i64..=10).prop_map(|(n, d)| rat(n, d))
}

fn series() -> impl Strategy<Value = TruncatedSeries> {
    (
        1u32..=3,
        -6i64..=6,
        prop::collection::vec(small_rat(), 0..8),
        prop::option::of(0i64..=6),
    )
        .prop_map(|(ram, base, coeffs, extra)| {
            let valid = extra.map(|e| base + coeffs.len() as i64 + e);
            TruncatedSeries::new(Var::T, ram, base, coeffs, valid)
        })
}

fn poly(max_len: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec(small_rat(), 0..max_len).prop_map(Poly::new)
}

fn matrix() -> impl Strategy<Value = Vec<Vec<Rat>>> {
    (1usize..=5, 1usize..=5).prop_flat_map(|(m, n)| {
        prop::collection::vec(prop::collection::vec(small_rat(), n..=n), m..=m)
    })
}

/// Naive rational Gauss elimination, used as a rank oracle.
fn rank_oracle(rows: &[Vec<Rat>]) -> usize {
    let mut m: Vec<Vec<Rat>> = rows.to_vec();
    let ncols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..ncols {
        let Some(p) = (rank..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let inv = m[rank][c].clone().recip();
        for j in 0..ncols {
            m[rank][j] = &m[rank][j] * &inv;
        }
        for i in 0..m.len() {
            if i != rank && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..ncols {
                    let t = &m[rank][j] * &f;
                    m[i][j] -= t;
                }
            }
        }
        rank += 1;
    }
    rank
}

proptest! {
    #[test]
    fn series_add_commutes(a in series(), b in series()) {
        let ab = a.add(&b).unwrap();
        let ba = b.add(&a).unwrap();
        prop_assert!(ab.sub(&ba).unwrap().is_zero());
        prop_assert_eq!(ab.valid_units(), ba.valid_units());
    }

    #[test]
    fn series_mul_distributes(a in series(), b in series(), c in series()) {
        let lhs = a.mul(&b.add(&c).unwrap()).unwrap();
        let rhs = a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap();
        prop_assert!(lhs.sub(&rhs).unwrap().is_zero());
    }

    #[test]
    fn series_mul_associates(a in series(), b in series(), c in series()) {
        let lhs = a.mul(&b).unwrap().mul(&c).unwrap();
        let rhs = a.mul(&b.mul(&c).unwrap()).unwrap();
        prop_assert!(lhs.sub(&rhs).unwrap().is_zero());
    }

    #[test]
    fn series_leibniz_rule(a in series(), b in series()) {
        let lhs = a.mul(&b).unwrap().derivative();
        let rhs = a
            .derivative()
            .mul(&b)
            .unwrap()
            .add(&a.mul(&b.derivative()).unwrap())
            .unwrap();
        prop_assert!(lhs.sub(&rhs).unwrap().is_zero());
    }

    #[test]
    fn series_reciprocal_inverts(a in series()) {
        prop_assume!(!a.is_zero());
        match a.recip() {
            Ok(r) => {
                let prod = a.mul(&r).unwrap();
                let one = TruncatedSeries::one(a.variable());
                prop_assert!(prod.sub(&one).unwrap().is_zero());
            }
            // Exact non-monomial inputs refuse; anything else must invert.
            Err(_) => prop_assert!(a.is_exact() && a.coefficients().len() > 1),
        }
    }

    #[test]
    fn series_dto_round_trips(a in series()) {
        let dto = SeriesDto::from(&a);
        let back = TruncatedSeries::try_from(&dto).unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn rational_string_round_trips(r in small_rat()) {
        prop_assert_eq!(parse_rat(&rat_to_string(&r)).unwrap(), r);
    }

    #[test]
    fn poly_divrem_identity(p in poly(7), d in poly(5)) {
        prop_assume!(!d.is_zero());
        let (q, r) = p.divrem(&d);
        prop_assert_eq!(q.mul(&d).add(&r), p);
        if let (Some(rd), Some(dd)) = (r.degree(), d.degree()) {
            prop_assert!(rd < dd);
        }
    }

    #[test]
    fn poly_gcd_divides_both(p in poly(6), q in poly(6)) {
        prop_assume!(!p.is_zero() || !q.is_zero());
        let g = p.gcd(&q);
        prop_assert!(p.divrem(&g).1.is_zero());
        prop_assert!(q.divrem(&g).1.is_zero());
    }

    #[test]
    fn poly_resultant_detects_common_factor(a in poly(4), b in poly(4), c in poly(3)) {
        prop_assume!(a.degree().map_or(false, |d| d >= 1));
        prop_assume!(!b.is_zero() && !c.is_zero());
        // a is a common factor of (ab, ac), so the resultant vanishes.
        prop_assert!(a.mul(&b).resultant(&a.mul(&c)).is_zero());
    }

    #[test]
    fn poly_shift_matches_eval(p in poly(6), a in small_rat(), x in small_rat()) {
        let shifted = p.shift(&a);
        prop_assert_eq!(shifted.eval(&x), p.eval(&(&x + &a)));
    }

    #[test]
    fn nullspace_vectors_annihilate(m in matrix()) {
        let ns = linalg::rational_nullspace(&m);
        let ncols = m[0].len();
        prop_assert_eq!(linalg::rational_rank(&m) + ns.len(), ncols);
        prop_assert_eq!(linalg::rational_rank(&m), rank_oracle(&m));
        for v in &ns {
            for row in &m {
                let dot: Rat = row.iter().zip(v).map(|(a, b)| a * b).sum();
                prop_assert!(dot.is_zero());
            }
        }
    }

    #[test]
    fn solve_solutions_check_out(m in matrix(), xs in prop::collection::vec(small_rat(), 5)) {
        // Build a consistent system by multiplying a known vector.
        let ncols = m[0].len();
        let x0 = &xs[..ncols];
        let rhs: Vec<Rat> = m
            .iter()
            .map(|row| row.iter().zip(x0).map(|(a, b)| a * b).sum())
            .collect();
        let sol = linalg::solve_linear(&m, &rhs).expect("consistent by construction");
        for (row, b) in m.iter().zip(&rhs) {
            let dot: Rat = row.iter().zip(&sol).map(|(a, v)| a * v).sum();
            prop_assert_eq!(dot, b.clone());
        }
    }

    #[test]
    fn multipoly_resultant_specializes(
        ac in prop::collection::vec(small_rat(), 3),
        bc in prop::collection::vec(small_rat(), 2),
        tv in small_rat(),
    ) {
        // f = ac2*S0^2 + ac1*t*S0 + ac0, g = bc1*S0 + bc0*t.
        let s0 = MultiPoly::var(Sym::S0);
        let t = MultiPoly::var(Sym::T);
        let f = s0
            .pow(2)
            .scale(&ac[2])
            .add(&s0.mul(&t).scale(&ac[1]))
            .add(&MultiPoly::constant(ac[0].clone()));
        let g = s0.scale(&bc[1]).add(&t.scale(&bc[0]));
        prop_assume!(!ac[2].is_zero() && !bc[1].is_zero());
        let res = f.resultant_eliminate(&g, Sym::S0).unwrap();
        // Specialize t and compare with the univariate resultant.
        let spec = res.subst_rat(Sym::T, &tv).as_univariate(Sym::S0).unwrap();
        let fu = f.subst_rat(Sym::T, &tv).as_univariate(Sym::S0).unwrap();
        let gu = g.subst_rat(Sym::T, &tv).as_univariate(Sym::S0).unwrap();
        prop_assert_eq!(spec.coeff(0), fu.resultant(&gu));
    }
}
