mod common;

use common::oracle_values::{GAMMA, HOMOGENEOUS_P, HYP2F1, P_HALF, Q_HALF};
use common::rel_err;
use dickson_core::specfn::{
    assoc_legendre_ode_residual, gamma_fn, homogeneous_eval, homogeneous_ode_residual, hyp2f1,
    legendre_p_half, legendre_q_half, pochhammer, Complex, LegendreKind, LegendreParams,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const ORACLE_TOL: f64 = 1e-10;

#[test]
fn p_half_matches_oracle() {
    for &(n, z, re, im) in P_HALF {
        let params = LegendreParams::new(n).unwrap();
        let got = legendre_p_half(&params, z).unwrap();
        let want = Complex::new(re, im);
        let err = (got - want).norm() / want.norm();
        assert!(err < ORACLE_TOL, "n={n} z={z}: {got} vs {want} ({err:e})");
    }
}

#[test]
fn q_half_matches_oracle() {
    for &(n, z, re, im) in Q_HALF {
        let params = LegendreParams::new(n).unwrap();
        let got = legendre_q_half(&params, z).unwrap();
        let want = Complex::new(re, im);
        let err = (got - want).norm() / want.norm();
        assert!(err < ORACLE_TOL, "n={n} z={z}: {got} vs {want} ({err:e})");
        assert!(
            got.re.abs() <= 1e-12 * got.norm(),
            "Q not imaginary at n={n} z={z}"
        );
    }
}

#[test]
fn gamma_matches_oracle() {
    for &(x, want) in GAMMA {
        let got = gamma_fn(x).unwrap();
        assert!(rel_err(got, want) < 1e-12, "x={x}: {got} vs {want}");
    }
}

#[test]
fn hyp2f1_matches_oracle() {
    for &(a, b, c, z, want) in HYP2F1 {
        let got = hyp2f1(a, b, c, Complex::new(z, 0.0)).unwrap();
        assert!(
            rel_err(got.re, want) < ORACLE_TOL,
            "({a},{b},{c},{z}): {got} vs {want}"
        );
        assert_eq!(got.im, 0.0);
    }
}

#[test]
fn homogeneous_matches_oracle() {
    for &(n, a, x, re, im) in HOMOGENEOUS_P {
        let got =
            homogeneous_eval(n, a, x, Complex::new(1.0, 0.0), Complex::new(0.0, 0.0)).unwrap();
        let want = Complex::new(re, im);
        assert!(
            (got - want).norm() / want.norm() < ORACLE_TOL,
            "n={n} a={a} x={x}"
        );
    }
}

#[test]
fn gamma_recurrence_on_grid() {
    let mut x = 0.6;
    while x <= 15.0 {
        let lhs = gamma_fn(x + 1.0).unwrap();
        let rhs = x * gamma_fn(x).unwrap();
        assert!((lhs - rhs).abs() / lhs < 1e-10, "x = {x}");
        x += 0.05;
    }
}

#[test]
fn pochhammer_recurrence() {
    for a in [-2.5, 0.3, 1.0, 7.3] {
        for n in 0..20 {
            assert_eq!(pochhammer(a, n + 1), pochhammer(a, n) * (a + f64::from(n)));
        }
    }
}

#[test]
fn binomial_identity() {
    for a in [0.3, 1.7] {
        for b in [0.25, 1.5, 3.0] {
            for i in 0..=40 {
                let z = -0.5 + 0.025 * i as f64;
                let got = hyp2f1(a, b, b, Complex::new(z, 0.0)).unwrap().re;
                let want = (1.0 - z).powf(-a);
                assert!(rel_err(got, want) < 1e-12, "a={a} b={b} z={z}");
            }
        }
    }
}

#[test]
fn legendre_ode_residuals() {
    for n in [1usize, 2, 3, 5] {
        let params = LegendreParams::new(n).unwrap();
        for z in [1.1, 1.3, 1.5, 2.0, 2.5] {
            for which in [LegendreKind::P, LegendreKind::Q] {
                let r = assoc_legendre_ode_residual(&params, z, which).unwrap();
                assert!(r < 1e-6, "n={n} z={z} {which:?}: {r:e}");
            }
        }
    }
    let looser =
        assoc_legendre_ode_residual(&LegendreParams::new(5).unwrap(), 1.2, LegendreKind::P);
    assert!(looser.unwrap() < 1e-5);
}

#[test]
fn homogeneous_residual_random_unit_circle() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for n in [1usize, 2, 3, 5] {
        for z in [1.1, 1.3, 1.5, 2.0, 2.5] {
            for _ in 0..4 {
                let ta: f64 = rng.random_range(0.0..std::f64::consts::TAU);
                let tb: f64 = rng.random_range(0.0..std::f64::consts::TAU);
                let a: f64 = rng.random_range(0.1..10.0);
                let x = 2.0 * a.sqrt() * z;
                let (ca, cb) = (Complex::from_polar(1.0, ta), Complex::from_polar(1.0, tb));
                let r = homogeneous_ode_residual(n, a, x, ca, cb).unwrap();
                assert!(r < 1e-6, "n={n} a={a} x={x}: {r:e}");
            }
        }
    }
}
