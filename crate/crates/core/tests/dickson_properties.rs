use std::collections::HashSet;

use dickson_core::dickson::*;
use dickson_core::exactalg::{int, ratio, BigRational, ParamPoly, UniPolyA};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn binomial(n: usize, k: usize) -> BigInt {
    let mut c = BigInt::one();
    for j in 0..k {
        c = c * BigInt::from(n - j) / BigInt::from(j + 1);
    }
    c
}

/// Coefficients built term by term from the Waring formula with its weight.
fn waring(n: usize, weight: impl Fn(usize) -> BigRational) -> ParamPoly {
    let mut p = ParamPoly::zero();
    for i in 0..=n / 2 {
        let sign = if i % 2 == 0 { 1 } else { -1 };
        let c = weight(i) * BigRational::from_integer(binomial(n - i, i)) * int(sign);
        p = &p + &ParamPoly::monomial(UniPolyA::monomial(c, i), n - 2 * i);
    }
    p
}

fn random_rational(rng: &mut ChaCha8Rng) -> BigRational {
    let num: i64 = rng.random_range(-50..=50);
    let den: i64 = rng.random_range(1..=20);
    ratio(num, den)
}

#[test]
fn closed_form_matches_waring_oracle() {
    for n in 1..=40usize {
        let ni = n as i64;
        assert_eq!(
            first_kind(n),
            waring(n, |i| ratio(ni, ni - i as i64)),
            "D n={n}"
        );
        assert_eq!(second_kind(n), waring(n, |_| int(1)), "E n={n}");
        for k in 0..=4u32 {
            let kk = k as i64;
            let expected = waring(n, |i| ratio(ni - kk * i as i64, ni - i as i64));
            assert_eq!(kth_kind(n, k), expected, "D_{{n,k}} n={n} k={k}");
        }
    }
}

#[test]
fn recurrence_matches_closed_form() {
    for n in 0..=64usize {
        for kind in [
            FamilyKind::FirstKind,
            FamilyKind::SecondKind,
            FamilyKind::KthKind(2),
            FamilyKind::KthKind(3),
            FamilyKind::KthKind(4),
            FamilyKind::DicksonType(ratio(7, 3)),
        ] {
            let spec = FamilySpec::new(kind.clone(), n);
            assert_eq!(spec.build(), spec.by_recurrence(), "{kind:?} n={n}");
        }
    }
}

#[test]
fn structural_invariants_up_to_64() {
    for n in 0..=64usize {
        for k in 0..=4u32 {
            let p = kth_kind(n, k);
            assert!(has_parity(&p, n), "parity n={n} k={k}");
            assert!(has_integer_coefficients(&p), "integrality n={n} k={k}");
            if n >= 1 {
                assert!(is_monic_of_degree(&p, n), "monic n={n} k={k}");
            }
        }
    }
}

#[test]
fn kth_kind_is_affine_in_k() {
    for n in 1..=64usize {
        let (d, e) = (first_kind(n), second_kind(n));
        for k in 0..=4u32 {
            let kk = k as i64;
            let combo = &d.scale_rational(&int(1 - kk)) + &e.scale_rational(&int(kk));
            assert_eq!(kth_kind(n, k), combo, "n={n} k={k}");
        }
    }
}

#[test]
fn dickson_type_generalizes_kth_kind() {
    for n in 0..=32usize {
        for k in 0..=4u32 {
            assert_eq!(
                dickson_type(n, int(2 - k as i64)),
                kth_kind(n, k),
                "n={n} k={k}"
            );
        }
    }
}

#[test]
fn n_zero_constants() {
    assert_eq!(first_kind(0), ParamPoly::from_int(2));
    assert_eq!(second_kind(0), ParamPoly::from_int(1));
    assert_eq!(third_kind(0), ParamPoly::zero());
    assert_eq!(
        dickson_type(0, ratio(5, 2)),
        ParamPoly::from_rational(ratio(5, 2))
    );
}

#[test]
fn functional_equations_at_random_points() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for kind in [FunctionalKind::First, FunctionalKind::Third] {
        let mut done = 0;
        while done < 100 {
            let u = random_rational(&mut rng);
            let a = random_rational(&mut rng);
            if u.is_zero() || &u * &u == a {
                continue;
            }
            let n = rng.random_range(0..=32usize);
            assert!(
                functional_residual(kind, n, &u, &a).unwrap().is_zero(),
                "{kind:?} n={n} u={u} a={a}"
            );
            done += 1;
        }
    }
    for _ in 0..100 {
        let mut u = random_rational(&mut rng);
        if u.is_zero() {
            u = int(1);
        }
        let a = &u * &u;
        let sign = if u > BigRational::zero() {
            Sign::Plus
        } else {
            Sign::Minus
        };
        let n = rng.random_range(0..=32usize);
        let kind = FunctionalKind::ThirdDegenerate(sign);
        assert!(
            functional_residual(kind, n, &u, &a).unwrap().is_zero(),
            "n={n} u={u}"
        );
    }
}

#[test]
fn functional_preconditions() {
    assert!(functional_residual(FunctionalKind::First, 3, &int(0), &int(1)).is_err());
    assert!(functional_residual(FunctionalKind::Third, 3, &int(2), &int(4)).is_err());
    let wrong = FunctionalKind::ThirdDegenerate(Sign::Minus);
    assert!(functional_residual(wrong, 3, &int(2), &int(4)).is_err());
    let off = FunctionalKind::ThirdDegenerate(Sign::Plus);
    assert!(functional_residual(off, 3, &int(2), &int(5)).is_err());
}

fn primes_below(limit: u64) -> Vec<u64> {
    (2..limit).filter(|&p| (2..p).all(|d| p % d != 0)).collect()
}

fn exact_mod(q: &BigRational, p: u64) -> u64 {
    let m = BigInt::from(p);
    let num = ((q.numer() % &m) + &m) % &m;
    let den = ((q.denom() % &m) + &m) % &m;
    // brute-force inverse
    let den: u64 = den.try_into().unwrap();
    let inv = (1..p).find(|&t| den * t % p == 1).unwrap();
    let num: u64 = num.try_into().unwrap();
    num * inv % p
}

#[test]
fn ff_eval_matches_exact_reduction() {
    for p in primes_below(14) {
        for n in 0..=12usize {
            for k in 0..=3u32 {
                let poly = kth_kind(n, k);
                for a in 0..p {
                    for x in 0..p {
                        let exact = poly.eval(&int(x as i64), &int(a as i64));
                        let fa = PrimeFieldElem::new(a as i64, p).unwrap();
                        let fx = PrimeFieldElem::new(x as i64, p).unwrap();
                        let got = ff_eval(n, k, fa, fx).unwrap();
                        assert_eq!(
                            got.value(),
                            exact_mod(&exact, p),
                            "p={p} n={n} k={k} a={a} x={x}"
                        );
                    }
                }
            }
        }
    }
}

/// `D_{n,k}(x, a) mod p` via the three-term recurrence from `(2 - k, x)`.
fn recurrence_mod(n: usize, k: u32, a: u64, x: u64, p: u64) -> u64 {
    let f0 = (2 + p * 4 - k as u64) % p;
    if n == 0 {
        return f0;
    }
    let (mut prev, mut cur) = (f0, x % p);
    for _ in 1..n {
        let next = (x * cur % p + p - a * prev % p) % p;
        (prev, cur) = (cur, next);
    }
    cur
}

#[test]
fn recurrence_oracle_agrees_with_exact_values() {
    for p in primes_below(14) {
        for n in 0..=12usize {
            for k in 0..=3u32 {
                for (a, x) in [(1u64, 2u64), (3, 5), (p - 1, p - 2)] {
                    let exact = kth_kind(n, k).eval(&int(x as i64), &int(a as i64));
                    assert_eq!(recurrence_mod(n, k, a, x, p), exact_mod(&exact, p));
                }
            }
        }
    }
}

#[test]
fn permutation_matches_brute_force_images() {
    for p in primes_below(50) {
        for n in 0..=20usize {
            for k in 0..=3u32 {
                for a in 1..p {
                    let images: HashSet<u64> =
                        (0..p).map(|x| recurrence_mod(n, k, a, x, p)).collect();
                    let fa = PrimeFieldElem::new(a as i64, p).unwrap();
                    assert_eq!(
                        ff_is_permutation(n, k, fa).unwrap(),
                        images.len() as u64 == p,
                        "p={p} n={n} k={k} a={a}"
                    );
                }
            }
        }
    }
}

#[test]
fn first_kind_permutation_criterion() {
    let gcd = |mut x: u64, mut y: u64| {
        while y != 0 {
            (x, y) = (y, x % y);
        }
        x
    };
    for p in primes_below(50).into_iter().filter(|&p| p > 2) {
        for n in 1..=20usize {
            let fa = PrimeFieldElem::new(1, p).unwrap();
            let expected = gcd(n as u64, p * p - 1) == 1;
            assert_eq!(
                ff_is_permutation(n, 0, fa).unwrap(),
                expected,
                "p={p} n={n}"
            );
        }
    }
}

#[test]
fn field_preconditions() {
    assert!(PrimeFieldElem::new(1, 15).is_err());
    let a = PrimeFieldElem::new(1, 7).unwrap();
    let x = PrimeFieldElem::new(1, 11).unwrap();
    assert!(ff_eval(3, 0, a, x).is_err());
    let big = PrimeFieldElem::new(1, 65_537).unwrap();
    assert!(ff_is_permutation(3, 0, big).is_err());
}
