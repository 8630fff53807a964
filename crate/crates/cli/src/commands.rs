use anyhow::{bail, Context, Result};
use dickson_core::dickson::{
    ff_eval, ff_is_permutation, functional_residual, is_prime, kth_kind, permutation_survey,
    FamilyKind, FamilyListing, FamilySpec, FunctionalKind, PrimeFieldElem, Sign,
};
use dickson_core::exactalg::{rational_to_string, BigRational, ParamPoly};
use dickson_core::ode::{
    decompose, fit_stoll, particular_satisfies_ode, particular_solution, verify_known_range,
    KnownOde, STOLL_LABELS,
};
use dickson_core::specfn::{
    assoc_legendre_ode_residual, default_samples, fit_constants, gamma_fn, homogeneous_eval,
    homogeneous_ode_residual, hyp2f1, legendre_half, Complex, LegendreKind, LegendreParams,
    RESIDUAL_Z_MAX, RESIDUAL_Z_MIN,
};
use dickson_core::{sweep, Error};
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::report::{Outcome, Status, Table};

fn num(v: f64) -> String {
    format!("{v:?}")
}

fn complex_json(z: Complex) -> Value {
    json!({ "re": z.re, "im": z.im })
}

fn poly_table(p: &ParamPoly) -> Table {
    let mut table = Table::new(vec!["x_degree", "a_degree", "coefficient"]);
    for (i, c) in p.coeffs().iter().enumerate() {
        for (j, q) in c.coeffs().iter().enumerate() {
            if !q.is_zero() {
                table.push(vec![i.to_string(), j.to_string(), rational_to_string(q)]);
            }
        }
    }
    table
}

/// Family selected by the ordinal `K` (`D_{n, K-1}`) or a rational `B`.
pub fn gen(n: usize, kind: u32, b: Option<BigRational>, recurrence: bool) -> Result<Outcome> {
    let family = match b {
        Some(b) => FamilyKind::DicksonType(b),
        None => match kind {
            0 => bail!("--kind is 1-based: 1 = first kind, 2 = second kind, 3 = third kind"),
            1 => FamilyKind::FirstKind,
            2 => FamilyKind::SecondKind,
            k => FamilyKind::KthKind(k - 1),
        },
    };
    let spec = FamilySpec::new(family, n);
    let poly = if recurrence {
        spec.by_recurrence()
    } else {
        spec.build()
    };
    let listing = FamilyListing::new(&spec, poly);
    let summary = format!("gen {} n={n}", listing.family);
    let details = vec![listing.text.clone()];
    let table = poly_table(&listing.coefficients);
    Ok(
        Outcome::new(Status::Pass, summary, serde_json::to_value(&listing)?)
            .with_table(table)
            .with_details(details),
    )
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Identity {
    Lemma,
    First,
    Second,
}

pub fn verify_identity(which: Identity, n_max: usize) -> Result<Outcome> {
    if n_max == 0 {
        bail!("--n-max must be at least 1");
    }
    let (kind, name) = match which {
        Identity::Lemma => (KnownOde::ThirdNonhomogeneous, "lemma"),
        Identity::First => (KnownOde::First, "first"),
        Identity::Second => (KnownOde::Second, "second"),
    };
    let checks = verify_known_range(kind, n_max);
    let failures: Vec<usize> = checks.iter().filter(|c| !c.holds).map(|c| c.n).collect();
    let mut table = Table::new(vec!["n", "holds"]);
    for c in &checks {
        table.push(vec![c.n.to_string(), c.holds.to_string()]);
    }
    let payload = json!({
        "identity": name,
        "n_max": n_max,
        "checks": checks,
        "failures": failures,
    });
    let details = failures
        .iter()
        .map(|n| format!("residual nonzero at n={n}"))
        .collect();
    Ok(Outcome::new(
        Status::from_pass(failures.is_empty()),
        format!("{name} n=1..{n_max}"),
        payload,
    )
    .with_table(table)
    .with_details(details))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum FunctionalChoice {
    First,
    Third,
    Degenerate,
    All,
}

fn random_rational(rng: &mut ChaCha8Rng) -> BigRational {
    let num: i64 = rng.random_range(-50..=50);
    let den: i64 = rng.random_range(1..=20);
    BigRational::new(num.into(), den.into())
}

fn nonzero_rational(rng: &mut ChaCha8Rng) -> BigRational {
    loop {
        let q = random_rational(rng);
        if !q.is_zero() {
            return q;
        }
    }
}

/// Draws `(n, u, a)` valid for the kind; the degenerate sign follows `u`.
fn draw(
    kind: &str,
    n_max: usize,
    rng: &mut ChaCha8Rng,
) -> (FunctionalKind, usize, BigRational, BigRational) {
    let n = rng.random_range(0..=n_max);
    let u = nonzero_rational(rng);
    match kind {
        "first" => (FunctionalKind::First, n, u, random_rational(rng)),
        "third" => loop {
            let a = random_rational(rng);
            if &u * &u != a {
                break (FunctionalKind::Third, n, u, a);
            }
        },
        _ => {
            let sign = if u.is_positive() {
                Sign::Plus
            } else {
                Sign::Minus
            };
            let a = &u * &u;
            (FunctionalKind::ThirdDegenerate(sign), n, u, a)
        }
    }
}

pub fn verify_functional(
    choice: FunctionalChoice,
    n_max: usize,
    trials: usize,
    seed: u64,
) -> Result<Outcome> {
    let kinds: &[&str] = match choice {
        FunctionalChoice::First => &["first"],
        FunctionalChoice::Third => &["third"],
        FunctionalChoice::Degenerate => &["degenerate"],
        FunctionalChoice::All => &["first", "third", "degenerate"],
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut per_kind = serde_json::Map::new();
    let mut table = Table::new(vec!["kind", "n", "u", "a", "residual"]);
    let mut all_ok = true;
    for &name in kinds {
        let mut failures = Vec::new();
        for _ in 0..trials {
            let (kind, n, u, a) = draw(name, n_max, &mut rng);
            let r = functional_residual(kind, n, &u, &a)?;
            let row = vec![
                name.to_string(),
                n.to_string(),
                rational_to_string(&u),
                rational_to_string(&a),
                rational_to_string(&r),
            ];
            if !r.is_zero() {
                failures.push(json!({ "n": n, "u": row[2], "a": row[3], "residual": row[4] }));
            }
            table.push(row);
        }
        all_ok &= failures.is_empty();
        per_kind.insert(
            name.into(),
            json!({ "trials": trials, "failures": failures }),
        );
    }
    let payload = json!({ "seed": seed, "n_max": n_max, "kinds": per_kind });
    let summary = format!(
        "functional {} x{trials} n<={n_max} seed={seed}",
        kinds.join("+")
    );
    Ok(Outcome::new(Status::from_pass(all_ok), summary, payload).with_table(table))
}

/// `D_{n,k}(x, a) mod p` by the three-term recurrence; shares no code with the
/// closed form used by the library.
fn recurrence_mod(n: usize, k: u32, a: u64, x: u64, p: u64) -> u64 {
    let f0 = (2 + 4 * p - u64::from(k)) % p;
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

fn brute_force_permutes(n: usize, k: u32, a: u64, p: u64) -> bool {
    let mut seen = vec![false; p as usize];
    (0..p).all(|x| !std::mem::replace(&mut seen[recurrence_mod(n, k, a, x, p) as usize], true))
}

fn exact_mod(q: &BigRational, p: u64) -> u64 {
    // integer coefficients at integer points give integers
    let m = num_bigint::BigInt::from(p);
    let r = ((q.numer() % &m) + &m) % &m;
    u64::try_from(r).expect("residue fits")
}

pub fn verify_ff(
    p_bound: u64,
    n_max: usize,
    k_max: u32,
    eval_p_max: u64,
    eval_n_max: usize,
) -> Result<Outcome> {
    let primes: Vec<u64> = (2..p_bound).filter(|&p| is_prime(p)).collect();
    let mut perm_mismatches = Vec::new();
    let mut perm_checked = 0usize;
    for &p in &primes {
        for row in permutation_survey(p, n_max, k_max)? {
            perm_checked += 1;
            if row.is_permutation != brute_force_permutes(row.n, row.k, row.a, p) {
                perm_mismatches.push(json!(row));
            }
        }
    }
    let eval_primes: Vec<u64> = (2..=eval_p_max).filter(|&p| is_prime(p)).collect();
    let cases: Vec<(u64, usize, u32)> = eval_primes
        .iter()
        .flat_map(|&p| (0..=eval_n_max).flat_map(move |n| (0..=k_max).map(move |k| (p, n, k))))
        .collect();
    let results = sweep::map(cases, |(p, n, k)| -> Result<(usize, Vec<Value>), Error> {
        let poly = kth_kind(n, k);
        let mut bad = Vec::new();
        let mut checked = 0;
        for a in 0..p {
            for x in 0..p {
                let exact = poly.eval(
                    &BigRational::from_integer(x.into()),
                    &BigRational::from_integer(a.into()),
                );
                let fa = PrimeFieldElem::new(a as i64, p)?;
                let fx = PrimeFieldElem::new(x as i64, p)?;
                let got = ff_eval(n, k, fa, fx)?.value();
                checked += 1;
                if got != exact_mod(&exact, p) {
                    bad.push(json!({ "p": p, "n": n, "k": k, "a": a, "x": x, "got": got }));
                }
            }
        }
        Ok((checked, bad))
    });
    let mut eval_checked = 0;
    let mut eval_mismatches = Vec::new();
    for r in results {
        let (checked, bad) = r?;
        eval_checked += checked;
        eval_mismatches.extend(bad);
    }
    let ok = perm_mismatches.is_empty() && eval_mismatches.is_empty();
    let payload = json!({
        "permutation": { "primes": primes, "n_max": n_max, "k_max": k_max, "checked": perm_checked, "mismatches": perm_mismatches },
        "eval": { "primes": eval_primes, "n_max": eval_n_max, "checked": eval_checked, "mismatches": eval_mismatches },
    });
    let summary =
        format!("ff p<{p_bound} n<={n_max} k<={k_max}; eval p<={eval_p_max} n<={eval_n_max}");
    Ok(Outcome::new(Status::from_pass(ok), summary, payload))
}

pub fn particular(n: usize, a: &BigRational) -> Result<Outcome> {
    let sol = particular_solution(n, a)?;
    let ok = particular_satisfies_ode(&sol)?
        && sol.b[n] == BigRational::from_integer(1.into())
        && sol.b[n - 1].is_zero();
    let mut table = Table::new(vec!["k", "b"]);
    for (k, b) in sol.b.iter().enumerate() {
        table.push(vec![k.to_string(), rational_to_string(b)]);
    }
    let details = vec![format!("F_p = {}", sol.to_poly())];
    let summary = format!("particular n={n} a={}", rational_to_string(a));
    Ok(
        Outcome::new(Status::from_pass(ok), summary, serde_json::to_value(&sol)?)
            .with_table(table)
            .with_details(details),
    )
}

pub fn decomposition(n: usize, a: &BigRational) -> Result<Outcome> {
    let dec = decompose(n, a)?;
    let mut table = Table::new(vec!["k", "particular", "remainder"]);
    let rem = dec.remainder.rational_coeffs().unwrap_or_default();
    for (k, b) in dec.particular.b.iter().enumerate() {
        let r = rem.get(k).cloned().unwrap_or_else(BigRational::zero);
        table.push(vec![
            k.to_string(),
            rational_to_string(b),
            rational_to_string(&r),
        ]);
    }
    let details = vec![format!("remainder = {}", dec.remainder)];
    let summary = format!("decompose n={n} a={}", rational_to_string(a));
    Ok(Outcome::new(
        Status::from_pass(dec.remainder_is_homogeneous_solution),
        summary,
        serde_json::to_value(&dec)?,
    )
    .with_table(table)
    .with_details(details))
}

pub fn stoll(n: usize, k: u32) -> Result<Outcome> {
    let summary = format!("fit-stoll n={n} k={k}");
    let basis = match fit_stoll(n, k) {
        Ok(b) => b,
        Err(Error::EmptyBasis { .. }) => {
            let payload = json!({ "n": n, "k": k, "dimension": 0, "basis": [] });
            return Ok(Outcome::new(Status::Fail, summary, payload));
        }
        Err(e) => return Err(e.into()),
    };
    let verified = basis.verify()?;
    let mut table = Table::new(STOLL_LABELS.to_vec());
    for v in &basis.basis {
        table.push(v.0.iter().map(rational_to_string).collect());
    }
    let mut payload = serde_json::to_value(&basis)?;
    payload["dimension"] = json!(basis.dimension());
    payload["verified"] = json!(verified);
    let details = vec![format!("dimension {}", basis.dimension())];
    Ok(Outcome::new(Status::from_pass(verified), summary, payload)
        .with_table(table)
        .with_details(details))
}

/// Evenly spaced points, or the single point when `steps` is 1.
pub fn grid(from: f64, to: f64, steps: usize) -> Vec<f64> {
    if steps <= 1 {
        return vec![from];
    }
    (0..steps)
        .map(|i| from + (to - from) * i as f64 / (steps - 1) as f64)
        .collect()
}

const SWEEP_HEADER: [&str; 4] = ["x", "re", "im", "residual"];

fn sweep_outcome(summary: String, rows: Vec<(f64, Complex, Option<f64>)>, extra: Value) -> Outcome {
    let mut table = Table::new(SWEEP_HEADER.to_vec());
    let mut points = Vec::new();
    for (x, v, r) in &rows {
        table.push(vec![
            num(*x),
            num(v.re),
            num(v.im),
            r.map(num).unwrap_or_default(),
        ]);
        points.push(json!({ "x": x, "value": complex_json(*v), "residual": r }));
    }
    let mut payload = extra;
    payload["points"] = Value::Array(points);
    Outcome::new(Status::Pass, summary, payload).with_table(table)
}

fn in_residual_range(z: f64) -> bool {
    (RESIDUAL_Z_MIN..=RESIDUAL_Z_MAX).contains(&z)
}

pub fn legendre(which: LegendreKind, n: usize, zs: &[f64]) -> Result<Outcome> {
    let params = LegendreParams::new(n)?;
    let mut rows = Vec::new();
    for &z in zs {
        let v = legendre_half(&params, z, which)?;
        let r = if in_residual_range(z) {
            Some(assoc_legendre_ode_residual(&params, z, which)?)
        } else {
            None
        };
        rows.push((z, v, r));
    }
    let extra = json!({ "which": format!("{which:?}"), "n": n, "nu": params.nu, "mu": params.mu });
    Ok(sweep_outcome(
        format!("special {which:?} n={n} points={}", zs.len()),
        rows,
        extra,
    ))
}

pub fn special_2f1(a: f64, b: f64, c: f64, z: Complex) -> Result<Outcome> {
    let v = hyp2f1(a, b, c, z)?;
    let extra = json!({ "a": a, "b": b, "c": c, "z": complex_json(z), "value": complex_json(v) });
    Ok(sweep_outcome(
        format!("special 2f1 z={z}"),
        vec![(z.re, v, None)],
        extra,
    ))
}

pub fn special_gamma(xs: &[f64]) -> Result<Outcome> {
    let mut rows = Vec::new();
    for &x in xs {
        rows.push((x, Complex::new(gamma_fn(x)?, 0.0), None));
    }
    Ok(sweep_outcome(
        format!("special gamma points={}", xs.len()),
        rows,
        json!({}),
    ))
}

pub fn special_fc(n: usize, a: f64, xs: &[f64], ca: Complex, cb: Complex) -> Result<Outcome> {
    let mut rows = Vec::new();
    for &x in xs {
        let v = homogeneous_eval(n, a, x, ca, cb)?;
        let z = x / (2.0 * a.sqrt());
        let r = if in_residual_range(z) {
            Some(homogeneous_ode_residual(n, a, x, ca, cb)?)
        } else {
            None
        };
        rows.push((x, v, r));
    }
    let extra = json!({ "n": n, "a": a, "A": complex_json(ca), "B": complex_json(cb) });
    Ok(sweep_outcome(
        format!("special fc n={n} a={a} points={}", xs.len()),
        rows,
        extra,
    ))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum ResidualTarget {
    P,
    Q,
    Fc,
}

/// Residual check over `ns x zs`; `fc` draws `a` and unit-circle `(A, B)`
/// from the seed and samples `x = 2 sqrt(a) z`.
pub fn special_residual(
    target: ResidualTarget,
    ns: &[usize],
    zs: &[f64],
    tol: f64,
    seed: u64,
) -> Result<Outcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut table = Table::new(vec!["n", "x", "re", "im", "residual"]);
    let mut worst: f64 = 0.0;
    let mut failures = Vec::new();
    for &n in ns {
        let params = LegendreParams::new(n)?;
        for &z in zs {
            let (x, v, r) = match target {
                ResidualTarget::P | ResidualTarget::Q => {
                    let which = if target == ResidualTarget::P {
                        LegendreKind::P
                    } else {
                        LegendreKind::Q
                    };
                    let v = legendre_half(&params, z, which)?;
                    (z, v, assoc_legendre_ode_residual(&params, z, which)?)
                }
                ResidualTarget::Fc => {
                    let a: f64 = rng.random_range(0.1..10.0);
                    let ca = Complex::from_polar(1.0, rng.random_range(0.0..std::f64::consts::TAU));
                    let cb = Complex::from_polar(1.0, rng.random_range(0.0..std::f64::consts::TAU));
                    let x = 2.0 * a.sqrt() * z;
                    let v = homogeneous_eval(n, a, x, ca, cb)?;
                    (x, v, homogeneous_ode_residual(n, a, x, ca, cb)?)
                }
            };
            worst = worst.max(r);
            if r.is_nan() || r >= tol {
                failures.push(json!({ "n": n, "x": x, "residual": r }));
            }
            table.push(vec![n.to_string(), num(x), num(v.re), num(v.im), num(r)]);
        }
    }
    let payload = json!({
        "target": format!("{target:?}").to_lowercase(),
        "ns": ns,
        "zs": zs,
        "tol": tol,
        "seed": seed,
        "max_residual": worst,
        "failures": failures,
    });
    let summary = format!("residual {:?} max={worst:.3e} tol={tol:e}", target);
    Ok(Outcome::new(Status::from_pass(failures.is_empty()), summary, payload).with_table(table))
}

pub fn constants(
    n: usize,
    a: f64,
    xs: Option<Vec<f64>>,
    samples: usize,
    tol: f64,
) -> Result<Outcome> {
    let xs = xs.unwrap_or_else(|| default_samples(a, samples));
    let fit = fit_constants(n, a, &xs).context("fit-constants")?;
    let ok = fit.a.norm() < tol && fit.b.norm() < tol;
    let payload = json!({ "n": n, "a": a, "samples": xs, "tol": tol, "fit": fit });
    let details = vec![format!(
        "A = {}, B = {}, residual_norm = {:e}",
        fit.a, fit.b, fit.residual_norm
    )];
    let summary = format!(
        "fit-constants n={n} a={a} |A|={:.3e} |B|={:.3e}",
        fit.a.norm(),
        fit.b.norm()
    );
    Ok(Outcome::new(Status::from_pass(ok), summary, payload).with_details(details))
}

pub fn ff_value(p: u64, n: usize, k: u32, a: i64, x: i64) -> Result<Outcome> {
    let fa = PrimeFieldElem::new(a, p)?;
    let fx = PrimeFieldElem::new(x, p)?;
    let v = ff_eval(n, k, fa, fx)?.value();
    let payload = json!({ "p": p, "n": n, "k": k, "a": fa.value(), "x": fx.value(), "value": v });
    let mut table = Table::new(vec!["p", "n", "k", "a", "x", "value"]);
    table.push(
        [p, n as u64, u64::from(k), fa.value(), fx.value(), v]
            .iter()
            .map(u64::to_string)
            .collect(),
    );
    Ok(Outcome::new(
        Status::Pass,
        format!("ff eval p={p} n={n} k={k} -> {v}"),
        payload,
    )
    .with_table(table))
}

pub fn ff_perm(p: u64, n: usize, k: u32, a: Option<i64>) -> Result<Outcome> {
    let values: Vec<i64> = match a {
        Some(a) => vec![a],
        None => (1..p as i64).collect(),
    };
    let mut table = Table::new(vec!["p", "n", "k", "a", "is_permutation"]);
    let mut rows = Vec::new();
    for v in values {
        let fa = PrimeFieldElem::new(v, p)?;
        let perm = ff_is_permutation(n, k, fa)?;
        table.push(vec![
            p.to_string(),
            n.to_string(),
            k.to_string(),
            fa.value().to_string(),
            perm.to_string(),
        ]);
        rows.push(json!({ "a": fa.value(), "is_permutation": perm }));
    }
    let count = rows.iter().filter(|r| r["is_permutation"] == true).count();
    let payload = json!({ "p": p, "n": n, "k": k, "results": rows });
    let summary = format!("ff perm p={p} n={n} k={k}: {count}/{} permute", rows.len());
    Ok(Outcome::new(Status::Pass, summary, payload).with_table(table))
}
