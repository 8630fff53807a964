use num_complex::Complex64;
use num_rational::BigRational;
use serde::Serialize;

use super::diff::{derivatives, DEFAULT_STEP};
use super::legendre::{
    legendre_p_half, legendre_q_half, LegendreParams, RESIDUAL_Z_MAX, RESIDUAL_Z_MIN,
};
use crate::dickson::third_kind;
use crate::error::{Error, Result};
use crate::ode::particular_solution;

/// Minimum number of sample points for [`fit_constants`].
pub const MIN_SAMPLES: usize = 4;
/// Largest design-matrix condition number accepted by the fit.
pub const MAX_CONDITION: f64 = 1e12;

fn check_parameter(a: f64) -> Result<f64> {
    if !a.is_finite() {
        return Err(Error::NonFinite);
    }
    if a <= 0.0 {
        return Err(Error::DomainError(format!("a must be positive, got {a}")));
    }
    Ok(a.sqrt())
}

/// Maps `x` to `z = x / (2 sqrt a)`, requiring `1 < z < 3`.
fn to_z(a: f64, x: f64) -> Result<f64> {
    let root = check_parameter(a)?;
    if !x.is_finite() {
        return Err(Error::NonFinite);
    }
    let z = x / (2.0 * root);
    if !(z > 1.0 && z < 3.0) {
        return Err(Error::DomainError(format!(
            "x = {x} lies outside (2 sqrt a, 6 sqrt a)"
        )));
    }
    Ok(z)
}

/// `(x^2 - 4a)^(-1/4) [A P(z) + B Q(z)]` with `z = x / (2 sqrt a)`.
pub fn homogeneous_eval(
    n: usize,
    a: f64,
    x: f64,
    coef_a: Complex64,
    coef_b: Complex64,
) -> Result<Complex64> {
    let z = to_z(a, x)?;
    let params = LegendreParams::new(n)?;
    let p = legendre_p_half(&params, z)?;
    let q = legendre_q_half(&params, z)?;
    let scale = (x * x - 4.0 * a).powf(-0.25);
    Ok((coef_a * p + coef_b * q) * scale)
}

/// Relative residual of `(x^2-4a) F'' + 3x F' - n^2 F` for the homogeneous
/// combination, divided by `max(|F|, 1)`.
///
/// Derivatives are taken in `z = x / (2 sqrt a)` with step [`DEFAULT_STEP`].
pub fn homogeneous_ode_residual(
    n: usize,
    a: f64,
    x: f64,
    coef_a: Complex64,
    coef_b: Complex64,
) -> Result<f64> {
    let z = to_z(a, x)?;
    if !(RESIDUAL_Z_MIN..=RESIDUAL_Z_MAX).contains(&z) {
        return Err(Error::DomainError(format!(
            "residual needs {RESIDUAL_Z_MIN} <= x/(2 sqrt a) <= {RESIDUAL_Z_MAX}, got {z}"
        )));
    }
    let scale = 2.0 * a.sqrt();
    let d = derivatives(
        |t| homogeneous_eval(n, a, scale * t, coef_a, coef_b),
        z,
        DEFAULT_STEP,
    )?;
    let (first, second) = (d.first / scale, d.second / (scale * scale));
    let nn = (n * n) as f64;
    let residual = second * (x * x - 4.0 * a) + first * (3.0 * x) - d.value * nn;
    Ok(residual.norm() / d.value.norm().max(1.0))
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ConstantsFit {
    #[serde(serialize_with = "super::serialize_complex")]
    pub a: Complex64,
    #[serde(serialize_with = "super::serialize_complex")]
    pub b: Complex64,
    pub residual_norm: f64,
    pub condition: f64,
}

/// Columns `P(z_j)` and `Q(z_j)` for the sample points.
pub fn design_columns(n: usize, a: f64, xs: &[f64]) -> Result<(Vec<Complex64>, Vec<Complex64>)> {
    let params = LegendreParams::new(n)?;
    let mut p_col = Vec::with_capacity(xs.len());
    let mut q_col = Vec::with_capacity(xs.len());
    for &x in xs {
        let z = to_z(a, x)?;
        p_col.push(legendre_p_half(&params, z)?);
        q_col.push(legendre_q_half(&params, z)?);
    }
    Ok((p_col, q_col))
}

/// Least-squares `A p + B q ~ target` by a two-column Gram-Schmidt QR.
pub fn least_squares_pair(
    p_col: &[Complex64],
    q_col: &[Complex64],
    target: &[Complex64],
) -> Result<ConstantsFit> {
    assert_eq!(p_col.len(), q_col.len());
    assert_eq!(p_col.len(), target.len());
    let dot = |u: &[Complex64], v: &[Complex64]| -> Complex64 {
        u.iter().zip(v).map(|(a, b)| a.conj() * b).sum()
    };
    let norm = |u: &[Complex64]| u.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();

    let r11 = norm(p_col);
    if r11 == 0.0 {
        return Err(Error::IllConditioned(f64::INFINITY));
    }
    let q1: Vec<Complex64> = p_col.iter().map(|c| c / r11).collect();
    let mut v = q_col.to_vec();
    let mut r12 = Complex64::new(0.0, 0.0);
    // two passes keep the second column orthogonal to working precision
    for _ in 0..2 {
        let proj = dot(&q1, &v);
        r12 += proj;
        for (vi, qi) in v.iter_mut().zip(&q1) {
            *vi -= proj * qi;
        }
    }
    let r22 = norm(&v);
    let fro = r11 * r11 + r12.norm_sqr() + r22 * r22;
    let det = r11 * r22;
    let sigma_max = ((fro + (fro * fro - 4.0 * det * det).max(0.0).sqrt()) / 2.0).sqrt();
    let condition = if det == 0.0 {
        f64::INFINITY
    } else {
        sigma_max * sigma_max / det
    };
    if condition.is_nan() || condition > MAX_CONDITION {
        return Err(Error::IllConditioned(condition));
    }
    let q2: Vec<Complex64> = v.iter().map(|c| c / r22).collect();
    let c1 = dot(&q1, target);
    let c2 = dot(&q2, target);
    let b = c2 / r22;
    let a = (c1 - r12 * b) / r11;
    let residual_norm = target
        .iter()
        .zip(p_col.iter().zip(q_col))
        .map(|(t, (p, q))| (t - a * p - b * q).norm_sqr())
        .sum::<f64>()
        .sqrt();
    Ok(ConstantsFit {
        a,
        b,
        residual_norm,
        condition,
    })
}

/// Fits `A`, `B` to arbitrary target values already multiplied by `(x^2-4a)^(1/4)`.
pub fn fit_targets(n: usize, a: f64, xs: &[f64], target: &[Complex64]) -> Result<ConstantsFit> {
    if xs.len() < MIN_SAMPLES {
        return Err(Error::DomainError(format!(
            "need at least {MIN_SAMPLES} sample points, got {}",
            xs.len()
        )));
    }
    if xs.len() != target.len() {
        return Err(Error::DomainError(
            "targets and samples differ in length".into(),
        ));
    }
    let (p_col, q_col) = design_columns(n, a, xs)?;
    least_squares_pair(&p_col, &q_col, target)
}

/// Determines `A`, `B` so that the homogeneous part matches `F_n - F_p` at the
/// sample points.
pub fn fit_constants(n: usize, a: f64, xs: &[f64]) -> Result<ConstantsFit> {
    check_parameter(a)?;
    let exact_a = BigRational::from_float(a).ok_or(Error::NonFinite)?;
    let particular = particular_solution(n, &exact_a)?;
    let remainder = &third_kind(n).specialize_a(&exact_a) - &particular.to_poly();
    let target = xs
        .iter()
        .map(|&x| {
            to_z(a, x)?;
            let scale = (x * x - 4.0 * a).powf(0.25);
            Ok(Complex64::new(remainder.eval_f64(x, a) * scale, 0.0))
        })
        .collect::<Result<Vec<_>>>()?;
    fit_targets(n, a, xs, &target)
}

/// Evenly spaced sample points strictly inside the evaluation strip.
pub fn default_samples(a: f64, count: usize) -> Vec<f64> {
    let root = a.sqrt();
    let (lo, hi) = (2.2 * root, 5.6 * root);
    let steps = count.max(2) - 1;
    (0..count)
        .map(|i| lo + (hi - lo) * i as f64 / steps as f64)
        .collect()
}
