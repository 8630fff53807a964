//! Associated Legendre functions of order 1/2 and degree `sqrt(n^2+1) - 1/2`,
//! written through `2F1` exactly as in their hypergeometric displays.
//!
//! Branches are principal throughout. On `z > 1` the first-kind display
//! carries the factor `((1+z)/(1-z))^(1/4)` of a negative number, so its
//! values are complex with phase `pi/4`. The second-kind display carries an
//! explicit `i` and is purely imaginary there.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::diff::{derivatives, DEFAULT_STEP};
use super::gamma::gamma_fn;
use super::hyp2f1::hyp2f1;
use crate::error::{Error, Result};

/// Lower edge of the range where ODE residuals are evaluated.
pub const RESIDUAL_Z_MIN: f64 = 1.05;
/// Upper edge of the range where ODE residuals are evaluated.
pub const RESIDUAL_Z_MAX: f64 = 2.9;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct LegendreParams {
    pub n: usize,
    /// Degree `sqrt(n^2+1) - 1/2`.
    pub nu: f64,
    /// Order, always 1/2.
    pub mu: f64,
}

impl LegendreParams {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::UnsupportedIndex(0));
        }
        Ok(Self {
            n,
            nu: root(n) - 0.5,
            mu: 0.5,
        })
    }

    /// `sqrt(n^2 + 1)`, i.e. `nu + 1/2`.
    pub fn root(&self) -> f64 {
        root(self.n)
    }
}

fn root(n: usize) -> f64 {
    let n = n as f64;
    (n * n + 1.0).sqrt()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LegendreKind {
    P,
    Q,
}

fn check_finite(z: f64) -> Result<()> {
    if z.is_finite() {
        Ok(())
    } else {
        Err(Error::NonFinite)
    }
}

/// First-kind function on `1 < z < 3`.
pub fn legendre_p_half(params: &LegendreParams, z: f64) -> Result<Complex64> {
    check_finite(z)?;
    if !(z > 1.0 && z < 3.0) {
        return Err(Error::DomainError(format!("P needs 1 < z < 3, got {z}")));
    }
    let s = params.root();
    let ratio = Complex64::new((1.0 + z) / (1.0 - z), 0.0);
    let prefactor = ratio.powf(0.25) / gamma_fn(0.5)?;
    let series = hyp2f1(0.5 - s, 0.5 + s, 0.5, Complex64::new((1.0 - z) / 2.0, 0.0))?;
    Ok(prefactor * series)
}

/// Second-kind function on `z > 1`.
pub fn legendre_q_half(params: &LegendreParams, z: f64) -> Result<Complex64> {
    check_finite(z)?;
    if z <= 1.0 {
        return Err(Error::DomainError(format!("Q needs z > 1, got {z}")));
    }
    let s = params.root();
    let scale = std::f64::consts::PI.sqrt() / 2f64.powf(s + 0.5);
    let body = (z * z - 1.0).powf(0.25) / z.powf(s + 1.0);
    let series = hyp2f1(
        (s + 1.0) / 2.0,
        (s + 2.0) / 2.0,
        s + 1.0,
        Complex64::new(1.0 / (z * z), 0.0),
    )?;
    Ok(Complex64::i() * (scale * body) * series)
}

pub fn legendre_half(params: &LegendreParams, z: f64, which: LegendreKind) -> Result<Complex64> {
    match which {
        LegendreKind::P => legendre_p_half(params, z),
        LegendreKind::Q => legendre_q_half(params, z),
    }
}

/// Relative residual of the associated Legendre equation
/// `(z^2-1) u'' + 2z u' - [l(l+1) + mu^2/(z^2-1)] u`, divided by `max(|u|, 1)`,
/// with derivatives from Richardson-extrapolated central differences.
pub fn assoc_legendre_ode_residual(
    params: &LegendreParams,
    z: f64,
    which: LegendreKind,
) -> Result<f64> {
    check_finite(z)?;
    if !(RESIDUAL_Z_MIN..=RESIDUAL_Z_MAX).contains(&z) {
        return Err(Error::DomainError(format!(
            "residual needs {RESIDUAL_Z_MIN} <= z <= {RESIDUAL_Z_MAX}, got {z}"
        )));
    }
    let d = derivatives(|t| legendre_half(params, t, which), z, DEFAULT_STEP)?;
    let l = params.nu;
    let w = z * z - 1.0;
    let residual =
        d.second * w + d.first * (2.0 * z) - d.value * (l * (l + 1.0) + params.mu * params.mu / w);
    Ok(residual.norm() / d.value.norm().max(1.0))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_is_irrational_and_positive() {
        for n in 1..50 {
            let p = LegendreParams::new(n).unwrap();
            assert!(p.nu > 0.0);
            assert!((p.nu - p.nu.round()).abs() > 1e-6);
        }
        assert!(LegendreParams::new(0).is_err());
    }

    #[test]
    fn p_phase_is_quarter_pi() {
        let params = LegendreParams::new(2).unwrap();
        let v = legendre_p_half(&params, 1.7).unwrap();
        assert!((v.arg().abs() - std::f64::consts::FRAC_PI_4).abs() < 1e-12);
    }

    #[test]
    fn q_is_imaginary() {
        let params = LegendreParams::new(3).unwrap();
        let v = legendre_q_half(&params, 1.5).unwrap();
        assert!(v.re.abs() <= 1e-12 * v.norm());
    }

    #[test]
    fn q_decays() {
        let params = LegendreParams::new(1).unwrap();
        assert!(legendre_q_half(&params, 1e6).unwrap().norm() < 1e-6);
    }

    #[test]
    fn p_blows_up_at_one() {
        // |P| ~ |1-z|^(-1/4) as z -> 1+
        let params = LegendreParams::new(1).unwrap();
        let near = legendre_p_half(&params, 1.0 + 1e-4).unwrap().norm();
        let nearer = legendre_p_half(&params, 1.0 + 1e-8).unwrap().norm();
        let ratio = nearer / near;
        assert!((ratio - 10.0).abs() < 1e-2, "ratio {ratio}");
    }

    #[test]
    fn domains() {
        let params = LegendreParams::new(1).unwrap();
        for z in [1.0, 0.5, 3.0, 4.0] {
            assert!(matches!(
                legendre_p_half(&params, z),
                Err(Error::DomainError(_))
            ));
        }
        assert!(matches!(
            legendre_q_half(&params, 1.0),
            Err(Error::DomainError(_))
        ));
        assert!(matches!(
            assoc_legendre_ode_residual(&params, 1.01, LegendreKind::P),
            Err(Error::DomainError(_))
        ));
        assert_eq!(
            legendre_q_half(&params, f64::INFINITY).unwrap_err(),
            Error::NonFinite
        );
    }
}
