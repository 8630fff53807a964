use num_complex::Complex64;

use crate::error::Result;

/// Base step for the central differences.
pub const DEFAULT_STEP: f64 = 1e-4;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Derivatives {
    pub value: Complex64,
    pub first: Complex64,
    pub second: Complex64,
}

/// Value, first and second derivative by central differences at steps `h`
/// and `2h`, combined with one Richardson step.
pub fn derivatives<F>(f: F, z: f64, h: f64) -> Result<Derivatives>
where
    F: Fn(f64) -> Result<Complex64>,
{
    let f0 = f(z)?;
    let (p1, m1) = (f(z + h)?, f(z - h)?);
    let (p2, m2) = (f(z + 2.0 * h)?, f(z - 2.0 * h)?);

    let d1_h = (p1 - m1) / (2.0 * h);
    let d1_2h = (p2 - m2) / (4.0 * h);
    let d2_h = (p1 - f0 * 2.0 + m1) / (h * h);
    let d2_2h = (p2 - f0 * 2.0 + m2) / (4.0 * h * h);

    Ok(Derivatives {
        value: f0,
        first: (d1_h * 4.0 - d1_2h) / 3.0,
        second: (d2_h * 4.0 - d2_2h) / 3.0,
    })
}
