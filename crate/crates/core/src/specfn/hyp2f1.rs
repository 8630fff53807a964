use num_complex::Complex64;

use crate::error::{Error, Result};

/// Closest approach to the unit circle allowed for the series argument.
pub const UNIT_CIRCLE_MARGIN: f64 = 1e-3;
pub const MAX_TERMS: usize = 10_000;
const REL_TOL: f64 = 1e-16;
const QUIET_TERMS: usize = 3;

/// Gauss hypergeometric `2F1(a, b; c; z)` by its power series, `|z| <= 1 - 1e-3`.
///
/// Summation stops once three consecutive terms fall below `1e-16 |sum|`.
/// Terms and partial sums use double-double arithmetic internally.
pub fn hyp2f1(a: f64, b: f64, c: f64, z: Complex64) -> Result<Complex64> {
    if ![a, b, c, z.re, z.im].iter().all(|v| v.is_finite()) {
        return Err(Error::NonFinite);
    }
    if c <= 0.0 && c.fract() == 0.0 {
        return Err(Error::ParameterPole(c));
    }
    if z.norm() > 1.0 - UNIT_CIRCLE_MARGIN {
        return Err(Error::DomainError(format!(
            "|z| = {} is too close to the unit circle",
            z.norm()
        )));
    }
    let mut sum = DdComplex::one();
    let mut term = DdComplex::one();
    let mut quiet = 0;
    for k in 0..MAX_TERMS {
        let kf = k as f64;
        let ratio = (Dd::from_sum(a, kf) * Dd::from_sum(b, kf))
            / (Dd::from_sum(c, kf) * Dd::from(kf + 1.0));
        term = term.scale(ratio).mul_f64(z);
        sum = sum + term;
        if term.norm() <= REL_TOL * sum.norm() {
            quiet += 1;
            if quiet == QUIET_TERMS {
                return Ok(sum.to_complex());
            }
        } else {
            quiet = 0;
        }
    }
    Err(Error::ConvergenceError(MAX_TERMS))
}

/// Unevaluated sum `hi + lo` with `|lo| <= ulp(hi) / 2`.
#[derive(Clone, Copy, Debug, PartialEq)]
struct Dd {
    hi: f64,
    lo: f64,
}

fn two_sum(a: f64, b: f64) -> Dd {
    let s = a + b;
    let bb = s - a;
    let err = (a - (s - bb)) + (b - bb);
    Dd { hi: s, lo: err }
}

fn quick_two_sum(a: f64, b: f64) -> Dd {
    let s = a + b;
    Dd {
        hi: s,
        lo: b - (s - a),
    }
}

fn two_prod(a: f64, b: f64) -> Dd {
    let p = a * b;
    Dd {
        hi: p,
        lo: a.mul_add(b, -p),
    }
}

impl Dd {
    fn from_sum(a: f64, b: f64) -> Self {
        two_sum(a, b)
    }

    fn mul_f64(self, b: f64) -> Self {
        let p = two_prod(self.hi, b);
        quick_two_sum(p.hi, p.lo + self.lo * b)
    }
}

impl From<f64> for Dd {
    fn from(v: f64) -> Self {
        Dd { hi: v, lo: 0.0 }
    }
}

impl std::ops::Add for Dd {
    type Output = Dd;
    fn add(self, rhs: Dd) -> Dd {
        let s = two_sum(self.hi, rhs.hi);
        let t = two_sum(self.lo, rhs.lo);
        let s = quick_two_sum(s.hi, s.lo + t.hi);
        quick_two_sum(s.hi, s.lo + t.lo)
    }
}

impl std::ops::Sub for Dd {
    type Output = Dd;
    fn sub(self, rhs: Dd) -> Dd {
        self + Dd {
            hi: -rhs.hi,
            lo: -rhs.lo,
        }
    }
}

impl std::ops::Mul for Dd {
    type Output = Dd;
    fn mul(self, rhs: Dd) -> Dd {
        let p = two_prod(self.hi, rhs.hi);
        quick_two_sum(p.hi, p.lo + (self.hi * rhs.lo + self.lo * rhs.hi))
    }
}

impl std::ops::Div for Dd {
    type Output = Dd;
    fn div(self, rhs: Dd) -> Dd {
        let q1 = self.hi / rhs.hi;
        let r = self - rhs.mul_f64(q1);
        let q2 = r.hi / rhs.hi;
        let r = r - rhs.mul_f64(q2);
        let q3 = r.hi / rhs.hi;
        let q = quick_two_sum(q1, q2);
        q + Dd::from(q3)
    }
}

#[derive(Clone, Copy, Debug)]
struct DdComplex {
    re: Dd,
    im: Dd,
}

impl DdComplex {
    fn one() -> Self {
        Self {
            re: Dd::from(1.0),
            im: Dd::from(0.0),
        }
    }

    fn scale(self, s: Dd) -> Self {
        Self {
            re: self.re * s,
            im: self.im * s,
        }
    }

    fn mul_f64(self, z: Complex64) -> Self {
        Self {
            re: self.re.mul_f64(z.re) - self.im.mul_f64(z.im),
            im: self.re.mul_f64(z.im) + self.im.mul_f64(z.re),
        }
    }

    fn norm(self) -> f64 {
        self.re.hi.hypot(self.im.hi)
    }

    fn to_complex(self) -> Complex64 {
        Complex64::new(self.re.hi + self.re.lo, self.im.hi + self.im.lo)
    }
}

impl std::ops::Add for DdComplex {
    type Output = DdComplex;
    fn add(self, rhs: DdComplex) -> DdComplex {
        DdComplex {
            re: self.re + rhs.re,
            im: self.im + rhs.im,
        }
    }
}
