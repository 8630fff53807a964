use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::ser::{Serialize, SerializeSeq, Serializer};

use super::unipoly::{forward_owned, UniPolyA};

/// Dense polynomial in `x` whose coefficients live in `Q[a]`.
///
/// `coeffs[k]` is the coefficient of `x^k`. Trailing zero coefficients are
/// always trimmed, so equality is structural equality of polynomials.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ParamPoly {
    coeffs: Vec<UniPolyA>,
}

impl ParamPoly {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(UniPolyA::one())
    }

    pub fn constant(c: UniPolyA) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(UniPolyA::from_int(c))
    }

    pub fn from_rational(c: BigRational) -> Self {
        Self::constant(UniPolyA::constant(c))
    }

    /// The indeterminate `x`.
    pub fn x() -> Self {
        Self::monomial(UniPolyA::one(), 1)
    }

    /// The parameter `a` as a constant in `x`.
    pub fn a() -> Self {
        Self::constant(UniPolyA::a())
    }

    /// `c * x^k`
    pub fn monomial(c: UniPolyA, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![UniPolyA::zero(); k + 1];
        coeffs[k] = c;
        Self { coeffs }
    }

    pub fn from_coeffs(mut coeffs: Vec<UniPolyA>) -> Self {
        while coeffs.last().is_some_and(UniPolyA::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    /// Polynomial in `x` alone (coefficients independent of `a`).
    pub fn from_rational_coeffs(coeffs: Vec<BigRational>) -> Self {
        Self::from_coeffs(coeffs.into_iter().map(UniPolyA::constant).collect())
    }

    pub fn coeffs(&self) -> &[UniPolyA] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> UniPolyA {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&UniPolyA> {
        self.coeffs.last()
    }

    /// Highest power of `a` appearing anywhere.
    pub fn a_degree(&self) -> Option<usize> {
        self.coeffs.iter().filter_map(UniPolyA::degree).max()
    }

    pub fn scale(&self, c: &UniPolyA) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::from_coeffs(self.coeffs.iter().map(|k| k * c).collect())
    }

    pub fn scale_rational(&self, c: &BigRational) -> Self {
        self.scale(&UniPolyA::constant(c.clone()))
    }

    /// Exact `d/dx`.
    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.scale(&BigRational::from_integer(BigInt::from(k))))
                .collect(),
        )
    }

    pub fn nth_derivative(&self, order: usize) -> Self {
        (0..order).fold(self.clone(), |p, _| p.derivative())
    }

    /// Nested Horner evaluation: inner over `a`, outer over `x`.
    pub fn eval(&self, x: &BigRational, a: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + c.eval(a))
    }

    /// Substitute a fixed value for `a`, leaving a polynomial in `x` whose
    /// coefficients are constants.
    pub fn specialize_a(&self, a: &BigRational) -> Self {
        Self::from_rational_coeffs(self.coeffs.iter().map(|c| c.eval(a)).collect())
    }

    /// Coefficients in `x` when none of them depends on `a`.
    pub fn rational_coeffs(&self) -> Option<Vec<BigRational>> {
        self.coeffs.iter().map(UniPolyA::as_constant).collect()
    }

    /// Floating-point evaluation for fixed `a`; only meaningful when the
    /// coefficients fit in `f64`.
    pub fn eval_f64(&self, x: f64, a: f64) -> f64 {
        use num_traits::ToPrimitive;
        self.coeffs.iter().rev().fold(0.0, |acc, c| {
            let ca = c
                .coeffs()
                .iter()
                .rev()
                .fold(0.0, |s, q| s * a + q.to_f64().unwrap_or(f64::NAN));
            acc * x + ca
        })
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }
}

impl Add<&ParamPoly> for &ParamPoly {
    type Output = ParamPoly;

    fn add(self, rhs: &ParamPoly) -> ParamPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        ParamPoly::from_coeffs((0..len).map(|k| &self.coeff(k) + &rhs.coeff(k)).collect())
    }
}

impl Sub<&ParamPoly> for &ParamPoly {
    type Output = ParamPoly;

    fn sub(self, rhs: &ParamPoly) -> ParamPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        ParamPoly::from_coeffs((0..len).map(|k| &self.coeff(k) - &rhs.coeff(k)).collect())
    }
}

impl Mul<&ParamPoly> for &ParamPoly {
    type Output = ParamPoly;

    fn mul(self, rhs: &ParamPoly) -> ParamPoly {
        if self.is_zero() || rhs.is_zero() {
            return ParamPoly::zero();
        }
        let mut coeffs = vec![UniPolyA::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, p) in self.coeffs.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            for (j, q) in rhs.coeffs.iter().enumerate() {
                if q.is_zero() {
                    continue;
                }
                coeffs[i + j] = &coeffs[i + j] + &(p * q);
            }
        }
        ParamPoly::from_coeffs(coeffs)
    }
}

impl Neg for &ParamPoly {
    type Output = ParamPoly;

    fn neg(self) -> ParamPoly {
        ParamPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for ParamPoly {
    type Output = ParamPoly;

    fn neg(self) -> ParamPoly {
        -&self
    }
}

forward_owned!(ParamPoly, Add::add, Sub::sub, Mul::mul);

impl fmt::Display for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let xpow = match k {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{k}"),
            };
            // single-term coefficients carry their own sign
            let single = c.coeffs().iter().filter(|q| !q.is_zero()).count() == 1;
            let text = c.to_string();
            let (negative, body) = match text.strip_prefix('-') {
                Some(rest) if single => (true, rest.to_string()),
                _ => (false, text),
            };
            if first {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if negative { "-" } else { "+" })?;
            }
            first = false;
            let body = if single { body } else { format!("({body})") };
            match (k, body.as_str()) {
                (0, _) => write!(f, "{body}")?,
                (_, "1") => write!(f, "{xpow}")?,
                _ => write!(f, "{body}*{xpow}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for ParamPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.coeffs.len()))?;
        for c in &self.coeffs {
            seq.serialize_element(c)?;
        }
        seq.end()
    }
}

impl From<UniPolyA> for ParamPoly {
    fn from(c: UniPolyA) -> Self {
        Self::constant(c)
    }
}

impl One for ParamPoly {
    fn one() -> Self {
        ParamPoly::one()
    }
}

impl Zero for ParamPoly {
    fn zero() -> Self {
        ParamPoly::zero()
    }

    fn is_zero(&self) -> bool {
        ParamPoly::is_zero(self)
    }
}
