//! Exact rational scalars and dense polynomials in `x` over `Q[a]`.
//!
//! Scalars are [`num_rational::BigRational`], which keeps the denominator
//! positive and the fraction reduced; zero is always `0/1`.

mod parampoly;
mod unipoly;

pub use num_rational::BigRational;
pub use parampoly::ParamPoly;
pub use unipoly::UniPolyA;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::Error;

pub fn int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

pub fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `"p/q"`, `"p"`, or a plain decimal such as `"0.6"`.
pub fn parse_rational(text: &str) -> Result<BigRational, Error> {
    let text = text.trim();
    let bad = || Error::Parse(text.to_string());
    if let Some((n, d)) = text.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        return Ok(BigRational::new(n, d));
    }
    if let Some((whole, frac)) = text.split_once('.') {
        let negative = whole.starts_with('-');
        let digits = format!("{}{}", whole.trim_start_matches(['-', '+']), frac);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let n: BigInt = digits.parse().map_err(|_| bad())?;
        let d = num_traits::pow(BigInt::from(10), frac.len());
        let q = BigRational::new(n, d);
        return Ok(if negative { -q } else { q });
    }
    text.parse::<BigInt>()
        .map(BigRational::from_integer)
        .map_err(|_| bad())
}

/// `"p/q"`, or `"p"` when the denominator is one.
pub fn rational_to_string(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}
