//! Dickson polynomials over prime fields `F_p`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::Serialize;

use super::families::kth_kind;
use crate::error::{Error, Result};
use crate::exactalg::ParamPoly;

/// Default upper bound (exclusive) on `p` for exhaustive permutation checks.
pub const PERMUTATION_BOUND: u64 = 1 << 16;

/// Largest modulus accepted; keeps products of reduced values inside `u64`.
pub const MAX_MODULUS: u64 = u32::MAX as u64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct PrimeFieldElem {
    value: u64,
    modulus: u64,
}

impl PrimeFieldElem {
    /// Reduces `value` modulo `p`; rejects composite or oversized moduli.
    pub fn new(value: i64, p: u64) -> Result<Self> {
        if p > MAX_MODULUS || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Self {
            value: value.rem_euclid(p as i64) as u64,
            modulus: p,
        })
    }

    pub fn value(self) -> u64 {
        self.value
    }

    pub fn modulus(self) -> u64 {
        self.modulus
    }

    fn with_value(self, value: u64) -> Self {
        Self {
            value: value % self.modulus,
            modulus: self.modulus,
        }
    }
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn mul_mod(x: u64, y: u64, p: u64) -> u64 {
    x * y % p
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Reduces a rational modulo a prime; `None` when `p` divides the denominator.
pub fn reduce_rational(q: &BigRational, p: u64) -> Option<u64> {
    let pb = BigInt::from(p);
    let num = q.numer().mod_floor(&pb).to_u64()?;
    let den = q.denom().mod_floor(&pb).to_u64()?;
    if den == 0 {
        return None;
    }
    // Fermat inverse
    Some(mul_mod(num, pow_mod(den, p - 2, p), p))
}

/// A polynomial reduced modulo `p` with the parameter fixed to `a`;
/// `coeffs[k]` is the coefficient of `x^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldPoly {
    coeffs: Vec<u64>,
    modulus: u64,
}

impl FieldPoly {
    pub fn reduce(poly: &ParamPoly, a: PrimeFieldElem) -> Result<Self> {
        let p = a.modulus;
        let coeffs = poly
            .coeffs()
            .iter()
            .map(|c| {
                c.coeffs().iter().rev().try_fold(0u64, |acc, q| {
                    let r = reduce_rational(q, p).ok_or(Error::NotReducible(p))?;
                    Ok((mul_mod(acc, a.value, p) + r) % p)
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { coeffs, modulus: p })
    }

    pub fn eval(&self, x: u64) -> u64 {
        let p = self.modulus;
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, c| (mul_mod(acc, x % p, p) + c) % p)
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }
}

/// `D_{n,k}(x, a)` in `F_p`.
pub fn ff_eval(n: usize, k: u32, a: PrimeFieldElem, x: PrimeFieldElem) -> Result<PrimeFieldElem> {
    if a.modulus != x.modulus {
        return Err(Error::ModulusMismatch(a.modulus, x.modulus));
    }
    let reduced = FieldPoly::reduce(&kth_kind(n, k), a)?;
    Ok(x.with_value(reduced.eval(x.value)))
}

/// Whether `x -> D_{n,k}(x, a)` permutes `F_p`, by exhaustive image check.
pub fn ff_is_permutation(n: usize, k: u32, a: PrimeFieldElem) -> Result<bool> {
    ff_is_permutation_bounded(n, k, a, PERMUTATION_BOUND)
}

pub fn ff_is_permutation_bounded(n: usize, k: u32, a: PrimeFieldElem, bound: u64) -> Result<bool> {
    let p = a.modulus;
    if p >= bound {
        return Err(Error::BoundExceeded { modulus: p, bound });
    }
    let reduced = FieldPoly::reduce(&kth_kind(n, k), a)?;
    let mut seen = vec![false; p as usize];
    for x in 0..p {
        let y = reduced.eval(x) as usize;
        if std::mem::replace(&mut seen[y], true) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// One row of a permutation survey.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PermutationRow {
    pub p: u64,
    pub n: usize,
    pub k: u32,
    pub a: u64,
    pub is_permutation: bool,
}

/// All `(n, k, a)` with `a != 0` for a fixed prime, in lexicographic order.
pub fn permutation_survey(p: u64, n_max: usize, k_max: u32) -> Result<Vec<PermutationRow>> {
    let items: Vec<(usize, u32, u64)> = (0..=n_max)
        .flat_map(|n| (0..=k_max).flat_map(move |k| (1..p).map(move |a| (n, k, a))))
        .collect();
    crate::sweep::map(items, |(n, k, a)| {
        let elem = PrimeFieldElem::new(a as i64, p)?;
        Ok(PermutationRow {
            p,
            n,
            k,
            a,
            is_permutation: ff_is_permutation(n, k, elem)?,
        })
    })
    .into_iter()
    .collect()
}
