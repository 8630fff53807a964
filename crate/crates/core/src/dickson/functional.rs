//! Functional equations at `x = u + a/u`.

use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::families::{first_kind, third_kind};
use crate::error::{Error, Result};
use crate::exactalg::int;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    fn apply(self, v: BigRational) -> BigRational {
        match self {
            Sign::Plus => v,
            Sign::Minus => -v,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FunctionalKind {
    /// `D_n(u + a/u, a) = u^n + (a/u)^n`
    First,
    /// `F_n(x, a) = x (u^n - (a/u)^n) / (u - a/u)`, needs `u^2 != a`
    Third,
    /// `a = u^2`: `F_n(2u, a) = 2 n (±sqrt(a))^n`, the sign picking `u`
    ThirdDegenerate(Sign),
}

/// Left side minus right side of the functional equation, evaluated exactly.
/// A zero return certifies the identity at this `(u, a)`.
pub fn functional_residual(
    kind: FunctionalKind,
    n: usize,
    u: &BigRational,
    a: &BigRational,
) -> Result<BigRational> {
    if u.is_zero() {
        return Err(Error::DegenerateInput("u must be nonzero"));
    }
    let w = a / u;
    let x = u + &w;
    let e = i32::try_from(n).map_err(|_| Error::UnsupportedIndex(n))?;
    match kind {
        FunctionalKind::First => {
            let lhs = first_kind(n).eval(&x, a);
            Ok(lhs - (num_traits::pow(u.clone(), n) + num_traits::pow(w, n)))
        }
        FunctionalKind::Third => {
            if u * u == *a {
                return Err(Error::DegenerateInput("u^2 = a needs the degenerate form"));
            }
            let lhs = third_kind(n).eval(&x, a);
            let rhs = &x * (u.pow(e) - w.pow(e)) / (u - &w);
            Ok(lhs - rhs)
        }
        FunctionalKind::ThirdDegenerate(sign) => {
            if u * u != *a {
                return Err(Error::DegenerateInput("degenerate form needs a = u^2"));
            }
            let root = sign.apply(u.abs());
            if root != *u {
                return Err(Error::DegenerateInput(
                    "sign must select the root equal to u",
                ));
            }
            let lhs = third_kind(n).eval(&x, a);
            let rhs = int(2) * int(n as i64) * root.pow(e);
            Ok(lhs - rhs)
        }
    }
}
