use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::Serialize;

use crate::exactalg::{int, ParamPoly, UniPolyA};

/// Which Dickson-type family a polynomial belongs to.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    FirstKind,
    SecondKind,
    /// The `(k+1)`-th kind `D_{n,k}`; `k = 2` is the third kind.
    KthKind(u32),
    /// Two-parameter family with real parameter restricted to rationals.
    DicksonType(BigRational),
}

impl FamilyKind {
    /// Constant `f_0`. For `D_{n,k}` the closed form is `0/0` at `n = 0`;
    /// `2 - k` matches the first and second kinds at `k = 0, 1`.
    pub fn initial_constant(&self) -> BigRational {
        match self {
            FamilyKind::FirstKind => int(2),
            FamilyKind::SecondKind => int(1),
            FamilyKind::KthKind(k) => int(2 - i64::from(*k)),
            FamilyKind::DicksonType(b) => b.clone(),
        }
    }

    /// Weight multiplying `C(n-i, i) (-a)^i` in the closed-form sum.
    fn weight(&self, n: usize, i: usize) -> BigRational {
        let (n, i) = (n as i64, i as i64);
        match self {
            FamilyKind::FirstKind => BigRational::new(n.into(), (n - i).into()),
            FamilyKind::SecondKind => BigRational::one(),
            FamilyKind::KthKind(k) => {
                BigRational::new((n - i64::from(*k) * i).into(), (n - i).into())
            }
            FamilyKind::DicksonType(b) => (int(n) + (b - int(2)) * int(i)) / int(n - i),
        }
    }
}

/// A family together with its degree index.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FamilySpec {
    pub kind: FamilyKind,
    pub n: usize,
}

impl FamilySpec {
    pub fn new(kind: FamilyKind, n: usize) -> Self {
        Self { kind, n }
    }

    /// Closed-form (Waring-type) expansion.
    pub fn build(&self) -> ParamPoly {
        let n = self.n;
        if n == 0 {
            return ParamPoly::from_rational(self.kind.initial_constant());
        }
        let rows = pascal_rows(n);
        let mut coeffs = vec![UniPolyA::zero(); n + 1];
        for i in 0..=n / 2 {
            let binom = BigRational::from_integer(rows[n - i][i].clone());
            let mut c = self.kind.weight(n, i) * binom;
            if i % 2 == 1 {
                c = -c;
            }
            coeffs[n - 2 * i] = UniPolyA::monomial(c, i);
        }
        ParamPoly::from_coeffs(coeffs)
    }

    /// Three-term recurrence `f_n = x f_{n-1} - a f_{n-2}` from `(f_0, x)`.
    pub fn by_recurrence(&self) -> ParamPoly {
        let f0 = ParamPoly::from_rational(self.kind.initial_constant());
        if self.n == 0 {
            return f0;
        }
        let x = ParamPoly::x();
        let a = UniPolyA::a();
        let (mut prev, mut cur) = (f0, x.clone());
        for _ in 1..self.n {
            let next = &(&x * &cur) - &prev.scale(&a);
            prev = std::mem::replace(&mut cur, next);
        }
        cur
    }
}

/// Rows `0..=n` of Pascal's triangle.
pub fn pascal_rows(n: usize) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(n + 1);
    rows.push(vec![BigInt::one()]);
    for m in 1..=n {
        let prev = &rows[m - 1];
        let mut row = Vec::with_capacity(m + 1);
        row.push(BigInt::one());
        for j in 1..m {
            row.push(&prev[j - 1] + &prev[j]);
        }
        row.push(BigInt::one());
        rows.push(row);
    }
    rows
}

/// `D_n(x, a)`.
pub fn first_kind(n: usize) -> ParamPoly {
    FamilySpec::new(FamilyKind::FirstKind, n).build()
}

/// `E_n(x, a)`.
pub fn second_kind(n: usize) -> ParamPoly {
    FamilySpec::new(FamilyKind::SecondKind, n).build()
}

/// `D_{n,k}(x, a)`; `kth_kind(n, 2)` is the third kind `F_n`.
pub fn kth_kind(n: usize, k: u32) -> ParamPoly {
    FamilySpec::new(FamilyKind::KthKind(k), n).build()
}

/// `F_n(x, a)`.
pub fn third_kind(n: usize) -> ParamPoly {
    kth_kind(n, 2)
}

/// `f_n(x)` with parameter `B`.
pub fn dickson_type(n: usize, b: BigRational) -> ParamPoly {
    FamilySpec::new(FamilyKind::DicksonType(b), n).build()
}

pub fn by_recurrence(spec: &FamilySpec) -> ParamPoly {
    spec.by_recurrence()
}

/// Serializable description of a constructed family, used by the CLI.
#[derive(Clone, Debug, Serialize)]
pub struct FamilyListing {
    pub n: usize,
    pub family: String,
    pub text: String,
    pub coefficients: ParamPoly,
}

impl FamilyListing {
    pub fn new(spec: &FamilySpec, poly: ParamPoly) -> Self {
        let family = match &spec.kind {
            FamilyKind::FirstKind => "first".to_string(),
            FamilyKind::SecondKind => "second".to_string(),
            FamilyKind::KthKind(k) => format!("kth(k={k})"),
            FamilyKind::DicksonType(b) => format!("type(B={b})"),
        };
        Self {
            n: spec.n,
            family,
            text: poly.to_string(),
            coefficients: poly,
        }
    }
}

/// True when every coefficient rational has denominator one.
pub fn has_integer_coefficients(p: &ParamPoly) -> bool {
    p.coeffs()
        .iter()
        .flat_map(|c| c.coeffs())
        .all(|q| q.denom().is_one())
}

/// True when only monomials `x^{n-2i}` appear.
pub fn has_parity(p: &ParamPoly, n: usize) -> bool {
    p.coeffs()
        .iter()
        .enumerate()
        .all(|(k, c)| c.is_zero() || (k <= n && (n - k).is_multiple_of(2)))
}

pub fn is_monic_of_degree(p: &ParamPoly, n: usize) -> bool {
    p.degree() == Some(n) && p.leading_coeff().is_some_and(|c| *c == UniPolyA::one())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::ratio;

    fn x() -> ParamPoly {
        ParamPoly::x()
    }
    fn a() -> ParamPoly {
        ParamPoly::a()
    }
    fn c(v: i64) -> ParamPoly {
        ParamPoly::from_int(v)
    }

    #[test]
    fn first_kind_examples() {
        assert_eq!(first_kind(0), c(2));
        assert_eq!(first_kind(2), &x().pow(2) - &(&c(2) * &a()));
        assert_eq!(first_kind(3), &x().pow(3) - &(&c(3) * &(&a() * &x())));
    }

    #[test]
    fn second_kind_examples() {
        assert_eq!(second_kind(0), c(1));
        assert_eq!(second_kind(2), &x().pow(2) - &a());
        assert_eq!(second_kind(3), &x().pow(3) - &(&c(2) * &(&a() * &x())));
    }

    #[test]
    fn kth_kind_examples() {
        assert_eq!(kth_kind(3, 2), &x().pow(3) - &(&a() * &x()));
        assert_eq!(kth_kind(2, 2), x().pow(2));
        assert!(kth_kind(0, 2).is_zero());
        assert_eq!(kth_kind(0, 0), c(2));
        assert_eq!(kth_kind(0, 1), c(1));
    }

    #[test]
    fn low_kinds_coincide() {
        for n in 0..20 {
            assert_eq!(kth_kind(n, 0), first_kind(n));
            assert_eq!(kth_kind(n, 1), second_kind(n));
        }
    }

    #[test]
    fn dickson_type_examples() {
        assert_eq!(dickson_type(3, int(2)), first_kind(3));
        assert_eq!(dickson_type(3, int(1)), second_kind(3));
        assert_eq!(dickson_type(3, int(0)), kth_kind(3, 2));
        assert_eq!(
            dickson_type(0, ratio(3, 7)),
            ParamPoly::from_rational(ratio(3, 7))
        );
    }

    #[test]
    fn recurrence_examples() {
        let spec = FamilySpec::new(FamilyKind::KthKind(2), 2);
        assert_eq!(spec.by_recurrence(), x().pow(2));
        let spec = FamilySpec::new(FamilyKind::FirstKind, 2);
        assert_eq!(spec.by_recurrence(), &x().pow(2) - &(&c(2) * &a()));
        let spec = FamilySpec::new(FamilyKind::SecondKind, 3);
        assert_eq!(spec.by_recurrence(), second_kind(3));
    }

    #[test]
    fn rational_b_recurrence_matches_closed_form() {
        for n in 0..16 {
            let spec = FamilySpec::new(FamilyKind::DicksonType(ratio(-5, 3)), n);
            assert_eq!(spec.by_recurrence(), spec.build(), "n = {n}");
        }
    }

    #[test]
    fn pascal() {
        let rows = pascal_rows(6);
        assert_eq!(rows[6][3], BigInt::from(20));
        assert_eq!(rows[5].len(), 6);
    }
}
