//! Homogeneous ODEs of the shape
//! `(A4 x^4 + a A2 x^2 + a^2 A0) f'' + (B3 x^3 + a B1 x) f' - (C2 x^2 + a C0) f = 0`
//! satisfied by a given polynomial, found as an exact null space.

use std::collections::BTreeSet;

use num_rational::BigRational;
use serde::ser::{Serialize, SerializeStruct, Serializer};

use super::form::OdeForm;
use super::nullspace::null_space;
use crate::dickson::kth_kind;
use crate::error::{Error, Result};
use crate::exactalg::{rational_to_string, ParamPoly, UniPolyA};

pub const STOLL_LABELS: [&str; 7] = ["A4", "A2", "A0", "B3", "B1", "C2", "C0"];

/// Coefficient vector `(A4, A2, A0, B3, B1, C2, C0)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StollVector(pub [BigRational; 7]);

impl StollVector {
    fn from_slice(v: &[BigRational]) -> Self {
        Self(std::array::from_fn(|i| v[i].clone()))
    }

    /// The ODE this vector describes, as an [`OdeForm`].
    pub fn to_form(&self) -> Result<OdeForm> {
        let [a4, a2, a0, b3, b1, c2, c0] = &self.0;
        let term = |c: &BigRational, xdeg: usize, adeg: usize| {
            ParamPoly::monomial(UniPolyA::monomial(c.clone(), adeg), xdeg)
        };
        let p = &(&term(a4, 4, 0) + &term(a2, 2, 1)) + &term(a0, 0, 2);
        let q = &term(b3, 3, 0) + &term(b1, 1, 1);
        let r = -(&term(c2, 2, 0) + &term(c0, 0, 1));
        OdeForm::homogeneous(p, q, r)
    }

    /// Exact residual of `f` under this ODE, by direct polynomial expansion.
    pub fn residual(&self, f: &ParamPoly) -> Result<ParamPoly> {
        Ok(self.to_form()?.residual(f))
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(num_traits::Zero::is_zero)
    }
}

impl Serialize for StollVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("StollVector", 7)?;
        for (label, v) in STOLL_LABELS.iter().zip(&self.0) {
            st.serialize_field(label, &rational_to_string(v))?;
        }
        st.end()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct StollBasis {
    pub n: usize,
    pub k: u32,
    pub basis: Vec<StollVector>,
}

impl StollBasis {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    /// Re-expands every basis vector against `D_{n,k}`.
    pub fn verify(&self) -> Result<bool> {
        let f = kth_kind(self.n, self.k);
        for v in &self.basis {
            if !v.residual(&f)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Contribution of each unknown to the residual, in label order.
fn template_terms(f: &ParamPoly) -> [ParamPoly; 7] {
    let d1 = f.derivative();
    let d2 = d1.derivative();
    let shift = |p: &ParamPoly, xdeg: usize, adeg: usize, sign: i64| {
        let m = ParamPoly::monomial(UniPolyA::monomial(crate::exactalg::int(sign), adeg), xdeg);
        &m * p
    };
    [
        shift(&d2, 4, 0, 1),
        shift(&d2, 2, 1, 1),
        shift(&d2, 0, 2, 1),
        shift(&d1, 3, 0, 1),
        shift(&d1, 1, 1, 1),
        shift(f, 2, 0, -1),
        shift(f, 0, 1, -1),
    ]
}

/// Null space of the coefficient-matching system for an arbitrary polynomial.
pub fn fit_stoll_poly(f: &ParamPoly) -> Vec<StollVector> {
    let terms = template_terms(f);
    let monomials: BTreeSet<(usize, usize)> = terms
        .iter()
        .flat_map(|t| {
            t.coeffs().iter().enumerate().flat_map(|(xd, c)| {
                c.coeffs()
                    .iter()
                    .enumerate()
                    .filter(|(_, q)| !num_traits::Zero::is_zero(*q))
                    .map(move |(ad, _)| (xd, ad))
            })
        })
        .collect();
    let rows: Vec<Vec<BigRational>> = monomials
        .iter()
        .map(|&(xd, ad)| terms.iter().map(|t| t.coeff(xd).coeff(ad)).collect())
        .collect();
    null_space(&rows, 7)
        .iter()
        .map(|v| StollVector::from_slice(v))
        .collect()
}

/// All Stoll-form ODEs annihilating `D_{n,k}`.
pub fn fit_stoll(n: usize, k: u32) -> Result<StollBasis> {
    if n < 2 {
        return Err(Error::UnsupportedIndex(n));
    }
    let basis = fit_stoll_poly(&kth_kind(n, k));
    if basis.is_empty() {
        return Err(Error::EmptyBasis { n, k });
    }
    Ok(StollBasis { n, k, basis })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::int;
    use crate::ode::nullspace::rank;

    #[test]
    fn first_kind_quadratic_has_hand_family() {
        let basis = fit_stoll(2, 0).unwrap();
        assert!(basis.dimension() >= 2);
        assert!(basis.verify().unwrap());
        // the first-kind ODE times (x^2 + c a), for c = 0, 1, -3
        let f = kth_kind(2, 0);
        for c in [0i64, 1, -3] {
            let v = StollVector([
                int(1),
                int(c - 4),
                int(-4 * c),
                int(1),
                int(c),
                int(4),
                int(4 * c),
            ]);
            assert!(v.residual(&f).unwrap().is_zero(), "c = {c}");
        }
    }

    #[test]
    fn higher_kinds_nonempty() {
        for (n, k) in [(3, 1), (3, 2), (5, 3)] {
            let basis = fit_stoll(n, k).unwrap();
            assert!(basis.verify().unwrap());
            let vecs: Vec<Vec<BigRational>> = basis.basis.iter().map(|v| v.0.to_vec()).collect();
            assert_eq!(rank(&vecs), basis.dimension());
            assert!(basis.basis.iter().all(|v| !v.is_zero()));
        }
    }

    #[test]
    fn rejects_small_n() {
        assert_eq!(fit_stoll(1, 0).unwrap_err(), Error::UnsupportedIndex(1));
    }

    #[test]
    fn non_dickson_polynomial_can_have_trivial_basis() {
        // x^3 + x^2 + 1 has no such ODE
        let f = &(&ParamPoly::x().pow(3) + &ParamPoly::x().pow(2)) + &ParamPoly::one();
        assert!(fit_stoll_poly(&f).is_empty());
    }
}
