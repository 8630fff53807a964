//! Polynomial particular solution of
//! `(x^2-4a) F'' + 3x F' - n^2 F = 2n D_n(x, a)` for a fixed rational `a`.

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::ser::{Serialize, SerializeStruct, Serializer};

use super::form::{known_form, KnownOde};
use crate::dickson::{first_kind, third_kind};
use crate::error::{Error, Result};
use crate::exactalg::{int, rational_to_string, ParamPoly};

/// Coefficients `b_0..=b_n` of `F_p(x) = sum b_k x^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParticularCoeffs {
    pub n: usize,
    pub a: BigRational,
    pub b: Vec<BigRational>,
}

impl ParticularCoeffs {
    pub fn to_poly(&self) -> ParamPoly {
        ParamPoly::from_rational_coeffs(self.b.clone())
    }
}

impl Serialize for ParticularCoeffs {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("ParticularCoeffs", 3)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("a", &rational_to_string(&self.a))?;
        let b: Vec<String> = self.b.iter().map(rational_to_string).collect();
        st.serialize_field("b", &b)?;
        st.end()
    }
}

/// Solves the coefficient-matching system from the top down.
///
/// The `x^n` equation gives `2n b_n = 2n`, the `x^{n-1}` equation gives
/// `-b_{n-1} = 0`, and for `k < n - 1`
/// `b_k = (rhs_k + 4a (k+2)(k+1) b_{k+2}) / (k(k+2) - n^2)`.
/// The divisor never vanishes because `n^2 + 1` is not a square.
pub fn particular_solution(n: usize, a: &BigRational) -> Result<ParticularCoeffs> {
    if a.is_zero() {
        return Err(Error::ZeroParameter);
    }
    if n == 0 {
        return Err(Error::UnsupportedIndex(0));
    }
    let ni = i64::try_from(n).map_err(|_| Error::UnsupportedIndex(n))?;
    let rhs: Vec<BigRational> = first_kind(n)
        .specialize_a(a)
        .rational_coeffs()
        .expect("specialized polynomial has constant coefficients")
        .into_iter()
        .map(|c| c * int(2 * ni))
        .collect();
    let rhs_at = |k: usize| rhs.get(k).cloned().unwrap_or_else(BigRational::zero);

    let mut b = vec![BigRational::zero(); n + 1];
    b[n] = BigRational::one();
    for k in (0..n.saturating_sub(1)).rev() {
        let kk = k as i64;
        let divisor = int(kk * (kk + 2) - ni * ni);
        let carried = int(4 * (kk + 2) * (kk + 1)) * a * &b[k + 2];
        b[k] = (rhs_at(k) + carried) / divisor;
    }
    Ok(ParticularCoeffs { n, a: a.clone(), b })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub particular: ParticularCoeffs,
    /// `F_n(x, a) - F_p(x)` at the fixed `a`.
    pub remainder: ParamPoly,
    pub remainder_is_homogeneous_solution: bool,
}

impl Serialize for Decomposition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("Decomposition", 3)?;
        st.serialize_field("particular", &self.particular)?;
        let rem: Vec<String> = self
            .remainder
            .rational_coeffs()
            .unwrap_or_default()
            .iter()
            .map(rational_to_string)
            .collect();
        st.serialize_field("remainder", &rem)?;
        st.serialize_field(
            "remainder_is_homogeneous_solution",
            &self.remainder_is_homogeneous_solution,
        )?;
        st.end()
    }
}

/// Splits `F_n` into the particular solution plus a homogeneous remainder.
pub fn decompose(n: usize, a: &BigRational) -> Result<Decomposition> {
    let particular = particular_solution(n, a)?;
    let remainder = &third_kind(n).specialize_a(a) - &particular.to_poly();
    let homogeneous = known_form(KnownOde::ThirdNonhomogeneous, n)?
        .associated_homogeneous()
        .specialize_a(a);
    let remainder_is_homogeneous_solution = homogeneous.residual(&remainder).is_zero();
    Ok(Decomposition {
        particular,
        remainder,
        remainder_is_homogeneous_solution,
    })
}

/// Whether `F_p` satisfies the non-homogeneous equation at its `a`.
pub fn particular_satisfies_ode(coeffs: &ParticularCoeffs) -> Result<bool> {
    let form = known_form(KnownOde::ThirdNonhomogeneous, coeffs.n)?.specialize_a(&coeffs.a);
    Ok(form.residual(&coeffs.to_poly()).is_zero())
}
