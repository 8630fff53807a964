//! Double-precision special functions: gamma, Pochhammer, Gauss `2F1`,
//! the order-1/2 Legendre functions, and the homogeneous solutions of the
//! third-kind Dickson ODE built from them.

mod diff;
mod gamma;
mod homogeneous;
mod hyp2f1;
mod legendre;

pub use diff::{derivatives, Derivatives, DEFAULT_STEP};
pub use gamma::{gamma_fn, pochhammer};
pub use homogeneous::{
    default_samples, design_columns, fit_constants, fit_targets, homogeneous_eval,
    homogeneous_ode_residual, least_squares_pair, ConstantsFit, MAX_CONDITION, MIN_SAMPLES,
};
pub use hyp2f1::{hyp2f1, MAX_TERMS, UNIT_CIRCLE_MARGIN};
pub use legendre::{
    assoc_legendre_ode_residual, legendre_half, legendre_p_half, legendre_q_half, LegendreKind,
    LegendreParams, RESIDUAL_Z_MAX, RESIDUAL_Z_MIN,
};
pub use num_complex::Complex64 as Complex;

/// Relative ODE residual threshold used by default.
pub const DEFAULT_RESIDUAL_TOL: f64 = 1e-6;

/// Serializes a complex value as `{"re": .., "im": ..}`.
pub fn serialize_complex<S: serde::Serializer>(
    z: &Complex,
    serializer: S,
) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeStruct;
    let mut st = serializer.serialize_struct("Complex", 2)?;
    st.serialize_field("re", &z.re)?;
    st.serialize_field("im", &z.im)?;
    st.end()
}
