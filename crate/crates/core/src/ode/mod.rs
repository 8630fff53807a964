//! Second-order ODEs with polynomial coefficients: exact residuals, the
//! classical Dickson ODEs, Stoll-form fitting, and the particular solution of
//! the third-kind equation.

mod form;
pub mod nullspace;
mod particular;
mod stoll;

pub use form::{
    known_form, ode_residual, singular_factor, verify_known_range, verify_lemma_third,
    IdentityCheck, KnownOde, OdeForm,
};
pub use particular::{
    decompose, particular_satisfies_ode, particular_solution, Decomposition, ParticularCoeffs,
};
pub use stoll::{fit_stoll, fit_stoll_poly, StollBasis, StollVector, STOLL_LABELS};
