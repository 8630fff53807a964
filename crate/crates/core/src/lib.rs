//! Exact and numeric toolkit for Dickson polynomials and their differential
//! equations.
//!
//! - [`exactalg`]: rational polynomials in `x` over `Q[a]`
//! - [`dickson`]: the polynomial families, functional equations, prime fields
//! - [`ode`]: exact ODE residuals, Stoll-form fitting, particular solutions
//! - [`specfn`]: gamma, `2F1`, order-1/2 Legendre functions, homogeneous solutions
//! - [`sweep`]: parallel or sequential maps over independent checks

pub mod dickson;
pub mod error;
pub mod exactalg;
pub mod ode;
pub mod specfn;
pub mod sweep;

pub use error::{Error, Result};
