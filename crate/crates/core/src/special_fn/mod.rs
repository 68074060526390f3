//! Gamma-family special functions and adaptive quadrature.
//!
//! Everything here is a pure function of its arguments.

mod gamma;
mod quadrature;

pub use gamma::{gamma_fn, ln_gamma, ln_upper_incomplete_gamma, upper_incomplete_gamma};
pub use quadrature::{integrate, integrate_with_error, QuadratureEstimate, QuadratureSettings};
