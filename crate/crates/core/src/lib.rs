//! Self-similar and traveling-wave solutions of a 1D compressible flow with
//! heat conduction, together with the machinery needed to check them: special
//! functions, equation-of-state exponent algebra, closed-form solution
//! families, an explicit finite-difference solver, and a residual/collapse
//! verification layer.
//!
//! The governing system is
//!
//! ```text
//! rho_t + (rho v)_x = 0
//! v_t + v v_x       = -p_x / rho
//! T_t + v T_x       = lambda T_xx
//! ```
//!
//! closed by one of several pressure laws p(rho, T). Solution families come in
//! two flavors per field: the form as printed in the source material
//! ([`analytic::EvalMode::AsPrinted`]) and the form that actually satisfies
//! the equations ([`analytic::EvalMode::Corrected`]); the two coincide except
//! where the printed text has a typo, and [`verify::erratum_report`] documents
//! every place they differ.

// Guards are spelled `!(x > 0.0)` on purpose: the negation rejects NaN along
// with the wrong sign, where `x <= 0.0` would wave NaN through.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod analytic;
pub mod eos;
pub mod error;
pub mod solver;
pub mod specfun;
pub mod verify;

pub use error::{Error, Result};
