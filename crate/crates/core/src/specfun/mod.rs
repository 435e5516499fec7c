//! Scalar special functions used by the closed-form solution families:
//! the principal Lambert branch, confluent hypergeometric functions,
//! the dilogarithm and the log-gamma function.
//!
//! Everything here is plain f64 with explicit error reporting; the dilogarithm
//! alone works over the complex plane because the closed-form virial density
//! needs it there.

mod dilog;
mod gamma;
mod kummer;
mod lambert;

pub use dilog::{dilog, dilog_cfg, DilogConvention};
pub use gamma::{log_gamma, log_gamma_cfg};
pub use kummer::{kummer_m, kummer_m_cfg, kummer_u, kummer_u_cfg};
pub use lambert::{lambert_w0, lambert_w0_cfg};

pub(crate) use gamma::recip_gamma;
pub(crate) use lambert::lambert_w0_of_exp;

/// Complex scalar used by [`dilog`] and the closed-form virial density.
pub type ComplexValue = num::complex::Complex64;

/// Shared accuracy knobs. `rel_tol` is the relative truncation target of the
/// series and iterations; `max_terms` bounds every loop so a bad argument
/// surfaces as [`crate::Error::Convergence`] instead of a hang.
#[derive(Clone, Copy, Debug)]
pub struct SpecFunConfig {
    pub rel_tol: f64,
    pub max_terms: usize,
}

impl Default for SpecFunConfig {
    fn default() -> Self {
        SpecFunConfig {
            rel_tol: 1e-13,
            max_terms: 500,
        }
    }
}
