//! Density profile of the virial-pressure family. The reduced momentum
//! balance fixes the logarithmic slope h'/h = (eta/4A - f')/f, so
//!
//! ```text
//! h(eta) = c3 exp( integral_0^eta [ z/4A - f'(z) ] / f(z) dz )
//! ```
//!
//! evaluated by Gauss-Legendre quadrature between consecutive zeros of the
//! temperature profile f. At the parameter point c1 = 0, c2 = c3 = A =
//! lambda = 1 the integral also has a closed form in complex dilogarithms,
//! which we evaluate under both conventions of the symbol "dilog" so the
//! verification layer can decide which one the closed form was written in.

use crate::analytic::chains::{dvirial_first_zero, dvirial_integrand};
use crate::analytic::SolutionFamily;
use crate::error::{Error, Result};
use crate::specfun::{dilog, ComplexValue, DilogConvention};
use std::sync::OnceLock;

/// Which representation of the virial density to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VirialPath {
    /// Quadrature of the logarithmic slope; works for any valid parameters.
    Quadrature,
    /// Dilogarithm expression; only defined at c1 = 0, c2 = c3 = A = lambda = 1.
    ClosedForm,
}

/// Result of [`virial_density`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum VirialDensity {
    Quadrature(f64),
    ClosedForm(ClosedFormDensity),
}

/// The closed-form expression evaluated under each reading of its
/// dilogarithm. The expression is real up to roundoff; both components are
/// kept complex so a convention mismatch shows up instead of being hidden
/// by taking real parts.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ClosedFormDensity {
    pub spence_li2: ComplexValue,
    pub shifted_dilog: ComplexValue,
}

/// Density profile h(eta) of the virial family by the requested path.
pub fn virial_density(
    eta: f64,
    family: &SolutionFamily,
    path: VirialPath,
) -> Result<VirialDensity> {
    let SolutionFamily::DVirial { big_a, lambda, c1, c2, c3 } = *family else {
        return Err(Error::Parameter(format!(
            "virial_density applies to the virial family, not {}",
            family.name()
        )));
    };
    if !eta.is_finite() {
        return Err(Error::Domain(format!("virial_density: non-finite eta {eta}")));
    }
    match path {
        VirialPath::Quadrature => {
            let log_h = quadrature_log_density(big_a, lambda, c1, c2, eta)?;
            Ok(VirialDensity::Quadrature(c3 * log_h.exp()))
        }
        VirialPath::ClosedForm => {
            if c1 != 0.0 || c2 != 1.0 || c3 != 1.0 || big_a != 1.0 || lambda != 1.0 {
                return Err(Error::Parameter(
                    "closed-form virial density is pinned to c1 = 0, c2 = c3 = A = lambda = 1"
                        .into(),
                ));
            }
            Ok(VirialDensity::ClosedForm(closed_form(eta)?))
        }
    }
}

/// log(h/c3): the integral of the logarithmic slope from 0 to eta.
///
/// Fails if the temperature profile vanishes anywhere on the closed
/// integration interval (the slope has a pole there). Accuracy is guarded by
/// comparing an 8-panel against a 16-panel composite rule.
pub(crate) fn quadrature_log_density(
    big_a: f64,
    lambda: f64,
    c1: f64,
    c2: f64,
    eta: f64,
) -> Result<f64> {
    if !(big_a > 0.0) || !(lambda > 0.0) {
        return Err(Error::Parameter(format!(
            "virial quadrature needs A > 0 and lambda > 0, got A = {big_a}, lambda = {lambda}"
        )));
    }
    if c2 == 0.0 {
        return Err(Error::Singularity(
            "temperature profile vanishes at eta = 0; the density quadrature starts on a pole"
                .into(),
        ));
    }
    if eta == 0.0 {
        return Ok(0.0);
    }
    if let Some(zero) = dvirial_first_zero(c1, c2, lambda, eta) {
        if eta.abs() >= zero.abs() && eta * zero >= 0.0 {
            return Err(Error::Singularity(format!(
                "temperature profile vanishes at eta = {zero:.6}, inside the quadrature range [0, {eta}]"
            )));
        }
    }
    let coarse = composite_gauss(big_a, lambda, c1, c2, eta, 8)?;
    let fine = composite_gauss(big_a, lambda, c1, c2, eta, 16)?;
    if (fine - coarse).abs() > 1e-11 * (1.0 + fine.abs()) {
        return Err(Error::Convergence { op: "virial density quadrature", limit: 16 });
    }
    Ok(fine)
}

fn composite_gauss(
    big_a: f64,
    lambda: f64,
    c1: f64,
    c2: f64,
    eta: f64,
    panels: usize,
) -> Result<f64> {
    let (nodes, weights) = gauss_legendre_20();
    let width = eta / panels as f64;
    let mut total = 0.0;
    for p in 0..panels {
        let mid = (p as f64 + 0.5) * width;
        let half = 0.5 * width;
        let mut acc = 0.0;
        for (x, w) in nodes.iter().zip(weights) {
            acc += w * dvirial_integrand(big_a, lambda, c1, c2, mid + half * x)?;
        }
        total += acc * half;
    }
    Ok(total)
}

/// Nodes and weights of 20-point Gauss-Legendre on [-1, 1], generated once
/// by Newton iteration on the Legendre polynomial.
fn gauss_legendre_20() -> (&'static [f64; 20], &'static [f64; 20]) {
    static NW: OnceLock<([f64; 20], [f64; 20])> = OnceLock::new();
    let (n, w) = NW.get_or_init(|| {
        const N: usize = 20;
        let mut nodes = [0.0; N];
        let mut weights = [0.0; N];
        for i in 0..N {
            let mut x =
                (std::f64::consts::PI * (i as f64 + 0.75) / (N as f64 + 0.5)).cos();
            for _ in 0..60 {
                let (p, dp) = legendre_p_dp(N, x);
                let dx = p / dp;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            let (_, dp) = legendre_p_dp(N, x);
            nodes[i] = x;
            weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
        }
        (nodes, weights)
    });
    (n, w)
}

/// Legendre polynomial P_n and its derivative by the three-term recurrence.
fn legendre_p_dp(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let kf = k as f64;
        let pk = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = pk;
    }
    let dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, dp)
}

/// The dilogarithm closed form at the pinned parameter point, under both
/// dilog conventions. With E = exp(i eta):
///
/// ```text
/// h = (1 + iE)^(-eta/4) (1 - iE)^(eta/4)
///     * exp( -(i/4) [ -4 eta - dilog(1 + iE) + dilog(1 - iE) ] )
///     / (exp(2 i eta) + 1)
/// ```
fn closed_form(eta: f64) -> Result<ClosedFormDensity> {
    let i = ComplexValue::new(0.0, 1.0);
    let e = (i * eta).exp();
    let u1 = 1.0 + i * e;
    let u2 = 1.0 - i * e;
    let denom = (2.0 * i * eta).exp() + 1.0;
    if denom.norm() < 1e-12 {
        return Err(Error::Singularity(format!(
            "closed-form virial density has a pole near eta = {eta} (temperature zero)"
        )));
    }
    let prefactor = u1.powc(ComplexValue::new(-eta / 4.0, 0.0))
        * u2.powc(ComplexValue::new(eta / 4.0, 0.0));
    let eval = |conv: DilogConvention| -> Result<ComplexValue> {
        let d1 = dilog(u1, conv)?;
        let d2 = dilog(u2, conv)?;
        let bracket = ComplexValue::new(-4.0 * eta, 0.0) - d1 + d2;
        Ok(prefactor * (-i / 4.0 * bracket).exp() / denom)
    };
    Ok(ClosedFormDensity {
        spence_li2: eval(DilogConvention::SpenceLi2)?,
        shifted_dilog: eval(DilogConvention::ShiftedDilog)?,
    })
}
