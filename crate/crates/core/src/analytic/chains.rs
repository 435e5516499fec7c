//! Profile functions together with their first two derivatives, exact up to
//! special-function accuracy. The residual checks differentiate these chains
//! analytically, so a verification failure points at the formula itself and
//! never at finite differencing of the profile.

use crate::error::{Error, Result};
use crate::specfun::{kummer_m, lambert_w0_of_exp, recip_gamma, SpecFunConfig};
use crate::analytic::EvalMode;

const SQRT_PI: f64 = 1.772_453_850_905_516;

/// Square-root density profile of the cubic-pressure family: (h, h').
///
/// Corrected: h^2 = (eta^2/4 + 2 c1) / 3a. Printed: h^2 = (4 eta^2 + 2 c1) / 3a.
pub(crate) fn acubic_h(a: f64, c1: f64, eta: f64, mode: EvalMode) -> Result<(f64, f64)> {
    if !(a > 0.0) {
        return Err(Error::Parameter(format!("a = {a} must be positive")));
    }
    let num = match mode {
        EvalMode::Corrected => 0.25 * eta * eta + 2.0 * c1,
        EvalMode::AsPrinted => 4.0 * eta * eta + 2.0 * c1,
    };
    let h2 = num / (3.0 * a);
    if h2 <= 0.0 {
        return Err(Error::Domain(format!(
            "density radicand {h2:.3e} is not positive at eta = {eta}"
        )));
    }
    let h = h2.sqrt();
    let h1 = match mode {
        EvalMode::Corrected => eta / (12.0 * a * h),
        EvalMode::AsPrinted => 4.0 * eta / (3.0 * a * h),
    };
    Ok((h, h1))
}

/// Trigonometric temperature profile of the cubic-pressure family:
/// (f, f', f''). The corrected wavenumber is sqrt(alpha/lambda); the printed
/// one is alpha/lambda (they agree exactly when alpha = lambda).
pub(crate) fn acubic_f(
    c2: f64,
    c3: f64,
    alpha: f64,
    lambda: f64,
    eta: f64,
    mode: EvalMode,
) -> Result<(f64, f64, f64)> {
    if !(lambda > 0.0) {
        return Err(Error::Parameter(format!("lambda = {lambda} must be positive")));
    }
    if alpha < 0.0 {
        return Err(Error::Parameter(format!(
            "alpha = {alpha} must be nonnegative for an oscillatory profile"
        )));
    }
    let k = match mode {
        EvalMode::Corrected => (alpha / lambda).sqrt(),
        EvalMode::AsPrinted => alpha / lambda,
    };
    let (s, c) = (k * eta).sin_cos();
    let f = c2 * c + c3 * s;
    let f1 = k * (c3 * c - c2 * s);
    let f2 = -k * k * f;
    Ok((f, f1, f2))
}

/// Lambert-W density of the quadratic-pressure traveling wave: (h, h', h'')
/// at the wave coordinate zeta = x - a t^2 / 2.
///
/// h = (b c1 / a) (W(u) + 1) with u = K exp(sign * kappa * zeta),
/// kappa = a^2/(b^2 c1). The corrected sign is -1; the published formula has
/// +1 (and does not solve the wave equation). W is evaluated through the
/// log-domain entry point, so arbitrarily large zeta never overflows.
pub(crate) fn btravel_h(
    a: f64,
    b: f64,
    c1: f64,
    c2: f64,
    zeta: f64,
    mode: EvalMode,
) -> Result<(f64, f64, f64)> {
    if a == 0.0 || !a.is_finite() {
        return Err(Error::Parameter(format!("a = {a} must be nonzero")));
    }
    if !(b * c1 > 0.0) {
        return Err(Error::Parameter(format!(
            "b c1 = {} must be positive (plateau density b c1 / a)",
            b * c1
        )));
    }
    let kappa = a * a / (b * b * c1);
    let sign = match mode {
        EvalMode::Corrected => -1.0,
        EvalMode::AsPrinted => 1.0,
    };
    // ln u = ln K + sign*kappa*zeta, ln K = (a c2 - b^2 c1)/(b^2 c1) - ln(b c1)
    let ln_u = (a * c2 - b * b * c1) / (b * b * c1) - (b * c1).ln() + sign * kappa * zeta;
    let w = lambert_w0_of_exp(ln_u, &SpecFunConfig::default())?;
    let h = (b * c1 / a) * (w + 1.0);
    let wp = w / (1.0 + w);
    let h1 = sign * (a / b) * wp;
    let h2 = a.powi(3) / (b.powi(3) * c1) * w / (1.0 + w).powi(3);
    Ok((h, h1, h2))
}

/// Trigonometric temperature profile of the virial-pressure family:
/// (f, f', f'') with wavenumber 1/sqrt(lambda). The c1 coefficient rides the
/// sine, c2 the cosine.
pub(crate) fn dvirial_f(c1: f64, c2: f64, lambda: f64, eta: f64) -> (f64, f64, f64) {
    let k = 1.0 / lambda.sqrt();
    let (s, c) = (k * eta).sin_cos();
    let f = c1 * s + c2 * c;
    let f1 = k * (c1 * c - c2 * s);
    let f2 = -k * k * f;
    (f, f1, f2)
}

/// Logarithmic density slope h'/h of the virial family, read off the reduced
/// momentum balance -eta/4 = A f' + A f h'/h:
///
/// ```text
/// h'/h = ( eta/(4A) - f'(eta) ) / f(eta)
/// ```
pub(crate) fn dvirial_integrand(big_a: f64, lambda: f64, c1: f64, c2: f64, eta: f64) -> Result<f64> {
    let (f, f1, _) = dvirial_f(c1, c2, lambda, eta);
    if f == 0.0 {
        return Err(Error::Singularity(format!(
            "temperature profile vanishes at eta = {eta}; density slope diverges"
        )));
    }
    Ok((eta / (4.0 * big_a) - f1) / f)
}

/// First zero of the virial temperature profile strictly on the given side
/// of the origin (positive `direction` for eta > 0). The profile is
/// R cos(k eta - phi), so zeros are exactly spaced pi/k apart.
pub(crate) fn dvirial_first_zero(c1: f64, c2: f64, lambda: f64, direction: f64) -> Option<f64> {
    use std::f64::consts::{FRAC_PI_2, PI};
    let k = 1.0 / lambda.sqrt();
    if c1 == 0.0 && c2 == 0.0 {
        return Some(0.0); // identically zero profile
    }
    // zeros where k eta = atan2(c1, c2) + pi/2 + m pi
    let base = c1.atan2(c2) + FRAC_PI_2;
    if direction >= 0.0 {
        let mut m = (-base / PI).ceil();
        while base + m * PI <= 0.0 {
            m += 1.0;
        }
        while base + (m - 1.0) * PI > 0.0 {
            m -= 1.0;
        }
        Some((base + m * PI) / k)
    } else {
        let mut m = (-base / PI).floor();
        while base + m * PI >= 0.0 {
            m -= 1.0;
        }
        while base + (m + 1.0) * PI < 0.0 {
            m += 1.0;
        }
        Some((base + m * PI) / k)
    }
}

/// Odd Kummer profile f(eta) = eta * [c1 M(a, 3/2, z) + c2 U(a, 3/2, z)],
/// z = kappa eta^2, the self-similar temperature shape of the
/// quasi-stationary families.
///
/// The U part is carried in its regular-plus-singular split
///
/// ```text
/// eta U(a, 3/2, kappa eta^2) = -2 sqrt(pi)/Gamma(a - 1/2) * eta M(a, 3/2, z)
///                              + sign(eta) sqrt(pi/kappa)/Gamma(a) * M(a - 1/2, 1/2, z)
/// ```
///
/// which is finite through eta = 0 (where the profile jumps between its odd
/// extensions; we return the M part alone exactly at 0) and differentiates
/// into pure M chains. For large z the two pieces cancel like e^z, matching
/// the usual confluent connection loss, so keep kappa eta^2 modest when c2
/// is significant.
#[derive(Clone, Copy, Debug)]
pub struct KummerShape {
    /// coefficient of eta M(a, 3/2, z) after folding the U split's M part
    cm: f64,
    /// coefficient of sign(eta) M(a - 1/2, 1/2, z)
    cq: f64,
    a: f64,
    kappa: f64,
}

impl KummerShape {
    pub fn new(a: f64, kappa: f64, c1: f64, c2: f64) -> Result<Self> {
        if !(kappa > 0.0) {
            return Err(Error::Parameter(format!("kappa = {kappa} must be positive")));
        }
        if !a.is_finite() || !c1.is_finite() || !c2.is_finite() {
            return Err(Error::Parameter("non-finite Kummer shape parameter".into()));
        }
        // 1/Gamma is entire: poles of Gamma simply zero out a component.
        let cm = c1 - 2.0 * SQRT_PI * recip_gamma(a - 0.5) * c2;
        let cq = c2 * SQRT_PI / kappa.sqrt() * recip_gamma(a);
        Ok(KummerShape { cm, cq, a, kappa })
    }

    /// Profile and first two derivatives at eta.
    pub fn eval(&self, eta: f64) -> Result<(f64, f64, f64)> {
        let (a, kappa) = (self.a, self.kappa);
        let z = kappa * eta * eta;
        let b = a - 0.5;

        // P(eta) = eta M(a, 3/2, z) and derivatives
        let m0 = kummer_m(a, 1.5, z)?;
        let m1 = kummer_m(a + 1.0, 2.5, z)?;
        let p = eta * m0;
        let p1 = m0 + (4.0 / 3.0) * a * kappa * eta * eta * m1;
        let p2_m2 = if self.cm == 0.0 && self.cq == 0.0 {
            0.0
        } else {
            kummer_m(a + 2.0, 3.5, z)?
        };
        let p2 = 4.0 * a * kappa * eta * m1
            + (16.0 / 15.0) * a * (a + 1.0) * kappa * kappa * eta.powi(3) * p2_m2;

        if self.cq == 0.0 {
            return Ok((self.cm * p, self.cm * p1, self.cm * p2));
        }

        // Q(eta) = M(a - 1/2, 1/2, z) and derivatives, odd-extended
        let s = if eta > 0.0 {
            1.0
        } else if eta < 0.0 {
            -1.0
        } else {
            0.0
        };
        let n0 = kummer_m(b, 0.5, z)?;
        let n1 = kummer_m(b + 1.0, 1.5, z)?;
        let n2 = kummer_m(b + 2.0, 2.5, z)?;
        let q = n0;
        let q1 = 4.0 * b * kappa * eta * n1;
        let q2 = 4.0 * b * kappa * n1 + (16.0 / 3.0) * b * (b + 1.0) * kappa * kappa * eta * eta * n2;

        Ok((
            self.cm * p + s * self.cq * q,
            self.cm * p1 + s * self.cq * q1,
            self.cm * p2 + s * self.cq * q2,
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::kummer_u;
    use approx::assert_relative_eq;

    #[test]
    fn kummer_shape_matches_direct_u() {
        // The split form must agree with eta * [c1 M + c2 U] computed the
        // slow way, away from eta = 0.
        let shape = KummerShape::new(-0.5, 1.0 / 12.0, 0.7, 0.4).unwrap();
        for &eta in &[0.3, 1.0, 2.5, 4.0, -1.7] {
            let z = eta * eta / 12.0;
            let direct = eta
                * (0.7 * kummer_m(-0.5, 1.5, z).unwrap()
                    + 0.4 * kummer_u(-0.5, 1.5, z).unwrap());
            let (f, _, _) = shape.eval(eta).unwrap();
            assert_relative_eq!(f, direct, max_relative = 1e-11);
        }
    }

    #[test]
    fn kummer_shape_continuous_through_origin() {
        // With c2 != 0 the profile tends to +-cq as eta -> 0+-; the small
        // one-sided limits must match the constant term.
        let shape = KummerShape::new(0.25, 0.25, 0.0, 1.0).unwrap();
        let (f_plus, _, _) = shape.eval(1e-9).unwrap();
        let (f_minus, _, _) = shape.eval(-1e-9).unwrap();
        let cq = SQRT_PI / 0.5 * recip_gamma(0.25);
        assert_relative_eq!(f_plus, cq, max_relative = 1e-8);
        assert_relative_eq!(f_minus, -cq, max_relative = 1e-8);
    }

    #[test]
    fn kummer_shape_solves_reduced_heat_equation() {
        // lambda f'' - c eta f' + gamma f = 0 with kappa = c/(2 lambda),
        // a = 1/2 - gamma/(2c). Check the porous-family instance
        // (c = 1/6, lambda = 1, gamma = 1/3) pointwise.
        let (lambda, c, gamma) = (1.0, 1.0 / 6.0, 1.0 / 3.0);
        let shape = KummerShape::new(
            0.5 - gamma / (2.0 * c),
            c / (2.0 * lambda),
            1.0,
            0.3,
        )
        .unwrap();
        for &eta in &[0.2, 0.9, 1.8, 3.1, -2.2] {
            let (f, f1, f2) = shape.eval(eta).unwrap();
            let resid = lambda * f2 - c * eta * f1 + gamma * f;
            assert!(
                resid.abs() <= 1e-11 * (1.0 + f.abs()),
                "residual {resid:.3e} at eta = {eta}"
            );
        }
    }

    #[test]
    fn btravel_chain_solves_wave_equation() {
        // b h h'' + h'(b h' + a) = 0 holds identically for the corrected
        // sign; the printed sign leaves 2 (a^2/b) W/(1+W).
        let (a, b, c1, c2) = (0.8, 1.3, 0.9, 0.4);
        for &zeta in &[-20.0, -3.0, 0.0, 2.5, 15.0, 300.0] {
            let (h, h1, h2) = btravel_h(a, b, c1, c2, zeta, EvalMode::Corrected).unwrap();
            let resid = b * h * h2 + h1 * (b * h1 + a);
            assert!(resid.abs() < 1e-12 * (1.0 + h.abs()), "resid {resid:.3e} at {zeta}");
        }
        let (h, h1, h2) = btravel_h(a, b, c1, c2, 1.0, EvalMode::AsPrinted).unwrap();
        let resid = b * h * h2 + h1 * (b * h1 + a);
        let w = h * a / (b * c1) - 1.0;
        assert_relative_eq!(resid, 2.0 * a * a / b * w / (1.0 + w), max_relative = 1e-9);
    }

    #[test]
    fn btravel_log_domain_reaches_extreme_zeta() {
        // Far down the growing side W is huge; the log-domain path must not
        // overflow and h ~ (b c1/a)(kappa zeta + ...) stays finite.
        let (h, h1, _) = btravel_h(1.0, 1.0, 1.0, 1.0, -5.0e4, EvalMode::Corrected).unwrap();
        assert!(h.is_finite() && h > 4.0e4);
        assert_relative_eq!(h1, -1.0, max_relative = 1e-3);
    }

    #[test]
    fn btravel_parameter_guards() {
        assert!(btravel_h(0.0, 1.0, 1.0, 0.0, 0.0, EvalMode::Corrected).is_err());
        assert!(btravel_h(1.0, 1.0, -1.0, 0.0, 0.0, EvalMode::Corrected).is_err());
    }

    #[test]
    fn dvirial_zero_location() {
        // c1 = 0, c2 = 1, lambda = 1: f = cos(eta), first positive zero pi/2.
        let z = dvirial_first_zero(0.0, 1.0, 1.0, 1.0).unwrap();
        assert_relative_eq!(z, std::f64::consts::FRAC_PI_2, max_relative = 1e-12);
        let zn = dvirial_first_zero(0.0, 1.0, 1.0, -1.0).unwrap();
        assert_relative_eq!(zn, -std::f64::consts::FRAC_PI_2, max_relative = 1e-12);
        // lambda = 4 doubles the distance
        let z4 = dvirial_first_zero(0.0, 1.0, 4.0, 1.0).unwrap();
        assert_relative_eq!(z4, std::f64::consts::PI, max_relative = 1e-12);
        // mixed coefficients: f = sin(eta) + cos(eta), zero at 3 pi/4
        let zm = dvirial_first_zero(1.0, 1.0, 1.0, 1.0).unwrap();
        assert_relative_eq!(zm, 3.0 * std::f64::consts::FRAC_PI_4, max_relative = 1e-12);
    }

    #[test]
    fn acubic_chain_consistency() {
        // h' from the chain equals the derivative of the closed form.
        let (a, c1) = (1.0 / 3.0, 0.5);
        for &eta in &[0.0, 0.4, 1.3, -0.9] {
            let (h, h1) = acubic_h(a, c1, eta, EvalMode::Corrected).unwrap();
            let d = 1e-6;
            let (hp, _) = acubic_h(a, c1, eta + d, EvalMode::Corrected).unwrap();
            let (hm, _) = acubic_h(a, c1, eta - d, EvalMode::Corrected).unwrap();
            assert_relative_eq!(h1, (hp - hm) / (2.0 * d), epsilon = 1e-9);
            assert!(h > 0.0);
        }
    }
}
