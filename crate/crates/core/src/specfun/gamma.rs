use crate::error::{Error, Result};
use crate::specfun::SpecFunConfig;

const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_7;

// Stirling coefficients B_{2k} / (2k (2k-1)). The asymptotic series is only
// applied for x >= 12, where the k = 8 term is already below 1e-17
// relative, so the truncation never dominates the rounding error.
const STIRLING: [f64; 8] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360_360.0,
    1.0 / 156.0,
    -3617.0 / 122_400.0,
];

const STIRLING_CUT: f64 = 12.0;

/// Natural log of |Gamma(x)| together with the sign of Gamma(x).
///
/// Returns `(ln|Gamma(x)|, sign)` where sign is +1.0 or -1.0. Nonpositive
/// integers are poles and reported as such; for x < 0.5 the reflection
/// formula routes the evaluation back to the Stirling region.
pub fn log_gamma(x: f64) -> Result<(f64, f64)> {
    log_gamma_cfg(x, &SpecFunConfig::default())
}

// `cfg` is threaded through only for the reflection recursion; it stays in
// the signature so every special function offers the same `_cfg` entry point.
#[allow(clippy::only_used_in_recursion)]
pub fn log_gamma_cfg(x: f64, cfg: &SpecFunConfig) -> Result<(f64, f64)> {
    if !x.is_finite() {
        return Err(Error::Domain(format!("log_gamma: non-finite input {x}")));
    }
    if x <= 0.0 && x == x.floor() {
        return Err(Error::Pole(format!("log_gamma: pole at {x}")));
    }
    if x < 0.5 {
        // Gamma(x) Gamma(1-x) = pi / sin(pi x); 1 - x > 0.5 lands in the
        // positive branch, so the recursion terminates after one hop.
        let s = (std::f64::consts::PI * x).sin();
        let (lg, _) = log_gamma_cfg(1.0 - x, cfg)?;
        let val = (std::f64::consts::PI / s.abs()).ln() - lg;
        return Ok((val, s.signum()));
    }

    let mut z = x;
    let mut shift = 0.0;
    while z < STIRLING_CUT {
        shift += z.ln();
        z += 1.0;
    }

    let w = 1.0 / (z * z);
    let mut series = STIRLING[STIRLING.len() - 1];
    for k in (0..STIRLING.len() - 1).rev() {
        series = series * w + STIRLING[k];
    }
    let lg = (z - 0.5) * z.ln() - z + LN_SQRT_2PI + series / z;
    Ok((lg - shift, 1.0))
}

/// Gamma(x) for non-pole x, sign included. Internal helper for the Kummer
/// connection formula; overflows to +-inf for large x, which the callers
/// never reach.
pub(crate) fn gamma(x: f64) -> f64 {
    match log_gamma(x) {
        Ok((lg, sign)) => sign * lg.exp(),
        Err(_) => f64::NAN,
    }
}

/// 1 / Gamma(x), with the poles mapped to exact zeros. This is the form the
/// Kummer connection formula wants: a pole of Gamma kills its term.
pub(crate) fn recip_gamma(x: f64) -> f64 {
    if x <= 0.0 && x == x.floor() {
        return 0.0;
    }
    match log_gamma(x) {
        Ok((lg, sign)) => sign * (-lg).exp(),
        Err(_) => f64::NAN,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn known_values() {
        let (lg, s) = log_gamma(1.0).unwrap();
        assert!(lg.abs() < 1e-14 && s == 1.0);
        let (lg, s) = log_gamma(5.0).unwrap();
        assert_relative_eq!(lg, 24.0f64.ln(), max_relative = 1e-14);
        assert_eq!(s, 1.0);
        // Gamma(1/2) = sqrt(pi)
        let (lg, _) = log_gamma(0.5).unwrap();
        assert_relative_eq!(lg, 0.5 * std::f64::consts::PI.ln(), max_relative = 1e-14);
    }

    #[test]
    fn reflection_signs() {
        // Gamma alternates sign between consecutive negative integers.
        let (_, s) = log_gamma(-0.5).unwrap();
        assert_eq!(s, -1.0);
        let (_, s) = log_gamma(-1.5).unwrap();
        assert_eq!(s, 1.0);
        let (_, s) = log_gamma(-2.5).unwrap();
        assert_eq!(s, -1.0);
    }

    #[test]
    fn gamma_neg_half() {
        // Gamma(-1/2) = -2 sqrt(pi)
        assert_relative_eq!(
            gamma(-0.5),
            -2.0 * std::f64::consts::PI.sqrt(),
            max_relative = 1e-13
        );
    }

    #[test]
    fn poles_rejected() {
        assert!(matches!(log_gamma(0.0), Err(Error::Pole(_))));
        assert!(matches!(log_gamma(-3.0), Err(Error::Pole(_))));
        assert_eq!(recip_gamma(-7.0), 0.0);
    }

    #[test]
    fn duplication_formula() {
        // ln Gamma(2x) = ln Gamma(x) + ln Gamma(x + 1/2) + (2x-1) ln 2 - ln sqrt(pi)
        for &x in &[0.7, 1.3, 2.9, 6.1, 10.25] {
            let (l2x, _) = log_gamma(2.0 * x).unwrap();
            let (lx, _) = log_gamma(x).unwrap();
            let (lxh, _) = log_gamma(x + 0.5).unwrap();
            let rhs = lx + lxh + (2.0 * x - 1.0) * 2.0f64.ln()
                - 0.5 * std::f64::consts::PI.ln();
            assert_relative_eq!(l2x, rhs, max_relative = 1e-12, epsilon = 1e-12);
        }
    }
}
