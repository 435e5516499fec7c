use crate::error::{Error, Result};
use crate::specfun::SpecFunConfig;

/// -1/e, the left end of the principal branch.
const NEG_INV_E: f64 = -0.367_879_441_171_442_33;

/// Principal branch W0 of the Lambert function: the root w >= -1 of
/// w e^w = x, defined for x >= -1/e.
pub fn lambert_w0(x: f64) -> Result<f64> {
    lambert_w0_cfg(x, &SpecFunConfig::default())
}

pub fn lambert_w0_cfg(x: f64, cfg: &SpecFunConfig) -> Result<f64> {
    if !x.is_finite() {
        return Err(Error::Domain(format!("lambert_w0: non-finite input {x}")));
    }
    // Inputs a rounding error below the branch point are clamped onto it;
    // anything further out is a genuine domain error.
    if x < NEG_INV_E {
        if x > NEG_INV_E - 1e-12 * NEG_INV_E.abs() - f64::EPSILON {
            return Ok(-1.0);
        }
        return Err(Error::Domain(format!(
            "lambert_w0: {x} is below the branch point -1/e"
        )));
    }

    // Near the branch point the Halley denominator e^w (w+1) vanishes, so the
    // expansion in p = sqrt(2 (e x + 1)) is used outright. At p < 1e-4 the
    // truncated series is already exact to f64.
    let p2 = 2.0 * (std::f64::consts::E * x + 1.0);
    let p = p2.max(0.0).sqrt();
    if p < 1e-4 {
        return Ok(-1.0 + p - p2 / 6.0 + (11.0 / 72.0) * p * p2 - (43.0 / 1080.0) * p2 * p2);
    }

    let guess = if x < -0.25 {
        -1.0 + p - p2 / 6.0 + (11.0 / 72.0) * p * p2
    } else if x < 3.0 {
        // Crude but inside the Halley basin everywhere on [-0.25, 3).
        x / (1.0 + x)
    } else {
        let l1 = x.ln();
        let l2 = l1.ln();
        l1 - l2 + l2 / l1
    };
    halley(x, guess, cfg)
}

/// W0(e^s) for arbitrary s, stable even where e^s overflows. Used by the
/// traveling-wave density whose W argument is an exponential of the wave
/// coordinate.
pub(crate) fn lambert_w0_of_exp(s: f64, cfg: &SpecFunConfig) -> Result<f64> {
    if s < 36.0 {
        return lambert_w0_cfg(s.exp(), cfg);
    }
    // Solve w + ln w = s by Newton; for s >= 36 the iterate stays in the
    // strongly convex region and converges in a handful of steps.
    let mut w = s - s.ln();
    for _ in 0..cfg.max_terms {
        let f = w + w.ln() - s;
        let step = f * w / (w + 1.0);
        w -= step;
        if step.abs() <= cfg.rel_tol * w.abs() {
            return Ok(w);
        }
    }
    Err(Error::Convergence {
        op: "lambert_w0_of_exp",
        limit: cfg.max_terms,
    })
}

fn halley(x: f64, mut w: f64, cfg: &SpecFunConfig) -> Result<f64> {
    for _ in 0..cfg.max_terms {
        let ew = w.exp();
        let f = w * ew - x;
        if f == 0.0 {
            return Ok(w);
        }
        let denom = ew * (w + 1.0) - (w + 2.0) * f / (2.0 * w + 2.0);
        let step = f / denom;
        w -= step;
        if step.abs() <= cfg.rel_tol * (1.0 + w.abs()) {
            return Ok(w);
        }
    }
    Err(Error::Convergence {
        op: "lambert_w0",
        limit: cfg.max_terms,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    #[test]
    fn fixed_points() {
        assert_eq!(lambert_w0(0.0).unwrap(), 0.0);
        assert_relative_eq!(lambert_w0(std::f64::consts::E).unwrap(), 1.0, max_relative = 1e-14);
        assert_relative_eq!(lambert_w0(NEG_INV_E).unwrap(), -1.0, epsilon = 1e-7);
    }

    #[test]
    fn below_branch_point_rejected() {
        assert!(matches!(lambert_w0(-0.4), Err(Error::Domain(_))));
    }

    #[test]
    fn near_branch_point_series() {
        // 1e-9 above the branch point the defining relation still holds to
        // machine-level residual.
        let x = NEG_INV_E + 1e-9;
        let w = lambert_w0(x).unwrap();
        assert!((w * w.exp() - x).abs() < 1e-12);
    }

    #[test]
    fn of_exp_matches_direct() {
        for &s in &[-3.0, 0.0, 10.0, 35.0] {
            let a = lambert_w0_of_exp(s, &SpecFunConfig::default()).unwrap();
            let b = lambert_w0(s.exp()).unwrap();
            assert_relative_eq!(a, b, max_relative = 1e-12);
        }
        // Beyond f64 exp range: check w + ln w = s instead.
        let s = 800.0;
        let w = lambert_w0_of_exp(s, &SpecFunConfig::default()).unwrap();
        assert_relative_eq!(w + w.ln(), s, max_relative = 1e-13);
    }

    proptest! {
        #[test]
        fn root_identity(x in -0.3678f64..1e6) {
            let w = lambert_w0(x).unwrap();
            let resid = (w * w.exp() - x).abs();
            prop_assert!(resid <= 1e-12 * x.abs().max(1.0));
        }

        #[test]
        fn monotone(a in -0.3678f64..100.0, d in 1e-6f64..10.0) {
            let wa = lambert_w0(a).unwrap();
            let wb = lambert_w0(a + d).unwrap();
            prop_assert!(wb > wa);
        }

        // Alternating series around the origin: W(x) = sum (-1)^(n-1) n^(n-2) x^n / (n-1)!
        #[test]
        fn maclaurin_series(x in -0.05f64..0.05) {
            let mut sum = 0.0;
            let mut fact = 1.0f64; // (n-1)!
            for n in 1..=12u32 {
                if n > 1 {
                    fact *= (n - 1) as f64;
                }
                let nn = n as f64;
                let sign = if n % 2 == 1 { 1.0 } else { -1.0 };
                sum += sign * nn.powi(n as i32 - 2) * x.powi(n as i32) / fact;
            }
            let w = lambert_w0(x).unwrap();
            prop_assert!((w - sum).abs() < 1e-12);
        }
    }
}
