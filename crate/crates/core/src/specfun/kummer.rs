use crate::error::{Error, Result};
use crate::specfun::gamma::{gamma, recip_gamma};
use crate::specfun::SpecFunConfig;

/// Confluent hypergeometric function M(a, b, z) = 1F1(a; b; z).
///
/// Direct Taylor series for z >= 0; for z < 0 the Kummer transformation
/// M(a, b, z) = e^z M(b-a, b, -z) keeps every term of the sum positive
/// whenever b >= a, which is the regime the solution families live in.
pub fn kummer_m(a: f64, b: f64, z: f64) -> Result<f64> {
    kummer_m_cfg(a, b, z, &SpecFunConfig::default())
}

pub fn kummer_m_cfg(a: f64, b: f64, z: f64, cfg: &SpecFunConfig) -> Result<f64> {
    if !a.is_finite() || !b.is_finite() || !z.is_finite() {
        return Err(Error::Domain(format!(
            "kummer_m: non-finite input ({a}, {b}, {z})"
        )));
    }
    if b <= 0.0 && b == b.floor() {
        return Err(Error::Parameter(format!(
            "kummer_m: b = {b} is a nonpositive integer"
        )));
    }
    if z < 0.0 {
        return Ok(z.exp() * m_series(b - a, b, -z, cfg)?);
    }
    m_series(a, b, z, cfg)
}

/// Taylor sum with the term recurrence t_{n+1} = t_n (a+n)/(b+n) z/(n+1).
/// Terminates early when a is a nonpositive integer (the series is then a
/// polynomial). Convergence requires two consecutive negligible terms so a
/// single accidental zero cannot stop the sum.
fn m_series(a: f64, b: f64, z: f64, cfg: &SpecFunConfig) -> Result<f64> {
    let mut term = 1.0f64;
    let mut sum = 1.0f64;
    let mut small_run = 0;
    for n in 0..cfg.max_terms {
        let nf = n as f64;
        term *= (a + nf) / (b + nf) * z / (nf + 1.0);
        sum += term;
        if term.abs() <= cfg.rel_tol * sum.abs() {
            small_run += 1;
            if small_run >= 2 {
                return Ok(sum);
            }
        } else {
            small_run = 0;
        }
    }
    Err(Error::Convergence {
        op: "kummer_m",
        limit: cfg.max_terms,
    })
}

/// Confluent hypergeometric function of the second kind, U(a, b, z), z > 0,
/// non-integer b.
///
/// Moderate z goes through the connection formula
///
/// ```text
/// U = Gamma(1-b)/Gamma(a-b+1) M(a,b,z) + Gamma(b-1)/Gamma(a) z^(1-b) M(a-b+1, 2-b, z)
/// ```
///
/// with reciprocal gammas so that poles of the coefficients zero out their
/// term (this is what makes U(0, b, z) = 1 exact). Large z switches to the
/// divergent asymptotic series truncated at its smallest term.
///
/// Accuracy note: both M terms grow like e^z while U itself decays, so the
/// connection formula cancels roughly e^z z^(2a-b) ulps; with the crossover
/// at z = 20 the worst case (z near 20, a near 2) loses ~8 digits. The
/// temperature shapes that call this do so at z <= 7 with a <= 1/2, where
/// the loss is negligible.
pub fn kummer_u(a: f64, b: f64, z: f64) -> Result<f64> {
    kummer_u_cfg(a, b, z, &SpecFunConfig::default())
}

const U_ASYMPTOTIC_Z: f64 = 20.0;

pub fn kummer_u_cfg(a: f64, b: f64, z: f64, cfg: &SpecFunConfig) -> Result<f64> {
    if !a.is_finite() || !b.is_finite() || !z.is_finite() {
        return Err(Error::Domain(format!(
            "kummer_u: non-finite input ({a}, {b}, {z})"
        )));
    }
    if z <= 0.0 {
        return Err(Error::Domain(format!("kummer_u: z = {z} must be positive")));
    }
    if b == b.floor() {
        return Err(Error::Pole(format!(
            "kummer_u: integer b = {b} sits on a pole of the connection formula"
        )));
    }
    if z > U_ASYMPTOTIC_Z {
        return u_asymptotic(a, b, z, cfg);
    }
    let c1 = gamma(1.0 - b) * recip_gamma(a - b + 1.0);
    let c2 = gamma(b - 1.0) * recip_gamma(a);
    let mut u = 0.0;
    if c1 != 0.0 {
        u += c1 * m_series(a, b, z, cfg)?;
    }
    if c2 != 0.0 {
        u += c2 * z.powf(1.0 - b) * m_series(a - b + 1.0, 2.0 - b, z, cfg)?;
    }
    Ok(u)
}

/// z^{-a} sum_n (a)_n (a-b+1)_n / (n! (-z)^n), truncated at the smallest term.
fn u_asymptotic(a: f64, b: f64, z: f64, cfg: &SpecFunConfig) -> Result<f64> {
    let mut term = 1.0f64;
    let mut sum = 1.0f64;
    for n in 0..cfg.max_terms {
        let nf = n as f64;
        let next = term * (a + nf) * (a - b + 1.0 + nf) / ((nf + 1.0) * (-z));
        if next.abs() >= term.abs() && n > 0 {
            break; // smallest term reached; adding more only diverges
        }
        term = next;
        sum += term;
        if term.abs() <= cfg.rel_tol * sum.abs() {
            break;
        }
    }
    Ok((-a * z.ln()).exp() * sum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    #[test]
    fn m_basics() {
        assert_eq!(kummer_m(0.3, 1.7, 0.0).unwrap(), 1.0);
        // M(a, a, z) = e^z
        assert_relative_eq!(kummer_m(1.0, 1.0, 1.0).unwrap(), std::f64::consts::E, max_relative = 1e-14);
        assert_relative_eq!(kummer_m(2.5, 2.5, -3.0).unwrap(), (-3.0f64).exp(), max_relative = 1e-13);
    }

    #[test]
    fn m_polynomial_termination() {
        // a = -2 makes the series a quadratic: 1 - 2z/b + z^2/(b(b+1)).
        let b = 1.5;
        let z = 7.0;
        let exact = 1.0 - 2.0 * z / b + z * z / (b * (b + 1.0));
        assert_relative_eq!(kummer_m(-2.0, b, z).unwrap(), exact, max_relative = 1e-13);
    }

    #[test]
    fn m_bad_b_rejected() {
        assert!(matches!(kummer_m(0.5, 0.0, 1.0), Err(Error::Parameter(_))));
        assert!(matches!(kummer_m(0.5, -2.0, 1.0), Err(Error::Parameter(_))));
    }

    #[test]
    fn u_special_values() {
        // a = 0 zeroes the second connection term and M(0,b,z) = 1.
        assert_relative_eq!(kummer_u(0.0, 1.5, 2.0).unwrap(), 1.0, max_relative = 1e-14);
        // Leading asymptotic order: U(a,b,z) ~ z^{-a}.
        let u = kummer_u(1.0, 1.5, 100.0).unwrap();
        assert!((100.0 * u - 1.0).abs() < 5e-2);
    }

    #[test]
    fn u_exact_identity() {
        // U(a, a+1, z) = z^{-a} exactly.
        for &z in &[0.5, 3.0, 18.0, 40.0] {
            let u = kummer_u(0.5, 1.5, z).unwrap();
            assert_relative_eq!(u, z.powf(-0.5), max_relative = 1e-11);
        }
    }

    #[test]
    fn u_domain_errors() {
        assert!(matches!(kummer_u(0.5, 1.5, 0.0), Err(Error::Domain(_))));
        assert!(matches!(kummer_u(0.5, 1.5, -1.0), Err(Error::Domain(_))));
        assert!(matches!(kummer_u(0.5, 2.0, 1.0), Err(Error::Pole(_))));
    }

    proptest! {
        // Contiguous relation: (b-a) M(a-1,b,z) + (2a - b + z) M(a,b,z) - a M(a+1,b,z) = 0
        #[test]
        fn m_contiguous_in_a(a in -2.0f64..2.0, z in 0.0f64..10.0) {
            let b = 1.5;
            let m0 = kummer_m(a - 1.0, b, z).unwrap();
            let m1 = kummer_m(a, b, z).unwrap();
            let m2 = kummer_m(a + 1.0, b, z).unwrap();
            let lhs = (b - a) * m0 + (2.0 * a - b + z) * m1 - a * m2;
            let scale = m0.abs().max(m1.abs()).max(m2.abs()).max(1.0);
            prop_assert!(lhs.abs() < 1e-10 * scale * (1.0 + z));
        }

        // Same relation holds for U with different coefficients:
        // U(a-1,b,z) - (2a - b + z) U(a,b,z) + a (a - b + 1) U(a+1,b,z) = 0
        // Ranges stay inside the well-conditioned band of the connection
        // formula (see the accuracy note on kummer_u).
        #[test]
        fn u_contiguous_in_a(a in 0.1f64..1.2, z in 0.2f64..8.0) {
            let b = 1.5;
            let u0 = kummer_u(a - 1.0, b, z).unwrap();
            let u1 = kummer_u(a, b, z).unwrap();
            let u2 = kummer_u(a + 1.0, b, z).unwrap();
            let lhs = u0 - (2.0 * a - b + z) * u1 + a * (a - b + 1.0) * u2;
            let scale = u0.abs().max(u1.abs()).max(u2.abs()).max(1e-30);
            prop_assert!(lhs.abs() < 1e-9 * scale * (1.0 + z));
        }
    }
}
