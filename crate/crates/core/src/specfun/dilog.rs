use crate::error::{Error, Result};
use crate::specfun::{ComplexValue, SpecFunConfig};
use std::sync::OnceLock;

/// Which function the name "dilog" denotes. Both conventions appear in the
/// literature and they disagree by an argument shift:
/// `SpenceLi2` is Li2(z) = sum z^n / n^2, `ShiftedDilog` is Li2(1 - z).
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum DilogConvention {
    SpenceLi2,
    ShiftedDilog,
}

/// Dilogarithm over the complex plane, principal branch, in the requested
/// convention. On the real cut (z real and > 1 for `SpenceLi2`) the sign of
/// the zero imaginary part selects the side.
pub fn dilog(z: ComplexValue, convention: DilogConvention) -> Result<ComplexValue> {
    dilog_cfg(z, convention, &SpecFunConfig::default())
}

pub fn dilog_cfg(
    z: ComplexValue,
    convention: DilogConvention,
    cfg: &SpecFunConfig,
) -> Result<ComplexValue> {
    if !z.re.is_finite() || !z.im.is_finite() {
        return Err(Error::Domain(format!("dilog: non-finite input {z}")));
    }
    let w = match convention {
        DilogConvention::SpenceLi2 => z,
        DilogConvention::ShiftedDilog => ComplexValue::new(1.0, 0.0) - z,
    };
    Ok(li2(w, cfg))
}

const PI: f64 = std::f64::consts::PI;

fn li2(z: ComplexValue, cfg: &SpecFunConfig) -> ComplexValue {
    if z.re == 0.0 && z.im == 0.0 {
        return ComplexValue::new(0.0, 0.0);
    }
    if z.re == 1.0 && z.im == 0.0 {
        return ComplexValue::new(PI * PI / 6.0, 0.0);
    }
    if z.norm_sqr() > 1.0 {
        // Li2(z) = -Li2(1/z) - pi^2/6 - ln^2(-z)/2, which maps into the unit
        // disk; one more reflection below may follow, then the series.
        let ln_neg = (-z).ln();
        return -li2(z.inv(), cfg) - PI * PI / 6.0 - 0.5 * ln_neg * ln_neg;
    }
    if z.re > 0.5 {
        // Li2(z) = pi^2/6 - ln(z) ln(1-z) - Li2(1-z); the image has re <= 0.5
        // and stays inside the disk, so the series applies directly.
        let one = ComplexValue::new(1.0, 0.0);
        return ComplexValue::new(PI * PI / 6.0, 0.0) - z.ln() * (one - z).ln() - li2(one - z, cfg);
    }
    li2_series(z, cfg)
}

/// Series in u = -ln(1-z):  Li2 = sum_k B_k u^{k+1} / (k+1)!  with B_1 = -1/2.
/// On the region reached here (|z| <= 1, re <= 1/2) |u| stays below ~1.32,
/// so consecutive even terms shrink by |u/2pi|^2 < 0.05 and a dozen terms
/// give full f64 accuracy. A direct power sum of z^n/n^2 would need millions
/// of terms near |z| = 1; this is why the u-series is used instead.
fn li2_series(z: ComplexValue, _cfg: &SpecFunConfig) -> ComplexValue {
    let u = -(ComplexValue::new(1.0, 0.0) - z).ln();
    debug_assert!(u.norm_sqr() < 4.0, "li2_series outside its region: u = {u}");
    let coefs = u_coefs();
    let mut sum = ComplexValue::new(0.0, 0.0);
    let mut pw = u; // u^{k+1}
    for (k, &c) in coefs.iter().enumerate() {
        if c != 0.0 {
            let term = pw * c;
            sum += term;
            if k > 2 && term.norm_sqr() <= 1e-64 * sum.norm_sqr() {
                break;
            }
        }
        pw *= u;
    }
    sum
}

/// Coefficients B_k / (k+1)!, built from even zeta values instead of a typed
/// Bernoulli table: B_{2n}/(2n+1)! = (-1)^{n+1} 2 zeta(2n) / ((2n+1)(2pi)^{2n}).
fn u_coefs() -> &'static [f64] {
    static COEFS: OnceLock<Vec<f64>> = OnceLock::new();
    COEFS.get_or_init(|| {
        let mut v = vec![0.0; 40];
        v[0] = 1.0; // B_0 u / 1!
        v[1] = -0.25; // B_1 u^2 / 2! with B_1 = -1/2
        for n in 1..=19usize {
            let sign = if n % 2 == 1 { 1.0 } else { -1.0 };
            let c = sign * 2.0 * zeta_even(2 * n)
                / ((2 * n + 1) as f64)
                / (2.0 * PI).powi(2 * n as i32);
            v[2 * n] = c;
        }
        v
    })
}

fn zeta_even(k: usize) -> f64 {
    match k {
        2 => PI * PI / 6.0,
        4 => PI.powi(4) / 90.0,
        6 => PI.powi(6) / 945.0,
        8 => PI.powi(8) / 9450.0,
        _ => {
            // zeta(k) - 1 < 2^-k here; the direct sum is short and exact.
            let mut s = 1.0;
            for j in 2..80u32 {
                let t = (j as f64).powi(-(k as i32));
                s += t;
                if t < 1e-18 {
                    break;
                }
            }
            s
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    const CATALAN: f64 = 0.915_965_594_177_219;

    fn li2d(x: f64, y: f64) -> ComplexValue {
        dilog(ComplexValue::new(x, y), DilogConvention::SpenceLi2).unwrap()
    }

    #[test]
    fn special_values() {
        assert_eq!(li2d(0.0, 0.0), ComplexValue::new(0.0, 0.0));
        assert_relative_eq!(li2d(1.0, 0.0).re, PI * PI / 6.0, max_relative = 1e-15);
        assert_relative_eq!(li2d(-1.0, 0.0).re, -PI * PI / 12.0, max_relative = 1e-13);
        assert!(li2d(-1.0, 0.0).im.abs() < 1e-15);
        // Li2(1/2) = pi^2/12 - ln^2(2)/2
        let l = li2d(0.5, 0.0);
        assert_relative_eq!(
            l.re,
            PI * PI / 12.0 - 0.5 * 2.0f64.ln().powi(2),
            max_relative = 1e-14
        );
    }

    #[test]
    fn imaginary_axis() {
        // Li2(i) = -pi^2/48 + i G with G the Catalan constant.
        let l = li2d(0.0, 1.0);
        assert_relative_eq!(l.re, -PI * PI / 48.0, max_relative = 1e-13);
        assert_relative_eq!(l.im, CATALAN, max_relative = 1e-13);
    }

    #[test]
    fn one_plus_i() {
        // Li2(1+i) = pi^2/16 + i (G + pi ln2 / 4)
        let l = li2d(1.0, 1.0);
        assert_relative_eq!(l.re, PI * PI / 16.0, max_relative = 1e-13);
        assert_relative_eq!(
            l.im,
            CATALAN + PI * 2.0f64.ln() / 4.0,
            max_relative = 1e-13
        );
    }

    #[test]
    fn paper_convention_is_shifted() {
        let z = ComplexValue::new(0.3, 0.2);
        let a = dilog(z, DilogConvention::ShiftedDilog).unwrap();
        let b = dilog(ComplexValue::new(1.0, 0.0) - z, DilogConvention::SpenceLi2).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn matches_direct_power_sum_small_z() {
        // Independent check of the u-series coefficients: sum z^n/n^2
        // converges fine for |z| <= 0.4.
        for &(x, y) in &[(0.3, 0.0), (-0.25, 0.2), (0.1, -0.35), (0.4, 0.0), (-0.4, 0.0)] {
            let z = ComplexValue::new(x, y);
            let mut s = ComplexValue::new(0.0, 0.0);
            let mut pw = ComplexValue::new(1.0, 0.0);
            for n in 1..200 {
                pw *= z;
                s += pw / ((n * n) as f64);
            }
            let l = li2d(x, y);
            assert!((l - s).norm() < 1e-14, "mismatch at {z}: {l} vs {s}");
        }
    }

    proptest! {
        // Euler reflection on the real interval (0,1).
        #[test]
        fn reflection_real(x in 1e-6f64..0.999999) {
            let a = li2d(x, 0.0).re;
            let b = li2d(1.0 - x, 0.0).re;
            let lhs = a + b + x.ln() * (1.0 - x).ln();
            prop_assert!((lhs - PI * PI / 6.0).abs() < 1e-10);
        }

        // Inversion identity checked off the real axis where branches are easy.
        #[test]
        fn inversion_complex(r in 1.2f64..20.0, th in 0.1f64..3.0) {
            let z = ComplexValue::from_polar(r, th);
            let a = li2d(z.re, z.im);
            let b = li2d(z.re / r / r, -z.im / r / r); // 1/z = conj(z)/|z|^2
            let ln_neg = (-z).ln();
            let rhs = -b - ComplexValue::new(PI * PI / 6.0, 0.0) - 0.5 * ln_neg * ln_neg;
            prop_assert!((a - rhs).norm() < 1e-11 * (1.0 + a.norm()));
        }
    }
}
