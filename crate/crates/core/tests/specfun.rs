//! Independent oracles for the special functions: nothing here reuses the
//! library's own algorithms. The Kummer oracle sums the defining series in
//! double-double arithmetic, Lambert W is bisected from the defining
//! relation, the hypergeometric quadrature oracles integrate classical
//! integral representations, and the dilogarithm is checked against the raw
//! power sum.

use eulerheat::specfun::*;

const W_TOL: f64 = 1e-13;
const M_DD_TOL: f64 = 1e-12;
const M_QUAD_TOL: f64 = 1e-13;
const U_QUAD_TOL: f64 = 1e-10;
const LI2_SERIES_TOL: f64 = 1e-13;

/// Minimal double-double arithmetic (Dekker/Knuth): an unevaluated sum
/// hi + lo with |lo| <= ulp(hi)/2, giving ~32 significant digits.
mod dd {
    #[derive(Clone, Copy, Debug)]
    pub struct Dd {
        pub hi: f64,
        pub lo: f64,
    }

    pub fn from(x: f64) -> Dd {
        Dd { hi: x, lo: 0.0 }
    }

    pub fn two_sum(a: f64, b: f64) -> Dd {
        let s = a + b;
        let bb = s - a;
        let err = (a - (s - bb)) + (b - bb);
        Dd { hi: s, lo: err }
    }

    fn quick_two_sum(a: f64, b: f64) -> Dd {
        let s = a + b;
        Dd { hi: s, lo: b - (s - a) }
    }

    fn two_prod(a: f64, b: f64) -> Dd {
        let p = a * b;
        Dd {
            hi: p,
            lo: a.mul_add(b, -p),
        }
    }

    // Full-accuracy add (both components error-tracked). The cheaper variant
    // that lumps the low parts loses digits under the heavy cancellation of
    // alternating sums, which is exactly what this oracle exists to survive.
    pub fn add(a: Dd, b: Dd) -> Dd {
        let s = two_sum(a.hi, b.hi);
        let t = two_sum(a.lo, b.lo);
        let v = quick_two_sum(s.hi, s.lo + t.hi);
        quick_two_sum(v.hi, v.lo + t.lo)
    }

    pub fn mul(a: Dd, b: Dd) -> Dd {
        let p = two_prod(a.hi, b.hi);
        let lo = p.lo + a.hi * b.lo + a.lo * b.hi;
        quick_two_sum(p.hi, lo)
    }

    pub fn div(a: Dd, b: Dd) -> Dd {
        let q0 = a.hi / b.hi;
        let r = add(a, mul(from(-q0), b));
        let q1 = (r.hi + r.lo) / b.hi;
        quick_two_sum(q0, q1)
    }

    pub fn to_f64(a: Dd) -> f64 {
        a.hi + a.lo
    }
}

/// Kummer M by direct double-double summation of sum_n (a)_n/(b)_n z^n/n!,
/// including alternating z < 0 where the extra 16 guard digits absorb the
/// cancellation (worst case here, z = -20, loses ~17 digits of the 32).
/// The shifted factors a+n, b+n enter as exact two_sum pairs: a rounded f64
/// a+n perturbs every term by ~1 ulp, which the cancellation then amplifies
/// far above the dd noise floor.
fn kummer_m_oracle(a: f64, b: f64, z: f64) -> f64 {
    let mut term = dd::from(1.0);
    let mut sum = dd::from(1.0);
    for n in 0..700 {
        let nf = n as f64;
        term = dd::mul(term, dd::two_sum(a, nf));
        term = dd::div(term, dd::two_sum(b, nf));
        term = dd::mul(term, dd::from(z));
        term = dd::div(term, dd::from(nf + 1.0));
        sum = dd::add(sum, term);
        if term.hi.abs() < 1e-34 * sum.hi.abs().max(1e-300) {
            break;
        }
    }
    dd::to_f64(sum)
}

#[test]
fn kummer_m_against_double_double_series() {
    let avals = [-2.5, -1.0, -0.25, 0.5, 1.3];
    let zvals = [-20.0, -15.0, -6.0, -1.0, 0.4, 3.0, 12.0, 20.0];
    for &a in &avals {
        for &z in &zvals {
            let got = kummer_m(a, 1.5, z).unwrap();
            let want = kummer_m_oracle(a, 1.5, z);
            let err = (got - want).abs() / want.abs().max(1.0);
            assert!(
                err < M_DD_TOL,
                "M({a}, 1.5, {z}): got {got}, oracle {want}, rel err {err}"
            );
        }
    }
}

/// Bisection on w e^w = x; 200 halvings of a bracketing interval pin the
/// root to the last ulp regardless of how the library iterates.
fn lambert_oracle(x: f64, mut lo: f64, mut hi: f64) -> f64 {
    let f = |w: f64| w * w.exp() - x;
    assert!(f(lo) < 0.0 && f(hi) > 0.0);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if f(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

#[test]
fn lambert_against_bisection() {
    for &(x, lo, hi) in &[(1.0, 0.0, 1.0), (20.0, 1.0, 3.0), (-0.3, -1.0, 0.0), (1e5, 5.0, 12.0)] {
        let got = lambert_w0(x).unwrap();
        let want = lambert_oracle(x, lo, hi);
        assert!(
            (got - want).abs() <= W_TOL * want.abs().max(1.0),
            "W({x}): got {got}, bisection {want}"
        );
    }
    // Frozen value, from the bisection oracle above.
    assert!((lambert_w0(1.0).unwrap() - 0.567_143_290_409_784).abs() < 1e-15);
}

fn simpson<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, n: usize) -> f64 {
    assert!(n.is_multiple_of(2));
    let h = (b - a) / n as f64;
    let mut s = f(a) + f(b);
    for i in 1..n {
        let w = if i % 2 == 1 { 4.0 } else { 2.0 };
        s += w * f(a + i as f64 * h);
    }
    s * h / 3.0
}

#[test]
fn kummer_m_against_error_function_integral() {
    // M(1/2, 3/2, -z^2) = sqrt(pi) erf(z) / (2z); at z = 1 the right side is
    // exactly the integral of e^{-s^2} over [0,1].
    let integral = simpson(|s| (-s * s).exp(), 0.0, 1.0, 2000);
    let got = kummer_m(0.5, 1.5, -1.0).unwrap();
    assert!(
        (got - integral).abs() < M_QUAD_TOL,
        "got {got}, quadrature {integral}"
    );
    // Frozen value, from the quadrature oracle above.
    assert!((got - 0.746_824_132_812_427_1).abs() < 1e-14);
}

#[test]
fn kummer_u_against_laplace_integral() {
    // U(a, b, z) = (1/Gamma(a)) \int_0^inf e^{-zt} t^{a-1} (1+t)^{b-a-1} dt.
    // The substitution t = s^10 makes the integrand s^(10a-1) * smooth with
    // 10a - 1 = 6, so Simpson keeps its full fourth order at the endpoint.
    let (a, b, z) = (0.7, 1.4, 2.0);
    let integrand = |s: f64| {
        let t = s.powi(10);
        10.0 * s.powi(6) * (-z * t).exp() * (1.0 + t).powf(b - a - 1.0)
    };
    // e^{-z t} kills the tail: t(1.6) = 110, e^{-220} is far below f64.
    let integral = simpson(integrand, 0.0, 1.6, 40_000);
    let gamma_a = {
        let (lg, sign) = log_gamma(a).unwrap();
        sign * lg.exp()
    };
    let want = integral / gamma_a;
    let got = kummer_u(a, b, z).unwrap();
    assert!(
        (got - want).abs() < U_QUAD_TOL * want.abs(),
        "got {got}, quadrature {want}"
    );
}

#[test]
fn dilog_against_power_sum() {
    // Direct sum of z^n/n^2 converges acceptably up to |z| = 0.9 and is a
    // fully independent check of both reduction branches used below 1.
    for &x in &[-0.9, -0.5, -0.1, 0.3, 0.55, 0.7, 0.9] {
        let mut s = 0.0f64;
        let mut pw = 1.0f64;
        for n in 1..2000 {
            pw *= x;
            s += pw / ((n * n) as f64);
        }
        let got = dilog(ComplexValue::new(x, 0.0), DilogConvention::SpenceLi2).unwrap();
        assert!(
            (got.re - s).abs() < LI2_SERIES_TOL && got.im.abs() < 1e-15,
            "Li2({x}): got {got}, power sum {s}"
        );
    }
}

#[test]
fn dilog_frozen_constants() {
    let li2 = |x: f64, y: f64| dilog(ComplexValue::new(x, y), DilogConvention::SpenceLi2).unwrap();
    let pi = std::f64::consts::PI;
    assert!((li2(1.0, 0.0).re - pi * pi / 6.0).abs() < 1e-12);
    assert!((li2(-1.0, 0.0).re + pi * pi / 12.0).abs() < 1e-13);
    // Catalan's constant as Im Li2(i), summed here by its defining series
    // sum (-1)^n / (2n+1)^2 with a midpoint tail correction.
    let mut g = 0.0f64;
    let nmax = 20_000u64;
    for n in 0..nmax {
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        g += sign / ((2 * n + 1) as f64).powi(2);
    }
    // Alternating tail: half the next term corrects to O(N^-3).
    let sign = if nmax.is_multiple_of(2) { 1.0 } else { -1.0 };
    g += 0.5 * sign / ((2 * nmax + 1) as f64).powi(2);
    let got = li2(0.0, 1.0);
    assert!((got.im - g).abs() < 1e-11, "Im Li2(i) = {}, series {g}", got.im);
    assert!((got.re + pi * pi / 48.0).abs() < 1e-13);
}

#[test]
fn log_gamma_against_exact_factorials() {
    // n! is exactly representable in f64 through 15!, giving oracle values
    // ln Gamma(n+1) = ln(n!) with no summation error at all.
    let mut fact = 1.0f64;
    for n in 1..=15u32 {
        fact *= n as f64;
        let (lg, sign) = log_gamma(n as f64 + 1.0).unwrap();
        assert_eq!(sign, 1.0);
        assert!(
            (lg - fact.ln()).abs() < 1e-13 * fact.ln().max(1.0),
            "lnGamma({}) vs ln({n}!)",
            n + 1
        );
    }
    // Gamma(1/2) = sqrt(pi), independent of the factorial ladder.
    let (lg, _) = log_gamma(0.5).unwrap();
    assert!((lg - 0.5 * std::f64::consts::PI.ln()).abs() < 1e-14);
}

#[test]
fn log_gamma_recurrence_walk() {
    // lnGamma(x+1) - lnGamma(x) = ln x across the shift threshold, where a
    // bug in the recurrence bookkeeping would show up first.
    let mut x = 0.6;
    while x < 30.0 {
        let (la, _) = log_gamma(x).unwrap();
        let (lb, _) = log_gamma(x + 1.0).unwrap();
        assert!(
            (lb - la - x.ln()).abs() < 1e-12 * (1.0 + lb.abs()),
            "recurrence broke at x = {x}"
        );
        x += 0.7;
    }
}
