//! Pressure laws and the power-counting algebra that decides whether a
//! self-similar ansatz
//!
//! ```text
//! T = t^-alpha f(eta),  v = t^-delta g(eta),  rho = t^-gamma h(eta),
//! eta = x / t^beta
//! ```
//!
//! closes the system. Matching t-powers in continuity and the heat equation
//! forces beta = delta = 1/2 regardless of the pressure law; each pressure
//! monomial T^p rho^q then adds the linear constraint
//! p alpha + (q - 1) gamma = 1, and temperature-coupled laws additionally
//! close the density decay through gamma = beta. All of this is solved in
//! exact rational arithmetic so that a feasibility verdict is a theorem
//! about the inputs, not a float comparison.

use crate::error::{Error, Result};
use num::rational::Ratio;
use num::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

type Rat = Ratio<i128>;

/// Pressure law p(rho, T). Field names follow the usual one-letter symbols
/// of each law ("big_a" standing in for an upper-case A).
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "model", rename_all = "snake_case")]
pub enum EosModel {
    /// p = a rho^n
    Polytropic { a: f64, n: f64 },
    /// p = (b/2) rho^2
    Quadratic { b: f64 },
    /// p = A rho
    Linear { big_a: f64 },
    /// p = A T rho (1 + B rho + C rho^2)
    Virial { big_a: f64, b: f64, c: f64 },
    /// p = a T rho / (b - rho) - c rho^2
    VanDerWaals { a: f64, b: f64, c: f64 },
}

impl EosModel {
    pub fn name(&self) -> &'static str {
        match self {
            EosModel::Polytropic { .. } => "polytropic",
            EosModel::Quadratic { .. } => "quadratic",
            EosModel::Linear { .. } => "linear",
            EosModel::Virial { .. } => "virial",
            EosModel::VanDerWaals { .. } => "van-der-waals",
        }
    }

    /// Whether the law couples pressure to temperature. Coupled laws must
    /// also carry the temperature equation, whose integral closes the
    /// density decay (gamma = beta).
    pub fn temperature_coupled(&self) -> bool {
        matches!(self, EosModel::Virial { .. } | EosModel::VanDerWaals { .. })
    }
}

/// p(rho, T). Temperature is ignored by the barotropic laws.
pub fn pressure(eos: &EosModel, rho: f64, temperature: f64) -> Result<f64> {
    if !(rho > 0.0) {
        return Err(Error::Domain(format!("pressure: rho = {rho} must be positive")));
    }
    match *eos {
        EosModel::Polytropic { a, n } => {
            check_scale("a", a)?;
            Ok(a * rho.powf(n))
        }
        EosModel::Quadratic { b } => {
            check_scale("b", b)?;
            Ok(0.5 * b * rho * rho)
        }
        EosModel::Linear { big_a } => {
            check_scale("A", big_a)?;
            Ok(big_a * rho)
        }
        EosModel::Virial { big_a, b, c } => {
            check_scale("A", big_a)?;
            Ok(big_a * temperature * rho * (1.0 + b * rho + c * rho * rho))
        }
        EosModel::VanDerWaals { a, b, c } => {
            check_scale("a", a)?;
            check_scale("b", b)?;
            if rho == b {
                return Err(Error::Pole(format!("pressure: rho = b = {b} excluded volume pole")));
            }
            if rho > b {
                return Err(Error::Domain(format!(
                    "pressure: rho = {rho} exceeds the excluded-volume bound b = {b}"
                )));
            }
            Ok(a * temperature * rho / (b - rho) - c * rho * rho)
        }
    }
}

fn check_scale(name: &str, value: f64) -> Result<()> {
    if value > 0.0 {
        Ok(())
    } else {
        Err(Error::Parameter(format!(
            "pressure scale {name} = {value} must be positive"
        )))
    }
}

/// Self-similar exponent bundle. `alpha` is `None` when the pressure law
/// leaves the temperature decay unconstrained (it is then a free parameter
/// of the family, and `free_params` says so). `omega` reports a density
/// spread exponent where it differs from `beta`; the constraint solver never
/// produces one, but profile collapse reports reuse this struct.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Exponents {
    pub alpha: Option<f64>,
    pub beta: f64,
    pub gamma: f64,
    pub delta: f64,
    pub omega: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConstraintResult {
    pub feasible: bool,
    pub exponents: Option<Exponents>,
    pub free_params: Vec<String>,
    pub reason: String,
}

/// One pressure monomial T^p rho^q, with a human label for diagnostics.
#[derive(Clone, Debug, PartialEq)]
pub struct Monomial {
    pub label: String,
    pub t_power: Rat,
    pub rho_power: Rat,
}

/// The monomials a pressure law contributes to the momentum equation.
/// Sums of monomials constrain the ansatz term by term, since distinct
/// powers cannot share a t-scaling.
pub fn pressure_monomials(eos: &EosModel) -> Result<Vec<Monomial>> {
    let mono = |label: &str, p: i128, q: Rat| Monomial {
        label: label.to_string(),
        t_power: Rat::from_integer(p),
        rho_power: q,
    };
    Ok(match *eos {
        EosModel::Polytropic { n, .. } => {
            let n = to_ratio(n).ok_or_else(|| {
                Error::Parameter(format!("polytropic exponent n = {n} is not a small rational"))
            })?;
            vec![Monomial {
                label: format!("rho^{}", fmt_rat(n)),
                t_power: Rat::zero(),
                rho_power: n,
            }]
        }
        EosModel::Quadratic { .. } => vec![mono("rho^2", 0, Rat::from_integer(2))],
        EosModel::Linear { .. } => vec![mono("rho", 0, Rat::from_integer(1))],
        EosModel::Virial { b, c, .. } => {
            let mut v = vec![mono("T rho", 1, Rat::from_integer(1))];
            if b != 0.0 {
                v.push(mono("T rho^2", 1, Rat::from_integer(2)));
            }
            if c != 0.0 {
                v.push(mono("T rho^3", 1, Rat::from_integer(3)));
            }
            v
        }
        // The expansion of a T rho / (b - rho) - c rho^2 around small rho
        // starts with T rho and T rho^2; together with the bare rho^2 term
        // these three already decide feasibility, and every higher-order
        // monomial only repeats the T rho^k pattern.
        EosModel::VanDerWaals { .. } => vec![
            mono("T rho", 1, Rat::from_integer(1)),
            mono("T rho^2", 1, Rat::from_integer(2)),
            mono("rho^2", 0, Rat::from_integer(2)),
        ],
    })
}

/// Decide whether the ansatz closes for this pressure law, and with which
/// exponents. The verdict and all exponent values are exact.
pub fn exponent_constraints(eos: &EosModel) -> Result<ConstraintResult> {
    let monomials = pressure_monomials(eos)?;
    let half = Rat::new(1, 2);

    // Continuity and heat diffusion fix beta = delta = 1/2 before the
    // pressure law enters. Temperature coupling then pins gamma = beta.
    let mut alpha: Option<Rat> = None;
    let mut gamma: Option<Rat> = if eos.temperature_coupled() {
        Some(half)
    } else {
        None
    };
    let mut pinned_gamma_by = if eos.temperature_coupled() {
        "the integrated continuity closure (gamma = beta)".to_string()
    } else {
        String::new()
    };
    let mut pinned_alpha_by = String::new();

    // Each monomial: p alpha + (q - 1) gamma = 1. Two passes so that an
    // equation with two unknowns can use whatever its successors pin down.
    for _pass in 0..2 {
        for m in &monomials {
            let p = m.t_power;
            let qm1 = m.rho_power - Rat::one();
            match (p.is_zero(), qm1.is_zero()) {
                (true, true) => {
                    // 0 = 1: no scaling can balance this term.
                    return Ok(infeasible(format!(
                        "the {} term scales like the density itself, so its gradient \
                         carries no net t-power and the momentum balance 0 = 1 cannot hold; \
                         this law closes through the quasi-stationary reduction instead",
                        m.label
                    )));
                }
                (true, false) => {
                    let g = Rat::one() / qm1;
                    if let Some(g0) = gamma {
                        if g0 != g {
                            return Ok(infeasible(format!(
                                "the {} term needs gamma = {}, but {} already forces gamma = {}",
                                m.label,
                                fmt_rat(g),
                                pinned_gamma_by,
                                fmt_rat(g0)
                            )));
                        }
                    } else {
                        gamma = Some(g);
                        pinned_gamma_by = format!("the {} term", m.label);
                    }
                }
                (false, true) => {
                    let a = Rat::one() / p;
                    if let Some(a0) = alpha {
                        if a0 != a {
                            return Ok(infeasible(format!(
                                "the {} term needs alpha = {}, but {} already forces alpha = {}",
                                m.label,
                                fmt_rat(a),
                                pinned_alpha_by,
                                fmt_rat(a0)
                            )));
                        }
                    } else {
                        alpha = Some(a);
                        pinned_alpha_by = format!("the {} term", m.label);
                    }
                }
                (false, false) => match (alpha, gamma) {
                    (Some(a0), _) => {
                        let g = (Rat::one() - p * a0) / qm1;
                        if let Some(g0) = gamma {
                            if g0 != g {
                                return Ok(infeasible(format!(
                                    "the {} term needs gamma = {} once alpha = {}, but {} \
                                     already forces gamma = {}",
                                    m.label,
                                    fmt_rat(g),
                                    fmt_rat(a0),
                                    pinned_gamma_by,
                                    fmt_rat(g0)
                                )));
                            }
                        } else {
                            gamma = Some(g);
                            pinned_gamma_by = format!("the {} term", m.label);
                        }
                    }
                    (None, Some(g0)) => {
                        let a = (Rat::one() - qm1 * g0) / p;
                        alpha = Some(a);
                        pinned_alpha_by = format!("the {} term", m.label);
                    }
                    (None, None) => {
                        // Leave for the second pass; if nothing pins a value
                        // by then the system is underdetermined.
                    }
                },
            }
        }
    }

    let gamma = match gamma {
        Some(g) => g,
        None => {
            return Ok(infeasible(
                "no pressure term constrains the density decay".to_string(),
            ))
        }
    };

    let mut free_params = Vec::new();
    if alpha.is_none() {
        free_params.push("alpha".to_string());
    }
    let reason = match alpha {
        Some(a) => format!(
            "closed: alpha = {}, beta = delta = 1/2, gamma = {}",
            fmt_rat(a),
            fmt_rat(gamma)
        ),
        None => format!(
            "closed with alpha free: beta = delta = 1/2, gamma = {}",
            fmt_rat(gamma)
        ),
    };
    Ok(ConstraintResult {
        feasible: true,
        exponents: Some(Exponents {
            alpha: alpha.map(rat_to_f64),
            beta: 0.5,
            gamma: rat_to_f64(gamma),
            delta: 0.5,
            omega: None,
        }),
        free_params,
        reason,
    })
}

fn infeasible(reason: String) -> ConstraintResult {
    ConstraintResult {
        feasible: false,
        exponents: None,
        free_params: Vec::new(),
        reason,
    }
}

/// Per-term t-powers of each reduced equation under the solved exponents,
/// exposed so tests can confirm symbolically that every equation is
/// t-homogeneous. Empty when the law is infeasible.
pub fn term_powers(eos: &EosModel) -> Result<Vec<EquationPowers>> {
    let res = exponent_constraints(eos)?;
    let Some(exp) = res.exponents else {
        return Ok(Vec::new());
    };
    // Exact rationals reconstructed from the (dyadic or small-rational)
    // f64 output; alpha may be free, in which case a placeholder value
    // alpha = 1 is used since homogeneity holds for every alpha.
    let alpha = exp
        .alpha
        .map(|a| to_ratio(a).expect("solver output is rational"))
        .unwrap_or_else(Rat::one);
    let gamma = to_ratio_or_thirds(exp.gamma).expect("solver output is rational");
    let beta = Rat::new(1, 2);
    let delta = Rat::new(1, 2);

    let mut out = Vec::new();
    // Continuity: rho_t and (rho v)_x both scale like t^-(gamma + 1) given
    // beta + delta = 1.
    out.push(EquationPowers {
        equation: "continuity",
        terms: vec![
            ("rho_t".to_string(), -(gamma + Rat::one())),
            ("(rho v)_x".to_string(), -(gamma + delta + beta)),
        ],
    });
    // Momentum: v_t, v v_x, and one entry per pressure monomial
    // T^p rho^q whose gradient over rho scales like
    // t^-(p alpha + (q-1) gamma + beta).
    let mut terms = vec![
        ("v_t".to_string(), -(delta + Rat::one())),
        ("v v_x".to_string(), -(delta + delta + beta)),
    ];
    for m in pressure_monomials(eos)? {
        let pw = m.t_power * alpha + (m.rho_power - Rat::one()) * gamma + beta;
        terms.push((format!("({})_x / rho", m.label), -pw));
    }
    out.push(EquationPowers {
        equation: "momentum",
        terms,
    });
    out.push(EquationPowers {
        equation: "heat",
        terms: vec![
            ("T_t".to_string(), -(alpha + Rat::one())),
            ("v T_x".to_string(), -(alpha + delta + beta)),
            ("T_xx".to_string(), -(alpha + beta + beta)),
        ],
    });
    Ok(out)
}

#[derive(Clone, Debug, PartialEq)]
pub struct EquationPowers {
    pub equation: &'static str,
    /// (term label, exact t-exponent as a Ratio<i128>)
    pub terms: Vec<(String, Rat)>,
}

/// Exact f64 -> rational conversion for dyadic values (binary fractions).
fn to_ratio(x: f64) -> Option<Rat> {
    if !x.is_finite() || x.abs() > 1e12 {
        return None;
    }
    let mut num = x;
    let mut den: i128 = 1;
    // den caps at 2^60 so num stays far from i128 overflow even at |x| ~ 1e12.
    while num.fract() != 0.0 {
        if den > (1i128 << 60) {
            return None;
        }
        num *= 2.0;
        den <<= 1;
    }
    Some(Rat::new(num as i128, den))
}

/// Like `to_ratio`, but snaps to the nearest small-denominator rational
/// first (e.g. the f64 nearest to 1/3, coming from a polytropic n = 4, is
/// recognized as 1/3 rather than as its 54-bit dyadic expansion).
fn to_ratio_or_thirds(x: f64) -> Option<Rat> {
    for den in 1..=64i128 {
        let num = (x * den as f64).round();
        if num.abs() < 1e15 && (num / den as f64 - x).abs() <= 4.0 * f64::EPSILON * x.abs() {
            return Some(Rat::new(num as i128, den));
        }
    }
    to_ratio(x)
}

fn rat_to_f64(r: Rat) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

fn fmt_rat(r: Rat) -> String {
    if r.denom().is_one() {
        format!("{}", r.numer())
    } else if r.is_negative() {
        format!("-{}/{}", r.numer().abs(), r.denom())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn pressure_values() {
        // cubic law at rho = 2: p = a * 8
        let p = pressure(&EosModel::Polytropic { a: 0.5, n: 3.0 }, 2.0, 0.0).unwrap();
        assert_relative_eq!(p, 4.0);
        let p = pressure(&EosModel::Quadratic { b: 3.0 }, 2.0, 0.0).unwrap();
        assert_relative_eq!(p, 6.0);
        let p = pressure(&EosModel::Linear { big_a: 1.5 }, 2.0, 0.0).unwrap();
        assert_relative_eq!(p, 3.0);
        let p = pressure(
            &EosModel::Virial { big_a: 2.0, b: 0.5, c: 0.25 },
            1.0,
            3.0,
        )
        .unwrap();
        assert_relative_eq!(p, 2.0 * 3.0 * (1.0 + 0.5 + 0.25));
    }

    #[test]
    fn van_der_waals_guards() {
        let eos = EosModel::VanDerWaals { a: 1.0, b: 2.0, c: 0.1 };
        let p = pressure(&eos, 1.0, 1.0).unwrap();
        assert_relative_eq!(p, 1.0 / (2.0 - 1.0) - 0.1);
        assert!(matches!(pressure(&eos, 2.0, 1.0), Err(Error::Pole(_))));
        assert!(matches!(pressure(&eos, 3.0, 1.0), Err(Error::Domain(_))));
        assert!(matches!(
            pressure(&eos, 0.0, 1.0),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn polytropic_constraints() {
        // n = 3: gamma = 1/(n-1) = 1/2, alpha stays free.
        let r = exponent_constraints(&EosModel::Polytropic { a: 1.0, n: 3.0 }).unwrap();
        assert!(r.feasible);
        let e = r.exponents.unwrap();
        assert_eq!(e.alpha, None);
        assert_eq!(e.gamma, 0.5);
        assert_eq!(e.beta, 0.5);
        assert_eq!(e.delta, 0.5);
        assert_eq!(r.free_params, vec!["alpha".to_string()]);

        // n = 4: gamma = 1/3 exactly (the solver works in rationals, so the
        // f64 output is the correctly rounded third).
        let r = exponent_constraints(&EosModel::Polytropic { a: 1.0, n: 4.0 }).unwrap();
        assert_eq!(r.exponents.unwrap().gamma, 1.0 / 3.0);

        // n = 1 degenerates to the linear law and cannot balance.
        let r = exponent_constraints(&EosModel::Polytropic { a: 1.0, n: 1.0 }).unwrap();
        assert!(!r.feasible);
        assert!(r.reason.contains("quasi-stationary"));
    }

    #[test]
    fn quadratic_feasible_linear_not() {
        let r = exponent_constraints(&EosModel::Quadratic { b: 1.0 }).unwrap();
        assert!(r.feasible);
        assert_eq!(r.exponents.unwrap().gamma, 1.0);
        assert_eq!(r.free_params, vec!["alpha".to_string()]);

        let r = exponent_constraints(&EosModel::Linear { big_a: 1.0 }).unwrap();
        assert!(!r.feasible);
        assert!(r.reason.contains("quasi-stationary"));
    }

    #[test]
    fn virial_constraints() {
        // B = C = 0: fully pinned, alpha = 1, everything else 1/2.
        let r = exponent_constraints(&EosModel::Virial { big_a: 1.0, b: 0.0, c: 0.0 }).unwrap();
        assert!(r.feasible);
        let e = r.exponents.unwrap();
        assert_eq!(e.alpha, Some(1.0));
        assert_eq!((e.beta, e.gamma, e.delta), (0.5, 0.5, 0.5));
        assert!(r.free_params.is_empty());

        // B != 0 adds T rho^2, which wants gamma = 0 against the closure.
        let r = exponent_constraints(&EosModel::Virial { big_a: 1.0, b: 0.3, c: 0.0 }).unwrap();
        assert!(!r.feasible);
        assert!(r.reason.contains("T rho^2"));

        let r = exponent_constraints(&EosModel::Virial { big_a: 1.0, b: 0.0, c: 0.2 }).unwrap();
        assert!(!r.feasible);
        assert!(r.reason.contains("T rho^3"));
    }

    #[test]
    fn van_der_waals_infeasible() {
        let r =
            exponent_constraints(&EosModel::VanDerWaals { a: 1.0, b: 1.0, c: 1.0 }).unwrap();
        assert!(!r.feasible);
        // The contradiction is between the closure gamma = 1/2 and one of
        // the expansion monomials; the reason must name the culprit.
        assert!(r.reason.contains("gamma"), "reason: {}", r.reason);
    }

    #[test]
    fn term_powers_are_homogeneous() {
        for eos in [
            EosModel::Polytropic { a: 1.0, n: 3.0 },
            EosModel::Polytropic { a: 2.0, n: 4.0 },
            EosModel::Polytropic { a: 2.0, n: 2.5 },
            EosModel::Quadratic { b: 1.0 },
            EosModel::Virial { big_a: 1.0, b: 0.0, c: 0.0 },
        ] {
            let eqs = term_powers(&eos).unwrap();
            assert!(!eqs.is_empty());
            for eq in eqs {
                let first = eq.terms[0].1;
                for (label, pw) in &eq.terms {
                    assert_eq!(
                        *pw, first,
                        "{} term {label} scales as t^{} against t^{} in {:?}",
                        eq.equation,
                        fmt_rat(*pw),
                        fmt_rat(first),
                        eos
                    );
                }
            }
        }
    }

    #[test]
    fn infeasible_laws_have_no_term_powers() {
        assert!(term_powers(&EosModel::Linear { big_a: 1.0 }).unwrap().is_empty());
        assert!(term_powers(&EosModel::VanDerWaals { a: 1.0, b: 1.0, c: 1.0 })
            .unwrap()
            .is_empty());
    }

    #[test]
    fn ratio_conversions() {
        assert_eq!(to_ratio(0.5), Some(Rat::new(1, 2)));
        assert_eq!(to_ratio(-2.75), Some(Rat::new(-11, 4)));
        assert_eq!(to_ratio_or_thirds(1.0 / 3.0), Some(Rat::new(1, 3)));
        assert_eq!(to_ratio_or_thirds(2.0 / 7.0), Some(Rat::new(2, 7)));
    }
}
