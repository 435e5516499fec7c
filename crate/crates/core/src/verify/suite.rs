//! The acceptance battery: ten go/no-go criteria covering the special
//! functions, every solution family, the time integrator, and the erratum
//! findings. [`run_all`] never panics and never aborts early; a criterion
//! that cannot even be computed is reported as failed with the error text.

use super::instances;
use super::{
    collapse_test, convergence_order, erratum_report, front_fit, linspace, ode_residual,
    pde_residual,
};
use crate::analytic::{
    eval_state, virial_density, zk_profile, EvalMode, SolutionFamily, VirialDensity, VirialPath,
};
use crate::eos::{exponent_constraints, EosModel};
use crate::error::Result;
use crate::solver::{porous_media_mode, sample_family, simulate, BcSpec, Grid1D};
use crate::specfun::{dilog, kummer_m, lambert_w0, ComplexValue, DilogConvention};
use serde::{Deserialize, Serialize};
use std::f64::consts::{E, PI};

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CriterionResult {
    pub id: String,
    pub name: String,
    pub passed: bool,
    pub details: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SuiteReport {
    pub criteria: Vec<CriterionResult>,
    pub all_passed: bool,
}

type CriterionDef = (&'static str, &'static str, fn() -> Result<(bool, String)>);

fn definitions() -> Vec<CriterionDef> {
    vec![
        ("c1", "special functions against independent oracles", c1_special_functions),
        ("c2", "cubic and virial families satisfy the full system", c2_exact_families),
        ("c3", "quasi-stationary families: exact transport, declared momentum defect", c3_quasi_stationary),
        ("c4", "reduced one-variable forms hold", c4_reduced_forms),
        ("c5", "porous-medium front follows the t^(1/3) law", c5_front_law),
        ("c6", "time integrator converges to the cubic family", c6_integrator),
        ("c7", "self-similar profiles collapse", c7_collapse),
        ("c8", "published-vs-corrected defects reproduce", c8_erratum),
        ("c9", "wave shape and odd-temperature structure", c9_structure),
        ("c10", "exponent bookkeeping is exact", c10_constraints),
    ]
}

fn execute((id, name, body): CriterionDef) -> CriterionResult {
    match body() {
        Ok((passed, details)) => {
            CriterionResult { id: id.into(), name: name.into(), passed, details }
        }
        Err(e) => CriterionResult {
            id: id.into(),
            name: name.into(),
            passed: false,
            details: format!("could not evaluate: {e}"),
        },
    }
}

/// The criterion ids [`run_one`] understands, in report order.
pub fn criterion_ids() -> Vec<&'static str> {
    definitions().into_iter().map(|d| d.0).collect()
}

/// Run a single criterion by id; None if the id is unknown.
pub fn run_one(id: &str) -> Option<CriterionResult> {
    definitions().into_iter().find(|d| d.0 == id).map(execute)
}

/// Run every acceptance criterion and collect the outcomes.
pub fn run_all() -> SuiteReport {
    let criteria: Vec<CriterionResult> = definitions().into_iter().map(execute).collect();
    let all_passed = criteria.iter().all(|c| c.passed);
    SuiteReport { criteria, all_passed }
}

/// Confluent hypergeometric series summed in double-double arithmetic: an
/// oracle sharing no code with the production path. The rising factors
/// a + k, b + k, k + 1 are exact f64 sums for every (a, b, k) used here.
mod dd {
    #[derive(Clone, Copy)]
    pub struct Dd(f64, f64);

    fn two_sum(a: f64, b: f64) -> Dd {
        let s = a + b;
        let bb = s - a;
        Dd(s, (a - (s - bb)) + (b - bb))
    }

    fn quick_two_sum(a: f64, b: f64) -> Dd {
        let s = a + b;
        Dd(s, b - (s - a))
    }

    fn two_prod(a: f64, b: f64) -> Dd {
        let p = a * b;
        Dd(p, a.mul_add(b, -p))
    }

    impl Dd {
        fn add(self, o: Dd) -> Dd {
            let Dd(s, e) = two_sum(self.0, o.0);
            quick_two_sum(s, e + self.1 + o.1)
        }

        fn mul_f64(self, m: f64) -> Dd {
            let Dd(p, e) = two_prod(self.0, m);
            quick_two_sum(p, e + self.1 * m)
        }

        fn div_f64(self, d: f64) -> Dd {
            let q0 = self.0 / d;
            let Dd(p, e) = two_prod(q0, d);
            let r = ((self.0 - p) - e) + self.1;
            quick_two_sum(q0, r / d)
        }
    }

    pub fn kummer_m_series(a: f64, b: f64, z: f64) -> f64 {
        let mut term = Dd(1.0, 0.0);
        let mut sum = Dd(1.0, 0.0);
        for k in 0..700 {
            let kf = k as f64;
            term = term.mul_f64(a + kf).div_f64(b + kf).mul_f64(z).div_f64(kf + 1.0);
            if term.0 == 0.0 {
                break;
            }
            sum = sum.add(term);
            if term.0.abs() <= 1e-34 * sum.0.abs().max(1e-300) {
                break;
            }
        }
        sum.0 + sum.1
    }
}

pub(crate) use dd::kummer_m_series;

fn c1_special_functions() -> Result<(bool, String)> {
    // root identity of the Lambert function over the whole principal range
    let (lo, hi) = (-1.0 / E + 1e-9, 20.0);
    let mut w_gap = 0.0f64;
    for i in 0..10_000 {
        let y = lo + (hi - lo) * i as f64 / 9_999.0;
        let w = lambert_w0(y)?;
        w_gap = w_gap.max((w * w.exp() - y).abs() / y.abs().max(1.0));
    }

    // Kummer M against the double-double series on a 25 x 40 parameter grid
    let mut m_gap = 0.0f64;
    for i in 0..25 {
        let a = -3.0 + 0.1875 * i as f64;
        for j in 0..40 {
            let z = -20.0 + 40.0 * j as f64 / 39.0;
            let lib = kummer_m(a, 1.5, z)?;
            let oracle = kummer_m_series(a, 1.5, z);
            m_gap = m_gap.max((lib - oracle).abs() / oracle.abs().max(1.0));
        }
    }

    // dilogarithm: the central special value and the reflection identity
    let li_one = dilog(ComplexValue::new(1.0, 0.0), DilogConvention::SpenceLi2)?;
    let li1_gap = (li_one.re - PI * PI / 6.0).abs().max(li_one.im.abs());
    let mut refl_gap = 0.0f64;
    for k in 1..1000 {
        let x = k as f64 / 1000.0;
        let a = dilog(ComplexValue::new(x, 0.0), DilogConvention::SpenceLi2)?;
        let b = dilog(ComplexValue::new(1.0 - x, 0.0), DilogConvention::SpenceLi2)?;
        let rhs = PI * PI / 6.0 - x.ln() * (1.0 - x).ln();
        refl_gap = refl_gap.max((a.re + b.re - rhs).abs());
    }

    let passed = w_gap <= 1e-12 && m_gap <= 1e-10 && li1_gap <= 1e-12 && refl_gap <= 1e-10;
    Ok((
        passed,
        format!(
            "W root identity {w_gap:.2e} (<=1e-12), Kummer M vs series {m_gap:.2e} (<=1e-10), \
             Li2(1) {li1_gap:.2e} (<=1e-12), reflection {refl_gap:.2e} (<=1e-10)"
        ),
    ))
}

fn c2_exact_families() -> Result<(bool, String)> {
    let region = instances::standard_region();
    let mut passed = true;
    let mut notes = Vec::new();
    for family in [instances::acubic(), instances::dvirial()] {
        let ladder: Vec<_> = [4e-3, 2e-3, 1e-3]
            .iter()
            .map(|&d| pde_residual(&family, &region, d, d, EvalMode::Corrected))
            .collect::<Result<_>>()?;
        let worst = ladder.last().unwrap().worst_linf();
        let order = convergence_order(&ladder)?;
        passed &= worst < 1e-6 && (1.9..=4.2).contains(&order);
        notes.push(format!("{}: Linf {worst:.2e} (<1e-6), order {order:.2}", family.name()));
    }
    Ok((passed, notes.join("; ")))
}

fn c3_quasi_stationary() -> Result<(bool, String)> {
    let region = instances::standard_region();
    let mut passed = true;
    let mut notes = Vec::new();
    for family in [instances::bzk(), instances::cgauss(), instances::ctravel()] {
        let rep = pde_residual(&family, &region, 1e-3, 1e-3, EvalMode::Corrected)?;
        let cont = rep.norm_for("continuity").unwrap().linf;
        let heat = rep.norm_for("heat").unwrap().linf;
        let defect = rep.momentum_model_deviation.unwrap_or(f64::INFINITY);
        passed &= cont < 1e-6 && heat < 1e-6 && defect < 1e-6;
        notes.push(format!(
            "{}: continuity {cont:.2e}, heat {heat:.2e}, momentum-vs-model {defect:.2e} (all <1e-6)",
            family.name()
        ));
    }
    Ok((passed, notes.join("; ")))
}

fn c4_reduced_forms() -> Result<(bool, String)> {
    let wave = ode_residual(&instances::btravel(), (-5.0, 5.0), 1001)?.worst();
    let bzk = ode_residual(&instances::bzk(), (0.0, 5.0), 1001)?.worst();
    let gauss = ode_residual(&instances::cgauss(), (0.0, 5.0), 1001)?.worst();

    // the pinned virial instance has a dilogarithm closed form; compare it
    // with the quadrature, profiles normalized at the center
    let family = instances::dvirial_closed_form();
    let quad_at = |eta: f64| -> Result<f64> {
        match virial_density(eta, &family, VirialPath::Quadrature)? {
            VirialDensity::Quadrature(h) => Ok(h),
            VirialDensity::ClosedForm(_) => unreachable!("asked for the quadrature path"),
        }
    };
    let closed_at = |eta: f64| -> Result<(f64, f64)> {
        match virial_density(eta, &family, VirialPath::ClosedForm)? {
            VirialDensity::ClosedForm(cf) => Ok((cf.shifted_dilog.re, cf.spence_li2.re)),
            VirialDensity::Quadrature(_) => unreachable!("asked for the closed form"),
        }
    };
    let q0 = quad_at(0.0)?;
    let (sh0, sp0) = closed_at(0.0)?;
    let (mut dev_shifted, mut dev_spence) = (0.0f64, 0.0f64);
    for eta in linspace(0.0, 1.4, 141) {
        let q = quad_at(eta)? / q0;
        let (sh, sp) = closed_at(eta)?;
        dev_shifted = dev_shifted.max((q - sh / sh0).abs());
        dev_spence = dev_spence.max((q - sp / sp0).abs());
    }
    let (best, convention) = if dev_shifted <= dev_spence {
        (dev_shifted, "shifted-argument dilog")
    } else {
        (dev_spence, "principal Li2")
    };

    let passed = wave < 1e-8 && bzk < 1e-8 && gauss < 1e-8 && best <= 1e-6;
    Ok((
        passed,
        format!(
            "wave ODE {wave:.2e}, porous temperature ODE {bzk:.2e}, gaussian temperature ODE \
             {gauss:.2e} (all <1e-8); virial quadrature vs closed form {best:.2e} under the \
             {convention} convention (other reading differs by {:.2e})",
            dev_shifted.max(dev_spence)
        ),
    ))
}

fn c5_front_law() -> Result<(bool, String)> {
    let n = 4000;
    let grid = Grid1D::new(-8.0, 16.0 / n as f64, n)?;
    let rho0: Vec<f64> =
        (0..n).map(|i| zk_profile(grid.center(i), 1.0, 1.0, 2)).collect::<Result<_>>()?;
    let outputs: Vec<f64> = (1..=8).map(|k| k as f64).collect();
    let traj = porous_media_mode(&grid, &rho0, 1.0, &outputs)?;

    let mass0: f64 = rho0.iter().sum::<f64>() * grid.dx;
    let mut mass_drift = 0.0f64;
    for (_, rho) in &traj {
        let m: f64 = rho.iter().sum::<f64>() * grid.dx;
        mass_drift = mass_drift.max((m - mass0).abs() / mass0);
    }

    let fit = front_fit(&grid, &traj, None)?;
    let amp_ref = 12.0f64.sqrt();
    let exp_err = (fit.exponent - 1.0 / 3.0).abs();
    let amp_err = (fit.amplitude - amp_ref).abs() / amp_ref;
    let passed = exp_err <= 0.02 && amp_err <= 0.03 && mass_drift <= 1e-10 && fit.front_moved;
    Ok((
        passed,
        format!(
            "exponent {:.4} (1/3 +- 0.02), amplitude {:.4} vs {amp_ref:.4} ({:.2}%, <=3%), \
             mass drift {mass_drift:.2e} (<=1e-10)",
            fit.exponent,
            fit.amplitude,
            100.0 * amp_err
        ),
    ))
}

fn c6_integrator() -> Result<(bool, String)> {
    let family = instances::acubic();
    let eos = family.implied_eos();
    let lambda = family.lambda().unwrap_or(1.0);
    let (t0, t_end) = (1.0, 1.2);
    let bc = BcSpec::DirichletFromFamily(family);
    let mut errors = Vec::new();
    for n in [60usize, 120] {
        let grid = Grid1D::new(0.1, 0.9 / n as f64, n)?;
        let ic = sample_family(&family, &grid, t0, EvalMode::Corrected)?;
        let traj = simulate(&ic, &eos, lambda, t_end, 0.4, &bc)?;
        let fin = traj.last().unwrap();
        let exact = sample_family(&family, &grid, t_end, EvalMode::Corrected)?;
        let l1 = fin
            .rho
            .iter()
            .zip(&exact.rho)
            .chain(fin.v.iter().zip(&exact.v))
            .chain(fin.temperature.iter().zip(&exact.temperature))
            .map(|(a, b)| (a - b).abs())
            .sum::<f64>()
            * grid.dx
            / 3.0;
        errors.push(l1);
    }
    let order = (errors[0] / errors[1]).log2();
    Ok((
        order >= 0.9,
        format!(
            "L1 error {:.3e} at n=60, {:.3e} at n=120: order {order:.3} (>=0.9)",
            errors[0], errors[1]
        ),
    ))
}

fn c7_collapse() -> Result<(bool, String)> {
    let times = [1.0, 2.0, 4.0];
    let wide = linspace(-2.0, 2.0, 41);
    let virial_etas = linspace(0.1, 1.2, 23);
    let mut passed = true;
    let mut notes = Vec::new();
    for (family, etas) in [
        (instances::acubic(), &wide),
        (instances::bzk(), &wide),
        (instances::cgauss(), &wide),
        (instances::dvirial(), &virial_etas),
    ] {
        let rep = collapse_test(&family, &times, etas)?;
        passed &= rep.max_pairwise_deviation < 1e-10;
        notes.push(format!("{}: {:.2e}", family.name(), rep.max_pairwise_deviation));
    }
    Ok((passed, format!("max pairwise deviation (<1e-10) {}", notes.join(", "))))
}

fn c8_erratum() -> Result<(bool, String)> {
    let entries = erratum_report()?;
    let failed: Vec<&str> =
        entries.iter().filter(|e| !e.confirmed).map(|e| e.id.as_str()).collect();
    let passed = failed.is_empty() && entries.len() == 7;
    let details = if passed {
        format!("all {} defects confirmed at both resolutions", entries.len())
    } else {
        format!("unconfirmed: {}", failed.join(", "))
    };
    Ok((passed, details))
}

fn c9_structure() -> Result<(bool, String)> {
    // the traveling wave, in its published orientation: a rising profile
    // with a left plateau at b c1 / a = 1 and drift approaching -t rightward
    let wave = instances::btravel();
    let t = 1.0;
    let zetas = linspace(-30.0, 30.0, 601);
    let mut monotone = true;
    let mut prev = f64::NEG_INFINITY;
    let mut first = (0.0, 0.0);
    let mut last = (0.0, 0.0);
    for (idx, &zeta) in zetas.iter().enumerate() {
        let pt = eval_state(&wave, zeta + 0.5 * t * t, t, EvalMode::AsPrinted)?;
        let v = pt.v.expect("traveling wave velocity is defined everywhere");
        monotone &= pt.rho >= prev - 1e-12 * prev.abs().max(1.0);
        prev = pt.rho;
        if idx == 0 {
            first = (pt.rho, v);
        }
        last = (pt.rho, v);
    }
    let plateau_gap = (first.0 - 1.0).abs();
    let left_v = first.1.abs();
    let right_v_gap = (last.1 + t).abs();
    let wave_ok = monotone && plateau_gap <= 0.01 && left_v <= 0.01 && right_v_gap <= 0.06;

    // the gaussian family's pure M-branch temperature: exactly odd in x,
    // peak decaying in t
    let gauss = SolutionFamily::CGauss { big_a: 1.0, gamma: 1.0, c1: 1.0, c2: 0.0, lambda: 1.0 };
    let mut odd_gap = 0.0f64;
    let mut peaks = Vec::new();
    for &t in &[1.0, 2.0, 4.0] {
        let mut peak = 0.0f64;
        for i in 0..=100 {
            let x = 5.0 * i as f64 / 100.0;
            let tp = eval_state(&gauss, x, t, EvalMode::Corrected)?
                .temperature
                .expect("this family always has a temperature");
            let tm = eval_state(&gauss, -x, t, EvalMode::Corrected)?
                .temperature
                .expect("this family always has a temperature");
            odd_gap = odd_gap.max((tp + tm).abs());
            peak = peak.max(tp.abs());
        }
        peaks.push(peak);
    }
    let decaying = peaks[1] < peaks[0] && peaks[2] < peaks[1];
    let gauss_ok = odd_gap <= 1e-12 && decaying;

    Ok((
        wave_ok && gauss_ok,
        format!(
            "wave: monotone {monotone}, plateau gap {plateau_gap:.2e} (<=0.01), left drift \
             {left_v:.2e} (<=0.01), right drift gap {right_v_gap:.3} (<=0.06); temperature: \
             oddness {odd_gap:.2e} (<=1e-12), peaks {:.3} > {:.3} > {:.3}",
            peaks[0], peaks[1], peaks[2]
        ),
    ))
}

fn c10_constraints() -> Result<(bool, String)> {
    let cubic = exponent_constraints(&EosModel::Polytropic { a: 1.0, n: 3.0 })?;
    let cubic_ok = cubic.feasible
        && cubic.exponents.is_some_and(|e| {
            e.gamma == 0.5 && e.beta == 0.5 && e.delta == 0.5 && e.alpha.is_none()
        });

    let virial = exponent_constraints(&EosModel::Virial { big_a: 1.0, b: 0.0, c: 0.0 })?;
    let virial_ok = virial.feasible
        && virial.exponents.is_some_and(|e| {
            e.alpha == Some(1.0) && e.beta == 0.5 && e.gamma == 0.5 && e.delta == 0.5
        });

    let vdw = exponent_constraints(&EosModel::VanDerWaals { a: 1.0, b: 2.0, c: 0.5 })?;
    let vdw_ok = !vdw.feasible;

    Ok((
        cubic_ok && virial_ok && vdw_ok,
        format!(
            "cubic law feasible with gamma = 1/2: {cubic_ok}; temperature-coupled linear law \
             pins (alpha, beta, gamma, delta) = (1, 1/2, 1/2, 1/2): {virial_ok}; \
             van der Waals infeasible: {vdw_ok}"
        ),
    ))
}
