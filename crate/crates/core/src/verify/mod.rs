//! Numerical audits of the analytic families.
//!
//! Everything here treats a family as a black-box field (x, t) -> state and
//! interrogates it with finite differences, reduced one-variable residuals,
//! profile-collapse checks, and front tracking. The `erratum` submodule
//! cross-examines the published form of each family against its corrected
//! form; `suite` bundles the whole battery into one pass/fail report.

mod erratum;
mod instances;
mod suite;

pub use erratum::{erratum_report, ErratumEntry};
pub use suite::{criterion_ids, run_all, run_one, CriterionResult, SuiteReport};

use crate::analytic::{
    bzk_kummer, cgauss_kummer, dvirial_f, dvirial_first_zero, dvirial_integrand,
    eval_state, front_position, neglected_momentum, quadrature_log_density, EvalMode,
    SolutionFamily, StatePoint,
};
use crate::eos::{pressure, Exponents};
use crate::error::{Error, Result};
use crate::solver::{Grid1D, VACUUM_FLOOR};
use serde::{Deserialize, Serialize};

/// Rectangle in the (x, t) plane on which residuals are sampled.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Region {
    pub x: (f64, f64),
    pub t: (f64, f64),
}

impl Region {
    pub fn new(x_lo: f64, x_hi: f64, t_lo: f64, t_hi: f64) -> Result<Self> {
        let r = Region { x: (x_lo, x_hi), t: (t_lo, t_hi) };
        r.validate()?;
        Ok(r)
    }

    fn validate(&self) -> Result<()> {
        let ok = self.x.0.is_finite()
            && self.x.1.is_finite()
            && self.t.0.is_finite()
            && self.t.1.is_finite()
            && self.x.0 < self.x.1
            && self.t.0 < self.t.1;
        if ok {
            Ok(())
        } else {
            Err(Error::Parameter(format!(
                "region x in [{}, {}], t in [{}, {}] must be finite with positive extent",
                self.x.0, self.x.1, self.t.0, self.t.1
            )))
        }
    }
}

/// Residual magnitudes of one equation over the sample set.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Norms {
    pub linf: f64,
    /// Root mean square over the samples.
    pub l2: f64,
}

/// Finite-difference residuals of the governing equations for one family on
/// one region. `norms` runs parallel to `eq_names`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ResidualReport {
    pub family: String,
    pub mode: EvalMode,
    pub eq_names: Vec<String>,
    pub norms: Vec<Norms>,
    pub dx: f64,
    pub dt: f64,
    pub region: Region,
    /// Largest gap between the measured momentum residual and the family's
    /// declared neglected field, where one exists.
    pub momentum_model_deviation: Option<f64>,
    pub samples_used: usize,
    pub samples_skipped: usize,
    /// Filled by callers that run a resolution ladder; a single report
    /// cannot estimate an order.
    pub order_estimate: Option<f64>,
}

impl ResidualReport {
    /// Largest Linf norm across the equations.
    pub fn worst_linf(&self) -> f64 {
        self.norms.iter().map(|n| n.linf).fold(0.0, f64::max)
    }

    pub fn norm_for(&self, eq: &str) -> Option<Norms> {
        self.eq_names.iter().position(|n| n == eq).map(|i| self.norms[i])
    }
}

/// Sup norms of the reduced one-variable residuals, parallel to `eq_names`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct OdeResidual {
    pub family: String,
    pub mode: EvalMode,
    pub eq_names: Vec<String>,
    pub sup: Vec<f64>,
    pub eta_range: (f64, f64),
    pub n_samples: usize,
}

impl OdeResidual {
    pub fn worst(&self) -> f64 {
        self.sup.iter().copied().fold(0.0, f64::max)
    }
}

/// Outcome of rescaling snapshots at several times onto common profiles.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CollapseReport {
    pub family: String,
    pub times: Vec<f64>,
    pub max_pairwise_deviation: f64,
    pub exponents_used: Exponents,
}

/// Power-law fit of a moving support edge.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct FrontFit {
    pub exponent: f64,
    pub amplitude: f64,
    /// RMS misfit of the log-log regression.
    pub fit_residual: f64,
    pub front_moved: bool,
}

/// Tunables of the residual sampler. Defaults match every audit in this
/// repository.
#[derive(Clone, Copy, Debug)]
pub struct VerifyConfig {
    /// Stencils must stay this many cells clear of a compact-support front.
    pub front_margin_cells: f64,
    /// Stencils must stay this far (in eta) from a zero of the virial
    /// temperature profile, where the density slope has a pole.
    pub fzero_margin: f64,
    /// Sample columns across the region.
    pub nx: usize,
    /// Sample rows across the region.
    pub nt: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { front_margin_cells: 3.0, fzero_margin: 1e-2, nx: 12, nt: 9 }
    }
}

/// Five-point first derivative, error O(h^4).
fn d1(u: &[f64; 5], h: f64) -> f64 {
    (-u[4] + 8.0 * u[3] - 8.0 * u[1] + u[0]) / (12.0 * h)
}

/// Five-point second derivative, error O(h^4).
fn d2(u: &[f64; 5], h: f64) -> f64 {
    (-u[4] + 16.0 * u[3] - 30.0 * u[2] + 16.0 * u[1] - u[0]) / (12.0 * h * h)
}

fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    if n == 1 {
        return vec![0.5 * (lo + hi)];
    }
    (0..n).map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64).collect()
}

fn require_velocity(pt: &StatePoint, x: f64, t: f64) -> Result<f64> {
    pt.v.ok_or_else(|| {
        Error::Singularity(format!("velocity undefined at x = {x}, t = {t} (outside support)"))
    })
}

/// Whether a sample point's stencil would cross a front or a profile pole.
fn stencil_excluded(
    family: &SolutionFamily,
    x: f64,
    t: f64,
    dx: f64,
    dt: f64,
    cfg: &VerifyConfig,
) -> Result<bool> {
    match *family {
        SolutionFamily::BZk { b, amp, .. } => {
            let t_early = t - dt;
            let t1 = b * t_early * t_early / 4.0;
            let front = front_position(t1, amp, 2)?;
            Ok(x.abs() + 2.0 * dx > front - cfg.front_margin_cells * dx)
        }
        SolutionFamily::DVirial { lambda, c1, c2, .. } => {
            // eta = x'/sqrt(t') is monotone in each argument, so the
            // stencil's reach in eta is set by its four corners
            let corners = [
                (x - 2.0 * dx) / (t - dt).sqrt(),
                (x - 2.0 * dx) / (t + dt).sqrt(),
                (x + 2.0 * dx) / (t - dt).sqrt(),
                (x + 2.0 * dx) / (t + dt).sqrt(),
            ];
            let lo = corners.iter().copied().fold(f64::INFINITY, f64::min);
            let hi = corners.iter().copied().fold(f64::NEG_INFINITY, f64::max);
            if let Some(z) = dvirial_first_zero(c1, c2, lambda, 1.0) {
                if hi > z - cfg.fzero_margin {
                    return Ok(true);
                }
            }
            if let Some(z) = dvirial_first_zero(c1, c2, lambda, -1.0) {
                if lo < z + cfg.fzero_margin {
                    return Ok(true);
                }
            }
            Ok(false)
        }
        _ => Ok(false),
    }
}

/// Finite-difference residuals of the full system for one family: each field
/// is sampled on a cell-centered grid over the region and differentiated
/// with fourth-order stencils in x and second-order in t, so the reported
/// norms measure the fields, not the differencing, down to roughly dt^2.
pub fn pde_residual(
    family: &SolutionFamily,
    region: &Region,
    dx: f64,
    dt: f64,
    mode: EvalMode,
) -> Result<ResidualReport> {
    pde_residual_cfg(family, region, dx, dt, mode, &VerifyConfig::default())
}

pub fn pde_residual_cfg(
    family: &SolutionFamily,
    region: &Region,
    dx: f64,
    dt: f64,
    mode: EvalMode,
    cfg: &VerifyConfig,
) -> Result<ResidualReport> {
    region.validate()?;
    if !(dx > 0.0) || !(dt > 0.0) || !dx.is_finite() || !dt.is_finite() {
        return Err(Error::Parameter(format!("dx = {dx} and dt = {dt} must be positive")));
    }
    if cfg.nx == 0 || cfg.nt == 0 {
        return Err(Error::Parameter("sampler needs at least one row and column".into()));
    }
    if region.t.0 - dt <= 0.0 {
        return Err(Error::Domain(format!(
            "time stencil reaches t = {} but the fields need t > 0",
            region.t.0 - dt
        )));
    }

    let eos = family.implied_eos();
    // a family without a diffusivity parameter balances temperature by pure
    // advection, so the diffusion term is absent rather than defaulted
    let lambda = family.lambda().unwrap_or(0.0);
    let probe = eval_state(
        family,
        0.5 * (region.x.0 + region.x.1),
        0.5 * (region.t.0 + region.t.1),
        mode,
    )?;
    let has_temperature = probe.temperature.is_some();

    let mut eq_names = vec!["continuity".to_string(), "momentum".to_string()];
    if has_temperature {
        eq_names.push("heat".to_string());
    }
    let mut linf = vec![0.0f64; eq_names.len()];
    let mut ss = vec![0.0f64; eq_names.len()];

    let tracks_model = mode == EvalMode::Corrected
        && matches!(
            family,
            SolutionFamily::BZk { .. }
                | SolutionFamily::CGauss { .. }
                | SolutionFamily::CTravel { .. }
        );
    let mut model_dev: Option<f64> = if tracks_model { Some(0.0) } else { None };

    let mut used = 0usize;
    let mut skipped = 0usize;
    for j in 0..cfg.nt {
        let t = region.t.0 + (j as f64 + 0.5) * (region.t.1 - region.t.0) / cfg.nt as f64;
        for i in 0..cfg.nx {
            let x = region.x.0 + (i as f64 + 0.5) * (region.x.1 - region.x.0) / cfg.nx as f64;
            if stencil_excluded(family, x, t, dx, dt, cfg)? {
                skipped += 1;
                continue;
            }
            used += 1;

            let mut row: Vec<StatePoint> = Vec::with_capacity(5);
            for k in -2i32..=2 {
                row.push(eval_state(family, x + k as f64 * dx, t, mode)?);
            }
            let minus = eval_state(family, x, t - dt, mode)?;
            let plus = eval_state(family, x, t + dt, mode)?;
            let center = &row[2];

            let mut vrow = [0.0; 5];
            let mut wrow = [0.0; 5];
            let mut prow = [0.0; 5];
            for k in 0..5 {
                let xk = x + (k as f64 - 2.0) * dx;
                let vk = require_velocity(&row[k], xk, t)?;
                vrow[k] = vk;
                wrow[k] = row[k].rho * vk;
                prow[k] = pressure(
                    &eos,
                    row[k].rho.max(VACUUM_FLOOR),
                    row[k].temperature.unwrap_or(0.0),
                )?;
            }
            let vc = vrow[2];
            let rho_c = center.rho.max(VACUUM_FLOOR);

            let rho_t = (plus.rho - minus.rho) / (2.0 * dt);
            let res_c = rho_t + d1(&wrow, dx);

            let v_t = (require_velocity(&plus, x, t + dt)?
                - require_velocity(&minus, x, t - dt)?)
                / (2.0 * dt);
            let res_m = v_t + vc * d1(&vrow, dx) + d1(&prow, dx) / rho_c;

            let mut residuals = vec![res_c, res_m];
            if has_temperature {
                let grab = |pt: &StatePoint| {
                    pt.temperature.ok_or_else(|| {
                        Error::Singularity(format!("temperature undefined near x = {x}, t = {t}"))
                    })
                };
                let mut trow = [0.0; 5];
                for k in 0..5 {
                    trow[k] = grab(&row[k])?;
                }
                let temp_t = (grab(&plus)? - grab(&minus)?) / (2.0 * dt);
                residuals.push(temp_t + vc * d1(&trow, dx) - lambda * d2(&trow, dx));
            }

            for (e, r) in residuals.iter().enumerate() {
                if !r.is_finite() {
                    return Err(Error::Singularity(format!(
                        "non-finite {} residual at x = {x}, t = {t}",
                        eq_names[e]
                    )));
                }
                linf[e] = linf[e].max(r.abs());
                ss[e] += r * r;
            }
            if let Some(dev) = model_dev.as_mut() {
                let model = neglected_momentum(family, x, t)?;
                *dev = dev.max((res_m - model).abs());
            }
        }
    }
    if used == 0 {
        return Err(Error::InsufficientData(format!(
            "every sample point on the region fell inside an exclusion margin for {}",
            family.name()
        )));
    }

    let norms = linf
        .iter()
        .zip(&ss)
        .map(|(&li, &s)| Norms { linf: li, l2: (s / used as f64).sqrt() })
        .collect();
    Ok(ResidualReport {
        family: family.name().to_string(),
        mode,
        eq_names,
        norms,
        dx,
        dt,
        region: *region,
        momentum_model_deviation: model_dev,
        samples_used: used,
        samples_skipped: skipped,
        order_estimate: None,
    })
}

/// Reduced one-variable residuals of a family in its similarity (or
/// traveling) coordinate, corrected form.
pub fn ode_residual(
    family: &SolutionFamily,
    eta_range: (f64, f64),
    n_samples: usize,
) -> Result<OdeResidual> {
    ode_residual_mode(family, eta_range, n_samples, EvalMode::Corrected)
}

/// [`ode_residual`] for either form of a family; the published forms are
/// what the erratum checks interrogate.
pub fn ode_residual_mode(
    family: &SolutionFamily,
    eta_range: (f64, f64),
    n_samples: usize,
    mode: EvalMode,
) -> Result<OdeResidual> {
    let (lo, hi) = eta_range;
    if !(lo < hi) || !lo.is_finite() || !hi.is_finite() {
        return Err(Error::Parameter(format!("eta range [{lo}, {hi}] must be finite and ordered")));
    }
    if n_samples < 2 {
        return Err(Error::Parameter(format!("n_samples = {n_samples} must be at least 2")));
    }
    let etas = linspace(lo, hi, n_samples);

    let (eq_names, sup) = match *family {
        SolutionFamily::ACubic { a, c1, c2, c3, alpha, lambda } => {
            let mut sup = vec![0.0f64; 3];
            for &eta in &etas {
                let (h, hp) = crate::analytic::acubic_h(a, c1, eta, mode)?;
                let (f, _, fpp) = crate::analytic::acubic_f(c2, c3, alpha, lambda, eta, mode)?;
                let g = eta / 2.0;
                let gp = 0.5;
                // continuity reduces to an identity in these profiles
                let res_c = -0.5 * h - 0.5 * eta * hp + gp * h + g * hp;
                let res_m = 3.0 * a * h * hp - eta / 4.0;
                let res_h = lambda * fpp + alpha * f;
                for (s, r) in sup.iter_mut().zip([res_c, res_m, res_h]) {
                    *s = s.max(r.abs());
                }
            }
            (vec!["continuity", "momentum", "heat"], sup)
        }
        SolutionFamily::BZk { gamma, lambda, c1, c2, .. } => {
            let shape = bzk_kummer(gamma, lambda, c1, c2)?;
            let mut sup = 0.0f64;
            for &eta in &etas {
                let (f, fp, fpp) = shape.eval(eta)?;
                sup = sup.max((lambda * fpp - eta * fp / 6.0 + gamma * f).abs());
            }
            (vec!["heat"], vec![sup])
        }
        SolutionFamily::CGauss { gamma, lambda, c1, c2, .. } => {
            let shape = cgauss_kummer(gamma, lambda, c1, c2, mode)?;
            let drift = match mode {
                EvalMode::Corrected => 0.5,
                EvalMode::AsPrinted => 1.5,
            };
            let mut sup = 0.0f64;
            for &eta in &etas {
                let (f, fp, fpp) = shape.eval(eta)?;
                sup = sup.max((lambda * fpp - drift * eta * fp + gamma * f).abs());
            }
            (vec!["heat"], vec![sup])
        }
        SolutionFamily::BTravel { a, b, c1, c2 } => {
            let mut sup = 0.0f64;
            for &zeta in &etas {
                let (h, hp, hpp) = crate::analytic::btravel_h(a, b, c1, c2, zeta, mode)?;
                sup = sup.max((b * h * hpp + hp * (b * hp + a)).abs());
            }
            (vec!["wave"], vec![sup])
        }
        SolutionFamily::CTravel { a, big_a, c1, .. } => {
            // density profile obeys A rho' = a (rho - c1); probe it by
            // differencing the evaluated field along x at t = 1
            let t = 1.0;
            let dz = 1e-3;
            let shift = match mode {
                EvalMode::Corrected => -a * t * t / 2.0, // zeta = x + a t^2/2
                EvalMode::AsPrinted => a * t * t / 2.0,
            };
            let mut sup = 0.0f64;
            for &zeta in &etas {
                let x = zeta + shift;
                let mut rr = [0.0; 5];
                for (k, slot) in rr.iter_mut().enumerate() {
                    *slot = eval_state(family, x + (k as f64 - 2.0) * dz, t, mode)?.rho;
                }
                sup = sup.max((big_a * d1(&rr, dz) - a * (rr[2] - c1)).abs());
            }
            (vec!["density"], vec![sup])
        }
        SolutionFamily::DVirial { big_a, lambda, c1, c2, .. } => {
            let mut sup_heat = 0.0f64;
            for &eta in &etas {
                let (f, _, fpp) = dvirial_f(c1, c2, lambda, eta);
                sup_heat = sup_heat.max((lambda * fpp + f).abs());
            }
            let sup_slope =
                dvirial_log_slope_defect(big_a, lambda, c1, c2, &etas, 1e-2, mode)?;
            (vec!["heat", "density-slope"], vec![sup_heat, sup_slope])
        }
    };

    Ok(OdeResidual {
        family: family.name().to_string(),
        mode,
        eq_names: eq_names.into_iter().map(str::to_string).collect(),
        sup,
        eta_range,
        n_samples,
    })
}

/// Sup over the samples of |d/d eta log h - declared slope| for the virial
/// density, with the derivative taken by a five-point stencil of spacing
/// `d_eta`. In corrected form log h is the integral of the slope, so this
/// measures quadrature plus differencing error; in published form the
/// exponential is missing and the defect is order one.
pub(crate) fn dvirial_log_slope_defect(
    big_a: f64,
    lambda: f64,
    c1: f64,
    c2: f64,
    etas: &[f64],
    d_eta: f64,
    mode: EvalMode,
) -> Result<f64> {
    let log_h = |eta: f64| -> Result<f64> {
        let integral = quadrature_log_density(big_a, lambda, c1, c2, eta)?;
        match mode {
            EvalMode::Corrected => Ok(integral),
            EvalMode::AsPrinted => {
                if integral <= 0.0 {
                    return Err(Error::Domain(format!(
                        "published density profile is nonpositive at eta = {eta}"
                    )));
                }
                Ok(integral.ln())
            }
        }
    };
    let mut sup = 0.0f64;
    for &eta in etas {
        let mut lrow = [0.0; 5];
        for (k, slot) in lrow.iter_mut().enumerate() {
            *slot = log_h(eta + (k as f64 - 2.0) * d_eta)?;
        }
        let slope = dvirial_integrand(big_a, lambda, c1, c2, eta)?;
        sup = sup.max((d1(&lrow, d_eta) - slope).abs());
    }
    Ok(sup)
}

/// Scale each self-similar field back to its profile at several times and
/// measure how far the rescaled snapshots disagree. Exact families collapse
/// to rounding error.
pub fn collapse_test(
    family: &SolutionFamily,
    times: &[f64],
    eta_grid: &[f64],
) -> Result<CollapseReport> {
    if !family.is_self_similar() {
        return Err(Error::NotDefined { family: family.name(), what: "profile collapse" });
    }
    if times.len() < 2 {
        return Err(Error::Parameter("collapse needs at least two times".into()));
    }
    if times.iter().any(|t| !t.is_finite() || *t <= 0.0) {
        return Err(Error::Parameter("collapse times must be positive and finite".into()));
    }
    for w in times.windows(2) {
        if w[1] <= w[0] {
            return Err(Error::Parameter("collapse times must be strictly increasing".into()));
        }
    }
    if eta_grid.is_empty() || eta_grid.iter().any(|e| !e.is_finite()) {
        return Err(Error::Parameter("eta grid must be nonempty and finite".into()));
    }

    // (decay, spread) per field: field(x, t) = t^-decay * profile(x / t^spread)
    let (rho_exp, temp_decay) = match *family {
        SolutionFamily::ACubic { alpha, .. } => ((0.5, 0.5), alpha),
        SolutionFamily::BZk { gamma, .. } => ((2.0 / 3.0, 2.0 / 3.0), gamma),
        SolutionFamily::CGauss { gamma, .. } => ((1.0, 1.0), gamma),
        SolutionFamily::DVirial { .. } => ((0.5, 0.5), 1.0),
        _ => unreachable!("non-self-similar families rejected above"),
    };
    let v_exp = (0.5, 0.5);
    let t_exp = (temp_decay, 0.5);

    let mut max_dev = 0.0f64;
    for &eta in eta_grid {
        let mut per_time: Vec<[f64; 3]> = Vec::with_capacity(times.len());
        for &t in times {
            let x_rho = eta * t.powf(rho_exp.1);
            let rho = eval_state(family, x_rho, t, EvalMode::Corrected)?.rho;
            let x_vt = eta * t.powf(v_exp.1);
            let pt = eval_state(family, x_vt, t, EvalMode::Corrected)?;
            let v = require_velocity(&pt, x_vt, t)?;
            let temperature = pt.temperature.ok_or_else(|| {
                Error::Singularity(format!("temperature undefined at x = {x_vt}, t = {t}"))
            })?;
            per_time.push([
                t.powf(rho_exp.0) * rho,
                t.powf(v_exp.0) * v,
                t.powf(t_exp.0) * temperature,
            ]);
        }
        for i in 0..per_time.len() {
            for j in i + 1..per_time.len() {
                for (a, b) in per_time[i].iter().zip(per_time[j].iter()) {
                    max_dev = max_dev.max((a - b).abs());
                }
            }
        }
    }

    Ok(CollapseReport {
        family: family.name().to_string(),
        times: times.to_vec(),
        max_pairwise_deviation: max_dev,
        exponents_used: Exponents {
            alpha: Some(t_exp.0),
            beta: 0.5,
            gamma: rho_exp.0,
            delta: 0.5,
            omega: if rho_exp.1 != 0.5 { Some(rho_exp.1) } else { None },
        },
    })
}

/// Fit x_front = amplitude * t^exponent to the rightmost threshold crossing
/// of each snapshot, with sub-cell linear interpolation at the crossing.
/// The default threshold is 1e-6 of the trajectory's peak density.
pub fn front_fit(
    grid: &Grid1D,
    trajectory: &[(f64, Vec<f64>)],
    threshold: Option<f64>,
) -> Result<FrontFit> {
    if trajectory.len() < 2 {
        return Err(Error::InsufficientData(
            "front fit needs at least two snapshots".into(),
        ));
    }
    let peak = trajectory
        .iter()
        .flat_map(|(_, rho)| rho.iter().copied())
        .fold(0.0f64, f64::max);
    if peak <= 0.0 {
        return Err(Error::InsufficientData("all snapshots are empty".into()));
    }
    let theta = threshold.unwrap_or(1e-6 * peak);
    if !(theta > 0.0) {
        return Err(Error::Parameter(format!("threshold {theta} must be positive")));
    }

    let mut points = Vec::with_capacity(trajectory.len());
    for (t, rho) in trajectory {
        if !(t.is_finite() && *t > 0.0) {
            return Err(Error::Parameter(format!("snapshot time {t} must be positive")));
        }
        if rho.len() != grid.n {
            return Err(Error::Parameter(format!(
                "snapshot has {} cells, grid has {}",
                rho.len(),
                grid.n
            )));
        }
        let Some(i) = (0..grid.n).rev().find(|&i| rho[i] > theta) else {
            continue; // nothing above threshold in this snapshot
        };
        let x_f = if i + 1 < grid.n && rho[i + 1] < rho[i] {
            let frac = (rho[i] - theta) / (rho[i] - rho[i + 1]);
            grid.center(i) + frac.min(1.0) * grid.dx
        } else {
            grid.center(i) + 0.5 * grid.dx
        };
        points.push((*t, x_f));
    }
    if points.len() < 2 {
        return Err(Error::InsufficientData(format!(
            "only {} snapshots crossed the threshold {theta}",
            points.len()
        )));
    }
    if points.iter().any(|&(_, x)| x <= 0.0) {
        return Err(Error::InsufficientData(
            "front positions must be positive for a power-law fit".into(),
        ));
    }

    let n = points.len() as f64;
    let (mut su, mut sv, mut suu, mut suv) = (0.0, 0.0, 0.0, 0.0);
    for &(t, x) in &points {
        let (u, v) = (t.ln(), x.ln());
        su += u;
        sv += v;
        suu += u * u;
        suv += u * v;
    }
    let det = n * suu - su * su;
    if det.abs() <= 1e-12 * n * suu.abs().max(1.0) {
        return Err(Error::InsufficientData(
            "snapshot times too close together for a slope estimate".into(),
        ));
    }
    let slope = (n * suv - su * sv) / det;
    let intercept = (sv - slope * su) / n;
    let mut ss = 0.0;
    for &(t, x) in &points {
        let r = x.ln() - (intercept + slope * t.ln());
        ss += r * r;
    }
    let (x_min, x_max) = points
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &(_, x)| (lo.min(x), hi.max(x)));

    Ok(FrontFit {
        exponent: slope,
        amplitude: intercept.exp(),
        fit_residual: (ss / n).sqrt(),
        front_moved: x_max - x_min > 1e-9 * (x_max.abs() + grid.dx),
    })
}

/// Least-squares order of accuracy from a resolution ladder of residual
/// reports: the slope of log(worst Linf) against log(dx). The ladder must
/// be geometric (constant refinement ratio) and strictly refining.
pub fn convergence_order(reports: &[ResidualReport]) -> Result<f64> {
    if reports.len() < 2 {
        return Err(Error::InsufficientData(
            "order estimation needs at least two resolutions".into(),
        ));
    }
    for w in reports.windows(2) {
        if !(w[1].dx < w[0].dx) {
            return Err(Error::InsufficientData(
                "reports must be ordered from coarse to fine".into(),
            ));
        }
    }
    let ratio0 = reports[0].dx / reports[1].dx;
    for w in reports.windows(2) {
        let r = w[0].dx / w[1].dx;
        if (r - ratio0).abs() > 1e-6 * ratio0 {
            return Err(Error::InsufficientData(format!(
                "refinement ratios {r} and {ratio0} differ; the ladder must be geometric"
            )));
        }
    }
    let mut pts = Vec::with_capacity(reports.len());
    for rep in reports {
        let e = rep.worst_linf();
        if e <= 0.0 {
            return Err(Error::InsufficientData(
                "a residual hit zero; nothing left to fit an order to".into(),
            ));
        }
        pts.push((rep.dx.ln(), e.ln()));
    }
    let n = pts.len() as f64;
    let (mut su, mut sv, mut suu, mut suv) = (0.0, 0.0, 0.0, 0.0);
    for &(u, v) in &pts {
        su += u;
        sv += v;
        suu += u * u;
        suv += u * v;
    }
    Ok((n * suv - su * sv) / (n * suu - su * su))
}
