//! Explicit finite-difference integrator for the coupled system
//!
//! ```text
//! rho_t + (rho v)_x = 0
//! v_t + v v_x = -p_x / rho
//! T_t + v T_x = lambda T_xx
//! ```
//!
//! built as a referee for the analytic families, not as a production solver:
//! first order in time, local Lax-Friedrichs density flux (provably
//! conservative), upwinded advection, central pressure gradient and
//! diffusion. The momentum equation is integrated in the primitive form
//! above because that is the form the analytic families satisfy.

use crate::analytic::{eval_state, EvalMode, SolutionFamily};
use crate::eos::{pressure, EosModel};
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::time::{Duration, Instant};

/// Cells with rho below this are treated as vacuum: their sound speed is 0
/// and their velocity is pinned to 0, since p_x/rho is singular at a
/// compact-support front.
pub const VACUUM_FLOOR: f64 = 1e-14;

/// Uniform cell-centered grid: cell i is centered at x0 + (i + 1/2) dx.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Grid1D {
    pub x0: f64,
    pub dx: f64,
    pub n: usize,
}

impl Grid1D {
    pub fn new(x0: f64, dx: f64, n: usize) -> Result<Self> {
        if !(dx > 0.0) || !dx.is_finite() {
            return Err(Error::Parameter(format!("grid spacing dx = {dx} must be positive")));
        }
        if n < 3 {
            return Err(Error::Parameter(format!("grid needs at least 3 cells, got {n}")));
        }
        if !x0.is_finite() || !(n as f64 * dx).is_finite() {
            return Err(Error::Parameter("grid extent must be finite".into()));
        }
        Ok(Grid1D { x0, dx, n })
    }

    pub fn center(&self, i: usize) -> f64 {
        self.x0 + (i as f64 + 0.5) * self.dx
    }

    pub fn centers(&self) -> Vec<f64> {
        (0..self.n).map(|i| self.center(i)).collect()
    }

    /// Domain covered by the cells, [x0, x0 + n dx].
    pub fn span(&self) -> (f64, f64) {
        (self.x0, self.x0 + self.n as f64 * self.dx)
    }
}

/// Discrete fields at one instant. Families without a temperature store
/// zeros there; the heat equation then just diffuses nothing.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct State {
    pub grid: Grid1D,
    pub t: f64,
    pub rho: Vec<f64>,
    pub v: Vec<f64>,
    pub temperature: Vec<f64>,
}

impl State {
    pub fn validate(&self) -> Result<()> {
        let n = self.grid.n;
        if self.rho.len() != n || self.v.len() != n || self.temperature.len() != n {
            return Err(Error::Parameter(format!(
                "state arrays ({}, {}, {}) must all match the grid's {n} cells",
                self.rho.len(),
                self.v.len(),
                self.temperature.len()
            )));
        }
        Ok(())
    }
}

/// Boundary treatment for [`step`].
#[derive(Clone, Debug)]
pub enum BcSpec {
    Periodic,
    /// Ghost cells traced from the analytic family at the current time each
    /// step. Needed on bounded windows of growing self-similar fields.
    DirichletFromFamily(SolutionFamily),
    /// Zero-gradient extrapolation.
    Outflow,
}

/// Knobs for [`simulate`] and [`stable_dt`]; the defaults suit every run in
/// this repository.
#[derive(Clone, Debug)]
pub struct SolverConfig {
    /// Cap on dt when no wave speed or diffusivity bounds the step.
    pub dt_max: f64,
    /// Hard step-count stop per simulate call.
    pub max_steps: usize,
    /// Wall-clock abort for runaway runs.
    pub wall_budget: Option<Duration>,
    /// Snapshot times for simulate; None means a single snapshot at t_end.
    pub output_times: Option<Vec<f64>>,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            dt_max: 0.1,
            max_steps: 20_000_000,
            wall_budget: Some(Duration::from_secs(600)),
            output_times: None,
        }
    }
}

/// Isothermal sound speed squared dp/drho at fixed T, clamped at 0.
fn sound_speed(eos: &EosModel, rho: f64, temperature: f64) -> f64 {
    let cs2 = match *eos {
        EosModel::Polytropic { a, n } => a * n * rho.powf(n - 1.0),
        EosModel::Quadratic { b } => b * rho,
        EosModel::Linear { big_a } => big_a,
        EosModel::Virial { big_a, b, c } => {
            big_a * temperature * (1.0 + 2.0 * b * rho + 3.0 * c * rho * rho)
        }
        EosModel::VanDerWaals { a, b, c } => {
            a * temperature * b / ((b - rho) * (b - rho)) - 2.0 * c * rho
        }
    };
    if cs2 > 0.0 {
        cs2.sqrt()
    } else {
        0.0
    }
}

/// Largest stable explicit step at the given CFL number:
/// cfl * min( dx / max(|v| + c_s), dx^2 / 2 lambda ), capped by dt_max.
/// Vacuum cells contribute no wave speed; a state with no wave speed at all
/// (and lambda = 0) falls back to the dt_max cap.
pub fn stable_dt(state: &State, eos: &EosModel, lambda: f64, cfl: f64) -> Result<f64> {
    stable_dt_cfg(state, eos, lambda, cfl, &SolverConfig::default())
}

pub fn stable_dt_cfg(
    state: &State,
    eos: &EosModel,
    lambda: f64,
    cfl: f64,
    cfg: &SolverConfig,
) -> Result<f64> {
    state.validate()?;
    if !(cfl > 0.0 && cfl <= 1.0) {
        return Err(Error::Parameter(format!("cfl = {cfl} must lie in (0, 1]")));
    }
    if lambda < 0.0 {
        return Err(Error::Parameter(format!("lambda = {lambda} must be nonnegative")));
    }
    let dx = state.grid.dx;
    let mut dt = cfg.dt_max;
    let mut max_speed: f64 = 0.0;
    for i in 0..state.grid.n {
        let rho = state.rho[i];
        let cs = if rho < VACUUM_FLOOR {
            0.0
        } else {
            sound_speed(eos, rho, state.temperature[i])
        };
        max_speed = max_speed.max(state.v[i].abs() + cs);
    }
    if max_speed > 0.0 {
        dt = dt.min(cfl * dx / max_speed);
    }
    if lambda > 0.0 {
        dt = dt.min(cfl * dx * dx / (2.0 * lambda));
    }
    Ok(dt)
}

/// Ghost-extended copy of a field: index i+1 holds cell i, index 0 and n+1
/// hold the boundary values for the chosen bc.
fn extend(field: &[f64], bc_left: f64, bc_right: f64) -> Vec<f64> {
    let mut e = Vec::with_capacity(field.len() + 2);
    e.push(bc_left);
    e.extend_from_slice(field);
    e.push(bc_right);
    e
}

struct GhostFields {
    rho: Vec<f64>,
    v: Vec<f64>,
    temperature: Vec<f64>,
}

fn ghost_fields(state: &State, bc: &BcSpec) -> Result<GhostFields> {
    let n = state.grid.n;
    let (rho, v, temperature) = match bc {
        BcSpec::Periodic => (
            extend(&state.rho, state.rho[n - 1], state.rho[0]),
            extend(&state.v, state.v[n - 1], state.v[0]),
            extend(&state.temperature, state.temperature[n - 1], state.temperature[0]),
        ),
        BcSpec::Outflow => (
            extend(&state.rho, state.rho[0], state.rho[n - 1]),
            extend(&state.v, state.v[0], state.v[n - 1]),
            extend(&state.temperature, state.temperature[0], state.temperature[n - 1]),
        ),
        BcSpec::DirichletFromFamily(family) => {
            let xl = state.grid.x0 - 0.5 * state.grid.dx;
            let xr = state.grid.x0 + (n as f64 + 0.5) * state.grid.dx;
            let left = eval_state(family, xl, state.t, EvalMode::Corrected)?;
            let right = eval_state(family, xr, state.t, EvalMode::Corrected)?;
            (
                extend(&state.rho, left.rho, right.rho),
                extend(&state.v, left.v.unwrap_or(0.0), right.v.unwrap_or(0.0)),
                extend(
                    &state.temperature,
                    left.temperature.unwrap_or(0.0),
                    right.temperature.unwrap_or(0.0),
                ),
            )
        }
    };
    Ok(GhostFields { rho, v, temperature })
}

/// One explicit step of size dt. Pure: the input state is untouched.
pub fn step(
    state: &State,
    eos: &EosModel,
    lambda: f64,
    dt: f64,
    bc: &BcSpec,
) -> Result<State> {
    state.validate()?;
    if !(dt > 0.0) || !dt.is_finite() {
        return Err(Error::Domain(format!("step: dt = {dt} must be positive and finite")));
    }
    if lambda < 0.0 {
        return Err(Error::Parameter(format!("lambda = {lambda} must be nonnegative")));
    }
    let n = state.grid.n;
    let dx = state.grid.dx;
    let g = ghost_fields(state, bc)?;

    // Pressure and sound speed from the old fields; vacuum cells get the
    // floor density so the EOS stays in-domain.
    let mut p = vec![0.0; n + 2];
    let mut cs = vec![0.0; n + 2];
    for j in 0..n + 2 {
        let rho_eff = g.rho[j].max(VACUUM_FLOOR);
        p[j] = pressure(eos, rho_eff, g.temperature[j])?;
        cs[j] = if g.rho[j] < VACUUM_FLOOR {
            0.0
        } else {
            sound_speed(eos, g.rho[j], g.temperature[j])
        };
    }

    // Local Lax-Friedrichs mass flux at face j+1/2 (between ghost indices j
    // and j+1). Telescoping of these faces is what conserves mass.
    let face_flux = |j: usize| -> f64 {
        let a = (g.v[j].abs() + cs[j]).max(g.v[j + 1].abs() + cs[j + 1]);
        0.5 * (g.rho[j] * g.v[j] + g.rho[j + 1] * g.v[j + 1]) - 0.5 * a * (g.rho[j + 1] - g.rho[j])
    };

    let mut rho_new = vec![0.0; n];
    let mut v_new = vec![0.0; n];
    let mut t_new = vec![0.0; n];
    for i in 0..n {
        let j = i + 1; // ghost index of cell i
        rho_new[i] = g.rho[j] - dt / dx * (face_flux(j) - face_flux(j - 1));

        let vi = g.v[j];
        if g.rho[j] < VACUUM_FLOOR {
            v_new[i] = 0.0;
        } else {
            let adv = if vi > 0.0 {
                (vi - g.v[j - 1]) / dx
            } else {
                (g.v[j + 1] - vi) / dx
            };
            let pgrad = (p[j + 1] - p[j - 1]) / (2.0 * dx);
            v_new[i] = vi - dt * (vi * adv + pgrad / g.rho[j]);
        }

        let ti = g.temperature[j];
        let adv_t = if vi > 0.0 {
            (ti - g.temperature[j - 1]) / dx
        } else {
            (g.temperature[j + 1] - ti) / dx
        };
        let diffusion = (g.temperature[j + 1] - 2.0 * ti + g.temperature[j - 1]) / (dx * dx);
        t_new[i] = ti - dt * vi * adv_t + dt * lambda * diffusion;
    }

    for (what, arr) in [("rho", &rho_new), ("v", &v_new), ("temperature", &t_new)] {
        if let Some(cell) = arr.iter().position(|x| !x.is_finite()) {
            return Err(Error::Instability {
                t: state.t,
                cell,
                what: format!("non-finite {what} after step"),
            });
        }
    }

    Ok(State {
        grid: state.grid,
        t: state.t + dt,
        rho: rho_new,
        v: v_new,
        temperature: t_new,
    })
}

/// March from ic to t_end with adaptive steps, returning snapshots at the
/// configured output times (default: just t_end). Output instants are hit by
/// shortening the final step, never by interpolation.
pub fn simulate(
    ic: &State,
    eos: &EosModel,
    lambda: f64,
    t_end: f64,
    cfl: f64,
    bc: &BcSpec,
) -> Result<Vec<State>> {
    simulate_cfg(ic, eos, lambda, t_end, cfl, bc, &SolverConfig::default())
}

pub fn simulate_cfg(
    ic: &State,
    eos: &EosModel,
    lambda: f64,
    t_end: f64,
    cfl: f64,
    bc: &BcSpec,
    cfg: &SolverConfig,
) -> Result<Vec<State>> {
    ic.validate()?;
    if !t_end.is_finite() || t_end < ic.t {
        return Err(Error::Domain(format!(
            "t_end = {t_end} must be finite and not precede the initial time {}",
            ic.t
        )));
    }
    let outputs = match &cfg.output_times {
        None => vec![t_end],
        Some(times) => {
            if times.is_empty() {
                return Err(Error::Parameter("output_times must not be empty".into()));
            }
            for w in times.windows(2) {
                if w[1] <= w[0] {
                    return Err(Error::Parameter(format!(
                        "output times must be strictly increasing, got {} then {}",
                        w[0], w[1]
                    )));
                }
            }
            if times[0] < ic.t || *times.last().unwrap() > t_end {
                return Err(Error::Parameter(format!(
                    "output times must lie within [{}, {t_end}]",
                    ic.t
                )));
            }
            times.clone()
        }
    };

    let started = Instant::now();
    let mut current = ic.clone();
    let mut snapshots = Vec::with_capacity(outputs.len());
    let mut steps_taken = 0usize;
    for &t_out in &outputs {
        while current.t < t_out {
            if let Some(budget) = cfg.wall_budget {
                if started.elapsed() > budget {
                    return Err(Error::WallClock {
                        budget_secs: budget.as_secs_f64(),
                        t: current.t,
                    });
                }
            }
            if steps_taken >= cfg.max_steps {
                return Err(Error::Convergence { op: "time stepping", limit: cfg.max_steps });
            }
            steps_taken += 1;
            let dt_stable = stable_dt_cfg(&current, eos, lambda, cfl, cfg)?;
            let remaining = t_out - current.t;
            let lands = remaining <= dt_stable;
            let dt = if lands { remaining } else { dt_stable };
            current = step(&current, eos, lambda, dt, bc)?;
            if lands {
                current.t = t_out;
            }
        }
        snapshots.push(current.clone());
    }
    Ok(snapshots)
}

/// Integrate the reduced porous-medium equation rho_t1 = (rho^2)_xx alone,
/// with held boundary cells, from t1_start through the requested output
/// instants. Returns (t1, density) pairs. Used to test the front law
/// without momentum-equation confounds.
///
/// The step respects the positivity bound dt <= dx^2 / (8 max rho) with a
/// 0.9 safety factor, under which the update preserves rho >= 0 and, while
/// the support stays away from the held boundary cells, conserves mass
/// exactly up to roundoff.
pub fn porous_media_mode(
    grid: &Grid1D,
    rho0: &[f64],
    t1_start: f64,
    output_t1: &[f64],
) -> Result<Vec<(f64, Vec<f64>)>> {
    const MAX_STEPS: usize = 200_000_000;
    if rho0.len() != grid.n {
        return Err(Error::Parameter(format!(
            "initial density has {} cells, grid has {}",
            rho0.len(),
            grid.n
        )));
    }
    if rho0.iter().any(|r| !r.is_finite() || *r < 0.0) {
        return Err(Error::Domain("initial density must be finite and nonnegative".into()));
    }
    if output_t1.is_empty() {
        return Err(Error::Parameter("output_t1 must not be empty".into()));
    }
    for w in output_t1.windows(2) {
        if w[1] <= w[0] {
            return Err(Error::Parameter("output_t1 must be strictly increasing".into()));
        }
    }
    if output_t1[0] < t1_start {
        return Err(Error::Parameter(format!(
            "first output {} precedes t1_start {t1_start}",
            output_t1[0]
        )));
    }

    let n = grid.n;
    let dx = grid.dx;
    let mut rho = rho0.to_vec();
    let mut t1 = t1_start;
    let mut steps = 0usize;
    let mut trajectory = Vec::with_capacity(output_t1.len());
    for &target in output_t1 {
        while t1 < target {
            // Held boundaries are only valid while the support is interior.
            if rho[1] > 0.0 || rho[n - 2] > 0.0 {
                return Err(Error::Domain(format!(
                    "density support reached the grid boundary at t1 = {t1}; enlarge the domain"
                )));
            }
            let max_rho = rho.iter().copied().fold(0.0f64, f64::max);
            if max_rho == 0.0 {
                t1 = target; // nothing evolves
                break;
            }
            if steps >= MAX_STEPS {
                return Err(Error::Convergence { op: "porous-medium stepping", limit: MAX_STEPS });
            }
            steps += 1;
            let dt_pos = 0.9 * dx * dx / (8.0 * max_rho);
            let remaining = target - t1;
            let lands = remaining <= dt_pos;
            let dt = if lands { remaining } else { dt_pos };
            let mut next = rho.clone();
            let r = dt / (dx * dx);
            for i in 1..n - 1 {
                let lap = rho[i + 1] * rho[i + 1] - 2.0 * rho[i] * rho[i]
                    + rho[i - 1] * rho[i - 1];
                next[i] = rho[i] + r * lap;
            }
            rho = next;
            t1 = if lands { target } else { t1 + dt };
        }
        trajectory.push((t1, rho.clone()));
    }
    Ok(trajectory)
}

/// Discretize an analytic family onto a grid at time t: the initial
/// condition generator for referee runs. Undefined velocities (vacuum) and
/// absent temperatures become zeros.
pub fn sample_family(
    family: &SolutionFamily,
    grid: &Grid1D,
    t: f64,
    mode: EvalMode,
) -> Result<State> {
    let mut rho = Vec::with_capacity(grid.n);
    let mut v = Vec::with_capacity(grid.n);
    let mut temperature = Vec::with_capacity(grid.n);
    for i in 0..grid.n {
        let pt = eval_state(family, grid.center(i), t, mode)?;
        rho.push(pt.rho);
        v.push(pt.v.unwrap_or(0.0));
        temperature.push(pt.temperature.unwrap_or(0.0));
    }
    Ok(State { grid: *grid, t, rho, v, temperature })
}
