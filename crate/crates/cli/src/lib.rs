//! Command-line front end for the solution catalog: sample the analytic
//! families into plot data, run the release verification suite, march the
//! coupled system numerically, overlay self-similar profiles, interrogate
//! the exponent bookkeeping, and print the published-versus-corrected
//! findings.
//!
//! Exit codes: 0 success, 1 a verification check failed, 2 the request was
//! malformed, 3 a computation failed.

mod config;
mod family;
mod rows;

use std::collections::BTreeSet;
use std::ffi::OsString;
use std::fs;
use std::io::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use eulerheat::analytic::{eval_state, EvalMode, SolutionFamily};
use eulerheat::eos::{exponent_constraints, ConstraintResult, EosModel, Exponents};
use eulerheat::solver::{sample_family, simulate_cfg, BcSpec, Grid1D, SolverConfig};
use eulerheat::verify::{
    collapse_test, criterion_ids, erratum_report, run_one, CriterionResult, SuiteReport,
};

use config::FileConfig;
use family::{build_family, default_mode, default_window, ParamBag};
use rows::Row;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY: i32 = 1;
pub const EXIT_CONFIG: i32 = 2;
pub const EXIT_NUMERIC: i32 = 3;

#[derive(Parser)]
#[command(
    name = "eulerheat",
    version,
    about = "Analytic solution families of 1D gas flow with heat conduction, \
             and the tooling that checks them"
)]
struct Cli {
    /// Flat key = value file; flags override its entries.
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sample an analytic family and write x,t,rho,v,T rows.
    Eval(EvalArgs),
    /// Run the acceptance suite; nonzero exit on any failure.
    Verify(VerifyArgs),
    /// March the coupled system from a family's state and write snapshots.
    Simulate(SimulateArgs),
    /// Rescale a self-similar family at several times and report the spread.
    Collapse(CollapseArgs),
    /// Ask which similarity exponents an equation of state admits.
    Constraints(ConstraintsArgs),
    /// Compare published and corrected forms of every catalogued defect.
    Erratum(ErratumArgs),
}

#[derive(Args, Default)]
struct FamilyArgs {
    /// One of: a-cubic, b-zk, b-travel, c-gauss, c-travel, d-virial.
    #[arg(long)]
    family: Option<String>,
    #[arg(long, allow_negative_numbers = true)]
    a: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    b: Option<f64>,
    #[arg(long = "big-a", allow_negative_numbers = true)]
    big_a: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    amp: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    c1: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    c2: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    c3: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    tc1: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    tc2: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    alpha: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    gamma: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    lambda: Option<f64>,
    /// Evaluate the forms exactly as published (default for b-travel).
    #[arg(long = "as-printed", num_args = 0..=1, default_missing_value = "true")]
    as_printed: Option<bool>,
}

#[derive(Args, Default)]
struct WindowArgs {
    #[arg(long, allow_negative_numbers = true)]
    x0: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    x1: Option<f64>,
    #[arg(long)]
    nx: Option<usize>,
    #[arg(long, allow_negative_numbers = true)]
    t0: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    t1: Option<f64>,
    #[arg(long)]
    nt: Option<usize>,
}

#[derive(Args, Default)]
struct OutputArgs {
    /// Output file; stdout when absent.
    #[arg(long)]
    output: Option<PathBuf>,
    /// csv or json for sample tables; text or json for reports.
    #[arg(long)]
    format: Option<String>,
}

#[derive(Args)]
struct EvalArgs {
    #[command(flatten)]
    family: FamilyArgs,
    #[command(flatten)]
    window: WindowArgs,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct VerifyArgs {
    /// "all" or a comma-separated subset of criterion ids, e.g. c1,c5.
    #[arg(long)]
    suite: Option<String>,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct SimulateArgs {
    #[command(flatten)]
    family: FamilyArgs,
    #[command(flatten)]
    window: WindowArgs,
    #[command(flatten)]
    out: OutputArgs,
    /// Courant factor in (0, 1].
    #[arg(long, allow_negative_numbers = true)]
    cfl: Option<f64>,
    /// Boundary handling: family, periodic, or outflow.
    #[arg(long)]
    bc: Option<String>,
}

#[derive(Args)]
struct CollapseArgs {
    #[command(flatten)]
    family: FamilyArgs,
    #[command(flatten)]
    out: OutputArgs,
    /// Snapshot times to overlay.
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    times: Option<Vec<f64>>,
    #[arg(long, allow_negative_numbers = true)]
    eta0: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    eta1: Option<f64>,
    #[arg(long)]
    neta: Option<usize>,
}

#[derive(Args)]
struct ConstraintsArgs {
    /// One of: polytropic, quadratic, linear, virial, vdw.
    #[arg(long)]
    eos: Option<String>,
    #[arg(long, allow_negative_numbers = true)]
    a: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    n: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    b: Option<f64>,
    #[arg(long = "big-a", allow_negative_numbers = true)]
    big_a: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    c: Option<f64>,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct ErratumArgs {
    #[command(flatten)]
    out: OutputArgs,
}

enum Failure {
    Config(String),
    Numeric(String),
}

impl Failure {
    fn report(self) -> i32 {
        match self {
            Failure::Config(msg) => {
                eprintln!("error: {msg}");
                EXIT_CONFIG
            }
            Failure::Numeric(msg) => {
                eprintln!("numerical failure: {msg}");
                EXIT_NUMERIC
            }
        }
    }
}

/// Map a config-file or parse problem to exit code 2.
fn conf<T>(r: Result<T, String>) -> Result<T, Failure> {
    r.map_err(Failure::Config)
}

/// Map a library error to exit code 3: the request was well-formed but the
/// computation could not deliver.
fn num<T>(r: eulerheat::Result<T>) -> Result<T, Failure> {
    r.map_err(|e| Failure::Numeric(e.to_string()))
}

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), Failure> {
    if cond {
        Ok(())
    } else {
        Err(Failure::Config(msg.into()))
    }
}

pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_CONFIG } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    let cfg = match &cli.config {
        Some(path) => match FileConfig::load(path) {
            Ok(cfg) => cfg,
            Err(msg) => return Failure::Config(msg).report(),
        },
        None => FileConfig::default(),
    };
    let outcome = match cli.command {
        Command::Eval(args) => cmd_eval(args, &cfg),
        Command::Verify(args) => cmd_verify(args, &cfg),
        Command::Simulate(args) => cmd_simulate(args, &cfg),
        Command::Collapse(args) => cmd_collapse(args, &cfg),
        Command::Constraints(args) => cmd_constraints(args, &cfg),
        Command::Erratum(args) => cmd_erratum(args, &cfg),
    };
    match outcome {
        Ok(code) => code,
        Err(failure) => failure.report(),
    }
}

fn resolve_family(
    args: &FamilyArgs,
    cfg: &FileConfig,
) -> Result<(SolutionFamily, EvalMode), Failure> {
    let name = conf(cfg.opt(args.family.clone(), "family"))?
        .ok_or_else(|| Failure::Config("--family is required for this command".into()))?;
    let bag = ParamBag {
        a: conf(cfg.opt(args.a, "a"))?,
        b: conf(cfg.opt(args.b, "b"))?,
        big_a: conf(cfg.opt(args.big_a, "big-a"))?,
        amp: conf(cfg.opt(args.amp, "amp"))?,
        c1: conf(cfg.opt(args.c1, "c1"))?,
        c2: conf(cfg.opt(args.c2, "c2"))?,
        c3: conf(cfg.opt(args.c3, "c3"))?,
        tc1: conf(cfg.opt(args.tc1, "tc1"))?,
        tc2: conf(cfg.opt(args.tc2, "tc2"))?,
        alpha: conf(cfg.opt(args.alpha, "alpha"))?,
        gamma: conf(cfg.opt(args.gamma, "gamma"))?,
        lambda: conf(cfg.opt(args.lambda, "lambda"))?,
    };
    let fam = conf(build_family(&name, &bag))?;
    let mode = match conf(cfg.opt(args.as_printed, "as-printed"))? {
        Some(true) => EvalMode::AsPrinted,
        Some(false) => EvalMode::Corrected,
        None => default_mode(&fam),
    };
    Ok((fam, mode))
}

struct Window {
    x0: f64,
    x1: f64,
    nx: usize,
    t0: f64,
    t1: f64,
    nt: usize,
}

fn resolve_window(
    args: &WindowArgs,
    cfg: &FileConfig,
    fam: &SolutionFamily,
    time_defaults: (f64, f64, usize),
) -> Result<Window, Failure> {
    let (dx0, dx1, dnx) = default_window(fam);
    let (dt0, dt1, dnt) = time_defaults;
    let w = Window {
        x0: conf(cfg.opt(args.x0, "x0"))?.unwrap_or(dx0),
        x1: conf(cfg.opt(args.x1, "x1"))?.unwrap_or(dx1),
        nx: conf(cfg.opt(args.nx, "nx"))?.unwrap_or(dnx),
        t0: conf(cfg.opt(args.t0, "t0"))?.unwrap_or(dt0),
        t1: conf(cfg.opt(args.t1, "t1"))?.unwrap_or(f64::NAN),
        nt: conf(cfg.opt(args.nt, "nt"))?.unwrap_or(dnt),
    };
    let mut w = w;
    if w.t1.is_nan() {
        w.t1 = if dt1.is_nan() { w.t0 } else { dt1 };
    }
    ensure(
        w.x0.is_finite() && w.x1.is_finite() && w.t0.is_finite() && w.t1.is_finite(),
        "window bounds must be finite",
    )?;
    ensure(w.nx >= 1 && w.nt >= 1, "nx and nt must be at least 1")?;
    ensure(w.nx == 1 || w.x1 > w.x0, "x1 must exceed x0 when nx > 1")?;
    Ok(w)
}

fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    if n == 1 {
        return vec![lo];
    }
    (0..n).map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64).collect()
}

fn resolve_format(out: &OutputArgs, cfg: &FileConfig, default: &str) -> Result<String, Failure> {
    let fmt = conf(cfg.opt(out.format.clone(), "format"))?.unwrap_or_else(|| default.into());
    Ok(fmt.to_ascii_lowercase())
}

fn resolve_output(out: &OutputArgs, cfg: &FileConfig) -> Result<Option<PathBuf>, Failure> {
    conf(cfg.opt(out.output.clone(), "output"))
}

fn write_bytes(path: Option<&PathBuf>, bytes: &[u8]) -> Result<(), Failure> {
    match path {
        Some(p) => fs::write(p, bytes)
            .map_err(|e| Failure::Numeric(format!("cannot write {}: {e}", p.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(bytes)
                .map_err(|e| Failure::Numeric(format!("cannot write stdout: {e}")))
        }
    }
}

fn emit_rows(out: &OutputArgs, cfg: &FileConfig, rows: &[Row]) -> Result<i32, Failure> {
    let fmt = resolve_format(out, cfg, "csv")?;
    let mut buf = Vec::new();
    match fmt.as_str() {
        "csv" => rows::write_csv(&mut buf, rows),
        "json" => rows::write_json(&mut buf, rows),
        other => return Err(Failure::Config(format!("unknown format {other:?}"))),
    }
    .map_err(|e| Failure::Numeric(format!("cannot render output: {e}")))?;
    write_bytes(resolve_output(out, cfg)?.as_ref(), &buf)?;
    Ok(EXIT_OK)
}

/// Reports print human text on stdout (or JSON with --format json) and are
/// always stored as JSON when --output names a file.
fn emit_report<T: Serialize>(
    out: &OutputArgs,
    cfg: &FileConfig,
    human: &str,
    value: &T,
) -> Result<(), Failure> {
    let fmt = resolve_format(out, cfg, "text")?;
    let rendered = match fmt.as_str() {
        "text" => {
            let mut s = human.to_string();
            if !s.ends_with('\n') {
                s.push('\n');
            }
            s.into_bytes()
        }
        "json" => {
            let mut b = serde_json::to_vec_pretty(value)
                .map_err(|e| Failure::Numeric(format!("cannot render report: {e}")))?;
            b.push(b'\n');
            b
        }
        other => {
            return Err(Failure::Config(format!(
                "format {other:?} does not apply to reports; use text or json"
            )))
        }
    };
    let path = resolve_output(out, cfg)?;
    if let Some(p) = &path {
        let mut b = serde_json::to_vec_pretty(value)
            .map_err(|e| Failure::Numeric(format!("cannot render report: {e}")))?;
        b.push(b'\n');
        write_bytes(Some(p), &b)?;
        // keep the human summary visible even when the JSON goes to a file
        if fmt == "text" {
            write_bytes(None, &rendered)?;
        }
    } else {
        write_bytes(None, &rendered)?;
    }
    Ok(())
}

fn cmd_eval(args: EvalArgs, cfg: &FileConfig) -> Result<i32, Failure> {
    let (fam, mode) = resolve_family(&args.family, cfg)?;
    let w = resolve_window(&args.window, cfg, &fam, (1.0, f64::NAN, 1))?;
    ensure(w.nt == 1 || w.t1 > w.t0, "t1 must exceed t0 when nt > 1")?;
    ensure(
        w.nt > 1 || w.t1 == w.t0,
        "nt = 1 samples a single time; t1 must equal t0 (or be omitted)",
    )?;
    let xs = linspace(w.x0, w.x1, w.nx);
    let ts = linspace(w.t0, w.t1, w.nt);
    let mut table = Vec::with_capacity(xs.len() * ts.len());
    for &t in &ts {
        for &x in &xs {
            let s = num(eval_state(&fam, x, t, mode))?;
            table.push(Row { x, t, rho: s.rho, v: s.v, temperature: s.temperature });
        }
    }
    emit_rows(&args.out, cfg, &table)
}

fn cmd_verify(args: VerifyArgs, cfg: &FileConfig) -> Result<i32, Failure> {
    let selection = conf(cfg.opt(args.suite.clone(), "suite"))?.unwrap_or_else(|| "all".into());
    let known = criterion_ids();
    let ids: Vec<&str> = if selection == "all" {
        known.clone()
    } else {
        let wanted: BTreeSet<String> =
            selection.split(',').map(|s| s.trim().to_string()).collect();
        for w in &wanted {
            ensure(
                known.contains(&w.as_str()),
                format!("unknown criterion {w:?}; valid ids: {}", known.join(", ")),
            )?;
        }
        known.iter().copied().filter(|id| wanted.contains(*id)).collect()
    };
    let criteria: Vec<CriterionResult> =
        ids.iter().map(|id| run_one(id).expect("id validated above")).collect();
    let all_passed = criteria.iter().all(|c| c.passed);
    let report = SuiteReport { criteria, all_passed };

    let mut human = String::new();
    for c in &report.criteria {
        let tag = c.id.trim_start_matches('c');
        let word = if c.passed { "PASS" } else { "FAIL" };
        human.push_str(&format!("ACCEPTANCE {tag}: {word} - {}: {}\n", c.name, c.details));
    }
    emit_report(&args.out, cfg, &human, &report)?;
    Ok(if report.all_passed { EXIT_OK } else { EXIT_VERIFY })
}

fn cmd_simulate(args: SimulateArgs, cfg: &FileConfig) -> Result<i32, Failure> {
    let (fam, mode) = resolve_family(&args.family, cfg)?;
    ensure(
        mode == EvalMode::Corrected || matches!(fam, SolutionFamily::BTravel { .. }),
        "simulate integrates the corrected forms; drop --as-printed",
    )?;
    let w = resolve_window(&args.window, cfg, &fam, (1.0, 1.2, 2))?;
    ensure(w.nx >= 3, "simulate needs nx >= 3 cells")?;
    ensure(w.t1 > w.t0, "simulate needs t1 > t0")?;
    let cfl = conf(cfg.opt(args.cfl, "cfl"))?.unwrap_or(0.4);
    ensure(cfl > 0.0 && cfl <= 1.0, "cfl must lie in (0, 1]")?;

    let grid = num(Grid1D::new(w.x0, (w.x1 - w.x0) / w.nx as f64, w.nx))?;
    let bc_name = conf(cfg.opt(args.bc.clone(), "bc"))?.unwrap_or_else(|| "family".into());
    let bc = match bc_name.as_str() {
        "family" => BcSpec::DirichletFromFamily(fam),
        "periodic" => BcSpec::Periodic,
        "outflow" => BcSpec::Outflow,
        other => {
            return Err(Failure::Config(format!(
                "unknown bc {other:?}; expected family, periodic, or outflow"
            )))
        }
    };

    let ic = num(sample_family(&fam, &grid, w.t0, EvalMode::Corrected))?;
    let eos = fam.implied_eos();
    let lambda = fam.lambda().unwrap_or(0.0);
    let mut times: Vec<f64> =
        (1..w.nt).map(|i| w.t0 + (w.t1 - w.t0) * i as f64 / w.nt as f64).collect();
    times.push(w.t1);
    let solver_cfg = SolverConfig { output_times: Some(times), ..SolverConfig::default() };
    let snaps = num(simulate_cfg(&ic, &eos, lambda, w.t1, cfl, &bc, &solver_cfg))?;

    let mut table = Vec::with_capacity(snaps.len() * grid.n);
    for s in &snaps {
        for i in 0..grid.n {
            table.push(Row {
                x: grid.center(i),
                t: s.t,
                rho: s.rho[i],
                v: Some(s.v[i]),
                temperature: Some(s.temperature[i]),
            });
        }
    }
    emit_rows(&args.out, cfg, &table)
}

fn cmd_collapse(args: CollapseArgs, cfg: &FileConfig) -> Result<i32, Failure> {
    let (fam, mode) = resolve_family(&args.family, cfg)?;
    ensure(
        mode == EvalMode::Corrected || matches!(fam, SolutionFamily::BTravel { .. }),
        "collapse rescales the corrected forms; drop --as-printed",
    )?;
    ensure(
        fam.is_self_similar(),
        format!("family {} has no similarity scaling to collapse", fam.name()),
    )?;
    let times = conf(cfg.list(args.times.clone(), "times"))?.unwrap_or(vec![1.0, 2.0, 4.0]);
    // default profile window: clear of the virial family's density pole
    let (de0, de1, dne) = match fam {
        SolutionFamily::DVirial { .. } => (0.1, 1.2, 23),
        _ => (-2.0, 2.0, 41),
    };
    let eta0 = conf(cfg.opt(args.eta0, "eta0"))?.unwrap_or(de0);
    let eta1 = conf(cfg.opt(args.eta1, "eta1"))?.unwrap_or(de1);
    let neta = conf(cfg.opt(args.neta, "neta"))?.unwrap_or(dne);
    ensure(neta >= 2 && eta1 > eta0, "profile window needs eta1 > eta0 and neta >= 2")?;

    let report = num(collapse_test(&fam, &times, &linspace(eta0, eta1, neta)))?;
    let human = format!(
        "family {}: max pairwise deviation {:.3e} across t = {:?}",
        report.family, report.max_pairwise_deviation, report.times
    );
    emit_report(&args.out, cfg, &human, &report)?;
    Ok(EXIT_OK)
}

fn describe_exponents(e: &Exponents) -> String {
    let alpha = match e.alpha {
        Some(a) => format!("{a}"),
        None => "free".into(),
    };
    let mut s = format!(
        "alpha = {alpha}, beta = {}, gamma = {}, delta = {}",
        e.beta, e.gamma, e.delta
    );
    if let Some(omega) = e.omega {
        s.push_str(&format!(", omega = {omega}"));
    }
    s
}

fn cmd_constraints(args: ConstraintsArgs, cfg: &FileConfig) -> Result<i32, Failure> {
    let name = conf(cfg.opt(args.eos.clone(), "eos"))?
        .ok_or_else(|| Failure::Config("--eos is required".into()))?;
    let a = conf(cfg.opt(args.a, "a"))?;
    let n = conf(cfg.opt(args.n, "n"))?;
    let b = conf(cfg.opt(args.b, "b"))?;
    let big_a = conf(cfg.opt(args.big_a, "big-a"))?;
    let c = conf(cfg.opt(args.c, "c"))?;
    let eos = match name.as_str() {
        "polytropic" => EosModel::Polytropic { a: a.unwrap_or(1.0), n: n.unwrap_or(3.0) },
        "quadratic" => EosModel::Quadratic { b: b.unwrap_or(1.0) },
        "linear" => EosModel::Linear { big_a: big_a.unwrap_or(1.0) },
        "virial" => EosModel::Virial {
            big_a: big_a.unwrap_or(1.0),
            b: b.unwrap_or(0.0),
            c: c.unwrap_or(0.0),
        },
        "vdw" | "van-der-waals" => EosModel::VanDerWaals {
            a: a.unwrap_or(1.0),
            b: b.unwrap_or(2.0),
            c: c.unwrap_or(0.5),
        },
        other => {
            return Err(Failure::Config(format!(
                "unknown equation of state {other:?}; expected polytropic, quadratic, linear, \
                 virial, or vdw"
            )))
        }
    };
    let result: ConstraintResult = num(exponent_constraints(&eos))?;
    let mut human = String::new();
    human.push_str(if result.feasible { "feasible\n" } else { "infeasible\n" });
    human.push_str(&format!("  {}\n", result.reason));
    if let Some(e) = &result.exponents {
        human.push_str(&format!("  {}\n", describe_exponents(e)));
    }
    if !result.free_params.is_empty() {
        human.push_str(&format!("  free parameters: {}\n", result.free_params.join(", ")));
    }
    emit_report(&args.out, cfg, &human, &result)?;
    // an infeasible law is an answer, not an error
    Ok(EXIT_OK)
}

fn cmd_erratum(args: ErratumArgs, cfg: &FileConfig) -> Result<i32, Failure> {
    let entries = num(erratum_report())?;
    let mut human = String::new();
    for e in &entries {
        human.push_str(&format!(
            "{}: printed {:.3e} / {:.3e}, corrected {:.3e} / {:.3e}",
            e.id,
            e.printed_norm,
            e.printed_norm_refined,
            e.corrected_norm,
            e.corrected_norm_refined
        ));
        if let Some(gap) = e.printed_vs_predicted {
            human.push_str(&format!(", predicted-form gap {gap:.3e}"));
        }
        human.push_str(if e.confirmed { "  [confirmed]\n" } else { "  [NOT CONFIRMED]\n" });
    }
    let all_confirmed = entries.iter().all(|e| e.confirmed);
    emit_report(&args.out, cfg, &human, &entries)?;
    Ok(if all_confirmed { EXIT_OK } else { EXIT_VERIFY })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn linspace_hits_both_ends() {
        let xs = linspace(-1.0, 2.0, 7);
        assert_eq!(xs.len(), 7);
        assert_eq!(xs[0], -1.0);
        assert_eq!(xs[6], 2.0);
        assert_eq!(linspace(3.0, 9.0, 1), vec![3.0]);
    }

    #[test]
    fn bad_flags_use_the_documented_codes() {
        assert_eq!(run(["eulerheat", "eval", "--no-such-flag"]), EXIT_CONFIG);
        assert_eq!(run(["eulerheat", "eval"]), EXIT_CONFIG); // family missing
    }

    #[test]
    fn unknown_suite_ids_are_rejected_before_any_work() {
        assert_eq!(run(["eulerheat", "verify", "--suite", "c99"]), EXIT_CONFIG);
    }
}
