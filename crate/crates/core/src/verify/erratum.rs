//! Cross-examination of the published solution forms against their corrected
//! counterparts. Each entry isolates one defect: the norm that exposes it is
//! measured on the published form and on the corrected form, at two
//! resolutions, so a real defect shows up as a resolution-independent gap of
//! many orders of magnitude rather than as discretization noise.

use super::instances;
use super::{dvirial_log_slope_defect, linspace, ode_residual_mode, pde_residual, Region};
use crate::analytic::{btravel_h, eval_state, EvalMode, SolutionFamily};
use crate::error::Result;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ErratumEntry {
    pub id: String,
    pub summary: String,
    /// Defect norm of the published form at the base resolution.
    pub printed_norm: f64,
    /// The same norm on the corrected form.
    pub corrected_norm: f64,
    pub printed_norm_refined: f64,
    pub corrected_norm_refined: f64,
    /// Where the published form's residual has a known closed expression,
    /// the measured distance to it.
    pub printed_vs_predicted: Option<f64>,
    pub predicted_tolerance: Option<f64>,
    /// The published norm must exceed this at both resolutions ...
    pub printed_floor: f64,
    /// ... while the corrected norm stays below this at both.
    pub corrected_ceiling: f64,
    pub confirmed: bool,
}

fn seal(mut entry: ErratumEntry) -> ErratumEntry {
    let mut ok = entry.printed_norm > entry.printed_floor
        && entry.printed_norm_refined > entry.printed_floor
        && entry.corrected_norm < entry.corrected_ceiling
        && entry.corrected_norm_refined < entry.corrected_ceiling;
    if let (Some(dev), Some(tol)) = (entry.printed_vs_predicted, entry.predicted_tolerance) {
        ok = ok && dev <= tol;
    }
    entry.confirmed = ok;
    entry
}

fn eq_linf(family: &SolutionFamily, eq: &str, d: f64, mode: EvalMode) -> Result<f64> {
    let region = instances::standard_region();
    let rep = pde_residual(family, &region, d, d, mode)?;
    rep.norm_for(eq).ok_or_else(|| {
        crate::error::Error::InsufficientData(format!("no {eq} equation for {}", rep.family))
    }).map(|n| n.linf)
}

fn pde_entry(
    id: &str,
    summary: &str,
    family: &SolutionFamily,
    eq: &str,
    corrected_ceiling: f64,
) -> Result<ErratumEntry> {
    Ok(seal(ErratumEntry {
        id: id.into(),
        summary: summary.into(),
        printed_norm: eq_linf(family, eq, 1e-3, EvalMode::AsPrinted)?,
        corrected_norm: eq_linf(family, eq, 1e-3, EvalMode::Corrected)?,
        printed_norm_refined: eq_linf(family, eq, 5e-4, EvalMode::AsPrinted)?,
        corrected_norm_refined: eq_linf(family, eq, 5e-4, EvalMode::Corrected)?,
        printed_vs_predicted: None,
        predicted_tolerance: None,
        printed_floor: 1e-2,
        corrected_ceiling,
        confirmed: false,
    }))
}

/// Measured Linf distance between the published traveling-temperature heat
/// residual and its closed expression -2 a t c2, over the standard region.
fn ctravel_heat_prediction_gap(family: &SolutionFamily, d: f64) -> Result<f64> {
    let SolutionFamily::CTravel { a, tc2, .. } = *family else {
        unreachable!("called only on the traveling isothermal family");
    };
    let Region { x: (x0, x1), t: (t0, t1) } = instances::standard_region();
    let (nx, nt) = (12, 9);
    let mut gap = 0.0f64;
    for j in 0..nt {
        let t = t0 + (j as f64 + 0.5) * (t1 - t0) / nt as f64;
        for i in 0..nx {
            let x = x0 + (i as f64 + 0.5) * (x1 - x0) / nx as f64;
            let temp = |x: f64, t: f64| -> Result<f64> {
                Ok(eval_state(family, x, t, EvalMode::AsPrinted)?
                    .temperature
                    .expect("this family always has a temperature"))
            };
            let mut trow = [0.0; 5];
            for (k, slot) in trow.iter_mut().enumerate() {
                *slot = temp(x + (k as f64 - 2.0) * d, t)?;
            }
            let temp_t = (temp(x, t + d)? - temp(x, t - d)?) / (2.0 * d);
            let v = eval_state(family, x, t, EvalMode::AsPrinted)?
                .v
                .expect("this family always has a velocity");
            // no diffusion term: this family's temperature balance is pure advection
            let res = temp_t + v * super::d1(&trow, d);
            gap = gap.max((res - (-2.0 * a * t * tc2)).abs());
        }
    }
    Ok(gap)
}

/// Audit every place the published and corrected forms differ.
pub fn erratum_report() -> Result<Vec<ErratumEntry>> {
    let mut entries = Vec::with_capacity(7);

    entries.push(pde_entry(
        "acubic-temperature-argument",
        "cubic-pressure temperature profile: published oscillation argument is \
         alpha eta / lambda where only sqrt(alpha/lambda) eta satisfies the heat \
         equation; the two coincide at alpha = lambda, so the check runs at \
         alpha = 2, lambda = 1",
        &instances::acubic_distinct_alpha(),
        "heat",
        1e-6,
    )?);

    entries.push(pde_entry(
        "acubic-density-coefficient",
        "cubic-pressure density profile: published radicand (4 eta^2 + 2 c1)/(3a) \
         breaks the momentum balance with residual (15/4) x/t^2; the corrected \
         radicand is (eta^2/4 + 2 c1)/(3a)",
        &instances::acubic(),
        "momentum",
        1e-6,
    )?);

    {
        let family = instances::btravel();
        let SolutionFamily::BTravel { a, b, c1, c2 } = family else { unreachable!() };
        let range = (-5.0, 5.0);
        let wave = |n: usize, mode: EvalMode| -> Result<f64> {
            Ok(ode_residual_mode(&family, range, n, mode)?.worst())
        };
        // the published sign's residual is exactly 2 a h', h' taken from the
        // published chain
        let mut gap = 0.0f64;
        for zeta in linspace(range.0, range.1, 200) {
            let (h, hp, hpp) = btravel_h(a, b, c1, c2, zeta, EvalMode::AsPrinted)?;
            let res = b * h * hpp + hp * (b * hp + a);
            gap = gap.max((res - 2.0 * a * hp).abs());
        }
        entries.push(seal(ErratumEntry {
            id: "btravel-wave-argument-sign".into(),
            summary: format!(
                "quadratic-pressure traveling wave: the published exponential \
                 argument sign leaves the wave residual 2 (a^2/b) W/(1+W) \
                 instead of zero (a = {a}, b = {b})"
            ),
            printed_norm: wave(200, EvalMode::AsPrinted)?,
            corrected_norm: wave(200, EvalMode::Corrected)?,
            printed_norm_refined: wave(400, EvalMode::AsPrinted)?,
            corrected_norm_refined: wave(400, EvalMode::Corrected)?,
            printed_vs_predicted: Some(gap),
            predicted_tolerance: Some(1e-10),
            printed_floor: 1e-2,
            corrected_ceiling: 1e-8,
            confirmed: false,
        }));
    }

    entries.push(pde_entry(
        "cgauss-density-width",
        "gaussian density: the published width exp(-x^2/(A t^2)) paired with \
         v = 2x/t fails continuity; the corrected width is exp(-x^2/(2 A t^2)) \
         with v = x/t",
        &instances::cgauss(),
        "continuity",
        1e-6,
    )?);

    entries.push(pde_entry(
        "ctravel-density-exponent",
        "traveling isothermal density: the published profile rides on \
         x - a t^2/2 while the velocity -a t transports x + a t^2/2, leaving a \
         continuity residual -2 (a^2 t / A) c2 exp(a zeta / A)",
        &instances::ctravel(),
        "continuity",
        1e-6,
    )?);

    {
        let family = instances::ctravel();
        let mut entry = pde_entry(
            "ctravel-temperature-sign",
            "traveling isothermal temperature: the published linear profile in \
             x - a t^2/2 leaves a heat residual of exactly -2 a t c2; the \
             corrected profile rides on x + a t^2/2",
            &family,
            "heat",
            1e-10,
        )?;
        entry.printed_vs_predicted = Some(ctravel_heat_prediction_gap(&family, 1e-3)?);
        entry.predicted_tolerance = Some(1e-8);
        entries.push(seal(entry));
    }

    {
        let SolutionFamily::DVirial { big_a, lambda, c1, c2, .. } = instances::dvirial() else {
            unreachable!()
        };
        let etas = linspace(0.2, 1.2, 101);
        let slope = |d_eta: f64, mode: EvalMode| -> Result<f64> {
            dvirial_log_slope_defect(big_a, lambda, c1, c2, &etas, d_eta, mode)
        };
        entries.push(seal(ErratumEntry {
            id: "dvirial-missing-exponential".into(),
            summary: "virial density: the published profile is c3 times the \
                      slope integral itself, not its exponential, so its \
                      logarithmic derivative misses the declared slope by \
                      order one"
                .into(),
            printed_norm: slope(1e-3, EvalMode::AsPrinted)?,
            corrected_norm: slope(1e-3, EvalMode::Corrected)?,
            printed_norm_refined: slope(5e-4, EvalMode::AsPrinted)?,
            corrected_norm_refined: slope(5e-4, EvalMode::Corrected)?,
            printed_vs_predicted: None,
            predicted_tolerance: None,
            printed_floor: 1e-2,
            corrected_ceiling: 1e-6,
            confirmed: false,
        }));
    }

    Ok(entries)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_defect_is_confirmed_at_both_resolutions() {
        let entries = erratum_report().unwrap();
        assert_eq!(entries.len(), 7);
        for e in &entries {
            assert!(
                e.confirmed,
                "{}: printed {:.3e}/{:.3e}, corrected {:.3e}/{:.3e}, predicted {:?}",
                e.id,
                e.printed_norm,
                e.printed_norm_refined,
                e.corrected_norm,
                e.corrected_norm_refined,
                e.printed_vs_predicted
            );
        }
    }

    #[test]
    fn matching_rates_hide_the_temperature_argument_defect() {
        // At alpha = lambda the published and corrected oscillation arguments
        // agree, so the standard instance cannot see this erratum; that is
        // why the report runs it at alpha = 2.
        let rep = pde_residual(
            &instances::acubic(),
            &instances::standard_region(),
            1e-3,
            1e-3,
            EvalMode::AsPrinted,
        )
        .unwrap();
        assert!(rep.norm_for("heat").unwrap().linf < 1e-6, "{rep:?}");
    }
}
