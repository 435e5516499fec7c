//! Turning a family name plus a bag of scalar flags into a
//! [`SolutionFamily`], with per-family defaults chosen to reproduce the
//! reference plots out of the box.

use eulerheat::analytic::{EvalMode, SolutionFamily};

/// Every scalar a family flag can carry. Commands reject the ones the
/// chosen family has no slot for, so a typo fails loudly instead of being
/// silently dropped.
#[derive(Clone, Copy, Debug, Default)]
pub struct ParamBag {
    pub a: Option<f64>,
    pub b: Option<f64>,
    pub big_a: Option<f64>,
    pub amp: Option<f64>,
    pub c1: Option<f64>,
    pub c2: Option<f64>,
    pub c3: Option<f64>,
    pub tc1: Option<f64>,
    pub tc2: Option<f64>,
    pub alpha: Option<f64>,
    pub gamma: Option<f64>,
    pub lambda: Option<f64>,
}

impl ParamBag {
    fn given(&self) -> Vec<&'static str> {
        let mut names = Vec::new();
        let pairs: [(&'static str, Option<f64>); 12] = [
            ("a", self.a),
            ("b", self.b),
            ("big-a", self.big_a),
            ("amp", self.amp),
            ("c1", self.c1),
            ("c2", self.c2),
            ("c3", self.c3),
            ("tc1", self.tc1),
            ("tc2", self.tc2),
            ("alpha", self.alpha),
            ("gamma", self.gamma),
            ("lambda", self.lambda),
        ];
        for (name, v) in pairs {
            if v.is_some() {
                names.push(name);
            }
        }
        names
    }
}

pub const FAMILY_NAMES: [&str; 6] =
    ["a-cubic", "b-zk", "b-travel", "c-gauss", "c-travel", "d-virial"];

pub fn build_family(name: &str, bag: &ParamBag) -> Result<SolutionFamily, String> {
    let reject_unused = |allowed: &[&str]| -> Result<(), String> {
        for g in bag.given() {
            if !allowed.contains(&g) {
                return Err(format!("--{g} does not apply to family {name}"));
            }
        }
        Ok(())
    };
    match name {
        "a-cubic" => {
            reject_unused(&["a", "c1", "c2", "c3", "alpha", "lambda"])?;
            Ok(SolutionFamily::ACubic {
                a: bag.a.unwrap_or(1.0 / 3.0),
                c1: bag.c1.unwrap_or(0.5),
                c2: bag.c2.unwrap_or(0.6),
                c3: bag.c3.unwrap_or(0.3),
                alpha: bag.alpha.unwrap_or(1.0),
                lambda: bag.lambda.unwrap_or(1.0),
            })
        }
        "b-zk" => {
            reject_unused(&["b", "amp", "gamma", "c1", "c2", "lambda"])?;
            Ok(SolutionFamily::BZk {
                b: bag.b.unwrap_or(16.0),
                amp: bag.amp.unwrap_or(1.0),
                gamma: bag.gamma.unwrap_or(1.0 / 3.0),
                c1: bag.c1.unwrap_or(1.0),
                c2: bag.c2.unwrap_or(0.3),
                lambda: bag.lambda.unwrap_or(1.0),
            })
        }
        "b-travel" => {
            reject_unused(&["a", "b", "c1", "c2"])?;
            Ok(SolutionFamily::BTravel {
                a: bag.a.unwrap_or(1.0),
                b: bag.b.unwrap_or(1.0),
                c1: bag.c1.unwrap_or(1.0),
                c2: bag.c2.unwrap_or(1.0),
            })
        }
        "c-gauss" => {
            reject_unused(&["big-a", "gamma", "c1", "c2", "lambda"])?;
            Ok(SolutionFamily::CGauss {
                big_a: bag.big_a.unwrap_or(1.0),
                gamma: bag.gamma.unwrap_or(1.0),
                c1: bag.c1.unwrap_or(1.0),
                c2: bag.c2.unwrap_or(0.0),
                lambda: bag.lambda.unwrap_or(1.0),
            })
        }
        "c-travel" => {
            reject_unused(&["a", "big-a", "c1", "c2", "tc1", "tc2"])?;
            Ok(SolutionFamily::CTravel {
                a: bag.a.unwrap_or(0.5),
                big_a: bag.big_a.unwrap_or(2.0),
                c1: bag.c1.unwrap_or(0.3),
                c2: bag.c2.unwrap_or(1.0),
                tc1: bag.tc1.unwrap_or(0.2),
                tc2: bag.tc2.unwrap_or(1.0),
            })
        }
        "d-virial" => {
            reject_unused(&["big-a", "c1", "c2", "c3", "lambda"])?;
            Ok(SolutionFamily::DVirial {
                big_a: bag.big_a.unwrap_or(1.0),
                lambda: bag.lambda.unwrap_or(1.0),
                c1: bag.c1.unwrap_or(0.0),
                c2: bag.c2.unwrap_or(1.0),
                c3: bag.c3.unwrap_or(1.0),
            })
        }
        other => Err(format!(
            "unknown family {other:?}; expected one of {}",
            FAMILY_NAMES.join(", ")
        )),
    }
}

/// The travelling-wave plots use the published sign convention, so that
/// family alone defaults to the as-printed forms.
pub fn default_mode(family: &SolutionFamily) -> EvalMode {
    match family {
        SolutionFamily::BTravel { .. } => EvalMode::AsPrinted,
        _ => EvalMode::Corrected,
    }
}

/// Sampling window (x0, x1, nx) that keeps the default evaluation inside
/// each family's well-behaved range: the wave needs a wide span to show its
/// plateau, the virial profile must stay short of the first density pole.
pub fn default_window(family: &SolutionFamily) -> (f64, f64, usize) {
    match family {
        SolutionFamily::BTravel { .. } => (-30.0, 30.0, 601),
        SolutionFamily::DVirial { .. } => (0.0, 1.2, 121),
        _ => (-5.0, 5.0, 201),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_give_the_reference_plot_parameters() {
        let wave = build_family("b-travel", &ParamBag::default()).unwrap();
        assert_eq!(
            wave,
            SolutionFamily::BTravel { a: 1.0, b: 1.0, c1: 1.0, c2: 1.0 }
        );
        assert_eq!(default_mode(&wave), EvalMode::AsPrinted);

        let gauss = build_family("c-gauss", &ParamBag::default()).unwrap();
        assert_eq!(
            gauss,
            SolutionFamily::CGauss { big_a: 1.0, gamma: 1.0, c1: 1.0, c2: 0.0, lambda: 1.0 }
        );
        assert_eq!(default_mode(&gauss), EvalMode::Corrected);
    }

    #[test]
    fn overrides_land_in_the_right_slot() {
        let bag = ParamBag { big_a: Some(4.0), gamma: Some(0.25), ..ParamBag::default() };
        match build_family("c-gauss", &bag).unwrap() {
            SolutionFamily::CGauss { big_a, gamma, .. } => {
                assert_eq!(big_a, 4.0);
                assert_eq!(gamma, 0.25);
            }
            other => panic!("wrong family: {other:?}"),
        }
    }

    #[test]
    fn inapplicable_parameters_are_rejected() {
        let bag = ParamBag { tc1: Some(1.0), ..ParamBag::default() };
        let err = build_family("b-zk", &bag).unwrap_err();
        assert!(err.contains("--tc1"), "{err}");
        assert!(build_family("pedestrian", &ParamBag::default()).is_err());
    }
}
