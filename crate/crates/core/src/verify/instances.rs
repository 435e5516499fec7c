//! The parameter sets the audits run against. Chosen so every profile is
//! well scaled on the standard window (x in [0.1, 1], t in [1, 2]), every
//! Kummer argument stays inside the accurate band of the series, and the
//! virial temperature profile is zero-free there.

use super::Region;
use crate::analytic::SolutionFamily;

pub(crate) fn standard_region() -> Region {
    Region { x: (0.1, 1.0), t: (1.0, 2.0) }
}

pub(crate) fn acubic() -> SolutionFamily {
    SolutionFamily::ACubic { a: 1.0 / 3.0, c1: 0.5, c2: 0.6, c3: 0.3, alpha: 1.0, lambda: 1.0 }
}

/// Variant with alpha != lambda: at alpha = lambda the published and
/// corrected temperature arguments coincide and the defect is invisible.
pub(crate) fn acubic_distinct_alpha() -> SolutionFamily {
    SolutionFamily::ACubic { a: 1.0 / 3.0, c1: 0.5, c2: 0.12, c3: 0.0, alpha: 2.0, lambda: 1.0 }
}

pub(crate) fn bzk() -> SolutionFamily {
    SolutionFamily::BZk { b: 16.0, amp: 1.0, gamma: 1.0 / 3.0, c1: 1.0, c2: 0.3, lambda: 1.0 }
}

pub(crate) fn btravel() -> SolutionFamily {
    SolutionFamily::BTravel { a: 1.0, b: 1.0, c1: 1.0, c2: 1.0 }
}

pub(crate) fn cgauss() -> SolutionFamily {
    SolutionFamily::CGauss { big_a: 4.0, gamma: 0.25, c1: 1.0, c2: 0.3, lambda: 1.0 }
}

pub(crate) fn ctravel() -> SolutionFamily {
    SolutionFamily::CTravel { a: 0.5, big_a: 2.0, c1: 0.3, c2: 1.0, tc1: 0.2, tc2: 1.0 }
}

pub(crate) fn dvirial() -> SolutionFamily {
    SolutionFamily::DVirial { big_a: 1.0, lambda: 4.0, c1: 0.0, c2: 1.0, c3: 0.5 }
}

/// The instance whose density profile has the dilogarithm closed form.
pub(crate) fn dvirial_closed_form() -> SolutionFamily {
    SolutionFamily::DVirial { big_a: 1.0, lambda: 1.0, c1: 0.0, c2: 1.0, c3: 1.0 }
}
