//! Membership tests for matrix classes. Every negative verdict carries a
//! witness that can be re-checked from the class definition alone.

mod certificate;
mod cones;
mod copositive;
mod minors;
mod registry;
mod report;
mod semimonotone;
mod star;
mod sufficient;
mod verdict;

pub use certificate::{l2_certificate, L2Certificate};
pub use cones::sol0_representatives;
pub use copositive::{is_copositive, is_copositive_star, is_psd_symmetric_part};
pub use minors::{is_p, is_p0, is_z, minor_table, principal_minor_class, MinorClass, MinorTable};
pub use registry::{AllOf, ClassDetector, DetectorRegistry, FnDetector, Hereditary};
pub use report::{classify_full, classify_with, ClassReport, DerivedFlag, NamedVerdict, Premise, Route};
pub use semimonotone::{is_semimonotone, is_strictly_semimonotone};
pub use star::{is_completely_e0s, is_e0s, is_e0s_tilde, is_r0, star_property, tilde_condition};
pub use sufficient::{column_violation_2x2, is_sufficient};
pub use verdict::{in_sol0, ClassVerdict, Violation};

/// Registry names of the standard detectors.
pub mod names {
    pub use super::registry::{
        C0, C0_STAR, COMPLETELY_E0S, E, E0, E0S, E0S_TILDE, P, P0, PSD, R0, STAR, SUFFICIENT, TILDE, Z,
    };
}
