//! Named class detectors, selectable at runtime.
//!
//! Composite classes are expressed in terms of other registered names, so
//! replacing a primitive detector changes every class built on it.

use std::fmt;

use crate::error::Error;
use crate::numerics::{IndexSet, RationalMatrix};

use super::{copositive, minors, semimonotone, star, sufficient, ClassVerdict, Violation};

pub trait ClassDetector: Send + Sync {
    fn name(&self) -> &str;
    fn description(&self) -> &str;
    fn detect(&self, a: &RationalMatrix, registry: &DetectorRegistry) -> ClassVerdict;
}

/// A detector backed by a plain function.
pub struct FnDetector {
    name: String,
    description: String,
    f: Box<dyn Fn(&RationalMatrix) -> ClassVerdict + Send + Sync>,
}

impl FnDetector {
    pub fn new(
        name: impl Into<String>,
        description: impl Into<String>,
        f: impl Fn(&RationalMatrix) -> ClassVerdict + Send + Sync + 'static,
    ) -> Self {
        FnDetector {
            name: name.into(),
            description: description.into(),
            f: Box::new(f),
        }
    }
}

impl ClassDetector for FnDetector {
    fn name(&self) -> &str {
        &self.name
    }

    fn description(&self) -> &str {
        &self.description
    }

    fn detect(&self, a: &RationalMatrix, _: &DetectorRegistry) -> ClassVerdict {
        (self.f)(a)
    }
}

/// Intersection of registered classes, evaluated in order; the first failing
/// part supplies the violation.
pub struct AllOf {
    name: String,
    description: String,
    parts: Vec<String>,
}

impl AllOf {
    pub fn new(name: impl Into<String>, description: impl Into<String>, parts: &[&str]) -> Self {
        AllOf {
            name: name.into(),
            description: description.into(),
            parts: parts.iter().map(|s| s.to_string()).collect(),
        }
    }
}

impl ClassDetector for AllOf {
    fn name(&self) -> &str {
        &self.name
    }

    fn description(&self) -> &str {
        &self.description
    }

    fn detect(&self, a: &RationalMatrix, registry: &DetectorRegistry) -> ClassVerdict {
        for part in &self.parts {
            let v = registry.detect(part, a).expect("composite refers to a registered name");
            if !v.member {
                return v;
            }
        }
        ClassVerdict::member()
    }
}

/// Every principal submatrix belongs to the registered class `inner`.
pub struct Hereditary {
    name: String,
    description: String,
    inner: String,
}

impl Hereditary {
    pub fn new(name: impl Into<String>, description: impl Into<String>, inner: &str) -> Self {
        Hereditary {
            name: name.into(),
            description: description.into(),
            inner: inner.to_string(),
        }
    }
}

impl ClassDetector for Hereditary {
    fn name(&self) -> &str {
        &self.name
    }

    fn description(&self) -> &str {
        &self.description
    }

    fn detect(&self, a: &RationalMatrix, registry: &DetectorRegistry) -> ClassVerdict {
        for rows in IndexSet::nonempty_subsets(a.dim()) {
            let sub = a.principal_submatrix(&rows).expect("in range");
            let v = registry
                .detect(&self.inner, &sub)
                .expect("hereditary class refers to a registered name");
            if let Some(inner) = v.violation {
                return ClassVerdict::violated(Violation::Submatrix {
                    rows,
                    inner: Box::new(inner),
                });
            }
        }
        ClassVerdict::member()
    }
}

/// Ordered collection of detectors keyed by name.
#[derive(Default)]
pub struct DetectorRegistry {
    entries: Vec<Box<dyn ClassDetector>>,
}

impl fmt::Debug for DetectorRegistry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.names()).finish()
    }
}

pub const E0: &str = "E0";
pub const E: &str = "E";
pub const STAR: &str = "star";
pub const TILDE: &str = "tilde";
pub const E0S: &str = "E0s";
pub const E0S_TILDE: &str = "E0s-tilde";
pub const COMPLETELY_E0S: &str = "completely-E0s";
pub const P0: &str = "P0";
pub const P: &str = "P";
pub const PSD: &str = "PSD";
pub const Z: &str = "Z";
pub const C0: &str = "C0";
pub const C0_STAR: &str = "C0*";
pub const R0: &str = "R0";
pub const SUFFICIENT: &str = "sufficient";

impl DetectorRegistry {
    pub fn new() -> Self {
        Self::default()
    }

    /// Every class detector the crate implements.
    pub fn standard() -> Self {
        let mut r = Self::new();
        r.register(FnDetector::new(E0, "semimonotone", semimonotone::is_semimonotone));
        r.register(FnDetector::new(
            E,
            "strictly semimonotone",
            semimonotone::is_strictly_semimonotone,
        ));
        r.register(FnDetector::new(
            STAR,
            "x in SOL(0,A) implies A^T x <= 0",
            star::star_property,
        ));
        r.register(FnDetector::new(
            TILDE,
            "x in SOL(0,A) and (Ax)_i = 0 imply (A^T x)_i = 0",
            star::tilde_condition,
        ));
        r.register(AllOf::new(E0S, "semimonotone star", &[E0, STAR]));
        r.register(AllOf::new(
            E0S_TILDE,
            "semimonotone star with the tilde condition",
            &[E0S, TILDE],
        ));
        r.register(Hereditary::new(COMPLETELY_E0S, "every principal submatrix is E0s", E0S));
        r.register(FnDetector::new(P0, "principal minors nonnegative", minors::is_p0));
        r.register(FnDetector::new(P, "principal minors positive", minors::is_p));
        r.register(FnDetector::new(
            PSD,
            "symmetric part positive semidefinite",
            copositive::is_psd_symmetric_part,
        ));
        r.register(FnDetector::new(Z, "off-diagonal entries nonpositive", minors::is_z));
        r.register(FnDetector::new(C0, "copositive", copositive::is_copositive));
        r.register(AllOf::new(C0_STAR, "copositive star", &[C0, STAR]));
        r.register(FnDetector::new(R0, "LCP(0,A) has only the zero solution", star::is_r0));
        r.register(FnDetector::new(
            SUFFICIENT,
            "column and row sufficient",
            sufficient::is_sufficient,
        ));
        r
    }

    /// Adds a detector, replacing any existing one with the same name in place.
    pub fn register(&mut self, detector: impl ClassDetector + 'static) -> &mut Self {
        let boxed: Box<dyn ClassDetector> = Box::new(detector);
        match self.entries.iter().position(|d| d.name() == boxed.name()) {
            Some(i) => self.entries[i] = boxed,
            None => self.entries.push(boxed),
        }
        self
    }

    pub fn get(&self, name: &str) -> Option<&dyn ClassDetector> {
        self.entries.iter().find(|d| d.name() == name).map(|d| d.as_ref())
    }

    pub fn names(&self) -> Vec<&str> {
        self.entries.iter().map(|d| d.name()).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = &dyn ClassDetector> {
        self.entries.iter().map(|d| d.as_ref())
    }

    pub fn detect(&self, name: &str, a: &RationalMatrix) -> Result<ClassVerdict, Error> {
        let d = self.get(name).ok_or_else(|| Error::UnknownName {
            kind: "class",
            name: name.to_string(),
        })?;
        Ok(d.detect(a, self))
    }
}
