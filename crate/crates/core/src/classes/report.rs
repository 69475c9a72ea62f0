//! Full classification of one matrix plus the solvability flags that follow
//! from known implications between classes.

use serde::Serialize;

use crate::error::Error;
use crate::lp::{game_value, GameValue};
use crate::numerics::RationalMatrix;

use super::certificate::{l2_certificate, L2Certificate};
use super::cones::sol0_representatives;
use super::minors::{principal_minor_class, MinorClass};
use super::registry::{self as names, DetectorRegistry};
use super::ClassVerdict;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct NamedVerdict {
    pub class: String,
    #[serde(flatten)]
    pub verdict: ClassVerdict,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Premise {
    pub name: String,
    pub holds: bool,
}

/// One sufficient condition for a derived flag.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Route {
    pub name: String,
    pub premises: Vec<Premise>,
}

impl Route {
    fn new(name: &str, premises: &[(&str, bool)]) -> Self {
        Route {
            name: name.to_string(),
            premises: premises
                .iter()
                .map(|(n, h)| Premise {
                    name: n.to_string(),
                    holds: *h,
                })
                .collect(),
        }
    }

    pub fn holds(&self) -> bool {
        self.premises.iter().all(|p| p.holds)
    }
}

/// A flag set only when every premise of at least one route holds. A flag that
/// is not set means "not established", never "refuted".
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DerivedFlag {
    pub holds: bool,
    pub partial: bool,
    pub routes: Vec<Route>,
}

impl DerivedFlag {
    fn from_routes(routes: Vec<Route>, partial: bool) -> Self {
        DerivedFlag {
            holds: routes.iter().any(Route::holds),
            partial,
            routes,
        }
    }

    pub fn established_by(&self) -> Option<&Route> {
        self.routes.iter().find(|r| r.holds())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ClassReport {
    pub n: usize,
    pub verdicts: Vec<NamedVerdict>,
    pub minor_class: MinorClass,
    pub game: GameValue,
    /// One certificate per nonempty SOL(0, A) cone, when all could be built.
    pub l2_certificates: Vec<L2Certificate>,
    pub q: DerivedFlag,
    pub q_b: DerivedFlag,
    pub q0: DerivedFlag,
}

impl ClassReport {
    pub fn verdict(&self, class: &str) -> Option<&ClassVerdict> {
        self.verdicts.iter().find(|v| v.class == class).map(|v| &v.verdict)
    }

    /// Membership in `class`; unknown names count as not established.
    pub fn is(&self, class: &str) -> bool {
        self.verdict(class).is_some_and(|v| v.member)
    }

    /// Known inclusions that the verdicts contradict. Always empty for a
    /// correct set of detectors.
    pub fn lattice_violations(&self) -> Vec<String> {
        const IMPLICATIONS: &[(&str, &[&str])] = &[
            (names::E0S_TILDE, &[names::E0S, names::TILDE]),
            (names::E0S, &[names::E0, names::STAR]),
            (names::COMPLETELY_E0S, &[names::E0S]),
            (names::C0_STAR, &[names::C0, names::STAR, names::E0S]),
            (names::C0, &[names::E0]),
            (names::E, &[names::E0, names::R0]),
            (names::PSD, &[names::C0, names::SUFFICIENT]),
            (names::P, &[names::P0, names::E, names::SUFFICIENT]),
            (names::SUFFICIENT, &[names::P0]),
        ];
        let mut out = Vec::new();
        for (premise, conclusions) in IMPLICATIONS {
            if self.verdict(premise).is_none() || !self.is(premise) {
                continue;
            }
            for c in conclusions.iter().filter(|c| self.verdict(c).is_some() && !self.is(c)) {
                out.push(format!("{premise} holds but {c} does not"));
            }
        }
        if self.q.holds && !self.q0.holds {
            out.push("Q holds but Q0 does not".into());
        }
        if self.q_b.holds && !(self.q.holds && self.is(names::R0)) {
            out.push("Qb holds without Q and R0".into());
        }
        out
    }
}

pub fn classify_full(a: &RationalMatrix) -> ClassReport {
    classify_with(&DetectorRegistry::standard(), a).expect("standard registry is complete")
}

/// Runs every detector in `registry` and derives the solvability flags. The
/// registry must provide the names used by the derivations.
pub fn classify_with(registry: &DetectorRegistry, a: &RationalMatrix) -> Result<ClassReport, Error> {
    let verdicts = registry
        .iter()
        .map(|d| NamedVerdict {
            class: d.name().to_string(),
            verdict: d.detect(a, registry),
        })
        .collect::<Vec<_>>();
    let lookup = |name: &str| -> Result<bool, Error> {
        verdicts
            .iter()
            .find(|v| v.class == name)
            .map(|v| v.verdict.member)
            .ok_or_else(|| Error::UnknownName {
                kind: "class",
                name: name.to_string(),
            })
    };
    let e0 = lookup(names::E0)?;
    let e0s = lookup(names::E0S)?;
    let tilde = lookup(names::E0S_TILDE)?;
    let r0 = lookup(names::R0)?;

    let game = game_value(a);
    let positive = game.is_positive();

    let certificates: Option<Vec<L2Certificate>> = if e0s {
        sol0_representatives(a)
            .into_iter()
            .map(|(_, x)| l2_certificate(a, &x).ok())
            .collect()
    } else {
        None
    };
    let certified = certificates.is_some();

    let q = DerivedFlag::from_routes(
        vec![
            Route::new("semimonotone R0 matrices are Q", &[("E0", e0), ("R0", r0)]),
            Route::new(
                "E0s-tilde with positive game value is Q",
                &[("E0s-tilde", tilde), ("v(A) > 0", positive)],
            ),
        ],
        false,
    );
    let q_b = DerivedFlag::from_routes(
        vec![
            Route::new("Qb = Q and R0", &[("Q", q.holds), ("R0", r0)]),
            Route::new(
                "E0s-tilde with positive game value has compact solution sets",
                &[("E0s-tilde", tilde), ("v(A) > 0", positive), ("R0", r0)],
            ),
        ],
        false,
    );
    let q0 = DerivedFlag::from_routes(
        vec![
            Route::new("Q implies Q0", &[("Q", q.holds)]),
            Route::new(
                "E0s with L2 certificates is an L-matrix, hence Q0",
                &[
                    ("E0s", e0s),
                    ("E0s-tilde", tilde),
                    ("L2 certificate on every SOL(0,A) cone", certified),
                ],
            ),
        ],
        true,
    );

    Ok(ClassReport {
        n: a.dim(),
        minor_class: principal_minor_class(a).class,
        verdicts,
        game,
        l2_certificates: certificates.unwrap_or_default(),
        q,
        q_b,
        q0,
    })
}
