//! Principal-minor classes and the sign-pattern class Z.

use num_traits::Signed;
use serde::Serialize;

use crate::numerics::{format_rational, IndexSet, Rational, RationalMatrix};

use super::{ClassVerdict, Violation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum MinorClass {
    P,
    P0,
    AlmostP0,
    N,
    N0,
    None,
}

impl MinorClass {
    pub fn name(self) -> &'static str {
        match self {
            MinorClass::P => "P",
            MinorClass::P0 => "P0",
            MinorClass::AlmostP0 => "almost-P0",
            MinorClass::N => "N",
            MinorClass::N0 => "N0",
            MinorClass::None => "none",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MinorTable {
    pub class: MinorClass,
    /// Every principal minor, in lexicographic order of the index set.
    #[serde(serialize_with = "ser_minors")]
    pub minors: Vec<(IndexSet, Rational)>,
}

fn ser_minors<S: serde::Serializer>(m: &[(IndexSet, Rational)], s: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(m.len()))?;
    for (alpha, det) in m {
        seq.serialize_element(&(alpha, format_rational(det)))?;
    }
    seq.end()
}

pub fn minor_table(a: &RationalMatrix) -> Vec<(IndexSet, Rational)> {
    IndexSet::nonempty_subsets(a.dim())
        .into_iter()
        .map(|alpha| {
            let d = a.principal_submatrix(&alpha).expect("in range").determinant();
            (alpha, d)
        })
        .collect()
}

/// P: all minors positive. P₀: all nonnegative. Almost-P₀: all proper minors
/// nonnegative and `det A < 0`. N and N₀ are the negative counterparts.
/// Where classes overlap the first in the order P, P₀, N, almost-P₀, N₀ wins.
pub fn principal_minor_class(a: &RationalMatrix) -> MinorTable {
    let minors = minor_table(a);
    let n = a.dim();
    let all = |f: &dyn Fn(&Rational) -> bool| minors.iter().all(|(_, d)| f(d));
    let class = if all(&|d| d.is_positive()) {
        MinorClass::P
    } else if all(&|d| !d.is_negative()) {
        MinorClass::P0
    } else if all(&|d| d.is_negative()) {
        MinorClass::N
    } else if minors.iter().all(|(s, d)| s.len() == n || !d.is_negative())
        && minors.iter().any(|(s, d)| s.len() == n && d.is_negative())
    {
        MinorClass::AlmostP0
    } else if all(&|d| !d.is_positive()) {
        MinorClass::N0
    } else {
        MinorClass::None
    };
    MinorTable { class, minors }
}

pub fn is_p0(a: &RationalMatrix) -> ClassVerdict {
    first_minor(a, |d| d.is_negative())
        .map(|(alpha, det)| ClassVerdict::violated(Violation::NegativeMinor { alpha, det }))
        .unwrap_or_else(ClassVerdict::member)
}

pub fn is_p(a: &RationalMatrix) -> ClassVerdict {
    first_minor(a, |d| !d.is_positive())
        .map(|(alpha, det)| ClassVerdict::violated(Violation::NonpositiveMinor { alpha, det }))
        .unwrap_or_else(ClassVerdict::member)
}

fn first_minor(a: &RationalMatrix, bad: impl Fn(&Rational) -> bool) -> Option<(IndexSet, Rational)> {
    IndexSet::nonempty_subsets(a.dim()).into_iter().find_map(|alpha| {
        let d = a.principal_submatrix(&alpha).expect("in range").determinant();
        bad(&d).then_some((alpha, d))
    })
}

/// Z: all off-diagonal entries nonpositive.
pub fn is_z(a: &RationalMatrix) -> ClassVerdict {
    let n = a.dim();
    for row in 0..n {
        for col in 0..n {
            if row != col && a[(row, col)].is_positive() {
                return ClassVerdict::violated(Violation::PositiveOffDiagonal { row, col });
            }
        }
    }
    ClassVerdict::member()
}
