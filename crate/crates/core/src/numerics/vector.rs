use std::fmt;
use std::ops::{Deref, DerefMut};

use num_traits::{Signed, Zero};
use serde::{Serialize, Serializer};

use super::rational::{format_rational, rat, to_f64, Rational};
use super::IndexSet;

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RationalVector(pub Vec<Rational>);

impl RationalVector {
    pub fn zeros(n: usize) -> Self {
        RationalVector(vec![Rational::zero(); n])
    }

    pub fn from_i64(values: &[i64]) -> Self {
        RationalVector(values.iter().map(|&v| rat(v)).collect())
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = Self::zeros(n);
        v.0[i] = rat(1);
        v
    }

    pub fn dot(&self, other: &RationalVector) -> Rational {
        self.iter().zip(other.iter()).map(|(a, b)| a * b).sum()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.iter().all(|v| !v.is_negative())
    }

    pub fn is_zero(&self) -> bool {
        self.iter().all(Zero::is_zero)
    }

    /// Indices of strictly positive entries.
    pub fn support(&self) -> IndexSet {
        IndexSet::new(
            self.iter()
                .enumerate()
                .filter(|(_, v)| v.is_positive())
                .map(|(i, _)| i)
                .collect(),
            self.len(),
        )
        .expect("support indices are in range")
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.iter().map(to_f64).collect()
    }

    /// Scatters `values` (indexed by position in `set`) into a zero vector of length `n`.
    pub fn scatter(set: &IndexSet, values: &[Rational], n: usize) -> Self {
        let mut out = Self::zeros(n);
        for (k, i) in set.iter().enumerate() {
            out.0[i] = values[k].clone();
        }
        out
    }

    pub fn gather(&self, set: &IndexSet) -> Vec<Rational> {
        set.iter().map(|i| self.0[i].clone()).collect()
    }

    pub fn into_inner(self) -> Vec<Rational> {
        self.0
    }
}

impl From<Vec<Rational>> for RationalVector {
    fn from(v: Vec<Rational>) -> Self {
        RationalVector(v)
    }
}

impl Deref for RationalVector {
    type Target = Vec<Rational>;
    fn deref(&self) -> &Vec<Rational> {
        &self.0
    }
}

impl DerefMut for RationalVector {
    fn deref_mut(&mut self) -> &mut Vec<Rational> {
        &mut self.0
    }
}

impl fmt::Display for RationalVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, v) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", format_rational(v))?;
        }
        write!(f, ")")
    }
}

impl Serialize for RationalVector {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.iter().map(format_rational))
    }
}
