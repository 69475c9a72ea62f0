use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::Error;

/// A strictly increasing subset of `{0, .., n-1}`.
///
/// Stored 0-based; rendered and parsed 1-based (`{1,3}`), which is how index
/// sets appear in every external format.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndexSet(Vec<usize>);

impl IndexSet {
    pub fn empty() -> Self {
        IndexSet(Vec::new())
    }

    pub fn full(n: usize) -> Self {
        IndexSet((0..n).collect())
    }

    pub fn singleton(i: usize) -> Self {
        IndexSet(vec![i])
    }

    /// Builds from 0-based indices; sorts and rejects duplicates or indices `>= n`.
    pub fn new(mut indices: Vec<usize>, n: usize) -> Result<Self, Error> {
        indices.sort_unstable();
        if let Some(&bad) = indices.iter().find(|&&i| i >= n) {
            return Err(Error::IndexOutOfRange { index: bad + 1, n });
        }
        if indices.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Parse("duplicate index in index set".into()));
        }
        Ok(IndexSet(indices))
    }

    pub fn from_one_based(indices: &[usize], n: usize) -> Result<Self, Error> {
        if let Some(&bad) = indices.iter().find(|&&i| i == 0 || i > n) {
            return Err(Error::IndexOutOfRange { index: bad, n });
        }
        Self::new(indices.iter().map(|i| i - 1).collect(), n)
    }

    /// Parses a comma separated 1-based list such as `1,3`. An empty string
    /// is the empty set.
    pub fn parse(text: &str, n: usize) -> Result<Self, Error> {
        let trimmed = text.trim().trim_start_matches('{').trim_end_matches('}');
        if trimmed.trim().is_empty() {
            return Ok(Self::empty());
        }
        let idx = trimmed
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad index {t:?} in {text:?}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_one_based(&idx, n)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.binary_search(&i).is_ok()
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn complement(&self, n: usize) -> IndexSet {
        IndexSet((0..n).filter(|i| !self.contains(*i)).collect())
    }

    /// Position of `i` inside the set, if present.
    pub fn position(&self, i: usize) -> Option<usize> {
        self.0.binary_search(&i).ok()
    }

    pub fn is_subset_of(&self, other: &IndexSet) -> bool {
        self.iter().all(|i| other.contains(i))
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.0.iter().map(|i| i + 1).collect()
    }

    /// Every subset of `{0..n-1}`, the empty set first, in lexicographic order
    /// of the sorted index sequences: `{}, {1}, {1,2}, {1,2,3}, {1,3}, {2}, ...`.
    pub fn all_subsets(n: usize) -> Vec<IndexSet> {
        fn walk(start: usize, n: usize, cur: &mut Vec<usize>, out: &mut Vec<IndexSet>) {
            out.push(IndexSet(cur.clone()));
            for i in start..n {
                cur.push(i);
                walk(i + 1, n, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::with_capacity(1 << n.min(24));
        walk(0, n, &mut Vec::new(), &mut out);
        out
    }

    pub fn nonempty_subsets(n: usize) -> Vec<IndexSet> {
        let mut all = Self::all_subsets(n);
        all.remove(0);
        all
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", i + 1)?;
        }
        write!(f, "}}")
    }
}

impl Serialize for IndexSet {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.one_based().serialize(s)
    }
}
