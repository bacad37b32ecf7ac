//! Labeled ground sets and bitmask subsets.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

/// Default limit on ground-set size for procedures that enumerate all `2^N` subsets.
pub const DEFAULT_CAP: usize = 24;

/// Hard limit imposed by the 64-bit mask representation.
pub const MAX_GROUND: usize = 63;

/// A subset of a ground set, stored as a characteristic bitmask.
///
/// Bit `i` is set iff element `i` belongs to the subset. The derived ordering
/// compares raw mask values and is the canonical order used for every family of
/// subsets this crate emits.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Subset(u64);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub const fn from_bits(bits: u64) -> Self {
        Subset(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// The subset `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        if n >= 64 {
            Subset(u64::MAX)
        } else {
            Subset((1u64 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> Self {
        Subset(1u64 << i)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> Self {
        Subset(it.into_iter().fold(0, |m, i| m | (1u64 << i)))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, i: usize) -> bool {
        i < 64 && self.0 >> i & 1 == 1
    }

    pub fn with(self, i: usize) -> Self {
        Subset(self.0 | (1u64 << i))
    }

    pub fn without(self, i: usize) -> Self {
        Subset(self.0 & !(1u64 << i))
    }

    pub fn union(self, other: Subset) -> Self {
        Subset(self.0 | other.0)
    }

    pub fn intersection(self, other: Subset) -> Self {
        Subset(self.0 & other.0)
    }

    pub fn difference(self, other: Subset) -> Self {
        Subset(self.0 & !other.0)
    }

    /// Complement relative to the ground set `{0, .., n-1}`.
    pub fn complement(self, n: usize) -> Self {
        Subset(!self.0 & Subset::full(n).0)
    }

    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Subset) -> bool {
        self.0 & other.0 == 0
    }

    /// Smallest element, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> Elements {
        Elements(self.0)
    }

    /// All subsets of `self`, in increasing mask order.
    pub fn subsets(self) -> SubsetsOf {
        SubsetsOf {
            full: self.0,
            next: Some(0),
        }
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl IntoIterator for Subset {
    type Item = usize;
    type IntoIter = Elements;

    fn into_iter(self) -> Elements {
        self.iter()
    }
}

impl FromIterator<usize> for Subset {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Subset::from_indices(iter)
    }
}

/// Iterator over element indices of a [`Subset`], ascending.
#[derive(Clone)]
pub struct Elements(u64);

impl Iterator for Elements {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Elements {}

/// Iterator over the subsets of a fixed mask (standard `(s - full) & full` walk).
pub struct SubsetsOf {
    full: u64,
    next: Option<u64>,
}

impl Iterator for SubsetsOf {
    type Item = Subset;

    fn next(&mut self) -> Option<Subset> {
        let cur = self.next?;
        self.next = if cur == self.full {
            None
        } else {
            Some(cur.wrapping_sub(self.full) & self.full)
        };
        Some(Subset(cur))
    }
}

/// A finite labeled set. Element `i` carries `labels[i]`.
#[derive(Clone, PartialEq, Eq)]
pub struct GroundSet {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    cap: usize,
}

impl GroundSet {
    /// Ground set with the default enumeration cap.
    pub fn new<S: Into<String>>(labels: impl IntoIterator<Item = S>) -> Result<Self> {
        Self::with_cap(labels, DEFAULT_CAP)
    }

    pub fn with_cap<S: Into<String>>(
        labels: impl IntoIterator<Item = S>,
        cap: usize,
    ) -> Result<Self> {
        if cap > MAX_GROUND {
            return Err(Error::InvalidArgument(format!(
                "enumeration cap {cap} exceeds the supported maximum {MAX_GROUND}"
            )));
        }
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.len() > cap {
            return Err(Error::GuardExceeded(format!(
                "ground set of size {} exceeds the enumeration cap {cap}",
                labels.len()
            )));
        }
        let mut index = HashMap::with_capacity(labels.len());
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(Error::Validation(format!("duplicate element label {l:?}")));
            }
        }
        Ok(GroundSet { labels, index, cap })
    }

    /// Elements labelled `1..=n`.
    pub fn numbered(n: usize) -> Result<Self> {
        Self::new((1..=n).map(|i| i.to_string()))
    }

    /// Elements labelled `a`, `b`, `c`, ... (`e26`, `e27`, ... beyond `z`).
    pub fn lettered(n: usize) -> Result<Self> {
        Self::new((0..n).map(|i| {
            if i < 26 {
                char::from(b'a' + i as u8).to_string()
            } else {
                format!("e{i}")
            }
        }))
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn full(&self) -> Subset {
        Subset::full(self.len())
    }

    /// Whether `s` only uses indices of this ground set.
    pub fn admits(&self, s: Subset) -> bool {
        s.is_subset_of(self.full())
    }

    pub fn check(&self, s: Subset) -> Result<()> {
        if self.admits(s) {
            Ok(())
        } else {
            Err(Error::InvalidArgument(format!(
                "subset {s:?} is not contained in a ground set of size {}",
                self.len()
            )))
        }
    }

    pub fn subset<S: AsRef<str>>(&self, labels: impl IntoIterator<Item = S>) -> Result<Subset> {
        let mut s = Subset::EMPTY;
        for l in labels {
            let l = l.as_ref();
            let i = self
                .index_of(l)
                .ok_or_else(|| Error::InvalidArgument(format!("unknown element label {l:?}")))?;
            s = s.with(i);
        }
        Ok(s)
    }

    pub fn labels_of(&self, s: Subset) -> Vec<String> {
        s.iter().map(|i| self.labels[i].clone()).collect()
    }

    /// `{a,b,c}` rendering used in human-readable output.
    pub fn format(&self, s: Subset) -> String {
        let parts: Vec<&str> = s.iter().map(|i| self.labels[i].as_str()).collect();
        format!("{{{}}}", parts.join(","))
    }

    /// The ground set obtained by keeping only the elements of `keep`, in index order.
    pub fn restricted(&self, keep: Subset) -> GroundSet {
        let labels: Vec<String> = keep.iter().map(|i| self.labels[i].clone()).collect();
        let index = labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.clone(), i))
            .collect();
        GroundSet {
            labels,
            index,
            cap: self.cap,
        }
    }
}

impl fmt::Debug for GroundSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.labels).finish()
    }
}
