//! The inclusion-exclusion defect `Δ` of a collection of flats and the
//! flatness hierarchy built on it.
//!
//! For a collection `C = (F_i)_{i∈I}` write `F_S = ∩_{i∈S} F_i` for nonempty
//! `S` and `F_∅ = ∪_{i∈I} F_i`. Then
//!
//! ```text
//! Δ(C) = Σ_{S ⊆ I} (-1)^{|S|} r(F_S)
//! ```
//!
//! so the union enters positively and the members negatively. A matroid is
//! `n`-flat when every collection of at most `n` flats has `Δ <= 0`.

mod binomial;
mod reduce;
mod search;

pub use binomial::{binomial, binomial_identity_check, IdentityCheck};
pub use reduce::{cyclify, is_saturated, reduce_nested, saturate};
pub use search::{
    flatness_degree, flatness_degree_with, is_n_flat, is_n_flat_with, is_totally_flat, Degree,
    DEFAULT_BUDGET,
    FlatnessDegreeResult, NFlatness, SearchLimits, SearchScope,
};

use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::subset::Subset;

/// Largest collection `delta` accepts; the sum has `2^len` terms.
pub const DELTA_GUARD: usize = 20;

/// An indexed multiset of flats of one matroid.
#[derive(Clone, Debug)]
pub struct FlatCollection {
    matroid: Matroid,
    members: Vec<Subset>,
}

impl FlatCollection {
    /// Checks that every member is a flat of `matroid`. Duplicates are kept.
    pub fn new(matroid: &Matroid, members: Vec<Subset>) -> Result<Self> {
        for &f in &members {
            if !matroid.is_flat(f)? {
                return Err(Error::InvalidArgument(format!(
                    "{} is not a flat",
                    matroid.ground().format(f)
                )));
            }
        }
        Ok(FlatCollection {
            matroid: matroid.clone(),
            members,
        })
    }

    pub(crate) fn from_parts(matroid: &Matroid, members: Vec<Subset>) -> Self {
        FlatCollection {
            matroid: matroid.clone(),
            members,
        }
    }

    pub fn matroid(&self) -> &Matroid {
        &self.matroid
    }

    pub fn members(&self) -> &[Subset] {
        &self.members
    }

    pub fn into_members(self) -> Vec<Subset> {
        self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// `F_∅`, the union of the members.
    pub fn union(&self) -> Subset {
        self.members.iter().fold(Subset::EMPTY, |u, &f| u.union(f))
    }

    pub fn delta(&self) -> Result<i64> {
        delta(self)
    }
}

/// `Δ` of a collection of flats.
pub fn delta(c: &FlatCollection) -> Result<i64> {
    if c.len() > DELTA_GUARD {
        return Err(Error::GuardExceeded(format!(
            "Δ of {} flats needs 2^{} terms (limit {DELTA_GUARD} members)",
            c.len(),
            c.len()
        )));
    }
    Ok(delta_of(&c.matroid, &c.members))
}

/// `Δ` without the guard. Intersections are built incrementally: `F_S` is
/// `F_{S - min S} ∩ F_{min S}`.
pub(crate) fn delta_of(m: &Matroid, members: &[Subset]) -> i64 {
    let k = members.len();
    let full = m.full();
    let mut inter = vec![full; 1usize << k];
    let union = members.iter().fold(Subset::EMPTY, |u, &f| u.union(f));
    let mut sum = m.r(union) as i64;
    for s in 1..1usize << k {
        let low = s.trailing_zeros() as usize;
        inter[s] = inter[s & (s - 1)].intersection(members[low]);
        let term = m.r(inter[s]) as i64;
        if s.count_ones() % 2 == 1 {
            sum -= term;
        } else {
            sum += term;
        }
    }
    sum
}

/// A collection of flats with positive `Δ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlatnessWitness {
    pub members: Vec<Subset>,
    pub delta: i64,
}
