//! Deciding `n`-flatness and computing the flatness degree.
//!
//! Removing a member nested in another leaves `Δ` unchanged, and every
//! collection can be replaced by one of cyclic flats of the same size whose `Δ`
//! is at least as large. So a collection of at most `n` flats with `Δ > 0`
//! exists iff an antichain of at most `n` distinct cyclic flats with `Δ > 0`
//! does. The search runs over those antichains only, by size and then
//! lexicographically by member masks, so the first witness found is minimal
//! and canonical.

use std::fmt;

use super::FlatnessWitness;
use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::subset::Subset;

/// Default number of `Δ` evaluations a search may perform.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchLimits {
    /// Largest collection size to examine; `None` searches until certified.
    pub max_size: Option<usize>,
    /// Maximum number of `Δ` evaluations.
    pub budget: u64,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            max_size: None,
            budget: DEFAULT_BUDGET,
        }
    }
}

/// What a search actually covered.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchScope {
    /// Number of cyclic flats the antichains were drawn from.
    pub cyclic_flats: usize,
    /// Every antichain of at most this many members was examined.
    pub searched_up_to: usize,
    pub evaluations: u64,
    pub budget: u64,
    /// True when the search space was exhausted (no larger antichain exists)
    /// or a witness was found; false when a limit cut it short.
    pub complete: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Degree {
    Finite(usize),
    /// Totally flat, with a complete certificate.
    Omega,
    /// The search stopped at a limit without a violation: the matroid is at least this flat.
    AtLeast(usize),
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::Finite(d) => write!(f, "{d}"),
            Degree::Omega => f.write_str("ω (certified)"),
            Degree::AtLeast(d) => write!(f, "≥ {d} (guard-truncated)"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct FlatnessDegreeResult {
    pub degree: Degree,
    pub witness: Option<FlatnessWitness>,
    pub scope: SearchScope,
}

/// Outcome of an `n`-flatness decision.
#[derive(Debug, Clone)]
pub struct NFlatness {
    pub n: usize,
    pub holds: bool,
    pub witness: Option<FlatnessWitness>,
    pub scope: SearchScope,
}

enum SizeOutcome {
    Witness(FlatnessWitness),
    /// Antichains of this size exist but none violates.
    Clean,
    /// No antichain of this size exists at all.
    Exhausted,
    OutOfBudget,
}

struct Searcher<'a> {
    m: &'a Matroid,
    flats: &'a [Subset],
    comparable: Vec<Vec<bool>>,
    evaluations: u64,
    budget: u64,
}

impl<'a> Searcher<'a> {
    fn new(m: &'a Matroid, budget: u64) -> Self {
        let flats = m.cyclic_flats();
        let comparable = flats
            .iter()
            .map(|&a| {
                flats
                    .iter()
                    .map(|&b| a.is_subset_of(b) || b.is_subset_of(a))
                    .collect()
            })
            .collect();
        Searcher {
            m,
            flats,
            comparable,
            evaluations: 0,
            budget,
        }
    }

    fn size(&mut self, k: usize) -> SizeOutcome {
        let mut chosen = Vec::with_capacity(k);
        let mut terms = Vec::with_capacity(1 << k.min(20));
        let mut found_any = false;
        match self.extend(k, 0, &mut chosen, &mut terms, 0, &mut found_any) {
            Some(Ok(w)) => SizeOutcome::Witness(w),
            Some(Err(())) => SizeOutcome::OutOfBudget,
            None if found_any => SizeOutcome::Clean,
            None => SizeOutcome::Exhausted,
        }
    }

    /// `terms` holds `(F_S, (-1)^{|S|})` for every nonempty `S` of the chosen
    /// indices; `partial` is the signed sum of their ranks.
    fn extend(
        &mut self,
        k: usize,
        start: usize,
        chosen: &mut Vec<usize>,
        terms: &mut Vec<(Subset, i8)>,
        partial: i64,
        found_any: &mut bool,
    ) -> Option<Result<FlatnessWitness, ()>> {
        if chosen.len() == k {
            *found_any = true;
            if self.evaluations >= self.budget {
                return Some(Err(()));
            }
            self.evaluations += 1;
            let union = chosen
                .iter()
                .fold(Subset::EMPTY, |u, &i| u.union(self.flats[i]));
            let delta = partial + self.m.r(union) as i64;
            if delta > 0 {
                return Some(Ok(FlatnessWitness {
                    members: chosen.iter().map(|&i| self.flats[i]).collect(),
                    delta,
                }));
            }
            return None;
        }
        let needed = k - chosen.len();
        for i in start..self.flats.len() {
            if self.flats.len() - i < needed {
                break;
            }
            if chosen.iter().any(|&j| self.comparable[i][j]) {
                continue;
            }
            let f = self.flats[i];
            let base = terms.len();
            let mut sum = partial - self.m.r(f) as i64;
            terms.push((f, -1));
            for t in 0..base {
                let (x, sign) = terms[t];
                let y = x.intersection(f);
                let s = -sign;
                sum += s as i64 * self.m.r(y) as i64;
                terms.push((y, s));
            }
            chosen.push(i);
            let out = self.extend(k, i + 1, chosen, terms, sum, found_any);
            chosen.pop();
            terms.truncate(base);
            if out.is_some() {
                return out;
            }
        }
        None
    }

    fn scope(&self, searched_up_to: usize, complete: bool) -> SearchScope {
        SearchScope {
            cyclic_flats: self.flats.len(),
            searched_up_to,
            evaluations: self.evaluations,
            budget: self.budget,
            complete,
        }
    }
}

/// Decides whether every collection of at most `n` flats has `Δ <= 0`.
pub fn is_n_flat(m: &Matroid, n: usize) -> Result<NFlatness> {
    is_n_flat_with(m, n, DEFAULT_BUDGET)
}

pub fn is_n_flat_with(m: &Matroid, n: usize, budget: u64) -> Result<NFlatness> {
    if n == 0 {
        return Err(Error::InvalidArgument("n-flatness needs n >= 1".into()));
    }
    let mut s = Searcher::new(m, budget);
    for k in 1..=n {
        match s.size(k) {
            SizeOutcome::Witness(w) => {
                return Ok(NFlatness {
                    n,
                    holds: false,
                    witness: Some(w),
                    scope: s.scope(k, true),
                })
            }
            SizeOutcome::Clean => {}
            SizeOutcome::Exhausted => break,
            SizeOutcome::OutOfBudget => {
                return Err(Error::GuardExceeded(format!(
                    "{n}-flatness search exhausted its budget of {budget} Δ evaluations at size {k}"
                )))
            }
        }
    }
    Ok(NFlatness {
        n,
        holds: true,
        witness: None,
        scope: s.scope(n, true),
    })
}

/// Flatness degree with default limits.
pub fn flatness_degree(m: &Matroid) -> Result<FlatnessDegreeResult> {
    flatness_degree_with(m, SearchLimits::default())
}

/// Smallest violating antichain size minus one, `ω` when no antichain of
/// cyclic flats violates, or a lower bound when a limit stops the search.
pub fn flatness_degree_with(m: &Matroid, limits: SearchLimits) -> Result<FlatnessDegreeResult> {
    let mut s = Searcher::new(m, limits.budget);
    let mut k = 1;
    loop {
        if limits.max_size.is_some_and(|max| k > max) {
            let bound = k - 1;
            // a bounded search is still a full certificate when nothing bigger exists
            return Ok(match s.size(k) {
                SizeOutcome::Exhausted => FlatnessDegreeResult {
                    degree: Degree::Omega,
                    witness: None,
                    scope: s.scope(bound, true),
                },
                _ => FlatnessDegreeResult {
                    degree: Degree::AtLeast(bound),
                    witness: None,
                    scope: s.scope(bound, false),
                },
            });
        }
        match s.size(k) {
            SizeOutcome::Witness(w) => {
                return Ok(FlatnessDegreeResult {
                    degree: Degree::Finite(k - 1),
                    witness: Some(w),
                    scope: s.scope(k, true),
                })
            }
            SizeOutcome::Clean => k += 1,
            SizeOutcome::Exhausted => {
                return Ok(FlatnessDegreeResult {
                    degree: Degree::Omega,
                    witness: None,
                    scope: s.scope(k - 1, true),
                })
            }
            SizeOutcome::OutOfBudget => {
                return Ok(FlatnessDegreeResult {
                    degree: Degree::AtLeast(k - 1),
                    witness: None,
                    scope: s.scope(k - 1, false),
                })
            }
        }
    }
}

/// Whether every finite collection of flats has `Δ <= 0`. Errors when the
/// search cannot be completed within the default budget.
pub fn is_totally_flat(m: &Matroid) -> Result<bool> {
    let res = flatness_degree(m)?;
    match res.degree {
        Degree::Omega => Ok(true),
        Degree::Finite(_) => Ok(false),
        Degree::AtLeast(d) => Err(Error::GuardExceeded(format!(
            "total flatness undecided: {d}-flat, search budget exhausted"
        ))),
    }
}
