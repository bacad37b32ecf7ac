//! Exhaustive verification of the rank axioms.
//!
//! Monotonicity and submodularity are checked in their local forms,
//! `r(A) <= r(A+e)` and `r(A+e) + r(A+f) >= r(A+e+f) + r(A)`, which are
//! equivalent to the global statements. A failing local instance is itself a
//! violating pair for the global axiom.

use crate::error::{Axiom, Error, Result};
use crate::subset::Subset;

/// A pair `(A, B)` on which an axiom fails, with the four ranks involved.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomViolation {
    pub axiom: Axiom,
    pub a: Subset,
    pub b: Subset,
    pub rank_a: i64,
    pub rank_b: i64,
    pub rank_union: i64,
    pub rank_intersection: i64,
}

impl AxiomViolation {
    pub fn describe(&self) -> String {
        match self.axiom {
            Axiom::R1 => format!(
                "r({:?}) = {} is outside [0, {}]",
                self.a,
                self.rank_a,
                self.a.len()
            ),
            Axiom::R2 => format!(
                "r({:?}) = {} > r({:?}) = {}",
                self.a, self.rank_a, self.b, self.rank_b
            ),
            Axiom::R3 => format!(
                "r(A) + r(B) = {} < r(A∪B) + r(A∩B) = {} for A = {:?}, B = {:?}",
                self.rank_a + self.rank_b,
                self.rank_union + self.rank_intersection,
                self.a,
                self.b
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AxiomCheck {
    Pass,
    Violation(AxiomViolation),
}

impl AxiomCheck {
    pub fn passed(&self) -> bool {
        matches!(self, AxiomCheck::Pass)
    }

    pub fn into_result(self) -> Result<()> {
        match self {
            AxiomCheck::Pass => Ok(()),
            AxiomCheck::Violation(v) => Err(Error::AxiomViolation {
                axiom: v.axiom,
                detail: v.describe(),
            }),
        }
    }
}

/// Checks R1, R2, R3 (in that order) for a rank function on `n` elements.
pub fn check(n: usize, cap: usize, rank: impl Fn(Subset) -> i64) -> Result<AxiomCheck> {
    if n > cap {
        return Err(Error::GuardExceeded(format!(
            "axiom check over 2^{n} subsets exceeds cap {cap}"
        )));
    }
    let full = Subset::full(n);
    let table: Vec<i64> = full.subsets().map(&rank).collect();
    let r = |s: Subset| table[s.bits() as usize];
    let violation = |axiom, a: Subset, b: Subset| {
        AxiomCheck::Violation(AxiomViolation {
            axiom,
            a,
            b,
            rank_a: r(a),
            rank_b: r(b),
            rank_union: r(a.union(b)),
            rank_intersection: r(a.intersection(b)),
        })
    };

    for a in full.subsets() {
        let v = r(a);
        if v < 0 || v > a.len() as i64 {
            return Ok(violation(Axiom::R1, a, a));
        }
    }
    for a in full.subsets() {
        for e in full.difference(a) {
            if r(a) > r(a.with(e)) {
                return Ok(violation(Axiom::R2, a, a.with(e)));
            }
        }
    }
    for a in full.subsets() {
        let outside: Vec<usize> = full.difference(a).iter().collect();
        for (i, &e) in outside.iter().enumerate() {
            for &f in &outside[i + 1..] {
                let (ae, af) = (a.with(e), a.with(f));
                if r(ae) + r(af) < r(ae.with(f)) + r(a) {
                    return Ok(violation(Axiom::R3, ae, af));
                }
            }
        }
    }
    Ok(AxiomCheck::Pass)
}
