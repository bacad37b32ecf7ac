//! Automorphism groups given by generators, used to shrink the outer loops of
//! the oracles. A violation `(A, B)` maps to a violation `(σA, σB)`, so it is
//! enough to let `A` range over one flat per orbit.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::subset::Subset;

/// Largest ground set on which generators are checked against every subset.
pub const MAX_CHECKED_GROUND: usize = 20;

#[derive(Debug, Clone, Default)]
pub struct Symmetry {
    generators: Vec<Vec<usize>>,
}

impl Symmetry {
    /// The trivial group.
    pub fn trivial() -> Self {
        Symmetry::default()
    }

    /// Checks that each generator is a permutation of the ground set that
    /// preserves the rank of every subset.
    pub fn new(m: &Matroid, generators: Vec<Vec<usize>>) -> Result<Self> {
        let n = m.size();
        if n > MAX_CHECKED_GROUND {
            return Err(Error::GuardExceeded(format!(
                "checking automorphisms on {n} elements exceeds {MAX_CHECKED_GROUND}"
            )));
        }
        for (i, p) in generators.iter().enumerate() {
            let mut seen = Subset::EMPTY;
            for &x in p {
                if x >= n || seen.contains(x) {
                    return Err(Error::InvalidArgument(format!("generator {i} is not a permutation")));
                }
                seen = seen.with(x);
            }
            if p.len() != n {
                return Err(Error::InvalidArgument(format!("generator {i} is not a permutation")));
            }
            if let Some(s) = m.full().subsets().find(|&s| m.r(s) != m.r(apply(p, s))) {
                return Err(Error::InvalidArgument(format!(
                    "generator {i} changes the rank of {}",
                    m.ground().format(s)
                )));
            }
        }
        Ok(Symmetry { generators })
    }

    pub fn is_trivial(&self) -> bool {
        self.generators.is_empty()
    }

    /// The first flat (in `m.flats()` order) of every orbit.
    pub fn flat_representatives(&self, m: &Matroid) -> Vec<Subset> {
        let flats = m.flats();
        if self.is_trivial() {
            return flats.to_vec();
        }
        let index: HashMap<Subset, usize> = flats.iter().enumerate().map(|(i, &f)| (f, i)).collect();
        let mut seen = vec![false; flats.len()];
        let mut reps = Vec::new();
        for i in 0..flats.len() {
            if seen[i] {
                continue;
            }
            reps.push(flats[i]);
            seen[i] = true;
            let mut stack = vec![i];
            while let Some(j) = stack.pop() {
                for p in &self.generators {
                    let k = index[&apply(p, flats[j])];
                    if !seen[k] {
                        seen[k] = true;
                        stack.push(k);
                    }
                }
            }
        }
        reps
    }
}

fn apply(p: &[usize], s: Subset) -> Subset {
    s.iter().map(|x| p[x]).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::uniform;
    use crate::verify::corpus;

    #[test]
    fn rejects_non_automorphisms() {
        let m = corpus::matroid_y();
        assert!(Symmetry::new(&m, vec![vec![1, 0, 2, 3, 4, 5]]).is_ok());
        assert!(Symmetry::new(&m, vec![vec![2, 1, 0, 3, 4, 5]]).is_err());
        assert!(Symmetry::new(&m, vec![vec![0, 0, 2, 3, 4, 5]]).is_err());
    }

    #[test]
    fn uniform_orbits_are_ranks() {
        let m = uniform(3, 5).unwrap();
        let s = Symmetry::new(&m, vec![vec![1, 0, 2, 3, 4], vec![1, 2, 3, 4, 0]]).unwrap();
        // ∅, points, lines, N
        assert_eq!(s.flat_representatives(&m).len(), 4);
        assert_eq!(Symmetry::trivial().flat_representatives(&m).len(), m.flats().len());
    }
}
