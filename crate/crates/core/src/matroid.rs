//! The matroid abstraction: a ground set plus a rank oracle, and the queries derived from it.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::sync::atomic::{AtomicU8, Ordering};
use std::sync::{Arc, OnceLock};

use crate::axioms::{self, AxiomCheck};
use crate::error::{Error, Result};
use crate::subset::{GroundSet, Subset};

/// Ground sets up to this size get a dense rank memo (`2^N` bytes).
const MEMO_LIMIT: usize = 22;
const UNKNOWN: u8 = u8::MAX;

/// A rank function on the subsets of `{0, .., N-1}`.
///
/// Implementations must be deterministic; [`Matroid`] memoizes their values.
pub trait RankOracle: Send + Sync {
    fn rank(&self, set: Subset) -> usize;
}

impl<F> RankOracle for F
where
    F: Fn(Subset) -> usize + Send + Sync,
{
    fn rank(&self, set: Subset) -> usize {
        self(set)
    }
}

/// An immutable finite matroid. Cloning is cheap (shared state).
#[derive(Clone)]
pub struct Matroid {
    inner: Arc<Inner>,
}

struct Inner {
    ground: GroundSet,
    oracle: Box<dyn RankOracle>,
    memo: Option<Box<[AtomicU8]>>,
    flats: OnceLock<Vec<Subset>>,
    cyclic_flats: OnceLock<Vec<Subset>>,
}

impl Matroid {
    /// Wraps a rank oracle without checking the axioms; see [`Matroid::check_axioms`].
    pub fn from_oracle(ground: GroundSet, oracle: impl RankOracle + 'static) -> Matroid {
        let n = ground.len();
        let memo = (n <= MEMO_LIMIT).then(|| {
            (0..1usize << n)
                .map(|_| AtomicU8::new(UNKNOWN))
                .collect::<Vec<_>>()
                .into_boxed_slice()
        });
        Matroid {
            inner: Arc::new(Inner {
                ground,
                oracle: Box::new(oracle),
                memo,
                flats: OnceLock::new(),
                cyclic_flats: OnceLock::new(),
            }),
        }
    }

    pub fn ground(&self) -> &GroundSet {
        &self.inner.ground
    }

    pub fn size(&self) -> usize {
        self.inner.ground.len()
    }

    pub fn full(&self) -> Subset {
        self.inner.ground.full()
    }

    /// Rank of `set`, without the universe check.
    pub(crate) fn r(&self, set: Subset) -> usize {
        debug_assert!(self.ground().admits(set));
        match &self.inner.memo {
            Some(memo) => {
                let slot = &memo[set.bits() as usize];
                let v = slot.load(Ordering::Relaxed);
                if v != UNKNOWN {
                    return v as usize;
                }
                let v = self.inner.oracle.rank(set);
                slot.store(v as u8, Ordering::Relaxed);
                v
            }
            None => self.inner.oracle.rank(set),
        }
    }

    pub fn rank(&self, set: Subset) -> Result<usize> {
        self.ground().check(set)?;
        Ok(self.r(set))
    }

    /// `r(N)`.
    pub fn full_rank(&self) -> usize {
        self.r(self.full())
    }

    pub(crate) fn cl(&self, set: Subset) -> Subset {
        let base = self.r(set);
        let outside = self.full().difference(set);
        outside
            .iter()
            .filter(|&e| self.r(set.with(e)) == base)
            .fold(set, Subset::with)
    }

    /// The smallest flat containing `set`.
    pub fn closure(&self, set: Subset) -> Result<Subset> {
        self.ground().check(set)?;
        Ok(self.cl(set))
    }

    pub fn is_independent(&self, set: Subset) -> Result<bool> {
        Ok(self.rank(set)? == set.len())
    }

    pub fn is_flat(&self, set: Subset) -> Result<bool> {
        Ok(self.closure(set)? == set)
    }

    pub(crate) fn flat(&self, set: Subset) -> bool {
        self.cl(set) == set
    }

    pub(crate) fn cyclic(&self, set: Subset) -> bool {
        let r = self.r(set);
        set.iter().all(|e| self.r(set.without(e)) == r)
    }

    /// `S` is cyclic iff removing any one of its elements keeps the rank; `∅` is cyclic.
    pub fn is_cyclic(&self, set: Subset) -> Result<bool> {
        self.ground().check(set)?;
        Ok(self.cyclic(set))
    }

    /// Minimal dependent set.
    pub fn is_circuit(&self, set: Subset) -> Result<bool> {
        let r = self.rank(set)?;
        Ok(!set.is_empty() && r + 1 == set.len() && set.iter().all(|e| self.r(set.without(e)) == r))
    }

    /// All flats in ascending mask order.
    ///
    /// Enumerated by closing upwards from `cl(∅)`: every flat other than the bottom
    /// one is `cl(F ∪ {e})` for some smaller flat `F`.
    pub fn flats(&self) -> &[Subset] {
        self.inner.flats.get_or_init(|| {
            let full = self.full();
            let bottom = self.cl(Subset::EMPTY);
            let mut seen: HashSet<Subset> = HashSet::from([bottom]);
            let mut queue = VecDeque::from([bottom]);
            while let Some(f) = queue.pop_front() {
                for e in full.difference(f) {
                    let g = self.cl(f.with(e));
                    if seen.insert(g) {
                        queue.push_back(g);
                    }
                }
            }
            let mut out: Vec<Subset> = seen.into_iter().collect();
            out.sort_unstable();
            out
        })
    }

    /// Flats that are also cyclic sets, ascending mask order.
    pub fn cyclic_flats(&self) -> &[Subset] {
        self.inner.cyclic_flats.get_or_init(|| {
            self.flats()
                .iter()
                .copied()
                .filter(|&f| self.cyclic(f))
                .collect()
        })
    }

    pub fn loops(&self) -> Subset {
        self.full()
            .iter()
            .filter(|&e| self.r(Subset::singleton(e)) == 0)
            .collect()
    }

    /// Elements whose removal drops the rank of the ground set.
    pub fn coloops(&self) -> Subset {
        let full = self.full();
        let r = self.full_rank();
        full.iter().filter(|&e| self.r(full.without(e)) < r).collect()
    }

    /// The dual matroid `r*(A) = |A| + r(N∖A) - r(N)` on the same ground set.
    pub fn dual(&self) -> Matroid {
        let parent = self.clone();
        let n = self.size();
        let total = self.full_rank();
        Matroid::from_oracle(self.ground().clone(), move |a: Subset| {
            (a.len() + parent.r(a.complement(n))).saturating_sub(total)
        })
    }

    /// Deletion `M∖D`: the matroid on `N∖D` with the rank function of `M`.
    pub fn restrict(&self, removed: Subset) -> Result<Matroid> {
        self.ground().check(removed)?;
        Ok(self.minor(self.full().difference(removed), Subset::EMPTY))
    }

    /// The restriction `M|K` onto the elements of `keep`.
    pub fn restrict_to(&self, keep: Subset) -> Result<Matroid> {
        self.ground().check(keep)?;
        Ok(self.minor(keep, Subset::EMPTY))
    }

    /// Contraction `M/A`: the matroid on `N∖A` with rank `r(X ∪ A) - r(A)`.
    pub fn contract(&self, contracted: Subset) -> Result<Matroid> {
        self.ground().check(contracted)?;
        Ok(self.minor(self.full().difference(contracted), contracted))
    }

    fn minor(&self, keep: Subset, contracted: Subset) -> Matroid {
        debug_assert!(keep.is_disjoint(contracted));
        let parent = self.clone();
        let positions: Vec<usize> = keep.iter().collect();
        let base = self.r(contracted);
        Matroid::from_oracle(self.ground().restricted(keep), move |x: Subset| {
            let lifted: Subset = x.iter().map(|i| positions[i]).collect();
            parent.r(lifted.union(contracted)).saturating_sub(base)
        })
    }

    /// Exhaustive check of the rank axioms.
    pub fn check_axioms(&self) -> Result<AxiomCheck> {
        axioms::check(self.size(), self.ground().cap(), |s| self.r(s) as i64)
    }

    /// Ranks of all `2^N` subsets indexed by mask.
    pub fn rank_table(&self) -> Result<Vec<usize>> {
        let n = self.size();
        if n > self.ground().cap() {
            return Err(Error::GuardExceeded(format!("rank table of size 2^{n}")));
        }
        Ok((0..1u64 << n).map(|m| self.r(Subset::from_bits(m))).collect())
    }

    /// Whether both matroids have the same number of elements and agree on every subset.
    pub fn same_ranks(&self, other: &Matroid) -> bool {
        self.size() == other.size()
            && self
                .full()
                .subsets()
                .all(|s| self.r(s) == other.r(s))
    }
}

impl fmt::Debug for Matroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Matroid")
            .field("ground", self.ground())
            .field("rank", &self.full_rank())
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{transversal, uniform, SetSystem};

    fn u24() -> Matroid {
        uniform(2, 4).unwrap()
    }

    fn matroid_y() -> Matroid {
        let g = GroundSet::numbered(6).unwrap();
        let sets = [
            vec!["1", "2"],
            vec!["3", "4"],
            vec!["5", "6"],
            vec!["1", "3", "5"],
        ];
        let sets = sets.iter().map(|s| g.subset(s).unwrap()).collect();
        transversal(&SetSystem::new(g, sets).unwrap())
    }

    #[test]
    fn uniform_rank_and_closure() {
        let m = u24();
        let g = m.ground().clone();
        assert_eq!(m.rank(g.subset(["a", "b", "c"]).unwrap()).unwrap(), 2);
        assert_eq!(m.closure(g.subset(["a", "b"]).unwrap()).unwrap(), m.full());
        let a = g.subset(["a"]).unwrap();
        assert!(m.is_flat(a).unwrap());
        assert!(m.is_independent(a).unwrap());
        assert!(m.is_cyclic(Subset::EMPTY).unwrap());
    }

    #[test]
    fn out_of_universe_is_rejected() {
        let m = u24();
        assert!(matches!(
            m.rank(Subset::singleton(4)),
            Err(Error::InvalidArgument(_))
        ));
        assert!(m.closure(Subset::singleton(9)).is_err());
    }

    #[test]
    fn uniform_flats() {
        let m = u24();
        let mut expected = vec![Subset::EMPTY, m.full()];
        expected.extend((0..4).map(Subset::singleton));
        expected.sort();
        assert_eq!(m.flats(), expected.as_slice());
        assert_eq!(m.cyclic_flats(), &[Subset::EMPTY, m.full()]);
        assert_eq!(m.loops(), Subset::EMPTY);
        assert_eq!(m.coloops(), Subset::EMPTY);
    }

    #[test]
    fn matroid_y_basic_values() {
        let m = matroid_y();
        let g = m.ground().clone();
        assert_eq!(m.full_rank(), 4);
        let s1234 = g.subset(["1", "2", "3", "4"]).unwrap();
        assert_eq!(m.rank(s1234).unwrap(), 3);
        assert!(m.is_cyclic(s1234).unwrap());
        assert!(m.is_circuit(s1234).unwrap());
        // {1,2,3,4} is a rank-3 circuit, so {1,2,3} spans 4; brute force over
        // supersets agrees
        let s123 = g.subset(["1", "2", "3"]).unwrap();
        let widest = m
            .full()
            .subsets()
            .filter(|t| s123.is_subset_of(*t) && m.r(*t) == 3)
            .max_by_key(|t| t.len())
            .unwrap();
        assert_eq!(widest, s1234);
        assert_eq!(m.closure(s123).unwrap(), s1234);
    }

    #[test]
    fn closure_of_empty_is_loops() {
        let m = uniform(0, 3).unwrap();
        assert_eq!(m.closure(Subset::EMPTY).unwrap(), m.full());
        assert_eq!(m.loops(), m.full());
        assert_eq!(m.flats(), &[m.full()]);
    }

    #[test]
    fn dual_of_u24_is_u24() {
        let m = u24();
        assert!(m.dual().same_ranks(&m));
        let y = matroid_y();
        assert!(y.dual().dual().same_ranks(&y));
    }

    #[test]
    fn minors_relabel_and_compute() {
        let m = matroid_y();
        let g = m.ground().clone();
        let c = m.contract(g.subset(["1", "2"]).unwrap()).unwrap();
        assert_eq!(c.ground().labels(), &["3", "4", "5", "6"]);
        // r({1,2,3,4,5,6}) - r({1,2}) = 4 - 2
        assert_eq!(c.full_rank(), 2);
        let d = m.restrict(g.subset(["5", "6"]).unwrap()).unwrap();
        assert_eq!(d.full_rank(), 3);
        assert!(m.contract(Subset::EMPTY).unwrap().same_ranks(&m));
    }
}
