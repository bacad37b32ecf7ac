//! Seeded random strict gammoids, transversal matroids and flat collections.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::constructions::{strict_gammoid, transversal, DigraphPresentation, SetSystem};
use crate::flatness::FlatCollection;
use crate::matroid::Matroid;
use crate::subset::{GroundSet, Subset};

pub const MAX_GAMMOID_VERTICES: usize = 9;
pub const MAX_TRANSVERSAL_ELEMENTS: usize = 8;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_subset(rng: &mut impl Rng, n: usize, p: f64) -> Subset {
    (0..n).filter(|_| rng.gen_bool(p)).collect()
}

/// A strict gammoid on 2 to 9 vertices: each arc present with probability
/// between 0.1 and 0.4, at least one terminal.
pub fn strict_gammoid_presentation(rng: &mut impl Rng) -> DigraphPresentation {
    let v = rng.gen_range(2..=MAX_GAMMOID_VERTICES);
    let p = rng.gen_range(0.1..0.4);
    let mut edges = Vec::new();
    for a in 0..v {
        for b in 0..v {
            if a != b && rng.gen_bool(p) {
                edges.push((a, b));
            }
        }
    }
    let mut terminals = random_subset(rng, v, 0.4);
    if terminals.is_empty() {
        terminals = Subset::singleton(rng.gen_range(0..v));
    }
    let labels = GroundSet::numbered(v).expect("small").labels().to_vec();
    DigraphPresentation::strict(labels, edges, terminals).expect("valid digraph")
}

pub fn strict_gammoids(seed: u64, count: usize) -> Vec<(DigraphPresentation, Matroid)> {
    let mut rng = rng(seed);
    (0..count)
        .map(|_| {
            let d = strict_gammoid_presentation(&mut rng);
            let m = strict_gammoid(&d).expect("at most 9 vertices");
            (d, m)
        })
        .collect()
}

/// A transversal presentation on 2 to 8 elements with 1 to `n` sets, each
/// element in each set with probability between 0.2 and 0.6.
pub fn transversal_presentation(rng: &mut impl Rng) -> SetSystem {
    let n = rng.gen_range(2..=MAX_TRANSVERSAL_ELEMENTS);
    let k = rng.gen_range(1..=n);
    let p = rng.gen_range(0.2..0.6);
    let sets = (0..k).map(|_| random_subset(rng, n, p)).collect();
    SetSystem::new(GroundSet::numbered(n).expect("small"), sets).expect("sets are in range")
}

/// A presentation on 6 to 8 elements with 3 or 4 disjoint pairs as sets plus
/// one or two sets that tend to meet every pair, like `{1,2},{3,4},{5,6},{1,3,5}`.
/// These often fail pseudomodularity.
pub fn paired_transversal_presentation(rng: &mut impl Rng) -> SetSystem {
    let n = rng.gen_range(6..=MAX_TRANSVERSAL_ELEMENTS);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let pairs = rng.gen_range(3..=n / 2);
    let mut sets: Vec<Subset> = (0..pairs)
        .map(|b| Subset::from_indices([order[2 * b], order[2 * b + 1]]))
        .collect();
    for _ in 0..rng.gen_range(1..=2) {
        let mut s = random_subset(rng, n, 0.2);
        for b in 0..pairs {
            if rng.gen_bool(0.8) {
                s = s.with(order[2 * b]);
            }
        }
        sets.push(s);
    }
    SetSystem::new(GroundSet::numbered(n).expect("small"), sets).expect("sets are in range")
}

/// Alternates [`transversal_presentation`] and [`paired_transversal_presentation`].
pub fn transversals(seed: u64, count: usize) -> Vec<(SetSystem, Matroid)> {
    let mut rng = rng(seed);
    (0..count)
        .map(|i| {
            let p = if i % 2 == 0 {
                transversal_presentation(&mut rng)
            } else {
                paired_transversal_presentation(&mut rng)
            };
            let m = transversal(&p);
            (p, m)
        })
        .collect()
}

/// Between 1 and `max_len` flats of `m` drawn with replacement.
pub fn flat_collection(rng: &mut impl Rng, m: &Matroid, max_len: usize) -> FlatCollection {
    let len = rng.gen_range(1..=max_len);
    let members = (0..len)
        .map(|_| *m.flats().choose(rng).expect("cl(∅) is a flat"))
        .collect();
    FlatCollection::new(m, members).expect("drawn from the flats")
}
