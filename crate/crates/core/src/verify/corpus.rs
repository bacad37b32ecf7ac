//! Named example matroids with known values.

use crate::constructions::{
    family_mn, family_mn_circuit, from_rank_table, graphic, transversal, uniform, Graph, SetSystem,
};
use crate::flatness::{Degree, FlatCollection};
use crate::matroid::Matroid;
use crate::subset::{GroundSet, Subset};

/// Rank 4 transversal matroid on `1..6` with sets `{1,2}, {3,4}, {5,6}, {1,3,5}`.
pub fn matroid_y() -> Matroid {
    let ground = GroundSet::numbered(6).expect("6 labels");
    let sets = [["1", "2"].as_slice(), &["3", "4"], &["5", "6"], &["1", "3", "5"]]
        .iter()
        .map(|s| ground.subset(*s).expect("labels exist"))
        .collect();
    transversal(&SetSystem::new(ground, sets).expect("valid presentation"))
}

/// The three 4-element flats `{1,2,3,4}, {1,2,5,6}, {3,4,5,6}` of [`matroid_y`].
pub fn matroid_y_triple(m: &Matroid) -> FlatCollection {
    by_labels(m, &[&["1", "2", "3", "4"], &["1", "2", "5", "6"], &["3", "4", "5", "6"]])
}

const TWELVE_PLANES: [[usize; 6]; 3] = [
    [1, 3, 4, 6, 7, 8],
    [2, 3, 4, 9, 11, 12],
    [5, 7, 8, 10, 11, 12],
];

const TWELVE_HYPERPLANES: [[usize; 8]; 3] = [
    [1, 2, 3, 4, 5, 6, 7, 8],
    [1, 2, 3, 4, 9, 10, 11, 12],
    [5, 6, 7, 8, 9, 10, 11, 12],
];

fn numbered(g: &GroundSet, xs: &[usize]) -> Subset {
    g.subset(xs.iter().map(|x| x.to_string())).expect("labels exist")
}

/// Flats named in the usual description of [`twelve`]: every set of at most
/// four elements, three 6-sets, the 5-sets not inside one of them, three 8-sets
/// and the ground set. Not the full lattice: rank 6 also has independent
/// 6-sets such as `{1,2,3,4,5,9}` and 7-sets such as `{1,3,4,6,7,8,9}`.
pub fn twelve_listed_flats() -> (GroundSet, Vec<Subset>) {
    let g = GroundSet::numbered(12).expect("12 labels");
    let planes: Vec<Subset> = TWELVE_PLANES.iter().map(|p| numbered(&g, p)).collect();
    let mut flats: Vec<Subset> = g
        .full()
        .subsets()
        .filter(|s| {
            s.len() <= 4 || (s.len() == 5 && !planes.iter().any(|p| s.is_subset_of(*p)))
        })
        .collect();
    flats.extend(&planes);
    flats.extend(TWELVE_HYPERPLANES.iter().map(|h| numbered(&g, h)));
    flats.push(g.full());
    (g, flats)
}

/// Rank 7 matroid on `1..12` with cyclic flats `∅`, three 6-sets of rank 5,
/// three 8-sets of rank 6 and the ground set; `r(X) = min_Z r(Z) + |X∖Z|`
/// over those cyclic flats `Z`. Pseudomodular but not 3-flat.
pub fn twelve() -> Matroid {
    let g = GroundSet::numbered(12).expect("12 labels");
    let mut cyclic: Vec<(Subset, i64)> = vec![(Subset::EMPTY, 0), (g.full(), 7)];
    cyclic.extend(TWELVE_PLANES.iter().map(|p| (numbered(&g, p), 5)));
    cyclic.extend(TWELVE_HYPERPLANES.iter().map(|h| (numbered(&g, h), 6)));
    let table: Vec<i64> = g
        .full()
        .subsets()
        .map(|x| {
            cyclic
                .iter()
                .map(|&(z, r)| r + x.difference(z).len() as i64)
                .min()
                .expect("nonempty")
        })
        .collect();
    from_rank_table(g, &table).expect("cyclic flat axioms hold")
}

/// `F_1, F_2, F_3` of [`twelve`].
pub fn twelve_triple(m: &Matroid) -> FlatCollection {
    let members = TWELVE_HYPERPLANES
        .iter()
        .map(|h| numbered(m.ground(), h))
        .collect();
    FlatCollection::new(m, members).expect("hyperplanes are flats")
}

/// Cycle matroid of `K_4`.
pub fn k4() -> Matroid {
    graphic(&Graph::complete(4).expect("K4"))
}

pub fn mn(n: usize) -> Matroid {
    family_mn(n).expect("n >= 5")
}

/// The transposition `(1 2)` and the cycle `(1 2 ... n)` acting on the pair
/// labels of [`mn`].
pub fn mn_generators(n: usize) -> Vec<Vec<usize>> {
    let g = mn(n).ground().clone();
    let act = |f: &dyn Fn(usize) -> usize| -> Vec<usize> {
        g.labels()
            .iter()
            .map(|l| {
                let (a, b) = l.split_once('-').expect("pair label");
                let (a, b) = (f(a.parse().expect("index")), f(b.parse().expect("index")));
                let (a, b) = (a.min(b), a.max(b));
                g.index_of(&format!("{a}-{b}")).expect("pair exists")
            })
            .collect()
    };
    vec![
        act(&|i| match i {
            1 => 2,
            2 => 1,
            i => i,
        }),
        act(&|i| i % n + 1),
    ]
}

fn by_labels(m: &Matroid, sets: &[&[&str]]) -> FlatCollection {
    let members = sets
        .iter()
        .map(|s| m.ground().subset(*s).expect("labels exist"))
        .collect();
    FlatCollection::new(m, members).expect("members are flats")
}

/// Uniform matroids in the corpus, as `(k, n)`.
pub const UNIFORMS: [(usize, usize); 7] = [(0, 3), (1, 3), (2, 4), (3, 4), (2, 5), (3, 5), (4, 6)];

/// Names accepted by [`by_name`].
pub fn names() -> Vec<String> {
    let mut v: Vec<String> = ["matroidY", "twelve", "k4", "mn5", "mn6"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    v.extend(UNIFORMS.iter().map(|(k, n)| format!("u{k}{n}")));
    v
}

/// Builds a named corpus matroid (`u<k><n>` for the uniform ones).
pub fn by_name(name: &str) -> Option<Matroid> {
    match name {
        "matroidY" => Some(matroid_y()),
        "twelve" => Some(twelve()),
        "k4" => Some(k4()),
        "mn5" => Some(mn(5)),
        "mn6" => Some(mn(6)),
        _ => UNIFORMS
            .iter()
            .find(|(k, n)| name == format!("u{k}{n}"))
            .map(|&(k, n)| uniform(k, n).expect("k <= n")),
    }
}

/// A `Δ` value expected for a named collection.
#[derive(Debug, Clone)]
pub struct NamedDelta {
    pub name: &'static str,
    pub members: Vec<Subset>,
    pub value: i64,
}

/// Expected pseudomodularity failure: `A`, `B`, `B_1`, `B_2` and the four ranks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExpectedWitness {
    pub a: Subset,
    pub b: Subset,
    pub b1: Subset,
    pub b2: Subset,
    pub ranks: [usize; 4],
}

#[derive(Debug, Clone, Default)]
pub struct Expected {
    pub rank: Option<usize>,
    pub flat_count: Option<usize>,
    pub flatness_degree: Option<Degree>,
    pub pseudomodular: Option<bool>,
    pub modular: Option<bool>,
    pub deltas: Vec<NamedDelta>,
    pub witness: Option<ExpectedWitness>,
}

#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub name: String,
    pub matroid: Matroid,
    pub expected: Expected,
    /// Permutations of the ground set believed to be automorphisms; checked
    /// before use.
    pub symmetry: Vec<Vec<usize>>,
}

/// The fixed entries: the examples, `M_5`, `M_6`, `K_4` and the uniform matroids.
pub fn fixed_entries() -> Vec<CorpusEntry> {
    let mut out = Vec::new();

    let m = matroid_y();
    let g = m.ground().clone();
    let s = |xs: &[&str]| g.subset(xs).expect("labels exist");
    out.push(CorpusEntry {
        name: "matroidY".into(),
        expected: Expected {
            rank: Some(4),
            flatness_degree: Some(Degree::Finite(2)),
            pseudomodular: Some(false),
            modular: Some(false),
            deltas: vec![NamedDelta {
                name: "three 4-sets",
                members: matroid_y_triple(&m).into_members(),
                value: 1,
            }],
            witness: Some(ExpectedWitness {
                a: s(&["1", "2"]),
                b: s(&["3", "4", "5", "6"]),
                b1: s(&["3", "4"]),
                b2: s(&["5", "6"]),
                ranks: [1, 1, 1, 2],
            }),
            ..Default::default()
        },
        matroid: m,
        symmetry: Vec::new(),
    });

    let m = twelve();
    out.push(CorpusEntry {
        name: "twelve".into(),
        expected: Expected {
            rank: Some(7),
            flatness_degree: Some(Degree::Finite(2)),
            pseudomodular: Some(true),
            modular: Some(false),
            deltas: vec![NamedDelta {
                name: "F1 F2 F3",
                members: twelve_triple(&m).into_members(),
                value: 1,
            }],
            ..Default::default()
        },
        matroid: m,
        symmetry: Vec::new(),
    });

    out.push(CorpusEntry {
        name: "k4".into(),
        matroid: k4(),
        expected: Expected {
            rank: Some(3),
            flat_count: Some(15),
            flatness_degree: Some(Degree::Finite(3)),
            pseudomodular: Some(true),
            modular: Some(false),
            ..Default::default()
        },
        symmetry: Vec::new(),
    });

    for n in [5, 6] {
        let m = mn(n);
        let circuits: Vec<Subset> = (1..=n)
            .map(|i| family_mn_circuit(n, i))
            .collect();
        out.push(CorpusEntry {
            name: format!("mn{n}"),
            expected: Expected {
                rank: Some((n - 1) * (n - 2) / 2),
                flatness_degree: Some(Degree::Finite(n - 1)),
                pseudomodular: Some(true),
                modular: Some(false),
                deltas: vec![NamedDelta {
                    name: "all F_i",
                    members: circuits,
                    value: 1,
                }],
                ..Default::default()
            },
            matroid: m,
            symmetry: mn_generators(n),
        });
    }

    for &(k, n) in &UNIFORMS {
        out.push(CorpusEntry {
            name: format!("u{k}{n}"),
            matroid: uniform(k, n).expect("k <= n"),
            expected: Expected {
                rank: Some(k),
                flatness_degree: Some(Degree::Omega),
                pseudomodular: Some(true),
                modular: Some(k <= 2 || k == n),
                ..Default::default()
            },
            symmetry: Vec::new(),
        });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twelve_agrees_with_listed_flats_up_to_rank_five() {
        let m = twelve();
        let (_, listed) = twelve_listed_flats();
        for &f in &listed {
            assert!(m.is_flat(f).unwrap(), "{}", m.ground().format(f));
        }
        let mut low: Vec<Subset> = m.flats().iter().copied().filter(|&f| m.r(f) <= 5).collect();
        let mut want: Vec<Subset> = listed.iter().copied().filter(|f| f.len() <= 6).collect();
        low.sort();
        want.sort();
        assert_eq!(low, want);
        let extra = m.ground().subset(["1", "2", "3", "4", "5", "9"]).unwrap();
        assert!(m.is_flat(extra).unwrap());
        assert_eq!(m.r(extra), 6);
    }

    #[test]
    fn twelve_cyclic_flats() {
        let m = twelve();
        let ranks: Vec<(usize, usize)> = m.cyclic_flats().iter().map(|&f| (f.len(), m.r(f))).collect();
        let mut sorted = ranks.clone();
        sorted.sort();
        assert_eq!(sorted, vec![(0, 0), (6, 5), (6, 5), (6, 5), (8, 6), (8, 6), (8, 6), (12, 7)]);
    }

    #[test]
    fn names_resolve() {
        for n in names() {
            assert!(by_name(&n).is_some(), "{n}");
        }
        assert!(by_name("nope").is_none());
    }
}
