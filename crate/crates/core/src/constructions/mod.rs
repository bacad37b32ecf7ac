//! Building matroids from the representations in common use: uniform matroids,
//! rank tables, circuit families, flat lists, graphs, set-system presentations
//! and digraphs.

mod linking;
mod matching;

use std::collections::HashSet;

pub use linking::{linking_paths, max_linking};
pub use matching::max_matching;

use crate::axioms;
use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::subset::{GroundSet, Subset, MAX_GROUND};

fn table_matroid(ground: GroundSet, table: Vec<u8>) -> Matroid {
    Matroid::from_oracle(ground, move |s: Subset| table[s.bits() as usize] as usize)
}

/// `U_{k,n}`: `r(A) = min(|A|, k)`, elements labelled `a`, `b`, ...
pub fn uniform(k: usize, n: usize) -> Result<Matroid> {
    if k > n {
        return Err(Error::InvalidArgument(format!(
            "uniform matroid needs k <= n, got k = {k}, n = {n}"
        )));
    }
    let ground = GroundSet::lettered(n)?;
    Ok(Matroid::from_oracle(ground, move |s: Subset| s.len().min(k)))
}

/// Wraps an explicit table (`table[mask] = r(mask)`) after checking the axioms.
pub fn from_rank_table(ground: GroundSet, table: &[i64]) -> Result<Matroid> {
    let n = ground.len();
    if table.len() != 1usize << n {
        return Err(Error::Validation(format!(
            "rank table has {} entries, expected 2^{n} = {}",
            table.len(),
            1usize << n
        )));
    }
    axioms::check(n, ground.cap(), |s| table[s.bits() as usize])?.into_result()?;
    let table = table.iter().map(|&v| v as u8).collect();
    Ok(table_matroid(ground, table))
}

/// An ordered family `(A_1, .., A_k)` of subsets; repeats are allowed.
#[derive(Debug, Clone)]
pub struct SetSystem {
    pub ground: GroundSet,
    pub sets: Vec<Subset>,
}

impl SetSystem {
    pub fn new(ground: GroundSet, sets: Vec<Subset>) -> Result<Self> {
        for (i, &s) in sets.iter().enumerate() {
            if !ground.admits(s) {
                return Err(Error::Validation(format!(
                    "set {i} is not contained in the ground set"
                )));
            }
        }
        Ok(SetSystem { ground, sets })
    }

    fn membership(&self) -> Vec<Vec<usize>> {
        (0..self.ground.len())
            .map(|e| {
                (0..self.sets.len())
                    .filter(|&j| self.sets[j].contains(e))
                    .collect()
            })
            .collect()
    }

    /// A maximum matching of the elements of `elements` as `(element, set index)` pairs.
    pub fn matching(&self, elements: Subset) -> Result<Vec<(usize, usize)>> {
        self.ground.check(elements)?;
        let assigned = max_matching(elements, &self.membership(), self.sets.len());
        let mut pairs: Vec<(usize, usize)> = assigned
            .iter()
            .enumerate()
            .filter_map(|(j, e)| e.map(|e| (e, j)))
            .collect();
        pairs.sort();
        Ok(pairs)
    }
}

/// The transversal matroid of a presentation: `r(A)` is the size of a maximum
/// matching of `A` into the sets.
pub fn transversal(p: &SetSystem) -> Matroid {
    let membership = p.membership();
    let k = p.sets.len();
    Matroid::from_oracle(p.ground.clone(), move |s: Subset| {
        max_matching(s, &membership, k).iter().flatten().count()
    })
}

/// A digraph with a distinguished ground set `N_1` and terminal set `N_2`.
#[derive(Debug, Clone)]
pub struct DigraphPresentation {
    pub vertices: GroundSet,
    pub edges: Vec<(usize, usize)>,
    pub ground: Subset,
    pub terminals: Subset,
}

impl DigraphPresentation {
    pub fn new<S: Into<String>>(
        vertices: impl IntoIterator<Item = S>,
        edges: Vec<(usize, usize)>,
        ground: Subset,
        terminals: Subset,
    ) -> Result<Self> {
        let vertices = GroundSet::with_cap(vertices, MAX_GROUND)?;
        let v = vertices.len();
        if let Some(&(a, b)) = edges.iter().find(|&&(a, b)| a >= v || b >= v) {
            return Err(Error::Validation(format!(
                "edge ({a}, {b}) has an endpoint outside the {v} vertices"
            )));
        }
        if !vertices.admits(ground) || !vertices.admits(terminals) {
            return Err(Error::Validation(
                "ground and terminal sets must be sets of vertices".into(),
            ));
        }
        Ok(DigraphPresentation {
            vertices,
            edges,
            ground,
            terminals,
        })
    }

    /// Presentation of a strict gammoid: every vertex is a ground element.
    pub fn strict<S: Into<String>>(
        vertices: impl IntoIterator<Item = S>,
        edges: Vec<(usize, usize)>,
        terminals: Subset,
    ) -> Result<Self> {
        let labels: Vec<String> = vertices.into_iter().map(Into::into).collect();
        let all = Subset::full(labels.len());
        Self::new(labels, edges, all, terminals)
    }

    /// Maps a subset of the gammoid's ground set to the corresponding vertex set.
    pub fn lift(&self, set: Subset) -> Subset {
        let positions: Vec<usize> = self.ground.iter().collect();
        set.iter().map(|i| positions[i]).collect()
    }

    /// A maximum linking of the ground elements in `set` into the terminals,
    /// as vertex sequences.
    pub fn linking(&self, set: Subset) -> Vec<Vec<usize>> {
        linking_paths(
            self.vertices.len(),
            &self.edges,
            self.lift(set),
            self.terminals,
        )
    }
}

/// The gammoid of a digraph presentation on `N_1`: `r(I)` is the largest number
/// of vertex-disjoint paths from distinct vertices of `I` into `N_2`.
pub fn gammoid(d: &DigraphPresentation) -> Result<Matroid> {
    let ground = d.vertices.restricted(d.ground);
    if ground.len() > crate::subset::DEFAULT_CAP {
        return Err(Error::GuardExceeded(format!(
            "gammoid ground set of size {} exceeds the enumeration cap",
            ground.len()
        )));
    }
    let positions: Vec<usize> = d.ground.iter().collect();
    let v = d.vertices.len();
    let edges = d.edges.clone();
    let terminals = d.terminals;
    Ok(Matroid::from_oracle(ground, move |s: Subset| {
        let sources: Subset = s.iter().map(|i| positions[i]).collect();
        max_linking(v, &edges, sources, terminals)
    }))
}

/// Gammoid whose ground set is every vertex.
pub fn strict_gammoid(d: &DigraphPresentation) -> Result<Matroid> {
    if d.ground != d.vertices.full() {
        return Err(Error::Validation(
            "a strict gammoid uses every vertex as a ground element".into(),
        ));
    }
    gammoid(d)
}

/// Validates an antichain of nonempty circuits and builds the matroid whose
/// independent sets are the sets containing no member.
pub fn from_circuits(ground: GroundSet, circuits: &[Subset]) -> Result<Matroid> {
    for (i, &c) in circuits.iter().enumerate() {
        ground.check(c)?;
        if c.is_empty() {
            return Err(Error::Validation(format!("circuit {i} is empty")));
        }
        for (j, &d) in circuits.iter().enumerate() {
            if i != j && c.is_subset_of(d) {
                return Err(Error::Validation(format!(
                    "circuits {i} and {j} are nested; circuits must form an antichain"
                )));
            }
        }
    }
    let n = ground.len();
    let size = 1usize << n;
    let mut table = vec![0u8; size];
    for m in 0..size as u64 {
        let s = Subset::from_bits(m);
        let independent = !circuits.iter().any(|c| c.is_subset_of(s));
        table[m as usize] = if independent {
            s.len() as u8
        } else {
            s.iter()
                .map(|e| table[s.without(e).bits() as usize])
                .max()
                .unwrap_or(0)
        };
    }
    axioms::check(n, ground.cap(), |s| table[s.bits() as usize] as i64)?.into_result()?;
    Ok(table_matroid(ground, table))
}

/// An undirected multigraph; its edges form the ground set of the cycle matroid.
#[derive(Debug, Clone)]
pub struct Graph {
    pub vertices: usize,
    pub edges: Vec<(usize, usize)>,
    pub edge_labels: GroundSet,
}

impl Graph {
    pub fn new(vertices: usize, edges: Vec<(usize, usize)>, edge_labels: GroundSet) -> Result<Self> {
        if edge_labels.len() != edges.len() {
            return Err(Error::Validation(format!(
                "{} edge labels for {} edges",
                edge_labels.len(),
                edges.len()
            )));
        }
        if let Some(&(a, b)) = edges.iter().find(|&&(a, b)| a >= vertices || b >= vertices) {
            return Err(Error::Validation(format!(
                "edge ({a}, {b}) has an endpoint outside the {vertices} vertices"
            )));
        }
        Ok(Graph {
            vertices,
            edges,
            edge_labels,
        })
    }

    /// The complete graph `K_n` with edges labelled `ij` (vertices `1..=n`).
    pub fn complete(n: usize) -> Result<Self> {
        let mut edges = Vec::new();
        let mut labels = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                edges.push((i, j));
                labels.push(format!("{}{}", i + 1, j + 1));
            }
        }
        Graph::new(n, edges, GroundSet::new(labels)?)
    }
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Cycle matroid: `r(A)` = number of edges in a spanning forest of `A`.
pub fn graphic(g: &Graph) -> Matroid {
    let edges = g.edges.clone();
    let vertices = g.vertices;
    Matroid::from_oracle(g.edge_labels.clone(), move |s: Subset| {
        let mut parent: Vec<usize> = (0..vertices).collect();
        let mut rank = 0;
        for e in s {
            let (a, b) = edges[e];
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra] = rb;
                rank += 1;
            }
        }
        rank
    })
}

/// Builds the matroid with exactly the given flats.
///
/// Flat ranks are longest-chain heights above the smallest flat; other sets get
/// the rank of the smallest flat containing them. The result is checked against
/// the axioms and its flat family must reproduce the input.
pub fn from_flat_list(ground: GroundSet, flats: &[Subset]) -> Result<Matroid> {
    let full = ground.full();
    let mut family: Vec<Subset> = flats.to_vec();
    for &f in &family {
        ground.check(f)?;
    }
    family.sort_unstable();
    family.dedup();
    if !family.contains(&full) {
        return Err(Error::Validation(
            "flat family must contain the ground set".into(),
        ));
    }
    let members: HashSet<Subset> = family.iter().copied().collect();
    for (i, &a) in family.iter().enumerate() {
        for &b in &family[i + 1..] {
            if !members.contains(&a.intersection(b)) {
                return Err(Error::Validation(format!(
                    "flat family is not closed under intersection: {} ∩ {} is missing",
                    ground.format(a),
                    ground.format(b)
                )));
            }
        }
    }

    // heights by increasing cardinality
    let mut order: Vec<usize> = (0..family.len()).collect();
    order.sort_by_key(|&i| (family[i].len(), family[i]));
    let mut height = vec![0usize; family.len()];
    for (pos, &i) in order.iter().enumerate() {
        height[i] = order[..pos]
            .iter()
            .filter(|&&j| family[j] != family[i] && family[j].is_subset_of(family[i]))
            .map(|&j| height[j] + 1)
            .max()
            .unwrap_or(0);
    }

    let n = ground.len();
    let mut table = vec![0u8; 1usize << n];
    for m in 0..1u64 << n {
        let s = Subset::from_bits(m);
        let (closure, h) = family
            .iter()
            .zip(&height)
            .filter(|(f, _)| s.is_subset_of(**f))
            .fold((full, usize::MAX), |(c, h), (&f, &fh)| {
                (c.intersection(f), h.min(fh))
            });
        // the intersection of all flats containing s is itself a member, and the
        // smallest one; its height is the minimum over containing flats
        debug_assert!(members.contains(&closure));
        table[m as usize] = h as u8;
    }
    axioms::check(n, ground.cap(), |s| table[s.bits() as usize] as i64)?.into_result()?;
    let m = table_matroid(ground, table);
    if m.flats() != family.as_slice() {
        return Err(Error::Validation(format!(
            "the family is not the flat family of a matroid: the derived matroid has {} flats, the input {}",
            m.flats().len(),
            family.len()
        )));
    }
    Ok(m)
}

/// `C(n, k)` for small arguments.
fn choose(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Labels of the 2-subsets of `[n]` in lexicographic order, e.g. `1-2`.
fn pair_labels(n: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            pairs.push((i, j));
        }
    }
    pairs
}

/// The set-system presentation of the flatness-degree-`n` family: ground set the
/// 2-subsets of `[n]`, sets `A_i = {x : i ∈ x}` followed by `C(n-1,2) - n`
/// copies of the whole ground set.
pub fn family_mn_presentation(n: usize) -> Result<SetSystem> {
    if n < 5 {
        return Err(Error::Unsupported(format!(
            "family_mn needs n >= 5 (the padding count C(n-1,2) - n is negative for n = {n}); \
             use graphic K4 (degree 3) or the corpus entries \"matroidY\" and \"twelve\" (degree 2)"
        )));
    }
    let pairs = pair_labels(n);
    let ground = GroundSet::new(pairs.iter().map(|(i, j)| format!("{i}-{j}")))?;
    let mut sets: Vec<Subset> = (1..=n)
        .map(|i| {
            pairs
                .iter()
                .enumerate()
                .filter(|(_, &(a, b))| a == i || b == i)
                .map(|(k, _)| k)
                .collect()
        })
        .collect();
    let copies = choose(n - 1, 2) - n;
    sets.extend(std::iter::repeat_n(ground.full(), copies));
    SetSystem::new(ground, sets)
}

/// `F_i = {x : i ∉ x}` in the ground set of [`family_mn`], for `i` in `1..=n`.
pub fn family_mn_circuit(n: usize, i: usize) -> Subset {
    pair_labels(n)
        .iter()
        .enumerate()
        .filter(|(_, &(a, b))| a != i && b != i)
        .map(|(k, _)| k)
        .collect()
}

/// The transversal matroid whose only proper nonempty cyclic flats are the
/// circuits `F_i`. Any `m >= 3` of them have `Δ = m - n + 1`, so all `n` together
/// give `Δ = 1` and the flatness degree is `n - 1` (`n >= 5`).
pub fn family_mn(n: usize) -> Result<Matroid> {
    Ok(transversal(&family_mn_presentation(n)?))
}
