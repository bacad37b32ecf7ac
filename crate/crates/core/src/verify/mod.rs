//! Brute-force oracles and the example corpus.
//!
//! The oracles read the definitions literally and use nothing from
//! `flatness::search` or `pseudomod`; they only ask the matroid for ranks and
//! its list of flats.

pub mod corpus;
pub mod random;
pub mod symmetry;

use std::fmt::Display;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::flatness::{self, Degree, FlatCollection, FlatnessWitness};
use crate::matroid::Matroid;
use crate::pseudomod::{self, PseudomodularityReport, PseudomodularityWitness};
use crate::subset::Subset;

use corpus::{CorpusEntry, Expected};
use symmetry::Symmetry;

/// Default number of collections the flatness oracle may evaluate.
pub const ORACLE_BUDGET: u64 = 10_000_000;

/// Default number of `(A, B, B_1)` visits the pseudomodularity oracle may make.
pub const PSEUDO_ORACLE_BUDGET: u64 = 5_000_000_000;

/// Budget of the flatness oracle when it runs up to symmetry.
pub const SYMMETRIC_ORACLE_BUDGET: u64 = 2_000_000_000;

/// Matroids with at most this many flats get the flatness oracle in the corpus run.
pub const ORACLE_FLAT_LIMIT: usize = 50;

/// `Σ_{S ⊆ I} (-1)^{|S|} r(F_S)`, every intersection built from scratch.
pub fn literal_delta(m: &Matroid, members: &[Subset]) -> i64 {
    let k = members.len();
    let mut sum = 0i64;
    for s in 0u64..1 << k {
        let set = if s == 0 {
            members.iter().fold(Subset::EMPTY, |u, &f| u.union(f))
        } else {
            (0..k)
                .filter(|i| s >> i & 1 == 1)
                .fold(m.full(), |acc, i| acc.intersection(members[i]))
        };
        let r = m.r(set) as i64;
        sum += if s.count_ones() % 2 == 0 { r } else { -r };
    }
    sum
}

#[derive(Debug, Clone)]
pub struct OracleDegree {
    /// `Finite(d)` when a violation of size `d + 1` was found, `Omega` when
    /// every set of distinct flats was examined, else `AtLeast(cap)`.
    pub degree: Degree,
    pub witness: Option<FlatnessWitness>,
    pub cap: usize,
    pub evaluations: u64,
}

fn combinations(n: usize, k: usize) -> u128 {
    (0..k as u128).fold(1u128, |acc, i| acc * (n as u128 - i) / (i + 1))
}

/// Number of collections [`brute_force_flatness_degree`] evaluates with this cap.
pub fn oracle_cost(flats: usize, cap: usize) -> u128 {
    (1..=cap.min(flats)).map(|k| combinations(flats, k)).sum()
}

/// Largest cap whose full enumeration fits in `budget`.
pub fn largest_affordable_cap(flats: usize, budget: u64) -> usize {
    (0..=flats)
        .take_while(|&c| oracle_cost(flats, c) <= budget as u128)
        .last()
        .unwrap_or(0)
}

/// Examines every set of distinct flats of size `1..=cap` in order of size.
pub fn brute_force_flatness_degree(m: &Matroid, cap: usize, budget: u64) -> Result<OracleDegree> {
    let flats = m.flats();
    let f = flats.len();
    let cost = oracle_cost(f, cap);
    if cost > budget as u128 {
        return Err(Error::GuardExceeded(format!(
            "{cost} collections of up to {cap} of {f} flats exceed the budget of {budget}"
        )));
    }
    let mut walk = Walk::new(m);
    for k in 1..=cap.min(f) {
        if let Some(w) = walk.search(flats, 0, k) {
            return Ok(walk.found(k, w, cap));
        }
    }
    Ok(walk.exhausted(cap, f))
}

/// As [`brute_force_flatness_degree`], but only sets containing one of `reps`.
/// With `reps` one flat per orbit of an automorphism group this still covers
/// every set up to symmetry.
pub fn brute_force_flatness_degree_over(
    m: &Matroid,
    reps: &[Subset],
    cap: usize,
    budget: u64,
) -> Result<OracleDegree> {
    let flats = m.flats();
    let f = flats.len();
    let cost: u128 = (1..=cap.min(f))
        .map(|k| reps.len() as u128 * combinations(f - 1, k - 1))
        .sum();
    if cost > budget as u128 {
        return Err(Error::GuardExceeded(format!(
            "{cost} collections of up to {cap} of {f} flats exceed the budget of {budget}"
        )));
    }
    let mut walk = Walk::new(m);
    for k in 1..=cap.min(f) {
        for &r in reps {
            let others: Vec<Subset> = flats.iter().copied().filter(|&x| x != r).collect();
            walk.push(r);
            let found = walk.search(&others, 0, k - 1);
            walk.pop();
            if let Some(w) = found {
                return Ok(walk.found(k, w, cap));
            }
        }
    }
    Ok(walk.exhausted(cap, f))
}

/// Depth-first walk over collections. For the current members `F_1..F_j` it
/// keeps every intersection `F_S` (index `S` as a bit mask, `F_∅ = N`) and the
/// signed sum over nonempty `S`; the union term is added at the leaves.
struct Walk<'a> {
    m: &'a Matroid,
    members: Vec<Subset>,
    inter: Vec<Subset>,
    sums: Vec<i64>,
    evaluations: u64,
}

impl<'a> Walk<'a> {
    fn new(m: &'a Matroid) -> Self {
        Walk {
            m,
            members: Vec::new(),
            inter: vec![m.full()],
            sums: vec![0],
            evaluations: 0,
        }
    }

    fn push(&mut self, f: Subset) {
        let half = self.inter.len();
        let mut sum = *self.sums.last().expect("root sum");
        for s in 0..half {
            let x = self.inter[s].intersection(f);
            let r = self.m.r(x) as i64;
            // |S ∪ {new}| = |S| + 1
            sum += if s.count_ones() % 2 == 0 { -r } else { r };
            self.inter.push(x);
        }
        self.members.push(f);
        self.sums.push(sum);
    }

    fn pop(&mut self) {
        self.members.pop();
        self.sums.pop();
        let half = self.inter.len() / 2;
        self.inter.truncate(half);
    }

    /// Extends the current members by `more` flats of `pool[start..]`.
    fn search(&mut self, pool: &[Subset], start: usize, more: usize) -> Option<FlatnessWitness> {
        if more == 0 {
            self.evaluations += 1;
            let union = self.members.iter().fold(Subset::EMPTY, |u, &f| u.union(f));
            let delta = self.m.r(union) as i64 + self.sums.last().expect("root sum");
            return (delta > 0).then(|| FlatnessWitness {
                members: self.members.clone(),
                delta,
            });
        }
        for i in start..(pool.len() + 1).saturating_sub(more) {
            self.push(pool[i]);
            let found = self.search(pool, i + 1, more - 1);
            self.pop();
            if found.is_some() {
                return found;
            }
        }
        None
    }

    fn found(&self, k: usize, w: FlatnessWitness, cap: usize) -> OracleDegree {
        debug_assert_eq!(literal_delta(self.m, &w.members), w.delta);
        OracleDegree {
            degree: Degree::Finite(k - 1),
            witness: Some(w),
            cap,
            evaluations: self.evaluations,
        }
    }

    fn exhausted(&self, cap: usize, flats: usize) -> OracleDegree {
        OracleDegree {
            degree: if cap >= flats { Degree::Omega } else { Degree::AtLeast(cap) },
            witness: None,
            cap,
            evaluations: self.evaluations,
        }
    }
}

/// Whether an oracle result is consistent with an optimized one: equal finite
/// degrees, or an oracle lower bound not contradicted.
pub fn degrees_agree(oracle: Degree, optimized: Degree) -> bool {
    match (oracle, optimized) {
        (Degree::AtLeast(c), Degree::Finite(d)) => d >= c,
        (Degree::AtLeast(_), Degree::Omega | Degree::AtLeast(_)) => true,
        (a, b) => a == b,
    }
}

/// For every ordered pair of flats `(A, B)`, lists the flats `B_1 ⊆ B`, builds
/// `T = {B_1 : r(A/B_1) = r(A/B)}` and looks for `B_0 ∈ T` with
/// `B_1 ∈ T ⟺ B_0 ⊆ B_1` for every flat `B_1 ⊆ B`.
pub fn brute_force_pseudomodularity(m: &Matroid, budget: u64) -> Result<PseudomodularityReport> {
    brute_force_pseudomodularity_over(m, m.flats(), budget)
}

/// As [`brute_force_pseudomodularity`] with `A` restricted to `outer`.
/// Visits are counted as `(A, B, B_1)` triples.
pub fn brute_force_pseudomodularity_over(
    m: &Matroid,
    outer: &[Subset],
    budget: u64,
) -> Result<PseudomodularityReport> {
    let flats = m.flats();
    let below: Vec<Vec<Subset>> = flats
        .iter()
        .map(|&b| flats.iter().copied().filter(|f| f.is_subset_of(b)).collect())
        .collect();
    let per_a: u64 = below.iter().map(|v| v.len() as u64).sum();
    let total = per_a as u128 * outer.len() as u128;
    if total > budget as u128 {
        return Err(Error::GuardExceeded(format!(
            "pseudomodularity oracle needs {total} visits, above its budget of {budget}"
        )));
    }
    let contraction = |a: Subset, b: Subset| m.r(a.union(b)) - m.r(b);
    for &a in outer {
        for (bi, &b) in flats.iter().enumerate() {
            let target = contraction(a, b);
            let below: Vec<(Subset, bool)> = below[bi]
                .iter()
                .map(|&f| (f, contraction(a, f) == target))
                .collect();
            let mut family: Vec<Subset> = below.iter().filter(|x| x.1).map(|x| x.0).collect();
            family.sort_by_key(|f| f.len());
            let exists = family.iter().any(|&b0| {
                below
                    .iter()
                    .all(|&(b1, in_family)| in_family == b0.is_subset_of(b1))
            });
            if exists {
                continue;
            }
            for (i, &b1) in family.iter().enumerate() {
                for &b2 in &family[i + 1..] {
                    if contraction(a, b1.intersection(b2)) != target {
                        return Ok(PseudomodularityReport {
                            pseudomodular: false,
                            witness: Some(PseudomodularityWitness::new(m, a, b, b1, b2)),
                        });
                    }
                }
            }
            return Err(Error::Internal(format!(
                "no pseudointersection for ({}, {}) but T is closed under intersection",
                m.ground().format(a),
                m.ground().format(b)
            )));
        }
    }
    Ok(PseudomodularityReport {
        pseudomodular: true,
        witness: None,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    /// A guard stopped the check; not a failure.
    Skipped,
}

#[derive(Debug, Clone, Serialize)]
pub struct FieldCheck {
    pub field: String,
    pub expected: String,
    pub actual: String,
    pub status: Status,
}

#[derive(Debug, Clone, Serialize)]
pub struct EntryReport {
    pub name: String,
    pub elements: usize,
    pub rank: usize,
    pub flats: usize,
    pub fields: Vec<FieldCheck>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CorpusReport {
    pub seed: u64,
    pub entries: Vec<EntryReport>,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

impl CorpusReport {
    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }
}

/// Random strict gammoids and random transversal matroids in each corpus run.
pub const RANDOM_BATCH: usize = 20;

struct Fields {
    out: Vec<FieldCheck>,
}

impl Fields {
    fn push(&mut self, field: impl Into<String>, expected: impl Display, actual: impl Display, ok: bool) {
        self.out.push(FieldCheck {
            field: field.into(),
            expected: expected.to_string(),
            actual: actual.to_string(),
            status: if ok { Status::Pass } else { Status::Fail },
        });
    }

    fn error(&mut self, field: impl Into<String>, expected: impl Display, err: Error) {
        let status = match err {
            Error::GuardExceeded(_) => Status::Skipped,
            _ => Status::Fail,
        };
        self.out.push(FieldCheck {
            field: field.into(),
            expected: expected.to_string(),
            actual: err.to_string(),
            status,
        });
    }
}

fn witness_string(m: &Matroid, w: &PseudomodularityWitness) -> String {
    let g = m.ground();
    format!(
        "A={} B={} B1={} B2={} ranks={:?}",
        g.format(w.a),
        g.format(w.b),
        g.format(w.b1),
        g.format(w.b2),
        w.ranks
    )
}

/// Evaluates one entry. Expected values that are `None` are not checked; the
/// cross-checks between implementations always run (subject to guards).
pub fn check_entry(entry: &CorpusEntry) -> EntryReport {
    let m = &entry.matroid;
    let e: &Expected = &entry.expected;
    let mut f = Fields { out: Vec::new() };

    match m.check_axioms() {
        Ok(c) => f.push("axioms", "pass", if c.passed() { "pass" } else { "violation" }, c.passed()),
        Err(err) => f.error("axioms", "pass", err),
    }
    if let Some(r) = e.rank {
        f.push("rank", r, m.full_rank(), r == m.full_rank());
    }
    if let Some(c) = e.flat_count {
        f.push("flat_count", c, m.flats().len(), c == m.flats().len());
    }
    for d in &e.deltas {
        let got = FlatCollection::new(m, d.members.clone()).and_then(|c| flatness::delta(&c));
        match got {
            Ok(v) => f.push(format!("delta[{}]", d.name), d.value, v, v == d.value),
            Err(err) => f.error(format!("delta[{}]", d.name), d.value, err),
        }
    }

    let degree = flatness::flatness_degree(m);
    match &degree {
        Ok(res) => {
            if let Some(want) = e.flatness_degree {
                f.push("flatness_degree", want, res.degree, want == res.degree);
            }
            if let Some(w) = &res.witness {
                let again = literal_delta(m, &w.members);
                f.push("degree_witness_delta", w.delta, again, again == w.delta && again > 0);
            }
        }
        Err(err) => f.error("flatness_degree", "a degree", err.clone()),
    }
    let sym = match Symmetry::new(m, entry.symmetry.clone()) {
        Ok(s) => s,
        Err(err) => {
            f.error("symmetry", "automorphisms", err);
            Symmetry::trivial()
        }
    };
    let reps = sym.flat_representatives(m);
    if let Ok(res) = &degree {
        if m.flats().len() <= ORACLE_FLAT_LIMIT {
            let mut cap = largest_affordable_cap(m.flats().len(), ORACLE_BUDGET);
            if let Degree::Finite(d) = res.degree {
                cap = cap.max(d + 1);
            }
            match brute_force_flatness_degree(m, cap, ORACLE_BUDGET) {
                Ok(o) => f.push(
                    "oracle_flatness_degree",
                    res.degree,
                    o.degree,
                    degrees_agree(o.degree, res.degree),
                ),
                Err(err) => f.error("oracle_flatness_degree", res.degree, err),
            }
        } else if let (false, Degree::Finite(d), Some(w)) = (sym.is_trivial(), res.degree, &res.witness) {
            // every collection of at most d flats up to symmetry, then the witness itself
            match brute_force_flatness_degree_over(m, &reps, d, SYMMETRIC_ORACLE_BUDGET) {
                Ok(o) => {
                    let exact = o.degree == Degree::AtLeast(d) && literal_delta(m, &w.members) > 0;
                    let got = if exact { Degree::Finite(d) } else { o.degree };
                    f.push("oracle_flatness_degree", res.degree, got, exact);
                }
                Err(err) => f.error("oracle_flatness_degree", res.degree, err),
            }
        }
    }

    let pm = pseudomod::is_pseudomodular(m);
    if let Some(want) = e.pseudomodular {
        f.push("pseudomodular", want, pm.pseudomodular, want == pm.pseudomodular);
    }
    if let Some(w) = &pm.witness {
        f.push("pseudomodular_witness_valid", true, w.verify(m), w.verify(m));
    }
    if let Some(want) = &e.witness {
        let want_s = witness_string(
            m,
            &PseudomodularityWitness {
                a: want.a,
                b: want.b,
                b1: want.b1,
                b2: want.b2,
                ranks: want.ranks,
            },
        );
        match &pm.witness {
            Some(w) => {
                let ok = (w.a, w.b, w.b1, w.b2, w.ranks) == (want.a, want.b, want.b1, want.b2, want.ranks);
                f.push("pseudomodular_witness", want_s, witness_string(m, w), ok);
            }
            None => f.push("pseudomodular_witness", want_s, "none", false),
        }
    }
    match pseudomod::triple_form_check_over(m, &reps, pseudomod::TRIPLE_BUDGET) {
        Ok(t) => f.push(
            "triple_form_agrees",
            pm.pseudomodular,
            t.is_none(),
            t.is_none() == pm.pseudomodular,
        ),
        Err(err) => f.error("triple_form_agrees", pm.pseudomodular, err),
    }
    match brute_force_pseudomodularity_over(m, &reps, PSEUDO_ORACLE_BUDGET) {
        Ok(o) => {
            // with a symmetry group the oracle may find an image of the same failure
            let same_pair = !sym.is_trivial()
                || o.witness.map(|w| (w.a, w.b)) == pm.witness.map(|w| (w.a, w.b));
            f.push(
                "oracle_pseudomodular",
                pm.pseudomodular,
                o.pseudomodular,
                o.pseudomodular == pm.pseudomodular && same_pair,
            );
        }
        Err(err) => f.error("oracle_pseudomodular", pm.pseudomodular, err),
    }
    if let Some(w) = &pm.witness {
        let triple = pseudomod::reduce_to_rank_one(m, w.a, w.b)
            .map(|v| pseudomod::three_flat_violation(m, &v))
            .and_then(|c| flatness::delta(&c));
        match triple {
            Ok(d) => f.push("rank_one_triple_delta", "> 0", d, d > 0),
            Err(err) => f.error("rank_one_triple_delta", "> 0", err),
        }
    }

    let md = pseudomod::is_modular(m);
    if let Some(want) = e.modular {
        f.push("modular", want, md.modular, want == md.modular);
    }
    if md.modular {
        match flatness::is_n_flat(m, 3) {
            Ok(r) => f.push("modular_is_3_flat", true, r.holds, r.holds),
            Err(err) => f.error("modular_is_3_flat", true, err),
        }
    }
    if let Ok(res) = &degree {
        let three_flat = !matches!(res.degree, Degree::Finite(d) if d < 3);
        if three_flat {
            f.push("3_flat_is_pseudomodular", true, pm.pseudomodular, pm.pseudomodular);
        }
    }

    EntryReport {
        name: entry.name.clone(),
        elements: m.size(),
        rank: m.full_rank(),
        flats: m.flats().len(),
        fields: f.out,
    }
}

/// Fixed entries followed by [`RANDOM_BATCH`] seeded strict gammoids (expected
/// totally flat and pseudomodular) and as many seeded transversal matroids.
pub fn corpus_entries(seed: u64) -> Vec<CorpusEntry> {
    let mut entries = corpus::fixed_entries();
    for (i, (_, m)) in random::strict_gammoids(seed, RANDOM_BATCH).into_iter().enumerate() {
        entries.push(CorpusEntry {
            name: format!("strict_gammoid[{seed}:{i}]"),
            matroid: m,
            expected: Expected {
                flatness_degree: Some(Degree::Omega),
                pseudomodular: Some(true),
                ..Default::default()
            },
            symmetry: Vec::new(),
        });
    }
    for (i, (_, m)) in random::transversals(seed, RANDOM_BATCH).into_iter().enumerate() {
        entries.push(CorpusEntry {
            name: format!("transversal[{seed}:{i}]"),
            matroid: m,
            expected: Expected::default(),
            symmetry: Vec::new(),
        });
    }
    entries
}

pub fn run_corpus(seed: u64) -> CorpusReport {
    run_entries(seed, &corpus_entries(seed))
}

pub fn run_entries(seed: u64, entries: &[CorpusEntry]) -> CorpusReport {
    let entries: Vec<EntryReport> = entries.iter().map(check_entry).collect();
    let count = |s: Status| {
        entries
            .iter()
            .flat_map(|e| &e.fields)
            .filter(|c| c.status == s)
            .count()
    };
    CorpusReport {
        seed,
        passed: count(Status::Pass),
        failed: count(Status::Fail),
        skipped: count(Status::Skipped),
        entries,
    }
}
