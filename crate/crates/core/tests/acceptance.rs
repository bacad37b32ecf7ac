//! Acceptance gate. Prints one PASS/FAIL line per criterion.
//!
//! Run with `cargo test --release --test acceptance -- --nocapture`.
//!
//! Criteria listed in `KNOWN_RED` are expected to fail (see README); the test
//! fails if any other criterion fails or if a known-red one starts passing.

use std::time::{Duration, Instant};

use matroid_flat::constructions::{
    family_mn, family_mn_circuit, from_circuits, from_flat_list, from_rank_table, gammoid,
    graphic, strict_gammoid, transversal, uniform, DigraphPresentation, Graph, SetSystem,
};
use matroid_flat::flatness::{
    self, binomial_identity_check, cyclify, flatness_degree, is_saturated, is_totally_flat,
    reduce_nested, saturate, Degree, FlatCollection,
};
use matroid_flat::pseudomod::{is_pseudomodular, reduce_to_rank_one, three_flat_violation};
use matroid_flat::verify::{self, corpus, random, Status};
use matroid_flat::{Axiom, AxiomCheck, GroundSet, Matroid, Subset};

/// `φ(M_5) = 5` and `φ(M_6) = 6` are asserted but the definitions give 4 and 5.
const KNOWN_RED: &[u8] = &[2];

const SEED: u64 = 20_240_601;
const RANDOM_MATROIDS: usize = 200;
const RANDOM_COLLECTIONS: usize = 500;
const MAX_COLLECTION: usize = 5;

const DELTA_TIME: Duration = Duration::from_secs(1);
const MN6_FLATS_TIME: Duration = Duration::from_secs(120);
const MN_DELTA_TIME: Duration = Duration::from_secs(1);
const PROPERTY_TIME: Duration = Duration::from_secs(300);
const REDUCTION_TIME: Duration = Duration::from_secs(60);
const IDENTITY_TIME: Duration = Duration::from_secs(1);
const STRUCTURE_TIME: Duration = Duration::from_secs(60);

type Criterion = (u8, &'static str, fn() -> Outcome);

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn timed(limit: Duration, f: impl FnOnce() -> Outcome) -> Outcome {
    let t = Instant::now();
    let mut o = f();
    let took = t.elapsed();
    if took > limit {
        o.pass = false;
    }
    o.detail = format!("{} [{:.2?} / limit {:.0?}]", o.detail, took, limit);
    o
}

fn delta(m: &Matroid, members: Vec<Subset>) -> i64 {
    flatness::delta(&FlatCollection::new(m, members).unwrap()).unwrap()
}

fn criterion_1() -> Outcome {
    let mut notes = Vec::new();
    let mut pass = true;
    let t = Instant::now();
    let y = corpus::matroid_y();
    let dy = corpus::matroid_y_triple(&y).delta().unwrap();
    pass &= dy == 1 && t.elapsed() < DELTA_TIME;
    notes.push(format!("matroidY triple Δ={dy} ({:.2?})", t.elapsed()));
    let t = Instant::now();
    let tw = corpus::twelve();
    let dt = corpus::twelve_triple(&tw).delta().unwrap();
    pass &= dt == 1 && t.elapsed() < DELTA_TIME;
    notes.push(format!("twelve F1,F2,F3 Δ={dt} ({:.2?})", t.elapsed()));
    outcome(pass, notes.join("; "))
}

fn criterion_2() -> Outcome {
    let mut notes = Vec::new();
    let mut pass = true;
    let mut check = |name: &str, m: &Matroid, want: Degree| {
        let got = flatness_degree(m).unwrap().degree;
        pass &= got == want;
        notes.push(format!("{name}: want {want} got {got}"));
    };
    check("matroidY", &corpus::matroid_y(), Degree::Finite(2));
    let tw = corpus::twelve();
    check("twelve", &tw, Degree::Finite(2));
    check("K4", &corpus::k4(), Degree::Finite(3));
    check("M5", &family_mn(5).unwrap(), Degree::Finite(5));
    let t = Instant::now();
    let m6 = family_mn(6).unwrap();
    let count = m6.flats().len();
    let enum_time = t.elapsed();
    check("M6", &m6, Degree::Finite(6));
    let tw_pm = is_pseudomodular(&tw).pseudomodular;
    pass &= tw_pm && enum_time <= MN6_FLATS_TIME;
    notes.push(format!("twelve pseudomodular={tw_pm}"));
    notes.push(format!("M6 {count} flats in {enum_time:.2?}"));
    outcome(pass, notes.join("; "))
}

fn criterion_3() -> Outcome {
    timed(MN_DELTA_TIME, || {
        let n = 5;
        let m = family_mn(n).unwrap();
        let circuits: Vec<Subset> = (1..=n).map(|i| family_mn_circuit(n, i)).collect();
        let mut checked = 0;
        let mut bad = Vec::new();
        for mask in 0u32..1 << n {
            let members: Vec<Subset> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| circuits[i]).collect();
            let k = members.len() as i64;
            if k < 3 {
                continue;
            }
            checked += 1;
            let d = delta(&m, members);
            if d != k - n as i64 + 1 {
                bad.push(format!("mask {mask:b}: Δ={d}"));
            }
        }
        outcome(bad.is_empty(), format!("{checked} subsets with m >= 3, mismatches {bad:?}"))
    })
}

fn criterion_4() -> Outcome {
    let y = corpus::matroid_y();
    let g = y.ground();
    let s = |xs: &[&str]| g.subset(xs).unwrap();
    let rep = is_pseudomodular(&y);
    let w = rep.witness.expect("matroidY is not pseudomodular");
    let want = (s(&["1", "2"]), s(&["3", "4"]), s(&["5", "6"]), [1, 1, 1, 2]);
    let y_ok = !rep.pseudomodular && (w.a, w.b1, w.b2, w.ranks) == want && w.verify(&y);
    let tw = is_pseudomodular(&corpus::twelve()).pseudomodular;
    outcome(
        y_ok && tw,
        format!(
            "matroidY: A={} B1={} B2={} ranks={:?}; twelve pseudomodular={tw}",
            g.format(w.a),
            g.format(w.b1),
            g.format(w.b2),
            w.ranks
        ),
    )
}

fn criterion_5() -> Outcome {
    timed(PROPERTY_TIME, || {
        let mut flat = 0;
        let mut pm = 0;
        for (_, m) in random::strict_gammoids(SEED, RANDOM_MATROIDS) {
            flat += is_totally_flat(&m).unwrap() as usize;
            pm += is_pseudomodular(&m).pseudomodular as usize;
        }
        let (mut three_flat, mut three_flat_pm, mut non_pm, mut triples_positive) = (0, 0, 0, 0);
        for (_, m) in random::transversals(SEED, RANDOM_MATROIDS) {
            let rep = is_pseudomodular(&m);
            let degree = flatness_degree(&m).unwrap().degree;
            if !matches!(degree, Degree::Finite(d) if d < 3) {
                three_flat += 1;
                three_flat_pm += rep.pseudomodular as usize;
            }
            if let Some(w) = rep.witness {
                non_pm += 1;
                let v = reduce_to_rank_one(&m, w.a, w.b).unwrap();
                if three_flat_violation(&m, &v).delta().unwrap() > 0 {
                    triples_positive += 1;
                }
            }
        }
        let n = RANDOM_MATROIDS;
        outcome(
            flat == n && pm == n && three_flat == three_flat_pm && non_pm == triples_positive,
            format!(
                "strict gammoids: {flat}/{n} totally flat, {pm}/{n} pseudomodular; \
                 transversal: {three_flat_pm}/{three_flat} 3-flat pseudomodular, \
                 {triples_positive}/{non_pm} non-pseudomodular give Δ>0 triples"
            ),
        )
    })
}

fn criterion_6() -> Outcome {
    timed(REDUCTION_TIME, || {
        let mut pool: Vec<Matroid> = corpus::fixed_entries()
            .into_iter()
            .filter(|e| e.name != "mn6")
            .map(|e| e.matroid)
            .collect();
        pool.extend(random::strict_gammoids(SEED, 10).into_iter().map(|x| x.1));
        pool.extend(random::transversals(SEED, 10).into_iter().map(|x| x.1));
        let mut rng = random::rng(SEED);
        let mut failures = Vec::new();
        let mut saturated = 0;
        for i in 0..RANDOM_COLLECTIONS {
            let m = &pool[i % pool.len()];
            let c = random::flat_collection(&mut rng, m, MAX_COLLECTION);
            let d = c.delta().unwrap();
            let nested = reduce_nested(&c);
            if nested.delta().unwrap() != d {
                failures.push(format!("#{i} reduce_nested changed Δ"));
            }
            let cy = cyclify(&c).unwrap();
            let cy_ok = cy.len() == c.len()
                && cy.delta().unwrap() >= d
                && cy.members().iter().all(|&f| m.is_flat(f).unwrap() && m.is_cyclic(f).unwrap());
            if !cy_ok {
                failures.push(format!("#{i} cyclify"));
            }
            if c.len() >= 2 {
                saturated += 1;
                let sat = saturate(&c).unwrap();
                let sat_ok = sat.len() == c.len()
                    && sat.delta().unwrap() >= d
                    && is_saturated(&sat)
                    && sat.members().iter().all(|&f| m.is_flat(f).unwrap());
                if !sat_ok {
                    failures.push(format!("#{i} saturate"));
                }
            }
        }
        outcome(
            failures.is_empty(),
            format!(
                "{RANDOM_COLLECTIONS} collections over {} matroids ({saturated} saturated), failures {failures:?}",
                pool.len()
            ),
        )
    })
}

fn criterion_7() -> Outcome {
    let report = verify::run_corpus(SEED);
    let mut notes = Vec::new();
    let mut pass = true;
    let mut compared = 0;
    for e in &report.entries {
        let field = |name: &str| e.fields.iter().find(|f| f.field == name);
        let mut required = vec!["triple_form_agrees", "oracle_pseudomodular"];
        if e.flats <= verify::ORACLE_FLAT_LIMIT || e.name == "mn5" {
            required.push("oracle_flatness_degree");
        }
        for name in required {
            match field(name) {
                Some(f) if f.status == Status::Pass => compared += 1,
                Some(f) => {
                    pass = false;
                    notes.push(format!("{} {name}: {:?} ({})", e.name, f.status, f.actual));
                }
                None => {
                    pass = false;
                    notes.push(format!("{} {name}: not run", e.name));
                }
            }
        }
    }
    outcome(
        pass,
        format!("{} matroids, {compared} comparisons agree; {notes:?}", report.entries.len()),
    )
}

fn criterion_8() -> Outcome {
    timed(IDENTITY_TIME, || {
        let mut count = 0;
        let mut zero_cases = 0;
        let mut bad = Vec::new();
        for n in 2..=12i64 {
            for l in 1..n {
                for m in 1..n {
                    let c = binomial_identity_check(n, l, m).unwrap();
                    count += 1;
                    if m > l {
                        zero_cases += 1;
                        if c.lhs != 0 {
                            bad.push((n, l, m));
                        }
                    }
                    if !c.holds {
                        bad.push((n, l, m));
                    }
                }
            }
        }
        outcome(bad.is_empty(), format!("{count} triples ({zero_cases} with m > l), failures {bad:?}"))
    })
}

fn constructions() -> Vec<(String, Matroid)> {
    let g4 = GroundSet::numbered(4).unwrap();
    let u24 = uniform(2, 4).unwrap();
    let table: Vec<i64> = u24.rank_table().unwrap().iter().map(|&r| r as i64).collect();
    let sub = |g: &GroundSet, xs: &[&str]| g.subset(xs).unwrap();
    let digraph = DigraphPresentation::new(
        ["a", "b", "c", "d", "e"],
        vec![(0, 2), (1, 2), (2, 3), (2, 4), (1, 4)],
        Subset::from_indices([0, 1, 2]),
        Subset::from_indices([3, 4]),
    )
    .unwrap();
    let strict = DigraphPresentation::strict(["a", "b", "c", "d"], vec![(0, 1), (1, 2), (3, 2)], Subset::from_indices([2])).unwrap();
    let mut out = vec![
        ("uniform".to_string(), u24),
        ("rank_table".to_string(), from_rank_table(g4.clone(), &table).unwrap()),
        (
            "circuits".to_string(),
            from_circuits(g4.clone(), &[sub(&g4, &["1", "2", "3"]), sub(&g4, &["4"])]).unwrap(),
        ),
        (
            "flat_list".to_string(),
            from_flat_list(
                g4.clone(),
                &[
                    Subset::EMPTY,
                    sub(&g4, &["1"]),
                    sub(&g4, &["2"]),
                    sub(&g4, &["3", "4"]),
                    sub(&g4, &["1", "2"]),
                    sub(&g4, &["1", "3", "4"]),
                    sub(&g4, &["2", "3", "4"]),
                    g4.full(),
                ],
            )
            .unwrap(),
        ),
        ("graphic".to_string(), graphic(&Graph::complete(4).unwrap())),
        (
            "transversal".to_string(),
            transversal(&SetSystem::new(g4.clone(), vec![sub(&g4, &["1", "2"]), sub(&g4, &["2", "3", "4"])]).unwrap()),
        ),
        ("gammoid".to_string(), gammoid(&digraph).unwrap()),
        ("strict_gammoid".to_string(), strict_gammoid(&strict).unwrap()),
        ("family_mn".to_string(), family_mn(5).unwrap()),
    ];
    for e in corpus::fixed_entries() {
        if e.matroid.size() <= 12 {
            out.push((e.name, e.matroid));
        }
    }
    out
}

/// The subset of `to`'s ground set with the same labels as `s` in `from`.
fn relabel(from: &Matroid, to: &Matroid, s: Subset) -> Subset {
    to.ground().subset(from.ground().labels_of(s)).unwrap()
}

fn structural_failures(name: &str, m: &Matroid) -> Vec<String> {
    let mut bad = Vec::new();
    let d = m.dual();
    if !d.dual().same_ranks(m) {
        bad.push(format!("{name}: dual involution"));
    }
    let full = m.full();
    for x in full.subsets() {
        let rest = full.difference(x);
        if m.is_cyclic(x).unwrap() != d.is_flat(rest).unwrap() || m.is_flat(x).unwrap() != d.is_cyclic(rest).unwrap() {
            bad.push(format!("{name}: cyclic/flat complement at {}", m.ground().format(x)));
            break;
        }
    }
    for a in full.subsets() {
        let del_a = m.restrict(a).unwrap();
        // (M∖A)* = M*/A
        if !del_a.dual().same_ranks(&d.contract(a).unwrap()) {
            bad.push(format!("{name}: (M∖A)* ≠ M*/A at A={}", m.ground().format(a)));
        }
        let con_a = m.contract(a).unwrap();
        for b in full.difference(a).subsets() {
            let left = del_a.contract(relabel(m, &del_a, b)).unwrap();
            let c_b = m.contract(b).unwrap();
            let right = c_b.restrict(relabel(m, &c_b, a)).unwrap();
            if !left.same_ranks(&right) {
                bad.push(format!(
                    "{name}: (M∖A)/B ≠ (M/B)∖A at A={} B={}",
                    m.ground().format(a),
                    m.ground().format(b)
                ));
            }
            let both = con_a.contract(relabel(m, &con_a, b)).unwrap();
            if !both.same_ranks(&m.contract(a.union(b)).unwrap()) {
                bad.push(format!("{name}: (M/A)/B ≠ M/(A∪B)"));
            }
        }
        if bad.len() > 5 {
            break;
        }
    }
    bad
}

fn violation_is_real(table: &[i64], check: &AxiomCheck) -> bool {
    let AxiomCheck::Violation(v) = check else { return false };
    let r = |s: Subset| table[s.bits() as usize];
    let ranks_match = r(v.a) == v.rank_a && r(v.b) == v.rank_b;
    ranks_match
        && match v.axiom {
            Axiom::R1 => v.rank_a < 0 || v.rank_a > v.a.len() as i64,
            Axiom::R2 => v.a.is_subset_of(v.b) && v.rank_a > v.rank_b,
            Axiom::R3 => v.rank_a + v.rank_b < r(v.a.union(v.b)) + r(v.a.intersection(v.b)),
        }
}

fn criterion_9() -> Outcome {
    timed(STRUCTURE_TIME, || {
        let mut bad = Vec::new();
        let built = constructions();
        for (name, m) in &built {
            if !m.check_axioms().unwrap().passed() {
                bad.push(format!("{name}: axioms"));
            }
        }

        let u = uniform(2, 4).unwrap();
        let table: Vec<i64> = u.rank_table().unwrap().iter().map(|&r| r as i64).collect();
        let mut rejected = 0;
        for i in 0..table.len() {
            if table[i] == 3 {
                continue;
            }
            let mut corrupt = table.clone();
            corrupt[i] = 3;
            let check = matroid_flat::axioms::check(4, 24, |s| corrupt[s.bits() as usize]).unwrap();
            if violation_is_real(&corrupt, &check) && from_rank_table(u.ground().clone(), &corrupt).is_err() {
                rejected += 1;
            } else {
                bad.push(format!("corruption at mask {i:04b} not rejected"));
            }
        }

        let mut small: Vec<(String, Matroid)> = built.into_iter().filter(|(_, m)| m.size() <= 8).collect();
        small.extend(
            random::transversals(SEED, 20)
                .into_iter()
                .enumerate()
                .map(|(i, (_, m))| (format!("transversal#{i}"), m)),
        );
        small.extend(
            random::strict_gammoids(SEED, 40)
                .into_iter()
                .filter(|(_, m)| m.size() <= 8)
                .enumerate()
                .map(|(i, (_, m))| (format!("strict_gammoid#{i}"), m)),
        );
        for (name, m) in &small {
            bad.extend(structural_failures(name, m));
        }
        outcome(
            bad.is_empty(),
            format!(
                "axioms on every construction; {rejected} corrupted tables rejected; \
                 minor and dual identities on {} matroids; failures {bad:?}",
                small.len()
            ),
        )
    })
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 9] = [
        (1, "Δ regression", || timed(Duration::from_secs(2), criterion_1)),
        (2, "flatness degrees", criterion_2),
        (3, "M_n Δ formula", criterion_3),
        (4, "pseudomodularity witnesses", criterion_4),
        (5, "property suites", criterion_5),
        (6, "reduction procedures", criterion_6),
        (7, "oracle equivalence", criterion_7),
        (8, "binomial identity", criterion_8),
        (9, "structural invariants", criterion_9),
    ];
    let mut unexpected = Vec::new();
    for (id, title, run) in criteria {
        let o = run();
        println!("criterion {id} {}: {title}: {}", if o.pass { "PASS" } else { "FAIL" }, o.detail);
        let known = KNOWN_RED.contains(&id);
        if o.pass == known {
            unexpected.push(id);
        }
    }
    assert!(
        unexpected.is_empty(),
        "criteria with an unexpected outcome: {unexpected:?} (known red: {KNOWN_RED:?})"
    );
}
