//! Contraction ranks, pseudointersections, pseudomodularity and modularity.
//!
//! For flats `A`, `B` the pseudointersection is the flat `B_0 ⊆ B` such that a
//! flat `B_1 ⊆ B` satisfies `r(A/B_1) = r(A/B)` exactly when `B_0 ⊆ B_1`. Since
//! `B_1 ↦ r(A/B_1)` is antitone, the family `T` of flats `B_1 ⊆ B` with
//! `r(A/B_1) = r(A/B)` is an up-set below `B`, and `B_0` exists iff `T` is closed
//! under intersection, i.e. iff `∩T ∈ T`.

use crate::error::{Error, Result};
use crate::flatness::FlatCollection;
use crate::matroid::Matroid;
use crate::subset::Subset;

/// `r(A/B) = r(A ∪ B) - r(B)`.
pub fn contraction_rank(m: &Matroid, a: Subset, b: Subset) -> Result<usize> {
    Ok(m.rank(a.union(b))? - m.rank(b)?)
}

fn cr(m: &Matroid, a: Subset, b: Subset) -> usize {
    m.r(a.union(b)) - m.r(b)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pseudointersection {
    Exists(Subset),
    /// Flats `B_1, B_2 ⊆ B` with `r(A/B_1) = r(A/B_2) = r(A/B) < r(A/B_1 ∩ B_2)`.
    Violation { b1: Subset, b2: Subset },
}

impl Pseudointersection {
    pub fn exists(&self) -> bool {
        matches!(self, Pseudointersection::Exists(_))
    }
}

/// Pseudointersection of `a` (any subset) and the flat `b`.
pub fn pseudointersection(m: &Matroid, a: Subset, b: Subset) -> Result<Pseudointersection> {
    m.ground().check(a)?;
    if !m.is_flat(b)? {
        return Err(Error::InvalidArgument(format!(
            "{} is not a flat",
            m.ground().format(b)
        )));
    }
    let below: Vec<Subset> = m
        .flats()
        .iter()
        .copied()
        .filter(|f| f.is_subset_of(b))
        .collect();
    Ok(pseudointersection_among(m, a, b, &below))
}

fn pseudointersection_among(m: &Matroid, a: Subset, b: Subset, below: &[Subset]) -> Pseudointersection {
    let target = cr(m, a, b);
    let family: Vec<Subset> = below
        .iter()
        .copied()
        .filter(|&f| cr(m, a, f) == target)
        .collect();
    let meet = family.iter().fold(b, |acc, &f| acc.intersection(f));
    if cr(m, a, meet) == target {
        return Pseudointersection::Exists(meet);
    }
    for (i, &b1) in family.iter().enumerate() {
        for &b2 in &family[i + 1..] {
            if cr(m, a, b1.intersection(b2)) != target {
                return Pseudointersection::Violation { b1, b2 };
            }
        }
    }
    unreachable!("a family not closed under intersection has a non-closed pair")
}

/// A failure of pseudomodularity with the four contraction ranks that show it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PseudomodularityWitness {
    pub a: Subset,
    pub b: Subset,
    pub b1: Subset,
    pub b2: Subset,
    /// `r(A/B)`, `r(A/B_1)`, `r(A/B_2)`, `r(A/B_1 ∩ B_2)`.
    pub ranks: [usize; 4],
}

impl PseudomodularityWitness {
    pub fn new(m: &Matroid, a: Subset, b: Subset, b1: Subset, b2: Subset) -> Self {
        PseudomodularityWitness {
            a,
            b,
            b1,
            b2,
            ranks: [
                cr(m, a, b),
                cr(m, a, b1),
                cr(m, a, b2),
                cr(m, a, b1.intersection(b2)),
            ],
        }
    }

    /// Re-checks the defining inequality with fresh rank queries.
    pub fn verify(&self, m: &Matroid) -> bool {
        let fresh = PseudomodularityWitness::new(m, self.a, self.b, self.b1, self.b2);
        let [rb, r1, r2, rm] = fresh.ranks;
        fresh.ranks == self.ranks
            && rb == r1
            && rb == r2
            && rm > rb
            && [self.b, self.b1, self.b2].iter().all(|&f| m.flat(f))
            && self.b1.is_subset_of(self.b)
            && self.b2.is_subset_of(self.b)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PseudomodularityReport {
    pub pseudomodular: bool,
    pub witness: Option<PseudomodularityWitness>,
}

/// Checks `A ◂ B` for every ordered pair of flats, `A` outer and `B` inner in
/// ascending mask order, and reports the first failure.
///
/// Pairs with `r(A/B) ∈ {0, r(A)}` are skipped (`T` then contains every flat of
/// `B` that contains `A`, resp. every flat of `B`), as are independent `B`:
/// every subset of an independent flat is a flat, and `B_0` is the set of
/// elements of `B` that are not coloops of `A ∪ B`.
pub fn is_pseudomodular(m: &Matroid) -> PseudomodularityReport {
    let flats = m.flats();
    let mut below: Vec<Option<Vec<Subset>>> = vec![None; flats.len()];
    for &a in flats {
        let ra = m.r(a);
        if ra < 2 {
            continue;
        }
        for (bi, &b) in flats.iter().enumerate() {
            if m.r(b) == b.len() {
                continue;
            }
            let v = cr(m, a, b);
            if v == 0 || v == ra {
                continue;
            }
            let sub = below[bi].get_or_insert_with(|| {
                flats.iter().copied().filter(|f| f.is_subset_of(b)).collect()
            });
            if let Pseudointersection::Violation { b1, b2 } = pseudointersection_among(m, a, b, sub) {
                return PseudomodularityReport {
                    pseudomodular: false,
                    witness: Some(PseudomodularityWitness::new(m, a, b, b1, b2)),
                };
            }
        }
    }
    PseudomodularityReport {
        pseudomodular: true,
        witness: None,
    }
}

/// Default number of `(A, B, C)` triples [`triple_form_check`] may examine.
pub const TRIPLE_BUDGET: u64 = 20_000_000_000;

/// The restated condition: for flats `A, B, C`, if
/// `r(A/B) = r(A/C) = r(A/B∪C)` then `r(A/B∩C) = r(A/B)`. Returns the first
/// failing triple `(A, B, C)`, or `None` when the condition holds everywhere.
pub fn triple_form_check(m: &Matroid) -> Result<Option<(Subset, Subset, Subset)>> {
    triple_form_check_with(m, TRIPLE_BUDGET)
}

pub fn triple_form_check_with(m: &Matroid, budget: u64) -> Result<Option<(Subset, Subset, Subset)>> {
    triple_form_check_over(m, m.flats(), budget)
}

/// As [`triple_form_check_with`] with `A` restricted to `outer`.
pub fn triple_form_check_over(
    m: &Matroid,
    outer: &[Subset],
    budget: u64,
) -> Result<Option<(Subset, Subset, Subset)>> {
    let flats = m.flats();
    let mut examined: u64 = 0;
    for &a in outer {
        let ra = m.r(a);
        let ra_union: Vec<usize> = flats.iter().map(|&b| m.r(a.union(b))).collect();
        let mut groups: Vec<Vec<usize>> = vec![Vec::new(); ra + 1];
        for (i, &b) in flats.iter().enumerate() {
            groups[ra_union[i] - m.r(b)].push(i);
        }
        // v = 0: A ⊆ B ∩ C. v = r(A): r(A/B∩C) is squeezed between r(A/B) and r(A).
        for (v, group) in groups.iter().enumerate().take(ra).skip(1) {
            let g = group.len() as u64;
            examined += g * g.saturating_sub(1) / 2;
            if examined > budget {
                return Err(Error::GuardExceeded(format!(
                    "triple-form check exceeded its budget of {budget} triples"
                )));
            }
            for (x, &i) in group.iter().enumerate() {
                for &j in &group[x + 1..] {
                    let (b, c) = (flats[i], flats[j]);
                    let bc = b.union(c);
                    if m.r(a.union(bc)) - m.r(bc) != v {
                        continue;
                    }
                    if cr(m, a, b.intersection(c)) != v {
                        return Ok(Some((a, b, c)));
                    }
                }
            }
        }
    }
    Ok(None)
}

/// A violation `A ⋪ B` with `r(A/B) = 1`, together with its pair `B_1, B_2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RankOneViolation {
    pub a: Subset,
    pub b: Subset,
    pub b1: Subset,
    pub b2: Subset,
}

/// Lowers the contraction rank of a violation `A ⋪ B` to one.
///
/// With `k = r(A/B) > 1`, `x` the smallest element of `A∖B` and
/// `C = (cl(B_1+x) ∩ cl(B_2+x)) ∖ (B_1 ∩ B_2)`: if `r(C/B_1∩B_2) > 1` then
/// `(C, B)` is a rank-one violation; otherwise `A` against `cl(B+x)` is a
/// violation of rank `k-1`, witnessed by `cl(B_1+x)` and `cl(B_2+x)`.
pub fn reduce_to_rank_one(m: &Matroid, a: Subset, b: Subset) -> Result<RankOneViolation> {
    let (b1, b2) = match pseudointersection(m, a, b)? {
        Pseudointersection::Exists(_) => {
            return Err(Error::InvalidArgument(format!(
                "{} and {} have a pseudointersection",
                m.ground().format(a),
                m.ground().format(b)
            )))
        }
        Pseudointersection::Violation { b1, b2 } => (b1, b2),
    };
    let mut cur = RankOneViolation { a, b, b1, b2 };
    loop {
        check_violation(m, &cur)?;
        let k = cr(m, cur.a, cur.b);
        if k == 1 {
            return Ok(cur);
        }
        let x = cur
            .a
            .difference(cur.b)
            .first()
            .expect("r(A/B) > 0 forces A ⊄ B");
        let meet = cur.b1.intersection(cur.b2);
        let up1 = m.cl(cur.b1.with(x));
        let up2 = m.cl(cur.b2.with(x));
        let c = up1.intersection(up2).difference(meet);
        if cr(m, c, meet) > 1 {
            let out = RankOneViolation {
                a: c,
                b: cur.b,
                b1: cur.b1,
                b2: cur.b2,
            };
            check_violation(m, &out)?;
            if cr(m, out.a, out.b) != 1 {
                return Err(Error::Internal("reduced violation is not of rank one".into()));
            }
            return Ok(out);
        }
        cur = RankOneViolation {
            a: cur.a,
            b: m.cl(cur.b.with(x)),
            b1: up1,
            b2: up2,
        };
        if cr(m, cur.a, cur.b) != k - 1 {
            return Err(Error::Internal("contraction rank did not drop by one".into()));
        }
    }
}

fn check_violation(m: &Matroid, v: &RankOneViolation) -> Result<()> {
    let target = cr(m, v.a, v.b);
    let ok = v.b1.is_subset_of(v.b)
        && v.b2.is_subset_of(v.b)
        && [v.b, v.b1, v.b2].iter().all(|&f| m.flat(f))
        && cr(m, v.a, v.b1) == target
        && cr(m, v.a, v.b2) == target
        && cr(m, v.a, v.b1.intersection(v.b2)) > target;
    if ok {
        Ok(())
    } else {
        Err(Error::Internal(format!(
            "({}, {}) with ({}, {}) is not a pseudointersection violation",
            m.ground().format(v.a),
            m.ground().format(v.b),
            m.ground().format(v.b1),
            m.ground().format(v.b2)
        )))
    }
}

/// The three flats `cl(A∪B_1)`, `cl(A∪B_2)`, `B` built from a rank-one
/// violation; their `Δ` is positive, so the matroid is not 3-flat.
pub fn three_flat_violation(m: &Matroid, v: &RankOneViolation) -> FlatCollection {
    FlatCollection::from_parts(
        m,
        vec![m.cl(v.a.union(v.b1)), m.cl(v.a.union(v.b2)), v.b],
    )
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModularityReport {
    pub modular: bool,
    /// First pair of flats with `r(A) + r(B) > r(A∪B) + r(A∩B)`.
    pub witness: Option<(Subset, Subset)>,
}

/// Whether submodularity is tight on every pair of flats.
pub fn is_modular(m: &Matroid) -> ModularityReport {
    let flats = m.flats();
    for (i, &a) in flats.iter().enumerate() {
        for &b in &flats[i + 1..] {
            if m.r(a) + m.r(b) != m.r(a.union(b)) + m.r(a.intersection(b)) {
                return ModularityReport {
                    modular: false,
                    witness: Some((a, b)),
                };
            }
        }
    }
    ModularityReport {
        modular: true,
        witness: None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::uniform;
    use crate::flatness::delta;
    use crate::verify::corpus;

    fn s(m: &Matroid, labels: &[&str]) -> Subset {
        m.ground().subset(labels).unwrap()
    }

    #[test]
    fn contraction_rank_values() {
        let m = corpus::matroid_y();
        let a = s(&m, &["1", "2"]);
        assert_eq!(contraction_rank(&m, a, s(&m, &["3", "4", "5", "6"])).unwrap(), 1);
        assert_eq!(contraction_rank(&m, a, Subset::EMPTY).unwrap(), 2);
        for &f in m.flats() {
            assert_eq!(contraction_rank(&m, f, Subset::EMPTY).unwrap(), m.r(f));
        }
    }

    #[test]
    fn matroid_y_violation() {
        let m = corpus::matroid_y();
        let a = s(&m, &["1", "2"]);
        let b = s(&m, &["3", "4", "5", "6"]);
        assert_eq!(
            pseudointersection(&m, a, b).unwrap(),
            Pseudointersection::Violation {
                b1: s(&m, &["3", "4"]),
                b2: s(&m, &["5", "6"])
            }
        );
        let rep = is_pseudomodular(&m);
        assert!(!rep.pseudomodular);
        let w = rep.witness.unwrap();
        assert_eq!((w.a, w.b, w.b1, w.b2), (a, b, s(&m, &["3", "4"]), s(&m, &["5", "6"])));
        assert_eq!(w.ranks, [1, 1, 1, 2]);
        assert!(w.verify(&m));
        assert_eq!(
            triple_form_check(&m).unwrap().map(|(x, _, _)| x),
            Some(a)
        );
    }

    #[test]
    fn non_flat_b_rejected() {
        let m = corpus::matroid_y();
        assert!(pseudointersection(&m, Subset::EMPTY, s(&m, &["3", "4", "5"])).is_err());
    }

    #[test]
    fn independent_flat_always_has_pseudointersection() {
        let m = corpus::twelve();
        for &b in m.flats().iter().filter(|&&b| m.r(b) == b.len()).take(200) {
            for &a in m.flats().iter().step_by(37) {
                assert!(pseudointersection(&m, a, b).unwrap().exists());
            }
        }
    }

    #[test]
    fn flat_below_b_is_its_own_pseudointersection() {
        let m = corpus::matroid_y();
        for &b in m.flats() {
            for &a in m.flats().iter().filter(|a| a.is_subset_of(b)) {
                assert_eq!(
                    pseudointersection(&m, a, b).unwrap(),
                    Pseudointersection::Exists(a)
                );
            }
        }
    }

    #[test]
    fn uniform_is_pseudomodular_and_modular_free() {
        let u = uniform(2, 4).unwrap();
        assert!(is_pseudomodular(&u).pseudomodular);
        assert_eq!(triple_form_check(&u).unwrap(), None);
        assert!(is_modular(&u).modular);
        let free = uniform(4, 4).unwrap();
        assert!(is_modular(&free).modular);
    }

    #[test]
    fn matroid_y_not_modular() {
        let m = corpus::matroid_y();
        let rep = is_modular(&m);
        assert!(!rep.modular);
        let (a, b) = rep.witness.unwrap();
        assert!(m.r(a) + m.r(b) > m.r(a.union(b)) + m.r(a.intersection(b)));
    }

    #[test]
    fn rank_one_base_case_and_violating_triple() {
        let m = corpus::matroid_y();
        let a = s(&m, &["1", "2"]);
        let b = s(&m, &["3", "4", "5", "6"]);
        let v = reduce_to_rank_one(&m, a, b).unwrap();
        assert_eq!((v.a, v.b), (a, b));
        let c = three_flat_violation(&m, &v);
        assert!(delta(&c).unwrap() > 0);
        assert!(reduce_to_rank_one(&m, a, s(&m, &["1", "2", "3", "4"])).is_err());
    }
}
