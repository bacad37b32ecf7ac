use proptest::prelude::*;

use matroid_flat::constructions::{strict_gammoid, transversal, DigraphPresentation, SetSystem};
use matroid_flat::document::MatroidDocument;
use matroid_flat::flatness::{self, FlatCollection};
use matroid_flat::pseudomod::{contraction_rank, pseudointersection, Pseudointersection};
use matroid_flat::verify::literal_delta;
use matroid_flat::{GroundSet, Matroid, Subset};

fn transversal_matroid() -> impl Strategy<Value = Matroid> {
    (1usize..=7).prop_flat_map(|n| {
        prop::collection::vec(0u64..1 << n, 0..=n).prop_map(move |masks| {
            let sets = masks.into_iter().map(Subset::from_bits).collect();
            transversal(&SetSystem::new(GroundSet::numbered(n).unwrap(), sets).unwrap())
        })
    })
}

fn gammoid_matroid() -> impl Strategy<Value = Matroid> {
    (2usize..=7).prop_flat_map(|n| {
        (
            prop::collection::vec((0..n, 0..n), 0..=2 * n),
            1u64..1 << n,
        )
            .prop_map(move |(edges, terminals)| {
                let edges = edges.into_iter().filter(|(a, b)| a != b).collect();
                let labels = GroundSet::numbered(n).unwrap().labels().to_vec();
                let d = DigraphPresentation::strict(labels, edges, Subset::from_bits(terminals)).unwrap();
                strict_gammoid(&d).unwrap()
            })
    })
}

fn matroid() -> impl Strategy<Value = Matroid> {
    prop_oneof![transversal_matroid(), gammoid_matroid()]
}

fn relabel(from: &Matroid, to: &Matroid, s: Subset) -> Subset {
    to.ground().subset(from.ground().labels_of(s)).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn closure_is_a_closure_operator(m in matroid(), a in any::<u64>(), b in any::<u64>()) {
        let full = m.full();
        let a = Subset::from_bits(a).intersection(full);
        let b = Subset::from_bits(b).intersection(full).union(a);
        let ca = m.closure(a).unwrap();
        prop_assert!(a.is_subset_of(ca));
        prop_assert!(ca.is_subset_of(m.closure(b).unwrap()));
        prop_assert_eq!(m.closure(ca).unwrap(), ca);
        prop_assert_eq!(m.rank(ca).unwrap(), m.rank(a).unwrap());
        prop_assert!(m.is_flat(ca).unwrap());
    }

    #[test]
    fn dual_and_minors(m in matroid(), a in any::<u64>(), b in any::<u64>()) {
        let full = m.full();
        let a = Subset::from_bits(a).intersection(full);
        let b = Subset::from_bits(b).intersection(full).difference(a);
        prop_assert!(m.dual().dual().same_ranks(&m));
        prop_assert_eq!(m.dual().full_rank(), m.size() - m.full_rank());

        let del = m.restrict(a).unwrap();
        prop_assert!(del.dual().same_ranks(&m.dual().contract(a).unwrap()));

        let left = del.contract(relabel(&m, &del, b)).unwrap();
        let con = m.contract(b).unwrap();
        let right = con.restrict(relabel(&m, &con, a)).unwrap();
        prop_assert!(left.same_ranks(&right));
    }

    #[test]
    fn cyclic_flats_complement_to_cyclic_flats_of_dual(m in matroid()) {
        let d = m.dual();
        let n = m.size();
        let mut from_dual: Vec<Subset> = d.cyclic_flats().iter().map(|f| f.complement(n)).collect();
        from_dual.sort();
        let mut own = m.cyclic_flats().to_vec();
        own.sort();
        prop_assert_eq!(own, from_dual);
    }

    #[test]
    fn delta_matches_literal_sum(m in matroid(), picks in prop::collection::vec(any::<prop::sample::Index>(), 1..=5)) {
        let flats = m.flats();
        let members: Vec<Subset> = picks.iter().map(|i| *i.get(flats)).collect();
        let c = FlatCollection::new(&m, members.clone()).unwrap();
        prop_assert_eq!(flatness::delta(&c).unwrap(), literal_delta(&m, &members));
        if members.len() <= 2 {
            prop_assert!(literal_delta(&m, &members) <= 0);
        }
    }

    #[test]
    fn pseudointersection_characterizes_the_family(m in transversal_matroid(), ai in any::<prop::sample::Index>(), bi in any::<prop::sample::Index>()) {
        let a = *ai.get(m.flats());
        let b = *bi.get(m.flats());
        let target = contraction_rank(&m, a, b).unwrap();
        match pseudointersection(&m, a, b).unwrap() {
            Pseudointersection::Exists(b0) => {
                for &f in m.flats().iter().filter(|f| f.is_subset_of(b)) {
                    let in_family = contraction_rank(&m, a, f).unwrap() == target;
                    prop_assert_eq!(in_family, b0.is_subset_of(f));
                }
            }
            Pseudointersection::Violation { b1, b2 } => {
                prop_assert_eq!(contraction_rank(&m, a, b1).unwrap(), target);
                prop_assert_eq!(contraction_rank(&m, a, b2).unwrap(), target);
                prop_assert!(contraction_rank(&m, a, b1.intersection(b2)).unwrap() > target);
            }
        }
    }

    #[test]
    fn rank_table_document_round_trip(m in matroid()) {
        let doc = MatroidDocument::rank_table(&m).unwrap();
        let back = MatroidDocument::from_json(&doc.to_json()).unwrap();
        prop_assert_eq!(&back, &doc);
        prop_assert!(back.build(24).unwrap().same_ranks(&m));
    }
}
