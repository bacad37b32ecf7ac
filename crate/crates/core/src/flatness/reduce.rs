//! Transformations of flat collections that never decrease `Δ`.

use super::FlatCollection;
use crate::error::{Error, Result};
use crate::subset::Subset;

/// Drops members contained in another member (including duplicates) until
/// the collection is an antichain. `Δ` is unchanged.
pub fn reduce_nested(c: &FlatCollection) -> FlatCollection {
    let mut members = c.members().to_vec();
    while let Some(i) = (0..members.len()).find(|&i| {
        (0..members.len()).any(|j| j != i && members[i].is_subset_of(members[j]))
    }) {
        members.remove(i);
    }
    FlatCollection::from_parts(c.matroid(), members)
}

/// Strips coloops until every member is a cyclic flat.
///
/// While some member `F_i` has a coloop `e` of its restriction: if `e` is also a
/// coloop of the union, `e` is removed from every member containing it;
/// otherwise it is removed from `F_i` alone. Cardinality is preserved and `Δ`
/// does not decrease.
pub fn cyclify(c: &FlatCollection) -> Result<FlatCollection> {
    let m = c.matroid();
    let mut members = c.members().to_vec();
    loop {
        let hit = members.iter().enumerate().find_map(|(i, &f)| {
            let r = m.r(f);
            f.iter().find(|&e| m.r(f.without(e)) < r).map(|e| (i, e))
        });
        let Some((i, e)) = hit else { break };
        let union = members.iter().fold(Subset::EMPTY, |u, &f| u.union(f));
        let global = m.r(union.without(e)) < m.r(union);
        for (j, f) in members.iter_mut().enumerate() {
            if (global && f.contains(e)) || j == i {
                let g = f.without(e);
                if !m.flat(g) {
                    return Err(Error::Internal(format!(
                        "removing coloop {} from {} did not leave a flat",
                        m.ground().label(e),
                        m.ground().format(*f)
                    )));
                }
                *f = g;
            }
        }
    }
    Ok(FlatCollection::from_parts(m, members))
}

/// Grows members until each lies in the closure of the union of the others.
///
/// While some `F_i` has an element `x` outside `cl(∪_{j≠i} F_j)`, the first
/// other member `F_j` is replaced by `cl(F_j ∪ {x})`. Cardinality is preserved
/// and `Δ` does not decrease.
pub fn saturate(c: &FlatCollection) -> Result<FlatCollection> {
    if c.len() < 2 {
        return Err(Error::InvalidArgument(
            "saturation needs at least two members".into(),
        ));
    }
    let m = c.matroid();
    let mut members = c.members().to_vec();
    loop {
        let hit = (0..members.len()).find_map(|i| {
            let rest = members
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .fold(Subset::EMPTY, |u, (_, &f)| u.union(f));
            let span = m.cl(rest);
            // loops lie in every flat, so anything outside `span` is not a loop
            members[i].difference(span).first().map(|x| (i, x))
        });
        let Some((i, x)) = hit else { break };
        let j = if i == 0 { 1 } else { 0 };
        members[j] = m.cl(members[j].with(x));
    }
    Ok(FlatCollection::from_parts(m, members))
}

/// True when every member lies in the closure of the union of the others.
pub fn is_saturated(c: &FlatCollection) -> bool {
    let m = c.matroid();
    let members = c.members();
    (0..members.len()).all(|i| {
        let rest = members
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .fold(Subset::EMPTY, |u, (_, &f)| u.union(f));
        members[i].is_subset_of(m.cl(rest))
    })
}
