//! Bipartite matching between elements and the members of a set system.

use crate::subset::Subset;

/// Maximum matching of the elements of `elements` into sets, where
/// `membership[e]` lists the indices of the sets containing element `e`.
///
/// Returns `assigned[set] = Some(element)` for the matched sets. Uses
/// augmenting paths (Kuhn's algorithm).
pub fn max_matching(
    elements: Subset,
    membership: &[Vec<usize>],
    num_sets: usize,
) -> Vec<Option<usize>> {
    let mut assigned = vec![None; num_sets];
    let mut visited = vec![false; num_sets];
    for e in elements {
        visited.fill(false);
        augment(e, membership, &mut assigned, &mut visited);
    }
    assigned
}

fn augment(
    e: usize,
    membership: &[Vec<usize>],
    assigned: &mut [Option<usize>],
    visited: &mut [bool],
) -> bool {
    for &set in &membership[e] {
        if visited[set] {
            continue;
        }
        visited[set] = true;
        let free = match assigned[set] {
            None => true,
            Some(other) => augment(other, membership, assigned, visited),
        };
        if free {
            assigned[set] = Some(e);
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn augmenting_path_reassigns() {
        // e0 in {0,1}, e1 in {0}: greedy e0->0 must be undone
        let membership = vec![vec![0, 1], vec![0]];
        let m = max_matching(Subset::from_indices([0, 1]), &membership, 2);
        assert_eq!(m, vec![Some(1), Some(0)]);
    }

    #[test]
    fn hall_deficiency() {
        // three elements all confined to the same two sets
        let membership = vec![vec![0, 1], vec![0, 1], vec![1, 0]];
        let m = max_matching(Subset::full(3), &membership, 2);
        assert_eq!(m.iter().flatten().count(), 2);
    }
}
