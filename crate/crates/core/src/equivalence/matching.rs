//! Bipartite matching by augmenting paths.

/// Maximum matching of a bipartite graph given as a left-by-right adjacency
/// table. `result[i]` is the right vertex matched to left vertex `i`.
pub fn maximum_matching(adj: &[Vec<bool>]) -> Vec<Option<usize>> {
    let right = adj.first().map_or(0, |r| r.len());
    let mut owner: Vec<Option<usize>> = vec![None; right];
    for left in 0..adj.len() {
        let mut seen = vec![false; right];
        augment(adj, left, &mut seen, &mut owner);
    }
    let mut out = vec![None; adj.len()];
    for (r, l) in owner.iter().enumerate() {
        if let Some(l) = l {
            out[*l] = Some(r);
        }
    }
    out
}

fn augment(adj: &[Vec<bool>], left: usize, seen: &mut [bool], owner: &mut [Option<usize>]) -> bool {
    for r in 0..seen.len() {
        if !adj[left][r] || seen[r] {
            continue;
        }
        seen[r] = true;
        if owner[r].is_none_or(|other| augment(adj, other, seen, owner)) {
            owner[r] = Some(left);
            return true;
        }
    }
    false
}

/// A perfect matching as `(left, right)` pairs, if one exists.
pub fn perfect_matching(adj: &[Vec<bool>]) -> Option<Vec<(usize, usize)>> {
    let right = adj.first().map_or(0, |r| r.len());
    if adj.len() != right {
        return None;
    }
    maximum_matching(adj)
        .into_iter()
        .enumerate()
        .map(|(l, r)| r.map(|r| (l, r)))
        .collect()
}
