//! Exhaustive catalog of connected graphs up to isomorphism, for small orders.

use std::collections::BTreeSet;

use super::Graph;

/// All connected graphs on `1..=max_n` vertices, one per isomorphism class,
/// ordered by (order, edge count, canonical code). Practical up to `max_n = 7`.
pub fn connected_catalog(max_n: usize) -> Vec<Graph> {
    (1..=max_n).flat_map(connected_of_order).collect()
}

fn connected_of_order(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let mut pair_index = vec![vec![0usize; n]; n];
    for (k, &(i, j)) in pairs.iter().enumerate() {
        pair_index[i][j] = k;
        pair_index[j][i] = k;
    }
    // For every permutation, where each pair bit goes.
    let perm_maps: Vec<Vec<usize>> = permutations(n)
        .into_iter()
        .map(|p| pairs.iter().map(|&(i, j)| pair_index[p[i]][p[j]]).collect())
        .collect();

    let mut classes: BTreeSet<(u32, u64)> = BTreeSet::new();
    let m = pairs.len();
    for code in 0..(1u64 << m) {
        if !connected(n, &pairs, code) {
            continue;
        }
        let canon = perm_maps
            .iter()
            .map(|map| {
                let mut c = 0u64;
                let mut bits = code;
                while bits != 0 {
                    let k = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    c |= 1 << map[k];
                }
                c
            })
            .min()
            .unwrap_or(0);
        classes.insert((canon.count_ones(), canon));
    }
    classes
        .into_iter()
        .map(|(_, code)| {
            let edges: Vec<_> =
                pairs.iter().enumerate().filter(|(k, _)| code >> k & 1 == 1).map(|(_, &p)| p).collect();
            Graph::from_edge_list(n, &edges).expect("catalog edges are valid")
        })
        .collect()
}

fn connected(n: usize, pairs: &[(usize, usize)], code: u64) -> bool {
    if n <= 1 {
        return true;
    }
    let mut adj = vec![0u64; n];
    for (k, &(i, j)) in pairs.iter().enumerate() {
        if code >> k & 1 == 1 {
            adj[i] |= 1 << j;
            adj[j] |= 1 << i;
        }
    }
    let mut reached = 1u64;
    let mut frontier = 1u64;
    while frontier != 0 {
        let mut next = 0;
        let mut f = frontier;
        while f != 0 {
            let v = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= adj[v];
        }
        frontier = next & !reached;
        reached |= next;
    }
    reached.count_ones() as usize == n
}

pub(crate) fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    heap_permute(n, &mut p, &mut out);
    out
}

fn heap_permute(k: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if k <= 1 {
        out.push(p.clone());
        return;
    }
    for i in 0..k - 1 {
        heap_permute(k - 1, p, out);
        if k.is_multiple_of(2) {
            p.swap(i, k - 1);
        } else {
            p.swap(0, k - 1);
        }
    }
    heap_permute(k - 1, p, out);
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_match_known_sequence() {
        // Connected graphs on n unlabeled vertices: 1, 1, 2, 6, 21, 112.
        let counts: Vec<usize> = (1..=6).map(|n| connected_of_order(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21, 112]);
    }

    #[test]
    fn all_permutations() {
        assert_eq!(permutations(4).len(), 24);
        let set: BTreeSet<_> = permutations(4).into_iter().collect();
        assert_eq!(set.len(), 24);
    }
}
