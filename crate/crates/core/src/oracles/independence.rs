use super::{bits, check_budget, full_mask};
use crate::error::{input, Result};
use crate::graph::{Graph, UNREACHABLE};

pub const K_INDEPENDENCE_LIMIT: usize = 30;

pub fn k_independence_exact(g: &Graph, k: usize) -> Result<usize> {
    k_independence_exact_with_limit(g, k, K_INDEPENDENCE_LIMIT)
}

/// Maximum independent set of the `k`-th distance power, by branch and bound.
pub fn k_independence_exact_with_limit(g: &Graph, k: usize, limit: usize) -> Result<usize> {
    if k == 0 {
        return Err(input("k must be at least 1"));
    }
    check_budget(g, "k-independence", limit)?;
    let n = g.n();
    let dist = g.distance_matrix();
    let conflict: Vec<u64> = (0..n)
        .map(|u| (0..n).filter(|&v| v != u && dist[u][v] != UNREACHABLE && dist[u][v] <= k).fold(0, |m, v| m | 1 << v))
        .collect();
    let mut best = 0;
    branch(&conflict, full_mask(n), 0, &mut best);
    Ok(best)
}

fn branch(conflict: &[u64], cand: u64, size: usize, best: &mut usize) {
    if size + cand.count_ones() as usize <= *best {
        return;
    }
    if cand == 0 {
        *best = size;
        return;
    }
    // A vertex with at most one conflict can always be taken.
    if let Some(v) = bits(cand).find(|&v| (conflict[v] & cand).count_ones() <= 1) {
        return branch(conflict, cand & !(conflict[v] | 1 << v), size + 1, best);
    }
    let v = bits(cand).max_by_key(|&v| (conflict[v] & cand).count_ones()).unwrap();
    branch(conflict, cand & !(conflict[v] | 1 << v), size + 1, best);
    branch(conflict, cand & !(1 << v), size, best);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;

    #[test]
    fn known_values() {
        let p = Family::Petersen.build().unwrap();
        assert_eq!(k_independence_exact(&p, 1).unwrap(), 4);
        assert_eq!(k_independence_exact(&p, 2).unwrap(), 1);
        let c5 = Family::Cycle(5).build().unwrap();
        assert_eq!(k_independence_exact(&c5, 1).unwrap(), 2);
        assert_eq!(k_independence_exact(&c5, 2).unwrap(), 1);
        let c12 = Family::Cycle(12).build().unwrap();
        assert_eq!(k_independence_exact(&c12, 1).unwrap(), 6);
        assert_eq!(k_independence_exact(&c12, 2).unwrap(), 4);
        assert_eq!(k_independence_exact(&c12, 6).unwrap(), 1);
    }

    #[test]
    fn brute_force_agreement() {
        for g in crate::graph::connected_catalog(6).iter().step_by(7) {
            for k in 1..=3 {
                let dist = g.distance_matrix();
                let n = g.n();
                let brute = (0u64..1 << n)
                    .filter(|&m| bits(m).all(|u| bits(m).all(|v| u == v || dist[u][v] > k)))
                    .map(|m| m.count_ones() as usize)
                    .max()
                    .unwrap();
                assert_eq!(k_independence_exact(g, k).unwrap(), brute);
            }
        }
    }
}
