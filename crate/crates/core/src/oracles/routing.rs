use std::collections::VecDeque;

use super::check_budget;
use crate::error::{inapplicable, input, Result};
use crate::graph::Graph;

pub const ROUTING_LIMIT: usize = 7;

/// All matchings (including the empty one) as lists of edges.
fn matchings(g: &Graph) -> Vec<Vec<(usize, usize)>> {
    fn extend(edges: &[(usize, usize)], from: usize, used: u64, cur: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        out.push(cur.clone());
        for i in from..edges.len() {
            let (u, v) = edges[i];
            if used & (1 << u | 1 << v) == 0 {
                cur.push((u, v));
                extend(edges, i + 1, used | 1 << u | 1 << v, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    extend(&g.edges(), 0, 0, &mut Vec::new(), &mut out);
    out
}

/// Lehmer rank of a permutation of `0..n`.
fn rank(p: &[u8]) -> usize {
    let n = p.len();
    let mut r = 0;
    for i in 0..n {
        let smaller = p[i + 1..].iter().filter(|&&x| x < p[i]).count();
        r = r * (n - i) + smaller;
    }
    r
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// Distance from the identity arrangement to every arrangement, indexed by rank.
fn distances(g: &Graph) -> Result<Vec<u32>> {
    if !g.is_connected() {
        return Err(inapplicable("routing needs a connected graph (some permutations are unreachable)"));
    }
    let n = g.n();
    let moves = matchings(g);
    let mut dist = vec![u32::MAX; factorial(n)];
    let start: Vec<u8> = (0..n as u8).collect();
    dist[rank(&start)] = 0;
    let mut queue = VecDeque::from([start]);
    while let Some(cur) = queue.pop_front() {
        let d = dist[rank(&cur)];
        for m in &moves {
            let mut next = cur.clone();
            for &(u, v) in m {
                next.swap(u, v);
            }
            let r = rank(&next);
            if dist[r] == u32::MAX {
                dist[r] = d + 1;
                queue.push_back(next);
            }
        }
    }
    Ok(dist)
}

pub fn routing_number_exact(g: &Graph) -> Result<usize> {
    routing_number_exact_with_limit(g, ROUTING_LIMIT)
}

/// `max_π rt(G, π)`, by breadth-first search over all `n!` arrangements.
pub fn routing_number_exact_with_limit(g: &Graph, limit: usize) -> Result<usize> {
    check_budget(g, "routing number", limit)?;
    Ok(distances(g)?.into_iter().max().unwrap_or(0) as usize)
}

/// Fewest matching rounds that send the pebble on `v` to `perm[v]`.
pub fn rt_of_permutation(g: &Graph, perm: &[usize]) -> Result<usize> {
    rt_of_permutation_with_limit(g, perm, ROUTING_LIMIT)
}

pub fn rt_of_permutation_with_limit(g: &Graph, perm: &[usize], limit: usize) -> Result<usize> {
    check_budget(g, "routing number", limit)?;
    let n = g.n();
    let mut seen = vec![false; n];
    if perm.len() != n || perm.iter().any(|&x| x >= n || std::mem::replace(&mut seen[x], true)) {
        return Err(input("not a permutation of the vertex set"));
    }
    // Arrangement: position -> pebble. Pebble v must end at perm[v].
    let mut arrangement = vec![0u8; n];
    for (v, &target) in perm.iter().enumerate() {
        arrangement[target] = v as u8;
    }
    Ok(distances(g)?[rank(&arrangement)] as usize)
}
