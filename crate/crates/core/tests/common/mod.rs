#![allow(dead_code)]

use irregmix::{Graph, VertexSet};
use rand::Rng;

/// Random graph on `n` vertices with edge probability `p`, plus the path
/// `0-1-..-(n-1)` so the result is connected.
pub fn random_connected<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
    for u in 0..n {
        for v in u + 2..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edge_list(n, &edges).unwrap()
}

pub fn random_nonempty_set<R: Rng>(rng: &mut R, n: usize) -> VertexSet {
    loop {
        let mask = rng.gen_range(1u64..1 << n);
        if mask != 0 {
            return VertexSet::from_mask(n, mask);
        }
    }
}

/// Connected catalog graphs with at least two vertices.
pub fn catalog(max_n: usize) -> Vec<Graph> {
    irregmix::graph::connected_catalog(max_n).into_iter().filter(|g| g.n() >= 2).collect()
}

pub fn cocktail_join_k2(n: usize) -> Graph {
    use irregmix::Family;
    Family::Join(Box::new(Family::CocktailParty((n - 2) / 2)), Box::new(Family::Complete(2))).build().unwrap()
}

pub fn sorted(mut v: Vec<f64>) -> Vec<f64> {
    v.sort_by(f64::total_cmp);
    v
}
