//! Simple undirected graphs, vertex-set arithmetic and the edge-count
//! conventions used by every mixing lemma in the crate.
//!
//! `e(S, T)` counts ordered pairs `(u, v)` with `u ∈ S`, `v ∈ T`, `u ~ v`, so
//! an edge with both endpoints in `S ∩ T` contributes 2.

mod catalog;
mod generators;
mod io;
mod vertex_set;

use std::collections::VecDeque;

pub use catalog::connected_catalog;
pub use generators::{cartesian_product, double_cover, join, parse_family, Family};
pub use io::{parse_edge_list, parse_graph6, parse_graph_text, write_edge_list, write_graph6};
pub use vertex_set::VertexSet;

use crate::error::{input, Result};
use crate::linalg::Matrix;

/// Marker for unreachable pairs in [`Graph::distance_matrix`].
pub const UNREACHABLE: usize = usize::MAX;

#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    rows: Vec<VertexSet>,
    degrees: Vec<usize>,
    edge_count: usize,
}

/// Connected components of `G - removed`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentProfile {
    pub components: Vec<VertexSet>,
    /// Size of the largest component (0 when everything was removed).
    pub kappa: usize,
}

impl Graph {
    /// Builds a simple graph. Duplicate pairs collapse; self-loops are rejected.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut rows = vec![VertexSet::empty(n); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(input(format!("edge ({u}, {v}) has an endpoint outside 0..{n}")));
            }
            if u == v {
                return Err(input(format!("self-loop at vertex {u}")));
            }
            rows[u].insert(v);
            rows[v].insert(u);
        }
        Ok(Self::from_rows(rows))
    }

    fn from_rows(rows: Vec<VertexSet>) -> Self {
        let degrees: Vec<usize> = rows.iter().map(VertexSet::len).collect();
        let edge_count = degrees.iter().sum::<usize>() / 2;
        Self { rows, degrees, edge_count }
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    /// Open neighbourhood `G(u)`.
    pub fn neighbors(&self, u: usize) -> &VertexSet {
        &self.rows[u]
    }

    /// Closed neighbourhood `G[u]`.
    pub fn closed_neighbors(&self, u: usize) -> VertexSet {
        let mut s = self.rows[u].clone();
        s.insert(u);
        s
    }

    pub fn degree(&self, u: usize) -> usize {
        self.degrees[u]
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn min_degree(&self) -> usize {
        self.degrees.iter().copied().min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.degrees.iter().copied().max().unwrap_or(0)
    }

    pub fn avg_degree(&self) -> f64 {
        if self.n() == 0 {
            0.0
        } else {
            2.0 * self.edge_count as f64 / self.n() as f64
        }
    }

    pub fn is_regular(&self) -> bool {
        self.min_degree() == self.max_degree()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n())
            .flat_map(|u| self.rows[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
            .collect()
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    pub fn adjacency_matrix(&self) -> Matrix {
        let n = self.n();
        let mut a = Matrix::zeros(n, n);
        for u in 0..n {
            for v in self.rows[u].iter() {
                a[(u, v)] = 1.0;
            }
        }
        a
    }

    /// `e(S, T) = χ_Sᵀ A χ_T`.
    pub fn e(&self, s: &VertexSet, t: &VertexSet) -> usize {
        s.iter().map(|u| self.rows[u].intersection_len(t)).sum()
    }

    /// Sum of degrees over `S`.
    pub fn volume(&self, s: &VertexSet) -> usize {
        s.iter().map(|u| self.degrees[u]).sum()
    }

    pub fn bfs_distances(&self, source: usize) -> Vec<usize> {
        let mut dist = vec![UNREACHABLE; self.n()];
        let mut queue = VecDeque::new();
        dist[source] = 0;
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            for v in self.rows[u].iter() {
                if dist[v] == UNREACHABLE {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    pub fn distance_matrix(&self) -> Vec<Vec<usize>> {
        (0..self.n()).map(|u| self.bfs_distances(u)).collect()
    }

    pub fn is_connected(&self) -> bool {
        self.n() == 0 || self.bfs_distances(0).iter().all(|&d| d != UNREACHABLE)
    }

    /// Largest finite distance, or `None` if the graph is disconnected.
    pub fn diameter(&self) -> Option<usize> {
        let mut best = 0;
        for u in 0..self.n() {
            for d in self.bfs_distances(u) {
                if d == UNREACHABLE {
                    return None;
                }
                best = best.max(d);
            }
        }
        Some(best)
    }

    /// Components of `G - removed`, ordered by smallest member.
    pub fn components(&self, removed: &VertexSet) -> ComponentProfile {
        let n = self.n();
        let mut seen = removed.clone();
        let mut components = Vec::new();
        for start in 0..n {
            if seen.contains(start) {
                continue;
            }
            let mut comp = VertexSet::empty(n);
            let mut stack = vec![start];
            seen.insert(start);
            while let Some(u) = stack.pop() {
                comp.insert(u);
                for v in self.rows[u].iter() {
                    if !seen.contains(v) {
                        seen.insert(v);
                        stack.push(v);
                    }
                }
            }
            components.push(comp);
        }
        let kappa = components.iter().map(VertexSet::len).max().unwrap_or(0);
        ComponentProfile { components, kappa }
    }

    /// A 2-colouring `(side of vertex)` if one exists.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let n = self.n();
        let mut side: Vec<Option<bool>> = vec![None; n];
        for start in 0..n {
            if side[start].is_some() {
                continue;
            }
            side[start] = Some(false);
            let mut stack = vec![start];
            while let Some(u) = stack.pop() {
                let su = side[u].unwrap();
                for v in self.rows[u].iter() {
                    match side[v] {
                        None => {
                            side[v] = Some(!su);
                            stack.push(v);
                        }
                        Some(sv) if sv == su => return None,
                        _ => {}
                    }
                }
            }
        }
        Some(side.into_iter().map(Option::unwrap).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Graph induced by relabelling vertex `v` to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n() {
            return Err(input("permutation length does not match vertex count"));
        }
        let edges: Vec<_> = self.edges().into_iter().map(|(u, v)| (perm[u], perm[v])).collect();
        Self::from_edge_list(self.n(), &edges)
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n(), self.edges())
    }
}
