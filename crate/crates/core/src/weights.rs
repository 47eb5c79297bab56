//! Perron weights on vertex sets, partitions, equitability, color refinement
//! and weight-quotient matrices.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{input, Result};
use crate::graph::{Graph, VertexSet};
use crate::linalg::{self, Matrix};
use crate::spectra::SpectralData;

/// Tolerance for comparing weight-intersection numbers.
pub const TOL_WEIGHT: f64 = 1e-8;

/// `ρ(U) = Σ_{u∈U} ν_u e_u` over a fixed Perron vector.
#[derive(Clone, Copy, Debug)]
pub struct WeightMap<'a> {
    nu: &'a [f64],
}

impl<'a> WeightMap<'a> {
    pub fn new(spec: &'a SpectralData) -> Self {
        Self { nu: &spec.perron }
    }

    pub fn from_vector(nu: &'a [f64]) -> Self {
        Self { nu }
    }

    pub fn rho(&self, u: &VertexSet) -> Vec<f64> {
        let mut out = vec![0.0; self.nu.len()];
        for v in u.iter() {
            out[v] = self.nu[v];
        }
        out
    }

    /// `‖ρ(U)‖²`.
    pub fn rho_norm_sq(&self, u: &VertexSet) -> f64 {
        u.iter().map(|v| self.nu[v] * self.nu[v]).sum()
    }

    pub fn rho_norm(&self, u: &VertexSet) -> f64 {
        self.rho_norm_sq(u).sqrt()
    }

    /// `⟨χ_U, ν⟩`.
    pub fn mass(&self, u: &VertexSet) -> f64 {
        u.iter().map(|v| self.nu[v]).sum()
    }

    /// `|U| − ⟨χ_U, ν⟩²`, evaluated as `‖χ_U − ⟨χ_U, ν⟩ ν‖²` so that it stays
    /// nonnegative and accurate near zero.
    pub fn residual_sq(&self, u: &VertexSet) -> f64 {
        let a = self.mass(u);
        self.nu
            .iter()
            .enumerate()
            .map(|(v, &x)| {
                let d = if u.contains(v) { 1.0 - a * x } else { -a * x };
                d * d
            })
            .sum()
    }

    /// `Σ_{u∈S, v∈T} a_uv ν_u ν_v` over ordered pairs.
    pub fn b_tilde(&self, g: &Graph, s: &VertexSet, t: &VertexSet) -> f64 {
        s.iter()
            .map(|u| self.nu[u] * g.neighbors(u).iter().filter(|&v| t.contains(v)).map(|v| self.nu[v]).sum::<f64>())
            .sum()
    }
}

/// A partition of `0..n` into nonempty disjoint cells.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Partition {
    #[serde(skip)]
    n: usize,
    cells: Vec<VertexSet>,
}

impl Partition {
    pub fn new(n: usize, cells: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = VertexSet::empty(n);
        let mut out = Vec::with_capacity(cells.len());
        for (i, cell) in cells.into_iter().enumerate() {
            if cell.is_empty() {
                return Err(input(format!("partition cell {i} is empty")));
            }
            let set = VertexSet::from_indices(n, cell)?;
            if !set.is_disjoint(&seen) {
                return Err(input(format!("partition cell {i} overlaps an earlier cell")));
            }
            seen = seen.union(&set);
            out.push(set);
        }
        if seen.len() != n {
            let missing = seen.complement().first().unwrap_or(0);
            return Err(input(format!("partition does not cover vertex {missing}")));
        }
        Ok(Self { n, cells: out })
    }

    /// The trivial partition `{V}`.
    pub fn single(n: usize) -> Self {
        Self { n, cells: vec![VertexSet::full(n)] }
    }

    /// Parses `"0,1,2;3,4"`.
    pub fn parse(n: usize, text: &str) -> Result<Self> {
        let cells = text
            .split(';')
            .map(parse_index_list)
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, cells)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.cells.len()
    }

    pub fn cells(&self) -> &[VertexSet] {
        &self.cells
    }

    /// `cell_of[v]` is the index of the cell containing `v`.
    pub fn cell_of(&self) -> Vec<usize> {
        let mut out = vec![0; self.n];
        for (i, cell) in self.cells.iter().enumerate() {
            for v in cell.iter() {
                out[v] = i;
            }
        }
        out
    }

    /// Index of the cell that contains all of `s`, if any.
    pub fn containing_cell(&self, s: &VertexSet) -> Option<usize> {
        self.cells.iter().position(|c| s.is_subset(c))
    }

    /// Cells sorted by smallest member.
    fn canonical(mut cells: Vec<VertexSet>, n: usize) -> Self {
        cells.sort_by_key(|c| c.first());
        Self { n, cells }
    }
}

/// Parses `"0,1,2"`; an empty string yields an empty list.
pub fn parse_index_list(text: &str) -> Result<Vec<usize>> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|tok| tok.trim().parse::<usize>().map_err(|_| input(format!("bad vertex index '{}'", tok.trim()))))
        .collect()
}

/// A pair of vertices in the same cell that disagree on their neighbourhood
/// profile towards another cell.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EquitableWitness {
    pub i: usize,
    pub j: usize,
    pub u: usize,
    pub u_prime: usize,
    pub value_u: f64,
    pub value_u_prime: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EquitableCheck {
    pub holds: bool,
    pub witness: Option<EquitableWitness>,
}

impl EquitableCheck {
    fn from_witness(witness: Option<EquitableWitness>) -> Self {
        Self { holds: witness.is_none(), witness }
    }
}

fn first_disagreement(p: &Partition, value: impl Fn(usize, usize) -> f64, tol: f64) -> Option<EquitableWitness> {
    for (i, cell) in p.cells.iter().enumerate() {
        let mut members = cell.iter();
        let Some(u) = members.next() else { continue };
        for u_prime in members {
            for j in 0..p.m() {
                let (a, b) = (value(u, j), value(u_prime, j));
                if (a - b).abs() > tol {
                    return Some(EquitableWitness { i, j, u, u_prime, value_u: a, value_u_prime: b });
                }
            }
        }
    }
    None
}

/// `|G(u) ∩ V_j|` for every vertex and cell.
fn neighbor_counts(g: &Graph, p: &Partition) -> Vec<Vec<usize>> {
    (0..g.n()).map(|u| p.cells.iter().map(|c| g.neighbors(u).intersection_len(c)).collect()).collect()
}

pub fn is_equitable(g: &Graph, p: &Partition) -> EquitableCheck {
    let counts = neighbor_counts(g, p);
    EquitableCheck::from_witness(first_disagreement(p, |u, j| counts[u][j] as f64, 0.5))
}

/// `b*_ij(u) = (1/ν_u) Σ_{v ∈ G(u) ∩ V_j} ν_v`, indexed `[u][j]`.
pub fn weight_intersection_numbers(g: &Graph, spec: &SpectralData, p: &Partition) -> Vec<Vec<f64>> {
    let nu = &spec.perron;
    (0..g.n())
        .map(|u| {
            p.cells
                .iter()
                .map(|c| g.neighbors(u).iter().filter(|&v| c.contains(v)).map(|v| nu[v]).sum::<f64>() / nu[u])
                .collect()
        })
        .collect()
}

pub fn is_weight_equitable(g: &Graph, spec: &SpectralData, p: &Partition) -> EquitableCheck {
    let b = weight_intersection_numbers(g, spec, p);
    EquitableCheck::from_witness(first_disagreement(p, |u, j| b[u][j], TOL_WEIGHT))
}

/// Color refinement: split cells by the vector of neighbour counts into the
/// current cells until stable.
pub fn coarsest_equitable_refinement(g: &Graph, p: &Partition) -> Partition {
    let mut current = Partition::canonical(p.cells.clone(), p.n);
    loop {
        let counts = neighbor_counts(g, &current);
        let mut next = Vec::new();
        for cell in &current.cells {
            let mut groups: BTreeMap<&[usize], Vec<usize>> = BTreeMap::new();
            for v in cell.iter() {
                groups.entry(counts[v].as_slice()).or_default().push(v);
            }
            for members in groups.into_values() {
                let mut set = VertexSet::empty(g.n());
                members.into_iter().for_each(|v| set.insert(v));
                next.push(set);
            }
        }
        let refined = Partition::canonical(next, p.n);
        if refined.m() == current.m() {
            return refined;
        }
        current = refined;
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct WeightQuotient {
    /// `b*_ij(u)` indexed `[u][j]`.
    pub b_star: Vec<Vec<f64>>,
    /// `Σ_{u∈V_i, v∈V_j} a_uv ν_u ν_v` (internal edges counted from both ends).
    pub b_tilde: Matrix,
    /// Same sum with each internal edge of `V_i` counted once on the diagonal.
    pub b_tilde_edges: Matrix,
    /// `b̃*_ij / (‖ρ(V_i)‖ ‖ρ(V_j)‖)`.
    pub b_bar: Matrix,
    pub rho_norms: Vec<f64>,
}

pub fn weight_quotient(g: &Graph, spec: &SpectralData, p: &Partition) -> WeightQuotient {
    let w = WeightMap::new(spec);
    let m = p.m();
    let rho_norms: Vec<f64> = p.cells.iter().map(|c| w.rho_norm(c)).collect();
    let b_tilde = Matrix::from_fn(m, m, |i, j| w.b_tilde(g, &p.cells[i], &p.cells[j]));
    let b_tilde_edges = Matrix::from_fn(m, m, |i, j| if i == j { 0.5 * b_tilde[(i, j)] } else { b_tilde[(i, j)] });
    let b_bar = Matrix::from_fn(m, m, |i, j| b_tilde[(i, j)] / (rho_norms[i] * rho_norms[j]));
    WeightQuotient { b_star: weight_intersection_numbers(g, spec, p), b_tilde, b_tilde_edges, b_bar, rho_norms }
}

#[derive(Clone, Debug, Serialize)]
pub struct InterlacingReport {
    /// Eigenvalues of `B̄*`, descending.
    pub quotient: Vec<f64>,
    /// Adjacency eigenvalues, descending.
    pub graph: Vec<f64>,
    /// `min_i min(λ_i − η_i, η_i − λ_{n−m+i})`.
    pub margin: f64,
    pub holds: bool,
}

pub fn quotient_interlacing_check(g: &Graph, spec: &SpectralData, p: &Partition) -> Result<InterlacingReport> {
    let q = weight_quotient(g, spec, p);
    let eta = linalg::symmetric_eigenvalues(&q.b_bar)?;
    let lam = spec.eigenvalues();
    let (n, m) = (lam.len(), eta.len());
    let margin = eta
        .iter()
        .enumerate()
        .map(|(i, &e)| (lam[i] - e).min(e - lam[n - m + i]))
        .fold(f64::INFINITY, f64::min);
    Ok(InterlacingReport { quotient: eta, graph: lam.to_vec(), margin, holds: margin >= -spec.tol() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;

    fn setup(f: Family) -> (Graph, SpectralData) {
        let g = f.build().unwrap();
        let s = SpectralData::new(&g).unwrap();
        (g, s)
    }

    fn part(n: usize, text: &str) -> Partition {
        Partition::parse(n, text).unwrap()
    }

    #[test]
    fn partition_validation() {
        assert!(Partition::parse(3, "0,1;2").is_ok());
        assert!(Partition::parse(3, "0,1;1,2").is_err());
        assert!(Partition::parse(3, "0;2").is_err());
        assert!(Partition::parse(3, "0,1;;2").is_err());
        assert!(Partition::parse(3, "0,x;1,2").is_err());
        assert!(Partition::parse(3, "0,1;5").is_err());
    }

    #[test]
    fn bowtie_equitable() {
        let (g, _) = setup(Family::Bowtie);
        assert!(is_equitable(&g, &part(5, "0,1,2,3;4")).holds);
    }

    #[test]
    fn path_equitable_and_witness() {
        let (g, s) = setup(Family::Path(3));
        assert!(is_equitable(&g, &part(3, "0,2;1")).holds);
        let bad = is_equitable(&g, &part(3, "0,1;2"));
        assert!(!bad.holds);
        let w = bad.witness.unwrap();
        assert_eq!((w.i, w.u, w.u_prime), (0, 0, 1));
        assert!(!is_weight_equitable(&g, &s, &part(3, "0,1;2")).holds);
    }

    #[test]
    fn complete_bipartite_sides_equitable() {
        let (g, _) = setup(Family::CompleteBipartite(2, 3));
        assert!(is_equitable(&g, &part(5, "0,1;2,3,4")).holds);
    }

    #[test]
    fn refinement_examples() {
        let (g, _) = setup(Family::CompleteMinusEdge(5));
        assert_eq!(coarsest_equitable_refinement(&g, &Partition::single(5)), part(5, "0,1;2,3,4"));
        let (g, _) = setup(Family::Bowtie);
        assert_eq!(coarsest_equitable_refinement(&g, &Partition::single(5)), part(5, "0,1,2,3;4"));
        let (g, _) = setup(Family::Petersen);
        assert_eq!(coarsest_equitable_refinement(&g, &Partition::single(10)).m(), 1);
    }

    #[test]
    fn refinement_respects_initial_cells() {
        let (g, _) = setup(Family::Path(5));
        let r = coarsest_equitable_refinement(&g, &part(5, "0;1,2,3,4"));
        assert!(is_equitable(&g, &r).holds);
        assert_eq!(r.m(), 5);
    }

    #[test]
    fn bowtie_quotient() {
        let (g, s) = setup(Family::Bowtie);
        let q = weight_quotient(&g, &s, &part(5, "0,1,2,3;4"));
        assert!((q.b_tilde[(0, 1)] - 4.0 / 17f64.sqrt()).abs() < 1e-12);
        for i in 0..2 {
            let sum: f64 = q.b_tilde.row(i).iter().sum();
            assert!((sum - s.lambda1() * q.rho_norms[i].powi(2)).abs() < 1e-12);
        }
    }

    #[test]
    fn single_cell_quotient_is_lambda1() {
        let (g, s) = setup(Family::Kite { r: 3, s: 4 });
        let q = weight_quotient(&g, &s, &Partition::single(g.n()));
        assert!((q.b_tilde[(0, 0)] - s.lambda1()).abs() < 1e-10);
        assert!((q.b_bar[(0, 0)] - s.lambda1()).abs() < 1e-10);
        assert!((2.0 * q.b_tilde_edges[(0, 0)] - s.lambda1()).abs() < 1e-10);
        assert!(is_weight_equitable(&g, &s, &Partition::single(g.n())).holds);
    }

    #[test]
    fn complete_bipartite_half_mass() {
        let (g, s) = setup(Family::CompleteBipartite(2, 3));
        let q = weight_quotient(&g, &s, &part(5, "0,1;2,3,4"));
        assert!((q.rho_norms[0].powi(2) - 0.5).abs() < 1e-12);
        assert!((q.b_tilde[(0, 1)] - s.lambda1() / 2.0).abs() < 1e-12);
    }

    #[test]
    fn interlacing_bowtie() {
        let (g, s) = setup(Family::Bowtie);
        let r = quotient_interlacing_check(&g, &s, &part(5, "0,1,2,3;4")).unwrap();
        assert!(r.holds);
        assert!((r.quotient[0] - s.lambda1()).abs() < 1e-10);
    }

    #[test]
    fn rho_complement_identity() {
        let (_, s) = setup(Family::Kite { r: 4, s: 3 });
        let w = WeightMap::new(&s);
        let set = VertexSet::from_indices(6, [0, 3, 5]).unwrap();
        assert!((w.rho_norm_sq(&set) + w.rho_norm_sq(&set.complement()) - 1.0).abs() < 1e-12);
    }
}
