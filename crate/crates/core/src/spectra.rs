//! Adjacency, normalized-adjacency and Laplacian spectra, the Perron vector,
//! and the principal ratio.

use serde::Serialize;

use crate::error::{inapplicable, Error, Result};
use crate::graph::Graph;
use crate::linalg::{self, Matrix, SymmetricEigen};

/// Absolute eigen-residual tolerance, scaled by `max(1, |λ₁|)`.
pub const TOL_EIG: f64 = 1e-8;

/// Smallest Perron entry accepted after sign normalisation.
const PERRON_FLOOR: f64 = 1e-300;

/// Perron vectors with an entry below this are refined by power iteration.
const REFINE_BELOW: f64 = 1e-6;

#[derive(Clone, Debug)]
pub struct SpectralData {
    /// Adjacency eigenpairs, eigenvalues descending.
    pub adjacency: SymmetricEigen,
    /// `max(|λ₂|, |λₙ|)`.
    pub lambda: f64,
    /// Unit Perron eigenvector, strictly positive.
    pub perron: Vec<f64>,
    pub nu_min: f64,
    pub nu_max: f64,
    /// Eigenvalues of `D^{-1/2} A D^{-1/2}`, descending (`σ₁ = 1`).
    pub normalized: Vec<f64>,
    /// `max(|σ₂|, |σₙ|)`.
    pub sigma: f64,
    /// Laplacian eigenvalues `0 = μ₀ ≤ .. ≤ μ_{n-1}`, ascending.
    pub laplacian: Vec<f64>,
}

impl SpectralData {
    /// Requires a connected graph on at least two vertices.
    pub fn new(g: &Graph) -> Result<Self> {
        let n = g.n();
        if n < 2 {
            return Err(inapplicable("spectral data needs at least two vertices"));
        }
        if !g.is_connected() {
            return Err(inapplicable("graph must be connected (Perron-Frobenius needs an irreducible adjacency matrix)"));
        }
        let adjacency = linalg::symmetric_eig(&g.adjacency_matrix())?;
        let lambda = second_abs(&adjacency.values);

        let mut perron = adjacency.vector(0);
        let pivot = perron.iter().copied().fold(0.0f64, |m, x| if x.abs() > m.abs() { x } else { m });
        if pivot < 0.0 {
            perron.iter_mut().for_each(|x| *x = -*x);
        }
        if perron.iter().any(|&x| x < REFINE_BELOW) {
            refine_perron(g, &mut perron, adjacency.values[0]);
        }
        let nu_min = perron.iter().copied().fold(f64::INFINITY, f64::min);
        let nu_max = perron.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        if nu_min <= PERRON_FLOOR {
            return Err(Error::Numeric(format!("Perron vector entry {nu_min:e} is not positive")));
        }

        let normalized = linalg::symmetric_eigenvalues(&normalized_adjacency(g))?;
        let sigma = second_abs(&normalized);
        let mut laplacian = linalg::symmetric_eigenvalues(&laplacian(g))?;
        laplacian.reverse();

        Ok(Self { adjacency, lambda, perron, nu_min, nu_max, normalized, sigma, laplacian })
    }

    pub fn n(&self) -> usize {
        self.perron.len()
    }

    /// Largest adjacency eigenvalue `λ₁`.
    pub fn lambda1(&self) -> f64 {
        self.adjacency.values[0]
    }

    pub fn eigenvalues(&self) -> &[f64] {
        &self.adjacency.values
    }

    /// `ν_max / ν_min`.
    pub fn principal_ratio(&self) -> f64 {
        self.nu_max / self.nu_min
    }

    /// `½(λ₁ + √(λ₁² − 4))`, defined when `λ₁ ≥ 2`.
    pub fn tau(&self) -> Option<f64> {
        let l1 = self.lambda1();
        (l1 >= 2.0).then(|| 0.5 * (l1 + (l1 * l1 - 4.0).max(0.0).sqrt()))
    }

    /// `(1/ν_u) Σ_{v~u} ν_v` for every `u`; each equals `λ₁`.
    pub fn weight_degrees(&self, g: &Graph) -> Vec<f64> {
        (0..g.n())
            .map(|u| g.neighbors(u).iter().map(|v| self.perron[v]).sum::<f64>() / self.perron[u])
            .collect()
    }

    pub fn tol(&self) -> f64 {
        TOL_EIG * self.lambda1().abs().max(1.0)
    }
}

/// `max(|x₂|, |xₙ|)` for a descending list.
/// Shifted power iteration on `A + λ₁I`, started from `|v|`.
fn refine_perron(g: &Graph, v: &mut [f64], lambda1: f64) {
    let floor = v.iter().fold(0.0f64, |m, x| m.max(x.abs())) * f64::EPSILON;
    v.iter_mut().for_each(|x| *x = x.abs().max(floor));
    let mut next = vec![0.0; v.len()];
    for _ in 0..10_000 {
        for (u, out) in next.iter_mut().enumerate() {
            *out = lambda1 * v[u] + g.neighbors(u).iter().map(|w| v[w]).sum::<f64>();
        }
        let norm = next.iter().map(|x| x * x).sum::<f64>().sqrt();
        let mut change = 0.0f64;
        for (x, y) in v.iter_mut().zip(&next) {
            let y = y / norm;
            change = change.max((y - *x).abs() / y);
            *x = y;
        }
        if change < 1e-14 {
            break;
        }
    }
}

fn second_abs(desc: &[f64]) -> f64 {
    match desc.len() {
        0 | 1 => 0.0,
        n => desc[1].abs().max(desc[n - 1].abs()),
    }
}

/// `D^{-1/2} A D^{-1/2}`; isolated vertices contribute zero rows.
pub fn normalized_adjacency(g: &Graph) -> Matrix {
    let inv_sqrt: Vec<f64> =
        g.degrees().iter().map(|&d| if d == 0 { 0.0 } else { 1.0 / (d as f64).sqrt() }).collect();
    let mut m = g.adjacency_matrix();
    for u in 0..g.n() {
        for v in g.neighbors(u).iter() {
            m[(u, v)] = inv_sqrt[u] * inv_sqrt[v];
        }
    }
    m
}

/// `L = D - A`.
pub fn laplacian(g: &Graph) -> Matrix {
    let mut m = g.adjacency_matrix().scale(-1.0);
    for u in 0..g.n() {
        m[(u, u)] = g.degree(u) as f64;
    }
    m
}

/// Singular values of a rectangular matrix, descending.
#[derive(Clone, Debug, Serialize)]
pub struct SingularProfile {
    pub values: Vec<f64>,
}

impl SingularProfile {
    pub fn of(m: &Matrix) -> Result<Self> {
        Ok(Self { values: linalg::singular_values(m)? })
    }

    /// Second largest singular value (0 for a matrix with fewer than two).
    pub fn second(&self) -> f64 {
        self.values.get(1).copied().unwrap_or(0.0)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PrincipalRatio {
    /// `ν_max / ν_min`.
    pub gamma: f64,
    /// `√(Δ/δ)`.
    pub lower: f64,
    /// `(τ^{d+1} − τ^{−(d+1)}) / (τ − τ^{−1})`, or `None` when `λ₁ < 2`.
    pub upper: Option<f64>,
    /// Distance between the (lowest-index) argmax and argmin of `ν`.
    pub distance: usize,
    pub argmax: usize,
    pub argmin: usize,
}

pub fn principal_ratio(g: &Graph, spec: &SpectralData) -> PrincipalRatio {
    let nu = &spec.perron;
    let mut argmax = 0;
    let mut argmin = 0;
    for (i, &x) in nu.iter().enumerate() {
        if x > nu[argmax] {
            argmax = i;
        }
        if x < nu[argmin] {
            argmin = i;
        }
    }
    let distance = g.bfs_distances(argmax)[argmin];
    let upper = spec.tau().map(|tau| {
        if (tau - 1.0).abs() < 1e-12 {
            // Limit τ → 1 of the quotient.
            (distance + 1) as f64
        } else {
            chebyshev_ratio(tau, distance + 1)
        }
    });
    PrincipalRatio {
        gamma: spec.principal_ratio(),
        lower: (g.max_degree() as f64 / g.min_degree() as f64).sqrt(),
        upper,
        distance,
        argmax,
        argmin,
    }
}

/// `(τ^k − τ^{−k}) / (τ − τ^{−1})`.
pub fn chebyshev_ratio(tau: f64, k: usize) -> f64 {
    let k = k as i32;
    (tau.powi(k) - tau.powi(-k)) / (tau - 1.0 / tau)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;

    fn spec(f: Family) -> (Graph, SpectralData) {
        let g = f.build().unwrap();
        let s = SpectralData::new(&g).unwrap();
        (g, s)
    }

    #[test]
    fn tiny_perron_entries_keep_relative_precision() {
        let (g, s) = spec(Family::Kite { r: 12, s: 20 });
        let lambda1 = s.lambda1();
        for u in 0..g.n() {
            let sum: f64 = g.neighbors(u).iter().map(|w| s.perron[w]).sum();
            assert!((sum / (lambda1 * s.perron[u]) - 1.0).abs() < 1e-9, "vertex {u}");
        }
        assert!(s.nu_min > 0.0 && s.nu_min < 1e-12);
    }

    #[test]
    fn bowtie_lambda1() {
        let (_, s) = spec(Family::Bowtie);
        assert!((s.lambda1() - 0.5 * (1.0 + 17f64.sqrt())).abs() < 1e-12);
        assert!((s.lambda - 0.5 * (17f64.sqrt() - 1.0)).abs() < 1e-12);
    }

    #[test]
    fn petersen_spectrum() {
        let (_, s) = spec(Family::Petersen);
        let expect = [3.0, 1.0, 1.0, 1.0, 1.0, 1.0, -2.0, -2.0, -2.0, -2.0];
        for (a, b) in s.eigenvalues().iter().zip(expect) {
            assert!((a - b).abs() < 1e-10);
        }
        assert!((s.lambda - 2.0).abs() < 1e-10);
    }

    #[test]
    fn regular_perron_is_uniform() {
        let (_, s) = spec(Family::Petersen);
        let c = 1.0 / 10f64.sqrt();
        assert!(s.perron.iter().all(|x| (x - c).abs() < 1e-10));
        assert!((s.principal_ratio() - 1.0).abs() < 1e-9);
    }

    #[test]
    fn complete_minus_edge_sigma() {
        for n in [5usize, 8, 13] {
            let (_, s) = spec(Family::CompleteMinusEdge(n));
            // Spectrum is {1, 0, -1/(n-1) (n-3 times), -2/(n-1)}.
            assert!((s.sigma - 2.0 / (n as f64 - 1.0)).abs() < 1e-10, "n = {n}");
        }
    }

    #[test]
    fn cocktail_join_k2_parameters() {
        let (_, s) = spec(crate::graph::parse_family("join:cocktail_party:3,complete:2").unwrap());
        let n = 8.0f64;
        let beta = ((n - 3.0) * (n - 3.0) + 4.0 * n).sqrt();
        assert!((s.lambda1() - (n - 3.0 + beta) / 2.0).abs() < 1e-10);
        assert!((s.lambda - 2.0).abs() < 1e-10);
        let nu_min = 0.5 * (2.0 / (n - 2.0) * (1.0 + (n - 5.0) / beta)).sqrt();
        assert!((s.nu_min - nu_min).abs() < 1e-10);
    }

    #[test]
    fn disconnected_rejected() {
        let g = Graph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(matches!(SpectralData::new(&g), Err(Error::Inapplicable(_))));
    }

    #[test]
    fn kite_principal_ratio_closed_form() {
        let (g, s) = spec(Family::Kite { r: 3, s: 4 });
        let pr = principal_ratio(&g, &s);
        let tau = s.tau().unwrap();
        assert!((pr.gamma - chebyshev_ratio(tau, 3)).abs() < 1e-9);
        assert_eq!(pr.distance, 2);
        assert!((pr.upper.unwrap() - pr.gamma).abs() < 1e-9);
    }

    #[test]
    fn path_has_no_tau_bound() {
        let (g, s) = spec(Family::Path(3));
        assert!(principal_ratio(&g, &s).upper.is_none());
    }
}
