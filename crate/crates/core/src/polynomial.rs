//! Real polynomials in the adjacency matrix and the spectral quantities
//! `W(p)`, `λ(p)`, `Λ(p)` derived from them.

use std::fmt;

use serde::Serialize;

use crate::error::{input, Result};
use crate::linalg::Matrix;
use crate::spectra::SpectralData;

/// Entrywise tolerance when testing `p(A) ≥ 0`.
pub const TOL_NONNEG: f64 = 1e-10;

/// `p(x) = c₀ + c₁x + … + c_k x^k`, coefficients stored low to high.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Polynomial {
    coeffs: Vec<f64>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<f64>) -> Self {
        while coeffs.len() > 1 && coeffs.last() == Some(&0.0) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(0.0);
        }
        Self { coeffs }
    }

    /// `x^{(k)} = x + x² + … + x^k`.
    pub fn walks(k: usize) -> Self {
        let mut c = vec![1.0; k + 1];
        c[0] = 0.0;
        Self::new(c)
    }

    /// Parses `"0,1,1"` as `x + x²`.
    pub fn parse(text: &str) -> Result<Self> {
        let coeffs = text
            .split(',')
            .map(|t| {
                let t = t.trim();
                t.parse::<f64>()
                    .ok()
                    .filter(|c| c.is_finite())
                    .ok_or_else(|| input(format!("bad polynomial coefficient '{t}'")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(coeffs))
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
    }

    /// Horner evaluation `p(M)` for a square matrix.
    pub fn eval_matrix(&self, m: &Matrix) -> Matrix {
        let n = m.rows();
        let mut acc = Matrix::zeros(n, n);
        for &c in self.coeffs.iter().rev() {
            acc = acc.matmul(m);
            for i in 0..n {
                acc[(i, i)] += c;
            }
        }
        acc
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// A polynomial evaluated on one graph.
#[derive(Clone, Debug, Serialize)]
pub struct PolySpectrum {
    pub poly: Polynomial,
    #[serde(skip)]
    pub matrix: Matrix,
    /// `max_u p(A)_uu`.
    pub w: f64,
    /// `min_{i≥2} p(λ_i)`.
    pub lambda_p: f64,
    /// `max_{i≥2} p(λ_i)`.
    pub big_lambda_p: f64,
    /// `p(λ₁)`.
    pub p_lambda1: f64,
    /// `p(λ)` with `λ = max(|λ₂|, |λₙ|)`.
    pub p_lambda: f64,
    /// Smallest entry of `p(A)`.
    pub min_entry: f64,
}

impl PolySpectrum {
    pub fn new(poly: &Polynomial, adjacency: &Matrix, spec: &SpectralData) -> Self {
        let matrix = poly.eval_matrix(adjacency);
        let n = matrix.rows();
        let w = (0..n).map(|u| matrix[(u, u)]).fold(f64::NEG_INFINITY, f64::max);
        let rest: Vec<f64> = spec.eigenvalues()[1..].iter().map(|&l| poly.eval(l)).collect();
        let lambda_p = rest.iter().copied().fold(f64::INFINITY, f64::min);
        let big_lambda_p = rest.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        Self {
            poly: poly.clone(),
            w,
            lambda_p,
            big_lambda_p,
            p_lambda1: poly.eval(spec.lambda1()),
            p_lambda: poly.eval(spec.lambda),
            min_entry: matrix.min_entry(),
            matrix,
        }
    }

    /// `χ_Sᵀ p(A) χ_T`.
    pub fn bilinear_sets(&self, s: &crate::VertexSet, t: &crate::VertexSet) -> f64 {
        s.iter().map(|u| t.iter().map(|v| self.matrix[(u, v)]).sum::<f64>()).sum()
    }

    /// Failed hypothesis of the bilinear polynomial mixing bound, if any.
    pub fn bilinear_condition(&self, spec: &SpectralData) -> Option<String> {
        if self.min_entry < -TOL_NONNEG {
            return Some(format!("p(A) has a negative entry ({:e})", self.min_entry));
        }
        let tol = spec.tol() * self.p_lambda1.abs().max(1.0);
        let worst = spec.eigenvalues()[1..].iter().map(|&l| self.poly.eval(l).abs()).fold(0.0, f64::max);
        if worst > self.p_lambda.abs() + tol {
            return Some(format!("|p(lambda)| = {} is below max |p(lambda_i)| = {}", self.p_lambda.abs(), worst));
        }
        if self.p_lambda1 <= self.p_lambda.abs() + tol {
            return Some(format!("p(lambda_1) = {} does not exceed |p(lambda)| = {}", self.p_lambda1, self.p_lambda.abs()));
        }
        None
    }
}
