//! Expander mixing lemma evaluators.
//!
//! Every evaluator returns a [`MixingReport`] holding the deviation `lhs`, the
//! bound `rhs` and their difference. Sets use the ordered-pair edge count
//! `e(S,T) = χ_Sᵀ A χ_T`.

mod converse;
mod dispatch;
mod sweep;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{inapplicable, input, Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::linalg::{self, Matrix};
use crate::polynomial::{PolySpectrum, Polynomial, TOL_NONNEG};
use crate::spectra::SpectralData;
use crate::weights::{is_equitable, Partition, WeightMap, TOL_WEIGHT};

pub use converse::{converse_alpha, ConverseReport};
pub use dispatch::{evaluate, EvalOptions};
pub use sweep::{sweep_verify, SweepConfig, SweepMode, SweepSummary, TheoremSummary};

pub const TOL_SLACK: f64 = 1e-8;

/// `TOL_SLACK · max(1, rhs)`.
pub fn tol_slack(rhs: f64) -> f64 {
    TOL_SLACK * rhs.abs().max(1.0)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum TheoremId {
    Super,
    VolHaemers,
    VolChung,
    VolButler,
    KsBt,
    Laplacian,
    Perron,
    PerronEquitable,
    Weighted,
    Biregular,
    PolyQuadratic,
    PolyBilinear,
    KwalkRegular,
    KwalkPerron,
}

impl TheoremId {
    pub const ALL: [TheoremId; 14] = [
        TheoremId::Super,
        TheoremId::VolHaemers,
        TheoremId::VolChung,
        TheoremId::VolButler,
        TheoremId::KsBt,
        TheoremId::Laplacian,
        TheoremId::Perron,
        TheoremId::PerronEquitable,
        TheoremId::Weighted,
        TheoremId::Biregular,
        TheoremId::PolyQuadratic,
        TheoremId::PolyBilinear,
        TheoremId::KwalkRegular,
        TheoremId::KwalkPerron,
    ];

    /// Short lowercase name used on the command line.
    pub fn name(self) -> &'static str {
        match self {
            TheoremId::Super => "super",
            TheoremId::VolHaemers => "haemers",
            TheoremId::VolChung => "chung",
            TheoremId::VolButler => "butler",
            TheoremId::KsBt => "ks-bt",
            TheoremId::Laplacian => "laplacian",
            TheoremId::Perron => "perron",
            TheoremId::PerronEquitable => "perron-equitable",
            TheoremId::Weighted => "weighted",
            TheoremId::Biregular => "biregular",
            TheoremId::PolyQuadratic => "poly-quadratic",
            TheoremId::PolyBilinear => "poly-bilinear",
            TheoremId::KwalkRegular => "kwalk-regular",
            TheoremId::KwalkPerron => "kwalk-perron",
        }
    }

    /// Theorems whose statement only involves `S` (with `T` implied).
    pub fn single_set(self) -> bool {
        matches!(self, TheoremId::VolHaemers | TheoremId::PolyQuadratic)
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase().replace('_', "-");
        let alias = match key.as_str() {
            "vol-haemers" => "haemers",
            "vol-chung" => "chung",
            "vol-butler" | "butler-cor" => "butler",
            "ks" | "ksbt" => "ks-bt",
            "kwalk" | "kwalks" => "kwalk-perron",
            "quadratic" => "poly-quadratic",
            "bilinear" | "polynomial" => "poly-bilinear",
            "equitable" => "perron-equitable",
            other => other,
        };
        TheoremId::ALL
            .into_iter()
            .find(|t| t.name() == alias)
            .ok_or_else(|| input(format!("unknown theorem '{s}'")))
    }
}

/// One evaluation of a mixing inequality on a pair of sets.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MixingReport {
    #[serde(rename = "theorem_id")]
    pub theorem: TheoremId,
    #[serde(rename = "S")]
    pub s: VertexSet,
    #[serde(rename = "T")]
    pub t: VertexSet,
    pub lhs: f64,
    pub rhs: f64,
    pub slack: f64,
    pub tight: bool,
    pub applicable: bool,
    pub reason: Option<String>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub extras: BTreeMap<&'static str, f64>,
}

impl MixingReport {
    pub fn new(theorem: TheoremId, s: &VertexSet, t: &VertexSet, lhs: f64, rhs: f64) -> Self {
        let slack = rhs - lhs;
        Self {
            theorem,
            s: s.clone(),
            t: t.clone(),
            lhs,
            rhs,
            slack,
            tight: slack.abs() <= tol_slack(rhs),
            applicable: true,
            reason: None,
            extras: BTreeMap::new(),
        }
    }

    pub fn with(mut self, key: &'static str, value: f64) -> Self {
        self.extras.insert(key, value);
        self
    }

    /// Marks the hypothesis as failed; the values stay for inspection.
    pub fn not_applicable(mut self, reason: impl Into<String>) -> Self {
        self.applicable = false;
        self.tight = false;
        self.reason = Some(reason.into());
        self
    }

    pub fn tol(&self) -> f64 {
        tol_slack(self.rhs)
    }

    pub fn violated(&self) -> bool {
        self.violated_at(TOL_SLACK)
    }

    /// Violation test with relative tolerance `rel · max(1, rhs)`.
    pub fn violated_at(&self, rel: f64) -> bool {
        self.applicable && self.slack < -rel * self.rhs.abs().max(1.0)
    }
}

fn sqrt0(x: f64) -> f64 {
    x.max(0.0).sqrt()
}

fn check_universe(n: usize, sets: &[&VertexSet]) -> Result<()> {
    match sets.iter().find(|s| s.universe() != n) {
        Some(s) => Err(input(format!("vertex set over {} vertices used with a graph on {n}", s.universe()))),
        None => Ok(()),
    }
}

/// The four degree-based bounds.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VolumeVariant {
    Haemers,
    Chung,
    ButlerCor,
    KsBt,
}

impl VolumeVariant {
    pub fn theorem(self) -> TheoremId {
        match self {
            VolumeVariant::Haemers => TheoremId::VolHaemers,
            VolumeVariant::Chung => TheoremId::VolChung,
            VolumeVariant::ButlerCor => TheoremId::VolButler,
            VolumeVariant::KsBt => TheoremId::KsBt,
        }
    }
}

/// Nonnegative matrix with positive weight vectors for the general bound.
#[derive(Clone, Debug)]
pub struct MatrixEmlInput {
    b: Matrix,
    x: Vec<f64>,
    y: Vec<f64>,
    /// `R_ii = (Bx)_i / y_i`.
    r: Vec<f64>,
    /// `C_jj = (yᵀB)_j / x_j`.
    c: Vec<f64>,
    bx: Vec<f64>,
    yb: Vec<f64>,
    ybx: f64,
    sigma2: f64,
}

impl MatrixEmlInput {
    pub fn new(b: Matrix, x: &[f64], y: &[f64]) -> Result<Self> {
        let (m, n) = (b.rows(), b.cols());
        if x.len() != n || y.len() != m {
            return Err(input(format!("weight vectors have lengths {}, {} for a {m}x{n} matrix", x.len(), y.len())));
        }
        if b.min_entry() < -TOL_NONNEG {
            return Err(inapplicable("matrix has a negative entry"));
        }
        if let Some(i) = x.iter().chain(y).position(|&v| v.is_nan() || v <= 0.0) {
            return Err(inapplicable(format!("weight vector entry {i} is not positive")));
        }
        let bx = b.matvec(x);
        let yb = b.transpose().matvec(y);
        if let Some(i) = bx.iter().position(|&v| v <= 0.0) {
            return Err(inapplicable(format!("row {i} is zero")));
        }
        if let Some(j) = yb.iter().position(|&v| v <= 0.0) {
            return Err(inapplicable(format!("column {j} is zero")));
        }
        let r: Vec<f64> = bx.iter().zip(y).map(|(a, b)| a / b).collect();
        let c: Vec<f64> = yb.iter().zip(x).map(|(a, b)| a / b).collect();
        let scaled = Matrix::from_fn(m, n, |i, j| b[(i, j)] / (r[i] * c[j]).sqrt());
        let sigma2 = linalg::singular_values(&scaled)?.get(1).copied().unwrap_or(0.0);
        let ybx = linalg::dot(y, &bx);
        Ok(Self { b, x: x.to_vec(), y: y.to_vec(), r, c, bx, yb, ybx, sigma2 })
    }

    /// `σ₂(R^{-1/2} B C^{-1/2})`.
    pub fn sigma2(&self) -> f64 {
        self.sigma2
    }

    pub fn r(&self) -> &[f64] {
        &self.r
    }

    pub fn c(&self) -> &[f64] {
        &self.c
    }
}

pub fn super_eml(input: &MatrixEmlInput, s: &VertexSet, t: &VertexSet) -> Result<MixingReport> {
    check_universe(input.b.rows(), &[s])?;
    check_universe(input.b.cols(), &[t])?;
    let main: f64 = s.iter().map(|i| t.iter().map(|j| input.b[(i, j)]).sum::<f64>()).sum();
    let sx: f64 = s.iter().map(|i| input.bx[i]).sum();
    let ty: f64 = t.iter().map(|j| input.yb[j]).sum();
    let lhs = (main - sx * ty / input.ybx).abs();
    // ‖R^{1/2}χ_S‖² − ⟨χ_S,Bx⟩²/⟨y,Bx⟩ = ‖R^{1/2}(χ_S − (⟨χ_S,Bx⟩/⟨y,Bx⟩) y)‖².
    let residual = |set: &VertexSet, diag: &[f64], w: &[f64], coef: f64| -> f64 {
        (0..diag.len())
            .map(|i| {
                let d = f64::from(u8::from(set.contains(i))) - coef * w[i];
                diag[i] * d * d
            })
            .sum()
    };
    let rs = residual(s, &input.r, &input.y, sx / input.ybx);
    let ct = residual(t, &input.c, &input.x, ty / input.ybx);
    let rhs = input.sigma2 * (rs * ct).sqrt();
    Ok(MixingReport::new(TheoremId::Super, s, t, lhs, rhs).with("sigma2", input.sigma2))
}

/// Cell-constant Perron values of an equitable partition.
#[derive(Clone, Debug)]
pub struct EquitableCells {
    partition: Partition,
    values: Vec<f64>,
}

impl EquitableCells {
    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }
}

/// Biregular structure: sides and degrees.
#[derive(Clone, Debug)]
struct Biregular {
    left: VertexSet,
    right: VertexSet,
    d_left: usize,
    d_right: usize,
}

/// Precomputed spectral data for repeated evaluation on one graph.
#[derive(Clone, Debug)]
pub struct EmlContext<'g> {
    g: &'g Graph,
    spec: SpectralData,
    adjacency: Matrix,
    vol_v: f64,
    biregular: std::result::Result<Biregular, String>,
}

impl<'g> EmlContext<'g> {
    pub fn new(g: &'g Graph) -> Result<Self> {
        let spec = SpectralData::new(g)?;
        Ok(Self::with_spectra(g, spec))
    }

    pub fn with_spectra(g: &'g Graph, spec: SpectralData) -> Self {
        Self {
            g,
            spec,
            adjacency: g.adjacency_matrix(),
            vol_v: (2 * g.edge_count()) as f64,
            biregular: biregular_structure(g),
        }
    }

    pub fn graph(&self) -> &Graph {
        self.g
    }

    pub fn spectra(&self) -> &SpectralData {
        &self.spec
    }

    pub fn adjacency(&self) -> &Matrix {
        &self.adjacency
    }

    pub fn weights(&self) -> WeightMap<'_> {
        WeightMap::new(&self.spec)
    }

    pub fn polynomial(&self, p: &Polynomial) -> PolySpectrum {
        PolySpectrum::new(p, &self.adjacency, &self.spec)
    }

    fn n(&self) -> f64 {
        self.g.n() as f64
    }

    fn e(&self, s: &VertexSet, t: &VertexSet) -> f64 {
        self.g.e(s, t) as f64
    }

    fn vol(&self, s: &VertexSet) -> f64 {
        self.g.volume(s) as f64
    }

    /// Degree-weighted bounds.
    pub fn volume(&self, variant: VolumeVariant, s: &VertexSet, t: &VertexSet) -> MixingReport {
        let sp = &self.spec;
        let vv = self.vol_v;
        match variant {
            VolumeVariant::Haemers => {
                let sbar = s.complement();
                let (vs, vsb) = (self.vol(s), self.vol(&sbar));
                let lhs = (self.e(s, &sbar) - vs * vsb / vv).abs();
                let rhs = sp.lambda * sp.lambda1() * (s.len() * sbar.len()) as f64 / vv;
                MixingReport::new(TheoremId::VolHaemers, s, &sbar, lhs, rhs)
            }
            VolumeVariant::Chung | VolumeVariant::ButlerCor => {
                let (vs, vt) = (self.vol(s), self.vol(t));
                let lhs = (self.e(s, t) - vs * vt / vv).abs();
                if variant == VolumeVariant::Chung {
                    let rhs = sp.sigma * sqrt0(vs * vt * (1.0 - vs / vv) * (1.0 - vt / vv));
                    MixingReport::new(TheoremId::VolChung, s, t, lhs, rhs)
                } else {
                    MixingReport::new(TheoremId::VolButler, s, t, lhs, sp.sigma * (vs * vt).sqrt())
                }
            }
            VolumeVariant::KsBt => {
                let g = self.g;
                let dbar = g.avg_degree();
                let spread = (g.max_degree() - g.min_degree()) as f64;
                let r = if spread == 0.0 { 0.0 } else { spread / sp.lambda };
                let lambda_bar = (10.0 * r + 1.0) * sp.lambda;
                let lhs = (self.e(s, t) - dbar * (s.len() * t.len()) as f64 / self.n()).abs();
                let rhs = lambda_bar * ((s.len() * t.len()) as f64).sqrt();
                let ratio = dbar / sp.lambda;
                let report = MixingReport::new(TheoremId::KsBt, s, t, lhs, rhs)
                    .with("R", r)
                    .with("lambda_bar", lambda_bar)
                    .with("dbar_over_lambda", ratio);
                if ratio < 10.0 {
                    report.not_applicable(format!("lambda << dbar not met: dbar/lambda = {ratio:.4} < 10"))
                } else {
                    report
                }
            }
        }
    }

    pub fn laplacian(&self, s: &VertexSet, t: &VertexSet) -> MixingReport {
        laplacian_report(self.g, &self.spec.laplacian, s, t)
    }

    pub fn perron(&self, s: &VertexSet, t: &VertexSet) -> MixingReport {
        let w = self.weights();
        let (a_s, a_t) = (w.mass(s), w.mass(t));
        let lhs = (self.e(s, t) - self.spec.lambda1() * a_s * a_t).abs();
        let rhs = self.spec.lambda * (w.residual_sq(s) * w.residual_sq(t)).sqrt();
        MixingReport::new(TheoremId::Perron, s, t, lhs, rhs)
    }

    /// Checks that `p` is equitable and reads off the cell-constant `ν`.
    pub fn equitable_cells(&self, p: &Partition) -> Result<EquitableCells> {
        if p.n() != self.g.n() {
            return Err(input("partition size does not match the graph"));
        }
        let check = is_equitable(self.g, p);
        if let Some(w) = check.witness {
            return Err(inapplicable(format!(
                "partition is not equitable: vertices {} and {} of cell {} have {} and {} neighbours in cell {}",
                w.u, w.u_prime, w.i, w.value_u, w.value_u_prime, w.j
            )));
        }
        let nu = &self.spec.perron;
        let mut values = Vec::with_capacity(p.m());
        for (i, cell) in p.cells().iter().enumerate() {
            let first = nu[cell.first().expect("cells are nonempty")];
            if let Some(v) = cell.iter().find(|&v| (nu[v] - first).abs() > TOL_WEIGHT) {
                return Err(Error::Numeric(format!("Perron vector not constant on cell {i} (vertex {v})")));
            }
            values.push(first);
        }
        Ok(EquitableCells { partition: p.clone(), values })
    }

    pub fn perron_equitable(&self, cells: &EquitableCells, s: &VertexSet, t: &VertexSet) -> Result<MixingReport> {
        let locate = |x: &VertexSet, name: &str| {
            cells
                .partition
                .containing_cell(x)
                .ok_or_else(|| inapplicable(format!("{name} is not contained in a single cell")))
        };
        let (i, j) = (locate(s, "S")?, locate(t, "T")?);
        let (nu_s, nu_t) = (cells.values[i], cells.values[j]);
        let (ls, lt) = (s.len() as f64, t.len() as f64);
        let lhs = (self.e(s, t) - self.spec.lambda1() * ls * lt * nu_s * nu_t).abs();
        let rhs = self.spec.lambda * sqrt0(ls * lt * (1.0 - ls * nu_s * nu_s) * (1.0 - lt * nu_t * nu_t));
        Ok(MixingReport::new(TheoremId::PerronEquitable, s, t, lhs, rhs).with("nu_S", nu_s).with("nu_T", nu_t))
    }

    pub fn weighted(&self, s: &VertexSet, t: &VertexSet) -> MixingReport {
        let w = self.weights();
        let b = w.b_tilde(self.g, s, t);
        let (rs, rt) = (w.rho_norm_sq(s), w.rho_norm_sq(t));
        let (rsb, rtb) = (w.rho_norm_sq(&s.complement()), w.rho_norm_sq(&t.complement()));
        let lhs = (b - self.spec.lambda1() * rs * rt).abs();
        let rhs = self.spec.lambda * (rs * rt * rsb * rtb).sqrt();
        MixingReport::new(TheoremId::Weighted, s, t, lhs, rhs).with("b_tilde", b)
    }

    /// `S` and `T` must lie on opposite sides of a biregular bipartite graph.
    pub fn biregular(&self, s: &VertexSet, t: &VertexSet) -> Result<MixingReport> {
        let b = self.biregular.as_ref().map_err(|why| inapplicable(why.clone()))?;
        let s_left = if s.is_empty() { t.is_subset(&b.right) } else { s.is_subset(&b.left) };
        let (side_s, side_t) = if s_left { (&b.left, &b.right) } else { (&b.right, &b.left) };
        if !s.is_subset(side_s) || !t.is_subset(side_t) {
            return Err(inapplicable("S and T must lie on opposite sides of the bipartition"));
        }
        let (l, r) = (b.left.len() as f64, b.right.len() as f64);
        let edges = self.g.edge_count() as f64;
        let (ls, lt) = (s.len() as f64, t.len() as f64);
        let (lsb, ltb) = ((side_s.len() - s.len()) as f64, (side_t.len() - t.len()) as f64);
        let lambda2 = self.spec.eigenvalues()[1];
        let lhs = (self.e(s, t) * l * r / edges - ls * lt).abs();
        let rhs = lambda2 / ((b.d_left * b.d_right) as f64).sqrt() * sqrt0(ls * lt * lsb * ltb);
        Ok(MixingReport::new(TheoremId::Biregular, s, t, lhs, rhs).with("lambda2", lambda2))
    }

    /// Two-sided bound for `p(λ₁)⟨χ_S,ν⟩² − P(S,S)`, reported as distance
    /// from the centre of the interval against its half-width.
    pub fn poly_quadratic(&self, ps: &PolySpectrum, s: &VertexSet) -> MixingReport {
        let w = self.weights();
        let a = w.mass(s);
        let x = w.residual_sq(s);
        let value = ps.p_lambda1 * a * a - ps.bilinear_sets(s, s);
        let lower = -ps.big_lambda_p * x;
        let upper = -ps.lambda_p * x;
        let lhs = (value - 0.5 * (lower + upper)).abs();
        let rhs = 0.5 * (upper - lower);
        MixingReport::new(TheoremId::PolyQuadratic, s, s, lhs, rhs)
            .with("lower", lower)
            .with("value", value)
            .with("upper", upper)
    }

    pub fn poly_bilinear(&self, ps: &PolySpectrum, s: &VertexSet, t: &VertexSet) -> MixingReport {
        let report = self.poly_deviation(TheoremId::PolyBilinear, ps, s, t);
        match ps.bilinear_condition(&self.spec) {
            Some(why) => report.not_applicable(why),
            None => report,
        }
    }

    /// Walk counts of length `1..=k` against the Perron main term. `ps` must
    /// come from [`Polynomial::walks`].
    pub fn kwalk_perron(&self, ps: &PolySpectrum, s: &VertexSet, t: &VertexSet) -> MixingReport {
        self.poly_deviation(TheoremId::KwalkPerron, ps, s, t)
    }

    fn poly_deviation(&self, id: TheoremId, ps: &PolySpectrum, s: &VertexSet, t: &VertexSet) -> MixingReport {
        let w = self.weights();
        let (a_s, a_t) = (w.mass(s), w.mass(t));
        let (ls, lt) = (s.len() as f64, t.len() as f64);
        let main = ps.bilinear_sets(s, t);
        let lhs = (main - ps.p_lambda1 * a_s * a_t).abs();
        let rhs = ps.p_lambda.abs() * (w.residual_sq(s) * w.residual_sq(t)).sqrt();
        MixingReport::new(id, s, t, lhs, rhs).with("main", main).with("outer", ps.p_lambda.abs() * (ls * lt).sqrt())
    }

    /// Regular-graph walk bound; `k = 1` is the classical mixing lemma.
    pub fn kwalk_regular(&self, ps: &PolySpectrum, s: &VertexSet, t: &VertexSet) -> MixingReport {
        let g = self.g;
        let n = self.n();
        let d = g.max_degree() as f64;
        let (ls, lt) = (s.len() as f64, t.len() as f64);
        let main = ps.bilinear_sets(s, t);
        let lhs = (main - ps.poly.eval(d) * ls * lt / n).abs();
        let rhs = ps.p_lambda.abs() * sqrt0(ls * lt * (1.0 - ls / n) * (1.0 - lt / n));
        let report = MixingReport::new(TheoremId::KwalkRegular, s, t, lhs, rhs)
            .with("main", main)
            .with("outer", ps.p_lambda.abs() * (ls * lt).sqrt());
        if g.is_regular() {
            report
        } else {
            report.not_applicable("graph is not regular")
        }
    }

    pub fn is_biregular(&self) -> bool {
        self.biregular.is_ok()
    }

    /// `(L, R)` when the graph is biregular.
    pub fn biregular_sides(&self) -> Option<(&VertexSet, &VertexSet)> {
        self.biregular.as_ref().ok().map(|b| (&b.left, &b.right))
    }
}

fn biregular_structure(g: &Graph) -> std::result::Result<Biregular, String> {
    let colour = g.bipartition().ok_or_else(|| "graph is not bipartite".to_string())?;
    let mut left = VertexSet::empty(g.n());
    for v in (0..g.n()).filter(|&v| !colour[v]) {
        left.insert(v);
    }
    let right = left.complement();
    let side_degree = |side: &VertexSet, name: &str| {
        let mut degs = side.iter().map(|v| g.degree(v));
        let d = degs.next().ok_or_else(|| format!("side {name} is empty"))?;
        match degs.find(|&x| x != d) {
            Some(x) => Err(format!("graph is not biregular: side {name} has degrees {d} and {x}")),
            None => Ok(d),
        }
    };
    let d_left = side_degree(&left, "L")?;
    let d_right = side_degree(&right, "R")?;
    Ok(Biregular { left, right, d_left, d_right })
}

fn laplacian_report(g: &Graph, mu: &[f64], s: &VertexSet, t: &VertexSet) -> MixingReport {
    let n = g.n() as f64;
    let (mu1, mu_top) = (mu[1.min(mu.len() - 1)], mu[mu.len() - 1]);
    let st = s.intersection(t);
    let (ls, lt) = (s.len() as f64, t.len() as f64);
    let lhs = (g.e(s, t) as f64 + 0.5 * (mu1 + mu_top) * (st.len() as f64 - ls * lt / n) - g.volume(&st) as f64).abs();
    let rhs = (mu_top - mu1) / (2.0 * n) * sqrt0(ls * lt * (n - ls) * (n - lt));
    MixingReport::new(TheoremId::Laplacian, s, t, lhs, rhs)
}

pub fn eml_volume(g: &Graph, s: &VertexSet, t: &VertexSet, variant: VolumeVariant) -> Result<MixingReport> {
    check_universe(g.n(), &[s, t])?;
    Ok(EmlContext::new(g)?.volume(variant, s, t))
}

/// Needs no connectivity.
pub fn eml_laplacian(g: &Graph, s: &VertexSet, t: &VertexSet) -> Result<MixingReport> {
    check_universe(g.n(), &[s, t])?;
    if g.n() < 2 {
        return Err(inapplicable("Laplacian mixing bound needs at least two vertices"));
    }
    let mut mu = linalg::symmetric_eigenvalues(&crate::spectra::laplacian(g))?;
    mu.reverse();
    Ok(laplacian_report(g, &mu, s, t))
}

pub fn eml_perron(g: &Graph, s: &VertexSet, t: &VertexSet) -> Result<MixingReport> {
    check_universe(g.n(), &[s, t])?;
    Ok(EmlContext::new(g)?.perron(s, t))
}

pub fn eml_perron_equitable(g: &Graph, p: &Partition, s: &VertexSet, t: &VertexSet) -> Result<MixingReport> {
    check_universe(g.n(), &[s, t])?;
    let ctx = EmlContext::new(g)?;
    let cells = ctx.equitable_cells(p)?;
    ctx.perron_equitable(&cells, s, t)
}

pub fn eml_weighted(g: &Graph, s: &VertexSet, t: &VertexSet) -> Result<MixingReport> {
    check_universe(g.n(), &[s, t])?;
    Ok(EmlContext::new(g)?.weighted(s, t))
}

pub fn eml_biregular(g: &Graph, s: &VertexSet, t: &VertexSet) -> Result<MixingReport> {
    check_universe(g.n(), &[s, t])?;
    EmlContext::new(g)?.biregular(s, t)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyMode {
    Quadratic,
    Bilinear,
}

/// Quadratic mode requires `S = T`.
pub fn eml_polynomial(g: &Graph, p: &Polynomial, s: &VertexSet, t: &VertexSet, mode: PolyMode) -> Result<MixingReport> {
    check_universe(g.n(), &[s, t])?;
    let ctx = EmlContext::new(g)?;
    let ps = ctx.polynomial(p);
    match mode {
        PolyMode::Quadratic if s != t => Err(input("quadratic polynomial bound needs S = T")),
        PolyMode::Quadratic => Ok(ctx.poly_quadratic(&ps, s)),
        PolyMode::Bilinear => Ok(ctx.poly_bilinear(&ps, s, t)),
    }
}

pub fn eml_kwalks(g: &Graph, k: usize, s: &VertexSet, t: &VertexSet) -> Result<MixingReport> {
    check_universe(g.n(), &[s, t])?;
    if k == 0 {
        return Err(input("walk length k must be at least 1"));
    }
    let ctx = EmlContext::new(g)?;
    let ps = ctx.polynomial(&Polynomial::walks(k));
    Ok(ctx.kwalk_perron(&ps, s, t).with("k", k as f64))
}
