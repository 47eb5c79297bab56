//! Spectral bounds on zero forcing, vertex integrity, routing number and
//! `k`-independence, with integer rounding and applicability checks.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{inapplicable, input, Result};
use crate::graph::Graph;
use crate::polynomial::{PolySpectrum, Polynomial};
use crate::spectra::SpectralData;

/// Slack used when rounding, so that values equal to an integer up to
/// floating error round to that integer.
pub const ROUND_EPS: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Parameter {
    ZeroForcing,
    Integrity,
    Routing,
    KIndependence,
}

impl Parameter {
    pub fn is_lower(self) -> bool {
        matches!(self, Parameter::ZeroForcing | Parameter::Integrity)
    }

    pub fn name(self) -> &'static str {
        match self {
            Parameter::ZeroForcing => "zero-forcing",
            Parameter::Integrity => "integrity",
            Parameter::Routing => "routing",
            Parameter::KIndependence => "k-independence",
        }
    }
}

impl fmt::Display for Parameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Parameter {
    type Err = crate::Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().replace('_', "-").as_str() {
            "zero-forcing" | "z" => Ok(Parameter::ZeroForcing),
            "integrity" | "iota" => Ok(Parameter::Integrity),
            "routing" | "rt" => Ok(Parameter::Routing),
            "k-independence" | "alpha-k" => Ok(Parameter::KIndependence),
            _ => Err(input(format!("unknown parameter '{s}'"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Variant {
    #[serde(rename = "i")]
    I,
    #[serde(rename = "ii")]
    Ii,
    #[serde(rename = "iii")]
    Iii,
    #[serde(rename = "REGULAR")]
    Regular,
    #[serde(rename = "CHUNG_SIGMA")]
    ChungSigma,
    #[serde(rename = "CHUNG_SIGMA_SHARPENED")]
    ChungSigmaSharpened,
    #[serde(rename = "PERRON")]
    Perron,
    #[serde(rename = "IRREGULAR")]
    Irregular,
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Variant::I => "i",
            Variant::Ii => "ii",
            Variant::Iii => "iii",
            Variant::Regular => "REGULAR",
            Variant::ChungSigma => "CHUNG_SIGMA",
            Variant::ChungSigmaSharpened => "CHUNG_SIGMA_SHARPENED",
            Variant::Perron => "PERRON",
            Variant::Irregular => "IRREGULAR",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundReport {
    pub parameter: Parameter,
    pub variant: Variant,
    pub value: f64,
    /// Ceiling for lower bounds, floor for upper bounds; `None` if `value` is not finite.
    pub rounded: Option<i64>,
    pub applicable: bool,
    pub reason: Option<String>,
    /// Lower bound raised to the trivial bound 1.
    pub clamped: bool,
    pub oracle: Option<u64>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub extras: BTreeMap<&'static str, f64>,
}

impl BoundReport {
    fn new(parameter: Parameter, variant: Variant, value: f64) -> Self {
        let (rounded, clamped) = if !value.is_finite() {
            (None, false)
        } else if parameter.is_lower() {
            let r = round_lower(value);
            (Some(r.max(1)), r < 1)
        } else {
            (Some(round_upper(value)), false)
        };
        Self { parameter, variant, value, rounded, applicable: true, reason: None, clamped, oracle: None, extras: BTreeMap::new() }
    }

    fn fail(mut self, reason: impl Into<String>) -> Self {
        self.applicable = false;
        self.reason = Some(reason.into());
        self
    }

    fn with(mut self, key: &'static str, v: f64) -> Self {
        self.extras.insert(key, v);
        self
    }

    pub fn with_oracle(mut self, value: u64) -> Self {
        self.oracle = Some(value);
        self
    }

    pub fn is_lower(&self) -> bool {
        self.parameter.is_lower()
    }

    /// `false` only when applicable, an oracle is attached and the rounded
    /// bound is on the wrong side of it.
    pub fn consistent(&self) -> bool {
        match (self.applicable, self.oracle, self.rounded) {
            (true, Some(o), Some(r)) => {
                if self.is_lower() {
                    r <= o as i64
                } else {
                    r >= o as i64
                }
            }
            _ => true,
        }
    }
}

pub fn round_lower(value: f64) -> i64 {
    (value - ROUND_EPS).ceil() as i64
}

pub fn round_upper(value: f64) -> i64 {
    (value + ROUND_EPS).floor() as i64
}

/// `n(1 − 2σΔ/(δ(δ/Δ + σ)))`.
pub fn formula_i(n: f64, sigma: f64, max_degree: f64, min_degree: f64) -> f64 {
    n * (1.0 - 2.0 * sigma * max_degree / (min_degree * (min_degree / max_degree + sigma)))
}

/// `n(1 − 2λ/(n(λ + λ₁)ν_min²))`.
pub fn formula_ii(n: f64, lambda: f64, lambda1: f64, nu_min: f64) -> f64 {
    n * (1.0 - 2.0 * lambda / (n * (lambda + lambda1) * nu_min * nu_min))
}

/// `n(1 − 2λ/(λ₁(ν_min/ν_max)⁴ + λ))`.
pub fn formula_iii(n: f64, lambda: f64, lambda1: f64, nu_min: f64, nu_max: f64) -> f64 {
    n * (1.0 - 2.0 * lambda / (lambda1 * (nu_min / nu_max).powi(4) + lambda))
}

/// `n(1 − 2λ/(d + λ))`.
pub fn formula_regular(n: f64, lambda: f64, d: f64) -> f64 {
    n * (1.0 - 2.0 * lambda / (d + lambda))
}

/// Whether `σ < 1/(2k² − k)` for `k = Δ/δ`; equivalent to variant (i) being positive.
pub fn variant_i_positive(g: &Graph, spec: &SpectralData) -> bool {
    spec.sigma < positivity_threshold(g)
}

fn positivity_threshold(g: &Graph) -> f64 {
    let k = g.max_degree() as f64 / g.min_degree() as f64;
    1.0 / (2.0 * k * k - k)
}

fn connected_spectra(g: &Graph) -> Result<SpectralData> {
    if !g.is_connected() {
        return Err(inapplicable("the bound needs a connected graph"));
    }
    SpectralData::new(g)
}

fn lower_bounds(parameter: Parameter, g: &Graph, spec: &SpectralData) -> Vec<BoundReport> {
    let n = g.n() as f64;
    let (dmax, dmin) = (g.max_degree() as f64, g.min_degree() as f64);
    let (l, l1) = (spec.lambda, spec.lambda1());
    let mut out = vec![
        BoundReport::new(parameter, Variant::I, formula_i(n, spec.sigma, dmax, dmin))
            .with("ratio", dmax / dmin)
            .with("positivity_threshold", positivity_threshold(g)),
        BoundReport::new(parameter, Variant::Ii, formula_ii(n, l, l1, spec.nu_min)),
        BoundReport::new(parameter, Variant::Iii, formula_iii(n, l, l1, spec.nu_min, spec.nu_max)),
    ];
    if g.is_regular() {
        out.push(BoundReport::new(parameter, Variant::Regular, formula_regular(n, l, dmax)));
    }
    out
}

/// Variants (i), (ii), (iii) and, on regular graphs, the regular form.
pub fn zero_forcing_lb(g: &Graph) -> Result<Vec<BoundReport>> {
    Ok(lower_bounds(Parameter::ZeroForcing, g, &connected_spectra(g)?))
}

pub fn zero_forcing_lb_with(g: &Graph, spec: &SpectralData) -> Vec<BoundReport> {
    lower_bounds(Parameter::ZeroForcing, g, spec)
}

/// Same formulas as [`zero_forcing_lb`], reported for vertex integrity.
pub fn integrity_lb(g: &Graph) -> Result<Vec<BoundReport>> {
    Ok(lower_bounds(Parameter::Integrity, g, &connected_spectra(g)?))
}

pub fn integrity_lb_with(g: &Graph, spec: &SpectralData) -> Vec<BoundReport> {
    lower_bounds(Parameter::Integrity, g, spec)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RoutingVariant {
    ChungSigma,
    ChungSigmaSharpened,
    Perron,
}

pub fn routing_ub(g: &Graph, variant: RoutingVariant) -> Result<BoundReport> {
    Ok(routing_ub_with(g, &connected_spectra(g)?, variant))
}

/// Upper bound with `c = δ/n`; inapplicable (value still reported) when the
/// spectral hypothesis fails.
pub fn routing_ub_with(g: &Graph, spec: &SpectralData, variant: RoutingVariant) -> BoundReport {
    let n = g.n() as f64;
    let c = g.min_degree() as f64 / n;
    let sigma = spec.sigma;
    let report = match variant {
        RoutingVariant::ChungSigma => {
            let margin = c * c - sigma;
            let r = BoundReport::new(Parameter::Routing, Variant::ChungSigma, 12.0 / (c * c * margin));
            if margin > 0.0 {
                r
            } else {
                r.fail(format!("sigma = {sigma} is not below c^2 = {}", c * c))
            }
        }
        RoutingVariant::ChungSigmaSharpened => {
            let threshold = (c * n).powi(2) / g.volume(&g.vertex_set()) as f64;
            let margin = threshold - sigma;
            let r = BoundReport::new(Parameter::Routing, Variant::ChungSigmaSharpened, 12.0 / (c * c * margin));
            if margin > 0.0 {
                r
            } else {
                r.fail(format!("sigma = {sigma} is not below delta^2/vol(V) = {threshold}"))
            }
        }
        RoutingVariant::Perron => {
            let threshold = spec.lambda1() * c * n * spec.nu_min * spec.nu_min;
            let margin = threshold - spec.lambda;
            let r = BoundReport::new(Parameter::Routing, Variant::Perron, 12.0 * n / (c * margin));
            if margin > 0.0 {
                r
            } else {
                r.fail(format!("lambda = {} is not below lambda_1 c n nu_min^2 = {threshold}", spec.lambda))
            }
        }
    };
    report.with("c", c)
}

/// All three routing forms.
pub fn routing_bounds(g: &Graph) -> Result<Vec<BoundReport>> {
    let spec = connected_spectra(g)?;
    Ok([RoutingVariant::ChungSigma, RoutingVariant::ChungSigmaSharpened, RoutingVariant::Perron]
        .into_iter()
        .map(|v| routing_ub_with(g, &spec, v))
        .collect())
}

pub fn k_independence_ub(g: &Graph, k: usize, p: Option<&Polynomial>) -> Result<Vec<BoundReport>> {
    k_independence_ub_with(g, &connected_spectra(g)?, k, p)
}

/// Regular form `n(W − λ(p))/(p(λ₁) − λ(p))` and the `ν_min` form; `p`
/// defaults to `x + x² + … + x^k`.
pub fn k_independence_ub_with(g: &Graph, spec: &SpectralData, k: usize, p: Option<&Polynomial>) -> Result<Vec<BoundReport>> {
    if k == 0 {
        return Err(input("k must be at least 1"));
    }
    let p = p.cloned().unwrap_or_else(|| Polynomial::walks(k));
    if p.degree() > k {
        return Err(input(format!("polynomial degree {} exceeds k = {k}", p.degree())));
    }
    let ps = PolySpectrum::new(&p, &g.adjacency_matrix(), spec);
    let tol = spec.tol() * ps.p_lambda1.abs().max(1.0);
    if ps.p_lambda1 <= ps.big_lambda_p + tol {
        return Err(inapplicable(format!(
            "p(lambda_1) = {} does not exceed max p(lambda_i) = {}",
            ps.p_lambda1, ps.big_lambda_p
        )));
    }
    let n = g.n() as f64;
    let ratio = (ps.w - ps.lambda_p) / (ps.p_lambda1 - ps.lambda_p);
    let annotate = |r: BoundReport| {
        r.with("k", k as f64)
            .with("w", ps.w)
            .with("lambda_p", ps.lambda_p)
            .with("p_lambda1", ps.p_lambda1)
    };
    let mut regular = annotate(BoundReport::new(Parameter::KIndependence, Variant::Regular, n * ratio));
    if !g.is_regular() {
        regular = regular.fail("the graph is not regular");
    }
    let irregular = annotate(BoundReport::new(
        Parameter::KIndependence,
        Variant::Irregular,
        ratio / (spec.nu_min * spec.nu_min),
    ));
    Ok(vec![regular, irregular])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;

    #[test]
    fn petersen_regular_collapse() {
        let g = Family::Petersen.build().unwrap();
        let rs = zero_forcing_lb(&g).unwrap();
        assert_eq!(rs.len(), 4);
        for r in &rs {
            assert!((r.value - 2.0).abs() < 1e-9, "{r:?}");
            assert_eq!(r.rounded, Some(2));
        }
    }

    #[test]
    fn clamp_recorded() {
        let g = Family::Path(4).build().unwrap();
        let rs = zero_forcing_lb(&g).unwrap();
        for r in rs {
            assert!(r.value < 1.0);
            assert!(r.clamped);
            assert_eq!(r.rounded, Some(1));
        }
    }

    #[test]
    fn positivity_flag_matches_sign() {
        for g in crate::graph::connected_catalog(6).into_iter().filter(|g| g.n() > 1) {
            let spec = SpectralData::new(&g).unwrap();
            let i = &zero_forcing_lb_with(&g, &spec)[0];
            if (i.value).abs() > 1e-9 {
                assert_eq!(variant_i_positive(&g, &spec), i.value > 0.0);
            }
        }
    }

    #[test]
    fn disconnected_rejected() {
        let g = Graph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(matches!(zero_forcing_lb(&g), Err(crate::Error::Inapplicable(_))));
        assert!(matches!(integrity_lb(&g), Err(crate::Error::Inapplicable(_))));
    }

    #[test]
    fn routing_k10() {
        let g = Family::Complete(10).build().unwrap();
        let r = routing_ub(&g, RoutingVariant::Perron).unwrap();
        assert!(r.applicable);
        assert!((r.value - 120.0 / (0.9 * 7.1)).abs() < 1e-9);
        assert_eq!(r.rounded, Some(18));
        let s = routing_ub(&g, RoutingVariant::ChungSigmaSharpened).unwrap();
        assert!((s.value - r.value).abs() < 1e-9);
    }

    #[test]
    fn routing_p4_inapplicable() {
        let g = Family::Path(4).build().unwrap();
        for r in routing_bounds(&g).unwrap() {
            assert!(!r.applicable, "{r:?}");
        }
    }

    #[test]
    fn petersen_k_independence() {
        let g = Family::Petersen.build().unwrap();
        let rs = k_independence_ub(&g, 1, Some(&Polynomial::parse("0,1").unwrap())).unwrap();
        assert!((rs[0].value - 4.0).abs() < 1e-9);
        assert_eq!(rs[0].rounded, Some(4));
        assert!((rs[1].value - rs[0].value).abs() < 1e-9);
        let rs = k_independence_ub(&g, 2, None).unwrap();
        assert!((rs[0].value - 1.0).abs() < 1e-9);
        assert_eq!(rs[0].rounded, Some(1));
    }

    #[test]
    fn k_independence_checks() {
        let g = Family::Petersen.build().unwrap();
        assert!(matches!(k_independence_ub(&g, 1, Some(&Polynomial::walks(2))), Err(crate::Error::Input(_))));
        // Bipartite: p(x) = x has p(λₙ) = -λ₁, fine, but p(x) = x² ties λ₁ and λₙ.
        let c6 = Family::Cycle(6).build().unwrap();
        let sq = Polynomial::parse("0,0,1").unwrap();
        assert!(matches!(k_independence_ub(&c6, 2, Some(&sq)), Err(crate::Error::Inapplicable(_))));
        let star = Graph::from_edge_list(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let rs = k_independence_ub(&star, 1, None).unwrap();
        assert!(!rs[0].applicable);
        assert!(rs[1].applicable);
    }

    #[test]
    fn oracle_consistency_flag() {
        let g = Family::Petersen.build().unwrap();
        let r = zero_forcing_lb(&g).unwrap().remove(0);
        assert!(r.clone().with_oracle(5).consistent());
        assert!(!r.with_oracle(1).consistent());
    }
}
