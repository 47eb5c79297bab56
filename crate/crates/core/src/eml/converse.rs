//! Discrepancy constants for the converse direction.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::EmlContext;
use crate::error::Result;
use crate::graph::{Graph, VertexSet};

#[derive(Clone, Debug, Serialize)]
pub struct ConverseReport {
    /// Max over disjoint nonempty `S, T` of
    /// `|e(S,T) − λ₁⟨χ_S,ν⟩⟨χ_T,ν⟩| / √(|S||T|)`.
    pub alpha_perron: f64,
    /// Max over nonempty `S, T` of
    /// `|b̃*_ST − λ₁‖ρ(S)‖²‖ρ(T)‖²| / (‖ρ(S)‖‖ρ(T)‖)`.
    pub alpha_weighted: f64,
    pub lambda: f64,
    pub lambda1: f64,
    pub avg_degree: f64,
    /// `λ / (α (ln(d̄/α) + 1))`; `None` when `α = 0`.
    pub ratio_perron: Option<f64>,
    /// `(λ/λ₁) / (α (ln(1/α) + 1))`; `None` when `α = 0`.
    pub ratio_weighted: Option<f64>,
    /// `false` means the alphas are lower bounds from sampling.
    pub exhaustive: bool,
    pub pairs_examined: usize,
    pub witness_perron: Option<(VertexSet, VertexSet)>,
    pub witness_weighted: Option<(VertexSet, VertexSet)>,
}

type Best = Option<(f64, Vec<usize>, Vec<usize>)>;

fn better(a: Best, b: Best) -> Best {
    match (a, b) {
        (Some(x), Some(y)) => {
            let ord = x.0.total_cmp(&y.0).then_with(|| y.1.cmp(&x.1)).then_with(|| y.2.cmp(&x.2));
            Some(if ord.is_lt() { y } else { x })
        }
        (a, b) => a.or(b),
    }
}

fn perron_score(ctx: &EmlContext<'_>, s: &VertexSet, t: &VertexSet) -> f64 {
    let w = ctx.weights();
    let dev = ctx.graph().e(s, t) as f64 - ctx.spectra().lambda1() * w.mass(s) * w.mass(t);
    dev.abs() / ((s.len() * t.len()) as f64).sqrt()
}

fn weighted_score(ctx: &EmlContext<'_>, s: &VertexSet, t: &VertexSet) -> f64 {
    let w = ctx.weights();
    let (rs, rt) = (w.rho_norm_sq(s), w.rho_norm_sq(t));
    let dev = w.b_tilde(ctx.graph(), s, t) - ctx.spectra().lambda1() * rs * rt;
    dev.abs() / (rs * rt).sqrt()
}

fn ratio(num: f64, alpha: f64, scale: f64) -> Option<f64> {
    (alpha > 0.0).then(|| num / (alpha * ((scale / alpha).ln() + 1.0)))
}

/// Exhaustive for `n ≤ max_exhaustive`; otherwise `samples` seeded random
/// pairs give lower bounds on both constants.
pub fn converse_alpha(g: &Graph, max_exhaustive: usize, samples: usize, seed: u64) -> Result<ConverseReport> {
    let ctx = EmlContext::new(g)?;
    let n = g.n();
    let exhaustive = n <= max_exhaustive && n < 64;
    let pairs: Vec<(VertexSet, VertexSet)> = if exhaustive {
        let full = 1u64 << n;
        (1..full)
            .flat_map(|s| (1..full).map(move |t| (VertexSet::from_mask(n, s), VertexSet::from_mask(n, t))))
            .collect()
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let draw = |rng: &mut ChaCha8Rng| loop {
            let mut s = VertexSet::empty(n);
            (0..n).filter(|_| rng.gen::<bool>()).for_each(|v| s.insert(v));
            if !s.is_empty() {
                return s;
            }
        };
        (0..samples)
            .map(|_| {
                let s = draw(&mut rng);
                let t = draw(&mut rng);
                (s, t)
            })
            .collect()
    };

    let (best_p, best_w) = pairs
        .par_iter()
        .map(|(s, t)| {
            let p = s
                .is_disjoint(t)
                .then(|| (perron_score(&ctx, s, t), s.to_vec(), t.to_vec()));
            let w = Some((weighted_score(&ctx, s, t), s.to_vec(), t.to_vec()));
            (p, w)
        })
        .reduce(|| (None, None), |a, b| (better(a.0, b.0), better(a.1, b.1)));

    let spec = ctx.spectra();
    let to_sets = |b: &Best| {
        b.as_ref().map(|(_, s, t)| {
            (VertexSet::from_indices(n, s.iter().copied()).unwrap(), VertexSet::from_indices(n, t.iter().copied()).unwrap())
        })
    };
    let alpha_perron = best_p.as_ref().map_or(0.0, |b| b.0);
    let alpha_weighted = best_w.as_ref().map_or(0.0, |b| b.0);
    Ok(ConverseReport {
        alpha_perron,
        alpha_weighted,
        lambda: spec.lambda,
        lambda1: spec.lambda1(),
        avg_degree: g.avg_degree(),
        ratio_perron: ratio(spec.lambda, alpha_perron, g.avg_degree()),
        ratio_weighted: ratio(spec.lambda / spec.lambda1(), alpha_weighted, 1.0),
        exhaustive,
        pairs_examined: pairs.len(),
        witness_perron: to_sets(&best_p),
        witness_weighted: to_sets(&best_w),
    })
}
