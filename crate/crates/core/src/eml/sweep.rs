//! Exhaustive or seeded-sample verification of the evaluators over set pairs.

use std::cmp::Ordering;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::{EmlContext, TOL_SLACK, MatrixEmlInput, MixingReport, TheoremId, VolumeVariant};
use crate::error::Result;
use crate::graph::{Graph, VertexSet};
use crate::polynomial::Polynomial;
use crate::weights::{coarsest_equitable_refinement, Partition};

#[derive(Clone, Debug)]
pub struct SweepConfig {
    pub theorems: Vec<TheoremId>,
    /// Largest `n` enumerated exhaustively (all `4^n` ordered pairs).
    pub max_exhaustive: usize,
    pub samples: usize,
    pub seed: u64,
    /// Walk length for the walk bounds and default polynomial.
    pub k: usize,
    /// Polynomial for the polynomial bounds; defaults to `x^{(k)}`.
    pub poly: Option<Polynomial>,
    /// Relative slack tolerance for counting violations.
    pub tol_slack: f64,
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self { theorems: TheoremId::ALL.to_vec(), max_exhaustive: 7, samples: 10_000, seed: 42, k: 2, poly: None, tol_slack: TOL_SLACK }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum SweepMode {
    Exhaustive,
    Sampled { samples: usize, seed: u64 },
}

#[derive(Clone, Debug, Serialize)]
pub struct TheoremSummary {
    pub theorem: TheoremId,
    pub evaluated: usize,
    pub inapplicable: usize,
    pub tight: usize,
    pub violations: usize,
    pub min_slack: Option<f64>,
    pub min_slack_at: Option<(VertexSet, VertexSet)>,
    pub worst_violation: Option<MixingReport>,
    /// Set when the theorem does not apply to the graph at all.
    pub skipped: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SweepSummary {
    pub n: usize,
    pub mode: SweepMode,
    pub theorems: Vec<TheoremSummary>,
    pub violations: usize,
}

impl SweepSummary {
    pub fn theorem(&self, id: TheoremId) -> Option<&TheoremSummary> {
        self.theorems.iter().find(|t| t.theorem == id)
    }
}

/// Orders reports by slack, then by `(S, T)` as sorted index lists.
fn report_order(a: &MixingReport, b: &MixingReport) -> Ordering {
    a.slack
        .total_cmp(&b.slack)
        .then_with(|| a.s.to_vec().cmp(&b.s.to_vec()))
        .then_with(|| a.t.to_vec().cmp(&b.t.to_vec()))
}

fn min_report(a: Option<MixingReport>, b: Option<MixingReport>) -> Option<MixingReport> {
    match (a, b) {
        (Some(a), Some(b)) => Some(if report_order(&a, &b) == Ordering::Greater { b } else { a }),
        (a, b) => a.or(b),
    }
}

#[derive(Clone, Debug, Default)]
struct Acc {
    evaluated: usize,
    inapplicable: usize,
    tight: usize,
    violations: usize,
    best: Option<MixingReport>,
    worst_violation: Option<MixingReport>,
}

impl Acc {
    fn push(mut self, report: Option<MixingReport>, tol: f64) -> Self {
        self.evaluated += 1;
        let Some(r) = report.filter(|r| r.applicable) else {
            self.inapplicable += 1;
            return self;
        };
        self.tight += r.tight as usize;
        if r.violated_at(tol) {
            self.violations += 1;
            self.worst_violation = min_report(self.worst_violation.take(), Some(r.clone()));
        }
        self.best = min_report(self.best.take(), Some(r));
        self
    }

    fn merge(self, other: Self) -> Self {
        Self {
            evaluated: self.evaluated + other.evaluated,
            inapplicable: self.inapplicable + other.inapplicable,
            tight: self.tight + other.tight,
            violations: self.violations + other.violations,
            best: min_report(self.best, other.best),
            worst_violation: min_report(self.worst_violation, other.worst_violation),
        }
    }

    fn finish(self, theorem: TheoremId) -> TheoremSummary {
        TheoremSummary {
            theorem,
            evaluated: self.evaluated,
            inapplicable: self.inapplicable,
            tight: self.tight,
            violations: self.violations,
            min_slack: self.best.as_ref().map(|r| r.slack),
            min_slack_at: self.best.map(|r| (r.s, r.t)),
            worst_violation: self.worst_violation,
            skipped: None,
        }
    }
}

fn skipped(theorem: TheoremId, why: String) -> TheoremSummary {
    TheoremSummary {
        theorem,
        evaluated: 0,
        inapplicable: 0,
        tight: 0,
        violations: 0,
        min_slack: None,
        min_slack_at: None,
        worst_violation: None,
        skipped: Some(why),
    }
}

/// All subsets of `0..n` in reflected Gray-code order.
fn gray_subsets(n: usize) -> Vec<VertexSet> {
    (0u64..1 << n).map(|i| VertexSet::from_mask(n, i ^ (i >> 1))).collect()
}

fn random_subset(rng: &mut ChaCha8Rng, n: usize) -> VertexSet {
    let mut s = VertexSet::empty(n);
    for v in 0..n {
        if rng.gen::<bool>() {
            s.insert(v);
        }
    }
    s
}

struct Sample {
    s: VertexSet,
    t: VertexSet,
    cell_s: usize,
    cell_t: usize,
}

/// Evaluates each requested theorem on every ordered pair `(S, T)` when
/// `n ≤ max_exhaustive`, otherwise on `samples` seeded random pairs.
/// Single-set theorems use each `S` once. The result does not depend on
/// evaluation order.
pub fn sweep_verify(g: &Graph, config: &SweepConfig) -> Result<SweepSummary> {
    let ctx = EmlContext::new(g)?;
    let n = g.n();
    let exhaustive = n <= config.max_exhaustive && n < 64;
    let walks = ctx.polynomial(&Polynomial::walks(config.k.max(1)));
    let poly = match &config.poly {
        Some(p) => ctx.polynomial(p),
        None => walks.clone(),
    };
    let ones = vec![1.0; n];
    let super_input = MatrixEmlInput::new(ctx.adjacency().clone(), &ones, &ctx.spectra().perron)?;
    let cells = ctx.equitable_cells(&coarsest_equitable_refinement(g, &Partition::single(n)))?;
    let partition = cells.partition().clone();

    let samples: Vec<Sample> = if exhaustive {
        Vec::new()
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
        (0..config.samples)
            .map(|_| {
                let s = random_subset(&mut rng, n);
                let t = random_subset(&mut rng, n);
                let cell_s = rng.gen_range(0..partition.m());
                let cell_t = rng.gen_range(0..partition.m());
                Sample { s, t, cell_s, cell_t }
            })
            .collect()
    };
    let subsets = if exhaustive { gray_subsets(n) } else { Vec::new() };
    let all_pairs = || -> Vec<(VertexSet, VertexSet)> {
        if exhaustive {
            subsets.iter().flat_map(|s| subsets.iter().map(move |t| (s.clone(), t.clone()))).collect()
        } else {
            samples.iter().map(|x| (x.s.clone(), x.t.clone())).collect()
        }
    };
    let empty = VertexSet::empty(n);

    let mut summaries = Vec::new();
    for &theorem in &config.theorems {
        let pairs: Vec<(VertexSet, VertexSet)> = match theorem {
            t if t.single_set() => {
                if exhaustive {
                    subsets.iter().map(|s| (s.clone(), s.clone())).collect()
                } else {
                    samples.iter().map(|x| (x.s.clone(), x.s.clone())).collect()
                }
            }
            TheoremId::Biregular => {
                let Some((l, r)) = ctx.biregular_sides() else {
                    summaries.push(skipped(theorem, ctx.biregular(&empty, &empty).unwrap_err().to_string()));
                    continue;
                };
                if exhaustive {
                    all_pairs().into_iter().filter(|(s, t)| s.is_subset(l) && t.is_subset(r)).collect()
                } else {
                    samples.iter().map(|x| (x.s.intersection(l), x.t.intersection(r))).collect()
                }
            }
            TheoremId::PerronEquitable => {
                if exhaustive {
                    all_pairs()
                        .into_iter()
                        .filter(|(s, t)| partition.containing_cell(s).is_some() && partition.containing_cell(t).is_some())
                        .collect()
                } else {
                    let c = partition.cells();
                    samples.iter().map(|x| (x.s.intersection(&c[x.cell_s]), x.t.intersection(&c[x.cell_t]))).collect()
                }
            }
            TheoremId::KwalkRegular if !g.is_regular() => {
                summaries.push(skipped(theorem, "graph is not regular".into()));
                continue;
            }
            _ => all_pairs(),
        };

        let eval = |s: &VertexSet, t: &VertexSet| -> Option<MixingReport> {
            match theorem {
                TheoremId::Super => super::super_eml(&super_input, s, t).ok(),
                TheoremId::VolHaemers => Some(ctx.volume(VolumeVariant::Haemers, s, t)),
                TheoremId::VolChung => Some(ctx.volume(VolumeVariant::Chung, s, t)),
                TheoremId::VolButler => Some(ctx.volume(VolumeVariant::ButlerCor, s, t)),
                TheoremId::KsBt => Some(ctx.volume(VolumeVariant::KsBt, s, t)),
                TheoremId::Laplacian => Some(ctx.laplacian(s, t)),
                TheoremId::Perron => Some(ctx.perron(s, t)),
                TheoremId::PerronEquitable => ctx.perron_equitable(&cells, s, t).ok(),
                TheoremId::Weighted => Some(ctx.weighted(s, t)),
                TheoremId::Biregular => ctx.biregular(s, t).ok(),
                TheoremId::PolyQuadratic => Some(ctx.poly_quadratic(&poly, s)),
                TheoremId::PolyBilinear => Some(ctx.poly_bilinear(&poly, s, t)),
                TheoremId::KwalkRegular => Some(ctx.kwalk_regular(&walks, s, t)),
                TheoremId::KwalkPerron => Some(ctx.kwalk_perron(&walks, s, t)),
            }
        };
        let acc = pairs
            .par_iter()
            .fold(Acc::default, |acc, (s, t)| acc.push(eval(s, t), config.tol_slack))
            .reduce(Acc::default, Acc::merge);
        summaries.push(acc.finish(theorem));
    }

    let violations = summaries.iter().map(|s| s.violations).sum();
    let mode = if exhaustive { SweepMode::Exhaustive } else { SweepMode::Sampled { samples: config.samples, seed: config.seed } };
    Ok(SweepSummary { n, mode, theorems: summaries, violations })
}
