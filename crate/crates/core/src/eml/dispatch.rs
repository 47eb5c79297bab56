use super::{super_eml, EmlContext, MatrixEmlInput, MixingReport, TheoremId, VolumeVariant};
use crate::error::{inapplicable, Result};
use crate::graph::VertexSet;
use crate::polynomial::Polynomial;
use crate::weights::{coarsest_equitable_refinement, Partition};

/// Per-theorem inputs for [`evaluate`].
#[derive(Clone, Debug)]
pub struct EvalOptions {
    /// Walk length; also the default polynomial `x^{(k)}`.
    pub k: usize,
    pub poly: Option<Polynomial>,
    /// Equitable partition; defaults to the coarsest equitable refinement.
    pub partition: Option<Partition>,
    /// Weights for the general matrix bound; default `x = 1`, `y = ν`.
    pub super_x: Option<Vec<f64>>,
    pub super_y: Option<Vec<f64>>,
}

impl Default for EvalOptions {
    fn default() -> Self {
        Self { k: 2, poly: None, partition: None, super_x: None, super_y: None }
    }
}

/// Evaluates one theorem on one pair. Structural hypotheses that fail
/// (biregularity, regularity, equitability, cell membership) are errors;
/// spectral side conditions are reported on the returned report.
pub fn evaluate(
    ctx: &EmlContext<'_>,
    theorem: TheoremId,
    s: &VertexSet,
    t: &VertexSet,
    opts: &EvalOptions,
) -> Result<MixingReport> {
    super::check_universe(ctx.graph().n(), &[s, t])?;
    let n = ctx.graph().n();
    let poly = || opts.poly.clone().unwrap_or_else(|| Polynomial::walks(opts.k.max(1)));
    Ok(match theorem {
        TheoremId::Super => {
            let ones = vec![1.0; n];
            let x = opts.super_x.as_deref().unwrap_or(&ones);
            let y = opts.super_y.as_deref().unwrap_or(&ctx.spectra().perron);
            super_eml(&MatrixEmlInput::new(ctx.adjacency().clone(), x, y)?, s, t)?
        }
        TheoremId::VolHaemers => ctx.volume(VolumeVariant::Haemers, s, t),
        TheoremId::VolChung => ctx.volume(VolumeVariant::Chung, s, t),
        TheoremId::VolButler => ctx.volume(VolumeVariant::ButlerCor, s, t),
        TheoremId::KsBt => ctx.volume(VolumeVariant::KsBt, s, t),
        TheoremId::Laplacian => ctx.laplacian(s, t),
        TheoremId::Perron => ctx.perron(s, t),
        TheoremId::PerronEquitable => {
            let p = match &opts.partition {
                Some(p) => p.clone(),
                None => coarsest_equitable_refinement(ctx.graph(), &Partition::single(n)),
            };
            ctx.perron_equitable(&ctx.equitable_cells(&p)?, s, t)?
        }
        TheoremId::Weighted => ctx.weighted(s, t),
        TheoremId::Biregular => ctx.biregular(s, t)?,
        TheoremId::PolyQuadratic => ctx.poly_quadratic(&ctx.polynomial(&poly()), s),
        TheoremId::PolyBilinear => ctx.poly_bilinear(&ctx.polynomial(&poly()), s, t),
        TheoremId::KwalkRegular => {
            if !ctx.graph().is_regular() {
                return Err(inapplicable("graph is not regular"));
            }
            ctx.kwalk_regular(&ctx.polynomial(&Polynomial::walks(opts.k.max(1))), s, t)
        }
        TheoremId::KwalkPerron => ctx.kwalk_perron(&ctx.polynomial(&Polynomial::walks(opts.k.max(1))), s, t),
    })
}
