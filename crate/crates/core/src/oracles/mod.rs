//! Exact exponential-time oracles for small graphs.
//!
//! Each oracle has a default size budget and a `_with_limit` variant that
//! overrides it; exceeding the budget is an [`Error::Budget`](crate::Error::Budget).

mod forcing;
mod grundy;
mod independence;
mod integrity;
mod routing;
mod walks;

pub use forcing::{
    forcing_closure, legal_forces, zero_forcing_exact, zero_forcing_exact_with_limit, ForcingState, ZERO_FORCING_LIMIT,
};
pub use grundy::{
    grundy_domination_exact, grundy_domination_exact_with_limit, grundy_dominating_sequence,
    grundy_dominating_sequence_with_limit, GrundySequence, GRUNDY_LIMIT,
};
pub use independence::{k_independence_exact, k_independence_exact_with_limit, K_INDEPENDENCE_LIMIT};
pub use integrity::{vertex_integrity_exact, vertex_integrity_exact_with_limit, INTEGRITY_LIMIT};
pub use routing::{
    routing_number_exact, routing_number_exact_with_limit, rt_of_permutation, rt_of_permutation_with_limit, ROUTING_LIMIT,
};
pub use walks::{walk_count_enumeration, walk_count_enumeration_with_limit, WALK_K_LIMIT, WALK_N_LIMIT};

use crate::error::{Error, Result};
use crate::graph::Graph;

fn check_budget(g: &Graph, what: &'static str, limit: usize) -> Result<()> {
    if g.n() > limit || g.n() > 63 {
        return Err(Error::Budget { what, limit: limit.min(63), n: g.n() });
    }
    Ok(())
}

/// Adjacency rows as bitmasks (`n ≤ 63`).
fn masks(g: &Graph) -> Vec<u64> {
    (0..g.n()).map(|u| g.neighbors(u).mask().expect("n checked against the budget")).collect()
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterates the set bits of a mask.
fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (m != 0).then(|| {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            v
        })
    })
}
