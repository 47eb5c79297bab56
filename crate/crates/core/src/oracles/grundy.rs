use std::collections::HashMap;

use serde::Serialize;

use super::{bits, check_budget, full_mask, masks};
use crate::error::Result;
use crate::graph::{Graph, VertexSet};

pub const GRUNDY_LIMIT: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GrundySequence {
    pub sequence: Vec<usize>,
    /// Vertices newly dominated at each step.
    pub footprints: Vec<VertexSet>,
}

impl GrundySequence {
    pub fn len(&self) -> usize {
        self.sequence.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sequence.is_empty()
    }
}

pub fn grundy_domination_exact(g: &Graph) -> Result<usize> {
    grundy_domination_exact_with_limit(g, GRUNDY_LIMIT)
}

pub fn grundy_domination_exact_with_limit(g: &Graph, limit: usize) -> Result<usize> {
    Ok(search(g, limit)?.len())
}

/// A longest sequence in which every vertex dominates something new.
pub fn grundy_dominating_sequence(g: &Graph) -> Result<GrundySequence> {
    search(g, GRUNDY_LIMIT)
}

pub fn grundy_dominating_sequence_with_limit(g: &Graph, limit: usize) -> Result<GrundySequence> {
    search(g, limit)
}

fn search(g: &Graph, limit: usize) -> Result<GrundySequence> {
    check_budget(g, "Grundy domination", limit)?;
    let n = g.n();
    let closed: Vec<u64> = masks(g).iter().enumerate().map(|(v, m)| m | 1 << v).collect();
    let mut memo = HashMap::new();
    best(&closed, 0, full_mask(n), &mut memo);

    let mut sequence = Vec::new();
    let mut footprints = Vec::new();
    let mut dominated = 0u64;
    loop {
        let remaining = memo.get(&dominated).copied().unwrap_or(0);
        if remaining == 0 {
            break;
        }
        let v = (0..n)
            .find(|&v| {
                let next = dominated | closed[v];
                next != dominated && 1 + memo.get(&next).copied().unwrap_or(0) == remaining
            })
            .expect("memo is consistent");
        let mut fp = VertexSet::empty(n);
        bits(closed[v] & !dominated).for_each(|w| fp.insert(w));
        footprints.push(fp);
        sequence.push(v);
        dominated |= closed[v];
    }
    Ok(GrundySequence { sequence, footprints })
}

fn best(closed: &[u64], dominated: u64, full: u64, memo: &mut HashMap<u64, usize>) -> usize {
    if dominated == full {
        return 0;
    }
    if let Some(&v) = memo.get(&dominated) {
        return v;
    }
    let mut out = 0;
    for &c in closed {
        if c & !dominated != 0 {
            out = out.max(1 + best(closed, dominated | c, full, memo));
        }
    }
    memo.insert(dominated, out);
    out
}
