use serde::Serialize;

use super::{bits, check_budget, full_mask, masks};
use crate::error::Result;
use crate::graph::{Graph, VertexSet};

pub const ZERO_FORCING_LIMIT: usize = 14;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ForcingState {
    pub black: VertexSet,
    /// `(forcer, forced)` in the order applied.
    pub derivation: Vec<(usize, usize)>,
}

impl ForcingState {
    /// Replays the derivation from `initial`, checking each force is legal.
    pub fn replay(&self, g: &Graph, initial: &VertexSet) -> bool {
        let mut black = initial.clone();
        for &(u, w) in &self.derivation {
            if !black.contains(u) || black.contains(w) {
                return false;
            }
            let white = g.neighbors(u).difference(&black);
            if white.len() != 1 || !white.contains(w) {
                return false;
            }
            black.insert(w);
        }
        black == self.black
    }
}

/// Every `(forcer, forced)` pair allowed from the current colouring.
pub fn legal_forces(g: &Graph, black: &VertexSet) -> Vec<(usize, usize)> {
    black
        .iter()
        .filter_map(|u| {
            let white = g.neighbors(u).difference(black);
            (white.len() == 1).then(|| (u, white.first().unwrap()))
        })
        .collect()
}

/// Applies forces in vertex order until none is possible.
pub fn forcing_closure(g: &Graph, initial: &VertexSet) -> ForcingState {
    let mut black = initial.clone();
    let mut derivation = Vec::new();
    loop {
        let mut changed = false;
        for u in 0..g.n() {
            if !black.contains(u) {
                continue;
            }
            let white = g.neighbors(u).difference(&black);
            if white.len() == 1 {
                let w = white.first().unwrap();
                black.insert(w);
                derivation.push((u, w));
                changed = true;
            }
        }
        if !changed {
            return ForcingState { black, derivation };
        }
    }
}

fn closure_mask(adj: &[u64], mut black: u64) -> u64 {
    loop {
        let before = black;
        for u in bits(black) {
            let white = adj[u] & !black;
            if white.count_ones() == 1 {
                black |= white;
            }
        }
        if black == before {
            return black;
        }
    }
}

pub fn zero_forcing_exact(g: &Graph) -> Result<usize> {
    zero_forcing_exact_with_limit(g, ZERO_FORCING_LIMIT)
}

/// Smallest forcing set, searching subsets by increasing size.
pub fn zero_forcing_exact_with_limit(g: &Graph, limit: usize) -> Result<usize> {
    check_budget(g, "zero forcing", limit)?;
    let n = g.n();
    let adj = masks(g);
    let full = full_mask(n);
    for k in 0..=n {
        if k == 0 {
            if n == 0 {
                return Ok(0);
            }
            continue;
        }
        // Gosper's hack over k-subsets.
        let mut s: u64 = (1 << k) - 1;
        while s <= full {
            if closure_mask(&adj, s) == full {
                return Ok(k);
            }
            let c = s & s.wrapping_neg();
            let r = s + c;
            s = (((r ^ s) >> 2) / c) | r;
        }
    }
    Ok(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;

    fn set(n: usize, v: &[usize]) -> VertexSet {
        VertexSet::from_indices(n, v.iter().copied()).unwrap()
    }

    #[test]
    fn path_forces_through() {
        let g = Family::Path(5).build().unwrap();
        let st = forcing_closure(&g, &set(5, &[0]));
        assert_eq!(st.black, VertexSet::full(5));
        assert_eq!(st.derivation, vec![(0, 1), (1, 2), (2, 3), (3, 4)]);
        assert!(st.replay(&g, &set(5, &[0])));
    }

    #[test]
    fn triangle_blocks() {
        let g = Family::Complete(3).build().unwrap();
        assert_eq!(forcing_closure(&g, &set(3, &[0])).black, set(3, &[0]));
    }

    #[test]
    fn bowtie_replay() {
        let g = Family::Bowtie.build().unwrap();
        let b = set(5, &[0, 1, 2]);
        let st = forcing_closure(&g, &b);
        // 0 forces 4, then 2 forces 3.
        assert_eq!(st.derivation, vec![(0, 4), (2, 3)]);
        assert_eq!(st.black, VertexSet::full(5));
        assert!(st.replay(&g, &b));
        assert!(!st.replay(&g, &set(5, &[0, 1])));
    }

    #[test]
    fn small_zero_forcing_numbers() {
        for n in 2..8 {
            assert_eq!(zero_forcing_exact(&Family::Complete(n).build().unwrap()).unwrap(), n - 1);
            assert_eq!(zero_forcing_exact(&Family::Path(n).build().unwrap()).unwrap(), 1);
        }
        assert_eq!(zero_forcing_exact(&Family::Cycle(6).build().unwrap()).unwrap(), 2);
        assert_eq!(zero_forcing_exact(&Family::Petersen.build().unwrap()).unwrap(), 5);
    }

    #[test]
    fn budget() {
        let g = Family::Path(15).build().unwrap();
        assert!(matches!(zero_forcing_exact(&g), Err(crate::Error::Budget { limit: 14, n: 15, .. })));
        assert_eq!(zero_forcing_exact_with_limit(&g, 15).unwrap(), 1);
    }
}
