use super::{bits, check_budget, full_mask, masks};
use crate::error::Result;
use crate::graph::Graph;

pub const INTEGRITY_LIMIT: usize = 14;

pub fn vertex_integrity_exact(g: &Graph) -> Result<usize> {
    vertex_integrity_exact_with_limit(g, INTEGRITY_LIMIT)
}

/// `min_S |S| + κ(G − S)`, skipping removal sets no smaller than the best.
pub fn vertex_integrity_exact_with_limit(g: &Graph, limit: usize) -> Result<usize> {
    check_budget(g, "vertex integrity", limit)?;
    let n = g.n();
    let adj = masks(g);
    let full = full_mask(n);
    let mut best = n;
    for removed in 0..=full {
        let size = removed.count_ones() as usize;
        if size >= best {
            continue;
        }
        let value = size + largest_component(&adj, full & !removed);
        best = best.min(value);
    }
    Ok(best)
}

fn largest_component(adj: &[u64], alive: u64) -> usize {
    let mut unseen = alive;
    let mut largest = 0;
    while unseen != 0 {
        let start = unseen & unseen.wrapping_neg();
        let mut comp = start;
        let mut frontier = start;
        while frontier != 0 {
            let mut next = 0;
            for v in bits(frontier) {
                next |= adj[v];
            }
            frontier = next & alive & !comp;
            comp |= frontier;
        }
        unseen &= !comp;
        largest = largest.max(comp.count_ones() as usize);
    }
    largest
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;

    #[test]
    fn small_values() {
        for n in 1..8 {
            assert_eq!(vertex_integrity_exact(&Family::Complete(n).build().unwrap()).unwrap(), n);
        }
        assert_eq!(vertex_integrity_exact(&Family::Path(3).build().unwrap()).unwrap(), 2);
        assert_eq!(vertex_integrity_exact(&Family::CompleteMinusEdge(6).build().unwrap()).unwrap(), 5);
        // Remove the centre of a star.
        let star = Graph::from_edge_list(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert_eq!(vertex_integrity_exact(&star).unwrap(), 2);
    }

    #[test]
    fn matches_component_profile() {
        let g = Family::Kite { r: 4, s: 4 }.build().unwrap();
        let mut best = usize::MAX;
        for mask in 0u64..1 << g.n() {
            let s = crate::VertexSet::from_mask(g.n(), mask);
            best = best.min(s.len() + g.components(&s).kappa);
        }
        assert_eq!(vertex_integrity_exact(&g).unwrap(), best);
    }
}
