use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

pub const WALK_N_LIMIT: usize = 8;
pub const WALK_K_LIMIT: usize = 4;

/// Number of walks of length `1..=k` starting in `S` and ending in `T`,
/// counted by explicit enumeration.
pub fn walk_count_enumeration(g: &Graph, k: usize, s: &VertexSet, t: &VertexSet) -> Result<u64> {
    walk_count_enumeration_with_limit(g, k, s, t, WALK_N_LIMIT, WALK_K_LIMIT)
}

pub fn walk_count_enumeration_with_limit(
    g: &Graph,
    k: usize,
    s: &VertexSet,
    t: &VertexSet,
    max_n: usize,
    max_k: usize,
) -> Result<u64> {
    if g.n() > max_n {
        return Err(Error::Budget { what: "walk enumeration", limit: max_n, n: g.n() });
    }
    if k > max_k {
        return Err(Error::Budget { what: "walk enumeration (walk length)", limit: max_k, n: k });
    }
    fn walk(g: &Graph, at: usize, left: usize, t: &VertexSet) -> u64 {
        if left == 0 {
            return 0;
        }
        g.neighbors(at).iter().map(|w| u64::from(t.contains(w)) + walk(g, w, left - 1, t)).sum()
    }
    Ok(s.iter().map(|u| walk(g, u, k, t)).sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;

    fn set(n: usize, v: &[usize]) -> VertexSet {
        VertexSet::from_indices(n, v.iter().copied()).unwrap()
    }

    #[test]
    fn path_and_petersen() {
        let p3 = Family::Path(3).build().unwrap();
        assert_eq!(walk_count_enumeration(&p3, 1, &set(3, &[0]), &set(3, &[2])).unwrap(), 0);
        assert_eq!(walk_count_enumeration(&p3, 2, &set(3, &[0]), &set(3, &[2])).unwrap(), 1);
        let pet = Family::Petersen.build().unwrap();
        let zero = set(10, &[0]);
        assert!(walk_count_enumeration(&pet, 2, &zero, &zero).is_err());
        assert_eq!(walk_count_enumeration_with_limit(&pet, 2, &zero, &zero, 10, 4).unwrap(), 3);
    }

    #[test]
    fn budget_on_k() {
        let p3 = Family::Path(3).build().unwrap();
        assert!(walk_count_enumeration(&p3, 5, &set(3, &[0]), &set(3, &[2])).is_err());
    }
}
