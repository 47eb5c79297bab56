mod common;

use irregmix::bounds::{integrity_lb, k_independence_ub, routing_bounds, zero_forcing_lb};
use irregmix::eml::eml_kwalks;
use irregmix::oracles::{
    grundy_domination_exact, k_independence_exact, routing_number_exact, vertex_integrity_exact, walk_count_enumeration,
    walk_count_enumeration_with_limit,
    zero_forcing_exact,
};
use irregmix::{Family, Graph, Polynomial, VertexSet};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn zero_forcing_at_least_n_minus_grundy() {
    let mut graphs = common::catalog(6);
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for n in 7..=8 {
        for _ in 0..30 {
            graphs.push(common::random_connected(&mut rng, n, 0.4));
        }
    }
    for g in &graphs {
        let z = zero_forcing_exact(g).unwrap();
        let gr = grundy_domination_exact(g).unwrap();
        assert!(z + gr >= g.n(), "Z = {z}, gamma_gr = {gr}, n = {}", g.n());
    }
}

#[test]
fn bounds_respect_oracles_on_catalog() {
    for g in common::catalog(6) {
        let z = zero_forcing_exact(&g).unwrap() as u64;
        let iota = vertex_integrity_exact(&g).unwrap() as u64;
        let rt = routing_number_exact(&g).unwrap() as u64;
        let reports = zero_forcing_lb(&g)
            .unwrap()
            .into_iter()
            .map(|r| r.with_oracle(z))
            .chain(integrity_lb(&g).unwrap().into_iter().map(|r| r.with_oracle(iota)))
            .chain(routing_bounds(&g).unwrap().into_iter().map(|r| r.with_oracle(rt)));
        for r in reports {
            assert!(r.consistent(), "{r:?}");
        }
        for k in 1..=3 {
            let alpha = k_independence_exact(&g, k).unwrap() as u64;
            if let Ok(rs) = k_independence_ub(&g, k, None) {
                for r in rs {
                    assert!(r.with_oracle(alpha).consistent());
                }
            }
        }
    }
}

#[test]
fn regular_zero_forcing_family_values() {
    let z = zero_forcing_exact(&Family::Cycle(7).build().unwrap()).unwrap();
    assert_eq!(z, 2);
    let rook_join = Family::Join(
        Box::new(Family::CartesianProduct(Box::new(Family::Complete(3)), Box::new(Family::Complete(3)))),
        Box::new(Family::Complete(2)),
    )
    .build()
    .unwrap();
    assert_eq!(zero_forcing_exact(&rook_join).unwrap(), 7);
}

#[test]
fn walk_enumeration_matches_polynomial() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..25 {
        let n = 2 + (rand::Rng::gen_range(&mut rng, 0..7));
        let g = common::random_connected(&mut rng, n, 0.45);
        let s = common::random_nonempty_set(&mut rng, n);
        let t = common::random_nonempty_set(&mut rng, n);
        for k in 1..=4 {
            let count = walk_count_enumeration(&g, k, &s, &t).unwrap();
            let p = Polynomial::walks(k).eval_matrix(&g.adjacency_matrix());
            let direct: f64 = s.iter().flat_map(|u| t.iter().map(move |v| (u, v))).map(|(u, v)| p[(u, v)]).sum();
            assert_eq!(count as f64, direct);
            let report = eml_kwalks(&g, k, &s, &t).unwrap();
            assert!(report.slack >= -report.tol());
        }
    }
}

#[test]
fn petersen_walk_diagonal() {
    let g = Family::Petersen.build().unwrap();
    let s = VertexSet::from_indices(10, [0]).unwrap();
    assert!(walk_count_enumeration(&g, 2, &s, &s).is_err());
    assert_eq!(walk_count_enumeration_with_limit(&g, 2, &s, &s, 10, 2).unwrap(), 3);
}

#[test]
fn k_at_least_diameter_gives_one() {
    for g in common::catalog(5) {
        let d = g.diameter().unwrap();
        assert_eq!(k_independence_exact(&g, d.max(1)).unwrap(), 1);
    }
}

#[test]
fn budgets_are_enforced() {
    let big = Graph::from_edge_list(16, &(1..16).map(|i| (i - 1, i)).collect::<Vec<_>>()).unwrap();
    assert!(matches!(vertex_integrity_exact(&big), Err(irregmix::Error::Budget { .. })));
    assert!(matches!(grundy_domination_exact(&big), Err(irregmix::Error::Budget { .. })));
    assert!(matches!(routing_number_exact(&big), Err(irregmix::Error::Budget { .. })));
    assert!(k_independence_exact(&big, 2).is_ok());
}
