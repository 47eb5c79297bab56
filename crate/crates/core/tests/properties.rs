mod common;

use irregmix::graph::double_cover;
use irregmix::linalg::symmetric_eigenvalues;
use irregmix::oracles::{forcing_closure, rt_of_permutation};
use irregmix::weights::{coarsest_equitable_refinement, is_equitable, is_weight_equitable, weight_quotient, Partition};
use irregmix::{Graph, SpectralData, VertexSet, WeightMap};
use proptest::prelude::*;

fn graph_from_bits(n: usize, bits: u64, connect: bool) -> Graph {
    let mut edges = Vec::new();
    let mut k = 0;
    for u in 0..n {
        for v in u + 1..n {
            if bits >> (k % 64) & 1 == 1 || (connect && v == u + 1) {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    Graph::from_edge_list(n, &edges).unwrap()
}

fn any_graph() -> impl Strategy<Value = Graph> {
    (1usize..=9, any::<u64>()).prop_map(|(n, b)| graph_from_bits(n, b, false))
}

fn connected_graph() -> impl Strategy<Value = Graph> {
    (2usize..=9, any::<u64>()).prop_map(|(n, b)| graph_from_bits(n, b, true))
}

fn with_sets<S: Strategy<Value = Graph>>(g: S) -> impl Strategy<Value = (Graph, VertexSet, VertexSet)> {
    g.prop_flat_map(|g| {
        let n = g.n();
        (Just(g), any::<u64>(), any::<u64>())
            .prop_map(move |(g, a, b)| (g, VertexSet::from_mask(n, a & ((1 << n) - 1)), VertexSet::from_mask(n, b & ((1 << n) - 1))))
    })
}

fn triangles(g: &Graph) -> usize {
    let n = g.n();
    (0..n)
        .flat_map(|a| (a + 1..n).flat_map(move |b| (b + 1..n).map(move |c| (a, b, c))))
        .filter(|&(a, b, c)| g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c))
        .count()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn edge_count_symmetric((g, s, t) in with_sets(any_graph())) {
        prop_assert_eq!(g.e(&s, &t), g.e(&t, &s));
        prop_assert_eq!(g.e(&s, &g.vertex_set()), g.volume(&s));
    }

    #[test]
    fn trace_identities(g in any_graph()) {
        let ev = symmetric_eigenvalues(&g.adjacency_matrix()).unwrap();
        let m = g.edge_count() as f64;
        prop_assert!(ev.iter().sum::<f64>().abs() < 1e-8);
        prop_assert!((ev.iter().map(|x| x * x).sum::<f64>() - 2.0 * m).abs() < 1e-8);
        prop_assert!((ev.iter().map(|x| x.powi(3)).sum::<f64>() - 6.0 * triangles(&g) as f64).abs() < 1e-7);
    }

    #[test]
    fn double_cover_spectrum(g in any_graph()) {
        let a = symmetric_eigenvalues(&g.adjacency_matrix()).unwrap();
        let want = common::sorted(a.iter().flat_map(|&x| [x, -x]).collect());
        let got = common::sorted(symmetric_eigenvalues(&double_cover(&g).adjacency_matrix()).unwrap());
        for (x, y) in want.iter().zip(&got) {
            prop_assert!((x - y).abs() < 1e-8);
        }
    }

    #[test]
    fn weight_degree_identity(g in connected_graph()) {
        let spec = SpectralData::new(&g).unwrap();
        for d in spec.weight_degrees(&g) {
            prop_assert!((d - spec.lambda1()).abs() < 1e-9 * spec.lambda1().max(1.0));
        }
    }

    #[test]
    fn rho_complement((g, s, _t) in with_sets(connected_graph())) {
        let spec = SpectralData::new(&g).unwrap();
        let w = WeightMap::new(&spec);
        prop_assert!((w.rho_norm_sq(&s) + w.rho_norm_sq(&s.complement()) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn quotient_row_sums(g in connected_graph(), seed in any::<u64>()) {
        let n = g.n();
        let m = 1 + (seed as usize % n);
        let mut cells = vec![Vec::new(); m];
        for v in 0..n {
            cells[if v < m { v } else { (seed >> (v % 60)) as usize % m }].push(v);
        }
        let p = Partition::new(n, cells).unwrap();
        let spec = SpectralData::new(&g).unwrap();
        let w = WeightMap::new(&spec);
        let q = weight_quotient(&g, &spec, &p);
        for (i, cell) in p.cells().iter().enumerate() {
            let row: f64 = (0..p.m()).map(|j| q.b_tilde[(i, j)]).sum();
            prop_assert!((row - spec.lambda1() * w.rho_norm_sq(cell)).abs() < 1e-9);
        }
    }

    #[test]
    fn refinement_idempotent_and_equitable(g in any_graph()) {
        let p = coarsest_equitable_refinement(&g, &Partition::single(g.n()));
        prop_assert_eq!(&coarsest_equitable_refinement(&g, &p), &p);
        prop_assert!(is_equitable(&g, &p).holds);
        if g.n() >= 2 && g.is_connected() {
            let spec = SpectralData::new(&g).unwrap();
            prop_assert!(is_weight_equitable(&g, &spec, &p).holds);
        }
    }

    #[test]
    fn forcing_closure_is_confluent((g, b, _t) in with_sets(any_graph()), seed in any::<u64>()) {
        use rand::{seq::SliceRandom, SeedableRng};
        let reference = forcing_closure(&g, &b);
        prop_assert!(reference.replay(&g, &b));
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let mut black = b.clone();
        loop {
            let forces = irregmix::oracles::legal_forces(&g, &black);
            match forces.choose(&mut rng) {
                Some(&(_, w)) => black.insert(w),
                None => break,
            }
        }
        prop_assert_eq!(black, reference.black);
    }

    #[test]
    fn routing_inverse_symmetry(g in (2usize..=5, any::<u64>()).prop_map(|(n, b)| graph_from_bits(n, b, true)), seed in any::<u64>()) {
        use rand::{seq::SliceRandom, SeedableRng};
        let n = g.n();
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
        let mut inv = vec![0; n];
        for (i, &p) in perm.iter().enumerate() {
            inv[p] = i;
        }
        prop_assert_eq!(rt_of_permutation(&g, &perm).unwrap(), rt_of_permutation(&g, &inv).unwrap());
        let id: Vec<usize> = (0..n).collect();
        prop_assert_eq!(rt_of_permutation(&g, &id).unwrap(), 0);
    }
}

#[test]
fn forcing_confluence_hundred_orderings() {
    use rand::{seq::SliceRandom, SeedableRng};
    for g in [irregmix::Family::Petersen.build().unwrap(), irregmix::Family::Kite { r: 4, s: 4 }.build().unwrap()] {
        for mask in [0b1u64, 0b11, 0b10011, 0b1110001] {
            let b = VertexSet::from_mask(g.n(), mask);
            let reference = forcing_closure(&g, &b).black;
            for seed in 0..100 {
                let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
                let mut black = b.clone();
                while let Some(&(_, w)) = irregmix::oracles::legal_forces(&g, &black).choose(&mut rng) {
                    black.insert(w);
                }
                assert_eq!(black, reference);
            }
        }
    }
}

#[test]
fn refinement_is_order_independent() {
    let g = irregmix::Family::Kite { r: 3, s: 4 }.build().unwrap();
    let a = Partition::new(g.n(), vec![vec![0, 1, 2], vec![3, 4, 5]]).unwrap();
    let b = Partition::new(g.n(), vec![vec![5, 4, 3], vec![2, 1, 0]]).unwrap();
    assert_eq!(coarsest_equitable_refinement(&g, &a), coarsest_equitable_refinement(&g, &b));
}
