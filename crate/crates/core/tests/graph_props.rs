mod common;

use common::distances;
use proptest::prelude::*;
use schemeforge::exact::{rat, ExactMatrix};
use schemeforge::graph::{
    automorphisms, bipartite_double_graph, catalog_graph, generalized_petersen, intersection_array, isomorphic, metrics,
    t_walk_regular_order, voltage_derived, Graph, VoltageAssignment,
};

/// Random graph on `n <= 8` vertices from an edge mask.
fn random_graph() -> impl Strategy<Value = Graph> {
    (2usize..=8).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |mask| {
            let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
            let edges: Vec<_> = pairs.into_iter().zip(mask).filter(|(_, b)| *b).map(|(e, _)| e).collect();
            Graph::new(n, &edges).unwrap()
        })
    })
}

fn compose(p: &[usize], q: &[usize]) -> Vec<usize> {
    q.iter().map(|&x| p[x]).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn all_ones_z2_voltage_is_the_bipartite_double(g in random_graph()) {
        let v = VoltageAssignment::z2(g.clone(), &g.edges()).unwrap();
        let derived = voltage_derived(&v).unwrap();
        prop_assert_eq!(derived, bipartite_double_graph(&g));
    }

    #[test]
    fn derived_graph_covers_the_base(g in random_graph(), m in 1usize..=5, seed in prop::collection::vec(0usize..5, 28)) {
        let mut v = VoltageAssignment::new(g.clone(), vec![m]).unwrap();
        for (e, (x, y)) in g.edges().into_iter().enumerate() {
            v.set_edge(x, y, vec![seed[e % seed.len()]]).unwrap();
        }
        let d = voltage_derived(&v).unwrap();
        let n = g.n();
        prop_assert_eq!(d.n(), n * m);
        prop_assert_eq!(d.edge_count(), g.edge_count() * m);
        // the projection maps each neighbourhood bijectively onto the base neighbourhood
        for u in 0..d.n() {
            let mut img: Vec<usize> = d.neighbors(u).iter().map(|w| w % n).collect();
            img.sort_unstable();
            prop_assert_eq!(&img[..], g.neighbors(u % n));
        }
        prop_assert_eq!(VoltageAssignment::parse(&v.to_text()).unwrap(), v);
    }

    #[test]
    fn distance_partition_sums_to_all_ones(g in random_graph()) {
        prop_assume!(g.is_connected());
        let m = metrics(&g);
        let classes = m.distance_classes();
        let n = g.n();
        let mut sum = ExactMatrix::zeros(n, n);
        for c in &classes {
            sum = sum.add(c).unwrap();
        }
        prop_assert_eq!(sum, ExactMatrix::from_fn(n, n, |_, _| rat(1)));
        for x in 0..n {
            prop_assert_eq!(distances(&g, x), m.distance[x].iter().map(|d| d.unwrap()).collect::<Vec<_>>());
        }
        prop_assert_eq!(m.diameter, Some(classes.len() - 1));
    }

    #[test]
    fn automorphisms_form_a_group(g in random_graph()) {
        let aut = automorphisms(&g).unwrap();
        let id: Vec<usize> = (0..g.n()).collect();
        prop_assert!(aut.contains(&id));
        for p in &aut {
            for (u, v) in g.edges() {
                prop_assert!(g.has_edge(p[u], p[v]));
            }
        }
        let set: std::collections::BTreeSet<_> = aut.iter().cloned().collect();
        prop_assert_eq!(set.len(), aut.len());
        for p in aut.iter().take(6) {
            for q in aut.iter().take(6) {
                prop_assert!(set.contains(&compose(p, q)));
            }
        }
    }

    #[test]
    fn isomorphism_is_invariant_under_relabeling(g in random_graph(), perm_seed in any::<u64>()) {
        let n = g.n();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = perm_seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let h = g.relabel(&perm).unwrap();
        let iso = isomorphic(&g, &h);
        prop_assert!(iso.is_some());
        let f = iso.unwrap();
        for (u, v) in g.edges() {
            prop_assert!(h.has_edge(f[u], f[v]));
        }
    }

    #[test]
    fn generalized_petersen_shape(n in 3usize..=14, k in 1usize..=6) {
        prop_assume!(k < n && 2 * k != n);
        let g = generalized_petersen(n, k).unwrap();
        prop_assert_eq!(g.n(), 2 * n);
        prop_assert_eq!(g.regular_degree(), Some(3));
        prop_assert!(isomorphic(&g, &generalized_petersen(n, n - k).unwrap()).is_some());
    }
}

#[test]
fn walk_regularity_order() {
    for name in ["cube", "petersen", "dodecahedron", "coxeter", "icosahedron", "mobius-kantor", "nauru"] {
        let g = catalog_graph(name).unwrap();
        let w = t_walk_regular_order(&g).unwrap();
        assert!(w.walk_regular && w.order >= 1, "{name}");
        if intersection_array(&g).is_some() {
            assert_eq!(w.order, w.diameter, "{name} is distance-regular");
        }
    }
    assert!(intersection_array(&catalog_graph("nauru").unwrap()).is_none());
}

#[test]
fn catalog_sizes() {
    let want = [("cube", 8, 3), ("mobius-kantor", 16, 3), ("nauru", 24, 3), ("f048a", 48, 3), ("coxeter", 28, 3), ("icosahedron", 12, 5)];
    for (name, n, k) in want {
        let g = catalog_graph(name).unwrap();
        assert_eq!((g.n(), g.regular_degree()), (n, Some(k)), "{name}");
        assert!(g.is_connected());
    }
    assert!(catalog_graph("f048a").unwrap().is_bipartite());
    assert_eq!(metrics(&catalog_graph("coxeter").unwrap()).girth, Some(7));
}
