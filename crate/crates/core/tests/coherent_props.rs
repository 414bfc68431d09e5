use proptest::prelude::*;
use schemeforge::coherent::{coherent_closure, graph_closure, orbital_configuration, CoherentConfiguration};
use schemeforge::graph::{automorphisms, catalog_graph, Graph};

fn random_graph() -> impl Strategy<Value = Graph> {
    (2usize..=9).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |mask| {
            let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
            let edges: Vec<_> = pairs.into_iter().zip(mask).filter(|(_, b)| *b).map(|(e, _)| e).collect();
            Graph::new(n, &edges).unwrap()
        })
    })
}

/// Recounts every axiom from the colour matrix alone.
fn check_axioms(cc: &CoherentConfiguration) -> Result<(), String> {
    let n = cc.n();
    let r = cc.rank();
    for x in 0..n {
        for y in 0..n {
            let (c, t) = (cc.color(x, y), cc.color(y, x));
            if cc.transpose_of(c) != t {
                return Err(format!("transpose of {c} at ({x},{y})"));
            }
            let diagonal = (0..n).any(|z| cc.color(z, z) == c);
            if diagonal && x != y {
                return Err(format!("diagonal colour {c} off the diagonal"));
            }
        }
    }
    // p^h_ij computed from one pair and compared on every other pair of colour h
    let mut rep: Vec<Option<Vec<usize>>> = vec![None; r];
    for x in 0..n {
        for y in 0..n {
            let mut count = vec![0usize; r * r];
            for z in 0..n {
                count[cc.color(x, z) * r + cc.color(z, y)] += 1;
            }
            let h = cc.color(x, y);
            match &rep[h] {
                None => rep[h] = Some(count),
                Some(c) if *c != count => return Err(format!("intersection numbers vary on colour {h}")),
                _ => {}
            }
        }
    }
    for h in 0..r {
        let c = rep[h].as_ref().unwrap();
        for i in 0..r {
            for j in 0..r {
                if cc.p(h, i, j) != c[i * r + j] {
                    return Err(format!("stored p^{h}_{i}{j}"));
                }
            }
        }
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn closure_is_coherent(g in random_graph()) {
        let cc = graph_closure(&g).unwrap();
        prop_assert_eq!(check_axioms(&cc), Ok(()));
        // the graph is a union of colours
        for (u, v) in g.edges() {
            let c = cc.color(u, v);
            prop_assert!(cc.pairs(c).iter().all(|&(x, y)| g.has_edge(x, y)));
        }
    }

    #[test]
    fn closure_is_idempotent(g in random_graph()) {
        let cc = graph_closure(&g).unwrap();
        let rels: Vec<_> = (0..cc.rank()).map(|i| cc.relation_matrix(i)).collect();
        let again = coherent_closure(cc.n(), &rels).unwrap();
        prop_assert_eq!(again.rank(), cc.rank());
        prop_assert!(cc.is_refined_by(&again) && again.is_refined_by(&cc));
    }

    #[test]
    fn orbitals_refine_the_closure(g in random_graph()) {
        let cc = graph_closure(&g).unwrap();
        let orb = orbital_configuration(&g, &automorphisms(&g).unwrap()).unwrap();
        prop_assert_eq!(check_axioms(&orb), Ok(()));
        prop_assert!(cc.is_refined_by(&orb));
    }

    #[test]
    fn row_sums_and_triangle_identity(g in random_graph()) {
        let cc = graph_closure(&g).unwrap();
        let r = cc.rank();
        for h in 0..r {
            let (x, _) = cc.pairs(h)[0];
            for i in 0..r {
                // sum_j p^h_ij = number of z with (x,z) in R_i
                let sum: usize = (0..r).map(|j| cc.p(h, i, j)).sum();
                prop_assert_eq!(sum, (0..cc.n()).filter(|&z| cc.color(x, z) == i).count());
            }
        }
        // k_h p^h_ij = k_i p^i_{h j'} with j' the transpose of j, on homogeneous configurations
        if cc.fiber_count() == 1 {
            for h in 0..r {
                for i in 0..r {
                    for j in 0..r {
                        prop_assert_eq!(cc.valency(h) * cc.p(h, i, j), cc.valency(i) * cc.p(i, h, cc.transpose_of(j)));
                    }
                }
            }
        }
    }

    #[test]
    fn text_round_trip(g in random_graph()) {
        let cc = graph_closure(&g).unwrap();
        let back = CoherentConfiguration::parse(&cc.to_text()).unwrap();
        prop_assert_eq!(back.colors(), cc.colors());
    }
}

#[test]
fn closure_of_vertex_transitive_catalog_graphs_is_orbital() {
    for (name, rank) in [("cube", 4), ("petersen", 3), ("mobius-kantor", 6), ("nauru", 7), ("dodecahedron", 6), ("coxeter", 5)] {
        let g = catalog_graph(name).unwrap();
        let cc = graph_closure(&g).unwrap();
        assert_eq!(cc.rank(), rank, "{name}");
        assert_eq!(check_axioms(&cc), Ok(()));
        let orb = orbital_configuration(&g, &automorphisms(&g).unwrap()).unwrap();
        assert_eq!(orb.rank(), rank, "{name}");
        let props = cc.classify_properties();
        assert!(props.homogeneous && props.symmetric && props.commutative, "{name}");
    }
}
