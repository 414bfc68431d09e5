use std::collections::BTreeMap;

use super::AssociationScheme;
use crate::coherent::CoherentConfiguration;
use crate::error::{Error, Result};
use crate::graph::search::{search, Mode, Structure};
use crate::graph::{Graph, Permutation};

/// Result of [`partially_metric_order`].
#[derive(Clone, Debug)]
pub struct PartialMetric {
    /// Largest `t` such that each distance-`i` graph, `i <= t`, is a single relation.
    pub t: usize,
    /// The scheme with relations ordered by (distance, valency, least neighbour list of point 0).
    pub scheme: AssociationScheme,
    /// `order[new] = old`.
    pub order: Vec<usize>,
    /// Distance in the scheme graph of each reordered relation.
    pub distance: Vec<usize>,
}

pub fn partially_metric_order(s: &AssociationScheme, r: usize) -> Result<PartialMetric> {
    if r == 0 || r > s.d() {
        return Err(Error::InvalidParameters(format!("relation {r} is not a non-identity relation")));
    }
    let g = s.graph(r);
    if !g.is_connected() {
        return Err(Error::RelationDisconnected(r));
    }
    let n = s.n();
    let mut dist_of: Vec<Option<usize>> = vec![None; s.rank()];
    for x in 0..n {
        let dx = g.bfs(x);
        for y in 0..n {
            let j = s.relation(x, y);
            let d = dx[y].unwrap();
            match dist_of[j] {
                None => dist_of[j] = Some(d),
                Some(old) if old != d => {
                    return Err(Error::Verification(format!("distance is not constant on relation {j}")))
                }
                _ => {}
            }
        }
    }
    let dist_of: Vec<usize> = dist_of.into_iter().map(Option::unwrap).collect();
    let mut order: Vec<usize> = (0..s.rank()).collect();
    order.sort_by(|&a, &b| {
        (dist_of[a], s.valency(a))
            .cmp(&(dist_of[b], s.valency(b)))
            .then_with(|| s.neighbors(a, 0).cmp(&s.neighbors(b, 0)))
    });
    let diameter = *dist_of.iter().max().unwrap();
    let mut t = 0;
    while t < diameter && dist_of.iter().filter(|&&d| d == t + 1).count() == 1 {
        t += 1;
    }
    let scheme = s.reorder(&order)?;
    let distance = order.iter().map(|&o| dist_of[o]).collect();
    Ok(PartialMetric { t, scheme, order, distance })
}

/// Result of [`quotient_scheme`].
#[derive(Clone, Debug)]
pub struct Quotient {
    pub scheme: AssociationScheme,
    /// Equivalence classes, ordered by least element; class `c` is point `c` of the quotient.
    pub classes: Vec<Vec<usize>>,
}

/// Quotient by the equivalence relation `R_0 ∪ ⋃ R_i (i in relset)`.
pub fn quotient_scheme(s: &AssociationScheme, relset: &[usize]) -> Result<Quotient> {
    let mut inside = vec![false; s.rank()];
    inside[0] = true;
    for &i in relset {
        if i >= s.rank() {
            return Err(Error::InvalidParameters(format!("relation {i} out of range")));
        }
        inside[i] = true;
    }
    let n = s.n();
    let class_set = |x: usize| -> Vec<usize> { (0..n).filter(|&y| inside[s.relation(x, y)]).collect() };
    let mut class_of = vec![usize::MAX; n];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for x in 0..n {
        if class_of[x] != usize::MAX {
            continue;
        }
        let c = class_set(x);
        for &y in &c {
            if class_set(y) != c {
                return Err(Error::NotEquivalence(format!("points {x} and {y} are related but have different classes")));
            }
            class_of[y] = classes.len();
        }
        classes.push(c);
    }
    let m = classes.len();
    let mut sets: Vec<Vec<usize>> = Vec::with_capacity(m * m);
    for a in 0..m {
        for b in 0..m {
            let mut set: Vec<usize> = classes[a]
                .iter()
                .flat_map(|&x| classes[b].iter().map(move |&y| s.relation(x, y)))
                .collect();
            set.sort_unstable();
            set.dedup();
            sets.push(set);
        }
    }
    let mut ids: BTreeMap<&Vec<usize>, u32> = BTreeMap::new();
    ids.insert(&sets[0], 0);
    for set in &sets {
        let next = ids.len() as u32;
        ids.entry(set).or_insert(next);
    }
    let labels: Vec<u32> = sets.iter().map(|set| ids[set]).collect();
    let scheme = AssociationScheme::from_labels(m, &labels)?;
    Ok(Quotient { scheme, classes })
}

/// Relations `(i, j) -> i * rank(s2) + j` on points `(x1, x2) -> x1 * n2 + x2`.
pub fn direct_product(s1: &AssociationScheme, s2: &AssociationScheme) -> Result<AssociationScheme> {
    let (n1, n2, r2) = (s1.n(), s2.n(), s2.rank());
    let n = n1 * n2;
    let mut labels = vec![0u32; n * n];
    for x1 in 0..n1 {
        for x2 in 0..n2 {
            for y1 in 0..n1 {
                for y2 in 0..n2 {
                    labels[(x1 * n2 + x2) * n + y1 * n2 + y2] = (s1.relation(x1, y1) * r2 + s2.relation(x2, y2)) as u32;
                }
            }
        }
    }
    AssociationScheme::from_labels(n, &labels)
}

/// Direct product with the rank-2 scheme on two points.
pub fn bipartite_double_scheme(s: &AssociationScheme) -> Result<AssociationScheme> {
    direct_product(s, &AssociationScheme::trivial(2)?)
}

fn structure(s: &AssociationScheme, anchor: usize) -> Structure {
    let adj = (0..s.n()).map(|x| s.neighbors(anchor, x)).collect();
    Structure::new(s.n(), s.labels().to_vec(), adj)
}

/// A point map `s1 -> s2` carrying every relation of `s1` onto a relation of `s2`.
pub fn scheme_isomorphism(s1: &AssociationScheme, s2: &AssociationScheme) -> Option<Permutation> {
    if s1.n() != s2.n() || s1.rank() != s2.rank() {
        return None;
    }
    let mut v1 = s1.valencies().to_vec();
    let mut v2 = s2.valencies().to_vec();
    v1.sort_unstable();
    v2.sort_unstable();
    if v1 != v2 {
        return None;
    }
    if s1.rank() == 1 {
        return Some(vec![0]);
    }
    let connected: Vec<bool> = (0..s1.rank()).map(|i| i > 0 && s1.is_connected_relation(i)).collect();
    let anchor = (1..s1.rank())
        .min_by_key(|&i| (!connected[i], s1.valency(i), i))
        .expect("rank >= 2");
    let a = structure(s1, anchor);
    for j in 1..s2.rank() {
        if s2.valency(j) != s1.valency(anchor) || s2.is_connected_relation(j) != connected[anchor] {
            continue;
        }
        let b = structure(s2, j);
        let map = BTreeMap::from([(0u32, 0u32), (anchor as u32, j as u32)]);
        if let Some(p) = search(&a, &b, Mode::Bijection(map), false).pop() {
            return Some(p);
        }
    }
    None
}

/// Fuses every colour with its transpose. Fails when the result is not a scheme.
pub fn symmetrize(cc: &CoherentConfiguration) -> Result<AssociationScheme> {
    let colors: Vec<u32> = cc.colors().iter().map(|&c| c.min(cc.transpose_of(c as usize) as u32)).collect();
    let fused = CoherentConfiguration::from_colors(cc.n(), &colors)?;
    AssociationScheme::from_configuration(&fused)
}

/// Whether `g` is complete multipartite with at least two parts: non-adjacency is an
/// equivalence relation and the graph has an edge.
pub fn is_complete_multipartite(g: &Graph) -> bool {
    if g.edge_count() == 0 {
        return false;
    }
    let co = g.complement();
    co.components().iter().all(|c| c.iter().all(|&x| c.iter().all(|&y| x == y || co.has_edge(x, y))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scheme::catalog_scheme;

    #[test]
    fn cube_is_metric() {
        let s = catalog_scheme("cube").unwrap();
        let pm = partially_metric_order(&s, 1).unwrap();
        assert_eq!(pm.t, 3);
        assert_eq!(pm.distance, vec![0, 1, 2, 3]);
    }

    #[test]
    fn rank_two_is_partially_metric() {
        let s = catalog_scheme("tetrahedron").unwrap();
        assert_eq!(partially_metric_order(&s, 1).unwrap().t, 1);
    }

    #[test]
    fn disconnected_relation_rejected() {
        let s = catalog_scheme("cube").unwrap();
        assert_eq!(partially_metric_order(&s, 3).unwrap_err(), Error::RelationDisconnected(3));
    }

    #[test]
    fn antipodal_quotient_of_cube() {
        let s = catalog_scheme("cube").unwrap();
        let q = quotient_scheme(&s, &[3]).unwrap();
        assert_eq!(q.classes.len(), 4);
        let k4 = catalog_scheme("tetrahedron").unwrap();
        assert!(scheme_isomorphism(&q.scheme, &k4).is_some());
        assert!(matches!(quotient_scheme(&s, &[1]), Err(Error::NotEquivalence(_))));
    }

    #[test]
    fn products() {
        let t2 = AssociationScheme::trivial(2).unwrap();
        let p = direct_product(&t2, &t2).unwrap();
        assert_eq!((p.n(), p.rank()), (4, 4));
        let k4 = catalog_scheme("tetrahedron").unwrap();
        let bd = bipartite_double_scheme(&k4).unwrap();
        assert!(scheme_isomorphism(&bd, &catalog_scheme("cube").unwrap()).is_some());
        let one = AssociationScheme::trivial(1).unwrap();
        assert_eq!(direct_product(&k4, &one).unwrap(), k4);
    }

    #[test]
    fn multipartite_detection() {
        use crate::graph::catalog_graph;
        assert!(is_complete_multipartite(&catalog_graph("octahedron").unwrap()));
        assert!(is_complete_multipartite(&catalog_graph("k33").unwrap()));
        assert!(!is_complete_multipartite(&catalog_graph("cube").unwrap()));
    }

    #[test]
    fn non_isomorphic_schemes() {
        let a = catalog_scheme("mobius-kantor").unwrap();
        let b = catalog_scheme("cube").unwrap();
        assert!(scheme_isomorphism(&a, &b).is_none());
    }
}
