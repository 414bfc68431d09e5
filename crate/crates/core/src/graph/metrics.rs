use super::Graph;
use crate::exact::{rat, ExactMatrix};

#[derive(Clone, Debug, PartialEq)]
pub struct Metrics {
    /// `None` when the graph is disconnected.
    pub diameter: Option<usize>,
    /// Diameter of each component, in the order of [`Graph::components`].
    pub component_diameters: Vec<usize>,
    /// `None` for forests.
    pub girth: Option<usize>,
    /// `None` for bipartite graphs.
    pub odd_girth: Option<usize>,
    pub distance: Vec<Vec<Option<usize>>>,
}

impl Metrics {
    /// Distance matrices `B_0, ..., B_D` (for a disconnected graph, `D` is the largest finite distance).
    pub fn distance_classes(&self) -> Vec<ExactMatrix> {
        let n = self.distance.len();
        let top = self.distance.iter().flatten().flatten().copied().max().unwrap_or(0);
        (0..=top)
            .map(|i| ExactMatrix::from_fn(n, n, |x, y| if self.distance[x][y] == Some(i) { rat(1) } else { rat(0) }))
            .collect()
    }
}

pub fn metrics(g: &Graph) -> Metrics {
    let n = g.n();
    let distance = g.distance_matrix();
    let mut girth: Option<usize> = None;
    let mut odd: Option<usize> = None;
    for s in 0..n {
        let d = &distance[s];
        for (u, v) in g.edges() {
            let (Some(du), Some(dv)) = (d[u], d[v]) else { continue };
            if du == dv {
                let len = 2 * du + 1;
                girth = Some(girth.map_or(len, |x| x.min(len)));
                odd = Some(odd.map_or(len, |x| x.min(len)));
            } else if du.abs_diff(dv) == 1 {
                // two parents at the far end close an even cycle
                let (far, df) = if du < dv { (v, dv) } else { (u, du) };
                let parents = g.neighbors(far).iter().filter(|&&w| d[w] == Some(df - 1)).count();
                if parents >= 2 {
                    let len = 2 * df;
                    girth = Some(girth.map_or(len, |x| x.min(len)));
                }
            }
        }
    }
    let comps = g.components();
    let component_diameters: Vec<usize> = comps
        .iter()
        .map(|c| c.iter().flat_map(|&x| c.iter().map(move |&y| (x, y))).filter_map(|(x, y)| distance[x][y]).max().unwrap_or(0))
        .collect();
    let diameter = (comps.len() <= 1).then(|| component_diameters.first().copied().unwrap_or(0));
    Metrics { diameter, component_diameters, girth, odd_girth: odd, distance }
}

/// Intersection array `({b_0..b_(D-1)}, {c_1..c_D})` if the graph is connected and distance-regular.
pub fn intersection_array(g: &Graph) -> Option<(Vec<usize>, Vec<usize>)> {
    if g.n() == 0 || !g.is_connected() {
        return None;
    }
    let dist = g.distance_matrix();
    let diam = dist.iter().flatten().flatten().copied().max().unwrap_or(0);
    let mut b: Vec<Option<usize>> = vec![None; diam + 1];
    let mut c: Vec<Option<usize>> = vec![None; diam + 1];
    for x in 0..g.n() {
        for y in 0..g.n() {
            let i = dist[x][y]?;
            let count = |off: isize| {
                g.neighbors(y)
                    .iter()
                    .filter(|&&z| dist[x][z].map(|d| d as isize) == Some(i as isize + off))
                    .count()
            };
            for (slot, val) in [(&mut b[i], count(1)), (&mut c[i], count(-1))] {
                match slot {
                    None => *slot = Some(val),
                    Some(old) if *old != val => return None,
                    _ => {}
                }
            }
        }
    }
    let b: Vec<usize> = b[..diam].iter().map(|v| v.unwrap()).collect();
    let c: Vec<usize> = c[1..].iter().map(|v| v.unwrap()).collect();
    Some((b, c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{catalog_graph, cycle};

    #[test]
    fn pentagon() {
        let m = metrics(&cycle(5).unwrap());
        assert_eq!((m.diameter, m.girth, m.odd_girth), (Some(2), Some(5), Some(5)));
    }

    #[test]
    fn even_cycles_and_trees() {
        let m = metrics(&cycle(6).unwrap());
        assert_eq!((m.girth, m.odd_girth), (Some(6), None));
        let tree = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let m = metrics(&tree);
        assert_eq!((m.girth, m.diameter), (None, Some(3)));
    }

    #[test]
    fn catalog_girths() {
        let m = metrics(&catalog_graph("f048a").unwrap());
        assert_eq!(m.girth, Some(8));
        let m = metrics(&catalog_graph("dodecahedron").unwrap());
        assert_eq!((m.diameter, m.girth), (Some(5), Some(5)));
        assert_eq!(metrics(&catalog_graph("k33").unwrap()).girth, Some(4));
        assert_eq!(metrics(&catalog_graph("cube").unwrap()).girth, Some(4));
        assert_eq!(metrics(&catalog_graph("tetrahedron").unwrap()).girth, Some(3));
    }

    #[test]
    fn disconnected_reports_components() {
        let g = Graph::new(5, &[(0, 1), (2, 3), (3, 4)]).unwrap();
        let m = metrics(&g);
        assert_eq!(m.diameter, None);
        assert_eq!(m.component_diameters, vec![1, 2]);
    }

    #[test]
    fn distance_regular_arrays() {
        assert_eq!(intersection_array(&catalog_graph("cube").unwrap()), Some((vec![3, 2, 1], vec![1, 2, 3])));
        assert_eq!(intersection_array(&catalog_graph("petersen").unwrap()), Some((vec![3, 2], vec![1, 1])));
        assert_eq!(intersection_array(&catalog_graph("mobius-kantor").unwrap()), None);
    }
}
