//! Symmetric association schemes.

mod diagram;
mod fission;
mod ops;

use std::fmt::Write as _;

use crate::coherent::{graph_closure, CoherentConfiguration};
use crate::error::{Error, Result};
use crate::exact::{rat, ExactMatrix};
use crate::graph::{catalog_graph, Graph};

pub use diagram::{relation_distribution_diagram, Diagram};
pub use fission::{fission_feasibility, FissionReport};
pub use ops::{
    bipartite_double_scheme, direct_product, is_complete_multipartite, partially_metric_order, quotient_scheme,
    scheme_isomorphism, symmetrize, PartialMetric, Quotient,
};

/// A symmetric association scheme on `0..n` with relations `R_0 = identity, R_1, ..., R_d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AssociationScheme {
    n: usize,
    d: usize,
    rel: Vec<u32>,
    valency: Vec<usize>,
    tensor: Vec<usize>,
}

impl AssociationScheme {
    /// Builds a scheme from relation labels `labels[x*n + y]` in `0..=d`, keeping the numbering.
    /// Label 0 must be exactly the diagonal; every axiom is checked by counting.
    pub fn from_labels(n: usize, labels: &[u32]) -> Result<Self> {
        if n == 0 || labels.len() != n * n {
            return Err(Error::DimensionMismatch(format!("{} labels for {n} points", labels.len())));
        }
        let rank = *labels.iter().max().unwrap() as usize + 1;
        let mut valency = vec![0usize; rank];
        for x in 0..n {
            for y in 0..n {
                let l = labels[x * n + y] as usize;
                if (l == 0) != (x == y) {
                    return Err(Error::AxiomViolation("relation 0 is not the identity".into()));
                }
                if labels[y * n + x] as usize != l {
                    return Err(Error::NotSymmetric(l));
                }
                if x == 0 {
                    valency[l] += 1;
                }
            }
        }
        if let Some(i) = valency.iter().position(|&k| k == 0) {
            return Err(Error::AxiomViolation(format!("relation {i} is empty")));
        }
        let mut tensor: Vec<Option<usize>> = vec![None; rank * rank * rank];
        let mut counts = vec![0usize; rank * rank];
        for x in 0..n {
            let mut row_valency = vec![0usize; rank];
            for y in 0..n {
                row_valency[labels[x * n + y] as usize] += 1;
            }
            if row_valency != valency {
                return Err(Error::AxiomViolation(format!("valencies differ at point {x}")));
            }
            for y in 0..n {
                let h = labels[x * n + y] as usize;
                counts.iter_mut().for_each(|c| *c = 0);
                for z in 0..n {
                    counts[labels[x * n + z] as usize * rank + labels[z * n + y] as usize] += 1;
                }
                for (ij, &v) in counts.iter().enumerate() {
                    let slot = &mut tensor[h * rank * rank + ij];
                    match slot {
                        None => *slot = Some(v),
                        Some(old) if *old != v => {
                            return Err(Error::AxiomViolation(format!(
                                "p^{h}_{{{},{}}} is not constant",
                                ij / rank,
                                ij % rank
                            )))
                        }
                        _ => {}
                    }
                }
            }
        }
        let tensor = tensor.into_iter().map(|v| v.unwrap_or(0)).collect();
        Ok(AssociationScheme { n, d: rank - 1, rel: labels.to_vec(), valency, tensor })
    }

    /// Converts a homogeneous symmetric coherent configuration, keeping its colour order.
    pub fn from_configuration(cc: &CoherentConfiguration) -> Result<Self> {
        if cc.fiber_count() != 1 {
            return Err(Error::NotHomogeneous(cc.fiber_count()));
        }
        if let Some(i) = (0..cc.rank()).find(|&i| cc.transpose_of(i) != i) {
            return Err(Error::NotSymmetric(i));
        }
        AssociationScheme::from_labels(cc.n(), cc.colors())
    }

    /// Rank-2 scheme on `n >= 2` points, or the rank-1 scheme on one point.
    pub fn trivial(n: usize) -> Result<Self> {
        let labels: Vec<u32> = (0..n * n).map(|p| (p / n != p % n) as u32).collect();
        AssociationScheme::from_labels(n, &labels)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of non-identity relations.
    pub fn d(&self) -> usize {
        self.d
    }

    pub fn rank(&self) -> usize {
        self.d + 1
    }

    pub fn relation(&self, x: usize, y: usize) -> usize {
        self.rel[x * self.n + y] as usize
    }

    pub fn labels(&self) -> &[u32] {
        &self.rel
    }

    pub fn valency(&self, i: usize) -> usize {
        self.valency[i]
    }

    pub fn valencies(&self) -> &[usize] {
        &self.valency
    }

    pub fn p(&self, h: usize, i: usize, j: usize) -> usize {
        let r = self.rank();
        self.tensor[(h * r + i) * r + j]
    }

    /// `R_i(x)`, ascending.
    pub fn neighbors(&self, i: usize, x: usize) -> Vec<usize> {
        (0..self.n).filter(|&y| self.relation(x, y) == i).collect()
    }

    pub fn relation_matrix(&self, i: usize) -> ExactMatrix {
        ExactMatrix::from_fn(self.n, self.n, |x, y| rat((self.relation(x, y) == i) as i64))
    }

    /// `L_i` with `(L_i)_{h,l} = p^h_{il}`.
    pub fn intersection_matrix(&self, i: usize) -> ExactMatrix {
        let r = self.rank();
        ExactMatrix::from_fn(r, r, |h, l| rat(self.p(h, i, l) as i64))
    }

    /// The scheme graph of relation `i`.
    pub fn graph(&self, i: usize) -> Graph {
        let mut edges = Vec::new();
        for x in 0..self.n {
            for y in x + 1..self.n {
                if self.relation(x, y) == i {
                    edges.push((x, y));
                }
            }
        }
        Graph::new(self.n, &edges).expect("relation graph is simple")
    }

    /// Applies `order`, where `order[new] = old`; `order[0]` must be 0.
    pub fn reorder(&self, order: &[usize]) -> Result<Self> {
        if order.len() != self.rank() || order.first() != Some(&0) {
            return Err(Error::InvalidParameters("relation order must start with 0 and cover every relation".into()));
        }
        let mut inv = vec![usize::MAX; self.rank()];
        for (new, &old) in order.iter().enumerate() {
            if old >= self.rank() || inv[old] != usize::MAX {
                return Err(Error::InvalidParameters("relation order is not a permutation".into()));
            }
            inv[old] = new;
        }
        let labels: Vec<u32> = self.rel.iter().map(|&l| inv[l as usize] as u32).collect();
        AssociationScheme::from_labels(self.n, &labels)
    }

    /// Whether the scheme graph of `i` is connected.
    pub fn is_connected_relation(&self, i: usize) -> bool {
        self.graph(i).is_connected()
    }

    /// Text form: `n d`, then for each relation `i >= 1` a line `rel i` and its pairs `x y` with `x < y`.
    pub fn to_text(&self) -> String {
        let mut s = format!("{} {}\n", self.n, self.d);
        for i in 1..=self.d {
            writeln!(s, "rel {i}").unwrap();
            for x in 0..self.n {
                for y in x + 1..self.n {
                    if self.relation(x, y) == i {
                        writeln!(s, "{x} {y}").unwrap();
                    }
                }
            }
        }
        s
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut header: Option<(usize, usize)> = None;
        let mut current: Option<usize> = None;
        let mut labels: Vec<u32> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |msg: &str| Error::Parse { line: line_no, msg: msg.to_string() };
            let tokens: Vec<&str> = line.split_whitespace().collect();
            let nums = |t: &[&str]| -> Result<Vec<usize>> {
                t.iter().map(|s| s.parse::<usize>().map_err(|e| err(&e.to_string()))).collect()
            };
            match header {
                None => {
                    let v = nums(&tokens)?;
                    if v.len() != 2 || v[0] == 0 {
                        return Err(err("expected header `n d`"));
                    }
                    header = Some((v[0], v[1]));
                    labels = vec![u32::MAX; v[0] * v[0]];
                    for x in 0..v[0] {
                        labels[x * v[0] + x] = 0;
                    }
                }
                Some((n, d)) => {
                    if tokens[0] == "rel" {
                        let v = nums(&tokens[1..])?;
                        if v.len() != 1 || v[0] == 0 || v[0] > d {
                            return Err(err("relation index out of range"));
                        }
                        current = Some(v[0]);
                    } else {
                        let rel = current.ok_or_else(|| err("pair before any `rel` line"))?;
                        let v = nums(&tokens)?;
                        if v.len() != 2 || v[0] >= n || v[1] >= n || v[0] == v[1] {
                            return Err(err("expected a pair `x y` of distinct points"));
                        }
                        for (a, b) in [(v[0], v[1]), (v[1], v[0])] {
                            if labels[a * n + b] != u32::MAX {
                                return Err(err("pair listed twice"));
                            }
                            labels[a * n + b] = rel as u32;
                        }
                    }
                }
            }
        }
        let (n, _) = header.ok_or(Error::Parse { line: 1, msg: "missing header".into() })?;
        if labels.contains(&u32::MAX) {
            return Err(Error::Parse { line: 0, msg: "some pairs are not in any relation".into() });
        }
        AssociationScheme::from_labels(n, &labels)
    }
}

/// The scheme generated by a catalog graph, with its relations reordered so that `R_1` is the
/// graph and `R_2, ..., R_t` are its distance relations.
///
/// `bd-NAME` is the exception: it is the bipartite double of the scheme of `NAME` on the points
/// of the bipartite double graph (`x+ = x`, `x- = n + x`), which can be finer than the scheme
/// the double graph generates (for the dodecahedron the latter is a rank 9 fusion).
pub fn catalog_scheme(name: &str) -> Result<AssociationScheme> {
    if let Some(base) = name.strip_prefix("bd-") {
        let b = catalog_scheme(base)?;
        let n = b.n();
        let mut labels = Vec::with_capacity(4 * n * n);
        for u in 0..2 * n {
            for v in 0..2 * n {
                labels.push((b.relation(u % n, v % n) * 2 + usize::from((u < n) != (v < n))) as u32);
            }
        }
        let s = AssociationScheme::from_labels(2 * n, &labels)?;
        let r = s.relation(0, n + b.neighbors(1, 0)[0]);
        return Ok(partially_metric_order(&s, r)?.scheme);
    }
    scheme_of_graph(&catalog_graph(name)?)
}

/// Coherent closure of `g` as a scheme, ordered by distance from the graph relation.
pub fn scheme_of_graph(g: &Graph) -> Result<AssociationScheme> {
    let cc = graph_closure(g)?;
    let s = AssociationScheme::from_configuration(&cc)?;
    let r = cc
        .relation_of_graph(g)
        .ok_or_else(|| Error::InvalidGraph("the graph is not a single relation of its closure".into()))?;
    Ok(partially_metric_order(&s, r)?.scheme)
}
