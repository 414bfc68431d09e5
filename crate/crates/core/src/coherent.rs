//! Coherent configurations: WL-2 closure, orbital configurations and intersection tensors.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Graph, Permutation};

/// A partition of `X x X` into colour classes `0..rank` with constant intersection numbers.
///
/// Colours are numbered canonically: diagonal colours first in order of appearance along the
/// diagonal, then the remaining colours in order of first appearance in a row-major scan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoherentConfiguration {
    n: usize,
    rank: usize,
    color: Vec<u32>,
    fibers: usize,
    transpose: Vec<usize>,
    tensor: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Properties {
    pub homogeneous: bool,
    pub symmetric: bool,
    pub commutative: bool,
}

impl CoherentConfiguration {
    /// Checks the axioms for an arbitrary colouring (given as `colors[x*n + y]`) and counts
    /// the intersection tensor. Fails if the colouring is not coherent.
    pub fn from_colors(n: usize, colors: &[u32]) -> Result<Self> {
        if colors.len() != n * n || n == 0 {
            return Err(Error::DimensionMismatch(format!("{} colours for {n} points", colors.len())));
        }
        let (color, rank, fibers) = canonical(n, colors);
        for x in 0..n {
            for y in 0..n {
                let c = color[x * n + y] as usize;
                if (x == y) != (c < fibers) {
                    return Err(Error::AxiomViolation(format!("colour {c} meets the diagonal only partly")));
                }
            }
        }
        let mut transpose = vec![usize::MAX; rank];
        for x in 0..n {
            for y in 0..n {
                let c = color[x * n + y] as usize;
                let t = color[y * n + x] as usize;
                if transpose[c] == usize::MAX {
                    transpose[c] = t;
                } else if transpose[c] != t {
                    return Err(Error::AxiomViolation(format!("transpose of colour {c} is not a colour")));
                }
            }
        }
        let mut tensor: Vec<Option<usize>> = vec![None; rank * rank * rank];
        let mut counts = vec![0usize; rank * rank];
        for x in 0..n {
            for y in 0..n {
                let h = color[x * n + y] as usize;
                counts.iter_mut().for_each(|c| *c = 0);
                for z in 0..n {
                    counts[color[x * n + z] as usize * rank + color[z * n + y] as usize] += 1;
                }
                for i in 0..rank {
                    for j in 0..rank {
                        let slot = &mut tensor[(h * rank + i) * rank + j];
                        let v = counts[i * rank + j];
                        match slot {
                            None => *slot = Some(v),
                            Some(old) if *old != v => {
                                return Err(Error::AxiomViolation(format!(
                                    "p^{h}_{{{i},{j}}} is not constant over colour {h}"
                                )))
                            }
                            _ => {}
                        }
                    }
                }
            }
        }
        let tensor = tensor.into_iter().map(|v| v.unwrap_or(0)).collect();
        Ok(CoherentConfiguration { n, rank, color, fibers, transpose, tensor })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn color(&self, x: usize, y: usize) -> usize {
        self.color[x * self.n + y] as usize
    }

    pub fn colors(&self) -> &[u32] {
        &self.color
    }

    /// Number of diagonal colours.
    pub fn fiber_count(&self) -> usize {
        self.fibers
    }

    /// The colour `i'` with `R_i' = R_i^T`.
    pub fn transpose_of(&self, i: usize) -> usize {
        self.transpose[i]
    }

    /// `p^h_{ij}`: for `(x, y)` of colour `h`, the number of `z` with `(x,z)` in `i` and `(z,y)` in `j`.
    pub fn p(&self, h: usize, i: usize, j: usize) -> usize {
        self.tensor[(h * self.rank + i) * self.rank + j]
    }

    /// Out-valency of colour `i` (number of `y` with `(x, y)` in `i` for any `x` in its fibre).
    pub fn valency(&self, i: usize) -> usize {
        let x = (0..self.n).find(|&x| (0..self.n).any(|y| self.color(x, y) == i)).unwrap_or(0);
        (0..self.n).filter(|&y| self.color(x, y) == i).count()
    }

    pub fn relation_matrix(&self, i: usize) -> Vec<Vec<bool>> {
        (0..self.n).map(|x| (0..self.n).map(|y| self.color(x, y) == i).collect()).collect()
    }

    pub fn pairs(&self, i: usize) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for x in 0..self.n {
            for y in 0..self.n {
                if self.color(x, y) == i {
                    out.push((x, y));
                }
            }
        }
        out
    }

    pub fn classify_properties(&self) -> Properties {
        let homogeneous = self.fibers == 1;
        let symmetric = (0..self.rank).all(|i| self.transpose[i] == i);
        let r = self.rank;
        let commutative = (0..r).all(|h| (0..r).all(|i| (0..r).all(|j| self.p(h, i, j) == self.p(h, j, i))));
        Properties { homogeneous, symmetric, commutative }
    }

    /// A witness `(h, i, j)` with `p^h_{ij} != p^h_{ji}`, if any.
    pub fn noncommuting_triple(&self) -> Option<(usize, usize, usize)> {
        let r = self.rank;
        for h in 0..r {
            for i in 0..r {
                for j in i + 1..r {
                    if self.p(h, i, j) != self.p(h, j, i) {
                        return Some((h, i, j));
                    }
                }
            }
        }
        None
    }

    /// Whether every colour of `self` is a union of colours of `finer`.
    pub fn is_refined_by(&self, finer: &CoherentConfiguration) -> bool {
        if self.n != finer.n {
            return false;
        }
        let mut image: Vec<Option<usize>> = vec![None; finer.rank];
        for x in 0..self.n {
            for y in 0..self.n {
                let f = finer.color(x, y);
                let c = self.color(x, y);
                match image[f] {
                    None => image[f] = Some(c),
                    Some(old) if old != c => return false,
                    _ => {}
                }
            }
        }
        true
    }

    /// Index of the colour whose pairs are exactly the edges of `g`, if there is one.
    pub fn relation_of_graph(&self, g: &Graph) -> Option<usize> {
        let (u, v) = *g.edges().first()?;
        let c = self.color(u, v);
        let pairs = self.pairs(c);
        let ok = pairs.len() == 2 * g.edge_count() && pairs.iter().all(|&(x, y)| g.has_edge(x, y));
        ok.then_some(c)
    }

    /// Text form: `n r`, the colour matrix row by row, then `h i j p` for every nonzero `p^h_{ij}`.
    pub fn to_text(&self) -> String {
        let mut s = format!("{} {}\n", self.n, self.rank);
        for x in 0..self.n {
            let row: Vec<String> = (0..self.n).map(|y| self.color(x, y).to_string()).collect();
            writeln!(s, "{}", row.join(" ")).unwrap();
        }
        for h in 0..self.rank {
            for i in 0..self.rank {
                for j in 0..self.rank {
                    let p = self.p(h, i, j);
                    if p > 0 {
                        writeln!(s, "{h} {i} {j} {p}").unwrap();
                    }
                }
            }
        }
        s
    }

    /// Reads [`CoherentConfiguration::to_text`] output and checks the stored tensor against a recount.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let nums = |line: usize, l: &str| -> Result<Vec<usize>> {
            l.split_whitespace()
                .map(|t| t.parse::<usize>().map_err(|e| Error::Parse { line, msg: e.to_string() }))
                .collect()
        };
        let (hl, header) = lines.next().ok_or(Error::Parse { line: 1, msg: "empty input".into() })?;
        let h = nums(hl, header)?;
        if h.len() != 2 {
            return Err(Error::Parse { line: hl, msg: "expected `n r`".into() });
        }
        let (n, r) = (h[0], h[1]);
        let mut colors = Vec::with_capacity(n * n);
        for _ in 0..n {
            let (ln, l) = lines.next().ok_or(Error::Parse { line: hl, msg: "missing colour rows".into() })?;
            let row = nums(ln, l)?;
            if row.len() != n {
                return Err(Error::Parse { line: ln, msg: format!("expected {n} colours") });
            }
            colors.extend(row.into_iter().map(|c| c as u32));
        }
        let mut quads = Vec::new();
        for (ln, l) in lines {
            let q = nums(ln, l)?;
            if q.len() != 4 {
                return Err(Error::Parse { line: ln, msg: "expected `h i j p`".into() });
            }
            quads.push((ln, q));
        }
        let cc = CoherentConfiguration::from_colors(n, &colors)?;
        if cc.rank != r || cc.color.iter().zip(&colors).any(|(a, b)| a != b) {
            return Err(Error::Parse { line: hl, msg: "colour matrix is not in canonical form".into() });
        }
        let mut listed = vec![0usize; r * r * r];
        for (ln, q) in quads {
            if q[0] >= r || q[1] >= r || q[2] >= r {
                return Err(Error::Parse { line: ln, msg: "colour index out of range".into() });
            }
            listed[(q[0] * r + q[1]) * r + q[2]] = q[3];
        }
        if listed != cc.tensor {
            return Err(Error::Parse { line: hl, msg: "intersection numbers disagree with the colour matrix".into() });
        }
        Ok(cc)
    }
}

fn canonical(n: usize, colors: &[u32]) -> (Vec<u32>, usize, usize) {
    let mut map: BTreeMap<u32, u32> = BTreeMap::new();
    for x in 0..n {
        let c = colors[x * n + x];
        let next = map.len() as u32;
        map.entry(c).or_insert(next);
    }
    let fibers = map.len();
    for &c in colors {
        let next = map.len() as u32;
        map.entry(c).or_insert(next);
    }
    let out = colors.iter().map(|c| map[c]).collect();
    (out, map.len(), fibers)
}

/// WL-2 stabilization of the colouring given by membership in each input relation.
pub fn coherent_closure(n: usize, relations: &[Vec<Vec<bool>>]) -> Result<CoherentConfiguration> {
    if n == 0 {
        return Err(Error::DimensionMismatch("closure of an empty point set".into()));
    }
    for rel in relations {
        if rel.len() != n || rel.iter().any(|r| r.len() != n) {
            return Err(Error::DimensionMismatch(format!("relation is not {n}x{n}")));
        }
    }
    let mut initial: BTreeMap<Vec<bool>, u32> = BTreeMap::new();
    let mut color = vec![0u32; n * n];
    for x in 0..n {
        for y in 0..n {
            let mut key = vec![x == y];
            key.extend(relations.iter().map(|r| r[x][y]));
            let next = initial.len() as u32;
            color[x * n + y] = *initial.entry(key).or_insert(next);
        }
    }
    let mut count = initial.len();
    loop {
        let mut sigs: Vec<(u32, u32, Vec<(u32, u32, u32)>)> = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                let mut items: Vec<(u32, u32)> = (0..n).map(|z| (color[x * n + z], color[z * n + y])).collect();
                items.sort_unstable();
                let mut runs: Vec<(u32, u32, u32)> = Vec::new();
                for (a, b) in items {
                    match runs.last_mut() {
                        Some(last) if last.0 == a && last.1 == b => last.2 += 1,
                        _ => runs.push((a, b, 1)),
                    }
                }
                sigs.push((color[x * n + y], color[y * n + x], runs));
            }
        }
        let mut dict: BTreeMap<&(u32, u32, Vec<(u32, u32, u32)>), u32> = BTreeMap::new();
        for s in &sigs {
            let next = dict.len() as u32;
            dict.entry(s).or_insert(next);
        }
        let next_count = dict.len();
        let new_color: Vec<u32> = sigs.iter().map(|s| dict[s]).collect();
        color = new_color;
        if next_count == count {
            break;
        }
        count = next_count;
    }
    CoherentConfiguration::from_colors(n, &color)
}

/// Coherent closure of the adjacency relation of `g`.
pub fn graph_closure(g: &Graph) -> Result<CoherentConfiguration> {
    coherent_closure(g.n(), &[g.adjacency_bool()])
}

/// Orbitals of a permutation group acting on the vertices of `g`. Every element must be an
/// automorphism of `g`; an intransitive group gives a non-homogeneous configuration.
pub fn orbital_configuration(g: &Graph, group: &[Permutation]) -> Result<CoherentConfiguration> {
    let n = g.n();
    for (idx, p) in group.iter().enumerate() {
        let mut seen = vec![false; n];
        if p.len() != n || p.iter().any(|&v| v >= n || std::mem::replace(&mut seen[v], true)) {
            return Err(Error::NotPermutation(idx));
        }
        if g.edges().iter().any(|&(u, v)| !g.has_edge(p[u], p[v])) {
            return Err(Error::InvalidParameters(format!("group element {idx} is not an automorphism")));
        }
    }
    let mut color = vec![u32::MAX; n * n];
    let mut next = 0u32;
    for x in 0..n {
        for y in 0..n {
            if color[x * n + y] != u32::MAX {
                continue;
            }
            color[x * n + y] = next;
            for p in group {
                color[p[x] * n + p[y]] = next;
            }
            next += 1;
        }
    }
    CoherentConfiguration::from_colors(n, &color)
}
