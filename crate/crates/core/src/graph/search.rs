//! Backtracking isomorphism search over complete pair-colorings.
//!
//! A structure colors every ordered pair of points. Candidates are restricted by a joint
//! colour refinement of both structures and, along a BFS order of an "anchor" relation, to
//! anchor-neighbours of the image of the BFS parent. In bijection mode the colours of the two
//! structures only have to correspond under some bijection, which is built up during the search.

use std::collections::{BTreeMap, VecDeque};

use super::Graph;
use crate::error::{Error, Result};

pub type Permutation = Vec<usize>;

const DEFAULT_MAX_N: usize = 64;

/// Size guard for exhaustive searches: `SCHEMEFORGE_MAX_N` or 64.
pub fn max_search_size() -> usize {
    std::env::var("SCHEMEFORGE_MAX_N")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_MAX_N)
}

#[derive(Clone, Debug)]
pub(crate) struct Structure {
    n: usize,
    colors: Vec<u32>,
    anchor: Vec<Vec<usize>>,
    /// Colour invariant used in bijection mode: (pairs of that colour, lies on the diagonal).
    class: BTreeMap<u32, (usize, bool)>,
}

impl Structure {
    /// `colors[x * n + y]` is the colour of `(x, y)`; `anchor` lists out-neighbours in the anchor relation.
    pub(crate) fn new(n: usize, colors: Vec<u32>, anchor: Vec<Vec<usize>>) -> Structure {
        let mut class: BTreeMap<u32, (usize, bool)> = BTreeMap::new();
        for x in 0..n {
            for y in 0..n {
                let e = class.entry(colors[x * n + y]).or_insert((0, false));
                e.0 += 1;
                if x == y {
                    e.1 = true;
                }
            }
        }
        Structure { n, colors, anchor, class }
    }

    pub(crate) fn from_graph(g: &Graph) -> Structure {
        let n = g.n();
        let mut colors = vec![2u32; n * n];
        for x in 0..n {
            colors[x * n + x] = 0;
            for &y in g.neighbors(x) {
                colors[x * n + y] = 1;
            }
        }
        let anchor = (0..n).map(|x| g.neighbors(x).to_vec()).collect();
        Structure::new(n, colors, anchor)
    }

    fn color(&self, x: usize, y: usize) -> u32 {
        self.colors[x * self.n + y]
    }
}

#[derive(Clone, Debug)]
pub(crate) enum Mode {
    /// Colours must agree exactly.
    Fixed,
    /// Colours must correspond under a bijection extending the given partial map.
    Bijection(BTreeMap<u32, u32>),
}

struct Refined {
    a: Vec<u32>,
    b: Vec<u32>,
}

fn refine(a: &Structure, b: &Structure, mode: &Mode) -> Option<Refined> {
    let key = |s: &Structure, x: usize, y: usize| -> u64 {
        let c = s.color(x, y);
        match mode {
            Mode::Fixed => c as u64,
            Mode::Bijection(_) => {
                let (count, diag) = s.class[&c];
                ((count as u64) << 1) | diag as u64
            }
        }
    };
    let n = a.n;
    let mut ca: Vec<u32> = vec![0; n];
    let mut cb: Vec<u32> = vec![0; n];
    let mut cells = 0usize;
    let mut first = true;
    loop {
        let sig = |s: &Structure, cur: &[u32], x: usize| -> (u64, u32, Vec<((u64, u64), u32, u32)>) {
            let mut items: Vec<((u64, u64), u32)> = (0..n).map(|w| ((key(s, x, w), key(s, w, x)), cur[w])).collect();
            items.sort_unstable();
            let mut runs: Vec<((u64, u64), u32, u32)> = Vec::new();
            for (k, c) in items {
                match runs.last_mut() {
                    Some(last) if last.0 == k && last.1 == c => last.2 += 1,
                    _ => runs.push((k, c, 1)),
                }
            }
            (key(s, x, x), if first { 0 } else { cur[x] }, runs)
        };
        let sa: Vec<_> = (0..n).map(|x| sig(a, &ca, x)).collect();
        let sb: Vec<_> = (0..n).map(|x| sig(b, &cb, x)).collect();
        let mut dict: BTreeMap<&(u64, u32, Vec<((u64, u64), u32, u32)>), u32> = BTreeMap::new();
        for s in sa.iter().chain(sb.iter()) {
            dict.insert(s, 0);
        }
        for (i, v) in dict.values_mut().enumerate() {
            *v = i as u32;
        }
        let na: Vec<u32> = sa.iter().map(|s| dict[s]).collect();
        let nb: Vec<u32> = sb.iter().map(|s| dict[s]).collect();
        let mut ha = vec![0usize; dict.len()];
        let mut hb = vec![0usize; dict.len()];
        for &c in &na {
            ha[c as usize] += 1;
        }
        for &c in &nb {
            hb[c as usize] += 1;
        }
        if ha != hb {
            return None;
        }
        let stable = !first && dict.len() == cells;
        cells = dict.len();
        ca = na;
        cb = nb;
        first = false;
        if stable {
            return Some(Refined { a: ca, b: cb });
        }
    }
}

struct Searcher<'s> {
    a: &'s Structure,
    b: &'s Structure,
    cell_a: Vec<u32>,
    cell_b: Vec<u32>,
    order: Vec<usize>,
    parent: Vec<Option<usize>>,
    image: Vec<usize>,
    used: Vec<bool>,
    fixed: bool,
    cmap: BTreeMap<u32, u32>,
    cinv: BTreeMap<u32, u32>,
    find_all: bool,
    found: Vec<Permutation>,
}

impl Searcher<'_> {
    fn run(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            let mut perm = vec![0; self.a.n];
            for (i, &x) in self.order.iter().enumerate() {
                perm[x] = self.image[i];
            }
            self.found.push(perm);
            return !self.find_all;
        }
        let x = self.order[depth];
        let candidates: Vec<usize> = match self.parent[depth] {
            Some(pi) => {
                let mut c = self.b.anchor[self.image[pi]].clone();
                c.sort_unstable();
                c
            }
            None => (0..self.b.n).collect(),
        };
        for y in candidates {
            if self.used[y] || self.cell_a[x] != self.cell_b[y] {
                continue;
            }
            let mut added: Vec<u32> = Vec::new();
            if self.consistent(depth, x, y, &mut added) {
                self.used[y] = true;
                self.image.push(y);
                if self.run(depth + 1) {
                    return true;
                }
                self.image.pop();
                self.used[y] = false;
            }
            for c in added {
                let d = self.cmap.remove(&c).unwrap();
                self.cinv.remove(&d);
            }
        }
        false
    }

    fn matches(&mut self, ca: u32, cb: u32, added: &mut Vec<u32>) -> bool {
        if self.fixed {
            return ca == cb;
        }
        match (self.cmap.get(&ca), self.cinv.get(&cb)) {
            (Some(&m), _) => m == cb,
            (None, Some(_)) => false,
            (None, None) => {
                if self.a.class[&ca] != self.b.class[&cb] {
                    return false;
                }
                self.cmap.insert(ca, cb);
                self.cinv.insert(cb, ca);
                added.push(ca);
                true
            }
        }
    }

    fn consistent(&mut self, depth: usize, x: usize, y: usize, added: &mut Vec<u32>) -> bool {
        if !self.matches(self.a.color(x, x), self.b.color(y, y), added) {
            return false;
        }
        for j in 0..depth {
            let xj = self.order[j];
            let yj = self.image[j];
            if !self.matches(self.a.color(xj, x), self.b.color(yj, y), added)
                || !self.matches(self.a.color(x, xj), self.b.color(y, yj), added)
            {
                return false;
            }
        }
        true
    }
}

/// Runs the search. Returns every isomorphism when `find_all`, otherwise at most one.
pub(crate) fn search(a: &Structure, b: &Structure, mode: Mode, find_all: bool) -> Vec<Permutation> {
    if a.n != b.n {
        return Vec::new();
    }
    let n = a.n;
    if n == 0 {
        return vec![Vec::new()];
    }
    let Some(refined) = refine(a, b, &mode) else { return Vec::new() };
    let mut size = BTreeMap::new();
    for &c in &refined.a {
        *size.entry(c).or_insert(0usize) += 1;
    }
    // BFS order over the anchor relation, restarting from the smallest remaining cell
    let mut order = Vec::with_capacity(n);
    let mut parent_of = vec![None; n];
    let mut seen = vec![false; n];
    while order.len() < n {
        let start = (0..n).filter(|&v| !seen[v]).min_by_key(|&v| (size[&refined.a[v]], v)).unwrap();
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            order.push(u);
            let mut next = a.anchor[u].clone();
            next.sort_unstable();
            for w in next {
                if !seen[w] {
                    seen[w] = true;
                    parent_of[w] = Some(u);
                    queue.push_back(w);
                }
            }
        }
    }
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let parent = order.iter().map(|&v| parent_of[v].map(|p| pos[p])).collect();
    let (fixed, cmap) = match mode {
        Mode::Fixed => (true, BTreeMap::new()),
        Mode::Bijection(m) => (false, m),
    };
    let cinv = cmap.iter().map(|(&k, &v)| (v, k)).collect();
    let mut s = Searcher {
        a,
        b,
        cell_a: refined.a,
        cell_b: refined.b,
        order,
        parent,
        image: Vec::with_capacity(n),
        used: vec![false; n],
        fixed,
        cmap,
        cinv,
        find_all,
        found: Vec::new(),
    };
    s.run(0);
    s.found
}

/// An isomorphism `g1 -> g2` as a vertex map, or `None` if the graphs are not isomorphic.
pub fn isomorphic(g1: &Graph, g2: &Graph) -> Option<Permutation> {
    if g1.n() != g2.n() || g1.edge_count() != g2.edge_count() {
        return None;
    }
    let mut d1: Vec<usize> = (0..g1.n()).map(|v| g1.degree(v)).collect();
    let mut d2: Vec<usize> = (0..g2.n()).map(|v| g2.degree(v)).collect();
    d1.sort_unstable();
    d2.sort_unstable();
    if d1 != d2 {
        return None;
    }
    search(&Structure::from_graph(g1), &Structure::from_graph(g2), Mode::Fixed, false).pop()
}

/// The full automorphism group, enumerated, in lexicographic search order.
pub fn automorphisms(g: &Graph) -> Result<Vec<Permutation>> {
    automorphisms_with_limit(g, max_search_size())
}

pub fn automorphisms_with_limit(g: &Graph, limit: usize) -> Result<Vec<Permutation>> {
    if g.n() > limit {
        return Err(Error::GuardExceeded { n: g.n(), limit });
    }
    let s = Structure::from_graph(g);
    let mut group = search(&s, &s, Mode::Fixed, true);
    group.sort();
    Ok(group)
}
