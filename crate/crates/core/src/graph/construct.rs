use std::collections::BTreeMap;

use super::Graph;
use crate::error::{Error, Result};
use crate::exact::{rat, ExactMatrix, Rational};

/// `GP(n, k)`: outer cycle `i ~ i±1`, spokes `i ~ i*`, inner edges `i* ~ (i±k)*`, with `i* = n + i`.
pub fn generalized_petersen(n: usize, k: usize) -> Result<Graph> {
    if n < 3 || k == 0 || k >= n || 2 * k == n {
        return Err(Error::InvalidParameters(format!("GP({n},{k}) would have loops or repeated edges")));
    }
    let mut edges = Vec::with_capacity(3 * n);
    for i in 0..n {
        edges.push((i, (i + 1) % n));
        edges.push((i, n + i));
        edges.push((n + i, n + (i + k) % n));
    }
    Graph::new(2 * n, &edges).map_err(|e| Error::InvalidParameters(format!("GP({n},{k}): {e}")))
}

/// Bipartite double: `x+ = x`, `x- = n + x`, with `x+ ~ y-` whenever `x ~ y`.
pub fn bipartite_double_graph(g: &Graph) -> Graph {
    let n = g.n();
    let mut edges = Vec::with_capacity(2 * g.edge_count());
    for (u, v) in g.edges() {
        edges.push((u, n + v));
        edges.push((v, n + u));
    }
    Graph::new(2 * n, &edges).expect("bipartite double is simple")
}

/// Voltages on the arcs of a base graph, valued in `Z_{o_1} x ... x Z_{o_r}`.
#[derive(Clone, Debug, PartialEq)]
pub struct VoltageAssignment {
    base: Graph,
    orders: Vec<usize>,
    arcs: BTreeMap<(usize, usize), Vec<usize>>,
}

impl VoltageAssignment {
    /// All-zero assignment.
    pub fn new(base: Graph, orders: Vec<usize>) -> Result<Self> {
        if orders.contains(&0) {
            return Err(Error::InvalidParameters("cyclic factor of order 0".into()));
        }
        Ok(VoltageAssignment { base, orders, arcs: BTreeMap::new() })
    }

    /// Assignment over `Z_2` with voltage 1 on the listed edges.
    pub fn z2(base: Graph, ones: &[(usize, usize)]) -> Result<Self> {
        let mut v = VoltageAssignment::new(base, vec![2])?;
        for &(x, y) in ones {
            v.set_edge(x, y, vec![1])?;
        }
        Ok(v)
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn group_order(&self) -> usize {
        self.orders.iter().product()
    }

    /// Sets `alpha(x, y) = g` and `alpha(y, x) = -g`.
    pub fn set_edge(&mut self, x: usize, y: usize, g: Vec<usize>) -> Result<()> {
        if !self.base.has_edge(x, y) {
            return Err(Error::InvalidGraph(format!("{x}-{y} is not an edge of the base graph")));
        }
        let g = self.reduce(g)?;
        let neg = self.negate(&g);
        self.store(x, y, g);
        self.store(y, x, neg);
        Ok(())
    }

    /// Sets a single arc; antisymmetry is the caller's business and is checked on use.
    pub fn set_arc(&mut self, x: usize, y: usize, g: Vec<usize>) -> Result<()> {
        if !self.base.has_edge(x, y) {
            return Err(Error::InvalidGraph(format!("{x}-{y} is not an edge of the base graph")));
        }
        let g = self.reduce(g)?;
        self.store(x, y, g);
        Ok(())
    }

    /// Zero voltages are not stored, so equal assignments compare equal.
    fn store(&mut self, x: usize, y: usize, g: Vec<usize>) {
        if g.iter().all(|&a| a == 0) {
            self.arcs.remove(&(x, y));
        } else {
            self.arcs.insert((x, y), g);
        }
    }

    /// Text form: `group o_1 ... o_r`, then `n m`, then one line `u v g_1 ... g_r` per base
    /// edge giving the voltage on the arc `u -> v`.
    pub fn to_text(&self) -> String {
        let join = |v: &[usize]| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ");
        let mut s = format!("group {}\n{} {}\n", join(&self.orders), self.base.n(), self.base.edge_count());
        for (x, y) in self.base.edges() {
            s.push_str(&format!("{x} {y} {}\n", join(&self.voltage(x, y))));
        }
        s
    }

    /// Reads [`VoltageAssignment::to_text`]; `#` starts a comment.
    pub fn parse(text: &str) -> Result<Self> {
        let perr = |line: usize, msg: String| Error::Parse { line, msg };
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let nums = |line: usize, s: &str| -> Result<Vec<usize>> {
            s.split_whitespace().map(|t| t.parse::<usize>().map_err(|e| perr(line, e.to_string()))).collect()
        };
        let (gl, group) = lines.next().ok_or_else(|| perr(1, "missing `group` line".into()))?;
        let orders = nums(gl, group.strip_prefix("group").ok_or_else(|| perr(gl, "expected `group o_1 ... o_r`".into()))?)?;
        let (hl, header) = lines.next().ok_or_else(|| perr(gl + 1, "missing header `n m`".into()))?;
        let h = nums(hl, header)?;
        if h.len() != 2 {
            return Err(perr(hl, "expected `n m`".into()));
        }
        let mut edges = Vec::with_capacity(h[1]);
        let mut volts = Vec::with_capacity(h[1]);
        for (ln, l) in lines {
            let v = nums(ln, l)?;
            if v.len() != 2 + orders.len() {
                return Err(perr(ln, format!("expected `u v` and {} voltage component(s)", orders.len())));
            }
            if v[0] >= h[0] || v[1] >= h[0] {
                return Err(perr(ln, format!("vertex out of range 0..{}", h[0])));
            }
            edges.push((v[0], v[1]));
            volts.push((ln, v));
        }
        if edges.len() != h[1] {
            return Err(perr(hl, format!("header announces {} edges, found {}", h[1], edges.len())));
        }
        let base = Graph::new(h[0], &edges).map_err(|e| perr(hl, e.to_string()))?;
        let mut va = VoltageAssignment::new(base, orders).map_err(|e| perr(gl, e.to_string()))?;
        for (ln, v) in volts {
            va.set_edge(v[0], v[1], v[2..].to_vec()).map_err(|e| perr(ln, e.to_string()))?;
        }
        Ok(va)
    }

    pub fn voltage(&self, x: usize, y: usize) -> Vec<usize> {
        self.arcs.get(&(x, y)).cloned().unwrap_or_else(|| vec![0; self.orders.len()])
    }

    fn reduce(&self, g: Vec<usize>) -> Result<Vec<usize>> {
        if g.len() != self.orders.len() {
            return Err(Error::InvalidParameters("group element has the wrong number of components".into()));
        }
        Ok(g.iter().zip(&self.orders).map(|(a, o)| a % o).collect())
    }

    fn negate(&self, g: &[usize]) -> Vec<usize> {
        g.iter().zip(&self.orders).map(|(a, o)| (o - a) % o).collect()
    }

    fn add(&self, a: &[usize], b: &[usize]) -> Vec<usize> {
        a.iter().zip(b).zip(&self.orders).map(|((x, y), o)| (x + y) % o).collect()
    }

    fn index(&self, g: &[usize]) -> usize {
        g.iter().zip(&self.orders).fold(0, |acc, (a, o)| acc * o + a)
    }

    fn element(&self, mut idx: usize) -> Vec<usize> {
        let mut g = vec![0; self.orders.len()];
        for (slot, o) in g.iter_mut().zip(&self.orders).rev() {
            *slot = idx % o;
            idx /= o;
        }
        g
    }
}

/// Derived graph on `V x G`; vertex `(x, g)` is numbered `index(g) * |V| + x`.
pub fn voltage_derived(v: &VoltageAssignment) -> Result<Graph> {
    let n = v.base.n();
    let order = v.group_order();
    for (x, y) in v.base.edges() {
        if v.voltage(x, y) != v.negate(&v.voltage(y, x)) {
            return Err(Error::VoltageNotAntisymmetric(x, y));
        }
    }
    let mut edges = Vec::with_capacity(order * v.base.edge_count());
    for gi in 0..order {
        let g = v.element(gi);
        for (x, y) in v.base.edges() {
            let h = v.add(&g, &v.voltage(x, y));
            edges.push((gi * n + x, v.index(&h) * n + y));
        }
    }
    Graph::new(n * order, &edges)
}

/// The `Z_2` assignment on `GP(12,5)` whose derived graph is `GP(24,5)`: zero on the spanning
/// tree `{i, i-1}` (i != 0), `{i, i*}`, voltage 1 on `{0,11}` and on `{(i+7)*, i*}` for i = 0..4.
pub fn nauru_double_cover_voltages() -> Result<VoltageAssignment> {
    let base = generalized_petersen(12, 5)?;
    let star = |i: usize| 12 + i;
    let ones = [(0, 11), (star(7), star(0)), (star(8), star(1)), (star(9), star(2)), (star(10), star(3)), (star(11), star(4))];
    VoltageAssignment::z2(base, &ones)
}

/// Values of `k` in `0..n` with `n | k^2 + k + 1`.
pub fn cube_cover_valid_k(n: usize) -> Vec<usize> {
    (0..n.max(1)).filter(|&k| (k * k + k + 1) % n.max(1) == 0).collect()
}

/// The `4n x 4n` matrix `N = [[I,I,I,0],[I,C,0,I],[I,0,C^(k+1),C^k],[0,I,C^k,C^k]]` with `C` the
/// shift `e_i -> e_(i+1 mod n)` (entry `(i, i+1)` is 1), and the bipartite graph on `8n`
/// vertices whose biadjacency matrix is `N` (rows `0..4n`, columns `4n..8n`).
pub fn cube_cover_incidence(n: usize, k: usize) -> Result<(ExactMatrix, Graph)> {
    if n == 0 || k >= n || !(k * k + k + 1).is_multiple_of(n) {
        return Err(Error::InvalidParameters(format!("cube cover needs 0 <= k < n and n | k^2+k+1, got ({n},{k})")));
    }
    // block (r, c) holds C^e, or nothing
    let blocks: [[Option<usize>; 4]; 4] = [
        [Some(0), Some(0), Some(0), None],
        [Some(0), Some(1), None, Some(0)],
        [Some(0), None, Some(k + 1), Some(k)],
        [None, Some(0), Some(k), Some(k)],
    ];
    let size = 4 * n;
    let mut ones = vec![vec![false; size]; size];
    for (br, row) in blocks.iter().enumerate() {
        for (bc, block) in row.iter().enumerate() {
            if let Some(e) = block {
                for i in 0..n {
                    ones[br * n + i][bc * n + (i + e) % n] = true;
                }
            }
        }
    }
    let m = ExactMatrix::from_fn(size, size, |i, j| if ones[i][j] { rat(1) } else { Rational::from_integer(0.into()) });
    let mut edges = Vec::new();
    for (i, row) in ones.iter().enumerate() {
        for (j, &b) in row.iter().enumerate() {
            if b {
                edges.push((i, size + j));
            }
        }
    }
    Ok((m, Graph::new(2 * size, &edges)?))
}
