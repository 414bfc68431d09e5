//! Floating-point oracles, independent of the exact code paths.
#![allow(dead_code)]

use nalgebra::{DMatrix, SymmetricEigen};
use schemeforge::exact::ExactMatrix;
use schemeforge::graph::Graph;
use schemeforge::scheme::{AssociationScheme, Diagram};

pub const EPS: f64 = 1e-8;

pub fn adjacency(g: &Graph) -> DMatrix<f64> {
    DMatrix::from_fn(g.n(), g.n(), |i, j| if g.has_edge(i, j) { 1.0 } else { 0.0 })
}

pub fn to_f64(m: &ExactMatrix) -> DMatrix<f64> {
    DMatrix::from_fn(m.rows(), m.cols(), |i, j| {
        let r = m.get(i, j);
        r.numer().to_string().parse::<f64>().unwrap() / r.denom().to_string().parse::<f64>().unwrap()
    })
}

/// Eigenvalues of a symmetric matrix grouped as `(value, multiplicity)`, largest first.
pub fn grouped_spectrum(m: DMatrix<f64>) -> Vec<(f64, usize)> {
    let mut ev: Vec<f64> = SymmetricEigen::new(m).eigenvalues.iter().copied().collect();
    ev.sort_by(|a, b| b.partial_cmp(a).unwrap());
    let mut out: Vec<(f64, usize)> = Vec::new();
    for v in ev {
        match out.last_mut() {
            Some((w, c)) if (*w - v).abs() < 1e-6 => *c += 1,
            _ => out.push((v, 1)),
        }
    }
    out
}

/// Multiplicities of the minimal idempotents, read off a generic combination of relation
/// matrices: its eigenspaces are exactly the common eigenspaces. Sorted ascending.
pub fn idempotent_multiplicities(s: &AssociationScheme) -> Vec<usize> {
    let n = s.n();
    // weights chosen to avoid accidental coincidences
    let w: Vec<f64> = (0..s.rank()).map(|i| 1.0 + (i as f64 * 0.7548776662466927).fract() * (i as f64 + 1.0)).collect();
    let m = DMatrix::from_fn(n, n, |x, y| w[s.relation(x, y)]);
    let mut out: Vec<usize> = grouped_spectrum(m).into_iter().map(|(_, c)| c).collect();
    out.sort_unstable();
    out
}

pub fn numeric_rank(m: &DMatrix<f64>) -> usize {
    m.clone().svd(false, false).singular_values.iter().filter(|&&s| s > EPS).count()
}

/// Cosine sequences and multiplicities of a diagram with simple eigenvalues, from the symmetric
/// matrix `K^{1/2} L_1 K^{-1/2}`. Returns `(theta, omega, m)` per eigenvalue.
pub fn diagram_spectrum(dg: &Diagram) -> Vec<(f64, Vec<f64>, f64)> {
    let r = dg.rank();
    let k: Vec<f64> = dg.valencies.iter().map(|&k| k as f64).collect();
    let s = DMatrix::from_fn(r, r, |i, j| k[i].sqrt() * dg.l1[i][j] as f64 / k[j].sqrt());
    let s = (s.clone() + s.transpose()) * 0.5;
    let eig = SymmetricEigen::new(s);
    let n = dg.n() as f64;
    let mut out = Vec::new();
    for c in 0..r {
        let v = eig.eigenvectors.column(c);
        let mut w: Vec<f64> = (0..r).map(|i| v[i] / k[i].sqrt()).collect();
        let w0 = w[0];
        w.iter_mut().for_each(|x| *x /= w0);
        let norm: f64 = (0..r).map(|i| k[i] * w[i] * w[i]).sum();
        out.push((eig.eigenvalues[c], w, n / norm));
    }
    out.sort_by(|a, b| b.0.partial_cmp(&a.0).unwrap());
    out
}

/// Breadth-first distances, written out independently of the library.
pub fn distances(g: &Graph, x: usize) -> Vec<usize> {
    let mut d = vec![usize::MAX; g.n()];
    d[x] = 0;
    let mut queue = std::collections::VecDeque::from([x]);
    while let Some(u) = queue.pop_front() {
        for v in 0..g.n() {
            if g.has_edge(u, v) && d[v] == usize::MAX {
                d[v] = d[u] + 1;
                queue.push_back(v);
            }
        }
    }
    d
}
