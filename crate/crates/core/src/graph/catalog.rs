//! Named graphs.
//!
//! Vertex numbering:
//! - `tetrahedron`, `complete:N`: `0..N`.
//! - `cube`: binary words `0..8`, adjacent when they differ in one bit.
//! - `octahedron`, `multipartite:M:S`: part `p` holds `p*S .. (p+1)*S`.
//! - `k33`: parts `0..3` and `3..6`.
//! - `icosahedron`: apex `0`, upper ring `1..6`, lower ring `6..11`, apex `11`.
//! - generalized Petersen graphs: outer vertex `i` is `i`, inner vertex `i*` is `n + i`.
//! - `coxeter`: the 3-subsets of `{0..6}` that are not lines `{i, i+1, i+3}` of the Fano
//!   plane, in lexicographic order; adjacent when disjoint.
//! - `cycle:N`: `i ~ i+1 mod N`.
//! - `bd-X`: bipartite double of `X`, with `x+ = x` and `x- = n + x`.
//! - `cube-cover:N:K`: the incidence graph of [`cube_cover_incidence`](super::cube_cover_incidence).

use super::{bipartite_double_graph, cube_cover_incidence, generalized_petersen, intersection_array, Graph};
use crate::error::{Error, Result};

const COXETER_EDGES: [(usize, usize); 42] = [
    (0, 25), (0, 26), (0, 27), (1, 21), (1, 24), (1, 26), (2, 20), (2, 21), (2, 23), (3, 20), (3, 22),
    (3, 25), (4, 18), (4, 19), (4, 27), (5, 16), (5, 17), (5, 26), (6, 15), (6, 17), (6, 19), (7, 13),
    (7, 14), (7, 24), (8, 14), (8, 19), (8, 23), (9, 13), (9, 18), (9, 22), (10, 12), (10, 13), (10, 16),
    (11, 12), (11, 15), (11, 20), (12, 27), (14, 25), (15, 24), (16, 23), (17, 22), (18, 21),
];

/// Names accepted by [`catalog_graph`] (parameterized names shown with placeholders).
pub fn catalog_names() -> Vec<&'static str> {
    vec![
        "tetrahedron",
        "cube",
        "octahedron",
        "k33",
        "icosahedron",
        "dodecahedron",
        "mobius-kantor",
        "nauru",
        "f048a",
        "coxeter",
        "petersen",
        "bd-dodecahedron",
        "multipartite:M:S",
        "complete:N",
        "cycle:N",
        "gp:N:K",
        "cube-cover:N:K",
        "bd-NAME",
    ]
}

pub fn complete(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::new(n, &edges).expect("complete graph is simple")
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameters(format!("cycle needs at least 3 vertices, got {n}")));
    }
    let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::new(n, &edges)
}

/// Complete multipartite graph with `m` parts of size `s`.
pub fn complete_multipartite(m: usize, s: usize) -> Result<Graph> {
    if m == 0 || s == 0 {
        return Err(Error::InvalidParameters("multipartite graph needs m, s >= 1".into()));
    }
    let n = m * s;
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if u / s != v / s {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges)
}

fn cube() -> Graph {
    let mut edges = Vec::new();
    for u in 0..8usize {
        for b in 0..3 {
            let v = u ^ (1 << b);
            if u < v {
                edges.push((u, v));
            }
        }
    }
    Graph::new(8, &edges).expect("cube is simple")
}

fn icosahedron() -> Graph {
    let mut edges = Vec::new();
    for j in 0..5 {
        let up = 1 + j;
        let up_next = 1 + (j + 1) % 5;
        let low = 6 + j;
        let low_next = 6 + (j + 1) % 5;
        edges.push((0, up));
        edges.push((up, up_next));
        edges.push((up, low));
        edges.push((up, low_next));
        edges.push((low, low_next));
        edges.push((low, 11));
    }
    Graph::new(12, &edges).expect("icosahedron is simple")
}

/// The Coxeter graph, checked against its intersection array `{3,2,2,1; 1,1,1,2}`.
pub fn coxeter() -> Result<Graph> {
    let g = Graph::new(28, &COXETER_EDGES)?;
    match intersection_array(&g) {
        Some((b, c)) if b == [3, 2, 2, 1] && c == [1, 1, 1, 2] => Ok(g),
        other => Err(Error::Verification(format!("embedded Coxeter graph has intersection array {other:?}"))),
    }
}

fn parse_params(name: &str, parts: &[&str], count: usize) -> Result<Vec<usize>> {
    if parts.len() != count {
        return Err(Error::UnknownCatalog(name.to_string()));
    }
    parts
        .iter()
        .map(|p| p.parse::<usize>().map_err(|_| Error::UnknownCatalog(name.to_string())))
        .collect()
}

/// Looks up a named graph; see the module docs for the vertex numbering of each.
pub fn catalog_graph(name: &str) -> Result<Graph> {
    let lower = name.trim().to_ascii_lowercase();
    if let Some(rest) = lower.strip_prefix("bd-") {
        return Ok(bipartite_double_graph(&catalog_graph(rest)?));
    }
    let mut parts = lower.split(':');
    let head = parts.next().unwrap_or("");
    let params: Vec<&str> = parts.collect();
    match head {
        "tetrahedron" | "k4" => Ok(complete(4)),
        "cube" => Ok(cube()),
        "octahedron" => complete_multipartite(3, 2),
        "k33" | "k3,3" => complete_multipartite(2, 3),
        "icosahedron" => Ok(icosahedron()),
        "dodecahedron" => generalized_petersen(10, 2),
        "mobius-kantor" | "mk" | "moebius-kantor" => generalized_petersen(8, 3),
        "nauru" => generalized_petersen(12, 5),
        "f048a" | "foster48" => generalized_petersen(24, 5),
        "petersen" => generalized_petersen(5, 2),
        "coxeter" => coxeter(),
        "multipartite" => {
            let p = parse_params(name, &params, 2)?;
            complete_multipartite(p[0], p[1])
        }
        "complete" => Ok(complete(parse_params(name, &params, 1)?[0])),
        "cycle" => cycle(parse_params(name, &params, 1)?[0]),
        "gp" => {
            let p = parse_params(name, &params, 2)?;
            generalized_petersen(p[0], p[1])
        }
        "cube-cover" => {
            let p = parse_params(name, &params, 2)?;
            Ok(cube_cover_incidence(p[0], p[1])?.1)
        }
        _ => Err(Error::UnknownCatalog(name.to_string())),
    }
}
