use std::fmt::Write as _;

use super::AssociationScheme;
use crate::error::{Error, Result};
use crate::exact::{rat, ExactMatrix};

/// A relation-distribution diagram: one bubble per relation holding its valency, and the
/// matrix `l1[i][j] = p^i_{base, j}` (positions, not labels).
///
/// Diagrams built from a scheme use labels `0..=d`. Putative diagrams may carry arbitrary
/// labels so that relations can keep the names used when they were derived.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagram {
    pub labels: Vec<usize>,
    pub valencies: Vec<usize>,
    /// Label of the base relation.
    pub base: usize,
    pub l1: Vec<Vec<usize>>,
}

impl Diagram {
    /// Checks shape, that position 0 is the identity bubble, that every row sums to the base
    /// valency and that `p^i_{1j} k_i = p^j_{1i} k_j`.
    pub fn new(labels: Vec<usize>, valencies: Vec<usize>, base: usize, l1: Vec<Vec<usize>>) -> Result<Self> {
        let r = labels.len();
        if r == 0 || valencies.len() != r || l1.len() != r || l1.iter().any(|row| row.len() != r) {
            return Err(Error::DimensionMismatch(format!("diagram with {r} labels")));
        }
        if valencies[0] != 1 || labels[0] != 0 {
            return Err(Error::InvalidParameters("the first bubble must be relation 0 with valency 1".into()));
        }
        let dg = Diagram { labels, valencies, base, l1 };
        let b = dg.position(base).ok_or_else(|| Error::InvalidParameters(format!("unknown base relation {base}")))?;
        let k = dg.valencies[b];
        for i in 0..r {
            let sum: usize = dg.l1[i].iter().sum();
            if sum != k {
                return Err(Error::AxiomViolation(format!(
                    "row of relation {} sums to {sum}, not {k}",
                    dg.labels[i]
                )));
            }
            for j in 0..r {
                if dg.l1[i][j] * dg.valencies[i] != dg.l1[j][i] * dg.valencies[j] {
                    return Err(Error::AxiomViolation(format!(
                        "edge counts between relations {} and {} disagree",
                        dg.labels[i], dg.labels[j]
                    )));
                }
            }
        }
        if dg.l1[0][b] != k || dg.l1[0].iter().sum::<usize>() != k {
            return Err(Error::AxiomViolation("relation 0 must only meet the base relation".into()));
        }
        Ok(dg)
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn position(&self, label: usize) -> Option<usize> {
        self.labels.iter().position(|&l| l == label)
    }

    pub fn n(&self) -> usize {
        self.valencies.iter().sum()
    }

    /// `p^i_{1j}` by labels, or `None` if a label is unknown.
    pub fn p(&self, i: usize, j: usize) -> Option<usize> {
        Some(self.l1[self.position(i)?][self.position(j)?])
    }

    /// `(i, j, p^i_{1j})` by labels for every positive entry, row-major.
    pub fn edges(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for (a, row) in self.l1.iter().enumerate() {
            for (b, &p) in row.iter().enumerate() {
                if p > 0 {
                    out.push((self.labels[a], self.labels[b], p));
                }
            }
        }
        out
    }

    pub fn l1_matrix(&self) -> ExactMatrix {
        let r = self.rank();
        ExactMatrix::from_fn(r, r, |i, j| rat(self.l1[i][j] as i64))
    }

    /// Whether every bubble is reachable from bubble 0.
    pub fn is_connected(&self) -> bool {
        let r = self.rank();
        let mut seen = vec![false; r];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(i) = stack.pop() {
            for j in 0..r {
                if self.l1[i][j] > 0 && !seen[j] {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Non-identity bubbles with the given valency, by label.
    pub fn bubbles_with_valency(&self, k: usize) -> Vec<usize> {
        (1..self.rank()).filter(|&i| self.valencies[i] == k).map(|i| self.labels[i]).collect()
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph diagram {\n  node [shape=circle];\n");
        for (l, k) in self.labels.iter().zip(&self.valencies) {
            writeln!(s, "  R{l} [label=\"{k}\"];").unwrap();
        }
        for (i, j, p) in self.edges() {
            writeln!(s, "  R{i} -> R{j} [label=\"{p}\"];").unwrap();
        }
        s.push_str("}\n");
        s
    }

    /// `i: k_i` lines, then `i j: p` lines; a first line `base r` names the base relation.
    pub fn to_text(&self) -> String {
        let mut s = format!("base {}\n", self.base);
        for (l, k) in self.labels.iter().zip(&self.valencies) {
            writeln!(s, "{l}: {k}").unwrap();
        }
        for (i, j, p) in self.edges() {
            writeln!(s, "{i} {j}: {p}").unwrap();
        }
        s
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut base = 1;
        let mut labels = Vec::new();
        let mut valencies = Vec::new();
        let mut entries = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |msg: &str| Error::Parse { line: line_no, msg: msg.to_string() };
            let num = |t: &str| t.trim().parse::<usize>().map_err(|e| err(&e.to_string()));
            if let Some(rest) = line.strip_prefix("base") {
                base = num(rest)?;
                continue;
            }
            let (lhs, rhs) = line.split_once(':').ok_or_else(|| err("expected `i: k` or `i j: p`"))?;
            let value = num(rhs)?;
            let keys: Vec<&str> = lhs.split_whitespace().collect();
            match keys.as_slice() {
                [i] => {
                    labels.push(num(i)?);
                    valencies.push(value);
                }
                [i, j] => entries.push((num(i)?, num(j)?, value, line_no)),
                _ => return Err(err("expected `i: k` or `i j: p`")),
            }
        }
        let r = labels.len();
        let mut l1 = vec![vec![0; r]; r];
        for (i, j, p, line) in entries {
            let pos = |l: usize| {
                labels.iter().position(|&x| x == l).ok_or(Error::Parse { line, msg: format!("unknown relation {l}") })
            };
            l1[pos(i)?][pos(j)?] = p;
        }
        Diagram::new(labels, valencies, base, l1)
    }

    /// A putative diagram on 48 points: a triple cover of the Möbius–Kantor graph whose scheme
    /// graph has girth 8, with valency 3 and an eigenvalue 0 whose cosine sequence is forced.
    /// Labels skip 7 because that relation coincides with 6 in this configuration.
    pub fn putative_mobius_kantor_cover() -> Self {
        let labels = vec![0, 1, 2, 3, 4, 5, 6, 8, 9, 10, 11];
        let valencies = vec![1, 3, 6, 6, 6, 3, 6, 6, 6, 3, 2];
        let edges: &[(usize, usize, usize)] = &[
            (0, 1, 3),
            (1, 0, 1),
            (1, 2, 2),
            (2, 1, 1),
            (2, 3, 1),
            (2, 4, 1),
            (3, 2, 1),
            (3, 5, 1),
            (3, 6, 1),
            (4, 2, 1),
            (4, 6, 1),
            (4, 8, 1),
            (5, 3, 2),
            (5, 10, 1),
            (6, 3, 1),
            (6, 4, 1),
            (6, 9, 1),
            (8, 4, 1),
            (8, 9, 1),
            (8, 10, 1),
            (9, 6, 1),
            (9, 8, 1),
            (9, 11, 1),
            (10, 8, 2),
            (10, 5, 1),
            (11, 9, 3),
        ];
        let pos = |l: usize| labels.iter().position(|&x| x == l).unwrap();
        let mut l1 = vec![vec![0; labels.len()]; labels.len()];
        for &(i, j, p) in edges {
            l1[pos(i)][pos(j)] = p;
        }
        Diagram::new(labels, valencies, 1, l1).expect("stored diagram is consistent")
    }
}

/// The diagram of `s` with respect to relation `r`: `l1[i][j] = p^i_{rj}`.
pub fn relation_distribution_diagram(s: &AssociationScheme, r: usize) -> Result<Diagram> {
    if r == 0 || r > s.d() {
        return Err(Error::InvalidParameters(format!("relation {r} is not a non-identity relation")));
    }
    let rank = s.rank();
    let l1 = (0..rank).map(|i| (0..rank).map(|j| s.p(i, r, j)).collect()).collect();
    Diagram::new((0..rank).collect(), s.valencies().to_vec(), r, l1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scheme::catalog_scheme;

    #[test]
    fn cube_diagram() {
        let s = catalog_scheme("cube").unwrap();
        let dg = relation_distribution_diagram(&s, 1).unwrap();
        assert_eq!(dg.edges(), vec![(0, 1, 3), (1, 0, 1), (1, 2, 2), (2, 1, 2), (2, 3, 1), (3, 2, 3)]);
        assert!(dg.is_connected());
        assert_eq!(Diagram::parse(&dg.to_text()).unwrap(), dg);
        let dot = dg.to_dot();
        assert!(dot.contains("R3 [label=\"1\"]") && dot.contains("R1 -> R2 [label=\"2\"]"));
    }

    #[test]
    fn disconnected_relation_gives_disconnected_diagram() {
        let s = catalog_scheme("cube").unwrap();
        assert!(!relation_distribution_diagram(&s, 3).unwrap().is_connected());
    }

    #[test]
    fn putative_cover_shape() {
        let dg = Diagram::putative_mobius_kantor_cover();
        assert_eq!(dg.n(), 48);
        assert_eq!(dg.p(6, 9), Some(1));
        assert_eq!(dg.p(7, 1), None);
        assert!(dg.is_connected());
    }

    #[test]
    fn inconsistent_diagrams_rejected() {
        let bad = Diagram::new(vec![0, 1], vec![1, 3], 1, vec![vec![0, 3], vec![1, 1]]);
        assert!(matches!(bad, Err(Error::AxiomViolation(_))));
        assert!(Diagram::parse("base 1\n0: 1\n1: 2\n0 1: 2\n1 0: 1\n1 1: 1\n1 x: 1\n").is_err());
    }
}
