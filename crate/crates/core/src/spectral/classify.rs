//! Identification of schemes with a multiplicity three among the known cases.

use std::fmt;

use super::{eigensystem, SpectralData};
use crate::exact::AlgebraicScalar;
use crate::graph::{catalog_graph, isomorphic, Graph};
use crate::scheme::{is_complete_multipartite, partially_metric_order, AssociationScheme};

/// The schemes with a connected valency-3 relation and a multiplicity three, followed by the
/// further partially metric ones of higher valency.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SchemeCase {
    Tetrahedron,
    Cube,
    MobiusKantor,
    Nauru,
    FosterF048A,
    Dodecahedron,
    BipartiteDoubleDodecahedron,
    Icosahedron,
    Octahedron,
    /// Regular complete 4-partite graph with parts of the given size.
    CompleteFourPartite(usize),
}

impl SchemeCase {
    /// Roman numeral of the case in the classification list.
    pub fn numeral(&self) -> &'static str {
        match self {
            SchemeCase::Tetrahedron => "i",
            SchemeCase::Cube => "ii",
            SchemeCase::MobiusKantor => "iii",
            SchemeCase::Nauru => "iv",
            SchemeCase::FosterF048A => "v",
            SchemeCase::Dodecahedron => "vi",
            SchemeCase::BipartiteDoubleDodecahedron => "vii",
            SchemeCase::Icosahedron => "viii",
            SchemeCase::Octahedron => "ix",
            SchemeCase::CompleteFourPartite(_) => "x",
        }
    }

    /// Expected `d`.
    pub fn d(&self) -> usize {
        match self {
            SchemeCase::Tetrahedron => 1,
            SchemeCase::Cube | SchemeCase::Icosahedron => 3,
            SchemeCase::MobiusKantor | SchemeCase::Dodecahedron => 5,
            SchemeCase::Nauru => 6,
            SchemeCase::FosterF048A | SchemeCase::BipartiteDoubleDodecahedron => 11,
            SchemeCase::Octahedron | SchemeCase::CompleteFourPartite(_) => 2,
        }
    }

    fn catalog(&self) -> Option<&'static str> {
        Some(match self {
            SchemeCase::Tetrahedron => "tetrahedron",
            SchemeCase::Cube => "cube",
            SchemeCase::MobiusKantor => "mobius-kantor",
            SchemeCase::Nauru => "nauru",
            SchemeCase::FosterF048A => "f048a",
            SchemeCase::Dodecahedron => "dodecahedron",
            SchemeCase::BipartiteDoubleDodecahedron => "bd-dodecahedron",
            SchemeCase::Icosahedron => "icosahedron",
            SchemeCase::Octahedron => "octahedron",
            SchemeCase::CompleteFourPartite(_) => return None,
        })
    }
}

impl fmt::Display for SchemeCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SchemeCase::CompleteFourPartite(s) => write!(f, "({}) complete 4-partite K_{{{s},{s},{s},{s}}}", self.numeral()),
            other => write!(f, "({}) {}", other.numeral(), other.catalog().unwrap()),
        }
    }
}

const CUBIC: [SchemeCase; 7] = [
    SchemeCase::Tetrahedron,
    SchemeCase::Cube,
    SchemeCase::MobiusKantor,
    SchemeCase::Nauru,
    SchemeCase::FosterF048A,
    SchemeCase::Dodecahedron,
    SchemeCase::BipartiteDoubleDodecahedron,
];

#[derive(Clone, Debug)]
pub struct Classification {
    pub case: Option<SchemeCase>,
    /// The relation whose graph was identified.
    pub relation: Option<usize>,
    /// Idempotents with multiplicity 3.
    pub mult3: Vec<usize>,
    /// Eigenvalue of the relation on each of them.
    pub thetas: Vec<AlgebraicScalar>,
    /// Whether every such eigenvalue lies in `{1, -1, sqrt(5), -sqrt(5)}`.
    pub thetas_in_set: bool,
    pub note: String,
}

impl Classification {
    fn none(note: impl Into<String>) -> Self {
        Classification { case: None, relation: None, mult3: Vec::new(), thetas: Vec::new(), thetas_in_set: true, note: note.into() }
    }
}

fn theta_in_set(t: &AlgebraicScalar) -> bool {
    let sq = t.clone() * t.clone();
    sq == AlgebraicScalar::from_int(1) || sq == AlgebraicScalar::from_int(5)
}

fn matches(case: SchemeCase, s: &AssociationScheme, g: &Graph) -> bool {
    if s.d() != case.d() {
        return false;
    }
    match case.catalog() {
        Some(name) => {
            let h = catalog_graph(name).expect("catalog name");
            h.n() == g.n() && h.edge_count() == g.edge_count() && isomorphic(g, &h).is_some()
        }
        None => {
            if !is_complete_multipartite(g) {
                return false;
            }
            let parts = g.complement().components();
            parts.len() == 4 && parts.iter().all(|p| p.len() == parts[0].len())
        }
    }
}

fn identify(s: &AssociationScheme, sd: &SpectralData, r: usize, cases: &[SchemeCase]) -> Classification {
    let mult3 = sd.with_multiplicity(3);
    if mult3.is_empty() {
        let mut c = Classification::none("no idempotent of multiplicity 3");
        c.relation = Some(r);
        return c;
    }
    let thetas: Vec<AlgebraicScalar> = mult3.iter().map(|&j| sd.p.get(j, r).clone()).collect();
    let thetas_in_set = s.valency(r) != 3 || thetas.iter().all(theta_in_set);
    let g = s.graph(r);
    let case = cases.iter().copied().find(|&c| matches(c, s, &g)).or_else(|| {
        let c = SchemeCase::CompleteFourPartite(s.n() / 4);
        (cases.contains(&c) && matches(c, s, &g)).then_some(c)
    });
    let note = match case {
        Some(c) => format!("scheme graph of R_{r} is {c}"),
        None => format!("scheme graph of R_{r} matches no listed case"),
    };
    Classification { case, relation: Some(r), mult3, thetas, thetas_in_set, note }
}

/// Identifies a scheme with a connected valency-3 relation and a multiplicity-3 idempotent.
pub fn classify_cubic_mult3(s: &AssociationScheme) -> Classification {
    let Some(r) = (1..s.rank()).find(|&i| s.valency(i) == 3 && s.is_connected_relation(i)) else {
        return Classification::none("no connected relation of valency 3");
    };
    match eigensystem(s) {
        Ok(sd) => identify(s, &sd, r, &CUBIC),
        Err(e) => Classification::none(format!("eigensystem unavailable: {e}")),
    }
}

/// Identifies a scheme that is partially metric with respect to `R_1` and has a multiplicity 3.
pub fn classify_partially_metric_mult3(s: &AssociationScheme) -> Classification {
    if s.rank() < 2 || !s.is_connected_relation(1) {
        return Classification::none("R_1 is not a connected relation");
    }
    match partially_metric_order(s, 1) {
        Ok(pm) if s.rank() == 2 || pm.t >= 2 => {}
        _ => return Classification::none("not partially metric with respect to R_1"),
    }
    let sd = match eigensystem(s) {
        Ok(sd) => sd,
        Err(e) => return Classification::none(format!("eigensystem unavailable: {e}")),
    };
    let n = s.n();
    let mut cases = CUBIC.to_vec();
    cases.extend([SchemeCase::Icosahedron, SchemeCase::Octahedron]);
    if n.is_multiple_of(4) {
        cases.push(SchemeCase::CompleteFourPartite(n / 4));
    }
    identify(s, &sd, 1, &cases)
}
