//! Named verification suites run by the `verify` command.
//!
//! Every check produces one [`Verdict`]; a suite passes when none of them fails. Checks are
//! independent and reported in a fixed order.

use num_traits::Zero;

use crate::coherent::{graph_closure, orbital_configuration};
use crate::error::{Error, Result};
use crate::exact::{rat, AlgebraicScalar, ExactMatrix, Rational};
use crate::graph::{
    automorphisms, catalog_graph, cube_cover_incidence, cube_cover_valid_k, isomorphic, t_walk_regular_order, Graph,
};
use crate::report::{Status, Verdict};
use crate::scheme::{
    bipartite_double_scheme, catalog_scheme, fission_feasibility, quotient_scheme, relation_distribution_diagram,
    scheme_isomorphism, AssociationScheme, Diagram,
};
use crate::spectral::{
    classify_cubic_mult3, classify_partially_metric_mult3, diagram_feasibility, eigensystem, krein, lemma41_verify,
    light_tail, multiplicity_from_cosines, yamazaki_verify, SchemeCase,
};

pub const SUITES: [&str; 5] = ["classification", "feasibility", "covers", "products", "all"];

/// Catalog schemes of the classification with their expected rank.
pub const CLASSIFIED: [(&str, usize); 9] = [
    ("tetrahedron", 2),
    ("cube", 4),
    ("mobius-kantor", 6),
    ("nauru", 7),
    ("f048a", 12),
    ("dodecahedron", 6),
    ("bd-dodecahedron", 12),
    ("icosahedron", 4),
    ("octahedron", 3),
];

const CUBIC: [&str; 7] = ["tetrahedron", "cube", "mobius-kantor", "nauru", "f048a", "dodecahedron", "bd-dodecahedron"];

pub fn run_suite(name: &str) -> Result<Vec<Verdict>> {
    Ok(match name {
        "classification" => classification(),
        "feasibility" => feasibility(),
        "covers" => covers(),
        "products" => products(),
        "all" => {
            let mut v = classification();
            v.extend(feasibility());
            v.extend(covers());
            v.extend(products());
            v
        }
        other => {
            return Err(Error::InvalidParameters(format!(
                "unknown suite `{other}` (expected one of {})",
                SUITES.join(", ")
            )))
        }
    })
}

fn verdict(check: impl Into<String>, r: Result<(bool, String)>) -> Verdict {
    match r {
        Ok((ok, detail)) => Verdict::new(check, if ok { Status::Pass } else { Status::Fail }, detail),
        Err(e) => Verdict::new(check, Status::Fail, e.to_string()),
    }
}

fn classification() -> Vec<Verdict> {
    let mut out = Vec::new();
    for (name, rank) in CLASSIFIED {
        out.push(verdict(format!("rank of {name} scheme"), (|| {
            let s = catalog_scheme(name)?;
            Ok((s.rank() == rank, format!("rank {} (expected {rank})", s.rank())))
        })()));
    }
    out.push(verdict("bd-dodecahedron graph generates a rank 9 fusion", (|| {
        let cc = graph_closure(&catalog_graph("bd-dodecahedron")?)?;
        Ok((cc.rank() == 9, format!("closure rank {}", cc.rank())))
    })()));
    let expected = [
        ("tetrahedron", SchemeCase::Tetrahedron),
        ("cube", SchemeCase::Cube),
        ("mobius-kantor", SchemeCase::MobiusKantor),
        ("nauru", SchemeCase::Nauru),
        ("f048a", SchemeCase::FosterF048A),
        ("dodecahedron", SchemeCase::Dodecahedron),
        ("bd-dodecahedron", SchemeCase::BipartiteDoubleDodecahedron),
        ("icosahedron", SchemeCase::Icosahedron),
        ("octahedron", SchemeCase::Octahedron),
        ("multipartite:4:2", SchemeCase::CompleteFourPartite(2)),
        ("multipartite:4:3", SchemeCase::CompleteFourPartite(3)),
    ];
    for (name, case) in expected {
        out.push(verdict(format!("classify {name}"), (|| {
            let s = catalog_scheme(name)?;
            let c = if CUBIC.contains(&name) { classify_cubic_mult3(&s) } else { classify_partially_metric_mult3(&s) };
            Ok((c.case == Some(case) && c.thetas_in_set, c.note))
        })()));
    }
    out.push(verdict("petersen has no multiplicity 3", (|| {
        let c = classify_cubic_mult3(&catalog_scheme("petersen")?);
        Ok((c.case.is_none() && c.mult3.is_empty(), c.note))
    })()));
    for (name, _) in CLASSIFIED {
        out.push(verdict(format!("spectral identities on {name}"), spectral_identities(name)));
    }
    for name in CUBIC {
        out.push(verdict(format!("light tails of {name}"), light_tails(name)));
    }
    for name in ["cube", "dodecahedron", "mobius-kantor"] {
        out.push(verdict(format!("cosine identity for adjacent pairs on {name}"), (|| {
            let s = catalog_scheme(name)?;
            let sd = eigensystem(&s)?;
            let mut total = 0;
            for j in sd.with_multiplicity(3) {
                let rep = lemma41_verify(&s, &sd, j)?;
                if !rep.holds() {
                    return Ok((false, format!("E_{j} fails at {:?}", rep.failures[0])));
                }
                total += rep.configurations;
            }
            Ok((total > 0, format!("{total} configurations")))
        })()));
    }
    for name in ["nauru", "f048a"] {
        out.push(verdict(format!("cherry lemma on {name}"), (|| {
            let rep = yamazaki_verify(&catalog_scheme(name)?)?;
            Ok((rep.holds(), format!("{} configurations", rep.configurations)))
        })()));
    }
    out.extend(diagram_facts());
    out
}

/// Identity `m sum k omega^2 = n`, Krein conditions and `q^0_ij = delta m_j`.
fn spectral_identities(name: &str) -> Result<(bool, String)> {
    let s = catalog_scheme(name)?;
    let sd = eigensystem(&s)?;
    let r = sd.rank();
    for j in 0..r {
        let m = multiplicity_from_cosines(&sd.valencies, &sd.cosines(j), sd.n)?;
        if m != AlgebraicScalar::from_int(sd.multiplicities[j] as i64) {
            return Ok((false, format!("E_{j}: cosines give {m}, not {}", sd.multiplicities[j])));
        }
    }
    let kt = krein(&sd);
    if let Some((h, i, j, q)) = kt.negative().first() {
        return Ok((false, format!("q^{h}_{{{i},{j}}} = {q}")));
    }
    for i in 0..r {
        for j in 0..r {
            let want = if i == j { sd.multiplicities[j] as i64 } else { 0 };
            if *kt.get(0, i, j) != AlgebraicScalar::from_int(want) {
                return Ok((false, format!("q^0_{{{i},{j}}} = {}", kt.get(0, i, j))));
            }
        }
    }
    Ok((true, format!("multiplicities {:?}", sd.multiplicities)))
}

fn light_tails(name: &str) -> Result<(bool, String)> {
    let s = catalog_scheme(name)?;
    let sd = eigensystem(&s)?;
    let mut seen = Vec::new();
    for j in sd.with_multiplicity(3) {
        if s.rank() < 3 {
            continue;
        }
        let lt = light_tail(&s, &sd, j)?;
        let sq = lt.theta.clone() * lt.theta.clone();
        let want = if sq == AlgebraicScalar::from_int(5) { 1 } else { -1 };
        if !(lt.is_light_tail && lt.af_equals_eta_f && lt.eta == AlgebraicScalar::from_int(want)) {
            return Ok((false, format!("E_{j}: theta {}, bound {}, eta {}", lt.theta, lt.bound_rhs, lt.eta)));
        }
        seen.push(format!("theta {} eta {}", lt.theta, lt.eta));
    }
    let detail = if seen.is_empty() { "rank 2, no tail".into() } else { seen.join("; ") };
    Ok((true, detail))
}

/// Valency-1 and valency-2 bubbles in the diagrams of the cubic covers.
fn diagram_facts() -> Vec<Verdict> {
    let count = |name: &str, k: usize| -> Result<usize> {
        let dg = relation_distribution_diagram(&catalog_scheme(name)?, 1)?;
        Ok(dg.bubbles_with_valency(k).into_iter().filter(|&l| l != 0).count())
    };
    let mut out = Vec::new();
    for name in ["bd-dodecahedron", "f048a"] {
        out.push(verdict(format!("{name} diagram has one valency 1 bubble"), (|| {
            let c = count(name, 1)?;
            Ok((c == 1, format!("{c} non-identity bubble(s) of valency 1")))
        })()));
    }
    out.push(verdict("nauru diagram has a valency 2 bubble", (|| {
        let c = count("nauru", 2)?;
        Ok((c >= 1, format!("{c} bubble(s) of valency 2")))
    })()));
    out.push(verdict("mobius-kantor diagram has bubbles of valency 2 and 1", (|| {
        let (c2, c1) = (count("mobius-kantor", 2)?, count("mobius-kantor", 1)?);
        Ok((c2 >= 1 && c1 >= 1, format!("{c2} of valency 2, {c1} of valency 1")))
    })()));
    out
}

fn feasibility() -> Vec<Verdict> {
    let mut out = Vec::new();
    out.push(verdict("putative cover diagram is infeasible", (|| {
        let f = diagram_feasibility(&Diagram::putative_mobius_kantor_cover())?;
        let m0 = f.multiplicity_of(&AlgebraicScalar::zero()).cloned();
        let frac = AlgebraicScalar::rational(Rational::new(32.into(), 3.into()));
        let ok = m0.as_ref() == Some(&frac)
            && !f.negative_intersections.is_empty()
            && !f.negative_krein.is_empty()
            && !f.feasible();
        Ok((
            ok,
            format!(
                "m(0) = {}, {} negative intersection numbers, {} negative Krein parameters",
                m0.map(|m| m.to_string()).unwrap_or_else(|| "?".into()),
                f.negative_intersections.len(),
                f.negative_krein.len()
            ),
        ))
    })()));
    out.push(verdict("coxeter: distance 2 and 3 induce two 9-cycles", (|| {
        let g = catalog_graph("coxeter")?;
        Ok(match (0..g.n()).find(|&x| !two_nine_cycles(&g, x)) {
            None => (true, format!("all {} vertices", g.n())),
            Some(x) => (false, format!("fails at vertex {x}")),
        })
    })()));
    out.push(verdict("coxeter: distance 3 relation has no (6,6) fission", (|| {
        let rep = fission_feasibility(&catalog_scheme("coxeter")?, 3, &[6, 6])?;
        Ok((rep.refuted(), format!("{} locally consistent partitions, {} survive", rep.local.len(), rep.survivors.len())))
    })()));
    out
}

/// The subgraph induced on vertices at distance 2 or 3 from `x` is two disjoint 9-cycles.
pub fn two_nine_cycles(g: &Graph, x: usize) -> bool {
    let d = g.bfs(x);
    let vs: Vec<usize> = (0..g.n()).filter(|&v| matches!(d[v], Some(2) | Some(3))).collect();
    let h = g.induced_subgraph(&vs);
    let comps = h.components();
    comps.len() == 2 && comps.iter().all(|c| c.len() == 9) && (0..h.n()).all(|v| h.degree(v) == 2)
}

/// Nullity of `N N^T - I` for the cube cover incidence matrix.
pub fn cube_cover_nullity(n: usize, k: usize) -> Result<usize> {
    let (nm, _) = cube_cover_incidence(n, k)?;
    let m = nm.mul(&nm.transpose())?.sub(&ExactMatrix::identity(4 * n))?;
    Ok(m.rank_nullity().1)
}

fn covers() -> Vec<Verdict> {
    let mut out = Vec::new();
    for n in 1..=21 {
        for k in cube_cover_valid_k(n) {
            out.push(verdict(format!("cube cover ({n},{k}): nullity of NN^T - I"), (|| {
                let z = cube_cover_nullity(n, k)?;
                Ok((z == 3, format!("nullity {z}")))
            })()));
        }
    }
    for (n, k, name) in [(1, 0, "cube"), (3, 1, "nauru")] {
        out.push(verdict(format!("cube cover ({n},{k}) is the {name} graph"), (|| {
            let (_, g) = cube_cover_incidence(n, k)?;
            Ok((isomorphic(&g, &catalog_graph(name)?).is_some(), String::new()))
        })()));
    }
    out.push(verdict("cube cover (7,2): orbital configuration is non-commutative", (|| {
        let (_, g) = cube_cover_incidence(7, 2)?;
        let aut = automorphisms(&g)?;
        let cc = orbital_configuration(&g, &aut)?;
        let p = cc.classify_properties();
        let r = cc.relation_of_graph(&g);
        let sym3 = r.is_some_and(|r| cc.transpose_of(r) == r && cc.valency(r) == 3);
        let nc = cc.noncommuting_triple();
        Ok((
            p.homogeneous && sym3 && nc.is_some(),
            format!("|Aut| = {}, rank {}, non-commuting triple {:?}", aut.len(), cc.rank(), nc),
        ))
    })()));
    out.push(verdict("cube cover (7,2) is 2-walk-regular with eigenvalue 1 of multiplicity 3", (|| {
        let (_, g) = cube_cover_incidence(7, 2)?;
        let w = t_walk_regular_order(&g)?;
        let m1 = w.multiplicity_of(&rat(1));
        Ok((w.order >= 2 && m1 == 3, format!("order {}, m(1) = {m1}", w.order)))
    })()));
    out
}

fn products() -> Vec<Verdict> {
    let mut out = Vec::new();
    out.push(verdict("bd-dodecahedron modulo x+ ~ x- is the dodecahedron scheme", (|| {
        let s = catalog_scheme("bd-dodecahedron")?;
        quotient_matches(&s, s.relation(0, s.n() / 2), "dodecahedron")
    })()));
    out.push(verdict("f048a modulo its valency 1 relation is the nauru scheme", (|| {
        let s = catalog_scheme("f048a")?;
        let r = (1..s.rank()).find(|&i| s.valency(i) == 1).ok_or(Error::NotApplicable("no valency 1 relation".into()))?;
        quotient_matches(&s, r, "nauru")
    })()));
    for (name, _) in CLASSIFIED {
        out.push(verdict(format!("bipartite double of {name} doubles multiplicities"), (|| {
            let s = catalog_scheme(name)?;
            let mut single = eigensystem(&s)?.multiplicities;
            let mut double = eigensystem(&bipartite_double_scheme(&s)?)?.multiplicities;
            let mut twice: Vec<usize> = single.iter().flat_map(|&m| [m, m]).collect();
            twice.sort_unstable();
            double.sort_unstable();
            single.sort_unstable();
            Ok((double == twice, format!("{single:?} -> {double:?}")))
        })()));
    }
    out
}

fn quotient_matches(s: &AssociationScheme, r: usize, target: &str) -> Result<(bool, String)> {
    let q = quotient_scheme(s, &[r])?;
    let t = catalog_scheme(target)?;
    let iso = scheme_isomorphism(&q.scheme, &t).is_some();
    Ok((iso, format!("quotient by R_0 + R_{r}: {} classes, rank {}", q.scheme.n(), q.scheme.rank())))
}
