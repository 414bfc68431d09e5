mod common;

use common::{idempotent_multiplicities, EPS};
use proptest::prelude::*;
use schemeforge::coherent::graph_closure;
use schemeforge::exact::{AlgebraicScalar, FieldMatrix};
use schemeforge::graph::Graph;
use schemeforge::scheme::{bipartite_double_scheme, catalog_scheme, AssociationScheme};
use schemeforge::spectral::{classify_cubic_mult3, eigensystem, krein, SpectralData};
use schemeforge::Error;

const CATALOG: [&str; 11] = [
    "tetrahedron",
    "cube",
    "mobius-kantor",
    "nauru",
    "f048a",
    "dodecahedron",
    "bd-dodecahedron",
    "icosahedron",
    "octahedron",
    "petersen",
    "coxeter",
];

fn int(v: i64) -> AlgebraicScalar {
    AlgebraicScalar::from_int(v)
}

fn check_identities(s: &AssociationScheme, sd: &SpectralData) -> Result<(), String> {
    let (n, r) = (s.n(), s.rank());
    let pq = sd.p.mul(&sd.q).map_err(|e| e.to_string())?;
    if pq != FieldMatrix::identity(r).scale(&int(n as i64)) {
        return Err("PQ != nI".into());
    }
    // row 0 of P is the valencies, column 0 of Q the multiplicities
    for i in 0..r {
        if *sd.p.get(0, i) != int(s.valency(i) as i64) || *sd.q.get(0, i) != int(sd.multiplicities[i] as i64) {
            return Err(format!("first row/column at {i}"));
        }
    }
    if sd.multiplicities.iter().sum::<usize>() != n {
        return Err("multiplicities do not sum to n".into());
    }
    // sum of idempotents is the identity
    let mut total = FieldMatrix::zeros(n, n);
    for j in 0..r {
        total = total.add(&sd.idempotent(s, j)).map_err(|e| e.to_string())?;
    }
    if total != FieldMatrix::identity(n) {
        return Err("sum of E_j is not I".into());
    }
    for j in 0..r {
        let w = sd.cosines(j);
        let th = sd.theta(j);
        // three-term relation from A_1 E_j = theta E_j
        for h in 0..r {
            let rhs = (0..r).fold(int(0), |acc, i| acc + int(s.p(h, 1, i) as i64) * w[i].clone());
            if th.clone() * w[h].clone() != rhs {
                return Err(format!("A_1 recurrence fails at E_{j}, R_{h}"));
            }
        }
        if w[0] != int(1) || w[1].clone() * int(s.valency(1) as i64) != th {
            return Err(format!("omega_0, omega_1 at E_{j}"));
        }
        if w.iter().any(|c| c.to_f64().abs() > 1.0 + EPS) {
            return Err(format!("cosine outside [-1, 1] at E_{j}"));
        }
        let sum = (0..r).fold(int(0), |acc, i| acc + int(s.valency(i) as i64) * w[i].clone() * w[i].clone());
        if sum * int(sd.multiplicities[j] as i64) != int(n as i64) {
            return Err(format!("m_j sum k_i w_i^2 != n at E_{j}"));
        }
    }
    if let Some((h, i, j, q)) = krein(sd).negative().first() {
        return Err(format!("q^{h}_{i}{j} = {q}"));
    }
    let mut m = sd.multiplicities.clone();
    m.sort_unstable();
    if m != idempotent_multiplicities(s) {
        return Err("multiplicities disagree with the numeric oracle".into());
    }
    Ok(())
}

#[test]
fn catalog_identities() {
    for name in CATALOG {
        let s = catalog_scheme(name).unwrap();
        let sd = eigensystem(&s).unwrap();
        assert_eq!(check_identities(&s, &sd), Ok(()), "{name}");
    }
}

#[test]
fn doubling_doubles_every_multiplicity() {
    for name in ["cube", "petersen", "nauru", "dodecahedron", "icosahedron"] {
        let s = catalog_scheme(name).unwrap();
        let d = bipartite_double_scheme(&s).unwrap();
        let (a, b) = (eigensystem(&s).unwrap(), eigensystem(&d).unwrap());
        let mut want: Vec<usize> = a.multiplicities.iter().flat_map(|&m| [m, m]).collect();
        let mut got = b.multiplicities.clone();
        want.sort_unstable();
        got.sort_unstable();
        assert_eq!(got, want, "{name}");
        assert_eq!(check_identities(&d, &b), Ok(()), "{name}");
    }
}

#[test]
fn multiplicity_three_eigenvalues_of_cubic_schemes() {
    let allowed = [1.0, -1.0, 5f64.sqrt(), -(5f64.sqrt())];
    for name in ["cube", "mobius-kantor", "nauru", "f048a", "dodecahedron", "bd-dodecahedron"] {
        let sd = eigensystem(&catalog_scheme(name).unwrap()).unwrap();
        let js = sd.with_multiplicity(3);
        assert!(!js.is_empty(), "{name}");
        for j in js {
            let t = sd.theta(j).to_f64();
            assert!(allowed.iter().any(|a| (a - t).abs() < EPS), "{name}: {t}");
        }
    }
}

#[test]
fn classifier_identifies_cubic_cases() {
    for name in ["tetrahedron", "cube", "mobius-kantor", "nauru", "f048a", "dodecahedron", "bd-dodecahedron"] {
        assert!(classify_cubic_mult3(&catalog_scheme(name).unwrap()).case.is_some(), "{name}");
    }
}

/// Random circulant graph; inversion is an automorphism, so its closure is a symmetric scheme.
fn random_circulant() -> impl Strategy<Value = Graph> {
    (3usize..=16).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n / 2).prop_map(move |mask| {
            let mut edges = Vec::new();
            for (d, _) in mask.iter().enumerate().filter(|(_, b)| **b) {
                for x in 0..n {
                    let y = (x + d + 1) % n;
                    if x < y || d + 1 != n - d - 1 {
                        edges.push((x.min(y), x.max(y)));
                    }
                }
            }
            edges.sort_unstable();
            edges.dedup();
            Graph::new(n, &edges).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// Every circulant generates a symmetric scheme satisfying all the identities.
    #[test]
    fn random_schemes(g in random_circulant()) {
        let cc = graph_closure(&g).unwrap();
        let props = cc.classify_properties();
        prop_assert!(props.homogeneous && props.symmetric);
        let s = AssociationScheme::from_configuration(&cc).unwrap();
        prop_assume!(s.rank() >= 2);
        match eigensystem(&s) {
            Ok(sd) => prop_assert_eq!(check_identities(&s, &sd), Ok(())),
            // eigenvalues outside every multiquadratic field are reported, not guessed
            Err(e) => prop_assert!(matches!(e, Error::UnsplitEigenvalueFactor { .. }), "{e}"),
        }
    }
}
