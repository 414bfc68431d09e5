//! Walk-regularity from exact walk counts.
//!
//! A graph is `t`-walk-regular when every power `A^l` is constant on each distance class
//! `B_0, ..., B_t`. Powers up to `deg(minimal polynomial) - 1` span all of them, so only those
//! are counted. The constants of the spectral idempotents follow from the walk counts: for an
//! irreducible factor `f` of the minimal polynomial `m`, the idempotent `e_f(A)` with
//! `e_f = 1 mod f` and `e_f = 0 mod m/f` projects onto the eigenspaces of the roots of `f`.

use num_traits::Zero;

use super::Graph;
use crate::error::{Error, Result};
use crate::exact::{factor_over_rationals, quadratic_roots, AlgebraicScalar, Poly, Rational};

#[derive(Clone, Debug)]
pub struct AlphaRow {
    /// Irreducible factor of the characteristic polynomial.
    pub factor: Poly,
    /// The eigenvalue, or `None` when the factor has degree at least 3 and the row
    /// describes the projector onto the sum of its eigenspaces.
    pub eigenvalue: Option<AlgebraicScalar>,
    pub multiplicity: usize,
    /// `alpha_0, ..., alpha_t`: the constant value of the idempotent on each distance class.
    pub values: Vec<AlgebraicScalar>,
}

#[derive(Clone, Debug)]
pub struct WalkRegularityReport {
    /// Largest `t <= diameter` for which walk counts are constant on `B_0, ..., B_t`
    /// (0 also when the graph is not even walk-regular; see `walk_regular`).
    pub order: usize,
    pub walk_regular: bool,
    pub diameter: usize,
    pub rows: Vec<AlphaRow>,
}

impl WalkRegularityReport {
    /// Multiplicity of a rational eigenvalue (0 if it is not an eigenvalue).
    pub fn multiplicity_of(&self, theta: &Rational) -> usize {
        self.rows
            .iter()
            .filter(|r| r.eigenvalue.as_ref().and_then(AlgebraicScalar::to_rational).as_ref() == Some(theta))
            .map(|r| r.multiplicity)
            .sum()
    }
}

pub fn t_walk_regular_order(g: &Graph) -> Result<WalkRegularityReport> {
    if !g.is_connected() || g.n() == 0 {
        return Err(Error::Disconnected);
    }
    let n = g.n();
    let dist = g.distance_matrix();
    let diameter = dist.iter().flatten().flatten().copied().max().unwrap_or(0);
    let fac = factor_over_rationals(&g.adjacency_matrix().char_poly()?)?;
    let mut minimal = Poly::one();
    for f in &fac.factors {
        minimal = &minimal * &f.poly;
    }
    let r = minimal.deg();

    // counts[l][i] = common value of A^l on B_i, if constant
    let mut counts: Vec<Vec<Option<Rational>>> = Vec::with_capacity(r);
    let mut power: Vec<Vec<Rational>> = (0..n)
        .map(|x| (0..n).map(|y| Rational::from_integer(((x == y) as i64).into())).collect())
        .collect();
    for l in 0..r {
        if l > 0 {
            power = (0..n)
                .map(|x| {
                    (0..n)
                        .map(|y| g.neighbors(x).iter().fold(Rational::zero(), |acc, &z| acc + &power[z][y]))
                        .collect()
                })
                .collect();
        }
        let mut row: Vec<Option<Option<Rational>>> = vec![None; diameter + 1];
        for x in 0..n {
            for y in 0..n {
                let i = dist[x][y].unwrap();
                match &mut row[i] {
                    None => row[i] = Some(Some(power[x][y].clone())),
                    Some(Some(v)) if *v != power[x][y] => row[i] = Some(None),
                    _ => {}
                }
            }
        }
        counts.push(row.into_iter().map(|c| c.flatten()).collect());
    }
    let constant = |i: usize| counts.iter().all(|row| row[i].is_some());
    let walk_regular = constant(0);
    let mut order = 0;
    if walk_regular {
        while order < diameter && constant(order + 1) {
            order += 1;
        }
    }

    let on_class = |p: &Poly, i: usize| -> Rational {
        (0..r).fold(Rational::zero(), |acc, l| acc + p.coeff(l) * counts[l][i].clone().unwrap())
    };
    let mut rows = Vec::new();
    if walk_regular {
        for f in &fac.factors {
            let cofactor = minimal.exact_div(&f.poly).expect("factor divides");
            let (_, s, _) = cofactor.ext_gcd(&f.poly);
            let e = (&s * &cofactor).rem(&minimal);
            let xe = (&Poly::x() * &e).rem(&minimal);
            let base: Vec<Rational> = (0..=order).map(|i| on_class(&e, i)).collect();
            match f.poly.deg() {
                1 => rows.push(AlphaRow {
                    factor: f.poly.clone(),
                    eigenvalue: Some(AlgebraicScalar::rational(-f.poly.coeff(0))),
                    multiplicity: f.multiplicity,
                    values: base.into_iter().map(AlgebraicScalar::rational).collect(),
                }),
                2 => {
                    let roots = quadratic_roots(&f.poly)?;
                    let shifted: Vec<Rational> = (0..=order).map(|i| on_class(&xe, i)).collect();
                    for (a, b) in [(0, 1), (1, 0)] {
                        let theta = roots[a].clone();
                        let other = roots[b].clone();
                        let denom = (theta.clone() - other.clone()).field_inverse()?;
                        let values = (0..=order)
                            .map(|i| {
                                (AlgebraicScalar::rational(shifted[i].clone())
                                    - other.clone() * AlgebraicScalar::rational(base[i].clone()))
                                    * denom.clone()
                            })
                            .collect();
                        rows.push(AlphaRow {
                            factor: f.poly.clone(),
                            eigenvalue: Some(theta),
                            multiplicity: f.multiplicity,
                            values,
                        });
                    }
                }
                _ => rows.push(AlphaRow {
                    factor: f.poly.clone(),
                    eigenvalue: None,
                    multiplicity: f.multiplicity,
                    values: base.into_iter().map(AlgebraicScalar::rational).collect(),
                }),
            }
        }
        rows.sort_by(|a, b| match (&a.eigenvalue, &b.eigenvalue) {
            (Some(x), Some(y)) => y.cmp_real(x),
            (Some(_), None) => std::cmp::Ordering::Less,
            (None, Some(_)) => std::cmp::Ordering::Greater,
            (None, None) => a.factor.deg().cmp(&b.factor.deg()),
        });
    }
    Ok(WalkRegularityReport { order, walk_regular, diameter, rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::graph::catalog_graph;

    #[test]
    fn tetrahedron_is_one_walk_regular() {
        let rep = t_walk_regular_order(&catalog_graph("tetrahedron").unwrap()).unwrap();
        assert_eq!((rep.order, rep.diameter), (1, 1));
        assert_eq!(rep.multiplicity_of(&rat(-1)), 3);
        // E_theta for theta = 3 is J/4
        assert_eq!(rep.rows[0].values, vec![AlgebraicScalar::rational(Rational::new(1.into(), 4.into())); 2]);
    }

    #[test]
    fn dodecahedron_is_distance_regular() {
        let rep = t_walk_regular_order(&catalog_graph("dodecahedron").unwrap()).unwrap();
        assert_eq!(rep.order, 5);
        // alpha_0 = m / n for every idempotent
        for row in &rep.rows {
            assert_eq!(row.values[0], AlgebraicScalar::rational(Rational::new(row.multiplicity.into(), 20.into())));
        }
    }

    #[test]
    fn mobius_kantor_is_not_distance_regular() {
        let rep = t_walk_regular_order(&catalog_graph("mobius-kantor").unwrap()).unwrap();
        assert!(rep.walk_regular);
        assert!(rep.order < rep.diameter);
    }

    #[test]
    fn disconnected_fails() {
        let g = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(matches!(t_walk_regular_order(&g), Err(Error::Disconnected)));
    }
}
