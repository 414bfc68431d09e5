//! Feasibility of a relation-distribution diagram given only its intersection matrix `L_1`.
//!
//! When `L_1` has simple eigenvalues its normalized eigenvectors are the cosine sequences, the
//! multiplicities follow from `m sum_i k_i omega_i^2 = n`, and every intersection number and
//! Krein parameter can be rebuilt from cosines, valencies and multiplicities.

use num_traits::Zero;

use super::{multiplicity_from_cosines, roots_in, splitting_field};
use crate::error::{Error, Result};
use crate::exact::{factor_over_rationals, AlgebraicScalar, FieldMatrix, Poly, Rational};
use crate::scheme::Diagram;

/// The `theta`-eigenvector of `L_1` normalized to `omega_0 = 1`, or `None` if `theta` is not an
/// eigenvalue. Fails when the eigenspace has dimension above one.
pub fn diagram_cosines(dg: &Diagram, theta: &AlgebraicScalar) -> Result<Option<Vec<AlgebraicScalar>>> {
    let r = dg.rank();
    let m = FieldMatrix::from_fn(r, r, |i, j| {
        let v = AlgebraicScalar::from_int(dg.l1[i][j] as i64);
        if i == j {
            v - theta.clone()
        } else {
            v
        }
    });
    let ns = m.nullspace();
    match ns.len() {
        0 => Ok(None),
        1 => {
            let v = ns.into_iter().next().unwrap();
            let lead = v[0]
                .field_inverse()
                .map_err(|_| Error::Verification(format!("eigenvector for {theta} vanishes at relation 0")))?;
            Ok(Some(v.into_iter().map(|x| x * lead.clone()).collect()))
        }
        _ => Err(Error::RepeatedEigenvalue(theta.to_string())),
    }
}

#[derive(Clone, Debug)]
pub struct DiagramFeasibility {
    /// Eigenvalues of `L_1` that split over a multiquadratic field, largest first.
    pub eigenvalues: Vec<AlgebraicScalar>,
    /// Factors of the characteristic polynomial of degree at least 3.
    pub unsplit_factors: Vec<Poly>,
    /// Eigenvalues of `L_1` that are not simple.
    pub repeated: Vec<AlgebraicScalar>,
    pub cosines: Vec<Option<Vec<AlgebraicScalar>>>,
    pub multiplicities: Vec<Option<AlgebraicScalar>>,
    /// `(theta, m)` with `m` not a positive integer.
    pub non_integral: Vec<(AlgebraicScalar, AlgebraicScalar)>,
    /// Algebraically conjugate eigenvalues whose multiplicities differ.
    pub conjugate_mismatch: Vec<(AlgebraicScalar, AlgebraicScalar)>,
    /// `(h, i, j, p^h_ij)` by relation label; only computed when `complete`.
    pub negative_intersections: Vec<(usize, usize, usize, AlgebraicScalar)>,
    /// `(h, i, j, q^h_ij)` by eigenvalue position; only computed when `complete`.
    pub negative_krein: Vec<(usize, usize, usize, AlgebraicScalar)>,
    /// True when every eigenvalue is simple and split, so the full eigenmatrix was rebuilt.
    pub complete: bool,
}

impl DiagramFeasibility {
    /// One line per violated condition.
    pub fn violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        for (t, m) in &self.non_integral {
            out.push(format!("multiplicity {m} for eigenvalue {t} is not a positive integer"));
        }
        for (a, b) in &self.conjugate_mismatch {
            out.push(format!("conjugate eigenvalues {a} and {b} have different multiplicities"));
        }
        for (h, i, j, p) in &self.negative_intersections {
            out.push(format!("p^{h}_{{{i},{j}}} = {p} < 0"));
        }
        for (h, i, j, q) in &self.negative_krein {
            out.push(format!("q^{h}_{{{i},{j}}} = {q} < 0"));
        }
        out
    }

    pub fn feasible(&self) -> bool {
        self.violations().is_empty()
    }

    /// Multiplicity for the eigenvalue `theta`, if computed.
    pub fn multiplicity_of(&self, theta: &AlgebraicScalar) -> Option<&AlgebraicScalar> {
        let idx = self.eigenvalues.iter().position(|t| t == theta)?;
        self.multiplicities[idx].as_ref()
    }
}

fn positive_integer(m: &AlgebraicScalar) -> bool {
    m.to_rational().is_some_and(|r| r.is_integer() && r > Rational::zero())
}

pub fn diagram_feasibility(dg: &Diagram) -> Result<DiagramFeasibility> {
    let r = dg.rank();
    let cp = dg.l1_matrix().char_poly()?;
    let fac = factor_over_rationals(&cp)?;
    let mut split = Poly::one();
    let mut unsplit_factors = Vec::new();
    for f in &fac.factors {
        if f.poly.deg() <= 2 {
            split = &split * &f.poly.pow(f.multiplicity);
        } else {
            unsplit_factors.push(f.poly.clone());
        }
    }
    let field = splitting_field(std::slice::from_ref(&split))?;
    let roots = roots_in(field.as_ref(), &split)?;
    let eigenvalues: Vec<AlgebraicScalar> = roots.iter().map(|(t, _)| t.clone()).collect();
    let repeated: Vec<AlgebraicScalar> = roots.iter().filter(|(_, m)| *m > 1).map(|(t, _)| t.clone()).collect();
    let mut cosines = Vec::with_capacity(roots.len());
    let mut multiplicities = Vec::with_capacity(roots.len());
    let mut non_integral = Vec::new();
    for (theta, _) in &roots {
        let w = match diagram_cosines(dg, theta) {
            Ok(w) => w,
            Err(Error::RepeatedEigenvalue(_)) => None,
            Err(e) => return Err(e),
        };
        let m = match &w {
            Some(w) => Some(multiplicity_from_cosines(&dg.valencies, w, dg.n())?),
            None => None,
        };
        if let Some(m) = &m {
            if !positive_integer(m) {
                non_integral.push((theta.clone(), m.clone()));
            }
        }
        cosines.push(w);
        multiplicities.push(m);
    }

    let mut conjugate_mismatch = Vec::new();
    for f in fac.factors.iter().filter(|f| f.poly.deg() == 2) {
        let idx: Vec<usize> = (0..roots.len()).filter(|&i| is_root(&f.poly, &roots[i].0)).collect();
        if let [a, b] = idx[..] {
            if let (Some(ma), Some(mb)) = (&multiplicities[a], &multiplicities[b]) {
                if ma != mb {
                    conjugate_mismatch.push((eigenvalues[a].clone(), eigenvalues[b].clone()));
                }
            }
        }
    }

    let complete = unsplit_factors.is_empty() && repeated.is_empty() && roots.len() == r;
    let mut negative_intersections = Vec::new();
    let mut negative_krein = Vec::new();
    if complete {
        let w: Vec<Vec<AlgebraicScalar>> = cosines.iter().map(|c| c.clone().unwrap()).collect();
        let m: Vec<AlgebraicScalar> = multiplicities.iter().map(|m| m.clone().unwrap()).collect();
        let k: Vec<AlgebraicScalar> = dg.valencies.iter().map(|&k| AlgebraicScalar::from_int(k as i64)).collect();
        let inv_n = AlgebraicScalar::rational(Rational::new(1.into(), (dg.n() as i64).into()));
        // p^h_ij = (k_i k_j / n) sum_l m_l w_l(i) w_l(j) w_l(h)
        for h in 0..r {
            for i in 0..r {
                for j in 0..r {
                    let sum = (0..r).fold(AlgebraicScalar::zero(), |acc, l| {
                        acc + m[l].clone() * w[l][i].clone() * w[l][j].clone() * w[l][h].clone()
                    });
                    let p = k[i].clone() * k[j].clone() * inv_n.clone() * sum;
                    if p.is_negative_value() {
                        negative_intersections.push((dg.labels[h], dg.labels[i], dg.labels[j], p));
                    }
                }
            }
        }
        // q^h_ij = (m_i m_j / n) sum_l k_l w_i(l) w_j(l) w_h(l)
        for h in 0..r {
            for i in 0..r {
                for j in 0..r {
                    let sum = (0..r).fold(AlgebraicScalar::zero(), |acc, l| {
                        acc + k[l].clone() * w[i][l].clone() * w[j][l].clone() * w[h][l].clone()
                    });
                    let q = m[i].clone() * m[j].clone() * inv_n.clone() * sum;
                    if q.is_negative_value() {
                        negative_krein.push((h, i, j, q));
                    }
                }
            }
        }
    }
    Ok(DiagramFeasibility {
        eigenvalues,
        unsplit_factors,
        repeated,
        cosines,
        multiplicities,
        non_integral,
        conjugate_mismatch,
        negative_intersections,
        negative_krein,
        complete,
    })
}

fn is_root(f: &Poly, t: &AlgebraicScalar) -> bool {
    let v = f
        .coeffs()
        .iter()
        .rev()
        .fold(AlgebraicScalar::zero(), |acc, c| acc * t.clone() + AlgebraicScalar::rational(c.clone()));
    v.is_zero_value()
}
