//! Eigenmatrices, multiplicities, Krein parameters and cosines of symmetric schemes, and the
//! feasibility conditions built on them.
//!
//! The eigenmatrix comes from the intersection matrices: the rows of `P` are the common left
//! eigenvectors of `L_0, ..., L_d` normalized to first entry 1. All eigenvalues of all `L_i`
//! are placed in one multiquadratic field, and the space is split one `L_i` at a time.

mod bounds;
mod classify;
mod feasibility;

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::field::rational_sqrt_parts;
use crate::exact::{factor_over_rationals, multiquadratic, rat, AlgebraicScalar, FieldMatrix, NumberField, Poly, Rational};
use crate::scheme::AssociationScheme;

pub use bounds::{
    godsil_bound, lemma41_verify, light_tail, yamazaki_verify, GodsilVerdict, Lemma41Report, LightTailReport,
    YamazakiReport,
};
pub use classify::{classify_cubic_mult3, classify_partially_metric_mult3, Classification, SchemeCase};
pub use feasibility::{diagram_cosines, diagram_feasibility, DiagramFeasibility};

#[derive(Clone, Debug)]
pub struct SpectralData {
    pub n: usize,
    pub valencies: Vec<usize>,
    /// Field holding every entry of `P` and `Q`; `None` when all are rational.
    pub field: Option<Arc<NumberField>>,
    /// `P[j][i]`: eigenvalue of `A_i` on `E_j`.
    pub p: FieldMatrix,
    /// `Q = n P^{-1}`.
    pub q: FieldMatrix,
    pub multiplicities: Vec<usize>,
}

impl SpectralData {
    pub fn rank(&self) -> usize {
        self.valencies.len()
    }

    /// Eigenvalue of the scheme graph `R_1` on `E_j`.
    pub fn theta(&self, j: usize) -> AlgebraicScalar {
        if self.rank() == 1 {
            return AlgebraicScalar::zero();
        }
        self.p.get(j, 1).clone()
    }

    /// `omega_i = Q_ij / m_j` for `i = 0..=d`.
    pub fn cosines(&self, j: usize) -> Vec<AlgebraicScalar> {
        let m = AlgebraicScalar::from_int(self.multiplicities[j] as i64).field_inverse().expect("m > 0");
        (0..self.rank()).map(|i| self.q.get(i, j).clone() * m.clone()).collect()
    }

    /// `E_j` as an `n x n` matrix: entry `Q_{i j} / n` on pairs of relation `i`.
    pub fn idempotent(&self, s: &AssociationScheme, j: usize) -> FieldMatrix {
        let inv_n = AlgebraicScalar::rational(Rational::new(1.into(), (self.n as i64).into()));
        let col: Vec<AlgebraicScalar> = (0..self.rank()).map(|i| self.q.get(i, j).clone() * inv_n.clone()).collect();
        FieldMatrix::from_fn(self.n, self.n, |x, y| col[s.relation(x, y)].clone())
    }

    /// Indices of idempotents with multiplicity `m`.
    pub fn with_multiplicity(&self, m: usize) -> Vec<usize> {
        (0..self.rank()).filter(|&j| self.multiplicities[j] == m).collect()
    }
}

/// Krein parameters `q^h_ij`, indexed `[(h * r + i) * r + j]`.
#[derive(Clone, Debug)]
pub struct KreinTensor {
    pub rank: usize,
    pub values: Vec<AlgebraicScalar>,
}

impl KreinTensor {
    pub fn get(&self, h: usize, i: usize, j: usize) -> &AlgebraicScalar {
        &self.values[(h * self.rank + i) * self.rank + j]
    }

    /// `(h, i, j, q)` for every nonzero entry.
    pub fn nonzero(&self) -> Vec<(usize, usize, usize, AlgebraicScalar)> {
        self.triples(|q| !q.is_zero_value())
    }

    pub fn negative(&self) -> Vec<(usize, usize, usize, AlgebraicScalar)> {
        self.triples(AlgebraicScalar::is_negative_value)
    }

    fn triples(&self, keep: impl Fn(&AlgebraicScalar) -> bool) -> Vec<(usize, usize, usize, AlgebraicScalar)> {
        let r = self.rank;
        let mut out = Vec::new();
        for h in 0..r {
            for i in 0..r {
                for j in 0..r {
                    let q = self.get(h, i, j);
                    if keep(q) {
                        out.push((h, i, j, q.clone()));
                    }
                }
            }
        }
        out
    }
}

/// Square-free radicands needed to split the quadratic factors of `p`.
pub(crate) fn radicands(p: &Poly) -> Result<Vec<BigInt>> {
    let fac = factor_over_rationals(p)?;
    let mut out = Vec::new();
    for f in &fac.factors {
        match f.poly.deg() {
            1 => {}
            2 => {
                let b = f.poly.coeff(1);
                let disc = &b * &b - rat(4) * f.poly.coeff(0);
                if disc.is_negative() {
                    return Err(Error::Field(format!("{} has no real roots", f.poly)));
                }
                let (_, d) = rational_sqrt_parts(&disc);
                if !d.is_one() {
                    out.push(d);
                }
            }
            deg => return Err(Error::UnsplitEigenvalueFactor { degree: deg, factor: f.poly.to_string() }),
        }
    }
    Ok(out)
}

/// Distinct real roots of `p` in `field` with their multiplicities, largest first.
pub(crate) fn roots_in(field: Option<&Arc<NumberField>>, p: &Poly) -> Result<Vec<(AlgebraicScalar, usize)>> {
    let fac = factor_over_rationals(p)?;
    let half = AlgebraicScalar::rational(Rational::new(1.into(), 2.into()));
    let mut out = Vec::new();
    for f in &fac.factors {
        match f.poly.deg() {
            1 => out.push((AlgebraicScalar::rational(-f.poly.coeff(0)), f.multiplicity)),
            2 => {
                let b = f.poly.coeff(1);
                let disc = &b * &b - rat(4) * f.poly.coeff(0);
                let root = AlgebraicScalar::sqrt_in(field, &disc)?;
                let mb = AlgebraicScalar::rational(-b);
                out.push(((mb.clone() + root.clone()) * half.clone(), f.multiplicity));
                out.push(((mb - root) * half.clone(), f.multiplicity));
            }
            deg => return Err(Error::UnsplitEigenvalueFactor { degree: deg, factor: f.poly.to_string() }),
        }
    }
    out.sort_by(|a, b| b.0.cmp_real(&a.0));
    Ok(out)
}

/// The multiquadratic field splitting every polynomial in `polys`.
pub(crate) fn splitting_field(polys: &[Poly]) -> Result<Option<Arc<NumberField>>> {
    let mut all = Vec::new();
    for p in polys {
        all.extend(radicands(p)?);
    }
    all.sort();
    all.dedup();
    multiquadratic(&all)
}

/// Basis of `{ w in span(basis) : m w = lambda w }`.
fn restrict_kernel(m: &FieldMatrix, lambda: &AlgebraicScalar, basis: &[Vec<AlgebraicScalar>]) -> Vec<Vec<AlgebraicScalar>> {
    let r = m.rows();
    let images: Vec<Vec<AlgebraicScalar>> = basis
        .iter()
        .map(|b| {
            let mb = m.mul_vec(b);
            mb.into_iter().zip(b).map(|(x, y)| x - lambda.clone() * y.clone()).collect()
        })
        .collect();
    let sys = FieldMatrix::from_fn(r, basis.len(), |i, t| images[t][i].clone());
    sys.nullspace()
        .into_iter()
        .map(|a| {
            (0..r)
                .map(|i| {
                    a.iter().zip(basis).fold(AlgebraicScalar::zero(), |acc, (c, b)| acc + c.clone() * b[i].clone())
                })
                .collect()
        })
        .collect()
}

/// Orders rows of `P`: the valency row first, then by `P_{j1}, P_{j2}, ...` descending.
fn order_rows(rows: &mut [Vec<AlgebraicScalar>], valencies: &[usize]) {
    let is_trivial = |u: &Vec<AlgebraicScalar>| {
        u.iter().zip(valencies).all(|(a, &k)| *a == AlgebraicScalar::from_int(k as i64))
    };
    rows.sort_by(|a, b| {
        is_trivial(b).cmp(&is_trivial(a)).then_with(|| {
            for i in 1..a.len() {
                let c = b[i].cmp_real(&a[i]);
                if c.is_ne() {
                    return c;
                }
            }
            std::cmp::Ordering::Equal
        })
    });
}

pub fn eigensystem(s: &AssociationScheme) -> Result<SpectralData> {
    let r = s.rank();
    let n = s.n();
    let ls: Vec<_> = (0..r).map(|i| s.intersection_matrix(i)).collect();
    let mut polys = Vec::with_capacity(r);
    for l in &ls {
        polys.push(l.char_poly()?);
    }
    let field = splitting_field(&polys)?;
    let lift = |m: &crate::exact::ExactMatrix| m.transpose().map(|x| AlgebraicScalar::rational(x.clone()));

    let unit = |i: usize| -> Vec<AlgebraicScalar> {
        (0..r).map(|t| if t == i { AlgebraicScalar::one() } else { AlgebraicScalar::zero() }).collect()
    };
    let mut spaces: Vec<Vec<Vec<AlgebraicScalar>>> = vec![(0..r).map(unit).collect()];
    for i in 1..r {
        if spaces.iter().all(|sp| sp.len() == 1) {
            break;
        }
        let m = lift(&ls[i]);
        let roots = roots_in(field.as_ref(), &polys[i])?;
        let mut next = Vec::new();
        for sp in spaces {
            if sp.len() == 1 {
                next.push(sp);
                continue;
            }
            let mut total = 0;
            for (lambda, _) in &roots {
                let piece = restrict_kernel(&m, lambda, &sp);
                total += piece.len();
                if !piece.is_empty() {
                    next.push(piece);
                }
            }
            if total != sp.len() {
                return Err(Error::Verification(format!("L_{i} is not diagonalizable on a common eigenspace")));
            }
        }
        spaces = next;
    }
    if let Some(sp) = spaces.iter().find(|sp| sp.len() != 1) {
        return Err(Error::Verification(format!("common eigenspace of dimension {}", sp.len())));
    }
    let mut rows: Vec<Vec<AlgebraicScalar>> = Vec::with_capacity(r);
    for sp in spaces {
        let v = sp.into_iter().next().unwrap();
        let lead = v[0].field_inverse().map_err(|_| Error::Verification("eigenvector with zero first entry".into()))?;
        rows.push(v.into_iter().map(|x| x * lead.clone()).collect());
    }
    order_rows(&mut rows, s.valencies());
    let p = FieldMatrix::from_rows(rows)?;

    // every row must be a common eigenvector
    for j in 0..r {
        for (i, l) in ls.iter().enumerate() {
            let row = p.row(j);
            for col in 0..r {
                let lhs = (0..r).fold(AlgebraicScalar::zero(), |acc, h| {
                    acc + row[h].clone() * AlgebraicScalar::rational(l.get(h, col).clone())
                });
                if lhs != row[i].clone() * row[col].clone() {
                    return Err(Error::Verification(format!("row {j} is not an eigenvector of L_{i}")));
                }
            }
        }
    }
    let n_scalar = AlgebraicScalar::from_int(n as i64);
    let q = p
        .inverse()
        .ok_or_else(|| Error::Verification("eigenmatrix is singular".into()))?
        .scale(&n_scalar);
    let mut multiplicities = Vec::with_capacity(r);
    for j in 0..r {
        let m = q.get(0, j).to_rational().filter(|m| m.is_integer() && m.is_positive()).ok_or_else(|| {
            Error::Verification(format!("multiplicity {} is not a positive integer", q.get(0, j)))
        })?;
        multiplicities.push(m.to_integer().try_into().map_err(|_| Error::Verification("multiplicity overflow".into()))?);
    }
    if multiplicities.iter().sum::<usize>() != n {
        return Err(Error::Verification("multiplicities do not sum to n".into()));
    }
    Ok(SpectralData { n, valencies: s.valencies().to_vec(), field, p, q, multiplicities })
}

/// `q^h_ij = (1/n) sum_l Q_li Q_lj P_hl`, the coefficients of `E_i o E_j` in the idempotent basis.
pub fn krein(sd: &SpectralData) -> KreinTensor {
    let r = sd.rank();
    let inv_n = AlgebraicScalar::rational(Rational::new(1.into(), (sd.n as i64).into()));
    let mut values = Vec::with_capacity(r * r * r);
    for h in 0..r {
        for i in 0..r {
            for j in 0..r {
                let sum = (0..r).fold(AlgebraicScalar::zero(), |acc, l| {
                    acc + sd.q.get(l, i).clone() * sd.q.get(l, j).clone() * sd.p.get(h, l).clone()
                });
                values.push(sum * inv_n.clone());
            }
        }
    }
    KreinTensor { rank: r, values }
}

pub fn cosines(sd: &SpectralData, j: usize) -> Result<Vec<AlgebraicScalar>> {
    if j >= sd.rank() {
        return Err(Error::InvalidParameters(format!("idempotent {j} out of range")));
    }
    Ok(sd.cosines(j))
}

/// `n / sum_i k_i omega_i^2`.
pub fn multiplicity_from_cosines(valencies: &[usize], cosines: &[AlgebraicScalar], n: usize) -> Result<AlgebraicScalar> {
    if valencies.len() != cosines.len() {
        return Err(Error::DimensionMismatch(format!("{} valencies, {} cosines", valencies.len(), cosines.len())));
    }
    let denom = valencies.iter().zip(cosines).fold(AlgebraicScalar::zero(), |acc, (&k, w)| {
        acc + AlgebraicScalar::from_int(k as i64) * w.clone() * w.clone()
    });
    Ok(AlgebraicScalar::from_int(n as i64) * denom.field_inverse()?)
}
