//! Multiplicity bounds and the cosine identities for valency-three scheme graphs.

use num_traits::{One, Zero};

use super::SpectralData;
use crate::error::{Error, Result};
use crate::exact::{AlgebraicScalar, Rational};
use crate::scheme::{is_complete_multipartite, partially_metric_order, AssociationScheme};

fn int(v: usize) -> AlgebraicScalar {
    AlgebraicScalar::from_int(v as i64)
}

/// Shared preconditions: `R_1` connected with valency `k >= 3`, the scheme partially metric
/// with respect to it, and `theta != +-k` on `E_j`. Returns `(k, theta, m)`.
fn common(s: &AssociationScheme, sd: &SpectralData, j: usize) -> std::result::Result<(usize, AlgebraicScalar, usize), String> {
    if s.rank() < 2 || j >= sd.rank() {
        return Err("no scheme graph or idempotent".into());
    }
    let k = s.valency(1);
    if k < 3 {
        return Err(format!("valency {k} < 3"));
    }
    let pm = partially_metric_order(s, 1).map_err(|e| e.to_string())?;
    if s.rank() > 2 && pm.t < 2 {
        return Err("the scheme is not partially metric with respect to R_1".into());
    }
    let theta = sd.theta(j);
    if theta == int(k) || theta == -int(k) {
        return Err(format!("theta = {theta} is +-k"));
    }
    Ok((k, theta, sd.multiplicities[j]))
}

#[derive(Clone, Debug, PartialEq)]
pub enum GodsilVerdict {
    /// `k <= (m+2)(m-1)/2` holds; `tight` when equality holds.
    Holds { k: usize, m: usize, bound: usize, tight: bool },
    Violated { k: usize, m: usize, bound: usize },
    NotApplicable(String),
}

/// The multiplicity bound `k <= (m+2)(m-1)/2` on idempotent `j` for the scheme graph `R_1`.
pub fn godsil_bound(s: &AssociationScheme, sd: &SpectralData, j: usize) -> GodsilVerdict {
    let (k, _, m) = match common(s, sd, j) {
        Ok(v) => v,
        Err(e) => return GodsilVerdict::NotApplicable(e),
    };
    if is_complete_multipartite(&s.graph(1)) {
        return GodsilVerdict::NotApplicable("the scheme graph is complete multipartite".into());
    }
    let bound = (m + 2) * (m - 1) / 2;
    if k <= bound {
        GodsilVerdict::Holds { k, m, bound, tight: k == bound }
    } else {
        GodsilVerdict::Violated { k, m, bound }
    }
}

#[derive(Clone, Debug)]
pub struct LightTailReport {
    pub theta: AlgebraicScalar,
    pub m: usize,
    pub k: usize,
    pub a1: usize,
    pub b1: usize,
    /// Right-hand side of the multiplicity bound; equality characterizes light tails.
    pub bound_rhs: AlgebraicScalar,
    pub is_light_tail: bool,
    /// From `(m-1) eta = (m/k) theta^2 - k`.
    pub eta: AlgebraicScalar,
    /// Cosines of `F`: `(m-1) rho_i = m omega_i^2 - 1`.
    pub rho: Vec<AlgebraicScalar>,
    /// Whether `A F = eta F` holds for `F = n E o E - m E_0`, checked entry by entry.
    pub af_equals_eta_f: bool,
    pub degenerate: bool,
}

pub fn light_tail(s: &AssociationScheme, sd: &SpectralData, j: usize) -> Result<LightTailReport> {
    if s.rank() < 3 {
        return Err(Error::NotApplicable("rank below 3".into()));
    }
    let (k, theta, m) = common(s, sd, j).map_err(Error::NotApplicable)?;
    let a1 = s.p(1, 1, 1);
    let b1 = k - 1 - a1;
    let (ka, a1s, b1s) = (int(k), int(a1), int(b1));
    let one = AlgebraicScalar::one();
    let t1 = theta.clone() + one.clone();
    let num = ka.clone() * t1.clone() * t1 * a1s.clone() * (a1s.clone() + one.clone());
    let base = (a1s.clone() + one.clone()) * theta.clone() + ka.clone();
    let den = base.clone() * base + ka.clone() * a1s * b1s;
    let bound_rhs = ka.clone() - num * den.field_inverse()?;
    let ms = int(m);
    let is_light_tail = ms == bound_rhs;

    let m1 = int(m - 1).field_inverse()?;
    let eta = (ms.clone() * ka.field_inverse()? * theta.clone() * theta.clone() - ka) * m1.clone();
    let omega = sd.cosines(j);
    let rho: Vec<AlgebraicScalar> =
        omega.iter().map(|w| (ms.clone() * w.clone() * w.clone() - one.clone()) * m1.clone()).collect();

    // F_xy = (m^2 omega^2 - m) / n on pairs of relation l
    let inv_n = AlgebraicScalar::rational(Rational::new(1.into(), (s.n() as i64).into()));
    let f: Vec<AlgebraicScalar> = omega
        .iter()
        .map(|w| (ms.clone() * ms.clone() * w.clone() * w.clone() - ms.clone()) * inv_n.clone())
        .collect();
    let n = s.n();
    let adj: Vec<Vec<usize>> = (0..n).map(|x| s.neighbors(1, x)).collect();
    let mut af_equals_eta_f = true;
    'outer: for x in 0..n {
        for y in 0..n {
            let lhs = adj[x].iter().fold(AlgebraicScalar::zero(), |acc, &z| acc + f[s.relation(z, y)].clone());
            if lhs != eta.clone() * f[s.relation(x, y)].clone() {
                af_equals_eta_f = false;
                break 'outer;
            }
        }
    }
    let degenerate = theta == eta;
    Ok(LightTailReport { theta, m, k, a1, b1, bound_rhs, is_light_tail, eta, rho, af_equals_eta_f, degenerate })
}

#[derive(Clone, Debug, Default)]
pub struct Lemma41Report {
    pub configurations: usize,
    /// `(u1, u2, x)` where the identity fails.
    pub failures: Vec<(usize, usize, usize)>,
}

impl Lemma41Report {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks, for every edge `u1 u2`, both labelings of the other neighbours `v1, v2` of `u1`
/// and `v3, v4` of `u2`, and every point `x`, that the cosines of `v3, v4` seen from `x` are
/// `(theta psi_2 - psi_1 +- (phi_1 - phi_2)) / 2`.
pub fn lemma41_verify(s: &AssociationScheme, sd: &SpectralData, j: usize) -> Result<Lemma41Report> {
    let (k, theta, m) = common(s, sd, j).map_err(Error::NotApplicable)?;
    if k != 3 || m != 3 || s.p(1, 1, 1) != 0 {
        return Err(Error::NotApplicable("needs valency 3, a_1 = 0 and multiplicity 3".into()));
    }
    let omega = sd.cosines(j);
    let half = AlgebraicScalar::rational(Rational::new(1.into(), 2.into()));
    let n = s.n();
    let mut rep = Lemma41Report::default();
    for u1 in 0..n {
        for u2 in s.neighbors(1, u1) {
            let others = |u: usize, not: usize| -> Vec<usize> { s.neighbors(1, u).into_iter().filter(|&v| v != not).collect() };
            let a = others(u1, u2);
            let b = others(u2, u1);
            for (v1, v2) in [(a[0], a[1]), (a[1], a[0])] {
                for x in 0..n {
                    let w = |z: usize| omega[s.relation(x, z)].clone();
                    let centre = theta.clone() * w(u2) - w(u1);
                    let diff = w(v1) - w(v2);
                    let plus = (centre.clone() + diff.clone()) * half.clone();
                    let minus = (centre - diff) * half.clone();
                    let (p3, p4) = (w(b[0]), w(b[1]));
                    rep.configurations += 1;
                    let ok = (p3 == plus && p4 == minus) || (p3 == minus && p4 == plus);
                    if !ok {
                        rep.failures.push((u1, u2, x));
                    }
                }
            }
        }
    }
    Ok(rep)
}

#[derive(Clone, Debug, Default)]
pub struct YamazakiReport {
    pub configurations: usize,
    /// `(x, z, z3, z4)` for which no suitable relation exists.
    pub failures: Vec<(usize, usize, usize, usize)>,
}

impl YamazakiReport {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }
}

/// For all `x, z` at distance `i >= 2` and neighbours `z3 != z4` of `z` at distance `i + 1`
/// from `x` in different relations `R_3, R_4` with `c_{i+1}(x, z3) = 1`, looks for a relation
/// `R_5` with `p^1_{35} > 0`, `p^1_{45} > 0` and no pair at distance `i`.
pub fn yamazaki_verify(s: &AssociationScheme) -> Result<YamazakiReport> {
    if s.rank() < 4 {
        return Err(Error::NotApplicable("rank below 4".into()));
    }
    let g = s.graph(1);
    if !g.is_connected() {
        return Err(Error::RelationDisconnected(1));
    }
    let n = s.n();
    let dist = g.distance_matrix();
    let mut rel_dist = vec![0usize; s.rank()];
    for y in 0..n {
        rel_dist[s.relation(0, y)] = dist[0][y].unwrap();
    }
    let d = |x: usize, y: usize| dist[x][y].unwrap();
    let mut rep = YamazakiReport::default();
    for x in 0..n {
        for z in 0..n {
            let i = d(x, z);
            if i < 2 {
                continue;
            }
            for &z3 in g.neighbors(z) {
                if d(x, z3) != i + 1 || g.neighbors(z3).iter().filter(|&&w| d(x, w) == i).count() != 1 {
                    continue;
                }
                for &z4 in g.neighbors(z) {
                    let (r3, r4) = (s.relation(x, z3), s.relation(x, z4));
                    if z4 == z3 || d(x, z4) != i + 1 || r3 == r4 {
                        continue;
                    }
                    rep.configurations += 1;
                    let found = (0..s.rank()).any(|r5| s.p(1, r3, r5) > 0 && s.p(1, r4, r5) > 0 && rel_dist[r5] != i);
                    if !found {
                        rep.failures.push((x, z, z3, z4));
                    }
                }
            }
        }
    }
    Ok(rep)
}
