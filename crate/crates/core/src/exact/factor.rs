//! Factorization of rational polynomials.
//!
//! Square-free parts come from Yun's algorithm. Each square-free part is made monic with
//! integer coefficients, and candidate factors are built from subsets of its approximate
//! complex roots; a candidate is accepted only after exact division succeeds. Subsets are
//! tried by increasing size, so the first factor found is irreducible. When every subset up
//! to half the degree has been tried without success the remaining factor is irreducible too;
//! if the search budget runs out first it is reported with `irreducible == false`.

use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Zero};

use super::poly::rational_to_f64;
use super::{Poly, Rational};
use crate::error::{Error, Result};

const SUBSET_BUDGET: usize = 2_000_000;

#[derive(Clone, Debug, PartialEq)]
pub struct Factor {
    /// Monic factor.
    pub poly: Poly,
    pub multiplicity: usize,
    /// False only when the search budget ran out before irreducibility was settled.
    pub irreducible: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Factorization {
    pub unit: Rational,
    pub factors: Vec<Factor>,
}

impl Factorization {
    pub fn expand(&self) -> Poly {
        let mut acc = Poly::constant(self.unit.clone());
        for f in &self.factors {
            acc = &acc * &f.poly.pow(f.multiplicity);
        }
        acc
    }

    /// Largest degree among the factors.
    pub fn max_degree(&self) -> usize {
        self.factors.iter().map(|f| f.poly.deg()).max().unwrap_or(0)
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if !self.unit.is_one() || self.factors.is_empty() {
            parts.push(self.unit.to_string());
        }
        for fac in &self.factors {
            let body = if fac.poly.deg() == 1 && fac.poly.coeff(0).is_zero() {
                "x".to_string()
            } else {
                format!("({})", fac.poly)
            };
            if fac.multiplicity == 1 {
                parts.push(body);
            } else {
                parts.push(format!("{body}^{}", fac.multiplicity));
            }
        }
        write!(f, "{}", parts.join(" "))
    }
}

/// Yun's square-free decomposition of a monic version of `p`: pairs `(g_i, i)` with
/// `p = lc * prod g_i^i`, each `g_i` monic and square-free. Constant parts are omitted.
pub fn square_free_decomposition(p: &Poly) -> Result<Vec<(Poly, usize)>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let f = p.monic();
    if f.deg() == 0 {
        return Ok(Vec::new());
    }
    let df = f.derivative();
    let a0 = f.gcd(&df);
    let mut b = f.exact_div(&a0).expect("gcd divides");
    let c = df.div_rem(&a0).0;
    let mut d = &c - &b.derivative();
    let mut out = Vec::new();
    let mut i = 1;
    while b.deg() > 0 {
        let a = b.gcd(&d);
        b = b.exact_div(&a).expect("gcd divides");
        let c = d.div_rem(&a).0;
        d = &c - &b.derivative();
        if a.deg() > 0 {
            out.push((a, i));
        }
        i += 1;
    }
    Ok(out)
}

/// Factors `p` into monic irreducible factors over the rationals.
pub fn factor_over_rationals(p: &Poly) -> Result<Factorization> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let unit = p.leading();
    let mut budget = SUBSET_BUDGET;
    let mut factors = Vec::new();
    for (g, mult) in square_free_decomposition(p)? {
        for (poly, irreducible) in split_square_free(&g, &mut budget) {
            factors.push(Factor { poly, multiplicity: mult, irreducible });
        }
    }
    factors.sort_by(|a, b| {
        a.poly
            .deg()
            .cmp(&b.poly.deg())
            .then_with(|| a.poly.coeffs().iter().rev().cmp(b.poly.coeffs().iter().rev()))
    });
    Ok(Factorization { unit, factors })
}

/// Splits a monic square-free polynomial into irreducible factors.
fn split_square_free(g: &Poly, budget: &mut usize) -> Vec<(Poly, bool)> {
    let mut out = Vec::new();
    let mut rest = g.clone();
    // pull out x first so the scaled polynomial has a nonzero constant term
    if rest.coeff(0).is_zero() {
        out.push((Poly::x(), true));
        rest = rest.exact_div(&Poly::x()).expect("x divides");
    }
    let (monic_int, scale) = to_monic_integer(&rest);
    for (h, irr) in split_monic_integer(monic_int, budget) {
        out.push((unscale(&h, &scale), irr));
    }
    out
}

/// For monic rational `f` of degree `d`, finds `L` so that `L^d f(y / L)` is monic with
/// integer coefficients and returns that polynomial with `L`.
fn to_monic_integer(f: &Poly) -> (Poly, BigInt) {
    let mut l = BigInt::one();
    for c in f.coeffs() {
        l = num_integer::Integer::lcm(&l, c.denom());
    }
    let d = f.deg();
    let lq = Rational::from_integer(l.clone());
    let coeffs = (0..=d).map(|i| f.coeff(i) * num_traits::pow(lq.clone(), d - i)).collect();
    (Poly::new(coeffs), l)
}

/// Inverse of [`to_monic_integer`] for a factor `h(y)`: returns the monic `h(L x) / L^deg`.
fn unscale(h: &Poly, l: &BigInt) -> Poly {
    let d = h.deg();
    let lq = Rational::from_integer(l.clone());
    let coeffs = (0..=d).map(|i| h.coeff(i) / num_traits::pow(lq.clone(), d - i)).collect();
    Poly::new(coeffs)
}

fn split_monic_integer(f: Poly, budget: &mut usize) -> Vec<(Poly, bool)> {
    let mut out = Vec::new();
    let mut work = vec![f];
    while let Some(f) = work.pop() {
        let d = f.deg();
        if d == 0 {
            continue;
        }
        if d == 1 {
            out.push((f, true));
            continue;
        }
        let roots = approximate_roots(&f);
        match smallest_factor(&f, &roots, budget) {
            Search::Found(h) => {
                let q = f.exact_div(&h).expect("verified factor");
                out.push((h, true));
                work.push(q);
            }
            Search::Irreducible => out.push((f, true)),
            Search::Exhausted => out.push((f, false)),
        }
    }
    out
}

enum Search {
    Found(Poly),
    Irreducible,
    Exhausted,
}

fn smallest_factor(f: &Poly, roots: &[Complex64], budget: &mut usize) -> Search {
    let d = roots.len();
    for k in 1..=d / 2 {
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            if *budget == 0 {
                return Search::Exhausted;
            }
            *budget -= 1;
            let imag_sum: f64 = idx.iter().map(|&i| roots[i].im).sum();
            let scale: f64 = idx.iter().map(|&i| roots[i].norm()).sum::<f64>().max(1.0);
            if imag_sum.abs() < 1e-6 * scale {
                if let Some(h) = candidate(&idx, roots) {
                    if f.rem(&h).is_zero() {
                        return Search::Found(h);
                    }
                }
            }
            if !next_combination(&mut idx, d) {
                break;
            }
        }
    }
    Search::Irreducible
}

/// Integer-rounded coefficients of `prod (x - r_i)` over the chosen roots.
fn candidate(idx: &[usize], roots: &[Complex64]) -> Option<Poly> {
    let mut c = vec![Complex64::new(1.0, 0.0)];
    for &i in idx {
        let mut next = vec![Complex64::new(0.0, 0.0); c.len() + 1];
        for (j, cj) in c.iter().enumerate() {
            next[j + 1] += cj;
            next[j] -= cj * roots[i];
        }
        c = next;
    }
    let mut ints = Vec::with_capacity(c.len());
    for z in &c {
        let r = z.re.round();
        if (z.re - r).abs() > 0.25 || z.im.abs() > 0.25 || !r.is_finite() {
            return None;
        }
        ints.push(BigInt::from(r as i128));
    }
    Some(Poly::from_integers(&ints))
}

fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if idx[i] < n - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Approximate complex roots of a polynomial by the Aberth iteration.
pub fn approximate_roots(p: &Poly) -> Vec<Complex64> {
    let d = match p.degree() {
        Some(d) if d > 0 => d,
        _ => return Vec::new(),
    };
    let lead = rational_to_f64(&p.leading());
    let coeffs: Vec<f64> = p.coeffs().iter().map(|c| rational_to_f64(c) / lead).collect();
    if d == 1 {
        return vec![Complex64::new(-coeffs[0], 0.0)];
    }
    let radius = 1.0 + coeffs[..d].iter().map(|c| c.abs()).fold(0.0, f64::max);
    let mut z: Vec<Complex64> = (0..d)
        .map(|k| Complex64::from_polar(radius * 0.5 + 0.1, 0.4 + 2.0 * std::f64::consts::PI * k as f64 / d as f64))
        .collect();
    let eval = |x: Complex64| -> (Complex64, Complex64) {
        let mut v = Complex64::new(0.0, 0.0);
        let mut dv = Complex64::new(0.0, 0.0);
        for c in coeffs.iter().rev() {
            dv = dv * x + v;
            v = v * x + c;
        }
        (v, dv)
    };
    for _ in 0..2000 {
        let mut moved = 0.0f64;
        for i in 0..d {
            let (v, dv) = eval(z[i]);
            if v.norm() == 0.0 {
                continue;
            }
            let ratio = v / dv;
            let mut s = Complex64::new(0.0, 0.0);
            for j in 0..d {
                if j != i {
                    s += (z[i] - z[j]).inv();
                }
            }
            let w = ratio / (Complex64::new(1.0, 0.0) - ratio * s);
            if w.is_finite() {
                z[i] -= w;
                moved = moved.max(w.norm() / z[i].norm().max(1.0));
            }
        }
        if moved < 1e-15 {
            break;
        }
    }
    // a few Newton polishing steps
    for zi in z.iter_mut() {
        for _ in 0..3 {
            let (v, dv) = eval(*zi);
            if dv.norm() > 0.0 {
                let step = v / dv;
                if step.is_finite() {
                    *zi -= step;
                }
            }
        }
    }
    z.sort_by(|a, b| b.re.partial_cmp(&a.re).unwrap_or(std::cmp::Ordering::Equal));
    z
}

/// Real roots of a square-free polynomial, as isolating intervals `(lo, hi]` in increasing order.
pub fn isolate_real_roots(p: &Poly) -> Vec<(Rational, Rational)> {
    let bound = p.root_bound();
    let mut out = Vec::new();
    let mut stack = vec![(-bound.clone() - Rational::one(), bound + Rational::one())];
    while let Some((lo, hi)) = stack.pop() {
        let n = p.sturm_count(&lo, &hi);
        if n == 0 {
            continue;
        }
        if n == 1 {
            out.push((lo, hi));
            continue;
        }
        let mid = (&lo + &hi) / Rational::from_integer(2.into());
        stack.push((lo, mid.clone()));
        stack.push((mid, hi));
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

/// Rational roots of `p` (with multiplicity ignored), ascending.
pub fn rational_roots(p: &Poly) -> Result<Vec<Rational>> {
    let f = factor_over_rationals(p)?;
    let mut out: Vec<Rational> = f
        .factors
        .iter()
        .filter(|fac| fac.poly.deg() == 1)
        .map(|fac| -fac.poly.coeff(0))
        .collect();
    out.sort();
    Ok(out)
}
