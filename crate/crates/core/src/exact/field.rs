//! Number fields `Q[x]/(f)` with a designated real embedding, and their elements.
//!
//! Every field carries an isolating interval for one real root of `f`; signs and
//! orderings of elements are decided by refining that interval until the interval
//! image of the element excludes zero. Fields built by [`multiquadratic`] also
//! remember the square roots they contain, which is what the report renderer uses
//! to print elements as `a + b*sqrt(d) + ...`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::matrix::ExactMatrix;
use super::poly::rational_to_f64;
use super::{Poly, Rational};
use crate::error::{Error, Result};

pub struct NumberField {
    min_poly: Poly,
    lo: Rational,
    hi: Rational,
    approx: f64,
    certified: bool,
    /// Square-free radicands `d` with the power-basis coordinates of `sqrt(d)`.
    radicals: Vec<(BigInt, Vec<Rational>)>,
    display: OnceLock<Option<DisplayBasis>>,
}

struct DisplayBasis {
    /// For each basis term: multiplier `s` and square-free radicand `q` (`s*sqrt(q)`).
    terms: Vec<(Rational, BigInt)>,
    /// Converts power-basis coordinates into display-basis coordinates.
    to_display: ExactMatrix,
}

impl fmt::Debug for NumberField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("NumberField")
            .field("min_poly", &self.min_poly.to_string())
            .field("root", &self.approx)
            .field("certified", &self.certified)
            .finish()
    }
}

impl PartialEq for NumberField {
    fn eq(&self, other: &Self) -> bool {
        self.min_poly == other.min_poly && self.lo == other.lo && self.hi == other.hi
    }
}

impl NumberField {
    /// `Q(sqrt(n))` for a positive non-square integer `n`, embedded with the positive root.
    pub fn quadratic(n: &BigInt) -> Result<Arc<NumberField>> {
        let (_, d) = squarefree_decompose(n);
        if !d.is_positive() || d.is_one() {
            return Err(Error::Field(format!("sqrt({n}) does not generate a real quadratic field")));
        }
        let min_poly = Poly::new(vec![Rational::from_integer(-d.clone()), Rational::zero(), Rational::one()]);
        let s = d.sqrt();
        let lo = Rational::from_integer(s.clone());
        let hi = Rational::from_integer(s + 1);
        let radicals = vec![(d, vec![Rational::zero(), Rational::one()])];
        Self::build(min_poly, lo, hi, true, radicals)
    }

    /// A field with a caller-supplied monic polynomial and an isolating interval `(lo, hi]`
    /// for the designated root. Irreducibility is assumed, not checked, for degree >= 3.
    pub fn with_root(min_poly: Poly, lo: Rational, hi: Rational) -> Result<Arc<NumberField>> {
        let certified = min_poly.deg() <= 2 && quadratic_irreducible(&min_poly);
        if min_poly.deg() < 2 {
            return Err(Error::Field("number fields need degree at least 2".into()));
        }
        Self::build(min_poly, lo, hi, certified, Vec::new())
    }

    fn build(
        min_poly: Poly,
        lo: Rational,
        hi: Rational,
        certified: bool,
        radicals: Vec<(BigInt, Vec<Rational>)>,
    ) -> Result<Arc<NumberField>> {
        if !min_poly.is_monic() {
            return Err(Error::Field(format!("minimal polynomial {min_poly} is not monic")));
        }
        if min_poly.sturm_count(&lo, &hi) != 1 {
            return Err(Error::Field(format!(
                "interval ({lo}, {hi}] does not isolate a single root of {min_poly}"
            )));
        }
        let mut field = NumberField {
            min_poly,
            lo,
            hi,
            approx: 0.0,
            certified,
            radicals,
            display: OnceLock::new(),
        };
        let (lo, hi) = field.refined(&Rational::new(1.into(), BigInt::from(1u64) << 60));
        field.approx = rational_to_f64(&((lo + hi) / Rational::from_integer(2.into())));
        Ok(Arc::new(field))
    }

    pub fn min_poly(&self) -> &Poly {
        &self.min_poly
    }

    pub fn degree(&self) -> usize {
        self.min_poly.deg()
    }

    /// Whether irreducibility of the minimal polynomial is certified (otherwise assumed).
    pub fn irreducibility_certified(&self) -> bool {
        self.certified
    }

    /// Floating-point value of the designated root.
    pub fn root_approx(&self) -> f64 {
        self.approx
    }

    pub fn radicands(&self) -> Vec<BigInt> {
        self.radicals.iter().map(|(d, _)| d.clone()).collect()
    }

    fn same(a: &Arc<NumberField>, b: &Arc<NumberField>) -> bool {
        Arc::ptr_eq(a, b) || **a == **b
    }

    /// Bisects the isolating interval until it is narrower than `width`.
    fn refined(&self, width: &Rational) -> (Rational, Rational) {
        let (mut lo, mut hi) = (self.lo.clone(), self.hi.clone());
        while &hi - &lo > *width {
            (lo, hi) = self.bisect(lo, hi);
        }
        (lo, hi)
    }

    fn bisect(&self, lo: Rational, hi: Rational) -> (Rational, Rational) {
        let mid = (&lo + &hi) / Rational::from_integer(2.into());
        let fm = self.min_poly.eval(&mid);
        if fm.is_zero() {
            return (mid.clone() - Rational::new(1.into(), BigInt::from(1u64) << 200), mid);
        }
        let fh = self.min_poly.eval(&hi);
        if fh.is_zero() {
            return (mid, hi);
        }
        if fm.is_positive() == fh.is_positive() {
            (lo, mid)
        } else {
            (mid, hi)
        }
    }

    /// Sign of the element with power-basis coordinates `coeffs` at the designated root.
    fn sign_of(&self, coeffs: &[Rational]) -> Ordering {
        if coeffs.iter().all(Zero::is_zero) {
            return Ordering::Equal;
        }
        let (mut lo, mut hi) = (self.lo.clone(), self.hi.clone());
        for _ in 0..4096 {
            let (a, b) = interval_horner(coeffs, &lo, &hi);
            if a.is_positive() {
                return Ordering::Greater;
            }
            if b.is_negative() {
                return Ordering::Less;
            }
            (lo, hi) = self.bisect(lo, hi);
        }
        panic!("sign refinement did not terminate; minimal polynomial is not irreducible");
    }

    fn reduce(&self, p: Poly) -> Vec<Rational> {
        let r = if p.deg() >= self.degree() { p.rem(&self.min_poly) } else { p };
        let mut c = r.coeffs().to_vec();
        c.resize(self.degree(), Rational::zero());
        c
    }

    /// The generator `a` of `Q[a]/(f)`.
    pub fn generator(self: &Arc<Self>) -> AlgebraicScalar {
        let mut coeffs = vec![Rational::zero(); self.degree()];
        coeffs[1] = Rational::one();
        AlgebraicScalar { field: Some(self.clone()), coeffs }
    }

    /// `sqrt(d)` for a square-free positive `d`, if the field is known to contain it.
    pub fn sqrt_of(self: &Arc<Self>, d: &BigInt) -> Option<AlgebraicScalar> {
        let k = self.radicals.len();
        if k > 16 {
            return None;
        }
        for mask in 1u32..(1 << k) {
            let mut product = BigInt::one();
            let mut elem = AlgebraicScalar::one();
            for (i, (r, coeffs)) in self.radicals.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    product *= r;
                    elem = elem * AlgebraicScalar { field: Some(self.clone()), coeffs: coeffs.clone() };
                }
            }
            let (s, q) = squarefree_decompose(&product);
            if &q == d {
                return Some(elem * AlgebraicScalar::rational(Rational::from_integer(s).recip()));
            }
        }
        None
    }

    /// Adjoins `sqrt(d)` (square-free, positive, not already present). Returns the new field
    /// and the image of this field's generator inside it.
    pub fn adjoin_sqrt(self: &Arc<Self>, d: &BigInt) -> Result<(Arc<NumberField>, AlgebraicScalar)> {
        let m = self.degree();
        let dd = 2 * m;
        let c = AlgebraicScalar::rational(Rational::from_integer(d.clone()));
        let alpha = self.generator();
        let sqrt_d = d.to_f64().unwrap_or(f64::NAN).sqrt();
        for t in 1..64i64 {
            let tq = AlgebraicScalar::rational(Rational::from_integer(t.into()));
            // beta = alpha + t*sqrt(d), stored as (u, v) meaning u + v*sqrt(d)
            let beta = (alpha.clone(), tq.clone());
            let mut powers = vec![(AlgebraicScalar::one(), AlgebraicScalar::zero())];
            for _ in 0..dd {
                let (u, v) = powers.last().unwrap().clone();
                let nu = u.clone() * beta.0.clone() + c.clone() * v.clone() * beta.1.clone();
                let nv = u * beta.1.clone() + v * beta.0.clone();
                powers.push((nu, nv));
            }
            let coords = |p: &(AlgebraicScalar, AlgebraicScalar)| -> Vec<Rational> {
                let mut out = p.0.coeffs_in(self);
                out.extend(p.1.coeffs_in(self));
                out
            };
            let basis = ExactMatrix::from_fn(dd, dd, |i, j| coords(&powers[j])[i].clone());
            if basis.rank_nullity().0 < dd {
                continue;
            }
            let top = basis.solve(&coords(&powers[dd])).expect("full rank");
            let mut mp: Vec<Rational> = top.into_iter().map(|a| -a).collect();
            mp.push(Rational::one());
            let min_poly = Poly::new(mp);

            let value = self.approx + t as f64 * sqrt_d;
            let (lo, hi) = isolate_near(&min_poly, value)?;
            let mut e_alpha = vec![Rational::zero(); dd];
            e_alpha[1] = Rational::one();
            let mut e_sqrt = vec![Rational::zero(); dd];
            e_sqrt[m] = Rational::one();
            let alpha_img = basis.solve(&e_alpha).expect("full rank");
            let sqrt_img = basis.solve(&e_sqrt).expect("full rank");

            let field = NumberField::build(min_poly, lo, hi, true, Vec::new())?;
            let alpha_new = AlgebraicScalar::from_coeffs(&field, alpha_img);
            let mut radicals: Vec<(BigInt, Vec<Rational>)> = self
                .radicals
                .iter()
                .map(|(r, co)| (r.clone(), embed_coeffs(co, &alpha_new).coeffs))
                .collect();
            radicals.push((d.clone(), AlgebraicScalar::from_coeffs(&field, sqrt_img).coeffs));
            let field = Arc::new(NumberField {
                min_poly: field.min_poly.clone(),
                lo: field.lo.clone(),
                hi: field.hi.clone(),
                approx: field.approx,
                certified: true,
                radicals,
                display: OnceLock::new(),
            });
            let alpha_new = AlgebraicScalar { field: Some(field.clone()), coeffs: alpha_new.coeffs };
            return Ok((field, alpha_new));
        }
        Err(Error::Field(format!("could not find a primitive element adjoining sqrt({d})")))
    }

    fn display_basis(&self) -> Option<&DisplayBasis> {
        self.display
            .get_or_init(|| {
                let k = self.radicals.len();
                if k == 0 || k > 16 || (1usize << k) != self.degree() {
                    return None;
                }
                let mut terms = Vec::new();
                let mut columns: Vec<Vec<Rational>> = Vec::new();
                for mask in 0u32..(1 << k) {
                    let mut product = BigInt::one();
                    let mut coeffs = {
                        let mut c = vec![Rational::zero(); self.degree()];
                        c[0] = Rational::one();
                        c
                    };
                    for (i, (r, rc)) in self.radicals.iter().enumerate() {
                        if mask & (1 << i) != 0 {
                            product *= r;
                            coeffs = self.mul_coeffs(&coeffs, rc);
                        }
                    }
                    let (s, q) = squarefree_decompose(&product);
                    terms.push((Rational::from_integer(s), q));
                    columns.push(coeffs);
                }
                let n = self.degree();
                let m = ExactMatrix::from_fn(n, n, |i, j| columns[j][i].clone());
                let to_display = m.inverse()?;
                Some(DisplayBasis { terms, to_display })
            })
            .as_ref()
    }

    fn mul_coeffs(&self, a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        let p = &Poly::new(a.to_vec()) * &Poly::new(b.to_vec());
        self.reduce(p)
    }
}

/// Finds an isolating interval for the root of `p` closest to `value`.
fn isolate_near(p: &Poly, value: f64) -> Result<(Rational, Rational)> {
    let center = Rational::from_float(value).ok_or_else(|| Error::Field("non-finite root".into()))?;
    let mut delta = Rational::new(1.into(), 1024.into());
    for _ in 0..80 {
        let lo = &center - &delta;
        let hi = &center + &delta;
        match p.sturm_count(&lo, &hi) {
            1 => return Ok((lo, hi)),
            0 => delta *= Rational::from_integer(3.into()),
            _ => delta /= Rational::from_integer(16.into()),
        }
    }
    Err(Error::Field(format!("could not isolate a root of {p} near {value}")))
}

fn quadratic_irreducible(p: &Poly) -> bool {
    if p.deg() != 2 {
        return false;
    }
    let disc = p.coeff(1) * p.coeff(1) - Rational::from_integer(4.into()) * p.coeff(0) * p.coeff(2);
    rational_sqrt(&disc).is_none()
}

fn interval_horner(coeffs: &[Rational], lo: &Rational, hi: &Rational) -> (Rational, Rational) {
    let mut a = Rational::zero();
    let mut b = Rational::zero();
    for c in coeffs.iter().rev() {
        let products = [&a * lo, &a * hi, &b * lo, &b * hi];
        let min = products.iter().min().unwrap().clone();
        let max = products.iter().max().unwrap().clone();
        a = min + c;
        b = max + c;
    }
    (a, b)
}

fn embed_coeffs(coeffs: &[Rational], image_of_generator: &AlgebraicScalar) -> AlgebraicScalar {
    let mut acc = AlgebraicScalar::zero();
    for c in coeffs.iter().rev() {
        acc = acc * image_of_generator.clone() + AlgebraicScalar::rational(c.clone());
    }
    acc
}

/// Writes `n = s^2 * d` with `d` square-free (sign carried by `d`). Trial division stops at
/// 10^7; a larger cofactor is kept in `d` unreduced.
pub fn squarefree_decompose(n: &BigInt) -> (BigInt, BigInt) {
    if n.is_zero() {
        return (BigInt::zero(), BigInt::zero());
    }
    let sign = if n.is_negative() { -BigInt::one() } else { BigInt::one() };
    let mut m = n.abs();
    let mut s = BigInt::one();
    let mut d = BigInt::one();
    let mut p = BigInt::from(2);
    let limit = BigInt::from(10_000_000u64);
    while &p * &p <= m && p <= limit {
        let mut e = 0u32;
        while (&m % &p).is_zero() {
            m /= &p;
            e += 1;
        }
        for _ in 0..e / 2 {
            s *= &p;
        }
        if e % 2 == 1 {
            d *= &p;
        }
        p += if p == BigInt::from(2) { 1 } else { 2 };
    }
    let r = m.sqrt();
    if &r * &r == m {
        s *= r;
    } else {
        d *= m;
    }
    (s, d * sign)
}

/// Exact square root of a rational, if it is rational.
pub fn rational_sqrt(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    (&n * &n == *r.numer() && &d * &d == *r.denom()).then(|| Rational::new(n, d))
}

/// Writes `sqrt(r) = s * sqrt(d)` with `s` rational and `d` a square-free integer.
pub fn rational_sqrt_parts(r: &Rational) -> (Rational, BigInt) {
    let nd = r.numer() * r.denom();
    let (s, d) = squarefree_decompose(&nd);
    (Rational::new(s, r.denom().clone()), d)
}

/// The smallest field containing `sqrt(d)` for every `d` in `radicands`, or `None` if they
/// are all rational squares.
pub fn multiquadratic(radicands: &[BigInt]) -> Result<Option<Arc<NumberField>>> {
    let mut field: Option<Arc<NumberField>> = None;
    for n in radicands {
        let (_, d) = squarefree_decompose(n);
        if d.is_one() {
            continue;
        }
        if !d.is_positive() {
            return Err(Error::Field(format!("sqrt({n}) is not real")));
        }
        field = Some(match field {
            None => NumberField::quadratic(&d)?,
            Some(f) if f.sqrt_of(&d).is_some() => f,
            Some(f) => f.adjoin_sqrt(&d)?.0,
        });
    }
    Ok(field)
}

/// Roots of a monic rational quadratic in `Q(sqrt(disc))`, larger root first.
pub fn quadratic_roots(f: &Poly) -> Result<[AlgebraicScalar; 2]> {
    if f.deg() != 2 {
        return Err(Error::Field(format!("{f} is not quadratic")));
    }
    let f = f.monic();
    let b = f.coeff(1);
    let c = f.coeff(0);
    let disc = &b * &b - Rational::from_integer(4.into()) * c;
    if disc.is_negative() {
        return Err(Error::Field(format!("{f} has no real roots")));
    }
    let field = match rational_sqrt(&disc) {
        Some(_) => None,
        None => Some(NumberField::quadratic(&rational_sqrt_parts(&disc).1)?),
    };
    let root = AlgebraicScalar::sqrt_in(field.as_ref(), &disc)?;
    let half = AlgebraicScalar::rational(Rational::new(1.into(), 2.into()));
    let minus_b = AlgebraicScalar::rational(-b);
    Ok([
        (minus_b.clone() + root.clone()) * half.clone(),
        (minus_b - root) * half,
    ])
}

/// An element of a number field, or of the rationals when `field` is `None`.
#[derive(Clone)]
pub struct AlgebraicScalar {
    field: Option<Arc<NumberField>>,
    coeffs: Vec<Rational>,
}

impl AlgebraicScalar {
    pub fn rational(r: Rational) -> Self {
        AlgebraicScalar { field: None, coeffs: vec![r] }
    }

    pub fn from_int(v: i64) -> Self {
        AlgebraicScalar::rational(Rational::from_integer(v.into()))
    }

    /// Element with the given power-basis coordinates (reduced modulo the minimal polynomial).
    pub fn from_coeffs(field: &Arc<NumberField>, coeffs: Vec<Rational>) -> Self {
        AlgebraicScalar { field: Some(field.clone()), coeffs: field.reduce(Poly::new(coeffs)) }
    }

    /// `sqrt(r)` inside `field` (or as a rational if `r` is a rational square).
    pub fn sqrt_in(field: Option<&Arc<NumberField>>, r: &Rational) -> Result<Self> {
        if let Some(q) = rational_sqrt(r) {
            return Ok(AlgebraicScalar::rational(q));
        }
        let (s, d) = rational_sqrt_parts(r);
        let f = field.ok_or_else(|| Error::Field(format!("sqrt({r}) is irrational")))?;
        let root = f
            .sqrt_of(&d)
            .ok_or_else(|| Error::Field(format!("field does not contain sqrt({d})")))?;
        Ok(root * AlgebraicScalar::rational(s))
    }

    pub fn field(&self) -> Option<&Arc<NumberField>> {
        self.field.as_ref()
    }

    /// Power-basis coordinates (length 1 for rationals).
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    fn coeffs_in(&self, field: &NumberField) -> Vec<Rational> {
        let mut c = self.coeffs.clone();
        c.resize(field.degree(), Rational::zero());
        c
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs.iter().skip(1).all(Zero::is_zero)
    }

    pub fn to_rational(&self) -> Option<Rational> {
        self.is_rational().then(|| self.coeffs[0].clone())
    }

    pub fn is_integer(&self) -> bool {
        self.to_rational().is_some_and(|r| r.is_integer())
    }

    pub fn is_zero_value(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Multiplicative inverse by the extended Euclidean algorithm against the minimal polynomial.
    pub fn field_inverse(&self) -> Result<Self> {
        if self.is_zero_value() {
            return Err(Error::DivisionByZero);
        }
        match &self.field {
            None => Ok(AlgebraicScalar::rational(self.coeffs[0].recip())),
            Some(f) => {
                let a = Poly::new(self.coeffs.clone());
                let (g, s, _) = a.ext_gcd(&f.min_poly);
                if g.deg() != 0 {
                    return Err(Error::Field(format!(
                        "element shares the factor {g} with the minimal polynomial"
                    )));
                }
                Ok(AlgebraicScalar::from_coeffs(f, s.coeffs().to_vec()))
            }
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = AlgebraicScalar::one();
        for _ in 0..e {
            acc = acc * self.clone();
        }
        acc
    }

    /// Sign of the element under the designated real embedding.
    pub fn signum(&self) -> Ordering {
        match &self.field {
            None => self.coeffs[0].cmp(&Rational::zero()),
            Some(f) if self.is_rational() => self.coeffs[0].cmp(&Rational::zero()).then(Ordering::Equal),
            Some(f) => f.sign_of(&self.coeffs),
        }
    }

    pub fn cmp_real(&self, other: &Self) -> Ordering {
        (self.clone() - other.clone()).signum()
    }

    pub fn is_negative_value(&self) -> bool {
        self.signum() == Ordering::Less
    }

    pub fn to_f64(&self) -> f64 {
        match &self.field {
            None => rational_to_f64(&self.coeffs[0]),
            Some(f) => {
                if self.is_rational() {
                    return rational_to_f64(&self.coeffs[0]);
                }
                Poly::new(self.coeffs.clone()).eval_f64(f.approx)
            }
        }
    }

    /// Rewrites the element in a larger field given the image of its own field's generator.
    pub fn embed(&self, generator_image: &AlgebraicScalar) -> AlgebraicScalar {
        match &self.field {
            None => self.clone(),
            Some(_) => embed_coeffs(&self.coeffs, generator_image),
        }
    }

    fn unify(a: &Self, b: &Self) -> Option<Arc<NumberField>> {
        match (&a.field, &b.field) {
            (None, None) => None,
            (Some(f), None) | (None, Some(f)) => Some(f.clone()),
            (Some(f), Some(g)) => {
                assert!(NumberField::same(f, g), "arithmetic between elements of different number fields");
                Some(f.clone())
            }
        }
    }

    fn padded(&self, n: usize) -> Vec<Rational> {
        let mut c = self.coeffs.clone();
        c.resize(n.max(1), Rational::zero());
        c
    }
}

impl fmt::Debug for AlgebraicScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for AlgebraicScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            return write!(f, "{}", self.coeffs[0]);
        }
        let field = self.field.as_ref().expect("irrational element has a field");
        match field.display_basis() {
            Some(basis) => {
                let coords = basis.to_display.mul_vec(&self.coeffs);
                let mut parts: Vec<(BigInt, Rational)> = Vec::new();
                for ((s, q), c) in basis.terms.iter().zip(coords) {
                    let v = c * s;
                    if !v.is_zero() {
                        parts.push((q.clone(), v));
                    }
                }
                parts.sort_by(|a, b| a.0.cmp(&b.0));
                let mut out = String::new();
                for (i, (q, v)) in parts.iter().enumerate() {
                    let neg = v.is_negative();
                    let a = v.abs();
                    if i == 0 {
                        if neg {
                            out.push('-');
                        }
                    } else {
                        out.push_str(if neg { " - " } else { " + " });
                    }
                    if q.is_one() {
                        out.push_str(&a.to_string());
                    } else if a.is_one() {
                        out.push_str(&format!("sqrt({q})"));
                    } else {
                        out.push_str(&format!("{a}*sqrt({q})"));
                    }
                }
                write!(f, "{out}")
            }
            None => write!(f, "({}) at a={:.6}", Poly::new(self.coeffs.clone()), field.approx),
        }
    }
}

impl PartialEq for AlgebraicScalar {
    fn eq(&self, other: &Self) -> bool {
        if self.is_rational() && other.is_rational() {
            return self.coeffs[0] == other.coeffs[0];
        }
        let field = Self::unify(self, other).expect("irrational side has a field");
        let n = field.degree();
        self.padded(n) == other.padded(n)
    }
}

impl Zero for AlgebraicScalar {
    fn zero() -> Self {
        AlgebraicScalar::rational(Rational::zero())
    }
    fn is_zero(&self) -> bool {
        self.is_zero_value()
    }
}

impl One for AlgebraicScalar {
    fn one() -> Self {
        AlgebraicScalar::rational(Rational::one())
    }
}

impl Add for AlgebraicScalar {
    type Output = AlgebraicScalar;
    fn add(self, rhs: Self) -> Self {
        let field = Self::unify(&self, &rhs);
        let n = field.as_ref().map_or(1, |f| f.degree());
        let coeffs = self.padded(n).into_iter().zip(rhs.padded(n)).map(|(a, b)| a + b).collect();
        AlgebraicScalar { field, coeffs }
    }
}

impl Sub for AlgebraicScalar {
    type Output = AlgebraicScalar;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for AlgebraicScalar {
    type Output = AlgebraicScalar;
    fn neg(self) -> Self {
        AlgebraicScalar { field: self.field, coeffs: self.coeffs.into_iter().map(|c| -c).collect() }
    }
}

impl Mul for AlgebraicScalar {
    type Output = AlgebraicScalar;
    fn mul(self, rhs: Self) -> Self {
        if self.is_rational() || rhs.is_rational() {
            let field = Self::unify(&self, &rhs);
            let (r, other) = if self.is_rational() { (self.coeffs[0].clone(), rhs) } else { (rhs.coeffs[0].clone(), self) };
            let coeffs: Vec<Rational> = other.coeffs.iter().map(|c| c * &r).collect();
            let n = field.as_ref().map_or(1, |f| f.degree());
            let mut coeffs = coeffs;
            coeffs.resize(n, Rational::zero());
            return AlgebraicScalar { field, coeffs };
        }
        let field = Self::unify(&self, &rhs).expect("irrational operands have a field");
        let coeffs = field.mul_coeffs(&self.coeffs, &rhs.coeffs);
        AlgebraicScalar { field: Some(field), coeffs }
    }
}

impl From<Rational> for AlgebraicScalar {
    fn from(r: Rational) -> Self {
        AlgebraicScalar::rational(r)
    }
}
