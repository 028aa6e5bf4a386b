//! Exact arithmetic in `Q(ζ)`, `ζ = e^{2πi/r}`, as residues modulo the
//! `r`-th cyclotomic polynomial.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use super::linalg::{poly_divrem, Matrix, Poly};
use crate::error::{Error, Result};
use crate::rational::{int, rat, Rational};

/// Cyclotomic polynomial `Φ_r` with rational coefficients.
pub fn cyclotomic_poly(r: usize) -> Poly {
    assert!(r >= 1);
    let mut num: Poly = vec![Rational::zero(); r + 1];
    num[0] = int(-1);
    num[r] = int(1);
    for d in (1..r).filter(|d| r.is_multiple_of(*d)) {
        num = poly_divrem(&num, &cyclotomic_poly(d)).0;
    }
    num
}

#[derive(Debug, PartialEq, Eq)]
pub struct CycField {
    r: usize,
    phi: usize,
    /// `powers[k]` is `ζ^k` reduced, for `0 <= k < r`.
    powers: Vec<Vec<Rational>>,
}

impl CycField {
    pub fn new(r: usize) -> Arc<CycField> {
        let modulus = cyclotomic_poly(r);
        let phi = modulus.len() - 1;
        let powers = (0..r)
            .map(|k| {
                let mut mono = vec![Rational::zero(); k + 1];
                mono[k] = Rational::one();
                let (_, rem) = poly_divrem(&mono, &modulus);
                let mut v = rem;
                v.resize(phi, Rational::zero());
                v
            })
            .collect();
        Arc::new(CycField { r, phi, powers })
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn degree(&self) -> usize {
        self.phi
    }
}

/// `out += a·p`; entries of `p` are mostly `0` or `±1`.
fn accumulate(out: &mut [Rational], a: &Rational, p: &[Rational]) {
    for (o, p) in out.iter_mut().zip(p) {
        if p.is_zero() {
            continue;
        }
        if p.is_one() {
            *o += a;
        } else if (-p).is_one() {
            *o -= a;
        } else {
            *o += a * p;
        }
    }
}

/// An element of `Q(ζ)`.
#[derive(Clone, Debug)]
pub struct CycNumber {
    field: Arc<CycField>,
    coeffs: Vec<Rational>,
}

impl PartialEq for CycNumber {
    fn eq(&self, other: &Self) -> bool {
        self.field.r == other.field.r && self.coeffs == other.coeffs
    }
}

impl Eq for CycNumber {}

impl CycNumber {
    pub fn zero(field: &Arc<CycField>) -> Self {
        CycNumber { field: field.clone(), coeffs: vec![Rational::zero(); field.phi] }
    }

    pub fn from_rational(field: &Arc<CycField>, x: Rational) -> Self {
        let mut z = CycNumber::zero(field);
        z.coeffs[0] = x;
        z
    }

    /// `ζ^k` for any integer `k`.
    pub fn zeta_pow(field: &Arc<CycField>, k: i64) -> Self {
        let idx = k.rem_euclid(field.r as i64) as usize;
        CycNumber { field: field.clone(), coeffs: field.powers[idx].clone() }
    }

    pub fn field(&self) -> &Arc<CycField> {
        &self.field
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// `Some(q)` when the element lies in `Q`.
    pub fn as_rational(&self) -> Option<Rational> {
        self.coeffs[1..].iter().all(Zero::is_zero).then(|| self.coeffs[0].clone())
    }

    fn check(&self, other: &Self) {
        assert_eq!(self.field.r, other.field.r, "mixing cyclotomic fields");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check(other);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| match (a.is_zero(), b.is_zero()) {
                (true, _) => b.clone(),
                (_, true) => a.clone(),
                _ => a + b,
            })
            .collect();
        CycNumber { field: self.field.clone(), coeffs }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.check(other);
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        CycNumber { field: self.field.clone(), coeffs }
    }

    pub fn neg(&self) -> Self {
        CycNumber { field: self.field.clone(), coeffs: self.coeffs.iter().map(|a| -a).collect() }
    }

    pub fn scale(&self, s: &Rational) -> Self {
        if s.is_one() {
            return self.clone();
        }
        if s.denom().is_one() && s.numer().is_negative() && s.numer().magnitude().is_one() {
            return self.neg();
        }
        let coeffs = self.coeffs.iter().map(|a| if a.is_zero() { a.clone() } else { a * s }).collect();
        CycNumber { field: self.field.clone(), coeffs }
    }

    fn is_rational(&self) -> bool {
        self.coeffs[1..].iter().all(Zero::is_zero)
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check(other);
        if other.is_rational() {
            return self.scale(&other.coeffs[0]);
        }
        if self.is_rational() {
            return other.scale(&self.coeffs[0]);
        }
        let f = &self.field;
        let mut out = vec![Rational::zero(); f.phi];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                accumulate(&mut out, &(a * b), &f.powers[(i + j) % f.r]);
            }
        }
        CycNumber { field: f.clone(), coeffs: out }
    }

    /// Multiply by `ζ^k`.
    pub fn mul_zeta(&self, k: i64) -> Self {
        let f = &self.field;
        let k = k.rem_euclid(f.r as i64) as usize;
        if k == 0 {
            return self.clone();
        }
        let mut out = vec![Rational::zero(); f.phi];
        for (i, a) in self.coeffs.iter().enumerate() {
            if !a.is_zero() {
                accumulate(&mut out, a, &f.powers[(i + k) % f.r]);
            }
        }
        CycNumber { field: f.clone(), coeffs: out }
    }

    /// Complex conjugation, `ζ -> ζ^{-1}`.
    pub fn conj(&self) -> Self {
        let f = &self.field;
        let mut out = vec![Rational::zero(); f.phi];
        for (k, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (o, p) in out.iter_mut().zip(&f.powers[(f.r - k % f.r) % f.r]) {
                *o += a * p;
            }
        }
        CycNumber { field: f.clone(), coeffs: out }
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::Oracle("inverse of zero".into()));
        }
        let f = &self.field;
        let mut m = Matrix::zeros(f.phi, f.phi);
        for j in 0..f.phi {
            let col = self.mul(&CycNumber::zeta_pow(f, j as i64));
            for i in 0..f.phi {
                m.set(i, j, col.coeffs[i].clone());
            }
        }
        let mut e = vec![Rational::zero(); f.phi];
        e[0] = Rational::one();
        let x = m.solve_unique(&e).ok_or_else(|| Error::Internal("multiplication map is singular".into()))?;
        let mut out = CycNumber::zero(f);
        for (j, xj) in x.iter().enumerate() {
            out = out.add(&CycNumber::zeta_pow(f, j as i64).scale(xj));
        }
        Ok(out)
    }

    pub fn is_real(&self) -> bool {
        *self == self.conj()
    }

    /// Sign of a real element: exact for rationals, otherwise a rational
    /// interval enclosure of `Σ a_k cos(2πk/r)` refined until it excludes 0.
    pub fn real_sign(&self) -> Result<Ordering> {
        if !self.is_real() {
            return Err(Error::Oracle("sign of a non-real cyclotomic number".into()));
        }
        if let Some(q) = self.as_rational() {
            return Ok(q.cmp(&Rational::zero()));
        }
        for bits in [32u32, 64, 128, 256, 512, 1024] {
            let (lo, hi) = self.real_enclosure(bits);
            if lo > Rational::zero() {
                return Ok(Ordering::Greater);
            }
            if hi < Rational::zero() {
                return Ok(Ordering::Less);
            }
        }
        Err(Error::Oracle("sign undecidable after maximal refinement".into()))
    }

    fn real_enclosure(&self, bits: u32) -> (Rational, Rational) {
        let eps = Rational::new(1.into(), num_bigint::BigInt::one() << bits);
        let mut lo = Rational::zero();
        let mut hi = Rational::zero();
        for (k, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let (c_lo, c_hi) = cos_2pi_enclosure(k as i64, self.field.r as i64, &eps);
            let (x, y) = (a * &c_lo, a * &c_hi);
            if x <= y {
                lo += x;
                hi += y;
            } else {
                lo += y;
                hi += x;
            }
        }
        (lo, hi)
    }
}

/// `π` enclosed to width below `eps` by Machin's formula.
fn pi_enclosure(eps: &Rational) -> (Rational, Rational) {
    // arctan(1/x) as an alternating series; each partial sum brackets it.
    let atan_inv = |x: i64, tol: &Rational| -> (Rational, Rational) {
        let x2 = int(x * x);
        let mut term = rat(1, x);
        let mut sum = Rational::zero();
        let mut k: i64 = 0;
        loop {
            let t = &term / int(2 * k + 1);
            let next = if k % 2 == 0 { &sum + &t } else { &sum - &t };
            if t < *tol {
                return if k % 2 == 0 { (sum, next) } else { (next, sum) };
            }
            sum = next;
            term /= &x2;
            k += 1;
        }
    };
    let tol = eps / int(64);
    let (a_lo, a_hi) = atan_inv(5, &tol);
    let (b_lo, b_hi) = atan_inv(239, &tol);
    (int(16) * a_lo - int(4) * &b_hi, int(16) * a_hi - int(4) * &b_lo)
}

/// Rational bounds on `cos(2πk/r)`.
fn cos_2pi_enclosure(k: i64, r: i64, eps: &Rational) -> (Rational, Rational) {
    let k = k.rem_euclid(r);
    if k == 0 {
        return (int(1), int(1));
    }
    let (p_lo, p_hi) = pi_enclosure(eps);
    let scale = rat(2 * k, r);
    let theta = (&p_lo + &p_hi) / int(2) * &scale;
    // |θ - 2πk/r| <= (p_hi - p_lo) * scale, and cos is 1-Lipschitz.
    let lip = (&p_hi - &p_lo) * &scale;
    let theta2 = &theta * &theta;
    let mut term = int(1);
    let mut sum = int(0);
    let mut n: i64 = 0;
    loop {
        sum += if n % 2 == 0 { term.clone() } else { -term.clone() };
        term = term * &theta2 / int((2 * n + 1) * (2 * n + 2));
        n += 1;
        // Past the peak the terms decrease, so the next term bounds the tail.
        if term.abs() < *eps && int((2 * n + 1) * (2 * n + 2)) > theta2 {
            break;
        }
    }
    let err = lip + term.abs();
    (&sum - &err, &sum + &err)
}

impl fmt::Display for CycNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (k, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let a = crate::rational::format_rational(a);
            parts.push(match k {
                0 => a,
                1 => format!("{a}*z"),
                _ => format!("{a}*z^{k}"),
            });
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}
