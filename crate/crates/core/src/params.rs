//! Parameters `(c0, d_0..d_{r-1})`, charged contents and the box statistics
//! `k_c`, `l_c`, `l'_c`.

use std::cmp::Ordering;
use std::fmt;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{as_positive_integer, format_rational, int, parse_rational, residue, Rational};
use crate::shapes::{Cell, MultiPartition};

/// A positive integer or infinity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ExtendedNat {
    Finite(u64),
    Infinity,
}

impl ExtendedNat {
    pub fn is_finite(&self) -> bool {
        matches!(self, ExtendedNat::Finite(_))
    }

    pub fn finite(&self) -> Option<u64> {
        match self {
            ExtendedNat::Finite(k) => Some(*k),
            ExtendedNat::Infinity => None,
        }
    }

    fn min_with(self, k: u64) -> Self {
        match self {
            ExtendedNat::Finite(j) if j <= k => self,
            _ => ExtendedNat::Finite(k),
        }
    }
}

impl Ord for ExtendedNat {
    fn cmp(&self, other: &Self) -> Ordering {
        use ExtendedNat::*;
        match (self, other) {
            (Finite(a), Finite(b)) => a.cmp(b),
            (Finite(_), Infinity) => Ordering::Less,
            (Infinity, Finite(_)) => Ordering::Greater,
            (Infinity, Infinity) => Ordering::Equal,
        }
    }
}

impl PartialOrd for ExtendedNat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ExtendedNat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedNat::Finite(k) => write!(f, "{k}"),
            ExtendedNat::Infinity => write!(f, "inf"),
        }
    }
}

/// Exact parameter. `d` has length `r`, sums to zero and is read modulo `r`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Parameter {
    r: usize,
    c0: Rational,
    d: Vec<Rational>,
}

impl Parameter {
    /// Builds a parameter from `d_1..d_{r-1}`; `d_0` is the negated sum.
    pub fn new(r: usize, c0: Rational, d_tail: &[Rational]) -> Result<Self> {
        if r < 1 {
            return Err(Error::InvalidParameter("r must be at least 1".into()));
        }
        if d_tail.len() != r - 1 {
            return Err(Error::InvalidParameter(format!(
                "expected {} values d_1..d_{{r-1}}, got {}",
                r - 1,
                d_tail.len()
            )));
        }
        let s: Rational = d_tail.iter().sum();
        let mut d = vec![-s];
        d.extend_from_slice(d_tail);
        Ok(Parameter { r, c0, d })
    }

    /// Builds a parameter from the full vector `d_0..d_{r-1}`, which must sum to zero.
    pub fn from_full(r: usize, c0: Rational, d: Vec<Rational>) -> Result<Self> {
        if r < 1 || d.len() != r {
            return Err(Error::InvalidParameter(format!("expected {r} values of d")));
        }
        if !d.iter().sum::<Rational>().is_zero() {
            return Err(Error::InvalidParameter("d_0 + ... + d_{r-1} must be 0".into()));
        }
        Ok(Parameter { r, c0, d })
    }

    /// Parameter with all `d_i = 0`.
    pub fn with_c0(r: usize, c0: Rational) -> Self {
        Parameter { r, c0, d: vec![Rational::zero(); r] }
    }

    /// Accepts `d` of length `r - 1` (with `d_0` derived) or `r`.
    pub fn from_list(r: usize, c0: Rational, d: Vec<Rational>) -> Result<Self> {
        if r >= 1 && d.len() + 1 == r {
            Self::new(r, c0, &d)
        } else if d.len() == r {
            Self::from_full(r, c0, d)
        } else if r == 1 && d.is_empty() {
            Ok(Self::with_c0(1, c0))
        } else {
            Err(Error::InvalidParameter(format!("d must have length {} or {r}, got {}", r.saturating_sub(1), d.len())))
        }
    }

    /// Parses `c0=<rat>;d=<rat>,...`. The `d` clause may be omitted when `r = 1`.
    pub fn parse(r: usize, text: &str) -> Result<Self> {
        let mut c0 = None;
        let mut d = Vec::new();
        let mut offset = 0;
        for field in text.split(';') {
            let f = field.trim();
            if let Some(v) = f.strip_prefix("c0=") {
                c0 = Some(parse_rational(v).map_err(|e| shift(e, offset + 3))?);
            } else if let Some(v) = f.strip_prefix("d=") {
                if !v.trim().is_empty() {
                    d = parse_rational_list(v).map_err(|e| shift(e, offset + 2))?;
                }
            } else if !f.is_empty() {
                return Err(Error::parse(offset, format!("unknown field `{f}`")));
            }
            offset += field.len() + 1;
        }
        let c0 = c0.ok_or_else(|| Error::parse(0, "missing `c0=`"))?;
        Self::from_list(r, c0, d)
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn c0(&self) -> &Rational {
        &self.c0
    }

    /// `d_l`, with `l` read modulo `r`.
    pub fn d(&self, l: i64) -> &Rational {
        &self.d[residue(l, self.r)]
    }

    pub fn d_vec(&self) -> &[Rational] {
        &self.d
    }

    /// Same `d`, new `c0`.
    pub fn with_new_c0(&self, c0: Rational) -> Self {
        Parameter { r: self.r, c0, d: self.d.clone() }
    }

    /// `m_{ij}`: the representative of `i - j` mod `r` in `[1, r]`.
    pub fn m(&self, i: i64, j: i64) -> i64 {
        m_index(self.r, i, j)
    }

    /// `c(b) = d_{β(b)} + r ct(b) c0`.
    pub fn charged_content(&self, b: &Cell) -> Rational {
        self.charged(b.component as i64, b.content())
    }

    /// Charged content of a cell of component `comp` with content `ct`.
    pub fn charged(&self, comp: i64, ct: i64) -> Rational {
        self.d(comp) + int(self.r as i64 * ct) * &self.c0
    }

    /// `d_a - d_b + r * shift * c0`, the shape shared by every equation.
    pub fn linear(&self, a: i64, b: i64, shift: i64) -> Rational {
        self.d(a) - self.d(b) + int(self.r as i64 * shift) * &self.c0
    }

    /// If `v` is a positive integer `k` with `k ≡ a - b (mod r)`, returns `k`.
    pub fn congruent_positive(&self, v: &Rational, a: i64, b: i64) -> Option<u64> {
        let k = as_positive_integer(v)?;
        (residue(a - b - k as i64, self.r) == 0).then_some(k)
    }

    /// Least positive `k` with `k = c(b) - c(b')` for some `b'` in component `β(b) - k`.
    pub fn k_stat(&self, b: &Cell, shape: &MultiPartition) -> ExtendedNat {
        let cb = self.charged_content(b);
        let mut best = ExtendedNat::Infinity;
        for b2 in shape.boxes() {
            let v = &cb - self.charged_content(b2);
            if let Some(k) = self.congruent_positive(&v, b.component as i64, b2.component as i64) {
                best = best.min_with(k);
            }
        }
        best
    }

    /// Least positive `l` with `l = c(b) - c(b')` for an outside addable cell
    /// `b'` of the single partition `λ^{β(b) - l}`.
    pub fn l_stat(&self, b: &Cell, shape: &MultiPartition) -> ExtendedNat {
        let cb = self.charged_content(b);
        let mut best = ExtendedNat::Infinity;
        for (t, p) in shape.components().iter().enumerate() {
            for (_, _, ct) in p.outside_addable() {
                let v = &cb - self.charged(t as i64, ct);
                if let Some(l) = self.congruent_positive(&v, b.component as i64, t as i64) {
                    best = best.min_with(l);
                }
            }
        }
        best
    }

    /// Least positive `l` satisfying either the shifted box equation
    /// `l = d_β - d_{β-l} + r(ct(b) - ct(b') ± 1)c0` for `b' ∈ λ^{β-l}` or the
    /// bare equation `l = d_β - d_{β-l} + r ct(b) c0`.
    pub fn l_prime_stat(&self, b: &Cell, shape: &MultiPartition) -> ExtendedNat {
        let beta = b.component as i64;
        let mut best = ExtendedNat::Infinity;
        for b2 in shape.boxes() {
            for s in [-1, 1] {
                let v = self.linear(beta, b2.component as i64, b.content() - b2.content() + s);
                if let Some(l) = self.congruent_positive(&v, beta, b2.component as i64) {
                    best = best.min_with(l);
                }
            }
        }
        if let Some(l) = self.bare_equation(beta, b.content()) {
            best = best.min_with(l);
        }
        best
    }

    /// Least positive `k` with `k = d_β - d_{β-k} + r ct c0`, if any.
    pub fn bare_equation(&self, beta: i64, ct: i64) -> Option<u64> {
        self.bare_equations(beta, ct).into_iter().min()
    }

    /// Every positive `k` with `k = d_β - d_{β-k} + r ct c0`. At most one per residue class.
    pub fn bare_equations(&self, beta: i64, ct: i64) -> Vec<u64> {
        let mut out = Vec::new();
        for t in 0..self.r as i64 {
            let v = self.linear(beta, beta - t, ct);
            if let Some(k) = as_positive_integer(&v) {
                if residue(k as i64 - t, self.r) == 0 {
                    out.push(k);
                }
            }
        }
        out.sort_unstable();
        out
    }

    pub fn is_c0_zero(&self) -> bool {
        self.c0.is_zero()
    }

    pub fn is_c0_negative(&self) -> bool {
        self.c0.is_negative()
    }
}

/// `m_{ij}` for a given `r`.
pub fn m_index(r: usize, i: i64, j: i64) -> i64 {
    let v = residue(i - j, r) as i64;
    if v == 0 {
        r as i64
    } else {
        v
    }
}

impl fmt::Display for Parameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "c0={};d=", format_rational(&self.c0))?;
        for (i, x) in self.d.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", format_rational(x))?;
        }
        Ok(())
    }
}

/// Parses a comma separated list of rationals.
pub fn parse_rational_list(text: &str) -> Result<Vec<Rational>> {
    let mut out = Vec::new();
    let mut offset = 0;
    for piece in text.split(',') {
        out.push(parse_rational(piece).map_err(|e| shift(e, offset))?);
        offset += piece.len() + 1;
    }
    Ok(out)
}

fn shift(e: Error, by: usize) -> Error {
    match e {
        Error::Parse { pos, msg } => Error::Parse { pos: pos + by, msg },
        other => other,
    }
}
