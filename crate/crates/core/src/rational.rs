//! Exact rational helpers shared by every module.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn int(p: i64) -> Rational {
    Rational::from_integer(BigInt::from(p))
}

/// Parses `p/q` or a bare integer. Surrounding whitespace is ignored.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let t = text.trim();
    if t.is_empty() {
        return Err(Error::parse(0, "empty rational"));
    }
    let (num, den) = match t.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (t, "1"),
    };
    let p: BigInt = num.parse().map_err(|_| Error::parse(0, format!("bad numerator `{num}`")))?;
    let q: BigInt = den.parse().map_err(|_| Error::parse(num.len() + 1, format!("bad denominator `{den}`")))?;
    if q.is_zero() {
        return Err(Error::parse(num.len() + 1, "zero denominator"));
    }
    Ok(Rational::new(p, q))
}

/// Renders as reduced `p/q` with `q > 0`, always including the denominator.
pub fn format_rational(x: &Rational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// The value as an `i64` when it is an integer that fits.
pub fn as_integer(x: &Rational) -> Option<i64> {
    if x.is_integer() {
        x.numer().to_i64()
    } else {
        None
    }
}

/// The value as a positive integer, if it is one.
pub fn as_positive_integer(x: &Rational) -> Option<u64> {
    if x.is_integer() && x.is_positive() {
        x.numer().to_u64()
    } else {
        None
    }
}

/// Least non-negative residue of `a` modulo `r`.
pub fn residue(a: i64, r: usize) -> usize {
    a.rem_euclid(r as i64) as usize
}

pub fn is_one(x: &Rational) -> bool {
    x.is_one()
}

/// Denominator of a rational in lowest terms.
pub fn denominator(x: &Rational) -> BigInt {
    x.denom().clone()
}

pub fn gcd_i64(a: i64, b: i64) -> i64 {
    a.gcd(&b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_formats() {
        assert_eq!(parse_rational("-3/6").unwrap(), rat(-1, 2));
        assert_eq!(parse_rational(" 4 ").unwrap(), int(4));
        assert_eq!(format_rational(&rat(2, -4)), "-1/2");
        assert_eq!(format_rational(&int(3)), "3/1");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn integrality() {
        assert_eq!(as_positive_integer(&int(3)), Some(3));
        assert_eq!(as_positive_integer(&int(0)), None);
        assert_eq!(as_positive_integer(&rat(3, 2)), None);
        assert_eq!(residue(-1, 3), 2);
    }
}
