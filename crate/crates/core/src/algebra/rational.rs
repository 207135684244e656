//! Exact rationals.
//!
//! Backed by `num_rational::BigRational`, which keeps every value in lowest
//! terms with a positive denominator.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p/q"`, `"-p/q"` or a plain integer.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("invalid rational `{s}`"));
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (s, "1"),
    };
    let n: BigInt = num.parse().map_err(|_| bad())?;
    let d: BigInt = den.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}

/// Lowest-terms `p/q`, or just `p` for integers.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn to_f64(r: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or_else(|| {
        // huge numerators/denominators: scale through the bit lengths
        let shift = r.numer().bits() as i64 - r.denom().bits() as i64;
        let scaled = if shift >= 0 {
            r / Rational::from_integer(BigInt::one() << shift as usize)
        } else {
            r * Rational::from_integer(BigInt::one() << (-shift) as usize)
        };
        scaled.to_f64().unwrap_or(0.0) * 2f64.powi(shift as i32)
    })
}

/// Serde adapters that write rationals as `"p/q"` strings.
pub(crate) mod as_string {
    use serde::Serializer;

    use super::{format_rational, Rational};

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(r))
    }
}

pub(crate) mod bigint_as_string {
    use num_bigint::BigInt;
    use serde::Serializer;

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }
}

/// Bit size used to rank pivots: smaller means cheaper arithmetic.
pub(crate) fn bit_size(r: &Rational) -> u64 {
    r.numer().bits() + r.denom().bits()
}

pub(crate) fn is_integer(r: &Rational) -> bool {
    r.denom().is_one()
}

pub(crate) fn is_odd_integer(r: &Rational) -> bool {
    is_integer(r) && r.numer().abs() % BigInt::from(2) == BigInt::one()
}

/// Exact square root when `r` is the square of a rational.
pub(crate) fn rational_sqrt(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    (&n * &n == *r.numer() && &d * &d == *r.denom()).then(|| Rational::new(n, d))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rational("6/4").unwrap(), frac(3, 2));
        assert_eq!(parse_rational("-7").unwrap(), rat(-7));
        assert_eq!(format_rational(&frac(-10, 4)), "-5/2");
        assert_eq!(format_rational(&rat(3)), "3");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn square_roots() {
        assert_eq!(rational_sqrt(&frac(9, 4)), Some(frac(3, 2)));
        assert_eq!(rational_sqrt(&rat(2)), None);
        assert_eq!(rational_sqrt(&rat(-4)), None);
    }

    #[test]
    fn odd_integers() {
        assert!(is_odd_integer(&rat(-3)));
        assert!(!is_odd_integer(&rat(4)));
        assert!(!is_odd_integer(&frac(3, 2)));
    }
}
