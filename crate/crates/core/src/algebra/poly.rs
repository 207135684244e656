//! Dense univariate polynomials with rational coefficients.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rational::{format_rational, rat, Rational};
use crate::error::{Error, Result};

/// Coefficients are stored lowest degree first with no trailing zeros, so
/// the zero polynomial has an empty coefficient list.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn x() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn monomial(c: Rational, degree: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); degree + 1];
        coeffs[degree] = c;
        Self::from_coeffs(coeffs)
    }

    /// `x - root`
    pub fn linear(root: Rational) -> Self {
        Self::from_coeffs(vec![-root, Rational::one()])
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    /// Integer coefficients, lowest degree first.
    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn from_bigints(coeffs: &[BigInt]) -> Self {
        Self::from_coeffs(coeffs.iter().cloned().map(Rational::from_integer).collect())
    }

    /// Monic polynomial with the given rational roots.
    pub fn from_roots(roots: &[Rational]) -> Self {
        roots.iter().fold(Self::one(), |acc, r| &acc * &Self::linear(r.clone()))
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `x^k` (zero past the degree).
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to 0.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn monic(&self) -> Result<Self> {
        let lc = self.leading().ok_or(Error::ZeroPolynomial)?;
        Ok(self.scale(&lc.recip()))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * rat(k as i64))
                .collect(),
        )
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + super::rational::to_f64(c))
    }

    pub fn pow(&self, e: usize) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Substitutes `x -> -x`.
    pub fn reflect(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    /// Euclidean division over the rationals.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lc_inv = divisor.coeffs[dd].recip();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] * &lc_inv;
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &c * d;
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((Self::from_coeffs(quot), Self::from_coeffs(rem)))
    }

    /// Quotient when `divisor` divides `self` exactly.
    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(divisor).ok()?;
        r.is_zero().then_some(q)
    }

    pub fn divides(&self, other: &Self) -> bool {
        !self.is_zero() && other.exact_div(self).is_some()
    }

    /// Sum of the roots counted with multiplicity.
    pub fn trace(&self) -> Result<Rational> {
        trace_of(self)
    }

    /// Common denominator cleared and content removed: `self = content * prim`
    /// with `prim` integral, primitive and with positive leading coefficient.
    pub fn primitive_part(&self) -> (Rational, Vec<BigInt>) {
        if self.is_zero() {
            return (Rational::zero(), Vec::new());
        }
        let lcm = self.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
            .collect();
        let mut content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if ints.last().unwrap().is_negative() {
            content = -content;
        }
        let prim = ints.iter().map(|c| c / &content).collect();
        (Rational::new(content, lcm), prim)
    }

    /// True when every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.denom().is_one())
    }

    /// Renders with the given indeterminate name.
    pub fn display_with(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let coeff = if abs.denom().is_one() {
                format_rational(&abs)
            } else {
                format!("({})", format_rational(&abs))
            };
            match k {
                0 => out.push_str(&coeff),
                _ => {
                    if !abs.is_one() {
                        out.push_str(&coeff);
                    }
                    out.push_str(var);
                    if k > 1 {
                        out.push('^');
                        out.push_str(&k.to_string());
                    }
                }
            }
        }
        out
    }

    /// Parses the output of [`UniPoly::display_with`] in the variable `x`,
    /// and common hand-written variants such as `x^4 - 3x^3 + 2*x - 1`.
    pub fn parse(s: &str) -> Result<Self> {
        parse_poly(s, 'x')
    }
}

/// Negated second-highest coefficient of a monic polynomial.
pub fn trace_of(p: &UniPoly) -> Result<Rational> {
    let d = p.degree().ok_or(Error::ConstantPolynomial)?;
    if d == 0 {
        return Err(Error::ConstantPolynomial);
    }
    if !p.is_monic() {
        return Err(Error::NotMonic);
    }
    Ok(-p.coeff(d - 1))
}

/// Monic greatest common divisor over the rationals.
pub fn poly_gcd(a: &UniPoly, b: &UniPoly) -> Result<UniPoly> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (mut r0, mut r1) = (a.clone(), b.clone());
    while !r1.is_zero() {
        let (_, r) = r0.div_rem(&r1)?;
        // keep the remainder sequence monic to contain coefficient growth
        r0 = r1;
        r1 = if r.is_zero() { r } else { r.monic()? };
    }
    r0.monic()
}

/// Extended Euclid: returns `(g, s, t)` with `s*a + t*b = g`, `g` monic.
pub fn poly_xgcd(a: &UniPoly, b: &UniPoly) -> Result<(UniPoly, UniPoly, UniPoly)> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (UniPoly::one(), UniPoly::zero());
    let (mut t0, mut t1) = (UniPoly::zero(), UniPoly::one());
    while !r1.is_zero() {
        let (q, r) = r0.div_rem(&r1)?;
        let s = &s0 - &(&q * &s1);
        let t = &t0 - &(&q * &t1);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
        t0 = std::mem::replace(&mut t1, t);
    }
    let inv = r0.leading().unwrap().recip();
    Ok((r0.scale(&inv), s0.scale(&inv), t0.scale(&inv)))
}

/// Deterministic total order: by degree, then coefficients from the top.
pub fn poly_cmp(a: &UniPoly, b: &UniPoly) -> Ordering {
    a.coeffs.len().cmp(&b.coeffs.len()).then_with(|| {
        for (x, y) in a.coeffs.iter().rev().zip(b.coeffs.iter().rev()) {
            match x.cmp(y) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        Ordering::Equal
    })
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("x"))
    }
}

impl serde::Serialize for UniPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly({self})")
    }
}

impl Add<&UniPoly> for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::from_coeffs((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub<&UniPoly> for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::from_coeffs((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul<&UniPoly> for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::from_coeffs(out)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<UniPoly> for UniPoly {
            type Output = UniPoly;
            fn $m(self, rhs: UniPoly) -> UniPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&UniPoly> for UniPoly {
            type Output = UniPoly;
            fn $m(self, rhs: &UniPoly) -> UniPoly {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        -&self
    }
}

impl std::iter::Product for UniPoly {
    fn product<I: Iterator<Item = UniPoly>>(iter: I) -> UniPoly {
        iter.fold(UniPoly::one(), |acc, p| &acc * &p)
    }
}

impl<'a> std::iter::Product<&'a UniPoly> for UniPoly {
    fn product<I: Iterator<Item = &'a UniPoly>>(iter: I) -> UniPoly {
        iter.fold(UniPoly::one(), |acc, p| &acc * p)
    }
}

pub(crate) fn parse_poly(s: &str, var: char) -> Result<UniPoly> {
    let err = |m: &str| Error::Parse(format!("polynomial `{s}`: {m}"));
    let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
    if chars.is_empty() {
        return Err(err("empty"));
    }
    let mut pos = 0;
    let mut terms: Vec<(Rational, usize)> = Vec::new();
    while pos < chars.len() {
        let mut sign = Rational::one();
        if chars[pos] == '+' || chars[pos] == '-' {
            if chars[pos] == '-' {
                sign = -sign;
            }
            pos += 1;
        } else if !terms.is_empty() {
            return Err(err("expected `+` or `-` between terms"));
        }
        // coefficient: digits, digits/digits, or a parenthesised rational
        let mut coeff: Option<Rational> = None;
        if pos < chars.len() && chars[pos] == '(' {
            let close = chars[pos..]
                .iter()
                .position(|&c| c == ')')
                .ok_or_else(|| err("unbalanced parenthesis"))?;
            let inner: String = chars[pos + 1..pos + close].iter().collect();
            coeff = Some(super::rational::parse_rational(&inner)?);
            pos += close + 1;
        } else {
            let start = pos;
            while pos < chars.len() && (chars[pos].is_ascii_digit() || chars[pos] == '/') {
                pos += 1;
            }
            if pos > start {
                let text: String = chars[start..pos].iter().collect();
                coeff = Some(super::rational::parse_rational(&text)?);
            }
        }
        if pos < chars.len() && chars[pos] == '*' {
            pos += 1;
        }
        let mut degree = 0;
        if pos < chars.len() && chars[pos] == var {
            pos += 1;
            degree = 1;
            if pos < chars.len() && chars[pos] == '^' {
                pos += 1;
                let start = pos;
                while pos < chars.len() && chars[pos].is_ascii_digit() {
                    pos += 1;
                }
                let text: String = chars[start..pos].iter().collect();
                degree = text.parse().map_err(|_| err("bad exponent"))?;
            }
        } else if coeff.is_none() {
            return Err(err("expected a coefficient or the indeterminate"));
        }
        terms.push((sign * coeff.unwrap_or_else(Rational::one), degree));
    }
    let top = terms.iter().map(|t| t.1).max().unwrap_or(0);
    let mut coeffs = vec![Rational::zero(); top + 1];
    for (c, d) in terms {
        coeffs[d] += c;
    }
    Ok(UniPoly::from_coeffs(coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::frac;

    fn p(s: &str) -> UniPoly {
        UniPoly::parse(s).unwrap()
    }

    #[test]
    fn display_round_trips() {
        for s in [
            "x^3 - 8x - 8",
            "x - 1",
            "-x^2 + (3/2)x + 7",
            "x^4 - 3x^3 - x^2 + 3x + 1",
            "0",
            "5",
        ] {
            assert_eq!(p(s).to_string(), s);
        }
        assert_eq!(p("2*x^2 -x+ 1").to_string(), "2x^2 - x + 1");
    }

    #[test]
    fn gcd_examples() {
        assert!(poly_gcd(&p("x^2 - 4"), &p("x")).unwrap().is_one());
        assert_eq!(poly_gcd(&p("x^2 - 1"), &p("x - 1")).unwrap(), p("x - 1"));
        assert_eq!(poly_gcd(&UniPoly::zero(), &p("2x + 2")).unwrap(), p("x + 1"));
        assert_eq!(poly_gcd(&UniPoly::zero(), &UniPoly::zero()), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn trace_examples() {
        assert_eq!(trace_of(&p("x^2 - x - 1")).unwrap(), rat(1));
        assert_eq!(trace_of(&p("x^3 - 8x - 8")).unwrap(), rat(0));
        assert_eq!(trace_of(&(p("x + 1") * p("x + 2"))).unwrap(), rat(-3));
        assert_eq!(trace_of(&p("7")), Err(Error::ConstantPolynomial));
        assert_eq!(trace_of(&p("2x + 1")), Err(Error::NotMonic));
    }

    #[test]
    fn division() {
        let (q, r) = p("x^3 - 8x - 8").div_rem(&p("x + 2")).unwrap();
        assert_eq!(q, p("x^2 - 2x - 4"));
        assert!(r.is_zero());
        let (q, r) = p("x^2 + 1").div_rem(&p("2x")).unwrap();
        assert_eq!(q, p("(1/2)x"));
        assert_eq!(r, UniPoly::one());
        assert!(p("x").div_rem(&UniPoly::zero()).is_err());
    }

    #[test]
    fn xgcd_identity() {
        let a = p("x^3 - 3x - 1");
        let b = p("x^2 + x - 1");
        let (g, s, t) = poly_xgcd(&a, &b).unwrap();
        assert!(g.is_one());
        assert_eq!(&(&s * &a) + &(&t * &b), g);
    }

    #[test]
    fn primitive_parts() {
        let (c, prim) = p("(3/2)x^2 - 3").primitive_part();
        assert_eq!(c, frac(3, 2));
        assert_eq!(prim, vec![BigInt::from(-2), BigInt::from(0), BigInt::from(1)]);
    }
}
