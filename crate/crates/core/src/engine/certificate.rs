//! Exact certificates for PGST verdicts.
//!
//! Every obstruction certificate is checked twice: once through the
//! arithmetic conditions of its rule, and once by building the integer
//! relation it stands for and checking that relation directly. A relation
//! assigns one integer per factor, constant over that factor's roots, so
//! its two sums reduce to degree and trace arithmetic.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use serde::Serialize;

use crate::algebra::rational::{as_string, bigint_as_string, is_integer, is_odd_integer};
use crate::algebra::{factor_over_q, poly_gcd, Rational, UniPoly};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Plus,
    Minus,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::Plus => Side::Minus,
            Side::Minus => Side::Plus,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Side::Plus => "P+",
            Side::Minus => "P-",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationTerm {
    pub side: Side,
    pub factor: UniPoly,
    #[serde(with = "bigint_as_string")]
    pub coefficient: BigInt,
}

/// Integer weights constant on the roots of pairwise coprime divisors of
/// `P+` and `P-`. Valid when the weighted root sum and the weight count
/// both vanish; it obstructs PGST when the `P-` weight count is odd.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FactorRelation {
    pub terms: Vec<RelationTerm>,
}

impl FactorRelation {
    /// `(sum of weights over roots, sum of weighted roots, P- weight count)`.
    pub fn sums(&self) -> Result<(BigInt, Rational, BigInt)> {
        let mut count = BigInt::zero();
        let mut value = Rational::zero();
        let mut minus = BigInt::zero();
        for t in &self.terms {
            let d = BigInt::from(t.factor.deg());
            count += &t.coefficient * &d;
            value += Rational::from_integer(t.coefficient.clone()) * t.factor.trace()?;
            if t.side == Side::Minus {
                minus += &t.coefficient * &d;
            }
        }
        Ok((count, value, minus))
    }

    pub fn verify(&self, plus: &UniPoly, minus: &UniPoly) -> Result<()> {
        for side in [Side::Plus, Side::Minus] {
            let target = if side == Side::Plus { plus } else { minus };
            let factors: Vec<&UniPoly> = self
                .terms
                .iter()
                .filter(|t| t.side == side)
                .map(|t| &t.factor)
                .collect();
            for (i, f) in factors.iter().enumerate() {
                if f.is_constant() || !f.is_monic() {
                    return fail(format!("relation factor {f} is not a monic nonconstant polynomial"));
                }
                if !f.divides(target) {
                    return fail(format!("{f} does not divide {} = {target}", side.symbol()));
                }
                for g in &factors[..i] {
                    if !poly_gcd(f, g)?.is_one() {
                        return fail(format!("relation factors {g} and {f} share a root"));
                    }
                }
            }
        }
        let (count, value, minus_count) = self.sums()?;
        if !count.is_zero() {
            return fail(format!("weights sum to {count}, not 0"));
        }
        if !value.is_zero() {
            return fail(format!("weighted root sum is {value}, not 0"));
        }
        if minus_count.is_even() {
            return fail(format!("P- weight count {minus_count} is even"));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    /// `P+` and `P-` irreducible with different mean roots.
    Sufficient {
        #[serde(with = "as_string")]
        plus_trace: Rational,
        plus_degree: usize,
        #[serde(with = "as_string")]
        minus_trace: Rational,
        minus_degree: usize,
    },
    /// Odd-degree divisors `f+ | P+` and `f- | P-` with equal mean roots.
    OddDegree { f_plus: UniPoly, f_minus: UniPoly },
    /// `f g` divides the `side` polynomial, `tr f` is odd,
    /// `tr(f) deg(g) - tr(g) deg(f)` is odd, and `h` is an odd-degree
    /// divisor of the other polynomial. All traces are integers.
    ThreeFactor {
        side: Side,
        f: UniPoly,
        g: UniPoly,
        h: UniPoly,
    },
    /// An odd relation found directly at the level of factors.
    FactorRelation(FactorRelation),
}

fn fail<T>(msg: String) -> Result<T> {
    Err(Error::Certificate(msg))
}

fn ratio(p: &UniPoly) -> Result<Rational> {
    Ok(p.trace()? / Rational::from_integer(p.deg().into()))
}

fn int(r: &Rational) -> BigInt {
    r.to_integer()
}

impl Certificate {
    pub fn is_obstruction(&self) -> bool {
        !matches!(self, Certificate::Sufficient { .. })
    }

    /// The integer relation an obstruction certificate encodes.
    pub fn relation(&self) -> Result<Option<FactorRelation>> {
        let term = |side, factor: &UniPoly, coefficient: BigInt| RelationTerm {
            side,
            factor: factor.clone(),
            coefficient,
        };
        Ok(match self {
            Certificate::Sufficient { .. } => None,
            Certificate::OddDegree { f_plus, f_minus } => Some(FactorRelation {
                terms: vec![
                    term(Side::Plus, f_plus, -BigInt::from(f_minus.deg())),
                    term(Side::Minus, f_minus, BigInt::from(f_plus.deg())),
                ],
            }),
            Certificate::ThreeFactor { side, f, g, h } => {
                let (tf, tg, th) = (int(&f.trace()?), int(&g.trace()?), int(&h.trace()?));
                let (df, dg, dh) = (BigInt::from(f.deg()), BigInt::from(g.deg()), BigInt::from(h.deg()));
                let odd = &tf * &dg - &tg * &df;
                let q = &tf * &dh - &th * &df;
                Some(FactorRelation {
                    terms: vec![
                        term(*side, f, &odd * &th - &q * &tg),
                        term(*side, g, &q * &tf),
                        term(side.other(), h, -(&odd * &tf)),
                    ],
                })
            }
            Certificate::FactorRelation(r) => Some(r.clone()),
        })
    }

    /// Re-checks the certificate against `P+` and `P-` from scratch.
    pub fn verify(&self, plus: &UniPoly, minus: &UniPoly) -> Result<()> {
        match self {
            Certificate::Sufficient {
                plus_trace,
                plus_degree,
                minus_trace,
                minus_degree,
            } => {
                for (p, t, d) in [(plus, plus_trace, plus_degree), (minus, minus_trace, minus_degree)] {
                    if !factor_over_q(p)?.is_irreducible() {
                        return fail(format!("{p} is reducible"));
                    }
                    if p.deg() != *d || p.trace()? != *t {
                        return fail(format!("stated trace/degree do not match {p}"));
                    }
                }
                if ratio(plus)? == ratio(minus)? {
                    return fail("trace/degree ratios coincide".into());
                }
                Ok(())
            }
            Certificate::OddDegree { f_plus, f_minus } => {
                for (f, p, side) in [(f_plus, plus, Side::Plus), (f_minus, minus, Side::Minus)] {
                    if f.deg() % 2 == 0 {
                        return fail(format!("{f} has even degree"));
                    }
                    if !f.is_monic() || !f.divides(p) {
                        return fail(format!("{f} is not a monic divisor of {}", side.symbol()));
                    }
                }
                if ratio(f_plus)? != ratio(f_minus)? {
                    return fail("trace/degree ratios differ".into());
                }
                self.relation()?.expect("obstruction").verify(plus, minus)
            }
            Certificate::ThreeFactor { side, f, g, h } => {
                let (own, other) = match side {
                    Side::Plus => (plus, minus),
                    Side::Minus => (minus, plus),
                };
                for p in [f, g, h] {
                    if p.is_constant() || !p.is_monic() {
                        return fail(format!("{p} is not monic and nonconstant"));
                    }
                    if !is_integer(&p.trace()?) {
                        return fail(format!("{p} has a non-integer trace"));
                    }
                }
                if !(f * g).divides(own) {
                    return fail(format!("f g does not divide {}", side.symbol()));
                }
                if !poly_gcd(f, g)?.is_one() {
                    return fail("f and g share a root".into());
                }
                if !is_odd_integer(&f.trace()?) {
                    return fail("tr(f) is even".into());
                }
                let df = Rational::from_integer(f.deg().into());
                let dg = Rational::from_integer(g.deg().into());
                let cross = f.trace()? * dg - g.trace()? * df;
                if !is_odd_integer(&cross) {
                    return fail(format!("tr(f)deg(g) - tr(g)deg(f) = {cross} is even"));
                }
                if h.deg() % 2 == 0 || !h.divides(other) {
                    return fail(format!("h is not an odd-degree divisor of {}", side.other().symbol()));
                }
                self.relation()?.expect("obstruction").verify(plus, minus)
            }
            Certificate::FactorRelation(r) => r.verify(plus, minus),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn p(s: &str) -> UniPoly {
        UniPoly::parse(s).unwrap()
    }

    #[test]
    fn odd_degree_certificate_for_the_wheel() {
        let c = Certificate::OddDegree {
            f_plus: p("x^3 - 8x - 8"),
            f_minus: p("x"),
        };
        c.verify(&p("x^3 - 8x - 8"), &p("x")).unwrap();
        let r = c.relation().unwrap().unwrap();
        let (count, value, minus) = r.sums().unwrap();
        assert!(count.is_zero() && value.is_zero());
        assert_eq!(minus, BigInt::from(3));
    }

    #[test]
    fn three_factor_certificate_for_the_double_star() {
        let plus = p("x - 2") * p("x - 1") * p("x + 1") * p("x + 2");
        let c = Certificate::ThreeFactor {
            side: Side::Plus,
            f: p("x - 1"),
            g: p("x^2 + 3x + 2"),
            h: p("x"),
        };
        c.verify(&plus, &p("x")).unwrap();
        // swapping the roles of the sides is rejected
        let swapped = Certificate::ThreeFactor {
            side: Side::Minus,
            f: p("x - 1"),
            g: p("x^2 + 3x + 2"),
            h: p("x"),
        };
        assert!(swapped.verify(&plus, &p("x")).is_err());
    }

    #[test]
    fn rejects_bad_certificates() {
        let bad = Certificate::OddDegree {
            f_plus: p("x - 1"),
            f_minus: p("x + 1"),
        };
        assert!(bad.verify(&p("x - 1"), &p("x + 1")).is_err());
        let even = Certificate::ThreeFactor {
            side: Side::Plus,
            f: p("x - 2"),
            g: p("x + 2"),
            h: p("x"),
        };
        assert!(even.verify(&p("x^2 - 4"), &p("x")).is_err());
        let suff = Certificate::Sufficient {
            plus_trace: Rational::one(),
            plus_degree: 2,
            minus_trace: -Rational::one(),
            minus_degree: 2,
        };
        suff.verify(&p("x^2 - x - 1"), &p("x^2 + x - 1")).unwrap();
        assert!(suff.verify(&p("x^2 - 1"), &p("x^2 + x - 1")).is_err());
    }
}
