//! Numeric search for integer relations among the roots of `P+` and `P-`.
//!
//! With roots `lambda_i` of `P+` and `mu_j` of `P-`, a relation is an
//! integer vector `(l, m)` with `sum l_i lambda_i + sum m_j mu_j = 0` and
//! `sum l_i + sum m_j = 0`. Relations form a lattice and the parity of
//! `sum m_j` is a homomorphism on it, so an odd relation exists iff some
//! basis vector is odd. LLL on the usual augmented lattice recovers a basis
//! of the short relations; every candidate is re-checked at twice the
//! working precision. Nothing here is a proof.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::certificate::{FactorRelation, RelationTerm, Side};
use super::lll::lll_reduce;
use super::roots::{fixed_to_f64, irreducible_real_roots};
use super::search::PairFactors;
use crate::algebra::poly_gcd;
use crate::error::{Error, Result};
use crate::spectra::RelativeMinPolyPair;

pub const MIN_PRECISION: u32 = 30;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Parity {
    Even,
    Odd,
}

/// Roots are listed factor by factor, in factor order, ascending within a
/// factor; `*_factor[i]` is the factor index of root `i`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IntegerRelation {
    #[serde(serialize_with = "ser_ints")]
    pub ell: Vec<BigInt>,
    #[serde(serialize_with = "ser_ints")]
    pub m: Vec<BigInt>,
    pub plus_roots: Vec<f64>,
    pub minus_roots: Vec<f64>,
    pub plus_factor: Vec<usize>,
    pub minus_factor: Vec<usize>,
    pub residual: f64,
    pub sum_m_parity: Parity,
}

fn ser_ints<S: serde::Serializer>(v: &[BigInt], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|x| x.to_string()))
}

impl IntegerRelation {
    fn norm(&self) -> BigInt {
        self.ell.iter().chain(&self.m).map(|c| c * c).sum()
    }

    /// The same relation at factor granularity, when its coefficients are
    /// constant on the roots of each irreducible factor.
    pub fn to_factor_relation(&self, factors: &PairFactors) -> Option<FactorRelation> {
        let mut terms = Vec::new();
        for (side, coeffs, owner) in [
            (Side::Plus, &self.ell, &self.plus_factor),
            (Side::Minus, &self.m, &self.minus_factor),
        ] {
            for (k, f) in factors.side(side).factors().iter().enumerate() {
                let mut values = coeffs.iter().zip(owner).filter(|(_, &o)| o == k).map(|(c, _)| c);
                let first = values.next()?.clone();
                if values.any(|c| *c != first) {
                    return None;
                }
                if !first.is_zero() {
                    terms.push(RelationTerm {
                        side,
                        factor: f.poly.clone(),
                        coefficient: first,
                    });
                }
            }
        }
        Some(FactorRelation { terms })
    }
}

/// All relations recovered by one lattice reduction.
#[derive(Clone, Debug)]
pub struct RelationSearch {
    pub relations: Vec<IntegerRelation>,
}

impl RelationSearch {
    /// Least-norm odd relation, else least-norm relation.
    pub fn best(&self) -> Option<&IntegerRelation> {
        let pick = |odd: bool| {
            self.relations
                .iter()
                .filter(|r| (r.sum_m_parity == Parity::Odd) == odd)
                .min_by_key(|r| r.norm())
        };
        pick(true).or_else(|| pick(false))
    }
}

fn ten_pow(e: u32) -> BigInt {
    num_traits::pow(BigInt::from(10), e as usize)
}

/// Runs the lattice search on already factored `P+`, `P-`.
pub fn search_relations(factors: &PairFactors, precision: u32, coeff_bound: &BigInt) -> Result<RelationSearch> {
    if precision < MIN_PRECISION {
        return Err(Error::Precondition(format!(
            "precision {precision} is below the minimum of {MIN_PRECISION} digits"
        )));
    }
    // roots at twice the working precision, plus guard bits
    let bits = (2.0 * precision as f64 * std::f64::consts::LOG2_10).ceil() as u64 + 32;
    let mut roots: Vec<BigInt> = Vec::new();
    let mut owner: Vec<(Side, usize)> = Vec::new();
    for side in [Side::Plus, Side::Minus] {
        for (k, f) in factors.side(side).factors().iter().enumerate() {
            for r in irreducible_real_roots(&f.poly, bits)? {
                roots.push(r);
                owner.push((side, k));
            }
        }
    }
    let d = roots.len();
    let scale = ten_pow(precision);
    let one = BigInt::one() << bits as usize;
    let half = BigInt::one() << (bits - 1) as usize;
    let mut basis: Vec<Vec<BigInt>> = (0..d)
        .map(|i| {
            let mut row = vec![BigInt::zero(); d + 2];
            row[i] = BigInt::one();
            row[d] = scale.clone();
            row[d + 1] = (&roots[i] * &scale + &half).div_floor(&one);
            row
        })
        .collect();
    lll_reduce(&mut basis, 99, 100);

    // accept |sum c_i r_i| < 10^(-1.5 precision), allowing the floor error
    let tol = (&one * BigInt::one()) / ten_pow(precision * 3 / 2);
    let mut relations = Vec::new();
    for row in &basis {
        if !row[d].is_zero() {
            continue;
        }
        let c = &row[..d];
        if c.iter().all(Zero::is_zero) || c.iter().any(|v| v.abs() > *coeff_bound) {
            continue;
        }
        let weight: BigInt = c.iter().map(|v| v.abs()).sum();
        let value: BigInt = c.iter().zip(&roots).map(|(a, r)| a * r).sum();
        if value.abs() > &tol + &weight {
            continue;
        }
        let mut rel = IntegerRelation {
            ell: Vec::new(),
            m: Vec::new(),
            plus_roots: Vec::new(),
            minus_roots: Vec::new(),
            plus_factor: Vec::new(),
            minus_factor: Vec::new(),
            residual: fixed_to_f64(&value.abs(), bits),
            sum_m_parity: Parity::Even,
        };
        for ((coef, r), (side, k)) in c.iter().zip(&roots).zip(&owner) {
            let x = fixed_to_f64(r, bits);
            match side {
                Side::Plus => {
                    rel.ell.push(coef.clone());
                    rel.plus_roots.push(x);
                    rel.plus_factor.push(*k);
                }
                Side::Minus => {
                    rel.m.push(coef.clone());
                    rel.minus_roots.push(x);
                    rel.minus_factor.push(*k);
                }
            }
        }
        let sum_m: BigInt = rel.m.iter().sum();
        rel.sum_m_parity = if sum_m.is_odd() { Parity::Odd } else { Parity::Even };
        relations.push(rel);
    }
    Ok(RelationSearch { relations })
}

/// Looks for an integer relation among the roots of `P+ P-`, preferring
/// one with odd `sum m_j`. Evidence only.
pub fn heuristic_relation_search(
    pair: &RelativeMinPolyPair,
    precision: u32,
    coeff_bound: &BigInt,
) -> Result<Option<IntegerRelation>> {
    if !poly_gcd(&pair.plus, &pair.minus)?.is_one() {
        return Err(Error::Precondition("P+ and P- share a root".into()));
    }
    let factors = PairFactors::new(pair)?;
    Ok(search_relations(&factors, precision, coeff_bound)?.best().cloned())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::UniPoly;

    fn pair(plus: UniPoly, minus: UniPoly) -> RelativeMinPolyPair {
        RelativeMinPolyPair {
            plus,
            minus,
            zero: None,
        }
    }

    fn p(s: &str) -> UniPoly {
        UniPoly::parse(s).unwrap()
    }

    #[test]
    fn k2_has_no_relation() {
        let r = heuristic_relation_search(&pair(p("x - 1"), p("x + 1")), 60, &BigInt::from(50)).unwrap();
        assert!(r.is_none());
    }

    #[test]
    fn p8_has_an_odd_relation() {
        let pr = pair(p("x - 1") * p("x^3 - 3x - 1"), p("x + 1") * p("x^3 - 3x + 1"));
        let r = heuristic_relation_search(&pr, 60, &BigInt::from(1_000_000))
            .unwrap()
            .unwrap();
        assert_eq!(r.sum_m_parity, Parity::Odd);
        let s: BigInt = r.ell.iter().chain(&r.m).sum();
        assert!(s.is_zero());
        assert!(r.residual < 1e-80);
    }

    #[test]
    fn k22_relations_are_even() {
        let pr = pair(p("x^2 - 4"), p("x"));
        let found = search_relations(&PairFactors::new(&pr).unwrap(), 60, &BigInt::from(10)).unwrap();
        assert!(!found.relations.is_empty());
        assert!(found.relations.iter().all(|r| r.sum_m_parity == Parity::Even));
    }

    #[test]
    fn low_precision_is_rejected() {
        let pr = pair(p("x - 1"), p("x + 1"));
        assert!(heuristic_relation_search(&pr, 29, &BigInt::from(50)).is_err());
    }
}
