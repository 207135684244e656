//! Searches over sub-products of the irreducible factors of `P+` and `P-`.
//!
//! Sub-products are bitmasks over a side's factor list. Candidates are
//! ranked by total degree, then side, then the lexicographic order of their
//! factor index lists, and the least candidate wins. Enumeration stops
//! after `max_combinations` candidates and reports truncation.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::certificate::{Certificate, FactorRelation, RelationTerm, Side};
use crate::algebra::rational::{is_integer, is_odd_integer};
use crate::algebra::{factor_over_q, Rational, UniPoly};
use crate::error::{Error, Result};
use crate::spectra::RelativeMinPolyPair;

#[derive(Clone, Debug)]
pub struct Factor {
    pub poly: UniPoly,
    pub degree: usize,
    pub trace: Rational,
}

/// The distinct monic irreducible factors of one of `P+`, `P-`.
#[derive(Clone, Debug)]
pub struct SideFactors {
    factors: Vec<Factor>,
}

impl SideFactors {
    /// Factors a square-free polynomial; repeated factors are rejected.
    pub fn from_poly(p: &UniPoly) -> Result<Self> {
        let f = factor_over_q(p)?;
        if !f.is_squarefree() {
            return Err(Error::Precondition(format!("{p} is not square-free")));
        }
        Self::from_factors(f.irreducibles())
    }

    /// Uses the given factors, in the given order.
    pub fn from_factors(polys: Vec<UniPoly>) -> Result<Self> {
        if polys.len() > 63 {
            return Err(Error::Precondition("more than 63 irreducible factors".into()));
        }
        let factors = polys
            .into_iter()
            .map(|poly| {
                let trace = poly.trace()?;
                Ok(Factor {
                    degree: poly.deg(),
                    trace,
                    poly,
                })
            })
            .collect::<Result<_>>()?;
        Ok(Self { factors })
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    fn members(&self, mask: u64) -> impl Iterator<Item = &Factor> {
        self.factors
            .iter()
            .enumerate()
            .filter(move |(i, _)| mask >> i & 1 == 1)
            .map(|(_, f)| f)
    }

    pub fn product(&self, mask: u64) -> UniPoly {
        self.members(mask).map(|f| &f.poly).product()
    }

    fn degree(&self, mask: u64) -> usize {
        self.members(mask).map(|f| f.degree).sum()
    }

    fn trace(&self, mask: u64) -> Rational {
        self.members(mask).map(|f| f.trace.clone()).sum()
    }

    /// Nonempty sub-products as `(mask, degree, trace)`, at most `cap` of
    /// them, smallest subsets first.
    fn subsets(&self, cap: u64, budget: &mut Budget) -> Vec<(u64, usize, Rational)> {
        let n = self.factors.len();
        let mut out = Vec::new();
        'outer: for size in 1..=n {
            for combo in crate::algebra::factor::Combinations::new(n, size) {
                if out.len() as u64 >= cap || !budget.take(1) {
                    budget.truncated = true;
                    break 'outer;
                }
                let mask = combo.iter().fold(0u64, |m, &i| m | 1 << i);
                out.push((mask, self.degree(mask), self.trace(mask)));
            }
        }
        out
    }
}

/// Lexicographic comparison of the index lists encoded by two masks.
fn lex(a: u64, b: u64) -> Ordering {
    let ia = (0..64).filter(|i| a >> i & 1 == 1);
    let ib = (0..64).filter(|i| b >> i & 1 == 1);
    ia.cmp(ib)
}

struct Budget {
    left: u64,
    truncated: bool,
}

impl Budget {
    fn new(max: u64) -> Self {
        Self {
            left: max,
            truncated: false,
        }
    }

    fn take(&mut self, n: u64) -> bool {
        if self.left < n {
            self.left = 0;
            false
        } else {
            self.left -= n;
            true
        }
    }
}

/// Outcome of an exhaustive search: the least certificate in search order,
/// if any, and whether the combination cap cut the search short.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOutcome {
    pub certificate: Option<Certificate>,
    pub truncated: bool,
}

/// Both sides of a pair, factored once.
#[derive(Clone, Debug)]
pub struct PairFactors {
    pub plus: SideFactors,
    pub minus: SideFactors,
}

impl PairFactors {
    pub fn new(pair: &RelativeMinPolyPair) -> Result<Self> {
        Ok(Self {
            plus: SideFactors::from_poly(&pair.plus)?,
            minus: SideFactors::from_poly(&pair.minus)?,
        })
    }

    pub fn side(&self, s: Side) -> &SideFactors {
        match s {
            Side::Plus => &self.plus,
            Side::Minus => &self.minus,
        }
    }
}

fn mean(degree: usize, trace: &Rational) -> Rational {
    trace / Rational::from_integer(degree.into())
}

/// Certificate when `P+` and `P-` are both irreducible with different
/// trace/degree ratios.
pub fn pgst_sufficient(factors: &PairFactors) -> Option<Certificate> {
    let (p, m) = (&factors.plus.factors, &factors.minus.factors);
    if p.len() != 1 || m.len() != 1 {
        return None;
    }
    let (p, m) = (&p[0], &m[0]);
    (mean(p.degree, &p.trace) != mean(m.degree, &m.trace)).then(|| Certificate::Sufficient {
        plus_trace: p.trace.clone(),
        plus_degree: p.degree,
        minus_trace: m.trace.clone(),
        minus_degree: m.degree,
    })
}

/// Odd-degree sub-products `f+` of `P+` and `f-` of `P-` with equal
/// trace/degree ratio.
pub fn obstruction_odd_degree(factors: &PairFactors, max_combinations: u64) -> SearchOutcome {
    let mut budget = Budget::new(max_combinations);
    let odd = |s: &SideFactors, budget: &mut Budget| -> Vec<(u64, usize, Rational)> {
        s.subsets(u64::MAX, budget)
            .into_iter()
            .filter(|(_, d, _)| d % 2 == 1)
            .collect()
    };
    let plus = odd(&factors.plus, &mut budget);
    let minus = odd(&factors.minus, &mut budget);
    let mut best: Option<(usize, u64, u64)> = None;
    for (pm, pd, pt) in &plus {
        let pr = mean(*pd, pt);
        for (mm, md, mt) in &minus {
            if !budget.take(1) {
                budget.truncated = true;
                break;
            }
            if mean(*md, mt) != pr {
                continue;
            }
            let key = (pd + md, *pm, *mm);
            let better = best.map_or(true, |b| {
                key.0
                    .cmp(&b.0)
                    .then_with(|| lex(key.1, b.1))
                    .then_with(|| lex(key.2, b.2))
                    == Ordering::Less
            });
            if better {
                best = Some(key);
            }
        }
    }
    SearchOutcome {
        certificate: best.map(|(_, pm, mm)| Certificate::OddDegree {
            f_plus: factors.plus.product(pm),
            f_minus: factors.minus.product(mm),
        }),
        truncated: budget.truncated,
    }
}

/// Every three-factor certificate for one orientation, in search order.
/// `f` and `g` are disjoint sub-products of the `side` polynomial and `h`
/// an odd-degree sub-product of the other.
fn three_factor_candidates(
    factors: &PairFactors,
    side: Side,
    budget: &mut Budget,
) -> Vec<((usize, u64, u64, u64), Certificate)> {
    let own = factors.side(side);
    let other = factors.side(side.other());
    let hs: Vec<_> = other
        .subsets(u64::MAX, budget)
        .into_iter()
        .filter(|(_, d, t)| d % 2 == 1 && is_integer(t))
        .collect();
    if hs.is_empty() {
        return Vec::new();
    }
    let subsets: Vec<_> = own
        .subsets(u64::MAX, budget)
        .into_iter()
        .filter(|(_, _, t)| is_integer(t))
        .collect();
    let mut out = Vec::new();
    for (fm, fd, ft) in subsets.iter().filter(|(_, _, t)| is_odd_integer(t)) {
        for (gm, gd, gt) in &subsets {
            if fm & gm != 0 {
                continue;
            }
            if !budget.take(1) {
                budget.truncated = true;
                return out;
            }
            let cross = ft * Rational::from_integer((*gd).into()) - gt * Rational::from_integer((*fd).into());
            if !is_odd_integer(&cross) {
                continue;
            }
            for (hm, hd, _) in &hs {
                let key = (fd + gd + hd, *fm, *gm, *hm);
                out.push((
                    key,
                    Certificate::ThreeFactor {
                        side,
                        f: own.product(*fm),
                        g: own.product(*gm),
                        h: other.product(*hm),
                    },
                ));
            }
        }
    }
    out
}

fn three_factor_order(a: &(usize, u64, u64, u64), sa: Side, b: &(usize, u64, u64, u64), sb: Side) -> Ordering {
    a.0.cmp(&b.0)
        .then(sa.cmp(&sb))
        .then_with(|| lex(a.1, b.1))
        .then_with(|| lex(a.2, b.2))
        .then_with(|| lex(a.3, b.3))
}

/// All three-factor certificates in search order, both orientations.
pub fn enumerate_three_factor(factors: &PairFactors, max_combinations: u64) -> (Vec<Certificate>, bool) {
    let mut budget = Budget::new(max_combinations);
    let mut all: Vec<(Side, (usize, u64, u64, u64), Certificate)> = Vec::new();
    for side in [Side::Plus, Side::Minus] {
        for (k, c) in three_factor_candidates(factors, side, &mut budget) {
            all.push((side, k, c));
        }
    }
    all.sort_by(|a, b| three_factor_order(&a.1, a.0, &b.1, b.0));
    (all.into_iter().map(|(_, _, c)| c).collect(), budget.truncated)
}

/// The least three-factor certificate in search order.
pub fn obstruction_three_factor(factors: &PairFactors, max_combinations: u64) -> SearchOutcome {
    let (all, truncated) = enumerate_three_factor(factors, max_combinations);
    SearchOutcome {
        certificate: all.into_iter().next(),
        truncated,
    }
}

/// Exact search for an odd relation that is constant on each irreducible
/// factor. Such relations form the integer kernel of the 2 x k matrix of
/// factor degrees and traces; the parity map is linear, so an odd relation
/// exists iff some kernel basis vector is odd.
pub fn factor_relation_search(factors: &PairFactors) -> Option<Certificate> {
    let cols: Vec<(Side, &Factor)> = factors
        .plus
        .factors
        .iter()
        .map(|f| (Side::Plus, f))
        .chain(factors.minus.factors.iter().map(|f| (Side::Minus, f)))
        .collect();
    let k = cols.len();
    let den = cols.iter().fold(BigInt::one(), |acc, (_, f)| acc.lcm(f.trace.denom()));
    let rows: Vec<Vec<BigInt>> = vec![
        cols.iter().map(|(_, f)| BigInt::from(f.degree)).collect(),
        cols.iter()
            .map(|(_, f)| (&f.trace * Rational::from_integer(den.clone())).to_integer())
            .collect(),
    ];
    let kernel = integer_kernel(&rows, k);
    let parity = |v: &[BigInt]| -> BigInt {
        cols.iter()
            .zip(v)
            .filter(|((s, _), _)| *s == Side::Minus)
            .map(|((_, f), c)| c * BigInt::from(f.degree))
            .sum()
    };
    let best = kernel
        .into_iter()
        .filter(|v| parity(v).is_odd())
        .min_by_key(|v| v.iter().map(|c| c.abs()).sum::<BigInt>())?;
    let terms = cols
        .iter()
        .zip(best)
        .filter(|(_, c)| !c.is_zero())
        .map(|((side, f), c)| RelationTerm {
            side: *side,
            factor: f.poly.clone(),
            coefficient: c,
        })
        .collect();
    Some(Certificate::FactorRelation(FactorRelation { terms }))
}

/// Z-basis of `{v in Z^k : rows . v = 0}` by unimodular column operations.
fn integer_kernel(rows: &[Vec<BigInt>], k: usize) -> Vec<Vec<BigInt>> {
    let mut m: Vec<Vec<BigInt>> = rows.to_vec();
    // columns of u track the operations: m_original * u = m
    let mut u: Vec<Vec<BigInt>> = (0..k)
        .map(|i| (0..k).map(|j| BigInt::from((i == j) as i32)).collect())
        .collect();
    let mut pivot_col = 0;
    for r in 0..m.len() {
        if pivot_col >= k {
            break;
        }
        // gcd-reduce row r over columns pivot_col.. into pivot_col
        for c in pivot_col + 1..k {
            while !m[r][c].is_zero() {
                let q = m[r][pivot_col].div_floor(&m[r][c]);
                col_axpy(&mut m, pivot_col, c, &q);
                col_axpy(&mut u, pivot_col, c, &q);
                col_swap(&mut m, pivot_col, c);
                col_swap(&mut u, pivot_col, c);
            }
        }
        if !m[r][pivot_col].is_zero() {
            pivot_col += 1;
        }
    }
    (pivot_col..k)
        .map(|c| u.iter().map(|row| row[c].clone()).collect())
        .collect()
}

/// `col a -= q * col b`.
fn col_axpy(m: &mut [Vec<BigInt>], a: usize, b: usize, q: &BigInt) {
    for row in m.iter_mut() {
        let v = q * &row[b];
        row[a] -= v;
    }
}

fn col_swap(m: &mut [Vec<BigInt>], a: usize, b: usize) {
    for row in m.iter_mut() {
        row.swap(a, b);
    }
}
