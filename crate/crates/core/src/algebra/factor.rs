//! Complete factorization over the rationals.
//!
//! Square-free decomposition (Yun) followed by a Zassenhaus factorization of
//! each square-free part: factor modulo a small prime that keeps the
//! polynomial square-free, Hensel-lift the modular factors, then recombine
//! subsets of lifted factors by trial division over the integers.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::modp::{self, ModPoly};
use super::poly::{poly_cmp, poly_gcd, UniPoly};
use super::rational::{rational_sqrt, Rational};
use crate::error::{Error, Result};

/// `unit * prod(factor^multiplicity)`, factors monic, irreducible and
/// pairwise distinct, sorted by degree then coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub unit: Rational,
    pub factors: Vec<(UniPoly, usize)>,
}

impl Factorization {
    pub fn expand(&self) -> UniPoly {
        let prod: UniPoly = self.factors.iter().map(|(f, m)| f.pow(*m)).product();
        prod.scale(&self.unit)
    }

    /// Irreducible factors ignoring multiplicity.
    pub fn irreducibles(&self) -> Vec<UniPoly> {
        self.factors.iter().map(|(f, _)| f.clone()).collect()
    }

    pub fn is_irreducible(&self) -> bool {
        self.factors.len() == 1 && self.factors[0].1 == 1
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|(_, m)| *m == 1)
    }
}

pub fn factor_over_q(p: &UniPoly) -> Result<Factorization> {
    let unit = p.leading().ok_or(Error::ZeroPolynomial)?.clone();
    let monic = p.monic()?;
    let mut factors = Vec::new();
    if monic.deg() > 0 {
        for (part, mult) in squarefree_decomposition(&monic)? {
            for f in factor_squarefree(&part) {
                factors.push((f, mult));
            }
        }
    }
    factors.sort_by(|a, b| poly_cmp(&a.0, &b.0));
    Ok(Factorization { unit, factors })
}

/// True when `p` (nonconstant) is irreducible over the rationals.
pub fn is_irreducible(p: &UniPoly) -> bool {
    p.deg() >= 1 && factor_over_q(p).is_ok_and(|f| f.is_irreducible())
}

/// True when `p = r^2` for some `r` with rational coefficients.
pub fn is_perfect_square(p: &UniPoly) -> bool {
    if p.is_zero() {
        return true;
    }
    let Ok(f) = factor_over_q(p) else {
        return false;
    };
    rational_sqrt(&f.unit).is_some() && f.factors.iter().all(|(_, m)| m % 2 == 0)
}

/// Yun's algorithm on a monic polynomial: pairs `(a_i, i)` with
/// `p = prod a_i^i`, each `a_i` monic, square-free and nonconstant.
pub fn squarefree_decomposition(p: &UniPoly) -> Result<Vec<(UniPoly, usize)>> {
    let f = p.monic()?;
    let mut out = Vec::new();
    if f.deg() == 0 {
        return Ok(out);
    }
    let df = f.derivative();
    let b = poly_gcd(&f, &df)?;
    let mut c = f.exact_div(&b).expect("gcd divides");
    let mut d = &df.exact_div(&b).expect("gcd divides") - &c.derivative();
    let mut i = 1;
    while c.deg() > 0 {
        let a = poly_gcd(&c, &d)?;
        c = c.exact_div(&a).expect("gcd divides");
        d = &d.exact_div(&a).expect("gcd divides") - &c.derivative();
        if a.deg() > 0 {
            out.push((a, i));
        }
        i += 1;
    }
    Ok(out)
}

/// Monic irreducible factors of a monic square-free polynomial.
fn factor_squarefree(f: &UniPoly) -> Vec<UniPoly> {
    let mut out = Vec::new();
    let mut f = f.clone();
    if f.coeff(0).is_zero() {
        out.push(UniPoly::x());
        f = f.exact_div(&UniPoly::x()).unwrap();
    }
    if f.deg() == 0 {
        return out;
    }
    let (_, prim) = f.primitive_part();
    for g in zassenhaus(&prim) {
        out.push(UniPoly::from_bigints(&g).monic().unwrap());
    }
    out
}

type ZPoly = Vec<BigInt>;

fn ztrim(mut a: ZPoly) -> ZPoly {
    while a.last().is_some_and(Zero::is_zero) {
        a.pop();
    }
    a
}

fn zmod(a: &[BigInt], m: &BigInt) -> ZPoly {
    ztrim(a.iter().map(|c| c.mod_floor(m)).collect())
}

fn zsym(a: &[BigInt], m: &BigInt) -> ZPoly {
    let half = m / 2;
    ztrim(
        a.iter()
            .map(|c| {
                let r = c.mod_floor(m);
                if r > half {
                    r - m
                } else {
                    r
                }
            })
            .collect(),
    )
}

fn zmul(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    ztrim(out)
}

fn zadd(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    let n = a.len().max(b.len());
    let zero = BigInt::zero();
    ztrim(
        (0..n)
            .map(|k| a.get(k).unwrap_or(&zero) + b.get(k).unwrap_or(&zero))
            .collect(),
    )
}

fn zsub(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    let n = a.len().max(b.len());
    let zero = BigInt::zero();
    ztrim(
        (0..n)
            .map(|k| a.get(k).unwrap_or(&zero) - b.get(k).unwrap_or(&zero))
            .collect(),
    )
}

/// Division by a monic polynomial modulo `m`.
fn zdivrem_monic(a: &[BigInt], b: &[BigInt], m: &BigInt) -> (ZPoly, ZPoly) {
    let db = b.len() - 1;
    debug_assert!(b[db].is_one());
    let mut rem = zmod(a, m);
    if rem.len() <= db {
        return (Vec::new(), rem);
    }
    let mut quot = vec![BigInt::zero(); rem.len() - db];
    for k in (0..quot.len()).rev() {
        let c = rem[k + db].mod_floor(m);
        if c.is_zero() {
            continue;
        }
        for (j, d) in b.iter().enumerate() {
            rem[k + j] = (&rem[k + j] - &c * d).mod_floor(m);
        }
        quot[k] = c;
    }
    rem.truncate(db);
    (ztrim(quot), ztrim(rem))
}

fn to_modp(a: &[BigInt], p: u64) -> ModPoly {
    let pb = BigInt::from(p);
    let mut v: ModPoly = a.iter().map(|c| c.mod_floor(&pb).to_u64().unwrap()).collect();
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn from_modp(a: &ModPoly) -> ZPoly {
    a.iter().map(|&c| BigInt::from(c)).collect()
}

fn small_primes() -> impl Iterator<Item = u64> {
    (3u64..5000).filter(|&n| (2..).take_while(|d| d * d <= n).all(|d| n % d != 0))
}

/// Irreducible factors of a primitive square-free integer polynomial with
/// positive leading coefficient and nonzero constant term.
fn zassenhaus(f: &ZPoly) -> Vec<ZPoly> {
    let n = f.len() - 1;
    if n <= 1 {
        return vec![f.clone()];
    }
    let lc = f[n].clone();

    // pick the candidate prime with the fewest modular factors
    let mut best: Option<(u64, usize)> = None;
    let mut tried = 0;
    for p in small_primes() {
        if (&lc % BigInt::from(p)).is_zero() {
            continue;
        }
        let fp = modp::monic(&to_modp(f, p), p);
        if fp.len() != n + 1 || !modp::is_squarefree(&fp, p) {
            continue;
        }
        let count = modp::factor_count(&fp, p);
        if best.map_or(true, |(_, c)| count < c) {
            best = Some((p, count));
        }
        tried += 1;
        if count == 1 || tried >= 6 {
            break;
        }
    }
    let (p, count) = best.expect("some prime keeps a square-free polynomial square-free");
    if count == 1 {
        return vec![f.clone()];
    }
    let modular = modp::berlekamp(&modp::monic(&to_modp(f, p), p), p);

    // coefficient bound for factors times the leading coefficient
    let norm_sq: BigInt = f.iter().map(|c| c * c).sum();
    let norm = norm_sq.sqrt() + BigInt::one();
    let bound = BigInt::from(2) * lc.abs() * (BigInt::one() << n) * norm;
    let pb = BigInt::from(p);
    let mut k = 1u32;
    let mut modulus = pb.clone();
    while modulus <= bound {
        modulus *= &pb;
        k += 1;
    }
    let lifted = hensel_lift(f, &modular, p, k);
    recombine(f.clone(), lifted, &modulus)
}

/// Lifts `f = lc(f) * prod(factors) mod p` to the same identity mod `p^k`,
/// returning monic factors.
fn hensel_lift(f: &ZPoly, factors: &[ModPoly], p: u64, k: u32) -> Vec<ZPoly> {
    let pb = BigInt::from(p);
    let target = pb.pow(k);
    if factors.len() == 1 {
        let lc = f.last().unwrap();
        let inv = mod_inverse(lc, &target);
        return vec![zmod(&f.iter().map(|c| c * &inv).collect::<Vec<_>>(), &target)];
    }
    let (left, right) = factors.split_at(factors.len() / 2);
    let lc_p = f.last().unwrap().mod_floor(&pb).to_u64().unwrap();
    let g0 = left.iter().fold(vec![lc_p], |acc, u| modp::mul(&acc, u, p));
    let h0 = right.iter().fold(vec![1u64], |acc, u| modp::mul(&acc, u, p));
    let (s0, t0) = modp::xgcd(&g0, &h0, p);
    let (mut g, mut h, mut s, mut t) = (from_modp(&g0), from_modp(&h0), from_modp(&s0), from_modp(&t0));
    let mut m = pb.clone();
    while m < target {
        (g, h, s, t) = hensel_step(f, &g, &h, &s, &t, &m);
        m = &m * &m;
    }
    let g = zmod(&g, &target);
    let h = zmod(&h, &target);
    let mut out = hensel_lift(&g, left, p, k);
    out.extend(hensel_lift(&h, right, p, k));
    out
}

/// One quadratic Hensel step: from `f = g h mod m`, `s g + t h = 1 mod m`
/// to the same identities mod `m^2`; `h` stays monic.
fn hensel_step(f: &ZPoly, g: &ZPoly, h: &ZPoly, s: &ZPoly, t: &ZPoly, m: &BigInt) -> (ZPoly, ZPoly, ZPoly, ZPoly) {
    let m2 = m * m;
    let e = zmod(&zsub(f, &zmul(g, h)), &m2);
    let (q, r) = zdivrem_monic(&zmul(s, &e), h, &m2);
    let g1 = zmod(&zadd(&zadd(g, &zmul(t, &e)), &zmul(&q, g)), &m2);
    let h1 = zmod(&zadd(h, &r), &m2);
    let b = zmod(&zsub(&zadd(&zmul(s, &g1), &zmul(t, &h1)), &[BigInt::one()]), &m2);
    let (c, d) = zdivrem_monic(&zmul(s, &b), &h1, &m2);
    let s1 = zmod(&zsub(s, &d), &m2);
    let t1 = zmod(&zsub(&zsub(t, &zmul(t, &b)), &zmul(&c, &g1)), &m2);
    (g1, h1, s1, t1)
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.mod_floor(m).extended_gcd(m);
    debug_assert!(e.gcd.is_one());
    e.x.mod_floor(m)
}

fn primitive(a: &[BigInt]) -> ZPoly {
    let content = a.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    let mut out: ZPoly = a.iter().map(|c| c / &content).collect();
    if out.last().is_some_and(|c| c.sign() == Sign::Minus) {
        out.iter_mut().for_each(|c| *c = -c.clone());
    }
    out
}

fn zexact_div(a: &ZPoly, b: &ZPoly) -> Option<ZPoly> {
    let q = UniPoly::from_bigints(a).exact_div(&UniPoly::from_bigints(b))?;
    q.is_integral()
        .then(|| q.coeffs().iter().map(|c| c.to_integer()).collect())
}

fn recombine(mut f: ZPoly, mut lifted: Vec<ZPoly>, modulus: &BigInt) -> Vec<ZPoly> {
    let mut out = Vec::new();
    let mut size = 1;
    while 2 * size <= lifted.len() {
        let mut found = None;
        for subset in Combinations::new(lifted.len(), size) {
            let lc = f.last().unwrap().clone();
            let g = subset
                .iter()
                .fold(vec![lc], |acc, &i| zmod(&zmul(&acc, &lifted[i]), modulus));
            let candidate = primitive(&zsym(&g, modulus));
            if candidate.len() < 2 {
                continue;
            }
            if let Some(q) = zexact_div(&f, &candidate) {
                found = Some((subset, candidate, q));
                break;
            }
        }
        match found {
            Some((subset, candidate, q)) => {
                out.push(candidate);
                f = q;
                lifted = lifted
                    .into_iter()
                    .enumerate()
                    .filter(|(i, _)| !subset.contains(i))
                    .map(|(_, u)| u)
                    .collect();
            }
            None => size += 1,
        }
    }
    if f.len() > 1 {
        out.push(primitive(&f));
    }
    out
}

/// Lexicographic `k`-subsets of `0..n`.
pub(crate) struct Combinations {
    n: usize,
    current: Option<Vec<usize>>,
}

impl Combinations {
    pub(crate) fn new(n: usize, k: usize) -> Self {
        Self {
            n,
            current: (k <= n).then(|| (0..k).collect()),
        }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;
    fn next(&mut self) -> Option<Vec<usize>> {
        let cur = self.current.take()?;
        let out = cur.clone();
        let k = cur.len();
        let mut next = cur;
        let mut i = k;
        while i > 0 {
            i -= 1;
            if next[i] < self.n - k + i {
                next[i] += 1;
                for j in i + 1..k {
                    next[j] = next[j - 1] + 1;
                }
                self.current = Some(next);
                return Some(out);
            }
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> UniPoly {
        UniPoly::parse(s).unwrap()
    }

    fn factors(s: &str) -> Vec<(String, usize)> {
        factor_over_q(&p(s))
            .unwrap()
            .factors
            .into_iter()
            .map(|(f, m)| (f.to_string(), m))
            .collect()
    }

    #[test]
    fn trivial_split() {
        assert_eq!(
            factors("x^4 - 4x^2"),
            vec![("x - 2".into(), 1), ("x".into(), 2), ("x + 2".into(), 1)]
        );
    }

    #[test]
    fn cubic_times_linear() {
        let f = factor_over_q(&(p("x - 1") * p("x^3 - 3x - 1"))).unwrap();
        assert_eq!(f.factors.len(), 2);
        assert_eq!(f.factors[1].0, p("x^3 - 3x - 1"));
        assert!(is_irreducible(&p("x^3 - 3x - 1")));
    }

    #[test]
    fn wheel_polynomial() {
        assert_eq!(
            factors("x^3 - 8x - 8"),
            vec![("x + 2".into(), 1), ("x^2 - 2x - 4".into(), 1)]
        );
    }

    #[test]
    fn swinnerton_dyer_like_case() {
        // x^4 - 10x^2 + 1 is irreducible but splits modulo every prime
        assert!(is_irreducible(&p("x^4 - 10x^2 + 1")));
        let prod = p("x^4 - 10x^2 + 1") * p("x^2 - 2") * p("x^4 + 1");
        let f = factor_over_q(&prod).unwrap();
        assert_eq!(f.factors.len(), 3);
        assert_eq!(f.expand(), prod);
    }

    #[test]
    fn non_monic_and_rational() {
        let q = p("(3/2)x^2 - (3/2)");
        let f = factor_over_q(&q).unwrap();
        assert_eq!(f.unit, Rational::new(3.into(), 2.into()));
        assert_eq!(f.expand(), q);
        assert_eq!(factor_over_q(&UniPoly::zero()), Err(Error::ZeroPolynomial));
        let c = factor_over_q(&p("5")).unwrap();
        assert!(c.factors.is_empty());
    }

    #[test]
    fn multiplicities() {
        let q = p("x - 1").pow(3) * p("x^2 + 1").pow(2) * p("x + 3");
        let f = factor_over_q(&q).unwrap();
        assert_eq!(f.expand(), q);
        let mults: Vec<usize> = f.factors.iter().map(|x| x.1).collect();
        assert_eq!(mults, vec![3, 1, 2]);
    }

    #[test]
    fn perfect_squares() {
        assert!(is_perfect_square(&p("x^2")));
        assert!(is_perfect_square(&p("4x^2 + 4x + 1")));
        assert!(!is_perfect_square(&p("2")));
        assert!(!is_perfect_square(&p("x^2 - 1")));
    }

    #[test]
    fn combinations_enumerate_lexicographically() {
        let all: Vec<_> = Combinations::new(4, 2).collect();
        assert_eq!(all.len(), 6);
        assert_eq!(all[0], vec![0, 1]);
        assert_eq!(all[5], vec![2, 3]);
        assert_eq!(Combinations::new(3, 0).count(), 1);
        assert_eq!(Combinations::new(2, 3).count(), 0);
    }
}
