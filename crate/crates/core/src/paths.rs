//! Path polynomials, the PGST classification of unweighted paths, and
//! modified paths `P_N^(M,w)`.
//!
//! `P_N^(M,w)` has vertices `0..=N+1`: the path `1 - 2 - ... - N`, plus
//! vertex `0` joined to `M` and vertex `N+1` joined to `N+1-M`, both by
//! edges of weight `w`. Vertex labels equal internal indices.

use num_integer::Integer;
use num_traits::Zero;
use serde::Serialize;

use crate::algebra::{poly_gcd, rat, Rational, UniPoly, WeightPoly};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::involution::Involution;

/// `p_k`, the characteristic polynomial of the path on `k` vertices:
/// `p_0 = 1`, `p_1 = x`, `p_k = x p_(k-1) - p_(k-2)`.
pub fn path_poly(k: usize) -> UniPoly {
    let (mut prev, mut cur) = (UniPoly::zero(), UniPoly::one());
    for _ in 0..k {
        let next = &cur.shift(1) - &prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// `p_k` with `p_(-1) = 0`.
fn p(k: i64) -> UniPoly {
    if k < 0 {
        UniPoly::zero()
    } else {
        path_poly(k as usize)
    }
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// `(t, p)` with `n + 1 = 2^t p`, `p` odd.
fn two_adic(n: u64) -> (u32, u64) {
    let m = n + 1;
    let t = m.trailing_zeros();
    (t, m >> t)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum PathVerdict {
    Pgst,
    NoPgst,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "reason", rename_all = "snake_case")]
pub enum PathReason {
    /// `n = 2^t - 1`.
    PowerOfTwo { t: u32 },
    /// `n = p - 1`, `p` an odd prime.
    PrimeMinusOne { p: u64 },
    /// `n = 2^t p - 1`, `p` an odd prime, `a` a multiple of `2^(t-1)`.
    TwoPowerPrime { t: u32, p: u64 },
    /// `a + b != n + 1`.
    NotMirrorPair,
    /// `n = 2^t p - 1` with `p` an odd prime but `a` not a multiple of
    /// `2^(t-1)`.
    WrongOffset { t: u32, p: u64 },
    /// `n + 1` is neither a power of two, an odd prime, nor twice a power
    /// of two times an odd prime.
    NoClause,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PathClassification {
    pub n: usize,
    pub a: usize,
    pub b: usize,
    pub verdict: PathVerdict,
    pub reason: PathReason,
}

/// PGST between vertices `a` and `b` (1-indexed) of the path `P_n`.
pub fn classify_path(n: usize, a: usize, b: usize) -> Result<PathClassification> {
    for v in [a, b] {
        if v == 0 || v > n {
            return Err(Error::VertexOutOfRange(v, n));
        }
    }
    if a == b {
        return Err(Error::SameVertex(a));
    }
    let (verdict, reason) = if a + b != n + 1 {
        (PathVerdict::NoPgst, PathReason::NotMirrorPair)
    } else {
        let (t, odd) = two_adic(n as u64);
        if odd == 1 {
            (PathVerdict::Pgst, PathReason::PowerOfTwo { t })
        } else if t == 0 && is_prime(odd) {
            (PathVerdict::Pgst, PathReason::PrimeMinusOne { p: odd })
        } else if t >= 1 && is_prime(odd) {
            if (a as u64) % (1u64 << (t - 1)) == 0 {
                (PathVerdict::Pgst, PathReason::TwoPowerPrime { t, p: odd })
            } else {
                (PathVerdict::NoPgst, PathReason::WrongOffset { t, p: odd })
            }
        } else {
            (PathVerdict::NoPgst, PathReason::NoClause)
        }
    };
    Ok(PathClassification {
        n,
        a,
        b,
        verdict,
        reason,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Weight {
    Symbolic,
    Value(Rational),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModifiedPath {
    pub n: usize,
    pub m: usize,
    pub w: Weight,
    /// Set when the requested `M` was replaced by `N + 1 - M`.
    pub notice: Option<String>,
}

/// Maps `M` into `1 ..= N/2`. Swapping vertices `0` and `N+1` turns
/// `P_N^(M,w)` into `P_N^(N+1-M,w)` while fixing `1..=N`.
fn canonical_m(n: usize, m: usize) -> Result<(usize, Option<String>)> {
    if n < 2 || m == 0 || m > n {
        return Err(Error::Precondition(format!(
            "need N >= 2 and 1 <= M <= N, got N = {n}, M = {m}"
        )));
    }
    if 2 * m <= n {
        return Ok((m, None));
    }
    let c = n + 1 - m;
    if 2 * c > n {
        return Err(Error::Precondition(format!(
            "M = {m} attaches both pendant vertices to the middle of P_{n}"
        )));
    }
    Ok((c, Some(format!("M = {m} exceeds N/2; using the mirror image M = {c}"))))
}

pub fn build_modified_path(n: usize, m: usize, w: Weight) -> Result<ModifiedPath> {
    if let Weight::Value(v) = &w {
        if v.is_zero() {
            return Err(Error::Precondition("w must be nonzero".into()));
        }
    }
    let (m, notice) = canonical_m(n, m)?;
    Ok(ModifiedPath { n, m, w, notice })
}

impl ModifiedPath {
    pub fn vertex_count(&self) -> usize {
        self.n + 2
    }

    /// The graph at a rational weight; fails for a symbolic weight.
    pub fn graph(&self) -> Result<Graph> {
        let Weight::Value(w) = &self.w else {
            return Err(Error::Precondition("w is symbolic; specialize it first".into()));
        };
        self.graph_at(w)
    }

    pub fn graph_at(&self, w: &Rational) -> Result<Graph> {
        let n = self.n;
        let mut g = Graph::new(n + 2);
        for i in 1..n {
            g.add_edge(i, i + 1, rat(1))?;
        }
        g.add_edge(0, self.m, w.clone())?;
        g.add_edge(n + 1, n + 1 - self.m, w.clone())?;
        Ok(g)
    }

    /// `x -> N + 1 - x`.
    pub fn involution(&self) -> Involution {
        Involution::new((0..self.n + 2).rev().collect()).expect("reversal is an involution")
    }

    /// Both symbolic edges, lower endpoint first.
    pub fn weighted_edges(&self) -> [(usize, usize); 2] {
        [(0, self.m), (self.n + 1 - self.m, self.n + 1)]
    }
}

/// Closed forms of `Pi+`, `Pi-` for `x -> N + 1 - x` on `P_N^(M,w)`.
pub fn modified_path_quotients(n: usize, m: usize) -> Result<(WeightPoly, WeightPoly)> {
    if n < 2 || m == 0 || 2 * m > n {
        return Err(Error::Precondition(format!(
            "need N >= 2 and 1 <= M <= N/2, got N = {n}, M = {m}"
        )));
    }
    let (h, mi) = ((n / 2) as i64, m as i64);
    let x = UniPoly::x();
    // Pi = x a - w^2 p_(M-1) b
    let build = |a: UniPoly, b: UniPoly| -> WeightPoly {
        let c = &p(mi - 1) * &b;
        WeightPoly::from_w_parts(&[&x * &a, UniPoly::zero(), -c])
    };
    Ok(if n % 2 == 0 {
        (
            build(&p(h) - &p(h - 1), &p(h - mi) - &p(h - mi - 1)),
            build(&p(h) + &p(h - 1), &p(h - mi) + &p(h - mi - 1)),
        )
    } else {
        (
            build(&p(h + 1) - &p(h - 1), &p(h - mi + 1) - &p(h - mi - 1)),
            build(p(h), p(h - mi)),
        )
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ModifiedVerdict {
    Pgst,
    NoPgst,
    Undecided,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "clause", rename_all = "snake_case")]
pub enum ModifiedClause {
    /// `M` odd, `N` even, `gcd(N + 1, M) = 1`.
    CoprimeOdd,
    /// `M` even.
    EvenM,
    /// `M` odd, `N = 2 mod 4`, and `q | gcd(N + 1, M)` with `q = 3 mod 4`.
    PrimeThreeModFour { q: u64 },
    /// None of the clauses applies.
    Open,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ModifiedPathClassification {
    pub n: usize,
    pub m: usize,
    pub verdict: ModifiedVerdict,
    pub clause: ModifiedClause,
    pub notice: Option<String>,
}

/// PGST between vertices `1` and `N` of `P_N^(M,w)` for transcendental
/// `w`. `M` is first mapped into `1 ..= N/2`.
pub fn classify_modified_path(n: usize, m: usize) -> Result<ModifiedPathClassification> {
    let (m, notice) = canonical_m(n, m)?;
    let g = (n as u64 + 1).gcd(&(m as u64));
    let (verdict, clause) = if m % 2 == 1 && n % 2 == 0 && g == 1 {
        (ModifiedVerdict::Pgst, ModifiedClause::CoprimeOdd)
    } else if m % 2 == 0 {
        (ModifiedVerdict::NoPgst, ModifiedClause::EvenM)
    } else if let Some(q) = (n % 4 == 2)
        .then(|| (3..=g).find(|&q| g % q == 0 && is_prime(q) && q % 4 == 3))
        .flatten()
    {
        (ModifiedVerdict::NoPgst, ModifiedClause::PrimeThreeModFour { q })
    } else {
        (ModifiedVerdict::Undecided, ModifiedClause::Open)
    };
    Ok(ModifiedPathClassification {
        n,
        m,
        verdict,
        clause,
        notice,
    })
}

/// Kernel vectors of `P_N^(M,w0)` for even `M` showing that `1` and `N`
/// are not strongly cospectral.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvenWitness {
    /// Entries on vertices `0..=M`.
    pub z: Vec<Rational>,
    /// `[z 0 y]` and `[z 0 -y]` with `y` the reversal of `z`.
    pub w_plus: Vec<Rational>,
    pub w_minus: Vec<Rational>,
    /// `A w+ = 0` and `A w- = 0` exactly.
    pub in_kernel: bool,
    /// Both vectors are nonzero at vertex 1, with `w+(1) = w+(N)` and
    /// `w-(1) = -w-(N)`; no eigenspace projection can then satisfy
    /// `E e_1 = E e_N` or `E e_1 = -E e_N`.
    pub breaks_strong_cospectrality: bool,
}

pub fn even_m_witness(n: usize, m: usize, w0: &Rational) -> Result<EvenWitness> {
    if m == 0 || m % 2 == 1 {
        return Err(Error::Precondition(format!("M = {m} must be even and positive")));
    }
    if 2 * m > n {
        return Err(Error::Precondition(format!("M = {m} exceeds N/2 = {}", n / 2)));
    }
    if w0.is_zero() {
        return Err(Error::Precondition("w must be nonzero".into()));
    }
    let z: Vec<Rational> = (0..=m)
        .map(|j| match j {
            0 if (m / 2) % 2 == 0 => w0.recip(),
            0 => -w0.recip(),
            j if j < m && j % 4 == 1 => rat(1),
            j if j < m && j % 4 == 3 => rat(-1),
            _ => Rational::zero(),
        })
        .collect();
    let len = n + 2;
    let mut w_plus = vec![Rational::zero(); len];
    let mut w_minus = vec![Rational::zero(); len];
    for (j, v) in z.iter().enumerate() {
        w_plus[j] = v.clone();
        w_minus[j] = v.clone();
        w_plus[len - 1 - j] = v.clone();
        w_minus[len - 1 - j] = -v.clone();
    }
    let graph = build_modified_path(n, m, Weight::Value(w0.clone()))?.graph()?;
    let a = graph.adjacency();
    let in_kernel = a.mul_vec(&w_plus)?.iter().all(Zero::is_zero) && a.mul_vec(&w_minus)?.iter().all(Zero::is_zero);
    let breaks_strong_cospectrality = in_kernel
        && !w_plus[1].is_zero()
        && w_plus[1] == w_plus[n]
        && !w_minus[1].is_zero()
        && w_minus[1] == -w_minus[n].clone();
    Ok(EvenWitness {
        z,
        w_plus,
        w_minus,
        in_kernel,
        breaks_strong_cospectrality,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootIdentityReport {
    pub k: usize,
    pub l: usize,
    /// `(p_k - p_(k-1)) | p_(2k)` and `(p_k + p_(k-1)) | p_(2k)`.
    pub minus_divides: bool,
    pub plus_divides: bool,
    /// `gcd(p_k, p_l)`; nonconstant iff `gcd(k + 1, l + 1) > 1`.
    pub common_factor: UniPoly,
    pub index_gcd: usize,
    pub common_root_law_holds: bool,
}

pub fn path_root_identities(k: usize, l: usize) -> Result<RootIdentityReport> {
    if k == 0 || l == 0 {
        return Err(Error::Precondition("k and l must be at least 1".into()));
    }
    let big = path_poly(2 * k);
    let minus_divides = (&path_poly(k) - &path_poly(k - 1)).divides(&big);
    let plus_divides = (&path_poly(k) + &path_poly(k - 1)).divides(&big);
    let common_factor = poly_gcd(&path_poly(k), &path_poly(l))?;
    let index_gcd = (k + 1).gcd(&(l + 1));
    Ok(RootIdentityReport {
        k,
        l,
        minus_divides,
        plus_divides,
        common_root_law_holds: (common_factor.deg() > 0) == (index_gcd > 1),
        common_factor,
        index_gcd,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::frac;
    use crate::graph::families::path;
    use crate::involution::{find_involutions, quotient_pair};

    fn poly(s: &str) -> UniPoly {
        UniPoly::parse(s).unwrap()
    }

    #[test]
    fn path_polynomials() {
        assert_eq!(path_poly(1), poly("x"));
        assert_eq!(path_poly(2), poly("x^2 - 1"));
        assert_eq!(path_poly(6), poly("x^3 - x^2 - 2x + 1") * poly("x^3 + x^2 - 2x - 1"));
        assert_eq!(path_poly(7), path(7).adjacency().char_poly());
    }

    #[test]
    fn path_classification_examples() {
        assert_eq!(classify_path(8, 1, 8).unwrap().verdict, PathVerdict::NoPgst);
        let c = classify_path(4, 1, 4).unwrap();
        assert_eq!(
            (c.verdict, c.reason),
            (PathVerdict::Pgst, PathReason::PrimeMinusOne { p: 5 })
        );
        let c = classify_path(11, 2, 10).unwrap();
        assert_eq!(c.reason, PathReason::TwoPowerPrime { t: 2, p: 3 });
        assert_eq!(
            classify_path(11, 1, 11).unwrap().reason,
            PathReason::WrongOffset { t: 2, p: 3 }
        );
        assert_eq!(classify_path(7, 1, 7).unwrap().reason, PathReason::PowerOfTwo { t: 3 });
        assert_eq!(classify_path(5, 1, 4).unwrap().reason, PathReason::NotMirrorPair);
        assert!(classify_path(4, 0, 4).is_err());
        assert!(classify_path(5, 3, 3).is_err());
    }

    #[test]
    fn modified_path_graphs() {
        let mp = build_modified_path(2, 1, Weight::Value(rat(1))).unwrap();
        let g = mp.graph().unwrap();
        // relabelling 0,1,2,3 as a path 0-1-2-3
        assert_eq!(g.adjacency().char_poly(), path(4).adjacency().char_poly());
        let mp = build_modified_path(14, 3, Weight::Value(frac(5, 2))).unwrap();
        let g = mp.graph().unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (16, 15));
        assert!(find_involutions(&g).contains(&mp.involution()));
        let sym = build_modified_path(4, 1, Weight::Symbolic).unwrap();
        assert_eq!(sym.vertex_count(), 6);
        assert!(sym.graph().is_err());
        let mirrored = build_modified_path(6, 4, Weight::Symbolic).unwrap();
        assert_eq!(mirrored.m, 3);
        assert!(mirrored.notice.is_some());
        assert!(build_modified_path(5, 3, Weight::Symbolic).is_err());
        assert!(build_modified_path(4, 1, Weight::Value(rat(0))).is_err());
    }

    #[test]
    fn quotient_formulas_match_direct_computation() {
        let (plus, minus) = modified_path_quotients(2, 1).unwrap();
        assert_eq!(plus.specialize(&rat(1)), poly("x^2 - x - 1"));
        assert_eq!(minus.specialize(&rat(1)), poly("x^2 + x - 1"));
        assert_eq!(minus.specialize(&rat(0)), poly("x^2 + x"));
        for (n, m) in [(4, 1), (5, 2), (7, 3), (8, 4), (9, 1)] {
            let (plus_n, minus_n) = modified_path_quotients(n, m).unwrap();
            let w = frac(2, 3);
            let mp = build_modified_path(n, m, Weight::Value(w.clone())).unwrap();
            let q = quotient_pair(&mp.graph().unwrap(), &mp.involution()).unwrap();
            assert_eq!(plus_n.specialize(&w), q.pi_plus, "N = {n}, M = {m}");
            assert_eq!(minus_n.specialize(&w), q.pi_minus, "N = {n}, M = {m}");
        }
    }

    #[test]
    fn modified_classification_examples() {
        let v = |n, m| classify_modified_path(n, m).unwrap();
        assert_eq!(v(4, 1).verdict, ModifiedVerdict::Pgst);
        assert_eq!(v(6, 2).clause, ModifiedClause::EvenM);
        assert_eq!(v(14, 3).clause, ModifiedClause::PrimeThreeModFour { q: 3 });
        assert_eq!(v(5, 1).verdict, ModifiedVerdict::Undecided);
        assert_eq!(v(8, 4).verdict, ModifiedVerdict::NoPgst);
    }

    #[test]
    fn even_witnesses() {
        let w = even_m_witness(4, 2, &rat(1)).unwrap();
        assert_eq!(w.z, vec![rat(-1), rat(1), rat(0)]);
        assert!(w.in_kernel && w.breaks_strong_cospectrality);
        let w = even_m_witness(8, 2, &rat(3)).unwrap();
        assert_eq!(w.z[0], frac(-1, 3));
        assert!(w.in_kernel);
        let w = even_m_witness(12, 4, &frac(-7, 5)).unwrap();
        assert!(w.in_kernel && w.breaks_strong_cospectrality);
        assert!(even_m_witness(6, 4, &rat(1)).is_err());
        assert!(even_m_witness(6, 3, &rat(1)).is_err());
    }

    #[test]
    fn root_identities() {
        let r = path_root_identities(3, 3).unwrap();
        assert!(r.minus_divides && r.plus_divides);
        let r = path_root_identities(5, 3).unwrap();
        assert_eq!(r.index_gcd, 2);
        assert_eq!(r.common_factor, poly("x"));
        assert!(r.common_root_law_holds);
        let r = path_root_identities(4, 2).unwrap();
        assert!(r.common_factor.is_one() && r.common_root_law_holds);
    }
}
