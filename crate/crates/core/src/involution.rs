//! Weight-preserving involutions and the quotient factorization of the
//! characteristic polynomial they induce.
//!
//! For an involution `sigma` with fixed set `S` and a half `G'` holding one
//! vertex of every swapped pair, the adjacency matrix splits into blocks
//! `A'` (on `G'`), `A_sigma` (between `G'` and `sigma G'`), `A_delta`
//! (between `G'` and `S`) and `A_S`. Then
//! `A+ = [[A' + A_sigma, A_delta], [2 A_delta^T, A_S]]`, `A- = A' - A_sigma`
//! and `char(A) = char(A+) char(A-)`.

use serde::Serialize;

use crate::algebra::{is_perfect_square, poly_gcd, rat, Rational, RationalMatrix, UniPoly, WeightPoly};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// An order-two vertex permutation. `half` is the lowest vertex of each
/// swapped pair, ascending; `fixed` is ascending.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Involution {
    perm: Vec<usize>,
    fixed: Vec<usize>,
    half: Vec<usize>,
}

impl Involution {
    pub fn new(perm: Vec<usize>) -> Result<Self> {
        let n = perm.len();
        for (v, &u) in perm.iter().enumerate() {
            if u >= n || perm[u] != v {
                return Err(Error::InvalidInvolution(format!(
                    "{perm:?} does not square to the identity"
                )));
            }
        }
        let fixed: Vec<usize> = (0..n).filter(|&v| perm[v] == v).collect();
        if fixed.len() == n {
            return Err(Error::InvalidInvolution("identity permutation".into()));
        }
        let half = (0..n).filter(|&v| perm[v] > v).collect();
        Ok(Self { perm, fixed, half })
    }

    /// The involution on `0..n` swapping each listed pair.
    pub fn from_swaps(n: usize, swaps: &[(usize, usize)]) -> Result<Self> {
        let mut perm: Vec<usize> = (0..n).collect();
        for &(a, b) in swaps {
            if a >= n || b >= n || a == b || perm[a] != a || perm[b] != b {
                return Err(Error::InvalidInvolution(format!("bad swap ({a}, {b})")));
            }
            perm[a] = b;
            perm[b] = a;
        }
        Self::new(perm)
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn image(&self, v: usize) -> usize {
        self.perm[v]
    }

    pub fn fixed(&self) -> &[usize] {
        &self.fixed
    }

    pub fn half(&self) -> &[usize] {
        &self.half
    }

    /// `(a, sigma a)` for `a` in the half, in order.
    pub fn swaps(&self) -> Vec<(usize, usize)> {
        self.half.iter().map(|&a| (a, self.perm[a])).collect()
    }

    pub fn preserves(&self, g: &Graph) -> bool {
        g.vertex_count() == self.perm.len()
            && g.edges().all(|(u, v, w)| g.weight(self.perm[u], self.perm[v]) == *w)
            && g.loops().all(|(v, w)| g.weight(self.perm[v], self.perm[v]) == *w)
    }
}

type Signature = (usize, Vec<Rational>, Rational);

fn signature(g: &Graph, v: usize) -> Signature {
    let mut ws: Vec<Rational> = g.neighbors(v).into_iter().map(|u| g.weight(u, v)).collect();
    ws.sort();
    (g.degree(v), ws, g.weight(v, v))
}

/// All weight-preserving automorphisms of order exactly two. Vertices are
/// assigned in increasing order, trying "fixed" before swaps with larger
/// vertices in increasing order, which fixes the output order.
pub fn find_involutions(g: &Graph) -> Vec<Involution> {
    let n = g.vertex_count();
    let sig: Vec<Signature> = (0..n).map(|v| signature(g, v)).collect();
    let mut perm: Vec<Option<usize>> = vec![None; n];
    let mut out = Vec::new();
    backtrack(g, &sig, &mut perm, 0, &mut out);
    out
}

fn consistent(g: &Graph, perm: &[Option<usize>], v: usize, u: usize) -> bool {
    perm.iter().enumerate().all(|(a, img)| match img {
        Some(b) => g.weight(v, a) == g.weight(u, *b) && g.weight(u, a) == g.weight(v, *b),
        None => true,
    })
}

fn backtrack(g: &Graph, sig: &[Signature], perm: &mut Vec<Option<usize>>, v: usize, out: &mut Vec<Involution>) {
    let n = perm.len();
    if v == n {
        let p: Vec<usize> = perm.iter().map(|x| x.unwrap()).collect();
        if let Ok(inv) = Involution::new(p) {
            out.push(inv);
        }
        return;
    }
    if perm[v].is_some() {
        backtrack(g, sig, perm, v + 1, out);
        return;
    }
    for u in v..n {
        if perm[u].is_some() || sig[u] != sig[v] {
            continue;
        }
        if !consistent(g, perm, v, u) {
            continue;
        }
        if u != v && g.weight(v, u) != g.weight(u, v) {
            continue;
        }
        perm[v] = Some(u);
        perm[u] = Some(v);
        backtrack(g, sig, perm, v + 1, out);
        perm[v] = None;
        perm[u] = None;
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientPair {
    pub a_plus: RationalMatrix,
    pub a_minus: RationalMatrix,
    pub pi_plus: UniPoly,
    pub pi_minus: UniPoly,
}

/// `(A+, A-)` for a matrix symmetric under `sigma`; rows of `A+` are
/// ordered `G'` then `S`.
pub fn quotient_matrices(a: &RationalMatrix, sigma: &Involution) -> Result<(RationalMatrix, RationalMatrix)> {
    let n = a.dim();
    if sigma.perm.len() != n {
        return Err(Error::Dimension {
            expected: n,
            actual: sigma.perm.len(),
        });
    }
    for i in 0..n {
        for j in 0..n {
            if a[(i, j)] != a[(sigma.perm[i], sigma.perm[j])] {
                return Err(Error::InvalidInvolution(format!(
                    "entry ({i}, {j}) is not preserved by the involution"
                )));
            }
        }
    }
    let h = &sigma.half;
    let s = &sigma.fixed;
    let k = h.len();
    let a_plus = RationalMatrix::from_fn(k + s.len(), |i, j| match (i < k, j < k) {
        (true, true) => &a[(h[i], h[j])] + &a[(h[i], sigma.perm[h[j]])],
        (true, false) => a[(h[i], s[j - k])].clone(),
        (false, true) => &a[(s[i - k], h[j])] * rat(2),
        (false, false) => a[(s[i - k], s[j - k])].clone(),
    });
    let a_minus = RationalMatrix::from_fn(k, |i, j| &a[(h[i], h[j])] - &a[(h[i], sigma.perm[h[j]])]);
    Ok((a_plus, a_minus))
}

pub fn quotient_pair(g: &Graph, sigma: &Involution) -> Result<QuotientPair> {
    if !sigma.preserves(g) {
        return Err(Error::InvalidInvolution(
            "involution does not preserve the weights".into(),
        ));
    }
    let (a_plus, a_minus) = quotient_matrices(&g.adjacency(), sigma)?;
    Ok(QuotientPair {
        pi_plus: a_plus.char_poly(),
        pi_minus: a_minus.char_poly(),
        a_plus,
        a_minus,
    })
}

/// `Pi = g (p - w^2 q)` with `gcd(p, q) = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeFactorParts {
    pub g: UniPoly,
    pub p: UniPoly,
    pub q: UniPoly,
    /// Both `p` and `q` are squares, so `p - w^2 q` splits over `Q(w)`.
    pub perfect_squares: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EdgeDecomposition {
    Quadratic {
        plus: EdgeFactorParts,
        minus: EdgeFactorParts,
    },
    /// `Pi+` or `Pi-` has a term linear in `w`, as when the symbolic edge
    /// joins a vertex to its own image; the product `Pi+ Pi-` is split
    /// instead.
    Linear { product: EdgeFactorParts },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedEdgeDecomposition {
    pub pi_plus: WeightPoly,
    pub pi_minus: WeightPoly,
    pub decomposition: EdgeDecomposition,
}

/// Quotient polynomials as polynomials in the weight `w` of `edge` and its
/// mirror image; every other weight keeps its value from `g`.
pub fn symbolic_quotients(g: &Graph, sigma: &Involution, edge: (usize, usize)) -> Result<(WeightPoly, WeightPoly)> {
    let (u, v) = edge;
    if !g.has_edge(u, v) {
        return Err(Error::Precondition(format!("({u}, {v}) is not an edge")));
    }
    if !sigma.preserves(g) {
        return Err(Error::InvalidInvolution(
            "involution does not preserve the weights".into(),
        ));
    }
    let at = |w0: &Rational| -> Result<(UniPoly, UniPoly)> {
        let mut a = g.adjacency();
        let (su, sv) = (sigma.image(u), sigma.image(v));
        for (i, j) in [(u, v), (v, u), (su, sv), (sv, su)] {
            a[(i, j)] = w0.clone();
        }
        let (ap, am) = quotient_matrices(&a, sigma)?;
        Ok((ap.char_poly(), am.char_poly()))
    };
    // entries are linear in w and w sits in at most two positions of each
    // quotient, so both determinants have w-degree at most 2
    let points: Vec<(UniPoly, UniPoly)> = [-1, 0, 1, 2].iter().map(|&k| at(&rat(k))).collect::<Result<_>>()?;
    let interpolate = |vals: [&UniPoly; 3], check: &UniPoly| -> Result<WeightPoly> {
        let [m1, z, p1] = vals;
        let half = Rational::new(1.into(), 2.into());
        let c1 = (p1 - m1).scale(&half);
        let c2 = &(p1 + m1).scale(&half) - z;
        let w = WeightPoly::from_w_parts(&[z.clone(), c1, c2]);
        if w.specialize(&rat(2)) != *check {
            return Err(Error::Precondition("quotient is not quadratic in w".into()));
        }
        Ok(w)
    };
    let plus = interpolate([&points[0].0, &points[1].0, &points[2].0], &points[3].0)?;
    let minus = interpolate([&points[0].1, &points[1].1, &points[2].1], &points[3].1)?;
    Ok((plus, minus))
}

fn split(pi: &WeightPoly) -> Result<EdgeFactorParts> {
    let c0 = pi.w_part(0);
    let c2 = pi.w_part(2);
    let g = poly_gcd(&c0, &c2)?;
    let p = c0.exact_div(&g).expect("gcd divides");
    let q = (-c2).exact_div(&g).expect("gcd divides");
    debug_assert!(poly_gcd(&p, &q)?.is_one() || q.is_zero());
    Ok(EdgeFactorParts {
        perfect_squares: is_perfect_square(&p) && (q.is_zero() || is_perfect_square(&q)),
        g,
        p,
        q,
    })
}

/// Splits `Pi+-` as `g (p - w^2 q)` when the weight of `edge` (and of its
/// mirror) is made symbolic.
pub fn weighted_edge_decomposition(
    g: &Graph,
    sigma: &Involution,
    edge: (usize, usize),
) -> Result<WeightedEdgeDecomposition> {
    let (pi_plus, pi_minus) = symbolic_quotients(g, sigma, edge)?;
    let linear = !pi_plus.w_part(1).is_zero() || !pi_minus.w_part(1).is_zero();
    let decomposition = if linear {
        let product = &pi_plus * &pi_minus;
        if (0..=product.w_degree().unwrap_or(0)).any(|k| k != 0 && k != 2 && !product.w_part(k).is_zero()) {
            return Err(Error::Precondition("Pi+ Pi- is not of the form p - w^2 q".into()));
        }
        EdgeDecomposition::Linear {
            product: split(&product)?,
        }
    } else {
        EdgeDecomposition::Quadratic {
            plus: split(&pi_plus)?,
            minus: split(&pi_minus)?,
        }
    };
    Ok(WeightedEdgeDecomposition {
        pi_plus,
        pi_minus,
        decomposition,
    })
}

impl EdgeFactorParts {
    /// `g (p - w^2 q)` at a rational weight.
    pub fn specialize(&self, w0: &Rational) -> UniPoly {
        &self.g * &(&self.p - &self.q.scale(&(w0 * w0)))
    }
}

/// `Pi+ Pi- = char(A)`.
pub fn check_factorization(g: &Graph, pair: &QuotientPair) -> bool {
    &pair.pi_plus * &pair.pi_minus == g.adjacency().char_poly()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    fn p(s: &str) -> UniPoly {
        UniPoly::parse(s).unwrap()
    }

    #[test]
    fn counts_match_brute_force() {
        assert_eq!(find_involutions(&complete(3)).len(), 3);
        assert_eq!(find_involutions(&path(3)).len(), 1);
        // Aut(C4) is dihedral of order 8 with five involutions
        assert_eq!(find_involutions(&complete_bipartite(2, 2)).len(), 5);
    }

    #[test]
    fn k3_quotient() {
        let s = Involution::from_swaps(3, &[(0, 1)]).unwrap();
        let q = quotient_pair(&complete(3), &s).unwrap();
        assert_eq!(q.a_plus, RationalMatrix::from_i64(&[&[1, 1], &[2, 0]]).unwrap());
        assert_eq!(q.pi_minus, p("x + 1"));
        assert_eq!(q.pi_plus, p("x^2 - x - 2"));
    }

    #[test]
    fn k22_quotients() {
        // parts {0, 1} and {2, 3}
        let g = complete_bipartite(2, 2);
        let both = Involution::from_swaps(4, &[(0, 1), (2, 3)]).unwrap();
        let q = quotient_pair(&g, &both).unwrap();
        assert_eq!((q.pi_plus, q.pi_minus), (p("x^2 - 4"), p("x^2")));
        let one = Involution::from_swaps(4, &[(0, 1)]).unwrap();
        let q = quotient_pair(&g, &one).unwrap();
        assert_eq!((q.pi_plus, q.pi_minus), (p("x^3 - 4x"), p("x")));
    }

    #[test]
    fn rejects_non_automorphisms() {
        let s = Involution::from_swaps(3, &[(0, 1)]).unwrap();
        assert!(quotient_pair(&path(3), &s).is_err());
        assert!(Involution::new(vec![1, 2, 0]).is_err());
        assert!(Involution::new(vec![0, 1]).is_err());
    }

    #[test]
    fn p2_decomposition_is_linear() {
        let s = Involution::from_swaps(2, &[(0, 1)]).unwrap();
        let d = weighted_edge_decomposition(&path(2), &s, (0, 1)).unwrap();
        assert_eq!(d.pi_plus.to_string(), "-w + (x)");
        assert_eq!(d.pi_minus.to_string(), "w + (x)");
        let EdgeDecomposition::Linear { product } = d.decomposition else {
            panic!("expected the linear branch");
        };
        assert_eq!((product.p, product.q), (p("x^2"), p("1")));
        assert!(product.perfect_squares);
    }

    #[test]
    fn untouched_component_lands_in_g() {
        // e = 0-1 inside G' = {0, 1}; vertex 4 is fixed with a loop
        let mut g = Graph::new(5);
        g.add_edge(0, 1, rat(3)).unwrap();
        g.add_edge(2, 3, rat(3)).unwrap();
        g.add_loop(4, rat(1)).unwrap();
        let s = Involution::from_swaps(5, &[(0, 2), (1, 3)]).unwrap();
        let d = weighted_edge_decomposition(&g, &s, (0, 1)).unwrap();
        let EdgeDecomposition::Quadratic { plus, minus } = d.decomposition else {
            panic!("expected the quadratic branch");
        };
        assert_eq!(plus.g, p("x - 1"));
        assert_eq!((plus.p, plus.q), (p("x^2"), p("1")));
        assert_eq!(minus.g, UniPoly::one());
        assert!(plus.perfect_squares);
    }
}
