//! Characteristic polynomials, minimal polynomials relative to a vector and
//! the (strong) cospectrality tests.
//!
//! Everything here is exact. Strong cospectrality is decided without
//! eigenvectors: `x` and `y` are cospectral when `G\x` and `G\y` share a
//! characteristic polynomial, and parallel when every eigenspace sees
//! `e_x` and `e_y` in a space of rank at most one, which is the same as the
//! joint Krylov space of `e_x + e_y` and `e_x - e_y` having dimension
//! `deg lcm(P+, P-)`.

use std::sync::OnceLock;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::algebra::matrix::rank;
use crate::algebra::rational::bit_size;
use crate::algebra::{poly_gcd, Rational, RationalMatrix, UniPoly};
use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn char_poly(a: &RationalMatrix) -> UniPoly {
    a.char_poly()
}

/// Least-degree monic `rho` with `rho(A) z = 0`.
pub fn min_poly_relative(a: &RationalMatrix, z: &[Rational]) -> Result<UniPoly> {
    Ok(krylov(a, z)?.0)
}

/// Relative minimal polynomial together with the Krylov vectors
/// `z, Az, ..., A^(d-1) z`.
fn krylov(a: &RationalMatrix, z: &[Rational]) -> Result<(UniPoly, Vec<Vec<Rational>>)> {
    if z.len() != a.dim() {
        return Err(Error::Dimension {
            expected: a.dim(),
            actual: z.len(),
        });
    }
    if z.iter().all(Zero::is_zero) {
        return Err(Error::ZeroVector);
    }
    // echelon rows: (pivot column, vector, polynomial that produced it)
    let mut basis: Vec<(usize, Vec<Rational>, UniPoly)> = Vec::new();
    let mut powers = Vec::new();
    let mut vec = z.to_vec();
    let mut poly = UniPoly::one();
    let mut raw = z.to_vec();
    loop {
        for (pc, bv, bp) in &basis {
            if vec[*pc].is_zero() {
                continue;
            }
            let f = &vec[*pc] / &bv[*pc];
            for (v, b) in vec.iter_mut().zip(bv) {
                if !b.is_zero() {
                    *v -= &f * b;
                }
            }
            poly = &poly - &bp.scale(&f);
        }
        let pivot = (0..vec.len())
            .filter(|&i| !vec[i].is_zero())
            .min_by_key(|&i| bit_size(&vec[i]));
        let Some(pc) = pivot else {
            return Ok((poly, powers));
        };
        powers.push(raw);
        let next = a.mul_vec(&vec)?;
        raw = a.mul_vec(powers.last().unwrap())?;
        let next_poly = poly.shift(1);
        basis.push((pc, vec, poly));
        vec = next;
        poly = next_poly;
    }
}

fn pair_vector(n: usize, x: usize, y: usize, sign: i64) -> Vec<Rational> {
    let mut z = vec![Rational::zero(); n];
    z[x] = Rational::one();
    z[y] = Rational::from_integer(sign.into());
    z
}

/// Minimal polynomials of `A` relative to `e_x + e_y` and `e_x - e_y`, and
/// the cofactor `P0 = phi / (P+ P-)` when the vertices are cospectral.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelativeMinPolyPair {
    pub plus: UniPoly,
    pub minus: UniPoly,
    pub zero: Option<UniPoly>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CospectralityWitness {
    /// `gcd(P+, P-)`: its roots are eigenvalues where the projections of
    /// `e_x` and `e_y` are not `±` each other.
    SharedRoots { gcd: String },
    /// Differing characteristic polynomials of `G\x` and `G\y`.
    DeletedPolynomials { without_x: String, without_y: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CospectralityReport {
    pub cospectral: bool,
    pub parallel: bool,
    pub strongly_cospectral: bool,
    pub witness: Option<CospectralityWitness>,
}

/// Caches the characteristic polynomial of a graph and of each
/// vertex-deleted subgraph, so many pairs of one graph can be examined
/// cheaply.
pub struct SpectralContext<'g> {
    graph: &'g Graph,
    adjacency: RationalMatrix,
    char_poly: OnceLock<UniPoly>,
    deleted: Vec<OnceLock<UniPoly>>,
}

impl<'g> SpectralContext<'g> {
    pub fn new(graph: &'g Graph) -> Self {
        Self {
            graph,
            adjacency: graph.adjacency(),
            char_poly: OnceLock::new(),
            deleted: (0..graph.vertex_count()).map(|_| OnceLock::new()).collect(),
        }
    }

    pub fn graph(&self) -> &Graph {
        self.graph
    }

    pub fn adjacency(&self) -> &RationalMatrix {
        &self.adjacency
    }

    pub fn char_poly(&self) -> &UniPoly {
        self.char_poly.get_or_init(|| self.adjacency.char_poly())
    }

    pub fn deleted_char_poly(&self, v: usize) -> Result<&UniPoly> {
        self.graph.check_vertex(v)?;
        Ok(self.deleted[v].get_or_init(|| self.adjacency.delete(v).char_poly()))
    }

    fn check_pair(&self, x: usize, y: usize) -> Result<()> {
        self.graph.check_vertex(x)?;
        self.graph.check_vertex(y)?;
        if x == y {
            return Err(Error::SameVertex(x));
        }
        Ok(())
    }

    pub fn is_cospectral(&self, x: usize, y: usize) -> Result<bool> {
        self.check_pair(x, y)?;
        Ok(self.deleted_char_poly(x)? == self.deleted_char_poly(y)?)
    }

    pub fn relative_pair(&self, x: usize, y: usize) -> Result<RelativeMinPolyPair> {
        Ok(self.pair_and_report(x, y)?.0)
    }

    pub fn strong_cospectrality(&self, x: usize, y: usize) -> Result<CospectralityReport> {
        Ok(self.pair_and_report(x, y)?.1)
    }

    /// Both results of one Krylov pass.
    pub fn pair_and_report(&self, x: usize, y: usize) -> Result<(RelativeMinPolyPair, CospectralityReport)> {
        self.check_pair(x, y)?;
        let n = self.graph.vertex_count();
        let (plus, plus_vecs) = krylov(&self.adjacency, &pair_vector(n, x, y, 1))?;
        let (minus, minus_vecs) = krylov(&self.adjacency, &pair_vector(n, x, y, -1))?;
        let cospectral = self.is_cospectral(x, y)?;
        let shared = poly_gcd(&plus, &minus)?;

        let lcm_degree = plus.deg() + minus.deg() - shared.deg();
        let joint: Vec<Vec<Rational>> = plus_vecs.into_iter().chain(minus_vecs).collect();
        let parallel = rank(&joint) == lcm_degree;
        let strongly_cospectral = cospectral && parallel;

        let zero = if cospectral {
            let p = &plus * &minus;
            self.char_poly().exact_div(&p)
        } else {
            None
        };
        let witness = if !cospectral {
            Some(CospectralityWitness::DeletedPolynomials {
                without_x: self.deleted_char_poly(x)?.to_string(),
                without_y: self.deleted_char_poly(y)?.to_string(),
            })
        } else if !shared.is_one() {
            Some(CospectralityWitness::SharedRoots {
                gcd: shared.to_string(),
            })
        } else {
            None
        };
        Ok((
            RelativeMinPolyPair { plus, minus, zero },
            CospectralityReport {
                cospectral,
                parallel,
                strongly_cospectral,
                witness,
            },
        ))
    }
}

pub fn relative_pair(g: &Graph, x: usize, y: usize) -> Result<RelativeMinPolyPair> {
    SpectralContext::new(g).relative_pair(x, y)
}

pub fn is_cospectral(g: &Graph, x: usize, y: usize) -> Result<bool> {
    SpectralContext::new(g).is_cospectral(x, y)
}

pub fn is_strongly_cospectral(g: &Graph, x: usize, y: usize) -> Result<CospectralityReport> {
    SpectralContext::new(g).strong_cospectrality(x, y)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;
    use crate::graph::families::*;

    fn p(s: &str) -> UniPoly {
        UniPoly::parse(s).unwrap()
    }

    #[test]
    fn char_poly_examples() {
        assert_eq!(char_poly(&complete(2).adjacency()), p("x^2 - 1"));
        assert_eq!(char_poly(&complete_bipartite(2, 2).adjacency()), p("x^4 - 4x^2"));
        assert_eq!(
            char_poly(&double_star(2).adjacency()),
            p("x^2") * p("x^2 - 1") * p("x^2 - 4")
        );
    }

    #[test]
    fn min_poly_examples() {
        let a = RationalMatrix::zeros(1);
        assert_eq!(min_poly_relative(&a, &[rat(1)]).unwrap(), p("x"));
        assert_eq!(min_poly_relative(&a, &[rat(0)]), Err(Error::ZeroVector));
        let k22 = complete_bipartite(2, 2).adjacency();
        let z = pair_vector(4, 0, 1, 1);
        assert_eq!(min_poly_relative(&k22, &z).unwrap(), p("x^2 - 4"));
        let p8 = path(8).adjacency();
        let z = pair_vector(8, 0, 7, -1);
        assert_eq!(min_poly_relative(&p8, &z).unwrap(), p("x + 1") * p("x^3 - 3x + 1"));
    }

    #[test]
    fn relative_pair_examples() {
        let k22 = complete_bipartite(2, 2);
        let pair = relative_pair(&k22, 0, 1).unwrap();
        assert_eq!((pair.plus, pair.minus, pair.zero), (p("x^2 - 4"), p("x"), Some(p("x"))));

        let pair = relative_pair(&path(8), 0, 7).unwrap();
        assert_eq!(pair.plus, p("x - 1") * p("x^3 - 3x - 1"));
        assert_eq!(pair.minus, p("x + 1") * p("x^3 - 3x + 1"));
        assert_eq!(pair.zero, Some(UniPoly::one()));

        let pair = relative_pair(&wheel(4), 0, 2).unwrap();
        assert_eq!(
            (pair.plus, pair.minus, pair.zero),
            (p("x^3 - 8x - 8"), p("x"), Some(p("x")))
        );

        assert_eq!(relative_pair(&path(3), 1, 1), Err(Error::SameVertex(1)));
    }

    #[test]
    fn cospectrality_examples() {
        assert!(is_cospectral(&complete(3), 0, 2).unwrap());
        assert!(is_cospectral(&path(4), 0, 3).unwrap());
        assert!(!is_cospectral(&path(4), 0, 1).unwrap());
        // non-cospectral pairs carry no P0
        assert_eq!(relative_pair(&path(4), 0, 1).unwrap().zero, None);
    }

    #[test]
    fn strong_cospectrality_examples() {
        let k3 = is_strongly_cospectral(&complete(3), 0, 1).unwrap();
        assert!(k3.cospectral && !k3.parallel && !k3.strongly_cospectral);
        assert_eq!(
            k3.witness,
            Some(CospectralityWitness::SharedRoots { gcd: "x + 1".into() })
        );
        assert!(is_strongly_cospectral(&complete(2), 0, 1).unwrap().strongly_cospectral);
        assert!(is_strongly_cospectral(&path(8), 0, 7).unwrap().strongly_cospectral);
        let p4 = is_strongly_cospectral(&path(4), 0, 1).unwrap();
        assert!(!p4.strongly_cospectral);
        assert!(matches!(
            p4.witness,
            Some(CospectralityWitness::DeletedPolynomials { .. })
        ));
    }

    #[test]
    fn parallel_but_not_cospectral() {
        // a loop on one end breaks cospectrality
        let mut g = path(2);
        g.add_loop(0, rat(1)).unwrap();
        let r = is_strongly_cospectral(&g, 0, 1).unwrap();
        assert!(!r.cospectral);
        assert!(!r.strongly_cospectral);
    }
}
