//! Shared generators and oracles for the integration tests.
#![allow(dead_code)]

use num_traits::Zero;
use pgst::algebra::{frac, Rational, RationalMatrix, UniPoly};
use pgst::graph::Graph;
use pgst::involution::Involution;
use rand::seq::SliceRandom;
use rand::Rng;

/// Small nonzero rational weight: an integer in -3..=3 or a simple fraction.
pub fn weight<R: Rng>(rng: &mut R, weighted: bool) -> Rational {
    if !weighted {
        return frac(1, 1);
    }
    loop {
        let num = rng.gen_range(-3i64..=3);
        let den = rng.gen_range(1i64..=3);
        if num != 0 {
            return frac(num, den);
        }
    }
}

/// Erdos-Renyi graph with edge probability `p`, optionally weighted and
/// with loops.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64, weighted: bool, loops: bool) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v, weight(rng, weighted)).unwrap();
            }
        }
        if loops && rng.gen_bool(0.3) {
            g.add_loop(u, weight(rng, weighted)).unwrap();
        }
    }
    g
}

/// A random involution with at least one swap.
pub fn random_involution<R: Rng>(rng: &mut R, n: usize) -> Involution {
    assert!(n >= 2);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let swaps = rng.gen_range(1..=n / 2);
    let pairs: Vec<(usize, usize)> = (0..swaps).map(|k| (order[2 * k], order[2 * k + 1])).collect();
    Involution::from_swaps(n, &pairs).unwrap()
}

/// A random graph invariant under `sigma`: edges are added orbit by orbit.
pub fn symmetric_graph<R: Rng>(rng: &mut R, sigma: &Involution, p: f64, weighted: bool, loops: bool) -> Graph {
    let n = sigma.perm().len();
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if g.has_edge(u, v) {
                continue;
            }
            let (su, sv) = (sigma.image(u), sigma.image(v));
            // the orbit {u v, su sv} is decided once, from its least member
            let key = (su.min(sv), su.max(sv));
            if key < (u, v) {
                continue;
            }
            if rng.gen_bool(p) {
                let w = weight(rng, weighted);
                g.add_edge(u, v, w.clone()).unwrap();
                if key != (u, v) {
                    g.add_edge(su, sv, w).unwrap();
                }
            }
        }
        if loops && sigma.image(u) >= u && rng.gen_bool(0.3) {
            let w = weight(rng, weighted);
            g.add_loop(u, w.clone()).unwrap();
            if sigma.image(u) != u {
                g.add_loop(sigma.image(u), w).unwrap();
            }
        }
    }
    g
}

/// Faddeev-LeVerrier: `M_0 = 0`, `M_k = A M_(k-1) + c_(n-k+1) I`,
/// `c_(n-k) = -tr(A M_k) / k`. Independent of the library's method.
pub fn faddeev_leverrier(a: &RationalMatrix) -> UniPoly {
    let n = a.dim();
    let mut coeffs = vec![Rational::zero(); n + 1];
    coeffs[n] = frac(1, 1);
    let mut m = RationalMatrix::zeros(n);
    for k in 1..=n {
        let am = a.mul(&m).unwrap();
        m = am.add(&RationalMatrix::identity(n).scale(&coeffs[n - k + 1]));
        let tr = a.mul(&m).unwrap().trace();
        coeffs[n - k] = -tr / Rational::from_integer((k as i64).into());
    }
    UniPoly::from_coeffs(coeffs)
}
