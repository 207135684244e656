mod common;

use common::{faddeev_leverrier, random_graph, random_involution, symmetric_graph};
use num_integer::Integer;
use pgst::algebra::{factor_over_q, poly_gcd, Rational, UniPoly};
use pgst::census::census;
use pgst::document::GraphDocument;
use pgst::engine::roots::{fixed_to_f64, irreducible_real_roots};
use pgst::engine::{
    decide_pgst, enumerate_three_factor, obstruction_odd_degree, pgst_sufficient, DecideOptions, PairFactors,
    SideFactors, Status,
};
use pgst::involution::{find_involutions, quotient_pair};
use pgst::paths::{path_poly, path_root_identities};
use pgst::simulator::{numeric_eigen, strong_cospectrality_violation};
use pgst::spectra::SpectralContext;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn is_squarefree(p: &UniPoly) -> bool {
    poly_gcd(p, &p.derivative()).unwrap().deg() == 0
}

/// A graph with a nontrivial involution, and that involution.
fn symmetric_case(seed: u64, n: usize) -> (pgst::graph::Graph, pgst::involution::Involution) {
    let mut r = rng(seed);
    let sigma = random_involution(&mut r, n);
    let weighted = r.gen_bool(0.5);
    let loops = r.gen_bool(0.3);
    let p = r.gen_range(0.3..0.8);
    (symmetric_graph(&mut r, &sigma, p, weighted, loops), sigma)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn char_poly_agrees_with_faddeev_leverrier(seed in any::<u64>(), n in 1usize..=8) {
        let mut r = rng(seed);
        let g = random_graph(&mut r, n, 0.5, true, true);
        let a = g.adjacency();
        prop_assert_eq!(a.char_poly(), faddeev_leverrier(&a));
    }

    #[test]
    fn cospectral_pairs_split_phi(seed in any::<u64>(), n in 2usize..=8) {
        let (g, sigma) = symmetric_case(seed, n);
        let ctx = SpectralContext::new(&g);
        let phi = faddeev_leverrier(&g.adjacency());
        let q = quotient_pair(&g, &sigma).unwrap();
        for (x, y) in sigma.swaps() {
            prop_assert!(ctx.is_cospectral(x, y).unwrap());
            let pair = ctx.relative_pair(x, y).unwrap();
            let zero = pair.zero.clone().expect("cospectral pairs carry P0");
            prop_assert_eq!(&(&pair.plus * &pair.minus) * &zero, phi.clone());
            prop_assert!(is_squarefree(&pair.plus) && is_squarefree(&pair.minus));
            // e_x + e_y is fixed by sigma and e_x - e_y is negated
            prop_assert!(pair.plus.divides(&q.pi_plus));
            prop_assert!(pair.minus.divides(&q.pi_minus));
            let report = ctx.strong_cospectrality(x, y).unwrap();
            if report.strongly_cospectral {
                prop_assert_eq!(poly_gcd(&pair.plus, &pair.minus).unwrap().deg(), 0);
            }
        }
    }

    #[test]
    fn quotients_multiply_to_phi(seed in any::<u64>(), n in 2usize..=7) {
        let (g, _) = symmetric_case(seed, n);
        let phi = faddeev_leverrier(&g.adjacency());
        let all = find_involutions(&g);
        prop_assert!(!all.is_empty());
        for sigma in &all {
            let q = quotient_pair(&g, sigma).unwrap();
            prop_assert_eq!(faddeev_leverrier(&q.a_plus), q.pi_plus.clone());
            prop_assert_eq!(faddeev_leverrier(&q.a_minus), q.pi_minus.clone());
            prop_assert_eq!(&q.pi_plus * &q.pi_minus, phi.clone());
        }
    }

    #[test]
    fn exact_and_numeric_strong_cospectrality_agree(seed in any::<u64>(), n in 2usize..=7) {
        let (g, sigma) = symmetric_case(seed, n);
        let ctx = SpectralContext::new(&g);
        let spec = numeric_eigen(&g.adjacency()).unwrap();
        for (x, y) in sigma.swaps() {
            let exact = ctx.strong_cospectrality(x, y).unwrap().strongly_cospectral;
            let violation = strong_cospectrality_violation(&spec, x, y, 1e-7);
            if exact {
                prop_assert!(violation < 1e-8, "violation {} on a strongly cospectral pair", violation);
            } else {
                prop_assert!(violation > 1e-4, "violation {} on a pair that is not", violation);
            }
        }
    }

    #[test]
    fn numeric_eigenvalues_match_exact_roots(seed in any::<u64>(), n in 1usize..=12) {
        let mut r = rng(seed);
        let (weighted, loops) = (r.gen_bool(0.5), r.gen_bool(0.3));
        let g = random_graph(&mut r, n, 0.4, weighted, loops);
        let phi = g.adjacency().char_poly();
        let bits = 80;
        let mut exact: Vec<f64> = Vec::new();
        for (f, mult) in factor_over_q(&phi).unwrap().factors {
            for root in irreducible_real_roots(&f, bits).unwrap() {
                exact.extend(std::iter::repeat(fixed_to_f64(&root, bits)).take(mult));
            }
        }
        exact.sort_by(f64::total_cmp);
        let spec = numeric_eigen(&g.adjacency()).unwrap();
        let mut numeric = spec.eigenvalues.clone();
        numeric.sort_by(f64::total_cmp);
        prop_assert_eq!(exact.len(), n);
        for (a, b) in exact.iter().zip(&numeric) {
            prop_assert!((a - b).abs() < 1e-9, "exact {} numeric {}", a, b);
        }
    }

    #[test]
    fn walk_is_unitary_and_symmetric(seed in any::<u64>(), n in 1usize..=8, t in 0.0f64..50.0) {
        let mut r = rng(seed);
        let g = random_graph(&mut r, n, 0.5, true, true);
        let spec = numeric_eigen(&g.adjacency()).unwrap();
        let rows: Vec<Vec<(f64, f64)>> = (0..n).map(|x| spec.amplitudes(x, t)).collect();
        for x in 0..n {
            for y in 0..n {
                // <row x, row y> = delta_xy
                let (mut re, mut im) = (0.0, 0.0);
                for z in 0..n {
                    let (a, b) = rows[x][z];
                    let (c, d) = rows[y][z];
                    re += a * c + b * d;
                    im += b * c - a * d;
                }
                let want = if x == y { 1.0 } else { 0.0 };
                prop_assert!((re - want).abs() < 1e-10 && im.abs() < 1e-10);
                let m = |(a, b): (f64, f64)| (a * a + b * b).sqrt();
                prop_assert!((m(rows[x][y]) - m(rows[y][x])).abs() < 1e-10);
            }
        }
    }

    #[test]
    fn amplitudes_match_power_series(seed in any::<u64>(), n in 1usize..=6, t in 0.0f64..2.0) {
        let mut r = rng(seed);
        let g = random_graph(&mut r, n, 0.5, true, true);
        let a = g.adjacency().to_f64();
        let spec = numeric_eigen(&g.adjacency()).unwrap();
        // exp(i t A) by Taylor series on the complex matrix i t A
        let mut term: Vec<Vec<(f64, f64)>> =
            (0..n).map(|i| (0..n).map(|j| if i == j { (1.0, 0.0) } else { (0.0, 0.0) }).collect()).collect();
        let mut sum = term.clone();
        for k in 1..120 {
            let mut next = vec![vec![(0.0, 0.0); n]; n];
            for i in 0..n {
                for j in 0..n {
                    let (mut re, mut im) = (0.0, 0.0);
                    for l in 0..n {
                        let s = a[l][j] * t / k as f64;
                        // multiply by i s
                        re -= term[i][l].1 * s;
                        im += term[i][l].0 * s;
                    }
                    next[i][j] = (re, im);
                }
            }
            term = next;
            for i in 0..n {
                for j in 0..n {
                    sum[i][j].0 += term[i][j].0;
                    sum[i][j].1 += term[i][j].1;
                }
            }
        }
        for x in 0..n {
            for (z, (re, im)) in spec.amplitudes(x, t).into_iter().enumerate() {
                prop_assert!((re - sum[x][z].0).abs() < 1e-8 && (im - sum[x][z].1).abs() < 1e-8);
            }
        }
    }

    #[test]
    fn factor_order_does_not_change_outcomes(seed in any::<u64>(), n in 2usize..=8) {
        let (g, sigma) = symmetric_case(seed, n);
        let ctx = SpectralContext::new(&g);
        let mut r = rng(seed ^ 0x5eed);
        for (x, y) in sigma.swaps() {
            let pair = ctx.relative_pair(x, y).unwrap();
            let base = PairFactors::new(&pair).unwrap();
            let shuffle = |s: &SideFactors, r: &mut ChaCha8Rng| {
                let mut polys: Vec<UniPoly> = s.factors().iter().map(|f| f.poly.clone()).collect();
                polys.shuffle(r);
                SideFactors::from_factors(polys).unwrap()
            };
            let shuffled = PairFactors { plus: shuffle(&base.plus, &mut r), minus: shuffle(&base.minus, &mut r) };
            prop_assert_eq!(pgst_sufficient(&base).is_some(), pgst_sufficient(&shuffled).is_some());
            let (a, b) = (obstruction_odd_degree(&base, 1 << 20), obstruction_odd_degree(&shuffled, 1 << 20));
            prop_assert_eq!(a.certificate.is_some(), b.certificate.is_some());
            if let Some(c) = b.certificate {
                prop_assert!(c.verify(&pair.plus, &pair.minus).is_ok());
            }
            let key = |v: Vec<pgst::engine::Certificate>| {
                let mut s: Vec<String> = v.iter().map(|c| format!("{c:?}")).collect();
                s.sort();
                s
            };
            prop_assert_eq!(
                key(enumerate_three_factor(&base, 1 << 20).0),
                key(enumerate_three_factor(&shuffled, 1 << 20).0)
            );
        }
    }

    #[test]
    fn engine_certificates_verify(seed in any::<u64>(), n in 2usize..=8) {
        let (g, sigma) = symmetric_case(seed, n);
        for (x, y) in sigma.swaps() {
            let v = decide_pgst(&g, x, y, &DecideOptions::exact_only()).unwrap();
            prop_assert!(v.verify().is_ok());
            prop_assert_eq!(v.status == Status::NotStronglyCospectral, !v.cospectrality.strongly_cospectral);
            if v.status.is_certified() && v.status != Status::NotStronglyCospectral {
                prop_assert!(v.certificate.is_some());
            }
        }
    }

    #[test]
    fn documents_round_trip(seed in any::<u64>(), n in 1usize..=9) {
        let mut r = rng(seed);
        let g = random_graph(&mut r, n, 0.5, true, true);
        let pair = (n >= 2).then(|| (r.gen_range(0..n), r.gen_range(0..n)));
        let doc = GraphDocument::new(format!("g{seed}"), g, pair).unwrap();
        let text = doc.to_json();
        let back = GraphDocument::parse(&text).unwrap();
        prop_assert_eq!(&back, &doc);
        prop_assert_eq!(back.to_json(), text);
    }
}

#[test]
fn path_polynomial_identities() {
    // p_(2k) = (p_k - p_(k-1)) (p_k + p_(k-1)) and
    // gcd(p_k, p_l) = p_(gcd(k+1, l+1) - 1)
    for k in 1..=20 {
        let (a, b) = (path_poly(k), path_poly(k - 1));
        assert_eq!(&(&a - &b) * &(&a + &b), path_poly(2 * k), "k = {k}");
        for l in 1..=20 {
            let r = path_root_identities(k, l).unwrap();
            assert!(r.minus_divides && r.plus_divides && r.common_root_law_holds, "{k} {l}");
            let want = path_poly((k + 1).gcd(&(l + 1)) - 1);
            assert_eq!(r.common_factor, want.monic().unwrap_or(want.clone()), "{k} {l}");
        }
    }
}

#[test]
fn path_polynomials_are_char_polys_of_paths() {
    for k in 1..=12 {
        let g = pgst::graph::families::path(k);
        assert_eq!(faddeev_leverrier(&g.adjacency()), path_poly(k));
    }
}

#[test]
fn census_is_deterministic() {
    let a = serde_json::to_string(&census(6).unwrap()).unwrap();
    let b = serde_json::to_string(&census(6).unwrap()).unwrap();
    assert_eq!(a, b);
}

#[test]
fn rational_weights_survive_char_poly() {
    // a single edge of weight w has phi = x^2 - w^2
    let w = Rational::new(7.into(), 3.into());
    let mut g = pgst::graph::Graph::new(2);
    g.add_edge(0, 1, w.clone()).unwrap();
    let want = UniPoly::from_coeffs(vec![
        -(&w * &w),
        Rational::from_integer(0.into()),
        Rational::from_integer(1.into()),
    ]);
    assert_eq!(faddeev_leverrier(&g.adjacency()), want);
    assert_eq!(g.adjacency().char_poly(), want);
}
