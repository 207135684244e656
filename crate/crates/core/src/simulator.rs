//! Floating-point continuous-time quantum walks `U(t) = exp(itA)`.
//!
//! Nothing here certifies anything: a fidelity maximum found up to a
//! horizon `t_max` is evidence at that horizon only.

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::rational::to_f64;
use crate::algebra::RationalMatrix;
use crate::error::{Error, Result};

const MAX_SWEEPS: usize = 100;

/// Eigenvalues ascending; `eigenvectors[k]` belongs to `eigenvalues[k]`
/// and the vectors are orthonormal.
#[derive(Clone, Debug)]
pub struct NumericSpectrum {
    pub eigenvalues: Vec<f64>,
    pub eigenvectors: Vec<Vec<f64>>,
    /// `max_k max_i |(A v_k - lambda_k v_k)_i|`.
    pub residual: f64,
}

/// Cyclic Jacobi diagonalization of a symmetric rational matrix.
pub fn numeric_eigen(a: &RationalMatrix) -> Result<NumericSpectrum> {
    if !a.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let n = a.dim();
    let orig: Vec<Vec<f64>> = (0..n).map(|i| (0..n).map(|j| to_f64(&a[(i, j)])).collect()).collect();
    let mut m = orig.clone();
    // columns of v are the eigenvectors
    let mut v: Vec<Vec<f64>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { 1.0 } else { 0.0 }).collect())
        .collect();
    let total: f64 = orig.iter().flatten().map(|x| x * x).sum();
    for _ in 0..MAX_SWEEPS {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| m[i][j] * m[i][j])
            .sum();
        if off <= 1e-30 * total.max(f64::MIN_POSITIVE) {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                if m[p][q] == 0.0 {
                    continue;
                }
                let theta = (m[q][q] - m[p][p]) / (2.0 * m[p][q]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let (mkp, mkq) = (m[k][p], m[k][q]);
                    m[k][p] = c * mkp - s * mkq;
                    m[k][q] = s * mkp + c * mkq;
                }
                for k in 0..n {
                    let (mpk, mqk) = (m[p][k], m[q][k]);
                    m[p][k] = c * mpk - s * mqk;
                    m[q][k] = s * mpk + c * mqk;
                }
                for row in v.iter_mut() {
                    let (vp, vq) = (row[p], row[q]);
                    row[p] = c * vp - s * vq;
                    row[q] = s * vp + c * vq;
                }
            }
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| m[i][i].total_cmp(&m[j][j]));
    let eigenvalues: Vec<f64> = order.iter().map(|&k| m[k][k]).collect();
    let eigenvectors: Vec<Vec<f64>> = order.iter().map(|&k| (0..n).map(|i| v[i][k]).collect()).collect();
    let mut residual = 0.0f64;
    for (lam, vec) in eigenvalues.iter().zip(&eigenvectors) {
        for i in 0..n {
            let av: f64 = (0..n).map(|j| orig[i][j] * vec[j]).sum();
            residual = residual.max((av - lam * vec[i]).abs());
        }
    }
    let radius = eigenvalues.iter().fold(0.0f64, |r, l| r.max(l.abs()));
    if residual >= 1e-10 * (1.0 + radius) {
        return Err(Error::Precondition(format!(
            "Jacobi iteration did not converge (residual {residual:e})"
        )));
    }
    Ok(NumericSpectrum {
        eigenvalues,
        eigenvectors,
        residual,
    })
}

impl NumericSpectrum {
    pub fn dim(&self) -> usize {
        self.eigenvalues.len()
    }

    /// `U(t)_(x,z)` for every `z`, as (re, im) pairs.
    pub fn amplitudes(&self, x: usize, t: f64) -> Vec<(f64, f64)> {
        (0..self.dim())
            .map(|z| {
                self.eigenvalues
                    .iter()
                    .zip(&self.eigenvectors)
                    .fold((0.0, 0.0), |(re, im), (l, v)| {
                        let w = v[x] * v[z];
                        let (s, c) = (t * l).sin_cos();
                        (re + c * w, im + s * w)
                    })
            })
            .collect()
    }

    /// Eigenvalues grouped when consecutive ones differ by at most `tol`:
    /// `(mean, index range)`.
    pub fn clusters(&self, tol: f64) -> Vec<(f64, std::ops::Range<usize>)> {
        let mut out = Vec::new();
        let mut start = 0;
        for k in 1..=self.dim() {
            if k == self.dim() || self.eigenvalues[k] - self.eigenvalues[k - 1] > tol {
                let mean = self.eigenvalues[start..k].iter().sum::<f64>() / (k - start) as f64;
                out.push((mean, start..k));
                start = k;
            }
        }
        out
    }
}

/// Precomputed `(lambda_k, v_k(x) v_k(y))` for repeated evaluation.
struct PairTerms(Vec<(f64, f64)>);

impl PairTerms {
    fn new(spec: &NumericSpectrum, x: usize, y: usize) -> Self {
        PairTerms(
            spec.eigenvalues
                .iter()
                .zip(&spec.eigenvectors)
                .map(|(&l, v)| (l, v[x] * v[y]))
                .collect(),
        )
    }

    fn at(&self, t: f64) -> f64 {
        let (re, im) = self.0.iter().fold((0.0, 0.0), |(re, im), &(l, w)| {
            let (s, c) = (t * l).sin_cos();
            (re + c * w, im + s * w)
        });
        re.hypot(im)
    }
}

/// `|U(t)_(x,y)| = |sum_k exp(i t lambda_k) v_k(x) v_k(y)|`.
pub fn fidelity_at(spec: &NumericSpectrum, x: usize, y: usize, t: f64) -> f64 {
    PairTerms::new(spec, x, y).at(t)
}

#[derive(Clone, Debug)]
pub struct SearchOptions {
    pub t_max: f64,
    /// Number of grid intervals on `[0, t_max]`.
    pub grid: usize,
    /// How many grid maxima are refined.
    pub refine: usize,
    /// Refinement stops once the bracket is narrower than this.
    pub tolerance: f64,
    /// Keep every grid sample in the trace.
    pub keep_samples: bool,
}

impl SearchOptions {
    pub fn new(t_max: f64) -> Self {
        SearchOptions {
            t_max,
            grid: 1_000_000,
            refine: 16,
            tolerance: 1e-9,
            keep_samples: false,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct FidelityTrace {
    pub pair: (usize, usize),
    pub t_max: f64,
    /// `(t, |U(t)_(x,y)|)`, ascending in `t`; empty unless requested.
    pub samples: Vec<(f64, f64)>,
    pub best_t: f64,
    pub best_fidelity: f64,
}

impl FidelityTrace {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("t,fidelity\n");
        for (t, f) in &self.samples {
            out.push_str(&format!("{t},{f}\n"));
        }
        out
    }
}

/// Higher fidelity wins; ties go to the earlier time.
fn better(a: (f64, f64), b: (f64, f64)) -> bool {
    a.1 > b.1 || (a.1 == b.1 && a.0 < b.0)
}

fn golden_max(f: &PairTerms, mut lo: f64, mut hi: f64, tol: f64) -> (f64, f64) {
    let r = (5f64.sqrt() - 1.0) / 2.0;
    let mut a = hi - r * (hi - lo);
    let mut b = lo + r * (hi - lo);
    let (mut fa, mut fb) = (f.at(a), f.at(b));
    for _ in 0..200 {
        if hi - lo < tol {
            break;
        }
        if fa < fb {
            lo = a;
            a = b;
            fa = fb;
            b = lo + r * (hi - lo);
            fb = f.at(b);
        } else {
            hi = b;
            b = a;
            fb = fa;
            a = hi - r * (hi - lo);
            fa = f.at(a);
        }
    }
    if fa >= fb {
        (a, fa)
    } else {
        (b, fb)
    }
}

/// Grid scan of `[0, t_max]` followed by golden-section refinement around
/// the best grid maxima.
pub fn search_max_fidelity(spec: &NumericSpectrum, x: usize, y: usize, opts: &SearchOptions) -> Result<FidelityTrace> {
    if !(opts.t_max > 0.0) || opts.grid == 0 {
        return Err(Error::Precondition("need t_max > 0 and a nonempty grid".into()));
    }
    for v in [x, y] {
        if v >= spec.dim() {
            return Err(Error::VertexOutOfRange(v, spec.dim()));
        }
    }
    let f = PairTerms::new(spec, x, y);
    let h = opts.t_max / opts.grid as f64;
    let values: Vec<f64> = (0..=opts.grid).into_par_iter().map(|i| f.at(i as f64 * h)).collect();
    let mut peaks: Vec<usize> = (0..=opts.grid)
        .filter(|&i| (i == 0 || values[i] >= values[i - 1]) && (i == opts.grid || values[i] >= values[i + 1]))
        .collect();
    peaks.sort_by(|&i, &j| values[j].total_cmp(&values[i]).then(i.cmp(&j)));
    peaks.truncate(opts.refine.max(1));
    let refined: Vec<(f64, f64)> = peaks
        .par_iter()
        .map(|&i| {
            let lo = (i.saturating_sub(1)) as f64 * h;
            let hi = ((i + 1).min(opts.grid)) as f64 * h;
            let grid_point = (i as f64 * h, values[i]);
            let local = golden_max(&f, lo, hi, opts.tolerance);
            if better(local, grid_point) {
                local
            } else {
                grid_point
            }
        })
        .collect();
    let best = refined
        .into_iter()
        .fold((0.0, values[0]), |acc, c| if better(c, acc) { c } else { acc });
    let samples = if opts.keep_samples {
        values.iter().enumerate().map(|(i, &v)| (i as f64 * h, v)).collect()
    } else {
        Vec::new()
    };
    Ok(FidelityTrace {
        pair: (x, y),
        t_max: opts.t_max,
        samples,
        best_t: best.0,
        best_fidelity: best.1,
    })
}

/// `max_lambda min(|E_lambda (e_x - e_y)|, |E_lambda (e_x + e_y)|)` with
/// eigenvalues grouped within `tol`; near zero iff `x`, `y` are strongly
/// cospectral.
pub fn strong_cospectrality_violation(spec: &NumericSpectrum, x: usize, y: usize, tol: f64) -> f64 {
    spec.clusters(tol)
        .into_iter()
        .map(|(_, range)| {
            let (mut minus, mut plus) = (0.0, 0.0);
            for v in &spec.eigenvectors[range] {
                minus += (v[x] - v[y]).powi(2);
                plus += (v[x] + v[y]).powi(2);
            }
            minus.min(plus).sqrt()
        })
        .fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;
    use crate::graph::families::{complete, complete_bipartite, path};
    use std::f64::consts::PI;

    #[test]
    fn small_spectra() {
        let s = numeric_eigen(&path(2).adjacency()).unwrap();
        assert!((s.eigenvalues[0] + 1.0).abs() < 1e-14 && (s.eigenvalues[1] - 1.0).abs() < 1e-14);
        let s = numeric_eigen(&complete_bipartite(2, 2).adjacency()).unwrap();
        for (got, want) in s.eigenvalues.iter().zip([-2.0, 0.0, 0.0, 2.0]) {
            assert!((got - want).abs() < 1e-12);
        }
        assert_eq!(
            s.clusters(1e-8).iter().map(|c| c.1.len()).collect::<Vec<_>>(),
            vec![1, 2, 1]
        );
        let s = numeric_eigen(&path(3).adjacency()).unwrap();
        let r2 = 2f64.sqrt();
        for (got, want) in s.eigenvalues.iter().zip([-r2, 0.0, r2]) {
            assert!((got - want).abs() < 1e-12);
        }
    }

    #[test]
    fn rejects_asymmetric_input() {
        let mut a = RationalMatrix::zeros(2);
        a[(0, 1)] = rat(1);
        assert!(numeric_eigen(&a).is_err());
    }

    #[test]
    fn closed_form_fidelities() {
        let s = numeric_eigen(&path(2).adjacency()).unwrap();
        assert!((fidelity_at(&s, 0, 1, PI / 2.0) - 1.0).abs() < 1e-10);
        let s = numeric_eigen(&path(3).adjacency()).unwrap();
        assert!((fidelity_at(&s, 0, 2, PI / 2f64.sqrt()) - 1.0).abs() < 1e-10);
        for t in [0.3, 1.7, 4.0] {
            let closed = ((2f64.sqrt() * t).cos() - 1.0).abs() / 2.0;
            assert!((fidelity_at(&s, 0, 2, t) - closed).abs() < 1e-12);
        }
    }

    #[test]
    fn k3_maximum_is_two_thirds() {
        let s = numeric_eigen(&complete(3).adjacency()).unwrap();
        let mut opts = SearchOptions::new(20.0);
        opts.grid = 20_000;
        let tr = search_max_fidelity(&s, 0, 1, &opts).unwrap();
        assert!((tr.best_fidelity - 2.0 / 3.0).abs() < 1e-6);
        // maxima recur with period 2 pi / 3
        assert!((tr.best_t.rem_euclid(2.0 * PI / 3.0) - PI / 3.0).abs() < 1e-4);
    }

    #[test]
    fn k22_transfers_perfectly() {
        let s = numeric_eigen(&complete_bipartite(2, 2).adjacency()).unwrap();
        let mut opts = SearchOptions::new(10.0);
        opts.grid = 10_000;
        opts.keep_samples = true;
        let tr = search_max_fidelity(&s, 0, 1, &opts).unwrap();
        assert!((tr.best_fidelity - 1.0).abs() < 1e-10);
        assert!((tr.best_t - PI / 2.0).abs() < 1e-6);
        assert_eq!(tr.samples.len(), 10_001);
        assert!(tr.to_csv().starts_with("t,fidelity\n0,"));
    }

    #[test]
    fn projection_test_separates_pairs() {
        let s = numeric_eigen(&path(4).adjacency()).unwrap();
        assert!(strong_cospectrality_violation(&s, 0, 3, 1e-8) < 1e-8);
        assert!(strong_cospectrality_violation(&s, 0, 1, 1e-8) > 1e-4);
        let s = numeric_eigen(&complete(3).adjacency()).unwrap();
        assert!(strong_cospectrality_violation(&s, 0, 1, 1e-8) > 1e-4);
    }
}
