//! Integral LLL reduction: exact Gram-Schmidt data kept as integers
//! `d_i` and `lambda_ij`, so no rational or floating arithmetic is needed.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Reduces linearly independent integer rows in place with parameter
/// `delta = num / den`, `1/4 < delta < 1`.
pub fn lll_reduce(b: &mut [Vec<BigInt>], num: i64, den: i64) {
    let n = b.len();
    if n < 2 {
        return;
    }
    let (num, den) = (BigInt::from(num), BigInt::from(den));
    // d[0] = 1, d[i + 1] belongs to row i; lambda[i][j] for j < i
    let mut d = vec![BigInt::zero(); n + 1];
    let mut lambda = vec![vec![BigInt::zero(); n]; n];
    d[0] = BigInt::from(1);
    d[1] = dot(&b[0], &b[0]);
    let mut k = 1;
    let mut kmax = 0;
    while k < n {
        if k > kmax {
            kmax = k;
            for j in 0..=k {
                let mut u = dot(&b[k], &b[j]);
                for i in 0..j {
                    u = (&d[i + 1] * &u - &lambda[k][i] * &lambda[j][i]) / &d[i];
                }
                if j < k {
                    lambda[k][j] = u;
                } else {
                    assert!(!u.is_zero(), "LLL input rows are linearly dependent");
                    d[k + 1] = u;
                }
            }
        }
        loop {
            reduce(b, &mut lambda, &d, k, k - 1);
            // Lovasz test in integer form
            let lhs = &den * &d[k + 1] * &d[k - 1];
            let rhs = &num * &d[k] * &d[k] - &den * &lambda[k][k - 1] * &lambda[k][k - 1];
            if lhs < rhs {
                swap(b, &mut lambda, &mut d, k, kmax);
                if k > 1 {
                    k -= 1;
                }
            } else {
                for l in (0..k - 1).rev() {
                    reduce(b, &mut lambda, &d, k, l);
                }
                k += 1;
                break;
            }
        }
    }
}

fn reduce(b: &mut [Vec<BigInt>], lambda: &mut [Vec<BigInt>], d: &[BigInt], k: usize, l: usize) {
    let two_l: BigInt = &lambda[k][l] * 2;
    if two_l.abs() <= d[l + 1] {
        return;
    }
    // nearest integer to lambda / d
    let q = (&two_l + &d[l + 1]).div_floor(&(&d[l + 1] * 2));
    let row_l = b[l].clone();
    for (x, y) in b[k].iter_mut().zip(&row_l) {
        *x -= &q * y;
    }
    lambda[k][l] -= &q * &d[l + 1];
    for i in 0..l {
        let v = &q * &lambda[l][i];
        lambda[k][i] -= v;
    }
}

fn swap(b: &mut [Vec<BigInt>], lambda: &mut [Vec<BigInt>], d: &mut [BigInt], k: usize, kmax: usize) {
    b.swap(k, k - 1);
    for j in 0..k - 1 {
        let t = lambda[k][j].clone();
        lambda[k][j] = lambda[k - 1][j].clone();
        lambda[k - 1][j] = t;
    }
    let lam = lambda[k][k - 1].clone();
    let bnew = (&d[k - 1] * &d[k + 1] + &lam * &lam) / &d[k];
    for i in k + 1..=kmax {
        let t = lambda[i][k].clone();
        lambda[i][k] = (&d[k + 1] * &lambda[i][k - 1] - &lam * &t) / &d[k];
        lambda[i][k - 1] = (&bnew * &t + &lam * &lambda[i][k]) / &d[k + 1];
    }
    d[k] = bnew;
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rows(v: &[&[i64]]) -> Vec<Vec<BigInt>> {
        v.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    fn norm2(v: &[BigInt]) -> BigInt {
        dot(v, v)
    }

    #[test]
    fn reduces_textbook_basis() {
        // (0, 1, 0) = -4 b0 - b1 + b2 lies in the lattice
        let mut b = rows(&[&[1, 1, 1], &[-1, 0, 2], &[3, 5, 6]]);
        lll_reduce(&mut b, 99, 100);
        assert_eq!(norm2(&b[0]), BigInt::from(1));
        // determinant magnitude is preserved
        let det = |m: &[Vec<BigInt>]| -> BigInt {
            &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1])
                - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
                + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0])
        };
        assert_eq!(det(&b).abs(), BigInt::from(3));
    }

    #[test]
    fn finds_integer_relation_for_sqrt2() {
        // 1, sqrt2, sqrt8 satisfy 2 sqrt2 - sqrt8 = 0
        let s = 10i64.pow(12);
        let r2 = (2f64.sqrt() * s as f64).round() as i64;
        let r8 = (8f64.sqrt() * s as f64).round() as i64;
        let mut b = rows(&[&[1, 0, 0, s], &[0, 1, 0, r2], &[0, 0, 1, r8]]);
        lll_reduce(&mut b, 99, 100);
        let first = &b[0];
        assert_eq!(first[0], BigInt::zero());
        assert_eq!(first[1].abs(), BigInt::from(2));
        assert_eq!(first[2].abs(), BigInt::from(1));
    }
}
