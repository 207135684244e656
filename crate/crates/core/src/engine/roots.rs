//! Real roots of irreducible rational polynomials to a prescribed number
//! of bits, by Sturm isolation and exact dyadic bisection.
//!
//! A root `r` is returned as the integer `floor(r * 2^bits)`, so the error
//! is below one unit in the last place.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::algebra::{Rational, UniPoly};
use crate::error::{Error, Result};

fn sturm_chain(p: &UniPoly) -> Result<Vec<UniPoly>> {
    let mut chain = vec![p.clone(), p.derivative()];
    while !chain.last().unwrap().is_constant() {
        let n = chain.len();
        let (_, r) = chain[n - 2].div_rem(&chain[n - 1])?;
        if r.is_zero() {
            break;
        }
        chain.push(-r);
    }
    Ok(chain)
}

fn variations(chain: &[UniPoly], x: &Rational) -> usize {
    let signs: Vec<bool> = chain
        .iter()
        .map(|q| q.eval(x))
        .filter(|v| !v.is_zero())
        .map(|v| v.is_positive())
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// `p(num / 2^k) * 2^(k deg p)` for integer coefficients `c`.
fn scaled_eval(c: &[BigInt], num: &BigInt, k: u64) -> BigInt {
    let d = c.len() - 1;
    let mut acc = c[d].clone();
    for i in (0..d).rev() {
        acc = acc * num + (&c[i] << (k as usize * (d - i)));
    }
    acc
}

fn dyadic(num: &BigInt, k: u64) -> Rational {
    Rational::new(num.clone(), BigInt::one() << k as usize)
}

/// Fixed-point approximations `floor(r * 2^bits)` of the real roots of an
/// irreducible polynomial, ascending. All roots must be real, which holds
/// for every factor of a symmetric matrix's characteristic polynomial.
pub fn irreducible_real_roots(p: &UniPoly, bits: u64) -> Result<Vec<BigInt>> {
    let d = p.degree().ok_or(Error::ZeroPolynomial)?;
    if d == 0 {
        return Ok(Vec::new());
    }
    if d == 1 {
        let m = p.monic()?;
        let root = -m.coeff(0);
        let scaled = root * Rational::from_integer(BigInt::one() << bits as usize);
        return Ok(vec![scaled.floor().to_integer()]);
    }
    let (_, c) = p.primitive_part();
    let chain = sturm_chain(p)?;
    // Cauchy bound, rounded up to a power of two
    let lead = c[d].abs();
    let max = c[..d].iter().map(|v| v.abs()).max().unwrap();
    let bound = Rational::one() + Rational::new(max, lead);
    let mut e = 0u64;
    while Rational::from_integer(BigInt::one() << e as usize) < bound {
        e += 1;
    }
    // isolate: stack of (lo, hi, k) meaning (lo/2^k, hi/2^k]
    let mut isolated: Vec<(BigInt, BigInt, u64)> = Vec::new();
    let mut stack = vec![(-(BigInt::one() << e as usize), BigInt::one() << e as usize, 0u64)];
    while let Some((lo, hi, k)) = stack.pop() {
        let count = variations(&chain, &dyadic(&lo, k)) - variations(&chain, &dyadic(&hi, k));
        match count {
            0 => {}
            1 => isolated.push((lo, hi, k)),
            _ => {
                let (lo, hi, k) = (lo << 1usize, hi << 1usize, k + 1);
                let mid: BigInt = (&lo + &hi) >> 1usize;
                stack.push((mid.clone(), hi, k));
                stack.push((lo, mid, k));
            }
        }
    }
    if isolated.len() != d {
        return Err(Error::Precondition(format!("{p} has non-real roots")));
    }
    let mut roots = Vec::with_capacity(d);
    for (lo, hi, k) in isolated {
        let scale = bits.max(k);
        let mut lo: BigInt = lo << (scale - k) as usize;
        let mut hi: BigInt = hi << (scale - k) as usize;
        let lo_sign = scaled_eval(&c, &lo, scale).is_positive();
        while &hi - &lo > BigInt::one() {
            let mid: BigInt = (&lo + &hi) >> 1usize;
            if scaled_eval(&c, &mid, scale).is_positive() == lo_sign {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        roots.push(lo >> (scale - bits) as usize);
    }
    roots.sort();
    Ok(roots)
}

pub fn fixed_to_f64(v: &BigInt, bits: u64) -> f64 {
    crate::algebra::rational::to_f64(&dyadic(v, bits))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_ratio_roots() {
        let p = UniPoly::parse("x^2 - x - 1").unwrap();
        let r = irreducible_real_roots(&p, 64).unwrap();
        let phi = (1.0 + 5f64.sqrt()) / 2.0;
        assert!((fixed_to_f64(&r[0], 64) - (1.0 - phi)).abs() < 1e-15);
        assert!((fixed_to_f64(&r[1], 64) - phi).abs() < 1e-15);
    }

    #[test]
    fn cubic_roots_are_cosines() {
        // roots of x^3 - 3x + 1 are 2cos(2 pi k / 9) for k = 2, 4, 8
        let p = UniPoly::parse("x^3 - 3x + 1").unwrap();
        let r = irreducible_real_roots(&p, 80).unwrap();
        let mut want: Vec<f64> = [2.0, 4.0, 8.0]
            .iter()
            .map(|k: &f64| 2.0 * (2.0 * std::f64::consts::PI * k / 9.0).cos())
            .collect();
        want.sort_by(f64::total_cmp);
        for (a, b) in r.iter().zip(want) {
            assert!((fixed_to_f64(a, 80) - b).abs() < 1e-14);
        }
    }

    #[test]
    fn high_precision_is_exact_to_the_last_bit() {
        // floor(sqrt(2) * 2^200) squared brackets 2^401
        let p = UniPoly::parse("x^2 - 2").unwrap();
        let r = irreducible_real_roots(&p, 200).unwrap();
        let s = &r[1];
        let two = BigInt::one() << 401usize;
        assert!(s * s <= two);
        let t = s + BigInt::one();
        assert!(&t * &t > two);
        assert_eq!(
            irreducible_real_roots(&UniPoly::parse("2x + 1").unwrap(), 4).unwrap(),
            vec![BigInt::from(-8)]
        );
    }
}
