//! Polynomials in `x` whose coefficients are polynomials in a single
//! symbolic edge weight `w`.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_traits::Zero;

use super::poly::UniPoly;
use super::rational::Rational;

/// `coeffs[k]` is the coefficient of `x^k`, itself a polynomial in `w`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct WeightPoly {
    coeffs: Vec<UniPoly>,
}

impl WeightPoly {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn from_x_coeffs(mut coeffs: Vec<UniPoly>) -> Self {
        while coeffs.last().is_some_and(UniPoly::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    /// Lifts a polynomial in `x` with no `w` dependence.
    pub fn from_x_poly(p: &UniPoly) -> Self {
        Self::from_x_coeffs(p.coeffs().iter().cloned().map(UniPoly::constant).collect())
    }

    /// Builds `sum_k w^k * parts[k](x)`.
    pub fn from_w_parts(parts: &[UniPoly]) -> Self {
        let len = parts.iter().map(|p| p.coeffs().len()).max().unwrap_or(0);
        let coeffs = (0..len)
            .map(|i| UniPoly::from_coeffs(parts.iter().map(|p| p.coeff(i)).collect()))
            .collect();
        Self::from_x_coeffs(coeffs)
    }

    /// The indeterminate `w` itself.
    pub fn w() -> Self {
        Self::from_x_coeffs(vec![UniPoly::x()])
    }

    /// The indeterminate `x` itself.
    pub fn x() -> Self {
        Self::from_x_coeffs(vec![UniPoly::zero(), UniPoly::one()])
    }

    pub fn x_coeffs(&self) -> &[UniPoly] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn x_degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn w_degree(&self) -> Option<usize> {
        self.coeffs.iter().filter_map(UniPoly::degree).max()
    }

    /// Coefficient of `w^k` as a polynomial in `x`.
    pub fn w_part(&self, k: usize) -> UniPoly {
        UniPoly::from_coeffs(self.coeffs.iter().map(|c| c.coeff(k)).collect())
    }

    pub fn specialize(&self, w0: &Rational) -> UniPoly {
        UniPoly::from_coeffs(self.coeffs.iter().map(|c| c.eval(w0)).collect())
    }
}

/// Substitutes `w = w0` coefficient-wise.
pub fn weightpoly_specialize(p: &WeightPoly, w0: &Rational) -> UniPoly {
    p.specialize(w0)
}

impl Add<&WeightPoly> for &WeightPoly {
    type Output = WeightPoly;
    fn add(self, rhs: &WeightPoly) -> WeightPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let zero = UniPoly::zero();
        WeightPoly::from_x_coeffs(
            (0..n)
                .map(|k| self.coeffs.get(k).unwrap_or(&zero) + rhs.coeffs.get(k).unwrap_or(&zero))
                .collect(),
        )
    }
}

impl Sub<&WeightPoly> for &WeightPoly {
    type Output = WeightPoly;
    fn sub(self, rhs: &WeightPoly) -> WeightPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let zero = UniPoly::zero();
        WeightPoly::from_x_coeffs(
            (0..n)
                .map(|k| self.coeffs.get(k).unwrap_or(&zero) - rhs.coeffs.get(k).unwrap_or(&zero))
                .collect(),
        )
    }
}

impl Mul<&WeightPoly> for &WeightPoly {
    type Output = WeightPoly;
    fn mul(self, rhs: &WeightPoly) -> WeightPoly {
        if self.is_zero() || rhs.is_zero() {
            return WeightPoly::zero();
        }
        let mut out = vec![UniPoly::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        WeightPoly::from_x_coeffs(out)
    }
}

impl fmt::Display for WeightPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut terms = Vec::new();
        for k in (0..=self.w_degree().unwrap_or(0)).rev() {
            let part = self.w_part(k);
            if part.is_zero() {
                continue;
            }
            let w = match k {
                0 => String::new(),
                1 => "w".to_string(),
                _ => format!("w^{k}"),
            };
            if w.is_empty() {
                terms.push(format!("({part})"));
            } else if part.is_one() {
                terms.push(w);
            } else if part.coeffs().len() == 1 && part.coeff(0) == -Rational::from_integer(1.into()) {
                terms.push(format!("-{w}"));
            } else {
                terms.push(format!("{w}({part})"));
            }
        }
        if terms.is_empty() {
            terms.push("0".into());
        }
        f.write_str(&terms.join(" + ").replace("+ -", "- "))
    }
}

impl fmt::Debug for WeightPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeightPoly({self})")
    }
}

impl Zero for WeightPoly {
    fn zero() -> Self {
        WeightPoly::zero()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl Add for WeightPoly {
    type Output = WeightPoly;
    fn add(self, rhs: WeightPoly) -> WeightPoly {
        &self + &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat;

    #[test]
    fn specialize_x_minus_w_squared() {
        let p = &WeightPoly::x() - &(&WeightPoly::w() * &WeightPoly::w());
        assert_eq!(p.specialize(&rat(1)), UniPoly::parse("x - 1").unwrap());
        assert_eq!(p.w_degree(), Some(2));
        assert_eq!(p.w_part(2), UniPoly::parse("-1").unwrap());
    }

    #[test]
    fn w_parts_round_trip() {
        let parts = [
            UniPoly::parse("x^2 + x").unwrap(),
            UniPoly::zero(),
            UniPoly::parse("-1").unwrap(),
        ];
        let p = WeightPoly::from_w_parts(&parts);
        for (k, part) in parts.iter().enumerate() {
            assert_eq!(&p.w_part(k), part);
        }
        assert_eq!(p.to_string(), "-w^2 + (x^2 + x)");
    }
}
