use std::fmt;
use std::ops::{Index, IndexMut};

use num_traits::{One, Zero};

use super::poly::UniPoly;
use super::rational::{bit_size, format_rational, to_f64, Rational};
use crate::error::{Error, Result};

/// Dense square matrix of exact rationals, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    n: usize,
    data: Vec<Rational>,
}

impl RationalMatrix {
    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            data: vec![Rational::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |i, j| if i == j { Rational::one() } else { Rational::zero() })
    }

    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> Rational) -> Self {
        let data = (0..n * n).map(|k| f(k / n, k % n)).collect();
        Self { n, data }
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::Dimension {
                    expected: n,
                    actual: row.len(),
                });
            }
            data.extend(row);
        }
        Ok(Self { n, data })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| super::rational::rat(v)).collect())
                .collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn trace(&self) -> Rational {
        (0..self.n).map(|i| self[(i, i)].clone()).sum()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.n, |i, j| self[(j, i)].clone())
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        if v.len() != self.n {
            return Err(Error::Dimension {
                expected: self.n,
                actual: v.len(),
            });
        }
        Ok((0..self.n)
            .map(|i| {
                let row = &self.data[i * self.n..(i + 1) * self.n];
                row.iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if other.n != self.n {
            return Err(Error::Dimension {
                expected: self.n,
                actual: other.n,
            });
        }
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out.data[i * n + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::from_fn(self.n, |i, j| &self[(i, j)] + &other[(i, j)])
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_fn(self.n, |i, j| &self[(i, j)] * c)
    }

    /// Principal submatrix on the given indices, in the given order.
    pub fn principal(&self, idx: &[usize]) -> Self {
        Self::from_fn(idx.len(), |i, j| self[(idx[i], idx[j])].clone())
    }

    /// Principal submatrix with row and column `v` removed.
    pub fn delete(&self, v: usize) -> Self {
        let keep: Vec<usize> = (0..self.n).filter(|&i| i != v).collect();
        self.principal(&keep)
    }

    pub fn to_f64(&self) -> Vec<Vec<f64>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| to_f64(&self[(i, j)])).collect())
            .collect()
    }

    /// `det(xI - A)`, exact. Reduces to upper Hessenberg form by rational
    /// similarity transforms, then runs the Hessenberg determinant
    /// recurrence. No symmetry is assumed.
    pub fn char_poly(&self) -> UniPoly {
        let n = self.n;
        let mut h = self.clone();
        for m in 1..n.saturating_sub(1) {
            // pivot for column m-1 among rows m.., cheapest nonzero entry
            let pivot = (m..n)
                .filter(|&i| !h[(i, m - 1)].is_zero())
                .min_by_key(|&i| bit_size(&h[(i, m - 1)]));
            let Some(i) = pivot else { continue };
            if i != m {
                h.swap_rows(i, m);
                h.swap_cols(i, m);
            }
            let t = h[(m, m - 1)].clone();
            for i in m + 1..n {
                if h[(i, m - 1)].is_zero() {
                    continue;
                }
                let u = &h[(i, m - 1)] / &t;
                for j in 0..n {
                    let v = &u * &h[(m, j)];
                    if !v.is_zero() {
                        h[(i, j)] -= v;
                    }
                }
                for j in 0..n {
                    let v = &u * &h[(j, i)];
                    if !v.is_zero() {
                        h[(j, m)] += v;
                    }
                }
            }
        }
        // p_m = (x - h_mm) p_{m-1} - sum_i h_{m-i,m} (prod_{j=m-i+1..m} h_{j,j-1}) p_{m-i-1}
        let mut polys: Vec<UniPoly> = vec![UniPoly::one()];
        for m in 0..n {
            let mut pm = &UniPoly::linear(h[(m, m)].clone()) * &polys[m];
            let mut t = Rational::one();
            for i in 1..=m {
                t *= &h[(m - i + 1, m - i)];
                if t.is_zero() {
                    break;
                }
                let c = &t * &h[(m - i, m)];
                if !c.is_zero() {
                    pm = &pm - &polys[m - i].scale(&c);
                }
            }
            polys.push(pm);
        }
        polys.pop().unwrap()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for j in 0..self.n {
            self.data.swap(a * self.n + j, b * self.n + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        for i in 0..self.n {
            self.data.swap(i * self.n + a, i * self.n + b);
        }
    }
}

impl Index<(usize, usize)> for RationalMatrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.data[i * self.n + j]
    }
}

impl IndexMut<(usize, usize)> for RationalMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.data[i * self.n + j]
    }
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RationalMatrix {}x{}", self.n, self.n)?;
        for i in 0..self.n {
            let row: Vec<String> = (0..self.n).map(|j| format_rational(&self[(i, j)])).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Rank of a list of equal-length rational vectors.
pub fn rank(vectors: &[Vec<Rational>]) -> usize {
    let mut rows: Vec<Vec<Rational>> = vectors.to_vec();
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len())
            .filter(|&i| !rows[i][c].is_zero())
            .min_by_key(|&i| bit_size(&rows[i][c]))
        else {
            continue;
        };
        rows.swap(r, p);
        let pivot = rows[r][c].clone();
        for i in r + 1..rows.len() {
            if rows[i][c].is_zero() {
                continue;
            }
            let f = &rows[i][c] / &pivot;
            for k in c..cols {
                let v = &f * &rows[r][k];
                rows[i][k] -= v;
            }
        }
        r += 1;
    }
    r
}
