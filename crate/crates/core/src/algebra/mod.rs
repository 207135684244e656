//! Exact arithmetic: rationals, dense matrices and univariate polynomials
//! with complete factorization over the rationals.

pub mod factor;
pub mod matrix;
pub(crate) mod modp;
pub mod poly;
pub mod rational;
pub mod weight_poly;

pub use factor::{factor_over_q, is_irreducible, is_perfect_square, squarefree_decomposition, Factorization};
pub use matrix::RationalMatrix;
pub use poly::{poly_gcd, poly_xgcd, trace_of, UniPoly};
pub use rational::{frac, parse_rational, rat, Rational};
pub use weight_poly::{weightpoly_specialize, WeightPoly};
