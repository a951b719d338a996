//! Exact rationals, polynomials, rational functions and polynomial determinants.

pub mod det;
pub mod poly;
pub mod ratfunc;
pub mod rational;
pub(crate) mod zpoly;

pub use det::{det_cofactor, det_poly_matrix, PolyMatrix};
pub use poly::{eval_at, Polynomial};
pub use ratfunc::{log_derivative_ratio, ratfunc_is_constant, RationalFunction};
pub use rational::{format_rational, int, parse_rational, rat, Rational};
