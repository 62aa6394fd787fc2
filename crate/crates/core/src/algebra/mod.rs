//! Exact arithmetic: Gaussian rationals, polynomials, rational functions,
//! matrices over them, and linear elimination.

pub mod expr;
pub mod linsolve;
pub mod matrix;
pub mod poly;
pub mod ratfun;
pub mod scalar;

pub use expr::{parse_const, parse_poly, parse_poly_in, Params};
pub use linsolve::Echelon;
pub use matrix::{Field, Mat, MatC, MatP, MatR, Ring};
pub use poly::Poly;
pub use ratfun::RatFun;
pub use scalar::{format_rational, parse_rational, q, qi, GaussianRational, Q};
