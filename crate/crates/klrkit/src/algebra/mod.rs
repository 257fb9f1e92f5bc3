//! Exact-arithmetic kernel: rationals, univariate and multivariate
//! polynomials, rational function fields, truncated power series, and
//! exact linear algebra. No floating point anywhere.

pub mod matrix;
pub mod multipoly;
pub mod poly;
pub mod ratfn;
pub mod scalar;
pub mod series;

pub use matrix::{solve_nullspace, Mat};
pub use multipoly::{demazure, Monomial, MultiPoly};
pub use poly::Poly;
pub use ratfn::{ratq_to_string, ratqu_to_string, RatFn, RatQ, RatQU};
pub use scalar::{rat_to_string, Field, Rat};
pub use series::{eval_poly_at_series, exp_minus_one, log1p, TruncSeries};
