//! Truncated formal power series and polynomials over the rationals.

pub mod poly;
pub mod rational;
pub mod series;

pub use poly::Poly;
pub use rational::{
    format_rational, parse_rational, pow, random_rational, rat, ratio, sign_pow, sqrt_exact, to_f64, Rational,
};
pub use series::Series;
