//! Exact arithmetic kernels shared by every other module.

mod combinatorics;
mod logpoly;
mod polynomial;
mod rational;

pub use combinatorics::{binomial, factorial, harmonic, harmonic_table, pochhammer};
pub use logpoly::{log_moment, LogPolynomial};
pub use polynomial::Polynomial;
pub use rational::{
    format_rational, int, parse_rational, pow, rat, rational_to_f64, serde_rational, Rational,
};
