//! Exact evaluation of binomial-harmonic number sums
//!
//! ```text
//! S_n^{(p)}(q, r, m, z) = sum_{j=0}^{n} j^p [H_j^{(q)}]^m C(n, j)^r z^j
//! S_n(M, z)             = sum_{m=2}^{n} C(n, m) H_M^{(m)} z^m
//! ```
//!
//! Every family is evaluated by several independent routes (brute-force
//! summation, recursions, closed forms, integral representations) so that
//! each route can be checked against the others in exact rational arithmetic.
//!
//! - [`exact`]: rationals, combinatorial primitives, polynomial and
//!   log-polynomial calculus
//! - [`oracle`]: brute-force reference sums
//! - [`recursions`]: recursion relations in `n` and in `M`
//! - [`hypergeom`]: terminating pFq, `2F1(1,1;m;w)`, Legendre, `R_n`, Laguerre
//! - [`closed_forms`]: closed and semi-closed expressions
//! - [`integral`]: exact integral representations and adaptive quadrature
//! - [`verify`]: identity registry, verification reports
//! - [`cli`]: the `harmsum` command line front end

pub mod cli;
pub mod closed_forms;
pub mod error;
pub mod exact;
pub mod hypergeom;
pub mod integral;
pub mod oracle;
pub mod recursions;
pub mod verify;

pub use error::{Error, Result};
pub use exact::{LogPolynomial, Polynomial, Rational};
