//! Hypergeometric kernels and the orthogonal polynomials built on them.
//!
//! Everything here is exact except [`hyp2f1_11`], the one non-terminating
//! evaluator in the crate.

mod gauss;
mod laguerre;
mod legendre;
mod pfq;

pub use gauss::{hyp2f1_11, hyp2f1_11_log_form, Hyp2f1Value, HypArg, LogForm};
pub use laguerre::{laguerre, laplace_laguerre, laplace_laguerre_termwise};
pub use legendre::{
    legendre_p, legendre_table, poly_2f1_nn, r_limit_combination, r_n, r_n_difference_form,
    r_n_product_form, r_n_rodrigues_form,
};
pub use pfq::{
    param_derivative_polynomial, pfq_param_derivative, pfq_polynomial, pfq_terminating, PfqSpec,
};
