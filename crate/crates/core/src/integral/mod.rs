//! Integral representations (exact, via log-moment integration) and the
//! adaptive quadrature used for the ones that have no exact route.

mod quadrature;
mod reps;

pub use quadrature::{
    integrate, integrate_semi_infinite, quadrature_log_moment, QuadratureConfig, QuadratureResult,
};
pub use reps::{
    integrated_order_sum_laguerre, order_sum_laguerre_integral, order_sum_limit_quadrature,
    order_sum_step_integral, q_n_integral, s_binomial_integral, sp_integral, sp_integral_order,
    squared_binomial_integral, squared_binomial_quadrature,
};
