// Integral representations: exact where the integrand is a polynomial in
// t and ln t, adaptive quadrature for the limit forms.

use harmsum::exact::{format_rational, int, rat};
use harmsum::integral::{
    integrate, order_sum_laguerre_integral, order_sum_limit_quadrature, sp_integral,
    squared_binomial_quadrature, QuadratureConfig,
};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    println!(
        "S_6^(2)(-1/2) = {}",
        format_rational(&sp_integral(6, 2, &rat(-1, 2))?)
    );
    println!(
        "S_5(M=4, 1) = {}",
        format_rational(&order_sum_laguerre_integral(5, 4, &int(1))?)
    );

    let config = QuadratureConfig::default();
    let r = integrate(|t: f64| -t.ln() / (1.0 - t), 0.0, 1.0, &config)?;
    println!(
        "∫ -ln t/(1-t) = {:.15} (zeta(2) = {:.15})",
        r.value,
        std::f64::consts::PI.powi(2) / 6.0
    );

    let r = order_sum_limit_quadrature(3, -0.5, &config)?;
    println!(
        "S_3(M=inf, -1/2) = {:.15} ± {:.1e}",
        r.value, r.error_estimate
    );

    let r = squared_binomial_quadrature(5, &config)?;
    println!(
        "sum C(5,j)^2 H_j by quadrature = {:.12} ({} subdivisions)",
        r.value, r.subdivisions
    );
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
