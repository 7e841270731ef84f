//! Integral representations over `[0, 1]`.
//!
//! Integrands of the form `P(t, ln t) / (t - 1)` with `P(1, ·) = 0` are
//! divided exactly and integrated with [`log_moment`]; only the two limit
//! forms at the end need quadrature.

use num_traits::{One, Zero};

use crate::closed_forms::q_n;
use crate::error::{Error, Result};
use crate::exact::{
    binomial, factorial, int, log_moment, rat, rational_to_f64, LogPolynomial, Polynomial, Rational,
};
use crate::hypergeom::{laguerre, legendre_p, pfq_polynomial, poly_2f1_nn};

use super::quadrature::{integrate, integrate_semi_infinite, QuadratureConfig, QuadratureResult};

fn require(cond: bool, msg: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::invalid(msg))
    }
}

/// `∫_0^1 p(t) / (t - 1) dt` for `p(1) = 0`.
fn integrate_over_t_minus_one(p: &Polynomial) -> Result<Rational> {
    Ok(p.divide_by_t_minus_one()?.integrate_unit())
}

/// `S_n(z) = ∫_0^1 [(1 + z t)^n - (1 + z)^n] / (t - 1) dt`.
pub fn s_binomial_integral(n: u64, z: &Rational) -> Result<Rational> {
    require(n >= 1, "n >= 1 required")?;
    let inner = Polynomial::linear(Rational::one(), z.clone()).pow(n as u32);
    let at_one = inner.eval(&Rational::one());
    integrate_over_t_minus_one(&(&inner - &Polynomial::constant(at_one)))
}

/// `g(y) = sum_i (i+1)^{p-1} C(n-1, i) y^i`, i.e.
/// `pF_{p-1}(2, ..., 2, 1-n; 1, ..., 1; -y)` (and `2F1(1, 1-n; 2; -y)` at `p = 0`).
fn shifted_kernel(n: u64, p: u32) -> Result<Polynomial> {
    let top = int(1 - n as i64);
    let poly = if p == 0 {
        pfq_polynomial(&[int(1), top], &[int(2)])?
    } else {
        let mut nums = vec![int(2); p as usize - 1];
        nums.push(top);
        pfq_polynomial(&nums, &vec![int(1); p as usize - 1])?
    };
    Ok(poly.scale_arg(&int(-1)))
}

/// `S_n^{(p)}(z) = n z ∫_0^1 [t g(z t) - g(z)] / (t - 1) dt`.
pub fn sp_integral(n: u64, p: u32, z: &Rational) -> Result<Rational> {
    sp_integral_order(n, p, 1, z)
}

/// `S_n^{(p)}(q, 1, 1, z)`: the same bracket against
/// `(-1)^{q-1}/(q-1)! ln^{q-1} t`.
pub fn sp_integral_order(n: u64, p: u32, q: u32, z: &Rational) -> Result<Rational> {
    require(n >= 1, "n >= 1 required")?;
    require(q >= 1, "q >= 1 required")?;
    let g = shifted_kernel(n, p)?;
    let bracket = &(&Polynomial::x() * &g.scale_arg(z)) - &Polynomial::constant(g.eval(z));
    let quotient = bracket
        .divide_by_t_minus_one()
        .map_err(|e| Error::Inconsistency(format!("bracket does not vanish at t = 1: {e}")))?;
    let integral = LogPolynomial::from_t_polynomial(&quotient, q - 1).integrate();
    let sign = if q % 2 == 1 { int(1) } else { int(-1) };
    let weight = sign / Rational::from_integer(factorial(q as u64 - 1));
    Ok(int(n as i64) * z * weight * integral)
}

/// `L(y) - c` with `y = s ln t`, as a log-polynomial in `t`.
fn laguerre_in_log(n: u64, alpha: u32, s: &Rational, minus: &Rational) -> LogPolynomial {
    let poly = &laguerre(n as usize - 1, alpha).scale_arg(s) - &Polynomial::constant(minus.clone());
    LogPolynomial::from_log_polynomial(&poly)
}

fn geometric(big_m: u64) -> Polynomial {
    Polynomial::new(vec![Rational::one(); big_m as usize])
}

fn require_order_sum(n: u64, big_m: u64) -> Result<()> {
    require(n >= 2, "order sums need n >= 2")?;
    require(big_m >= 1, "order sums need M >= 1")
}

/// `S_n(M, z) = z ∫_0^1 [L_{n-1}^1(z ln t) - n] (t^M - 1)/(t - 1) dt`.
pub fn order_sum_laguerre_integral(n: u64, big_m: u64, z: &Rational) -> Result<Rational> {
    require_order_sum(n, big_m)?;
    let integrand = &laguerre_in_log(n, 1, z, &int(n as i64))
        * &LogPolynomial::from_t_polynomial(&geometric(big_m), 0);
    Ok(z * log_moment(&integrand))
}

/// `S_n(M, z) - S_n(M-1, z) = z ∫_0^1 [L_{n-1}^1(z ln t) - n] t^{M-1} dt`.
pub fn order_sum_step_integral(n: u64, big_m: u64, z: &Rational) -> Result<Rational> {
    require_order_sum(n, big_m)?;
    let integrand = &laguerre_in_log(n, 1, z, &int(n as i64))
        * &LogPolynomial::term(Rational::one(), big_m as u32 - 1, 0);
    Ok(z * log_moment(&integrand))
}

/// `sum_{m=2}^n C(n,m) H_M^{(m)} u^m/(m+1)
///   = u ∫_0^1 [L_{n-1}^2(u ln t)/(n+1) - n/2] (t^M - 1)/(t - 1) dt`.
pub fn integrated_order_sum_laguerre(n: u64, big_m: u64, u: &Rational) -> Result<Rational> {
    require_order_sum(n, big_m)?;
    let l = laguerre(n as usize - 1, 2)
        .scale_arg(u)
        .scale(&rat(1, n as i64 + 1));
    let bracket = &l - &Polynomial::constant(rat(n as i64, 2));
    let integrand = &LogPolynomial::from_log_polynomial(&bracket)
        * &LogPolynomial::from_t_polynomial(&geometric(big_m), 0);
    Ok(u * log_moment(&integrand))
}

/// `Q_n = ∫_0^1 (t^n - 1)^2 / (t - 1) dt`, checked against `H_{2n} - 2 H_n`.
pub fn q_n_integral(n: u64) -> Result<Rational> {
    require(n >= 1, "n >= 1 required")?;
    let base = &Polynomial::monomial(Rational::one(), n as usize) - &Polynomial::one();
    let value = integrate_over_t_minus_one(&base.pow(2))?;
    let expected = q_n(n)?;
    if value != expected {
        return Err(Error::Inconsistency(format!(
            "Q_{n}: integral {value} vs {expected}"
        )));
    }
    Ok(value)
}

/// `sum_j C(n,j)^2 H_j z^j = ∫_0^1 [F(z t) - F(z)] / (t - 1) dt` with
/// `F = 2F1(-n, -n; 1; ·)`.
pub fn squared_binomial_integral(n: u64, z: &Rational) -> Result<Rational> {
    let f = poly_2f1_nn(n as usize);
    let bracket = &f.scale_arg(z) - &Polynomial::constant(f.eval(z));
    integrate_over_t_minus_one(&bracket)
}

/// `lim_{M -> ∞} S_n(M, z) = -z ∫_0^1 [L_{n-1}^1(z ln t) - n] dt/(t - 1)`.
///
/// With `t = e^{-v}` this is `z ∫_0^∞ r(v) · v/(e^v - 1) dv` where
/// `r(v) = (L_{n-1}^1(-z v) - n)/v` is a polynomial.
pub fn order_sum_limit_quadrature(
    n: u64,
    z: f64,
    config: &QuadratureConfig,
) -> Result<QuadratureResult> {
    require(n >= 2, "order sums need n >= 2")?;
    if z == 0.0 {
        return Ok(QuadratureResult {
            value: 0.0,
            error_estimate: 0.0,
            subdivisions: 0,
        });
    }
    // coefficient i of L(-z v) - n is C(n, i+1) z^i / i!, i >= 1
    let mut r = Vec::with_capacity(n as usize - 1);
    for i in 1..n {
        let c = rational_to_f64(&Rational::new(binomial(n, i as i64 + 1), factorial(i)));
        r.push(c * z.powi(i as i32));
    }
    let r_at = |v: f64| r.iter().rev().fold(0.0, |acc, c| acc * v + c);
    let result = integrate_semi_infinite(
        |v| {
            if v > 745.0 {
                return 0.0;
            }
            let bose = if v == 0.0 { 1.0 } else { v / v.exp_m1() };
            r_at(v) * bose
        },
        0.0,
        config,
    )?;
    Ok(QuadratureResult {
        value: z * result.value,
        error_estimate: z.abs() * result.error_estimate,
        ..result
    })
}

/// `sum_j C(n,j)^2 H_j = -C ∫_1^∞ [(2/(1+z))^n P_n(z)/C - 1] dz/(1+z)`,
/// `C = C(2n, n)`, by quadrature over `z = 1/(1-u)`, `u ∈ (0, 1)`.
///
/// With `w = 2/(1+z)` the bracket is an exact polynomial `w h(w)` (its
/// constant term cancels), and the integrand becomes `-2 C h(w) / (2-u)^2`.
pub fn squared_binomial_quadrature(n: u64, config: &QuadratureConfig) -> Result<QuadratureResult> {
    require(n >= 1, "n >= 1 required")?;
    let nu = n as usize;
    let c = Rational::from_integer(binomial(2 * n, n as i64));
    // w^n P_n((2-w)/w) = sum_k p_k (2-w)^k w^{n-k}
    let p = legendre_p(nu);
    let two_minus_w = Polynomial::linear(int(2), int(-1));
    let mut in_w = Polynomial::zero();
    for (k, pk) in p.coeffs().iter().enumerate() {
        let term = &two_minus_w.pow(k as u32) * &Polynomial::monomial(pk.clone(), nu - k);
        in_w = &in_w + &term;
    }
    let bracket = &in_w.scale(&c.recip()) - &Polynomial::one();
    if !bracket.coeff(0).is_zero() {
        return Err(Error::Inconsistency(format!(
            "bracket constant term {}",
            bracket.coeff(0)
        )));
    }
    let h = Polynomial::new(bracket.coeffs().iter().skip(1).cloned().collect());
    let h = h.to_f64_coeffs();
    let cf = rational_to_f64(&c);
    integrate(
        |u| {
            let w = 2.0 * (1.0 - u) / (2.0 - u);
            let hw = h.iter().rev().fold(0.0, |acc, c| acc * w + c);
            -2.0 * cf * hw / ((2.0 - u) * (2.0 - u))
        },
        0.0,
        1.0,
        config,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closed_forms::{integrated_order_sum, order_sum_closed, order_sum_extrapolated};
    use crate::exact::{harmonic, pow};
    use crate::oracle::{order_sum, s_as_polynomial, s_general, s_simple, OrderSumSpec, SumSpec};

    fn z_set() -> Vec<Rational> {
        vec![int(-1), rat(-1, 2), rat(1, 3), rat(1, 2), int(1)]
    }

    fn squared_binomial_reference(n: u64) -> Rational {
        (int(2) * harmonic(n as i64, 1).unwrap() - harmonic(2 * n as i64, 1).unwrap())
            * Rational::from_integer(binomial(2 * n, n as i64))
    }

    #[test]
    fn examples() {
        let z = rat(4, 9);
        assert_eq!(sp_integral(1, 0, &z).unwrap(), z);
        assert_eq!(sp_integral(2, 0, &int(1)).unwrap(), rat(7, 2));
        assert_eq!(sp_integral(3, 1, &int(1)).unwrap(), rat(35, 2));
        assert_eq!(sp_integral_order(2, 0, 2, &int(1)).unwrap(), rat(13, 4));
        assert_eq!(
            sp_integral_order(3, 0, 3, &rat(1, 2)).unwrap(),
            rat(4301, 1728)
        );
        assert_eq!(
            order_sum_laguerre_integral(2, 2, &int(1)).unwrap(),
            rat(5, 4)
        );
        assert_eq!(
            order_sum_laguerre_integral(3, 3, &rat(-1, 2)).unwrap(),
            rat(1513, 1728)
        );
        assert_eq!(order_sum_step_integral(2, 1, &int(1)).unwrap(), int(1));
        assert_eq!(order_sum_step_integral(5, 3, &int(0)).unwrap(), int(0));
        assert_eq!(
            order_sum_step_integral(3, 2, &rat(1, 2)).unwrap(),
            pow(&rat(5, 4), 3).unwrap() - rat(3, 4) - int(1)
        );
        assert_eq!(q_n_integral(1).unwrap(), rat(-1, 2));
        assert_eq!(q_n_integral(2).unwrap(), rat(-11, 12));
        assert_eq!(squared_binomial_integral(2, &int(1)).unwrap(), rat(11, 2));
        assert_eq!(squared_binomial_integral(0, &rat(3, 2)).unwrap(), int(0));
        assert_eq!(
            squared_binomial_integral(3, &rat(1, 2)).unwrap(),
            rat(389, 48)
        );
    }

    #[test]
    fn sp_integrals_match_oracle() {
        for z in z_set() {
            for n in 1..=25u64 {
                assert_eq!(
                    s_binomial_integral(n, &z).unwrap(),
                    s_simple(n, 0, &z).unwrap()
                );
                for p in 0..=3u32 {
                    let lhs = sp_integral(n, p, &z).unwrap();
                    assert_eq!(lhs, s_simple(n, p, &z).unwrap(), "n={n} p={p} z={z}");
                }
            }
        }
        for n in 1..=10u64 {
            for p in 0..=2u32 {
                for q in 1..=4u32 {
                    let z = rat(2, 3);
                    let spec = SumSpec {
                        n,
                        p,
                        q,
                        r: 1,
                        m: 1,
                        z: z.clone(),
                    };
                    assert_eq!(
                        sp_integral_order(n, p, q, &z).unwrap(),
                        s_general(&spec).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn incrementing_p_is_z_derivative() {
        for n in 1..=20u64 {
            for p in 0..=2u32 {
                let poly = s_as_polynomial(n, p, 1, 1, 1).unwrap();
                let next = &Polynomial::x() * &poly.derivative();
                for z in [rat(1, 2), int(-3)] {
                    assert_eq!(sp_integral(n, p + 1, &z).unwrap(), next.eval(&z));
                }
            }
        }
    }

    #[test]
    fn order_sum_integrals_match() {
        for z in z_set() {
            for n in 2..=25u64 {
                for m in [1u64, 4, 11, 25] {
                    let oracle = order_sum(&OrderSumSpec::plain(n, m, z.clone())).unwrap();
                    assert_eq!(
                        order_sum_laguerre_integral(n, m, &z).unwrap(),
                        oracle,
                        "n={n} M={m}"
                    );
                    let step = order_sum_step_integral(n, m, &z).unwrap();
                    let below = if m == 1 {
                        Rational::zero()
                    } else {
                        order_sum_closed(n, m - 1, &z).unwrap()
                    };
                    assert_eq!(step, oracle - below);
                }
            }
        }
    }

    #[test]
    fn integrated_sum_three_routes() {
        for n in 2..=20u64 {
            for m in [1u64, 3, 6] {
                for u in [int(1), rat(-2, 3)] {
                    assert_eq!(
                        integrated_order_sum_laguerre(n, m, &u).unwrap(),
                        integrated_order_sum(n, m, &u).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn q_n_and_squared_binomial() {
        for n in 1..=50 {
            assert!(q_n_integral(n).is_ok());
        }
        for n in 0..=30 {
            assert_eq!(
                squared_binomial_integral(n, &int(1)).unwrap(),
                squared_binomial_reference(n)
            );
        }
        for n in 1..=8 {
            for z in [rat(1, 2), int(-2)] {
                let spec = SumSpec {
                    n,
                    p: 0,
                    q: 1,
                    r: 2,
                    m: 1,
                    z: z.clone(),
                };
                assert_eq!(
                    squared_binomial_integral(n, &z).unwrap(),
                    s_general(&spec).unwrap()
                );
            }
        }
    }

    #[test]
    fn limit_quadrature() {
        let config = QuadratureConfig::default();
        let zeta2 = std::f64::consts::PI.powi(2) / 6.0;
        let r = order_sum_limit_quadrature(2, 1.0, &config).unwrap();
        assert!((r.value - zeta2).abs() < 1e-10, "{r:?}");
        assert_eq!(
            order_sum_limit_quadrature(4, 0.0, &config).unwrap().value,
            0.0
        );
        let r = order_sum_limit_quadrature(3, -0.5, &config).unwrap();
        assert!((r.value - 1.0834434372412205).abs() < 1e-9, "{r:?}");
        for n in 2..=10 {
            for z in [-0.5, 0.5, 1.0] {
                let q = order_sum_limit_quadrature(n, z, &config).unwrap().value;
                let e = order_sum_extrapolated(n, 100_000, z).unwrap();
                assert!((q - e).abs() < 1e-6, "n={n} z={z}: {q} vs {e}");
            }
        }
    }

    #[test]
    fn squared_binomial_by_quadrature() {
        let config = QuadratureConfig::default();
        for n in 1..=8 {
            let r = squared_binomial_quadrature(n, &config).unwrap();
            let target = rational_to_f64(&squared_binomial_reference(n));
            assert!(
                (r.value - target).abs() < 1e-8,
                "n={n}: {} vs {target}",
                r.value
            );
        }
    }
}
