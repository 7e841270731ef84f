//! Legendre polynomials and the `R_n` function
//! `R_n(z) = ∂P_ν(z)/∂ν |_{ν=n} - ln((1+z)/2) P_n(z)`, a polynomial of degree `n`.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::exact::{binomial, factorial, harmonic_table, int, Polynomial, Rational};

/// `[P_0, ..., P_n]` by `(k+1) P_{k+1} = (2k+1) z P_k - k P_{k-1}`.
pub fn legendre_table(n: usize) -> Vec<Polynomial> {
    let mut out = vec![Polynomial::one()];
    if n == 0 {
        return out;
    }
    out.push(Polynomial::x());
    for k in 1..n {
        let a = &(&Polynomial::x() * &out[k]).scale(&int(2 * k as i64 + 1));
        let b = out[k - 1].scale(&int(k as i64));
        out.push((a - &b).scale(&Rational::new(BigInt::one(), BigInt::from(k + 1))));
    }
    out
}

pub fn legendre_p(n: usize) -> Polynomial {
    legendre_table(n).pop().expect("table is never empty")
}

/// `2(H_{2n} - H_n) P_n + 2 sum_{k<n} (-1)^{n+k} (2k+1)/((n-k)(n+k+1)) P_k`.
pub fn r_n(n: usize) -> Polynomial {
    let p = legendre_table(n);
    let h = harmonic_table(2 * n as u64, 1).expect("order 1 is valid");
    let mut acc = p[n].scale(&((&h[2 * n] - &h[n]) * int(2)));
    for (k, pk) in p.iter().enumerate().take(n) {
        acc = &acc + &pk.scale(&difference_weight(n, k));
    }
    acc
}

/// `2 (-1)^{n+k} (2k+1) / ((n-k)(n+k+1))`
fn difference_weight(n: usize, k: usize) -> Rational {
    let sign = if (n + k).is_multiple_of(2) { 1 } else { -1 };
    Rational::new(
        BigInt::from(2 * sign * (2 * k as i64 + 1)),
        BigInt::from((n - k) as i64 * (n + k + 1) as i64),
    )
}

/// `sum_{k=1}^n (1/k) [P_k - P_{k-1}] P_{n-k}`.
pub fn r_n_product_form(n: usize) -> Polynomial {
    let p = legendre_table(n);
    (1..=n).fold(Polynomial::zero(), |acc, k| {
        let diff = &p[k] - &p[k - 1];
        let term = (&diff * &p[n - k]).scale(&Rational::new(BigInt::one(), BigInt::from(k)));
        &acc + &term
    })
}

/// `2 sum_{k<n} (-1)^{n+k} (2k+1)/((n-k)(n+k+1)) [P_k - P_n]`.
pub fn r_n_difference_form(n: usize) -> Polynomial {
    let p = legendre_table(n);
    (0..n).fold(Polynomial::zero(), |acc, k| {
        &acc + &(&p[k] - &p[n]).scale(&difference_weight(n, k))
    })
}

/// `-2 ln((1+z)/2) P_n + (1/(2^{n-1} n!)) d^n/dz^n [(z^2-1)^n ln((z+1)/2)]`.
///
/// Expands the `n`-th derivative by Leibniz's rule. The `k = 0` term carries
/// the logarithm and must cancel `-2 ln((1+z)/2) P_n` exactly (Rodrigues);
/// the `k >= 1` terms are `C(n,k) Q^{(n-k)} (-1)^{k-1} (k-1)! / (z+1)^k` with
/// `Q = (z^2-1)^n`, each an exact polynomial division.
pub fn r_n_rodrigues_form(n: usize) -> Result<Polynomial> {
    if n == 0 {
        return Err(Error::invalid("Rodrigues form needs n >= 1"));
    }
    let q = Polynomial::new(vec![int(-1), int(0), int(1)]).pow(n as u32);
    let norm = Rational::new(
        BigInt::one(),
        BigInt::from(2).pow(n as u32 - 1) * factorial(n as u64),
    );

    let log_coefficient = &q.nth_derivative(n).scale(&norm) - &legendre_p(n).scale(&int(2));
    if !log_coefficient.is_zero() {
        return Err(Error::Inconsistency(format!(
            "logarithmic part of Rodrigues form does not cancel: {log_coefficient}"
        )));
    }

    let z_plus_one = Polynomial::linear(Rational::one(), Rational::one());
    let mut acc = Polynomial::zero();
    for k in 1..=n {
        let sign = if k % 2 == 1 { 1 } else { -1 };
        let weight =
            Rational::from_integer(binomial(n as u64, k as i64) * factorial(k as u64 - 1) * sign);
        let numerator = q.nth_derivative(n - k);
        let quotient = numerator.div_exact(&z_plus_one.pow(k as u32))?;
        acc = &acc + &quotient.scale(&weight);
    }
    Ok(acc.scale(&norm))
}

/// `x -> 2F1(-n,-n;1;x) = (1-x)^n P_n((1+x)/(1-x))`.
pub fn poly_2f1_nn(n: usize) -> Polynomial {
    legendre_p(n).mobius_homogenize(n).expect("deg P_n = n")
}

/// `lim_{x->1} (1-x)^n R_n((1+x)/(1-x))`, read off the homogenized
/// polynomial at `x = 1` and checked against `2 C(2n,n) (H_{2n} - H_n)`
/// (twice the leading coefficient of `R_n`, scaled by `2^n`).
pub fn r_limit_combination(n: usize) -> Result<Rational> {
    if n == 0 {
        return Err(Error::invalid("limit combination needs n >= 1"));
    }
    let from_poly = r_n(n).mobius_homogenize(n)?.eval(&Rational::one());
    let h = harmonic_table(2 * n as u64, 1)?;
    let closed = Rational::from_integer(binomial(2 * n as u64, n as i64) * 2) * (&h[2 * n] - &h[n]);
    if from_poly != closed {
        return Err(Error::Inconsistency(format!(
            "R_n limit {from_poly} differs from closed form {closed}"
        )));
    }
    Ok(from_poly)
}
