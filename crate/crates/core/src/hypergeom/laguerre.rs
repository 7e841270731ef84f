//! Associated Laguerre polynomials and their Laplace transforms.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{factorial, int, pow, Polynomial, Rational};

/// `L_n^alpha` from `(k+1) L_{k+1} = (2k+1+alpha-x) L_k - (k+alpha) L_{k-1}`.
pub fn laguerre(n: usize, alpha: u32) -> Polynomial {
    let a = alpha as i64;
    let mut prev = Polynomial::one();
    if n == 0 {
        return prev;
    }
    let mut cur = Polynomial::linear(int(1 + a), int(-1));
    for k in 1..n as i64 {
        let factor = Polynomial::linear(int(2 * k + 1 + a), int(-1));
        let next = (&(&factor * &cur) - &prev.scale(&int(k + a)))
            .scale(&Rational::new(BigInt::one(), BigInt::from(k + 1)));
        prev = cur;
        cur = next;
    }
    cur
}

fn check_laplace_args(n: u64, k: &Rational) -> Result<()> {
    if n == 0 {
        return Err(Error::invalid("Laguerre transform needs n >= 1"));
    }
    if !k.is_positive() {
        return Err(Error::domain(format!(
            "Laplace variable must be positive, got {k}"
        )));
    }
    Ok(())
}

/// `∫_0^∞ L_{n-1}^1(-z v) e^{-k v} dv = ((1 + z/k)^n - 1) / z`.
///
/// The closed form is cross-checked against [`laplace_laguerre_termwise`].
pub fn laplace_laguerre(n: u64, z: &Rational, k: &Rational) -> Result<Rational> {
    check_laplace_args(n, k)?;
    if z.is_zero() {
        return Err(Error::domain(
            "closed form is singular at z = 0; the termwise limit is n/k",
        ));
    }
    let closed = (pow(&(Rational::one() + z / k), n as i64)? - Rational::one()) / z;
    let termwise = laplace_laguerre_termwise(n, z, k)?;
    if closed != termwise {
        return Err(Error::Inconsistency(format!(
            "Laguerre transform: closed form {closed} vs termwise {termwise}"
        )));
    }
    Ok(closed)
}

/// Same transform, integrating the polynomial term by term with
/// `∫_0^∞ v^j e^{-k v} dv = j!/k^{j+1}`. Defined at `z = 0` (value `n/k`).
pub fn laplace_laguerre_termwise(n: u64, z: &Rational, k: &Rational) -> Result<Rational> {
    check_laplace_args(n, k)?;
    let poly = laguerre(n as usize - 1, 1).scale_arg(&-z);
    let mut acc = Rational::zero();
    for (j, c) in poly.coeffs().iter().enumerate() {
        let moment = Rational::from_integer(factorial(j as u64)) / pow(k, j as i64 + 1)?;
        acc += c * moment;
    }
    Ok(acc)
}
