use std::collections::BTreeMap;
use std::ops::{Add, Mul};

use num_traits::{One, Zero};

use super::combinatorics::factorial;
use super::polynomial::Polynomial;
use super::rational::{rational_to_f64, Rational};
use num_bigint::BigInt;

/// Finite sum `sum c_{k,j} t^k (ln t)^j` with `k, j >= 0`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LogPolynomial {
    terms: BTreeMap<(u32, u32), Rational>,
}

impl LogPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `c t^k (ln t)^j`
    pub fn term(c: Rational, k: u32, j: u32) -> Self {
        let mut out = Self::zero();
        out.add_term(c, k, j);
        out
    }

    /// `p(t) (ln t)^j`
    pub fn from_t_polynomial(p: &Polynomial, j: u32) -> Self {
        let mut out = Self::zero();
        for (k, c) in p.coeffs().iter().enumerate() {
            out.add_term(c.clone(), k as u32, j);
        }
        out
    }

    /// `p(ln t)`
    pub fn from_log_polynomial(p: &Polynomial) -> Self {
        let mut out = Self::zero();
        for (j, c) in p.coeffs().iter().enumerate() {
            out.add_term(c.clone(), 0, j as u32);
        }
        out
    }

    pub fn add_term(&mut self, c: Rational, k: u32, j: u32) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry((k, j)).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&(k, j));
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, &Rational)> {
        self.terms.iter().map(|(&(k, j), c)| (k, j, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero();
        for (k, j, v) in self.terms() {
            out.add_term(v * c, k, j);
        }
        out
    }

    /// Value at `t`, with `ln t` supplied by the caller so that points like
    /// `t = e^{-v}` can be evaluated without forming `ln` of an underflowed `t`.
    pub fn eval_with_log(&self, t: f64, ln_t: f64) -> f64 {
        self.terms()
            .map(|(k, j, c)| rational_to_f64(c) * t.powi(k as i32) * ln_t.powi(j as i32))
            .sum()
    }

    /// `∫_0^1 f(t) dt`, exactly.
    pub fn integrate(&self) -> Rational {
        log_moment(self)
    }
}

/// `∫_0^1 f(t) dt` term by term, using
/// `∫_0^1 t^k (ln t)^j dt = (-1)^j j! / (k+1)^{j+1}`.
pub fn log_moment(f: &LogPolynomial) -> Rational {
    f.terms()
        .map(|(k, j, c)| {
            let sign = if j % 2 == 0 { 1 } else { -1 };
            let num = factorial(j as u64) * sign;
            let den = BigInt::from(k + 1).pow(j + 1);
            c * Rational::new(num, den)
        })
        .sum()
}

impl Add for &LogPolynomial {
    type Output = LogPolynomial;
    fn add(self, rhs: &LogPolynomial) -> LogPolynomial {
        let mut out = self.clone();
        for (k, j, c) in rhs.terms() {
            out.add_term(c.clone(), k, j);
        }
        out
    }
}

impl Mul for &LogPolynomial {
    type Output = LogPolynomial;
    fn mul(self, rhs: &LogPolynomial) -> LogPolynomial {
        let mut out = LogPolynomial::zero();
        for (k1, j1, a) in self.terms() {
            for (k2, j2, b) in rhs.terms() {
                out.add_term(a * b, k1 + k2, j1 + j2);
            }
        }
        out
    }
}

impl One for LogPolynomial {
    fn one() -> Self {
        Self::term(Rational::one(), 0, 0)
    }
}

impl Mul for LogPolynomial {
    type Output = LogPolynomial;
    fn mul(self, rhs: LogPolynomial) -> LogPolynomial {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};

    #[test]
    fn moment_examples() {
        assert_eq!(log_moment(&LogPolynomial::term(int(1), 0, 0)), int(1));
        assert_eq!(log_moment(&LogPolynomial::term(int(1), 0, 1)), int(-1));
        assert_eq!(log_moment(&LogPolynomial::term(int(1), 1, 2)), rat(1, 4));
    }

    /// Repeated integration by parts:
    /// I(k, j) = -j/(k+1) I(k, j-1), I(k, 0) = 1/(k+1).
    #[test]
    fn moments_match_integration_by_parts() {
        for k in 0..=20u32 {
            let mut expected = rat(1, k as i64 + 1);
            for j in 0..=6u32 {
                if j > 0 {
                    expected *= rat(-(j as i64), k as i64 + 1);
                }
                assert_eq!(
                    log_moment(&LogPolynomial::term(int(1), k, j)),
                    expected,
                    "k={k} j={j}"
                );
            }
        }
    }

    #[test]
    fn sums_and_products_stay_closed() {
        let a = LogPolynomial::term(int(2), 1, 0);
        let b = LogPolynomial::term(int(3), 0, 1);
        let s = &a + &b;
        assert_eq!(s.len(), 2);
        let prod = &s * &s;
        // (2t + 3 ln t)^2 = 4t^2 + 12 t ln t + 9 ln^2 t
        let expected: Vec<_> = vec![(0, 2, int(9)), (1, 1, int(12)), (2, 0, int(4))];
        let got: Vec<_> = prod.terms().map(|(k, j, c)| (k, j, c.clone())).collect();
        assert_eq!(got, expected);
        let cancel = &a + &LogPolynomial::term(int(-2), 1, 0);
        assert!(cancel.is_empty());
    }
}
