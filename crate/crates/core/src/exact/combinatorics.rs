use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::rational::Rational;
use crate::error::{Error, Result};

/// Generalized harmonic number `H_n^{(r)} = sum_{j=1}^n 1/j^r`.
///
/// `H_0^{(r)} = 0`. Negative `n` is rejected rather than extended, as is `r < 1`.
pub fn harmonic(n: i64, r: u32) -> Result<Rational> {
    if n < 0 {
        return Err(Error::invalid(format!(
            "harmonic number with negative index {n}"
        )));
    }
    Ok(harmonic_table(n as u64, r)?
        .pop()
        .unwrap_or_else(Rational::zero))
}

/// `[H_0^{(r)}, H_1^{(r)}, ..., H_n^{(r)}]`.
pub fn harmonic_table(n: u64, r: u32) -> Result<Vec<Rational>> {
    if r < 1 {
        return Err(Error::invalid("harmonic order must be >= 1"));
    }
    let mut out = Vec::with_capacity(n as usize + 1);
    let mut acc = Rational::zero();
    out.push(acc.clone());
    for j in 1..=n {
        let denom = BigInt::from(j).pow(r);
        acc += Rational::new(BigInt::one(), denom);
        out.push(acc.clone());
    }
    Ok(out)
}

/// `n choose k`, zero outside `0 <= k <= n`.
pub fn binomial(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// Rising factorial `(a)_j = a (a+1) ... (a+j-1)`, with `(a)_0 = 1`.
pub fn pochhammer(a: &Rational, j: u64) -> Rational {
    let mut acc = Rational::one();
    let mut term = a.clone();
    for _ in 0..j {
        if acc.is_zero() {
            break;
        }
        acc *= &term;
        term += Rational::one();
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};
    use proptest::prelude::*;

    /// Row-by-row Pascal triangle, independent of the multiplicative formula.
    fn pascal(n: usize) -> Vec<Vec<BigInt>> {
        let mut rows = vec![vec![BigInt::one()]];
        for i in 1..=n {
            let prev = &rows[i - 1];
            let mut row = vec![BigInt::one(); i + 1];
            for k in 1..i {
                row[k] = &prev[k - 1] + &prev[k];
            }
            rows.push(row);
        }
        rows
    }

    #[test]
    fn harmonic_examples() {
        assert_eq!(harmonic(0, 1).unwrap(), int(0));
        assert_eq!(harmonic(3, 1).unwrap(), rat(11, 6));
        assert_eq!(harmonic(2, 2).unwrap(), rat(5, 4));
    }

    #[test]
    fn harmonic_rejects_bad_input() {
        assert!(harmonic(3, 0).is_err());
        assert!(harmonic(-1, 1).is_err());
    }

    #[test]
    fn binomial_matches_pascal() {
        let rows = pascal(40);
        for (n, row) in rows.iter().enumerate() {
            for (k, v) in row.iter().enumerate() {
                assert_eq!(&binomial(n as u64, k as i64), v, "C({n},{k})");
            }
        }
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(7, 0), BigInt::one());
        assert_eq!(binomial(2, 3), BigInt::zero());
        assert_eq!(binomial(2, -1), BigInt::zero());
    }

    #[test]
    fn pochhammer_examples() {
        assert_eq!(pochhammer(&rat(7, 3), 0), int(1));
        assert_eq!(pochhammer(&int(-3), 4), int(0));
        assert_eq!(pochhammer(&int(2), 3), int(24));
    }

    proptest! {
        #[test]
        fn harmonic_step(n in 1i64..60, r in 1u32..5) {
            let diff = harmonic(n, r).unwrap() - harmonic(n - 1, r).unwrap();
            prop_assert_eq!(diff, Rational::new(BigInt::one(), BigInt::from(n).pow(r)));
        }

        #[test]
        fn pascal_identity(n in 0u64..80, k in -2i64..85) {
            prop_assert_eq!(binomial(n + 1, k), binomial(n, k) + binomial(n, k - 1));
        }

        #[test]
        fn pochhammer_of_negative_integer(n in 0u64..30, j in 0u64..30) {
            prop_assume!(j <= n);
            let lhs = pochhammer(&int(-(n as i64)), j);
            let sign = if j % 2 == 0 { 1 } else { -1 };
            let rhs = Rational::from_integer(sign * factorial(j) * binomial(n, j as i64));
            prop_assert_eq!(lhs, rhs);
        }
    }
}
