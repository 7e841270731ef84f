//! Brute-force reference sums. Everything else in the crate is checked
//! against these.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{
    binomial, harmonic, harmonic_table, int, pow, serde_rational, Polynomial, Rational,
};

/// Parameters of `S_n^{(p)}(q, r, m, z) = sum_j j^p [H_j^{(q)}]^m C(n,j)^r z^j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SumSpec {
    pub n: u64,
    pub p: u32,
    pub q: u32,
    pub r: u32,
    pub m: u32,
    #[serde(with = "serde_rational")]
    pub z: Rational,
}

impl SumSpec {
    /// The linear family `q = r = m = 1`.
    pub fn simple(n: u64, p: u32, z: Rational) -> Self {
        Self {
            n,
            p,
            q: 1,
            r: 1,
            m: 1,
            z,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.q < 1 || self.r < 1 || self.m < 1 {
            return Err(Error::invalid("q, r and m must be positive"));
        }
        Ok(())
    }
}

/// Parameters of `S_n(M, p, q, r, z) = sum_{m=2}^n m^p C(n,m)^r [H_M^{(m)}]^q z^m`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrderSumSpec {
    pub n: u64,
    pub big_m: u64,
    pub p: u32,
    pub q: u32,
    pub r: u32,
    #[serde(with = "serde_rational")]
    pub z: Rational,
}

impl OrderSumSpec {
    /// `p = 0, q = r = 1`: the plain order sum.
    pub fn plain(n: u64, big_m: u64, z: Rational) -> Self {
        Self {
            n,
            big_m,
            p: 0,
            q: 1,
            r: 1,
            z,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n < 2 {
            return Err(Error::invalid("order sums need n >= 2"));
        }
        if self.big_m < 1 || self.q < 1 || self.r < 1 {
            return Err(Error::invalid("M, q and r must be positive"));
        }
        Ok(())
    }
}

pub fn s_general(spec: &SumSpec) -> Result<Rational> {
    spec.validate()?;
    let h = harmonic_table(spec.n, spec.q)?;
    s_general_with_harmonics(spec, &h)
}

/// `s_general` with caller-supplied `h[j] = H_j^{(q)}`, `j = 0..=n`.
///
/// Used by the verifier's fault-injection hook; ordinary callers want
/// [`s_general`].
pub fn s_general_with_harmonics(spec: &SumSpec, h: &[Rational]) -> Result<Rational> {
    spec.validate()?;
    if h.len() <= spec.n as usize {
        return Err(Error::invalid("harmonic table too short"));
    }
    let mut total = Rational::zero();
    let mut zj = Rational::one();
    for j in 0..=spec.n {
        // j = 0: 0^p = 0 for p >= 1, and H_0 = 0 covers p = 0.
        if j > 0 {
            let weight = int(j as i64).pow(spec.p as i32)
                * pow(&h[j as usize], spec.m as i64)?
                * Rational::from_integer(binomial(spec.n, j as i64).pow(spec.r));
            total += weight * &zj;
        }
        zj *= &spec.z;
    }
    Ok(total)
}

/// `S_n^{(p)}(z)`: the `q = r = m = 1` sums.
pub fn s_simple(n: u64, p: u32, z: &Rational) -> Result<Rational> {
    s_general(&SumSpec::simple(n, p, z.clone()))
}

pub fn order_sum(spec: &OrderSumSpec) -> Result<Rational> {
    spec.validate()?;
    let h: Vec<Rational> = (0..=spec.n)
        .map(|m| {
            if m < 2 {
                Ok(Rational::zero())
            } else {
                harmonic(spec.big_m as i64, m as u32)
            }
        })
        .collect::<Result<_>>()?;
    order_sum_with_harmonics(spec, &h)
}

/// `order_sum` with caller-supplied `h[m] = H_M^{(m)}`, `m = 0..=n`.
pub fn order_sum_with_harmonics(spec: &OrderSumSpec, h: &[Rational]) -> Result<Rational> {
    spec.validate()?;
    let mut total = Rational::zero();
    for m in 2..=spec.n {
        total += int(m as i64).pow(spec.p as i32)
            * Rational::from_integer(binomial(spec.n, m as i64).pow(spec.r))
            * pow(&h[m as usize], spec.q as i64)?
            * pow(&spec.z, m as i64)?;
    }
    Ok(total)
}

/// `S_n^{(p)}(q, r, m, ·)` as a polynomial in `z`.
pub fn s_as_polynomial(n: u64, p: u32, q: u32, r: u32, m: u32) -> Result<Polynomial> {
    let spec = SumSpec {
        n,
        p,
        q,
        r,
        m,
        z: Rational::zero(),
    };
    spec.validate()?;
    let h = harmonic_table(n, q)?;
    let coeffs = (0..=n)
        .map(|j| {
            if j == 0 {
                return Ok(Rational::zero());
            }
            Ok(int(j as i64).pow(p as i32)
                * pow(&h[j as usize], m as i64)?
                * Rational::from_integer(binomial(n, j as i64).pow(r)))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Polynomial::new(coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, Polynomial};
    use proptest::prelude::*;

    fn general(n: u64, p: u32, q: u32, r: u32, m: u32, z: Rational) -> Rational {
        s_general(&SumSpec { n, p, q, r, m, z }).unwrap()
    }

    #[test]
    fn general_examples() {
        assert_eq!(general(1, 0, 1, 1, 1, rat(3, 7)), rat(3, 7));
        assert_eq!(general(2, 0, 1, 1, 1, int(1)), rat(7, 2));
        assert_eq!(general(2, 0, 1, 2, 1, int(1)), rat(11, 2));
    }

    #[test]
    fn simple_examples() {
        for n in 1..6 {
            assert_eq!(s_simple(n, 2, &int(0)).unwrap(), int(0));
        }
        assert_eq!(s_simple(2, 0, &int(-1)).unwrap(), rat(-1, 2));
        assert_eq!(s_simple(2, 1, &int(1)).unwrap(), int(5));
    }

    #[test]
    fn order_sum_examples() {
        assert_eq!(
            order_sum(&OrderSumSpec::plain(2, 2, int(1))).unwrap(),
            rat(5, 4)
        );
        assert_eq!(
            order_sum(&OrderSumSpec::plain(2, 1, rat(2, 5))).unwrap(),
            rat(4, 25)
        );
        assert_eq!(
            order_sum(&OrderSumSpec::plain(3, 1, int(1))).unwrap(),
            int(4)
        );
        assert!(order_sum(&OrderSumSpec::plain(1, 1, int(1))).is_err());
    }

    #[test]
    fn polynomial_examples() {
        assert_eq!(s_as_polynomial(1, 0, 1, 1, 1).unwrap(), Polynomial::x());
        assert_eq!(
            s_as_polynomial(2, 0, 1, 1, 1).unwrap(),
            Polynomial::new(vec![int(0), int(2), rat(3, 2)])
        );
        assert!(s_as_polynomial(0, 0, 1, 1, 1).unwrap().is_zero());
        assert!(s_as_polynomial(0, 3, 1, 1, 1).unwrap().is_zero());
    }

    #[test]
    fn rejects_invalid_orders() {
        assert!(s_general(&SumSpec {
            n: 2,
            p: 0,
            q: 0,
            r: 1,
            m: 1,
            z: int(1)
        })
        .is_err());
        assert!(s_as_polynomial(2, 0, 1, 0, 1).is_err());
    }

    #[test]
    fn z_derivative_recursion() {
        for n in 0..=20 {
            for p in 0..3 {
                for (q, r, m) in [(1, 1, 1), (2, 1, 1), (1, 2, 1), (1, 1, 2)] {
                    let lhs = s_as_polynomial(n, p, q, r, m).unwrap().x_d_dx();
                    let rhs = s_as_polynomial(n, p + 1, q, r, m).unwrap();
                    assert_eq!(lhs, rhs, "n={n} p={p} q={q} r={r} m={m}");
                }
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]
        #[test]
        fn general_reduces_to_simple(n in 0u64..12, p in 0u32..4, a in -9i64..10, b in 1i64..10) {
            let z = rat(a, b);
            prop_assert_eq!(general(n, p, 1, 1, 1, z.clone()), s_simple(n, p, &z).unwrap());
        }
    }

    proptest! {
        #[test]
        fn vanishes_at_zero(n in 1u64..15, p in 0u32..4, q in 1u32..3, r in 1u32..3, m in 1u32..3) {
            prop_assert_eq!(general(n, p, q, r, m, int(0)), int(0));
        }

        #[test]
        fn polynomial_evaluates_to_sum(n in 0u64..10, p in 0u32..3, a in -5i64..6, b in 1i64..5) {
            let z = rat(a, b);
            let poly = s_as_polynomial(n, p, 2, 2, 1).unwrap();
            prop_assert_eq!(poly.eval(&z), general(n, p, 2, 2, 1, z));
        }
    }
}
