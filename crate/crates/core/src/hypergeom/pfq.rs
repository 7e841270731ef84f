use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{binomial, harmonic_table, int, serde_rational, Polynomial, Rational};

/// `pFq(a_1..a_p; b_1..b_q; x)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PfqSpec {
    #[serde(serialize_with = "ser_vec")]
    pub numerators: Vec<Rational>,
    #[serde(serialize_with = "ser_vec")]
    pub denominators: Vec<Rational>,
    #[serde(with = "serde_rational")]
    pub argument: Rational,
}

fn ser_vec<S: serde::Serializer>(v: &[Rational], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(crate::exact::format_rational))
}

fn nonpositive_integer(a: &Rational) -> Option<u64> {
    if a.is_integer() && !a.is_positive() {
        a.to_integer().abs().to_u64()
    } else {
        None
    }
}

impl PfqSpec {
    pub fn new(numerators: Vec<Rational>, denominators: Vec<Rational>, argument: Rational) -> Self {
        Self {
            numerators,
            denominators,
            argument,
        }
    }

    /// Index of the last possibly nonzero term, if some numerator is a
    /// nonpositive integer.
    pub fn termination(&self) -> Option<u64> {
        self.numerators.iter().filter_map(nonpositive_integer).min()
    }
}

/// Coefficients `c_j = prod (a_i)_j / prod (b_i)_j / j!` of a terminating
/// series, as a polynomial in the argument.
pub fn pfq_polynomial(numerators: &[Rational], denominators: &[Rational]) -> Result<Polynomial> {
    let probe = PfqSpec::new(numerators.to_vec(), denominators.to_vec(), Rational::zero());
    let last = probe.termination().ok_or_else(|| {
        Error::invalid("series does not terminate (no nonpositive integer numerator)")
    })?;
    for b in denominators {
        if let Some(nb) = nonpositive_integer(b) {
            if nb < last {
                return Err(Error::domain(format!(
                    "denominator parameter {b} vanishes before the series terminates"
                )));
            }
        }
    }
    let mut coeffs = Vec::with_capacity(last as usize + 1);
    let mut term = Rational::one();
    coeffs.push(term.clone());
    for j in 0..last {
        let jr = int(j as i64);
        for a in numerators {
            term *= a + &jr;
        }
        for b in denominators {
            term /= b + &jr;
        }
        term /= int(j as i64 + 1);
        coeffs.push(term.clone());
    }
    Ok(Polynomial::new(coeffs))
}

/// Exact value of a terminating generalized hypergeometric series.
pub fn pfq_terminating(spec: &PfqSpec) -> Result<Rational> {
    Ok(pfq_polynomial(&spec.numerators, &spec.denominators)?.eval(&spec.argument))
}

/// `∂/∂ν pF_{p-1}[-ν, ..., -ν; 1, ..., 1; (-1)^p x]` at `ν = n`, as a
/// polynomial in `x`:
///
/// ```text
/// p * sum_{j=0}^{n} C(n,j)^p (H_n - H_{n-j}) x^j
/// ```
///
/// For `p >= 2` every term with `j > n` carries a zero of order `p` at
/// `ν = n` and drops out. `p = 1` is rejected: its tail survives.
pub fn param_derivative_polynomial(p: u32, n: u64) -> Result<Polynomial> {
    if p < 2 {
        return Err(Error::invalid(
            "parameter derivative needs p >= 2 (p = 1 is ln(1+x)(1+x)^n)",
        ));
    }
    let h = harmonic_table(n, 1)?;
    let pr = int(p as i64);
    let coeffs = (0..=n)
        .map(|j| {
            let b = Rational::from_integer(binomial(n, j as i64).pow(p));
            &pr * b * (&h[n as usize] - &h[(n - j) as usize])
        })
        .collect();
    Ok(Polynomial::new(coeffs))
}

pub fn pfq_param_derivative(p: u32, n: u64, x: &Rational) -> Result<Rational> {
    Ok(param_derivative_polynomial(p, n)?.eval(x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn spec(num: &[Rational], den: &[Rational], x: Rational) -> PfqSpec {
        PfqSpec::new(num.to_vec(), den.to_vec(), x)
    }

    #[test]
    fn zero_argument_gives_one() {
        let s = spec(&[int(-4), rat(1, 2)], &[int(3)], int(0));
        assert_eq!(pfq_terminating(&s).unwrap(), int(1));
    }

    #[test]
    fn chu_vandermonde() {
        for n in 0..20i64 {
            let s = spec(&[int(-n), int(-n)], &[int(1)], int(1));
            assert_eq!(
                pfq_terminating(&s).unwrap(),
                Rational::from_integer(binomial(2 * n as u64, n))
            );
        }
    }

    #[test]
    fn zero_numerator_truncates() {
        let s = spec(&[int(1), int(1), int(0)], &[int(2), int(2)], rat(3, 7));
        assert_eq!(pfq_terminating(&s).unwrap(), int(1));
    }

    #[test]
    fn rejects_non_terminating_and_vanishing_denominator() {
        assert!(pfq_terminating(&spec(&[int(1)], &[int(2)], rat(1, 2))).is_err());
        let bad = spec(&[int(-3)], &[int(-1)], int(1));
        assert!(matches!(pfq_terminating(&bad), Err(Error::OutOfDomain(_))));
        // vanishing after termination is harmless
        let ok = spec(&[int(-1)], &[int(-1)], int(1));
        assert_eq!(pfq_terminating(&ok).unwrap(), int(2));
    }

    #[test]
    fn binomial_theorem() {
        // 1F0(-n;;-x) = (1+x)^n
        for n in 0..10i64 {
            let x = rat(2, 3);
            let s = spec(&[int(-n)], &[], -x.clone());
            let expected = crate::exact::pow(&(int(1) + x), n).unwrap();
            assert_eq!(pfq_terminating(&s).unwrap(), expected);
        }
    }

    #[test]
    fn param_derivative_edge_cases() {
        assert_eq!(pfq_param_derivative(2, 0, &rat(5, 3)).unwrap(), int(0));
        assert_eq!(pfq_param_derivative(2, 7, &int(0)).unwrap(), int(0));
        assert!(pfq_param_derivative(1, 3, &int(1)).is_err());
    }

    /// Float series in ν, differentiated by central difference.
    fn pfq_nu_f64(p: u32, nu: f64, x: f64, terms: usize) -> f64 {
        let y = if p.is_multiple_of(2) { x } else { -x };
        let mut sum = 0.0;
        let mut ratio = 1.0f64; // (-ν)_j / j!
        let mut yj = 1.0;
        for j in 0..terms {
            sum += ratio.powi(p as i32) * yj;
            ratio *= (-nu + j as f64) / (j as f64 + 1.0);
            yj *= y;
        }
        sum
    }

    #[test]
    fn param_derivative_matches_finite_difference() {
        let h = 1e-6;
        for n in 0..=10u64 {
            for x in [rat(1, 2), rat(-1, 3), rat(1, 4)] {
                let xf = crate::exact::rational_to_f64(&x);
                let fd = (pfq_nu_f64(2, n as f64 + h, xf, n as usize + 60)
                    - pfq_nu_f64(2, n as f64 - h, xf, n as usize + 60))
                    / (2.0 * h);
                let exact = crate::exact::rational_to_f64(&pfq_param_derivative(2, n, &x).unwrap());
                assert!(
                    (fd - exact).abs() < 1e-6 * exact.abs().max(1.0),
                    "n={n} x={x}: fd={fd} exact={exact}"
                );
            }
        }
    }
}
