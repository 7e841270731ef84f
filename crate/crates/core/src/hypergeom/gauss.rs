use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{binomial, int, pow, rational_to_f64, serde_rational, Rational};

/// Argument of [`hyp2f1_11`]: exact arguments additionally get a log-form record.
#[derive(Clone, Debug, PartialEq)]
pub enum HypArg {
    Exact(Rational),
    Float(f64),
}

impl From<Rational> for HypArg {
    fn from(r: Rational) -> Self {
        HypArg::Exact(r)
    }
}

impl From<&Rational> for HypArg {
    fn from(r: &Rational) -> Self {
        HypArg::Exact(r.clone())
    }
}

impl From<f64> for HypArg {
    fn from(x: f64) -> Self {
        HypArg::Float(x)
    }
}

/// `rational_part + log_coefficient * ln(log_argument)`, all exact.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LogForm {
    #[serde(with = "serde_rational")]
    pub rational_part: Rational,
    #[serde(with = "serde_rational")]
    pub log_coefficient: Rational,
    #[serde(with = "serde_rational")]
    pub log_argument: Rational,
}

impl LogForm {
    /// Naive `f64` evaluation; cancels badly for large `m` and small `|w|`.
    pub fn to_f64(&self) -> f64 {
        let log = if self.log_coefficient.is_zero() {
            0.0
        } else {
            rational_to_f64(&self.log_argument).ln()
        };
        rational_to_f64(&self.rational_part) + rational_to_f64(&self.log_coefficient) * log
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Hyp2f1Value {
    pub value: f64,
    pub log_form: Option<LogForm>,
}

const MAX_TERMS: usize = 10_000_000;

/// `2F1(1, 1; m; w)` for integer `m >= 2` and `w < 1`, plus Gauss's value
/// `(m-1)/(m-2)` at `w = 1` for `m >= 3`.
pub fn hyp2f1_11(m: u64, w: impl Into<HypArg>) -> Result<Hyp2f1Value> {
    if m < 2 {
        return Err(Error::invalid("2F1(1,1;m;w) needs m >= 2"));
    }
    match w.into() {
        HypArg::Float(x) => Ok(Hyp2f1Value {
            value: series_f64(m, x)?,
            log_form: None,
        }),
        HypArg::Exact(r) => {
            let log_form = hyp2f1_11_log_form(m, &r)?;
            let value = series_f64(m, rational_to_f64(&r))?;
            Ok(Hyp2f1Value {
                value,
                log_form: Some(log_form),
            })
        }
    }
}

fn series_f64(m: u64, w: f64) -> Result<f64> {
    if w.is_nan() {
        return Err(Error::invalid("NaN argument"));
    }
    if w > 1.0 {
        return Err(Error::Divergent(format!("2F1(1,1;{m};{w}) for w > 1")));
    }
    if w == 1.0 {
        if m >= 3 {
            return Ok((m - 1) as f64 / (m - 2) as f64);
        }
        return Err(Error::Divergent("2F1(1,1;2;1)".into()));
    }
    let mf = m as f64;
    if w >= 0.0 {
        // sum_k k! / (m)_k w^k
        sum_series(|k, t| t * (k + 1.0) / (mf + k) * w)
    } else {
        // Pfaff: (1-w)^{-1} 2F1(1, m-1; m; w/(w-1)), argument in (0, 1).
        let u = w / (w - 1.0);
        let s = sum_series(|k, t| t * (mf - 1.0 + k) / (mf + k) * u)?;
        Ok(s / (1.0 - w))
    }
}

/// Sums a positive-ratio series starting at 1 given the term recurrence.
fn sum_series(next: impl Fn(f64, f64) -> f64) -> Result<f64> {
    let mut sum = 1.0;
    let mut term = 1.0;
    for k in 0..MAX_TERMS {
        term = next(k as f64, term);
        sum += term;
        if term.abs() <= f64::EPSILON * 0.25 * sum.abs() {
            return Ok(sum);
        }
    }
    Err(Error::Divergent(
        "series did not converge within the term budget".into(),
    ))
}

/// Exact log form of `2F1(1,1;m;w)`, from
/// `(m-1) ∫_0^1 (1-s)^{m-2} / (1 - w s) ds`; with `c = 1 - w`:
///
/// ```text
/// (m-1)/w^{m-1} [ -(-c)^{m-2} ln c + sum_{i=1}^{m-2} C(m-2,i) (-c)^{m-2-i} (1 - c^i)/i ]
/// ```
pub fn hyp2f1_11_log_form(m: u64, w: &Rational) -> Result<LogForm> {
    if m < 2 {
        return Err(Error::invalid("2F1(1,1;m;w) needs m >= 2"));
    }
    let one = Rational::one();
    if w.is_zero() {
        return Ok(LogForm {
            rational_part: one.clone(),
            log_coefficient: Rational::zero(),
            log_argument: one,
        });
    }
    if *w > one || (*w == one && m < 3) {
        return Err(Error::Divergent(format!("2F1(1,1;{m};{w})")));
    }
    let c = &one - w;
    let neg_c = -c.clone();
    let scale = int(m as i64 - 1) / pow(w, m as i64 - 1)?;
    let mut rational_part = Rational::zero();
    for i in 1..=m - 2 {
        let b = Rational::from_integer(binomial(m - 2, i as i64));
        rational_part +=
            b * pow(&neg_c, (m - 2 - i) as i64)? * (&one - pow(&c, i as i64)?) / int(i as i64);
    }
    let log_coefficient = if c.is_zero() {
        Rational::zero()
    } else {
        -pow(&neg_c, (m - 2) as i64)? * &scale
    };
    Ok(LogForm {
        rational_part: rational_part * &scale,
        log_coefficient,
        log_argument: if c.is_zero() { one } else { c },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn gauss_value_at_one() {
        for n in 1..20u64 {
            let v = hyp2f1_11(n + 2, int(1)).unwrap();
            assert_eq!(v.value, (n + 1) as f64 / n as f64);
            let lf = v.log_form.unwrap();
            assert_eq!(lf.rational_part, rat(n as i64 + 1, n as i64));
            assert!(lf.log_coefficient.is_zero());
        }
        assert!(hyp2f1_11(2, int(1)).is_err());
        assert!(hyp2f1_11(5, 1.5).is_err());
    }

    #[test]
    fn m_two_is_a_logarithm() {
        for w in [0.5, -0.5, -3.0, 0.9, 1e-3] {
            let expected = -(1.0f64 - w).ln() / w;
            let got = hyp2f1_11(2, w).unwrap().value;
            assert!((got - expected).abs() < 1e-12, "w={w}: {got} vs {expected}");
        }
        let lf = hyp2f1_11_log_form(2, &rat(1, 2)).unwrap();
        assert_eq!(lf.rational_part, int(0));
        assert_eq!(lf.log_coefficient, int(-2));
        assert_eq!(lf.log_argument, rat(1, 2));
    }

    #[test]
    fn value_at_minus_one() {
        // (n+1)(2^n ln 2 - 2^n sum_{j<=n} 1/(j 2^j))
        for n in 1..15i64 {
            let sigma: Rational = (1..=n).map(|j| rat(1, j * (1 << j))).sum();
            let two_n = pow(&int(2), n).unwrap();
            let lf = hyp2f1_11_log_form(n as u64 + 2, &int(-1)).unwrap();
            assert_eq!(lf.log_argument, int(2));
            assert_eq!(lf.log_coefficient, int(n + 1) * &two_n);
            assert_eq!(lf.rational_part, -int(n + 1) * &two_n * &sigma);
            let expected = (n + 1) as f64
                * (2f64.powi(n as i32) * 2f64.ln() - 2f64.powi(n as i32) * rational_to_f64(&sigma));
            let got = hyp2f1_11(n as u64 + 2, -1.0).unwrap().value;
            // the reference subtracts two quantities of size (n+1) 2^n ln 2
            let scale = (n + 1) as f64 * 2f64.powi(n as i32);
            assert!((got - expected).abs() <= 1e-12 * scale, "n={n}");
        }
    }

    #[test]
    fn log_form_agrees_with_series() {
        for m in 2..8u64 {
            for w in [
                rat(1, 2),
                rat(-1, 2),
                rat(-2, 1),
                rat(-3, 1),
                rat(3, 4),
                rat(-1, 1),
            ] {
                let v = hyp2f1_11(m, &w).unwrap();
                let lf = v.log_form.clone().unwrap().to_f64();
                assert!(
                    (v.value - lf).abs() < 1e-11 * v.value.abs().max(1.0),
                    "m={m} w={w}: {} vs {lf}",
                    v.value
                );
            }
        }
    }

    #[test]
    fn zero_argument() {
        let v = hyp2f1_11(9, int(0)).unwrap();
        assert_eq!(v.value, 1.0);
        assert_eq!(v.log_form.unwrap().rational_part, int(1));
    }
}
