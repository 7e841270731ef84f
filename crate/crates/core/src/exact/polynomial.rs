use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use super::rational::{format_rational, int, rational_to_f64, Rational};
use crate::error::{Error, Result};

/// Dense univariate polynomial with exact rational coefficients.
///
/// `coeffs[k]` multiplies `x^k`. Trailing zeros are always trimmed, so the
/// zero polynomial has an empty coefficient vector and `degree() == None`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// `c x^k`
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    /// The identity polynomial `x`.
    pub fn x() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    /// `a + b x`
    pub fn linear(a: Rational, b: Rational) -> Self {
        Self::new(vec![a, b])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    /// `None` stands for the degree of the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + rational_to_f64(c))
    }

    pub fn to_f64_coeffs(&self) -> Vec<f64> {
        self.coeffs.iter().map(rational_to_f64).collect()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * int(k as i64))
                .collect(),
        )
    }

    pub fn nth_derivative(&self, k: usize) -> Self {
        (0..k).fold(self.clone(), |p, _| p.derivative())
    }

    /// `x d/dx`: multiplies coefficient `k` by `k`.
    pub fn x_d_dx(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| c * int(k as i64))
                .collect(),
        )
    }

    /// `p(c x)`
    pub fn scale_arg(&self, c: &Rational) -> Self {
        let mut factor = Rational::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            out.push(a * &factor);
            factor *= c;
        }
        Self::new(out)
    }

    /// `p(q(x))` by Horner's scheme.
    pub fn compose(&self, inner: &Polynomial) -> Self {
        self.coeffs.iter().rev().fold(Polynomial::zero(), |acc, c| {
            &(&acc * inner) + &Polynomial::constant(c.clone())
        })
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Polynomial::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Euclidean division: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Polynomial) -> Result<(Polynomial, Polynomial)> {
        let dd = divisor
            .degree()
            .ok_or_else(|| Error::invalid("polynomial division by zero"))?;
        let lead = divisor.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree() else {
            return Ok((Polynomial::zero(), Polynomial::zero()));
        };
        if nd < dd {
            return Ok((Polynomial::zero(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let c = &rem[k + dd] / &lead;
            if !c.is_zero() {
                for (i, d) in divisor.coeffs.iter().enumerate() {
                    rem[k + i] -= &c * d;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((Polynomial::new(quot), Polynomial::new(rem)))
    }

    /// Exact quotient by `divisor`; errors if the remainder is nonzero.
    pub fn div_exact(&self, divisor: &Polynomial) -> Result<Polynomial> {
        let (q, r) = self.div_rem(divisor)?;
        if !r.is_zero() {
            return Err(Error::Inconsistency(format!(
                "division by {divisor} leaves remainder {r}"
            )));
        }
        Ok(q)
    }

    /// `q` with `q(t) (t - 1) = p(t)`; requires `p(1) = 0`.
    ///
    /// Synthetic division: `q_{k-1} = sum_{i >= k} p_i`.
    pub fn divide_by_t_minus_one(&self) -> Result<Polynomial> {
        let at_one: Rational = self.coeffs.iter().sum();
        if !at_one.is_zero() {
            return Err(Error::NonRemovablePole(format_rational(&at_one)));
        }
        let n = self.coeffs.len();
        if n == 0 {
            return Ok(Polynomial::zero());
        }
        let mut out = vec![Rational::zero(); n - 1];
        let mut acc = Rational::zero();
        for k in (1..n).rev() {
            acc += &self.coeffs[k];
            out[k - 1] = acc.clone();
        }
        Ok(Polynomial::new(out))
    }

    /// `∫_0^1 p(t) dt`
    pub fn integrate_unit(&self) -> Rational {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| c / int(k as i64 + 1))
            .sum()
    }

    /// Unique polynomial of degree `< points.len()` through the given nodes
    /// (Newton divided differences). Nodes must be distinct.
    pub fn interpolate(points: &[(Rational, Rational)]) -> Result<Polynomial> {
        let n = points.len();
        let mut dd: Vec<Rational> = points.iter().map(|(_, y)| y.clone()).collect();
        for level in 1..n {
            for i in (level..n).rev() {
                let dx = &points[i].0 - &points[i - level].0;
                if dx.is_zero() {
                    return Err(Error::invalid("interpolation nodes must be distinct"));
                }
                dd[i] = (&dd[i] - &dd[i - 1]) / dx;
            }
        }
        let mut acc = Polynomial::zero();
        for i in (0..n).rev() {
            let factor = Polynomial::linear(-points[i].0.clone(), Rational::one());
            acc = &(&acc * &factor) + &Polynomial::constant(dd[i].clone());
        }
        Ok(acc)
    }

    /// `(1 - x)^n p((1 + x)/(1 - x))` for `deg p <= n`, expanded as a polynomial.
    pub fn mobius_homogenize(&self, n: usize) -> Result<Polynomial> {
        if self.degree().is_some_and(|d| d > n) {
            return Err(Error::invalid(
                "homogenization degree below polynomial degree",
            ));
        }
        let one_plus = Polynomial::linear(Rational::one(), Rational::one());
        let one_minus = Polynomial::linear(Rational::one(), -Rational::one());
        let mut acc = Polynomial::zero();
        for (k, c) in self.coeffs.iter().enumerate() {
            let term = &one_plus.pow(k as u32) * &one_minus.pow((n - k) as u32);
            acc = &acc + &term.scale(c);
        }
        Ok(acc)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = k == 0 || !mag.is_one();
            if show_coeff {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "{}x", if show_coeff { "*" } else { "" })?,
                _ => write!(f, "{}x^{k}", if show_coeff { "*" } else { "" })?,
            }
        }
        Ok(())
    }
}

impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.coeffs.len()))?;
        for c in &self.coeffs {
            seq.serialize_element(&format_rational(c))?;
        }
        seq.end()
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
