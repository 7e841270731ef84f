use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `num / den`; panics on a zero denominator.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// `base^exp` for any integer exponent. Negative exponents of zero are an error.
pub fn pow(base: &Rational, exp: i64) -> Result<Rational> {
    if exp < 0 && base.is_zero() {
        return Err(Error::domain("zero raised to a negative power"));
    }
    let mut acc = Rational::one();
    let mut b = if exp < 0 { base.recip() } else { base.clone() };
    let mut e = exp.unsigned_abs();
    while e > 0 {
        if e & 1 == 1 {
            acc *= &b;
        }
        e >>= 1;
        if e > 0 {
            b = &b * &b;
        }
    }
    Ok(acc)
}

/// Nearest-ish `f64`; saturates to ±inf for values beyond range.
pub fn rational_to_f64(r: &Rational) -> f64 {
    if let Some(v) = r.to_f64() {
        return v;
    }
    if r.is_negative() {
        f64::NEG_INFINITY
    } else {
        f64::INFINITY
    }
}

/// `"num/den"`, or `"num"` for integers.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

/// Accepts `"a/b"` or `"a"` (optional sign). Decimal and float notation is
/// rejected so that exact paths never see a rounded input.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("'{s}' is not a rational of the form a/b"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let is_int = |t: &str| {
        let digits = t.strip_prefix(['-', '+']).unwrap_or(t);
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    };
    if !is_int(num) || !is_int(den) {
        return Err(bad());
    }
    let num: BigInt = num.trim_start_matches('+').parse().map_err(|_| bad())?;
    let den: BigInt = den.trim_start_matches('+').parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(Error::Parse(format!("'{s}' has a zero denominator")));
    }
    Ok(Rational::new(num, den))
}

/// Serde adapter: rationals as `"num/den"` strings.
pub mod serde_rational {
    use super::{format_rational, parse_rational, Rational};
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).map_err(serde::de::Error::custom)
    }
}
