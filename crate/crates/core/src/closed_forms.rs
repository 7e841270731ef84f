//! Closed and semi-closed expressions for the sums.
//!
//! Exact wherever the expression is rational in `z`; the forms involving
//! `2F1(1,1;m;w)` and a logarithm come back as `f64` in [`ClosedFormValue`].

use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{
    binomial, harmonic, harmonic_table, int, pochhammer, pow, rat, rational_to_f64, Rational,
};
use crate::hypergeom::{
    hyp2f1_11, legendre_p, param_derivative_polynomial, pfq_polynomial, r_limit_combination, r_n,
};
use crate::recursions::{beta, s_recursive_trace};
use crate::verify::{IdentityReport, Outcome, PointResult};

/// Stable identifiers of the closed forms, used in reports and CLI output.
pub mod formula {
    pub const S_AT_ONE: &str = "s-at-one";
    pub const S_LOG_FORM: &str = "s-log-form";
    pub const S1_LOG_FORM: &str = "s1-log-form";
    pub const S_VIA_3F2: &str = "s-via-3f2";
    pub const SP_VIA_3F2: &str = "sp-via-3f2";
    pub const SP_AT_ONE: &str = "sp-at-one";
    pub const BINOMIAL_POWER: &str = "binomial-power-param-derivative";
    pub const SQUARED_BINOMIAL_LEGENDRE: &str = "squared-binomial-legendre";
    pub const ORDER_SUM: &str = "order-sum";
    pub const ORDER_SUM_SHIFTED: &str = "order-sum-shifted-series";
    pub const INTEGRATED_ORDER_SUM: &str = "integrated-order-sum";
    pub const ORDER_SUM_HALF_DIFFERENCE: &str = "order-sum-half-difference";
    pub const Q_N: &str = "q-n";
    pub const HARMONIC_PORTION: &str = "harmonic-portion-conjecture";
}

/// Tolerance between the exact and the numeric part of a [`ClosedFormValue`]
/// when both are present: `|a - b| <= REL_TOL * max(1, |b|)`.
pub const REL_TOL: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClosedFormValue {
    pub formula: &'static str,
    #[serde(serialize_with = "serialize_opt_rational")]
    pub exact: Option<Rational>,
    pub numeric: Option<f64>,
}

fn serialize_opt_rational<S: serde::Serializer>(
    r: &Option<Rational>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match r {
        Some(r) => s.serialize_some(&crate::exact::format_rational(r)),
        None => s.serialize_none(),
    }
}

impl ClosedFormValue {
    fn exact(formula: &'static str, value: Rational) -> Self {
        let numeric = Some(rational_to_f64(&value));
        ClosedFormValue {
            formula,
            exact: Some(value),
            numeric,
        }
    }

    fn numeric(formula: &'static str, value: f64) -> Self {
        ClosedFormValue {
            formula,
            exact: None,
            numeric: Some(value),
        }
    }

    pub fn to_f64(&self) -> f64 {
        match (&self.exact, self.numeric) {
            (_, Some(x)) => x,
            (Some(r), None) => rational_to_f64(r),
            (None, None) => f64::NAN,
        }
    }
}

pub fn within_rel_tol(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * b.abs().max(1.0)
}

fn require(cond: bool, msg: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::invalid(msg))
    }
}

fn binom(n: u64, k: u64) -> Rational {
    Rational::from_integer(binomial(n, k as i64))
}

/// `sum_{j=1}^n 1/(j 2^j)`
fn half_power_harmonic(n: u64) -> Rational {
    let mut acc = Rational::zero();
    let mut two_j = BigInt::one();
    for j in 1..=n {
        two_j *= 2;
        acc += Rational::new(BigInt::one(), &two_j * j);
    }
    acc
}

/// `S_n(1) = 2^n (H_n - sum_{j=1}^n 1/(j 2^j))`.
pub fn s_n_at_1(n: u64) -> Result<Rational> {
    require(n >= 1, "n >= 1 required")?;
    Ok(pow(&int(2), n as i64)? * (harmonic(n as i64, 1)? - half_power_harmonic(n)))
}

/// The log form of `S_n(z)`:
///
/// ```text
/// (1+z)^n [ H_n + 2F1(1,1;n+2;-1/z) / (z (z+1)^n (n+1)) + ln(z/(z+1)) ]
/// ```
///
/// valid for `z > 0` and `z < -1`; `z = -1` is exactly `-1/n`.
pub fn s_n_of_z(n: u64, z: &Rational) -> Result<ClosedFormValue> {
    require(n >= 1, "n >= 1 required")?;
    if *z == -Rational::one() {
        return Ok(ClosedFormValue::exact(
            formula::S_LOG_FORM,
            rat(-1, n as i64),
        ));
    }
    check_log_domain(z)?;
    let numeric = s_log_form_f64(n, rational_to_f64(z))?;
    let mut value = ClosedFormValue::numeric(formula::S_LOG_FORM, numeric);
    if z.is_one() {
        let exact = s_n_at_1(n)?;
        let e = rational_to_f64(&exact);
        if !within_rel_tol(numeric, e, REL_TOL) {
            return Err(Error::Inconsistency(format!(
                "log form {numeric} vs exact S_{n}(1) = {e}"
            )));
        }
        value.exact = Some(exact);
    }
    Ok(value)
}

fn check_log_domain(z: &Rational) -> Result<()> {
    if z.is_positive() || *z < -Rational::one() {
        Ok(())
    } else {
        Err(Error::domain(format!(
            "log form needs z > 0 or z < -1 (2F1 argument -1/z < 1), got z = {z}"
        )))
    }
}

fn s_log_form_f64(n: u64, z: f64) -> Result<f64> {
    let f = hyp2f1_11(n + 2, -1.0 / z)?.value;
    let h = rational_to_f64(&harmonic(n as i64, 1)?);
    let zp1 = 1.0 + z;
    let zp1n = zp1.powi(n as i32);
    Ok(zp1n * (h + f / (z * zp1n * (n as f64 + 1.0)) + (z / zp1).ln()))
}

/// `S_n^{(1)}(z)` in product form,
///
/// ```text
/// n z (1+z)^{n-1} [ H_{n-1} + 2F1(1,1;n+1;-1/z) / (z (z+1)^{n-1} n) + ln(z/(z+1)) ]
///   + (1+z)^n - 1
/// ```
///
/// cross-checked against `n z S_{n-1}(z) + (1+z)^n - 1` built on [`s_n_of_z`].
pub fn s1_n_of_z(n: u64, z: &Rational) -> Result<ClosedFormValue> {
    require(n >= 1, "n >= 1 required")?;
    if *z == -Rational::one() {
        let v = if n == 1 {
            int(-1)
        } else {
            rat(1, n as i64 - 1)
        };
        return Ok(ClosedFormValue::exact(formula::S1_LOG_FORM, v));
    }
    check_log_domain(z)?;
    let zf = rational_to_f64(z);
    let nf = n as f64;
    let zp1 = 1.0 + zf;
    let f = hyp2f1_11(n + 1, -1.0 / zf)?.value;
    let h = rational_to_f64(&harmonic(n as i64 - 1, 1)?);
    let bracket = h + f / (zf * zp1.powi(n as i32 - 1) * nf) + (zf / zp1).ln();
    let product = nf * zf * zp1.powi(n as i32 - 1) * bracket + zp1.powi(n as i32) - 1.0;

    let lower = if n == 1 {
        0.0
    } else {
        s_log_form_f64(n - 1, zf)?
    };
    let via_recursion = nf * zf * lower + zp1.powi(n as i32) - 1.0;
    if !within_rel_tol(product, via_recursion, REL_TOL) {
        return Err(Error::Inconsistency(format!(
            "product form {product} vs recursion {via_recursion}"
        )));
    }
    Ok(ClosedFormValue::numeric(formula::S1_LOG_FORM, product))
}

/// `3F2(1, 1, 1-n; 2, 2; w)`
fn three_f_two(n: u64, w: &Rational) -> Result<Rational> {
    Ok(pfq_polynomial(&[int(1), int(1), int(1 - n as i64)], &[int(2), int(2)])?.eval(w))
}

/// `S_n(z) = n z (1+z)^{n-1} 3F2(1,1,1-n; 2,2; z/(1+z))`; `-1/n` at `z = -1`.
pub fn s_via_3f2(n: u64, z: &Rational) -> Result<Rational> {
    require(n >= 1, "n >= 1 required")?;
    let zp1 = Rational::one() + z;
    if zp1.is_zero() {
        return Ok(rat(-1, n as i64));
    }
    let f = three_f_two(n, &(z / &zp1))?;
    Ok(int(n as i64) * z * pow(&zp1, n as i64 - 1)? * f)
}

/// `S_n^{(1)}(z)` and `S_n^{(2)}(z)` from the `3F2` form:
///
/// ```text
/// S^{(1)} = (1+z)^{n-2} { 1 + z - (1+z)^{1-n} + n^2 z^2 F }
/// S^{(2)} = z (1+z)^{n-3} { (1+z) [2n - 1 + (1-n)(1+z)^{-n}] + n^2 z (1 + n z) F }
/// ```
pub fn sp_via_3f2(n: u64, z: &Rational, p: u32) -> Result<Rational> {
    require(n >= 1, "n >= 1 required")?;
    let ni = n as i64;
    let zp1 = Rational::one() + z;
    if zp1.is_zero() {
        return match (p, n) {
            (1, 1) | (2, 1) => Ok(int(-1)),
            (1, _) => Ok(rat(1, ni - 1)),
            (2, 2) => Ok(int(4)),
            (2, _) => Ok(rat(-ni, (ni - 1) * (ni - 2))),
            _ => Err(Error::invalid("only p = 1 or p = 2")),
        };
    }
    let f = three_f_two(n, &(z / &zp1))?;
    let nn = int(ni);
    match p {
        1 => {
            let brace = &zp1 - pow(&zp1, 1 - ni)? + &nn * &nn * z * z * f;
            Ok(pow(&zp1, ni - 2)? * brace)
        }
        2 => {
            let first = &zp1 * (int(2 * ni - 1) + int(1 - ni) * pow(&zp1, -ni)?);
            let second = &nn * &nn * z * (Rational::one() + &nn * z) * f;
            Ok(z * pow(&zp1, ni - 3)? * (first + second))
        }
        _ => Err(Error::invalid("only p = 1 or p = 2")),
    }
}

/// `S_n^{(p)}(1)` for `p = 0, 1, 2` in harmonic numbers and
/// `T_k = sum_{j=1}^k 1/(j 2^j)`:
///
/// ```text
/// p = 0:  2^n (H_n - T_n)
/// p = 1:  n 2^{n-1} (H_{n-1} - T_{n-1}) - 1 + 2^n
/// p = 2:  2^{n-2} { n(n+1) (H_{n-2} - T_{n-2}) + [2n(1 - 2^{-n}) - 1] 2n/(n-1) }
/// ```
pub fn sp_at_one(n: u64, p: u32) -> Result<Rational> {
    let ni = n as i64;
    let two = int(2);
    let bracket =
        |k: u64| -> Result<Rational> { Ok(harmonic(k as i64, 1)? - half_power_harmonic(k)) };
    match p {
        0 => s_n_at_1(n),
        1 => {
            require(n >= 1, "n >= 1 required")?;
            Ok(int(ni) * pow(&two, ni - 1)? * bracket(n - 1)? - Rational::one() + pow(&two, ni)?)
        }
        2 => {
            require(n >= 2, "p = 2 form needs n >= 2")?;
            let tail = (int(2 * ni) * (Rational::one() - pow(&two, -ni)?) - Rational::one())
                * rat(2 * ni, ni - 1);
            Ok(pow(&two, ni - 2)? * (int(ni * (ni + 1)) * bracket(n - 2)? + tail))
        }
        _ => Err(Error::invalid("only p = 0, 1, 2")),
    }
}

/// `sum_j C(n,j)^p H_j x^{-j}` from the parameter derivative of
/// `pF_{p-1}(-ν, ..., -ν; 1, ..., 1; (-1)^p x)` at `ν = n`:
///
/// ```text
/// -(x^{-n}/p) ∂_ν pF_{p-1} + H_n x^{-n} pF_{p-1}(-n, ..., -n; 1, ..., 1; (-1)^p x)
/// ```
pub fn binomial_power_sum(n: u64, p: u32, x: &Rational) -> Result<Rational> {
    require(p >= 2, "binomial power form needs p >= 2")?;
    if x.is_zero() {
        return Err(Error::domain("x = 0 (the sum is taken at 1/x)"));
    }
    let deriv = param_derivative_polynomial(p, n)?.eval(x);
    let nums = vec![int(-(n as i64)); p as usize];
    let dens = vec![int(1); p as usize - 1];
    let sign = if p.is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    };
    let series = pfq_polynomial(&nums, &dens)?.eval(&(sign * x));
    let x_neg_n = pow(x, -(n as i64))?;
    Ok(-(&x_neg_n / int(p as i64)) * deriv + harmonic(n as i64, 1)? * x_neg_n * series)
}

/// `sum_j C(n,j)^2 H_j x^{-j}` through Legendre functions:
///
/// ```text
/// -(x^{-n}/2) (1-x)^n R_n((1+x)/(1-x)) + H_n x^{-n} (1-x)^n P_n((1+x)/(1-x))
/// ```
///
/// At `x = 1` both products are replaced by their limits,
/// [`r_limit_combination`] and `C(2n, n)`.
pub fn squared_binomial_sum_legendre(n: u64, x: &Rational) -> Result<Rational> {
    if x.is_zero() {
        return Err(Error::domain("x = 0 (the sum is taken at 1/x)"));
    }
    if n == 0 {
        return Ok(Rational::zero());
    }
    let nu = n as usize;
    let (r_part, p_part) = if x.is_one() {
        (r_limit_combination(nu)?, binom(2 * n, n))
    } else {
        let one = Rational::one();
        let y = (&one + x) / (&one - x);
        let scale = pow(&(&one - x), n as i64)?;
        (&scale * r_n(nu).eval(&y), scale * legendre_p(nu).eval(&y))
    };
    let x_neg_n = pow(x, -(n as i64))?;
    Ok(-(&x_neg_n / int(2)) * r_part + harmonic(n as i64, 1)? * x_neg_n * p_part)
}

fn require_order_sum(n: u64, big_m: u64) -> Result<()> {
    require(n >= 2, "order sums need n >= 2")?;
    require(big_m >= 1, "order sums need M >= 1")
}

/// `S_n(M, z) = (1+z)^n + sum_{j=2}^M (1 + z/j)^n - n z H_M - M`.
pub fn order_sum_closed(n: u64, big_m: u64, z: &Rational) -> Result<Rational> {
    require_order_sum(n, big_m)?;
    let ni = n as i64;
    let mut acc = Rational::zero();
    for j in 1..=big_m {
        acc += pow(&(Rational::one() + z / int(j as i64)), ni)?;
    }
    Ok(acc - int(ni) * z * harmonic(big_m as i64, 1)? - int(big_m as i64))
}

/// `(1+z)^n - 1 - n z`, accurate for small `z`.
fn binomial_remainder_f64(n: u64, z: f64) -> f64 {
    // sum_{l>=2} C(n,l) z^l
    let mut term = 1.0;
    let mut acc = 0.0;
    for l in 1..=n {
        term *= (n - l + 1) as f64 / l as f64 * z;
        if l >= 2 {
            acc += term;
        }
    }
    acc
}

/// `S_n(M, z)` in `f64` plus the Euler–Maclaurin estimate of
/// `sum_{j>M} [(1 + z/j)^n - 1 - n z/j]`, approximating the `M -> ∞` limit.
pub fn order_sum_extrapolated(n: u64, big_m: u64, z: f64) -> Result<f64> {
    require_order_sum(n, big_m)?;
    // Kahan-compensated partial sum
    let mut sum = 0.0f64;
    let mut carry = 0.0f64;
    for j in (1..=big_m).rev() {
        let y = binomial_remainder_f64(n, z / j as f64) - carry;
        let t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
    let m = big_m as f64;
    let mut tail = 0.0;
    let mut c = 1.0;
    for l in 1..=n {
        c *= (n - l + 1) as f64 / l as f64;
        if l < 2 {
            continue;
        }
        let lf = l as f64;
        // sum_{j>M} j^{-l} ≈ M^{1-l}/(l-1) - M^{-l}/2 + l M^{-l-1}/12 - l(l+1)(l+2) M^{-l-3}/720
        let zeta_tail = m.powf(1.0 - lf) / (lf - 1.0) - m.powf(-lf) / 2.0
            + lf * m.powf(-lf - 1.0) / 12.0
            - lf * (lf + 1.0) * (lf + 2.0) * m.powf(-lf - 3.0) / 720.0;
        tail += c * z.powi(l as i32) * zeta_tail;
    }
    Ok(sum + tail)
}

/// Partial sum of the shifted series
/// `-n z H_M + sum_{j=1}^J [(1 + z/j)^n - (1 + z/(M+j))^n]` and the exact
/// size of what the truncation leaves out.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ShiftedSeries {
    pub formula: &'static str,
    #[serde(serialize_with = "serialize_opt_rational")]
    pub exact: Option<Rational>,
    pub value: f64,
    /// `sum_{j=J+1}^{J+M} [(1 + z/j)^n - 1]`; `value + tail` is the full sum.
    pub tail: f64,
}

/// Largest `J` for which the partial sum is also produced exactly.
pub const SHIFTED_EXACT_MAX_J: u64 = 2000;

pub fn order_sum_shifted_series(
    n: u64,
    big_m: u64,
    z: &Rational,
    big_j: u64,
) -> Result<ShiftedSeries> {
    require_order_sum(n, big_m)?;
    require(big_j >= 1, "J >= 1 required")?;
    let ni = n as i64;
    let zf = rational_to_f64(z);
    let lead = -(n as f64) * zf * rational_to_f64(&harmonic(big_m as i64, 1)?);
    let pair = |j: u64| -> f64 {
        let a = binomial_remainder_f64(n, zf / j as f64) + n as f64 * zf / j as f64;
        let b =
            binomial_remainder_f64(n, zf / (big_m + j) as f64) + n as f64 * zf / (big_m + j) as f64;
        a - b
    };
    let mut value = lead;
    for j in (1..=big_j).rev() {
        value += pair(j);
    }
    let tail: f64 = (big_j + 1..=big_j + big_m)
        .map(|j| binomial_remainder_f64(n, zf / j as f64) + n as f64 * zf / j as f64)
        .sum();

    let exact = if big_j <= SHIFTED_EXACT_MAX_J {
        let mut acc = -int(ni) * z * harmonic(big_m as i64, 1)?;
        for j in 1..=big_j {
            acc += pow(&(Rational::one() + z / int(j as i64)), ni)?
                - pow(&(Rational::one() + z / int((big_m + j) as i64)), ni)?;
        }
        Some(acc)
    } else {
        None
    };
    Ok(ShiftedSeries {
        formula: formula::ORDER_SUM_SHIFTED,
        exact,
        value,
        tail,
    })
}

/// `sum_{m=2}^n C(n,m) H_M^{(m)} u^m/(m+1)` in closed form,
///
/// ```text
/// (1/u) sum_{j=1}^M j/(n+1) [(1 + u/j)^{n+1} - 1] - M - (n/2) u H_M
/// ```
pub fn integrated_order_sum(n: u64, big_m: u64, u: &Rational) -> Result<Rational> {
    require_order_sum(n, big_m)?;
    if u.is_zero() {
        return Err(Error::domain("u = 0"));
    }
    let ni = n as i64;
    let mut acc = Rational::zero();
    for j in 1..=big_m {
        let jr = int(j as i64);
        acc += &jr * (pow(&(Rational::one() + u / &jr), ni + 1)? - Rational::one());
    }
    Ok(acc / (int(ni + 1) * u) - int(big_m as i64) - rat(ni, 2) * u * harmonic(big_m as i64, 1)?)
}

/// The same sum, term by term.
pub fn integrated_order_sum_direct(n: u64, big_m: u64, u: &Rational) -> Result<Rational> {
    require_order_sum(n, big_m)?;
    let mut acc = Rational::zero();
    for m in 2..=n {
        acc +=
            binom(n, m) * harmonic(big_m as i64, m as u32)? * pow(u, m as i64)? / int(m as i64 + 1);
    }
    Ok(acc)
}

/// `S_n(M, -1) - S_n(M, -1/2) = sum_{j=1}^M [n/(2j) + (1 - 1/j)^n - (1 - 1/(2j))^n]`.
pub fn order_sum_half_difference(n: u64, big_m: u64) -> Result<Rational> {
    require_order_sum(n, big_m)?;
    let ni = n as i64;
    let mut acc = Rational::zero();
    for j in 1..=big_m as i64 {
        acc += rat(ni, 2 * j) + pow(&(Rational::one() - rat(1, j)), ni)?
            - pow(&(Rational::one() - rat(1, 2 * j)), ni)?;
    }
    Ok(acc)
}

/// `Q_n = H_{2n} - 2 H_n`.
pub fn q_n(n: u64) -> Result<Rational> {
    require(n >= 1, "n >= 1 required")?;
    let h = harmonic_table(2 * n, 1)?;
    Ok(&h[2 * n as usize] - int(2) * &h[n as usize])
}

/// `S_k^{(l)}(z)` written as `a * S_{n-p}(z) + b`.
#[derive(Clone, Debug)]
struct Affine {
    a: Rational,
    b: Rational,
}

/// Coefficient of `S_{n-p}(z)` in `S_n^{(p)}(z)` once the descending
/// recursion is unrolled down to order 0 and every order-0 leaf is carried
/// back to index `n - p` with the first-order recursion.
fn harmonic_portion_coefficient(n: u64, p: u32, z: &Rational) -> Result<(Rational, Rational)> {
    let base = n - p as u64;
    let zp1 = Rational::one() + z;
    // order 0 in affine form for k = base..=n
    let mut order0 = Vec::new();
    let mut cur = Affine {
        a: Rational::one(),
        b: Rational::zero(),
    };
    order0.push(cur.clone());
    for k in base..n {
        cur = Affine {
            a: &zp1 * &cur.a,
            b: &zp1 * &cur.b + (pow(&zp1, k as i64 + 1)? - Rational::one()) / int(k as i64 + 1),
        };
        order0.push(cur.clone());
    }
    // table[d][l]: S_{base+d}^{(l)}, needed only for l <= d
    let mut table: Vec<Vec<Affine>> = Vec::new();
    for d in 0..=p as u64 {
        let k = base + d;
        let mut row = vec![order0[d as usize].clone()];
        for l in 1..=d as u32 {
            let kz = int(k as i64) * z;
            let mut a = Rational::zero();
            let mut b = Rational::zero();
            for i in 0..l {
                let c = binom(l as u64 - 1, i as u64);
                let prev = &table[d as usize - 1][i as usize];
                a += &c * &prev.a;
                b += &c * &prev.b;
            }
            row.push(Affine {
                a: &kz * a,
                b: &kz * b + int(k as i64) * beta(k.max(1), l, z)?,
            });
        }
        table.push(row);
    }
    let top = &table[p as usize][p as usize];
    Ok((top.a.clone(), top.b.clone()))
}

/// Tests the conjecture that the harmonic-number-bearing portion of
/// `S_n^{(p)}(z)` is `(n)_p S_{n-p}(z)` (rising factorial), i.e.
/// `(1+z)^{n-p} (n)_p [H_{n-p} + 2F1(1,1;n-p+2;-1/z)/(z (z+1)^{n-p} (n+1-p)) - ln((z+1)/z)]`.
///
/// The portion is the coefficient of `S_{n-p}(z)` left after unrolling the
/// descending recursion; the literal log-form expression is evaluated too
/// and attached as a note. Never fails: rejected inputs become
/// out-of-domain points.
pub fn harmonic_portion_conjecture_check(n: u64, p: u32, z: &Rational) -> IdentityReport {
    let start = Instant::now();
    let params = [
        ("n", n.to_string()),
        ("p", p.to_string()),
        ("z", crate::exact::format_rational(z)),
    ];
    let point = match harmonic_portion_point(n, p, z) {
        Ok((outcome, note)) => PointResult::new(&params, outcome).with_note(note),
        Err(e) => PointResult::new(
            &params,
            Outcome::OutOfDomain {
                reason: e.to_string(),
            },
        ),
    };
    IdentityReport {
        identity: formula::HARMONIC_PORTION.to_string(),
        description: "harmonic-number portion of S_n^(p)(z) equals (n)_p S_{n-p}(z)".to_string(),
        grid: format!("n={n}, p={p}, z={z}"),
        informational: true,
        points: vec![point],
        duration_ms: start.elapsed().as_millis() as u64,
    }
}

fn harmonic_portion_point(n: u64, p: u32, z: &Rational) -> Result<(Outcome, String)> {
    require(p >= 1, "p >= 1 required")?;
    if n < p as u64 {
        return Err(Error::invalid(format!("n = {n} < p = {p}")));
    }
    let (a, b) = harmonic_portion_coefficient(n, p, z)?;
    let rising = pochhammer(&int(n as i64), p as u64);
    let base = n - p as u64;
    let s_base = if base == 0 {
        Rational::zero()
    } else {
        s_recursive_trace(base, z)?
            .last()
            .cloned()
            .unwrap_or_default()
    };

    let predicted = &rising * &s_base;
    let observed = &a * &s_base;
    let mut note = format!("coefficient of S_{base}: {a} vs (n)_p = {rising}; remainder {b}");
    if base >= 1 && (z.is_positive() || *z < -Rational::one()) {
        if let Ok(lit) = literal_conjecture_f64(n, p, z) {
            note.push_str(&format!("; literal log form {lit:.12e}"));
        }
    }
    let outcome = if observed == predicted {
        Outcome::ExactEqual
    } else {
        Outcome::Mismatch {
            lhs: crate::exact::format_rational(&observed),
            rhs: crate::exact::format_rational(&predicted),
        }
    };
    Ok((outcome, note))
}

fn literal_conjecture_f64(n: u64, p: u32, z: &Rational) -> Result<f64> {
    let k = n - p as u64;
    let zf = rational_to_f64(z);
    let zp1 = 1.0 + zf;
    let f = hyp2f1_11(k + 2, -1.0 / zf)?.value;
    let h = rational_to_f64(&harmonic(k as i64, 1)?);
    let rising = rational_to_f64(&pochhammer(&int(n as i64), p as u64));
    let zk = zp1.powi(k as i32);
    Ok(zk * rising * (h + f / (zf * zk * (k as f64 + 1.0)) - (zp1 / zf).ln()))
}
