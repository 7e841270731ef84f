//! The identity registry: each entry is a grid plus two sides that must agree.

use num_traits::{One, Zero};

use crate::closed_forms::{
    binomial_power_sum, harmonic_portion_conjecture_check, integrated_order_sum,
    integrated_order_sum_direct, order_sum_closed, order_sum_extrapolated,
    order_sum_half_difference, order_sum_shifted_series, q_n, s1_n_of_z, s_n_at_1, s_n_of_z,
    s_via_3f2, sp_at_one, sp_via_3f2, squared_binomial_sum_legendre,
};
use crate::error::{Error, Result};
use crate::exact::{
    binomial, format_rational, harmonic, harmonic_table, int, log_moment, pochhammer, rat,
    rational_to_f64, LogPolynomial, Polynomial, Rational,
};
use crate::hypergeom::{
    laplace_laguerre, laplace_laguerre_termwise, legendre_p, pfq_param_derivative, pfq_polynomial,
    poly_2f1_nn, r_limit_combination, r_n, r_n_difference_form, r_n_product_form,
    r_n_rodrigues_form,
};
use crate::integral::{
    integrated_order_sum_laguerre, order_sum_laguerre_integral, order_sum_limit_quadrature,
    order_sum_step_integral, q_n_integral, quadrature_log_moment, sp_integral, sp_integral_order,
    squared_binomial_integral, squared_binomial_quadrature, QuadratureConfig,
};
use crate::oracle::{
    order_sum_with_harmonics, s_as_polynomial, s_general_with_harmonics, OrderSumSpec, SumSpec,
};
use crate::recursions::{
    order_sum_recursive, s_at_one_recursive, s_recursive, sp_coupled, sp_descending,
};

use super::report::Outcome;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Tag {
    Exact,
    Numeric,
    Quadrature,
    Conjecture,
}

impl Tag {
    pub fn name(self) -> &'static str {
        match self {
            Tag::Exact => "exact",
            Tag::Numeric => "numeric",
            Tag::Quadrature => "quadrature",
            Tag::Conjecture => "conjecture",
        }
    }
}

/// Run-wide settings the sides may need.
#[derive(Debug, Clone)]
pub struct Context {
    pub max_n: u64,
    pub max_m: u64,
    pub max_p: u32,
    pub z: Vec<Rational>,
    pub quadrature: QuadratureConfig,
    pub harmonic_fault: bool,
}

/// One grid point. `n` is always present; the rest only where used.
#[derive(Debug, Clone, Default)]
pub struct Point {
    pub n: u64,
    pub p: Option<u32>,
    pub q: Option<u32>,
    pub m: Option<u64>,
    pub z: Option<Rational>,
    pub k: Option<Rational>,
}

impl Point {
    fn n(n: u64) -> Self {
        Point {
            n,
            ..Default::default()
        }
    }

    fn p(mut self, p: u32) -> Self {
        self.p = Some(p);
        self
    }

    fn q(mut self, q: u32) -> Self {
        self.q = Some(q);
        self
    }

    fn m(mut self, m: u64) -> Self {
        self.m = Some(m);
        self
    }

    fn z(mut self, z: Rational) -> Self {
        self.z = Some(z);
        self
    }

    fn k(mut self, k: Rational) -> Self {
        self.k = Some(k);
        self
    }

    fn pv(&self) -> u32 {
        self.p.unwrap_or(0)
    }

    fn qv(&self) -> u32 {
        self.q.unwrap_or(1)
    }

    fn mv(&self) -> u64 {
        self.m.unwrap_or(1)
    }

    fn zv(&self) -> Rational {
        self.z.clone().unwrap_or_else(Rational::one)
    }

    fn zf(&self) -> f64 {
        rational_to_f64(&self.zv())
    }

    pub fn params(&self) -> Vec<(&'static str, String)> {
        let mut out = vec![("n", self.n.to_string())];
        if let Some(p) = self.p {
            out.push(("p", p.to_string()));
        }
        if let Some(q) = self.q {
            out.push(("q", q.to_string()));
        }
        if let Some(m) = self.m {
            out.push(("M", m.to_string()));
        }
        if let Some(z) = &self.z {
            out.push(("z", format_rational(z)));
        }
        if let Some(k) = &self.k {
            out.push(("k", format_rational(k)));
        }
        out
    }
}

/// Value produced by one side of an identity.
#[derive(Debug, Clone)]
pub enum Value {
    Exact(Rational),
    Poly(Polynomial),
    /// A float, compared with `|a - b| <= tolerance * (1 + |b|)` if
    /// `relative`, else `|a - b| <= tolerance`.
    Numeric {
        value: f64,
        tolerance: f64,
        relative: bool,
    },
    /// The side decided the outcome itself (informational checks).
    Decided(Outcome, Option<String>),
}

impl Value {
    fn as_f64(&self) -> Option<f64> {
        match self {
            Value::Exact(r) => Some(rational_to_f64(r)),
            Value::Numeric { value, .. } => Some(*value),
            _ => None,
        }
    }

    fn describe(&self) -> String {
        match self {
            Value::Exact(r) => format_rational(r),
            Value::Poly(p) => p.to_string(),
            Value::Numeric { value, .. } => format!("{value:.17e}"),
            Value::Decided(o, _) => format!("{o:?}"),
        }
    }
}

/// Compares two sides. The second side is the reference.
pub fn compare(lhs: &Value, rhs: &Value) -> (Outcome, Option<String>) {
    let mismatch = || Outcome::Mismatch {
        lhs: lhs.describe(),
        rhs: rhs.describe(),
    };
    match (lhs, rhs) {
        (Value::Decided(o, note), _) => (o.clone(), note.clone()),
        (Value::Exact(a), Value::Exact(b)) => (
            if a == b {
                Outcome::ExactEqual
            } else {
                mismatch()
            },
            None,
        ),
        (Value::Poly(a), Value::Poly(b)) => (
            if a == b {
                Outcome::ExactEqual
            } else {
                mismatch()
            },
            None,
        ),
        (
            Value::Numeric {
                tolerance,
                relative,
                ..
            },
            other,
        )
        | (
            other,
            Value::Numeric {
                tolerance,
                relative,
                ..
            },
        ) => {
            let (Some(a), Some(b)) = (lhs.as_f64(), rhs.as_f64()) else {
                return (mismatch(), None);
            };
            let _ = other;
            let deviation = (a - b).abs();
            let bound = if *relative {
                tolerance * (1.0 + b.abs())
            } else {
                *tolerance
            };
            if deviation <= bound {
                (Outcome::NumericWithinTolerance { deviation }, None)
            } else {
                (
                    mismatch(),
                    Some(format!("deviation {deviation:.3e} > {bound:.3e}")),
                )
            }
        }
        _ => (mismatch(), Some("incomparable values".into())),
    }
}

type Grid = Box<dyn Fn(&Context) -> Vec<Point> + Send + Sync>;
type Side = Box<dyn Fn(&Point, &Context) -> Result<Value> + Send + Sync>;

pub struct Identity {
    pub id: &'static str,
    pub description: &'static str,
    pub tags: &'static [Tag],
    pub grid_description: &'static str,
    pub grid: Grid,
    pub lhs: Side,
    pub rhs: Side,
}

impl Identity {
    pub fn informational(&self) -> bool {
        self.tags.contains(&Tag::Conjecture)
    }

    pub fn matches(&self, filter: &str) -> bool {
        self.id == filter || self.tags.iter().any(|t| t.name() == filter)
    }
}

fn exact(r: Rational) -> Value {
    Value::Exact(r)
}

fn ex(r: Result<Rational>) -> Result<Value> {
    r.map(Value::Exact)
}

fn poly(p: Result<Polynomial>) -> Result<Value> {
    p.map(Value::Poly)
}

fn numeric(value: f64, tolerance: f64, relative: bool) -> Value {
    Value::Numeric {
        value,
        tolerance,
        relative,
    }
}

/// Reference sum `sum_j j^p C(n,j)^r [H_j^{(q)}]^m z^j`, honouring the
/// fault hook.
fn oracle(ctx: &Context, spec: SumSpec) -> Result<Rational> {
    let mut h = harmonic_table(spec.n, spec.q)?;
    if ctx.harmonic_fault && spec.n > 0 {
        h[spec.n as usize] += rat(1, spec.n as i64);
    }
    s_general_with_harmonics(&spec, &h)
}

fn oracle_simple(ctx: &Context, n: u64, p: u32, z: &Rational) -> Result<Rational> {
    oracle(ctx, SumSpec::simple(n, p, z.clone()))
}

fn oracle_squared(ctx: &Context, n: u64, z: &Rational) -> Result<Rational> {
    if n == 0 {
        return Ok(Rational::zero());
    }
    oracle(
        ctx,
        SumSpec {
            n,
            p: 0,
            q: 1,
            r: 2,
            m: 1,
            z: z.clone(),
        },
    )
}

fn oracle_order_sum(ctx: &Context, n: u64, big_m: u64, z: &Rational) -> Result<Rational> {
    let spec = OrderSumSpec::plain(n, big_m, z.clone());
    let mut h = vec![Rational::zero(); n as usize + 1];
    for (order, slot) in h.iter_mut().enumerate().skip(2) {
        *slot = harmonic(big_m as i64, order as u32)?;
    }
    if ctx.harmonic_fault {
        h[n as usize] += rat(1, n as i64);
    }
    order_sum_with_harmonics(&spec, &h)
}

fn squared_binomial_reference(n: u64) -> Result<Rational> {
    Ok(
        (int(2) * harmonic(n as i64, 1)? - harmonic(2 * n as i64, 1)?)
            * Rational::from_integer(binomial(2 * n, n as i64)),
    )
}

// grids

fn n_range(ctx: &Context, lo: u64, natural: u64) -> impl Iterator<Item = u64> {
    lo..=natural.min(ctx.max_n)
}

fn m_range(ctx: &Context, natural: u64) -> impl Iterator<Item = u64> {
    1..=natural.min(ctx.max_m)
}

fn p_range(ctx: &Context, lo: u32, natural: u32) -> impl Iterator<Item = u32> {
    lo..=natural.min(ctx.max_p)
}

fn grid_nz(ctx: &Context, lo: u64, natural: u64) -> Vec<Point> {
    let mut out = Vec::new();
    for z in &ctx.z {
        for n in n_range(ctx, lo, natural) {
            out.push(Point::n(n).z(z.clone()));
        }
    }
    out
}

fn grid_npz(ctx: &Context, natural_n: u64, p_lo: u32, natural_p: u32) -> Vec<Point> {
    let mut out = Vec::new();
    for z in &ctx.z {
        for n in n_range(ctx, 1, natural_n) {
            for p in p_range(ctx, p_lo, natural_p) {
                out.push(Point::n(n).p(p).z(z.clone()));
            }
        }
    }
    out
}

fn grid_nmz(ctx: &Context, natural_n: u64, natural_m: u64, z: &[Rational]) -> Vec<Point> {
    let mut out = Vec::new();
    for z in z {
        for n in n_range(ctx, 2, natural_n) {
            for m in m_range(ctx, natural_m) {
                out.push(Point::n(n).m(m).z(z.clone()));
            }
        }
    }
    out
}

fn grid_n(ctx: &Context, lo: u64, natural: u64) -> Vec<Point> {
    n_range(ctx, lo, natural).map(Point::n).collect()
}

fn nonzero_z(ctx: &Context) -> Vec<Rational> {
    ctx.z.iter().filter(|z| !z.is_zero()).cloned().collect()
}

fn f64_set(values: &[(i64, i64)]) -> Vec<Rational> {
    values.iter().map(|&(a, b)| rat(a, b)).collect()
}

/// The full registry, in report order.
pub fn registry() -> Vec<Identity> {
    vec![
        Identity {
            id: "s-first-order-recursion",
            description: "first-order recursion in n for S_n(z) equals the direct sum",
            tags: &[Tag::Exact],
            grid_description: "1 <= n <= 40, z in samples",
            grid: Box::new(|c| grid_nz(c, 1, 40)),
            lhs: Box::new(|pt, _| ex(s_recursive(pt.n, &pt.zv()))),
            rhs: Box::new(|pt, c| ex(oracle_simple(c, pt.n, 0, &pt.zv()))),
        },
        Identity {
            id: "s-at-one-recursion",
            description: "S_{n+1}(1) = 2 S_n(1) + (2^{n+1} - 1)/(n+1) against 2^n (H_n - sum 1/(j 2^j))",
            tags: &[Tag::Exact],
            grid_description: "1 <= n <= 40",
            grid: Box::new(|c| grid_n(c, 1, 40)),
            lhs: Box::new(|pt, _| ex(s_at_one_recursive(pt.n))),
            rhs: Box::new(|pt, _| ex(s_n_at_1(pt.n))),
        },
        Identity {
            id: "s-at-one-closed",
            description: "2^n (H_n - sum 1/(j 2^j)) equals the direct sum at z = 1",
            tags: &[Tag::Exact],
            grid_description: "1 <= n <= 40",
            grid: Box::new(|c| grid_n(c, 1, 40)),
            lhs: Box::new(|pt, _| ex(s_n_at_1(pt.n))),
            rhs: Box::new(|pt, c| ex(oracle_simple(c, pt.n, 0, &int(1)))),
        },
        Identity {
            id: "sp-coupled-recursion",
            description: "coupled recursion over all orders l <= p equals the direct sum",
            tags: &[Tag::Exact],
            grid_description: "1 <= n <= 25, 0 <= p <= 4, z in samples",
            grid: Box::new(|c| grid_npz(c, 25, 0, 4)),
            lhs: Box::new(|pt, _| ex(sp_coupled(pt.n, pt.pv(), &pt.zv()))),
            rhs: Box::new(|pt, c| ex(oracle_simple(c, pt.n, pt.pv(), &pt.zv()))),
        },
        Identity {
            id: "sp-descending-recursion",
            description: "descending recursion with beta_n(p, z) equals the direct sum",
            tags: &[Tag::Exact],
            grid_description: "1 <= n <= 25, 1 <= p <= 4, z in samples",
            grid: Box::new(|c| grid_npz(c, 25, 1, 4)),
            lhs: Box::new(|pt, _| ex(sp_descending(pt.n, pt.pv(), &pt.zv()))),
            rhs: Box::new(|pt, c| ex(oracle_simple(c, pt.n, pt.pv(), &pt.zv()))),
        },
        Identity {
            id: "s-via-3f2",
            description: "S_n(z) = n z (1+z)^{n-1} 3F2(1,1,1-n;2,2;z/(1+z))",
            tags: &[Tag::Exact],
            grid_description: "1 <= n <= 30, z in samples",
            grid: Box::new(|c| grid_nz(c, 1, 30)),
            lhs: Box::new(|pt, _| ex(s_via_3f2(pt.n, &pt.zv()))),
            rhs: Box::new(|pt, c| ex(oracle_simple(c, pt.n, 0, &pt.zv()))),
        },
        Identity {
            id: "sp-via-3f2",
            description: "3F2 forms of S_n^(1)(z) and S_n^(2)(z)",
            tags: &[Tag::Exact],
            grid_description: "1 <= n <= 25, p in {1, 2}, z in samples",
            grid: Box::new(|c| grid_npz(c, 25, 1, 2)),
            lhs: Box::new(|pt, _| ex(sp_via_3f2(pt.n, &pt.zv(), pt.pv()))),
            rhs: Box::new(|pt, c| ex(oracle_simple(c, pt.n, pt.pv(), &pt.zv()))),
        },
        Identity {
            id: "sp-integral",
            description: "S_n^(p)(z) = n z ∫ [t g(zt) - g(z)]/(t-1) dt, integrated exactly",
            tags: &[Tag::Exact],
            grid_description: "1 <= n <= 25, 0 <= p <= 3, z in samples",
            grid: Box::new(|c| grid_npz(c, 25, 0, 3)),
            lhs: Box::new(|pt, _| ex(sp_integral(pt.n, pt.pv(), &pt.zv()))),
            rhs: Box::new(|pt, c| ex(oracle_simple(c, pt.n, pt.pv(), &pt.zv()))),
        },
        Identity {
            id: "sp-integral-order",
            description: "S_n^(p)(q,1,1,z) from the same integrand times ln^{q-1} t",
            tags: &[Tag::Exact],
            grid_description: "1 <= n <= 12, 0 <= p <= 2, 1 <= q <= 3, z in samples",
            grid: Box::new(|c| {
                let mut out = Vec::new();
                for pt in grid_npz(c, 12, 0, 2) {
                    for q in 1..=3 {
                        out.push(pt.clone().q(q));
                    }
                }
                out
            }),
            lhs: Box::new(|pt, _| ex(sp_integral_order(pt.n, pt.pv(), pt.qv(), &pt.zv()))),
            rhs: Box::new(|pt, c| {
                ex(oracle(c, SumSpec { n: pt.n, p: pt.pv(), q: pt.qv(), r: 1, m: 1, z: pt.zv() }))
            }),
        },
        Identity {
            id: "z-derivative",
            description: "S_n^(p+1) = z d/dz S_n^(p) as polynomials in z",
            tags: &[Tag::Exact],
            grid_description: "1 <= n <= 20, 0 <= p <= 3",
            grid: Box::new(|c| {
                let mut out = Vec::new();
                for n in n_range(c, 1, 20) {
                    for p in 0..=3u32.min(c.max_p) {
                        out.push(Point::n(n).p(p));
                    }
                }
                out
            }),
            lhs: Box::new(|pt, _| poly(s_as_polynomial(pt.n, pt.pv() + 1, 1, 1, 1))),
            rhs: Box::new(|pt, _| {
                let s = s_as_polynomial(pt.n, pt.pv(), 1, 1, 1)?;
                Ok(Value::Poly(s.x_d_dx()))
            }),
        },
        Identity {
            id: "hypergeometric-z-derivative",
            description: "d/dz pF(p-1)(2,..,2,1-n;1,..,1;-zt) = (n-1) 2^{p-1} t pF(p-1)(3,..,3,2-n;2,..,2;-zt)",
            tags: &[Tag::Exact],
            grid_description: "2 <= n <= 15, 1 <= p <= 4, t in {1/3, -2, 5/7}",
            grid: Box::new(|c| {
                let mut out = Vec::new();
                for n in n_range(c, 2, 15) {
                    for p in p_range(c, 1, 4) {
                        for t in f64_set(&[(1, 3), (-2, 1), (5, 7)]) {
                            out.push(Point::n(n).p(p).k(t));
                        }
                    }
                }
                out
            }),
            lhs: Box::new(|pt, _| {
                let p = pt.pv() as usize;
                let t = pt.k.clone().unwrap_or_else(Rational::one);
                let mut nums = vec![int(2); p - 1];
                nums.push(int(1 - pt.n as i64));
                let f = pfq_polynomial(&nums, &vec![int(1); p - 1])?;
                Ok(Value::Poly(f.scale_arg(&-t).derivative()))
            }),
            rhs: Box::new(|pt, _| {
                let p = pt.pv() as usize;
                let t = pt.k.clone().unwrap_or_else(Rational::one);
                let mut nums = vec![int(3); p - 1];
                nums.push(int(2 - pt.n as i64));
                let g = pfq_polynomial(&nums, &vec![int(2); p - 1])?;
                let factor = int(pt.n as i64 - 1) * int(1 << (p - 1)) * &t;
                Ok(Value::Poly(g.scale_arg(&-t).scale(&factor)))
            }),
        },
        Identity {
            id: "sp-at-one-closed",
            description: "harmonic-number closed forms of S_n^(p)(1), p = 0, 1, 2",
            tags: &[Tag::Exact],
            grid_description: "1 <= n <= 40 (n >= 2 for p = 2), 0 <= p <= 2",
            grid: Box::new(|c| {
                let mut out = Vec::new();
                for n in n_range(c, 1, 40) {
                    for p in 0..=2u32.min(c.max_p) {
                        if p < 2 || n >= 2 {
                            out.push(Point::n(n).p(p));
                        }
                    }
                }
                out
            }),
            lhs: Box::new(|pt, _| ex(sp_at_one(pt.n, pt.pv()))),
            rhs: Box::new(|pt, c| ex(oracle_simple(c, pt.n, pt.pv(), &int(1)))),
        },
        Identity {
            id: "squared-binomial-closed",
            description: "sum_j C(n,j)^2 H_j = (2 H_n - H_{2n}) C(2n,n)",
            tags: &[Tag::Exact],
            grid_description: "1 <= n <= 30",
            grid: Box::new(|c| grid_n(c, 1, 30)),
            lhs: Box::new(|pt, _| ex(squared_binomial_reference(pt.n))),
            rhs: Box::new(|pt, c| ex(oracle_squared(c, pt.n, &int(1)))),
        },
        Identity {
            id: "squared-binomial-legendre-at-one",
            description: "Legendre/R_n form at x = 1 through the limits of (1-x)^n P_n and (1-x)^n R_n",
            tags: &[Tag::Exact],
            grid_description: "1 <= n <= 30",
            grid: Box::new(|c| grid_n(c, 1, 30)),
            lhs: Box::new(|pt, _| ex(squared_binomial_sum_legendre(pt.n, &int(1)))),
            rhs: Box::new(|pt, c| ex(oracle_squared(c, pt.n, &int(1)))),
        },
        Identity {
            id: "squared-binomial-integral-at-one",
            description: "∫ [F(t) - F(1)]/(t-1) dt with F = 2F1(-n,-n;1;·), integrated exactly",
            tags: &[Tag::Exact],
            grid_description: "1 <= n <= 30",
            grid: Box::new(|c| grid_n(c, 1, 30)),
            lhs: Box::new(|pt, _| ex(squared_binomial_integral(pt.n, &int(1)))),
            rhs: Box::new(|pt, c| ex(oracle_squared(c, pt.n, &int(1)))),
        },
        Identity {
            id: "squared-binomial-integral",
            description: "∫ [F(zt) - F(z)]/(t-1) dt equals sum_j C(n,j)^2 H_j z^j",
            tags: &[Tag::Exact],
            grid_description: "1 <= n <= 20, z in samples",
            grid: Box::new(|c| grid_nz(c, 1, 20)),
            lhs: Box::new(|pt, _| ex(squared_binomial_integral(pt.n, &pt.zv()))),
            rhs: Box::new(|pt, c| ex(oracle_squared(c, pt.n, &pt.zv()))),
        },
        Identity {
            id: "binomial-power-vs-legendre",
            description: "parameter-derivative form at p = 2 equals the Legendre/R_n form",
            tags: &[Tag::Exact],
            grid_description: "0 <= n <= 20, x in {1/2, 1/3, 2}",
            grid: Box::new(|c| {
                let mut out = Vec::new();
                for x in f64_set(&[(1, 2), (1, 3), (2, 1)]) {
                    for n in n_range(c, 0, 20) {
                        out.push(Point::n(n).z(x.clone()));
                    }
                }
                out
            }),
            lhs: Box::new(|pt, _| ex(binomial_power_sum(pt.n, 2, &pt.zv()))),
            rhs: Box::new(|pt, _| ex(squared_binomial_sum_legendre(pt.n, &pt.zv()))),
        },
        Identity {
            id: "binomial-power-param-derivative",
            description: "sum_j C(n,j)^p H_j x^{-j} from the parameter derivative of pF(p-1)",
            tags: &[Tag::Exact],
            grid_description: "1 <= n <= 15, 2 <= p <= 4, x in nonzero samples",
            grid: Box::new(|c| {
                let mut out = Vec::new();
                for x in nonzero_z(c) {
                    for n in n_range(c, 1, 15) {
                        for p in p_range(c, 2, 4) {
                            out.push(Point::n(n).p(p).z(x.clone()));
                        }
                    }
                }
                out
            }),
            lhs: Box::new(|pt, _| ex(binomial_power_sum(pt.n, pt.pv(), &pt.zv()))),
            rhs: Box::new(|pt, c| {
                ex(oracle(c, SumSpec { n: pt.n, p: 0, q: 1, r: pt.pv(), m: 1, z: pt.zv().recip() }))
            }),
        },
        Identity {
            id: "r-n-product-form",
            description: "sum_k (1/k) [P_k - P_{k-1}] P_{n-k} equals R_n",
            tags: &[Tag::Exact],
            grid_description: "0 <= n <= 15",
            grid: Box::new(|c| grid_n(c, 0, 15)),
            lhs: Box::new(|pt, _| Ok(Value::Poly(r_n_product_form(pt.n as usize)))),
            rhs: Box::new(|pt, _| Ok(Value::Poly(r_n(pt.n as usize)))),
        },
        Identity {
            id: "r-n-difference-form",
            description: "2 sum_k (-1)^{n+k} (2k+1)/((n-k)(n+k+1)) [P_k - P_n] equals R_n",
            tags: &[Tag::Exact],
            grid_description: "0 <= n <= 15",
            grid: Box::new(|c| grid_n(c, 0, 15)),
            lhs: Box::new(|pt, _| Ok(Value::Poly(r_n_difference_form(pt.n as usize)))),
            rhs: Box::new(|pt, _| Ok(Value::Poly(r_n(pt.n as usize)))),
        },
        Identity {
            id: "r-n-rodrigues-form",
            description: "n-th derivative form with cancelling logarithm equals R_n",
            tags: &[Tag::Exact],
            grid_description: "1 <= n <= 15",
            grid: Box::new(|c| grid_n(c, 1, 15)),
            lhs: Box::new(|pt, _| poly(r_n_rodrigues_form(pt.n as usize))),
            rhs: Box::new(|pt, _| Ok(Value::Poly(r_n(pt.n as usize)))),
        },
        Identity {
            id: "r-n-at-one",
            description: "R_n(1) = 0",
            tags: &[Tag::Exact],
            grid_description: "0 <= n <= 40",
            grid: Box::new(|c| grid_n(c, 0, 40)),
            lhs: Box::new(|pt, _| Ok(exact(r_n(pt.n as usize).eval(&int(1))))),
            rhs: Box::new(|_, _| Ok(exact(Rational::zero()))),
        },
        Identity {
            id: "r-n-at-minus-one",
            description: "R_n(-1) = 2 (-1)^n H_n",
            tags: &[Tag::Exact],
            grid_description: "0 <= n <= 40",
            grid: Box::new(|c| grid_n(c, 0, 40)),
            lhs: Box::new(|pt, _| Ok(exact(r_n(pt.n as usize).eval(&int(-1))))),
            rhs: Box::new(|pt, _| {
                let sign = if pt.n % 2 == 0 { 2 } else { -2 };
                ex(harmonic(pt.n as i64, 1).map(|h| int(sign) * h))
            }),
        },
        Identity {
            id: "legendre-2f1-coefficients",
            description: "(1-x)^n P_n((1+x)/(1-x)) has coefficients C(n,j)^2",
            tags: &[Tag::Exact],
            grid_description: "0 <= n <= 30",
            grid: Box::new(|c| grid_n(c, 0, 30)),
            lhs: Box::new(|pt, _| Ok(Value::Poly(poly_2f1_nn(pt.n as usize)))),
            rhs: Box::new(|pt, _| {
                let coeffs = (0..=pt.n)
                    .map(|j| Rational::from_integer(binomial(pt.n, j as i64).pow(2)))
                    .collect();
                Ok(Value::Poly(Polynomial::new(coeffs)))
            }),
        },
        Identity {
            id: "legendre-limits",
            description: "lim (1-x)^n P_n = C(2n,n) and the R_n limit both reproduce the squared-binomial sum",
            tags: &[Tag::Exact],
            grid_description: "1 <= n <= 25",
            grid: Box::new(|c| grid_n(c, 1, 25)),
            lhs: Box::new(|pt, _| {
                let n = pt.n;
                let p_limit = legendre_p(n as usize).mobius_homogenize(n as usize)?.eval(&int(1));
                let r_limit = r_limit_combination(n as usize)?;
                ex(Ok(harmonic(n as i64, 1)? * p_limit - r_limit / int(2)))
            }),
            rhs: Box::new(|pt, _| ex(squared_binomial_reference(pt.n))),
        },
        Identity {
            id: "order-sum-recursion",
            description: "recursion in M for S_n(M, z) equals the direct sum",
            tags: &[Tag::Exact],
            grid_description: "2 <= n <= 25, 1 <= M <= 25, z in samples",
            grid: Box::new(|c| grid_nmz(c, 25, 25, &c.z)),
            lhs: Box::new(|pt, _| ex(order_sum_recursive(pt.n, pt.mv(), &pt.zv()))),
            rhs: Box::new(|pt, c| ex(oracle_order_sum(c, pt.n, pt.mv(), &pt.zv()))),
        },
        Identity {
            id: "order-sum-closed",
            description: "S_n(M, z) = (1+z)^n + sum_{j=2}^M (1+z/j)^n - n z H_M - M",
            tags: &[Tag::Exact],
            grid_description: "2 <= n <= 25, 1 <= M <= 25, z in samples",
            grid: Box::new(|c| grid_nmz(c, 25, 25, &c.z)),
            lhs: Box::new(|pt, _| ex(order_sum_closed(pt.n, pt.mv(), &pt.zv()))),
            rhs: Box::new(|pt, c| ex(oracle_order_sum(c, pt.n, pt.mv(), &pt.zv()))),
        },
        Identity {
            id: "order-sum-laguerre-integral",
            description: "z ∫ [L_{n-1}^1(z ln t) - n] (t^M - 1)/(t - 1) dt, integrated exactly",
            tags: &[Tag::Exact],
            grid_description: "2 <= n <= 25, 1 <= M <= 25, z in samples",
            grid: Box::new(|c| grid_nmz(c, 25, 25, &c.z)),
            lhs: Box::new(|pt, _| ex(order_sum_laguerre_integral(pt.n, pt.mv(), &pt.zv()))),
            rhs: Box::new(|pt, c| ex(oracle_order_sum(c, pt.n, pt.mv(), &pt.zv()))),
        },
        Identity {
            id: "order-sum-step-integral",
            description: "z ∫ [L_{n-1}^1(z ln t) - n] t^{M-1} dt = (1 + z/M)^n - n z/M - 1",
            tags: &[Tag::Exact],
            grid_description: "2 <= n <= 25, 1 <= M <= 25, z in samples",
            grid: Box::new(|c| grid_nmz(c, 25, 25, &c.z)),
            lhs: Box::new(|pt, _| ex(order_sum_step_integral(pt.n, pt.mv(), &pt.zv()))),
            rhs: Box::new(|pt, _| {
                let (n, m, z) = (pt.n as i64, pt.mv() as i64, pt.zv());
                let step = &z / int(m);
                ex(crate::exact::pow(&(Rational::one() + &step), n).map(|v| v - int(n) * step - Rational::one()))
            }),
        },
        Identity {
            id: "order-sum-half-difference",
            description: "S_n(M,-1) - S_n(M,-1/2) = sum_j [n/(2j) + (1-1/j)^n - (1-1/(2j))^n]",
            tags: &[Tag::Exact],
            grid_description: "2 <= n <= 30, 1 <= M <= 30",
            grid: Box::new(|c| grid_nmz(c, 30, 30, &[Rational::zero()])),
            lhs: Box::new(|pt, _| ex(order_sum_half_difference(pt.n, pt.mv()))),
            rhs: Box::new(|pt, c| {
                let a = oracle_order_sum(c, pt.n, pt.mv(), &int(-1))?;
                let b = oracle_order_sum(c, pt.n, pt.mv(), &rat(-1, 2))?;
                Ok(exact(a - b))
            }),
        },
        Identity {
            id: "integrated-order-sum",
            description: "closed form of sum_m C(n,m) H_M^(m) u^m/(m+1) equals the termwise sum",
            tags: &[Tag::Exact],
            grid_description: "2 <= n <= 20, 1 <= M <= 10, u in nonzero samples",
            grid: Box::new(|c| grid_nmz(c, 20, 10, &nonzero_z(c))),
            lhs: Box::new(|pt, _| ex(integrated_order_sum(pt.n, pt.mv(), &pt.zv()))),
            rhs: Box::new(|pt, _| ex(integrated_order_sum_direct(pt.n, pt.mv(), &pt.zv()))),
        },
        Identity {
            id: "integrated-order-sum-laguerre",
            description: "u ∫ [L_{n-1}^2(u ln t)/(n+1) - n/2] (t^M - 1)/(t - 1) dt equals the termwise sum",
            tags: &[Tag::Exact],
            grid_description: "2 <= n <= 20, 1 <= M <= 10, u in nonzero samples",
            grid: Box::new(|c| grid_nmz(c, 20, 10, &nonzero_z(c))),
            lhs: Box::new(|pt, _| ex(integrated_order_sum_laguerre(pt.n, pt.mv(), &pt.zv()))),
            rhs: Box::new(|pt, _| ex(integrated_order_sum_direct(pt.n, pt.mv(), &pt.zv()))),
        },
        Identity {
            id: "q-n-recursion",
            description: "Q_{n+1} - Q_n = 1/(2n+1) + 1/(2n+2) - 2/(n+1)",
            tags: &[Tag::Exact],
            grid_description: "1 <= n <= 50",
            grid: Box::new(|c| grid_n(c, 1, 50)),
            lhs: Box::new(|pt, _| ex(Ok(q_n(pt.n + 1)? - q_n(pt.n)?))),
            rhs: Box::new(|pt, _| {
                let n = pt.n as i64;
                Ok(exact(rat(1, 2 * n + 1) + rat(1, 2 * n + 2) - rat(2, n + 1)))
            }),
        },
        Identity {
            id: "q-n-integral",
            description: "∫ (t^n - 1)^2/(t - 1) dt = H_{2n} - 2 H_n",
            tags: &[Tag::Exact],
            grid_description: "1 <= n <= 50",
            grid: Box::new(|c| grid_n(c, 1, 50)),
            lhs: Box::new(|pt, _| ex(q_n_integral(pt.n))),
            rhs: Box::new(|pt, _| {
                let h = harmonic_table(2 * pt.n, 1)?;
                Ok(exact(&h[2 * pt.n as usize] - int(2) * &h[pt.n as usize]))
            }),
        },
        Identity {
            id: "laplace-laguerre",
            description: "∫_0^∞ L_{n-1}^1(-z v) e^{-k v} dv = ((1 + z/k)^n - 1)/z, closed vs termwise",
            tags: &[Tag::Exact],
            grid_description: "1 <= n <= 10, z, k in {1/2, 1, 2}",
            grid: Box::new(|c| {
                let set = f64_set(&[(1, 2), (1, 1), (2, 1)]);
                let mut out = Vec::new();
                for n in n_range(c, 1, 10) {
                    for z in &set {
                        for k in &set {
                            out.push(Point::n(n).z(z.clone()).k(k.clone()));
                        }
                    }
                }
                out
            }),
            lhs: Box::new(|pt, _| ex(laplace_laguerre(pt.n, &pt.zv(), pt.k.as_ref().unwrap_or(&int(1))))),
            rhs: Box::new(|pt, _| {
                ex(laplace_laguerre_termwise(pt.n, &pt.zv(), pt.k.as_ref().unwrap_or(&int(1))))
            }),
        },
        Identity {
            id: "s-log-form",
            description: "log form of S_n(z) with 2F1(1,1;n+2;-1/z) matches the direct sum (relative 1e-10)",
            tags: &[Tag::Numeric],
            grid_description: "1 <= n <= 30, z in samples (z in [-1, 0) other than -1 is out of domain)",
            grid: Box::new(|c| grid_nz(c, 1, 30)),
            lhs: Box::new(|pt, _| {
                let v = s_n_of_z(pt.n, &pt.zv())?;
                Ok(match v.exact {
                    Some(e) if v.numeric.is_none() || pt.zv() == -Rational::one() => exact(e),
                    _ => numeric(v.to_f64(), 1e-10, true),
                })
            }),
            rhs: Box::new(|pt, c| ex(oracle_simple(c, pt.n, 0, &pt.zv()))),
        },
        Identity {
            id: "s1-log-form",
            description: "product form of S_n^(1)(z) matches the direct sum (relative 1e-10)",
            tags: &[Tag::Numeric],
            grid_description: "1 <= n <= 30, z in samples (z in [-1, 0) other than -1 is out of domain)",
            grid: Box::new(|c| grid_nz(c, 1, 30)),
            lhs: Box::new(|pt, _| {
                let v = s1_n_of_z(pt.n, &pt.zv())?;
                Ok(match v.exact {
                    Some(e) => exact(e),
                    None => numeric(v.to_f64(), 1e-10, true),
                })
            }),
            rhs: Box::new(|pt, c| ex(oracle_simple(c, pt.n, 1, &pt.zv()))),
        },
        Identity {
            id: "order-sum-shifted-series",
            description: "shifted series truncated at J = 10^4 plus its tail matches the closed form (1e-6)",
            tags: &[Tag::Numeric],
            grid_description: "2 <= n <= 6, 1 <= M <= 5, z in samples",
            grid: Box::new(|c| grid_nmz(c, 6, 5, &c.z)),
            lhs: Box::new(|pt, _| {
                let s = order_sum_shifted_series(pt.n, pt.mv(), &pt.zv(), 10_000)?;
                Ok(numeric(s.value + s.tail, 1e-6, false))
            }),
            rhs: Box::new(|pt, c| ex(oracle_order_sum(c, pt.n, pt.mv(), &pt.zv()))),
        },
        Identity {
            id: "param-derivative-finite-difference",
            description: "exact ν-derivative of 2F1(-ν,-ν;1;x) at ν = n vs central difference, h = 1e-6",
            tags: &[Tag::Numeric],
            grid_description: "0 <= n <= 10, x in {1/2, -1/3, 1/4}",
            grid: Box::new(|c| {
                let mut out = Vec::new();
                for x in f64_set(&[(1, 2), (-1, 3), (1, 4)]) {
                    for n in n_range(c, 0, 10) {
                        out.push(Point::n(n).z(x.clone()));
                    }
                }
                out
            }),
            lhs: Box::new(|pt, _| ex(pfq_param_derivative(2, pt.n, &pt.zv()))),
            rhs: Box::new(|pt, _| {
                let h = 1e-6;
                let x = pt.zf();
                let terms = pt.n as usize + 80;
                let fd = (nu_series(pt.n as f64 + h, x, terms) - nu_series(pt.n as f64 - h, x, terms))
                    / (2.0 * h);
                Ok(numeric(fd, 1e-6, true))
            }),
        },
        Identity {
            id: "quadrature-log-moment",
            description: "adaptive quadrature of t^k ln^j t against the exact log-moment",
            tags: &[Tag::Quadrature],
            grid_description: "0 <= k <= 20, 0 <= j <= 6 (n = k, p = j)",
            grid: Box::new(|_| {
                let mut out = Vec::new();
                for k in 0..=20u64 {
                    for j in 0..=6u32 {
                        out.push(Point::n(k).p(j));
                    }
                }
                out
            }),
            lhs: Box::new(|pt, c| {
                let r = quadrature_log_moment(pt.n as u32, pt.pv(), &c.quadrature)?;
                Ok(numeric(r.value, c.quadrature.abs_tol, false))
            }),
            rhs: Box::new(|pt, _| {
                Ok(exact(log_moment(&LogPolynomial::term(Rational::one(), pt.n as u32, pt.pv()))))
            }),
        },
        Identity {
            id: "order-sum-limit-quadrature",
            description: "quadrature of the M -> ∞ Laguerre integral vs the closed form at M = 10^5 with its tail (1e-6)",
            tags: &[Tag::Quadrature],
            grid_description: "2 <= n <= 10, z in {-1/2, 1/2, 1}",
            grid: Box::new(|c| {
                let mut out = Vec::new();
                for z in f64_set(&[(-1, 2), (1, 2), (1, 1)]) {
                    for n in n_range(c, 2, 10) {
                        out.push(Point::n(n).z(z.clone()));
                    }
                }
                out
            }),
            lhs: Box::new(|pt, c| {
                let r = order_sum_limit_quadrature(pt.n, pt.zf(), &c.quadrature)?;
                Ok(numeric(r.value, 1e-6, false))
            }),
            rhs: Box::new(|pt, _| {
                Ok(numeric(order_sum_extrapolated(pt.n, 100_000, pt.zf())?, 1e-6, false))
            }),
        },
        Identity {
            id: "squared-binomial-quadrature",
            description: "quadrature of the Legendre integral over (1, ∞) vs (2 H_n - H_{2n}) C(2n,n) (1e-8)",
            tags: &[Tag::Quadrature],
            grid_description: "1 <= n <= 8",
            grid: Box::new(|c| grid_n(c, 1, 8)),
            lhs: Box::new(|pt, c| {
                let r = squared_binomial_quadrature(pt.n, &c.quadrature)?;
                Ok(numeric(r.value, 1e-8, false))
            }),
            rhs: Box::new(|pt, c| ex(oracle_squared(c, pt.n, &int(1)))),
        },
        Identity {
            id: "harmonic-portion-conjecture",
            description: "harmonic-number portion of S_n^(p)(z) equals (n)_p S_{n-p}(z) (conjecture, reported only)",
            tags: &[Tag::Conjecture],
            grid_description: "1 <= p <= 3, p <= n <= 15, z in samples",
            grid: Box::new(|c| {
                let mut out = Vec::new();
                for z in &c.z {
                    for n in n_range(c, 1, 15) {
                        for p in p_range(c, 1, 3) {
                            if n >= p as u64 {
                                out.push(Point::n(n).p(p).z(z.clone()));
                            }
                        }
                    }
                }
                out
            }),
            lhs: Box::new(|pt, _| {
                let report = harmonic_portion_conjecture_check(pt.n, pt.pv(), &pt.zv());
                let point = report.points.into_iter().next().ok_or_else(|| {
                    Error::Inconsistency("conjecture check returned no point".into())
                })?;
                Ok(Value::Decided(point.outcome, point.note))
            }),
            rhs: Box::new(|pt, _| Ok(exact(pochhammer(&int(pt.n as i64), pt.pv() as u64)))),
        },
    ]
}

/// `2F1(-ν, -ν; 1; x)` as a float series, for finite differences in `ν`.
fn nu_series(nu: f64, x: f64, terms: usize) -> f64 {
    let mut sum = 0.0;
    let mut ratio = 1.0f64;
    let mut xj = 1.0;
    for j in 0..terms {
        sum += ratio * ratio * xj;
        ratio *= (j as f64 - nu) / (j as f64 + 1.0);
        xj *= x;
    }
    sum
}
