//! Adaptive Gauss–Kronrod (21-point) quadrature on finite and semi-infinite
//! intervals.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use serde::Serialize;

use crate::error::{Error, Result};

#[allow(clippy::excessive_precision)]
const XGK: [f64; 11] = [
    0.995_657_163_025_808_080_735_527_3,
    0.973_906_528_517_171_720_077_964,
    0.930_157_491_355_708_226_001_207_2,
    0.865_063_366_688_984_510_732_096_7,
    0.780_817_726_586_416_897_063_717_6,
    0.679_409_568_299_024_406_234_327_4,
    0.562_757_134_668_604_683_339_000_1,
    0.433_395_394_129_247_190_799_265_9,
    0.294_392_862_701_460_198_131_126_6,
    0.148_874_338_981_631_210_884_826,
    0.0,
];

#[allow(clippy::excessive_precision)]
const WGK: [f64; 11] = [
    0.011_694_638_867_371_874_278_064_4,
    0.032_558_162_307_964_727_478_818_97,
    0.054_755_896_574_351_996_031_381_3,
    0.075_039_674_810_919_952_767_043_14,
    0.093_125_454_583_697_605_535_065_47,
    0.109_387_158_802_297_641_899_210_6,
    0.123_491_976_262_065_851_077_958_1,
    0.134_709_217_311_473_325_928_054,
    0.142_775_938_577_060_080_797_094_3,
    0.147_739_104_901_338_491_374_841_5,
    0.149_445_554_002_916_905_664_936_5,
];

/// Gauss weights for the odd-indexed Kronrod nodes 1, 3, 5, 7, 9.
#[allow(clippy::excessive_precision)]
const WG: [f64; 5] = [
    0.066_671_344_308_688_137_593_568_81,
    0.149_451_349_150_580_593_145_776_3,
    0.219_086_362_515_982_043_995_534_9,
    0.269_266_719_309_996_355_091_226_9,
    0.295_524_224_714_752_870_173_893,
];

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct QuadratureResult {
    pub value: f64,
    pub error_estimate: f64,
    pub subdivisions: usize,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureConfig {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_subdivisions: usize,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        QuadratureConfig {
            abs_tol: 1e-10,
            rel_tol: 1e-13,
            max_subdivisions: 10_000,
        }
    }
}

impl QuadratureConfig {
    pub fn with_abs_tol(abs_tol: f64) -> Self {
        QuadratureConfig {
            abs_tol,
            ..Self::default()
        }
    }

    fn tolerance(&self, value: f64) -> f64 {
        self.abs_tol.max(self.rel_tol * value.abs())
    }
}

#[derive(Debug, Clone, Copy)]
struct Segment {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
}

impl PartialEq for Segment {
    fn eq(&self, other: &Self) -> bool {
        self.error.total_cmp(&other.error) == Ordering::Equal
    }
}

impl Eq for Segment {}

impl PartialOrd for Segment {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Segment {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

fn kronrod<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> Result<Segment> {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);
    let mut kronrod_sum = fc * WGK[10];
    let mut gauss_sum = 0.0;
    let mut abs_sum = kronrod_sum.abs();
    let mut values = [(0.0, 0.0); 10];
    for (i, node) in XGK.iter().take(10).enumerate() {
        let dx = half * node;
        let f1 = f(center - dx);
        let f2 = f(center + dx);
        values[i] = (f1, f2);
        kronrod_sum += WGK[i] * (f1 + f2);
        abs_sum += WGK[i] * (f1.abs() + f2.abs());
        if i % 2 == 1 {
            gauss_sum += WG[i / 2] * (f1 + f2);
        }
    }
    let mean = 0.5 * kronrod_sum;
    let mut asc = WGK[10] * (fc - mean).abs();
    for (i, (f1, f2)) in values.iter().enumerate() {
        asc += WGK[i] * ((f1 - mean).abs() + (f2 - mean).abs());
    }

    let value = kronrod_sum * half;
    let abs_value = abs_sum * half.abs();
    let asc = asc * half.abs();
    let mut error = ((kronrod_sum - gauss_sum) * half).abs();
    if asc != 0.0 && error != 0.0 {
        error = asc * (1.0f64).min((200.0 * error / asc).powf(1.5));
    }
    if abs_value > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        error = error.max(50.0 * f64::EPSILON * abs_value);
    }
    if !value.is_finite() || !error.is_finite() {
        return Err(Error::domain(format!(
            "integrand is not finite on [{a}, {b}]"
        )));
    }
    Ok(Segment { a, b, value, error })
}

/// Integrates `f` over `[a, b]`, bisecting the segment with the largest error
/// until the summed error estimate meets the tolerance.
pub fn integrate<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    config: &QuadratureConfig,
) -> Result<QuadratureResult> {
    if !(a.is_finite() && b.is_finite()) {
        return Err(Error::invalid(
            "finite limits required; use integrate_semi_infinite",
        ));
    }
    if a == b {
        return Ok(QuadratureResult {
            value: 0.0,
            error_estimate: 0.0,
            subdivisions: 0,
        });
    }
    let first = kronrod(&f, a, b)?;
    let mut total = first.value;
    let mut total_error = first.error;
    let mut heap = BinaryHeap::from(vec![first]);
    let mut subdivisions = 0;

    while total_error > config.tolerance(total) {
        if subdivisions >= config.max_subdivisions {
            return Err(Error::NonConvergence(QuadratureResult {
                value: total,
                error_estimate: total_error,
                subdivisions,
            }));
        }
        let worst = heap.pop().expect("heap holds at least one segment");
        let mid = 0.5 * (worst.a + worst.b);
        let left = kronrod(&f, worst.a, mid)?;
        let right = kronrod(&f, mid, worst.b)?;
        total += left.value + right.value - worst.value;
        total_error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        subdivisions += 1;
        // The running sums drift; refresh them from the segments now and then.
        if subdivisions % 64 == 0 {
            total = heap.iter().map(|s| s.value).sum();
            total_error = heap.iter().map(|s| s.error).sum();
        }
    }
    total = heap.iter().map(|s| s.value).sum();
    total_error = heap.iter().map(|s| s.error).sum();
    Ok(QuadratureResult {
        value: total,
        error_estimate: total_error,
        subdivisions,
    })
}

/// Integrates `f` over `[a, ∞)` through `v = a + (1 - s)/s`, `s ∈ (0, 1]`.
pub fn integrate_semi_infinite<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    config: &QuadratureConfig,
) -> Result<QuadratureResult> {
    integrate(
        |s| {
            let v = a + (1.0 - s) / s;
            f(v) / (s * s)
        },
        0.0,
        1.0,
        config,
    )
}

/// `∫_0^1 t^k ln^j t dt`, numerically, for checking the exact moments.
pub fn quadrature_log_moment(
    k: u32,
    j: u32,
    config: &QuadratureConfig,
) -> Result<QuadratureResult> {
    // t = e^{-v}: ∫_0^∞ (-v)^j e^{-(k+1)v} dv
    integrate_semi_infinite(
        |v| (-v).powi(j as i32) * (-(k as f64 + 1.0) * v).exp(),
        0.0,
        config,
    )
}
