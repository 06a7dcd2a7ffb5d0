//! Globally adaptive 7/15-point Gauss-Kronrod quadrature and a principal
//! value helper for the `1/(w - nu)` kernel in the angular variable.

use std::cmp::Ordering;
use std::collections::BinaryHeap;
use std::f64::consts::PI;

use crate::error::{LgfError, Result};

const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_2,
    0.140_653_259_715_525_9,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_728,
];
// Gauss weights for the odd-indexed Kronrod nodes (1, 3, 5) and the centre.
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    pub abs: f64,
    pub rel: f64,
    pub max_intervals: usize,
    /// Each breakpoint-delimited piece starts out split this many times.
    pub initial_pieces: usize,
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance {
            abs: 1e-10,
            rel: 1e-10,
            max_intervals: 20_000,
            initial_pieces: 1,
        }
    }
}

impl Tolerance {
    pub fn new(abs: f64, rel: f64) -> Self {
        Tolerance {
            abs,
            rel,
            ..Default::default()
        }
    }

    pub fn pieces(mut self, pieces: usize) -> Self {
        self.initial_pieces = pieces.max(1);
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Estimate {
    pub value: f64,
    pub error: f64,
}

struct Interval {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
}

impl PartialEq for Interval {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}
impl Eq for Interval {}
impl PartialOrd for Interval {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Interval {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

fn kronrod<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> Interval {
    let centre = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(centre);
    let mut kronrod = WGK[7] * fc;
    let mut gauss = WG[3] * fc;
    let mut samples = [(0.0, 0.0); 7];
    for (j, (&x, &w)) in XGK.iter().zip(&WGK).take(7).enumerate() {
        let dx = half * x;
        let (lo, hi) = (f(centre - dx), f(centre + dx));
        samples[j] = (lo, hi);
        kronrod += w * (lo + hi);
        if j % 2 == 1 {
            gauss += WG[j / 2] * (lo + hi);
        }
    }
    let mean = 0.5 * kronrod;
    let mut asc = WGK[7] * (fc - mean).abs();
    for (j, (lo, hi)) in samples.iter().enumerate() {
        asc += WGK[j] * ((lo - mean).abs() + (hi - mean).abs());
    }
    let value = kronrod * half;
    let asc = asc * half.abs();
    let mut error = ((kronrod - gauss) * half).abs();
    // QUADPACK error scaling
    if asc != 0.0 && error != 0.0 {
        error = asc * (200.0 * error / asc).powf(1.5).min(1.0);
    }
    error = error.max(50.0 * f64::EPSILON * value.abs());
    Interval { a, b, value, error }
}

/// `int_a^b f` with `f` allowed to be singular at `a`, `b` and the breakpoints.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, breaks: &[f64], tol: Tolerance) -> Result<Estimate> {
    let mut points: Vec<f64> = std::iter::once(a)
        .chain(breaks.iter().copied().filter(|&x| x > a && x < b))
        .chain(std::iter::once(b))
        .collect();
    points.sort_by(f64::total_cmp);
    points.dedup();

    let mut heap = BinaryHeap::new();
    for w in points.windows(2) {
        let pieces = tol.initial_pieces;
        let h = (w[1] - w[0]) / pieces as f64;
        for i in 0..pieces {
            let lo = w[0] + h * i as f64;
            let hi = if i + 1 == pieces { w[1] } else { lo + h };
            heap.push(kronrod(&f, lo, hi));
        }
    }

    let mut value: f64 = heap.iter().map(|iv| iv.value).sum();
    let mut error: f64 = heap.iter().map(|iv| iv.error).sum();
    let mut splits = 0usize;
    loop {
        let target = tol.abs.max(tol.rel * value.abs());
        if error <= target {
            // resum to shed drift from the running totals
            let value = heap.iter().map(|iv| iv.value).sum();
            let error: f64 = heap.iter().map(|iv| iv.error).sum();
            if error <= target {
                return Ok(Estimate { value, error });
            }
        }
        let worst = heap.pop().expect("heap is never empty");
        let mid = 0.5 * (worst.a + worst.b);
        if heap.len() + 1 >= tol.max_intervals || mid <= worst.a || mid >= worst.b {
            return Err(LgfError::QuadratureFailure {
                tolerance: target,
                estimate: error,
            });
        }
        let left = kronrod(&f, worst.a, mid);
        let right = kronrod(&f, mid, worst.b);
        value += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        splits += 1;
        if splits.is_multiple_of(256) {
            value = heap.iter().map(|iv| iv.value).sum();
            error = heap.iter().map(|iv| iv.error).sum();
        }
    }
}

/// `cos t0 - cos t`, accurate near `t = t0`.
fn cos_difference(t0: f64, t: f64) -> f64 {
    2.0 * (0.5 * (t + t0)).sin() * (0.5 * (t - t0)).sin()
}

/// Principal value `P int_0^pi phi(t) / (omega - cos t) dt` for `|omega| < 1`.
///
/// Uses `P int_0^pi dt / (omega - cos t) = 0`, so subtracting `phi(t0)` with
/// `cos t0 = omega` leaves an integrand that is regular at the pole. In the
/// original variable this is `P int_{-1}^{1} f(nu) / (omega - nu) dnu` with
/// `phi(t) = f(cos t) sin t`.
pub fn pv_cosine_kernel<F: Fn(f64) -> f64>(phi: F, omega: f64, breaks: &[f64], tol: Tolerance) -> Result<Estimate> {
    debug_assert!(omega.abs() < 1.0);
    let t0 = omega.acos();
    let p0 = phi(t0);
    let mut all = breaks.to_vec();
    all.push(t0);
    integrate(|t| (phi(t) - p0) / cos_difference(t0, t), 0.0, PI, &all, tol)
}
