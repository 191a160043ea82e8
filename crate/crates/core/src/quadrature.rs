//! Adaptive Gauss-Kronrod integration, Bose-weighted semi-infinite integrals,
//! numerical differentiation, Richardson extrapolation and a discrete
//! principal-value Hilbert transform.

use std::cmp::Ordering;
use std::collections::BinaryHeap;
use std::ops::{Add, Mul, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::thermal::{occupation_log_temp_derivative_reduced, occupation_reduced, OCCUPATION_CUTOFF};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureConfig {
    pub rel_tol: f64,
    pub abs_tol: f64,
    pub max_subdivisions: usize,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        Self {
            rel_tol: 1e-10,
            abs_tol: 1e-14,
            max_subdivisions: 200,
        }
    }
}

impl QuadratureConfig {
    pub fn new(rel_tol: f64, abs_tol: f64, max_subdivisions: usize) -> Result<Self> {
        if !(rel_tol > 0.0 && rel_tol.is_finite()) || !(abs_tol > 0.0 && abs_tol.is_finite()) {
            return Err(Error::Config(format!(
                "quadrature tolerances must be positive (rel_tol = {rel_tol}, abs_tol = {abs_tol})"
            )));
        }
        if max_subdivisions == 0 {
            return Err(Error::Config("max_subdivisions must be at least 1".into()));
        }
        Ok(Self {
            rel_tol,
            abs_tol,
            max_subdivisions,
        })
    }

    pub fn with_rel_tol(mut self, rel_tol: f64) -> Self {
        self.rel_tol = rel_tol;
        self
    }

    pub fn with_abs_tol(mut self, abs_tol: f64) -> Self {
        self.abs_tol = abs_tol;
        self
    }

    fn target(&self, magnitude: f64) -> f64 {
        self.abs_tol.max(self.rel_tol * magnitude)
    }
}

/// Integrand values the engine can accumulate: real or complex.
pub trait QuadValue: Copy + Add<Output = Self> + Sub<Output = Self> + Mul<f64, Output = Self> {
    fn zero() -> Self;
    fn magnitude(&self) -> f64;
}

impl QuadValue for f64 {
    fn zero() -> Self {
        0.0
    }
    fn magnitude(&self) -> f64 {
        self.abs()
    }
}

impl QuadValue for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn magnitude(&self) -> f64 {
        self.norm()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureResult<V> {
    pub value: V,
    pub error_estimate: f64,
    pub evaluations: usize,
    pub converged: bool,
}

impl<V: QuadValue> QuadratureResult<V> {
    /// Turns a non-converged result into [`Error::ToleranceNotReached`].
    pub fn ok(self) -> Result<Self> {
        if self.converged {
            Ok(self)
        } else {
            Err(Error::ToleranceNotReached {
                magnitude: self.value.magnitude(),
                error_estimate: self.error_estimate,
                evaluations: self.evaluations,
            })
        }
    }

    pub fn scaled(self, factor: f64) -> Self {
        Self {
            value: self.value * factor,
            error_estimate: self.error_estimate * factor.abs(),
            ..self
        }
    }
}

// 21-point Kronrod extension of the 10-point Gauss rule (QUADPACK qk21).
#[allow(clippy::excessive_precision)]
const XGK: [f64; 11] = [
    0.995_657_163_025_808_080_735_527_280_689_003,
    0.973_906_528_517_171_720_077_964_012_084_452,
    0.930_157_491_355_708_226_001_207_180_059_508,
    0.865_063_366_688_984_510_732_096_688_423_493,
    0.780_817_726_586_416_897_063_717_578_345_042,
    0.679_409_568_299_024_406_234_327_365_114_874,
    0.562_757_134_668_604_683_339_000_099_272_694,
    0.433_395_394_129_247_190_799_265_943_165_784,
    0.294_392_862_701_460_198_131_126_603_103_866,
    0.148_874_338_981_631_210_884_826_001_129_720,
    0.0,
];

#[allow(clippy::excessive_precision)]
const WG: [f64; 5] = [
    0.066_671_344_308_688_137_593_568_809_893_332,
    0.149_451_349_150_580_593_145_776_339_657_697,
    0.219_086_362_515_982_043_995_534_934_228_163,
    0.269_266_719_309_996_355_091_226_921_569_469,
    0.295_524_224_714_752_870_173_892_994_651_338,
];

#[allow(clippy::excessive_precision)]
const WGK: [f64; 11] = [
    0.011_694_638_867_371_874_278_064_396_062_192,
    0.032_558_162_307_964_727_478_818_972_459_390,
    0.054_755_896_574_351_996_031_381_300_244_580,
    0.075_039_674_810_919_952_767_043_140_916_190,
    0.093_125_454_583_697_605_535_065_465_083_366,
    0.109_387_158_802_297_641_899_210_590_325_805,
    0.123_491_976_262_065_851_077_958_109_831_074,
    0.134_709_217_311_473_325_928_054_001_771_707,
    0.142_775_938_577_060_080_797_094_273_138_717,
    0.147_739_104_901_338_491_374_841_515_972_068,
    0.149_445_554_002_916_905_664_936_468_389_821,
];

const EVALS_PER_RULE: usize = 21;

#[derive(Debug, Clone, Copy)]
struct Segment<V> {
    lo: f64,
    hi: f64,
    value: V,
    error: f64,
}

impl<V> PartialEq for Segment<V> {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl<V> Eq for Segment<V> {}

impl<V> PartialOrd for Segment<V> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<V> Ord for Segment<V> {
    // Largest error first; ties broken by position so the order is total.
    fn cmp(&self, other: &Self) -> Ordering {
        self.error
            .total_cmp(&other.error)
            .then_with(|| other.lo.total_cmp(&self.lo))
    }
}

fn kronrod21<V, F>(f: &F, lo: f64, hi: f64) -> Segment<V>
where
    V: QuadValue,
    F: Fn(f64) -> V,
{
    let center = 0.5 * (lo + hi);
    let half = 0.5 * (hi - lo);
    let f_center = f(center);
    let mut gauss = V::zero();
    let mut kronrod = f_center * WGK[10];
    let mut abs_sum = f_center.magnitude() * WGK[10];
    let mut samples = [V::zero(); 20];
    for j in 0..10 {
        let dx = half * XGK[j];
        let f1 = f(center - dx);
        let f2 = f(center + dx);
        samples[2 * j] = f1;
        samples[2 * j + 1] = f2;
        kronrod = kronrod + (f1 + f2) * WGK[j];
        abs_sum += WGK[j] * (f1.magnitude() + f2.magnitude());
        if j % 2 == 1 {
            gauss = gauss + (f1 + f2) * WG[j / 2];
        }
    }
    let mean = kronrod * 0.5;
    let mut asc = WGK[10] * (f_center - mean).magnitude();
    for j in 0..10 {
        asc += WGK[j] * ((samples[2 * j] - mean).magnitude() + (samples[2 * j + 1] - mean).magnitude());
    }
    let scale = half.abs();
    let value = kronrod * half;
    let res_abs = abs_sum * scale;
    let res_asc = asc * scale;
    let mut error = ((kronrod - gauss) * half).magnitude();
    if res_asc != 0.0 && error != 0.0 {
        error = res_asc * (200.0 * error / res_asc).powf(1.5).min(1.0);
    }
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        error = error.max(50.0 * f64::EPSILON * res_abs);
    }
    Segment { lo, hi, value, error }
}

/// Adaptive integration over `[lo, hi]` starting from the given partition
/// points (which must be increasing and include both ends).
fn adaptive<V, F>(f: &F, partition: &[f64], cfg: &QuadratureConfig) -> QuadratureResult<V>
where
    V: QuadValue,
    F: Fn(f64) -> V,
{
    let mut heap: BinaryHeap<Segment<V>> = partition
        .windows(2)
        .filter(|w| w[1] > w[0])
        .map(|w| kronrod21(f, w[0], w[1]))
        .collect();
    let mut evaluations = heap.len() * EVALS_PER_RULE;
    let mut subdivisions = 0usize;
    let mut converged;

    loop {
        let (total, total_err) = heap
            .iter()
            .fold((V::zero(), 0.0), |(v, e), s| (v + s.value, e + s.error));
        converged = total_err <= cfg.target(total.magnitude());
        if converged || subdivisions >= cfg.max_subdivisions {
            break;
        }
        let worst = match heap.pop() {
            Some(s) => s,
            None => break,
        };
        let mid = 0.5 * (worst.lo + worst.hi);
        if !(mid > worst.lo && mid < worst.hi) {
            // interval at floating-point resolution; nothing left to refine
            heap.push(worst);
            break;
        }
        heap.push(kronrod21(f, worst.lo, mid));
        heap.push(kronrod21(f, mid, worst.hi));
        evaluations += 2 * EVALS_PER_RULE;
        subdivisions += 1;
    }

    // Sum in a fixed left-to-right order so results do not depend on heap layout.
    let mut segments = heap.into_vec();
    segments.sort_by(|a, b| a.lo.total_cmp(&b.lo));
    let value = segments.iter().fold(V::zero(), |acc, s| acc + s.value);
    let error_estimate = segments.iter().map(|s| s.error).sum();
    QuadratureResult {
        value,
        error_estimate,
        evaluations: evaluations.max(1),
        converged,
    }
}

/// Integrates `f` over `[lo, hi]`.
///
/// Non-convergence is reported through [`QuadratureResult::converged`] together
/// with the best available estimate; use [`QuadratureResult::ok`] to turn it
/// into an error.
pub fn integrate_finite<V, F>(f: F, lo: f64, hi: f64, cfg: &QuadratureConfig) -> Result<QuadratureResult<V>>
where
    V: QuadValue,
    F: Fn(f64) -> V,
{
    if !(lo.is_finite() && hi.is_finite()) || lo > hi {
        return Err(Error::Domain(format!("invalid integration range [{lo}, {hi}]")));
    }
    if lo == hi {
        return Ok(QuadratureResult {
            value: V::zero(),
            error_estimate: 0.0,
            evaluations: 1,
            converged: true,
        });
    }
    Ok(adaptive(&f, &[lo, hi], cfg))
}

/// Integrates `f` over `[0, inf)` through the map `x = t / (1 - t)`.
/// `f` must decay faster than `1 / x`.
pub fn integrate_semi_infinite<V, F>(f: F, cfg: &QuadratureConfig) -> Result<QuadratureResult<V>>
where
    V: QuadValue,
    F: Fn(f64) -> V,
{
    let mapped = |t: f64| {
        let u = 1.0 - t;
        if u <= 0.0 {
            return V::zero();
        }
        f(t / u) * (1.0 / (u * u))
    };
    let partition: Vec<f64> = (0..=16).map(|k| 1.0 - 0.5f64.powi(k)).chain(std::iter::once(1.0)).collect();
    Ok(adaptive(&mapped, &partition, cfg))
}

/// Default polynomial degree of the growth majorant for thermal integrands.
pub const DEFAULT_GROWTH_DEGREE: u32 = 3;

const GROWTH_SAMPLE_SPLIT: f64 = 60.0;
const GROWTH_EXCESS_FACTOR: f64 = 1e6;

/// `int_X^inf (1 + x^p) e^{-x} / (1 - e^{-x}) dx` bounded via the upper
/// incomplete gamma function for integer `p`.
fn thermal_tail_bound(x: f64, degree: u32) -> f64 {
    // Gamma(p + 1, X) = p! e^{-X} sum_{k=0}^{p} X^k / k!
    let mut term = 1.0;
    let mut partial = 1.0;
    for k in 1..=degree {
        term *= x / k as f64;
        partial += term;
    }
    let factorial: f64 = (1..=degree).map(|k| k as f64).product();
    let e = (-x).exp();
    (e + factorial * e * partial) / (1.0 - e)
}

/// `int_0^inf f(omega) n_T(omega) d omega` with the Bose occupation
/// `n_T(omega) = 1 / (exp(omega / T) - 1)` in natural units, assuming
/// `|f(omega)| <= M (1 + (omega / T)^3)`.
///
/// The `1 / 2 pi` normalisation of mode sums is left to the caller.
pub fn integrate_thermal<V, F>(f: F, temp: f64, cfg: &QuadratureConfig) -> Result<QuadratureResult<V>>
where
    V: QuadValue,
    F: Fn(f64) -> V,
{
    integrate_thermal_with_growth(f, temp, DEFAULT_GROWTH_DEGREE, cfg)
}

/// Same as [`integrate_thermal`] with an explicit majorant degree `p`.
pub fn integrate_thermal_with_growth<V, F>(
    f: F,
    temp: f64,
    degree: u32,
    cfg: &QuadratureConfig,
) -> Result<QuadratureResult<V>>
where
    V: QuadValue,
    F: Fn(f64) -> V,
{
    bose_weighted(f, temp, degree, BoseWeight::Occupation, cfg)
}

/// `int_0^inf f(omega) dn_T/dT d omega`, with the closed-form temperature
/// derivative of the occupation as the weight. Same growth assumption as
/// [`integrate_thermal`].
pub fn integrate_thermal_temp_derivative<V, F>(f: F, temp: f64, cfg: &QuadratureConfig) -> Result<QuadratureResult<V>>
where
    V: QuadValue,
    F: Fn(f64) -> V,
{
    bose_weighted(f, temp, DEFAULT_GROWTH_DEGREE, BoseWeight::TemperatureDerivative, cfg)
}

#[derive(Debug, Clone, Copy)]
enum BoseWeight {
    /// `n(x)`
    Occupation,
    /// `T dn/dT = x e^x / (e^x - 1)^2`, which decays like `x n(x)`.
    TemperatureDerivative,
}

impl BoseWeight {
    fn eval(self, x: f64) -> f64 {
        match self {
            BoseWeight::Occupation => occupation_reduced(x),
            BoseWeight::TemperatureDerivative => occupation_log_temp_derivative_reduced(x),
        }
    }

    /// Bound on the discarded tail beyond `x` for `|g| <= 1 + x^p`.
    fn tail_bound(self, x: f64, degree: u32) -> f64 {
        match self {
            BoseWeight::Occupation => thermal_tail_bound(x, degree),
            // x e^x / (e^x - 1)^2 = x e^{-x} / (1 - e^{-x})^2
            BoseWeight::TemperatureDerivative => thermal_tail_bound(x, degree + 1) / -(-x).exp_m1(),
        }
    }

    /// Factor turning the integral over `x` into one over `omega`.
    fn measure(self, temp: f64) -> f64 {
        match self {
            BoseWeight::Occupation => temp,
            // d omega = T dx and dn/dT = (T dn/dT) / T
            BoseWeight::TemperatureDerivative => 1.0,
        }
    }
}

fn bose_weighted<V, F>(f: F, temp: f64, degree: u32, weight: BoseWeight, cfg: &QuadratureConfig) -> Result<QuadratureResult<V>>
where
    V: QuadValue,
    F: Fn(f64) -> V,
{
    if !(temp.is_finite() && temp > 0.0) {
        return Err(Error::Domain(format!("thermal integral needs T > 0, got {temp}")));
    }
    let g = |x: f64| f(temp * x);
    let measure = weight.measure(temp);

    let mut near = 0.0f64;
    let mut far = 0.0f64;
    let mut x = 0.05;
    let mut evaluations = 0;
    while x <= OCCUPATION_CUTOFF {
        let ratio = g(x).magnitude() / (1.0 + x.powi(degree as i32));
        evaluations += 1;
        if !ratio.is_finite() {
            return Err(Error::GrowthBoundExceeded { degree });
        }
        if x <= GROWTH_SAMPLE_SPLIT {
            near = near.max(ratio);
        } else {
            far = far.max(ratio);
        }
        x *= 1.25;
    }
    if far > GROWTH_EXCESS_FACTOR * near && far > 0.0 {
        return Err(Error::GrowthBoundExceeded { degree });
    }
    let majorant = near.max(far);
    if majorant == 0.0 {
        return Ok(QuadratureResult {
            value: V::zero(),
            error_estimate: 0.0,
            evaluations,
            converged: true,
        });
    }

    // The tail is held below abs_tol and below rel_tol relative to the
    // majorant scale, whichever is smaller.
    let tail_target = 0.1 * cfg.abs_tol.min(cfg.rel_tol * majorant * measure);
    let mut upper = 1.0;
    while upper < OCCUPATION_CUTOFF && measure * majorant * weight.tail_bound(upper, degree) > tail_target {
        upper += 0.5;
    }
    let upper = upper.min(OCCUPATION_CUTOFF);

    // Geometric initial partition resolves features at any scale omega/T.
    let mut partition: Vec<f64> = (0..=24).rev().map(|k| upper * 0.5f64.powi(k)).collect();
    partition.insert(0, 0.0);

    let weighted = |x: f64| g(x) * weight.eval(x);
    let result = adaptive(&weighted, &partition, cfg);
    let tail = measure * majorant * weight.tail_bound(upper, degree);
    Ok(QuadratureResult {
        value: result.value * measure,
        error_estimate: result.error_estimate * measure + tail,
        evaluations: result.evaluations + evaluations,
        converged: result.converged,
    })
}

/// Relative step used by [`differentiate`].
pub const DIFF_STEP: f64 = 1e-6;

/// Central difference with step `scale * 1e-6`, improved by one Richardson level.
pub fn differentiate<F>(f: F, x: f64, scale: f64) -> f64
where
    F: Fn(f64) -> f64,
{
    let step = scale.abs() * DIFF_STEP;
    let central = |h: f64| {
        let hi = x + h;
        let lo = x - h;
        (f(hi) - f(lo)) / (hi - lo)
    };
    let coarse = central(step);
    let fine = central(0.5 * step);
    (4.0 * fine - coarse) / 3.0
}

/// Central difference variant for complex-valued functions of a real variable.
pub fn differentiate_complex<F>(f: F, x: f64, scale: f64) -> Complex64
where
    F: Fn(f64) -> Complex64,
{
    let step = scale.abs() * DIFF_STEP;
    let central = |h: f64| {
        let hi = x + h;
        let lo = x - h;
        (f(hi) - f(lo)) / (hi - lo)
    };
    let coarse = central(step);
    let fine = central(0.5 * step);
    (fine * 4.0 - coarse) / 3.0
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Extrapolation {
    pub value: f64,
    pub error_estimate: f64,
}

/// Richardson limit of a sequence sampled at `h_k = h_0 / 2^k`, assuming an
/// expansion `v(h) = v_0 + c_1 h^q + c_2 h^{2q} + ...` with `q = power`.
///
/// The estimate with the smallest difference between successive tableau
/// entries is returned.
pub fn richardson_limit(values: &[f64], power: u32) -> Result<Extrapolation> {
    if values.len() < 3 {
        return Err(Error::ExtrapolationUnstable(format!(
            "need at least 3 samples, got {}",
            values.len()
        )));
    }
    if values.iter().any(|v| !v.is_finite()) {
        return Err(Error::ExtrapolationUnstable("non-finite sample".into()));
    }
    let n = values.len();
    let mut table = vec![vec![0.0; n]; n];
    let mut best = Extrapolation {
        value: values[n - 1],
        error_estimate: f64::INFINITY,
    };
    let mut diagonal_steps = Vec::with_capacity(n);
    for k in 0..n {
        table[k][0] = values[k];
        for j in 1..=k {
            let factor = 2f64.powi((power * j as u32) as i32);
            table[k][j] = table[k][j - 1] + (table[k][j - 1] - table[k - 1][j - 1]) / (factor - 1.0);
            let err = (table[k][j] - table[k][j - 1])
                .abs()
                .max((table[k][j] - table[k - 1][j - 1]).abs());
            if err <= best.error_estimate {
                best = Extrapolation {
                    value: table[k][j],
                    error_estimate: err,
                };
            }
        }
        if k > 0 {
            diagonal_steps.push((table[k][k] - table[k - 1][k - 1]).abs());
        }
    }
    let scale = values.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let floor = 1e-9 * scale;
    let first = diagonal_steps[0];
    let last = *diagonal_steps.last().unwrap_or(&0.0);
    if last > floor && last > first {
        return Err(Error::ExtrapolationUnstable(format!(
            "successive estimates diverge (first step {first:e}, last step {last:e})"
        )));
    }
    Ok(best)
}

/// Minimum grid length accepted by [`hilbert_transform_pv`].
pub const MIN_HILBERT_POINTS: usize = 64;

/// Discrete `(1/pi) PV int g(w') / (w' - w) dw'` at grid index `at` for
/// samples on a uniform grid.
///
/// The singular part is removed by subtraction, `(g(w') - g(w)) / (w' - w)`,
/// which is integrated by the trapezoid rule (its value at `w' = w` is the
/// central-difference slope), and the subtracted term contributes the exact
/// window integral `g(w) ln((b - w) / (w - a))`. Accuracy is `O(h^2)` plus the
/// truncation of the finite window. The grid spacing cancels out, so only the
/// sample values are needed.
pub fn hilbert_transform_pv(samples: &[f64], at: usize) -> Result<f64> {
    let n = samples.len();
    if n < MIN_HILBERT_POINTS {
        return Err(Error::GridTooCoarse(format!(
            "{n} points, need at least {MIN_HILBERT_POINTS}"
        )));
    }
    if at == 0 || at >= n - 1 {
        return Err(Error::Domain(format!("index {at} is not an interior grid point")));
    }
    let center = samples[at];
    let mut sum = 0.0;
    for (j, &g) in samples.iter().enumerate() {
        if j == at {
            continue;
        }
        let weight = if j == 0 || j == n - 1 { 0.5 } else { 1.0 };
        sum += weight * (g - center) / (j as f64 - at as f64);
    }
    sum += 0.5 * (samples[at + 1] - samples[at - 1]);
    sum += center * ((n - 1 - at) as f64 / at as f64).ln();
    Ok(sum / std::f64::consts::PI)
}
