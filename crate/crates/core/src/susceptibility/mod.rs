//! Motional susceptibility `chi_T[w]`, defined by `dF_T[w] = chi_T[w] dq[w]`.
//!
//! `chi_T` is evaluated as the vacuum part `chi_0` (a finite integral over
//! `[0, w]`) plus the thermal correction `dchi_T` (a Bose-weighted integral
//! over `[0, inf)`). Its imaginary part `xi_T` is the dissipative part; the
//! force noise spectrum `C_T` follows from the fluctuation-dissipation
//! relation `C_T[w] = 2 xi_T[w] / (1 - exp(-w / T))`.

mod dispersion;

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::quadrature::{
    integrate_finite, integrate_thermal, richardson_limit, Extrapolation, QuadratureConfig,
    QuadratureResult,
};
use crate::scattering::{alpha_kernel, reference_frequency, MirrorModel};

pub use dispersion::{kramers_kronig_check, uniform_grid, KramersKronigReport, WINDOW_DECAY_RATIO};

const I: Complex64 = Complex64 { re: 0.0, im: 1.0 };

/// Number of halvings in the zero-frequency extrapolations.
pub const EXTRAPOLATION_STEPS: usize = 7;

/// Largest starting frequency of the zero-frequency extrapolations.
pub const EXTRAPOLATION_START: f64 = 0.1;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SusceptibilityValue {
    pub omega: f64,
    pub chi_vacuum: Complex64,
    pub chi_thermal: Complex64,
    pub chi_total: Complex64,
    pub error_estimate: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CorrelationValue {
    pub omega: f64,
    pub c_spectrum: f64,
    pub xi: f64,
}

fn check_frequency(omega: f64) -> Result<()> {
    if omega.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(format!("frequency must be finite, got {omega}")))
    }
}

fn check_temperature(temp: f64) -> Result<()> {
    if temp.is_finite() && temp >= 0.0 {
        Ok(())
    } else {
        Err(Error::Domain(format!("temperature must be finite and >= 0, got {temp}")))
    }
}

fn zero_result() -> QuadratureResult<Complex64> {
    QuadratureResult {
        value: Complex64::new(0.0, 0.0),
        error_estimate: 0.0,
        evaluations: 1,
        converged: true,
    }
}

/// `chi_0[w] = (i / 2 pi) int_0^w w' (w - w') alpha[w', w - w'] dw'`.
pub fn chi_vacuum<M: MirrorModel + ?Sized>(
    model: &M,
    omega: f64,
    cfg: &QuadratureConfig,
) -> Result<QuadratureResult<Complex64>> {
    check_frequency(omega)?;
    if omega == 0.0 {
        return Ok(zero_result());
    }
    let integrand = |x: f64| alpha_kernel(model, x, omega - x) * (x * (omega - x));
    let (lo, hi, sign) = if omega > 0.0 { (0.0, omega, 1.0) } else { (omega, 0.0, -1.0) };
    let result = integrate_finite(integrand, lo, hi, cfg)?.ok()?;
    Ok(QuadratureResult {
        value: I * result.value * (sign / (2.0 * PI)),
        error_estimate: result.error_estimate / (2.0 * PI),
        ..result
    })
}

/// Integrand of the thermal correction without the occupation factor:
/// `w' ((w - w') alpha[w', w - w'] + (w + w') alpha[-w', w + w'])`.
fn thermal_kernel<M: MirrorModel + ?Sized>(model: &M, omega: f64, x: f64) -> Complex64 {
    let forward = alpha_kernel(model, x, omega - x) * (omega - x);
    let backward = alpha_kernel(model, -x, omega + x) * (omega + x);
    (forward + backward) * x
}

/// `dchi_T[w] = (2 i / 2 pi) int_0^inf w' n_T[w'] ((w - w') alpha[w', w - w'] + (w + w') alpha[-w', w + w']) dw'`.
///
/// The perfect mirror (`alpha = 2`) is handled in closed form,
/// `dchi_T = i w (2 pi / 3) T^2`. Other models must become transparent at high
/// frequency.
pub fn chi_thermal_correction<M: MirrorModel + ?Sized>(
    model: &M,
    omega: f64,
    temp: f64,
    cfg: &QuadratureConfig,
) -> Result<QuadratureResult<Complex64>> {
    check_frequency(omega)?;
    check_temperature(temp)?;
    if temp == 0.0 {
        return Ok(zero_result());
    }
    if model.is_perfect_reflector() {
        return Ok(QuadratureResult {
            value: I * (omega * 2.0 * PI * temp * temp / 3.0),
            ..zero_result()
        });
    }
    if model.cutoff_frequency().is_none() {
        return Err(Error::GrowthBoundExceeded {
            degree: crate::quadrature::DEFAULT_GROWTH_DEGREE,
        });
    }
    let result = integrate_thermal(|x| thermal_kernel(model, omega, x), temp, cfg)?.ok()?;
    Ok(QuadratureResult {
        value: I * result.value * (1.0 / PI),
        error_estimate: result.error_estimate / PI,
        ..result
    })
}

/// Upper limit of the zero-point integral, in units of the reference frequency.
/// Beyond it the integrand (which decays like `w'^-3`) is swamped by rounding
/// in the kernel, whose two terms are each of order `w'^2`.
pub const ZERO_POINT_CUTOFF_FACTOR: f64 = 1e2;

/// The thermal correction with `n_T` replaced by the zero-point value `1/2`.
/// This does not reproduce `chi_0`: the vacuum part is not a zero-point
/// version of the thermal one.
///
/// The integral is truncated at `ZERO_POINT_CUTOFF_FACTOR` times the cutoff
/// and the `w'^-3` tail bound is added to the error estimate.
pub fn chi_zero_point_substitute<M: MirrorModel + ?Sized>(
    model: &M,
    omega: f64,
    cfg: &QuadratureConfig,
) -> Result<QuadratureResult<Complex64>> {
    check_frequency(omega)?;
    if model.cutoff_frequency().is_none() {
        return Err(Error::GrowthBoundExceeded {
            degree: crate::quadrature::DEFAULT_GROWTH_DEGREE,
        });
    }
    let upper = ZERO_POINT_CUTOFF_FACTOR * reference_frequency(model) + omega.abs();
    let integrand = |x: f64| thermal_kernel(model, omega, x) * 0.5;
    let cfg = cfg.with_rel_tol(cfg.rel_tol.max(1e-8));
    let result = integrate_finite(integrand, 0.0, upper, &cfg)?.ok()?;
    let tail = integrand(upper).norm() * upper / 2.0;
    Ok(QuadratureResult {
        value: I * result.value * (1.0 / PI),
        error_estimate: (result.error_estimate + tail) / PI,
        ..result
    })
}

/// `chi_T = chi_0 + dchi_T`; at `T = 0` the thermal part is exactly zero.
pub fn chi_total<M: MirrorModel + ?Sized>(
    model: &M,
    omega: f64,
    temp: f64,
    cfg: &QuadratureConfig,
) -> Result<SusceptibilityValue> {
    let vacuum = chi_vacuum(model, omega, cfg)?;
    let thermal = chi_thermal_correction(model, omega, temp, cfg)?;
    Ok(SusceptibilityValue {
        omega,
        chi_vacuum: vacuum.value,
        chi_thermal: thermal.value,
        chi_total: vacuum.value + thermal.value,
        error_estimate: vacuum.error_estimate + thermal.error_estimate,
    })
}

/// `xi_T[w] = Im chi_T[w]`.
pub fn dissipative_part<M: MirrorModel + ?Sized>(model: &M, omega: f64, temp: f64, cfg: &QuadratureConfig) -> Result<f64> {
    Ok(chi_total(model, omega, temp, cfg)?.chi_total.im)
}

/// Force correlation spectrum from the fluctuation-dissipation relation.
pub fn correlation_spectrum<M: MirrorModel + ?Sized>(
    model: &M,
    omega: f64,
    temp: f64,
    cfg: &QuadratureConfig,
) -> Result<CorrelationValue> {
    if omega == 0.0 {
        return Err(Error::Domain(
            "C_T[0] is a limit; use correlation_zero_frequency".into(),
        ));
    }
    if !(temp > 0.0) {
        return Err(Error::Domain(format!("correlation spectrum needs T > 0, got {temp}")));
    }
    let xi = dissipative_part(model, omega, temp, cfg)?;
    Ok(CorrelationValue {
        omega,
        c_spectrum: fluctuation_dissipation(xi, omega, temp),
        xi,
    })
}

/// `C = 2 xi / (1 - exp(-w / T))`.
pub fn fluctuation_dissipation(xi: f64, omega: f64, temp: f64) -> f64 {
    2.0 * xi / -(-omega / temp).exp_m1()
}

/// Starting frequency of the `w -> 0` sequences: `0.1` in natural units,
/// reduced when `T` or the cutoff set a smaller scale.
pub fn extrapolation_start<M: MirrorModel + ?Sized>(model: &M, temp: f64) -> f64 {
    let mut start = EXTRAPOLATION_START;
    if temp > 0.0 {
        start = start.min(EXTRAPOLATION_START * temp);
    }
    if let Some(cutoff) = model.cutoff_frequency() {
        start = start.min(EXTRAPOLATION_START * cutoff);
    }
    start
}

fn halving_sequence(start: f64) -> impl Iterator<Item = f64> {
    (0..EXTRAPOLATION_STEPS).map(move |k| start / 2f64.powi(k as i32))
}

/// Tolerances for sampling near `w = 0`, where the values themselves are tiny.
fn limit_config(cfg: &QuadratureConfig) -> QuadratureConfig {
    cfg.with_abs_tol(f64::MIN_POSITIVE)
}

/// `C_T[0]`, by Richardson extrapolation of `C_T[w_k]` over `w_k = w_0 / 2^k`.
pub fn correlation_zero_frequency<M: MirrorModel + ?Sized>(model: &M, temp: f64, cfg: &QuadratureConfig) -> Result<f64> {
    if !(temp > 0.0) {
        return Err(Error::Domain(format!("C_T[0] needs T > 0, got {temp}")));
    }
    let cfg = limit_config(cfg);
    let values = halving_sequence(extrapolation_start(model, temp))
        .map(|w| correlation_spectrum(model, w, temp, &cfg).map(|c| c.c_spectrum))
        .collect::<Result<Vec<_>>>()?;
    Ok(richardson_limit(&values, 1)?.value)
}

/// Low-frequency coefficients read off the susceptibility itself:
/// `lambda = lim xi / w`, `mu = lim Re chi / w^2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SusceptibilityExpansion {
    pub lambda: Extrapolation,
    pub mu: Extrapolation,
}

pub fn quasistatic_expansion<M: MirrorModel + ?Sized>(
    model: &M,
    temp: f64,
    cfg: &QuadratureConfig,
) -> Result<SusceptibilityExpansion> {
    check_temperature(temp)?;
    let cfg = limit_config(cfg);
    let samples = halving_sequence(extrapolation_start(model, temp))
        .map(|w| chi_total(model, w, temp, &cfg).map(|v| (w, v.chi_total)))
        .collect::<Result<Vec<_>>>()?;
    // xi / w and Re chi / w^2 are even in w
    let slopes: Vec<f64> = samples.iter().map(|(w, chi)| chi.im / w).collect();
    let curvatures: Vec<f64> = samples.iter().map(|(w, chi)| chi.re / (w * w)).collect();
    Ok(SusceptibilityExpansion {
        lambda: richardson_limit(&slopes, 2)?,
        mu: richardson_limit(&curvatures, 2)?,
    })
}

/// Coefficient of `w^3` in `Im chi_0` at low frequency.
pub fn vacuum_cubic_coefficient<M: MirrorModel + ?Sized>(model: &M, cfg: &QuadratureConfig) -> Result<f64> {
    let cfg = limit_config(cfg);
    let values = halving_sequence(extrapolation_start(model, 0.0))
        .map(|w| chi_vacuum(model, w, &cfg).map(|c| c.value.im / (w * w * w)))
        .collect::<Result<Vec<_>>>()?;
    Ok(richardson_limit(&values, 2)?.value)
}
