//! Quasistatic coefficients: the viscosity `lambda_T` and the mass correction
//! `mu_T` in `chi_T[w] = i w lambda_T + w^2 mu_T + ...`.
//!
//! Each coefficient has two routes. The spectral route integrates
//! `n_T d/dw (w^2 k[w])` with the kernel `k = a` or `b`; the entropic route
//! differentiates an energy-like integral (`A(T)` or `B(T)`) in temperature,
//! under the integral sign. They are related by an integration by parts, so
//! their agreement is a check on the kernels and on the quadrature.

use std::cell::RefCell;
use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::quadrature::{
    integrate_semi_infinite, integrate_thermal, integrate_thermal_temp_derivative, QuadratureConfig, QuadratureResult,
};
use crate::scattering::{
    a_derivative, a_function, b_derivative, b_function, reflection_probability, scattering_delay, MirrorModel,
};
use crate::susceptibility::correlation_zero_frequency;
use crate::units::UnitSystem;

/// Runs a fallible integrand through an infallible integrator: the first
/// error is kept and reported after the integration.
fn with_fallible<F, G>(f: F, integrate: G) -> Result<QuadratureResult<f64>>
where
    F: Fn(f64) -> Result<f64>,
    G: FnOnce(&dyn Fn(f64) -> f64) -> Result<QuadratureResult<f64>>,
{
    let failure: RefCell<Option<Error>> = RefCell::new(None);
    let wrapped = |w: f64| match f(w) {
        Ok(v) => v,
        Err(e) => {
            failure.borrow_mut().get_or_insert(e);
            0.0
        }
    };
    let result = integrate(&wrapped);
    if let Some(e) = failure.into_inner() {
        return Err(e);
    }
    result?.ok()
}

fn check_temperature(temp: f64) -> Result<()> {
    if temp.is_finite() && temp > 0.0 {
        Ok(())
    } else {
        Err(Error::Domain(format!("coefficients need T > 0, got {temp}")))
    }
}

/// `A(T) = int_0^inf (dw / 2 pi) 2 w n_T[w] R[w]`.
pub fn energy_flux_a<M: MirrorModel + ?Sized>(model: &M, temp: f64, cfg: &QuadratureConfig) -> Result<QuadratureResult<f64>> {
    check_temperature(temp)?;
    let r = integrate_thermal(|w| w * reflection_probability(model, w), temp, cfg)?.ok()?;
    Ok(r.scaled(1.0 / PI))
}

/// `dA/dT`, differentiating the occupation under the integral.
pub fn energy_flux_a_temp_derivative<M: MirrorModel + ?Sized>(
    model: &M,
    temp: f64,
    cfg: &QuadratureConfig,
) -> Result<QuadratureResult<f64>> {
    check_temperature(temp)?;
    let r = integrate_thermal_temp_derivative(|w| w * reflection_probability(model, w), temp, cfg)?.ok()?;
    Ok(r.scaled(1.0 / PI))
}

/// `lambda_T = 2 int_0^inf (dw / 2 pi) n_T[w] (w^2 a'[w] + 2 w a[w])`.
pub fn lambda_spectral<M: MirrorModel + ?Sized>(model: &M, temp: f64, cfg: &QuadratureConfig) -> Result<QuadratureResult<f64>> {
    check_temperature(temp)?;
    let integrand = |w: f64| w * w * a_derivative(model, w) + 2.0 * w * a_function(model, w);
    let r = integrate_thermal(integrand, temp, cfg)?.ok()?;
    Ok(r.scaled(1.0 / PI))
}

/// `lambda_T = 2 T dA/dT`.
pub fn lambda_entropic<M: MirrorModel + ?Sized>(model: &M, temp: f64, cfg: &QuadratureConfig) -> Result<QuadratureResult<f64>> {
    Ok(energy_flux_a_temp_derivative(model, temp, cfg)?.scaled(2.0 * temp))
}

/// `B(T) = int_0^inf (dw / 2 pi) 2 w n_T[w] (1 - 2 R[w]) tau[w]`.
pub fn stocked_quantity_b<M: MirrorModel + ?Sized>(model: &M, temp: f64, cfg: &QuadratureConfig) -> Result<QuadratureResult<f64>> {
    check_temperature(temp)?;
    let r = with_fallible(|w| Ok(w * b_function(model, w)?), |f| integrate_thermal(f, temp, cfg))?;
    Ok(r.scaled(0.5 / PI))
}

/// `dB/dT`, differentiating the occupation under the integral.
pub fn stocked_quantity_b_temp_derivative<M: MirrorModel + ?Sized>(
    model: &M,
    temp: f64,
    cfg: &QuadratureConfig,
) -> Result<QuadratureResult<f64>> {
    check_temperature(temp)?;
    let r = with_fallible(|w| Ok(w * b_function(model, w)?), |f| {
        integrate_thermal_temp_derivative(f, temp, cfg)
    })?;
    Ok(r.scaled(0.5 / PI))
}

/// `mu_T = int_0^inf (dw / 2 pi) n_T[w] (w^2 b'[w] + 2 w b[w])`.
pub fn mu_spectral<M: MirrorModel + ?Sized>(model: &M, temp: f64, cfg: &QuadratureConfig) -> Result<QuadratureResult<f64>> {
    check_temperature(temp)?;
    let integrand = |w: f64| Ok(w * w * b_derivative(model, w)? + 2.0 * w * b_function(model, w)?);
    let r = with_fallible(integrand, |f| integrate_thermal(f, temp, cfg))?;
    Ok(r.scaled(0.5 / PI))
}

/// `mu_T = T dB/dT`.
pub fn mu_entropic<M: MirrorModel + ?Sized>(model: &M, temp: f64, cfg: &QuadratureConfig) -> Result<QuadratureResult<f64>> {
    Ok(stocked_quantity_b_temp_derivative(model, temp, cfg)?.scaled(temp))
}

/// `|x - y| / max(|x|, |y|)`, zero when both vanish.
pub fn relative_discrepancy(x: f64, y: f64) -> f64 {
    let scale = x.abs().max(y.abs());
    if scale == 0.0 {
        0.0
    } else {
        (x - y).abs() / scale
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoefficientErrors {
    pub lambda_spectral: f64,
    pub lambda_entropic: f64,
    pub mu_spectral: f64,
    pub mu_entropic: f64,
    pub energy_flux: f64,
    pub stocked_quantity: f64,
}

impl CoefficientErrors {
    pub fn lambda(&self) -> f64 {
        self.lambda_spectral.max(self.lambda_entropic)
    }

    pub fn mu(&self) -> f64 {
        self.mu_spectral.max(self.mu_entropic)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoefficientReport {
    pub temp: f64,
    pub lambda_spectral: f64,
    pub lambda_entropic: f64,
    pub mu_spectral: f64,
    pub mu_entropic: f64,
    /// `A(T)`
    pub energy_flux: f64,
    /// `B(T)`
    pub stocked_quantity: f64,
    pub route_discrepancy_lambda: f64,
    pub route_discrepancy_mu: f64,
    pub errors: CoefficientErrors,
}

impl CoefficientReport {
    pub fn routes_agree(&self, tol: f64) -> bool {
        self.route_discrepancy_lambda <= tol && self.route_discrepancy_mu <= tol
    }

    /// Rescales from natural units to the given unit system.
    pub fn to_units(&self, units: &UnitSystem) -> CoefficientReport {
        let mass = units.mass_factor();
        let energy = units.energy_factor();
        CoefficientReport {
            temp: units.temperature_from_natural(self.temp),
            lambda_spectral: self.lambda_spectral * mass,
            lambda_entropic: self.lambda_entropic * mass,
            mu_spectral: self.mu_spectral * mass,
            mu_entropic: self.mu_entropic * mass,
            energy_flux: self.energy_flux * energy,
            stocked_quantity: self.stocked_quantity * energy,
            errors: CoefficientErrors {
                lambda_spectral: self.errors.lambda_spectral * mass,
                lambda_entropic: self.errors.lambda_entropic * mass,
                mu_spectral: self.errors.mu_spectral * mass,
                mu_entropic: self.errors.mu_entropic * mass,
                energy_flux: self.errors.energy_flux * energy,
                stocked_quantity: self.errors.stocked_quantity * energy,
            },
            ..*self
        }
    }
}

/// Both routes for both coefficients, plus `A` and `B`, at one temperature
/// (natural units).
pub fn compute_coefficients<M: MirrorModel + ?Sized>(model: &M, temp: f64, cfg: &QuadratureConfig) -> Result<CoefficientReport> {
    let lambda_s = lambda_spectral(model, temp, cfg)?;
    let lambda_e = lambda_entropic(model, temp, cfg)?;
    let mu_s = mu_spectral(model, temp, cfg)?;
    let mu_e = mu_entropic(model, temp, cfg)?;
    let flux = energy_flux_a(model, temp, cfg)?;
    let stocked = stocked_quantity_b(model, temp, cfg)?;
    Ok(CoefficientReport {
        temp,
        lambda_spectral: lambda_s.value,
        lambda_entropic: lambda_e.value,
        mu_spectral: mu_s.value,
        mu_entropic: mu_e.value,
        energy_flux: flux.value,
        stocked_quantity: stocked.value,
        route_discrepancy_lambda: relative_discrepancy(lambda_s.value, lambda_e.value),
        route_discrepancy_mu: relative_discrepancy(mu_s.value, mu_e.value),
        errors: CoefficientErrors {
            lambda_spectral: lambda_s.error_estimate,
            lambda_entropic: lambda_e.error_estimate,
            mu_spectral: mu_s.error_estimate,
            mu_entropic: mu_e.error_estimate,
            energy_flux: flux.error_estimate,
            stocked_quantity: stocked.error_estimate,
        },
    })
}

/// Bandwidth-type integrals fixing the high-temperature laws, and the
/// low-frequency data fixing the low-temperature ones.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AsymptoticsReport {
    /// `Omega_C = int_0^inf (dw / 2 pi) R[w]`; infinite for the perfect mirror.
    pub omega_c_effective: f64,
    /// `Delta_S = int_0^inf (dw / 2 pi) (1 - 2 R[w]) 2 tau[w]`.
    pub delta_s: f64,
    pub r0: f64,
    pub tau0: f64,
}

/// The four limiting laws evaluated at one temperature.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AsymptoticValues {
    pub energy_flux_low_t: f64,
    pub energy_flux_high_t: f64,
    pub stocked_low_t: f64,
    pub stocked_high_t: f64,
    pub lambda_low_t: f64,
    pub lambda_high_t: f64,
    pub mu_low_t: f64,
    pub mu_high_t: f64,
}

impl AsymptoticsReport {
    pub fn at(&self, temp: f64) -> AsymptoticValues {
        let t2 = temp * temp;
        // low T: R and tau frozen at their w = 0 values
        let energy_flux_low_t = self.r0 * PI * t2 / 6.0;
        let stocked_low_t = (1.0 - 2.0 * self.r0) * self.tau0 * PI * t2 / 6.0;
        // high T: n_T ~ T / w
        let energy_flux_high_t = 2.0 * temp * self.omega_c_effective;
        let stocked_high_t = temp * self.delta_s;
        AsymptoticValues {
            energy_flux_low_t,
            energy_flux_high_t,
            stocked_low_t,
            stocked_high_t,
            // A and B scale as T^2 at low T and as T at high T
            lambda_low_t: 4.0 * energy_flux_low_t,
            lambda_high_t: 2.0 * energy_flux_high_t,
            mu_low_t: 2.0 * stocked_low_t,
            mu_high_t: stocked_high_t,
        }
    }
}

pub fn asymptotics<M: MirrorModel + ?Sized>(model: &M, cfg: &QuadratureConfig) -> Result<AsymptoticsReport> {
    let r0 = model.low_frequency_reflection();
    let tau0 = model.low_frequency_delay();
    if model.is_perfect_reflector() {
        return Ok(AsymptoticsReport {
            omega_c_effective: f64::INFINITY,
            delta_s: 0.0,
            r0,
            tau0,
        });
    }
    if model.cutoff_frequency().is_none() {
        return Err(Error::DivergentBandwidth);
    }
    let bandwidth = integrate_semi_infinite(|w| reflection_probability(model, w), cfg)?.ok()?;
    let integrand = |w: f64| Ok((1.0 - 2.0 * reflection_probability(model, w)) * 2.0 * scattering_delay(model, w)?);
    // Delta_S may vanish through cancellation, so its tolerance is set
    // relative to the integral of the modulus
    let modulus = with_fallible(|w| Ok(integrand(w)?.abs()), |f| integrate_semi_infinite(f, cfg))?;
    let delay_cfg = cfg.with_abs_tol(cfg.abs_tol.max(cfg.rel_tol * modulus.value));
    let delay = with_fallible(integrand, |f| integrate_semi_infinite(f, &delay_cfg))?;
    Ok(AsymptoticsReport {
        omega_c_effective: bandwidth.value / (2.0 * PI),
        delta_s: delay.value / (2.0 * PI),
        r0,
        tau0,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EinsteinCheck {
    /// `C_T[0] / 2`
    pub half_correlation: f64,
    /// `T lambda_T`
    pub t_lambda: f64,
    pub discrepancy: f64,
}

/// Compares `C_T[0] / 2` with `T lambda_T` from the spectral route.
pub fn einstein_check<M: MirrorModel + ?Sized>(model: &M, temp: f64, cfg: &QuadratureConfig) -> Result<EinsteinCheck> {
    let lambda = lambda_spectral(model, temp, cfg)?.value;
    einstein_check_with_lambda(model, temp, lambda, cfg)
}

/// Same as [`einstein_check`] against a caller-supplied `lambda_T`.
pub fn einstein_check_with_lambda<M: MirrorModel + ?Sized>(
    model: &M,
    temp: f64,
    lambda: f64,
    cfg: &QuadratureConfig,
) -> Result<EinsteinCheck> {
    check_temperature(temp)?;
    let half_correlation = 0.5 * correlation_zero_frequency(model, temp, cfg)?;
    let t_lambda = temp * lambda;
    Ok(EinsteinCheck {
        half_correlation,
        t_lambda,
        discrepancy: (half_correlation - t_lambda).abs() / t_lambda.abs(),
    })
}

/// Margin used to read `hbar w_C << m c^2`.
pub const CUTOFF_MASS_MARGIN: f64 = 0.01;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MassBoundConfig {
    /// Mirror mass `m`, in natural units (`m c^2 / hbar` is a frequency).
    pub mirror_mass: f64,
}

impl MassBoundConfig {
    pub fn new(mirror_mass: f64) -> Result<Self> {
        if mirror_mass.is_finite() && mirror_mass > 0.0 {
            Ok(Self { mirror_mass })
        } else {
            Err(Error::Domain(format!("mirror mass must be > 0, got {mirror_mass}")))
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MassBoundReport {
    /// `hbar w_C / m c^2`; `None` without a cutoff.
    pub cutoff_ratio: Option<f64>,
    /// `hbar w_C < 0.01 m c^2`; `None` without a cutoff.
    pub cutoff_condition: Option<bool>,
    pub mu: f64,
    /// `|mu_T| / m`
    pub mass_ratio: f64,
    pub mass_condition: bool,
    /// `T >= hbar w_C`: outside the low-temperature regime the check assumes.
    pub regime_warning: bool,
}

impl MassBoundReport {
    pub fn passes(&self) -> bool {
        self.mass_condition && self.cutoff_condition.unwrap_or(true)
    }
}

pub fn mass_bound_check<M: MirrorModel + ?Sized>(
    model: &M,
    temp: f64,
    cfg: &QuadratureConfig,
    bound: MassBoundConfig,
) -> Result<MassBoundReport> {
    let mu = mu_spectral(model, temp, cfg)?.value;
    let cutoff = model.cutoff_frequency();
    let cutoff_ratio = cutoff.map(|w| w / bound.mirror_mass);
    let mass_ratio = mu.abs() / bound.mirror_mass;
    Ok(MassBoundReport {
        cutoff_ratio,
        cutoff_condition: cutoff_ratio.map(|r| r < CUTOFF_MASS_MARGIN),
        mu,
        mass_ratio,
        mass_condition: mass_ratio < 1.0,
        regime_warning: cutoff.is_some_and(|w| temp >= w),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scattering::{LorentzianMirror, PerfectMirror, RationalMirror};

    fn cfg() -> QuadratureConfig {
        QuadratureConfig::default()
    }

    fn lorentzian(tau0: f64) -> LorentzianMirror {
        LorentzianMirror::new(tau0).unwrap()
    }

    #[test]
    fn perfect_mirror_closed_forms() {
        for &t in &[0.1, 1.0, 10.0] {
            let lambda = lambda_spectral(&PerfectMirror, t, &cfg()).unwrap().value;
            assert!((lambda * 3.0 / (2.0 * PI * t * t) - 1.0).abs() < 1e-8);
            let entropic = lambda_entropic(&PerfectMirror, t, &cfg()).unwrap().value;
            assert!(relative_discrepancy(lambda, entropic) < 1e-8);
            assert_eq!(mu_spectral(&PerfectMirror, t, &cfg()).unwrap().value, 0.0);
            assert_eq!(mu_entropic(&PerfectMirror, t, &cfg()).unwrap().value, 0.0);
            assert_eq!(stocked_quantity_b(&PerfectMirror, t, &cfg()).unwrap().value, 0.0);
        }
        let a = energy_flux_a(&PerfectMirror, 1.0, &cfg()).unwrap().value;
        assert!((a - PI / 6.0).abs() < 1e-10);
    }

    #[test]
    fn lorentzian_reference_values() {
        // independently computed reference values at tau0 = 1, T = 1
        let r = compute_coefficients(&lorentzian(1.0), 1.0, &cfg()).unwrap();
        assert!((r.energy_flux - 0.261936).abs() < 1e-6);
        assert!((r.lambda_spectral - 0.7490979).abs() < 1e-6);
        assert!((r.stocked_quantity + 0.112613).abs() < 1e-6);
        assert!((r.mu_spectral + 0.0982765).abs() < 1e-6);
        assert!(r.routes_agree(1e-6));
    }

    #[test]
    fn low_temperature_laws() {
        let m = lorentzian(1.0);
        let t = 0.01;
        let a = energy_flux_a(&m, t, &cfg()).unwrap().value;
        assert!((a / (PI * t * t / 6.0) - 1.0).abs() < 0.01);
        let b = stocked_quantity_b(&m, t, &cfg()).unwrap().value;
        assert!((b / (-PI * t * t / 6.0) - 1.0).abs() < 0.02);
        let mu = mu_spectral(&m, t, &cfg()).unwrap().value;
        assert!((mu / (-PI * t * t / 3.0) - 1.0).abs() < 0.02);
        let l = lambda_spectral(&m, 1e-4, &cfg()).unwrap().value;
        assert!((l / 2.0944e-8 - 1.0).abs() < 0.01);
    }

    #[test]
    fn low_temperature_quadratic_scaling() {
        let m = lorentzian(1.0);
        let l1 = lambda_entropic(&m, 1e-3, &cfg()).unwrap().value / 1e-6;
        let l2 = lambda_entropic(&m, 5e-4, &cfg()).unwrap().value / 2.5e-7;
        assert!((l1 / l2 - 1.0).abs() < 0.01);
        let m2 = lorentzian(2.0);
        let t = 0.005;
        let mu1 = mu_entropic(&m2, t, &cfg()).unwrap().value;
        let mu2 = mu_entropic(&m2, t / 2.0, &cfg()).unwrap().value;
        assert!((mu1 / mu2 / 4.0 - 1.0).abs() < 0.02);
        assert!((mu1 / (-PI * 2.0 * t * t / 3.0) - 1.0).abs() < 0.02);
    }

    #[test]
    fn high_temperature_laws() {
        let m = lorentzian(1.0);
        let t = 100.0;
        let a = energy_flux_a(&m, t, &cfg()).unwrap().value;
        assert!((a / 50.0 - 1.0).abs() < 0.02);
        let b = stocked_quantity_b(&m, t, &cfg()).unwrap().value;
        assert!(b.abs() < 0.02 * t);
        let l = lambda_spectral(&m, t, &cfg()).unwrap().value;
        assert!((l / 100.0 - 1.0).abs() < 0.02);
        let mu = mu_spectral(&m, t, &cfg()).unwrap().value;
        assert!(mu.abs() < 0.01 * t);
    }

    #[test]
    fn flux_increases_with_temperature() {
        let m = lorentzian(1.0);
        let values: Vec<f64> = [0.01, 0.1, 1.0, 10.0]
            .iter()
            .map(|&t| energy_flux_a(&m, t, &cfg()).unwrap().value)
            .collect();
        assert!(values.windows(2).all(|w| w[1] > w[0]));
    }

    #[test]
    fn entropic_route_matches_finite_difference() {
        let m = lorentzian(1.0);
        let t = 0.7;
        let h = 1e-4;
        let a = |t: f64| energy_flux_a(&m, t, &cfg()).unwrap().value;
        let fd = (a(t + h) - a(t - h)) / (2.0 * h);
        let closed = energy_flux_a_temp_derivative(&m, t, &cfg()).unwrap().value;
        assert!((fd - closed).abs() < 1e-7 * closed);
    }

    #[test]
    fn lorentzian_asymptotics() {
        for &tau0 in &[0.5, 1.0, 3.0] {
            let r = asymptotics(&lorentzian(tau0), &cfg()).unwrap();
            assert!((r.omega_c_effective - 0.25 / tau0).abs() < 1e-10);
            assert!(r.delta_s.abs() < 1e-10);
        }
        let perfect = asymptotics(&PerfectMirror, &cfg()).unwrap();
        assert!(perfect.omega_c_effective.is_infinite());
        assert_eq!(perfect.delta_s, 0.0);
        let opaque = RationalMirror::from_coefficients(&[-1.0], &[1.0], &[0.0], &[1.0]).unwrap();
        assert_eq!(asymptotics(&opaque, &cfg()), Err(Error::DivergentBandwidth));
    }

    #[test]
    fn non_reflecting_delay_line() {
        // r = 0, s = (1 + i w / 2) / (1 - i w / 2): R vanishes, so Delta_S
        // reduces to int (dw / 2 pi) 2 tau with tau = 1 / (1 + w^2 / 4)
        let delay_line = RationalMirror::from_coefficients(&[0.0], &[1.0], &[1.0, 0.5], &[1.0, -0.5]).unwrap();
        let r = asymptotics(&delay_line, &cfg()).unwrap();
        assert_eq!(r.omega_c_effective, 0.0);
        assert!((r.tau0.abs() - 1.0).abs() < 1e-12);
        assert!((r.delta_s - r.tau0.signum()).abs() < 1e-8, "{r:?}");
    }

    #[test]
    fn einstein_relation() {
        let perfect = einstein_check(&PerfectMirror, 1.0, &cfg()).unwrap();
        assert!(perfect.discrepancy < 1e-4);
        let m = lorentzian(1.0);
        let good = einstein_check(&m, 1.0, &cfg()).unwrap();
        assert!(good.discrepancy < 1e-3, "{good:?}");
        let lambda = lambda_spectral(&m, 1.0, &cfg()).unwrap().value;
        let bad = einstein_check_with_lambda(&m, 1.0, 0.5 * lambda, &cfg()).unwrap();
        assert!((bad.discrepancy - 1.0).abs() < 1e-3);
    }

    #[test]
    fn mass_bound() {
        let m = lorentzian(1.0);
        let ok = mass_bound_check(&m, 0.01, &cfg(), MassBoundConfig::new(1000.0).unwrap()).unwrap();
        assert_eq!(ok.cutoff_condition, Some(true));
        assert!(ok.mass_condition && ok.passes() && !ok.regime_warning);
        assert!((ok.mass_ratio / 1.047e-7 - 1.0).abs() < 0.02);
        let light = mass_bound_check(&m, 0.01, &cfg(), MassBoundConfig::new(1e-6).unwrap()).unwrap();
        assert_eq!(light.cutoff_condition, Some(false));
        assert!(!light.passes());
        let hot = mass_bound_check(&m, 2.0, &cfg(), MassBoundConfig::new(1000.0).unwrap()).unwrap();
        assert!(hot.regime_warning);
        let perfect = mass_bound_check(&PerfectMirror, 1.0, &cfg(), MassBoundConfig::new(1e-9).unwrap()).unwrap();
        assert_eq!(perfect.mu, 0.0);
        assert_eq!(perfect.cutoff_condition, None);
        assert!(perfect.passes());
        assert!(MassBoundConfig::new(0.0).is_err());
    }

    #[test]
    fn unit_rescaling() {
        let r = compute_coefficients(&PerfectMirror, 1.0, &cfg()).unwrap();
        let units = UnitSystem::new(2.0, 3.0).unwrap();
        let u = r.to_units(&units);
        assert_eq!(u.temp, 2.0);
        assert!((u.lambda_spectral - r.lambda_spectral * 2.0 / 9.0).abs() < 1e-15);
        assert!((u.energy_flux - 2.0 * r.energy_flux).abs() < 1e-15);
        assert_eq!(u.route_discrepancy_lambda, r.route_discrepancy_lambda);
    }

    #[test]
    fn rejects_vacuum() {
        assert!(lambda_spectral(&PerfectMirror, 0.0, &cfg()).is_err());
        assert!(compute_coefficients(&PerfectMirror, -1.0, &cfg()).is_err());
    }
}
