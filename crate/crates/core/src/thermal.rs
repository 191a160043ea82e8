//! Thermal occupation numbers in natural units.

use crate::error::{Error, Result};

/// Above this value of `omega / T` the occupation is returned as exactly zero.
pub const OCCUPATION_CUTOFF: f64 = 700.0;

/// Below this value of `omega / T` the occupation uses its Laurent expansion.
pub const CLASSICAL_THRESHOLD: f64 = 1e-8;

fn check_positive(omega: f64, temp: f64) -> Result<()> {
    if !(omega.is_finite() && omega > 0.0) {
        return Err(Error::Domain(format!("frequency must be > 0, got {omega}")));
    }
    if !(temp.is_finite() && temp > 0.0) {
        return Err(Error::Domain(format!("temperature must be > 0, got {temp}")));
    }
    Ok(())
}

/// Occupation of a mode as a function of the reduced variable `x = omega / T`.
#[inline]
pub fn occupation_reduced(x: f64) -> f64 {
    if x > OCCUPATION_CUTOFF {
        0.0
    } else if x < CLASSICAL_THRESHOLD {
        1.0 / x - 0.5 + x / 12.0
    } else {
        1.0 / x.exp_m1()
    }
}

/// Mean number of thermal photons per mode, `1 / (exp(omega / T) - 1)`.
pub fn bose_occupation(omega: f64, temp: f64) -> Result<f64> {
    check_positive(omega, temp)?;
    Ok(occupation_reduced(omega / temp))
}

/// `T dn/dT` as a function of `x = omega / T`, i.e. `x e^x / (e^x - 1)^2`.
#[inline]
pub fn occupation_log_temp_derivative_reduced(x: f64) -> f64 {
    if x > OCCUPATION_CUTOFF {
        0.0
    } else if x < CLASSICAL_THRESHOLD {
        1.0 / x - x / 12.0
    } else {
        let em1 = x.exp_m1();
        // e^x / (e^x - 1)^2 = 1/em1 + 1/em1^2
        x * (1.0 + em1) / (em1 * em1)
    }
}

/// Closed-form temperature derivative of the occupation, `(omega / T^2) e^x / (e^x - 1)^2`.
pub fn bose_occupation_temp_derivative(omega: f64, temp: f64) -> Result<f64> {
    check_positive(omega, temp)?;
    Ok(occupation_log_temp_derivative_reduced(omega / temp) / temp)
}

/// `coth(omega / 2T)`, reducing to `sign(omega)` in the vacuum.
pub fn smoothed_sign(omega: f64, temp: f64) -> Result<f64> {
    if omega == 0.0 || !omega.is_finite() {
        return Err(Error::Domain(format!("smoothed sign is singular at omega = {omega}")));
    }
    if !(temp.is_finite() && temp >= 0.0) {
        return Err(Error::Domain(format!("temperature must be >= 0, got {temp}")));
    }
    let sign = omega.signum();
    if temp == 0.0 {
        return Ok(sign);
    }
    Ok(sign * (1.0 + 2.0 * occupation_reduced(omega.abs() / temp)))
}
