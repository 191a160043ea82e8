//! Quantities derived from the amplitudes: reflection probability, phase
//! shift and scattering delay, the two-frequency kernel and the viscosity and
//! mass kernels `a` and `b`.

use num_complex::Complex64;

use super::{reference_frequency, AmplitudeJet, MirrorModel};
use crate::error::{Error, Result};
use crate::quadrature::{differentiate, differentiate_complex};

const I: Complex64 = Complex64 { re: 0.0, im: 1.0 };

/// Largest phase change tolerated across a differentiation stencil.
const MAX_STENCIL_PHASE_STEP: f64 = std::f64::consts::FRAC_PI_4;

/// `R[w] = |r[w]|^2`.
pub fn reflection_probability<M: MirrorModel + ?Sized>(model: &M, omega: f64) -> f64 {
    model.amplitudes(omega).r.norm_sqr()
}

/// Determinant of the scattering matrix, `s^2 - r^2 = exp(i Delta)`.
pub fn determinant<M: MirrorModel + ?Sized>(model: &M, omega: f64) -> Complex64 {
    let amp = model.amplitudes(omega);
    amp.s * amp.s - amp.r * amp.r
}

fn step_scale<M: MirrorModel + ?Sized>(model: &M, omega: f64) -> f64 {
    omega.abs().max(reference_frequency(model))
}

/// Numerical amplitude derivatives (first order only) for models without a jet.
fn numerical_first_derivatives<M: MirrorModel + ?Sized>(model: &M, omega: f64) -> (Complex64, Complex64) {
    let scale = step_scale(model, omega);
    let dr = differentiate_complex(|w| model.amplitudes(w).r, omega, scale);
    let ds = differentiate_complex(|w| model.amplitudes(w).s, omega, scale);
    (dr, ds)
}

fn delay_from_jet(jet: &AmplitudeJet) -> f64 {
    let det = jet.s * jet.s - jet.r * jet.r;
    let ddet = 2.0 * (jet.s * jet.ds - jet.r * jet.dr);
    0.5 * (ddet / det).im
}

fn delay_slope_from_jet(jet: &AmplitudeJet) -> f64 {
    let det = jet.s * jet.s - jet.r * jet.r;
    let ddet = 2.0 * (jet.s * jet.ds - jet.r * jet.dr);
    let d2det = 2.0 * (jet.ds * jet.ds + jet.s * jet.d2s - jet.dr * jet.dr - jet.r * jet.d2r);
    let log_slope = ddet / det;
    0.5 * (d2det / det - log_slope * log_slope).im
}

/// Local phase of the determinant relative to its value at `center`, i.e. the
/// nearest-branch continuation of `Delta` around `center`.
fn relative_phase<M: MirrorModel + ?Sized>(model: &M, center: f64, reference: Complex64, omega: f64) -> Result<f64> {
    let det = determinant(model, omega);
    if det.norm() < 0.5 {
        return Err(Error::DerivativeUnavailable {
            omega: center,
            reason: format!("determinant modulus {} is far from unitary", det.norm()),
        });
    }
    let phase = (det * reference.conj()).arg();
    if phase.abs() > MAX_STENCIL_PHASE_STEP {
        return Err(Error::DerivativeUnavailable {
            omega: center,
            reason: format!("phase jump of {phase} rad across the difference stencil"),
        });
    }
    Ok(phase)
}

/// Scattering delay `tau[w] = Delta'[w] / 2`, from the model's exact
/// derivatives when available and otherwise by differentiating the phase of
/// the determinant.
pub fn scattering_delay<M: MirrorModel + ?Sized>(model: &M, omega: f64) -> Result<f64> {
    if let Some(jet) = model.amplitude_jet(omega) {
        return Ok(delay_from_jet(&jet));
    }
    let reference = determinant(model, omega);
    let scale = step_scale(model, omega);
    // probe the widest stencil point first so phase jumps are reported, not differentiated
    let h = scale * crate::quadrature::DIFF_STEP;
    relative_phase(model, omega, reference, omega + h)?;
    relative_phase(model, omega, reference, omega - h)?;
    let slope = differentiate(
        |w| relative_phase(model, omega, reference, w).unwrap_or(f64::NAN),
        omega,
        scale,
    );
    if !slope.is_finite() {
        return Err(Error::DerivativeUnavailable {
            omega,
            reason: "non-finite phase derivative".into(),
        });
    }
    Ok(0.5 * slope)
}

/// Step (relative to the frequency scale) for the numerical second derivative
/// of the phase; a second difference needs a wider stencil than a first one.
const SECOND_DIFF_STEP: f64 = 1e-4;

/// `tau'[w] = Delta''[w] / 2`.
pub fn scattering_delay_derivative<M: MirrorModel + ?Sized>(model: &M, omega: f64) -> Result<f64> {
    if let Some(jet) = model.amplitude_jet(omega) {
        return Ok(delay_slope_from_jet(&jet));
    }
    let reference = determinant(model, omega);
    let h = step_scale(model, omega) * SECOND_DIFF_STEP;
    let phase = |w: f64| relative_phase(model, omega, reference, w);
    let second = |step: f64| -> Result<f64> {
        Ok((phase(omega + step)? + phase(omega - step)?) / (step * step))
    };
    let coarse = second(h)?;
    let fine = second(0.5 * h)?;
    Ok(0.5 * (4.0 * fine - coarse) / 3.0)
}

/// `R'[w] = 2 Re(r* r')`.
pub fn reflection_probability_derivative<M: MirrorModel + ?Sized>(model: &M, omega: f64) -> f64 {
    match model.amplitude_jet(omega) {
        Some(jet) => 2.0 * (jet.r.conj() * jet.dr).re,
        None => {
            let r = model.amplitudes(omega).r;
            let (dr, _) = numerical_first_derivatives(model, omega);
            2.0 * (r.conj() * dr).re
        }
    }
}

/// Two-frequency kernel `alpha[w, w'] = 1 + r[w] r[w'] - s[w] s[w']`.
pub fn alpha_kernel<M: MirrorModel + ?Sized>(model: &M, omega1: f64, omega2: f64) -> Complex64 {
    let first = model.amplitudes(omega1);
    let second = model.amplitudes(omega2);
    1.0 + first.r * second.r - first.s * second.s
}

/// Viscosity kernel `a[w] = 2 R[w]`.
pub fn a_function<M: MirrorModel + ?Sized>(model: &M, omega: f64) -> f64 {
    2.0 * reflection_probability(model, omega)
}

/// `a[w] = 1 + r[w] r[-w] - s[w] s[-w]` evaluated from the amplitudes.
/// Equal to [`a_function`] for any unitary, real model.
pub fn a_function_from_amplitudes<M: MirrorModel + ?Sized>(model: &M, omega: f64) -> Complex64 {
    alpha_kernel(model, omega, -omega)
}

/// `a'[w] = 2 R'[w]`.
pub fn a_derivative<M: MirrorModel + ?Sized>(model: &M, omega: f64) -> f64 {
    2.0 * reflection_probability_derivative(model, omega)
}

/// Mass kernel `b[w] = 2 (1 - 2 R[w]) tau[w]`.
pub fn b_function<M: MirrorModel + ?Sized>(model: &M, omega: f64) -> Result<f64> {
    let reflection = reflection_probability(model, omega);
    Ok(2.0 * (1.0 - 2.0 * reflection) * scattering_delay(model, omega)?)
}

/// `b[w] = i (r'[w] r[-w] + r[w] r'[-w]) - i (s'[w] s[-w] + s[w] s'[-w])`
/// evaluated from the amplitudes and their derivatives.
pub fn b_function_from_amplitudes<M: MirrorModel + ?Sized>(model: &M, omega: f64) -> Result<Complex64> {
    let first = |w: f64| -> (Complex64, Complex64, Complex64, Complex64) {
        match model.amplitude_jet(w) {
            Some(jet) => (jet.r, jet.s, jet.dr, jet.ds),
            None => {
                let amp = model.amplitudes(w);
                let (dr, ds) = numerical_first_derivatives(model, w);
                (amp.r, amp.s, dr, ds)
            }
        }
    };
    let (r_p, s_p, dr_p, ds_p) = first(omega);
    let (r_m, s_m, dr_m, ds_m) = first(-omega);
    let value = I * (dr_p * r_m + r_p * dr_m) - I * (ds_p * s_m + s_p * ds_m);
    if !(value.re.is_finite() && value.im.is_finite()) {
        return Err(Error::DerivativeUnavailable {
            omega,
            reason: "non-finite amplitude derivatives".into(),
        });
    }
    Ok(value)
}

/// `b'[w] = -4 R' tau + 2 (1 - 2 R) tau'`.
pub fn b_derivative<M: MirrorModel + ?Sized>(model: &M, omega: f64) -> Result<f64> {
    let reflection = reflection_probability(model, omega);
    let slope = reflection_probability_derivative(model, omega);
    let delay = scattering_delay(model, omega)?;
    let delay_slope = scattering_delay_derivative(model, omega)?;
    Ok(-4.0 * slope * delay + 2.0 * (1.0 - 2.0 * reflection) * delay_slope)
}

/// Continuous phase `Delta` along an increasing frequency sweep, unwrapped by
/// nearest-branch selection between consecutive points. The starting branch
/// is the principal value at the first point.
#[derive(Debug, Clone, Default)]
pub struct PhaseTracker {
    last: Option<(Complex64, f64)>,
}

impl PhaseTracker {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push<M: MirrorModel + ?Sized>(&mut self, model: &M, omega: f64) -> f64 {
        let det = determinant(model, omega);
        let phase = match self.last {
            None => det.arg(),
            Some((previous, unwrapped)) => unwrapped + (det * previous.conj()).arg(),
        };
        self.last = Some((det, phase));
        phase
    }
}
