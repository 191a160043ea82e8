//! Mirror scattering models.
//!
//! A mirror in 1+1 dimensions is described by its reflection amplitude `r[w]`
//! and transmission amplitude `s[w]`, identical for both sides. Models must be
//! unitary (`|r|^2 + |s|^2 = 1`, `s r* + r s* = 0`) and real
//! (`r[-w] = r[w]*`, `s[-w] = s[w]*`); [`validate_model`] checks both.

mod kernels;
mod lorentzian;
mod perfect;
mod rational;
mod validation;

use std::fmt::Debug;

use num_complex::Complex64;

pub use kernels::{
    a_derivative, a_function, a_function_from_amplitudes, alpha_kernel, b_derivative, b_function,
    b_function_from_amplitudes, determinant, reflection_probability, reflection_probability_derivative,
    scattering_delay, scattering_delay_derivative, PhaseTracker,
};
pub use lorentzian::LorentzianMirror;
pub use perfect::PerfectMirror;
pub use rational::{Polynomial, RationalMirror};
pub use validation::{
    log_grid, validate_model, validate_model_with_tolerance, ValidationReport, Violation,
    DEFAULT_VALIDATION_TOLERANCE, TRANSPARENCY_PROBE_FACTOR, TRANSPARENCY_TOLERANCE,
};

/// Reflection and transmission amplitudes at one frequency.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Amplitudes {
    pub r: Complex64,
    pub s: Complex64,
}

/// Amplitudes with their first and second frequency derivatives.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AmplitudeJet {
    pub r: Complex64,
    pub s: Complex64,
    pub dr: Complex64,
    pub ds: Complex64,
    pub d2r: Complex64,
    pub d2s: Complex64,
}

pub trait MirrorModel: Debug + Send + Sync {
    fn amplitudes(&self, omega: f64) -> Amplitudes;

    /// Exact derivatives, when the model can supply them. Kernels fall back to
    /// numerical differentiation otherwise.
    fn amplitude_jet(&self, _omega: f64) -> Option<AmplitudeJet> {
        None
    }

    /// `R0`, the zero-frequency limit of `|r|^2`.
    fn low_frequency_reflection(&self) -> f64 {
        self.amplitudes(0.0).r.norm_sqr()
    }

    /// `tau0`, the zero-frequency limit of the scattering delay.
    fn low_frequency_delay(&self) -> f64;

    /// Reflection cutoff `w_C`; `None` for a mirror that never becomes transparent.
    fn cutoff_frequency(&self) -> Option<f64>;

    /// True for the ideal `r = -1, s = 0` mirror, whose thermal integrals are
    /// evaluated in closed form.
    fn is_perfect_reflector(&self) -> bool {
        false
    }

    fn describe(&self) -> String;
}

impl<M: MirrorModel + ?Sized> MirrorModel for &M {
    fn amplitudes(&self, omega: f64) -> Amplitudes {
        (**self).amplitudes(omega)
    }
    fn amplitude_jet(&self, omega: f64) -> Option<AmplitudeJet> {
        (**self).amplitude_jet(omega)
    }
    fn low_frequency_reflection(&self) -> f64 {
        (**self).low_frequency_reflection()
    }
    fn low_frequency_delay(&self) -> f64 {
        (**self).low_frequency_delay()
    }
    fn cutoff_frequency(&self) -> Option<f64> {
        (**self).cutoff_frequency()
    }
    fn is_perfect_reflector(&self) -> bool {
        (**self).is_perfect_reflector()
    }
    fn describe(&self) -> String {
        (**self).describe()
    }
}

impl<M: MirrorModel + ?Sized> MirrorModel for Box<M> {
    fn amplitudes(&self, omega: f64) -> Amplitudes {
        (**self).amplitudes(omega)
    }
    fn amplitude_jet(&self, omega: f64) -> Option<AmplitudeJet> {
        (**self).amplitude_jet(omega)
    }
    fn low_frequency_reflection(&self) -> f64 {
        (**self).low_frequency_reflection()
    }
    fn low_frequency_delay(&self) -> f64 {
        (**self).low_frequency_delay()
    }
    fn cutoff_frequency(&self) -> Option<f64> {
        (**self).cutoff_frequency()
    }
    fn is_perfect_reflector(&self) -> bool {
        (**self).is_perfect_reflector()
    }
    fn describe(&self) -> String {
        (**self).describe()
    }
}

/// Fault-injection wrapper: negates the second amplitude derivatives of the
/// wrapped model. Only the slope `b'` of the mass kernel depends on them, so
/// the amplitudes, `R`, `tau`, `a` and `b` are untouched while the spectral
/// mass-correction route goes wrong. Used to exercise the verifier.
#[derive(Debug, Clone)]
pub struct CurvatureFault<M>(pub M);

impl<M: MirrorModel> MirrorModel for CurvatureFault<M> {
    fn amplitudes(&self, omega: f64) -> Amplitudes {
        self.0.amplitudes(omega)
    }
    fn amplitude_jet(&self, omega: f64) -> Option<AmplitudeJet> {
        self.0.amplitude_jet(omega).map(|jet| AmplitudeJet {
            d2r: -jet.d2r,
            d2s: -jet.d2s,
            ..jet
        })
    }
    fn low_frequency_reflection(&self) -> f64 {
        self.0.low_frequency_reflection()
    }
    fn low_frequency_delay(&self) -> f64 {
        self.0.low_frequency_delay()
    }
    fn cutoff_frequency(&self) -> Option<f64> {
        self.0.cutoff_frequency()
    }
    fn is_perfect_reflector(&self) -> bool {
        self.0.is_perfect_reflector()
    }
    fn describe(&self) -> String {
        format!("{} (curvature fault injected)", self.0.describe())
    }
}

/// Frequency scale used for numerical differentiation steps.
pub(crate) fn reference_frequency<M: MirrorModel + ?Sized>(model: &M) -> f64 {
    match model.cutoff_frequency() {
        Some(w) if w.is_finite() && w > 0.0 => w,
        _ => 1.0,
    }
}
