use num_complex::Complex64;

use super::{AmplitudeJet, Amplitudes, MirrorModel};

/// Ideal mirror, `r = -1` and `s = 0` at every frequency.
///
/// This is the `R0 = 1`, `tau0 = 0` member of the lorentzian family. It never
/// becomes transparent, so it has no cutoff and its phase shifts do not depend
/// on frequency.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct PerfectMirror;

impl MirrorModel for PerfectMirror {
    fn amplitudes(&self, _omega: f64) -> Amplitudes {
        Amplitudes {
            r: Complex64::new(-1.0, 0.0),
            s: Complex64::new(0.0, 0.0),
        }
    }

    fn amplitude_jet(&self, omega: f64) -> Option<AmplitudeJet> {
        let amp = self.amplitudes(omega);
        let zero = Complex64::new(0.0, 0.0);
        Some(AmplitudeJet {
            r: amp.r,
            s: amp.s,
            dr: zero,
            ds: zero,
            d2r: zero,
            d2s: zero,
        })
    }

    fn low_frequency_reflection(&self) -> f64 {
        1.0
    }

    fn low_frequency_delay(&self) -> f64 {
        0.0
    }

    fn cutoff_frequency(&self) -> Option<f64> {
        None
    }

    fn is_perfect_reflector(&self) -> bool {
        true
    }

    fn describe(&self) -> String {
        "perfect".into()
    }
}
