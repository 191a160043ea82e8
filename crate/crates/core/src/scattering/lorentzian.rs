use num_complex::Complex64;

use super::{AmplitudeJet, Amplitudes, MirrorModel};
use crate::error::{Error, Result};

/// Mirror with lorentzian scattering functions
/// `r[w] = -1 / (1 - i w tau0)`, `s[w] = -i w tau0 / (1 - i w tau0)`.
///
/// It is perfectly reflecting at low frequency (`R0 = 1`), transparent above
/// the cutoff `w_C = 1 / tau0`, and its delay is `tau[w] = tau0 / (1 + w^2 tau0^2)`.
#[derive(Debug, Clone, PartialEq)]
pub struct LorentzianMirror {
    tau0: f64,
}

impl LorentzianMirror {
    pub fn new(tau0: f64) -> Result<Self> {
        if !(tau0.is_finite() && tau0 > 0.0) {
            return Err(Error::Domain(format!("tau0 must be positive and finite, got {tau0}")));
        }
        Ok(Self { tau0 })
    }

    pub fn tau0(&self) -> f64 {
        self.tau0
    }

    fn denominator(&self, omega: f64) -> Complex64 {
        Complex64::new(1.0, -omega * self.tau0)
    }
}

impl MirrorModel for LorentzianMirror {
    fn amplitudes(&self, omega: f64) -> Amplitudes {
        let inv = self.denominator(omega).inv();
        let r = -inv;
        Amplitudes { r, s: 1.0 + r }
    }

    fn amplitude_jet(&self, omega: f64) -> Option<AmplitudeJet> {
        let inv = self.denominator(omega).inv();
        let r = -inv;
        // r' = -i tau0 / D^2, r'' = 2 tau0^2 / D^3, and s = 1 + r
        let dr = Complex64::new(0.0, -self.tau0) * inv * inv;
        let d2r = 2.0 * self.tau0 * self.tau0 * inv * inv * inv;
        Some(AmplitudeJet {
            r,
            s: 1.0 + r,
            dr,
            ds: dr,
            d2r,
            d2s: d2r,
        })
    }

    fn low_frequency_reflection(&self) -> f64 {
        1.0
    }

    fn low_frequency_delay(&self) -> f64 {
        self.tau0
    }

    fn cutoff_frequency(&self) -> Option<f64> {
        Some(1.0 / self.tau0)
    }

    fn describe(&self) -> String {
        format!("lorentzian(tau0 = {})", self.tau0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadrature::differentiate_complex;

    #[test]
    fn rejects_bad_tau0() {
        assert!(LorentzianMirror::new(0.0).is_err());
        assert!(LorentzianMirror::new(-1.0).is_err());
        assert!(LorentzianMirror::new(f64::NAN).is_err());
    }

    #[test]
    fn jet_matches_finite_differences() {
        let m = LorentzianMirror::new(0.8).unwrap();
        for &w in &[-3.0, -0.2, 0.0, 0.5, 2.0] {
            let jet = m.amplitude_jet(w).unwrap();
            let dr = differentiate_complex(|x| m.amplitudes(x).r, w, 1.0);
            let d2r = differentiate_complex(|x| m.amplitude_jet(x).unwrap().dr, w, 1.0);
            assert!((jet.dr - dr).norm() < 1e-9);
            assert!((jet.d2r - d2r).norm() < 1e-9);
            assert_eq!(jet.s, m.amplitudes(w).s);
        }
    }

    #[test]
    fn low_frequency_parameters() {
        let m = LorentzianMirror::new(2.5).unwrap();
        assert_eq!(m.amplitudes(0.0).r, Complex64::new(-1.0, 0.0));
        assert_eq!(m.cutoff_frequency(), Some(0.4));
        assert_eq!(m.low_frequency_delay(), 2.5);
    }
}
