use num_complex::Complex64;

use super::{kernels, AmplitudeJet, Amplitudes, MirrorModel};
use crate::error::{Error, Result};

/// Polynomial with real coefficients in ascending powers of `z = i w`.
#[derive(Debug, Clone, PartialEq)]
pub struct Polynomial {
    coefficients: Vec<f64>,
}

impl Polynomial {
    pub fn new(mut coefficients: Vec<f64>) -> Result<Self> {
        if coefficients.iter().any(|c| !c.is_finite()) {
            return Err(Error::Domain("polynomial coefficients must be finite".into()));
        }
        while coefficients.len() > 1 && coefficients.last() == Some(&0.0) {
            coefficients.pop();
        }
        if coefficients.is_empty() {
            coefficients.push(0.0);
        }
        Ok(Self { coefficients })
    }

    pub fn coefficients(&self) -> &[f64] {
        &self.coefficients
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.iter().all(|&c| c == 0.0)
    }

    /// Degree after trimming; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coefficients.len() - 1
    }

    /// Value and first two derivatives with respect to `z`, by Horner's scheme.
    pub fn eval_with_derivatives(&self, z: Complex64) -> [Complex64; 3] {
        let zero = Complex64::new(0.0, 0.0);
        let (mut p, mut dp, mut d2p) = (zero, zero, zero);
        for &c in self.coefficients.iter().rev() {
            d2p = d2p * z + 2.0 * dp;
            dp = dp * z + p;
            p = p * z + c;
        }
        [p, dp, d2p]
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.coefficients
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c)
    }
}

/// Value and first two `w`-derivatives of `P(i w) / Q(i w)`.
fn ratio_jet(num: &Polynomial, den: &Polynomial, omega: f64) -> [Complex64; 3] {
    let z = Complex64::new(0.0, omega);
    let [p, dp, d2p] = num.eval_with_derivatives(z);
    let [q, dq, d2q] = den.eval_with_derivatives(z);
    let f = p / q;
    let fz = (dp * q - p * dq) / (q * q);
    let fzz = (d2p * q - p * d2q) / (q * q) - 2.0 * dq * (dp * q - p * dq) / (q * q * q);
    // d/dw = i d/dz
    [f, Complex64::i() * fz, -fzz]
}

/// Mirror defined by rational functions of `i w` with real coefficients,
/// which makes the reality condition automatic and gives exact derivatives.
/// Unitarity is not guaranteed by construction; run
/// [`validate_model`](super::validate_model) before use.
#[derive(Debug, Clone, PartialEq)]
pub struct RationalMirror {
    r_num: Polynomial,
    r_den: Polynomial,
    s_num: Polynomial,
    s_den: Polynomial,
    cutoff: Option<f64>,
}

impl RationalMirror {
    pub fn new(r_num: Polynomial, r_den: Polynomial, s_num: Polynomial, s_den: Polynomial) -> Result<Self> {
        for (name, den) in [("r", &r_den), ("s", &s_den)] {
            if den.coefficients()[0] == 0.0 {
                return Err(Error::Domain(format!(
                    "denominator of {name} vanishes at zero frequency"
                )));
            }
        }
        let mut mirror = Self {
            r_num,
            r_den,
            s_num,
            s_den,
            cutoff: None,
        };
        mirror.cutoff = mirror.estimate_cutoff();
        Ok(mirror)
    }

    pub fn from_coefficients(r_num: &[f64], r_den: &[f64], s_num: &[f64], s_den: &[f64]) -> Result<Self> {
        Self::new(
            Polynomial::new(r_num.to_vec())?,
            Polynomial::new(r_den.to_vec())?,
            Polynomial::new(s_num.to_vec())?,
            Polynomial::new(s_den.to_vec())?,
        )
    }

    /// The lorentzian model written as a rational mirror.
    pub fn lorentzian(tau0: f64) -> Result<Self> {
        Self::from_coefficients(&[-1.0], &[1.0, -tau0], &[0.0, -tau0], &[1.0, -tau0])
    }

    /// A fully transparent mirror, `r = 0`, `s = 1`.
    pub fn transparent() -> Self {
        Self::from_coefficients(&[0.0], &[1.0], &[1.0], &[1.0]).expect("constant coefficients are valid")
    }

    /// Overrides the automatically estimated reflection cutoff.
    pub fn with_cutoff(mut self, cutoff: Option<f64>) -> Result<Self> {
        if let Some(w) = cutoff {
            if !(w.is_finite() && w > 0.0) {
                return Err(Error::Domain(format!("cutoff must be positive, got {w}")));
            }
        }
        self.cutoff = cutoff;
        Ok(self)
    }

    /// Scales the transmission numerator; produces a non-unitary model for
    /// exercising the validator.
    pub fn with_scaled_transmission(mut self, factor: f64) -> Self {
        let scaled = self.s_num.coefficients().iter().map(|c| c * factor).collect();
        self.s_num = Polynomial::new(scaled).expect("finite coefficients stay finite");
        self
    }

    pub fn is_transparent_at_high_frequency(&self) -> bool {
        self.r_num.is_zero() || self.r_num.degree() < self.r_den.degree()
    }

    /// Half-maximum point of `R` on a log grid, for transparent models.
    /// A mirror that never reflects gets the unit reference scale.
    fn estimate_cutoff(&self) -> Option<f64> {
        if !self.is_transparent_at_high_frequency() {
            return None;
        }
        let samples: Vec<(f64, f64)> = (0..=480)
            .map(|k| {
                let w = 10f64.powf(-6.0 + k as f64 / 40.0);
                (w, self.amplitudes(w).r.norm_sqr())
            })
            .collect();
        let peak = samples.iter().fold(self.amplitudes(0.0).r.norm_sqr(), |m, &(_, r)| m.max(r));
        if peak <= 0.0 {
            return Some(1.0);
        }
        samples
            .iter()
            .rev()
            .find(|&&(_, r)| r >= 0.5 * peak)
            .map(|&(w, _)| w)
            .or(Some(1.0))
    }
}

impl MirrorModel for RationalMirror {
    fn amplitudes(&self, omega: f64) -> Amplitudes {
        let z = Complex64::new(0.0, omega);
        Amplitudes {
            r: self.r_num.eval(z) / self.r_den.eval(z),
            s: self.s_num.eval(z) / self.s_den.eval(z),
        }
    }

    fn amplitude_jet(&self, omega: f64) -> Option<AmplitudeJet> {
        let [r, dr, d2r] = ratio_jet(&self.r_num, &self.r_den, omega);
        let [s, ds, d2s] = ratio_jet(&self.s_num, &self.s_den, omega);
        Some(AmplitudeJet { r, s, dr, ds, d2r, d2s })
    }

    fn low_frequency_delay(&self) -> f64 {
        kernels::scattering_delay(self, 0.0).unwrap_or(f64::NAN)
    }

    fn cutoff_frequency(&self) -> Option<f64> {
        self.cutoff
    }

    fn describe(&self) -> String {
        format!(
            "rational(r = {:?} / {:?}, s = {:?} / {:?})",
            self.r_num.coefficients(),
            self.r_den.coefficients(),
            self.s_num.coefficients(),
            self.s_den.coefficients()
        )
    }
}
