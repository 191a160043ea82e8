//! Unit convention.
//!
//! Every computation inside the crate runs in natural units, `hbar = c = k_B = 1`.
//! Frequencies and times keep whatever unit the caller uses; temperature is an
//! energy and is mapped to a frequency by dividing by `hbar`. Results are mapped
//! back through the factors below, so a [`UnitSystem`] only ever touches values
//! at the boundary.

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnitSystem {
    hbar: f64,
    c: f64,
}

impl Default for UnitSystem {
    fn default() -> Self {
        Self::natural()
    }
}

impl UnitSystem {
    pub const fn natural() -> Self {
        Self { hbar: 1.0, c: 1.0 }
    }

    pub fn new(hbar: f64, c: f64) -> Result<Self> {
        if !(hbar.is_finite() && hbar > 0.0) {
            return Err(Error::Domain(format!("hbar must be positive and finite, got {hbar}")));
        }
        if !(c.is_finite() && c > 0.0) {
            return Err(Error::Domain(format!("c must be positive and finite, got {c}")));
        }
        Ok(Self { hbar, c })
    }

    pub fn hbar(&self) -> f64 {
        self.hbar
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    pub fn is_natural(&self) -> bool {
        self.hbar == 1.0 && self.c == 1.0
    }

    /// Temperature (energy) to the internal frequency scale `T / hbar`.
    pub fn temperature_to_natural(&self, temp: f64) -> f64 {
        temp / self.hbar
    }

    pub fn temperature_from_natural(&self, temp: f64) -> f64 {
        temp * self.hbar
    }

    /// Viscosity, mass and susceptibility all carry a factor `hbar / c^2`.
    pub fn mass_factor(&self) -> f64 {
        self.hbar / (self.c * self.c)
    }

    /// Energy fluxes and stocked energies (A, B) carry a factor `hbar`.
    pub fn energy_factor(&self) -> f64 {
        self.hbar
    }

    /// Mirror mass `m` expressed in the internal scale, where `m c^2 / hbar`
    /// is a frequency.
    pub fn mass_to_natural(&self, mass: f64) -> f64 {
        mass / self.mass_factor()
    }
}

/// Temperature measured as an energy (`k_B = 1`). Zero selects the vacuum.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Temperature(f64);

impl Temperature {
    pub const ZERO: Temperature = Temperature(0.0);

    pub fn new(value: f64) -> Result<Self> {
        if value.is_finite() && value >= 0.0 {
            Ok(Self(value))
        } else {
            Err(Error::Domain(format!("temperature must be finite and >= 0, got {value}")))
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }

    pub fn is_vacuum(self) -> bool {
        self.0 == 0.0
    }
}
