//! Motional radiation force on a mirror scattering a thermal scalar field in
//! 1+1 dimensions.
//!
//! The mirror is described by frequency-dependent reflection and transmission
//! amplitudes ([`scattering::MirrorModel`]). From them the crate computes the
//! motional susceptibility `chi_T[w]` ([`susceptibility`]) and its quasistatic
//! expansion `chi_T[w] = i w lambda_T + w^2 mu_T + ...`, i.e. the viscosity
//! coefficient `lambda_T` and the mass correction `mu_T`
//! ([`coefficients`]). Each coefficient is evaluated along two independent
//! routes (a spectral integral and the temperature derivative of an
//! energy-flux integral) so the results check each other.
//!
//! All internal computation uses natural units `hbar = c = k_B = 1`, with
//! temperature measured as an energy. [`units::UnitSystem`] rescales at the
//! boundary.

pub mod cli;
pub mod coefficients;
pub mod config;
pub mod error;
pub mod force;
pub mod output;
pub mod quadrature;
pub mod scattering;
pub mod susceptibility;
pub mod thermal;
pub mod units;

pub use error::{Error, Result};
pub use quadrature::{QuadratureConfig, QuadratureResult};
pub use scattering::{LorentzianMirror, MirrorModel, PerfectMirror, RationalMirror};
pub use units::{Temperature, UnitSystem};
