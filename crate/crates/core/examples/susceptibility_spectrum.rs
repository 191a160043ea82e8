// Motional susceptibility on a frequency grid, split into vacuum and thermal
// parts, with the force-noise spectrum from the fluctuation-dissipation
// relation.

use thermal_mirror::susceptibility::{chi_total, correlation_spectrum};
use thermal_mirror::{LorentzianMirror, QuadratureConfig};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let mirror = LorentzianMirror::new(1.0)?;
    let cfg = QuadratureConfig::default();
    let temp = 0.5;
    println!("{:>6} {:>24} {:>24} {:>12}", "omega", "chi_0", "delta chi_T", "C_T");
    for k in 1..=8 {
        let omega = 0.25 * k as f64;
        let chi = chi_total(&mirror, omega, temp, &cfg)?;
        let c = correlation_spectrum(&mirror, omega, temp, &cfg)?;
        println!(
            "{omega:>6.2} {:>11.4e}{:+11.4e}i {:>11.4e}{:+11.4e}i {:>12.5e}",
            chi.chi_vacuum.re, chi.chi_vacuum.im, chi.chi_thermal.re, chi.chi_thermal.im, c.c_spectrum
        );
        // conjugation symmetry of a real response
        let mirrored = chi_total(&mirror, -omega, temp, &cfg)?;
        assert!((mirrored.chi_total - chi.chi_total.conj()).norm() <= chi.error_estimate + mirrored.error_estimate + 1e-14);
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
