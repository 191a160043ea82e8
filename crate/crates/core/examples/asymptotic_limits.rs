// Low- and high-temperature laws. At low temperature `lambda = 4 A`, twice
// the Doppler-shift estimate; at high temperature `lambda = 2 A`.

use thermal_mirror::coefficients::{asymptotics, compute_coefficients};
use thermal_mirror::{LorentzianMirror, QuadratureConfig};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let mirror = LorentzianMirror::new(1.0)?;
    let cfg = QuadratureConfig::default();
    let limits = asymptotics(&mirror, &cfg)?;
    println!("Omega_C = {:.6} (w_C / 4), Delta_S = {:.1e}", limits.omega_c_effective, limits.delta_s);
    for temp in [1e-3, 1e-1, 1e1, 1e2] {
        let r = compute_coefficients(&mirror, temp, &cfg)?;
        let laws = limits.at(temp);
        println!(
            "T = {temp:>6}: lambda / A = {:.4}, lambda / low-T law = {:.4}, lambda / high-T law = {:.4}, mu / low-T law = {:.4}",
            r.lambda_spectral / r.energy_flux,
            r.lambda_spectral / laws.lambda_low_t,
            r.lambda_spectral / laws.lambda_high_t,
            r.mu_spectral / laws.mu_low_t,
        );
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
