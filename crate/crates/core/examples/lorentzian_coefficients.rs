// Viscosity and mass correction of a lorentzian mirror, each by two routes.

use thermal_mirror::coefficients::compute_coefficients;
use thermal_mirror::{LorentzianMirror, QuadratureConfig};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let mirror = LorentzianMirror::new(1.0)?;
    let cfg = QuadratureConfig::default();
    println!("{:>8} {:>16} {:>16} {:>10} {:>16} {:>16} {:>10}", "T", "lambda (spec)", "lambda (entr)", "gap", "mu (spec)", "mu (entr)", "gap");
    for temp in [0.01, 0.1, 1.0, 10.0, 100.0] {
        let r = compute_coefficients(&mirror, temp, &cfg)?;
        println!(
            "{temp:>8} {:>16.9e} {:>16.9e} {:>10.1e} {:>16.9e} {:>16.9e} {:>10.1e}",
            r.lambda_spectral, r.lambda_entropic, r.route_discrepancy_lambda, r.mu_spectral, r.mu_entropic, r.route_discrepancy_mu
        );
        assert!(r.routes_agree(1e-6));
        assert!(r.lambda_spectral > 0.0 && r.mu_spectral < 0.0);
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
