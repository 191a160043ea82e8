// Dispersion relation: the reactive part of `chi_T` rebuilt from the
// dissipative part by a discrete Hilbert transform, on two window sizes.

use thermal_mirror::susceptibility::{kramers_kronig_check, uniform_grid};
use thermal_mirror::{LorentzianMirror, QuadratureConfig};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let mirror = LorentzianMirror::new(1.0)?;
    let cfg = QuadratureConfig::default();
    let mut previous = f64::INFINITY;
    for (half_width, points) in [(40.0, 4096), (80.0, 8192)] {
        let grid = uniform_grid(-half_width, half_width, points);
        let report = kramers_kronig_check(&mirror, 1.0, &grid, &cfg)?;
        println!(
            "window [-{half_width}, {half_width}], {points} points: discrepancy {:.3e} (xi odd to {:.1e}, Re chi even to {:.1e})",
            report.discrepancy, report.odd_residual, report.even_residual
        );
        assert!(report.discrepancy < 1e-2 && report.discrepancy < previous);
        previous = report.discrepancy;
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
