// Working in SI-like units. Temperatures are energies (k_B = 1); the
// computation runs in natural units and results are rescaled on the way out.

use thermal_mirror::coefficients::compute_coefficients;
use thermal_mirror::{PerfectMirror, QuadratureConfig, UnitSystem};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let units = UnitSystem::new(1.054_571_817e-34, 2.997_924_58e8)?;
    // 300 K expressed as an energy
    let temp = 1.380_649e-23 * 300.0;
    let natural = compute_coefficients(&PerfectMirror, units.temperature_to_natural(temp), &QuadratureConfig::default())?;
    let report = natural.to_units(&units);
    let closed = 2.0 * std::f64::consts::PI * temp * temp / (3.0 * units.hbar() * units.c() * units.c());
    println!("perfect mirror at 300 K: lambda = {:.6e} kg/s (closed form {closed:.6e})", report.lambda_spectral);
    assert!((report.lambda_spectral / closed - 1.0).abs() < 1e-8);
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
