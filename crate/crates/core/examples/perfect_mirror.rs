// The perfect mirror: closed-form viscosity, vanishing mass correction and
// the radiation-reaction susceptibility `i w^3 / 6 pi`.

use std::f64::consts::PI;

use thermal_mirror::coefficients::{lambda_spectral, mu_spectral};
use thermal_mirror::susceptibility::{chi_total, vacuum_cubic_coefficient};
use thermal_mirror::{PerfectMirror, QuadratureConfig};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let cfg = QuadratureConfig::default();
    let mirror = PerfectMirror;

    for temp in [0.1, 1.0, 10.0] {
        let lambda = lambda_spectral(&mirror, temp, &cfg)?.value;
        let mu = mu_spectral(&mirror, temp, &cfg)?.value;
        let closed = 2.0 * PI * temp * temp / 3.0;
        println!("T = {temp:>5}: lambda = {lambda:.12} (2 pi T^2 / 3 = {closed:.12}), mu = {mu:e}");
        assert!((lambda / closed - 1.0).abs() < 1e-8);
        assert_eq!(mu, 0.0);
    }

    let chi = chi_total(&mirror, 1.0, 0.0, &cfg)?;
    println!("chi_0[1] = {} (expected i / 6 pi = {:.12}i)", chi.chi_total, 1.0 / (6.0 * PI));
    let cubic = vacuum_cubic_coefficient(&mirror, &cfg)?;
    println!("w^3 coefficient of Im chi_0 = {cubic:.12}");
    assert!((cubic - 1.0 / (6.0 * PI)).abs() < 1e-10);
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
