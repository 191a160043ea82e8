// A user-defined mirror given as rational functions of `i w`, validated before
// use. The amplitudes here are `r = -1 / (1 - i w / 2)`, `s = (-i w / 2) / (1 - i w / 2)`,
// a lorentzian with `tau0 = 1/2` entered by hand, plus a corrupted copy that
// the validator rejects.

use thermal_mirror::coefficients::{asymptotics, compute_coefficients};
use thermal_mirror::scattering::{log_grid, validate_model};
use thermal_mirror::{MirrorModel, QuadratureConfig, RationalMirror};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let cfg = QuadratureConfig::default();
    let mirror = RationalMirror::from_coefficients(&[-1.0], &[1.0, -0.5], &[0.0, -0.5], &[1.0, -0.5])?;
    let report = validate_model(&mirror, &log_grid(1e-3, 1e3, 1000))?;
    print!("{report}");
    println!("R0 = {}, tau0 = {}, cutoff = {:?}", mirror.low_frequency_reflection(), mirror.low_frequency_delay(), mirror.cutoff_frequency());

    let coeffs = compute_coefficients(&mirror, 1.0, &cfg)?;
    println!("T = 1: lambda = {:.10}, mu = {:.10}", coeffs.lambda_spectral, coeffs.mu_spectral);
    let limits = asymptotics(&mirror, &cfg)?;
    println!("Omega_C = {:.10}, Delta_S = {:.3e}", limits.omega_c_effective, limits.delta_s);
    assert!((limits.omega_c_effective - 0.5).abs() < 1e-10);

    let corrupted = mirror.with_scaled_transmission(1.01);
    match validate_model(&corrupted, &log_grid(1e-3, 1e3, 1000)) {
        Err(e) => println!("corrupted model rejected: {e}"),
        Ok(_) => return Err("corrupted model was accepted".into()),
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
