// Einstein relation `C_T[0] / 2 = T lambda_T`: the zero-frequency force noise,
// extrapolated from the susceptibility, against the viscosity integral.

use thermal_mirror::coefficients::{einstein_check, einstein_check_with_lambda, lambda_spectral};
use thermal_mirror::{LorentzianMirror, PerfectMirror, QuadratureConfig};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let cfg = QuadratureConfig::default();
    let mirror = LorentzianMirror::new(1.0)?;
    for temp in [0.1, 1.0, 10.0] {
        let check = einstein_check(&mirror, temp, &cfg)?;
        println!("lorentzian T = {temp:>4}: C[0]/2 = {:.10e}, T lambda = {:.10e}, gap {:.1e}", check.half_correlation, check.t_lambda, check.discrepancy);
        assert!(check.discrepancy < 1e-3);
    }
    let perfect = einstein_check(&PerfectMirror, 1.0, &cfg)?;
    println!("perfect    T =  1.0: gap {:.1e}", perfect.discrepancy);

    // a wrong viscosity is caught
    let lambda = lambda_spectral(&mirror, 1.0, &cfg)?.value;
    let wrong = einstein_check_with_lambda(&mirror, 1.0, 0.5 * lambda, &cfg)?;
    println!("with lambda halved: gap {:.3}", wrong.discrepancy);
    assert!(wrong.discrepancy > 0.9);
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
