// Temperature sweep: `lambda_T` goes from `T^2` at low temperature to `T` at
// high temperature. Prints the sweep CSV and the log-log slopes at both ends.

use rayon::prelude::*;
use thermal_mirror::coefficients::compute_coefficients;
use thermal_mirror::config::{Spacing, SweepSpec};
use thermal_mirror::output::sweep_csv;
use thermal_mirror::{LorentzianMirror, QuadratureConfig};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let mirror = LorentzianMirror::new(1.0)?;
    let cfg = QuadratureConfig::default();
    let sweep = SweepSpec {
        t_min: 1e-3,
        t_max: 1e3,
        count: 25,
        spacing: Spacing::Log,
    };
    let reports = sweep
        .temperatures()
        .par_iter()
        .map(|&t| compute_coefficients(&mirror, t, &cfg))
        .collect::<Result<Vec<_>, _>>()?;
    print!("{}", sweep_csv(&reports)?);

    let slope = |i: usize, j: usize| {
        let (a, b) = (&reports[i], &reports[j]);
        (b.lambda_spectral / a.lambda_spectral).ln() / (b.temp / a.temp).ln()
    };
    // 25 points over six decades: index 4 is 1e-2 and index 20 is 1e2
    let (low, high) = (slope(0, 4), slope(20, 24));
    println!("log-log slope of lambda: {low:.4} (low T), {high:.4} (high T)");
    assert!((low - 2.0).abs() < 0.05 && (high - 1.0).abs() < 0.05);
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
