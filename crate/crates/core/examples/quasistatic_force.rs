// Quasistatic force `dF = -(lambda dq' + mu dq'')` along a slowly
// accelerating trajectory.

use thermal_mirror::coefficients::compute_coefficients;
use thermal_mirror::force::{quasistatic_force, validity_time, TrajectoryPoint};
use thermal_mirror::output::force_csv;
use thermal_mirror::{LorentzianMirror, MirrorModel, QuadratureConfig};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let mirror = LorentzianMirror::new(1.0)?;
    let temp = 0.1;
    let report = compute_coefficients(&mirror, temp, &QuadratureConfig::default())?;

    let g = 1e-3;
    let trajectory: Vec<TrajectoryPoint> = (0..=10)
        .map(|k| {
            let t = 10.0 * k as f64;
            TrajectoryPoint { t, q: 0.5 * g * t * t }
        })
        .collect();
    let series = quasistatic_force(&report, &trajectory, validity_time(mirror.cutoff_frequency(), temp))?;
    print!("{}", force_csv(&series.points)?);
    for p in &series.points {
        let exact = -report.lambda_spectral * g * p.t - report.mu_spectral * g;
        assert!((p.force - exact).abs() < 1e-12 * exact.abs().max(1e-12));
    }
    println!("quasistatic warning: {}", series.quasistatic_warning);
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
