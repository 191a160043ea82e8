// Mass sanity check: the cutoff must sit far below the mirror's rest energy,
// and the mass correction must stay below the mirror mass.

use thermal_mirror::coefficients::{mass_bound_check, MassBoundConfig};
use thermal_mirror::{LorentzianMirror, QuadratureConfig};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let mirror = LorentzianMirror::new(1.0)?;
    let cfg = QuadratureConfig::default();
    for mass in [1e3, 1e-6] {
        let report = mass_bound_check(&mirror, 0.01, &cfg, MassBoundConfig::new(mass)?)?;
        println!(
            "m = {mass:e}: hbar w_C / m c^2 = {:.1e} ({}), |mu| / m = {:.2e} ({})",
            report.cutoff_ratio.unwrap_or(0.0),
            if report.cutoff_condition == Some(true) { "ok" } else { "violated" },
            report.mass_ratio,
            if report.mass_condition { "ok" } else { "violated" },
        );
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
