//! Every runnable example, executed as a test.

#[allow(dead_code)]
mod perfect_mirror {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/perfect_mirror.rs"));
}

#[allow(dead_code)]
mod lorentzian_coefficients {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/lorentzian_coefficients.rs"));
}

#[allow(dead_code)]
mod temperature_sweep {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/temperature_sweep.rs"));
}

#[allow(dead_code)]
mod susceptibility_spectrum {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/susceptibility_spectrum.rs"));
}

#[allow(dead_code)]
mod dispersion_check {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/dispersion_check.rs"));
}

#[allow(dead_code)]
mod custom_rational_model {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/custom_rational_model.rs"));
}

#[allow(dead_code)]
mod quasistatic_force {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/quasistatic_force.rs"));
}

#[allow(dead_code)]
mod einstein_relation {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/einstein_relation.rs"));
}

#[allow(dead_code)]
mod mass_bound {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/mass_bound.rs"));
}

#[allow(dead_code)]
mod unit_systems {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/unit_systems.rs"));
}

#[allow(dead_code)]
mod asymptotic_limits {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/asymptotic_limits.rs"));
}


#[test]
fn perfect_mirror_runs() {
    perfect_mirror::run_example().unwrap();
}

#[test]
fn lorentzian_coefficients_runs() {
    lorentzian_coefficients::run_example().unwrap();
}

#[test]
fn temperature_sweep_runs() {
    temperature_sweep::run_example().unwrap();
}

#[test]
fn susceptibility_spectrum_runs() {
    susceptibility_spectrum::run_example().unwrap();
}

#[test]
fn dispersion_check_runs() {
    dispersion_check::run_example().unwrap();
}

#[test]
fn custom_rational_model_runs() {
    custom_rational_model::run_example().unwrap();
}

#[test]
fn quasistatic_force_runs() {
    quasistatic_force::run_example().unwrap();
}

#[test]
fn einstein_relation_runs() {
    einstein_relation::run_example().unwrap();
}

#[test]
fn mass_bound_runs() {
    mass_bound::run_example().unwrap();
}

#[test]
fn unit_systems_runs() {
    unit_systems::run_example().unwrap();
}

#[test]
fn asymptotic_limits_runs() {
    asymptotic_limits::run_example().unwrap();
}
