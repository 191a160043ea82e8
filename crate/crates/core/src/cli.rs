//! Command implementations behind the `thermal-mirror` binary.
//!
//! Each command takes a parsed [`RunConfig`] and returns the text for stdout,
//! optional CSV, warnings and an exit code, so the commands can be driven
//! without a process boundary.

use std::fmt::Write as _;
use std::path::Path;

use rayon::prelude::*;

use crate::coefficients::{
    asymptotics, compute_coefficients, einstein_check, lambda_spectral, mu_spectral,
    CoefficientReport,
};
use crate::config::RunConfig;
use crate::error::Error;
use crate::force::{quasistatic_force, validity_time};
use crate::output::{chi_csv, force_csv, format_number, read_trajectory, sweep_csv};
use crate::quadrature::QuadratureConfig;
use crate::scattering::{
    a_function, a_function_from_amplitudes, b_function, b_function_from_amplitudes, log_grid, validate_model,
    CurvatureFault, MirrorModel, ValidationReport, DEFAULT_VALIDATION_TOLERANCE, TRANSPARENCY_TOLERANCE,
};
use crate::susceptibility::{chi_total, kramers_kronig_check, uniform_grid};

pub const EXIT_OK: i32 = 0;
/// Numerical failure not covered by the codes below.
pub const EXIT_NUMERICAL: i32 = 1;
pub const EXIT_CONFIG: i32 = 2;
pub const EXIT_ROUTE_DISCREPANCY: i32 = 3;
pub const EXIT_MODEL_VALIDATION: i32 = 4;
pub const EXIT_VERIFY_FAILED: i32 = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Coeffs,
    Sweep,
    Chi,
    Verify,
    Force,
    ModelInfo,
}

#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct Options {
    /// Overrides the configured route tolerance.
    pub tol: Option<f64>,
    /// Negates the model's second amplitude derivatives (see [`CurvatureFault`]).
    pub inject_fault: bool,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct Outcome {
    pub stdout: String,
    pub csv: Option<String>,
    pub warnings: Vec<String>,
    pub exit_code: i32,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CliError {
    pub exit_code: i32,
    pub message: String,
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let exit_code = match e {
            Error::Config(_) | Error::Io(_) => EXIT_CONFIG,
            Error::ValidationFailed(_) => EXIT_MODEL_VALIDATION,
            _ => EXIT_NUMERICAL,
        };
        CliError {
            exit_code,
            message: e.to_string(),
        }
    }
}

fn config_error(message: impl Into<String>) -> CliError {
    CliError {
        exit_code: EXIT_CONFIG,
        message: message.into(),
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

/// Grid used to validate a model before any command runs.
pub fn validation_grid(model: &dyn MirrorModel) -> Vec<f64> {
    let reference = model.cutoff_frequency().filter(|w| w.is_finite() && *w > 0.0).unwrap_or(1.0);
    log_grid(1e-3 * reference, 1e3 * reference, 1000)
}

struct Prepared {
    model: Box<dyn MirrorModel>,
    validation: ValidationReport,
}

fn prepare(cfg: &RunConfig, opts: &Options) -> CliResult<Prepared> {
    let model = cfg.model.build().map_err(|e| config_error(format!("model: {e}")))?;
    let model: Box<dyn MirrorModel> = if opts.inject_fault {
        Box::new(CurvatureFault(model))
    } else {
        model
    };
    let validation = validate_model(&model, &validation_grid(&model))?;
    Ok(Prepared { model, validation })
}

fn route_tolerance(cfg: &RunConfig, opts: &Options) -> CliResult<f64> {
    match opts.tol {
        Some(t) if !(t.is_finite() && t > 0.0) => Err(config_error(format!("--tol must be positive, got {t}"))),
        Some(t) => Ok(t),
        None => Ok(cfg.route_tol),
    }
}

fn positive_temperature(cfg: &RunConfig) -> CliResult<f64> {
    match cfg.natural_temperature() {
        Some(t) if t > 0.0 => Ok(t),
        Some(t) => Err(config_error(format!("this command needs temperature > 0, got {t}"))),
        None => Err(config_error("missing `temperature`")),
    }
}

pub fn run(command: Command, cfg: &RunConfig, opts: &Options) -> CliResult<Outcome> {
    match command {
        Command::Coeffs => cmd_coeffs(cfg, opts),
        Command::Sweep => cmd_sweep(cfg, opts),
        Command::Chi => cmd_chi(cfg, opts),
        Command::Verify => cmd_verify(cfg, opts),
        Command::Force => cmd_force(cfg, opts),
        Command::ModelInfo => cmd_model_info(cfg, opts),
    }
}

fn describe_report(out: &mut String, r: &CoefficientReport) {
    let mut line = |k: &str, v: f64| {
        let _ = writeln!(out, "{k} = {}", format_number(v));
    };
    line("temperature", r.temp);
    line("lambda_spectral", r.lambda_spectral);
    line("lambda_entropic", r.lambda_entropic);
    line("route_discrepancy_lambda", r.route_discrepancy_lambda);
    line("mu_spectral", r.mu_spectral);
    line("mu_entropic", r.mu_entropic);
    line("route_discrepancy_mu", r.route_discrepancy_mu);
    line("A", r.energy_flux);
    line("B", r.stocked_quantity);
    line("err_lambda", r.errors.lambda());
    line("err_mu", r.errors.mu());
}

pub fn cmd_coeffs(cfg: &RunConfig, opts: &Options) -> CliResult<Outcome> {
    let tol = route_tolerance(cfg, opts)?;
    let temp = positive_temperature(cfg)?;
    let prepared = prepare(cfg, opts)?;
    let report = compute_coefficients(&prepared.model, temp, &cfg.quadrature)?;
    let user = report.to_units(&cfg.units);
    let mut stdout = format!("model: {}\n", prepared.model.describe());
    describe_report(&mut stdout, &user);
    let mut outcome = Outcome {
        csv: Some(sweep_csv(&[user])?),
        ..Outcome::default()
    };
    if !report.routes_agree(tol) {
        outcome.exit_code = EXIT_ROUTE_DISCREPANCY;
        outcome.warnings.push(format!("route discrepancy exceeds tolerance {tol:e}"));
    }
    outcome.stdout = stdout;
    Ok(outcome)
}

pub fn cmd_sweep(cfg: &RunConfig, opts: &Options) -> CliResult<Outcome> {
    let tol = route_tolerance(cfg, opts)?;
    let sweep = cfg
        .sweep
        .ok_or_else(|| config_error("sweep needs t_min, t_max and count"))?;
    let prepared = prepare(cfg, opts)?;
    let model = &prepared.model;
    let reports = sweep
        .temperatures()
        .par_iter()
        .map(|&t| compute_coefficients(model, cfg.units.temperature_to_natural(t), &cfg.quadrature))
        .collect::<Result<Vec<_>, _>>()?;
    let mut outcome = Outcome::default();
    let disagreeing: Vec<f64> = reports.iter().filter(|r| !r.routes_agree(tol)).map(|r| r.temp).collect();
    if !disagreeing.is_empty() {
        outcome.exit_code = EXIT_ROUTE_DISCREPANCY;
        outcome.warnings.push(format!(
            "route discrepancy exceeds tolerance {tol:e} at {} temperature(s)",
            disagreeing.len()
        ));
    }
    let user: Vec<CoefficientReport> = reports.iter().map(|r| r.to_units(&cfg.units)).collect();
    outcome.csv = Some(sweep_csv(&user)?);
    Ok(outcome)
}

pub fn cmd_chi(cfg: &RunConfig, opts: &Options) -> CliResult<Outcome> {
    let grid = cfg
        .omega_grid
        .ok_or_else(|| config_error("chi needs omega_min, omega_max and omega_count"))?;
    let temp = cfg
        .natural_temperature()
        .ok_or_else(|| config_error("missing `temperature` (use 0 for the vacuum)"))?;
    let prepared = prepare(cfg, opts)?;
    let model = &prepared.model;
    let scale = cfg.units.mass_factor();
    let values = grid
        .points()
        .par_iter()
        .map(|&w| {
            chi_total(model, w, temp, &cfg.quadrature).map(|mut v| {
                v.chi_vacuum *= scale;
                v.chi_thermal *= scale;
                v.chi_total *= scale;
                v.error_estimate *= scale;
                v
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Outcome {
        csv: Some(chi_csv(&values)?),
        ..Outcome::default()
    })
}

pub fn cmd_force(cfg: &RunConfig, opts: &Options) -> CliResult<Outcome> {
    let path = cfg
        .trajectory
        .as_ref()
        .ok_or_else(|| config_error("force needs a `trajectory` file"))?;
    let temp = positive_temperature(cfg)?;
    let trajectory = read_trajectory(path)?;
    // reject bad input before any integral is evaluated
    crate::force::uniform_step(&trajectory).map_err(|e| config_error(format!("trajectory: {e}")))?;
    let prepared = prepare(cfg, opts)?;
    let report = compute_coefficients(&prepared.model, temp, &cfg.quadrature)?.to_units(&cfg.units);
    let validity = validity_time(prepared.model.cutoff_frequency(), temp);
    let series = quasistatic_force(&report, &trajectory, validity).map_err(|e| config_error(format!("trajectory: {e}")))?;
    let mut outcome = Outcome {
        csv: Some(force_csv(&series.points)?),
        ..Outcome::default()
    };
    if series.quasistatic_warning {
        outcome.warnings.push(format!(
            "trajectory varies faster than the quasistatic time scale {validity:e}; the expansion may not hold"
        ));
    }
    Ok(outcome)
}

pub fn cmd_model_info(cfg: &RunConfig, opts: &Options) -> CliResult<Outcome> {
    let prepared = prepare(cfg, opts)?;
    let model = &prepared.model;
    let mut out = String::new();
    let _ = writeln!(out, "model: {}", model.describe());
    let _ = writeln!(out, "R0 = {}", format_number(model.low_frequency_reflection()));
    let _ = writeln!(out, "tau0 = {}", format_number(model.low_frequency_delay()));
    match model.cutoff_frequency() {
        Some(w) => {
            let _ = writeln!(out, "cutoff = {}", format_number(w));
        }
        None => {
            let _ = writeln!(out, "cutoff = none");
        }
    }
    let _ = write!(out, "{}", prepared.validation);
    let passes = prepared.validation.passes(DEFAULT_VALIDATION_TOLERANCE);
    if passes {
        match asymptotics(model, &cfg.quadrature) {
            Ok(a) => {
                let _ = writeln!(out, "omega_c_effective = {}", format_number(a.omega_c_effective));
                let _ = writeln!(out, "delta_s = {}", format_number(a.delta_s));
            }
            Err(e) => {
                let _ = writeln!(out, "asymptotics unavailable: {e}");
            }
        }
    }
    Ok(Outcome {
        stdout: out,
        exit_code: if passes { EXIT_OK } else { EXIT_MODEL_VALIDATION },
        ..Outcome::default()
    })
}

/// One line of the verification summary.
#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: String,
    pub measured: f64,
    pub allowed: f64,
    pub skipped: Option<String>,
}

impl Check {
    fn new(name: impl Into<String>, measured: f64, allowed: f64) -> Self {
        Self {
            name: name.into(),
            measured,
            allowed,
            skipped: None,
        }
    }

    fn skip(name: impl Into<String>, reason: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            measured: 0.0,
            allowed: 0.0,
            skipped: Some(reason.into()),
        }
    }

    pub fn passed(&self) -> bool {
        self.skipped.is_some() || self.measured <= self.allowed
    }

    pub fn line(&self) -> String {
        match &self.skipped {
            Some(reason) => format!("SKIP {:<36} {reason}", self.name),
            None => format!(
                "{} {:<36} measured {:.3e}  allowed {:.3e}",
                if self.passed() { "PASS" } else { "FAIL" },
                self.name,
                self.measured,
                self.allowed
            ),
        }
    }
}

fn relative_to_law(value: f64, law: f64) -> f64 {
    (value - law).abs() / law.abs()
}

/// Runs the invariant suite for one model at natural temperature `temp`.
pub fn verification_checks(
    model: &dyn MirrorModel,
    validation: &ValidationReport,
    temp: f64,
    route_tol: f64,
    kk_half_width: f64,
    kk_points: usize,
    cfg: &QuadratureConfig,
) -> Result<Vec<Check>, Error> {
    let mut checks = Vec::new();
    let v = validation;
    let unitarity = v.probability_conservation.max.max(v.orthogonality.max);
    checks.push(Check::new("unitarity", unitarity, DEFAULT_VALIDATION_TOLERANCE));
    checks.push(Check::new("reality", v.reality.max, DEFAULT_VALIDATION_TOLERANCE));
    match &v.transparency {
        Some(t) => checks.push(Check::new("high-frequency transparency", t.max, TRANSPARENCY_TOLERANCE)),
        None => checks.push(Check::skip("high-frequency transparency", "no cutoff")),
    }

    let reference = model.cutoff_frequency().unwrap_or(1.0);
    let grid = log_grid(1e-3 * reference, 1e3 * reference, 200);
    let mut a_gap = 0.0f64;
    let mut b_gap = 0.0f64;
    for &w in &grid {
        a_gap = a_gap.max((a_function_from_amplitudes(model, w) - a_function(model, w)).norm());
        b_gap = b_gap.max((b_function_from_amplitudes(model, w)? - b_function(model, w)?).norm());
    }
    let time_scale = model.low_frequency_delay().abs().max(1.0 / reference);
    checks.push(Check::new("kernel a = 2R", a_gap, 1e-10));
    checks.push(Check::new("kernel b = 2(1-2R)tau", b_gap / time_scale, 1e-10));

    for factor in [0.1, 1.0, 10.0] {
        let t = factor * temp;
        let report = compute_coefficients(model, t, cfg)?;
        checks.push(Check::new(
            format!("dual-route lambda (T = {t:.3e})"),
            report.route_discrepancy_lambda,
            route_tol,
        ));
        checks.push(Check::new(
            format!("dual-route mu (T = {t:.3e})"),
            report.route_discrepancy_mu,
            route_tol,
        ));
    }

    let einstein = einstein_check(model, temp, cfg)?;
    checks.push(Check::new("Einstein relation C[0]/2 = T lambda", einstein.discrepancy, 1e-3));

    if model.cutoff_frequency().is_some() {
        let half = kk_half_width * reference;
        let kk = kramers_kronig_check(model, temp, &uniform_grid(-half, half, kk_points), cfg)?;
        checks.push(Check::new("Kramers-Kronig", kk.discrepancy, 1e-2));
        checks.push(Check::new("xi odd", kk.odd_residual, 1e-8));
        checks.push(Check::new("Re chi even", kk.even_residual, 1e-8));
    } else {
        checks.push(Check::skip("Kramers-Kronig", "no cutoff: the response does not decay"));
    }

    let laws = asymptotics(model, cfg)?;
    let low = 1e-3 * reference;
    let low_laws = laws.at(low);
    let lambda_low = lambda_spectral(model, low, cfg)?.value;
    checks.push(Check::new("low-T lambda law", relative_to_law(lambda_low, low_laws.lambda_low_t), 1e-2));
    let mu_low = mu_spectral(model, low, cfg)?.value;
    if low_laws.mu_low_t == 0.0 {
        checks.push(Check::new("low-T mu vanishes", mu_low.abs(), 1e-12 * low * low));
    } else {
        checks.push(Check::new("low-T mu law", relative_to_law(mu_low, low_laws.mu_low_t), 2e-2));
    }
    if laws.omega_c_effective.is_finite() {
        let high = 100.0 * reference;
        let high_laws = laws.at(high);
        let lambda_high = lambda_spectral(model, high, cfg)?.value;
        checks.push(Check::new(
            "high-T lambda law",
            relative_to_law(lambda_high, high_laws.lambda_high_t),
            2e-2,
        ));
        let mu_high = mu_spectral(model, high, cfg)?.value;
        let mu_scale = high * laws.tau0.abs().max(laws.delta_s.abs());
        checks.push(Check::new("high-T mu law", (mu_high - high_laws.mu_high_t).abs() / mu_scale, 1e-2));
    } else {
        checks.push(Check::skip("high-T laws", "no finite reflection bandwidth"));
    }
    Ok(checks)
}

pub fn cmd_verify(cfg: &RunConfig, opts: &Options) -> CliResult<Outcome> {
    let tol = route_tolerance(cfg, opts)?;
    let prepared = prepare(cfg, opts)?;
    let model = &prepared.model;
    let temp = match cfg.natural_temperature() {
        Some(t) if t > 0.0 => t,
        Some(t) => return Err(config_error(format!("verify needs temperature > 0, got {t}"))),
        None => model.cutoff_frequency().unwrap_or(1.0),
    };
    let mut out = format!(
        "model: {}\ntemperature = {}\n",
        model.describe(),
        format_number(cfg.units.temperature_from_natural(temp))
    );
    let checks = if prepared.validation.passes(DEFAULT_VALIDATION_TOLERANCE) {
        verification_checks(
            model.as_ref(),
            &prepared.validation,
            temp,
            tol,
            cfg.kk_half_width,
            cfg.kk_points,
            &cfg.quadrature,
        )?
    } else {
        // the numerical checks assume a valid model
        let v = &prepared.validation;
        vec![
            Check::new("unitarity", v.probability_conservation.max.max(v.orthogonality.max), DEFAULT_VALIDATION_TOLERANCE),
            Check::new("reality", v.reality.max, DEFAULT_VALIDATION_TOLERANCE),
        ]
    };
    for c in &checks {
        let _ = writeln!(out, "{}", c.line());
    }
    let failed = checks.iter().filter(|c| !c.passed()).count();
    let _ = writeln!(out, "{} checks, {failed} failed", checks.len());
    Ok(Outcome {
        stdout: out,
        exit_code: if failed == 0 { EXIT_OK } else { EXIT_VERIFY_FAILED },
        ..Outcome::default()
    })
}

/// Writes CSV to `out` when given, else returns it for stdout.
pub fn deliver_csv(outcome: &Outcome, out: Option<&Path>) -> CliResult<Option<String>> {
    match (&outcome.csv, out) {
        (Some(csv), Some(path)) => {
            std::fs::write(path, csv).map_err(|e| config_error(format!("cannot write {}: {e}", path.display())))?;
            Ok(None)
        }
        (Some(csv), None) => Ok(Some(csv.clone())),
        (None, _) => Ok(None),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::ModelSpec;

    fn config(text: &str) -> RunConfig {
        RunConfig::parse(text).unwrap()
    }

    #[test]
    fn coeffs_perfect_mirror() {
        let out = run(Command::Coeffs, &config("temperature = 1\n[model]\nkind = perfect"), &Options::default()).unwrap();
        assert_eq!(out.exit_code, EXIT_OK);
        assert!(out.stdout.contains("lambda_spectral = 2.0943951"), "{}", out.stdout);
        assert_eq!(out.csv.unwrap().lines().count(), 2);
    }

    #[test]
    fn coeffs_needs_temperature() {
        let err = run(Command::Coeffs, &config(""), &Options::default()).unwrap_err();
        assert_eq!(err.exit_code, EXIT_CONFIG);
        let err = run(Command::Coeffs, &config("temperature = 0"), &Options::default()).unwrap_err();
        assert_eq!(err.exit_code, EXIT_CONFIG);
    }

    #[test]
    fn corrupted_model_is_rejected() {
        let text = "temperature = 1\n[model]\nkind = rational\nr_num = -1\nr_den = 1, -1\ns_num = 0, -1.01\ns_den = 1, -1";
        let err = run(Command::Coeffs, &config(text), &Options::default()).unwrap_err();
        assert_eq!(err.exit_code, EXIT_MODEL_VALIDATION);
        assert!(err.message.contains("|s|^2 + |r|^2 = 1"), "{}", err.message);
        let info = run(Command::ModelInfo, &config(text), &Options::default());
        assert_eq!(info.unwrap_err().exit_code, EXIT_MODEL_VALIDATION);
    }

    #[test]
    fn tight_tolerance_flags_route_discrepancy() {
        let opts = Options {
            tol: Some(1e-300),
            ..Options::default()
        };
        let out = run(Command::Coeffs, &config("temperature = 1"), &opts).unwrap();
        assert_eq!(out.exit_code, EXIT_ROUTE_DISCREPANCY);
        let bad = Options {
            tol: Some(-1.0),
            ..Options::default()
        };
        assert_eq!(run(Command::Coeffs, &config("temperature = 1"), &bad).unwrap_err().exit_code, EXIT_CONFIG);
    }

    #[test]
    fn chi_rows() {
        let text = "temperature = 0\nomega_min = -1\nomega_max = 1\nomega_count = 3\n[model]\nkind = perfect";
        let csv = run(Command::Chi, &config(text), &Options::default()).unwrap().csv.unwrap();
        let rows: Vec<Vec<f64>> = csv
            .lines()
            .skip(1)
            .map(|l| l.split(',').map(|s| s.parse().unwrap()).collect())
            .collect();
        assert_eq!(rows.len(), 3);
        assert_eq!(rows[1][5], 0.0);
        assert_eq!(rows[1][6], 0.0);
        assert!((rows[2][6] - 1.0 / (6.0 * std::f64::consts::PI)).abs() < 1e-12);
        assert_eq!(rows[0][6], -rows[2][6]);
    }

    #[test]
    fn model_info() {
        let out = run(Command::ModelInfo, &config(""), &Options::default()).unwrap();
        assert_eq!(out.exit_code, EXIT_OK);
        assert!(out.stdout.contains("omega_c_effective = 2.5"), "{}", out.stdout);
        let out = run(Command::ModelInfo, &config("[model]\nkind = perfect"), &Options::default()).unwrap();
        assert!(out.stdout.contains("cutoff = none"));
    }

    #[test]
    fn bad_model_parameters_are_config_errors() {
        let mut cfg = RunConfig::default();
        cfg.model = ModelSpec::Lorentzian { tau0: -1.0 };
        cfg.temperature = Some(1.0);
        assert_eq!(run(Command::Coeffs, &cfg, &Options::default()).unwrap_err().exit_code, EXIT_CONFIG);
    }
}
