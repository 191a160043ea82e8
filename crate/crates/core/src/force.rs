//! Quasistatic motional force `dF(t) = -(lambda_T dq'(t) + mu_T dq''(t))`
//! along a sampled trajectory.

use crate::coefficients::CoefficientReport;
use crate::error::{Error, Result};

/// Relative tolerance on the spacing of trajectory samples.
pub const UNIFORM_STEP_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrajectoryPoint {
    pub t: f64,
    pub q: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ForcePoint {
    pub t: f64,
    pub force: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ForceSeries {
    pub points: Vec<ForcePoint>,
    /// The trajectory changes on a time scale shorter than `validity_time`.
    pub quasistatic_warning: bool,
}

/// Largest time scale the expansion must resolve: `1 / w_C` and `1 / T`
/// (natural units).
pub fn validity_time(cutoff: Option<f64>, temp: f64) -> f64 {
    let mut scale = 0.0f64;
    if let Some(w) = cutoff {
        scale = scale.max(1.0 / w);
    }
    if temp > 0.0 {
        scale = scale.max(1.0 / temp);
    }
    scale
}

/// Uniform step of the series, or an error when it is too short or uneven.
pub fn uniform_step(trajectory: &[TrajectoryPoint]) -> Result<f64> {
    if trajectory.len() < 3 {
        return Err(Error::GridTooCoarse(format!(
            "trajectory has {} points, the stencil needs 3",
            trajectory.len()
        )));
    }
    let n = trajectory.len();
    let step = (trajectory[n - 1].t - trajectory[0].t) / (n - 1) as f64;
    if !(step.is_finite() && step > 0.0) {
        return Err(Error::Domain("trajectory times must be increasing".into()));
    }
    for pair in trajectory.windows(2) {
        let dt = pair[1].t - pair[0].t;
        if (dt - step).abs() > UNIFORM_STEP_TOLERANCE * step.abs().max(pair[1].t.abs()) {
            return Err(Error::Domain(format!(
                "non-uniform time step at t = {} ({dt} vs {step})",
                pair[0].t
            )));
        }
    }
    Ok(step)
}

/// Force at the interior points, using the spectral-route coefficients and
/// central differences for `q'` and `q''`. `validity` is the time scale from
/// [`validity_time`]; the warning is set when the trajectory's own time scale
/// `|q'| / |q''|` drops below it.
pub fn quasistatic_force(report: &CoefficientReport, trajectory: &[TrajectoryPoint], validity: f64) -> Result<ForceSeries> {
    let h = uniform_step(trajectory)?;
    let mut quasistatic_warning = false;
    let points = trajectory
        .windows(3)
        .map(|w| {
            let velocity = (w[2].q - w[0].q) / (2.0 * h);
            let acceleration = (w[2].q - 2.0 * w[1].q + w[0].q) / (h * h);
            if acceleration.abs() * validity > velocity.abs() && acceleration != 0.0 {
                quasistatic_warning = true;
            }
            ForcePoint {
                t: w[1].t,
                force: -(report.lambda_spectral * velocity + report.mu_spectral * acceleration),
            }
        })
        .collect();
    Ok(ForceSeries {
        points,
        quasistatic_warning,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coefficients::CoefficientErrors;

    fn report(lambda: f64, mu: f64) -> CoefficientReport {
        let errors = CoefficientErrors {
            lambda_spectral: 0.0,
            lambda_entropic: 0.0,
            mu_spectral: 0.0,
            mu_entropic: 0.0,
            energy_flux: 0.0,
            stocked_quantity: 0.0,
        };
        CoefficientReport {
            temp: 1.0,
            lambda_spectral: lambda,
            lambda_entropic: lambda,
            mu_spectral: mu,
            mu_entropic: mu,
            energy_flux: 0.0,
            stocked_quantity: 0.0,
            route_discrepancy_lambda: 0.0,
            route_discrepancy_mu: 0.0,
            errors,
        }
    }

    fn sample(q: impl Fn(f64) -> f64, n: usize, h: f64) -> Vec<TrajectoryPoint> {
        (0..n).map(|k| k as f64 * h).map(|t| TrajectoryPoint { t, q: q(t) }).collect()
    }

    #[test]
    fn uniform_velocity() {
        let (lambda, v) = (0.75, 0.3);
        let series = quasistatic_force(&report(lambda, -0.1), &sample(|t| v * t, 11, 0.5), 1.0).unwrap();
        assert_eq!(series.points.len(), 9);
        assert_eq!(series.points[0].t, 0.5);
        for p in &series.points {
            assert!((p.force + lambda * v).abs() < 1e-14);
        }
        assert!(!series.quasistatic_warning);
    }

    #[test]
    fn uniform_acceleration() {
        let (lambda, mu, g) = (0.75, -0.1, 2.0);
        let series = quasistatic_force(&report(lambda, mu), &sample(|t| 0.5 * g * t * t, 21, 0.25), 1.0).unwrap();
        for p in &series.points {
            let exact = -lambda * g * p.t - mu * g;
            assert!((p.force - exact).abs() < 1e-12, "{} vs {exact}", p.force);
        }
    }

    #[test]
    fn zero_trajectory() {
        let series = quasistatic_force(&report(1.0, 1.0), &sample(|_| 0.0, 5, 1.0), 1.0).unwrap();
        assert!(series.points.iter().all(|p| p.force == 0.0));
    }

    #[test]
    fn rejects_bad_grids() {
        let short = sample(|t| t, 2, 1.0);
        assert!(matches!(quasistatic_force(&report(1.0, 0.0), &short, 1.0), Err(Error::GridTooCoarse(_))));
        let mut uneven = sample(|t| t, 5, 1.0);
        uneven[2].t += 1e-3;
        assert!(uniform_step(&uneven).is_err());
        let mut nearly = sample(|t| t, 5, 1.0);
        nearly[2].t += 1e-13;
        assert!(uniform_step(&nearly).is_ok());
    }

    #[test]
    fn fast_oscillation_warns() {
        let series = quasistatic_force(&report(1.0, 0.0), &sample(|t| (10.0 * t).sin(), 200, 0.01), 1.0).unwrap();
        assert!(series.quasistatic_warning);
        assert_eq!(validity_time(Some(2.0), 0.1), 10.0);
        assert_eq!(validity_time(None, 0.0), 0.0);
    }
}
