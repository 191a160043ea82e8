use std::fmt;

use super::MirrorModel;
use crate::error::{Error, Result};

/// Default threshold for the unitarity and reality checks.
pub const DEFAULT_VALIDATION_TOLERANCE: f64 = 1e-10;

/// Transparency is probed at this multiple of the cutoff frequency.
pub const TRANSPARENCY_PROBE_FACTOR: f64 = 1e4;

/// Largest `|r|` accepted at the transparency probe.
pub const TRANSPARENCY_TOLERANCE: f64 = 1e-2;

/// Worst violation of one relation over the sampled grid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Violation {
    pub max: f64,
    pub worst_omega: f64,
}

impl Violation {
    fn none() -> Self {
        Self {
            max: 0.0,
            worst_omega: f64::NAN,
        }
    }

    fn record(&mut self, value: f64, omega: f64) {
        // NaN counts as the worst possible violation
        if value.is_nan() || value > self.max {
            self.max = if value.is_nan() { f64::INFINITY } else { value };
            self.worst_omega = omega;
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ValidationReport {
    /// `| |s|^2 + |r|^2 - 1 |`
    pub probability_conservation: Violation,
    /// `| s r* + r s* |`
    pub orthogonality: Violation,
    /// `max(|r[-w] - r[w]*|, |s[-w] - s[w]*|)`
    pub reality: Violation,
    /// `|r|` at `TRANSPARENCY_PROBE_FACTOR * w_C`; `None` when the model has no cutoff.
    pub transparency: Option<Violation>,
    pub samples: usize,
}

impl ValidationReport {
    fn failures(&self, tolerance: f64) -> Vec<String> {
        let mut failed = Vec::new();
        let mut check = |name: &str, v: &Violation, limit: f64| {
            if !(v.max <= limit) {
                failed.push(format!(
                    "{name} violated by {:e} (limit {:e}) at omega = {}",
                    v.max, limit, v.worst_omega
                ));
            }
        };
        check("|s|^2 + |r|^2 = 1", &self.probability_conservation, tolerance);
        check("s r* + r s* = 0", &self.orthogonality, tolerance);
        check("reality r[-w] = r[w]*, s[-w] = s[w]*", &self.reality, tolerance);
        if let Some(t) = &self.transparency {
            check("high-frequency transparency |r| -> 0", t, TRANSPARENCY_TOLERANCE);
        }
        failed
    }

    pub fn passes(&self, tolerance: f64) -> bool {
        self.failures(tolerance).is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "samples: {}", self.samples)?;
        let line = |f: &mut fmt::Formatter<'_>, name: &str, v: &Violation| {
            writeln!(f, "{name:<28} max {:.3e} at omega = {}", v.max, v.worst_omega)
        };
        line(f, "unitarity |s|^2+|r|^2=1", &self.probability_conservation)?;
        line(f, "unitarity s r*+r s*=0", &self.orthogonality)?;
        line(f, "reality", &self.reality)?;
        match &self.transparency {
            Some(v) => line(f, "transparency |r(1e4 wC)|", v),
            None => writeln!(f, "{:<28} skipped (no cutoff)", "transparency"),
        }
    }
}

/// `n` log-spaced frequencies in `[lo, hi]`.
pub fn log_grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    match n {
        0 => Vec::new(),
        1 => vec![lo],
        _ => {
            let (a, b) = (lo.ln(), hi.ln());
            (0..n)
                .map(|k| (a + (b - a) * k as f64 / (n - 1) as f64).exp())
                .collect()
        }
    }
}

/// Checks unitarity, reality and (for models with a cutoff) high-frequency
/// transparency at [`DEFAULT_VALIDATION_TOLERANCE`].
pub fn validate_model<M: MirrorModel + ?Sized>(model: &M, grid: &[f64]) -> Result<ValidationReport> {
    validate_model_with_tolerance(model, grid, DEFAULT_VALIDATION_TOLERANCE)
}

pub fn validate_model_with_tolerance<M: MirrorModel + ?Sized>(
    model: &M,
    grid: &[f64],
    tolerance: f64,
) -> Result<ValidationReport> {
    if grid.is_empty() {
        return Err(Error::Domain("validation grid is empty".into()));
    }
    if let Some(w) = grid.iter().find(|w| !w.is_finite()) {
        return Err(Error::Domain(format!("validation grid contains {w}")));
    }
    let mut probability = Violation::none();
    let mut orthogonality = Violation::none();
    let mut reality = Violation::none();
    for &omega in grid {
        for w in [omega, -omega] {
            let amp = model.amplitudes(w);
            probability.record((amp.s.norm_sqr() + amp.r.norm_sqr() - 1.0).abs(), w);
            orthogonality.record((amp.s * amp.r.conj() + amp.r * amp.s.conj()).norm(), w);
        }
        let plus = model.amplitudes(omega);
        let minus = model.amplitudes(-omega);
        let mismatch = (minus.r - plus.r.conj()).norm().max((minus.s - plus.s.conj()).norm());
        reality.record(mismatch, omega);
    }
    let transparency = model.cutoff_frequency().map(|cutoff| {
        let probe = TRANSPARENCY_PROBE_FACTOR * cutoff;
        let mut v = Violation::none();
        v.record(model.amplitudes(probe).r.norm(), probe);
        v
    });
    let report = ValidationReport {
        probability_conservation: probability,
        orthogonality,
        reality,
        transparency,
        samples: grid.len(),
    };
    let failures = report.failures(tolerance);
    if failures.is_empty() {
        Ok(report)
    } else {
        Err(Error::ValidationFailed(failures.join("; ")))
    }
}
