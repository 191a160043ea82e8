//! Run configuration.
//!
//! The format is flat `key = value` text with one optional `[model]` section.
//! `#` starts a comment. Lists are comma-separated. Example:
//!
//! ```text
//! temperature = 1.0
//! hbar = 1.0
//! c = 1.0
//!
//! [model]
//! kind = lorentzian
//! tau0 = 1.0
//! ```
//!
//! Top-level keys: `temperature`, `t_min`, `t_max`, `count`, `spacing`
//! (`log` or `linear`), `omega_min`, `omega_max`, `omega_count`,
//! `trajectory`, `mirror_mass`, `hbar`, `c`, `rel_tol`, `abs_tol`,
//! `max_subdivisions`, `route_tol`, `kk_half_width`, `kk_points`.
//!
//! Model keys: `kind` (`lorentzian`, `perfect` or `rational`), `tau0`, and for
//! rational models `r_num`, `r_den`, `s_num`, `s_den` (coefficients of powers
//! of `i w`, ascending) plus an optional `cutoff`. Without a `[model]` section
//! the lorentzian mirror with `tau0 = 1` is used.
//!
//! Temperatures and masses are read in the units fixed by `hbar` and `c`;
//! frequencies and times need no conversion.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use crate::error::{Error, Result};
use crate::quadrature::QuadratureConfig;
use crate::scattering::{LorentzianMirror, MirrorModel, PerfectMirror, RationalMirror};
use crate::units::UnitSystem;

pub const DEFAULT_ROUTE_TOLERANCE: f64 = 1e-6;
pub const DEFAULT_KK_HALF_WIDTH: f64 = 40.0;
pub const DEFAULT_KK_POINTS: usize = 4096;

#[derive(Debug, Clone, PartialEq)]
pub enum ModelSpec {
    Lorentzian {
        tau0: f64,
    },
    Perfect,
    Rational {
        r_num: Vec<f64>,
        r_den: Vec<f64>,
        s_num: Vec<f64>,
        s_den: Vec<f64>,
        cutoff: Option<f64>,
    },
}

impl Default for ModelSpec {
    fn default() -> Self {
        ModelSpec::Lorentzian { tau0: 1.0 }
    }
}

impl ModelSpec {
    pub fn build(&self) -> Result<Box<dyn MirrorModel>> {
        Ok(match self {
            ModelSpec::Lorentzian { tau0 } => Box::new(LorentzianMirror::new(*tau0)?),
            ModelSpec::Perfect => Box::new(PerfectMirror),
            ModelSpec::Rational {
                r_num,
                r_den,
                s_num,
                s_den,
                cutoff,
            } => {
                let model = RationalMirror::from_coefficients(r_num, r_den, s_num, s_den)?;
                match cutoff {
                    Some(w) => Box::new(model.with_cutoff(Some(*w))?),
                    None => Box::new(model),
                }
            }
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Spacing {
    Log,
    Linear,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepSpec {
    pub t_min: f64,
    pub t_max: f64,
    pub count: usize,
    pub spacing: Spacing,
}

impl SweepSpec {
    /// Temperatures in ascending order; the end points are hit exactly.
    pub fn temperatures(&self) -> Vec<f64> {
        let n = self.count;
        (0..n)
            .map(|k| {
                if k == 0 {
                    return self.t_min;
                }
                if k == n - 1 {
                    return self.t_max;
                }
                let f = k as f64 / (n - 1) as f64;
                match self.spacing {
                    Spacing::Linear => self.t_min + f * (self.t_max - self.t_min),
                    Spacing::Log => (self.t_min.ln() + f * (self.t_max.ln() - self.t_min.ln())).exp(),
                }
            })
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OmegaGrid {
    pub omega_min: f64,
    pub omega_max: f64,
    pub count: usize,
}

impl OmegaGrid {
    pub fn points(&self) -> Vec<f64> {
        if self.count == 1 {
            return vec![self.omega_min];
        }
        crate::susceptibility::uniform_grid(self.omega_min, self.omega_max, self.count)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub model: ModelSpec,
    pub units: UnitSystem,
    pub quadrature: QuadratureConfig,
    pub route_tol: f64,
    pub temperature: Option<f64>,
    pub sweep: Option<SweepSpec>,
    pub omega_grid: Option<OmegaGrid>,
    pub trajectory: Option<PathBuf>,
    pub mirror_mass: Option<f64>,
    pub kk_half_width: f64,
    pub kk_points: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            model: ModelSpec::default(),
            units: UnitSystem::natural(),
            quadrature: QuadratureConfig::default(),
            route_tol: DEFAULT_ROUTE_TOLERANCE,
            temperature: None,
            sweep: None,
            omega_grid: None,
            trajectory: None,
            mirror_mass: None,
            kk_half_width: DEFAULT_KK_HALF_WIDTH,
            kk_points: DEFAULT_KK_POINTS,
        }
    }
}

fn config_error(line: usize, msg: impl std::fmt::Display) -> Error {
    Error::Config(format!("line {line}: {msg}"))
}

struct Entry {
    line: usize,
    value: String,
}

type Section = BTreeMap<String, Entry>;

fn take<T>(section: &mut Section, key: &str, parse: impl Fn(&str) -> Option<T>, what: &str) -> Result<Option<T>> {
    match section.remove(key) {
        None => Ok(None),
        Some(entry) => parse(&entry.value)
            .map(Some)
            .ok_or_else(|| config_error(entry.line, format!("`{key}` must be {what}, got `{}`", entry.value))),
    }
}

fn parse_f64(s: &str) -> Option<f64> {
    s.parse::<f64>().ok().filter(|v| v.is_finite())
}

fn parse_positive(s: &str) -> Option<f64> {
    parse_f64(s).filter(|v| *v > 0.0)
}

fn parse_nonnegative(s: &str) -> Option<f64> {
    parse_f64(s).filter(|v| *v >= 0.0)
}

fn parse_count(s: &str) -> Option<usize> {
    s.parse::<usize>().ok()
}

fn parse_list(s: &str) -> Option<Vec<f64>> {
    s.split(',').map(|item| parse_f64(item.trim())).collect()
}

fn take_f64(section: &mut Section, key: &str) -> Result<Option<f64>> {
    take(section, key, parse_f64, "a finite number")
}

fn take_positive(section: &mut Section, key: &str) -> Result<Option<f64>> {
    take(section, key, parse_positive, "a positive number")
}

fn take_count(section: &mut Section, key: &str) -> Result<Option<usize>> {
    take(section, key, parse_count, "a non-negative integer")
}

fn take_list(section: &mut Section, key: &str) -> Result<Option<Vec<f64>>> {
    take(section, key, parse_list, "a comma-separated list of numbers")
}

fn reject_leftovers(section: &Section, name: &str) -> Result<()> {
    match section.iter().next() {
        Some((key, entry)) => Err(config_error(entry.line, format!("unknown key `{key}` in {name}"))),
        None => Ok(()),
    }
}

fn split_sections(text: &str) -> Result<(Section, Option<Section>)> {
    let mut top = Section::new();
    let mut model: Option<Section> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        if content.starts_with('[') {
            if content != "[model]" {
                return Err(config_error(line, format!("unknown section `{content}`")));
            }
            if model.is_some() {
                return Err(config_error(line, "duplicate [model] section"));
            }
            model = Some(Section::new());
            continue;
        }
        let (key, value) = content
            .split_once('=')
            .ok_or_else(|| config_error(line, format!("expected `key = value`, got `{content}`")))?;
        let key = key.trim().to_string();
        let value = value.trim().to_string();
        if key.is_empty() {
            return Err(config_error(line, "empty key"));
        }
        let section = model.as_mut().unwrap_or(&mut top);
        if section.contains_key(&key) {
            return Err(config_error(line, format!("duplicate key `{key}`")));
        }
        section.insert(key, Entry { line, value });
    }
    Ok((top, model))
}

fn parse_model(mut section: Section) -> Result<ModelSpec> {
    let kind = section
        .remove("kind")
        .ok_or_else(|| Error::Config("[model] needs a `kind`".into()))?;
    let spec = match kind.value.as_str() {
        "lorentzian" => {
            let tau0 = take_positive(&mut section, "tau0")?
                .ok_or_else(|| config_error(kind.line, "lorentzian model needs `tau0`"))?;
            ModelSpec::Lorentzian { tau0 }
        }
        "perfect" => ModelSpec::Perfect,
        "rational" => {
            let mut list = |key: &str| -> Result<Vec<f64>> {
                take_list(&mut section, key)?
                    .ok_or_else(|| config_error(kind.line, format!("rational model needs `{key}`")))
            };
            let (r_num, r_den, s_num, s_den) = (list("r_num")?, list("r_den")?, list("s_num")?, list("s_den")?);
            let cutoff = take_positive(&mut section, "cutoff")?;
            ModelSpec::Rational {
                r_num,
                r_den,
                s_num,
                s_den,
                cutoff,
            }
        }
        other => {
            return Err(config_error(
                kind.line,
                format!("unknown model kind `{other}` (expected lorentzian, perfect or rational)"),
            ))
        }
    };
    reject_leftovers(&section, "[model]")?;
    Ok(spec)
}

impl RunConfig {
    pub fn parse(text: &str) -> Result<Self> {
        let (mut top, model) = split_sections(text)?;
        let mut cfg = RunConfig::default();
        if let Some(section) = model {
            cfg.model = parse_model(section)?;
        }

        let hbar = take_positive(&mut top, "hbar")?.unwrap_or(1.0);
        let c = take_positive(&mut top, "c")?.unwrap_or(1.0);
        cfg.units = UnitSystem::new(hbar, c).map_err(|e| Error::Config(e.to_string()))?;

        let defaults = QuadratureConfig::default();
        let rel_tol = take_positive(&mut top, "rel_tol")?.unwrap_or(defaults.rel_tol);
        let abs_tol = take_positive(&mut top, "abs_tol")?.unwrap_or(defaults.abs_tol);
        let max_subdivisions = take_count(&mut top, "max_subdivisions")?.unwrap_or(defaults.max_subdivisions);
        cfg.quadrature =
            QuadratureConfig::new(rel_tol, abs_tol, max_subdivisions).map_err(|e| Error::Config(e.to_string()))?;
        if let Some(tol) = take_positive(&mut top, "route_tol")? {
            cfg.route_tol = tol;
        }

        cfg.temperature = take(&mut top, "temperature", parse_nonnegative, "a number >= 0")?;
        cfg.mirror_mass = take_positive(&mut top, "mirror_mass")?;
        cfg.trajectory = top.remove("trajectory").map(|e| PathBuf::from(e.value));

        let t_min = take_positive(&mut top, "t_min")?;
        let t_max = take_positive(&mut top, "t_max")?;
        let count = take_count(&mut top, "count")?;
        let spacing = take(
            &mut top,
            "spacing",
            |s| match s {
                "log" => Some(Spacing::Log),
                "linear" => Some(Spacing::Linear),
                _ => None,
            },
            "`log` or `linear`",
        )?;
        cfg.sweep = match (t_min, t_max, count) {
            (None, None, None) => None,
            (Some(t_min), Some(t_max), Some(count)) => {
                if t_max <= t_min {
                    return Err(Error::Config(format!("sweep needs t_max > t_min, got [{t_min}, {t_max}]")));
                }
                if count < 2 {
                    return Err(Error::Config(format!("sweep needs count >= 2, got {count}")));
                }
                Some(SweepSpec {
                    t_min,
                    t_max,
                    count,
                    spacing: spacing.unwrap_or(Spacing::Log),
                })
            }
            _ => return Err(Error::Config("a sweep needs all of t_min, t_max and count".into())),
        };

        let omega_min = take_f64(&mut top, "omega_min")?;
        let omega_max = take_f64(&mut top, "omega_max")?;
        let omega_count = take_count(&mut top, "omega_count")?;
        cfg.omega_grid = match (omega_min, omega_max, omega_count) {
            (None, None, None) => None,
            (Some(lo), Some(hi), Some(count)) => {
                if count == 0 || hi < lo || (count > 1 && hi == lo) {
                    return Err(Error::Config(format!(
                        "frequency grid needs omega_max > omega_min and omega_count >= 1, got [{lo}, {hi}] x {count}"
                    )));
                }
                Some(OmegaGrid {
                    omega_min: lo,
                    omega_max: hi,
                    count,
                })
            }
            _ => return Err(Error::Config("a frequency grid needs omega_min, omega_max and omega_count".into())),
        };

        if let Some(w) = take_positive(&mut top, "kk_half_width")? {
            cfg.kk_half_width = w;
        }
        if let Some(n) = take_count(&mut top, "kk_points")? {
            cfg.kk_points = n;
        }
        reject_leftovers(&top, "the top level")?;
        Ok(cfg)
    }

    /// Reads a config file; a relative `trajectory` path is resolved against
    /// the file's directory and must exist.
    pub fn from_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Config(format!("cannot read {}: {e}", path.display())))?;
        let mut cfg = Self::parse(&text)?;
        if let Some(traj) = cfg.trajectory.take() {
            let resolved = if traj.is_relative() {
                path.parent().unwrap_or(Path::new(".")).join(traj)
            } else {
                traj
            };
            if !resolved.is_file() {
                return Err(Error::Config(format!("trajectory file {} does not exist", resolved.display())));
            }
            cfg.trajectory = Some(resolved);
        }
        Ok(cfg)
    }

    /// Configured temperature in natural units.
    pub fn natural_temperature(&self) -> Option<f64> {
        self.temperature.map(|t| self.units.temperature_to_natural(t))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults() {
        let cfg = RunConfig::parse("").unwrap();
        assert_eq!(cfg, RunConfig::default());
        assert_eq!(cfg.model, ModelSpec::Lorentzian { tau0: 1.0 });
    }

    #[test]
    fn full_file() {
        let text = "\
# sweep over temperature
t_min = 1e-3
t_max = 1e3   # inclusive
count = 25
spacing = log
hbar = 2.0
c = 3
rel_tol = 1e-9

[model]
kind = rational
r_num = -1
r_den = 1, -1
s_num = 0, -1
s_den = 1, -1
";
        let cfg = RunConfig::parse(text).unwrap();
        let sweep = cfg.sweep.unwrap();
        assert_eq!(sweep.count, 25);
        let ts = sweep.temperatures();
        assert_eq!(ts[0], 1e-3);
        assert_eq!(ts[24], 1e3);
        assert!((ts[12] - 1.0).abs() < 1e-12);
        assert_eq!(cfg.units.hbar(), 2.0);
        assert_eq!(cfg.quadrature.rel_tol, 1e-9);
        match &cfg.model {
            ModelSpec::Rational { r_den, .. } => assert_eq!(r_den, &vec![1.0, -1.0]),
            other => panic!("{other:?}"),
        }
        assert!(cfg.model.build().is_ok());
    }

    #[test]
    fn linear_sweep() {
        let cfg = RunConfig::parse("t_min = 1\nt_max = 2\ncount = 3\nspacing = linear").unwrap();
        assert_eq!(cfg.sweep.unwrap().temperatures(), vec![1.0, 1.5, 2.0]);
    }

    #[test]
    fn errors() {
        for bad in [
            "temperature = hot",
            "temperature = -1",
            "unknown = 3",
            "temperature = 1\ntemperature = 2",
            "[other]\nkind = perfect",
            "[model]\nkind = mystery",
            "[model]\nkind = lorentzian",
            "[model]\nkind = lorentzian\ntau0 = 1\nfoo = 2",
            "t_min = 1\nt_max = 2",
            "t_min = 2\nt_max = 1\ncount = 3",
            "t_min = 1\nt_max = 2\ncount = 1",
            "hbar = 0",
            "no equals sign",
            "omega_min = 1\nomega_max = 0\nomega_count = 3",
            "spacing = cubic",
        ] {
            assert!(matches!(RunConfig::parse(bad), Err(Error::Config(_))), "accepted: {bad}");
        }
    }

    #[test]
    fn omega_grid() {
        let cfg = RunConfig::parse("omega_min = -1\nomega_max = 1\nomega_count = 5").unwrap();
        assert_eq!(cfg.omega_grid.unwrap().points(), vec![-1.0, -0.5, 0.0, 0.5, 1.0]);
    }

    #[test]
    fn temperature_units() {
        let cfg = RunConfig::parse("temperature = 4\nhbar = 2").unwrap();
        assert_eq!(cfg.natural_temperature(), Some(2.0));
    }

    #[test]
    fn trajectory_resolution() {
        let dir = tempfile::tempdir().unwrap();
        let cfg_path = dir.path().join("run.cfg");
        std::fs::write(&cfg_path, "trajectory = traj.csv\n").unwrap();
        assert!(RunConfig::from_file(&cfg_path).is_err());
        std::fs::write(dir.path().join("traj.csv"), "t,q\n").unwrap();
        let cfg = RunConfig::from_file(&cfg_path).unwrap();
        assert_eq!(cfg.trajectory.unwrap(), dir.path().join("traj.csv"));
        assert!(RunConfig::from_file(&dir.path().join("missing.cfg")).is_err());
    }
}
