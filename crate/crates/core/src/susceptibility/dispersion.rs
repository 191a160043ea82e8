//! Dispersion-relation check on a sampled susceptibility.
//!
//! `chi_T` grows like `w^2` at high frequency for transparent mirrors, so the
//! unsubtracted Hilbert pair between `xi_T` and `Re chi_T` diverges. The check
//! uses the subtracted function `f = (chi - i lambda w - mu w^2) / w^3`, which
//! is analytic in the upper half plane and decays, and rebuilds
//! `Re chi = mu w^2 + w^3 H[Im f]`. The constants `lambda` and `mu` are read
//! off the susceptibility itself, so the check does not lean on the
//! coefficient integrals.

use rayon::prelude::*;

use super::{chi_total, quasistatic_expansion};
use crate::error::{Error, Result};
use crate::quadrature::{hilbert_transform_pv, QuadratureConfig, MIN_HILBERT_POINTS};
use crate::scattering::MirrorModel;

/// Edge-to-peak ratio of `|chi|` above which a window-truncation warning is set.
pub const WINDOW_DECAY_RATIO: f64 = 1e-3;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KramersKronigReport {
    /// Max of `|Re chi_rebuilt - Re chi|` over the central half of the
    /// window, relative to the peak of `|chi|` over the grid.
    pub discrepancy: f64,
    pub peak: f64,
    /// `|chi|` at the window edges is not small against the peak.
    pub window_warning: bool,
    /// Largest `|xi(w) + xi(-w)|`, relative to the peak.
    pub odd_residual: f64,
    /// Largest `|Re chi(w) - Re chi(-w)|`, relative to the peak.
    pub even_residual: f64,
    pub lambda: f64,
    pub mu: f64,
    pub points: usize,
}

/// `n` equally spaced points on `[lo, hi]`.
pub fn uniform_grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    if n < 2 {
        return vec![lo; n];
    }
    let h = (hi - lo) / (n - 1) as f64;
    (0..n).map(|k| if k == n - 1 { hi } else { lo + k as f64 * h }).collect()
}

fn check_grid(grid: &[f64]) -> Result<()> {
    let n = grid.len();
    if n < MIN_HILBERT_POINTS {
        return Err(Error::GridTooCoarse(format!("{n} points, need at least {MIN_HILBERT_POINTS}")));
    }
    let (lo, hi) = (grid[0], grid[n - 1]);
    if !(hi > lo) || grid.iter().any(|w| !w.is_finite()) {
        return Err(Error::Domain("grid must be finite and increasing".into()));
    }
    let h = (hi - lo) / (n - 1) as f64;
    for (k, w) in grid.iter().enumerate() {
        if (w - (lo + k as f64 * h)).abs() > 1e-9 * (hi - lo) {
            return Err(Error::Domain(format!("grid is not uniform at index {k}")));
        }
    }
    if (lo + hi).abs() > 1e-9 * (hi - lo) {
        return Err(Error::Domain(format!(
            "grid must be symmetric about zero, got [{lo}, {hi}]"
        )));
    }
    Ok(())
}

pub fn kramers_kronig_check<M: MirrorModel + ?Sized>(
    model: &M,
    temp: f64,
    grid: &[f64],
    cfg: &QuadratureConfig,
) -> Result<KramersKronigReport> {
    check_grid(grid)?;
    let n = grid.len();
    let chi = grid
        .par_iter()
        .map(|&w| chi_total(model, w, temp, cfg).map(|v| v.chi_total))
        .collect::<Result<Vec<_>>>()?;

    let peak = chi.iter().fold(0.0f64, |m, c| m.max(c.norm()));
    let edge = chi[0].norm().max(chi[n - 1].norm());
    let mut odd_residual = 0.0f64;
    let mut even_residual = 0.0f64;
    for k in 0..n / 2 {
        let (a, b) = (chi[k], chi[n - 1 - k]);
        odd_residual = odd_residual.max((a.im + b.im).abs());
        even_residual = even_residual.max((a.re - b.re).abs());
    }
    let expansion = quasistatic_expansion(model, temp, cfg)?;
    let (lambda, mu) = (expansion.lambda.value, expansion.mu.value);
    if peak == 0.0 {
        return Ok(KramersKronigReport {
            discrepancy: 0.0,
            peak,
            window_warning: false,
            odd_residual,
            even_residual,
            lambda,
            mu,
            points: n,
        });
    }

    let h = grid[1] - grid[0];
    let mut subtracted: Vec<f64> = grid
        .iter()
        .zip(&chi)
        .map(|(&w, c)| if w == 0.0 { f64::NAN } else { (c.im - lambda * w) / (w * w * w) })
        .collect();
    // the subtracted function is even; fill an exact zero sample from its neighbours
    if let Some(zero) = grid.iter().position(|&w| w.abs() < 0.5 * h) {
        if grid[zero] == 0.0 {
            subtracted[zero] = (4.0 * subtracted[zero + 1] - subtracted[zero + 2]) / 3.0;
        }
    }

    let quarter = 0.25 * (grid[n - 1] - grid[0]);
    let discrepancy = (1..n - 1)
        .into_par_iter()
        .filter(|&k| grid[k].abs() <= quarter)
        .map(|k| {
            let w = grid[k];
            let rebuilt = mu * w * w + w * w * w * hilbert_transform_pv(&subtracted, k)?;
            Ok((rebuilt - chi[k].re).abs())
        })
        .collect::<Result<Vec<f64>>>()?
        .into_iter()
        .fold(0.0f64, f64::max);

    Ok(KramersKronigReport {
        discrepancy: discrepancy / peak,
        peak,
        window_warning: edge > WINDOW_DECAY_RATIO * peak,
        odd_residual: odd_residual / peak,
        even_residual: even_residual / peak,
        lambda,
        mu,
        points: n,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scattering::{LorentzianMirror, RationalMirror};

    #[test]
    fn grid_checks() {
        let cfg = QuadratureConfig::default();
        let m = LorentzianMirror::new(1.0).unwrap();
        let coarse = uniform_grid(-1.0, 1.0, 32);
        assert!(matches!(kramers_kronig_check(&m, 1.0, &coarse, &cfg), Err(Error::GridTooCoarse(_))));
        let lopsided = uniform_grid(-1.0, 2.0, 128);
        assert!(kramers_kronig_check(&m, 1.0, &lopsided, &cfg).is_err());
        let g = uniform_grid(-3.0, 3.0, 7);
        assert_eq!(g, vec![-3.0, -2.0, -1.0, 0.0, 1.0, 2.0, 3.0]);
    }

    #[test]
    fn transparent_vacuum_is_trivially_consistent() {
        let cfg = QuadratureConfig::default();
        let grid = uniform_grid(-10.0, 10.0, 129);
        let r = kramers_kronig_check(&RationalMirror::transparent(), 0.0, &grid, &cfg).unwrap();
        assert_eq!(r.discrepancy, 0.0);
        assert_eq!(r.peak, 0.0);
    }

    #[test]
    fn lorentzian_small_window() {
        let cfg = QuadratureConfig::default();
        let m = LorentzianMirror::new(1.0).unwrap();
        let grid = uniform_grid(-20.0, 20.0, 1025);
        let r = kramers_kronig_check(&m, 1.0, &grid, &cfg).unwrap();
        assert!(r.discrepancy < 2e-2, "{r:?}");
        assert!(r.odd_residual < 1e-8 && r.even_residual < 1e-8, "{r:?}");
    }
}
