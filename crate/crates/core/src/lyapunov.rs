//! Largest Lyapunov exponent of a 1-D map and sweeps over the `(c, alpha)`
//! plane.

use std::fmt;

use rayon::prelude::*;

use crate::error::{argument, Result};
use crate::maps::MapSpec;
use crate::range::ParamRange;

/// Lower clamp for a single `log|f'(x)|` term. Superstable points have
/// `f'(x) = 0`.
pub const LOG_FLOOR: f64 = -700.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LyapunovStatus {
    Converged,
    /// The orbit (or its derivative) escaped at this step.
    Escaped(usize),
    /// At least one term was clamped to [`LOG_FLOOR`].
    ClampedFloorHit,
}

impl fmt::Display for LyapunovStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LyapunovStatus::Converged => f.write_str("converged"),
            LyapunovStatus::Escaped(step) => write!(f, "escaped@{step}"),
            LyapunovStatus::ClampedFloorHit => f.write_str("clamped"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LyapunovEstimate {
    /// Mean of the accumulated terms; 0 when none were accumulated.
    pub lambda: f64,
    pub n_used: usize,
    pub status: LyapunovStatus,
}

impl LyapunovEstimate {
    pub fn escaped(&self) -> bool {
        matches!(self.status, LyapunovStatus::Escaped(_))
    }
}

/// `(1/N) sum log|f'(x_n)|` over `x_transient, ..., x_{n_iter-1}`.
///
/// An escape ends the orbit; the terms gathered until then are still
/// averaged but the status records the escape step.
pub fn lyapunov_exponent(
    spec: &MapSpec,
    x0: f64,
    n_iter: usize,
    transient: usize,
) -> Result<LyapunovEstimate> {
    if n_iter <= transient {
        return Err(argument(format!(
            "n_iter ({n_iter}) must exceed transient ({transient})"
        )));
    }
    spec.validate()?;

    let mut x = x0;
    let mut sum = 0.0;
    let mut used = 0usize;
    let mut clamped = false;
    let mut escaped = None;
    for step in 0..n_iter {
        if step >= transient {
            match spec.derivative(x) {
                Ok(d) => {
                    let term = d.abs().ln();
                    if term < LOG_FLOOR {
                        clamped = true;
                        sum += LOG_FLOOR;
                    } else {
                        sum += term;
                    }
                    used += 1;
                }
                Err(_) => {
                    escaped = Some(step);
                    break;
                }
            }
        }
        match spec.eval(x) {
            Ok(next) => x = next,
            Err(_) => {
                escaped = Some(step);
                break;
            }
        }
    }

    let lambda = if used > 0 { sum / used as f64 } else { 0.0 };
    let status = match (escaped, clamped) {
        (Some(step), _) => LyapunovStatus::Escaped(step),
        (None, true) => LyapunovStatus::ClampedFloorHit,
        (None, false) => LyapunovStatus::Converged,
    };
    Ok(LyapunovEstimate {
        lambda,
        n_used: used,
        status,
    })
}

/// Lyapunov exponents on a `(c, alpha)` grid.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepGrid {
    pub c_axis: Vec<f64>,
    pub alpha_axis: Vec<f64>,
    /// Row-major: `cells[i * alpha_axis.len() + j]` is `(c_axis[i], alpha_axis[j])`.
    pub cells: Vec<LyapunovEstimate>,
    pub base_spec: MapSpec,
    pub x0: f64,
    pub n_iter: usize,
    pub transient: usize,
}

impl SweepGrid {
    pub fn shape(&self) -> (usize, usize) {
        (self.c_axis.len(), self.alpha_axis.len())
    }

    pub fn cell(&self, i: usize, j: usize) -> &LyapunovEstimate {
        &self.cells[i * self.alpha_axis.len() + j]
    }

    /// `(c, alpha, estimate)` in row-major order.
    pub fn iter(&self) -> impl Iterator<Item = (f64, f64, &LyapunovEstimate)> {
        let n_alpha = self.alpha_axis.len();
        self.cells
            .iter()
            .enumerate()
            .map(move |(k, e)| (self.c_axis[k / n_alpha], self.alpha_axis[k % n_alpha], e))
    }

    pub fn escaped_fraction(&self) -> f64 {
        if self.cells.is_empty() {
            return 0.0;
        }
        self.cells.iter().filter(|e| e.escaped()).count() as f64 / self.cells.len() as f64
    }

    /// Fraction of non-escaped cells with a negative exponent; `None` if
    /// every cell escaped.
    pub fn negative_fraction(&self) -> Option<f64> {
        let kept: Vec<_> = self.cells.iter().filter(|e| !e.escaped()).collect();
        if kept.is_empty() {
            return None;
        }
        Some(kept.iter().filter(|e| e.lambda < 0.0).count() as f64 / kept.len() as f64)
    }

    pub fn max_lambda(&self) -> Option<f64> {
        self.cells
            .iter()
            .filter(|e| !e.escaped())
            .map(|e| e.lambda)
            .reduce(f64::max)
    }
}

/// Evaluates [`lyapunov_exponent`] at every `(c, alpha)` of the grid.
///
/// Cells run on the current rayon pool; results are assembled by cell index
/// so the grid does not depend on the pool size.
pub fn sweep_grid(
    base: &MapSpec,
    c_range: ParamRange,
    alpha_range: ParamRange,
    x0: f64,
    n_iter: usize,
    transient: usize,
) -> Result<SweepGrid> {
    c_range.validate()?;
    alpha_range.validate()?;
    if n_iter <= transient {
        return Err(argument(format!(
            "n_iter ({n_iter}) must exceed transient ({transient})"
        )));
    }
    let c_axis = c_range.values();
    let alpha_axis = alpha_range.values();
    let specs: Vec<MapSpec> = c_axis
        .iter()
        .flat_map(|&c| {
            alpha_axis
                .iter()
                .map(move |&alpha| MapSpec { c, alpha, ..*base })
        })
        .collect();
    for spec in &specs {
        spec.validate()?;
    }
    let cells = specs
        .par_iter()
        .map(|spec| lyapunov_exponent(spec, x0, n_iter, transient))
        .collect::<Result<Vec<_>>>()?;
    Ok(SweepGrid {
        c_axis,
        alpha_axis,
        cells,
        base_spec: *base,
        x0,
        n_iter,
        transient,
    })
}
