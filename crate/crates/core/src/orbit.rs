//! Orbit iteration and periodic-cycle detection.

use crate::error::{argument, Result};
use crate::maps::{Escape, MapSpec};

pub const DEFAULT_X0: f64 = 0.4;
pub const DEFAULT_ITERATIONS: usize = 50_000;
pub const DEFAULT_TRANSIENT: usize = 5_000;

/// Where and why an orbit stopped early.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EscapeEvent {
    /// Index of the point that could not be mapped: step `k` means
    /// `f(x_k)` failed, so step 0 is a bad starting point.
    pub step: usize,
    pub reason: Escape,
}

/// A trajectory `x_1, x_2, ...` of `x_{n+1} = f(x_n)`.
#[derive(Debug, Clone, PartialEq)]
pub struct OrbitRecord {
    pub x0: f64,
    /// Iterates `x_{transient+1} ..= x_{total_iterations}`.
    pub samples: Vec<f64>,
    pub transient_len: usize,
    /// Number of successful map applications.
    pub total_iterations: usize,
    pub escape: Option<EscapeEvent>,
}

impl OrbitRecord {
    /// Iterate index of `samples[i]`.
    pub fn index_of(&self, i: usize) -> usize {
        self.transient_len + i + 1
    }

    pub fn escaped(&self) -> bool {
        self.escape.is_some()
    }
}

/// Applies the map `n_iter` times from `x0`, keeping the iterates after the
/// first `transient`. Stops at the first escape.
pub fn iterate_orbit(
    spec: &MapSpec,
    x0: f64,
    n_iter: usize,
    transient: usize,
) -> Result<OrbitRecord> {
    if n_iter < 1 {
        return Err(argument("n_iter must be at least 1"));
    }
    if transient >= n_iter {
        return Err(argument(format!(
            "transient ({transient}) must be smaller than n_iter ({n_iter})"
        )));
    }
    spec.validate()?;

    let mut samples = Vec::with_capacity(n_iter - transient);
    let mut x = x0;
    let mut escape = None;
    let mut done = 0;
    for step in 0..n_iter {
        match spec.eval(x) {
            Ok(next) => {
                x = next;
                done += 1;
                if step >= transient {
                    samples.push(x);
                }
            }
            Err(reason) => {
                escape = Some(EscapeEvent { step, reason });
                break;
            }
        }
    }
    Ok(OrbitRecord {
        x0,
        samples,
        transient_len: transient,
        total_iterations: done,
        escape,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct CycleReport {
    pub period: Option<usize>,
    /// One turn of the cycle, rotated so the smallest point comes first.
    pub points: Vec<f64>,
    pub tolerance: f64,
}

/// Finds the smallest `p <= max_period` with `|x_{n+p} - x_n| < tol` across
/// every recorded sample.
pub fn detect_cycle(orbit: &OrbitRecord, max_period: usize, tol: f64) -> Result<CycleReport> {
    if max_period < 1 {
        return Err(argument("max_period must be at least 1"));
    }
    if !(tol > 0.0) {
        return Err(argument("cycle tolerance must be positive"));
    }
    let xs = &orbit.samples;
    if xs.len() < 2 * max_period {
        return Err(argument(format!(
            "cycle detection up to period {max_period} needs {} samples, orbit has {}",
            2 * max_period,
            xs.len()
        )));
    }
    let period = (1..=max_period).find(|&p| xs.windows(p + 1).all(|w| (w[p] - w[0]).abs() < tol));
    let points = match period {
        Some(p) => canonical_cycle(&xs[xs.len() - p..]),
        None => Vec::new(),
    };
    Ok(CycleReport {
        period,
        points,
        tolerance: tol,
    })
}

fn canonical_cycle(turn: &[f64]) -> Vec<f64> {
    let lead = turn
        .iter()
        .enumerate()
        .min_by(|a, b| a.1.total_cmp(b.1))
        .map(|(i, _)| i)
        .unwrap_or(0);
    let mut points = turn.to_vec();
    points.rotate_left(lead);
    points
}
