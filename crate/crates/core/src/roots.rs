//! Newton-Raphson on `g(x) = f(x) - x` and classification of the fixed
//! points it finds.

use std::fmt;

use rayon::prelude::*;

use crate::error::{argument, Error, Result};
use crate::maps::MapSpec;

pub const DEFAULT_TOLERANCE: f64 = 1e-10;
pub const DEFAULT_MAX_ITER: usize = 200;
pub const DEFAULT_MARGINAL_BAND: f64 = 1e-6;
/// `|g'(x)|` below this stops the iteration.
pub const ZERO_DERIVATIVE: f64 = 1e-14;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Stability {
    Stable,
    Unstable,
    Marginal,
}

impl Stability {
    pub fn name(self) -> &'static str {
        match self {
            Stability::Stable => "stable",
            Stability::Unstable => "unstable",
            Stability::Marginal => "marginal",
        }
    }
}

impl fmt::Display for Stability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RootFailure {
    ZeroDerivative,
    MaxIterations,
    EscapedDomain,
}

impl RootFailure {
    pub fn name(self) -> &'static str {
        match self {
            RootFailure::ZeroDerivative => "zero_derivative",
            RootFailure::MaxIterations => "max_iterations",
            RootFailure::EscapedDomain => "escaped_domain",
        }
    }
}

impl fmt::Display for RootFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RootReport {
    pub guess: f64,
    pub root: Option<f64>,
    /// Newton updates performed.
    pub iterations: usize,
    /// `|f(x) - x|` at the last point evaluated; NaN if the guess itself
    /// was outside the domain.
    pub residual: f64,
    pub derivative_at_root: Option<f64>,
    pub stability: Option<Stability>,
    pub failure: Option<RootFailure>,
    /// A finite-difference slope stood in for the analytic one at least once.
    pub used_finite_difference: bool,
}

impl RootReport {
    pub fn status(&self) -> &'static str {
        match self.failure {
            Some(f) => f.name(),
            None => "converged",
        }
    }
}

fn central_difference(spec: &MapSpec, x: f64) -> Option<f64> {
    let step = 1e-7 * x.abs().max(1.0);
    let hi = spec.eval(x + step).ok()?;
    let lo = spec.eval(x - step).ok()?;
    let d = (hi - lo) / (2.0 * step);
    d.is_finite().then_some(d)
}

/// `f'(x)`, falling back to a central difference when the analytic form
/// escapes. The flag says whether the fallback was used.
fn slope(spec: &MapSpec, x: f64) -> Option<(f64, bool)> {
    match spec.derivative(x) {
        Ok(d) => Some((d, false)),
        Err(_) => central_difference(spec, x).map(|d| (d, true)),
    }
}

/// Solves `f(x) = x` from `guess`, stopping once `|f(x) - x| <= tol`.
pub fn newton_solve(spec: &MapSpec, guess: f64, tol: f64, max_iter: usize) -> Result<RootReport> {
    if !(tol > 0.0) {
        return Err(argument("tolerance must be positive"));
    }
    if max_iter < 1 {
        return Err(argument("max_iter must be at least 1"));
    }
    spec.validate()?;

    let mut report = RootReport {
        guess,
        root: None,
        iterations: 0,
        residual: f64::NAN,
        derivative_at_root: None,
        stability: None,
        failure: None,
        used_finite_difference: false,
    };
    let mut x = guess;
    loop {
        let g = match spec.eval(x) {
            Ok(fx) => fx - x,
            Err(_) => {
                report.failure = Some(RootFailure::EscapedDomain);
                return Ok(report);
            }
        };
        report.residual = g.abs();
        if report.residual <= tol {
            break;
        }
        if report.iterations == max_iter {
            report.failure = Some(RootFailure::MaxIterations);
            return Ok(report);
        }
        let Some((d, fallback)) = slope(spec, x) else {
            report.failure = Some(RootFailure::EscapedDomain);
            return Ok(report);
        };
        report.used_finite_difference |= fallback;
        let dg = d - 1.0;
        if dg.abs() < ZERO_DERIVATIVE {
            report.failure = Some(RootFailure::ZeroDerivative);
            return Ok(report);
        }
        x -= g / dg;
        report.iterations += 1;
    }

    report.root = Some(x);
    if let Some((d, fallback)) = slope(spec, x) {
        report.used_finite_difference |= fallback;
        report.derivative_at_root = Some(d);
        report.stability = Some(classify_derivative(d, DEFAULT_MARGINAL_BAND));
    }
    Ok(report)
}

fn classify_derivative(derivative: f64, band: f64) -> Stability {
    let m = derivative.abs();
    if m < 1.0 - band {
        Stability::Stable
    } else if m > 1.0 + band {
        Stability::Unstable
    } else {
        Stability::Marginal
    }
}

/// Stable below `1 - band` in `|f'(root)|`, unstable above `1 + band`,
/// marginal in between.
pub fn classify_stability(spec: &MapSpec, root: f64, marginal_band: f64) -> Result<Stability> {
    if !(marginal_band >= 0.0) {
        return Err(argument("marginal band must be >= 0"));
    }
    let d = spec
        .derivative(root)
        .map_err(|escape| Error::DomainViolation(format!("f'({root}) is undefined: {escape}")))?;
    Ok(classify_derivative(d, marginal_band))
}

/// One [`newton_solve`] per guess, in guess order.
pub fn guess_sweep(
    spec: &MapSpec,
    guesses: &[f64],
    tol: f64,
    max_iter: usize,
) -> Result<Vec<RootReport>> {
    guesses
        .par_iter()
        .map(|&g| newton_solve(spec, g, tol, max_iter))
        .collect()
}
