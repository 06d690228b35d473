//! The map families and their pointwise evaluation.
//!
//! The two L-function maps share one shape,
//!
//! ```text
//! f(x) = k / sqrt(x) + c * P(log x),    P(y) = sign(y) * |y|^(-alpha)
//! ```
//!
//! with `k = beta` for odd characters and `k = beta * log(epsilon) / pi` for
//! even ones, `beta = 2 pi h / w`. `P` is the odd extension of `y^(-alpha)`:
//! for `0 < x < 1` the logarithm is negative and a real power of it does not
//! exist in general, so the sign is carried outside. `P(0)` is taken as 0
//! when `alpha = 0`, which is what oddness forces; for `alpha > 0` the point
//! `x = 1` is a pole.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use crate::error::{argument, Error, Result};

pub const DEFAULT_ESCAPE_BOUND: f64 = 1e100;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// Map built from the odd-character closed form.
    OddDynamics,
    /// Map built from the even-character closed form.
    EvenDynamics,
    /// `r x (1 - x)`, the reference family.
    Logistic,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::OddDynamics => "odd",
            Family::EvenDynamics => "even",
            Family::Logistic => "logistic",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "odd" => Ok(Family::OddDynamics),
            "even" => Ok(Family::EvenDynamics),
            "logistic" => Ok(Family::Logistic),
            other => Err(argument(format!(
                "unknown family {other:?} (expected odd, even or logistic)"
            ))),
        }
    }
}

/// Why an evaluation produced no value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Escape {
    /// `x <= 0` (or NaN) where `sqrt(x)` and `log(x)` are required.
    DomainViolation,
    /// `x = 1` with `alpha > 0`: `(log x)^(-alpha)` blows up.
    LogPole,
    /// Result is non-finite or larger in magnitude than the escape bound.
    Overflow,
}

impl Escape {
    pub fn name(self) -> &'static str {
        match self {
            Escape::DomainViolation => "domain_violation",
            Escape::LogPole => "log_pole",
            Escape::Overflow => "overflow",
        }
    }
}

impl fmt::Display for Escape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A value, or the reason there is none.
pub type EvalOutcome = std::result::Result<f64, Escape>;

/// Every parameter that enters an iterated equation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MapSpec {
    pub family: Family,
    /// Class number.
    pub h: u64,
    /// Roots of unity.
    pub w: u64,
    /// Fundamental unit (even family).
    pub epsilon: f64,
    /// Coefficient of the power-of-log term.
    pub c: f64,
    /// Exponent of the power-of-log term.
    pub alpha: f64,
    /// Logistic growth rate.
    pub r: f64,
    /// Replaces `2 pi h / w` when set.
    pub beta_override: Option<f64>,
    pub escape_bound: f64,
}

impl Default for MapSpec {
    fn default() -> Self {
        MapSpec {
            family: Family::OddDynamics,
            h: 1,
            w: 2,
            epsilon: (1.0 + 5f64.sqrt()) / 2.0,
            c: 0.0,
            alpha: 0.0,
            r: 4.0,
            beta_override: None,
            escape_bound: DEFAULT_ESCAPE_BOUND,
        }
    }
}

impl MapSpec {
    pub fn odd(c: f64, alpha: f64) -> Self {
        MapSpec {
            family: Family::OddDynamics,
            c,
            alpha,
            ..MapSpec::default()
        }
    }

    pub fn even(c: f64, alpha: f64) -> Self {
        MapSpec {
            family: Family::EvenDynamics,
            c,
            alpha,
            ..MapSpec::default()
        }
    }

    pub fn logistic(r: f64) -> Self {
        MapSpec {
            family: Family::Logistic,
            r,
            ..MapSpec::default()
        }
    }

    pub fn with_beta(mut self, beta: f64) -> Self {
        self.beta_override = Some(beta);
        self
    }

    pub fn with_epsilon(mut self, epsilon: f64) -> Self {
        self.epsilon = epsilon;
        self
    }

    pub fn with_class(mut self, h: u64, w: u64) -> Self {
        self.h = h;
        self.w = w;
        self
    }

    /// `2 pi h / w` unless overridden.
    pub fn beta(&self) -> f64 {
        self.beta_override
            .unwrap_or_else(|| 2.0 * PI * self.h as f64 / self.w as f64)
    }

    /// Numerator of the `1 / sqrt(x)` term.
    pub fn sqrt_coefficient(&self) -> f64 {
        match self.family {
            Family::OddDynamics => self.beta(),
            Family::EvenDynamics => self.beta() * self.epsilon.ln() / PI,
            Family::Logistic => 0.0,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.escape_bound > 0.0) {
            return Err(argument("escape bound must be positive"));
        }
        match self.family {
            Family::Logistic => {
                if !(self.r > 0.0 && self.r <= 4.0) {
                    return Err(argument(format!(
                        "logistic rate r must lie in (0, 4], got {}",
                        self.r
                    )));
                }
            }
            Family::OddDynamics | Family::EvenDynamics => {
                if self.h < 1 || self.w < 1 {
                    return Err(argument("h and w must be >= 1"));
                }
                match self.beta_override {
                    Some(b) if !(b.is_finite() && b >= 0.0) => {
                        return Err(argument("beta override must be finite and >= 0"));
                    }
                    _ => {}
                }
                if !self.c.is_finite() {
                    return Err(argument("c must be finite"));
                }
                if !(self.alpha.is_finite() && self.alpha >= 0.0) {
                    return Err(argument("alpha must be finite and >= 0"));
                }
                if self.family == Family::EvenDynamics
                    && !(self.epsilon.is_finite() && self.epsilon > 1.0)
                {
                    return Err(argument("epsilon must exceed 1 for the even family"));
                }
            }
        }
        Ok(())
    }

    fn bounded(&self, v: f64) -> EvalOutcome {
        if v.is_finite() && v.abs() <= self.escape_bound {
            Ok(v)
        } else {
            Err(Escape::Overflow)
        }
    }

    /// Checks the L-map domain and returns `log x`.
    fn log_arg(&self, x: f64) -> std::result::Result<f64, Escape> {
        if !(x > 0.0) || !x.is_finite() {
            return Err(Escape::DomainViolation);
        }
        let y = x.ln();
        if y == 0.0 && self.alpha > 0.0 && self.c != 0.0 {
            return Err(Escape::LogPole);
        }
        Ok(y)
    }

    /// `f(x)`.
    pub fn eval(&self, x: f64) -> EvalOutcome {
        match self.family {
            Family::Logistic => {
                if x.is_nan() {
                    return Err(Escape::DomainViolation);
                }
                self.bounded(self.r * x * (1.0 - x))
            }
            Family::OddDynamics | Family::EvenDynamics => {
                let y = self.log_arg(x)?;
                let head = self.sqrt_coefficient() / x.sqrt();
                let tail = if self.c == 0.0 {
                    0.0
                } else {
                    self.c * signed_power(y, self.alpha)
                };
                self.bounded(head + tail)
            }
        }
    }

    /// `f'(x)`, analytic.
    pub fn derivative(&self, x: f64) -> EvalOutcome {
        match self.family {
            Family::Logistic => {
                if x.is_nan() {
                    return Err(Escape::DomainViolation);
                }
                self.bounded(self.r * (1.0 - 2.0 * x))
            }
            Family::OddDynamics | Family::EvenDynamics => {
                let y = self.log_arg(x)?;
                let head = -self.sqrt_coefficient() / (2.0 * x * x.sqrt());
                let tail = if self.c == 0.0 || self.alpha == 0.0 {
                    0.0
                } else {
                    -self.c * self.alpha * y.abs().powf(-self.alpha - 1.0) / x
                };
                self.bounded(head + tail)
            }
        }
    }
}

/// `sign(y) * |y|^(-alpha)`, with `P(0) = 0`.
///
/// Callers must exclude `y = 0` when `alpha > 0`.
pub fn signed_power(y: f64, alpha: f64) -> f64 {
    if y == 0.0 {
        return 0.0;
    }
    y.signum() * y.abs().powf(-alpha)
}

/// `f(x)` for `spec`.
pub fn eval_map(spec: &MapSpec, x: f64) -> EvalOutcome {
    spec.eval(x)
}

/// `f'(x)` for `spec`.
pub fn eval_derivative(spec: &MapSpec, x: f64) -> EvalOutcome {
    spec.derivative(x)
}
