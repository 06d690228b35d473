//! Closed forms for `L(1, chi)` of a primitive real character and the
//! log-space lower and zero-free bounds.

use std::f64::consts::PI;

use crate::error::{argument, Error, Result};

/// Sign of the character at -1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    /// `chi(-1) = -1`, imaginary quadratic field.
    Odd,
    /// `chi(-1) = +1`, real quadratic field.
    Even,
}

impl Parity {
    pub fn from_sign(sign: i64) -> Result<Self> {
        match sign {
            -1 => Ok(Parity::Odd),
            1 => Ok(Parity::Even),
            other => Err(argument(format!("parity must be -1 or +1, got {other}"))),
        }
    }

    pub fn sign(self) -> i64 {
        match self {
            Parity::Odd => -1,
            Parity::Even => 1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LFunctionInputs {
    pub parity: Parity,
    /// Class number.
    pub h: u64,
    /// Number of roots of unity in the field.
    pub w: u64,
    /// Modulus of the character.
    pub m: u64,
    /// Fundamental unit, only consulted for even parity.
    pub epsilon: Option<f64>,
}

impl LFunctionInputs {
    pub fn odd(h: u64, w: u64, m: u64) -> Self {
        LFunctionInputs {
            parity: Parity::Odd,
            h,
            w,
            m,
            epsilon: None,
        }
    }

    pub fn even(h: u64, w: u64, m: u64, epsilon: f64) -> Self {
        LFunctionInputs {
            parity: Parity::Even,
            h,
            w,
            m,
            epsilon: Some(epsilon),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.h < 1 {
            return Err(argument("class number h must be >= 1"));
        }
        if self.w < 1 {
            return Err(argument("root-of-unity count w must be >= 1"));
        }
        if self.m < 3 {
            return Err(argument("modulus m must be >= 3"));
        }
        if self.parity == Parity::Even {
            match self.epsilon {
                Some(e) if e.is_finite() && e > 1.0 => {}
                _ => return Err(Error::MissingFundamentalUnit),
            }
        }
        Ok(())
    }
}

/// `L(1, chi)` from the class-number closed form.
///
/// Odd characters give `2 pi h / (w sqrt m)`, even characters
/// `2 h log(epsilon) / (w sqrt m)`. The even branch is evaluated exactly as
/// written; with `w = 2` it comes out at half the value of the classical
/// formula `h log(epsilon) / sqrt m`.
pub fn dirichlet_l_at_1(inputs: &LFunctionInputs) -> Result<f64> {
    inputs.validate()?;
    let h = inputs.h as f64;
    let w = inputs.w as f64;
    let root_m = (inputs.m as f64).sqrt();
    let value = match inputs.parity {
        Parity::Odd => 2.0 * PI * h / (w * root_m),
        Parity::Even => {
            let eps = inputs.epsilon.ok_or(Error::MissingFundamentalUnit)?;
            2.0 * h * eps.abs().ln() / (w * root_m)
        }
    };
    Ok(value)
}

/// Inputs of a bound of the form `constant * (log modulus)^(-exponent)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundInputs {
    pub modulus: f64,
    pub constant: f64,
    pub exponent: f64,
}

impl BoundInputs {
    pub fn new(modulus: f64, constant: f64, exponent: f64) -> Self {
        BoundInputs {
            modulus,
            constant,
            exponent,
        }
    }

    fn log_log_modulus(&self) -> Result<f64> {
        if !(self.modulus > 1.0) || !self.modulus.is_finite() {
            return Err(Error::DomainViolation(format!(
                "log log of modulus {} is undefined; modulus must exceed 1",
                self.modulus
            )));
        }
        if !(self.constant > 0.0) || !self.constant.is_finite() {
            return Err(argument("bound constant must be positive and finite"));
        }
        if !(self.exponent > 0.0) || !self.exponent.is_finite() {
            return Err(argument("bound exponent must be positive and finite"));
        }
        Ok(self.modulus.ln().ln())
    }
}

/// Natural log of `constant * (log modulus)^(-exponent)`.
///
/// Kept in log space: for an exponent like 2022 the bound itself underflows
/// any `f64` long before the modulus gets interesting.
pub fn log_lower_bound(inputs: &BoundInputs) -> Result<f64> {
    let ll = inputs.log_log_modulus()?;
    Ok(inputs.constant.ln() - inputs.exponent * ll)
}

/// Natural log of the zero-free width `constant * (log modulus)^(-exponent - 2)`.
pub fn log_zero_free_bound(inputs: &BoundInputs) -> Result<f64> {
    let ll = inputs.log_log_modulus()?;
    Ok(inputs.constant.ln() - (inputs.exponent + 2.0) * ll)
}
