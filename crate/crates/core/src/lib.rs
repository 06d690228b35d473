//! Discrete one-dimensional maps derived from the class-number closed forms
//! of `L(1, chi)`, together with the tooling used to study them: orbit
//! iteration and cycle detection, Lyapunov exponents and parameter sweeps,
//! Newton fixed-point solving, bifurcation data and entropy statistics.
//!
//! The logistic map is carried alongside the two L-function maps as an
//! analytic reference: every estimator in the crate is checked against its
//! known fixed points, cycles and exponents.

#![allow(clippy::neg_cmp_op_on_partial_ord)] // NaN must fail these checks

pub mod bifurcation;
pub mod error;
pub mod lyapunov;
pub mod maps;
pub mod numbertheory;
pub mod orbit;
pub mod range;
pub mod roots;
pub mod stats;

pub use error::{Error, Result};
pub use maps::{Escape, EvalOutcome, Family, MapSpec};
pub use orbit::{CycleReport, EscapeEvent, OrbitRecord};
pub use range::ParamRange;
