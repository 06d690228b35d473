//! Bifurcation-diagram data: attractor samples against one swept parameter,
//! with a branch count per parameter value.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{argument, Error, Result};
use crate::maps::MapSpec;
use crate::orbit::iterate_orbit;
use crate::range::ParamRange;

pub const DEFAULT_SAMPLES_PER_PARAM: usize = 200;
pub const DEFAULT_CLUSTER_TOL: f64 = 1e-4;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BifurcationParam {
    C,
    Alpha,
    R,
}

impl BifurcationParam {
    pub fn name(self) -> &'static str {
        match self {
            BifurcationParam::C => "c",
            BifurcationParam::Alpha => "alpha",
            BifurcationParam::R => "r",
        }
    }

    pub fn apply(self, base: &MapSpec, value: f64) -> MapSpec {
        let mut spec = *base;
        match self {
            BifurcationParam::C => spec.c = value,
            BifurcationParam::Alpha => spec.alpha = value,
            BifurcationParam::R => spec.r = value,
        }
        spec
    }
}

impl fmt::Display for BifurcationParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BifurcationParam {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "c" => Ok(BifurcationParam::C),
            "alpha" => Ok(BifurcationParam::Alpha),
            "r" => Ok(BifurcationParam::R),
            other => Err(argument(format!(
                "unknown parameter {other:?} (expected c, alpha or r)"
            ))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BifurcationData {
    pub param: BifurcationParam,
    pub param_values: Vec<f64>,
    /// Last `samples_per_param` iterates per value; empty if the orbit escaped.
    pub attractor_samples: Vec<Vec<f64>>,
    /// Distinct clusters per value; 0 for escaped orbits.
    pub branch_counts: Vec<usize>,
}

impl BifurcationData {
    /// First parameter value whose branch count doubles that of its
    /// predecessor, starting from a single branch.
    pub fn first_doubling(&self) -> Option<f64> {
        self.branch_counts
            .windows(2)
            .position(|w| w[0] == 1 && w[1] == 2)
            .map(|i| self.param_values[i + 1])
    }
}

/// Number of single-linkage clusters at absolute tolerance `tol`.
pub fn count_clusters(samples: &[f64], tol: f64) -> usize {
    if samples.is_empty() {
        return 0;
    }
    let mut sorted = samples.to_vec();
    sorted.sort_by(f64::total_cmp);
    1 + sorted.windows(2).filter(|w| w[1] - w[0] > tol).count()
}

#[allow(clippy::too_many_arguments)]
pub fn bifurcation_diagram(
    base: &MapSpec,
    param: BifurcationParam,
    range: ParamRange,
    x0: f64,
    n_iter: usize,
    transient: usize,
    samples_per_param: usize,
    cluster_tol: f64,
) -> Result<BifurcationData> {
    range.validate()?;
    if samples_per_param < 1 {
        return Err(argument("samples_per_param must be at least 1"));
    }
    if n_iter <= transient + samples_per_param {
        return Err(argument(format!(
            "n_iter ({n_iter}) must exceed transient + samples_per_param ({})",
            transient + samples_per_param
        )));
    }
    if !(cluster_tol > 0.0) {
        return Err(argument("cluster tolerance must be positive"));
    }
    let param_values = range.values();
    let specs: Vec<MapSpec> = param_values.iter().map(|&v| param.apply(base, v)).collect();
    for spec in &specs {
        spec.validate()?;
    }
    let rows = specs
        .par_iter()
        .map(|spec| {
            let orbit = iterate_orbit(spec, x0, n_iter, transient)?;
            if orbit.escaped() {
                return Ok((Vec::new(), 0));
            }
            let tail = orbit.samples[orbit.samples.len() - samples_per_param..].to_vec();
            let branches = count_clusters(&tail, cluster_tol);
            Ok((tail, branches))
        })
        .collect::<Result<Vec<_>>>()?;
    let (attractor_samples, branch_counts) = rows.into_iter().unzip();
    Ok(BifurcationData {
        param,
        param_values,
        attractor_samples,
        branch_counts,
    })
}
