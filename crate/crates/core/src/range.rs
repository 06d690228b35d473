//! Inclusive, evenly spaced parameter ranges written as `lo:hi:count`.

use std::fmt;
use std::str::FromStr;

use crate::error::{argument, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParamRange {
    pub lo: f64,
    pub hi: f64,
    pub count: usize,
}

impl ParamRange {
    pub fn new(lo: f64, hi: f64, count: usize) -> Result<Self> {
        let range = ParamRange { lo, hi, count };
        range.validate()?;
        Ok(range)
    }

    /// A one-point range.
    pub fn single(value: f64) -> Self {
        ParamRange {
            lo: value,
            hi: value,
            count: 1,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.count == 0 {
            return Err(argument("range count must be at least 1"));
        }
        if !self.lo.is_finite() || !self.hi.is_finite() {
            return Err(argument("range bounds must be finite"));
        }
        if self.count > 1 && self.lo >= self.hi {
            return Err(argument(format!(
                "range with {} points needs lo < hi (got {}:{})",
                self.count, self.lo, self.hi
            )));
        }
        if self.count == 1 && self.lo > self.hi {
            return Err(argument("range lo must not exceed hi"));
        }
        Ok(())
    }

    /// The `count` grid points, `lo` and `hi` included.
    ///
    /// Point `i` is computed as `lo + i * (hi - lo) / (count - 1)` so that a
    /// point never depends on its neighbours; the last point is pinned to `hi`.
    pub fn values(&self) -> Vec<f64> {
        match self.count {
            0 => Vec::new(),
            1 => vec![self.lo],
            n => {
                let span = self.hi - self.lo;
                let last = (n - 1) as f64;
                (0..n)
                    .map(|i| {
                        if i == n - 1 {
                            self.hi
                        } else {
                            self.lo + span * (i as f64) / last
                        }
                    })
                    .collect()
            }
        }
    }
}

impl fmt::Display for ParamRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:{}", self.lo, self.hi, self.count)
    }
}

impl FromStr for ParamRange {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(':').map(str::trim).collect();
        if parts.len() != 3 {
            return Err(argument(format!("expected lo:hi:count, got {s:?}")));
        }
        let lo = parts[0]
            .parse::<f64>()
            .map_err(|_| argument(format!("bad range lower bound {:?}", parts[0])))?;
        let hi = parts[1]
            .parse::<f64>()
            .map_err(|_| argument(format!("bad range upper bound {:?}", parts[1])))?;
        let count = parts[2]
            .parse::<usize>()
            .map_err(|_| argument(format!("bad range count {:?}", parts[2])))?;
        ParamRange::new(lo, hi, count)
    }
}
