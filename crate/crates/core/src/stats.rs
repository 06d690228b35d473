//! Histograms, Shannon and Pesin entropies, and a unimodality test on
//! binned counts. All logarithms are natural.

use crate::error::{argument, Result};

/// Relative margin added around `[min, max]` when no range is given.
const RANGE_MARGIN: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq)]
pub struct Histogram {
    /// `bins + 1` strictly increasing edges.
    pub edges: Vec<f64>,
    pub counts: Vec<u64>,
    pub total: u64,
}

impl Histogram {
    pub fn bins(&self) -> usize {
        self.counts.len()
    }

    pub fn center(&self, bin: usize) -> f64 {
        0.5 * (self.edges[bin] + self.edges[bin + 1])
    }

    /// Builds a histogram from explicit edges and counts.
    pub fn from_parts(edges: Vec<f64>, counts: Vec<u64>) -> Result<Self> {
        if counts.is_empty() || edges.len() != counts.len() + 1 {
            return Err(argument("histogram needs k >= 1 counts and k + 1 edges"));
        }
        if !edges.windows(2).all(|w| w[0] < w[1]) {
            return Err(argument("histogram edges must be strictly increasing"));
        }
        let total = counts.iter().sum();
        Ok(Histogram {
            edges,
            counts,
            total,
        })
    }

    /// Unit-width bins `[i, i+1)` holding `counts`.
    pub fn from_counts(counts: &[u64]) -> Result<Self> {
        let edges = (0..=counts.len()).map(|i| i as f64).collect();
        Histogram::from_parts(edges, counts.to_vec())
    }
}

/// Equal-width histogram. Values outside an explicit `range` are not
/// counted; the upper edge is inclusive.
pub fn histogram(values: &[f64], bins: usize, range: Option<(f64, f64)>) -> Result<Histogram> {
    if bins < 1 {
        return Err(argument("bins must be at least 1"));
    }
    if values.is_empty() {
        return Err(argument("cannot histogram an empty list"));
    }
    if values.iter().any(|v| !v.is_finite()) {
        return Err(argument("histogram values must be finite"));
    }
    let (lo, hi) = match range {
        Some((lo, hi)) => {
            if !(lo < hi) || !lo.is_finite() || !hi.is_finite() {
                return Err(argument(format!(
                    "histogram range needs lo < hi, got ({lo}, {hi})"
                )));
            }
            (lo, hi)
        }
        None => {
            let min = values.iter().copied().fold(f64::INFINITY, f64::min);
            let max = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
            let margin = RANGE_MARGIN * (max - min).max(min.abs().max(max.abs())).max(1.0);
            (min - margin, max + margin)
        }
    };
    let width = (hi - lo) / bins as f64;
    let edges: Vec<f64> = (0..=bins)
        .map(|i| if i == bins { hi } else { lo + width * i as f64 })
        .collect();
    let mut counts = vec![0u64; bins];
    for &v in values {
        if v < lo || v > hi {
            continue;
        }
        let idx = (((v - lo) / (hi - lo)) * bins as f64) as usize;
        counts[idx.min(bins - 1)] += 1;
    }
    let total = counts.iter().sum();
    Ok(Histogram {
        edges,
        counts,
        total,
    })
}

/// `(raw, normalized)` Shannon entropy of the bin occupancy.
/// `normalized = raw / log(bins)`, or 0 for a single bin.
pub fn shannon_entropy(hist: &Histogram) -> (f64, f64) {
    if hist.total == 0 {
        return (0.0, 0.0);
    }
    let total = hist.total as f64;
    let raw: f64 = hist
        .counts
        .iter()
        .filter(|&&n| n > 0)
        .map(|&n| {
            let p = n as f64 / total;
            -p * p.ln()
        })
        .sum();
    let raw = if raw > 0.0 { raw } else { 0.0 };
    let normalized = if hist.bins() > 1 {
        (raw / (hist.bins() as f64).ln()).min(1.0)
    } else {
        0.0
    };
    (raw, normalized)
}

/// Sum of the strictly positive exponents.
///
/// Positives are summed in ascending order so the result does not depend on
/// the input order.
pub fn pesin_entropy(lambdas: &[f64]) -> Result<f64> {
    if lambdas.is_empty() {
        return Err(argument("pesin entropy needs at least one exponent"));
    }
    let mut positive: Vec<f64> = lambdas.iter().copied().filter(|&l| l > 0.0).collect();
    positive.sort_by(f64::total_cmp);
    Ok(positive.iter().sum())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EntropyReport {
    pub shannon_raw: f64,
    pub shannon_normalized: f64,
    pub pesin: f64,
}

pub fn entropy_report(hist: &Histogram, lambdas: &[f64]) -> Result<EntropyReport> {
    let (shannon_raw, shannon_normalized) = shannon_entropy(hist);
    Ok(EntropyReport {
        shannon_raw,
        shannon_normalized,
        pesin: pesin_entropy(lambdas)?,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Unimodality {
    pub is_unimodal: bool,
    /// Midpoint of the peak plateau; `None` when not unimodal.
    pub mode_center: Option<f64>,
}

/// Centered moving average; windows are truncated at the edges.
fn smooth(counts: &[u64], window: usize) -> Vec<f64> {
    let half = window / 2;
    (0..counts.len())
        .map(|i| {
            let a = i.saturating_sub(half);
            let b = (i + half).min(counts.len() - 1);
            counts[a..=b].iter().sum::<u64>() as f64 / (b - a + 1) as f64
        })
        .collect()
}

/// Single-peak test: after smoothing, the counts must rise (weakly) to one
/// contiguous maximal plateau and then fall (weakly).
pub fn unimodality_check(hist: &Histogram, smoothing_window: usize) -> Result<Unimodality> {
    if smoothing_window == 0 || smoothing_window.is_multiple_of(2) {
        return Err(argument("smoothing window must be odd and >= 1"));
    }
    let s = smooth(&hist.counts, smoothing_window);
    let peak = s.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let first = s.iter().position(|&v| v == peak).unwrap_or(0);
    let last = s.iter().rposition(|&v| v == peak).unwrap_or(0);
    let plateau = s[first..=last].iter().all(|&v| v == peak);
    let rising = s[..=first].windows(2).all(|w| w[0] <= w[1]);
    let falling = s[last..].windows(2).all(|w| w[0] >= w[1]);
    let is_unimodal = plateau && rising && falling && hist.total > 0;
    Ok(Unimodality {
        is_unimodal,
        mode_center: is_unimodal.then(|| 0.5 * (hist.edges[first] + hist.edges[last + 1])),
    })
}
