//! One adapter per subcommand: build inputs, call the library, format.

use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use lchaos_core::bifurcation::bifurcation_diagram;
use lchaos_core::lyapunov::{lyapunov_exponent, sweep_grid, LyapunovEstimate};
use lchaos_core::numbertheory::{
    dirichlet_l_at_1, log_lower_bound, log_zero_free_bound, BoundInputs, LFunctionInputs, Parity,
};
use lchaos_core::orbit::{detect_cycle, iterate_orbit};
use lchaos_core::roots::{classify_stability, guess_sweep};
use lchaos_core::stats::{entropy_report, histogram, shannon_entropy, unimodality_check};

use crate::args::*;
use crate::output::{fmt_f64, Cell, Table};
use crate::plot;

fn finish(table: &Table, output: &OutputArgs) -> Result<()> {
    table
        .emit(output.out.as_deref(), output.format)
        .context("writing output")
}

pub fn lfunction(a: &LfunctionArgs) -> Result<()> {
    let inputs = LFunctionInputs {
        parity: Parity::from_sign(a.parity)?,
        h: a.h,
        w: a.w,
        m: a.m,
        epsilon: a.epsilon,
    };
    let mut table = Table::new(&["quantity", "value"]);
    table.push(vec!["l_at_1".into(), dirichlet_l_at_1(&inputs)?.into()]);
    if let Some(modulus) = a.bound_modulus {
        let bound = BoundInputs::new(modulus, a.bound_constant, a.bound_exponent);
        table.push(vec![
            "log_lower_bound".into(),
            log_lower_bound(&bound)?.into(),
        ]);
        table.push(vec![
            "log_zero_free_bound".into(),
            log_zero_free_bound(&bound)?.into(),
        ]);
    }
    finish(&table, &a.output)
}

pub fn orbit(a: &OrbitArgs) -> Result<()> {
    let spec = a.map.spec();
    let record = iterate_orbit(&spec, a.length.x0, a.length.n, a.length.transient)?;
    if let Some(e) = record.escape {
        eprintln!("escaped at step {} ({})", e.step, e.reason);
    }
    if let Some(max_period) = a.detect_cycle {
        let cycle = detect_cycle(&record, max_period, a.cycle_tol)?;
        match cycle.period {
            Some(p) => {
                let pts: Vec<String> = cycle.points.iter().map(|&x| fmt_f64(x)).collect();
                eprintln!("period {p}: {}", pts.join(" "));
            }
            None => eprintln!("no period <= {max_period} at tolerance {}", cycle.tolerance),
        }
    }
    let mut table = Table::new(&["n", "x"]);
    for (i, &x) in record.samples.iter().enumerate() {
        table.push(vec![record.index_of(i).into(), x.into()]);
    }
    if let Some(path) = &a.output.plot {
        let pts: Vec<(f64, f64)> = record
            .samples
            .iter()
            .enumerate()
            .map(|(i, &x)| (record.index_of(i) as f64, x))
            .collect();
        plot::scatter(path, &format!("{} orbit", spec.family), "n", "x", &pts)?;
    }
    finish(&table, &a.output)
}

fn lambda_cell(e: &LyapunovEstimate) -> Cell {
    if e.n_used > 0 {
        Cell::Num(e.lambda)
    } else {
        Cell::Empty
    }
}

pub fn lyapunov(a: &LyapunovArgs) -> Result<()> {
    let est = lyapunov_exponent(&a.map.spec(), a.length.x0, a.length.n, a.length.transient)?;
    let mut table = Table::new(&["lambda", "n_used", "status"]);
    table.push(vec![
        lambda_cell(&est),
        est.n_used.into(),
        est.status.to_string().into(),
    ]);
    finish(&table, &a.output)
}

pub fn sweep(a: &SweepArgs) -> Result<()> {
    let base = a.base.spec(0.0, 0.0);
    let grid = sweep_grid(
        &base,
        a.c,
        a.alpha,
        a.length.x0,
        a.length.n,
        a.length.transient,
    )?;
    let mut table = Table::new(&["c", "alpha", "lambda", "status"]);
    for (c, alpha, e) in grid.iter() {
        table.push(vec![
            c.into(),
            alpha.into(),
            lambda_cell(e),
            e.status.to_string().into(),
        ]);
    }
    eprintln!(
        "cells={} escaped_fraction={} negative_fraction={} max_lambda={}",
        grid.cells.len(),
        fmt_f64(grid.escaped_fraction()),
        grid.negative_fraction().map_or("NA".to_string(), fmt_f64),
        grid.max_lambda().map_or("NA".to_string(), fmt_f64),
    );
    if let Some(path) = &a.output.plot {
        let values: Vec<Option<f64>> = grid
            .cells
            .iter()
            .map(|e| (!e.escaped()).then_some(e.lambda))
            .collect();
        plot::heatmap(
            path,
            &format!("Lyapunov exponent, {} family", base.family),
            "c",
            "alpha",
            &grid.c_axis,
            &grid.alpha_axis,
            &values,
        )?;
    }
    finish(&table, &a.output)
}

pub fn roots(a: &RootsArgs) -> Result<()> {
    let spec = a.map.spec();
    let guesses = a.guesses.values();
    let reports = guess_sweep(&spec, &guesses, a.tol, a.max_iter)?;
    let mut table = Table::new(&["guess", "root", "derivative", "stability", "status"]);
    for rep in &reports {
        let stability = match rep.root {
            Some(root) if rep.derivative_at_root.is_some() => {
                Cell::Text(classify_stability(&spec, root, a.band)?.to_string())
            }
            _ => Cell::Empty,
        };
        table.push(vec![
            rep.guess.into(),
            rep.root.into(),
            rep.derivative_at_root.into(),
            stability,
            rep.status().into(),
        ]);
    }
    if let Some(path) = &a.output.plot {
        let pts: Vec<(f64, f64)> = reports
            .iter()
            .filter_map(|r| r.root.map(|x| (r.guess, x)))
            .collect();
        plot::scatter(path, "Newton solutions", "initial guess", "solution", &pts)?;
    }
    finish(&table, &a.output)
}

pub fn bifurcate(a: &BifurcateArgs) -> Result<()> {
    let data = bifurcation_diagram(
        &a.map.spec(),
        a.param,
        a.range,
        a.length.x0,
        a.length.n,
        a.length.transient,
        a.samples,
        a.cluster_tol,
    )?;
    let mut table = Table::new(&["param", "x"]);
    for (p, xs) in data.param_values.iter().zip(&data.attractor_samples) {
        for &x in xs {
            table.push(vec![(*p).into(), x.into()]);
        }
    }
    if let Some(path) = &a.branches {
        let mut counts = Table::new(&["param", "branches"]);
        for (p, n) in data.param_values.iter().zip(&data.branch_counts) {
            counts.push(vec![(*p).into(), (*n).into()]);
        }
        counts.emit(Some(path), a.output.format)?;
    }
    if let Some(r) = data.first_doubling() {
        eprintln!("first doubling at {}={}", data.param, fmt_f64(r));
    }
    if let Some(path) = &a.output.plot {
        let pts: Vec<(f64, f64)> = data
            .param_values
            .iter()
            .zip(&data.attractor_samples)
            .flat_map(|(&p, xs)| xs.iter().map(move |&x| (p, x)))
            .collect();
        plot::scatter(path, "Bifurcation diagram", data.param.name(), "x", &pts)?;
    }
    finish(&table, &a.output)
}

/// Reads one real per line, or column `column` of a headed CSV.
/// Blank lines and `#` comments are skipped; blank CSV cells too.
pub fn read_values(path: &Path, column: Option<&str>) -> Result<Vec<f64>> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let index = match column {
        None => None,
        Some(name) => {
            let Some((_, header)) = lines.next() else {
                bail!("{} is empty", path.display());
            };
            let idx = header
                .split(',')
                .position(|h| h.trim() == name)
                .with_context(|| format!("column {name:?} not in header {header:?}"))?;
            Some(idx)
        }
    };
    let mut values = Vec::new();
    for (n, line) in lines {
        let field = match index {
            None => line,
            Some(i) => line.split(',').nth(i).unwrap_or("").trim(),
        };
        if field.is_empty() {
            continue;
        }
        let v: f64 = field
            .parse()
            .with_context(|| format!("{}:{n}: not a number: {field:?}", path.display()))?;
        values.push(v);
    }
    Ok(values)
}

pub fn entropy(a: &EntropyArgs) -> Result<()> {
    let lambdas = read_values(&a.lyapunov, None)?;
    if lambdas.is_empty() {
        bail!("{} holds no values", a.lyapunov.display());
    }
    let hist = histogram(&lambdas, a.bins, None)?;
    let report = entropy_report(&hist, &lambdas)?;
    let mut table = Table::new(&["quantity", "value"]);
    table.push(vec!["count".into(), lambdas.len().into()]);
    table.push(vec!["pesin".into(), report.pesin.into()]);
    table.push(vec!["shannon_raw".into(), report.shannon_raw.into()]);
    table.push(vec![
        "shannon_normalized".into(),
        report.shannon_normalized.into(),
    ]);
    if let Some(path) = &a.output.plot {
        plot::bars(
            path,
            "Lyapunov exponents",
            "lambda",
            &hist.edges,
            &hist.counts,
        )?;
    }
    finish(&table, &a.output)
}

fn parse_span(s: &str) -> Result<(f64, f64)> {
    let (lo, hi) = s
        .split_once(':')
        .with_context(|| format!("expected lo:hi, got {s:?}"))?;
    Ok((
        lo.trim()
            .parse()
            .with_context(|| format!("bad lower bound {lo:?}"))?,
        hi.trim()
            .parse()
            .with_context(|| format!("bad upper bound {hi:?}"))?,
    ))
}

pub fn histogram_cmd(a: &HistogramArgs) -> Result<()> {
    let values = read_values(&a.input, a.column.as_deref())?;
    let range = a.range.as_deref().map(parse_span).transpose()?;
    let hist = histogram(&values, a.bins, range)?;
    let (raw, normalized) = shannon_entropy(&hist);
    let modes = unimodality_check(&hist, a.window)?;
    eprintln!(
        "total={} shannon_raw={} shannon_normalized={} unimodal={} mode_center={}",
        hist.total,
        fmt_f64(raw),
        fmt_f64(normalized),
        modes.is_unimodal,
        modes.mode_center.map_or("NA".to_string(), fmt_f64),
    );
    let mut table = Table::new(&["bin_lo", "bin_hi", "count"]);
    for (i, &n) in hist.counts.iter().enumerate() {
        table.push(vec![
            hist.edges[i].into(),
            hist.edges[i + 1].into(),
            Cell::Int(n),
        ]);
    }
    if let Some(path) = &a.output.plot {
        plot::bars(path, "Histogram", "value", &hist.edges, &hist.counts)?;
    }
    finish(&table, &a.output)
}
