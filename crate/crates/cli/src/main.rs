#![allow(clippy::neg_cmp_op_on_partial_ord)]

mod args;
mod commands;
mod config;
mod output;
mod plot;

use std::process::ExitCode;

use anyhow::Result;
use clap::error::ErrorKind;
use clap::{CommandFactory, Parser};

use args::{Cli, Cmd};

fn workers(cmd: &Cmd) -> Option<usize> {
    match cmd {
        Cmd::Sweep(a) => a.workers.workers,
        Cmd::Roots(a) => a.workers.workers,
        Cmd::Bifurcate(a) => a.workers.workers,
        _ => None,
    }
}

fn run(cli: Cli) -> Result<()> {
    let threads = workers(&cli.command)
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
    if threads == 0 {
        anyhow::bail!("--workers must be at least 1");
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()?;
    pool.install(|| match &cli.command {
        Cmd::Lfunction(a) => commands::lfunction(a),
        Cmd::Orbit(a) => commands::orbit(a),
        Cmd::Lyapunov(a) => commands::lyapunov(a),
        Cmd::Sweep(a) => commands::sweep(a),
        Cmd::Roots(a) => commands::roots(a),
        Cmd::Bifurcate(a) => commands::bifurcate(a),
        Cmd::Entropy(a) => commands::entropy(a),
        Cmd::Histogram(a) => commands::histogram_cmd(a),
    })
}

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().collect();
    let argv = match config::expand(argv, &Cli::command()) {
        Ok(a) => a,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(1);
        }
    };
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            // malformed values are validation failures, not usage errors
            let code = match e.kind() {
                ErrorKind::ValueValidation | ErrorKind::InvalidValue => 1,
                _ => e.exit_code() as u8,
            };
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        // downstream closed the pipe (e.g. `| head`)
        Err(e)
            if e.chain().any(|c| {
                c.downcast_ref::<std::io::Error>()
                    .is_some_and(|io| io.kind() == std::io::ErrorKind::BrokenPipe)
            }) =>
        {
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
