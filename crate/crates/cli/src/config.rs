//! `key = value` config files, merged into the argument list ahead of the
//! command-line flags so that flags win.

use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use clap::Command;

/// Parses `key = value` lines; `#` starts a comment.
pub fn parse(text: &str) -> Result<Vec<(String, String)>> {
    let mut pairs = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            bail!("config line {}: expected `key = value`, got {raw:?}", n + 1);
        };
        let key = key.trim();
        if key.is_empty() {
            bail!("config line {}: empty key", n + 1);
        }
        pairs.push((key.to_string(), value.trim().to_string()));
    }
    Ok(pairs)
}

/// Turns config pairs into flags for `sub`, rejecting keys it does not know.
pub fn to_flags(sub: &Command, pairs: &[(String, String)]) -> Result<Vec<String>> {
    let mut flags = Vec::new();
    for (key, value) in pairs {
        let Some(arg) = sub
            .get_arguments()
            .find(|a| a.get_long() == Some(key.as_str()) && key != "config")
        else {
            bail!("unknown config key {key:?} for `{}`", sub.get_name());
        };
        if arg.get_action().takes_values() {
            flags.push(format!("--{key}"));
            flags.push(value.clone());
        } else {
            match value.as_str() {
                "true" => flags.push(format!("--{key}")),
                "false" => {}
                other => {
                    bail!("config key {key:?} is a switch; expected true or false, got {other:?}")
                }
            }
        }
    }
    Ok(flags)
}

/// Removes `--config PATH` / `--config=PATH` from `argv` and splices the
/// file's settings in right after the subcommand name.
pub fn expand(argv: Vec<String>, root: &Command) -> Result<Vec<String>> {
    let mut rest = Vec::with_capacity(argv.len());
    let mut config_path = None;
    let mut it = argv.into_iter();
    while let Some(a) = it.next() {
        if a == "--config" {
            match it.next() {
                Some(p) => config_path = Some(p),
                None => bail!("--config needs a path"),
            }
        } else if let Some(p) = a.strip_prefix("--config=") {
            config_path = Some(p.to_string());
        } else {
            rest.push(a);
        }
    }
    let Some(path) = config_path else {
        return Ok(rest);
    };
    // the subcommand is the first bare word after the program name
    let Some(pos) = rest
        .iter()
        .skip(1)
        .position(|a| !a.starts_with('-'))
        .map(|p| p + 1)
    else {
        return Ok(rest);
    };
    let Some(sub) = root.find_subcommand(&rest[pos]) else {
        return Ok(rest);
    };
    let text =
        fs::read_to_string(Path::new(&path)).with_context(|| format!("reading config {path}"))?;
    let flags = to_flags(sub, &parse(&text)?)?;
    let mut out: Vec<String> = rest[..=pos].to_vec();
    out.extend(flags);
    out.extend(rest[pos + 1..].iter().cloned());
    Ok(out)
}
