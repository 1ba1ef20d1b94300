//! Optional TOML defaults, merged into argv ahead of the user's own flags.
//!
//! Top-level keys are global flags (`format`, `precision`, `out`); tables
//! are keyed by subcommand, e.g. `[sweep]` or `[series.d]`. Keys use the
//! flag names, with `_` accepted for `-`.

use std::ffi::OsString;
use std::path::Path;

use toml::{Table, Value};

use crate::error::{Error, Result};

/// Global flags that take a value.
const VALUED_GLOBALS: [&str; 4] = ["--format", "--precision", "--out", "--config"];
/// Subcommands with a nested subcommand.
const NESTED: [&str; 3] = ["series", "closed-form", "report"];

fn config_path(argv: &[OsString]) -> Option<OsString> {
    let mut it = argv.iter().skip(1);
    let mut found = None;
    while let Some(a) = it.next() {
        let s = a.to_string_lossy();
        if s == "--config" {
            found = it.next().cloned();
        } else if let Some(p) = s.strip_prefix("--config=") {
            found = Some(p.into());
        } else if s == "--" {
            break;
        }
    }
    found
}

/// Positions of the subcommand names in `argv`.
fn subcommand_path(argv: &[OsString]) -> Vec<(usize, String)> {
    let mut path = Vec::new();
    let mut i = 1;
    while i < argv.len() {
        let s = argv[i].to_string_lossy();
        if s.starts_with("--") {
            if VALUED_GLOBALS.contains(&s.as_ref()) {
                i += 1;
            }
        } else if !s.starts_with('-') {
            path.push((i, s.to_string()));
            if path.len() == 2 || !NESTED.contains(&path[0].1.as_str()) {
                break;
            }
        }
        i += 1;
    }
    path
}

fn flags(table: &Table) -> Result<Vec<OsString>> {
    let mut out = Vec::new();
    for (k, v) in table {
        let flag = format!("--{}", k.replace('_', "-"));
        let value = match v {
            Value::Table(_) => continue,
            Value::Boolean(true) => {
                out.push(flag.into());
                continue;
            }
            Value::Boolean(false) => continue,
            Value::String(s) => s.clone(),
            Value::Integer(i) => i.to_string(),
            Value::Float(f) => f.to_string(),
            Value::Array(items) => items
                .iter()
                .map(|i| match i {
                    Value::String(s) => s.clone(),
                    other => other.to_string(),
                })
                .collect::<Vec<_>>()
                .join(","),
            Value::Datetime(_) => {
                return Err(Error::Format(format!("config key `{k}`: dates are not flag values")))
            }
        };
        out.push(flag.into());
        out.push(value.into());
    }
    Ok(out)
}

/// `argv` with the defaults from `--config` spliced in, or unchanged when no
/// config file is named.
pub fn expand(argv: Vec<OsString>) -> Result<Vec<OsString>> {
    let Some(path) = config_path(&argv) else {
        return Ok(argv);
    };
    let text = std::fs::read_to_string(Path::new(&path))?;
    let root: Table =
        text.parse().map_err(|e| Error::Format(format!("{}: {e}", Path::new(&path).display())))?;

    let globals: Table =
        root.iter().filter(|(k, _)| k.as_str() != "config").map(|(k, v)| (k.clone(), v.clone())).collect();
    let path_names = subcommand_path(&argv);
    let mut section = Some(&root);
    for (_, name) in &path_names {
        section = section.and_then(|t| t.get(name)).and_then(Value::as_table);
    }
    let local = match (path_names.last(), section) {
        (Some(_), Some(t)) => flags(t)?,
        _ => Vec::new(),
    };
    let insert_at = path_names.last().map_or(argv.len(), |(i, _)| i + 1);

    let mut out = Vec::with_capacity(argv.len() + 8);
    out.push(argv[0].clone());
    out.extend(flags(&globals)?);
    out.extend(argv[1..insert_at].iter().cloned());
    out.extend(local);
    out.extend(argv[insert_at..].iter().cloned());
    Ok(out)
}
