//! Text formats and CLI specifier parsing.
//!
//! Matrix files: a `dim <d>` header line, then `d` rows of `2d`
//! whitespace-separated reals as interleaved `(re, im)` pairs. State files:
//! a `pure <d>` header followed by one line of `2d` reals, or a `mixed <d>`
//! header followed by a matrix block. Lines starting with `#` are comments.
//!
//! State specifiers: `bloch:x,y,z`, `example1:theta`, `example2:theta,phi`,
//! `haar:dim,seed`, `file:path`. Angle-like positions accept a `pi` literal
//! (`pi`, `pi/2`, `2pi/3`, `-0.5pi`).

use std::fs;
use std::path::Path;

use qvar_core::factory::{
    example1_state, example2_state, haar_random_pure, pauli, qubit_from_bloch, spin1_ops,
    BlochVector, RngSeed,
};
use qvar_core::quantum::{validate_observable, validate_state, StateInput};
use qvar_core::{C64, ComplexMatrix, Observable, QuantumState};

use crate::{Error, Result};

/// Significant lines: comments stripped, blanks dropped.
fn significant_lines(text: &str) -> Vec<&str> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .collect()
}

fn parse_reals(line: &str, expected: usize, what: &str) -> Result<Vec<f64>> {
    let values: Vec<f64> = line
        .split_whitespace()
        .map(|tok| {
            tok.parse::<f64>()
                .map_err(|_| Error::parse(format!("bad real number `{tok}` in {what}")))
        })
        .collect::<Result<_>>()?;
    if values.len() != expected {
        return Err(Error::parse(format!(
            "{what}: expected {expected} reals, found {}",
            values.len()
        )));
    }
    Ok(values)
}

fn parse_header(line: &str, keyword: &str) -> Result<usize> {
    let mut parts = line.split_whitespace();
    let (Some(kw), Some(d), None) = (parts.next(), parts.next(), parts.next()) else {
        return Err(Error::parse(format!("expected `{keyword} <d>` header, found `{line}`")));
    };
    if kw != keyword {
        return Err(Error::parse(format!("expected `{keyword} <d>` header, found `{line}`")));
    }
    let dim: usize = d
        .parse()
        .map_err(|_| Error::parse(format!("bad dimension `{d}`")))?;
    if dim == 0 {
        return Err(Error::parse("dimension must be at least 1"));
    }
    Ok(dim)
}

fn parse_matrix_block(dim: usize, rows: &[&str]) -> Result<ComplexMatrix> {
    if rows.len() < dim {
        return Err(Error::parse(format!(
            "matrix block: expected {dim} rows, found {}",
            rows.len()
        )));
    }
    let mut entries = Vec::with_capacity(dim * dim);
    for row in rows.iter().take(dim) {
        let reals = parse_reals(row, 2 * dim, "matrix row")?;
        for pair in reals.chunks_exact(2) {
            entries.push(C64::new(pair[0], pair[1]));
        }
    }
    Ok(ComplexMatrix::from_entries(dim, entries)?)
}

/// Parses the matrix text format.
pub fn parse_matrix_text(text: &str) -> Result<ComplexMatrix> {
    let lines = significant_lines(text);
    let Some((header, rows)) = lines.split_first() else {
        return Err(Error::parse("empty matrix file"));
    };
    let dim = parse_header(header, "dim")?;
    if rows.len() != dim {
        return Err(Error::parse(format!(
            "matrix file: expected {dim} rows, found {}",
            rows.len()
        )));
    }
    parse_matrix_block(dim, rows)
}

/// Parses and validates the state text format (`pure` or `mixed`).
pub fn parse_state_text(text: &str) -> Result<QuantumState> {
    let lines = significant_lines(text);
    let Some((header, rest)) = lines.split_first() else {
        return Err(Error::parse("empty state file"));
    };
    if header.starts_with("pure") {
        let dim = parse_header(header, "pure")?;
        let Some((amps_line, tail)) = rest.split_first() else {
            return Err(Error::parse("pure state file is missing its amplitude line"));
        };
        if !tail.is_empty() {
            return Err(Error::parse("pure state file has trailing lines"));
        }
        let reals = parse_reals(amps_line, 2 * dim, "state amplitudes")?;
        let amps = reals
            .chunks_exact(2)
            .map(|p| C64::new(p[0], p[1]))
            .collect();
        Ok(validate_state(StateInput::Vector(amps))?)
    } else if header.starts_with("mixed") {
        let dim = parse_header(header, "mixed")?;
        if rest.len() != dim {
            return Err(Error::parse(format!(
                "mixed state file: expected {dim} rows, found {}",
                rest.len()
            )));
        }
        let m = parse_matrix_block(dim, rest)?;
        Ok(validate_state(StateInput::Matrix(m))?)
    } else {
        Err(Error::parse(format!(
            "state file must start with `pure <d>` or `mixed <d>`, found `{header}`"
        )))
    }
}

/// Reads and validates an observable from a matrix file.
pub fn read_observable(path: &Path) -> Result<Observable> {
    let text = fs::read_to_string(path)?;
    Ok(validate_observable(parse_matrix_text(&text)?)?)
}

/// Reads and validates a state file.
pub fn read_state(path: &Path) -> Result<QuantumState> {
    let text = fs::read_to_string(path)?;
    parse_state_text(&text)
}

/// Numeric literal with an optional `pi`: `[-]X`, `[-][C]pi[/D]`, e.g. `1.5`,
/// `pi`, `-pi/2`, `2pi/3`, `0.5pi`.
pub fn parse_angle(token: &str) -> Result<f64> {
    let token = token.trim();
    if token.is_empty() {
        return Err(Error::parse("empty numeric value"));
    }
    let (sign, body) = match token.strip_prefix('-') {
        Some(rest) => (-1.0, rest),
        None => (1.0, token),
    };
    let (numerator, denominator) = match body.split_once('/') {
        Some((n, d)) => {
            let div: f64 = d
                .parse()
                .map_err(|_| Error::parse(format!("bad divisor `{d}` in `{token}`")))?;
            if div == 0.0 {
                return Err(Error::parse(format!("division by zero in `{token}`")));
            }
            (n, div)
        }
        None => (body, 1.0),
    };
    let value = if let Some(coeff) = numerator.strip_suffix("pi") {
        let c = if coeff.is_empty() {
            1.0
        } else {
            coeff
                .parse()
                .map_err(|_| Error::parse(format!("bad coefficient `{coeff}` in `{token}`")))?
        };
        c * std::f64::consts::PI
    } else {
        numerator
            .parse()
            .map_err(|_| Error::parse(format!("bad number `{numerator}` in `{token}`")))?
    };
    Ok(sign * value / denominator)
}

fn split_args<'a>(spec: &'a str, kind: &str, count: usize) -> Result<Vec<&'a str>> {
    let parts: Vec<&str> = spec.split(',').collect();
    if parts.len() != count {
        return Err(Error::parse(format!(
            "`{kind}` takes {count} comma-separated values, found {}",
            parts.len()
        )));
    }
    Ok(parts)
}

/// Parses a CLI state specifier.
pub fn parse_state_spec(spec: &str) -> Result<QuantumState> {
    let Some((kind, args)) = spec.split_once(':') else {
        return Err(Error::parse(format!(
            "state specifier `{spec}` must look like kind:args (bloch:, example1:, example2:, haar:, file:)"
        )));
    };
    match kind {
        "bloch" => {
            let parts = split_args(args, "bloch", 3)?;
            let r = BlochVector::new(
                parse_angle(parts[0])?,
                parse_angle(parts[1])?,
                parse_angle(parts[2])?,
            );
            Ok(qubit_from_bloch(r)?)
        }
        "example1" => Ok(example1_state(parse_angle(args)?)),
        "example2" => {
            let parts = split_args(args, "example2", 2)?;
            Ok(example2_state(parse_angle(parts[0])?, parse_angle(parts[1])?))
        }
        "haar" => {
            let parts = split_args(args, "haar", 2)?;
            let dim: usize = parts[0]
                .parse()
                .map_err(|_| Error::parse(format!("bad dimension `{}`", parts[0])))?;
            let seed: u64 = parts[1]
                .parse()
                .map_err(|_| Error::parse(format!("bad seed `{}`", parts[1])))?;
            Ok(haar_random_pure(dim, RngSeed(seed))?)
        }
        "file" => read_state(Path::new(args)),
        other => Err(Error::parse(format!("unknown state specifier `{other}:`"))),
    }
}

/// Parses a CLI observable-set specifier: `pauli`, `spin1`, or
/// `file:a.mat,b.mat,...`.
pub fn parse_obs_spec(spec: &str) -> Result<Vec<Observable>> {
    match spec {
        "pauli" => Ok(pauli().to_vec()),
        "spin1" => Ok(spin1_ops().to_vec()),
        other => {
            let Some(paths) = other.strip_prefix("file:") else {
                return Err(Error::parse(format!(
                    "observables must be `pauli`, `spin1`, or `file:path[,path...]`, found `{other}`"
                )));
            };
            paths
                .split(',')
                .map(|p| read_observable(Path::new(p.trim())))
                .collect()
        }
    }
}

/// Comma-separated positive integers (for `--dims` / `--n-obs`).
pub fn parse_usize_list(arg: &str) -> Result<Vec<usize>> {
    arg.split(',')
        .map(|tok| {
            tok.trim()
                .parse::<usize>()
                .map_err(|_| Error::parse(format!("bad integer `{tok}`")))
        })
        .collect()
}
