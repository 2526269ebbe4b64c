//! Command-line front end for the dg-nerve crates.
//!
//! Input is a JSON workspace document (see [`doc`]); every command returns a
//! [`Report`] whose rendering depends only on the document, the seed and the
//! flags, so identical runs print identical bytes.

pub mod commands;
pub mod doc;
pub mod report;
pub mod selftest;
pub mod workspace;

use dgn_core::Field;
use dgn_doldkan::SignMode;

pub use commands::{cmd_compare, cmd_cube, cmd_dk_roundtrip, cmd_fill_horn, cmd_stable, cmd_validate};
pub use doc::{parse_document, WorkspaceDoc};
pub use report::{Check, Format, Report, Status};
pub use selftest::{cmd_self_test, Operation, OPERATIONS};
pub use workspace::{Category, Settings, Workspace};

/// Input errors. All of them exit with status 2.
#[derive(Debug, thiserror::Error, PartialEq)]
pub enum CliError {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("schema error at {path}: {message}")]
    Schema { path: String, message: String },
    #[error("unknown {kind} id {id:?}")]
    UnknownId { kind: &'static str, id: String },
    #[error("face {p} of a {n}-simplex is not an inner face")]
    NotInner { n: usize, p: usize },
    #[error("level cap {cap} exceeded: {what}")]
    Cap { cap: usize, what: String },
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("{0}")]
    Input(String),
}

impl CliError {
    pub fn schema(path: impl Into<String>, message: impl Into<String>) -> Self {
        CliError::Schema { path: path.into(), message: message.into() }
    }
}

pub const EXIT_PASS: i32 = 0;
pub const EXIT_DEFECTS: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

/// Parses `rational` or `fp:P` with `P` prime.
pub fn parse_field(s: &str) -> Result<Field, String> {
    if s == "rational" {
        return Ok(Field::Rational);
    }
    let Some(p) = s.strip_prefix("fp:") else {
        return Err(format!("unknown field {s:?}; use rational or fp:P"));
    };
    let p: u64 = p.parse().map_err(|_| format!("modulus {p:?} is not an integer"))?;
    if !Field::is_prime(p) {
        return Err(format!("modulus {p} is not prime"));
    }
    Ok(Field::Prime(p))
}

pub fn field_name(f: Field) -> String {
    match f {
        Field::Rational => "rational".into(),
        Field::Prime(p) => format!("fp:{p}"),
    }
}

pub fn sign_mode_name(m: SignMode) -> &'static str {
    match m {
        SignMode::Paper => "paper",
        SignMode::Classical => "classical",
    }
}
