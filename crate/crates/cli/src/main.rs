//! `zkit`: JSON front end to zkit-core.
//!
//! Inputs are read from `--in FILE` (or standard input), results go to
//! standard output (or `--out FILE`). Exit status is 0 on success, 1 on a
//! domain error and 2 on malformed input.

mod commands;
mod demo;

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::de::DeserializeOwned;
use serde_json::{json, Value};
use zkit_core::ZkitError;

pub const SCHEMA: &str = "zkit/1";

#[derive(Parser, Debug)]
#[command(
    name = "zkit",
    version,
    about = "Exact computations in the Zeeman topology"
)]
pub struct Cli {
    /// Number of space dimensions.
    #[arg(long, global = true, default_value_t = 1)]
    pub k: usize,
    /// Seed for randomized subcommands (SplitMix64).
    #[arg(long, global = true, env = "ZKIT_SEED", default_value_t = 0)]
    pub seed: u64,
    /// Sample count for scans and random probes.
    #[arg(long, global = true, default_value_t = 256)]
    pub samples: u32,
    /// Tolerance for floating-point audits.
    #[arg(long, global = true, default_value_t = 1e-12)]
    pub tol: f64,
    /// Input JSON file; standard input when absent.
    #[arg(long = "in", global = true)]
    pub input: Option<PathBuf>,
    /// Output file; standard output when absent.
    #[arg(long = "out", global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Causal class of a vector.
    ClassifyVector {
        /// Vector as a JSON array of rationals, e.g. "[1/1,1/1]".
        #[arg(long)]
        v: Option<String>,
    },
    /// Parameters where a line meets a light cone.
    ConeIntersect,
    /// Check that a region has open traces on given or sampled axes.
    RegionCheck,
    /// Build a certified Zeeman ball.
    ZeemanBall,
    /// A rational point of a certified open set near a given point.
    Rationalize,
    /// Classify a sequence family and separate its limit if Zeno.
    ZenoClassify,
    /// A Zeno family converging to a point inside a certified open set.
    ZenoInside,
    /// Refute a countable neighborhood base at a point.
    RefuteFirstCountable,
    /// Decide Zeeman compactness by both routes and cross-check.
    CompactDecide,
    /// Verify a certified open set or an axis-cover certificate.
    CertificateVerify,
    /// Evaluate the function f at a point.
    FEval,
    /// CSV scan of f along sampled axes through p.
    FScan {
        /// Number of axes to sample.
        #[arg(long, default_value_t = 8)]
        axes: usize,
    },
    /// Winding number of a loop or parallelogram loop around a point.
    Winding,
    /// Winding certificate separating two parallelogram loops.
    Distinguish,
    /// A Z-continuous polygonal path between two points.
    ZPath,
    /// Named end-to-end reproductions; all of them when no name is given.
    Demo {
        #[arg(long)]
        name: Option<String>,
        /// List the available demos.
        #[arg(long)]
        list: bool,
    },
}

#[derive(Debug)]
pub enum CliError {
    Malformed(String),
    Domain(ZkitError),
}

impl From<ZkitError> for CliError {
    fn from(e: ZkitError) -> Self {
        CliError::Domain(e)
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Malformed(e.to_string())
    }
}

pub type CliResult<T> = Result<T, CliError>;

pub enum Output {
    Json(Value),
    Text(String),
}

impl Cli {
    pub fn read_input<T: DeserializeOwned>(&self) -> CliResult<T> {
        let text = match &self.input {
            Some(path) => fs::read_to_string(path)
                .map_err(|e| CliError::Malformed(format!("{}: {e}", path.display())))?,
            None => {
                let mut s = String::new();
                io::stdin()
                    .read_to_string(&mut s)
                    .map_err(|e| CliError::Malformed(e.to_string()))?;
                s
            }
        };
        Ok(serde_json::from_str(&text)?)
    }

    /// Every point handled must have `k + 1` coordinates.
    pub fn check_dim(&self, dim: usize) -> CliResult<()> {
        if dim != self.k + 1 {
            return Err(ZkitError::DimensionMismatch {
                expected: self.k + 1,
                found: dim,
            }
            .into());
        }
        Ok(())
    }
}

fn stamp(mut v: Value) -> Value {
    if let Value::Object(map) = &mut v {
        map.insert("schema".to_string(), json!(SCHEMA));
    }
    v
}

fn error_value(e: &CliError) -> (Value, u8) {
    match e {
        CliError::Malformed(detail) => (json!({"error": "MalformedInput", "detail": detail}), 2),
        CliError::Domain(err) => (json!({"error": err.kind(), "detail": err.to_string()}), 1),
    }
}

fn emit(cli: &Cli, text: &str) -> io::Result<()> {
    match &cli.output {
        Some(path) => fs::write(path, text),
        None => io::stdout().write_all(text.as_bytes()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (text, code) = match commands::run(&cli) {
        Ok(Output::Json(v)) => (pretty(&stamp(v)), 0),
        Ok(Output::Text(t)) => (t, 0),
        Err(e) => {
            let (v, code) = error_value(&e);
            (pretty(&stamp(v)), code)
        }
    };
    if let Err(e) = emit(&cli, &text) {
        eprintln!("zkit: cannot write output: {e}");
        return ExitCode::from(2);
    }
    ExitCode::from(code)
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}
