//! The `crtangent` command line. Every subcommand is a library function
//! returning its output and exit code, so the binary is a thin shell and
//! tests can drive commands in-process.

mod commands;
mod realize;
mod report;
mod verify;

pub use realize::{realize, RealizeOptions};
pub use report::Report;
pub use verify::{verify_stats, VerifyStats};

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::algebra::{AlgebraError, ParseError};
use crate::cr::CrError;
use crate::numgeom::{NumGeomError, SurfaceKind};
use crate::transfer::TransferError;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_NUMERIC: i32 = 2;
pub const EXIT_VERIFY: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "crtangent", version, about = "Graph embeddings with prescribed complex tangents")]
pub struct Cli {
    /// Random seed for sampling and tracing.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Stable tab-separated output.
    #[arg(long, global = true)]
    pub porcelain: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args, Clone)]
pub struct TraceArgs {
    /// Continuation step size.
    #[arg(long, default_value_t = 0.01)]
    pub step: f64,
    /// Number of random seeds for curve discovery.
    #[arg(long, default_value_t = 64)]
    pub seeds: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solve the Heisenberg CR equation L(f) = g for f.
    SolveH { poly: String },
    /// Apply the tangential CR operator of a surface.
    Apply {
        poly: String,
        #[arg(long, default_value = "heisenberg")]
        surface: SurfaceKind,
    },
    /// Cleared pullback of a polynomial along the Cayley map.
    Pullback { poly: String },
    /// Move a function on the Heisenberg group to the punctured sphere.
    Transfer {
        poly: String,
        #[arg(long, default_value_t = 2)]
        r: u32,
    },
    /// Torus knot source and CR image, optionally traced.
    Torus {
        #[arg(allow_negative_numbers = true)]
        p: i64,
        #[arg(allow_negative_numbers = true)]
        q: i64,
        #[arg(long)]
        trace: bool,
        #[command(flatten)]
        tr: TraceArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Trace the curve {g = 0} on a surface.
    Trace {
        poly: String,
        #[arg(long, default_value = "sphere")]
        surface: SurfaceKind,
        #[command(flatten)]
        tr: TraceArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Linking numbers between closed components of traced curve documents.
    Link {
        #[arg(required = true, num_args = 1..=2)]
        files: Vec<PathBuf>,
        /// Write the projected curves as columnar x y z text.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Apply a rigid motion of the Heisenberg group to a knot polynomial.
    Move {
        poly: String,
        /// Rotation axis: x, y or u.
        #[arg(long, requires_all = ["cos", "sin"])]
        axis: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        cos: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        sin: Option<String>,
        /// Translation of z, a Gaussian rational such as "1/2 - 3i".
        #[arg(long, allow_hyphen_values = true)]
        shift_z: Option<String>,
        /// Translation of u = Re w.
        #[arg(long, allow_hyphen_values = true)]
        shift_u: Option<String>,
    },
    /// Compare tangency defects with the zero set of L(f).
    Verify {
        poly: String,
        #[arg(long, default_value = "sphere")]
        surface: SurfaceKind,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
    },
    /// End-to-end realization of {g = 0} on the Heisenberg group as the
    /// complex tangents of a graph over the sphere.
    Realize {
        poly: String,
        #[arg(long, default_value_t = 2)]
        r: u32,
        #[command(flatten)]
        tr: TraceArgs,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Result of one command invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self { stdout, stderr: String::new(), code: EXIT_OK }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CmdError {
    pub code: i32,
    pub message: String,
}

impl CmdError {
    pub fn input(message: impl Into<String>) -> Self {
        Self { code: EXIT_INPUT, message: message.into() }
    }
}

impl From<ParseError> for CmdError {
    fn from(e: ParseError) -> Self {
        Self::input(format!("parse error: {e}"))
    }
}

impl From<AlgebraError> for CmdError {
    fn from(e: AlgebraError) -> Self {
        Self::input(e.to_string())
    }
}

impl From<CrError> for CmdError {
    fn from(e: CrError) -> Self {
        Self::input(e.to_string())
    }
}

impl From<TransferError> for CmdError {
    fn from(e: TransferError) -> Self {
        let code = if matches!(e, TransferError::PoleHit(_)) { EXIT_NUMERIC } else { EXIT_INPUT };
        Self { code, message: e.to_string() }
    }
}

impl From<NumGeomError> for CmdError {
    fn from(e: NumGeomError) -> Self {
        let code = match e {
            NumGeomError::Document(_) | NumGeomError::OffSurface { .. } | NumGeomError::OpenCurve => EXIT_INPUT,
            _ => EXIT_NUMERIC,
        };
        Self { code, message: e.to_string() }
    }
}

impl From<std::io::Error> for CmdError {
    fn from(e: std::io::Error) -> Self {
        Self::input(format!("i/o error: {e}"))
    }
}

/// Reads `@path` arguments from disk; other arguments are returned as is.
pub fn read_input(arg: &str) -> Result<String, CmdError> {
    match arg.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path)
            .map(|s| s.trim().to_string())
            .map_err(|e| CmdError::input(format!("cannot read {path}: {e}"))),
        None => Ok(arg.to_string()),
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                Outcome { stdout: String::new(), stderr: rendered, code: EXIT_INPUT }
            } else {
                Outcome::ok(rendered)
            };
        }
    };
    execute(&cli)
}

pub fn execute(cli: &Cli) -> Outcome {
    match commands::dispatch(cli) {
        Ok(o) => o,
        Err(e) => Outcome { stdout: String::new(), stderr: format!("error: {}\n", e.message), code: e.code },
    }
}
