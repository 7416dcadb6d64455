//! The `bexp` command line: one subcommand per library operation, each
//! printing a JSON [`RunReport`].
//!
//! Exit codes: 0 when every check passes, 1 when some check fails, 2 on
//! usage, input or cap errors.

mod commands;

use std::ffi::OsString;
use std::io::Read;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::error::Error;
use crate::report::{all_pass, Check};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Parser)]
#[command(name = "bexp", version, about = "Shallow minors, layouts, non-repetitive colourings and random graph audits")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// Graph (or poset) file; `-` reads stdin.
    #[arg(long, global = true, default_value = "-")]
    pub input: String,
    /// Graph format; guessed from the input when omitted.
    #[arg(long, global = true, value_enum)]
    pub format: Option<FormatArg>,
    /// Seed for randomised subcommands.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Raise the brute-force size cap of exact searches.
    #[arg(long, global = true)]
    pub cap: Option<usize>,
    /// Per-trial CSV rows instead of JSON, where supported.
    #[arg(long, global = true)]
    pub csv: bool,
    /// JSON report even for subcommands whose default output is plain text.
    #[arg(long, global = true)]
    pub json: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Edgelist,
    Graph6,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Strict,
    Loose,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum StructureArg {
    Proper,
    Star,
    Acyclic,
    StrongStar,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Lemma {
    DegreeTail,
    Density,
    TopDensity,
    Cycles,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Exact grad at depth d, with a witness minor.
    Grad {
        #[arg(long)]
        depth: usize,
    },
    /// Exact top-grad at depth d, with a witness subdivision.
    Topgrad {
        #[arg(long)]
        depth: usize,
        #[arg(long, value_enum, default_value = "strict")]
        mode: ModeArg,
    },
    /// Grads, top-grads and the inequalities between them.
    AuditGrads {
        #[arg(long)]
        depth: usize,
    },
    /// Hadwiger number with a clique-minor model.
    Hadwiger,
    /// Validates a layout file against the graph.
    LayoutCheck {
        #[arg(long)]
        layout: PathBuf,
    },
    /// Exact queue-number with an optimal layout.
    QueueNumber,
    /// Exact stack-number with an optimal layout.
    StackNumber,
    /// Contracts parts of bounded radius in a queue layout.
    ContractQueue {
        #[arg(long)]
        layout: PathBuf,
        /// One part per line, as whitespace-separated vertex ids.
        #[arg(long)]
        parts: PathBuf,
        #[arg(long)]
        radius: usize,
    },
    /// Jump number of a poset (lines `a b` meaning a < b) and the queue layout of its Hasse diagram.
    JumpNumber,
    /// Square-free word over {a, b, c}.
    Thue {
        #[arg(long)]
        length: usize,
    },
    /// Searches a colouring for a repetitive path.
    NonrepCheck {
        #[arg(long)]
        colouring: PathBuf,
        /// Longest half-length to search; defaults to half the vertex count.
        #[arg(long)]
        max_half: Option<usize>,
        /// Also check the colouring is proper, star, acyclic or strong star.
        #[arg(long, value_enum)]
        mode: Option<StructureArg>,
    },
    /// Exact Thue chromatic number.
    PiExact,
    /// Extends a non-repetitive colouring of the graph to its t-subdivision.
    ColourSubdivision {
        /// Colouring of the input graph; an optimal one is computed when omitted.
        #[arg(long)]
        colouring: Option<PathBuf>,
        #[arg(long)]
        t: usize,
    },
    /// Non-repetitive colouring of the 1-subdivision of K_n.
    ColourKnprime {
        #[arg(long)]
        n: usize,
    },
    /// Non-repetitive colouring of the d-subdivision of K_n.
    ColourKnd {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[arg(long = "A")]
        a: Option<usize>,
        #[arg(long = "B")]
        b: Option<usize>,
    },
    /// Acyclic colouring of the graph from a non-repetitive colouring of its 1-subdivision.
    AcyclicFromSubdivision {
        /// Colouring of the 1-subdivision, in its vertex numbering.
        #[arg(long)]
        colouring: PathBuf,
    },
    /// Samples G(n, p) and prints its edge list.
    Gnp {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
    },
    /// Monte-Carlo audit of a sparse random graph lemma.
    AuditRandom {
        #[arg(long, value_enum)]
        lemma: Lemma,
        /// `key=value` pairs, comma separated or repeated (d, alpha, n, eps, r, c, t).
        #[arg(long, value_delimiter = ',')]
        params: Vec<String>,
        #[arg(long, default_value_t = 100)]
        trials: usize,
    },
    /// Re-encodes the input graph.
    Convert {
        #[arg(long, value_enum)]
        to: FormatArg,
    },
    /// Crossing counts and crossing inequalities of a drawing.
    DrawingAudit {
        #[arg(long)]
        drawing: PathBuf,
        /// Also check the k-crossings-per-edge density bound.
        #[arg(long)]
        k: Option<usize>,
    },
}

/// Everything a subcommand prints in JSON mode.
#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub subcommand: String,
    pub inputs: serde_json::Value,
    pub result: serde_json::Value,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub version: String,
}

/// What a finished invocation writes and returns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `args` (including the program name) and runs the subcommand,
/// reading `-` inputs from `stdin`.
pub fn run<I, T>(args: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    match commands::execute(&cli, stdin) {
        Ok(out) => {
            let code = if all_pass(&out.report.checks) { 0 } else { 1 };
            let stdout = match out.text {
                Some(text) if !cli.global.json => text,
                _ => {
                    let mut s = serde_json::to_string_pretty(&out.report).expect("reports serialise");
                    s.push('\n');
                    s
                }
            };
            Outcome { code, stdout, stderr: String::new() }
        }
        Err(e) => {
            let hint = match e {
                Error::CapExceeded { .. } => "\nhint: pass --cap to raise the limit; running time grows exponentially",
                _ => "",
            };
            Outcome { code: 2, stdout: String::new(), stderr: format!("error: {e}{hint}\n") }
        }
    }
}
