//! `banana`: vertices, identity checks, Theorem A/B series, GV tables and theta coefficients.

mod commands;

use std::process::ExitCode;

use banana_core::identities::Identity;
use banana_core::partitions::Partition;
use banana_core::vertex::VertexKey;
use clap::error::ErrorKind;
use clap::{Args, CommandFactory, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "banana", version, about = "Exact DT/GV computations for the banana threefold")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Global {
    /// q-exponent window `lo hi` (q = p^{1/2}); default -8 16.
    #[arg(long, global = true, num_args = 2, value_names = ["LO", "HI"], allow_negative_numbers = true)]
    pub window: Option<Vec<i64>>,
    /// Degree caps `b,d1,d2,d3`, or `b,d3`; default 2,1,2,4.
    #[arg(long, global = true, value_parser = parse_caps)]
    pub caps: Option<[u32; 4]>,
    /// Exact JSON output instead of text.
    #[arg(long, global = true)]
    pub json: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Route {
    Stratified,
    Closed,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// The renormalized vertex V_{lambda mu nu}.
    Vertex {
        /// Legs as JSON, e.g. '[[1],[1],[]]'.
        #[arg(long, value_parser = parse_key)]
        legs: VertexKey,
        /// Cross-check against the box count.
        #[arg(long)]
        oracle: bool,
    },
    /// Check one identity.
    Identity {
        #[arg(long, value_parser = parse_identity, required_unless_present = "list")]
        name: Option<Identity>,
        /// Print the known identity names.
        #[arg(long, conflicts_with = "name")]
        list: bool,
        /// Restrict to one partition, e.g. '[2,1]'.
        #[arg(long, value_parser = parse_partition)]
        lambda: Option<Partition>,
        /// Restrict the vertex oracle to one key.
        #[arg(long, value_parser = parse_key)]
        legs: Option<VertexKey>,
        /// Largest Q-degree compared.
        #[arg(long, default_value_t = 4)]
        degree: u32,
    },
    /// Partition functions of the classes sigma + (0, d2, d3).
    TheoremA {
        #[arg(long, value_enum, default_value_t = Route::Stratified)]
        route: Route,
        /// Compare the two routes.
        #[arg(long)]
        oracle: bool,
    },
    /// Partition functions of the classes b sigma + (i, j, d3).
    TheoremB {
        /// Class `(i, j)`; defaults to the class in `--strata`, else 1,1.
        #[arg(long, value_parser = parse_pair)]
        class: Option<(u32, u32)>,
        /// Strata table file (TOML) replacing the built-in one.
        #[arg(long)]
        strata: Option<std::path::PathBuf>,
        #[arg(long, value_enum, default_value_t = Route::Stratified)]
        route: Route,
        /// Compare the two routes.
        #[arg(long)]
        oracle: bool,
        /// Echo the validated strata table.
        #[arg(long)]
        list: bool,
    },
    /// Gopakumar-Vafa invariants of the section classes.
    Gv {
        /// Only classes with `(d1, d2)` equal to this pair.
        #[arg(long, value_parser = parse_pair)]
        class: Option<(u32, u32)>,
        #[arg(long, value_enum, default_value_t = Route::Stratified)]
        route: Route,
    },
    /// Coefficients c(a, k) of the theta quotient, with k in the window.
    Theta {
        #[arg(long, default_value_t = 3, allow_negative_numbers = true)]
        a_max: i64,
    },
}

fn parse_key(s: &str) -> Result<VertexKey, String> {
    VertexKey::from_json(s).map_err(|e| e.to_string())
}

fn parse_identity(s: &str) -> Result<Identity, String> {
    s.parse().map_err(|e: banana_core::Error| e.to_string())
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    Partition::from_json(s).map_err(|e| e.to_string())
}

fn parse_list(s: &str) -> Result<Vec<u32>, String> {
    s.split(',').map(|t| t.trim().parse::<u32>().map_err(|e| format!("{t:?}: {e}"))).collect()
}

fn parse_pair(s: &str) -> Result<(u32, u32), String> {
    match parse_list(s)?.as_slice() {
        [i, j] => Ok((*i, *j)),
        _ => Err("expected two comma-separated values".into()),
    }
}

fn parse_caps(s: &str) -> Result<[u32; 4], String> {
    match parse_list(s)?.as_slice() {
        [b, d1, d2, d3] => Ok([*b, *d1, *d2, *d3]),
        [b, d3] => Ok([*b, 1, 1, *d3]),
        _ => Err("expected b,d1,d2,d3 or b,d3".into()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(w) = &cli.global.window {
        if w[0] > w[1] {
            Cli::command().error(ErrorKind::ValueValidation, format!("empty window [{}, {}]", w[0], w[1])).exit();
        }
    }
    let json = cli.global.json;
    match commands::run(&cli) {
        Ok(out) => {
            print!("{}", if json { out.json_line() } else { out.text });
            if out.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            let record = serde_json::json!({ "error": e.kind(), "message": e.to_string() });
            println!("{record}");
            ExitCode::from(1)
        }
    }
}
