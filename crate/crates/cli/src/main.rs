//! `eisdim`: SU(N) irrep dimensions via Eisenstein integers, Weyl branching and
//! the Weyl product formula.
//!
//! Exit status: 0 on success, 1 when two routes disagree, 2 on usage errors.

mod commands;
mod output;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use eisdim::DEFAULT_TERM_CAP;

use commands::{CmdError, CmdResult, Route, Status};
use output::OutputFormat;

#[derive(Parser)]
#[command(
    name = "eisdim",
    version,
    about = "Exact SU(N) irrep dimensions through the Eisenstein lattice"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,

    /// Write to this file instead of stdout
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct LabelArgs {
    /// N of SU(N)
    #[arg(long)]
    group: usize,

    /// Comma-separated labels P1,...,P(N-1), each at least 1
    #[arg(
        long,
        value_delimiter = ',',
        allow_negative_numbers = true,
        required = true
    )]
    labels: Vec<i64>,

    /// Read --labels as Dynkin labels (each at least 0)
    #[arg(long)]
    dynkin: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Dimension of one irrep by one or all routes
    Dim {
        #[command(flatten)]
        label: LabelArgs,
        #[arg(long, value_enum, default_value_t = Route::All)]
        route: Route,
        #[arg(long, default_value_t = DEFAULT_TERM_CAP)]
        term_cap: u64,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// One SU(N) -> SU(N-1) branching step
    Branch {
        #[command(flatten)]
        label: LabelArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// SU(3) content of an SU(N) irrep with its Eisenstein-route total
    Su3Content {
        #[command(flatten)]
        label: LabelArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Cross-check all routes on every label with 1 <= Pi <= max-label
    Verify {
        #[arg(long)]
        group: usize,
        #[arg(long)]
        max_label: u32,
        #[arg(long, default_value_t = DEFAULT_TERM_CAP)]
        term_cap: u64,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Lattice numbers N(a,b) for |a|,|b| <= radius with the six-neighbour check
    Lattice {
        #[arg(long)]
        radius: u32,
        #[command(flatten)]
        out: OutputArgs,
    },
}

fn run(command: Command) -> CmdResult {
    let out_args = match &command {
        Command::Dim { out, .. }
        | Command::Branch { out, .. }
        | Command::Su3Content { out, .. }
        | Command::Verify { out, .. }
        | Command::Lattice { out, .. } => out,
    };
    let format = out_args.format;
    let mut sink = output::open_sink(out_args.output.as_deref())?;

    let status = match &command {
        Command::Dim {
            label,
            route,
            term_cap,
            ..
        } => {
            let l = commands::parse_label(label.group, &label.labels, label.dynkin)?;
            commands::cmd_dim(&mut *sink, &l, *route, *term_cap, format)
        }
        Command::Branch { label, .. } => {
            let l = commands::parse_label(label.group, &label.labels, label.dynkin)?;
            commands::cmd_branch(&mut *sink, &l, format)
        }
        Command::Su3Content { label, .. } => {
            let l = commands::parse_label(label.group, &label.labels, label.dynkin)?;
            commands::cmd_su3_content(&mut *sink, &l, format)
        }
        Command::Verify {
            group,
            max_label,
            term_cap,
            ..
        } => commands::cmd_verify(&mut *sink, *group, *max_label, *term_cap, format),
        Command::Lattice { radius, .. } => {
            commands::cmd_lattice(&mut *sink, i64::from(*radius), format)
        }
    }?;
    sink.flush()?;
    Ok(status)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(Status::Ok) => ExitCode::SUCCESS,
        Ok(Status::Disagreement) => ExitCode::from(1),
        Err(CmdError::Usage(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(CmdError::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
