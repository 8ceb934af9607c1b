use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use spacking_cli::{
    build_table, cmd_certify, cmd_chromatic, cmd_cross_validate, emit, graph, parse_family,
    parse_pattern, parse_seq, run_verify, usage, Format, Status, UsageError,
};
use spacking_core::GraphKind;

/// Exact S-packing colorings of paths and cycles.
#[derive(Parser)]
#[command(name = "spacking", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct GraphArg {
    /// Path on N vertices.
    #[arg(long, value_name = "N")]
    path: Option<usize>,
    /// Cycle on N vertices.
    #[arg(long, value_name = "N")]
    cycle: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Print chi_S of a path or cycle.
    Chromatic {
        /// Packing sequence, e.g. 1,2,4,4 (the last entry repeats).
        #[arg(long)]
        seq: String,
        #[command(flatten)]
        graph: GraphArg,
        /// Also print an optimal coloring.
        #[arg(long)]
        witness: bool,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Recompute one of the small-order tables (1 or 2).
    Table {
        table: u32,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run an invariant sweep and report discrepancies as JSON.
    Verify {
        /// One of 1.2, 3, 4(ii), 5, 4.1, 4.2, 4.3, 5.1, lemmas.
        #[arg(long)]
        theorem: String,
        /// Largest order swept (48 for cycle sweeps, 64 for path sweeps).
        #[arg(long)]
        n_max: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check that a periodic pattern colors every cycle it describes.
    Certify {
        /// Pattern such as "(1213124)^2(12131214)*".
        #[arg(long)]
        pattern: String,
        #[arg(long, conflicts_with = "family", required_unless_present = "family")]
        seq: Option<String>,
        /// Family such as 1,2,[4-7],7; every representative is checked.
        #[arg(long)]
        family: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Compare solver criticality verdicts with a family's characterization.
    CrossValidate {
        #[arg(long)]
        family: String,
        #[arg(long, default_value_t = 48)]
        n_max: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn run(cli: Cli) -> anyhow::Result<Status> {
    match cli.command {
        Command::Chromatic {
            seq,
            graph: g,
            witness,
            format,
        } => {
            let seq = parse_seq(&seq)?;
            let g = match (g.path, g.cycle) {
                (Some(n), _) => graph(GraphKind::Path, n)?,
                (_, Some(n)) => graph(GraphKind::Cycle, n)?,
                _ => return Err(usage("give --path N or --cycle N")),
            };
            print!("{}", cmd_chromatic(&seq, g, witness, format));
            Ok(Status::Verified)
        }
        Command::Table { table, format, out } => {
            let t = build_table(table)?;
            let text = match format {
                Format::Csv => t.to_csv(),
                Format::Json => t.to_json(),
            };
            emit(out.as_deref(), &text)?;
            Ok(Status::Verified)
        }
        Command::Verify {
            theorem,
            n_max,
            out,
        } => {
            let report = run_verify(&theorem, n_max)?;
            emit(out.as_deref(), &report.to_json())?;
            Ok(if report.ok {
                Status::Verified
            } else {
                Status::Discrepancy
            })
        }
        Command::Certify {
            pattern,
            seq,
            family,
            format,
        } => {
            let pattern = parse_pattern(&pattern)?;
            let seqs = match (seq, family) {
                (Some(s), _) => vec![parse_seq(&s)?],
                (_, Some(f)) => parse_family(&f)?.enumerate(),
                _ => return Err(usage("give --seq or --family")),
            };
            let (text, status) = cmd_certify(&pattern, &seqs, format)?;
            print!("{text}");
            Ok(status)
        }
        Command::CrossValidate { family, n_max, out } => {
            let (text, status) = cmd_cross_validate(&parse_family(&family)?, n_max)?;
            emit(out.as_deref(), &text)?;
            Ok(status)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(status) => ExitCode::from(status.exit_code() as u8),
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.downcast_ref::<UsageError>().is_some() {
                ExitCode::from(2)
            } else {
                ExitCode::from(3)
            }
        }
    }
}
