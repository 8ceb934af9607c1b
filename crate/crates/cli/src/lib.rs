//! Commands behind the `spacking` binary. Each command returns its output
//! as a string so the binary, the tests and other callers share one code
//! path.

use std::fmt;
use std::path::Path;

use anyhow::Context;
use serde::Serialize;
use spacking_core::{
    certify_family, chromatic, cross_validate, CertificateReport, GraphKind, GraphSpec,
    PackingSequence, PatternSpec, SequenceFamily,
};

pub mod table;
pub mod verify;

pub use table::{build_table, TableArtifact};
pub use verify::{run_verify, VerifyReport, THEOREM_IDS};

/// Malformed input; the binary maps it to exit status 2.
#[derive(Debug)]
pub struct UsageError(pub String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

pub fn usage(msg: impl Into<String>) -> anyhow::Error {
    UsageError(msg.into()).into()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Csv,
    Json,
}

/// Outcome of a checking command.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Verified,
    Discrepancy,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Verified => 0,
            Status::Discrepancy => 1,
        }
    }
}

pub fn parse_seq(s: &str) -> anyhow::Result<PackingSequence> {
    s.parse()
        .map_err(|e| usage(format!("bad sequence {s:?}: {e}")))
}

pub fn parse_family(s: &str) -> anyhow::Result<SequenceFamily> {
    s.parse()
        .map_err(|e| usage(format!("bad family {s:?}: {e}")))
}

pub fn parse_pattern(s: &str) -> anyhow::Result<PatternSpec> {
    s.parse()
        .map_err(|e| usage(format!("bad pattern {s:?}: {e}")))
}

pub fn graph(kind: GraphKind, n: usize) -> anyhow::Result<GraphSpec> {
    GraphSpec::new(kind, n).map_err(|e| usage(e.to_string()))
}

#[derive(Serialize)]
struct ChromaticOutput<'a> {
    sequence: &'a PackingSequence,
    graph: GraphSpec,
    chromatic: u32,
    witness: String,
}

/// `chi_S` of one path or cycle, optionally with a witness coloring.
pub fn cmd_chromatic(seq: &PackingSequence, g: GraphSpec, witness: bool, format: Format) -> String {
    let r = chromatic(&g, seq);
    match format {
        Format::Csv if witness => format!("{}\n{}\n", r.chromatic, r.witness),
        Format::Csv => format!("{}\n", r.chromatic),
        Format::Json => {
            let out = ChromaticOutput {
                sequence: seq,
                graph: g,
                chromatic: r.chromatic,
                witness: r.witness.to_string(),
            };
            to_json(&out)
        }
    }
}

/// Certifies a pattern against one sequence or every representative of a
/// family.
pub fn cmd_certify(
    pattern: &PatternSpec,
    seqs: &[PackingSequence],
    format: Format,
) -> anyhow::Result<(String, Status)> {
    let mut reports = Vec::new();
    for s in seqs {
        let r = certify_family(pattern, s).map_err(|e| usage(e.to_string()))?;
        reports.push((s.clone(), r));
    }
    let status = if reports.iter().all(|(_, r)| r.is_proved()) {
        Status::Verified
    } else {
        Status::Discrepancy
    };
    let out = match format {
        Format::Csv => reports.iter().map(|(s, r)| format!("{s}: {r}\n")).collect(),
        Format::Json => {
            #[derive(Serialize)]
            struct Entry<'a> {
                sequence: &'a PackingSequence,
                pattern: &'a PatternSpec,
                report: &'a CertificateReport,
            }
            let entries: Vec<Entry> = reports
                .iter()
                .map(|(s, r)| Entry {
                    sequence: s,
                    pattern,
                    report: r,
                })
                .collect();
            to_json(&entries)
        }
    };
    Ok((out, status))
}

/// Solver verdicts against the stated characterization of a family.
pub fn cmd_cross_validate(fam: &SequenceFamily, n_max: usize) -> anyhow::Result<(String, Status)> {
    let report = cross_validate(fam, n_max).map_err(|e| usage(e.to_string()))?;
    let status = if report.is_clean() {
        Status::Verified
    } else {
        Status::Discrepancy
    };
    Ok((to_json(&report), status))
}

pub fn to_json<T: Serialize + ?Sized>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

/// Writes to `out`, or stdout when absent.
pub fn emit(out: Option<&Path>, text: &str) -> anyhow::Result<()> {
    match out {
        Some(p) => std::fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}
