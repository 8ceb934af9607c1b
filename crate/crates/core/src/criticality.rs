//! Critical and vertex-critical paths and cycles.
//!
//! Every proper subgraph of `P_n` or `C_n` is a disjoint union of paths, so
//! both notions reduce to comparing a handful of chromatic numbers:
//!
//! * `P_n` (`n >= 2`) is critical, and vertex-critical, iff
//!   `chi(P_{n-1}) < chi(P_n)`; `P_1` is critical by definition.
//! * `C_n` is critical iff `chi(P_n) < chi(C_n)` and vertex-critical iff
//!   `chi(P_{n-1}) < chi(C_n)`.
//!
//! [`characterization_predicate`] transcribes the known characterizations
//! for the covered families so [`cross_validate`] can compare the two.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::coloring::{GraphKind, GraphSpec};
use crate::error::{Error, Result};
use crate::seq::{PackingSequence, SequenceFamily};
use crate::solver::{chromatic, chromatic_profile, ChromaticProfile};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Evidence {
    /// `chi` of the graph itself.
    pub chi_graph: u32,
    /// `chi(P_n)` for a cycle, `chi(P_{n-1})` for a path (`None` for `P_1`).
    pub chi_edge_deleted: Option<u32>,
    /// `chi(P_{n-1})` (`None` for `P_1`).
    pub chi_vertex_deleted: Option<u32>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriticalityVerdict {
    pub graph: GraphSpec,
    pub is_critical: bool,
    pub is_vertex_critical: bool,
    pub evidence: Evidence,
}

fn path_verdict(n: usize, paths: &ChromaticProfile) -> CriticalityVerdict {
    let chi = paths.get(n).expect("profile covers n");
    let prev = if n >= 2 { paths.get(n - 1) } else { None };
    let jump = prev.is_none_or(|p| p < chi);
    CriticalityVerdict {
        graph: GraphSpec::path(n).expect("n >= 1"),
        is_critical: jump,
        is_vertex_critical: jump,
        evidence: Evidence {
            chi_graph: chi,
            chi_edge_deleted: prev,
            chi_vertex_deleted: prev,
        },
    }
}

fn cycle_verdict(
    n: usize,
    paths: &ChromaticProfile,
    cycles: &ChromaticProfile,
) -> CriticalityVerdict {
    let chi = cycles.get(n).expect("profile covers n");
    let p_n = paths.get(n).expect("profile covers n");
    let p_prev = paths.get(n - 1).expect("profile covers n - 1");
    CriticalityVerdict {
        graph: GraphSpec::cycle(n).expect("n >= 3"),
        is_critical: p_n < chi,
        is_vertex_critical: p_prev < chi,
        evidence: Evidence {
            chi_graph: chi,
            chi_edge_deleted: Some(p_n),
            chi_vertex_deleted: Some(p_prev),
        },
    }
}

pub fn decide_path(seq: &PackingSequence, n: usize) -> Result<CriticalityVerdict> {
    let g = GraphSpec::path(n)?;
    let chi = chromatic(&g, seq).chromatic;
    let prev = (n >= 2).then(|| chromatic(&GraphSpec::path(n - 1).unwrap(), seq).chromatic);
    let jump = prev.is_none_or(|p| p < chi);
    Ok(CriticalityVerdict {
        graph: g,
        is_critical: jump,
        is_vertex_critical: jump,
        evidence: Evidence {
            chi_graph: chi,
            chi_edge_deleted: prev,
            chi_vertex_deleted: prev,
        },
    })
}

pub fn decide_cycle(seq: &PackingSequence, n: usize) -> Result<CriticalityVerdict> {
    let g = GraphSpec::cycle(n)?;
    let chi = chromatic(&g, seq).chromatic;
    let p_n = chromatic(&GraphSpec::path(n).unwrap(), seq).chromatic;
    let p_prev = chromatic(&GraphSpec::path(n - 1).unwrap(), seq).chromatic;
    Ok(CriticalityVerdict {
        graph: g,
        is_critical: p_n < chi,
        is_vertex_critical: p_prev < chi,
        evidence: Evidence {
            chi_graph: chi,
            chi_edge_deleted: Some(p_n),
            chi_vertex_deleted: Some(p_prev),
        },
    })
}

/// Verdicts for `P_1..=P_{n_max}` from a single profile.
pub fn sweep_paths(seq: &PackingSequence, n_max: usize) -> Vec<CriticalityVerdict> {
    let paths = chromatic_profile(GraphKind::Path, seq, n_max);
    (1..=n_max).map(|n| path_verdict(n, &paths)).collect()
}

/// Verdicts for `C_3..=C_{n_max}` from two profiles.
pub fn sweep_cycles(seq: &PackingSequence, n_max: usize) -> Vec<CriticalityVerdict> {
    if n_max < 3 {
        return Vec::new();
    }
    let paths = chromatic_profile(GraphKind::Path, seq, n_max);
    let cycles = chromatic_profile(GraphKind::Cycle, seq, n_max);
    (3..=n_max)
        .map(|n| cycle_verdict(n, &paths, &cycles))
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CriticalityKind {
    Critical,
    VertexCritical,
}

impl fmt::Display for CriticalityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CriticalityKind::Critical => "critical",
            CriticalityKind::VertexCritical => "vertex-critical",
        })
    }
}

/// Families of packing sequences whose critical cycles are characterized.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CoveredFamily {
    /// `1,1`
    OneOne,
    /// `1,2,2`
    OneTwoTwo,
    /// `1,[2-3],3`
    OneTwoThreeThree,
    /// `1,2,4,4`
    S1244,
    /// `1,2,[4-5],5`
    S12x5,
    /// `1,2,[4-6],6`
    S12x6,
    /// `1,3,4,4`
    S1344,
    /// `1,3,4,5`
    S1345,
    /// `1,3,5,5`
    S1355,
    /// `1,2,[4-7],7`, `1,3,[4-7],7` and `1,3,[5-6],6`
    SevenUnion,
}

const S12X6_CRITICAL: [usize; 19] = [
    3, 5, 6, 7, 9, 10, 11, 12, 13, 17, 18, 19, 20, 25, 26, 27, 33, 34, 41,
];

impl CoveredFamily {
    pub const ALL: [CoveredFamily; 10] = [
        CoveredFamily::OneOne,
        CoveredFamily::OneTwoTwo,
        CoveredFamily::OneTwoThreeThree,
        CoveredFamily::S1244,
        CoveredFamily::S12x5,
        CoveredFamily::S12x6,
        CoveredFamily::S1344,
        CoveredFamily::S1345,
        CoveredFamily::S1355,
        CoveredFamily::SevenUnion,
    ];

    /// The sequence families making up this covered family.
    pub fn components(self) -> Vec<SequenceFamily> {
        let lits: &[&str] = match self {
            CoveredFamily::OneOne => &["1,1"],
            CoveredFamily::OneTwoTwo => &["1,2,2"],
            CoveredFamily::OneTwoThreeThree => &["1,[2-3],3"],
            CoveredFamily::S1244 => &["1,2,4,4"],
            CoveredFamily::S12x5 => &["1,2,[4-5],5"],
            CoveredFamily::S12x6 => &["1,2,[4-6],6"],
            CoveredFamily::S1344 => &["1,3,4,4"],
            CoveredFamily::S1345 => &["1,3,4,5"],
            CoveredFamily::S1355 => &["1,3,5,5"],
            CoveredFamily::SevenUnion => &["1,2,[4-7],7", "1,3,[4-7],7", "1,3,[5-6],6"],
        };
        lits.iter()
            .map(|s| s.parse().expect("literal families parse"))
            .collect()
    }

    /// Every canonical representative across the components.
    pub fn representatives(self) -> Vec<PackingSequence> {
        self.components()
            .iter()
            .flat_map(SequenceFamily::enumerate)
            .collect()
    }

    /// The covered family containing every member of `fam`.
    pub fn identify(fam: &SequenceFamily) -> Result<Self> {
        let members = fam.enumerate();
        Self::ALL
            .into_iter()
            .find(|cf| {
                members
                    .iter()
                    .all(|m| cf.components().iter().any(|c| c.contains(m)))
            })
            .ok_or_else(|| Error::FamilyNotCovered(fam.to_string()))
    }

    /// The characterization at `n >= 3`.
    ///
    /// Vertex-criticality for the two- and three-color families is not stated
    /// separately; it follows from the same reduction as for four colors:
    /// `C_n` is vertex-critical iff it is critical or `chi(P_{n-1}) <
    /// chi(P_n)`, and the path formula puts those jumps at `n = 2` and
    /// `n = 4` respectively.
    pub fn predicate(self, n: usize, kind: CriticalityKind) -> bool {
        use CriticalityKind::*;
        match (self, kind) {
            (CoveredFamily::OneOne, _) => n % 2 == 1,
            (CoveredFamily::OneTwoTwo, Critical) => matches!(n, 3 | 5),
            (CoveredFamily::OneTwoTwo, VertexCritical) => matches!(n, 3..=5),
            (CoveredFamily::OneTwoThreeThree, Critical) => !n.is_multiple_of(4),
            (CoveredFamily::OneTwoThreeThree, VertexCritical) => !n.is_multiple_of(4) || n == 4,
            (CoveredFamily::S1244 | CoveredFamily::S1344, Critical) => {
                matches!(n, 3 | 5 | 6 | 7 | 9)
            }
            (CoveredFamily::S1244 | CoveredFamily::S1344, VertexCritical) => n <= 9,
            (CoveredFamily::S12x5, Critical) => matches!(n, 3 | 5 | 6 | 7 | 9 | 10 | 11 | 17),
            (CoveredFamily::S12x5, VertexCritical) => n <= 11 || n == 17,
            (CoveredFamily::S12x6, Critical) => S12X6_CRITICAL.contains(&n),
            (CoveredFamily::S12x6, VertexCritical) => {
                n <= 13 || (S12X6_CRITICAL.contains(&n) && n >= 17)
            }
            (CoveredFamily::S1345, Critical) => {
                matches!(n, 3 | 5 | 6 | 7 | 9 | 10 | 11 | 15 | 17 | 23)
            }
            (CoveredFamily::S1345, VertexCritical) => n <= 11 || matches!(n, 15 | 17 | 23),
            (CoveredFamily::S1355, Critical) => matches!(n, 6 | 10) || n % 2 == 1,
            (CoveredFamily::S1355, VertexCritical) => n <= 10 || n % 2 == 1,
            (CoveredFamily::SevenUnion, Critical) => !n.is_multiple_of(8) && n != 4,
            (CoveredFamily::SevenUnion, VertexCritical) => !n.is_multiple_of(8) || n == 8,
        }
    }
}

impl fmt::Display for CoveredFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.components().iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(" | "))
    }
}

/// The stated characterization of `C_n` for a covered family.
pub fn characterization_predicate(
    fam: &SequenceFamily,
    n: usize,
    kind: CriticalityKind,
) -> Result<bool> {
    if n < 3 {
        return Err(Error::InvalidGraph(format!(
            "a cycle needs n >= 3, got {n}"
        )));
    }
    Ok(CoveredFamily::identify(fam)?.predicate(n, kind))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EvidenceRow {
    pub sequence: PackingSequence,
    pub n: usize,
    pub chi_cycle: u32,
    pub chi_path: u32,
    pub chi_path_prev: u32,
    pub critical: bool,
    pub vertex_critical: bool,
    pub predicted_critical: bool,
    pub predicted_vertex_critical: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Discrepancy {
    pub sequence: PackingSequence,
    pub n: usize,
    pub kind: CriticalityKind,
    pub decided: bool,
    pub predicted: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiscrepancyReport {
    pub family: SequenceFamily,
    pub covered: CoveredFamily,
    pub n_max: usize,
    pub rows: Vec<EvidenceRow>,
    pub discrepancies: Vec<Discrepancy>,
}

impl DiscrepancyReport {
    pub fn is_clean(&self) -> bool {
        self.discrepancies.is_empty()
    }
}

/// Solver verdicts against the characterization for every representative of
/// `fam` and every `3 <= n <= n_max`.
pub fn cross_validate(fam: &SequenceFamily, n_max: usize) -> Result<DiscrepancyReport> {
    let covered = CoveredFamily::identify(fam)?;
    let mut rows = Vec::new();
    let mut discrepancies = Vec::new();
    for seq in fam.enumerate() {
        for v in sweep_cycles(&seq, n_max) {
            let n = v.graph.order();
            let predicted_critical = covered.predicate(n, CriticalityKind::Critical);
            let predicted_vc = covered.predicate(n, CriticalityKind::VertexCritical);
            for (kind, decided, predicted) in [
                (CriticalityKind::Critical, v.is_critical, predicted_critical),
                (
                    CriticalityKind::VertexCritical,
                    v.is_vertex_critical,
                    predicted_vc,
                ),
            ] {
                if decided != predicted {
                    discrepancies.push(Discrepancy {
                        sequence: seq.clone(),
                        n,
                        kind,
                        decided,
                        predicted,
                    });
                }
            }
            rows.push(EvidenceRow {
                sequence: seq.clone(),
                n,
                chi_cycle: v.evidence.chi_graph,
                chi_path: v.evidence.chi_edge_deleted.expect("cycles have both"),
                chi_path_prev: v.evidence.chi_vertex_deleted.expect("cycles have both"),
                critical: v.is_critical,
                vertex_critical: v.is_vertex_critical,
                predicted_critical,
                predicted_vertex_critical: predicted_vc,
            });
        }
    }
    Ok(DiscrepancyReport {
        family: fam.clone(),
        covered,
        n_max,
        rows,
        discrepancies,
    })
}
