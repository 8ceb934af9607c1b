//! Invariant sweeps selected by result id.
//!
//! | id      | sweep                                                      |
//! |---------|------------------------------------------------------------|
//! | `1.2`   | critical cycles for the two- and three-color families       |
//! | `3`     | path formula on dyadic-class members                       |
//! | `4(ii)` | path formula on sequences dyadic up to position 7          |
//! | `5`     | critical and vertex-critical path sets                     |
//! | `4.1`   | critical cycles, `1,2,4,4`, `1,2,[4-5],5`, `1,2,[4-6],6`   |
//! | `4.2`   | critical cycles, `1,3,4,4`, `1,3,4,5`, `1,3,5,5`           |
//! | `4.3`   | critical cycles for the `7`-tail union                     |
//! | `5.1`   | vertex-critical cycles for every four-color family         |
//! | `lemmas`| halving, parity and domination identities                  |

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};
use spacking_core::criticality::sweep_cycles;
use spacking_core::suites::{
    all_nondecreasing, dominating_pairs, dyadic_class_suite, dyadic_prefix_suite,
};
use spacking_core::{
    certify_family, chromatic, chromatic_profile, chromatic_with, critical_path_set,
    cross_validate, path_chromatic_formula, pattern_library, vertex_critical_path_set,
    CriticalityKind, GraphKind, GraphSpec, PackingSequence, PathFormulaResult, SequenceFamily,
    SolveOptions,
};

use crate::usage;

pub const THEOREM_IDS: [&str; 9] = [
    "1.2", "3", "4(ii)", "5", "4.1", "4.2", "4.3", "5.1", "lemmas",
];

pub const CYCLE_N_MAX: usize = 48;
pub const PATH_N_MAX: usize = 64;

#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub cases: usize,
    pub discrepancies: Vec<Value>,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub theorem: String,
    pub n_max: usize,
    pub ok: bool,
    pub checks: Vec<CheckReport>,
}

impl VerifyReport {
    pub fn to_json(&self) -> String {
        crate::to_json(self)
    }
}

fn check(name: impl Into<String>, results: Vec<(usize, Vec<Value>)>) -> CheckReport {
    CheckReport {
        name: name.into(),
        cases: results.iter().map(|r| r.0).sum(),
        discrepancies: results.into_iter().flat_map(|r| r.1).collect(),
    }
}

fn fams(lits: &[&str]) -> Vec<SequenceFamily> {
    lits.iter()
        .map(|s| s.parse().expect("literal families parse"))
        .collect()
}

/// Default `n_max` for an id: cycle sweeps stop at 48, path sweeps at 64.
pub fn default_n_max(theorem: &str) -> usize {
    match theorem {
        "3" | "4(ii)" | "5" | "lemmas" => PATH_N_MAX,
        _ => CYCLE_N_MAX,
    }
}

pub fn run_verify(theorem: &str, n_max: Option<usize>) -> anyhow::Result<VerifyReport> {
    let n_max = n_max.unwrap_or_else(|| default_n_max(theorem));
    if n_max < 3 {
        return Err(usage("--n-max must be at least 3"));
    }
    let checks = match theorem {
        "1.2" => critical_cycles(&fams(&["1,1", "1,2,2", "1,[2-3],3"]), n_max, None),
        "3" => vec![path_formula(
            "dyadic class formula",
            dyadic_class_suite(),
            n_max,
        )],
        "4(ii)" => vec![path_formula(
            "dyadic prefix formula",
            dyadic_prefix_suite(),
            n_max,
        )],
        "5" => vec![critical_paths(n_max)],
        "4.1" => critical_cycles(
            &fams(&["1,2,4,4", "1,2,[4-5],5", "1,2,[4-6],6"]),
            n_max,
            Some(CriticalityKind::Critical),
        ),
        "4.2" => critical_cycles(
            &fams(&["1,3,4,4", "1,3,4,5", "1,3,5,5"]),
            n_max,
            Some(CriticalityKind::Critical),
        ),
        "4.3" => critical_cycles(
            &fams(&["1,2,[4-7],7", "1,3,[4-7],7", "1,3,[5-6],6"]),
            n_max,
            Some(CriticalityKind::Critical),
        ),
        "5.1" => critical_cycles(
            &fams(&[
                "1,2,4,4",
                "1,3,4,4",
                "1,2,[4-5],5",
                "1,2,[4-6],6",
                "1,3,4,5",
                "1,3,5,5",
                "1,2,[4-7],7",
                "1,3,[4-7],7",
                "1,3,[5-6],6",
            ]),
            n_max,
            Some(CriticalityKind::VertexCritical),
        ),
        "lemmas" => lemmas(n_max),
        other => {
            return Err(usage(format!(
                "unknown theorem id {other:?}; expected one of {}",
                THEOREM_IDS.join(", ")
            )))
        }
    };
    let ok = checks.iter().all(|c| c.discrepancies.is_empty());
    Ok(VerifyReport {
        theorem: theorem.to_string(),
        n_max,
        ok,
        checks,
    })
}

/// Cross-validation per family, plus certificates for the library patterns
/// of those families. `only` restricts which flag is compared.
fn critical_cycles(
    families: &[SequenceFamily],
    n_max: usize,
    only: Option<CriticalityKind>,
) -> Vec<CheckReport> {
    let mut checks: Vec<CheckReport> = families
        .par_iter()
        .map(|fam| {
            let report = cross_validate(fam, n_max).expect("verified families are covered");
            let discrepancies = report
                .discrepancies
                .iter()
                .filter(|d| only.is_none_or(|k| d.kind == k))
                .map(|d| serde_json::to_value(d).expect("discrepancies serialize"))
                .collect();
            CheckReport {
                name: format!("cross-validate {fam}"),
                cases: report.rows.len(),
                discrepancies,
            }
        })
        .collect();
    if only == Some(CriticalityKind::Critical) {
        let entries: Vec<_> = pattern_library()
            .into_iter()
            .filter(|e| families.contains(&e.family))
            .collect();
        let results = entries
            .par_iter()
            .map(|e| {
                let mut found = Vec::new();
                let mut cases = 0;
                for s in e.family.enumerate() {
                    cases += 1;
                    let report =
                        certify_family(&e.pattern, &s).expect("library patterns are well formed");
                    if !report.is_proved() {
                        found
                            .push(json!({ "pattern": e.pattern, "sequence": s, "report": report }));
                    }
                }
                (cases, found)
            })
            .collect();
        checks.push(check("pattern certificates", results));
    }
    checks
}

fn path_formula(name: &str, suite: Vec<PackingSequence>, n_max: usize) -> CheckReport {
    let results = suite
        .par_iter()
        .map(|s| {
            let profile = chromatic_profile(GraphKind::Path, s, n_max);
            let mut found = Vec::new();
            for (n, chi) in profile.iter() {
                let f = path_chromatic_formula(s, n);
                let agrees = match f {
                    PathFormulaResult::Exact { value, .. } => value == chi,
                    PathFormulaResult::AtLeast { value, .. } => value <= chi,
                    PathFormulaResult::Inapplicable => false,
                };
                if !agrees {
                    found.push(json!({ "sequence": s, "n": n, "solver": chi, "formula": f }));
                }
            }
            (n_max, found)
        })
        .collect();
    check(name, results)
}

fn critical_paths(n_max: usize) -> CheckReport {
    let mut suite = dyadic_class_suite();
    suite.extend(dyadic_prefix_suite());
    let results = suite
        .par_iter()
        .map(|s| {
            let profile = chromatic_profile(GraphKind::Path, s, n_max);
            let jumps: std::collections::BTreeSet<usize> = (1..=n_max)
                .filter(|&n| n == 1 || profile.get(n - 1) < profile.get(n))
                .collect();
            let mut found = Vec::new();
            for (kind, set) in [
                ("critical", critical_path_set(s, n_max)),
                ("vertex-critical", vertex_critical_path_set(s, n_max)),
            ] {
                match set {
                    Ok(set) if set == jumps => {}
                    other => found.push(json!({
                        "sequence": s,
                        "kind": kind,
                        "solver": jumps,
                        "formula": other.map_err(|e| e.to_string()),
                    })),
                }
            }
            (1, found)
        })
        .collect();
    check("critical path sets", results)
}

/// `(1, a, b, c)` with `2 <= a <= b <= c <= max`.
fn halvable(max: u32) -> Vec<PackingSequence> {
    all_nondecreasing(4, max)
        .into_iter()
        .filter(|s| s.entry(1) == 1 && s.entry(2) >= 2)
        .collect()
}

fn lemmas(n_max: usize) -> Vec<CheckReport> {
    let mut checks = Vec::new();

    // chi_S(P_n) = chi_{S'}(P_{n/2}) + 1 for the halved sequence S'
    let results = halvable(15)
        .par_iter()
        .map(|s| {
            let h = s.halve().expect("halvable");
            let full = chromatic_profile(GraphKind::Path, s, n_max);
            let half = chromatic_profile(GraphKind::Path, &h, n_max / 2);
            let found = (2..=n_max)
                .filter(|&n| full.get(n) != half.get(n / 2).map(|c| c + 1))
                .map(|n| json!({ "sequence": s, "n": n, "full": full.get(n), "halved": half.get(n / 2) }))
                .collect();
            (n_max - 1, found)
        })
        .collect();
    checks.push(check("halving recursion on paths", results));

    // plateau at odd orders, and invariance under bumping even entries
    let results = all_nondecreasing(4, 8)
        .into_iter()
        .filter(|s| s.entry(1) == 1)
        .collect::<Vec<_>>()
        .par_iter()
        .map(|s| {
            let full = chromatic_profile(GraphKind::Path, s, n_max + 1);
            let odd =
                chromatic_profile(GraphKind::Path, &s.normalize_odd().expect("s_1 = 1"), n_max);
            let mut found = Vec::new();
            for n in 1..=n_max {
                if n % 2 == 0 && full.get(n + 1) != full.get(n) {
                    found.push(json!({ "sequence": s, "n": n, "check": "plateau" }));
                }
                if full.get(n) != odd.get(n) {
                    found.push(json!({ "sequence": s, "n": n, "check": "odd normalization" }));
                }
            }
            (n_max, found)
        })
        .collect();
    checks.push(check("even-order plateau and odd normalization", results));

    // color 1 on every odd vertex costs nothing
    let pin_max = n_max.min(24);
    let results = all_nondecreasing(4, 7)
        .into_iter()
        .filter(|s| s.entry(1) == 1)
        .collect::<Vec<_>>()
        .par_iter()
        .map(|s| {
            let found = (1..=pin_max)
                .filter(|&n| {
                    let g = GraphSpec::path(n).expect("n >= 1");
                    let pinned = chromatic_with(
                        &g,
                        s,
                        SolveOptions {
                            pin_odd_to_first: true,
                        },
                    )
                    .expect("s_1 = 1");
                    pinned.chromatic != chromatic(&g, s).chromatic
                })
                .map(|n| json!({ "sequence": s, "n": n }))
                .collect();
            (pin_max, found)
        })
        .collect();
    checks.push(check("odd vertices pinned to color 1", results));

    // chi_S(C_2n) <= chi_S'(C_n) + 1, and criticality descends
    let half_max = (n_max / 2).min(32);
    let results = halvable(6)
        .par_iter()
        .map(|s| {
            let h = s.halve().expect("halvable");
            let full = sweep_cycles(s, 2 * half_max);
            let half = sweep_cycles(&h, half_max);
            let mut found = Vec::new();
            for n in 3..=half_max {
                let big = &full[2 * n - 3];
                let small = &half[n - 3];
                if big.evidence.chi_graph > small.evidence.chi_graph + 1 {
                    found.push(json!({ "sequence": s, "n": n, "check": "doubling bound" }));
                }
                if big.is_critical && !small.is_critical {
                    found.push(json!({ "sequence": s, "n": n, "check": "critical descent" }));
                }
            }
            (half_max.saturating_sub(2), found)
        })
        .collect();
    checks.push(check("doubling cycles", results));

    // entrywise larger separations never need fewer colors
    let dom_max = n_max.min(24);
    let results = dominating_pairs(120)
        .par_iter()
        .map(|(a, b)| {
            let mut found = Vec::new();
            for kind in [GraphKind::Path, GraphKind::Cycle] {
                let pa = chromatic_profile(kind, a, dom_max);
                let pb = chromatic_profile(kind, b, dom_max);
                for (n, chi) in pa.iter() {
                    if Some(chi) > pb.get(n) {
                        found.push(json!({ "smaller": a, "larger": b, "kind": kind, "n": n }));
                    }
                }
            }
            (1, found)
        })
        .collect();
    checks.push(check("domination monotonicity", results));

    checks
}

/// One-line summary of what an id sweeps.
pub fn describe(theorem: &str) -> Option<&'static str> {
    Some(match theorem {
        "1.2" => "critical cycles for 1,1 / 1,2,2 / 1,[2-3],3",
        "3" => "path chromatic numbers on dyadic-class sequences",
        "4(ii)" => "path chromatic numbers on dyadic-prefix sequences",
        "5" => "critical and vertex-critical paths",
        "4.1" => "critical cycles for 1,2,4,4 / 1,2,[4-5],5 / 1,2,[4-6],6",
        "4.2" => "critical cycles for 1,3,4,4 / 1,3,4,5 / 1,3,5,5",
        "4.3" => "critical cycles for the 7-tail union",
        "5.1" => "vertex-critical cycles for every four-color family",
        "lemmas" => "halving, parity, pinning and domination identities",
        _ => return None,
    })
}
