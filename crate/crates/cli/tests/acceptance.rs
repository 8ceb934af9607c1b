//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.

use std::collections::{BTreeMap, BTreeSet};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use spacking_cli::build_table;
use spacking_core::criticality::sweep_cycles;
use spacking_core::suites::{all_nondecreasing, dominating_pairs, dyadic_class_suite};
use spacking_core::{
    brute_force_chromatic, certify_family, chromatic_profile, cross_validate, pattern_library,
    ChromaticProfile, GraphKind, GraphSpec, PackingSequence, SequenceFamily,
};

type Outcome = Result<String, String>;
type Clause = Box<dyn Fn(usize) -> bool>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    ensure(start.elapsed() < limit, || {
        format!("took {:?}, limit {limit:?}", start.elapsed())
    })
}

fn bits(n: usize) -> u32 {
    usize::BITS - n.leading_zeros()
}

fn family(s: &str) -> SequenceFamily {
    s.parse().unwrap()
}

fn table(id: u32, golden: &str) -> Result<(), String> {
    let t = build_table(id).map_err(|e| e.to_string())?;
    let csv = t.to_csv();
    let expected_rows = golden.lines().count() - 1;
    ensure(t.rows.len() == expected_rows, || {
        format!("{} rows, expected {expected_rows}", t.rows.len())
    })?;
    for (got, want) in csv.lines().zip(golden.lines()) {
        ensure(got == want, || format!("row {got:?} differs from {want:?}"))?;
    }
    ensure(csv == golden, || "csv differs from golden file".into())
}

fn c1() -> Outcome {
    let start = Instant::now();
    table(1, include_str!("golden/table1.csv"))?;
    within(start, Duration::from_secs(60))?;
    Ok("20 rows x 5 columns".into())
}

fn c2() -> Outcome {
    let start = Instant::now();
    table(2, include_str!("golden/table2.csv"))?;
    let t = build_table(2).map_err(|e| e.to_string())?;
    let at = |n: usize| t.rows.iter().find(|r| r.n == n).unwrap().cycles[2].chromatic;
    ensure(at(11) == 6 && at(7) == 5, || {
        "C_11 / C_7 values for 1,3,5,5".into()
    })?;
    within(start, Duration::from_secs(60))?;
    Ok("16 rows x 4 columns".into())
}

fn c3() -> Outcome {
    let start = Instant::now();
    let suite = dyadic_class_suite();
    ensure(suite.len() >= 40, || {
        format!("suite has {} sequences", suite.len())
    })?;
    ensure(
        suite.iter().all(|s| s.entries().iter().all(|&e| e <= 31)),
        || "entry above 31".into(),
    )?;
    let classes: BTreeSet<u32> = suite.iter().map(|s| s.classify().unwrap()).collect();
    ensure(classes == (2..=6).collect(), || {
        format!("classes covered: {classes:?}")
    })?;
    let bad: Vec<String> = suite
        .par_iter()
        .flat_map_iter(|s| {
            let k = s.classify().unwrap();
            let p = chromatic_profile(GraphKind::Path, s, 64);
            (1..=64)
                .filter(move |&n| p.get(n) != Some(k.min(bits(n))))
                .map(move |n| format!("{s} P_{n}"))
                .collect::<Vec<_>>()
        })
        .collect();
    ensure(bad.is_empty(), || format!("mismatches: {bad:?}"))?;
    within(start, Duration::from_secs(300))?;
    Ok(format!("{} sequences, n <= 64", suite.len()))
}

/// Cross-validation plus the literal critical set for every representative.
fn critical_sets(cases: &[(&str, &dyn Fn(usize) -> bool)], n_max: usize) -> Result<usize, String> {
    let mut reps = 0;
    for (fam, critical) in cases {
        let f = family(fam);
        let report = cross_validate(&f, n_max).map_err(|e| e.to_string())?;
        ensure(report.is_clean(), || {
            format!("{fam}: {:?}", report.discrepancies)
        })?;
        for s in f.enumerate() {
            reps += 1;
            let got: BTreeSet<usize> = sweep_cycles(&s, n_max)
                .iter()
                .filter(|v| v.is_critical)
                .map(|v| v.graph.order())
                .collect();
            let want: BTreeSet<usize> = (3..=n_max).filter(|&n| critical(n)).collect();
            ensure(got == want, || {
                format!("{s}: critical {got:?}, expected {want:?}")
            })?;
        }
    }
    Ok(reps)
}

fn c4() -> Outcome {
    let a = [3, 5, 6, 7, 9];
    let b = [3, 5, 6, 7, 9, 10, 11, 17];
    let c = [
        3, 5, 6, 7, 9, 10, 11, 12, 13, 17, 18, 19, 20, 25, 26, 27, 33, 34, 41,
    ];
    let reps = critical_sets(
        &[
            ("1,2,4,4", &|n| a.contains(&n)),
            ("1,2,[4-5],5", &|n| b.contains(&n)),
            ("1,2,[4-6],6", &|n| c.contains(&n)),
        ],
        48,
    )?;
    Ok(format!("{reps} representatives, n <= 48"))
}

fn c5() -> Outcome {
    let a = [3, 5, 6, 7, 9];
    let b = [3, 5, 6, 7, 9, 10, 11, 15, 17, 23];
    let reps = critical_sets(
        &[
            ("1,3,4,4", &|n| a.contains(&n)),
            ("1,3,4,5", &|n| b.contains(&n)),
            ("1,3,5,5", &|n| n % 2 == 1 || n == 6 || n == 10),
        ],
        48,
    )?;
    let s: PackingSequence = "1,3,5,5".parse().unwrap();
    let cycles = chromatic_profile(GraphKind::Cycle, &s, 47);
    let paths = chromatic_profile(GraphKind::Path, &s, 47);
    for n in (3..=47).step_by(2) {
        let (c, p) = (cycles.get(n).unwrap(), paths.get(n).unwrap());
        ensure(c > p, || {
            format!("C_{n} under 1,3,5,5 not critical: {c} vs path {p}")
        })?;
        // C_3 and C_5 have too few vertices to need five colors
        ensure(n < 7 || c >= 5, || {
            format!("C_{n} under 1,3,5,5 uses {c} colors")
        })?;
    }
    Ok(format!(
        "{reps} representatives, n <= 48, odd 7 <= n <= 47 need 5 colors"
    ))
}

fn c6() -> Outcome {
    let rule = |n: usize| !n.is_multiple_of(8) && n != 4;
    let reps = critical_sets(
        &[
            ("1,2,[4-7],7", &rule),
            ("1,3,[4-7],7", &rule),
            ("1,3,[5-6],6", &rule),
        ],
        48,
    )?;
    Ok(format!("{reps} representatives, n <= 48"))
}

fn c7() -> Outcome {
    let upto = |m: usize, extra: &'static [usize]| move |n: usize| n <= m || extra.contains(&n);
    let clauses: Vec<(&str, Clause)> = vec![
        ("1,2,4,4", Box::new(upto(9, &[]))),
        ("1,3,4,4", Box::new(upto(9, &[]))),
        ("1,2,[4-5],5", Box::new(upto(11, &[17]))),
        (
            "1,2,[4-6],6",
            Box::new(upto(13, &[17, 18, 19, 20, 25, 26, 27, 33, 34, 41])),
        ),
        ("1,3,4,5", Box::new(upto(11, &[15, 17, 23]))),
        ("1,3,5,5", Box::new(|n| n <= 10 || n % 2 == 1)),
        ("1,2,[4-7],7", Box::new(|n| !n.is_multiple_of(8) || n == 8)),
        ("1,3,[4-7],7", Box::new(|n| !n.is_multiple_of(8) || n == 8)),
        ("1,3,[5-6],6", Box::new(|n| !n.is_multiple_of(8) || n == 8)),
    ];
    let mut reps = 0;
    for (fam, vc) in &clauses {
        let f = family(fam);
        let report = cross_validate(&f, 48).map_err(|e| e.to_string())?;
        ensure(report.is_clean(), || {
            format!("{fam}: {:?}", report.discrepancies)
        })?;
        for s in f.enumerate() {
            reps += 1;
            for v in sweep_cycles(&s, 48) {
                let n = v.graph.order();
                ensure(v.is_vertex_critical == vc(n), || {
                    format!("{s} C_{n}: vertex-critical {}", v.is_vertex_critical)
                })?;
                if (fam.ends_with(",7") || *fam == "1,3,[5-6],6") && n == 8 {
                    ensure(!v.is_critical, || format!("{s}: C_8 critical"))?;
                }
            }
        }
    }
    Ok(format!("{reps} representatives, n <= 48, C_8 split holds"))
}

fn c8() -> Outcome {
    let start = Instant::now();
    let lib = pattern_library();
    let jobs: Vec<_> = lib
        .iter()
        .flat_map(|e| e.family.enumerate().into_iter().map(move |s| (e, s)))
        .collect();
    let unique: BTreeSet<String> = jobs.iter().map(|(_, s)| s.to_string()).collect();
    let profiles: BTreeMap<String, ChromaticProfile> = unique
        .into_par_iter()
        .map(|key| {
            let s: PackingSequence = key.parse().unwrap();
            (key, chromatic_profile(GraphKind::Cycle, &s, 64))
        })
        .collect();
    let counts = jobs
        .par_iter()
        .map(|(e, s)| -> Result<usize, String> {
            let r = certify_family(&e.pattern, s).map_err(|err| err.to_string())?;
            ensure(r.is_proved(), || format!("{} on {s}: {r}", e.pattern))?;
            let cycles = &profiles[&s.to_string()];
            let free = e.pattern.free_minimums().len();
            let mut instances = 0;
            for n in e.pattern.covered_orders(64) {
                let exps = exponents_for(&e.pattern, free, n)
                    .ok_or_else(|| format!("{} misses {n}", e.pattern))?;
                let c = e
                    .pattern
                    .instantiate(&exps)
                    .map_err(|err| err.to_string())?;
                let g = GraphSpec::cycle(n).unwrap();
                ensure(c.validate(&g, s).unwrap().is_ok(), || {
                    format!("{} {s} C_{n}", e.pattern)
                })?;
                ensure(c.used_colors() <= 4 && cycles.get(n).unwrap() <= 4, || {
                    format!("{s} C_{n} needs > 4")
                })?;
                instances += 1;
            }
            Ok(instances)
        })
        .collect::<Result<Vec<_>, _>>()?;
    within(start, Duration::from_secs(30))?;
    Ok(format!(
        "{} entries proved, {} instances validated",
        lib.len(),
        counts.iter().sum::<usize>()
    ))
}

/// Exponents realizing order `n`, searched directly.
fn exponents_for(p: &spacking_core::PatternSpec, free: usize, n: usize) -> Option<Vec<u32>> {
    let mins = p.free_minimums();
    let mut exps = mins.clone();
    fn go(
        p: &spacking_core::PatternSpec,
        i: usize,
        free: usize,
        n: usize,
        exps: &mut Vec<u32>,
    ) -> bool {
        if i == free {
            return p.order(exps) == n;
        }
        let base = exps[i];
        while p.order(exps) <= n {
            if go(p, i + 1, free, n, exps) {
                return true;
            }
            exps[i] += 1;
        }
        exps[i] = base;
        false
    }
    go(p, 0, free, n, &mut exps).then_some(exps)
}

fn c9() -> Outcome {
    let start = Instant::now();
    let suite: Vec<PackingSequence> = all_nondecreasing(5, 7).into_iter().step_by(2).collect();
    ensure(suite.len() >= 200, || format!("{} sequences", suite.len()))?;
    let bad: Vec<String> = suite
        .par_iter()
        .flat_map_iter(|s| {
            let mut bad = Vec::new();
            for kind in [GraphKind::Path, GraphKind::Cycle] {
                let p = chromatic_profile(kind, s, 14);
                for (n, chi) in p.iter() {
                    let g = GraphSpec::new(kind, n).unwrap();
                    let o = brute_force_chromatic(&g, s, n as u32).unwrap().chromatic;
                    if o != chi {
                        bad.push(format!("{s} {g}: automaton {chi}, oracle {o}"));
                    }
                }
            }
            bad
        })
        .collect();
    ensure(bad.is_empty(), || format!("{bad:?}"))?;
    within(start, Duration::from_secs(600))?;
    Ok(format!("{} sequences, both kinds, n <= 14", suite.len()))
}

fn c10() -> Outcome {
    let start = Instant::now();
    let halvable: Vec<PackingSequence> = all_nondecreasing(4, 15)
        .into_iter()
        .filter(|s| s.entry(1) == 1 && s.entry(2) >= 2)
        .collect();
    // chi_S(P_n) = chi_{S'}(P_{n/2}) + 1
    let bad: Vec<String> = halvable
        .par_iter()
        .flat_map_iter(|s| {
            let h = s.halve().unwrap();
            let full = chromatic_profile(GraphKind::Path, s, 64);
            let half = chromatic_profile(GraphKind::Path, &h, 32);
            (2..=64)
                .filter(|&n| full.get(n) != half.get(n / 2).map(|c| c + 1))
                .map(|n| format!("halving {s} P_{n}"))
                .collect::<Vec<_>>()
        })
        .collect();
    ensure(bad.is_empty(), || format!("{bad:?}"))?;
    // even-order plateau
    let ones: Vec<PackingSequence> = all_nondecreasing(4, 15)
        .into_iter()
        .filter(|s| s.entry(1) == 1)
        .collect();
    let bad: Vec<String> = ones
        .par_iter()
        .flat_map_iter(|s| {
            let p = chromatic_profile(GraphKind::Path, s, 65);
            (2..=64)
                .step_by(2)
                .filter(|&n| p.get(n + 1) != p.get(n))
                .map(|n| format!("plateau {s} P_{n}"))
                .collect::<Vec<_>>()
        })
        .collect();
    ensure(bad.is_empty(), || format!("{bad:?}"))?;
    // chi_S(C_2n) <= chi_{S'}(C_n) + 1
    let small: Vec<PackingSequence> = halvable
        .iter()
        .filter(|s| s.entry(4) <= 6)
        .cloned()
        .collect();
    let bad: Vec<String> = small
        .par_iter()
        .flat_map_iter(|s| {
            let full = chromatic_profile(GraphKind::Cycle, s, 64);
            let half = chromatic_profile(GraphKind::Cycle, &s.halve().unwrap(), 32);
            (3..=32)
                .filter(|&n| full.get(2 * n).unwrap() > half.get(n).unwrap() + 1)
                .map(|n| format!("doubling {s} C_{}", 2 * n))
                .collect::<Vec<_>>()
        })
        .collect();
    ensure(bad.is_empty(), || format!("{bad:?}"))?;
    // entrywise domination is monotone
    let pairs = dominating_pairs(120);
    ensure(pairs.len() >= 100, || format!("{} pairs", pairs.len()))?;
    let bad: Vec<String> = pairs
        .par_iter()
        .flat_map_iter(|(a, b)| {
            let mut bad = Vec::new();
            for kind in [GraphKind::Path, GraphKind::Cycle] {
                let pa = chromatic_profile(kind, a, 24);
                let pb = chromatic_profile(kind, b, 24);
                bad.extend(
                    pa.iter()
                        .filter(|&(n, chi)| Some(chi) > pb.get(n))
                        .map(|(n, _)| format!("{a} vs {b} n={n}")),
                );
            }
            bad
        })
        .collect();
    ensure(bad.is_empty(), || format!("{bad:?}"))?;
    Ok(format!(
        "{} halving, {} plateau, {} doubling sequences, {} dominating pairs ({:?})",
        halvable.len(),
        ones.len(),
        small.len(),
        pairs.len(),
        start.elapsed()
    ))
}

fn c11() -> Outcome {
    let suite = dyadic_class_suite();
    for s in &suite {
        let k = s.classify().unwrap();
        let p = chromatic_profile(GraphKind::Path, s, 64);
        let got: BTreeSet<usize> = (1..=64)
            .filter(|&n| n == 1 || p.get(n - 1) < p.get(n))
            .collect();
        let want: BTreeSet<usize> = (0..k).map(|j| 1usize << j).filter(|&n| n <= 64).collect();
        ensure(got == want, || format!("{s}: {got:?} vs {want:?}"))?;
    }
    Ok(format!("{} sequences, n <= 64", suite.len()))
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("table 1 reproduction", c1),
        ("table 2 reproduction", c2),
        ("dyadic-class path formula", c3),
        ("critical cycles, 1,2,4,4 / 1,2,[4-5],5 / 1,2,[4-6],6", c4),
        ("critical cycles, 1,3,4,4 / 1,3,4,5 / 1,3,5,5", c5),
        ("critical cycles, 7-tail union", c6),
        ("vertex-critical cycles, all four-color clauses", c7),
        ("pattern certificates", c8),
        ("oracle equivalence", c9),
        ("lemma suite", c10),
        ("critical paths", c11),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} [{secs:.1}s]", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why} [{secs:.1}s]", i + 1);
            }
        }
    }
    if failed > 0 {
        eprintln!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
