use std::collections::BTreeSet;

use spacking_core::patterns::minimal_exponent;
use spacking_core::{
    certify_family, chromatic_profile, pattern_library, GraphKind, GraphSpec, PatternSpec,
};

fn sums(a: usize, b: usize, n_max: usize) -> BTreeSet<usize> {
    let mut out = BTreeSet::new();
    for i in 0..=n_max / a {
        for j in 0..=n_max / b {
            let n = a * i + b * j;
            if n >= 1 && n <= n_max {
                out.insert(n);
            }
        }
    }
    out
}

#[test]
fn seven_and_eight_miss_exactly_the_exceptions() {
    let s = sums(7, 8, 128);
    let missing: Vec<usize> = (8..=128).filter(|n| !s.contains(n)).collect();
    assert_eq!(
        missing,
        [9, 10, 11, 12, 13, 17, 18, 19, 20, 25, 26, 27, 33, 34, 41]
    );
}

#[test]
fn five_and_eight_miss_exactly_the_exceptions() {
    let s = sums(5, 8, 128);
    let missing: Vec<usize> = (8..=128).filter(|n| !s.contains(n)).collect();
    assert_eq!(missing, [9, 11, 12, 14, 17, 19, 22, 27]);
}

#[test]
fn pattern_orders_match_arithmetic() {
    let p: PatternSpec = "(1213124)*(12131214)*".parse().unwrap();
    let expected: BTreeSet<usize> = sums(7, 8, 128).into_iter().filter(|&n| n >= 3).collect();
    assert_eq!(p.covered_orders(128), expected);
}

#[test]
fn library_is_proved_and_instances_are_four_colorings() {
    for entry in pattern_library() {
        for s in entry.family.enumerate() {
            let report = certify_family(&entry.pattern, &s).unwrap();
            assert!(report.is_proved(), "{} on {s}: {report}", entry.pattern);
            let cycles = chromatic_profile(GraphKind::Cycle, &s, 64);
            for n in entry.pattern.covered_orders(64) {
                assert!(cycles.get(n).unwrap() <= 4, "{s} C_{n}");
            }
        }
    }
}

#[test]
fn every_library_instance_validates() {
    for entry in pattern_library() {
        let free = entry.pattern.free_minimums().len();
        for s in entry.family.enumerate() {
            let mut exps = entry.pattern.free_minimums();
            for bump in 0..4u32 {
                for e in exps.iter_mut() {
                    *e += bump.min(1);
                }
                let n = entry.pattern.order(&exps);
                if !(3..=96).contains(&n) {
                    continue;
                }
                let c = entry.pattern.instantiate(&exps).unwrap();
                let g = GraphSpec::cycle(n).unwrap();
                assert!(
                    c.validate(&g, &s).unwrap().is_ok(),
                    "{} {s} {exps:?} ({free} free)",
                    entry.pattern
                );
            }
        }
    }
}

#[test]
fn odd_constructions_need_one_copy() {
    let s = "1,3,4,5".parse().unwrap();
    for p in [
        "(1213124)(131214)*",
        "(1213124)(13121412)(131214)*",
        "(1213124)(13121412)^2(131214)*",
    ] {
        let p: PatternSpec = p.parse().unwrap();
        assert_eq!(minimal_exponent(&p, &s, 6).unwrap(), Some(1), "{p}");
    }
}
