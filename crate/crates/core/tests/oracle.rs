use spacking_core::suites::all_nondecreasing;
use spacking_core::{brute_force_chromatic, chromatic_profile, GraphKind, GraphSpec};

#[test]
fn automaton_agrees_with_backtracking() {
    let suite = all_nondecreasing(5, 7);
    // every fifth sequence keeps the run short while covering both ends
    for s in suite.iter().step_by(5) {
        for kind in [GraphKind::Path, GraphKind::Cycle] {
            let profile = chromatic_profile(kind, s, 14);
            for (n, chi) in profile.iter() {
                let g = GraphSpec::new(kind, n).unwrap();
                let oracle = brute_force_chromatic(&g, s, n as u32).unwrap();
                assert_eq!(chi, oracle.chromatic, "{s} {g}");
                assert!(oracle.witness.validate(&g, s).unwrap().is_ok());
            }
        }
    }
}
