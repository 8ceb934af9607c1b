use spacking_cli::verify::default_n_max;
use spacking_cli::{run_verify, THEOREM_IDS};

#[test]
fn every_id_verifies_at_reduced_size() {
    for id in THEOREM_IDS {
        let report = run_verify(id, Some(24)).unwrap();
        assert!(report.ok, "{id}: {}", report.to_json());
        assert!(report.checks.iter().all(|c| c.cases > 0), "{id}");
    }
}

#[test]
fn defaults_follow_graph_kind() {
    assert_eq!(default_n_max("4.3"), 48);
    assert_eq!(default_n_max("3"), 64);
    assert!(run_verify("lemmas", Some(2)).is_err());
}
