//! Exact S-packing colorings of paths and cycles.
//!
//! A packing sequence `S = (s_1, s_2, ...)` asks that two vertices sharing
//! color `i` lie at distance greater than `s_i`. This crate computes the least
//! number of colors `chi_S` for paths and cycles with two independent exact
//! solvers, evaluates the closed forms known for paths, certifies periodic
//! cycle colorings for whole arithmetic progressions of orders, and decides
//! critical and vertex-critical paths and cycles.
//!
//! ```
//! use spacking_core::{chromatic, GraphSpec, PackingSequence};
//!
//! let s: PackingSequence = "1,3,5,5".parse().unwrap();
//! let r = chromatic(&GraphSpec::cycle(11).unwrap(), &s);
//! assert_eq!(r.chromatic, 6);
//! ```

pub mod coloring;
pub mod criticality;
pub mod error;
pub mod formulas;
pub mod patterns;
pub mod seq;
pub mod solver;
pub mod suites;

pub use coloring::{
    canonical_path_coloring, validate, Coloring, GraphKind, GraphSpec, ValidationReport, Violation,
};
pub use criticality::{
    characterization_predicate, cross_validate, decide_cycle, decide_path, CoveredFamily,
    CriticalityKind, CriticalityVerdict, DiscrepancyReport,
};
pub use error::{Error, Result};
pub use formulas::{
    critical_path_set, path_chromatic_formula, vertex_critical_path_set, PathFormulaResult,
};
pub use patterns::{certify_family, pattern_library, CertificateReport, LibraryEntry, PatternSpec};
pub use seq::{FamilyEntry, PackingSequence, SequenceFamily};
pub use solver::{
    brute_force_chromatic, chromatic, chromatic_profile, chromatic_with, feasible,
    ChromaticProfile, SolveOptions, SolveResult,
};
