//! Closed forms for `chi_S(P_n)` and the critical paths they imply.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::seq::PackingSequence;

/// `floor(log2 n) + 1`, i.e. the bit length of `n`.
pub fn bit_length(n: usize) -> u32 {
    usize::BITS - n.leading_zeros()
}

/// Which statement about path chromatic numbers produced a value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PathClause {
    /// `S` lies in the k-th dyadic class: exact `min(k, bitlen(n))`.
    DyadicClass,
    /// Every relevant entry is dyadic: exact `bitlen(n)`.
    DyadicPrefix,
    /// Every relevant entry is at least its dyadic lower end: `>= bitlen(n)`.
    DyadicLowerEnds,
    /// The first entry below its dyadic lower end bounds from below.
    FirstShortEntry,
}

impl fmt::Display for PathClause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PathClause::DyadicClass => "dyadic class",
            PathClause::DyadicPrefix => "dyadic prefix",
            PathClause::DyadicLowerEnds => "dyadic lower ends",
            PathClause::FirstShortEntry => "first short entry",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum PathFormulaResult {
    Exact { value: u32, clause: PathClause },
    AtLeast { value: u32, clause: PathClause },
    Inapplicable,
}

impl PathFormulaResult {
    pub fn exact(&self) -> Option<u32> {
        match *self {
            PathFormulaResult::Exact { value, .. } => Some(value),
            _ => None,
        }
    }

    pub fn lower_bound(&self) -> Option<u32> {
        match *self {
            PathFormulaResult::Exact { value, .. } | PathFormulaResult::AtLeast { value, .. } => {
                Some(value)
            }
            PathFormulaResult::Inapplicable => None,
        }
    }
}

fn dyadic(s: u32, i: u32) -> bool {
    let lo = 1u64 << (i - 1);
    (lo..lo << 1).contains(&u64::from(s))
}

fn at_least_dyadic(s: u32, i: u32) -> bool {
    u64::from(s) >= 1u64 << (i - 1)
}

/// Strongest available statement about `chi_S(P_n)`. Clauses are tried from
/// strongest to weakest; sequences with `s_1 != 1` are out of reach.
pub fn path_chromatic_formula(seq: &PackingSequence, n: usize) -> PathFormulaResult {
    assert!(n >= 1, "paths have at least one vertex");
    if seq.entry(1) != 1 {
        return PathFormulaResult::Inapplicable;
    }
    let len = bit_length(n);
    if let Some(k) = seq.classify() {
        return PathFormulaResult::Exact {
            value: k.min(len),
            clause: PathClause::DyadicClass,
        };
    }
    let relevant = 2..=len;
    if relevant.clone().all(|i| dyadic(seq.entry(i as usize), i)) {
        return PathFormulaResult::Exact {
            value: len,
            clause: PathClause::DyadicPrefix,
        };
    }
    if relevant
        .clone()
        .all(|i| at_least_dyadic(seq.entry(i as usize), i))
    {
        return PathFormulaResult::AtLeast {
            value: len,
            clause: PathClause::DyadicLowerEnds,
        };
    }
    // Some entry up to `len` falls short, so the scan stops.
    let k = (2..)
        .find(|&i| !at_least_dyadic(seq.entry(i as usize), i))
        .expect("found above");
    PathFormulaResult::AtLeast {
        value: k.min(len),
        clause: PathClause::FirstShortEntry,
    }
}

/// Orders `n <= n_max` for which `P_n` is critical: `{1, 2, 4, ..., 2^(k-1)}`
/// in the k-th dyadic class, every power of two when all relevant entries
/// are dyadic.
pub fn critical_path_set(seq: &PackingSequence, n_max: usize) -> Result<BTreeSet<usize>> {
    let powers = |limit: u32| {
        (0..limit)
            .map(|j| 1usize.checked_shl(j).unwrap_or(usize::MAX))
            .take_while(|&p| p <= n_max)
            .collect::<BTreeSet<_>>()
    };
    if seq.entry(1) == 1 {
        if let Some(k) = seq.classify() {
            return Ok(powers(k));
        }
        // Only entries up to bitlen(n_max) influence chi_S(P_n) for n <= n_max.
        let len = bit_length(n_max.max(1));
        if (2..=len).all(|i| dyadic(seq.entry(i as usize), i)) {
            return Ok(powers(usize::BITS));
        }
    }
    Err(Error::CriticalPathInapplicable(seq.to_string()))
}

/// Vertex-critical paths coincide with critical paths.
pub fn vertex_critical_path_set(seq: &PackingSequence, n_max: usize) -> Result<BTreeSet<usize>> {
    critical_path_set(seq, n_max)
}
