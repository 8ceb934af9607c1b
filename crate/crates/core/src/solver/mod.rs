//! Exact S-packing chromatic numbers of paths and cycles.
//!
//! [`chromatic`] and [`feasible`] run the layered state machine in
//! [`automaton`]; [`brute_force_chromatic`] is an independent backtracking
//! oracle used to cross-check it.

mod automaton;
mod brute;

use serde::{Deserialize, Serialize};

use crate::coloring::{Coloring, GraphKind, GraphSpec};
use crate::error::{Error, Result};
use crate::seq::PackingSequence;

use automaton::{Automaton, Palette};

pub use brute::{
    brute_force_chromatic, brute_force_chromatic_bounded, brute_force_feasible, ORACLE_MAX_ORDER,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveResult {
    pub chromatic: u32,
    pub witness: Coloring,
}

/// Extra constraints on the colorings searched for.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SolveOptions {
    /// Only accept path colorings with color 1 on every odd vertex.
    /// Requires `s_1 = 1`.
    pub pin_odd_to_first: bool,
}

/// An S-packing `k`-coloring of `g`, if one exists.
pub fn feasible(g: &GraphSpec, seq: &PackingSequence, k: u32) -> Option<Coloring> {
    feasible_with(g, seq, k, SolveOptions::default()).expect("default options are always valid")
}

pub fn feasible_with(
    g: &GraphSpec,
    seq: &PackingSequence,
    k: u32,
    opts: SolveOptions,
) -> Result<Option<Coloring>> {
    check_options(g, seq, opts)?;
    if k == 0 {
        return Ok(None);
    }
    let n = g.order();
    let palette = Palette::new(seq, k as usize, g.kind(), n, opts.pin_odd_to_first);
    let machine = Automaton::new(&palette, g.kind());
    let sweep = machine.sweep(n, true);
    Ok(machine
        .witness(&sweep, n)
        .map(|colors| Coloring::with_budget(colors, k).expect("colors lie in 1..=k")))
}

/// `chi_S(g)` with a witness, by ascending search over `k`.
pub fn chromatic(g: &GraphSpec, seq: &PackingSequence) -> SolveResult {
    chromatic_with(g, seq, SolveOptions::default()).expect("default options are always valid")
}

pub fn chromatic_with(
    g: &GraphSpec,
    seq: &PackingSequence,
    opts: SolveOptions,
) -> Result<SolveResult> {
    check_options(g, seq, opts)?;
    // k = n always suffices (all colors distinct), so the loop terminates
    for k in 1..=g.order() as u32 {
        if let Some(witness) = feasible_with(g, seq, k, opts)? {
            return Ok(SolveResult {
                chromatic: k,
                witness,
            });
        }
    }
    unreachable!("{g} is colorable with {} distinct colors", g.order())
}

fn check_options(g: &GraphSpec, seq: &PackingSequence, opts: SolveOptions) -> Result<()> {
    if opts.pin_odd_to_first {
        if g.kind() != GraphKind::Path {
            return Err(Error::InvalidGraph(
                "odd-vertex pinning applies to paths only".into(),
            ));
        }
        if seq.entry(1) != 1 {
            return Err(Error::FirstEntryNotOne(seq.entry(1)));
        }
    }
    Ok(())
}

/// `chi_S` of every path `P_1..=P_{n_max}` or cycle `C_3..=C_{n_max}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChromaticProfile {
    pub kind: GraphKind,
    pub n_max: usize,
    /// `values[n]`; zero below the smallest valid order.
    values: Vec<u32>,
}

impl ChromaticProfile {
    pub fn get(&self, n: usize) -> Option<u32> {
        self.values.get(n).copied().filter(|&v| v > 0)
    }

    /// `(n, chi)` pairs in increasing `n`.
    pub fn iter(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.values
            .iter()
            .enumerate()
            .filter(|(_, &v)| v > 0)
            .map(|(n, &v)| (n, v))
    }
}

/// One sweep per `k` decides every order up to `n_max` at once.
pub fn chromatic_profile(kind: GraphKind, seq: &PackingSequence, n_max: usize) -> ChromaticProfile {
    let first = match kind {
        GraphKind::Path => 1,
        GraphKind::Cycle => 3,
    };
    let mut values = vec![0u32; n_max + 1];
    let mut pending: Vec<usize> = (first..=n_max).collect();
    let mut k = 0u32;
    while !pending.is_empty() {
        k += 1;
        // k distinct colors always suffice for k vertices
        pending.retain(|&n| {
            if n <= k as usize {
                values[n] = k;
            }
            n > k as usize
        });
        let Some(&top) = pending.last() else { break };
        let palette = Palette::new(seq, k as usize, kind, top, false);
        let machine = Automaton::new(&palette, kind);
        let sweep = machine.sweep(top, false);
        pending.retain(|&n| {
            let done = sweep.layers.get(n).is_some_and(|l| l.accepting());
            if done {
                values[n] = k;
            }
            !done
        });
    }
    ChromaticProfile {
        kind,
        n_max,
        values,
    }
}
