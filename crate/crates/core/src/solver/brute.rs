//! Exhaustive backtracking oracle. Deliberately naive: it places colors
//! vertex by vertex and checks each placement against every earlier vertex
//! using the graph distance. Its only refinement is the usual symmetry cut
//! among colors that share a separation.

use crate::coloring::{Coloring, GraphSpec};
use crate::error::{Error, Result};
use crate::seq::PackingSequence;

use super::SolveResult;

/// Largest order the oracle accepts by default.
pub const ORACLE_MAX_ORDER: usize = 18;

pub fn brute_force_feasible(g: &GraphSpec, seq: &PackingSequence, k: u32) -> Option<Coloring> {
    let n = g.order();
    let k = k as usize;
    let sep: Vec<usize> = (1..=k).map(|c| seq.entry(c) as usize).collect();
    // first color of each color's symmetry class
    let class_start: Vec<usize> = (0..k)
        .map(|c| (0..=c).find(|&a| sep[a] == sep[c]).unwrap())
        .collect();
    let mut colors = vec![0usize; n + 1];
    let mut used = vec![0usize; k];
    if place(g, &sep, &class_start, 1, &mut colors, &mut used) {
        let colors = colors[1..].iter().map(|&c| c as u32 + 1).collect();
        Some(Coloring::with_budget(colors, k as u32).expect("colors lie in 1..=k"))
    } else {
        None
    }
}

fn place(
    g: &GraphSpec,
    sep: &[usize],
    class_start: &[usize],
    u: usize,
    colors: &mut [usize],
    used: &mut [usize],
) -> bool {
    if u > g.order() {
        return true;
    }
    for c in 0..sep.len() {
        // an unused color may only be opened if all earlier colors of its
        // class are already in use
        if used[c] == 0 && (class_start[c]..c).any(|a| used[a] == 0) {
            continue;
        }
        let clash = (1..u).any(|v| colors[v] == c && g.distance(u, v) <= sep[c]);
        if clash {
            continue;
        }
        colors[u] = c;
        used[c] += 1;
        if place(g, sep, class_start, u + 1, colors, used) {
            return true;
        }
        used[c] -= 1;
    }
    false
}

/// Smallest `k <= k_max` admitting a coloring, found by ascending search.
pub fn brute_force_chromatic(
    g: &GraphSpec,
    seq: &PackingSequence,
    k_max: u32,
) -> Result<SolveResult> {
    brute_force_chromatic_bounded(g, seq, k_max, ORACLE_MAX_ORDER)
}

pub fn brute_force_chromatic_bounded(
    g: &GraphSpec,
    seq: &PackingSequence,
    k_max: u32,
    max_order: usize,
) -> Result<SolveResult> {
    if g.order() > max_order {
        return Err(Error::OracleSizeExceeded {
            n: g.order(),
            limit: max_order,
        });
    }
    for k in 1..=k_max {
        if let Some(witness) = brute_force_feasible(g, seq, k) {
            return Ok(SolveResult {
                chromatic: k,
                witness,
            });
        }
    }
    Err(Error::ColorBudgetExhausted(k_max))
}
