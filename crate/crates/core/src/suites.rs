//! Deterministic sequence suites for sweeps and cross-checks.

use crate::seq::PackingSequence;

fn seq(entries: Vec<u32>) -> PackingSequence {
    PackingSequence::new(entries).expect("generated sequences are valid")
}

fn push_unique(out: &mut Vec<PackingSequence>, s: PackingSequence) {
    if !out.contains(&s) {
        out.push(s);
    }
}

/// Corner members of the k-th dyadic class with entries at most `max_entry`.
///
/// Each `s_i` for `2 <= i < k` sits at the low or high end of
/// `[2^(i-1), 2^i)`, `s_k` at `s_{k-1}` or `2^(k-1) - 1`, and each sequence
/// appears with its constant tail and with `max_entry` appended.
pub fn dyadic_class_corners(k: u32, max_entry: u32) -> Vec<PackingSequence> {
    assert!(k >= 2, "the dyadic classes start at k = 2");
    let mut out = Vec::new();
    let inner = (k - 2) as usize;
    for mask in 0u32..1 << inner {
        let mut e = vec![1u32];
        for i in 2..k {
            let lo = 1u32 << (i - 1);
            e.push(if mask >> (i - 2) & 1 == 0 {
                lo
            } else {
                2 * lo - 1
            });
        }
        if e.iter().any(|&x| x > max_entry) {
            continue;
        }
        let prev = *e.last().unwrap();
        let top = (1u32 << (k - 1)) - 1;
        for last in [prev, top] {
            if last < prev {
                continue;
            }
            let mut base = e.clone();
            base.push(last);
            push_unique(&mut out, seq(base.clone()));
            if max_entry > last {
                base.push(max_entry);
                push_unique(&mut out, seq(base));
            }
        }
    }
    out
}

/// Dyadic-class corners for `k = 2..=6` with entries at most 31.
pub fn dyadic_class_suite() -> Vec<PackingSequence> {
    (2..=6).flat_map(|k| dyadic_class_corners(k, 31)).collect()
}

/// Class members for `k <= k_max` together with near misses that fall out of
/// every class, each paired with the expected class.
pub fn classification_suite(k_max: u32) -> Vec<(PackingSequence, Option<u32>)> {
    let mut out = Vec::new();
    for k in 2..=k_max {
        let cap = 1u32 << k;
        for s in dyadic_class_corners(k, cap) {
            out.push((s, Some(k)));
        }
        // push one inner entry past its dyadic range
        for i in 2..k {
            let mut e: Vec<u32> = (0..k).map(|j| 1u32 << j.min(k - 2)).collect();
            e[(i - 1) as usize] = 1 << i;
            for x in &mut e[i as usize..] {
                *x = (*x).max(1 << i);
            }
            out.push((seq(e), None));
        }
        // a first entry other than 1
        out.push((seq(vec![2; k as usize]), None));
    }
    out
}

/// Every nondecreasing sequence of length `len` with entries in `1..=max`.
pub fn all_nondecreasing(len: usize, max: u32) -> Vec<PackingSequence> {
    fn go(len: usize, lo: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<PackingSequence>) {
        if cur.len() == len {
            out.push(seq(cur.clone()));
            return;
        }
        for v in lo..=max {
            cur.push(v);
            go(len, v, max, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(len, 1, max, &mut Vec::new(), &mut out);
    out
}

/// Sequences dyadic in positions `2..=7` that belong to no dyadic class: the
/// trailing entry 512 sits above its own dyadic range.
pub fn dyadic_prefix_suite() -> Vec<PackingSequence> {
    (0u32..1 << 6)
        .map(|mask| {
            let mut e = vec![1u32];
            for i in 2..=7u32 {
                let lo = 1u32 << (i - 1);
                e.push(if mask >> (i - 2) & 1 == 0 {
                    lo
                } else {
                    2 * lo - 1
                });
            }
            e.push(512);
            seq(e)
        })
        .collect()
}

/// At least `count` pairs `(a, b)` with `a` dominating `b` entrywise, drawn by
/// stride from the length-4 sequences over `1..=6` that start with 1. Pairs
/// with `a == b` are skipped.
pub fn dominating_pairs(count: usize) -> Vec<(PackingSequence, PackingSequence)> {
    let pool: Vec<PackingSequence> = all_nondecreasing(4, 6)
        .into_iter()
        .filter(|s| s.entry(1) == 1)
        .collect();
    let mut all = Vec::new();
    for a in &pool {
        for b in &pool {
            if a != b && a.dominates(b) {
                all.push((a.clone(), b.clone()));
            }
        }
    }
    let stride = (all.len() / count.max(1)).max(1);
    all.into_iter().step_by(stride).collect()
}
