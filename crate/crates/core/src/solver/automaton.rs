//! Layered state machine for S-packing colorings of paths and cycles.
//!
//! A state records, for every color, how long ago it was last used (capped at
//! the color's separation, where the cap means "free to use again"). Appending
//! color `c` is legal exactly when its counter sits at the cap. Colors sharing
//! a separation are interchangeable, so each state is stored with those
//! colors' records sorted; this quotient is what keeps high color counts
//! tractable.
//!
//! For cycles every color also carries a seam record: the position of its
//! first occurrence when that position is within its separation, and whether
//! it has occurred again since. Closing `C_t` after `t` steps only needs the
//! first/last occurrence pair of each color, which the two records give
//! directly, so the construction is exact for every `t >= 3`.
//!
//! On paths a color that cannot legally recur before the sweep's last layer
//! is retired: its counter is reset to zero, merging states that differ only
//! in colors that are already spent.

use std::collections::HashMap;
use std::ops::Range;

use crate::coloring::GraphKind;
use crate::seq::PackingSequence;

const UNSEEN: u16 = 0;

/// Colors `1..=k` with their (capped) separations and symmetry classes.
#[derive(Clone, Debug)]
pub(crate) struct Palette {
    sep: Vec<u16>,
    classes: Vec<Range<usize>>,
    /// Force color 1 on every odd position (color 1 gets its own class).
    pin_odd: bool,
}

impl Palette {
    /// Separations are clamped to the largest distance occurring in a graph
    /// of the given kind with at most `n_max` vertices.
    pub(crate) fn new(
        seq: &PackingSequence,
        k: usize,
        kind: GraphKind,
        n_max: usize,
        pin_odd: bool,
    ) -> Self {
        let reach = match kind {
            GraphKind::Path => n_max.saturating_sub(1),
            GraphKind::Cycle => n_max / 2,
        };
        let cap = reach.clamp(1, (u16::MAX as usize - 1) / 2);
        let sep: Vec<u16> = (1..=k)
            .map(|c| (seq.entry(c) as usize).min(cap) as u16)
            .collect();
        let mut classes: Vec<Range<usize>> = Vec::new();
        for c in 0..k {
            match classes.last_mut() {
                Some(r) if sep[r.start] == sep[c] && !(pin_odd && r.start == 0) => r.end = c + 1,
                _ => classes.push(c..c + 1),
            }
        }
        Self {
            sep,
            classes,
            pin_odd,
        }
    }

    pub(crate) fn k(&self) -> usize {
        self.sep.len()
    }
}

/// Predecessor links and acceptance for one layer (one vertex count).
#[derive(Debug, Default)]
pub(crate) struct Layer {
    /// `(state index in previous layer, canonical slot of the appended color)`
    preds: Vec<(u32, u16)>,
    /// First state that closes into a valid coloring of the whole graph.
    accepting: Option<u32>,
    len: usize,
}

impl Layer {
    pub(crate) fn accepting(&self) -> bool {
        self.accepting.is_some()
    }

    #[allow(dead_code)]
    pub(crate) fn len(&self) -> usize {
        self.len
    }
}

pub(crate) struct Sweep {
    pub(crate) layers: Vec<Layer>,
    horizon: usize,
}

pub(crate) struct Automaton<'a> {
    palette: &'a Palette,
    kind: GraphKind,
    width: usize,
}

impl<'a> Automaton<'a> {
    pub(crate) fn new(palette: &'a Palette, kind: GraphKind) -> Self {
        let width = match kind {
            GraphKind::Path => 1,
            GraphKind::Cycle => 2,
        };
        Self {
            palette,
            kind,
            width,
        }
    }

    fn stride(&self) -> usize {
        self.palette.k() * self.width
    }

    fn initial(&self) -> Vec<u16> {
        let mut st = vec![UNSEEN; self.stride()];
        for (c, &s) in self.palette.sep.iter().enumerate() {
            st[c * self.width] = s;
        }
        st
    }

    /// Sorts each class's per-color records. Returns, when asked, the
    /// permutation taking canonical slots to the colors that occupied them.
    fn canonicalize(&self, st: &mut [u16], perm: Option<&mut Vec<usize>>) {
        let w = self.width;
        let mut order: Vec<usize> = Vec::new();
        let mut scratch: Vec<u16> = Vec::new();
        let mut full_perm: Vec<usize> = Vec::with_capacity(self.palette.k());
        for class in &self.palette.classes {
            if class.len() == 1 {
                full_perm.push(class.start);
                continue;
            }
            order.clear();
            order.extend(class.clone());
            order.sort_by(|&a, &b| st[a * w..(a + 1) * w].cmp(&st[b * w..(b + 1) * w]));
            scratch.clear();
            for &c in &order {
                scratch.extend_from_slice(&st[c * w..(c + 1) * w]);
            }
            st[class.start * w..class.end * w].copy_from_slice(&scratch);
            full_perm.extend_from_slice(&order);
        }
        if let Some(p) = perm {
            *p = full_perm;
        }
    }

    /// Appends color `c` as vertex `t` (1-based), without canonicalizing.
    fn apply(&self, st: &mut [u16], c: usize, t: usize) {
        let w = self.width;
        for (j, &s) in self.palette.sep.iter().enumerate() {
            if j == c {
                st[j * w] = 0;
            } else if st[j * w] < s {
                st[j * w] += 1;
            }
        }
        if self.kind == GraphKind::Cycle {
            let s = self.palette.sep[c] as usize;
            let seam = &mut st[c * w + 1];
            let v = *seam as usize;
            *seam = if v == UNSEEN as usize {
                if t <= s {
                    t as u16
                } else {
                    irrelevant(s)
                }
            } else if v <= s {
                (v + s) as u16
            } else {
                v as u16
            };
        }
    }

    fn legal(&self, st: &[u16], c: usize) -> bool {
        st[c * self.width] == self.palette.sep[c]
    }

    /// Whether the state, read as the last vertex of `C_t`, closes the cycle.
    fn closes(&self, st: &[u16]) -> bool {
        match self.kind {
            GraphKind::Path => true,
            GraphKind::Cycle => self.palette.sep.iter().enumerate().all(|(c, &s)| {
                let gap = st[c * 2] as usize;
                let seam = st[c * 2 + 1] as usize;
                let s = s as usize;
                // repeated color whose first use is within reach of the seam
                if seam > s && seam <= 2 * s {
                    gap + (seam - s) > s
                } else {
                    true
                }
            }),
        }
    }

    /// Moves out of `st` when appending vertex `t`: one canonical slot per
    /// distinct legal record.
    fn moves<'s>(&'s self, st: &'s [u16], t: usize) -> impl Iterator<Item = usize> + 's {
        let w = self.width;
        let pinned = self.palette.pin_odd && t % 2 == 1;
        self.palette
            .classes
            .iter()
            .flat_map(move |class| {
                class.clone().filter(move |&c| {
                    c == class.start || st[c * w..(c + 1) * w] != st[(c - 1) * w..c * w]
                })
            })
            .filter(move |&c| self.legal(st, c) && (!pinned || c == 0))
    }

    /// After vertex `t` on a path: zeroes the counters of colors whose next
    /// legal use lies beyond `horizon`.
    fn retire(&self, st: &mut [u16], t: usize, horizon: usize) {
        if self.kind != GraphKind::Path {
            return;
        }
        for (g, &s) in st.iter_mut().zip(&self.palette.sep) {
            if *g < s && t + 1 + usize::from(s - *g) > horizon {
                *g = 0;
            }
        }
    }

    /// Builds layers `0..=n_max`; stops early once a layer is empty.
    pub(crate) fn sweep(&self, n_max: usize, record_preds: bool) -> Sweep {
        let stride = self.stride();
        let mut current: Vec<u16> = self.initial();
        let mut layers = vec![Layer {
            preds: Vec::new(),
            accepting: None,
            len: 1,
        }];
        let mut next: Vec<u16> = Vec::new();
        let mut index: HashMap<Box<[u16]>, u32> = HashMap::new();
        let mut buf = vec![0u16; stride];

        for t in 1..=n_max {
            next.clear();
            index.clear();
            let mut preds = Vec::new();
            let count = current.len() / stride;
            for si in 0..count {
                let st = &current[si * stride..(si + 1) * stride];
                for c in self.moves(st, t) {
                    buf.copy_from_slice(st);
                    self.apply(&mut buf, c, t);
                    self.retire(&mut buf, t, n_max);
                    self.canonicalize(&mut buf, None);
                    if !index.contains_key(buf.as_slice()) {
                        let id = index.len() as u32;
                        index.insert(buf.clone().into_boxed_slice(), id);
                        next.extend_from_slice(&buf);
                        if record_preds {
                            preds.push((si as u32, c as u16));
                        }
                    }
                }
            }
            let len = next.len() / stride;
            let accepting = (0..len)
                .find(|&i| self.closes(&next[i * stride..(i + 1) * stride]))
                .map(|i| i as u32);
            layers.push(Layer {
                preds,
                accepting,
                len,
            });
            std::mem::swap(&mut current, &mut next);
            if len == 0 {
                break;
            }
        }
        Sweep {
            layers,
            horizon: n_max,
        }
    }

    /// Recovers a concrete coloring of the accepting state in layer `n`.
    /// Requires a sweep that recorded predecessors.
    pub(crate) fn witness(&self, sweep: &Sweep, n: usize) -> Option<Vec<u32>> {
        let mut idx = sweep.layers.get(n)?.accepting?;
        let mut slots = vec![0usize; n];
        for t in (1..=n).rev() {
            let (prev, slot) = sweep.layers[t].preds[idx as usize];
            slots[t - 1] = slot as usize;
            idx = prev;
        }
        let mut st = self.initial();
        let mut perm = Vec::new();
        let mut colors = Vec::with_capacity(n);
        for (t, &slot) in (1..=n).zip(&slots) {
            let mut canon = st.clone();
            self.canonicalize(&mut canon, Some(&mut perm));
            let c = perm[slot];
            debug_assert!(self.legal(&st, c));
            self.apply(&mut st, c, t);
            self.retire(&mut st, t, sweep.horizon);
            colors.push(c as u32 + 1);
        }
        Some(colors)
    }
}

fn irrelevant(s: usize) -> u16 {
    (2 * s + 1) as u16
}
