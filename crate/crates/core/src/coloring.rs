//! Paths, cycles, and colorings of their vertices.
//!
//! Vertices are numbered `1..=n`, matching the congruence form of the binary
//! ruler coloring.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::seq::PackingSequence;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GraphKind {
    Path,
    Cycle,
}

/// `P_n` or `C_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "GraphRepr", into = "GraphRepr")]
pub struct GraphSpec {
    kind: GraphKind,
    n: usize,
}

impl GraphSpec {
    pub fn new(kind: GraphKind, n: usize) -> Result<Self> {
        match kind {
            GraphKind::Path if n == 0 => Err(Error::InvalidGraph("a path needs n >= 1".into())),
            GraphKind::Cycle if n < 3 => Err(Error::InvalidGraph(format!(
                "a cycle needs n >= 3, got {n}"
            ))),
            _ => Ok(Self { kind, n }),
        }
    }

    pub fn path(n: usize) -> Result<Self> {
        Self::new(GraphKind::Path, n)
    }

    pub fn cycle(n: usize) -> Result<Self> {
        Self::new(GraphKind::Cycle, n)
    }

    pub fn kind(&self) -> GraphKind {
        self.kind
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Graph distance between 1-based vertices `u` and `v`.
    pub fn distance(&self, u: usize, v: usize) -> usize {
        debug_assert!((1..=self.n).contains(&u) && (1..=self.n).contains(&v));
        let d = u.abs_diff(v);
        match self.kind {
            GraphKind::Path => d,
            GraphKind::Cycle => d.min(self.n - d),
        }
    }
}

impl fmt::Display for GraphSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            GraphKind::Path => write!(f, "P_{}", self.n),
            GraphKind::Cycle => write!(f, "C_{}", self.n),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct GraphRepr {
    kind: GraphKind,
    n: usize,
}

impl TryFrom<GraphRepr> for GraphSpec {
    type Error = Error;

    fn try_from(r: GraphRepr) -> Result<Self> {
        GraphSpec::new(r.kind, r.n)
    }
}

impl From<GraphSpec> for GraphRepr {
    fn from(g: GraphSpec) -> Self {
        GraphRepr {
            kind: g.kind,
            n: g.n,
        }
    }
}

/// A total labeling of vertices `1..=n` with colors from `1..=k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Coloring {
    colors: Vec<u32>,
    k: u32,
}

impl Coloring {
    /// Budget `k` is taken to be the largest color present.
    pub fn new(colors: Vec<u32>) -> Result<Self> {
        let k = colors.iter().copied().max().unwrap_or(0);
        Self::with_budget(colors, k)
    }

    pub fn with_budget(colors: Vec<u32>, k: u32) -> Result<Self> {
        if let Some((i, &c)) = colors.iter().enumerate().find(|(_, &c)| c == 0 || c > k) {
            return Err(Error::ColorOutOfRange {
                vertex: i + 1,
                color: c,
                k,
            });
        }
        Ok(Self { colors, k })
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn budget(&self) -> u32 {
        self.k
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Color of 1-based vertex `v`.
    pub fn color(&self, v: usize) -> u32 {
        self.colors[v - 1]
    }

    /// Number of distinct colors present.
    pub fn used_colors(&self) -> usize {
        let mut seen: Vec<u32> = self.colors.clone();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }

    pub fn reversed(&self) -> Self {
        let mut colors = self.colors.clone();
        colors.reverse();
        Self { colors, k: self.k }
    }

    pub fn rotated(&self, offset: usize) -> Self {
        let mut colors = self.colors.clone();
        if !colors.is_empty() {
            let len = colors.len();
            colors.rotate_left(offset % len);
        }
        Self { colors, k: self.k }
    }

    /// Checks the packing condition on `g` under `seq`.
    pub fn validate(&self, g: &GraphSpec, seq: &PackingSequence) -> Result<ValidationReport> {
        validate(g, seq, self)
    }
}

impl fmt::Display for Coloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.colors.iter().all(|&c| c <= 9) {
            for c in &self.colors {
                write!(f, "{c}")?;
            }
        } else {
            for (i, c) in self.colors.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{c}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for Coloring {
    type Err = Error;

    /// Accepts a digit string (`12131214`) or a comma list (`1,2,10`).
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let colors = if s.contains(',') {
            s.split(',')
                .map(|t| {
                    t.trim()
                        .parse::<u32>()
                        .map_err(|e| Error::InvalidColoring(format!("{t:?}: {e}")))
                })
                .collect::<Result<Vec<_>>>()?
        } else {
            s.chars()
                .map(|ch| {
                    ch.to_digit(10)
                        .ok_or_else(|| Error::InvalidColoring(format!("unexpected {ch:?}")))
                })
                .collect::<Result<Vec<_>>>()?
        };
        if colors.is_empty() {
            return Err(Error::InvalidColoring("empty coloring".into()));
        }
        Coloring::new(colors)
    }
}

/// A same-colored pair that sits too close.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub u: usize,
    pub v: usize,
    pub color: u32,
    pub distance: usize,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "vertices {} and {} share color {} at distance {}",
            self.u, self.v, self.color, self.distance
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ValidationReport {
    Ok,
    Violation(Violation),
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        matches!(self, ValidationReport::Ok)
    }
}

/// Returns the lexicographically first violating pair `(u, v)`, `u < v`, if
/// any. Only pairs within distance `max_i s_i` over the colors in use are
/// inspected.
pub fn validate(g: &GraphSpec, seq: &PackingSequence, c: &Coloring) -> Result<ValidationReport> {
    let n = g.order();
    if c.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            got: c.len(),
        });
    }
    let max_color = c.colors().iter().copied().max().unwrap_or(1);
    let reach = seq.max_separation(max_color as usize) as usize;
    for u in 1..=n {
        let color = c.color(u);
        let sep = seq.entry(color as usize) as usize;
        for v in candidates(g, u, reach) {
            if c.color(v) == color {
                let distance = g.distance(u, v);
                if distance <= sep {
                    return Ok(ValidationReport::Violation(Violation {
                        u,
                        v,
                        color,
                        distance,
                    }));
                }
            }
        }
    }
    Ok(ValidationReport::Ok)
}

/// Vertices `v > u` within distance `reach` of `u`, in increasing order.
fn candidates(g: &GraphSpec, u: usize, reach: usize) -> impl Iterator<Item = usize> {
    let n = g.order();
    let near_end = (u + reach).min(n);
    let (wrap_start, wrap_end) = match g.kind() {
        // The far side of a cycle: v with n - (v - u) <= reach.
        GraphKind::Cycle if u + n > reach => ((u + n - reach).max(near_end + 1), n),
        GraphKind::Cycle => (near_end + 1, n),
        GraphKind::Path => (1, 0),
    };
    (u + 1..=near_end).chain(wrap_start..=wrap_end)
}

/// The binary ruler coloring: vertex `i` gets color `j` when `2^(j-1)` is the
/// lowest set bit of `i` (`j < k`), and color `k` when `2^(k-1)` divides `i`.
pub fn canonical_path_coloring(n: usize, k: u32) -> Coloring {
    assert!(
        n >= 1 && k >= 2,
        "canonical coloring needs n >= 1 and k >= 2"
    );
    let colors = (1..=n).map(|i| (i.trailing_zeros() + 1).min(k)).collect();
    Coloring::with_budget(colors, k).expect("colors lie in 1..=k")
}
