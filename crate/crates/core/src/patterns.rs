//! Periodic colorings of cycles written as blocks with multiplicities, such
//! as `(1213124)^2(12131214)*`, and finite certificates that such a pattern is
//! a valid coloring of `C_n` for every exponent choice.
//!
//! Certification rests on a deletion argument. Any same-colored pair at cycle
//! distance `d <= W` lies on an arc of `W + 1` consecutive vertices, and such
//! an arc meets at most `ceil(W / len) + 1` copies of a block of length
//! `len`. If a free block is repeated more often than that, some copy misses
//! the arc; deleting it keeps the arc intact and can only shorten the pair's
//! cycle distance, so the violation persists with one fewer copy. Hence it
//! suffices to validate every exponent from the block's minimum up to the
//! minimum plus `ceil(2W / len) + 1`, jointly over all free blocks.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::coloring::{validate, Coloring, GraphSpec, ValidationReport, Violation};
use crate::error::{Error, Result};
use crate::seq::{PackingSequence, SequenceFamily};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Multiplicity {
    Fixed(u32),
    /// Repeated any number of times `>= min`.
    Free {
        min: u32,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Block {
    pub colors: Vec<u32>,
    pub mult: Multiplicity,
}

/// Blocks concatenated in order; free blocks carry an exponent each.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct PatternSpec {
    blocks: Vec<Block>,
}

impl PatternSpec {
    pub fn new(blocks: Vec<Block>) -> Result<Self> {
        if blocks.is_empty() {
            return Err(Error::InvalidPattern("no blocks".into()));
        }
        for b in &blocks {
            if b.colors.is_empty() {
                return Err(Error::InvalidPattern("empty block".into()));
            }
            if let Some(&c) = b.colors.iter().find(|&&c| c == 0 || c > 9) {
                return Err(Error::InvalidPattern(format!(
                    "color {c} is not a digit 1-9"
                )));
            }
        }
        Ok(Self { blocks })
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    /// Minimum exponent of each free block, in block order.
    pub fn free_minimums(&self) -> Vec<u32> {
        self.blocks
            .iter()
            .filter_map(|b| match b.mult {
                Multiplicity::Free { min } => Some(min),
                Multiplicity::Fixed(_) => None,
            })
            .collect()
    }

    /// Length contributed by the fixed blocks.
    pub fn fixed_len(&self) -> usize {
        self.blocks
            .iter()
            .map(|b| match b.mult {
                Multiplicity::Fixed(m) => b.colors.len() * m as usize,
                Multiplicity::Free { .. } => 0,
            })
            .sum()
    }

    /// Lengths of the free blocks, in block order.
    pub fn periods(&self) -> Vec<usize> {
        self.blocks
            .iter()
            .filter(|b| matches!(b.mult, Multiplicity::Free { .. }))
            .map(|b| b.colors.len())
            .collect()
    }

    /// Total order for the given free exponents.
    pub fn order(&self, exponents: &[u32]) -> usize {
        self.fixed_len()
            + self
                .periods()
                .iter()
                .zip(exponents)
                .map(|(len, &e)| len * e as usize)
                .sum::<usize>()
    }

    pub fn max_color(&self) -> u32 {
        self.blocks
            .iter()
            .flat_map(|b| b.colors.iter().copied())
            .max()
            .unwrap_or(1)
    }

    /// The coloring for one exponent per free block.
    pub fn instantiate(&self, exponents: &[u32]) -> Result<Coloring> {
        let mins = self.free_minimums();
        if exponents.len() != mins.len() {
            return Err(Error::InvalidPattern(format!(
                "pattern has {} free blocks, got {} exponents",
                mins.len(),
                exponents.len()
            )));
        }
        if let Some((&got, &min)) = exponents.iter().zip(&mins).find(|(e, m)| e < m) {
            return Err(Error::ExponentBelowMinimum { got, min });
        }
        let mut free = exponents.iter();
        let mut colors = Vec::new();
        for b in &self.blocks {
            let reps = match b.mult {
                Multiplicity::Fixed(m) => m,
                Multiplicity::Free { .. } => *free.next().expect("length checked"),
            };
            for _ in 0..reps {
                colors.extend_from_slice(&b.colors);
            }
        }
        if colors.is_empty() {
            return Err(Error::InvalidPattern("instance is empty".into()));
        }
        Coloring::new(colors)
    }

    /// Orders `n <= n_max` reached by some admissible exponent choice.
    pub fn covered_orders(&self, n_max: usize) -> BTreeSet<usize> {
        let mut out = BTreeSet::new();
        let periods = self.periods();
        let mins = self.free_minimums();
        collect_orders(self.fixed_len(), &periods, &mins, n_max, &mut out);
        out.retain(|&n| n >= 3);
        out
    }

    /// Human-readable description of the covered orders.
    pub fn coverage(&self) -> String {
        let names = ["k", "m", "p", "q"];
        let mut terms: Vec<String> = Vec::new();
        if self.fixed_len() > 0 {
            terms.push(self.fixed_len().to_string());
        }
        let periods = self.periods();
        for (i, len) in periods.iter().enumerate() {
            terms.push(format!("{len}{}", names.get(i).copied().unwrap_or("e")));
        }
        let mut s = format!("n = {}", terms.join(" + "));
        let mins = self.free_minimums();
        if !mins.is_empty() {
            let bounds: Vec<String> = mins
                .iter()
                .enumerate()
                .map(|(i, m)| format!("{} >= {m}", names.get(i).copied().unwrap_or("e")))
                .collect();
            s.push_str(&format!(" ({})", bounds.join(", ")));
        }
        if self.order(&mins) < 3 {
            s.push_str(", n >= 3");
        }
        s
    }
}

fn collect_orders(
    base: usize,
    periods: &[usize],
    mins: &[u32],
    n_max: usize,
    out: &mut BTreeSet<usize>,
) {
    let Some((&len, rest)) = periods.split_first() else {
        if base <= n_max {
            out.insert(base);
        }
        return;
    };
    let mut total = base + len * mins[0] as usize;
    while total <= n_max {
        collect_orders(total, rest, &mins[1..], n_max, out);
        total += len;
    }
}

impl fmt::Display for PatternSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.blocks {
            f.write_str("(")?;
            for c in &b.colors {
                write!(f, "{c}")?;
            }
            f.write_str(")")?;
            match b.mult {
                Multiplicity::Fixed(1) => {}
                Multiplicity::Fixed(m) => write!(f, "^{m}")?,
                Multiplicity::Free { min: 0 } => f.write_str("*")?,
                Multiplicity::Free { min: 1 } => f.write_str("+")?,
                Multiplicity::Free { min } => write!(f, "^{{{min}+}}")?,
            }
        }
        Ok(())
    }
}

impl FromStr for PatternSpec {
    type Err = Error;

    /// Grammar: blocks `(digits)` each followed by nothing (once), `^m`
    /// (fixed), `*` (free, `>= 0`), `+` (free, `>= 1`) or `^{m+}` (free, `>= m`).
    fn from_str(s: &str) -> Result<Self> {
        let bad = |msg: String| Error::InvalidPattern(msg);
        let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut i = 0;
        let mut blocks = Vec::new();
        while i < chars.len() {
            if chars[i] != '(' {
                return Err(bad(format!("expected '(' at offset {i} in {s:?}")));
            }
            let close = chars[i..]
                .iter()
                .position(|&c| c == ')')
                .map(|p| p + i)
                .ok_or_else(|| bad(format!("unclosed block in {s:?}")))?;
            let colors = chars[i + 1..close]
                .iter()
                .map(|c| {
                    c.to_digit(10)
                        .ok_or_else(|| bad(format!("non-digit {c:?} in block")))
                })
                .collect::<Result<Vec<u32>>>()?;
            i = close + 1;
            let mult = match chars.get(i) {
                Some('*') => {
                    i += 1;
                    Multiplicity::Free { min: 0 }
                }
                Some('+') => {
                    i += 1;
                    Multiplicity::Free { min: 1 }
                }
                Some('^') => {
                    i += 1;
                    if chars.get(i) == Some(&'{') {
                        let end = chars[i..]
                            .iter()
                            .position(|&c| c == '}')
                            .map(|p| p + i)
                            .ok_or_else(|| bad("unclosed '{'".into()))?;
                        let inner: String = chars[i + 1..end].iter().collect();
                        let num = inner
                            .strip_suffix('+')
                            .ok_or_else(|| bad(format!("expected {{m+}}, got {{{inner}}}")))?;
                        let min = num
                            .parse()
                            .map_err(|e| bad(format!("bad exponent {num:?}: {e}")))?;
                        i = end + 1;
                        Multiplicity::Free { min }
                    } else {
                        let start = i;
                        while i < chars.len() && chars[i].is_ascii_digit() {
                            i += 1;
                        }
                        let num: String = chars[start..i].iter().collect();
                        let m = num
                            .parse()
                            .map_err(|e| bad(format!("bad exponent {num:?}: {e}")))?;
                        Multiplicity::Fixed(m)
                    }
                }
                _ => Multiplicity::Fixed(1),
            };
            blocks.push(Block { colors, mult });
        }
        PatternSpec::new(blocks)
    }
}

impl TryFrom<String> for PatternSpec {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<PatternSpec> for String {
    fn from(p: PatternSpec) -> Self {
        p.to_string()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum CertificateReport {
    /// Valid on `C_n` for every admissible exponent choice.
    Proved {
        coverage: String,
        /// Exponent tuples that were checked.
        checked: Vec<Vec<u32>>,
    },
    Rejected {
        exponents: Vec<u32>,
        order: usize,
        violation: Violation,
    },
}

impl CertificateReport {
    pub fn is_proved(&self) -> bool {
        matches!(self, CertificateReport::Proved { .. })
    }
}

impl fmt::Display for CertificateReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CertificateReport::Proved { coverage, .. } => write!(f, "PROVED for {coverage}"),
            CertificateReport::Rejected {
                exponents,
                order,
                violation,
            } => write!(
                f,
                "REJECTED on C_{order} (exponents {exponents:?}): {violation}"
            ),
        }
    }
}

/// Exponent ranges per free block that the certificate has to check.
fn check_ranges(p: &PatternSpec, seq: &PackingSequence) -> Vec<(u32, u32)> {
    let reach = seq.max_separation(p.max_color() as usize) as usize;
    p.free_minimums()
        .iter()
        .zip(p.periods())
        .map(|(&min, len)| {
            let extra = (2 * reach).div_ceil(len) + 1;
            (min, min + extra as u32)
        })
        .collect()
}

/// Validates every exponent tuple in the certificate range. Tuples giving
/// fewer than three vertices do not describe cycles and are skipped.
pub fn certify_family(p: &PatternSpec, seq: &PackingSequence) -> Result<CertificateReport> {
    let ranges = check_ranges(p, seq);
    let mut checked = Vec::new();
    let mut exps: Vec<u32> = ranges.iter().map(|r| r.0).collect();
    loop {
        let n = p.order(&exps);
        if n >= 3 {
            let coloring = p.instantiate(&exps)?;
            let g = GraphSpec::cycle(n)?;
            if let ValidationReport::Violation(violation) = validate(&g, seq, &coloring)? {
                return Ok(CertificateReport::Rejected {
                    exponents: exps,
                    order: n,
                    violation,
                });
            }
            checked.push(exps.clone());
        }
        // odometer over the ranges
        let mut i = 0;
        loop {
            if i == exps.len() {
                if checked.is_empty() {
                    return Err(Error::InvalidPattern(format!(
                        "{p} yields no cycle of order >= 3 in the checked range"
                    )));
                }
                return Ok(CertificateReport::Proved {
                    coverage: p.coverage(),
                    checked,
                });
            }
            if exps[i] < ranges[i].1 {
                exps[i] += 1;
                break;
            }
            exps[i] = ranges[i].0;
            i += 1;
        }
    }
}

/// For a pattern with exactly one free block: the smallest minimum `m >=`
/// the declared one from which the pattern certifies, searching up to
/// `m_limit`.
pub fn minimal_exponent(
    p: &PatternSpec,
    seq: &PackingSequence,
    m_limit: u32,
) -> Result<Option<u32>> {
    let free: Vec<usize> = p
        .blocks
        .iter()
        .enumerate()
        .filter(|(_, b)| matches!(b.mult, Multiplicity::Free { .. }))
        .map(|(i, _)| i)
        .collect();
    let [idx] = free[..] else {
        return Err(Error::InvalidPattern(format!(
            "{p} must have exactly one free block"
        )));
    };
    let Multiplicity::Free { min: declared } = p.blocks[idx].mult else {
        unreachable!()
    };
    for m in declared..=m_limit {
        let mut q = p.clone();
        q.blocks[idx].mult = Multiplicity::Free { min: m };
        if p.order(&[m]) >= 3 && certify_family(&q, seq)?.is_proved() {
            return Ok(Some(m));
        }
    }
    Ok(None)
}

/// A pattern from the cycle constructions together with the sequences it is
/// claimed for.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LibraryEntry {
    pub family: SequenceFamily,
    pub pattern: PatternSpec,
    pub coverage: String,
    /// Which orders the construction is meant for, e.g. `n = 3 mod 8`.
    pub purpose: String,
}

fn entry(family: &str, pattern: &str, purpose: &str) -> LibraryEntry {
    let pattern: PatternSpec = pattern.parse().expect("library patterns parse");
    LibraryEntry {
        family: family.parse().expect("library families parse"),
        coverage: pattern.coverage(),
        pattern,
        purpose: purpose.to_string(),
    }
}

/// Every periodic construction used to show `chi_S(C_n) <= 4` on the
/// four-color families.
pub fn pattern_library() -> Vec<LibraryEntry> {
    let mut lib = Vec::new();
    // s_2 = 2, s_3 in 4..6, s_4 <= 6: prefix (1213124)^(8-r) then the ruler block
    lib.push(entry("1,2,[4-6],6", "(12131214)+", "n = 0 mod 8"));
    for r in 1..=7 {
        lib.push(entry(
            "1,2,[4-6],6",
            &format!("(1213124)^{}(12131214)*", 8 - r),
            &format!("n = {r} mod 8"),
        ));
    }
    lib.push(entry(
        "1,2,[4-6],6",
        "(1213124)*(12131214)*",
        "sums of 7 and 8",
    ));
    lib.push(entry("1,2,4,4", "(13214)*(12131214)*", "sums of 5 and 8"));
    lib.push(entry("1,3,4,4", "(12131214)+", "n = 0 mod 8"));
    lib.push(entry("1,3,4,4", "(13214)*(12131214)*", "sums of 5 and 8"));
    lib.push(entry(
        "1,3,4,5",
        "(131214)*(12131214)*",
        "even n, sums of 6 and 8",
    ));
    lib.push(entry("1,3,4,5", "(1213124)(131214)+", "odd n = 1 mod 6"));
    lib.push(entry(
        "1,3,4,5",
        "(1213124)(13121412)(131214)+",
        "odd n = 3 mod 6",
    ));
    lib.push(entry(
        "1,3,4,5",
        "(1213124)(13121412)^2(131214)+",
        "odd n = 5 mod 6",
    ));
    lib.push(entry(
        "1,3,5,5",
        "(131214)*(12131214)*",
        "even n, sums of 6 and 8",
    ));
    for fam in ["1,2,[4-7],7", "1,3,[4-7],7", "1,3,[5-6],6"] {
        lib.push(entry(fam, "(12131214)+", "n = 0 mod 8"));
    }
    lib
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pat(s: &str) -> PatternSpec {
        s.parse().unwrap()
    }

    fn seq(s: &str) -> PackingSequence {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_display() {
        for s in [
            "(1213124)^2(12131214)*",
            "(13214)^2",
            "(131214)+",
            "(12)^{3+}",
            "(1213124)(131214)*",
        ] {
            assert_eq!(pat(s).to_string(), s);
        }
        assert!("".parse::<PatternSpec>().is_err());
        assert!("(12".parse::<PatternSpec>().is_err());
        assert!("()".parse::<PatternSpec>().is_err());
        assert!("(1a)".parse::<PatternSpec>().is_err());
        assert!("12".parse::<PatternSpec>().is_err());
        assert!("(10)".parse::<PatternSpec>().is_err());
        assert!("(12)^x".parse::<PatternSpec>().is_err());
    }

    #[test]
    fn instantiate_examples() {
        assert_eq!(
            pat("(12131214)*").instantiate(&[1]).unwrap().to_string(),
            "12131214"
        );
        assert_eq!(
            pat("(1213124)^1(12131214)*")
                .instantiate(&[1])
                .unwrap()
                .to_string(),
            "121312412131214"
        );
        assert_eq!(
            pat("(13214)^2").instantiate(&[]).unwrap().to_string(),
            "1321413214"
        );
        assert_eq!(
            pat("(12)^{2+}").instantiate(&[1]).unwrap_err(),
            Error::ExponentBelowMinimum { got: 1, min: 2 }
        );
        assert!(pat("(12)*").instantiate(&[0]).is_err());
        assert!(pat("(12)*").instantiate(&[]).is_err());
    }

    #[test]
    fn orders_and_coverage() {
        let p = pat("(1213124)*(12131214)*");
        assert_eq!(p.order(&[2, 1]), 22);
        assert_eq!(p.coverage(), "n = 7k + 8m (k >= 0, m >= 0), n >= 3");
        let p = pat("(1213124)(131214)+");
        assert_eq!(p.coverage(), "n = 7 + 6k (k >= 1)");
        assert_eq!(
            p.covered_orders(30).into_iter().collect::<Vec<_>>(),
            vec![13, 19, 25]
        );
    }

    #[test]
    fn certify_examples() {
        let r = certify_family(&pat("(12131214)+"), &seq("1,2,4,7")).unwrap();
        assert!(r.is_proved());
        assert_eq!(r.to_string(), "PROVED for n = 8k (k >= 1)");

        let r = certify_family(&pat("(13214)^2"), &seq("1,3,4,4")).unwrap();
        assert!(r.is_proved());

        let r = certify_family(&pat("(12)*"), &seq("1,2,2")).unwrap();
        match r {
            CertificateReport::Rejected {
                order, violation, ..
            } => {
                assert_eq!(order, 4);
                assert_eq!(violation.color, 2);
                assert_eq!(violation.distance, 2);
            }
            other => panic!("expected rejection, got {other:?}"),
        }
    }

    #[test]
    fn two_free_exponents_checked_jointly() {
        let r = certify_family(&pat("(131214)*(12131214)*"), &seq("1,3,4,5")).unwrap();
        let CertificateReport::Proved { checked, .. } = r else {
            panic!("{r:?}")
        };
        // (0,0) is empty and skipped; every other pair in the box is checked
        assert!(checked.contains(&vec![1, 1]));
        assert!(checked.contains(&vec![3, 2]));
        assert!(!checked.contains(&vec![0, 0]));
    }

    #[test]
    fn odd_case_patterns_need_one_repetition() {
        let s = seq("1,3,4,5");
        for p in [
            "(1213124)(131214)*",
            "(1213124)(13121412)(131214)*",
            "(1213124)(13121412)^2(131214)*",
        ] {
            assert_eq!(minimal_exponent(&pat(p), &s, 6).unwrap(), Some(1), "{p}");
        }
        assert!(minimal_exponent(&pat("(12)*(34)*"), &s, 3).is_err());
    }

    #[test]
    fn library_parses() {
        let lib = pattern_library();
        assert!(lib.len() >= 15);
        assert!(lib.iter().all(|e| !e.coverage.is_empty()));
    }
}
