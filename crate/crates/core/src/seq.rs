//! Packing sequences, sequence families and the transforms between them.
//!
//! A [`PackingSequence`] stores a finite prefix `s_1..s_L`; every entry past
//! `L` repeats `s_L`. Two sequences are equal when they agree at every index,
//! so `(1,2,2)` and `(1,2)` compare equal.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A nondecreasing sequence of positive separations, one per color.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct PackingSequence {
    entries: Vec<u32>,
}

impl PackingSequence {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidSequence("empty sequence".into()));
        }
        if let Some(i) = entries.iter().position(|&s| s == 0) {
            return Err(Error::InvalidSequence(format!("entry s_{} is zero", i + 1)));
        }
        if let Some(i) = entries.windows(2).position(|w| w[0] > w[1]) {
            return Err(Error::InvalidSequence(format!(
                "s_{} = {} > s_{} = {}",
                i + 1,
                entries[i],
                i + 2,
                entries[i + 1]
            )));
        }
        Ok(Self { entries })
    }

    /// The explicitly stored prefix.
    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    /// `s_i` for 1-based `i`; indices past the prefix repeat the last entry.
    pub fn entry(&self, i: usize) -> u32 {
        assert!(i >= 1, "sequence indices start at 1");
        let last = self.entries.len() - 1;
        self.entries[(i - 1).min(last)]
    }

    /// The constant tail value.
    pub fn tail(&self) -> u32 {
        *self.entries.last().expect("non-empty by construction")
    }

    /// Shortest prefix that still describes the same infinite sequence.
    pub fn canonical_entries(&self) -> &[u32] {
        let tail = self.tail();
        let mut len = self.entries.len();
        while len > 1 && self.entries[len - 2] == tail {
            len -= 1;
        }
        &self.entries[..len]
    }

    /// Largest separation among the first `k` colors.
    pub fn max_separation(&self, k: usize) -> u32 {
        self.entry(k.max(1))
    }

    /// Smallest `k >= 2` such that the sequence lies in the class
    /// `2^(i-1) <= s_i < 2^i` for `i < k` and `s_k < 2^(k-1)`.
    ///
    /// Returns `None` when some `s_i >= 2^i` is reached first (or `s_1 != 1`).
    pub fn classify(&self) -> Option<u32> {
        let mut i: u32 = 1;
        loop {
            let s = u64::from(self.entry(i as usize));
            let lo = 1u64 << (i - 1);
            if i >= 2 && s < lo {
                return Some(i);
            }
            if s < lo || s >= lo << 1 {
                return None;
            }
            i += 1;
            // Past the stored prefix the entry is constant and `lo` doubles,
            // so the scan terminates within ~32 further steps.
        }
    }

    /// `s'_i = floor(s_{i+1} / 2)`.
    pub fn halve(&self) -> Result<Self> {
        self.require_first_one()?;
        let len = (self.entries.len() - 1).max(1);
        let halved: Vec<u32> = (1..=len).map(|i| self.entry(i + 1) / 2).collect();
        if let Some(i) = halved.iter().position(|&s| s == 0) {
            return Err(Error::HalvingYieldsZero(i + 1));
        }
        Self::new(halved)
    }

    /// Bumps every even entry past the first to the next odd value.
    ///
    /// Sequences starting with 1 have the same path chromatic numbers before
    /// and after the bump.
    pub fn normalize_odd(&self) -> Result<Self> {
        self.require_first_one()?;
        let mut out = self.entries.clone();
        for s in out.iter_mut().skip(1) {
            if *s % 2 == 0 {
                *s += 1;
            }
        }
        Self::new(out)
    }

    /// Entrywise `self_i <= other_i` at every index.
    pub fn dominates(&self, other: &Self) -> bool {
        let len = self.entries.len().max(other.entries.len());
        (1..=len).all(|i| self.entry(i) <= other.entry(i))
    }

    fn require_first_one(&self) -> Result<()> {
        match self.entries[0] {
            1 => Ok(()),
            s => Err(Error::FirstEntryNotOne(s)),
        }
    }
}

impl PartialEq for PackingSequence {
    fn eq(&self, other: &Self) -> bool {
        self.canonical_entries() == other.canonical_entries()
    }
}

impl Eq for PackingSequence {}

impl Hash for PackingSequence {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.canonical_entries().hash(state);
    }
}

impl fmt::Display for PackingSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, self.entries.iter())
    }
}

impl FromStr for PackingSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let entries = s
            .split(',')
            .map(|t| parse_entry(t).map_err(Error::InvalidSequence))
            .collect::<Result<Vec<_>>>()?;
        Self::new(entries)
    }
}

impl TryFrom<Vec<u32>> for PackingSequence {
    type Error = Error;

    fn try_from(v: Vec<u32>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<PackingSequence> for Vec<u32> {
    fn from(s: PackingSequence) -> Self {
        s.entries
    }
}

/// One position of a [`SequenceFamily`] prefix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FamilyEntry {
    Fixed(u32),
    Range { lo: u32, hi: u32 },
}

impl FamilyEntry {
    fn bounds(self) -> (u32, u32) {
        match self {
            FamilyEntry::Fixed(v) => (v, v),
            FamilyEntry::Range { lo, hi } => (lo, hi),
        }
    }
}

/// A set of packing sequences fixing a prefix, with at most one entry
/// allowed to range over an interval. Written `1,2,[4-7],7`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct SequenceFamily {
    prefix: Vec<FamilyEntry>,
}

impl SequenceFamily {
    pub fn new(prefix: Vec<FamilyEntry>) -> Result<Self> {
        if prefix.is_empty() {
            return Err(Error::InvalidFamily("empty prefix".into()));
        }
        let ranged = prefix
            .iter()
            .filter(|e| matches!(e, FamilyEntry::Range { .. }))
            .count();
        if ranged > 1 {
            return Err(Error::InvalidFamily("at most one entry may range".into()));
        }
        for (i, e) in prefix.iter().enumerate() {
            let (lo, hi) = e.bounds();
            if lo == 0 {
                return Err(Error::InvalidFamily(format!("entry {} is zero", i + 1)));
            }
            if lo > hi {
                return Err(Error::InvalidFamily(format!(
                    "empty range [{lo}-{hi}] at entry {}",
                    i + 1
                )));
            }
        }
        for (i, w) in prefix.windows(2).enumerate() {
            let (lo_a, hi_a) = w[0].bounds();
            let (lo_b, hi_b) = w[1].bounds();
            // Every member must be nondecreasing: the ranged entry has to fit
            // between its fixed neighbours.
            if hi_a > lo_b || lo_a > hi_b {
                return Err(Error::InvalidFamily(format!(
                    "entries {} and {} cannot be nondecreasing",
                    i + 1,
                    i + 2
                )));
            }
        }
        Ok(Self { prefix })
    }

    pub fn prefix(&self) -> &[FamilyEntry] {
        &self.prefix
    }

    /// Every member restricted to the constrained prefix, each with a
    /// constant tail.
    pub fn enumerate(&self) -> Vec<PackingSequence> {
        let ranged = self.prefix.iter().enumerate().find_map(|(i, e)| match e {
            FamilyEntry::Range { lo, hi } => Some((i, *lo, *hi)),
            FamilyEntry::Fixed(_) => None,
        });
        let base: Vec<u32> = self.prefix.iter().map(|e| e.bounds().0).collect();
        match ranged {
            None => vec![PackingSequence::new(base).expect("validated family")],
            Some((idx, lo, hi)) => (lo..=hi)
                .map(|v| {
                    let mut entries = base.clone();
                    entries[idx] = v;
                    PackingSequence::new(entries).expect("validated family")
                })
                .collect(),
        }
    }

    /// The first (smallest) member.
    pub fn representative(&self) -> PackingSequence {
        self.enumerate().swap_remove(0)
    }

    /// Whether `seq` agrees with the family on its constrained prefix.
    pub fn contains(&self, seq: &PackingSequence) -> bool {
        self.prefix.iter().enumerate().all(|(i, e)| {
            let (lo, hi) = e.bounds();
            (lo..=hi).contains(&seq.entry(i + 1))
        })
    }
}

impl fmt::Display for SequenceFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.prefix.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            match e {
                FamilyEntry::Fixed(v) => write!(f, "{v}")?,
                FamilyEntry::Range { lo, hi } => write!(f, "[{lo}-{hi}]")?,
            }
        }
        Ok(())
    }
}

impl FromStr for SequenceFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let prefix = s
            .split(',')
            .map(|tok| {
                let tok = tok.trim();
                if let Some(inner) = tok.strip_prefix('[').and_then(|t| t.strip_suffix(']')) {
                    let (lo, hi) = inner.split_once('-').ok_or_else(|| {
                        Error::InvalidFamily(format!("range {tok:?} needs the form [lo-hi]"))
                    })?;
                    Ok(FamilyEntry::Range {
                        lo: parse_entry(lo).map_err(Error::InvalidFamily)?,
                        hi: parse_entry(hi).map_err(Error::InvalidFamily)?,
                    })
                } else {
                    parse_entry(tok)
                        .map(FamilyEntry::Fixed)
                        .map_err(Error::InvalidFamily)
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(prefix)
    }
}

impl TryFrom<String> for SequenceFamily {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<SequenceFamily> for String {
    fn from(f: SequenceFamily) -> Self {
        f.to_string()
    }
}

fn parse_entry(tok: &str) -> std::result::Result<u32, String> {
    let tok = tok.trim();
    tok.parse::<u32>()
        .map_err(|e| format!("bad entry {tok:?}: {e}"))
}

fn write_list<'a>(f: &mut fmt::Formatter<'_>, items: impl Iterator<Item = &'a u32>) -> fmt::Result {
    for (i, v) in items.enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{v}")?;
    }
    Ok(())
}
