//! Finite sets of positive integers stored as sorted disjoint intervals.
//!
//! All the part sets handled here are unions of a few inclusive integer
//! intervals (blocks of the extremal constructions, `[1,k]` prefixes,
//! singletons), so the interval representation keeps membership, prefix
//! counting and bounded iteration cheap even when the elements reach 2^32.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Inclusive interval `[lo, hi]` of positive integers, `1 <= lo <= hi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Interval {
    pub lo: u64,
    pub hi: u64,
}

impl Interval {
    pub fn len(&self) -> u64 {
        self.hi - self.lo + 1
    }
}

/// A finite set of positive integers in canonical interval form:
/// intervals sorted ascending, pairwise disjoint, with a gap of at least 2
/// between consecutive intervals (adjacent intervals are merged).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct PartSet {
    intervals: Vec<Interval>,
}

impl PartSet {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Single element `{x}`, `x >= 1`.
    pub fn singleton(x: u64) -> Result<Self> {
        Self::range(x, x)
    }

    /// Contiguous range `[lo, hi]`.
    pub fn range(lo: u64, hi: u64) -> Result<Self> {
        if lo == 0 {
            return Err(Error::InvalidParameter(
                "part set elements must be >= 1".into(),
            ));
        }
        if lo > hi {
            return Err(Error::InvalidParameter(format!(
                "empty interval [{lo},{hi}]"
            )));
        }
        Ok(Self {
            intervals: vec![Interval { lo, hi }],
        })
    }

    /// Builds a set from arbitrary (possibly overlapping, unsorted) interval
    /// endpoints, normalizing into canonical form.
    pub fn from_intervals<I>(raw: I) -> Result<Self>
    where
        I: IntoIterator<Item = (u64, u64)>,
    {
        let mut iv: Vec<Interval> = Vec::new();
        for (lo, hi) in raw {
            if lo == 0 {
                return Err(Error::InvalidParameter(
                    "part set elements must be >= 1".into(),
                ));
            }
            if lo > hi {
                return Err(Error::InvalidParameter(format!(
                    "empty interval [{lo},{hi}]"
                )));
            }
            iv.push(Interval { lo, hi });
        }
        iv.sort_by_key(|r| r.lo);
        let mut merged: Vec<Interval> = Vec::with_capacity(iv.len());
        for r in iv {
            match merged.last_mut() {
                // merge overlapping or adjacent runs (gap <= 1)
                Some(last) if r.lo <= last.hi || r.lo - 1 == last.hi => {
                    last.hi = last.hi.max(r.hi);
                }
                _ => merged.push(r),
            }
        }
        Ok(Self { intervals: merged })
    }

    pub fn from_elements<I: IntoIterator<Item = u64>>(elems: I) -> Result<Self> {
        Self::from_intervals(elems.into_iter().map(|x| (x, x)))
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    /// Number of elements.
    pub fn size(&self) -> u128 {
        self.intervals.iter().map(|r| r.len() as u128).sum()
    }

    pub fn min(&self) -> Option<u64> {
        self.intervals.first().map(|r| r.lo)
    }

    pub fn max(&self) -> Option<u64> {
        self.intervals.last().map(|r| r.hi)
    }

    /// If the set is exactly one element, returns it.
    pub fn as_singleton(&self) -> Option<u64> {
        match self.intervals.as_slice() {
            [r] if r.lo == r.hi => Some(r.lo),
            _ => None,
        }
    }

    pub fn contains(&self, x: u64) -> bool {
        self.intervals
            .binary_search_by(|r| {
                if r.hi < x {
                    std::cmp::Ordering::Less
                } else if r.lo > x {
                    std::cmp::Ordering::Greater
                } else {
                    std::cmp::Ordering::Equal
                }
            })
            .is_ok()
    }

    /// `|A ∩ [1, n]|`, exact.
    pub fn prefix_count(&self, n: u64) -> u64 {
        let mut total = 0u64;
        for r in &self.intervals {
            if r.lo > n {
                break;
            }
            total += r.hi.min(n) - r.lo + 1;
        }
        total
    }

    /// `A ∩ [lo, hi]` as a new set.
    pub fn intersect_range(&self, lo: u64, hi: u64) -> Self {
        let mut out = Vec::new();
        if lo <= hi && lo >= 1 {
            for r in &self.intervals {
                let a = r.lo.max(lo);
                let b = r.hi.min(hi);
                if a <= b {
                    out.push(Interval { lo: a, hi: b });
                }
            }
        }
        Self { intervals: out }
    }

    pub fn union(&self, other: &Self) -> Self {
        let raw = self
            .intervals
            .iter()
            .chain(other.intervals.iter())
            .map(|r| (r.lo, r.hi));
        Self::from_intervals(raw).expect("canonical inputs")
    }

    /// Ascending elements of `A ∩ [1, n]`.
    pub fn iter_up_to(&self, n: u64) -> impl Iterator<Item = u64> + '_ {
        self.intervals
            .iter()
            .take_while(move |r| r.lo <= n)
            .flat_map(move |r| r.lo..=r.hi.min(n))
    }
}

impl fmt::Display for PartSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.intervals.is_empty() {
            return write!(f, "(empty)");
        }
        let mut first = true;
        for r in &self.intervals {
            if !first {
                write!(f, ",")?;
            }
            first = false;
            if r.lo == r.hi {
                write!(f, "{}", r.lo)?;
            } else {
                write!(f, "{}-{}", r.lo, r.hi)?;
            }
        }
        Ok(())
    }
}

/// Parses the CLI set literal syntax: comma-separated items, each `x` or
/// `a-b` (inclusive range); whitespace is ignored.
impl FromStr for PartSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let cleaned: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if cleaned.is_empty() {
            return Ok(Self::empty());
        }
        let mut raw = Vec::new();
        for item in cleaned.split(',') {
            if item.is_empty() {
                return Err(Error::ParseSet {
                    input: s.to_string(),
                    reason: "empty item".into(),
                });
            }
            let parse_num = |t: &str| -> Result<u64> {
                t.parse::<u64>().map_err(|e| Error::ParseSet {
                    input: s.to_string(),
                    reason: format!("bad number `{t}`: {e}"),
                })
            };
            match item.split_once('-') {
                Some((a, b)) => {
                    let lo = parse_num(a)?;
                    let hi = parse_num(b)?;
                    if lo == 0 || lo > hi {
                        return Err(Error::ParseSet {
                            input: s.to_string(),
                            reason: format!("invalid range `{item}`"),
                        });
                    }
                    raw.push((lo, hi));
                }
                None => {
                    let x = parse_num(item)?;
                    if x == 0 {
                        return Err(Error::ParseSet {
                            input: s.to_string(),
                            reason: "elements must be >= 1".into(),
                        });
                    }
                    raw.push((x, x));
                }
            }
        }
        Self::from_intervals(raw)
    }
}
