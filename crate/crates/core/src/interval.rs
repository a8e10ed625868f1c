use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A nonempty run of consecutive positions `[lo, hi]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Interval {
    lo: usize,
    hi: usize,
}

impl Interval {
    pub fn new(lo: usize, hi: usize) -> Result<Self> {
        if lo == 0 || lo > hi {
            return Err(Error::InvalidInput(format!("empty or invalid interval [{lo}, {hi}]")));
        }
        Ok(Self { lo, hi })
    }

    /// `[lo, hi]`, or `None` when it would be empty.
    pub fn try_new(lo: usize, hi: usize) -> Option<Self> {
        (lo >= 1 && lo <= hi).then_some(Self { lo, hi })
    }

    pub fn lo(self) -> usize {
        self.lo
    }

    pub fn hi(self) -> usize {
        self.hi
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(self) -> usize {
        self.hi - self.lo + 1
    }

    pub fn contains(self, v: usize) -> bool {
        self.lo <= v && v <= self.hi
    }

    pub fn contains_interval(self, other: Interval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    pub fn iter(self) -> std::ops::RangeInclusive<usize> {
        self.lo..=self.hi
    }

    /// Shifts both ends by `delta` positions to the right.
    pub fn shifted(self, delta: usize) -> Self {
        Self {
            lo: self.lo + delta,
            hi: self.hi + delta,
        }
    }

    /// Splits into `len / size` consecutive blocks of `size` vertices, the
    /// last one absorbing the remainder. Empty when `len < size`.
    pub fn blocks(self, size: usize) -> Vec<Interval> {
        assert!(size >= 1);
        let count = self.len() / size;
        (0..count)
            .map(|t| {
                let lo = self.lo + t * size;
                let hi = if t + 1 == count { self.hi } else { lo + size - 1 };
                Interval { lo, hi }
            })
            .collect()
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}
