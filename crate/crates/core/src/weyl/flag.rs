use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;
use core::ops::RangeInclusive;
use core::str::FromStr;

use crate::{Error, Result};

/// The type `n•` of a partial flag variety `Fl(n•; n)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FlagType {
    n: usize,
    steps: Vec<usize>,
}

impl FlagType {
    /// Requires `1 ≤ n_1 < … < n_r < n` with `r ≥ 1`.
    pub fn new(n: usize, steps: Vec<usize>) -> Result<Self> {
        if steps.is_empty() {
            return Err(Error::InvalidFlag("no steps given".into()));
        }
        if n > 64 {
            return Err(Error::InvalidFlag(format!("n = {n} exceeds 64")));
        }
        let mut prev = 0;
        for &s in &steps {
            if s <= prev || s >= n {
                return Err(Error::InvalidFlag(format!(
                    "steps {steps:?} are not strictly increasing inside 1..{n}"
                )));
            }
            prev = s;
        }
        Ok(Self { n, steps })
    }

    /// The complete flag variety `Fl(1, 2, …, n−1; n)`.
    pub fn complete(n: usize) -> Result<Self> {
        Self::new(n, (1..n).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn steps(&self) -> &[usize] {
        &self.steps
    }

    pub fn r(&self) -> usize {
        self.steps.len()
    }

    /// `n_t` with the conventions `n_0 = 0` and `n_{r+1} = n`.
    pub fn step(&self, t: usize) -> usize {
        match t {
            0 => 0,
            t if t <= self.r() => self.steps[t - 1],
            _ => self.n,
        }
    }

    /// Block sizes `a_1, …, a_{r+1}`.
    pub fn block_sizes(&self) -> Vec<usize> {
        (1..=self.r() + 1)
            .map(|t| self.step(t) - self.step(t - 1))
            .collect()
    }

    /// Position blocks `(n_{t−1}, n_t]` for `t = 1..=r+1`.
    pub fn blocks(&self) -> Vec<RangeInclusive<usize>> {
        (1..=self.r() + 1)
            .map(|t| self.step(t - 1) + 1..=self.step(t))
            .collect()
    }

    pub fn is_step(&self, i: usize) -> bool {
        self.steps.binary_search(&i).is_ok()
    }

    /// 1-based position of `i` among the steps.
    pub fn step_index(&self, i: usize) -> Option<usize> {
        self.steps.binary_search(&i).ok().map(|k| k + 1)
    }

    /// Indices of the simple roots in `Δ_P`, i.e. `i ∉ n•`.
    pub fn parabolic_roots(&self) -> Vec<usize> {
        (1..self.n).filter(|&i| !self.is_step(i)).collect()
    }

    /// Every flag type of `S_n`, ordered by the bitmask of its steps.
    pub fn all(n: usize) -> Vec<Self> {
        if n < 2 {
            return Vec::new();
        }
        (1u64..(1u64 << (n - 1)))
            .map(|mask| {
                let steps = (1..n).filter(|&i| mask & (1 << (i - 1)) != 0).collect();
                Self { n, steps }
            })
            .collect()
    }
}

impl fmt::Display for FlagType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let steps: Vec<_> = self.steps.iter().map(|s| s.to_string()).collect();
        write!(f, "n={};steps={}", self.n, steps.join(","))
    }
}

/// Parses `"n=7;steps=3,6"`.
impl FromStr for FlagType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad flag type {s:?}"));
        let (n_part, steps_part) = s.split_once(';').ok_or_else(bad)?;
        let n = n_part
            .trim()
            .strip_prefix("n=")
            .ok_or_else(bad)?
            .parse()
            .map_err(|_| bad())?;
        let steps = parse_steps(steps_part.trim().strip_prefix("steps=").ok_or_else(bad)?)?;
        Self::new(n, steps)
    }
}

/// Parses a comma-separated list of steps such as `"3,6"`.
pub fn parse_steps(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad step {t:?}")))
        })
        .collect()
}
