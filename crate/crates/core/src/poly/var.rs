use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use crate::{Error, Result};

/// A subset of `{1, …, 64}` stored as a bitmask.
///
/// Ordered lexicographically as increasing sequences, a proper prefix
/// comparing smaller.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct IndexSet(u64);

impl IndexSet {
    pub const EMPTY: Self = Self(0);

    pub fn from_bits(bits: u64) -> Self {
        Self(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    /// From 1-based indices, rejecting repeats and indices outside `1..=64`.
    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Result<Self> {
        let mut bits = 0u64;
        for i in indices {
            if i == 0 || i > 64 {
                return Err(Error::InvalidPlucker(format!("index {i} outside 1..=64")));
            }
            let b = 1u64 << (i - 1);
            if bits & b != 0 {
                return Err(Error::InvalidPlucker(format!("repeated index {i}")));
            }
            bits |= b;
        }
        Ok(Self(bits))
    }

    /// `(a, b] = {a+1, …, b}`.
    pub fn open_closed(a: usize, b: usize) -> Self {
        Self::range(a + 1, b)
    }

    /// `[a, b) = {a, …, b−1}`.
    pub fn closed_open(a: usize, b: usize) -> Self {
        Self::range(a, b.saturating_sub(1))
    }

    /// `[1, m]`.
    pub fn prefix(m: usize) -> Self {
        Self::range(1, m)
    }

    fn range(lo: usize, hi: usize) -> Self {
        let lo = lo.max(1);
        if hi < lo {
            return Self::EMPTY;
        }
        let upper = if hi >= 64 { u64::MAX } else { (1u64 << hi) - 1 };
        let lower = (1u64 << (lo - 1)) - 1;
        Self(upper & !lower)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, i: usize) -> bool {
        (1..=64).contains(&i) && self.0 & (1u64 << (i - 1)) != 0
    }

    pub fn union(self, other: Self) -> Self {
        Self(self.0 | other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        Self(self.0 & !other.0)
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn max(self) -> Option<usize> {
        (self.0 != 0).then(|| 64 - self.0.leading_zeros() as usize)
    }

    pub fn sum(self) -> usize {
        self.iter().sum()
    }

    /// Elements in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        core::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let i = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(i + 1)
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// All `k`-subsets of `self`, in lexicographic order.
    pub fn subsets_of_size(self, k: usize) -> Vec<Self> {
        let elems = self.to_vec();
        let mut out = Vec::new();
        let mut chosen = Vec::with_capacity(k);
        choose(&elems, k, 0, &mut chosen, &mut out);
        out
    }

    /// `"134"` when every index is a single digit and `wide` is false,
    /// otherwise `"1,3,10"`.
    pub fn label(self, wide: bool) -> String {
        let elems: Vec<String> = self.iter().map(|i| i.to_string()).collect();
        if wide || self.max().is_some_and(|m| m > 9) {
            elems.join(",")
        } else {
            elems.concat()
        }
    }
}

fn choose(elems: &[usize], k: usize, from: usize, chosen: &mut Vec<usize>, out: &mut Vec<IndexSet>) {
    if chosen.len() == k {
        out.push(IndexSet::from_indices(chosen.iter().copied()).expect("distinct indices"));
        return;
    }
    for idx in from..elems.len() {
        if elems.len() - idx < k - chosen.len() {
            break;
        }
        chosen.push(elems[idx]);
        choose(elems, k, idx + 1, chosen, out);
        chosen.pop();
    }
}

impl Ord for IndexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        let mut a = self.iter();
        let mut b = other.iter();
        loop {
            match (a.next(), b.next()) {
                (None, None) => return Ordering::Equal,
                (None, Some(_)) => return Ordering::Less,
                (Some(_), None) => return Ordering::Greater,
                (Some(x), Some(y)) if x != y => return x.cmp(&y),
                _ => {}
            }
        }
    }
}

impl PartialOrd for IndexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial variable.
///
/// Variables are ordered entries first by `(row, col)`, then the
/// homogenizer, then Plücker coordinates by size of the index set and
/// lexicographically within a size. Smaller variables rank higher in the
/// monomial order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VarId {
    /// Matrix entry with 1-based row and column.
    Entry { row: u16, col: u16 },
    /// The homogenizing variable `z`.
    Homogenizer,
    /// Plücker coordinate `x_J`.
    Plucker(IndexSet),
}

impl Ord for VarId {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Self::Plucker(a), Self::Plucker(b)) => (a.len(), a).cmp(&(b.len(), b)),
            _ => self.rank().cmp(&other.rank()).then_with(|| match (self, other) {
                (Self::Entry { row: r1, col: c1 }, Self::Entry { row: r2, col: c2 }) => {
                    (r1, c1).cmp(&(r2, c2))
                }
                _ => Ordering::Equal,
            }),
        }
    }
}

impl PartialOrd for VarId {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl VarId {
    fn rank(&self) -> u8 {
        match self {
            Self::Entry { .. } => 0,
            Self::Homogenizer => 1,
            Self::Plucker(_) => 2,
        }
    }

    pub fn entry(row: usize, col: usize) -> Self {
        Self::Entry {
            row: row as u16,
            col: col as u16,
        }
    }

    /// Text form; `wide` forces comma-separated Plücker indices.
    pub fn label(&self, wide: bool) -> String {
        match self {
            Self::Entry { row, col } => format!("a{{{row},{col}}}"),
            Self::Homogenizer => "z".into(),
            Self::Plucker(set) => format!("x_{{{}}}", set.label(wide)),
        }
    }
}

impl fmt::Display for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label(false))
    }
}

impl FromStr for VarId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad variable {s:?}"));
        if s == "z" {
            return Ok(Self::Homogenizer);
        }
        if let Some(inner) = s.strip_prefix("a{").and_then(|r| r.strip_suffix('}')) {
            let (r, c) = inner.split_once(',').ok_or_else(bad)?;
            let row: u16 = r.trim().parse().map_err(|_| bad())?;
            let col: u16 = c.trim().parse().map_err(|_| bad())?;
            return Ok(Self::Entry { row, col });
        }
        if let Some(inner) = s.strip_prefix("x_{").and_then(|r| r.strip_suffix('}')) {
            let indices: Vec<usize> = if inner.contains(',') {
                inner
                    .split(',')
                    .map(|t| t.trim().parse().map_err(|_| bad()))
                    .collect::<Result<_>>()?
            } else {
                inner
                    .chars()
                    .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad))
                    .collect::<Result<_>>()?
            };
            return IndexSet::from_indices(indices).map(Self::Plucker);
        }
        Err(bad())
    }
}
