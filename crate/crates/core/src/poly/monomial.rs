use alloc::vec::Vec;
use core::cmp::Ordering;

use super::VarId;

/// A power product, stored as `(variable, exponent)` pairs sorted by variable
/// with no zero exponents.
///
/// `Ord` is the graded lexicographic order in which smaller [`VarId`]s are
/// larger variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    powers: Vec<(VarId, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn var(v: VarId) -> Self {
        Self {
            powers: alloc::vec![(v, 1)],
        }
    }

    /// Builds a monomial from arbitrary pairs, merging repeats and dropping
    /// zero exponents.
    pub fn from_powers<I: IntoIterator<Item = (VarId, u32)>>(powers: I) -> Self {
        let mut powers: Vec<(VarId, u32)> = powers.into_iter().filter(|p| p.1 > 0).collect();
        powers.sort_unstable_by_key(|p| p.0);
        let mut merged: Vec<(VarId, u32)> = Vec::with_capacity(powers.len());
        for (v, e) in powers {
            match merged.last_mut() {
                Some(last) if last.0 == v => last.1 += e,
                _ => merged.push((v, e)),
            }
        }
        Self { powers: merged }
    }

    pub fn powers(&self) -> &[(VarId, u32)] {
        &self.powers
    }

    pub fn is_one(&self) -> bool {
        self.powers.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.powers.iter().map(|p| p.1).sum()
    }

    pub fn exponent(&self, v: VarId) -> u32 {
        self.powers
            .binary_search_by(|p| p.0.cmp(&v))
            .map(|k| self.powers[k].1)
            .unwrap_or(0)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (a, b) = (&self.powers, &other.powers);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Self { powers: out }
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Self) -> Option<Self> {
        let mut out = Vec::with_capacity(self.powers.len());
        let mut j = 0;
        for &(v, e) in &self.powers {
            let mut e = e;
            if j < other.powers.len() && other.powers[j].0 == v {
                e = e.checked_sub(other.powers[j].1)?;
                j += 1;
            } else if j < other.powers.len() && other.powers[j].0 < v {
                return None;
            }
            if e > 0 {
                out.push((v, e));
            }
        }
        (j == other.powers.len()).then_some(Self { powers: out })
    }

    /// Drops every factor of `v`.
    pub fn without(&self, v: VarId) -> Self {
        Self {
            powers: self.powers.iter().copied().filter(|p| p.0 != v).collect(),
        }
    }

    /// Greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Self {
        Self {
            powers: self
                .powers
                .iter()
                .filter_map(|&(v, e)| {
                    let f = other.exponent(v);
                    (f > 0).then_some((v, e.min(f)))
                })
                .collect(),
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        for (a, b) in self.powers.iter().zip(&other.powers) {
            if a.0 != b.0 {
                // The monomial holding the larger variable wins.
                return if a.0 < b.0 {
                    Ordering::Greater
                } else {
                    Ordering::Less
                };
            }
            if a.1 != b.1 {
                return a.1.cmp(&b.1);
            }
        }
        self.powers.len().cmp(&other.powers.len())
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
