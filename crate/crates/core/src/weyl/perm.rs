use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::{Error, Result};

/// An element of the symmetric group `S_n` in one-line notation.
///
/// The window stores `w(1), …, w(n)` with 1-based values.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    window: Vec<usize>,
}

impl Permutation {
    pub fn from_window(window: Vec<usize>) -> Result<Self> {
        let n = window.len();
        let mut seen = alloc::vec![false; n + 1];
        for &v in &window {
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidPermutation(join(&window)));
            }
            seen[v] = true;
        }
        Ok(Self { window })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            window: (1..=n).collect(),
        }
    }

    /// The simple transposition `s_i` exchanging `i` and `i + 1`.
    pub fn simple(n: usize, i: usize) -> Result<Self> {
        if i == 0 || i >= n {
            return Err(Error::IndexOutOfRange {
                index: i,
                max: n.saturating_sub(1),
            });
        }
        let mut w = Self::identity(n);
        w.window.swap(i - 1, i);
        Ok(w)
    }

    /// The order-reversing permutation `w0`.
    pub fn longest(n: usize) -> Self {
        Self {
            window: (1..=n).rev().collect(),
        }
    }

    /// Product of simple transpositions `s_{i_1} ⋯ s_{i_m}`.
    pub fn from_word(n: usize, word: &[usize]) -> Result<Self> {
        let mut w = Self::identity(n);
        for &i in word {
            w = w.compose(&Self::simple(n, i)?);
        }
        Ok(w)
    }

    pub fn n(&self) -> usize {
        self.window.len()
    }

    pub fn window(&self) -> &[usize] {
        &self.window
    }

    /// `w(i)` for 1-based `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.window[i - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.window.iter().enumerate().all(|(k, &v)| v == k + 1)
    }

    /// `self ∘ other`, i.e. `i ↦ self(other(i))`.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.n(), other.n(), "composition across different S_n");
        Self {
            window: other.window.iter().map(|&v| self.window[v - 1]).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut window = alloc::vec![0; self.n()];
        for (k, &v) in self.window.iter().enumerate() {
            window[v - 1] = k + 1;
        }
        Self { window }
    }

    /// Number of inversions, which is the Coxeter length.
    pub fn length(&self) -> usize {
        let w = &self.window;
        let mut count = 0;
        for a in 0..w.len() {
            for b in a + 1..w.len() {
                if w[a] > w[b] {
                    count += 1;
                }
            }
        }
        count
    }

    /// `ℓ(w s_i) < ℓ(w)`.
    pub fn has_right_descent(&self, i: usize) -> bool {
        self.window[i - 1] > self.window[i]
    }

    /// `ℓ(s_i w) < ℓ(w)`.
    pub fn has_left_descent(&self, i: usize) -> bool {
        let inv = self.inverse();
        inv.window[i - 1] > inv.window[i]
    }

    /// `w · t_{ab}` for the transposition of positions `a < b`.
    pub fn swap_positions(&self, a: usize, b: usize) -> Self {
        let mut window = self.window.clone();
        window.swap(a - 1, b - 1);
        Self { window }
    }

    /// All `v` with `self ⋖ v` in Bruhat order.
    pub fn upper_covers(&self) -> Vec<Self> {
        let w = &self.window;
        let n = w.len();
        let mut out = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                if w[a] < w[b] && !(a + 1..b).any(|k| w[a] < w[k] && w[k] < w[b]) {
                    out.push(self.swap_positions(a + 1, b + 1));
                }
            }
        }
        out
    }

    /// All `u` with `u ⋖ self` in Bruhat order.
    pub fn lower_covers(&self) -> Vec<Self> {
        let w = &self.window;
        let n = w.len();
        let mut out = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                if w[a] > w[b] && !(a + 1..b).any(|k| w[a] > w[k] && w[k] > w[b]) {
                    out.push(self.swap_positions(a + 1, b + 1));
                }
            }
        }
        out
    }

    /// Reduced words of `w`, at most `cap` of them.
    pub fn reduced_words(&self, cap: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut suffix = Vec::with_capacity(self.length());
        collect_reduced_words(self, &mut suffix, &mut out, cap);
        out
    }

    /// The lexicographically smallest reduced word.
    pub fn lex_min_reduced_word(&self) -> Vec<usize> {
        let mut word = Vec::with_capacity(self.length());
        let mut w = self.clone();
        while !w.is_identity() {
            let i = (1..w.n())
                .find(|&i| w.has_left_descent(i))
                .expect("non-identity permutation has a left descent");
            word.push(i);
            w = Self::simple(w.n(), i)
                .expect("descent index is in range")
                .compose(&w);
        }
        word
    }

    /// Every permutation of `S_n` in lexicographic window order.
    pub fn all(n: usize) -> Vec<Self> {
        let mut out = Vec::new();
        let mut window: Vec<usize> = (1..=n).collect();
        loop {
            out.push(Self {
                window: window.clone(),
            });
            if !next_permutation(&mut window) {
                break;
            }
        }
        out
    }
}

fn collect_reduced_words(
    w: &Permutation,
    suffix: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
    cap: usize,
) {
    if out.len() >= cap {
        return;
    }
    if w.is_identity() {
        out.push(suffix.iter().rev().copied().collect());
        return;
    }
    for i in 1..w.n() {
        if w.has_right_descent(i) {
            suffix.push(i);
            collect_reduced_words(&w.swap_positions(i, i + 1), suffix, out, cap);
            suffix.pop();
            if out.len() >= cap {
                return;
            }
        }
    }
}

fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

fn join(values: &[usize]) -> String {
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join(&self.window))
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let window = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad permutation entry {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_window(window)
    }
}
