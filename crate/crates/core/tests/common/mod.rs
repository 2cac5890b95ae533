//! Independent reference implementations shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeSet;

use flagdiv_core::blockdet::BlockSpec;
use flagdiv_core::poly::{Cell, Polynomial, StructuredMatrix, VarId};
use flagdiv_core::weyl::{FlagType, Permutation};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// `u ≤ v` iff some subword of a reduced word of `v` is a reduced word of `u`.
pub fn subword_leq(u: &Permutation, v: &Permutation) -> bool {
    let n = v.n();
    let word = v.reduced_words(1).remove(0);
    let target = u.length();
    let m = word.len();
    (0u32..1 << m).any(|mask| {
        if mask.count_ones() as usize != target {
            return false;
        }
        let sub: Vec<usize> = (0..m).filter(|k| mask & (1 << k) != 0).map(|k| word[k]).collect();
        let p = Permutation::from_word(n, &sub).unwrap();
        p.length() == target && &p == u
    })
}

/// Shortest element of `w W_P`, found by walking the whole coset.
pub fn shortest_in_coset(w: &Permutation, flag: &FlagType) -> Permutation {
    let n = flag.n();
    Permutation::all(n)
        .into_iter()
        .filter(|x| {
            flag.blocks()
                .iter()
                .all(|b| b.clone().all(|i| b.contains(&x.apply(i))))
        })
        .map(|x| w.compose(&x))
        .min_by_key(|p| (p.length(), p.window().to_vec()))
        .unwrap()
}

/// Leibniz expansion over all of `S_n`.
pub fn leibniz(m: &StructuredMatrix) -> Polynomial {
    let n = m.rows();
    let mut out = Polynomial::zero();
    for p in Permutation::all(n) {
        let mut term = Polynomial::constant(if p.length() % 2 == 0 { 1 } else { -1 });
        for r in 1..=n {
            term = &term * &m.get(r, p.apply(r)).to_poly();
            if term.is_zero() {
                break;
            }
        }
        out = &out + &term;
    }
    out
}

/// A square matrix with random zeros, ones and fresh variables.
pub fn random_structured(rng: &mut ChaCha8Rng, n: usize) -> StructuredMatrix {
    let mut m = StructuredMatrix::zeros(n, n);
    for r in 1..=n {
        for c in 1..=n {
            let roll: f64 = rng.gen();
            let cell = if roll < 0.3 {
                Cell::Zero
            } else if roll < 0.45 {
                Cell::One
            } else {
                Cell::Var(VarId::entry(r, c))
            };
            m.set(r, c, cell);
        }
    }
    m
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `M(i•; j•)` drawn block by block: column block `t` spans the `j_t`
/// columns counted from the right, block row `s` holds indeterminates in
/// column blocks `t ≥ s`, an identity in block `s − 1`, zeros elsewhere.
pub fn block_matrix_by_blocks(spec: &BlockSpec) -> StructuredMatrix {
    let (is, js) = (spec.row_sizes(), spec.col_sizes());
    let n: usize = is.iter().sum();
    let mut m = StructuredMatrix::zeros(n, n);
    let mut row = 0;
    for (s, &size) in is.iter().enumerate() {
        for p in 0..size {
            row += 1;
            let mut right = n;
            for (t, &width) in js.iter().enumerate() {
                let cols = right - width + 1..=right;
                for (q, c) in cols.enumerate() {
                    let cell = if t >= s {
                        Cell::Var(VarId::entry(row, c))
                    } else if t + 1 == s && p == q {
                        Cell::One
                    } else {
                        Cell::Zero
                    };
                    m.set(row, c, cell);
                }
                right -= width;
            }
        }
    }
    m
}

/// `Σ_{s<t} a_s a_t` over the block sizes of the flag.
pub fn cell_dimension(flag: &FlagType) -> usize {
    let a = flag.block_sizes();
    let mut total = 0;
    for s in 0..a.len() {
        for t in s + 1..a.len() {
            total += a[s] * a[t];
        }
    }
    total
}

pub fn indices(set: &BTreeSet<usize>) -> Vec<usize> {
    set.iter().copied().collect()
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}
