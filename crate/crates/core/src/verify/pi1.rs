use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::weyl::{gamma, longest_elements, FlagType, Permutation};

/// Predicted rank of the fundamental group of the open Richardson variety
/// `X̊^{w0}_{wP}`: `|Γ(w0 wP)|`.
pub fn pi1_prediction(flag: &FlagType) -> usize {
    let (w0, wp) = longest_elements(flag);
    gamma(&w0.compose(&wp)).len()
}

/// One row of the rank table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pi1Row {
    pub v: Permutation,
    /// Lexicographically smallest reduced word.
    pub word: Vec<usize>,
    pub gamma: BTreeSet<usize>,
    pub rank: usize,
}

/// `Γ(v)` and the predicted rank `|Γ(v)|` for every `v ∈ S_n`, ordered by
/// length and then by reduced word.
pub fn pi1_table(n: usize) -> Vec<Pi1Row> {
    let mut rows: Vec<Pi1Row> = Permutation::all(n)
        .into_iter()
        .map(|v| {
            let g = gamma(&v);
            Pi1Row {
                word: v.lex_min_reduced_word(),
                rank: g.len(),
                gamma: g,
                v,
            }
        })
        .collect();
    rows.sort_by(|x, y| (x.word.len(), &x.word).cmp(&(y.word.len(), &y.word)));
    rows
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn predictions() {
        assert_eq!(pi1_prediction(&FlagType::new(4, vec![2]).unwrap()), 3);
        assert_eq!(pi1_prediction(&FlagType::complete(5).unwrap()), 4);
    }

    #[test]
    fn s3_table() {
        let t = pi1_table(3);
        let words: Vec<_> = t.iter().map(|r| r.word.clone()).collect();
        assert_eq!(
            words,
            vec![vec![], vec![1], vec![2], vec![1, 2], vec![2, 1], vec![1, 2, 1]]
        );
        let ranks: Vec<_> = t.iter().map(|r| r.rank).collect();
        assert_eq!(ranks, vec![0, 1, 1, 2, 2, 2]);
    }
}
