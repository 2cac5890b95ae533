use alloc::collections::{BTreeSet, VecDeque};
use alloc::string::ToString;
use alloc::vec::Vec;

use super::{FlagType, Permutation};
use crate::{Error, Result};

/// `(w0, wP)` for the parabolic subgroup of `flag`.
pub fn longest_elements(flag: &FlagType) -> (Permutation, Permutation) {
    let n = flag.n();
    let mut window = Vec::with_capacity(n);
    for block in flag.blocks() {
        window.extend(block.rev());
    }
    let wp = Permutation::from_window(window).expect("block reversal is a bijection");
    (Permutation::longest(n), wp)
}

/// `w0 wP`, the longest minimal coset representative.
pub fn w0_wp(flag: &FlagType) -> Permutation {
    let (w0, wp) = longest_elements(flag);
    w0.compose(&wp)
}

/// Bruhat order via prefix dominance: `u ≤ v` iff for every `k` the sorted
/// values `u(1..k)` are entrywise at most the sorted values `v(1..k)`.
pub fn bruhat_leq(u: &Permutation, v: &Permutation) -> Result<bool> {
    if u.n() != v.n() {
        return Err(Error::SizeMismatch(u.n(), v.n()));
    }
    Ok(dominated(u, v))
}

fn dominated(u: &Permutation, v: &Permutation) -> bool {
    let mut pu: Vec<usize> = Vec::with_capacity(u.n());
    let mut pv: Vec<usize> = Vec::with_capacity(v.n());
    for (&a, &b) in u.window().iter().zip(v.window()) {
        let at = pu.partition_point(|&x| x < a);
        pu.insert(at, a);
        let bt = pv.partition_point(|&x| x < b);
        pv.insert(bt, b);
        if pu.iter().zip(&pv).any(|(x, y)| x > y) {
            return false;
        }
    }
    true
}

fn strictly_below(u: &Permutation, v: &Permutation) -> bool {
    u != v && dominated(u, v)
}

/// Whether `w` lies in `W^P`: its window increases inside every position block.
pub fn is_min_coset_rep(w: &Permutation, flag: &FlagType) -> bool {
    flag.blocks().into_iter().all(|block| {
        let vals = &w.window()[*block.start() - 1..*block.end()];
        vals.windows(2).all(|p| p[0] < p[1])
    })
}

/// `pr_P(w)`: the minimal-length element of `w W_P`.
pub fn coset_rep(w: &Permutation, flag: &FlagType) -> Permutation {
    let mut window = w.window().to_vec();
    for block in flag.blocks() {
        window[*block.start() - 1..*block.end()].sort_unstable();
    }
    Permutation::from_window(window).expect("sorting inside blocks keeps a bijection")
}

/// `u ≤_P v`: `v` is reached from `u` by Bruhat covers that strictly increase
/// `pr_P`. Breadth-first search inside the interval `[u, v]`.
pub fn p_bruhat_leq(u: &Permutation, v: &Permutation, flag: &FlagType) -> Result<bool> {
    if !bruhat_leq(u, v)? {
        return Ok(false);
    }
    if u.n() != flag.n() {
        return Err(Error::SizeMismatch(u.n(), flag.n()));
    }
    if u == v {
        return Ok(true);
    }
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(u.clone());
    queue.push_back(u.clone());
    while let Some(x) = queue.pop_front() {
        let px = coset_rep(&x, flag);
        for y in x.upper_covers() {
            if seen.contains(&y) || !dominated(&y, v) {
                continue;
            }
            if !strictly_below(&px, &coset_rep(&y, flag)) {
                continue;
            }
            if &y == v {
                return Ok(true);
            }
            seen.insert(y.clone());
            queue.push_back(y);
        }
    }
    Ok(false)
}

/// `Γ(v) = {i | s_i ≤ v}` via `s_i ≤ v ⇔ v([i]) ≠ [i]`.
pub fn gamma(v: &Permutation) -> BTreeSet<usize> {
    let mut out = BTreeSet::new();
    let mut max_prefix = 0;
    for i in 1..v.n() {
        max_prefix = max_prefix.max(v.apply(i));
        if max_prefix > i {
            out.insert(i);
        }
    }
    out
}

/// Elements adjacent to the ends of the P-Bruhat interval `[id, w0 wP]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryElements {
    /// `u` with `id ⋖ u ≤_P w0 wP`.
    pub atoms: BTreeSet<Permutation>,
    /// `v` with `id ≤_P v ⋖ w0 wP`.
    pub coatoms: BTreeSet<Permutation>,
}

/// Enumerates the atoms and coatoms of the P-Bruhat interval by brute force.
pub fn boundary_p_elements(flag: &FlagType) -> BoundaryElements {
    let n = flag.n();
    let top = w0_wp(flag);
    let id = Permutation::identity(n);
    let atoms = id
        .upper_covers()
        .into_iter()
        .filter(|u| p_bruhat_leq(u, &top, flag).expect("same n"))
        .collect();
    let coatoms = top
        .lower_covers()
        .into_iter()
        .filter(|v| p_bruhat_leq(&id, v, flag).expect("same n"))
        .collect();
    BoundaryElements { atoms, coatoms }
}

/// The closed forms `{s_α | α ∈ Δ}` and `{w0 s_α wP | α ∉ Δ_P}`.
pub fn boundary_closed_forms(flag: &FlagType) -> BoundaryElements {
    let n = flag.n();
    let (w0, wp) = longest_elements(flag);
    let atoms = (1..n)
        .map(|i| Permutation::simple(n, i).expect("in range"))
        .collect();
    let coatoms = flag
        .steps()
        .iter()
        .map(|&i| {
            w0.compose(&Permutation::simple(n, i).expect("in range"))
                .compose(&wp)
        })
        .collect();
    BoundaryElements { atoms, coatoms }
}

/// Checks that every suffix of every reduced word of `w ∈ W^P` (at most
/// `cap` words) is again in `W^P` and reduced.
pub fn check_suffix_closure(w: &Permutation, flag: &FlagType, cap: usize) -> Result<bool> {
    if w.n() != flag.n() {
        return Err(Error::SizeMismatch(w.n(), flag.n()));
    }
    if !is_min_coset_rep(w, flag) {
        return Err(Error::NotMinimalCosetRep(w.to_string()));
    }
    let n = w.n();
    for word in w.reduced_words(cap) {
        for j in 0..word.len() {
            let suffix = Permutation::from_word(n, &word[j..])?;
            if suffix.length() != word.len() - j || !is_min_coset_rep(&suffix, flag) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn longest_elements_examples() {
        let (w0, wp) = longest_elements(&FlagType::new(3, vec![1, 2]).unwrap());
        assert_eq!(w0, p("3,2,1"));
        assert!(wp.is_identity());
        let (_, wp) = longest_elements(&FlagType::new(4, vec![2]).unwrap());
        assert_eq!(wp, p("2,1,4,3"));
        let flag = FlagType::new(7, vec![3, 6]).unwrap();
        let (_, wp) = longest_elements(&flag);
        assert_eq!(wp.length(), 3 + 3);
        assert_eq!(w0_wp(&flag).length(), 21 - 6);
    }

    #[test]
    fn bruhat_basics() {
        let id = Permutation::identity(3);
        for v in Permutation::all(3) {
            assert!(bruhat_leq(&id, &v).unwrap());
        }
        let s1 = Permutation::simple(3, 1).unwrap();
        let s1s2 = Permutation::from_word(3, &[1, 2]).unwrap();
        assert!(bruhat_leq(&s1, &s1s2).unwrap());
        assert!(!bruhat_leq(&s1s2, &s1).unwrap());
        assert!(bruhat_leq(&id, &Permutation::identity(4)).is_err());
    }

    #[test]
    fn coset_rep_examples() {
        let flag = FlagType::new(4, vec![2]).unwrap();
        assert_eq!(coset_rep(&p("3,1,4,2"), &flag), p("1,3,2,4"));
        assert!(coset_rep(&Permutation::identity(4), &flag).is_identity());
        assert_eq!(coset_rep(&Permutation::longest(4), &flag), w0_wp(&flag));
    }

    #[test]
    fn p_bruhat_examples() {
        let flag = FlagType::new(4, vec![2]).unwrap();
        let id = Permutation::identity(4);
        let top = w0_wp(&flag);
        for beta in flag.parabolic_roots() {
            let s = Permutation::simple(4, beta).unwrap();
            assert!(!p_bruhat_leq(&id, &s, &flag).unwrap());
            assert!(p_bruhat_leq(&s, &top, &flag).unwrap());
        }
        assert!(p_bruhat_leq(&top, &top, &flag).unwrap());
    }

    #[test]
    fn gamma_examples() {
        assert!(gamma(&Permutation::identity(3)).is_empty());
        let s1 = Permutation::simple(3, 1).unwrap();
        assert_eq!(gamma(&s1).into_iter().collect::<Vec<_>>(), vec![1]);
        let s1s2 = Permutation::from_word(3, &[1, 2]).unwrap();
        assert_eq!(gamma(&s1s2).into_iter().collect::<Vec<_>>(), vec![1, 2]);
    }

    #[test]
    fn boundary_small_cases() {
        let complete = FlagType::new(3, vec![1, 2]).unwrap();
        let b = boundary_p_elements(&complete);
        let atoms: Vec<_> = b.atoms.iter().cloned().collect();
        assert_eq!(atoms, vec![p("1,3,2"), p("2,1,3")]);

        let flag = FlagType::new(3, vec![1]).unwrap();
        let b = boundary_p_elements(&flag);
        let (w0, wp) = longest_elements(&flag);
        let expected = w0
            .compose(&Permutation::simple(3, 1).unwrap())
            .compose(&wp);
        assert_eq!(b.coatoms.into_iter().collect::<Vec<_>>(), vec![expected]);
    }

    #[test]
    fn suffix_closure_checks() {
        let flag = FlagType::new(4, vec![2]).unwrap();
        assert!(check_suffix_closure(&Permutation::identity(4), &flag, 100).unwrap());
        assert!(check_suffix_closure(&w0_wp(&flag), &flag, 100).unwrap());
        assert!(matches!(
            check_suffix_closure(&p("2,1,3,4"), &flag, 100),
            Err(Error::NotMinimalCosetRep(_))
        ));
    }
}
