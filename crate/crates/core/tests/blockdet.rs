mod common;

use std::collections::BTreeSet;

use flagdiv_core::blockdet::*;
use flagdiv_core::poly::{determinant, Polynomial, VarId};
use flagdiv_core::verify::{McConfig, Method};
use flagdiv_core::Error;

fn spec(i: &[usize], j: &[usize]) -> BlockSpec {
    BlockSpec::new(i.to_vec(), j.to_vec()).unwrap()
}

fn e(r: usize, c: usize) -> Polynomial {
    Polynomial::var(VarId::entry(r, c))
}

#[test]
fn builder_matches_block_picture() {
    for n in 1..=6 {
        for s in all_specs(n) {
            assert_eq!(build_generic(&s), common::block_matrix_by_blocks(&s), "{s}");
        }
    }
}

#[test]
fn two_by_two_determinant() {
    // [[w, a], [b, 1]]: g = w - ab.
    let s = spec(&[1, 1], &[1, 1]);
    let g = determinant(&build_generic(&s)).unwrap();
    let (w, a, b) = (e(1, 1), e(1, 2), e(2, 1));
    assert_eq!(g, &w - &(&a * &b));
    let f = factor_top(&s).unwrap();
    assert_eq!(f, vec![a.clone(), b.clone()]);
    assert!((&f[0] * &f[1]).unit_eq(&g.top()));
    let r = analyze(&s, &McConfig::with_seed(3)).unwrap();
    assert!(r.top_shape.snd_nonzero);
    assert_eq!(r.top_snd_coprime.unwrap().method, Method::DisjointSupport);
}

#[test]
fn single_block_is_homogeneous() {
    let s = spec(&[2], &[2]);
    let r = analyze(&s, &McConfig::with_seed(3)).unwrap();
    assert!(r.top_shape.homogeneous && r.top_shape.pass);
    assert!(r.top_snd_coprime.is_none());
    assert_eq!(factor_top(&s).unwrap(), vec![determinant(&build_generic(&s)).unwrap()]);
}

#[test]
fn uneven_blocks_keep_all_variables() {
    let s = spec(&[1, 2], &[2, 1]);
    assert!(upsilon(&s).is_empty());
    let r = analyze(&s, &McConfig::with_seed(3)).unwrap();
    assert!(r.vars_in_top.pass);
    let top = determinant(&build_generic(&s)).unwrap().top();
    for k in 1..=2 {
        assert!(block_vars(&s, k).unwrap().is_subset(&top.variables()));
    }
}

#[test]
fn three_unit_blocks() {
    let s = spec(&[1, 1, 1], &[1, 1, 1]);
    assert_eq!(upsilon(&s), BTreeSet::from([1, 2]));
    assert_eq!(anti_diagonal_submatrix(&s, 1).unwrap().variables(), BTreeSet::from([VarId::entry(2, 2)]));
    let f = factor_top(&s).unwrap();
    assert_eq!(f, vec![e(1, 3), e(2, 2), e(3, 1)]);
}

#[test]
fn errors() {
    assert_eq!(anti_diagonal_submatrix(&spec(&[1, 2], &[2, 1]), 0).unwrap_err(), Error::EmptyUpsilon);
    assert!(matches!(
        anti_diagonal_submatrix(&spec(&[1, 1], &[1, 1]), 2),
        Err(Error::IndexOutOfRange { .. })
    ));
    let zero = all_specs(5)
        .into_iter()
        .find(|s| determinant(&build_generic(s)).unwrap().is_zero())
        .expect("some spec of size 5 is singular");
    assert_eq!(factor_top(&zero).unwrap_err(), Error::ZeroDeterminant);
    assert!(!passes_screen(&zero).unwrap());
}

#[test]
fn product_identity_small_sweep() {
    for n in 1..=6 {
        for s in all_specs(n) {
            if !passes_screen(&s).unwrap() {
                continue;
            }
            let g = determinant(&build_generic(&s)).unwrap();
            let f = factor_top(&s).unwrap();
            let prod = f.iter().fold(Polynomial::one(), |acc, p| &acc * p);
            assert!(prod.unit_eq(&g.top()), "{s}");
            let mut seen = BTreeSet::new();
            assert!(f.iter().all(|p| p.variables().into_iter().all(|v| seen.insert(v))), "{s}");
            let expected = if upsilon(&s).is_empty() { 1 } else { upsilon(&s).len() + 1 };
            assert_eq!(f.len(), expected);
        }
    }
}

#[test]
fn reports_pass_up_to_six() {
    for n in 1..=6 {
        for (k, s) in all_specs(n).into_iter().enumerate() {
            if passes_screen(&s).unwrap() {
                let r = analyze(&s, &McConfig::with_seed(17).with_stream(k as u64)).unwrap();
                assert!(r.passed(), "{s}: {r:?}");
            }
        }
    }
}

#[test]
fn trimming_and_recognition() {
    for n in 1..=5 {
        for s in all_specs(n) {
            let m = build_generic(&s);
            assert_eq!(trim_unit_lines(&m), m);
            assert_eq!(recognize(&m).as_ref(), Some(&s));
        }
    }
}
