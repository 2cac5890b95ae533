mod common;

use std::collections::{BTreeMap, BTreeSet};

use flagdiv_core::divisor::*;
use flagdiv_core::poly::{determinant, Cell, IndexSet, Polynomial, VarId};
use flagdiv_core::weyl::FlagType;
use num_bigint::BigInt;
use proptest::prelude::*;

fn flag(n: usize, steps: &[usize]) -> FlagType {
    FlagType::new(n, steps.to_vec()).unwrap()
}

#[test]
fn cell_matrix_shapes() {
    let m = cell_matrix(&flag(3, &[1, 2]));
    assert_eq!((m.rows(), m.cols()), (2, 3));
    assert_eq!(m.get(1, 1), Cell::Var(VarId::entry(1, 1)));
    assert_eq!(m.get(1, 3), Cell::One);
    assert_eq!(m.get(2, 2), Cell::One);
    assert_eq!(m.get(2, 3), Cell::Zero);
    for n in 2..=7 {
        for f in FlagType::all(n) {
            assert_eq!(cell_matrix(&f).count_vars(), common::cell_dimension(&f), "{f}");
        }
    }
}

#[test]
fn augmented_matrix_is_unimodular() {
    for n in 2..=6 {
        for f in FlagType::all(n) {
            let d = determinant(&augmented_matrix(&f)).unwrap();
            let c = d.as_constant().expect("constant determinant");
            assert!(c == BigInt::from(1) || c == BigInt::from(-1), "{f}");
        }
    }
}

#[test]
fn paper_strings() {
    let f = flag(7, &[3, 6]);
    assert_eq!(
        theorem_equation(&f, 5).unwrap().equation.to_text(false),
        "x_{145}*x_{234567} - x_{245}*x_{134567} + x_{345}*x_{124567}"
    );
    // Printed with the opposite overall sign to the reference string.
    let i4 = theorem_equation(&f, 4).unwrap().equation;
    assert_eq!(i4.to_text(false), "x_{134}*x_{234567} - x_{234}*x_{134567}");
    let x = |s: &str| Polynomial::var(s.parse().unwrap());
    let reference = &(&x("x_{234}") * &x("x_{134567}")) - &(&x("x_{134}") * &x("x_{234567}"));
    assert_eq!(-&i4, reference);
    let g = flag(3, &[1, 2]);
    assert_eq!(theorem_equation(&g, 1).unwrap().equation.to_text(false), "x_{1}");
    let h = flag(4, &[1, 3]);
    assert_eq!(theorem_equation(&h, 2).unwrap().equation.to_text(false), "x_{1}*x_{234} - x_{2}*x_{134}");
}

#[test]
fn cases_follow_position() {
    let f = flag(7, &[3, 6]);
    let cases: Vec<u8> = (1..7).map(|i| theorem_equation(&f, i).unwrap().case.number()).collect();
    assert_eq!(cases, vec![3, 3, 2, 5, 5, 2]);
    let g = flag(5, &[2]);
    let cases: Vec<u8> = (1..5).map(|i| theorem_equation(&g, i).unwrap().case.number()).collect();
    assert_eq!(cases, vec![3, 2, 4, 4]);
    assert_eq!(theorem_equation(&g, 3).unwrap().equation.to_text(false), "x_{23}");
    assert!(theorem_equation(&g, 0).is_err() && theorem_equation(&g, 5).is_err());
    for c in 1..=5 {
        assert_eq!(Case::from_number(c).unwrap().number(), c);
    }
    assert!(Case::from_number(6).is_err());
}

#[test]
fn between_equations_have_expected_shape() {
    for n in 3..=11 {
        for f in FlagType::all(n) {
            let steps = f.steps().to_vec();
            for w in steps.windows(2) {
                let (lo, hi) = (w[0], w[1]);
                for i in lo + 1..hi {
                    let eq = theorem_equation(&f, i).unwrap().equation;
                    let k = i - lo;
                    let l = i.min(n - hi + k);
                    assert_eq!(eq.num_terms(), common::binomial(l, k), "{f} {i}");
                    for (m, c) in eq.terms() {
                        assert!(c == &BigInt::from(1) || c == &BigInt::from(-1));
                        let sizes: BTreeSet<usize> = m
                            .powers()
                            .iter()
                            .map(|(v, e)| {
                                assert_eq!(*e, 1);
                                match v {
                                    VarId::Plucker(j) => j.len(),
                                    _ => panic!("non-Plücker variable"),
                                }
                            })
                            .collect();
                        assert_eq!(sizes, BTreeSet::from([lo, hi]));
                        assert_eq!(m.degree(), 2);
                    }
                }
            }
        }
    }
}

#[test]
fn equations_restrict_to_minors() {
    for n in 2..=6 {
        for f in FlagType::all(n) {
            for i in 1..n {
                assert!(verify_component(&f, i).unwrap(), "{f} {i}");
            }
        }
    }
    let f = flag(7, &[3, 6]);
    for i in 1..7 {
        assert!(component_sign(&f, i).unwrap().is_some());
    }
}

#[test]
fn schubert_components_are_units_on_cell() {
    for n in 2..=7 {
        for f in FlagType::all(n) {
            for &s in f.steps() {
                let c = schubert_component(&f, s).unwrap();
                assert!(c.vanishes_nowhere_on_cell, "{f} {s}");
                let j = IndexSet::open_closed(n - s, n);
                let v = plucker_minor(&f, j).unwrap().as_constant().unwrap();
                assert!(v == BigInt::from(1) || v == BigInt::from(-1));
            }
            assert!(schubert_component(&f, n).is_err());
        }
    }
}

#[test]
fn divisor_components_are_distinct() {
    for n in 2..=7 {
        for f in FlagType::all(n) {
            let comps = anticanonical_divisor(&f).unwrap();
            assert_eq!(comps.len(), n - 1 + f.r());
            let eqs: BTreeSet<String> = comps.iter().map(|c| c.equation.to_text(true)).collect();
            assert_eq!(eqs.len(), comps.len(), "{f}");
            assert!(comps.windows(2).all(|w| (w[0].case, w[0].i) <= (w[1].case, w[1].i)));
        }
    }
}

#[test]
fn plucker_minor_rejects_bad_sets() {
    let f = flag(4, &[1, 3]);
    assert!(plucker_minor(&f, IndexSet::prefix(2)).is_err());
    assert!(plucker_minor(&f, IndexSet::from_indices([1, 5]).unwrap()).is_err());
    assert!(plucker_minor(&f, IndexSet::prefix(3)).is_ok());
}

#[test]
fn homogenize_rejects_homogenizer() {
    let z = Polynomial::var(VarId::Homogenizer);
    assert!(homogenize(&z).is_err());
    assert!(homogenize(&Polynomial::zero()).unwrap().is_zero());
}

fn small_poly() -> impl Strategy<Value = Polynomial> {
    proptest::collection::vec((-4i64..=4, proptest::collection::vec((1usize..4, 1usize..4), 0..4)), 1..5)
        .prop_map(|terms| {
            let mut p = Polynomial::zero();
            for (c, vars) in terms {
                let m = vars.iter().fold(Polynomial::constant(c), |acc, &(r, col)| {
                    &acc * &Polynomial::var(VarId::entry(r, col))
                });
                p = &p + &m;
            }
            p
        })
}

proptest! {
    #[test]
    fn homogenization_specializes(f in small_poly()) {
        let h = homogenize(&f).unwrap();
        let z = VarId::Homogenizer;
        prop_assert!(h.is_homogeneous());
        let at = |v: i64| BTreeMap::from([(z, Polynomial::constant(v))]);
        prop_assert_eq!(h.substitute(&at(0)), f.top());
        prop_assert_eq!(h.substitute(&at(1)), f);
    }
}
