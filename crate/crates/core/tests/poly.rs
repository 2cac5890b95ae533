mod common;

use std::collections::BTreeMap;

use flagdiv_core::poly::*;
use flagdiv_core::Error;
use num_bigint::BigInt;
use proptest::prelude::*;

fn x() -> Polynomial {
    Polynomial::var(VarId::entry(1, 1))
}

fn y() -> Polynomial {
    Polynomial::var(VarId::entry(1, 2))
}

fn z() -> Polynomial {
    Polynomial::var(VarId::Homogenizer)
}

#[test]
fn products() {
    let one = Polynomial::one();
    assert_eq!(&x() * &one, x());
    assert_eq!(&(&x() + &y()) * &(&x() - &y()), &x().pow(2) - &y().pow(2));
    let six = &x().scale(&BigInt::from(2)) * &x().scale(&BigInt::from(3));
    assert_eq!(six, x().pow(2).scale(&BigInt::from(6)));
    assert!((&x() - &x()).is_zero());
}

#[test]
fn components() {
    let f = &(&x() * &y()) + &z();
    assert_eq!(f.top(), &x() * &y());
    assert_eq!(f.snd(), z());
    let h = &x() * &y();
    assert_eq!(h.top(), h);
    assert!(Polynomial::zero().homogeneous_component(3).is_zero());
}

#[test]
fn substitution() {
    let mut a = BTreeMap::new();
    a.insert(VarId::entry(1, 1), Polynomial::one());
    assert_eq!((&x() + &y()).substitute(&a), &Polynomial::one() + &y());
}

#[test]
fn line_restriction() {
    let f = &x().pow(2) + &y();
    let zero: BTreeMap<_, _> = [(VarId::entry(1, 1), BigInt::from(0)), (VarId::entry(1, 2), BigInt::from(0))].into();
    let dir: BTreeMap<_, _> = [(VarId::entry(1, 1), BigInt::from(1)), (VarId::entry(1, 2), BigInt::from(0))].into();
    assert_eq!(f.restrict_to_line(&zero, &dir).unwrap(), UniPoly::from_i64(&[0, 0, 1]));
    assert_eq!(Polynomial::constant(5).restrict_to_line(&zero, &dir).unwrap(), UniPoly::from_i64(&[5]));
    assert!(matches!(f.restrict_to_line(&BTreeMap::new(), &dir), Err(Error::MissingValue(_))));
}

#[test]
fn univariate_squarefree() {
    assert!(UniPoly::from_i64(&[0, 1, 1]).is_squarefree().unwrap());
    assert!(!UniPoly::from_i64(&[0, 0, 1, 1]).is_squarefree().unwrap());
    assert!(!UniPoly::from_i64(&[0, 0, 0, 1]).is_squarefree().unwrap());
}

#[test]
fn determinant_examples() {
    let g = StructuredMatrix::generic(2, 2);
    assert_eq!(determinant(&g).unwrap().to_string(), "a{1,1}*a{2,2} - a{1,2}*a{2,1}");
    let m = StructuredMatrix::from_rows(vec![
        vec![Cell::Var(VarId::entry(1, 1)), Cell::One],
        vec![Cell::One, Cell::Zero],
    ]);
    assert_eq!(determinant(&m).unwrap(), Polynomial::constant(-1));
    assert!(matches!(
        determinant(&StructuredMatrix::generic(2, 3)),
        Err(Error::NotSquare { rows: 2, cols: 3 })
    ));
}

#[test]
fn determinants_agree_with_leibniz() {
    let mut rng = common::rng(11);
    for k in 0..60 {
        let m = common::random_structured(&mut rng, 1 + k % 6);
        let d = determinant(&m).unwrap();
        assert_eq!(d, common::leibniz(&m));
        assert_eq!(d, determinant_bareiss(&m).unwrap());
    }
}

#[test]
fn determinant_alternates() {
    let mut rng = common::rng(12);
    for k in 0..30 {
        let n = 2 + k % 5;
        let m = common::random_structured(&mut rng, n);
        let mut rows: Vec<usize> = (1..=n).collect();
        rows.swap(0, n - 1);
        let cols: Vec<usize> = (1..=n).collect();
        let swapped = m.submatrix(&rows, &cols);
        assert_eq!(determinant(&swapped).unwrap(), -&determinant(&m).unwrap());
    }
}

#[test]
fn text_labels() {
    let set = |v: &[usize]| IndexSet::from_indices(v.iter().copied()).unwrap();
    assert_eq!(VarId::Plucker(set(&[1, 3, 4])).to_string(), "x_{134}");
    assert_eq!(VarId::Plucker(set(&[1, 3, 10])).to_string(), "x_{1,3,10}");
    assert_eq!(VarId::Plucker(set(&[1, 3])).label(true), "x_{1,3}");
    for s in ["x_{134}", "x_{1,3,10}", "z", "a{2,7}"] {
        assert_eq!(s.parse::<VarId>().unwrap().to_string(), s);
    }
}

fn var() -> impl Strategy<Value = VarId> {
    prop_oneof![
        (1usize..4, 1usize..4).prop_map(|(r, c)| VarId::entry(r, c)),
        Just(VarId::Homogenizer),
        proptest::collection::btree_set(1usize..6, 1..4)
            .prop_map(|s| VarId::Plucker(IndexSet::from_indices(s).unwrap())),
    ]
}

fn poly() -> impl Strategy<Value = Polynomial> {
    proptest::collection::vec(
        (-5i64..=5, proptest::collection::vec((var(), 1u32..3), 0..3)),
        0..5,
    )
    .prop_map(|terms| {
        let mut p = Polynomial::zero();
        for (c, powers) in terms {
            p.add_term(Monomial::from_powers(powers), BigInt::from(c));
        }
        p
    })
}

fn point(p: &Polynomial, seed: i64) -> BTreeMap<VarId, BigInt> {
    p.variables()
        .into_iter()
        .enumerate()
        .map(|(k, v)| (v, BigInt::from(seed * 7 + 3 * k as i64 - 5)))
        .collect()
}

proptest! {
    #[test]
    fn ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) - &b, a);
    }

    #[test]
    fn components_reassemble(a in poly()) {
        let sum = a.components().into_iter().fold(Polynomial::zero(), |acc, (_, p)| &acc + &p);
        prop_assert_eq!(sum, a.clone());
        prop_assert!(a.components().iter().all(|(_, p)| p.is_homogeneous()));
    }

    #[test]
    fn restriction_matches_evaluation(a in poly(), s in -20i64..20, t in -6i64..6) {
        let base = point(&a, s);
        let dir = point(&a, s + 1);
        let line = a.restrict_to_line(&base, &dir).unwrap();
        let tt = BigInt::from(t);
        let at: BTreeMap<VarId, BigInt> = base
            .iter()
            .map(|(v, b)| (*v, b + &dir[v] * &tt))
            .collect();
        prop_assert_eq!(line.evaluate(&tt), a.evaluate(&at).unwrap());
        prop_assert!(line.degree().map_or(0, |d| d as u32) <= a.degree().unwrap_or(0));
    }

    #[test]
    fn substitution_of_constants_is_evaluation(a in poly(), s in -20i64..20) {
        let pt = point(&a, s);
        let assign: BTreeMap<VarId, Polynomial> =
            pt.iter().map(|(v, c)| (*v, Polynomial::constant(c.clone()))).collect();
        let value = a.substitute(&assign).as_constant().unwrap_or_default();
        prop_assert_eq!(value, a.evaluate(&pt).unwrap());
    }

    #[test]
    fn exact_division_inverts_product(a in poly(), b in poly()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b).exact_div(&b), Some(a));
    }

    #[test]
    fn sign_normal_form(a in poly()) {
        prop_assert!(a.unit_eq(&-&a));
        prop_assert_eq!(a.sign_normalized(), (-&a).sign_normalized());
    }
}
