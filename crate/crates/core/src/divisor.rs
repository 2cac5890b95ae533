//! Schubert-cell coordinates on `Fl(n•; n)`, Plücker minors, and the
//! equations of the components of the anti-canonical divisor.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::poly::{determinant, Cell, IndexSet, Polynomial, StructuredMatrix, VarId};
use crate::weyl::FlagType;
use crate::{Error, Result};

/// The `n_r × n` matrix of cell coordinates: row block `t` carries an
/// identity in columns `(n − n_t, n − n_{t−1}]`, indeterminates to its left
/// and zeros to its right. Entry `(r, c)` is the variable `a{r,c}`.
pub fn cell_matrix(flag: &FlagType) -> StructuredMatrix {
    let (n, r) = (flag.n(), flag.r());
    let mut m = StructuredMatrix::zeros(flag.step(r), n);
    for t in 1..=r {
        let (lo, hi) = (flag.step(t - 1), flag.step(t));
        for row in lo + 1..=hi {
            for c in 1..=n - hi {
                m.set(row, c, Cell::Var(VarId::entry(row, c)));
            }
            m.set(row, n - hi + (row - lo), Cell::One);
        }
    }
    m
}

/// [`cell_matrix`] completed to `n × n` by the rows `(I_{n − n_r} 0)`.
pub fn augmented_matrix(flag: &FlagType) -> StructuredMatrix {
    let (n, top) = (flag.n(), flag.step(flag.r()));
    let cell = cell_matrix(flag);
    let mut m = StructuredMatrix::zeros(n, n);
    for r in 1..=top {
        for c in 1..=n {
            m.set(r, c, cell.get(r, c));
        }
    }
    for p in 1..=n - top {
        m.set(top + p, p, Cell::One);
    }
    m
}

/// Leading `a × a` minor of [`augmented_matrix`], for `1 ≤ a ≤ n − 1`.
pub fn principal_minor(flag: &FlagType, a: usize) -> Result<Polynomial> {
    if a == 0 || a >= flag.n() {
        return Err(Error::IndexOutOfRange {
            index: a,
            max: flag.n() - 1,
        });
    }
    determinant(&augmented_matrix(flag).leading(a))
}

/// `x_J` on the cell: the minor of the first `|J|` rows of [`cell_matrix`]
/// on the columns `J`.
pub fn plucker_minor(flag: &FlagType, j: IndexSet) -> Result<Polynomial> {
    check_plucker(flag, j)?;
    let rows: Vec<usize> = (1..=j.len()).collect();
    determinant(&cell_matrix(flag).submatrix(&rows, &j.to_vec()))
}

fn check_plucker(flag: &FlagType, j: IndexSet) -> Result<()> {
    if !flag.is_step(j.len()) {
        return Err(Error::InvalidPlucker(format!(
            "|J| = {} is not a step of {flag}",
            j.len()
        )));
    }
    if j.max().is_some_and(|m| m > flag.n()) {
        return Err(Error::InvalidPlucker(format!(
            "index {} exceeds n = {}",
            j.max().unwrap_or(0),
            flag.n()
        )));
    }
    Ok(())
}

/// Which of the five shapes an equation takes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Case {
    /// `x_{(n − i, n]}` for a step `i`.
    Schubert = 1,
    /// `x_{[i]}` for a step `i`.
    Step = 2,
    /// `x_{[i] ∪ (n − n_1 + i, n]}` for `i < n_1`.
    BelowFirst = 3,
    /// `x_{(i − n_r, i]}` for `i > n_r`.
    AboveLast = 4,
    /// The alternating quadric for `n_j < i < n_{j+1}`.
    Between = 5,
}

impl Case {
    pub fn number(self) -> u8 {
        self as u8
    }

    pub fn from_number(c: u8) -> Result<Self> {
        Ok(match c {
            1 => Self::Schubert,
            2 => Self::Step,
            3 => Self::BelowFirst,
            4 => Self::AboveLast,
            5 => Self::Between,
            _ => return Err(Error::Parse(format!("unknown case {c}"))),
        })
    }
}

/// One component of the divisor with its equation in Plücker coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisorComponent {
    pub case: Case,
    /// The simple-root index, or the step for [`Case::Schubert`].
    pub i: usize,
    /// Normalized to a positive leading coefficient.
    pub equation: Polynomial,
    /// The equation is a unit on the Schubert cell.
    pub vanishes_nowhere_on_cell: bool,
}

fn plucker(j: IndexSet) -> Polynomial {
    Polynomial::var(VarId::Plucker(j))
}

/// The equation of the component attached to the simple root `i`.
pub fn theorem_equation(flag: &FlagType, i: usize) -> Result<DivisorComponent> {
    let n = flag.n();
    if i == 0 || i >= n {
        return Err(Error::IndexOutOfRange {
            index: i,
            max: n - 1,
        });
    }
    let (first, last) = (flag.step(1), flag.step(flag.r()));
    let (case, equation) = if flag.is_step(i) {
        (Case::Step, plucker(IndexSet::prefix(i)))
    } else if i < first {
        let j = IndexSet::prefix(i).union(IndexSet::open_closed(n - first + i, n));
        (Case::BelowFirst, plucker(j))
    } else if i > last {
        (Case::AboveLast, plucker(IndexSet::open_closed(i - last, i)))
    } else {
        let t = (1..flag.r())
            .find(|&t| flag.step(t) < i && i < flag.step(t + 1))
            .expect("i lies strictly between two steps");
        (Case::Between, between_equation(n, flag.step(t), flag.step(t + 1), i))
    };
    Ok(DivisorComponent {
        case,
        i,
        equation: equation.sign_normalized(),
        vanishes_nowhere_on_cell: false,
    })
}

/// `Σ_{J ⊂ [l], |J| = k} (−1)^{ΣJ} x_{[i]∖J} x_{J ∪ (n − hi + k, n]}` with
/// `k = i − lo` and `l = min(i, n − hi + k)`.
fn between_equation(n: usize, lo: usize, hi: usize, i: usize) -> Polynomial {
    let k = i - lo;
    let tail_start = n - hi + k;
    let l = i.min(tail_start);
    let tail = IndexSet::open_closed(tail_start, n);
    let head = IndexSet::prefix(i);
    let mut out = Polynomial::zero();
    for j in IndexSet::prefix(l).subsets_of_size(k) {
        let term = &plucker(head.difference(j)) * &plucker(j.union(tail));
        let sign = if j.sum() % 2 == 0 { 1 } else { -1 };
        out = &out + &term.scale(&BigInt::from(sign));
    }
    out
}

/// The component `x_{(n − step, n]}` for a step of the flag.
pub fn schubert_component(flag: &FlagType, step: usize) -> Result<DivisorComponent> {
    if !flag.is_step(step) {
        return Err(Error::InvalidFlag(format!("{step} is not a step of {flag}")));
    }
    let j = IndexSet::open_closed(flag.n() - step, flag.n());
    let on_cell = plucker_minor(flag, j)?;
    Ok(DivisorComponent {
        case: Case::Schubert,
        i: step,
        equation: plucker(j),
        vanishes_nowhere_on_cell: on_cell.as_constant().is_some_and(|c| c != BigInt::from(0)),
    })
}

/// All `(n − 1) + r` components, ordered by `(case, i)`.
pub fn anticanonical_divisor(flag: &FlagType) -> Result<Vec<DivisorComponent>> {
    let mut out = flag
        .steps()
        .iter()
        .map(|&s| schubert_component(flag, s))
        .collect::<Result<Vec<_>>>()?;
    for i in 1..flag.n() {
        out.push(theorem_equation(flag, i)?);
    }
    out.sort_by_key(|c| (c.case, c.i));
    Ok(out)
}

/// Replaces each Plücker variable of `f` by its minor on the cell.
pub fn on_cell(flag: &FlagType, f: &Polynomial) -> Result<Polynomial> {
    let mut assignment = BTreeMap::new();
    for v in f.variables() {
        if let VarId::Plucker(j) = v {
            assignment.insert(v, plucker_minor(flag, j)?);
        }
    }
    Ok(f.substitute(&assignment))
}

/// The sign `ε` with `equation|cell = ε · principal_minor(i)`, or `None`
/// when the two differ by more than a sign.
pub fn component_sign(flag: &FlagType, i: usize) -> Result<Option<i8>> {
    let eq = on_cell(flag, &theorem_equation(flag, i)?.equation)?;
    let minor = principal_minor(flag, i)?;
    Ok(if eq == minor {
        Some(1)
    } else if eq == -&minor {
        Some(-1)
    } else {
        None
    })
}

/// Whether the equation for `i`, evaluated on the cell, is `±` the
/// `i × i` principal minor.
pub fn verify_component(flag: &FlagType, i: usize) -> Result<bool> {
    Ok(component_sign(flag, i)?.is_some())
}

/// `f_d + z f_{d−1} + … + z^d f_0` for `d = deg f`.
pub fn homogenize(f: &Polynomial) -> Result<Polynomial> {
    let z = VarId::Homogenizer;
    if f.variables().contains(&z) {
        return Err(Error::AlreadyHomogenized);
    }
    let Some(d) = f.degree() else {
        return Ok(Polynomial::zero());
    };
    let zp = Polynomial::var(z);
    Ok(f
        .components()
        .into_iter()
        .fold(Polynomial::zero(), |acc, (e, part)| &acc + &(&part * &zp.pow(d - e))))
}
