use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;

use super::{Cell, Monomial, Polynomial, StructuredMatrix};
use crate::{Error, Result};

/// Determinant by Laplace expansion with minors memoized on
/// `(row set, column set)`.
///
/// Each step expands along the remaining row or column with the fewest
/// nonzero entries, preferring constant entries on ties.
pub fn determinant(m: &StructuredMatrix) -> Result<Polynomial> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n = m.rows();
    assert!(n <= 64, "determinant limited to 64x64");
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut expander = Laplace {
        m,
        memo: BTreeMap::new(),
    };
    Ok(expander.det(all, all))
}

struct Laplace<'a> {
    m: &'a StructuredMatrix,
    memo: BTreeMap<(u64, u64), Polynomial>,
}

enum Line {
    Row(usize),
    Col(usize),
}

impl Laplace<'_> {
    fn cell(&self, r: usize, c: usize) -> Cell {
        self.m.get(r + 1, c + 1)
    }

    fn det(&mut self, rows: u64, cols: u64) -> Polynomial {
        let size = rows.count_ones();
        if size == 0 {
            return Polynomial::one();
        }
        if size == 1 {
            return self
                .cell(rows.trailing_zeros() as usize, cols.trailing_zeros() as usize)
                .to_poly();
        }
        if let Some(p) = self.memo.get(&(rows, cols)) {
            return p.clone();
        }

        let (line, nonzero) = self.pick_line(rows, cols);
        let mut out = Polynomial::zero();
        if nonzero > 0 {
            match line {
                Line::Row(r) => {
                    let pr = (rows & ((1u64 << r) - 1)).count_ones();
                    for c in bits(cols) {
                        let cell = self.cell(r, c);
                        if cell.is_zero() {
                            continue;
                        }
                        let pc = (cols & ((1u64 << c) - 1)).count_ones();
                        let sub = self.det(rows & !(1 << r), cols & !(1 << c));
                        accumulate(&mut out, &sub, cell, (pr + pc) % 2 == 1);
                    }
                }
                Line::Col(c) => {
                    let pc = (cols & ((1u64 << c) - 1)).count_ones();
                    for r in bits(rows) {
                        let cell = self.cell(r, c);
                        if cell.is_zero() {
                            continue;
                        }
                        let pr = (rows & ((1u64 << r) - 1)).count_ones();
                        let sub = self.det(rows & !(1 << r), cols & !(1 << c));
                        accumulate(&mut out, &sub, cell, (pr + pc) % 2 == 1);
                    }
                }
            }
        }
        self.memo.insert((rows, cols), out.clone());
        out
    }

    fn pick_line(&self, rows: u64, cols: u64) -> (Line, usize) {
        let mut best: Option<(usize, usize, Line)> = None;
        let mut consider = |line: Line, cells: &mut dyn Iterator<Item = Cell>| {
            let (mut nonzero, mut vars) = (0, 0);
            for cell in cells {
                match cell {
                    Cell::Zero => {}
                    Cell::One => nonzero += 1,
                    Cell::Var(_) => {
                        nonzero += 1;
                        vars += 1;
                    }
                }
            }
            if best
                .as_ref()
                .is_none_or(|(bn, bv, _)| (nonzero, vars) < (*bn, *bv))
            {
                best = Some((nonzero, vars, line));
            }
        };
        for r in bits(rows) {
            consider(Line::Row(r), &mut bits(cols).map(|c| self.cell(r, c)));
        }
        for c in bits(cols) {
            consider(Line::Col(c), &mut bits(rows).map(|r| self.cell(r, c)));
        }
        let (nonzero, _, line) = best.expect("nonempty minor");
        (line, nonzero)
    }
}

fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    core::iter::from_fn(move || {
        if mask == 0 {
            return None;
        }
        let i = mask.trailing_zeros() as usize;
        mask &= mask - 1;
        Some(i)
    })
}

fn accumulate(out: &mut Polynomial, sub: &Polynomial, cell: Cell, negate: bool) {
    let sign = BigInt::from(if negate { -1 } else { 1 });
    match cell {
        Cell::Zero => {}
        Cell::One => out.add_scaled(sub, &sign, &Monomial::one()),
        Cell::Var(v) => out.add_scaled(sub, &sign, &Monomial::var(v)),
    }
}

/// Fraction-free (Bareiss) elimination over the polynomial ring, with row
/// swaps when a pivot vanishes. Every division is exact.
pub fn determinant_bareiss(m: &StructuredMatrix) -> Result<Polynomial> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    bareiss(m.to_poly_rows())
}

/// Bareiss elimination on an arbitrary square polynomial matrix.
pub fn bareiss(mut a: Vec<Vec<Polynomial>>) -> Result<Polynomial> {
    let n = a.len();
    if let Some(row) = a.iter().find(|r| r.len() != n) {
        return Err(Error::NotSquare {
            rows: n,
            cols: row.len(),
        });
    }
    if n == 0 {
        return Ok(Polynomial::one());
    }
    let mut negate = false;
    let mut prev = Polynomial::one();
    for k in 0..n - 1 {
        let pivot = (k..n)
            .filter(|&i| !a[i][k].is_zero())
            .min_by_key(|&i| a[i][k].num_terms());
        let Some(p) = pivot else {
            return Ok(Polynomial::zero());
        };
        if p != k {
            a.swap(p, k);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num
                    .exact_div(&prev)
                    .expect("Bareiss step divides exactly");
            }
            a[i][k] = Polynomial::zero();
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    Ok(if negate { -det } else { det })
}
