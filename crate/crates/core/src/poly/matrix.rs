use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use super::{Polynomial, VarId};

/// An entry of a [`StructuredMatrix`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Cell {
    Zero,
    One,
    Var(VarId),
}

impl Cell {
    pub fn is_zero(self) -> bool {
        self == Cell::Zero
    }

    pub fn to_poly(self) -> Polynomial {
        match self {
            Cell::Zero => Polynomial::zero(),
            Cell::One => Polynomial::one(),
            Cell::Var(v) => Polynomial::var(v),
        }
    }
}

/// A matrix whose entries are 0, 1 or indeterminates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StructuredMatrix {
    rows: usize,
    cols: usize,
    cells: Vec<Cell>,
}

impl StructuredMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            cells: alloc::vec![Cell::Zero; rows * cols],
        }
    }

    /// Every entry is the fresh variable `a{r,c}` named by its position.
    pub fn generic(rows: usize, cols: usize) -> Self {
        let mut m = Self::zeros(rows, cols);
        for r in 1..=rows {
            for c in 1..=cols {
                m.set(r, c, Cell::Var(VarId::entry(r, c)));
            }
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Cell>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged matrix");
        Self {
            rows: nrows,
            cols: ncols,
            cells: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Entry at 1-based `(r, c)`.
    pub fn get(&self, r: usize, c: usize) -> Cell {
        self.cells[(r - 1) * self.cols + (c - 1)]
    }

    pub fn set(&mut self, r: usize, c: usize, cell: Cell) {
        self.cells[(r - 1) * self.cols + (c - 1)] = cell;
    }

    /// Submatrix on the given 1-based rows and columns, in the given order.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut m = Self::zeros(rows.len(), cols.len());
        for (i, &r) in rows.iter().enumerate() {
            for (j, &c) in cols.iter().enumerate() {
                m.set(i + 1, j + 1, self.get(r, c));
            }
        }
        m
    }

    pub fn leading(&self, k: usize) -> Self {
        let idx: Vec<usize> = (1..=k).collect();
        self.submatrix(&idx, &idx)
    }

    pub fn variables(&self) -> BTreeSet<VarId> {
        self.cells
            .iter()
            .filter_map(|c| match c {
                Cell::Var(v) => Some(*v),
                _ => None,
            })
            .collect()
    }

    pub fn count_vars(&self) -> usize {
        self.cells.iter().filter(|c| matches!(c, Cell::Var(_))).count()
    }

    pub fn to_poly_rows(&self) -> Vec<Vec<Polynomial>> {
        (1..=self.rows)
            .map(|r| (1..=self.cols).map(|c| self.get(r, c).to_poly()).collect())
            .collect()
    }

    /// Whether some `l × (N − l)` block of zeros exists for `1 ≤ l < N`,
    /// i.e. the zero pattern is partly decomposable.
    pub fn has_zero_block(&self) -> bool {
        let n = self.rows;
        if !self.is_square() || !(2..=24).contains(&n) {
            return false;
        }
        // zero_cols[r] = columns where row r is zero
        let zero_cols: Vec<u32> = (1..=n)
            .map(|r| {
                (1..=n)
                    .filter(|&c| self.get(r, c).is_zero())
                    .fold(0u32, |acc, c| acc | (1 << (c - 1)))
            })
            .collect();
        for mask in 1u32..((1u32 << n) - 1) {
            let l = mask.count_ones() as usize;
            let common = (0..n)
                .filter(|&r| mask & (1 << r) != 0)
                .fold(u32::MAX, |acc, r| acc & zero_cols[r]);
            if common.count_ones() as usize >= n - l {
                return true;
            }
        }
        false
    }
}

impl fmt::Display for StructuredMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 1..=self.rows {
            let row: Vec<alloc::string::String> = (1..=self.cols)
                .map(|c| match self.get(r, c) {
                    Cell::Zero => "0".into(),
                    Cell::One => "1".into(),
                    Cell::Var(v) => alloc::format!("{v}"),
                })
                .collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}
