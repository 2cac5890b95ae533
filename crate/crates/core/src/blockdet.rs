//! Generic block matrices `M(i•; j•)` with anti-diagonal variable blocks and
//! sub-anti-diagonal identity blocks, and the factorization of the top
//! component of their determinants.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use crate::poly::{determinant, Cell, Polynomial, StructuredMatrix, VarId};
use crate::verify::{coprime_mc, McConfig, Verdict};
use crate::{Error, Result};

/// Block sizes `(i•; j•)`: row blocks of heights `i_s`, and anti-diagonal
/// blocks `A^s` of shape `i_s × j_s`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BlockSpec {
    rows: Vec<usize>,
    cols: Vec<usize>,
}

impl BlockSpec {
    pub fn new(rows: Vec<usize>, cols: Vec<usize>) -> Result<Self> {
        if rows.is_empty() || rows.len() != cols.len() {
            return Err(Error::InvalidBlockSpec(format!(
                "need two sequences of equal positive length, got {} and {}",
                rows.len(),
                cols.len()
            )));
        }
        if rows.iter().chain(&cols).any(|&x| x == 0) {
            return Err(Error::InvalidBlockSpec("block sizes must be positive".into()));
        }
        let (n, m): (usize, usize) = (rows.iter().sum(), cols.iter().sum());
        if n != m {
            return Err(Error::InvalidBlockSpec(format!(
                "row total {n} differs from column total {m}"
            )));
        }
        if n > 64 {
            return Err(Error::InvalidBlockSpec(format!("size {n} exceeds 64")));
        }
        Ok(Self { rows, cols })
    }

    pub fn row_sizes(&self) -> &[usize] {
        &self.rows
    }

    pub fn col_sizes(&self) -> &[usize] {
        &self.cols
    }

    pub fn r(&self) -> usize {
        self.rows.len()
    }

    /// `N`, the side of the square matrix.
    pub fn size(&self) -> usize {
        self.rows.iter().sum()
    }

    /// `i_1 + … + i_s`.
    pub fn row_prefix(&self, s: usize) -> usize {
        self.rows[..s].iter().sum()
    }

    /// `j_1 + … + j_s`.
    pub fn col_prefix(&self, s: usize) -> usize {
        self.cols[..s].iter().sum()
    }

    /// Rows and columns (1-based, inclusive ranges as `(lo, hi)`) of `A^s`.
    pub fn block_position(&self, s: usize) -> ((usize, usize), (usize, usize)) {
        let n = self.size();
        (
            (self.row_prefix(s - 1) + 1, self.row_prefix(s)),
            (n - self.col_prefix(s) + 1, n - self.col_prefix(s - 1)),
        )
    }
}

impl fmt::Display for BlockSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[usize]| {
            v.iter()
                .map(|x| format!("{x}"))
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(f, "({};{})", join(&self.rows), join(&self.cols))
    }
}

/// All compositions of `n`, in lexicographic order.
pub fn compositions(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return alloc::vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 1..=n {
        for mut rest in compositions(n - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Every spec of size `n`: pairs of compositions of `n` with equal length.
pub fn all_specs(n: usize) -> Vec<BlockSpec> {
    let comps = compositions(n);
    let mut out = Vec::new();
    for a in &comps {
        for b in comps.iter().filter(|b| b.len() == a.len()) {
            out.push(BlockSpec {
                rows: a.clone(),
                cols: b.clone(),
            });
        }
    }
    out
}

/// `{s ∈ [r−1] | i_1+…+i_s = j_1+…+j_s}`.
pub fn upsilon(spec: &BlockSpec) -> BTreeSet<usize> {
    (1..spec.r())
        .filter(|&s| spec.row_prefix(s) == spec.col_prefix(s))
        .collect()
}

/// The matrix `M(i•; j•)`. Entry `(r, c)` holding an indeterminate is the
/// variable `a{r,c}`.
pub fn build_generic(spec: &BlockSpec) -> StructuredMatrix {
    let n = spec.size();
    let mut m = StructuredMatrix::zeros(n, n);
    for s in 1..=spec.r() {
        let ((r0, r1), (_, c1)) = spec.block_position(s);
        let ident_start = c1 + 1;
        for row in r0..=r1 {
            for c in 1..=c1 {
                m.set(row, c, Cell::Var(VarId::entry(row, c)));
            }
            let p = row - r0;
            if s > 1 && p < spec.cols[s - 2] {
                m.set(row, ident_start + p, Cell::One);
            }
        }
    }
    m
}

/// Variables of the anti-diagonal block `A^k`.
pub fn block_vars(spec: &BlockSpec, k: usize) -> Result<BTreeSet<VarId>> {
    if k == 0 || k > spec.r() {
        return Err(Error::IndexOutOfRange {
            index: k,
            max: spec.r(),
        });
    }
    let ((r0, r1), (c0, c1)) = spec.block_position(k);
    Ok((r0..=r1)
        .flat_map(|r| (c0..=c1).map(move |c| VarId::entry(r, c)))
        .collect())
}

fn same_kind(a: Cell, b: Cell) -> bool {
    matches!(
        (a, b),
        (Cell::Zero, Cell::Zero) | (Cell::One, Cell::One) | (Cell::Var(_), Cell::Var(_))
    )
}

/// Recovers the spec of a matrix whose pattern of zeros, ones and
/// indeterminates is that of some `M(i•; j•)`, or `None`.
pub fn recognize(m: &StructuredMatrix) -> Option<BlockSpec> {
    let n = m.rows();
    if !m.is_square() || n == 0 {
        return None;
    }
    let last_var: Vec<usize> = (1..=n)
        .map(|r| {
            (1..=n)
                .rev()
                .find(|&c| matches!(m.get(r, c), Cell::Var(_)))
                .unwrap_or(0)
        })
        .collect();
    let mut ends: Vec<usize> = Vec::new();
    let mut rows: Vec<usize> = Vec::new();
    for &c in &last_var {
        match ends.last() {
            Some(&e) if e == c => *rows.last_mut().unwrap() += 1,
            Some(&e) if c >= e => return None,
            _ => {
                ends.push(c);
                rows.push(1);
            }
        }
    }
    if ends.first() != Some(&n) || ends.last() == Some(&0) {
        return None;
    }
    let cols: Vec<usize> = (0..ends.len())
        .map(|s| ends[s] - ends.get(s + 1).copied().unwrap_or(0))
        .collect();
    let spec = BlockSpec::new(rows, cols).ok()?;
    let g = build_generic(&spec);
    let matches = (1..=n).all(|r| (1..=n).all(|c| same_kind(m.get(r, c), g.get(r, c))));
    matches.then_some(spec)
}

/// Repeatedly deletes a row or column whose only nonzero entry is a 1,
/// together with the line crossing it. The determinant changes by a sign
/// at most.
pub fn trim_unit_lines(m: &StructuredMatrix) -> StructuredMatrix {
    let mut rows: Vec<usize> = (1..=m.rows()).collect();
    let mut cols: Vec<usize> = (1..=m.cols()).collect();
    loop {
        let unit_row = rows.iter().enumerate().find_map(|(ri, &r)| {
            unit_position(cols.iter().map(|&c| m.get(r, c))).map(|ci| (ri, ci))
        });
        let unit = unit_row.or_else(|| {
            cols.iter().enumerate().find_map(|(ci, &c)| {
                unit_position(rows.iter().map(|&r| m.get(r, c))).map(|ri| (ri, ci))
            })
        });
        let Some((ri, ci)) = unit else {
            break;
        };
        rows.remove(ri);
        cols.remove(ci);
    }
    m.submatrix(&rows, &cols)
}

fn unit_position(cells: impl Iterator<Item = Cell>) -> Option<usize> {
    let mut found = None;
    for (idx, cell) in cells.enumerate() {
        match cell {
            Cell::Zero => {}
            Cell::One if found.is_none() => found = Some(idx),
            _ => return None,
        }
    }
    found
}

/// `M(i•; j•)_t`, the square anti-diagonal block between consecutive
/// elements `s_t < s_{t+1}` of `Υ ∪ {0, r}`.
pub fn anti_diagonal_submatrix(spec: &BlockSpec, t: usize) -> Result<StructuredMatrix> {
    anti_diagonal_submatrix_of(&build_generic(spec), spec, t)
}

/// As [`anti_diagonal_submatrix`], cut from a matrix `m` with the pattern of
/// `spec`, keeping its variables.
pub fn anti_diagonal_submatrix_of(
    m: &StructuredMatrix,
    spec: &BlockSpec,
    t: usize,
) -> Result<StructuredMatrix> {
    let ups = upsilon(spec);
    if ups.is_empty() {
        return Err(Error::EmptyUpsilon);
    }
    if t > ups.len() {
        return Err(Error::IndexOutOfRange {
            index: t,
            max: ups.len(),
        });
    }
    let (lo, hi) = cut_points(spec, &ups, t);
    Ok(sub_block(m, spec, lo, hi))
}

fn cut_points(spec: &BlockSpec, ups: &BTreeSet<usize>, t: usize) -> (usize, usize) {
    let cuts: Vec<usize> = core::iter::once(0)
        .chain(ups.iter().copied())
        .chain(core::iter::once(spec.r()))
        .collect();
    (cuts[t], cuts[t + 1])
}

fn sub_block(m: &StructuredMatrix, spec: &BlockSpec, lo: usize, hi: usize) -> StructuredMatrix {
    let n = spec.size();
    let rows: Vec<usize> = (spec.row_prefix(lo) + 1..=spec.row_prefix(hi)).collect();
    let cols: Vec<usize> = (n - spec.col_prefix(hi) + 1..=n - spec.col_prefix(lo)).collect();
    m.submatrix(&rows, &cols)
}

/// Structural factors of `top(det M(i•; j•))`: `top(det M_t)` for each
/// anti-diagonal block, or `top(det M)` alone when `Υ = ∅`.
pub fn factor_top(spec: &BlockSpec) -> Result<Vec<Polynomial>> {
    factor_top_of(&build_generic(spec), spec)
}

pub fn factor_top_of(m: &StructuredMatrix, spec: &BlockSpec) -> Result<Vec<Polynomial>> {
    if determinant(m)?.is_zero() {
        return Err(Error::ZeroDeterminant);
    }
    let ups = upsilon(spec);
    let pieces = if ups.is_empty() {
        alloc::vec![m.clone()]
    } else {
        (0..=ups.len())
            .map(|t| {
                let (lo, hi) = cut_points(spec, &ups, t);
                sub_block(m, spec, lo, hi)
            })
            .collect()
    };
    pieces
        .iter()
        .map(|p| {
            let d = determinant(p)?;
            if d.is_zero() {
                return Err(Error::ZeroDeterminant);
            }
            Ok(d.top())
        })
        .collect()
}

/// Nonzero determinant and no `l × (N−l)` block of zeros.
pub fn passes_screen(spec: &BlockSpec) -> Result<bool> {
    let m = build_generic(spec);
    Ok(!m.has_zero_block() && !determinant(&m)?.is_zero())
}

/// Every variable of every `A^k` occurring in `top(g)`, with the
/// variables that do not.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VarsCheck {
    pub pass: bool,
    pub missing: Vec<VarId>,
}

/// Homogeneity when `r = 1`, nonvanishing `snd(g)` otherwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShapeCheck {
    pub pass: bool,
    pub degree: u32,
    pub homogeneous: bool,
    pub snd_nonzero: bool,
}

/// Findings for one spec.
#[derive(Debug, Clone, PartialEq)]
pub struct BlockReport {
    pub spec: BlockSpec,
    pub upsilon: BTreeSet<usize>,
    pub vars_in_top: VarsCheck,
    pub top_shape: ShapeCheck,
    /// Coprimality of `top(g)` and `snd(g)`; absent when `g` is homogeneous.
    pub top_snd_coprime: Option<Verdict>,
    /// `Π f_t = ±top(g)`.
    pub product_identity: bool,
    /// The factors use pairwise disjoint sets of variables.
    pub disjoint_factors: bool,
    pub factor_degrees: Vec<u32>,
}

impl BlockReport {
    pub fn passed(&self) -> bool {
        self.vars_in_top.pass
            && self.top_shape.pass
            && self.top_snd_coprime.as_ref().is_none_or(Verdict::passed)
            && self.product_identity
            && self.disjoint_factors
    }
}

/// Checks the structure of `g = det M(i•; j•)` and its top component.
pub fn analyze(spec: &BlockSpec, cfg: &McConfig) -> Result<BlockReport> {
    let m = build_generic(spec);
    let g = determinant(&m)?;
    let degree = g.degree().ok_or(Error::ZeroDeterminant)?;
    let top = g.top();
    let snd = g.snd();
    let homogeneous = g.is_homogeneous();

    let top_vars = top.variables();
    let mut missing = Vec::new();
    for k in 1..=spec.r() {
        missing.extend(block_vars(spec, k)?.into_iter().filter(|v| !top_vars.contains(v)));
    }
    let vars_in_top = VarsCheck {
        pass: missing.is_empty(),
        missing,
    };

    let top_shape = ShapeCheck {
        pass: if spec.r() == 1 { homogeneous } else { !snd.is_zero() },
        degree,
        homogeneous,
        snd_nonzero: !snd.is_zero(),
    };

    let top_snd_coprime = if homogeneous || snd.is_zero() {
        None
    } else {
        Some(coprime_mc(&top, &snd, cfg)?)
    };

    let factors = factor_top_of(&m, spec)?;
    let product = factors
        .iter()
        .fold(Polynomial::one(), |acc, f| &acc * f);
    let mut seen = BTreeSet::new();
    let disjoint_factors = factors
        .iter()
        .all(|f| f.variables().into_iter().all(|v| seen.insert(v)));

    Ok(BlockReport {
        spec: spec.clone(),
        upsilon: upsilon(spec),
        vars_in_top,
        top_shape,
        top_snd_coprime,
        product_identity: product.unit_eq(&top),
        disjoint_factors,
        factor_degrees: factors.iter().filter_map(Polynomial::degree).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn spec(rows: &[usize], cols: &[usize]) -> BlockSpec {
        BlockSpec::new(rows.to_vec(), cols.to_vec()).unwrap()
    }

    fn var(r: usize, c: usize) -> Cell {
        Cell::Var(VarId::entry(r, c))
    }

    #[test]
    fn validation() {
        assert!(BlockSpec::new(vec![], vec![]).is_err());
        assert!(BlockSpec::new(vec![1, 2], vec![3]).is_err());
        assert!(BlockSpec::new(vec![1, 2], vec![2, 2]).is_err());
        assert!(BlockSpec::new(vec![0, 2], vec![1, 1]).is_err());
    }

    #[test]
    fn single_block_is_generic() {
        let s = spec(&[2], &[2]);
        assert_eq!(build_generic(&s), StructuredMatrix::generic(2, 2));
        assert!(upsilon(&s).is_empty());
        let f = factor_top(&s).unwrap();
        assert_eq!(f.len(), 1);
        assert!(f[0].is_homogeneous());
    }

    #[test]
    fn two_by_two_pattern() {
        let s = spec(&[1, 1], &[1, 1]);
        let m = build_generic(&s);
        let expected = StructuredMatrix::from_rows(vec![
            vec![var(1, 1), var(1, 2)],
            vec![var(2, 1), Cell::One],
        ]);
        assert_eq!(m, expected);
        assert_eq!(upsilon(&s).into_iter().collect::<Vec<_>>(), vec![1]);
        let m0 = anti_diagonal_submatrix(&s, 0).unwrap();
        let m1 = anti_diagonal_submatrix(&s, 1).unwrap();
        assert_eq!(m0, StructuredMatrix::from_rows(vec![vec![var(1, 2)]]));
        assert_eq!(m1, StructuredMatrix::from_rows(vec![vec![var(2, 1)]]));
        assert!(anti_diagonal_submatrix(&s, 2).is_err());
    }

    #[test]
    fn uneven_blocks() {
        let s = spec(&[1, 2], &[2, 1]);
        let m = build_generic(&s);
        // A^1 = row 1, columns 2..3; A^2 = rows 2..3, column 1; I_{2,2} beside it.
        assert_eq!(m.get(1, 1), var(1, 1));
        assert_eq!(m.get(2, 2), Cell::One);
        assert_eq!(m.get(3, 3), Cell::One);
        assert_eq!(m.get(2, 3), Cell::Zero);
        assert_eq!(m.get(3, 2), Cell::Zero);
        assert!(upsilon(&s).is_empty());
        assert_eq!(
            anti_diagonal_submatrix(&s, 0).unwrap_err(),
            Error::EmptyUpsilon
        );
        assert_eq!(block_vars(&s, 1).unwrap().len(), 2);
        assert_eq!(block_vars(&s, 2).unwrap().len(), 2);
    }

    #[test]
    fn all_equal_partial_sums() {
        let s = spec(&[1, 1, 1], &[1, 1, 1]);
        assert_eq!(upsilon(&s).len(), 2);
        assert_eq!(
            anti_diagonal_submatrix(&s, 1).unwrap(),
            StructuredMatrix::from_rows(vec![vec![var(2, 2)]])
        );
        let f = factor_top(&s).unwrap();
        assert_eq!(f.len(), 3);
        assert!(f.iter().all(|p| p.degree() == Some(1)));
    }

    #[test]
    fn recognizes_own_output() {
        for n in 1..=5 {
            for s in all_specs(n) {
                assert_eq!(recognize(&build_generic(&s)), Some(s));
            }
        }
        assert_eq!(recognize(&StructuredMatrix::zeros(2, 2)), None);
    }

    #[test]
    fn trimming_removes_unit_lines() {
        // [[x, 1], [1, 0]] collapses completely; det = -1.
        let m = StructuredMatrix::from_rows(vec![
            vec![var(1, 1), Cell::One],
            vec![Cell::One, Cell::Zero],
        ]);
        assert_eq!(trim_unit_lines(&m).rows(), 0);
        let g = build_generic(&spec(&[2, 1], &[1, 2]));
        assert_eq!(trim_unit_lines(&g), g);
    }

    #[test]
    fn spec_counts() {
        assert_eq!(compositions(4).len(), 8);
        // Σ_r C(n−1, r−1)^2 = C(2n−2, n−1)
        assert_eq!(all_specs(4).len(), 20);
        assert_eq!(all_specs(7).len(), 924);
    }

    #[test]
    fn report_for_two_by_two() {
        let r = analyze(&spec(&[1, 1], &[1, 1]), &McConfig::with_seed(1)).unwrap();
        assert!(r.passed());
        let v = r.top_snd_coprime.unwrap();
        assert_eq!(v.method, crate::verify::Method::DisjointSupport);
        assert_eq!(r.factor_degrees, vec![1, 1]);
    }
}
