use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::{coprime_mc, squarefree_mc, McConfig, Status, Verdict};
use crate::blockdet::{factor_top_of, recognize, trim_unit_lines, BlockSpec};
use crate::divisor::augmented_matrix;
use crate::poly::{determinant, Polynomial};
use crate::weyl::FlagType;
use crate::Result;

/// Factor structure of `top(f^{(a)})` read off the trimmed principal
/// submatrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Structure {
    /// Spec of the trimmed submatrix, if it has block form.
    pub spec: Option<BlockSpec>,
    /// Degrees of the structural factors.
    pub factor_degrees: Vec<u32>,
    /// The trimmed determinant is `±f^{(a)}`.
    pub trim_preserves_det: bool,
    /// The product of the factors is `±top(f^{(a)})`.
    pub product_matches: bool,
}

impl Structure {
    pub fn passed(&self) -> bool {
        self.spec.is_some() && self.trim_preserves_det && self.product_matches
    }
}

/// Findings for one principal minor `f^{(a)}`.
#[derive(Debug, Clone, PartialEq)]
pub struct MinorReport {
    pub a: usize,
    pub degree: u32,
    pub homogeneous: bool,
    pub squarefree_top: Verdict,
    /// Decided exactly; `None` when `f^{(a)}` is homogeneous.
    pub snd_nonzero: Option<bool>,
    pub top_snd_coprime: Option<Verdict>,
    pub structure: Structure,
}

/// Square-freeness and coprimality of the top components of the principal
/// minors of the augmented cell matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct TopReport {
    pub flag: FlagType,
    pub minors: Vec<MinorReport>,
    /// `coprime(top f^{(a)}, top f^{(b)})` for `a < b`.
    pub pairwise: BTreeMap<(usize, usize), Verdict>,
    /// Structural factors of distinct minors are pairwise distinct up to sign.
    pub distinct_factors: bool,
}

impl TopReport {
    pub fn verdicts(&self) -> impl Iterator<Item = &Verdict> {
        self.minors
            .iter()
            .flat_map(|m| core::iter::once(&m.squarefree_top).chain(&m.top_snd_coprime))
            .chain(self.pairwise.values())
    }

    pub fn passed(&self) -> bool {
        self.verdicts().all(Verdict::passed)
            && self
                .minors
                .iter()
                .all(|m| m.snd_nonzero != Some(false) && m.structure.passed())
            && self.distinct_factors
    }

    pub fn has_failure(&self) -> bool {
        self.verdicts().any(|v| v.status == Status::Fail)
    }
}

/// Runs every check on `flag`. Verdict `k` draws from stream
/// `cfg.stream + k`, so the report is reproducible from the config.
pub fn check_tops(flag: &FlagType, cfg: &McConfig) -> Result<TopReport> {
    let n = flag.n();
    let aug = augmented_matrix(flag);
    let mut next_stream = cfg.stream;
    let mut stream = || {
        let c = cfg.with_stream(next_stream);
        next_stream += 1;
        c
    };

    let mut minors = Vec::new();
    let mut tops = Vec::new();
    let mut all_factors: Vec<(usize, Polynomial)> = Vec::new();
    for a in 1..n {
        let sub = aug.leading(a);
        let f = determinant(&sub)?;
        let degree = f.degree().unwrap_or(0);
        let homogeneous = f.is_homogeneous();
        let top = f.top();
        let squarefree_top = squarefree_mc(&top, &stream())?;
        let (snd_nonzero, top_snd_coprime) = if homogeneous {
            (None, None)
        } else {
            let snd = f.snd();
            let verdict = if snd.is_zero() {
                None
            } else {
                Some(coprime_mc(&top, &snd, &stream())?)
            };
            (Some(!snd.is_zero()), verdict)
        };

        let trimmed = trim_unit_lines(&sub);
        let trim_preserves_det = determinant(&trimmed)?.unit_eq(&f);
        let spec = recognize(&trimmed);
        let (factor_degrees, product_matches) = match &spec {
            Some(s) => {
                let factors = factor_top_of(&trimmed, s)?;
                let product = factors.iter().fold(Polynomial::one(), |acc, p| &acc * p);
                let degrees = factors.iter().filter_map(Polynomial::degree).collect();
                all_factors.extend(factors.into_iter().map(|p| (a, p.sign_normalized())));
                (degrees, product.unit_eq(&top))
            }
            None => (Vec::new(), false),
        };

        minors.push(MinorReport {
            a,
            degree,
            homogeneous,
            squarefree_top,
            snd_nonzero,
            top_snd_coprime,
            structure: Structure {
                spec,
                factor_degrees,
                trim_preserves_det,
                product_matches,
            },
        });
        tops.push(top);
    }

    let mut pairwise = BTreeMap::new();
    for a in 1..n {
        for b in a + 1..n {
            let v = coprime_mc(&tops[a - 1], &tops[b - 1], &stream())?;
            pairwise.insert((a, b), v);
        }
    }

    let distinct_factors = all_factors.iter().enumerate().all(|(k, (a, p))| {
        all_factors[k + 1..]
            .iter()
            .all(|(b, q)| a == b || p != q)
    });

    Ok(TopReport {
        flag: flag.clone(),
        minors,
        pairwise,
        distinct_factors,
    })
}
