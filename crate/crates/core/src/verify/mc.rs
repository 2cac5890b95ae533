use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::poly::{Monomial, Polynomial, VarId};
use crate::{Error, Result};

/// Parameters of a Monte Carlo verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct McConfig {
    pub trials: u32,
    pub seed: u64,
    /// Coordinates are drawn uniformly from `[-sample_bound, sample_bound]`.
    pub sample_bound: u64,
    /// Selects an independent ChaCha stream, so that every verdict draws its
    /// own reproducible sequence.
    pub stream: u64,
}

impl McConfig {
    pub const DEFAULT_TRIALS: u32 = 8;
    pub const DEFAULT_SAMPLE_BOUND: u64 = 1_000_000;

    pub fn new(trials: u32, seed: u64, sample_bound: u64) -> Result<Self> {
        if trials == 0 {
            return Err(Error::InvalidConfig("trials must be at least 1".into()));
        }
        if sample_bound == 0 || sample_bound > i64::MAX as u64 / 2 {
            return Err(Error::InvalidConfig(format!(
                "sample bound {sample_bound} out of range"
            )));
        }
        Ok(Self {
            trials,
            seed,
            sample_bound,
            stream: 0,
        })
    }

    pub fn with_seed(seed: u64) -> Self {
        Self {
            trials: Self::DEFAULT_TRIALS,
            seed,
            sample_bound: Self::DEFAULT_SAMPLE_BOUND,
            stream: 0,
        }
    }

    pub fn with_stream(mut self, stream: u64) -> Self {
        self.stream = stream;
        self
    }

    fn rng(&self) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(self.stream);
        rng
    }

    /// Rejects sample boxes smaller than twice the degree under test.
    pub fn check_degree(&self, degree: u32) -> Result<()> {
        if self.sample_bound < 2 * degree as u64 {
            return Err(Error::InvalidConfig(format!(
                "sample bound {} is below twice the degree {degree}",
                self.sample_bound
            )));
        }
        Ok(())
    }

    /// Schwartz–Zippel bound `degree / (2·sample_bound + 1)` on the chance
    /// that one random line is degenerate for a polynomial of this degree.
    pub fn per_trial_bound(&self, degree: u32) -> f64 {
        degree as f64 / (2.0 * self.sample_bound as f64 + 1.0)
    }

    fn random_point(&self, rng: &mut ChaCha8Rng, vars: &[VarId]) -> BTreeMap<VarId, BigInt> {
        let b = self.sample_bound as i64;
        vars.iter()
            .map(|&v| (v, BigInt::from(rng.gen_range(-b..=b))))
            .collect()
    }
}

impl Default for McConfig {
    fn default() -> Self {
        Self::with_seed(0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Status {
    Pass,
    /// No certificate either way; the trial data is attached.
    Suspect,
    Fail,
}

/// How a verdict was reached.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    /// A constant input is trivially square-free or coprime to anything.
    Constant,
    /// Coprime because the two inputs share no variable.
    DisjointSupport,
    /// Random line restrictions.
    LineRestriction,
}

/// Outcome of one random line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Trial {
    /// The restriction lost degree; the line is degenerate and proves nothing.
    DegreeDrop,
    Squarefree,
    /// The restriction has a repeated root.
    RepeatedRoot,
    Coprime,
    /// The restrictions share a factor of the given degree.
    CommonFactor(usize),
}

/// Result of a square-freeness or coprimality test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub status: Status,
    pub method: Method,
    pub seed: u64,
    pub stream: u64,
    pub trials: Vec<Trial>,
    /// Degree entering the per-trial Schwartz–Zippel bound.
    pub degree: u32,
    pub sample_bound: u64,
    /// A structural factor behind a `Fail`.
    pub witness: Option<Polynomial>,
}

impl Verdict {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn per_trial_bound(&self) -> f64 {
        self.degree as f64 / (2.0 * self.sample_bound as f64 + 1.0)
    }

    fn exact(cfg: &McConfig, method: Method) -> Self {
        Self {
            status: Status::Pass,
            method,
            seed: cfg.seed,
            stream: cfg.stream,
            trials: Vec::new(),
            degree: 0,
            sample_bound: cfg.sample_bound,
            witness: None,
        }
    }
}

/// Square-freeness of `f` by restriction to random lines.
///
/// A restriction that keeps the full degree and is square-free certifies
/// that `f` is square-free, since a repeated factor `h` of `f` restricts to a
/// nonconstant repeated factor on such a line. When no line certifies, the
/// test is repeated on fresh lines and then a structural repeated factor is
/// searched for; `Fail` is only reported with such a witness.
pub fn squarefree_mc(f: &Polynomial, cfg: &McConfig) -> Result<Verdict> {
    let degree = f.degree().ok_or(Error::ZeroPolynomial)?;
    if degree == 0 {
        return Ok(Verdict::exact(cfg, Method::Constant));
    }
    cfg.check_degree(degree)?;
    let vars: Vec<VarId> = f.variables().into_iter().collect();
    let mut rng = cfg.rng();
    let mut trials = Vec::new();
    for _round in 0..2 {
        for _ in 0..cfg.trials {
            let base = cfg.random_point(&mut rng, &vars);
            let dir = cfg.random_point(&mut rng, &vars);
            let r = f.restrict_to_line(&base, &dir)?;
            trials.push(if r.degree() != Some(degree as usize) {
                Trial::DegreeDrop
            } else if r.is_squarefree()? {
                Trial::Squarefree
            } else {
                Trial::RepeatedRoot
            });
        }
        if trials.contains(&Trial::Squarefree) {
            break;
        }
    }
    let mut verdict = Verdict {
        status: Status::Pass,
        method: Method::LineRestriction,
        seed: cfg.seed,
        stream: cfg.stream,
        trials,
        degree,
        sample_bound: cfg.sample_bound,
        witness: None,
    };
    if !verdict.trials.contains(&Trial::Squarefree) {
        verdict.witness = repeated_factor(f);
        verdict.status = if verdict.witness.is_some() {
            Status::Fail
        } else {
            Status::Suspect
        };
    }
    Ok(verdict)
}

/// Coprimality of `f` and `g`.
///
/// Disjoint variable supports certify coprimality outright. Otherwise both
/// are restricted to common random lines; a pair of full-degree coprime
/// restrictions certifies coprimality. `Fail` requires a structural common
/// factor.
pub fn coprime_mc(f: &Polynomial, g: &Polynomial, cfg: &McConfig) -> Result<Verdict> {
    let df = f.degree().ok_or(Error::ZeroPolynomial)?;
    let dg = g.degree().ok_or(Error::ZeroPolynomial)?;
    if df == 0 || dg == 0 {
        return Ok(Verdict::exact(cfg, Method::Constant));
    }
    let (vf, vg) = (f.variables(), g.variables());
    if vf.is_disjoint(&vg) {
        return Ok(Verdict::exact(cfg, Method::DisjointSupport));
    }
    let degree = df.max(dg);
    cfg.check_degree(degree)?;
    let vars: Vec<VarId> = vf.union(&vg).copied().collect();
    let mut rng = cfg.rng();
    let mut trials = Vec::new();
    for _ in 0..cfg.trials {
        let base = cfg.random_point(&mut rng, &vars);
        let dir = cfg.random_point(&mut rng, &vars);
        let rf = f.restrict_to_line(&base, &dir)?;
        let rg = g.restrict_to_line(&base, &dir)?;
        trials.push(
            if rf.degree() != Some(df as usize) || rg.degree() != Some(dg as usize) {
                Trial::DegreeDrop
            } else {
                match rf.gcd(&rg).degree() {
                    Some(0) => Trial::Coprime,
                    Some(d) => Trial::CommonFactor(d),
                    None => Trial::CommonFactor(0),
                }
            },
        );
    }
    let mut verdict = Verdict {
        status: Status::Pass,
        method: Method::LineRestriction,
        seed: cfg.seed,
        stream: cfg.stream,
        trials,
        degree,
        sample_bound: cfg.sample_bound,
        witness: None,
    };
    if !verdict.trials.contains(&Trial::Coprime) {
        verdict.witness = common_factor(f, g);
        verdict.status = if verdict.witness.is_some() {
            Status::Fail
        } else {
            Status::Suspect
        };
    }
    Ok(verdict)
}

/// A variable appearing squared in the monomial content, or a perfect-square
/// root of `f`.
fn repeated_factor(f: &Polynomial) -> Option<Polynomial> {
    let content = f.monomial_content();
    if let Some(&(v, _)) = content.powers().iter().find(|p| p.1 >= 2) {
        return Some(Polynomial::var(v));
    }
    let cofactor = f.exact_div(&Polynomial::term(1, content))?;
    square_root(&cofactor).filter(|h| !h.is_constant())
}

/// A nonconstant common factor found by exact division or shared monomial
/// content.
fn common_factor(f: &Polynomial, g: &Polynomial) -> Option<Polynomial> {
    if g.exact_div(f).is_some() {
        return Some(f.clone());
    }
    if f.exact_div(g).is_some() {
        return Some(g.clone());
    }
    let shared = f.monomial_content().gcd(&g.monomial_content());
    shared
        .powers()
        .first()
        .map(|&(v, _)| Polynomial::var(v))
}

/// `h` with `h² = ±f`, built term by term from the leading term down.
fn square_root(f: &Polynomial) -> Option<Polynomial> {
    for target in [f.clone(), -f] {
        if let Some(h) = square_root_exact(&target) {
            return Some(h);
        }
    }
    None
}

fn square_root_exact(f: &Polynomial) -> Option<Polynomial> {
    let (lm, lc) = f.leading_term()?;
    let root_c = lc.sqrt();
    if &(&root_c * &root_c) != lc {
        return None;
    }
    let mut powers = Vec::new();
    for &(v, e) in lm.powers() {
        if e % 2 != 0 {
            return None;
        }
        powers.push((v, e / 2));
    }
    let lead = Polynomial::term(root_c.clone(), Monomial::from_powers(powers));
    let two_lead = lead.scale(&BigInt::from(2));
    let mut h = lead;
    let mut rem = f - &h.pow(2);
    let max_steps = f.num_terms() * 4 + 8;
    for _ in 0..max_steps {
        let Some((rm, rc)) = rem.leading_term() else {
            return Some(h);
        };
        let (tm, tc) = two_lead.leading_term()?;
        let m = rm.div(tm)?;
        let (c, r) = num_integer::Integer::div_rem(rc, tc);
        if r != BigInt::from(0) {
            return None;
        }
        let t = Polynomial::term(c, m);
        // (h + t)^2 = h^2 + 2ht + t^2
        rem = &(&rem - &(&h.scale(&BigInt::from(2)) * &t)) - &t.pow(2);
        h = &h + &t;
        if h.degree() > f.degree() {
            return None;
        }
    }
    None
}
