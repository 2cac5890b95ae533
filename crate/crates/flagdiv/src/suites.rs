//! Exhaustive verification sweeps behind `flagdiv verify`.

use std::fmt;
use std::str::FromStr;

use flagdiv_core::blockdet::{all_specs, analyze, passes_screen};
use flagdiv_core::divisor::component_sign;
use flagdiv_core::verify::{check_tops, McConfig, Status};
use flagdiv_core::weyl::{
    boundary_closed_forms, boundary_p_elements, bruhat_leq, gamma, w0_wp, FlagType, Permutation,
};
use serde_json::{json, Value};

use crate::{json as j, CliError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SuiteName {
    /// Top components of the principal minors.
    Irr,
    /// Equations against principal minors on the cell.
    Case5,
    /// Atoms and coatoms of the parabolic interval.
    Boundary,
    /// `Γ(w0 wP)` is everything.
    Gamma,
    /// Block-matrix determinants.
    Blockdet,
}

impl SuiteName {
    pub const ALL: [SuiteName; 5] = [
        SuiteName::Irr,
        SuiteName::Case5,
        SuiteName::Boundary,
        SuiteName::Gamma,
        SuiteName::Blockdet,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            SuiteName::Irr => "irr",
            SuiteName::Case5 => "case5",
            SuiteName::Boundary => "boundary",
            SuiteName::Gamma => "gamma",
            SuiteName::Blockdet => "blockdet",
        }
    }
}

impl fmt::Display for SuiteName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SuiteName {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Self::ALL
            .into_iter()
            .find(|n| n.as_str() == s)
            .ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Suspect,
    Fail,
    Skipped,
}

impl Outcome {
    fn of(pass: bool) -> Self {
        if pass {
            Outcome::Pass
        } else {
            Outcome::Fail
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Outcome::Pass => "PASS",
            Outcome::Suspect => "SUSPECT",
            Outcome::Fail => "FAIL",
            Outcome::Skipped => "SKIP",
        }
    }
}

#[derive(Debug, Clone)]
pub struct Item {
    pub label: String,
    pub outcome: Outcome,
    pub detail: String,
    pub json: Value,
}

#[derive(Debug, Clone)]
pub struct SuiteResult {
    pub name: SuiteName,
    pub items: Vec<Item>,
}

impl SuiteResult {
    pub fn count(&self, o: Outcome) -> usize {
        self.items.iter().filter(|i| i.outcome == o).count()
    }

    /// No item failed or was left undecided.
    pub fn all_pass(&self) -> bool {
        self.items
            .iter()
            .all(|i| matches!(i.outcome, Outcome::Pass | Outcome::Skipped))
    }

    pub fn summary(&self) -> String {
        format!(
            "suite {}: {} items, {} pass, {} suspect, {} fail, {} skipped",
            self.name,
            self.items.len(),
            self.count(Outcome::Pass),
            self.count(Outcome::Suspect),
            self.count(Outcome::Fail),
            self.count(Outcome::Skipped),
        )
    }

    pub fn text(&self) -> String {
        let mut out = String::new();
        for item in &self.items {
            out.push_str(&format!("{:<7} {}  {}\n", item.outcome.as_str(), item.label, item.detail));
        }
        out.push_str(&self.summary());
        out.push('\n');
        out
    }

    pub fn to_json(&self) -> Value {
        json!({
            "suite": self.name.as_str(),
            "pass": self.all_pass(),
            "items": self.items.iter().map(|i| json!({
                "label": i.label,
                "outcome": i.outcome.as_str(),
                "detail": i.json,
            })).collect::<Vec<_>>(),
        })
    }
}

fn flags_up_to(max_n: usize, min_n: usize) -> impl Iterator<Item = FlagType> {
    (min_n..=max_n).flat_map(FlagType::all)
}

pub fn run_suite(name: SuiteName, max_n: usize, cfg: &McConfig) -> Result<SuiteResult, CliError> {
    let items = match name {
        SuiteName::Irr => irr(max_n, cfg)?,
        SuiteName::Case5 => case_identity(max_n)?,
        SuiteName::Boundary => boundary(max_n),
        SuiteName::Gamma => gamma_full(max_n)?,
        SuiteName::Blockdet => blockdet(max_n, cfg)?,
    };
    Ok(SuiteResult { name, items })
}

/// Streams reserved for the verdicts of one flag.
const STREAMS_PER_ITEM: u64 = 1 << 16;

fn irr(max_n: usize, cfg: &McConfig) -> Result<Vec<Item>, CliError> {
    let mut items = Vec::new();
    for (k, f) in flags_up_to(max_n, 2).enumerate() {
        let r = check_tops(&f, &cfg.with_stream(k as u64 * STREAMS_PER_ITEM))?;
        let outcome = if r.passed() {
            Outcome::Pass
        } else if r.has_failure() {
            Outcome::Fail
        } else if r.verdicts().any(|v| v.status == Status::Suspect) {
            Outcome::Suspect
        } else {
            Outcome::Fail
        };
        let verdicts = r.verdicts().count();
        let inhomogeneous = r.minors.iter().filter(|m| !m.homogeneous).count();
        items.push(Item {
            label: f.to_string(),
            outcome,
            detail: format!(
                "{verdicts} verdicts, {inhomogeneous} inhomogeneous minors, factors {}",
                r.minors
                    .iter()
                    .map(|m| format!("{:?}", m.structure.factor_degrees))
                    .collect::<Vec<_>>()
                    .join(" ")
            ),
            json: j::top_report(&r),
        });
    }
    Ok(items)
}

fn case_identity(max_n: usize) -> Result<Vec<Item>, CliError> {
    let mut items = Vec::new();
    for f in flags_up_to(max_n, 2) {
        let mut signs = Vec::new();
        for i in 1..f.n() {
            signs.push(component_sign(&f, i)?);
        }
        let pass = signs.iter().all(Option::is_some);
        let shown: Vec<String> = signs
            .iter()
            .map(|s| match s {
                Some(1) => "+".into(),
                Some(_) => "-".into(),
                None => "x".into(),
            })
            .collect();
        items.push(Item {
            label: f.to_string(),
            outcome: Outcome::of(pass),
            detail: format!("signs {}", shown.join("")),
            json: json!({ "flag": j::flag(&f), "signs": signs }),
        });
    }
    Ok(items)
}

fn boundary(max_n: usize) -> Vec<Item> {
    flags_up_to(max_n, 2)
        .map(|f| {
            let found = boundary_p_elements(&f);
            let closed = boundary_closed_forms(&f);
            let pass = found == closed;
            let perms = |s: &std::collections::BTreeSet<Permutation>| {
                s.iter().map(ToString::to_string).collect::<Vec<_>>()
            };
            Item {
                label: f.to_string(),
                outcome: Outcome::of(pass),
                detail: format!("{} atoms, {} coatoms", found.atoms.len(), found.coatoms.len()),
                json: json!({
                    "flag": j::flag(&f),
                    "atoms": perms(&found.atoms),
                    "coatoms": perms(&found.coatoms),
                    "closed_atoms": perms(&closed.atoms),
                    "closed_coatoms": perms(&closed.coatoms),
                }),
            }
        })
        .collect()
}

fn gamma_full(max_n: usize) -> Result<Vec<Item>, CliError> {
    let mut items = Vec::new();
    for f in flags_up_to(max_n, 2) {
        let top = w0_wp(&f);
        let g = gamma(&top);
        let mut via_bruhat = Vec::new();
        for i in 1..f.n() {
            if bruhat_leq(&Permutation::simple(f.n(), i)?, &top)? {
                via_bruhat.push(i);
            }
        }
        let full: Vec<usize> = (1..f.n()).collect();
        let listed: Vec<usize> = g.into_iter().collect();
        let pass = listed == full && via_bruhat == full;
        items.push(Item {
            label: f.to_string(),
            outcome: Outcome::of(pass),
            detail: format!("w0wP = {top}, |Γ| = {}", listed.len()),
            json: json!({ "flag": j::flag(&f), "w0wp": top.to_string(), "gamma": listed }),
        });
    }
    Ok(items)
}

fn blockdet(max_n: usize, cfg: &McConfig) -> Result<Vec<Item>, CliError> {
    let mut items = Vec::new();
    let mut k = 0u64;
    for n in 1..=max_n {
        for spec in all_specs(n) {
            k += 1;
            if !passes_screen(&spec)? {
                items.push(Item {
                    label: spec.to_string(),
                    outcome: Outcome::Skipped,
                    detail: "zero block or zero determinant".into(),
                    json: json!({ "spec": j::spec(&spec), "skipped": true }),
                });
                continue;
            }
            let r = analyze(&spec, &cfg.with_stream(k))?;
            let outcome = match &r.top_snd_coprime {
                Some(v) if v.status == Status::Suspect && r.vars_in_top.pass => Outcome::Suspect,
                _ => Outcome::of(r.passed()),
            };
            items.push(Item {
                label: spec.to_string(),
                outcome,
                detail: format!(
                    "Υ={:?} deg {} factors {:?}",
                    r.upsilon, r.top_shape.degree, r.factor_degrees
                ),
                json: j::block_report(&r),
            });
        }
    }
    Ok(items)
}
