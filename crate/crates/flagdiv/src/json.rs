//! JSON forms of polynomials, divisors and verification reports.

use std::collections::BTreeSet;

use flagdiv_core::blockdet::{BlockReport, BlockSpec};
use flagdiv_core::divisor::{Case, DivisorComponent};
use flagdiv_core::poly::{Monomial, Polynomial, VarId};
use flagdiv_core::verify::{Method, MinorReport, Status, TopReport, Trial, Verdict};
use flagdiv_core::weyl::FlagType;
use num_bigint::BigInt;
use serde_json::{json, Map, Value};

use crate::CliError;

/// `{"terms": [{"coeff": "-3", "monomial": {"x_{12}": 1}}]}`, terms from the
/// leading one down.
pub fn polynomial(p: &Polynomial, wide: bool) -> Value {
    let terms: Vec<Value> = p
        .terms()
        .rev()
        .map(|(m, c)| {
            let monomial: Map<String, Value> = m
                .powers()
                .iter()
                .map(|&(v, e)| (v.label(wide), json!(e)))
                .collect();
            json!({ "coeff": c.to_string(), "monomial": monomial })
        })
        .collect();
    json!({ "terms": terms })
}

pub fn parse_polynomial(v: &Value) -> Result<Polynomial, CliError> {
    let terms = v
        .get("terms")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("polynomial needs a \"terms\" array"))?;
    let mut out = Polynomial::zero();
    for t in terms {
        let coeff: BigInt = t
            .get("coeff")
            .and_then(Value::as_str)
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| bad("term needs a decimal \"coeff\" string"))?;
        let powers = t
            .get("monomial")
            .and_then(Value::as_object)
            .ok_or_else(|| bad("term needs a \"monomial\" object"))?
            .iter()
            .map(|(name, e)| {
                let var: VarId = name.parse()?;
                let e = e
                    .as_u64()
                    .and_then(|e| u32::try_from(e).ok())
                    .filter(|&e| e > 0)
                    .ok_or_else(|| bad("exponents must be positive integers"))?;
                Ok((var, e))
            })
            .collect::<Result<Vec<_>, CliError>>()?;
        out.add_term(Monomial::from_powers(powers), coeff);
    }
    Ok(out)
}

fn bad(msg: &str) -> CliError {
    CliError::Json(msg.to_string())
}

pub fn flag(f: &FlagType) -> Value {
    json!({ "n": f.n(), "steps": f.steps() })
}

pub fn parse_flag(v: &Value) -> Result<FlagType, CliError> {
    let n = v.get("n").and_then(Value::as_u64).ok_or_else(|| bad("flag needs \"n\""))?;
    let steps = v
        .get("steps")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("flag needs \"steps\""))?
        .iter()
        .map(|s| s.as_u64().map(|s| s as usize).ok_or_else(|| bad("steps are integers")))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(FlagType::new(n as usize, steps)?)
}

pub fn component(c: &DivisorComponent, wide: bool) -> Value {
    json!({
        "case": c.case.number(),
        "i": c.i,
        "equation": polynomial(&c.equation, wide),
        "vanishes_nowhere_on_cell": c.vanishes_nowhere_on_cell,
    })
}

/// `{"flag": {...}, "components": [{"case": c, "i": i, "equation": ...}]}`.
pub fn divisor(f: &FlagType, comps: &[DivisorComponent]) -> Value {
    let wide = f.n() > 9;
    json!({
        "flag": flag(f),
        "components": comps.iter().map(|c| component(c, wide)).collect::<Vec<_>>(),
    })
}

pub fn parse_divisor(v: &Value) -> Result<(FlagType, Vec<DivisorComponent>), CliError> {
    let f = parse_flag(v.get("flag").ok_or_else(|| bad("missing \"flag\""))?)?;
    let comps = v
        .get("components")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("missing \"components\""))?
        .iter()
        .map(|c| {
            let case = c
                .get("case")
                .and_then(Value::as_u64)
                .ok_or_else(|| bad("component needs \"case\""))?;
            let i = c
                .get("i")
                .and_then(Value::as_u64)
                .ok_or_else(|| bad("component needs \"i\""))?;
            Ok(DivisorComponent {
                case: Case::from_number(case as u8)?,
                i: i as usize,
                equation: parse_polynomial(
                    c.get("equation").ok_or_else(|| bad("component needs \"equation\""))?,
                )?,
                vanishes_nowhere_on_cell: c
                    .get("vanishes_nowhere_on_cell")
                    .and_then(Value::as_bool)
                    .unwrap_or(false),
            })
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    Ok((f, comps))
}

pub fn status(s: Status) -> &'static str {
    match s {
        Status::Pass => "PASS",
        Status::Suspect => "SUSPECT",
        Status::Fail => "FAIL",
    }
}

fn method(m: Method) -> &'static str {
    match m {
        Method::Constant => "constant",
        Method::DisjointSupport => "disjoint-support",
        Method::LineRestriction => "line-restriction",
    }
}

fn trial(t: &Trial) -> Value {
    match t {
        Trial::DegreeDrop => json!("degree-drop"),
        Trial::Squarefree => json!("squarefree"),
        Trial::RepeatedRoot => json!("repeated-root"),
        Trial::Coprime => json!("coprime"),
        Trial::CommonFactor(d) => json!({ "common-factor": d }),
    }
}

pub fn verdict(v: &Verdict, wide: bool) -> Value {
    json!({
        "status": status(v.status),
        "method": method(v.method),
        "seed": v.seed,
        "stream": v.stream,
        "trials": v.trials.iter().map(trial).collect::<Vec<_>>(),
        "degree": v.degree,
        "sample_bound": v.sample_bound,
        "per_trial_bound": v.per_trial_bound(),
        "witness": v.witness.as_ref().map(|w| polynomial(w, wide)),
    })
}

pub fn spec(s: &BlockSpec) -> Value {
    json!({ "i": s.row_sizes(), "j": s.col_sizes() })
}

fn set(s: &BTreeSet<usize>) -> Value {
    json!(s.iter().collect::<Vec<_>>())
}

/// Report for one block spec; `verdicts` carries the three structural
/// checks with their evidence.
pub fn block_report(r: &BlockReport) -> Value {
    let coprime = r.top_snd_coprime.as_ref().map(|v| {
        json!({
            "pass": v.passed(),
            "trials": v.trials.len(),
            "seed": v.seed,
            "verdict": verdict(v, false),
        })
    });
    json!({
        "spec": spec(&r.spec),
        "upsilon": set(&r.upsilon),
        "verdicts": {
            "vars_in_top": r.vars_in_top.pass,
            "top_shape": r.top_shape.pass,
            "top_snd_coprime": coprime,
        },
        "missing_vars": r.vars_in_top.missing.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
        "degree": r.top_shape.degree,
        "homogeneous": r.top_shape.homogeneous,
        "snd_nonzero": r.top_shape.snd_nonzero,
        "product_identity": r.product_identity,
        "disjoint_factors": r.disjoint_factors,
        "factor_degrees": r.factor_degrees,
    })
}

fn minor(m: &MinorReport, wide: bool) -> Value {
    json!({
        "a": m.a,
        "degree": m.degree,
        "homogeneous": m.homogeneous,
        "squarefree_top": verdict(&m.squarefree_top, wide),
        "snd_nonzero": m.snd_nonzero,
        "top_snd_coprime": m.top_snd_coprime.as_ref().map(|v| verdict(v, wide)),
        "structure": {
            "spec": m.structure.spec.as_ref().map(spec),
            "factor_degrees": m.structure.factor_degrees,
            "trim_preserves_det": m.structure.trim_preserves_det,
            "product_matches": m.structure.product_matches,
        },
    })
}

pub fn top_report(r: &TopReport) -> Value {
    let wide = r.flag.n() > 9;
    let pairwise: Vec<Value> = r
        .pairwise
        .iter()
        .map(|(&(a, b), v)| json!({ "a": a, "b": b, "coprime_tops": verdict(v, wide) }))
        .collect();
    json!({
        "flag": flag(&r.flag),
        "pass": r.passed(),
        "minors": r.minors.iter().map(|m| minor(m, wide)).collect::<Vec<_>>(),
        "pairwise": pairwise,
        "distinct_factors": r.distinct_factors,
    })
}
