//! Report rendering: every subcommand produces one [`Report`] holding both
//! a human text form and a canonical JSON value.
//!
//! The JSON is canonical in the strong sense: fields are emitted in a fixed
//! order, all rationals and big integers are strings, and re-serializing a
//! parsed report reproduces it byte for byte.  Every report starts with
//! `"schema": 1`.

use serde_json::{json, Value};

use swhzeta::bfun::BFactorization;
use swhzeta::blowup::{PoleKind, PoleSet};
use swhzeta::padic::GoodPrimeReport;
use swhzeta::poly::{Monomial, Scalar, WeightVector};
use swhzeta::swh::SwhAnalysis;
use swhzeta::unipoly::RatFn;
use swhzeta::verdict::{ExploreReport, Verdict};
use swhzeta::zeta::ZetaExpression;

use crate::fixtures::RunSummary;

pub struct Report {
    pub json: Value,
    pub text: String,
}

impl Report {
    pub fn render(&self, json_mode: bool) -> String {
        if json_mode {
            let mut s = serde_json::to_string_pretty(&self.json).expect("report serializes");
            s.push('\n');
            s
        } else {
            self.text.clone()
        }
    }
}

pub fn monomial_str(m: &Monomial, vars: &[String]) -> String {
    if m.is_constant() {
        return "1".into();
    }
    let parts: Vec<String> = m
        .exponents()
        .iter()
        .zip(vars)
        .filter(|(e, _)| **e > 0)
        .map(|(e, v)| if *e == 1 { v.clone() } else { format!("{v}^{e}") })
        .collect();
    parts.join("*")
}

/// Pole entries as `[["-1", 1], ...]`, most negative first.
pub fn pole_set_json(ps: &PoleSet) -> Value {
    let kind = match ps.kind {
        PoleKind::Candidate => "candidate",
        PoleKind::Exact => "exact",
    };
    let entries: Vec<Value> = ps
        .entries
        .iter()
        .map(|(loc, order)| json!([loc.to_string(), order]))
        .collect();
    json!({ "kind": kind, "entries": entries })
}

pub fn bfact_json(b: &BFactorization) -> Value {
    let factors: Vec<Value> = b
        .factors
        .iter()
        .map(|f| {
            json!({
                "root": f.root.to_string(),
                "multiplicity": f.multiplicity,
                "top_reduced_root": f.top_reduced_root,
            })
        })
        .collect();
    json!({
        "display": b.to_string(),
        "completeness": b.completeness.to_string(),
        "factors": factors,
        "provenance": b.provenance,
        "note": b.note.as_deref().map_or(Value::Null, Value::from),
    })
}

pub fn verdict_json(v: &Verdict) -> Value {
    json!({
        "status": v.status.to_string(),
        "poles": pole_set_json(&v.pole_set),
        "b_factors": bfact_json(&v.b_factors),
        "chain": v.inference_chain,
        "diagnostics": v.diagnostics,
    })
}

fn scalar_strings(cs: &[Scalar]) -> Vec<String> {
    cs.iter().map(Scalar::to_string).collect()
}

/// `{num, den, display}` with coefficient lists ascending in the variable.
pub fn ratfn_json(r: &RatFn, var: &str) -> Value {
    json!({
        "num": scalar_strings(r.num().coeffs()),
        "den": scalar_strings(r.den().coeffs()),
        "display": r.format_with(var),
    })
}

/// Numerator rows are `[num-coeffs-in-L, den-coeffs-in-L, T-power]` for the
/// nonzero coefficients; the denominator is the factor multiset `[N, nu]`
/// with each row standing for `1 - L^-nu * T^N`.  `prefactor` records the
/// folded normalization `L^-(ambient dimension)` as its exponent.
pub fn zeta_json(z: &ZetaExpression) -> Value {
    let numerator: Vec<Value> = z
        .num
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| {
            json!([scalar_strings(c.num().coeffs()), scalar_strings(c.den().coeffs()), k])
        })
        .collect();
    let denominator: Vec<Value> = z.den.iter().map(|(n, nu)| json!([n, nu])).collect();
    json!({
        "numerator": numerator,
        "denominator": denominator,
        "prefactor": -i64::from(z.ambient_dim),
        "display": z.to_string(),
    })
}

fn push_chain(text: &mut String, verdict: &Verdict) {
    text.push_str(&format!("verdict: {}\n", verdict.status));
    for step in &verdict.inference_chain {
        text.push_str(&format!("  - {step}\n"));
    }
    if !verdict.diagnostics.is_empty() {
        text.push_str("diagnostics:\n");
        for d in &verdict.diagnostics {
            text.push_str(&format!("  - {d}\n"));
        }
    }
}

fn weights_str(w: &WeightVector) -> String {
    let parts: Vec<String> = w.entries().iter().map(u64::to_string).collect();
    parts.join(", ")
}

pub struct AnalyzeData<'a> {
    pub f_text: &'a str,
    pub vars: &'a [String],
    pub w: &'a WeightVector,
    pub analysis: &'a SwhAnalysis,
    /// None: the nondegeneracy check itself errored.
    pub newton_nondegenerate: Option<bool>,
    pub b_factors: &'a BFactorization,
    pub toric_exact: Option<&'a PoleSet>,
    pub topological: Option<&'a RatFn>,
    pub toric_note: Option<&'a str>,
    pub verdict: &'a Verdict,
}

pub fn analyze_report(d: &AnalyzeData) -> Report {
    let a = d.analysis;
    let mut text = String::new();
    text.push_str(&format!("f = {}\n", d.f_text));
    text.push_str(&format!(
        "variables {} with weights ({}); weighted degree d = {}\n",
        d.vars.join(", "),
        weights_str(d.w),
        a.d
    ));
    text.push_str(&format!(
        "initial part: {}; higher part: {}\n",
        a.f_d.format_with(&var_refs(d.vars)),
        a.higher.format_with(&var_refs(d.vars))
    ));
    text.push_str(&format!("Milnor number: {} (initial part: {})\n", a.mu(), a.mu_initial()));
    text.push_str(&format!(
        "weighted homogeneous: {}\n",
        yes_no(a.flags.is_weighted_homogeneous)
    ));
    match d.newton_nondegenerate {
        Some(b) => text.push_str(&format!("Newton nondegenerate: {}\n", yes_no(b))),
        None => text.push_str("Newton nondegenerate: not determined\n"),
    }
    text.push_str(&format!("spectrum: {}\n", scalar_strings(&a.spectrum).join(", ")));
    text.push_str(&format!("{}\n", d.verdict.pole_set));
    text.push_str(&format!(
        "b-function facts ({}): {}\n",
        d.b_factors.completeness, d.b_factors
    ));
    if let Some(exact) = d.toric_exact {
        text.push_str(&format!("{exact}\n"));
    }
    if let Some(top) = d.topological {
        text.push_str(&format!("topological zeta: {}\n", top.format_with("s")));
    }
    if let Some(note) = d.toric_note {
        text.push_str(&format!("toric path: {note}\n"));
    }
    push_chain(&mut text, d.verdict);

    let json = json!({
        "schema": 1,
        "command": "analyze",
        "f": d.f_text,
        "vars": d.vars,
        "weights": d.w.entries(),
        "d": a.d,
        "mu": a.mu(),
        "mu_initial": a.mu_initial(),
        "weighted_homogeneous": a.flags.is_weighted_homogeneous,
        "newton_nondegenerate": d.newton_nondegenerate.map_or(Value::Null, Value::from),
        "spectrum": scalar_strings(&a.spectrum),
        "candidate_poles": pole_set_json(&d.verdict.pole_set),
        "b_factors": bfact_json(d.b_factors),
        "toric": match (d.toric_exact, d.topological) {
            (Some(exact), Some(top)) => json!({
                "exact_poles": pole_set_json(exact),
                "topological": ratfn_json(top, "s"),
            }),
            _ => d.toric_note.map_or(Value::Null, |n| json!({ "skipped": n })),
        },
        "verdict": verdict_json(d.verdict),
    });
    Report { json, text }
}

fn var_refs(vars: &[String]) -> Vec<&str> {
    vars.iter().map(String::as_str).collect()
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub struct ZetaData<'a> {
    pub f_text: &'a str,
    pub vars: &'a [String],
    pub w: &'a WeightVector,
    pub twist: &'a Monomial,
    pub motivic: &'a ZetaExpression,
    pub topological: &'a RatFn,
    pub exact: Option<&'a PoleSet>,
}

pub fn zeta_report(d: &ZetaData) -> Report {
    let twist = monomial_str(d.twist, d.vars);
    let mut text = String::new();
    text.push_str(&format!("motivic zeta function of {} twisted by {}:\n", d.f_text, twist));
    text.push_str(&format!("  {}\n", d.motivic));
    text.push_str(&format!("topological zeta: {}\n", d.topological.format_with("s")));
    if let Some(exact) = d.exact {
        text.push_str(&format!("{exact}\n"));
    }
    let json = json!({
        "schema": 1,
        "command": "zeta",
        "f": d.f_text,
        "vars": d.vars,
        "weights": d.w.entries(),
        "twist": twist,
        "motivic": zeta_json(d.motivic),
        "topological": ratfn_json(d.topological, "s"),
        "exact_poles": d.exact.map_or(Value::Null, pole_set_json),
    });
    Report { json, text }
}

pub struct BfunData<'a> {
    pub f_text: &'a str,
    pub vars: &'a [String],
    pub w: &'a WeightVector,
    pub twist: &'a Monomial,
    pub b: &'a BFactorization,
}

pub fn bfun_report(d: &BfunData) -> Report {
    let twist = monomial_str(d.twist, d.vars);
    let mut text = String::new();
    text.push_str(&format!(
        "b-function facts for {} (weights ({}), twist {}):\n",
        d.f_text,
        weights_str(d.w),
        twist
    ));
    text.push_str(&format!("  {} ({})\n", d.b, d.b.completeness));
    text.push_str(&format!("  provenance: {}\n", d.b.provenance));
    if let Some(note) = &d.b.note {
        text.push_str(&format!("  note: {note}\n"));
    }
    let json = json!({
        "schema": 1,
        "command": "bfun",
        "f": d.f_text,
        "vars": d.vars,
        "weights": d.w.entries(),
        "twist": twist,
        "b_factors": bfact_json(d.b),
    });
    Report { json, text }
}

pub struct CheckData<'a> {
    pub f_text: &'a str,
    pub vars: &'a [String],
    pub w: &'a WeightVector,
    pub twist: &'a Monomial,
    pub reference: Option<&'a str>,
    pub verdict: &'a Verdict,
}

pub fn check_report(d: &CheckData) -> Report {
    let twist = monomial_str(d.twist, d.vars);
    let mut text = String::new();
    text.push_str(&format!(
        "check {} (weights ({}), twist {})\n",
        d.f_text,
        weights_str(d.w),
        twist
    ));
    match d.reference {
        Some(name) => text.push_str(&format!("stored reference: fixture \"{name}\"\n")),
        None => text.push_str("stored reference: none\n"),
    }
    push_chain(&mut text, d.verdict);
    let json = json!({
        "schema": 1,
        "command": "check",
        "f": d.f_text,
        "vars": d.vars,
        "weights": d.w.entries(),
        "twist": twist,
        "reference": d.reference.map_or(Value::Null, Value::from),
        "verdict": verdict_json(d.verdict),
    });
    Report { json, text }
}

pub struct ExploreData<'a> {
    pub f_text: &'a str,
    pub vars: &'a [String],
    pub w: &'a WeightVector,
    pub report: &'a ExploreReport,
}

pub fn explore_report(d: &ExploreData) -> Report {
    let mut text = String::new();
    text.push_str(&format!(
        "spectral numbers of {} (weights ({})), twist search up to total degree {}:\n",
        d.f_text,
        weights_str(d.w),
        d.report.bound
    ));
    let mut entries = Vec::new();
    for e in &d.report.entries {
        let status = if e.achieved() { "achieved" } else { "not achieved" };
        text.push_str(&format!("spectral number {}: {status}\n", e.alpha));
        if !e.witnesses.is_empty() {
            let ws: Vec<String> = e.witnesses.iter().map(|m| monomial_str(m, d.vars)).collect();
            text.push_str(&format!("  witnesses: {}\n", ws.join(", ")));
        }
        for (m, reason) in &e.near_misses {
            text.push_str(&format!("  near miss {}: {reason}\n", monomial_str(m, d.vars)));
        }
        for (m, l) in &e.level_only {
            text.push_str(&format!(
                "  level-only {}: filtration level {} but l = {l}\n",
                monomial_str(m, d.vars),
                e.alpha
            ));
        }
        if let Some(c) = &e.candidates {
            text.push_str(&format!("  {c}\n"));
        }
        match e.toric_confirmed {
            Some(true) => text.push_str(&format!("  toric: -{} is an actual pole\n", e.alpha)),
            Some(false) => {
                text.push_str(&format!("  toric: -{} is NOT a pole for the first witness\n", e.alpha))
            }
            None => {}
        }
        for n in &e.notes {
            text.push_str(&format!("  note: {n}\n"));
        }
        entries.push(json!({
            "alpha": e.alpha.to_string(),
            "achieved": e.achieved(),
            "witnesses": e.witnesses.iter().map(|m| monomial_str(m, d.vars)).collect::<Vec<_>>(),
            "near_misses": e
                .near_misses
                .iter()
                .map(|(m, r)| json!([monomial_str(m, d.vars), r]))
                .collect::<Vec<_>>(),
            "level_only": e
                .level_only
                .iter()
                .map(|(m, l)| json!([monomial_str(m, d.vars), l.to_string()]))
                .collect::<Vec<_>>(),
            "candidates": e.candidates.as_ref().map_or(Value::Null, pole_set_json),
            "toric_confirmed": e.toric_confirmed.map_or(Value::Null, Value::from),
            "notes": e.notes,
        }));
    }
    let json = json!({
        "schema": 1,
        "command": "explore",
        "f": d.f_text,
        "vars": d.vars,
        "weights": d.w.entries(),
        "bound": d.report.bound,
        "entries": entries,
    });
    Report { json, text }
}

pub struct OraclePrime<'a> {
    pub report: &'a GoodPrimeReport,
    pub igusa: Option<&'a RatFn>,
    /// Rows (m, predicted, counted).
    pub rows: Vec<(u32, String, String)>,
}

pub struct OracleData<'a> {
    pub f_text: &'a str,
    pub vars: &'a [String],
    pub mmax: u32,
    pub primes: &'a [OraclePrime<'a>],
}

pub fn oracle_report(d: &OracleData) -> Report {
    let mut text = String::new();
    let mut all_match = true;
    text.push_str(&format!(
        "zeta predictions vs. point counts for {} (m = 1..{}):\n",
        d.f_text, d.mmax
    ));
    let mut primes = Vec::new();
    for p in d.primes {
        if !p.report.good {
            text.push_str(&format!(
                "p = {}: skipped ({})\n",
                p.report.p,
                p.report.reasons.join("; ")
            ));
        } else {
            text.push_str(&format!("p = {}:\n", p.report.p));
            if let Some(ig) = p.igusa {
                text.push_str(&format!("  Igusa zeta: {}\n", ig.format_with("t")));
            }
            for (m, predicted, counted) in &p.rows {
                let ok = predicted == counted;
                all_match &= ok;
                let flag = if ok { "ok" } else { "MISMATCH" };
                text.push_str(&format!(
                    "  m = {m}: predicted {predicted}, counted {counted}  [{flag}]\n"
                ));
            }
        }
        primes.push(json!({
            "p": p.report.p,
            "good": p.report.good,
            "reasons": p.report.reasons,
            "igusa": p.igusa.map_or(Value::Null, |ig| ratfn_json(ig, "t")),
            "rows": p
                .rows
                .iter()
                .map(|(m, predicted, counted)| {
                    json!({
                        "m": m,
                        "predicted": predicted,
                        "counted": counted,
                        "match": predicted == counted,
                    })
                })
                .collect::<Vec<_>>(),
        }));
    }
    text.push_str(&format!(
        "result: {}\n",
        if all_match { "all predictions match" } else { "MISMATCH" }
    ));
    let json = json!({
        "schema": 1,
        "command": "oracle",
        "f": d.f_text,
        "vars": d.vars,
        "mmax": d.mmax,
        "primes": primes,
        "all_match": all_match,
    });
    Report { json, text }
}

pub fn fixtures_report(path: &str, summary: &RunSummary) -> Report {
    let total = summary.results.len();
    let mismatched = summary.mismatched();
    let mut text = String::new();
    text.push_str(&format!(
        "fixtures {path}: {total} run, {} ok, {mismatched} mismatched\n",
        total - mismatched
    ));
    let mut results = Vec::new();
    for r in &summary.results {
        if r.diffs.is_empty() {
            text.push_str(&format!("  {}: ok\n", r.name));
        } else {
            text.push_str(&format!("  {}: MISMATCH\n", r.name));
            for diff in &r.diffs {
                text.push_str(&format!("    {diff}\n"));
            }
        }
        results.push(json!({
            "name": r.name,
            "ok": r.diffs.is_empty(),
            "diffs": r.diffs,
        }));
    }
    let json = json!({
        "schema": 1,
        "command": "fixtures",
        "path": path,
        "total": total,
        "mismatched": mismatched,
        "results": results,
    });
    Report { json, text }
}
