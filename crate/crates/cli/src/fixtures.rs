//! Fixture corpus: frozen expectations for the worked examples.
//!
//! A fixture file is a JSON array of objects, each naming an input
//! polynomial, its weights, an optional twist exponent, and a bag of
//! expected values.  Every expected value carries a provenance tag:
//!
//! * `"reference"` — quoted from external literature; never recomputed.
//!   A reference-tagged b-function is fed to the checker as the stored
//!   reference, so contradictions with engine-proven facts surface.
//! * `"derived"` — frozen output of an independent engine or oracle run.
//! * `"direct"` — immediate from the input (definitional).
//!
//! Rationals are written as strings in lowest terms (`"-5/6"`); they are
//! parsed and compared as exact rationals, so `"-2/4"` would also match
//! `-1/2`.  Pole and factor lists compare as multisets keyed by location.

use std::collections::BTreeMap;

use anyhow::{anyhow, Context, Result};
use serde::Deserialize;

use swhzeta::bfun::{self, BFactor, BFactorization, Completeness};
use swhzeta::blowup;
use swhzeta::poly::{parse_polynomial, Monomial, Polynomial, Scalar, WeightVector};
use swhzeta::{padic, swh, toric, verdict, zeta};

use crate::infer_vars;

pub const EMBEDDED: &str = include_str!("../fixtures/corpus.json");

#[derive(Deserialize, Clone, Copy, PartialEq, Eq, Debug)]
#[serde(rename_all = "lowercase")]
pub enum Tag {
    Reference,
    Derived,
    Direct,
}

#[derive(Deserialize, Debug)]
#[serde(deny_unknown_fields)]
pub struct Tagged<T> {
    pub value: T,
    pub tag: Tag,
}

#[derive(Deserialize, Debug)]
#[serde(deny_unknown_fields)]
pub struct BSpec {
    pub factors: Vec<(String, u32)>,
    pub completeness: String,
}

#[derive(Deserialize, Debug, Default)]
#[serde(deny_unknown_fields)]
pub struct Expected {
    pub d: Option<Tagged<u64>>,
    pub mu: Option<Tagged<u64>>,
    pub spectrum: Option<Tagged<Vec<String>>>,
    pub candidate_poles: Option<Tagged<Vec<(String, u32)>>>,
    pub exact_poles: Option<Tagged<Vec<(String, u32)>>>,
    pub b_factors: Option<Tagged<BSpec>>,
    pub verdict: Option<Tagged<String>>,
    /// Rows (p, m, count): solutions of f ≡ 0 mod p^m.
    pub counts: Option<Tagged<Vec<(u64, u32, u64)>>>,
    /// Substring the analysis error must contain.
    pub rejects: Option<Tagged<String>>,
    /// Substring the toric-resolution error must contain.
    pub rejects_toric: Option<Tagged<String>>,
}

#[derive(Deserialize, Debug)]
#[serde(deny_unknown_fields)]
pub struct Fixture {
    pub name: String,
    pub f: String,
    pub vars: Option<Vec<String>>,
    pub w: Vec<u64>,
    pub beta: Option<Vec<u32>>,
    #[serde(default)]
    pub expected: Expected,
}

pub fn parse_corpus(text: &str) -> Result<Vec<Fixture>> {
    serde_json::from_str(text).context("fixture file is not a valid fixture array")
}

pub fn embedded_corpus() -> Vec<Fixture> {
    parse_corpus(EMBEDDED).expect("embedded corpus must parse")
}

pub struct ParsedFixture {
    pub f: Polynomial,
    pub w: WeightVector,
    pub beta: Monomial,
}

fn parse_inputs(fx: &Fixture) -> Result<ParsedFixture> {
    let vars: Vec<String> = match &fx.vars {
        Some(v) => v.clone(),
        None => infer_vars(&fx.f),
    };
    let var_refs: Vec<&str> = vars.iter().map(String::as_str).collect();
    let f = parse_polynomial(&fx.f, &var_refs)
        .map_err(|e| anyhow!("fixture \"{}\": cannot parse f: {e}", fx.name))?;
    let w = WeightVector::new(fx.w.clone())
        .map_err(|e| anyhow!("fixture \"{}\": bad weights: {e}", fx.name))?;
    let beta = match &fx.beta {
        Some(exps) => {
            if exps.len() != vars.len() {
                return Err(anyhow!(
                    "fixture \"{}\": twist has {} entries for {} variables",
                    fx.name,
                    exps.len(),
                    vars.len()
                ));
            }
            Monomial::new(exps.clone())
        }
        None => Monomial::one(vars.len()),
    };
    Ok(ParsedFixture { f, w, beta })
}

pub fn parse_rational(text: &str) -> Result<Scalar> {
    text.trim()
        .parse::<Scalar>()
        .map_err(|e| anyhow!("bad rational \"{text}\": {e}"))
}

fn parse_completeness(text: &str) -> Result<Completeness> {
    match text {
        "complete" => Ok(Completeness::Complete),
        "divisor only" => Ok(Completeness::DivisorOnly),
        "top root only" => Ok(Completeness::TopRootOnly),
        other => Err(anyhow!(
            "unknown completeness \"{other}\" (expected \"complete\", \"divisor only\" or \"top root only\")"
        )),
    }
}

pub fn bspec_to_factorization(spec: &BSpec, provenance: String) -> Result<BFactorization> {
    let mut factors = Vec::new();
    for (root, mult) in &spec.factors {
        factors.push(BFactor {
            root: parse_rational(root)?,
            multiplicity: *mult,
            top_reduced_root: false,
        });
    }
    factors.sort_by(|a, b| a.root.cmp(&b.root));
    Ok(BFactorization {
        factors,
        completeness: parse_completeness(&spec.completeness)?,
        provenance,
        note: None,
    })
}

/// Stored reference b-function for (f, w, β), if the corpus has one.
/// Variable names do not participate in the match: two fixtures denote the
/// same input when their parsed exponent data agree.
pub fn reference_bfactors(
    corpus: &[Fixture],
    f: &Polynomial,
    w: &WeightVector,
    beta: &Monomial,
) -> Option<(String, BFactorization)> {
    for fx in corpus {
        let Ok(pf) = parse_inputs(fx) else { continue };
        if pf.f != *f || pf.w.entries() != w.entries() || pf.beta != *beta {
            continue;
        }
        let Some(tagged) = &fx.expected.b_factors else { continue };
        if tagged.tag != Tag::Reference {
            continue;
        }
        let provenance = format!("stored reference (fixture \"{}\")", fx.name);
        if let Ok(b) = bspec_to_factorization(&tagged.value, provenance) {
            return Some((fx.name.clone(), b));
        }
    }
    None
}

pub struct FixtureResult {
    pub name: String,
    pub diffs: Vec<String>,
}

pub struct RunSummary {
    pub results: Vec<FixtureResult>,
}

impl RunSummary {
    pub fn mismatched(&self) -> usize {
        self.results.iter().filter(|r| !r.diffs.is_empty()).count()
    }
}

pub fn run_corpus(fixtures: &[Fixture]) -> Result<RunSummary> {
    let mut results = Vec::new();
    for fx in fixtures {
        let diffs = run_one(fx)?;
        results.push(FixtureResult { name: fx.name.clone(), diffs });
    }
    Ok(RunSummary { results })
}

fn fmt_pole_map(entries: &BTreeMap<Scalar, u32>) -> String {
    if entries.is_empty() {
        return "none".into();
    }
    let parts: Vec<String> =
        entries.iter().map(|(loc, order)| format!("{loc}:{order}")).collect();
    parts.join(", ")
}

fn fmt_factor_map(entries: &BTreeMap<Scalar, u32>) -> String {
    fmt_pole_map(entries)
}

fn pole_list_to_map(pairs: &[(String, u32)]) -> Result<BTreeMap<Scalar, u32>> {
    let mut map = BTreeMap::new();
    for (loc, order) in pairs {
        let loc = parse_rational(loc)?;
        if map.insert(loc.clone(), *order).is_some() {
            return Err(anyhow!("location {loc} listed twice"));
        }
    }
    Ok(map)
}

fn factor_map(b: &BFactorization) -> BTreeMap<Scalar, u32> {
    b.factors.iter().map(|f| (f.root.clone(), f.multiplicity)).collect()
}

/// Run one fixture; collect one diff line per mismatching field.
/// Input-level problems (unparseable polynomial, bad weights) are hard
/// errors: they mean the file itself is broken, not that the engine
/// disagrees with it.
fn run_one(fx: &Fixture) -> Result<Vec<String>> {
    let pf = parse_inputs(fx)?;
    let ex = &fx.expected;
    let mut diffs = Vec::new();

    if let Some(t) = &ex.rejects_toric {
        if pf.f.nvars() != 2 {
            diffs.push("rejects_toric: the toric gate only applies to 2 variables".into());
        } else {
            match toric::snc_resolution(&pf.f, &pf.beta) {
                Ok(_) => diffs.push(format!(
                    "rejects_toric: expected a toric failure mentioning \"{}\", but the resolution succeeded",
                    t.value
                )),
                Err(e) => {
                    let msg = e.to_string();
                    if !msg.contains(&t.value) {
                        diffs.push(format!(
                            "rejects_toric: error \"{msg}\" does not mention \"{}\"",
                            t.value
                        ));
                    }
                }
            }
        }
    }

    if let Some(t) = &ex.rejects {
        match swh::analyze(&pf.f, &pf.w) {
            Ok(_) => diffs.push(format!(
                "rejects: expected analysis to fail mentioning \"{}\", but it succeeded",
                t.value
            )),
            Err(e) => {
                let msg = e.to_string();
                if !msg.contains(&t.value) {
                    diffs.push(format!("rejects: error \"{msg}\" does not mention \"{}\"", t.value));
                }
            }
        }
        return Ok(diffs);
    }

    let has_value_expectations = ex.d.is_some()
        || ex.mu.is_some()
        || ex.spectrum.is_some()
        || ex.candidate_poles.is_some()
        || ex.b_factors.is_some()
        || ex.verdict.is_some();
    let analysis = match swh::analyze(&pf.f, &pf.w) {
        Ok(a) => a,
        Err(e) => {
            if has_value_expectations {
                diffs.push(format!("analysis: failed: {e}"));
            }
            return Ok(diffs);
        }
    };

    if let Some(t) = &ex.d {
        if analysis.d != t.value {
            diffs.push(format!("d: expected {}, got {}", t.value, analysis.d));
        }
    }
    if let Some(t) = &ex.mu {
        if analysis.mu() as u64 != t.value {
            diffs.push(format!("mu: expected {}, got {}", t.value, analysis.mu()));
        }
    }
    if let Some(t) = &ex.spectrum {
        let mut want = Vec::new();
        for s in &t.value {
            want.push(parse_rational(s)?);
        }
        want.sort();
        if want != analysis.spectrum {
            let got: Vec<String> = analysis.spectrum.iter().map(Scalar::to_string).collect();
            diffs.push(format!(
                "spectrum: expected [{}], got [{}]",
                t.value.join(", "),
                got.join(", ")
            ));
        }
    }

    if let Some(t) = &ex.candidate_poles {
        let want = pole_list_to_map(&t.value)?;
        match blowup::weighted_blowup(&analysis, &pf.beta)
            .map_err(|e| e.to_string())
            .and_then(|s| blowup::candidate_poles(&s).map_err(|e| e.to_string()))
        {
            Ok(poles) => {
                if poles.entries != want {
                    diffs.push(format!(
                        "candidate_poles: expected {{{}}}, got {{{}}}",
                        fmt_pole_map(&want),
                        fmt_pole_map(&poles.entries)
                    ));
                }
            }
            Err(e) => diffs.push(format!("candidate_poles: {e}")),
        }
    }

    if let Some(t) = &ex.exact_poles {
        let want = pole_list_to_map(&t.value)?;
        if pf.f.nvars() != 2 {
            diffs.push("exact_poles: the toric path only applies to 2 variables".into());
        } else {
            match toric::snc_resolution(&pf.f, &pf.beta)
                .map_err(|e| e.to_string())
                .and_then(|res| {
                    zeta::assemble_motivic(&res).poles().map_err(|e| e.to_string())
                }) {
                Ok(poles) => {
                    if poles.entries != want {
                        diffs.push(format!(
                            "exact_poles: expected {{{}}}, got {{{}}}",
                            fmt_pole_map(&want),
                            fmt_pole_map(&poles.entries)
                        ));
                    }
                }
                Err(e) => diffs.push(format!("exact_poles: {e}")),
            }
        }
    }

    let mut reference = None;
    if let Some(t) = &ex.b_factors {
        if t.tag == Tag::Reference {
            let provenance = format!("stored reference (fixture \"{}\")", fx.name);
            reference = Some(bspec_to_factorization(&t.value, provenance)?);
        } else {
            let engine = if pf.beta.is_constant() {
                if analysis.flags.is_weighted_homogeneous {
                    bfun::qh_bfunction(&analysis).map_err(|e| e.to_string())
                } else {
                    Ok(bfun::swh_divisor(&analysis))
                }
            } else {
                bfun::twisted_facts(&analysis, &pf.beta).map_err(|e| e.to_string())
            };
            match engine {
                Ok(b) => {
                    let want = bspec_to_factorization(&t.value, String::new())?;
                    if factor_map(&b) != factor_map(&want) {
                        diffs.push(format!(
                            "b_factors: expected {{{}}}, got {{{}}}",
                            fmt_factor_map(&factor_map(&want)),
                            fmt_factor_map(&factor_map(&b))
                        ));
                    }
                    if b.completeness.to_string() != t.value.completeness {
                        diffs.push(format!(
                            "b_factors: expected completeness \"{}\", got \"{}\"",
                            t.value.completeness, b.completeness
                        ));
                    }
                }
                Err(e) => diffs.push(format!("b_factors: {e}")),
            }
        }
    }

    if let Some(t) = &ex.verdict {
        let v = verdict::twisted_check(&analysis, &pf.beta, reference.as_ref());
        let got = v.status.to_string();
        if got != t.value {
            diffs.push(format!("verdict: expected {}, got {}", t.value, got));
        }
    }

    if let Some(t) = &ex.counts {
        for &(p, m, want) in &t.value {
            match padic::count_mod(&pf.f, p, m) {
                Ok(got) => {
                    if got != u128::from(want) {
                        diffs.push(format!("counts: p={p} m={m}: expected {want}, got {got}"));
                    }
                }
                Err(e) => diffs.push(format!("counts: p={p} m={m}: {e}")),
            }
        }
    }

    Ok(diffs)
}
