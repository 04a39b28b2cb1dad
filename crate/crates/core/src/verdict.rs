//! Verdicts: compare pole sets of (twisted) zeta functions against certified
//! b-function facts, and search for twists realizing spectral numbers.
//!
//! A PASS is only ever issued when every pole entry is matched by a b-root
//! whose multiplicity bound covers the pole's order, using nothing beyond
//! the completeness level each factorization honestly claims.  FAIL is
//! reserved for contradictions with stored reference data; everything the
//! engine merely cannot settle is UNKNOWN.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};

use crate::bfun::{self, BFactorization, Completeness};
use crate::blowup::{self, PoleKind, PoleSet};
use crate::poly::{default_names, Monomial, Polynomial, Scalar};
use crate::swh::{self, LevelValue, SwhAnalysis};
use crate::toric;
use crate::zeta;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VerdictStatus {
    Pass,
    Fail,
    NotApplicable,
    Unknown,
}

impl fmt::Display for VerdictStatus {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            VerdictStatus::Pass => "PASS",
            VerdictStatus::Fail => "FAIL",
            VerdictStatus::NotApplicable => "NOT_APPLICABLE",
            VerdictStatus::Unknown => "UNKNOWN",
        };
        write!(fm, "{s}")
    }
}

/// Outcome of one pole-versus-root comparison.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub status: VerdictStatus,
    /// The pole bounds under discussion (empty candidate set when the
    /// hypotheses fail so early that no bound is claimed).
    pub pole_set: PoleSet,
    /// The b-function facts the comparison was allowed to use.
    pub b_factors: BFactorization,
    /// One deduction per line, in order.
    pub inference_chain: Vec<String>,
    pub diagnostics: Vec<String>,
}

/// Pole entries not matched by any certified root with multiplicity at
/// least the pole's order.  Empty means the containment holds.
///
/// Factor multiplicities are lower bounds on the true b-function
/// multiplicities whatever the completeness flag, so a nonempty result
/// means "not covered by what is certified", never "refuted".
pub fn audit_coverage(poles: &PoleSet, b: &BFactorization) -> Vec<(Scalar, u32)> {
    poles
        .entries
        .iter()
        .filter(|(loc, order)| {
            !b.factors.iter().any(|fac| &fac.root == *loc && fac.multiplicity >= **order)
        })
        .map(|(loc, order)| (loc.clone(), *order))
        .collect()
}

/// Roots the engine has proven (as divisibility facts) that a reference
/// factorization claiming completeness fails to accommodate.
fn complete_reference_conflicts(
    proven: &BFactorization,
    reference: &BFactorization,
) -> Vec<(Scalar, u32)> {
    if reference.completeness != Completeness::Complete {
        return Vec::new();
    }
    proven
        .factors
        .iter()
        .filter(|fac| {
            reference
                .factors
                .iter()
                .find(|r| r.root == fac.root)
                .is_none_or(|r| r.multiplicity < fac.multiplicity)
        })
        .map(|fac| (fac.root.clone(), fac.multiplicity))
        .collect()
}

fn render_entries(entries: &[(Scalar, u32)]) -> String {
    let parts: Vec<String> = entries
        .iter()
        .map(|(loc, order)| {
            if *order == 1 {
                format!("{loc}")
            } else {
                format!("{loc} (order {order})")
            }
        })
        .collect();
    parts.join(", ")
}

fn render_monomial(m: &Monomial) -> String {
    let names = default_names(m.nvars());
    let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    Polynomial::from_term(m.clone(), Scalar::one()).format_with(&refs)
}

/// b-function facts available for the twist `x^β`: the full closed form for
/// an untwisted weighted-homogeneous germ, the certified divisor otherwise.
fn b_side(analysis: &SwhAnalysis, beta: &Monomial) -> BFactorization {
    if beta.is_constant() {
        if analysis.flags.is_weighted_homogeneous {
            return bfun::qh_bfunction(analysis).expect("flag says weighted homogeneous");
        }
        return bfun::swh_divisor(analysis);
    }
    match bfun::twisted_facts(analysis, beta) {
        Ok(b) => b,
        Err(_) => BFactorization {
            factors: Vec::new(),
            completeness: Completeness::DivisorOnly,
            provenance: "no certified factor: the twist is divisible by f".to_string(),
            note: None,
        },
    }
}

/// Untwisted check: candidate poles of the motivic zeta function against
/// certified b-function roots.  Same verdict as `twisted_check` with the
/// trivial twist and no reference.
pub fn smc_check(analysis: &SwhAnalysis) -> Verdict {
    twisted_check(analysis, &Monomial::one(analysis.nvars()), None)
}

/// Check the twisted pole bound for `x^β f^s` and compare it against the
/// certified twisted b-function facts.
///
/// `reference` is an externally stored factorization (a transcribed known
/// b-function, say).  A complete reference that cannot accommodate a root
/// the engine has proven turns the verdict into FAIL; otherwise references
/// only add corroborating or cautionary diagnostics.
pub fn twisted_check(
    analysis: &SwhAnalysis,
    beta: &Monomial,
    reference: Option<&BFactorization>,
) -> Verdict {
    assert_eq!(beta.nvars(), analysis.nvars(), "twist arity must match the analysis");
    let summary = blowup::weighted_blowup(analysis, beta)
        .expect("a valid analysis admits the weighted blowup in every chart");
    let b_factors = b_side(analysis, beta);
    let mut chain = Vec::new();
    let mut diagnostics = Vec::new();

    // Without the monomial condition the pullback of x^β dx need not have
    // normal crossings on the blowup, and no candidate list is claimed.
    if !summary.eqmon_ok {
        let (coeff, mon) =
            summary.eqmon_offender.clone().expect("a failing monomial check names an offender");
        diagnostics.push(format!(
            "condition (eqmon) fails: initial-part term {coeff}·{} mixes a twisted variable \
             with another variable",
            render_monomial(&mon)
        ));
        diagnostics.push("no candidate pole list is claimed for this twist".to_string());
        return Verdict {
            status: VerdictStatus::NotApplicable,
            pole_set: PoleSet::new(PoleKind::Candidate, []),
            b_factors,
            inference_chain: chain,
            diagnostics,
        };
    }

    let candidates = blowup::candidate_poles(&summary).expect("summary verified valid");
    chain.push(format!(
        "one weighted blowup: exceptional divisor (N, ν) = ({}, {}), strict transform (1, 1); {}",
        summary.n_exceptional, summary.nu_exceptional, candidates
    ));
    chain.push(if beta.is_constant() {
        "(eqmon) holds vacuously: the twist is trivial".to_string()
    } else {
        "(eqmon) holds: no initial-part term mixes a twisted variable with the others"
            .to_string()
    });

    let eqpa = swh::check_eqpa(analysis, beta).expect("arity checked above");
    if !eqpa.holds {
        diagnostics.push(match &eqpa.actual {
            LevelValue::Finite { value, witness } => format!(
                "condition (eqpa) fails: l(β) = {}, but the filtration level of the twist is \
                 {} (witness {})",
                eqpa.expected,
                value,
                render_monomial(witness)
            ),
            LevelValue::Bottom => format!(
                "condition (eqpa) fails: l(β) = {}, but the twist lies in the gradient ideal \
                 (level bottom)",
                eqpa.expected
            ),
        });
        diagnostics.push(
            "the pole–root containment argument needs (eqpa); the candidate list above still \
             bounds the poles"
                .to_string(),
        );
        if let Some(r) = reference {
            let target = -summary.twist_level();
            if r.factors.iter().any(|fac| fac.root == target) {
                diagnostics
                    .push(format!("stored reference b-function {r} does have a root at {target}"));
            } else {
                diagnostics.push(format!(
                    "stored reference b-function {r} has no root at {target}; if the candidate \
                     {target} is an actual pole, it is a pole with no matching root"
                ));
            }
        }
        return Verdict {
            status: VerdictStatus::NotApplicable,
            pole_set: candidates,
            b_factors,
            inference_chain: chain,
            diagnostics,
        };
    }

    chain.push(format!(
        "(eqpa) holds: the filtration level of the twist equals l(β) = {}",
        eqpa.expected
    ));
    chain.push(format!("b-facts ({}): {}", b_factors.completeness, b_factors.provenance));
    let l = summary.twist_level();
    if l.is_one() {
        chain.push(
            "l(β) = 1: −1 is a root of the reduced part as well, so the b-function vanishes \
             at −1 to order at least 2, covering the order-2 bound"
                .to_string(),
        );
    } else {
        chain.push(format!(
            "{} is a root of the reduced b-function, and −1 is a root via the (s+1) factor",
            -l
        ));
    }

    let uncovered = audit_coverage(&candidates, &b_factors);
    let mut status = if uncovered.is_empty() {
        chain.push(format!(
            "coverage audit: every candidate pole is matched by a root of {b_factors} with at \
             least its order"
        ));
        VerdictStatus::Pass
    } else {
        diagnostics.push(format!(
            "no certified b-fact covers: {}; the b-function knowledge here is incomplete",
            render_entries(&uncovered)
        ));
        VerdictStatus::Unknown
    };

    if let Some(r) = reference {
        let conflicts = complete_reference_conflicts(&b_factors, r);
        if !conflicts.is_empty() {
            status = VerdictStatus::Fail;
            diagnostics.push(format!(
                "contradiction: {} divides the b-function by the engine's certificate, but the \
                 stored reference {r} claims completeness without root(s) {}",
                b_factors,
                render_entries(&conflicts)
            ));
        } else if audit_coverage(&candidates, r).is_empty() {
            diagnostics.push(format!("stored reference b-function {r} agrees with the containment"));
        } else {
            diagnostics.push(format!(
                "stored reference b-function {r} is partial here and does not cover every \
                 candidate on its own"
            ));
        }
    }

    Verdict { status, pole_set: candidates, b_factors, inference_chain: chain, diagnostics }
}

/// One spectral number's worth of explorer output.
#[derive(Clone, Debug, PartialEq)]
pub struct ExploreEntry {
    pub alpha: Scalar,
    /// Exponents β with l(β) = α passing both (eqmon) and (eqpa),
    /// lexicographically ordered.
    pub witnesses: Vec<Monomial>,
    /// Exponents β with l(β) = α failing a condition, with the reason.
    pub near_misses: Vec<(Monomial, String)>,
    /// Monomials with l(γ) ≠ α whose filtration level is nevertheless α,
    /// paired with their l-value; such γ do not witness (eqpa) at α.
    pub level_only: Vec<(Monomial, Scalar)>,
    /// Candidate poles {−1, −α} for the first witness (order collapse at
    /// α = 1), when the number is achieved.
    pub candidates: Option<PoleSet>,
    /// Two-variable nondegenerate inputs only: whether −α sits in the exact
    /// pole set of the zeta function twisted by the first witness.
    pub toric_confirmed: Option<bool>,
    pub notes: Vec<String>,
}

impl ExploreEntry {
    pub fn achieved(&self) -> bool {
        !self.witnesses.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ExploreReport {
    pub bound: u64,
    pub entries: Vec<ExploreEntry>,
}

/// All exponent vectors β with Σ wᵢβᵢ = k, lexicographic order.
fn exponents_of_weighted_degree(w: &[u64], k: u64) -> Vec<Vec<u32>> {
    fn rec(w: &[u64], slot: usize, rem: u64, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if slot + 1 == w.len() {
            if rem % w[slot] == 0 {
                cur[slot] = (rem / w[slot]) as u32;
                out.push(cur.clone());
                cur[slot] = 0;
            }
            return;
        }
        let mut e = 0u32;
        while u64::from(e) * w[slot] <= rem {
            cur[slot] = e;
            rec(w, slot + 1, rem - u64::from(e) * w[slot], cur, out);
            e += 1;
        }
        cur[slot] = 0;
    }
    let mut out = Vec::new();
    let mut cur = vec![0u32; w.len()];
    rec(w, 0, k, &mut cur, &mut out);
    out
}

/// For every distinct spectral number α, search for twists x^β with
/// l(β) = α satisfying both hypotheses, up to total degree `bound`.
/// `toric_oracle` enables the exact-pole confirmation on two-variable
/// nondegenerate inputs (it is skipped elsewhere regardless).
///
/// Evidence, never proof: an unachieved α may still be achieved by a twist
/// beyond the bound, or by a non-monomial function.
pub fn question_explore(analysis: &SwhAnalysis, bound: u64, toric_oracle: bool) -> ExploreReport {
    let mut alphas: Vec<Scalar> = analysis.spectrum.clone();
    alphas.sort();
    alphas.dedup();
    let toric_possible = toric_oracle
        && analysis.nvars() == 2
        && swh::newton_nondegenerate(&analysis.f).map(|r| r.nondegenerate).unwrap_or(false);
    let entries = alphas
        .into_iter()
        .map(|alpha| explore_alpha(analysis, alpha, bound, toric_possible))
        .collect();
    ExploreReport { bound, entries }
}

fn explore_alpha(
    analysis: &SwhAnalysis,
    alpha: Scalar,
    bound: u64,
    toric_possible: bool,
) -> ExploreEntry {
    // l(β) = α ⟺ Σ wᵢβᵢ = d·α − |w|, a nonnegative integer whenever α is a
    // spectral number.
    let target = alpha.clone() * Scalar::from_integer(BigInt::from(analysis.d))
        - Scalar::from_integer(BigInt::from(analysis.w.total()));
    assert!(target.is_integer(), "spectral numbers have integral weighted degree");
    let k = target.to_integer().to_u64().expect("spectral numbers are at least |w|/d");

    let mut witnesses = Vec::new();
    let mut near_misses = Vec::new();
    let mut notes = Vec::new();
    let mut skipped = 0usize;
    for exps in exponents_of_weighted_degree(analysis.w.entries(), k) {
        let beta = Monomial::new(exps);
        if beta.total_degree() > bound {
            skipped += 1;
            continue;
        }
        let eqmon = swh::check_eqmon(analysis, &beta).expect("arity matches");
        if !eqmon.holds {
            let (coeff, mon) = eqmon.offender.expect("failing check names an offender");
            near_misses.push((
                beta,
                format!(
                    "(eqmon) fails: initial-part term {coeff}·{} mixes a twisted variable \
                     with another variable",
                    render_monomial(&mon)
                ),
            ));
            continue;
        }
        let eqpa = swh::check_eqpa(analysis, &beta).expect("arity matches");
        if !eqpa.holds {
            near_misses.push((beta, format!("(eqpa) fails: level is {}", eqpa.actual)));
            continue;
        }
        witnesses.push(beta);
    }
    if skipped > 0 {
        notes.push(format!(
            "{skipped} exponent(s) with l(β) = {alpha} exceeded the degree bound {bound}"
        ));
    }

    // Monomials that land on level α only after reduction: l(γ) < α but the
    // normal form pushes the level up to exactly α.
    let mut level_only = Vec::new();
    for kk in 0..k {
        for exps in exponents_of_weighted_degree(analysis.w.entries(), kk) {
            let gamma = Monomial::new(exps);
            if gamma.total_degree() > bound {
                continue;
            }
            let g = Polynomial::from_term(gamma.clone(), Scalar::one());
            let lv = swh::level(analysis, &g).expect("monomials are nonzero");
            if lv.as_finite() == Some(&alpha) {
                let l_value = analysis.level_of_exponent(&gamma);
                level_only.push((gamma, l_value));
            }
        }
    }

    let (candidates, toric_confirmed) = match witnesses.first() {
        None => (None, None),
        Some(beta) => {
            let summary =
                blowup::weighted_blowup(analysis, beta).expect("witness passed the checks");
            let cands = blowup::candidate_poles(&summary).expect("(eqmon) verified");
            let confirmed = if toric_possible {
                confirm_pole_via_toric(analysis, beta, &alpha, &mut notes)
            } else {
                None
            };
            (Some(cands), confirmed)
        }
    };

    ExploreEntry { alpha, witnesses, near_misses, level_only, candidates, toric_confirmed, notes }
}

fn confirm_pole_via_toric(
    analysis: &SwhAnalysis,
    beta: &Monomial,
    alpha: &Scalar,
    notes: &mut Vec<String>,
) -> Option<bool> {
    let res = match toric::snc_resolution(&analysis.f, beta) {
        Ok(res) => res,
        Err(e) => {
            notes.push(format!("toric path unavailable for witness {}: {e}", render_monomial(beta)));
            return None;
        }
    };
    match zeta::assemble_motivic(&res).poles() {
        Ok(poles) => Some(poles.entries.contains_key(&-alpha.clone())),
        Err(e) => {
            notes.push(format!("exact pole set not certified for {}: {e}", render_monomial(beta)));
            None
        }
    }
}
