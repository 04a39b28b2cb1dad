//! The one-step weighted blowup of the origin: chart data with quotient
//! types, smoothness certificates, and the numerical data `(N, ν)` that
//! bounds candidate poles.
//!
//! For weights `w` the blowup has `n+1` charts; chart `i` is a quotient of
//! affine space by a cyclic group of order `w_i` acting with weights
//! `1/w_i(w_0, …, −1, …, w_n)`.  The exceptional divisor pulls back `f`
//! with multiplicity `N_E = d` and carries `ν_E = Σ_i w_i(β_i+1)` for the
//! twist `x^β` (additive convention: relative canonical order plus twist
//! order plus one).  The strict transform contributes `N_H = ν_H = 1`.
//!
//! Exactness claim: the chart residuals are computed by exact substitution,
//! and smoothness of the strict transform on the exceptional locus is
//! certified by a Gröbner basis showing the Jacobian ideal of the
//! dehomogenized initial part is the unit ideal.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use thiserror::Error;

use crate::gbase::{buchberger, GroebnerBasis, TermOrder};
use crate::poly::{Monomial, Polynomial, Scalar};
use crate::swh::{check_eqmon, SwhAnalysis, SwhError};

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum BlowupError {
    #[error("expected {expected} variables, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("the Jacobian certificate failed on chart {chart}: the initial part is singular along the exceptional divisor")]
    SmoothCertificateFailed { chart: usize },
    #[error("the blowup summary is invalid (mixed-term condition failed); no candidate pole set is claimed")]
    InvalidSummary,
    #[error(transparent)]
    Swh(#[from] SwhError),
}

/// One chart of the weighted blowup.
#[derive(Clone, Debug)]
pub struct QChart {
    /// Which variable is the chart variable.
    pub index: usize,
    /// Order of the cyclic quotient group: `w_index`.
    pub group_order: u64,
    /// Numerators of the quotient type `1/w_i(…)`: `w_j` away from the chart
    /// slot, `−1` at it.
    pub quotient_weights: Vec<i64>,
    /// Multiplicity of `f ∘ chart map` along the exceptional divisor.
    pub pulled_back_degree: u64,
    /// `(f ∘ chart map) / x_i^d`, in variables (chart var, then the u's).
    pub residual: Polynomial,
    /// Basis certifying `1 ∈ (g, ∂g)` for `g` = residual at chart var 0.
    pub smooth_certificate: GroebnerBasis,
}

/// Numerical outcome of the blowup: everything pole bookkeeping needs.
#[derive(Clone, Debug)]
pub struct QResolutionSummary {
    pub twist: Monomial,
    /// Multiplicity of `f` along the exceptional divisor (= d).
    pub n_exceptional: u64,
    /// `Σ w_i(β_i+1) = d·l(β)` along the exceptional divisor.
    pub nu_exceptional: u64,
    /// Strict transform data: always (1, 1).
    pub n_strict: u64,
    pub nu_strict: u64,
    pub valid: bool,
    pub eqmon_ok: bool,
    /// Offending mixed term when the monomial condition fails.
    pub eqmon_offender: Option<(Scalar, Monomial)>,
    pub charts: Vec<QChart>,
}

impl QResolutionSummary {
    /// `l(β) = ν_E / N_E`.
    pub fn twist_level(&self) -> Scalar {
        Scalar::new(BigInt::from(self.nu_exceptional), BigInt::from(self.n_exceptional))
    }
}

/// Whether pole locations/orders are proven bounds or exact values.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PoleKind {
    Candidate,
    Exact,
}

/// Pole locations with order (bounds), all strictly negative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PoleSet {
    pub entries: BTreeMap<Scalar, u32>,
    pub kind: PoleKind,
}

impl PoleSet {
    pub fn new(kind: PoleKind, entries: impl IntoIterator<Item = (Scalar, u32)>) -> Self {
        let entries: BTreeMap<Scalar, u32> = entries.into_iter().collect();
        for (loc, order) in &entries {
            assert!(loc < &Scalar::from(BigInt::from(0)), "pole location must be negative");
            assert!(*order >= 1, "pole order must be positive");
        }
        PoleSet { entries, kind }
    }

    /// Every pole of `exact` appears here with at least its order.
    pub fn covers(&self, exact: &PoleSet) -> bool {
        exact
            .entries
            .iter()
            .all(|(loc, order)| self.entries.get(loc).is_some_and(|bound| bound >= order))
    }
}

impl fmt::Display for PoleSet {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.kind {
            PoleKind::Candidate => "candidate",
            PoleKind::Exact => "exact",
        };
        write!(fm, "{kind} poles: ")?;
        if self.entries.is_empty() {
            return write!(fm, "none");
        }
        let parts: Vec<String> = self
            .entries
            .iter()
            .rev()
            .map(|(loc, order)| {
                if *order == 1 {
                    format!("{loc}")
                } else {
                    format!("{loc} (order ≤ {order})")
                }
            })
            .collect();
        write!(fm, "{}", parts.join(", "))
    }
}

/// Build all charts of the `w`-weighted blowup for the twist `x^β`, certify
/// smoothness of the strict transform over the exceptional locus, and record
/// the numerical data.
pub fn weighted_blowup(
    analysis: &SwhAnalysis,
    beta: &Monomial,
) -> Result<QResolutionSummary, BlowupError> {
    let nvars = analysis.nvars();
    if beta.nvars() != nvars {
        return Err(BlowupError::ArityMismatch { expected: nvars, got: beta.nvars() });
    }
    let d = analysis.d;
    let nu: u64 = beta
        .exponents()
        .iter()
        .zip(analysis.w.entries())
        .map(|(&b, &wi)| wi * (b as u64 + 1))
        .sum();

    let mut charts = Vec::with_capacity(nvars);
    for i in 0..nvars {
        let (deg, residual) = analysis
            .f
            .chart_substitute(&analysis.w, i)
            .expect("analysis carries a consistent weight vector");
        debug_assert_eq!(deg, d);
        let g = residual.substitute_zero(0).expect("chart variable is slot 0");
        let mut gens = vec![g.clone()];
        gens.extend(g.gradient().expect("well-formed polynomial"));
        let smooth_certificate = buchberger(&gens, nvars - 1, TermOrder::GrevLex);
        if !smooth_certificate.contains_one() {
            return Err(BlowupError::SmoothCertificateFailed { chart: i });
        }
        let quotient_weights: Vec<i64> = (0..nvars)
            .map(|j| if j == i { -1 } else { analysis.w.get(j) as i64 })
            .collect();
        charts.push(QChart {
            index: i,
            group_order: analysis.w.get(i),
            quotient_weights,
            pulled_back_degree: d,
            residual,
            smooth_certificate,
        });
    }

    let eqmon = check_eqmon(analysis, beta)?;
    Ok(QResolutionSummary {
        twist: beta.clone(),
        n_exceptional: d,
        nu_exceptional: nu,
        n_strict: 1,
        nu_strict: 1,
        valid: eqmon.holds,
        eqmon_ok: eqmon.holds,
        eqmon_offender: eqmon.offender,
        charts,
    })
}

/// Candidate poles from the blowup numerical data: `{−1, −l(β)}` with order
/// one each, collapsing to `{−1}` with order bound two when `l(β) = 1`.
pub fn candidate_poles(summary: &QResolutionSummary) -> Result<PoleSet, BlowupError> {
    if !summary.valid {
        return Err(BlowupError::InvalidSummary);
    }
    let l = summary.twist_level();
    let minus_one = -Scalar::one();
    let entries = if l.is_one() {
        vec![(minus_one, 2u32)]
    } else {
        vec![(minus_one, 1u32), (-l, 1u32)]
    };
    Ok(PoleSet::new(PoleKind::Candidate, entries))
}
