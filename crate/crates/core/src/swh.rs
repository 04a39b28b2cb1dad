//! Semi-weighted-homogeneous analysis: the decomposition `f = f_d + higher`,
//! isolatedness and irreducibility gates, the spectrum, the filtration level
//! of a function class, and the two monomial conditions used by the twisted
//! verdicts.
//!
//! Throughout, `w` is a normalized positive weight vector, `d` is the least
//! weighted degree appearing in `f`, and the *level* of an exponent `β` is
//!
//! ```text
//!   l(β) = Σ_i w_i (β_i + 1) / d .
//! ```
//!
//! The level of a function class `g` modulo `(grad f)` is the largest value
//! `l(γ)` such that `g` is congruent, modulo the gradient ideal, to a
//! polynomial supported on monomials of level ≥ `l(γ)`.  Inside the
//! certified truncated Milnor algebra this is a finite exact linear-algebra
//! question; truncation is faithful because every monomial beyond the
//! truncation degree already lies in the gradient ideal.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::gbase::{local_milnor_algebra, monomials_of_degree, GbError, MilnorAlgebra, TermOrder};
use crate::newton::{self, NewtonError, NondegeneracyReport};
use crate::poly::{Monomial, Polynomial, Scalar, WeightVector};
use crate::unipoly::UniPoly;

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum SwhError {
    #[error("the zero polynomial is not allowed here")]
    ZeroFunction,
    #[error("polynomial must vanish at the origin")]
    NonzeroConstantTerm,
    #[error("need at least two variables (an isolated hypersurface singularity of dimension ≥ 1)")]
    TooFewVariables,
    #[error("expected {expected} variables, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("the initial part does not have an isolated critical point at the origin (no truncation level up to {bound} certifies it)")]
    InitialNotIsolated { bound: u32 },
    #[error("the function is regular at the origin")]
    SmoothAtOrigin,
    #[error("for plane curves the initial part must be irreducible over C, i.e. a constant times y^w0 - a*x^w1 with a ≠ 0 after normalizing the weights; got {found}")]
    InitialReducible { found: String },
    #[error("could not certify the local Milnor algebra of the full polynomial within truncation bound {bound}")]
    FullAlgebraNotCertified { bound: u32 },
}

/// Hypothesis flags recorded by [`analyze`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SwhFlags {
    pub initial_isolated: bool,
    pub initial_irreducible: bool,
    pub is_weighted_homogeneous: bool,
}

/// Everything the rest of the crate needs to know about a semi-weighted-
/// homogeneous germ: the split of `f`, both local algebras, and the spectrum.
#[derive(Clone, Debug)]
pub struct SwhAnalysis {
    pub f: Polynomial,
    pub w: WeightVector,
    pub d: u64,
    pub f_d: Polynomial,
    pub higher: Polynomial,
    /// Local algebra of the full `f` (levels are measured here).
    pub milnor: MilnorAlgebra,
    /// Local algebra of the initial part (the spectrum is read off here).
    pub milnor_initial: MilnorAlgebra,
    /// Multiset `{l(γ) : γ in the initial staircase}`, ascending.
    pub spectrum: Vec<Scalar>,
    /// Dimension of the hypersurface: `nvars = n + 1`.
    pub n: usize,
    pub flags: SwhFlags,
}

impl SwhAnalysis {
    pub fn nvars(&self) -> usize {
        self.f.nvars()
    }

    /// Milnor number of `f` at the origin.
    pub fn mu(&self) -> usize {
        self.milnor.dimension()
    }

    pub fn mu_initial(&self) -> usize {
        self.milnor_initial.dimension()
    }

    /// `l(β) = Σ w_i (β_i + 1) / d`.
    pub fn level_of_exponent(&self, beta: &Monomial) -> Scalar {
        level_of_exponent(&self.w, self.d, beta)
    }

    /// `|w|/d`, the common least spectral number.
    pub fn min_level(&self) -> Scalar {
        Scalar::new(BigInt::from(self.w.total()), BigInt::from(self.d))
    }
}

pub fn level_of_exponent(w: &WeightVector, d: u64, beta: &Monomial) -> Scalar {
    assert_eq!(w.len(), beta.nvars(), "arity mismatch");
    let num: u64 = beta
        .exponents()
        .iter()
        .zip(w.entries())
        .map(|(&b, &wi)| wi * (b as u64 + 1))
        .sum();
    Scalar::new(BigInt::from(num), BigInt::from(d))
}

/// Product formula for the Milnor number of a weighted-homogeneous isolated
/// singularity: `Π_i (d − w_i)/w_i`.  Returned as a rational; callers use it
/// as a truncation-bound heuristic and as an independent cross-check.
pub fn weight_count_mu(w: &WeightVector, d: u64) -> Scalar {
    let mut acc = Scalar::one();
    for &wi in w.entries() {
        acc = acc * Scalar::new(BigInt::from(d as i64 - wi as i64), BigInt::from(wi));
    }
    acc
}

fn initial_truncation_bound(w: &WeightVector, d: u64) -> u32 {
    let mu = weight_count_mu(w, d);
    let guess = if mu.is_positive() {
        (mu.numer() / mu.denom()).try_into().unwrap_or(u32::MAX - 8)
    } else {
        0u32
    };
    guess.max(4) + 2
}

/// Split `f` by weight, certify both local algebras, and record the
/// hypothesis checks.
pub fn analyze(f: &Polynomial, w: &WeightVector) -> Result<SwhAnalysis, SwhError> {
    if f.is_zero() {
        return Err(SwhError::ZeroFunction);
    }
    if !f.constant_term().is_zero() {
        return Err(SwhError::NonzeroConstantTerm);
    }
    let nvars = f.nvars();
    if nvars < 2 {
        return Err(SwhError::TooFewVariables);
    }
    if w.len() != nvars {
        return Err(SwhError::ArityMismatch { expected: nvars, got: w.len() });
    }
    let parts = f.weighted_parts(w).expect("arity checked");
    let (&d, f_d) = parts.iter().next().expect("nonzero polynomial");
    let f_d = f_d.clone();
    let higher = &f.clone() - &f_d;

    let order = TermOrder::WeightedGradedLex(w.clone());
    let bound_init = initial_truncation_bound(w, d);
    let milnor_initial = match local_milnor_algebra(&f_d, order.clone(), bound_init) {
        Ok(alg) => alg,
        Err(GbError::SmoothAtOrigin) => return Err(SwhError::SmoothAtOrigin),
        Err(GbError::TruncationExceeded { bound }) => {
            return Err(SwhError::InitialNotIsolated { bound })
        }
        Err(GbError::NotZeroDimensional { .. }) => unreachable!("truncated ideals are 0-dim"),
    };

    let initial_irreducible = if nvars == 2 {
        check_plane_irreducible(&f_d, w)?;
        true
    } else {
        true // automatic in more than two variables
    };

    let mut spectrum: Vec<Scalar> = milnor_initial
        .basis()
        .iter()
        .map(|g| level_of_exponent(w, d, g))
        .collect();
    spectrum.sort();

    let bound_full = u32::try_from(milnor_initial.dimension()).unwrap_or(u32::MAX - 8) + 2;
    let milnor = match local_milnor_algebra(f, order, bound_full) {
        Ok(alg) => alg,
        Err(GbError::SmoothAtOrigin) => return Err(SwhError::SmoothAtOrigin),
        Err(GbError::TruncationExceeded { bound }) => {
            return Err(SwhError::FullAlgebraNotCertified { bound })
        }
        Err(GbError::NotZeroDimensional { .. }) => unreachable!("truncated ideals are 0-dim"),
    };

    Ok(SwhAnalysis {
        flags: SwhFlags {
            initial_isolated: true,
            initial_irreducible,
            is_weighted_homogeneous: higher.is_zero(),
        },
        n: nvars - 1,
        f: f.clone(),
        w: w.clone(),
        d,
        f_d,
        higher,
        milnor,
        milnor_initial,
        spectrum,
    })
}

/// Closed-form irreducibility test for weighted-homogeneous plane curves:
/// with gcd(w_0, w_1) = 1, the only irreducible singular possibilities are
/// constants times `y^{w_0} − a·x^{w_1}` with `a ≠ 0` (any monomial factor
/// or extra root of the dehomogenization splits off a component).
fn check_plane_irreducible(f_d: &Polynomial, w: &WeightVector) -> Result<(), SwhError> {
    let reject = || SwhError::InitialReducible { found: f_d.to_string() };
    let divisible_by = |var: usize| f_d.terms().all(|(m, _)| m.exponents()[var] > 0);
    if divisible_by(0) || divisible_by(1) {
        return Err(reject());
    }
    let dehom = f_d.substitute_one(0).expect("two variables");
    let u = UniPoly::from_polynomial(&dehom).expect("one variable");
    let deg = u.degree().expect("nonzero");
    if deg as u64 != w.get(0) {
        return Err(reject());
    }
    let middle_zero = (1..deg).all(|k| u.coeff(k).is_zero());
    if !middle_zero || u.coeff(0).is_zero() {
        return Err(reject());
    }
    Ok(())
}

/// The filtration level of a class: either a finite value with a witness
/// monomial realizing it, or `Bottom` when `g` lies in the gradient ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LevelValue {
    Finite { value: Scalar, witness: Monomial },
    Bottom,
}

impl LevelValue {
    pub fn as_finite(&self) -> Option<&Scalar> {
        match self {
            LevelValue::Finite { value, .. } => Some(value),
            LevelValue::Bottom => None,
        }
    }
}

impl fmt::Display for LevelValue {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LevelValue::Finite { value, witness } => {
                write!(fm, "{value} (witness ")?;
                let names = crate::poly::default_names(witness.nvars());
                let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
                let p = Polynomial::from_term(witness.clone(), Scalar::one());
                write!(fm, "{})", p.format_with(&refs))
            }
            LevelValue::Bottom => write!(fm, "bottom"),
        }
    }
}

/// Incremental row space over Q with reduced rows.
struct LinSpan {
    ncols: usize,
    /// (pivot column, reduced row) pairs, pivot entries equal to one.
    rows: Vec<(usize, Vec<Scalar>)>,
}

impl LinSpan {
    fn new(ncols: usize) -> Self {
        LinSpan { ncols, rows: Vec::new() }
    }

    fn reduce(&self, mut v: Vec<Scalar>) -> Vec<Scalar> {
        for (piv, row) in &self.rows {
            if !v[*piv].is_zero() {
                let factor = v[*piv].clone();
                for c in 0..self.ncols {
                    let sub = &row[c] * &factor;
                    v[c] = &v[c] - &sub;
                }
            }
        }
        v
    }

    fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v.to_vec()).iter().all(|c| c.is_zero())
    }

    /// Insert the vector; returns false when it was already in the span.
    fn insert(&mut self, v: Vec<Scalar>) -> bool {
        let v = self.reduce(v);
        let Some(piv) = v.iter().position(|c| !c.is_zero()) else {
            return false;
        };
        let inv = Scalar::one() / v[piv].clone();
        let row: Vec<Scalar> = v.iter().map(|c| c * &inv).collect();
        // keep earlier rows reduced against the new pivot
        for (_, r) in &mut self.rows {
            if !r[piv].is_zero() {
                let factor = r[piv].clone();
                for c in 0..self.ncols {
                    let sub = &row[c] * &factor;
                    r[c] = &r[c] - &sub;
                }
            }
        }
        self.rows.push((piv, row));
        true
    }
}

/// Solve `Σ_k x_k col_k = b` by Gaussian elimination; columns are tried in
/// the given order and free variables are set to zero, so the solution is
/// deterministic.  Returns `None` when inconsistent.
fn solve_columns(cols: &[Vec<Scalar>], b: &[Scalar]) -> Option<Vec<Scalar>> {
    let nrows = b.len();
    let ncols = cols.len();
    let mut m: Vec<Vec<Scalar>> = (0..nrows)
        .map(|r| {
            let mut row: Vec<Scalar> = cols.iter().map(|c| c[r].clone()).collect();
            row.push(b[r].clone());
            row
        })
        .collect();
    let mut pivot_of_col: Vec<Option<usize>> = vec![None; ncols];
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pr) = (rank..nrows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pr);
        let inv = Scalar::one() / m[rank][col].clone();
        for c in col..=ncols {
            m[rank][c] = &m[rank][c] * &inv;
        }
        for r in 0..nrows {
            if r != rank && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                for c in col..=ncols {
                    let sub = &m[rank][c] * &factor;
                    m[r][c] = &m[r][c] - &sub;
                }
            }
        }
        pivot_of_col[col] = Some(rank);
        rank += 1;
        if rank == nrows {
            break;
        }
    }
    // consistency: no row of the form 0 = nonzero
    for r in rank..nrows {
        if !m[r][ncols].is_zero() {
            return None;
        }
    }
    let mut x = vec![Scalar::zero(); ncols];
    for (col, piv) in pivot_of_col.iter().enumerate() {
        if let Some(r) = piv {
            x[col] = m[*r][ncols].clone();
        }
    }
    Some(x)
}

/// Largest level `α` with `g ≡ (something supported on levels ≥ α)` modulo
/// the gradient ideal, over the finite candidate set of the truncation.
pub fn level(analysis: &SwhAnalysis, g: &Polynomial) -> Result<LevelValue, SwhError> {
    if g.is_zero() {
        return Err(SwhError::ZeroFunction);
    }
    if g.nvars() != analysis.nvars() {
        return Err(SwhError::ArityMismatch { expected: analysis.nvars(), got: g.nvars() });
    }
    let target = analysis.milnor.coordinates(g);
    if target.iter().all(|c| c.is_zero()) {
        return Ok(LevelValue::Bottom);
    }
    let nvars = analysis.nvars();
    let trunc = analysis.milnor.truncation();
    let mut candidates: Vec<(Scalar, Monomial, Vec<Scalar>)> = Vec::new();
    for deg in 0..=trunc {
        for m in monomials_of_degree(nvars, deg) {
            let lvl = analysis.level_of_exponent(&m);
            let coords = analysis
                .milnor
                .coordinates(&Polynomial::from_term(m.clone(), Scalar::one()));
            candidates.push((lvl, m, coords));
        }
    }
    // highest level first; graded-lex within a level
    candidates.sort_by(|a, b| b.0.cmp(&a.0).then_with(|| a.1.cmp(&b.1)));
    let levels: BTreeSet<Scalar> = candidates.iter().map(|(l, _, _)| l.clone()).collect();
    let mu = analysis.mu();
    let mut span = LinSpan::new(mu);
    let mut included = 0usize;
    for alpha in levels.iter().rev() {
        while included < candidates.len() && &candidates[included].0 == alpha {
            span.insert(candidates[included].2.clone());
            included += 1;
        }
        if span.contains(&target) {
            let cols: Vec<Vec<Scalar>> =
                candidates[..included].iter().map(|(_, _, c)| c.clone()).collect();
            let sol = solve_columns(&cols, &target)
                .expect("span membership was just certified");
            let witness = candidates[..included]
                .iter()
                .zip(&sol)
                .filter(|((l, _, _), c)| l == alpha && !c.is_zero())
                .map(|((_, m, _), _)| m.clone())
                .min()
                .expect("a maximal-level representation uses its own level");
            return Ok(LevelValue::Finite { value: alpha.clone(), witness });
        }
    }
    unreachable!("the full candidate span contains every normal form")
}

/// Result of the no-mixed-monomial condition: which term breaks it, if any.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EqmonReport {
    pub holds: bool,
    /// Offending term of the initial part, `(coefficient, monomial)`.
    pub offender: Option<(Scalar, Monomial)>,
}

/// Check that for every `i` with `β_i ≠ 0`, the initial part has no term
/// `x_i · x_j^k` (`j ≠ i`, `k > 0`).  The reported offender is the first in
/// variable-pair order `(i, j)`.
pub fn check_eqmon(analysis: &SwhAnalysis, beta: &Monomial) -> Result<EqmonReport, SwhError> {
    let nvars = analysis.nvars();
    if beta.nvars() != nvars {
        return Err(SwhError::ArityMismatch { expected: nvars, got: beta.nvars() });
    }
    let mut best: Option<(usize, usize, Monomial)> = None;
    for i in 0..nvars {
        if beta.exponents()[i] == 0 {
            continue;
        }
        for (m, _) in analysis.f_d.terms() {
            let e = m.exponents();
            if e[i] != 1 {
                continue;
            }
            let others: Vec<usize> =
                (0..nvars).filter(|&j| j != i && e[j] > 0).collect();
            if let [j] = others[..] {
                if best.as_ref().is_none_or(|(bi, bj, _)| (i, j) < (*bi, *bj)) {
                    best = Some((i, j, m.clone()));
                }
            }
        }
    }
    Ok(match best {
        Some((_, _, m)) => {
            let c = analysis.f_d.coeff(&m);
            EqmonReport { holds: false, offender: Some((c, m)) }
        }
        None => EqmonReport { holds: true, offender: None },
    })
}

/// Result of the level-agreement condition for `x^β`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EqpaReport {
    pub holds: bool,
    /// `l(β)`, the value the level must equal.
    pub expected: Scalar,
    /// What `level` actually returned.
    pub actual: LevelValue,
}

/// Check `level(x^β) = l(β)`.
pub fn check_eqpa(analysis: &SwhAnalysis, beta: &Monomial) -> Result<EqpaReport, SwhError> {
    let nvars = analysis.nvars();
    if beta.nvars() != nvars {
        return Err(SwhError::ArityMismatch { expected: nvars, got: beta.nvars() });
    }
    let expected = analysis.level_of_exponent(beta);
    let g = Polynomial::from_term(beta.clone(), Scalar::one());
    let actual = level(analysis, &g)?;
    let holds = actual.as_finite() == Some(&expected);
    Ok(EqpaReport { holds, expected, actual })
}

/// Kouchnirenko nondegeneracy of the full polynomial (used to gate the
/// independent toric computation).
pub fn newton_nondegenerate(f: &Polynomial) -> Result<NondegeneracyReport, NewtonError> {
    newton::is_nondegenerate(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_polynomial;
    use crate::poly::{int, rat};

    fn p(text: &str, vars: &[&str]) -> Polynomial {
        parse_polynomial(text, vars).expect("parse")
    }

    fn wv(entries: &[u64]) -> WeightVector {
        WeightVector::new(entries.to_vec()).unwrap()
    }

    fn cusp() -> SwhAnalysis {
        analyze(&p("y^2 - x^3", &["x", "y"]), &wv(&[2, 3])).unwrap()
    }

    fn twisted_curve() -> SwhAnalysis {
        analyze(&p("y^3 - x^7 + x^5*y", &["x", "y"]), &wv(&[3, 7])).unwrap()
    }

    #[test]
    fn analyze_cusp() {
        let a = cusp();
        assert_eq!(a.d, 6);
        assert!(a.higher.is_zero());
        assert!(a.flags.is_weighted_homogeneous);
        assert!(a.flags.initial_irreducible);
        assert_eq!(a.n, 1);
        assert_eq!(a.mu(), 2);
        assert_eq!(a.spectrum, vec![rat(5, 6), rat(7, 6)]);
        assert_eq!(a.min_level(), rat(5, 6));
    }

    #[test]
    fn analyze_splits_semi_weighted_homogeneous() {
        let a = twisted_curve();
        assert_eq!(a.d, 21);
        assert_eq!(a.f_d, p("y^3 - x^7", &["x", "y"]));
        assert_eq!(a.higher, p("x^5*y", &["x", "y"]));
        assert!(!a.flags.is_weighted_homogeneous);
        assert_eq!(a.mu(), 12);
        assert_eq!(a.mu_initial(), 12);
        let mut expected: Vec<Scalar> = (0..6)
            .flat_map(|i| [rat(3 * i + 10, 21), rat(3 * i + 17, 21)])
            .collect();
        expected.sort();
        assert_eq!(a.spectrum, expected);
        assert_eq!(a.min_level(), rat(10, 21));
    }

    #[test]
    fn analyze_brieskorn_cone() {
        let a = analyze(&p("x^3 + y^3 + z^3", &["x", "y", "z"]), &wv(&[1, 1, 1])).unwrap();
        assert_eq!(a.mu(), 8);
        assert_eq!(a.n, 2);
        let mut expected = vec![int(1)];
        expected.extend([rat(4, 3), rat(4, 3), rat(4, 3)]);
        expected.extend([rat(5, 3), rat(5, 3), rat(5, 3)]);
        expected.push(int(2));
        assert_eq!(a.spectrum, expected);
    }

    #[test]
    fn spectrum_is_symmetric_about_half_nvars() {
        for (f, w) in [
            (p("y^2 - x^3", &["x", "y"]), wv(&[2, 3])),
            (p("y^3 - x^7 + x^5*y", &["x", "y"]), wv(&[3, 7])),
            (p("x^3 + y^3 + z^3", &["x", "y", "z"]), wv(&[1, 1, 1])),
        ] {
            let a = analyze(&f, &w).unwrap();
            let center = Scalar::from(BigInt::from(a.nvars() as i64));
            let reflected: Vec<Scalar> = {
                let mut r: Vec<Scalar> =
                    a.spectrum.iter().map(|s| &center - s).collect();
                r.sort();
                r
            };
            assert_eq!(a.spectrum, reflected);
        }
    }

    #[test]
    fn analyze_rejects_nonisolated_initial_part() {
        let f = p("x*y^5 + x^3*y^2 + x^4*y", &["x", "y"]);
        let err = analyze(&f, &wv(&[1, 1])).unwrap_err();
        assert!(matches!(err, SwhError::InitialNotIsolated { .. }));
    }

    #[test]
    fn analyze_rejects_reducible_plane_initial_part() {
        let err = analyze(&p("x^2 + y^2", &["x", "y"]), &wv(&[1, 1])).unwrap_err();
        assert!(matches!(err, SwhError::InitialReducible { .. }));
        let err = analyze(&p("x*y", &["x", "y"]), &wv(&[1, 1])).unwrap_err();
        assert!(matches!(err, SwhError::InitialReducible { .. }));
        // monomial factor: x(y^2 - x^3) is divisible by x
        let err = analyze(&p("x*y^2 - x^4", &["x", "y"]), &wv(&[2, 3])).unwrap_err();
        assert!(matches!(err, SwhError::InitialReducible { .. }));
    }

    #[test]
    fn analyze_rejects_smooth_and_degenerate_inputs() {
        assert_eq!(
            analyze(&p("x + y^2", &["x", "y"]), &wv(&[2, 1])).unwrap_err(),
            SwhError::SmoothAtOrigin
        );
        assert_eq!(
            analyze(&Polynomial::zero(2), &wv(&[1, 1])).unwrap_err(),
            SwhError::ZeroFunction
        );
        assert_eq!(
            analyze(&p("1 + x^2 + y^2", &["x", "y"]), &wv(&[1, 1])).unwrap_err(),
            SwhError::NonzeroConstantTerm
        );
        assert_eq!(
            analyze(&p("x^2", &["x"]), &wv(&[1])).unwrap_err(),
            SwhError::TooFewVariables
        );
    }

    #[test]
    fn level_of_constant_is_min_spectral_number() {
        let a = cusp();
        let lv = level(&a, &Polynomial::one(2)).unwrap();
        assert_eq!(lv.as_finite(), Some(&rat(5, 6)));
    }

    #[test]
    fn level_of_gradient_element_is_bottom() {
        let a = cusp();
        assert_eq!(level(&a, &p("y", &["x", "y"])).unwrap(), LevelValue::Bottom);
    }

    #[test]
    fn level_jumps_above_naive_value() {
        // x^6 ≡ (5/7) x^4 y, and l(4,1) = 29/21 beats l(6,0) = 28/21
        let a = twisted_curve();
        let lv = level(&a, &p("x^6", &["x", "y"])).unwrap();
        match lv {
            LevelValue::Finite { value, witness } => {
                assert_eq!(value, rat(29, 21));
                assert_eq!(witness, Monomial::new(vec![4, 1]));
            }
            LevelValue::Bottom => panic!("expected a finite level"),
        }
    }

    #[test]
    fn level_is_stable_under_gradient_shifts() {
        let a = twisted_curve();
        let g = p("x^6", &["x", "y"]);
        let shift = {
            let dx = a.f.partial_derivative(0).unwrap();
            let dy = a.f.partial_derivative(1).unwrap();
            &(&p("x*y", &["x", "y"]) * &dx) + &(&p("3 - x", &["x", "y"]) * &dy)
        };
        let lv1 = level(&a, &g).unwrap();
        let lv2 = level(&a, &(&g + &shift)).unwrap();
        assert_eq!(lv1.as_finite(), lv2.as_finite());
    }

    #[test]
    fn eqmon_passes_on_pure_power_initial_parts() {
        let a = cusp();
        let r = check_eqmon(&a, &Monomial::new(vec![0, 1])).unwrap();
        assert!(r.holds);
        let a = twisted_curve();
        let r = check_eqmon(&a, &Monomial::new(vec![6, 0])).unwrap();
        assert!(r.holds);
    }

    #[test]
    fn eqmon_reports_first_mixed_term() {
        let f = p("x^2 + 2x*y + y^2 + x*z + z^2", &["x", "y", "z"]);
        let a = analyze(&f, &wv(&[1, 1, 1])).unwrap();
        let r = check_eqmon(&a, &Monomial::new(vec![1, 0, 0])).unwrap();
        assert!(!r.holds);
        let (c, m) = r.offender.unwrap();
        assert_eq!((c, m), (int(2), Monomial::new(vec![1, 1, 0])));
        // a β supported away from the mixed terms is fine
        let r = check_eqmon(&a, &Monomial::new(vec![0, 1, 0])).unwrap();
        assert!(!r.holds); // 2xy counts for i = 1 as well: y·x^1
    }

    #[test]
    fn eqpa_on_the_three_reference_cases() {
        let a = cusp();
        let r = check_eqpa(&a, &Monomial::new(vec![0, 0])).unwrap();
        assert!(r.holds);
        assert_eq!(r.expected, rat(5, 6));

        let r = check_eqpa(&a, &Monomial::new(vec![0, 1])).unwrap();
        assert!(!r.holds);
        assert_eq!(r.actual, LevelValue::Bottom);

        let a = twisted_curve();
        let r = check_eqpa(&a, &Monomial::new(vec![6, 0])).unwrap();
        assert!(!r.holds);
        assert_eq!(r.expected, rat(28, 21));
        assert_eq!(r.actual.as_finite(), Some(&rat(29, 21)));
    }

    #[test]
    fn weight_count_matches_algebra_dimensions() {
        assert_eq!(weight_count_mu(&wv(&[2, 3]), 6), int(2));
        assert_eq!(weight_count_mu(&wv(&[3, 7]), 21), int(12));
        assert_eq!(weight_count_mu(&wv(&[1, 1, 1]), 3), int(8));
    }

    #[test]
    fn nondegeneracy_gate_matches_expectations() {
        assert!(newton_nondegenerate(&p("y^2 - x^3", &["x", "y"])).unwrap().nondegenerate);
        assert!(
            newton_nondegenerate(&p("y^3 - x^7 + x^5*y", &["x", "y"]))
                .unwrap()
                .nondegenerate
        );
        assert!(
            !newton_nondegenerate(&p("x^2 + 2x*y + y^2 + x*z + z^2", &["x", "y", "z"]))
                .unwrap()
                .nondegenerate
        );
    }
}
