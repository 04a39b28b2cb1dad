//! Facts about local b-functions of semi-weighted-homogeneous germs.
//!
//! No operator-algebra computation happens here.  Every returned
//! factorization carries a completeness flag so callers can never mistake a
//! certified divisor for the full polynomial:
//!
//! * weighted-homogeneous isolated germ — the full b-function is known in
//!   closed form: `(s+1) · Π (s+α)` over the distinct spectral numbers;
//! * strictly semi-weighted-homogeneous germ — `(s+1)(s+|w|/d)` is a
//!   certified divisor, nothing more is claimed;
//! * twisted by a monomial `x^β` — `(s+1)` divides, and the largest root of
//!   the reduced twisted b-function is minus the filtration level of `x^β`.

use std::fmt;

use num_traits::One;
use thiserror::Error;

use crate::poly::{Monomial, Polynomial, Scalar};
use crate::swh::{level, LevelValue, SwhAnalysis, SwhError};

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum BfunError {
    #[error("the closed-form b-function needs a weighted-homogeneous germ; this input has higher-order terms (ask for the certified divisor instead)")]
    NotWeightedHomogeneous,
    #[error("the twist x^β must not be divisible by f")]
    TwistDivisibleByF,
    #[error(transparent)]
    Swh(#[from] SwhError),
}

/// How much of the b-function a factorization pins down.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Completeness {
    /// The product of the factors *is* the b-function.
    Complete,
    /// The product divides the b-function; other factors may exist.
    DivisorOnly,
    /// Beyond being a divisor, the flagged root is the largest root of the
    /// reduced b-function.
    TopRootOnly,
}

impl fmt::Display for Completeness {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Completeness::Complete => "complete",
            Completeness::DivisorOnly => "divisor only",
            Completeness::TopRootOnly => "top root only",
        };
        write!(fm, "{s}")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BFactor {
    pub root: Scalar,
    pub multiplicity: u32,
    /// The largest root of the *reduced* b-function.
    pub top_reduced_root: bool,
}

/// A (partial) factorization of a b-function, with an honesty flag and a
/// one-line justification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BFactorization {
    /// Sorted by root, most negative first.
    pub factors: Vec<BFactor>,
    pub completeness: Completeness,
    /// Mathematical justification for the claim, human-readable.
    pub provenance: String,
    /// Extra diagnostics (e.g. why only a partial answer is available).
    pub note: Option<String>,
}

impl BFactorization {
    fn normalized(mut factors: Vec<BFactor>) -> Vec<BFactor> {
        factors.sort_by(|a, b| a.root.cmp(&b.root));
        let mut merged: Vec<BFactor> = Vec::new();
        for f in factors {
            match merged.last_mut() {
                Some(last) if last.root == f.root => {
                    last.multiplicity += f.multiplicity;
                    last.top_reduced_root |= f.top_reduced_root;
                }
                _ => merged.push(f),
            }
        }
        merged
    }

    /// All roots with multiplicity, most negative first.
    pub fn roots(&self) -> Vec<(Scalar, u32)> {
        self.factors.iter().map(|f| (f.root.clone(), f.multiplicity)).collect()
    }

    /// Drop one multiplicity of the root −1 (the reduced b-function, when
    /// the factorization is complete).
    pub fn reduced_part(&self) -> BFactorization {
        let minus_one = -Scalar::one();
        let factors = self
            .factors
            .iter()
            .filter_map(|f| {
                let mult = if f.root == minus_one { f.multiplicity - 1 } else { f.multiplicity };
                (mult > 0).then(|| BFactor { multiplicity: mult, ..f.clone() })
            })
            .collect();
        BFactorization {
            factors,
            completeness: self.completeness,
            provenance: self.provenance.clone(),
            note: self.note.clone(),
        }
    }

    pub fn max_root(&self) -> Option<&Scalar> {
        self.factors.last().map(|f| &f.root)
    }
}

impl fmt::Display for BFactorization {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(fm, "1");
        }
        // (s+1) first, then the rest by increasing |root|
        let minus_one = -Scalar::one();
        let mut ordered: Vec<&BFactor> = self.factors.iter().collect();
        ordered.sort_by_key(|f| (f.root != minus_one, -f.root.clone()));
        for f in ordered {
            let alpha = -f.root.clone();
            write!(fm, "(s+{alpha})")?;
            if f.multiplicity > 1 {
                write!(fm, "^{}", f.multiplicity)?;
            }
        }
        Ok(())
    }
}

/// Full b-function of an isolated weighted-homogeneous germ:
/// `(s+1) · Π_{α ∈ distinct spectrum} (s+α)`.
pub fn qh_bfunction(analysis: &SwhAnalysis) -> Result<BFactorization, BfunError> {
    if !analysis.flags.is_weighted_homogeneous {
        return Err(BfunError::NotWeightedHomogeneous);
    }
    let mut factors = vec![BFactor {
        root: -Scalar::one(),
        multiplicity: 1,
        top_reduced_root: false,
    }];
    let mut seen: Vec<&Scalar> = Vec::new();
    for alpha in &analysis.spectrum {
        if seen.contains(&alpha) {
            continue;
        }
        seen.push(alpha);
        factors.push(BFactor {
            root: -alpha.clone(),
            multiplicity: 1,
            top_reduced_root: alpha == &analysis.min_level(),
        });
    }
    Ok(BFactorization {
        factors: BFactorization::normalized(factors),
        completeness: Completeness::Complete,
        provenance: "isolated weighted-homogeneous germ: b-function = (s+1) times the minimal \
                     polynomial of the grading, whose roots are the distinct spectral numbers"
            .to_string(),
        note: None,
    })
}

/// The certified divisor `(s+1)(s+|w|/d)` of the local b-function of a
/// semi-weighted-homogeneous germ.
pub fn swh_divisor(analysis: &SwhAnalysis) -> BFactorization {
    let alpha = analysis.min_level();
    let note = (alpha == Scalar::one()).then(|| {
        "|w| = d, so the certified factor is (s+1)^2: the reduced b-function itself vanishes \
         at -1 here"
            .to_string()
    });
    let factors = BFactorization::normalized(vec![
        BFactor { root: -Scalar::one(), multiplicity: 1, top_reduced_root: false },
        BFactor { root: -alpha, multiplicity: 1, top_reduced_root: true },
    ]);
    BFactorization {
        factors,
        completeness: Completeness::DivisorOnly,
        provenance: "semi-weighted-homogeneous germ: (s+1)(s+|w|/d) divides the local b-function"
            .to_string(),
        note,
    }
}

/// Certified factors of the twisted b-function of `x^β · f^s`: `(s+1)`
/// always divides, and when the filtration level of `x^β` is finite its
/// negative is the largest root of the reduced twisted b-function.
pub fn twisted_facts(
    analysis: &SwhAnalysis,
    beta: &Monomial,
) -> Result<BFactorization, BfunError> {
    // a germ that passed analysis is never a monomial, but keep the guard:
    // a twist divisible by f changes the module, not just the twist
    if analysis.f.num_terms() == 1 {
        let (m, _) = analysis.f.terms().next().expect("single term");
        if m.divides(beta) {
            return Err(BfunError::TwistDivisibleByF);
        }
    }
    let g = Polynomial::from_term(beta.clone(), Scalar::one());
    let lv = level(analysis, &g)?;
    match lv {
        LevelValue::Finite { value, witness } => {
            let factors = BFactorization::normalized(vec![
                BFactor { root: -Scalar::one(), multiplicity: 1, top_reduced_root: false },
                BFactor { root: -value.clone(), multiplicity: 1, top_reduced_root: true },
            ]);
            Ok(BFactorization {
                factors,
                completeness: Completeness::DivisorOnly,
                provenance: "twisted germ: (s+1) divides the twisted b-function, and minus the \
                             filtration level of the twist is the largest reduced root"
                    .to_string(),
                note: Some(format!(
                    "level {value} realized by witness monomial exponent {:?}",
                    witness.exponents()
                )),
            })
        }
        LevelValue::Bottom => Ok(BFactorization {
            factors: vec![BFactor {
                root: -Scalar::one(),
                multiplicity: 1,
                top_reduced_root: false,
            }],
            completeness: Completeness::DivisorOnly,
            provenance: "twisted germ: (s+1) divides the twisted b-function".to_string(),
            note: Some(
                "the twist lies in the gradient ideal, so its filtration level collapses; no \
                 reduced-root fact is available"
                    .to_string(),
            ),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{int, parse_polynomial, rat, WeightVector};
    use crate::swh::analyze;

    fn setup(f: &str, vars: &[&str], w: &[u64]) -> SwhAnalysis {
        let f = parse_polynomial(f, vars).expect("parse");
        analyze(&f, &WeightVector::new(w.to_vec()).unwrap()).expect("analyze")
    }

    #[test]
    fn cusp_bfunction_is_classical() {
        let a = setup("y^2 - x^3", &["x", "y"], &[2, 3]);
        let b = qh_bfunction(&a).unwrap();
        assert_eq!(
            b.roots(),
            vec![(rat(-7, 6), 1), (-int(1), 1), (rat(-5, 6), 1)]
        );
        assert_eq!(b.completeness, Completeness::Complete);
        assert_eq!(b.to_string(), "(s+1)(s+5/6)(s+7/6)");
        assert_eq!(
            b.reduced_part().roots(),
            vec![(rat(-7, 6), 1), (rat(-5, 6), 1)]
        );
        assert_eq!(b.reduced_part().max_root(), Some(&rat(-5, 6)));
    }

    #[test]
    fn brieskorn_cone_merges_minus_one() {
        let a = setup("x^3 + y^3 + z^3", &["x", "y", "z"], &[1, 1, 1]);
        let b = qh_bfunction(&a).unwrap();
        assert_eq!(
            b.roots(),
            vec![(-int(2), 1), (rat(-5, 3), 1), (rat(-4, 3), 1), (-int(1), 2)]
        );
        assert_eq!(b.to_string(), "(s+1)^2(s+4/3)(s+5/3)(s+2)");
    }

    #[test]
    fn qh_rejects_higher_order_terms() {
        let a = setup("y^3 - x^7 + x^5*y", &["x", "y"], &[3, 7]);
        assert_eq!(qh_bfunction(&a).unwrap_err(), BfunError::NotWeightedHomogeneous);
    }

    #[test]
    fn reduced_roots_are_exactly_distinct_spectrum() {
        for (f, vars, w) in [
            ("y^2 - x^3", vec!["x", "y"], vec![2u64, 3]),
            ("x^3 + y^3 + z^3", vec!["x", "y", "z"], vec![1, 1, 1]),
            ("x^2 + y^5", vec!["x", "y"], vec![5, 2]),
        ] {
            let a = setup(f, &vars, &w);
            let b = qh_bfunction(&a).unwrap();
            let mut reduced: Vec<Scalar> =
                b.reduced_part().roots().into_iter().map(|(r, _)| -r).collect();
            reduced.sort();
            let mut distinct = a.spectrum.clone();
            distinct.dedup();
            distinct.sort();
            assert_eq!(reduced, distinct);
            // all roots strictly between -(n+1) and 0
            for (r, _) in b.roots() {
                assert!(r > -int(a.nvars() as i64) && r < int(0));
            }
        }
    }

    #[test]
    fn swh_divisor_examples() {
        let a = setup("y^3 - x^7 + x^5*y", &["x", "y"], &[3, 7]);
        let b = swh_divisor(&a);
        assert_eq!(b.roots(), vec![(-int(1), 1), (rat(-10, 21), 1)]);
        assert_eq!(b.completeness, Completeness::DivisorOnly);
        assert_eq!(b.to_string(), "(s+1)(s+10/21)");

        let a = setup("y^2 - x^3", &["x", "y"], &[2, 3]);
        assert_eq!(swh_divisor(&a).roots(), vec![(-int(1), 1), (rat(-5, 6), 1)]);

        // |w| = d merges into (s+1)^2
        let a = setup("x^3 + y^3 + z^3", &["x", "y", "z"], &[1, 1, 1]);
        let b = swh_divisor(&a);
        assert_eq!(b.roots(), vec![(-int(1), 2)]);
        assert!(b.note.is_some());
        assert_eq!(b.to_string(), "(s+1)^2");
    }

    #[test]
    fn swh_divisor_divides_full_bfunction_when_homogeneous() {
        let a = setup("y^2 - x^3", &["x", "y"], &[2, 3]);
        let full = qh_bfunction(&a).unwrap();
        let div = swh_divisor(&a);
        for (root, mult) in div.roots() {
            let found = full
                .roots()
                .into_iter()
                .find(|(r, _)| *r == root)
                .map(|(_, m)| m)
                .unwrap_or(0);
            assert!(found >= mult, "root {root} under-represented");
        }
    }

    #[test]
    fn twisted_top_root_examples() {
        let a = setup("y^3 - x^7 + x^5*y", &["x", "y"], &[3, 7]);
        let b = twisted_facts(&a, &Monomial::new(vec![6, 0])).unwrap();
        assert_eq!(b.roots(), vec![(rat(-29, 21), 1), (-int(1), 1)]);
        assert!(b.factors[0].top_reduced_root);

        let a = setup("y^2 - x^3", &["x", "y"], &[2, 3]);
        let b = twisted_facts(&a, &Monomial::new(vec![0, 0])).unwrap();
        assert_eq!(b.roots(), vec![(-int(1), 1), (rat(-5, 6), 1)]);
        // consistent with the untwisted reduced top root
        let full = qh_bfunction(&a).unwrap();
        assert_eq!(b.factors[1].root, *full.reduced_part().max_root().unwrap());
    }

    #[test]
    fn twisted_bottom_gives_only_minus_one() {
        let a = setup("y^2 - x^3", &["x", "y"], &[2, 3]);
        let b = twisted_facts(&a, &Monomial::new(vec![0, 1])).unwrap();
        assert_eq!(b.roots(), vec![(-int(1), 1)]);
        assert!(b.note.is_some());
    }
}
