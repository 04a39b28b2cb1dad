//! Newton polyhedra: compact faces and nondegeneracy.
//!
//! A compact face of the Newton polyhedron of `f` is the argmin locus of a
//! strictly positive linear functional over the support.  Faces are found by
//! enumerating support subsets and deciding, by Fourier–Motzkin elimination
//! with strictness tracking, whether some functional `v > 0` attains its
//! minimum exactly on the subset.  Everything is exact, and the face list is
//! complete — each compact face appears once, as its full set of supporting
//! exponents.
//!
//! Nondegeneracy is Kouchnirenko's condition: for every compact face `τ`,
//! the partials of the face polynomial have no common zero with all
//! coordinates nonzero.  Each face is certified by a Gröbner computation
//! showing `1 ∈ (∂f_τ/∂x_1, ..., ∂f_τ/∂x_n, t·x_1···x_n − 1)`.

use num_traits::{One, Zero};
use thiserror::Error;

use crate::gbase::ideal_contains_one;
use crate::poly::{Monomial, Polynomial, Scalar};

/// Support-size guard: subset enumeration is exponential, so inputs beyond
/// this many monomials are rejected rather than silently slow.
pub const MAX_SUPPORT: usize = 16;

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum NewtonError {
    #[error("the zero polynomial has no Newton polyhedron")]
    ZeroPolynomial,
    #[error("polynomial must vanish at the origin")]
    ConstantTerm,
    #[error("support has {size} monomials, above the face-enumeration guard of {max}")]
    SupportTooLarge { size: usize, max: usize },
}

/// A compact face of the Newton polyhedron: the support points lying on it
/// and the corresponding truncation of `f`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompactFace {
    pub points: Vec<Monomial>,
    pub poly: Polynomial,
}

impl CompactFace {
    /// Affine dimension of the face (0 for vertices).
    pub fn dimension(&self) -> usize {
        let base = self.points[0].exponents();
        let diffs: Vec<Vec<Scalar>> = self.points[1..]
            .iter()
            .map(|p| {
                p.exponents()
                    .iter()
                    .zip(base)
                    .map(|(&a, &b)| Scalar::from(num_bigint::BigInt::from(a as i64 - b as i64)))
                    .collect()
            })
            .collect();
        rank(diffs)
    }
}

fn rank(mut rows: Vec<Vec<Scalar>>) -> usize {
    let mut r = 0;
    let ncols = rows.first().map_or(0, |row| row.len());
    for col in 0..ncols {
        let Some(pivot) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, pivot);
        let inv = Scalar::one() / rows[r][col].clone();
        for i in 0..rows.len() {
            if i != r && !rows[i][col].is_zero() {
                let factor = &rows[i][col] * &inv;
                for c in col..ncols {
                    let sub = &rows[r][c] * &factor;
                    rows[i][c] = &rows[i][c] - &sub;
                }
            }
        }
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    r
}

/// One homogeneous constraint `⟨coeffs, v⟩ > 0` (strict) or `≥ 0`.
type Row = (Vec<Scalar>, bool);

/// Decide feasibility of a homogeneous system of strict/weak inequalities by
/// Fourier–Motzkin elimination.  Exact: eliminates every variable; a
/// coefficient-free strict row (`0 > 0`) at any stage is the only source of
/// infeasibility.
fn feasible(mut rows: Vec<Row>, nvars: usize) -> bool {
    for var in (0..nvars).rev() {
        let mut keep: Vec<Row> = Vec::new();
        let mut pos: Vec<Row> = Vec::new();
        let mut neg: Vec<Row> = Vec::new();
        for row in rows {
            if row.0[var].is_zero() {
                keep.push(row);
            } else if row.0[var].is_positive() {
                pos.push(row);
            } else {
                neg.push(row);
            }
        }
        for (p, ps) in &pos {
            for (n, ns) in &neg {
                // p[var] * n − n[var] * p has a zero var-coefficient and
                // both multipliers positive
                let combined: Vec<Scalar> = p
                    .iter()
                    .zip(n)
                    .map(|(pc, nc)| &(&p[var] * nc) - &(&n[var] * pc))
                    .collect();
                keep.push((combined, *ps || *ns));
            }
        }
        rows = Vec::new();
        for (coeffs, strict) in keep {
            if coeffs.iter().all(|c| c.is_zero()) {
                if strict {
                    return false;
                }
            } else {
                rows.push((coeffs, strict));
            }
        }
    }
    // only rows with some nonzero coefficient remain, and no variables do
    debug_assert!(rows.is_empty());
    true
}

use num_traits::Signed;

fn diff_row(a: &Monomial, b: &Monomial) -> Vec<Scalar> {
    a.exponents()
        .iter()
        .zip(b.exponents())
        .map(|(&x, &y)| Scalar::from(num_bigint::BigInt::from(x as i64 - y as i64)))
        .collect()
}

/// All compact faces of the Newton polyhedron of `f`, each as its complete
/// set of supporting exponents, sorted by (dimension-free) point lists.
pub fn compact_faces(f: &Polynomial) -> Result<Vec<CompactFace>, NewtonError> {
    if f.is_zero() {
        return Err(NewtonError::ZeroPolynomial);
    }
    if !f.constant_term().is_zero() {
        return Err(NewtonError::ConstantTerm);
    }
    let support = f.support();
    if support.len() > MAX_SUPPORT {
        return Err(NewtonError::SupportTooLarge { size: support.len(), max: MAX_SUPPORT });
    }
    let nvars = f.nvars();
    let mut faces = Vec::new();
    for mask in 1u32..(1 << support.len()) {
        let subset: Vec<&Monomial> = support
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, m)| m)
            .collect();
        let rest: Vec<&Monomial> = support
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 0)
            .map(|(_, m)| m)
            .collect();
        // v strictly positive ...
        let mut rows: Vec<Row> = (0..nvars)
            .map(|i| {
                let mut e = vec![Scalar::zero(); nvars];
                e[i] = Scalar::one();
                (e, true)
            })
            .collect();
        // ... constant on the subset ...
        let base = subset[0];
        for m in &subset[1..] {
            rows.push((diff_row(m, base), false));
            rows.push((diff_row(base, m), false));
        }
        // ... and strictly larger on the rest of the support
        for m in &rest {
            rows.push((diff_row(m, base), true));
        }
        if feasible(rows, nvars) {
            let points: Vec<Monomial> = subset.into_iter().cloned().collect();
            let poly = Polynomial::from_terms(
                nvars,
                points.iter().map(|m| (m.clone(), f.coeff(m))),
            );
            faces.push(CompactFace { points, poly });
        }
    }
    faces.sort_by(|a, b| (a.points.len(), &a.points).cmp(&(b.points.len(), &b.points)));
    Ok(faces)
}

/// Result of the nondegeneracy test, with the offending face when it fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NondegeneracyReport {
    pub nondegenerate: bool,
    pub faces_checked: usize,
    pub degenerate_face: Option<CompactFace>,
}

/// Whether the partials of every compact-face polynomial are jointly
/// nonvanishing on the torus.
pub fn is_nondegenerate(f: &Polynomial) -> Result<NondegeneracyReport, NewtonError> {
    let faces = compact_faces(f)?;
    let nvars = f.nvars();
    for face in &faces {
        if !face_nondegenerate(&face.poly, nvars) {
            return Ok(NondegeneracyReport {
                nondegenerate: false,
                faces_checked: faces.len(),
                degenerate_face: Some(face.clone()),
            });
        }
    }
    Ok(NondegeneracyReport {
        nondegenerate: true,
        faces_checked: faces.len(),
        degenerate_face: None,
    })
}

fn face_nondegenerate(face_poly: &Polynomial, nvars: usize) -> bool {
    // work in Q[x_0..x_{n-1}, t] and invert the product of the variables
    let ext = nvars + 1;
    let mut gens: Vec<Polynomial> = Vec::with_capacity(nvars + 1);
    for i in 0..nvars {
        let d = face_poly.partial_derivative(i).expect("index in range");
        gens.push(extend_vars(&d, ext));
    }
    let mut torus = Polynomial::from_term(
        Monomial::new((0..ext).map(|_| 1).collect()),
        Scalar::one(),
    );
    torus.add_term(Monomial::one(ext), -Scalar::one());
    gens.push(torus);
    ideal_contains_one(&gens, ext)
}

fn extend_vars(p: &Polynomial, nvars: usize) -> Polynomial {
    Polynomial::from_terms(
        nvars,
        p.terms().map(|(m, c)| {
            let mut e = m.exponents().to_vec();
            e.resize(nvars, 0);
            (Monomial::new(e), c.clone())
        }),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_polynomial;

    fn p(text: &str, vars: &[&str]) -> Polynomial {
        parse_polynomial(text, vars).expect("parse")
    }

    #[test]
    fn cusp_has_two_vertices_and_an_edge() {
        let faces = compact_faces(&p("y^2 - x^3", &["x", "y"])).unwrap();
        assert_eq!(faces.len(), 3);
        let dims: Vec<usize> = faces.iter().map(|f| f.dimension()).collect();
        assert_eq!(dims, vec![0, 0, 1]);
        assert_eq!(faces[2].poly, p("y^2 - x^3", &["x", "y"]));
    }

    #[test]
    fn interior_edge_points_are_not_faces() {
        // (3,2) lies on the open segment from (6,0) to (0,4)
        let f = p("x^6 - 2x^3*y^2 + y^4", &["x", "y"]);
        let faces = compact_faces(&f).unwrap();
        assert_eq!(faces.len(), 3);
        let edge = faces.iter().find(|fc| fc.points.len() == 3).unwrap();
        assert_eq!(edge.poly, f);
    }

    #[test]
    fn simplex_face_lattice_in_three_variables() {
        let f = p("x^2 + y^2 + z^2", &["x", "y", "z"]);
        let faces = compact_faces(&f).unwrap();
        // 3 vertices, 3 edges, 1 triangle
        assert_eq!(faces.len(), 7);
        assert_eq!(faces.iter().filter(|f| f.dimension() == 0).count(), 3);
        assert_eq!(faces.iter().filter(|f| f.dimension() == 1).count(), 3);
        assert_eq!(faces.iter().filter(|f| f.dimension() == 2).count(), 1);
        assert!(is_nondegenerate(&f).unwrap().nondegenerate);
    }

    #[test]
    fn squared_branch_is_degenerate() {
        let f = p("x^6 - 2x^3*y^2 + y^4", &["x", "y"]);
        let report = is_nondegenerate(&f).unwrap();
        assert!(!report.nondegenerate);
        let face = report.degenerate_face.unwrap();
        assert_eq!(face.points.len(), 3);
    }

    #[test]
    fn squared_linear_form_is_degenerate_in_three_variables() {
        let f = p("x^2 + 2x*y + y^2 + z^2", &["x", "y", "z"]);
        let report = is_nondegenerate(&f).unwrap();
        assert!(!report.nondegenerate);
        let face = report.degenerate_face.unwrap();
        assert_eq!(face.poly, p("x^2 + 2x*y + y^2", &["x", "y", "z"]));
    }

    #[test]
    fn cusp_and_brieskorn_are_nondegenerate() {
        assert!(is_nondegenerate(&p("y^2 - x^3", &["x", "y"])).unwrap().nondegenerate);
        assert!(
            is_nondegenerate(&p("x^3 + y^3 + z^3", &["x", "y", "z"]))
                .unwrap()
                .nondegenerate
        );
    }

    #[test]
    fn input_guards() {
        assert_eq!(
            compact_faces(&Polynomial::zero(2)).unwrap_err(),
            NewtonError::ZeroPolynomial
        );
        assert_eq!(
            compact_faces(&p("1 + x", &["x", "y"])).unwrap_err(),
            NewtonError::ConstantTerm
        );
        let wide = (1..=17)
            .map(|k| format!("x^{k}*y^{}", 18 - k))
            .collect::<Vec<_>>()
            .join(" + ");
        assert!(matches!(
            compact_faces(&p(&wide, &["x", "y"])).unwrap_err(),
            NewtonError::SupportTooLarge { size: 17, .. }
        ));
    }
}
