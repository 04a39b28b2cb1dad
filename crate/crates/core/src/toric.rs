//! Embedded resolution of plane-curve germs by regular subdivision of the
//! normal fan of the Newton polygon.
//!
//! For Newton-nondegenerate `f` in two variables, the toric morphism attached
//! to any regular fan refining the normals of the Newton polygon resolves the
//! germ at the origin.  Each fan ray carries two multiplicities: `n` (order of
//! f along the ray divisor) and `nu` (order of the relative canonical form
//! twisted by a monomial, plus one).  These feed the zeta assembly directly.

use crate::poly::{Monomial, Polynomial, Scalar};
use crate::unipoly::UniPoly;
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum ToricError {
    #[error("expected a polynomial in {expected} variable(s), got {got}")]
    WrongArity { expected: usize, got: usize },
    #[error("zero polynomial has no Newton polygon")]
    ZeroPolynomial,
    #[error("nonzero constant term: the curve misses the origin")]
    ConstantTerm,
    #[error("variable {index} divides the input {multiplicity} times; divisor data needs a reduced curve")]
    RepeatedAxisFactor { index: usize, multiplicity: u64 },
    #[error("edge with inward normal ({a},{b}) has a repeated root in its edge polynomial")]
    RepeatedEdgeRoots { a: i64, b: i64 },
    #[error("the origin is not on the curve in a way that leaves divisor data to compute")]
    NoDivisors,
}

/// One compact edge of the Newton polygon, oriented by increasing first
/// coordinate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NewtonEdge {
    pub from: (u64, u64),
    pub to: (u64, u64),
    /// Primitive inward normal; both entries are positive for a compact edge.
    pub normal: (i64, i64),
    /// min over the support of the pairing with `normal` (attained on the edge).
    pub min_pairing: u64,
    /// Number of lattice segments on the edge.
    pub lattice_length: u64,
    /// Sum of the terms of f supported on the edge.
    pub face_poly: Polynomial,
    /// Coefficients of the edge terms read along the edge: if the edge runs
    /// from `a` in primitive steps `q`, the k-th coefficient is that of
    /// x^(a + k q).  Its nonzero roots are the strict-transform branches
    /// crossing the corresponding ray divisor.
    pub root_poly: UniPoly,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NewtonPolygon {
    pub support: Vec<(u64, u64)>,
    /// Vertices of the Newton polyhedron, first coordinate increasing.
    pub vertices: Vec<(u64, u64)>,
    pub edges: Vec<NewtonEdge>,
}

fn support_points(f: &Polynomial) -> Vec<(u64, u64)> {
    let mut pts: Vec<(u64, u64)> = f
        .terms()
        .map(|(m, _)| (u64::from(m.exponents()[0]), u64::from(m.exponents()[1])))
        .collect();
    pts.sort();
    pts
}

/// Newton polygon (compact boundary of the Newton polyhedron) of a
/// two-variable polynomial vanishing at the origin.
pub fn newton_polygon(f: &Polynomial) -> Result<NewtonPolygon, ToricError> {
    if f.nvars() != 2 {
        return Err(ToricError::WrongArity { expected: 2, got: f.nvars() });
    }
    if f.is_zero() {
        return Err(ToricError::ZeroPolynomial);
    }
    if !f.constant_term().is_zero() {
        return Err(ToricError::ConstantTerm);
    }
    let support = support_points(f);

    // Pareto-minimal points: only these can be vertices of the polyhedron.
    let mut minimal: Vec<(u64, u64)> = support
        .iter()
        .copied()
        .filter(|a| {
            !support
                .iter()
                .any(|b| b != a && b.0 <= a.0 && b.1 <= a.1)
        })
        .collect();
    minimal.sort(); // x ascending; y is then strictly descending

    // Convex chain scan: keep points where the boundary slope strictly
    // increases (left turns); collinear middles are absorbed into edges.
    let mut vertices: Vec<(u64, u64)> = Vec::new();
    for p in minimal {
        while vertices.len() >= 2 {
            let a = vertices[vertices.len() - 2];
            let b = vertices[vertices.len() - 1];
            let d1 = (b.0 as i64 - a.0 as i64, b.1 as i64 - a.1 as i64);
            let d2 = (p.0 as i64 - b.0 as i64, p.1 as i64 - b.1 as i64);
            if d1.0 * d2.1 - d1.1 * d2.0 <= 0 {
                vertices.pop();
            } else {
                break;
            }
        }
        vertices.push(p);
    }

    let mut edges = Vec::new();
    for pair in vertices.windows(2) {
        let (from, to) = (pair[0], pair[1]);
        let dx = to.0 as i64 - from.0 as i64;
        let dy = to.1 as i64 - from.1 as i64;
        debug_assert!(dx > 0 && dy < 0);
        let g = num_integer::gcd(dx, -dy);
        let normal = (-dy / g, dx / g);
        let min_pairing = (normal.0 * from.0 as i64 + normal.1 * from.1 as i64) as u64;
        let step = (dx / g, dy / g);
        let mut coeffs = Vec::with_capacity(g as usize + 1);
        let mut face_terms = Vec::new();
        for k in 0..=g {
            let pt = (from.0 as i64 + k * step.0, from.1 as i64 + k * step.1);
            let m = Monomial::new(vec![pt.0 as u32, pt.1 as u32]);
            let c = f.coeff(&m);
            if !c.is_zero() {
                face_terms.push((m, c.clone()));
            }
            coeffs.push(c);
        }
        edges.push(NewtonEdge {
            from,
            to,
            normal,
            min_pairing,
            lattice_length: g as u64,
            face_poly: Polynomial::from_terms(2, face_terms),
            root_poly: UniPoly::new(coeffs),
        });
    }

    Ok(NewtonPolygon { support, vertices, edges })
}

fn det2(u: (i64, i64), v: (i64, i64)) -> i64 {
    u.0 * v.1 - u.1 * v.0
}

/// Minimal regular refinement of a fan in the positive quadrant.
///
/// Input rays must be primitive and strictly ordered by angle.  Between each
/// consecutive pair `u, v` with det(u,v) = D > 1 the unique primitive ray `w`
/// with det(u,w) = 1 inside the cone is `(t u + v)/D` for the unique
/// `t ∈ [0, D)` making the division integral; iterating from the left
/// produces the minimal chain with all consecutive determinants 1.
pub fn regular_subdivision(rays: &[(i64, i64)]) -> Vec<(i64, i64)> {
    let mut out = rays.to_vec();
    let mut i = 0;
    while i + 1 < out.len() {
        let (u, v) = (out[i], out[i + 1]);
        let d = det2(u, v);
        assert!(d >= 1, "rays must be strictly ordered by angle");
        if d == 1 {
            i += 1;
            continue;
        }
        let t = (0..d)
            .find(|t| (t * u.0 + v.0) % d == 0 && (t * u.1 + v.1) % d == 0)
            .expect("a primitive generator exists in every nonregular cone");
        out.insert(i + 1, ((t * u.0 + v.0) / d, (t * u.1 + v.1) / d));
    }
    out
}

/// Divisor attached to one ray of the resolving fan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RayDivisor {
    pub ray: (i64, i64),
    /// Order of f along the divisor: min of the pairing over the support of f.
    pub n_mult: u64,
    /// Order of the twisted relative canonical form plus one:
    /// ⟨ray, β + (1,1)⟩ for a twist monomial x^β.
    pub nu_mult: u64,
    /// Interior rays are exceptional; (1,0) and (0,1) are the axes.
    pub exceptional: bool,
    /// Number of distinct points (over an algebraically closed field) where
    /// the strict transform of the curve crosses this divisor.
    pub branch_points: u64,
    /// Edge-root polynomial when the ray is an edge normal; its residue-field
    /// root counts give the crossing counts over finite fields.
    pub root_poly: Option<UniPoly>,
}

/// A locally closed piece of the fiber over the origin, with its class as a
/// polynomial in the Lefschetz symbol and the (n, nu) pairs of the divisors
/// containing it (strict-transform branches count as (1, 1)).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Stratum {
    pub class_in_l: UniPoly,
    pub factors: Vec<(u64, u64)>,
    pub label: String,
}

#[derive(Debug, Clone)]
pub struct SncResolution {
    pub f: Polynomial,
    pub twist: Monomial,
    /// Number of ambient variables (1 or 2).
    pub ambient_dim: u32,
    pub polygon: Option<NewtonPolygon>,
    /// Fan rays from (1,0) to (0,1), consecutive determinants all 1.
    pub rays: Vec<RayDivisor>,
    /// Partition of the fiber over the origin.
    pub strata: Vec<Stratum>,
}

/// Resolution data for a one-variable germ of multiplicity one (f = unit · x).
/// The identity map resolves it; the only divisor through the origin is the
/// point x = 0 with n = 1, nu = β + 1.
pub fn univariate_resolution(f: &Polynomial, beta: &Monomial) -> Result<SncResolution, ToricError> {
    if f.nvars() != 1 {
        return Err(ToricError::WrongArity { expected: 1, got: f.nvars() });
    }
    if beta.nvars() != 1 {
        return Err(ToricError::WrongArity { expected: 1, got: beta.nvars() });
    }
    if f.is_zero() {
        return Err(ToricError::ZeroPolynomial);
    }
    if !f.constant_term().is_zero() {
        return Err(ToricError::ConstantTerm);
    }
    let ord = f
        .terms()
        .map(|(m, _)| u64::from(m.exponents()[0]))
        .min()
        .unwrap();
    if ord >= 2 {
        return Err(ToricError::RepeatedAxisFactor { index: 0, multiplicity: ord });
    }
    let nu = u64::from(beta.exponents()[0]) + 1;
    Ok(SncResolution {
        f: f.clone(),
        twist: beta.clone(),
        ambient_dim: 1,
        polygon: None,
        rays: Vec::new(),
        strata: vec![Stratum {
            class_in_l: UniPoly::one(),
            factors: vec![(1, nu)],
            label: "origin".to_string(),
        }],
    })
}

/// Simple-normal-crossings resolution of a reduced plane-curve germ with
/// squarefree edge polynomials, together with the stratification of the fiber
/// over the origin.  Optional `extra_rays` are inserted into the fan before
/// the regular refinement; the zeta function must not depend on them.
pub fn snc_resolution_with_rays(
    f: &Polynomial,
    beta: &Monomial,
    extra_rays: &[(i64, i64)],
) -> Result<SncResolution, ToricError> {
    if beta.nvars() != 2 {
        return Err(ToricError::WrongArity { expected: 2, got: beta.nvars() });
    }
    let polygon = newton_polygon(f)?;

    for i in 0..2 {
        let mult = polygon.support.iter().map(|a| if i == 0 { a.0 } else { a.1 }).min().unwrap();
        if mult >= 2 {
            return Err(ToricError::RepeatedAxisFactor { index: i, multiplicity: mult });
        }
    }
    for e in &polygon.edges {
        if e.root_poly.squarefree_part().degree() != e.root_poly.degree() {
            return Err(ToricError::RepeatedEdgeRoots { a: e.normal.0, b: e.normal.1 });
        }
    }

    let mut input: Vec<(i64, i64)> = vec![(1, 0)];
    input.extend(polygon.edges.iter().map(|e| e.normal));
    for &r in extra_rays {
        assert!(r.0 > 0 && r.1 > 0, "extra rays must be interior to the quadrant");
        let g = num_integer::gcd(r.0, r.1);
        let r = (r.0 / g, r.1 / g);
        if let Err(pos) = input.binary_search_by(|probe| det2(r, *probe).cmp(&0)) {
            input.insert(pos, r);
        }
    }
    input.push((0, 1));
    for w in input.windows(2) {
        assert!(det2(w[0], w[1]) >= 1, "fan rays out of order");
    }
    let fan = regular_subdivision(&input);

    let b0 = u64::from(beta.exponents()[0]);
    let b1 = u64::from(beta.exponents()[1]);
    let rays: Vec<RayDivisor> = fan
        .iter()
        .map(|&ray| {
            let n_mult = polygon
                .support
                .iter()
                .map(|a| ray.0 * a.0 as i64 + ray.1 * a.1 as i64)
                .min()
                .unwrap() as u64;
            let nu_mult = (ray.0 * (b0 + 1) as i64 + ray.1 * (b1 + 1) as i64) as u64;
            let edge = polygon.edges.iter().find(|e| e.normal == ray);
            RayDivisor {
                ray,
                n_mult,
                nu_mult,
                exceptional: ray != (1, 0) && ray != (0, 1),
                branch_points: edge.map_or(0, |e| e.lattice_length),
                root_poly: edge.map(|e| e.root_poly.clone()),
            }
        })
        .collect();

    // Stratify the fiber over the origin.  With interior rays present the
    // fiber is the chain of their divisors: open parts of the chain (a line
    // class minus the two chain neighbours minus the branch crossings),
    // the crossing points of consecutive divisors (the axes participate with
    // their own (n, nu)), and the crossings with strict-transform branches.
    // Without interior rays the fiber is the single corner point of the axes.
    let mut strata = Vec::new();
    let label_of = |r: (i64, i64)| format!("E({},{})", r.0, r.1);
    if rays.len() == 2 {
        strata.push(Stratum {
            class_in_l: UniPoly::one(),
            factors: vec![(rays[0].n_mult, rays[0].nu_mult), (rays[1].n_mult, rays[1].nu_mult)],
            label: format!("{} & {}", label_of(rays[0].ray), label_of(rays[1].ray)),
        });
    } else {
        for r in rays.iter().filter(|r| r.exceptional) {
            // L - 1 - (number of branch crossings)
            let class = UniPoly::new(vec![
                Scalar::from_integer((-1 - r.branch_points as i64).into()),
                Scalar::one(),
            ]);
            strata.push(Stratum {
                class_in_l: class,
                factors: vec![(r.n_mult, r.nu_mult)],
                label: label_of(r.ray),
            });
            if r.branch_points > 0 {
                strata.push(Stratum {
                    class_in_l: UniPoly::constant(Scalar::from_integer(
                        (r.branch_points as i64).into(),
                    )),
                    factors: vec![(r.n_mult, r.nu_mult), (1, 1)],
                    label: format!("{} & strict", label_of(r.ray)),
                });
            }
        }
        for pair in rays.windows(2) {
            strata.push(Stratum {
                class_in_l: UniPoly::one(),
                factors: vec![
                    (pair[0].n_mult, pair[0].nu_mult),
                    (pair[1].n_mult, pair[1].nu_mult),
                ],
                label: format!("{} & {}", label_of(pair[0].ray), label_of(pair[1].ray)),
            });
        }
    }

    Ok(SncResolution {
        f: f.clone(),
        twist: beta.clone(),
        ambient_dim: 2,
        polygon: Some(polygon),
        rays,
        strata,
    })
}

/// Resolution with the minimal regular fan.
pub fn snc_resolution(f: &Polynomial, beta: &Monomial) -> Result<SncResolution, ToricError> {
    snc_resolution_with_rays(f, beta, &[])
}

impl SncResolution {
    /// Total number of curve branches through the origin: strict-transform
    /// crossings plus one for each axis contained in the curve.
    pub fn branch_count(&self) -> u64 {
        if self.ambient_dim == 1 {
            return 1;
        }
        let crossings: u64 = self.rays.iter().map(|r| r.branch_points).sum();
        let axes = self
            .rays
            .iter()
            .filter(|r| !r.exceptional && r.n_mult >= 1)
            .count() as u64;
        crossings + axes
    }

    /// Euler characteristic of the fiber over the origin (sum of stratum
    /// classes at L = 1).
    pub fn fiber_euler_characteristic(&self) -> Scalar {
        let one = Scalar::one();
        self.strata
            .iter()
            .fold(Scalar::zero(), |acc, s| acc + s.class_in_l.eval(&one))
    }
}
