//! Gröbner bases over Q by Buchberger's algorithm, and local Milnor algebras
//! computed through truncation.
//!
//! The bases are fully reduced (monic generators, no term of any generator
//! divisible by another generator's leading monomial) and sorted, so a basis
//! is a canonical object for its ideal and term order.
//!
//! [`local_milnor_algebra`] computes `Q[x]_m / (grad f)` for an isolated
//! critical point at the origin without localizing: it finds the least `N`
//! with `m^N ⊆ (grad f) + m^{N+1}`, which by Nakayama forces
//! `m^N ⊆ (grad f)` in the local ring, and then the quotient by
//! `(grad f) + m^{N+1}` *is* the local algebra.  The certificate search is
//! exact, so a reported truncation level is proof, not heuristic.

use std::cmp::Ordering;

use num_traits::One;
use thiserror::Error;

use crate::poly::{Monomial, Polynomial, Scalar, WeightVector};

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum GbError {
    #[error("ideal is not zero-dimensional: no pure power of variable {variable} occurs among the leading monomials")]
    NotZeroDimensional { variable: usize },
    #[error("no truncation level up to {bound} certifies a finite local algebra; the critical point may not be isolated")]
    TruncationExceeded { bound: u32 },
    #[error("the function is regular at the origin, so its local algebra is zero")]
    SmoothAtOrigin,
}

/// Monomial orders used by the division algorithm.  Both are global orders
/// (every variable exceeds 1), which the staircase arguments rely on.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum TermOrder {
    /// Graded reverse lexicographic.
    GrevLex,
    /// Weighted degree first, graded-lex tie break.
    WeightedGradedLex(WeightVector),
}

impl TermOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            TermOrder::GrevLex => a.total_degree().cmp(&b.total_degree()).then_with(|| {
                for (x, y) in a.exponents().iter().zip(b.exponents()).rev() {
                    if x != y {
                        // smaller exponent in the rightmost difference wins
                        return y.cmp(x);
                    }
                }
                Ordering::Equal
            }),
            TermOrder::WeightedGradedLex(w) => {
                let wa = a.weighted_degree(w).expect("weight arity");
                let wb = b.weighted_degree(w).expect("weight arity");
                wa.cmp(&wb).then_with(|| a.cmp(b))
            }
        }
    }
}

/// Leading term of a nonzero polynomial under `order`.
pub fn leading_term(p: &Polynomial, order: &TermOrder) -> (Monomial, Scalar) {
    let (m, c) = p
        .terms()
        .max_by(|(m1, _), (m2, _)| order.cmp(m1, m2))
        .expect("nonzero polynomial");
    (m.clone(), c.clone())
}

/// Full normal form of `p` against `basis` (each entry monic, paired with its
/// cached leading monomial): the remainder of the multivariate division
/// algorithm, with the tail reduced too.
fn divide(p: &Polynomial, basis: &[(Monomial, Polynomial)], order: &TermOrder) -> Polynomial {
    let nvars = p.nvars();
    let mut work = p.clone();
    let mut rem = Polynomial::zero(nvars);
    while !work.is_zero() {
        let (lm, lc) = leading_term(&work, order);
        match basis.iter().find(|(bm, _)| bm.divides(&lm)) {
            Some((bm, bp)) => {
                let q = bm.divide_into(&lm);
                work = &work - &bp.mul_term(&q, &lc);
            }
            None => {
                rem.add_term(lm.clone(), lc.clone());
                work.add_term(lm, -lc);
            }
        }
    }
    rem
}

fn s_polynomial(
    (fm, f): &(Monomial, Polynomial),
    (gm, g): &(Monomial, Polynomial),
) -> Polynomial {
    let l = fm.lcm(gm);
    let a = f.mul_term(&fm.divide_into(&l), &Scalar::one());
    let b = g.mul_term(&gm.divide_into(&l), &Scalar::one());
    &a - &b
}

/// Reduce each generator against the others until stable; drops zeros and
/// keeps everything monic.  Applied to arbitrary input this is just an
/// ideal-preserving cleanup; applied to a Gröbner basis it yields the
/// reduced basis.
fn inter_reduce(gens: Vec<Polynomial>, order: &TermOrder) -> Vec<(Monomial, Polynomial)> {
    let mut pool: Vec<(Monomial, Polynomial)> = gens
        .into_iter()
        .filter(|g| !g.is_zero())
        .map(|g| {
            let (lm, lc) = leading_term(&g, order);
            (lm, g.scale(&(Scalar::one() / lc)))
        })
        .collect();
    loop {
        let mut changed = false;
        let mut i = 0;
        while i < pool.len() {
            let entry = pool.remove(i);
            let r = divide(&entry.1, &pool, order);
            if r.is_zero() {
                changed = true;
                continue;
            }
            let (lm, lc) = leading_term(&r, order);
            let monic = r.scale(&(Scalar::one() / lc));
            if monic != entry.1 {
                changed = true;
            }
            pool.insert(i, (lm, monic));
            i += 1;
        }
        if !changed {
            return pool;
        }
    }
}

/// A reduced Gröbner basis together with its order.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    nvars: usize,
    order: TermOrder,
    gens: Vec<(Monomial, Polynomial)>,
}

impl GroebnerBasis {
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    pub fn generators(&self) -> impl Iterator<Item = &Polynomial> {
        self.gens.iter().map(|(_, g)| g)
    }

    pub fn leading_monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.gens.iter().map(|(m, _)| m)
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    /// Canonical representative of `p` modulo the ideal.
    pub fn normal_form(&self, p: &Polynomial) -> Polynomial {
        assert_eq!(p.nvars(), self.nvars, "arity mismatch");
        divide(p, &self.gens, &self.order)
    }

    pub fn contains(&self, p: &Polynomial) -> bool {
        self.normal_form(p).is_zero()
    }

    /// Whether the ideal is the whole ring.
    pub fn contains_one(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].0.is_constant()
    }

    /// Monomials outside the leading-term ideal; a vector-space basis of the
    /// quotient ring.  Errors with a witness variable when infinite.
    pub fn standard_monomials(&self) -> Result<Vec<Monomial>, GbError> {
        if self.contains_one() {
            return Ok(Vec::new());
        }
        let mut caps = Vec::with_capacity(self.nvars);
        for v in 0..self.nvars {
            let cap = self
                .gens
                .iter()
                .filter(|(m, _)| {
                    m.exponents()
                        .iter()
                        .enumerate()
                        .all(|(j, &e)| (j == v) == (e > 0))
                })
                .map(|(m, _)| m.exponents()[v])
                .min()
                .ok_or(GbError::NotZeroDimensional { variable: v })?;
            caps.push(cap);
        }
        let mut out = Vec::new();
        let mut exps = vec![0u32; self.nvars];
        loop {
            let m = Monomial::new(exps.clone());
            if !self.gens.iter().any(|(lm, _)| lm.divides(&m)) {
                out.push(m);
            }
            // odometer over the box below the pure-power caps
            let mut v = 0;
            loop {
                if v == self.nvars {
                    out.sort_by(|a, b| self.order.cmp(a, b));
                    return Ok(out);
                }
                exps[v] += 1;
                if exps[v] < caps[v] {
                    break;
                }
                exps[v] = 0;
                v += 1;
            }
        }
    }

    /// Dimension of the quotient as a Q-vector space.
    pub fn quotient_dimension(&self) -> Result<usize, GbError> {
        Ok(self.standard_monomials()?.len())
    }
}

/// Buchberger's algorithm with normal pair selection, the coprimality
/// criterion, and a final reduction pass.  The result is the unique reduced
/// basis of the input ideal for `order`.
pub fn buchberger(input: &[Polynomial], nvars: usize, order: TermOrder) -> GroebnerBasis {
    for g in input {
        assert_eq!(g.nvars(), nvars, "arity mismatch");
    }
    let mut basis = inter_reduce(input.to_vec(), &order);
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for i in 0..basis.len() {
        for j in 0..i {
            pairs.push((j, i));
        }
    }
    while !pairs.is_empty() {
        // normal strategy: smallest lcm first
        let best = pairs
            .iter()
            .enumerate()
            .min_by(|(_, (i1, j1)), (_, (i2, j2))| {
                let l1 = basis[*i1].0.lcm(&basis[*j1].0);
                let l2 = basis[*i2].0.lcm(&basis[*j2].0);
                order.cmp(&l1, &l2).then_with(|| (i1, j1).cmp(&(i2, j2)))
            })
            .map(|(k, _)| k)
            .expect("nonempty");
        let (i, j) = pairs.swap_remove(best);
        if basis[i].0.coprime(&basis[j].0) {
            continue;
        }
        // two monic single-term generators have a vanishing s-polynomial
        if basis[i].1.num_terms() == 1 && basis[j].1.num_terms() == 1 {
            continue;
        }
        let s = s_polynomial(&basis[i], &basis[j]);
        let r = divide(&s, &basis, &order);
        if r.is_zero() {
            continue;
        }
        let (lm, lc) = leading_term(&r, &order);
        let new_idx = basis.len();
        basis.push((lm, r.scale(&(Scalar::one() / lc))));
        for k in 0..new_idx {
            pairs.push((k, new_idx));
        }
    }
    let mut gens = inter_reduce(basis.into_iter().map(|(_, g)| g).collect(), &order);
    gens.sort_by(|(a, _), (b, _)| order.cmp(a, b));
    GroebnerBasis { nvars, order, gens }
}

/// Whether `1 ∈ (gens)`, i.e. the generators have no common zero over an
/// algebraically closed field.
pub fn ideal_contains_one(gens: &[Polynomial], nvars: usize) -> bool {
    buchberger(gens, nvars, TermOrder::GrevLex).contains_one()
}

/// All monomials of the given total degree, ascending.
pub fn monomials_of_degree(nvars: usize, degree: u32) -> Vec<Monomial> {
    fn rec(nvars: usize, left: u32, prefix: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if prefix.len() + 1 == nvars {
            prefix.push(left);
            out.push(Monomial::new(prefix.clone()));
            prefix.pop();
            return;
        }
        for e in 0..=left {
            prefix.push(e);
            rec(nvars, left - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if nvars == 0 {
        return out;
    }
    rec(nvars, degree, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// The local algebra `Q[x]_m / (grad f)` of an isolated critical point at
/// the origin, cut out at a certified truncation level.
#[derive(Clone, Debug)]
pub struct MilnorAlgebra {
    /// Least `N` with `m^N ⊆ (grad f) + m^{N+1}`.
    truncation: u32,
    basis: Vec<Monomial>,
    gb: GroebnerBasis,
}

impl MilnorAlgebra {
    pub fn truncation(&self) -> u32 {
        self.truncation
    }

    /// Monomial basis (the staircase), sorted by the algebra's term order.
    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    /// Milnor number.
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn order(&self) -> &TermOrder {
        self.gb.order()
    }

    /// Canonical representative in the span of the basis monomials.
    pub fn normal_form(&self, p: &Polynomial) -> Polynomial {
        self.gb.normal_form(p)
    }

    /// Coordinates of `p`'s class with respect to `basis()`.
    pub fn coordinates(&self, p: &Polynomial) -> Vec<Scalar> {
        let nf = self.normal_form(p);
        self.basis.iter().map(|m| nf.coeff(m)).collect()
    }
}

/// Compute the local Milnor algebra of `f` at the origin, searching
/// truncation levels `1..=bound`.
pub fn local_milnor_algebra(
    f: &Polynomial,
    order: TermOrder,
    bound: u32,
) -> Result<MilnorAlgebra, GbError> {
    let nvars = f.nvars();
    let grads = f.gradient().expect("gradient of well-formed polynomial");
    for n in 1..=bound {
        let mut gens = grads.clone();
        gens.extend(
            monomials_of_degree(nvars, n + 1)
                .into_iter()
                .map(|m| Polynomial::from_term(m, Scalar::one())),
        );
        let gb = buchberger(&gens, nvars, order.clone());
        let certified = monomials_of_degree(nvars, n)
            .into_iter()
            .all(|m| gb.contains(&Polynomial::from_term(m, Scalar::one())));
        if certified {
            let basis = gb
                .standard_monomials()
                .expect("truncated ideal contains pure powers of every variable");
            if basis.is_empty() {
                return Err(GbError::SmoothAtOrigin);
            }
            return Ok(MilnorAlgebra { truncation: n, basis, gb });
        }
    }
    Err(GbError::TruncationExceeded { bound })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_polynomial, rat};

    fn p(text: &str, vars: &[&str]) -> Polynomial {
        parse_polynomial(text, vars).expect("parse")
    }

    #[test]
    fn grevlex_orders_standard_examples() {
        let o = TermOrder::GrevLex;
        // y^2 > x z in grevlex with x > y > z
        let y2 = Monomial::new(vec![0, 2, 0]);
        let xz = Monomial::new(vec![1, 0, 1]);
        assert_eq!(o.cmp(&y2, &xz), Ordering::Greater);
        // degree dominates
        let x = Monomial::new(vec![1, 0, 0]);
        assert_eq!(o.cmp(&x, &y2), Ordering::Less);
    }

    #[test]
    fn weighted_order_picks_heaviest_term() {
        let w = WeightVector::new(vec![3, 7]).unwrap();
        let o = TermOrder::WeightedGradedLex(w);
        let f = p("y^3 - x^7 + x^5*y", &["x", "y"]);
        let (lm, _) = leading_term(&f, &o);
        assert_eq!(lm, Monomial::new(vec![5, 1]));
    }

    #[test]
    fn buchberger_on_cusp_gradient() {
        let gens = vec![p("-3x^2", &["x", "y"]), p("2y", &["x", "y"])];
        let gb = buchberger(&gens, 2, TermOrder::GrevLex);
        let lms: Vec<_> = gb.leading_monomials().cloned().collect();
        assert_eq!(lms, vec![Monomial::new(vec![0, 1]), Monomial::new(vec![2, 0])]);
        let basis = gb.standard_monomials().unwrap();
        assert_eq!(basis, vec![Monomial::one(2), Monomial::new(vec![1, 0])]);
    }

    #[test]
    fn textbook_basis_with_spolynomials() {
        // I = (x^2 - y, x^3 - z): reduced grevlex basis needs an s-polynomial
        let gens = vec![p("x^2 - y", &["x", "y", "z"]), p("x^3 - z", &["x", "y", "z"])];
        let gb = buchberger(&gens, 3, TermOrder::GrevLex);
        // x*y - z joins the basis
        assert!(gb.contains(&p("x*y - z", &["x", "y", "z"])));
        assert!(gb.contains(&p("y^3 - z^2", &["x", "y", "z"])));
        assert!(!gb.contains(&p("x*y - y", &["x", "y", "z"])));
    }

    #[test]
    fn unit_ideal_detection() {
        let gens = vec![p("x", &["x", "y"]), p("x + 1", &["x", "y"])];
        assert!(ideal_contains_one(&gens, 2));
        let gens = vec![p("x", &["x", "y"]), p("y", &["x", "y"])];
        assert!(!ideal_contains_one(&gens, 2));
    }

    #[test]
    fn infinite_staircase_is_reported() {
        let gb = buchberger(&[p("x", &["x", "y"])], 2, TermOrder::GrevLex);
        assert_eq!(
            gb.standard_monomials(),
            Err(GbError::NotZeroDimensional { variable: 1 })
        );
    }

    #[test]
    fn milnor_algebra_of_cusp() {
        let f = p("y^2 - x^3", &["x", "y"]);
        let alg = local_milnor_algebra(&f, TermOrder::GrevLex, 16).unwrap();
        assert_eq!(alg.truncation(), 2);
        assert_eq!(alg.dimension(), 2);
        assert_eq!(alg.basis(), &[Monomial::one(2), Monomial::new(vec![1, 0])]);
    }

    #[test]
    fn milnor_algebra_needs_truncation_for_far_critical_points() {
        // grad = (2x(x - 1)(2x - 1), 2y) vanishes at x ∈ {0, 1/2, 1}; the
        // truncation isolates the origin and reports its local dimension 1
        let f = p("(x^2 - x)^2 + y^2", &["x", "y"]);
        let alg = local_milnor_algebra(&f, TermOrder::GrevLex, 16).unwrap();
        assert_eq!(alg.dimension(), 1);
        // while the global quotient sees all three critical columns
        let gb = buchberger(&f.gradient().unwrap(), 2, TermOrder::GrevLex);
        assert_eq!(gb.quotient_dimension().unwrap(), 3);
    }

    #[test]
    fn milnor_algebra_matches_weight_count_for_brieskorn() {
        // x^3 + y^3 + z^3: mu = 2*2*2
        let f = p("x^3 + y^3 + z^3", &["x", "y", "z"]);
        let alg = local_milnor_algebra(&f, TermOrder::GrevLex, 16).unwrap();
        assert_eq!(alg.dimension(), 8);
        assert_eq!(alg.truncation(), 4);
    }

    #[test]
    fn milnor_rejects_smooth_origin() {
        let f = p("x + x^2 + y^3", &["x", "y"]);
        assert_eq!(
            local_milnor_algebra(&f, TermOrder::GrevLex, 8).unwrap_err(),
            GbError::SmoothAtOrigin
        );
    }

    #[test]
    fn milnor_rejects_nonisolated() {
        // x^2: critical locus is the whole y-axis
        let f = p("x^2", &["x", "y"]);
        assert_eq!(
            local_milnor_algebra(&f, TermOrder::GrevLex, 6).unwrap_err(),
            GbError::TruncationExceeded { bound: 6 }
        );
    }

    #[test]
    fn normal_form_knows_gradient_relations() {
        // -7x^6 + 5x^4 y is a gradient component, so x^6 ≡ (5/7) x^4 y
        let f = p("y^3 - x^7 + x^5*y", &["x", "y"]);
        let w = WeightVector::new(vec![3, 7]).unwrap();
        let alg = local_milnor_algebra(&f, TermOrder::WeightedGradedLex(w), 20).unwrap();
        assert_eq!(alg.dimension(), 12);
        let lhs = p("x^6", &["x", "y"]);
        let rhs = p("x^4*y", &["x", "y"]).scale(&rat(5, 7));
        assert!(alg.normal_form(&(&lhs - &rhs)).is_zero());
    }

    #[test]
    fn normal_form_is_linear_and_idempotent() {
        let f = p("y^2 - x^3", &["x", "y"]);
        let alg = local_milnor_algebra(&f, TermOrder::GrevLex, 8).unwrap();
        let a = p("x^2 + 3x*y - 1", &["x", "y"]);
        let b = p("y^2 + x", &["x", "y"]);
        let nf_sum = alg.normal_form(&(&a + &b));
        let sum_nf = &alg.normal_form(&a) + &alg.normal_form(&b);
        assert_eq!(nf_sum, sum_nf);
        assert_eq!(alg.normal_form(&nf_sum), nf_sum);
    }

    #[test]
    fn degree_enumeration() {
        assert_eq!(monomials_of_degree(2, 2).len(), 3);
        assert_eq!(monomials_of_degree(3, 4).len(), 15);
        assert_eq!(monomials_of_degree(1, 5), vec![Monomial::new(vec![5])]);
    }
}
