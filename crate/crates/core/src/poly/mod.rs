//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! A [`Monomial`] is an exponent vector, a [`Polynomial`] maps monomials to
//! nonzero [`Scalar`] coefficients.  Terms are stored in a `BTreeMap` keyed
//! by graded-lex order, so iteration, printing and hashing-free equality are
//! all deterministic.  Everything is exact; there is no floating point in
//! this crate.
//!
//! Weighted structure: given positive integer weights `w = (w_0, ..., w_n)`,
//! the weighted degree of `x^m` is `sum_i w_i * m_i`.  [`Polynomial::weighted_parts`]
//! splits a polynomial into its weighted-homogeneous layers, and
//! [`Polynomial::chart_substitute`] performs the one-chart weighted-blowup
//! substitution
//!
//! ```text
//!   x_j <- x_i^{w_j} * u_j   (j != i),      x_i <- x_i^{w_i},
//! ```
//!
//! returning the exact power of the chart variable that factors out together
//! with the residual factor.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

mod parser;
pub use parser::{infer_variables, parse_polynomial, ParseError};

/// Exact rational coefficient: always reduced, denominator positive.
/// Those invariants are maintained by the `num-rational` constructors.
pub type Scalar = BigRational;

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum PolyError {
    #[error("the zero polynomial is not allowed here")]
    ZeroPolynomial,
    #[error("polynomial must vanish at the origin")]
    NonzeroConstantTerm,
    #[error("variable index {index} out of range for {nvars} variables")]
    IndexOutOfRange { index: usize, nvars: usize },
    #[error("expected {expected} variables, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("weight vector must be nonempty")]
    EmptyWeights,
    #[error("weight entries must be positive")]
    NonPositiveWeight,
    #[error("denominator {den} is not invertible modulo {modulus}")]
    NonInvertibleDenominator { den: BigInt, modulus: BigInt },
    #[error("modulus must be at least 2")]
    BadModulus,
}

// ---- Monomials ----

/// Exponent vector of a monomial.  Ordered by total degree, ties broken
/// lexicographically (leftmost variable most significant), which makes map
/// iteration and printing canonical.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    /// The constant monomial `1` in `nvars` variables.
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    /// The single variable `x_i`.
    pub fn variable(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn is_constant(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn weighted_degree(&self, w: &WeightVector) -> Result<u64, PolyError> {
        if w.len() != self.0.len() {
            return Err(PolyError::ArityMismatch { expected: self.0.len(), got: w.len() });
        }
        Ok(self.0.iter().zip(w.entries()).map(|(&e, &wi)| e as u64 * wi).sum())
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.0.len(), other.0.len());
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming divisibility.
    pub fn divide_into(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        Monomial(other.0.iter().zip(&self.0).map(|(b, a)| b - a).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.0.len(), other.0.len());
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

// ---- Weights ----

/// Positive integer weights, normalized so that their gcd is 1.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WeightVector(Vec<u64>);

impl WeightVector {
    pub fn new(entries: Vec<u64>) -> Result<Self, PolyError> {
        if entries.is_empty() {
            return Err(PolyError::EmptyWeights);
        }
        if entries.iter().any(|&w| w == 0) {
            return Err(PolyError::NonPositiveWeight);
        }
        let g = entries.iter().fold(0u64, |acc, &w| acc.gcd(&w));
        Ok(WeightVector(entries.into_iter().map(|w| w / g).collect()))
    }

    pub fn entries(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, i: usize) -> u64 {
        self.0[i]
    }

    /// `|w| = w_0 + ... + w_n`.
    pub fn total(&self) -> u64 {
        self.0.iter().sum()
    }

    pub fn max(&self) -> u64 {
        *self.0.iter().max().expect("nonempty")
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|w| w.to_string()).collect();
        write!(fm, "({})", parts.join(","))
    }
}

// ---- Polynomials ----

/// Sparse polynomial over the rationals.  The zero polynomial has an empty
/// term map; every stored coefficient is nonzero.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, Scalar>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Scalar) -> Self {
        let mut p = Polynomial::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(nvars), c);
        }
        p
    }

    pub fn one(nvars: usize) -> Self {
        Polynomial::constant(nvars, Scalar::one())
    }

    pub fn variable(nvars: usize, i: usize) -> Result<Self, PolyError> {
        if i >= nvars {
            return Err(PolyError::IndexOutOfRange { index: i, nvars });
        }
        Ok(Polynomial::from_term(Monomial::variable(nvars, i), Scalar::one()))
    }

    pub fn from_term(m: Monomial, c: Scalar) -> Self {
        let nvars = m.nvars();
        let mut p = Polynomial::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, Scalar)>) -> Self {
        let mut p = Polynomial::zero(nvars);
        for (m, c) in terms {
            assert_eq!(m.nvars(), nvars, "monomial arity mismatch");
            p.add_term(m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Iterate terms in increasing graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn constant_term(&self) -> Scalar {
        self.coeff(&Monomial::one(self.nvars))
    }

    pub fn support(&self) -> Vec<Monomial> {
        self.terms.keys().cloned().collect()
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.keys().map(|m| m.total_degree()).max()
    }

    pub fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    /// Multiply by a single term `c * x^m`.
    pub fn mul_term(&self, m: &Monomial, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(k, a)| (k.mul(m), a * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(self.nvars);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn partial_derivative(&self, i: usize) -> Result<Polynomial, PolyError> {
        if i >= self.nvars {
            return Err(PolyError::IndexOutOfRange { index: i, nvars: self.nvars });
        }
        let mut out = Polynomial::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.exponents()[i];
            if e == 0 {
                continue;
            }
            let mut exps = m.exponents().to_vec();
            exps[i] -= 1;
            out.add_term(Monomial::new(exps), c * Scalar::from(BigInt::from(e)));
        }
        Ok(out)
    }

    pub fn gradient(&self) -> Result<Vec<Polynomial>, PolyError> {
        (0..self.nvars).map(|i| self.partial_derivative(i)).collect()
    }

    /// Minimal weighted degree over the support (the initial degree).
    pub fn min_weighted_degree(&self, w: &WeightVector) -> Result<Option<u64>, PolyError> {
        let mut best: Option<u64> = None;
        for m in self.terms.keys() {
            let d = m.weighted_degree(w)?;
            best = Some(best.map_or(d, |b| b.min(d)));
        }
        Ok(best)
    }

    /// Split into weighted-homogeneous parts, keyed by weighted degree.
    pub fn weighted_parts(&self, w: &WeightVector) -> Result<BTreeMap<u64, Polynomial>, PolyError> {
        let mut parts: BTreeMap<u64, Polynomial> = BTreeMap::new();
        for (m, c) in &self.terms {
            let d = m.weighted_degree(w)?;
            parts
                .entry(d)
                .or_insert_with(|| Polynomial::zero(self.nvars))
                .add_term(m.clone(), c.clone());
        }
        Ok(parts)
    }

    pub fn is_weighted_homogeneous(&self, w: &WeightVector) -> Result<bool, PolyError> {
        Ok(self.weighted_parts(w)?.len() <= 1)
    }

    /// Weighted-blowup chart substitution.
    ///
    /// In chart `i` substitute `x_i <- x_i^{w_i}` and `x_j <- x_i^{w_j} u_j`
    /// for `j != i`.  Every term `x^a` becomes `x_i^{wdeg(a)} * u^{a'}`, so
    /// the whole polynomial factors as `x_i^d * residual` where `d` is the
    /// initial weighted degree.  The residual lives in `nvars` variables:
    /// slot 0 is the chart variable `x_i`, slots `1..` are the `u_j` in the
    /// original variable order with slot `i` skipped.
    pub fn chart_substitute(
        &self,
        w: &WeightVector,
        chart: usize,
    ) -> Result<(u64, Polynomial), PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        if w.len() != self.nvars {
            return Err(PolyError::ArityMismatch { expected: self.nvars, got: w.len() });
        }
        if chart >= self.nvars {
            return Err(PolyError::IndexOutOfRange { index: chart, nvars: self.nvars });
        }
        let d = self.min_weighted_degree(w)?.expect("nonzero polynomial");
        let mut residual = Polynomial::zero(self.nvars);
        for (m, c) in &self.terms {
            let wd = m.weighted_degree(w)?;
            let mut exps = Vec::with_capacity(self.nvars);
            exps.push(u32::try_from(wd - d).expect("chart exponent fits u32"));
            for (j, &e) in m.exponents().iter().enumerate() {
                if j != chart {
                    exps.push(e);
                }
            }
            residual.add_term(Monomial::new(exps), c.clone());
        }
        Ok((d, residual))
    }

    /// Substitute `x_i = 1` and drop the variable.
    pub fn substitute_one(&self, i: usize) -> Result<Polynomial, PolyError> {
        if i >= self.nvars {
            return Err(PolyError::IndexOutOfRange { index: i, nvars: self.nvars });
        }
        let mut out = Polynomial::zero(self.nvars - 1);
        for (m, c) in &self.terms {
            let exps: Vec<u32> = m
                .exponents()
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, &e)| e)
                .collect();
            out.add_term(Monomial::new(exps), c.clone());
        }
        Ok(out)
    }

    /// Substitute `x_i = 0` and drop the variable.
    pub fn substitute_zero(&self, i: usize) -> Result<Polynomial, PolyError> {
        if i >= self.nvars {
            return Err(PolyError::IndexOutOfRange { index: i, nvars: self.nvars });
        }
        let mut out = Polynomial::zero(self.nvars - 1);
        for (m, c) in &self.terms {
            if m.exponents()[i] != 0 {
                continue;
            }
            let exps: Vec<u32> = m
                .exponents()
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, &e)| e)
                .collect();
            out.add_term(Monomial::new(exps), c.clone());
        }
        Ok(out)
    }

    /// Evaluate at an integer point modulo `m >= 2`.  Rational coefficients
    /// are mapped through modular inverses of their denominators; a
    /// non-invertible denominator is an error.
    pub fn eval_mod(&self, point: &[BigInt], modulus: &BigInt) -> Result<BigInt, PolyError> {
        if point.len() != self.nvars {
            return Err(PolyError::ArityMismatch { expected: self.nvars, got: point.len() });
        }
        if modulus < &BigInt::from(2) {
            return Err(PolyError::BadModulus);
        }
        let mut acc = BigInt::zero();
        for (m, c) in &self.terms {
            let mut term = mod_inverse(c.denom(), modulus).ok_or_else(|| {
                PolyError::NonInvertibleDenominator { den: c.denom().clone(), modulus: modulus.clone() }
            })?;
            term = (term * c.numer()).mod_floor(modulus);
            for (x, &e) in point.iter().zip(m.exponents()) {
                if e > 0 {
                    term = (term * pow_mod(x, e, modulus)).mod_floor(modulus);
                }
            }
            acc = (acc + term).mod_floor(modulus);
        }
        Ok(acc)
    }

    /// Least common multiple of coefficient denominators (positive).
    pub fn denominator_lcm(&self) -> BigInt {
        let mut l = BigInt::one();
        for c in self.terms.values() {
            l = l.lcm(c.denom());
        }
        l
    }

    /// Greatest common divisor of coefficient numerators (nonnegative).
    pub fn numerator_gcd(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = g.gcd(c.numer());
        }
        g
    }

    pub fn format_with(&self, names: &[&str]) -> String {
        assert_eq!(names.len(), self.nvars, "variable name arity mismatch");
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else if neg {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || m.is_constant() {
                factors.push(abs.to_string());
            }
            for (j, &e) in m.exponents().iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(names[j].to_string()),
                    _ => factors.push(format!("{}^{}", names[j], e)),
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }
}

/// Default variable names used by `Display`: x, y, z for up to three
/// variables, x0, x1, ... beyond that.
pub fn default_names(nvars: usize) -> Vec<String> {
    if nvars <= 3 {
        ["x", "y", "z"].iter().take(nvars).map(|s| s.to_string()).collect()
    } else {
        (0..nvars).map(|i| format!("x{i}")).collect()
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = default_names(self.nvars);
        let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
        write!(fm, "{}", self.format_with(&refs))
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars, "polynomial arity mismatch");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars, "polynomial arity mismatch");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars, "polynomial arity mismatch");
        let mut out = Polynomial::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

// ---- modular helpers ----

/// Inverse of `a` modulo `m`, if `gcd(a, m) = 1`.
pub fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let a = a.mod_floor(m);
    let ext = BigInt::extended_gcd(&a, m);
    if ext.gcd.is_one() {
        Some(ext.x.mod_floor(m))
    } else {
        None
    }
}

pub fn pow_mod(base: &BigInt, mut exp: u32, modulus: &BigInt) -> BigInt {
    let mut base = base.mod_floor(modulus);
    let mut acc = BigInt::one().mod_floor(modulus);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = (&acc * &base).mod_floor(modulus);
        }
        base = (&base * &base).mod_floor(modulus);
        exp >>= 1;
    }
    acc
}

/// Convenience constructor for rational scalars.
pub fn rat(n: i64, d: i64) -> Scalar {
    Scalar::new(BigInt::from(n), BigInt::from(d))
}

/// Convenience constructor for integer scalars.
pub fn int(n: i64) -> Scalar {
    Scalar::from(BigInt::from(n))
}
