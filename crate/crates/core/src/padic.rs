//! Arithmetic oracles: exact solution counting modulo prime powers,
//! residue-field root counting, and the good-prime gate for the Igusa
//! comparison.
//!
//! Everything here is independent of the resolution machinery so that the
//! counts can serve as an outside check on it.

use crate::poly::{Polynomial, WeightVector};
use crate::toric;
use crate::unipoly::{fp_deg, fp_from_unipoly, fp_gcd, fp_is_squarefree, fp_mul, fp_rem, fp_sub, UniPoly};
use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use std::time::Instant;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum PadicError {
    #[error("{p} is not prime")]
    NotPrime { p: u64 },
    #[error("a coefficient denominator vanishes mod {p}")]
    BadDenominator { p: u64 },
    #[error("the polynomial vanishes identically mod {p}")]
    VanishesModP { p: u64 },
    #[error("p^m = {p}^{m} exceeds the supported modulus range")]
    ModulusTooLarge { p: u64, m: u32 },
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Dense-term integer polynomial with coefficients reduced modulo p^m.
/// Products of two reduced coefficients stay inside u128.
#[derive(Debug, Clone)]
struct IntPoly {
    nvars: usize,
    terms: Vec<(Vec<u32>, u64)>,
    modulus: u64,
}

impl IntPoly {
    /// Clears denominators (the cleared unit does not change solution sets
    /// mod p^m) and reduces coefficients.
    fn from_polynomial(f: &Polynomial, p: u64, m: u32) -> Result<IntPoly, PadicError> {
        let modulus = checked_prime_power(p, m)?;
        let lcm = f.denominator_lcm();
        let pb = BigInt::from(p);
        if (&lcm % &pb).is_zero() {
            return Err(PadicError::BadDenominator { p });
        }
        let mb = BigInt::from(modulus);
        let mut terms = Vec::new();
        for (mono, c) in f.terms() {
            let n = c.numer() * (&lcm / c.denom());
            let r = ((&n % &mb) + &mb) % &mb;
            let r = r.to_u64().unwrap();
            if r != 0 {
                terms.push((mono.exponents().to_vec(), r));
            }
        }
        Ok(IntPoly { nvars: f.nvars(), terms, modulus })
    }

    fn reduce_modulus(&self, modulus: u64) -> IntPoly {
        let terms = self
            .terms
            .iter()
            .filter_map(|(e, c)| {
                let r = c % modulus;
                (r != 0).then(|| (e.clone(), r))
            })
            .collect();
        IntPoly { nvars: self.nvars, terms, modulus }
    }

    fn eval(&self, point: &[u64]) -> u64 {
        let m = self.modulus as u128;
        let mut acc = 0u128;
        for (e, c) in &self.terms {
            let mut t = *c as u128;
            for (i, &ei) in e.iter().enumerate() {
                if ei > 0 {
                    let mut b = point[i] as u128 % m;
                    let mut k = ei;
                    let mut powed = 1u128;
                    while k > 0 {
                        if k & 1 == 1 {
                            powed = powed * b % m;
                        }
                        b = b * b % m;
                        k >>= 1;
                    }
                    t = t * powed % m;
                }
            }
            acc = (acc + t) % m;
        }
        acc as u64
    }

    /// Partial derivative evaluated at a point, mod the modulus.
    fn eval_partial(&self, i: usize, point: &[u64]) -> u64 {
        let m = self.modulus as u128;
        let mut acc = 0u128;
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut t = *c as u128 * e[i] as u128 % m;
            for (j, &ej) in e.iter().enumerate() {
                let power = if j == i { ej - 1 } else { ej };
                if power > 0 {
                    let mut b = point[j] as u128 % m;
                    let mut k = power;
                    let mut powed = 1u128;
                    while k > 0 {
                        if k & 1 == 1 {
                            powed = powed * b % m;
                        }
                        b = b * b % m;
                        k >>= 1;
                    }
                    t = t * powed % m;
                }
            }
            acc = (acc + t) % m;
        }
        acc as u64
    }

    /// Substitute x_i = a_i + p·y_i and expand, mod the current modulus.
    fn shift_scale(&self, a: &[u64], p: u64) -> IntPoly {
        let m = self.modulus as u128;
        let max_e = self.terms.iter().flat_map(|(e, _)| e.iter().copied()).max().unwrap_or(0) as usize;
        // Pascal triangle mod the modulus.
        let mut binom = vec![vec![0u64; max_e + 1]; max_e + 1];
        for n in 0..=max_e {
            binom[n][0] = 1 % self.modulus;
            for k in 1..=n {
                binom[n][k] = ((binom[n - 1][k - 1] as u128 + binom[n - 1].get(k).copied().unwrap_or(0) as u128) % m) as u64;
            }
        }
        let mut out: std::collections::BTreeMap<Vec<u32>, u64> = std::collections::BTreeMap::new();
        for (e, c) in &self.terms {
            // Expand Π (a_i + p y_i)^{e_i} term by term.
            let mut partial: Vec<(Vec<u32>, u64)> = vec![(vec![0u32; self.nvars], *c)];
            for (i, &ei) in e.iter().enumerate() {
                if ei == 0 {
                    continue;
                }
                let ei = ei as usize;
                // powers of a_i and of p
                let mut a_pows = vec![1u128; ei + 1];
                for k in 1..=ei {
                    a_pows[k] = a_pows[k - 1] * (a[i] as u128 % m) % m;
                }
                let mut p_pows = vec![1u128; ei + 1];
                for k in 1..=ei {
                    p_pows[k] = p_pows[k - 1] * (p as u128) % m;
                }
                let mut next = Vec::with_capacity(partial.len() * (ei + 1));
                for (mono, coeff) in &partial {
                    for k in 0..=ei {
                        let factor = binom[ei][k] as u128 * a_pows[ei - k] % m * p_pows[k] % m;
                        let nc = (*coeff as u128 * factor % m) as u64;
                        if nc == 0 {
                            continue;
                        }
                        let mut ne = mono.clone();
                        ne[i] = k as u32;
                        next.push((ne, nc));
                    }
                }
                partial = next;
            }
            for (mono, coeff) in partial {
                let slot = out.entry(mono).or_insert(0);
                *slot = ((*slot as u128 + coeff as u128) % m) as u64;
            }
        }
        let terms = out.into_iter().filter(|(_, c)| *c != 0).collect();
        IntPoly { nvars: self.nvars, terms, modulus: self.modulus }
    }

    /// Minimal p-adic valuation of the coefficients, capped at `cap`.
    fn valuation(&self, p: u64, cap: u32) -> u32 {
        let mut best = cap;
        for (_, c) in &self.terms {
            let mut c = *c;
            let mut v = 0u32;
            while v < best && c % p == 0 {
                c /= p;
                v += 1;
            }
            if v < best {
                best = v;
            }
            if best == 0 {
                break;
            }
        }
        best
    }

    fn divide_p_power(&self, p: u64, v: u32) -> IntPoly {
        let d = p.pow(v);
        let terms = self.terms.iter().map(|(e, c)| (e.clone(), c / d)).collect();
        IntPoly { nvars: self.nvars, terms, modulus: self.modulus }
    }
}

fn checked_prime_power(p: u64, m: u32) -> Result<u64, PadicError> {
    let mut acc: u64 = 1;
    for _ in 0..m {
        acc = acc.checked_mul(p).ok_or(PadicError::ModulusTooLarge { p, m })?;
        if acc > (1 << 62) {
            return Err(PadicError::ModulusTooLarge { p, m });
        }
    }
    Ok(acc)
}

fn for_each_point(p: u64, nvars: usize, mut visit: impl FnMut(&[u64])) {
    let mut point = vec![0u64; nvars];
    loop {
        visit(&point);
        let mut i = 0;
        loop {
            if i == nvars {
                return;
            }
            point[i] += 1;
            if point[i] < p {
                break;
            }
            point[i] = 0;
            i += 1;
        }
    }
}

/// Number of solutions of f ≡ 0 mod p^m in (Z/p^m)^nvars, by Hensel-style
/// stratification over residue points: smooth points contribute a closed
/// form, singular points recurse at the next depth.
pub fn count_mod(f: &Polynomial, p: u64, m: u32) -> Result<u128, PadicError> {
    if !is_prime(p) {
        return Err(PadicError::NotPrime { p });
    }
    assert!(m >= 1, "modulus exponent must be at least 1");
    let g = IntPoly::from_polynomial(f, p, m)?;
    Ok(count_rec(&g, p, m))
}

fn count_rec(g: &IntPoly, p: u64, m: u32) -> u128 {
    if m == 0 {
        return 1;
    }
    let nv = g.nvars;
    let mut total = 0u128;
    for_each_point(p, nv, |a| {
        if g.eval(a) % p != 0 {
            return;
        }
        if m == 1 {
            total += 1;
            return;
        }
        let smooth = (0..nv).any(|i| g.eval_partial(i, a) % p != 0);
        if smooth {
            // one coordinate is determined at each further level
            total += (p as u128).pow((m - 1) * (nv as u32 - 1));
            return;
        }
        let h = g.shift_scale(a, p);
        let v = h.valuation(p, m);
        if v >= m {
            total += (p as u128).pow((m - 1) * nv as u32);
        } else {
            let reduced = h.divide_p_power(p, v).reduce_modulus(p.pow(m - v));
            total += (p as u128).pow((v - 1) * nv as u32) * count_rec(&reduced, p, m - v);
        }
    });
    total
}

/// Exhaustive count over (Z/p^m)^nvars; the reference the stratified count
/// must match.
pub fn brute_count(f: &Polynomial, p: u64, m: u32) -> Result<u128, PadicError> {
    if !is_prime(p) {
        return Err(PadicError::NotPrime { p });
    }
    assert!(m >= 1, "modulus exponent must be at least 1");
    let g = IntPoly::from_polynomial(f, p, m)?;
    let pm = g.modulus;
    let mut total = 0u128;
    for_each_point(pm, g.nvars, |a| {
        if g.eval(a) == 0 {
            total += 1;
        }
    });
    Ok(total)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CountMethod {
    Brute,
    Hensel,
}

#[derive(Debug, Clone)]
pub struct CountReport {
    pub p: u64,
    pub method: CountMethod,
    /// (m, count, elapsed in microseconds)
    pub counts: Vec<(u32, u128, u128)>,
}

pub fn count_report(
    f: &Polynomial,
    p: u64,
    m_max: u32,
    method: CountMethod,
) -> Result<CountReport, PadicError> {
    let mut counts = Vec::new();
    for m in 1..=m_max {
        let start = Instant::now();
        let n = match method {
            CountMethod::Brute => brute_count(f, p, m)?,
            CountMethod::Hensel => count_mod(f, p, m)?,
        };
        counts.push((m, n, start.elapsed().as_micros()));
    }
    Ok(CountReport { p, method, counts })
}

/// Number of distinct roots of `u` in the field with p elements, as the
/// degree of gcd(u mod p, X^p − X), with X^p computed by repeated squaring
/// modulo u.
pub fn root_count_fp(u: &UniPoly, p: u64) -> Result<u64, PadicError> {
    if !is_prime(p) {
        return Err(PadicError::NotPrime { p });
    }
    let up = fp_from_unipoly(u, p).ok_or(PadicError::BadDenominator { p })?;
    if up.is_empty() {
        return Err(PadicError::VanishesModP { p });
    }
    if fp_deg(&up) == Some(0) {
        return Ok(0);
    }
    // X^p mod u by repeated squaring
    let mut result = fp_rem(&[1], &up, p); // 1
    let mut base = fp_rem(&[0, 1], &up, p); // X
    let mut e = p;
    while e > 0 {
        if e & 1 == 1 {
            result = fp_rem(&fp_mul(&result, &base, p), &up, p);
        }
        base = fp_rem(&fp_mul(&base, &base, p), &up, p);
        e >>= 1;
    }
    // gcd(u, X^p − X)
    let x = fp_rem(&[0, 1], &up, p);
    let diff = fp_sub(&result, &x, p);
    let g = fp_gcd(&up, &diff, p);
    Ok(fp_deg(&g).map_or(0, |d| d as u64))
}

#[derive(Debug, Clone)]
pub struct GoodPrimeReport {
    pub p: u64,
    pub good: bool,
    pub reasons: Vec<String>,
}

/// Conservative gate for the arithmetic comparison: a prime passes only when
/// the reduction mod p visibly preserves everything the Igusa-side formula
/// uses (coefficients, Newton data, edge separability, smoothness of the
/// curve away from the origin).  When weights are supplied, primes dividing
/// the weighted degree or a weight are also rejected.  False negatives are
/// acceptable; false positives are not.
pub fn good_prime(
    f: &Polynomial,
    _beta: &crate::poly::Monomial,
    p: u64,
    weights: Option<&WeightVector>,
) -> GoodPrimeReport {
    let mut reasons = Vec::new();
    if !is_prime(p) {
        reasons.push(format!("{p} is not prime"));
        return GoodPrimeReport { p, good: false, reasons };
    }
    if let Some(w) = weights {
        if let Ok(Some(d)) = f.min_weighted_degree(w) {
            if d % p as u64 == 0 {
                reasons.push(format!("p divides the weighted degree {d}"));
            }
        }
        for (i, wi) in w.entries().iter().enumerate() {
            if wi % p == 0 {
                reasons.push(format!("p divides weight w{i} = {wi}"));
            }
        }
    }
    let pb = BigInt::from(p);
    if (f.denominator_lcm() % &pb).is_zero() {
        reasons.push("p divides a coefficient denominator".into());
        return GoodPrimeReport { p, good: false, reasons };
    }
    let lcm = f.denominator_lcm();
    for (mono, c) in f.terms() {
        let n = c.numer() * &lcm / c.denom();
        if (n % &pb).is_zero() {
            reasons.push(format!(
                "p divides the cleared coefficient of {}",
                mono_name(mono, f.nvars())
            ));
        }
    }
    if !reasons.is_empty() {
        return GoodPrimeReport { p, good: false, reasons };
    }

    match f.nvars() {
        1 => {
            if let Ok(u) = UniPoly::from_polynomial(f) {
                match fp_from_unipoly(&u, p) {
                    Some(up) if !up.is_empty() => {
                        if !fp_is_squarefree(&up, p) {
                            reasons.push("the reduction mod p has a repeated root".into());
                        }
                    }
                    _ => reasons.push("the polynomial vanishes mod p".into()),
                }
            }
        }
        2 => {
            match toric::newton_polygon(f) {
                Ok(polygon) => {
                    // Full dehomogenized face polynomial (x -> 1, monomial
                    // factor stripped): stronger than separability of the
                    // primitive root polynomial, since it also rejects p
                    // dividing the ramification of the edge parametrization.
                    for e in &polygon.edges {
                        let dp = dehomogenize_face(&e.face_poly);
                        match fp_from_unipoly(&dp, p) {
                            Some(rp) if !rp.is_empty() => {
                                if !fp_is_squarefree(&rp, p) {
                                    reasons.push(format!(
                                        "edge with normal ({},{}) is not separable mod p",
                                        e.normal.0, e.normal.1
                                    ));
                                }
                            }
                            _ => reasons.push("an edge polynomial degenerates mod p".into()),
                        }
                    }
                }
                Err(e) => reasons.push(format!("no Newton polygon: {e}")),
            }
            if let Ok(g) = IntPoly::from_polynomial(f, p, 1) {
                for_each_point(p, 2, |a| {
                    if (a[0] != 0 || a[1] != 0)
                        && g.eval(a) == 0
                        && (0..2).all(|i| g.eval_partial(i, a) == 0)
                    {
                        reasons.push(format!(
                            "the reduction has a singular point at ({},{}) away from the origin",
                            a[0], a[1]
                        ));
                    }
                });
            }
        }
        _ => {}
    }

    GoodPrimeReport { p, good: reasons.is_empty(), reasons }
}

/// Face polynomial of an edge with the first variable set to 1 and the
/// remaining monomial factor in the second variable divided out.
fn dehomogenize_face(face: &Polynomial) -> UniPoly {
    let top = face
        .terms()
        .map(|(m, _)| m.exponents()[1] as usize)
        .max()
        .unwrap_or(0);
    let mut coeffs = vec![crate::poly::int(0); top + 1];
    for (m, c) in face.terms() {
        coeffs[m.exponents()[1] as usize] = &coeffs[m.exponents()[1] as usize] + c;
    }
    let u = UniPoly::new(coeffs);
    match u.valuation() {
        Some(v) if v > 0 => {
            let shifted = u.coeffs()[v..].to_vec();
            UniPoly::new(shifted)
        }
        _ => u,
    }
}

fn mono_name(m: &crate::poly::Monomial, nvars: usize) -> String {
    let names = crate::poly::default_names(nvars);
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    Polynomial::from_term(m.clone(), crate::poly::int(1)).format_with(&refs)
}
