//! Zeta functions from resolution data.
//!
//! The motivic zeta function of a germ is assembled from the stratification
//! of the fiber over the origin as an exact rational function in two symbols:
//! L (the class of the affine line) and T.  Each divisor with multiplicities
//! (N, ν) contributes a factor (L−1)·L^(−ν)·T^N / (1 − L^(−ν)·T^N); the sum
//! over strata is normalized by L^(−dim).  Poles in s (where T = L^(−s)) are
//! read off the reduced denominator and certified a second time numerically.
//!
//! Specializations: the topological zeta function (L → 1), and for good
//! primes the p-adic integral over the unit polydisc (L → p with
//! residue-field point counts), whose Poincaré series predicts solution
//! counts modulo p^m.

use crate::blowup::{PoleKind, PoleSet};
use crate::padic::{self, PadicError};
use crate::poly::{int, Scalar};
use crate::toric::SncResolution;
use crate::unipoly::{RatFn, UniPoly};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum ZetaError {
    #[error("bad prime {p}: {reasons}")]
    BadPrime { p: u64, reasons: String },
    #[error("arithmetic specialization supports only untwisted input")]
    TwistedUnsupported,
    #[error("pole certification mismatch at ratio {sigma}: symbolic order {symbolic}, order {specialized} at L = {l}")]
    CertificationMismatch { sigma: String, symbolic: i64, specialized: i64, l: String },
    #[error("Poincaré coefficient at level {m} is not a nonnegative integer")]
    NonIntegerCount { m: u32 },
    #[error(transparent)]
    Padic(#[from] PadicError),
}

/// Monomial L^k as a univariate polynomial.
fn lpow(k: u64) -> UniPoly {
    let mut v = vec![Scalar::zero(); k as usize + 1];
    v[k as usize] = Scalar::one();
    UniPoly::new(v)
}

fn l_minus_one() -> UniPoly {
    UniPoly::new(vec![int(-1), int(1)])
}

fn rf_sub(a: &RatFn, b: &RatFn) -> RatFn {
    a.add(&b.scale(&int(-1)))
}

// ---- polynomials in T with coefficients in Q(L) ----

type TPoly = Vec<RatFn>;

fn tp_trim(t: &mut TPoly) {
    while t.last().is_some_and(RatFn::is_zero) {
        t.pop();
    }
}

fn tp_is_zero(t: &TPoly) -> bool {
    t.iter().all(RatFn::is_zero)
}

fn tp_add(a: &TPoly, b: &TPoly) -> TPoly {
    let mut out = vec![RatFn::zero(); a.len().max(b.len())];
    for (k, c) in a.iter().enumerate() {
        out[k] = out[k].add(c);
    }
    for (k, c) in b.iter().enumerate() {
        out[k] = out[k].add(c);
    }
    tp_trim(&mut out);
    out
}

fn tp_scale(t: &TPoly, c: &RatFn) -> TPoly {
    let mut out: TPoly = t.iter().map(|x| x.mul(c)).collect();
    tp_trim(&mut out);
    out
}

/// Multiply by the factor (1 − L^(−ν) T^N).
fn tp_mul_factor(t: &TPoly, n: u64, nu: u64) -> TPoly {
    let shift = RatFn::new(UniPoly::one(), lpow(nu));
    let mut out = vec![RatFn::zero(); t.len() + n as usize];
    for (k, c) in t.iter().enumerate() {
        out[k] = out[k].add(c);
        let moved = c.mul(&shift);
        out[k + n as usize] = rf_sub(&out[k + n as usize], &moved);
    }
    tp_trim(&mut out);
    out
}

/// Exact division by T^n − L^ν (monic in T), if the remainder vanishes.
fn tp_div_exact(t: &TPoly, n: u64, nu: u64) -> Option<TPoly> {
    let n = n as usize;
    let mut rem = t.clone();
    tp_trim(&mut rem);
    if rem.is_empty() {
        return Some(Vec::new());
    }
    if rem.len() <= n {
        return None;
    }
    let lnu = RatFn::from_poly(lpow(nu));
    let mut quot = vec![RatFn::zero(); rem.len() - n];
    for k in (n..rem.len()).rev() {
        let c = rem[k].clone();
        if c.is_zero() {
            continue;
        }
        quot[k - n] = c.clone();
        rem[k] = RatFn::zero();
        rem[k - n] = rem[k - n].add(&c.mul(&lnu));
    }
    if tp_is_zero(&rem) {
        tp_trim(&mut quot);
        Some(quot)
    } else {
        None
    }
}

/// Exact division by an arbitrary divisor monic in T, if the remainder
/// vanishes.
fn tp_div_exact_by(t: &TPoly, divisor: &TPoly) -> Option<TPoly> {
    let mut d = divisor.clone();
    tp_trim(&mut d);
    assert!(d.last().is_some_and(|c| *c == RatFn::constant(Scalar::one())));
    let deg = d.len() - 1;
    let mut rem = t.clone();
    tp_trim(&mut rem);
    if rem.is_empty() {
        return Some(Vec::new());
    }
    if rem.len() <= deg {
        return if deg == 0 { Some(rem) } else { None };
    }
    let mut quot = vec![RatFn::zero(); rem.len() - deg];
    for k in (deg..rem.len()).rev() {
        let c = rem[k].clone();
        if c.is_zero() {
            continue;
        }
        quot[k - deg] = c.clone();
        for (j, dj) in d.iter().enumerate() {
            rem[k - deg + j] = rf_sub(&rem[k - deg + j], &c.mul(dj));
        }
    }
    if tp_is_zero(&rem) {
        tp_trim(&mut quot);
        Some(quot)
    } else {
        None
    }
}

/// (T^(gn₀) − L^(gν₀)) / (T^(dn₀) − L^(dν₀)) for d | g: the geometric sum
/// Σ_{j<g/d} T^(jdn₀) L^((g/d−1−j)dν₀), monic in T.
fn same_ratio_cofactor(n0: u64, nu0: u64, g: u64, d: u64) -> TPoly {
    let q = (g / d) as usize;
    let mut out = vec![RatFn::zero(); ((g - d) * n0) as usize + 1];
    for j in 0..q {
        let tpow = (j as u64 * d * n0) as usize;
        let lpow_exp = (q as u64 - 1 - j as u64) * d * nu0;
        out[tpow] = RatFn::from_poly(lpow(lpow_exp));
    }
    out
}

/// Motivic zeta function: numerator as a polynomial in T with coefficients
/// rational in L, over a multiset of denominator factors (N, ν), each
/// standing for (1 − L^(−ν) T^N).
///
/// The zeta function lives in a coefficient ring where only the factors
/// (1 − L^(−ν) T^N) themselves may be inverted — not arbitrary polynomials
/// in L and T.  Reduction therefore cancels a denominator factor only when
/// the whole factor divides the numerator, or shrinks (N, ν) to a
/// proportional pair (N/g·d, ν/g·d) when the complementary cofactor
/// divides.  A pole's order is the number of factors with that ratio ν/N
/// that remain: partial cancellation against the primitive piece
/// T^(N₀) − L^(ν₀) alone does not remove a pole, because the leftover
/// cofactor is not an invertible element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZetaExpression {
    pub num: Vec<RatFn>,
    pub den: Vec<(u64, u64)>,
    pub ambient_dim: u32,
}

/// Assemble the zeta function of the germ from the stratification of the
/// fiber over the origin.  Factors with N = 0 (axes not contained in the
/// curve) are rational in L alone and fold into the coefficients; for ν = 1
/// they equal 1 exactly.
pub fn assemble_motivic(res: &SncResolution) -> ZetaExpression {
    let strata_counts: Vec<BTreeMap<(u64, u64), u32>> = res
        .strata
        .iter()
        .map(|s| {
            let mut m = BTreeMap::new();
            for &(n, nu) in &s.factors {
                if n >= 1 {
                    *m.entry((n, nu)).or_insert(0) += 1;
                }
            }
            m
        })
        .collect();
    let mut common: BTreeMap<(u64, u64), u32> = BTreeMap::new();
    for sc in &strata_counts {
        for (k, c) in sc {
            let slot = common.entry(*k).or_insert(0);
            *slot = (*slot).max(*c);
        }
    }

    let mut num: TPoly = Vec::new();
    for (stratum, sc) in res.strata.iter().zip(&strata_counts) {
        let mut coef = RatFn::from_poly(stratum.class_in_l.clone());
        let mut shift = 0usize;
        for &(n, nu) in &stratum.factors {
            if n == 0 {
                // (L−1) L^{−ν} / (1 − L^{−ν}) = (L−1)/(L^ν − 1)
                coef = coef.mul(&RatFn::new(l_minus_one(), rf_den_lnu_minus_one(nu)));
            } else {
                coef = coef.mul(&RatFn::new(l_minus_one(), lpow(nu)));
                shift += n as usize;
            }
        }
        if coef.is_zero() {
            continue;
        }
        let mut term: TPoly = vec![RatFn::zero(); shift];
        term.push(coef);
        for (&(n, nu), &mult) in &common {
            let have = sc.get(&(n, nu)).copied().unwrap_or(0);
            for _ in have..mult {
                term = tp_mul_factor(&term, n, nu);
            }
        }
        num = tp_add(&num, &term);
    }
    let prefactor = RatFn::new(UniPoly::one(), lpow(u64::from(res.ambient_dim)));
    num = tp_scale(&num, &prefactor);

    let mut den: Vec<(u64, u64)> = Vec::new();
    for (&k, &mult) in &common {
        for _ in 0..mult {
            den.push(k);
        }
    }
    let mut z = ZetaExpression { num, den, ambient_dim: res.ambient_dim };
    z.reduce();
    z
}

fn rf_den_lnu_minus_one(nu: u64) -> UniPoly {
    lpow(nu).sub(&UniPoly::one())
}

impl ZetaExpression {
    /// Cancel whole denominator factors dividing the numerator
    /// (num / (1 − L^(−ν)T^N) = −L^ν · (num div (T^N − L^ν))), and shrink
    /// factors to smaller same-ratio ones when the complementary cofactor
    /// divides: (1 − L^(−gν₀)T^(gN₀)) = (1 − L^(−dν₀)T^(dN₀)) · C · L^(−(g−d)ν₀)
    /// with C the geometric cofactor, so num/C · L^((g−d)ν₀) replaces num.
    fn reduce(&mut self) {
        loop {
            let mut changed = false;
            let distinct: BTreeSet<(u64, u64)> = self.den.iter().copied().collect();
            for (n, nu) in distinct {
                while self.den.contains(&(n, nu)) {
                    match tp_div_exact(&self.num, n, nu) {
                        Some(q) => {
                            self.num = tp_scale(&q, &RatFn::from_poly(lpow(nu).neg()));
                            let pos = self.den.iter().position(|f| *f == (n, nu)).unwrap();
                            self.den.remove(pos);
                            changed = true;
                        }
                        None => break,
                    }
                }
                let g = n.gcd(&nu);
                if g >= 2 && self.den.contains(&(n, nu)) {
                    let (n0, nu0) = (n / g, nu / g);
                    for d in (1..g).rev().filter(|d| g % d == 0) {
                        let cof = same_ratio_cofactor(n0, nu0, g, d);
                        if let Some(q) = tp_div_exact_by(&self.num, &cof) {
                            self.num = tp_scale(&q, &RatFn::from_poly(lpow((g - d) * nu0)));
                            let pos = self.den.iter().position(|f| *f == (n, nu)).unwrap();
                            self.den[pos] = (d * n0, d * nu0);
                            changed = true;
                            break;
                        }
                    }
                }
            }
            if !changed {
                break;
            }
        }
        tp_trim(&mut self.num);
    }

    /// Equality as rational functions (cross-multiplied).
    pub fn equivalent(&self, other: &ZetaExpression) -> bool {
        let mut a = self.num.clone();
        for &(n, nu) in &other.den {
            a = tp_mul_factor(&a, n, nu);
        }
        let mut b = other.num.clone();
        for &(n, nu) in &self.den {
            b = tp_mul_factor(&b, n, nu);
        }
        a == b
    }

    /// Ratios ν/N of the remaining denominator factors, reduced.
    pub fn denominator_ratios(&self) -> BTreeSet<Scalar> {
        self.den
            .iter()
            .map(|&(n, nu)| Scalar::new(BigInt::from(nu), BigInt::from(n)))
            .collect()
    }

    /// Exact poles in s with certified orders.  The order at a reduced
    /// ratio σ = ν₀/N₀ is the number of remaining denominator factors with
    /// that ratio — reduce() has already cancelled every factor that can be
    /// cancelled legitimately.  Certification: specializing L at r^(N₀) for
    /// r ∈ {2, 3, 5} makes T = r^(ν₀) an exact common root of precisely the
    /// same-ratio factors (each vanishing simply), and the univariate
    /// numerator valuation there must equal the symbolic multiplicity of
    /// the primitive factor T^(N₀) − L^(ν₀) in the numerator.  Disagreement
    /// means the reduction bookkeeping is broken and is a hard error.
    pub fn poles(&self) -> Result<PoleSet, ZetaError> {
        assert!(!tp_is_zero(&self.num), "zeta numerator must not vanish");
        let mut groups: BTreeMap<Scalar, (u64, u64, u32)> = BTreeMap::new();
        for &(n, nu) in &self.den {
            let sigma = Scalar::new(BigInt::from(nu), BigInt::from(n));
            let g = n.gcd(&nu);
            let e = groups.entry(sigma).or_insert((n / g, nu / g, 0));
            e.2 += 1;
        }
        let mut entries = Vec::new();
        for (sigma, (n0, nu0, count)) in groups {
            let mut prim_mult = 0u32;
            let mut cur = self.num.clone();
            while !tp_is_zero(&cur) {
                match tp_div_exact(&cur, n0, nu0) {
                    Some(q) => {
                        cur = q;
                        prim_mult += 1;
                    }
                    None => break,
                }
            }

            for r in [2u64, 3, 5] {
                let lval = Scalar::from(BigInt::from(r).pow(n0 as u32));
                let t0 = Scalar::from(BigInt::from(r).pow(nu0 as u32));

                let mut den_val = 0u32;
                for &(n, nu) in &self.den {
                    if u128::from(nu0) * u128::from(n) == u128::from(n0) * u128::from(nu) {
                        den_val += 1;
                    }
                }
                if den_val != count {
                    return Err(ZetaError::CertificationMismatch {
                        sigma: format!("{sigma}"),
                        symbolic: i64::from(count),
                        specialized: i64::from(den_val),
                        l: format!("{r}^{n0}"),
                    });
                }

                let mut coeffs = Vec::with_capacity(self.num.len());
                for c in &self.num {
                    let v = c
                        .eval(&lval)
                        .expect("coefficient denominators are nonzero at integer L >= 2");
                    coeffs.push(v);
                }
                let mut spec = UniPoly::new(coeffs);
                let mut val = 0u32;
                let linear = UniPoly::new(vec![-t0.clone(), Scalar::one()]);
                while !spec.is_zero() && spec.eval(&t0).is_zero() {
                    spec = spec.div_exact(&linear);
                    val += 1;
                }
                if val != prim_mult {
                    return Err(ZetaError::CertificationMismatch {
                        sigma: format!("{sigma}"),
                        symbolic: i64::from(prim_mult),
                        specialized: i64::from(val),
                        l: format!("{r}^{n0}"),
                    });
                }
            }

            entries.push((-sigma, count));
        }
        Ok(PoleSet::new(PoleKind::Exact, entries))
    }
}

/// Topological zeta function: Σ over strata of χ(stratum) · Π 1/(N s + ν),
/// with χ the stratum class at L = 1.  Exact rational function in s.
pub fn topological(res: &SncResolution) -> RatFn {
    let one = Scalar::one();
    let mut acc = RatFn::zero();
    for s in &res.strata {
        let chi = s.class_in_l.eval(&one);
        if chi.is_zero() {
            continue;
        }
        let mut den = UniPoly::one();
        for &(n, nu) in &s.factors {
            den = den.mul(&UniPoly::new(vec![int(nu as i64), int(n as i64)]));
        }
        acc = acc.add(&RatFn::new(UniPoly::constant(chi), den));
    }
    acc
}

// ---- the L → 1 limit, computed symbolically from the motivic expression ----

/// Truncated power series in ε with polynomial-in-s coefficients.
fn ss_mul(a: &[UniPoly], b: &[UniPoly], ord: usize) -> Vec<UniPoly> {
    let mut out = vec![UniPoly::zero(); ord];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            if i + j >= ord {
                break;
            }
            out[i + j] = out[i + j].add(&ai.mul(bj));
        }
    }
    out
}

/// binom(q, i) = q (q−1) ... (q−i+1) / i! for a polynomial argument q.
fn binom_poly(q: &UniPoly, i: usize) -> UniPoly {
    let mut out = UniPoly::one();
    for j in 0..i {
        out = out.mul(&q.sub(&UniPoly::constant(int(j as i64))));
    }
    let mut fact = Scalar::one();
    for j in 1..=i {
        fact = fact * int(j as i64);
    }
    out.scale(&(Scalar::one() / fact))
}

/// Coefficients of p(1 + ε) as a series in ε (exact; finitely many terms).
fn shift_to_one(p: &UniPoly, ord: usize) -> Vec<Scalar> {
    let deg = p.degree().unwrap_or(0);
    let mut pascal = vec![vec![Scalar::zero(); deg + 1]; deg + 1];
    for n in 0..=deg {
        pascal[n][0] = Scalar::one();
        for k in 1..=n {
            pascal[n][k] = pascal[n - 1][k - 1].clone()
                + if k <= n - 1 { pascal[n - 1][k].clone() } else { Scalar::zero() };
        }
    }
    let mut out = vec![Scalar::zero(); ord];
    for (k, a) in p.coeffs().iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for i in 0..=k.min(ord - 1) {
            out[i] = out[i].clone() + a * &pascal[k][i];
        }
    }
    out
}

fn invert_scalar_series(a: &[Scalar], ord: usize) -> Vec<Scalar> {
    assert!(!a[0].is_zero(), "series must be invertible");
    let mut out = vec![Scalar::zero(); ord];
    out[0] = Scalar::one() / a[0].clone();
    for i in 1..ord {
        let mut acc = Scalar::zero();
        for j in 1..=i {
            let aj = a.get(j).cloned().unwrap_or_else(Scalar::zero);
            acc = acc + aj * out[i - j].clone();
        }
        out[i] = -acc / a[0].clone();
    }
    out
}

/// The L → 1 limit of the motivic expression, expanded at L = 1 + ε with
/// T = L^(−s).  The denominator factors contribute ε·(N s + ν)·(unit); the
/// numerator must vanish to the same ε-order, and the limit is the ratio of
/// leading coefficients.  This is an independent path to the topological
/// zeta function.
pub fn topological_via_limit(z: &ZetaExpression) -> RatFn {
    let d = z.den.len();
    let ord = d + 1;

    let mut numser = vec![UniPoly::zero(); ord];
    for (k, c) in z.num.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let cn = shift_to_one(c.num(), ord);
        let cd = shift_to_one(c.den(), ord);
        let cdinv = invert_scalar_series(&cd, ord);
        let mut cser = vec![Scalar::zero(); ord];
        for i in 0..ord {
            for j in 0..=i {
                cser[i] = cser[i].clone() + cn[j].clone() * cdinv[i - j].clone();
            }
        }
        // (1+ε)^(−k s): ε^i coefficient binom(−k s, i)
        let q = UniPoly::new(vec![Scalar::zero(), int(-(k as i64))]);
        let tpow: Vec<UniPoly> = (0..ord).map(|i| binom_poly(&q, i)).collect();
        let cser_poly: Vec<UniPoly> = cser.into_iter().map(UniPoly::constant).collect();
        let term = ss_mul(&cser_poly, &tpow, ord);
        for i in 0..ord {
            numser[i] = numser[i].add(&term[i]);
        }
    }

    // each factor (1 − (1+ε)^(−u)) = ε · (u − binom(−u,2) ε − ...) with u = ν + N s
    let mut unit = vec![UniPoly::zero(); ord];
    unit[0] = UniPoly::one();
    for &(n, nu) in &z.den {
        let u = UniPoly::new(vec![int(nu as i64), int(n as i64)]);
        let minus_u = u.neg();
        let f: Vec<UniPoly> = (1..=ord).map(|i| binom_poly(&minus_u, i).neg()).collect();
        unit = ss_mul(&unit, &f, ord);
    }

    for (i, c) in numser.iter().enumerate().take(d) {
        assert!(
            c.is_zero(),
            "numerator must vanish to order {d} at L = 1; ε^{i} coefficient is {c:?}"
        );
    }
    RatFn::new(numser[d].clone(), unit[0].clone())
}

// ---- arithmetic specialization ----

/// One Denef-style local factor at L = p: (p−1) p^(−ν) t^N / (1 − p^(−ν) t^N),
/// which for N = 0 collapses to the constant (p−1)/(p^ν − 1).
fn p_factor(p: u64, n: u64, nu: u64) -> RatFn {
    let pm1 = int(p as i64 - 1);
    let pnu = Scalar::from(BigInt::from(p).pow(nu as u32));
    if n == 0 {
        return RatFn::constant(pm1 / (pnu - Scalar::one()));
    }
    let mut numc = vec![Scalar::zero(); n as usize + 1];
    numc[n as usize] = pm1 / pnu.clone();
    let mut denc = vec![Scalar::zero(); n as usize + 1];
    denc[0] = Scalar::one();
    denc[n as usize] = -(Scalar::one() / pnu);
    RatFn::new(UniPoly::new(numc), UniPoly::new(denc))
}

/// The p-adic zeta function of f over the whole unit polydisc, as an exact
/// rational function in t = p^(−s): cells with nonzero residue contribute
/// constants, smooth curve points away from the origin contribute the
/// standard factor, and the cell at the origin is computed from the
/// resolution strata with honest residue-field point counts (edge-root
/// counts over F_p replace the algebraically closed counts).
pub fn igusa_specialize(res: &SncResolution, p: u64) -> Result<RatFn, ZetaError> {
    if res.twist.exponents().iter().any(|&e| e != 0) {
        return Err(ZetaError::TwistedUnsupported);
    }
    let gate = padic::good_prime(&res.f, &res.twist, p, None);
    if !gate.good {
        return Err(ZetaError::BadPrime { p, reasons: gate.reasons.join("; ") });
    }
    let nv = res.ambient_dim;
    let v1 = padic::count_mod(&res.f, p, 1)?;
    let total = (p as u128).pow(nv);
    let f11 = p_factor(p, 1, 1);

    // cells away from the origin
    let mut bracket = RatFn::constant(Scalar::from(BigInt::from(total - v1)));
    let away = v1 - 1; // the origin is always a solution; the gate certifies the rest smooth
    bracket = bracket.add(&f11.scale(&Scalar::from(BigInt::from(away))));

    // the cell at the origin, stratum by stratum
    if nv == 1 {
        for s in &res.strata {
            let mut term = RatFn::constant(Scalar::one());
            for &(n, nu) in &s.factors {
                term = term.mul(&p_factor(p, n, nu));
            }
            bracket = bracket.add(&term);
        }
    } else {
        let interior: Vec<_> = res.rays.iter().filter(|r| r.exceptional).collect();
        if interior.is_empty() {
            let mut term = RatFn::constant(Scalar::one());
            for r in &res.rays {
                term = term.mul(&p_factor(p, r.n_mult, r.nu_mult));
            }
            bracket = bracket.add(&term);
        } else {
            for r in &interior {
                let rho = match &r.root_poly {
                    Some(rp) => padic::root_count_fp(rp, p)?,
                    None => 0,
                };
                let open_count = int(p as i64 - 1 - rho as i64);
                let factor = p_factor(p, r.n_mult, r.nu_mult);
                bracket = bracket.add(&factor.scale(&open_count));
                if rho > 0 {
                    bracket = bracket
                        .add(&factor.mul(&f11).scale(&Scalar::from(BigInt::from(rho))));
                }
            }
            for pair in res.rays.windows(2) {
                let term = p_factor(p, pair[0].n_mult, pair[0].nu_mult)
                    .mul(&p_factor(p, pair[1].n_mult, pair[1].nu_mult));
                bracket = bracket.add(&term);
            }
        }
    }

    let pn = Scalar::from(BigInt::from(total));
    Ok(bracket.scale(&(Scalar::one() / pn)))
}

/// Solution counts modulo p^m read off the Poincaré series
/// P(t) = (1 − t Z(t))/(1 − t) = Σ N_m (p^(−n) t)^m.  Non-integer
/// coefficients signal a bad prime or an implementation bug.
pub fn predict_counts(
    igusa: &RatFn,
    p: u64,
    n_vars: u32,
    m_max: u32,
) -> Result<Vec<BigInt>, ZetaError> {
    // P = (den − t·num) / ((1 − t)·den)
    let t = UniPoly::x();
    let num_p = igusa.den().sub(&t.mul(igusa.num()));
    let den_p = UniPoly::new(vec![Scalar::one(), -Scalar::one()]).mul(igusa.den());

    let ord = m_max as usize + 1;
    let a: Vec<Scalar> = (0..ord).map(|i| num_p.coeff(i)).collect();
    let b: Vec<Scalar> = (0..ord).map(|i| den_p.coeff(i)).collect();
    assert!(!b[0].is_zero());
    let mut c = vec![Scalar::zero(); ord];
    for i in 0..ord {
        let mut acc = a[i].clone();
        for j in 1..=i {
            acc = acc - b[j].clone() * c[i - j].clone();
        }
        c[i] = acc / b[0].clone();
    }

    let mut out = Vec::with_capacity(m_max as usize);
    let pn = BigInt::from(p).pow(n_vars);
    let mut scale = BigInt::one();
    for (m, cm) in c.iter().enumerate().skip(1) {
        scale *= &pn;
        let nm = cm * Scalar::from(scale.clone());
        if !nm.is_integer() || nm.is_negative() {
            return Err(ZetaError::NonIntegerCount { m: m as u32 });
        }
        out.push(nm.to_integer());
    }
    Ok(out)
}

impl std::fmt::Display for ZetaExpression {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        write!(f, "(")?;
        if self.num.is_empty() {
            write!(f, "0")?;
        }
        for (k, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "[{}]", c.format_with("L"))?;
            if k == 1 {
                write!(f, "*T")?;
            } else if k > 1 {
                write!(f, "*T^{k}")?;
            }
        }
        write!(f, ")")?;
        for (n, nu) in &self.den {
            write!(f, " / (1 - L^-{nu}*T^{n})")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_polynomial, Monomial, Polynomial};
    use crate::poly::rat;
    use crate::toric::{snc_resolution, snc_resolution_with_rays, univariate_resolution};

    fn poly2(text: &str) -> Polynomial {
        parse_polynomial(text, &["x", "y"]).unwrap()
    }

    fn cusp(beta: (u32, u32)) -> SncResolution {
        snc_resolution(&poly2("y^2 - x^3"), &Monomial::new(vec![beta.0, beta.1])).unwrap()
    }

    fn pole_list(ps: &PoleSet) -> Vec<(Scalar, u32)> {
        ps.entries.iter().map(|(s, o)| (s.clone(), *o)).collect()
    }

    #[test]
    fn cusp_exact_poles() {
        let z = assemble_motivic(&cusp((0, 0)));
        let poles = z.poles().unwrap();
        assert_eq!(poles.kind, PoleKind::Exact);
        assert_eq!(pole_list(&poles), vec![(rat(-1, 1), 1), (rat(-5, 6), 1)]);
        // after reduction only the ratios 1 and 5/6 survive in the denominator
        let ratios = z.denominator_ratios();
        assert!(ratios.iter().all(|r| *r == rat(1, 1) || *r == rat(5, 6)));
    }

    #[test]
    fn twisted_cusp_has_the_extra_pole() {
        let z = assemble_motivic(&cusp((0, 1)));
        let poles = z.poles().unwrap();
        assert_eq!(pole_list(&poles), vec![(rat(-4, 3), 1), (rat(-1, 1), 1)]);
        let ratios = z.denominator_ratios();
        assert_eq!(
            ratios.into_iter().collect::<Vec<_>>(),
            vec![rat(1, 1), rat(4, 3)]
        );
    }

    #[test]
    fn seven_three_twisted_pole() {
        let res = snc_resolution(&poly2("y^3 - x^7 + x^5*y"), &Monomial::new(vec![6, 0])).unwrap();
        let z = assemble_motivic(&res);
        let poles = z.poles().unwrap();
        assert!(poles.entries.contains_key(&rat(-28, 21)));
        assert_eq!(poles.entries[&rat(-4, 3)], 1);
    }

    #[test]
    fn smooth_univariate_zeta() {
        let f = parse_polynomial("x", &["x"]).unwrap();
        let res = univariate_resolution(&f, &Monomial::new(vec![0])).unwrap();
        let z = assemble_motivic(&res);
        // L^(−1)·(L−1)L^(−1)T/(1−L^(−1)T): numerator coefficient of T is (L−1)/L²
        assert_eq!(z.den, vec![(1, 1)]);
        assert_eq!(z.num.len(), 2);
        assert!(z.num[0].is_zero());
        assert_eq!(z.num[1], RatFn::new(l_minus_one(), lpow(2)));
        assert_eq!(pole_list(&z.poles().unwrap()), vec![(rat(-1, 1), 1)]);
    }

    #[test]
    fn smooth_plane_curve_pole() {
        let res = snc_resolution(&poly2("x"), &Monomial::new(vec![0, 0])).unwrap();
        let z = assemble_motivic(&res);
        assert_eq!(pole_list(&z.poles().unwrap()), vec![(rat(-1, 1), 1)]);
    }

    #[test]
    fn cusp_topological_zeta() {
        let z = topological(&cusp((0, 0)));
        // (4s+5)/((s+1)(6s+5))
        let expected = RatFn::new(
            UniPoly::new(vec![rat(5, 1), rat(4, 1)]),
            UniPoly::new(vec![rat(5, 1), rat(11, 1), rat(6, 1)]),
        );
        assert_eq!(z, expected);
    }

    #[test]
    fn twisted_cusp_topological_residue_cancels() {
        // the ratio 8/6 survives in the motivic denominator, but its residue
        // vanishes in the L → 1 specialization: the sum collapses to
        // 1/(2(s+1)); hand check: the bracket of contributions around the
        // (2,3)-ray is −1 + 1/(s+1) + 1/(2s+3) + 1/(3s+5), zero at s = −4/3
        let z = topological(&cusp((0, 1)));
        let expected = RatFn::new(
            UniPoly::constant(rat(1, 1)),
            UniPoly::new(vec![rat(2, 1), rat(2, 1)]),
        );
        assert_eq!(z, expected);
        let poles: Vec<Scalar> = z.poles().into_iter().map(|(s, _)| s).collect();
        assert_eq!(poles, vec![rat(-1, 1)]);
    }

    #[test]
    fn square_sum_topological_zeta() {
        let res = snc_resolution(&poly2("x^2 + y^2"), &Monomial::new(vec![0, 0])).unwrap();
        let z = topological(&res);
        // 1/(s+1)^2
        let expected = RatFn::new(
            UniPoly::constant(rat(1, 1)),
            UniPoly::new(vec![rat(1, 1), rat(2, 1), rat(1, 1)]),
        );
        assert_eq!(z, expected);
    }

    #[test]
    fn limit_path_agrees_with_direct_topological() {
        for (f, beta) in [
            ("y^2 - x^3", (0u32, 0u32)),
            ("y^2 - x^3", (0, 1)),
            ("y^3 - x^7 + x^5*y", (6, 0)),
            ("y^3 - x^7 + x^5*y", (0, 0)),
            ("x^2 + y^2", (0, 0)),
            ("x*y", (0, 0)),
            ("x^3 + x*y + y^3", (0, 0)),
        ] {
            let res = snc_resolution(&poly2(f), &Monomial::new(vec![beta.0, beta.1])).unwrap();
            let direct = topological(&res);
            let via_limit = topological_via_limit(&assemble_motivic(&res));
            assert_eq!(direct, via_limit, "{f} twist {beta:?}");
        }
    }

    #[test]
    fn zeta_is_stable_under_fan_refinement() {
        let f = poly2("y^2 - x^3");
        let beta = Monomial::new(vec![0, 0]);
        let base = assemble_motivic(&snc_resolution(&f, &beta).unwrap());
        let refined =
            assemble_motivic(&snc_resolution_with_rays(&f, &beta, &[(3, 4), (5, 7)]).unwrap());
        assert!(base.equivalent(&refined));
        assert_eq!(
            pole_list(&base.poles().unwrap()),
            pole_list(&refined.poles().unwrap())
        );
    }

    #[test]
    fn cusp_igusa_denominator_divides_the_expected_product() {
        let z = igusa_specialize(&cusp((0, 0)), 7).unwrap();
        // (1 − 7^(−1) t)(1 − 7^(−5) t^6)
        let d1 = UniPoly::new(vec![rat(1, 1), rat(-1, 7)]);
        let mut c6 = vec![Scalar::zero(); 7];
        c6[0] = Scalar::one();
        c6[6] = rat(-1, 16807);
        let product = d1.mul(&UniPoly::new(c6));
        let (_, rem) = product.div_rem(z.den());
        assert!(rem.is_zero(), "denominator {} does not divide", z.den().format_with("t"));
    }

    #[test]
    fn cusp_counts_predicted_from_igusa() {
        let res = cusp((0, 0));
        let z = igusa_specialize(&res, 7).unwrap();
        let counts = predict_counts(&z, 7, 2, 4).unwrap();
        assert_eq!(counts[0], BigInt::from(7));
        assert_eq!(counts[1], BigInt::from(91));
        for (m, n) in counts.iter().enumerate() {
            let direct = crate::padic::count_mod(&res.f, 7, m as u32 + 1).unwrap();
            assert_eq!(n, &BigInt::from(direct), "m = {}", m + 1);
        }
    }

    #[test]
    fn igusa_rejects_bad_primes_and_twists() {
        let err = igusa_specialize(&cusp((0, 0)), 2).unwrap_err();
        assert!(matches!(err, ZetaError::BadPrime { p: 2, .. }));
        let err = igusa_specialize(&cusp((0, 1)), 7).unwrap_err();
        assert_eq!(err, ZetaError::TwistedUnsupported);
    }

    #[test]
    fn univariate_counts_are_all_one() {
        let f = parse_polynomial("x", &["x"]).unwrap();
        let res = univariate_resolution(&f, &Monomial::new(vec![0])).unwrap();
        let z = igusa_specialize(&res, 5).unwrap();
        let counts = predict_counts(&z, 5, 1, 3).unwrap();
        assert_eq!(counts, vec![BigInt::one(), BigInt::one(), BigInt::one()]);
    }

    #[test]
    fn arithmetic_cross_check_on_more_primes() {
        for (f, primes) in [
            (poly2("y^2 - x^3"), vec![5u64, 7, 11, 13]),
            (poly2("x^2 + y^2"), vec![5, 7, 13]),
            (poly2("x*y"), vec![5, 7]),
        ] {
            for p in primes {
                let res = snc_resolution(&f, &Monomial::new(vec![0, 0])).unwrap();
                let z = igusa_specialize(&res, p).unwrap();
                let counts = predict_counts(&z, p, 2, 3).unwrap();
                for (m, n) in counts.iter().enumerate() {
                    let direct = crate::padic::count_mod(&f, p, m as u32 + 1).unwrap();
                    assert_eq!(n, &BigInt::from(direct), "f mod {p}^{}", m + 1);
                }
            }
        }
    }
}
