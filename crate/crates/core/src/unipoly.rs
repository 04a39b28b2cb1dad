//! Dense univariate polynomials over the rationals, a small rational-function
//! type built on them, and dense polynomial arithmetic over a prime field.
//!
//! The prime-field helpers work on `Vec<u64>` coefficient vectors (lowest
//! degree first, no trailing zeros) for a prime `p < 2^32`; intermediate
//! products go through `u128`, so no overflow is possible.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::poly::{PolyError, Polynomial, Scalar};

/// Univariate polynomial over Q.  Invariant: `coeffs` has no trailing zeros;
/// the zero polynomial is the empty vector.  `coeffs[k]` multiplies `x^k`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UniPoly {
    coeffs: Vec<Scalar>,
}

/// Scale to integer coefficients and strip the content; zero maps to the
/// empty vector.  Same coefficient order as `UniPoly`.
fn int_primitive(p: &UniPoly) -> Vec<BigInt> {
    let mut scale = BigInt::one();
    for c in &p.coeffs {
        scale = scale.lcm(c.denom());
    }
    let ints = p
        .coeffs
        .iter()
        .map(|c| c.numer() * (&scale / c.denom()))
        .collect();
    int_strip(ints)
}

/// Drop trailing zeros and divide out the integer content.
fn int_strip(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    let mut content = BigInt::zero();
    for c in &v {
        content = content.gcd(c);
        if content.is_one() {
            return v;
        }
    }
    if !content.is_zero() {
        for c in &mut v {
            *c = &*c / &content;
        }
    }
    v
}

/// Pseudo-remainder of `a` by `b` (`b` nonempty): the remainder is rescaled
/// by `b`'s leading coefficient before each cancellation, so everything
/// stays integral.
fn int_prem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r = a.to_vec();
    while r.len() > db {
        let lr = r.pop().expect("nonempty remainder");
        if lr.is_zero() {
            continue;
        }
        let shift = r.len() - db;
        for c in &mut r {
            *c = &*c * lb;
        }
        for (j, bc) in b[..db].iter().enumerate() {
            r[shift + j] -= &lr * bc;
        }
    }
    r
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        UniPoly::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        UniPoly::new(vec![c])
    }

    pub fn x() -> Self {
        UniPoly::new(vec![Scalar::zero(), Scalar::one()])
    }

    /// `c + x`, the monic linear polynomial with root `-c`.
    pub fn linear(c: Scalar) -> Self {
        UniPoly::new(vec![c, Scalar::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Scalar {
        self.coeffs.get(k).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn leading_coeff(&self) -> Scalar {
        self.coeffs.last().cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn add(&self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) + rhs.coeff(k));
        }
        UniPoly::new(out)
    }

    pub fn sub(&self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) - rhs.coeff(k));
        }
        UniPoly::new(out)
    }

    pub fn neg(&self) -> UniPoly {
        UniPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn scale(&self, c: &Scalar) -> UniPoly {
        if c.is_zero() {
            return UniPoly::zero();
        }
        UniPoly { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    pub fn mul(&self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Scalar::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        UniPoly::new(out)
    }

    pub fn pow(&self, e: u32) -> UniPoly {
        let mut acc = UniPoly::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &UniPoly) -> (UniPoly, UniPoly) {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let dd = divisor.coeffs.len();
        if self.coeffs.len() < dd {
            return (UniPoly::zero(), self.clone());
        }
        let lead_inv = Scalar::one() / divisor.leading_coeff();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Scalar::zero(); rem.len() - dd + 1];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd - 1] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (j, b) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = &rem[k + j] - &(&c * b);
            }
            quot[k] = c;
        }
        (UniPoly::new(quot), UniPoly::new(rem))
    }

    /// Exact quotient; panics if the division leaves a remainder.
    pub fn div_exact(&self, divisor: &UniPoly) -> UniPoly {
        let (q, r) = self.div_rem(divisor);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    ///
    /// Primitive remainder sequence over Z: clearing denominators up front
    /// and stripping the integer content after every pseudo-division keeps
    /// the coefficients small, where the remainder sequence over Q blows
    /// them up exponentially in the degree.
    pub fn gcd(&self, rhs: &UniPoly) -> UniPoly {
        let mut a = int_primitive(self);
        let mut b = int_primitive(rhs);
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_empty() {
            let r = int_strip(int_prem(&a, &b));
            a = b;
            b = r;
        }
        let Some(lead) = a.last().cloned() else {
            return UniPoly::zero();
        };
        UniPoly::new(
            a.into_iter()
                .map(|c| Scalar::new(c, lead.clone()))
                .collect(),
        )
    }

    pub fn monic(&self) -> UniPoly {
        if self.is_zero() {
            return UniPoly::zero();
        }
        let inv = Scalar::one() / self.leading_coeff();
        self.scale(&inv)
    }

    pub fn derivative(&self) -> UniPoly {
        if self.coeffs.len() <= 1 {
            return UniPoly::zero();
        }
        let out = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * Scalar::from(BigInt::from(k)))
            .collect();
        UniPoly::new(out)
    }

    /// Monic product of the distinct irreducible factors.
    pub fn squarefree_part(&self) -> UniPoly {
        if self.is_zero() {
            return UniPoly::zero();
        }
        let g = self.gcd(&self.derivative());
        self.div_exact(&g).monic()
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        let mut acc = Scalar::zero();
        for c in self.coeffs.iter().rev() {
            acc = &acc * x + c;
        }
        acc
    }

    /// Multiplicity of `x` as a factor (index of the lowest nonzero coefficient).
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Rational roots with multiplicities (sorted ascending), plus the
    /// root-free cofactor that remains after deflation.
    pub fn rational_roots(&self) -> (Vec<(Scalar, u32)>, UniPoly) {
        if self.is_zero() {
            return (Vec::new(), UniPoly::zero());
        }
        let mut roots: Vec<(Scalar, u32)> = Vec::new();
        let mut rest = self.clone();
        if let Some(v) = rest.valuation() {
            if v > 0 {
                roots.push((Scalar::zero(), v as u32));
                rest = UniPoly::new(rest.coeffs[v..].to_vec());
            }
        }
        // clear denominators; candidate roots are p/q with p | a_0, q | a_n
        let den_lcm = rest
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let int_coeffs: Vec<BigInt> = rest
            .coeffs
            .iter()
            .map(|c| c.numer() * (&den_lcm / c.denom()))
            .collect();
        let a0 = int_coeffs.first().cloned().unwrap_or_else(BigInt::zero).abs();
        let an = int_coeffs.last().cloned().unwrap_or_else(BigInt::zero).abs();
        let mut candidates: Vec<Scalar> = Vec::new();
        for p in positive_divisors(&a0) {
            for q in positive_divisors(&an) {
                let r = Scalar::new(p.clone(), q.clone());
                if !candidates.contains(&r) {
                    candidates.push(r.clone());
                    candidates.push(-r);
                }
            }
        }
        for r in candidates {
            let mut mult = 0u32;
            while rest.degree().is_some_and(|d| d >= 1) && rest.eval(&r).is_zero() {
                rest = rest.div_exact(&UniPoly::linear(-r.clone()));
                mult += 1;
            }
            if mult > 0 {
                roots.push((r, mult));
            }
        }
        roots.sort_by(|a, b| a.0.cmp(&b.0));
        (roots, rest)
    }

    /// Convert a one-variable [`Polynomial`].
    pub fn from_polynomial(p: &Polynomial) -> Result<UniPoly, PolyError> {
        if p.nvars() != 1 {
            return Err(PolyError::ArityMismatch { expected: 1, got: p.nvars() });
        }
        let deg = p.total_degree().unwrap_or(0) as usize;
        let mut coeffs = vec![Scalar::zero(); deg + 1];
        for (m, c) in p.terms() {
            coeffs[m.exponents()[0] as usize] = c.clone();
        }
        Ok(UniPoly::new(coeffs))
    }

    pub fn to_polynomial(&self) -> Polynomial {
        Polynomial::from_terms(
            1,
            self.coeffs.iter().enumerate().map(|(k, c)| {
                (crate::poly::Monomial::new(vec![k as u32]), c.clone())
            }),
        )
    }

    pub fn format_with(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (k, c)) in self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .enumerate()
        {
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
            let show_coeff = !abs.is_one() || k == 0;
            if show_coeff {
                out.push_str(&abs.to_string());
            }
            if k > 0 {
                if show_coeff {
                    out.push('*');
                }
                out.push_str(var);
                if k > 1 {
                    out.push_str(&format!("^{k}"));
                }
            }
        }
        out
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(fm, "{}", self.format_with("s"))
    }
}

fn positive_divisors(n: &BigInt) -> Vec<BigInt> {
    if n.is_zero() {
        // zero constant coefficient is deflated away before we get here
        return vec![BigInt::one()];
    }
    let n = n.abs();
    let mut small: Vec<BigInt> = Vec::new();
    let mut large: Vec<BigInt> = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if n.is_multiple_of(&d) {
            small.push(d.clone());
            let q = &n / &d;
            if q != d {
                large.push(q);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

// ---- rational functions ----

/// Reduced rational function `num/den` over Q; the denominator is monic and
/// coprime to the numerator.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatFn {
    num: UniPoly,
    den: UniPoly,
}

impl RatFn {
    pub fn new(num: UniPoly, den: UniPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let g = num.gcd(&den);
        let (num, den) = if g.degree().is_some_and(|d| d >= 1) {
            (num.div_exact(&g), den.div_exact(&g))
        } else {
            (num, den)
        };
        let lead = den.leading_coeff();
        let inv = Scalar::one() / lead;
        RatFn { num: num.scale(&inv), den: den.scale(&inv) }
    }

    pub fn zero() -> Self {
        RatFn { num: UniPoly::zero(), den: UniPoly::one() }
    }

    pub fn from_poly(p: UniPoly) -> Self {
        RatFn { num: p, den: UniPoly::one() }
    }

    pub fn constant(c: Scalar) -> Self {
        RatFn::from_poly(UniPoly::constant(c))
    }

    pub fn num(&self) -> &UniPoly {
        &self.num
    }

    pub fn den(&self) -> &UniPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, rhs: &RatFn) -> RatFn {
        RatFn::new(
            self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den)),
            self.den.mul(&rhs.den),
        )
    }

    pub fn mul(&self, rhs: &RatFn) -> RatFn {
        RatFn::new(self.num.mul(&rhs.num), self.den.mul(&rhs.den))
    }

    pub fn scale(&self, c: &Scalar) -> RatFn {
        RatFn { num: self.num.scale(c), den: self.den.clone() }
    }

    /// Evaluate; `None` when `x` is a pole.
    pub fn eval(&self, x: &Scalar) -> Option<Scalar> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(x) / d)
    }

    /// Poles with orders, sorted ascending.  The denominator must factor
    /// completely over Q (true for every denominator this crate builds);
    /// panics otherwise.
    pub fn poles(&self) -> Vec<(Scalar, u32)> {
        let (roots, rest) = self.den.rational_roots();
        assert!(
            rest.degree().map_or(true, |d| d == 0),
            "denominator has an irrational factor: {rest}"
        );
        roots
    }

    pub fn format_with(&self, var: &str) -> String {
        if self.den == UniPoly::one() {
            return self.num.format_with(var);
        }
        format!("({}) / ({})", self.num.format_with(var), self.den.format_with(var))
    }
}

impl fmt::Display for RatFn {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(fm, "{}", self.format_with("s"))
    }
}

// ---- prime-field polynomial arithmetic ----

/// Reduce and trim a coefficient vector mod `p`.
pub fn fp_new(coeffs: &[u64], p: u64) -> Vec<u64> {
    let mut out: Vec<u64> = coeffs.iter().map(|&c| c % p).collect();
    fp_trim(&mut out);
    out
}

pub fn fp_trim(a: &mut Vec<u64>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

pub fn fp_deg(a: &[u64]) -> Option<usize> {
    a.len().checked_sub(1)
}

pub fn fp_add(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    let mut out = vec![0u64; n];
    for k in 0..n {
        let x = a.get(k).copied().unwrap_or(0);
        let y = b.get(k).copied().unwrap_or(0);
        out[k] = (x + y) % p;
    }
    fp_trim(&mut out);
    out
}

pub fn fp_sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    let mut out = vec![0u64; n];
    for k in 0..n {
        let x = a.get(k).copied().unwrap_or(0);
        let y = b.get(k).copied().unwrap_or(0);
        out[k] = (x + p - y) % p;
    }
    fp_trim(&mut out);
    out
}

pub fn fp_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            let prod = (x as u128 * y as u128 + out[i + j] as u128) % p as u128;
            out[i + j] = prod as u64;
        }
    }
    fp_trim(&mut out);
    out
}

pub fn fp_inv(a: u64, p: u64) -> u64 {
    // p is prime, a != 0 mod p: Fermat
    fp_pow_scalar(a % p, p - 2, p)
}

pub fn fp_pow_scalar(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = (acc as u128 * base as u128 % p as u128) as u64;
        }
        base = (base as u128 * base as u128 % p as u128) as u64;
        exp >>= 1;
    }
    acc
}

/// Remainder of `a` modulo a nonzero `b`.
pub fn fp_rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    assert!(!b.is_empty(), "division by zero polynomial");
    let mut rem = a.to_vec();
    let db = b.len() - 1;
    let lead_inv = fp_inv(b[db], p);
    while rem.len() > db {
        let k = rem.len() - 1 - db;
        let c = (rem[rem.len() - 1] as u128 * lead_inv as u128 % p as u128) as u64;
        if c != 0 {
            for (j, &bj) in b.iter().enumerate() {
                let sub = (c as u128 * bj as u128 % p as u128) as u64;
                rem[k + j] = (rem[k + j] + p - sub) % p;
            }
        }
        rem.pop();
        fp_trim(&mut rem);
        if rem.len() <= db {
            break;
        }
    }
    fp_trim(&mut rem);
    rem
}

/// Monic gcd over F_p.
pub fn fp_gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    while !b.is_empty() {
        let r = fp_rem(&a, &b, p);
        a = b;
        b = r;
    }
    if let Some(&lead) = a.last() {
        let inv = fp_inv(lead, p);
        for c in &mut a {
            *c = (*c as u128 * inv as u128 % p as u128) as u64;
        }
    }
    a
}

pub fn fp_derivative(a: &[u64], p: u64) -> Vec<u64> {
    if a.len() <= 1 {
        return Vec::new();
    }
    let mut out: Vec<u64> = a
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, &c)| (c as u128 * (k as u64 % p) as u128 % p as u128) as u64)
        .collect();
    fp_trim(&mut out);
    out
}

pub fn fp_eval(a: &[u64], x: u64, p: u64) -> u64 {
    let mut acc = 0u64;
    for &c in a.iter().rev() {
        acc = ((acc as u128 * x as u128 + c as u128) % p as u128) as u64;
    }
    acc
}

/// Distinct roots of `a` in F_p, by direct evaluation.
pub fn fp_roots(a: &[u64], p: u64) -> Vec<u64> {
    (0..p).filter(|&x| fp_eval(a, x, p) == 0).collect()
}

/// True when `a` is nonzero and squarefree over F_p.
pub fn fp_is_squarefree(a: &[u64], p: u64) -> bool {
    if a.is_empty() {
        return false;
    }
    let d = fp_derivative(a, p);
    if d.is_empty() {
        // derivative vanishes: constant is squarefree, anything else is a
        // p-th power times a unit
        return a.len() == 1;
    }
    fp_gcd(a, &d, p).len() == 1
}

/// Reduce a rational-coefficient polynomial mod `p`; `None` when some
/// denominator is divisible by `p`.
pub fn fp_from_unipoly(u: &UniPoly, p: u64) -> Option<Vec<u64>> {
    let pb = BigInt::from(p);
    let mut out = Vec::with_capacity(u.coeffs().len());
    for c in u.coeffs() {
        let den = c.denom().mod_floor(&pb);
        if den.is_zero() {
            return None;
        }
        let num = c.numer().mod_floor(&pb);
        let den_u = u64::try_from(&den).expect("den < p");
        let num_u = u64::try_from(&num).expect("num < p");
        out.push((num_u as u128 * fp_inv(den_u, p) as u128 % p as u128) as u64);
    }
    fp_trim(&mut out);
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{int, rat};

    fn up(coeffs: &[i64]) -> UniPoly {
        UniPoly::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    #[test]
    fn div_rem_and_gcd() {
        // (x^2 - 1) = (x - 1)(x + 1)
        let a = up(&[-1, 0, 1]);
        let b = up(&[-1, 1]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(q, up(&[1, 1]));
        assert!(r.is_zero());
        assert_eq!(a.gcd(&up(&[1, 1])), up(&[1, 1]));
        assert_eq!(up(&[0]).gcd(&UniPoly::zero()), UniPoly::zero());
    }

    #[test]
    fn gcd_with_rational_coefficients() {
        // common factor (x - 1/3); the thirds force the denominator-clearing
        // path, the cofactors make both remainder steps nontrivial
        let common = UniPoly::new(vec![rat(-1, 3), int(1)]);
        let a = common.mul(&up(&[5, 1])).mul(&up(&[2, 0, 7]));
        let b = common.mul(&up(&[-4, 1]));
        assert_eq!(a.gcd(&b), common);
        assert_eq!(a.gcd(&up(&[9])), up(&[1]));
    }

    #[test]
    fn squarefree_part_strips_multiplicity() {
        // x^3 (x - 2)^2 -> x (x - 2)
        let f = UniPoly::x().pow(3).mul(&up(&[-2, 1]).pow(2));
        assert_eq!(f.squarefree_part(), UniPoly::x().mul(&up(&[-2, 1])));
    }

    #[test]
    fn rational_roots_with_multiplicity() {
        // 6 x^2 (x + 1/2)^2 (x - 3) = ...
        let f = UniPoly::x()
            .pow(2)
            .mul(&UniPoly::linear(rat(1, 2)).pow(2))
            .mul(&up(&[-3, 1]))
            .scale(&int(6));
        let (roots, rest) = f.rational_roots();
        assert_eq!(
            roots,
            vec![(rat(-1, 2), 2), (int(0), 2), (int(3), 1)]
        );
        assert_eq!(rest.degree(), Some(0));
    }

    #[test]
    fn ratfn_reduces_and_finds_poles() {
        // (s + 1)(s + 2) / (s + 1)^2 (6 s + 5) -> (s + 2) / ((s + 1)(6 s + 5))
        let num = UniPoly::linear(int(1)).mul(&UniPoly::linear(int(2)));
        let den = UniPoly::linear(int(1)).pow(2).mul(&up(&[5, 6]));
        let f = RatFn::new(num, den);
        assert_eq!(f.poles(), vec![(int(-1), 1), (rat(-5, 6), 1)]);
        assert_eq!(f.eval(&int(0)), Some(rat(2, 5)));
        assert_eq!(f.eval(&int(-1)), None);
    }

    #[test]
    fn ratfn_sum_matches_common_denominator() {
        // 1/(s+1) + 1/(s+2) = (2s+3)/((s+1)(s+2))
        let a = RatFn::new(UniPoly::one(), UniPoly::linear(int(1)));
        let b = RatFn::new(UniPoly::one(), UniPoly::linear(int(2)));
        let s = a.add(&b);
        assert_eq!(
            s,
            RatFn::new(
                up(&[3, 2]),
                UniPoly::linear(int(1)).mul(&UniPoly::linear(int(2)))
            )
        );
    }

    #[test]
    fn fp_arithmetic_basics() {
        let p = 7;
        // (x^2 + 1)(x + 3) mod 7
        let prod = fp_mul(&[1, 0, 1], &[3, 1], p);
        assert_eq!(prod, vec![3, 1, 3, 1]);
        assert_eq!(fp_rem(&prod, &[1, 0, 1], p), vec![]);
        // gcd((x-1)(x-2), (x-1)(x-3)) = x - 1 = x + 6
        let a = fp_mul(&[6, 1], &[5, 1], p);
        let b = fp_mul(&[6, 1], &[4, 1], p);
        assert_eq!(fp_gcd(&a, &b, p), vec![6, 1]);
        assert_eq!(fp_roots(&[6, 1], p), vec![1]);
    }

    #[test]
    fn fp_squarefree_detection() {
        let p = 5;
        let sq = fp_mul(&[1, 1], &[1, 1], p);
        assert!(!fp_is_squarefree(&sq, p));
        assert!(fp_is_squarefree(&[1, 1], p));
        // x^5 - x = x(x-1)...(x-4): squarefree even though naive derivative
        // tricks can stumble; here derivative = -1
        let mut xp = vec![0u64; 6];
        xp[5] = 1;
        xp[1] = p - 1;
        assert!(fp_is_squarefree(&xp, p));
    }

    #[test]
    fn unipoly_polynomial_round_trip() {
        let f = up(&[1, 0, -2, 5]);
        let p = f.to_polynomial();
        assert_eq!(UniPoly::from_polynomial(&p).unwrap(), f);
    }
}
