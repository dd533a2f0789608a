//! Exact polynomials: univariate over ℚ, Laurent in one variable, and multivariate
//! over ℤ.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Q = BigRational;

pub fn q_int(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// `base^k` for any integer `k`.
pub fn q_pow(base: &Q, k: i64) -> Q {
    if k >= 0 {
        num_traits::pow(base.clone(), k as usize)
    } else {
        num_traits::pow(base.recip(), (-k) as usize)
    }
}

/// Univariate polynomial over ℚ, coefficients from degree 0 upward.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Poly(Vec<Q>);

impl Poly {
    pub fn new(mut coeffs: Vec<Q>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly(coeffs)
    }

    pub fn zero() -> Self {
        Poly(Vec::new())
    }

    pub fn one() -> Self {
        Poly(vec![Q::one()])
    }

    pub fn constant(c: Q) -> Self {
        Poly::new(vec![c])
    }

    /// `x - a`
    pub fn linear(a: &Q) -> Self {
        Poly(vec![-a.clone(), Q::one()])
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn lead(&self) -> Q {
        self.0.last().cloned().unwrap_or_else(Q::zero)
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let l = self.lead();
        Poly(self.0.iter().map(|c| c / &l).collect())
    }

    pub fn scale(&self, c: &Q) -> Poly {
        Poly::new(self.0.iter().map(|a| a * c).collect())
    }

    pub fn eval(&self, x: &Q) -> Q {
        self.0.iter().rev().fold(Q::zero(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(self.0.iter().enumerate().skip(1).map(|(k, c)| c * q_int(k as i64)).collect())
    }

    /// Quotient and remainder.
    ///
    /// # Panics
    /// When `rhs` is zero.
    pub fn div_rem(&self, rhs: &Poly) -> (Poly, Poly) {
        let db = rhs.degree().expect("division by the zero polynomial");
        let mut r = self.0.clone();
        let lb = rhs.lead();
        if r.len() <= db {
            return (Poly::zero(), self.clone());
        }
        let mut quo = vec![Q::zero(); r.len() - db];
        for k in (0..quo.len()).rev() {
            let c = &r[k + db] / &lb;
            if !c.is_zero() {
                for (j, b) in rhs.0.iter().enumerate() {
                    r[k + j] -= &c * b;
                }
            }
            quo[k] = c;
        }
        r.truncate(db);
        (Poly::new(quo), Poly::new(r))
    }

    /// Monic gcd.
    pub fn gcd(&self, rhs: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), rhs.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `(g, u, v)` with `u·self + v·rhs = g` and `g` the monic gcd.
    pub fn ext_gcd(&self, rhs: &Poly) -> (Poly, Poly, Poly) {
        let (mut r0, mut r1) = (self.clone(), rhs.clone());
        let (mut s0, mut s1) = (Poly::one(), Poly::zero());
        let (mut t0, mut t1) = (Poly::zero(), Poly::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s2 = &s0 - &(&q * &s1);
            let t2 = &t0 - &(&q * &t1);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let l = r0.lead().recip();
        (r0.scale(&l), s0.scale(&l), t0.scale(&l))
    }

    pub fn pow(&self, k: usize) -> Poly {
        let mut out = Poly::one();
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Distinct rational roots with multiplicities, in increasing order.
    ///
    /// # Errors
    /// `Unsupported` when a leading or constant coefficient is too large to factor
    /// by trial division.
    pub fn rational_roots(&self) -> Result<Vec<(Q, usize)>> {
        let mut p = self.clone();
        let mut out = Vec::new();
        if p.is_zero() {
            return Ok(out);
        }
        let mut zero_mult = 0;
        while p.0[0].is_zero() {
            p.0.remove(0);
            zero_mult += 1;
        }
        if zero_mult > 0 {
            out.push((Q::zero(), zero_mult));
        }
        let ints = p.integer_coeffs();
        let a0 = ints[0].abs();
        let an = ints.last().unwrap().abs();
        let nums = divisors(&a0)?;
        let dens = divisors(&an)?;
        let mut cands = Vec::new();
        for n in &nums {
            for d in &dens {
                let r = Q::new(n.clone(), d.clone());
                cands.push(r.clone());
                cands.push(-r);
            }
        }
        cands.sort();
        cands.dedup();
        for r in cands {
            let lin = Poly::linear(&r);
            let mut m = 0;
            loop {
                let (quo, rem) = p.div_rem(&lin);
                if !rem.is_zero() {
                    break;
                }
                p = quo;
                m += 1;
            }
            if m > 0 {
                out.push((r, m));
            }
            if p.degree() == Some(0) {
                break;
            }
        }
        out.sort_by(|a, b| a.0.cmp(&b.0));
        Ok(out)
    }

    /// Primitive integer multiple of `self`.
    pub fn integer_coeffs(&self) -> Vec<BigInt> {
        let l = self.0.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let v: Vec<BigInt> = self.0.iter().map(|c| (c * Q::from_integer(l.clone())).to_integer()).collect();
        let g = v.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if g.is_zero() {
            return v;
        }
        v.into_iter().map(|c| c / &g).collect()
    }
}

fn divisors(n: &BigInt) -> Result<Vec<BigInt>> {
    let mut m = n.to_u128().ok_or_else(|| Error::Unsupported(format!("coefficient {n} too large")))?;
    if m == 0 {
        return Ok(vec![BigInt::one()]);
    }
    let mut factors: Vec<(u128, u32)> = Vec::new();
    let mut p = 2u128;
    while p * p <= m {
        if p > 50_000_000 {
            return Err(Error::Unsupported(format!("coefficient {n} too large to factor")));
        }
        let mut k = 0;
        while m % p == 0 {
            m /= p;
            k += 1;
        }
        if k > 0 {
            factors.push((p, k));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if m > 1 {
        factors.push((m, 1));
    }
    let mut divs = vec![1u128];
    for (p, k) in factors {
        let mut next = Vec::with_capacity(divs.len() * (k as usize + 1));
        for d in &divs {
            let mut x = *d;
            for _ in 0..=k {
                next.push(x);
                x *= p;
            }
        }
        divs = next;
    }
    Ok(divs.into_iter().map(BigInt::from).collect())
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.0.len().max(rhs.0.len());
        let z = Q::zero();
        Poly::new((0..n).map(|k| self.0.get(k).unwrap_or(&z) + rhs.0.get(k).unwrap_or(&z)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.0.len().max(rhs.0.len());
        let z = Q::zero();
        Poly::new((0..n).map(|k| self.0.get(k).unwrap_or(&z) - rhs.0.get(k).unwrap_or(&z)).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Q::zero(); self.0.len() + rhs.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in rhs.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }
}

/// Laurent polynomial in one indeterminate `q` with rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct LaurentPoly(BTreeMap<i64, Q>);

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly(BTreeMap::new())
    }

    pub fn constant(c: Q) -> Self {
        LaurentPoly::monomial(c, 0)
    }

    pub fn one() -> Self {
        LaurentPoly::constant(Q::one())
    }

    pub fn monomial(c: Q, k: i64) -> Self {
        let mut m = BTreeMap::new();
        if !c.is_zero() {
            m.insert(k, c);
        }
        LaurentPoly(m)
    }

    /// `q^k`
    pub fn q(k: i64) -> Self {
        LaurentPoly::monomial(Q::one(), k)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Q)> {
        self.0.iter().map(|(k, c)| (*k, c))
    }

    pub fn eval(&self, q0: &Q) -> Q {
        self.0.iter().map(|(k, c)| c * q_pow(q0, *k)).fold(Q::zero(), |a, b| a + b)
    }

    fn add_term(&mut self, k: i64, c: Q) {
        let e = self.0.entry(k).or_insert_with(Q::zero);
        *e += c;
        if e.is_zero() {
            self.0.remove(&k);
        }
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (k, c) in &rhs.0 {
            out.add_term(*k, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly(self.0.iter().map(|(k, c)| (*k, -c)).collect())
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (i, a) in &self.0 {
            for (j, b) in &rhs.0 {
                out.add_term(i + j, a * b);
            }
        }
        out
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|(k, c)| match k {
                0 => format!("{c}"),
                1 => format!("{c}q"),
                _ => format!("{c}q^{k}"),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Polynomial over ℤ in a fixed number of commuting indeterminates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl MPoly {
    pub fn zero(nvars: usize) -> Self {
        MPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: impl Into<BigInt>) -> Self {
        let mut p = MPoly::zero(nvars);
        p.add_term(vec![0; nvars], c.into());
        p
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut p = MPoly::zero(nvars);
        p.add_term(e, BigInt::one());
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

    fn add_term(&mut self, e: Vec<u32>, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e.clone()).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn scale(&self, c: &BigInt) -> MPoly {
        let mut out = MPoly::zero(self.nvars);
        for (e, a) in &self.terms {
            out.add_term(e.clone(), a * c);
        }
        out
    }

    pub fn pow(&self, k: u32) -> MPoly {
        let mut out = MPoly::constant(self.nvars, 1);
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    pub fn to_string_with(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mono: Vec<String> = e
                    .iter()
                    .enumerate()
                    .filter(|(_, k)| **k > 0)
                    .map(|(i, k)| if *k == 1 { names[i].clone() } else { format!("{}^{k}", names[i]) })
                    .collect();
                if mono.is_empty() {
                    c.to_string()
                } else {
                    format!("{c}*{}", mono.join("*"))
                }
            })
            .collect();
        parts.join(" + ")
    }
}

impl Add for &MPoly {
    type Output = MPoly;
    fn add(self, rhs: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c);
        }
        out
    }
}

impl Mul for &MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        let mut out = MPoly::zero(self.nvars);
        for (e1, a) in &self.terms {
            for (e2, b) in &rhs.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(x, y)| x + y).collect();
                out.add_term(e, a * b);
            }
        }
        out
    }
}
