//! The Hecke algebra of `W_{m+} × W_{m-}` over Laurent polynomials in `q`.
//!
//! `T_{v_1}` and `T_{u_1}` satisfy `(T - q^{2t±+1})(T + 1) = 0`, the remaining
//! generators `(T - q)(T + 1) = 0`, and the two factors commute.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::weyl::SignedPerm;
use crate::error::{invalid, Result};
use crate::poly::{q_int, LaurentPoly};
use crate::quiver::Side;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HeckeParams {
    pub t_plus: i64,
    pub t_minus: i64,
    pub m_plus: usize,
    pub m_minus: usize,
}

impl HeckeParams {
    pub fn new(t_plus: i64, t_minus: i64, m_plus: usize, m_minus: usize) -> Self {
        HeckeParams { t_plus, t_minus, m_plus, m_minus }
    }

    pub fn m(&self) -> usize {
        self.m_plus + self.m_minus
    }

    pub fn rank_of(&self, side: Side) -> usize {
        match side {
            Side::Unprimed => self.m_plus,
            Side::Primed => self.m_minus,
        }
    }

    pub fn t_of(&self, side: Side) -> i64 {
        match side {
            Side::Unprimed => self.t_plus,
            Side::Primed => self.t_minus,
        }
    }

    /// `2^{m+} m+! · 2^{m-} m-!`
    pub fn dimension(&self) -> usize {
        weyl_order(self.m_plus) * weyl_order(self.m_minus)
    }

    /// Exponent `k` of the quadratic parameter `q^k` of a generator.
    pub fn parameter_exponent(&self, g: Generator) -> i64 {
        if g.index == 1 {
            2 * self.t_of(g.side) + 1
        } else {
            1
        }
    }
}

pub fn weyl_order(m: usize) -> usize {
    (1..=m).product::<usize>() << m
}

/// `T_{v_i}` (unprimed) or `T_{u_i}` (primed), `1 <= i <= m±`. Index 1 is the
/// sign change, index `i >= 2` swaps `i - 1` and `i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Generator {
    pub side: Side,
    pub index: usize,
}

impl Generator {
    pub fn v(i: usize) -> Self {
        Generator { side: Side::Unprimed, index: i }
    }

    pub fn u(i: usize) -> Self {
        Generator { side: Side::Primed, index: i }
    }

    pub fn all(params: &HeckeParams) -> Vec<Generator> {
        let mut g: Vec<_> = (1..=params.m_plus).map(Generator::v).collect();
        g.extend((1..=params.m_minus).map(Generator::u));
        g
    }

    /// The Coxeter generator `s_{index-1}` of the relevant factor.
    pub fn reflection(&self, m: usize) -> SignedPerm {
        SignedPerm::generator(m, self.index - 1)
    }
}

/// Basis label `w = (w+, w-)`.
pub type WeylBWord = (SignedPerm, SignedPerm);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeckeElement {
    pub params: HeckeParams,
    terms: BTreeMap<WeylBWord, LaurentPoly>,
}

impl HeckeElement {
    pub fn zero(params: HeckeParams) -> Self {
        HeckeElement { params, terms: BTreeMap::new() }
    }

    pub fn one(params: HeckeParams) -> Self {
        HeckeElement::basis(params, identity_word(&params), LaurentPoly::one())
    }

    pub fn basis(params: HeckeParams, w: WeylBWord, c: LaurentPoly) -> Self {
        let mut x = HeckeElement::zero(params);
        x.add_term(w, c);
        x
    }

    /// `T_g`
    pub fn generator(params: HeckeParams, g: Generator) -> Self {
        let mut w = identity_word(&params);
        match g.side {
            Side::Unprimed => w.0 = g.reflection(params.m_plus),
            Side::Primed => w.1 = g.reflection(params.m_minus),
        }
        HeckeElement::basis(params, w, LaurentPoly::one())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&WeylBWord, &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, w: &WeylBWord) -> LaurentPoly {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, w: WeylBWord, c: LaurentPoly) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(w.clone()).or_default();
        *slot = &*slot + &c;
        if slot.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn scale(&self, c: &LaurentPoly) -> HeckeElement {
        let mut out = HeckeElement::zero(self.params);
        for (w, a) in &self.terms {
            out.add_term(w.clone(), a * c);
        }
        out
    }

    pub fn add(&self, rhs: &HeckeElement) -> HeckeElement {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &HeckeElement) -> HeckeElement {
        self.add(&rhs.scale(&LaurentPoly::constant(-q_int(1))))
    }

    /// `T_g · self`
    pub fn left_mul_generator(&self, g: Generator) -> HeckeElement {
        let p = self.params;
        let big_q = LaurentPoly::q(p.parameter_exponent(g));
        let q_minus_one = &big_q - &LaurentPoly::one();
        let mut out = HeckeElement::zero(p);
        for ((wp, wm), c) in &self.terms {
            let (w, m) = match g.side {
                Side::Unprimed => (wp, p.m_plus),
                Side::Primed => (wm, p.m_minus),
            };
            let sw = g.reflection(m).compose(w);
            let word = |x: SignedPerm| match g.side {
                Side::Unprimed => (x, wm.clone()),
                Side::Primed => (wp.clone(), x),
            };
            if sw.length() > w.length() {
                out.add_term(word(sw), c.clone());
            } else {
                out.add_term(word(w.clone()), c * &q_minus_one);
                out.add_term(word(sw), c * &big_q);
            }
        }
        out
    }

    /// `T_w · self` for `w = s_{i_1} ⋯ s_{i_k}` reduced.
    fn left_mul_basis(&self, w: &WeylBWord) -> HeckeElement {
        let mut out = self.clone();
        for i in w.1.reduced_word().iter().rev() {
            out = out.left_mul_generator(Generator::u(i + 1));
        }
        for i in w.0.reduced_word().iter().rev() {
            out = out.left_mul_generator(Generator::v(i + 1));
        }
        out
    }

    /// Product in the algebra.
    ///
    /// # Errors
    /// Fails when the parameters differ.
    pub fn multiply(&self, rhs: &HeckeElement) -> Result<HeckeElement> {
        if self.params != rhs.params {
            return invalid("Hecke elements with different parameters");
        }
        let mut out = HeckeElement::zero(self.params);
        for (w, c) in &self.terms {
            out = out.add(&rhs.left_mul_basis(w).scale(c));
        }
        Ok(out)
    }
}

impl fmt::Display for HeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> =
            self.terms.iter().map(|((a, b), c)| format!("({c})T[{a}|{b}]")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

pub fn identity_word(params: &HeckeParams) -> WeylBWord {
    (SignedPerm::identity(params.m_plus), SignedPerm::identity(params.m_minus))
}

/// Images of `X_1, …, X_{m+}` then `X'_1, …, X'_{m-}`:
/// `X_1 = (-1)^t q^{-t-1} T_{v_1}` and `X_{k+1} = q^{-1} T_{v_{k+1}} X_k T_{v_{k+1}}`.
pub fn x_generators(params: HeckeParams) -> Vec<HeckeElement> {
    let mut out = Vec::new();
    for (side, m) in [(Side::Unprimed, params.m_plus), (Side::Primed, params.m_minus)] {
        let t = params.t_of(side);
        let gen = |i| Generator { side, index: i };
        if m == 0 {
            continue;
        }
        let sign = if t.rem_euclid(2) == 0 { q_int(1) } else { -q_int(1) };
        let mut x = HeckeElement::generator(params, gen(1))
            .scale(&LaurentPoly::monomial(sign, -t - 1));
        out.push(x.clone());
        for k in 1..m {
            let t_k = HeckeElement::generator(params, gen(k + 1));
            x = t_k.multiply(&x).unwrap().multiply(&t_k).unwrap().scale(&LaurentPoly::q(-1));
            out.push(x.clone());
        }
    }
    out
}

/// `(-q)^k` as a Laurent polynomial.
pub fn minus_q_power(k: i64) -> LaurentPoly {
    let c = if k.rem_euclid(2) == 0 { q_int(1) } else { -q_int(1) };
    LaurentPoly::monomial(c, k)
}

/// The predicted quadratic relation of `X_1`: `X² - (a + b)X + ab` with
/// `{a, b} = {(-q)^t, (-q)^{-1-t}}`.
pub fn x1_relation_holds(params: HeckeParams, side: Side) -> bool {
    let t = params.t_of(side);
    let xs = x_generators(params);
    let idx = if side == Side::Unprimed { 0 } else { params.m_plus };
    let Some(x) = xs.get(idx) else {
        return true;
    };
    let a = minus_q_power(t);
    let b = minus_q_power(-1 - t);
    let sq = x.multiply(x).unwrap();
    let rhs = x.scale(&(&a + &b)).sub(&HeckeElement::one(params).scale(&(&a * &b)));
    sq == rhs
}
