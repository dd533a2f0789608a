//! Quivers `I(q)` on exponent lattices and their Cartan data.
//!
//! A vertex is a triple (side, sign, exponent) standing for the field element
//! `±q^k` on the unprimed or primed copy. Arrows go `k -> k + 1` inside each
//! component.

use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};
use crate::poly::{q_int, Q};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Unprimed,
    Primed,
}

impl Side {
    pub fn index(self) -> usize {
        match self {
            Side::Unprimed => 0,
            Side::Primed => 1,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct QuiverVertex {
    pub side: Side,
    pub sign: i8,
    pub exponent: i64,
}

impl QuiverVertex {
    pub fn new(side: Side, sign: i8, exponent: i64) -> Self {
        QuiverVertex { side, sign, exponent }
    }
}

impl fmt::Display for QuiverVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = if self.sign < 0 { "-" } else { "" };
        let p = if self.side == Side::Primed { "'" } else { "" };
        write!(f, "{s}q^{}{p}", self.exponent)
    }
}

/// Shape of the quiver.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum QuiverKind {
    /// One component with residues in `q^ℤ`, cyclic of size `e` or of type A_∞.
    Cyclic { e: Option<u32> },
    /// `q` of infinite order: four components `±q^ℤ` on each side, type A_∞.
    Infinite,
    /// `q` of odd order `d`: four cyclic components of size `d`.
    Linear { d: u32 },
    /// `q` of order `2d` with `q^d = -1`: two cyclic components of size `2d`.
    Unitary { d: u32 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QuiverSpec {
    pub kind: QuiverKind,
}

/// A polynomial in two commuting variables `u, v` with integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QPolynomial(pub Vec<((u32, u32), i64)>);

impl QPolynomial {
    pub fn zero() -> Self {
        QPolynomial(Vec::new())
    }

    pub fn one() -> Self {
        QPolynomial(vec![((0, 0), 1)])
    }

    /// `v - u`
    pub fn v_minus_u() -> Self {
        QPolynomial(vec![((0, 1), 1), ((1, 0), -1)])
    }

    /// `u - v`
    pub fn u_minus_v() -> Self {
        QPolynomial(vec![((0, 1), -1), ((1, 0), 1)])
    }

    pub fn eval(&self, u: i64, v: i64) -> i64 {
        self.0.iter().map(|((i, j), c)| c * u.pow(*i) * v.pow(*j)).sum()
    }

    /// The polynomial with `u` and `v` exchanged.
    pub fn swapped(&self) -> Self {
        let mut t: Vec<_> = self.0.iter().map(|((i, j), c)| ((*j, *i), *c)).collect();
        t.sort();
        QPolynomial(t)
    }

    fn normalized(mut self) -> Self {
        self.0.sort();
        let mut out: Vec<((u32, u32), i64)> = Vec::new();
        for (e, c) in self.0 {
            match out.last_mut() {
                Some((e2, c2)) if *e2 == e => *c2 += c,
                _ => out.push((e, c)),
            }
        }
        out.retain(|(_, c)| *c != 0);
        QPolynomial(out)
    }
}

impl QuiverSpec {
    pub fn cyclic(e: Option<u32>) -> Self {
        QuiverSpec { kind: QuiverKind::Cyclic { e } }
    }

    /// Size of every cyclic component, `None` for type A_∞.
    pub fn period(&self) -> Option<u32> {
        match self.kind {
            QuiverKind::Cyclic { e } => e,
            QuiverKind::Infinite => None,
            QuiverKind::Linear { d } => Some(d),
            QuiverKind::Unitary { d } => Some(2 * d),
        }
    }

    /// Whether residues are `(-q)`-powers, so that a row of charge `s` sits on the
    /// component of sign `(-1)^s`.
    pub fn signed(&self) -> bool {
        !matches!(self.kind, QuiverKind::Cyclic { .. })
    }

    /// The (side, sign) pairs labelling the components.
    pub fn components(&self) -> Vec<(Side, i8)> {
        let sides = [Side::Unprimed, Side::Primed];
        match self.kind {
            QuiverKind::Cyclic { .. } => vec![(Side::Unprimed, 1)],
            QuiverKind::Infinite | QuiverKind::Linear { .. } => {
                sides.iter().flat_map(|s| [(*s, 1), (*s, -1)]).collect()
            }
            QuiverKind::Unitary { .. } => sides.iter().map(|s| (*s, 1)).collect(),
        }
    }

    /// Vertices of a finite quiver.
    pub fn vertices(&self) -> Option<Vec<QuiverVertex>> {
        let p = self.period()? as i64;
        Some(
            self.components()
                .into_iter()
                .flat_map(|(side, sign)| (0..p).map(move |k| QuiverVertex::new(side, sign, k)))
                .collect(),
        )
    }

    pub fn contains(&self, v: QuiverVertex) -> bool {
        self.components().contains(&(v.side, v.sign))
            && self.period().is_none_or(|p| (0..p as i64).contains(&v.exponent))
    }

    /// Normalizes the field element `sign·q^k` on `side` into a vertex.
    pub fn vertex_of(&self, side: Side, sign: i8, k: i64) -> QuiverVertex {
        match self.kind {
            QuiverKind::Cyclic { e } => {
                QuiverVertex::new(Side::Unprimed, 1, e.map_or(k, |e| k.rem_euclid(e as i64)))
            }
            QuiverKind::Infinite => QuiverVertex::new(side, sign, k),
            QuiverKind::Linear { d } => QuiverVertex::new(side, sign, k.rem_euclid(d as i64)),
            QuiverKind::Unitary { d } => {
                let shift = if sign < 0 { d as i64 } else { 0 };
                QuiverVertex::new(side, 1, (k + shift).rem_euclid(2 * d as i64))
            }
        }
    }

    /// Residue of a node of shifted content `content` in a row of charge `s`:
    /// `q^content`, times `(-1)^s` when the quiver is signed.
    pub fn residue(&self, side: Side, s: i64, content: i64) -> QuiverVertex {
        let sign = if self.signed() && s.rem_euclid(2) == 1 { -1 } else { 1 };
        self.vertex_of(side, sign, content)
    }

    /// The vertex `v·q^k`.
    pub fn step(&self, v: QuiverVertex, k: i64) -> QuiverVertex {
        self.vertex_of(v.side, v.sign, v.exponent + k)
    }

    /// Number of arrows `s -> t`.
    pub fn arrows(&self, s: QuiverVertex, t: QuiverVertex) -> usize {
        if (s.side, s.sign) != (t.side, t.sign) {
            return 0;
        }
        match self.period() {
            None => usize::from(t.exponent == s.exponent + 1),
            Some(p) => usize::from((s.exponent + 1).rem_euclid(p as i64) == t.exponent),
        }
    }

    /// `a_st = 2δ_st - #(s -> t) - #(t -> s)`.
    pub fn cartan_entry(&self, s: QuiverVertex, t: QuiverVertex) -> i64 {
        let diag = if s == t { 2 } else { 0 };
        diag - (self.arrows(s, t) + self.arrows(t, s)) as i64
    }

    /// `Q_st(u, v)`: zero on the diagonal, `v - u` along an arrow `s -> t`,
    /// `u - v` against it, `(v - u)(u - v)` for a double arrow, and 1 otherwise.
    pub fn q_polynomial(&self, s: QuiverVertex, t: QuiverVertex) -> QPolynomial {
        if s == t {
            return QPolynomial::zero();
        }
        match (self.arrows(s, t), self.arrows(t, s)) {
            (0, 0) => QPolynomial::one(),
            (1, 0) => QPolynomial::v_minus_u(),
            (0, 1) => QPolynomial::u_minus_v(),
            _ => QPolynomial(vec![((2, 0), -1), ((1, 1), 2), ((0, 2), -1)]).normalized(),
        }
    }

    /// δ-coefficient of a single row of charge `s`, the level-one `Δ(s|e)`.
    pub fn row_delta(&self, s: i64) -> Q {
        match self.kind {
            QuiverKind::Cyclic { e: Some(e) } => delta_charge(&[s], e),
            QuiverKind::Linear { d } => delta_charge(&[s], d),
            QuiverKind::Unitary { d } => delta_charge(&[s], d) / q_int(2),
            _ => Q::zero(),
        }
    }

    /// δ-coefficient of the simple root `α_v` (on the side of `v`).
    pub fn alpha_delta(&self, v: QuiverVertex) -> Q {
        match self.kind {
            QuiverKind::Cyclic { e: Some(_) } | QuiverKind::Linear { .. } if v.exponent == 0 => q_int(1),
            QuiverKind::Unitary { d } if v.exponent == 0 || v.exponent == d as i64 => Q::new(1.into(), 2.into()),
            _ => Q::zero(),
        }
    }
}

/// `Δ(s̄|e) = ½Σ|Λ_{q^{s_b}}|² + ½Σ(s_b²/e - s_b)` with `|Λ_{q^k}|² = k - k²/e`.
pub fn delta_charge(charges: &[i64], e: u32) -> Q {
    let e = e as i64;
    let mut acc = Q::zero();
    for &s in charges {
        let k = s.rem_euclid(e);
        acc += Q::new((k * e - k * k).into(), e.into());
        acc += Q::new((s * s - s * e).into(), e.into());
    }
    acc / q_int(2)
}

/// Quiver of `I(q)` for `q` of the given multiplicative order.
///
/// `minus_one_exponent` is the `e` with `q^e = -1`, when there is one.
///
/// # Errors
/// Fails on inconsistent parity data: `q^e = -1` forces the order to be `2e`, and
/// an element of finite even order `f` in a field has `q^{f/2} = -1`.
pub fn build_quiver(q_order: Option<u32>, minus_one_exponent: Option<u32>) -> Result<QuiverSpec> {
    let kind = match (q_order, minus_one_exponent) {
        (None, None) => QuiverKind::Infinite,
        (Some(0), _) => return invalid("the order of q must be positive"),
        (Some(f), None) if f % 2 == 1 => QuiverKind::Linear { d: f },
        (Some(f), Some(e)) if f == 2 * e => QuiverKind::Unitary { d: e },
        (f, e) => return invalid(format!("inconsistent order {f:?} with q^e = -1 for e = {e:?}")),
    };
    Ok(QuiverSpec { kind })
}

/// The specialization morphism from a characteristic-zero quiver to `target`.
///
/// # Errors
/// Fails when the source is not of type A_∞ or the vertex is not in `source`.
pub fn specialize(v: QuiverVertex, source: &QuiverSpec, target: &QuiverSpec) -> Result<QuiverVertex> {
    if source.period().is_some() || !source.contains(v) {
        return invalid(format!("{v} is not a vertex of an infinite quiver {source:?}"));
    }
    Ok(target.vertex_of(v.side, v.sign, v.exponent))
}
