//! Charged Fock spaces.
//!
//! The Fock space of a quiver has a basis of charged multipartitions, one side
//! tag per component. `f_i` adds a node of residue `i`, `e_i` removes one, and the
//! weight of a basis vector is
//!
//! `wt = Σ_p (Λ_{ξ_p} - Δ(s_p) δ) - Σ_nodes α_res`.
//!
//! Weights live in the lattice spanned by the `Λ_i` of the quiver and one `δ` per
//! side, with rational δ-coefficients.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::Zero;
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::error::{invalid, Error, Result};
use crate::partitions::{ChargedMultiPartition, Node, Partition};
use crate::poly::{q_int, Q};
use crate::quiver::{QuiverKind, QuiverSpec, QuiverVertex, Side};

/// A basis vector `|λ̄, s̄⟩`, each component tagged with the side of the quiver it
/// lives on.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct FockVector {
    pub mp: ChargedMultiPartition,
    pub sides: Vec<Side>,
}

impl FockVector {
    /// All components on the unprimed side.
    pub fn new(mp: ChargedMultiPartition) -> Self {
        let sides = vec![Side::Unprimed; mp.level()];
        FockVector { mp, sides }
    }

    /// # Errors
    /// Fails when the number of side tags differs from the level.
    pub fn with_sides(mp: ChargedMultiPartition, sides: Vec<Side>) -> Result<Self> {
        if sides.len() != mp.level() {
            return invalid("one side tag per component is required");
        }
        Ok(FockVector { mp, sides })
    }

    pub fn empty(charges: &[i64]) -> Self {
        let comps = vec![Partition::empty(); charges.len()];
        FockVector::new(ChargedMultiPartition { components: comps, charges: charges.to_vec() })
    }

    fn shape(&self) -> (Vec<i64>, Vec<Side>) {
        (self.mp.charges.clone(), self.sides.clone())
    }

    /// Residue of a node.
    pub fn residue(&self, spec: &QuiverSpec, node: Node) -> QuiverVertex {
        let p = node.comp - 1;
        let s = self.mp.charges[p];
        spec.residue(self.sides[p], s, s + node.col as i64 - node.row as i64)
    }

    /// The vertex `ξ_p` of component `p` (0-based).
    pub fn charge_vertex(&self, spec: &QuiverSpec, p: usize) -> QuiverVertex {
        let s = self.mp.charges[p];
        spec.residue(self.sides[p], s, s)
    }

    /// Addable and removable nodes of residue `i`.
    pub fn i_nodes(&self, spec: &QuiverSpec, i: QuiverVertex) -> (Vec<Node>, Vec<Node>) {
        let mut add = Vec::new();
        let mut rem = Vec::new();
        for (p, lam) in self.mp.components.iter().enumerate() {
            for (row, col) in lam.addable() {
                let n = Node { row, col, comp: p + 1 };
                if self.residue(spec, n) == i {
                    add.push(n);
                }
            }
            for (row, col) in lam.removable() {
                let n = Node { row, col, comp: p + 1 };
                if self.residue(spec, n) == i {
                    rem.push(n);
                }
            }
        }
        (add, rem)
    }

    fn with_node(&self, n: Node, add: bool) -> FockVector {
        let mut out = self.clone();
        let lam = &mut out.mp.components[n.comp - 1];
        *lam = if add { lam.with_box_added(n.row) } else { lam.with_box_removed(n.row) };
        out
    }
}

/// `N_i = #addable - #removable` i-nodes.
pub fn coroot_eigenvalue(spec: &QuiverSpec, v: &FockVector, i: QuiverVertex) -> i64 {
    let (a, r) = v.i_nodes(spec, i);
    a.len() as i64 - r.len() as i64
}

/// `M_i`, the number of nodes of residue `i` in the diagram.
pub fn m_i(spec: &QuiverSpec, v: &FockVector, i: QuiverVertex) -> usize {
    v.mp.nodes().into_iter().filter(|n| v.residue(spec, *n) == i).count()
}

/// An integer combination of basis vectors with common charges and sides.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FockElement {
    pub spec: QuiverSpec,
    terms: BTreeMap<FockVector, i64>,
}

impl FockElement {
    pub fn zero(spec: QuiverSpec) -> Self {
        FockElement { spec, terms: BTreeMap::new() }
    }

    pub fn basis(spec: QuiverSpec, v: FockVector) -> Self {
        let mut x = FockElement::zero(spec);
        x.terms.insert(v, 1);
        x
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&FockVector, i64)> {
        self.terms.iter().map(|(v, c)| (v, *c))
    }

    pub fn coefficient(&self, v: &FockVector) -> i64 {
        self.terms.get(v).copied().unwrap_or(0)
    }

    pub fn add_term(&mut self, v: FockVector, c: i64) {
        if c == 0 {
            return;
        }
        let slot = self.terms.entry(v.clone()).or_insert(0);
        *slot += c;
        if *slot == 0 {
            self.terms.remove(&v);
        }
    }

    pub fn scale(&self, c: i64) -> FockElement {
        let mut out = FockElement::zero(self.spec);
        for (v, a) in &self.terms {
            out.add_term(v.clone(), a * c);
        }
        out
    }

    fn check_shape(&self) -> Result<()> {
        let mut shapes = self.terms.keys().map(FockVector::shape);
        if let Some(first) = shapes.next() {
            if shapes.any(|s| s != first) {
                return invalid("Fock element mixes charges or sides");
            }
        }
        Ok(())
    }
}

impl Add for &FockElement {
    type Output = FockElement;
    fn add(self, rhs: &FockElement) -> FockElement {
        let mut out = self.clone();
        for (v, c) in &rhs.terms {
            out.add_term(v.clone(), *c);
        }
        out
    }
}

impl Sub for &FockElement {
    type Output = FockElement;
    fn sub(self, rhs: &FockElement) -> FockElement {
        self + &rhs.scale(-1)
    }
}

fn apply(x: &FockElement, i: QuiverVertex, raise: bool) -> Result<FockElement> {
    x.check_shape()?;
    let mut out = FockElement::zero(x.spec);
    for (v, c) in &x.terms {
        let (add, rem) = v.i_nodes(&x.spec, i);
        let nodes = if raise { add } else { rem };
        for n in nodes {
            out.add_term(v.with_node(n, raise), *c);
        }
    }
    Ok(out)
}

/// `f_i`: sum over ways of adding one node of residue `i`.
///
/// # Errors
/// Fails when the basis vectors of `x` have different charges or sides.
pub fn apply_f(x: &FockElement, i: QuiverVertex) -> Result<FockElement> {
    apply(x, i, true)
}

/// `e_i`: sum over ways of removing one node of residue `i`.
///
/// # Errors
/// As for [`apply_f`].
pub fn apply_e(x: &FockElement, i: QuiverVertex) -> Result<FockElement> {
    apply(x, i, false)
}

/// An affine weight: coefficients of the `Λ_i` and of `δ`, `δ′`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Weight {
    pub fundamental: BTreeMap<QuiverVertex, i64>,
    pub delta: [Q; 2],
}

impl Weight {
    pub fn zero() -> Self {
        Weight::default()
    }

    pub fn lambda(i: QuiverVertex) -> Self {
        let mut w = Weight::zero();
        w.add_lambda(i, 1);
        w
    }

    pub fn delta(side: Side, c: Q) -> Self {
        let mut w = Weight::zero();
        w.delta[side.index()] = c;
        w
    }

    pub fn coefficient(&self, i: QuiverVertex) -> i64 {
        self.fundamental.get(&i).copied().unwrap_or(0)
    }

    pub fn add_lambda(&mut self, i: QuiverVertex, c: i64) {
        let slot = self.fundamental.entry(i).or_insert(0);
        *slot += c;
        if *slot == 0 {
            self.fundamental.remove(&i);
        }
    }

    pub fn scale(&self, c: i64) -> Weight {
        let mut w = Weight::zero();
        for (i, a) in &self.fundamental {
            w.add_lambda(*i, a * c);
        }
        w.delta = [&self.delta[0] * q_int(c), &self.delta[1] * q_int(c)];
        w
    }

    /// Level on each side: the sum of the `Λ`-coefficients.
    pub fn level(&self, side: Side) -> i64 {
        self.fundamental.iter().filter(|(i, _)| i.side == side).map(|(_, c)| c).sum()
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        let mut w = self.clone();
        for (i, c) in &rhs.fundamental {
            w.add_lambda(*i, *c);
        }
        w.delta[0] += &rhs.delta[0];
        w.delta[1] += &rhs.delta[1];
        w
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        self + &rhs.scale(-1)
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        self.scale(-1)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.fundamental.iter().map(|(i, c)| format!("{c}Λ[{i}]")).collect();
        for (side, name) in [(0, "δ"), (1, "δ'")] {
            if !self.delta[side].is_zero() {
                parts.push(format!("{}{name}", self.delta[side]));
            }
        }
        if parts.is_empty() {
            return write!(f, "0");
        }
        write!(f, "{}", parts.join(" + "))
    }
}

impl Serialize for Weight {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        struct Fund<'a>(&'a BTreeMap<QuiverVertex, i64>);
        impl Serialize for Fund<'_> {
            fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
                let mut m = ser.serialize_map(Some(self.0.len()))?;
                for (i, c) in self.0 {
                    m.serialize_entry(&i.to_string(), c)?;
                }
                m.end()
            }
        }
        let mut m = ser.serialize_map(Some(2))?;
        m.serialize_entry("fundamental", &Fund(&self.fundamental))?;
        m.serialize_entry("delta", &[self.delta[0].to_string(), self.delta[1].to_string()])?;
        m.end()
    }
}

/// `α_i = 2Λ_i - Λ_{qi} - Λ_{q⁻¹i}` plus its δ-part.
pub fn simple_root(spec: &QuiverSpec, i: QuiverVertex) -> Weight {
    let mut w = Weight::lambda(i).scale(2);
    w.add_lambda(spec.step(i, 1), -1);
    w.add_lambda(spec.step(i, -1), -1);
    w.delta[i.side.index()] = spec.alpha_delta(i);
    w
}

/// Weight of a basis vector; the δ-terms vanish for quivers of type A_∞.
pub fn weight_of(spec: &QuiverSpec, v: &FockVector) -> Weight {
    let mut w = Weight::zero();
    for p in 0..v.mp.level() {
        w.add_lambda(v.charge_vertex(spec, p), 1);
        w.delta[v.sides[p].index()] -= spec.row_delta(v.mp.charges[p]);
    }
    let mut counts: BTreeMap<QuiverVertex, i64> = BTreeMap::new();
    for n in v.mp.nodes() {
        *counts.entry(v.residue(spec, n)).or_insert(0) += 1;
    }
    for (i, m) in counts {
        w = &w - &simple_root(spec, i).scale(m);
    }
    w
}

/// The δ-shift `r_k` with `Λ_k = Λ_k^std - r_k δ`, nonzero only in the unitary
/// case where the affine root is split between exponents `0` and `d`.
fn lambda_shift(spec: &QuiverSpec, k: i64) -> Q {
    match spec.kind {
        QuiverKind::Unitary { d } => {
            let d = d as i64;
            Q::new(k.min(2 * d - k).into(), 4.into())
        }
        _ => Q::zero(),
    }
}

/// The invariant form: `(Λ_k|Λ_l) = min(k, l) - kl/e` inside one component, zero
/// across components, `(Λ|δ) = 1` on the same side and `(δ|δ) = 0`.
///
/// # Errors
/// `Unsupported` for quivers of type A_∞, which carry no δ, and for the linear
/// four-component quiver, whose lattice identifies the null roots of the two
/// components on a side and so carries no invariant form.
pub fn bilinear_form(spec: &QuiverSpec, a: &Weight, b: &Weight) -> Result<Q> {
    if matches!(spec.kind, QuiverKind::Linear { .. }) {
        return Err(Error::Unsupported("no invariant form on the linear lattice".into()));
    }
    let e = spec.period().ok_or_else(|| Error::Unsupported("no invariant form on A_∞".into()))? as i64;
    let mut acc = Q::zero();
    for (i, x) in &a.fundamental {
        for (j, y) in &b.fundamental {
            let xy = q_int(x * y);
            if (i.side, i.sign) == (j.side, j.sign) {
                let (k, l) = (i.exponent, j.exponent);
                let std = Q::new((k.min(l) * e - k * l).into(), e.into());
                acc += &xy * (std - lambda_shift(spec, k) - lambda_shift(spec, l));
            }
        }
        acc += q_int(*x) * &b.delta[i.side.index()];
    }
    for (j, y) in &b.fundamental {
        acc += q_int(*y) * &a.delta[j.side.index()];
    }
    Ok(acc)
}

/// `σ_i(w) = w - ⟨h_i, w⟩ α_i`, where `⟨h_i, w⟩` is the `Λ_i`-coefficient.
pub fn weyl_reflect(spec: &QuiverSpec, w: &Weight, i: QuiverVertex) -> Weight {
    let c = w.coefficient(i);
    if c == 0 {
        return w.clone();
    }
    w - &simple_root(spec, i).scale(c)
}

/// Groups the components of `v` by the quiver component (side, sign) of their
/// charge vertex. Since `f_i` only touches components whose charge lies on the
/// quiver component of `i`, operators act on one factor at a time.
pub fn tensor_split(spec: &QuiverSpec, v: &FockVector) -> BTreeMap<(Side, i8), FockVector> {
    let mut groups: BTreeMap<(Side, i8), (Vec<Partition>, Vec<i64>, Vec<Side>)> = BTreeMap::new();
    for p in 0..v.mp.level() {
        let xi = v.charge_vertex(spec, p);
        let g = groups.entry((xi.side, xi.sign)).or_default();
        g.0.push(v.mp.components[p].clone());
        g.1.push(v.mp.charges[p]);
        g.2.push(v.sides[p]);
    }
    groups
        .into_iter()
        .map(|(k, (c, s, sides))| (k, FockVector { mp: ChargedMultiPartition { components: c, charges: s }, sides }))
        .collect()
}

/// All basis vectors with the given charges and sides and size at most `n`.
pub fn basis_up_to(charges: &[i64], sides: &[Side], n: usize) -> Vec<FockVector> {
    let mut out = Vec::new();
    for k in 0..=n {
        for comps in crate::partitions::multipartitions_of(k, charges.len()) {
            out.push(FockVector {
                mp: ChargedMultiPartition { components: comps, charges: charges.to_vec() },
                sides: sides.to_vec(),
            });
        }
    }
    out
}

/// Residues that occur as addable or removable nodes anywhere in `basis`.
pub fn active_residues(spec: &QuiverSpec, basis: &[FockVector]) -> BTreeSet<QuiverVertex> {
    let mut out = BTreeSet::new();
    for v in basis {
        for (p, lam) in v.mp.components.iter().enumerate() {
            for (row, col) in lam.addable().into_iter().chain(lam.removable()) {
                out.insert(v.residue(spec, Node { row, col, comp: p + 1 }));
            }
        }
    }
    out
}
