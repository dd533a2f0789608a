//! Isolated blocks of `SO_{2n+1}(q)` in terms of symbols.
//!
//! A quadratic unipotent character is a pair of odd-defect symbols `(Θ+, Θ-)`.
//! At a linear prime its block is read off from the d-cores, at a unitary prime
//! from the d-cocores, together with the number of (co)hooks removed on each side.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::binomial;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{invalid, Error, Result};
use crate::fock::{weight_of, weyl_reflect, FockVector, Weight};
use crate::partitions::{partitions_of, syt_count, ChargedMultiPartition, Partition};
use crate::poly::MPoly;
use crate::quiver::{build_quiver, QuiverSpec, QuiverVertex, Side};
use crate::symbols::{
    add_d_cohooks, add_d_hooks, bipartition_from_symbol, d_cocore, d_cohooks, d_core, d_coweight, d_hooks,
    d_weight, enumerate_odd_defect_symbols, is_rouquier_core, symbol_from_bipartition, Row, Symbol,
};

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|p| p * p <= n).all(|p| !n.is_multiple_of(p))
}

fn multiplicative_order(a: u64, m: u64) -> u32 {
    let mut x = a % m;
    let mut k = 1;
    while x != 1 {
        x = x * (a % m) % m;
        k += 1;
    }
    k
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModularContext {
    pub q: u64,
    pub ell: u64,
    /// Order of `q` mod `ℓ`.
    pub f: u32,
    /// Order of `q²` mod `ℓ`.
    pub d: u32,
    pub linear: bool,
}

/// # Errors
/// Fails unless `q` is an odd prime power and `ℓ` an odd prime not dividing `q`.
pub fn make_context(q: u64, ell: u64) -> Result<ModularContext> {
    if q < 3 || q.is_multiple_of(2) {
        return invalid(format!("q = {q} must be an odd prime power"));
    }
    let p = (3..=q).find(|p| q.is_multiple_of(*p)).expect("q >= 3");
    let mut r = q;
    while r.is_multiple_of(p) {
        r /= p;
    }
    if r != 1 {
        return invalid(format!("q = {q} is not a prime power"));
    }
    if ell == 2 || !is_prime(ell) {
        return invalid(format!("ℓ = {ell} must be an odd prime"));
    }
    if q.is_multiple_of(ell) {
        return invalid(format!("ℓ = {ell} divides q = {q}"));
    }
    let f = multiplicative_order(q, ell);
    let d = multiplicative_order((q % ell) * (q % ell) % ell, ell);
    Ok(ModularContext { q, ell, f, d, linear: f % 2 == 1 })
}

impl ModularContext {
    /// The quiver `I(q)` reduced mod `ℓ`.
    pub fn quiver(&self) -> QuiverSpec {
        let minus_one = (!self.linear).then_some(self.d);
        build_quiver(Some(self.f), minus_one).expect("f = d or f = 2d by construction")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CharacterLabel {
    pub theta_plus: Symbol,
    pub theta_minus: Symbol,
}

impl CharacterLabel {
    /// # Errors
    /// Fails unless both defects are odd.
    pub fn new(theta_plus: Symbol, theta_minus: Symbol) -> Result<Self> {
        for s in [&theta_plus, &theta_minus] {
            if s.defect() % 2 == 0 {
                return invalid(format!("symbol {s} has even defect"));
            }
        }
        Ok(CharacterLabel { theta_plus, theta_minus })
    }

    /// `E_{Θ_{t+}(μ+), Θ_{t-}(μ-)}`.
    pub fn from_bipartitions(t_plus: i64, mu_plus: (&Partition, &Partition), t_minus: i64, mu_minus: (&Partition, &Partition)) -> Self {
        CharacterLabel {
            theta_plus: symbol_from_bipartition(t_plus, mu_plus),
            theta_minus: symbol_from_bipartition(t_minus, mu_minus),
        }
    }

    /// `(n+, n-)`, the ranks of the two symbols.
    pub fn ranks(&self) -> (usize, usize) {
        (self.theta_plus.rank(), self.theta_minus.rank())
    }

    pub fn rank(&self) -> usize {
        self.theta_plus.rank() + self.theta_minus.rank()
    }
}

impl fmt::Display for CharacterLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} x {}", self.theta_plus, self.theta_minus)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct BlockLabel {
    pub delta_plus: Symbol,
    pub delta_minus: Symbol,
    pub w_plus: usize,
    pub w_minus: usize,
}

impl BlockLabel {
    pub fn degree_vector(&self) -> (usize, usize) {
        (self.w_plus, self.w_minus)
    }
}

impl fmt::Display for BlockLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "b[{} x {}; ({}, {})]", self.delta_plus, self.delta_minus, self.w_plus, self.w_minus)
    }
}

fn core_and_weight(s: &Symbol, ctx: &ModularContext) -> (Symbol, usize) {
    if ctx.linear {
        (d_core(s, ctx.d), d_weight(s, ctx.d))
    } else {
        (d_cocore(s, ctx.d), d_coweight(s, ctx.d))
    }
}

pub fn block_of(chi: &CharacterLabel, ctx: &ModularContext) -> BlockLabel {
    let (delta_plus, w_plus) = core_and_weight(&chi.theta_plus, ctx);
    let (delta_minus, w_minus) = core_and_weight(&chi.theta_minus, ctx);
    BlockLabel { delta_plus, delta_minus, w_plus, w_minus }
}

/// One character of the block: `w±` (co)hooks added to `Δ±`, always the first
/// available one.
pub fn block_representative(b: &BlockLabel, ctx: &ModularContext) -> CharacterLabel {
    let grow = |core: &Symbol, w: usize| {
        let mut cs = core.charged().clone();
        for _ in 0..w {
            let next = if ctx.linear { add_d_hooks(&cs, ctx.d, Row::First) } else { add_d_cohooks(&cs, ctx.d, Row::Second) };
            cs = next.into_iter().next().expect("a (co)core always admits another (co)hook");
        }
        Symbol::from_charged(&cs)
    };
    CharacterLabel { theta_plus: grow(&b.delta_plus, b.w_plus), theta_minus: grow(&b.delta_minus, b.w_minus) }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DefectInfo {
    pub defect_zero: bool,
    pub cyclic: bool,
    pub abelian: bool,
    /// `a` with `ℓ^a` the ℓ-part of `q^d - 1` (linear) or `q^d + 1` (unitary).
    pub ell_exponent: u32,
    /// `ℓ^{a(w+ + w-)}` when the defect group is abelian.
    pub order: Option<String>,
}

pub fn defect_info(b: &BlockLabel, ctx: &ModularContext) -> DefectInfo {
    let qd = BigUint::from(ctx.q).pow(ctx.d);
    let mut x = if ctx.linear { qd - 1u32 } else { qd + 1u32 };
    let ell = BigUint::from(ctx.ell);
    let mut a = 0;
    while (&x % &ell).is_zero() {
        x /= &ell;
        a += 1;
    }
    let abelian = (b.w_plus as u64) < ctx.ell && (b.w_minus as u64) < ctx.ell;
    let w = (b.w_plus + b.w_minus) as u32;
    DefectInfo {
        defect_zero: w == 0,
        cyclic: matches!(b.degree_vector(), (1, 0) | (0, 1)),
        abelian,
        ell_exponent: a,
        order: abelian.then(|| ell.pow(a * w).to_string()),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HCSeriesLabel {
    pub t_plus: i64,
    pub t_minus: i64,
    pub m_plus: usize,
    pub m_minus: usize,
}

impl HCSeriesLabel {
    /// `r± = t±(t± + 1)`.
    pub fn cuspidal_ranks(&self) -> (usize, usize) {
        ((self.t_plus * (self.t_plus + 1)) as usize, (self.t_minus * (self.t_minus + 1)) as usize)
    }
}

pub fn hc_series(chi: &CharacterLabel) -> HCSeriesLabel {
    let t = |s: &Symbol| (s.defect() - 1) / 2;
    let (tp, tm) = (t(&chi.theta_plus), t(&chi.theta_minus));
    HCSeriesLabel {
        t_plus: tp,
        t_minus: tm,
        m_plus: chi.theta_plus.rank() - (tp * (tp + 1)) as usize,
        m_minus: chi.theta_minus.rank() - (tm * (tm + 1)) as usize,
    }
}

pub fn is_cuspidal(chi: &CharacterLabel) -> bool {
    let h = hc_series(chi);
    h.m_plus == 0 && h.m_minus == 0
}

/// A constituent of `F` or `F′`, with the exponent `k` of the residue `±q^k` of
/// the added box; the sign is `(-1)^s` for the charge `s` of its row.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BranchTerm {
    pub label: CharacterLabel,
    pub charge: i64,
    pub content: i64,
}

impl BranchTerm {
    /// The eigenvalue `(-1)^s q^content` at a concrete `q`.
    pub fn eigenvalue(&self, q: &crate::poly::Q) -> crate::poly::Q {
        let v = crate::poly::q_pow(q, self.content);
        if self.charge.rem_euclid(2) == 1 {
            -v
        } else {
            v
        }
    }
}

fn add_one_box(s: &Symbol) -> Vec<(Symbol, i64, i64)> {
    let (t, (mu1, mu2)) = bipartition_from_symbol(s).expect("odd defect");
    let mut out = Vec::new();
    for (which, charge) in [(0, t), (1, -1 - t)] {
        let mu = if which == 0 { &mu1 } else { &mu2 };
        for (row, col) in mu.addable() {
            let grown = mu.with_box_added(row);
            let sym = if which == 0 {
                symbol_from_bipartition(t, (&grown, &mu2))
            } else {
                symbol_from_bipartition(t, (&mu1, &grown))
            };
            out.push((sym, charge, charge + col as i64 - row as i64));
        }
    }
    out
}

/// Constituents of `F(E_χ)`: a 1-hook added to `Θ+`.
pub fn f_branch_terms(chi: &CharacterLabel) -> Vec<BranchTerm> {
    add_one_box(&chi.theta_plus)
        .into_iter()
        .map(|(s, charge, content)| BranchTerm {
            label: CharacterLabel { theta_plus: s, theta_minus: chi.theta_minus.clone() },
            charge,
            content,
        })
        .collect()
}

/// Constituents of `F′(E_χ)`: a 1-hook added to `Θ-`.
pub fn fprime_branch_terms(chi: &CharacterLabel) -> Vec<BranchTerm> {
    add_one_box(&chi.theta_minus)
        .into_iter()
        .map(|(s, charge, content)| BranchTerm {
            label: CharacterLabel { theta_plus: chi.theta_plus.clone(), theta_minus: s },
            charge,
            content,
        })
        .collect()
}

pub fn f_branch(chi: &CharacterLabel) -> Vec<CharacterLabel> {
    f_branch_terms(chi).into_iter().map(|b| b.label).collect()
}

pub fn fprime_branch(chi: &CharacterLabel) -> Vec<CharacterLabel> {
    fprime_branch_terms(chi).into_iter().map(|b| b.label).collect()
}

/// Tensoring with the spinor character swaps the two symbols.
pub fn spinor_twist(chi: &CharacterLabel) -> CharacterLabel {
    CharacterLabel { theta_plus: chi.theta_minus.clone(), theta_minus: chi.theta_plus.clone() }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum TreeCase {
    A1,
    A2,
    B1,
    B2,
}

/// A Brauer tree: the path `Λ_a - … - Λ_1 - exc - Ξ_1 - … - Ξ_b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BrauerTree {
    pub case: TreeCase,
    /// `Λ_1, …, Λ_a`
    pub lambda: Vec<CharacterLabel>,
    /// `Ξ_1, …, Ξ_b`
    pub xi: Vec<CharacterLabel>,
}

impl BrauerTree {
    /// Vertices in path order; `None` is the exceptional vertex.
    pub fn vertices(&self) -> Vec<Option<&CharacterLabel>> {
        self.lambda.iter().rev().map(Some).chain([None]).chain(self.xi.iter().map(Some)).collect()
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        (1..self.vertices().len()).map(|k| (k - 1, k)).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.lambda.len() + self.xi.len()
    }

    pub fn render(&self) -> String {
        let names: Vec<String> = self
            .vertices()
            .iter()
            .map(|v| v.map_or_else(|| "(exc)".to_string(), |c| format!("({c})")))
            .collect();
        names.join(" -- ")
    }
}

impl Serialize for BrauerTree {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Node<'a> {
            id: usize,
            exceptional: bool,
            label: Option<&'a CharacterLabel>,
        }
        #[derive(Serialize)]
        struct Edge {
            id: String,
            from: usize,
            to: usize,
        }
        let nodes: Vec<Node> = self
            .vertices()
            .into_iter()
            .enumerate()
            .map(|(id, label)| Node { id, exceptional: label.is_none(), label })
            .collect();
        let edges: Vec<Edge> =
            self.edges().into_iter().enumerate().map(|(k, (from, to))| Edge { id: format!("e{}", k + 1), from, to }).collect();
        let mut st = s.serialize_struct("BrauerTree", 3)?;
        st.serialize_field("case", &self.case)?;
        st.serialize_field("nodes", &nodes)?;
        st.serialize_field("edges", &edges)?;
        st.end()
    }
}

/// Brauer tree of the cyclic block containing `chi`.
///
/// # Errors
/// Fails when the block of `chi` is not cyclic.
pub fn brauer_tree(chi: &CharacterLabel, ctx: &ModularContext) -> Result<BrauerTree> {
    let b = block_of(chi, ctx);
    let (moving, core) = match b.degree_vector() {
        (1, 0) => (Row::First, &b.delta_plus),
        (0, 1) => (Row::Second, &b.delta_minus),
        w => return invalid(format!("block {b} with degree vector {w:?} is not cyclic")),
    };
    let cs = core.charged();
    let (lam, xi) = if ctx.linear {
        (add_d_hooks(cs, ctx.d, Row::First), add_d_hooks(cs, ctx.d, Row::Second))
    } else {
        (add_d_cohooks(cs, ctx.d, Row::Second), add_d_cohooks(cs, ctx.d, Row::First))
    };
    let label = |s: &crate::symbols::ChargedSymbol| {
        let s = Symbol::from_charged(s);
        match moving {
            Row::First => CharacterLabel { theta_plus: s, theta_minus: chi.theta_minus.clone() },
            Row::Second => CharacterLabel { theta_plus: chi.theta_plus.clone(), theta_minus: s },
        }
    };
    let case = match (moving, ctx.linear) {
        (Row::First, true) => TreeCase::A1,
        (Row::First, false) => TreeCase::A2,
        (Row::Second, true) => TreeCase::B1,
        (Row::Second, false) => TreeCase::B2,
    };
    Ok(BrauerTree { case, lambda: lam.iter().map(label).collect(), xi: xi.iter().map(label).collect() })
}

/// Expected `(a, b)`: `(d, d)` at a linear prime, `(d + D₀, d - D₀)` at a
/// unitary prime with `D₀` the defect of the cocore.
pub fn tree_shape(b: &BlockLabel, ctx: &ModularContext) -> (usize, usize) {
    let d = ctx.d as i64;
    if ctx.linear {
        return (ctx.d as usize, ctx.d as usize);
    }
    let core = if b.w_plus == 1 { &b.delta_plus } else { &b.delta_minus };
    let d0 = core.defect();
    ((d + d0) as usize, (d - d0).max(0) as usize)
}

/// # Errors
/// `Unsupported` at unitary primes, where RoCK blocks are not defined.
pub fn is_rock(b: &BlockLabel, ctx: &ModularContext) -> Result<bool> {
    if !ctx.linear {
        return Err(Error::Unsupported("RoCK blocks are defined at linear primes only".into()));
    }
    Ok(is_rouquier_core(&b.delta_plus, ctx.d, b.w_plus as u32)?
        && is_rouquier_core(&b.delta_minus, ctx.d, b.w_minus as u32)?)
}

/// The Fock vector `|μ+, (t+, -1-t+)⟩ ⊗ |μ-, (t-, -1-t-)⟩` of a character.
pub fn fock_vector_of(chi: &CharacterLabel) -> FockVector {
    let (tp, (a, b)) = bipartition_from_symbol(&chi.theta_plus).expect("odd defect");
    let (tm, (c, e)) = bipartition_from_symbol(&chi.theta_minus).expect("odd defect");
    let mp = ChargedMultiPartition::new(vec![a, b, c, e], vec![tp, -1 - tp, tm, -1 - tm]).expect("four components");
    FockVector::with_sides(mp, vec![Side::Unprimed, Side::Unprimed, Side::Primed, Side::Primed]).expect("four sides")
}

pub fn weight_of_character(chi: &CharacterLabel, ctx: &ModularContext) -> Weight {
    weight_of(&ctx.quiver(), &fock_vector_of(chi))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OrbitStatus {
    Same,
    Different,
    Inconclusive,
}

#[derive(Clone, Debug, Serialize)]
pub struct OrbitReport {
    pub status: OrbitStatus,
    /// Reflections taking the first weight to the second, applied left to right.
    pub path: Vec<QuiverVertex>,
    pub degree_vectors_equal: bool,
}

impl OrbitReport {
    /// Whether the orbit test agrees with degree-vector equality; `None` when
    /// inconclusive.
    pub fn agrees(&self) -> Option<bool> {
        match self.status {
            OrbitStatus::Same => Some(self.degree_vectors_equal),
            OrbitStatus::Different => Some(!self.degree_vectors_equal),
            OrbitStatus::Inconclusive => None,
        }
    }
}

/// Walks to the dominant chamber by reflecting in any `i` with `⟨h_i, w⟩ < 0`.
fn to_dominant(spec: &QuiverSpec, w: &Weight, max_steps: usize) -> Option<(Weight, Vec<QuiverVertex>)> {
    let mut cur = w.clone();
    let mut path = Vec::new();
    while let Some((&i, _)) = cur.fundamental.iter().find(|(_, c)| **c < 0) {
        if path.len() >= max_steps {
            return None;
        }
        cur = weyl_reflect(spec, &cur, i);
        path.push(i);
    }
    Some((cur, path))
}

/// Whether the weights of two blocks lie in one Weyl group orbit. Each orbit of
/// an integrable weight has exactly one dominant member, so both weights are
/// walked there; the reflection path is returned when they meet.
///
/// # Errors
/// `Unsupported` at unitary primes.
pub fn weyl_orbit_same(b1: &BlockLabel, b2: &BlockLabel, ctx: &ModularContext, max_steps: usize) -> Result<OrbitReport> {
    if !ctx.linear {
        return Err(Error::Unsupported("orbit comparison is implemented for linear primes".into()));
    }
    let spec = ctx.quiver();
    let w1 = weight_of_character(&block_representative(b1, ctx), ctx);
    let w2 = weight_of_character(&block_representative(b2, ctx), ctx);
    let degree_vectors_equal = b1.degree_vector() == b2.degree_vector();
    let (Some((d1, p1)), Some((d2, p2))) = (to_dominant(&spec, &w1, max_steps), to_dominant(&spec, &w2, max_steps)) else {
        return Ok(OrbitReport { status: OrbitStatus::Inconclusive, path: Vec::new(), degree_vectors_equal });
    };
    if d1 != d2 {
        return Ok(OrbitReport { status: OrbitStatus::Different, path: Vec::new(), degree_vectors_equal });
    }
    let path: Vec<QuiverVertex> = p1.into_iter().chain(p2.into_iter().rev()).collect();
    let end = path.iter().fold(w1, |w, i| weyl_reflect(&spec, &w, *i));
    debug_assert_eq!(end, w2);
    Ok(OrbitReport { status: OrbitStatus::Same, path, degree_vectors_equal })
}

pub fn enumerate_characters(n: usize) -> Vec<CharacterLabel> {
    let by_rank: Vec<Vec<Symbol>> = (0..=n).map(enumerate_odd_defect_symbols).collect();
    let mut out = Vec::new();
    for np in 0..=n {
        for a in &by_rank[np] {
            for b in &by_rank[n - np] {
                out.push(CharacterLabel { theta_plus: a.clone(), theta_minus: b.clone() });
            }
        }
    }
    out.sort();
    out
}

pub fn enumerate_blocks(n: usize, ctx: &ModularContext) -> Vec<BlockLabel> {
    let set: BTreeSet<BlockLabel> = enumerate_characters(n).par_iter().map(|c| block_of(c, ctx)).collect();
    set.into_iter().collect()
}

/// Characters of rank `n` grouped by block.
pub fn characters_by_block(n: usize, ctx: &ModularContext) -> BTreeMap<BlockLabel, Vec<CharacterLabel>> {
    let mut out: BTreeMap<BlockLabel, Vec<CharacterLabel>> = BTreeMap::new();
    let labelled: Vec<(BlockLabel, CharacterLabel)> =
        enumerate_characters(n).into_par_iter().map(|c| (block_of(&c, ctx), c)).collect();
    for (b, c) in labelled {
        out.entry(b).or_default().push(c);
    }
    out
}

/// Both sides of the dimension identity as polynomials in the formal degrees.
#[derive(Clone, Debug, Serialize)]
pub struct DimzReport {
    pub d: u32,
    pub w_plus: usize,
    pub w_minus: usize,
    pub classes: usize,
    pub characters: usize,
    pub lhs: String,
    pub rhs: String,
    pub equal: bool,
}

/// Formal degree symbols: `D`, then per side `h_0..h_{d-1}` (unipotent hook
/// characters of `GL_d(q)`) and `g_1..g_J` (one per pair of classes `t, t⁻¹`).
struct DimzVars {
    d: usize,
    classes: usize,
}

impl DimzVars {
    fn count(&self) -> usize {
        1 + 2 * (self.d + self.classes)
    }
    fn h(&self, side: usize, a: usize) -> usize {
        1 + side * (self.d + self.classes) + a
    }
    fn g(&self, side: usize, i: usize) -> usize {
        1 + side * (self.d + self.classes) + self.d + i
    }
    fn names(&self) -> Vec<String> {
        let mut out = vec!["D".to_string()];
        for prime in ["", "'"] {
            out.extend((0..self.d).map(|a| format!("h{a}{prime}")));
            out.extend((1..=self.classes).map(|i| format!("g{i}{prime}")));
        }
        out
    }
}

fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    (0..=total)
        .flat_map(|first| {
            compositions(total - first, parts - 1).into_iter().map(move |mut rest| {
                rest.insert(0, first);
                rest
            })
        })
        .collect()
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |a, k| a * k)
}

/// Multiplicities `m` (without the shared `D`) of the characters on one side:
/// data `(σ^α, τ^α)_{α<d}` and `(ν^i)_{i≤J}` with total size `w`.
fn side_multiplicities(vars: &DimzVars, side: usize, w: usize) -> Vec<MPoly> {
    let (d, classes) = (vars.d, vars.classes);
    let n = vars.count();
    let mut out = Vec::new();
    for sizes in compositions(w, 2 * d + classes) {
        let l: Vec<usize> = (0..d).map(|a| sizes[2 * a] + sizes[2 * a + 1]).collect();
        let r = &sizes[2 * d..];
        let mut coeff = factorial(w);
        for &x in l.iter().chain(r) {
            coeff /= factorial(x);
        }
        for a in 0..d {
            coeff *= binomial(BigInt::from(l[a]), BigInt::from(sizes[2 * a]));
        }
        coeff *= BigInt::from(2).pow(r.iter().sum::<usize>() as u32);
        let mut mono = MPoly::constant(n, coeff);
        for a in 0..d {
            mono = &mono * &MPoly::var(n, vars.h(side, a)).pow(l[a] as u32);
        }
        for (i, &ri) in r.iter().enumerate() {
            mono = &mono * &MPoly::var(n, vars.g(side, i)).pow(ri as u32);
        }
        // every choice of partitions of the given sizes is a distinct character
        let choices: Vec<Vec<Partition>> = sizes.iter().map(|&s| partitions_of(s)).collect();
        let mut stack: Vec<(usize, BigInt)> = vec![(0, BigInt::one())];
        while let Some((k, f)) = stack.pop() {
            if k == choices.len() {
                out.push(mono.scale(&f));
                continue;
            }
            for p in &choices[k] {
                stack.push((k + 1, &f * BigInt::from(syt_count(p))));
            }
        }
    }
    out
}

/// Checks `Σ m_χ² = 2^w w+! w-! dim(KLf₀)` with
/// `dim(KLf₀) = D² (Σh² + 2Σg²)^{w+} (Σh′² + 2Σg′²)^{w-}`, using `J = max(w+, w-, 1)`
/// pairs of non-trivial classes on each side.
pub fn dimz_identity_check(d: u32, w_plus: usize, w_minus: usize) -> DimzReport {
    let vars = DimzVars { d: d as usize, classes: w_plus.max(w_minus).max(1) };
    let n = vars.count();
    let big_d = MPoly::var(n, 0);
    let plus = side_multiplicities(&vars, 0, w_plus);
    let minus = side_multiplicities(&vars, 1, w_minus);
    let mut lhs = MPoly::zero(n);
    for a in &plus {
        for b in &minus {
            let m = &(&big_d * a) * b;
            lhs = &lhs + &(&m * &m);
        }
    }
    let factor = |side: usize| {
        let mut s = MPoly::zero(n);
        for a in 0..vars.d {
            s = &s + &MPoly::var(n, vars.h(side, a)).pow(2);
        }
        for i in 0..vars.classes {
            s = &s + &MPoly::var(n, vars.g(side, i)).pow(2).scale(&BigInt::from(2));
        }
        s
    };
    let dim_klf0 = &(&big_d.pow(2) * &factor(0).pow(w_plus as u32)) * &factor(1).pow(w_minus as u32);
    let scalar = BigInt::from(2).pow((w_plus + w_minus) as u32) * factorial(w_plus) * factorial(w_minus);
    let rhs = dim_klf0.scale(&scalar);
    let names = vars.names();
    DimzReport {
        d,
        w_plus,
        w_minus,
        classes: vars.classes,
        characters: plus.len() * minus.len(),
        lhs: lhs.to_string_with(&names),
        rhs: rhs.to_string_with(&names),
        equal: lhs == rhs,
    }
}

/// Hooks (linear) or cohooks (unitary) of a symbol at `ctx`.
pub fn moves(s: &Symbol, ctx: &ModularContext) -> usize {
    if ctx.linear {
        d_hooks(s, ctx.d).len()
    } else {
        d_cohooks(s, ctx.d).len()
    }
}
