//! Symbols of type B.
//!
//! A charged symbol is a pair of charged β-sets `(X, Y)`; a symbol is its orbit
//! under simultaneous shift and swapping the rows. Defect is `s1 - s2` and rank is
//! `|μ1| + |μ2| + ⌊D²/4⌋`.
//!
//! - a d-hook moves a bead `x + d -> x` inside one row
//! - a d-cohook moves `x + d` out of one row and `x` into the other, changing the
//!   defect by two
//! - the 2d-abacus puts `X` on runners `0..d` and `Y` on runners `d..2d`

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};
use crate::partitions::{multipartitions_of, BetaSet, Partition};

/// A pair of charged β-sets.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ChargedSymbol {
    pub x: BetaSet,
    pub y: BetaSet,
}

/// One row of a symbol as a partition and charge; the JSON encoding of a row.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RowRepr {
    pub partition: Partition,
    pub charge: i64,
}

impl ChargedSymbol {
    pub fn new(mu1: &Partition, s1: i64, mu2: &Partition, s2: i64) -> Self {
        ChargedSymbol {
            x: BetaSet::of(mu1, s1),
            y: BetaSet::of(mu2, s2),
        }
    }

    pub fn row(&self, r: Row) -> &BetaSet {
        match r {
            Row::First => &self.x,
            Row::Second => &self.y,
        }
    }

    fn row_mut(&mut self, r: Row) -> &mut BetaSet {
        match r {
            Row::First => &mut self.x,
            Row::Second => &mut self.y,
        }
    }

    pub fn rows(&self) -> (RowRepr, RowRepr) {
        let (p1, s1) = self.x.to_partition();
        let (p2, s2) = self.y.to_partition();
        (
            RowRepr { partition: p1, charge: s1 },
            RowRepr { partition: p2, charge: s2 },
        )
    }

    pub fn defect(&self) -> i64 {
        self.x.charge() - self.y.charge()
    }

    pub fn rank(&self) -> usize {
        let (a, b) = self.rows();
        let d = self.defect();
        a.partition.size() + b.partition.size() + (d * d / 4) as usize
    }

    pub fn swapped(&self) -> Self {
        ChargedSymbol {
            x: self.y.clone(),
            y: self.x.clone(),
        }
    }

    pub fn shifted(&self, k: i64) -> Self {
        ChargedSymbol {
            x: self.x.shifted(k),
            y: self.y.shifted(k),
        }
    }

    /// Canonical representative: defect >= 0, smaller charge 0, and for defect
    /// 0 the larger row first.
    pub fn normal_form(&self) -> Self {
        let mut cs = if self.defect() < 0 { self.swapped() } else { self.clone() };
        let (a, b) = cs.rows();
        cs = cs.shifted(-b.charge);
        if a.charge == b.charge && a.partition < b.partition {
            cs = cs.swapped();
        }
        cs
    }
}

/// Row selector of a charged symbol.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Row {
    First,
    Second,
}

impl Row {
    pub fn other(self) -> Row {
        match self {
            Row::First => Row::Second,
            Row::Second => Row::First,
        }
    }
}

/// A symbol, stored by its normal form.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Symbol(ChargedSymbol);

impl Symbol {
    pub fn from_charged(cs: &ChargedSymbol) -> Self {
        Symbol(cs.normal_form())
    }

    pub fn charged(&self) -> &ChargedSymbol {
        &self.0
    }

    pub fn defect(&self) -> i64 {
        self.0.defect()
    }

    pub fn rank(&self) -> usize {
        self.0.rank()
    }

    /// `(defect, rank)` of the normal form; the defect is non-negative.
    pub fn defect_and_rank(&self) -> (i64, usize) {
        (self.defect(), self.rank())
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b) = self.0.rows();
        write!(f, "[{}:{} | {}:{}]", a.charge, a.partition, b.charge, b.partition)
    }
}

impl std::str::FromStr for Symbol {
    type Err = crate::Error;

    /// Parses the display form `"[0:2,1 | -1:∅]"`; the brackets are optional.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('[').trim_end_matches(']');
        let rows: Vec<&str> = inner.split('|').collect();
        if rows.len() != 2 {
            return invalid(format!("symbol {s:?} needs two rows separated by '|'"));
        }
        let row = |r: &str| -> Result<(Partition, i64)> {
            let (c, p) = r
                .trim()
                .split_once(':')
                .ok_or_else(|| crate::Error::InvalidInput(format!("row {r:?} is not charge:partition")))?;
            let charge = c.trim().parse().map_err(|_| crate::Error::InvalidInput(format!("bad charge {c:?}")))?;
            Ok((p.parse()?, charge))
        };
        let (p1, s1) = row(rows[0])?;
        let (p2, s2) = row(rows[1])?;
        Ok(Symbol::from_charged(&ChargedSymbol::new(&p1, s1, &p2, s2)))
    }
}

impl Serialize for Symbol {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let (a, b) = self.0.rows();
        [a, b].serialize(s)
    }
}

impl<'de> Deserialize<'de> for Symbol {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let [a, b] = <[RowRepr; 2]>::deserialize(d)?;
        Ok(Symbol::from_charged(&ChargedSymbol::new(&a.partition, a.charge, &b.partition, b.charge)))
    }
}

/// `(defect, rank)` of a charged symbol (the defect keeps its sign).
pub fn defect_and_rank(cs: &ChargedSymbol) -> (i64, usize) {
    (cs.defect(), cs.rank())
}

/// `Θ_t(μ) = {β_t(μ1), β_{-t-1}(μ2)}`.
pub fn symbol_from_bipartition(t: i64, mu: (&Partition, &Partition)) -> Symbol {
    Symbol::from_charged(&ChargedSymbol::new(mu.0, t, mu.1, -t - 1))
}

/// Inverse of [`symbol_from_bipartition`] with `t >= 0`.
///
/// # Errors
/// Fails on symbols of even defect.
pub fn bipartition_from_symbol(sym: &Symbol) -> Result<(i64, (Partition, Partition))> {
    let d = sym.defect();
    if d % 2 == 0 {
        return invalid(format!("symbol {sym} has even defect {d}"));
    }
    let (a, b) = sym.charged().rows();
    Ok(((d - 1) / 2, (a.partition, b.partition)))
}

/// A d-hook `(x, x + d)` inside one row.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Hook {
    pub row: Row,
    pub x: i64,
}

/// A d-cohook: `x + d` leaves row `from`, `x` enters the other row.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Cohook {
    pub from: Row,
    pub x: i64,
}

const ROWS: [Row; 2] = [Row::First, Row::Second];

pub fn d_hooks_charged(cs: &ChargedSymbol, d: u32) -> Vec<Hook> {
    ROWS.iter()
        .flat_map(|&row| cs.row(row).hooks(d as i64).into_iter().map(move |x| Hook { row, x }))
        .collect()
}

pub fn d_cohooks_charged(cs: &ChargedSymbol, d: u32) -> Vec<Cohook> {
    let d = d as i64;
    let mut out = Vec::new();
    for &from in &ROWS {
        let (src, dst) = (cs.row(from), cs.row(from.other()));
        for y in dst.floor() + d..=src.top() {
            if src.contains(y) && !dst.contains(y - d) {
                out.push(Cohook { from, x: y - d });
            }
        }
    }
    out
}

/// # Errors
/// Fails when `hook` is not a d-hook of `cs`.
pub fn remove_d_hook_charged(cs: &ChargedSymbol, d: u32, hook: Hook) -> Result<ChargedSymbol> {
    if !d_hooks_charged(cs, d).contains(&hook) {
        return invalid(format!("{hook:?} is not a {d}-hook"));
    }
    let mut out = cs.clone();
    out.row_mut(hook.row).slide(hook.x + d as i64, hook.x);
    Ok(out)
}

/// # Errors
/// Fails when `c` is not a d-cohook of `cs`.
pub fn remove_d_cohook_charged(cs: &ChargedSymbol, d: u32, c: Cohook) -> Result<ChargedSymbol> {
    if !d_cohooks_charged(cs, d).contains(&c) {
        return invalid(format!("{c:?} is not a {d}-cohook"));
    }
    let mut out = cs.clone();
    out.row_mut(c.from).remove(c.x + d as i64);
    out.row_mut(c.from.other()).insert(c.x);
    Ok(out)
}

/// d-hooks of the normal form of `sym`.
pub fn d_hooks(sym: &Symbol, d: u32) -> Vec<Hook> {
    d_hooks_charged(sym.charged(), d)
}

/// d-cohooks of the normal form of `sym`.
pub fn d_cohooks(sym: &Symbol, d: u32) -> Vec<Cohook> {
    d_cohooks_charged(sym.charged(), d)
}

/// Removes a d-hook given relative to the normal form.
///
/// # Errors
/// Fails when the hook does not exist.
pub fn remove_d_hook(sym: &Symbol, d: u32, hook: Hook) -> Result<Symbol> {
    Ok(Symbol::from_charged(&remove_d_hook_charged(sym.charged(), d, hook)?))
}

/// Removes a d-cohook given relative to the normal form.
///
/// # Errors
/// Fails when the cohook does not exist.
pub fn remove_d_cohook(sym: &Symbol, d: u32, c: Cohook) -> Result<Symbol> {
    Ok(Symbol::from_charged(&remove_d_cohook_charged(sym.charged(), d, c)?))
}

/// Charged d-core: greedy removal of the first d-hook until none is left.
pub fn d_core_charged(cs: &ChargedSymbol, d: u32) -> ChargedSymbol {
    let mut cur = cs.clone();
    while let Some(&h) = d_hooks_charged(&cur, d).first() {
        cur = remove_d_hook_charged(&cur, d, h).expect("listed hook");
    }
    cur
}

pub fn d_cocore_charged(cs: &ChargedSymbol, d: u32) -> ChargedSymbol {
    let mut cur = cs.clone();
    while let Some(&c) = d_cohooks_charged(&cur, d).first() {
        cur = remove_d_cohook_charged(&cur, d, c).expect("listed cohook");
    }
    cur
}

pub fn d_core(sym: &Symbol, d: u32) -> Symbol {
    Symbol::from_charged(&d_core_charged(sym.charged(), d))
}

pub fn d_cocore(sym: &Symbol, d: u32) -> Symbol {
    Symbol::from_charged(&d_cocore_charged(sym.charged(), d))
}

/// Number of d-hooks removed on the way to the d-core.
pub fn d_weight(sym: &Symbol, d: u32) -> usize {
    (sym.rank() - d_core(sym, d).rank()) / d as usize
}

/// Number of d-cohooks removed on the way to the d-cocore.
pub fn d_coweight(sym: &Symbol, d: u32) -> usize {
    (sym.rank() - d_cocore(sym, d).rank()) / d as usize
}

/// Symbols obtained by adding one d-hook to row `row` of the charged symbol.
pub fn add_d_hooks(cs: &ChargedSymbol, d: u32, row: Row) -> Vec<ChargedSymbol> {
    let d = d as i64;
    cs.row(row)
        .addable_hooks(d)
        .into_iter()
        .map(|y| {
            let mut out = cs.clone();
            out.row_mut(row).slide(y - d, y);
            out
        })
        .collect()
}

/// Symbols obtained by adding one d-cohook whose new bead lands in row `to`:
/// a bead `x` leaves the other row and `x + d` enters `to`.
pub fn add_d_cohooks(cs: &ChargedSymbol, d: u32, to: Row) -> Vec<ChargedSymbol> {
    let d = d as i64;
    let src = cs.row(to.other());
    let dst = cs.row(to);
    let lo = src.floor().min(dst.floor()) - d - 1;
    let hi = src.top().max(dst.top()) + d;
    let mut out = Vec::new();
    for x in lo..=hi {
        if src.contains(x) && !dst.contains(x + d) {
            let mut n = cs.clone();
            n.row_mut(to.other()).remove(x);
            n.row_mut(to).insert(x + d);
            out.push(n);
        }
    }
    out
}

/// All symbols of odd defect and the given rank, in normal form, sorted.
pub fn enumerate_odd_defect_symbols(rank: usize) -> Vec<Symbol> {
    let mut out = Vec::new();
    let mut t = 0usize;
    while t * (t + 1) <= rank {
        for bip in multipartitions_of(rank - t * (t + 1), 2) {
            out.push(symbol_from_bipartition(t as i64, (&bip[0], &bip[1])));
        }
        t += 1;
    }
    out.sort();
    out
}

/// A 2d-runner abacus; each runner is a β-set of row indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Abacus2d {
    pub d: u32,
    pub runners: Vec<BetaSet>,
}

/// Runner `j < d` holds row `i` iff `d·i + j ∈ X`; runner `d + j` likewise for `Y`.
///
/// # Errors
/// Fails when `d == 0`.
pub fn to_abacus(cs: &ChargedSymbol, d: u32) -> Result<Abacus2d> {
    if d == 0 {
        return invalid("d must be positive");
    }
    let di = d as i64;
    let mut runners = Vec::with_capacity(2 * d as usize);
    for row in [&cs.x, &cs.y] {
        for j in 0..di {
            let lo = (row.floor() - j).div_euclid(di) - 1;
            let hi = (row.top() - j).div_euclid(di) + 1;
            let mut entries: Vec<i64> = (lo..=hi).rev().filter(|&i| row.contains(di * i + j)).collect();
            if entries.last() != Some(&lo) {
                entries.push(lo);
            }
            runners.push(BetaSet::from_entries(&entries)?);
        }
    }
    Ok(Abacus2d { d, runners })
}

/// Inverse of [`to_abacus`].
///
/// # Errors
/// Fails when the runner count is not `2d`.
pub fn from_abacus(ab: &Abacus2d) -> Result<ChargedSymbol> {
    let d = ab.d as i64;
    if ab.runners.len() != 2 * ab.d as usize || d == 0 {
        return invalid(format!("expected {} runners, found {}", 2 * d, ab.runners.len()));
    }
    let mut rows = Vec::new();
    for half in ab.runners.chunks(d as usize) {
        let lo = half.iter().map(|r| r.floor()).min().unwrap_or(0) - 1;
        let hi = half.iter().map(|r| r.top()).max().unwrap_or(0) + 1;
        let mut entries = Vec::new();
        for pos in (d * lo..=d * hi + d - 1).rev() {
            let (i, j) = (pos.div_euclid(d), pos.rem_euclid(d));
            if half[j as usize].contains(i) {
                entries.push(pos);
            }
        }
        rows.push(BetaSet::from_entries(&entries)?);
    }
    let y = rows.pop().expect("two halves");
    let x = rows.pop().expect("two halves");
    Ok(ChargedSymbol { x, y })
}

impl Abacus2d {
    /// Slides the top movable bead of runner `r` one row up (towards smaller rows):
    /// the bead at row `i` moves to the gap at row `i - 1`. Returns whether a bead moved.
    pub fn slide_up(&mut self, r: usize, row: i64) -> bool {
        let run = &mut self.runners[r];
        if run.contains(row) && !run.contains(row - 1) {
            run.slide(row, row - 1);
            true
        } else {
            false
        }
    }

    /// Relative bead count of each runner: beads in rows >= 0 minus gaps in rows < 0.
    pub fn populations(&self) -> Vec<i64> {
        self.runners.iter().map(|r| r.runner_charge(0, 1)).collect()
    }

    /// ASCII picture, one line per row from the top, `●` for a bead and `·` for a gap.
    pub fn render(&self) -> String {
        let top = self.runners.iter().map(|r| r.top()).max().unwrap_or(0).max(0);
        let bottom = self.runners.iter().map(|r| r.floor()).min().unwrap_or(0).min(0) - 1;
        let d = self.d as usize;
        let mut lines = Vec::new();
        for i in (bottom..=top).rev() {
            let mut line = format!("{i:>4} ");
            for (k, r) in self.runners.iter().enumerate() {
                if k == d {
                    line.push_str(" |");
                }
                line.push(' ');
                line.push(if r.contains(i) { '●' } else { '·' });
            }
            lines.push(line);
        }
        lines.join("\n")
    }
}

/// Rouquier test: some presentation of the d-core `core` (either row order, shifts
/// within `[-(rank + dω), rank + dω]`) has at least `ω - 1` more beads on runner
/// `i` than on runner `i - 1`, for `i = 1..d-1` and `i = d+1..2d-1`. Every core
/// is Rouquier for `ω <= 1`.
///
/// # Errors
/// Fails when `core` has a d-hook.
pub fn is_rouquier_core(core: &Symbol, d: u32, omega: u32) -> Result<bool> {
    if !d_hooks(core, d).is_empty() {
        return invalid(format!("{core} is not a {d}-core"));
    }
    Ok(rouquier_witness(core, d, omega).is_some())
}

/// The presentation (row order swapped?, shift) witnessing the Rouquier property.
///
/// For `ω <= 1` the surplus condition is vacuous and the identity presentation is
/// returned.
pub fn rouquier_witness(core: &Symbol, d: u32, omega: u32) -> Option<(bool, i64)> {
    if omega <= 1 {
        return Some((false, 0));
    }
    let need = omega as i64 - 1;
    let bound = core.rank() as i64 + d as i64 * omega as i64;
    let du = d as usize;
    for swap in [false, true] {
        let base = if swap { core.charged().swapped() } else { core.charged().clone() };
        for k in -bound..=bound {
            let ab = to_abacus(&base.shifted(k), d).expect("d > 0");
            let pops = ab.populations();
            let ok = (1..du).all(|i| pops[i] - pops[i - 1] >= need)
                && (du + 1..2 * du).all(|i| pops[i] - pops[i - 1] >= need);
            if ok {
                return Some((swap, k));
            }
        }
    }
    None
}

/// Counts symbols per `(defect, rank)`; handy for enumeration cross-checks.
pub fn census(symbols: &[Symbol]) -> BTreeMap<(i64, usize), usize> {
    let mut m = BTreeMap::new();
    for s in symbols {
        *m.entry(s.defect_and_rank()).or_insert(0) += 1;
    }
    m
}
