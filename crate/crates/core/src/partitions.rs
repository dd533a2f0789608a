//! Integer partitions and their charged β-sets.
//!
//! - `β_s(λ) = {λ_u + s + 1 - u : u >= 1}` encodes `λ` with charge `s`
//! - an e-hook of a β-set is a pair `(x, x+e)` with `x+e` present and `x` absent
//! - the e-core is reached by sliding beads down their runners; the e-quotient
//!   comes from the bijection `β_s(λ) = ⊔_p (p - e + e·β_{s_p}(λ^p))`
//!
//! β-sets are infinite, so they are stored as a finite set of beads above a floor
//! below which every integer is a bead.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};

/// A partition stored as its non-increasing positive parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Builds a partition, dropping trailing zeros.
    ///
    /// # Errors
    /// Fails when the parts increase somewhere.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return invalid(format!("parts {parts:?} are not non-increasing"));
        }
        if parts.contains(&0) {
            return invalid("zero part in the middle of a partition");
        }
        Ok(Partition(parts))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().map(|&p| p as usize).sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Part `λ_u` with 1-based `u`; zero past the end.
    pub fn part(&self, u: usize) -> u32 {
        if u == 0 {
            return 0;
        }
        self.0.get(u - 1).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(1) as usize;
        let parts = (1..=width)
            .map(|j| self.0.iter().filter(|&&p| p as usize >= j).count() as u32)
            .collect();
        Partition(parts)
    }

    /// Whether the 1-based box `(i, j)` lies in the Young diagram.
    pub fn contains(&self, i: usize, j: usize) -> bool {
        i >= 1 && j >= 1 && self.part(i) as usize >= j
    }

    /// Boxes of the Young diagram, row by row.
    pub fn boxes(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p as usize).map(move |j| (i + 1, j)))
    }

    /// Hook length of the box `(i, j)`, which must lie in the diagram.
    pub fn hook_length(&self, i: usize, j: usize) -> usize {
        let arm = self.part(i) as usize - j;
        let leg = self.0.iter().skip(i).filter(|&&p| p as usize >= j).count();
        arm + leg + 1
    }

    /// Rows where a box can be added, as 1-based `(row, col)`.
    pub fn addable(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 1..=self.len() + 1 {
            let c = self.part(i) as usize + 1;
            if i == 1 || self.part(i - 1) as usize >= c {
                out.push((i, c));
            }
        }
        out
    }

    /// Boxes whose removal leaves a partition.
    pub fn removable(&self) -> Vec<(usize, usize)> {
        (1..=self.len())
            .filter(|&i| self.part(i) > self.part(i + 1))
            .map(|i| (i, self.part(i) as usize))
            .collect()
    }

    pub fn with_box_added(&self, row: usize) -> Partition {
        let mut parts = self.0.clone();
        if row > parts.len() {
            parts.push(1);
        } else {
            parts[row - 1] += 1;
        }
        Partition(parts)
    }

    pub fn with_box_removed(&self, row: usize) -> Partition {
        let mut parts = self.0.clone();
        parts[row - 1] -= 1;
        if parts[row - 1] == 0 {
            parts.pop();
        }
        Partition(parts)
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "∅");
        }
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses `"3,1"`; the empty string, `"0"`, `"-"` and `"∅"` give the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.is_empty() || s == "∅" || s == "-" || s == "0" {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|x| {
                x.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::InvalidInput(format!("bad part {x:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// All partitions of `n`, in reverse lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn rec(n: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=n.min(max)).rev() {
            cur.push(p);
            rec(n - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n as u32, n as u32, &mut Vec::new(), &mut out);
    out
}

/// All `l`-multipartitions of total size `n`.
pub fn multipartitions_of(n: usize, l: usize) -> Vec<Vec<Partition>> {
    if l == 0 {
        return if n == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for k in 0..=n {
        for head in partitions_of(k) {
            for mut tail in multipartitions_of(n - k, l - 1) {
                tail.insert(0, head.clone());
                out.push(tail);
            }
        }
    }
    out
}

/// The first `count` β-numbers `λ_u + s + 1 - u`.
pub fn beta_set(lambda: &Partition, s: i64, count: usize) -> Vec<i64> {
    (1..=count)
        .map(|u| lambda.part(u) as i64 + s + 1 - u as i64)
        .collect()
}

/// A β-set: every integer below `floor` is a bead, plus the finitely many `beads`
/// at or above `floor`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[derive(Default)]
pub struct BetaSet {
    floor: i64,
    beads: BTreeSet<i64>,
}

impl BetaSet {
    pub fn of(lambda: &Partition, s: i64) -> Self {
        let n = lambda.len();
        let floor = s - n as i64 + 1;
        let beads = beta_set(lambda, s, n).into_iter().collect();
        BetaSet { floor, beads }.normalized()
    }

    /// A β-set given by strictly decreasing entries, continued by every integer
    /// below the last one.
    ///
    /// # Errors
    /// Fails on an empty list or entries that do not strictly decrease.
    pub fn from_entries(entries: &[i64]) -> Result<Self> {
        let Some(&last) = entries.last() else {
            return invalid("a β-set needs at least one entry");
        };
        if entries.windows(2).any(|w| w[0] <= w[1]) {
            return invalid(format!("β-set entries {entries:?} are not strictly decreasing"));
        }
        Ok(BetaSet {
            floor: last,
            beads: entries.iter().copied().collect(),
        }
        .normalized())
    }

    fn normalized(mut self) -> Self {
        while self.beads.remove(&(self.floor)) {
            self.floor += 1;
        }
        self.beads.retain(|&x| x >= self.floor);
        self
    }

    pub fn contains(&self, x: i64) -> bool {
        x < self.floor || self.beads.contains(&x)
    }

    /// Lowest position that might be a gap.
    pub fn floor(&self) -> i64 {
        self.floor
    }

    /// Beads at or above the floor (the floor itself is always a gap).
    pub fn upper_beads(&self) -> impl Iterator<Item = i64> + '_ {
        self.beads.iter().copied()
    }

    pub fn top(&self) -> i64 {
        self.beads.iter().next_back().copied().unwrap_or(self.floor - 1)
    }

    pub fn insert(&mut self, x: i64) {
        if x >= self.floor {
            self.beads.insert(x);
            let b = std::mem::take(self);
            *self = b.normalized();
        }
    }

    pub fn remove(&mut self, x: i64) {
        if x >= self.floor {
            self.beads.remove(&x);
            return;
        }
        for y in x + 1..self.floor {
            self.beads.insert(y);
        }
        self.floor = x;
    }

    /// Moves the bead at `from` to the gap `to`.
    pub fn slide(&mut self, from: i64, to: i64) {
        self.remove(from);
        self.insert(to);
    }

    /// Adds `k` to every bead.
    pub fn shifted(&self, k: i64) -> Self {
        BetaSet {
            floor: self.floor + k,
            beads: self.beads.iter().map(|x| x + k).collect(),
        }
    }

    /// Charge `s` and partition `λ` with `self = β_s(λ)`.
    pub fn to_partition(&self) -> (Partition, i64) {
        let desc: Vec<i64> = self.beads.iter().rev().copied().collect();
        let k = desc.len() as i64;
        // below the listed beads the set continues from floor - 1
        let s = self.floor - 1 + k;
        let parts = desc
            .iter()
            .enumerate()
            .map(|(u, &b)| (b - s - 1 + (u as i64 + 1)) as u32)
            .collect();
        (Partition(parts), s)
    }

    pub fn charge(&self) -> i64 {
        self.to_partition().1
    }

    /// Positions `x` with `x + e` a bead and `x` a gap.
    pub fn hooks(&self, e: i64) -> Vec<i64> {
        self.beads
            .iter()
            .map(|&y| y - e)
            .filter(|&x| !self.contains(x))
            .collect()
    }

    /// Gaps `y` with `y - e` a bead (places where an e-hook can be added).
    pub fn addable_hooks(&self, e: i64) -> Vec<i64> {
        (self.floor..=self.top() + e)
            .filter(|&y| !self.contains(y) && self.contains(y - e))
            .collect()
    }

    /// Signed runner population for positions `≡ r (mod e)`: beads at or above
    /// zero minus gaps below zero.
    pub fn runner_charge(&self, r: i64, e: i64) -> i64 {
        let lo = self.floor.min(0);
        let hi = self.top().max(0);
        let mut c = 0;
        for x in lo..=hi {
            if x.rem_euclid(e) != r.rem_euclid(e) {
                continue;
            }
            if x >= 0 && self.contains(x) {
                c += 1;
            } else if x < 0 && !self.contains(x) {
                c -= 1;
            }
        }
        c
    }
}


/// Inverse of [`beta_set`]: the partition and charge of a β-set given by its
/// leading entries (the set continues with every integer below the last entry).
///
/// # Errors
/// Fails on malformed entry lists.
pub fn partition_from_beta(entries: &[i64]) -> Result<(Partition, i64)> {
    Ok(BetaSet::from_entries(entries)?.to_partition())
}

/// A box `(row, col)` of component `comp`, all 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Node {
    pub row: usize,
    pub col: usize,
    pub comp: usize,
}

/// A multipartition together with one charge per component.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ChargedMultiPartition {
    pub components: Vec<Partition>,
    pub charges: Vec<i64>,
}

impl ChargedMultiPartition {
    /// # Errors
    /// Fails when the lengths differ or are zero.
    pub fn new(components: Vec<Partition>, charges: Vec<i64>) -> Result<Self> {
        if components.len() != charges.len() || components.is_empty() {
            return invalid("components and charges must have the same positive length");
        }
        Ok(ChargedMultiPartition { components, charges })
    }

    pub fn size(&self) -> usize {
        self.components.iter().map(Partition::size).sum()
    }

    pub fn level(&self) -> usize {
        self.components.len()
    }

    pub fn nodes(&self) -> Vec<Node> {
        self.components
            .iter()
            .enumerate()
            .flat_map(|(p, lam)| lam.boxes().map(move |(row, col)| Node { row, col, comp: p + 1 }))
            .collect()
    }
}

/// Shifted content `s_p + j - i` of a node.
pub fn content(node: Node, charges: &[i64]) -> i64 {
    charges[node.comp - 1] + node.col as i64 - node.row as i64
}

/// Residue exponent of a node: its content, reduced into `[0, e)` when `e` is finite.
///
/// # Errors
/// Fails when the node is outside the diagram of `mp`.
pub fn residue(node: Node, mp: &ChargedMultiPartition, e: Option<u32>) -> Result<i64> {
    let inside = node.comp >= 1
        && node.comp <= mp.level()
        && mp.components[node.comp - 1].contains(node.row, node.col);
    if !inside {
        return invalid(format!("node {node:?} lies outside the diagram"));
    }
    Ok(reduce(content(node, &mp.charges), e))
}

pub(crate) fn reduce(c: i64, e: Option<u32>) -> i64 {
    match e {
        Some(e) => c.rem_euclid(e as i64),
        None => c,
    }
}

/// Addable and removable nodes whose residue exponent is `exponent`.
pub fn addable_removable_nodes(
    mp: &ChargedMultiPartition,
    exponent: i64,
    e: Option<u32>,
) -> (Vec<Node>, Vec<Node>) {
    let mut add = Vec::new();
    let mut rem = Vec::new();
    for (p, lam) in mp.components.iter().enumerate() {
        let s = mp.charges[p];
        for (row, col) in lam.addable() {
            if reduce(s + col as i64 - row as i64, e) == reduce(exponent, e) {
                add.push(Node { row, col, comp: p + 1 });
            }
        }
        for (row, col) in lam.removable() {
            if reduce(s + col as i64 - row as i64, e) == reduce(exponent, e) {
                rem.push(Node { row, col, comp: p + 1 });
            }
        }
    }
    (add, rem)
}

/// e-core, e-quotient and quotient charges of the charged partition `(λ, s)`.
///
/// Component `p` (1-based) of the quotient collects the beads `x ≡ p (mod e)`
/// through `x = p - e + e·y`.
///
/// # Errors
/// Fails when `e == 0`.
pub fn e_core_and_quotient(lambda: &Partition, s: i64, e: u32) -> Result<(Partition, ChargedMultiPartition)> {
    if e == 0 {
        return invalid("e must be positive");
    }
    let e = e as i64;
    let b = BetaSet::of(lambda, s);
    let mut comps = Vec::new();
    let mut charges = Vec::new();
    for p in 1..=e {
        // runner p holds the beads p - e + e*y; below y0 they are all present
        let y0 = (b.floor() - p + e + e - 1).div_euclid(e);
        let ymax = (b.top() - p + e).div_euclid(e) + 1;
        let mut entries: Vec<i64> = (y0..=ymax).rev().filter(|&y| b.contains(p - e + e * y)).collect();
        entries.push(y0 - 1);
        let (mu, sp) = BetaSet::from_entries(&entries)?.to_partition();
        comps.push(mu);
        charges.push(sp);
    }
    let quotient = ChargedMultiPartition {
        components: comps,
        charges,
    };
    let core = from_quotient_charges(&quotient.charges, e as u32)?.0;
    Ok((core, quotient))
}

fn from_quotient_charges(charges: &[i64], e: u32) -> Result<(Partition, i64)> {
    let empties = vec![Partition::empty(); charges.len()];
    let mp = ChargedMultiPartition::new(empties, charges.to_vec())?;
    from_quotient(&mp, e)
}

/// Inverse of the quotient map: rebuilds `(λ, s)` from the e charged components.
///
/// # Errors
/// Fails when the level differs from `e`.
pub fn from_quotient(q: &ChargedMultiPartition, e: u32) -> Result<(Partition, i64)> {
    if q.level() != e as usize {
        return invalid(format!("quotient has level {} but e = {e}", q.level()));
    }
    let e = e as i64;
    let sets: Vec<BetaSet> = q
        .components
        .iter()
        .zip(&q.charges)
        .map(|(mu, &sp)| BetaSet::of(mu, sp))
        .collect();
    let floor = sets
        .iter()
        .enumerate()
        .map(|(i, b)| (i as i64 + 1) - e + e * b.floor())
        .min()
        .unwrap_or(0);
    let top = sets
        .iter()
        .enumerate()
        .map(|(i, b)| (i as i64 + 1) - e + e * b.top())
        .max()
        .unwrap_or(0);
    let mut entries = Vec::new();
    for x in (floor - e..=top).rev() {
        let p = (x - 1).rem_euclid(e) + 1;
        let y = (x - p + e) / e;
        if sets[(p - 1) as usize].contains(y) {
            entries.push(x);
        }
    }
    Ok(BetaSet::from_entries(&entries)?.to_partition())
}

/// e-weight `(|λ| - |core|) / e`.
pub fn e_weight(lambda: &Partition, e: u32) -> usize {
    let (core, _) = e_core_and_quotient(lambda, 0, e).expect("e > 0");
    (lambda.size() - core.size()) / e as usize
}

/// Number of standard Young tableaux of shape `λ`, by the hook-length formula.
pub fn syt_count(lambda: &Partition) -> u128 {
    let n = lambda.size() as u128;
    let mut num: u128 = (1..=n).product();
    let mut den: u128 = 1;
    for (i, j) in lambda.boxes() {
        den *= lambda.hook_length(i, j) as u128;
        let g = gcd(num, den);
        num /= g;
        den /= g;
    }
    num / den
}

fn gcd(a: u128, b: u128) -> u128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Whether `(λ, s)` is an e-core, i.e. its β-set has no e-hook.
pub fn is_e_core(lambda: &Partition, e: u32) -> bool {
    BetaSet::of(lambda, 0).hooks(e as i64).is_empty()
}

/// Rouquier test for a d-core partition: some abacus presentation (bead count)
/// has at least `omega - 1` more beads on runner `i` than on runner `i - 1` for
/// every `i = 1..d-1`. Vacuous for `omega <= 1`.
pub fn is_rouquier_partition_core(core: &Partition, d: u32, omega: u32) -> Result<bool> {
    if !is_e_core(core, d) {
        return invalid(format!("{core} is not a {d}-core"));
    }
    if omega <= 1 {
        return Ok(true);
    }
    let d = d as i64;
    let need = omega as i64 - 1;
    let b = BetaSet::of(core, 0);
    let bound = core.size() as i64 + d * omega as i64 + d;
    for shift in -bound..=bound {
        let sb = b.shifted(shift);
        let pops: Vec<i64> = (0..d).map(|r| sb.runner_charge(r, d)).collect();
        if (1..d as usize).all(|i| pops[i] - pops[i - 1] >= need) {
            return Ok(true);
        }
    }
    Ok(false)
}
