//! Dimension checks for the decomposition of the cyclotomic algebra on the
//! disconnected quiver `I ⊔ I′` into a matrix algebra over `H_{m+} ⊗ H_{m-}`.
//!
//! Idempotent dimensions `dim e(k′) H e(k)` are counted with pairs of standard
//! tableaux of level-four multipartitions; the corner `ν = ν′ = ν₀` is compared
//! with ranks computed in the regular representation.

use std::collections::BTreeMap;

use serde::Serialize;

use super::algebra::HeckeParams;
use super::klr::key;
use super::regular::{JointDecomposition, RegularRep};
use super::weyl::{jm_set, Sign, SignVector};
use crate::error::Result;
use crate::partitions::Partition;
use crate::poly::{q_int, q_pow, Q};
use crate::quiver::Side;

/// `(side, eigenvalue)` of a node.
pub type Label = (Side, Q);

/// Standard tableaux of all level-four multipartitions of `m`, grouped by shape
/// and then by label sequence. Components carry charges
/// `t+, -1-t+, t-, -1-t-`; the first two lie on the unprimed side.
pub fn tableau_labels(params: HeckeParams, q0: &Q) -> BTreeMap<Vec<Partition>, BTreeMap<Vec<Label>, usize>> {
    let charges = [params.t_plus, -1 - params.t_plus, params.t_minus, -1 - params.t_minus];
    let sides = [Side::Unprimed, Side::Unprimed, Side::Primed, Side::Primed];
    let mut out: BTreeMap<Vec<Partition>, BTreeMap<Vec<Label>, usize>> = BTreeMap::new();
    fn go(
        shape: &mut Vec<Partition>,
        labels: &mut Vec<Label>,
        left: usize,
        charges: &[i64; 4],
        sides: &[Side; 4],
        q0: &Q,
        out: &mut BTreeMap<Vec<Partition>, BTreeMap<Vec<Label>, usize>>,
    ) {
        if left == 0 {
            *out.entry(shape.clone()).or_default().entry(labels.clone()).or_default() += 1;
            return;
        }
        for c in 0..4 {
            for (row, col) in shape[c].addable() {
                let content = charges[c] + col as i64 - row as i64;
                let sign = if charges[c].rem_euclid(2) == 0 { q_int(1) } else { q_int(-1) };
                labels.push((sides[c], sign * q_pow(q0, content)));
                let grown = shape[c].with_box_added(row);
                let old = std::mem::replace(&mut shape[c], grown);
                go(shape, labels, left - 1, charges, sides, q0, out);
                shape[c] = old;
                labels.pop();
            }
        }
    }
    let mut shape = vec![Partition::empty(); 4];
    go(&mut shape, &mut Vec::new(), params.m(), &charges, &sides, q0, &mut out);
    out
}

fn side_of(s: Sign) -> Side {
    match s {
        Sign::Plus => Side::Unprimed,
        Sign::Minus => Side::Primed,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PairDimension {
    pub nu_prime: String,
    pub nu: String,
    pub dimension: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct DisconnectedReport {
    pub params: HeckeParams,
    pub q0: String,
    /// `dim H_{m+} ⊗ H_{m-}`
    pub factor_dimension: usize,
    pub sign_vectors: usize,
    pub pairs: Vec<PairDimension>,
    pub total: usize,
    /// Corner blocks `(k′, k)` whose tableau count differs from the regular
    /// representation rank.
    pub corner_mismatches: Vec<String>,
    pub corner_blocks: usize,
}

impl DisconnectedReport {
    pub fn passed(&self) -> bool {
        let n = self.sign_vectors;
        self.pairs.iter().all(|p| p.dimension == self.factor_dimension)
            && self.total == n * n * self.factor_dimension
            && self.corner_mismatches.is_empty()
    }
}

/// # Errors
/// As [`RegularRep::new`] and [`JointDecomposition::new`].
pub fn disconnected_decomposition_check(params: HeckeParams, q0: Q) -> Result<DisconnectedReport> {
    let tableaux = tableau_labels(params, &q0);
    let nus = jm_set(params.m_plus, params.m_minus);
    let matches = |labels: &[Label], nu: &SignVector| labels.iter().zip(&nu.0).all(|(l, s)| l.0 == side_of(*s));
    // c_λ(ν): tableaux of shape λ whose label sides follow ν
    let counts: Vec<Vec<usize>> = tableaux
        .values()
        .map(|by_labels| {
            nus.iter()
                .map(|nu| by_labels.iter().filter(|(l, _)| matches(l, nu)).map(|(_, c)| c).sum())
                .collect()
        })
        .collect();
    let mut pairs = Vec::new();
    for (i, nu_p) in nus.iter().enumerate() {
        for (j, nu) in nus.iter().enumerate() {
            let dimension = counts.iter().map(|c| c[i] * c[j]).sum();
            pairs.push(PairDimension { nu_prime: nu_p.to_string(), nu: nu.to_string(), dimension });
        }
    }
    let total = pairs.iter().map(|p| p.dimension).sum();

    let rep = RegularRep::new(params, q0)?;
    let dec = JointDecomposition::new(rep.dimension(), &rep.x)?;
    let m_mat = dec.conjugate(&rep.involution());
    let labelled: Vec<Vec<Label>> =
        dec.blocks.iter().map(|(k, _)| k.iter().enumerate().map(|(a, v)| (rep.side_of(a), v.clone())).collect()).collect();
    let mut corner_mismatches = Vec::new();
    for (bi, (ki, ri)) in dec.blocks.iter().enumerate() {
        for (bj, (kj, rj)) in dec.blocks.iter().enumerate() {
            let rank = m_mat.submatrix(ri.clone(), rj.clone()).rank();
            let count: usize = tableaux
                .values()
                .map(|by| by.get(&labelled[bi]).copied().unwrap_or(0) * by.get(&labelled[bj]).copied().unwrap_or(0))
                .sum();
            if rank != count {
                corner_mismatches.push(format!("e({})He({}): rank {rank}, tableaux {count}", key(ki), key(kj)));
            }
        }
    }
    Ok(DisconnectedReport {
        params,
        q0: rep.q0.to_string(),
        factor_dimension: rep.dimension(),
        sign_vectors: nus.len(),
        pairs,
        total,
        corner_mismatches,
        corner_blocks: dec.blocks.len(),
    })
}
