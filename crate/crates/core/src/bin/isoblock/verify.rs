//! `verify` suites: each one sweeps a parameter range and reports failures.

use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use clap::Subcommand;
use serde::Serialize;
use serde_json::json;

use isoblock::blocks::{
    block_of, brauer_tree, characters_by_block, dimz_identity_check, enumerate_blocks, enumerate_characters, hc_series, make_context,
    tree_shape, weight_of_character, weyl_orbit_same, BlockLabel, ModularContext,
};
use isoblock::heckeb::disconnected::disconnected_decomposition_check;
use isoblock::heckeb::klr::klr_relation_check;
use isoblock::heckeb::weyl::{inversions, jm_set, permutations, pi_length, pi_nu, SignVector};
use isoblock::heckeb::{hecke_eigenvalue_check, HeckeParams};
use isoblock::poly::Q;
use isoblock::Error;

use crate::Output;

#[derive(Subcommand)]
pub enum Suite {
    /// Spectrum of X1 equals {(-q0)^t, (-q0)^(-1-t)}.
    HeckeEigenvalues {
        /// A single t; all of 0..=2 by default.
        #[arg(long)]
        t: Option<i64>,
        #[arg(long, value_delimiter = ',', default_values = ["3", "5"])]
        q0: Vec<Q>,
        #[arg(long, default_value_t = 3)]
        max_m: usize,
    },
    /// KLR relations in the transformed regular representation.
    KlrRelations {
        #[arg(long, default_value_t = 3)]
        max_m: usize,
        #[arg(long, default_value_t = 1)]
        max_t: i64,
        #[arg(long, default_value = "3")]
        q0: Q,
    },
    /// Idempotent dimensions of the disconnected-quiver decomposition.
    Disconnected {
        #[arg(long, default_value_t = 3)]
        max_m: usize,
        #[arg(long, default_value_t = 1)]
        max_t: i64,
        #[arg(long, default_value = "3")]
        q0: Q,
    },
    /// Equal weight if and only if same block.
    WeightBlock {
        /// Both (3,13) and (3,5) unless given.
        #[arg(long, requires = "ell")]
        q: Option<u64>,
        #[arg(long, requires = "q")]
        ell: Option<u64>,
        #[arg(long, default_value_t = 6)]
        max_rank: usize,
    },
    /// Same Weyl orbit if and only if equal degree vectors.
    WeylOrbit {
        #[arg(long, default_value_t = 3)]
        q: u64,
        #[arg(long, default_value_t = 13)]
        ell: u64,
        #[arg(long, default_value_t = 5)]
        max_rank: usize,
        #[arg(long, default_value_t = 100_000)]
        max_steps: usize,
    },
    /// Brauer trees of cyclic blocks: shape and vertex labels.
    BrauerTrees {
        #[arg(long, default_value_t = 6)]
        max_rank: usize,
    },
    /// The dimension identity for the formal degrees.
    Dimz {
        #[arg(long, default_value_t = 2)]
        max_d: u32,
        #[arg(long, default_value_t = 3)]
        max_w: usize,
    },
    /// Minimal coset representatives against brute force over S_m.
    CosetOracle {
        #[arg(long, default_value_t = 6)]
        max_m: usize,
    },
    /// Every suite with its default bounds.
    All,
}

#[derive(Serialize)]
struct SuiteReport {
    suite: &'static str,
    passed: bool,
    cases: usize,
    failures: Vec<String>,
    elapsed_ms: u128,
    details: serde_json::Value,
}

impl SuiteReport {
    fn line(&self) -> String {
        let mut s = format!(
            "{} {} ({} cases, {} ms)",
            if self.passed { "PASS" } else { "FAIL" },
            self.suite,
            self.cases,
            self.elapsed_ms
        );
        for f in &self.failures {
            s.push_str(&format!("\n  {f}"));
        }
        s
    }
}

fn finish(suite: &'static str, start: Instant, cases: usize, failures: Vec<String>, details: serde_json::Value) -> SuiteReport {
    SuiteReport { suite, passed: failures.is_empty(), cases, failures, elapsed_ms: start.elapsed().as_millis(), details }
}

/// `(m+, m-)` with `1 <= m+ + m- <= max_m`.
fn splits(max_m: usize) -> Vec<(usize, usize)> {
    (1..=max_m).flat_map(|m| (0..=m).map(move |p| (p, m - p))).collect()
}

fn hecke_eigenvalues(t: Option<i64>, q0s: &[Q], max_m: usize) -> Result<SuiteReport, Error> {
    let start = Instant::now();
    let ts: Vec<i64> = t.map_or_else(|| (0..=2).collect(), |t| vec![t]);
    let (mut failures, mut details) = (Vec::new(), Vec::new());
    for &t in &ts {
        for q0 in q0s {
            for (mp, mm) in splits(max_m) {
                let r = hecke_eigenvalue_check(HeckeParams::new(t, t, mp, mm), q0.clone())?;
                if !r.passed() {
                    failures.push(format!("t={t} q0={q0} m=({mp},{mm}): {:?}", r.lines));
                }
                details.push(r);
            }
        }
    }
    Ok(finish("hecke-eigenvalues", start, details.len(), failures, json!(details)))
}

fn klr_relations(max_m: usize, max_t: i64, q0: &Q) -> Result<SuiteReport, Error> {
    let start = Instant::now();
    let (mut failures, mut details) = (Vec::new(), Vec::new());
    for tp in 0..=max_t {
        for tm in 0..=max_t {
            for (mp, mm) in splits(max_m) {
                let r = klr_relation_check(HeckeParams::new(tp, tm, mp, mm), q0.clone())?;
                for c in r.checks.iter().filter(|c| !c.passed) {
                    failures.push(format!("t=({tp},{tm}) m=({mp},{mm}): {} {}", c.relation, c.detail.as_deref().unwrap_or("")));
                }
                details.push(json!({
                    "t": [tp, tm], "m": [mp, mm], "dimension": r.dimension, "blocks": r.blocks,
                    "passed": r.passed(), "singular": r.singular,
                }));
            }
        }
    }
    Ok(finish("klr-relations", start, details.len(), failures, json!(details)))
}

fn disconnected(max_m: usize, max_t: i64, q0: &Q) -> Result<SuiteReport, Error> {
    let start = Instant::now();
    let (mut failures, mut details) = (Vec::new(), Vec::new());
    for tp in 0..=max_t {
        for tm in 0..=max_t {
            for (mp, mm) in splits(max_m) {
                let r = disconnected_decomposition_check(HeckeParams::new(tp, tm, mp, mm), q0.clone())?;
                if !r.passed() {
                    let bad: Vec<_> = r.pairs.iter().filter(|p| p.dimension != r.factor_dimension).collect();
                    failures.push(format!("t=({tp},{tm}) m=({mp},{mm}): pairs {bad:?} corners {:?}", r.corner_mismatches));
                }
                details.push(json!({
                    "t": [tp, tm], "m": [mp, mm], "factor_dimension": r.factor_dimension,
                    "sign_vectors": r.sign_vectors, "total": r.total, "passed": r.passed(),
                }));
            }
        }
    }
    Ok(finish("disconnected", start, details.len(), failures, json!(details)))
}

fn weight_block_at(ctx: &ModularContext, max_rank: usize, failures: &mut Vec<String>) -> (usize, serde_json::Value) {
    let chars: Vec<_> = (0..=max_rank).flat_map(enumerate_characters).collect();
    let mut by_weight: BTreeMap<_, BTreeSet<BlockLabel>> = BTreeMap::new();
    let mut by_block: BTreeMap<BlockLabel, BTreeSet<_>> = BTreeMap::new();
    for c in &chars {
        let w = weight_of_character(c, ctx);
        let b = block_of(c, ctx);
        by_weight.entry(w.clone()).or_default().insert(b.clone());
        by_block.entry(b).or_default().insert(w);
    }
    for (w, bs) in by_weight.iter().filter(|(_, bs)| bs.len() > 1) {
        failures.push(format!("(q,ℓ)=({},{}): weight {w} meets {} blocks", ctx.q, ctx.ell, bs.len()));
    }
    for (b, ws) in by_block.iter().filter(|(_, ws)| ws.len() > 1) {
        failures.push(format!("(q,ℓ)=({},{}): block {b} has {} weights", ctx.q, ctx.ell, ws.len()));
    }
    (
        chars.len(),
        json!({ "q": ctx.q, "ell": ctx.ell, "characters": chars.len(), "blocks": by_block.len(), "weights": by_weight.len() }),
    )
}

fn weight_block(ctx: Option<(u64, u64)>, max_rank: usize) -> Result<SuiteReport, Error> {
    let start = Instant::now();
    let ctxs: Vec<(u64, u64)> = ctx.map_or_else(|| vec![(3, 13), (3, 5)], |c| vec![c]);
    let (mut failures, mut details, mut cases) = (Vec::new(), Vec::new(), 0);
    for (q, ell) in ctxs {
        let (n, d) = weight_block_at(&make_context(q, ell)?, max_rank, &mut failures);
        cases += n;
        details.push(d);
    }
    Ok(finish("weight-block", start, cases, failures, json!(details)))
}

fn weyl_orbit(q: u64, ell: u64, max_rank: usize, max_steps: usize) -> Result<SuiteReport, Error> {
    let start = Instant::now();
    let ctx = make_context(q, ell)?;
    let (mut failures, mut cases, mut same) = (Vec::new(), 0, 0);
    for n in 0..=max_rank {
        let blocks = enumerate_blocks(n, &ctx);
        let series: Vec<_> = blocks.iter().map(|b| {
            let h = hc_series(&isoblock::blocks::block_representative(b, &ctx));
            (h.t_plus, h.t_minus)
        }).collect();
        for (i, a) in blocks.iter().enumerate() {
            for (j, b) in blocks.iter().enumerate().skip(i) {
                if series[i] != series[j] {
                    continue;
                }
                cases += 1;
                let r = weyl_orbit_same(a, b, &ctx, max_steps)?;
                match r.agrees() {
                    Some(true) => same += usize::from(r.status == isoblock::blocks::OrbitStatus::Same),
                    Some(false) => failures.push(format!("{a} vs {b}: orbit {:?}, equal degree vectors {}", r.status, r.degree_vectors_equal)),
                    None => failures.push(format!("{a} vs {b}: inconclusive after {max_steps} steps")),
                }
            }
        }
    }
    Ok(finish("weyl-orbit", start, cases, failures, json!({ "q": q, "ell": ell, "max_rank": max_rank, "same_orbit_pairs": same })))
}

fn brauer_trees(max_rank: usize) -> Result<SuiteReport, Error> {
    let start = Instant::now();
    let (mut failures, mut details) = (Vec::new(), Vec::new());
    for (q, ell) in [(3, 13), (3, 5)] {
        let ctx = make_context(q, ell)?;
        let mut trees = 0;
        for n in 0..=max_rank {
            for (b, chars) in characters_by_block(n, &ctx) {
                if !matches!(b.degree_vector(), (1, 0) | (0, 1)) {
                    continue;
                }
                trees += 1;
                let t = brauer_tree(&chars[0], &ctx)?;
                let (a, bb) = tree_shape(&b, &ctx);
                if (t.lambda.len(), t.xi.len()) != (a, bb) {
                    failures.push(format!("(q,ℓ)=({q},{ell}) {b}: branches ({}, {}), expected ({a}, {bb})", t.lambda.len(), t.xi.len()));
                }
                let mut labels: Vec<_> = t.lambda.iter().chain(&t.xi).cloned().collect();
                labels.sort();
                if labels.iter().any(|c| block_of(c, &ctx) != b) || labels != chars {
                    failures.push(format!("(q,ℓ)=({q},{ell}) {b}: vertex labels differ from the block's characters"));
                }
            }
        }
        details.push(json!({ "q": q, "ell": ell, "trees": trees }));
    }
    let cases = details.iter().map(|d| d["trees"].as_u64().unwrap_or(0) as usize).sum();
    Ok(finish("brauer-trees", start, cases, failures, json!(details)))
}

fn dimz(max_d: u32, max_w: usize) -> SuiteReport {
    let start = Instant::now();
    let (mut failures, mut details) = (Vec::new(), Vec::new());
    for d in 1..=max_d {
        for w in 0..=max_w {
            for wp in 0..=w {
                let r = dimz_identity_check(d, wp, w - wp);
                if !r.equal {
                    failures.push(format!("d={d} w=({wp},{}): {} != {}", w - wp, r.lhs, r.rhs));
                }
                details.push(json!({ "d": d, "w": [wp, w - wp], "characters": r.characters, "equal": r.equal }));
            }
        }
    }
    finish("dimz", start, details.len(), failures, json!(details))
}

/// Brute force: the minimal-length `w ∈ S_m` with `w·ν = ν₀` is unique and equals `π_ν`.
fn coset_oracle(max_m: usize) -> SuiteReport {
    let start = Instant::now();
    let (mut failures, mut cases) = (Vec::new(), 0);
    for m in 0..=max_m {
        let perms = permutations(m);
        for mp in 0..=m {
            let base = SignVector::base(mp, m - mp);
            for nu in jm_set(mp, m - mp) {
                cases += 1;
                let hits: Vec<&Vec<usize>> = perms.iter().filter(|w| nu.act(w) == base).collect();
                let best = hits.iter().map(|w| inversions(w)).min().unwrap_or(usize::MAX);
                let minimal: Vec<_> = hits.iter().filter(|w| inversions(w) == best).collect();
                let pi = pi_nu(&nu);
                if minimal.len() != 1 || **minimal[0] != pi || pi_length(&nu) != best {
                    failures.push(format!("ν={nu}: π={pi:?} ℓ={} brute force {minimal:?} ℓ={best}", pi_length(&nu)));
                }
            }
        }
    }
    finish("coset-oracle", start, cases, failures, json!({ "max_m": max_m }))
}

fn reports(suite: &Suite) -> Result<Vec<SuiteReport>, Error> {
    Ok(match suite {
        Suite::HeckeEigenvalues { t, q0, max_m } => vec![hecke_eigenvalues(*t, q0, *max_m)?],
        Suite::KlrRelations { max_m, max_t, q0 } => vec![klr_relations(*max_m, *max_t, q0)?],
        Suite::Disconnected { max_m, max_t, q0 } => vec![disconnected(*max_m, *max_t, q0)?],
        Suite::WeightBlock { q, ell, max_rank } => vec![weight_block(q.zip(*ell), *max_rank)?],
        Suite::WeylOrbit { q, ell, max_rank, max_steps } => vec![weyl_orbit(*q, *ell, *max_rank, *max_steps)?],
        Suite::BrauerTrees { max_rank } => vec![brauer_trees(*max_rank)?],
        Suite::Dimz { max_d, max_w } => vec![dimz(*max_d, *max_w)],
        Suite::CosetOracle { max_m } => vec![coset_oracle(*max_m)],
        Suite::All => {
            let q0s = [Q::from_integer(3.into()), Q::from_integer(5.into())];
            vec![
                hecke_eigenvalues(None, &q0s, 3)?,
                klr_relations(3, 1, &q0s[0])?,
                disconnected(3, 1, &q0s[0])?,
                weight_block(None, 6)?,
                weyl_orbit(3, 13, 5, 100_000)?,
                brauer_trees(6)?,
                dimz(2, 3),
                coset_oracle(6),
            ]
        }
    })
}

pub fn run(suite: &Suite) -> Result<Output, Error> {
    let rs = reports(suite)?;
    let ok = rs.iter().all(|r| r.passed);
    let ascii = rs.iter().map(SuiteReport::line).collect::<Vec<_>>().join("\n");
    let json = if rs.len() == 1 { json!(rs[0]) } else { json!({ "passed": ok, "suites": rs }) };
    Ok(Output { json, ascii, ok })
}
