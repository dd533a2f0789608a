//! The BKR change of generators on the regular representation, and a checker
//! for the quiver Hecke relations it should satisfy.

use std::ops::Range;

use num_traits::{One, Zero};
use serde::Serialize;

use super::algebra::HeckeParams;
use super::regular::{eigen_vertex, JointDecomposition, RegularRep};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::poly::Q;
use crate::quiver::{QuiverKind, QuiverSpec, QuiverVertex};

/// KLR generators in the basis adapted to the joint eigenspaces.
pub struct KlrData {
    pub rep: RegularRep,
    pub dec: JointDecomposition,
    pub quiver: QuiverSpec,
    /// Residue sequence of each block.
    pub residues: Vec<Vec<QuiverVertex>>,
    pub x: Vec<Matrix>,
    /// `τ_a` swapping positions `a, a + 1`; `None` across the two factors.
    pub tau: Vec<Option<Matrix>>,
    /// Blocks on which a denominator `qX_a - X_{a+1}` was needed but singular.
    pub singular: Vec<String>,
}

fn place(target: &mut Matrix, rows: &Range<usize>, cols: &Range<usize>, m: &Matrix) {
    for (i, r) in rows.clone().enumerate() {
        for (j, c) in cols.clone().enumerate() {
            target.set(r, c, m.get(i, j).clone());
        }
    }
}

pub(crate) fn key(k: &[Q]) -> String {
    k.iter().map(Q::to_string).collect::<Vec<_>>().join(", ")
}

fn pow(m: &Matrix, k: u32) -> Matrix {
    (0..k).fold(Matrix::identity(m.rows()), |acc, _| &acc * m)
}

/// `Σ c u^i v^j` for commuting `u, v`.
fn eval_q(terms: &[((u32, u32), i64)], u: &Matrix, v: &Matrix) -> Matrix {
    let mut out = Matrix::zeros(u.rows(), u.cols());
    for ((i, j), c) in terms {
        out = &out + &(&pow(u, *i) * &pow(v, *j)).scale(&Q::from_integer((*c).into()));
    }
    out
}

/// `(P(u, v) - P(w, v)) / (u - w)` for commuting `u, v, w`.
fn difference_quotient(terms: &[((u32, u32), i64)], u: &Matrix, v: &Matrix, w: &Matrix) -> Matrix {
    let mut out = Matrix::zeros(u.rows(), u.cols());
    for ((i, j), c) in terms {
        for s in 0..*i {
            let t = &(&pow(u, s) * &pow(w, i - 1 - s)) * &pow(v, *j);
            out = &out + &t.scale(&Q::from_integer((*c).into()));
        }
    }
    out
}

impl KlrData {
    /// # Errors
    /// `Unsupported` for irrational eigenvalues or eigenvalues outside `±q₀^ℤ`.
    pub fn new(params: HeckeParams, q0: Q) -> Result<Self> {
        let rep = RegularRep::new(params, q0.clone())?;
        let dec = JointDecomposition::new(rep.dimension(), &rep.x)?;
        let quiver = QuiverSpec { kind: QuiverKind::Infinite };
        let m = params.m();
        let residues = dec
            .blocks
            .iter()
            .map(|(k, _)| {
                k.iter()
                    .enumerate()
                    .map(|(a, v)| {
                        eigen_vertex(v, &q0, rep.side_of(a))
                            .ok_or_else(|| Error::Unsupported(format!("eigenvalue {v} is not ±q0^k")))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let big_x: Vec<Matrix> = rep.x.iter().map(|a| dec.conjugate(a)).collect();
        let n = rep.dimension();
        let mut x = Vec::new();
        for (a, xa) in big_x.iter().enumerate() {
            let mut out = Matrix::zeros(n, n);
            for (k, r) in &dec.blocks {
                let blk = xa.submatrix(r.clone(), r.clone()).scale(&k[a].recip());
                place(&mut out, r, r, &(&blk - &Matrix::identity(r.len())));
            }
            x.push(out);
        }
        let mut data = KlrData { rep, dec, quiver, residues, x, tau: Vec::new(), singular: Vec::new() };
        for a in 0..m.saturating_sub(1) {
            let t = data.rep.swap_generator(a).map(|t| data.dec.conjugate(t));
            let tau = t.map(|t| data.build_tau(a, &t, &big_x[a], &big_x[a + 1]));
            data.tau.push(tau);
        }
        Ok(data)
    }

    fn build_tau(&mut self, a: usize, t: &Matrix, xa: &Matrix, xb: &Matrix) -> Matrix {
        let q = self.rep.q0.clone();
        let n = t.rows();
        let id = Matrix::identity(n);
        let denom = &xa.scale(&q) - xb;
        let inverses: Vec<Option<Matrix>> =
            self.dec.blocks.iter().map(|(_, r)| denom.submatrix(r.clone(), r.clone()).inverse()).collect();
        let t_minus_q = t - &Matrix::scalar(n, &q);
        let diff = xa - xb;
        let case2 = &(&diff * t) + &xb.scale(&(&q - Q::one()));
        let mut out = Matrix::zeros(n, n);
        for (k, c) in self.dec.blocks.clone() {
            let (ka, kb) = (k[a].clone(), k[a + 1].clone());
            let y = t_minus_q.submatrix(0..n, c.clone());
            let col = if ka == kb {
                self.solve(&inverses, &y, &k, a).scale(&ka)
            } else if kb == &q * &ka {
                case2.submatrix(0..n, c.clone()).scale(&(&q * &ka).recip())
            } else {
                let z = self.solve(&inverses, &(&diff * &t_minus_q).submatrix(0..n, c.clone()), &k, a);
                &z + &id.submatrix(0..n, c.clone())
            };
            place(&mut out, &(0..n), &c, &col);
        }
        out
    }

    /// Applies the block-wise inverse of the denominator to `z`.
    fn solve(&mut self, inverses: &[Option<Matrix>], z: &Matrix, k: &[Q], a: usize) -> Matrix {
        let mut out = Matrix::zeros(z.rows(), z.cols());
        for ((kr, r), inv) in self.dec.blocks.iter().zip(inverses) {
            let zr = z.submatrix(r.clone(), 0..z.cols());
            if zr.is_zero() {
                continue;
            }
            match inv {
                Some(inv) => place(&mut out, r, &(0..z.cols()), &(inv * &zr)),
                None => self.singular.push(format!(
                    "qX_{} - X_{} singular on block ({}) reached from (k_a, k_a+1) = ({}, {})",
                    a + 1,
                    a + 2,
                    key(kr),
                    k[a],
                    k[a + 1]
                )),
            }
        }
        out
    }

    fn block_diag(&self, f: impl Fn(usize, &Range<usize>) -> Matrix) -> Matrix {
        let n = self.rep.dimension();
        let mut out = Matrix::zeros(n, n);
        for (i, (_, r)) in self.dec.blocks.iter().enumerate() {
            place(&mut out, r, r, &f(i, r));
        }
        out
    }

    fn x_block(&self, a: usize, r: &Range<usize>) -> Matrix {
        self.x[a].submatrix(r.clone(), r.clone())
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RelationCheck {
    pub relation: String,
    pub passed: bool,
    pub detail: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct KlrReport {
    pub params: HeckeParams,
    pub q0: String,
    pub dimension: usize,
    pub blocks: usize,
    pub checks: Vec<RelationCheck>,
    pub singular: Vec<String>,
}

impl KlrReport {
    pub fn passed(&self) -> bool {
        self.singular.is_empty() && self.checks.iter().all(|c| c.passed)
    }
}

struct Recorder(Vec<RelationCheck>);

impl Recorder {
    fn check(&mut self, relation: &str, failure: Option<String>) {
        self.0.push(RelationCheck { relation: relation.into(), passed: failure.is_none(), detail: failure });
    }
}

fn first_failure(items: impl IntoIterator<Item = (bool, String)>) -> Option<String> {
    items.into_iter().find(|(ok, _)| !ok).map(|(_, d)| d)
}

/// Builds the transform and checks every defining relation as a matrix identity.
///
/// # Errors
/// As [`KlrData::new`].
pub fn klr_relation_check(params: HeckeParams, q0: Q) -> Result<KlrReport> {
    let data = KlrData::new(params, q0.clone())?;
    let n = data.rep.dimension();
    let m = params.m();
    let mut rec = Recorder(Vec::new());
    let id = Matrix::identity(n);
    let big_x: Vec<Matrix> = data.rep.x.iter().map(|a| data.dec.conjugate(a)).collect();

    rec.check(
        "idempotents orthogonal and complete",
        (&data.dec.p_inv * &data.dec.p != id).then(|| "P⁻¹P ≠ 1".to_string()),
    );
    rec.check(
        "x_a e(k) = e(k) x_a",
        first_failure(big_x.iter().enumerate().map(|(a, xa)| {
            let diag = data.block_diag(|_, r| xa.submatrix(r.clone(), r.clone()));
            (&diag == xa, format!("X_{} mixes eigenspaces", a + 1))
        })),
    );
    rec.check(
        "x_a nilpotent",
        first_failure(data.x.iter().enumerate().map(|(a, xa)| (pow(xa, n as u32).is_zero(), format!("x_{}", a + 1)))),
    );
    rec.check(
        "x_a x_b = x_b x_a",
        first_failure((0..m).flat_map(|a| (0..m).map(move |b| (a, b))).map(|(a, b)| {
            (&data.x[a] * &data.x[b] == &data.x[b] * &data.x[a], format!("x_{} x_{}", a + 1, b + 1))
        })),
    );

    let taus: Vec<(usize, &Matrix)> = data.tau.iter().enumerate().filter_map(|(a, t)| t.as_ref().map(|t| (a, t))).collect();
    let swapped = |k: &[Q], a: usize| {
        let mut s = k.to_vec();
        s.swap(a, a + 1);
        s
    };

    let mut support = Vec::new();
    for &(a, t) in &taus {
        for (k, c) in &data.dec.blocks {
            let target = data.dec.find(&swapped(k, a));
            for (kr, r) in &data.dec.blocks {
                let blk = t.submatrix(r.clone(), c.clone());
                if !blk.is_zero() && target.map(|i| &data.dec.blocks[i].1) != Some(r) {
                    support.push((false, format!("τ_{} sends ({}) into ({})", a + 1, key(k), key(kr))));
                }
            }
        }
    }
    rec.check("τ_b e(k) = e(s_b k) τ_b", first_failure(support));

    rec.check(
        "τ_a τ_b = τ_b τ_a for |a - b| > 1",
        first_failure(taus.iter().flat_map(|&(a, ta)| {
            taus.iter()
                .filter(move |(b, _)| *b > a + 1)
                .map(move |&(b, tb)| (ta * tb == tb * ta, format!("τ_{} τ_{}", a + 1, b + 1)))
        })),
    );

    let q_of = |i: usize, a: usize, b: usize| data.quiver.q_polynomial(data.residues[i][a], data.residues[i][b]);

    rec.check(
        "τ_a² e(k) = Q(x_a, x_a+1) e(k)",
        first_failure(taus.iter().map(|&(a, t)| {
            let rhs = data.block_diag(|i, r| eval_q(&q_of(i, a, a + 1).0, &data.x_block(a, r), &data.x_block(a + 1, r)));
            (t * t == rhs, format!("τ_{}²", a + 1))
        })),
    );

    let mut commutation = Vec::new();
    for &(a, t) in &taus {
        for b in 0..m {
            let sb = if b == a {
                a + 1
            } else if b == a + 1 {
                a
            } else {
                b
            };
            let lhs = &(t * &data.x[b]) - &(&data.x[sb] * t);
            let rhs = data.block_diag(|i, r| {
                let k = &data.dec.blocks[i].0;
                let c = if k[a] != k[a + 1] {
                    Q::zero()
                } else if b == a {
                    -Q::one()
                } else if b == a + 1 {
                    Q::one()
                } else {
                    Q::zero()
                };
                Matrix::scalar(r.len(), &c)
            });
            commutation.push((lhs == rhs, format!("τ_{} x_{}", a + 1, b + 1)));
        }
    }
    rec.check("(τ_a x_b - x_s_a(b) τ_a) e(k)", first_failure(commutation));

    let mut braid = Vec::new();
    for &(a, ta) in &taus {
        let Some(Some(tb)) = data.tau.get(a + 1) else { continue };
        let lhs = &(&(tb * ta) * tb) - &(&(ta * tb) * ta);
        let rhs = data.block_diag(|i, r| {
            let k = &data.dec.blocks[i].0;
            if k[a] == k[a + 2] {
                difference_quotient(&q_of(i, a, a + 1).0, &data.x_block(a, r), &data.x_block(a + 1, r), &data.x_block(a + 2, r))
            } else {
                Matrix::zeros(r.len(), r.len())
            }
        });
        braid.push((lhs == rhs, format!("braid at τ_{}", a + 1)));
    }
    rec.check("τ_a+1 τ_a τ_a+1 - τ_a τ_a+1 τ_a", first_failure(braid));

    Ok(KlrReport {
        params,
        q0: q0.to_string(),
        dimension: n,
        blocks: data.dec.blocks.len(),
        checks: rec.0,
        singular: data.singular,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::q_int;

    #[test]
    fn rank_two_relations() {
        let report = klr_relation_check(HeckeParams::new(0, 0, 2, 0), q_int(3)).unwrap();
        assert_eq!(report.dimension, 8);
        for c in &report.checks {
            assert!(c.passed, "{c:?}");
        }
        assert!(report.singular.is_empty(), "{:?}", report.singular);
    }

    #[test]
    fn x_is_zero_when_semisimple() {
        let data = KlrData::new(HeckeParams::new(1, 0, 2, 0), q_int(3)).unwrap();
        assert!(data.x.iter().all(Matrix::is_zero));
    }
}
