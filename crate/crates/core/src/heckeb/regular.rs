//! The left regular representation at a rational value `q₀` and the joint
//! generalized eigenspaces of the `X`-generators.

use std::collections::BTreeMap;
use std::ops::Range;

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::algebra::{Generator, HeckeParams, WeylBWord};
use super::weyl::SignedPerm;
use crate::error::{invalid, Error, Result};
use crate::linalg::Matrix;
use crate::poly::{q_int, q_pow, Q};
use crate::quiver::{QuiverVertex, Side};

pub struct RegularRep {
    pub params: HeckeParams,
    pub q0: Q,
    pub basis: Vec<WeylBWord>,
    gens: BTreeMap<Generator, Matrix>,
    /// `X_1, …, X_{m+}, X'_1, …, X'_{m-}`
    pub x: Vec<Matrix>,
}

/// Left-multiplication matrix of `T_{s_i}` on the basis `ws` of one factor.
fn factor_generator(ws: &[SignedPerm], i: usize, big_q: &Q) -> Matrix {
    let index: BTreeMap<&SignedPerm, usize> = ws.iter().enumerate().map(|(k, w)| (w, k)).collect();
    let m = ws.first().map_or(0, SignedPerm::rank);
    let s = SignedPerm::generator(m, i);
    let mut out = Matrix::zeros(ws.len(), ws.len());
    for (col, w) in ws.iter().enumerate() {
        let sw = s.compose(w);
        let row = index[&sw];
        if sw.length() > w.length() {
            out.set(row, col, Q::one());
        } else {
            out.set(col, col, big_q - Q::one());
            out.set(row, col, big_q.clone());
        }
    }
    out
}

impl RegularRep {
    /// # Errors
    /// Fails when `q₀ = 0`, where the generators are not invertible.
    pub fn new(params: HeckeParams, q0: Q) -> Result<Self> {
        if q0.is_zero() {
            return invalid("the regular representation needs q0 != 0");
        }
        let ws_p = SignedPerm::all(params.m_plus);
        let ws_m = SignedPerm::all(params.m_minus);
        let (np, nm) = (ws_p.len(), ws_m.len());
        let basis = ws_p.iter().flat_map(|a| ws_m.iter().map(move |b| (a.clone(), b.clone()))).collect();
        let mut gens = BTreeMap::new();
        let mut x = Vec::new();
        for (side, ws) in [(Side::Unprimed, &ws_p), (Side::Primed, &ws_m)] {
            let m = params.rank_of(side);
            let t = params.t_of(side);
            let mut local = Vec::new();
            for idx in 1..=m {
                let g = Generator { side, index: idx };
                let big_q = q_pow(&q0, params.parameter_exponent(g));
                local.push(factor_generator(ws, idx - 1, &big_q));
            }
            let embed = |a: &Matrix| match side {
                Side::Unprimed => a.kron(&Matrix::identity(nm)),
                Side::Primed => Matrix::identity(np).kron(a),
            };
            if m > 0 {
                let sign = if t.rem_euclid(2) == 0 { Q::one() } else { -Q::one() };
                let mut xk = local[0].scale(&(sign * q_pow(&q0, -t - 1)));
                x.push(embed(&xk));
                for k in 1..m {
                    xk = (&(&local[k] * &xk) * &local[k]).scale(&q0.recip());
                    x.push(embed(&xk));
                }
            }
            for (idx, a) in local.iter().enumerate() {
                gens.insert(Generator { side, index: idx + 1 }, embed(a));
            }
        }
        Ok(RegularRep { params, q0, basis, gens, x })
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn generator(&self, g: Generator) -> &Matrix {
        &self.gens[&g]
    }

    pub fn generators(&self) -> impl Iterator<Item = (&Generator, &Matrix)> {
        self.gens.iter()
    }

    /// Side of the `X`-generator at position `a` (0-based).
    pub fn side_of(&self, a: usize) -> Side {
        if a < self.params.m_plus {
            Side::Unprimed
        } else {
            Side::Primed
        }
    }

    /// The swap generator `T_a` exchanging positions `a` and `a + 1` (0-based), if
    /// both lie in the same factor.
    pub fn swap_generator(&self, a: usize) -> Option<&Matrix> {
        let mp = self.params.m_plus;
        if a + 1 < mp {
            Some(self.generator(Generator::v(a + 2)))
        } else if a >= mp && a + 1 < self.params.m() {
            Some(self.generator(Generator::u(a - mp + 2)))
        } else {
            None
        }
    }

    /// Permutation matrix of the anti-involution `T_w ↦ T_{w⁻¹}`.
    pub fn involution(&self) -> Matrix {
        let index: BTreeMap<&WeylBWord, usize> = self.basis.iter().enumerate().map(|(k, w)| (w, k)).collect();
        let mut j = Matrix::zeros(self.dimension(), self.dimension());
        for (k, (a, b)) in self.basis.iter().enumerate() {
            let inv = (a.inverse(), b.inverse());
            j.set(index[&inv], k, Q::one());
        }
        j
    }

    /// Failures among the defining relations, as readable strings.
    pub fn relation_failures(&self) -> Vec<String> {
        let n = self.dimension();
        let id = Matrix::identity(n);
        let mut fails = Vec::new();
        for (g, t) in &self.gens {
            let big_q = q_pow(&self.q0, self.params.parameter_exponent(*g));
            let lhs = &(t - &Matrix::scalar(n, &big_q)) * &(t + &id);
            if !lhs.is_zero() {
                fails.push(format!("quadratic relation of {g:?}"));
            }
        }
        for (g, a) in &self.gens {
            for (h, b) in &self.gens {
                if g >= h {
                    continue;
                }
                let ab = a * b;
                let ba = b * a;
                let order = if g.side != h.side || g.index.abs_diff(h.index) > 1 {
                    2
                } else if g.index == 1 || h.index == 1 {
                    4
                } else {
                    3
                };
                let word = |x: &Matrix, y: &Matrix| {
                    let mut p = Matrix::identity(n);
                    for k in 0..order {
                        p = &p * if k % 2 == 0 { x } else { y };
                    }
                    p
                };
                let ok = if order == 2 { ab == ba } else { word(a, b) == word(b, a) };
                if !ok {
                    fails.push(format!("braid relation of order {order} between {g:?} and {h:?}"));
                }
            }
        }
        fails
    }
}

/// Spectrum of a matrix: distinct eigenvalues with algebraic multiplicity in the
/// minimal polynomial.
///
/// # Errors
/// `Unsupported` when the minimal polynomial has an irrational root.
pub fn spectrum(a: &Matrix) -> Result<Vec<(Q, usize)>> {
    let mp = a.minimal_polynomial();
    let roots = mp.rational_roots()?;
    let found: usize = roots.iter().map(|r| r.1).sum();
    if Some(found) != mp.degree() {
        return Err(Error::Unsupported(format!("minimal polynomial {mp:?} has irrational roots")));
    }
    Ok(roots)
}

/// The quiver vertex `sign·q₀^k` of an eigenvalue, on the given side.
pub fn eigen_vertex(value: &Q, q0: &Q, side: Side) -> Option<QuiverVertex> {
    if value.is_zero() || !q0.is_positive() || q0.is_one() {
        return None;
    }
    let sign = if value.is_negative() { -1 } else { 1 };
    let a = value.abs();
    (-64..=64).find(|&k| q_pow(q0, k) == a).map(|k| QuiverVertex::new(side, sign, k))
}

/// Simultaneous generalized eigenspaces of commuting matrices.
pub struct JointDecomposition {
    /// Eigenvalue tuple and the columns of `p` spanning its space.
    pub blocks: Vec<(Vec<Q>, Range<usize>)>,
    pub p: Matrix,
    pub p_inv: Matrix,
}

impl JointDecomposition {
    /// # Errors
    /// `Unsupported` when some eigenvalue is irrational.
    pub fn new(n: usize, ops: &[Matrix]) -> Result<Self> {
        let mut states: Vec<(Vec<Q>, Matrix)> = vec![(Vec::new(), Matrix::identity(n))];
        for a in ops {
            let mut next = Vec::new();
            for (prefix, b) in states {
                let rows = b.independent_rows();
                let b_r = b.select_rows(&rows);
                let b_r_inv = b_r.inverse().expect("independent rows form an invertible block");
                let c = &b_r_inv * &(a * &b).select_rows(&rows);
                for (lambda, mult) in spectrum(&c)? {
                    let shifted = &c - &Matrix::scalar(c.rows(), &lambda);
                    let mut pw = Matrix::identity(c.rows());
                    for _ in 0..mult {
                        pw = &pw * &shifted;
                    }
                    let k = pw.kernel();
                    let mut key = prefix.clone();
                    key.push(lambda);
                    next.push((key, &b * &k));
                }
            }
            states = next;
        }
        let mut blocks = Vec::new();
        let mut start = 0;
        for (key, b) in &states {
            blocks.push((key.clone(), start..start + b.cols()));
            start += b.cols();
        }
        let p = Matrix::hcat(&states.into_iter().map(|s| s.1).collect::<Vec<_>>());
        let p_inv = p.inverse().ok_or_else(|| Error::Unsupported("eigenspaces do not span".into()))?;
        Ok(JointDecomposition { blocks, p, p_inv })
    }

    /// `P⁻¹ A P`
    pub fn conjugate(&self, a: &Matrix) -> Matrix {
        &(&self.p_inv * a) * &self.p
    }

    /// Index of the block with eigenvalue tuple `k`.
    pub fn find(&self, k: &[Q]) -> Option<usize> {
        self.blocks.iter().position(|(key, _)| key == k)
    }

    /// The idempotent `e(k̄)` of block `i` in the original basis.
    pub fn idempotent(&self, i: usize) -> Matrix {
        let r = &self.blocks[i].1;
        let n = self.p.rows();
        let cols = self.p.submatrix(0..n, r.clone());
        let rows = self.p_inv.submatrix(r.clone(), 0..n);
        &cols * &rows
    }
}

/// Spectrum of one `X`-generator against the expected pair of eigenvalues.
#[derive(Clone, Debug, Serialize)]
pub struct SpectrumLine {
    pub generator: String,
    /// `(eigenvalue, multiplicity in the minimal polynomial)`
    pub observed: Vec<(String, usize)>,
    pub expected: Vec<String>,
    pub passed: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct EigenvalueReport {
    pub params: HeckeParams,
    pub q0: String,
    pub dimension: usize,
    pub lines: Vec<SpectrumLine>,
}

impl EigenvalueReport {
    pub fn passed(&self) -> bool {
        self.lines.iter().all(|l| l.passed)
    }
}

/// Compares the spectrum of `X_1` (and `X'_1`) with `{(-q₀)^t, (-q₀)^{-1-t}}`.
///
/// # Errors
/// As [`RegularRep::new`] and [`spectrum`].
pub fn hecke_eigenvalue_check(params: HeckeParams, q0: Q) -> Result<EigenvalueReport> {
    let rep = RegularRep::new(params, q0.clone())?;
    let minus_q = -q0.clone();
    let mut lines = Vec::new();
    for (name, pos, m, t) in [("X1", 0, params.m_plus, params.t_plus), ("X1'", params.m_plus, params.m_minus, params.t_minus)] {
        if m == 0 {
            continue;
        }
        let sp = spectrum(&rep.x[pos])?;
        let mut expected = vec![q_pow(&minus_q, t), q_pow(&minus_q, -1 - t)];
        expected.sort();
        let mut seen: Vec<Q> = sp.iter().map(|(v, _)| v.clone()).collect();
        seen.sort();
        lines.push(SpectrumLine {
            generator: name.to_string(),
            observed: sp.iter().map(|(v, k)| (v.to_string(), *k)).collect(),
            expected: expected.iter().map(Q::to_string).collect(),
            passed: seen == expected,
        });
    }
    Ok(EigenvalueReport { params, q0: q0.to_string(), dimension: rep.dimension(), lines })
}

pub fn q_frac(n: i64, d: i64) -> Q {
    q_int(n) / q_int(d)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_one_example() {
        let rep = RegularRep::new(HeckeParams::new(0, 0, 1, 0), q_int(3)).unwrap();
        assert_eq!(rep.dimension(), 2);
        let t = rep.generator(Generator::v(1));
        let id = Matrix::identity(2);
        assert_eq!(&(t * t), &(&t.scale(&q_int(2)) + &id.scale(&q_int(3))));
        let sp = spectrum(&rep.x[0]).unwrap();
        assert_eq!(sp, vec![(q_frac(-1, 3), 1), (q_int(1), 1)]);
        let dec = JointDecomposition::new(rep.dimension(), &rep.x).unwrap();
        assert_eq!(dec.blocks.len(), 2);
        for i in 0..2 {
            assert_eq!(dec.idempotent(i).rank(), 1);
        }
        assert!((&dec.idempotent(0) * &dec.idempotent(1)).is_zero());
        assert_eq!(&dec.idempotent(0) + &dec.idempotent(1), id);
    }

    #[test]
    fn relations_hold_and_dimensions() {
        let rep = RegularRep::new(HeckeParams::new(1, 0, 2, 1), q_int(3)).unwrap();
        assert_eq!(rep.dimension(), 16);
        assert!(rep.relation_failures().is_empty());
        for (_, t) in rep.generators() {
            assert!(t.inverse().is_some());
        }
        for a in &rep.x {
            for b in &rep.x {
                assert_eq!(a * b, b * a);
            }
        }
    }

    #[test]
    fn x1_spectrum_for_t_one() {
        let r = hecke_eigenvalue_check(HeckeParams::new(1, 0, 1, 1), q_int(3)).unwrap();
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.lines[0].expected, vec!["-3".to_string(), "1/9".to_string()]);
        assert_eq!(r.lines.len(), 2);
    }

    #[test]
    fn eigen_vertices() {
        let q0 = q_int(3);
        assert_eq!(eigen_vertex(&q_int(-27), &q0, Side::Primed), Some(QuiverVertex::new(Side::Primed, -1, 3)));
        assert_eq!(eigen_vertex(&q_frac(1, 9), &q0, Side::Unprimed), Some(QuiverVertex::new(Side::Unprimed, 1, -2)));
        assert_eq!(eigen_vertex(&q_int(1), &q0, Side::Unprimed), Some(QuiverVertex::new(Side::Unprimed, 1, 0)));
        assert_eq!(eigen_vertex(&q_int(2), &q0, Side::Unprimed), None);
    }
}
