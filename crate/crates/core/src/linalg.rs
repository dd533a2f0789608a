//! Dense matrices over ℚ.

use std::ops::{Add, Mul, Sub};

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::poly::{Poly, Q};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Q>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Q::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Q::one();
        }
        m
    }

    pub fn scalar(n: usize, c: &Q) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = c.clone();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> Q) -> Self {
        let data = (0..rows * cols).map(|k| f(k / cols, k % cols)).collect();
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Q {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Q) {
        self.data[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: &Q) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a * c).collect() }
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn trace(&self) -> Q {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i).clone()).fold(Q::zero(), |a, b| a + b)
    }

    /// Kronecker product.
    pub fn kron(&self, rhs: &Matrix) -> Matrix {
        let (r, c) = (self.rows * rhs.rows, self.cols * rhs.cols);
        Matrix::from_fn(r, c, |i, j| {
            self.get(i / rhs.rows, j / rhs.cols) * rhs.get(i % rhs.rows, j % rhs.cols)
        })
    }

    pub fn rank(&self) -> usize {
        let mut m: Vec<Vec<Q>> = self.data.chunks(self.cols.max(1)).map(<[Q]>::to_vec).collect();
        if self.cols == 0 {
            return 0;
        }
        let mut rank = 0;
        for col in 0..self.cols {
            let Some(p) = (rank..self.rows).find(|&r| !m[r][col].is_zero()) else {
                continue;
            };
            m.swap(rank, p);
            let inv = m[rank][col].recip();
            let pivot: Vec<Q> = m[rank].iter().map(|x| x * &inv).collect();
            for r in 0..self.rows {
                if r != rank && !m[r][col].is_zero() {
                    let f = m[r][col].clone();
                    for (x, y) in m[r].iter_mut().zip(&pivot).skip(col) {
                        *x -= &f * y;
                    }
                }
            }
            m[rank] = pivot;
            rank += 1;
            if rank == self.rows {
                break;
            }
        }
        rank
    }

    /// Inverse, if the matrix is square and nonsingular.
    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut a: Vec<Vec<Q>> = (0..n)
            .map(|i| {
                let mut row: Vec<Q> = self.data[i * n..(i + 1) * n].to_vec();
                row.extend((0..n).map(|j| if i == j { Q::one() } else { Q::zero() }));
                row
            })
            .collect();
        for col in 0..n {
            let p = (col..n).find(|&r| !a[r][col].is_zero())?;
            a.swap(col, p);
            let inv = a[col][col].recip();
            for x in a[col].iter_mut() {
                *x *= &inv;
            }
            let pivot = a[col].clone();
            for r in 0..n {
                if r != col && !a[r][col].is_zero() {
                    let f = a[r][col].clone();
                    for (x, y) in a[r].iter_mut().zip(&pivot) {
                        *x -= &f * y;
                    }
                }
            }
        }
        Some(Matrix::from_fn(n, n, |i, j| a[i][n + j].clone()))
    }

    /// Columns spanning the kernel, one per free variable of the reduced echelon
    /// form; each has a 1 at its free position and 0 at the other free positions.
    pub fn kernel(&self) -> Matrix {
        let mut m: Vec<Vec<Q>> = (0..self.rows).map(|i| self.data[i * self.cols..(i + 1) * self.cols].to_vec()).collect();
        let mut pivots = Vec::new();
        let mut r = 0;
        for col in 0..self.cols {
            let Some(p) = (r..self.rows).find(|&i| !m[i][col].is_zero()) else {
                continue;
            };
            m.swap(r, p);
            let inv = m[r][col].recip();
            for x in m[r].iter_mut() {
                *x *= &inv;
            }
            let pivot = m[r].clone();
            for i in 0..self.rows {
                if i != r && !m[i][col].is_zero() {
                    let f = m[i][col].clone();
                    for (x, y) in m[i].iter_mut().zip(&pivot) {
                        *x -= &f * y;
                    }
                }
            }
            pivots.push(col);
            r += 1;
            if r == self.rows {
                break;
            }
        }
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut k = Matrix::zeros(self.cols, free.len());
        for (j, &f) in free.iter().enumerate() {
            k.set(f, j, Q::one());
            for (i, &pc) in pivots.iter().enumerate() {
                k.set(pc, j, -m[i][f].clone());
            }
        }
        k
    }

    /// Indices of a maximal set of linearly independent rows, in order.
    pub fn independent_rows(&self) -> Vec<usize> {
        let mut basis: Vec<(usize, Vec<Q>)> = Vec::new();
        let mut out = Vec::new();
        for i in 0..self.rows {
            let mut v = self.data[i * self.cols..(i + 1) * self.cols].to_vec();
            for (piv, row) in &basis {
                if !v[*piv].is_zero() {
                    let f = v[*piv].clone();
                    for (x, y) in v.iter_mut().zip(row) {
                        *x -= &f * y;
                    }
                }
            }
            if let Some(piv) = v.iter().position(|x| !x.is_zero()) {
                let inv = v[piv].recip();
                basis.push((piv, v.iter().map(|x| x * &inv).collect()));
                out.push(i);
            }
        }
        out
    }

    pub fn select_rows(&self, rows: &[usize]) -> Matrix {
        Matrix::from_fn(rows.len(), self.cols, |i, j| self.get(rows[i], j).clone())
    }

    pub fn submatrix(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> Matrix {
        let (r0, c0) = (rows.start, cols.start);
        Matrix::from_fn(rows.len(), cols.len(), |i, j| self.get(r0 + i, c0 + j).clone())
    }

    /// Columns of the given matrices side by side.
    pub fn hcat(parts: &[Matrix]) -> Matrix {
        let rows = parts.first().map_or(0, |m| m.rows);
        let cols = parts.iter().map(|m| m.cols).sum();
        let mut out = Matrix::zeros(rows, cols);
        let mut c0 = 0;
        for m in parts {
            for i in 0..rows {
                for j in 0..m.cols {
                    out.set(i, c0 + j, m.get(i, j).clone());
                }
            }
            c0 += m.cols;
        }
        out
    }

    /// `p(self)` by Horner's rule.
    pub fn eval_poly(&self, p: &Poly) -> Matrix {
        let n = self.rows;
        let mut acc = Matrix::zeros(n, n);
        for c in p.coeffs().iter().rev() {
            acc = &(&acc * self) + &Matrix::scalar(n, c);
        }
        acc
    }

    /// Minimal polynomial, found as the first linear dependence among powers.
    pub fn minimal_polynomial(&self) -> Poly {
        let n = self.rows;
        // Reduced echelon rows of the powers seen so far, each carrying the
        // combination of powers it came from.
        let mut basis: Vec<(usize, Vec<Q>, Vec<Q>)> = Vec::new();
        let mut power = Matrix::identity(n);
        for k in 0..=n {
            let mut v = power.data.clone();
            let mut comb = vec![Q::zero(); k + 1];
            comb[k] = Q::one();
            for (piv, row, c) in &basis {
                if !v[*piv].is_zero() {
                    let f = v[*piv].clone();
                    for (x, y) in v.iter_mut().zip(row) {
                        *x -= &f * y;
                    }
                    for (x, y) in comb.iter_mut().zip(c) {
                        *x -= &f * y;
                    }
                }
            }
            match v.iter().position(|x| !x.is_zero()) {
                None => return Poly::new(comb).monic(),
                Some(piv) => {
                    let inv = v[piv].recip();
                    let v: Vec<Q> = v.iter().map(|x| x * &inv).collect();
                    let c: Vec<Q> = comb.iter().map(|x| x * &inv).collect();
                    basis.push((piv, v, c));
                }
            }
            power = &power * self;
        }
        unreachable!("Cayley-Hamilton bounds the degree by n")
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect() }
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect() }
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows);
        let (n, m) = (self.cols, rhs.cols);
        let data: Vec<Q> = (0..self.rows)
            .into_par_iter()
            .flat_map_iter(|i| {
                let mut row = vec![Q::zero(); m];
                for k in 0..n {
                    let a = &self.data[i * n + k];
                    if a.is_zero() {
                        continue;
                    }
                    for (x, b) in row.iter_mut().zip(&rhs.data[k * m..(k + 1) * m]) {
                        if !b.is_zero() {
                            *x += a * b;
                        }
                    }
                }
                row
            })
            .collect();
        Matrix { rows: self.rows, cols: m, data }
    }
}
