//! Signed permutations, sign vectors and minimal coset representatives.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};

/// An element of the Weyl group of type B_m, as the images of `1..=m` in `±[m]`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SignedPerm(Vec<i32>);

impl SignedPerm {
    pub fn identity(m: usize) -> Self {
        SignedPerm((1..=m as i32).collect())
    }

    /// # Errors
    /// Fails unless the absolute values form a permutation of `1..=m`.
    pub fn new(images: Vec<i32>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &x in &images {
            let a = x.unsigned_abs() as usize;
            if a == 0 || a > images.len() || seen[a - 1] {
                return invalid(format!("{images:?} is not a signed permutation"));
            }
            seen[a - 1] = true;
        }
        Ok(SignedPerm(images))
    }

    /// Generator `s_0` (negate 1) or `s_i` (swap `i`, `i + 1`).
    pub fn generator(m: usize, i: usize) -> Self {
        let mut w = SignedPerm::identity(m);
        if i == 0 {
            w.0[0] = -1;
        } else {
            w.0.swap(i - 1, i);
        }
        w
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[i32] {
        &self.0
    }

    pub fn apply(&self, x: i32) -> i32 {
        let y = self.0[x.unsigned_abs() as usize - 1];
        if x < 0 {
            -y
        } else {
            y
        }
    }

    /// `self ∘ rhs`
    pub fn compose(&self, rhs: &SignedPerm) -> SignedPerm {
        SignedPerm(rhs.0.iter().map(|&x| self.apply(x)).collect())
    }

    pub fn inverse(&self) -> SignedPerm {
        let mut out = vec![0; self.0.len()];
        for (i, &y) in self.0.iter().enumerate() {
            let v = i as i32 + 1;
            out[y.unsigned_abs() as usize - 1] = if y < 0 { -v } else { v };
        }
        SignedPerm(out)
    }

    /// Coxeter length `inv(w) + Σ_{w(j) < 0} |w(j)|`.
    pub fn length(&self) -> usize {
        let w = &self.0;
        let mut inv = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    inv += 1;
                }
            }
        }
        inv + w.iter().filter(|x| **x < 0).map(|x| x.unsigned_abs() as usize).sum::<usize>()
    }

    /// A reduced word `[i_1, .., i_k]` with `self = s_{i_1} ⋯ s_{i_k}`.
    pub fn reduced_word(&self) -> Vec<usize> {
        let m = self.rank();
        let mut w = self.clone();
        let mut word = Vec::new();
        while w.length() > 0 {
            let i = (0..m)
                .find(|&i| SignedPerm::generator(m, i).compose(&w).length() < w.length())
                .expect("a nontrivial element has a left descent");
            word.push(i);
            w = SignedPerm::generator(m, i).compose(&w);
        }
        word
    }

    /// All `2^m m!` elements, sorted.
    pub fn all(m: usize) -> Vec<SignedPerm> {
        let mut out = Vec::new();
        for p in permutations(m) {
            for signs in 0..(1u32 << m) {
                let imgs = p
                    .iter()
                    .enumerate()
                    .map(|(k, &x)| if signs >> k & 1 == 1 { -(x as i32) } else { x as i32 })
                    .collect();
                out.push(SignedPerm(imgs));
            }
        }
        out.sort();
        out
    }
}

impl fmt::Display for SignedPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(i32::to_string).collect();
        write!(f, "[{}]", s.join(","))
    }
}

/// All permutations of `1..=m` in one-line notation, lexicographically.
pub fn permutations(m: usize) -> Vec<Vec<usize>> {
    fn go(cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for x in 0..used.len() {
            if !used[x] {
                used[x] = true;
                cur.push(x + 1);
                go(cur, used, out);
                cur.pop();
                used[x] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; m], &mut out);
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SignVector(pub Vec<Sign>);

impl SignVector {
    /// `ν₀ = (+, …, +, -, …, -)`.
    pub fn base(m_plus: usize, m_minus: usize) -> Self {
        let mut v = vec![Sign::Plus; m_plus];
        v.extend(vec![Sign::Minus; m_minus]);
        SignVector(v)
    }

    pub fn counts(&self) -> (usize, usize) {
        let p = self.0.iter().filter(|s| **s == Sign::Plus).count();
        (p, self.0.len() - p)
    }

    /// `w·ν = (ν_{w⁻¹(1)}, …, ν_{w⁻¹(m)})` for `w` in one-line notation.
    pub fn act(&self, w: &[usize]) -> SignVector {
        let mut out = self.0.clone();
        for (i, &wi) in w.iter().enumerate() {
            out[wi - 1] = self.0[i];
        }
        SignVector(out)
    }
}

impl fmt::Display for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            write!(f, "{}", if *s == Sign::Plus { '+' } else { '-' })?;
        }
        Ok(())
    }
}

impl std::str::FromStr for SignVector {
    type Err = crate::Error;
    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                '+' => Ok(Sign::Plus),
                '-' => Ok(Sign::Minus),
                _ => invalid(format!("bad sign {c:?}")),
            })
            .collect::<Result<Vec<_>>>()
            .map(SignVector)
    }
}

/// The set `𝕁_{m+,m-}` of sign vectors with `m+` pluses and `m-` minuses.
pub fn jm_set(m_plus: usize, m_minus: usize) -> Vec<SignVector> {
    let m = m_plus + m_minus;
    let mut out = Vec::new();
    for mask in 0..(1u64 << m) {
        if mask.count_ones() as usize == m_minus {
            out.push(SignVector((0..m).map(|i| if mask >> i & 1 == 1 { Sign::Minus } else { Sign::Plus }).collect()));
        }
    }
    out.sort();
    out
}

/// The minimal-length `π_ν ∈ S_m` with `π_ν·ν = ν₀`: it sends the pluses of `ν`,
/// in order, to `1..=m+` and the minuses to `m+ + 1..=m`.
pub fn pi_nu(nu: &SignVector) -> Vec<usize> {
    let (mp, _) = nu.counts();
    let (mut next_plus, mut next_minus) = (1, mp + 1);
    nu.0.iter()
        .map(|s| match s {
            Sign::Plus => {
                next_plus += 1;
                next_plus - 1
            }
            Sign::Minus => {
                next_minus += 1;
                next_minus - 1
            }
        })
        .collect()
}

/// `ℓ(π_ν) = #{i < j : ν_i = -, ν_j = +}`.
pub fn pi_length(nu: &SignVector) -> usize {
    let mut minus_seen = 0;
    let mut len = 0;
    for s in &nu.0 {
        match s {
            Sign::Minus => minus_seen += 1,
            Sign::Plus => len += minus_seen,
        }
    }
    len
}

/// Number of inversions of a permutation in one-line notation.
pub fn inversions(w: &[usize]) -> usize {
    (0..w.len()).flat_map(|i| (i + 1..w.len()).map(move |j| (i, j))).filter(|&(i, j)| w[i] > w[j]).count()
}
