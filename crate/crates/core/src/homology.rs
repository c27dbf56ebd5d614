//! Simplicial homology with `F_p` coefficients.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linear::is_prime;
use crate::simplicial::SimplicialComplex;

/// Dense matrix over `F_p`, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Boundary {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<u32>,
}

impl Boundary {
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.entries[r * self.cols + c]
    }

    /// Rank by Gaussian elimination mod `p`.
    pub fn rank(&self, p: u32) -> usize {
        let (rows, cols) = (self.rows, self.cols);
        let mut m: Vec<u64> = self.entries.iter().map(|&x| x as u64).collect();
        let p = p as u64;
        let mut rank = 0;
        for c in 0..cols {
            let Some(pivot) = (rank..rows).find(|&r| m[r * cols + c] != 0) else {
                continue;
            };
            for k in 0..cols {
                m.swap(pivot * cols + k, rank * cols + k);
            }
            let inv = pow_mod(m[rank * cols + c], p - 2, p);
            for k in c..cols {
                m[rank * cols + k] = m[rank * cols + k] * inv % p;
            }
            for r in (rank + 1)..rows {
                let f = m[r * cols + c];
                if f != 0 {
                    for k in c..cols {
                        m[r * cols + k] = (m[r * cols + k] + (p - f) * m[rank * cols + k]) % p;
                    }
                }
            }
            rank += 1;
            if rank == rows {
                break;
            }
        }
        rank
    }

    /// `self * other` mod `p`.
    pub fn mul(&self, other: &Boundary, p: u32) -> Boundary {
        let p = p as u64;
        let mut entries = vec![0u32; self.rows * other.cols];
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k) as u64;
                if a == 0 {
                    continue;
                }
                for c in 0..other.cols {
                    let e = &mut entries[r * other.cols + c];
                    *e = ((*e as u64 + a * other.get(k, c) as u64) % p) as u32;
                }
            }
        }
        Boundary { rows: self.rows, cols: other.cols, entries }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&x| x == 0)
    }
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

/// The simplicial chain complex of a complex over `F_p`.
#[derive(Debug, Clone)]
pub struct ChainComplex {
    pub p: u32,
    pub counts: Vec<usize>,
    /// `boundaries[k - 1]` is `d_k : C_k -> C_(k-1)`, for `k >= 1`.
    pub boundaries: Vec<Boundary>,
}

impl ChainComplex {
    pub fn new(k: &SimplicialComplex, p: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let counts = k.counts();
        let mut boundaries = Vec::new();
        for dim in 1..counts.len() {
            let (rows, cols) = (counts[dim - 1], counts[dim]);
            let mut entries = vec![0u32; rows * cols];
            for (c, s) in k.simplices(dim).iter().enumerate() {
                for skip in 0..s.len() {
                    let face: Vec<usize> = s.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &v)| v).collect();
                    let r = k.index_of(&face).expect("complexes are face-closed");
                    entries[r * cols + c] = if skip % 2 == 0 { 1 % p } else { p - 1 };
                }
            }
            boundaries.push(Boundary { rows, cols, entries });
        }
        Ok(ChainComplex { p, counts, boundaries })
    }

    /// `d_(k-1) d_k = 0` in every degree.
    pub fn squares_vanish(&self) -> bool {
        self.boundaries.windows(2).all(|w| w[0].mul(&w[1], self.p).is_zero())
    }

    /// `dim H_k = dim C_k - rank d_k - rank d_(k+1)`.
    pub fn betti(&self) -> Vec<usize> {
        let ranks: Vec<usize> = self.boundaries.iter().map(|b| b.rank(self.p)).collect();
        (0..self.counts.len())
            .map(|k| {
                let out = if k == 0 { 0 } else { ranks[k - 1] };
                let inc = ranks.get(k).copied().unwrap_or(0);
                self.counts[k] - out - inc
            })
            .collect()
    }
}

/// Betti numbers over `F_p` in degrees `0..=dim`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiVector {
    pub p: u32,
    pub betti: Vec<usize>,
}

pub fn betti(k: &SimplicialComplex, p: u32) -> Result<BettiVector> {
    Ok(BettiVector { p, betti: ChainComplex::new(k, p)?.betti() })
}

/// `Some(r)` when `k` has the `F_p` homology of `S^r`. Two points give `r = 0`
/// and the empty complex gives `r = -1`.
pub fn sphere_dimension_mod_p(k: &SimplicialComplex, p: u32) -> Result<Option<isize>> {
    if k.is_empty() {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        return Ok(Some(-1));
    }
    let b = betti(k, p)?.betti;
    let shape = |r: usize| b.iter().enumerate().all(|(i, &x)| x == expected_sphere(i, r));
    Ok((0..b.len()).find(|&r| shape(r)).map(|r| r as isize))
}

fn expected_sphere(i: usize, r: usize) -> usize {
    match (i, r) {
        (0, 0) => 2,
        (0, _) => 1,
        (i, r) if i == r => 1,
        _ => 0,
    }
}

/// Whether `k` is non-empty with the `F_p` homology of a point.
pub fn is_acyclic_mod_p(k: &SimplicialComplex, p: u32) -> Result<bool> {
    if k.is_empty() {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        return Ok(false);
    }
    let b = betti(k, p)?.betti;
    Ok(b[0] == 1 && b[1..].iter().all(|&x| x == 0))
}

pub fn euler_characteristic(k: &SimplicialComplex) -> i64 {
    k.counts().iter().enumerate().map(|(i, &c)| if i % 2 == 0 { c as i64 } else { -(c as i64) }).sum()
}
