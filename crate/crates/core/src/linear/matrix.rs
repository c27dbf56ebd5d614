use std::fmt;

use crate::aut::Endo;
use crate::error::{Error, Result};
use crate::group::GroupElement;

pub fn is_prime(p: u32) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

/// Square integer matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntMatrix {
    n: usize,
    entries: Vec<i64>,
}

impl IntMatrix {
    pub fn identity(n: usize) -> Self {
        let mut entries = vec![0; n * n];
        for i in 0..n {
            entries[i * n + i] = 1;
        }
        IntMatrix { n, entries }
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidMatrix("rows must all have length equal to the row count".into()));
        }
        Ok(IntMatrix { n, entries: rows.into_iter().flatten().collect() })
    }

    pub fn diag(d: &[i64]) -> Self {
        let mut m = IntMatrix::identity(d.len());
        for (i, &x) in d.iter().enumerate() {
            m.entries[i * d.len() + i] = x;
        }
        m
    }

    /// Parses `1 2;0 1`.
    pub fn parse(s: &str) -> Result<Self> {
        let rows = s
            .split(';')
            .map(|row| {
                row.split_whitespace()
                    .map(|x| x.parse::<i64>().map_err(|_| Error::Parse(format!("bad matrix entry `{x}`"))))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        IntMatrix::from_rows(rows)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Entry at row `i`, column `j`, both 1-based.
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[(i - 1) * self.n + (j - 1)]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.entries.chunks(self.n.max(1)).map(<[i64]>::to_vec).collect()
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.n != other.n {
            return Err(Error::RankMismatch { left: self.n, right: other.n });
        }
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &IntMatrix) -> IntMatrix {
        let n = self.n;
        let mut entries = vec![0; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.entries[i * n + k];
                if a != 0 {
                    for j in 0..n {
                        entries[i * n + j] += a * other.entries[k * n + j];
                    }
                }
            }
        }
        IntMatrix { n, entries }
    }

    pub fn neg(&self) -> IntMatrix {
        IntMatrix { n: self.n, entries: self.entries.iter().map(|x| -x).collect() }
    }

    pub fn is_identity(&self) -> bool {
        *self == IntMatrix::identity(self.n)
    }

    /// Equality modulo the centre `{I, -I}`.
    pub fn eq_up_to_sign(&self, other: &IntMatrix) -> bool {
        self == other || *self == other.neg()
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> i64 {
        let n = self.n;
        if n == 0 {
            return 1;
        }
        let mut a: Vec<i128> = self.entries.iter().map(|&x| x as i128).collect();
        let mut sign = 1i128;
        let mut prev = 1i128;
        for k in 0..n - 1 {
            if a[k * n + k] == 0 {
                let Some(r) = (k + 1..n).find(|&r| a[r * n + k] != 0) else {
                    return 0;
                };
                for j in 0..n {
                    a.swap(k * n + j, r * n + j);
                }
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    a[i * n + j] = (a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j]) / prev;
                }
            }
            prev = a[k * n + k];
        }
        (sign * a[n * n - 1]) as i64
    }

    pub fn mod_p(&self, p: u32) -> Result<ModPMatrix> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let entries = self.entries.iter().map(|&x| x.rem_euclid(p as i64) as u32).collect();
        Ok(ModPMatrix { n: self.n, p, entries })
    }

    /// Inverse of a matrix with determinant `±1`, via the adjugate.
    pub fn unimodular_inverse(&self) -> Option<IntMatrix> {
        let n = self.n;
        let d = self.det();
        if d != 1 && d != -1 {
            return None;
        }
        let mut entries = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                let minor: Vec<i64> = (0..n)
                    .filter(|&r| r != i)
                    .flat_map(|r| (0..n).filter(|&c| c != j).map(move |c| (r, c)))
                    .map(|(r, c)| self.entries[r * n + c])
                    .collect();
                let cof = IntMatrix { n: n - 1, entries: minor }.det();
                let sign = if (i + j) % 2 == 0 { 1 } else { -1 };
                entries[j * n + i] = sign * cof * d;
            }
        }
        Some(IntMatrix { n, entries })
    }

    /// `A B A^-1 B^-1` for unimodular `A`, `B`.
    pub fn commutator(&self, other: &IntMatrix) -> Result<IntMatrix> {
        let not_unimodular = || Error::InvalidMatrix("commutator needs determinant +-1".into());
        let ai = self.unimodular_inverse().ok_or_else(not_unimodular)?;
        let bi = other.unimodular_inverse().ok_or_else(not_unimodular)?;
        self.mul(other)?.mul(&ai)?.mul(&bi)
    }
}

impl GroupElement for IntMatrix {
    fn op(&self, other: &Self) -> Self {
        self.mul_unchecked(other)
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows()
            .iter()
            .map(|r| r.iter().map(i64::to_string).collect::<Vec<_>>().join(" "))
            .collect();
        f.write_str(&rows.join(";"))
    }
}

/// Entry `(i, j)` is the exponent sum of `a_j` in the image of `a_i`, so
/// `abelianize(f g) = abelianize(f) * abelianize(g)`.
pub fn abelianize(f: &Endo) -> IntMatrix {
    let n = f.rank();
    let entries = f.images().iter().flat_map(|w| w.exponent_sums()).collect();
    IntMatrix { n, entries }
}

/// Square matrix over `F_p`, row-major with entries in `0..p`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ModPMatrix {
    n: usize,
    p: u32,
    entries: Vec<u32>,
}

impl ModPMatrix {
    pub fn identity(n: usize, p: u32) -> Self {
        let mut entries = vec![0; n * n];
        for i in 0..n {
            entries[i * n + i] = 1;
        }
        ModPMatrix { n, p, entries }
    }

    pub fn from_rows(rows: Vec<Vec<i64>>, p: u32) -> Result<Self> {
        IntMatrix::from_rows(rows)?.mod_p(p)
    }

    pub fn parse(s: &str, p: u32) -> Result<Self> {
        IntMatrix::parse(s)?.mod_p(p)
    }

    /// Identity plus `1` at row `i`, column `j` (1-based).
    pub fn elementary(i: usize, j: usize, n: usize, p: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if i == j {
            return Err(Error::InvalidMatrix(format!("elementary matrix needs i != j, got ({i},{j})")));
        }
        if i == 0 || j == 0 || i > n || j > n {
            return Err(Error::IndexOutOfRange { index: i.max(j), rank: n });
        }
        let mut m = ModPMatrix::identity(n, p);
        m.entries[(i - 1) * n + (j - 1)] = 1 % p;
        Ok(m)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.entries[(i - 1) * self.n + (j - 1)]
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn mul(&self, other: &ModPMatrix) -> Result<ModPMatrix> {
        if self.n != other.n || self.p != other.p {
            return Err(Error::InvalidMatrix("matrices over different rings or sizes".into()));
        }
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &ModPMatrix) -> ModPMatrix {
        let (n, p) = (self.n, self.p as u64);
        let mut entries = vec![0u32; n * n];
        for i in 0..n {
            for j in 0..n {
                let mut acc = 0u64;
                for k in 0..n {
                    acc += self.entries[i * n + k] as u64 * other.entries[k * n + j] as u64;
                }
                entries[i * n + j] = (acc % p) as u32;
            }
        }
        ModPMatrix { n, p: self.p, entries }
    }

    pub fn is_identity(&self) -> bool {
        *self == ModPMatrix::identity(self.n, self.p)
    }

    pub fn det(&self) -> u32 {
        let (n, p) = (self.n, self.p as u64);
        let mut a: Vec<u64> = self.entries.iter().map(|&x| x as u64).collect();
        let mut det = 1u64;
        for k in 0..n {
            let Some(r) = (k..n).find(|&r| a[r * n + k] != 0) else {
                return 0;
            };
            if r != k {
                for j in 0..n {
                    a.swap(k * n + j, r * n + j);
                }
                det = (p - det) % p;
            }
            let pivot = a[k * n + k];
            det = det * pivot % p;
            let inv = mod_inverse(pivot, p);
            for i in k + 1..n {
                let factor = a[i * n + k] * inv % p;
                for j in k..n {
                    a[i * n + j] = (a[i * n + j] + p * p - factor * a[k * n + j] % p) % p;
                }
            }
        }
        det as u32
    }

    /// Gauss-Jordan inverse; `None` when singular.
    pub fn inverse(&self) -> Option<ModPMatrix> {
        let (n, p) = (self.n, self.p as u64);
        let w = 2 * n;
        let mut a = vec![0u64; n * w];
        for i in 0..n {
            for j in 0..n {
                a[i * w + j] = self.entries[i * n + j] as u64;
            }
            a[i * w + n + i] = 1;
        }
        for k in 0..n {
            let r = (k..n).find(|&r| a[r * w + k] != 0)?;
            for j in 0..w {
                a.swap(k * w + j, r * w + j);
            }
            let inv = mod_inverse(a[k * w + k], p);
            for j in 0..w {
                a[k * w + j] = a[k * w + j] * inv % p;
            }
            for i in (0..n).filter(|&i| i != k) {
                let factor = a[i * w + k];
                if factor != 0 {
                    for j in 0..w {
                        a[i * w + j] = (a[i * w + j] + p * p - factor * a[k * w + j] % p) % p;
                    }
                }
            }
        }
        let entries = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .map(|(i, j)| a[i * w + n + j] as u32)
            .collect();
        Some(ModPMatrix { n, p: self.p, entries })
    }
}

fn mod_inverse(x: u64, p: u64) -> u64 {
    // p is prime: x^(p-2)
    let (mut base, mut exp, mut acc) = (x % p, p - 2, 1u64);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

impl GroupElement for ModPMatrix {
    fn op(&self, other: &Self) -> Self {
        self.mul_unchecked(other)
    }
}

impl fmt::Display for ModPMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .entries
            .chunks(self.n.max(1))
            .map(|r| r.iter().map(u32::to_string).collect::<Vec<_>>().join(" "))
            .collect();
        f.write_str(&rows.join(";"))
    }
}
