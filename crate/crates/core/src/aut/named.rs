use std::fmt;

use crate::error::{Error, Result};
use crate::freegroup::{pa, pb, Letter, Word};

use super::Endo;

/// A permutation of `1..=n`, stored as `images[k - 1] = sigma(k)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { images: (1..=n).collect() }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &x in &images {
            if x == 0 || x > n || std::mem::replace(&mut seen[x], true) {
                return Err(Error::InvalidGenerator(format!("{images:?} is not a permutation")));
            }
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation of `1..=n` from disjoint cycles.
    pub fn from_cycles(cycles: &[Vec<usize>], n: usize) -> Result<Self> {
        let mut images: Vec<usize> = (1..=n).collect();
        let mut used = vec![false; n + 1];
        for cycle in cycles {
            for (k, &x) in cycle.iter().enumerate() {
                if x == 0 || x > n {
                    return Err(Error::IndexOutOfRange { index: x, rank: n });
                }
                if std::mem::replace(&mut used[x], true) {
                    return Err(Error::InvalidGenerator(format!("cycles are not disjoint at {x}")));
                }
                images[x - 1] = cycle[(k + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }

    /// The transposition `(i j)`.
    pub fn transposition(i: usize, j: usize, n: usize) -> Result<Self> {
        if i == j {
            return Err(Error::InvalidGenerator(format!("({i} {j}) is not a transposition")));
        }
        Permutation::from_cycles(&[vec![i, j]], n)
    }

    /// All permutations of `1..=n` in lexicographic order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut current: Vec<usize> = (1..=n).collect();
        loop {
            out.push(Permutation { images: current.clone() });
            // next lexicographic permutation
            let Some(i) = (1..current.len()).rev().find(|&i| current[i - 1] < current[i]) else {
                return out;
            };
            let j = (i..current.len()).rev().find(|&j| current[j] > current[i - 1]).unwrap();
            current.swap(i - 1, j);
            current[i..].reverse();
        }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, k: usize) -> usize {
        self.images[k - 1]
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (k, &x) in self.images.iter().enumerate() {
            images[x - 1] = k + 1;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &x)| x == k + 1)
    }

    /// `+1` for even permutations, `-1` for odd ones.
    pub fn sign(&self) -> i64 {
        let transpositions: usize = self.cycles().iter().map(|c| c.len() - 1).sum();
        if transpositions % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Non-trivial cycles, each starting at its smallest element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.images.len();
        let mut seen = vec![false; n + 1];
        let mut out = Vec::new();
        for start in 1..=n {
            if seen[start] || self.apply(start) == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            out.push(cycle);
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            let parts: Vec<String> = c.iter().map(usize::to_string).collect();
            write!(f, "({})", parts.join(" "))?;
        }
        Ok(())
    }
}

/// Named automorphisms of `F_n`. Indices are plain 1-based generator
/// numbers, except `R` and `Beta`, which take a pair number `i` and act on
/// the paired generators `a_i = 2i - 1`, `b_i = 2i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GeneratorName {
    /// `a_i -> a_i a_j`
    Rho(usize, usize),
    /// `a_i -> a_j a_i`
    Lambda(usize, usize),
    /// `a_i -> a_i^-1`
    Inversion(usize),
    /// Sends `a_sigma(k)` to `a_k`, so conjugating by it relabels
    /// `lambda_ij` to `lambda_sigma(i)sigma(j)`.
    Perm(Permutation),
    /// Inverts `a_i` and `a_j`.
    Epsilon(usize, usize),
    /// `a_i -> b_i^-1, b_i -> b_i^-1 a_i`
    R(usize),
    /// `a_i -> a_i^-1, b_i -> a_i^-1 b_i^-1 a_i`
    Beta(usize),
    /// Inverts every generator.
    Delta,
}

impl fmt::Display for GeneratorName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn two(f: &mut fmt::Formatter<'_>, tag: &str, i: usize, j: usize) -> fmt::Result {
            if i < 10 && j < 10 {
                write!(f, "{tag}{i}{j}")
            } else {
                write!(f, "{tag}({i},{j})")
            }
        }
        match self {
            GeneratorName::Rho(i, j) => two(f, "P", *i, *j),
            GeneratorName::Lambda(i, j) => two(f, "L", *i, *j),
            GeneratorName::Epsilon(i, j) => two(f, "EPS", *i, *j),
            GeneratorName::Inversion(i) => write!(f, "E{i}"),
            GeneratorName::R(i) => write!(f, "R{i}"),
            GeneratorName::Beta(i) => write!(f, "B{i}"),
            GeneratorName::Delta => f.write_str("DEL"),
            GeneratorName::Perm(p) => write!(f, "PERM{p}"),
        }
    }
}

fn check_index(i: usize, n: usize) -> Result<()> {
    if i == 0 || i > n {
        Err(Error::IndexOutOfRange { index: i, rank: n })
    } else {
        Ok(())
    }
}

fn check_pair(i: usize, j: usize, n: usize) -> Result<()> {
    check_index(i, n)?;
    check_index(j, n)?;
    if i == j {
        return Err(Error::InvalidGenerator(format!("indices must differ, got ({i},{j})")));
    }
    Ok(())
}

fn check_paired(i: usize, n: usize) -> Result<()> {
    if n % 2 != 0 {
        return Err(Error::InvalidGenerator(format!("paired generators need even rank, got {n}")));
    }
    check_index(i, n / 2)
}

/// Image tuple that fixes every generator except those listed.
fn images_with(n: usize, changes: &[(usize, &[Letter])]) -> Vec<Word> {
    let mut images: Vec<Word> = (1..=n).map(|i| Word::generator(i, n).unwrap()).collect();
    for &(i, letters) in changes {
        images[i - 1] = Word::reduce(letters.iter().copied(), n).unwrap();
    }
    images
}

use Letter as L;

pub(super) fn build(g: &GeneratorName, n: usize) -> Result<Endo> {
    let (images, inverse) = match g {
        GeneratorName::Rho(i, j) => {
            let (i, j) = (*i, *j);
            check_pair(i, j, n)?;
            (
                images_with(n, &[(i, &[L::gen(i), L::gen(j)])]),
                images_with(n, &[(i, &[L::gen(i), L::inv(j)])]),
            )
        }
        GeneratorName::Lambda(i, j) => {
            let (i, j) = (*i, *j);
            check_pair(i, j, n)?;
            (
                images_with(n, &[(i, &[L::gen(j), L::gen(i)])]),
                images_with(n, &[(i, &[L::inv(j), L::gen(i)])]),
            )
        }
        GeneratorName::Inversion(i) => {
            check_index(*i, n)?;
            let im = images_with(n, &[(*i, &[L::inv(*i)])]);
            (im.clone(), im)
        }
        GeneratorName::Epsilon(i, j) => {
            let (i, j) = (*i, *j);
            check_pair(i, j, n)?;
            let im = images_with(n, &[(i, &[L::inv(i)]), (j, &[L::inv(j)])]);
            (im.clone(), im)
        }
        GeneratorName::Delta => {
            let im: Vec<Word> = (1..=n).map(|i| Word::reduce([L::inv(i)], n).unwrap()).collect();
            (im.clone(), im)
        }
        GeneratorName::Perm(sigma) => {
            if sigma.degree() != n {
                return Err(Error::InvalidGenerator(format!(
                    "permutation of degree {} used at rank {n}",
                    sigma.degree()
                )));
            }
            let inv = sigma.inverse();
            let images = (1..=n).map(|k| Word::generator(inv.apply(k), n).unwrap()).collect();
            let inverse = (1..=n).map(|k| Word::generator(sigma.apply(k), n).unwrap()).collect();
            (images, inverse)
        }
        GeneratorName::R(i) => {
            check_paired(*i, n)?;
            let (a, b) = (pa(*i), pb(*i));
            (
                images_with(n, &[(a, &[L::inv(b)]), (b, &[L::inv(b), L::gen(a)])]),
                images_with(n, &[(a, &[L::inv(a), L::gen(b)]), (b, &[L::inv(a)])]),
            )
        }
        GeneratorName::Beta(i) => {
            check_paired(*i, n)?;
            let (a, b) = (pa(*i), pb(*i));
            let im = images_with(n, &[(a, &[L::inv(a)]), (b, &[L::inv(a), L::inv(b), L::gen(a)])]);
            (im.clone(), im)
        }
    };
    Ok(Endo { rank: n, images, inverse: Some(inverse) })
}
