//! Endomorphisms and automorphisms of a free group, stored as generator images.
//!
//! Composition follows the right-action convention: `f.compose(&g)` is
//! "apply `f`, then `g`", so the image of `a_i` under `fg` is the image of
//! `a_i` under `f` with `g` substituted into it. Conjugation is
//! `c x c^-1` and commutators are `x y x^-1 y^-1` in that same order.

mod graph;
mod named;
mod syntax;

use std::fmt;
use std::hash::{Hash, Hasher};

pub use graph::{t_graph, EdgeImage, GraphEdge, GraphFile, GraphSymmetry, LabelledGraph, NamedSymmetry};
pub use named::{GeneratorName, Permutation};
pub use syntax::{Factor, GenWord};

use crate::error::{Error, Result};
use crate::freegroup::{Naming, Word};

/// An endomorphism of `F_rank`, optionally carrying the image tuple of its inverse.
///
/// Elements built from named generators always carry their inverse; it is
/// assembled from closed-form generator inverses in reverse order, so no
/// general inversion algorithm is ever needed.
#[derive(Debug, Clone)]
pub struct Endo {
    rank: usize,
    images: Vec<Word>,
    inverse: Option<Vec<Word>>,
}

/// Result of a bounded order search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Order {
    Finite(usize),
    Unknown(usize),
}

impl Endo {
    pub fn identity(rank: usize) -> Self {
        let images: Vec<Word> = (1..=rank).map(|i| Word::generator(i, rank).unwrap()).collect();
        Endo { rank, inverse: Some(images.clone()), images }
    }

    /// An endomorphism with no inverse witness.
    pub fn from_images(images: Vec<Word>) -> Result<Self> {
        let rank = images.len();
        check_images(&images, rank)?;
        Ok(Endo { rank, images, inverse: None })
    }

    /// An automorphism given with its inverse; the pair is checked to compose to the identity.
    pub fn with_inverse(images: Vec<Word>, inverse: Vec<Word>) -> Result<Self> {
        let rank = images.len();
        check_images(&images, rank)?;
        check_images(&inverse, rank)?;
        let f = Endo { rank, images, inverse: Some(inverse) };
        f.verify_inverse()?;
        Ok(f)
    }

    pub fn named(g: &GeneratorName, rank: usize) -> Result<Self> {
        named::build(g, rank)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn images(&self) -> &[Word] {
        &self.images
    }

    /// Image of `a_index` (1-based).
    pub fn image(&self, index: usize) -> &Word {
        &self.images[index - 1]
    }

    pub fn is_invertible(&self) -> bool {
        self.inverse.is_some()
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, w)| w.len() == 1 && w.letters()[0].index == i + 1 && !w.letters()[0].inverted)
    }

    /// Longest image word.
    pub fn max_image_len(&self) -> usize {
        self.images.iter().map(Word::len).max().unwrap_or(0)
    }

    /// `self` followed by `other`.
    pub fn compose(&self, other: &Endo) -> Result<Endo> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch { left: self.rank, right: other.rank });
        }
        Ok(self.then(other))
    }

    pub(crate) fn then(&self, other: &Endo) -> Endo {
        let images = substitute_all(&self.images, &other.images, self.rank);
        let inverse = match (&self.inverse, &other.inverse) {
            (Some(fi), Some(gi)) => Some(substitute_all(gi, fi, self.rank)),
            _ => None,
        };
        Endo { rank: self.rank, images, inverse }
    }

    /// Pointwise equality of images; rank mismatch is an error rather than `false`.
    pub fn equal(&self, other: &Endo) -> Result<bool> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch { left: self.rank, right: other.rank });
        }
        Ok(self.images == other.images)
    }

    pub fn inverse(&self) -> Result<Endo> {
        let inverse = self.inverse.clone().ok_or(Error::MissingInverse)?;
        let inv = Endo { rank: self.rank, images: inverse, inverse: Some(self.images.clone()) };
        if !self.then(&inv).is_identity() || !inv.then(self).is_identity() {
            return Err(Error::Inconsistent("stored inverse does not compose to the identity".into()));
        }
        Ok(inv)
    }

    /// `c x c^-1`, i.e. apply `c`, then `self`, then `c^-1`.
    pub fn conjugate(&self, by: &Endo) -> Result<Endo> {
        let c_inv = by.inverse()?;
        by.compose(self)?.compose(&c_inv)
    }

    /// `[self, other] = self other self^-1 other^-1`.
    pub fn commutator(&self, other: &Endo) -> Result<Endo> {
        let x_inv = self.inverse()?;
        let y_inv = other.inverse()?;
        self.compose(other)?.compose(&x_inv)?.compose(&y_inv)
    }

    pub fn pow(&self, k: i64) -> Result<Endo> {
        let base = if k < 0 { self.inverse()? } else { self.clone() };
        let mut acc = Endo::identity(self.rank);
        for _ in 0..k.unsigned_abs() {
            acc = acc.then(&base);
        }
        Ok(acc)
    }

    /// Least `k <= cap` with `self^k = 1`.
    pub fn order(&self, cap: usize) -> Order {
        let mut power = self.clone();
        for k in 1..=cap {
            if power.is_identity() {
                return Order::Finite(k);
            }
            power = power.then(self);
        }
        Order::Unknown(cap)
    }

    /// `a1 -> a2 a1, a2 -> a2`
    pub fn display(&self, naming: Naming) -> String {
        self.images
            .iter()
            .enumerate()
            .map(|(i, w)| format!("{} -> {}", naming.symbol(i + 1), w.display(naming)))
            .collect::<Vec<_>>()
            .join(", ")
    }

    /// First generator whose images differ, with both images.
    pub fn first_difference(&self, other: &Endo) -> Option<(usize, Word, Word)> {
        self.images
            .iter()
            .zip(&other.images)
            .enumerate()
            .find(|(_, (a, b))| a != b)
            .map(|(i, (a, b))| (i + 1, a.clone(), b.clone()))
    }

    fn verify_inverse(&self) -> Result<()> {
        self.inverse().map(|_| ())
    }
}

fn check_images(images: &[Word], rank: usize) -> Result<()> {
    match images.iter().find(|w| w.rank() != rank) {
        Some(w) => Err(Error::RankMismatch { left: rank, right: w.rank() }),
        None => Ok(()),
    }
}

fn substitute_all(words: &[Word], images: &[Word], rank: usize) -> Vec<Word> {
    words.iter().map(|w| w.substitute_unchecked(images, rank)).collect()
}

impl PartialEq for Endo {
    fn eq(&self, other: &Self) -> bool {
        self.rank == other.rank && self.images == other.images
    }
}

impl Eq for Endo {}

impl Hash for Endo {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.rank.hash(state);
        self.images.hash(state);
    }
}

impl PartialOrd for Endo {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Endo {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.rank, &self.images).cmp(&(other.rank, &other.images))
    }
}

impl fmt::Display for Endo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display(Naming::Plain))
    }
}

impl crate::group::GroupElement for Endo {
    fn op(&self, other: &Self) -> Self {
        self.then(other)
    }
}
