//! Finite subgroups of `Aut(F_n)` by exhaustive enumeration, and the
//! relation suite that checks identities between named automorphisms.

mod glob;
mod suite;

pub use glob::glob_match;
pub use suite::{
    build_suite, run_checks, run_relation_suite, CheckBody, CheckRecord, CheckReport, RelationCheck, Status,
    Summary, SuiteParams,
};

use crate::aut::{Endo, GeneratorName, Permutation};
use crate::error::{Error, Result};
use crate::group;
use crate::linear::abelianize;

/// Default element cap for subgroup enumeration.
pub const DEFAULT_AUT_CAP: usize = 1_000_000;
/// Default cap on image word length during enumeration.
pub const DEFAULT_WORD_CAP: usize = 64;

/// A finite subgroup of `Aut(F_n)` with all elements listed, sorted by image tuple.
#[derive(Debug, Clone)]
pub struct FiniteAutGroup {
    rank: usize,
    elements: Vec<Endo>,
    generators: Vec<Endo>,
}

impl FiniteAutGroup {
    pub fn generate(gens: &[Endo], cap: usize) -> Result<Self> {
        FiniteAutGroup::generate_with(gens, cap, DEFAULT_WORD_CAP)
    }

    /// Closure of `gens`, failing once `cap` elements or `word_cap`-letter images are exceeded.
    pub fn generate_with(gens: &[Endo], cap: usize, word_cap: usize) -> Result<Self> {
        let rank = gens.first().map(Endo::rank).ok_or_else(|| {
            Error::InvalidParameters("at least one generator is required".into())
        })?;
        for g in gens {
            if g.rank() != rank {
                return Err(Error::RankMismatch { left: rank, right: g.rank() });
            }
            if !g.is_invertible() {
                return Err(Error::MissingInverse);
            }
        }
        let elements = group::closure_with(Endo::identity(rank), gens, cap, |x| {
            if x.max_image_len() > word_cap {
                Err(Error::WordLengthExceeded { cap: word_cap })
            } else {
                Ok(())
            }
        })?;
        Ok(FiniteAutGroup { rank, elements, generators: gens.to_vec() })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Endo] {
        &self.elements
    }

    pub fn generators(&self) -> &[Endo] {
        &self.generators
    }

    pub fn contains(&self, x: &Endo) -> bool {
        self.elements.binary_search(x).is_ok()
    }

    pub fn is_abelian(&self) -> bool {
        let g = &self.generators;
        g.iter().all(|a| g.iter().all(|b| a.then(b) == b.then(a)))
    }

    /// Elements in both groups, in sorted order.
    pub fn intersection(&self, other: &FiniteAutGroup) -> Vec<Endo> {
        self.elements.iter().filter(|x| other.contains(x)).cloned().collect()
    }
}

/// `m` when `g` is `(Z_p)^m`.
pub fn is_elementary_abelian(g: &FiniteAutGroup, p: usize) -> Option<usize> {
    group::elementary_abelian_rank(g.generators(), &Endo::identity(g.rank()), g.order(), p)
}

fn named(g: GeneratorName, n: usize) -> Result<Endo> {
    Endo::named(&g, n)
}

fn check_rank(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidParameters(format!("rank must be at least 2, got {n}")));
    }
    Ok(())
}

/// Signed permutation matrices: adjacent transpositions and `e_1`.
pub fn build_wn(n: usize) -> Result<FiniteAutGroup> {
    check_rank(n)?;
    let mut gens = vec![named(GeneratorName::Inversion(1), n)?];
    for k in 1..n {
        gens.push(named(GeneratorName::Perm(Permutation::transposition(k, k + 1, n)?), n)?);
    }
    FiniteAutGroup::generate(&gens, DEFAULT_AUT_CAP)
}

/// The determinant-one part of `W_n`, of order `2^(n-1) n!`.
pub fn build_swn(n: usize) -> Result<FiniteAutGroup> {
    check_rank(n)?;
    let e1 = named(GeneratorName::Inversion(1), n)?;
    let mut gens = Vec::new();
    for k in 1..n {
        gens.push(named(GeneratorName::Epsilon(k, k + 1), n)?);
    }
    for k in 1..n {
        let t = named(GeneratorName::Perm(Permutation::transposition(k, k + 1, n)?), n)?;
        gens.push(t.then(&e1));
    }
    FiniteAutGroup::generate(&gens, DEFAULT_AUT_CAP)
}

/// Even sign changes, of order `2^(n-1)`.
pub fn build_sn(n: usize) -> Result<FiniteAutGroup> {
    check_rank(n)?;
    let gens = (1..n).map(|k| named(GeneratorName::Epsilon(k, k + 1), n)).collect::<Result<Vec<_>>>()?;
    FiniteAutGroup::generate(&gens, DEFAULT_AUT_CAP)
}

/// `T(m) = <R_1, ..., R_m>` inside `SAut(F_2m)`.
pub fn build_t(m: usize) -> Result<FiniteAutGroup> {
    if m == 0 {
        return Err(Error::InvalidParameters("m must be positive".into()));
    }
    let gens = (1..=m).map(|i| named(GeneratorName::R(i), 2 * m)).collect::<Result<Vec<_>>>()?;
    FiniteAutGroup::generate(&gens, DEFAULT_AUT_CAP)
}

/// Elements of `pool` of determinant one.
pub fn saut_part(pool: &FiniteAutGroup) -> Vec<Endo> {
    pool.elements().iter().filter(|x| abelianize(x).det() == 1).cloned().collect()
}

/// First `c` in `pool` with `c x c^-1 = y`.
pub fn find_conjugator(x: &Endo, y: &Endo, pool: &[Endo]) -> Result<Option<Endo>> {
    if x.rank() != y.rank() {
        return Err(Error::RankMismatch { left: x.rank(), right: y.rank() });
    }
    for c in pool {
        if &x.conjugate(c)? == y {
            return Ok(Some(c.clone()));
        }
    }
    Ok(None)
}
