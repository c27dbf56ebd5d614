use std::collections::{HashMap, HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::group::{self, GroupElement};

use super::matrix::{is_prime, ModPMatrix};

/// Default element cap for matrix-group enumeration; covers `SL(5, Z_2)`.
pub const DEFAULT_MATRIX_CAP: usize = 10_000_000;

/// A finite group of matrices over `F_p`, with all elements listed in sorted order.
#[derive(Debug, Clone)]
pub struct FiniteMatrixGroup {
    n: usize,
    p: u32,
    elements: Vec<ModPMatrix>,
    generators: Vec<ModPMatrix>,
}

/// How [`FiniteMatrixGroup::is_simple`] chooses the elements whose normal closures it tests.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SimplicityMode {
    /// One representative per conjugacy class.
    #[default]
    ClassRepresentatives,
    /// Every non-identity element.
    Exhaustive,
}

impl FiniteMatrixGroup {
    /// Breadth-first closure of `gens`.
    pub fn enumerate(gens: &[ModPMatrix], n: usize, p: u32, cap: usize) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        for g in gens {
            if g.n() != n || g.p() != p {
                return Err(Error::InvalidMatrix(format!("generator {g} is not an {n}x{n} matrix mod {p}")));
            }
            if g.det() == 0 {
                return Err(Error::InvalidMatrix(format!("generator {g} is singular")));
            }
        }
        let elements = group::closure(ModPMatrix::identity(n, p), gens, cap)?;
        Ok(FiniteMatrixGroup { n, p, elements, generators: gens.to_vec() })
    }

    /// `SL(n, F_p)`, generated by all elementary matrices.
    pub fn special_linear(n: usize, p: u32, cap: usize) -> Result<Self> {
        let mut gens = Vec::new();
        for i in 1..=n {
            for j in (1..=n).filter(|&j| j != i) {
                gens.push(ModPMatrix::elementary(i, j, n, p)?);
            }
        }
        FiniteMatrixGroup::enumerate(&gens, n, p, cap)
    }

    /// `<E_j1 : j != 1>`.
    pub fn column_group(n: usize, p: u32) -> Result<Self> {
        let gens = (2..=n).map(|j| ModPMatrix::elementary(j, 1, n, p)).collect::<Result<Vec<_>>>()?;
        FiniteMatrixGroup::enumerate(&gens, n, p, DEFAULT_MATRIX_CAP)
    }

    /// `<E_ij : i <= n/2 < j>`, block upper unipotent matrices.
    pub fn block_group(n: usize, p: u32) -> Result<Self> {
        let h = n / 2;
        let mut gens = Vec::new();
        for i in 1..=h {
            for j in (h + 1)..=n {
                gens.push(ModPMatrix::elementary(i, j, n, p)?);
            }
        }
        FiniteMatrixGroup::enumerate(&gens, n, p, DEFAULT_MATRIX_CAP)
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn elements(&self) -> &[ModPMatrix] {
        &self.elements
    }

    pub fn generators(&self) -> &[ModPMatrix] {
        &self.generators
    }

    pub fn identity(&self) -> ModPMatrix {
        ModPMatrix::identity(self.n, self.p)
    }

    pub fn contains(&self, x: &ModPMatrix) -> bool {
        self.elements.binary_search(x).is_ok()
    }

    pub fn is_subgroup_of(&self, other: &FiniteMatrixGroup) -> bool {
        self.elements.iter().all(|x| other.contains(x))
    }

    pub fn is_abelian(&self) -> bool {
        let g = &self.generators;
        g.iter().all(|a| g.iter().all(|b| a.op(b) == b.op(a)))
    }

    /// Whether `self` is normalized by every generator of `ambient`.
    pub fn is_normal_in(&self, ambient: &FiniteMatrixGroup) -> bool {
        let invs: Vec<ModPMatrix> = ambient.generators.iter().map(|g| g.inverse().unwrap()).collect();
        ambient.generators.iter().zip(&invs).all(|(g, gi)| {
            self.generators.iter().all(|x| self.contains(&g.op(x).op(gi)))
        })
    }

    /// Conjugacy class of `x`, sorted.
    pub fn conjugacy_class(&self, x: &ModPMatrix) -> Vec<ModPMatrix> {
        let invs: Vec<ModPMatrix> = self.generators.iter().map(|g| g.inverse().unwrap()).collect();
        let mut seen = HashSet::from([x.clone()]);
        let mut queue = VecDeque::from([x.clone()]);
        while let Some(y) = queue.pop_front() {
            for (g, gi) in self.generators.iter().zip(&invs) {
                let z = g.op(&y).op(gi);
                if seen.insert(z.clone()) {
                    queue.push_back(z);
                }
            }
        }
        let mut class: Vec<ModPMatrix> = seen.into_iter().collect();
        class.sort();
        class
    }

    /// All conjugacy classes, ordered by their least element.
    pub fn conjugacy_classes(&self) -> Vec<Vec<ModPMatrix>> {
        let index: HashMap<&ModPMatrix, usize> = self.elements.iter().enumerate().map(|(i, x)| (x, i)).collect();
        let mut done = vec![false; self.elements.len()];
        let mut classes = Vec::new();
        for (i, x) in self.elements.iter().enumerate() {
            if done[i] {
                continue;
            }
            let class = self.conjugacy_class(x);
            for y in &class {
                done[index[y]] = true;
            }
            classes.push(class);
        }
        classes
    }

    /// Smallest normal subgroup containing `seed`.
    pub fn normal_closure(&self, seed: &[ModPMatrix]) -> Result<FiniteMatrixGroup> {
        if seed.iter().any(|x| !self.contains(x)) {
            return Err(Error::NotInGroup);
        }
        let mut conjugates: Vec<ModPMatrix> = seed.iter().flat_map(|x| self.conjugacy_class(x)).collect();
        conjugates.sort();
        conjugates.dedup();
        let identity = self.identity();
        let mut gens: Vec<ModPMatrix> = Vec::new();
        let mut current = vec![identity.clone()];
        for c in conjugates {
            if current.binary_search(&c).is_ok() {
                continue;
            }
            gens.push(c);
            current = group::closure(identity.clone(), &gens, self.order())?;
            if current.len() == self.order() {
                break;
            }
        }
        Ok(FiniteMatrixGroup { n: self.n, p: self.p, elements: current, generators: gens })
    }

    pub fn is_simple(&self, mode: SimplicityMode) -> bool {
        if self.order() == 1 {
            return false;
        }
        let identity = self.identity();
        let candidates: Vec<ModPMatrix> = match mode {
            SimplicityMode::ClassRepresentatives => {
                self.conjugacy_classes().into_iter().map(|c| c[0].clone()).collect()
            }
            SimplicityMode::Exhaustive => self.elements.clone(),
        };
        candidates
            .iter()
            .filter(|x| **x != identity)
            .all(|x| self.normal_closure(std::slice::from_ref(x)).map(|c| c.order()) == Ok(self.order()))
    }

    /// `r` when the group is `(Z_p)^r`.
    pub fn elementary_abelian_rank(&self, p: u32) -> Option<usize> {
        group::elementary_abelian_rank(&self.generators, &self.identity(), self.order(), p as usize)
    }
}
