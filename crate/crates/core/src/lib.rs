//! Exact computation toolkit for automorphisms of free groups, their finite
//! quotients over `Z` and `F_p`, and fixed-point checks for finite group
//! actions on simplicial complexes.

pub mod algebraverify;
pub mod aut;
pub mod error;
pub mod freegroup;
pub mod group;
pub mod homology;
pub mod linear;
pub mod simplicial;
pub mod smith;

pub use aut::{Endo, Factor, GenWord, GeneratorName, LabelledGraph, Order, Permutation};
pub use error::{Error, Result};
pub use freegroup::{Letter, Naming, Word};
pub use linear::{abelianize, FiniteMatrixGroup, IntMatrix, ModPMatrix};
pub use simplicial::{ActionGroup, SimplicialComplex, SimplicialMap};
