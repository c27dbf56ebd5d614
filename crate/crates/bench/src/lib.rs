//! Shared fixtures for the criterion benches.

use autfn_core::simplicial::{barycentric_subdivide, catalog};
use autfn_core::{Endo, GenWord, SimplicialComplex, SimplicialMap};

/// A long product of Nielsen moves at rank `n`, built from a fixed word.
pub fn nielsen_product(n: usize) -> Endo {
    let mut parts = Vec::new();
    for i in 1..n {
        parts.push(format!("L{}{} P{}{}^-1", i, i + 1, i + 1, i));
    }
    GenWord::parse(&parts.join(" "), n).and_then(|w| w.eval(n)).expect("fixture word is valid")
}

/// Boundary of the `k`-cross-polytope, subdivided `rounds` times.
pub fn subdivided_sphere(k: usize, rounds: usize) -> SimplicialComplex {
    let mut c = SimplicialComplex::cross_polytope_boundary(k);
    for _ in 0..rounds {
        c = barycentric_subdivide(&c).complex;
    }
    c
}

/// Octahedron with the order-3 coordinate rotation.
pub fn rotation_fixture() -> (SimplicialComplex, SimplicialMap) {
    (SimplicialComplex::octahedron(), catalog::coordinate_cycle(3))
}
