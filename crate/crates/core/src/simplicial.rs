//! Finite simplicial complexes, vertex-map actions, barycentric subdivision
//! and fixed subcomplexes.
//!
//! A simplex is a strictly increasing list of vertex labels. Complexes store
//! every face, grouped by dimension and sorted, so iteration order is
//! canonical. An action is *regular* when any element that maps a simplex to
//! itself fixes it vertex by vertex; only then is the fixed point set of the
//! geometric realization the subcomplex spanned by fixed vertices.

use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{self, GroupElement};

pub type Simplex = Vec<usize>;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    by_dim: Vec<Vec<Simplex>>,
}

impl SimplicialComplex {
    /// The empty complex, of dimension `-1`.
    pub fn empty() -> Self {
        SimplicialComplex { by_dim: Vec::new() }
    }

    /// Face closure of the given simplices. Input order and vertex order are irrelevant.
    pub fn from_maximal<S: AsRef<[usize]>>(maximal: &[S]) -> Self {
        let mut faces: Vec<BTreeSet<Simplex>> = Vec::new();
        for s in maximal {
            let mut s: Simplex = s.as_ref().to_vec();
            s.sort_unstable();
            s.dedup();
            if s.is_empty() {
                continue;
            }
            let k = s.len();
            if faces.len() < k {
                faces.resize(k, BTreeSet::new());
            }
            if faces[k - 1].contains(&s) {
                continue;
            }
            for mask in 1u64..(1u64 << k) {
                let face: Simplex = (0..k).filter(|b| mask >> b & 1 == 1).map(|b| s[b]).collect();
                faces[face.len() - 1].insert(face);
            }
        }
        SimplicialComplex { by_dim: faces.into_iter().map(|set| set.into_iter().collect()).collect() }
    }

    /// Input simplices that are faces of other input simplices.
    pub fn non_maximal_inputs<S: AsRef<[usize]>>(maximal: &[S]) -> Vec<usize> {
        let sets: Vec<BTreeSet<usize>> = maximal.iter().map(|s| s.as_ref().iter().copied().collect()).collect();
        (0..sets.len())
            .filter(|&i| (0..sets.len()).any(|j| j != i && sets[i].is_subset(&sets[j]) && sets[i] != sets[j]))
            .collect()
    }

    /// `dim + 1` simplices in dimension `dim`, i.e. the boundary of the `dim`-simplex
    /// on vertices `0..=dim`.
    pub fn simplex_boundary(dim: usize) -> Self {
        let top: Vec<Simplex> = (0..=dim).map(|skip| (0..=dim).filter(|&v| v != skip).collect()).collect();
        SimplicialComplex::from_maximal(&top)
    }

    /// Boundary of the `k`-dimensional cross-polytope, a triangulated `(k-1)`-sphere.
    /// Vertex `2c` is `+e_(c+1)` and vertex `2c + 1` is `-e_(c+1)`.
    pub fn cross_polytope_boundary(k: usize) -> Self {
        let top: Vec<Simplex> = (0..1usize << k)
            .map(|signs| (0..k).map(|c| 2 * c + (signs >> c & 1)).collect())
            .collect();
        SimplicialComplex::from_maximal(&top)
    }

    pub fn octahedron() -> Self {
        SimplicialComplex::cross_polytope_boundary(3)
    }

    /// The cycle graph on `0..n`.
    pub fn cycle(n: usize) -> Self {
        let edges: Vec<Simplex> = (0..n).map(|i| vec![i, (i + 1) % n]).collect();
        SimplicialComplex::from_maximal(&edges)
    }

    /// Cone with apex one past the largest vertex label.
    pub fn cone(&self) -> Self {
        let apex = self.vertices().last().map_or(0, |v| v + 1);
        let mut top: Vec<Simplex> = self
            .maximal_simplices()
            .into_iter()
            .map(|mut s| {
                s.push(apex);
                s
            })
            .collect();
        if top.is_empty() {
            top.push(vec![apex]);
        }
        SimplicialComplex::from_maximal(&top)
    }

    /// Dimension, `-1` for the empty complex.
    pub fn dim(&self) -> isize {
        self.by_dim.len() as isize - 1
    }

    pub fn is_empty(&self) -> bool {
        self.by_dim.is_empty()
    }

    pub fn vertices(&self) -> Vec<usize> {
        self.simplices(0).iter().map(|s| s[0]).collect()
    }

    pub fn simplices(&self, k: usize) -> &[Simplex] {
        self.by_dim.get(k).map_or(&[], Vec::as_slice)
    }

    /// Simplex counts per dimension.
    pub fn counts(&self) -> Vec<usize> {
        self.by_dim.iter().map(Vec::len).collect()
    }

    pub fn simplex_count(&self) -> usize {
        self.by_dim.iter().map(Vec::len).sum()
    }

    /// All simplices, by dimension then lexicographically.
    pub fn all_simplices(&self) -> impl Iterator<Item = &Simplex> {
        self.by_dim.iter().flatten()
    }

    pub fn contains(&self, s: &[usize]) -> bool {
        !s.is_empty() && self.simplices(s.len() - 1).binary_search(&s.to_vec()).is_ok()
    }

    /// Position of `s` among simplices of its dimension.
    pub fn index_of(&self, s: &[usize]) -> Option<usize> {
        if s.is_empty() {
            return None;
        }
        self.simplices(s.len() - 1).binary_search(&s.to_vec()).ok()
    }

    pub fn maximal_simplices(&self) -> Vec<Simplex> {
        let mut out = Vec::new();
        for k in 0..self.by_dim.len() {
            for s in &self.by_dim[k] {
                let covered = self
                    .simplices(k + 1)
                    .iter()
                    .any(|t| s.iter().all(|v| t.binary_search(v).is_ok()));
                if !covered {
                    out.push(s.clone());
                }
            }
        }
        out
    }

    /// Subcomplex of simplices whose vertices all satisfy `keep`.
    pub fn full_subcomplex(&self, keep: impl Fn(usize) -> bool) -> Self {
        let by_dim: Vec<Vec<Simplex>> = self
            .by_dim
            .iter()
            .map(|layer| layer.iter().filter(|s| s.iter().all(|&v| keep(v))).cloned().collect::<Vec<_>>())
            .take_while(|layer| !layer.is_empty())
            .collect();
        SimplicialComplex { by_dim }
    }

    pub fn is_subcomplex_of(&self, other: &SimplicialComplex) -> bool {
        self.all_simplices().all(|s| other.contains(s))
    }

    pub fn is_face_closed(&self) -> bool {
        self.all_simplices().all(|s| {
            s.len() == 1 || (0..s.len()).all(|skip| {
                let face: Simplex = s.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &v)| v).collect();
                self.contains(&face)
            })
        })
    }

    /// Connected components of the 1-skeleton.
    pub fn component_count(&self) -> usize {
        let verts = self.vertices();
        let index: HashMap<usize, usize> = verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut parent: Vec<usize> = (0..verts.len()).collect();
        fn find(parent: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while parent[r] != r {
                r = parent[r];
            }
            parent[x] = r;
            r
        }
        for e in self.simplices(1) {
            let (a, b) = (find(&mut parent, index[&e[0]]), find(&mut parent, index[&e[1]]));
            parent[a] = b;
        }
        (0..verts.len()).filter(|&i| find(&mut parent, i) == i).count()
    }
}

/// A barycentric subdivision with the simplex each new vertex stands for.
#[derive(Debug, Clone)]
pub struct Subdivision {
    pub complex: SimplicialComplex,
    /// `vertex_simplex[v]` is the simplex of the original complex whose barycentre is vertex `v`.
    pub vertex_simplex: Vec<Simplex>,
    index: HashMap<Simplex, usize>,
}

impl Subdivision {
    pub fn vertex_of(&self, s: &[usize]) -> Option<usize> {
        self.index.get(s).copied()
    }
}

/// Vertices are the simplices of `k` (in canonical order); simplices are chains of faces.
pub fn barycentric_subdivide(k: &SimplicialComplex) -> Subdivision {
    let vertex_simplex: Vec<Simplex> = k.all_simplices().cloned().collect();
    let index: HashMap<Simplex, usize> = vertex_simplex.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect();
    let mut flags: Vec<Simplex> = Vec::new();
    for top in k.maximal_simplices() {
        let mut order = top.clone();
        permutations(&mut order, 0, &mut |perm| {
            let mut chain = Vec::with_capacity(perm.len());
            let mut prefix: Simplex = Vec::with_capacity(perm.len());
            for &v in perm {
                let pos = prefix.binary_search(&v).unwrap_err();
                prefix.insert(pos, v);
                chain.push(index[&prefix]);
            }
            flags.push(chain);
        });
    }
    Subdivision { complex: SimplicialComplex::from_maximal(&flags), vertex_simplex, index }
}

fn permutations(items: &mut Vec<usize>, start: usize, visit: &mut impl FnMut(&[usize])) {
    if start == items.len() {
        visit(items);
        return;
    }
    for i in start..items.len() {
        items.swap(start, i);
        permutations(items, start + 1, visit);
        items.swap(start, i);
    }
}

/// A vertex map on labels `0..len`, acting on a complex as an automorphism.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SimplicialMap {
    map: Vec<usize>,
}

impl SimplicialMap {
    pub fn identity(len: usize) -> Self {
        SimplicialMap { map: (0..len).collect() }
    }

    /// Checks that `map` is a bijection on the vertices of `k` carrying simplices to simplices.
    pub fn new(k: &SimplicialComplex, map: Vec<usize>) -> Result<Self> {
        let verts = k.vertices();
        if let Some(&v) = verts.iter().find(|&&v| v >= map.len()) {
            return Err(Error::InvalidMap(format!("vertex {v} has no image")));
        }
        let mut images: Vec<usize> = verts.iter().map(|&v| map[v]).collect();
        images.sort_unstable();
        if images != verts {
            return Err(Error::InvalidMap("not a bijection on the vertex set".into()));
        }
        let g = SimplicialMap { map };
        if let Some(s) = k.maximal_simplices().iter().find(|s| !k.contains(&g.apply_simplex(s))) {
            return Err(Error::InvalidMap(format!("simplex {s:?} is not carried to a simplex")));
        }
        Ok(g)
    }

    pub fn apply(&self, v: usize) -> usize {
        self.map[v]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.map
    }

    pub fn apply_simplex(&self, s: &[usize]) -> Simplex {
        let mut out: Simplex = s.iter().map(|&v| self.map[v]).collect();
        out.sort_unstable();
        out
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &SimplicialMap) -> SimplicialMap {
        SimplicialMap { map: self.map.iter().map(|&v| other.map[v]).collect() }
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn inverse(&self) -> SimplicialMap {
        let mut map = vec![0; self.map.len()];
        for (i, &v) in self.map.iter().enumerate() {
            map[v] = i;
        }
        SimplicialMap { map }
    }

    pub fn order(&self) -> usize {
        group::element_order(self, &SimplicialMap::identity(self.map.len()), usize::MAX).unwrap()
    }

    /// The induced automorphism of a barycentric subdivision.
    pub fn induced_on_subdivision(&self, sd: &Subdivision) -> SimplicialMap {
        let map = sd
            .vertex_simplex
            .iter()
            .map(|s| sd.vertex_of(&self.apply_simplex(s)).expect("automorphisms carry simplices to simplices"))
            .collect();
        SimplicialMap { map }
    }

    /// Whether every simplex mapped to itself is fixed vertex by vertex.
    pub fn is_regular_on(&self, k: &SimplicialComplex) -> bool {
        k.all_simplices().all(|s| self.apply_simplex(s) != *s || s.iter().all(|&v| self.map[v] == v))
    }
}

impl GroupElement for SimplicialMap {
    fn op(&self, other: &Self) -> Self {
        self.then(other)
    }
}

/// A finite group of automorphisms of a complex.
#[derive(Debug, Clone)]
pub struct ActionGroup {
    complex: SimplicialComplex,
    generators: Vec<SimplicialMap>,
    elements: Vec<SimplicialMap>,
}

impl ActionGroup {
    pub fn generate(complex: SimplicialComplex, generators: Vec<SimplicialMap>, cap: usize) -> Result<Self> {
        let len = generators
            .iter()
            .map(|g| g.map.len())
            .chain(complex.vertices().last().map(|v| v + 1))
            .max()
            .unwrap_or(0);
        let generators: Vec<SimplicialMap> = generators.into_iter().map(|g| pad(g, len)).collect();
        for g in &generators {
            SimplicialMap::new(&complex, g.map.clone())?;
        }
        let elements = group::closure(SimplicialMap::identity(len), &generators, cap)?;
        Ok(ActionGroup { complex, generators, elements })
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    pub fn generators(&self) -> &[SimplicialMap] {
        &self.generators
    }

    pub fn elements(&self) -> &[SimplicialMap] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn identity(&self) -> SimplicialMap {
        SimplicialMap::identity(self.elements[0].map.len())
    }

    pub fn is_regular(&self) -> bool {
        self.elements.iter().all(|g| g.is_regular_on(&self.complex))
    }

    /// The same group acting on the barycentric subdivision.
    pub fn subdivide(&self) -> (ActionGroup, Subdivision) {
        let sd = barycentric_subdivide(&self.complex);
        let gens: Vec<SimplicialMap> = self.generators.iter().map(|g| g.induced_on_subdivision(&sd)).collect();
        let elements: Vec<SimplicialMap> = {
            let mut e: Vec<SimplicialMap> = self.elements.iter().map(|g| g.induced_on_subdivision(&sd)).collect();
            e.sort();
            e
        };
        (ActionGroup { complex: sd.complex.clone(), generators: gens, elements }, sd)
    }

    /// Subdivides at most `max_rounds` times until the action is regular.
    pub fn regularized(&self, max_rounds: usize) -> Result<(ActionGroup, usize)> {
        let mut current = self.clone();
        for round in 0..=max_rounds {
            if current.is_regular() {
                return Ok((current, round));
            }
            if round < max_rounds {
                current = current.subdivide().0;
            }
        }
        Err(Error::NonRegularAction)
    }

    /// Fixed subcomplex of the whole group.
    pub fn fixed_subcomplex(&self) -> Result<SimplicialComplex> {
        if !self.is_regular() {
            return Err(Error::NonRegularAction);
        }
        Ok(fixed_by_all(&self.complex, &self.generators))
    }
}

/// Subdivides `k` at most `max_rounds` times until every map in `elements`
/// acts regularly. Returns the complex, the induced maps (index for index)
/// and the number of rounds used.
pub fn regularize(
    k: &SimplicialComplex,
    elements: &[SimplicialMap],
    max_rounds: usize,
) -> Result<(SimplicialComplex, Vec<SimplicialMap>, usize)> {
    let mut complex = k.clone();
    let mut maps = elements.to_vec();
    for round in 0..=max_rounds {
        if maps.iter().all(|g| g.is_regular_on(&complex)) {
            return Ok((complex, maps, round));
        }
        if round < max_rounds {
            let sd = barycentric_subdivide(&complex);
            maps = maps.iter().map(|g| g.induced_on_subdivision(&sd)).collect();
            complex = sd.complex;
        }
    }
    Err(Error::NonRegularAction)
}

/// Vertex-spanned subcomplex fixed by every map in `maps`; no regularity check.
pub fn fixed_by(k: &SimplicialComplex, maps: &[SimplicialMap]) -> SimplicialComplex {
    fixed_by_all(k, maps)
}

fn pad(g: SimplicialMap, len: usize) -> SimplicialMap {
    let mut map = g.map;
    let start = map.len();
    map.extend(start..len);
    SimplicialMap { map }
}

fn fixed_by_all(k: &SimplicialComplex, maps: &[SimplicialMap]) -> SimplicialComplex {
    k.full_subcomplex(|v| maps.iter().all(|g| g.apply(v) == v))
}

/// Fixed subcomplex of a single automorphism; refuses non-regular actions.
pub fn fixed_subcomplex(k: &SimplicialComplex, g: &SimplicialMap) -> Result<SimplicialComplex> {
    let cyclic = ActionGroup::generate(k.clone(), vec![g.clone()], usize::MAX)?;
    cyclic.fixed_subcomplex()
}

/// Complex file: `{"vertices":[...], "maximal_simplices":[[...],...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexFile {
    #[serde(default)]
    pub vertices: Vec<usize>,
    pub maximal_simplices: Vec<Vec<usize>>,
}

impl ComplexFile {
    /// Listed vertices that lie in no simplex become 0-simplices.
    pub fn to_complex(&self) -> SimplicialComplex {
        let mut top = self.maximal_simplices.clone();
        for &v in &self.vertices {
            if !top.iter().any(|s| s.contains(&v)) {
                top.push(vec![v]);
            }
        }
        SimplicialComplex::from_maximal(&top)
    }

    pub fn from_complex(k: &SimplicialComplex) -> Self {
        ComplexFile { vertices: k.vertices(), maximal_simplices: k.maximal_simplices() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedMap {
    pub name: String,
    pub map: Vec<usize>,
}

/// Action file: `{"vertex_maps":[{"name":"g","map":[...]}]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ActionFile {
    pub vertex_maps: Vec<NamedMap>,
}

impl ActionFile {
    pub fn maps(&self, k: &SimplicialComplex) -> Result<Vec<(String, SimplicialMap)>> {
        self.vertex_maps
            .iter()
            .map(|m| Ok((m.name.clone(), SimplicialMap::new(k, m.map.clone())?)))
            .collect()
    }
}

/// Signed permutations of coordinates acting on the cross-polytope boundary.
pub mod catalog {
    use super::*;

    /// Vertex map of the signed coordinate permutation `x_c -> sign_c * x_perm[c]`.
    pub fn signed_permutation(perm: &[usize], negate: &[bool]) -> SimplicialMap {
        let k = perm.len();
        let mut map = vec![0; 2 * k];
        for c in 0..k {
            let flip = negate[c] as usize;
            map[2 * c] = 2 * perm[c] + flip;
            map[2 * c + 1] = 2 * perm[c] + (1 - flip);
        }
        SimplicialMap { map }
    }

    /// Reflection negating coordinate `c`.
    pub fn reflection(k: usize, c: usize) -> SimplicialMap {
        let mut negate = vec![false; k];
        negate[c] = true;
        signed_permutation(&(0..k).collect::<Vec<_>>(), &negate)
    }

    pub fn antipodal(k: usize) -> SimplicialMap {
        signed_permutation(&(0..k).collect::<Vec<_>>(), &vec![true; k])
    }

    /// Rotation by pi negating coordinates `c1` and `c2`.
    pub fn half_turn(k: usize, c1: usize, c2: usize) -> SimplicialMap {
        reflection(k, c1).then(&reflection(k, c2))
    }

    /// Cyclic shift `x_0 -> x_1 -> ... -> x_(k-1) -> x_0` of coordinates.
    pub fn coordinate_cycle(k: usize) -> SimplicialMap {
        let perm: Vec<usize> = (0..k).map(|c| (c + 1) % k).collect();
        signed_permutation(&perm, &vec![false; k])
    }

    /// Full symmetry group of the `k`-cross-polytope boundary, of order `2^k k!`.
    pub fn hyperoctahedral(k: usize) -> Result<ActionGroup> {
        let mut gens = vec![reflection(k, 0)];
        for c in 0..k.saturating_sub(1) {
            let mut perm: Vec<usize> = (0..k).collect();
            perm.swap(c, c + 1);
            gens.push(signed_permutation(&perm, &vec![false; k]));
        }
        ActionGroup::generate(SimplicialComplex::cross_polytope_boundary(k), gens, usize::MAX)
    }
}

#[cfg(test)]
mod tests {
    use super::catalog::*;
    use super::*;

    #[test]
    fn face_closure_counts() {
        let k = SimplicialComplex::simplex_boundary(3);
        assert_eq!(k.counts(), vec![4, 6, 4]);
        assert_eq!(k.dim(), 2);
        assert!(k.is_face_closed());
        let oct = SimplicialComplex::octahedron();
        assert_eq!(oct.counts(), vec![6, 12, 8]);
        assert_eq!(oct.maximal_simplices().len(), 8);
        let empty = SimplicialComplex::from_maximal::<Vec<usize>>(&[]);
        assert_eq!(empty.dim(), -1);
        assert!(empty.is_empty());
    }

    #[test]
    fn non_maximal_inputs_are_reported_and_absorbed() {
        let input = vec![vec![0, 1, 2], vec![0, 1]];
        assert_eq!(SimplicialComplex::non_maximal_inputs(&input), vec![1]);
        assert_eq!(SimplicialComplex::from_maximal(&input).counts(), vec![3, 3, 1]);
    }

    #[test]
    fn cross_polytopes() {
        assert_eq!(SimplicialComplex::cross_polytope_boundary(1).counts(), vec![2]);
        let sq = SimplicialComplex::cross_polytope_boundary(2);
        assert_eq!(sq.counts(), vec![4, 4]);
        assert_eq!(sq.simplices(1).len(), 4);
        assert_eq!(SimplicialComplex::cross_polytope_boundary(4).counts()[3], 16);
    }

    #[test]
    fn subdivision_counts() {
        let s0 = barycentric_subdivide(&SimplicialComplex::cross_polytope_boundary(1));
        assert_eq!(s0.complex.counts(), vec![2]);
        let c8 = barycentric_subdivide(&SimplicialComplex::cross_polytope_boundary(2));
        assert_eq!(c8.complex.counts(), vec![8, 8]);
        let t = barycentric_subdivide(&SimplicialComplex::simplex_boundary(3));
        assert_eq!(t.complex.counts()[0], 14);
        assert_eq!(t.complex.counts(), vec![14, 36, 24]);
        assert!(t.complex.is_face_closed());
    }

    #[test]
    fn maps_are_validated() {
        let oct = SimplicialComplex::octahedron();
        assert!(SimplicialMap::new(&oct, reflection(3, 0).as_slice().to_vec()).is_ok());
        // swapping +e1 with +e2 alone breaks the edge {+e1, -e1}... which is absent; use a non-simplicial swap
        let bad = vec![2, 1, 0, 3, 4, 5];
        assert!(matches!(SimplicialMap::new(&oct, bad), Err(Error::InvalidMap(_))));
        assert!(SimplicialMap::new(&oct, vec![0, 0, 2, 3, 4, 5]).is_err());
    }

    #[test]
    fn regularity_scan() {
        let oct = SimplicialComplex::octahedron();
        assert!(reflection(3, 0).is_regular_on(&oct));
        let rot = ActionGroup::generate(oct.clone(), vec![coordinate_cycle(3)], 100).unwrap();
        assert_eq!(rot.order(), 3);
        assert!(!rot.is_regular());
        let (reg, rounds) = rot.regularized(2).unwrap();
        assert_eq!(rounds, 1);
        assert!(reg.is_regular());
    }

    #[test]
    fn fixed_subcomplexes_on_octahedron() {
        let oct = SimplicialComplex::octahedron();
        let f = fixed_subcomplex(&oct, &reflection(3, 0)).unwrap();
        assert_eq!(f.counts(), vec![4, 4]);
        assert_eq!(f.vertices(), vec![2, 3, 4, 5]);
        let f = fixed_subcomplex(&oct, &half_turn(3, 0, 1)).unwrap();
        assert_eq!(f.counts(), vec![2]);
        assert_eq!(f.vertices(), vec![4, 5]);
        let f = fixed_subcomplex(&oct, &antipodal(3)).unwrap();
        assert!(f.is_empty());
        assert_eq!(fixed_subcomplex(&oct, &coordinate_cycle(3)), Err(Error::NonRegularAction));
        assert_eq!(fixed_subcomplex(&oct, &SimplicialMap::identity(6)).unwrap(), oct);
    }

    #[test]
    fn induced_maps_on_subdivision() {
        let oct = SimplicialComplex::octahedron();
        let sd = barycentric_subdivide(&oct);
        let id = SimplicialMap::identity(6).induced_on_subdivision(&sd);
        assert!(id.is_identity());
        let anti = antipodal(3).induced_on_subdivision(&sd);
        assert!((0..sd.vertex_simplex.len()).all(|v| anti.apply(v) != v));
        let rot = coordinate_cycle(3);
        assert_eq!(rot.induced_on_subdivision(&sd).order(), rot.order());
        let (g, h) = (reflection(3, 1), coordinate_cycle(3));
        assert_eq!(
            g.then(&h).induced_on_subdivision(&sd),
            g.induced_on_subdivision(&sd).then(&h.induced_on_subdivision(&sd))
        );
    }

    #[test]
    fn octahedral_group() {
        let g = hyperoctahedral(3).unwrap();
        assert_eq!(g.order(), 48);
        assert!(!g.is_regular());
        let (reg, rounds) = g.regularized(2).unwrap();
        assert!(reg.is_regular());
        assert_eq!(rounds, 1);
        assert_eq!(hyperoctahedral(2).unwrap().order(), 8);
    }

    #[test]
    fn fixed_sets_shrink_as_groups_grow() {
        let oct = SimplicialComplex::octahedron();
        let h = ActionGroup::generate(oct.clone(), vec![reflection(3, 0)], 10).unwrap();
        let g = ActionGroup::generate(oct, vec![reflection(3, 0), reflection(3, 1)], 10).unwrap();
        let (fh, fg) = (h.fixed_subcomplex().unwrap(), g.fixed_subcomplex().unwrap());
        assert!(fg.is_subcomplex_of(&fh));
        assert_eq!(fg.vertices(), vec![4, 5]);
    }

    #[test]
    fn file_round_trip() {
        let oct = SimplicialComplex::octahedron();
        let file = ComplexFile::from_complex(&oct);
        let json = serde_json::to_string(&file).unwrap();
        let back: ComplexFile = serde_json::from_str(&json).unwrap();
        assert_eq!(back.to_complex(), oct);
        let with_point = ComplexFile { vertices: vec![0, 1, 7], maximal_simplices: vec![vec![0, 1]] };
        assert_eq!(with_point.to_complex().counts(), vec![3, 1]);
    }
}
