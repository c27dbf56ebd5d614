//! Fixed-point checks for finite group actions on mod-`p` homology spheres
//! and acyclic complexes, the Borel dimension formula, the effectiveness
//! bound for elementary abelian groups, and the rigidity oracle for actions of
//! `SAut(F_n)`, `Aut(F_n)`, `SL(n, Z)` and `GL(n, Z)`.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group;
use crate::homology::{betti, is_acyclic_mod_p, sphere_dimension_mod_p};
use crate::linear::is_prime;
use crate::simplicial::{fixed_by, regularize, ActionGroup, SimplicialComplex, SimplicialMap};

/// Subdivision rounds allowed when regularizing an action.
pub const MAX_SUBDIVISIONS: usize = 2;

/// A space by its mod-`p` homology type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "dim", rename_all = "snake_case")]
pub enum SpaceKind {
    /// Generalized sphere of the given dimension (`-1` is the empty set).
    Sphere(isize),
    /// Acyclic homology manifold of the given dimension.
    Acyclic(usize),
}

impl SpaceKind {
    /// The sphere dimension `m`, or the acyclic dimension minus one.
    pub fn m(self) -> isize {
        match self {
            SpaceKind::Sphere(m) => m,
            SpaceKind::Acyclic(d) => d as isize - 1,
        }
    }

    fn validate(self) -> Result<()> {
        match self {
            SpaceKind::Sphere(m) if m < -1 => {
                Err(Error::InvalidParameters(format!("sphere dimension must be at least -1, got {m}")))
            }
            _ => Ok(()),
        }
    }
}

/// Outcome of one executable check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SmithVerdict {
    pub claim: String,
    pub p: u32,
    pub expected: String,
    pub observed: String,
    pub subdivisions: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fixed_betti: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub checked: Option<usize>,
    pub pass: bool,
}

/// Homology type of `k` mod `p`.
pub fn classify(k: &SimplicialComplex, p: u32) -> Result<SpaceKind> {
    if let Some(m) = sphere_dimension_mod_p(k, p)? {
        return Ok(SpaceKind::Sphere(m));
    }
    if is_acyclic_mod_p(k, p)? {
        return Ok(SpaceKind::Acyclic(k.dim().max(0) as usize));
    }
    Err(Error::Precondition(format!(
        "complex is neither a sphere nor acyclic mod {p} (betti {:?})",
        betti(k, p)?.betti
    )))
}

fn order_of(g: &SimplicialMap) -> usize {
    g.order()
}

fn describe_sphere(r: Option<isize>) -> String {
    match r {
        Some(-1) => "empty".into(),
        Some(r) => format!("S^{r}"),
        None => "not a homology sphere".into(),
    }
}

/// Fixed set of an order-`p` automorphism: a homology sphere of dimension
/// `r <= m - 1` (with `m - r` even when `p` is odd) for a sphere, and a
/// nonempty acyclic complex for an acyclic one.
pub fn smith_fixed_check(k: &SimplicialComplex, g: &SimplicialMap, p: u32) -> Result<SmithVerdict> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    SimplicialMap::new(k, g.as_slice().to_vec())?;
    let ord = order_of(g);
    if ord != p as usize {
        return Err(Error::Precondition(format!("map has order {ord}, expected {p}")));
    }
    let kind = classify(k, p)?;
    let cyclic = ActionGroup::generate(k.clone(), vec![g.clone()], p as usize + 1)?;
    let (complex, maps, rounds) = regularize(k, cyclic.elements(), MAX_SUBDIVISIONS)?;
    let fixed = fixed_by(&complex, &maps);
    let fixed_betti = betti(&fixed, p)?.betti;
    let (expected, observed, pass) = match kind {
        SpaceKind::Sphere(m) => {
            let r = sphere_dimension_mod_p(&fixed, p)?;
            let expected = if p == 2 {
                format!("sphere S^r with r <= {}", m - 1)
            } else {
                format!("sphere S^r with r <= {} and {m} - r even", m - 2)
            };
            let pass = match r {
                Some(r) if p == 2 => r <= m - 1,
                Some(r) => r <= m - 2 && (m - r) % 2 == 0,
                None => false,
            };
            (expected, describe_sphere(r), pass)
        }
        SpaceKind::Acyclic(_) => {
            let acyclic = is_acyclic_mod_p(&fixed, p)?;
            let observed = if fixed.is_empty() {
                "empty".to_string()
            } else if acyclic {
                "nonempty acyclic".to_string()
            } else {
                format!("betti {fixed_betti:?}")
            };
            ("nonempty acyclic".to_string(), observed, acyclic)
        }
    };
    Ok(SmithVerdict {
        claim: "smith_fixed".into(),
        p,
        expected,
        observed,
        subdivisions: rounds,
        fixed_betti: Some(fixed_betti),
        checked: None,
        pass,
    })
}

fn sphere_dim_of(k: &SimplicialComplex, p: u32, what: &str) -> Result<isize> {
    sphere_dimension_mod_p(k, p)?
        .ok_or_else(|| Error::Precondition(format!("fixed set of {what} is not a homology sphere mod {p}")))
}

/// Cyclic subgroups of order `p` in a group given by its elements, each
/// represented by its least generator.
fn cyclic_subgroups(elements: &[SimplicialMap], p: usize) -> Vec<SimplicialMap> {
    let Some(first) = elements.first() else {
        return Vec::new();
    };
    let id = SimplicialMap::identity(first.as_slice().len());
    let mut seen: BTreeSet<Vec<SimplicialMap>> = BTreeSet::new();
    let mut reps = Vec::new();
    for x in elements {
        if x.is_identity() || group::element_order(x, &id, p) != Some(p) {
            continue;
        }
        let sub = group::closure(id.clone(), std::slice::from_ref(x), p + 1).unwrap();
        if seen.insert(sub) {
            reps.push(x.clone());
        }
    }
    reps
}

/// `n - r = sum over cyclic C of (r_C - r)` for `A = (Z_p)^2` acting on a mod-`p` sphere.
pub fn borel_check(k: &SimplicialComplex, gens: &[SimplicialMap], p: u32) -> Result<SmithVerdict> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let a = ActionGroup::generate(k.clone(), gens.to_vec(), 1 << 16)?;
    let id = a.identity();
    if group::elementary_abelian_rank(a.generators(), &id, a.order(), p as usize) != Some(2) {
        return Err(Error::Precondition(format!("group of order {} is not (Z_{p})^2", a.order())));
    }
    let n = match classify(k, p)? {
        SpaceKind::Sphere(n) => n,
        SpaceKind::Acyclic(_) => return Err(Error::Precondition("the formula is checked on spheres".into())),
    };
    let (complex, maps, rounds) = regularize(k, a.elements(), MAX_SUBDIVISIONS)?;
    let fix_a = fixed_by(&complex, &maps);
    if fix_a.is_empty() {
        return Err(Error::Precondition("Fix(A) is empty".into()));
    }
    let r = sphere_dim_of(&fix_a, p, "A")?;
    let mut sum = 0;
    let mut parts = Vec::new();
    for c in cyclic_subgroups(&maps, p as usize) {
        let rc = sphere_dim_of(&fixed_by(&complex, std::slice::from_ref(&c)), p, "a cyclic subgroup")?;
        parts.push(rc.to_string());
        sum += rc - r;
    }
    let lhs = n - r;
    Ok(SmithVerdict {
        claim: "borel".into(),
        p,
        expected: format!("n - r = {lhs} with n = {n}, r = {r}"),
        observed: format!("sum (r_C - r) = {sum} with r_C = {}", parts.join(", ")),
        subdivisions: rounds,
        fixed_betti: Some(betti(&fix_a, p)?.betti),
        checked: Some(parts.len()),
        pass: lhs == sum,
    })
}

fn require_sphere_or_acyclic(k: &SimplicialComplex, p: u32) -> Result<SpaceKind> {
    classify(k, p)
}

/// For commuting involutions `a`, `b`: equal fixed sets force `a = b`.
pub fn involution_pair_check(k: &SimplicialComplex, a: &SimplicialMap, b: &SimplicialMap) -> Result<SmithVerdict> {
    require_sphere_or_acyclic(k, 2)?;
    for g in [a, b] {
        SimplicialMap::new(k, g.as_slice().to_vec())?;
        if order_of(g) != 2 {
            return Err(Error::Precondition(format!("map has order {}, expected 2", order_of(g))));
        }
    }
    if a.then(b) != b.then(a) {
        return Err(Error::Precondition("maps do not commute".into()));
    }
    let group = ActionGroup::generate(k.clone(), vec![a.clone(), b.clone()], 16)?;
    let (complex, maps, rounds) = regularize(k, group.elements(), MAX_SUBDIVISIONS)?;
    let find = |g: &SimplicialMap| group.elements().iter().position(|x| x == g).unwrap();
    let (ra, rb) = (&maps[find(a)], &maps[find(b)]);
    let same = fixed_by(&complex, std::slice::from_ref(ra)) == fixed_by(&complex, std::slice::from_ref(rb));
    let pass = !same || a == b;
    Ok(SmithVerdict {
        claim: "involution_pair".into(),
        p: 2,
        expected: "equal fixed sets only for equal maps".into(),
        observed: format!("fixed sets {}, maps {}", if same { "equal" } else { "differ" }, if a == b { "equal" } else { "differ" }),
        subdivisions: rounds,
        fixed_betti: None,
        checked: Some(1),
        pass,
    })
}

/// Every commuting pair of involutions in `group`.
pub fn involution_pair_scan(group: &ActionGroup) -> Result<SmithVerdict> {
    let k = group.complex();
    require_sphere_or_acyclic(k, 2)?;
    let (complex, maps, rounds) = regularize(k, group.elements(), MAX_SUBDIVISIONS)?;
    let involutions: Vec<usize> = (0..maps.len()).filter(|&i| order_of(&group.elements()[i]) == 2).collect();
    let fixed: Vec<SimplicialComplex> =
        involutions.iter().map(|&i| fixed_by(&complex, std::slice::from_ref(&maps[i]))).collect();
    let (mut checked, mut counterexamples) = (0, Vec::new());
    for x in 0..involutions.len() {
        for y in x..involutions.len() {
            let (a, b) = (&group.elements()[involutions[x]], &group.elements()[involutions[y]]);
            if a.then(b) != b.then(a) {
                continue;
            }
            checked += 1;
            if fixed[x] == fixed[y] && a != b {
                counterexamples.push((involutions[x], involutions[y]));
            }
        }
    }
    Ok(SmithVerdict {
        claim: "involution_pair_scan".into(),
        p: 2,
        expected: "no commuting pair with equal fixed sets and distinct maps".into(),
        observed: format!("{} counterexamples among {checked} commuting pairs", counterexamples.len()),
        subdivisions: rounds,
        fixed_betti: None,
        checked: Some(checked),
        pass: counterexamples.is_empty(),
    })
}

/// All `(Z_p)^2` subgroups of a group given by its elements, as sorted element lists.
pub fn rank_two_subgroups(elements: &[SimplicialMap], p: usize) -> Vec<Vec<SimplicialMap>> {
    let Some(first) = elements.first() else {
        return Vec::new();
    };
    let id = SimplicialMap::identity(first.as_slice().len());
    let order_p: Vec<&SimplicialMap> =
        elements.iter().filter(|x| group::element_order(*x, &id, p) == Some(p)).collect();
    let mut found: BTreeSet<Vec<SimplicialMap>> = BTreeSet::new();
    for (i, a) in order_p.iter().enumerate() {
        for b in &order_p[i + 1..] {
            if a.then(b) != b.then(a) {
                continue;
            }
            let sub = group::closure(id.clone(), &[(*a).clone(), (*b).clone()], p * p + 1).unwrap();
            if sub.len() == p * p {
                found.insert(sub);
            }
        }
    }
    found.into_iter().collect()
}

/// No `(Z_p)^2` subgroup acts freely on a mod-`p` sphere.
pub fn no_free_rank2_check(group: &ActionGroup, p: u32) -> Result<SmithVerdict> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let k = group.complex();
    if !matches!(classify(k, p)?, SpaceKind::Sphere(_)) {
        return Err(Error::Precondition(format!("complex is not a sphere mod {p}")));
    }
    let (complex, maps, rounds) = regularize(k, group.elements(), MAX_SUBDIVISIONS)?;
    let subgroups = rank_two_subgroups(group.elements(), p as usize);
    let has_fixed_point = |g: &SimplicialMap| {
        let i = group.elements().binary_search(g).unwrap();
        !fixed_by(&complex, std::slice::from_ref(&maps[i])).is_empty()
    };
    let free = subgroups
        .iter()
        .filter(|sub| !sub.iter().filter(|g| !g.is_identity()).any(has_fixed_point))
        .count();
    Ok(SmithVerdict {
        claim: "no_free_rank2".into(),
        p,
        expected: "every (Z_p)^2 subgroup has an element with a fixed point".into(),
        observed: format!("{free} free actions among {} subgroups", subgroups.len()),
        subdivisions: rounds,
        fixed_betti: None,
        checked: Some(subgroups.len()),
        pass: free == 0,
    })
}

/// Whether `(Z_p)^d` can act effectively on the given space.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EffectiveBound {
    pub ruled_out: bool,
    pub clause: String,
}

/// `(Z_2)^d` cannot act effectively when `m < d - 1`, and `(Z_p)^d` for odd
/// `p` when `m < 2d - 1`, where `m` is the sphere dimension or the acyclic
/// dimension minus one.
pub fn effective_bound(p: u32, d: usize, kind: SpaceKind) -> Result<EffectiveBound> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    kind.validate()?;
    let m = kind.m();
    let d = d as isize;
    let (bound, clause) = if p == 2 { (d - 1, "m < d - 1") } else { (2 * d - 1, "m < 2d - 1") };
    let ruled_out = m < bound;
    let clause = format!("{clause}: {m} {} {bound}", if ruled_out { "<" } else { ">=" });
    Ok(EffectiveBound { ruled_out, clause })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ActingGroup {
    Saut,
    Aut,
    Sl,
    Gl,
}

impl std::str::FromStr for ActingGroup {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "saut" => Ok(ActingGroup::Saut),
            "aut" => Ok(ActingGroup::Aut),
            "sl" => Ok(ActingGroup::Sl),
            "gl" => Ok(ActingGroup::Gl),
            _ => Err(Error::InvalidParameters(format!("unknown group `{s}`; expected saut, aut, sl or gl"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    /// Every action is trivial.
    TrivialForced,
    /// Every action factors through the determinant.
    DeterminantOnly,
    /// A covered case in which nontrivial actions are not excluded.
    NotRuledOut,
    /// Parameters outside every theorem's hypotheses.
    NotCovered,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleVerdict {
    pub verdict: Verdict,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub theorem: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub citation: Option<String>,
}

impl OracleVerdict {
    fn plain(verdict: Verdict) -> Self {
        OracleVerdict { verdict, theorem: None, citation: None }
    }
}

/// Which rigidity theorem, if any, decides actions of `group` on `kind` with `Z_p` coefficients.
pub fn rigidity_oracle(group: ActingGroup, n: usize, kind: SpaceKind, p: u32) -> Result<OracleVerdict> {
    if n < 2 {
        return Err(Error::InvalidParameters(format!("n must be at least 2, got {n}")));
    }
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    kind.validate()?;
    let n_i = n as isize;
    let (covered, theorem, hypotheses) = match (p, group, kind) {
        (2, ActingGroup::Saut | ActingGroup::Aut, SpaceKind::Sphere(_)) => {
            (n >= 3, "sphere_Z2", "n >= 3, generalized d-sphere over Z_2, d < n - 1")
        }
        (2, ActingGroup::Saut | ActingGroup::Aut, SpaceKind::Acyclic(_)) => {
            (n >= 3, "acyclic_Z2", "n >= 3, d-dimensional Z_2-acyclic homology manifold, d < n")
        }
        (2, ActingGroup::Sl | ActingGroup::Gl, SpaceKind::Sphere(_)) => {
            (n >= 3, "sl_sphere_Z2", "n >= 3, generalized (d-1)-sphere over Z_2, d < n")
        }
        (2, ActingGroup::Sl | ActingGroup::Gl, SpaceKind::Acyclic(_)) => {
            (n >= 3, "sl_acyclic_Z2", "n >= 3, d-dimensional Z_2-acyclic homology manifold, d < n")
        }
        (3, ActingGroup::Saut, SpaceKind::Sphere(_)) => {
            (n > 3 && n % 2 == 0, "sphere_Z3", "n > 3 even, generalized m-sphere over Z_3, m < n - 1")
        }
        (3, ActingGroup::Saut, SpaceKind::Acyclic(_)) => (
            n > 3 && n % 2 == 0,
            "acyclic_Z3",
            "n > 3 even, (m+1)-dimensional Z_3-acyclic homology manifold, m < n - 1",
        ),
        _ => (false, "", ""),
    };
    if !covered {
        return Ok(OracleVerdict::plain(Verdict::NotCovered));
    }
    let applies = match kind {
        SpaceKind::Sphere(m) => m < n_i - 1,
        SpaceKind::Acyclic(d) => (d as isize) < n_i,
    };
    if !applies {
        return Ok(OracleVerdict::plain(Verdict::NotRuledOut));
    }
    let verdict = match group {
        ActingGroup::Saut | ActingGroup::Sl => Verdict::TrivialForced,
        ActingGroup::Aut | ActingGroup::Gl => Verdict::DeterminantOnly,
    };
    let scope = match group {
        ActingGroup::Saut | ActingGroup::Aut => "SAut(F_n) acts trivially",
        ActingGroup::Sl | ActingGroup::Gl => "SL(n, Z) acts trivially",
    };
    Ok(OracleVerdict {
        verdict,
        theorem: Some(theorem.to_string()),
        citation: Some(format!("{scope}; hypotheses: {hypotheses}")),
    })
}
