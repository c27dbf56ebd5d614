//! End-to-end acceptance criteria. Each criterion prints one PASS or FAIL
//! line; the process exits nonzero if any fails.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use autfn_core::algebraverify::{
    build_sn, build_swn, build_t, is_elementary_abelian, run_relation_suite, FiniteAutGroup, Status, SuiteParams,
};
use autfn_core::aut::t_graph;
use autfn_core::homology::{self, ChainComplex};
use autfn_core::linear::SimplicityMode;
use autfn_core::simplicial::{barycentric_subdivide, catalog, fixed_subcomplex};
use autfn_core::smith::{self, ActingGroup, SpaceKind, Verdict};
use autfn_core::{
    abelianize, Endo, Factor, FiniteMatrixGroup, GenWord, GeneratorName, IntMatrix, ModPMatrix, Permutation,
    SimplicialComplex,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn named(g: GeneratorName, n: usize) -> Endo {
    Endo::named(&g, n).unwrap()
}

fn relation_suite() -> Outcome {
    let start = Instant::now();
    let report = run_relation_suite(&SuiteParams::default()).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let s = &report.summary;
    ensure(s.failed == 0 && s.skipped == 0, || {
        let bad: Vec<&str> =
            report.results.iter().filter(|r| r.status != Status::Pass).map(|r| r.id.as_str()).collect();
        format!("{} failed, {} skipped: {bad:?}", s.failed, s.skipped)
    })?;
    let ids: Vec<&str> = report.results.iter().map(|r| r.id.as_str()).collect();
    let count = |prefix: &str| ids.iter().filter(|id| id.starts_with(prefix)).count();
    let signs_n4 = count("nielsen.sign_conjugation.n4.");
    ensure(signs_n4 >= 48, || format!("only {signs_n4} sign instances at n = 4"))?;
    for family in [
        "nielsen.relabel.",
        "nielsen.commutator.",
        "nielsen.delta.",
        "involution.epsilon_product.n5",
        "tgroup.rotation_beta.",
        "tgroup.rotation_b.",
        "tgroup.rotation_a.",
        "tgroup.swap_nielsen.",
        "tgroup.saut_relation",
        "tgroup.t_product",
        "tgroup.t_mixed",
        "signed_perm.combined.",
        "signed_perm.sn_mod2.",
        "matrix.psl_klein.n4",
        "matrix.sl4z.",
    ] {
        ensure(count(family) > 0, || format!("no checks in family {family}"))?;
    }
    ensure(elapsed < Duration::from_secs(10), || format!("took {elapsed:?}"))?;
    Ok(format!("{} checks, {signs_n4} sign instances at n = 4, {:.0} ms", ids.len(), elapsed.as_secs_f64() * 1e3))
}

fn enumeration() -> Outcome {
    for m in 1..=3usize {
        let t = build_t(m).map_err(|e| e.to_string())?;
        ensure(t.order() == 3usize.pow(m as u32), || format!("|T({m})| = {}", t.order()))?;
        ensure(is_elementary_abelian(&t, 3) == Some(m), || format!("T({m}) is not (Z_3)^{m}"))?;
    }
    let sw3 = build_swn(3).map_err(|e| e.to_string())?.order();
    ensure(sw3 == 24, || format!("|SW_3| = {sw3}"))?;
    for n in 3..=5usize {
        let sn = build_sn(n).map_err(|e| e.to_string())?;
        ensure(sn.order() == 1 << (n - 1), || format!("|SN({n})| = {}", sn.order()))?;
        let has_delta = sn.contains(&named(GeneratorName::Delta, n));
        ensure(has_delta == (n % 2 == 0), || format!("Delta in SN({n}) is {has_delta}"))?;
    }
    Ok("orders 3, 9, 27; |SW_3| = 24; |SN| = 4, 8, 16".into())
}

fn graph_realization() -> Outcome {
    for m in 1..=3 {
        let (g, rotations) = t_graph(m);
        let mut psi = Vec::new();
        for (i, s) in rotations.iter().enumerate() {
            let x = g.induced(s).map_err(|e| e.to_string())?;
            let r = named(GeneratorName::R(i + 1), 2 * m);
            ensure(x == r || x == r.inverse().unwrap(), || format!("rotation {} gives {x}", i + 1))?;
            psi.push(x);
        }
        let generated = FiniteAutGroup::generate(&psi, 1000).map_err(|e| e.to_string())?;
        let t = build_t(m).map_err(|e| e.to_string())?;
        ensure(generated.elements() == t.elements(), || format!("element sets differ at m = {m}"))?;
    }
    Ok("rotations generate T(m) for m = 1, 2, 3".into())
}

fn matrix_groups() -> Outcome {
    let start = Instant::now();
    let sl3 = FiniteMatrixGroup::special_linear(3, 2, 1_000_000).map_err(|e| e.to_string())?;
    let classes = sl3.is_simple(SimplicityMode::ClassRepresentatives);
    let exhaustive = sl3.is_simple(SimplicityMode::Exhaustive);
    let t3 = start.elapsed();
    ensure(sl3.order() == 168 && classes && exhaustive, || {
        format!("SL(3,2): order {}, simple {classes}/{exhaustive}", sl3.order())
    })?;
    ensure(t3 < Duration::from_secs(1), || format!("n = 3 took {t3:?}"))?;
    let start = Instant::now();
    let sl4 = FiniteMatrixGroup::special_linear(4, 2, 1_000_000).map_err(|e| e.to_string())?;
    let simple4 = sl4.is_simple(SimplicityMode::ClassRepresentatives);
    let t4 = start.elapsed();
    ensure(sl4.order() == 20160 && simple4, || format!("SL(4,2): order {}, simple {simple4}", sl4.order()))?;
    ensure(t4 < Duration::from_secs(120), || format!("n = 4 took {t4:?}"))?;
    let e = |i, j| ModPMatrix::elementary(i, j, 3, 2).unwrap();
    let lhs = e(3, 2).mul(&e(2, 1)).unwrap().mul(&e(3, 2)).unwrap();
    let rhs = e(3, 1).mul(&e(2, 1)).unwrap();
    ensure(lhs == rhs, || format!("E32 E21 E32 = {lhs}, E31 E21 = {rhs}"))?;
    Ok(format!("168 and 20160, both simple; {:.0} ms and {:.1} s", t3.as_secs_f64() * 1e3, t4.as_secs_f64()))
}

fn rank_facts() -> Outcome {
    for n in 3..=5usize {
        let cols = FiniteMatrixGroup::column_group(n, 2).map_err(|e| e.to_string())?;
        let r = cols.elementary_abelian_rank(2);
        ensure(r == Some(n - 1), || format!("column group rank {r:?} at n = {n}"))?;
    }
    for n in 4..=5usize {
        let block = FiniteMatrixGroup::block_group(n, 2).map_err(|e| e.to_string())?;
        let want = n.div_ceil(2) * (n / 2);
        let r = block.elementary_abelian_rank(2);
        ensure(r == Some(want) && want >= n, || format!("block group rank {r:?} at n = {n}, want {want}"))?;
    }
    Ok("column ranks n - 1, block ranks 4 and 6".into())
}

fn random_word(rng: &mut ChaCha8Rng, n: usize) -> GenWord {
    let mut factors = Vec::new();
    for _ in 0..6 {
        let i = rng.gen_range(1..=n);
        let j = (i + rng.gen_range(1..n) - 1) % n + 1;
        let name = match rng.gen_range(0..5) {
            0 => GeneratorName::Rho(i, j),
            1 => GeneratorName::Lambda(i, j),
            2 => GeneratorName::Inversion(i),
            3 => GeneratorName::Epsilon(i.min(j), i.max(j)),
            _ => GeneratorName::Perm(Permutation::transposition(i.min(j), i.max(j), n).unwrap()),
        };
        factors.push(if rng.gen_bool(0.5) { Factor::new(name) } else { Factor::inv(name) });
    }
    GenWord::of(factors)
}

/// Row `i` holds the exponent sums of the image of `a_i`.
fn exponent_matrix(f: &Endo) -> IntMatrix {
    IntMatrix::from_rows(f.images().iter().map(|w| w.exponent_sums()).collect()).unwrap()
}

fn abelianization() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for trial in 0..1000 {
        let n = rng.gen_range(2..=5);
        let f = random_word(&mut rng, n).eval(n).unwrap();
        let g = random_word(&mut rng, n).eval(n).unwrap();
        let fg = f.compose(&g).unwrap();
        ensure(abelianize(&fg) == exponent_matrix(&fg), || format!("trial {trial}: abelianize disagrees with exponent sums"))?;
        let product = exponent_matrix(&f).mul(&exponent_matrix(&g)).unwrap();
        ensure(abelianize(&fg) == product, || format!("trial {trial}: not a homomorphism at n = {n}"))?;
    }
    let mut counted = 0;
    for n in 2..=5usize {
        let mut plus = vec![];
        for i in 1..=n {
            for j in (1..=n).filter(|&j| j != i) {
                plus.push(GeneratorName::Rho(i, j));
                plus.push(GeneratorName::Lambda(i, j));
                if i < j {
                    plus.push(GeneratorName::Epsilon(i, j));
                }
            }
        }
        if n % 2 == 0 {
            plus.push(GeneratorName::Delta);
            for i in 1..=n / 2 {
                plus.push(GeneratorName::R(i));
                plus.push(GeneratorName::Beta(i));
            }
        }
        let mut minus: Vec<GeneratorName> = (1..=n).map(GeneratorName::Inversion).collect();
        for i in 1..n {
            for j in i + 1..=n {
                minus.push(GeneratorName::Perm(Permutation::transposition(i, j, n).unwrap()));
            }
        }
        for (names, want) in [(plus, 1), (minus, -1)] {
            for g in names {
                let det = abelianize(&named(g.clone(), n)).det();
                ensure(det == want, || format!("det {g} = {det} at n = {n}"))?;
                counted += 1;
            }
        }
    }
    Ok(format!("1000 random pairs; {counted} generator determinants"))
}

fn catalog_complexes() -> Vec<(&'static str, SimplicialComplex)> {
    let oct = SimplicialComplex::octahedron();
    vec![
        ("boundary of 3-simplex", SimplicialComplex::simplex_boundary(3)),
        ("boundary of 4-simplex", SimplicialComplex::simplex_boundary(4)),
        ("S^0", SimplicialComplex::cross_polytope_boundary(1)),
        ("square", SimplicialComplex::cross_polytope_boundary(2)),
        ("octahedron", oct.clone()),
        ("S^3", SimplicialComplex::cross_polytope_boundary(4)),
        ("pentagon", SimplicialComplex::cycle(5)),
        ("cone on octahedron", oct.cone()),
        ("cone on boundary of 3-simplex", SimplicialComplex::simplex_boundary(3).cone()),
    ]
}

fn homology_facts() -> Outcome {
    let b = |k: &SimplicialComplex, p| homology::betti(k, p).map(|v| v.betti).map_err(|e| e.to_string());
    let expect = |name: &str, got: Vec<usize>, want: &[usize]| ensure(got == want, || format!("{name}: {got:?}"));
    expect("boundary of 3-simplex", b(&SimplicialComplex::simplex_boundary(3), 2)?, &[1, 0, 1])?;
    expect("boundary of 4-simplex", b(&SimplicialComplex::simplex_boundary(4), 2)?, &[1, 0, 0, 1])?;
    let oct = SimplicialComplex::octahedron();
    expect("octahedron mod 2", b(&oct, 2)?, &[1, 0, 1])?;
    expect("octahedron mod 3", b(&oct, 3)?, &[1, 0, 1])?;
    ensure(homology::is_acyclic_mod_p(&oct.cone(), 2).unwrap(), || "cone not acyclic".into())?;
    for (name, k) in catalog_complexes() {
        let sd = barycentric_subdivide(&k).complex;
        for p in [2, 3] {
            ensure(b(&k, p)? == b(&sd, p)?, || format!("{name}: subdivision changes betti mod {p}"))?;
            for complex in [&k, &sd] {
                let c = ChainComplex::new(complex, p).unwrap();
                ensure(c.squares_vanish(), || format!("{name}: boundary squared is not zero"))?;
                let betti = c.betti();
                let alternating: i64 = betti.iter().enumerate().map(|(i, &x)| if i % 2 == 0 { x as i64 } else { -(x as i64) }).sum();
                let chi = homology::euler_characteristic(complex);
                let from_counts: i64 = complex.counts().iter().enumerate().map(|(i, &x)| if i % 2 == 0 { x as i64 } else { -(x as i64) }).sum();
                ensure(alternating == chi && chi == from_counts, || format!("{name}: Euler mismatch mod {p}"))?;
            }
        }
    }
    Ok(format!("{} catalog complexes and their subdivisions", catalog_complexes().len()))
}

fn smith_catalog() -> Outcome {
    let oct = SimplicialComplex::octahedron();
    let cases = [
        ("reflection", catalog::reflection(3, 0), 2, "S^1"),
        ("half turn", catalog::half_turn(3, 0, 1), 2, "S^0"),
        ("antipodal", catalog::antipodal(3), 2, "empty"),
        ("order-3 rotation", catalog::coordinate_cycle(3), 3, "S^0"),
    ];
    for (name, g, p, want) in cases {
        let v = smith::smith_fixed_check(&oct, &g, p).map_err(|e| format!("{name}: {e}"))?;
        ensure(v.pass && v.observed == want && v.subdivisions <= 2, || {
            format!("{name}: observed {} after {} subdivisions, pass {}", v.observed, v.subdivisions, v.pass)
        })?;
    }
    Ok("S^1, S^0, empty, S^0".into())
}

fn borel() -> Outcome {
    let oct = SimplicialComplex::octahedron();
    let (a, b) = (catalog::reflection(3, 0), catalog::reflection(3, 1));
    let v = smith::borel_check(&oct, &[a.clone(), b.clone()], 2).map_err(|e| e.to_string())?;
    ensure(v.pass, || format!("borel check failed: {}", v.observed))?;
    // independent recount: dimensions of the fixed spheres of the three cyclic subgroups
    let sphere_dim = |k: &SimplicialComplex| homology::sphere_dimension_mod_p(k, 2).unwrap().unwrap();
    let r = sphere_dim(&smith_fixed_both(&oct, &a, &b));
    let n = sphere_dim(&oct);
    let sum: isize = [a.clone(), b.clone(), a.then(&b)]
        .iter()
        .map(|c| sphere_dim(&fixed_subcomplex(&oct, c).unwrap()) - r)
        .sum();
    ensure(n - r == 2 && sum == 2, || format!("n - r = {}, sum = {sum}", n - r))?;
    Ok(format!("n - r = {} = sum (r_C - r)", n - r))
}

fn smith_fixed_both(
    k: &SimplicialComplex,
    a: &autfn_core::SimplicialMap,
    b: &autfn_core::SimplicialMap,
) -> SimplicialComplex {
    let fa = fixed_subcomplex(k, a).unwrap();
    let fb = fixed_subcomplex(k, b).unwrap();
    let keep: Vec<usize> = fa.vertices().into_iter().filter(|v| fb.vertices().contains(v)).collect();
    k.full_subcomplex(|v| keep.contains(&v))
}

fn involution_pairs() -> Outcome {
    let g = catalog::hyperoctahedral(3).map_err(|e| e.to_string())?;
    ensure(g.order() == 48, || format!("symmetry group has order {}", g.order()))?;
    let scan = smith::involution_pair_scan(&g).map_err(|e| e.to_string())?;
    ensure(scan.pass, || scan.observed.clone())?;
    let free = smith::no_free_rank2_check(&g, 2).map_err(|e| e.to_string())?;
    ensure(free.pass, || free.observed.clone())?;
    Ok(format!("{} commuting pairs, {} Klein subgroups", scan.checked.unwrap(), free.checked.unwrap()))
}

fn oracle_boundaries() -> Outcome {
    let verdict = |g, n, kind, p| smith::rigidity_oracle(g, n, kind, p).map(|v| v.verdict).map_err(|e| e.to_string());
    let trivial = |g, n, kind, p| verdict(g, n, kind, p).map(|v| v == Verdict::TrivialForced);
    let mut cases = 0;
    for n in 2..=12usize {
        let ni = n as isize;
        for d in 0..=12usize {
            let di = d as isize;
            let z3_applies = n > 3 && n % 2 == 0;
            let expected = [
                (SpaceKind::Sphere(di), 2, n >= 3 && di < ni - 1),
                (SpaceKind::Acyclic(d), 2, n >= 3 && di < ni),
                (SpaceKind::Sphere(di), 3, z3_applies && di < ni - 1),
                (SpaceKind::Acyclic(d), 3, z3_applies && di < ni),
            ];
            for (kind, p, want) in expected {
                let got = trivial(ActingGroup::Saut, n, kind, p)?;
                ensure(got == want, || format!("SAut n = {n}, {kind:?}, p = {p}: trivial_forced is {got}"))?;
                cases += 1;
                if got {
                    ensure(trivial(ActingGroup::Saut, n + 2, kind, p)?, || format!("not monotone in n at {n}, {kind:?}"))?;
                    if p == 2 {
                        ensure(trivial(ActingGroup::Saut, n + 1, kind, p)?, || format!("not monotone in n at {n}, {kind:?}"))?;
                    }
                    if d > 0 {
                        let smaller = match kind {
                            SpaceKind::Sphere(_) => SpaceKind::Sphere(di - 1),
                            SpaceKind::Acyclic(_) => SpaceKind::Acyclic(d - 1),
                        };
                        ensure(trivial(ActingGroup::Saut, n, smaller, p)?, || format!("not anti-monotone in d at {n}, {kind:?}"))?;
                    }
                }
            }
            if n >= 3 && d == n - 1 {
                let v = verdict(ActingGroup::Saut, n, SpaceKind::Sphere(di), 2)?;
                ensure(v == Verdict::NotRuledOut, || format!("sphere boundary at n = {n} gives {v:?}"))?;
            }
            if n >= 3 && d == n {
                let v = verdict(ActingGroup::Saut, n, SpaceKind::Acyclic(d), 2)?;
                ensure(v == Verdict::NotRuledOut, || format!("acyclic boundary at n = {n} gives {v:?}"))?;
            }
            if n % 2 == 1 {
                let v = verdict(ActingGroup::Saut, n, SpaceKind::Sphere(di), 3)?;
                ensure(v == Verdict::NotCovered, || format!("odd n = {n} with p = 3 gives {v:?}"))?;
            }
        }
    }
    Ok(format!("{cases} sweep cases over n <= 12, d <= 12"))
}

fn strip_timing(report: &[u8]) -> String {
    String::from_utf8_lossy(report).lines().filter(|l| !l.trim_start().starts_with("\"millis\"")).collect::<Vec<_>>().join("\n")
}

fn determinism() -> Outcome {
    let run = |extra: &[&str]| -> Result<Vec<u8>, String> {
        let o = Command::new(env!("CARGO_BIN_EXE_autfn"))
            .args(extra)
            .arg("relations")
            .env_remove("AUTFN_CAP")
            .output()
            .map_err(|e| e.to_string())?;
        ensure(o.status.code() == Some(0), || format!("exit {:?}", o.status.code()))?;
        Ok(o.stdout)
    };
    let first = strip_timing(&run(&[])?);
    let second = strip_timing(&run(&[])?);
    let jobs8 = strip_timing(&run(&["--jobs", "8"])?);
    let jobs1 = strip_timing(&run(&["--jobs", "1"])?);
    ensure(first == second, || "two default runs differ".into())?;
    ensure(first == jobs8, || "--jobs 8 differs from the default run".into())?;
    ensure(first == jobs1, || "--jobs 1 differs from the default run".into())?;
    ensure(first.contains("\"failed\": 0"), || "report has failures".into())?;
    Ok(format!("4 runs identical modulo timing ({} bytes)", first.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("relation suite", relation_suite),
        ("subgroup enumeration", enumeration),
        ("graph realization", graph_realization),
        ("matrix groups", matrix_groups),
        ("rank facts", rank_facts),
        ("abelianization", abelianization),
        ("homology", homology_facts),
        ("smith catalog", smith_catalog),
        ("borel formula", borel),
        ("involution pairs", involution_pairs),
        ("oracle boundaries", oracle_boundaries),
        ("determinism", determinism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("PASS criterion {:>2} {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {:>2} {name}: {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
