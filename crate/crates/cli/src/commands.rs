use std::fmt::Write;
use std::fs;

use anyhow::{anyhow, bail, Context, Result};
use autfn_core::algebraverify::{self, FiniteAutGroup, SuiteParams, DEFAULT_AUT_CAP};
use autfn_core::aut::GraphFile;
use autfn_core::group;
use autfn_core::homology;
use autfn_core::linear::{SimplicityMode, DEFAULT_MATRIX_CAP};
use autfn_core::simplicial::{ActionFile, ComplexFile};
use autfn_core::smith::{self, ActingGroup, OracleVerdict, SmithVerdict, SpaceKind};
use autfn_core::{
    abelianize, ActionGroup, Endo, FiniteMatrixGroup, GenWord, LabelledGraph, ModPMatrix, Naming, Order,
    SimplicialComplex, SimplicialMap,
};
use serde::{Deserialize, Serialize};

use crate::output::{self, ReportDocument};
use crate::{Cli, Command, Format, SmithCheck, Space};

/// What a subcommand prints, and whether every check it ran passed.
pub struct Outcome {
    pub stdout: String,
    pub passed: bool,
}

impl Outcome {
    fn new(stdout: String, passed: bool) -> Self {
        Outcome { stdout, passed }
    }
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Relations { n, m, check } => relations(cli, *n, *m, check.as_deref()),
        Command::Subgroup { rank, cap, paired, words } => subgroup(cli.format, *rank, *cap, *paired, words),
        Command::MatrixGroup { n, p, sl, gens, matrices, simple, exhaustive, normal_closure, cap } => {
            let req = MatrixRequest {
                n: *n,
                p: *p,
                sl: *sl,
                gens,
                matrices,
                simple: *simple,
                exhaustive: *exhaustive,
                normal_closure: normal_closure.as_deref(),
                cap: *cap,
            };
            matrix_group(cli.format, &req)
        }
        Command::Homology { input, p } => homology_cmd(cli.format, input, *p),
        Command::Smith { input, action, p, check, map } => smith_cmd(cli.format, input, action, *p, *check, map.as_deref()),
        Command::Oracle { group, n, space, dim, p } => oracle(cli.format, group, *n, *space, *dim, *p),
        Command::GraphAut { graph, symmetry } => graph_aut(cli.format, graph, symmetry),
    }
}

/// Explicit flag, then `AUTFN_CAP`, then the default.
fn cap(flag: Option<usize>, default: usize) -> Result<usize> {
    if let Some(c) = flag {
        return Ok(c);
    }
    match std::env::var("AUTFN_CAP") {
        Ok(v) => v.trim().parse().with_context(|| format!("AUTFN_CAP must be a positive integer, got `{v}`")),
        Err(_) => Ok(default),
    }
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &str) -> Result<T> {
    let text = fs::read_to_string(path).with_context(|| format!("cannot read {path}"))?;
    serde_json::from_str(&text).with_context(|| format!("malformed JSON in {path}"))
}

fn relations(cli: &Cli, n: usize, m: usize, check: Option<&str>) -> Result<Outcome> {
    let params = SuiteParams { max_n: n, max_m: m, jobs: cli.jobs, filter: check.map(str::to_string) };
    let report = algebraverify::run_relation_suite(&params)?;
    // jobs and format are left out so the echo is identical across thread counts
    let mut command = format!("relations --n {n} --m {m}");
    if let Some(c) = check {
        write!(command, " --check {c}").unwrap();
    }
    let doc = ReportDocument {
        version: env!("CARGO_PKG_VERSION").to_string(),
        command,
        results: report.results,
        summary: report.summary,
    };
    let passed = doc.summary.failed == 0;
    let stdout = match cli.format {
        Format::Json => output::json(&doc),
        Format::Text => output::report_table(&doc),
    };
    Ok(Outcome::new(stdout, passed))
}

#[derive(Debug, Serialize)]
struct SubgroupReport {
    rank: usize,
    order: usize,
    structure: String,
    abelian: bool,
    elements: Vec<String>,
}

fn structure_of(order: usize, abelian: bool, elementary: impl Fn(usize) -> Option<usize>) -> String {
    if order == 1 {
        return "trivial".into();
    }
    let p = (2..=order).find(|d| order % d == 0).unwrap();
    if let Some(r) = group::log_p(order, p).and_then(|_| elementary(p)) {
        return format!("(Z_{p})^{r}");
    }
    if abelian { "abelian" } else { "nonabelian" }.into()
}

fn subgroup(format: Format, rank: usize, cap_flag: Option<usize>, paired: bool, words: &[String]) -> Result<Outcome> {
    if paired && rank % 2 != 0 {
        bail!("--paired needs an even rank");
    }
    let gens = words
        .iter()
        .map(|w| GenWord::parse(w, rank).and_then(|g| g.eval(rank)).with_context(|| format!("bad generator word `{w}`")))
        .collect::<Result<Vec<Endo>>>()?;
    let g = FiniteAutGroup::generate(&gens, cap(cap_flag, DEFAULT_AUT_CAP)?)?;
    let naming = if paired { Naming::Paired } else { Naming::Plain };
    let abelian = g.is_abelian();
    let report = SubgroupReport {
        rank,
        order: g.order(),
        structure: structure_of(g.order(), abelian, |p| algebraverify::is_elementary_abelian(&g, p)),
        abelian,
        elements: g.elements().iter().map(|x| x.display(naming)).collect(),
    };
    let stdout = match format {
        Format::Json => output::json(&report),
        Format::Text => {
            let mut s = format!("order {}, {}\n", report.order, report.structure);
            for e in &report.elements {
                writeln!(s, "  {e}").unwrap();
            }
            s
        }
    };
    Ok(Outcome::new(stdout, true))
}

struct MatrixRequest<'a> {
    n: usize,
    p: u32,
    sl: bool,
    gens: &'a [String],
    matrices: &'a [String],
    simple: bool,
    exhaustive: bool,
    normal_closure: Option<&'a str>,
    cap: Option<usize>,
}

#[derive(Debug, Serialize)]
struct NormalClosureReport {
    seed: String,
    order: usize,
    normal: bool,
}

#[derive(Debug, Serialize)]
struct MatrixGroupReport {
    n: usize,
    p: u32,
    order: usize,
    abelian: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    elementary_abelian_rank: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    simple: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    simplicity_mode: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    normal_closure: Option<NormalClosureReport>,
}

fn word_matrix(word: &str, n: usize, p: u32) -> Result<ModPMatrix> {
    let f = GenWord::parse(word, n).and_then(|g| g.eval(n)).with_context(|| format!("bad generator word `{word}`"))?;
    Ok(abelianize(&f).mod_p(p)?)
}

fn matrix_group(format: Format, req: &MatrixRequest) -> Result<Outcome> {
    let (n, p) = (req.n, req.p);
    let cap = cap(req.cap, DEFAULT_MATRIX_CAP)?;
    let mut gens = Vec::new();
    if req.sl {
        for i in 1..=n {
            for j in (1..=n).filter(|&j| j != i) {
                gens.push(ModPMatrix::elementary(i, j, n, p)?);
            }
        }
    }
    for w in req.gens {
        gens.push(word_matrix(w, n, p)?);
    }
    for m in req.matrices {
        gens.push(ModPMatrix::parse(m, p).with_context(|| format!("bad matrix `{m}`"))?);
    }
    if gens.is_empty() {
        bail!("give --sl, --gen or --matrix");
    }
    let g = FiniteMatrixGroup::enumerate(&gens, n, p, cap)?;
    let mode = if req.exhaustive { SimplicityMode::Exhaustive } else { SimplicityMode::ClassRepresentatives };
    let simple = req.simple.then(|| g.is_simple(mode));
    let normal_closure = match req.normal_closure {
        Some(seed) => {
            let x = ModPMatrix::parse(seed, p).or_else(|_| word_matrix(seed, n, p))?;
            let c = g.normal_closure(std::slice::from_ref(&x))?;
            Some(NormalClosureReport { seed: x.to_string(), order: c.order(), normal: c.is_normal_in(&g) })
        }
        None => None,
    };
    let report = MatrixGroupReport {
        n,
        p,
        order: g.order(),
        abelian: g.is_abelian(),
        elementary_abelian_rank: g.elementary_abelian_rank(p),
        simple,
        simplicity_mode: req.simple.then_some(if req.exhaustive { "exhaustive" } else { "class_representatives" }),
        normal_closure,
    };
    let stdout = match format {
        Format::Json => output::json(&report),
        Format::Text => {
            let mut s = format!("order {} (n = {n}, p = {p}), abelian: {}\n", report.order, report.abelian);
            if let Some(r) = report.elementary_abelian_rank {
                writeln!(s, "elementary abelian of rank {r}").unwrap();
            }
            if let Some(b) = report.simple {
                writeln!(s, "simple: {b} ({})", report.simplicity_mode.unwrap()).unwrap();
            }
            if let Some(c) = &report.normal_closure {
                writeln!(s, "normal closure of {}: order {}, normal: {}", c.seed, c.order, c.normal).unwrap();
            }
            s
        }
    };
    Ok(Outcome::new(stdout, true))
}

fn load_complex(path: &str) -> Result<SimplicialComplex> {
    let file: ComplexFile = read_json(path)?;
    Ok(file.to_complex())
}

fn homology_cmd(format: Format, input: &str, p: u32) -> Result<Outcome> {
    let k = load_complex(input)?;
    let b = homology::betti(&k, p)?;
    let stdout = match format {
        Format::Json => format!("{}\n", serde_json::to_string(&b)?),
        Format::Text => {
            let parts: Vec<String> = b.betti.iter().enumerate().map(|(i, x)| format!("b{i} = {x}")).collect();
            format!("over F_{p}: {}\n", parts.join(", "))
        }
    };
    Ok(Outcome::new(stdout, true))
}

#[derive(Debug, Serialize)]
struct NamedVerdict {
    #[serde(skip_serializing_if = "Option::is_none")]
    map: Option<String>,
    #[serde(flatten)]
    verdict: SmithVerdict,
}

#[derive(Debug, Serialize)]
struct SmithReport {
    check: &'static str,
    p: u32,
    verdicts: Vec<NamedVerdict>,
    pass: bool,
}

fn smith_cmd(format: Format, input: &str, action: &str, p: u32, check: SmithCheck, only: Option<&str>) -> Result<Outcome> {
    let k = load_complex(input)?;
    let file: ActionFile = read_json(action)?;
    let maps = file.maps(&k)?;
    let plain: Vec<SimplicialMap> = maps.iter().map(|(_, m)| m.clone()).collect();
    let action_group = || -> Result<ActionGroup> { Ok(ActionGroup::generate(k.clone(), plain.clone(), cap(None, DEFAULT_AUT_CAP)?)?) };
    let (name, verdicts) = match check {
        SmithCheck::Fixed => {
            let selected: Vec<&(String, SimplicialMap)> = match only {
                Some(name) => {
                    let m = maps.iter().find(|(n, _)| n == name).ok_or_else(|| anyhow!("no map named `{name}`"))?;
                    vec![m]
                }
                None => maps.iter().collect(),
            };
            let mut out = Vec::new();
            for (name, g) in selected {
                let verdict = smith::smith_fixed_check(&k, g, p).with_context(|| format!("map `{name}`"))?;
                out.push(NamedVerdict { map: Some(name.clone()), verdict });
            }
            ("fixed", out)
        }
        SmithCheck::Borel => ("borel", vec![NamedVerdict { map: None, verdict: smith::borel_check(&k, &plain, p)? }]),
        SmithCheck::Pairs => {
            if p != 2 {
                bail!("the involution pair scan works over p = 2");
            }
            ("pairs", vec![NamedVerdict { map: None, verdict: smith::involution_pair_scan(&action_group()?)? }])
        }
        SmithCheck::Free => ("free", vec![NamedVerdict { map: None, verdict: smith::no_free_rank2_check(&action_group()?, p)? }]),
    };
    let pass = verdicts.iter().all(|v| v.verdict.pass);
    let report = SmithReport { check: name, p, verdicts, pass };
    let stdout = match format {
        Format::Json => output::json(&report),
        Format::Text => {
            let mut s = String::new();
            for v in &report.verdicts {
                let label = v.map.as_deref().map(|m| format!("{m}: ")).unwrap_or_default();
                writeln!(
                    s,
                    "{} {label}{} (p = {}): observed {}; expected {}",
                    if v.verdict.pass { "PASS" } else { "FAIL" },
                    v.verdict.claim,
                    v.verdict.p,
                    v.verdict.observed,
                    v.verdict.expected
                )
                .unwrap();
            }
            s
        }
    };
    Ok(Outcome::new(stdout, pass))
}

fn oracle(format: Format, group: &str, n: usize, space: Space, dim: isize, p: u32) -> Result<Outcome> {
    let group: ActingGroup = group.parse()?;
    let kind = match space {
        Space::Sphere => SpaceKind::Sphere(dim),
        Space::Acyclic => {
            SpaceKind::Acyclic(usize::try_from(dim).map_err(|_| anyhow!("acyclic dimension must be nonnegative"))?)
        }
    };
    let v: OracleVerdict = smith::rigidity_oracle(group, n, kind, p)?;
    let stdout = match format {
        Format::Json => format!("{}\n", serde_json::to_string(&v)?),
        Format::Text => {
            let verdict = serde_json::to_value(v.verdict)?;
            let mut s = verdict.as_str().unwrap_or_default().to_string();
            if let Some(t) = &v.theorem {
                write!(s, " [{t}]").unwrap();
            }
            if let Some(c) = &v.citation {
                write!(s, " {c}").unwrap();
            }
            s.push('\n');
            s
        }
    };
    Ok(Outcome::new(stdout, true))
}

#[derive(Debug, Serialize)]
struct GraphAutReport {
    symmetry: String,
    rank: usize,
    images: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    order: Option<usize>,
    in_t: bool,
}

fn graph_aut(format: Format, path: &str, symmetry: &str) -> Result<Outcome> {
    let file: GraphFile = read_json(path)?;
    let graph = LabelledGraph::from_file(&file)?;
    let s = file
        .symmetries
        .iter()
        .find(|s| s.name == symmetry)
        .ok_or_else(|| anyhow!("no symmetry named `{symmetry}` in {path}"))?;
    let psi = graph.induced(&s.symmetry)?;
    let rank = psi.rank();
    let naming = if rank % 2 == 0 { Naming::Paired } else { Naming::Plain };
    let order = match psi.order(1000) {
        Order::Finite(k) => Some(k),
        Order::Unknown(_) => None,
    };
    let in_t = rank % 2 == 0 && algebraverify::build_t(rank / 2)?.contains(&psi);
    let report = GraphAutReport {
        symmetry: symmetry.to_string(),
        rank,
        images: psi.images().iter().enumerate().map(|(i, w)| format!("{} -> {}", naming.symbol(i + 1), w.display(naming))).collect(),
        order,
        in_t,
    };
    let stdout = match format {
        Format::Json => output::json(&report),
        Format::Text => {
            let order = report.order.map_or("infinite or > 1000".to_string(), |k| k.to_string());
            format!("{}: {}\norder {order}, in T: {}\n", report.symmetry, report.images.join(", "), report.in_t)
        }
    };
    Ok(Outcome::new(stdout, in_t))
}
