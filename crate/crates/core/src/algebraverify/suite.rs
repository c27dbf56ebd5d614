use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::aut::{Factor, GenWord, GeneratorName, Permutation};
use crate::error::{Error, Result};
use crate::freegroup::{pa, pb, Naming};
use crate::group;
use crate::linear::{abelianize, IntMatrix};

use super::glob::glob_match;
use super::build_sn;

use GeneratorName::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

/// One executed check.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub id: String,
    pub paper_ref: String,
    pub quote: String,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    pub millis: f64,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

impl Summary {
    pub fn of(records: &[CheckRecord]) -> Self {
        let count = |s| records.iter().filter(|r| r.status == s).count();
        Summary { passed: count(Status::Pass), failed: count(Status::Fail), skipped: count(Status::Skipped) }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub suite: String,
    pub results: Vec<CheckRecord>,
    pub summary: Summary,
}

impl CheckReport {
    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }

    /// The report with every timing zeroed, for byte comparison.
    pub fn without_timing(&self) -> CheckReport {
        let mut r = self.clone();
        for rec in &mut r.results {
            rec.millis = 0.0;
        }
        r
    }
}

/// What a check evaluates.
#[derive(Debug, Clone)]
pub enum CheckBody {
    /// Two words in named generators agree as automorphisms of `F_rank`.
    Words { rank: usize, lhs: GenWord, rhs: GenWord },
    /// Every element of the even sign-change group reduces to the identity mod 2.
    SnModTwo { n: usize },
    /// The images of `e1e2`, `e2e3`, `(12)(34)`, `(13)(24)` in `GL(4, Z)` generate a
    /// group of order 32 containing `-I` whose quotient by `{I, -I}` is `(Z_2)^4`.
    SignQuotientKlein,
    /// `[x, y] = rhs` for abelianized words, computed with integer matrices.
    MatrixCommutator { rank: usize, x: GenWord, y: GenWord, rhs: GenWord },
    /// Not instantiable for the chosen parameters.
    Unavailable { reason: String },
}

/// A named identity with its locator and formula.
#[derive(Debug, Clone)]
pub struct RelationCheck {
    pub id: String,
    pub paper_ref: String,
    pub quote: String,
    pub body: CheckBody,
}

impl RelationCheck {
    pub fn words(id: String, paper_ref: &str, rank: usize, lhs: GenWord, rhs: GenWord) -> Self {
        let quote = format!("{lhs} = {rhs}");
        RelationCheck { id, paper_ref: paper_ref.to_string(), quote, body: CheckBody::Words { rank, lhs, rhs } }
    }

    /// Status and, on failure, a witness.
    pub fn evaluate(&self) -> (Status, Option<String>) {
        match self.run() {
            Ok(None) => (Status::Pass, None),
            Ok(Some(w)) => (Status::Fail, Some(w)),
            Err(Skip(reason)) => (Status::Skipped, Some(reason)),
        }
    }

    fn run(&self) -> std::result::Result<Option<String>, Skip> {
        match &self.body {
            CheckBody::Words { rank, lhs, rhs } => {
                let (l, r) = (lhs.eval(*rank).map_err(Skip::from)?, rhs.eval(*rank).map_err(Skip::from)?);
                let naming = if rank % 2 == 0 && self.id.starts_with("tgroup.") { Naming::Paired } else { Naming::Plain };
                Ok(l.first_difference(&r).map(|(i, a, b)| {
                    format!(
                        "{}: lhs gives {}, rhs gives {}",
                        naming.symbol(i),
                        a.display(naming),
                        b.display(naming)
                    )
                }))
            }
            CheckBody::SnModTwo { n } => {
                let sn = build_sn(*n).map_err(Skip::from)?;
                for x in sn.elements() {
                    let m = abelianize(x).mod_p(2).map_err(Skip::from)?;
                    if !m.is_identity() {
                        return Ok(Some(format!("{} reduces to {m}", x.display(Naming::Plain))));
                    }
                }
                Ok(None)
            }
            CheckBody::SignQuotientKlein => sign_quotient_klein().map_err(Skip::from),
            CheckBody::MatrixCommutator { rank, x, y, rhs } => {
                let m = |w: &GenWord| w.eval(*rank).map(|e| abelianize(&e));
                let (x, y, r) = (m(x).map_err(Skip::from)?, m(y).map_err(Skip::from)?, m(rhs).map_err(Skip::from)?);
                let c = x.commutator(&y).map_err(Skip::from)?;
                Ok((c != r).then(|| format!("commutator is {c}, expected {r}")))
            }
            CheckBody::Unavailable { reason } => Err(Skip(reason.clone())),
        }
    }
}

struct Skip(String);

impl From<Error> for Skip {
    fn from(e: Error) -> Self {
        Skip(e.to_string())
    }
}

fn sign_quotient_klein() -> Result<Option<String>> {
    let n = 4;
    let perm = |cycles: &[Vec<usize>]| -> Result<IntMatrix> {
        Ok(abelianize(&crate::aut::Endo::named(&Perm(Permutation::from_cycles(cycles, n)?), n)?))
    };
    let eps = |i, j| -> Result<IntMatrix> { Ok(abelianize(&crate::aut::Endo::named(&Epsilon(i, j), n)?)) };
    let gens = vec![eps(1, 2)?, eps(2, 3)?, perm(&[vec![1, 2], vec![3, 4]])?, perm(&[vec![1, 3], vec![2, 4]])?];
    let id = IntMatrix::identity(n);
    let minus = id.neg();
    let central = |m: &IntMatrix| m.eq_up_to_sign(&id);
    for (k, a) in gens.iter().enumerate() {
        if !central(&a.mul(a)?) {
            return Ok(Some(format!("generator {} does not square to +-I", k + 1)));
        }
        for (l, b) in gens.iter().enumerate().skip(k + 1) {
            if !central(&a.commutator(b)?) {
                return Ok(Some(format!("generators {} and {} do not commute modulo sign", k + 1, l + 1)));
            }
        }
    }
    let g = group::closure(id, &gens, 1 << 12)?;
    if g.binary_search(&minus).is_err() {
        return Ok(Some("-I is not in the generated group".into()));
    }
    if g.len() != 32 {
        return Ok(Some(format!("generated group has order {}, expected 32", g.len())));
    }
    Ok(None)
}

/// Parameters of the relation suite.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteParams {
    /// Largest rank for the Nielsen and signed-permutation checks.
    pub max_n: usize,
    /// Largest number of pairs for the order-3 checks (rank `2m`).
    pub max_m: usize,
    /// Worker threads; 0 uses the rayon default.
    pub jobs: usize,
    /// Optional id glob.
    pub filter: Option<String>,
}

impl Default for SuiteParams {
    fn default() -> Self {
        SuiteParams { max_n: 5, max_m: 3, jobs: 0, filter: None }
    }
}

fn f(g: GeneratorName) -> Factor {
    Factor::new(g)
}

fn fi(g: GeneratorName) -> Factor {
    Factor::inv(g)
}

fn fp(g: GeneratorName, k: i64) -> Factor {
    Factor::pow(g, k)
}

fn w(factors: impl IntoIterator<Item = Factor>) -> GenWord {
    GenWord::of(factors)
}

/// `c x c^-1` as a word.
fn conj(x: GenWord, c: &GenWord) -> GenWord {
    c.clone().then(&x).then(&c.inverse())
}

fn commutator(x: &GenWord, y: &GenWord) -> GenWord {
    x.clone().then(y).then(&x.inverse()).then(&y.inverse())
}

fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..=n).flat_map(move |i| (1..=n).filter(move |&j| j != i).map(move |j| (i, j)))
}

fn perm_id(p: &Permutation) -> String {
    (1..=p.degree()).map(|k| p.apply(k).to_string()).collect::<Vec<_>>().join("")
}

/// `e_i^s_i e_j^s_j` as a word.
fn signs(i: usize, j: usize, si: bool, sj: bool) -> GenWord {
    let mut out = Vec::new();
    if si {
        out.push(f(Inversion(i)));
    }
    if sj {
        out.push(f(Inversion(j)));
    }
    w(out)
}

/// Expected value of `conj(lambda_ij, e_i^si e_j^sj)`.
fn sign_table(i: usize, j: usize, si: bool, sj: bool) -> GenWord {
    match (si, sj) {
        (false, false) => w([f(Lambda(i, j))]),
        (true, true) => w([f(Rho(i, j))]),
        (false, true) => w([fi(Lambda(i, j))]),
        (true, false) => w([fi(Rho(i, j))]),
    }
}

/// Every check, in report order.
pub fn build_suite(params: &SuiteParams) -> Vec<RelationCheck> {
    let SuiteParams { max_n, max_m, .. } = *params;
    let mut out = Vec::new();

    for n in 2..=max_n {
        for (i, j) in pairs(n) {
            for (si, sj) in [(false, false), (true, true), (false, true), (true, false)] {
                out.push(RelationCheck::words(
                    format!("nielsen.sign_conjugation.n{n}.{i}-{j}.{}{}", si as u8, sj as u8),
                    "nielsen-conjugation-table",
                    n,
                    conj(w([f(Lambda(i, j))]), &signs(i, j, si, sj)),
                    sign_table(i, j, si, sj),
                ));
            }
        }
    }

    for n in 3..=max_n.min(4) {
        for sigma in Permutation::all(n) {
            let s = w([f(Perm(sigma.clone()))]);
            for (i, j) in pairs(n) {
                let (si, sj) = (sigma.apply(i), sigma.apply(j));
                for (tag, theta, image) in
                    [("lambda", Lambda(i, j), Lambda(si, sj)), ("rho", Rho(i, j), Rho(si, sj))]
                {
                    out.push(RelationCheck::words(
                        format!("nielsen.relabel.n{n}.{tag}.{i}-{j}.perm{}", perm_id(&sigma)),
                        "permutation-relabelling",
                        n,
                        conj(w([f(theta)]), &s),
                        w([f(image)]),
                    ));
                }
            }
        }
    }

    for n in 3..=max_n {
        for i in 1..=n {
            for j in (1..=n).filter(|&j| j != i) {
                for k in (1..=n).filter(|&k| k != i && k != j) {
                    out.push(RelationCheck::words(
                        format!("nielsen.commutator.n{n}.{i}-{j}-{k}"),
                        "nielsen-commutator",
                        n,
                        commutator(&w([f(Lambda(i, j))]), &w([f(Lambda(j, k))])),
                        w([f(Lambda(i, k))]),
                    ));
                }
            }
        }
    }

    for n in 2..=max_n {
        for (i, j) in pairs(n) {
            out.push(RelationCheck::words(
                format!("nielsen.delta.n{n}.{i}-{j}"),
                "delta-conjugation",
                n,
                w([f(Delta), f(Lambda(i, j)), f(Delta)]),
                w([f(Rho(i, j))]),
            ));
        }
    }

    let eps_id = "involution.epsilon_product.n5".to_string();
    let eps_lhs = w([f(Epsilon(1, 2)), f(Epsilon(4, 5)), f(Epsilon(2, 3)), f(Epsilon(4, 5))]);
    let eps_rhs = w([f(Epsilon(1, 3))]);
    if max_n >= 5 {
        out.push(RelationCheck::words(eps_id, "epsilon-product", 5, eps_lhs, eps_rhs));
    } else {
        out.push(RelationCheck {
            id: eps_id,
            paper_ref: "epsilon-product".into(),
            quote: format!("{eps_lhs} = {eps_rhs}"),
            body: CheckBody::Unavailable { reason: format!("needs rank 5, suite limited to {max_n}") },
        });
    }

    for m in 1..=max_m {
        t_group_checks(m, &mut out);
    }

    for n in 3..=max_n.min(4) {
        combined_rule_checks(n, &mut out);
    }

    for n in 2..=max_n {
        out.push(RelationCheck {
            id: format!("signed_perm.sn_mod2.n{n}"),
            paper_ref: "sn-mod-2".into(),
            quote: format!("abelianize(x) = I mod 2 for every even sign change x, n = {n}"),
            body: CheckBody::SnModTwo { n },
        });
    }

    out.push(RelationCheck {
        id: "matrix.psl_klein.n4".into(),
        paper_ref: "psl4-klein-subgroup".into(),
        quote: "<EPS12, EPS23, PERM(1 2)(3 4), PERM(1 3)(2 4)> / {I, -I} = (Z_2)^4 in GL(4, Z)".into(),
        body: CheckBody::SignQuotientKlein,
    });

    for (i, j) in [(1, 2), (2, 1)] {
        let sq = |g| w([fp(g, 2)]);
        let y = w([f(Lambda(pb(i), pb(j)))]);
        let cases = [
            ("a", sq(Lambda(pa(i), pb(i))), sq(Lambda(pa(i), pb(j)))),
            ("b", sq(Lambda(pa(j), pb(j))), GenWord::new()),
        ];
        for (tag, x, rhs) in cases {
            out.push(RelationCheck {
                id: format!("matrix.sl4z.i{i}.j{j}.{tag}"),
                paper_ref: "sl4z-relations".into(),
                quote: format!("[ab({x}), ab({y})] = ab({rhs})"),
                body: CheckBody::MatrixCommutator { rank: 4, x, y: y.clone(), rhs },
            });
        }
    }

    out
}

fn t_group_checks(m: usize, out: &mut Vec<RelationCheck>) {
    let n = 2 * m;
    let (ea, eb) = (|i| f(Inversion(pa(i))), |i| f(Inversion(pb(i))));
    let l2 = |x: usize, y: usize| fp(Lambda(x, y), 2);
    let mut push = |id: String, anchor: &str, lhs: GenWord, rhs: GenWord| {
        out.push(RelationCheck::words(id, anchor, n, lhs, rhs));
    };
    for i in 1..=m {
        push(
            format!("tgroup.rotation_beta.m{m}.i{i}"),
            "t-rotation-identity-1",
            w([f(R(i)), ea(i), eb(i), fi(R(i))]),
            w([f(Beta(i))]),
        );
        push(
            format!("tgroup.rotation_b.m{m}.i{i}"),
            "t-rotation-identity-3",
            w([f(R(i)), eb(i), fi(R(i)), ea(i)]),
            w([l2(pb(i), pa(i))]),
        );
        push(
            format!("tgroup.rotation_a.m{m}.i{i}"),
            "t-rotation-identity-4",
            w([fi(R(i)), ea(i), f(R(i)), eb(i)]),
            w([l2(pa(i), pb(i))]),
        );
        push(
            format!("tgroup.swap_nielsen.m{m}.i{i}"),
            "t-swap",
            conj(w([f(Lambda(pa(i), pb(i)))]), &w([ea(i), eb(i)])),
            w([f(Rho(pa(i), pb(i)))]),
        );
        push(
            format!("tgroup.beta_commutes.m{m}.i{i}"),
            "t-swap",
            commutator(&w([f(Beta(i))]), &w([f(Lambda(pa(i), pb(i)))])),
            GenWord::new(),
        );
    }
    for i in 1..=m {
        for j in (1..=m).filter(|&j| j != i) {
            for (tag, e) in [("a", ea(i)), ("b", eb(i))] {
                push(
                    format!("tgroup.rotation_commutes.m{m}.i{i}.j{j}.{tag}"),
                    "t-rotation-identity-2",
                    commutator(&w([f(R(j))]), &w([e])),
                    GenWord::new(),
                );
            }
            push(
                format!("tgroup.saut_relation.m{m}.i{i}.j{j}"),
                "saut-relation",
                w([fi(R(i)), ea(i), ea(j), f(R(i)), eb(i), ea(j)]),
                w([l2(pa(i), pb(i))]),
            );
            let t = w([f(R(i)), f(R(j))]);
            push(
                format!("tgroup.t_product.m{m}.i{i}.j{j}"),
                "t-relation-product",
                t.inverse().then(&w([ea(i), ea(j)])).then(&t).then(&w([eb(i), eb(j)])),
                w([l2(pa(i), pb(i)), l2(pa(j), pb(j))]),
            );
            let t = w([f(R(i)), fi(R(j))]);
            push(
                format!("tgroup.t_mixed.m{m}.i{i}.j{j}"),
                "t-relation-mixed",
                t.clone().then(&w([eb(i), ea(j)])).then(&t.inverse()).then(&w([ea(i), eb(j)])),
                w([l2(pb(i), pa(i)), l2(pa(j), pb(j))]),
            );
        }
    }
}

/// `(lambda_ij^alpha)^sigma` for every `alpha sigma` in `SW_n`: the sign table
/// followed by relabelling.
fn combined_rule_checks(n: usize, out: &mut Vec<RelationCheck>) {
    for mask in 0u32..(1 << n) {
        let eps: Vec<bool> = (0..n).map(|k| mask >> k & 1 == 1).collect();
        let alpha = w((1..=n).filter(|&k| eps[k - 1]).map(|k| f(Inversion(k))));
        let sign_id: String = eps.iter().map(|&b| if b { '1' } else { '0' }).collect();
        for sigma in Permutation::all(n) {
            let parity = if eps.iter().filter(|&&b| b).count() % 2 == 0 { 1 } else { -1 };
            if parity * sigma.sign() != 1 {
                continue;
            }
            let s = w([f(Perm(sigma.clone()))]);
            for (i, j) in pairs(n) {
                let (ei, ej) = (eps[i - 1], eps[j - 1]);
                let relabelled = sign_table(sigma.apply(i), sigma.apply(j), ei, ej);
                out.push(RelationCheck::words(
                    format!("signed_perm.combined.n{n}.s{sign_id}.perm{}.{i}-{j}", perm_id(&sigma)),
                    "combined-signed-permutation-rule",
                    n,
                    conj(conj(w([f(Lambda(i, j))]), &alpha), &s),
                    relabelled,
                ));
            }
        }
    }
}

/// Runs `checks` on `jobs` threads (0 for the rayon default); output order matches input order.
pub fn run_checks(suite: &str, checks: &[RelationCheck], jobs: usize) -> Result<CheckReport> {
    let run_one = |c: &RelationCheck| {
        let start = Instant::now();
        let (status, witness) = c.evaluate();
        CheckRecord {
            id: c.id.clone(),
            paper_ref: c.paper_ref.clone(),
            quote: c.quote.clone(),
            status,
            witness,
            millis: (start.elapsed().as_secs_f64() * 1e6).round() / 1e3,
        }
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::InvalidParameters(format!("thread pool: {e}")))?;
    let results: Vec<CheckRecord> = pool.install(|| checks.par_iter().map(run_one).collect());
    let summary = Summary::of(&results);
    Ok(CheckReport { suite: suite.to_string(), results, summary })
}

pub fn run_relation_suite(params: &SuiteParams) -> Result<CheckReport> {
    if params.max_n < 2 {
        return Err(Error::InvalidParameters(format!("max_n must be at least 2, got {}", params.max_n)));
    }
    let mut checks = build_suite(params);
    if let Some(pattern) = &params.filter {
        checks.retain(|c| glob_match(pattern, &c.id));
        if checks.is_empty() {
            return Err(Error::UnknownCheck(pattern.clone()));
        }
    }
    run_checks("relations", &checks, params.jobs)
}
