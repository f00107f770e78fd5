//! Named verification suites behind the command-line tool.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::Serialize;

use crate::coeff::note3_defect;
use crate::error::{Error, Result};
use crate::localization::{check_original_generator_formulas, ore_witness, verify_commuting_families};
use crate::reduction::{discover_reflection_convention, verify_reflection, verify_sn_on_image, Convention};
use crate::report::{Check, Report};
use crate::reps::{
    expected_central_value, hw_central_value, module_relation_suite, sample_gamma, vgamma_apply,
    VGammaVector,
};
use crate::ring::lemmas::verify_core_lemmas;
use crate::ring::rmatrix::verify_dybe;
use crate::ring::{central_c, defining_relations, Element, RingCtx};
use crate::coeff::RatFunc;
use crate::sample;
use rand::Rng;
use crate::symmetries::{verify_group_relations, verify_morphism, GeneratorMap, GroupKind, MapKind};
use crate::weyl::verify_weyl_zhelobenko;

pub const OUT_OF_SCOPE: &str = "skipped: out of paper scope";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Dybe,
    Consistency,
    Center,
    CoreLemmas,
    Zhelobenko,
    Epsilon,
    Sn,
    Weyl,
    Iso,
    Reflection,
    Hw,
    Vmod,
    Note3,
    Ore,
}

impl Suite {
    pub const ALL: [Suite; 14] = [
        Suite::Dybe,
        Suite::Consistency,
        Suite::Center,
        Suite::CoreLemmas,
        Suite::Zhelobenko,
        Suite::Epsilon,
        Suite::Sn,
        Suite::Weyl,
        Suite::Iso,
        Suite::Reflection,
        Suite::Hw,
        Suite::Vmod,
        Suite::Note3,
        Suite::Ore,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Dybe => "dybe",
            Suite::Consistency => "consistency",
            Suite::Center => "center",
            Suite::CoreLemmas => "core-lemmas",
            Suite::Zhelobenko => "zhelobenko",
            Suite::Epsilon => "epsilon",
            Suite::Sn => "sn",
            Suite::Weyl => "weyl",
            Suite::Iso => "iso",
            Suite::Reflection => "reflection",
            Suite::Hw => "hw",
            Suite::Vmod => "vmod",
            Suite::Note3 => "note3",
            Suite::Ore => "ore",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Suite> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::UnknownSuite(s.to_string()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteParams {
    pub n: usize,
    #[serde(rename = "N")]
    pub copies: usize,
    pub seed: u64,
    pub degree: usize,
}

impl Default for SuiteParams {
    fn default() -> Self {
        SuiteParams {
            n: 2,
            copies: 1,
            seed: 0,
            degree: 3,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub params: SuiteParams,
    pub checks: Vec<Check>,
    pub elapsed_ms: u64,
}

impl SuiteReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != crate::report::Status::Fail)
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = &self.params;
        writeln!(
            f,
            "suite {} (n={}, N={}, seed={}, degree={})",
            self.suite, p.n, p.copies, p.seed, p.degree
        )?;
        write!(f, "{}", Report { checks: self.checks.clone() })?;
        let failed = self.checks.iter().filter(|c| c.status == crate::report::Status::Fail).count();
        writeln!(f, "{} checks, {} failed, {} ms", self.checks.len(), failed, self.elapsed_ms)
    }
}

/// Runs a suite; checks come back sorted by name.
pub fn run_suite(suite: Suite, params: SuiteParams) -> Result<SuiteReport> {
    let start = Instant::now();
    // validates n and N up front
    let ctx = RingCtx::new(params.n, params.copies)?;
    let mut report = match suite {
        Suite::Dybe => dybe(params.n)?,
        Suite::Consistency => consistency(ctx, params)?,
        Suite::Center => single_copy(ctx, || center(ctx))?,
        Suite::CoreLemmas => single_copy(ctx, || verify_core_lemmas(params.n))?,
        Suite::Zhelobenko => single_copy(ctx, || zhelobenko(ctx))?,
        Suite::Epsilon => single_copy(ctx, || epsilon(ctx))?,
        Suite::Sn => sn(ctx)?,
        Suite::Weyl => single_copy(ctx, || verify_weyl_zhelobenko(params.n))?,
        Suite::Iso => single_copy(ctx, || iso(params.n))?,
        Suite::Reflection => reflection(params.n, params.copies)?,
        Suite::Hw => single_copy(ctx, || hw(params.n))?,
        Suite::Vmod => single_copy(ctx, || vmod(params))?,
        Suite::Note3 => note3(params.n),
        Suite::Ore => single_copy(ctx, || ore(params))?,
    };
    report.sort_by_name();
    Ok(SuiteReport {
        suite: suite.name().to_string(),
        params,
        checks: report.checks,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

fn out_of_scope(what: &str) -> Report {
    let mut r = Report::new();
    r.push(Check::skipped(what, OUT_OF_SCOPE));
    r
}

fn single_copy(ctx: RingCtx, f: impl FnOnce() -> Result<Report>) -> Result<Report> {
    if ctx.copies() != 1 {
        return Ok(out_of_scope("requires N = 1"));
    }
    f()
}

fn dybe(n: usize) -> Result<Report> {
    let d = verify_dybe(n)?;
    let mut r = Report::new();
    let idx = |mut t: usize| {
        let mut out = [0usize; 6];
        for slot in out.iter_mut().rev() {
            *slot = t % n + 1;
            t /= n;
        }
        out
    };
    for t in 0..n.pow(6) {
        let ix = idx(t);
        let name = format!("component {}", ix.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(","));
        match d.failures.iter().find(|f| f.indices == ix) {
            Some(f) => r.push(Check::fail(name, format!("{} vs {}", f.lhs, f.rhs))),
            None => r.push(Check::pass(name)),
        }
    }
    Ok(r)
}

fn consistency(ctx: RingCtx, p: SuiteParams) -> Result<Report> {
    let mut r = Report::new();
    let mut rng = sample::rng(p.seed);
    for t in 0..200 {
        let x = sample::word(ctx, &mut rng, p.degree);
        let y = sample::word(ctx, &mut rng, p.degree);
        let z = sample::word(ctx, &mut rng, p.degree);
        let lhs = x.product(&y)?.product(&z)?;
        let rhs = x.product(&y.product(&z)?)?;
        r.push(Check::expect(format!("associativity {t:03}"), lhs == rhs, || {
            format!("({x})({y})({z}): {}", &lhs - &rhs)
        }));
    }
    for rel in defining_relations(ctx) {
        let d = rel.defect(ctx);
        r.push(Check::expect(format!("relation {}", rel.name), d.is_zero(), || d.to_string()));
    }
    Ok(r)
}

fn center(ctx: RingCtx) -> Result<Report> {
    let n = ctx.n();
    let mut r = Report::new();
    let mut others: Vec<(String, Element)> = Vec::new();
    for j in 1..=n {
        others.push((format!("h[{j}]"), Element::h(ctx, j)?));
        others.push((format!("Z[{j}]"), Element::z(ctx, j)?));
        others.push((format!("d[{j}]"), Element::d(ctx, j)?));
    }
    for k in 1..=n {
        let c = central_c(ctx, k)?;
        for (name, g) in &others {
            let x = c.commutator(g)?;
            r.push(Check::expect(format!("[c{k}, {name}] = 0"), x.is_zero(), || x.to_string()));
        }
    }
    Ok(r)
}

fn zhelobenko(ctx: RingCtx) -> Result<Report> {
    if ctx.n() < 2 {
        return Ok(out_of_scope("requires n >= 2"));
    }
    let mut r = Report::new();
    for i in 1..ctx.n() {
        r.absorb("", verify_morphism(&GeneratorMap::build(MapKind::Zhelobenko(i), ctx)?)?);
    }
    r.absorb("", verify_group_relations(GroupKind::Zhelobenko, ctx)?);
    Ok(r)
}

fn epsilon(ctx: RingCtx) -> Result<Report> {
    let e = GeneratorMap::build(MapKind::Epsilon, ctx)?;
    let mut r = verify_morphism(&e)?;
    let sq = e.compose(&e)?;
    r.push(Check::expect("epsilon squared is identity", sq.is_identity(), || {
        "ε² moves a generator".into()
    }));
    Ok(r)
}

fn sn(ctx: RingCtx) -> Result<Report> {
    if ctx.n() < 2 {
        return Ok(out_of_scope("requires n >= 2"));
    }
    let mut r = Report::new();
    for i in 1..ctx.n() {
        r.absorb("", verify_morphism(&GeneratorMap::build(MapKind::Sn(i), ctx)?)?);
    }
    r.absorb("", verify_group_relations(GroupKind::Sn, ctx)?);
    r.absorb("image ", verify_sn_on_image(ctx.n(), ctx.copies())?);
    Ok(r)
}

fn iso(n: usize) -> Result<Report> {
    let mut r = check_original_generator_formulas(n)?;
    if n >= 2 {
        r.absorb("", verify_commuting_families(n)?);
    }
    Ok(r)
}

fn reflection(n: usize, copies: usize) -> Result<Report> {
    let d = discover_reflection_convention(n, copies)?;
    let mut r = Report::new();
    if d.passing.contains(&Convention::PINNED) {
        r.push(Check::pass(format!("convention {}", Convention::PINNED)));
        r.absorb("", verify_reflection(n, copies, Convention::PINNED)?);
    } else if let Some(c) = d.passing.first() {
        r.push(Check::pass(format!("convention {c}")));
        r.absorb("", verify_reflection(n, copies, *c)?);
    } else {
        r.push(Check::fail("convention", "no candidate convention passes"));
        r.absorb("", d.discrepancies);
    }
    Ok(r)
}

fn hw(n: usize) -> Result<Report> {
    let mut r = Report::new();
    for k in 1..=n {
        let name = format!("c{k} acts by -e{k}(lambda-1)");
        match hw_central_value(k, n) {
            Ok(v) => {
                let want = expected_central_value(k, n)?;
                r.push(Check::expect(name, v == want, || format!("{v} vs {want}")));
            }
            Err(e) => r.push(Check::fail(name, e.to_string())),
        }
    }
    Ok(r)
}

fn vmod(p: SuiteParams) -> Result<Report> {
    let n = p.n;
    let ctx = RingCtx::single(n)?;
    let mut rng = sample::rng(p.seed);
    let mut r = module_relation_suite(n, 5, &mut rng)?;
    for s in 0..5 {
        let (gamma, a) = sample_gamma(n, &mut rng);
        let v = VGammaVector::basis(gamma, a.clone(), &vec![1; n])?;
        for k in 1..=n {
            let w = vgamma_apply(&central_c(ctx, k)?, &v)?;
            let ok = w.coefficient(&vec![1; n]) == a[k - 1] && w.terms().all(|(j, _)| j.iter().all(|&x| x == 1));
            r.push(Check::expect(format!("gamma sample {s} c{k} acts by A{k}"), ok, || format!("{w:?}")));
        }
    }
    if n >= 2 {
        let zero = num_rational::BigRational::from_integer(0.into());
        let one = num_rational::BigRational::from_integer(1.into());
        let mut gamma = vec![zero.clone(); n];
        gamma[1] = one;
        let rejected = matches!(VGammaVector::zero(gamma, vec![zero; n]), Err(Error::NonGeneric(_)));
        r.push(Check::expect("non-generic gamma rejected", rejected, || "accepted".into()));
    }
    Ok(r)
}

fn note3(n: usize) -> Report {
    let mut r = Report::new();
    let d = note3_defect(n);
    r.push(Check::expect(format!("note3 identity n={n}"), d.is_zero(), || d.to_string()));
    r
}

/// Seeded unit-coefficient monomials paired with a site `k`.
pub fn ore_samples(n: usize, seed: u64, count: usize, degree: usize) -> Result<Vec<(usize, Element)>> {
    let ctx = RingCtx::single(n)?;
    let mut rng = sample::rng(seed);
    Ok((0..count)
        .map(|_| {
            let m = sample::monomial(ctx, &mut rng, degree);
            let k = rng.gen_range(1..=n);
            (k, Element::term(ctx, RatFunc::one(), m))
        })
        .collect())
}

fn ore(p: SuiteParams) -> Result<Report> {
    let mut r = Report::new();
    for (s, (k, m)) in ore_samples(p.n, p.seed, 50, p.degree.max(1))?.into_iter().enumerate() {
        let len = m.degree().unwrap_or(0);
        let name = format!("ore sample {s:02} k={k} m={m}");
        match ore_witness(k, &m, 4 * len as u32 + 4) {
            Ok(w) => r.push(Check::expect(format!("{name} nu <= word length"), w.nu as usize <= len, || {
                format!("nu = {}, word length {len}", w.nu)
            })),
            Err(e) => r.push(Check::fail(name, e.to_string())),
        }
    }
    Ok(r)
}
