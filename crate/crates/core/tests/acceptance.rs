use std::time::{Duration, Instant};

use rand::Rng;

use hdiff::coeff::{Poly, Var};
use hdiff::localization::{center_decompose, central_polynomial_element, CenterDecomposition};
use hdiff::reduction::{verify_reflection, Convention};
use hdiff::report::Status;
use hdiff::reps::{excited_words, expected_central_value, hw_apply, HWVector};
use hdiff::ring::{central_c, Element, RingCtx};
use hdiff::sample;
use hdiff::suites::{run_suite, Suite, SuiteParams, SuiteReport};

fn params(n: usize, copies: usize) -> SuiteParams {
    SuiteParams {
        n,
        copies,
        seed: 0,
        degree: 3,
    }
}

fn run(suite: Suite, n: usize, copies: usize) -> SuiteReport {
    run_suite(suite, params(n, copies)).unwrap_or_else(|e| panic!("{suite} n={n} N={copies}: {e}"))
}

fn failures(r: &SuiteReport) -> Vec<String> {
    r.checks
        .iter()
        .filter(|c| c.status != Status::Pass)
        .map(|c| format!("{} {}: {} ({})", r.suite, r.params.n, c.name, c.witness.as_deref().unwrap_or("")))
        .collect()
}

/// Prints the summary line and panics with the details on failure.
fn verdict(label: &str, problems: Vec<String>) {
    if problems.is_empty() {
        println!("PASS  {label}");
    } else {
        println!("FAIL  {label} ({} problems)", problems.len());
        panic!("{label}:\n{}", problems.join("\n"));
    }
}

fn timed(limit: Duration, label: &str, f: impl FnOnce() -> Vec<String>) -> Vec<String> {
    let start = Instant::now();
    let mut problems = f();
    let took = start.elapsed();
    if took > limit {
        problems.push(format!("{label} took {took:?}, limit {limit:?}"));
    }
    problems
}

#[test]
fn dybe_components() {
    let problems = timed(Duration::from_secs(10), "dybe", || {
        let mut out = Vec::new();
        for n in [2, 3] {
            let r = run(Suite::Dybe, n, 1);
            if r.checks.len() != n.pow(6) {
                out.push(format!("n={n}: {} components checked", r.checks.len()));
            }
            out.extend(failures(&r));
        }
        out
    });
    verdict("dynamical Yang-Baxter equation, n = 2, 3", problems);
}

#[test]
fn rewrite_associativity() {
    let mut problems = Vec::new();
    for (n, copies) in [(2, 1), (3, 1), (2, 2)] {
        let r = run(Suite::Consistency, n, copies);
        let triples = r.checks.iter().filter(|c| c.name.starts_with("associativity")).count();
        if triples < 200 {
            problems.push(format!("({n},{copies}): only {triples} triples"));
        }
        problems.extend(failures(&r));
    }
    verdict("associativity on 200 triples in (2,1), (3,1), (2,2)", problems);
}

#[test]
fn centrality_of_c() {
    let problems = timed(Duration::from_secs(60), "centrality", || {
        let mut out = Vec::new();
        for n in [2, 3, 4] {
            let r = run(Suite::Center, n, 1);
            if r.checks.len() != 3 * n * n {
                out.push(format!("n={n}: {} commutators", r.checks.len()));
            }
            out.extend(failures(&r));
        }
        out
    });
    verdict("c_k commute with Z, d, h at n = 2, 3, 4", problems);
}

#[test]
fn gamma_and_central_lemma() {
    let mut problems = Vec::new();
    for n in [2, 3] {
        let r = run(Suite::CoreLemmas, n, 1);
        for want in ["V Vinv", "Vinv V"] {
            if !r.checks.iter().any(|c| c.name == want) {
                problems.push(format!("n={n}: missing {want}"));
            }
        }
        for j in 1..=n {
            if !r.checks.iter().any(|c| c.name == format!("chi gamma {j}")) {
                problems.push(format!("n={n}: missing chi gamma {j}"));
            }
        }
        problems.extend(failures(&r));
    }
    verdict("V V^-1 = I and chi Gamma identity, n = 2, 3", problems);
}

#[test]
fn zhelobenko_action() {
    let mut problems = Vec::new();
    let r = run(Suite::Zhelobenko, 3, 1);
    if !r.checks.iter().any(|c| c.name.contains("braid")) {
        problems.push("no braid checks".into());
    }
    problems.extend(failures(&r));
    let w = run(Suite::Weyl, 3, 1);
    for needle in ["preserves", "braid", "T0"] {
        if !w.checks.iter().any(|c| c.name.contains(needle)) {
            problems.push(format!("weyl: no `{needle}` checks"));
        }
    }
    problems.extend(failures(&w));
    verdict("Zhelobenko operators and Weyl-side action, n = 3", problems);
}

#[test]
fn epsilon_involution() {
    let r = run(Suite::Epsilon, 3, 1);
    let mut problems = failures(&r);
    if !r.checks.iter().any(|c| c.name == "epsilon squared is identity") {
        problems.push("missing involution check".into());
    }
    verdict("epsilon anti-automorphism, n = 3", problems);
}

#[test]
fn symmetric_group_action() {
    let mut problems = Vec::new();
    for copies in [1, 2] {
        let r = run(Suite::Sn, 3, copies);
        if r.checks.iter().filter(|c| c.name.contains("braid")).count() == 0 {
            problems.push(format!("N={copies}: no braid checks"));
        }
        problems.extend(failures(&r));
    }
    verdict("S_n action with Artin relations, n = 3, N = 1, 2", problems);
}

#[test]
fn localization_isomorphism() {
    let mut problems = Vec::new();
    for n in [2, 3] {
        let r = run(Suite::Iso, n, 1);
        for needle in ["transports", "round trip", "embed Z", "embed d"] {
            if !r.checks.iter().any(|c| c.name.contains(needle)) {
                problems.push(format!("n={n}: no `{needle}` checks"));
            }
        }
        problems.extend(failures(&r));
    }
    verdict("isomorphism of localizations, n = 2, 3", problems);
}

fn random_central_poly(rng: &mut impl Rng) -> Poly {
    let c1 = Poly::var(Var::c(1));
    let c2 = Poly::var(Var::c(2));
    let mut p = Poly::zero();
    for _ in 0..rng.gen_range(1..=3) {
        let a = rng.gen_range(0..=3u32);
        let b = rng.gen_range(0..=(3 - a) / 2);
        let mut t = Poly::int(rng.gen_range(-5..=5));
        for _ in 0..a {
            t = &t * &c1;
        }
        for _ in 0..b {
            t = &t * &c2;
        }
        p = &p + &t;
    }
    if p.is_zero() {
        c1
    } else {
        p
    }
}

#[test]
fn center_membership() {
    let ctx = RingCtx::single(2).unwrap();
    let mut rng = sample::rng(5);
    let mut problems = Vec::new();
    let gens: Vec<(String, Element)> = (1..=2)
        .flat_map(|i| {
            [
                (format!("h[{i}]"), Element::h(ctx, i).unwrap()),
                (format!("Z[{i}]"), Element::z(ctx, i).unwrap()),
                (format!("d[{i}]"), Element::d(ctx, i).unwrap()),
            ]
        })
        .collect();
    for s in 0..10 {
        let p = random_central_poly(&mut rng);
        let x = central_polynomial_element(ctx, &p).unwrap();
        match center_decompose(&x) {
            Ok(CenterDecomposition::Central(q)) if q == p => {}
            other => problems.push(format!("central sample {s} p={p}: {other:?}")),
        }
    }
    for s in 0..10 {
        let p = random_central_poly(&mut rng);
        let mut noise = Element::zero(ctx);
        while noise.is_zero() || noise.degree() == Some(0) {
            noise = sample::element(ctx, &mut rng, 2, 2);
        }
        let x = central_polynomial_element(ctx, &p).unwrap().try_add(&noise).unwrap();
        // an element is central iff it commutes with all generators
        let central = gens.iter().all(|(_, g)| x.commutator(g).unwrap().is_zero());
        match center_decompose(&x) {
            Ok(CenterDecomposition::NotCentral(w)) => {
                let g = &gens.iter().find(|(name, _)| *name == w.generator).expect("known generator").1;
                let c = x.commutator(g).unwrap();
                if central || c.is_zero() || c != w.commutator {
                    problems.push(format!("perturbed sample {s}: bad witness {}", w.generator));
                }
            }
            other => {
                if !central {
                    problems.push(format!("perturbed sample {s}: {other:?}"));
                }
            }
        }
    }
    verdict("center decision on 20 seeded elements, n = 2", problems);
}

#[test]
fn highest_weight_central_values() {
    let mut problems = Vec::new();
    for n in [2, 3] {
        problems.extend(failures(&run(Suite::Hw, n, 1)));
        let ctx = RingCtx::single(n).unwrap();
        let mut vectors = vec![HWVector::vacuum(n)];
        vectors.extend(excited_words(n).iter().map(|b| HWVector::basis(n, b)));
        if vectors.len() != 6 {
            problems.push(format!("n={n}: {} vectors", vectors.len()));
        }
        for k in 1..=n {
            let c = central_c(ctx, k).unwrap();
            let want = expected_central_value(k, n).unwrap();
            for v in &vectors {
                let w = hw_apply(&c, v).unwrap();
                if w.ratio_to(v).as_ref() != Some(&want) {
                    problems.push(format!("n={n} c{k} on {v}: {w}"));
                }
            }
        }
    }
    verdict("highest-weight central values, n = 2, 3", problems);
}

#[test]
fn vgamma_module_relations() {
    let mut problems = Vec::new();
    for n in [2, 3] {
        for seed in 0..2 {
            let r = run_suite(Suite::Vmod, SuiteParams { seed, ..params(n, 1) }).unwrap();
            let pairs = r.checks.iter().filter(|c| c.name.starts_with("vmod sample")).count();
            if pairs < 50 {
                problems.push(format!("n={n}: {pairs} relation-vector pairs"));
            }
            if !r.checks.iter().any(|c| c.name == "non-generic gamma rejected") {
                problems.push(format!("n={n}: rejection not checked"));
            }
            problems.extend(failures(&r));
        }
    }
    verdict("relations annihilate V_{gamma,A}, n = 2, 3", problems);
}

#[test]
fn reflection_equation() {
    let mut problems = Vec::new();
    let rank_one = verify_reflection(1, 1, Convention::PINNED).unwrap();
    if !rank_one.all_passed() {
        problems.push(format!("n=1:\n{rank_one}"));
    }
    for copies in [1, 2] {
        let r = run(Suite::Reflection, 2, copies);
        let pinned = format!("convention {}", Convention::PINNED);
        if !r.checks.iter().any(|c| c.name == pinned && c.status == Status::Pass) {
            problems.push(format!("N={copies}: convention not pinned"));
        }
        problems.extend(failures(&r));
    }
    verdict("reflection equation, n = 1 and n = 2, N = 1, 2", problems);
}

#[test]
fn note3_identity() {
    let mut problems = Vec::new();
    for n in 1..=4 {
        problems.extend(failures(&run(Suite::Note3, n, 1)));
    }
    verdict("product identity for n = 1..4", problems);
}

/// The literal bound fails for `m = 1` and for powers of `d[k]`: the minimal
/// exponent is one more than the `d[k]` degree.
#[test]
fn ore_witness_bound() {
    let mut problems = Vec::new();
    for n in [2, 3] {
        let r = run(Suite::Ore, n, 1);
        if r.checks.len() != 50 {
            problems.push(format!("n={n}: {} samples", r.checks.len()));
        }
        problems.extend(failures(&r));
    }
    verdict("Ore witnesses with nu <= word length, n = 2, 3", problems);
}
