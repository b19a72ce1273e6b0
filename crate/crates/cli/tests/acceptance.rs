//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Criteria 1-10 replay the claim suite plus a few direct checks;
//! criterion 11 runs the randomized oracle comparisons.

#[path = "../../core/tests/common/mod.rs"]
mod common;

use std::time::{Duration, Instant};

use ikverify_cli::claims::{verify_paper, Ctx, Verdict};
use ikverify_core::catalog::Catalog;
use ikverify_core::minor::{find_minor, has_minor, validate_minor_embedding};
use ikverify_core::mu::{mu_bounds, mu_bounds_with_known, revalidate, KnownBounds};
use ikverify_core::planarity::{apex_search, is_planar, Kuratowski};
use ikverify_core::canonical_form;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

type Check = Box<dyn Fn(&Ctx) -> Result<String, String>>;

struct Criterion {
    number: u32,
    title: &'static str,
    limit: Duration,
    check: Check,
}

fn claims(ids: &'static [&'static str]) -> Check {
    Box::new(move |ctx| {
        let mut total = 0;
        for id in ids {
            let report = verify_paper(ctx, Some(id));
            if report.claims.is_empty() {
                return Err(format!("no claim {id}"));
            }
            for c in &report.claims {
                if c.verdict != Verdict::Pass {
                    return Err(format!("{} {:?}: {}", c.id, c.verdict, c.certificate));
                }
                total += 1;
            }
        }
        Ok(format!("{total} claims"))
    })
}

fn ensure(cond: bool, what: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what.into())
    }
}

fn mu_intervals(ctx: &Ctx) -> Result<String, String> {
    claims(&["mu.k7", "mu.k3311", "mu.g11_35", "mu.g10_30", "mu.g10_26", "mu.minor-monotone"])(ctx)?;
    let g = |n: &str| ctx.catalog.graph(n).map_err(|e| e.to_string());
    let mut seen = Vec::new();
    for (name, want) in [("K7", (6, 6)), ("K3311", (6, 6)), ("G11_35", (5, 5)), ("G10_30", (5, 5))] {
        let graph = g(name)?;
        let b = mu_bounds(&graph).map_err(|e| e.to_string())?;
        ensure((b.lo, b.hi) == want && revalidate(&graph, &b), format!("{name} gave {b}"))?;
        seen.push(format!("{name} {b}"));
    }
    let big = g("G11_35")?;
    let big_bounds = mu_bounds(&big).map_err(|e| e.to_string())?;
    let known = [KnownBounds {
        name: "G11_35".into(),
        graph: big,
        bounds: big_bounds.clone(),
    }];
    let small = g("G10_26")?;
    let b = mu_bounds_with_known(&small, &known).map_err(|e| e.to_string())?;
    ensure(
        (b.lo, b.hi) == (5, 5) && b.hi <= big_bounds.hi && revalidate(&small, &b),
        format!("G10_26 gave {b}"),
    )?;
    seen.push(format!("G10_26 {b}"));
    Ok(seen.join(", "))
}

fn property_suites(_: &Ctx) -> Result<String, String> {
    let mut rng = StdRng::seed_from_u64(2024);

    let mut relabelings = 0;
    for e in Catalog::builtin().entries() {
        let base = canonical_form(&e.graph).edges;
        for _ in 0..45 {
            let h = common::random_relabel(&mut rng, &e.graph);
            let f = canonical_form(&h);
            ensure(f.edges == base && f.certifies(&h), format!("canonical form of {} moved", e.name))?;
            relabelings += 1;
        }
    }
    ensure(relabelings >= 1000, "too few relabelings")?;

    let patterns = common::minor_patterns();
    let mut minor_checks = 0;
    for _ in 0..200 {
        let n = rng.gen_range(1..=7);
        let p = rng.gen_range(0.3..0.9);
        let host = common::random_graph(&mut rng, n, p);
        for (name, pattern) in &patterns {
            let found = find_minor(&host, pattern, None).map_err(|e| e.to_string())?.embedding;
            let oracle = common::brute_has_minor(&host, pattern);
            ensure(found.is_some() == oracle, format!("{name} in {host:?}: search {} oracle {oracle}", found.is_some()))?;
            if let Some(emb) = found {
                ensure(validate_minor_embedding(&host, pattern, &emb), "invalid embedding")?;
            }
            minor_checks += 1;
        }
    }

    let (k5, k33) = (Kuratowski::K5.pattern(), Kuratowski::K33.pattern());
    let mut apex_certs = 0;
    for _ in 0..200 {
        let n = rng.gen_range(1..=9);
        let p = rng.gen_range(0.3..0.9);
        let g = common::random_graph(&mut rng, n, p);
        let verdict = is_planar(&g);
        let oracle = has_minor(&g, &k5).is_none() && has_minor(&g, &k33).is_none();
        ensure(verdict.validate(&g), format!("planarity certificate for {g:?} fails"))?;
        ensure(verdict.is_planar() == oracle, format!("planarity disagrees on {g:?}"))?;
        for k in 0..=2 {
            if let Some(c) = apex_search(&g, k).certificate {
                ensure(c.removed.len() <= k && c.validate(&g), format!("apex certificate for {g:?}"))?;
                apex_certs += 1;
            }
        }
    }
    for e in Catalog::builtin().entries() {
        if let Some(c) = apex_search(&e.graph, 3).certificate {
            ensure(c.validate(&e.graph), format!("apex certificate for {}", e.name))?;
            apex_certs += 1;
        }
    }
    Ok(format!(
        "{relabelings} relabelings, {minor_checks} minor comparisons, 200 planarity comparisons, {apex_certs} apex certificates"
    ))
}

fn main() {
    let secs = Duration::from_secs;
    let criteria = vec![
        Criterion {
            number: 1,
            title: "catalog integrity",
            limit: secs(1),
            check: claims(&["catalog.g11_35.size", "catalog.g10_30.size", "catalog.g10_26.size"]),
        },
        Criterion {
            number: 2,
            title: "clique-sum structure of M",
            limit: secs(1),
            check: claims(&[
                "structure.separator",
                "structure.h-minus-4",
                "structure.k-minus-5",
                "structure.clique-sum",
            ]),
        },
        Criterion {
            number: 3,
            title: "nIL certificates",
            limit: secs(120),
            check: claims(&[
                "nil.m",
                "nil.g11_35-contract-2-3",
                "nil.g11_35-delete-2-11",
                "nil.g10_30-contract-2-6",
                "nil.delta-y-then-contract",
            ]),
        },
        Criterion {
            number: 4,
            title: "Petersen-family minors",
            limit: secs(300),
            check: claims(&[
                "il.g11_35",
                "il.g10_30",
                "il.g10_26",
                "il.g10_26-k331",
                "il.g10_26-k44e",
                "il.g10_26-g7",
            ]),
        },
        Criterion {
            number: 5,
            title: "G10_26 from G11_35",
            limit: secs(1),
            check: claims(&["derivation.g10_26-from-g11_35"]),
        },
        Criterion {
            number: 6,
            title: "planarizing pairs for simple minors of G10_26",
            limit: secs(60),
            check: Box::new(|ctx| {
                let out = claims(&["table1"])(ctx)?;
                ensure(out == "22 claims", format!("expected 22 claims, got {out}"))?;
                Ok(out)
            }),
        },
        Criterion {
            number: 7,
            title: "orbits of G10_26",
            limit: secs(10),
            check: claims(&["orbits"]),
        },
        Criterion {
            number: 8,
            title: "mu intervals",
            limit: secs(300),
            check: Box::new(mu_intervals),
        },
        Criterion {
            number: 9,
            title: "vertex-deleted subgraphs of G9_28",
            limit: secs(30),
            check: claims(&["g9_28"]),
        },
        Criterion {
            number: 10,
            title: "family closures",
            limit: secs(1800),
            check: claims(&["family.k6", "family.g10_26"]),
        },
        Criterion {
            number: 11,
            title: "property suites",
            limit: secs(600),
            check: Box::new(property_suites),
        },
    ];

    let ctx = Ctx::new(Catalog::builtin().clone());
    let mut failures = 0;
    for c in &criteria {
        let start = Instant::now();
        let result = (c.check)(&ctx);
        let took = start.elapsed();
        let (tag, detail) = match result {
            Ok(d) if took <= c.limit => ("PASS", d),
            Ok(d) => ("FAIL", format!("{d}; took longer than {:?}", c.limit)),
            Err(e) => ("FAIL", e),
        };
        if tag == "FAIL" {
            failures += 1;
        }
        println!(
            "{tag} criterion {:>2} {:<46} {:>9.3}s  {detail}",
            c.number,
            c.title,
            took.as_secs_f64()
        );
    }
    println!("{} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures > 0 {
        std::process::exit(1);
    }
}

