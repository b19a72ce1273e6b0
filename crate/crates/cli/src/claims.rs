//! The claim suite replayed by `verify-paper`.
//!
//! Each claim names the statement it checks, where that statement lives in
//! the source material, and a check that produces a certificate summary.
//! Checks re-validate every witness they produce.

use std::time::Instant;

use ikverify_core::catalog::{
    check_nil_clique_sum_hypotheses, clique_sum, nil_clique_sum_hypotheses, split_clique_sum, Catalog, M_SEPARATOR,
};
use ikverify_core::minor::{certify_nil_with_budget, find_minor, petersen_family, validate_minor_embedding, NilCertificate};
use ikverify_core::moves::{delta_y, family_closure, ClosureLimits, CollapseRule};
use ikverify_core::mu::{delta_y_transfer, mu_bounds, mu_bounds_with_known, revalidate, KnownBounds, MuBounds};
use ikverify_core::planarity::{apex_search, is_maximal_planar, is_planar};
use ikverify_core::{canonical_form, is_isomorphic, orbits, validate_isomorphism, Error, Graph, Result, Vertex, VertexSet};
use serde::Serialize;

/// Progress callback: position, total, claim id.
pub type Progress = Box<dyn Fn(usize, usize, &str)>;

pub struct Ctx {
    pub catalog: Catalog,
    /// Node budget for each minor search; `None` searches exhaustively.
    pub budget: Option<u64>,
    /// Called with the claim id before each claim runs.
    pub progress: Option<Progress>,
}

impl Ctx {
    pub fn new(catalog: Catalog) -> Ctx {
        Ctx {
            catalog,
            budget: None,
            progress: None,
        }
    }

    fn g(&self, name: &str) -> Result<Graph> {
        self.catalog.graph(name)
    }

    fn nil(&self, g: &Graph) -> Result<NilCertificate> {
        certify_nil_with_budget(g, self.budget)
    }
}

pub struct Outcome {
    pub pass: bool,
    pub detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Result<Outcome> {
    Ok(Outcome {
        pass,
        detail: detail.into(),
    })
}

#[derive(Clone, Copy)]
pub struct Claim {
    pub id: &'static str,
    pub anchor: &'static str,
    pub statement: &'static str,
    check: fn(&Ctx) -> Result<Outcome>,
}

impl Claim {
    pub fn group(&self) -> &'static str {
        self.id.split('.').next().unwrap_or(self.id)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Error,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClaimResult {
    pub id: String,
    pub group: String,
    pub anchor: String,
    pub statement: String,
    pub verdict: Verdict,
    pub certificate: String,
    pub wall_ms: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClaimReport {
    pub claims: Vec<ClaimResult>,
    pub passed: usize,
    pub failed: usize,
    pub errors: usize,
    pub overall: Verdict,
    /// True when some error was an exhausted search budget.
    pub budget_exhausted: bool,
}

impl ClaimReport {
    /// Line-oriented form; the timing column is the only part that varies
    /// between runs.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.claims {
            let tag = match c.verdict {
                Verdict::Pass => "PASS ",
                Verdict::Fail => "FAIL ",
                Verdict::Error => "ERROR",
            };
            out.push_str(&format!(
                "{tag} {:<44} {:>7}ms  {}\n      where: {}\n      cert:  {}\n",
                c.id, c.wall_ms, c.statement, c.anchor, c.certificate
            ));
        }
        let overall = match self.overall {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Error => "ERROR",
        };
        out.push_str(&format!(
            "overall: {overall} ({} passed, {} failed, {} errors, {} claims)\n",
            self.passed,
            self.failed,
            self.errors,
            self.claims.len()
        ));
        out
    }
}

/// Claims whose id equals `only` or whose group is `only`; all when `None`.
pub fn select(only: Option<&str>) -> Vec<&'static Claim> {
    let mut out: Vec<&'static Claim> = CLAIMS
        .iter()
        .filter(|c| only.is_none_or(|o| c.group() == o || c.id == o))
        .collect();
    out.sort_by_key(|c| c.id);
    out
}

pub fn verify_paper(ctx: &Ctx, only: Option<&str>) -> ClaimReport {
    let selected = select(only);
    let mut claims = Vec::with_capacity(selected.len());
    let mut budget_exhausted = false;
    for (i, claim) in selected.iter().enumerate() {
        if let Some(p) = &ctx.progress {
            p(i + 1, selected.len(), claim.id);
        }
        let start = Instant::now();
        let (verdict, certificate) = match (claim.check)(ctx) {
            Ok(o) if o.pass => (Verdict::Pass, o.detail),
            Ok(o) => (Verdict::Fail, o.detail),
            Err(e) => {
                budget_exhausted |= matches!(e, Error::BudgetExceeded(_));
                (Verdict::Error, e.to_string())
            }
        };
        claims.push(ClaimResult {
            id: claim.id.to_string(),
            group: claim.group().to_string(),
            anchor: claim.anchor.to_string(),
            statement: claim.statement.to_string(),
            verdict,
            certificate,
            wall_ms: start.elapsed().as_millis() as u64,
        });
    }
    let count = |v: Verdict| claims.iter().filter(|c| c.verdict == v).count();
    let (passed, failed, errors) = (count(Verdict::Pass), count(Verdict::Fail), count(Verdict::Error));
    let overall = if errors > 0 {
        Verdict::Error
    } else if failed > 0 {
        Verdict::Fail
    } else {
        Verdict::Pass
    };
    ClaimReport {
        claims,
        passed,
        failed,
        errors,
        overall,
        budget_exhausted,
    }
}

fn vs(v: &[Vertex]) -> VertexSet {
    v.iter().copied().collect()
}

fn size_check(ctx: &Ctx, name: &str, order: usize, size: usize) -> Result<Outcome> {
    let g = ctx.g(name)?;
    outcome(
        (g.order(), g.size()) == (order, size),
        format!("{} vertices, {} edges", g.order(), g.size()),
    )
}

fn nil_check(ctx: &Ctx, g: &Graph) -> Result<Outcome> {
    let cert = ctx.nil(g)?;
    let nodes: Vec<String> = cert
        .verdicts
        .iter()
        .map(|(name, v)| match v {
            ikverify_core::minor::ObstructionVerdict::NoMinor { nodes } => format!("{name}:none/{nodes}"),
            ikverify_core::minor::ObstructionVerdict::Minor(_) => format!("{name}:found"),
        })
        .collect();
    let valid = cert.validate(g);
    outcome(cert.is_nil() && valid, nodes.join(" "))
}

fn petersen_minor_check(ctx: &Ctx, g: &Graph) -> Result<Outcome> {
    for ob in petersen_family() {
        if let Some(e) = find_minor(g, &ob.graph, ctx.budget)?.embedding {
            let ok = validate_minor_embedding(g, &ob.graph, &e);
            return outcome(ok, format!("{} minor {e}", ob.name));
        }
    }
    outcome(false, "no Petersen-family minor")
}

fn minor_check(ctx: &Ctx, host: &Graph, pattern: &Graph, label: &str) -> Result<Outcome> {
    match find_minor(host, pattern, ctx.budget)?.embedding {
        Some(e) => outcome(validate_minor_embedding(host, pattern, &e), format!("{label} minor {e}")),
        None => outcome(false, format!("no {label} minor")),
    }
}

fn split_m(ctx: &Ctx) -> Result<(Graph, Graph)> {
    split_clique_sum(&ctx.g("M")?, vs(&M_SEPARATOR))
}

/// `G10_30 / (2,6)` with the edge `(8,9)` added.
fn fig6_graph(ctx: &Ctx) -> Result<Graph> {
    ctx.g("G10_30")?.contract_edge(2, 6)?.with_edge(8, 9)
}

// Table of two-vertex planarizing sets: (edge, pair after deleting it or
// None for the exception, pair after contracting it).
type TableRow = ((Vertex, Vertex), Option<(Vertex, Vertex)>, (Vertex, Vertex));
const TABLE: [TableRow; 11] = [
    ((1, 2), Some((4, 7)), (1, 3)),
    ((1, 4), Some((2, 6)), (1, 7)),
    ((1, 5), Some((2, 3)), (1, 2)),
    ((1, 8), Some((2, 3)), (1, 4)),
    ((1, 9), Some((2, 5)), (2, 3)),
    ((2, 4), Some((5, 6)), (2, 3)),
    ((2, 7), Some((3, 4)), (2, 4)),
    ((4, 5), None, (2, 4)),
    ((4, 9), Some((2, 3)), (4, 7)),
    ((5, 7), Some((2, 4)), (2, 4)),
    ((5, 9), Some((2, 6)), (2, 5)),
];

fn table_row(ctx: &Ctx, edge: (Vertex, Vertex), contract: bool) -> Result<Outcome> {
    let row = TABLE.iter().find(|r| r.0 == edge).expect("edge in table");
    let g = ctx.g("G10_26")?;
    let minor = if contract {
        g.contract_edge(edge.0, edge.1)?
    } else {
        g.delete_edge(edge.0, edge.1)?
    };
    let pair = if contract { Some(row.2) } else { row.1 };
    match pair {
        Some((a, b)) => {
            let rest = minor.remove_vertices(vs(&[a, b]))?;
            let verdict = is_planar(&rest);
            let valid = verdict.validate(&rest);
            let search = apex_search(&minor, 2);
            let least = search
                .certificate
                .as_ref()
                .map_or("none".to_string(), |c| c.removed.to_string());
            outcome(
                verdict.is_planar() && valid,
                format!(
                    "removing {{{a},{b}}} leaves a planar graph ({} vertices, {} edges); least planarizing set {least}",
                    rest.order(),
                    rest.size()
                ),
            )
        }
        None => {
            let search = apex_search(&minor, 2);
            let expected = 1 + 10 + 45;
            let repaired = delta_y(&minor, [1, 5, 9])?;
            let new_vertex = 11;
            let rest = repaired.remove_vertices(vs(&[2, new_vertex]))?;
            let verdict = is_planar(&rest);
            outcome(
                search.certificate.is_none()
                    && search.subsets_covered == expected
                    && repaired.contains_vertex(new_vertex)
                    && repaired.degree(new_vertex) == 3
                    && verdict.is_planar()
                    && verdict.validate(&rest),
                format!(
                    "not 2-apex: {} subsets covered, {} planarity tests; Delta-Y on (1,5,9) then removing {{2,11}} is planar",
                    search.subsets_covered, search.planarity_tests
                ),
            )
        }
    }
}

macro_rules! table_claims {
    ($(($del:literal, $con:literal, $u:literal, $v:literal)),* $(,)?) => {
        [$(
            Claim {
                id: $del,
                anchor: "table of planarizing pairs for edge deletions of G10_26",
                statement: concat!("G10_26 - (", $u, ",", $v, ") becomes planar after removing the listed pair"),
                check: |ctx| table_row(ctx, ($u, $v), false),
            },
            Claim {
                id: $con,
                anchor: "table of planarizing pairs for edge contractions of G10_26",
                statement: concat!("G10_26 / (", $u, ",", $v, ") becomes planar after removing the listed pair"),
                check: |ctx| table_row(ctx, ($u, $v), true),
            },
        )*]
    };
}

const TABLE_CLAIMS: [Claim; 22] = table_claims![
    ("table1.e01-1-2.delete", "table1.e01-1-2.contract", 1, 2),
    ("table1.e02-1-4.delete", "table1.e02-1-4.contract", 1, 4),
    ("table1.e03-1-5.delete", "table1.e03-1-5.contract", 1, 5),
    ("table1.e04-1-8.delete", "table1.e04-1-8.contract", 1, 8),
    ("table1.e05-1-9.delete", "table1.e05-1-9.contract", 1, 9),
    ("table1.e06-2-4.delete", "table1.e06-2-4.contract", 2, 4),
    ("table1.e07-2-7.delete", "table1.e07-2-7.contract", 2, 7),
    ("table1.e08-4-5.delete", "table1.e08-4-5.contract", 4, 5),
    ("table1.e09-4-9.delete", "table1.e09-4-9.contract", 4, 9),
    ("table1.e10-5-7.delete", "table1.e10-5-7.contract", 5, 7),
    ("table1.e11-5-9.delete", "table1.e11-5-9.contract", 5, 9),
];

fn mu_check(ctx: &Ctx, name: &str, lo: u32, hi: u32) -> Result<Outcome> {
    let g = ctx.g(name)?;
    let b = mu_bounds(&g)?;
    mu_outcome(&g, &b, lo, hi)
}

fn mu_outcome(g: &Graph, b: &MuBounds, lo: u32, hi: u32) -> Result<Outcome> {
    let steps: Vec<String> = b.trace.iter().map(|s| format!("{} {}", s.rule, s.bound)).collect();
    outcome(
        (b.lo, b.hi) == (lo, hi) && revalidate(g, b),
        format!("{b} from {}", steps.join(", ")),
    )
}

fn g9_classes(ctx: &Ctx) -> Result<Vec<(Vertex, Graph)>> {
    let g = ctx.g("G9_28")?;
    let mut reps: Vec<(Vertex, Graph)> = Vec::new();
    for v in g.vertices() {
        let h = g.remove_vertex(v)?;
        if !reps.iter().any(|(_, r)| canonical_form(r) == canonical_form(&h)) {
            reps.push((v, h));
        }
    }
    Ok(reps)
}

const OTHER_CLAIMS: &[Claim] = &[
    Claim {
        id: "catalog.g11_35.size",
        anchor: "edge list of G11_35",
        statement: "G11_35 has 11 vertices and 35 edges",
        check: |ctx| size_check(ctx, "G11_35", 11, 35),
    },
    Claim {
        id: "catalog.g10_30.size",
        anchor: "edge list of G10_30",
        statement: "G10_30 has 10 vertices and 30 edges",
        check: |ctx| size_check(ctx, "G10_30", 10, 30),
    },
    Claim {
        id: "catalog.g10_26.size",
        anchor: "edge list of G10_26",
        statement: "G10_26 has 10 vertices and 26 edges",
        check: |ctx| size_check(ctx, "G10_26", 10, 26),
    },
    Claim {
        id: "catalog.g11_35.m-plus-edge",
        anchor: "construction of G11_35 from the nIL graph M",
        statement: "G11_35 = M + (2,11)",
        check: |ctx| {
            let g = ctx.g("G11_35")?;
            let m = ctx.g("M")?;
            let plus = m.with_edge(2, 11)?;
            outcome(
                g == plus && !m.has_edge(2, 11),
                format!("M has {} edges, G11_35 has {}", m.size(), g.size()),
            )
        },
    },
    Claim {
        id: "catalog.g9_28.structure",
        anchor: "G9_28 as two nonadjacent cones over the complement of a 7-cycle",
        statement: "G9_28 is the complement of C7 with two nonadjacent cone vertices",
        check: |ctx| {
            let g = ctx.g("G9_28")?;
            let rim = g.induced_subgraph(vs(&[1, 2, 3, 4, 5, 6, 7]))?;
            let cones_ok = [8, 9].iter().all(|&c| g.degree(c) == 7) && !g.has_edge(8, 9);
            outcome(
                rim == Graph::cycle(7).complement() && cones_ok && g.size() == 28,
                format!("rim has {} edges, cones have degree {} and {}", rim.size(), g.degree(8), g.degree(9)),
            )
        },
    },
    Claim {
        id: "catalog.k3311.cone",
        anchor: "K3,3,1,1 as the cone over K3,3,1",
        statement: "cone(K3,3,1) is isomorphic to K3,3,1,1",
        check: |ctx| {
            let coned = ikverify_core::catalog::cone(&ctx.g("K331")?)?;
            let target = Graph::complete_multipartite(&[3, 3, 1, 1]);
            let iso = is_isomorphic(&coned, &target);
            outcome(
                iso.as_ref().is_some_and(|m| validate_isomorphism(&coned, &target, m)),
                "isomorphism validated edge by edge",
            )
        },
    },
    Claim {
        id: "structure.separator",
        anchor: "M as a clique sum over the K4 induced by {3,4,5,6}",
        statement: "{3,4,5,6} induces K4 in M and separates it into two components",
        check: |ctx| {
            let m = ctx.g("M")?;
            let sep = vs(&M_SEPARATOR);
            let k4 = m.induced_subgraph(sep)?;
            let comps = m.remove_vertices(sep)?.components();
            let list: Vec<String> = comps.iter().map(|c| c.to_string()).collect();
            outcome(
                k4.size() == 6 && comps.len() == 2,
                format!("induced edges {}, components {}", k4.size(), list.join(" ")),
            )
        },
    },
    Claim {
        id: "structure.h-minus-4",
        anchor: "deleting vertex 4 from H gives a maximal planar graph",
        statement: "H - 4 is maximal planar with 7 vertices and 15 edges",
        check: |ctx| {
            let (h, _) = split_m(ctx)?;
            let hp = h.remove_vertex(4)?;
            let verdict = is_planar(&hp);
            outcome(
                (hp.order(), hp.size()) == (7, 15) && is_maximal_planar(&hp)? && verdict.validate(&hp) && hp == ctx.g("Hprime")?,
                format!("H has vertices {}; H - 4 has {} vertices, {} edges", h.vertex_set(), hp.order(), hp.size()),
            )
        },
    },
    Claim {
        id: "structure.k-minus-5",
        anchor: "deleting vertex 5 from K gives a maximal planar graph",
        statement: "K - 5 is maximal planar with 6 vertices and 12 edges",
        check: |ctx| {
            let (_, k) = split_m(ctx)?;
            let kp = k.remove_vertex(5)?;
            let verdict = is_planar(&kp);
            outcome(
                (kp.order(), kp.size()) == (6, 12) && is_maximal_planar(&kp)? && verdict.validate(&kp) && kp == ctx.g("Kprime")?,
                format!("K has vertices {}; K - 5 has {} vertices, {} edges", k.vertex_set(), kp.order(), kp.size()),
            )
        },
    },
    Claim {
        id: "structure.h-k-apex",
        anchor: "H and K are apex",
        statement: "H and K each become planar after deleting one vertex",
        check: |ctx| {
            let (h, k) = split_m(ctx)?;
            let ch = apex_search(&h, 1).certificate;
            let ck = apex_search(&k, 1).certificate;
            let four = h.remove_vertex(4).map(|r| is_planar(&r).is_planar())?;
            let five = k.remove_vertex(5).map(|r| is_planar(&r).is_planar())?;
            let ok = ch.as_ref().is_some_and(|c| c.validate(&h)) && ck.as_ref().is_some_and(|c| c.validate(&k));
            outcome(
                ok && four && five,
                format!(
                    "least apex sets {} and {}; {{4}} and {{5}} also valid",
                    ch.map_or("none".into(), |c| c.removed.to_string()),
                    ck.map_or("none".into(), |c| c.removed.to_string())
                ),
            )
        },
    },
    Claim {
        id: "structure.clique-sum",
        anchor: "M is the clique sum of H and K over K4",
        statement: "clique_sum(H, K, {3,4,5,6}) is isomorphic to M",
        check: |ctx| {
            let (h, k) = split_m(ctx)?;
            let m = ctx.g("M")?;
            let sum = clique_sum(&h, &k, vs(&M_SEPARATOR))?;
            let iso = is_isomorphic(&sum, &m);
            outcome(
                iso.is_some_and(|map| validate_isomorphism(&sum, &m, &map)) && h == ctx.g("H")? && k == ctx.g("K")?,
                format!("H: {} vertices {} edges, K: {} vertices {} edges", h.order(), h.size(), k.order(), k.size()),
            )
        },
    },
    Claim {
        id: "structure.nil-sum-hypotheses",
        anchor: "H and K minus the shared K4 are connected, so the sum stays nIL",
        statement: "H and K are nIL and each stays connected after deleting {3,4,5,6}",
        check: |ctx| {
            let (h, k) = split_m(ctx)?;
            let hyp = nil_clique_sum_hypotheses(&h, &k, vs(&M_SEPARATOR))?;
            outcome(hyp.hold(), format!("{hyp:?}"))
        },
    },
    Claim {
        id: "structure.g10_30-split",
        anchor: "G10_30 contracted on (2,6) plus (8,9) is a clique sum of H and K5",
        statement: "G10_30/(2,6) + (8,9) splits over {2,3,8,9} into a copy of H and K5 meeting the nIL sum hypotheses",
        check: |ctx| {
            let x = fig6_graph(ctx)?;
            let sep = vs(&[2, 3, 8, 9]);
            let (a, b) = split_clique_sum(&x, sep)?;
            let h = ctx.g("H")?;
            let k5 = Graph::complete(5);
            let (big, small) = if a.order() >= b.order() { (a, b) } else { (b, a) };
            let iso_h = is_isomorphic(&big, &h).is_some_and(|m| validate_isomorphism(&big, &h, &m));
            let iso_k5 = is_isomorphic(&small, &k5).is_some();
            let round_trip = clique_sum(&big, &small, sep)? == x;
            let hyp = check_nil_clique_sum_hypotheses(&big, &small, sep)?;
            outcome(
                iso_h && iso_k5 && round_trip && hyp,
                format!(
                    "sides on {} and {}; hypotheses {}",
                    big.vertex_set(),
                    small.vertex_set(),
                    if hyp { "hold" } else { "fail" }
                ),
            )
        },
    },
    Claim {
        id: "nil.m",
        anchor: "M is a nIL graph",
        statement: "M has no Petersen-family minor",
        check: |ctx| nil_check(ctx, &ctx.g("M")?),
    },
    Claim {
        id: "nil.g11_35-delete-2-11",
        anchor: "G11_35 has a nIL edge deletion minor",
        statement: "G11_35 - (2,11) has no Petersen-family minor",
        check: |ctx| nil_check(ctx, &ctx.g("G11_35")?.delete_edge(2, 11)?),
    },
    Claim {
        id: "nil.g11_35-contract-2-3",
        anchor: "contracting (2,3) in G11_35 yields a minor of M",
        statement: "G11_35 / (2,3) is a minor of M and has no Petersen-family minor",
        check: |ctx| {
            let c = ctx.g("G11_35")?.contract_edge(2, 3)?;
            let m = ctx.g("M")?;
            let Some(e) = find_minor(&m, &c, ctx.budget)?.embedding else {
                return outcome(false, "not a minor of M");
            };
            let nil = nil_check(ctx, &c)?;
            outcome(
                validate_minor_embedding(&m, &c, &e) && nil.pass,
                format!("minor of M via {e}; {}", nil.detail),
            )
        },
    },
    Claim {
        id: "nil.g10_30-contract-2-6",
        anchor: "contracting (2,6) in G10_30 gives a nIL minor",
        statement: "G10_30 / (2,6) has no Petersen-family minor",
        check: |ctx| nil_check(ctx, &ctx.g("G10_30")?.contract_edge(2, 6)?),
    },
    Claim {
        id: "nil.delta-y-then-contract",
        anchor: "relating a Delta-Y move on (2,3,11) to deleting the edge (2,11)",
        statement: "Delta-Y on (2,3,11) of G11_35, then contracting the new vertex into 3, gives G11_35 - (2,11)",
        check: |ctx| {
            let g = ctx.g("G11_35")?;
            let y = delta_y(&g, [2, 3, 11])?;
            let x = g.next_free_label()?;
            let back = y.contract_edge(x, 3)?;
            let target = g.delete_edge(2, 11)?;
            let iso = is_isomorphic(&back, &target).is_some();
            outcome(
                back == target && iso,
                format!("new vertex {x}; result has {} edges and equals G11_35 - (2,11) label for label", back.size()),
            )
        },
    },
    Claim {
        id: "nil.k6-is-not-nil",
        anchor: "K6 is in the Petersen family",
        statement: "K6 contains a Petersen-family minor",
        check: |ctx| petersen_minor_check(ctx, &ctx.g("K6")?),
    },
    Claim {
        id: "il.g11_35",
        anchor: "G11_35 is intrinsically knotted, hence linked",
        statement: "G11_35 has a Petersen-family minor",
        check: |ctx| petersen_minor_check(ctx, &ctx.g("G11_35")?),
    },
    Claim {
        id: "il.g10_30",
        anchor: "G10_30 is intrinsically knotted, hence linked",
        statement: "G10_30 has a Petersen-family minor",
        check: |ctx| petersen_minor_check(ctx, &ctx.g("G10_30")?),
    },
    Claim {
        id: "il.g10_26",
        anchor: "G10_26 is intrinsically knotted, hence linked",
        statement: "G10_26 has a Petersen-family minor",
        check: |ctx| petersen_minor_check(ctx, &ctx.g("G10_26")?),
    },
    Claim {
        id: "il.g10_26-k331",
        anchor: "a subgraph of G10_26 contains a K3,3,1 minor",
        statement: "G10_26 has a K3,3,1 minor",
        check: |ctx| minor_check(ctx, &ctx.g("G10_26")?, &ctx.g("K331")?, "K3,3,1"),
    },
    Claim {
        id: "il.g10_26-k44e",
        anchor: "a subgraph of G10_26 is isomorphic to K4,4 minus an edge",
        statement: "G10_26 has a K4,4-e minor",
        check: |ctx| minor_check(ctx, &ctx.g("G10_26")?, &ctx.g("K44e")?, "K4,4-e"),
    },
    Claim {
        id: "il.g10_26-g7",
        anchor: "subgraphs of G10_26 contain G7 minors",
        statement: "G10_26 has a minor isomorphic to the 7-vertex family member other than K3,3,1",
        check: |ctx| {
            let g7 = petersen_family().iter().find(|o| o.name == "G7").expect("family member");
            minor_check(ctx, &ctx.g("G10_26")?, &g7.graph, "G7")
        },
    },
    Claim {
        id: "derivation.g10_26-from-g11_35",
        anchor: "G10_26 obtained from G11_35 by one contraction and seven deletions",
        statement: "G11_35 / (2,11) minus (2,3),(2,5),(2,6),(3,5),(3,6),(4,10),(5,6) is isomorphic to G10_26",
        check: |ctx| {
            let mut g = ctx.g("G11_35")?.contract_edge(2, 11)?;
            for (u, v) in [(2, 3), (2, 5), (2, 6), (3, 5), (3, 6), (4, 10), (5, 6)] {
                g = g.delete_edge(u, v)?;
            }
            let target = ctx.g("G10_26")?;
            let same = canonical_form(&g) == canonical_form(&target);
            let iso = is_isomorphic(&g, &target);
            outcome(
                same && iso.as_ref().is_some_and(|m| validate_isomorphism(&g, &target, m)),
                format!(
                    "{} vertices, {} edges; canonical forms {}",
                    g.order(),
                    g.size(),
                    if same { "equal" } else { "differ" }
                ),
            )
        },
    },
    Claim {
        id: "derivation.g11_35-contract-2-3-size",
        anchor: "contracting (2,3) in G11_35",
        statement: "G11_35 / (2,3) has 10 vertices and 35 - 1 - |N(2) & N(3)| edges",
        check: |ctx| {
            let g = ctx.g("G11_35")?;
            let common = g.neighbors(2).intersection(g.neighbors(3)).len();
            let c = g.contract_edge(2, 3)?;
            outcome(
                c.order() == 10 && c.size() == 35 - 1 - common && c.size() == 30,
                format!("{} common neighbours, {} edges", common, c.size()),
            )
        },
    },
    Claim {
        id: "orbits.g10_26-vertices",
        anchor: "the vertices of G10_26 fall into six equivalence classes",
        statement: "vertex orbits of G10_26 are {1,8},{2,3},{4},{5,6},{7,10},{9}",
        check: |ctx| {
            let o = orbits(&ctx.g("G10_26")?);
            let expected: Vec<Vec<Vertex>> = vec![vec![1, 8], vec![2, 3], vec![4], vec![5, 6], vec![7, 10], vec![9]];
            outcome(
                o.vertex == expected,
                format!("{:?} from {} generators", o.vertex, o.generators.len()),
            )
        },
    },
    Claim {
        id: "orbits.g10_26-edges",
        anchor: "G10_26 has eleven types of edges",
        statement: "G10_26 has exactly 11 edge orbits",
        check: |ctx| {
            let g = ctx.g("G10_26")?;
            let o = orbits(&g);
            let reps: Vec<String> = o.edge.iter().map(|c| format!("({},{})", c[0].0, c[0].1)).collect();
            let table_edges: Vec<(Vertex, Vertex)> = TABLE.iter().map(|r| r.0).collect();
            let one_per_orbit = o
                .edge
                .iter()
                .all(|c| c.iter().filter(|e| table_edges.contains(e)).count() == 1);
            outcome(
                o.edge.len() == 11 && one_per_orbit,
                format!("{} orbits, representatives {}", o.edge.len(), reps.join(" ")),
            )
        },
    },
    Claim {
        id: "mu.k7",
        anchor: "mu(K_n) = n - 1",
        statement: "mu(K7) = 6",
        check: |ctx| mu_check(ctx, "K7", 6, 6),
    },
    Claim {
        id: "mu.k3311",
        anchor: "K3,3,1,1 is the cone over K3,3,1 and is 3-apex",
        statement: "mu(K3,3,1,1) = 6",
        check: |ctx| mu_check(ctx, "K3311", 6, 6),
    },
    Claim {
        id: "mu.g11_35",
        anchor: "mu of G11_35 via its nIL simple minor",
        statement: "mu(G11_35) = 5",
        check: |ctx| mu_check(ctx, "G11_35", 5, 5),
    },
    Claim {
        id: "mu.g10_30",
        anchor: "mu of G10_30 via its nIL simple minor",
        statement: "mu(G10_30) = 5",
        check: |ctx| mu_check(ctx, "G10_30", 5, 5),
    },
    Claim {
        id: "mu.g10_26",
        anchor: "mu of G10_26 through being a minor of G11_35",
        statement: "mu(G10_26) = 5, the upper bound taken from G11_35",
        check: |ctx| {
            let host = ctx.g("G11_35")?;
            let known = [KnownBounds {
                name: "G11_35".into(),
                bounds: mu_bounds(&host)?,
                graph: host,
            }];
            let g = ctx.g("G10_26")?;
            let b = mu_bounds_with_known(&g, &known)?;
            mu_outcome(&g, &b, 5, 5)
        },
    },
    Claim {
        id: "mu.minor-monotone",
        anchor: "mu is minor monotone",
        statement: "lo(G10_26) <= hi(G11_35) and G10_26 is a minor of G11_35",
        check: |ctx| {
            let host = ctx.g("G11_35")?;
            let g = ctx.g("G10_26")?;
            let (bh, bg) = (mu_bounds(&host)?, mu_bounds(&g)?);
            let minor = find_minor(&host, &g, ctx.budget)?.embedding;
            outcome(
                bg.lo <= bh.hi && minor.is_some_and(|e| validate_minor_embedding(&host, &g, &e)),
                format!("G10_26 {bg}, G11_35 {bh}"),
            )
        },
    },
    Claim {
        id: "mu.delta-y-transfer",
        anchor: "Delta-Y preserves mu once mu >= 4",
        statement: "bounds on Delta-Y(G10_26 - (4,5), (1,5,9)) computed directly and by transfer intersect",
        check: |ctx| {
            let src = ctx.g("G10_26")?.delete_edge(4, 5)?;
            let image = delta_y(&src, [1, 5, 9])?;
            let (bs, bi) = (mu_bounds(&src)?, mu_bounds(&image)?);
            let Some(t) = delta_y_transfer(&src, &bs, [1, 5, 9])? else {
                return outcome(false, format!("source bounds {bs} do not reach 4"));
            };
            outcome(
                t.lo.max(bi.lo) <= t.hi.min(bi.hi) && revalidate(&image, &t) && revalidate(&image, &bi),
                format!("direct {bi}, transferred {t}"),
            )
        },
    },
    Claim {
        id: "g9_28.two-classes",
        anchor: "up to isomorphism G9_28 has only two induced subgraphs of order 8",
        statement: "vertex-deleted subgraphs of G9_28 fall into exactly two isomorphism classes",
        check: |ctx| {
            let reps = g9_classes(ctx)?;
            let list: Vec<String> = reps.iter().map(|(v, h)| format!("G9_28 - {v} ({} edges)", h.size())).collect();
            outcome(reps.len() == 2, list.join(", "))
        },
    },
    Claim {
        id: "g9_28.k6-minors",
        anchor: "neither order-8 subgraph of G9_28 is nIL since both have a K6 minor",
        statement: "both classes of G9_28 - v contain a K6 minor",
        check: |ctx| {
            let reps = g9_classes(ctx)?;
            let k6 = Graph::complete(6);
            let mut parts = Vec::new();
            let mut ok = reps.len() == 2;
            for (v, h) in &reps {
                match find_minor(h, &k6, ctx.budget)?.embedding {
                    Some(e) => {
                        ok &= validate_minor_embedding(h, &k6, &e);
                        parts.push(format!("G9_28 - {v}: {e}"));
                    }
                    None => {
                        ok = false;
                        parts.push(format!("G9_28 - {v}: none"));
                    }
                }
            }
            outcome(ok, parts.join("; "))
        },
    },
    Claim {
        id: "family.k6",
        anchor: "the Petersen family is the family of K6",
        statement: "the Delta-Y/Y-Delta family of K6 has 7 members, each with 15 edges, including K6, K3,3,1, K4,4-e and the Petersen graph",
        check: |ctx| {
            let c = family_closure(&ctx.g("K6")?, ClosureLimits::default())?;
            let all15 = c.members.iter().all(|m| m.form.edges.len() == 15);
            let named = ["K6", "K331", "K44e", "PETERSEN"]
                .iter()
                .map(|n| ctx.g(n).map(|g| c.contains(&g)))
                .collect::<Result<Vec<bool>>>()?;
            outcome(
                c.len() == 7 && all15 && named.iter().all(|&b| b) && c.collapses.is_empty(),
                format!("{} members, stats {:?}", c.len(), c.stats),
            )
        },
    },
    Claim {
        id: "family.g10_26",
        anchor: "the G10_26 family gives more than 600 new examples",
        statement: "the Delta-Y/Y-Delta family of G10_26 has more than 600 members",
        check: |ctx| {
            let g = ctx.g("G10_26")?;
            let loose = family_closure(&g, ClosureLimits::default())?;
            let strict = family_closure(
                &g,
                ClosureLimits {
                    collapse: CollapseRule::Skip,
                    ..ClosureLimits::default()
                },
            )?;
            outcome(
                loose.len() > 600 && strict.len() > 600,
                format!(
                    "{} members with collapsing Y-Delta moves simplified ({} collapse events), {} with them skipped",
                    loose.len(),
                    loose.collapses.len(),
                    strict.len()
                ),
            )
        },
    },
];

static CLAIMS: std::sync::LazyLock<Vec<Claim>> =
    std::sync::LazyLock::new(|| TABLE_CLAIMS.iter().chain(OTHER_CLAIMS).copied().collect());

pub fn all_claims() -> &'static [Claim] {
    &CLAIMS
}
