//! Command-line front end: graph references, subcommands and exit codes.
//!
//! Exit codes: 0 when the command ran (and, for `verify-paper`, every claim
//! passed), 1 when some claim failed, 2 for usage and I/O errors, 3 when a
//! search budget ran out.

pub mod claims;

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::Path;

use clap::{Parser, Subcommand, ValueEnum};
use ikverify_core::catalog::Catalog;
use ikverify_core::io::{parse_edge_list, parse_graph6, write_edge_list, write_graph6};
use ikverify_core::minor::{certify_nil_with_budget, find_minor, ObstructionVerdict};
use ikverify_core::moves::{family_closure, ClosureLimits, CollapseRule};
use ikverify_core::mu::{mu_bounds, mu_bounds_with_known, Bound, KnownBounds};
use ikverify_core::planarity::{apex_search, is_planar, PlanarityVerdict};
use ikverify_core::{Error, Graph, MAX_VERTICES};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "ikverify", version, about = "Certify planarity, apex sets, minors, linkless embeddability and mu bounds")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run one certifying check on a graph.
    Check {
        #[command(subcommand)]
        check: Check,
    },
    /// Close a graph under Delta-Y and Y-Delta moves.
    Family {
        graph: String,
        #[arg(long, default_value_t = 100_000)]
        max_members: usize,
        #[arg(long, default_value_t = MAX_VERTICES)]
        max_order: usize,
        /// Treat Y-Delta moves that would create parallel edges as illegal.
        #[arg(long)]
        skip_collapses: bool,
        /// Write every member, sorted by canonical form, to this file.
        #[arg(long)]
        emit: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Graph6)]
        format: Format,
    },
    /// Bound the Colin de Verdiere invariant and print the justification.
    Mu {
        graph: String,
        /// Graph whose bounds may be used through minor relations.
        #[arg(long)]
        known: Vec<String>,
    },
    /// Inspect the built-in graphs.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Replay every catalog claim and report pass or fail per claim.
    VerifyPaper {
        /// Restrict to one claim group or claim id.
        #[arg(long)]
        only: Option<String>,
        /// Emit the report as JSON instead of text.
        #[arg(long)]
        json: bool,
        /// Replace a catalog entry, as NAME=GRAPHREF.
        #[arg(long = "override", value_name = "NAME=GRAPHREF")]
        overrides: Vec<String>,
        /// Node budget per minor search.
        #[arg(long)]
        budget: Option<u64>,
        /// Omit per-claim timings so reports can be diffed byte for byte.
        #[arg(long)]
        no_timings: bool,
    },
}

#[derive(Subcommand, Debug)]
enum Check {
    Planar {
        graph: String,
    },
    Apex {
        #[arg(long)]
        k: usize,
        graph: String,
    },
    Minor {
        #[arg(long)]
        pattern: String,
        graph: String,
        #[arg(long)]
        budget: Option<u64>,
    },
    Nil {
        graph: String,
        #[arg(long)]
        budget: Option<u64>,
    },
}

#[derive(Subcommand, Debug)]
enum CatalogAction {
    List,
    Show {
        name: String,
        #[arg(long, value_enum, default_value_t = Format::Edgelist)]
        format: Format,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Edgelist,
    Graph6,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Budget(u64),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::BudgetExceeded(n) => Failure::Budget(n),
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

/// Resolves `@catalog:NAME`, `@file:PATH`, `@graph6:STRING` or a bare
/// catalog name. Files ending in `.g6` or `.graph6` are read as graph6,
/// anything else as an edge list.
pub fn resolve_graph(reference: &str, catalog: &Catalog) -> Result<Graph, String> {
    if let Some(name) = reference.strip_prefix("@catalog:") {
        return catalog.graph(name).map_err(|e| e.to_string());
    }
    if let Some(path) = reference.strip_prefix("@file:") {
        let text = fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?;
        let ext = Path::new(path).extension().and_then(|e| e.to_str()).unwrap_or("");
        return if ext == "g6" || ext == "graph6" {
            parse_graph6(&text).map_err(|e| format!("{path}: {e}"))
        } else {
            parse_edge_list(&text)
                .map(|p| p.graph)
                .map_err(|e| format!("{path}: {e}"))
        };
    }
    if let Some(s) = reference.strip_prefix("@graph6:") {
        return parse_graph6(s).map_err(|e| e.to_string());
    }
    if reference.starts_with('@') {
        return Err(format!("unknown graph reference {reference:?}"));
    }
    catalog.graph(reference).map_err(|e| e.to_string())
}

fn graph(reference: &str, catalog: &Catalog) -> Result<Graph, Failure> {
    resolve_graph(reference, catalog).map_err(Failure::Usage)
}

/// Parses arguments, runs the command and returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{text}");
                EXIT_OK
            } else {
                let _ = write!(err, "{text}");
                EXIT_USAGE
            };
        }
    };
    match execute(cli.command, out, err) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Budget(n)) => {
            let _ = writeln!(err, "error: search budget of {n} nodes exhausted");
            EXIT_BUDGET
        }
    }
}

fn execute(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Failure> {
    let catalog = Catalog::builtin();
    match command {
        Command::Check { check } => run_check(check, catalog, out),
        Command::Family {
            graph: reference,
            max_members,
            max_order,
            skip_collapses,
            emit,
            format,
        } => {
            let g = graph(&reference, catalog)?;
            let limits = ClosureLimits {
                max_members,
                max_order,
                collapse: if skip_collapses {
                    CollapseRule::Skip
                } else {
                    CollapseRule::Simplify
                },
            };
            writeln!(err, "closing the family of {reference} ({} vertices, {} edges)", g.order(), g.size())?;
            let closure = family_closure(&g, limits)?;
            writeln!(err, "done: {} members", closure.len())?;
            writeln!(out, "members: {}", closure.len())?;
            writeln!(out, "collapse events: {}", closure.collapses.len())?;
            for ((order, size), count) in &closure.stats {
                writeln!(out, "  order {order} size {size}: {count}")?;
            }
            if let Some(path) = emit {
                let mut text = String::new();
                for m in &closure.members {
                    let g = m.form.graph();
                    match format {
                        Format::Graph6 => {
                            text.push_str(&write_graph6(&g));
                            text.push('\n');
                        }
                        Format::Edgelist => {
                            text.push_str(&write_edge_list(&g));
                            text.push('\n');
                        }
                    }
                }
                fs::write(&path, text)?;
                writeln!(out, "wrote {path}")?;
            }
            Ok(EXIT_OK)
        }
        Command::Mu { graph: reference, known } => {
            let g = graph(&reference, catalog)?;
            let mut context = Vec::new();
            for k in &known {
                let kg = graph(k, catalog)?;
                let bounds = mu_bounds(&kg)?;
                context.push(KnownBounds {
                    name: k.trim_start_matches("@catalog:").to_string(),
                    graph: kg,
                    bounds,
                });
            }
            let b = mu_bounds_with_known(&g, &context)?;
            writeln!(out, "mu in {b}")?;
            for step in &b.trace {
                let side = match step.bound {
                    Bound::Lower(n) => format!("lower {n}"),
                    Bound::Upper(n) => format!("upper {n}"),
                };
                writeln!(out, "  {side:<8} {:<15} {}", step.rule.to_string(), step.evidence)?;
            }
            Ok(EXIT_OK)
        }
        Command::Catalog { action } => match action {
            CatalogAction::List => {
                for e in catalog.entries() {
                    writeln!(
                        out,
                        "{:<11} {:>2} {:>3}  {:<12} {}",
                        e.name,
                        e.graph.order(),
                        e.graph.size(),
                        e.provenance.to_string(),
                        e.description
                    )?;
                }
                Ok(EXIT_OK)
            }
            CatalogAction::Show { name, format } => {
                let g = catalog.graph(&name)?;
                match format {
                    Format::Edgelist => write!(out, "{}", write_edge_list(&g))?,
                    Format::Graph6 => writeln!(out, "{}", write_graph6(&g))?,
                }
                Ok(EXIT_OK)
            }
        },
        Command::VerifyPaper {
            only,
            json,
            overrides,
            budget,
            no_timings,
        } => {
            let mut cat = catalog.clone();
            for o in &overrides {
                let (name, reference) = o
                    .split_once('=')
                    .ok_or_else(|| Failure::Usage(format!("override {o:?} is not NAME=GRAPHREF")))?;
                let g = graph(reference, catalog)?;
                cat = cat.with_override(name, g)?;
            }
            if let Some(o) = &only {
                if claims::select(Some(o)).is_empty() {
                    return Err(Failure::Usage(format!("no claim or group named {o:?}")));
                }
            }
            let mut ctx = claims::Ctx::new(cat);
            ctx.budget = budget;
            ctx.progress = Some(Box::new(|i, n, id| eprintln!("[{i}/{n}] {id}")));
            let mut report = claims::verify_paper(&ctx, only.as_deref());
            if no_timings {
                for c in &mut report.claims {
                    c.wall_ms = 0;
                }
            }
            if json {
                writeln!(out, "{}", serde_json::to_string_pretty(&report).expect("plain data"))?;
            } else {
                write!(out, "{}", report.to_text())?;
            }
            Ok(if report.budget_exhausted {
                EXIT_BUDGET
            } else if report.overall == claims::Verdict::Pass {
                EXIT_OK
            } else {
                EXIT_FAILED
            })
        }
    }
}

fn run_check(check: Check, catalog: &Catalog, out: &mut dyn Write) -> Result<i32, Failure> {
    match check {
        Check::Planar { graph: reference } => {
            let g = graph(&reference, catalog)?;
            match is_planar(&g) {
                PlanarityVerdict::Planar(rot) => {
                    writeln!(out, "planar")?;
                    for (v, ring) in &rot.rotation {
                        let ring: Vec<String> = ring.iter().map(|x| x.to_string()).collect();
                        writeln!(out, "  {v}: {}", ring.join(" "))?;
                    }
                }
                PlanarityVerdict::NonPlanar { kind, minor } => {
                    writeln!(out, "non-planar")?;
                    writeln!(out, "  {kind} minor {minor}")?;
                }
            }
        }
        Check::Apex { k, graph: reference } => {
            let g = graph(&reference, catalog)?;
            let search = apex_search(&g, k);
            match &search.certificate {
                Some(c) => writeln!(
                    out,
                    "{k}-apex: removing {} leaves a planar graph ({} subsets covered)",
                    c.removed, search.subsets_covered
                )?,
                None => writeln!(
                    out,
                    "not {k}-apex ({} subsets covered, {} planarity tests)",
                    search.subsets_covered, search.planarity_tests
                )?,
            }
        }
        Check::Minor {
            pattern,
            graph: reference,
            budget,
        } => {
            let g = graph(&reference, catalog)?;
            let p = graph(&pattern, catalog)?;
            let search = find_minor(&g, &p, budget)?;
            match search.embedding {
                Some(e) => {
                    writeln!(out, "minor found")?;
                    for (v, set) in &e.branch_sets {
                        writeln!(out, "  {v} -> {set}")?;
                    }
                }
                None => writeln!(out, "no minor ({} search nodes)", search.nodes)?,
            }
        }
        Check::Nil { graph: reference, budget } => {
            let g = graph(&reference, catalog)?;
            let cert = certify_nil_with_budget(&g, budget)?;
            writeln!(out, "{}", if cert.is_nil() { "nIL" } else { "not nIL" })?;
            for (name, v) in &cert.verdicts {
                match v {
                    ObstructionVerdict::NoMinor { nodes } => writeln!(out, "  {name}: no minor ({nodes} search nodes)")?,
                    ObstructionVerdict::Minor(e) => writeln!(out, "  {name}: minor {e}")?,
                }
            }
        }
    }
    Ok(EXIT_OK)
}
