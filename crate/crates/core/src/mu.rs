//! Interval bounds on the Colin de Verdiere invariant.
//!
//! Every bound comes from a rule applied to a certificate that can be
//! re-checked on its own:
//!
//! * planarity: planar gives `mu <= 3`, a Kuratowski minor gives `mu >= 4`;
//! * linkless: Petersen-minor-free gives `mu <= 4`, a Petersen-family minor
//!   gives `mu >= 5`;
//! * apex: deleting `k` vertices leaves a planar graph, so `mu <= k + 3`;
//! * complete minor: a `K_n` minor gives `mu >= n - 1`;
//! * cone: a dominating vertex `v` gives `mu(G) = mu(G - v) + 1`;
//! * simple minor: one edge deletion or contraction is linklessly
//!   embeddable, so `mu <= 5`;
//! * Delta-Y: when `mu >= 4`, a Delta-Y move leaves `mu` unchanged;
//! * known minor: bounds carry across a validated minor relation to a graph
//!   whose bounds are already established.
//!
//! Graphs without edges get `mu = 0` on at most one vertex and `mu = 1`
//! otherwise. These values are a convention and are marked as such.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::minor::{find_minor, petersen_family, validate_minor_embedding, MinorEmbedding, NilCertificate, ObstructionVerdict};
use crate::moves::delta_y;
use crate::planarity::{apex_search, is_planar, ApexCertificate, Kuratowski, PlanarityVerdict, RotationSystem};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Rule {
    Convention,
    Planarity,
    Linkless,
    Apex,
    CompleteMinor,
    Cone,
    SimpleMinor,
    DeltaY,
    KnownMinor,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Rule::Convention => "convention",
            Rule::Planarity => "planarity",
            Rule::Linkless => "linkless",
            Rule::Apex => "apex",
            Rule::CompleteMinor => "complete-minor",
            Rule::Cone => "cone",
            Rule::SimpleMinor => "simple-minor",
            Rule::DeltaY => "delta-y",
            Rule::KnownMinor => "known-minor",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Bound {
    Lower(u32),
    Upper(u32),
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bound::Lower(n) => write!(f, "mu >= {n}"),
            Bound::Upper(n) => write!(f, "mu <= {n}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SimpleMinorOp {
    Delete(Vertex, Vertex),
    Contract(Vertex, Vertex),
}

impl SimpleMinorOp {
    pub fn apply(self, g: &Graph) -> Result<Graph> {
        match self {
            SimpleMinorOp::Delete(u, v) => g.delete_edge(u, v),
            SimpleMinorOp::Contract(u, v) => g.contract_edge(u, v),
        }
    }
}

impl fmt::Display for SimpleMinorOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SimpleMinorOp::Delete(u, v) => write!(f, "delete ({u},{v})"),
            SimpleMinorOp::Contract(u, v) => write!(f, "contract ({u},{v})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Evidence {
    Edgeless,
    Embedding(RotationSystem),
    Kuratowski { kind: Kuratowski, minor: MinorEmbedding },
    Nil(NilCertificate),
    PetersenMinor { obstruction: &'static str, minor: MinorEmbedding },
    Apex(ApexCertificate),
    CompleteMinor { n: usize, minor: MinorEmbedding },
    Cone { vertex: Vertex, inner: Box<MuBounds> },
    SimpleMinor { op: SimpleMinorOp, certificate: NilCertificate },
    DeltaY { source: Graph, triangle: [Vertex; 3], source_bounds: Box<MuBounds> },
    /// The graph is a minor of `host`.
    MinorOfKnown { host_name: String, host: Graph, host_bounds: Box<MuBounds>, minor: MinorEmbedding },
    /// `host` is a minor of the graph.
    ContainsKnown { host_name: String, host: Graph, host_bounds: Box<MuBounds>, minor: MinorEmbedding },
}

impl fmt::Display for Evidence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Evidence::Edgeless => f.write_str("no edges"),
            Evidence::Embedding(rot) => write!(f, "planar embedding with {} faces", rot.faces().len()),
            Evidence::Kuratowski { kind, minor } => write!(f, "{kind} minor {minor}"),
            Evidence::Nil(cert) => {
                let nodes: u64 = cert
                    .verdicts
                    .iter()
                    .map(|(_, v)| match v {
                        ObstructionVerdict::NoMinor { nodes } => *nodes,
                        ObstructionVerdict::Minor(_) => 0,
                    })
                    .sum();
                write!(f, "no Petersen-family minor ({nodes} search nodes)")
            }
            Evidence::PetersenMinor { obstruction, minor } => write!(f, "{obstruction} minor {minor}"),
            Evidence::Apex(cert) => write!(f, "deleting {} leaves a planar graph", cert.removed),
            Evidence::CompleteMinor { n, minor } => write!(f, "K{n} minor {minor}"),
            Evidence::Cone { vertex, inner } => write!(f, "vertex {vertex} dominates; without it {inner}"),
            Evidence::SimpleMinor { op, .. } => write!(f, "{op} gives a graph with no Petersen-family minor"),
            Evidence::DeltaY {
                triangle: [a, b, c],
                source_bounds,
                ..
            } => write!(f, "Delta-Y on ({a},{b},{c}) of a graph with {source_bounds}"),
            Evidence::MinorOfKnown { host_name, host_bounds, minor, .. } => {
                write!(f, "minor of {host_name} {host_bounds} via {minor}")
            }
            Evidence::ContainsKnown { host_name, host_bounds, minor, .. } => {
                write!(f, "contains {host_name} {host_bounds} via {minor}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Step {
    pub rule: Rule,
    pub bound: Bound,
    pub evidence: Evidence,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MuBounds {
    pub lo: u32,
    pub hi: u32,
    pub trace: Vec<Step>,
}

impl fmt::Display for MuBounds {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.lo, self.hi)
    }
}

/// Bounds already established for another graph, usable through minor
/// relations.
#[derive(Debug, Clone)]
pub struct KnownBounds {
    pub name: String,
    pub graph: Graph,
    pub bounds: MuBounds,
}

struct Acc {
    lo: u32,
    hi: u32,
    trace: Vec<Step>,
}

impl Acc {
    fn push(&mut self, rule: Rule, bound: Bound, evidence: Evidence) -> Result<()> {
        match bound {
            Bound::Lower(n) => self.lo = self.lo.max(n),
            Bound::Upper(n) => self.hi = self.hi.min(n),
        }
        self.trace.push(Step { rule, bound, evidence });
        if self.lo > self.hi {
            return Err(Error::Unsound { lo: self.lo, hi: self.hi });
        }
        Ok(())
    }

    fn closed(&self) -> bool {
        self.lo == self.hi
    }
}

pub fn mu_bounds(g: &Graph) -> Result<MuBounds> {
    mu_bounds_with_known(g, &[])
}

fn nil_or_witness(g: &Graph) -> std::result::Result<NilCertificate, (&'static str, MinorEmbedding)> {
    let mut verdicts = Vec::with_capacity(7);
    for ob in petersen_family() {
        let search = find_minor(g, &ob.graph, None).expect("unbudgeted");
        match search.embedding {
            Some(e) => return Err((ob.name, e)),
            None => verdicts.push((ob.name, ObstructionVerdict::NoMinor { nodes: search.nodes })),
        }
    }
    Ok(NilCertificate { verdicts })
}

/// Applies the rules cheapest first and stops as soon as the interval closes.
pub fn mu_bounds_with_known(g: &Graph, known: &[KnownBounds]) -> Result<MuBounds> {
    if g.size() == 0 {
        let value = if g.order() <= 1 { 0 } else { 1 };
        let trace = vec![
            Step {
                rule: Rule::Convention,
                bound: Bound::Lower(value),
                evidence: Evidence::Edgeless,
            },
            Step {
                rule: Rule::Convention,
                bound: Bound::Upper(value),
                evidence: Evidence::Edgeless,
            },
        ];
        return Ok(MuBounds {
            lo: value,
            hi: value,
            trace,
        });
    }
    let mut acc = Acc {
        lo: 0,
        hi: u32::MAX,
        trace: Vec::new(),
    };

    let dominating = g.vertices().find(|&v| g.degree(v) + 1 == g.order());
    if let Some(v) = dominating {
        let rest = g.remove_vertex(v)?;
        if rest.size() > 0 {
            let inner = Box::new(mu_bounds_with_known(&rest, known)?);
            let (lo, hi) = (inner.lo + 1, inner.hi.saturating_add(1));
            acc.push(Rule::Cone, Bound::Lower(lo), Evidence::Cone { vertex: v, inner: inner.clone() })?;
            acc.push(Rule::Cone, Bound::Upper(hi), Evidence::Cone { vertex: v, inner })?;
        }
    }

    if !acc.closed() {
        match is_planar(g) {
            PlanarityVerdict::Planar(rot) => acc.push(Rule::Planarity, Bound::Upper(3), Evidence::Embedding(rot))?,
            PlanarityVerdict::NonPlanar { kind, minor } => {
                acc.push(Rule::Planarity, Bound::Lower(4), Evidence::Kuratowski { kind, minor })?
            }
        }
    }

    if !acc.closed() && acc.hi > 4 {
        let k = if acc.hi == u32::MAX {
            g.order()
        } else {
            acc.hi as usize - 4
        };
        if let Some(cert) = apex_search(g, k).certificate {
            let bound = cert.removed.len() as u32 + 3;
            acc.push(Rule::Apex, Bound::Upper(bound), Evidence::Apex(cert))?;
        }
    }

    if !acc.closed() && acc.lo < 5 && acc.hi > 4 {
        match nil_or_witness(g) {
            Ok(cert) => acc.push(Rule::Linkless, Bound::Upper(4), Evidence::Nil(cert))?,
            Err((obstruction, minor)) => {
                acc.push(Rule::Linkless, Bound::Lower(5), Evidence::PetersenMinor { obstruction, minor })?
            }
        }
    }

    if !acc.closed() {
        let mut n = (acc.lo as usize + 2).max(2);
        while n <= g.order() && (n as u32 - 1) <= acc.hi {
            let Some(minor) = find_minor(g, &Graph::complete(n), None)?.embedding else {
                break;
            };
            acc.push(Rule::CompleteMinor, Bound::Lower(n as u32 - 1), Evidence::CompleteMinor { n, minor })?;
            n += 1;
            if acc.closed() {
                break;
            }
        }
    }

    if !acc.closed() && acc.hi > 5 {
        'edges: for (u, v) in g.edges() {
            for op in [SimpleMinorOp::Delete(u, v), SimpleMinorOp::Contract(u, v)] {
                if let Ok(certificate) = nil_or_witness(&op.apply(g)?) {
                    acc.push(Rule::SimpleMinor, Bound::Upper(5), Evidence::SimpleMinor { op, certificate })?;
                    break 'edges;
                }
            }
        }
    }

    for k in known {
        if acc.closed() {
            break;
        }
        if k.bounds.hi < acc.hi {
            if let Some(minor) = find_minor(&k.graph, g, None)?.embedding {
                acc.push(
                    Rule::KnownMinor,
                    Bound::Upper(k.bounds.hi),
                    Evidence::MinorOfKnown {
                        host_name: k.name.clone(),
                        host: k.graph.clone(),
                        host_bounds: Box::new(k.bounds.clone()),
                        minor,
                    },
                )?;
            }
        }
        if k.bounds.lo > acc.lo {
            if let Some(minor) = find_minor(g, &k.graph, None)?.embedding {
                acc.push(
                    Rule::KnownMinor,
                    Bound::Lower(k.bounds.lo),
                    Evidence::ContainsKnown {
                        host_name: k.name.clone(),
                        host: k.graph.clone(),
                        host_bounds: Box::new(k.bounds.clone()),
                        minor,
                    },
                )?;
            }
        }
    }

    Ok(MuBounds {
        lo: acc.lo,
        hi: acc.hi,
        trace: acc.trace,
    })
}

/// Bounds for `delta_y(source, triangle)` carried over from bounds on the
/// source. Requires the source to have `mu >= 4` already established.
pub fn delta_y_transfer(source: &Graph, source_bounds: &MuBounds, triangle: [Vertex; 3]) -> Result<Option<MuBounds>> {
    delta_y(source, triangle)?;
    if source_bounds.lo < 4 {
        return Ok(None);
    }
    let evidence = Evidence::DeltaY {
        source: source.clone(),
        triangle,
        source_bounds: Box::new(source_bounds.clone()),
    };
    Ok(Some(MuBounds {
        lo: source_bounds.lo,
        hi: source_bounds.hi,
        trace: vec![
            Step {
                rule: Rule::DeltaY,
                bound: Bound::Lower(source_bounds.lo),
                evidence: evidence.clone(),
            },
            Step {
                rule: Rule::DeltaY,
                bound: Bound::Upper(source_bounds.hi),
                evidence,
            },
        ],
    }))
}

fn step_valid(g: &Graph, step: &Step) -> bool {
    use Bound::*;
    match (&step.evidence, step.bound) {
        (Evidence::Edgeless, b) => {
            let value = if g.order() <= 1 { 0 } else { 1 };
            g.size() == 0 && (b == Lower(value) || b == Upper(value))
        }
        (Evidence::Embedding(rot), Upper(3)) => rot.validate(g),
        (Evidence::Kuratowski { kind, minor }, Lower(4)) => validate_minor_embedding(g, &kind.pattern(), minor),
        (Evidence::Nil(cert), Upper(4)) => cert.validate(g),
        (Evidence::PetersenMinor { obstruction, minor }, Lower(5)) => petersen_family()
            .iter()
            .find(|ob| ob.name == *obstruction)
            .is_some_and(|ob| validate_minor_embedding(g, &ob.graph, minor)),
        (Evidence::Apex(cert), Upper(n)) => n == cert.removed.len() as u32 + 3 && cert.validate(g),
        (Evidence::CompleteMinor { n, minor }, Lower(b)) => {
            b + 1 == *n as u32 && validate_minor_embedding(g, &Graph::complete(*n), minor)
        }
        (Evidence::Cone { vertex, inner }, b) => {
            let expected = match b {
                Lower(x) => x == inner.lo + 1,
                Upper(x) => x == inner.hi.saturating_add(1),
            };
            expected
                && g.contains_vertex(*vertex)
                && g.degree(*vertex) + 1 == g.order()
                && g.remove_vertex(*vertex).is_ok_and(|rest| rest.size() > 0 && revalidate(&rest, inner))
        }
        (Evidence::SimpleMinor { op, certificate }, Upper(5)) => {
            op.apply(g).is_ok_and(|minor| certificate.is_nil() && certificate.validate(&minor))
        }
        (
            Evidence::DeltaY {
                source,
                triangle,
                source_bounds,
            },
            b,
        ) => {
            let expected = match b {
                Lower(x) => x == source_bounds.lo,
                Upper(x) => x == source_bounds.hi,
            };
            expected
                && source_bounds.lo >= 4
                && delta_y(source, *triangle).is_ok_and(|image| image == *g)
                && revalidate(source, source_bounds)
        }
        (
            Evidence::MinorOfKnown {
                host,
                host_bounds,
                minor,
                ..
            },
            Upper(x),
        ) => x == host_bounds.hi && validate_minor_embedding(host, g, minor) && revalidate(host, host_bounds),
        (
            Evidence::ContainsKnown {
                host,
                host_bounds,
                minor,
                ..
            },
            Lower(x),
        ) => x == host_bounds.lo && validate_minor_embedding(g, host, minor) && revalidate(host, host_bounds),
        _ => false,
    }
}

/// Re-checks every step from its certificate alone and confirms that the
/// interval is exactly what the steps imply.
pub fn revalidate(g: &Graph, bounds: &MuBounds) -> bool {
    let lo = bounds
        .trace
        .iter()
        .filter_map(|s| match s.bound {
            Bound::Lower(n) => Some(n),
            _ => None,
        })
        .max()
        .unwrap_or(0);
    let hi = bounds
        .trace
        .iter()
        .filter_map(|s| match s.bound {
            Bound::Upper(n) => Some(n),
            _ => None,
        })
        .min()
        .unwrap_or(u32::MAX);
    lo == bounds.lo && hi == bounds.hi && lo <= hi && bounds.trace.iter().all(|s| step_valid(g, s))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn interval(g: &Graph) -> (u32, u32) {
        let b = mu_bounds(g).unwrap();
        assert!(revalidate(g, &b), "{b}");
        (b.lo, b.hi)
    }

    #[test]
    fn edgeless_convention() {
        assert_eq!(interval(&Graph::new()), (0, 0));
        assert_eq!(interval(&Graph::with_vertices([1]).unwrap()), (0, 0));
        assert_eq!(interval(&Graph::with_vertices([1, 2, 3]).unwrap()), (1, 1));
    }

    #[test]
    fn complete_graphs() {
        assert_eq!(interval(&Graph::complete(2)), (1, 3));
        assert_eq!(interval(&Graph::complete(4)), (3, 3));
        assert_eq!(interval(&Graph::complete(5)), (4, 4));
        assert_eq!(interval(&Graph::complete(6)), (5, 5));
    }

    #[test]
    fn paths_and_cycles_are_only_bracketed() {
        assert_eq!(interval(&Graph::path(4)), (1, 3));
        assert_eq!(interval(&Graph::cycle(5)), (2, 3));
    }

    #[test]
    fn revalidation_rejects_tampering() {
        let g = Graph::complete(5);
        let mut b = mu_bounds(&g).unwrap();
        assert!(revalidate(&g, &b));
        b.lo = 5;
        assert!(!revalidate(&g, &b));
        let b = mu_bounds(&g).unwrap();
        assert!(!revalidate(&Graph::complete(4), &b));
    }

    #[test]
    fn delta_y_transfer_needs_mu_at_least_four() {
        let k4 = Graph::complete(4);
        let b = mu_bounds(&k4).unwrap();
        assert_eq!(delta_y_transfer(&k4, &b, [1, 2, 3]).unwrap(), None);
        let k6 = Graph::complete(6);
        let b = mu_bounds(&k6).unwrap();
        let t = delta_y_transfer(&k6, &b, [1, 2, 3]).unwrap().unwrap();
        let image = delta_y(&k6, [1, 2, 3]).unwrap();
        assert!(revalidate(&image, &t));
        assert_eq!((t.lo, t.hi), (5, 5));
        assert!(!revalidate(&k6, &t));
    }
}
