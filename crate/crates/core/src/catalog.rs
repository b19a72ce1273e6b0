//! Named graphs, clique sums and cones.
//!
//! Three graphs are stored as edge lists; everything else is rebuilt from
//! them or from a short construction whenever the catalog is loaded, and
//! every entry is compared with a stored canonical graph6 checksum.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use crate::canon::canonical_form;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::io::write_graph6;
use crate::minor::{certify_nil, petersen_family};

pub const G11_35_EDGES: [(Vertex, Vertex); 35] = [
    (1, 2), (1, 3), (1, 4), (1, 5), (1, 8), (1, 9), (2, 3), (2, 4), (2, 8), (3, 4), (3, 5),
    (3, 6), (3, 7), (3, 8), (3, 10), (3, 11), (4, 5), (4, 6), (4, 8), (4, 9), (4, 10), (5, 6),
    (5, 7), (5, 9), (5, 10), (5, 11), (6, 7), (6, 8), (6, 9), (6, 10), (6, 11), (7, 11), (8, 9),
    (10, 11), (2, 11),
];

pub const G10_30_EDGES: [(Vertex, Vertex); 30] = [
    (1, 5), (1, 7), (1, 8), (1, 9), (1, 10), (2, 3), (2, 4), (2, 5), (2, 6), (2, 7), (2, 10),
    (3, 4), (3, 6), (3, 8), (3, 9), (3, 10), (4, 6), (4, 8), (4, 9), (5, 6), (5, 7), (5, 8),
    (5, 10), (6, 7), (6, 8), (6, 9), (7, 9), (7, 10), (8, 10), (9, 10),
];

pub const G10_26_EDGES: [(Vertex, Vertex); 26] = [
    (1, 2), (1, 3), (1, 4), (1, 5), (1, 8), (1, 9), (2, 4), (2, 7), (2, 8), (2, 10), (3, 4),
    (3, 7), (3, 8), (3, 10), (4, 5), (4, 6), (4, 8), (4, 9), (5, 7), (5, 9), (5, 10), (6, 7),
    (6, 8), (6, 9), (6, 10), (8, 9),
];

/// The clique along which `M` splits into `H` and `K`.
pub const M_SEPARATOR: [Vertex; 4] = [3, 4, 5, 6];

/// Canonical graph6 of every entry, in listing order.
const CHECKSUMS: [(&str, &str); 24] = [
    ("G11_35", "J?K}bzfy}~_"),
    ("G10_30", "IKd~V`~no"),
    ("G10_26", "IErf@s|Nw"),
    ("M", "J?UdJt|l}~_"),
    ("H", "GJn^^{"),
    ("K", "FL~~w"),
    ("Hprime", "FJn^W"),
    ("Kprime", "EL~w"),
    ("G9_28", "HLvnf~}"),
    ("K5", "D~{"),
    ("K6", "E~~w"),
    ("K7", "F~~~w"),
    ("K33", "EFz_"),
    ("K331", "FFzfw"),
    ("K3311", "GFzf~{"),
    ("K44e", "GIQ|to"),
    ("PETERSEN", "I?LRCecq?"),
    ("PETERSEN_1", "E~~w"),
    ("PETERSEN_2", "Fs\\zw"),
    ("PETERSEN_3", "FFzfw"),
    ("PETERSEN_4", "GYQ[p{"),
    ("PETERSEN_5", "GIQ|to"),
    ("PETERSEN_6", "HBj@IUR"),
    ("PETERSEN_7", "I?LRCecq?"),
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    /// Stored edge list.
    EdgeList,
    /// Built by a short construction.
    Construction,
    /// One side of a clique-sum split.
    Split,
    /// Replaced by the caller.
    Override,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Provenance::EdgeList => "edge-list",
            Provenance::Construction => "construction",
            Provenance::Split => "split",
            Provenance::Override => "override",
        })
    }
}

#[derive(Debug, Clone)]
pub struct NamedGraph {
    pub name: &'static str,
    pub graph: Graph,
    pub provenance: Provenance,
    pub description: &'static str,
}

#[derive(Debug, Clone)]
pub struct Catalog {
    entries: Vec<NamedGraph>,
}

fn entry(name: &'static str, graph: Graph, provenance: Provenance, description: &'static str) -> NamedGraph {
    NamedGraph {
        name,
        graph,
        provenance,
        description,
    }
}

/// Builds every entry from its definition, without checksum comparison.
pub fn rebuild() -> Result<Vec<NamedGraph>> {
    use Provenance::*;
    let g11 = Graph::from_edges(G11_35_EDGES)?;
    let g10_30 = Graph::from_edges(G10_30_EDGES)?;
    let g10_26 = Graph::from_edges(G10_26_EDGES)?;
    let m = g11.delete_edge(2, 11)?;
    let separator: VertexSet = M_SEPARATOR.into_iter().collect();
    let (h, k) = split_clique_sum(&m, separator)?;
    let rim = Graph::cycle(7).complement();
    let g9 = cone(&cone(&rim)?)?.delete_edge(8, 9)?;
    let k331 = Graph::complete_multipartite(&[3, 3, 1]);

    let mut out = vec![
        entry("G11_35", g11, EdgeList, "11 vertices, 35 edges"),
        entry("G10_30", g10_30, EdgeList, "10 vertices, 30 edges"),
        entry("G10_26", g10_26, EdgeList, "10 vertices, 26 edges"),
        entry("M", m, Construction, "G11_35 minus the edge (2,11)"),
        entry("Hprime", h.remove_vertex(4)?, Split, "H minus vertex 4"),
        entry("Kprime", k.remove_vertex(5)?, Split, "K minus vertex 5"),
        entry("H", h, Split, "side of M over {3,4,5,6} containing vertex 1"),
        entry("K", k, Split, "side of M over {3,4,5,6} containing vertex 7"),
        entry("G9_28", g9, Construction, "two nonadjacent cones (8 and 9) over the complement of the cycle 1..7"),
        entry("K5", Graph::complete(5), Construction, "complete graph"),
        entry("K6", Graph::complete(6), Construction, "complete graph"),
        entry("K7", Graph::complete(7), Construction, "complete graph"),
        entry("K33", Graph::complete_multipartite(&[3, 3]), Construction, "complete bipartite graph"),
        entry("K3311", cone(&k331)?, Construction, "cone over K3,3,1"),
        entry("K331", k331, Construction, "complete tripartite graph"),
        entry(
            "K44e",
            Graph::complete_multipartite(&[4, 4]).delete_edge(1, 5)?,
            Construction,
            "K4,4 minus the edge (1,5)",
        ),
        entry("PETERSEN", petersen_graph(), Construction, "outer 5-cycle, inner pentagram, spokes i -> i+5"),
    ];
    const FAMILY: [&str; 7] = [
        "PETERSEN_1",
        "PETERSEN_2",
        "PETERSEN_3",
        "PETERSEN_4",
        "PETERSEN_5",
        "PETERSEN_6",
        "PETERSEN_7",
    ];
    for (name, ob) in FAMILY.into_iter().zip(petersen_family()) {
        out.push(entry(name, ob.graph.clone(), Construction, ob.name));
    }
    let order: Vec<&str> = CHECKSUMS.iter().map(|(n, _)| *n).collect();
    out.sort_by_key(|e| order.iter().position(|n| *n == e.name));
    Ok(out)
}

pub fn petersen_graph() -> Graph {
    let mut g = Graph::new();
    for i in 0..5 {
        g.add_edge(i + 1, (i + 1) % 5 + 1).expect("outer cycle");
        g.add_edge(i + 6, (i + 2) % 5 + 6).expect("pentagram");
        g.add_edge(i + 1, i + 6).expect("spoke");
    }
    g
}

pub fn checksum(g: &Graph) -> String {
    write_graph6(&canonical_form(g).graph())
}

impl Catalog {
    /// Rebuilds all entries and checks them against the stored checksums.
    pub fn load() -> Result<Catalog> {
        let entries = rebuild()?;
        for (e, (name, sum)) in entries.iter().zip(CHECKSUMS) {
            let got = checksum(&e.graph);
            if e.name != name || got != sum {
                return Err(Error::Checksum {
                    name: e.name.to_string(),
                    detail: format!("expected {sum}, computed {got}"),
                });
            }
        }
        Ok(Catalog { entries })
    }

    /// Shared, lazily loaded copy of the shipped catalog.
    pub fn builtin() -> &'static Catalog {
        static CATALOG: OnceLock<Catalog> = OnceLock::new();
        CATALOG.get_or_init(|| Catalog::load().expect("shipped catalog passes its checksums"))
    }

    /// Replaces one entry; other entries keep their shipped definitions.
    pub fn with_override(&self, name: &str, graph: Graph) -> Result<Catalog> {
        let mut entries = self.entries.clone();
        let e = entries
            .iter_mut()
            .find(|e| e.name == name)
            .ok_or_else(|| Error::UnknownName(name.to_string()))?;
        e.graph = graph;
        e.provenance = Provenance::Override;
        Ok(Catalog { entries })
    }

    pub fn entries(&self) -> &[NamedGraph] {
        &self.entries
    }

    pub fn get(&self, name: &str) -> Result<&NamedGraph> {
        self.entries
            .iter()
            .find(|e| e.name == name)
            .ok_or_else(|| Error::UnknownName(name.to_string()))
    }

    pub fn graph(&self, name: &str) -> Result<Graph> {
        Ok(self.get(name)?.graph.clone())
    }
}

fn is_clique(g: &Graph, set: VertexSet) -> bool {
    set.iter().all(|v| set.difference([v].into_iter().collect()).is_subset(g.neighbors(v)))
}

/// Union of two graphs glued along a clique they both contain.
pub fn clique_sum(g1: &Graph, g2: &Graph, shared: VertexSet) -> Result<Graph> {
    let common = g1.vertex_set().intersection(g2.vertex_set());
    if common != shared {
        return Err(Error::LabelCollision(format!(
            "common vertices {common}, declared clique {shared}"
        )));
    }
    if !is_clique(g1, shared) {
        return Err(Error::NotAClique("the first summand"));
    }
    if !is_clique(g2, shared) {
        return Err(Error::NotAClique("the second summand"));
    }
    let mut g = g1.clone();
    for v in g2.vertices() {
        g.add_vertex(v)?;
    }
    for (u, v) in g2.edges() {
        g.add_edge(u, v)?;
    }
    Ok(g)
}

/// Inverse of [`clique_sum`] over a separating clique with exactly two
/// sides. The side holding the smaller non-shared label comes first.
pub fn split_clique_sum(g: &Graph, shared: VertexSet) -> Result<(Graph, Graph)> {
    if !is_clique(g, shared) || !shared.is_subset(g.vertex_set()) {
        return Err(Error::NotAClique("the graph being split"));
    }
    let rest = g.remove_vertices(shared)?;
    let comps = rest.components();
    if comps.len() != 2 {
        return Err(Error::NotTwoComponents(comps.len()));
    }
    let a = g.induced_subgraph(comps[0].union(shared))?;
    let b = g.induced_subgraph(comps[1].union(shared))?;
    Ok((a, b))
}

/// Adds a vertex with the least unused label, joined to every vertex.
pub fn cone(g: &Graph) -> Result<Graph> {
    let apex = g.next_free_label()?;
    let mut h = g.clone();
    h.add_vertex(apex)?;
    for v in g.vertices() {
        h.add_edge(apex, v)?;
    }
    Ok(h)
}

/// Outcome of checking the conditions under which a clique sum of two
/// linklessly embeddable graphs over `K4` stays linklessly embeddable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueSumHypotheses {
    pub shared_is_k4: bool,
    pub first_nil: bool,
    pub second_nil: bool,
    pub first_rest_connected: bool,
    pub second_rest_connected: bool,
}

impl CliqueSumHypotheses {
    pub fn hold(&self) -> bool {
        self.shared_is_k4
            && self.first_nil
            && self.second_nil
            && self.first_rest_connected
            && self.second_rest_connected
    }
}

pub fn nil_clique_sum_hypotheses(g1: &Graph, g2: &Graph, shared: VertexSet) -> Result<CliqueSumHypotheses> {
    clique_sum(g1, g2, shared)?;
    let connected = |g: &Graph| {
        let rest = g.remove_vertices(shared).expect("shared is a subset");
        rest.order() > 0 && rest.is_connected()
    };
    Ok(CliqueSumHypotheses {
        shared_is_k4: shared.len() == 4,
        first_nil: certify_nil(g1).is_nil(),
        second_nil: certify_nil(g2).is_nil(),
        first_rest_connected: connected(g1),
        second_rest_connected: connected(g2),
    })
}

pub fn check_nil_clique_sum_hypotheses(g1: &Graph, g2: &Graph, shared: VertexSet) -> Result<bool> {
    Ok(nil_clique_sum_hypotheses(g1, g2, shared)?.hold())
}

/// Entry names with their checksums, for listings.
pub fn checksums() -> BTreeMap<&'static str, &'static str> {
    CHECKSUMS.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::is_isomorphic;

    fn set(v: &[Vertex]) -> VertexSet {
        v.iter().copied().collect()
    }

    #[test]
    fn catalog_loads_and_matches_checksums() {
        let c = Catalog::builtin();
        assert_eq!(c.entries().len(), CHECKSUMS.len());
        assert!(matches!(c.get("nope"), Err(Error::UnknownName(_))));
    }

    #[test]
    fn triangles_sharing_an_edge() {
        let t1 = Graph::complete(3);
        let t2 = Graph::from_edges([(2, 3), (3, 4), (2, 4)]).unwrap();
        let s = clique_sum(&t1, &t2, set(&[2, 3])).unwrap();
        assert_eq!((s.order(), s.size()), (4, 5));
        let (a, b) = split_clique_sum(&s, set(&[2, 3])).unwrap();
        assert_eq!((a, b), (t1.clone(), t2.clone()));
        assert!(matches!(clique_sum(&t1, &t2, set(&[2])), Err(Error::LabelCollision(_))));
        let p = Graph::from_edges([(1, 2), (1, 3)]).unwrap();
        assert!(matches!(clique_sum(&p, &t2, set(&[2, 3])), Err(Error::NotAClique(_))));
    }

    #[test]
    fn split_needs_a_separator() {
        assert_eq!(
            split_clique_sum(&Graph::complete(5), set(&[1, 2])),
            Err(Error::NotTwoComponents(1))
        );
    }

    #[test]
    fn cones() {
        assert_eq!(cone(&Graph::with_vertices([1]).unwrap()).unwrap(), Graph::complete(2));
        let k3311 = cone(&Graph::complete_multipartite(&[3, 3, 1])).unwrap();
        assert!(is_isomorphic(&k3311, &Graph::complete_multipartite(&[3, 3, 1, 1])).is_some());
        assert!(cone(&Graph::complete(64)).is_err());
    }

    #[test]
    fn complete_summands_fail_hypotheses() {
        let a = Graph::complete(6);
        let b = Graph::complete(6).relabel(|v| if v <= 4 { v } else { v + 2 }).unwrap();
        assert!(!check_nil_clique_sum_hypotheses(&a, &b, set(&[1, 2, 3, 4])).unwrap());
    }
}
