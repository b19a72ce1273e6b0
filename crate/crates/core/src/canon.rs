//! Canonical labeling, isomorphism witnesses and automorphism orbits.
//!
//! The search is the usual individualization-refinement tree: refine an
//! ordered partition to an equitable one, individualize each vertex of the
//! first non-trivial cell in turn and recurse. Each discrete leaf orders the
//! vertices; the leaf whose relabeled adjacency matrix is least is canonical.
//! Leaves whose matrices coincide give automorphisms, which prune siblings
//! in the same orbit of the current point stabilizer. The generators found
//! this way generate the full automorphism group.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::hash::{Hash, Hasher};

use crate::graph::{bit_indices, Graph, Vertex};

/// Canonical representative of an isomorphism class.
///
/// Equality, ordering and hashing only look at `order` and `edges`; the
/// `relabeling` certificate differs between isomorphic inputs.
#[derive(Debug, Clone)]
pub struct CanonicalForm {
    pub order: usize,
    /// Edge list on labels `1..=order`, each `(u, v)` with `u < v`, sorted.
    pub edges: Vec<(Vertex, Vertex)>,
    /// Input label to canonical label.
    pub relabeling: BTreeMap<Vertex, Vertex>,
}

impl CanonicalForm {
    pub fn graph(&self) -> Graph {
        let mut g = Graph::with_vertices(1..=self.order as Vertex).expect("order <= 64");
        for &(u, v) in &self.edges {
            g.add_edge(u, v).expect("canonical edges are simple");
        }
        g
    }

    /// Checks that relabeling `g` reproduces exactly the canonical edge list.
    pub fn certifies(&self, g: &Graph) -> bool {
        if g.order() != self.order || self.relabeling.len() != g.order() {
            return false;
        }
        if !g.vertices().all(|v| self.relabeling.contains_key(&v)) {
            return false;
        }
        let mut image: Vec<(Vertex, Vertex)> = g
            .edges()
            .map(|(u, v)| {
                let (a, b) = (self.relabeling[&u], self.relabeling[&v]);
                (a.min(b), a.max(b))
            })
            .collect();
        image.sort_unstable();
        image == self.edges
    }
}

impl PartialEq for CanonicalForm {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.edges == other.edges
    }
}

impl Eq for CanonicalForm {}

impl Hash for CanonicalForm {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.order.hash(state);
        self.edges.hash(state);
    }
}

impl PartialOrd for CanonicalForm {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for CanonicalForm {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.order, self.edges.len(), &self.edges).cmp(&(other.order, other.edges.len(), &other.edges))
    }
}

/// Vertex and edge orbits under the full automorphism group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitPartition {
    /// Sorted orbits, ordered by least member.
    pub vertex: Vec<Vec<Vertex>>,
    pub edge: Vec<Vec<(Vertex, Vertex)>>,
    /// Automorphism generators as label maps.
    pub generators: Vec<BTreeMap<Vertex, Vertex>>,
}

/// Repeatedly splits cells by neighbour counts into each cell until stable.
/// Only cell positions and counts are consulted, so the result is
/// equivariant under relabeling.
fn refine(adj: &[u64], cells: &mut Vec<u64>) {
    'again: loop {
        for s in 0..cells.len() {
            let splitter = cells[s];
            for c in 0..cells.len() {
                let cell = cells[c];
                if cell.count_ones() == 1 {
                    continue;
                }
                let mut groups: BTreeMap<u32, u64> = BTreeMap::new();
                for v in bit_indices(cell) {
                    *groups.entry((adj[v] & splitter).count_ones()).or_default() |= 1 << v;
                }
                if groups.len() > 1 {
                    cells.splice(c..c + 1, groups.into_values());
                    continue 'again;
                }
            }
        }
        return;
    }
}

struct Leaf {
    seq: Vec<usize>,
    order: Vec<usize>,
    cert: Vec<u64>,
}

struct Search<'a> {
    adj: &'a [u64],
    first: Option<Leaf>,
    best: Option<Leaf>,
    /// Automorphisms as position maps `v -> gamma(v)`.
    generators: Vec<Vec<usize>>,
}

fn certificate(adj: &[u64], order: &[usize]) -> Vec<u64> {
    let mut pos = vec![0usize; order.len()];
    for (p, &v) in order.iter().enumerate() {
        pos[v] = p;
    }
    order
        .iter()
        .map(|&v| bit_indices(adj[v]).fold(0u64, |m, w| m | 1 << pos[w]))
        .collect()
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

fn union(parent: &mut [usize], a: usize, b: usize) {
    let (ra, rb) = (find(parent, a), find(parent, b));
    if ra != rb {
        let (lo, hi) = (ra.min(rb), ra.max(rb));
        parent[hi] = lo;
    }
}

impl<'a> Search<'a> {
    fn automorphism(from: &[usize], to: &[usize]) -> Vec<usize> {
        let mut gamma = vec![0; from.len()];
        for (&a, &b) in from.iter().zip(to) {
            gamma[a] = b;
        }
        gamma
    }

    fn record(&mut self, gamma: Vec<usize>) {
        if gamma.iter().enumerate().any(|(i, &j)| i != j) && !self.generators.contains(&gamma) {
            self.generators.push(gamma);
        }
    }

    /// Returns the depth to unwind to when an automorphism to the first leaf
    /// shows the current subtree is equivalent to an explored one.
    fn visit(&mut self, mut cells: Vec<u64>, seq: &mut Vec<usize>) -> Option<usize> {
        refine(self.adj, &mut cells);
        let Some(target) = cells.iter().position(|c| c.count_ones() > 1) else {
            let order: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
            return self.leaf(order, seq);
        };
        let depth = seq.len();
        let mut explored: Vec<usize> = Vec::new();
        for w in bit_indices(cells[target]) {
            if !explored.is_empty() && self.equivalent_to_explored(seq, &explored, w) {
                continue;
            }
            let mut child = cells.clone();
            child.splice(target..target + 1, [1u64 << w, cells[target] & !(1u64 << w)]);
            seq.push(w);
            let unwind = self.visit(child, seq);
            seq.pop();
            explored.push(w);
            if let Some(level) = unwind {
                if level < depth {
                    return Some(level);
                }
            }
        }
        None
    }

    fn equivalent_to_explored(&self, seq: &[usize], explored: &[usize], w: usize) -> bool {
        let n = self.adj.len();
        let mut parent: Vec<usize> = (0..n).collect();
        for gamma in &self.generators {
            if seq.iter().all(|&s| gamma[s] == s) {
                for (i, &j) in gamma.iter().enumerate() {
                    union(&mut parent, i, j);
                }
            }
        }
        let rw = find(&mut parent, w);
        explored.iter().any(|&e| find(&mut parent, e) == rw)
    }

    fn leaf(&mut self, order: Vec<usize>, seq: &[usize]) -> Option<usize> {
        let cert = certificate(self.adj, &order);
        let Some(first) = &self.first else {
            let leaf = Leaf {
                seq: seq.to_vec(),
                order,
                cert,
            };
            self.best = Some(Leaf {
                seq: leaf.seq.clone(),
                order: leaf.order.clone(),
                cert: leaf.cert.clone(),
            });
            self.first = Some(leaf);
            return None;
        };
        if cert == first.cert {
            let gamma = Self::automorphism(&first.order, &order);
            let common = first.seq.iter().zip(seq).take_while(|(a, b)| a == b).count();
            self.record(gamma);
            return Some(common);
        }
        let best = self.best.as_ref().expect("set with first");
        match cert.cmp(&best.cert) {
            Ordering::Equal => {
                let gamma = Self::automorphism(&best.order, &order);
                self.record(gamma);
            }
            Ordering::Less => {
                self.best = Some(Leaf {
                    seq: seq.to_vec(),
                    order,
                    cert,
                });
            }
            Ordering::Greater => {}
        }
        None
    }
}

struct SearchResult {
    labels: Vec<Vertex>,
    /// Canonical position to dense index.
    order: Vec<usize>,
    cert: Vec<u64>,
    generators: Vec<Vec<usize>>,
}

fn run_search(g: &Graph) -> SearchResult {
    let (labels, adj) = g.dense();
    let n = labels.len();
    if n == 0 {
        return SearchResult {
            labels,
            order: Vec::new(),
            cert: Vec::new(),
            generators: Vec::new(),
        };
    }
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut search = Search {
        adj: &adj,
        first: None,
        best: None,
        generators: Vec::new(),
    };
    search.visit(vec![all], &mut Vec::new());
    let best = search.best.take().expect("nonempty graph has a leaf");
    SearchResult {
        labels,
        order: best.order,
        cert: best.cert,
        generators: search.generators,
    }
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let result = run_search(g);
    let n = result.labels.len();
    let mut relabeling = BTreeMap::new();
    for (p, &v) in result.order.iter().enumerate() {
        relabeling.insert(result.labels[v], p as Vertex + 1);
    }
    let mut edges = Vec::new();
    for (i, &row) in result.cert.iter().enumerate() {
        for j in bit_indices(row) {
            if i < j {
                edges.push((i as Vertex + 1, j as Vertex + 1));
            }
        }
    }
    CanonicalForm {
        order: n,
        edges,
        relabeling,
    }
}

/// Label map `g1 -> g2` when the graphs are isomorphic.
pub fn is_isomorphic(g1: &Graph, g2: &Graph) -> Option<BTreeMap<Vertex, Vertex>> {
    if g1.order() != g2.order() || g1.size() != g2.size() {
        return None;
    }
    let c1 = canonical_form(g1);
    let c2 = canonical_form(g2);
    if c1 != c2 {
        return None;
    }
    let inverse: BTreeMap<Vertex, Vertex> = c2.relabeling.iter().map(|(&a, &b)| (b, a)).collect();
    let map: BTreeMap<Vertex, Vertex> = c1
        .relabeling
        .iter()
        .map(|(&v, c)| (v, inverse[c]))
        .collect();
    debug_assert!(validate_isomorphism(g1, g2, &map));
    Some(map)
}

/// Edge-by-edge check that `map` is a bijection `V(g1) -> V(g2)` preserving
/// adjacency and non-adjacency.
pub fn validate_isomorphism(g1: &Graph, g2: &Graph, map: &BTreeMap<Vertex, Vertex>) -> bool {
    if g1.order() != g2.order() || g1.size() != g2.size() || map.len() != g1.order() {
        return false;
    }
    if !g1.vertices().all(|v| map.get(&v).is_some_and(|&w| g2.contains_vertex(w))) {
        return false;
    }
    let mut image: Vec<Vertex> = map.values().copied().collect();
    image.sort_unstable();
    image.dedup();
    if image.len() != map.len() {
        return false;
    }
    g1.edges().all(|(u, v)| g2.has_edge(map[&u], map[&v]))
}

pub fn orbits(g: &Graph) -> OrbitPartition {
    let result = run_search(g);
    let labels = &result.labels;
    let n = labels.len();
    let mut parent: Vec<usize> = (0..n).collect();
    for gamma in &result.generators {
        for (i, &j) in gamma.iter().enumerate() {
            union(&mut parent, i, j);
        }
    }
    let mut vertex_orbits: BTreeMap<usize, Vec<Vertex>> = BTreeMap::new();
    for i in 0..n {
        let r = find(&mut parent, i);
        vertex_orbits.entry(r).or_default().push(labels[i]);
    }

    let edges: Vec<(Vertex, Vertex)> = g.edges().collect();
    let index: BTreeMap<(Vertex, Vertex), usize> = edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let mut pos = BTreeMap::new();
    for (i, &v) in labels.iter().enumerate() {
        pos.insert(v, i);
    }
    let mut eparent: Vec<usize> = (0..edges.len()).collect();
    for gamma in &result.generators {
        for (i, &(u, v)) in edges.iter().enumerate() {
            let (a, b) = (labels[gamma[pos[&u]]], labels[gamma[pos[&v]]]);
            let j = index[&(a.min(b), a.max(b))];
            union(&mut eparent, i, j);
        }
    }
    let mut edge_orbits: BTreeMap<usize, Vec<(Vertex, Vertex)>> = BTreeMap::new();
    for i in 0..edges.len() {
        let r = find(&mut eparent, i);
        edge_orbits.entry(r).or_default().push(edges[i]);
    }

    let generators = result
        .generators
        .iter()
        .map(|gamma| {
            gamma
                .iter()
                .enumerate()
                .map(|(i, &j)| (labels[i], labels[j]))
                .collect()
        })
        .collect();

    // union-find roots are the least index, so BTreeMap order is by least member
    OrbitPartition {
        vertex: vertex_orbits.into_values().collect(),
        edge: edge_orbits.into_values().collect(),
        generators,
    }
}
