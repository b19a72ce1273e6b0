//! Simple undirected graphs on labeled vertices `1..=64`.
//!
//! Adjacency is stored as one 64-bit mask per label, so every set operation
//! the search kernels need (neighbourhood intersection, connectivity inside a
//! branch set, induced subgraphs) is a handful of word operations.

use std::fmt;

use crate::error::{Error, Result};

/// A vertex label in `1..=MAX_VERTICES`.
pub type Vertex = u8;

pub const MAX_VERTICES: usize = 64;

#[inline]
fn bit(v: Vertex) -> u64 {
    1u64 << (v - 1)
}

/// A set of vertex labels backed by a single machine word.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    /// All labels `1..=n`.
    pub fn range(n: usize) -> Self {
        assert!(n <= MAX_VERTICES);
        if n == 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn contains(self, v: Vertex) -> bool {
        (1..=64).contains(&v) && self.0 & bit(v) != 0
    }

    pub fn insert(&mut self, v: Vertex) {
        self.0 |= bit(v);
    }

    pub fn remove(&mut self, v: Vertex) {
        self.0 &= !bit(v);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn first(self) -> Option<Vertex> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as Vertex + 1)
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl IntoIterator for VertexSet {
    type Item = Vertex;
    type IntoIter = VertexIter;
    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

/// Ascending iterator over the labels in a [`VertexSet`].
#[derive(Clone)]
pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = Vertex;

    fn next(&mut self) -> Option<Vertex> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as Vertex + 1;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for VertexIter {}

/// Iterate the set bit positions of a raw mask (0-based).
pub(crate) fn bit_indices(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(i)
        }
    })
}

/// A simple undirected graph. Loops and parallel edges are unrepresentable.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    vertices: VertexSet,
    adj: [u64; MAX_VERTICES],
}

impl Default for Graph {
    fn default() -> Self {
        Graph::new()
    }
}

fn check_label(v: Vertex) -> Result<()> {
    if v == 0 || v as usize > MAX_VERTICES {
        Err(Error::LabelOutOfRange {
            line: 0,
            label: v as u64,
        })
    } else {
        Ok(())
    }
}

impl Graph {
    pub fn new() -> Self {
        Graph {
            vertices: VertexSet::EMPTY,
            adj: [0; MAX_VERTICES],
        }
    }

    /// Edgeless graph on the given labels.
    pub fn with_vertices<I: IntoIterator<Item = Vertex>>(vertices: I) -> Result<Self> {
        let mut g = Graph::new();
        for v in vertices {
            g.add_vertex(v)?;
        }
        Ok(g)
    }

    /// Graph spanned by an edge list; vertices are the labels mentioned.
    pub fn from_edges<I: IntoIterator<Item = (Vertex, Vertex)>>(edges: I) -> Result<Self> {
        let mut g = Graph::new();
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::new();
        for u in 1..=n as Vertex {
            g.add_vertex(u).expect("n <= 64");
            for v in 1..u {
                g.add_edge(v, u).expect("distinct labels");
            }
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3);
        let n = n as Vertex;
        Graph::from_edges((1..=n).map(|i| (i, i % n + 1))).expect("valid cycle")
    }

    pub fn path(n: usize) -> Self {
        let mut g = Graph::with_vertices(1..=n as Vertex).expect("n <= 64");
        for i in 1..n as Vertex {
            g.add_edge(i, i + 1).expect("valid path");
        }
        g
    }

    /// Complete multipartite graph; parts are labeled consecutively from 1.
    pub fn complete_multipartite(parts: &[usize]) -> Self {
        let mut g = Graph::new();
        let mut start = 1usize;
        let mut ranges = Vec::new();
        for &p in parts {
            ranges.push(start..start + p);
            start += p;
        }
        for r in &ranges {
            for v in r.clone() {
                g.add_vertex(v as Vertex).expect("at most 64 vertices");
            }
        }
        for (i, a) in ranges.iter().enumerate() {
            for b in &ranges[i + 1..] {
                for u in a.clone() {
                    for v in b.clone() {
                        g.add_edge(u as Vertex, v as Vertex).expect("distinct");
                    }
                }
            }
        }
        g
    }

    pub fn add_vertex(&mut self, v: Vertex) -> Result<()> {
        check_label(v)?;
        self.vertices.insert(v);
        Ok(())
    }

    /// Adds `uv`, creating endpoints as needed. Returns false if the edge was present.
    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<bool> {
        check_label(u)?;
        check_label(v)?;
        if u == v {
            return Err(Error::Loop(u));
        }
        self.vertices.insert(u);
        self.vertices.insert(v);
        let fresh = self.adj[u as usize - 1] & bit(v) == 0;
        self.adj[u as usize - 1] |= bit(v);
        self.adj[v as usize - 1] |= bit(u);
        Ok(fresh)
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.vertices
    }

    pub fn vertices(&self) -> VertexIter {
        self.vertices.iter()
    }

    pub fn contains_vertex(&self, v: Vertex) -> bool {
        self.vertices.contains(v)
    }

    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: Vertex) -> VertexSet {
        if !self.contains_vertex(v) {
            return VertexSet::EMPTY;
        }
        VertexSet(self.adj[v as usize - 1])
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.neighbors(v).len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.contains_vertex(u) && self.neighbors(u).contains(v)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.vertices().flat_map(move |u| {
            let below = 1u64.checked_shl(u as u32).map_or(u64::MAX, |b| b - 1);
            let higher = self.adj[u as usize - 1] & !below;
            VertexSet(higher).iter().map(move |v| (u, v))
        })
    }

    /// Least positive label not in use.
    pub fn next_free_label(&self) -> Result<Vertex> {
        let free = !self.vertices.0;
        if free == 0 {
            Err(Error::TooManyVertices)
        } else {
            Ok(free.trailing_zeros() as Vertex + 1)
        }
    }

    fn require_vertex(&self, v: Vertex) -> Result<()> {
        if self.contains_vertex(v) {
            Ok(())
        } else {
            Err(Error::MissingVertex(v))
        }
    }

    fn require_edge(&self, u: Vertex, v: Vertex) -> Result<()> {
        if self.has_edge(u, v) {
            Ok(())
        } else {
            Err(Error::MissingEdge(u, v))
        }
    }

    pub fn delete_edge(&self, u: Vertex, v: Vertex) -> Result<Graph> {
        self.require_edge(u, v)?;
        let mut g = self.clone();
        g.adj[u as usize - 1] &= !bit(v);
        g.adj[v as usize - 1] &= !bit(u);
        Ok(g)
    }

    /// Adds an edge to a copy; errors on loops or bad labels, not on duplicates.
    pub fn with_edge(&self, u: Vertex, v: Vertex) -> Result<Graph> {
        let mut g = self.clone();
        g.add_edge(u, v)?;
        Ok(g)
    }

    pub fn remove_vertex(&self, v: Vertex) -> Result<Graph> {
        self.require_vertex(v)?;
        let mut g = self.clone();
        g.isolate(v);
        g.vertices.remove(v);
        Ok(g)
    }

    pub fn remove_vertices(&self, set: VertexSet) -> Result<Graph> {
        if !set.is_subset(self.vertices) {
            let v = set.difference(self.vertices).first().expect("nonempty");
            return Err(Error::MissingVertex(v));
        }
        Ok(self.restrict(self.vertices.difference(set)))
    }

    fn isolate(&mut self, v: Vertex) {
        for u in VertexSet(self.adj[v as usize - 1]) {
            self.adj[u as usize - 1] &= !bit(v);
        }
        self.adj[v as usize - 1] = 0;
    }

    /// Contracts `uv`. The merged vertex keeps the smaller label and every
    /// other label is preserved; parallel edges collapse.
    pub fn contract_edge(&self, u: Vertex, v: Vertex) -> Result<Graph> {
        self.require_edge(u, v)?;
        let (keep, gone) = (u.min(v), u.max(v));
        let mut g = self.clone();
        let merged = (g.adj[keep as usize - 1] | g.adj[gone as usize - 1]) & !bit(keep) & !bit(gone);
        g.isolate(gone);
        g.vertices.remove(gone);
        g.isolate(keep);
        for w in VertexSet(merged) {
            g.adj[keep as usize - 1] |= bit(w);
            g.adj[w as usize - 1] |= bit(keep);
        }
        Ok(g)
    }

    pub fn induced_subgraph(&self, set: VertexSet) -> Result<Graph> {
        if !set.is_subset(self.vertices) {
            let v = set.difference(self.vertices).first().expect("nonempty");
            return Err(Error::MissingVertex(v));
        }
        Ok(self.restrict(set))
    }

    fn restrict(&self, set: VertexSet) -> Graph {
        let mut g = Graph::new();
        g.vertices = set;
        for v in set {
            g.adj[v as usize - 1] = self.adj[v as usize - 1] & set.0;
        }
        g
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::new();
        g.vertices = self.vertices;
        for v in self.vertices {
            g.adj[v as usize - 1] = self.vertices.0 & !self.adj[v as usize - 1] & !bit(v);
        }
        g
    }

    /// Vertex set of the component containing `start`, restricted to `within`.
    pub fn component_within(&self, start: Vertex, within: VertexSet) -> VertexSet {
        let mut seen = bit(start) & within.0;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in VertexSet(frontier) {
                next |= self.adj[v as usize - 1];
            }
            next &= within.0 & !seen;
            seen |= next;
            frontier = next;
        }
        VertexSet(seen)
    }

    /// Connected components, ordered by least member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut left = self.vertices;
        let mut out = Vec::new();
        while let Some(v) = left.first() {
            let c = self.component_within(v, self.vertices);
            left = left.difference(c);
            out.push(c);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Applies a relabeling `old -> new`; the map must be injective on V.
    pub fn relabel<F: Fn(Vertex) -> Vertex>(&self, map: F) -> Result<Graph> {
        let mut g = Graph::new();
        for v in self.vertices() {
            if g.contains_vertex(map(v)) {
                return Err(Error::LabelCollision(format!("relabel maps two vertices to {}", map(v))));
            }
            g.add_vertex(map(v))?;
        }
        for (u, v) in self.edges() {
            g.add_edge(map(u), map(v))?;
        }
        Ok(g)
    }

    /// Sorted labels together with 0-based adjacency masks over their positions.
    pub(crate) fn dense(&self) -> (Vec<Vertex>, Vec<u64>) {
        let labels: Vec<Vertex> = self.vertices().collect();
        let mut pos = [usize::MAX; MAX_VERTICES + 1];
        for (i, &v) in labels.iter().enumerate() {
            pos[v as usize] = i;
        }
        let adj = labels
            .iter()
            .map(|&v| {
                VertexSet(self.adj[v as usize - 1])
                    .iter()
                    .fold(0u64, |m, w| m | 1u64 << pos[w as usize])
            })
            .collect();
        (labels, adj)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(V={}, E=[", self.vertices)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        f.write_str("])")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_minus_edge_is_path() {
        let t = Graph::complete(3);
        let p = t.delete_edge(1, 3).unwrap();
        assert_eq!(p, Graph::path(3));
        assert_eq!(t.delete_edge(1, 1), Err(Error::MissingEdge(1, 1)));
    }

    #[test]
    fn contracting_triangle_edge_gives_k2() {
        let g = Graph::complete(3).contract_edge(2, 3).unwrap();
        assert_eq!(g, Graph::complete(2));
        let h = Graph::complete(3).contract_edge(3, 1).unwrap();
        assert_eq!(h.vertices().collect::<Vec<_>>(), vec![1, 2]);
    }

    #[test]
    fn contraction_requires_edge() {
        assert!(Graph::path(3).contract_edge(1, 3).is_err());
    }

    #[test]
    fn induced_subgraph_of_k5() {
        let k5 = Graph::complete(5);
        let s: VertexSet = [1, 3, 5].into_iter().collect();
        let t = k5.induced_subgraph(s).unwrap();
        assert_eq!((t.order(), t.size()), (3, 3));
        let bad: VertexSet = [1, 6].into_iter().collect();
        assert_eq!(k5.induced_subgraph(bad), Err(Error::MissingVertex(6)));
    }

    #[test]
    fn loops_and_labels_rejected() {
        let mut g = Graph::new();
        assert_eq!(g.add_edge(2, 2), Err(Error::Loop(2)));
        assert!(g.add_edge(0, 1).is_err());
        assert!(g.add_edge(1, 65).is_err());
        assert!(g.add_edge(1, 64).unwrap());
        assert!(!g.add_edge(64, 1).unwrap());
        assert_eq!(g.size(), 1);
    }

    #[test]
    fn next_free_label_fills_gaps() {
        let g = Graph::from_edges([(1, 2), (2, 4)]).unwrap();
        assert_eq!(g.next_free_label().unwrap(), 3);
        let full = Graph::with_vertices(1..=64).unwrap();
        assert_eq!(full.next_free_label(), Err(Error::TooManyVertices));
    }

    #[test]
    fn components_ordered_by_least_member() {
        let g = Graph::from_edges([(5, 6), (1, 3), (2, 4), (4, 6)]).unwrap();
        let c = g.components();
        assert_eq!(c.len(), 2);
        assert_eq!(c[0].iter().collect::<Vec<_>>(), vec![1, 3]);
        assert_eq!(c[1].iter().collect::<Vec<_>>(), vec![2, 4, 5, 6]);
    }

    #[test]
    fn multipartite_counts() {
        let g = Graph::complete_multipartite(&[3, 3, 1]);
        assert_eq!((g.order(), g.size()), (7, 15));
        let h = Graph::complete_multipartite(&[3, 3, 1, 1]);
        assert_eq!((h.order(), h.size()), (8, 22));
    }

    #[test]
    fn complement_of_c7() {
        let c = Graph::cycle(7).complement();
        assert_eq!(c.size(), 14);
        assert!(c.vertices().all(|v| c.degree(v) == 4));
    }
}
