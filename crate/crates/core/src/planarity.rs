//! Planarity testing with witnesses in both directions, and apex search.
//!
//! Each biconnected block is embedded by path addition: start from a cycle,
//! then repeatedly route a path of some fragment through a face that holds
//! all of its attachment vertices, preferring fragments with a single
//! admissible face. A fragment with no admissible face proves the block
//! non-planar. Block embeddings are merged at cut vertices into one rotation
//! system.
//!
//! A non-planar graph is shrunk by dropping every edge whose removal keeps it
//! non-planar. What remains is a subdivision of `K5` or `K3,3`, which is
//! reported as a minor model and checked by the minor validator.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::minor::{validate_minor_embedding, MinorEmbedding};

/// Cyclic order of neighbours around each vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RotationSystem {
    pub rotation: BTreeMap<Vertex, Vec<Vertex>>,
}

impl RotationSystem {
    fn successor(&self, v: Vertex, u: Vertex) -> Option<Vertex> {
        let ring = self.rotation.get(&v)?;
        let i = ring.iter().position(|&x| x == u)?;
        Some(ring[(i + 1) % ring.len()])
    }

    /// Face boundaries as vertex sequences, traced with the rule that the
    /// dart after `u -> v` is `v -> succ_v(u)`.
    pub fn faces(&self) -> Vec<Vec<Vertex>> {
        let mut seen = std::collections::BTreeSet::new();
        let mut faces = Vec::new();
        for (&u, ring) in &self.rotation {
            for &v in ring {
                if seen.contains(&(u, v)) {
                    continue;
                }
                let mut face = Vec::new();
                let (mut a, mut b) = (u, v);
                while seen.insert((a, b)) {
                    face.push(a);
                    let Some(c) = self.successor(b, a) else {
                        break;
                    };
                    (a, b) = (b, c);
                }
                faces.push(face);
            }
        }
        faces
    }

    /// Checks that the rotation lists exactly the neighbours of every vertex
    /// and that Euler's formula `v - e + f = 2` holds on every component.
    pub fn validate(&self, g: &Graph) -> bool {
        if self.rotation.len() != g.order() {
            return false;
        }
        for v in g.vertices() {
            let Some(ring) = self.rotation.get(&v) else {
                return false;
            };
            let set: VertexSet = ring.iter().copied().collect();
            if ring.len() != g.degree(v) || set != g.neighbors(v) {
                return false;
            }
        }
        let faces = self.faces();
        g.components().into_iter().all(|comp| {
            let v = comp.len() as i64;
            let e = comp.iter().map(|x| g.degree(x)).sum::<usize>() as i64 / 2;
            let f = if e == 0 {
                1
            } else {
                faces.iter().filter(|face| comp.contains(face[0])).count() as i64
            };
            v - e + f == 2
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Kuratowski {
    K5,
    K33,
}

impl Kuratowski {
    /// `K5` on `1..=5`, or `K3,3` with sides `1..=3` and `4..=6`.
    pub fn pattern(self) -> Graph {
        match self {
            Kuratowski::K5 => Graph::complete(5),
            Kuratowski::K33 => Graph::complete_multipartite(&[3, 3]),
        }
    }
}

impl fmt::Display for Kuratowski {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kuratowski::K5 => "K5",
            Kuratowski::K33 => "K3,3",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PlanarityVerdict {
    Planar(RotationSystem),
    NonPlanar {
        kind: Kuratowski,
        minor: MinorEmbedding,
    },
}

impl PlanarityVerdict {
    pub fn is_planar(&self) -> bool {
        matches!(self, PlanarityVerdict::Planar(_))
    }

    /// Re-checks the witness against `g` without using the planarity code.
    pub fn validate(&self, g: &Graph) -> bool {
        match self {
            PlanarityVerdict::Planar(rot) => rot.validate(g),
            PlanarityVerdict::NonPlanar { kind, minor } => validate_minor_embedding(g, &kind.pattern(), minor),
        }
    }
}

/// Exceeds the planar edge bound `3v - 6`.
pub fn violates_euler_bound(g: &Graph) -> bool {
    g.order() >= 3 && g.size() > 3 * g.order() - 6
}

pub fn is_planar(g: &Graph) -> PlanarityVerdict {
    if !violates_euler_bound(g) {
        if let Some(rot) = embed(g) {
            return PlanarityVerdict::Planar(rot);
        }
    }
    let (kind, minor) = kuratowski_witness(g);
    PlanarityVerdict::NonPlanar { kind, minor }
}

/// Verdict only, without building a witness for non-planar input.
pub fn planar(g: &Graph) -> bool {
    !violates_euler_bound(g) && embed(g).is_some()
}

/// Planar with exactly `3v - 6` edges. Defined for connected graphs on at
/// least three vertices.
pub fn is_maximal_planar(g: &Graph) -> Result<bool> {
    if g.order() < 3 {
        return Err(Error::TooFewVertices(g.order()));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(g.size() == 3 * g.order() - 6 && planar(g))
}

/// Edge sets of the biconnected blocks, found by a depth-first search that
/// stacks edges.
fn blocks(g: &Graph) -> Vec<Vec<(Vertex, Vertex)>> {
    struct Dfs<'a> {
        g: &'a Graph,
        disc: [u32; 65],
        low: [u32; 65],
        time: u32,
        stack: Vec<(Vertex, Vertex)>,
        out: Vec<Vec<(Vertex, Vertex)>>,
    }
    impl Dfs<'_> {
        fn visit(&mut self, v: Vertex, parent: Option<Vertex>) {
            self.time += 1;
            self.disc[v as usize] = self.time;
            self.low[v as usize] = self.time;
            for w in self.g.neighbors(v) {
                if Some(w) == parent {
                    continue;
                }
                if self.disc[w as usize] == 0 {
                    self.stack.push((v, w));
                    self.visit(w, Some(v));
                    self.low[v as usize] = self.low[v as usize].min(self.low[w as usize]);
                    if self.low[w as usize] >= self.disc[v as usize] {
                        let mut block = Vec::new();
                        while let Some(e) = self.stack.pop() {
                            block.push(e);
                            if e == (v, w) {
                                break;
                            }
                        }
                        self.out.push(block);
                    }
                } else if self.disc[w as usize] < self.disc[v as usize] {
                    self.stack.push((v, w));
                    self.low[v as usize] = self.low[v as usize].min(self.disc[w as usize]);
                }
            }
        }
    }
    let mut dfs = Dfs {
        g,
        disc: [0; 65],
        low: [0; 65],
        time: 0,
        stack: Vec::new(),
        out: Vec::new(),
    };
    for v in g.vertices() {
        if dfs.disc[v as usize] == 0 {
            dfs.visit(v, None);
        }
    }
    dfs.out
}

/// Rotation system of a planar graph, or `None`.
fn embed(g: &Graph) -> Option<RotationSystem> {
    let mut rotation: BTreeMap<Vertex, Vec<Vertex>> = g.vertices().map(|v| (v, Vec::new())).collect();
    for block in blocks(g) {
        let local = if block.len() == 1 {
            let (u, v) = block[0];
            BTreeMap::from([(u, vec![v]), (v, vec![u])])
        } else {
            let b = Graph::from_edges(block).expect("edges of g");
            embed_biconnected(&b)?
        };
        // a block's cyclic order is spliced in as one contiguous run
        for (v, ring) in local {
            rotation.get_mut(&v).expect("vertex of g").extend(ring);
        }
    }
    Some(RotationSystem { rotation })
}

struct Fragment {
    attachments: VertexSet,
    path: Vec<Vertex>,
}

/// Path-addition embedding of a biconnected graph with at least one cycle.
fn embed_biconnected(g: &Graph) -> Option<BTreeMap<Vertex, Vec<Vertex>>> {
    if violates_euler_bound(g) {
        return None;
    }
    let cycle = find_cycle(g);
    let mut placed: VertexSet = cycle.iter().copied().collect();
    let mut embedded = Graph::with_vertices(cycle.iter().copied()).expect("labels of g");
    for i in 0..cycle.len() {
        embedded
            .add_edge(cycle[i], cycle[(i + 1) % cycle.len()])
            .expect("cycle edge");
    }
    let mut faces = vec![cycle.clone(), cycle.iter().rev().copied().collect::<Vec<_>>()];

    while embedded.size() < g.size() {
        let fragments = fragments(g, &embedded, placed);
        let mut choice: Option<(usize, usize, usize)> = None; // (count, fragment, face)
        for (fi, frag) in fragments.iter().enumerate() {
            let admissible: Vec<usize> = faces
                .iter()
                .enumerate()
                .filter(|(_, face)| frag.attachments.iter().all(|a| face.contains(&a)))
                .map(|(i, _)| i)
                .collect();
            if admissible.is_empty() {
                return None;
            }
            if choice.is_none_or(|(count, _, _)| admissible.len() < count) {
                choice = Some((admissible.len(), fi, admissible[0]));
                if admissible.len() == 1 {
                    break;
                }
            }
        }
        let (_, fi, face_index) = choice.expect("some fragment remains");
        let path = &fragments[fi].path;
        let face = faces.swap_remove(face_index);
        let (first, second) = split_face(&face, path);
        faces.push(first);
        faces.push(second);
        for w in path.windows(2) {
            embedded.add_vertex(w[1]).expect("label of g");
            embedded.add_edge(w[0], w[1]).expect("path edge");
        }
        for &v in &path[1..path.len() - 1] {
            placed.insert(v);
        }
    }

    // consecutive u, v, w on a face means w follows u around v
    let mut next: BTreeMap<(Vertex, Vertex), Vertex> = BTreeMap::new();
    for face in &faces {
        let k = face.len();
        for i in 0..k {
            next.insert((face[(i + 1) % k], face[i]), face[(i + 2) % k]);
        }
    }
    let mut out = BTreeMap::new();
    for v in g.vertices() {
        let start = g.neighbors(v).first().expect("biconnected");
        let mut ring = vec![start];
        let mut u = next[&(v, start)];
        while u != start {
            ring.push(u);
            u = next[&(v, u)];
        }
        if ring.len() != g.degree(v) {
            return None;
        }
        out.insert(v, ring);
    }
    Some(out)
}

/// A cycle through the first edge: that edge closed by a shortest path
/// between its ends avoiding it.
fn find_cycle(g: &Graph) -> Vec<Vertex> {
    let (u, v) = g.edges().next().expect("block has edges");
    let rest = g.delete_edge(u, v).expect("present");
    let mut prev: BTreeMap<Vertex, Vertex> = BTreeMap::from([(u, u)]);
    let mut queue = std::collections::VecDeque::from([u]);
    while let Some(x) = queue.pop_front() {
        if x == v {
            let mut cycle = vec![v];
            let mut y = v;
            while y != u {
                y = prev[&y];
                cycle.push(y);
            }
            return cycle;
        }
        for w in rest.neighbors(x) {
            if let std::collections::btree_map::Entry::Vacant(e) = prev.entry(w) {
                e.insert(x);
                queue.push_back(w);
            }
        }
    }
    unreachable!("every edge of a biconnected block lies on a cycle")
}

fn fragments(g: &Graph, embedded: &Graph, placed: VertexSet) -> Vec<Fragment> {
    let mut out = Vec::new();
    for (u, v) in g.edges() {
        if placed.contains(u) && placed.contains(v) && !embedded.has_edge(u, v) {
            out.push(Fragment {
                attachments: [u, v].into_iter().collect(),
                path: vec![u, v],
            });
        }
    }
    let outside = g.vertex_set().difference(placed);
    let mut left = outside;
    while let Some(s) = left.first() {
        let comp = g.component_within(s, outside);
        left = left.difference(comp);
        let attachments: VertexSet = comp
            .iter()
            .fold(VertexSet::EMPTY, |m, x| m.union(g.neighbors(x)))
            .intersection(placed);
        let a = attachments.first().expect("biconnected fragment");
        let b = attachments.difference([a].into_iter().collect()).first().expect("two attachments");
        out.push(Fragment {
            attachments,
            path: path_through(g, a, b, comp),
        });
    }
    out
}

/// Path `a, c1, .., ck, b` with every `ci` in `within` (k >= 1).
fn path_through(g: &Graph, a: Vertex, b: Vertex, within: VertexSet) -> Vec<Vertex> {
    let mut prev: BTreeMap<Vertex, Vertex> = BTreeMap::new();
    let mut queue = std::collections::VecDeque::new();
    for c in g.neighbors(a).intersection(within) {
        prev.insert(c, a);
        queue.push_back(c);
    }
    while let Some(c) = queue.pop_front() {
        if g.has_edge(c, b) {
            let mut path = vec![b, c];
            let mut x = c;
            while prev[&x] != a {
                x = prev[&x];
                path.push(x);
            }
            path.push(a);
            path.reverse();
            return path;
        }
        for d in g.neighbors(c).intersection(within) {
            if let std::collections::btree_map::Entry::Vacant(e) = prev.entry(d) {
                e.insert(c);
                queue.push_back(d);
            }
        }
    }
    unreachable!("fragment component touches both attachments")
}

/// Splits an oriented face by a path between two of its vertices, keeping
/// every dart in exactly one face.
fn split_face(face: &[Vertex], path: &[Vertex]) -> (Vec<Vertex>, Vec<Vertex>) {
    let (a, b) = (path[0], *path.last().expect("nonempty"));
    let k = face.len();
    let i = face.iter().position(|&x| x == a).expect("attachment on face");
    let j = face.iter().position(|&x| x == b).expect("attachment on face");
    let interior = &path[1..path.len() - 1];
    let arc = |from: usize, to: usize| {
        let mut out = vec![face[from]];
        let mut x = from;
        while x != to {
            x = (x + 1) % k;
            out.push(face[x]);
        }
        out
    };
    let mut first = arc(i, j);
    first.extend(interior.iter().rev());
    let mut second = arc(j, i);
    second.extend(interior.iter());
    (first, second)
}

/// Minimal non-planar subgraph turned into a Kuratowski minor model.
fn kuratowski_witness(g: &Graph) -> (Kuratowski, MinorEmbedding) {
    let block = blocks(g)
        .into_iter()
        .map(|b| Graph::from_edges(b).expect("edges of g"))
        .find(|b| !planar(b))
        .expect("a non-planar graph has a non-planar block");
    let mut h = block;
    for (u, v) in h.edges().collect::<Vec<_>>() {
        let smaller = h.delete_edge(u, v).expect("present");
        if !planar(&smaller) {
            h = smaller;
        }
    }
    let branch: Vec<Vertex> = h.vertices().filter(|&v| h.degree(v) >= 3).collect();
    let kind = match branch.len() {
        5 => Kuratowski::K5,
        6 => Kuratowski::K33,
        n => unreachable!("edge-minimal non-planar graph with {n} branch vertices"),
    };
    let branch_set: VertexSet = branch.iter().copied().collect();
    let mut sets: BTreeMap<Vertex, VertexSet> = branch.iter().map(|&b| (b, [b].into_iter().collect())).collect();
    let mut joined: BTreeMap<Vertex, VertexSet> = BTreeMap::new();
    for &b in &branch {
        for first in h.neighbors(b) {
            // walk the subdivided path; interiors go to the starting end
            let (mut prev, mut cur) = (b, first);
            let mut interior = Vec::new();
            while !branch_set.contains(cur) {
                interior.push(cur);
                let next = h.neighbors(cur).iter().find(|&x| x != prev).expect("degree two");
                (prev, cur) = (cur, next);
            }
            joined.entry(b).or_default().insert(cur);
            if b < cur {
                let set = sets.get_mut(&b).expect("branch");
                for x in interior {
                    set.insert(x);
                }
            }
        }
    }
    let labels: Vec<Vertex> = match kind {
        Kuratowski::K5 => branch.clone(),
        Kuratowski::K33 => {
            let a = branch[0];
            let mut side: Vec<Vertex> = branch.iter().copied().filter(|&x| x == a || !joined[&a].contains(x)).collect();
            side.extend(branch.iter().copied().filter(|&x| x != a && joined[&a].contains(x)));
            side
        }
    };
    let minor = MinorEmbedding {
        branch_sets: labels
            .iter()
            .enumerate()
            .map(|(i, b)| (i as Vertex + 1, sets[b]))
            .collect(),
    };
    (kind, minor)
}

/// Vertex set whose deletion leaves a planar graph, with the residual
/// embedding.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ApexCertificate {
    pub removed: VertexSet,
    pub residual: RotationSystem,
}

impl ApexCertificate {
    pub fn validate(&self, g: &Graph) -> bool {
        match g.remove_vertices(self.removed) {
            Ok(rest) => self.residual.validate(&rest),
            Err(_) => false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ApexSearch {
    pub certificate: Option<ApexCertificate>,
    /// Subsets accounted for, whether tested or ruled out by a shortcut.
    pub subsets_covered: u64,
    pub planarity_tests: u64,
}

/// Tries every vertex subset of size `0..=k`, smaller sizes first and
/// lexicographically within a size, and returns the first that works.
///
/// A subset holding a vertex of degree at most one in `g - (S - v)` is
/// skipped: dropping that vertex from `S` gives a smaller subset that was
/// already tried and failed.
pub fn apex_search(g: &Graph, k: usize) -> ApexSearch {
    let labels: Vec<Vertex> = g.vertices().collect();
    let mut covered = 0u64;
    let mut tests = 0u64;
    for size in 0..=k.min(labels.len()) {
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            covered += 1;
            let removed: VertexSet = idx.iter().map(|&i| labels[i]).collect();
            let rest = g.remove_vertices(removed).expect("subset of V");
            let reducible = removed.iter().any(|v| g.neighbors(v).difference(removed).len() <= 1);
            if !reducible && !violates_euler_bound(&rest) {
                tests += 1;
                if let Some(residual) = embed(&rest) {
                    return ApexSearch {
                        certificate: Some(ApexCertificate { removed, residual }),
                        subsets_covered: covered,
                        planarity_tests: tests,
                    };
                }
            }
            if !next_combination(&mut idx, labels.len()) {
                break;
            }
        }
    }
    ApexSearch {
        certificate: None,
        subsets_covered: covered,
        planarity_tests: tests,
    }
}

pub fn apex_at_most(g: &Graph, k: usize) -> Option<ApexCertificate> {
    apex_search(g, k).certificate
}

/// Advances to the next `idx.len()`-subset of `0..n` in lexicographic order.
fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let r = idx.len();
    let Some(i) = (0..r).rev().find(|&i| idx[i] < n - r + i) else {
        return false;
    };
    idx[i] += 1;
    for j in i + 1..r {
        idx[j] = idx[j - 1] + 1;
    }
    true
}
