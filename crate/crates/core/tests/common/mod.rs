//! Brute-force oracles shared by the property suites and the acceptance run.
//! None of these call into the search code they are used to check.

#![allow(dead_code)]

use std::collections::BTreeSet;

use ikverify_core::{Graph, Vertex};
use rand::seq::SliceRandom;
use rand::Rng;

pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut g = Graph::with_vertices(1..=n as Vertex).unwrap();
    for u in 1..=n as Vertex {
        for v in u + 1..=n as Vertex {
            if rng.gen_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

/// Copies `g` onto a random injection of its labels into `1..=64`.
pub fn random_relabel<R: Rng>(rng: &mut R, g: &Graph) -> Graph {
    let mut pool: Vec<Vertex> = (1..=64).collect();
    pool.shuffle(rng);
    let verts: Vec<Vertex> = g.vertices().collect();
    let map = |v: Vertex| pool[verts.iter().position(|&x| x == v).unwrap()];
    g.relabel(map).unwrap()
}

fn adjacency(g: &Graph) -> (Vec<Vertex>, Vec<Vec<bool>>) {
    let verts: Vec<Vertex> = g.vertices().collect();
    let adj = verts
        .iter()
        .map(|&u| verts.iter().map(|&v| g.has_edge(u, v)).collect())
        .collect();
    (verts, adj)
}

/// Minor test by enumerating every map from host vertices to pattern
/// vertices plus "deleted": each class must be nonempty and connected, and
/// every pattern edge needs a host edge between the two classes.
pub fn brute_has_minor(host: &Graph, pattern: &Graph) -> bool {
    let (_, hadj) = adjacency(host);
    let (_, padj) = adjacency(pattern);
    let n = hadj.len();
    let k = padj.len();
    if k == 0 {
        return true;
    }
    if k > n {
        return false;
    }
    let mut assign = vec![0usize; n];
    loop {
        if model_ok(&assign, &hadj, &padj) {
            return true;
        }
        let mut i = 0;
        loop {
            if i == n {
                return false;
            }
            assign[i] += 1;
            if assign[i] <= k {
                break;
            }
            assign[i] = 0;
            i += 1;
        }
    }
}

fn model_ok(assign: &[usize], hadj: &[Vec<bool>], padj: &[Vec<bool>]) -> bool {
    let k = padj.len();
    let mut classes = vec![Vec::new(); k + 1];
    for (v, &c) in assign.iter().enumerate() {
        classes[c].push(v);
    }
    if classes[1..].iter().any(|c| c.is_empty()) {
        return false;
    }
    for class in &classes[1..] {
        let mut seen = vec![class[0]];
        let mut i = 0;
        while i < seen.len() {
            let x = seen[i];
            for &y in class {
                if hadj[x][y] && !seen.contains(&y) {
                    seen.push(y);
                }
            }
            i += 1;
        }
        if seen.len() != class.len() {
            return false;
        }
    }
    for a in 0..k {
        for b in a + 1..k {
            if padj[a][b] {
                let touch = classes[a + 1]
                    .iter()
                    .any(|&x| classes[b + 1].iter().any(|&y| hadj[x][y]));
                if !touch {
                    return false;
                }
            }
        }
    }
    true
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                go(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Tries every bijection between the two vertex lists.
pub fn brute_isomorphic(g1: &Graph, g2: &Graph) -> bool {
    let (_, a1) = adjacency(g1);
    let (_, a2) = adjacency(g2);
    if a1.len() != a2.len() || g1.size() != g2.size() {
        return false;
    }
    let n = a1.len();
    permutations(n)
        .iter()
        .any(|p| (0..n).all(|i| (0..n).all(|j| a1[i][j] == a2[p[i]][p[j]])))
}

/// Vertex and edge orbits from the full list of automorphisms.
pub type Orbits = (BTreeSet<Vec<Vertex>>, BTreeSet<Vec<(Vertex, Vertex)>>);

pub fn brute_orbits(g: &Graph) -> Orbits {
    let (verts, adj) = adjacency(g);
    let n = verts.len();
    let autos: Vec<Vec<usize>> = permutations(n)
        .into_iter()
        .filter(|p| (0..n).all(|i| (0..n).all(|j| adj[i][j] == adj[p[i]][p[j]])))
        .collect();
    let mut vorb = BTreeSet::new();
    for i in 0..n {
        let mut o: Vec<Vertex> = autos.iter().map(|p| verts[p[i]]).collect();
        o.sort_unstable();
        o.dedup();
        vorb.insert(o);
    }
    let mut eorb = BTreeSet::new();
    for i in 0..n {
        for j in i + 1..n {
            if !adj[i][j] {
                continue;
            }
            let mut o: Vec<(Vertex, Vertex)> = autos
                .iter()
                .map(|p| {
                    let (a, b) = (verts[p[i]], verts[p[j]]);
                    (a.min(b), a.max(b))
                })
                .collect();
            o.sort_unstable();
            o.dedup();
            eorb.insert(o);
        }
    }
    (vorb, eorb)
}

/// Small patterns for the minor oracle comparison.
pub fn minor_patterns() -> Vec<(&'static str, Graph)> {
    let e = |edges: &[(Vertex, Vertex)]| Graph::from_edges(edges.iter().copied()).unwrap();
    vec![
        ("P3", Graph::path(3)),
        ("K3", Graph::complete(3)),
        ("C4", Graph::cycle(4)),
        ("K1,3", Graph::complete_multipartite(&[1, 3])),
        ("diamond", e(&[(1, 2), (1, 3), (2, 3), (2, 4), (3, 4)])),
        ("K4", Graph::complete(4)),
        ("K2,3", Graph::complete_multipartite(&[2, 3])),
        ("C5", Graph::cycle(5)),
        ("K5", Graph::complete(5)),
        ("K3,3", Graph::complete_multipartite(&[3, 3])),
    ]
}
