//! Minor containment with branch-set certificates.
//!
//! The search walks the host vertices in a fixed breadth-first order and
//! assigns each one to "unused", to an existing branch set, or to a new
//! branch set, numbering branch sets by first appearance. Every partition of
//! a subset of the host into `p` parts is therefore generated exactly once,
//! independent of the pattern's symmetries. At a complete partition the
//! quotient graph is matched against the pattern (bijective, edge
//! preserving) with the most constrained pattern vertex first.
//!
//! Pruning is exact: a branch set whose pieces can no longer be joined, a
//! closed branch set with fewer quotient neighbours than the pattern's
//! minimum degree, or too few vertices left to open the missing branch sets.
//! A `None` answer is a proof that no minor exists.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use crate::canon::{canonical_form, is_isomorphic};
use crate::error::{Error, Result};
use crate::graph::{bit_indices, Graph, Vertex, VertexSet};
use crate::io::write_graph6;
use crate::moves::{family_closure, ClosureLimits};

/// Branch sets witnessing `pattern <= host`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinorEmbedding {
    /// Pattern vertex to host branch set.
    pub branch_sets: BTreeMap<Vertex, VertexSet>,
}

impl fmt::Display for MinorEmbedding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (v, set)) in self.branch_sets.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}->{set}")?;
        }
        Ok(())
    }
}

/// Checks the three model conditions directly against the host.
pub fn validate_minor_embedding(host: &Graph, pattern: &Graph, emb: &MinorEmbedding) -> bool {
    if emb.branch_sets.len() != pattern.order() {
        return false;
    }
    let mut used = VertexSet::EMPTY;
    for v in pattern.vertices() {
        let Some(&set) = emb.branch_sets.get(&v) else {
            return false;
        };
        if set.is_empty() || !set.is_subset(host.vertex_set()) {
            return false;
        }
        if !set.intersection(used).is_empty() {
            return false;
        }
        used = used.union(set);
        let start = set.first().expect("nonempty");
        // connectivity by plain BFS inside the set
        let mut seen = VertexSet::EMPTY;
        seen.insert(start);
        let mut stack = vec![start];
        while let Some(x) = stack.pop() {
            for y in host.neighbors(x).intersection(set) {
                if !seen.contains(y) {
                    seen.insert(y);
                    stack.push(y);
                }
            }
        }
        if seen != set {
            return false;
        }
    }
    pattern.edges().all(|(a, b)| {
        let (sa, sb) = (emb.branch_sets[&a], emb.branch_sets[&b]);
        sa.iter().any(|x| !host.neighbors(x).intersection(sb).is_empty())
    })
}

/// Outcome of one exhaustive search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinorSearch {
    pub embedding: Option<MinorEmbedding>,
    /// Search-tree nodes visited; identical on every run for the same input.
    pub nodes: u64,
}

struct Pattern {
    adj: Vec<u64>,
    order: Vec<usize>,
    degrees_desc: Vec<u32>,
    min_degree: u32,
    edges: u32,
}

impl Pattern {
    fn new(adj: Vec<u64>) -> Pattern {
        let p = adj.len();
        let deg: Vec<u32> = adj.iter().map(|m| m.count_ones()).collect();
        let mut order = Vec::with_capacity(p);
        let mut placed = 0u64;
        while order.len() < p {
            let next = (0..p)
                .filter(|&v| placed & (1 << v) == 0)
                .max_by_key(|&v| ((adj[v] & placed).count_ones(), deg[v], std::cmp::Reverse(v)))
                .expect("unplaced vertex");
            placed |= 1 << next;
            order.push(next);
        }
        let mut degrees_desc = deg.clone();
        degrees_desc.sort_unstable_by(|a, b| b.cmp(a));
        Pattern {
            min_degree: deg.iter().copied().min().unwrap_or(0),
            edges: deg.iter().sum::<u32>() / 2,
            adj,
            order,
            degrees_desc,
        }
    }

    /// Bijection pattern -> quotient vertices preserving pattern edges.
    fn match_into(&self, quotient: &[u64]) -> Option<Vec<usize>> {
        let qdeg: Vec<u32> = quotient.iter().map(|m| m.count_ones()).collect();
        if qdeg.iter().sum::<u32>() / 2 < self.edges {
            return None;
        }
        let mut sorted = qdeg.clone();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        if sorted.iter().zip(&self.degrees_desc).any(|(q, p)| q < p) {
            return None;
        }
        let mut map = vec![usize::MAX; self.adj.len()];
        self.extend(quotient, &qdeg, &mut map, 0, 0).then_some(map)
    }

    fn extend(&self, q: &[u64], qdeg: &[u32], map: &mut [usize], k: usize, used: u64) -> bool {
        if k == self.order.len() {
            return true;
        }
        let v = self.order[k];
        let need = self.adj[v].count_ones();
        for c in 0..q.len() {
            if used & (1 << c) != 0 || qdeg[c] < need {
                continue;
            }
            let ok = bit_indices(self.adj[v]).all(|u| map[u] == usize::MAX || q[c] & (1 << map[u]) != 0);
            if ok {
                map[v] = c;
                if self.extend(q, qdeg, map, k + 1, used | 1 << c) {
                    return true;
                }
                map[v] = usize::MAX;
            }
        }
        false
    }
}

struct PartitionSearch<'a> {
    adj: &'a [u64],
    visit: Vec<usize>,
    pattern: &'a Pattern,
    blocks: Vec<u64>,
    unprocessed: u64,
    nodes: u64,
    budget: Option<u64>,
}

fn spread(adj: &[u64], start: usize, within: u64) -> u64 {
    let mut seen = 1u64 << start;
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0;
        for v in bit_indices(frontier) {
            next |= adj[v];
        }
        next &= within & !seen;
        seen |= next;
        frontier = next;
    }
    seen
}

impl PartitionSearch<'_> {
    fn neighbourhood(&self, set: u64) -> u64 {
        bit_indices(set).fold(0, |m, v| m | self.adj[v])
    }

    fn viable(&self) -> bool {
        let p = self.pattern.adj.len();
        let remaining = self.unprocessed.count_ones() as usize;
        if self.blocks.len() + remaining < p {
            return false;
        }
        for (i, &block) in self.blocks.iter().enumerate() {
            let reach = self.neighbourhood(block);
            // every piece of a split block must still be joinable
            let mut rest = block;
            let mut pieces = 0;
            while rest != 0 {
                let piece = spread(self.adj, rest.trailing_zeros() as usize, block);
                rest &= !piece;
                pieces += 1;
                if (pieces > 1 || rest != 0) && self.neighbourhood(piece) & self.unprocessed == 0 {
                    return false;
                }
            }
            if reach & self.unprocessed == 0 {
                let degree = self
                    .blocks
                    .iter()
                    .enumerate()
                    .filter(|&(j, &other)| j != i && reach & other != 0)
                    .count() as u32;
                if degree < self.pattern.min_degree {
                    return false;
                }
            }
        }
        true
    }

    fn step(&mut self, i: usize) -> Result<Option<Vec<u64>>> {
        self.nodes += 1;
        if let Some(limit) = self.budget {
            if self.nodes > limit {
                return Err(Error::BudgetExceeded(limit));
            }
        }
        if !self.viable() {
            return Ok(None);
        }
        let p = self.pattern.adj.len();
        if i == self.visit.len() {
            if self.blocks.len() != p {
                return Ok(None);
            }
            let quotient: Vec<u64> = self
                .blocks
                .iter()
                .enumerate()
                .map(|(a, &ba)| {
                    let reach = self.neighbourhood(ba);
                    self.blocks
                        .iter()
                        .enumerate()
                        .filter(|&(b, &bb)| b != a && reach & bb != 0)
                        .fold(0u64, |m, (b, _)| m | 1 << b)
                })
                .collect();
            return Ok(self
                .pattern
                .match_into(&quotient)
                .map(|map| map.iter().map(|&b| self.blocks[b]).collect()));
        }
        let v = self.visit[i];
        self.unprocessed &= !(1u64 << v);
        if self.blocks.len() < p {
            self.blocks.push(1 << v);
            let found = self.step(i + 1)?;
            self.blocks.pop();
            if found.is_some() {
                return Ok(found);
            }
        }
        for b in 0..self.blocks.len() {
            self.blocks[b] |= 1 << v;
            let found = self.step(i + 1)?;
            self.blocks[b] &= !(1u64 << v);
            if found.is_some() {
                return Ok(found);
            }
        }
        let found = self.step(i + 1)?;
        self.unprocessed |= 1 << v;
        Ok(found)
    }
}

/// Exhaustive search for a minor model of `pattern` in `host`.
///
/// With `budget` set, running out of nodes is an error rather than a
/// negative answer.
pub fn find_minor(host: &Graph, pattern: &Graph, budget: Option<u64>) -> Result<MinorSearch> {
    let (plabels, padj) = pattern.dense();
    if pattern.order() > host.order() || pattern.size() > host.size() {
        return Ok(MinorSearch {
            embedding: None,
            nodes: 0,
        });
    }
    let (hlabels, hadj) = host.dense();
    let pat = Pattern::new(padj);

    // breadth-first visiting order, component by component
    let mut visit = Vec::with_capacity(hadj.len());
    let mut seen = 0u64;
    for s in 0..hadj.len() {
        if seen & (1 << s) != 0 {
            continue;
        }
        let mut queue = std::collections::VecDeque::from([s]);
        seen |= 1 << s;
        while let Some(v) = queue.pop_front() {
            visit.push(v);
            for w in bit_indices(hadj[v] & !seen) {
                seen |= 1 << w;
                queue.push_back(w);
            }
        }
    }

    let all = if hadj.len() == 64 {
        u64::MAX
    } else {
        (1u64 << hadj.len()) - 1
    };
    let mut search = PartitionSearch {
        adj: &hadj,
        visit,
        pattern: &pat,
        blocks: Vec::new(),
        unprocessed: all,
        nodes: 0,
        budget,
    };
    let found = search.step(0)?;
    let embedding = found.map(|sets| MinorEmbedding {
        branch_sets: sets
            .iter()
            .enumerate()
            .map(|(pv, &mask)| {
                let set: VertexSet = bit_indices(mask).map(|h| hlabels[h]).collect();
                (plabels[pv], set)
            })
            .collect(),
    });
    if let Some(e) = &embedding {
        debug_assert!(validate_minor_embedding(host, pattern, e));
    }
    Ok(MinorSearch {
        embedding,
        nodes: search.nodes,
    })
}

/// Exhaustive, unbudgeted minor test.
pub fn has_minor(host: &Graph, pattern: &Graph) -> Option<MinorEmbedding> {
    find_minor(host, pattern, None)
        .expect("unbudgeted search cannot run out")
        .embedding
}

/// A member of the Petersen family together with its display name.
#[derive(Debug, Clone)]
pub struct Obstruction {
    pub name: &'static str,
    pub graph: Graph,
}

/// graph6 strings of the canonical forms of the seven members, in family order.
pub const PETERSEN_FAMILY_CHECKSUM: [&str; 7] = [
    "E~~w",
    "Fs\\zw",
    "FFzfw",
    "GYQ[p{",
    "GIQ|to",
    "HBj@IUR",
    "I?LRCecq?",
];

/// The seven graphs of the Delta-Y/Y-Delta family of `K6`, ordered by
/// canonical form (order, then size, then edge list).
pub fn petersen_family() -> &'static [Obstruction] {
    static FAMILY: OnceLock<Vec<Obstruction>> = OnceLock::new();
    FAMILY.get_or_init(|| {
        let closure = family_closure(&Graph::complete(6), ClosureLimits::default())
            .expect("the K6 family is small");
        let k331 = Graph::complete_multipartite(&[3, 3, 1]);
        let k44e = Graph::complete_multipartite(&[4, 4]).delete_edge(1, 5).expect("edge");
        let members: Vec<Obstruction> = closure
            .members
            .iter()
            .map(|m| {
                let g = m.form.graph();
                let name = match g.order() {
                    6 => "K6",
                    7 if is_isomorphic(&g, &k331).is_some() => "K3,3,1",
                    7 => "G7",
                    8 if is_isomorphic(&g, &k44e).is_some() => "K4,4-e",
                    8 => "G8",
                    9 => "G9",
                    _ => "Petersen",
                };
                Obstruction { name, graph: g }
            })
            .collect();
        let sums: Vec<String> = members.iter().map(|m| write_graph6(&canonical_form(&m.graph).graph())).collect();
        assert_eq!(sums, PETERSEN_FAMILY_CHECKSUM, "Petersen family regression");
        members
    })
}

/// Verdict for one obstruction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ObstructionVerdict {
    NoMinor { nodes: u64 },
    Minor(MinorEmbedding),
}

/// One verdict per Petersen-family member; the graph is linklessly
/// embeddable iff all seven are `NoMinor`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NilCertificate {
    pub verdicts: Vec<(&'static str, ObstructionVerdict)>,
}

impl NilCertificate {
    pub fn is_nil(&self) -> bool {
        self.verdicts
            .iter()
            .all(|(_, v)| matches!(v, ObstructionVerdict::NoMinor { .. }))
    }

    /// First obstruction found, if any.
    pub fn witness(&self) -> Option<(&'static str, &MinorEmbedding)> {
        self.verdicts.iter().find_map(|(name, v)| match v {
            ObstructionVerdict::Minor(e) => Some((*name, e)),
            _ => None,
        })
    }

    /// Re-checks positive verdicts with the validator and replays negative
    /// ones, which must reproduce the same node count.
    pub fn validate(&self, g: &Graph) -> bool {
        let family = petersen_family();
        if self.verdicts.len() != family.len() {
            return false;
        }
        self.verdicts.iter().zip(family).all(|((name, verdict), ob)| {
            *name == ob.name
                && match verdict {
                    ObstructionVerdict::Minor(e) => validate_minor_embedding(g, &ob.graph, e),
                    ObstructionVerdict::NoMinor { nodes } => find_minor(g, &ob.graph, None)
                        .map(|s| s.embedding.is_none() && s.nodes == *nodes)
                        .unwrap_or(false),
                }
        })
    }
}

pub fn certify_nil_with_budget(g: &Graph, budget: Option<u64>) -> Result<NilCertificate> {
    let mut verdicts = Vec::with_capacity(7);
    for ob in petersen_family() {
        let search = find_minor(g, &ob.graph, budget)?;
        let verdict = match search.embedding {
            Some(e) => ObstructionVerdict::Minor(e),
            None => ObstructionVerdict::NoMinor { nodes: search.nodes },
        };
        verdicts.push((ob.name, verdict));
    }
    Ok(NilCertificate { verdicts })
}

pub fn certify_nil(g: &Graph) -> NilCertificate {
    certify_nil_with_budget(g, None).expect("unbudgeted")
}

/// Stops at the first Petersen-family minor; `None` means nIL.
pub fn find_petersen_minor(g: &Graph) -> Option<(&'static Obstruction, MinorEmbedding)> {
    petersen_family()
        .iter()
        .find_map(|ob| has_minor(g, &ob.graph).map(|e| (ob, e)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k6_is_not_a_minor_of_k5() {
        assert!(has_minor(&Graph::complete(5), &Graph::complete(6)).is_none());
    }

    #[test]
    fn k4_minor_of_subdivided_k4() {
        // K4 with edge 1-2 subdivided by 5
        let g = Graph::from_edges([(1, 5), (5, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]).unwrap();
        let e = has_minor(&g, &Graph::complete(4)).unwrap();
        assert!(validate_minor_embedding(&g, &Graph::complete(4), &e));
        assert!(has_minor(&Graph::cycle(6), &Graph::complete(4)).is_none());
    }

    #[test]
    fn validator_rejects_overlap_and_gaps() {
        let host = Graph::complete(4);
        let pat = Graph::complete(3);
        let set = |v: &[Vertex]| v.iter().copied().collect::<VertexSet>();
        let good = MinorEmbedding {
            branch_sets: [(1, set(&[1])), (2, set(&[2])), (3, set(&[3, 4]))].into(),
        };
        assert!(validate_minor_embedding(&host, &pat, &good));
        let overlap = MinorEmbedding {
            branch_sets: [(1, set(&[1, 2])), (2, set(&[2])), (3, set(&[3]))].into(),
        };
        assert!(!validate_minor_embedding(&host, &pat, &overlap));
        let missing = MinorEmbedding {
            branch_sets: [(1, set(&[1])), (2, set(&[2]))].into(),
        };
        assert!(!validate_minor_embedding(&host, &pat, &missing));
        let path = Graph::path(4);
        let split = MinorEmbedding {
            branch_sets: [(1, set(&[1, 3])), (2, set(&[2])), (3, set(&[4]))].into(),
        };
        assert!(!validate_minor_embedding(&path, &pat, &split));
    }

    #[test]
    fn budget_exhaustion_is_an_error() {
        let r = find_minor(&Graph::cycle(12), &Graph::complete(4), Some(10));
        assert_eq!(r, Err(Error::BudgetExceeded(10)));
    }

    #[test]
    fn negative_answers_are_deterministic() {
        let a = find_minor(&Graph::cycle(9), &Graph::complete(4), None).unwrap();
        let b = find_minor(&Graph::cycle(9), &Graph::complete(4), None).unwrap();
        assert!(a.embedding.is_none());
        assert_eq!(a, b);
    }

    #[test]
    fn empty_pattern_embeds() {
        let e = has_minor(&Graph::path(2), &Graph::new()).unwrap();
        assert!(e.branch_sets.is_empty());
    }
}
