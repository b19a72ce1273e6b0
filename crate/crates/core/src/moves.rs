//! Delta-Y and Y-Delta moves and the isomorphism-deduplicated family closure.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;

use crate::canon::{canonical_form, CanonicalForm};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, MAX_VERTICES};

/// Replaces the triangle on `tri` by a new vertex (least unused label)
/// joined to its three corners.
pub fn delta_y(g: &Graph, tri: [Vertex; 3]) -> Result<Graph> {
    let [a, b, c] = tri;
    let distinct = a != b && b != c && a != c;
    if !distinct || !g.has_edge(a, b) || !g.has_edge(b, c) || !g.has_edge(a, c) {
        return Err(Error::NotATriangle(tri));
    }
    let x = g.next_free_label()?;
    let mut h = g.delete_edge(a, b)?.delete_edge(b, c)?.delete_edge(a, c)?;
    for v in tri {
        h.add_edge(x, v)?;
    }
    Ok(h)
}

/// Removes the degree-3 vertex `center` and joins its neighbours pairwise.
/// Pairs that are already adjacent stay single edges.
pub fn y_delta(g: &Graph, center: Vertex) -> Result<Graph> {
    if !g.contains_vertex(center) {
        return Err(Error::MissingVertex(center));
    }
    let degree = g.degree(center);
    if degree != 3 {
        return Err(Error::DegreeNotThree {
            vertex: center,
            degree,
        });
    }
    let nb: Vec<Vertex> = g.neighbors(center).iter().collect();
    let mut h = g.remove_vertex(center)?;
    h.add_edge(nb[0], nb[1])?;
    h.add_edge(nb[0], nb[2])?;
    h.add_edge(nb[1], nb[2])?;
    Ok(h)
}

/// Triangles `a < b < c`, lexicographic.
pub fn triangles(g: &Graph) -> Vec<[Vertex; 3]> {
    let mut out = Vec::new();
    for (a, b) in g.edges() {
        for c in g.neighbors(a).intersection(g.neighbors(b)) {
            if c > b {
                out.push([a, b, c]);
            }
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Move {
    DeltaY([Vertex; 3]),
    YDelta(Vertex),
}

impl Move {
    pub fn apply(&self, g: &Graph) -> Result<Graph> {
        match *self {
            Move::DeltaY(t) => delta_y(g, t),
            Move::YDelta(v) => y_delta(g, v),
        }
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Move::DeltaY([a, b, c]) => write!(f, "dY({a},{b},{c})"),
            Move::YDelta(v) => write!(f, "Yd({v})"),
        }
    }
}

/// What to do with a Y-Delta move whose corners already share edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CollapseRule {
    /// Apply it and keep the simplified graph, logging a collapse event.
    #[default]
    Simplify,
    /// Treat it as illegal.
    Skip,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClosureLimits {
    pub max_members: usize,
    pub max_order: usize,
    pub collapse: CollapseRule,
}

impl Default for ClosureLimits {
    fn default() -> Self {
        ClosureLimits {
            max_members: 100_000,
            max_order: MAX_VERTICES,
            collapse: CollapseRule::Simplify,
        }
    }
}

#[derive(Debug, Clone)]
pub struct FamilyMember {
    pub form: CanonicalForm,
    /// Moves from the seed. Each move is stated in the canonical labeling of
    /// the graph it is applied to.
    pub trace: Vec<Move>,
}

/// A Y-Delta move whose corners already shared edges, so the edge count dropped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CollapseEvent {
    pub from: CanonicalForm,
    pub center: Vertex,
    pub edges_lost: usize,
}

#[derive(Debug, Clone)]
pub struct FamilyClosure {
    /// Sorted by canonical form.
    pub members: Vec<FamilyMember>,
    /// Member count keyed by (order, size).
    pub stats: BTreeMap<(usize, usize), usize>,
    pub collapses: Vec<CollapseEvent>,
}

impl FamilyClosure {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, g: &Graph) -> bool {
        let form = canonical_form(g);
        self.members.binary_search_by(|m| m.form.cmp(&form)).is_ok()
    }

    /// Replays a trace from the seed and returns the final canonical form.
    pub fn replay(seed: &Graph, trace: &[Move]) -> Result<CanonicalForm> {
        let mut form = canonical_form(seed);
        for m in trace {
            form = canonical_form(&m.apply(&form.graph())?);
        }
        Ok(form)
    }
}

/// Breadth-first closure of `seed` under all legal moves, deduplicated by
/// canonical form. Exceeding a limit is an error, never a truncated answer.
pub fn family_closure(seed: &Graph, limits: ClosureLimits) -> Result<FamilyClosure> {
    let start = canonical_form(seed);
    if start.order > limits.max_order {
        return Err(Error::LimitExceeded {
            what: format!("seed order {} above {}", start.order, limits.max_order),
            members: 0,
            frontier: 1,
        });
    }
    let mut index: HashMap<CanonicalForm, usize> = HashMap::new();
    let mut members = vec![FamilyMember {
        form: start.clone(),
        trace: Vec::new(),
    }];
    index.insert(start, 0);
    let mut queue = VecDeque::from([0usize]);
    let mut collapses = Vec::new();

    while let Some(i) = queue.pop_front() {
        let g = members[i].form.graph();
        let mut moves: Vec<Move> = triangles(&g).into_iter().map(Move::DeltaY).collect();
        moves.extend(g.vertices().filter(|&v| g.degree(v) == 3).map(Move::YDelta));
        for mv in moves {
            if let Move::DeltaY(_) = mv {
                if g.order() + 1 > limits.max_order {
                    return Err(Error::LimitExceeded {
                        what: format!("member order would exceed {}", limits.max_order),
                        members: members.len(),
                        frontier: queue.len() + 1,
                    });
                }
            }
            let h = mv.apply(&g)?;
            if let Move::YDelta(center) = mv {
                if h.size() < g.size() {
                    if limits.collapse == CollapseRule::Skip {
                        continue;
                    }
                    collapses.push(CollapseEvent {
                        from: members[i].form.clone(),
                        center,
                        edges_lost: g.size() - h.size(),
                    });
                }
            }
            let form = canonical_form(&h);
            if index.contains_key(&form) {
                continue;
            }
            if members.len() >= limits.max_members {
                return Err(Error::LimitExceeded {
                    what: format!("more than {} members", limits.max_members),
                    members: members.len(),
                    frontier: queue.len() + 1,
                });
            }
            let mut trace = members[i].trace.clone();
            trace.push(mv);
            index.insert(form.clone(), members.len());
            queue.push_back(members.len());
            members.push(FamilyMember { form, trace });
        }
    }

    members.sort_by(|a, b| a.form.cmp(&b.form));
    let mut stats = BTreeMap::new();
    for m in &members {
        *stats.entry((m.form.order, m.form.edges.len())).or_insert(0) += 1;
    }
    Ok(FamilyClosure {
        members,
        stats,
        collapses,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::is_isomorphic;

    #[test]
    fn delta_y_on_triangle_gives_claw() {
        let claw = delta_y(&Graph::complete(3), [1, 2, 3]).unwrap();
        assert_eq!((claw.order(), claw.size()), (4, 3));
        assert_eq!(claw.degree(4), 3);
        assert!(delta_y(&Graph::path(3), [1, 2, 3]).is_err());
        assert!(delta_y(&Graph::complete(3), [1, 1, 2]).is_err());
    }

    #[test]
    fn y_delta_on_claw_gives_triangle() {
        let claw = Graph::from_edges([(1, 2), (1, 3), (1, 4)]).unwrap();
        let t = y_delta(&claw, 1).unwrap();
        assert!(is_isomorphic(&t, &Graph::complete(3)).is_some());
        assert_eq!(
            y_delta(&claw, 2),
            Err(Error::DegreeNotThree { vertex: 2, degree: 1 })
        );
    }

    #[test]
    fn round_trip_on_k6() {
        let k6 = Graph::complete(6);
        let h = delta_y(&k6, [2, 4, 6]).unwrap();
        assert_eq!(h.size(), 15);
        assert_eq!(y_delta(&h, 7).unwrap(), k6);
    }

    // K4 minus the edge 1-2, plus a centre 5 on the adjacent pair 3-4 and a pendant 6.
    #[test]
    fn y_delta_collapses_existing_edges() {
        let g = Graph::from_edges([(1, 3), (1, 4), (2, 3), (2, 4), (3, 4), (5, 3), (5, 4), (5, 6)]).unwrap();
        let h = y_delta(&g, 5).unwrap();
        assert_eq!(g.size(), 8);
        assert_eq!(h.size(), 7);
        assert!(h.has_edge(3, 6) && h.has_edge(4, 6));
    }

    #[test]
    fn skipping_collapses_keeps_edge_count() {
        let g = Graph::from_edges([(1, 3), (1, 4), (2, 3), (2, 4), (3, 4), (5, 3), (5, 4), (5, 6)]).unwrap();
        let loose = family_closure(&g, ClosureLimits::default()).unwrap();
        assert!(!loose.collapses.is_empty());
        let strict = family_closure(
            &g,
            ClosureLimits {
                collapse: CollapseRule::Skip,
                ..ClosureLimits::default()
            },
        )
        .unwrap();
        assert!(strict.collapses.is_empty());
        assert!(strict.members.iter().all(|m| m.form.edges.len() == 8));
        assert!(strict.len() < loose.len());
    }

    #[test]
    fn closure_of_triangle() {
        let c = family_closure(&Graph::complete(3), ClosureLimits::default()).unwrap();
        assert_eq!(c.len(), 2);
        assert!(c.contains(&Graph::from_edges([(1, 2), (1, 3), (1, 4)]).unwrap()));
        assert!(c.collapses.is_empty());
    }

    #[test]
    fn limits_are_errors() {
        let r = family_closure(
            &Graph::complete(6),
            ClosureLimits {
                max_members: 3,
                ..ClosureLimits::default()
            },
        );
        assert!(matches!(r, Err(Error::LimitExceeded { members: 3, .. })));
        let r = family_closure(
            &Graph::complete(6),
            ClosureLimits {
                max_members: 100,
                max_order: 7,
                ..ClosureLimits::default()
            },
        );
        assert!(matches!(r, Err(Error::LimitExceeded { .. })));
    }

    #[test]
    fn traces_replay() {
        let seed = Graph::complete(6);
        let c = family_closure(&seed, ClosureLimits::default()).unwrap();
        for m in &c.members {
            assert_eq!(FamilyClosure::replay(&seed, &m.trace).unwrap(), m.form);
        }
    }
}
