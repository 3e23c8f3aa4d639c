//! Edge-set surgery: remove and add edges of a known cycle, then rebuild a
//! verified Hamilton path or cycle from the resulting edge set.
//!
//! All functions validate against the host graph and return an error string
//! describing the first inconsistency; callers surface these as recorded
//! construction failures rather than panicking.

use crate::graph::{Graph, Vertex};
use crate::search::{HamiltonCycle, HamiltonPath};
use std::collections::BTreeSet;
use thiserror::Error;

pub(crate) type EdgeSet = BTreeSet<(usize, usize)>;

/// What a surgery is expected to leave behind.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Expected {
    Cycle,
    /// A spanning path between these two vertices (order-insensitive).
    Path(Vertex, Vertex),
}

/// A spanning structure a surgery can start from or produce.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Structure {
    Cycle(HamiltonCycle),
    Path(HamiltonPath),
}

impl Structure {
    pub(crate) fn edges(&self, g: &Graph) -> Result<EdgeSet, String> {
        match self {
            Structure::Cycle(c) => seq_edges(g, c.seq(), true),
            Structure::Path(p) => seq_edges(g, p.seq(), false),
        }
    }
}

/// An edge-exchange step: remove edges from a base structure, add others,
/// and demand the stated result.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Surgery {
    pub remove: Vec<(Vertex, Vertex)>,
    pub add: Vec<(Vertex, Vertex)>,
    pub expected: Expected,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SurgeryError {
    /// The first violated requirement, in checking order: every removed edge
    /// lies on the base structure, every added edge is a graph edge absent
    /// from it, and the exchanged edge set forms the expected structure.
    #[error("surgery broken: {0}")]
    SurgeryBroken(String),
}

/// Perform `s` on `base`: remove `s.remove`, add `s.add`, rebuild and verify
/// the expected spanning cycle or path.
pub fn apply_surgery(g: &Graph, base: &Structure, s: &Surgery) -> Result<Structure, SurgeryError> {
    let broken = SurgeryError::SurgeryBroken;
    let edges = base.edges(g).map_err(broken)?;
    let after = surgery(g, &edges, &s.remove, &s.add).map_err(broken)?;
    match s.expected {
        Expected::Cycle => cycle_from_edges(g, &after).map(Structure::Cycle).map_err(broken),
        Expected::Path(x, y) => {
            path_from_edges(g, &after, x, y).map(Structure::Path).map_err(broken)
        }
    }
}

/// Dense-id pair for a graph edge, normalized `(min, max)`.
pub(crate) fn edge_id(g: &Graph, x: Vertex, y: Vertex) -> Result<(usize, usize), String> {
    if x == y {
        return Err(format!("degenerate edge {x}-{y}"));
    }
    let (a, b) = (g.id(x), g.id(y));
    if !g.has_edge(a, b) {
        return Err(format!("{x}-{y} is not an edge of the graph"));
    }
    Ok((a.min(b), a.max(b)))
}

/// Edge set of a vertex sequence (closed = also the wrap-around edge).
pub(crate) fn seq_edges(g: &Graph, seq: &[Vertex], closed: bool) -> Result<EdgeSet, String> {
    let mut out = EdgeSet::new();
    let last = if closed { seq.len() } else { seq.len().saturating_sub(1) };
    for i in 0..last {
        let e = edge_id(g, seq[i], seq[(i + 1) % seq.len()])?;
        if !out.insert(e) {
            return Err(format!("repeated edge {}-{}", seq[i], seq[(i + 1) % seq.len()]));
        }
    }
    Ok(out)
}

/// Apply a surgery: every `remove` must be present, every `add` must be a
/// graph edge not already present.
pub(crate) fn surgery(
    g: &Graph,
    base: &EdgeSet,
    remove: &[(Vertex, Vertex)],
    add: &[(Vertex, Vertex)],
) -> Result<EdgeSet, String> {
    let mut set = base.clone();
    for &(x, y) in remove {
        let e = edge_id(g, x, y)?;
        if !set.remove(&e) {
            return Err(format!("cannot remove {x}-{y}: not in the current edge set"));
        }
    }
    for &(x, y) in add {
        let e = edge_id(g, x, y)?;
        if !set.insert(e) {
            return Err(format!("cannot add {x}-{y}: already in the edge set"));
        }
    }
    Ok(set)
}

fn adjacency(g: &Graph, edges: &EdgeSet) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); g.n()];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    adj
}

fn walk(adj: &[Vec<usize>], start: usize) -> Vec<usize> {
    let mut seq = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    loop {
        let next = adj[cur].iter().copied().find(|&w| w != prev);
        match next {
            Some(w) if w != start => {
                seq.push(w);
                prev = cur;
                cur = w;
            }
            _ => break,
        }
    }
    seq
}

/// Rebuild a spanning cycle from an edge set where every vertex has degree 2.
pub(crate) fn cycle_from_edges(g: &Graph, edges: &EdgeSet) -> Result<HamiltonCycle, String> {
    let adj = adjacency(g, edges);
    for (v, nb) in adj.iter().enumerate() {
        if nb.len() != 2 {
            return Err(format!(
                "vertex {} has degree {} in the assembled edge set, expected 2",
                g.vertex(v),
                nb.len()
            ));
        }
    }
    let seq = walk(&adj, 0);
    if seq.len() != g.n() {
        return Err(format!(
            "assembled edges split into more than one cycle ({} of {} vertices reached)",
            seq.len(),
            g.n()
        ));
    }
    let vseq: Vec<Vertex> = seq.into_iter().map(|id| g.vertex(id)).collect();
    HamiltonCycle::verified(g, vseq).map_err(|e| e.to_string())
}

/// Split an edge set into two vertex-disjoint simple paths that together
/// span the graph, starting at the two given degree-one vertices.
pub(crate) fn two_paths_from_edges(
    g: &Graph,
    edges: &EdgeSet,
    s1: Vertex,
    s2: Vertex,
) -> Result<(Vec<Vertex>, Vec<Vertex>), String> {
    let adj = adjacency(g, edges);
    let (i1, i2) = (g.id(s1), g.id(s2));
    if i1 == i2 {
        return Err("identical start vertices".to_string());
    }
    let mut endpoints = 0usize;
    for (v, nb) in adj.iter().enumerate() {
        match nb.len() {
            1 => endpoints += 1,
            2 => {}
            d => {
                return Err(format!(
                    "vertex {} has degree {d} in the split edge set, expected 1 or 2",
                    g.vertex(v)
                ))
            }
        }
    }
    if endpoints != 4 {
        return Err(format!("{endpoints} path endpoints in the edge set, expected 4"));
    }
    if adj[i1].len() != 1 || adj[i2].len() != 1 {
        return Err("prescribed start vertices are not path endpoints".to_string());
    }
    let p1 = walk(&adj, i1);
    let p2 = walk(&adj, i2);
    if p1.len() + p2.len() != g.n() || p1.iter().any(|x| p2.contains(x)) {
        return Err("edge set does not split into two spanning paths from the given starts"
            .to_string());
    }
    Ok((
        p1.into_iter().map(|id| g.vertex(id)).collect(),
        p2.into_iter().map(|id| g.vertex(id)).collect(),
    ))
}

/// Rebuild a spanning path with prescribed endpoints from an edge set where
/// the endpoints have degree 1 and every other vertex degree 2.
pub(crate) fn path_from_edges(
    g: &Graph,
    edges: &EdgeSet,
    x: Vertex,
    y: Vertex,
) -> Result<HamiltonPath, String> {
    let adj = adjacency(g, edges);
    let (ix, iy) = (g.id(x), g.id(y));
    for (v, nb) in adj.iter().enumerate() {
        let want = if v == ix || v == iy { 1 } else { 2 };
        if nb.len() != want {
            return Err(format!(
                "vertex {} has degree {} in the assembled edge set, expected {}",
                g.vertex(v),
                nb.len(),
                want
            ));
        }
    }
    let seq = walk(&adj, ix);
    if seq.len() != g.n() {
        return Err(format!(
            "assembled edges do not form a single spanning path ({} of {} vertices reached)",
            seq.len(),
            g.n()
        ));
    }
    if *seq.last().expect("nonempty") != iy {
        return Err(format!(
            "assembled path ends at {}, expected {}",
            g.vertex(*seq.last().unwrap()),
            y
        ));
    }
    let vseq: Vec<Vertex> = seq.into_iter().map(|id| g.vertex(id)).collect();
    HamiltonPath::verified_between(g, vseq, x, y).map_err(|e| e.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spec::parse_spec;

    fn graph(text: &str) -> Graph {
        Graph::from_spec(&parse_spec(text).unwrap().to_bicirculant())
    }

    #[test]
    fn surgery_roundtrip_on_prism() {
        let g = graph("I 3 1 1");
        let c = crate::search::find_hamilton_cycle(&g, 100_000).found().unwrap();
        let base = seq_edges(&g, c.seq(), true).unwrap();
        let rebuilt = cycle_from_edges(&g, &base).unwrap();
        assert_eq!(rebuilt, c);
    }

    #[test]
    fn path_rebuild_detects_wrong_endpoint() {
        let g = graph("I 3 1 1");
        let c = crate::search::find_hamilton_cycle(&g, 100_000).found().unwrap();
        let mut edges = seq_edges(&g, c.seq(), true).unwrap();
        // Remove one cycle edge: a spanning path between its endpoints.
        let &(a, b) = edges.iter().next().unwrap();
        edges.remove(&(a, b));
        let (va, vb) = (g.vertex(a), g.vertex(b));
        assert!(path_from_edges(&g, &edges, va, vb).is_ok());
        // Any other endpoint pair must be rejected.
        let other = (0..g.n()).find(|&v| v != a && v != b).expect("more than two vertices");
        assert!(path_from_edges(&g, &edges, va, g.vertex(other)).is_err());
    }

    #[test]
    fn apply_surgery_cycle_to_path_and_back() {
        let g = graph("I 3 1 1");
        let c = crate::search::find_hamilton_cycle(&g, 100_000).found().unwrap();
        let (x, y) = (c.seq()[0], c.seq()[1]);
        // Removing one cycle edge leaves a spanning path between its ends.
        let cut = Surgery {
            remove: vec![(x, y)],
            add: vec![],
            expected: Expected::Path(x, y),
        };
        let path = apply_surgery(&g, &Structure::Cycle(c.clone()), &cut).unwrap();
        // Re-adding it restores a Hamilton cycle.
        let sew = Surgery { remove: vec![], add: vec![(x, y)], expected: Expected::Cycle };
        let back = apply_surgery(&g, &path, &sew).unwrap();
        assert_eq!(back, Structure::Cycle(c.clone()));
        // Precondition violations surface as SurgeryBroken.
        let bad = Surgery {
            remove: vec![(x, y), (x, y)],
            add: vec![],
            expected: Expected::Cycle,
        };
        assert!(matches!(
            apply_surgery(&g, &Structure::Cycle(c), &bad),
            Err(SurgeryError::SurgeryBroken(_))
        ));
    }

    #[test]
    fn surgery_rejects_missing_and_duplicate_edges() {
        let g = graph("I 3 1 1");
        let c = crate::search::find_hamilton_cycle(&g, 100_000).found().unwrap();
        let base = seq_edges(&g, c.seq(), true).unwrap();
        // The prism is cubic: each vertex has exactly one edge outside the
        // cycle, so some graph edge is absent from the cycle.
        let mut outside = None;
        for (a, b) in g.edges() {
            if !base.contains(&(a, b)) {
                outside = Some((g.vertex(a), g.vertex(b)));
                break;
            }
        }
        let (x, y) = outside.expect("cubic graph has non-cycle edges");
        assert!(surgery(&g, &base, &[(x, y)], &[]).is_err());
        let c0 = c.seq()[0];
        let c1 = c.seq()[1];
        assert!(surgery(&g, &base, &[], &[(c0, c1)]).is_err());
    }
}
