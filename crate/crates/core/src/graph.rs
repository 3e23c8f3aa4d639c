//! Realized bicirculant graphs: vertices, adjacency, edge kinds, exports.
//!
//! Vertices are `u_0..u_{m-1}` (outer) and `v_0..v_{m-1}` (inner). Dense ids
//! are `u_i -> i` and `v_i -> m + i`, so the outer side sorts first.

use crate::arith::min_residue;
use crate::spec::BicirculantSpec;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Side {
    Outer,
    Inner,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::Outer => write!(f, "u"),
            Side::Inner => write!(f, "v"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Vertex {
    pub side: Side,
    pub index: u64,
}

impl Vertex {
    pub fn u(index: u64) -> Self {
        Vertex { side: Side::Outer, index }
    }
    pub fn v(index: u64) -> Self {
        Vertex { side: Side::Inner, index }
    }
    /// Same vertex with the index shifted by `t` mod `m` (the rotation
    /// automorphism).
    pub fn shifted(self, t: u64, m: u64) -> Self {
        Vertex { side: self.side, index: (self.index + t) % m }
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.side, self.index)
    }
}

impl std::str::FromStr for Vertex {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (side, rest) = match s.as_bytes().first() {
            Some(b'u') => (Side::Outer, &s[1..]),
            Some(b'v') => (Side::Inner, &s[1..]),
            _ => return Err(format!("vertex must start with u or v: `{s}`")),
        };
        let index = rest
            .parse::<u64>()
            .map_err(|_| format!("bad vertex index in `{s}`"))?;
        Ok(Vertex { side, index })
    }
}

/// What generated an edge: an outer rim step, an inner rim step, or a spoke
/// offset. Steps are stored as the smaller of `±step`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum EdgeKind {
    Outer { step: u64 },
    Inner { step: u64 },
    Spoke { offset: u64 },
}

#[derive(Debug, Clone)]
pub struct Graph {
    pub spec: BicirculantSpec,
    /// Sorted adjacency lists over dense ids.
    adj: Vec<Vec<usize>>,
    /// Edge kinds keyed by (min_id, max_id).
    kinds: BTreeMap<(usize, usize), EdgeKind>,
}

impl Graph {
    /// Realize the graph described by `spec`. Rim steps equal to `m/2`
    /// generate each of their edges from both endpoints; the pair collapses
    /// to one simple edge.
    pub fn from_spec(spec: &BicirculantSpec) -> Self {
        let m = spec.m;
        let n = 2 * m as usize;
        let mut adj: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
        let mut kinds = BTreeMap::new();
        let mut add = |a: usize, b: usize, kind: EdgeKind, adj: &mut Vec<BTreeSet<usize>>| {
            if a == b {
                return; // cannot happen for valid specs; defensive
            }
            let key = (a.min(b), a.max(b));
            adj[a].insert(b);
            adj[b].insert(a);
            kinds.entry(key).or_insert(kind);
        };
        for i in 0..m {
            for &j in &spec.r {
                let a = i as usize;
                let b = ((i + j) % m) as usize;
                add(a, b, EdgeKind::Outer { step: min_residue(j, m) }, &mut adj);
            }
            for &j in &spec.t {
                let a = m as usize + i as usize;
                let b = m as usize + ((i + j) % m) as usize;
                add(a, b, EdgeKind::Inner { step: min_residue(j, m) }, &mut adj);
            }
            for &j in &spec.s {
                let a = i as usize;
                let b = m as usize + ((i + j) % m) as usize;
                add(a, b, EdgeKind::Spoke { offset: j }, &mut adj);
            }
        }
        Graph {
            spec: spec.clone(),
            adj: adj.into_iter().map(|s| s.into_iter().collect()).collect(),
            kinds,
        }
    }

    pub fn m(&self) -> u64 {
        self.spec.m
    }

    /// Total number of vertices (`2m`).
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn id(&self, v: Vertex) -> usize {
        match v.side {
            Side::Outer => v.index as usize,
            Side::Inner => self.m() as usize + v.index as usize,
        }
    }

    pub fn vertex(&self, id: usize) -> Vertex {
        let m = self.m() as usize;
        if id < m {
            Vertex::u(id as u64)
        } else {
            Vertex::v((id - m) as u64)
        }
    }

    pub fn neighbors(&self, id: usize) -> &[usize] {
        &self.adj[id]
    }

    pub fn degree(&self, id: usize) -> usize {
        self.adj[id].len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.kinds.contains_key(&(a.min(b), a.max(b)))
    }

    pub fn edge_kind(&self, a: usize, b: usize) -> Option<EdgeKind> {
        self.kinds.get(&(a.min(b), a.max(b))).copied()
    }

    /// All edges as (min_id, max_id), sorted.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.kinds.keys().copied()
    }

    pub fn edge_count(&self) -> usize {
        self.kinds.len()
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Connected components as sorted lists of dense ids, ordered by their
    /// smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut comp = Vec::new();
            let mut queue = VecDeque::from([start]);
            seen[start] = true;
            while let Some(x) = queue.pop_front() {
                comp.push(x);
                for &y in self.neighbors(x) {
                    if !seen[y] {
                        seen[y] = true;
                        queue.push_back(y);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// GraphViz DOT export.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph bicirculant {\n");
        for id in 0..self.n() {
            out.push_str(&format!("  {};\n", self.vertex(id)));
        }
        for (a, b) in self.edges() {
            out.push_str(&format!("  {} -- {};\n", self.vertex(a), self.vertex(b)));
        }
        out.push_str("}\n");
        out
    }

    /// Plain edge list, one `u0 v3`-style pair per line, sorted.
    pub fn to_edgelist(&self) -> String {
        let mut out = String::new();
        for (a, b) in self.edges() {
            out.push_str(&format!("{} {}\n", self.vertex(a), self.vertex(b)));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spec::{GrwSpec, IGraphSpec};

    #[test]
    fn petersen_graph_shape() {
        // I(5; 1, 2) is the Petersen graph: 10 vertices, 15 edges, cubic.
        let g = Graph::from_spec(&IGraphSpec::new(5, 1, 2).unwrap().to_bicirculant());
        assert_eq!(g.n(), 10);
        assert_eq!(g.edge_count(), 15);
        assert!((0..g.n()).all(|v| g.degree(v) == 3));
        assert!(g.is_connected());
        assert_eq!(g.edge_kind(g.id(Vertex::u(0)), g.id(Vertex::u(1))), Some(EdgeKind::Outer { step: 1 }));
        assert_eq!(g.edge_kind(g.id(Vertex::v(0)), g.id(Vertex::v(2))), Some(EdgeKind::Inner { step: 2 }));
        assert_eq!(g.edge_kind(g.id(Vertex::u(3)), g.id(Vertex::v(3))), Some(EdgeKind::Spoke { offset: 0 }));
    }

    #[test]
    fn rose_window_shape() {
        // 18 vertices, 4-regular, 36 edges.
        let g = Graph::from_spec(&GrwSpec::new(9, 1, 3, 2).unwrap().to_bicirculant());
        assert_eq!(g.n(), 18);
        assert!((0..g.n()).all(|v| g.degree(v) == 4));
        assert_eq!(g.edge_count(), 36);
        assert!(g.is_connected());
    }

    #[test]
    fn half_step_collapses_to_simple_edge() {
        // B(6; {3}, {0}, {}) has outer edges u_i u_{i+3} each generated twice.
        let spec = BicirculantSpec::new(6, [3], [0], []).unwrap();
        let g = Graph::from_spec(&spec);
        assert_eq!(g.n(), 12);
        // 3 outer edges + 6 spokes.
        assert_eq!(g.edge_count(), 9);
        assert_eq!(g.degree(g.id(Vertex::u(0))), 2);
        assert_eq!(g.degree(g.id(Vertex::v(0))), 1);
    }

    #[test]
    fn disconnected_spec_splits() {
        let spec = BicirculantSpec::new(6, [2, 4], [0, 2], [2, 4]).unwrap();
        let g = Graph::from_spec(&spec);
        let comps = g.components();
        assert_eq!(comps.len(), 2);
        assert!(comps.iter().all(|c| c.len() == 6));
    }

    #[test]
    fn k2_realizes() {
        let spec = BicirculantSpec::new(1, [], [0], []).unwrap();
        let g = Graph::from_spec(&spec);
        assert_eq!(g.n(), 2);
        assert_eq!(g.edge_count(), 1);
        assert!(g.is_connected());
    }

    #[test]
    fn exports_mention_vertices() {
        let g = Graph::from_spec(&IGraphSpec::new(3, 1, 1).unwrap().to_bicirculant());
        let dot = g.to_dot();
        assert!(dot.contains("u0 -- u1"));
        assert!(dot.contains("u0 -- v0"));
        let el = g.to_edgelist();
        assert!(el.lines().any(|l| l == "u0 v0"));
        assert_eq!(el.lines().count(), g.edge_count());
    }

    #[test]
    fn edge_counts_match_formula() {
        // For m/2-free specs: m|R|/2 + m|T|/2 + m|S| edges.
        for (m, r, s, t) in [(7u64, vec![2, 5], vec![0], vec![3, 4]), (9, vec![1, 8], vec![0, 2], vec![3, 6])] {
            let spec = BicirculantSpec::new(m, r.clone(), s.clone(), t.clone()).unwrap();
            let g = Graph::from_spec(&spec);
            let expect = (m as usize * r.len()) / 2 + (m as usize * t.len()) / 2 + m as usize * s.len();
            assert_eq!(g.edge_count(), expect);
        }
    }
}
