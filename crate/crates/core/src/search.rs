//! Exhaustive Hamilton-cycle and Hamilton-path search with pruning, plus
//! verified cycle/path value types.
//!
//! All searches are deterministic: children are explored lowest remaining
//! degree first (degree within the unvisited subgraph), ties broken by
//! (side, index). Budgets are counted in node expansions; `ProvedAbsent` is
//! returned only when the search space was exhausted within budget.

use crate::graph::{Graph, Vertex};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt;
use thiserror::Error;

/// Default node-expansion budget used by the command-line driver.
pub const DEFAULT_BUDGET: u64 = 5_000_000;

/// Guard: enumeration refuses graphs with more than this many vertices
/// unless forced.
pub const ENUMERATION_GUARD: usize = 24;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CycleError {
    #[error("vertex {0} repeats")]
    RepeatedVertex(Vertex),
    #[error("vertex {0} is missing")]
    MissingVertex(Vertex),
    #[error("consecutive vertices {a} and {b} (position {position}) are not adjacent")]
    NonEdge { position: usize, a: Vertex, b: Vertex },
    #[error("a cycle needs at least 3 vertices, got {0}")]
    CycleTooShort(usize),
    #[error("sequence covers {got} vertices, graph has {want}")]
    WrongLength { got: usize, want: usize },
    #[error("path endpoints are {got0}..{got1}, expected {want0}..{want1}")]
    WrongEndpoints { got0: Vertex, got1: Vertex, want0: Vertex, want1: Vertex },
    #[error("vertex {0} does not belong to the graph (index out of range)")]
    ForeignVertex(Vertex),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SearchError {
    #[error("graph has {n} vertices; enumeration is guarded at {guard} (use force to override)")]
    TooLarge { n: usize, guard: usize },
}

/// Outcome of a budgeted search.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum SearchOutcome<T> {
    Found(T),
    /// Budget exhausted before the space was covered.
    NotFoundWithinBudget { expanded: u64 },
    /// The whole search space was explored: no solution exists.
    ProvedAbsent { expanded: u64 },
}

impl<T> SearchOutcome<T> {
    pub fn found(self) -> Option<T> {
        match self {
            SearchOutcome::Found(t) => Some(t),
            _ => None,
        }
    }
}

fn tokens(seq: &[Vertex]) -> String {
    seq.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

/// Check an arbitrary vertex sequence as a Hamilton cycle of `g`.
///
/// Total over all inputs: never panics, and the error names the first
/// violated requirement (foreign vertex, repeat, missing vertex, length,
/// non-edge with its position, or a too-short sequence).
pub fn verify_cycle(g: &Graph, seq: &[Vertex]) -> Result<(), CycleError> {
    HamiltonCycle::verified(g, seq.to_vec()).map(|_| ())
}

/// Check an arbitrary vertex sequence as a Hamilton path of `g` with the
/// given (unordered) endpoints. Total like [`verify_cycle`].
pub fn verify_path(g: &Graph, seq: &[Vertex], x: Vertex, y: Vertex) -> Result<(), CycleError> {
    HamiltonPath::verified_between(g, seq.to_vec(), x, y).map(|_| ())
}

/// A verified Hamilton cycle, stored in canonical form: rotated to start at
/// the least vertex, oriented toward its smaller neighbor.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct HamiltonCycle {
    pub m: u64,
    seq: Vec<Vertex>,
}

impl HamiltonCycle {
    /// Verify `seq` as a Hamilton cycle of `g` and store it canonically.
    pub fn verified(g: &Graph, seq: Vec<Vertex>) -> Result<Self, CycleError> {
        if seq.len() < 3 {
            return Err(CycleError::CycleTooShort(seq.len()));
        }
        check_cover(g, &seq)?;
        for i in 0..seq.len() {
            let a = seq[i];
            let b = seq[(i + 1) % seq.len()];
            if !g.has_edge(g.id(a), g.id(b)) {
                return Err(CycleError::NonEdge { position: i, a, b });
            }
        }
        Ok(HamiltonCycle { m: g.m(), seq: canonical_rotation(seq) })
    }

    pub fn seq(&self) -> &[Vertex] {
        &self.seq
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }

    /// Image under the rotation automorphism `index ↦ index + t`.
    pub fn shifted(&self, t: u64) -> Self {
        let m = self.m;
        HamiltonCycle {
            m,
            seq: canonical_rotation(self.seq.iter().map(|v| v.shifted(t, m)).collect()),
        }
    }

    /// Undirected edge set over a graph's dense ids.
    pub fn edge_set(&self, g: &Graph) -> BTreeSet<(usize, usize)> {
        let mut out = BTreeSet::new();
        for i in 0..self.seq.len() {
            let a = g.id(self.seq[i]);
            let b = g.id(self.seq[(i + 1) % self.seq.len()]);
            out.insert((a.min(b), a.max(b)));
        }
        out
    }
}

impl fmt::Display for HamiltonCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", tokens(&self.seq))
    }
}

/// A verified Hamilton path (covers every vertex exactly once), stored in
/// construction order: `seq[0]` and `seq[last]` are the endpoints.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct HamiltonPath {
    pub m: u64,
    seq: Vec<Vertex>,
}

impl HamiltonPath {
    pub fn verified(g: &Graph, seq: Vec<Vertex>) -> Result<Self, CycleError> {
        check_cover(g, &seq)?;
        for i in 0..seq.len().saturating_sub(1) {
            let (a, b) = (seq[i], seq[i + 1]);
            if !g.has_edge(g.id(a), g.id(b)) {
                return Err(CycleError::NonEdge { position: i, a, b });
            }
        }
        Ok(HamiltonPath { m: g.m(), seq })
    }

    pub fn verified_between(
        g: &Graph,
        seq: Vec<Vertex>,
        x: Vertex,
        y: Vertex,
    ) -> Result<Self, CycleError> {
        let p = Self::verified(g, seq)?;
        let (s, e) = p.endpoints();
        if (s, e) == (x, y) || (s, e) == (y, x) {
            Ok(p)
        } else {
            Err(CycleError::WrongEndpoints { got0: s, got1: e, want0: x, want1: y })
        }
    }

    pub fn seq(&self) -> &[Vertex] {
        &self.seq
    }

    pub fn endpoints(&self) -> (Vertex, Vertex) {
        (self.seq[0], *self.seq.last().expect("paths are nonempty"))
    }

    pub fn shifted(&self, t: u64) -> Self {
        let m = self.m;
        HamiltonPath { m, seq: self.seq.iter().map(|v| v.shifted(t, m)).collect() }
    }

    pub fn reversed(&self) -> Self {
        let mut seq = self.seq.clone();
        seq.reverse();
        HamiltonPath { m: self.m, seq }
    }
}

impl fmt::Display for HamiltonPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", tokens(&self.seq))
    }
}

fn check_cover(g: &Graph, seq: &[Vertex]) -> Result<(), CycleError> {
    let n = g.n();
    let mut seen = vec![false; n];
    for &v in seq {
        if v.index >= g.m() {
            return Err(CycleError::ForeignVertex(v));
        }
        let id = g.id(v);
        if seen[id] {
            return Err(CycleError::RepeatedVertex(v));
        }
        seen[id] = true;
    }
    if seq.len() != n {
        if let Some(missing) = seen.iter().position(|&s| !s) {
            return Err(CycleError::MissingVertex(g.vertex(missing)));
        }
        return Err(CycleError::WrongLength { got: seq.len(), want: n });
    }
    Ok(())
}

/// Rotate to start at the least vertex and orient toward its smaller
/// neighbor (vertex order = (side, index), outer side first).
fn canonical_rotation(seq: Vec<Vertex>) -> Vec<Vertex> {
    let n = seq.len();
    let start = (0..n).min_by_key(|&i| seq[i]).expect("nonempty cycle");
    let mut rot: Vec<Vertex> = (0..n).map(|i| seq[(start + i) % n]).collect();
    if n > 2 && rot[1] > rot[n - 1] {
        rot[1..].reverse();
    }
    rot
}

struct Dfs<'a> {
    g: &'a Graph,
    visited: Vec<bool>,
    path: Vec<usize>,
    expanded: u64,
    scratch: Vec<bool>,
    queue: Vec<usize>,
}

impl<'a> Dfs<'a> {
    fn new(g: &'a Graph) -> Self {
        Dfs {
            g,
            visited: vec![false; g.n()],
            path: Vec::with_capacity(g.n()),
            expanded: 0,
            scratch: vec![false; g.n()],
            queue: Vec::with_capacity(g.n()),
        }
    }

    fn remaining_degree(&self, v: usize) -> usize {
        self.g.neighbors(v).iter().filter(|&&w| !self.visited[w]).count()
    }

    /// Unvisited neighbors of `head`, lowest remaining degree first, ties by id.
    fn candidates(&self, head: usize, exclude: Option<usize>) -> Vec<usize> {
        let mut cands: Vec<usize> = self
            .g
            .neighbors(head)
            .iter()
            .copied()
            .filter(|&w| !self.visited[w] && Some(w) != exclude)
            .collect();
        cands.sort_by_key(|&w| (self.remaining_degree(w), w));
        cands
    }

    /// All unvisited vertices (and `extra`, if given) reachable from `head`
    /// through unvisited vertices?
    fn remaining_connected(&mut self, head: usize, extra: Option<usize>) -> bool {
        self.scratch.iter_mut().for_each(|x| *x = false);
        self.queue.clear();
        self.scratch[head] = true;
        self.queue.push(head);
        let mut reached = 0usize;
        let mut reached_extra = false;
        let mut qi = 0;
        while qi < self.queue.len() {
            let x = self.queue[qi];
            qi += 1;
            for &w in self.g.neighbors(x) {
                if Some(w) == extra {
                    reached_extra = true;
                }
                if !self.visited[w] && !self.scratch[w] {
                    self.scratch[w] = true;
                    self.queue.push(w);
                    reached += 1;
                }
            }
        }
        let unvisited = self.visited.iter().filter(|&&v| !v).count();
        reached == unvisited && (extra.is_none() || reached_extra || unvisited == 0)
    }
}

/// Search for a Hamilton cycle. Deterministic; starts at the least vertex.
pub fn find_hamilton_cycle(g: &Graph, budget: u64) -> SearchOutcome<HamiltonCycle> {
    let n = g.n();
    if n < 3 {
        return SearchOutcome::ProvedAbsent { expanded: 0 };
    }
    let start = 0usize;
    let mut st = Dfs::new(g);
    st.visited[start] = true;
    st.path.push(start);
    let mut frames: Vec<(Vec<usize>, usize)> = vec![(st.candidates(start, None), 0)];
    while let Some(frame) = frames.last_mut() {
        if frame.1 >= frame.0.len() {
            frames.pop();
            let popped = st.path.pop().expect("path tracks frames");
            st.visited[popped] = false;
            continue;
        }
        let next = frame.0[frame.1];
        frame.1 += 1;
        st.expanded += 1;
        if st.expanded > budget {
            return SearchOutcome::NotFoundWithinBudget { expanded: st.expanded };
        }
        st.visited[next] = true;
        st.path.push(next);
        if st.path.len() == n {
            if g.has_edge(next, start) {
                let seq = st.path.iter().map(|&id| g.vertex(id)).collect();
                return SearchOutcome::Found(
                    HamiltonCycle::verified(g, seq).expect("search result verifies"),
                );
            }
            st.visited[next] = false;
            st.path.pop();
            continue;
        }
        if cycle_viable(&mut st, next, start) {
            let cands = st.candidates(next, None);
            frames.push((cands, 0));
        } else {
            st.visited[next] = false;
            st.path.pop();
        }
    }
    SearchOutcome::ProvedAbsent { expanded: st.expanded }
}

fn cycle_viable(st: &mut Dfs, head: usize, start: usize) -> bool {
    // Every unvisited vertex still needs two usable connections
    // (unvisited neighbors, the head, or the start for the closing edge).
    for v in 0..st.g.n() {
        if st.visited[v] {
            continue;
        }
        let mut slots = 0;
        for &w in st.g.neighbors(v) {
            if !st.visited[w] || w == head || w == start {
                slots += 1;
                if slots == 2 {
                    break;
                }
            }
        }
        if slots < 2 {
            return false;
        }
    }
    // The cycle must come back to the start through an unvisited vertex.
    if !st.g.neighbors(start).iter().any(|&w| !st.visited[w]) {
        return false;
    }
    st.remaining_connected(head, None)
}

/// Search for a Hamilton path from `x` to `y` (`x ≠ y`).
pub fn find_hamilton_path(
    g: &Graph,
    x: Vertex,
    y: Vertex,
    budget: u64,
) -> SearchOutcome<HamiltonPath> {
    let n = g.n();
    let (sx, sy) = (g.id(x), g.id(y));
    if sx == sy || n < 2 {
        return SearchOutcome::ProvedAbsent { expanded: 0 };
    }
    let mut st = Dfs::new(g);
    st.visited[sx] = true;
    st.path.push(sx);
    let mut frames: Vec<(Vec<usize>, usize)> =
        vec![(path_candidates(&st, sx, sy, n), 0)];
    while let Some(frame) = frames.last_mut() {
        if frame.1 >= frame.0.len() {
            frames.pop();
            let popped = st.path.pop().expect("path tracks frames");
            st.visited[popped] = false;
            continue;
        }
        let next = frame.0[frame.1];
        frame.1 += 1;
        st.expanded += 1;
        if st.expanded > budget {
            return SearchOutcome::NotFoundWithinBudget { expanded: st.expanded };
        }
        st.visited[next] = true;
        st.path.push(next);
        if st.path.len() == n {
            debug_assert_eq!(next, sy);
            let seq: Vec<Vertex> = st.path.iter().map(|&id| g.vertex(id)).collect();
            return SearchOutcome::Found(
                HamiltonPath::verified_between(g, seq, x, y).expect("search result verifies"),
            );
        }
        if path_viable(&mut st, next, sy) {
            frames.push((path_candidates(&st, next, sy, n), 0));
        } else {
            st.visited[next] = false;
            st.path.pop();
        }
    }
    SearchOutcome::ProvedAbsent { expanded: st.expanded }
}

fn path_candidates(st: &Dfs, head: usize, target: usize, n: usize) -> Vec<usize> {
    // The target may only be entered as the very last vertex.
    let before_last = st.path.len() == n - 1;
    st.candidates(head, if before_last { None } else { Some(target) })
}

fn path_viable(st: &mut Dfs, head: usize, target: usize) -> bool {
    for v in 0..st.g.n() {
        if st.visited[v] || v == target {
            continue;
        }
        let mut slots = 0;
        for &w in st.g.neighbors(v) {
            if !st.visited[w] || w == head {
                slots += 1;
                if slots == 2 {
                    break;
                }
            }
        }
        if slots < 2 {
            return false;
        }
    }
    // The target still needs one usable connection.
    let ok_target = st
        .g
        .neighbors(target)
        .iter()
        .any(|&w| !st.visited[w] || w == head);
    ok_target && st.remaining_connected(head, None)
}

/// Result of exhaustive cycle enumeration.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Enumeration {
    pub cycles: Vec<HamiltonCycle>,
    pub truncated: bool,
    pub expanded: u64,
}

/// Enumerate all Hamilton cycles in canonical form. Guarded to graphs of at
/// most [`ENUMERATION_GUARD`] vertices unless `force` is set; stops early at
/// `cap` distinct cycles (setting `truncated`).
pub fn enumerate_hamilton_cycles(
    g: &Graph,
    cap: usize,
    force: bool,
) -> Result<Enumeration, SearchError> {
    let n = g.n();
    if n > ENUMERATION_GUARD && !force {
        return Err(SearchError::TooLarge { n, guard: ENUMERATION_GUARD });
    }
    let mut found: BTreeSet<HamiltonCycle> = BTreeSet::new();
    let mut truncated = false;
    let mut expanded = 0u64;
    if n >= 3 {
        let start = 0usize;
        let mut st = Dfs::new(g);
        st.visited[start] = true;
        st.path.push(start);
        let mut frames: Vec<(Vec<usize>, usize)> = vec![(st.candidates(start, None), 0)];
        'outer: while let Some(frame) = frames.last_mut() {
            if frame.1 >= frame.0.len() {
                frames.pop();
                let popped = st.path.pop().expect("path tracks frames");
                st.visited[popped] = false;
                continue;
            }
            let next = frame.0[frame.1];
            frame.1 += 1;
            expanded += 1;
            st.visited[next] = true;
            st.path.push(next);
            if st.path.len() == n {
                if g.has_edge(next, start) {
                    let seq = st.path.iter().map(|&id| g.vertex(id)).collect();
                    let cycle =
                        HamiltonCycle::verified(g, seq).expect("enumeration result verifies");
                    if !found.contains(&cycle) && found.len() == cap {
                        truncated = true;
                        break 'outer;
                    }
                    found.insert(cycle);
                }
                st.visited[next] = false;
                st.path.pop();
                continue;
            }
            if cycle_viable(&mut st, next, start) {
                frames.push((st.candidates(next, None), 0));
            } else {
                st.visited[next] = false;
                st.path.pop();
            }
        }
    }
    Ok(Enumeration { cycles: found.into_iter().collect(), truncated, expanded })
}

/// Find a Hamilton cycle of `I(m; a, b)` that uses all `m` spokes (vertices
/// alternate between the two rims). Such a cycle visits rim indices in a
/// sequence `x_0 = 0, x_1, ..., x_{m-1}` where consecutive indices differ by
/// `±b` at even positions and `±a` at odd positions (closing with `±a`).
/// Returns the first cycle in deterministic order, or `None` if none exists.
pub fn find_alternating_cycle(m: u64, a: u64, b: u64) -> Option<HamiltonCycle> {
    if m % 2 != 0 || m < 4 {
        return None;
    }
    let steps = |p: u64| -> Vec<u64> {
        let mut s = vec![p % m, (m - p % m) % m];
        s.sort_unstable();
        s.dedup();
        s
    };
    let (sa, sb) = (steps(a), steps(b));
    let mut xs: Vec<u64> = vec![0];
    let mut used = vec![false; m as usize];
    used[0] = true;
    // Depth-first over index sequences.
    struct Rec<'a> {
        m: u64,
        sa: &'a [u64],
        sb: &'a [u64],
    }
    impl<'a> Rec<'a> {
        fn run(&self, xs: &mut Vec<u64>, used: &mut [bool]) -> bool {
            let j = xs.len();
            if j == self.m as usize {
                let d = (xs[0] + self.m - xs[j - 1]) % self.m;
                return self.sa.contains(&d) || self.sa.contains(&((self.m - d) % self.m));
            }
            let choices = if j % 2 == 1 { self.sb } else { self.sa };
            // Position j is reached by a step from x_{j-1}: inner steps occur
            // between even and odd positions, outer steps close odd to even.
            for &d in choices {
                let nx = (xs[j - 1] + d) % self.m;
                if !used[nx as usize] {
                    used[nx as usize] = true;
                    xs.push(nx);
                    if self.run(xs, used) {
                        return true;
                    }
                    xs.pop();
                    used[nx as usize] = false;
                }
            }
            false
        }
    }
    let rec = Rec { m, sa: &sa, sb: &sb };
    if !rec.run(&mut xs, &mut used) {
        return None;
    }
    let mut seq = Vec::with_capacity(2 * m as usize);
    for (j, &x) in xs.iter().enumerate() {
        if j % 2 == 0 {
            seq.push(Vertex::u(x));
            seq.push(Vertex::v(x));
        } else {
            seq.push(Vertex::v(x));
            seq.push(Vertex::u(x));
        }
    }
    let spec = crate::spec::BicirculantSpec::from_reps(m, [a], [0], [b]).ok()?;
    let g = Graph::from_spec(&spec);
    HamiltonCycle::verified(&g, seq).ok()
}
