//! Hamilton cycles in generalized rose window graphs.
//!
//! A generalized rose window graph `R(m; a, b, c)` is the bicirculant
//! `B(m; {±a}, {0, c}, {±b})`: an outer rim of step `a`, an inner rim of step
//! `b`, and spokes of types `0` and `c`.  Deleting the `c`-spokes leaves
//! `delta = gcd(m, a, b)` vertex-disjoint copies of the connected I-graph
//! `I(m0; a0, b0)` with `m0 = m / delta`, `a0 = (a/delta) mod m0`,
//! `b0 = (b/delta) mod m0`; on a connected spec (`gcd(delta, c) = 1`) the
//! `c`-spokes string those copies into a single necklace.
//!
//! Every construction here works in those necklace coordinates: copy `i`
//! (`0 ≤ i ≤ lambda = delta - 1`) is filled with a spanning path system taken
//! from a usable form of a quotient Hamilton cycle — or, for the
//! Hamilton-less Petersen-family quotients, from spanning paths — and
//! `c`-spokes stitch consecutive copies together.  The assembled edge set is
//! checked to be a single spanning cycle before anything is returned.
//!
//! [`hamilton_cycle_grw`] routes a connected spec to the construction that
//! applies and returns a [`Certificate`]: the route taken, the parameters
//! that pin it down, and the verified cycle.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::gcd_with_all;
use crate::assembly::{self, apply_surgery, EdgeSet, Expected, Structure, Surgery};
use crate::family::classify_family;
use crate::graph::{Graph, Side, Vertex};
use crate::igraph::{self, FourHookedData, SpecialSubpaths, TwoHookedKind, UsableError, UsableForm};
use crate::search::{find_hamilton_cycle, find_hamilton_path, HamiltonCycle, HamiltonPath, SearchOutcome};
use crate::spec::{GrwSpec, IGraphSpec};

// ---------------------------------------------------------------------------
// Errors, routes, certificates
// ---------------------------------------------------------------------------

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GrwError {
    #[error("the graph is disconnected (gcd(m, a, b, c) > 1)")]
    Disconnected,
    #[error("search budget exhausted during {stage}")]
    SearchBudget { stage: &'static str },
    #[error("the supplied cycle is not alternating")]
    NotAlternating,
    #[error("an alternating layer system needs an even quotient rim")]
    OddM0,
    #[error("witness is unusable: {detail}")]
    WitnessInvalid { detail: String },
    #[error("the source cycle has no outer rim edge")]
    MissingOuterEdge,
    #[error("the source cycle has no inner rim edge")]
    MissingInnerEdge,
    #[error("subpath system is inconsistent: {detail}")]
    PathsInconsistent { detail: String },
    #[error("the cycle's designated vertices form an elusive pattern; resolve it first")]
    ElusiveInput,
    #[error("layer wiring failed: {detail}")]
    WiringFailed { detail: String },
    #[error("no usable strand column exists in the quotient")]
    NoValidX,
    #[error("the construction needs at least two copies of the quotient (gcd(m, a, b) > 1)")]
    NoLayers,
    #[error("no construction applies: {detail}")]
    Unconstructible { detail: String },
}

/// Construction route a certificate came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Route {
    /// `gcd(m, a, b) = 1`: the 0-spoke I-graph subgraph is connected and
    /// Hamiltonian; its cycle is reused unchanged.
    ConnectedH,
    /// `gcd(m, a, b) = 1` but the 0-spoke subgraph is a Hamilton-less member
    /// of the Petersen family: a spanning path of the subgraph is closed by
    /// one `c`-spoke.
    ConnectedHPetersenPath,
    /// Layered construction from an alternating quotient cycle.
    AlternatingConstruction,
    /// Layered construction from a two-hooked witness path.
    TwoHookedConstruction,
    /// Layered construction from the congruence special-case subpaths.
    SpecialSubpathsConstruction,
    /// Layered construction from a standard four-hooked quotient cycle.
    FourHookedConstruction,
    /// Layered strand construction for Hamilton-less Petersen-family
    /// quotients.
    PetersenExceptionConstruction,
}

impl Route {
    pub fn name(&self) -> &'static str {
        match self {
            Route::ConnectedH => "connected-h",
            Route::ConnectedHPetersenPath => "connected-h-petersen-path",
            Route::AlternatingConstruction => "alternating-construction",
            Route::TwoHookedConstruction => "two-hooked-construction",
            Route::SpecialSubpathsConstruction => "special-subpaths-construction",
            Route::FourHookedConstruction => "four-hooked-construction",
            Route::PetersenExceptionConstruction => "petersen-exception-construction",
        }
    }
}

/// A Hamilton cycle for a generalized rose window graph together with the
/// construction route and the parameters that pin it down.  The cycle is
/// verified against the graph before the certificate is returned.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub spec: GrwSpec,
    pub route: Route,
    pub params: BTreeMap<String, String>,
    pub cycle: HamiltonCycle,
}

// ---------------------------------------------------------------------------
// Necklace coordinates
// ---------------------------------------------------------------------------

/// Shared coordinates for the layered constructions.
///
/// Copy `i` of the quotient occupies the global indices congruent to `i*c`
/// modulo `delta`; column `q` of copy `i` is global index
/// `(q*delta + i*c) mod m`.  Since `gcd(delta, c) = 1` on connected specs,
/// `(i, q) -> (q*delta + i*c) mod m` is a bijection, so distinct copies are
/// vertex-disjoint.
#[derive(Debug, Clone)]
pub struct ConstructionContext {
    pub spec: GrwSpec,
    pub graph: Graph,
    /// `gcd(m, a, b)`: the number of copies of the quotient.
    pub delta: u64,
    /// `delta - 1`: the index of the last copy.
    pub lambda: u64,
    /// Order of the quotient rim, `m / delta`.
    pub m0: u64,
    pub quotient: IGraphSpec,
    pub quotient_graph: Graph,
    /// `c` reduced into quotient columns, `c mod m0`.
    pub cq: u64,
}

impl ConstructionContext {
    pub fn new(spec: &GrwSpec) -> Result<Self, GrwError> {
        let GrwSpec { m, a, b, c } = *spec;
        if gcd_with_all(m, [a, b, c]) != 1 {
            return Err(GrwError::Disconnected);
        }
        let delta = gcd_with_all(m, [a, b]);
        let m0 = m / delta;
        let quotient = IGraphSpec::new(m0, (a / delta) % m0, (b / delta) % m0).map_err(|e| {
            GrwError::Unconstructible { detail: format!("quotient spec is invalid: {e}") }
        })?;
        Ok(ConstructionContext {
            spec: *spec,
            graph: Graph::from_spec(&spec.to_bicirculant()),
            delta,
            lambda: delta - 1,
            m0,
            quotient,
            quotient_graph: Graph::from_spec(&quotient.to_bicirculant()),
            cq: c % m0,
        })
    }

    /// Global vertex for column `w.index` of copy `layer`.  `layer` may be
    /// `lambda + 1`, which wraps around to copy 0 with the column advanced by
    /// `cq`; the wrap spokes rely on that.
    pub fn global(&self, layer: u64, w: Vertex) -> Vertex {
        let m = self.spec.m as u128;
        let idx =
            (w.index as u128 * self.delta as u128 + layer as u128 * self.spec.c as u128) % m;
        Vertex { side: w.side, index: idx as u64 }
    }

    /// The `c`-spoke from `u` in copy `layer` down to `v` in the next copy,
    /// at quotient column `q`.
    fn c_spoke(&self, layer: u64, q: u64) -> (Vertex, Vertex) {
        (self.global(layer, Vertex::u(q)), self.global(layer + 1, Vertex::v(q)))
    }

    /// Add the consecutive edges of a quotient vertex sequence, embedded into
    /// the given copy.
    fn add_layer_seq(&self, set: &mut EdgeSet, layer: u64, seq: &[Vertex]) -> Result<(), String> {
        let mapped: Vec<Vertex> = seq.iter().map(|&w| self.global(layer, w)).collect();
        add_seq(&self.graph, set, &mapped)
    }

    /// Add every edge of a quotient edge set, embedded into the given copy.
    fn add_layer_edges(
        &self,
        set: &mut EdgeSet,
        layer: u64,
        edges: &EdgeSet,
    ) -> Result<(), String> {
        for &(x, y) in edges {
            let a = self.global(layer, self.quotient_graph.vertex(x));
            let b = self.global(layer, self.quotient_graph.vertex(y));
            add_edge(&self.graph, set, a, b)?;
        }
        Ok(())
    }

    fn add_c_spoke(&self, set: &mut EdgeSet, layer: u64, q: u64) -> Result<(), String> {
        let (x, y) = self.c_spoke(layer, q);
        add_edge(&self.graph, set, x, y)
    }

    fn finish(&self, set: EdgeSet) -> Result<HamiltonCycle, GrwError> {
        assembly::cycle_from_edges(&self.graph, &set)
            .map_err(|detail| GrwError::WiringFailed { detail })
    }
}

fn add_edge(g: &Graph, set: &mut EdgeSet, x: Vertex, y: Vertex) -> Result<(), String> {
    let id = assembly::edge_id(g, x, y)?;
    if !set.insert(id) {
        return Err(format!("edge {x}-{y} added twice"));
    }
    Ok(())
}

fn add_seq(g: &Graph, set: &mut EdgeSet, seq: &[Vertex]) -> Result<(), String> {
    for w in seq.windows(2) {
        add_edge(g, set, w[0], w[1])?;
    }
    Ok(())
}

fn shifted_cols(seq: &[Vertex], t: u64, m0: u64) -> Vec<Vertex> {
    seq.iter().map(|w| w.shifted(t, m0)).collect()
}

/// Index `k` of the first consecutive pair `seq[k], seq[k+1]` on `side`.
fn find_side_edge(seq: &[Vertex], side: Side) -> Option<usize> {
    (0..seq.len().saturating_sub(1)).find(|&i| seq[i].side == side && seq[i + 1].side == side)
}

fn kind_name(kind: TwoHookedKind) -> &'static str {
    match kind {
        TwoHookedKind::InnerEnds => "inner-ends",
        TwoHookedKind::OuterEnds => "outer-ends",
    }
}

// ---------------------------------------------------------------------------
// Alternating construction
// ---------------------------------------------------------------------------

/// Build a Hamilton cycle from an alternating quotient cycle (one that uses
/// every 0-spoke).  Needs an even quotient rim and at least two copies.
///
/// The alternating cycle's inner rim edges go to copy 0 and its outer rim
/// edges to the last copy; every 0-spoke is kept in every copy, and all `m0`
/// `c`-spokes are inserted at every copy boundary (no wrap spokes).  Each
/// column then climbs the necklace on the spokes, and the rim edges at the
/// two ends chain neighbouring columns exactly as the alternating cycle did,
/// closing a single tour.
pub fn alternating_construction(
    ctx: &ConstructionContext,
    alternating: &HamiltonCycle,
) -> Result<HamiltonCycle, GrwError> {
    if ctx.lambda == 0 {
        return Err(GrwError::NoLayers);
    }
    if ctx.m0 % 2 != 0 {
        return Err(GrwError::OddM0);
    }
    let gq = &ctx.quotient_graph;
    if alternating.seq().len() != 2 * ctx.m0 as usize {
        return Err(GrwError::WitnessInvalid {
            detail: format!(
                "cycle covers {} vertices, the quotient has {}",
                alternating.seq().len(),
                2 * ctx.m0
            ),
        });
    }
    let edges = assembly::seq_edges(gq, alternating.seq(), true)
        .map_err(|detail| GrwError::WitnessInvalid { detail })?;
    let mut inner_rim = EdgeSet::new();
    let mut outer_rim = EdgeSet::new();
    let mut spokes = 0usize;
    for &(x, y) in &edges {
        match (gq.vertex(x).side, gq.vertex(y).side) {
            (Side::Outer, Side::Outer) => {
                outer_rim.insert((x, y));
            }
            (Side::Inner, Side::Inner) => {
                inner_rim.insert((x, y));
            }
            _ => spokes += 1,
        }
    }
    if spokes != ctx.m0 as usize {
        return Err(GrwError::NotAlternating);
    }
    let wiring = |detail: String| GrwError::WiringFailed { detail };
    let mut set = EdgeSet::new();
    ctx.add_layer_edges(&mut set, 0, &inner_rim).map_err(wiring)?;
    ctx.add_layer_edges(&mut set, ctx.lambda, &outer_rim).map_err(wiring)?;
    for i in 0..=ctx.lambda {
        for q in 0..ctx.m0 {
            ctx.add_layer_seq(&mut set, i, &[Vertex::u(q), Vertex::v(q)]).map_err(wiring)?;
        }
    }
    for i in 0..ctx.lambda {
        for q in 0..ctx.m0 {
            ctx.add_c_spoke(&mut set, i, q).map_err(wiring)?;
        }
    }
    ctx.finish(set)
}

// ---------------------------------------------------------------------------
// Two-hooked construction
// ---------------------------------------------------------------------------

/// Spanning path of the quotient obtained by deleting the source cycle's
/// first rim edge on `side` and rotating so its endpoints sit at columns 0
/// and `step`.
fn companion_path(
    ctx: &ConstructionContext,
    source: &HamiltonCycle,
    side: Side,
    step: u64,
) -> Result<HamiltonPath, GrwError> {
    let gq = &ctx.quotient_graph;
    let m0 = ctx.m0;
    let seq = source.seq();
    if seq.len() != 2 * m0 as usize {
        return Err(GrwError::WitnessInvalid {
            detail: format!("source cycle covers {} vertices, expected {}", seq.len(), 2 * m0),
        });
    }
    let missing = || match side {
        Side::Outer => GrwError::MissingOuterEdge,
        Side::Inner => GrwError::MissingInnerEdge,
    };
    let n = seq.len();
    let k = (0..n)
        .find(|&i| seq[i].side == side && seq[(i + 1) % n].side == side)
        .ok_or_else(missing)?;
    let (x, y) = (seq[k], seq[(k + 1) % n]);
    let invalid = |detail: String| GrwError::WitnessInvalid { detail };
    let base = assembly::seq_edges(gq, seq, true).map_err(invalid)?;
    let cut = assembly::surgery(gq, &base, &[(x, y)], &[]).map_err(invalid)?;
    let path = assembly::path_from_edges(gq, &cut, x, y).map_err(invalid)?;
    // Rim edges on `side` differ by exactly `step`, so one endpoint is the
    // other plus `step`; rotate that one down to column 0.
    let lo = if (x.index + step) % m0 == y.index { x.index } else { y.index };
    let shifted = path.shifted((m0 - lo) % m0);
    let want_a = Vertex { side, index: 0 };
    let want_b = Vertex { side, index: step };
    let (p, q) = shifted.endpoints();
    if (p, q) != (want_a, want_b) && (p, q) != (want_b, want_a) {
        return Err(invalid(format!(
            "companion endpoints {p}, {q}; expected {want_a}, {want_b}"
        )));
    }
    Ok(shifted)
}

/// Build a Hamilton cycle from a two-hooked witness: a spanning path of the
/// quotient between `v_0` and `v_{a0}` (inner ends) or between `u_0` and
/// `u_{b0}` (outer ends).
///
/// The witness fills the copy at one end of the necklace.  A companion path
/// with the matching opposite-side endpoints — the source cycle minus one rim
/// edge — fills the other end.  Middle copies hold the two halves of the
/// witness split at its first rim edge on the companion side, shifted so the
/// loose columns chain from copy to copy, and two `c`-spokes per boundary
/// close the tour.
pub fn two_hooked_construction(
    ctx: &ConstructionContext,
    witness: &HamiltonPath,
    kind: TwoHookedKind,
    source: &HamiltonCycle,
) -> Result<HamiltonCycle, GrwError> {
    if ctx.lambda == 0 {
        return Err(GrwError::NoLayers);
    }
    let m0 = ctx.m0;
    let lam = ctx.lambda;
    let (step, anchor_side, cut_side) = match kind {
        TwoHookedKind::InnerEnds => (ctx.quotient.a, Side::Inner, Side::Outer),
        TwoHookedKind::OuterEnds => (ctx.quotient.b, Side::Outer, Side::Inner),
    };
    // Normalize the witness to run from the column-0 end.
    let anchor = Vertex { side: anchor_side, index: 0 };
    let far = Vertex { side: anchor_side, index: step };
    let w = match witness.endpoints() {
        (p, q) if p == anchor && q == far => witness.clone(),
        (p, q) if p == far && q == anchor => witness.reversed(),
        (p, q) => {
            return Err(GrwError::WitnessInvalid {
                detail: format!("witness endpoints {p}, {q}; expected {anchor}, {far}"),
            })
        }
    };
    if w.seq().len() != 2 * m0 as usize {
        return Err(GrwError::WitnessInvalid {
            detail: format!("witness covers {} vertices, expected {}", w.seq().len(), 2 * m0),
        });
    }
    let companion = companion_path(ctx, source, cut_side, step)?;
    let seq = w.seq();
    let wiring = |detail: String| GrwError::WiringFailed { detail };
    let mut set = EdgeSet::new();
    match kind {
        TwoHookedKind::InnerEnds => {
            // Companion (outer ends) in copy 0; witness pieces above it.
            ctx.add_layer_seq(&mut set, 0, companion.seq()).map_err(wiring)?;
            ctx.add_c_spoke(&mut set, 0, 0).map_err(wiring)?;
            ctx.add_c_spoke(&mut set, 0, step).map_err(wiring)?;
            if lam == 1 {
                ctx.add_layer_seq(&mut set, 1, seq).map_err(wiring)?;
            } else {
                let k = find_side_edge(seq, Side::Outer).ok_or(GrwError::MissingOuterEdge)?;
                let (s, t) = (seq[k].index, seq[k + 1].index);
                let p1 = &seq[..=k];
                let p2 = &seq[k + 1..];
                // The split's loose columns advance by `d` per copy: the one
                // of `s`, `t` that is the other plus `step` stays the lower
                // spoke column of each boundary.
                let d = if (s + step) % m0 == t { s } else { t };
                let mut sigma = vec![0u64; lam as usize + 1];
                for i in 1..lam as usize {
                    sigma[i + 1] = (sigma[i] + d) % m0;
                }
                for i in 1..lam {
                    let s_i = sigma[i as usize];
                    ctx.add_layer_seq(&mut set, i, &shifted_cols(p1, s_i, m0)).map_err(wiring)?;
                    ctx.add_layer_seq(&mut set, i, &shifted_cols(p2, s_i, m0)).map_err(wiring)?;
                    ctx.add_c_spoke(&mut set, i, (s + s_i) % m0).map_err(wiring)?;
                    ctx.add_c_spoke(&mut set, i, (t + s_i) % m0).map_err(wiring)?;
                }
                ctx.add_layer_seq(&mut set, lam, &shifted_cols(seq, sigma[lam as usize], m0))
                    .map_err(wiring)?;
            }
        }
        TwoHookedKind::OuterEnds => {
            // Witness (outer ends) in copy 0; companion at the top.
            ctx.add_layer_seq(&mut set, 0, seq).map_err(wiring)?;
            if lam == 1 {
                ctx.add_layer_seq(&mut set, 1, companion.seq()).map_err(wiring)?;
                ctx.add_c_spoke(&mut set, 0, 0).map_err(wiring)?;
                ctx.add_c_spoke(&mut set, 0, step).map_err(wiring)?;
            } else {
                let k = find_side_edge(seq, Side::Inner).ok_or(GrwError::MissingInnerEdge)?;
                let (y, y2) = (seq[k].index, seq[k + 1].index);
                let q1 = &seq[..=k];
                let q2 = &seq[k + 1..];
                // Per-copy shift that brings the split's loose inner columns
                // onto the spoke columns `{sigma_i, sigma_i + step}`.
                let d = if (y + step) % m0 == y2 { (m0 - y) % m0 } else { (step + m0 - y) % m0 };
                let mut sigma = vec![0u64; lam as usize + 1];
                for i in 0..lam as usize - 1 {
                    sigma[i + 1] = (sigma[i] + d) % m0;
                }
                sigma[lam as usize] = sigma[lam as usize - 1];
                for i in 1..lam {
                    let s_i = sigma[i as usize];
                    ctx.add_layer_seq(&mut set, i, &shifted_cols(q1, s_i, m0)).map_err(wiring)?;
                    ctx.add_layer_seq(&mut set, i, &shifted_cols(q2, s_i, m0)).map_err(wiring)?;
                }
                ctx.add_layer_seq(
                    &mut set,
                    lam,
                    &shifted_cols(companion.seq(), sigma[lam as usize], m0),
                )
                .map_err(wiring)?;
                for i in 0..lam {
                    let s_i = sigma[i as usize];
                    ctx.add_c_spoke(&mut set, i, s_i).map_err(wiring)?;
                    ctx.add_c_spoke(&mut set, i, (s_i + step) % m0).map_err(wiring)?;
                }
            }
        }
    }
    ctx.finish(set)
}

// ---------------------------------------------------------------------------
// Congruence special-case construction
// ---------------------------------------------------------------------------

/// Build a Hamilton cycle from the congruence special-case subpaths.
///
/// The outer path `u_0 .. u_p` fills copy 0, the inner path `v_0 .. v_p`
/// fills the last copy, the two pieces fill every middle copy unshifted, and
/// `c`-spokes at columns 0 and `p` join consecutive copies.
pub fn special_subpaths_construction(
    ctx: &ConstructionContext,
    sp: &SpecialSubpaths,
) -> Result<HamiltonCycle, GrwError> {
    if ctx.lambda == 0 {
        return Err(GrwError::NoLayers);
    }
    let m0 = ctx.m0;
    let p = sp.p % m0;
    let inconsistent = |detail: String| GrwError::PathsInconsistent { detail };
    if p == 0 {
        return Err(inconsistent("the common offset p is 0".into()));
    }
    let span_ok = |path: &HamiltonPath, x: Vertex, y: Vertex| {
        let ends = path.endpoints();
        ends == (x, y) || ends == (y, x)
    };
    if !span_ok(&sp.outer, Vertex::u(0), Vertex::u(p)) {
        let (e1, e2) = sp.outer.endpoints();
        return Err(inconsistent(format!("outer path runs {e1} .. {e2}, expected u0 .. u{p}")));
    }
    if !span_ok(&sp.inner, Vertex::v(0), Vertex::v(p)) {
        let (e1, e2) = sp.inner.endpoints();
        return Err(inconsistent(format!("inner path runs {e1} .. {e2}, expected v0 .. v{p}")));
    }
    let pu0 = &sp.piece_from_u0;
    let pup = &sp.piece_from_up;
    if pu0.first() != Some(&Vertex::u(0)) || pup.first() != Some(&Vertex::u(p)) {
        return Err(inconsistent("pieces must start at u0 and u_p".into()));
    }
    let e0 = *pu0.last().ok_or_else(|| inconsistent("empty piece".into()))?;
    let ep = *pup.last().ok_or_else(|| inconsistent("empty piece".into()))?;
    let crossed = e0 == Vertex::v(p) && ep == Vertex::v(0);
    let parallel = e0 == Vertex::v(0) && ep == Vertex::v(p);
    if !crossed && !parallel {
        return Err(inconsistent(format!("pieces end at {e0} and {ep}, expected v0 and v{p}")));
    }
    if pu0.len() + pup.len() != 2 * m0 as usize {
        return Err(inconsistent(format!(
            "pieces cover {} vertices, expected {}",
            pu0.len() + pup.len(),
            2 * m0
        )));
    }
    let wiring = |detail: String| GrwError::WiringFailed { detail };
    let mut set = EdgeSet::new();
    ctx.add_layer_seq(&mut set, 0, sp.outer.seq()).map_err(wiring)?;
    for i in 1..ctx.lambda {
        ctx.add_layer_seq(&mut set, i, pu0).map_err(wiring)?;
        ctx.add_layer_seq(&mut set, i, pup).map_err(wiring)?;
    }
    ctx.add_layer_seq(&mut set, ctx.lambda, sp.inner.seq()).map_err(wiring)?;
    for i in 0..ctx.lambda {
        ctx.add_c_spoke(&mut set, i, 0).map_err(wiring)?;
        ctx.add_c_spoke(&mut set, i, p).map_err(wiring)?;
    }
    ctx.finish(set)
}

// ---------------------------------------------------------------------------
// Four-hooked construction
// ---------------------------------------------------------------------------

/// Build a Hamilton cycle from a standard four-hooked quotient cycle pinned
/// so its hooks sit at offset 0.
///
/// Removing the four hooks splits the cycle into four arcs.  In the standard
/// orderings each arc runs between `u_j` and `v_j` for one designated column
/// `j ∈ {0, beta, alpha, alpha+beta}`; those arcs fill the middle copies.
/// Copy 0 keeps the inner hooks (so its loose ends are the designated outer
/// vertices), the last copy keeps the outer hooks, and `c`-spokes at all four
/// designated columns join consecutive copies.  When the arcs do not pair up
/// by column the wiring fails and the caller falls back to a hook-for-spoke
/// exchange (see [`hamilton_cycle_grw`]).
pub fn four_hooked_construction(
    ctx: &ConstructionContext,
    data: &FourHookedData,
) -> Result<HamiltonCycle, GrwError> {
    if ctx.lambda == 0 {
        return Err(GrwError::NoLayers);
    }
    let gq = &ctx.quotient_graph;
    let m0 = ctx.m0;
    let alpha = data.alpha % m0;
    let beta = data.beta % m0;
    let cycle = &data.cycle;
    let invalid = |detail: String| GrwError::WitnessInvalid { detail };
    if cycle.seq().len() != 2 * m0 as usize {
        return Err(invalid(format!(
            "cycle covers {} vertices, the quotient has {}",
            cycle.seq().len(),
            2 * m0
        )));
    }
    if !igraph::hooks_present(m0, alpha, beta, cycle, 0) {
        return Err(invalid("the four hook edges are not on the cycle at offset 0".into()));
    }
    if igraph::designated_pattern(m0, alpha, beta, cycle, 0).is_elusive() {
        return Err(GrwError::ElusiveInput);
    }
    let cols = [0, beta, alpha, (alpha + beta) % m0];
    {
        let mut sorted = cols.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != 4 {
            return Err(invalid("designated columns collide".into()));
        }
    }
    let hooks = igraph::hook_edges(m0, alpha, beta, 0);
    let outer_hooks = &hooks[..2];
    let inner_hooks = &hooks[2..];
    let base = assembly::seq_edges(gq, cycle.seq(), true).map_err(invalid)?;
    let arcs = assembly::surgery(gq, &base, &hooks, &[]).map_err(invalid)?;
    // Each designated vertex lies on exactly one hook, so it has degree 1
    // among the arcs; walk each arc and demand it ends in the same column.
    let mut adj: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for &(x, y) in &arcs {
        adj.entry(x).or_default().push(y);
        adj.entry(y).or_default().push(x);
    }
    for &j in &cols {
        let start = gq.id(Vertex::u(j));
        let goal = gq.id(Vertex::v(j));
        let mut prev = usize::MAX;
        let mut cur = start;
        loop {
            let next = adj
                .get(&cur)
                .map(Vec::as_slice)
                .unwrap_or(&[])
                .iter()
                .copied()
                .find(|&x| x != prev);
            match next {
                Some(nx) => {
                    prev = cur;
                    cur = nx;
                }
                None => break,
            }
        }
        if cur != goal {
            return Err(GrwError::WiringFailed {
                detail: format!(
                    "the arc from u{j} ends at {}, not v{j}: the arcs do not pair up by column",
                    gq.vertex(cur)
                ),
            });
        }
    }
    let copy0 = assembly::surgery(gq, &base, outer_hooks, &[]).map_err(invalid)?;
    let copy_top = assembly::surgery(gq, &base, inner_hooks, &[]).map_err(invalid)?;
    let wiring = |detail: String| GrwError::WiringFailed { detail };
    let mut set = EdgeSet::new();
    ctx.add_layer_edges(&mut set, 0, &copy0).map_err(wiring)?;
    for i in 1..ctx.lambda {
        ctx.add_layer_edges(&mut set, i, &arcs).map_err(wiring)?;
    }
    ctx.add_layer_edges(&mut set, ctx.lambda, &copy_top).map_err(wiring)?;
    for i in 0..ctx.lambda {
        for &j in &cols {
            ctx.add_c_spoke(&mut set, i, j).map_err(wiring)?;
        }
    }
    ctx.finish(set)
}

/// When the four designated arcs do not pair up by column, one of four
/// hook-for-spoke exchanges turns the four-hooked cycle into a spanning path
/// with two same-side ends — a two-hooked witness.
fn exceptional_witness(
    ctx: &ConstructionContext,
    data: &FourHookedData,
) -> Option<(HamiltonPath, TwoHookedKind, &'static str)> {
    let gq = &ctx.quotient_graph;
    let m0 = ctx.m0;
    let al = data.alpha % m0;
    let be = data.beta % m0;
    let ab = (al + be) % m0;
    let u = Vertex::u;
    let v = Vertex::v;
    let base = Structure::Cycle(data.cycle.clone());
    let candidates: [(&'static str, [(Vertex, Vertex); 3], [(Vertex, Vertex); 2], (Vertex, Vertex));
        4] = [
        (
            "trade-far-inner-hook",
            [(u(0), u(al)), (u(be), u(ab)), (v(al), v(ab))],
            [(u(al), v(al)), (u(ab), v(ab))],
            (u(0), u(be)),
        ),
        (
            "trade-near-inner-hook",
            [(u(0), u(al)), (u(be), u(ab)), (v(0), v(be))],
            [(u(0), v(0)), (u(be), v(be))],
            (u(al), u(ab)),
        ),
        (
            "trade-near-outer-hook",
            [(v(0), v(be)), (v(al), v(ab)), (u(0), u(al))],
            [(u(0), v(0)), (u(al), v(al))],
            (v(be), v(ab)),
        ),
        (
            "trade-far-outer-hook",
            [(v(0), v(be)), (v(al), v(ab)), (u(be), u(ab))],
            [(u(be), v(be)), (u(ab), v(ab))],
            (v(0), v(al)),
        ),
    ];
    for (label, remove, add, (e1, e2)) in candidates {
        let s = Surgery {
            remove: remove.to_vec(),
            add: add.to_vec(),
            expected: Expected::Path(e1, e2),
        };
        if let Ok(Structure::Path(p)) = apply_surgery(gq, &base, &s) {
            if let Ok((witness, kind)) =
                igraph::normalize_witness(m0, ctx.quotient.a, ctx.quotient.b, p)
            {
                return Some((witness, kind, label));
            }
        }
    }
    None
}

// ---------------------------------------------------------------------------
// Petersen-family exception construction
// ---------------------------------------------------------------------------

/// Build a Hamilton cycle when the quotient is a Hamilton-less member of the
/// Petersen family.
///
/// No quotient Hamilton cycle exists, so each copy is filled with one
/// spanning strand running from an inner vertex up to an outer vertex;
/// exactly one `c`-spoke joins consecutive copies, and one wrap spoke from
/// the last copy back into copy 0 closes the tour.  The strands use the fact
/// that these quotients have a spanning path from `v_x` to `u_y` whenever
/// `x ≠ y`.
pub fn petersen_exception_construction(
    ctx: &ConstructionContext,
    budget: u64,
) -> Result<HamiltonCycle, GrwError> {
    if ctx.lambda == 0 {
        return Err(GrwError::NoLayers);
    }
    let gq = &ctx.quotient_graph;
    let m0 = ctx.m0;
    let cq = ctx.cq;
    let lam = ctx.lambda;
    let path = |from: Vertex, to: Vertex, stage: &'static str| -> Result<HamiltonPath, GrwError> {
        match find_hamilton_path(gq, from, to, budget) {
            SearchOutcome::Found(p) => Ok(p),
            SearchOutcome::NotFoundWithinBudget { .. } => Err(GrwError::SearchBudget { stage }),
            SearchOutcome::ProvedAbsent { .. } => Err(GrwError::Unconstructible {
                detail: format!("no spanning path {from} .. {to} in the quotient"),
            }),
        }
    };
    let wiring = |detail: String| GrwError::WiringFailed { detail };
    let mut set = EdgeSet::new();
    if lam % 2 == 1 {
        // Odd copy index at the top: the top strand climbs like the other odd
        // copies, and the wrap spoke leaves from its outer end at column x.
        let x = [1u64, 2]
            .into_iter()
            .find(|&x| x < m0 && (x + cq) % m0 != 0)
            .ok_or(GrwError::NoValidX)?;
        let up = path(Vertex::v(0), Vertex::u(x), "upward strand search")?;
        let down = if lam >= 3 {
            Some(path(Vertex::v(x), Vertex::u(0), "downward strand search")?)
        } else {
            None
        };
        let base = path(Vertex::v((x + cq) % m0), Vertex::u(0), "base strand search")?;
        ctx.add_layer_seq(&mut set, 0, base.seq()).map_err(wiring)?;
        for i in 1..=lam {
            let strand = if i % 2 == 1 {
                up.seq()
            } else {
                down.as_ref().expect("even middle copies exist only when lambda >= 3").seq()
            };
            ctx.add_layer_seq(&mut set, i, strand).map_err(wiring)?;
        }
        for i in 0..lam {
            let col = if i % 2 == 1 { x } else { 0 };
            ctx.add_c_spoke(&mut set, i, col).map_err(wiring)?;
        }
        ctx.add_c_spoke(&mut set, lam, x).map_err(wiring)?;
    } else {
        // Even copy index at the top: the top strand starts like a downward
        // one but ends at a free column y, from which the wrap spoke returns
        // into copy 0.
        let x = 1u64;
        let y = (0..m0)
            .find(|&y| y != x && (y + cq) % m0 != 0)
            .ok_or(GrwError::NoValidX)?;
        let up = path(Vertex::v(0), Vertex::u(x), "upward strand search")?;
        let down = if lam >= 4 {
            Some(path(Vertex::v(x), Vertex::u(0), "downward strand search")?)
        } else {
            None
        };
        let top = path(Vertex::v(x), Vertex::u(y), "top strand search")?;
        let base = path(Vertex::v((y + cq) % m0), Vertex::u(0), "base strand search")?;
        ctx.add_layer_seq(&mut set, 0, base.seq()).map_err(wiring)?;
        for i in 1..lam {
            let strand = if i % 2 == 1 {
                up.seq()
            } else {
                down.as_ref().expect("even middle copies exist only when lambda >= 4").seq()
            };
            ctx.add_layer_seq(&mut set, i, strand).map_err(wiring)?;
        }
        ctx.add_layer_seq(&mut set, lam, top.seq()).map_err(wiring)?;
        for i in 0..lam {
            let col = if i % 2 == 1 { x } else { 0 };
            ctx.add_c_spoke(&mut set, i, col).map_err(wiring)?;
        }
        ctx.add_c_spoke(&mut set, lam, y).map_err(wiring)?;
    }
    ctx.finish(set)
}

// ---------------------------------------------------------------------------
// Dispatch
// ---------------------------------------------------------------------------

/// Construct a verified Hamilton cycle for a connected generalized rose
/// window graph.
///
/// Routing:
/// - `gcd(m, a, b) = 1`: the 0-spoke subgraph is a connected I-graph.  Its
///   Hamilton cycle is reused ([`Route::ConnectedH`]); the Hamilton-less
///   Petersen-family members instead get a spanning path closed by one
///   `c`-spoke ([`Route::ConnectedHPetersenPath`]).
/// - `gcd(m, a, b) > 1`: the graph is a necklace of quotient copies.  A
///   usable form of a quotient Hamilton cycle drives one of the layered
///   constructions; Petersen-family quotients use the strand construction.
pub fn hamilton_cycle_grw(spec: &GrwSpec, budget: u64) -> Result<Certificate, GrwError> {
    let ctx = ConstructionContext::new(spec)?;
    let mut params = BTreeMap::new();
    params.insert("delta".into(), ctx.delta.to_string());
    params.insert("lambda".into(), ctx.lambda.to_string());
    params.insert(
        "quotient".into(),
        format!("I({};{},{})", ctx.m0, ctx.quotient.a, ctx.quotient.b),
    );
    let exception = classify_family(&ctx.quotient.to_bicirculant()).petersen_exception;
    let (route, cycle) = if ctx.lambda == 0 {
        if exception.is_some() {
            let target = Vertex::v(spec.c);
            params.insert("closing_spoke_column".into(), spec.c.to_string());
            let p = match find_hamilton_path(&ctx.quotient_graph, Vertex::u(0), target, budget) {
                SearchOutcome::Found(p) => p,
                SearchOutcome::NotFoundWithinBudget { .. } => {
                    return Err(GrwError::SearchBudget { stage: "closing path search" })
                }
                SearchOutcome::ProvedAbsent { .. } => {
                    return Err(GrwError::Unconstructible {
                        detail: format!("no spanning path u0 .. {target} in the 0-spoke subgraph"),
                    })
                }
            };
            let cycle = HamiltonCycle::verified(&ctx.graph, p.seq().to_vec())
                .map_err(|e| GrwError::WiringFailed { detail: format!("closing spoke: {e}") })?;
            (Route::ConnectedHPetersenPath, cycle)
        } else {
            match find_hamilton_cycle(&ctx.quotient_graph, budget) {
                SearchOutcome::Found(c) => {
                    // 0-spoke subgraph edges are edges of the full graph;
                    // revalidate the cycle there.
                    let cycle = HamiltonCycle::verified(&ctx.graph, c.seq().to_vec())
                        .map_err(|e| GrwError::WiringFailed { detail: e.to_string() })?;
                    (Route::ConnectedH, cycle)
                }
                SearchOutcome::NotFoundWithinBudget { .. } => {
                    return Err(GrwError::SearchBudget { stage: "subgraph cycle search" })
                }
                SearchOutcome::ProvedAbsent { .. } => {
                    return Err(GrwError::Unconstructible {
                        detail: "the connected 0-spoke subgraph has no Hamilton cycle and is not \
                                 a known exception"
                            .into(),
                    })
                }
            }
        }
    } else if let Some(order) = exception {
        params.insert("exception_order".into(), order.to_string());
        (Route::PetersenExceptionConstruction, petersen_exception_construction(&ctx, budget)?)
    } else {
        let report = igraph::usable_cycle(&ctx.quotient, budget).map_err(|e| match e {
            UsableError::Disconnected => GrwError::Unconstructible {
                detail: "the quotient is unexpectedly disconnected".into(),
            },
            UsableError::NonHamiltonian => GrwError::Unconstructible {
                detail: "the quotient has no Hamilton cycle and is not a known exception".into(),
            },
            UsableError::SearchBudget { stage } => GrwError::SearchBudget { stage },
            UsableError::Unresolvable { detail } => GrwError::Unconstructible { detail },
        })?;
        if let Some(rule) = &report.rule {
            params.insert("quotient_rule".into(), rule.clone());
        }
        if report.fallback {
            params.insert("quotient_fallback".into(), "true".into());
        }
        params.insert("quotient_form".into(), report.form.name().into());
        match report.form {
            UsableForm::Alternating(alt) => {
                (Route::AlternatingConstruction, alternating_construction(&ctx, &alt)?)
            }
            UsableForm::Standard4Hooked(data) => {
                params.insert("alpha".into(), data.alpha.to_string());
                params.insert("beta".into(), data.beta.to_string());
                match four_hooked_construction(&ctx, &data) {
                    Ok(cycle) => (Route::FourHookedConstruction, cycle),
                    Err(GrwError::WiringFailed { detail }) => {
                        // Exceptional arc ordering: trade one hook for spokes
                        // to get a two-hooked witness instead.
                        params.insert("four_hooked_obstruction".into(), detail);
                        let (witness, kind) = match exceptional_witness(&ctx, &data) {
                            Some((witness, kind, label)) => {
                                params.insert("conversion".into(), label.into());
                                (witness, kind)
                            }
                            None => {
                                let (witness, kind) = igraph::witness_search(
                                    &ctx.quotient_graph,
                                    ctx.m0,
                                    ctx.quotient.a,
                                    ctx.quotient.b,
                                    budget,
                                )
                                .map_err(|e| match e {
                                    igraph::WitnessSearchError::Budget { stage } => {
                                        GrwError::SearchBudget { stage }
                                    }
                                    igraph::WitnessSearchError::Absent => GrwError::Unconstructible {
                                        detail: "no two-hooked witness exists in the quotient"
                                            .into(),
                                    },
                                })?;
                                params.insert("conversion".into(), "witness-search".into());
                                (witness, kind)
                            }
                        };
                        params.insert("witness_kind".into(), kind_name(kind).into());
                        let cycle =
                            two_hooked_construction(&ctx, &witness, kind, &data.cycle)?;
                        (Route::TwoHookedConstruction, cycle)
                    }
                    Err(e) => return Err(e),
                }
            }
            UsableForm::TwoHooked { witness, kind, source } => {
                params.insert("witness_kind".into(), kind_name(kind).into());
                let cycle = two_hooked_construction(&ctx, &witness, kind, &source)?;
                (Route::TwoHookedConstruction, cycle)
            }
            UsableForm::SpecialSubpaths(sp) => {
                params.insert("congruence".into(), sp.congruence.name().into());
                params.insert("p".into(), sp.p.to_string());
                let cycle = special_subpaths_construction(&ctx, &sp)?;
                (Route::SpecialSubpathsConstruction, cycle)
            }
        }
    };
    crate::search::verify_cycle(&ctx.graph, cycle.seq())
        .map_err(|e| GrwError::WiringFailed { detail: format!("final verification: {e}") })?;
    Ok(Certificate { spec: *spec, route, params, cycle })
}

// ---------------------------------------------------------------------------
// Tests
// ---------------------------------------------------------------------------
