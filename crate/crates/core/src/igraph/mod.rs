//! Hamilton cycle classification for I-graphs and the reduction of any
//! Hamilton cycle to one of the *usable forms* the rose window constructions
//! consume:
//!
//! * an **alternating** cycle (uses every spoke),
//! * a **standard four-hooked** cycle (hook edges at offset zero, designated
//!   vertices not in an elusive pattern),
//! * a **two-hooked witness**: a spanning path between `v_0` and `v_a` or
//!   between `u_0` and `u_b`, together with the cycle it came from,
//! * **special subpaths** for the two rim congruences where no witness is
//!   guaranteed directly.
//!
//! Elusive four-hooked cycles are resolved by the rule table in [`rules`];
//! every surgery outcome is rebuilt and re-verified against the graph, and a
//! rule that fires but fails to deliver is reported, never papered over.

mod rules;

pub use rules::CongruenceKind;

use crate::arith::{gcd, mul_mod};
use crate::assembly;
use crate::graph::{Graph, Side, Vertex};
use crate::search::{
    find_alternating_cycle, find_hamilton_cycle, find_hamilton_path, HamiltonCycle, HamiltonPath,
    SearchOutcome,
};
use crate::spec::IGraphSpec;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

// ---------------------------------------------------------------------------
// Position helpers shared with the rule engine
// ---------------------------------------------------------------------------

fn vid(m: u64, w: Vertex) -> usize {
    let base = match w.side {
        Side::Outer => 0usize,
        Side::Inner => m as usize,
    };
    base + w.index as usize
}

fn cycle_positions(m: u64, c: &HamiltonCycle) -> Option<Vec<usize>> {
    let n = 2 * m as usize;
    if c.len() != n {
        return None;
    }
    let mut pos = vec![usize::MAX; n];
    for (i, &w) in c.seq().iter().enumerate() {
        let id = vid(m, w);
        if id >= n || pos[id] != usize::MAX {
            return None;
        }
        pos[id] = i;
    }
    Some(pos)
}

fn pos_adjacent(pos: &[usize], n: usize, x: usize, y: usize) -> bool {
    let d = (pos[x] + n - pos[y]) % n;
    d == 1 || d == n - 1
}

/// The four hook edges at offset `t` for rim steps `(a, b)`.
pub fn hook_edges(m: u64, a: u64, b: u64, t: u64) -> [(Vertex, Vertex); 4] {
    let at = |k: u64| (t + k % m) % m;
    [
        (Vertex::u(at(0)), Vertex::u(at(a))),
        (Vertex::u(at(b)), Vertex::u(at(a + b))),
        (Vertex::v(at(0)), Vertex::v(at(b))),
        (Vertex::v(at(a)), Vertex::v(at(a + b))),
    ]
}

/// Does the cycle contain all four hook edges at offset `t`?
pub(crate) fn hooks_present(m: u64, a: u64, b: u64, c: &HamiltonCycle, t: u64) -> bool {
    let n = 2 * m as usize;
    let pos = match cycle_positions(m, c) {
        Some(p) => p,
        None => return false,
    };
    hook_edges(m, a, b, t).iter().all(|&(x, y)| {
        let (ix, iy) = (vid(m, x), vid(m, y));
        ix != iy && pos_adjacent(&pos, n, ix, iy)
    })
}

/// How the eight designated vertices of a four-hooked cycle sit on it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ElusiveFlag {
    /// Benign arrangement: the standard rewiring applies directly.
    Standard,
    /// First elusive arrangement of the designated vertices.
    Elusive1,
    /// Second elusive arrangement (mirror image of the first).
    Elusive2,
}

impl ElusiveFlag {
    pub fn name(&self) -> &'static str {
        match self {
            ElusiveFlag::Standard => "standard",
            ElusiveFlag::Elusive1 => "elusive1",
            ElusiveFlag::Elusive2 => "elusive2",
        }
    }

    pub fn is_elusive(&self) -> bool {
        !matches!(self, ElusiveFlag::Standard)
    }
}

/// How the eight designated vertices at offset `t` sit on the cycle.
pub(crate) fn designated_pattern(
    m: u64,
    a: u64,
    b: u64,
    c: &HamiltonCycle,
    t: u64,
) -> ElusiveFlag {
    let at = |k: u64| (t + k % m) % m;
    let first = [
        Vertex::u(at(0)),
        Vertex::u(at(a)),
        Vertex::u(at(b)),
        Vertex::u(at(a + b)),
        Vertex::v(at(a + b)),
        Vertex::v(at(a)),
        Vertex::v(at(b)),
        Vertex::v(at(0)),
    ];
    let second = [
        Vertex::u(at(0)),
        Vertex::u(at(a)),
        Vertex::v(at(a)),
        Vertex::v(at(a + b)),
        Vertex::v(at(0)),
        Vertex::v(at(b)),
        Vertex::u(at(b)),
        Vertex::u(at(a + b)),
    ];
    let distinct: BTreeSet<Vertex> = first.iter().copied().collect();
    if distinct.len() != 8 {
        return ElusiveFlag::Standard;
    }
    let pos = match cycle_positions(m, c) {
        Some(p) => p,
        None => return ElusiveFlag::Standard,
    };
    let mut along: Vec<(usize, Vertex)> = first.iter().map(|&w| (pos[vid(m, w)], w)).collect();
    along.sort_unstable();
    let word: Vec<Vertex> = along.into_iter().map(|(_, w)| w).collect();
    let p0 = word
        .iter()
        .position(|&w| w == Vertex::u(at(0)))
        .expect("u_t is designated");
    let fwd: Vec<Vertex> = word[p0..].iter().chain(word[..p0].iter()).copied().collect();
    let mut bwd = fwd.clone();
    bwd[1..].reverse();
    if fwd == first || bwd == first {
        ElusiveFlag::Elusive1
    } else if fwd == second || bwd == second {
        ElusiveFlag::Elusive2
    } else {
        ElusiveFlag::Standard
    }
}

/// Shift every vertex index of a cycle by `t` (an automorphism of the graph).
pub fn shift_cycle(c: &HamiltonCycle, t: u64) -> HamiltonCycle {
    c.shifted(t)
}

// ---------------------------------------------------------------------------
// Classification
// ---------------------------------------------------------------------------

/// Which designated endpoint pair a two-hooked witness connects.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum TwoHookedKind {
    /// Spanning path from `v_0` to `v_a`.
    InnerEnds,
    /// Spanning path from `u_0` to `u_b`.
    OuterEnds,
}

/// Class of a Hamilton cycle of `I(m; a, b)`: alternating, four-hooked at
/// some shift, or two-hooked (certified by a spanning-path witness).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CycleClass {
    /// Uses all `m` spokes; vertices alternate between the rims.
    Alternating,
    /// Contains all four hook edges at the (smallest) offset `shift`.
    FourHooked {
        shift: u64,
        /// Arrangement of the eight designated vertices at that offset.
        elusive: ElusiveFlag,
        /// The four hook edges themselves.
        hooks: [(Vertex, Vertex); 4],
    },
    /// Neither alternating nor four-hooked; certified by a spanning path
    /// between a designated endpoint pair (a shift makes offset `0`
    /// sufficient).
    TwoHooked {
        kind: TwoHookedKind,
        witness: HamiltonPath,
    },
}

impl CycleClass {
    pub fn name(&self) -> &'static str {
        match self {
            CycleClass::Alternating => "alternating",
            CycleClass::FourHooked { .. } => "four-hooked",
            CycleClass::TwoHooked { .. } => "two-hooked",
        }
    }
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum ClassifyError {
    #[error("cycle has {got} vertices but the graph has {want}")]
    WrongLength { got: usize, want: usize },
    #[error("rim steps are aligned (b = ±a mod m); only the alternating test applies")]
    AlignedRimSteps,
    #[error("search budget exhausted during {stage}")]
    SearchBudget { stage: &'static str },
    #[error("classification failed: {detail}")]
    ClassificationFailed { detail: String },
}

/// Classify a Hamilton cycle of `I(m; a, b)` with `a != ±b (mod m)`.
///
/// The alternating test is exact: a Hamilton cycle on `2m` vertices uses all
/// `m` spokes if and only if every vertex meets exactly one spoke, which
/// forces the alternating shape.  Otherwise the smallest offset at which all
/// four hook edges appear decides the four-hooked class together with the
/// arrangement of its designated vertices.  A cycle that is neither is
/// two-hooked: the graph then carries a spanning path between `v_0` and
/// `v_a` or between `u_0` and `u_b`, found here by search.  Failure of both
/// searches is a hard error — it would contradict the trichotomy.
pub fn classify_cycle(
    spec: &IGraphSpec,
    c: &HamiltonCycle,
    budget: u64,
) -> Result<CycleClass, ClassifyError> {
    let IGraphSpec { m, a, b } = *spec;
    let n = 2 * m as usize;
    if c.len() != n {
        return Err(ClassifyError::WrongLength { got: c.len(), want: n });
    }
    let seq = c.seq();
    let spokes = (0..n)
        .filter(|&i| seq[i].side != seq[(i + 1) % n].side)
        .count();
    if spokes == m as usize {
        return Ok(CycleClass::Alternating);
    }
    if (a + b) % m == 0 || a % m == b % m {
        return Err(ClassifyError::AlignedRimSteps);
    }
    for t in 0..m {
        if hooks_present(m, a, b, c, t) {
            return Ok(CycleClass::FourHooked {
                shift: t,
                elusive: designated_pattern(m, a, b, c, t),
                hooks: hook_edges(m, a, b, t),
            });
        }
    }
    let g = Graph::from_spec(&spec.to_bicirculant());
    match witness_search(&g, m, a, b, budget) {
        Ok((witness, kind)) => Ok(CycleClass::TwoHooked { kind, witness }),
        Err(WitnessSearchError::Budget { stage }) => Err(ClassifyError::SearchBudget { stage }),
        Err(WitnessSearchError::Absent) => Err(ClassifyError::ClassificationFailed {
            detail: "cycle is neither alternating nor four-hooked, yet no spanning path \
                     between either designated endpoint pair exists"
                .to_string(),
        }),
    }
}

// ---------------------------------------------------------------------------
// Usable forms
// ---------------------------------------------------------------------------

/// A standard four-hooked cycle with hooks at offset zero for `(alpha, beta)`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FourHookedData {
    pub alpha: u64,
    pub beta: u64,
    pub cycle: HamiltonCycle,
}

/// An elusive cycle in one of the two rim congruences, certified by the two
/// runs of consecutive vertices it is guaranteed to contain.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SpecialCaseData {
    pub congruence: CongruenceKind,
    /// Rim steps of the pinned cycle (the second elusive arrangement is
    /// relabelled to the first, so these may differ from the input spec).
    pub alpha: u64,
    pub beta: u64,
    /// Four consecutive vertices around the spoke at `0`.
    pub run_short: Vec<Vertex>,
    /// Six consecutive vertices around the opposite pair of hooks.
    pub run_long: Vec<Vertex>,
    /// The elusive cycle, shifted so its hooks sit at offset zero.
    pub cycle: HamiltonCycle,
}

/// Spanning paths extracted from a congruence special case: two spanning
/// paths `u_0..u_p` and `v_0..v_p`, plus two vertex-disjoint paths that
/// together cover every vertex.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SpecialSubpaths {
    pub congruence: CongruenceKind,
    pub alpha: u64,
    pub beta: u64,
    /// Common second endpoint offset (`3*alpha` or `3*beta` mod `m`).
    pub p: u64,
    /// Spanning path `u_0 .. u_p`.
    pub outer: HamiltonPath,
    /// Spanning path `v_0 .. v_p`.
    pub inner: HamiltonPath,
    /// Path from `u_0` ending at `v_p`; disjoint from `piece_from_up`, and
    /// together they cover all vertices.
    pub piece_from_u0: Vec<Vertex>,
    /// Path from `u_p` ending at `v_0`.
    pub piece_from_up: Vec<Vertex>,
}

/// Outcome of resolving an elusive four-hooked cycle.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub enum Resolution {
    /// A relabelling turned the cycle into a standard four-hooked one.
    Standard4Hooked(FourHookedData),
    /// A local surgery produced a two-hooked witness path.
    TwoHookedWitness {
        kind: TwoHookedKind,
        witness: HamiltonPath,
    },
    /// One of the two rim congruences holds and the cycle contains the two
    /// certified runs; special subpaths apply instead of a witness.
    SpecialCase(SpecialCaseData),
}

impl Resolution {
    pub fn name(&self) -> &'static str {
        match self {
            Resolution::Standard4Hooked(_) => "standard-four-hooked",
            Resolution::TwoHookedWitness { .. } => "two-hooked-witness",
            Resolution::SpecialCase(_) => "special-case",
        }
    }
}

/// Resolution of one elusive cycle, with bookkeeping about how it was won.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ResolutionReport {
    pub resolution: Resolution,
    /// Rule that resolved the cycle, when one fired.
    pub rule: Option<String>,
    /// Set when the outcome came from a direct witness search instead of a
    /// resolution rule.
    pub fallback: bool,
    /// Rules that fired but failed; always a defect worth reporting.
    pub failures: Vec<String>,
    pub notes: Vec<String>,
}

#[derive(Debug, thiserror::Error)]
pub enum ResolveError {
    #[error("the cycle is not elusive: {detail}")]
    NotElusive { detail: String },
    #[error("search budget exhausted during {stage}")]
    SearchBudget { stage: &'static str },
    #[error("resolution failed: {detail}")]
    ResolutionFailed { detail: String },
}

/// A Hamilton-cycle-or-witness shape usable by the layered constructions.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub enum UsableForm {
    Alternating(HamiltonCycle),
    Standard4Hooked(FourHookedData),
    TwoHooked {
        witness: HamiltonPath,
        kind: TwoHookedKind,
        source: HamiltonCycle,
    },
    SpecialSubpaths(SpecialSubpaths),
}

impl UsableForm {
    pub fn name(&self) -> &'static str {
        match self {
            UsableForm::Alternating(_) => "alternating",
            UsableForm::Standard4Hooked(_) => "standard-four-hooked",
            UsableForm::TwoHooked { .. } => "two-hooked",
            UsableForm::SpecialSubpaths(_) => "special-subpaths",
        }
    }
}

#[derive(Debug)]
pub struct UsableReport {
    pub form: UsableForm,
    /// Class of the cycle the search produced (absent for aligned rim steps).
    pub class: Option<CycleClass>,
    /// Rule that resolved an elusive cycle, when one fired.
    pub rule: Option<String>,
    /// Set when the outcome came from a direct witness search instead of a
    /// resolution rule.
    pub fallback: bool,
    /// Rules that fired but failed; always a defect worth reporting.
    pub failures: Vec<String>,
    pub notes: Vec<String>,
}

#[derive(Debug, thiserror::Error)]
pub enum UsableError {
    #[error("the graph is disconnected")]
    Disconnected,
    #[error("the graph has no Hamilton cycle")]
    NonHamiltonian,
    #[error("search budget exhausted during {stage}")]
    SearchBudget { stage: &'static str },
    #[error("could not produce a usable form: {detail}")]
    Unresolvable { detail: String },
}

// ---------------------------------------------------------------------------
// Aligned rim steps: explicit cycle
// ---------------------------------------------------------------------------

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum AlignedError {
    #[error("not applicable: {detail}")]
    NotApplicable { detail: String },
}

/// Explicit Hamilton cycle of `I(m; a, b)` when `b = ±a (mod m)` and
/// `gcd(m, a) = 1`: run the outer rim once, closing through two spokes and
/// the full inner rim.  Also returns the spanning path obtained by removing
/// the inner edge `v_0 v_a`, which serves as a two-hooked witness.
pub fn aligned_rims_cycle(
    spec: &IGraphSpec,
) -> Result<(HamiltonCycle, HamiltonPath), AlignedError> {
    let IGraphSpec { m, a, b } = *spec;
    let aligned = (a + b) % m == 0 || a % m == b % m;
    if !aligned {
        return Err(AlignedError::NotApplicable {
            detail: "rim steps are not aligned (b != ±a mod m)".to_string(),
        });
    }
    if gcd(m, a) != 1 {
        return Err(AlignedError::NotApplicable {
            detail: format!("rim step {a} does not generate Z_{m} (the graph is disconnected)"),
        });
    }
    let g = Graph::from_spec(&spec.to_bicirculant());
    let mut seq = Vec::with_capacity(2 * m as usize);
    seq.push(Vertex::v(0));
    for k in 0..m {
        seq.push(Vertex::u(mul_mod(k, a, m)));
    }
    for k in (1..m).rev() {
        seq.push(Vertex::v(mul_mod(k, a, m)));
    }
    let cycle = HamiltonCycle::verified(&g, seq)
        .map_err(|e| AlignedError::NotApplicable { detail: format!("construction broke: {e}") })?;
    let base = assembly::seq_edges(&g, cycle.seq(), true)
        .map_err(|detail| AlignedError::NotApplicable { detail })?;
    let cut = assembly::surgery(&g, &base, &[(Vertex::v(0), Vertex::v(a % m))], &[])
        .map_err(|detail| AlignedError::NotApplicable { detail })?;
    let witness = assembly::path_from_edges(&g, &cut, Vertex::v(0), Vertex::v(a % m))
        .map_err(|detail| AlignedError::NotApplicable { detail })?;
    Ok((cycle, witness))
}

// ---------------------------------------------------------------------------
// Witness normalization and search
// ---------------------------------------------------------------------------

pub(crate) fn normalize_witness(
    m: u64,
    a: u64,
    b: u64,
    path: HamiltonPath,
) -> Result<(HamiltonPath, TwoHookedKind), String> {
    let (p, q) = path.endpoints();
    if p.side != q.side {
        return Err(format!("witness endpoints {p}, {q} lie on different rims"));
    }
    let (step, kind, anchor) = match p.side {
        Side::Inner => (a % m, TwoHookedKind::InnerEnds, Vertex::v(0)),
        Side::Outer => (b % m, TwoHookedKind::OuterEnds, Vertex::u(0)),
    };
    let fwd = (q.index + m - p.index) % m;
    let bwd = (p.index + m - q.index) % m;
    let t = if fwd == step {
        p.index
    } else if bwd == step {
        q.index
    } else {
        return Err(format!(
            "witness endpoints {p}, {q} differ by {fwd}, expected ±{step}"
        ));
    };
    let mut w = path.shifted((m - t % m) % m);
    if w.endpoints().0 != anchor {
        w = w.reversed();
    }
    let (s, e) = w.endpoints();
    let want_end = match kind {
        TwoHookedKind::InnerEnds => Vertex::v(step),
        TwoHookedKind::OuterEnds => Vertex::u(step),
    };
    if s != anchor || e != want_end {
        return Err(format!(
            "witness normalization produced endpoints {s}, {e}, expected {anchor}, {want_end}"
        ));
    }
    Ok((w, kind))
}

pub(crate) enum WitnessSearchError {
    Budget { stage: &'static str },
    Absent,
}

/// Search for a two-hooked witness: a spanning path `v_0 .. v_a`, then
/// `u_0 .. u_b`.  Sound absence proofs on both sides yield `Absent`.
pub(crate) fn witness_search(
    g: &Graph,
    m: u64,
    a: u64,
    b: u64,
    budget: u64,
) -> Result<(HamiltonPath, TwoHookedKind), WitnessSearchError> {
    match find_hamilton_path(g, Vertex::v(0), Vertex::v(a % m), budget) {
        SearchOutcome::Found(witness) => return Ok((witness, TwoHookedKind::InnerEnds)),
        SearchOutcome::NotFoundWithinBudget { .. } => {
            return Err(WitnessSearchError::Budget { stage: "inner witness path search" })
        }
        SearchOutcome::ProvedAbsent { .. } => {}
    }
    match find_hamilton_path(g, Vertex::u(0), Vertex::u(b % m), budget) {
        SearchOutcome::Found(witness) => Ok((witness, TwoHookedKind::OuterEnds)),
        SearchOutcome::NotFoundWithinBudget { .. } => {
            Err(WitnessSearchError::Budget { stage: "outer witness path search" })
        }
        SearchOutcome::ProvedAbsent { .. } => Err(WitnessSearchError::Absent),
    }
}

// ---------------------------------------------------------------------------
// Congruence special cases
// ---------------------------------------------------------------------------

/// The two runs an elusive cycle must contain in a congruence special case,
/// in the pinned `(alpha, beta)` coordinates.
fn congruence_runs(
    m: u64,
    alpha: u64,
    beta: u64,
    kind: CongruenceKind,
) -> (Vec<Vertex>, Vec<Vertex>) {
    let neg = |x: u64| (m - x % m) % m;
    let add = |x: u64, y: u64| (x + y) % m;
    match kind {
        CongruenceKind::BetaIsMinusTwoAlpha => (
            vec![Vertex::v(beta), Vertex::v(0), Vertex::u(0), Vertex::u(alpha)],
            vec![
                Vertex::u(beta),
                Vertex::u(add(alpha, beta)),
                Vertex::v(add(alpha, beta)),
                Vertex::v(alpha),
                Vertex::v(add(alpha, neg(beta))),
                Vertex::u(add(alpha, neg(beta))),
            ],
        ),
        CongruenceKind::AlphaIsMinusTwoBeta => (
            vec![Vertex::u(alpha), Vertex::u(0), Vertex::v(0), Vertex::v(beta)],
            vec![
                Vertex::v(alpha),
                Vertex::v(add(alpha, beta)),
                Vertex::u(add(alpha, beta)),
                Vertex::u(beta),
                Vertex::u(mul_mod(3, beta, m)),
                Vertex::v(mul_mod(3, beta, m)),
            ],
        ),
    }
}

/// Do all `runs` appear as consecutive vertices, each in its stated order,
/// under one common traversal orientation of the cycle?
fn runs_in_order(m: u64, c: &HamiltonCycle, runs: &[&[Vertex]]) -> bool {
    let n = 2 * m as usize;
    let pos = match cycle_positions(m, c) {
        Some(p) => p,
        None => return false,
    };
    for forward in [true, false] {
        let ok = runs.iter().all(|run| {
            if run.is_empty() {
                return false;
            }
            let p0 = pos[vid(m, run[0])];
            run.iter().enumerate().all(|(k, &w)| {
                let want = if forward { (p0 + k) % n } else { (p0 + n - k % n) % n };
                pos[vid(m, w)] == want
            })
        });
        if ok {
            return true;
        }
    }
    false
}

/// Certify a congruence special case: check the congruence arithmetic and
/// the presence of the two required runs on the pinned cycle.
fn special_case_data(
    m: u64,
    alpha: u64,
    beta: u64,
    kind: CongruenceKind,
    pinned: &HamiltonCycle,
) -> Result<SpecialCaseData, String> {
    let holds = match kind {
        CongruenceKind::BetaIsMinusTwoAlpha => (2 * (alpha % m) + beta % m) % m == 0,
        CongruenceKind::AlphaIsMinusTwoBeta => (alpha % m + 2 * (beta % m)) % m == 0,
    };
    if !holds {
        return Err(format!(
            "congruence does not hold for alpha={alpha}, beta={beta} (mod {m})"
        ));
    }
    let (run_short, run_long) = congruence_runs(m, alpha, beta, kind);
    if !runs_in_order(m, pinned, &[&run_short, &run_long]) {
        return Err("the cycle does not contain both required runs in order".to_string());
    }
    Ok(SpecialCaseData {
        congruence: kind,
        alpha,
        beta,
        run_short,
        run_long,
        cycle: pinned.clone(),
    })
}

#[derive(Debug, thiserror::Error)]
pub enum SpecialCaseError {
    #[error("precondition unmet: {detail}")]
    PreconditionUnmet { detail: String },
    #[error("surgery broke: {detail}")]
    Broken { detail: String },
}

/// Extract the special subpaths from an elusive cycle in a congruence case.
///
/// Preconditions: the congruence `b = -2a` (for [`CongruenceKind::BetaIsMinusTwoAlpha`])
/// or `a = -2b` (for [`CongruenceKind::AlphaIsMinusTwoBeta`]) holds mod `m`,
/// and the cycle contains the two certified runs with its hooks at offset
/// zero.  The spanning paths are then cut out by fixed local surgeries, and
/// the disjoint pair arises by removing the spokes at `0` and `p`; each
/// result is rebuilt from its edge set and re-verified.
pub fn special_case_paths(
    spec: &IGraphSpec,
    pinned: &HamiltonCycle,
    which: CongruenceKind,
) -> Result<SpecialSubpaths, SpecialCaseError> {
    let IGraphSpec { m, a: alpha, b: beta } = *spec;
    let data = special_case_data(m, alpha, beta, which, pinned)
        .map_err(|detail| SpecialCaseError::PreconditionUnmet { detail })?;
    let g = Graph::from_spec(&spec.to_bicirculant());
    let broken = |detail: String| SpecialCaseError::Broken { detail };
    let p = match which {
        CongruenceKind::BetaIsMinusTwoAlpha => mul_mod(3, alpha, m),
        CongruenceKind::AlphaIsMinusTwoBeta => mul_mod(3, beta, m),
    };
    if p == 0 {
        return Err(SpecialCaseError::PreconditionUnmet {
            detail: "degenerate congruence: the common endpoint collides with 0".to_string(),
        });
    }
    let base = assembly::seq_edges(&g, pinned.seq(), true).map_err(broken)?;
    let mul = |k: u64, s: u64| mul_mod(k, s, m);
    let neg = |x: u64| (m - x % m) % m;
    let (outer, inner) = match which {
        CongruenceKind::BetaIsMinusTwoAlpha => {
            // p = 3*alpha
            let a1 = alpha % m;
            let a2 = mul(2, alpha);
            let a3 = mul(3, alpha);
            let a4 = mul(4, alpha);
            let inner_edges = assembly::surgery(
                &g,
                &base,
                &[
                    (Vertex::v(0), Vertex::v(neg(a2))),
                    (Vertex::u(0), Vertex::u(a1)),
                    (Vertex::u(neg(a1)), Vertex::u(neg(a2))),
                    (Vertex::v(a1), Vertex::v(a3)),
                ],
                &[
                    (Vertex::u(0), Vertex::u(neg(a1))),
                    (Vertex::u(a1), Vertex::v(a1)),
                    (Vertex::u(neg(a2)), Vertex::v(neg(a2))),
                ],
            )
            .map_err(broken)?;
            let inner = assembly::path_from_edges(&g, &inner_edges, Vertex::v(0), Vertex::v(a3))
                .map_err(broken)?;
            let outer_edges = assembly::surgery(
                &g,
                &base,
                &[
                    (Vertex::u(0), Vertex::v(0)),
                    (Vertex::v(a2), Vertex::v(a4)),
                    (Vertex::u(a3), Vertex::u(a4)),
                ],
                &[
                    (Vertex::v(0), Vertex::v(a2)),
                    (Vertex::u(a4), Vertex::v(a4)),
                ],
            )
            .map_err(broken)?;
            let outer = assembly::path_from_edges(&g, &outer_edges, Vertex::u(0), Vertex::u(a3))
                .map_err(broken)?;
            (outer, inner)
        }
        CongruenceKind::AlphaIsMinusTwoBeta => {
            // p = 3*beta
            let b1 = beta % m;
            let b2 = mul(2, beta);
            let b3 = mul(3, beta);
            let b4 = mul(4, beta);
            let ab = (alpha + beta) % m;
            let outer_edges = assembly::surgery(
                &g,
                &base,
                &[
                    (Vertex::u(0), Vertex::u(alpha % m)),
                    (Vertex::v(0), Vertex::v(b1)),
                    (Vertex::v(ab), Vertex::v(alpha % m)),
                    (Vertex::u(b1), Vertex::u(b3)),
                ],
                &[
                    (Vertex::v(0), Vertex::v(neg(b1))),
                    (Vertex::u(b1), Vertex::v(b1)),
                    (Vertex::u(alpha % m), Vertex::v(alpha % m)),
                ],
            )
            .map_err(broken)?;
            let outer = assembly::path_from_edges(&g, &outer_edges, Vertex::u(0), Vertex::u(b3))
                .map_err(broken)?;
            let inner_edges = assembly::surgery(
                &g,
                &base,
                &[
                    (Vertex::u(0), Vertex::v(0)),
                    (Vertex::u(b2), Vertex::u(b4)),
                    (Vertex::v(b3), Vertex::v(b4)),
                ],
                &[
                    (Vertex::u(0), Vertex::u(b2)),
                    (Vertex::u(b4), Vertex::v(b4)),
                ],
            )
            .map_err(broken)?;
            let inner = assembly::path_from_edges(&g, &inner_edges, Vertex::v(0), Vertex::v(b3))
                .map_err(broken)?;
            (outer, inner)
        }
    };
    // Disjoint path pair: drop the spokes at 0 and p from the pinned cycle.
    let pair_edges = assembly::surgery(
        &g,
        &base,
        &[
            (Vertex::u(0), Vertex::v(0)),
            (Vertex::u(p), Vertex::v(p)),
        ],
        &[],
    )
    .map_err(broken)?;
    let (piece_from_u0, piece_from_up) =
        assembly::two_paths_from_edges(&g, &pair_edges, Vertex::u(0), Vertex::u(p))
            .map_err(broken)?;
    let end0 = *piece_from_u0.last().expect("nonempty piece");
    let endp = *piece_from_up.last().expect("nonempty piece");
    if end0 != Vertex::v(p) || endp != Vertex::v(0) {
        return Err(SpecialCaseError::Broken {
            detail: format!(
                "spoke removal produced pieces ending at {end0} and {endp}, expected the \
                 crossed pairing v_{p} and v_0"
            ),
        });
    }
    Ok(SpecialSubpaths {
        congruence: data.congruence,
        alpha,
        beta,
        p,
        outer,
        inner,
        piece_from_u0,
        piece_from_up,
    })
}

// ---------------------------------------------------------------------------
// Elusive resolution
// ---------------------------------------------------------------------------

/// Resolve an elusive four-hooked Hamilton cycle of `I(m; a, b)` into a
/// reusable outcome: a standard four-hooked relabelling, a two-hooked
/// witness, or a certified congruence special case.
///
/// The cycle is first shifted so its hooks sit at offset zero.  A cycle in
/// the second elusive arrangement for `(a, b)` is four-hooked in the first
/// arrangement for `(m - a, b)` after a further shift by `-a`, so the rule
/// engine only ever sees the first pattern.  When no rule lands, a direct
/// witness search runs as a fallback (flagged in the report); the error
/// [`ResolveError::ResolutionFailed`] needs both the rules and the fallback
/// to fail.
pub fn resolve_elusive(
    spec: &IGraphSpec,
    cycle: &HamiltonCycle,
    budget: u64,
) -> Result<ResolutionReport, ResolveError> {
    let IGraphSpec { m, a, b } = *spec;
    let n = 2 * m as usize;
    if cycle.len() != n {
        return Err(ResolveError::NotElusive {
            detail: format!("cycle has {} vertices but the graph has {n}", cycle.len()),
        });
    }
    let seq = cycle.seq();
    let spokes = (0..n)
        .filter(|&i| seq[i].side != seq[(i + 1) % n].side)
        .count();
    if spokes == m as usize {
        return Err(ResolveError::NotElusive { detail: "the cycle is alternating".to_string() });
    }
    if (a + b) % m == 0 || a % m == b % m {
        return Err(ResolveError::NotElusive { detail: "rim steps are aligned".to_string() });
    }
    let hooked = (0..m).find(|&t| hooks_present(m, a, b, cycle, t));
    let shift = match hooked {
        Some(t) => t,
        None => {
            return Err(ResolveError::NotElusive {
                detail: "the cycle is not four-hooked at any offset".to_string(),
            })
        }
    };
    let flag = designated_pattern(m, a, b, cycle, shift);
    if !flag.is_elusive() {
        return Err(ResolveError::NotElusive {
            detail: format!("the cycle is standard four-hooked at offset {shift}"),
        });
    }
    let g = Graph::from_spec(&spec.to_bicirculant());
    resolve_pinned(&g, m, a, b, cycle, shift, flag, budget)
}

/// Rule-engine driver shared by [`resolve_elusive`] and [`usable_cycle`].
/// `shift` and `flag` must come from classification of `cycle`.
#[allow(clippy::too_many_arguments)]
fn resolve_pinned(
    g: &Graph,
    m: u64,
    a: u64,
    b: u64,
    cycle: &HamiltonCycle,
    shift: u64,
    flag: ElusiveFlag,
    budget: u64,
) -> Result<ResolutionReport, ResolveError> {
    let mut notes = Vec::new();
    let mut failures = Vec::new();
    let c0 = cycle.shifted((m - shift % m) % m);
    let (alpha, beta, pinned) = match flag {
        ElusiveFlag::Elusive2 => ((m - a % m) % m, b, c0.shifted((m - a % m) % m)),
        _ => (a, b, c0),
    };
    let mut resolved: Option<(Resolution, Option<String>)> = None;
    match rules::CycleView::new(g, &pinned, alpha, beta) {
        Ok(view) => match rules::run_rules(&view, &mut notes) {
            Ok(rules::EngineOutcome::Resolved(res)) => match res {
                rules::Resolution::Witness { rule, path } => {
                    match normalize_witness(m, a, b, path) {
                        Ok((witness, kind)) => {
                            resolved = Some((
                                Resolution::TwoHookedWitness { kind, witness },
                                Some(rule.to_string()),
                            ));
                        }
                        Err(e) => {
                            failures.push(format!("{rule}: witness normalization failed: {e}"));
                        }
                    }
                }
                rules::Resolution::Standard { rule, cycle: cstd } => {
                    resolved = Some((
                        Resolution::Standard4Hooked(FourHookedData {
                            alpha,
                            beta,
                            cycle: cstd,
                        }),
                        Some(rule.to_string()),
                    ));
                }
                rules::Resolution::Congruence { rule, kind } => {
                    match special_case_data(m, alpha, beta, kind, &pinned) {
                        Ok(data) => {
                            resolved =
                                Some((Resolution::SpecialCase(data), Some(rule.to_string())));
                        }
                        Err(e) => {
                            notes.push(format!(
                                "{rule}: congruence runs not certified ({e}); falling back"
                            ));
                        }
                    }
                }
            },
            Ok(rules::EngineOutcome::NoMatch) => {
                notes.push("no resolution rule matched; falling back to witness search".to_string());
            }
            Err(rules::RuleFailure { rule, reason }) => {
                failures.push(format!("{rule}: {reason}"));
            }
        },
        Err(e) => {
            notes.push(format!("cycle does not pin to the expected pattern ({e}); falling back"));
        }
    }
    if let Some((resolution, rule)) = resolved {
        return Ok(ResolutionReport { resolution, rule, fallback: false, failures, notes });
    }
    match witness_search(g, m, a, b, budget) {
        Ok((witness, kind)) => Ok(ResolutionReport {
            resolution: Resolution::TwoHookedWitness { kind, witness },
            rule: None,
            fallback: true,
            failures,
            notes,
        }),
        Err(WitnessSearchError::Budget { stage }) => Err(ResolveError::SearchBudget { stage }),
        Err(WitnessSearchError::Absent) => Err(ResolveError::ResolutionFailed {
            detail: format!(
                "no rule resolved the cycle and no spanning path exists between either \
                 designated endpoint pair (failures: {failures:?})"
            ),
        }),
    }
}

// ---------------------------------------------------------------------------
// Entry point
// ---------------------------------------------------------------------------

/// Produce a usable form for connected `I(m; a, b)`.
///
/// Aligned rim steps get the explicit cycle.  Otherwise an alternating cycle
/// is preferred when one exists; failing that, a Hamilton cycle found by
/// search is routed through classification, with elusive cycles resolved by
/// the rule table and congruence special cases converted to their spanning
/// subpaths.
pub fn usable_cycle(spec: &IGraphSpec, budget: u64) -> Result<UsableReport, UsableError> {
    let IGraphSpec { m, a, b } = *spec;
    let bspec = spec.to_bicirculant();
    if !bspec.is_connected() {
        return Err(UsableError::Disconnected);
    }
    let g = Graph::from_spec(&bspec);
    let aligned = (a + b) % m == 0 || a % m == b % m;
    if aligned {
        let (cycle, witness) = aligned_rims_cycle(spec)
            .map_err(|e| UsableError::Unresolvable { detail: e.to_string() })?;
        return Ok(UsableReport {
            form: UsableForm::TwoHooked {
                witness,
                kind: TwoHookedKind::InnerEnds,
                source: cycle,
            },
            class: None,
            rule: None,
            fallback: false,
            failures: Vec::new(),
            notes: vec!["aligned rim steps: explicit rim-running cycle".to_string()],
        });
    }
    if let Some(c) = find_alternating_cycle(m, a, b) {
        return Ok(UsableReport {
            form: UsableForm::Alternating(c),
            class: Some(CycleClass::Alternating),
            rule: None,
            fallback: false,
            failures: Vec::new(),
            notes: Vec::new(),
        });
    }
    let c = match find_hamilton_cycle(&g, budget) {
        SearchOutcome::Found(c) => c,
        SearchOutcome::NotFoundWithinBudget { .. } => {
            return Err(UsableError::SearchBudget { stage: "hamilton cycle search" })
        }
        SearchOutcome::ProvedAbsent { .. } => return Err(UsableError::NonHamiltonian),
    };
    let class = match classify_cycle(spec, &c, budget) {
        Ok(cl) => cl,
        Err(ClassifyError::SearchBudget { stage }) => {
            return Err(UsableError::SearchBudget { stage })
        }
        Err(e) => return Err(UsableError::Unresolvable { detail: e.to_string() }),
    };
    match class.clone() {
        CycleClass::Alternating => Ok(UsableReport {
            form: UsableForm::Alternating(c),
            class: Some(class),
            rule: None,
            fallback: false,
            failures: Vec::new(),
            notes: Vec::new(),
        }),
        CycleClass::FourHooked { shift, elusive, .. } if !elusive.is_elusive() => {
            let pinned = c.shifted((m - shift % m) % m);
            Ok(UsableReport {
                form: UsableForm::Standard4Hooked(FourHookedData {
                    alpha: a,
                    beta: b,
                    cycle: pinned,
                }),
                class: Some(class),
                rule: None,
                fallback: false,
                failures: Vec::new(),
                notes: Vec::new(),
            })
        }
        CycleClass::FourHooked { shift, elusive, .. } => {
            let report = match resolve_pinned(&g, m, a, b, &c, shift, elusive, budget) {
                Ok(r) => r,
                Err(ResolveError::SearchBudget { stage }) => {
                    return Err(UsableError::SearchBudget { stage })
                }
                Err(e) => return Err(UsableError::Unresolvable { detail: e.to_string() }),
            };
            let ResolutionReport { resolution, rule, fallback, failures, mut notes } = report;
            let form = match resolution {
                Resolution::Standard4Hooked(d) => UsableForm::Standard4Hooked(d),
                Resolution::TwoHookedWitness { kind, witness } => {
                    UsableForm::TwoHooked { witness, kind, source: c }
                }
                Resolution::SpecialCase(data) => {
                    let relabelled = IGraphSpec::new(m, data.alpha, data.beta)
                        .map_err(|e| UsableError::Unresolvable { detail: e.to_string() })?;
                    match special_case_paths(&relabelled, &data.cycle, data.congruence) {
                        Ok(bundle) => UsableForm::SpecialSubpaths(bundle),
                        Err(e) => {
                            notes.push(format!(
                                "special subpaths unavailable ({e}); falling back to a witness"
                            ));
                            match witness_search(&g, m, a, b, budget) {
                                Ok((witness, kind)) => {
                                    return Ok(UsableReport {
                                        form: UsableForm::TwoHooked {
                                            witness,
                                            kind,
                                            source: c,
                                        },
                                        class: Some(class),
                                        rule,
                                        fallback: true,
                                        failures,
                                        notes,
                                    })
                                }
                                Err(WitnessSearchError::Budget { stage }) => {
                                    return Err(UsableError::SearchBudget { stage })
                                }
                                Err(WitnessSearchError::Absent) => {
                                    return Err(UsableError::Unresolvable {
                                        detail: "special subpaths failed and no witness path \
                                                 exists"
                                            .to_string(),
                                    })
                                }
                            }
                        }
                    }
                }
            };
            Ok(UsableReport { form, class: Some(class), rule, fallback, failures, notes })
        }
        CycleClass::TwoHooked { kind, witness } => Ok(UsableReport {
            form: UsableForm::TwoHooked { witness, kind, source: c },
            class: Some(class),
            rule: None,
            fallback: false,
            failures: Vec::new(),
            notes: Vec::new(),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::assembly::{apply_surgery, Expected, Structure, Surgery};
    use crate::search::{enumerate_hamilton_cycles, DEFAULT_BUDGET};

    fn igraph(m: u64, a: u64, b: u64) -> Graph {
        Graph::from_spec(&IGraphSpec::new(m, a, b).unwrap().to_bicirculant())
    }

    #[test]
    fn aligned_cycle_exists_for_unit_rim() {
        for (m, a, b) in [(3, 1, 1), (4, 1, 3), (5, 2, 3), (7, 2, 5), (9, 2, 7)] {
            let spec = IGraphSpec::new(m, a, b).unwrap();
            let (c, w) = aligned_rims_cycle(&spec).expect("aligned cycle");
            assert_eq!(c.len(), 2 * m as usize);
            assert_eq!(w.endpoints(), (Vertex::v(0), Vertex::v(a % m)));
        }
        // Not aligned: no explicit cycle.
        assert!(aligned_rims_cycle(&IGraphSpec::new(5, 1, 2).unwrap()).is_err());
        // Aligned but no unit rim (disconnected anyway).
        assert!(aligned_rims_cycle(&IGraphSpec::new(8, 2, 6).unwrap()).is_err());
    }

    #[test]
    fn usable_form_for_aligned_rims_is_inner_witness() {
        let spec = IGraphSpec::new(6, 1, 5).unwrap();
        let report = usable_cycle(&spec, DEFAULT_BUDGET).unwrap();
        match report.form {
            UsableForm::TwoHooked { witness, kind, source } => {
                assert_eq!(kind, TwoHookedKind::InnerEnds);
                assert_eq!(witness.endpoints(), (Vertex::v(0), Vertex::v(1)));
                assert_eq!(source.len(), 12);
            }
            other => panic!("expected a two-hooked witness, got {}", other.name()),
        }
    }

    #[test]
    fn cube_cycles_split_into_alternating_and_aligned_errors() {
        let spec = IGraphSpec::new(4, 1, 1).unwrap();
        let g = igraph(4, 1, 1);
        let cycles = enumerate_hamilton_cycles(&g, 10_000, false).unwrap().cycles;
        assert!(!cycles.is_empty());
        let mut alternating = 0usize;
        let mut aligned_errors = 0usize;
        for c in &cycles {
            match classify_cycle(&spec, c, DEFAULT_BUDGET) {
                Ok(CycleClass::Alternating) => alternating += 1,
                Err(ClassifyError::AlignedRimSteps) => aligned_errors += 1,
                other => panic!("unexpected classification {other:?}"),
            }
        }
        assert!(alternating >= 1);
        assert!(aligned_errors >= 1);
    }

    #[test]
    fn classification_is_shift_invariant() {
        let spec = IGraphSpec::new(8, 1, 3).unwrap();
        let g = igraph(8, 1, 3);
        let cycles = enumerate_hamilton_cycles(&g, 50, false).unwrap().cycles;
        assert!(!cycles.is_empty());
        for c in cycles.iter().take(10) {
            let base = classify_cycle(&spec, c, DEFAULT_BUDGET).unwrap();
            for t in 1..8 {
                let shifted = classify_cycle(&spec, &shift_cycle(c, t), DEFAULT_BUDGET).unwrap();
                match (&base, &shifted) {
                    (CycleClass::Alternating, CycleClass::Alternating) => {}
                    (CycleClass::FourHooked { .. }, CycleClass::FourHooked { .. }) => {}
                    (CycleClass::TwoHooked { .. }, CycleClass::TwoHooked { .. }) => {}
                    (b, s) => panic!("class changed under shift: {b:?} vs {s:?}"),
                }
            }
        }
    }

    #[test]
    fn hooks_and_pattern_agree_with_classification() {
        let spec = IGraphSpec::new(7, 1, 2).unwrap();
        let g = igraph(7, 1, 2);
        let cycles = enumerate_hamilton_cycles(&g, 10_000, false).unwrap().cycles;
        assert!(!cycles.is_empty());
        for c in &cycles {
            match classify_cycle(&spec, c, DEFAULT_BUDGET).unwrap() {
                CycleClass::FourHooked { shift, hooks, .. } => {
                    assert!(hooks_present(7, 1, 2, c, shift));
                    assert_eq!(hooks, hook_edges(7, 1, 2, shift));
                    // Smallest offset wins.
                    for t in 0..shift {
                        assert!(!hooks_present(7, 1, 2, c, t));
                    }
                }
                CycleClass::Alternating => {
                    let spokes = c
                        .seq()
                        .iter()
                        .zip(c.seq().iter().cycle().skip(1))
                        .take(c.len())
                        .filter(|(x, y)| x.side != y.side)
                        .count();
                    assert_eq!(spokes, 7);
                }
                CycleClass::TwoHooked { kind, witness } => {
                    let want = match kind {
                        TwoHookedKind::InnerEnds => (Vertex::v(0), Vertex::v(1)),
                        TwoHookedKind::OuterEnds => (Vertex::u(0), Vertex::u(2)),
                    };
                    assert_eq!(witness.endpoints(), want);
                }
            }
        }
    }

    /// Every Hamilton cycle of every small connected I-graph with distinct
    /// rim steps classifies into the trichotomy, and every elusive cycle
    /// resolves without rule failures.
    #[test]
    fn elusive_cycles_resolve_across_small_igraphs() {
        let mut elusive_seen = 0usize;
        let mut specs: Vec<(u64, u64, u64)> = Vec::new();
        for m in 5..=9 {
            for a in 1..m {
                for b in a..m {
                    specs.push((m, a, b));
                }
            }
        }
        // A few larger rim-step mixes, bounded by the enumeration cap.
        for &(m, a, b) in &[(10, 1, 3), (10, 2, 3), (11, 2, 3), (12, 1, 5), (12, 3, 4)] {
            specs.push((m, a, b));
        }
        for (m, a, b) in specs {
            let spec = match IGraphSpec::new(m, a, b) {
                Ok(s) => s,
                Err(_) => continue,
            };
            let bs = spec.to_bicirculant();
            if !bs.is_connected() {
                continue;
            }
            if (a + b) % m == 0 || a % m == b % m {
                continue;
            }
            let g = Graph::from_spec(&bs);
            let cap = if m <= 9 { 100_000 } else { 150 };
            let enumeration = enumerate_hamilton_cycles(&g, cap, false).unwrap();
            for c in &enumeration.cycles {
                let class = classify_cycle(&spec, c, DEFAULT_BUDGET).unwrap_or_else(|e| {
                    panic!("classification failed for I({m};{a},{b}) cycle {c}: {e}")
                });
                let elusive = match &class {
                    CycleClass::FourHooked { elusive, .. } if elusive.is_elusive() => *elusive,
                    _ => continue,
                };
                assert!(elusive.is_elusive());
                elusive_seen += 1;
                let r = resolve_elusive(&spec, c, DEFAULT_BUDGET).unwrap_or_else(|e| {
                    panic!("resolution failed for I({m};{a},{b}) cycle {c}: {e}")
                });
                assert!(
                    r.failures.is_empty(),
                    "rule failures for I({m};{a},{b}) cycle {c}: {:?}",
                    r.failures
                );
                match &r.resolution {
                    Resolution::TwoHookedWitness { kind, witness } => {
                        let want = match kind {
                            TwoHookedKind::InnerEnds => (Vertex::v(0), Vertex::v(a)),
                            TwoHookedKind::OuterEnds => (Vertex::u(0), Vertex::u(b)),
                        };
                        assert_eq!(witness.endpoints(), want);
                    }
                    Resolution::Standard4Hooked(f) => {
                        assert!(hooks_present(m, f.alpha, f.beta, &f.cycle, 0));
                        assert_eq!(
                            designated_pattern(m, f.alpha, f.beta, &f.cycle, 0),
                            ElusiveFlag::Standard
                        );
                    }
                    Resolution::SpecialCase(sc) => {
                        assert!(runs_in_order(m, &sc.cycle, &[&sc.run_short, &sc.run_long]));
                        let relabelled = IGraphSpec::new(m, sc.alpha, sc.beta).unwrap();
                        let bundle =
                            special_case_paths(&relabelled, &sc.cycle, sc.congruence).unwrap();
                        assert_eq!(
                            bundle.outer.endpoints(),
                            (Vertex::u(0), Vertex::u(bundle.p))
                        );
                        assert_eq!(
                            bundle.inner.endpoints(),
                            (Vertex::v(0), Vertex::v(bundle.p))
                        );
                        assert_eq!(
                            bundle.piece_from_u0.len() + bundle.piece_from_up.len(),
                            2 * m as usize
                        );
                    }
                }
            }
        }
        // The sweep is only meaningful if it actually visited elusive cycles.
        assert!(elusive_seen > 0, "no elusive cycles in the sweep");
    }

    /// In the rim congruence `b = -2a (mod m)`, cycles containing the two
    /// certified runs partition into the documented spanning subpaths.
    #[test]
    fn congruence_special_cases_partition_the_vertices() {
        let mut seen = 0usize;
        for m in 7..=12u64 {
            let a = 1u64;
            let b = (2 * m - 2 * a) % m; // b = -2a
            let spec = match IGraphSpec::new(m, a, b) {
                Ok(s) => s,
                Err(_) => continue,
            };
            if !spec.to_bicirculant().is_connected() {
                continue;
            }
            if (a + b) % m == 0 || a % m == b % m {
                continue;
            }
            let g = igraph(m, a, b);
            let cap = if m <= 10 { 100_000 } else { 5_000 };
            let enumeration = enumerate_hamilton_cycles(&g, cap, false).unwrap();
            for c in &enumeration.cycles {
                for t in 0..m {
                    let pinned = shift_cycle(c, (m - t) % m);
                    if special_case_data(m, a, b, CongruenceKind::BetaIsMinusTwoAlpha, &pinned)
                        .is_err()
                    {
                        continue;
                    }
                    match special_case_paths(
                        &spec,
                        &pinned,
                        CongruenceKind::BetaIsMinusTwoAlpha,
                    ) {
                        Ok(bundle) => {
                            seen += 1;
                            let p = mul_mod(3, a, m);
                            assert_eq!(bundle.p, p);
                            assert_eq!(bundle.outer.endpoints(), (Vertex::u(0), Vertex::u(p)));
                            assert_eq!(bundle.inner.endpoints(), (Vertex::v(0), Vertex::v(p)));
                            assert_eq!(bundle.piece_from_u0.first(), Some(&Vertex::u(0)));
                            assert_eq!(bundle.piece_from_u0.last(), Some(&Vertex::v(p)));
                            assert_eq!(bundle.piece_from_up.first(), Some(&Vertex::u(p)));
                            assert_eq!(bundle.piece_from_up.last(), Some(&Vertex::v(0)));
                            let mut all: Vec<Vertex> = bundle.piece_from_u0.clone();
                            all.extend(bundle.piece_from_up.iter().copied());
                            all.sort_unstable();
                            all.dedup();
                            assert_eq!(all.len(), 2 * m as usize, "pieces must partition V");
                        }
                        Err(SpecialCaseError::Broken { detail }) => {
                            panic!("surgery broke on a certified special case: {detail}")
                        }
                        // The runs alone do not promise the extra edges the
                        // spanning-path surgeries consume; skipping is fine.
                        Err(SpecialCaseError::PreconditionUnmet { .. }) => {}
                    }
                }
            }
        }
        assert!(seen > 0, "no congruence special case exercised the surgeries");
    }

    /// The documented spoke-exchange surgery: removing the spokes at `a` and
    /// `a+b` and adding the chord `v_a v_{a+b}` turns a suitable cycle into
    /// a spanning path from `u_a` to `u_{a+b}`.
    #[test]
    fn documented_spoke_exchange_surgery_yields_outer_path() {
        let (m, a, b) = (7u64, 1u64, 2u64);
        let g = igraph(m, a, b);
        let ab = (a + b) % m;
        let surgery = Surgery {
            remove: vec![
                (Vertex::u(a), Vertex::v(a)),
                (Vertex::u(ab), Vertex::v(ab)),
            ],
            add: vec![(Vertex::v(a), Vertex::v(ab))],
            expected: Expected::Path(Vertex::u(a), Vertex::u(ab)),
        };
        let cycles = enumerate_hamilton_cycles(&g, 10_000, false).unwrap().cycles;
        let mut fired = 0usize;
        for c in &cycles {
            if let Ok(Structure::Path(p)) = apply_surgery(&g, &Structure::Cycle(c.clone()), &surgery)
            {
                fired += 1;
                let (x, y) = p.endpoints();
                assert_eq!(
                    (x.min(y), x.max(y)),
                    (
                        Vertex::u(a).min(Vertex::u(ab)),
                        Vertex::u(a).max(Vertex::u(ab))
                    )
                );
                assert_eq!(p.seq().len(), 2 * m as usize);
            }
        }
        assert!(fired > 0, "the documented surgery never applied");
    }

    #[test]
    fn usable_cycle_reports_non_hamiltonian_petersen() {
        let spec = IGraphSpec::new(5, 1, 2).unwrap();
        match usable_cycle(&spec, DEFAULT_BUDGET) {
            Err(UsableError::NonHamiltonian) => {}
            other => panic!("expected NonHamiltonian, got {other:?}"),
        }
    }

    #[test]
    fn usable_cycle_reports_disconnected() {
        let spec = IGraphSpec::new(12, 2, 4).unwrap();
        match usable_cycle(&spec, DEFAULT_BUDGET) {
            Err(UsableError::Disconnected) => {}
            other => panic!("expected Disconnected, got {other:?}"),
        }
    }

    #[test]
    fn usable_cycle_produces_verified_forms() {
        for (m, a, b) in [(7, 1, 2), (8, 1, 3), (9, 2, 3), (10, 2, 3), (12, 3, 4)] {
            let spec = IGraphSpec::new(m, a, b).unwrap();
            let report = usable_cycle(&spec, DEFAULT_BUDGET).unwrap();
            assert!(report.failures.is_empty(), "failures for I({m};{a},{b})");
            match &report.form {
                UsableForm::Alternating(c) => assert_eq!(c.len(), 2 * m as usize),
                UsableForm::Standard4Hooked(f) => {
                    assert!(hooks_present(m, f.alpha, f.beta, &f.cycle, 0))
                }
                UsableForm::TwoHooked { witness, .. } => {
                    assert_eq!(witness.seq().len(), 2 * m as usize)
                }
                UsableForm::SpecialSubpaths(sp) => {
                    assert_eq!(sp.outer.seq().len(), 2 * m as usize)
                }
            }
        }
    }
}
