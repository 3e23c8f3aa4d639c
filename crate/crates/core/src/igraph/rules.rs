//! Resolution rules for elusive four-hooked Hamilton cycles.
//!
//! A cycle handed to this module has been normalized so that, for rim steps
//! `(alpha, beta)`, the four hook edges sit at offset zero and the eight
//! designated vertices read in the first elusive pattern when the cycle is
//! traversed from `u_0` towards `u_alpha`.  Removing the four hooks leaves
//! four arcs:
//!
//! * arc `A`: `u_alpha  .. u_beta`
//! * arc `B`: `u_{alpha+beta} .. v_{alpha+beta}`
//! * arc `C`: `v_alpha  .. v_beta`
//! * arc `D`: `v_0 .. u_0`
//!
//! Every rule is a conjunction of structural atoms over symbolic vertices
//! `u[i,j] = u_{i*alpha + j*beta}` plus an action: an edge surgery producing a
//! spanning path witness, a relabelling that exhibits the same cycle as a
//! standard four-hooked cycle at another offset, or the detection of one of
//! the two rim congruences that require the partitioned-path treatment.
//! Rules are tried in order; the first whose atoms all hold decides the
//! outcome.  A rule that fires but whose guaranteed surgery fails to verify is
//! reported as a rule failure, never silently skipped.

use crate::assembly;
use crate::graph::{Graph, Side, Vertex};
use crate::search::{HamiltonCycle, HamiltonPath};
use std::collections::BTreeSet;

/// Symbolic vertex: side plus coefficients of `alpha` and `beta`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Sym {
    side: Side,
    ca: i64,
    cb: i64,
}

fn u(ca: i64, cb: i64) -> Sym {
    Sym { side: Side::Outer, ca, cb }
}

fn v(ca: i64, cb: i64) -> Sym {
    Sym { side: Side::Inner, ca, cb }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum ArcId {
    A,
    B,
    C,
    D,
}

#[derive(Clone, Debug)]
pub(crate) enum Atom {
    /// The pair is an edge of the cycle.
    In(Sym, Sym),
    /// The pair is not an edge of the cycle.
    Out(Sym, Sym),
    /// The vertices are consecutive on the cycle, in either direction.
    Chain(Vec<Sym>),
    /// The vertices are consecutive inside the arc, in arc direction.
    ArcSeq(ArcId, Vec<Sym>),
    /// The pair is a cycle edge lying inside the arc.
    InArc(ArcId, Sym, Sym),
    /// The pair is a cycle edge lying outside the arc.
    NotInArc(ArcId, Sym, Sym),
    /// First edge strictly precedes the second along the arc (both inside).
    Precedes(ArcId, (Sym, Sym), (Sym, Sym)),
    /// The vertices appear on the cycle in the given circular order,
    /// up to rotation and reflection.
    Order(Vec<Sym>),
    /// The vertices are pairwise distinct and `Order` does not hold.
    NotOrder(Vec<Sym>),
    /// beta = -2*alpha (mod m)
    CongBeta(bool),
    /// alpha = -2*beta (mod m)
    CongAlpha(bool),
    /// Disjunction of conjunctions.
    AnyOf(Vec<Vec<Atom>>),
}

#[derive(Clone, Debug)]
pub(crate) struct Move {
    rm: Vec<(Sym, Sym)>,
    add: Vec<(Sym, Sym)>,
    /// Expected endpoints of the resulting spanning path; `None` means the
    /// surgery must close into a new spanning cycle.
    ends: Option<(Sym, Sym)>,
}

#[derive(Clone, Debug)]
pub(crate) enum Action {
    /// Apply the surgery; the result is a spanning path witness.
    Cut(Move),
    /// The cycle is standard four-hooked at offset `ca*alpha + cb*beta`.
    Relabel(i64, i64),
    /// Like `Relabel`, but failure falls through to later rules.
    TryRelabel(i64, i64),
    /// Surgery yields a new spanning cycle which is then relabelled.
    CutThenRelabel(Move, i64, i64),
    /// One of the rim congruences holds; use partitioned paths.
    Congruence,
}

#[derive(Clone, Debug)]
pub(crate) struct Rule {
    pub(crate) id: &'static str,
    when: Vec<Atom>,
    action: Action,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum CongruenceKind {
    /// beta = -2*alpha (mod m)
    BetaIsMinusTwoAlpha,
    /// alpha = -2*beta (mod m)
    AlphaIsMinusTwoBeta,
}

impl CongruenceKind {
    pub fn name(&self) -> &'static str {
        match self {
            CongruenceKind::BetaIsMinusTwoAlpha => "beta-is-minus-two-alpha",
            CongruenceKind::AlphaIsMinusTwoBeta => "alpha-is-minus-two-beta",
        }
    }
}

#[derive(Debug)]
pub(crate) enum Resolution {
    Witness { rule: &'static str, path: HamiltonPath },
    Standard { rule: &'static str, cycle: HamiltonCycle },
    Congruence { rule: &'static str, kind: CongruenceKind },
}

#[derive(Debug)]
pub(crate) enum EngineOutcome {
    Resolved(Resolution),
    NoMatch,
}

#[derive(Debug)]
pub(crate) struct RuleFailure {
    pub(crate) rule: &'static str,
    pub(crate) reason: String,
}

/// A Hamilton cycle pinned to the orientation used by the rule table.
pub(crate) struct CycleView<'g> {
    g: &'g Graph,
    m: u64,
    alpha: u64,
    beta: u64,
    cycle: HamiltonCycle,
    /// Position of each dense id in the pinned traversal order
    /// (`u_0` at 0, `u_alpha` at 1).
    pos: Vec<usize>,
    /// Positions of the eight designated vertices in first-pattern order.
    dpos: [usize; 8],
    edges: assembly::EdgeSet,
    n: usize,
}

impl<'g> CycleView<'g> {
    pub(crate) fn new(
        g: &'g Graph,
        cycle: &HamiltonCycle,
        alpha: u64,
        beta: u64,
    ) -> Result<Self, String> {
        let m = g.m();
        let n = g.n();
        if cycle.len() != n {
            return Err(format!("cycle has {} vertices, graph has {}", cycle.len(), n));
        }
        let ids: Vec<usize> = cycle.seq().iter().map(|&w| g.id(w)).collect();
        let u0 = g.id(Vertex::u(0));
        let p0 = ids
            .iter()
            .position(|&x| x == u0)
            .ok_or_else(|| "cycle does not contain u0".to_string())?;
        let mut seq: Vec<usize> = ids[p0..].iter().chain(ids[..p0].iter()).copied().collect();
        let ua = g.id(Vertex::u(alpha % m));
        if seq[1] != ua {
            if seq[n - 1] == ua {
                seq[1..].reverse();
            } else {
                return Err("cycle lacks the hook edge at u0".to_string());
            }
        }
        let mut pos = vec![0usize; n];
        for (i, &id) in seq.iter().enumerate() {
            pos[id] = i;
        }
        let idx = |s: Sym| -> usize {
            let w = resolve_vertex(m, alpha, beta, s);
            g.id(w)
        };
        let designated = [
            u(0, 0),
            u(1, 0),
            u(0, 1),
            u(1, 1),
            v(1, 1),
            v(1, 0),
            v(0, 1),
            v(0, 0),
        ];
        let mut dpos = [0usize; 8];
        for (k, &s) in designated.iter().enumerate() {
            dpos[k] = pos[idx(s)];
        }
        for k in 1..8 {
            if dpos[k] <= dpos[k - 1] {
                return Err("designated vertices are not in the first elusive pattern".to_string());
            }
        }
        if dpos[1] != 1 || dpos[3] != dpos[2] + 1 || dpos[5] != dpos[4] + 1 || dpos[7] != dpos[6] + 1
        {
            return Err("hook edges are not where the first elusive pattern puts them".to_string());
        }
        let vseq: Vec<Vertex> = seq.iter().map(|&id| g.vertex(id)).collect();
        let edges = assembly::seq_edges(g, &vseq, true)?;
        Ok(CycleView {
            g,
            m,
            alpha,
            beta,
            cycle: cycle.clone(),
            pos,
            dpos,
            edges,
            n,
        })
    }

    fn resolve(&self, s: Sym) -> usize {
        self.g.id(resolve_vertex(self.m, self.alpha, self.beta, s))
    }

    fn vertex_of(&self, s: Sym) -> Vertex {
        resolve_vertex(self.m, self.alpha, self.beta, s)
    }

    fn edge_between(&self, a: usize, b: usize) -> bool {
        if a == b {
            return false;
        }
        let (pa, pb) = (self.pos[a], self.pos[b]);
        let d = (pa + self.n - pb) % self.n;
        d == 1 || d == self.n - 1
    }

    /// (start position, length in edges) of an arc; member offsets are
    /// `0..=len` along the pinned direction.
    fn arc_bounds(&self, arc: ArcId) -> (usize, usize) {
        let (start, end) = match arc {
            ArcId::A => (self.dpos[1], self.dpos[2]),
            ArcId::B => (self.dpos[3], self.dpos[4]),
            ArcId::C => (self.dpos[5], self.dpos[6]),
            ArcId::D => (self.dpos[7], 0),
        };
        let len = (end + self.n - start) % self.n;
        (start, len)
    }

    fn arc_offset(&self, arc: ArcId, id: usize) -> Option<usize> {
        let (start, len) = self.arc_bounds(arc);
        let off = (self.pos[id] + self.n - start) % self.n;
        if off <= len {
            Some(off)
        } else {
            None
        }
    }

    fn edge_in_arc(&self, arc: ArcId, x: Sym, y: Sym) -> Option<usize> {
        let (a, b) = (self.resolve(x), self.resolve(y));
        if !self.edge_between(a, b) {
            return None;
        }
        let (oa, ob) = (self.arc_offset(arc, a)?, self.arc_offset(arc, b)?);
        if oa.abs_diff(ob) != 1 {
            return None;
        }
        Some(oa.min(ob))
    }

    fn order_holds(&self, syms: &[Sym]) -> Option<bool> {
        let ids: Vec<usize> = syms.iter().map(|&s| self.resolve(s)).collect();
        let distinct: BTreeSet<usize> = ids.iter().copied().collect();
        if distinct.len() != ids.len() {
            return None;
        }
        let base = self.pos[ids[0]];
        let offs: Vec<usize> = ids[1..]
            .iter()
            .map(|&id| (self.pos[id] + self.n - base) % self.n)
            .collect();
        let fwd = offs.windows(2).all(|w| w[0] < w[1]);
        let rev = offs.windows(2).all(|w| w[0] > w[1]);
        Some(fwd || rev)
    }

    fn eval(&self, atom: &Atom) -> bool {
        match atom {
            Atom::In(x, y) => self.edge_between(self.resolve(*x), self.resolve(*y)),
            Atom::Out(x, y) => {
                let (a, b) = (self.resolve(*x), self.resolve(*y));
                a != b && !self.edge_between(a, b)
            }
            Atom::Chain(syms) => {
                let ids: Vec<usize> = syms.iter().map(|&s| self.resolve(s)).collect();
                let distinct: BTreeSet<usize> = ids.iter().copied().collect();
                if distinct.len() != ids.len() || ids.len() < 2 {
                    return false;
                }
                let step = (self.pos[ids[1]] + self.n - self.pos[ids[0]]) % self.n;
                if step != 1 && step != self.n - 1 {
                    return false;
                }
                ids.windows(2).all(|w| {
                    (self.pos[w[1]] + self.n - self.pos[w[0]]) % self.n == step
                })
            }
            Atom::ArcSeq(arc, syms) => {
                let offs: Option<Vec<usize>> = syms
                    .iter()
                    .map(|&s| self.arc_offset(*arc, self.resolve(s)))
                    .collect();
                match offs {
                    Some(offs) => offs.windows(2).all(|w| w[1] == w[0] + 1),
                    None => false,
                }
            }
            Atom::InArc(arc, x, y) => self.edge_in_arc(*arc, *x, *y).is_some(),
            Atom::NotInArc(arc, x, y) => {
                self.edge_between(self.resolve(*x), self.resolve(*y))
                    && self.edge_in_arc(*arc, *x, *y).is_none()
            }
            Atom::Precedes(arc, e1, e2) => {
                match (self.edge_in_arc(*arc, e1.0, e1.1), self.edge_in_arc(*arc, e2.0, e2.1)) {
                    (Some(o1), Some(o2)) => o1 < o2,
                    _ => false,
                }
            }
            Atom::Order(syms) => self.order_holds(syms).unwrap_or(false),
            Atom::NotOrder(syms) => match self.order_holds(syms) {
                Some(holds) => !holds,
                None => false,
            },
            Atom::CongBeta(want) => (self.cong_beta_holds()) == *want,
            Atom::CongAlpha(want) => (self.cong_alpha_holds()) == *want,
            Atom::AnyOf(alts) => alts.iter().any(|conj| conj.iter().all(|a| self.eval(a))),
        }
    }

    fn cong_beta_holds(&self) -> bool {
        // beta = -2*alpha (mod m)
        (2 * self.alpha + self.beta) % self.m == 0
    }

    fn cong_alpha_holds(&self) -> bool {
        // alpha = -2*beta (mod m)
        (self.alpha + 2 * self.beta) % self.m == 0
    }

    fn resolve_pairs(&self, pairs: &[(Sym, Sym)]) -> Vec<(Vertex, Vertex)> {
        pairs
            .iter()
            .map(|&(x, y)| (self.vertex_of(x), self.vertex_of(y)))
            .collect()
    }

    fn cut_to_path(&self, mv: &Move) -> Result<HamiltonPath, String> {
        let (ex, ey) = mv.ends.ok_or_else(|| "surgery without endpoints".to_string())?;
        let edges = assembly::surgery(
            self.g,
            &self.edges,
            &self.resolve_pairs(&mv.rm),
            &self.resolve_pairs(&mv.add),
        )?;
        assembly::path_from_edges(self.g, &edges, self.vertex_of(ex), self.vertex_of(ey))
    }

    fn cut_to_cycle(&self, mv: &Move) -> Result<HamiltonCycle, String> {
        let edges = assembly::surgery(
            self.g,
            &self.edges,
            &self.resolve_pairs(&mv.rm),
            &self.resolve_pairs(&mv.add),
        )?;
        assembly::cycle_from_edges(self.g, &edges)
    }

    fn offset_of(&self, ca: i64, cb: i64) -> u64 {
        let mi = self.m as i128;
        let x = ca as i128 * self.alpha as i128 + cb as i128 * self.beta as i128;
        (((x % mi) + mi) % mi) as u64
    }

    /// Re-express the cycle with hooks at offset `ca*alpha + cb*beta`; the
    /// result must be a standard four-hooked cycle at offset zero.
    fn relabelled_standard(&self, cycle: &HamiltonCycle, ca: i64, cb: i64) -> Result<HamiltonCycle, String> {
        let s = self.offset_of(ca, cb);
        let c2 = cycle.shifted((self.m - s % self.m) % self.m);
        if !super::hooks_present(self.m, self.alpha, self.beta, &c2, 0) {
            return Err("relabelled cycle is not four-hooked at the claimed offset".to_string());
        }
        match super::designated_pattern(self.m, self.alpha, self.beta, &c2, 0) {
            super::ElusiveFlag::Standard => Ok(c2),
            super::ElusiveFlag::Elusive1 | super::ElusiveFlag::Elusive2 => {
                Err("relabelled cycle is elusive again".to_string())
            }
        }
    }
}

pub(crate) fn resolve_vertex(m: u64, alpha: u64, beta: u64, s: Sym) -> Vertex {
    let mi = m as i128;
    let x = s.ca as i128 * alpha as i128 + s.cb as i128 * beta as i128;
    let idx = (((x % mi) + mi) % mi) as u64;
    Vertex { side: s.side, index: idx }
}

/// Run the rule table against a pinned view.  `notes` receives remarks about
/// attempted-but-skipped relabellings.
pub(crate) fn run_rules(
    view: &CycleView<'_>,
    notes: &mut Vec<String>,
) -> Result<EngineOutcome, RuleFailure> {
    for rule in rule_table() {
        if !rule.when.iter().all(|a| view.eval(a)) {
            continue;
        }
        match &rule.action {
            Action::Cut(mv) => {
                return match view.cut_to_path(mv) {
                    Ok(path) => Ok(EngineOutcome::Resolved(Resolution::Witness {
                        rule: rule.id,
                        path,
                    })),
                    Err(reason) => Err(RuleFailure { rule: rule.id, reason }),
                };
            }
            Action::Relabel(ca, cb) => {
                return match view.relabelled_standard(&view.cycle, *ca, *cb) {
                    Ok(cycle) => Ok(EngineOutcome::Resolved(Resolution::Standard {
                        rule: rule.id,
                        cycle,
                    })),
                    Err(reason) => Err(RuleFailure { rule: rule.id, reason }),
                };
            }
            Action::TryRelabel(ca, cb) => match view.relabelled_standard(&view.cycle, *ca, *cb) {
                Ok(cycle) => {
                    return Ok(EngineOutcome::Resolved(Resolution::Standard {
                        rule: rule.id,
                        cycle,
                    }))
                }
                Err(reason) => {
                    notes.push(format!("{}: relabel attempt skipped ({reason})", rule.id));
                    continue;
                }
            },
            Action::CutThenRelabel(mv, ca, cb) => {
                let cycle1 = match view.cut_to_cycle(mv) {
                    Ok(c) => c,
                    Err(reason) => return Err(RuleFailure { rule: rule.id, reason }),
                };
                return match view.relabelled_standard(&cycle1, *ca, *cb) {
                    Ok(cycle) => Ok(EngineOutcome::Resolved(Resolution::Standard {
                        rule: rule.id,
                        cycle,
                    })),
                    Err(reason) => Err(RuleFailure { rule: rule.id, reason }),
                };
            }
            Action::Congruence => {
                let kind = if view.cong_beta_holds() {
                    CongruenceKind::BetaIsMinusTwoAlpha
                } else if view.cong_alpha_holds() {
                    CongruenceKind::AlphaIsMinusTwoBeta
                } else {
                    return Err(RuleFailure {
                        rule: rule.id,
                        reason: "congruence rule fired without a congruence".to_string(),
                    });
                };
                return Ok(EngineOutcome::Resolved(Resolution::Congruence {
                    rule: rule.id,
                    kind,
                }));
            }
        }
    }
    Ok(EngineOutcome::NoMatch)
}

// ---------------------------------------------------------------------------
// Rule table
// ---------------------------------------------------------------------------

fn in_(x: Sym, y: Sym) -> Atom {
    Atom::In(x, y)
}

fn out(x: Sym, y: Sym) -> Atom {
    Atom::Out(x, y)
}

fn chain(syms: &[Sym]) -> Atom {
    Atom::Chain(syms.to_vec())
}

fn arcseq(arc: ArcId, syms: &[Sym]) -> Atom {
    Atom::ArcSeq(arc, syms.to_vec())
}

fn in_arc(arc: ArcId, x: Sym, y: Sym) -> Atom {
    Atom::InArc(arc, x, y)
}

fn not_in_arc(arc: ArcId, x: Sym, y: Sym) -> Atom {
    Atom::NotInArc(arc, x, y)
}

fn precedes(arc: ArcId, e1: (Sym, Sym), e2: (Sym, Sym)) -> Atom {
    Atom::Precedes(arc, e1, e2)
}

fn order(syms: &[Sym]) -> Atom {
    Atom::Order(syms.to_vec())
}

fn not_order(syms: &[Sym]) -> Atom {
    Atom::NotOrder(syms.to_vec())
}

fn no_cong() -> Vec<Atom> {
    vec![Atom::CongBeta(false), Atom::CongAlpha(false)]
}

fn cut(rm: &[(Sym, Sym)], add: &[(Sym, Sym)], ends: (Sym, Sym)) -> Action {
    Action::Cut(Move { rm: rm.to_vec(), add: add.to_vec(), ends: Some(ends) })
}

fn cut_cycle(rm: &[(Sym, Sym)], add: &[(Sym, Sym)], ca: i64, cb: i64) -> Action {
    Action::CutThenRelabel(Move { rm: rm.to_vec(), add: add.to_vec(), ends: None }, ca, cb)
}

fn rule(id: &'static str, mut ctx: Vec<Atom>, extra: Vec<Atom>, action: Action) -> Rule {
    ctx.extend(extra);
    Rule { id, when: ctx, action }
}

fn ctx_one() -> Vec<Atom> {
    vec![in_(v(-1, 0), v(-1, 1)), in_(v(-1, 0), v(-1, -1))]
}

fn ctx_two() -> Vec<Atom> {
    vec![in_(u(0, 0), u(-1, 0)), in_(u(-1, 0), v(-1, 0))]
}

fn ctx_three() -> Vec<Atom> {
    vec![
        in_(v(0, 0), u(0, 0)),
        in_(u(1, 1), v(1, 1)),
        in_(u(1, 0), u(2, 0)),
        in_(u(2, 0), v(2, 0)),
        in_(v(1, 0), v(1, -1)),
        in_(v(1, -1), u(1, -1)),
    ]
}

fn ctx_four() -> Vec<Atom> {
    let mut c = ctx_three();
    c.extend(no_cong());
    c.extend(vec![
        in_(u(2, 1), v(2, 1)),
        order(&[u(1, 1), v(1, 1), v(2, 1), u(2, 1)]),
        in_(v(2, 0), v(2, -1)),
        in_(u(1, -1), u(2, -1)),
        order(&[v(0, 0), u(0, 0), u(0, -1), v(0, -1)]),
        in_(u(0, -1), v(0, -1)),
    ]);
    c
}

fn ctx_cross() -> Vec<Atom> {
    let mut c = ctx_four();
    c.extend(vec![
        in_arc(ArcId::C, u(0, -1), v(0, -1)),
        in_arc(ArcId::A, u(2, 1), v(2, 1)),
    ]);
    c
}

fn cond_x1() -> Vec<Atom> {
    vec![
        in_arc(ArcId::A, u(-1, 0), v(-1, 0)),
        precedes(ArcId::A, (u(2, 1), v(2, 1)), (u(-1, 0), v(-1, 0))),
    ]
}

fn cond_x2() -> Vec<Atom> {
    vec![
        arcseq(ArcId::C, &[v(-1, -1), v(-1, 0), u(-1, 0)]),
        precedes(ArcId::C, (u(-1, 0), v(-1, 0)), (u(0, -1), v(0, -1))),
    ]
}

fn cond_y1() -> Vec<Atom> {
    vec![
        arcseq(ArcId::A, &[v(1, 2), u(1, 2), u(2, 2)]),
        precedes(ArcId::A, (u(1, 2), v(1, 2)), (u(2, 1), v(2, 1))),
    ]
}

fn cond_y2() -> Vec<Atom> {
    vec![chain(&[v(0, 2), u(0, 2), u(1, 2), v(1, 2)])]
}

fn y1_or_y2() -> Atom {
    Atom::AnyOf(vec![cond_y1(), cond_y2()])
}

pub(crate) fn rule_table() -> Vec<Rule> {
    use ArcId::{A, B, C, D};
    let fwd = [v(-1, 1), v(-1, 0), v(-1, -1)];
    let rev = [v(-1, -1), v(-1, 0), v(-1, 1)];
    vec![
        // -- family one: v_{-alpha} lies between both of its rim neighbours --
        rule(
            "one.a.fwd",
            ctx_one(),
            vec![arcseq(A, &fwd)],
            cut(
                &[(v(-1, 0), v(-1, -1)), (u(0, 0), u(-1, 0)), (v(0, 0), v(0, -1))],
                &[(u(-1, 0), v(-1, 0)), (u(0, 0), v(0, 0))],
                (v(0, -1), v(-1, -1)),
            ),
        ),
        rule("one.a.rev", ctx_one(), vec![arcseq(A, &rev)], Action::Relabel(1, 0)),
        rule(
            "one.b.fwd",
            ctx_one(),
            vec![arcseq(B, &fwd)],
            cut(
                &[(u(0, 1), u(-1, 1)), (v(0, 0), v(0, 1)), (v(-1, 0), v(-1, 1))],
                &[(u(0, 1), v(0, 1)), (u(-1, 1), v(-1, 1))],
                (v(0, 0), v(-1, 0)),
            ),
        ),
        rule(
            "one.b.rev",
            ctx_one(),
            vec![arcseq(B, &rev)],
            cut(
                &[(u(0, 1), u(-1, 1)), (u(0, 0), u(-1, 0)), (v(-1, 0), v(-1, 1))],
                &[(u(-1, 0), v(-1, 0)), (u(-1, 1), v(-1, 1))],
                (u(0, 0), u(0, 1)),
            ),
        ),
        rule(
            "one.c.fwd",
            ctx_one(),
            vec![arcseq(C, &fwd)],
            cut(
                &[(u(0, 1), u(-1, 1)), (v(0, 0), v(0, 1)), (v(-1, 0), v(-1, 1))],
                &[(u(0, 1), v(0, 1)), (u(-1, 1), v(-1, 1))],
                (v(0, 0), v(-1, 0)),
            ),
        ),
        rule(
            "one.c.rev",
            ctx_one(),
            vec![arcseq(C, &rev)],
            cut(
                &[(u(0, 0), u(-1, 0)), (v(0, 0), v(0, -1)), (v(-1, 0), v(-1, -1))],
                &[(u(-1, 0), v(-1, 0)), (u(0, 0), v(0, 0))],
                (v(0, -1), v(-1, -1)),
            ),
        ),
        rule(
            "one.d.rev",
            ctx_one(),
            vec![arcseq(D, &rev)],
            cut(
                &[(u(0, 1), u(-1, 1)), (u(0, 0), u(-1, 0)), (v(-1, 0), v(-1, 1))],
                &[(u(-1, 0), v(-1, 0)), (u(-1, 1), v(-1, 1))],
                (u(0, 0), u(0, 1)),
            ),
        ),
        rule(
            "one.d.spoke.ahead",
            ctx_one(),
            vec![arcseq(D, &fwd), in_(u(0, -1), v(0, -1)), in_(u(0, -1), u(1, -1))],
            cut(
                &[(u(-1, -1), v(-1, -1)), (u(0, -1), v(0, -1))],
                &[(u(0, -1), u(-1, -1))],
                (v(0, -1), v(-1, -1)),
            ),
        ),
        rule(
            "one.d.spoke.behind",
            ctx_one(),
            vec![arcseq(D, &fwd), in_(u(0, -1), v(0, -1)), in_(u(0, -1), u(-1, -1))],
            cut(
                &[(u(0, -1), v(0, -1)), (u(1, -1), v(1, -1))],
                &[(u(0, -1), u(1, -1))],
                (v(0, -1), v(1, -1)),
            ),
        ),
        rule(
            "one.d.run.std",
            ctx_one(),
            vec![
                arcseq(D, &fwd),
                out(u(0, -1), v(0, -1)),
                arcseq(C, &[u(1, -1), u(0, -1), u(-1, -1)]),
            ],
            Action::Relabel(0, 1),
        ),
        rule(
            "one.d.run.try",
            ctx_one(),
            vec![
                arcseq(D, &fwd),
                out(u(0, -1), v(0, -1)),
                chain(&[u(-1, -1), u(0, -1), u(1, -1)]),
            ],
            Action::TryRelabel(0, 1),
        ),
        // -- family two: u_{-alpha} sits between u_0 and its own spoke --
        rule(
            "two.a1",
            ctx_two(),
            vec![in_(u(0, -1), v(0, -1)), out(u(0, -1), u(1, -1))],
            cut(
                &[(u(1, -1), v(1, -1)), (u(0, -1), v(0, -1))],
                &[(u(0, -1), u(1, -1))],
                (v(0, -1), v(1, -1)),
            ),
        ),
        rule(
            "two.a2",
            ctx_two(),
            vec![
                in_(u(0, -1), v(0, -1)),
                in_(u(0, -1), u(1, -1)),
                out(v(-1, 0), v(-1, 1)),
            ],
            cut(
                &[(u(-1, 1), v(-1, 1)), (u(-1, 0), v(-1, 0))],
                &[(v(-1, 0), v(-1, 1))],
                (u(-1, 0), u(-1, 1)),
            ),
        ),
        rule(
            "two.a3",
            ctx_two(),
            vec![
                in_(u(0, -1), v(0, -1)),
                in_(u(0, -1), u(1, -1)),
                in_(v(-1, 0), v(-1, 1)),
                not_order(&[v(-1, 0), u(-1, 0), u(-1, -1), v(-1, -1)]),
            ],
            cut(
                &[(u(-1, -1), v(-1, -1)), (u(-1, 0), v(-1, 0))],
                &[(v(-1, 0), v(-1, -1))],
                (u(-1, 0), u(-1, -1)),
            ),
        ),
        rule(
            "two.a4",
            ctx_two(),
            vec![
                in_(u(0, -1), v(0, -1)),
                in_(u(0, -1), u(1, -1)),
                in_(v(-1, 0), v(-1, 1)),
                order(&[v(-1, 0), u(-1, 0), u(-1, -1), v(-1, -1)]),
                not_in_arc(D, u(-1, -1), v(-1, -1)),
            ],
            cut(
                &[
                    (u(0, 1), u(-1, 1)),
                    (v(1, 0), v(1, -1)),
                    (u(-1, -1), v(-1, -1)),
                    (v(0, 0), v(0, 1)),
                    (u(0, -1), u(1, -1)),
                    (u(-1, 0), v(-1, 0)),
                    (u(0, 0), u(1, 0)),
                ],
                &[
                    (u(0, 0), v(0, 0)),
                    (u(1, 0), v(1, 0)),
                    (u(0, 1), v(0, 1)),
                    (u(1, -1), v(1, -1)),
                    (u(0, -1), u(-1, -1)),
                    (v(-1, 0), v(-1, -1)),
                ],
                (u(-1, 0), u(-1, 1)),
            ),
        ),
        rule(
            "two.a5",
            ctx_two(),
            vec![
                in_(u(0, -1), v(0, -1)),
                in_(u(0, -1), u(1, -1)),
                in_(v(-1, 0), v(-1, 1)),
                order(&[v(-1, 0), u(-1, 0), u(-1, -1), v(-1, -1)]),
                in_arc(D, u(-1, -1), v(-1, -1)),
            ],
            cut_cycle(
                &[
                    (u(0, 1), u(-1, 1)),
                    (v(1, 0), v(1, -1)),
                    (u(-1, -1), v(-1, -1)),
                    (v(0, 0), v(0, 1)),
                    (u(0, -1), u(1, -1)),
                    (u(0, 0), u(1, 0)),
                    (v(-1, 0), v(-1, 1)),
                ],
                &[
                    (u(0, 0), v(0, 0)),
                    (u(1, 0), v(1, 0)),
                    (u(0, 1), v(0, 1)),
                    (u(1, -1), v(1, -1)),
                    (u(0, -1), u(-1, -1)),
                    (v(-1, 0), v(-1, -1)),
                    (u(-1, 1), v(-1, 1)),
                ],
                1,
                1,
            ),
        ),
        rule(
            "two.b1",
            ctx_two(),
            vec![out(u(0, -1), v(0, -1)), in_(v(-1, 0), v(-1, 1))],
            cut(
                &[(u(-1, 0), v(-1, 0)), (u(-1, -1), v(-1, -1))],
                &[(v(-1, 0), v(-1, -1))],
                (u(-1, 0), u(-1, -1)),
            ),
        ),
        rule(
            "two.b2",
            ctx_two(),
            vec![out(u(0, -1), v(0, -1)), in_(v(-1, 0), v(-1, -1))],
            Action::Relabel(1, 1),
        ),
        rule(
            "two.b.try",
            ctx_two(),
            vec![out(u(0, -1), v(0, -1)), chain(&[u(-1, -1), u(0, -1), u(1, -1)])],
            Action::TryRelabel(0, 1),
        ),
        // -- family three: the spoke at u_0 is a cycle edge --
        rule(
            "three.congruence",
            ctx_three(),
            vec![Atom::AnyOf(vec![vec![Atom::CongBeta(true)], vec![Atom::CongAlpha(true)]])],
            Action::Congruence,
        ),
        rule(
            "three.one",
            ctx_three(),
            {
                let mut a = no_cong();
                a.extend(vec![
                    in_(u(2, 1), v(2, 1)),
                    order(&[u(1, 1), v(1, 1), u(2, 1), v(2, 1)]),
                ]);
                a
            },
            cut(
                &[(u(1, 1), v(1, 1)), (u(2, 1), v(2, 1))],
                &[(u(1, 1), u(2, 1))],
                (v(1, 1), v(2, 1)),
            ),
        ),
        rule(
            "three.two.a1",
            ctx_three(),
            {
                let mut a = no_cong();
                a.extend(vec![
                    in_(u(2, 1), v(2, 1)),
                    order(&[u(1, 1), v(1, 1), v(2, 1), u(2, 1)]),
                    in_(v(2, 0), v(2, 1)),
                    in_(u(2, -1), v(2, -1)),
                    order(&[u(2, 0), v(2, 0), u(2, -1), v(2, -1)]),
                ]);
                a
            },
            cut(
                &[(u(2, 0), v(2, 0)), (u(2, -1), v(2, -1))],
                &[(v(2, 0), v(2, -1))],
                (u(2, 0), u(2, -1)),
            ),
        ),
        rule(
            "three.two.a2",
            ctx_three(),
            {
                let mut a = no_cong();
                a.extend(vec![
                    in_(u(2, 1), v(2, 1)),
                    order(&[u(1, 1), v(1, 1), v(2, 1), u(2, 1)]),
                    in_(v(2, 0), v(2, 1)),
                    in_(u(2, -1), v(2, -1)),
                    order(&[u(2, 0), v(2, 0), v(2, -1), u(2, -1)]),
                ]);
                a
            },
            cut(
                &[(u(1, -1), v(1, -1)), (u(2, -1), v(2, -1))],
                &[(u(1, -1), u(2, -1))],
                (v(1, -1), v(2, -1)),
            ),
        ),
        rule(
            "three.two.b1",
            ctx_three(),
            {
                let mut a = no_cong();
                a.extend(vec![
                    in_(u(2, 1), v(2, 1)),
                    order(&[u(1, 1), v(1, 1), v(2, 1), u(2, 1)]),
                    in_(v(2, 0), v(2, -1)),
                    in_(u(1, -1), u(0, -1)),
                    in_(u(0, -1), v(0, -1)),
                ]);
                a
            },
            cut(
                &[(u(1, -1), v(1, -1)), (u(2, -1), v(2, -1))],
                &[(u(1, -1), u(2, -1))],
                (v(1, -1), v(2, -1)),
            ),
        ),
        rule(
            "three.two.b2",
            ctx_three(),
            {
                let mut a = no_cong();
                a.extend(vec![
                    in_(u(2, 1), v(2, 1)),
                    order(&[u(1, 1), v(1, 1), v(2, 1), u(2, 1)]),
                    in_(v(2, 0), v(2, -1)),
                    in_(u(1, -1), u(2, -1)),
                    order(&[v(0, 0), u(0, 0), v(0, -1), u(0, -1)]),
                ]);
                a
            },
            cut(
                &[(u(0, 0), v(0, 0)), (u(0, -1), v(0, -1))],
                &[(v(0, 0), v(0, -1))],
                (u(0, 0), u(0, -1)),
            ),
        ),
        // -- family four: both loose spokes are cycle edges in arcs A or C --
        rule(
            "four.a1",
            ctx_four(),
            vec![
                in_arc(A, u(0, -1), v(0, -1)),
                in_arc(A, u(2, 1), v(2, 1)),
                precedes(A, (u(2, 1), v(2, 1)), (u(0, -1), v(0, -1))),
            ],
            cut(
                &[
                    (v(0, 0), v(0, 1)),
                    (v(2, 0), v(2, -1)),
                    (u(2, 1), v(2, 1)),
                    (u(0, -1), v(0, -1)),
                    (u(0, 1), u(1, 1)),
                    (v(1, -1), u(1, -1)),
                ],
                &[
                    (v(2, 0), v(2, 1)),
                    (u(1, 1), u(2, 1)),
                    (u(0, -1), u(1, -1)),
                    (v(0, 0), v(0, -1)),
                    (u(0, 1), v(0, 1)),
                ],
                (v(1, -1), v(2, -1)),
            ),
        ),
        rule(
            "four.a2",
            ctx_four(),
            vec![
                in_arc(A, u(0, -1), v(0, -1)),
                in_arc(A, u(2, 1), v(2, 1)),
                precedes(A, (u(0, -1), v(0, -1)), (u(2, 1), v(2, 1))),
            ],
            cut(
                &[
                    (u(0, 0), v(0, 0)),
                    (v(2, 0), v(2, -1)),
                    (u(0, -1), v(0, -1)),
                    (u(2, 1), v(2, 1)),
                    (u(0, 1), u(1, 1)),
                    (u(1, -1), u(2, -1)),
                ],
                &[
                    (v(0, 0), v(0, -1)),
                    (v(2, 0), v(2, 1)),
                    (u(2, -1), v(2, -1)),
                    (u(0, -1), u(1, -1)),
                    (u(1, 1), u(2, 1)),
                ],
                (u(0, 0), u(0, 1)),
            ),
        ),
        rule(
            "four.a3",
            ctx_four(),
            vec![in_arc(A, u(0, -1), v(0, -1)), in_arc(C, u(2, 1), v(2, 1))],
            cut(
                &[
                    (v(0, 0), v(0, 1)),
                    (v(2, 0), v(2, -1)),
                    (u(0, -1), v(0, -1)),
                    (u(0, 1), u(1, 1)),
                    (u(1, -1), v(1, -1)),
                    (u(2, 1), v(2, 1)),
                ],
                &[
                    (u(0, 1), v(0, 1)),
                    (v(0, 0), v(0, -1)),
                    (v(2, 0), v(2, 1)),
                    (u(0, -1), u(1, -1)),
                    (u(1, 1), u(2, 1)),
                ],
                (v(1, -1), v(2, -1)),
            ),
        ),
        rule(
            "four.b1",
            ctx_four(),
            vec![
                in_arc(C, u(0, -1), v(0, -1)),
                in_arc(C, u(2, 1), v(2, 1)),
                precedes(C, (u(2, 1), v(2, 1)), (u(0, -1), v(0, -1))),
            ],
            cut(
                &[
                    (v(0, 0), v(0, 1)),
                    (v(2, 0), v(2, -1)),
                    (u(0, -1), v(0, -1)),
                    (u(0, 1), u(1, 1)),
                    (u(1, -1), v(1, -1)),
                    (u(2, 1), v(2, 1)),
                ],
                &[
                    (u(0, 1), v(0, 1)),
                    (v(0, 0), v(0, -1)),
                    (v(2, 0), v(2, 1)),
                    (u(0, -1), u(1, -1)),
                    (u(1, 1), u(2, 1)),
                ],
                (v(1, -1), v(2, -1)),
            ),
        ),
        rule(
            "four.b2",
            ctx_four(),
            vec![
                in_arc(C, u(0, -1), v(0, -1)),
                in_arc(C, u(2, 1), v(2, 1)),
                precedes(C, (u(0, -1), v(0, -1)), (u(2, 1), v(2, 1))),
            ],
            cut(
                &[
                    (u(0, 0), v(0, 0)),
                    (v(2, 0), v(2, -1)),
                    (u(0, 1), u(1, 1)),
                    (u(1, -1), u(2, -1)),
                    (u(0, -1), v(0, -1)),
                    (u(2, 1), v(2, 1)),
                ],
                &[
                    (v(0, 0), v(0, -1)),
                    (u(1, 1), u(2, 1)),
                    (v(2, 0), v(2, 1)),
                    (u(2, -1), v(2, -1)),
                    (u(0, -1), u(1, -1)),
                ],
                (u(0, 0), u(0, 1)),
            ),
        ),
        // -- family four, crossed case: one spoke in C, the other in A --
        rule(
            "cross.pre1",
            ctx_cross(),
            vec![in_(u(1, 2), v(1, 2)), order(&[u(1, 1), v(1, 1), u(1, 2), v(1, 2)])],
            cut(
                &[(u(1, 1), v(1, 1)), (u(1, 2), v(1, 2))],
                &[(v(1, 1), v(1, 2))],
                (u(1, 1), u(1, 2)),
            ),
        ),
        rule(
            "cross.pre2",
            ctx_cross(),
            vec![in_(u(-1, 0), v(-1, 0)), order(&[u(0, 0), v(0, 0), u(-1, 0), v(-1, 0)])],
            cut(
                &[(u(0, 0), v(0, 0)), (u(-1, 0), v(-1, 0))],
                &[(u(0, 0), u(-1, 0))],
                (v(0, 0), v(-1, 0)),
            ),
        ),
        rule(
            "cross.c1",
            ctx_cross(),
            vec![
                in_arc(A, u(-1, 0), v(-1, 0)),
                precedes(A, (u(-1, 0), v(-1, 0)), (u(2, 1), v(2, 1))),
            ],
            cut(
                &[
                    (u(0, 0), v(0, 0)),
                    (u(-1, 0), v(-1, 0)),
                    (u(0, -1), v(0, -1)),
                    (u(2, 1), v(2, 1)),
                    (v(0, 0), v(0, 1)),
                    (v(2, 0), v(2, -1)),
                    (u(0, 1), u(1, 1)),
                    (u(1, -1), u(2, -1)),
                ],
                &[
                    (v(0, 0), v(0, -1)),
                    (u(0, 0), u(-1, 0)),
                    (v(2, 0), v(2, 1)),
                    (u(2, -1), v(2, -1)),
                    (u(1, 1), u(2, 1)),
                    (u(0, 1), v(0, 1)),
                    (u(0, -1), u(1, -1)),
                ],
                (v(0, 0), v(-1, 0)),
            ),
        ),
        rule(
            "cross.c2",
            ctx_cross(),
            vec![
                in_arc(C, u(-1, 0), v(-1, 0)),
                precedes(C, (u(0, -1), v(0, -1)), (u(-1, 0), v(-1, 0))),
            ],
            cut(
                &[
                    (u(0, 0), v(0, 0)),
                    (u(-1, 0), v(-1, 0)),
                    (u(0, -1), v(0, -1)),
                    (u(2, 1), v(2, 1)),
                    (v(0, 0), v(0, 1)),
                    (v(2, 0), v(2, -1)),
                    (u(0, 1), u(1, 1)),
                    (u(1, -1), u(2, -1)),
                ],
                &[
                    (v(0, 0), v(0, -1)),
                    (u(0, 0), u(-1, 0)),
                    (v(2, 0), v(2, 1)),
                    (u(2, -1), v(2, -1)),
                    (u(1, 1), u(2, 1)),
                    (u(0, 1), v(0, 1)),
                    (u(0, -1), u(1, -1)),
                ],
                (v(0, 0), v(-1, 0)),
            ),
        ),
        rule(
            "cross.c3",
            ctx_cross(),
            vec![
                arcseq(C, &[v(-1, 1), v(-1, 0), u(-1, 0)]),
                precedes(C, (u(-1, 0), v(-1, 0)), (u(0, -1), v(0, -1))),
            ],
            cut(
                &[(v(0, 0), v(0, 1)), (u(0, 1), u(-1, 1)), (v(-1, 0), v(-1, 1))],
                &[(u(0, 1), v(0, 1)), (u(-1, 1), v(-1, 1))],
                (v(0, 0), v(-1, 0)),
            ),
        ),
        rule(
            "cross.c4",
            ctx_cross(),
            vec![arcseq(A, &[v(1, 2), u(1, 2), u(0, 2)])],
            cut(
                &[(v(0, 1), v(0, 2)), (u(0, 2), u(1, 2)), (u(0, 1), u(1, 1))],
                &[(u(0, 1), v(0, 1)), (u(0, 2), v(0, 2))],
                (u(1, 1), u(1, 2)),
            ),
        ),
        rule(
            "cross.c5",
            ctx_cross(),
            vec![
                arcseq(A, &[v(1, 2), u(1, 2), u(2, 2)]),
                precedes(A, (u(2, 1), v(2, 1)), (u(1, 2), v(1, 2))),
            ],
            cut(
                &[
                    (v(0, 0), v(0, 1)),
                    (v(2, 0), v(2, -1)),
                    (u(2, 1), v(2, 1)),
                    (u(1, 2), v(1, 2)),
                    (u(0, 1), u(1, 1)),
                    (u(1, 1), v(1, 1)),
                    (u(1, -1), u(2, -1)),
                    (u(0, -1), v(0, -1)),
                ],
                &[
                    (u(0, 1), v(0, 1)),
                    (v(0, 0), v(0, -1)),
                    (v(2, 0), v(2, 1)),
                    (u(2, -1), v(2, -1)),
                    (u(1, 1), u(2, 1)),
                    (v(1, 1), v(1, 2)),
                    (u(0, -1), u(1, -1)),
                ],
                (u(1, 1), u(1, 2)),
            ),
        ),
        rule(
            "cross.c6",
            ctx_cross(),
            vec![
                in_arc(C, u(1, 2), v(1, 2)),
                precedes(C, (u(1, 2), v(1, 2)), (u(0, -1), v(0, -1))),
            ],
            cut(
                &[
                    (u(2, 1), v(2, 1)),
                    (u(1, 1), v(1, 1)),
                    (u(1, 2), v(1, 2)),
                    (u(0, -1), v(0, -1)),
                    (v(0, 0), v(0, 1)),
                    (v(2, 0), v(2, -1)),
                    (u(0, 1), u(1, 1)),
                    (u(1, -1), u(2, -1)),
                ],
                &[
                    (v(0, 0), v(0, -1)),
                    (v(2, 0), v(2, 1)),
                    (u(2, -1), v(2, -1)),
                    (u(1, 1), u(2, 1)),
                    (u(0, 1), v(0, 1)),
                    (v(1, 1), v(1, 2)),
                    (u(0, -1), u(1, -1)),
                ],
                (u(1, 1), u(1, 2)),
            ),
        ),
        rule(
            "cross.c7",
            ctx_cross(),
            vec![arcseq(C, &[u(2, 2), u(1, 2), v(1, 2)])],
            cut(
                &[
                    (v(0, 0), v(0, 1)),
                    (v(2, 0), v(2, -1)),
                    (v(2, 1), v(2, 2)),
                    (u(0, 1), u(1, 1)),
                    (u(1, -1), u(2, -1)),
                    (u(0, -1), v(0, -1)),
                    (u(1, 2), u(2, 2)),
                ],
                &[
                    (v(0, 0), v(0, -1)),
                    (v(2, 0), v(2, 1)),
                    (u(2, -1), v(2, -1)),
                    (u(2, 2), v(2, 2)),
                    (u(0, -1), u(1, -1)),
                    (u(0, 1), v(0, 1)),
                ],
                (u(1, 1), u(1, 2)),
            ),
        ),
        rule(
            "cross.c8",
            ctx_cross(),
            vec![arcseq(C, &[u(-1, 2), u(0, 2), u(1, 2), v(1, 2)])],
            cut(
                &[(v(0, 1), v(0, 2)), (u(0, 1), u(-1, 1)), (u(0, 2), u(-1, 2))],
                &[(u(0, 1), v(0, 1)), (u(0, 2), v(0, 2))],
                (u(-1, 1), u(-1, 2)),
            ),
        ),
        rule(
            "cross.x1a",
            ctx_cross(),
            {
                let mut a = cond_y1();
                a.extend(cond_x1());
                a.push(chain(&[u(-1, 0), v(-1, 0), v(-1, 1), u(-1, 1)]));
                a
            },
            cut(
                &[(u(-1, 2), v(-1, 2)), (u(-1, 1), v(-1, 1))],
                &[(v(-1, 1), v(-1, 2))],
                (u(-1, 2), u(-1, 1)),
            ),
        ),
        rule(
            "cross.x1b",
            ctx_cross(),
            {
                let mut a = vec![y1_or_y2()];
                a.extend(cond_x1());
                a.push(in_(v(-1, 0), v(-1, 1)));
                a.push(out(v(-1, 1), u(-1, 1)));
                a
            },
            cut(
                &[(v(0, 1), v(0, 2)), (v(-1, 1), v(-1, 2)), (u(0, 1), u(-1, 1))],
                &[(u(0, 1), v(0, 1)), (u(-1, 1), v(-1, 1))],
                (v(0, 2), v(-1, 2)),
            ),
        ),
        rule(
            "cross.x1c",
            ctx_cross(),
            {
                let mut a = vec![y1_or_y2()];
                a.extend(cond_x1());
                a.push(in_(v(-1, 0), v(-1, -1)));
                a
            },
            cut(
                &[
                    (v(0, 0), v(0, 1)),
                    (v(2, 0), v(2, -1)),
                    (u(2, 1), v(2, 1)),
                    (v(-1, 0), v(-1, -1)),
                    (u(0, 1), u(1, 1)),
                    (u(1, -1), u(2, -1)),
                    (u(0, -1), u(-1, -1)),
                ],
                &[
                    (u(0, 1), v(0, 1)),
                    (v(2, 0), v(2, 1)),
                    (u(2, -1), v(2, -1)),
                    (u(1, 1), u(2, 1)),
                    (u(-1, -1), v(-1, -1)),
                    (u(0, -1), u(1, -1)),
                ],
                (v(0, 0), v(-1, 0)),
            ),
        ),
        rule(
            "cross.x2",
            ctx_cross(),
            {
                let mut a = cond_y1();
                a.extend(cond_x2());
                a
            },
            cut(
                &[
                    (u(1, 2), v(1, 2)),
                    (u(-1, 1), v(-1, 1)),
                    (u(-1, 0), v(-1, 0)),
                    (u(0, 0), u(1, 0)),
                    (v(1, 0), v(1, 1)),
                    (u(0, 2), u(-1, 2)),
                ],
                &[
                    (u(0, 0), u(-1, 0)),
                    (u(1, 0), v(1, 0)),
                    (v(1, 1), v(1, 2)),
                    (u(0, 2), u(1, 2)),
                    (v(-1, 0), v(-1, 1)),
                ],
                (u(-1, 1), u(-1, 2)),
            ),
        ),
        rule(
            "cross.x3pre",
            ctx_cross(),
            {
                let mut a = cond_y2();
                a.extend(cond_x1());
                a.push(chain(&[u(-1, 0), v(-1, 0), v(-1, 1), u(-1, 1)]));
                a.push(not_order(&[v(0, 2), u(0, 2), u(-1, 2), v(-1, 2)]));
                a
            },
            cut(
                &[(u(0, 2), v(0, 2)), (u(-1, 2), v(-1, 2))],
                &[(u(0, 2), u(-1, 2))],
                (v(0, 2), v(-1, 2)),
            ),
        ),
        rule(
            "cross.x3main",
            ctx_cross(),
            {
                let mut a = cond_y2();
                a.extend(cond_x1());
                a.push(chain(&[u(-1, 0), v(-1, 0), v(-1, 1), u(-1, 1)]));
                a.push(order(&[v(0, 2), u(0, 2), u(-1, 2), v(-1, 2)]));
                a
            },
            cut(
                &[(u(-1, 1), v(-1, 1)), (u(-1, 2), v(-1, 2))],
                &[(v(-1, 1), v(-1, 2))],
                (u(-1, 2), u(-1, 1)),
            ),
        ),
        rule(
            "cross.x4",
            ctx_cross(),
            {
                let mut a = cond_y2();
                a.extend(cond_x2());
                a
            },
            cut(
                &[(u(0, 2), v(0, 2)), (u(-1, 2), v(-1, 2))],
                &[(u(0, 2), u(-1, 2))],
                (v(0, 2), v(-1, 2)),
            ),
        ),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rule_table_ids_are_unique() {
        let rules = rule_table();
        let ids: BTreeSet<&str> = rules.iter().map(|r| r.id).collect();
        assert_eq!(ids.len(), rules.len());
        assert!(rules.len() >= 40);
    }

    #[test]
    fn symbolic_vertices_resolve_mod_m() {
        let w = resolve_vertex(10, 3, 4, u(1, 1));
        assert_eq!(w, Vertex::u(7));
        let w = resolve_vertex(10, 3, 4, v(-1, -1));
        assert_eq!(w, Vertex::v(3));
        let w = resolve_vertex(10, 3, 4, u(2, 2));
        assert_eq!(w, Vertex::u(4));
    }
}
