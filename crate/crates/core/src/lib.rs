//! Bicirculant graphs: families, explicit Hamilton cycle construction, and
//! Hamiltonicity certification.
//!
//! A bicirculant `B(m; R, S, T)` has outer vertices `u_0..u_{m-1}` and inner
//! vertices `v_0..v_{m-1}`, with rim edges `u_i u_{i+r}` (`r ∈ R`),
//! `v_i v_{i+t}` (`t ∈ T`) and spokes `u_i v_{i+s}` (`s ∈ S`), all indices
//! mod `m`.  Specs are normalized so `0 ∈ S`; half-step rims collapse to
//! single edges.
//!
//! The crate is organized around four capabilities:
//!
//! * **Construction and families** ([`spec`], [`graph`], [`family`],
//!   [`iso`]): parse or build a spec, realize it as an adjacency structure,
//!   recognize the named families (Haar, I-graph, generalized Petersen, rose
//!   window), and apply the cheap spec-level isomorphisms.
//! * **Search oracle** ([`search`]): budgeted depth-first Hamilton cycle and
//!   path search with sound absence proofs at desk scale, plus the direct
//!   alternating-cycle builder.
//! * **Cycle classification and synthesis** ([`igraph`], [`grw`]): classify
//!   Hamilton cycles of I-graphs, reduce them to usable forms, and wire
//!   those forms into explicit Hamilton cycles of every connected rose
//!   window graph `R(m; a, b, c)` — the heart of the crate.
//! * **Certification** ([`conjecture`]): decide Hamiltonicity of arbitrary
//!   connected bicirculants by spanning-subgraph reductions backed by the
//!   oracle, and sweep all desk-scale specs.
//!
//! Every cycle any route produces is re-verified edge-by-edge against the
//! full graph before it is reported.

pub mod arith;
pub mod assembly;
pub mod conjecture;
pub mod family;
pub mod graph;
pub mod grw;
pub mod igraph;
pub mod iso;
pub mod search;
pub mod spec;

pub use conjecture::{
    certify_hamiltonian, find_cubic_haar_subgraph, find_grw_subgraph, scan, scan_with_jobs,
    CubicHaarSubgraph, GrwSubgraph, HamiltonicityReport, ScanError, ScanRange, Status,
    SCAN_GUARD,
};
pub use family::{classify_family, Family, FamilyInfo};
pub use graph::{Graph, Side, Vertex};
pub use grw::{hamilton_cycle_grw, Certificate, GrwError, Route};
pub use igraph::{
    classify_cycle, resolve_elusive, usable_cycle, CycleClass, ElusiveFlag, Resolution,
    ResolutionReport, TwoHookedKind, UsableError, UsableForm, UsableReport,
};
pub use iso::{
    decompose, multiplier_spec, shift_spec, side_swap_spec, ComponentDecomposition, IsoError,
    VertexMap,
};
pub use search::{
    enumerate_hamilton_cycles, find_alternating_cycle, find_hamilton_cycle, find_hamilton_path,
    verify_cycle, verify_path, CycleError, Enumeration, HamiltonCycle, HamiltonPath,
    SearchOutcome, DEFAULT_BUDGET, ENUMERATION_GUARD,
};
pub use spec::{
    parse_spec, BicirculantSpec, GrwSpec, HaarSpec, IGraphSpec, ParsedSpec, SpecError,
};
