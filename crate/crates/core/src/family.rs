//! Recognize which named family a bicirculant spec belongs to.

use crate::arith::{min_residue, mod_inverse};
use crate::spec::BicirculantSpec;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

/// Family membership of a spec, together with the Petersen-family exception
/// marker for graphs isomorphic to the non-hamiltonian `G(n, 2)` members.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyInfo {
    pub family: Family,
    /// `Some(n)` when the graph is isomorphic to `G(n, 2)` with `n ≡ 5 (mod 6)`
    /// — the only connected members of these families without Hamilton cycles
    /// (besides `K_2`).
    pub petersen_exception: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Family {
    /// Spokes only. `K_2` (`m = 1`, `S = {0}`) is reported via `display`.
    Haar { m: u64, s: BTreeSet<u64> },
    /// `I(m; a, b)` that is not a generalized Petersen graph.
    IGraph { m: u64, a: u64, b: u64 },
    /// An I-graph isomorphic to `G(m, k)` (via a rim multiplier).
    GeneralizedPetersen { m: u64, k: u64 },
    /// `R(m; a, b, c)`.
    GrwGraph { m: u64, a: u64, b: u64, c: u64 },
    /// Anything else.
    GeneralBicirculant,
}

impl FamilyInfo {
    /// Short display name, e.g. `G(5,2)`, `I(12;2,3)`, `GRW(9;1,3,2)`,
    /// `H(6;0,1,3)`, `K2`, or the raw `B ...` form.
    pub fn display(&self, spec: &BicirculantSpec) -> String {
        match &self.family {
            Family::Haar { m, s } => {
                if *m == 1 && s.len() == 1 {
                    "K2".to_string()
                } else {
                    let body = s.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
                    format!("H({m};{body})")
                }
            }
            Family::IGraph { m, a, b } => format!("I({m};{a},{b})"),
            Family::GeneralizedPetersen { m, k } => format!("G({m},{k})"),
            Family::GrwGraph { m, a, b, c } => format!("GRW({m};{a},{b},{c})"),
            Family::GeneralBicirculant => spec.to_string(),
        }
    }
}

/// True when the set is `{±x}` for some `x` with `x ≠ 0` and `2x ≠ m`,
/// returning the smaller representative.
fn plus_minus_pair(set: &BTreeSet<u64>, m: u64) -> Option<u64> {
    if set.len() != 2 {
        return None;
    }
    let mut it = set.iter();
    let (&x, &y) = (it.next()?, it.next()?);
    if (x + y) % m == 0 && x != 0 {
        Some(min_residue(x, m))
    } else {
        None
    }
}

/// Classify a spec into its family and detect the Petersen exception.
pub fn classify_family(spec: &BicirculantSpec) -> FamilyInfo {
    let m = spec.m;
    if spec.r.is_empty() && spec.t.is_empty() {
        return FamilyInfo {
            family: Family::Haar { m, s: spec.s.clone() },
            petersen_exception: None,
        };
    }
    let ra = plus_minus_pair(&spec.r, m);
    let tb = plus_minus_pair(&spec.t, m);
    if let (Some(a), Some(b)) = (ra, tb) {
        if m >= 3 && spec.s == BTreeSet::from([0]) {
            return classify_igraph(m, a, b);
        }
        if m >= 3 && spec.s.len() == 2 && spec.s.contains(&0) {
            let c = *spec.s.iter().find(|&&x| x != 0).expect("two-element S");
            return FamilyInfo {
                family: Family::GrwGraph { m, a, b, c: min_residue(c, m) },
                petersen_exception: None,
            };
        }
    }
    FamilyInfo { family: Family::GeneralBicirculant, petersen_exception: None }
}

/// The I-graph `I(m; a, b)` is a generalized Petersen graph iff one rim
/// parameter is a unit mod `m`; multiplying by its inverse renames it to
/// `G(m, k)`. Among connected members, exactly the graphs isomorphic to
/// `G(n, 2)` with `n ≡ 5 (mod 6)` have no Hamilton cycle; in parameter terms
/// that is `b ≡ ±2a` or `a ≡ ±2b (mod m)`.
fn classify_igraph(m: u64, a: u64, b: u64) -> FamilyInfo {
    let norm = |x: u64| min_residue(x % m, m);
    let family = if let Some(inv) = mod_inverse(a, m) {
        Family::GeneralizedPetersen { m, k: canonical_gpg_k(m, inv * b % m) }
    } else if let Some(inv) = mod_inverse(b, m) {
        Family::GeneralizedPetersen { m, k: canonical_gpg_k(m, inv * a % m) }
    } else {
        Family::IGraph { m, a: norm(a), b: norm(b) }
    };
    let is_gpg = matches!(family, Family::GeneralizedPetersen { .. });
    // Exception detection uses the raw parameters, not the canonical k: the
    // doubled-parameter relation is invariant under the renamings above.
    let doubled = |x: u64, y: u64| (2 * x) % m == y % m || (2 * x + y) % m == 0;
    let petersen_exception =
        if is_gpg && m % 6 == 5 && (doubled(a, b) || doubled(b, a)) { Some(m) } else { None };
    FamilyInfo { family, petersen_exception }
}

/// Canonical parameter for `G(m, k)`: the graphs `G(m, k)`, `G(m, m-k)` (the
/// same edge set) and `G(m, k^{-1})` (swap the rims, then renumber by the
/// unit `k^{-1}`) coincide, so report the smallest equivalent residue.
fn canonical_gpg_k(m: u64, k: u64) -> u64 {
    let mut best = min_residue(k % m, m);
    if let Some(inv) = mod_inverse(k, m) {
        best = best.min(min_residue(inv, m));
    }
    best
}
