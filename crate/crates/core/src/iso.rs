//! Spec-level isomorphisms (spoke shift, rim multiplier, side swap) with
//! checkable vertex maps, and decomposition of disconnected bicirculants
//! into isomorphic components.

use crate::arith::{gcd, modm};
use crate::graph::{Graph, Side, Vertex};
use crate::spec::{shift_set, BicirculantSpec};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IsoError {
    #[error("offset {0} is not a spoke offset of the spec")]
    NotInS(u64),
    #[error("{0} is not a unit mod {1}")]
    NotAUnit(u64, u64),
    #[error("vertex map is not an isomorphism: {0}")]
    NotAnIsomorphism(String),
}

/// A vertex bijection between two graphs of equal order, stored over dense
/// ids of the source graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexMap {
    pub map: Vec<usize>,
}

impl VertexMap {
    pub fn apply(&self, id: usize) -> usize {
        self.map[id]
    }
}

/// Check that `map` is a graph isomorphism from `g1` onto `g2`.
pub fn is_isomorphism(g1: &Graph, g2: &Graph, map: &VertexMap) -> Result<(), IsoError> {
    let n = g1.n();
    if g2.n() != n || map.map.len() != n {
        return Err(IsoError::NotAnIsomorphism("size mismatch".into()));
    }
    let mut seen = vec![false; n];
    for &y in &map.map {
        if y >= n || seen[y] {
            return Err(IsoError::NotAnIsomorphism("not a bijection".into()));
        }
        seen[y] = true;
    }
    if g1.edge_count() != g2.edge_count() {
        return Err(IsoError::NotAnIsomorphism("edge count mismatch".into()));
    }
    for (a, b) in g1.edges() {
        if !g2.has_edge(map.apply(a), map.apply(b)) {
            return Err(IsoError::NotAnIsomorphism(format!(
                "edge {}-{} is not preserved",
                g1.vertex(a),
                g1.vertex(b)
            )));
        }
    }
    Ok(())
}

/// Spoke-shift isomorphism: `B(m; R, S, T) ≅ B(m; R, S - c, T)` for `c ∈ S`,
/// via `u_i ↦ u_i`, `v_i ↦ v_{i-c}`.
pub fn shift_spec(spec: &BicirculantSpec, c: u64) -> Result<(BicirculantSpec, VertexMap), IsoError> {
    let m = spec.m;
    if !spec.s.contains(&(c % m)) {
        return Err(IsoError::NotInS(c));
    }
    let shifted = BicirculantSpec {
        m,
        r: spec.r.clone(),
        s: shift_set(&spec.s, c % m, m),
        t: spec.t.clone(),
    };
    let g = Graph::from_spec(spec);
    let map = VertexMap {
        map: (0..g.n())
            .map(|id| {
                let v = g.vertex(id);
                match v.side {
                    Side::Outer => id,
                    Side::Inner => g.id(Vertex::v(modm(v.index as i64 - c as i64, m))),
                }
            })
            .collect(),
    };
    is_isomorphism(&g, &Graph::from_spec(&shifted), &map)?;
    Ok((shifted, map))
}

/// Multiplier isomorphism: `B(m; R, S, T) ≅ B(m; rR, rS, rT)` for any unit
/// `r`, via `u_i ↦ u_{ri}`, `v_i ↦ v_{ri}`.
pub fn multiplier_spec(
    spec: &BicirculantSpec,
    r: u64,
) -> Result<(BicirculantSpec, VertexMap), IsoError> {
    let m = spec.m;
    let r = r % m;
    if gcd(r, m) != 1 {
        return Err(IsoError::NotAUnit(r, m));
    }
    let mul = |set: &std::collections::BTreeSet<u64>| set.iter().map(|&x| x * r % m).collect();
    let image = BicirculantSpec { m, r: mul(&spec.r), s: mul(&spec.s), t: mul(&spec.t) };
    let g = Graph::from_spec(spec);
    let map = VertexMap {
        map: (0..g.n())
            .map(|id| {
                let v = g.vertex(id);
                g.id(Vertex { side: v.side, index: v.index * r % m })
            })
            .collect(),
    };
    is_isomorphism(&g, &Graph::from_spec(&image), &map)?;
    Ok((image, map))
}

/// Side-swap isomorphism: `B(m; R, S, T) ≅ B(m; T, S, R)`, via
/// `u_i ↦ v_{-i}`, `v_i ↦ u_{-i}` (spoke offsets are preserved).
pub fn side_swap_spec(spec: &BicirculantSpec) -> Result<(BicirculantSpec, VertexMap), IsoError> {
    let m = spec.m;
    let swapped = BicirculantSpec { m, r: spec.t.clone(), s: spec.s.clone(), t: spec.r.clone() };
    let g = Graph::from_spec(spec);
    let map = VertexMap {
        map: (0..g.n())
            .map(|id| {
                let v = g.vertex(id);
                let neg = (m - v.index) % m;
                match v.side {
                    Side::Outer => g.id(Vertex::v(neg)),
                    Side::Inner => g.id(Vertex::u(neg)),
                }
            })
            .collect(),
    };
    is_isomorphism(&g, &Graph::from_spec(&swapped), &map)?;
    Ok((swapped, map))
}

/// Decomposition of a bicirculant into its connected components. When
/// `delta = gcd(m, R, S, T) > 1` the graph splits into `delta` components,
/// each isomorphic to the quotient `B(m/delta; R/delta, S/delta, T/delta)`.
#[derive(Debug, Clone)]
pub struct ComponentDecomposition {
    pub delta: u64,
    pub quotient: BicirculantSpec,
    /// Component `i` contains `u_i` and all vertices with index ≡ i (mod delta).
    pub components: Vec<Vec<usize>>,
    /// `labelings[i]` maps quotient dense ids onto global dense ids for
    /// component `i` (quotient `(side, x)` ↦ global `(side, i + x·delta)`),
    /// each verified as an isomorphism onto the induced component.
    pub labelings: Vec<VertexMap>,
}

/// Decompose `spec` into isomorphic components with verified labelings.
pub fn decompose(spec: &BicirculantSpec) -> Result<ComponentDecomposition, IsoError> {
    let delta = spec.connectivity_gcd();
    let m = spec.m;
    let m0 = m / delta;
    let div = |set: &std::collections::BTreeSet<u64>| set.iter().map(|&x| x / delta).collect();
    let quotient =
        BicirculantSpec { m: m0, r: div(&spec.r), s: div(&spec.s), t: div(&spec.t) };
    let g = Graph::from_spec(spec);
    let gq = Graph::from_spec(&quotient);
    let mut components = Vec::new();
    let mut labelings = Vec::new();
    for i in 0..delta {
        let map = VertexMap {
            map: (0..gq.n())
                .map(|qid| {
                    let v = gq.vertex(qid);
                    g.id(Vertex { side: v.side, index: i + v.index * delta })
                })
                .collect(),
        };
        // Verify edges map onto edges of the big graph (injective by
        // construction; image is exactly the component's vertex set).
        for (a, b) in gq.edges() {
            if !g.has_edge(map.apply(a), map.apply(b)) {
                return Err(IsoError::NotAnIsomorphism(format!(
                    "component {i}: quotient edge {}-{} has no image",
                    gq.vertex(a),
                    gq.vertex(b)
                )));
            }
        }
        let mut comp: Vec<usize> = map.map.clone();
        comp.sort_unstable();
        components.push(comp);
        labelings.push(map);
    }
    // The component vertex sets must partition the graph and be closed:
    // every edge of g must stay inside one component.
    let mut owner = vec![usize::MAX; g.n()];
    for (i, comp) in components.iter().enumerate() {
        for &v in comp {
            if owner[v] != usize::MAX {
                return Err(IsoError::NotAnIsomorphism("components overlap".into()));
            }
            owner[v] = i;
        }
    }
    if owner.iter().any(|&o| o == usize::MAX) {
        return Err(IsoError::NotAnIsomorphism("components do not cover".into()));
    }
    for (a, b) in g.edges() {
        if owner[a] != owner[b] {
            return Err(IsoError::NotAnIsomorphism(format!(
                "edge {}-{} crosses components",
                g.vertex(a),
                g.vertex(b)
            )));
        }
    }
    Ok(ComponentDecomposition { delta, quotient, components, labelings })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spec::parse_spec;

    fn spec(text: &str) -> BicirculantSpec {
        parse_spec(text).unwrap().to_bicirculant()
    }

    #[test]
    fn shift_example() {
        let s = spec("B 8 R=1 S=0,2,3 T=1");
        let (shifted, _) = shift_spec(&s, 2).unwrap();
        assert_eq!(shifted.s, [0, 1, 6].into_iter().collect());
        assert!(shift_spec(&s, 4).is_err());
    }

    #[test]
    fn multiplier_example() {
        // I(7; 2, 3) with r = 4 lands on rims {±1} and {±2}: G(7, 2).
        let s = spec("I 7 2 3");
        let (image, _) = multiplier_spec(&s, 4).unwrap();
        assert_eq!(image, spec("I 7 1 2"));
        assert!(multiplier_spec(&spec("I 12 2 3"), 4).is_err());
    }

    #[test]
    fn side_swap_example() {
        let s = spec("B 9 R=1 S=0,2 T=3");
        let (swapped, _) = side_swap_spec(&s).unwrap();
        assert_eq!(swapped, spec("B 9 R=3 S=0,2 T=1"));
    }

    #[test]
    fn decompose_splits_into_quotients() {
        let s = spec("B 6 R=2 S=0,2 T=2");
        let d = decompose(&s).unwrap();
        assert_eq!(d.delta, 2);
        assert_eq!(d.quotient, spec("B 3 R=1 S=0,1 T=1"));
        assert_eq!(d.components.len(), 2);
        // u_0 (dense id 0) sits in component 0; u_1 in component 1.
        assert!(d.components[0].contains(&0));
        assert!(d.components[1].contains(&1));
    }

    #[test]
    fn decompose_connected_is_identity_like() {
        let s = spec("I 7 1 2");
        let d = decompose(&s).unwrap();
        assert_eq!(d.delta, 1);
        assert_eq!(d.quotient, s);
        assert_eq!(d.components.len(), 1);
    }

    #[test]
    fn bad_map_is_rejected() {
        let g1 = Graph::from_spec(&spec("I 5 1 2"));
        let g2 = Graph::from_spec(&spec("I 5 1 1"));
        let id_map = VertexMap { map: (0..g1.n()).collect() };
        assert!(is_isomorphism(&g1, &g2, &id_map).is_err());
    }
}
