//! Property-based checks of the library's structural invariants: residue-set
//! closure, generator-exact graph realization, validation rules, canonical
//! cycle forms, component decomposition, isomorphism transforms, family
//! detection, and parser round-trips.

use std::collections::BTreeSet;

use proptest::prelude::*;

use bicirc::arith::gcd;
use bicirc::iso::is_isomorphism;
use bicirc::spec::ParsedSpec;
use bicirc::{
    classify_family, decompose, enumerate_hamilton_cycles, find_hamilton_cycle, multiplier_spec,
    parse_spec, shift_spec, verify_cycle, BicirculantSpec, Family, Graph, GrwSpec, HamiltonCycle,
    IGraphSpec, SearchOutcome, Side, Vertex, DEFAULT_BUDGET,
};

/// Arbitrary valid bicirculant specs with small m and short residue lists.
fn arb_spec() -> impl Strategy<Value = BicirculantSpec> {
    (
        1u64..=14,
        proptest::collection::vec(1u64..100, 0..3),
        proptest::collection::vec(1u64..100, 0..3),
        proptest::collection::vec(1u64..100, 0..3),
    )
        .prop_filter_map("valid spec", |(m, r, s, t)| {
            let reduce_rim =
                |xs: Vec<u64>| xs.into_iter().map(|x| x % m).filter(|&x| x != 0).collect::<Vec<_>>();
            let mut spokes = vec![0u64];
            spokes.extend(s.into_iter().map(|x| x % m));
            BicirculantSpec::from_reps(m, reduce_rim(r), spokes, reduce_rim(t)).ok()
        })
}

/// Dense-id edge set built straight from the generator definition.
fn definition_edges(spec: &BicirculantSpec, g: &Graph) -> BTreeSet<(usize, usize)> {
    let m = spec.m;
    let mut edges = BTreeSet::new();
    let mut push = |x: Vertex, y: Vertex| {
        let (ix, iy) = (g.id(x), g.id(y));
        edges.insert((ix.min(iy), ix.max(iy)));
    };
    for i in 0..m {
        for &j in &spec.r {
            push(Vertex::u(i), Vertex::u((i + j) % m));
        }
        for &j in &spec.t {
            push(Vertex::v(i), Vertex::v((i + j) % m));
        }
        for &s in &spec.s {
            push(Vertex::u(i), Vertex::v((i + s) % m));
        }
    }
    edges
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// Residue sets are closed under negation, reduced, and anchored at 0 in S.
    #[test]
    fn spec_sets_are_closed_and_reduced(spec in arb_spec()) {
        let m = spec.m;
        for set in [&spec.r, &spec.t] {
            for &x in set {
                prop_assert!(x < m && x != 0);
                prop_assert!(set.contains(&((m - x) % m)), "{spec}: {x} lacks its negation");
            }
        }
        prop_assert!(spec.s.contains(&0));
        for &x in &spec.s {
            prop_assert!(x < m);
        }
    }

    /// The realized graph has exactly the generator-defined edge set, and
    /// every degree equals |R|+|S| outside and |T|+|S| inside.
    #[test]
    fn graphs_match_the_generator_definition(spec in arb_spec()) {
        let g = Graph::from_spec(&spec);
        prop_assert_eq!(g.n(), 2 * spec.m as usize);
        let expected = definition_edges(&spec, &g);
        let actual: BTreeSet<(usize, usize)> =
            g.edges().map(|(x, y)| (x.min(y), x.max(y))).collect();
        prop_assert_eq!(&actual, &expected, "{}: edge set mismatch", spec);
        prop_assert_eq!(g.edge_count(), expected.len());
        for i in 0..g.n() {
            let v = g.vertex(i);
            let want = match v.side {
                Side::Outer => spec.r.len() + spec.s.len(),
                Side::Inner => spec.t.len() + spec.s.len(),
            };
            prop_assert_eq!(g.degree(i), want, "{}: degree of {} is off", spec, v);
        }
    }

    /// Rose window and I-graph validation accepts exactly the legal residues.
    #[test]
    fn parameter_validation_matches_the_invariants(
        m in 0u64..=20,
        a in 0u64..40,
        b in 0u64..40,
        c in 0u64..40,
    ) {
        let rim_ok = |x: u64| m > 0 && x % m != 0 && 2 * (x % m) != m;
        let grw_legal = m >= 3 && rim_ok(a) && rim_ok(b) && c % m != 0;
        prop_assert_eq!(GrwSpec::new(m, a, b, c).is_ok(), grw_legal);
        let igraph_legal = m >= 3 && rim_ok(a) && rim_ok(b);
        prop_assert_eq!(IGraphSpec::new(m, a, b).is_ok(), igraph_legal);
    }

    /// Hamilton cycles canonicalize: every rotation and reflection of the
    /// same closed walk produces the identical stored sequence.
    #[test]
    fn hamilton_cycles_canonicalize_rotations_and_reflections(
        spec in arb_spec(),
        rot in 0usize..40,
        flip in proptest::bool::ANY,
    ) {
        let g = Graph::from_spec(&spec);
        if g.n() < 3 || !g.is_connected() {
            return Ok(());
        }
        let SearchOutcome::Found(cycle) = find_hamilton_cycle(&g, DEFAULT_BUDGET) else {
            return Ok(());
        };
        let mut seq = cycle.seq().to_vec();
        let rot = rot % seq.len();
        seq.rotate_left(rot);
        if flip {
            seq.reverse();
        }
        let again = HamiltonCycle::verified(&g, seq).expect("still a Hamilton cycle");
        prop_assert_eq!(&again, &cycle);
        let first = cycle.seq()[0];
        prop_assert!(cycle.seq().iter().all(|v| first <= *v), "not rotated to the least vertex");
        prop_assert!(cycle.seq()[1] < cycle.seq()[cycle.len() - 1], "not oriented canonically");
    }

    /// Corrupting a verified cycle (vertex duplication or truncation) is
    /// always rejected.
    #[test]
    fn verification_rejects_corrupted_cycles(
        spec in arb_spec(),
        i in 0usize..50,
        j in 0usize..50,
    ) {
        let g = Graph::from_spec(&spec);
        if g.n() < 3 || !g.is_connected() {
            return Ok(());
        }
        let SearchOutcome::Found(cycle) = find_hamilton_cycle(&g, DEFAULT_BUDGET) else {
            return Ok(());
        };
        let n = cycle.len();
        let (i, j) = (i % n, j % n);
        if i != j {
            let mut dup = cycle.seq().to_vec();
            dup[i] = dup[j];
            prop_assert!(verify_cycle(&g, &dup).is_err(), "duplicate vertex accepted");
        }
        let truncated = &cycle.seq()[..n - 1];
        prop_assert!(verify_cycle(&g, truncated).is_err(), "truncated cycle accepted");
    }

    /// Decomposition yields gcd(m,R,S,T) components that partition the vertex
    /// set, with u_i in component i.
    #[test]
    fn components_partition_the_graph(spec in arb_spec()) {
        let delta = spec.connectivity_gcd();
        let d = decompose(&spec).expect("decomposable");
        prop_assert_eq!(d.delta, delta);
        prop_assert_eq!(d.components.len(), delta as usize);
        let g = Graph::from_spec(&spec);
        let mut seen = BTreeSet::new();
        for comp in &d.components {
            for &x in comp {
                prop_assert!(x < g.n() && seen.insert(x), "components overlap or overflow");
            }
        }
        prop_assert_eq!(seen.len(), g.n(), "components do not cover the graph");
        for i in 0..delta {
            let u_i = g.id(Vertex::u(i));
            prop_assert!(d.components[i as usize].contains(&u_i), "u_{i} not in component {i}");
        }
    }

    /// The spoke-shift and unit-multiplier transforms are isomorphisms onto
    /// their image specs.
    #[test]
    fn transforms_are_isomorphisms(spec in arb_spec(), pick in 0usize..8, unit in 1u64..40) {
        let g = Graph::from_spec(&spec);

        let spokes: Vec<u64> = spec.s.iter().copied().collect();
        let c = spokes[pick % spokes.len()];
        let (shifted, map) = shift_spec(&spec, c).expect("c is a spoke type");
        prop_assert!(is_isomorphism(&g, &Graph::from_spec(&shifted), &map).is_ok());
        prop_assert!(shifted.s.contains(&0), "shifted spec lost its zero spoke");

        let start = unit % spec.m;
        let unit = (0..spec.m)
            .map(|d| (start + d) % spec.m)
            .find(|&k| gcd(k, spec.m) == 1)
            .expect("every modulus has a unit");
        let (image, map) = multiplier_spec(&spec, unit).expect("unit is coprime");
        prop_assert!(is_isomorphism(&g, &Graph::from_spec(&image), &map).is_ok());
    }

    /// An I-graph is a generalized Petersen graph exactly when one rim step
    /// is a unit, and the non-hamiltonian exception flag fires exactly on the
    /// doubled-step congruence with m = 5 (mod 6).
    #[test]
    fn family_detection_matches_the_arithmetic(m in 3u64..=40, a in 1u64..40, b in 1u64..40) {
        let Ok(spec) = IGraphSpec::new(m, a, b) else { return Ok(()) };
        let info = classify_family(&spec.to_bicirculant());
        let gpg = gcd(m, spec.a) == 1 || gcd(m, spec.b) == 1;
        match info.family {
            Family::GeneralizedPetersen { .. } => prop_assert!(gpg),
            Family::IGraph { .. } => prop_assert!(!gpg),
            other => prop_assert!(false, "I-graph classified as {other:?}"),
        }
        let (a, b) = (spec.a, spec.b);
        let doubled = (2 * a) % m == b % m
            || (2 * a + b) % m == 0
            || (2 * b) % m == a % m
            || (2 * b + a) % m == 0;
        let exceptional = gpg && m % 6 == 5 && doubled;
        prop_assert_eq!(info.petersen_exception.is_some(), exceptional);
    }

    /// Every spec form round-trips through its display syntax.
    #[test]
    fn display_round_trips_through_the_parser(spec in arb_spec()) {
        match parse_spec(&spec.to_string()) {
            Ok(ParsedSpec::General(back)) => prop_assert_eq!(back, spec),
            other => prop_assert!(false, "`{spec}` reparsed as {other:?}"),
        }
    }

    /// The exhaustive enumerator finds the oracle's cycle, and is empty
    /// exactly when the oracle proves absence.
    #[test]
    fn enumeration_agrees_with_the_oracle(spec in arb_spec()) {
        if spec.m > 6 {
            return Ok(());
        }
        let g = Graph::from_spec(&spec);
        if g.n() < 3 {
            return Ok(());
        }
        let enumeration = enumerate_hamilton_cycles(&g, 1_000_000, false).expect("small graph");
        match find_hamilton_cycle(&g, DEFAULT_BUDGET) {
            SearchOutcome::Found(cycle) => {
                prop_assert!(enumeration.cycles.contains(&cycle), "oracle cycle not enumerated");
            }
            SearchOutcome::ProvedAbsent { .. } => {
                prop_assert!(enumeration.cycles.is_empty(), "enumerated a cycle the oracle missed");
            }
            SearchOutcome::NotFoundWithinBudget { .. } => {
                prop_assert!(false, "budget exhausted on a tiny graph");
            }
        }
    }
}

#[test]
fn grw_display_round_trips() {
    let spec = GrwSpec::new(12, 3, 4, 2).expect("valid");
    match parse_spec(&spec.to_string()) {
        Ok(ParsedSpec::Grw(back)) => assert_eq!(back, spec),
        other => panic!("GRW display reparsed as {other:?}"),
    }
    let ispec = IGraphSpec::new(7, 2, 3).expect("valid");
    match parse_spec(&ispec.to_string()) {
        Ok(ParsedSpec::IGraph(back)) => assert_eq!(back, ispec),
        other => panic!("I display reparsed as {other:?}"),
    }
}
