mod common;

use proptest::prelude::*;
use rookgon::divisor::laplacian_apply;
use rookgon::gonality::{orbit_representatives, GonalityOptions};
use rookgon::graph::MultiGraph;
use rookgon::scramble::{
    hitting_number_with, min_egg_cut, scramble_order, scramble_symmetry, uniform_scramble, HittingMethod,
};
use rookgon::{
    connected_subsets, dhar_burn, fire_set, is_winnable, k_gonality, min_cut_between, rank, rook_graph,
    rook_symmetry, v_reduce, verify_rank_at_least, Divisor, Scramble, VertexSet,
};

use common::*;

/// A connected multigraph: a random spanning tree plus a few extra edges.
fn arb_graph(max_n: usize, max_extra: usize) -> impl Strategy<Value = MultiGraph> {
    (2..=max_n).prop_flat_map(move |n| {
        (
            Just(n),
            prop::collection::vec(any::<u32>(), n - 1),
            prop::collection::vec((0..n, 0..n, 1u32..3), 0..=max_extra),
        )
            .prop_map(|(n, parents, extra)| {
                let mut edges: Vec<(usize, usize, u32)> =
                    parents.iter().enumerate().map(|(i, p)| (i + 1, *p as usize % (i + 1), 1)).collect();
                edges.extend(extra.into_iter().filter(|(u, v, _)| u != v));
                MultiGraph::from_edges(n, &edges, None).unwrap()
            })
    })
}

fn arb_rook(max_vertices: usize) -> impl Strategy<Value = MultiGraph> {
    let all: Vec<Vec<usize>> = vec![
        vec![2, 2],
        vec![2, 3],
        vec![2, 4],
        vec![3, 3],
        vec![2, 5],
        vec![2, 2, 2],
        vec![3, 4],
        vec![2, 2, 3],
        vec![2, 6],
    ];
    let dims: Vec<Vec<usize>> = all.into_iter().filter(|d| d.iter().product::<usize>() <= max_vertices).collect();
    prop::sample::select(dims).prop_map(|d| rook_graph(&d).unwrap())
}

fn with_chips(g: MultiGraph, lo: i64, hi: i64) -> impl Strategy<Value = (MultiGraph, Vec<i64>)> {
    let n = g.vertex_count();
    (Just(g), prop::collection::vec(lo..hi, n))
}

fn with_set(g: MultiGraph) -> impl Strategy<Value = (MultiGraph, VertexSet)> {
    let n = g.vertex_count();
    (Just(g), 0u64..(1 << n)).prop_map(|(g, m)| (g, VertexSet(m)))
}

/// Connected eggs grown from random seeds: each seed set is cut down to the
/// component of its lowest vertex.
fn arb_scramble(max_n: usize) -> impl Strategy<Value = Scramble> {
    arb_graph(max_n, 4).prop_flat_map(|g| {
        let n = g.vertex_count();
        (Just(g), prop::collection::vec(1u64..(1 << n), 1..8)).prop_map(|(g, seeds)| {
            let eggs: Vec<VertexSet> = seeds
                .into_iter()
                .map(|m| {
                    let s = VertexSet(m);
                    g.components(s).into_iter().find(|c| c.contains(s.first().unwrap())).unwrap()
                })
                .collect();
            Scramble::new(g, eggs).unwrap()
        })
    })
}

fn dimsless(g: &MultiGraph) -> MultiGraph {
    MultiGraph::from_edges(g.vertex_count(), &g.edges(), None).unwrap()
}

fn check_order_report(s: &Scramble) -> Result<(), TestCaseError> {
    let g = s.host();
    let n = g.vertex_count();
    let r = scramble_order(s).unwrap();
    prop_assert_eq!(r.max_avoidance.len() as u64 + r.hitting_number, n as u64);
    prop_assert!(s.eggs().iter().all(|e| !e.is_subset(r.max_avoidance)));
    prop_assert!(s.eggs().iter().all(|e| !e.is_disjoint(r.hitting_set)));
    prop_assert_eq!(r.hitting_number as usize, brute_hitting_number(n, s.eggs()));
    prop_assert_eq!(r.min_egg_cut, brute_min_egg_cut(g, s.eggs()));
    if let (Some(c), Some(w)) = (r.min_egg_cut, r.cut_witness) {
        prop_assert_eq!(w.side_a.union(w.side_b), g.all());
        prop_assert!(w.side_a.is_disjoint(w.side_b));
        prop_assert!(w.eggs[0].is_subset(w.side_a) && w.eggs[1].is_subset(w.side_b));
        prop_assert_eq!(g.cut_weight(w.side_a), c);
    }
    let expected = r.min_egg_cut.map_or(r.hitting_number, |c| c.min(r.hitting_number));
    prop_assert_eq!(r.order, expected);
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

    #[test]
    fn handshake_and_genus(g in arb_graph(9, 8)) {
        let total: u64 = (0..g.vertex_count()).map(|v| g.degree(v) as u64).sum();
        prop_assert_eq!(total, 2 * g.edge_count());
        prop_assert_eq!(g.genus(), g.edge_count() as i64 - g.vertex_count() as i64 + 1);
    }

    #[test]
    fn cut_weight_is_symmetric((g, a) in arb_graph(9, 8).prop_flat_map(with_set)) {
        let n = g.vertex_count();
        prop_assert_eq!(g.cut_weight(a), g.cut_weight(a.complement(n)));
        prop_assert_eq!(g.cut_weight(a), brute_cut(&g, a.0));
    }

    #[test]
    fn min_cut_matches_enumeration(
        (g, split) in arb_graph(9, 10).prop_flat_map(|g| {
            let n = g.vertex_count();
            (Just(g), prop::collection::vec(0u8..3, n))
        })
    ) {
        let mut s = VertexSet::EMPTY;
        let mut t = VertexSet::EMPTY;
        for (v, side) in split.iter().enumerate() {
            match side { 0 => s.insert(v), 1 => t.insert(v), _ => {} }
        }
        prop_assume!(!s.is_empty() && !t.is_empty());
        let f = min_cut_between(&g, s, t).unwrap();
        prop_assert_eq!(f.value, brute_min_cut(&g, s.0, t.0));
        prop_assert!(s.is_subset(f.source_side) && t.is_disjoint(f.source_side));
        prop_assert_eq!(g.cut_weight(f.source_side), f.value);
    }

    #[test]
    fn firing_conserves_degree_and_reverses(
        ((g, chips), a) in arb_graph(8, 6)
            .prop_flat_map(|g| with_chips(g, -3, 4))
            .prop_flat_map(|(g, c)| { let n = g.vertex_count(); (Just((g, c)), 0u64..(1 << n)) })
    ) {
        let n = g.vertex_count();
        let a = VertexSet(a);
        let d = Divisor::new(chips);
        let fired = fire_set(&g, &d, a);
        prop_assert_eq!(fired.degree(), d.degree());
        let ind: Vec<i64> = (0..n).map(|v| a.contains(v) as i64).collect();
        let expected: Vec<i64> = d.chips.iter().zip(laplacian(&g, &ind)).map(|(c, l)| c - l).collect();
        prop_assert_eq!(&fired.chips, &expected);
        prop_assert_eq!(fire_set(&g, &fired, a.complement(n)), d);
    }

    #[test]
    fn reduction_is_reduced_unique_and_idempotent(
        ((g, chips), shift, v) in arb_graph(7, 6)
            .prop_flat_map(|g| with_chips(g, -4, 5))
            .prop_flat_map(|(g, c)| {
                let n = g.vertex_count();
                (Just((g, c)), prop::collection::vec(-2i64..3, n), 0..n)
            })
    ) {
        let d = Divisor::new(chips);
        let r = v_reduce(&g, &d, v).unwrap();
        let moved: Vec<i64> = d.chips.iter().zip(laplacian(&g, &r.firing_counts)).map(|(c, l)| c - l).collect();
        prop_assert_eq!(&r.reduced.chips, &moved);
        prop_assert!(r.reduced.is_effective_away_from(Some(v)));
        prop_assert!(!has_legal_firing_avoiding(&g, &r.reduced.chips, v));
        prop_assert_eq!(&v_reduce(&g, &r.reduced, v).unwrap().reduced, &r.reduced);
        let other: Vec<i64> = d.chips.iter().zip(laplacian(&g, &shift)).map(|(c, l)| c + l).collect();
        prop_assert_eq!(v_reduce(&g, &Divisor::new(other), v).unwrap().reduced, r.reduced);
    }

    #[test]
    fn burning_finds_a_legal_firing_or_certifies_reduced(
        ((g, chips), q) in arb_graph(7, 6)
            .prop_flat_map(|g| with_chips(g, 0, 4))
            .prop_flat_map(|(g, c)| { let n = g.vertex_count(); (Just((g, c)), 0..n) })
    ) {
        let d = Divisor::new(chips);
        let b = dhar_burn(&g, &d, q).unwrap();
        prop_assert!(b.burnt.contains(q));
        if b.unburnt.is_empty() {
            prop_assert!(!has_legal_firing_avoiding(&g, &d.chips, q));
        } else {
            for v in b.unburnt.iter() {
                prop_assert!(d.chips[v] >= g.edges_into(v, b.burnt) as i64);
            }
        }
    }

    #[test]
    fn winnability_matches_greedy((g, chips) in arb_graph(7, 6).prop_flat_map(|g| with_chips(g, -3, 3))) {
        let d = Divisor::new(chips);
        prop_assert_eq!(is_winnable(&g, &d), greedy_winnable(&g, &d.chips));
    }

    #[test]
    fn rank_matches_definition((g, chips) in arb_graph(5, 3).prop_flat_map(|g| with_chips(g, -1, 3))) {
        let d = Divisor::new(chips);
        prop_assert_eq!(rank(&g, &d).unwrap(), definitional_rank(&g, &d.chips));
    }

    #[test]
    fn riemann_roch((g, chips) in arb_graph(6, 4).prop_flat_map(|g| with_chips(g, -2, 4))) {
        let n = g.vertex_count();
        let d = Divisor::new(chips);
        let k: Vec<i64> = (0..n).map(|v| g.degree(v) as i64 - 2 - d.chips[v]).collect();
        let lhs = rank(&g, &d).unwrap() - rank(&g, &Divisor::new(k)).unwrap();
        prop_assert_eq!(lhs, d.degree() + 1 - g.genus());
    }

    #[test]
    fn reduced_and_poor_at_base_has_no_positive_rank(
        ((g, chips), v) in arb_graph(7, 6)
            .prop_flat_map(|g| with_chips(g, -3, 4))
            .prop_flat_map(|(g, c)| { let n = g.vertex_count(); (Just((g, c)), 0..n) })
    ) {
        let d = v_reduce(&g, &Divisor::new(chips), v).unwrap().reduced;
        prop_assume!(d.chips[v] <= 0);
        let check = verify_rank_at_least(&g, &d, 1).unwrap();
        prop_assert!(!check.holds);
        let e = check.counterexample.unwrap();
        prop_assert_eq!(e.degree(), 1);
        let rest: Vec<i64> = d.chips.iter().zip(&e.chips).map(|(a, b)| a - b).collect();
        prop_assert!(!greedy_winnable(&g, &rest));
        let mut at_v = d.chips.clone();
        at_v[v] -= 1;
        prop_assert!(!greedy_winnable(&g, &at_v));
    }

    #[test]
    fn connected_subsets_match_enumeration((g, k) in arb_graph(9, 6).prop_flat_map(|g| {
        let n = g.vertex_count();
        (Just(g), 1..=n)
    })) {
        let mut got: Vec<u64> = connected_subsets(&g, k).map(|s| s.0).collect();
        got.sort();
        prop_assert_eq!(got, brute_connected_subsets(&g, k));
    }

    #[test]
    fn canonical_form_is_orbit_invariant((g, chips) in arb_rook(12).prop_flat_map(|g| with_chips(g, 0, 3))) {
        let sym = rook_symmetry(g.dims().unwrap()).unwrap();
        let canon = sym.canonical_chips(&chips).unwrap();
        prop_assert!(canon <= chips);
        for p in sym.elements().unwrap().iter().take(50) {
            prop_assert!(g.is_automorphism(p));
            let mut moved = vec![0; chips.len()];
            for (v, &c) in chips.iter().enumerate() {
                moved[p[v]] = c;
            }
            prop_assert_eq!(&sym.canonical_chips(&moved).unwrap(), &canon);
        }
    }

    #[test]
    fn laplacian_kernel_is_constants((g, c) in arb_graph(8, 6).prop_flat_map(|g| (Just(g), -3i64..4))) {
        let n = g.vertex_count();
        prop_assert!(laplacian_apply(&g, &vec![c; n]).iter().all(|&x| x == 0));
    }

    #[test]
    fn scramble_order_is_exact(s in arb_scramble(10)) {
        check_order_report(&s)?;
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 24, ..ProptestConfig::default() })]

    #[test]
    fn gonality_matches_brute_force_and_chains(g in arb_graph(5, 2)) {
        let opts = GonalityOptions::default();
        let mut prev = None;
        for k in 1..=3 {
            let r = k_gonality(&g, k, &opts).unwrap();
            let value = r.value.unwrap();
            prop_assert_eq!(value, brute_k_gonality(&g, k));
            prop_assert!(definitional_rank_at_least(&g, &r.witness.unwrap().chips, k));
            if let Some(p) = prev {
                prop_assert!(p <= value - 1);
            }
            prev = Some(value);
        }
    }

    #[test]
    fn uniform_scrambles_on_rook_hosts(g in arb_rook(12), k in 1usize..4) {
        prop_assume!(k <= g.vertex_count());
        let s = uniform_scramble(&g, k).unwrap();
        prop_assert!(scramble_symmetry(&s).is_some());
        let bnb = hitting_number_with(&s, HittingMethod::BranchAndBound).unwrap();
        let orb = hitting_number_with(&s, HittingMethod::OrbitSearch).unwrap();
        prop_assert_eq!(bnb.hitting_number, orb.hitting_number);
        let plain = Scramble::new(dimsless(&g), s.eggs().to_vec()).unwrap();
        prop_assert!(scramble_symmetry(&plain).is_none());
        prop_assert_eq!(min_egg_cut(&s).unwrap().value, min_egg_cut(&plain).unwrap().value);
        check_order_report(&s)?;
    }
}

#[test]
fn orbit_counts_agree_with_burnside() {
    for dims in [vec![2, 2], vec![2, 3], vec![3, 3], vec![2, 2, 2]] {
        let g = rook_graph(&dims).unwrap();
        let group = automorphisms(&g);
        let sym = rook_symmetry(&dims).unwrap();
        assert_eq!(sym.order().unwrap(), group.len() as u128);
        for deg in 0..=4 {
            let reps = orbit_representatives(g.vertex_count(), deg, Some(&sym)).unwrap();
            assert_eq!(reps.len() as u64, burnside_orbit_count(&group, deg), "{dims:?} degree {deg}");
        }
    }
}

#[test]
fn rook_symmetry_orders_match_backtracking() {
    for dims in [vec![2, 2], vec![2, 3], vec![3, 3], vec![4, 4], vec![2, 2, 2], vec![2, 2, 3]] {
        let g = rook_graph(&dims).unwrap();
        assert_eq!(rook_symmetry(&dims).unwrap().order().unwrap(), automorphism_count(&g) as u128, "{dims:?}");
    }
}

#[test]
fn symmetry_does_not_change_gonality_on_small_rook_graphs() {
    for dims in [vec![2, 2], vec![2, 3], vec![2, 4], vec![3, 3], vec![2, 2, 2]] {
        let g = rook_graph(&dims).unwrap();
        let sym = rook_symmetry(&dims).unwrap();
        for k in 1..=2 {
            let on = k_gonality(&g, k, &GonalityOptions { symmetry: Some(sym.clone()), ..Default::default() }).unwrap();
            let off = k_gonality(&g, k, &GonalityOptions::default()).unwrap();
            assert_eq!(on.value, off.value, "{dims:?} k={k}");
            assert_eq!(on.witness, off.witness, "{dims:?} k={k}");
        }
    }
}
