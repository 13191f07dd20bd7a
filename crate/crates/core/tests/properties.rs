//! Property tests: structural graph invariants, exact polynomial algebra,
//! and the engine identities, all checked against definitional oracles.

use indpoly::engine::{
    alternating_number_auto, brute_force_poly, independence_poly, stability_number, Engine,
    EngineConfig, Strategy as Pivot,
};
use indpoly::families::{disjoint_union, zykov_sum};
use indpoly::graph::Graph;
use indpoly::io::{parse_graph6, write_graph6};
use indpoly::{Int, Poly};
use proptest::prelude::*;

/// Graph on `n` vertices from a dense edge-presence vector.
fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
    let mut edges = Vec::new();
    let mut k = 0;
    for u in 0..n {
        for v in u + 1..n {
            if bits[k] {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    Graph::from_edge_list(n, &edges).expect("in range")
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(move |n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2)
            .prop_map(move |bits| graph_from_bits(n, &bits))
    })
}

fn arb_poly() -> impl Strategy<Value = Poly> {
    proptest::collection::vec(-50i64..=50, 0..8).prop_map(|cs| Poly::from_i64s(&cs))
}

proptest! {
    #[test]
    fn vertex_deletion_counts(g in arb_graph(9), which in any::<proptest::sample::Index>()) {
        let v = which.index(g.n());
        let h = g.delete_vertex(v);
        prop_assert_eq!(h.n(), g.n() - 1);
        prop_assert_eq!(h.edge_count(), g.edge_count() - g.degree(v));
    }

    #[test]
    fn components_partition_vertices_and_edges(g in arb_graph(9)) {
        let comps = g.connected_components();
        prop_assert_eq!(comps.iter().map(Graph::n).sum::<usize>(), g.n());
        prop_assert_eq!(comps.iter().map(Graph::edge_count).sum::<usize>(), g.edge_count());
    }

    #[test]
    fn distance_symmetric_with_triangle_inequality(g in arb_graph(8)) {
        for u in 0..g.n() {
            for v in 0..g.n() {
                prop_assert_eq!(g.distance(u, v), g.distance(v, u));
                for w in 0..g.n() {
                    if let (Some(a), Some(b)) = (g.distance(u, w), g.distance(w, v)) {
                        let direct = g.distance(u, v).expect("same component");
                        prop_assert!(direct <= a + b);
                    }
                }
            }
        }
    }

    #[test]
    fn polynomial_ring_laws(p in arb_poly(), q in arb_poly(), r in arb_poly()) {
        prop_assert_eq!(&(&p + &q) - &q, p.clone());
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
    }

    #[test]
    fn engine_agrees_with_oracle_under_every_strategy(g in arb_graph(9)) {
        let oracle = brute_force_poly(&g).expect("small");
        for s in Pivot::all() {
            prop_assert_eq!(&independence_poly(&g, s).0, &oracle);
        }
    }

    #[test]
    fn coefficient_sanity(g in arb_graph(10)) {
        let (p, _) = independence_poly(&g, Pivot::Auto);
        let n = g.n();
        prop_assert_eq!(p.coeff(0), Int::from(1));
        prop_assert_eq!(p.coeff(1), Int::from(n as i64));
        prop_assert_eq!(
            p.coeff(2),
            Int::from((n * (n - 1) / 2 - g.edge_count()) as i64)
        );
        prop_assert_eq!(p.degree(), Some(stability_number(&g)));
        prop_assert!(p.coeffs().iter().all(|c| c > &Int::from(0)));
    }

    #[test]
    fn alpha_equals_largest_maximal_stable_set(g in arb_graph(9)) {
        let sets = indpoly::analysis::maximal_stable_sets(&g).expect("guarded");
        let alpha = sets.iter().map(|s| s.len()).max().unwrap_or(0);
        prop_assert_eq!(stability_number(&g), alpha);
        let (p, _) = independence_poly(&g, Pivot::Auto);
        prop_assert_eq!(p.degree(), Some(alpha));
    }

    #[test]
    fn union_is_multiplicative(a in arb_graph(7), b in arb_graph(7)) {
        let u = disjoint_union(&[a.clone(), b.clone()]).expect("in cap");
        let lhs = independence_poly(&u, Pivot::Auto).0;
        let rhs = &independence_poly(&a, Pivot::Auto).0 * &independence_poly(&b, Pivot::Auto).0;
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn zykov_sum_is_additive_minus_one(a in arb_graph(7), b in arb_graph(7)) {
        let z = zykov_sum(&a, &b).expect("in cap");
        let lhs = independence_poly(&z, Pivot::Auto).0;
        let rhs = &(&independence_poly(&a, Pivot::Auto).0
            + &independence_poly(&b, Pivot::Auto).0)
            - &Poly::one();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn pendant_identity(g in arb_graph(9)) {
        // I(G;-1) = -I(G - N[v];-1) whenever v neighbors a pendant u
        if let Some(u) = g.pendant_vertices().first() {
            let v = g.neighbors(u).first().expect("pendant has a neighbor");
            let lhs = alternating_number_auto(&g);
            let rhs = alternating_number_auto(&g.delete_closed_neighborhood(v).expect("in range"));
            prop_assert_eq!(lhs, -rhs);
        }
    }

    #[test]
    fn distance_three_pendants_vanish(g in arb_graph(10)) {
        let pendants: Vec<usize> = g.pendant_vertices().iter().collect();
        let pair = pendants.iter().enumerate().flat_map(|(i, &a)| {
            pendants[i + 1..].iter().map(move |&b| (a, b))
        }).find(|&(a, b)| g.distance(a, b) == Some(3));
        if pair.is_some() {
            prop_assert_eq!(alternating_number_auto(&g), Int::from(0));
        }
    }

    #[test]
    fn graph6_round_trips(g in arb_graph(10)) {
        let enc = write_graph6(&g);
        let back = parse_graph6(&enc).expect("own encoding parses");
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(write_graph6(&back), enc);
    }

    #[test]
    fn parallel_engine_matches_sequential(g in arb_graph(12)) {
        let seq = independence_poly(&g, Pivot::Auto).0;
        let mut cfg = EngineConfig::new(Pivot::Auto);
        cfg.parallel = true;
        let par = Engine::with_config(cfg).compute(&g).0;
        prop_assert_eq!(seq, par);
    }

    #[test]
    fn even_odd_counts_tie_out(g in arb_graph(9)) {
        let (f0, f1) = indpoly::engine::even_odd_counts(&g);
        let (p, _) = independence_poly(&g, Pivot::Auto);
        prop_assert_eq!(f0.clone() - f1.clone(), p.eval_minus_one());
        prop_assert_eq!(f0 + f1, p.eval(&Int::from(1)));
    }

    #[test]
    fn cyclomatic_bound_holds(g in arb_graph(8)) {
        let nu = indpoly::analysis::cyclomatic_number(&g);
        let v = alternating_number_auto(&g);
        prop_assert!(num_traits::Signed::abs(&v) <= Int::from(1) << nu);
    }

    #[test]
    fn edge_deletion_on_cycle_drops_cyclomatic(g in arb_graph(9)) {
        if let Some((u, v)) = g.cycle_edge() {
            let h = g.delete_edge(u, v).expect("edge");
            prop_assert_eq!(
                indpoly::analysis::cyclomatic_number(&h),
                indpoly::analysis::cyclomatic_number(&g) - 1
            );
        }
    }
}
