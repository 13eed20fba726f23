use proptest::prelude::*;

use semipair::exact::{exact_domination, exact_paired_domination, exact_semi_pd};
use semipair::generate::{generate, Family, GenSpec, Instance};
use semipair::greedy::approx_semi_paired;
use semipair::interval::{solve_model, IntervalModel};
use semipair::io::{
    emit_edgelist, emit_intervals, emit_solution, parse_edgelist, parse_intervals, parse_solution,
};
use semipair::tree::semi_paired_dom_tree;
use semipair::{find_pairing, verify_solution, Graph, SemipairedSolution, VertexSet};

/// Connected graph: a random tree plus extra edges.
fn connected_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n)
        .prop_flat_map(|n| {
            let parents: Vec<_> = (2..=n).map(|v| 1..v).collect();
            let extra = prop::collection::vec((1..=n, 1..=n), 0..2 * n);
            (Just(n), parents, extra)
        })
        .prop_map(|(n, parents, extra)| {
            let mut edges: Vec<(usize, usize)> = parents.into_iter().zip(2..).collect();
            edges.extend(extra.into_iter().filter(|(u, v)| u != v));
            Graph::new(n, &edges).unwrap()
        })
}

fn any_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n)
        .prop_flat_map(|n| (Just(n), prop::collection::vec((1..=n, 1..=n), 0..3 * n)))
        .prop_map(|(n, e)| {
            let e: Vec<_> = e.into_iter().filter(|(u, v)| u != v).collect();
            Graph::new(n, &e).unwrap()
        })
}

/// All partitions of `s` into pairs at distance <= 2, by plain enumeration.
fn pairings(g: &Graph, s: &[usize]) -> usize {
    match s {
        [] => 1,
        [first, rest @ ..] => rest
            .iter()
            .enumerate()
            .filter(|(_, &w)| g.within_two(*first, w))
            .map(|(i, _)| {
                let mut left = rest.to_vec();
                left.remove(i);
                pairings(g, &left)
            })
            .sum(),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn distance_is_a_metric(g in connected_graph(10)) {
        for u in g.vertices() {
            prop_assert_eq!(g.distance(u, u).unwrap(), Some(0));
            for v in g.vertices() {
                let duv = g.distance(u, v).unwrap().unwrap();
                prop_assert_eq!(Some(duv), g.distance(v, u).unwrap());
                for w in g.vertices() {
                    let dvw = g.distance(v, w).unwrap().unwrap();
                    prop_assert!(g.distance(u, w).unwrap().unwrap() <= duv + dvw);
                }
            }
        }
    }

    #[test]
    fn within_two_is_closed_neighborhood_squared(g in any_graph(10)) {
        for u in g.vertices() {
            let mut expect = VertexSet::new(g.n());
            for w in g.closed_neighborhood(u).iter() {
                expect.union_with(&g.closed_neighborhood(w));
            }
            expect.remove(u);
            prop_assert_eq!(g.vertices_within_2(u), expect);
        }
    }

    #[test]
    fn find_pairing_matches_enumeration(g in any_graph(9), mask in any::<u16>()) {
        let ids: Vec<usize> = g.vertices().filter(|&v| mask >> (v - 1) & 1 == 1).collect();
        let s = VertexSet::from_ids(g.n(), ids.iter().copied()).unwrap();
        let found = find_pairing(&g, &s);
        prop_assert_eq!(found.is_some(), pairings(&g, &ids) > 0);
        if let Some(p) = found {
            let mut vs = p.vertices();
            vs.sort_unstable();
            prop_assert_eq!(vs, ids);
            prop_assert!(p.pairs().iter().all(|&(a, b)| g.within_two(a, b)));
        }
    }

    #[test]
    fn oracle_witness_is_valid_and_chain_holds(g in connected_graph(9)) {
        let s = exact_semi_pd(&g, None).unwrap();
        prop_assert!(verify_solution(&g, s.solution().unwrap()).unwrap().is_valid());
        prop_assert_eq!(s.cardinality % 2, 0);
        let d = exact_domination(&g).unwrap().cardinality;
        let p = exact_paired_domination(&g).unwrap().cardinality;
        prop_assert!(d <= s.cardinality && s.cardinality <= p);
        // Doubling a dominating set never beats the optimum.
        prop_assert!(s.cardinality <= 2 * d);
    }

    #[test]
    fn greedy_is_valid_and_partitions(g in connected_graph(11)) {
        let t = approx_semi_paired(&g).unwrap();
        prop_assert!(verify_solution(&g, &t.solution).unwrap().is_valid());
        let mut all: Vec<usize> = t.rounds.iter().flat_map(|r| r.covered.clone()).collect();
        all.sort_unstable();
        prop_assert_eq!(all, g.vertices().collect::<Vec<_>>());
        prop_assert!(t.rounds.iter().all(|r| r.gain == r.covered.len() && r.gain > 0));
    }

    #[test]
    fn interval_solver_is_optimal(n in 2usize..=12, seed in any::<u64>()) {
        let Instance::Interval(m) = generate(&GenSpec::new(Family::RandomInterval, n, seed)).unwrap() else {
            unreachable!()
        };
        let (g, run) = solve_model(&m).unwrap();
        prop_assert!(verify_solution(&g, &run.solution).unwrap().is_valid());
        prop_assert_eq!(run.solution.cardinality(), exact_semi_pd(&g, None).unwrap().cardinality);
    }

    #[test]
    fn interval_solver_handles_real_endpoints(n in 2usize..=10, seed in any::<u64>(), scale in 0.1f64..10.0) {
        let Instance::Interval(m) = generate(&GenSpec::new(Family::RandomInterval, n, seed)).unwrap() else {
            unreachable!()
        };
        let real = IntervalModel::new(
            m.intervals().iter().map(|&(a, b)| (a as f64 * scale, b as f64 * scale)).collect(),
        ).unwrap();
        prop_assert_eq!(solve_model(&real).unwrap().1.solution, solve_model(&m).unwrap().1.solution);
    }

    #[test]
    fn tree_solver_is_optimal(n in 2usize..=14, seed in any::<u64>()) {
        let t = generate(&GenSpec::new(Family::RandomTree, n, seed)).unwrap().graph();
        let sol = semi_paired_dom_tree(&t).unwrap();
        prop_assert!(verify_solution(&t, &sol).unwrap().is_valid());
        prop_assert_eq!(sol.cardinality(), exact_semi_pd(&t, None).unwrap().cardinality);
    }

    #[test]
    fn edgelist_round_trip(g in any_graph(15)) {
        let text = emit_edgelist(&g);
        let back = parse_edgelist(&text).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(emit_edgelist(&back), text);
    }

    #[test]
    fn interval_file_round_trip(n in 1usize..=15, seed in any::<u64>()) {
        let Instance::Interval(m) = generate(&GenSpec::new(Family::RandomInterval, n, seed)).unwrap() else {
            unreachable!()
        };
        let text = emit_intervals(&m);
        let back = parse_intervals::<i64>(&text).unwrap();
        prop_assert_eq!(emit_intervals(&back), text);
        prop_assert_eq!(back, m);
    }

    #[test]
    fn solution_round_trip(pairs in prop::collection::vec((1usize..100, 1usize..100), 0..10)) {
        let sol = SemipairedSolution::new(pairs);
        prop_assert_eq!(parse_solution(&emit_solution(&sol)).unwrap(), sol);
    }

    #[test]
    fn generation_is_deterministic(n in 1usize..=12, seed in any::<u64>()) {
        for family in [Family::RandomTree, Family::RandomInterval, Family::Gnp(0.5)] {
            let a = generate(&GenSpec::new(family.clone(), n, seed));
            let b = generate(&GenSpec::new(family, n, seed));
            prop_assert_eq!(a, b);
        }
    }
}
