mod common;

use num_bigint::BigInt;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use cdgraph::chargraph::{build_graph, rho, CharacterGraph};
use cdgraph::degrees::{direct_product_degrees, DegreeMultiset};
use cdgraph::graphkit::SimpleGraph;
use cdgraph::spectrum::{char_poly, distinct_eigenvalue_count};

use common::*;

fn degree_lists() -> impl Strategy<Value = Vec<u64>> {
    prop::collection::vec(1u64..=2000, 1..8).prop_map(|mut v| {
        v.push(1);
        v
    })
}

fn graphs(max_n: usize) -> impl Strategy<Value = SimpleGraph> {
    (1..=max_n, any::<u64>(), 0.0f64..=1.0).prop_map(|(n, seed, p)| random_graph(n, p, &mut ChaCha8Rng::seed_from_u64(seed)))
}

fn has_edge(cg: &CharacterGraph, p: u64, q: u64) -> bool {
    let (p, q) = (p.min(q), p.max(q));
    cg.edges.iter().any(|e| e.p == p && e.q == q)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn edges_are_exactly_the_divisible_prime_pairs(list in degree_lists()) {
        let d = DegreeMultiset::from_list(&list).unwrap();
        let cg = build_graph(&d).unwrap();
        let primes = rho(&d);
        prop_assert_eq!(&cg.primes, &primes);
        for (i, &p) in primes.iter().enumerate() {
            for &q in &primes[i + 1..] {
                let divisible: Vec<u64> = d.degree_set().into_iter().filter(|x| x % (p * q) == 0).collect();
                prop_assert_eq!(has_edge(&cg, p, q), !divisible.is_empty());
                if let Some(w) = cg.witness(p, q) {
                    prop_assert_eq!(Some(&w), divisible.iter().min());
                }
            }
        }
    }

    #[test]
    fn multiplicities_do_not_change_the_graph(list in degree_lists(), extra in prop::collection::vec(0usize..8, 0..6)) {
        let mut repeated = list.clone();
        repeated.extend(extra.iter().map(|&i| list[i % list.len()]));
        let a = build_graph(&DegreeMultiset::from_list(&list).unwrap()).unwrap();
        let b = build_graph(&DegreeMultiset::from_list(&repeated).unwrap()).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn product_graphs_join_their_factors(a in degree_lists(), b in degree_lists()) {
        let (da, db) = (DegreeMultiset::from_list(&a).unwrap(), DegreeMultiset::from_list(&b).unwrap());
        let product = direct_product_degrees(&da, &db);
        let Ok(cg) = build_graph(&product) else { return Ok(()) };
        let (ga, gb) = (build_graph(&da).unwrap(), build_graph(&db).unwrap());
        let mut union: Vec<u64> = ga.primes.iter().chain(&gb.primes).copied().collect();
        union.sort_unstable();
        union.dedup();
        prop_assert_eq!(&cg.primes, &union);
        for e in ga.edges.iter().chain(&gb.edges) {
            prop_assert!(has_edge(&cg, e.p, e.q));
        }
        for &p in &ga.primes {
            for &q in &gb.primes {
                if p != q {
                    prop_assert!(has_edge(&cg, p, q), "{} ~ {} missing", p, q);
                }
            }
        }
    }

    #[test]
    fn edge_list_and_json_round_trip(g in graphs(12)) {
        let text = g.to_edge_list();
        let back = SimpleGraph::parse_edge_list(&text).unwrap();
        prop_assert_eq!(back.to_edge_list(), text);
        let json = g.to_json().to_string();
        let back = SimpleGraph::parse_json(&json).unwrap();
        prop_assert_eq!(back.to_json().to_string(), json);
        prop_assert_eq!(adj(&back), adj(&g));
    }

    #[test]
    fn complement_is_an_involution(g in graphs(12)) {
        prop_assert_eq!(adj(&g.complement().complement()), adj(&g));
        let m = g.edges().len() + g.complement().edges().len();
        prop_assert_eq!(m, g.n() * (g.n() - 1) / 2);
    }

    #[test]
    fn diameter_matches_breadth_first_distances(g in graphs(12)) {
        let a = adj(&g);
        let n = g.n();
        let mut worst = Some(0);
        for x in 0..n {
            for y in 0..n {
                worst = match (worst, distance(&a, x, y)) {
                    (Some(w), Some(d)) => Some(w.max(d)),
                    _ => None,
                };
            }
        }
        prop_assert_eq!(g.diameter(), worst);
    }

    #[test]
    fn spectrum_agrees_with_the_minimal_polynomial(g in graphs(9)) {
        let a = adj(&g);
        prop_assert_eq!(distinct_eigenvalue_count(&g).distinct_count, minimal_polynomial_degree(&a));
        let p = char_poly(&g);
        let c = p.coefficients();
        prop_assert_eq!(p.degree(), g.n());
        prop_assert_eq!(&c[g.n()], &BigInt::from(1));
        if g.n() >= 1 {
            prop_assert_eq!(&c[g.n() - 1], &BigInt::from(0));
        }
        if g.n() >= 2 {
            prop_assert_eq!(&c[g.n() - 2], &-BigInt::from(g.edges().len()));
        }
    }

    #[test]
    fn raw_graphs_keep_their_edges(g in graphs(10)) {
        let labelled = g.clone().with_labels((0..g.n()).map(|v| (2 * v + 3).to_string()).collect());
        let cg = CharacterGraph::from_raw(&labelled).unwrap();
        prop_assert_eq!(cg.edges.len(), g.edges().len());
        prop_assert!(cg.edges.iter().all(|e| e.witness.is_none()));
        prop_assert_eq!(adj(&cg.to_simple_graph()), adj(&g));
    }
}
