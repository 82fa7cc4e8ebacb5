mod common;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use cdgraph::graphkit::{iter_set, SimpleGraph};
use cdgraph::spectrum::distinct_eigenvalue_count;

use common::*;

fn all_graphs_upto(max_n: usize) -> Vec<SimpleGraph> {
    (1..=max_n).flat_map(|n| (0..graph_count(n)).map(move |m| graph_from_mask(n, m))).collect()
}

#[test]
fn small_graph_invariants_match_subset_oracles() {
    let graphs = all_graphs_upto(6);
    let bad: Vec<String> = graphs
        .par_iter()
        .filter_map(|g| {
            let a = adj(g);
            let cuts: Vec<usize> = iter_set(g.articulation_points()).collect();
            let checks = [
                ("cut vertices", cuts == cut_vertices(&a)),
                ("alpha", g.independence_number() == independence_number(&a)),
                ("omega", g.clique_number() == clique_number(&a)),
                ("kappa", g.vertex_connectivity() == vertex_connectivity(&a)),
                ("gamma", g.domination_number() == domination_number(&a)),
                ("matching", g.maximum_matching().len() == matching_number(&a)),
                ("connected", g.is_connected() == connected(&a)),
            ];
            checks.iter().find(|c| !c.1).map(|c| format!("{}: {}", c.0, g.to_edge_list()))
        })
        .collect();
    assert!(bad.is_empty(), "{} disagreements, e.g. {}", bad.len(), bad[0]);
}

#[test]
fn witnesses_are_valid() {
    for g in all_graphs_upto(5) {
        let a = adj(&g);
        let mis = g.maximum_independent_set();
        assert!(iter_set(mis).all(|x| iter_set(mis).all(|y| !a[x][y])));
        let dom = g.minimum_dominating_set();
        assert!((0..g.n()).all(|v| dom >> v & 1 == 1 || iter_set(dom).any(|u| a[u][v])));
        let m = g.maximum_matching();
        assert!(m.iter().all(|&(x, y)| a[x][y]));
        let mut used: Vec<usize> = m.iter().flat_map(|&(x, y)| [x, y]).collect();
        used.sort_unstable();
        used.dedup();
        assert_eq!(used.len(), 2 * m.len());
        if let Some(cut) = g.minimum_vertex_cut() {
            let keep: Vec<bool> = (0..g.n()).map(|v| cut >> v & 1 == 0).collect();
            assert!(!connected_within(&a, &keep));
            assert_eq!(cut.count_ones() as usize, g.vertex_connectivity());
        }
    }
}

#[test]
fn complement_edge_counts_obey_turan() {
    for g in all_graphs_upto(6) {
        let c = adj(&g.complement());
        let n = g.n();
        let m = pairs(n).iter().filter(|&&(x, y)| c[x][y]).count();
        let omega = clique_number(&c);
        if omega <= 2 {
            assert!(4 * m <= n * n, "{}", g.to_edge_list());
        }
        if omega <= 3 {
            assert!(3 * m <= n * n, "{}", g.to_edge_list());
        }
    }
}

#[test]
fn hamiltonian_solvers_follow_chvatal_erdos() {
    for n in 1..=7usize {
        let bad: Vec<u64> = (0..graph_count(n))
            .into_par_iter()
            .filter(|&mask| {
                let g = graph_from_mask(n, mask);
                let a = adj(&g);
                let r = rows(&a);
                if !rows_connected(&r, (1 << n) - 1) {
                    return false;
                }
                let (alpha, kappa) = (rows_alpha(&r), rows_kappa(&r));
                let path_ok = match g.hamiltonian_path() {
                    Some(p) => is_hamiltonian_path(&a, &p),
                    None => alpha > kappa + 1 && !has_hamiltonian_path(&a),
                };
                let cycle_ok = match g.hamiltonian_cycle() {
                    Some(c) => is_hamiltonian_path(&a, &c) && n >= 3 && a[c[n - 1]][c[0]],
                    None => !(n >= 3 && alpha <= kappa) && !has_hamiltonian_cycle(&a),
                };
                !(path_ok && cycle_ok)
            })
            .collect();
        assert!(bad.is_empty(), "n = {n}: {} failures, first mask {}", bad.len(), bad[0]);
    }
}

#[test]
fn claw_free_even_graphs_have_perfect_matchings() {
    for n in 2..=6usize {
        for mask in 0..graph_count(n) {
            let g = graph_from_mask(n, mask);
            let a = adj(&g);
            if n % 2 == 0 && connected(&a) && is_claw_free(&a) {
                assert!(g.has_perfect_matching(), "{}", g.to_edge_list());
            }
        }
    }
}

/// Line graph of a random connected graph with `edges` edges.
fn random_line_graph(edges: usize, rng: &mut impl Rng) -> SimpleGraph {
    loop {
        let vertices = rng.gen_range(4..=edges + 1);
        let all = pairs(vertices);
        if all.len() < edges {
            continue;
        }
        let mut chosen = all.clone();
        for i in 0..chosen.len() {
            let j = rng.gen_range(i..chosen.len());
            chosen.swap(i, j);
        }
        chosen.truncate(edges);
        let lg: Vec<(usize, usize)> = pairs(edges)
            .into_iter()
            .filter(|&(x, y)| {
                let (e, f) = (chosen[x], chosen[y]);
                e.0 == f.0 || e.0 == f.1 || e.1 == f.0 || e.1 == f.1
            })
            .collect();
        let g = SimpleGraph::from_edges(edges, &lg);
        if connected(&adj(&g)) {
            return g;
        }
    }
}

#[test]
fn random_claw_free_even_graphs_have_perfect_matchings() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xc1a5);
    for n in [8usize, 10, 12] {
        let mut tested = 0;
        while tested < 500 {
            let g = if tested % 2 == 0 {
                random_line_graph(n, &mut rng)
            } else {
                let g = random_graph(n, rng.gen_range(0.6..0.9), &mut rng);
                let a = adj(&g);
                if !connected(&a) || !is_claw_free(&a) {
                    continue;
                }
                g
            };
            assert!(is_claw_free(&adj(&g)));
            assert!(g.has_perfect_matching(), "{}", g.to_edge_list());
            assert_eq!(g.maximum_matching().len(), n / 2);
            tested += 1;
        }
    }
}

/// All labeled `k`-regular graphs on `n` vertices.
fn regular_graphs(n: usize, k: usize) -> Vec<SimpleGraph> {
    fn go(n: usize, k: usize, ps: &[(usize, usize)], i: usize, deg: &mut Vec<usize>, edges: &mut Vec<(usize, usize)>, out: &mut Vec<SimpleGraph>) {
        if i == ps.len() {
            if deg.iter().all(|&d| d == k) {
                out.push(SimpleGraph::from_edges(n, edges));
            }
            return;
        }
        let (a, b) = ps[i];
        // Once every pair at `a` has been decided, `a` must be full.
        let last_for_a = b == n - 1;
        if deg[a] < k && deg[b] < k {
            deg[a] += 1;
            deg[b] += 1;
            edges.push((a, b));
            if !last_for_a || deg[a] == k {
                go(n, k, ps, i + 1, deg, edges, out);
            }
            edges.pop();
            deg[a] -= 1;
            deg[b] -= 1;
        }
        if !last_for_a || deg[a] == k {
            go(n, k, ps, i + 1, deg, edges, out);
        }
    }
    let mut out = Vec::new();
    go(n, k, &pairs(n), 0, &mut vec![0; n], &mut Vec::new(), &mut out);
    out
}

fn srg_oracle(a: &Adj) -> Option<(usize, usize, usize, usize)> {
    let n = a.len();
    let k = a[0].iter().filter(|&&b| b).count();
    let common = |x: usize, y: usize| (0..n).filter(|&z| a[x][z] && a[y][z]).count();
    let mut lambda = None;
    let mut mu = None;
    for (x, y) in pairs(n) {
        let slot = if a[x][y] { &mut lambda } else { &mut mu };
        let c = common(x, y);
        match *slot {
            None => *slot = Some(c),
            Some(v) if v != c => return None,
            _ => {}
        }
    }
    Some((n, k, lambda?, mu?))
}

#[test]
fn regular_graphs_have_three_eigenvalues_exactly_when_strongly_regular() {
    assert_eq!(regular_graphs(6, 2).len(), 70);
    let mut tested = 0;
    for n in 2..=8usize {
        for k in 1..n {
            if n * k % 2 == 1 {
                continue;
            }
            for g in regular_graphs(n, k) {
                let a = adj(&g);
                if !connected(&a) {
                    continue;
                }
                let three = distinct_eigenvalue_count(&g).distinct_count == 3;
                let srg = g.strongly_regular_parameters();
                assert_eq!(srg, srg_oracle(&a), "{}", g.to_edge_list());
                assert_eq!(three, srg.is_some(), "{}", g.to_edge_list());
                tested += 1;
            }
        }
    }
    assert!(tested > 10_000, "{tested}");
}
