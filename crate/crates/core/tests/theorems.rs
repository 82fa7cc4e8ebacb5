mod common;

use rayon::prelude::*;

use cdgraph::catalog::{all_fixtures, FixtureKind};
use cdgraph::chargraph::build_graph;
use cdgraph::degrees::{character_degrees, DegreeMultiset};
use cdgraph::graphkit::SimpleGraph;
use cdgraph::permgroup::{PermGroup, DEFAULT_ORDER_CAP};
use cdgraph::theorems::{
    classify_by_eigenvalues, classify_cut_vertex_structure, screen_solvable_feasibility, CutVertexStructure, Status,
};

use common::*;

/// Shape invariants every non-violation result must satisfy.
fn assert_structure_invariants(g: &SimpleGraph, s: &CutVertexStructure) {
    let a = adj(g);
    let cuts = cut_vertices(&a);
    if cuts.len() >= 2 {
        assert!(s.is_violation(), "{}: {s:?}", g.to_edge_list());
    }
    match *s {
        CutVertexStructure::Structure1 { v, w, s: size } => {
            assert!(size >= 4 && g.degree(v) >= 4 && g.degree(w) == 1 && a[v][w], "{}", g.to_edge_list());
            assert_eq!(g.n(), size + 2);
        }
        CutVertexStructure::Structure2 { v, m, s: size } => {
            assert!(m >= 8 && size >= 2, "{}", g.to_edge_list());
            let rest: Vec<usize> = (0..g.n()).filter(|&x| x != v).collect();
            let side = |x: usize| bfs(&a, &(0..g.n()).map(|y| y != v).collect::<Vec<_>>(), x);
            let d = side(rest[0]);
            let (c1, c2): (Vec<usize>, Vec<usize>) = rest.iter().partition(|&&x| d[x].is_some());
            let (km, ks) = if c1.len() == m { (c1, c2) } else { (c2, c1) };
            assert_eq!((km.len(), ks.len()), (m, size));
            assert!(ks.iter().all(|&x| a[v][x]));
            let touch = km.iter().filter(|&&x| a[v][x]).count();
            assert!(1 < touch && touch < m);
        }
        _ => {}
    }
    if let Some(v) = s.cut_vertex() {
        assert!(cuts.contains(&v));
    }
}

#[test]
fn classifier_invariants_on_small_connected_graphs() {
    for n in 1..=7usize {
        let found: Vec<(u64, bool)> = (0..graph_count(n))
            .into_par_iter()
            .filter_map(|mask| {
                let g = graph_from_mask(n, mask);
                let a = adj(&g);
                if !rows_connected(&rows(&a), (1 << n) - 1) {
                    return None;
                }
                let s = classify_cut_vertex_structure(&g).unwrap();
                assert_structure_invariants(&g, &s);
                let cuts = cut_vertices(&a);
                let diameter_three = (0..n).flat_map(|x| (0..n).map(move |y| (x, y))).filter_map(|(x, y)| distance(&a, x, y)).max() == Some(3);
                if cuts.len() != 1 || !diameter_three {
                    return None;
                }
                let passes = !screen_solvable_feasibility(&g).unwrap().failed();
                passes.then(|| {
                    let ok = matches!(s, CutVertexStructure::Structure1 { .. } | CutVertexStructure::Structure2 { .. })
                        && g.degree(cuts[0]) >= 4;
                    (mask, ok)
                })
            })
            .collect();
        let bad: Vec<u64> = found.iter().filter(|f| !f.1).map(|f| f.0).collect();
        assert!(bad.is_empty(), "n = {n}: masks {bad:?}");
    }
}

/// `w − v − K_s` with `v` adjacent to the first `t` clique vertices.
fn pendant_clique(s: usize, t: usize) -> SimpleGraph {
    let mut edges = vec![(0, 1)];
    for i in 0..s {
        for j in i + 1..s {
            edges.push((2 + i, 2 + j));
        }
        if i < t {
            edges.push((1, 2 + i));
        }
    }
    SimpleGraph::from_edges(s + 2, &edges)
}

/// `K_m − v − K_s` with `v` adjacent to `tm` vertices of `K_m` and `ts` of `K_s`.
fn two_cliques(m: usize, s: usize, tm: usize, ts: usize) -> SimpleGraph {
    let v = m;
    let mut edges = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            edges.push((i, j));
        }
    }
    for i in 0..s {
        for j in i + 1..s {
            edges.push((m + 1 + i, m + 1 + j));
        }
    }
    edges.extend((0..tm).map(|i| (v, i)));
    edges.extend((0..ts).map(|i| (v, m + 1 + i)));
    SimpleGraph::from_edges(m + s + 1, &edges)
}

#[test]
fn constructed_families_follow_the_structure_theorem() {
    let mut families = Vec::new();
    for s in 1..=10 {
        for t in 1..=s {
            families.push(pendant_clique(s, t));
        }
    }
    for m in 1..=10 {
        for s in 1..=(11 - m) {
            for tm in 1..=m {
                for ts in 1..=s {
                    families.push(two_cliques(m, s, tm, ts));
                }
            }
        }
    }
    let mut passing = 0;
    for g in &families {
        assert!(g.n() <= 12);
        let s = classify_cut_vertex_structure(g).unwrap();
        assert_structure_invariants(g, &s);
        let a = adj(g);
        let cuts = cut_vertices(&a);
        if cuts.len() != 1 || g.diameter() != Some(3) {
            continue;
        }
        if !screen_solvable_feasibility(g).unwrap().failed() {
            passing += 1;
            assert!(
                matches!(s, CutVertexStructure::Structure1 { .. } | CutVertexStructure::Structure2 { .. }),
                "{}: {s:?}",
                g.to_edge_list()
            );
            assert!(g.degree(cuts[0]) >= 4);
        }
    }
    assert!(passing > 20, "{passing}");
}

fn fixture_degree_sets() -> Vec<(String, DegreeMultiset, Option<bool>)> {
    let mut out = Vec::new();
    for f in all_fixtures().unwrap() {
        match f.kind {
            FixtureKind::Group => {
                let g = PermGroup::parse(f.generators.as_deref().unwrap(), DEFAULT_ORDER_CAP).unwrap();
                out.push((f.name, character_degrees(&g).unwrap(), Some(g.is_solvable())));
            }
            FixtureKind::DegreeSet => {
                out.push((f.name, DegreeMultiset::from_list(f.degrees.as_deref().unwrap()).unwrap(), f.expected.solvable));
            }
            FixtureKind::RawGraph => {}
        }
    }
    out
}

#[test]
fn eigenvalue_classification_never_contradicts_fixture_graphs() {
    for (name, d, solvable) in fixture_degree_sets() {
        let g = build_graph(&d).unwrap().to_simple_graph();
        let v = classify_by_eigenvalues(&g, solvable == Some(true));
        assert_ne!(v.status, Status::Fail, "{name}: {}", v.witness);
    }
}

#[test]
fn solvable_fixture_groups_pass_the_screener() {
    for (name, d, solvable) in fixture_degree_sets() {
        if solvable != Some(true) {
            continue;
        }
        let g = build_graph(&d).unwrap().to_simple_graph();
        let report = screen_solvable_feasibility(&g).unwrap();
        assert!(!report.failed(), "{name}: fails at {:?}", report.first_failure);
        assert_eq!(report.checks.len(), 13);
    }
}
