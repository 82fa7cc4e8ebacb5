use num_integer::Integer;
use serde_json::json;

use super::{seq_value, set_value, Status, Verdict};
use crate::error::{Error, Result};
use crate::graphkit::{Pattern, SimpleGraph};
use crate::spectrum::distinct_eigenvalue_count;

const PALFY: &str = "Pálfy three-prime condition";
const MORETO_TIEP: &str = "Moretó–Tiep four-prime condition";
const EDGE_BOUND: &str = "Turán bound on the complement";
const DOMINATION: &str = "domination bound from the prime conditions";
const CHVATAL_ERDOS: &str = "Chvátal–Erdős Hamiltonian path condition";
const MATCHING: &str = "matchings in claw-free character graphs";
const EIGENVALUES: &str = "character graphs with few distinct eigenvalues";
const COMPONENTS: &str = "Pálfy two-component inequality";
const HAMILTONICITY: &str = "Hamiltonian character graphs";
const REGULAR: &str = "regular character graphs";

/// Every three vertices span an edge.
pub fn check_palfy(g: &SimpleGraph) -> Verdict {
    match g.complement().contains_induced(Pattern::Triangle) {
        None => Verdict::pass("palfy", json!({ "n": g.n() }), PALFY),
        Some(w) => Verdict::fail("palfy", json!({ "independent_triple": seq_value(g, &w) }), PALFY),
    }
}

/// Every four vertices span an edge.
pub fn check_moreto_tiep(g: &SimpleGraph) -> Verdict {
    match g.complement().contains_induced(Pattern::K4) {
        None => Verdict::pass("moreto-tiep", json!({ "n": g.n() }), MORETO_TIEP),
        Some(w) => Verdict::fail("moreto-tiep", json!({ "independent_quadruple": seq_value(g, &w) }), MORETO_TIEP),
    }
}

fn fraction(num: i64, den: i64) -> String {
    let d = num.gcd(&den);
    let (num, den) = (num / d, den / d);
    if den == 1 {
        num.to_string()
    } else {
        format!("{num}/{den}")
    }
}

/// `m ≥ n/2·(n/2 − 1)` for solvable groups, `m ≥ n/2·(n/3 − 1)` otherwise.
pub fn check_edge_bound(g: &SimpleGraph, solvable: bool) -> Verdict {
    let n = g.n() as i64;
    let m = g.edge_count() as i64;
    let (num, den) = if solvable { (n * (n - 2), 4) } else { (n * (n - 3), 6) };
    let name = if solvable { "edge-bound/solvable" } else { "edge-bound/general" };
    Verdict::judge(name, den * m >= num, json!({ "n": n, "m": m, "bound": fraction(num, den) }), EDGE_BOUND)
}

/// `γ ≤ 2` for solvable groups, `γ ≤ 3` otherwise.
pub fn check_domination(g: &SimpleGraph, solvable: bool) -> Verdict {
    let set = g.minimum_dominating_set();
    let gamma = set.count_ones() as usize;
    let (limit, name) = if solvable { (2, "domination/solvable") } else { (3, "domination/general") };
    Verdict::judge(
        name,
        gamma <= limit,
        json!({ "gamma": gamma, "limit": limit, "dominating_set": set_value(g, set) }),
        DOMINATION,
    )
}

/// Reports `(α, κ)` and a Hamiltonian path. A missing path when `α ≤ κ + 1`
/// is a solver error, not a failed check.
pub fn check_chvatal_erdos(g: &SimpleGraph) -> Result<Verdict> {
    if g.n() == 0 || !g.is_connected() {
        return Ok(Verdict::inapplicable("hamiltonian-path", "graph is not connected", CHVATAL_ERDOS));
    }
    let alpha = g.independence_number();
    let kappa = g.vertex_connectivity();
    let path = g.hamiltonian_path();
    if alpha <= kappa + 1 && path.is_none() {
        return Err(Error::SolverInconsistency(format!(
            "no Hamiltonian path although alpha = {alpha} <= kappa + 1 = {}",
            kappa + 1
        )));
    }
    Ok(match path {
        Some(p) => Verdict::pass(
            "hamiltonian-path",
            json!({ "alpha": alpha, "kappa": kappa, "path": seq_value(g, &p) }),
            CHVATAL_ERDOS,
        ),
        None => Verdict::fail("hamiltonian-path", json!({ "alpha": alpha, "kappa": kappa, "path": null }), CHVATAL_ERDOS),
    })
}

/// Even order: a perfect matching. Odd order without cut vertices:
/// hypomatchable.
pub fn check_matching_theorem(g: &SimpleGraph, solvable: bool) -> Verdict {
    const NAME: &str = "matching";
    if !solvable {
        return Verdict::inapplicable(NAME, "group is not known to be solvable", MATCHING);
    }
    if g.n() == 0 || !g.is_connected() {
        return Verdict::inapplicable(NAME, "graph is not connected", MATCHING);
    }
    if g.n().is_multiple_of(2) {
        return match g.perfect_matching() {
            Some(m) => {
                let pairs: Vec<_> = m.iter().map(|&(a, b)| seq_value(g, &[a, b])).collect();
                Verdict::pass(NAME, json!({ "perfect_matching": pairs }), MATCHING)
            }
            None => Verdict::fail(
                NAME,
                json!({ "n": g.n(), "maximum_matching_size": g.maximum_matching().len() }),
                MATCHING,
            ),
        };
    }
    if g.articulation_points() != 0 {
        return Verdict::inapplicable(NAME, "odd order with a cut vertex", MATCHING);
    }
    match (0..g.n()).find(|&v| !g.remove_vertex(v).has_perfect_matching()) {
        None => Verdict::pass(NAME, json!({ "hypomatchable": true }), MATCHING),
        Some(v) => Verdict::fail(
            NAME,
            json!({ "hypomatchable": false, "deleted_vertex": super::label_value(g, v) }),
            MATCHING,
        ),
    }
}

/// Distinct-eigenvalue classification of solvable character graphs.
pub fn classify_by_eigenvalues(g: &SimpleGraph, solvable: bool) -> Verdict {
    const NAME: &str = "eigenvalue-classification";
    if !solvable {
        return Verdict::inapplicable(NAME, "group is not known to be solvable", EIGENVALUES);
    }
    let s = distinct_eigenvalue_count(g);
    let n = g.n();
    let base = json!({
        "distinct_count": s.distinct_count,
        "integer_eigenvalues": s.integer_eigenvalues,
        "irrational_multiplicity": s.irrational_multiplicity,
    });
    let with = |class: &str, extra: serde_json::Value| {
        let mut w = base.clone();
        w["class"] = json!(class);
        if let (Some(obj), Some(more)) = (w.as_object_mut(), extra.as_object()) {
            obj.extend(more.clone());
        }
        w
    };
    match s.distinct_count {
        0 => Verdict::inapplicable(NAME, "empty graph", EIGENVALUES),
        1 => Verdict::judge(
            NAME,
            n <= 2 && g.edge_count() == 0,
            with("one distinct eigenvalue", json!({ "expected": "K1 or K1 ∪ K1" })),
            EIGENVALUES,
        ),
        2 => Verdict::judge(
            NAME,
            n >= 2 && g.is_complete(),
            with("two distinct eigenvalues", json!({ "expected": "complete graph" })),
            EIGENVALUES,
        ),
        3 if g.regularity().is_some() => {
            let srg = g.strongly_regular_parameters();
            let expected = (n, n.wrapping_sub(2), n.wrapping_sub(4), n.wrapping_sub(2));
            Verdict::judge(
                NAME,
                n >= 4 && srg == Some(expected),
                with(
                    "regular, three distinct eigenvalues",
                    json!({ "expected": "complete graph minus a perfect matching", "strongly_regular": srg }),
                ),
                EIGENVALUES,
            )
        }
        _ => {
            let mut v = Verdict::inapplicable(NAME, "no classification for this spectrum", EIGENVALUES);
            v.witness = with("other", json!({ "reason": "no classification for this spectrum" }));
            v
        }
    }
}

/// Two components must be complete with `n₂ ≥ 2^{n₁} − 1`.
pub fn check_two_component_sizes(g: &SimpleGraph) -> Verdict {
    const NAME: &str = "two-component-sizes";
    let comps = g.components();
    if comps.len() != 2 {
        return Verdict::inapplicable(NAME, format!("graph has {} components", comps.len()), COMPONENTS);
    }
    let mut sizes = [comps[0].count_ones(), comps[1].count_ones()];
    sizes.sort_unstable();
    let complete = comps.iter().all(|&c| g.induced(c).is_complete());
    let threshold = (1u64 << sizes[0]) - 1;
    Verdict::judge(
        NAME,
        complete && u64::from(sizes[1]) >= threshold,
        json!({ "sizes": sizes, "components_complete": complete, "required_larger_size": threshold }),
        COMPONENTS,
    )
}

/// Regularity or hub-free, non-regular graphs with abelian Fitting subgroup
/// force a Hamiltonian cycle.
pub fn check_hamiltonicity_theorem(g: &SimpleGraph, fitting_abelian: Option<bool>, solvable: bool) -> Verdict {
    const NAME: &str = "hamiltonicity";
    if !solvable {
        return Verdict::inapplicable(NAME, "group is not known to be solvable", HAMILTONICITY);
    }
    let n = g.n();
    if n < 4 || !g.is_connected() {
        return Verdict::inapplicable(NAME, "needs a connected graph on at least four vertices", HAMILTONICITY);
    }
    let regular = g.regularity().is_some();
    let has_hub = (0..n).any(|v| g.degree(v) == n - 1);
    let condition = if regular && !g.is_complete() {
        "regular and not complete"
    } else if !regular && !has_hub && fitting_abelian == Some(true) {
        "non-regular, no complete vertex, abelian Fitting subgroup"
    } else {
        let reason = if !regular && !has_hub && fitting_abelian.is_none() {
            "Fitting subgroup unknown for a non-regular graph"
        } else {
            "neither hypothesis holds"
        };
        return Verdict::inapplicable(NAME, reason, HAMILTONICITY);
    };
    match g.hamiltonian_cycle() {
        Some(c) => Verdict::pass(NAME, json!({ "condition": condition, "cycle": seq_value(g, &c) }), HAMILTONICITY),
        None => Verdict::fail(NAME, json!({ "condition": condition, "cycle": null }), HAMILTONICITY),
    }
}

/// A regular solvable character graph is complete, `(n − 2)`-regular, or two
/// complete components obeying the size rule.
pub fn check_regular_structure(g: &SimpleGraph, solvable: bool) -> Verdict {
    const NAME: &str = "regular-structure";
    if !solvable {
        return Verdict::inapplicable(NAME, "group is not known to be solvable", REGULAR);
    }
    let Some(k) = g.regularity() else {
        return Verdict::inapplicable(NAME, "graph is not regular", REGULAR);
    };
    let n = g.n();
    let shape = if g.is_complete() {
        Some("complete")
    } else if n >= 2 && k == n - 2 {
        Some("(n-2)-regular")
    } else if check_two_component_sizes(g).status == Status::Pass {
        Some("two complete components")
    } else {
        None
    };
    Verdict::judge(NAME, shape.is_some(), json!({ "n": n, "degree": k, "shape": shape }), REGULAR)
}
