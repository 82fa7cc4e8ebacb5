use serde_json::{json, Value};

use super::{label_value, Verdict};
use crate::chargraph::{factorize, rho};
use crate::degrees::{character_degrees, ito_michler_check, DegreeMultiset};
use crate::error::{Error, Result};
use crate::graphkit::{iter_set, Pattern, SimpleGraph};
use crate::permgroup::PermGroup;

const ITO_MICHLER: &str = "Ito–Michler theorem";
const GROUP_AT_CUT: &str = "normal complements and the Fitting subgroup at a cut vertex";
const DEGREE_TWO: &str = "quotients with two character degrees at a degree-two cut vertex";

/// A prime missing from every degree has a normal abelian Sylow subgroup,
/// and conversely.
pub fn check_ito_michler(group: &PermGroup, degrees: &DegreeMultiset) -> Result<Verdict> {
    let entries = ito_michler_check(group, degrees)?;
    let ok = entries.iter().all(|e| e.consistent);
    Ok(Verdict::judge("ito-michler", ok, json!({ "primes": entries }), ITO_MICHLER))
}

fn prime_label(g: &SimpleGraph, v: usize) -> Result<u64> {
    let l = g.label(v);
    l.parse().map_err(|_| Error::InvalidArgument(format!("vertex label {l:?} is not a prime")))
}

fn is_paw(g: &SimpleGraph) -> bool {
    g.is_isomorphic(&SimpleGraph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (2, 3)]))
}

/// With a cut vertex `r`: a `K₄`-free graph plus a normal `r`-complement
/// forces the three-vertex path or the paw; a `K_{n−1}`-free graph with
/// `r ∉ ρ(F(G))` and `F(G)` nonabelian forces `|ρ(F(G))| ≤ n − 2`, with
/// equality only when `n ≥ 6`.
///
/// `g` must be the character graph of `group`, labelled by primes.
pub fn check_cut_vertex_group_structure(group: &PermGroup, g: &SimpleGraph) -> Result<Verdict> {
    const NAME: &str = "cut-vertex-group-structure";
    if !group.is_solvable() {
        return Ok(Verdict::inapplicable(NAME, "group is not solvable", GROUP_AT_CUT));
    }
    if g.n() == 0 || !g.is_connected() {
        return Ok(Verdict::inapplicable(NAME, "graph is not connected", GROUP_AT_CUT));
    }
    let cuts = g.articulation_points();
    if cuts == 0 {
        return Ok(Verdict::inapplicable(NAME, "graph has no cut vertex", GROUP_AT_CUT));
    }
    let n = g.n();
    let k4_free = g.contains_induced(Pattern::K4).is_none();
    let omega = g.clique_number();
    let fitting = group.fitting_subgroup()?;
    let fitting_abelian = group.is_abelian_subgroup(&fitting);
    let rho_fitting = if fitting_abelian {
        Vec::new()
    } else {
        rho(&character_degrees(&group.subgroup_as_group(&fitting)?)?)
    };

    let mut cases: Vec<Value> = Vec::new();
    let mut applied = false;
    let mut failed = false;
    for v in iter_set(cuts) {
        let r = prime_label(g, v)?;
        let complement = if group.order().is_multiple_of(r) {
            group.normal_p_complement(r)?
        } else {
            Some(group.whole())
        };
        if k4_free && complement.is_some() {
            let shape_ok = n <= 4 && (g.is_isomorphic(&SimpleGraph::path(3)) || is_paw(g));
            applied = true;
            failed |= !shape_ok;
            cases.push(json!({
                "case": "normal complement, K4-free",
                "r": label_value(g, v),
                "complement_order": complement.map(|c| c.order()),
                "n": n,
                "holds": shape_ok,
            }));
        }
        if omega < n.saturating_sub(1) && !fitting_abelian && !rho_fitting.contains(&r) {
            let size = rho_fitting.len();
            let ok = size + 2 <= n && (size + 2 != n || n >= 6);
            applied = true;
            failed |= !ok;
            cases.push(json!({
                "case": "nonabelian Fitting subgroup avoiding r",
                "r": label_value(g, v),
                "rho_fitting": rho_fitting,
                "n": n,
                "holds": ok,
            }));
        }
    }
    let witness = json!({
        "fitting_order": fitting.order(),
        "fitting_abelian": fitting_abelian,
        "cases": cases,
    });
    Ok(if !applied {
        let mut v = Verdict::inapplicable(NAME, "no hypothesis holds at any cut vertex", GROUP_AT_CUT);
        v.witness["fitting_order"] = witness["fitting_order"].clone();
        v.witness["fitting_abelian"] = witness["fitting_abelian"].clone();
        v
    } else {
        Verdict::judge(NAME, !failed, witness, GROUP_AT_CUT)
    })
}

/// When the graph is the three-vertex path, some quotient `G/K` has exactly
/// two degrees `{1, f}` and is either a p-group for the cut vertex `p`, or a
/// Frobenius group with elementary abelian kernel of exponent `p` and
/// complement of order `f`, where `p` or a divisor of `f` is the cut vertex.
///
/// `g` must be the character graph of `group`, labelled by primes.
pub fn verify_degree_two_quotient(group: &PermGroup, g: &SimpleGraph) -> Result<Verdict> {
    const NAME: &str = "degree-two-quotient";
    if !(g.n() == 3 && g.edge_count() == 2) {
        return Ok(Verdict::inapplicable(NAME, "graph is not the three-vertex path", DEGREE_TWO));
    }
    if !group.is_solvable() {
        return Ok(Verdict::inapplicable(NAME, "group is not solvable", DEGREE_TWO));
    }
    let v = g.articulation_points().trailing_zeros() as usize;
    let cut = prime_label(g, v)?;
    let rho_g: Vec<u64> = (0..g.n()).map(|u| prime_label(g, u)).collect::<Result<_>>()?;

    let mut hits = Vec::new();
    let mut matched = false;
    for k in group.normal_subgroups()? {
        let q = group.quotient(&k)?;
        let cd = character_degrees(&q)?;
        let set = cd.degree_set();
        if set.len() != 2 {
            continue;
        }
        let f = set[1];
        let fac = factorize(q.order());
        let entry = if fac.len() == 1 {
            let p = fac[0].0;
            let ok = p == cut;
            matched |= ok;
            json!({ "kernel_order": k.order(), "quotient_order": q.order(), "f": f,
                    "case": "p-group", "p": p, "matches": ok })
        } else if let Some(fr) = q.frobenius()? {
            let p = fr.kernel_elementary_abelian;
            let complement_ok = fr.complement.order() as u64 == f;
            let ok = p.is_some_and(|p| complement_ok && (p == cut || f % cut == 0));
            matched |= ok;
            json!({ "kernel_order": k.order(), "quotient_order": q.order(), "f": f,
                    "case": "frobenius", "p": p, "p_in_rho": p.is_some_and(|p| rho_g.contains(&p)),
                    "frobenius_kernel_order": fr.kernel.order(),
                    "complement_order": fr.complement.order(), "matches": ok })
        } else {
            json!({ "kernel_order": k.order(), "quotient_order": q.order(), "f": f,
                    "case": "neither", "matches": false })
        };
        hits.push(entry);
    }
    Ok(Verdict::judge(NAME, matched, json!({ "cut_vertex": cut, "quotients": hits }), DEGREE_TWO))
}
