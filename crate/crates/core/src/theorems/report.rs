use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use super::graph_checks::*;
use super::group_checks::*;
use super::structure::{check_diameter_three_constraints, classify_cut_vertex_structure};
use super::{set_value, Status, Verdict};
use crate::chargraph::{build_graph, CharacterGraph};
use crate::degrees::{character_degrees, DegreeMultiset};
use crate::error::{Error, Result};
use crate::graphkit::SimpleGraph;
use crate::permgroup::PermGroup;
use crate::spectrum::{distinct_eigenvalue_count, SpectrumSummary};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Solvability {
    Solvable,
    Nonsolvable,
    /// Run both the solvable and the general variants.
    Unknown,
    /// Decide from the group; only valid for group input.
    Auto,
}

pub enum AnalysisInput {
    Group { group: PermGroup, description: String },
    Degrees(DegreeMultiset),
    Graph(SimpleGraph),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub input: Value,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degrees: Option<DegreeMultiset>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub graph: Option<Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub spectrum: Option<SpectrumSummary>,
    pub checks: Vec<Verdict>,
    pub outcome: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub first_failure: Option<String>,
    #[serde(skip)]
    dot: String,
}

impl AnalysisReport {
    fn new(
        input: Value,
        degrees: Option<DegreeMultiset>,
        g: &SimpleGraph,
        cg: Option<&CharacterGraph>,
        checks: Vec<Verdict>,
    ) -> Self {
        let first_failure = checks.iter().find(|c| c.is_fail()).map(|c| c.name.clone());
        AnalysisReport {
            input,
            degrees,
            graph: Some(cg.map_or_else(|| g.to_json(), CharacterGraph::to_json)),
            spectrum: Some(distinct_eigenvalue_count(g)),
            outcome: if first_failure.is_some() { Status::Fail } else { Status::Pass },
            first_failure,
            checks,
            dot: cg.map_or_else(|| plain_dot(g), CharacterGraph::to_dot),
        }
    }

    pub fn failed(&self) -> bool {
        self.outcome == Status::Fail
    }

    pub fn check(&self, name: &str) -> Option<&Verdict> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "input: {}", self.input);
        if let Some(d) = &self.degrees {
            let _ = writeln!(out, "degrees: {d}");
        }
        if let Some(g) = &self.graph {
            let _ = writeln!(out, "graph: {g}");
        }
        if let Some(s) = &self.spectrum {
            let _ = writeln!(
                out,
                "spectrum: {} distinct, integer part {:?}, irrational multiplicity {}",
                s.distinct_count, s.integer_eigenvalues, s.irrational_multiplicity
            );
        }
        for c in &self.checks {
            let _ = writeln!(out, "{:<5} {:<40} {}  ({})", c.status.to_string(), c.name, c.witness, c.anchor);
        }
        match &self.first_failure {
            Some(name) => {
                let _ = writeln!(out, "outcome: FAIL at {name}");
            }
            None => {
                let _ = writeln!(out, "outcome: PASS");
            }
        }
        out
    }

    /// Graphviz rendering of the analysed graph.
    pub fn to_dot(&self) -> String {
        self.dot.clone()
    }
}

fn plain_dot(g: &SimpleGraph) -> String {
    let cut = g.articulation_points();
    let mut out = String::from("graph delta {\n  node [shape=circle];\n");
    for v in 0..g.n() {
        let l = g.label(v);
        if cut >> v & 1 == 1 {
            let _ = writeln!(out, "  \"{l}\" [shape=doublecircle, cut_vertex=true];");
        } else {
            let _ = writeln!(out, "  \"{l}\";");
        }
    }
    for (a, b) in g.edges() {
        let _ = writeln!(out, "  \"{}\" -- \"{}\";", g.label(a), g.label(b));
    }
    out.push_str("}\n");
    out
}

fn component_count(g: &SimpleGraph) -> Verdict {
    let comps = g.components();
    let sizes: Vec<u32> = comps.iter().map(|c| c.count_ones()).collect();
    Verdict::judge(
        "component-count",
        comps.len() <= 2,
        json!({ "components": comps.len(), "sizes": sizes }),
        "Pálfy: at most two components",
    )
}

fn diameter_at_most_three(g: &SimpleGraph) -> Verdict {
    const ANCHOR: &str = "diameter of a connected solvable character graph";
    match g.diameter() {
        Some(d) if g.n() > 0 => Verdict::judge("diameter-at-most-three", d <= 3, json!({ "diameter": d }), ANCHOR),
        _ => Verdict::inapplicable("diameter-at-most-three", "graph is not connected", ANCHOR),
    }
}

fn order_five_diameter(g: &SimpleGraph) -> Verdict {
    const ANCHOR: &str = "diameter of five-vertex solvable character graphs";
    match g.diameter() {
        Some(d) if g.n() == 5 => Verdict::judge("order-five-diameter", d <= 2, json!({ "diameter": d }), ANCHOR),
        _ => Verdict::inapplicable("order-five-diameter", "needs a connected graph on five vertices", ANCHOR),
    }
}

fn not_four_vertex_path(g: &SimpleGraph) -> Verdict {
    let p4 = g.is_isomorphic(&SimpleGraph::path(4));
    Verdict::judge(
        "not-four-vertex-path",
        !p4,
        json!({ "isomorphic_to_p4": p4 }),
        "the four-vertex path is not a solvable character graph",
    )
}

fn single_cut_vertex(g: &SimpleGraph) -> Verdict {
    const ANCHOR: &str = "Lewis–Meng: at most one cut vertex";
    if g.n() == 0 || !g.is_connected() {
        return Verdict::inapplicable("single-cut-vertex", "graph is not connected", ANCHOR);
    }
    let cuts = g.articulation_points();
    Verdict::judge("single-cut-vertex", cuts.count_ones() <= 1, json!({ "cut_vertices": set_value(g, cuts) }), ANCHOR)
}

fn cut_vertex_structure(g: &SimpleGraph) -> Verdict {
    const ANCHOR: &str = "cut vertices of solvable character graphs";
    match classify_cut_vertex_structure(g) {
        Ok(s) => Verdict::judge("cut-vertex-structure", !s.is_violation(), s.to_json(g), ANCHOR),
        Err(_) => Verdict::inapplicable("cut-vertex-structure", "graph is not connected", ANCHOR),
    }
}

/// The screener's checks, in reporting order.
fn solvable_screen(g: &SimpleGraph) -> Result<Vec<Verdict>> {
    Ok(vec![
        check_palfy(g),
        component_count(g),
        check_two_component_sizes(g),
        check_edge_bound(g, true),
        check_domination(g, true),
        diameter_at_most_three(g),
        order_five_diameter(g),
        not_four_vertex_path(g),
        single_cut_vertex(g),
        cut_vertex_structure(g),
        check_diameter_three_constraints(g),
        check_regular_structure(g, true),
        check_chvatal_erdos(g)?,
    ])
}

/// Necessary conditions for `g` to be the character graph of a solvable
/// group. The outcome is the first failing check, if any.
pub fn screen_solvable_feasibility(g: &SimpleGraph) -> Result<AnalysisReport> {
    let input = json!({ "kind": "graph", "graph": g.to_json(), "solvability": "solvable" });
    Ok(AnalysisReport::new(input, None, g, None, solvable_screen(g)?))
}

fn general_checks(g: &SimpleGraph) -> Vec<Verdict> {
    vec![check_moreto_tiep(g), check_edge_bound(g, false), check_domination(g, false)]
}

fn solvable_checks(g: &SimpleGraph, fitting_abelian: Option<bool>) -> Result<Vec<Verdict>> {
    let mut checks = solvable_screen(g)?;
    checks.push(check_matching_theorem(g, true));
    checks.push(classify_by_eigenvalues(g, true));
    checks.push(check_hamiltonicity_theorem(g, fitting_abelian, true));
    Ok(checks)
}

/// Runs the whole pipeline: group → degrees → graph → checks. Degree and
/// graph inputs enter at the later stages.
pub fn analyze(input: &AnalysisInput, solvability: Solvability) -> Result<AnalysisReport> {
    let (solvability, input_json, degrees, group) = match input {
        AnalysisInput::Group { group, description } => {
            let solvable = group.is_solvable();
            let resolved = match solvability {
                Solvability::Auto => if solvable { Solvability::Solvable } else { Solvability::Nonsolvable },
                other => other,
            };
            let input_json = json!({
                "kind": "group",
                "generators": description,
                "degree": group.degree(),
                "order": group.order(),
                "solvable": solvable,
                "solvability": resolved,
            });
            (resolved, input_json, Some(character_degrees(group)?), Some(group))
        }
        AnalysisInput::Degrees(d) => {
            if solvability == Solvability::Auto {
                return Err(Error::InvalidArgument("solvability `auto` needs a group input".into()));
            }
            let input_json = json!({ "kind": "degrees", "degrees": d.expanded(), "solvability": solvability });
            (solvability, input_json, Some(d.clone()), None)
        }
        AnalysisInput::Graph(g) => {
            if solvability == Solvability::Auto {
                return Err(Error::InvalidArgument("solvability `auto` needs a group input".into()));
            }
            let input_json = json!({ "kind": "graph", "graph": g.to_json(), "solvability": solvability });
            (solvability, input_json, None, None)
        }
    };

    let cg = match (&degrees, input) {
        (Some(d), _) => Some(build_graph(d)?),
        (None, AnalysisInput::Graph(g)) => CharacterGraph::from_raw(g).ok(),
        _ => None,
    };
    let g = match (input, &cg) {
        (AnalysisInput::Graph(g), _) => g.clone(),
        (_, Some(cg)) => cg.to_simple_graph(),
        _ => unreachable!("group and degree inputs always build a graph"),
    };

    let fitting_abelian = match group {
        Some(grp) => {
            let f = grp.fitting_subgroup()?;
            Some(grp.is_abelian_subgroup(&f))
        }
        None => None,
    };

    let mut checks = general_checks(&g);
    match solvability {
        Solvability::Solvable => checks.extend(solvable_checks(&g, fitting_abelian)?),
        Solvability::Unknown => checks.extend(
            solvable_checks(&g, fitting_abelian)?
                .into_iter()
                .map(|v| v.qualified("if solvable")),
        ),
        Solvability::Nonsolvable | Solvability::Auto => {}
    }
    if let (Some(grp), Some(d)) = (group, &degrees) {
        checks.push(check_ito_michler(grp, d)?);
        checks.push(check_cut_vertex_group_structure(grp, &g)?);
        checks.push(verify_degree_two_quotient(grp, &g)?);
    }
    Ok(AnalysisReport::new(input_json, degrees, &g, cg.as_ref(), checks))
}
