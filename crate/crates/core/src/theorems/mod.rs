//! Structural constraints on character degree graphs as executable checks.
//!
//! Every check returns a [`Verdict`]. Failing verdicts carry a witness;
//! inapplicable ones carry the unmet precondition under `"reason"`.

mod graph_checks;
mod group_checks;
mod report;
mod structure;

use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::graphkit::{iter_set, SimpleGraph, VertexSet};

pub use graph_checks::{
    check_chvatal_erdos, check_domination, check_edge_bound, check_hamiltonicity_theorem,
    check_matching_theorem, check_moreto_tiep, check_palfy, check_regular_structure,
    check_two_component_sizes, classify_by_eigenvalues,
};
pub use group_checks::{check_cut_vertex_group_structure, check_ito_michler, verify_degree_two_quotient};
pub use report::{analyze, screen_solvable_feasibility, AnalysisInput, AnalysisReport, Solvability};
pub use structure::{
    bissler_partition, check_diameter_three_constraints, classify_cut_vertex_structure,
    BisslerPartition, CutVertexStructure,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Inapplicable,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Inapplicable => "N/A",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub name: String,
    pub status: Status,
    pub witness: Value,
    pub anchor: String,
}

impl Verdict {
    fn new(name: &str, status: Status, witness: Value, anchor: &str) -> Self {
        Verdict { name: name.into(), status, witness, anchor: anchor.into() }
    }

    fn pass(name: &str, witness: Value, anchor: &str) -> Self {
        Verdict::new(name, Status::Pass, witness, anchor)
    }

    fn fail(name: &str, witness: Value, anchor: &str) -> Self {
        Verdict::new(name, Status::Fail, witness, anchor)
    }

    fn inapplicable(name: &str, reason: impl Into<String>, anchor: &str) -> Self {
        Verdict::new(name, Status::Inapplicable, json!({ "reason": reason.into() }), anchor)
    }

    fn judge(name: &str, ok: bool, witness: Value, anchor: &str) -> Self {
        Verdict::new(name, if ok { Status::Pass } else { Status::Fail }, witness, anchor)
    }

    pub fn is_fail(&self) -> bool {
        self.status == Status::Fail
    }

    /// Appends a qualifier such as `[if solvable]` to the check name.
    pub fn qualified(mut self, qualifier: &str) -> Self {
        self.name = format!("{} [{qualifier}]", self.name);
        self
    }
}

/// A vertex label as JSON: numbers stay numeric.
pub(crate) fn label_value(g: &SimpleGraph, v: usize) -> Value {
    let l = g.label(v);
    match l.parse::<u64>() {
        Ok(x) => json!(x),
        Err(_) => json!(l),
    }
}

pub(crate) fn set_value(g: &SimpleGraph, set: VertexSet) -> Value {
    Value::Array(iter_set(set).map(|v| label_value(g, v)).collect())
}

pub(crate) fn seq_value(g: &SimpleGraph, seq: &[usize]) -> Value {
    Value::Array(seq.iter().map(|&v| label_value(g, v)).collect())
}
