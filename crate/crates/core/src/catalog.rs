//! Named fixtures: small groups, degree sets and raw graphs with their
//! expected graphs and check outcomes.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::degrees::DegreeMultiset;
use crate::error::{Error, Result};
use crate::graphkit::SimpleGraph;
use crate::permgroup::PermGroup;
use crate::theorems::{AnalysisInput, Solvability, Status};

const FIXTURES: &[(&str, &str)] = &[
    ("a4", include_str!("../data/fixtures/a4.json")),
    ("a5", include_str!("../data/fixtures/a5.json")),
    ("a5-x-e7", include_str!("../data/fixtures/a5-x-e7.json")),
    ("c7-c3", include_str!("../data/fixtures/c7-c3.json")),
    ("cocktail-10", include_str!("../data/fixtures/cocktail-10.json")),
    ("cocktail-4", include_str!("../data/fixtures/cocktail-4.json")),
    ("cocktail-6", include_str!("../data/fixtures/cocktail-6.json")),
    ("cocktail-8", include_str!("../data/fixtures/cocktail-8.json")),
    ("d8", include_str!("../data/fixtures/d8.json")),
    ("f20", include_str!("../data/fixtures/f20.json")),
    ("heisenberg-27", include_str!("../data/fixtures/heisenberg-27.json")),
    ("k2-k1", include_str!("../data/fixtures/k2-k1.json")),
    ("k2-k1-k1", include_str!("../data/fixtures/k2-k1-k1.json")),
    ("p3", include_str!("../data/fixtures/p3.json")),
    ("p4", include_str!("../data/fixtures/p4.json")),
    ("path-into-edge", include_str!("../data/fixtures/path-into-edge.json")),
    ("paw", include_str!("../data/fixtures/paw.json")),
    ("pendant-clique", include_str!("../data/fixtures/pendant-clique.json")),
    ("pendant-clique-deficient", include_str!("../data/fixtures/pendant-clique-deficient.json")),
    ("psl2-16", include_str!("../data/fixtures/psl2-16.json")),
    ("psl2-4", include_str!("../data/fixtures/psl2-4.json")),
    ("psl2-8", include_str!("../data/fixtures/psl2-8.json")),
    ("q8", include_str!("../data/fixtures/q8.json")),
    ("s3", include_str!("../data/fixtures/s3.json")),
    ("s4", include_str!("../data/fixtures/s4.json")),
    ("s4-x-f55", include_str!("../data/fixtures/s4-x-f55.json")),
    ("sl2-3", include_str!("../data/fixtures/sl2-3.json")),
    ("star", include_str!("../data/fixtures/star.json")),
    ("two-cliques", include_str!("../data/fixtures/two-cliques.json")),
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FixtureKind {
    Group,
    DegreeSet,
    RawGraph,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Expected {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<u64>,
    /// Full degree multiset for groups, the degree set otherwise.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degrees: Option<Vec<u64>>,
    /// Expected character graph as an edge list, compared up to labels.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub graph: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub solvable: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cut_vertex_structure: Option<String>,
    /// Check outcomes under [`Fixture::solvability`].
    #[serde(default)]
    pub checks: BTreeMap<String, Status>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Fixture {
    pub name: String,
    pub kind: FixtureKind,
    pub description: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generators: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degrees: Option<Vec<u64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub graph: Option<String>,
    pub expected: Expected,
}

impl Fixture {
    /// Builds the analysis input. `cap` bounds group closure.
    pub fn input(&self, cap: usize) -> Result<AnalysisInput> {
        let missing = |field: &str| Error::InvalidArgument(format!("fixture {} has no {field}", self.name));
        Ok(match self.kind {
            FixtureKind::Group => {
                let gens = self.generators.as_deref().ok_or_else(|| missing("generators"))?;
                AnalysisInput::Group { group: PermGroup::parse(gens, cap)?, description: gens.to_string() }
            }
            FixtureKind::DegreeSet => {
                let d = self.degrees.as_deref().ok_or_else(|| missing("degrees"))?;
                AnalysisInput::Degrees(DegreeMultiset::from_list(d)?)
            }
            FixtureKind::RawGraph => {
                let g = self.graph.as_deref().ok_or_else(|| missing("graph"))?;
                AnalysisInput::Graph(SimpleGraph::parse_edge_list(g)?)
            }
        })
    }

    /// Solvability under which the expected checks hold. Raw graphs are
    /// screened as if they came from a solvable group.
    pub fn solvability(&self) -> Solvability {
        match (self.kind, self.expected.solvable) {
            (FixtureKind::Group, _) => Solvability::Auto,
            (_, Some(false)) => Solvability::Nonsolvable,
            _ => Solvability::Solvable,
        }
    }

    pub fn expected_graph(&self) -> Option<Result<SimpleGraph>> {
        self.expected.graph.as_deref().map(SimpleGraph::parse_edge_list)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("fixture serializes")
    }
}

pub fn list_fixtures() -> Vec<&'static str> {
    FIXTURES.iter().map(|(n, _)| *n).collect()
}

pub fn load_fixture(name: &str) -> Result<Fixture> {
    let (_, text) = FIXTURES
        .iter()
        .find(|(n, _)| *n == name)
        .ok_or_else(|| Error::UnknownFixture(name.to_string()))?;
    serde_json::from_str(text).map_err(|e| Error::Parse(format!("fixture {name}: {e}")))
}

pub fn all_fixtures() -> Result<Vec<Fixture>> {
    list_fixtures().into_iter().map(load_fixture).collect()
}
