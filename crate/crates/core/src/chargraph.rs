//! The prime graph Δ on the degrees of a multiset.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::degrees::{DegreeMultiset, DegreeSource};
use crate::error::{Error, Result};
use crate::graphkit::{iter_set, SimpleGraph, MAX_VERTICES};

/// Prime factorization by trial division, as `(prime, exponent)` pairs.
pub fn factorize(mut d: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p.checked_mul(p).is_some_and(|sq| sq <= d) {
        if d.is_multiple_of(p) {
            let mut e = 0;
            while d.is_multiple_of(p) {
                d /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if d > 1 {
        out.push((d, 1));
    }
    out
}

/// Primes dividing some degree.
pub fn rho(d: &DegreeMultiset) -> Vec<u64> {
    let mut primes: Vec<u64> = d
        .degree_set()
        .into_iter()
        .flat_map(|x| factorize(x).into_iter().map(|(p, _)| p))
        .collect();
    primes.sort_unstable();
    primes.dedup();
    primes
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GraphSource {
    Group,
    DegreeList,
    RawGraph,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessedEdge {
    pub p: u64,
    pub q: u64,
    /// Smallest degree divisible by `p·q`; absent for raw graphs.
    pub witness: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterGraph {
    pub primes: Vec<u64>,
    pub edges: Vec<WitnessedEdge>,
    pub source: GraphSource,
}

/// Δ for a degree multiset: `p ~ q` iff some degree is divisible by `pq`.
pub fn build_graph(d: &DegreeMultiset) -> Result<CharacterGraph> {
    let primes = rho(d);
    if primes.len() > MAX_VERTICES {
        return Err(Error::GraphTooLarge { n: primes.len(), cap: MAX_VERTICES });
    }
    let set = d.degree_set();
    let mut edges = Vec::new();
    for (i, &p) in primes.iter().enumerate() {
        for &q in &primes[i + 1..] {
            if let Some(&w) = set.iter().find(|&&x| x % p == 0 && x % q == 0) {
                edges.push(WitnessedEdge { p, q, witness: Some(w) });
            }
        }
    }
    let source = match d.source() {
        DegreeSource::Group => GraphSource::Group,
        DegreeSource::External => GraphSource::DegreeList,
    };
    Ok(CharacterGraph { primes, edges, source })
}

impl CharacterGraph {
    /// Wraps a raw graph whose labels are primes (or arbitrary integers).
    pub fn from_raw(g: &SimpleGraph) -> Result<CharacterGraph> {
        let primes: Vec<u64> = (0..g.n())
            .map(|v| {
                let l = g.label(v);
                l.parse().map_err(|_| Error::Parse(format!("vertex label {l:?} is not a positive integer")))
            })
            .collect::<Result<_>>()?;
        let mut order: Vec<usize> = (0..g.n()).collect();
        order.sort_by_key(|&v| primes[v]);
        let mut edges: Vec<WitnessedEdge> = g
            .edges()
            .into_iter()
            .map(|(a, b)| {
                let (p, q) = (primes[a].min(primes[b]), primes[a].max(primes[b]));
                WitnessedEdge { p, q, witness: None }
            })
            .collect();
        edges.sort_by_key(|e| (e.p, e.q));
        Ok(CharacterGraph {
            primes: order.iter().map(|&v| primes[v]).collect(),
            edges,
            source: GraphSource::RawGraph,
        })
    }

    fn index(&self, p: u64) -> usize {
        self.primes.binary_search(&p).expect("edge endpoint is a vertex")
    }

    /// The underlying graph with prime labels, vertices in increasing order.
    pub fn to_simple_graph(&self) -> SimpleGraph {
        let mut g = SimpleGraph::empty(self.primes.len());
        for e in &self.edges {
            g.add_edge(self.index(e.p), self.index(e.q));
        }
        g.with_labels(self.primes.iter().map(u64::to_string).collect())
    }

    pub fn witness(&self, p: u64, q: u64) -> Option<u64> {
        let (p, q) = (p.min(q), p.max(q));
        self.edges.iter().find(|e| e.p == p && e.q == q).and_then(|e| e.witness)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("plain data serializes")
    }

    /// Graphviz rendering; cut vertices are drawn as double circles.
    pub fn to_dot(&self) -> String {
        let g = self.to_simple_graph();
        let cut = g.articulation_points();
        let mut out = String::from("graph delta {\n  node [shape=circle];\n");
        for (v, p) in self.primes.iter().enumerate() {
            if cut >> v & 1 == 1 {
                let _ = writeln!(out, "  \"{p}\" [shape=doublecircle, cut_vertex=true];");
            } else {
                let _ = writeln!(out, "  \"{p}\";");
            }
        }
        for e in &self.edges {
            match e.witness {
                Some(w) => {
                    let _ = writeln!(out, "  \"{}\" -- \"{}\" [label=\"{w}\"];", e.p, e.q);
                }
                None => {
                    let _ = writeln!(out, "  \"{}\" -- \"{}\";", e.p, e.q);
                }
            }
        }
        out.push_str("}\n");
        out
    }

    /// Isolated primes and edge pairs, e.g. `3-5;2;17`.
    pub fn describe(&self) -> String {
        let g = self.to_simple_graph();
        let isolated = (0..g.n()).filter(|&v| g.degree(v) == 0).map(|v| self.primes[v].to_string());
        let edges = self.edges.iter().map(|e| format!("{}-{}", e.p, e.q));
        let parts: Vec<String> = edges.chain(isolated).collect();
        if parts.is_empty() {
            "(empty)".into()
        } else {
            parts.join(";")
        }
    }
}

/// Cut vertices as primes.
pub fn cut_primes(cg: &CharacterGraph) -> Vec<u64> {
    iter_set(cg.to_simple_graph().articulation_points()).map(|v| cg.primes[v]).collect()
}
