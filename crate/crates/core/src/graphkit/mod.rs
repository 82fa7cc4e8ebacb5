//! Small simple graphs (at most 24 vertices) with bitset adjacency, and exact
//! exponential-time algorithms that are cheap at that size.

mod connectivity;
mod hamilton;
mod invariants;
mod matching;

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};

pub use invariants::Pattern;

pub const MAX_VERTICES: usize = 24;

/// Bitset of vertices.
pub type VertexSet = u32;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    n: usize,
    rows: Vec<VertexSet>,
    labels: Option<Vec<String>>,
}

impl SimpleGraph {
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "at most {MAX_VERTICES} vertices");
        SimpleGraph {
            n,
            rows: vec![0; n],
            labels: None,
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = SimpleGraph::empty(n);
        for &(a, b) in edges {
            g.add_edge(a, b);
        }
        g
    }

    /// Builds a graph from adjacency rows, symmetrizing and dropping loops.
    pub fn from_rows(rows: &[VertexSet]) -> Self {
        let mut g = SimpleGraph::empty(rows.len());
        for (a, &row) in rows.iter().enumerate() {
            for b in iter_set(row) {
                if a != b {
                    g.add_edge(a, b);
                }
            }
        }
        g
    }

    pub fn complete(n: usize) -> Self {
        let mut g = SimpleGraph::empty(n);
        let all = full_set(n);
        for v in 0..n {
            g.rows[v] = all & !(1 << v);
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        SimpleGraph::from_edges(n, &edges)
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = SimpleGraph::path(n);
        if n >= 3 {
            g.add_edge(n - 1, 0);
        }
        g
    }

    /// `K_{1,leaves}` with the centre at vertex 0.
    pub fn star(leaves: usize) -> Self {
        let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        SimpleGraph::from_edges(leaves + 1, &edges)
    }

    /// `K_n − M`: the complete graph minus the matching `{2i, 2i+1}`.
    pub fn cocktail_party(n: usize) -> Self {
        assert!(n.is_multiple_of(2), "cocktail party graph needs an even order");
        let mut g = SimpleGraph::complete(n);
        for i in (0..n).step_by(2) {
            g.remove_edge(i, i + 1);
        }
        g
    }

    /// Disjoint union, `other`'s vertices numbered after `self`'s.
    pub fn disjoint_union(&self, other: &SimpleGraph) -> SimpleGraph {
        let n = self.n + other.n;
        assert!(n <= MAX_VERTICES);
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().map(|&r| r << self.n));
        let labels = match (&self.labels, &other.labels) {
            (Some(a), Some(b)) => Some(a.iter().chain(b).cloned().collect()),
            _ => None,
        };
        SimpleGraph { n, rows, labels }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.n);
        self.labels = Some(labels);
        self
    }

    pub fn add_edge(&mut self, a: usize, b: usize) {
        assert!(a != b && a < self.n && b < self.n, "invalid edge {a}-{b}");
        self.rows[a] |= 1 << b;
        self.rows[b] |= 1 << a;
    }

    pub fn remove_edge(&mut self, a: usize, b: usize) {
        self.rows[a] &= !(1 << b);
        self.rows[b] &= !(1 << a);
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[VertexSet] {
        &self.rows
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.rows[v]
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.rows[a] >> b & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn all(&self) -> VertexSet {
        full_set(self.n)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        }
    }

    pub fn labels_of(&self, set: VertexSet) -> Vec<String> {
        iter_set(set).map(|v| self.label(v)).collect()
    }

    pub fn vertex_by_label(&self, label: &str) -> Option<usize> {
        (0..self.n).find(|&v| self.label(v) == label)
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|a| iter_set(self.rows[a]).filter(move |&b| b > a).map(move |b| (a, b)))
            .collect()
    }

    pub fn complement(&self) -> SimpleGraph {
        let all = self.all();
        SimpleGraph {
            n: self.n,
            rows: (0..self.n).map(|v| all & !self.rows[v] & !(1 << v)).collect(),
            labels: self.labels.clone(),
        }
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * self.n.saturating_sub(1) / 2
    }

    /// Induced subgraph on `keep`, vertices renumbered in increasing order.
    pub fn induced(&self, keep: VertexSet) -> SimpleGraph {
        let verts: Vec<usize> = iter_set(keep & self.all()).collect();
        let mut pos = vec![usize::MAX; self.n];
        for (i, &v) in verts.iter().enumerate() {
            pos[v] = i;
        }
        let rows = verts
            .iter()
            .map(|&v| iter_set(self.rows[v] & keep).fold(0, |r, u| r | 1 << pos[u]))
            .collect();
        SimpleGraph {
            n: verts.len(),
            rows,
            labels: self
                .labels
                .as_ref()
                .map(|l| verts.iter().map(|&v| l[v].clone()).collect()),
        }
    }

    pub fn remove_vertex(&self, v: usize) -> SimpleGraph {
        self.induced(self.all() & !(1 << v))
    }

    /// Parses the edge-list format `"3-5;2;17"`: `;`-separated tokens that are
    /// either `a-b` edges or bare labels for isolated vertices. Numeric labels
    /// are ordered numerically, other labels by first appearance.
    pub fn parse_edge_list(text: &str) -> Result<SimpleGraph> {
        let mut order: Vec<String> = Vec::new();
        let mut edges: Vec<(String, String)> = Vec::new();
        let add = |label: &str, order: &mut Vec<String>| -> Result<String> {
            let label = label.trim();
            if label.is_empty() || !label.chars().all(|c| c.is_alphanumeric() || c == '_') {
                return Err(Error::Parse(format!("bad vertex label `{label}`")));
            }
            if !order.iter().any(|l| l == label) {
                order.push(label.to_string());
            }
            Ok(label.to_string())
        };
        for token in text.split(';').map(str::trim).filter(|t| !t.is_empty()) {
            match token.split_once('-') {
                Some((a, b)) => {
                    let a = add(a, &mut order)?;
                    let b = add(b, &mut order)?;
                    if a == b {
                        return Err(Error::Parse(format!("self-loop at `{a}`")));
                    }
                    edges.push((a, b));
                }
                None => {
                    add(token, &mut order)?;
                }
            }
        }
        if order.iter().all(|l| l.parse::<u64>().is_ok()) {
            order.sort_by_key(|l| l.parse::<u64>().expect("numeric"));
        }
        Self::assemble(order, edges)
    }

    /// Parses `{"vertices": [...], "edges": [[a, b], ...]}`.
    pub fn parse_json(text: &str) -> Result<SimpleGraph> {
        let raw: GraphJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let name = |v: &Value| -> Result<String> {
            match v {
                Value::String(s) => Ok(s.clone()),
                Value::Number(n) => Ok(n.to_string()),
                other => Err(Error::Parse(format!("bad vertex `{other}`"))),
            }
        };
        let order: Vec<String> = raw.vertices.iter().map(name).collect::<Result<_>>()?;
        let edges = raw
            .edges
            .iter()
            .map(|[a, b]| Ok((name(a)?, name(b)?)))
            .collect::<Result<Vec<_>>>()?;
        for (a, b) in &edges {
            for x in [a, b] {
                if !order.contains(x) {
                    return Err(Error::Parse(format!("edge endpoint `{x}` is not a declared vertex")));
                }
            }
            if a == b {
                return Err(Error::Parse(format!("self-loop at `{a}`")));
            }
        }
        Self::assemble(order, edges)
    }

    fn assemble(order: Vec<String>, edges: Vec<(String, String)>) -> Result<SimpleGraph> {
        if order.len() > MAX_VERTICES {
            return Err(Error::GraphTooLarge {
                n: order.len(),
                cap: MAX_VERTICES,
            });
        }
        let mut unique = order.clone();
        unique.sort();
        unique.dedup();
        if unique.len() != order.len() {
            return Err(Error::Parse("duplicate vertex label".into()));
        }
        let pos: HashMap<&str, usize> = order.iter().enumerate().map(|(i, l)| (l.as_str(), i)).collect();
        let mut g = SimpleGraph::empty(order.len());
        for (a, b) in &edges {
            g.add_edge(pos[a.as_str()], pos[b.as_str()]);
        }
        Ok(g.with_labels(order))
    }

    /// Inverse of [`SimpleGraph::parse_edge_list`].
    pub fn to_edge_list(&self) -> String {
        let mut covered: VertexSet = 0;
        let mut tokens: Vec<String> = Vec::new();
        for (a, b) in self.edges() {
            covered |= 1 << a | 1 << b;
            tokens.push(format!("{}-{}", self.label(a), self.label(b)));
        }
        tokens.extend(iter_set(self.all() & !covered).map(|v| self.label(v)));
        tokens.join(";")
    }

    pub fn to_json(&self) -> Value {
        let as_value = |v: usize| -> Value {
            let l = self.label(v);
            match l.parse::<u64>() {
                Ok(x) => Value::from(x),
                Err(_) => Value::from(l),
            }
        };
        serde_json::json!({
            "vertices": (0..self.n).map(as_value).collect::<Vec<_>>(),
            "edges": self.edges().into_iter().map(|(a, b)| vec![as_value(a), as_value(b)]).collect::<Vec<_>>(),
        })
    }
}

impl fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SimpleGraph(n={}; {})", self.n, self.to_edge_list())
    }
}

#[derive(Deserialize, Serialize)]
struct GraphJson {
    vertices: Vec<Value>,
    #[serde(default)]
    edges: Vec<[Value; 2]>,
}

pub fn full_set(n: usize) -> VertexSet {
    if n >= 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

/// Members of a vertex set in increasing order.
pub fn iter_set(mut set: VertexSet) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if set == 0 {
            None
        } else {
            let v = set.trailing_zeros() as usize;
            set &= set - 1;
            Some(v)
        }
    })
}

/// All `k`-element subsets of `{0..n}` as bitsets, in increasing numeric
/// order (Gosper's hack).
pub fn subsets_of_size(n: usize, k: usize) -> impl Iterator<Item = VertexSet> {
    let limit: u64 = 1 << n;
    let mut next: Option<u64> = if k <= n { Some((1u64 << k) - 1) } else { None };
    std::iter::from_fn(move || {
        let cur = next?;
        if cur == 0 {
            next = None;
            return Some(0);
        }
        if cur >= limit {
            next = None;
            return None;
        }
        let c = cur & cur.wrapping_neg();
        let r = cur + c;
        next = Some((((r ^ cur) >> 2) / c) | r);
        Some(cur as VertexSet)
    })
}

/// All `k`-element vertex tuples in lexicographic order.
pub fn combinations(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut current: Option<Vec<usize>> = if k <= n { Some((0..k).collect()) } else { None };
    std::iter::from_fn(move || {
        let out = current.clone()?;
        let c = current.as_mut().expect("checked");
        let mut i = k;
        loop {
            if i == 0 {
                current = None;
                break;
            }
            i -= 1;
            if c[i] < n - k + i {
                c[i] += 1;
                for j in i + 1..k {
                    c[j] = c[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    })
}
