use serde::Serialize;
use serde_json::{json, Value};

use super::{label_value, set_value, Verdict};
use crate::error::{Error, Result};
use crate::graphkit::{iter_set, SimpleGraph, VertexSet};

const BISSLER: &str = "Bissler distance-layer bounds";

/// Distance layers around two vertices at distance three.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BisslerPartition {
    pub p1: usize,
    pub p4: usize,
    pub rho1: VertexSet,
    pub rho2: VertexSet,
    pub rho3: VertexSet,
    pub rho4: VertexSet,
    /// Endpoints were swapped to get `|ρ₁ ∪ ρ₂| ≤ |ρ₃ ∪ ρ₄|`.
    pub relabeled: bool,
}

impl BisslerPartition {
    pub fn near(&self) -> usize {
        (self.rho1 | self.rho2).count_ones() as usize
    }

    pub fn far(&self) -> usize {
        (self.rho3 | self.rho4).count_ones() as usize
    }

    pub fn to_json(&self, g: &SimpleGraph) -> Value {
        json!({
            "p1": label_value(g, self.p1),
            "p4": label_value(g, self.p4),
            "rho1": set_value(g, self.rho1),
            "rho2": set_value(g, self.rho2),
            "rho3": set_value(g, self.rho3),
            "rho4": set_value(g, self.rho4),
            "relabeled": self.relabeled,
        })
    }
}

fn layers(g: &SimpleGraph, p1: usize, p4: usize) -> Result<BisslerPartition> {
    let dist = g.distances_from(p1);
    let mut layer = [0 as VertexSet; 4];
    for (v, d) in dist.iter().enumerate() {
        match d {
            Some(d) if *d <= 3 => layer[*d] |= 1 << v,
            Some(_) => return Err(Error::BeyondDistanceThree(v)),
            None => return Err(Error::NotConnected),
        }
    }
    let rho2 = iter_set(layer[1])
        .filter(|&q| g.neighbors(q) & layer[2] != 0)
        .fold(0, |s, q| s | 1 << q);
    Ok(BisslerPartition {
        p1,
        p4,
        rho1: layer[0] | (layer[1] & !rho2),
        rho2,
        rho3: layer[2],
        rho4: layer[3],
        relabeled: false,
    })
}

/// The partition for `p1, p4`, swapping the endpoints when that is needed
/// for `|ρ₁ ∪ ρ₂| ≤ |ρ₃ ∪ ρ₄|`. Every vertex must lie within distance three
/// of both endpoints.
pub fn bissler_partition(g: &SimpleGraph, p1: usize, p4: usize) -> Result<BisslerPartition> {
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    if g.distances_from(p1)[p4] != Some(3) {
        return Err(Error::NotDistanceThree(p1, p4));
    }
    let part = layers(g, p1, p4)?;
    let swapped = layers(g, p4, p1)?;
    if part.near() <= part.far() {
        return Ok(part);
    }
    Ok(BisslerPartition { relabeled: true, ..swapped })
}

/// Every distance-three pair must give `|ρ₃| ≥ 3`, and `|ρ₃ ∪ ρ₄| ≥ 8`
/// whenever `|ρ₁ ∪ ρ₂| ≥ 3`.
pub fn check_diameter_three_constraints(g: &SimpleGraph) -> Verdict {
    const NAME: &str = "diameter-three-partition";
    if g.n() == 0 || g.diameter() != Some(3) {
        return Verdict::inapplicable(NAME, "diameter is not three", BISSLER);
    }
    let dist = g.distances();
    let mut checked = 0;
    for a in 0..g.n() {
        for b in a + 1..g.n() {
            if dist[a][b] != Some(3) {
                continue;
            }
            let part = bissler_partition(g, a, b).expect("diameter three keeps every layer defined");
            checked += 1;
            let rule = if part.rho3.count_ones() < 3 {
                Some("|rho3| >= 3")
            } else if part.near() >= 3 && part.far() < 8 {
                Some("|rho3 ∪ rho4| >= 8 when |rho1 ∪ rho2| >= 3")
            } else {
                None
            };
            if let Some(rule) = rule {
                return Verdict::fail(NAME, json!({ "violated": rule, "partition": part.to_json(g) }), BISSLER);
            }
        }
    }
    Verdict::pass(NAME, json!({ "pairs_checked": checked, "quantifier": "every distance-three pair" }), BISSLER)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CutVertexStructure {
    NoCutVertex,
    /// The three-vertex path, cut vertex in the middle.
    PathLengthTwo { v: usize },
    Diam2CutVertex { v: usize },
    /// `w − v − K_s`.
    Structure1 { v: usize, w: usize, s: usize },
    /// `K_m − v − K_s` with `v` complete to `K_s`.
    Structure2 { v: usize, m: usize, s: usize },
    Violation { v: Option<usize>, reason: String },
}

impl CutVertexStructure {
    pub fn kind(&self) -> &'static str {
        match self {
            CutVertexStructure::NoCutVertex => "no-cut-vertex",
            CutVertexStructure::PathLengthTwo { .. } => "path-length-two",
            CutVertexStructure::Diam2CutVertex { .. } => "diameter-two-cut-vertex",
            CutVertexStructure::Structure1 { .. } => "pendant-vertex-clique",
            CutVertexStructure::Structure2 { .. } => "two-cliques",
            CutVertexStructure::Violation { .. } => "violation",
        }
    }

    pub fn cut_vertex(&self) -> Option<usize> {
        match *self {
            CutVertexStructure::NoCutVertex => None,
            CutVertexStructure::PathLengthTwo { v }
            | CutVertexStructure::Diam2CutVertex { v }
            | CutVertexStructure::Structure1 { v, .. }
            | CutVertexStructure::Structure2 { v, .. } => Some(v),
            CutVertexStructure::Violation { v, .. } => v,
        }
    }

    pub fn is_violation(&self) -> bool {
        matches!(self, CutVertexStructure::Violation { .. })
    }

    pub fn to_json(&self, g: &SimpleGraph) -> Value {
        let mut w = json!({ "kind": self.kind() });
        if let Some(v) = self.cut_vertex() {
            w["v"] = label_value(g, v);
        }
        match self {
            CutVertexStructure::Structure1 { w: pendant, s, .. } => {
                w["w"] = label_value(g, *pendant);
                w["s"] = json!(s);
            }
            CutVertexStructure::Structure2 { m, s, .. } => {
                w["m"] = json!(m);
                w["s"] = json!(s);
                w["order"] = json!(m + s + 1);
            }
            CutVertexStructure::Violation { reason, .. } => w["reason"] = json!(reason),
            _ => {}
        }
        w
    }
}

fn violation(v: usize, reason: impl Into<String>) -> CutVertexStructure {
    CutVertexStructure::Violation { v: Some(v), reason: reason.into() }
}

/// Shape of a connected graph around its cut vertex.
pub fn classify_cut_vertex_structure(g: &SimpleGraph) -> Result<CutVertexStructure> {
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    let cuts = g.articulation_points();
    match cuts.count_ones() {
        0 => return Ok(CutVertexStructure::NoCutVertex),
        1 => {}
        k => {
            return Ok(CutVertexStructure::Violation {
                v: None,
                reason: format!("{k} cut vertices; at most one is possible"),
            })
        }
    }
    let v = cuts.trailing_zeros() as usize;
    let deg = g.degree(v);
    if deg == 2 {
        return Ok(if g.n() == 3 {
            CutVertexStructure::PathLengthTwo { v }
        } else {
            violation(v, "cut vertex of degree two outside the three-vertex path")
        });
    }
    let diameter = g.diameter().expect("connected");
    if diameter == 2 {
        return Ok(CutVertexStructure::Diam2CutVertex { v });
    }
    if diameter > 3 {
        return Ok(violation(v, format!("diameter {diameter} exceeds three")));
    }
    let comps = g.components_within(g.all() & !(1 << v));
    if comps.len() != 2 {
        return Ok(violation(v, format!("removing the cut vertex leaves {} components", comps.len())));
    }
    if let Some(&c) = comps.iter().find(|&&c| !g.induced(c).is_complete()) {
        return Ok(violation(v, format!("component {:?} of G - v is not complete", g.labels_of(c))));
    }
    let nv = g.neighbors(v);
    if let Some(i) = comps.iter().position(|c| c.count_ones() == 1) {
        let w = comps[i].trailing_zeros() as usize;
        let clique = comps[1 - i];
        let s = clique.count_ones() as usize;
        let mut failed = Vec::new();
        if s < 4 {
            failed.push(format!("s = {s} < 4"));
        }
        if clique & !nv == 0 {
            failed.push("v is complete to K_s".to_string());
        }
        if deg < 4 {
            failed.push(format!("deg(v) = {deg} < 4, so |rho3| = {} < 3", deg - 1));
        }
        return Ok(if failed.is_empty() {
            CutVertexStructure::Structure1 { v, w, s }
        } else {
            violation(v, format!("pendant structure: {}", failed.join("; ")))
        });
    }
    let Some(j) = comps.iter().position(|&c| c & !nv == 0) else {
        return Ok(violation(v, "v is complete to neither component"));
    };
    let (ks, km) = (comps[j], comps[1 - j]);
    let (s, m) = (ks.count_ones() as usize, km.count_ones() as usize);
    let touch = (km & nv).count_ones() as usize;
    let mut failed = Vec::new();
    if m < 8 {
        failed.push(format!("m = {m} < 8"));
    }
    if s < 2 {
        failed.push(format!("s = {s} < 2"));
    }
    if !(1 < touch && touch < m) {
        failed.push(format!("|N(v) ∩ K_m| = {touch} is not strictly between 1 and m"));
    }
    Ok(if failed.is_empty() {
        CutVertexStructure::Structure2 { v, m, s }
    } else {
        violation(v, format!("two-clique structure (order {}): {}", m + s + 1, failed.join("; ")))
    })
}
