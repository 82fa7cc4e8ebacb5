use serde::{Deserialize, Serialize};

use super::{combinations, iter_set, subsets_of_size, SimpleGraph, VertexSet};

/// Small induced patterns.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Pattern {
    Triangle,
    K4,
    Claw,
    P4,
}

impl Pattern {
    fn order(self) -> usize {
        match self {
            Pattern::Triangle => 3,
            _ => 4,
        }
    }
}

impl SimpleGraph {
    fn matches_pattern(&self, verts: &[usize], pattern: Pattern) -> bool {
        let set: VertexSet = verts.iter().fold(0, |s, &v| s | 1 << v);
        let degs: Vec<u32> = verts.iter().map(|&v| (self.rows[v] & set).count_ones()).collect();
        let edges: u32 = degs.iter().sum::<u32>() / 2;
        match pattern {
            Pattern::Triangle => edges == 3,
            Pattern::K4 => edges == 6,
            Pattern::Claw => edges == 3 && degs.contains(&3),
            Pattern::P4 => edges == 3 && degs.iter().all(|&d| d == 1 || d == 2) && degs.iter().filter(|&&d| d == 1).count() == 2,
        }
    }

    /// Lexicographically first vertex set inducing `pattern`.
    pub fn contains_induced(&self, pattern: Pattern) -> Option<Vec<usize>> {
        combinations(self.n, pattern.order()).find(|c| self.matches_pattern(c, pattern))
    }

    pub fn is_claw_free(&self) -> bool {
        // Centre-first scan: three pairwise non-adjacent neighbours.
        (0..self.n).all(|v| {
            let nb: Vec<usize> = iter_set(self.rows[v]).collect();
            !nb.iter().enumerate().any(|(i, &a)| {
                nb[i + 1..].iter().enumerate().any(|(j, &b)| {
                    !self.has_edge(a, b)
                        && nb[i + 1 + j + 1..]
                            .iter()
                            .any(|&c| !self.has_edge(a, c) && !self.has_edge(b, c))
                })
            })
        })
    }

    /// α together with a maximum independent set.
    pub fn maximum_independent_set(&self) -> VertexSet {
        fn search(g: &SimpleGraph, cand: VertexSet, chosen: VertexSet, best: &mut VertexSet) {
            if cand == 0 {
                if chosen.count_ones() > best.count_ones() {
                    *best = chosen;
                }
                return;
            }
            if chosen.count_ones() + cand.count_ones() <= best.count_ones() {
                return;
            }
            // Branch on a vertex of maximum degree inside the candidates.
            let v = iter_set(cand)
                .max_by_key(|&v| ((g.rows[v] & cand).count_ones(), std::cmp::Reverse(v)))
                .expect("non-empty");
            if g.rows[v] & cand == 0 {
                // No edges left among candidates: take them all.
                search(g, 0, chosen | cand, best);
                return;
            }
            search(g, cand & !(1 << v) & !g.rows[v], chosen | 1 << v, best);
            search(g, cand & !(1 << v), chosen, best);
        }
        let mut best = 0;
        search(self, self.all(), 0, &mut best);
        best
    }

    pub fn independence_number(&self) -> usize {
        self.maximum_independent_set().count_ones() as usize
    }

    pub fn clique_number(&self) -> usize {
        self.complement().independence_number()
    }

    /// A minimum dominating set (found by size-ordered subset enumeration).
    pub fn minimum_dominating_set(&self) -> VertexSet {
        let all = self.all();
        let closed: Vec<VertexSet> = (0..self.n).map(|v| self.rows[v] | 1 << v).collect();
        for k in 0..=self.n {
            if let Some(s) = subsets_of_size(self.n, k)
                .find(|&s| iter_set(s).fold(0, |acc, v| acc | closed[v]) == all)
            {
                return s;
            }
        }
        unreachable!("the whole vertex set dominates")
    }

    pub fn domination_number(&self) -> usize {
        self.minimum_dominating_set().count_ones() as usize
    }

    /// The common degree `k` if the graph is k-regular.
    pub fn regularity(&self) -> Option<usize> {
        if self.n == 0 {
            return Some(0);
        }
        let first = self.degree(0);
        (0..self.n).all(|v| self.degree(v) == first).then_some(first)
    }

    /// `(v, k, λ, μ)` if strongly regular. Complete and edgeless graphs are
    /// excluded.
    pub fn strongly_regular_parameters(&self) -> Option<(usize, usize, usize, usize)> {
        let k = self.regularity()?;
        if self.edge_count() == 0 || self.is_complete() {
            return None;
        }
        let mut lambda = None;
        let mut mu = None;
        for a in 0..self.n {
            for b in a + 1..self.n {
                let common = (self.rows[a] & self.rows[b]).count_ones() as usize;
                let slot = if self.has_edge(a, b) { &mut lambda } else { &mut mu };
                match *slot {
                    None => *slot = Some(common),
                    Some(c) if c != common => return None,
                    _ => {}
                }
            }
        }
        Some((self.n, k, lambda?, mu?))
    }

    /// Graph isomorphism by backtracking with degree pruning.
    pub fn is_isomorphic(&self, other: &SimpleGraph) -> bool {
        self.isomorphism(other).is_some()
    }

    /// A vertex map `φ` with `a ~ b ⇔ φ(a) ~ φ(b)`.
    pub fn isomorphism(&self, other: &SimpleGraph) -> Option<Vec<usize>> {
        if self.n != other.n || self.edge_count() != other.edge_count() {
            return None;
        }
        let mut da: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        let mut db: Vec<usize> = (0..other.n).map(|v| other.degree(v)).collect();
        da.sort_unstable();
        db.sort_unstable();
        if da != db {
            return None;
        }
        fn extend(a: &SimpleGraph, b: &SimpleGraph, map: &mut Vec<usize>, used: VertexSet) -> bool {
            let v = map.len();
            if v == a.n {
                return true;
            }
            for w in 0..b.n {
                if used >> w & 1 == 1 || a.degree(v) != b.degree(w) {
                    continue;
                }
                if (0..v).all(|u| a.has_edge(u, v) == b.has_edge(map[u], w)) {
                    map.push(w);
                    if extend(a, b, map, used | 1 << w) {
                        return true;
                    }
                    map.pop();
                }
            }
            false
        }
        let mut map = Vec::with_capacity(self.n);
        extend(self, other, &mut map, 0).then_some(map)
    }
}
