use std::collections::VecDeque;

use super::{iter_set, SimpleGraph};

const NONE: usize = usize::MAX;

/// Edmonds' blossom algorithm; returns the mate of every vertex.
fn maximum_mates(g: &SimpleGraph) -> Vec<usize> {
    let n = g.n();
    let mut mate = vec![NONE; n];
    for root in 0..n {
        if mate[root] != NONE {
            continue;
        }
        if let Some((end, parent)) = augmenting_path(g, root, &mate) {
            let mut v = end;
            while v != NONE {
                let pv = parent[v];
                let next = mate[pv];
                mate[v] = pv;
                mate[pv] = v;
                v = next;
            }
        }
    }
    mate
}

fn augmenting_path(g: &SimpleGraph, root: usize, mate: &[usize]) -> Option<(usize, Vec<usize>)> {
    let n = g.n();
    let mut used = vec![false; n];
    let mut parent = vec![NONE; n];
    let mut base: Vec<usize> = (0..n).collect();
    used[root] = true;
    let mut queue = VecDeque::from([root]);

    let lca = |mut a: usize, mut b: usize, base: &[usize], parent: &[usize]| -> usize {
        let mut seen = vec![false; n];
        loop {
            a = base[a];
            seen[a] = true;
            if mate[a] == NONE {
                break;
            }
            a = parent[mate[a]];
        }
        loop {
            b = base[b];
            if seen[b] {
                return b;
            }
            b = parent[mate[b]];
        }
    };

    while let Some(v) = queue.pop_front() {
        for to in iter_set(g.neighbors(v)) {
            if base[v] == base[to] || mate[v] == to {
                continue;
            }
            if to == root || (mate[to] != NONE && parent[mate[to]] != NONE) {
                let cur = lca(v, to, &base, &parent);
                let mut blossom = vec![false; n];
                for (start, child) in [(v, to), (to, v)] {
                    let (mut x, mut c) = (start, child);
                    while base[x] != cur {
                        blossom[base[x]] = true;
                        blossom[base[mate[x]]] = true;
                        parent[x] = c;
                        c = mate[x];
                        x = parent[mate[x]];
                    }
                }
                for i in 0..n {
                    if blossom[base[i]] {
                        base[i] = cur;
                        if !used[i] {
                            used[i] = true;
                            queue.push_back(i);
                        }
                    }
                }
            } else if parent[to] == NONE {
                parent[to] = v;
                if mate[to] == NONE {
                    return Some((to, parent));
                }
                let m = mate[to];
                used[m] = true;
                queue.push_back(m);
            }
        }
    }
    None
}

impl SimpleGraph {
    /// A maximum matching as edges `(a, b)` with `a < b`.
    pub fn maximum_matching(&self) -> Vec<(usize, usize)> {
        let mate = maximum_mates(self);
        (0..self.n())
            .filter(|&v| mate[v] != NONE && v < mate[v])
            .map(|v| (v, mate[v]))
            .collect()
    }

    /// A perfect matching, if one exists.
    pub fn perfect_matching(&self) -> Option<Vec<(usize, usize)>> {
        if self.n() % 2 == 1 {
            return None;
        }
        let m = self.maximum_matching();
        (2 * m.len() == self.n()).then_some(m)
    }

    pub fn has_perfect_matching(&self) -> bool {
        self.perfect_matching().is_some()
    }

    /// Every vertex-deleted subgraph has a perfect matching.
    pub fn is_hypomatchable(&self) -> bool {
        (0..self.n()).all(|v| self.remove_vertex(v).has_perfect_matching())
    }
}
