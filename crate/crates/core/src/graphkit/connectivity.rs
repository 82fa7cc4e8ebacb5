use super::{iter_set, subsets_of_size, SimpleGraph, VertexSet};

impl SimpleGraph {
    /// Vertices reachable from `start` inside `within`.
    pub fn reach(&self, start: usize, within: VertexSet) -> VertexSet {
        let mut seen: VertexSet = 1 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in iter_set(frontier) {
                next |= self.rows[v];
            }
            next &= within & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// Connected components of the subgraph induced on `within`, ordered by
    /// smallest vertex.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut rest = within & self.all();
        let mut out = Vec::new();
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            let c = self.reach(v, rest);
            out.push(c);
            rest &= !c;
        }
        out
    }

    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(self.all())
    }

    /// At most one component (the null graph counts as connected).
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// BFS distances from `source`; `None` for unreachable vertices.
    pub fn distances_from(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[source] = Some(0);
        let mut seen: VertexSet = 1 << source;
        let mut frontier = seen;
        let mut d = 0;
        while frontier != 0 {
            d += 1;
            let mut next = 0;
            for v in iter_set(frontier) {
                next |= self.rows[v];
            }
            next &= !seen;
            for v in iter_set(next) {
                dist[v] = Some(d);
            }
            seen |= next;
            frontier = next;
        }
        dist
    }

    pub fn distances(&self) -> Vec<Vec<Option<usize>>> {
        (0..self.n).map(|v| self.distances_from(v)).collect()
    }

    /// Largest distance, or `None` (infinite) when disconnected.
    pub fn diameter(&self) -> Option<usize> {
        let mut best = 0;
        for v in 0..self.n {
            for d in self.distances_from(v) {
                best = best.max(d?);
            }
        }
        Some(best)
    }

    /// Cut vertices, by the DFS low-point method.
    pub fn articulation_points(&self) -> VertexSet {
        let n = self.n;
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut cut: VertexSet = 0;
        let mut time = 0;
        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            // (vertex, parent, remaining neighbours)
            let mut stack: Vec<(usize, usize, VertexSet)> = vec![(root, usize::MAX, self.rows[root])];
            disc[root] = time;
            low[root] = time;
            time += 1;
            let mut root_children = 0;
            while let Some(top) = stack.last_mut() {
                let (v, parent, rest) = *top;
                if rest != 0 {
                    let u = rest.trailing_zeros() as usize;
                    top.2 &= rest - 1;
                    if disc[u] == usize::MAX {
                        disc[u] = time;
                        low[u] = time;
                        time += 1;
                        if v == root {
                            root_children += 1;
                        }
                        stack.push((u, v, self.rows[u]));
                    } else if u != parent {
                        low[v] = low[v].min(disc[u]);
                    }
                } else {
                    stack.pop();
                    if parent != usize::MAX {
                        low[parent] = low[parent].min(low[v]);
                        if parent != root && low[v] >= disc[parent] {
                            cut |= 1 << parent;
                        }
                    }
                }
            }
            if root_children >= 2 {
                cut |= 1 << root;
            }
        }
        cut
    }

    /// κ: size of a smallest vertex set whose removal disconnects the graph;
    /// `n − 1` for complete graphs and 0 for disconnected ones.
    pub fn vertex_connectivity(&self) -> usize {
        let n = self.n;
        if n <= 1 || !self.is_connected() {
            return 0;
        }
        if self.is_complete() {
            return n - 1;
        }
        let min_degree = (0..n).map(|v| self.degree(v)).min().unwrap_or(0);
        for k in 1..=min_degree {
            for s in subsets_of_size(n, k) {
                if self.components_within(self.all() & !s).len() > 1 {
                    return k;
                }
            }
        }
        min_degree
    }

    /// A smallest separating set, if the graph is connected and not complete.
    pub fn minimum_vertex_cut(&self) -> Option<VertexSet> {
        if self.n <= 1 || !self.is_connected() || self.is_complete() {
            return None;
        }
        let k = self.vertex_connectivity();
        subsets_of_size(self.n, k).find(|&s| self.components_within(self.all() & !s).len() > 1)
    }
}
