use super::{iter_set, SimpleGraph, VertexSet};

struct Search<'a> {
    g: &'a SimpleGraph,
    close_to: Option<usize>,
    path: Vec<usize>,
}

impl Search<'_> {
    fn extend(&mut self, cur: usize, unvisited: VertexSet) -> bool {
        if unvisited == 0 {
            return match self.close_to {
                Some(start) => self.g.has_edge(cur, start),
                None => true,
            };
        }
        let g = self.g;
        // Everything left must still be reachable through unvisited vertices.
        if g.reach(cur, unvisited | 1 << cur) != unvisited | 1 << cur {
            return false;
        }
        if let Some(start) = self.close_to {
            if g.neighbors(start) & unvisited == 0 {
                return false;
            }
        }
        let mut next: Vec<usize> = iter_set(g.neighbors(cur) & unvisited).collect();
        next.sort_by_key(|&v| ((g.neighbors(v) & unvisited).count_ones(), v));
        for v in next {
            self.path.push(v);
            if self.extend(v, unvisited & !(1 << v)) {
                return true;
            }
            self.path.pop();
        }
        false
    }
}

impl SimpleGraph {
    /// A Hamiltonian path as a vertex sequence.
    pub fn hamiltonian_path(&self) -> Option<Vec<usize>> {
        let n = self.n();
        if n <= 1 {
            return Some((0..n).collect());
        }
        if !self.is_connected() {
            return None;
        }
        let leaves: Vec<usize> = (0..n).filter(|&v| self.degree(v) == 1).collect();
        if leaves.len() > 2 {
            return None;
        }
        let starts: Vec<usize> = if leaves.is_empty() { (0..n).collect() } else { leaves };
        starts.into_iter().find_map(|s| {
            let mut search = Search { g: self, close_to: None, path: vec![s] };
            search.extend(s, self.all() & !(1 << s)).then_some(search.path)
        })
    }

    /// A Hamiltonian cycle starting at vertex 0; the closing edge is implicit.
    pub fn hamiltonian_cycle(&self) -> Option<Vec<usize>> {
        let n = self.n();
        if n < 3 || !self.is_connected() || self.articulation_points() != 0 {
            return None;
        }
        if (0..n).any(|v| self.degree(v) < 2) {
            return None;
        }
        let mut search = Search { g: self, close_to: Some(0), path: vec![0] };
        search.extend(0, self.all() & !1).then_some(search.path)
    }
}
