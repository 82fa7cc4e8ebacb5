//! Brute-force oracles shared by the integration tests. They work on plain
//! adjacency matrices and share no code with the library.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet, VecDeque};

use cdgraph::graphkit::SimpleGraph;
use rand::Rng;

pub type Adj = Vec<Vec<bool>>;

pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect()
}

/// The labeled graph whose edge set is bit `i` of `mask` for the `i`-th pair.
pub fn graph_from_mask(n: usize, mask: u64) -> SimpleGraph {
    let edges: Vec<_> = pairs(n).into_iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, e)| e).collect();
    SimpleGraph::from_edges(n, &edges)
}

pub fn graph_count(n: usize) -> u64 {
    1u64 << (n * n.saturating_sub(1) / 2)
}

pub fn adj(g: &SimpleGraph) -> Adj {
    (0..g.n()).map(|a| (0..g.n()).map(|b| g.has_edge(a, b)).collect()).collect()
}

pub fn from_adj(a: &Adj) -> SimpleGraph {
    let n = a.len();
    let edges: Vec<_> = pairs(n).into_iter().filter(|&(x, y)| a[x][y]).collect();
    SimpleGraph::from_edges(n, &edges)
}

/// BFS distances within the vertices where `keep` is true.
pub fn bfs(a: &Adj, keep: &[bool], s: usize) -> Vec<Option<usize>> {
    let mut d = vec![None; a.len()];
    d[s] = Some(0);
    let mut q = VecDeque::from([s]);
    while let Some(u) = q.pop_front() {
        for v in 0..a.len() {
            if a[u][v] && keep[v] && d[v].is_none() {
                d[v] = Some(d[u].unwrap() + 1);
                q.push_back(v);
            }
        }
    }
    d
}

pub fn connected_within(a: &Adj, keep: &[bool]) -> bool {
    match keep.iter().position(|&k| k) {
        None => true,
        Some(s) => {
            let d = bfs(a, keep, s);
            (0..a.len()).all(|v| !keep[v] || d[v].is_some())
        }
    }
}

pub fn connected(a: &Adj) -> bool {
    connected_within(a, &vec![true; a.len()])
}

pub fn component_count(a: &Adj) -> usize {
    let n = a.len();
    let mut seen = vec![false; n];
    let mut count = 0;
    for s in 0..n {
        if !seen[s] {
            count += 1;
            for (v, d) in bfs(a, &vec![true; n], s).iter().enumerate() {
                if d.is_some() {
                    seen[v] = true;
                }
            }
        }
    }
    count
}

pub fn distance(a: &Adj, x: usize, y: usize) -> Option<usize> {
    bfs(a, &vec![true; a.len()], x)[y]
}

pub fn cut_vertices(a: &Adj) -> Vec<usize> {
    let n = a.len();
    let base = component_count(a);
    (0..n)
        .filter(|&v| {
            let sub: Adj = (0..n).filter(|&x| x != v).map(|x| (0..n).filter(|&y| y != v).map(|y| a[x][y]).collect()).collect();
            component_count(&sub) > base
        })
        .collect()
}

fn members(n: usize, s: u32) -> Vec<usize> {
    (0..n).filter(|&v| s >> v & 1 == 1).collect()
}

pub fn independence_number(a: &Adj) -> usize {
    let n = a.len();
    (0u32..1 << n)
        .filter(|&s| {
            let m = members(n, s);
            m.iter().all(|&x| m.iter().all(|&y| !a[x][y]))
        })
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

pub fn clique_number(a: &Adj) -> usize {
    let n = a.len();
    (0u32..1 << n)
        .filter(|&s| {
            let m = members(n, s);
            m.iter().all(|&x| m.iter().all(|&y| x == y || a[x][y]))
        })
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Smallest separating set; `n − 1` for complete graphs, 0 when disconnected.
pub fn vertex_connectivity(a: &Adj) -> usize {
    let n = a.len();
    if !connected(a) {
        return 0;
    }
    (0u32..1 << n)
        .filter(|&s| (s.count_ones() as usize) + 2 <= n)
        .filter(|&s| !connected_within(a, &(0..n).map(|v| s >> v & 1 == 0).collect::<Vec<_>>()))
        .map(|s| s.count_ones() as usize)
        .min()
        .unwrap_or(n.saturating_sub(1))
}

pub fn domination_number(a: &Adj) -> usize {
    let n = a.len();
    (0u32..1 << n)
        .filter(|&s| (0..n).all(|v| s >> v & 1 == 1 || (0..n).any(|u| s >> u & 1 == 1 && a[u][v])))
        .map(|s| s.count_ones() as usize)
        .min()
        .unwrap_or(0)
}

/// Largest matching by exhaustive recursion on the lowest free vertex.
pub fn matching_number(a: &Adj) -> usize {
    fn go(a: &Adj, free: &mut Vec<bool>) -> usize {
        let Some(u) = free.iter().position(|&f| f) else { return 0 };
        free[u] = false;
        let mut best = go(a, free);
        for v in 0..a.len() {
            if free[v] && a[u][v] {
                free[v] = false;
                best = best.max(1 + go(a, free));
                free[v] = true;
            }
        }
        free[u] = true;
        best
    }
    go(a, &mut vec![true; a.len()])
}

pub fn remove_vertex(a: &Adj, v: usize) -> Adj {
    let n = a.len();
    (0..n).filter(|&x| x != v).map(|x| (0..n).filter(|&y| y != v).map(|y| a[x][y]).collect()).collect()
}

pub fn is_claw_free(a: &Adj) -> bool {
    let n = a.len();
    (0..n).all(|c| {
        let nb: Vec<usize> = (0..n).filter(|&v| a[c][v]).collect();
        let k = nb.len();
        (0..k).all(|i| {
            (i + 1..k).all(|j| (j + 1..k).all(|l| a[nb[i]][nb[j]] || a[nb[i]][nb[l]] || a[nb[j]][nb[l]]))
        })
    })
}

/// Held–Karp reachability over (subset, endpoint).
pub fn has_hamiltonian_path(a: &Adj) -> bool {
    let n = a.len();
    if n == 0 {
        return false;
    }
    let full = (1usize << n) - 1;
    let mut dp = vec![0u32; 1 << n];
    for v in 0..n {
        dp[1 << v] |= 1 << v;
    }
    for s in 1..=full {
        for v in 0..n {
            if dp[s] >> v & 1 == 0 {
                continue;
            }
            for w in 0..n {
                if s >> w & 1 == 0 && a[v][w] {
                    dp[s | 1 << w] |= 1 << w;
                }
            }
        }
    }
    dp[full] != 0
}

pub fn has_hamiltonian_cycle(a: &Adj) -> bool {
    let n = a.len();
    if n < 3 {
        return false;
    }
    let full = (1usize << n) - 1;
    let mut dp = vec![0u32; 1 << n];
    dp[1] = 1;
    for s in 1..=full {
        if s & 1 == 0 {
            continue;
        }
        for v in 0..n {
            if dp[s] >> v & 1 == 0 {
                continue;
            }
            for w in 0..n {
                if s >> w & 1 == 0 && a[v][w] {
                    dp[s | 1 << w] |= 1 << w;
                }
            }
        }
    }
    (1..n).any(|v| dp[full] >> v & 1 == 1 && a[v][0])
}

pub fn is_hamiltonian_path(a: &Adj, path: &[usize]) -> bool {
    let n = a.len();
    path.len() == n
        && path.iter().collect::<HashSet<_>>().len() == n
        && path.windows(2).all(|w| a[w[0]][w[1]])
}

/// Number of distinct eigenvalues of a symmetric matrix, computed as the rank
/// of `I, A, …, Aⁿ` flattened, by fraction-free elimination.
pub fn minimal_polynomial_degree(a: &Adj) -> usize {
    let n = a.len();
    if n == 0 {
        return 0;
    }
    let m: Vec<Vec<i128>> = a.iter().map(|r| r.iter().map(|&b| i128::from(b)).collect()).collect();
    let mut power: Vec<Vec<i128>> = (0..n).map(|i| (0..n).map(|j| i128::from(i == j)).collect()).collect();
    let mut rows: Vec<Vec<i128>> = Vec::new();
    for _ in 0..=n {
        rows.push(power.iter().flatten().copied().collect());
        power = (0..n)
            .map(|i| (0..n).map(|j| (0..n).map(|k| power[i][k] * m[k][j]).sum()).collect())
            .collect();
    }
    rank(rows)
}

/// Bareiss elimination: exact over the rationals.
pub fn rank(mut rows: Vec<Vec<i128>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    let mut prev = 1i128;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| rows[i][c] != 0) else { continue };
        rows.swap(r, p);
        for i in r + 1..rows.len() {
            for j in c + 1..cols {
                rows[i][j] = (rows[r][c] * rows[i][j] - rows[i][c] * rows[r][j]) / prev;
            }
            rows[i][c] = 0;
        }
        prev = rows[r][c];
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    r
}

/// Canonical form by brute force over all relabelings.
pub fn canonical(a: &Adj) -> Vec<bool> {
    let n = a.len();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best: Option<Vec<bool>> = None;
    permute(&mut perm, 0, &mut |p| {
        let code: Vec<bool> = pairs(n).iter().map(|&(x, y)| a[p[x]][p[y]]).collect();
        if best.as_ref().is_none_or(|b| code > *b) {
            best = Some(code);
        }
    });
    best.unwrap_or_default()
}

fn permute(p: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == p.len() {
        f(p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permute(p, k + 1, f);
        p.swap(k, i);
    }
}

pub fn isomorphic(a: &Adj, b: &Adj) -> bool {
    a.len() == b.len() && canonical(a) == canonical(b)
}

pub fn random_graph(n: usize, p: f64, rng: &mut impl Rng) -> SimpleGraph {
    let edges: Vec<_> = pairs(n).into_iter().filter(|_| rng.gen_bool(p)).collect();
    SimpleGraph::from_edges(n, &edges)
}

pub fn random_connected_graph(n: usize, p: f64, rng: &mut impl Rng) -> SimpleGraph {
    loop {
        let g = random_graph(n, p, rng);
        if connected(&adj(&g)) {
            return g;
        }
    }
}

/// Permutations as image vectors on `0..degree`.
pub type Perm = Vec<usize>;

pub fn parse_perms(text: &str) -> Vec<Perm> {
    let gens: Vec<Vec<Vec<usize>>> = text
        .split("),(")
        .map(|g| {
            g.trim_matches(|c| c == '(' || c == ')')
                .split(")(")
                .map(|c| c.split_whitespace().map(|x| x.parse::<usize>().unwrap() - 1).collect())
                .collect()
        })
        .collect();
    let degree = gens.iter().flatten().flatten().max().map_or(0, |m| m + 1);
    gens.into_iter()
        .map(|cycles| {
            let mut p: Perm = (0..degree).collect();
            for c in cycles {
                for i in 0..c.len() {
                    p[c[i]] = c[(i + 1) % c.len()];
                }
            }
            p
        })
        .collect()
}

pub fn mul(a: &Perm, b: &Perm) -> Perm {
    a.iter().map(|&x| b[x]).collect()
}

pub fn inv(a: &Perm) -> Perm {
    let mut r = vec![0; a.len()];
    for (i, &x) in a.iter().enumerate() {
        r[x] = i;
    }
    r
}

pub fn closure(gens: &[Perm], degree: usize) -> Vec<Perm> {
    let id: Perm = (0..degree).collect();
    let mut seen: BTreeSet<Perm> = BTreeSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = mul(&x, g);
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    seen.into_iter().collect()
}

pub fn group_elements(text: &str) -> Vec<Perm> {
    let gens = parse_perms(text);
    let degree = gens[0].len();
    closure(&gens, degree)
}

pub fn class_count(elements: &[Perm]) -> usize {
    let mut seen: HashSet<Perm> = HashSet::new();
    let mut count = 0;
    for x in elements {
        if seen.contains(x) {
            continue;
        }
        count += 1;
        for g in elements {
            seen.insert(mul(&mul(&inv(g), x), g));
        }
    }
    count
}

/// `|G′|`, the order of the subgroup generated by all commutators.
pub fn derived_order(elements: &[Perm]) -> usize {
    let comms: BTreeSet<Perm> = elements
        .iter()
        .flat_map(|x| elements.iter().map(move |y| mul(&mul(&inv(x), &inv(y)), &mul(x, y))))
        .collect();
    let comms: Vec<Perm> = comms.into_iter().collect();
    closure(&comms, elements[0].len()).len()
}

/// All multisets of divisors of `order` containing 1, with `k` entries and
/// squares summing to `order`, optionally with a given number of 1s.
pub fn forced_degree_multisets(order: u64, k: usize, linear: Option<u64>) -> Vec<Vec<u64>> {
    let divisors: Vec<u64> = (1..=order).filter(|d| order.is_multiple_of(*d) && d * d <= order).collect();
    let mut out = Vec::new();
    fn go(divs: &[u64], from: usize, left: u64, slots: usize, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if slots == 0 {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for i in from..divs.len() {
            let d = divs[i];
            if d * d * slots as u64 > left {
                break;
            }
            cur.push(d);
            go(divs, i, left - d * d, slots - 1, cur, out);
            cur.pop();
        }
    }
    go(&divisors, 0, order, k, &mut Vec::new(), &mut out);
    out.retain(|m| m[0] == 1);
    if let Some(linear) = linear {
        out.retain(|m| m.iter().filter(|&&d| d == 1).count() as u64 == linear);
    }
    out
}

/// Bitmask rows for the hot exhaustive loops.
pub fn rows(a: &Adj) -> Vec<u32> {
    a.iter().map(|r| r.iter().enumerate().filter(|(_, &b)| b).fold(0, |s, (i, _)| s | 1 << i)).collect()
}

pub fn rows_connected(rows: &[u32], keep: u32) -> bool {
    if keep == 0 {
        return true;
    }
    let mut seen = keep & keep.wrapping_neg();
    let mut frontier = seen;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let new = rows[v] & keep & !seen;
        seen |= new;
        frontier |= new;
    }
    seen == keep
}

pub fn rows_alpha(rows: &[u32]) -> usize {
    let n = rows.len();
    (0u32..1 << n)
        .filter(|&s| (0..n).all(|v| s >> v & 1 == 0 || rows[v] & s == 0))
        .map(u32::count_ones)
        .max()
        .unwrap_or(0) as usize
}

pub fn rows_kappa(rows: &[u32]) -> usize {
    let n = rows.len();
    let full = (1u32 << n) - 1;
    if !rows_connected(rows, full) {
        return 0;
    }
    (0u32..1 << n)
        .filter(|&s| s.count_ones() as usize + 2 <= n && !rows_connected(rows, full & !s))
        .map(u32::count_ones)
        .min()
        .map_or(n.saturating_sub(1), |k| k as usize)
}
