//! Naive reference implementations used as independent oracles. They share
//! no machinery with the production engines: components come from
//! union-find instead of bitset BFS, degrees from plain edge scans, and
//! candidate sets from recursive enumeration instead of rank arithmetic.
#![allow(dead_code)]

use hcn_core::Graph;

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }
}

/// Component sizes (ascending) of the graph restricted to `alive` vertices
/// and without the `removed_edges`, via union-find.
pub fn naive_component_sizes(
    g: &Graph,
    alive: &[bool],
    removed_edges: &[(u32, u32)],
) -> Vec<usize> {
    let n = g.vertex_count();
    let mut uf = UnionFind::new(n);
    for &(u, v) in g.edges() {
        let dropped = removed_edges
            .iter()
            .any(|&(a, b)| (a, b) == (u, v) || (b, a) == (u, v));
        if !dropped && alive[u as usize] && alive[v as usize] {
            uf.union(u as usize, v as usize);
        }
    }
    let mut sizes = std::collections::HashMap::new();
    for (v, &live) in alive.iter().enumerate() {
        if live {
            let root = uf.find(v);
            *sizes.entry(root).or_insert(0usize) += 1;
        }
    }
    let mut out: Vec<usize> = sizes.into_values().collect();
    out.sort_unstable();
    out
}

/// Degrees in the graph restricted to `alive` vertices minus `removed_edges`.
pub fn naive_degrees(g: &Graph, alive: &[bool], removed_edges: &[(u32, u32)]) -> Vec<usize> {
    let mut deg = vec![0usize; g.vertex_count()];
    for &(u, v) in g.edges() {
        let dropped = removed_edges
            .iter()
            .any(|&(a, b)| (a, b) == (u, v) || (b, a) == (u, v));
        if !dropped && alive[u as usize] && alive[v as usize] {
            deg[u as usize] += 1;
            deg[v as usize] += 1;
        }
    }
    deg
}

/// Ground-truth h-vertex-cut check: disconnected remainder, all surviving
/// degrees at least h.
pub fn naive_vertex_cut_valid(g: &Graph, removed: &[u32], h: u32) -> bool {
    let mut alive = vec![true; g.vertex_count()];
    for &v in removed {
        alive[v as usize] = false;
    }
    let sizes = naive_component_sizes(g, &alive, &[]);
    if sizes.len() < 2 {
        return false;
    }
    let deg = naive_degrees(g, &alive, &[]);
    alive
        .iter()
        .enumerate()
        .filter(|(_, &a)| a)
        .all(|(v, _)| deg[v] >= h as usize)
}

/// Ground-truth h-edge-cut check.
pub fn naive_edge_cut_valid(g: &Graph, removed: &[(u32, u32)], h: u32) -> bool {
    let alive = vec![true; g.vertex_count()];
    let sizes = naive_component_sizes(g, &alive, removed);
    if sizes.len() < 2 {
        return false;
    }
    let deg = naive_degrees(g, &alive, removed);
    deg.iter().all(|&d| d >= h as usize)
}

fn subsets_of_size<T: Copy>(items: &[T], k: usize) -> Vec<Vec<T>> {
    fn rec<T: Copy>(items: &[T], k: usize, start: usize, acc: &mut Vec<T>, out: &mut Vec<Vec<T>>) {
        if acc.len() == k {
            out.push(acc.clone());
            return;
        }
        for i in start..items.len() {
            acc.push(items[i]);
            rec(items, k, i + 1, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    rec(items, k, 0, &mut Vec::new(), &mut out);
    out
}

/// Smallest k <= max_size admitting a valid h-vertex-cut, by exhausting
/// every subset of each size in turn.
pub fn naive_min_h_vertex_cut(g: &Graph, h: u32, max_size: usize) -> Option<usize> {
    let vertices: Vec<u32> = (0..g.vertex_count() as u32).collect();
    for k in 0..=max_size.min(g.vertex_count()) {
        for cand in subsets_of_size(&vertices, k) {
            if naive_vertex_cut_valid(g, &cand, h) {
                return Some(k);
            }
        }
    }
    None
}

/// Smallest k <= max_size admitting a valid h-edge-cut.
pub fn naive_min_h_edge_cut(g: &Graph, h: u32, max_size: usize) -> Option<usize> {
    let edges: Vec<(u32, u32)> = g.edges().to_vec();
    for k in 0..=max_size.min(edges.len()) {
        for cand in subsets_of_size(&edges, k) {
            if naive_edge_cut_valid(g, &cand, h) {
                return Some(k);
            }
        }
    }
    None
}
