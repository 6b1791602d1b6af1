//! Unit-capacity max-flow (Dinic) and the classical connectivity pair
//! computed from it via Menger's theorem. Kept independent of the
//! conditional-cut search engines so the two can cross-validate.

use crate::error::{Error, Result};
use crate::graph::Graph;

struct Dinic {
    nodes: usize,
    to: Vec<u32>,
    cap: Vec<i32>,
    base_cap: Vec<i32>,
    head: Vec<Vec<u32>>,
    level: Vec<i32>,
    iter: Vec<usize>,
}

impl Dinic {
    fn new(nodes: usize) -> Self {
        Dinic {
            nodes,
            to: Vec::new(),
            cap: Vec::new(),
            base_cap: Vec::new(),
            head: vec![Vec::new(); nodes],
            level: vec![0; nodes],
            iter: vec![0; nodes],
        }
    }

    /// Adds the arc pair u->v (cap) and v->u (rev_cap).
    fn add_arc(&mut self, u: usize, v: usize, cap: i32, rev_cap: i32) {
        let e = self.to.len() as u32;
        self.to.push(v as u32);
        self.cap.push(cap);
        self.to.push(u as u32);
        self.cap.push(rev_cap);
        self.head[u].push(e);
        self.head[v].push(e + 1);
    }

    fn freeze(&mut self) {
        self.base_cap = self.cap.clone();
    }

    fn reset(&mut self) {
        self.cap.copy_from_slice(&self.base_cap);
    }

    fn bfs(&mut self, s: usize, t: usize) -> bool {
        self.level.fill(-1);
        let mut queue = std::collections::VecDeque::new();
        self.level[s] = 0;
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            for &e in &self.head[u] {
                let v = self.to[e as usize] as usize;
                if self.cap[e as usize] > 0 && self.level[v] < 0 {
                    self.level[v] = self.level[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        self.level[t] >= 0
    }

    fn dfs(&mut self, u: usize, t: usize, pushed: i32) -> i32 {
        if u == t {
            return pushed;
        }
        while self.iter[u] < self.head[u].len() {
            let e = self.head[u][self.iter[u]] as usize;
            let v = self.to[e] as usize;
            if self.cap[e] > 0 && self.level[v] == self.level[u] + 1 {
                let d = self.dfs(v, t, pushed.min(self.cap[e]));
                if d > 0 {
                    self.cap[e] -= d;
                    self.cap[e ^ 1] += d;
                    return d;
                }
            }
            self.iter[u] += 1;
        }
        0
    }

    fn max_flow(&mut self, s: usize, t: usize) -> i32 {
        let mut flow = 0;
        while self.bfs(s, t) {
            self.iter.fill(0);
            loop {
                let d = self.dfs(s, t, i32::MAX);
                if d == 0 {
                    break;
                }
                flow += d;
            }
        }
        flow
    }

    /// Nodes reachable from `s` in the residual graph after a flow run.
    fn residual_reachable(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.nodes];
        let mut stack = vec![s];
        seen[s] = true;
        while let Some(u) = stack.pop() {
            for &e in &self.head[u] {
                let v = self.to[e as usize] as usize;
                if self.cap[e as usize] > 0 && !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        seen
    }
}

fn edge_flow_network(g: &Graph) -> Dinic {
    let mut net = Dinic::new(g.vertex_count());
    for &(u, v) in g.edges() {
        // undirected unit edge: symmetric arc pair
        net.add_arc(u as usize, v as usize, 1, 1);
    }
    net.freeze();
    net
}

/// Exact edge connectivity of a connected graph with at least two vertices,
/// with a minimum cut as witness: min over t != 0 of maxflow(0, t).
pub fn edge_connectivity_with_cut(g: &Graph) -> (usize, Vec<(u32, u32)>) {
    let n = g.vertex_count();
    let mut net = edge_flow_network(g);
    let mut best = i32::MAX;
    let mut best_t = 1usize;
    for t in 1..n {
        net.reset();
        let f = net.max_flow(0, t);
        if f < best {
            best = f;
            best_t = t;
        }
    }
    net.reset();
    net.max_flow(0, best_t);
    let side = net.residual_reachable(0);
    let mut cut: Vec<(u32, u32)> = g
        .edges()
        .iter()
        .copied()
        .filter(|&(u, v)| side[u as usize] != side[v as usize])
        .collect();
    cut.sort_unstable();
    debug_assert_eq!(cut.len(), best as usize);
    (best as usize, cut)
}

/// Exact vertex connectivity of a connected graph via vertex-split max-flow:
/// flows from a fixed root to every non-neighbor, plus flows between
/// non-adjacent neighbors of the root (covers minimum cuts containing the
/// root). Complete graphs have connectivity |V| - 1 by convention.
pub fn vertex_connectivity(g: &Graph) -> usize {
    let n = g.vertex_count();
    let inf = n as i32 + 1;
    let mut net = Dinic::new(2 * n);
    for v in 0..n {
        net.add_arc(2 * v, 2 * v + 1, 1, 0); // v_in -> v_out
    }
    for &(u, v) in g.edges() {
        net.add_arc(2 * u as usize + 1, 2 * v as usize, inf, 0);
        net.add_arc(2 * v as usize + 1, 2 * u as usize, inf, 0);
    }
    net.freeze();

    let adj = g.adjacency();
    let root = 0usize;
    let root_nbrs = &adj[root];
    let mut best = usize::MAX;
    let flow_between = |net: &mut Dinic, s: usize, t: usize| -> usize {
        net.reset();
        net.max_flow(2 * s + 1, 2 * t) as usize
    };
    for t in 1..n {
        if root_nbrs.binary_search(&(t as u32)).is_err() {
            best = best.min(flow_between(&mut net, root, t));
        }
    }
    for (i, &u) in root_nbrs.iter().enumerate() {
        for &v in &root_nbrs[i + 1..] {
            if !g.has_edge(u, v) {
                best = best.min(flow_between(&mut net, u as usize, v as usize));
            }
        }
    }
    if best == usize::MAX {
        // every pair adjacent: complete graph
        n - 1
    } else {
        best
    }
}

/// Classical connectivity pair (kappa, lambda) via max-flow over vertex
/// pairs. Disconnected inputs report (0, 0).
pub fn classical_connectivity(g: &Graph) -> Result<(usize, usize)> {
    if g.vertex_count() < 2 {
        return Err(Error::TooFewVertices { min: 2 });
    }
    if !g.is_connected() {
        return Ok((0, 0));
    }
    let kappa = vertex_connectivity(g);
    let (lambda, _) = edge_connectivity_with_cut(g);
    Ok((kappa, lambda))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::topology::{build_hcn, build_hypercube};

    fn cycle(n: usize) -> Graph {
        let labels = (0..n).map(|i| i.to_string()).collect();
        let edges = (0..n)
            .map(|i| (i as u32, ((i + 1) % n) as u32))
            .map(|(u, v)| (u.min(v), u.max(v)))
            .collect();
        Graph::new(labels, edges).unwrap()
    }

    #[test]
    fn cycle_has_connectivity_two() {
        assert_eq!(classical_connectivity(&cycle(4)).unwrap(), (2, 2));
    }

    #[test]
    fn hcn_connectivity_is_n_plus_one() {
        assert_eq!(classical_connectivity(&build_hcn(3).unwrap()).unwrap(), (4, 4));
    }

    #[test]
    fn hypercube_connectivity_is_n() {
        assert_eq!(
            classical_connectivity(&build_hypercube(4).unwrap()).unwrap(),
            (4, 4)
        );
    }

    #[test]
    fn complete_graph_and_cut_vertices() {
        let labels: Vec<String> = (0..5).map(|i| i.to_string()).collect();
        let mut edges = Vec::new();
        for u in 0..5u32 {
            for v in u + 1..5 {
                edges.push((u, v));
            }
        }
        let k5 = Graph::new(labels, edges).unwrap();
        assert_eq!(classical_connectivity(&k5).unwrap(), (4, 4));

        // two triangles sharing one vertex: kappa 1, lambda 2
        let labels: Vec<String> = (0..5).map(|i| i.to_string()).collect();
        let bowtie = Graph::new(
            labels,
            vec![(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)],
        )
        .unwrap();
        assert_eq!(classical_connectivity(&bowtie).unwrap(), (1, 2));
    }

    #[test]
    fn disconnected_reports_zero() {
        let labels: Vec<String> = (0..4).map(|i| i.to_string()).collect();
        let g = Graph::new(labels, vec![(0, 1), (2, 3)]).unwrap();
        assert_eq!(classical_connectivity(&g).unwrap(), (0, 0));
        let one = Graph::new(vec!["v".into()], Vec::new()).unwrap();
        assert!(classical_connectivity(&one).is_err());
    }

    #[test]
    fn edge_cut_witness_matches_value() {
        let (lambda, cut) = edge_connectivity_with_cut(&build_hcn(2).unwrap());
        assert_eq!(lambda, 3);
        assert_eq!(cut.len(), 3);
    }
}
