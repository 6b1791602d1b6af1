use std::collections::BTreeSet;

use crate::error::{Error, Result};

/// A finite simple undirected graph with labeled vertices.
///
/// Edges are kept as a sorted, deduplicated set of `(min, max)` index pairs.
/// Graphs are immutable once constructed; search workloads materialize
/// adjacency lists on demand via [`Graph::adjacency`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<String>,
    edges: Vec<(u32, u32)>,
}

impl Graph {
    /// Builds a graph from labels and an edge list, validating that there are
    /// no self-loops, no duplicate edges, and no out-of-range endpoints.
    pub fn new(labels: Vec<String>, mut edges: Vec<(u32, u32)>) -> Result<Self> {
        let n = labels.len();
        for e in edges.iter_mut() {
            if e.0 == e.1 {
                return Err(Error::SelfLoop { v: e.0 });
            }
            if e.0 > e.1 {
                *e = (e.1, e.0);
            }
            if e.1 as usize >= n {
                return Err(Error::VertexOutOfRange {
                    index: e.1,
                    count: n,
                });
            }
        }
        edges.sort_unstable();
        for w in edges.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateEdge {
                    u: w[0].0,
                    v: w[0].1,
                });
            }
        }
        Ok(Graph { labels, edges })
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as normalized `(min, max)` pairs in sorted order.
    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn label(&self, v: u32) -> &str {
        &self.labels[v as usize]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        if u == v {
            return false;
        }
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).is_ok()
    }

    /// Materialized adjacency lists, each sorted ascending.
    pub fn adjacency(&self) -> Vec<Vec<u32>> {
        let mut adj = vec![Vec::new(); self.labels.len()];
        for &(u, v) in &self.edges {
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
        for row in adj.iter_mut() {
            row.sort_unstable();
        }
        adj
    }

    /// Minimum vertex degree, or `None` for the empty graph.
    pub fn min_degree(&self) -> Option<usize> {
        if self.labels.is_empty() {
            return None;
        }
        let mut deg = vec![0usize; self.labels.len()];
        for &(u, v) in &self.edges {
            deg[u as usize] += 1;
            deg[v as usize] += 1;
        }
        deg.into_iter().min()
    }

    /// Connected components as sorted vertex sets, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<u32>> {
        let n = self.labels.len();
        let adj = self.adjacency();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        let mut queue = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            queue.clear();
            queue.push(start as u32);
            let mut comp = vec![start as u32];
            while let Some(u) = queue.pop() {
                for &w in &adj[u as usize] {
                    if !seen[w as usize] {
                        seen[w as usize] = true;
                        comp.push(w);
                        queue.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Subgraph induced by `vertices`: the given vertex set with every edge
    /// of `self` whose endpoints both lie in it. Labels are preserved.
    pub fn induced_subgraph(&self, vertices: &[u32]) -> Result<Graph> {
        let n = self.labels.len();
        let set: BTreeSet<u32> = vertices.iter().copied().collect();
        if let Some(&v) = set.iter().next_back() {
            if v as usize >= n {
                return Err(Error::VertexOutOfRange { index: v, count: n });
            }
        }
        let mut remap = vec![u32::MAX; n];
        let mut labels = Vec::with_capacity(set.len());
        for (i, &v) in set.iter().enumerate() {
            remap[v as usize] = i as u32;
            labels.push(self.labels[v as usize].clone());
        }
        let edges = self
            .edges
            .iter()
            .filter(|(u, v)| set.contains(u) && set.contains(v))
            .map(|&(u, v)| (remap[u as usize], remap[v as usize]))
            .collect();
        Graph::new(labels, edges)
    }

    /// Vertices outside `vertices` adjacent to at least one member of it.
    pub fn neighborhood(&self, vertices: &[u32]) -> Result<Vec<u32>> {
        let n = self.labels.len();
        let mut inside = vec![false; n];
        for &v in vertices {
            if v as usize >= n {
                return Err(Error::VertexOutOfRange { index: v, count: n });
            }
            inside[v as usize] = true;
        }
        let mut out = vec![false; n];
        for &(u, v) in &self.edges {
            if inside[u as usize] && !inside[v as usize] {
                out[v as usize] = true;
            }
            if inside[v as usize] && !inside[u as usize] {
                out[u as usize] = true;
            }
        }
        Ok((0..n as u32).filter(|&v| out[v as usize]).collect())
    }

    /// A copy of the graph with the given edges removed; vertices retained.
    pub fn without_edges(&self, removed: &[(u32, u32)]) -> Result<Graph> {
        let mut drop: Vec<(u32, u32)> = Vec::with_capacity(removed.len());
        for &(u, v) in removed {
            let key = (u.min(v), u.max(v));
            if !self.has_edge(key.0, key.1) {
                return Err(Error::EdgeNotInGraph { u, v });
            }
            drop.push(key);
        }
        drop.sort_unstable();
        drop.dedup();
        let edges = self
            .edges
            .iter()
            .filter(|e| drop.binary_search(e).is_err())
            .copied()
            .collect();
        Graph::new(self.labels.clone(), edges)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let labels = (0..n).map(|i| i.to_string()).collect();
        let edges = (0..n.saturating_sub(1))
            .map(|i| (i as u32, i as u32 + 1))
            .collect();
        Graph::new(labels, edges).unwrap()
    }

    #[test]
    fn rejects_self_loops_duplicates_and_bad_indices() {
        let labels = vec!["a".into(), "b".into()];
        assert!(matches!(
            Graph::new(labels.clone(), vec![(0, 0)]),
            Err(Error::SelfLoop { .. })
        ));
        assert!(matches!(
            Graph::new(labels.clone(), vec![(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge { .. })
        ));
        assert!(matches!(
            Graph::new(labels, vec![(0, 2)]),
            Err(Error::VertexOutOfRange { .. })
        ));
    }

    #[test]
    fn min_degree_of_empty_graph_is_none() {
        let g = Graph::new(Vec::new(), Vec::new()).unwrap();
        assert_eq!(g.min_degree(), None);
        assert!(g.components().is_empty());
    }

    #[test]
    fn induced_subgraph_identity_and_empty() {
        let g = path(4);
        let all: Vec<u32> = (0..4).collect();
        assert_eq!(g.induced_subgraph(&all).unwrap(), g);
        let empty = g.induced_subgraph(&[]).unwrap();
        assert_eq!(empty.vertex_count(), 0);
        assert_eq!(empty.edge_count(), 0);
        assert!(g.induced_subgraph(&[7]).is_err());
    }

    #[test]
    fn neighborhood_of_full_set_is_empty() {
        let g = path(4);
        let all: Vec<u32> = (0..4).collect();
        assert!(g.neighborhood(&all).unwrap().is_empty());
        assert_eq!(g.neighborhood(&[1]).unwrap(), vec![0, 2]);
    }

    #[test]
    fn components_partition_the_vertex_set() {
        let labels = (0..5).map(|i| i.to_string()).collect();
        let g = Graph::new(labels, vec![(0, 1), (3, 4)]).unwrap();
        let comps = g.components();
        assert_eq!(comps, vec![vec![0, 1], vec![2], vec![3, 4]]);
        assert!(!g.is_connected());
    }

    #[test]
    fn without_edges_checks_membership() {
        let g = path(3);
        let h = g.without_edges(&[(1, 0)]).unwrap();
        assert_eq!(h.edge_count(), 1);
        assert_eq!(h.vertex_count(), 3);
        assert!(matches!(
            g.without_edges(&[(0, 2)]),
            Err(Error::EdgeNotInGraph { .. })
        ));
    }
}
