use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::word::BinaryWord;

/// Largest dimension accepted by the builders. HCN_12 already has 4^12
/// vertices; anything beyond that is outside desk scale.
pub const MAX_NET_DIM: u32 = 12;

/// A vertex (x, y) of the hierarchical cubic network: `x` names the block
/// (the copy of Q_n the vertex lives in), `y` is the address inside it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HcnVertex {
    x: BinaryWord,
    y: BinaryWord,
}

impl HcnVertex {
    pub fn new(x: BinaryWord, y: BinaryWord) -> Result<Self> {
        if x.len() != y.len() {
            return Err(Error::WordLengthMismatch {
                a: x.len(),
                b: y.len(),
            });
        }
        Ok(HcnVertex { x, y })
    }

    pub fn block(&self) -> BinaryWord {
        self.x
    }

    pub fn address(&self) -> BinaryWord {
        self.y
    }

    pub fn dimension(&self) -> u32 {
        self.x.len()
    }

    /// Flat index: `value(x) * 2^n + value(y)`, bits most-significant-first.
    pub fn index(&self) -> u32 {
        (self.x.value() << self.x.len()) | self.y.value()
    }

    pub fn from_index(n: u32, index: u32) -> Result<Self> {
        let count = hcn_vertex_count(n)?;
        if index as usize >= count {
            return Err(Error::VertexOutOfRange {
                index,
                count,
            });
        }
        let mask = (1u32 << n) - 1;
        Ok(HcnVertex {
            x: BinaryWord::new(n, index >> n)?,
            y: BinaryWord::new(n, index & mask)?,
        })
    }

    /// Label of the form "x|y", bits left to right.
    pub fn label(&self) -> String {
        format!("{}|{}", self.x, self.y)
    }
}

/// The unique cross-block neighbor of (x, y): (y, x) when x != y, and
/// the complemented pair (x̄, ȳ) when x = y.
pub fn external_neighbor(v: HcnVertex) -> HcnVertex {
    if v.x != v.y {
        HcnVertex { x: v.y, y: v.x }
    } else {
        HcnVertex {
            x: v.x.complement(),
            y: v.y.complement(),
        }
    }
}

fn check_dim(n: u32) -> Result<()> {
    if n == 0 {
        return Err(Error::DimensionZero);
    }
    if n > MAX_NET_DIM {
        return Err(Error::DimensionTooLarge { n, max: MAX_NET_DIM });
    }
    Ok(())
}

pub fn hypercube_vertex_count(n: u32) -> Result<usize> {
    check_dim(n)?;
    Ok(1usize << n)
}

pub fn hcn_vertex_count(n: u32) -> Result<usize> {
    check_dim(n)?;
    Ok(1usize << (2 * n))
}

/// The n-dimensional hypercube Q_n: all n-bit words, with an edge between
/// two words exactly when they differ in one coordinate.
pub fn build_hypercube(n: u32) -> Result<Graph> {
    let count = hypercube_vertex_count(n)?;
    let labels = (0..count as u32)
        .map(|v| BinaryWord::new(n, v).unwrap().to_string())
        .collect();
    let mut edges = Vec::with_capacity(count * n as usize / 2);
    for v in 0..count as u32 {
        for b in 0..n {
            let u = v ^ (1u32 << b);
            if v < u {
                edges.push((v, u));
            }
        }
    }
    Graph::new(labels, edges)
}

/// The hierarchical cubic network HCN_n: 2^n disjoint copies of Q_n (the
/// blocks), joined by one crossing edge per vertex. Vertex (x, y) of block
/// xQ_n is linked to its in-block Hamming-distance-1 neighbors and to its
/// external neighbor.
pub fn build_hcn(n: u32) -> Result<Graph> {
    let count = hcn_vertex_count(n)?;
    let labels = (0..count as u32)
        .map(|i| HcnVertex::from_index(n, i).unwrap().label())
        .collect();
    let mut edges = Vec::with_capacity(count * (n as usize + 1) / 2);
    for i in 0..count as u32 {
        let v = HcnVertex::from_index(n, i)?;
        for b in 0..n {
            let j = i ^ (1u32 << b); // flip a bit of y, block unchanged
            if i < j {
                edges.push((i, j));
            }
        }
        let ext = external_neighbor(v).index();
        if i < ext {
            edges.push((i, ext));
        }
    }
    Graph::new(labels, edges)
}

/// True when an edge of HCN_n joins two different blocks.
pub fn is_crossing_edge(n: u32, u: u32, v: u32) -> bool {
    (u >> n) != (v >> n)
}

/// All crossing edges of HCN_n as normalized sorted pairs.
pub fn crossing_edges(n: u32) -> Result<Vec<(u32, u32)>> {
    let count = hcn_vertex_count(n)?;
    let mut out = Vec::with_capacity(count / 2);
    for i in 0..count as u32 {
        let ext = external_neighbor(HcnVertex::from_index(n, i)?).index();
        if i < ext {
            out.push((i, ext));
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// Number of crossing edges between two distinct blocks: 2 when the block
/// ids are complementary, otherwise 1.
pub fn crossing_edge_count(a: BinaryWord, b: BinaryWord) -> Result<u32> {
    if a.len() != b.len() {
        return Err(Error::WordLengthMismatch {
            a: a.len(),
            b: b.len(),
        });
    }
    if a == b {
        return Err(Error::SameBlock);
    }
    Ok(if b == a.complement() { 2 } else { 1 })
}

/// The quotient of HCN_n by its blocks: every block contracted to a single
/// vertex, keeping the crossing-edge multiplicity per block pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockQuotient {
    block_count: usize,
    multiplicity: BTreeMap<(u32, u32), u32>,
}

impl BlockQuotient {
    pub fn block_count(&self) -> usize {
        self.block_count
    }

    /// Multiplicities keyed by normalized `(min, max)` block-id pairs.
    pub fn multiplicities(&self) -> &BTreeMap<(u32, u32), u32> {
        &self.multiplicity
    }

    pub fn multiplicity(&self, a: u32, b: u32) -> u32 {
        let key = (a.min(b), a.max(b));
        self.multiplicity.get(&key).copied().unwrap_or(0)
    }

    pub fn total_multiplicity(&self) -> u32 {
        self.multiplicity.values().sum()
    }
}

/// Contracts each block of HCN_n to a vertex by counting the crossing edges
/// of the built network per block pair.
pub fn block_quotient(n: u32) -> Result<BlockQuotient> {
    let mut multiplicity = BTreeMap::new();
    for (u, v) in crossing_edges(n)? {
        let (a, b) = (u >> n, v >> n);
        debug_assert_ne!(a, b);
        let key = (a.min(b), a.max(b));
        *multiplicity.entry(key).or_insert(0) += 1;
    }
    Ok(BlockQuotient {
        block_count: 1usize << n,
        multiplicity,
    })
}

/// Result of splitting a hypercube along one coordinate: the two induced
/// halves and the perfect matching joining them, in Q_n's own index space.
pub type HypercubeSplit = (Graph, Graph, Vec<(u32, u32)>);

/// Splits Q_n along coordinate `i` (1-based, leftmost = 1) into the two
/// induced (n-1)-cubes L (bit i = 0) and R (bit i = 1) plus the perfect
/// matching between them.
pub fn split_hypercube(n: u32, i: u32) -> Result<HypercubeSplit> {
    check_dim(n)?;
    if n < 2 {
        return Err(Error::DimensionTooSmall { n, min: 2 });
    }
    if i == 0 || i > n {
        return Err(Error::CoordinateOutOfRange { i, n });
    }
    let g = build_hypercube(n)?;
    let bit = 1u32 << (n - i);
    let count = 1u32 << n;
    let left: Vec<u32> = (0..count).filter(|v| v & bit == 0).collect();
    let right: Vec<u32> = (0..count).filter(|v| v & bit != 0).collect();
    let matching = left.iter().map(|&v| (v, v | bit)).collect();
    Ok((
        g.induced_subgraph(&left)?,
        g.induced_subgraph(&right)?,
        matching,
    ))
}
