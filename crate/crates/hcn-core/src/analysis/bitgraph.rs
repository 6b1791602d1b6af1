//! Word-packed adjacency used by the exact search engines.

use crate::graph::Graph;

/// Adjacency matrix stored as one bitset row per vertex.
#[derive(Debug, Clone)]
pub struct BitGraph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

impl BitGraph {
    pub fn from_graph(g: &Graph) -> Self {
        let n = g.vertex_count();
        let words = n.div_ceil(64).max(1);
        let mut rows = vec![0u64; n * words];
        for &(u, v) in g.edges() {
            rows[u as usize * words + v as usize / 64] |= 1u64 << (v % 64);
            rows[v as usize * words + u as usize / 64] |= 1u64 << (u % 64);
        }
        BitGraph { n, words, rows }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn words(&self) -> usize {
        self.words
    }

    pub fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    /// Mask with every vertex bit set.
    pub fn full_mask(&self) -> Vec<u64> {
        let mut m = vec![0u64; self.words];
        for v in 0..self.n {
            m[v / 64] |= 1u64 << (v % 64);
        }
        m
    }

    /// Degree of `v` restricted to the vertices of `mask`.
    pub fn degree_in(&self, v: usize, mask: &[u64]) -> u32 {
        self.row(v)
            .iter()
            .zip(mask)
            .map(|(a, b)| (a & b).count_ones())
            .sum()
    }

    /// True when the vertices of `mask` induce a connected subgraph
    /// (the empty and singleton masks count as connected). `reached` and
    /// `frontier` are caller-provided scratch of `words` length.
    pub fn is_connected_within(
        &self,
        mask: &[u64],
        reached: &mut [u64],
        frontier: &mut [u64],
    ) -> bool {
        let total = popcount(mask);
        if total <= 1 {
            return true;
        }
        let start = first_bit(mask).unwrap();
        reached.fill(0);
        frontier.fill(0);
        set_bit(reached, start);
        set_bit(frontier, start);
        let mut seen = 1u64;
        loop {
            let mut advanced = false;
            for w in 0..self.words {
                let mut bits = frontier[w];
                frontier[w] = 0;
                while bits != 0 {
                    let b = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    let u = w * 64 + b;
                    let row = self.row(u);
                    for i in 0..self.words {
                        let fresh = row[i] & mask[i] & !reached[i];
                        if fresh != 0 {
                            reached[i] |= fresh;
                            frontier[i] |= fresh;
                            seen += u64::from(fresh.count_ones());
                            advanced = true;
                        }
                    }
                }
            }
            if !advanced {
                break;
            }
        }
        seen == total
    }
}

pub fn popcount(mask: &[u64]) -> u64 {
    mask.iter().map(|w| u64::from(w.count_ones())).sum()
}

pub fn first_bit(mask: &[u64]) -> Option<usize> {
    for (i, w) in mask.iter().enumerate() {
        if *w != 0 {
            return Some(i * 64 + w.trailing_zeros() as usize);
        }
    }
    None
}

pub fn set_bit(mask: &mut [u64], v: usize) {
    mask[v / 64] |= 1u64 << (v % 64);
}

pub fn clear_bit(mask: &mut [u64], v: usize) {
    mask[v / 64] &= !(1u64 << (v % 64));
}

pub fn test_bit(mask: &[u64], v: usize) -> bool {
    mask[v / 64] & (1u64 << (v % 64)) != 0
}

/// Binomial coefficient in u128, saturating on overflow.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul((n - i) as u128) / (i + 1) as u128;
    }
    acc
}

/// The combination of rank `rank` (lexicographic order) among k-subsets of
/// 0..n, as an ascending index vector.
pub fn unrank_combination(mut rank: u128, n: u64, k: u64) -> Vec<u32> {
    let mut out = Vec::with_capacity(k as usize);
    let mut next = 0u64;
    let mut remaining = k;
    while remaining > 0 {
        let with_next = binomial(n - next - 1, remaining - 1);
        if rank < with_next {
            out.push(next as u32);
            remaining -= 1;
        } else {
            rank -= with_next;
        }
        next += 1;
    }
    out
}

/// Advances `c` to the next k-combination of 0..n in lexicographic order.
/// Returns false when `c` was the last one.
pub fn next_combination(c: &mut [u32], n: u32) -> bool {
    let k = c.len();
    if k == 0 {
        return false;
    }
    let mut i = k - 1;
    loop {
        if c[i] < n - (k - i) as u32 {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
        if i == 0 {
            return false;
        }
        i -= 1;
    }
}
