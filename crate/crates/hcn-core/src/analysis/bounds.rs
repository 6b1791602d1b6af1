//! Exhaustive checkers for two structural bounds on hypercube subgraphs:
//! any induced subgraph X of Q_n with minimum degree h has at least 2^h
//! vertices, and together with its neighborhood covers at least 2^h(n - h)
//! vertices. Both are swept over every non-empty vertex subset, so they are
//! limited to small n.

use crate::error::{Error, Result};
use crate::topology::build_hypercube;

/// Largest dimension the full-subset sweeps accept (2^16 subsets at n = 4).
pub const MAX_EXHAUSTIVE_N: u32 = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OrderBoundCheck {
    /// No qualifying subset violated |X| >= 2^h.
    pub holds: bool,
    /// Some qualifying subset achieved |X| = 2^h exactly.
    pub tight: bool,
    /// Subsets with minimum induced degree >= h.
    pub qualifying_subsets: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExpansionBoundCheck {
    /// No qualifying subset violated |X| + |N(X)| >= 2^h(n - h).
    pub holds: bool,
    /// Smallest |X| + |N(X)| observed over qualifying subsets.
    pub min_observed: Option<u32>,
    /// The bound 2^h(n - h).
    pub bound: u32,
    pub qualifying_subsets: u64,
}

fn adjacency_masks(n: u32) -> Result<Vec<u32>> {
    if n == 0 {
        return Err(Error::DimensionZero);
    }
    if n > MAX_EXHAUSTIVE_N {
        return Err(Error::ExhaustiveRangeExceeded {
            n,
            max: MAX_EXHAUSTIVE_N,
        });
    }
    let g = build_hypercube(n)?;
    let mut adj = vec![0u32; g.vertex_count()];
    for &(u, v) in g.edges() {
        adj[u as usize] |= 1 << v;
        adj[v as usize] |= 1 << u;
    }
    Ok(adj)
}

fn min_induced_degree(adj: &[u32], subset: u32) -> u32 {
    let mut min = u32::MAX;
    let mut bits = subset;
    while bits != 0 {
        let v = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        min = min.min((adj[v] & subset).count_ones());
    }
    min
}

/// Sweeps every non-empty X in Q_n: whenever the induced minimum degree is
/// at least h, asserts |X| >= 2^h. Also reports whether the bound is tight.
pub fn check_subcube_order_bound(n: u32, h: u32) -> Result<OrderBoundCheck> {
    if h > n {
        return Err(Error::HOutOfRange { h, lo: 0, hi: n });
    }
    let adj = adjacency_masks(n)?;
    let count = adj.len() as u32;
    let floor = 1u32 << h;
    let mut holds = true;
    let mut tight = false;
    let mut qualifying = 0u64;
    for subset in 1u32..(1u32 << count) {
        if min_induced_degree(&adj, subset) < h {
            continue;
        }
        qualifying += 1;
        let size = subset.count_ones();
        if size < floor {
            holds = false;
        }
        if size == floor {
            tight = true;
        }
    }
    Ok(OrderBoundCheck {
        holds,
        tight,
        qualifying_subsets: qualifying,
    })
}

/// Sweeps every non-empty X in Q_n with induced minimum degree at least h
/// and asserts |X| + |N(X)| >= 2^h(n - h), reporting the minimum observed.
pub fn check_neighborhood_expansion_bound(n: u32, h: u32) -> Result<ExpansionBoundCheck> {
    if h + 1 > n {
        return Err(Error::HOutOfRange {
            h,
            lo: 0,
            hi: n.saturating_sub(1),
        });
    }
    let adj = adjacency_masks(n)?;
    let count = adj.len() as u32;
    let bound = (1u32 << h) * (n - h);
    let mut min_observed: Option<u32> = None;
    let mut qualifying = 0u64;
    for subset in 1u32..(1u32 << count) {
        if min_induced_degree(&adj, subset) < h {
            continue;
        }
        qualifying += 1;
        let mut reach = 0u32;
        let mut bits = subset;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            reach |= adj[v];
        }
        let value = subset.count_ones() + (reach & !subset).count_ones();
        min_observed = Some(min_observed.map_or(value, |m| m.min(value)));
    }
    Ok(ExpansionBoundCheck {
        holds: min_observed.is_none_or(|m| m >= bound),
        min_observed,
        bound,
        qualifying_subsets: qualifying,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_bound_tight_at_a_square_face() {
        let r = check_subcube_order_bound(3, 2).unwrap();
        assert!(r.holds);
        assert!(r.tight);
    }

    #[test]
    fn order_bound_trivial_cases() {
        let r = check_subcube_order_bound(4, 0).unwrap();
        assert!(r.holds);
        assert!(r.tight);
        // h = n: only the whole cube qualifies
        let r = check_subcube_order_bound(4, 4).unwrap();
        assert!(r.holds);
        assert!(r.tight);
        assert_eq!(r.qualifying_subsets, 1);
    }

    #[test]
    fn order_bound_range_checks() {
        assert!(matches!(
            check_subcube_order_bound(5, 0),
            Err(Error::ExhaustiveRangeExceeded { .. })
        ));
        assert!(matches!(
            check_subcube_order_bound(3, 4),
            Err(Error::HOutOfRange { .. })
        ));
    }

    #[test]
    fn expansion_bound_holds_on_small_cubes() {
        for n in 1..=3u32 {
            for h in 0..n {
                let r = check_neighborhood_expansion_bound(n, h).unwrap();
                assert!(r.holds, "violated at n={n} h={h}");
                assert!(r.min_observed.unwrap() >= r.bound);
            }
        }
    }

    #[test]
    fn expansion_bound_rejects_h_equal_n() {
        assert!(matches!(
            check_neighborhood_expansion_bound(3, 3),
            Err(Error::HOutOfRange { .. })
        ));
    }

    #[test]
    fn expansion_minimum_for_h_zero_is_degree_plus_one() {
        // a singleton has 1 + n reachable vertices; nothing smaller qualifies
        for n in 1..=4u32 {
            let r = check_neighborhood_expansion_bound(n, 0).unwrap();
            assert_eq!(r.min_observed, Some(n + 1));
        }
    }
}
