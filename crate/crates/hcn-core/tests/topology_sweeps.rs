//! Exhaustive structural sweeps over the desk-scale dimension range.

mod common;

use std::collections::BTreeMap;
use std::str::FromStr;

use hcn_core::analysis::classical_connectivity;
use hcn_core::cuts::{hcn_edge_cut, hcn_vertex_cut, hypercube_edge_cut, hypercube_vertex_cut};
use hcn_core::{
    block_quotient, build_hcn, build_hypercube, crossing_edge_count, crossing_edges,
    external_neighbor, split_hypercube, verify_h_cut, BinaryWord, HcnVertex,
};

#[test]
fn hcn_order_regularity_and_size() {
    for n in 1..=7u32 {
        let g = build_hcn(n).unwrap();
        let vertices = 1usize << (2 * n);
        assert_eq!(g.vertex_count(), vertices);
        assert_eq!(g.edge_count(), vertices * (n as usize + 1) / 2);
        let adj = g.adjacency();
        assert!(adj.iter().all(|r| r.len() == n as usize + 1), "n={n}");
        assert!(g.is_connected());
    }
}

#[test]
fn crossing_edges_form_a_perfect_matching() {
    for n in 1..=7u32 {
        let crossing = crossing_edges(n).unwrap();
        let vertices = 1usize << (2 * n);
        assert_eq!(crossing.len(), vertices / 2, "n={n}");
        let mut incident = vec![0u32; vertices];
        for (u, v) in crossing {
            incident[u as usize] += 1;
            incident[v as usize] += 1;
        }
        assert!(incident.iter().all(|&c| c == 1), "n={n}");
    }
}

#[test]
fn external_neighbor_involution_without_fixed_points() {
    for n in 1..=7u32 {
        for i in 0..(1u32 << (2 * n)) {
            let v = HcnVertex::from_index(n, i).unwrap();
            let e = external_neighbor(v);
            assert_ne!(e, v);
            assert_eq!(external_neighbor(e), v);
        }
    }
}

#[test]
fn block_pair_crossing_counts_match_the_complement_rule() {
    for n in 1..=5u32 {
        let per_pair: BTreeMap<(u32, u32), u32> = crossing_edges(n)
            .unwrap()
            .into_iter()
            .map(|(u, v)| {
                let (a, b) = (u >> n, v >> n);
                (a.min(b), a.max(b))
            })
            .fold(BTreeMap::new(), |mut m, k| {
                *m.entry(k).or_insert(0) += 1;
                m
            });
        for a in 0..(1u32 << n) {
            for b in a + 1..(1u32 << n) {
                let wa = BinaryWord::new(n, a).unwrap();
                let wb = BinaryWord::new(n, b).unwrap();
                let expect = crossing_edge_count(wa, wb).unwrap();
                assert_eq!(
                    per_pair.get(&(a, b)).copied().unwrap_or(0),
                    expect,
                    "n={n} pair=({a},{b})"
                );
            }
        }
    }
}

#[test]
fn block_quotient_is_complete_plus_a_matching() {
    for n in 1..=5u32 {
        let q = block_quotient(n).unwrap();
        let blocks = 1u32 << n;
        assert_eq!(q.block_count(), blocks as usize);
        let full_mask = blocks - 1;
        let mut pairs = 0usize;
        for a in 0..blocks {
            for b in a + 1..blocks {
                let expect = if b == a ^ full_mask { 2 } else { 1 };
                assert_eq!(q.multiplicity(a, b), expect, "n={n} pair=({a},{b})");
                pairs += 1;
            }
        }
        assert_eq!(q.multiplicities().len(), pairs);
    }
}

#[test]
fn split_halves_look_like_smaller_cubes() {
    for n in 2..=6u32 {
        let expect_edges = (1usize << (n - 1)) * (n as usize - 1) / 2;
        for i in 1..=n {
            let (l, r, m) = split_hypercube(n, i).unwrap();
            for half in [&l, &r] {
                assert_eq!(half.vertex_count(), 1 << (n - 1));
                assert_eq!(half.edge_count(), expect_edges);
                let adj = half.adjacency();
                assert!(adj.iter().all(|row| row.len() == n as usize - 1));
            }
            // the matching covers every vertex exactly once
            assert_eq!(m.len(), 1 << (n - 1));
            let mut covered = vec![0u32; 1 << n];
            for (u, v) in m {
                covered[u as usize] += 1;
                covered[v as usize] += 1;
            }
            assert!(covered.iter().all(|&c| c == 1));
        }
    }
}

#[test]
fn constructed_cuts_validate_across_the_sweep_range() {
    for n in 1..=7u32 {
        let g = build_hcn(n).unwrap();
        for h in 0..n {
            let expect = (1u64 << h) * (n as u64 + 1 - h as u64);
            let cut = hcn_vertex_cut(n, h, None).unwrap();
            assert_eq!(cut.size() as u64, expect, "vertex n={n} h={h}");
            assert!(
                verify_h_cut(&g, &cut, h).unwrap().is_valid_h_cut,
                "vertex n={n} h={h}"
            );
        }
        for h in 0..=n {
            let expect = (1u64 << h) * (n as u64 + 1 - h as u64);
            let cut = hcn_edge_cut(n, h, None).unwrap();
            assert_eq!(cut.size() as u64, expect, "edge n={n} h={h}");
            assert!(
                verify_h_cut(&g, &cut, h).unwrap().is_valid_h_cut,
                "edge n={n} h={h}"
            );
        }
    }
}

#[test]
fn constructed_cut_touches_other_blocks_at_most_once() {
    for n in 1..=7u32 {
        for h in 0..n {
            let cut = hcn_vertex_cut(n, h, None).unwrap();
            let anchor = cut.anchor.unwrap().value();
            let mut per_block = BTreeMap::new();
            for &v in cut.vertices().unwrap() {
                *per_block.entry(v >> n).or_insert(0u32) += 1;
            }
            for (block, count) in per_block {
                if block != anchor {
                    assert!(count <= 1, "n={n} h={h} block={block}");
                }
            }
        }
    }
}

#[test]
fn hypercube_subcube_cuts_validate_over_their_ranges() {
    for n in 2..=7u32 {
        let g = build_hypercube(n).unwrap();
        for h in 0..=n - 2 {
            let expect = (1u64 << h) * (n as u64 - h as u64);
            let cut = hypercube_vertex_cut(n, h).unwrap();
            assert_eq!(cut.size() as u64, expect);
            assert!(
                verify_h_cut(&g, &cut, h).unwrap().is_valid_h_cut,
                "q vertex n={n} h={h}"
            );
        }
        for h in 0..n {
            let expect = (1u64 << h) * (n as u64 - h as u64);
            let cut = hypercube_edge_cut(n, h).unwrap();
            assert_eq!(cut.size() as u64, expect);
            assert!(
                verify_h_cut(&g, &cut, h).unwrap().is_valid_h_cut,
                "q edge n={n} h={h}"
            );
        }
    }
}

#[test]
fn minimum_classical_cut_reproduces_disconnection() {
    // the degree-0 construction has size kappa and disconnects, consistent
    // with the classical pair from max-flow
    for n in 1..=5u32 {
        let g = build_hcn(n).unwrap();
        let cut = hcn_vertex_cut(n, 0, None).unwrap();
        assert_eq!(cut.size(), n as usize + 1);
        let report = verify_h_cut(&g, &cut, 0).unwrap();
        assert!(report.is_valid_h_cut, "n={n}");
        assert_eq!(
            classical_connectivity(&g).unwrap(),
            (n as usize + 1, n as usize + 1)
        );
    }
}

#[test]
fn removing_a_block_crossing_set_splits_off_the_block() {
    // dropping the four crossing edges at block 00 of HCN_2 leaves that
    // 4-cycle and a 12-vertex remainder
    let g = build_hcn(2).unwrap();
    let block00: Vec<(u32, u32)> = crossing_edges(2)
        .unwrap()
        .into_iter()
        .filter(|&(u, v)| (u >> 2) == 0 || (v >> 2) == 0)
        .collect();
    assert_eq!(block00.len(), 4);
    let h = g.without_edges(&block00).unwrap();
    let sizes: Vec<usize> = h.components().iter().map(|c| c.len()).collect();
    let mut sizes = sizes;
    sizes.sort_unstable();
    assert_eq!(sizes, vec![4, 12]);
    // agrees with the union-find route
    let alive = vec![true; 16];
    assert_eq!(
        common::naive_component_sizes(&g, &alive, &block00),
        vec![4, 12]
    );
}

#[test]
fn block_neighborhood_in_hcn2_is_four_distinct_vertices() {
    let g = build_hcn(2).unwrap();
    let block00: Vec<u32> = (0..4).collect();
    let nb = g.neighborhood(&block00).unwrap();
    assert_eq!(nb.len(), 4);
}

#[test]
fn single_vertex_neighborhood_in_q3() {
    let g = build_hypercube(3).unwrap();
    assert_eq!(g.neighborhood(&[0]).unwrap(), vec![1, 2, 4]);
}

#[test]
fn induced_subcube_inside_a_block_is_a_square() {
    // the h=2 sub-cube of block 000 in HCN_3: a 4-cycle
    let n = 3u32;
    let g = build_hcn(n).unwrap();
    let x1 = BinaryWord::from_str("000").unwrap();
    let subcube: Vec<u32> = (0..1u32 << 2)
        .map(|t| {
            HcnVertex::new(x1, BinaryWord::new(n, t << 1).unwrap())
                .unwrap()
                .index()
        })
        .collect();
    let sub = g.induced_subgraph(&subcube).unwrap();
    assert_eq!(sub.vertex_count(), 4);
    assert_eq!(sub.edge_count(), 4);
    assert_eq!(sub.min_degree(), Some(2));
    assert!(sub.is_connected());
}
