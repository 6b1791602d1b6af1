//! Exact minimum conditional cut search.
//!
//! The vertex oracle enumerates candidate removal sets in increasing size;
//! the edge oracle enumerates connected candidate sides X and scores their
//! edge boundary, which is exact because a minimum h-edge-cut always equals
//! the boundary of one component of the disconnected remainder. Results are
//! deterministic across worker counts: workers partition a fixed search
//! space, prune only against static bounds, and merge by (size, lexicographic
//! member list).

use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering};
use std::time::{Duration, Instant};

use super::bitgraph::{binomial, next_combination, set_bit, unrank_combination, BitGraph};
use super::flow;
use crate::cuts::{CutMembers, CutSpec};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Bounds on an oracle run: candidate sizes 0..max_cut_size-1 are searched,
/// optionally under a wall-clock limit, optionally on several workers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_cut_size: usize,
    pub time_limit: Option<Duration>,
    pub worker_count: usize,
}

impl SearchBudget {
    /// Search every candidate strictly below `max_cut_size`, unbounded time,
    /// one worker.
    pub fn below(max_cut_size: usize) -> Self {
        SearchBudget {
            max_cut_size,
            time_limit: None,
            worker_count: 1,
        }
    }

    pub fn with_time_limit(mut self, limit: Duration) -> Self {
        self.time_limit = Some(limit);
        self
    }

    pub fn with_workers(mut self, workers: usize) -> Self {
        self.worker_count = workers.max(1);
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OracleStatus {
    /// A minimum cut was found; `value` and `witness` are set and no valid
    /// cut of smaller size exists.
    ExactValue,
    /// Every candidate of size below `max_cut_size` was refuted.
    NoCutBelowBound,
    /// The time limit expired before the search completed.
    BudgetExhausted,
}

impl OracleStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            OracleStatus::ExactValue => "exact_value",
            OracleStatus::NoCutBelowBound => "no_cut_below_bound",
            OracleStatus::BudgetExhausted => "budget_exhausted",
        }
    }
}

/// Result of an exact minimum-conditional-cut search.
#[derive(Debug, Clone)]
pub struct OracleOutcome {
    pub status: OracleStatus,
    pub value: Option<usize>,
    pub witness: Option<CutSpec>,
    /// Candidates covered by completed search strata. Identical across runs
    /// and worker counts for completed searches.
    pub subsets_examined: u64,
    pub elapsed: Duration,
}

impl OracleOutcome {
    fn exhausted(examined: u64, start: Instant) -> Self {
        OracleOutcome {
            status: OracleStatus::BudgetExhausted,
            value: None,
            witness: None,
            subsets_examined: examined,
            elapsed: start.elapsed(),
        }
    }

    fn refuted(examined: u64, start: Instant) -> Self {
        OracleOutcome {
            status: OracleStatus::NoCutBelowBound,
            value: None,
            witness: None,
            subsets_examined: examined,
            elapsed: start.elapsed(),
        }
    }

    fn exact(members: CutMembers, h: u32, examined: u64, start: Instant) -> Self {
        OracleOutcome {
            status: OracleStatus::ExactValue,
            value: Some(members.len()),
            witness: Some(CutSpec {
                n: 0,
                h,
                anchor: None,
                members,
            }),
            subsets_examined: examined,
            elapsed: start.elapsed(),
        }
    }
}

const TIME_CHECK_STRIDE: u64 = 8192;

struct Clock {
    deadline: Option<Instant>,
    ticks: u64,
    stride: u64,
}

impl Clock {
    /// `words` is the bitset row width of the graph being searched; wide
    /// graphs pay more per candidate, so the deadline is polled more often.
    fn new(deadline: Option<Instant>, words: usize) -> Self {
        let stride = (TIME_CHECK_STRIDE / (words * words) as u64).max(1);
        Clock {
            deadline,
            ticks: 0,
            stride,
        }
    }

    /// Returns true when the deadline has passed (polled every few thousand
    /// calls to keep the hot loop cheap).
    fn expired(&mut self, abort: &AtomicBool) -> bool {
        self.ticks += 1;
        if !self.ticks.is_multiple_of(self.stride) {
            return false;
        }
        if abort.load(Ordering::Relaxed) {
            return true;
        }
        if let Some(d) = self.deadline {
            if Instant::now() >= d {
                abort.store(true, Ordering::Relaxed);
                return true;
            }
        }
        false
    }
}

// ---------------------------------------------------------------------------
// Vertex oracle: plain increasing-size subset enumeration.
// ---------------------------------------------------------------------------

struct VertexScratch {
    survivors: Vec<u64>,
    reached: Vec<u64>,
    frontier: Vec<u64>,
}

impl VertexScratch {
    fn new(words: usize) -> Self {
        VertexScratch {
            survivors: vec![0; words],
            reached: vec![0; words],
            frontier: vec![0; words],
        }
    }
}

/// True when removing `removed` disconnects the graph and leaves every
/// surviving vertex with degree at least h.
fn vertex_cut_is_valid(
    bg: &BitGraph,
    full: &[u64],
    removed: &[u32],
    h: u32,
    scratch: &mut VertexScratch,
) -> bool {
    scratch.survivors.copy_from_slice(full);
    for &v in removed {
        scratch.survivors[v as usize / 64] &= !(1u64 << (v % 64));
    }
    if bg.is_connected_within(
        &scratch.survivors,
        &mut scratch.reached,
        &mut scratch.frontier,
    ) {
        return false;
    }
    if h == 0 {
        return true;
    }
    for (w, &bits) in scratch.survivors.iter().enumerate() {
        let mut bits = bits;
        while bits != 0 {
            let v = w * 64 + bits.trailing_zeros() as usize;
            bits &= bits - 1;
            if bg.degree_in(v, &scratch.survivors) < h {
                return false;
            }
        }
    }
    true
}

enum StratumResult {
    Found(Vec<u32>),
    Refuted,
    TimedOut,
}

/// Scans a rank range of the size-k stratum; returns the first valid
/// candidate, which by lexicographic enumeration is also the smallest.
fn scan_rank_range(
    bg: &BitGraph,
    full: &[u64],
    h: u32,
    k: usize,
    ranks: std::ops::Range<u128>,
    deadline: Option<Instant>,
    abort: &AtomicBool,
) -> StratumResult {
    let v = bg.len() as u64;
    let mut members = unrank_combination(ranks.start, v, k as u64);
    let mut scratch = VertexScratch::new(bg.words());
    let mut clock = Clock::new(deadline, bg.words());
    let mut rank = ranks.start;
    while rank < ranks.end {
        if clock.expired(abort) {
            return StratumResult::TimedOut;
        }
        if vertex_cut_is_valid(bg, full, &members, h, &mut scratch) {
            return StratumResult::Found(members);
        }
        rank += 1;
        if rank < ranks.end && !next_combination(&mut members, v as u32) {
            break;
        }
    }
    StratumResult::Refuted
}

fn scan_stratum(
    bg: &BitGraph,
    full: &[u64],
    h: u32,
    k: usize,
    total: u128,
    budget: &SearchBudget,
    deadline: Option<Instant>,
) -> StratumResult {
    let abort = AtomicBool::new(false);
    let workers = budget.worker_count.clamp(1, 64);
    if workers == 1 || total < 2 * TIME_CHECK_STRIDE as u128 {
        return scan_rank_range(bg, full, h, k, 0..total, deadline, &abort);
    }
    let w = workers as u128;
    let results: Vec<StratumResult> = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..w)
            .map(|i| {
                let ranks = (total * i / w)..(total * (i + 1) / w);
                let abort = &abort;
                scope.spawn(move || scan_rank_range(bg, full, h, k, ranks, deadline, abort))
            })
            .collect();
        handles.into_iter().map(|j| j.join().unwrap()).collect()
    });
    // Ranges are rank-ordered, so the first worker with a find holds the
    // lexicographically smallest valid candidate.
    let mut timed_out = false;
    for r in results {
        match r {
            StratumResult::Found(m) => return StratumResult::Found(m),
            StratumResult::TimedOut => timed_out = true,
            StratumResult::Refuted => {}
        }
    }
    if timed_out {
        StratumResult::TimedOut
    } else {
        StratumResult::Refuted
    }
}

/// Exact minimum h-vertex-cut by exhaustive enumeration in increasing size.
///
/// Returns the first size admitting a valid cut together with the
/// lexicographically smallest witness of that size, or reports that every
/// candidate below the budget was refuted.
pub fn min_h_vertex_cut_exact(g: &Graph, h: u32, budget: &SearchBudget) -> Result<OracleOutcome> {
    if g.vertex_count() == 0 || !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let start = Instant::now();
    let deadline = budget.time_limit.map(|d| start + d);
    if budget.max_cut_size == 0 {
        return Ok(OracleOutcome::refuted(0, start));
    }
    let bg = BitGraph::from_graph(g);
    let full = bg.full_mask();
    let v = bg.len();
    // removing more than |V| - 2 vertices cannot leave a disconnected graph
    let kmax = (budget.max_cut_size - 1).min(v.saturating_sub(2));
    let mut examined: u64 = 0;
    for k in 0..=kmax {
        let total = binomial(v as u64, k as u64);
        match scan_stratum(&bg, &full, h, k, total, budget, deadline) {
            StratumResult::Found(members) => {
                examined = examined.saturating_add(total.min(u64::MAX as u128) as u64);
                return Ok(OracleOutcome::exact(
                    CutMembers::Vertices(members),
                    h,
                    examined,
                    start,
                ));
            }
            StratumResult::Refuted => {
                examined = examined.saturating_add(total.min(u64::MAX as u128) as u64);
            }
            StratumResult::TimedOut => {
                return Ok(OracleOutcome::exhausted(examined, start));
            }
        }
    }
    Ok(OracleOutcome::refuted(examined, start))
}

// ---------------------------------------------------------------------------
// Edge oracle: boundary-of-connected-side branch and bound.
// ---------------------------------------------------------------------------

struct EdgeSearch<'a> {
    bg: &'a BitGraph,
    words: usize,
    h: u32,
    bound: usize,
    half: u64,
    deadline: Option<Instant>,
}

struct EdgeWorker {
    i_mask: Vec<u64>,
    o_mask: Vec<u64>,
    boundary: Vec<u64>,
    saved_boundary: Vec<u64>,
    full: Vec<u64>,
    complement: Vec<u64>,
    leaves: u64,
    best: Option<(usize, Vec<(u32, u32)>)>,
    clock: Clock,
    timed_out: bool,
}

impl EdgeWorker {
    fn new(search: &EdgeSearch, full: &[u64]) -> Self {
        let words = search.words;
        let depth = search.bg.len() + 1;
        EdgeWorker {
            i_mask: vec![0; words],
            o_mask: vec![0; words],
            boundary: vec![0; words],
            saved_boundary: vec![0; words * depth],
            full: full.to_vec(),
            complement: vec![0; words],
            leaves: 0,
            best: None,
            clock: Clock::new(search.deadline, search.words),
            timed_out: false,
        }
    }

    fn evaluate_leaf(&mut self, search: &EdgeSearch, committed: usize) {
        self.leaves += 1;
        let bg = search.bg;
        let h = search.h;
        for w in 0..search.words {
            self.complement[w] = self.full[w] & !self.i_mask[w];
        }
        if h > 0 {
            for (w, &bits) in self.i_mask.iter().enumerate() {
                let mut bits = bits;
                while bits != 0 {
                    let v = w * 64 + bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    if bg.degree_in(v, &self.i_mask) < h {
                        return;
                    }
                }
            }
            for (w, &bits) in self.complement.iter().enumerate() {
                let mut bits = bits;
                while bits != 0 {
                    let v = w * 64 + bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    if bg.degree_in(v, &self.complement) < h {
                        return;
                    }
                }
            }
        }
        let mut edges: Vec<(u32, u32)> = Vec::with_capacity(committed);
        for (w, &bits) in self.i_mask.iter().enumerate() {
            let mut bits = bits;
            while bits != 0 {
                let v = (w * 64 + bits.trailing_zeros() as usize) as u32;
                bits &= bits - 1;
                let row = bg.row(v as usize);
                for (i, (&r, &c)) in row.iter().zip(&self.complement).enumerate() {
                    let mut out = r & c;
                    while out != 0 {
                        let u = (i * 64 + out.trailing_zeros() as usize) as u32;
                        out &= out - 1;
                        edges.push((v.min(u), v.max(u)));
                    }
                }
            }
        }
        edges.sort_unstable();
        debug_assert_eq!(edges.len(), committed);
        let candidate = (edges.len(), edges);
        match &self.best {
            Some(b) if *b <= candidate => {}
            _ => self.best = Some(candidate),
        }
    }

    fn dfs(&mut self, search: &EdgeSearch, committed: usize, size: u64, depth: usize, abort: &AtomicBool) {
        if self.timed_out || self.clock.expired(abort) {
            self.timed_out = true;
            return;
        }
        let bg = search.bg;
        let words = search.words;
        // next undecided vertex adjacent to the included side
        let mut branch = None;
        for w in 0..words {
            let cand = self.boundary[w] & !self.i_mask[w] & !self.o_mask[w];
            if cand != 0 {
                branch = Some(w * 64 + cand.trailing_zeros() as usize);
                break;
            }
        }
        let Some(u) = branch else {
            self.evaluate_leaf(search, committed);
            return;
        };
        let row = bg.row(u);

        // include u: it joins the candidate side, paying for its edges into
        // the excluded side
        if size < search.half {
            let into_o: usize = row
                .iter()
                .zip(&self.o_mask)
                .map(|(a, b)| (a & b).count_ones() as usize)
                .sum();
            if committed + into_o <= search.bound {
                let save = &mut self.saved_boundary[depth * words..(depth + 1) * words];
                save.copy_from_slice(&self.boundary);
                set_bit(&mut self.i_mask, u);
                for (b, &r) in self.boundary.iter_mut().zip(row) {
                    *b |= r;
                }
                self.dfs(search, committed + into_o, size + 1, depth + 1, abort);
                let save = &self.saved_boundary[depth * words..(depth + 1) * words];
                self.boundary.copy_from_slice(save);
                super::bitgraph::clear_bit(&mut self.i_mask, u);
            }
        }

        // exclude u: its edges into the included side become cut edges
        let into_i: usize = row
            .iter()
            .zip(&self.i_mask)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum();
        if committed + into_i <= search.bound {
            set_bit(&mut self.o_mask, u);
            self.dfs(search, committed + into_i, size, depth + 1, abort);
            super::bitgraph::clear_bit(&mut self.o_mask, u);
        }
    }

    /// Explores every connected candidate side whose minimum vertex is
    /// `root`, with all smaller vertices excluded.
    fn run_root(&mut self, search: &EdgeSearch, root: usize, abort: &AtomicBool) {
        if search.half == 0 {
            return;
        }
        self.i_mask.fill(0);
        self.o_mask.fill(0);
        set_bit(&mut self.i_mask, root);
        for v in 0..root {
            set_bit(&mut self.o_mask, v);
        }
        self.boundary.copy_from_slice(search.bg.row(root));
        let committed: usize = search
            .bg
            .row(root)
            .iter()
            .zip(&self.o_mask)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum();
        if committed <= search.bound {
            self.dfs(search, committed, 1, 0, abort);
        }
    }
}

/// Exact minimum h-edge-cut: enumerates connected candidate sides X with
/// |boundary| within budget, requiring minimum degree h on both sides of the
/// split, and returns the smallest boundary found. Falls back to max-flow
/// for h = 0, where the conditional constraint is vacuous.
pub fn min_h_edge_cut_exact(g: &Graph, h: u32, budget: &SearchBudget) -> Result<OracleOutcome> {
    if g.vertex_count() == 0 || !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let start = Instant::now();
    if budget.max_cut_size == 0 || g.vertex_count() < 2 {
        return Ok(OracleOutcome::refuted(0, start));
    }

    if h == 0 {
        let (lambda, cut) = flow::edge_connectivity_with_cut(g);
        let examined = (g.vertex_count() - 1) as u64;
        if lambda < budget.max_cut_size {
            return Ok(OracleOutcome::exact(
                CutMembers::Edges(cut),
                h,
                examined,
                start,
            ));
        }
        return Ok(OracleOutcome::refuted(examined, start));
    }

    let deadline = budget.time_limit.map(|d| start + d);
    let bg = BitGraph::from_graph(g);
    let full = bg.full_mask();
    let search = EdgeSearch {
        bg: &bg,
        words: bg.words(),
        h,
        bound: budget.max_cut_size - 1,
        half: (bg.len() / 2) as u64,
        deadline,
    };
    let abort = AtomicBool::new(false);
    let workers = budget.worker_count.clamp(1, 64).min(bg.len());
    let next_root = AtomicUsize::new(0);

    fn run_worker(
        search: &EdgeSearch,
        full: &[u64],
        next_root: &AtomicUsize,
        abort: &AtomicBool,
    ) -> EdgeWorker {
        let mut state = EdgeWorker::new(search, full);
        loop {
            let root = next_root.fetch_add(1, Ordering::Relaxed);
            if root >= search.bg.len() || state.timed_out {
                break;
            }
            state.run_root(search, root, abort);
        }
        state
    }

    let states: Vec<EdgeWorker> = if workers <= 1 {
        vec![run_worker(&search, &full, &next_root, &abort)]
    } else {
        std::thread::scope(|scope| {
            let handles: Vec<_> = (0..workers)
                .map(|_| {
                    let (search, full, next_root, abort) = (&search, &full, &next_root, &abort);
                    scope.spawn(move || run_worker(search, full, next_root, abort))
                })
                .collect();
            handles.into_iter().map(|j| j.join().unwrap()).collect()
        })
    };

    let timed_out = states.iter().any(|s| s.timed_out);
    let leaves: u64 = states.iter().map(|s| s.leaves).sum();
    let best = states
        .into_iter()
        .filter_map(|s| s.best)
        .min();
    if timed_out {
        return Ok(OracleOutcome::exhausted(leaves, start));
    }
    match best {
        Some((_, edges)) => Ok(OracleOutcome::exact(
            CutMembers::Edges(edges),
            h,
            leaves,
            start,
        )),
        None => Ok(OracleOutcome::refuted(leaves, start)),
    }
}

#[cfg(test)]
mod tests {
    use super::super::bitgraph::{first_bit, popcount, test_bit};
    use super::*;
    use crate::topology::{build_hcn, build_hypercube};

    #[test]
    fn vertex_oracle_on_the_smallest_network() {
        // HCN_1 is a 4-cycle: connectivity 2
        let g = build_hcn(1).unwrap();
        let out = min_h_vertex_cut_exact(&g, 0, &SearchBudget::below(4)).unwrap();
        assert_eq!(out.status, OracleStatus::ExactValue);
        assert_eq!(out.value, Some(2));
        let w = out.witness.unwrap();
        assert_eq!(w.size(), 2);
    }

    #[test]
    fn vertex_oracle_refutes_below_the_true_value() {
        let g = build_hcn(2).unwrap();
        let out = min_h_vertex_cut_exact(&g, 0, &SearchBudget::below(3)).unwrap();
        assert_eq!(out.status, OracleStatus::NoCutBelowBound);
        assert_eq!(out.subsets_examined, 1 + 16 + 120);
    }

    #[test]
    fn vertex_oracle_rejects_disconnected_input() {
        let g = Graph::new(
            vec!["a".into(), "b".into(), "c".into()],
            vec![(0, 1)],
        )
        .unwrap();
        assert_eq!(
            min_h_vertex_cut_exact(&g, 0, &SearchBudget::below(2)).unwrap_err(),
            Error::Disconnected
        );
    }

    #[test]
    fn vertex_oracle_zero_budget_is_a_trivial_refutation() {
        let g = build_hcn(1).unwrap();
        let out = min_h_vertex_cut_exact(&g, 0, &SearchBudget::below(0)).unwrap();
        assert_eq!(out.status, OracleStatus::NoCutBelowBound);
        assert_eq!(out.subsets_examined, 0);
    }

    #[test]
    fn edge_oracle_flow_fallback_matches_cycle_connectivity() {
        let g = build_hcn(1).unwrap();
        let out = min_h_edge_cut_exact(&g, 0, &SearchBudget::below(5)).unwrap();
        assert_eq!(out.status, OracleStatus::ExactValue);
        assert_eq!(out.value, Some(2));
    }

    #[test]
    fn edge_oracle_branch_and_bound_small_cases() {
        // lambda^1(HCN_1): both sides of C_4 must keep degree 1: opposite
        // edges, cut size 2
        let g = build_hcn(1).unwrap();
        let out = min_h_edge_cut_exact(&g, 1, &SearchBudget::below(5)).unwrap();
        assert_eq!(out.status, OracleStatus::ExactValue);
        assert_eq!(out.value, Some(2));

        // lambda^1(Q_3) = 4
        let q3 = build_hypercube(3).unwrap();
        let out = min_h_edge_cut_exact(&q3, 1, &SearchBudget::below(13)).unwrap();
        assert_eq!(out.value, Some(4));
    }

    #[test]
    fn edge_oracle_refutation() {
        let g = build_hcn(2).unwrap();
        let out = min_h_edge_cut_exact(&g, 1, &SearchBudget::below(4)).unwrap();
        assert_eq!(out.status, OracleStatus::NoCutBelowBound);
    }

    #[test]
    fn oracle_times_out_on_a_tiny_limit() {
        let g = build_hcn(3).unwrap();
        let budget = SearchBudget::below(64).with_time_limit(Duration::from_millis(1));
        let out = min_h_vertex_cut_exact(&g, 3, &budget).unwrap();
        assert_eq!(out.status, OracleStatus::BudgetExhausted);
    }

    #[test]
    fn worker_counts_do_not_change_outcomes() {
        let g = build_hcn(2).unwrap();
        for h in 0..=1u32 {
            let a = min_h_vertex_cut_exact(&g, h, &SearchBudget::below(5)).unwrap();
            let b =
                min_h_vertex_cut_exact(&g, h, &SearchBudget::below(5).with_workers(8)).unwrap();
            assert_eq!(a.status, b.status);
            assert_eq!(a.value, b.value);
            assert_eq!(a.subsets_examined, b.subsets_examined);
            assert_eq!(
                a.witness.map(|w| w.members),
                b.witness.map(|w| w.members)
            );
        }
        for h in 1..=2u32 {
            let a = min_h_edge_cut_exact(&g, h, &SearchBudget::below(5)).unwrap();
            let b = min_h_edge_cut_exact(&g, h, &SearchBudget::below(5).with_workers(8)).unwrap();
            assert_eq!(a.status, b.status);
            assert_eq!(a.value, b.value);
            assert_eq!(a.subsets_examined, b.subsets_examined);
            assert_eq!(
                a.witness.map(|w| w.members),
                b.witness.map(|w| w.members)
            );
        }
    }

    #[test]
    fn no_cut_exists_in_a_complete_graph() {
        let labels: Vec<String> = (0..5).map(|i| i.to_string()).collect();
        let mut edges = Vec::new();
        for u in 0..5u32 {
            for v in u + 1..5 {
                edges.push((u, v));
            }
        }
        let k5 = Graph::new(labels, edges).unwrap();
        let out = min_h_vertex_cut_exact(&k5, 0, &SearchBudget::below(4)).unwrap();
        assert_eq!(out.status, OracleStatus::NoCutBelowBound);
    }

    #[test]
    fn first_bit_and_popcount_cover_multiword_masks() {
        let mut m = vec![0u64; 2];
        assert_eq!(first_bit(&m), None);
        set_bit(&mut m, 70);
        assert_eq!(first_bit(&m), Some(70));
        assert_eq!(popcount(&m), 1);
        assert!(test_bit(&m, 70));
        assert_eq!(unrank_combination(0, 70, 2), vec![0, 1]);
    }
}
