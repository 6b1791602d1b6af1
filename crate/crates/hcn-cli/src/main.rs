//! hcnlab: build hierarchical cubic networks and hypercubes, construct
//! their minimum conditional cuts, and verify the closed-form h-super
//! connectivity values by exhaustive search.
//!
//! Exit codes: 0 success/confirmed, 1 I/O failure, 2 invalid configuration,
//! 3 search budget exhausted, 4 discrepancy between formula, construction,
//! and search.

mod render;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};

use hcn_core::analysis::{verify_exact_value, ExactValueReport, OracleStatus, SearchBudget};
use hcn_core::{
    block_quotient, crossing_edge_count, crossing_edges, verify_h_cut, BinaryWord, CutKind, Net,
    Verdict,
};

const EXIT_OK: u8 = 0;
const EXIT_IO: u8 = 1;
const EXIT_CONFIG: u8 = 2;
const EXIT_BUDGET: u8 = 3;
const EXIT_DISCREPANCY: u8 = 4;

#[derive(Parser)]
#[command(
    name = "hcnlab",
    about = "Hierarchical cubic network and hypercube conditional-connectivity lab",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum NetArg {
    Hcn,
    Q,
}

impl From<NetArg> for Net {
    fn from(v: NetArg) -> Net {
        match v {
            NetArg::Hcn => Net::Hcn,
            NetArg::Q => Net::Hypercube,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KindArg {
    Vertex,
    Edge,
}

impl From<KindArg> for CutKind {
    fn from(v: KindArg) -> CutKind {
        match v {
            KindArg::Vertex => CutKind::Vertex,
            KindArg::Edge => CutKind::Edge,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KindBothArg {
    Vertex,
    Edge,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GenFormat {
    Edgelist,
    Dot,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableFormat {
    Csv,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    Crossing,
    Quotient,
    OrderBound,
    ExpansionBound,
    All,
}

#[derive(Args, Clone)]
struct BudgetArgs {
    /// Wall-clock limit in seconds (overrides HCNLAB_TIME_LIMIT)
    #[arg(long)]
    time_limit: Option<u64>,
    /// Parallel workers inside oracle calls; results are identical for any
    /// worker count
    #[arg(long, default_value_t = 1)]
    workers: usize,
}

impl BudgetArgs {
    fn time_limit(&self) -> Option<Duration> {
        if let Some(seconds) = self.time_limit {
            return Some(Duration::from_secs(seconds));
        }
        std::env::var("HCNLAB_TIME_LIMIT")
            .ok()
            .and_then(|s| s.parse::<u64>().ok())
            .map(Duration::from_secs)
    }

    fn budget(&self, max_cut_size: usize) -> SearchBudget {
        let mut b = SearchBudget::below(max_cut_size).with_workers(self.workers);
        b.time_limit = self.time_limit();
        b
    }
}

#[derive(Subcommand)]
enum Command {
    /// Emit a network as an edge list or DOT text
    Gen {
        #[arg(long, value_enum, default_value_t = NetArg::Hcn)]
        net: NetArg,
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value_t = GenFormat::Edgelist)]
        format: GenFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Construct the explicit minimum h-cut and verify it
    Cut {
        #[arg(long, value_enum, default_value_t = NetArg::Hcn)]
        net: NetArg,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        h: u32,
        #[arg(long, value_enum)]
        kind: KindArg,
        /// Anchor block bits (hcn only; defaults to all zeros)
        #[arg(long)]
        x1: Option<String>,
        /// Verify against a different degree condition than the cut was
        /// built for (negative controls)
        #[arg(long)]
        check_h: Option<u32>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exact minimum h-cut search, reported as JSON
    Oracle {
        #[arg(long, value_enum, default_value_t = NetArg::Hcn)]
        net: NetArg,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        h: u32,
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        x1: Option<String>,
        /// Raw search bound: search sizes 0..M-1 without consulting the
        /// closed form or the constructed cut
        #[arg(long)]
        max_cut_size: Option<usize>,
        #[command(flatten)]
        budget: BudgetArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sweep (n, h, kind) and tabulate formula vs construction vs search
    Table {
        #[arg(long, value_enum, default_value_t = NetArg::Hcn)]
        net: NetArg,
        /// Single dimension N or inclusive range A..B
        #[arg(long)]
        n: String,
        /// Single value or "all"
        #[arg(long, default_value = "all")]
        h: String,
        #[arg(long, value_enum, default_value_t = KindBothArg::Both)]
        kind: KindBothArg,
        #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
        format: TableFormat,
        /// Anchor block bits (hcn only; needs a single-dimension sweep)
        #[arg(long)]
        x1: Option<String>,
        /// Run the exact search only for dimensions up to this bound
        #[arg(long, default_value_t = 2)]
        oracle_max_n: u32,
        /// Include wall-clock columns (non-deterministic output)
        #[arg(long, default_value_t = false)]
        timings: bool,
        #[command(flatten)]
        budget: BudgetArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Structural and bound suites with pass/fail per property
    Check {
        #[arg(long, value_enum)]
        suite: SuiteArg,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    ExitCode::from(run(cli.command))
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<(), std::io::Error> {
    match out {
        Some(path) => std::fs::write(path, text),
        None => std::io::stdout().write_all(text.as_bytes()),
    }
}

fn config_error(msg: impl std::fmt::Display) -> u8 {
    eprintln!("error: {msg}");
    EXIT_CONFIG
}

fn io_error(err: std::io::Error) -> u8 {
    eprintln!("error: {err}");
    EXIT_IO
}

fn parse_anchor(n: u32, x1: &Option<String>) -> Result<Option<BinaryWord>, u8> {
    match x1 {
        None => Ok(None),
        Some(bits) => {
            let w = BinaryWord::from_str(bits).map_err(config_error)?;
            if w.len() != n {
                return Err(config_error(format!(
                    "anchor {bits} has length {}, expected {n}",
                    w.len()
                )));
            }
            Ok(Some(w))
        }
    }
}

fn parse_n_range(text: &str) -> Result<(u32, u32), u8> {
    let parse_one = |s: &str| {
        s.parse::<u32>()
            .map_err(|_| config_error(format!("invalid dimension: {s}")))
    };
    if let Some((a, b)) = text.split_once("..") {
        let (lo, hi) = (parse_one(a)?, parse_one(b)?);
        if lo == 0 || hi < lo {
            return Err(config_error(format!("empty dimension range: {text}")));
        }
        Ok((lo, hi))
    } else {
        let n = parse_one(text)?;
        if n == 0 {
            return Err(config_error("dimension must be at least 1"));
        }
        Ok((n, n))
    }
}

fn run(cmd: Command) -> u8 {
    match cmd {
        Command::Gen { net, n, format, out } => cmd_gen(net.into(), n, format, &out),
        Command::Cut {
            net,
            n,
            h,
            kind,
            x1,
            check_h,
            out,
        } => cmd_cut(net.into(), n, h, kind.into(), &x1, check_h, &out),
        Command::Oracle {
            net,
            n,
            h,
            kind,
            x1,
            max_cut_size,
            budget,
            out,
        } => cmd_oracle(net.into(), n, h, kind.into(), &x1, max_cut_size, &budget, &out),
        Command::Table {
            net,
            n,
            h,
            kind,
            format,
            x1,
            oracle_max_n,
            timings,
            budget,
            out,
        } => cmd_table(
            net.into(),
            &n,
            &h,
            kind,
            format,
            &x1,
            oracle_max_n,
            timings,
            &budget,
            &out,
        ),
        Command::Check { suite, n, out } => cmd_check(suite, n, &out),
    }
}

fn cmd_gen(net: Net, n: u32, format: GenFormat, out: &Option<PathBuf>) -> u8 {
    let g = match net.build(n) {
        Ok(g) => g,
        Err(e) => return config_error(e),
    };
    let text = match format {
        GenFormat::Edgelist => render::edge_list(&g),
        GenFormat::Dot => render::dot(&g, net, n),
    };
    match emit(out, &text) {
        Ok(()) => EXIT_OK,
        Err(e) => io_error(e),
    }
}

fn cmd_cut(
    net: Net,
    n: u32,
    h: u32,
    kind: CutKind,
    x1: &Option<String>,
    check_h: Option<u32>,
    out: &Option<PathBuf>,
) -> u8 {
    let anchor = match parse_anchor(n, x1) {
        Ok(a) => a,
        Err(code) => return code,
    };
    let cut = match net.construct_cut(kind, n, h, anchor) {
        Ok(c) => c,
        Err(e) => return config_error(e),
    };
    let g = match net.build(n) {
        Ok(g) => g,
        Err(e) => return config_error(e),
    };
    let report = match verify_h_cut(&g, &cut, check_h.unwrap_or(h)) {
        Ok(r) => r,
        Err(e) => return config_error(e),
    };
    let text = render::cut_with_report(&cut, &g, &report);
    if let Err(e) = emit(out, &text) {
        return io_error(e);
    }
    if report.is_valid_h_cut {
        EXIT_OK
    } else {
        EXIT_DISCREPANCY
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_oracle(
    net: Net,
    n: u32,
    h: u32,
    kind: CutKind,
    x1: &Option<String>,
    max_cut_size: Option<usize>,
    budget_args: &BudgetArgs,
    out: &Option<PathBuf>,
) -> u8 {
    let anchor = match parse_anchor(n, x1) {
        Ok(a) => a,
        Err(code) => return code,
    };

    if let Some(max) = max_cut_size {
        // raw search mode: no construction, no formula gating
        let g = match net.build(n) {
            Ok(g) => g,
            Err(e) => return config_error(e),
        };
        let budget = budget_args.budget(max);
        let outcome = match kind {
            CutKind::Vertex => hcn_core::min_h_vertex_cut_exact(&g, h, &budget),
            CutKind::Edge => hcn_core::min_h_edge_cut_exact(&g, h, &budget),
        };
        let outcome = match outcome {
            Ok(o) => o,
            Err(e) => return config_error(e),
        };
        let formula = net.formula(kind, n, h).ok();
        let mut text = render::raw_oracle_json(net, n, h, kind.as_str(), formula, &outcome);
        text.push('\n');
        if let Err(e) = emit(out, &text) {
            return io_error(e);
        }
        return match outcome.status {
            OracleStatus::BudgetExhausted => EXIT_BUDGET,
            _ => EXIT_OK,
        };
    }

    let formula = match net.formula(kind, n, h) {
        Ok(f) => f,
        Err(e) => {
            return config_error(format!(
                "{e}; pass --max-cut-size to probe outside the closed-form range"
            ))
        }
    };
    let budget = budget_args.budget(formula as usize);
    let report = match verify_exact_value(net, n, h, kind, anchor, Some(budget)) {
        Ok(r) => r,
        Err(e) => return config_error(e),
    };
    let mut text = render::report_json(&report, true);
    text.push('\n');
    if let Err(e) = emit(out, &text) {
        return io_error(e);
    }
    match report.verdict {
        Verdict::Confirmed => EXIT_OK,
        Verdict::UpperBoundOnly => EXIT_BUDGET,
        Verdict::Discrepant => EXIT_DISCREPANCY,
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_table(
    net: Net,
    n_text: &str,
    h_text: &str,
    kind: KindBothArg,
    format: TableFormat,
    x1: &Option<String>,
    oracle_max_n: u32,
    timings: bool,
    budget_args: &BudgetArgs,
    out: &Option<PathBuf>,
) -> u8 {
    let (n_lo, n_hi) = match parse_n_range(n_text) {
        Ok(r) => r,
        Err(code) => return code,
    };
    let anchor = if x1.is_some() {
        if n_lo != n_hi {
            return config_error("--x1 needs a single-dimension sweep (its length is tied to n)");
        }
        match parse_anchor(n_lo, x1) {
            Ok(a) => a,
            Err(code) => return code,
        }
    } else {
        None
    };
    let h_filter: Option<u32> = if h_text == "all" {
        None
    } else {
        match h_text.parse::<u32>() {
            Ok(h) => Some(h),
            Err(_) => return config_error(format!("invalid --h value: {h_text}")),
        }
    };
    let kinds: &[CutKind] = match kind {
        KindBothArg::Vertex => &[CutKind::Vertex],
        KindBothArg::Edge => &[CutKind::Edge],
        KindBothArg::Both => &[CutKind::Edge, CutKind::Vertex],
    };

    let mut rows: Vec<ExactValueReport> = Vec::new();
    for n in n_lo..=n_hi {
        let mut cells: Vec<(u32, CutKind)> = Vec::new();
        for &k in kinds {
            // the closed form's own domain decides which cells exist
            for h in (0..=n).filter(|&h| net.formula(k, n, h).is_ok()) {
                if h_filter.is_none_or(|want| want == h) {
                    cells.push((h, k));
                }
            }
        }
        // rows sorted by (n, h, kind); edge sorts before vertex
        cells.sort_by_key(|&(h, k)| (h, k.as_str()));
        for (h, k) in cells {
            let budget = (n <= oracle_max_n).then(|| {
                let formula = net.formula(k, n, h).expect("h in range");
                budget_args.budget(formula as usize)
            });
            match verify_exact_value(net, n, h, k, anchor, budget) {
                Ok(r) => rows.push(r),
                Err(e) => return config_error(e),
            }
        }
    }
    if rows.is_empty() {
        return config_error("no (n, h, kind) cell matches the requested sweep");
    }

    let text = match format {
        TableFormat::Csv => render::table_csv(&rows, timings),
        TableFormat::Json => render::table_json(&rows, timings),
    };
    if let Err(e) = emit(out, &text) {
        return io_error(e);
    }
    if rows.iter().any(|r| r.verdict == Verdict::Discrepant) {
        EXIT_DISCREPANCY
    } else {
        EXIT_OK
    }
}

const CROSSING_MAX_N: u32 = 7;
const QUOTIENT_MAX_N: u32 = 7;

fn check_crossing(n: u32, lines: &mut String) -> Result<bool, u8> {
    if n == 0 || n > CROSSING_MAX_N {
        return Err(config_error(format!(
            "crossing suite supports 1 <= n <= {CROSSING_MAX_N}"
        )));
    }
    let edges = crossing_edges(n).map_err(config_error)?;
    let vertices = 1usize << (2 * n);
    let mut incident = vec![0u32; vertices];
    for &(u, v) in &edges {
        incident[u as usize] += 1;
        incident[v as usize] += 1;
    }
    let matching_ok = edges.len() == vertices / 2 && incident.iter().all(|&c| c == 1);
    lines.push_str(&format!(
        "crossing n={n} perfect_matching {}\n",
        if matching_ok { "pass" } else { "fail" }
    ));

    let mut per_pair = std::collections::BTreeMap::new();
    for &(u, v) in &edges {
        let (a, b) = (u >> n, v >> n);
        *per_pair.entry((a.min(b), a.max(b))).or_insert(0u32) += 1;
    }
    let mut mult_ok = true;
    for a in 0..(1u32 << n) {
        for b in a + 1..(1u32 << n) {
            let wa = BinaryWord::new(n, a).map_err(config_error)?;
            let wb = BinaryWord::new(n, b).map_err(config_error)?;
            let expect = crossing_edge_count(wa, wb).map_err(config_error)?;
            if per_pair.get(&(a, b)).copied().unwrap_or(0) != expect {
                mult_ok = false;
            }
        }
    }
    lines.push_str(&format!(
        "crossing n={n} pair_multiplicity {}\n",
        if mult_ok { "pass" } else { "fail" }
    ));
    Ok(matching_ok && mult_ok)
}

fn check_quotient(n: u32, lines: &mut String) -> Result<bool, u8> {
    if n == 0 || n > QUOTIENT_MAX_N {
        return Err(config_error(format!(
            "quotient suite supports 1 <= n <= {QUOTIENT_MAX_N}"
        )));
    }
    let q = block_quotient(n).map_err(config_error)?;
    let blocks = 1u32 << n;
    let full_mask = blocks - 1;
    let mut ok = q.block_count() == blocks as usize;
    for a in 0..blocks {
        for b in a + 1..blocks {
            let expect = if b == a ^ full_mask { 2 } else { 1 };
            if q.multiplicity(a, b) != expect {
                ok = false;
            }
        }
    }
    lines.push_str(&format!(
        "quotient n={n} complete_plus_matching {}\n",
        if ok { "pass" } else { "fail" }
    ));
    Ok(ok)
}

fn check_order_bound(n: u32, lines: &mut String) -> Result<bool, u8> {
    let mut all_ok = true;
    for h in 0..=n {
        let r = hcn_core::analysis::check_subcube_order_bound(n, h).map_err(config_error)?;
        all_ok &= r.holds;
        lines.push_str(&format!(
            "order-bound n={n} h={h} {}{}\n",
            if r.holds { "pass" } else { "fail" },
            if r.tight { " (tight)" } else { "" }
        ));
    }
    Ok(all_ok)
}

fn check_expansion_bound(n: u32, lines: &mut String) -> Result<bool, u8> {
    let mut all_ok = true;
    for h in 0..n {
        let r =
            hcn_core::analysis::check_neighborhood_expansion_bound(n, h).map_err(config_error)?;
        all_ok &= r.holds;
        lines.push_str(&format!(
            "expansion-bound n={n} h={h} {} (min {} bound {})\n",
            if r.holds { "pass" } else { "fail" },
            r.min_observed.map(|m| m.to_string()).unwrap_or_default(),
            r.bound
        ));
    }
    Ok(all_ok)
}

fn cmd_check(suite: SuiteArg, n: u32, out: &Option<PathBuf>) -> u8 {
    let mut lines = String::new();
    let mut all_ok = true;
    let bounds_in_range = (1..=hcn_core::analysis::MAX_EXHAUSTIVE_N).contains(&n);
    let result: Result<(), u8> = (|| {
        match suite {
            SuiteArg::Crossing => all_ok &= check_crossing(n, &mut lines)?,
            SuiteArg::Quotient => all_ok &= check_quotient(n, &mut lines)?,
            SuiteArg::OrderBound => all_ok &= check_order_bound(n, &mut lines)?,
            SuiteArg::ExpansionBound => all_ok &= check_expansion_bound(n, &mut lines)?,
            SuiteArg::All => {
                all_ok &= check_crossing(n, &mut lines)?;
                all_ok &= check_quotient(n, &mut lines)?;
                if bounds_in_range {
                    all_ok &= check_order_bound(n, &mut lines)?;
                    all_ok &= check_expansion_bound(n, &mut lines)?;
                }
            }
        }
        Ok(())
    })();
    if let Err(code) = result {
        return code;
    }
    if let Err(e) = emit(out, &lines) {
        return io_error(e);
    }
    if all_ok {
        EXIT_OK
    } else {
        EXIT_DISCREPANCY
    }
}
