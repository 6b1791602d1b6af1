//! Deterministic text renderings: edge lists, DOT, cut reports, JSON and
//! CSV rows. Byte-identical output for identical inputs is a contract here,
//! so every collection is sorted before printing and JSON is emitted with a
//! fixed field order.

use std::fmt::Write as _;

use hcn_core::analysis::{ExactValueReport, OracleOutcome, OracleStatus, Verdict};
use hcn_core::{is_crossing_edge, CutSpec, Graph, Net, VerificationReport};

/// One edge per line, labels separated by a single space, lexicographically
/// sorted lines, trailing newline.
pub fn edge_list(g: &Graph) -> String {
    let mut lines: Vec<String> = g
        .edges()
        .iter()
        .map(|&(u, v)| {
            let (a, b) = (g.label(u), g.label(v));
            if a <= b {
                format!("{} {}", a, b)
            } else {
                format!("{} {}", b, a)
            }
        })
        .collect();
    lines.sort();
    let mut out = String::new();
    for line in lines {
        out.push_str(&line);
        out.push('\n');
    }
    out
}

/// DOT text. Hierarchical networks group each block as a cluster and mark
/// crossing edges bold; hypercubes are flat.
pub fn dot(g: &Graph, net: Net, n: u32) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "graph {}_{} {{", net.as_str(), n);
    match net {
        Net::Hcn => {
            let block_size = 1usize << n;
            let blocks = 1usize << n;
            for b in 0..blocks {
                let block_label = &g.label((b * block_size) as u32)[..n as usize];
                let _ = writeln!(out, "  subgraph cluster_{} {{", block_label);
                let _ = writeln!(out, "    label=\"{}\";", block_label);
                for v in 0..block_size {
                    let _ = writeln!(out, "    \"{}\";", g.label((b * block_size + v) as u32));
                }
                let _ = writeln!(out, "  }}");
            }
        }
        Net::Hypercube => {
            for v in 0..g.vertex_count() {
                let _ = writeln!(out, "  \"{}\";", g.label(v as u32));
            }
        }
    }
    let mut edge_lines: Vec<String> = g
        .edges()
        .iter()
        .map(|&(u, v)| {
            let (a, b) = {
                let (la, lb) = (g.label(u), g.label(v));
                if la <= lb {
                    (la, lb)
                } else {
                    (lb, la)
                }
            };
            let bold = net == Net::Hcn && is_crossing_edge(n, u, v);
            if bold {
                format!("  \"{}\" -- \"{}\" [style=bold];", a, b)
            } else {
                format!("  \"{}\" -- \"{}\";", a, b)
            }
        })
        .collect();
    edge_lines.sort();
    for line in edge_lines {
        out.push_str(&line);
        out.push('\n');
    }
    out.push_str("}\n");
    out
}

pub fn verification_report(report: &VerificationReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "is_disconnected {}", report.is_disconnected);
    match report.min_degree_after {
        Some(d) => {
            let _ = writeln!(out, "min_degree_after {}", d);
        }
        None => {
            let _ = writeln!(out, "min_degree_after undefined");
        }
    }
    let sizes: Vec<String> = report.component_sizes.iter().map(|s| s.to_string()).collect();
    let _ = writeln!(out, "component_sizes {}", sizes.join(" "));
    let _ = writeln!(out, "is_valid_h_cut {}", report.is_valid_h_cut);
    let _ = writeln!(out, "h {}", report.h);
    out
}

pub fn cut_with_report(cut: &CutSpec, g: &Graph, report: &VerificationReport) -> String {
    format!("{}\n{}", cut.render(g), verification_report(report))
}

fn json_opt_u64(v: Option<u64>) -> String {
    match v {
        Some(x) => x.to_string(),
        None => "null".to_string(),
    }
}

/// The table/oracle view of a verification row: the combined status reads
/// "exact_value" whenever the run established the exact value.
pub fn combined_status(report: &ExactValueReport) -> &'static str {
    match report.verdict {
        Verdict::Confirmed => "exact_value",
        Verdict::UpperBoundOnly => match &report.oracle {
            None => "skipped",
            Some(o) => o.status.as_str(),
        },
        Verdict::Discrepant => match &report.oracle {
            Some(o) if o.status == OracleStatus::ExactValue => "exact_value",
            Some(o) => o.status.as_str(),
            None => "construction_invalid",
        },
    }
}

/// Fixed-order JSON report for one (net, n, h, kind) verification.
pub fn report_json(report: &ExactValueReport, include_timing: bool) -> String {
    let subsets = report.oracle.as_ref().map(|o| o.subsets_examined);
    let elapsed = report.oracle.as_ref().map(|o| o.elapsed.as_millis() as u64);
    let mut out = String::new();
    let _ = write!(
        out,
        "{{\"net\":\"{}\",\"n\":{},\"h\":{},\"kind\":\"{}\",\"formula\":{},\"constructed_size\":{},\"construction_valid\":{},\"oracle_status\":\"{}\",\"oracle_value\":{},\"subsets_examined\":{}",
        report.net.as_str(),
        report.n,
        report.h,
        report.kind.as_str(),
        report.formula,
        report.constructed_size,
        report.construction_valid,
        combined_status(report),
        json_opt_u64(report.oracle_value),
        json_opt_u64(subsets),
    );
    if include_timing {
        let _ = write!(out, ",\"elapsed_ms\":{}", json_opt_u64(elapsed));
    }
    out.push('}');
    out
}

/// Raw-search JSON for `oracle --max-cut-size`: no construction half.
pub fn raw_oracle_json(
    net: Net,
    n: u32,
    h: u32,
    kind: &str,
    formula: Option<u64>,
    outcome: &OracleOutcome,
) -> String {
    format!(
        "{{\"net\":\"{}\",\"n\":{},\"h\":{},\"kind\":\"{}\",\"formula\":{},\"constructed_size\":null,\"construction_valid\":null,\"oracle_status\":\"{}\",\"oracle_value\":{},\"subsets_examined\":{},\"elapsed_ms\":{}}}",
        net.as_str(),
        n,
        h,
        kind,
        json_opt_u64(formula),
        outcome.status.as_str(),
        json_opt_u64(outcome.value.map(|v| v as u64)),
        outcome.subsets_examined,
        outcome.elapsed.as_millis(),
    )
}

pub struct TableSummary {
    pub confirmed: usize,
    pub upper_bound_only: usize,
    pub discrepant: usize,
}

impl TableSummary {
    pub fn tally(rows: &[ExactValueReport]) -> Self {
        let mut s = TableSummary {
            confirmed: 0,
            upper_bound_only: 0,
            discrepant: 0,
        };
        for r in rows {
            match r.verdict {
                Verdict::Confirmed => s.confirmed += 1,
                Verdict::UpperBoundOnly => s.upper_bound_only += 1,
                Verdict::Discrepant => s.discrepant += 1,
            }
        }
        s
    }
}

pub fn table_csv(rows: &[ExactValueReport], include_timing: bool) -> String {
    let mut out = String::new();
    out.push_str("n,h,kind,formula,constructed_size,construction_valid,oracle_status,oracle_value");
    if include_timing {
        out.push_str(",elapsed_ms");
    }
    out.push('\n');
    for r in rows {
        let value = match r.oracle_value {
            Some(v) => v.to_string(),
            None => String::new(),
        };
        let _ = write!(
            out,
            "{},{},{},{},{},{},{},{}",
            r.n,
            r.h,
            r.kind.as_str(),
            r.formula,
            r.constructed_size,
            r.construction_valid,
            combined_status(r),
            value,
        );
        if include_timing {
            let elapsed = r
                .oracle
                .as_ref()
                .map(|o| o.elapsed.as_millis().to_string())
                .unwrap_or_default();
            let _ = write!(out, ",{}", elapsed);
        }
        out.push('\n');
    }
    let s = TableSummary::tally(rows);
    let _ = writeln!(
        out,
        "# summary confirmed={} upper_bound_only={} discrepant={}",
        s.confirmed, s.upper_bound_only, s.discrepant
    );
    out
}

pub fn table_json(rows: &[ExactValueReport], include_timing: bool) -> String {
    let mut out = String::from("{\"rows\":[");
    for (i, r) in rows.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        out.push_str(&report_json(r, include_timing));
    }
    let s = TableSummary::tally(rows);
    let _ = write!(
        out,
        "],\"summary\":{{\"confirmed\":{},\"upper_bound_only\":{},\"discrepant\":{}}}}}",
        s.confirmed, s.upper_bound_only, s.discrepant
    );
    out.push('\n');
    out
}
