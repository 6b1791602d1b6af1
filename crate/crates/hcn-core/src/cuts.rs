use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::topology::{build_hcn, external_neighbor, HcnVertex};
use crate::word::BinaryWord;

/// Whether a cut removes vertices or edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CutKind {
    Vertex,
    Edge,
}

impl CutKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            CutKind::Vertex => "vertex",
            CutKind::Edge => "edge",
        }
    }
}

/// Members of a proposed cut: vertex indices or normalized edge pairs,
/// kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CutMembers {
    Vertices(Vec<u32>),
    Edges(Vec<(u32, u32)>),
}

impl CutMembers {
    pub fn len(&self) -> usize {
        match self {
            CutMembers::Vertices(v) => v.len(),
            CutMembers::Edges(e) => e.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// A vertex or edge set proposed as an h-cut, with construction metadata.
///
/// `n` is the dimension of the target network (0 when the cut came from a
/// search over an arbitrary graph and no dimension applies); `anchor` is the
/// block the construction was rooted at, when applicable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutSpec {
    pub n: u32,
    pub h: u32,
    pub anchor: Option<BinaryWord>,
    pub members: CutMembers,
}

impl CutSpec {
    pub fn kind(&self) -> CutKind {
        match self.members {
            CutMembers::Vertices(_) => CutKind::Vertex,
            CutMembers::Edges(_) => CutKind::Edge,
        }
    }

    pub fn size(&self) -> usize {
        self.members.len()
    }

    pub fn vertices(&self) -> Option<&[u32]> {
        match &self.members {
            CutMembers::Vertices(v) => Some(v),
            CutMembers::Edges(_) => None,
        }
    }

    pub fn edges(&self) -> Option<&[(u32, u32)]> {
        match &self.members {
            CutMembers::Edges(e) => Some(e),
            CutMembers::Vertices(_) => None,
        }
    }

    /// Text form consumed by the CLI: a header `kind n h size anchor`
    /// followed by one member per line (labels from `g`), sorted.
    pub fn render(&self, g: &Graph) -> String {
        let anchor = match &self.anchor {
            Some(w) => w.to_string(),
            None => "-".to_string(),
        };
        let mut out = format!(
            "{} {} {} {} {}\n",
            self.kind().as_str(),
            self.n,
            self.h,
            self.size(),
            anchor
        );
        let mut lines: Vec<String> = match &self.members {
            CutMembers::Vertices(vs) => vs.iter().map(|&v| g.label(v).to_string()).collect(),
            CutMembers::Edges(es) => es
                .iter()
                .map(|&(u, v)| {
                    let (a, b) = (g.label(u), g.label(v));
                    if a <= b {
                        format!("{} {}", a, b)
                    } else {
                        format!("{} {}", b, a)
                    }
                })
                .collect(),
        };
        lines.sort();
        for line in lines {
            out.push_str(&line);
            out.push('\n');
        }
        out
    }
}

/// Outcome of checking a proposed cut against the h-cut definition: the
/// remainder must be disconnected and keep minimum degree at least h.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub is_disconnected: bool,
    /// Minimum degree of the remainder; `None` when no vertices survive.
    pub min_degree_after: Option<usize>,
    /// Sizes of the remainder's components, ascending.
    pub component_sizes: Vec<usize>,
    pub is_valid_h_cut: bool,
    pub h: u32,
}

fn resolve_anchor(n: u32, anchor: Option<BinaryWord>) -> Result<BinaryWord> {
    match anchor {
        Some(w) => {
            if w.len() != n {
                return Err(Error::WordLengthMismatch { a: w.len(), b: n });
            }
            Ok(w)
        }
        None => BinaryWord::zeros(n),
    }
}

/// The vertices of the anchored sub-h-cube: all (x1, y) with the rightmost
/// n-h bits of y zero.
fn subcube_vertices(n: u32, h: u32, x1: BinaryWord) -> Vec<HcnVertex> {
    (0..1u32 << h)
        .map(|t| {
            let y = BinaryWord::new(n, t << (n - h)).unwrap();
            HcnVertex::new(x1, y).unwrap()
        })
        .collect()
}

/// Minimum h-vertex-cut construction for HCN_n: the neighborhood of a
/// sub-h-cube of the anchor block. Contains the 2^h(n-h) in-block vertices
/// with exactly one 1 among the rightmost n-h address bits, plus the 2^h
/// external neighbors of the sub-cube, for a total of 2^h(n+1-h).
pub fn hcn_vertex_cut(n: u32, h: u32, anchor: Option<BinaryWord>) -> Result<CutSpec> {
    if n == 0 {
        return Err(Error::DimensionZero);
    }
    if h + 1 > n {
        return Err(Error::HOutOfRange { h, lo: 0, hi: n - 1 });
    }
    let x1 = resolve_anchor(n, anchor)?;
    let mut members = Vec::new();
    for t in 0..1u32 << h {
        for j in 0..n - h {
            let y = BinaryWord::new(n, (t << (n - h)) | (1 << j))?;
            members.push(HcnVertex::new(x1, y)?.index());
        }
    }
    for v in subcube_vertices(n, h, x1) {
        members.push(external_neighbor(v).index());
    }
    members.sort_unstable();
    members.dedup();
    Ok(CutSpec {
        n,
        h,
        anchor: Some(x1),
        members: CutMembers::Vertices(members),
    })
}

/// Minimum h-edge-cut construction for HCN_n. For h <= n-1 these are the
/// edges joining the anchored sub-h-cube to its neighborhood; for h = n the
/// whole anchor block is isolated by its 2^n crossing edges. Size is
/// 2^h(n+1-h) in both cases.
pub fn hcn_edge_cut(n: u32, h: u32, anchor: Option<BinaryWord>) -> Result<CutSpec> {
    if n == 0 {
        return Err(Error::DimensionZero);
    }
    if h > n {
        return Err(Error::HOutOfRange { h, lo: 0, hi: n });
    }
    let x1 = resolve_anchor(n, anchor)?;
    let mut members: Vec<(u32, u32)> = Vec::new();
    if h == n {
        for y in 0..1u32 << n {
            let v = HcnVertex::new(x1, BinaryWord::new(n, y)?)?;
            let (a, b) = (v.index(), external_neighbor(v).index());
            members.push((a.min(b), a.max(b)));
        }
    } else {
        for v in subcube_vertices(n, h, x1) {
            let vi = v.index();
            for j in 0..n - h {
                let wi = vi ^ (1 << j);
                members.push((vi.min(wi), vi.max(wi)));
            }
            let ei = external_neighbor(v).index();
            members.push((vi.min(ei), vi.max(ei)));
        }
    }
    members.sort_unstable();
    members.dedup();
    Ok(CutSpec {
        n,
        h,
        anchor: Some(x1),
        members: CutMembers::Edges(members),
    })
}

/// Minimum h-vertex-cut construction for Q_n: the 2^h(n-h) vertices with
/// exactly one 1 among the rightmost n-h coordinates, i.e. the neighborhood
/// of the sub-h-cube fixing those coordinates to zero.
pub fn hypercube_vertex_cut(n: u32, h: u32) -> Result<CutSpec> {
    if n == 0 {
        return Err(Error::DimensionZero);
    }
    if h + 2 > n {
        return Err(Error::HOutOfRange {
            h,
            lo: 0,
            hi: n.saturating_sub(2),
        });
    }
    let mut members = Vec::new();
    for t in 0..1u32 << h {
        for j in 0..n - h {
            members.push((t << (n - h)) | (1 << j));
        }
    }
    members.sort_unstable();
    Ok(CutSpec {
        n,
        h,
        anchor: None,
        members: CutMembers::Vertices(members),
    })
}

/// Minimum h-edge-cut construction for Q_n: the 2^h(n-h) edges joining the
/// zero-fixed sub-h-cube to the rest of the cube.
pub fn hypercube_edge_cut(n: u32, h: u32) -> Result<CutSpec> {
    if n == 0 {
        return Err(Error::DimensionZero);
    }
    if h + 1 > n {
        return Err(Error::HOutOfRange { h, lo: 0, hi: n - 1 });
    }
    let mut members = Vec::new();
    for t in 0..1u32 << h {
        let v = t << (n - h);
        for j in 0..n - h {
            let w = v | (1 << j);
            members.push((v.min(w), v.max(w)));
        }
    }
    members.sort_unstable();
    Ok(CutSpec {
        n,
        h,
        anchor: None,
        members: CutMembers::Edges(members),
    })
}

/// Checks `cut` against the h-cut definition on `g`, recomputing everything
/// from the graph itself. The input graph is never mutated.
pub fn verify_h_cut(g: &Graph, cut: &CutSpec, h: u32) -> Result<VerificationReport> {
    let remainder = match &cut.members {
        CutMembers::Vertices(removed) => {
            let count = g.vertex_count();
            let mut keep = vec![true; count];
            for &v in removed {
                if v as usize >= count {
                    return Err(Error::VertexOutOfRange { index: v, count });
                }
                keep[v as usize] = false;
            }
            let survivors: Vec<u32> = (0..count as u32).filter(|&v| keep[v as usize]).collect();
            g.induced_subgraph(&survivors)?
        }
        CutMembers::Edges(removed) => g.without_edges(removed)?,
    };
    let component_sizes = {
        let mut sizes: Vec<usize> = remainder.components().iter().map(|c| c.len()).collect();
        sizes.sort_unstable();
        sizes
    };
    let is_disconnected = component_sizes.len() > 1;
    let min_degree_after = remainder.min_degree();
    let is_valid_h_cut = is_disconnected && min_degree_after.is_some_and(|d| d >= h as usize);
    Ok(VerificationReport {
        is_disconnected,
        min_degree_after,
        component_sizes,
        is_valid_h_cut,
        h,
    })
}

/// Convenience wrapper: builds HCN_n and verifies the constructed cut on it.
pub fn verify_hcn_cut(cut: &CutSpec, h: u32) -> Result<VerificationReport> {
    let g = build_hcn(cut.n)?;
    verify_h_cut(&g, cut, h)
}
