use crate::output::{bad, read_json, table, CliError, Sink};
use crate::Format;
use clap::{Args, ValueEnum};
use crosscrit::drawing::{
    drop_drawing, export_dot, export_svg, template_drawing, wedge_contraction, canonical_drawing, Drawing, DrawingTemplate,
    Figure,
};
use crosscrit::families::{generate_ccg13k, FamilySpec};
use crosscrit::graph::named;
use crosscrit::{EdgeId, VertexId, WeightedMultigraph};
use serde::{Deserialize, Serialize};
use std::path::{Path, PathBuf};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GenFamily {
    Ccg13,
    Ccgi13,
    Gcd,
    Gcdi,
    Complete,
    Bipartite,
    Cycle,
    Path,
    Petersen,
    C3c3,
    Prism,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    pub family: GenFamily,
    /// Wedge count (ccg13, ccgi13).
    #[arg(long)]
    pub k: Option<usize>,
    /// Target crossing number (gcd, gcdi).
    #[arg(long)]
    pub c: Option<usize>,
    /// Target maximum degree (gcd, gcdi).
    #[arg(long)]
    pub d: Option<usize>,
    /// Number of ccgi13 copies (gcdi).
    #[arg(long)]
    pub i: Option<usize>,
    /// Vertex count (complete, cycle, path), or first side (bipartite).
    #[arg(long)]
    pub n: Option<usize>,
    /// Second side (bipartite).
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

fn need(v: Option<usize>, flag: &str) -> Result<usize, CliError> {
    v.ok_or_else(|| bad(format!("--{flag} is required for this family")))
}

pub fn generate(a: &GenArgs) -> Result<WeightedMultigraph, CliError> {
    let spec = match a.family {
        GenFamily::Ccg13 => FamilySpec::Ccg13 { k: need(a.k, "k")? },
        GenFamily::Ccgi13 => FamilySpec::Ccgi13 { k: need(a.k, "k")? },
        GenFamily::Gcd => FamilySpec::Gcd { c: need(a.c, "c")?, d: need(a.d, "d")? },
        GenFamily::Gcdi => FamilySpec::Gcdi { c: need(a.c, "c")?, d: need(a.d, "d")?, i: need(a.i, "i")? },
        GenFamily::Complete => return Ok(named::complete(need(a.n, "n")?)),
        GenFamily::Bipartite => return Ok(named::complete_bipartite(need(a.n, "n")?, need(a.m, "m")?)),
        GenFamily::Cycle => {
            let n = need(a.n, "n")?;
            if n < 3 {
                return Err(bad("a cycle needs at least 3 vertices"));
            }
            return Ok(named::cycle(n));
        }
        GenFamily::Path => return Ok(named::path(need(a.n, "n")?)),
        GenFamily::Petersen => return Ok(named::petersen()),
        GenFamily::C3c3 => return Ok(named::c3_box_c3()),
        GenFamily::Prism => return Ok(named::prism()),
    };
    spec.generate().map_err(bad)
}

pub fn gen(a: &GenArgs, sink: &Sink) -> Result<(), CliError> {
    let g = generate(a)?;
    match a.format {
        Format::Json => sink.emit(&g, || graph_summary(&g)),
        Format::Dot => sink.write_text(&g.to_dot()),
        Format::Svg => Err(bad("graphs have no SVG rendering; draw them first")),
    }
}

fn graph_summary(g: &WeightedMultigraph) -> String {
    let rows: Vec<Vec<String>> = g
        .edges()
        .iter()
        .map(|e| vec![e.id.to_string(), g.edge_name(e.id), e.thickness.to_string()])
        .collect();
    format!(
        "{} vertices, {} skeleton edges, {} edges with multiplicity\n{}",
        g.vertex_count(),
        g.edge_count(),
        g.multiplicity(),
        table(&["id", "edge", "thickness"], &rows)
    )
}

/// A vertex by label, `v<id>` or bare id.
pub fn resolve_vertex(g: &WeightedMultigraph, s: &str) -> Result<VertexId, CliError> {
    if let Ok(v) = g.vertex_by_label(s) {
        return Ok(v);
    }
    let digits = s.strip_prefix('v').unwrap_or(s);
    match digits.parse() {
        Ok(id) if g.contains_vertex(VertexId(id)) => Ok(VertexId(id)),
        _ => Err(bad(format!("no vertex {s:?}"))),
    }
}

/// An edge given as `a,b` (vertex names) or `e<id>`.
pub fn resolve_edge(g: &WeightedMultigraph, s: &str) -> Result<EdgeId, CliError> {
    if let Some((a, b)) = s.split_once(',') {
        let (u, v) = (resolve_vertex(g, a.trim())?, resolve_vertex(g, b.trim())?);
        return g.edge_between(u, v).ok_or_else(|| bad(format!("no edge {s:?}")));
    }
    let id = s.strip_prefix('e').unwrap_or(s).parse().map(EdgeId).map_err(|_| bad(format!("bad edge {s:?}")))?;
    g.edge(id).map(|e| e.id).map_err(bad)
}

#[derive(Debug, Args)]
pub struct DrawArgs {
    /// A figure name (fig2, fig2-dotted-a, fig2-dotted-b, fig4a, fig4a-shifted,
    /// fig4b, fig5a, fig5b, expanded), `drop` or `contract`.
    pub what: String,
    #[arg(long)]
    pub k: usize,
    /// Wedge index (fig5a, fig5b, contract).
    #[arg(long)]
    pub i: Option<usize>,
    /// Apply the u/v mirror automorphism.
    #[arg(long)]
    pub mirror: bool,
    /// Edge to drop, as `a,b` or `e<id>` (drop).
    #[arg(long)]
    pub edge: Option<String>,
    /// Copy index of the dropped edge (drop).
    #[arg(long, default_value_t = 0)]
    pub copy: u32,
    /// Drawing to contract instead of the canonical one (contract).
    #[arg(long)]
    pub from: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

fn build_drawing(a: &DrawArgs) -> Result<Drawing, CliError> {
    match a.what.as_str() {
        "drop" => {
            let g = generate_ccg13k(a.k).map_err(bad)?;
            let e = resolve_edge(&g, a.edge.as_deref().ok_or_else(|| bad("--edge is required for drop"))?)?;
            drop_drawing(a.k, e, a.copy).map_err(bad)
        }
        "contract" => {
            let i = a.i.ok_or_else(|| bad("--i is required for contract"))?;
            let d = match &a.from {
                Some(p) => read_json(p)?,
                None => canonical_drawing(a.k).map_err(bad)?,
            };
            wedge_contraction(&d, i).map_err(bad)
        }
        name => {
            let figure: Figure = name.parse().map_err(bad)?;
            let t = DrawingTemplate { figure, k: a.k, i: a.i, mirror: a.mirror };
            template_drawing(&t).map_err(bad)
        }
    }
}

pub fn draw(a: &DrawArgs, sink: &Sink) -> Result<(), CliError> {
    let d = build_drawing(a)?;
    let total = d.crossing_count().map_err(|e| CliError::Verify(e.to_string()))?.total;
    match a.format {
        Format::Json => sink.emit(&d, || drawing_summary(&d, total)),
        Format::Dot => sink.write_text(&export_dot(&d)),
        Format::Svg => sink.write_text(&export_svg(&d)),
    }
}

fn drawing_summary(d: &Drawing, total: u64) -> String {
    format!(
        "valid drawing of a graph with {} vertices and {} skeleton edges; {} crossing vertices, total {}\n",
        d.graph.vertex_count(),
        d.graph.edge_count(),
        d.crossings.len(),
        total
    )
}

pub fn count(file: &Path, sink: &Sink) -> Result<(), CliError> {
    let d: Drawing = read_json(file)?;
    let count = d.crossing_count().map_err(|e| CliError::Verify(e.to_string()))?;
    sink.emit(&count, || {
        let rows: Vec<Vec<String>> = count
            .pairs
            .iter()
            .map(|p| vec![d.graph.edge_name(p.a), d.graph.edge_name(p.b), p.count.to_string()])
            .collect();
        format!("total {}\n{}", count.total, table(&["edge a", "edge b", "crossings"], &rows))
    })
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    pub file: PathBuf,
    /// Require exactly this crossing total.
    #[arg(long)]
    pub expect: Option<u64>,
    /// Require at most this crossing total.
    #[arg(long)]
    pub max: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub valid: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub violation: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub total: Option<u64>,
    pub ok: bool,
}

pub fn verify(a: &VerifyArgs, sink: &Sink) -> Result<(), CliError> {
    let d: Drawing = read_json(&a.file)?;
    let report = match d.crossing_count() {
        Ok(c) => {
            let ok = a.expect.is_none_or(|x| c.total == x) && a.max.is_none_or(|m| c.total <= m);
            VerifyReport { valid: true, violation: None, total: Some(c.total), ok }
        }
        Err(v) => VerifyReport { valid: false, violation: Some(v.to_string()), total: None, ok: false },
    };
    sink.emit(&report, || match (&report.violation, report.total) {
        (Some(v), _) => format!("INVALID: {v}\n"),
        (None, Some(t)) => format!("valid, total {t}{}\n", if report.ok { "" } else { " (does not meet the requirement)" }),
        _ => unreachable!(),
    })?;
    if report.ok {
        Ok(())
    } else {
        let total = report.total.map_or("?".into(), |t| t.to_string());
        Err(CliError::Verify(report.violation.clone().unwrap_or_else(|| format!("total {total} does not meet the requirement"))))
    }
}
