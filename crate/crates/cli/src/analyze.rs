use crate::drawings::resolve_vertex;
use crate::output::{bad, read_json, table, CliError, Sink};
use clap::{Args, Subcommand};
use crosscrit::analyzer::{
    all_pairs_intersect, binary_minor_depth, bound_leaves_threshold, c_bridge_decomposition,
    count_internally_disjoint_paths, extend_thresholds, find_comb, is_q_clean, leaf_count, one_nest_depth, path_systems,
    q_clean_subcomb, AnalyzerError, BridgeDecomposition, Comb, FanGrid, NestResult, PlaneView, RootedTree,
};
use crosscrit::drawing::{Drawing, NodeRef};
use crosscrit::{VertexId, WeightedMultigraph};
use serde::{Deserialize, Serialize};
use std::path::PathBuf;

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    #[command(subcommand)]
    pub command: AnalyzeCommand,
}

#[derive(Debug, Args)]
pub struct ViewArgs {
    /// Drawing JSON file.
    pub drawing: PathBuf,
    /// Directed edge `a,b` of the planarization whose face is the outer face;
    /// defaults to the longest face.
    #[arg(long)]
    pub outer: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum AnalyzeCommand {
    /// Leaves, binary-minor depth and a comb of a rooted tree.
    Tree {
        graph: PathBuf,
        #[arg(long)]
        root: String,
        /// Look for a leaf comb with this many teeth.
        #[arg(long)]
        k: Option<usize>,
    },
    /// Number of internally disjoint paths between two vertices.
    Paths {
        graph: PathBuf,
        #[arg(long)]
        u: String,
        #[arg(long)]
        v: String,
    },
    /// C-bridges of a cycle and their longest ≺-chain.
    Bridges {
        graph: PathBuf,
        /// Cycle vertices in order, comma separated.
        #[arg(long)]
        cycle: String,
        /// One segment Q_j per flag, comma separated, in order.
        #[arg(long = "segment")]
        segments: Vec<String>,
    },
    /// Depth of the deepest 1-nest at a node of a drawing.
    Nest {
        #[command(flatten)]
        view: ViewArgs,
        #[arg(long)]
        w: String,
        /// Most cycles through the node to examine.
        #[arg(long, default_value_t = 2_000)]
        budget: usize,
    },
    /// Check a claimed fan-grid given as JSON.
    FanGrid {
        #[command(flatten)]
        view: ViewArgs,
        witness: PathBuf,
    },
    /// Q-cleanness of a comb given as JSON, and a clean subcomb.
    Clean {
        #[command(flatten)]
        view: ViewArgs,
        comb: PathBuf,
        /// The path Q, comma separated.
        #[arg(long)]
        q: String,
        #[arg(long)]
        k: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeReport {
    pub root: VertexId,
    pub vertices: usize,
    pub leaves: usize,
    pub max_degree: usize,
    pub binary_minor_depth: u32,
    pub max_branching_on_path: usize,
    /// Leaf bound for the tree's own degree, depth and branching.
    pub leaf_bound: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub comb: Option<Comb<VertexId>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathsReport {
    pub u: VertexId,
    pub v: VertexId,
    pub paths: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FanGridReport {
    pub valid: bool,
    pub rows: usize,
    pub columns: usize,
    pub path_systems_intersect: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CleanReport {
    pub clean: bool,
    pub k: usize,
    pub subcomb: Option<Comb<NodeRef>>,
}

fn analyzer_error(e: AnalyzerError) -> CliError {
    match e {
        AnalyzerError::Invalid(v) => CliError::Verify(v.to_string()),
        AnalyzerError::CycleBudget(_) => CliError::Budget(e.to_string()),
        e => bad(e),
    }
}

fn node(d: &Drawing, s: &str) -> Result<NodeRef, CliError> {
    match s.parse::<NodeRef>() {
        Ok(n @ NodeRef::Crossing(_)) => Ok(n),
        _ => resolve_vertex(&d.graph, s).map(NodeRef::Vertex),
    }
}

fn nodes(d: &Drawing, list: &str) -> Result<Vec<NodeRef>, CliError> {
    list.split(',').map(|s| node(d, s.trim())).collect()
}

fn vertices(g: &WeightedMultigraph, list: &str) -> Result<Vec<VertexId>, CliError> {
    list.split(',').map(|s| resolve_vertex(g, s.trim())).collect()
}

fn load_view(a: &ViewArgs) -> Result<(Drawing, PlaneView), CliError> {
    let d: Drawing = read_json(&a.drawing)?;
    let outer = match &a.outer {
        Some(s) => match nodes(&d, s)?.as_slice() {
            &[x, y] => Some((x, y)),
            _ => return Err(bad("--outer takes two nodes")),
        },
        None => None,
    };
    let view = PlaneView::new(&d, outer).map_err(analyzer_error)?;
    Ok((d, view))
}

pub fn analyze(a: &AnalyzeArgs, sink: &Sink) -> Result<(), CliError> {
    match &a.command {
        AnalyzeCommand::Tree { graph, root, k } => {
            let g: WeightedMultigraph = read_json(graph)?;
            let root = resolve_vertex(&g, root)?;
            let t = RootedTree::new(&g, root).map_err(analyzer_error)?;
            let (d, b, branching) = (t.max_degree(), binary_minor_depth(&t), t.max_branching_on_path());
            let report = TreeReport {
                root,
                vertices: g.vertex_count(),
                leaves: leaf_count(&t),
                max_degree: d,
                binary_minor_depth: b,
                max_branching_on_path: branching,
                leaf_bound: bound_leaves_threshold(d.max(1) as u64, b as u64, branching as u64 + 1).to_string(),
                k: *k,
                comb: k.and_then(|k| find_comb(&t, k)),
            };
            sink.emit(&report, || {
                let mut s = format!(
                    "{} vertices, {} leaves (bound {}), max degree {}, binary-minor depth {}, max branching on a root-leaf path {}\n",
                    report.vertices, report.leaves, report.leaf_bound, d, b, branching
                );
                if let Some(k) = k {
                    s += &match &report.comb {
                        Some(c) => format!("comb with {k} teeth: spine {:?}\n", c.spine),
                        None => format!("no comb with {k} teeth\n"),
                    };
                }
                s
            })
        }
        AnalyzeCommand::Paths { graph, u, v } => {
            let g: WeightedMultigraph = read_json(graph)?;
            let (u, v) = (resolve_vertex(&g, u)?, resolve_vertex(&g, v)?);
            let paths = count_internally_disjoint_paths(&g, u, v).map_err(analyzer_error)?;
            let report = PathsReport { u, v, paths };
            sink.emit(&report, || format!("{paths} internally disjoint paths between {u} and {v}\n"))
        }
        AnalyzeCommand::Bridges { graph, cycle, segments } => {
            let g: WeightedMultigraph = read_json(graph)?;
            let cycle = vertices(&g, cycle)?;
            let segments = segments.iter().map(|s| vertices(&g, s)).collect::<Result<Vec<_>, _>>()?;
            let dec: BridgeDecomposition = c_bridge_decomposition(&g, &cycle, &segments).map_err(analyzer_error)?;
            sink.emit(&dec, || {
                let rows: Vec<Vec<String>> = dec
                    .bridges
                    .iter()
                    .enumerate()
                    .map(|(i, b)| vec![i.to_string(), b.vertices.len().to_string(), format!("{:?}", b.j), dec.chain_length[i].to_string()])
                    .collect();
                format!("{}longest chain: {:?}\n", table(&["bridge", "vertices", "J", "chain"], &rows), dec.longest_chain)
            })
        }
        AnalyzeCommand::Nest { view, w, budget } => {
            let (d, view) = load_view(view)?;
            let res: NestResult = one_nest_depth(&view, node(&d, w)?, *budget).map_err(analyzer_error)?;
            sink.emit(&res, || format!("1-nest depth {} ({} cycles examined)\n", res.depth, res.cycles_examined))
        }
        AnalyzeCommand::FanGrid { view, witness } => {
            let (_, view) = load_view(view)?;
            let fg: FanGrid = read_json(witness)?;
            let valid = crosscrit::analyzer::verify_fan_grid(&view, &fg).map_err(analyzer_error)?;
            let (rays, rows) = path_systems(&fg);
            let (r, n) = fg.shape();
            let report = FanGridReport { valid, rows: r, columns: n, path_systems_intersect: all_pairs_intersect(&rays, &rows) };
            sink.emit(&report, || {
                format!("({r} x {n})-fan-grid: {}\n", if valid { "valid" } else { "INVALID" })
            })?;
            if valid {
                Ok(())
            } else {
                Err(CliError::Verify("the witness is not a fan-grid of this drawing".into()))
            }
        }
        AnalyzeCommand::Clean { view, comb, q, k } => {
            let (d, view) = load_view(view)?;
            let comb: Comb<NodeRef> = read_json(comb)?;
            let q = nodes(&d, q)?;
            let clean = is_q_clean(&view, &q, &comb).map_err(analyzer_error)?;
            let subcomb = q_clean_subcomb(&view, &q, &comb, *k).map_err(analyzer_error)?;
            let report = CleanReport { clean, k: *k, subcomb };
            sink.emit(&report, || {
                format!(
                    "comb is {}Q-clean; {}\n",
                    if clean { "" } else { "not " },
                    match &report.subcomb {
                        Some(s) => format!("clean subcomb with teeth {:?}", s.teeth.iter().map(|t| t.to_string()).collect::<Vec<_>>()),
                        None => format!("no clean subcomb with {k} teeth"),
                    }
                )
            })
        }
    }
}

#[derive(Debug, Args)]
pub struct ThresholdArgs {
    #[command(subcommand)]
    pub command: ThresholdCommand,
}

#[derive(Debug, Subcommand)]
pub enum ThresholdCommand {
    /// Leaf-count bound f(D, b, k).
    Boundleaves {
        #[arg(long = "D")]
        big_d: u64,
        #[arg(long)]
        b: u64,
        #[arg(long)]
        k: u64,
    },
    /// Thresholds s1, s2, d(s2) and f for extending a fan-grid.
    Extend {
        #[arg(long = "D")]
        big_d: u64,
        #[arg(long)]
        b: u64,
        #[arg(long)]
        m: u64,
        #[arg(long)]
        k: u64,
        #[arg(long)]
        t: u64,
    },
}

/// Big values are written as decimal strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "threshold", rename_all = "kebab-case")]
pub enum ThresholdReport {
    Boundleaves {
        #[serde(rename = "D")]
        big_d: u64,
        b: u64,
        k: u64,
        value: String,
    },
    Extend {
        #[serde(rename = "D")]
        big_d: u64,
        b: u64,
        m: u64,
        k: u64,
        t: u64,
        s1: String,
        s2: String,
        d_s2: String,
        f: String,
    },
}

pub fn thresholds(a: &ThresholdArgs, sink: &Sink) -> Result<(), CliError> {
    let report = match a.command {
        ThresholdCommand::Boundleaves { big_d, b, k } => {
            if big_d == 0 || k == 0 {
                return Err(bad("--D and --k must be at least 1"));
            }
            ThresholdReport::Boundleaves { big_d, b, k, value: bound_leaves_threshold(big_d, b, k).to_string() }
        }
        ThresholdCommand::Extend { big_d, b, m, k, t } => {
            let e = extend_thresholds(big_d, b, m, k, t).map_err(analyzer_error)?;
            ThresholdReport::Extend {
                big_d,
                b,
                m,
                k,
                t,
                s1: e.s1.to_string(),
                s2: e.s2.to_string(),
                d_s2: e.d_s2.to_string(),
                f: e.f_extend.to_string(),
            }
        }
    };
    sink.emit(&report, || match &report {
        ThresholdReport::Boundleaves { big_d, b, k, value } => format!("f({big_d}, {b}, {k}) = {value}\n"),
        ThresholdReport::Extend { s1, s2, d_s2, f, .. } => {
            format!("s1 = {s1}\ns2 = {s2}\nd(s2) = {d_s2}\nf = {f}\n")
        }
    })
}
