use crate::drawings::resolve_edge;
use crate::output::{bad, read_json, table, CliError, Sink};
use clap::Args;
use crosscrit::drawing::{canonical_drawing, drop_drawing, edge_class, Drawing, EdgeClass, Figure};
use crosscrit::families::generate_ccg13k;
use crosscrit::solver::{cr_decision, cr_exact, criticality_check, Decision, EdgeOutcome, SearchStats, SolveBudget, SolveError};
use crosscrit::{EdgeId, WeightedMultigraph};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::path::PathBuf;
use std::time::Duration;

#[derive(Debug, Args)]
pub struct BudgetArgs {
    /// Search-node limit.
    #[arg(long)]
    pub nodes: Option<u64>,
    /// Wall-clock limit in seconds.
    #[arg(long = "timeout-s")]
    pub timeout_s: Option<f64>,
}

impl BudgetArgs {
    fn budget(&self, threads: usize) -> Result<SolveBudget, CliError> {
        let time_limit = match self.timeout_s {
            Some(s) if !(s > 0.0 && s.is_finite()) => return Err(bad("--timeout-s must be positive")),
            Some(s) => Some(Duration::from_secs_f64(s)),
            None => None,
        };
        Ok(SolveBudget { node_limit: self.nodes, time_limit, seed: None, threads })
    }
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    /// Graph JSON file.
    pub graph: PathBuf,
    #[command(flatten)]
    pub budget: BudgetArgs,
    /// A drawing of the graph whose total bounds the search.
    #[arg(long)]
    pub seed: Option<PathBuf>,
    /// Only decide whether the crossing number is at most this value.
    #[arg(long)]
    pub decide: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum SolveReport {
    Solved { cr: u64, witness: Drawing, stats: SearchStats },
    Yes { k: u64, witness: Drawing, stats: SearchStats },
    No { k: u64, stats: SearchStats },
    BudgetExceeded { lower: u64, upper: Option<u64>, stats: SearchStats },
}

fn solve_error(e: SolveError) -> CliError {
    match e {
        SolveError::BadSeed => CliError::Verify(e.to_string()),
        _ => bad(e),
    }
}

fn check_witness(w: &Drawing, g: &WeightedMultigraph, bound: u64) -> Result<(), CliError> {
    let total = w.crossing_count().map_err(|e| CliError::Verify(format!("witness: {e}")))?.total;
    if &w.graph != g || total > bound {
        return Err(CliError::Verify(format!("witness has {total} crossings, expected at most {bound}")));
    }
    Ok(())
}

pub fn solve(a: &SolveArgs, threads: usize, sink: &Sink) -> Result<(), CliError> {
    let g: WeightedMultigraph = read_json(&a.graph)?;
    let mut budget = a.budget.budget(threads)?;
    if let Some(p) = &a.seed {
        budget.seed = Some(read_json(p)?);
    }
    let report = match a.decide {
        Some(k) => match cr_decision(&g, k, &budget).map_err(solve_error)? {
            (Decision::Yes(witness), stats) => {
                check_witness(&witness, &g, k)?;
                SolveReport::Yes { k, witness, stats }
            }
            (Decision::No, stats) => SolveReport::No { k, stats },
            (Decision::BudgetExceeded, stats) => SolveReport::BudgetExceeded { lower: 0, upper: None, stats },
        },
        None => match cr_exact(&g, &budget) {
            Ok(r) => {
                check_witness(&r.witness, &g, r.cr)?;
                SolveReport::Solved { cr: r.cr, witness: r.witness, stats: r.stats }
            }
            Err(SolveError::BudgetExceeded { lower, upper, stats }) => SolveReport::BudgetExceeded { lower, upper, stats },
            Err(e) => return Err(solve_error(e)),
        },
    };
    sink.emit(&report, || match &report {
        SolveReport::Solved { cr, stats, .. } => format!("cr = {cr} ({} nodes, {} ms)\n", stats.nodes, stats.elapsed_ms),
        SolveReport::Yes { k, .. } => format!("cr <= {k}\n"),
        SolveReport::No { k, .. } => format!("cr > {k}\n"),
        SolveReport::BudgetExceeded { lower, upper, .. } => {
            format!("budget exceeded; cr in [{lower}, {}]\n", upper.map_or("?".into(), |u| u.to_string()))
        }
    })?;
    match report {
        SolveReport::BudgetExceeded { lower, upper, .. } => {
            Err(CliError::Budget(format!("crossing number lies in [{lower}, {}]", upper.map_or("?".into(), |u| u.to_string()))))
        }
        _ => Ok(()),
    }
}

#[derive(Debug, Args)]
pub struct CritArgs {
    /// `ccg13`, or a graph JSON file.
    pub target: String,
    /// Wedge count (ccg13).
    #[arg(long)]
    pub k: Option<usize>,
    /// Crossing number to certify (graph files).
    #[arg(long)]
    pub c: Option<u64>,
    /// Restrict a ccg13 table to one edge, as `a,b` or `e<id>`.
    #[arg(long)]
    pub edge: Option<String>,
    #[command(flatten)]
    pub budget: BudgetArgs,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DropRow {
    pub edge: EdgeId,
    pub name: String,
    pub copy: u32,
    pub class: EdgeClass,
    pub figure: Figure,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wedge: Option<usize>,
    pub mirror: bool,
    pub valid: bool,
    pub total: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Ccg13Certificate {
    pub k: usize,
    pub canonical_valid: bool,
    pub canonical_total: Option<u64>,
    /// Every drop drawing must stay at or below this total.
    pub threshold: u64,
    pub rows: Vec<DropRow>,
    pub max_drop_total: Option<u64>,
    pub certified: bool,
}

fn ccg13_certificate(k: usize, only: Option<&str>) -> Result<Ccg13Certificate, CliError> {
    let g = generate_ccg13k(k).map_err(bad)?;
    let canonical = canonical_drawing(k).map_err(bad)?;
    let canonical_total = canonical.crossing_count().ok().map(|c| c.total);
    let edges: Vec<EdgeId> = match only {
        Some(s) => vec![resolve_edge(&g, s)?],
        None => g.edges().iter().map(|e| e.id).collect(),
    };
    let mut jobs = Vec::new();
    for &e in &edges {
        let (class, template) = edge_class(&g, k, e).map_err(bad)?;
        for copy in 0..g.edge(e).map_err(bad)?.thickness {
            jobs.push((e, copy, class, template));
        }
    }
    // Collected in job order whatever the completion order.
    let rows: Vec<DropRow> = jobs
        .par_iter()
        .map(|&(e, copy, class, template)| {
            let total = drop_drawing(k, e, copy).ok().and_then(|d| d.crossing_count().ok()).map(|c| c.total);
            DropRow {
                edge: e,
                name: g.edge_name(e),
                copy,
                class,
                figure: template.figure,
                wedge: template.i,
                mirror: template.mirror,
                valid: total.is_some(),
                total,
            }
        })
        .collect();
    let threshold = 12;
    let max_drop_total = rows.iter().filter_map(|r| r.total).max();
    let certified = canonical_total == Some(13) && rows.iter().all(|r| r.total.is_some_and(|t| t <= threshold));
    Ok(Ccg13Certificate {
        k,
        canonical_valid: canonical_total.is_some(),
        canonical_total,
        threshold,
        rows,
        max_drop_total,
        certified,
    })
}

fn render_certificate(c: &Ccg13Certificate) -> String {
    let rows: Vec<Vec<String>> = c
        .rows
        .iter()
        .map(|r| {
            let mut figure = r.figure.to_string();
            if let Some(i) = r.wedge {
                figure += &format!(" i={i}");
            }
            if r.mirror {
                figure += " mirrored";
            }
            vec![
                r.name.clone(),
                r.copy.to_string(),
                serde_json::to_value(r.class).unwrap().as_str().unwrap_or_default().to_string(),
                figure,
                r.total.map_or("INVALID".into(), |t| t.to_string()),
                if r.total.is_some_and(|t| t <= c.threshold) { "ok" } else { "FAIL" }.into(),
            ]
        })
        .collect();
    format!(
        "ccg13 k={}: canonical total {}\n{}drop drawings: {} copies, max total {}; {}\n",
        c.k,
        c.canonical_total.map_or("INVALID".into(), |t| t.to_string()),
        table(&["edge", "copy", "class", "drawing", "total", "<= 12"], &rows),
        c.rows.len(),
        c.max_drop_total.map_or("-".into(), |t| t.to_string()),
        if c.certified { "certified" } else { "NOT certified" }
    )
}

fn render_report(r: &crosscrit::solver::CriticalityReport) -> String {
    let rows: Vec<Vec<String>> = r
        .edges
        .iter()
        .map(|e| {
            let outcome = match &e.outcome {
                EdgeOutcome::Drops { witness } => {
                    format!("drops ({})", witness.crossing_count().map_or("?".into(), |c| c.total.to_string()))
                }
                EdgeOutcome::Keeps => "keeps".into(),
                EdgeOutcome::Disconnects => "disconnects".into(),
                EdgeOutcome::BudgetExceeded => "budget exceeded".into(),
            };
            vec![e.name.clone(), e.copies.to_string(), outcome]
        })
        .collect();
    let lower = match r.lower_bound_holds {
        Some(true) => "holds",
        Some(false) => "FAILS",
        None => "unknown",
    };
    format!(
        "cr >= {}: {lower}\n{}{}-critical: {}\n",
        r.c,
        table(&["edge", "copies", "outcome"], &rows),
        r.c,
        if r.critical { "yes" } else { "no" }
    )
}

pub fn crit(a: &CritArgs, threads: usize, sink: &Sink) -> Result<(), CliError> {
    if a.target == "ccg13" {
        let k = a.k.ok_or_else(|| bad("--k is required for ccg13"))?;
        let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().map_err(bad)?;
        let cert = pool.install(|| ccg13_certificate(k, a.edge.as_deref()))?;
        sink.emit(&cert, || render_certificate(&cert))?;
        return if cert.certified {
            Ok(())
        } else {
            Err(CliError::Verify(format!("ccg13 with k = {k} is not certified by its drawings")))
        };
    }
    let g: WeightedMultigraph = read_json(std::path::Path::new(&a.target))?;
    let c = a.c.ok_or_else(|| bad("--c is required for graph files"))?;
    if c == 0 {
        return Err(bad("--c must be at least 1"));
    }
    let budget = a.budget.budget(threads)?;
    let report = criticality_check(&g, c, &budget).map_err(bad)?;
    sink.emit(&report, || render_report(&report))?;
    let undecided =
        report.lower_bound_holds.is_none() || report.edges.iter().any(|e| matches!(e.outcome, EdgeOutcome::BudgetExceeded));
    if report.critical {
        Ok(())
    } else if undecided {
        Err(CliError::Budget("criticality could not be decided within the budget".into()))
    } else {
        Err(CliError::Verify(format!("the graph is not {c}-crossing-critical")))
    }
}
