//! Exact crossing numbers of small weighted graphs.
//!
//! The search runs over good drawings: every crossing involves two
//! independent skeleton edges, each such pair crosses at most once, and a
//! crossing between a `t1`-thick and a `t2`-thick edge costs `t1 * t2`.
//! Crossing sets are enumerated depth-first with the most expensive pairs
//! first; a set is feasible when some choice of crossing orders along the
//! edges has a planar planarization.

mod oracle;

pub use oracle::{cr_oracle_bruteforce, OracleError, ORACLE_MAX_EDGES, ORACLE_MAX_VERTICES};

use crate::drawing::{search_orders, Drawing};
use crate::graph::{EdgeId, GraphError, WeightedMultigraph};
use crate::planarity::is_planar;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::{Duration, Instant};
use thiserror::Error;

#[derive(Debug, Clone, Default)]
pub struct SolveBudget {
    pub node_limit: Option<u64>,
    pub time_limit: Option<Duration>,
    /// A known drawing; its crossing total is used as the upper bound.
    pub seed: Option<Drawing>,
    /// Worker threads; 1 gives a deterministic search.
    pub threads: usize,
}

impl SolveBudget {
    pub fn unlimited() -> Self {
        SolveBudget { threads: 1, ..Default::default() }
    }

    pub fn with_threads(mut self, threads: usize) -> Self {
        self.threads = threads;
        self
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchStats {
    pub nodes: u64,
    pub elapsed_ms: u64,
}

impl SearchStats {
    fn add(&mut self, other: SearchStats) {
        self.nodes += other.nodes;
        self.elapsed_ms += other.elapsed_ms;
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Decision {
    Yes(Drawing),
    No,
    BudgetExceeded,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolveResult {
    pub cr: u64,
    pub witness: Drawing,
    pub stats: SearchStats,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("graph is not connected")]
    Disconnected,
    #[error("budget exceeded; crossing number lies in [{lower}, {}]", upper.map_or("?".into(), |u| u.to_string()))]
    BudgetExceeded { lower: u64, upper: Option<u64>, stats: SearchStats },
    #[error("seed drawing is not a valid drawing of this graph")]
    BadSeed,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Independent skeleton-edge pairs with their crossing costs, most
/// expensive first.
pub fn candidate_pairs(g: &WeightedMultigraph) -> Vec<(EdgeId, EdgeId, u64)> {
    let edges = g.edges();
    let mut out = Vec::new();
    for (i, a) in edges.iter().enumerate() {
        for b in &edges[i + 1..] {
            if !a.is_adjacent_to(b) {
                out.push((a.id, b.id, a.thickness as u64 * b.thickness as u64));
            }
        }
    }
    out.sort_by(|x, y| y.2.cmp(&x.2).then((x.0, x.1).cmp(&(y.0, y.1))));
    out
}

fn girth(g: &WeightedMultigraph) -> Option<usize> {
    let adj = g.adjacency();
    let n = adj.len();
    let mut best: Option<usize> = None;
    for s in 0..n {
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for &w in &adj[v] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    queue.push_back(w);
                } else if parent[v] != w {
                    let len = dist[v] + dist[w] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}

/// Lower bound from Euler's formula: a planar graph of girth `γ` on `n`
/// vertices has at most `max(n - 1, γ (n - 2) / (γ - 2))` edges, and
/// deleting one edge per crossing leaves a planar graph.
pub fn euler_lower_bound(g: &WeightedMultigraph) -> u64 {
    let n = g.vertex_count() as u64;
    let m = g.edge_count() as u64;
    let Some(girth) = girth(g) else { return 0 };
    if n < 3 {
        return 0;
    }
    let girth = girth as u64;
    let planar_max = (n - 1).max(girth * (n - 2) / (girth - 2));
    m.saturating_sub(planar_max)
}

struct Search<'a> {
    g: &'a WeightedMultigraph,
    pairs: Vec<(EdgeId, EdgeId, u64)>,
    edge_pos: BTreeMap<EdgeId, usize>,
    skeleton: Vec<(usize, usize)>,
    k: u64,
    /// Sets cheaper than this are known infeasible and not tested.
    min_cost: u64,
    nodes: AtomicU64,
    stop: AtomicBool,
    exceeded: AtomicBool,
    node_limit: Option<u64>,
    deadline: Option<Instant>,
}

impl<'a> Search<'a> {
    fn new(g: &'a WeightedMultigraph, k: u64, min_cost: u64, budget: &SolveBudget, start: Instant) -> Self {
        Search {
            g,
            pairs: candidate_pairs(g),
            edge_pos: g.edges().iter().enumerate().map(|(i, e)| (e.id, i)).collect(),
            skeleton: g.index_edges(),
            k,
            min_cost,
            nodes: AtomicU64::new(0),
            stop: AtomicBool::new(false),
            exceeded: AtomicBool::new(false),
            node_limit: budget.node_limit,
            deadline: budget.time_limit.map(|t| start + t),
        }
    }

    fn tick(&self) -> bool {
        let n = self.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        let over = self.node_limit.is_some_and(|l| n > l)
            || (n % 64 == 0 && self.deadline.is_some_and(|d| Instant::now() > d));
        if over {
            self.exceeded.store(true, Ordering::Relaxed);
            self.stop.store(true, Ordering::Relaxed);
        }
        !over
    }

    /// The skeleton minus every edge that is crossed in `chosen` or could
    /// still be crossed by an affordable pair from `from` on; it must be
    /// planar for any extension of `chosen` to be feasible.
    fn extendable(&self, chosen: &[usize], from: usize, cost: u64) -> bool {
        let mut removed = vec![false; self.skeleton.len()];
        let mut mark = |p: usize| {
            removed[self.edge_pos[&self.pairs[p].0]] = true;
            removed[self.edge_pos[&self.pairs[p].1]] = true;
        };
        chosen.iter().for_each(|&p| mark(p));
        (from..self.pairs.len()).filter(|&p| cost + self.pairs[p].2 <= self.k).for_each(&mut mark);
        let kept: Vec<(usize, usize)> =
            self.skeleton.iter().zip(&removed).filter(|(_, &r)| !r).map(|(&e, _)| e).collect();
        is_planar(self.g.vertex_count(), &kept)
    }

    fn feasible(&self, chosen: &[usize]) -> Option<Drawing> {
        let pairs: Vec<(EdgeId, EdgeId)> = chosen.iter().map(|&p| (self.pairs[p].0, self.pairs[p].1)).collect();
        search_orders(self.g, &pairs, usize::MAX).map(|(d, _)| d)
    }

    fn dfs(&self, from: usize, chosen: &mut Vec<usize>, cost: u64) -> Option<Drawing> {
        if self.stop.load(Ordering::Relaxed) || !self.tick() {
            return None;
        }
        if !self.extendable(chosen, from, cost) {
            return None;
        }
        if cost >= self.min_cost && self.extendable(chosen, self.pairs.len(), cost) {
            if let Some(d) = self.feasible(chosen) {
                self.stop.store(true, Ordering::Relaxed);
                return Some(d);
            }
        }
        for p in from..self.pairs.len() {
            let c = cost + self.pairs[p].2;
            if c > self.k {
                continue;
            }
            chosen.push(p);
            let found = self.dfs(p + 1, chosen, c);
            chosen.pop();
            if found.is_some() {
                return found;
            }
            if self.stop.load(Ordering::Relaxed) {
                return None;
            }
        }
        None
    }

    fn run(&self, threads: usize) -> Option<Drawing> {
        if threads <= 1 {
            return self.dfs(0, &mut Vec::new(), 0);
        }
        // The empty set first, then one subtree per first pair.
        if !self.tick() {
            return None;
        }
        if self.min_cost == 0 && self.extendable(&[], self.pairs.len(), 0) {
            if let Some(d) = self.feasible(&[]) {
                return Some(d);
            }
        }
        if !self.extendable(&[], 0, 0) {
            return None;
        }
        let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().expect("thread pool");
        pool.install(|| {
            (0..self.pairs.len())
                .into_par_iter()
                .filter(|&p| self.pairs[p].2 <= self.k)
                .find_map_first(|p| self.dfs(p + 1, &mut vec![p], self.pairs[p].2))
        })
    }
}

fn decide(
    g: &WeightedMultigraph,
    k: u64,
    min_cost: u64,
    budget: &SolveBudget,
) -> (Decision, SearchStats) {
    let start = Instant::now();
    let search = Search::new(g, k, min_cost, budget, start);
    let found = search.run(budget.threads);
    let stats = SearchStats {
        nodes: search.nodes.load(Ordering::Relaxed),
        elapsed_ms: start.elapsed().as_millis() as u64,
    };
    let decision = match found {
        Some(d) => Decision::Yes(d),
        None if search.exceeded.load(Ordering::Relaxed) => Decision::BudgetExceeded,
        None => Decision::No,
    };
    (decision, stats)
}

/// Is there a drawing of `g` with weighted crossing total at most `k`?
pub fn cr_decision(
    g: &WeightedMultigraph,
    k: u64,
    budget: &SolveBudget,
) -> Result<(Decision, SearchStats), SolveError> {
    if !g.is_connected() {
        return Err(SolveError::Disconnected);
    }
    if k < euler_lower_bound(g) {
        return Ok((Decision::No, SearchStats::default()));
    }
    Ok(decide(g, k, 0, budget))
}

/// The crossing number of `g` with an optimal drawing.
pub fn cr_exact(g: &WeightedMultigraph, budget: &SolveBudget) -> Result<SolveResult, SolveError> {
    if !g.is_connected() {
        return Err(SolveError::Disconnected);
    }
    let upper = match &budget.seed {
        Some(d) if d.graph == *g => Some(d.crossing_count().map_err(|_| SolveError::BadSeed)?.total),
        Some(_) => return Err(SolveError::BadSeed),
        None => None,
    };
    let mut stats = SearchStats::default();
    let mut k = euler_lower_bound(g);
    loop {
        if let (Some(u), Some(seed)) = (upper, &budget.seed) {
            if k >= u {
                return Ok(SolveResult { cr: u, witness: seed.clone(), stats });
            }
        }
        let mut level = budget.clone();
        if let Some(t) = budget.time_limit {
            level.time_limit = Some(t.saturating_sub(Duration::from_millis(stats.elapsed_ms)));
        }
        if let Some(n) = budget.node_limit {
            level.node_limit = Some(n.saturating_sub(stats.nodes));
        }
        let (decision, s) = decide(g, k, k, &level);
        stats.add(s);
        match decision {
            Decision::Yes(witness) => return Ok(SolveResult { cr: k, witness, stats }),
            Decision::No => k += 1,
            Decision::BudgetExceeded => return Err(SolveError::BudgetExceeded { lower: k, upper, stats }),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum EdgeOutcome {
    /// `cr(g - e) <= c - 1`, with a witness drawing of `g - e`.
    Drops { witness: Drawing },
    /// `cr(g - e) >= c`: the edge is not critical.
    Keeps,
    /// Deleting the edge disconnects the rest of the graph.
    Disconnects,
    BudgetExceeded,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EdgeReport {
    pub edge: EdgeId,
    pub name: String,
    pub copies: u32,
    pub outcome: EdgeOutcome,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CriticalityReport {
    pub c: u64,
    /// `Some(true)` when no drawing with fewer than `c` crossings exists.
    pub lower_bound_holds: Option<bool>,
    pub edges: Vec<EdgeReport>,
    pub critical: bool,
    pub stats: SearchStats,
}

/// `g` with one copy of `e` deleted and any vertex left isolated removed.
fn without_copy(g: &WeightedMultigraph, e: EdgeId) -> Result<WeightedMultigraph, GraphError> {
    let mut h = g.delete_one_copy(e)?;
    let isolated: BTreeSet<_> = h.vertex_ids().filter(|&v| h.skeleton_degree(v) == Ok(0)).collect();
    for v in isolated {
        h = h.remove_vertex(v)?;
    }
    Ok(h)
}

/// Checks that `cr(g) >= c` and that deleting any single edge copy brings
/// the crossing number below `c`. Copies of a thick edge are
/// interchangeable, so one deletion per skeleton edge is examined.
pub fn criticality_check(
    g: &WeightedMultigraph,
    c: u64,
    budget: &SolveBudget,
) -> Result<CriticalityReport, SolveError> {
    if c == 0 {
        return Ok(CriticalityReport { c, lower_bound_holds: Some(true), edges: vec![], critical: false, stats: SearchStats::default() });
    }
    let mut stats = SearchStats::default();
    let (whole, s) = cr_decision(g, c - 1, budget)?;
    stats.add(s);
    let lower_bound_holds = match whole {
        Decision::No => Some(true),
        Decision::Yes(_) => Some(false),
        Decision::BudgetExceeded => None,
    };
    let mut edges = Vec::new();
    for e in g.edges() {
        let h = without_copy(g, e.id)?;
        let outcome = if !h.is_connected() {
            EdgeOutcome::Disconnects
        } else {
            let (d, s) = cr_decision(&h, c - 1, budget)?;
            stats.add(s);
            match d {
                Decision::Yes(witness) => EdgeOutcome::Drops { witness },
                Decision::No => EdgeOutcome::Keeps,
                Decision::BudgetExceeded => EdgeOutcome::BudgetExceeded,
            }
        };
        edges.push(EdgeReport { edge: e.id, name: g.edge_name(e.id), copies: e.thickness, outcome });
    }
    let critical = lower_bound_holds == Some(true)
        && edges.iter().all(|r| matches!(r.outcome, EdgeOutcome::Drops { .. }));
    Ok(CriticalityReport { c, lower_bound_holds, edges, critical, stats })
}
