use super::AnalyzerError;
use crate::graph::{EdgeId, VertexId, WeightedMultigraph};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};

/// A chord of the cycle, or a component off the cycle with its attachment
/// edges. `j` holds the (1-based) indices of the segments it touches.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CBridge {
    pub vertices: BTreeSet<VertexId>,
    pub edges: BTreeSet<EdgeId>,
    pub j: BTreeSet<usize>,
}

impl CBridge {
    /// `self ≺ other`: the index interval of `other` contains that of
    /// `self`, and either the containment is strict or `J(other)` is a
    /// proper subset of `J(self)`.
    pub fn precedes(&self, other: &CBridge) -> bool {
        let (Some(&lo1), Some(&hi1), Some(&lo2), Some(&hi2)) =
            (self.j.first(), self.j.last(), other.j.first(), other.j.last())
        else {
            return false;
        };
        lo2 <= lo1 && hi1 <= hi2 && (lo2 < lo1 || hi1 < hi2 || (other.j.is_subset(&self.j) && other.j != self.j))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BridgeDecomposition {
    pub bridges: Vec<CBridge>,
    /// All pairs `(a, b)` with `bridges[a] ≺ bridges[b]`.
    pub precedes: Vec<(usize, usize)>,
    /// `chain_length[i]`: the longest ≺-chain ending in bridge `i`.
    pub chain_length: Vec<usize>,
    /// A longest chain, smallest element first.
    pub longest_chain: Vec<usize>,
}

/// Splits the graph off the cycle into C-bridges; `segments` are the paths
/// `Q1..Qn` of the cycle.
pub fn c_bridge_decomposition(
    g: &WeightedMultigraph,
    cycle: &[VertexId],
    segments: &[Vec<VertexId>],
) -> Result<BridgeDecomposition, AnalyzerError> {
    let on_cycle: BTreeSet<VertexId> = cycle.iter().copied().collect();
    if cycle.len() < 3 || on_cycle.len() != cycle.len() {
        return Err(AnalyzerError::Precondition("cycle must have at least three distinct vertices".into()));
    }
    let mut cycle_edges = BTreeSet::new();
    for i in 0..cycle.len() {
        let (a, b) = (cycle[i], cycle[(i + 1) % cycle.len()]);
        let e = g.edge_between(a, b).ok_or_else(|| AnalyzerError::Precondition(format!("{a} and {b} are not adjacent")))?;
        cycle_edges.insert(e);
    }
    let mut segment_of = BTreeMap::new();
    for (i, q) in segments.iter().enumerate() {
        for &v in q {
            if !on_cycle.contains(&v) || segment_of.insert(v, i + 1).is_some() {
                return Err(AnalyzerError::Precondition(format!("segment vertex {v} is off the cycle or repeated")));
            }
        }
    }
    let touched = |vs: &BTreeSet<VertexId>| -> BTreeSet<usize> { vs.iter().filter_map(|v| segment_of.get(v).copied()).collect() };

    let mut bridges = Vec::new();
    for e in g.edges() {
        if !cycle_edges.contains(&e.id) && on_cycle.contains(&e.u) && on_cycle.contains(&e.v) {
            let vertices = BTreeSet::from([e.u, e.v]);
            bridges.push(CBridge { j: touched(&vertices), vertices, edges: BTreeSet::from([e.id]) });
        }
    }
    let mut seen = BTreeSet::new();
    for start in g.vertex_ids() {
        if on_cycle.contains(&start) || !seen.insert(start) {
            continue;
        }
        let mut vertices = BTreeSet::from([start]);
        let mut edges = BTreeSet::new();
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for e in g.incident_edges(v)? {
                edges.insert(e.id);
                let w = e.other(v);
                vertices.insert(w);
                if !on_cycle.contains(&w) && seen.insert(w) {
                    stack.push(w);
                }
            }
        }
        let attachments: BTreeSet<VertexId> = vertices.intersection(&on_cycle).copied().collect();
        bridges.push(CBridge { j: touched(&attachments), vertices, edges });
    }

    let n = bridges.len();
    let mut precedes = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if bridges[a].precedes(&bridges[b]) {
                precedes.push((a, b));
            }
        }
    }
    // ≺ strictly increases (interval width, -|J|), so that order is a
    // topological order.
    let key = |h: &CBridge| match (h.j.first(), h.j.last()) {
        (Some(lo), Some(hi)) => (hi - lo, usize::MAX - h.j.len()),
        _ => (0, 0),
    };
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| key(&bridges[i]));
    let mut chain_length = vec![1usize; n];
    let mut prev = vec![None; n];
    for (pos, &b) in order.iter().enumerate() {
        for &a in &order[..pos] {
            if bridges[a].precedes(&bridges[b]) && chain_length[a] + 1 > chain_length[b] {
                chain_length[b] = chain_length[a] + 1;
                prev[b] = Some(a);
            }
        }
    }
    let mut longest_chain = Vec::new();
    if let Some(top) = (0..n).max_by_key(|&i| (chain_length[i], std::cmp::Reverse(i))) {
        longest_chain.push(top);
        while let Some(p) = prev[*longest_chain.last().unwrap()] {
            longest_chain.push(p);
        }
        longest_chain.reverse();
    }
    Ok(BridgeDecomposition { bridges, precedes, chain_length, longest_chain })
}
