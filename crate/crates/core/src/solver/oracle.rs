//! Exhaustive crossing numbers for tiny graphs.
//!
//! Shares nothing with the main search beyond the graph type: crossing sets
//! are enumerated by exact cost, every choice of crossing orders along the
//! edges is tried, and the resulting planarization (crossings as plain
//! degree-4 vertices) is tested with the left-right planarity test from
//! `rustworkx-core`. A plane planarization whose crossing vertices do not
//! alternate can always be redrawn with fewer crossings, so the smallest
//! cost found is the crossing number.

use crate::graph::WeightedMultigraph;
use rustworkx_core::petgraph::graph::UnGraph;
use thiserror::Error;

pub const ORACLE_MAX_VERTICES: usize = 10;
pub const ORACLE_MAX_EDGES: usize = 18;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("graph too large for the exhaustive oracle ({vertices} vertices, {edges} edges)")]
    TooLarge { vertices: usize, edges: usize },
    #[error("graph is not connected")]
    Disconnected,
}

struct Instance {
    n: usize,
    edges: Vec<(usize, usize)>,
    /// Independent edge pairs with their costs.
    pairs: Vec<(usize, usize, u64)>,
}

impl Instance {
    /// Tries every crossing order for the chosen pairs.
    fn drawable(&self, chosen: &[usize]) -> bool {
        let mut along: Vec<Vec<usize>> = vec![Vec::new(); self.edges.len()];
        for (c, &p) in chosen.iter().enumerate() {
            along[self.pairs[p].0].push(c);
            along[self.pairs[p].1].push(c);
        }
        self.try_orders(&mut along, 0)
    }

    fn try_orders(&self, along: &mut [Vec<usize>], e: usize) -> bool {
        if e == along.len() {
            return self.planarization_is_planar(along);
        }
        let len = along[e].len();
        if len < 2 {
            return self.try_orders(along, e + 1);
        }
        // Heap's algorithm over the crossings on edge `e`.
        let mut c = vec![0usize; len];
        if self.try_orders(along, e + 1) {
            return true;
        }
        let mut i = 0;
        while i < len {
            if c[i] < i {
                if i % 2 == 0 {
                    along[e].swap(0, i);
                } else {
                    along[e].swap(c[i], i);
                }
                if self.try_orders(along, e + 1) {
                    return true;
                }
                c[i] += 1;
                i = 0;
            } else {
                c[i] = 0;
                i += 1;
            }
        }
        false
    }

    fn planarization_is_planar(&self, along: &[Vec<usize>]) -> bool {
        let crossings = along.iter().map(Vec::len).sum::<usize>() / 2;
        let mut g = UnGraph::<(), ()>::with_capacity(self.n + crossings, 0);
        let nodes: Vec<_> = (0..self.n + crossings).map(|_| g.add_node(())).collect();
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            let mut prev = u;
            for &c in &along[e] {
                g.add_edge(nodes[prev], nodes[self.n + c], ());
                prev = self.n + c;
            }
            g.add_edge(nodes[prev], nodes[v], ());
        }
        rustworkx_core::planar::is_planar(&g)
    }

    /// Subsets of pairs from `from` on with cost exactly `left`.
    fn search(&self, from: usize, left: u64, chosen: &mut Vec<usize>) -> bool {
        if left == 0 {
            return self.drawable(chosen);
        }
        for p in from..self.pairs.len() {
            let cost = self.pairs[p].2;
            if cost > left {
                continue;
            }
            chosen.push(p);
            let found = self.search(p + 1, left - cost, chosen);
            chosen.pop();
            if found {
                return true;
            }
        }
        false
    }
}

/// The crossing number by exhaustive search; only for graphs with at most
/// [`ORACLE_MAX_VERTICES`] vertices and [`ORACLE_MAX_EDGES`] skeleton edges.
pub fn cr_oracle_bruteforce(g: &WeightedMultigraph) -> Result<u64, OracleError> {
    let (vertices, edge_count) = (g.vertex_count(), g.edge_count());
    if vertices > ORACLE_MAX_VERTICES || edge_count > ORACLE_MAX_EDGES {
        return Err(OracleError::TooLarge { vertices, edges: edge_count });
    }
    if !g.is_connected() {
        return Err(OracleError::Disconnected);
    }
    let edges = g.index_edges();
    let weights: Vec<u64> = g.edges().iter().map(|e| e.thickness as u64).collect();
    let mut pairs = Vec::new();
    for a in 0..edges.len() {
        for b in a + 1..edges.len() {
            let (p, q) = (edges[a], edges[b]);
            if p.0 != q.0 && p.0 != q.1 && p.1 != q.0 && p.1 != q.1 {
                pairs.push((a, b, weights[a] * weights[b]));
            }
        }
    }
    let max: u64 = pairs.iter().map(|p| p.2).sum();
    let inst = Instance { n: vertices, edges, pairs };
    for cost in 0..=max {
        if inst.search(0, cost, &mut Vec::new()) {
            return Ok(cost);
        }
    }
    unreachable!("every graph has a drawing with each independent pair crossing at most once")
}
