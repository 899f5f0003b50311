//! Structural tools for plane graphs and trees: binary-minor depth, the
//! leaf-count recurrence and its derived thresholds, combs, fan-grids,
//! 1-nests, C-bridges and disjoint path counting.

mod bridges;
mod clean;
mod fan_grid;
mod nest;
mod paths;
mod plane;
mod thresholds;
mod trees;

pub use bridges::{c_bridge_decomposition, BridgeDecomposition, CBridge};
pub use clean::{is_q_clean, q_clean_subcomb};
pub use fan_grid::{all_pairs_intersect, path_systems, verify_fan_grid, FanGrid};
pub use nest::{one_nest_depth, NestResult};
pub use paths::count_internally_disjoint_paths;
pub use plane::{drawing_from_coordinates, PlaneView};
pub use thresholds::{bound_leaves_threshold, d_value, extend_thresholds, ExtendThresholds, EXTEND_BIT_CAP};
pub use trees::{binary_minor_depth, branch_path_comb, find_comb, is_leaf_comb, leaf_count, RootedTree};

use crate::drawing::{NodeRef, Violation};
use crate::graph::{GraphError, VertexId};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalyzerError {
    #[error("graph is not a tree")]
    NotATree,
    #[error("drawing is invalid: {0}")]
    Invalid(#[from] Violation),
    #[error("unknown node {0}")]
    UnknownNode(NodeRef),
    #[error("nodes {0} and {1} are not adjacent")]
    NotAdjacent(NodeRef, NodeRef),
    #[error("{0}")]
    Precondition(String),
    #[error("cycle budget of {0} exhausted")]
    CycleBudget(usize),
    #[error("value would need more than {0} bits")]
    TooLarge(u64),
    #[error("argument {0} must be at least 1")]
    ZeroArgument(&'static str),
    #[error("vertex {0} has no coordinates")]
    MissingCoordinates(VertexId),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A spine path with vertex-disjoint tooth paths; `tooth_paths[i]` runs
/// from `teeth[i]` to a spine vertex and has at least one edge.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Comb<N> {
    pub spine: Vec<N>,
    pub teeth: Vec<N>,
    pub tooth_paths: Vec<Vec<N>>,
}

impl<N: Ord + Copy> Comb<N> {
    pub fn teeth_count(&self) -> usize {
        self.teeth.len()
    }

    /// Every node of the comb.
    pub fn nodes(&self) -> BTreeSet<N> {
        self.spine.iter().chain(self.tooth_paths.iter().flatten()).copied().collect()
    }

    /// Checks the shape only: a non-empty spine without repeats, tooth paths
    /// of length at least one from each tooth to a distinct spine vertex,
    /// pairwise disjoint and meeting the spine only at their last vertex.
    /// Adjacency is checked by the caller against its graph.
    pub fn is_well_formed(&self) -> bool {
        let spine: BTreeSet<N> = self.spine.iter().copied().collect();
        if self.spine.is_empty() || spine.len() != self.spine.len() || self.teeth.len() != self.tooth_paths.len() {
            return false;
        }
        let mut used = BTreeSet::new();
        for (t, path) in self.teeth.iter().zip(&self.tooth_paths) {
            let Some((&last, rest)) = path.split_last() else { return false };
            if path.len() < 2 || path[0] != *t || !spine.contains(&last) {
                return false;
            }
            if rest.iter().any(|n| spine.contains(n)) {
                return false;
            }
            for &n in path {
                if !used.insert(n) {
                    return false;
                }
            }
        }
        true
    }

    /// The subcomb keeping the teeth at `keep` (indices into `teeth`) with
    /// the shortest spine segment covering their attachments.
    pub fn subcomb(&self, keep: &[usize]) -> Comb<N> {
        let at = |i: usize| {
            let last = *self.tooth_paths[i].last().expect("tooth path");
            self.spine.iter().position(|&s| s == last).expect("attached to spine")
        };
        let lo = keep.iter().map(|&i| at(i)).min().unwrap_or(0);
        let hi = keep.iter().map(|&i| at(i)).max().unwrap_or(0);
        Comb {
            spine: self.spine[lo..=hi].to_vec(),
            teeth: keep.iter().map(|&i| self.teeth[i]).collect(),
            tooth_paths: keep.iter().map(|&i| self.tooth_paths[i].clone()).collect(),
        }
    }
}
