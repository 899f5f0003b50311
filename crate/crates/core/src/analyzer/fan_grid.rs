use super::plane::PlaneView;
use super::AnalyzerError;
use crate::drawing::NodeRef;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

/// A claimed `(r x n)`-fan-grid with explicit rays and rows. The cycle
/// starts at the center; after the center it is `left`, the segments
/// `Q1..Qn` and `right`, in that order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FanGrid {
    pub center: NodeRef,
    pub cycle: Vec<NodeRef>,
    pub left: Vec<NodeRef>,
    pub segments: Vec<Vec<NodeRef>>,
    pub right: Vec<NodeRef>,
    pub rays: Vec<Vec<NodeRef>>,
    pub rows: Vec<Vec<NodeRef>>,
}

impl FanGrid {
    pub fn shape(&self) -> (usize, usize) {
        (self.rows.len(), self.segments.len())
    }
}

fn distinct(p: &[usize]) -> bool {
    p.iter().collect::<BTreeSet<_>>().len() == p.len()
}

/// Whether the path (node indices) is a path of the subgraph `H`.
fn inside(view: &PlaneView, p: &[usize], nodes: &BTreeSet<usize>, edges: &BTreeSet<usize>) -> bool {
    distinct(p)
        && p.iter().all(|v| nodes.contains(v))
        && p.windows(2).all(|w| {
            // Any parallel segment inside the disk will do.
            view.plane.rotation[w[0]]
                .iter()
                .any(|&d| view.plane.head(d) == w[1] && edges.contains(&(d / 2)))
        })
}

/// Checks both fan-grid conditions inside the closed disk of the cycle.
/// Unknown nodes are errors; a claim that fails is `Ok(false)`.
pub fn verify_fan_grid(view: &PlaneView, fg: &FanGrid) -> Result<bool, AnalyzerError> {
    let idx = |ns: &[NodeRef]| ns.iter().map(|&n| view.node(n)).collect::<Result<Vec<_>, _>>();
    let center = view.node(fg.center)?;
    let cycle = idx(&fg.cycle)?;
    let left = idx(&fg.left)?;
    let right = idx(&fg.right)?;
    let segments = fg.segments.iter().map(|q| idx(q)).collect::<Result<Vec<_>, _>>()?;
    let rays = fg.rays.iter().map(|p| idx(p)).collect::<Result<Vec<_>, _>>()?;
    let rows = fg.rows.iter().map(|p| idx(p)).collect::<Result<Vec<_>, _>>()?;

    if !view.on_outer_face(center) || cycle.len() < 3 || cycle[0] != center || !distinct(&cycle) {
        return Ok(false);
    }
    let mut closed = cycle.clone();
    closed.push(center);
    if closed.windows(2).any(|w| view.edge_between(w[0], w[1]).is_none()) {
        return Ok(false);
    }
    let mut parts = left.clone();
    for q in &segments {
        if q.is_empty() {
            return Ok(false);
        }
        parts.extend(q);
    }
    parts.extend(&right);
    if parts != cycle[1..] {
        return Ok(false);
    }
    let (nodes, edges) = match view.closed_disk(&cycle) {
        Ok(disk) => disk,
        Err(_) => return Ok(false),
    };

    if rays.len() != segments.len() {
        return Ok(false);
    }
    for (ray, q) in rays.iter().zip(&segments) {
        let ends_ok = ray.len() >= 2 && ray[0] == center && q.contains(ray.last().unwrap());
        if !ends_ok || !inside(view, ray, &nodes, &edges) {
            return Ok(false);
        }
    }
    for (i, a) in rays.iter().enumerate() {
        let interior: BTreeSet<usize> = a[1..a.len() - 1].iter().copied().collect();
        for (j, b) in rays.iter().enumerate() {
            if i != j && b.iter().any(|v| interior.contains(v)) {
                return Ok(false);
            }
        }
    }

    let q_nodes: BTreeSet<usize> = segments.iter().flatten().copied().collect();
    let mut used = BTreeSet::new();
    for row in &rows {
        let ends_ok = !row.is_empty() && left.contains(&row[0]) && right.contains(row.last().unwrap());
        if !ends_ok || !inside(view, row, &nodes, &edges) || row.iter().any(|v| q_nodes.contains(v)) {
            return Ok(false);
        }
        for &v in row {
            if !used.insert(v) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The rays without the center and the rows: two systems of pairwise
/// disjoint paths.
pub fn path_systems(fg: &FanGrid) -> (Vec<BTreeSet<NodeRef>>, Vec<BTreeSet<NodeRef>>) {
    let rays = fg.rays.iter().map(|p| p.iter().copied().filter(|&n| n != fg.center).collect()).collect();
    let rows = fg.rows.iter().map(|p| p.iter().copied().collect()).collect();
    (rays, rows)
}

/// Paths within each system are pairwise disjoint and every path of one
/// system meets every path of the other.
pub fn all_pairs_intersect(a: &[BTreeSet<NodeRef>], b: &[BTreeSet<NodeRef>]) -> bool {
    let disjoint = |s: &[BTreeSet<NodeRef>]| {
        s.iter().enumerate().all(|(i, x)| s[i + 1..].iter().all(|y| x.is_disjoint(y)))
    };
    disjoint(a) && disjoint(b) && a.iter().all(|x| b.iter().all(|y| !x.is_disjoint(y)))
}
