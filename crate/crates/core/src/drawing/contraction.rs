//! Merging neighbouring wedges of a ccg13k drawing into one.
//!
//! The rewrite depends on the rotation at the chain vertex `w3^i` shared by
//! wedges `i` and `i + 1`: which of its neighbours sits opposite `w4^i`.
//! When it is `w3^(i+1)` or `w2^i` the two wedges are merged directly; when
//! it is `w1^(i+1)` the same must hold at `w3^(i+1)` (or `w3^(i-1)`) and
//! three wedges are merged. Every crossing of the result already existed in
//! the input, so the weighted total never grows.

use super::plan::Plan;
use super::{Drawing, NodeRef, RelabelError, Violation};
use crate::families::{generate_ccg13k, wedge_count, wedge_label, FamilyError};
use crate::graph::{GraphError, VertexId};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RotationCase {
    /// `w3^(i+1)` opposite `w4^i`.
    One,
    /// `w2^i` opposite `w4^i`.
    Two,
    /// `w1^(i+1)` opposite `w4^i`.
    Three,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ContractionError {
    #[error("wedge index {i} out of range 1..{k}")]
    Index { i: usize, k: usize },
    #[error("contracting {removed} wedge(s) of ccg13 with k = {k} would leave fewer than 2")]
    Floor { k: usize, removed: usize },
    #[error("vertex w3^{0} does not have four distinct neighbours")]
    Rotation(usize),
    #[error("drawing is invalid: {0}")]
    Invalid(#[from] Violation),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Relabel(#[from] RelabelError),
}

fn neighbours_around(d: &Drawing, v: VertexId) -> Vec<VertexId> {
    d.rotation
        .get(&NodeRef::Vertex(v))
        .map(|ends| {
            ends.iter()
                .filter_map(|end| d.graph.edge(end.edge).ok().map(|e| e.other(v)))
                .collect()
        })
        .unwrap_or_default()
}

/// The rotation case at the chain vertex `w3^i` of a ccg13k drawing.
pub fn rotation_case(d: &Drawing, i: usize) -> Result<RotationCase, ContractionError> {
    let g = &d.graph;
    let k = wedge_count(g);
    if i == 0 || i >= k {
        return Err(ContractionError::Index { i, k });
    }
    let at = |j, w| g.vertex_by_label(&wedge_label(j, w, k));
    let centre = at(3, i)?;
    let around = neighbours_around(d, centre);
    if around.len() != 4 {
        return Err(ContractionError::Rotation(i));
    }
    let p = around.iter().position(|&v| Ok(v) == at(4, i)).ok_or(ContractionError::Rotation(i))?;
    let opposite = around[(p + 2) % 4];
    if Ok(opposite) == at(3, i + 1) {
        Ok(RotationCase::One)
    } else if Ok(opposite) == at(2, i) {
        Ok(RotationCase::Two)
    } else if Ok(opposite) == at(1, i + 1) {
        Ok(RotationCase::Three)
    } else {
        Err(ContractionError::Rotation(i))
    }
}

/// New label of a surviving vertex after wedges `i..i+removed` are merged
/// into wedge `i`.
fn shifted_label(label: &str, i: usize, removed: usize, k: usize) -> String {
    let Some((j, w)) = label
        .strip_prefix('w')
        .and_then(|r| r.split_once('^'))
        .and_then(|(j, w)| Some((j.parse::<usize>().ok()?, w.parse::<usize>().ok()?)))
    else {
        return label.to_string();
    };
    let first_moved = if j == 1 { i + 1 + removed } else { i + removed };
    if w < i || (j == 1 && w == i) {
        label.to_string()
    } else if w >= first_moved {
        wedge_label(j, w - removed, k - removed)
    } else {
        unreachable!("vertex {label} is dissolved by the contraction")
    }
}

/// Rewrites a valid drawing of ccg13k into a drawing of ccg13(k-1) (rotation
/// cases one and two) or ccg13(k-2) (case three) whose crossings all
/// existed in `d`. The result is relabelled onto the generated graph.
pub fn wedge_contraction(d: &Drawing, i: usize) -> Result<Drawing, ContractionError> {
    d.verify()?;
    let k = wedge_count(&d.graph);
    let case = rotation_case(d, i)?;
    let (start, removed) = match case {
        RotationCase::One | RotationCase::Two => (i, 1),
        RotationCase::Three => {
            let next = if i + 1 < k { Some(i + 1) } else { None };
            match next.map(|j| rotation_case(d, j)).transpose()? {
                Some(RotationCase::Three) => (i, 2),
                Some(_) => (i + 1, 1),
                None if i > 1 => match rotation_case(d, i - 1)? {
                    RotationCase::Three => (i - 1, 2),
                    _ => (i - 1, 1),
                },
                None => (i, 2),
            }
        }
    };
    if k < 2 + removed {
        return Err(ContractionError::Floor { k, removed });
    }
    let g = &d.graph;
    let v = |j: usize, w: usize| g.vertex_by_label(&wedge_label(j, w, k));
    let x = g.vertex_by_label("x")?;
    let i = start;
    let (deleted, path1, path2, dissolved) = if removed == 1 {
        (
            vec![(x, v(4, i)?), (x, v(1, i + 1)?)],
            vec![v(1, i)?, v(4, i)?, v(3, i)?, v(1, i + 1)?, v(4, i + 1)?],
            vec![v(2, i)?, v(3, i)?, v(3, i + 1)?],
            vec![v(4, i)?, v(3, i)?, v(1, i + 1)?],
        )
    } else {
        (
            vec![(x, v(4, i)?), (x, v(1, i + 1)?), (x, v(4, i + 1)?), (x, v(1, i + 2)?)],
            vec![v(1, i)?, v(4, i)?, v(3, i)?, v(3, i + 1)?, v(1, i + 2)?, v(4, i + 2)?],
            vec![v(2, i)?, v(3, i)?, v(1, i + 1)?, v(4, i + 1)?, v(3, i + 1)?, v(3, i + 2)?],
            vec![v(4, i)?, v(3, i)?, v(1, i + 1)?, v(4, i + 1)?, v(3, i + 1)?, v(1, i + 2)?],
        )
    };
    let mut plan = Plan::from_drawing(d);
    for (a, b) in deleted {
        let e = plan.graph.edge_between(a, b).ok_or(GraphError::UnknownVertex(b))?;
        plan.remove_edge(e);
    }
    plan.splice_path(&path1);
    plan.splice_path(&path2);
    for w in dissolved {
        plan.dissolve_vertex(w);
    }
    plan.remove_self_crossings();
    let contracted = plan.to_drawing();

    let target = generate_ccg13k(k - removed)?;
    let mut map = BTreeMap::new();
    for vert in contracted.graph.vertices() {
        let label = vert.label.as_deref().ok_or(GraphError::UnknownVertex(vert.id))?;
        let image = shifted_label(label, i, removed, k);
        map.insert(vert.id, target.vertex_by_label(&image)?);
    }
    let out = contracted.relabel(&target, &map)?;
    out.verify()?;
    Ok(out)
}
