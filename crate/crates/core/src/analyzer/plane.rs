use super::AnalyzerError;
use crate::drawing::{Drawing, NodeRef};
use crate::embedding::{twin, Faces, PlaneGraph};
use crate::graph::{EdgeId, VertexId, WeightedMultigraph};
use std::collections::{BTreeMap, BTreeSet};

/// The planarization of a drawing with a designated outer face.
#[derive(Debug, Clone)]
pub struct PlaneView {
    pub plane: PlaneGraph,
    pub nodes: Vec<NodeRef>,
    index: BTreeMap<NodeRef, usize>,
    faces: Faces,
}

impl PlaneView {
    /// `outer` names a directed planarization edge whose face is the outer
    /// face; without it the longest face is used.
    pub fn new(d: &Drawing, outer: Option<(NodeRef, NodeRef)>) -> Result<Self, AnalyzerError> {
        d.verify()?;
        let p = d.planarization()?;
        let index: BTreeMap<NodeRef, usize> = p.nodes.iter().enumerate().map(|(i, &n)| (n, i)).collect();
        let mut plane = p.plane;
        if let Some((a, b)) = outer {
            let ia = *index.get(&a).ok_or(AnalyzerError::UnknownNode(a))?;
            let ib = *index.get(&b).ok_or(AnalyzerError::UnknownNode(b))?;
            plane.outer = Some(plane.dart_between(ia, ib).ok_or(AnalyzerError::NotAdjacent(a, b))?);
        }
        let faces = plane.faces();
        Ok(PlaneView { plane, nodes: p.nodes, index, faces })
    }

    pub fn node(&self, n: NodeRef) -> Result<usize, AnalyzerError> {
        self.index.get(&n).copied().ok_or(AnalyzerError::UnknownNode(n))
    }

    pub fn faces(&self) -> &Faces {
        &self.faces
    }

    pub fn outer_face(&self) -> usize {
        self.plane.outer_face(&self.faces).unwrap_or(0)
    }

    pub fn edge_between(&self, a: usize, b: usize) -> Option<usize> {
        self.plane.dart_between(a, b).map(|d| d / 2)
    }

    pub fn neighbours(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.plane.rotation[v].iter().map(move |&d| self.plane.head(d))
    }

    /// Node indices of a path given by node references, checking adjacency.
    pub fn path(&self, nodes: &[NodeRef]) -> Result<Vec<usize>, AnalyzerError> {
        let idx = nodes.iter().map(|&n| self.node(n)).collect::<Result<Vec<_>, _>>()?;
        for (w, pair) in idx.windows(2).zip(nodes.windows(2)) {
            self.edge_between(w[0], w[1]).ok_or(AnalyzerError::NotAdjacent(pair[0], pair[1]))?;
        }
        Ok(idx)
    }

    /// Edges of a walk given by node indices.
    pub fn walk_edges(&self, idx: &[usize]) -> BTreeSet<usize> {
        idx.windows(2).filter_map(|w| self.edge_between(w[0], w[1])).collect()
    }

    /// Whether the node lies on the boundary of the outer face.
    pub fn on_outer_face(&self, v: usize) -> bool {
        let outer = self.outer_face();
        self.plane.rotation[v].iter().any(|&d| self.faces.face_of[d] == outer || self.faces.face_of[twin(d)] == outer)
    }

    /// Nodes and edges in the closed disk bounded by the cycle through
    /// `cycle` (node indices, first node not repeated).
    pub fn closed_disk(&self, cycle: &[usize]) -> Result<(BTreeSet<usize>, BTreeSet<usize>), AnalyzerError> {
        let mut closed = cycle.to_vec();
        closed.push(cycle[0]);
        let edges = self.walk_edges(&closed);
        if edges.len() != cycle.len() || cycle.len() < 2 {
            return Err(AnalyzerError::Precondition("cycle is not a closed path of the planarization".into()));
        }
        let nodes = self
            .plane
            .closed_disk_nodes(&edges)
            .ok_or_else(|| AnalyzerError::Precondition("cycle does not separate the plane".into()))?;
        let disk_edges = self.plane.closed_disk_edges(&edges).unwrap_or_default();
        Ok((nodes, disk_edges))
    }
}

/// Straight-line drawing from vertex coordinates, assumed free of
/// crossings, with the directed edge whose face is the unbounded one.
pub fn drawing_from_coordinates(
    g: &WeightedMultigraph,
    coords: &BTreeMap<VertexId, (f64, f64)>,
) -> Result<(Drawing, Option<(NodeRef, NodeRef)>), AnalyzerError> {
    let ids: Vec<VertexId> = g.vertex_ids().collect();
    let pos = ids
        .iter()
        .map(|v| coords.get(v).copied().ok_or(AnalyzerError::MissingCoordinates(*v)))
        .collect::<Result<Vec<_>, _>>()?;
    let edges = g.index_edges();
    let plane = PlaneGraph::from_straight_line(&pos, &edges);
    let edge_ids: Vec<EdgeId> = g.edges().iter().map(|e| e.id).collect();
    let rotation = ids
        .iter()
        .enumerate()
        .map(|(i, &v)| (v, plane.rotation[i].iter().map(|&d| edge_ids[d / 2]).collect()))
        .collect();
    let d = Drawing::planar(g.clone(), rotation);
    d.verify()?;
    let outer = plane.outer.map(|dart| {
        (NodeRef::Vertex(ids[plane.tail(dart)]), NodeRef::Vertex(ids[plane.head(dart)]))
    });
    Ok((d, outer))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pendant_inside_triangle_is_not_outer() {
        let g = WeightedMultigraph::from_edge_list(4, &[(0, 1), (1, 2), (2, 0), (0, 3)]).unwrap();
        let coords = BTreeMap::from([
            (VertexId(0), (0.0, 0.0)),
            (VertexId(1), (4.0, 0.0)),
            (VertexId(2), (0.0, 4.0)),
            (VertexId(3), (1.0, 1.0)),
        ]);
        let (d, outer) = drawing_from_coordinates(&g, &coords).unwrap();
        let view = PlaneView::new(&d, outer).unwrap();
        assert!(view.on_outer_face(view.node(NodeRef::Vertex(VertexId(1))).unwrap()));
        assert!(!view.on_outer_face(view.node(NodeRef::Vertex(VertexId(3))).unwrap()));
        let tri: Vec<usize> = (0..3).map(|i| view.node(NodeRef::Vertex(VertexId(i))).unwrap()).collect();
        let (nodes, edges) = view.closed_disk(&tri).unwrap();
        assert_eq!(nodes.len(), 4);
        assert_eq!(edges.len(), 4);
    }
}
