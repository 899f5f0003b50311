//! Combinatorial drawings: a planarization given by a rotation system with
//! crossing vertices registered against skeleton-edge segments.
//!
//! An edge `e` with `n` crossings is cut into segments `0..=n`; segment `s`
//! runs from the `s`-th to the `(s+1)`-th node along `e`, starting at
//! `e.u`. A crossing registered as `(a, sa, b, sb)` sits between segments
//! `sa` and `sa + 1` of `a` and between `sb` and `sb + 1` of `b`.

mod contraction;
mod export;
mod plan;
mod realize;
mod templates;

pub use contraction::{rotation_case, wedge_contraction, ContractionError, RotationCase};
pub use export::{export_dot, export_svg};
pub use realize::{realize, search_orders, CrossingConfig, RealizeError};
pub use templates::{
    canonical_drawing, drop_drawing, edge_class, expanded_drawing, template_config, template_drawing,
    DrawingTemplate, EdgeClass, Figure, TemplateError,
};

use crate::embedding::PlaneGraph;
use crate::graph::{EdgeId, VertexId, WeightedMultigraph};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum End {
    Tail,
    Head,
}

impl End {
    pub fn flipped(self) -> End {
        match self {
            End::Tail => End::Head,
            End::Head => End::Tail,
        }
    }
}

/// One end of a segment of a skeleton edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SegmentEnd {
    pub edge: EdgeId,
    pub seg: u32,
    pub end: End,
}

impl SegmentEnd {
    pub fn new(edge: EdgeId, seg: u32, end: End) -> Self {
        SegmentEnd { edge, seg, end }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Crossing {
    pub a: EdgeId,
    pub sa: u32,
    pub b: EdgeId,
    pub sb: u32,
}

/// A node of the planarization: an original vertex or a crossing (by its
/// index in the crossing list). Serialized as `"v<id>"` / `"c<index>"`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum NodeRef {
    Vertex(VertexId),
    Crossing(usize),
}

impl fmt::Display for NodeRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NodeRef::Vertex(v) => write!(f, "v{}", v.0),
            NodeRef::Crossing(c) => write!(f, "c{c}"),
        }
    }
}

impl FromStr for NodeRef {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let bad = || format!("bad node reference {s:?}");
        match s.split_at_checked(1) {
            Some(("v", n)) => n.parse().map(|n| NodeRef::Vertex(VertexId(n))).map_err(|_| bad()),
            Some(("c", n)) => n.parse().map(NodeRef::Crossing).map_err(|_| bad()),
            _ => Err(bad()),
        }
    }
}

impl Serialize for NodeRef {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for NodeRef {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Drawing {
    pub graph: WeightedMultigraph,
    pub rotation: BTreeMap<NodeRef, Vec<SegmentEnd>>,
    pub crossings: Vec<Crossing>,
}

/// The first invariant a drawing fails.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Violation {
    #[error("crossing {crossing} refers to unknown edge {edge}")]
    UnknownEdge { crossing: usize, edge: EdgeId },
    #[error("crossing {0} crosses an edge with itself")]
    SelfCrossing(usize),
    #[error("crossing positions along edge {edge} are {positions:?}, expected 0..{}", positions.len())]
    CrossingPositions { edge: EdgeId, positions: Vec<u32> },
    #[error("no rotation given for node {0}")]
    MissingNode(NodeRef),
    #[error("rotation given for unknown node {0}")]
    UnknownNode(NodeRef),
    #[error("rotation at vertex {0} does not list exactly its segment ends")]
    VertexRotation(VertexId),
    #[error("rotation at crossing {0} does not list exactly its four segment ends")]
    CrossingRotation(usize),
    #[error("rotation at crossing {0} is not alternating")]
    NotAlternating(usize),
    #[error("planarization is disconnected")]
    Disconnected,
    #[error("planarization is not plane: V - E + F = {nodes} - {segments} + {faces} != 2")]
    Euler { nodes: usize, segments: usize, faces: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairCount {
    pub a: EdgeId,
    pub b: EdgeId,
    pub count: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossingCount {
    pub total: u64,
    pub pairs: Vec<PairCount>,
}

/// The planarization as a plane graph, with the meaning of its nodes and
/// edges.
#[derive(Debug, Clone)]
pub struct Planarization {
    pub plane: PlaneGraph,
    pub nodes: Vec<NodeRef>,
    /// `(edge, segment)` for every plane-graph edge.
    pub segments: Vec<(EdgeId, u32)>,
}

impl Planarization {
    pub fn node_index(&self, node: NodeRef) -> Option<usize> {
        self.nodes.iter().position(|&n| n == node)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RelabelError {
    #[error("vertex {0} has no image")]
    Unmapped(VertexId),
    #[error("edge {0} has no counterpart in the target graph")]
    MissingEdge(EdgeId),
    #[error("edge {0} changes thickness")]
    Thickness(EdgeId),
    #[error("graphs differ in size")]
    Size,
}

impl Drawing {
    /// A crossing-free drawing from a rotation of the graph itself (for
    /// example one produced by the planarity embedder).
    pub fn planar(graph: WeightedMultigraph, rotation: BTreeMap<VertexId, Vec<EdgeId>>) -> Drawing {
        let rotation = rotation
            .into_iter()
            .map(|(v, edges)| {
                let ends = edges
                    .into_iter()
                    .map(|e| {
                        let edge = graph.edge(e).expect("edge of graph");
                        let end = if edge.u == v { End::Tail } else { End::Head };
                        SegmentEnd::new(e, 0, end)
                    })
                    .collect();
                (NodeRef::Vertex(v), ends)
            })
            .collect();
        Drawing { graph, rotation, crossings: Vec::new() }
    }

    /// For every edge, the crossing indices in order from `u` to `v`.
    pub fn crossing_sequences(&self) -> Result<BTreeMap<EdgeId, Vec<usize>>, Violation> {
        let mut slots: BTreeMap<EdgeId, Vec<(u32, usize)>> =
            self.graph.edges().iter().map(|e| (e.id, Vec::new())).collect();
        for (i, c) in self.crossings.iter().enumerate() {
            if c.a == c.b {
                return Err(Violation::SelfCrossing(i));
            }
            for (e, s) in [(c.a, c.sa), (c.b, c.sb)] {
                slots
                    .get_mut(&e)
                    .ok_or(Violation::UnknownEdge { crossing: i, edge: e })?
                    .push((s, i));
            }
        }
        let mut out = BTreeMap::new();
        for (e, mut list) in slots {
            list.sort();
            if list.iter().enumerate().any(|(p, &(s, _))| s as usize != p) {
                return Err(Violation::CrossingPositions {
                    edge: e,
                    positions: list.iter().map(|&(s, _)| s).collect(),
                });
            }
            out.insert(e, list.into_iter().map(|(_, c)| c).collect());
        }
        Ok(out)
    }

    /// Number of crossings on each edge.
    pub fn crossings_per_edge(&self) -> BTreeMap<EdgeId, u32> {
        let mut out: BTreeMap<EdgeId, u32> = self.graph.edges().iter().map(|e| (e.id, 0)).collect();
        for c in &self.crossings {
            *out.entry(c.a).or_default() += 1;
            *out.entry(c.b).or_default() += 1;
        }
        out
    }

    fn expected_ends(&self, node: NodeRef, counts: &BTreeMap<EdgeId, u32>) -> Vec<SegmentEnd> {
        let mut ends = match node {
            NodeRef::Vertex(v) => self
                .graph
                .incident_edges(v)
                .map(|it| {
                    it.map(|e| {
                        if e.u == v {
                            SegmentEnd::new(e.id, 0, End::Tail)
                        } else {
                            SegmentEnd::new(e.id, counts[&e.id], End::Head)
                        }
                    })
                    .collect()
                })
                .unwrap_or_default(),
            NodeRef::Crossing(i) => {
                let c = self.crossings[i];
                vec![
                    SegmentEnd::new(c.a, c.sa, End::Head),
                    SegmentEnd::new(c.a, c.sa + 1, End::Tail),
                    SegmentEnd::new(c.b, c.sb, End::Head),
                    SegmentEnd::new(c.b, c.sb + 1, End::Tail),
                ]
            }
        };
        ends.sort();
        ends
    }

    /// Checks everything except the Euler condition and builds the plane
    /// graph of the planarization.
    pub fn planarization(&self) -> Result<Planarization, Violation> {
        self.crossing_sequences()?;
        let counts = self.crossings_per_edge();
        let mut nodes: Vec<NodeRef> = self.graph.vertex_ids().map(NodeRef::Vertex).collect();
        nodes.extend((0..self.crossings.len()).map(NodeRef::Crossing));
        for node in &nodes {
            let given = self.rotation.get(node).ok_or(Violation::MissingNode(*node))?;
            let mut sorted = given.clone();
            sorted.sort();
            if sorted != self.expected_ends(*node, &counts) {
                return Err(match node {
                    NodeRef::Vertex(v) => Violation::VertexRotation(*v),
                    NodeRef::Crossing(c) => Violation::CrossingRotation(*c),
                });
            }
            if let NodeRef::Crossing(c) = node {
                let r = given;
                if r[0].edge != r[2].edge || r[1].edge != r[3].edge {
                    return Err(Violation::NotAlternating(*c));
                }
            }
        }
        if let Some(extra) = self.rotation.keys().find(|k| match k {
            NodeRef::Vertex(v) => !self.graph.contains_vertex(*v),
            NodeRef::Crossing(c) => *c >= self.crossings.len(),
        }) {
            return Err(Violation::UnknownNode(*extra));
        }

        let node_index: BTreeMap<NodeRef, usize> =
            nodes.iter().enumerate().map(|(i, &n)| (n, i)).collect();
        let sequences = self.crossing_sequences()?;
        let mut segments = Vec::new();
        let mut seg_index = BTreeMap::new();
        let mut edges = Vec::new();
        for e in self.graph.edges() {
            let seq = &sequences[&e.id];
            let mut path = vec![NodeRef::Vertex(e.u)];
            path.extend(seq.iter().map(|&c| NodeRef::Crossing(c)));
            path.push(NodeRef::Vertex(e.v));
            for s in 0..path.len() - 1 {
                seg_index.insert((e.id, s as u32), segments.len());
                segments.push((e.id, s as u32));
                edges.push((node_index[&path[s]], node_index[&path[s + 1]]));
            }
        }
        let rotation = nodes
            .iter()
            .map(|n| {
                self.rotation[n]
                    .iter()
                    .map(|end| {
                        let idx = seg_index[&(end.edge, end.seg)];
                        match end.end {
                            End::Tail => 2 * idx,
                            End::Head => 2 * idx + 1,
                        }
                    })
                    .collect()
            })
            .collect();
        Ok(Planarization { plane: PlaneGraph::new(nodes.len(), edges, rotation), nodes, segments })
    }

    /// Checks every drawing invariant, reporting the first failure.
    pub fn verify(&self) -> Result<(), Violation> {
        let p = self.planarization()?;
        if !p.plane.is_connected() {
            return Err(Violation::Disconnected);
        }
        let faces = if p.plane.edges.is_empty() { 1 } else { p.plane.faces().count() };
        let (nodes, segments) = (p.plane.node_count, p.plane.edges.len());
        if nodes as i64 - segments as i64 + faces as i64 != 2 {
            return Err(Violation::Euler { nodes, segments, faces });
        }
        Ok(())
    }

    pub fn is_valid(&self) -> bool {
        self.verify().is_ok()
    }

    /// Weighted crossing total: each registered crossing of `a` and `b`
    /// costs `thickness(a) * thickness(b)`.
    pub fn crossing_count(&self) -> Result<CrossingCount, Violation> {
        self.verify()?;
        let mut pairs: BTreeMap<(EdgeId, EdgeId), u64> = BTreeMap::new();
        for c in &self.crossings {
            let ta = self.graph.edge(c.a).expect("verified").thickness as u64;
            let tb = self.graph.edge(c.b).expect("verified").thickness as u64;
            let key = if c.a < c.b { (c.a, c.b) } else { (c.b, c.a) };
            *pairs.entry(key).or_default() += ta * tb;
        }
        Ok(CrossingCount {
            total: pairs.values().sum(),
            pairs: pairs.into_iter().map(|((a, b), count)| PairCount { a, b, count }).collect(),
        })
    }

    /// Moves the drawing onto `target` along the vertex map: every edge
    /// `uv` becomes the target edge between the images of `u` and `v`.
    /// Used for automorphisms and to rename contracted drawings.
    pub fn relabel(
        &self,
        target: &WeightedMultigraph,
        map: &BTreeMap<VertexId, VertexId>,
    ) -> Result<Drawing, RelabelError> {
        if target.vertex_count() != self.graph.vertex_count() || target.edge_count() != self.graph.edge_count() {
            return Err(RelabelError::Size);
        }
        let counts = self.crossings_per_edge();
        let mut edge_map: BTreeMap<EdgeId, (EdgeId, bool)> = BTreeMap::new();
        for e in self.graph.edges() {
            let mu = *map.get(&e.u).ok_or(RelabelError::Unmapped(e.u))?;
            let mv = *map.get(&e.v).ok_or(RelabelError::Unmapped(e.v))?;
            let f = target.edge_between(mu, mv).ok_or(RelabelError::MissingEdge(e.id))?;
            let fe = target.edge(f).expect("edge of target");
            if fe.thickness != e.thickness {
                return Err(RelabelError::Thickness(e.id));
            }
            edge_map.insert(e.id, (f, fe.u != mu));
        }
        let end_map = |end: &SegmentEnd| -> SegmentEnd {
            let (f, flip) = edge_map[&end.edge];
            if flip {
                SegmentEnd::new(f, counts[&end.edge] - end.seg, end.end.flipped())
            } else {
                SegmentEnd::new(f, end.seg, end.end)
            }
        };
        let pos_map = |e: EdgeId, s: u32| -> (EdgeId, u32) {
            let (f, flip) = edge_map[&e];
            if flip {
                (f, counts[&e] - 1 - s)
            } else {
                (f, s)
            }
        };
        let rotation = self
            .rotation
            .iter()
            .map(|(node, ends)| {
                let node = match node {
                    NodeRef::Vertex(v) => NodeRef::Vertex(*map.get(v).unwrap_or(v)),
                    c => *c,
                };
                (node, ends.iter().map(end_map).collect())
            })
            .collect();
        let crossings = self
            .crossings
            .iter()
            .map(|c| {
                let (a, sa) = pos_map(c.a, c.sa);
                let (b, sb) = pos_map(c.b, c.sb);
                Crossing { a, sa, b, sb }
            })
            .collect();
        Ok(Drawing { graph: target.clone(), rotation, crossings })
    }

    /// Drawing of `graph - one copy of e`: thick edges lose a copy with the
    /// routing unchanged, simple edges disappear together with their
    /// crossings.
    pub fn delete_one_copy(&self, e: EdgeId) -> Result<Drawing, crate::graph::GraphError> {
        let edge = *self.graph.edge(e)?;
        if edge.thickness > 1 {
            let mut d = self.clone();
            d.graph = self.graph.with_thickness(e, edge.thickness - 1)?;
            return Ok(d);
        }
        let mut plan = plan::Plan::from_drawing(self);
        plan.remove_edge(e);
        Ok(plan.to_drawing())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    /// K5 on a pentagon with the two diagonals 0-2 and 1-3 crossing once and
    /// the other three diagonals drawn outside.
    pub(crate) fn k5_one_crossing() -> Drawing {
        let g = named::complete(5);
        let mut config = CrossingConfig::default();
        let a = g.edge_between(VertexId(0), VertexId(2)).unwrap();
        let b = g.edge_between(VertexId(1), VertexId(3)).unwrap();
        config.add(a, b);
        realize(&g, &config).unwrap()
    }

    #[test]
    fn k5_drawing_counts_one() {
        let d = k5_one_crossing();
        assert_eq!(d.verify(), Ok(()));
        assert_eq!(d.crossing_count().unwrap().total, 1);
    }

    #[test]
    fn non_alternating_crossing_rejected() {
        let mut d = k5_one_crossing();
        let r = d.rotation.get_mut(&NodeRef::Crossing(0)).unwrap();
        r.swap(1, 2);
        assert_eq!(d.verify(), Err(Violation::NotAlternating(0)));
    }

    #[test]
    fn bad_positions_rejected() {
        let mut d = k5_one_crossing();
        d.crossings[0].sa = 1;
        assert!(matches!(d.verify(), Err(Violation::CrossingPositions { .. })));
        let mut d = k5_one_crossing();
        d.crossings[0].b = d.crossings[0].a;
        assert_eq!(d.verify(), Err(Violation::SelfCrossing(0)));
    }

    #[test]
    fn swapped_vertex_rotation_breaks_euler() {
        let mut d = k5_one_crossing();
        let r = d.rotation.get_mut(&NodeRef::Vertex(VertexId(4))).unwrap();
        r.swap(0, 1);
        assert!(matches!(d.verify(), Err(Violation::Euler { .. })));
    }

    #[test]
    fn node_ref_strings() {
        assert_eq!("v12".parse::<NodeRef>(), Ok(NodeRef::Vertex(VertexId(12))));
        assert_eq!("c3".parse::<NodeRef>(), Ok(NodeRef::Crossing(3)));
        assert!("x1".parse::<NodeRef>().is_err());
        assert_eq!(NodeRef::Crossing(7).to_string(), "c7");
    }

    #[test]
    fn json_round_trip() {
        let d = k5_one_crossing();
        let s = serde_json::to_string(&d).unwrap();
        let back: Drawing = serde_json::from_str(&s).unwrap();
        assert_eq!(back, d);
        assert_eq!(serde_json::to_string(&back).unwrap(), s);
    }

    #[test]
    fn deleting_a_crossed_edge_removes_its_crossing() {
        let d = k5_one_crossing();
        let a = d.crossings[0].a;
        let h = d.delete_one_copy(a).unwrap();
        assert_eq!(h.verify(), Ok(()));
        assert_eq!(h.crossings.len(), 0);
        assert_eq!(h.graph.edge_count(), 9);
    }
}
