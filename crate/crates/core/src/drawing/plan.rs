//! Mutable planarization used to edit drawings: removing edges, splicing
//! paths into new edges and smoothing the leftovers.

use super::{Crossing, Drawing, End, NodeRef, SegmentEnd};
use crate::graph::{EdgeId, VertexId, WeightedMultigraph};
use std::collections::BTreeMap;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Kind {
    Vertex(VertexId),
    Crossing,
    Dead,
}

#[derive(Debug, Clone, Copy)]
struct Arc {
    /// Nodes at side 0 and side 1; dart `2 * arc + side` leaves `ends[side]`.
    ends: [usize; 2],
    edge: EdgeId,
    alive: bool,
}

#[derive(Debug, Clone)]
pub(crate) struct Plan {
    pub graph: WeightedMultigraph,
    kinds: Vec<Kind>,
    arcs: Vec<Arc>,
    rot: Vec<Vec<usize>>,
    vnode: BTreeMap<VertexId, usize>,
}

fn node_of(arcs: &[Arc], d: usize) -> usize {
    arcs[d / 2].ends[d % 2]
}

impl Plan {
    pub fn from_drawing(d: &Drawing) -> Plan {
        let p = d.planarization().expect("drawing must be structurally valid");
        let kinds = p
            .nodes
            .iter()
            .map(|n| match n {
                NodeRef::Vertex(v) => Kind::Vertex(*v),
                NodeRef::Crossing(_) => Kind::Crossing,
            })
            .collect();
        let arcs = p
            .plane
            .edges
            .iter()
            .zip(&p.segments)
            .map(|(&(a, b), &(edge, _))| Arc { ends: [a, b], edge, alive: true })
            .collect();
        let vnode = p
            .nodes
            .iter()
            .enumerate()
            .filter_map(|(i, n)| match n {
                NodeRef::Vertex(v) => Some((*v, i)),
                _ => None,
            })
            .collect();
        Plan { graph: d.graph.clone(), kinds, arcs, rot: p.plane.rotation, vnode }
    }

    /// Darts of edge `e` in order from `e.u` to `e.v` (each dart points
    /// forward along the edge).
    fn strand(&self, e: EdgeId) -> Vec<usize> {
        let edge = self.graph.edge(e).expect("edge of plan");
        let start = self.vnode[&edge.u];
        let mut d = *self.rot[start]
            .iter()
            .find(|&&d| self.arcs[d / 2].edge == e)
            .expect("strand starts at its first endpoint");
        let mut out = vec![d];
        loop {
            let back = d ^ 1;
            let n = node_of(&self.arcs, back);
            match self.kinds[n] {
                Kind::Crossing => {
                    let around = &self.rot[n];
                    let p = around.iter().position(|&x| x == back).unwrap();
                    d = around[(p + 2) % 4];
                    out.push(d);
                }
                _ => return out,
            }
        }
    }

    fn remove_dart(&mut self, d: usize) {
        let n = node_of(&self.arcs, d);
        self.rot[n].retain(|&x| x != d);
    }

    fn kill_arc(&mut self, a: usize) {
        self.remove_dart(2 * a);
        self.remove_dart(2 * a + 1);
        self.arcs[a].alive = false;
    }

    /// Removes a node of degree two by merging its two arcs.
    fn smooth(&mut self, n: usize) {
        let (d1, d2) = (self.rot[n][0], self.rot[n][1]);
        let (a1, a2) = (d1 / 2, d2 / 2);
        debug_assert_ne!(a1, a2);
        let far = d2 ^ 1;
        let far_node = node_of(&self.arcs, far);
        self.arcs[a1].ends[d1 % 2] = far_node;
        for x in self.rot[far_node].iter_mut() {
            if *x == far {
                *x = d1;
            }
        }
        self.arcs[a2].alive = false;
        self.rot[n].clear();
        self.kinds[n] = Kind::Dead;
    }

    fn tidy_node(&mut self, n: usize) {
        if self.kinds[n] == Kind::Crossing {
            match self.rot[n].len() {
                0 => self.kinds[n] = Kind::Dead,
                2 => self.smooth(n),
                _ => {}
            }
        }
    }

    /// Removes every copy of `e` and smooths the crossings it took part in.
    pub fn remove_edge(&mut self, e: EdgeId) {
        let strand = self.strand(e);
        let touched: Vec<usize> = strand[1..].iter().map(|&d| node_of(&self.arcs, d)).collect();
        for &d in &strand {
            self.kill_arc(d / 2);
        }
        for n in touched {
            self.tidy_node(n);
        }
        self.graph = self.graph.remove_edge(e).expect("edge of plan");
    }

    /// Replaces the edges of the vertex path `path` by one simple edge from
    /// its first to its last vertex, drawn along the path. Intermediate
    /// vertices stay in place until [`Plan::dissolve_vertex`].
    pub fn splice_path(&mut self, path: &[VertexId]) -> EdgeId {
        let edges: Vec<EdgeId> = path
            .windows(2)
            .map(|w| self.graph.edge_between(w[0], w[1]).expect("path edge"))
            .collect();
        let new = EdgeId(self.graph.edges().iter().map(|e| e.id.0 + 1).max().unwrap_or(0));
        let mut g = self.graph.clone();
        for &e in &edges {
            g = g.remove_edge(e).expect("path edge");
        }
        g.insert_edge(new, path[0], *path.last().unwrap(), 1).expect("fresh edge id");
        for &e in &edges {
            for arc in self.arcs.iter_mut().filter(|a| a.alive && a.edge == e) {
                arc.edge = new;
            }
        }
        self.graph = g;
        new
    }

    /// Turns a vertex whose remaining darts all belong to spliced strands
    /// into nothing (two darts), a crossing (four alternating darts of two
    /// strands) or two pass-through points (four contiguous darts).
    pub fn dissolve_vertex(&mut self, v: VertexId) {
        let n = self.vnode[&v];
        self.kinds[n] = Kind::Crossing;
        self.vnode.remove(&v);
        self.graph = self.graph.remove_vertex(v).expect("vertex of plan");
        let darts = self.rot[n].clone();
        match darts.len() {
            2 => self.smooth(n),
            4 => {
                let e: Vec<EdgeId> = darts.iter().map(|&d| self.arcs[d / 2].edge).collect();
                if e[0] == e[2] && e[1] == e[3] && e[0] != e[1] {
                    return;
                }
                // Contiguous pairs: rotate so the first two darts share an edge.
                let shift = if e[0] == e[1] { 0 } else { 1 };
                let group: Vec<usize> = (0..4).map(|i| darts[(i + shift) % 4]).collect();
                let other = self.kinds.len();
                self.kinds.push(Kind::Crossing);
                self.rot.push(vec![group[2], group[3]]);
                self.rot[n] = vec![group[0], group[1]];
                for &d in &group[2..] {
                    self.arcs[d / 2].ends[d % 2] = other;
                }
                self.smooth(n);
                self.smooth(other);
            }
            k => panic!("vertex {v} keeps {k} darts after splicing"),
        }
    }

    /// Cuts away the loop every time an edge crosses itself.
    pub fn remove_self_crossings(&mut self) {
        loop {
            let mut changed = false;
            let ids: Vec<EdgeId> = self.graph.edges().iter().map(|e| e.id).collect();
            for e in ids {
                let strand = self.strand(e);
                let nodes: Vec<usize> = strand[1..].iter().map(|&d| node_of(&self.arcs, d)).collect();
                let mut first_seen: BTreeMap<usize, usize> = BTreeMap::new();
                let mut cut = None;
                for (i, &n) in nodes.iter().enumerate() {
                    if let Some(&j) = first_seen.get(&n) {
                        cut = Some((j, i));
                        break;
                    }
                    first_seen.insert(n, i);
                }
                if let Some((j, i)) = cut {
                    // Darts strand[j+1..=i] form the loop leaving and
                    // re-entering node nodes[j].
                    let loop_darts = strand[j + 1..=i].to_vec();
                    let inner: Vec<usize> =
                        loop_darts[1..].iter().map(|&d| node_of(&self.arcs, d)).collect();
                    for &d in &loop_darts {
                        self.kill_arc(d / 2);
                    }
                    for n in inner {
                        self.tidy_node(n);
                    }
                    self.tidy_node(nodes[j]);
                    changed = true;
                    break;
                }
            }
            if !changed {
                return;
            }
        }
    }

    pub fn to_drawing(&self) -> Drawing {
        let mut crossing_index: BTreeMap<usize, usize> = BTreeMap::new();
        let mut crossings: Vec<Crossing> = Vec::new();
        // For every live dart: (edge, segment, end).
        let mut dart_end: BTreeMap<usize, SegmentEnd> = BTreeMap::new();
        for e in self.graph.edges() {
            let strand = self.strand(e.id);
            for (s, &d) in strand.iter().enumerate() {
                dart_end.insert(d, SegmentEnd::new(e.id, s as u32, End::Tail));
                dart_end.insert(d ^ 1, SegmentEnd::new(e.id, s as u32, End::Head));
            }
            for (pos, &d) in strand[1..].iter().enumerate() {
                let n = node_of(&self.arcs, d);
                match crossing_index.get(&n) {
                    None => {
                        crossing_index.insert(n, crossings.len());
                        crossings.push(Crossing { a: e.id, sa: pos as u32, b: e.id, sb: u32::MAX });
                    }
                    Some(&c) => {
                        assert_ne!(crossings[c].a, e.id, "self-crossing left in plan");
                        crossings[c].b = e.id;
                        crossings[c].sb = pos as u32;
                    }
                }
            }
        }
        let mut rotation = BTreeMap::new();
        for (&v, &n) in &self.vnode {
            rotation.insert(NodeRef::Vertex(v), self.rot[n].iter().map(|d| dart_end[d]).collect());
        }
        for (&n, &c) in &crossing_index {
            rotation.insert(NodeRef::Crossing(c), self.rot[n].iter().map(|d| dart_end[d]).collect());
        }
        Drawing { graph: self.graph.clone(), rotation, crossings }
    }
}
