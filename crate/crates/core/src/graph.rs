//! Weighted multigraphs.
//!
//! A bunch of `t` parallel edges between two vertices is stored as a single
//! skeleton edge of thickness `t`. At most one skeleton edge joins any pair
//! of vertices and self-loops are rejected, so the skeleton is always a
//! simple graph. Vertices and edges carry opaque integer ids; vertices may
//! additionally carry a label (`"x"`, `"u1"`, `"w2^3"`, ...).

use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexId(pub u32);

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EdgeId(pub u32);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}", self.0)
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Vertex {
    pub id: VertexId,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Edge {
    pub id: EdgeId,
    pub u: VertexId,
    pub v: VertexId,
    pub thickness: u32,
}

impl Edge {
    pub fn other(&self, w: VertexId) -> VertexId {
        if self.u == w {
            self.v
        } else {
            self.u
        }
    }

    pub fn is_incident(&self, w: VertexId) -> bool {
        self.u == w || self.v == w
    }

    pub fn is_adjacent_to(&self, other: &Edge) -> bool {
        self.is_incident(other.u) || self.is_incident(other.v)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("unknown edge {0}")]
    UnknownEdge(EdgeId),
    #[error("no vertex labelled {0:?}")]
    UnknownLabel(String),
    #[error("duplicate vertex id {0}")]
    DuplicateVertex(VertexId),
    #[error("duplicate edge id {0}")]
    DuplicateEdge(EdgeId),
    #[error("self-loop at {0}")]
    SelfLoop(VertexId),
    #[error("a skeleton edge already joins {0} and {1}")]
    ParallelEdge(VertexId, VertexId),
    #[error("edge {0} has thickness 0")]
    ZeroThickness(EdgeId),
    #[error("zip vertex {vertex} has degree {degree}, expected 2 or 3")]
    ZipDegree { vertex: VertexId, degree: u64 },
    #[error("zip vertices have different degrees ({0} vs {1})")]
    ZipDegreeMismatch(u64, u64),
    #[error("zip vertex {vertex} is incident with thick edge {edge}")]
    ZipThickEdge { vertex: VertexId, edge: EdgeId },
    #[error("removing zip vertex {0} disconnects its graph")]
    ZipDisconnects(VertexId),
    #[error("zip matching is not a bijection between the neighbourhoods: {0}")]
    ZipMatching(String),
}

/// Degree bookkeeping for one vertex: the thicknesses of its incident edges.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexIncidenceProfile {
    pub vertex: VertexId,
    /// Sorted in descending order.
    pub thicknesses: Vec<u32>,
}

impl VertexIncidenceProfile {
    pub fn degree(&self) -> u64 {
        self.thicknesses.iter().map(|&t| t as u64).sum()
    }
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    vertices: Vec<Vertex>,
    edges: Vec<Edge>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "GraphJson", into = "GraphJson")]
pub struct WeightedMultigraph {
    // Both kept sorted by id.
    vertices: Vec<Vertex>,
    edges: Vec<Edge>,
    vindex: BTreeMap<VertexId, usize>,
    eindex: BTreeMap<EdgeId, usize>,
    pair_index: BTreeMap<(VertexId, VertexId), EdgeId>,
    incidence: Vec<Vec<usize>>,
}

impl TryFrom<GraphJson> for WeightedMultigraph {
    type Error = GraphError;

    fn try_from(json: GraphJson) -> Result<Self, GraphError> {
        let mut g = WeightedMultigraph::new();
        for v in json.vertices {
            g.insert_vertex(v.id, v.label)?;
        }
        for e in json.edges {
            g.insert_edge(e.id, e.u, e.v, e.thickness)?;
        }
        Ok(g)
    }
}

impl From<WeightedMultigraph> for GraphJson {
    fn from(g: WeightedMultigraph) -> Self {
        GraphJson { vertices: g.vertices, edges: g.edges }
    }
}

fn pair_key(a: VertexId, b: VertexId) -> (VertexId, VertexId) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

impl WeightedMultigraph {
    pub fn new() -> Self {
        Self::default()
    }

    fn reindex(&mut self) {
        self.vertices.sort_by_key(|v| v.id);
        self.edges.sort_by_key(|e| e.id);
        self.vindex = self.vertices.iter().enumerate().map(|(i, v)| (v.id, i)).collect();
        self.eindex = self.edges.iter().enumerate().map(|(i, e)| (e.id, i)).collect();
        self.pair_index = self.edges.iter().map(|e| (pair_key(e.u, e.v), e.id)).collect();
        self.incidence = vec![Vec::new(); self.vertices.len()];
        for (i, e) in self.edges.iter().enumerate() {
            self.incidence[self.vindex[&e.u]].push(i);
            self.incidence[self.vindex[&e.v]].push(i);
        }
    }

    fn next_vertex_id(&self) -> VertexId {
        VertexId(self.vertices.last().map_or(0, |v| v.id.0 + 1))
    }

    fn next_edge_id(&self) -> EdgeId {
        EdgeId(self.edges.last().map_or(0, |e| e.id.0 + 1))
    }

    pub fn add_vertex(&mut self, label: Option<&str>) -> VertexId {
        let id = self.next_vertex_id();
        self.insert_vertex(id, label.map(str::to_owned))
            .expect("fresh vertex id");
        id
    }

    pub fn insert_vertex(&mut self, id: VertexId, label: Option<String>) -> Result<(), GraphError> {
        if self.vindex.contains_key(&id) {
            return Err(GraphError::DuplicateVertex(id));
        }
        self.vertices.push(Vertex { id, label });
        self.reindex();
        Ok(())
    }

    pub fn add_edge(&mut self, u: VertexId, v: VertexId, thickness: u32) -> Result<EdgeId, GraphError> {
        let id = self.next_edge_id();
        self.insert_edge(id, u, v, thickness)?;
        Ok(id)
    }

    pub fn insert_edge(
        &mut self,
        id: EdgeId,
        u: VertexId,
        v: VertexId,
        thickness: u32,
    ) -> Result<(), GraphError> {
        if self.eindex.contains_key(&id) {
            return Err(GraphError::DuplicateEdge(id));
        }
        for w in [u, v] {
            if !self.vindex.contains_key(&w) {
                return Err(GraphError::UnknownVertex(w));
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if thickness == 0 {
            return Err(GraphError::ZeroThickness(id));
        }
        if self.pair_index.contains_key(&pair_key(u, v)) {
            return Err(GraphError::ParallelEdge(u, v));
        }
        self.edges.push(Edge { id, u, v, thickness });
        self.reindex();
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    /// Number of skeleton edges.
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Total multiplicity: the sum of all thicknesses.
    pub fn multiplicity(&self) -> u64 {
        self.edges.iter().map(|e| e.thickness as u64).sum()
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertex_ids(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.vertices.iter().map(|v| v.id)
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.vindex.contains_key(&v)
    }

    /// Position of `v` in [`Self::vertices`].
    pub fn vertex_index(&self, v: VertexId) -> Result<usize, GraphError> {
        self.vindex.get(&v).copied().ok_or(GraphError::UnknownVertex(v))
    }

    /// Position of `e` in [`Self::edges`].
    pub fn edge_index(&self, e: EdgeId) -> Result<usize, GraphError> {
        self.eindex.get(&e).copied().ok_or(GraphError::UnknownEdge(e))
    }

    pub fn edge(&self, e: EdgeId) -> Result<&Edge, GraphError> {
        Ok(&self.edges[self.edge_index(e)?])
    }

    pub fn label(&self, v: VertexId) -> Option<&str> {
        self.vindex.get(&v).and_then(|&i| self.vertices[i].label.as_deref())
    }

    /// Label if present, `#id` otherwise.
    pub fn display_name(&self, v: VertexId) -> String {
        match self.label(v) {
            Some(l) => l.to_owned(),
            None => format!("#{}", v.0),
        }
    }

    pub fn edge_name(&self, e: EdgeId) -> String {
        match self.edge(e) {
            Ok(edge) => format!("{}{}", self.display_name(edge.u), self.display_name(edge.v)),
            Err(_) => e.to_string(),
        }
    }

    pub fn vertex_by_label(&self, label: &str) -> Result<VertexId, GraphError> {
        self.vertices
            .iter()
            .find(|v| v.label.as_deref() == Some(label))
            .map(|v| v.id)
            .ok_or_else(|| GraphError::UnknownLabel(label.to_owned()))
    }

    pub fn edge_between(&self, u: VertexId, v: VertexId) -> Option<EdgeId> {
        self.pair_index.get(&pair_key(u, v)).copied()
    }

    pub fn edge_by_labels(&self, a: &str, b: &str) -> Result<EdgeId, GraphError> {
        let (u, v) = (self.vertex_by_label(a)?, self.vertex_by_label(b)?);
        self.edge_between(u, v)
            .ok_or_else(|| GraphError::UnknownLabel(format!("{a}{b}")))
    }

    pub fn incident_edges(&self, v: VertexId) -> Result<impl Iterator<Item = &Edge> + '_, GraphError> {
        let i = self.vertex_index(v)?;
        Ok(self.incidence[i].iter().map(move |&k| &self.edges[k]))
    }

    pub fn neighbors(&self, v: VertexId) -> Result<Vec<VertexId>, GraphError> {
        Ok(self.incident_edges(v)?.map(|e| e.other(v)).collect())
    }

    /// Sum of the thicknesses of the edges at `v`.
    pub fn degree(&self, v: VertexId) -> Result<u64, GraphError> {
        Ok(self.incident_edges(v)?.map(|e| e.thickness as u64).sum())
    }

    /// Number of skeleton edges at `v`.
    pub fn skeleton_degree(&self, v: VertexId) -> Result<usize, GraphError> {
        Ok(self.incidence[self.vertex_index(v)?].len())
    }

    pub fn max_degree(&self) -> u64 {
        self.vertex_ids().map(|v| self.degree(v).unwrap_or(0)).max().unwrap_or(0)
    }

    pub fn incidence_profile(&self, v: VertexId) -> Result<VertexIncidenceProfile, GraphError> {
        let mut thicknesses: Vec<u32> = self.incident_edges(v)?.map(|e| e.thickness).collect();
        thicknesses.sort_unstable_by(|a, b| b.cmp(a));
        Ok(VertexIncidenceProfile { vertex: v, thicknesses })
    }

    /// Skeleton adjacency lists over vertex positions.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertices.len()];
        for e in &self.edges {
            let (a, b) = (self.vindex[&e.u], self.vindex[&e.v]);
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }

    /// Skeleton edges as pairs of vertex positions.
    pub fn index_edges(&self) -> Vec<(usize, usize)> {
        self.edges.iter().map(|e| (self.vindex[&e.u], self.vindex[&e.v])).collect()
    }

    /// Connected components as sorted lists of vertex ids.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        let adj = self.adjacency();
        let mut seen = vec![false; adj.len()];
        let mut out = Vec::new();
        for s in 0..adj.len() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![self.vertices[s].id];
            let mut queue = VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                for &y in &adj[x] {
                    if !seen[y] {
                        seen[y] = true;
                        comp.push(self.vertices[y].id);
                        queue.push_back(y);
                    }
                }
            }
            comp.sort();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Whether the skeleton is `k`-vertex-connected: more than `k` vertices
    /// and no separating set of fewer than `k` vertices. Multiplicity is
    /// ignored.
    pub fn is_k_connected(&self, k: usize) -> bool {
        let n = self.vertices.len();
        if k == 0 {
            return true;
        }
        if n <= k {
            return false;
        }
        let adj = self.adjacency();
        let all = vec![false; n];
        match k {
            1 => connected_without(&adj, &all),
            2 => biconnected_without(&adj, &all),
            3 => (0..n).all(|v| {
                let mut removed = all.clone();
                removed[v] = true;
                biconnected_without(&adj, &removed)
            }),
            _ => no_small_separator(&adj, k),
        }
    }

    /// Removes one parallel copy of `e`; the skeleton edge disappears when
    /// its thickness was 1.
    pub fn delete_one_copy(&self, e: EdgeId) -> Result<Self, GraphError> {
        let i = self.edge_index(e)?;
        let mut g = self.clone();
        if g.edges[i].thickness > 1 {
            g.edges[i].thickness -= 1;
        } else {
            g.edges.remove(i);
            g.reindex();
        }
        Ok(g)
    }

    /// Inverse of [`Self::delete_one_copy`]: adds one copy of `edge`,
    /// recreating the skeleton edge with its original id if needed.
    pub fn add_one_copy(&self, edge: &Edge) -> Result<Self, GraphError> {
        let mut g = self.clone();
        if let Ok(i) = g.edge_index(edge.id) {
            let existing = g.edges[i];
            if pair_key(existing.u, existing.v) != pair_key(edge.u, edge.v) {
                return Err(GraphError::DuplicateEdge(edge.id));
            }
            g.edges[i].thickness += 1;
        } else {
            g.insert_edge(edge.id, edge.u, edge.v, 1)?;
        }
        Ok(g)
    }

    pub fn with_thickness(&self, e: EdgeId, thickness: u32) -> Result<Self, GraphError> {
        let i = self.edge_index(e)?;
        if thickness == 0 {
            return Err(GraphError::ZeroThickness(e));
        }
        let mut g = self.clone();
        g.edges[i].thickness = thickness;
        Ok(g)
    }

    /// Removes `e` entirely, whatever its thickness.
    pub fn remove_edge(&self, e: EdgeId) -> Result<Self, GraphError> {
        let i = self.edge_index(e)?;
        let mut g = self.clone();
        g.edges.remove(i);
        g.reindex();
        Ok(g)
    }

    pub fn remove_vertex(&self, v: VertexId) -> Result<Self, GraphError> {
        let i = self.vertex_index(v)?;
        let mut g = self.clone();
        g.vertices.remove(i);
        g.edges.retain(|e| !e.is_incident(v));
        g.reindex();
        Ok(g)
    }

    /// The same graph with every label passed through `f`.
    pub fn map_labels(&self, f: impl Fn(Option<&str>) -> Option<String>) -> Self {
        let mut g = self.clone();
        for v in &mut g.vertices {
            v.label = f(v.label.as_deref());
        }
        g
    }

    /// Copy with vertex ids shifted by `dv` and edge ids by `de`.
    fn shifted(&self, dv: u32, de: u32) -> Self {
        let mut g = WeightedMultigraph::new();
        g.vertices = self
            .vertices
            .iter()
            .map(|v| Vertex { id: VertexId(v.id.0 + dv), label: v.label.clone() })
            .collect();
        g.edges = self
            .edges
            .iter()
            .map(|e| Edge {
                id: EdgeId(e.id.0 + de),
                u: VertexId(e.u.0 + dv),
                v: VertexId(e.v.0 + dv),
                thickness: e.thickness,
            })
            .collect();
        g.reindex();
        g
    }

    /// Disjoint union; `other` is renumbered above the ids of `self`. Returns
    /// the union and the vertex/edge id offsets applied to `other`.
    pub fn disjoint_union(&self, other: &Self) -> (Self, u32, u32) {
        let dv = self.next_vertex_id().0;
        let de = self.next_edge_id().0;
        let shifted = other.shifted(dv, de);
        let mut g = self.clone();
        g.vertices.extend(shifted.vertices);
        g.edges.extend(shifted.edges);
        g.reindex();
        (g, dv, de)
    }

    /// Checks the zip preconditions for `v` and returns its neighbours.
    fn zip_side(&self, v: VertexId) -> Result<Vec<VertexId>, GraphError> {
        for e in self.incident_edges(v)? {
            if e.thickness != 1 {
                return Err(GraphError::ZipThickEdge { vertex: v, edge: e.id });
            }
        }
        let degree = self.degree(v)?;
        if !(2..=3).contains(&degree) {
            return Err(GraphError::ZipDegree { vertex: v, degree });
        }
        Ok(self.neighbors(v)?)
    }

    /// Zip product at `v1` and `v2`: deletes both vertices and joins their
    /// former neighbours according to `matching`, a list of
    /// `(neighbour of v1, neighbour of v2)` pairs. Vertices of `g2` are
    /// renumbered above the ids of `g1`; the returned graph keeps all labels.
    pub fn zip_product(
        g1: &Self,
        v1: VertexId,
        g2: &Self,
        v2: VertexId,
        matching: &[(VertexId, VertexId)],
    ) -> Result<Self, GraphError> {
        let n1 = g1.zip_side(v1)?;
        let n2 = g2.zip_side(v2)?;
        if n1.len() != n2.len() {
            return Err(GraphError::ZipDegreeMismatch(n1.len() as u64, n2.len() as u64));
        }
        let h1 = g1.remove_vertex(v1)?;
        if !h1.is_connected() {
            return Err(GraphError::ZipDisconnects(v1));
        }
        let h2 = g2.remove_vertex(v2)?;
        if !h2.is_connected() {
            return Err(GraphError::ZipDisconnects(v2));
        }
        let left: BTreeSet<_> = matching.iter().map(|p| p.0).collect();
        let right: BTreeSet<_> = matching.iter().map(|p| p.1).collect();
        if matching.len() != n1.len()
            || left != n1.iter().copied().collect()
            || right != n2.iter().copied().collect()
        {
            return Err(GraphError::ZipMatching(format!("{matching:?}")));
        }
        let (mut g, dv, _) = h1.disjoint_union(&h2);
        for &(a, b) in matching {
            g.add_edge(a, VertexId(b.0 + dv), 1)?;
        }
        Ok(g)
    }

    /// Zip product with the neighbourhoods paired in ascending label order
    /// (ids break ties and stand in for missing labels).
    pub fn zip_product_sorted(
        g1: &Self,
        v1: VertexId,
        g2: &Self,
        v2: VertexId,
    ) -> Result<Self, GraphError> {
        let sorted = |g: &Self, v: VertexId| -> Result<Vec<VertexId>, GraphError> {
            let mut ns = g.neighbors(v)?;
            ns.sort_by(|a, b| (g.label(*a), a).cmp(&(g.label(*b), b)));
            Ok(ns)
        };
        let (a, b) = (sorted(g1, v1)?, sorted(g2, v2)?);
        let matching: Vec<_> = a.into_iter().zip(b).collect();
        Self::zip_product(g1, v1, g2, v2, &matching)
    }

    /// Whether `other` is the same graph up to vertex/edge ids, matching
    /// vertices by label. Every vertex of both graphs must carry a distinct
    /// label.
    pub fn labeled_isomorphic(&self, other: &Self) -> bool {
        fn edge_set(g: &WeightedMultigraph) -> Option<BTreeSet<(String, String, u32)>> {
            let labels: BTreeSet<_> = g.vertices.iter().filter_map(|v| v.label.clone()).collect();
            if labels.len() != g.vertices.len() {
                return None;
            }
            Some(
                g.edges
                    .iter()
                    .map(|e| {
                        let (a, b) = (g.label(e.u)?.to_owned(), g.label(e.v)?.to_owned());
                        let (a, b) = if a <= b { (a, b) } else { (b, a) };
                        Some((a, b, e.thickness))
                    })
                    .collect::<Option<_>>()?,
            )
        }
        let vl = |g: &Self| g.vertices.iter().filter_map(|v| v.label.clone()).collect::<BTreeSet<_>>();
        match (edge_set(self), edge_set(other)) {
            (Some(a), Some(b)) => a == b && vl(self) == vl(other),
            _ => false,
        }
    }

    /// Graphviz rendering; thickness is drawn as the edge label.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph G {\n");
        for v in &self.vertices {
            s.push_str(&format!("  {} [label=\"{}\"];\n", v.id.0, self.display_name(v.id)));
        }
        for e in &self.edges {
            s.push_str(&format!(
                "  {} -- {} [label=\"{}\", penwidth={}];\n",
                e.u.0, e.v.0, e.thickness, e.thickness
            ));
        }
        s.push_str("}\n");
        s
    }

    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = WeightedMultigraph::new();
        for _ in 0..n {
            g.add_vertex(None);
        }
        for &(a, b) in edges {
            g.add_edge(VertexId(a as u32), VertexId(b as u32), 1)?;
        }
        Ok(g)
    }
}

fn connected_without(adj: &[Vec<usize>], removed: &[bool]) -> bool {
    let Some(start) = (0..adj.len()).find(|&v| !removed[v]) else {
        return true;
    };
    let mut seen = removed.to_vec();
    seen[start] = true;
    let mut stack = vec![start];
    while let Some(x) = stack.pop() {
        for &y in &adj[x] {
            if !seen[y] {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    seen.iter().all(|&s| s)
}

/// Connected, at least three live vertices and no articulation point.
fn biconnected_without(adj: &[Vec<usize>], removed: &[bool]) -> bool {
    let live = removed.iter().filter(|&&r| !r).count();
    if live < 3 || !connected_without(adj, removed) {
        return false;
    }
    let root = (0..adj.len()).find(|&v| !removed[v]).unwrap();
    let n = adj.len();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut timer = 0;
    let mut root_children = 0;
    // Iterative DFS: (vertex, parent, next neighbour index).
    let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
    disc[root] = timer;
    low[root] = timer;
    timer += 1;
    while let Some(&mut (x, parent, ref mut next)) = stack.last_mut() {
        if *next < adj[x].len() {
            let y = adj[x][*next];
            *next += 1;
            if removed[y] || y == parent {
                continue;
            }
            if disc[y] == usize::MAX {
                disc[y] = timer;
                low[y] = timer;
                timer += 1;
                if x == root {
                    root_children += 1;
                }
                stack.push((y, x, 0));
            } else {
                low[x] = low[x].min(disc[y]);
            }
        } else {
            stack.pop();
            if parent != usize::MAX {
                low[parent] = low[parent].min(low[x]);
                if parent != root && low[x] >= disc[parent] {
                    return false;
                }
            }
        }
    }
    root_children <= 1
}

fn no_small_separator(adj: &[Vec<usize>], k: usize) -> bool {
    let n = adj.len();
    let mut removed = vec![false; n];
    fn rec(adj: &[Vec<usize>], removed: &mut Vec<bool>, from: usize, left: usize) -> bool {
        if !connected_without(adj, removed) {
            return false;
        }
        if left == 0 {
            return true;
        }
        for v in from..adj.len() {
            removed[v] = true;
            let ok = rec(adj, removed, v + 1, left - 1);
            removed[v] = false;
            if !ok {
                return false;
            }
        }
        true
    }
    rec(adj, &mut removed, 0, k - 1)
}

/// Small named graphs used throughout the tests and the CLI.
pub mod named {
    use super::WeightedMultigraph;

    pub fn complete(n: usize) -> WeightedMultigraph {
        let mut edges = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                edges.push((a, b));
            }
        }
        WeightedMultigraph::from_edge_list(n, &edges).expect("simple graph")
    }

    /// Parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> WeightedMultigraph {
        let mut edges = Vec::new();
        for x in 0..a {
            for y in a..a + b {
                edges.push((x, y));
            }
        }
        let mut g = WeightedMultigraph::new();
        for i in 0..a {
            g.add_vertex(Some(&format!("a{i}")));
        }
        for j in 0..b {
            g.add_vertex(Some(&format!("b{j}")));
        }
        for (x, y) in edges {
            g.add_edge(super::VertexId(x as u32), super::VertexId(y as u32), 1)
                .expect("simple graph");
        }
        g
    }

    pub fn k33() -> WeightedMultigraph {
        complete_bipartite(3, 3)
    }

    pub fn path(n: usize) -> WeightedMultigraph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        WeightedMultigraph::from_edge_list(n, &edges).expect("simple graph")
    }

    pub fn cycle(n: usize) -> WeightedMultigraph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        WeightedMultigraph::from_edge_list(n, &edges).expect("simple graph")
    }

    pub fn petersen() -> WeightedMultigraph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        WeightedMultigraph::from_edge_list(10, &edges).expect("simple graph")
    }

    /// Cartesian product of two triangles, vertex `3*i + j` is `(i, j)`.
    pub fn c3_box_c3() -> WeightedMultigraph {
        let mut edges = Vec::new();
        for i in 0..3 {
            for j in 0..3 {
                edges.push((3 * i + j, 3 * i + (j + 1) % 3));
                edges.push((3 * i + j, 3 * ((i + 1) % 3) + j));
            }
        }
        WeightedMultigraph::from_edge_list(9, &edges).expect("simple graph")
    }

    /// Triangular prism (planar, cubic).
    pub fn prism() -> WeightedMultigraph {
        WeightedMultigraph::from_edge_list(
            6,
            &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)],
        )
        .expect("simple graph")
    }
}

#[cfg(test)]
mod tests {
    use super::named::*;
    use super::*;

    #[test]
    fn degree_sums_thickness() {
        let mut g = WeightedMultigraph::new();
        let a = g.add_vertex(Some("a"));
        let b = g.add_vertex(Some("b"));
        let c = g.add_vertex(Some("c"));
        let lonely = g.add_vertex(None);
        g.add_edge(a, b, 7).unwrap();
        g.add_edge(a, c, 2).unwrap();
        assert_eq!(g.degree(a).unwrap(), 9);
        assert_eq!(g.degree(lonely).unwrap(), 0);
        assert_eq!(g.multiplicity(), 9);
        assert_eq!(g.incidence_profile(a).unwrap().thicknesses, vec![7, 2]);
        assert_eq!(g.degree(VertexId(99)), Err(GraphError::UnknownVertex(VertexId(99))));
    }

    #[test]
    fn rejects_loops_parallels_and_zero_thickness() {
        let mut g = path(2);
        assert_eq!(g.add_edge(VertexId(0), VertexId(0), 1), Err(GraphError::SelfLoop(VertexId(0))));
        assert!(matches!(g.add_edge(VertexId(1), VertexId(0), 1), Err(GraphError::ParallelEdge(..))));
        let v = g.add_vertex(None);
        assert!(matches!(g.add_edge(VertexId(0), v, 0), Err(GraphError::ZeroThickness(_))));
    }

    #[test]
    fn connectivity_small_cases() {
        assert!(!path(3).is_k_connected(2));
        assert!(path(3).is_k_connected(1));
        assert!(complete(4).is_k_connected(3));
        assert!(!complete(4).is_k_connected(4));
        assert!(cycle(5).is_k_connected(2));
        assert!(!cycle(5).is_k_connected(3));
        assert!(petersen().is_k_connected(3));
        assert!(k33().is_k_connected(3));
    }

    #[test]
    fn delete_copy_decrements_then_removes() {
        let mut g = path(2);
        let e = g.edges()[0].id;
        g = g.with_thickness(e, 7).unwrap();
        let g6 = g.delete_one_copy(e).unwrap();
        assert_eq!(g6.edge(e).unwrap().thickness, 6);
        let single = path(2);
        let gone = single.delete_one_copy(e).unwrap();
        assert_eq!(gone.edge_count(), 0);
        assert_eq!(gone.add_one_copy(single.edge(e).unwrap()).unwrap(), single);
        assert_eq!(single.delete_one_copy(EdgeId(5)), Err(GraphError::UnknownEdge(EdgeId(5))));
    }

    #[test]
    fn zip_of_two_k33() {
        let g = k33();
        let z = WeightedMultigraph::zip_product_sorted(&g, VertexId(0), &g, VertexId(0)).unwrap();
        assert_eq!(z.vertex_count(), 10);
        assert_eq!(z.edge_count(), 15);
        assert!(z.vertex_ids().all(|v| z.degree(v).unwrap() == 3));
        assert!(z.is_k_connected(3));
    }

    #[test]
    fn zip_preconditions() {
        let tri = cycle(3).with_thickness(EdgeId(0), 2).unwrap();
        assert!(matches!(
            WeightedMultigraph::zip_product_sorted(&tri, VertexId(0), &k33(), VertexId(0)),
            Err(GraphError::ZipThickEdge { .. })
        ));
        assert!(matches!(
            WeightedMultigraph::zip_product_sorted(&complete(5), VertexId(0), &k33(), VertexId(0)),
            Err(GraphError::ZipDegree { degree: 4, .. })
        ));
        assert!(matches!(
            WeightedMultigraph::zip_product_sorted(&cycle(4), VertexId(0), &k33(), VertexId(0)),
            Err(GraphError::ZipDegreeMismatch(2, 3))
        ));
        // Centre of a 3-star: removing it leaves three isolated vertices.
        let star = WeightedMultigraph::from_edge_list(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(
            WeightedMultigraph::zip_product_sorted(&star, VertexId(0), &k33(), VertexId(0)),
            Err(GraphError::ZipDisconnects(VertexId(0)))
        );
        let bad = [(VertexId(3), VertexId(3)), (VertexId(4), VertexId(4)), (VertexId(4), VertexId(5))];
        assert!(matches!(
            WeightedMultigraph::zip_product(&k33(), VertexId(0), &k33(), VertexId(0), &bad),
            Err(GraphError::ZipMatching(_))
        ));
    }

    #[test]
    fn json_shape() {
        let mut g = WeightedMultigraph::new();
        let a = g.add_vertex(Some("x"));
        let b = g.add_vertex(None);
        g.add_edge(a, b, 3).unwrap();
        let s = serde_json::to_string(&g).unwrap();
        assert_eq!(
            s,
            r#"{"vertices":[{"id":0,"label":"x"},{"id":1}],"edges":[{"id":0,"u":0,"v":1,"thickness":3}]}"#
        );
        let back: WeightedMultigraph = serde_json::from_str(&s).unwrap();
        assert_eq!(back, g);
        let bad = r#"{"vertices":[{"id":0}],"edges":[{"id":0,"u":0,"v":0,"thickness":1}]}"#;
        assert!(serde_json::from_str::<WeightedMultigraph>(bad).is_err());
    }

    #[test]
    fn dot_labels_thickness() {
        let g = path(2).with_thickness(EdgeId(0), 4).unwrap();
        assert!(g.to_dot().contains("0 -- 1 [label=\"4\""));
    }
}
