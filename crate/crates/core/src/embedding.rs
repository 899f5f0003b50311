//! Combinatorial plane graphs given by rotation systems.
//!
//! Edge `i` owns the darts `2i` (from `edges[i].0`) and `2i + 1` (from
//! `edges[i].1`). The rotation of a node lists its outgoing darts in
//! counter-clockwise order. Faces are traced with
//! `next(d) = successor of twin(d) around head(d)`.

use std::collections::{BTreeSet, VecDeque};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneGraph {
    pub node_count: usize,
    pub edges: Vec<(usize, usize)>,
    pub rotation: Vec<Vec<usize>>,
    /// A dart on the outer face, if one was designated.
    pub outer: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Faces {
    /// Darts of each face in walking order.
    pub darts: Vec<Vec<usize>>,
    pub face_of: Vec<usize>,
}

impl Faces {
    pub fn count(&self) -> usize {
        self.darts.len()
    }
}

pub fn twin(d: usize) -> usize {
    d ^ 1
}

impl PlaneGraph {
    pub fn new(node_count: usize, edges: Vec<(usize, usize)>, rotation: Vec<Vec<usize>>) -> Self {
        PlaneGraph { node_count, edges, rotation, outer: None }
    }

    /// From per-node neighbour orders of a simple graph.
    pub fn from_neighbor_rotation(rot: &[Vec<usize>]) -> Self {
        let n = rot.len();
        let mut edges = Vec::new();
        let mut index = std::collections::HashMap::new();
        for (v, ns) in rot.iter().enumerate() {
            for &w in ns {
                if v < w {
                    index.insert((v, w), edges.len());
                    edges.push((v, w));
                }
            }
        }
        let rotation = rot
            .iter()
            .enumerate()
            .map(|(v, ns)| {
                ns.iter()
                    .map(|&w| {
                        let e = index[&(v.min(w), v.max(w))];
                        if v < w {
                            2 * e
                        } else {
                            2 * e + 1
                        }
                    })
                    .collect()
            })
            .collect();
        PlaneGraph::new(n, edges, rotation)
    }

    /// Rotation from straight-line coordinates: darts sorted by angle.
    /// With this face rule bounded faces are traced clockwise, so the outer
    /// face is the one of largest signed area.
    pub fn from_straight_line(coords: &[(f64, f64)], edges: &[(usize, usize)]) -> Self {
        let n = coords.len();
        let mut rotation = vec![Vec::new(); n];
        for (i, &(a, b)) in edges.iter().enumerate() {
            rotation[a].push(2 * i);
            rotation[b].push(2 * i + 1);
        }
        let mut pg = PlaneGraph::new(n, edges.to_vec(), Vec::new());
        for (v, darts) in rotation.iter_mut().enumerate() {
            let angle = |d: &usize| {
                let w = pg.head(*d);
                let (dx, dy) = (coords[w].0 - coords[v].0, coords[w].1 - coords[v].1);
                dy.atan2(dx)
            };
            darts.sort_by(|x, y| angle(x).partial_cmp(&angle(y)).unwrap());
        }
        pg.rotation = rotation;
        let faces = pg.faces();
        let area = |face: &Vec<usize>| -> f64 {
            face.iter()
                .map(|&d| {
                    let (p, q) = (coords[pg.tail(d)], coords[pg.head(d)]);
                    p.0 * q.1 - q.0 * p.1
                })
                .sum::<f64>()
        };
        pg.outer = faces
            .darts
            .iter()
            .filter(|f| !f.is_empty())
            .max_by(|a, b| area(a).partial_cmp(&area(b)).unwrap())
            .map(|f| f[0]);
        pg
    }

    pub fn dart_count(&self) -> usize {
        2 * self.edges.len()
    }

    pub fn tail(&self, d: usize) -> usize {
        let (a, b) = self.edges[d / 2];
        if d % 2 == 0 {
            a
        } else {
            b
        }
    }

    pub fn head(&self, d: usize) -> usize {
        self.tail(twin(d))
    }

    pub fn edge_of(d: usize) -> usize {
        d / 2
    }

    /// Dart leaving `v` towards `w`, if any.
    pub fn dart_between(&self, v: usize, w: usize) -> Option<usize> {
        self.rotation[v].iter().copied().find(|&d| self.head(d) == w)
    }

    fn positions(&self) -> Vec<usize> {
        let mut pos = vec![usize::MAX; self.dart_count()];
        for darts in &self.rotation {
            for (i, &d) in darts.iter().enumerate() {
                pos[d] = i;
            }
        }
        pos
    }

    /// Whether every dart appears exactly once, at its own tail.
    pub fn is_consistent(&self) -> bool {
        if self.rotation.len() != self.node_count {
            return false;
        }
        let mut seen = vec![false; self.dart_count()];
        for (v, darts) in self.rotation.iter().enumerate() {
            for &d in darts {
                if d >= seen.len() || seen[d] || self.tail(d) != v {
                    return false;
                }
                seen[d] = true;
            }
        }
        seen.iter().all(|&s| s)
    }

    pub fn next_in_face(&self, d: usize, pos: &[usize]) -> usize {
        let t = twin(d);
        let around = &self.rotation[self.tail(t)];
        around[(pos[t] + 1) % around.len()]
    }

    /// Traces all faces. Requires a consistent rotation.
    pub fn faces(&self) -> Faces {
        let pos = self.positions();
        let mut face_of = vec![usize::MAX; self.dart_count()];
        let mut darts = Vec::new();
        for start in 0..self.dart_count() {
            if face_of[start] != usize::MAX {
                continue;
            }
            let id = darts.len();
            let mut face = Vec::new();
            let mut d = start;
            loop {
                face_of[d] = id;
                face.push(d);
                d = self.next_in_face(d, &pos);
                if d == start {
                    break;
                }
            }
            darts.push(face);
        }
        Faces { darts, face_of }
    }

    pub fn is_connected(&self) -> bool {
        if self.node_count == 0 {
            return true;
        }
        let mut seen = vec![false; self.node_count];
        seen[0] = true;
        let mut queue = VecDeque::from([0]);
        while let Some(v) = queue.pop_front() {
            for &d in &self.rotation[v] {
                let w = self.head(d);
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        seen.iter().all(|&s| s)
    }

    /// Connected, consistent and `V - E + F = 2` (a lone vertex counts as
    /// one face).
    pub fn euler_genus_zero(&self) -> bool {
        if !self.is_consistent() || !self.is_connected() {
            return false;
        }
        let f = if self.edges.is_empty() { 1 } else { self.faces().count() };
        self.node_count as i64 - self.edges.len() as i64 + f as i64 == 2
    }

    /// Nodes on the face containing `dart`, in walking order.
    pub fn face_nodes(&self, faces: &Faces, face: usize) -> Vec<usize> {
        faces.darts[face].iter().map(|&d| self.tail(d)).collect()
    }

    /// The designated outer face, or the longest face.
    pub fn outer_face(&self, faces: &Faces) -> Option<usize> {
        match self.outer {
            Some(d) if d < faces.face_of.len() => Some(faces.face_of[d]),
            _ => (0..faces.count()).max_by_key(|&f| (faces.darts[f].len(), std::cmp::Reverse(f))),
        }
    }

    /// Splits the faces into the two regions bounded by a closed walk made
    /// of `cycle_edges`; the first set is the region holding the outer face.
    /// Returns `None` unless exactly two regions arise.
    pub fn cycle_regions(&self, cycle_edges: &BTreeSet<usize>) -> Option<(BTreeSet<usize>, BTreeSet<usize>)> {
        let faces = self.faces();
        let outer = self.outer_face(&faces)?;
        let mut region = vec![usize::MAX; faces.count()];
        let mut count = 0;
        for s in 0..faces.count() {
            if region[s] != usize::MAX {
                continue;
            }
            region[s] = count;
            let mut queue = VecDeque::from([s]);
            while let Some(f) = queue.pop_front() {
                for &d in &faces.darts[f] {
                    if cycle_edges.contains(&(d / 2)) {
                        continue;
                    }
                    let g = faces.face_of[twin(d)];
                    if region[g] == usize::MAX {
                        region[g] = count;
                        queue.push_back(g);
                    }
                }
            }
            count += 1;
        }
        if count != 2 {
            return None;
        }
        let outside: BTreeSet<usize> = (0..faces.count()).filter(|&f| region[f] == region[outer]).collect();
        let inside = (0..faces.count()).filter(|&f| region[f] != region[outer]).collect();
        Some((outside, inside))
    }

    /// Nodes in the closed disk bounded by the cycle through `cycle_edges`:
    /// the cycle's own nodes plus every node whose incident faces lie on
    /// the inner side.
    pub fn closed_disk_nodes(&self, cycle_edges: &BTreeSet<usize>) -> Option<BTreeSet<usize>> {
        let (_, inside) = self.cycle_regions(cycle_edges)?;
        let faces = self.faces();
        let mut nodes = BTreeSet::new();
        for &e in cycle_edges {
            nodes.insert(self.edges[e].0);
            nodes.insert(self.edges[e].1);
        }
        for v in 0..self.node_count {
            if self.rotation[v].iter().any(|&d| inside.contains(&faces.face_of[d])) {
                nodes.insert(v);
            }
        }
        Some(nodes)
    }

    /// Edges in the closed disk: cycle edges plus edges bordering inner faces.
    pub fn closed_disk_edges(&self, cycle_edges: &BTreeSet<usize>) -> Option<BTreeSet<usize>> {
        let (_, inside) = self.cycle_regions(cycle_edges)?;
        let faces = self.faces();
        let mut out = cycle_edges.clone();
        for d in 0..self.dart_count() {
            if inside.contains(&faces.face_of[d]) {
                out.insert(d / 2);
            }
        }
        Some(out)
    }

    /// Subgraph on the given edges, keeping the induced rotation and all
    /// nodes. Returns the subgraph and the map from new to old edge ids.
    pub fn edge_subgraph(&self, keep: &BTreeSet<usize>) -> (PlaneGraph, Vec<usize>) {
        let old: Vec<usize> = keep.iter().copied().collect();
        let mut new_of = vec![usize::MAX; self.edges.len()];
        for (i, &e) in old.iter().enumerate() {
            new_of[e] = i;
        }
        let edges = old.iter().map(|&e| self.edges[e]).collect();
        let rotation = self
            .rotation
            .iter()
            .map(|darts| {
                darts
                    .iter()
                    .filter(|&&d| new_of[d / 2] != usize::MAX)
                    .map(|&d| 2 * new_of[d / 2] + d % 2)
                    .collect()
            })
            .collect();
        let outer = self
            .outer
            .filter(|&d| new_of[d / 2] != usize::MAX)
            .map(|d| 2 * new_of[d / 2] + d % 2);
        (PlaneGraph { node_count: self.node_count, edges, rotation, outer }, old)
    }

    /// Straight-line layout: the outer face (or longest face) pinned on a
    /// circle, every other node at the barycentre of its neighbours.
    pub fn tutte_layout(&self) -> Vec<(f64, f64)> {
        let n = self.node_count;
        let mut pos = vec![(0.0, 0.0); n];
        if n == 0 {
            return pos;
        }
        let mut fixed = vec![false; n];
        if self.edges.is_empty() {
            for (v, p) in pos.iter_mut().enumerate() {
                let a = std::f64::consts::TAU * v as f64 / n as f64;
                *p = (a.cos(), a.sin());
            }
            return pos;
        }
        let faces = self.faces();
        let outer = self.outer_face(&faces).unwrap();
        let mut ring: Vec<usize> = Vec::new();
        for v in self.face_nodes(&faces, outer) {
            if !ring.contains(&v) {
                ring.push(v);
            }
        }
        for (i, &v) in ring.iter().enumerate() {
            let a = std::f64::consts::TAU * i as f64 / ring.len() as f64;
            pos[v] = (a.cos(), a.sin());
            fixed[v] = true;
        }
        for _ in 0..2000 {
            let mut delta: f64 = 0.0;
            for v in 0..n {
                if fixed[v] || self.rotation[v].is_empty() {
                    continue;
                }
                let k = self.rotation[v].len() as f64;
                let (sx, sy) = self.rotation[v].iter().fold((0.0, 0.0), |acc, &d| {
                    let p = pos[self.head(d)];
                    (acc.0 + p.0, acc.1 + p.1)
                });
                let np = (sx / k, sy / k);
                delta = delta.max((np.0 - pos[v].0).abs() + (np.1 - pos[v].1).abs());
                pos[v] = np;
            }
            if delta < 1e-9 {
                break;
            }
        }
        pos
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square_with_diagonal() -> PlaneGraph {
        let coords = [(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)];
        PlaneGraph::from_straight_line(&coords, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])
    }

    #[test]
    fn straight_line_faces() {
        let pg = square_with_diagonal();
        assert!(pg.euler_genus_zero());
        let faces = pg.faces();
        assert_eq!(faces.count(), 3);
        let outer = pg.outer_face(&faces).unwrap();
        assert_eq!(faces.darts[outer].len(), 4);
    }

    #[test]
    fn disk_of_triangle() {
        let pg = square_with_diagonal();
        // Triangle 0-1-2: edges 0, 1, 4.
        let cycle: BTreeSet<usize> = [0, 1, 4].into_iter().collect();
        let disk = pg.closed_disk_nodes(&cycle).unwrap();
        assert_eq!(disk, [0, 1, 2].into_iter().collect());
        let whole: BTreeSet<usize> = [0, 1, 2, 3].into_iter().collect();
        assert_eq!(pg.closed_disk_nodes(&whole).unwrap(), [0, 1, 2, 3].into_iter().collect());
    }

    #[test]
    fn bad_rotation_detected() {
        let mut pg = square_with_diagonal();
        pg.rotation[0].pop();
        assert!(!pg.euler_genus_zero());
    }

    #[test]
    fn layout_keeps_inner_node_inside() {
        let coords = [(0.0, 0.0), (2.0, 0.0), (1.0, 2.0), (1.0, 0.7)];
        let pg = PlaneGraph::from_straight_line(&coords, &[(0, 1), (1, 2), (2, 0), (0, 3), (1, 3), (2, 3)]);
        let pos = pg.tutte_layout();
        assert!(pos[3].0.abs() < 0.2 && pos[3].1.abs() < 0.2);
    }
}
