#![allow(dead_code)]

use crosscrit::analyzer::{drawing_from_coordinates, Comb, FanGrid, PlaneView, RootedTree};
use crosscrit::drawing::NodeRef;
use crosscrit::{VertexId, WeightedMultigraph};
use std::collections::{BTreeMap, BTreeSet};

/// A labelled plane graph from named points and edges.
pub struct Fixture {
    pub g: WeightedMultigraph,
    pub coords: BTreeMap<VertexId, (f64, f64)>,
}

impl Fixture {
    pub fn new(points: &[(&str, f64, f64)], edges: &[(&str, &str)]) -> Self {
        let mut g = WeightedMultigraph::new();
        let mut coords = BTreeMap::new();
        for &(name, x, y) in points {
            let v = g.add_vertex(Some(name));
            coords.insert(v, (x, y));
        }
        let mut seen = BTreeSet::new();
        for &(a, b) in edges {
            if seen.insert((a.min(b), a.max(b))) {
                let (u, v) = (g.vertex_by_label(a).unwrap(), g.vertex_by_label(b).unwrap());
                g.add_edge(u, v, 1).unwrap();
            }
        }
        Fixture { g, coords }
    }

    pub fn view(&self) -> PlaneView {
        let (d, outer) = drawing_from_coordinates(&self.g, &self.coords).unwrap();
        PlaneView::new(&d, outer).unwrap()
    }

    pub fn n(&self, label: &str) -> NodeRef {
        NodeRef::Vertex(self.g.vertex_by_label(label).unwrap())
    }

    pub fn ns(&self, labels: &[&str]) -> Vec<NodeRef> {
        labels.iter().map(|l| self.n(l)).collect()
    }
}

pub fn f_direct(d: u64, b: u64, k: u64) -> u64 {
    if k == 1 || b == 0 {
        1
    } else {
        f_direct(d, b, k - 1) + (d - 1) * f_direct(d, b - 1, k - 1)
    }
}

pub fn tree_from_parents(parents: &[usize]) -> WeightedMultigraph {
    let edges: Vec<(usize, usize)> = parents.iter().enumerate().map(|(i, &p)| (p, i + 1)).collect();
    WeightedMultigraph::from_edge_list(parents.len() + 1, &edges).unwrap()
}

pub fn complete_binary(depth: u32) -> WeightedMultigraph {
    let n = (1usize << (depth + 1)) - 1;
    tree_from_parents(&(1..n).map(|i| (i - 1) / 2).collect::<Vec<_>>())
}

/// Rooted-minor oracle: a complete binary tree of depth `d` can be rooted
/// at `v` when some descendant of `v` has two children that each carry
/// depth `d - 1`.
pub fn carries(t: &RootedTree, v: VertexId, d: u32) -> bool {
    if d == 0 {
        return true;
    }
    let kids: Vec<VertexId> = t.children(v).collect();
    let good = kids.iter().filter(|&&c| carries(t, c, d - 1)).count();
    good >= 2 || kids.iter().any(|&c| carries(t, c, d))
}

pub fn minor_depth_oracle(t: &RootedTree) -> u32 {
    (0..).find(|&d| !carries(t, t.root, d + 1)).unwrap()
}

pub fn figure_one() -> Fixture {
    let points = [
        ("v", 0.0, 1.0),
        ("a1", -6.0, 8.0), ("a2", -2.0, 9.0), ("a3", 2.0, 9.0), ("a4", 6.0, 8.0),
        ("b1", -5.0, 6.0), ("b2", -2.5, 6.0), ("b3", 0.2, 7.0), ("b4", 2.5, 6.0),
        ("b5", 4.0, 6.0), ("b6", -1.6, 4.5), ("b7", 0.2, 5.5),
        ("c1", -2.4, 3.0), ("c2", -1.0, 3.5), ("c3", 0.0, 2.5), ("c4", 1.0, 3.0), ("c5", 2.4, 3.0),
        ("d1", -3.0, 4.0), ("d2", 0.2, 4.3), ("d3", -1.0, 6.0),
        ("p1", -4.2, 8.45), ("p2", 0.2, 8.6), ("p3", 3.8, 8.8),
    ];
    let mut edges = Vec::new();
    let red = ["v", "c1", "d1", "b1", "a1", "p1", "a2", "p2", "a3", "p3", "a4", "b5", "c5", "v"];
    let blue: [&[&str]; 3] = [
        &["v", "c2", "b6", "b2", "p1"],
        &["v", "c3", "d2", "b7", "b3", "p2"],
        &["v", "c4", "b4", "p3"],
    ];
    let green: [&[&str]; 2] = [&["b1", "b2", "b6", "d3", "b7", "b3", "b4", "b5"], &["c1", "c2", "d2", "c4", "c5"]];
    for path in std::iter::once(&red[..]).chain(blue).chain(green) {
        edges.extend(path.windows(2).map(|w| (w[0], w[1])));
    }
    Fixture::new(&points, &edges)
}

pub fn figure_one_grid(f: &Fixture) -> FanGrid {
    FanGrid {
        center: f.n("v"),
        cycle: f.ns(&["v", "c1", "d1", "b1", "a1", "p1", "a2", "p2", "a3", "p3", "a4", "b5", "c5"]),
        left: f.ns(&["c1", "d1", "b1"]),
        segments: vec![f.ns(&["a1", "p1"]), f.ns(&["a2", "p2"]), f.ns(&["a3", "p3", "a4"])],
        right: f.ns(&["b5", "c5"]),
        rays: vec![
            f.ns(&["v", "c2", "b6", "b2", "p1"]),
            f.ns(&["v", "c3", "d2", "b7", "b3", "p2"]),
            f.ns(&["v", "c4", "b4", "p3"]),
        ],
        rows: vec![f.ns(&["b1", "b2", "b6", "d3", "b7", "b3", "b4", "b5"]), f.ns(&["c1", "c2", "d2", "c4", "c5"])],
    }
}

pub fn concentric(m: usize) -> Fixture {
    let mut points = vec![("w".to_string(), 0.0, 0.0)];
    let mut edges = Vec::new();
    for i in 1..=m {
        let f = i as f64;
        points.push((format!("a{i}"), 1.0, f));
        points.push((format!("b{i}"), f + 1.0, 0.0));
        points.push((format!("c{i}"), 1.0, -f));
        let cyc = ["w".to_string(), format!("a{i}"), format!("b{i}"), format!("c{i}"), "w".to_string()];
        edges.extend(cyc.windows(2).map(|w| (w[0].clone(), w[1].clone())));
    }
    let pts: Vec<(&str, f64, f64)> = points.iter().map(|(n, x, y)| (n.as_str(), *x, *y)).collect();
    let es: Vec<(&str, &str)> = edges.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
    Fixture::new(&pts, &es)
}

pub fn cycle_with(n: usize, extra: &[(usize, usize)]) -> WeightedMultigraph {
    let mut edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    edges.extend_from_slice(extra);
    let vertices = edges.iter().map(|&(a, b)| a.max(b) + 1).max().unwrap();
    WeightedMultigraph::from_edge_list(vertices, &edges).unwrap()
}

pub fn unit_segments(n: usize) -> (Vec<VertexId>, Vec<Vec<VertexId>>) {
    let cycle = (0..n as u32).map(VertexId).collect();
    let segments = (1..n as u32).map(|i| vec![VertexId(i)]).collect();
    (cycle, segments)
}

/// `Q` along the x-axis, a spine above it, teeth alternating between
/// straight drops and detours over the spine's right end.
pub fn alternating_comb(teeth: usize) -> (Fixture, Vec<NodeRef>, Comb<NodeRef>) {
    let m = teeth;
    let mut points: Vec<(String, f64, f64)> = Vec::new();
    let mut edges: Vec<(String, String)> = Vec::new();
    let mut q_points: Vec<(f64, String)> = Vec::new();
    let mut paths = Vec::new();
    for i in 1..=m {
        let s = format!("s{i}");
        points.push((s.clone(), i as f64, 2.0));
        if i > 1 {
            edges.push((format!("s{}", i - 1), s.clone()));
        }
        let t = format!("t{i}");
        if i % 2 == 1 {
            points.push((t.clone(), i as f64, 0.0));
            q_points.push((i as f64, t.clone()));
            edges.push((t.clone(), s.clone()));
            paths.push(vec![t, s]);
        } else {
            let h = 3.0 + (m - i) as f64;
            let x = (m + 1 + (m - i)) as f64;
            let (up, over) = (format!("u{i}"), format!("o{i}"));
            points.push((up.clone(), i as f64, h));
            points.push((over.clone(), x, h));
            points.push((t.clone(), x, 0.0));
            q_points.push((x, t.clone()));
            edges.extend([(t.clone(), over.clone()), (over.clone(), up.clone()), (up.clone(), s.clone())]);
            paths.push(vec![t, over, up, s]);
        }
    }
    q_points.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
    for w in q_points.windows(2) {
        edges.push((w[0].1.clone(), w[1].1.clone()));
    }
    let pts: Vec<(&str, f64, f64)> = points.iter().map(|(n, x, y)| (n.as_str(), *x, *y)).collect();
    let es: Vec<(&str, &str)> = edges.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
    let f = Fixture::new(&pts, &es);
    let q: Vec<NodeRef> = q_points.iter().map(|(_, n)| f.n(n)).collect();
    let comb = Comb {
        spine: (1..=m).map(|i| f.n(&format!("s{i}"))).collect(),
        teeth: (1..=m).map(|i| f.n(&format!("t{i}"))).collect(),
        tooth_paths: paths.iter().map(|p| p.iter().map(|n| f.n(n)).collect()).collect(),
    };
    (f, q, comb)
}

/// An `(r x n)` grid of rays and arcs around `v`.
pub fn grid_fixture(r: usize, n: usize) -> (Fixture, FanGrid) {
    let name = |j: usize, i: usize| format!("g{j}_{i}");
    let mut points = vec![("v".to_string(), 0.0, 0.0)];
    for j in 1..=r + 1 {
        for i in 0..=n + 1 {
            let a = std::f64::consts::PI * (0.9 - 0.8 * i as f64 / (n + 1) as f64);
            points.push((name(j, i), a.cos() * j as f64, a.sin() * j as f64));
        }
    }
    let mut edges = Vec::new();
    for i in 0..=n + 1 {
        edges.push(("v".to_string(), name(1, i)));
        for j in 1..=r {
            edges.push((name(j, i), name(j + 1, i)));
        }
    }
    for j in 1..=r + 1 {
        for i in 0..=n {
            edges.push((name(j, i), name(j, i + 1)));
        }
    }
    let pts: Vec<(&str, f64, f64)> = points.iter().map(|(n, x, y)| (n.as_str(), *x, *y)).collect();
    let es: Vec<(&str, &str)> = edges.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
    let f = Fixture::new(&pts, &es);
    let at = |j: usize, i: usize| f.n(&name(j, i));
    let left: Vec<NodeRef> = (1..=r + 1).map(|j| at(j, 0)).collect();
    let right: Vec<NodeRef> = (1..=r + 1).rev().map(|j| at(j, n + 1)).collect();
    let segments: Vec<Vec<NodeRef>> = (1..=n).map(|i| vec![at(r + 1, i)]).collect();
    let mut cycle = vec![f.n("v")];
    cycle.extend(left.iter().copied());
    cycle.extend(segments.iter().flatten().copied());
    cycle.extend(right.iter().copied());
    let fg = FanGrid {
        center: f.n("v"),
        cycle,
        left,
        segments,
        right,
        rays: (1..=n).map(|i| std::iter::once(f.n("v")).chain((1..=r + 1).map(|j| at(j, i))).collect()).collect(),
        rows: (1..=r).map(|j| (0..=n + 1).map(|i| at(j, i)).collect()).collect(),
    };
    (f, fg)
}
