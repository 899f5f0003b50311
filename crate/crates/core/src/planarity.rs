//! Planarity testing with embedding, by path addition over the biconnected
//! blocks (Demoucron, Malgrange and Pertuiset).
//!
//! Works on plain simple graphs given as `n` and an edge list over `0..n`.
//! Duplicate edges are collapsed and self-loops ignored, since neither
//! affects planarity.

use std::collections::{BTreeSet, HashSet, VecDeque};

/// Rotation system: for every vertex the cyclic order of its neighbours.
pub type Rotation = Vec<Vec<usize>>;

pub fn is_planar(n: usize, edges: &[(usize, usize)]) -> bool {
    planar_embedding(n, edges).is_some()
}

/// A planar rotation system, or `None` when the graph is not planar.
pub fn planar_embedding(n: usize, edges: &[(usize, usize)]) -> Option<Rotation> {
    let edges = normalize(edges);
    if n >= 3 && edges.len() > 3 * n - 6 {
        return None;
    }
    let mut adj = vec![Vec::new(); n];
    for (i, &(a, b)) in edges.iter().enumerate() {
        adj[a].push((b, i));
        adj[b].push((a, i));
    }
    let mut rotation: Rotation = vec![Vec::new(); n];
    for block in biconnected_blocks(n, &adj, edges.len()) {
        let block_edges: Vec<(usize, usize)> = block.iter().map(|&i| edges[i]).collect();
        let local = if block_edges.len() == 1 {
            let (a, b) = block_edges[0];
            vec![(a, vec![b]), (b, vec![a])]
        } else {
            embed_block(n, &block_edges)?
        };
        for (v, order) in local {
            rotation[v].extend(order);
        }
    }
    Some(rotation)
}

fn normalize(edges: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let set: BTreeSet<(usize, usize)> = edges
        .iter()
        .filter(|(a, b)| a != b)
        .map(|&(a, b)| if a < b { (a, b) } else { (b, a) })
        .collect();
    set.into_iter().collect()
}

/// Edge index sets of the biconnected blocks (bridges are one-edge blocks).
fn biconnected_blocks(n: usize, adj: &[Vec<(usize, usize)>], m: usize) -> Vec<Vec<usize>> {
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut timer = 0;
    let mut blocks = Vec::new();
    let mut edge_stack: Vec<usize> = Vec::new();
    let mut used = vec![false; m];
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        // (vertex, edge used to enter, next adjacency index)
        let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
        while let Some(&mut (x, in_edge, ref mut next)) = stack.last_mut() {
            if *next < adj[x].len() {
                let (y, e) = adj[x][*next];
                *next += 1;
                if e == in_edge || used[e] {
                    continue;
                }
                used[e] = true;
                edge_stack.push(e);
                if disc[y] == usize::MAX {
                    disc[y] = timer;
                    low[y] = timer;
                    timer += 1;
                    stack.push((y, e, 0));
                } else {
                    low[x] = low[x].min(disc[y]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    low[p] = low[p].min(low[x]);
                    if low[x] >= disc[p] {
                        let mut block = Vec::new();
                        while let Some(e) = edge_stack.pop() {
                            block.push(e);
                            if e == in_edge {
                                break;
                            }
                        }
                        blocks.push(block);
                    }
                }
            }
        }
    }
    blocks
}

/// Embeds one biconnected block with at least two edges. Returns the
/// neighbour order of each block vertex.
fn embed_block(n: usize, edges: &[(usize, usize)]) -> Option<Vec<(usize, Vec<usize>)>> {
    let mut adj = vec![Vec::new(); n];
    for (i, &(a, b)) in edges.iter().enumerate() {
        adj[a].push((b, i));
        adj[b].push((a, i));
    }
    let cycle = find_cycle(&adj, edges[0])?;
    let mut in_h_vertex = vec![false; n];
    let mut in_h_edge = vec![false; edges.len()];
    for (idx, &v) in cycle.iter().enumerate() {
        in_h_vertex[v] = true;
        let w = cycle[(idx + 1) % cycle.len()];
        let e = adj[v].iter().find(|&&(y, _)| y == w).unwrap().1;
        in_h_edge[e] = true;
    }
    let mut h_edges = cycle.len();
    let mut faces: Vec<Vec<usize>> = vec![cycle.clone(), cycle.iter().rev().copied().collect()];

    while h_edges < edges.len() {
        let fragments = fragments(&adj, edges, &in_h_vertex, &in_h_edge);
        let face_sets: Vec<HashSet<usize>> =
            faces.iter().map(|f| f.iter().copied().collect()).collect();
        let mut choice: Option<(usize, usize)> = None;
        for (fi, frag) in fragments.iter().enumerate() {
            let admissible: Vec<usize> = (0..faces.len())
                .filter(|&k| frag.attachments.iter().all(|a| face_sets[k].contains(a)))
                .collect();
            match admissible.len() {
                0 => return None,
                1 => {
                    choice = Some((fi, admissible[0]));
                    break;
                }
                _ => {
                    if choice.is_none() {
                        choice = Some((fi, admissible[0]));
                    }
                }
            }
        }
        let (fi, face_idx) = choice.expect("at least one fragment remains");
        let path = fragment_path(&adj, &fragments[fi], &in_h_vertex);
        for w in path.windows(2) {
            let e = adj[w[0]].iter().find(|&&(y, _)| y == w[1]).unwrap().1;
            in_h_edge[e] = true;
            h_edges += 1;
        }
        for &v in &path {
            in_h_vertex[v] = true;
        }
        let face = faces.swap_remove(face_idx);
        let (f1, f2) = split_face(&face, &path);
        faces.push(f1);
        faces.push(f2);
    }
    Some(rotation_from_faces(&faces))
}

/// A cycle through the edge `a`–`b`: a shortest `a`–`b` path avoiding it.
fn find_cycle(adj: &[Vec<(usize, usize)>], (a, b): (usize, usize)) -> Option<Vec<usize>> {
    let mut prev = vec![usize::MAX; adj.len()];
    prev[a] = a;
    let mut queue = VecDeque::from([a]);
    while let Some(x) = queue.pop_front() {
        for &(y, _) in &adj[x] {
            if x == a && y == b {
                continue;
            }
            if prev[y] == usize::MAX {
                prev[y] = x;
                if y == b {
                    let mut path = vec![b];
                    let mut cur = b;
                    while cur != a {
                        cur = prev[cur];
                        path.push(cur);
                    }
                    return Some(path);
                }
                queue.push_back(y);
            }
        }
    }
    None
}

struct Fragment {
    /// Non-H vertices of the fragment (empty for a chord).
    inner: Vec<usize>,
    /// A chord's endpoints when `inner` is empty.
    chord: Option<(usize, usize)>,
    attachments: Vec<usize>,
}

fn fragments(
    adj: &[Vec<(usize, usize)>],
    edges: &[(usize, usize)],
    in_h_vertex: &[bool],
    in_h_edge: &[bool],
) -> Vec<Fragment> {
    let mut out = Vec::new();
    for (i, &(a, b)) in edges.iter().enumerate() {
        if !in_h_edge[i] && in_h_vertex[a] && in_h_vertex[b] {
            out.push(Fragment { inner: Vec::new(), chord: Some((a, b)), attachments: vec![a, b] });
        }
    }
    let n = adj.len();
    let mut seen = vec![false; n];
    for s in 0..n {
        if in_h_vertex[s] || seen[s] || adj[s].is_empty() {
            continue;
        }
        let mut inner = vec![s];
        let mut attach = BTreeSet::new();
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            for &(y, _) in &adj[x] {
                if in_h_vertex[y] {
                    attach.insert(y);
                } else if !seen[y] {
                    seen[y] = true;
                    inner.push(y);
                    queue.push_back(y);
                }
            }
        }
        out.push(Fragment { inner, chord: None, attachments: attach.into_iter().collect() });
    }
    out
}

/// A path through the fragment joining two distinct attachments.
fn fragment_path(adj: &[Vec<(usize, usize)>], frag: &Fragment, in_h_vertex: &[bool]) -> Vec<usize> {
    if let Some((a, b)) = frag.chord {
        return vec![a, b];
    }
    let inner: HashSet<usize> = frag.inner.iter().copied().collect();
    let a = frag.attachments[0];
    let start = adj[a].iter().map(|&(y, _)| y).find(|y| inner.contains(y)).unwrap();
    let mut prev = vec![usize::MAX; adj.len()];
    prev[start] = start;
    let mut queue = VecDeque::from([start]);
    while let Some(x) = queue.pop_front() {
        if let Some(&(b, _)) = adj[x].iter().find(|&&(y, _)| in_h_vertex[y] && y != a) {
            let mut path = vec![b, x];
            let mut cur = x;
            while cur != start {
                cur = prev[cur];
                path.push(cur);
            }
            path.push(a);
            path.reverse();
            return path;
        }
        for &(y, _) in &adj[x] {
            if inner.contains(&y) && prev[y] == usize::MAX {
                prev[y] = x;
                queue.push_back(y);
            }
        }
    }
    unreachable!("a fragment of a biconnected block has at least two attachments")
}

/// Splits `face` by `path`, whose endpoints lie on the face.
fn split_face(face: &[usize], path: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let a = path[0];
    let b = *path.last().unwrap();
    let interior = &path[1..path.len() - 1];
    let len = face.len();
    let ia = face.iter().position(|&v| v == a).unwrap();
    let ib = face.iter().position(|&v| v == b).unwrap();
    let walk = |from: usize, to: usize| -> Vec<usize> {
        let mut out = vec![face[from]];
        let mut i = from;
        while i != to {
            i = (i + 1) % len;
            out.push(face[i]);
        }
        out
    };
    let mut f1 = walk(ia, ib);
    f1.extend(interior.iter().rev());
    let mut f2 = walk(ib, ia);
    f2.extend(interior.iter());
    (f1, f2)
}

/// Converts consistently oriented face cycles into neighbour orders: a
/// face passing `u, v, w` means `w` follows `u` around `v`.
fn rotation_from_faces(faces: &[Vec<usize>]) -> Vec<(usize, Vec<usize>)> {
    let mut succ: std::collections::BTreeMap<usize, std::collections::HashMap<usize, usize>> =
        Default::default();
    for f in faces {
        let len = f.len();
        for i in 0..len {
            let (u, v, w) = (f[(i + len - 1) % len], f[i], f[(i + 1) % len]);
            succ.entry(v).or_default().insert(u, w);
        }
    }
    succ.into_iter()
        .map(|(v, map)| {
            let start = *map.keys().min().unwrap();
            let mut order = vec![start];
            let mut cur = map[&start];
            while cur != start {
                order.push(cur);
                cur = map[&cur];
            }
            (v, order)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embedding::PlaneGraph;

    fn complete(n: usize) -> Vec<(usize, usize)> {
        let mut e = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                e.push((a, b));
            }
        }
        e
    }

    fn assert_embedding(n: usize, edges: &[(usize, usize)]) {
        let rot = planar_embedding(n, edges).expect("planar");
        let pg = PlaneGraph::from_neighbor_rotation(&rot);
        assert!(pg.euler_genus_zero(), "embedding is not plane");
    }

    #[test]
    fn kuratowski_graphs_rejected() {
        assert!(!is_planar(5, &complete(5)));
        let k33: Vec<_> = (0..3).flat_map(|a| (3..6).map(move |b| (a, b))).collect();
        assert!(!is_planar(6, &k33));
    }

    #[test]
    fn small_planar_graphs_embed() {
        assert_embedding(4, &complete(4));
        let mut k5_minus = complete(5);
        k5_minus.pop();
        assert_embedding(5, &k5_minus);
        assert_embedding(3, &[(0, 1), (1, 2)]);
        // Two triangles sharing a cut vertex plus a pendant edge.
        assert_embedding(6, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2), (4, 5)]);
    }

    #[test]
    fn empty_and_single_edge() {
        assert_eq!(planar_embedding(0, &[]), Some(vec![]));
        assert_eq!(planar_embedding(2, &[(0, 1)]), Some(vec![vec![1], vec![0]]));
    }
}
