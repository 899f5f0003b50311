use super::{AnalyzerError, Comb};
use crate::graph::{VertexId, WeightedMultigraph};
use std::collections::{BTreeMap, BTreeSet};

/// A tree with a chosen root; children lists follow the vertex order of
/// the graph.
#[derive(Debug, Clone)]
pub struct RootedTree {
    pub root: VertexId,
    pub adj: BTreeMap<VertexId, Vec<VertexId>>,
    pub parent: BTreeMap<VertexId, Option<VertexId>>,
    /// Vertices in breadth-first order from the root.
    pub order: Vec<VertexId>,
}

impl RootedTree {
    pub fn new(g: &WeightedMultigraph, root: VertexId) -> Result<Self, AnalyzerError> {
        if !g.contains_vertex(root) || g.edge_count() + 1 != g.vertex_count() || !g.is_connected() {
            return Err(AnalyzerError::NotATree);
        }
        let adj: BTreeMap<VertexId, Vec<VertexId>> =
            g.vertex_ids().map(|v| (v, g.neighbors(v).unwrap_or_default())).collect();
        let mut parent = BTreeMap::from([(root, None)]);
        let mut order = vec![root];
        let mut i = 0;
        while i < order.len() {
            let v = order[i];
            for &w in &adj[&v] {
                if !parent.contains_key(&w) {
                    parent.insert(w, Some(v));
                    order.push(w);
                }
            }
            i += 1;
        }
        Ok(RootedTree { root, adj, parent, order })
    }

    pub fn children(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        let p = self.parent[&v];
        self.adj[&v].iter().copied().filter(move |&w| Some(w) != p)
    }

    pub fn is_leaf(&self, v: VertexId) -> bool {
        self.children(v).next().is_none()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.values().map(Vec::len).max().unwrap_or(0)
    }

    /// The largest number of vertices with at least two children on a
    /// root-leaf path.
    pub fn max_branching_on_path(&self) -> usize {
        let mut best = BTreeMap::new();
        for &v in self.order.iter().rev() {
            let below = self.children(v).map(|c| best[&c]).max().unwrap_or(0);
            let here = usize::from(self.children(v).count() >= 2);
            best.insert(v, below + here);
        }
        best[&self.root]
    }

    /// Walks from `v` through first children down to a leaf.
    fn descend(&self, v: VertexId) -> Vec<VertexId> {
        let mut path = vec![v];
        let mut cur = v;
        while let Some(c) = self.children(cur).next() {
            path.push(c);
            cur = c;
        }
        path
    }
}

/// Leaves: vertices without children (the root only when alone).
pub fn leaf_count(t: &RootedTree) -> usize {
    t.order.iter().filter(|&&v| t.is_leaf(v)).count()
}

/// Depth of the deepest complete binary tree contained as a rooted minor.
pub fn binary_minor_depth(t: &RootedTree) -> u32 {
    let mut b: BTreeMap<VertexId, u32> = BTreeMap::new();
    for &v in t.order.iter().rev() {
        let mut vals: Vec<u32> = t.children(v).map(|c| b[&c]).collect();
        vals.sort_unstable_by(|x, y| y.cmp(x));
        let value = match vals.as_slice() {
            [] => 0,
            [only] => *only,
            [first, second, ..] => (*first).max(second + 1),
        };
        b.insert(v, value);
    }
    b[&t.root]
}

/// Comb from a root-leaf path with at least `k` branching vertices: the
/// spine runs between the first and the `k`-th of them and each tooth path
/// leaves through a child off the path. Teeth are leaves of `t`.
pub fn branch_path_comb(t: &RootedTree, k: usize) -> Option<Comb<VertexId>> {
    if k == 0 {
        return None;
    }
    let mut count = BTreeMap::new();
    for &v in t.order.iter().rev() {
        let below = t.children(v).map(|c| count[&c]).max().unwrap_or(0);
        count.insert(v, below + usize::from(t.children(v).count() >= 2));
    }
    if count[&t.root] < k {
        return None;
    }
    let mut path = vec![t.root];
    let mut cur = t.root;
    while let Some(next) = t.children(cur).max_by_key(|c| (count[c], std::cmp::Reverse(*c))) {
        path.push(next);
        cur = next;
    }
    let branching: Vec<usize> =
        (0..path.len()).filter(|&i| t.children(path[i]).count() >= 2).take(k).collect();
    let (lo, hi) = (branching[0], *branching.last()?);
    let mut teeth = Vec::new();
    let mut tooth_paths = Vec::new();
    for &i in &branching {
        let off = t.children(path[i]).find(|&c| path.get(i + 1) != Some(&c))?;
        let mut p = t.descend(off);
        p.reverse();
        p.push(path[i]);
        teeth.push(p[0]);
        tooth_paths.push(p);
    }
    Some(Comb { spine: path[lo..=hi].to_vec(), teeth, tooth_paths })
}

/// A comb with `k` teeth, all leaves of `t`, if any path of `t` can carry
/// one. Trees with more than `bound_leaves_threshold(Δ, b(T), k)` leaves
/// always have one.
pub fn find_comb(t: &RootedTree, k: usize) -> Option<Comb<VertexId>> {
    if k == 0 {
        return None;
    }
    if let Some(c) = branch_path_comb(t, k) {
        return Some(c);
    }
    // A tooth hangs off spine vertex `s` through neighbour `x` when the part
    // of the tree beyond `x` holds a leaf.
    let mut leaf_beyond: BTreeMap<(VertexId, VertexId), Option<Vec<VertexId>>> = BTreeMap::new();
    fn beyond(
        t: &RootedTree,
        s: VertexId,
        x: VertexId,
        memo: &mut BTreeMap<(VertexId, VertexId), Option<Vec<VertexId>>>,
    ) -> Option<Vec<VertexId>> {
        if let Some(r) = memo.get(&(s, x)) {
            return r.clone();
        }
        let result = if x != t.root && t.adj[&x].len() == 1 {
            Some(vec![x])
        } else {
            t.adj[&x].iter().filter(|&&y| y != s).find_map(|&y| beyond(t, x, y, memo)).map(|mut p| {
                p.push(x);
                p
            })
        };
        memo.insert((s, x), result.clone());
        result
    }
    let mut host = |s: VertexId, on_path: &[VertexId]| -> Option<Vec<VertexId>> {
        t.adj[&s]
            .iter()
            .filter(|x| !on_path.contains(x))
            .find_map(|&x| beyond(t, s, x, &mut leaf_beyond))
    };
    let vertices: Vec<VertexId> = t.order.clone();
    let mut best: Option<(usize, Vec<VertexId>)> = None;
    for &a in &vertices {
        // Depth-first over the paths starting at `a`.
        let mut stack: Vec<(Vec<VertexId>, usize)> = vec![(vec![a], 0)];
        while let Some((path, internal)) = stack.pop() {
            let end = *path.last().unwrap();
            let count = if path.len() == 1 {
                usize::from(host(a, &[]).is_some())
            } else {
                let first = usize::from(host(a, &[path[1]]).is_some());
                let last = usize::from(host(end, &[path[path.len() - 2]]).is_some());
                first + internal + last
            };
            if best.as_ref().is_none_or(|(c, _)| count > *c) {
                best = Some((count, path.clone()));
            }
            let prev = if path.len() >= 2 { Some(path[path.len() - 2]) } else { None };
            for &next in &t.adj[&end] {
                if Some(next) == prev {
                    continue;
                }
                let inner = if path.len() >= 2 {
                    usize::from(host(end, &[path[path.len() - 2], next]).is_some())
                } else {
                    0
                };
                let mut longer = path.clone();
                longer.push(next);
                stack.push((longer, internal + inner));
            }
        }
    }
    let (count, spine) = best?;
    if count < k {
        return None;
    }
    let mut teeth = Vec::new();
    let mut tooth_paths = Vec::new();
    let mut first = None;
    let mut last = 0;
    for (i, &s) in spine.iter().enumerate() {
        if teeth.len() == k {
            break;
        }
        let around: Vec<VertexId> =
            [i.checked_sub(1).map(|j| spine[j]), spine.get(i + 1).copied()].into_iter().flatten().collect();
        if let Some(mut p) = host(s, &around) {
            p.push(s);
            teeth.push(p[0]);
            tooth_paths.push(p);
            first.get_or_insert(i);
            last = i;
        }
    }
    let lo = first?;
    Some(Comb { spine: spine[lo..=last].to_vec(), teeth, tooth_paths })
}

/// Checks that `c` is a comb inside `t` whose teeth are leaves of `t`.
pub fn is_leaf_comb(t: &RootedTree, c: &Comb<VertexId>) -> bool {
    let adjacent = |p: &[VertexId]| p.windows(2).all(|w| t.adj.get(&w[0]).is_some_and(|n| n.contains(&w[1])));
    let teeth: BTreeSet<_> = c.teeth.iter().collect();
    c.is_well_formed()
        && adjacent(&c.spine)
        && c.tooth_paths.iter().all(|p| adjacent(p))
        && teeth.iter().all(|&&v| t.is_leaf(v) && v != t.root)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tree(n: usize, edges: &[(usize, usize)]) -> WeightedMultigraph {
        WeightedMultigraph::from_edge_list(n, edges).unwrap()
    }

    #[test]
    fn small_depths() {
        let single = tree(1, &[]);
        assert_eq!(binary_minor_depth(&RootedTree::new(&single, VertexId(0)).unwrap()), 0);
        let path = tree(4, &[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(binary_minor_depth(&RootedTree::new(&path, VertexId(0)).unwrap()), 0);
        assert_eq!(binary_minor_depth(&RootedTree::new(&path, VertexId(1)).unwrap()), 1);
    }

    #[test]
    fn star_has_single_tooth_combs() {
        let star = tree(6, &[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5)]);
        let t = RootedTree::new(&star, VertexId(0)).unwrap();
        assert!(find_comb(&t, 2).is_none());
        let c = find_comb(&t, 1).unwrap();
        assert!(is_leaf_comb(&t, &c));
    }

    #[test]
    fn spider_comb_needs_a_sideways_spine() {
        // Three legs of length two around the root: no root-leaf path has two
        // branching vertices, yet a spine across two legs carries two teeth.
        let spider = tree(7, &[(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]);
        let t = RootedTree::new(&spider, VertexId(0)).unwrap();
        assert!(branch_path_comb(&t, 2).is_none());
        let c = find_comb(&t, 2).unwrap();
        assert!(is_leaf_comb(&t, &c));
        assert_eq!(c.teeth_count(), 2);
    }

    #[test]
    fn rejects_non_trees() {
        let cycle = tree(3, &[(0, 1), (1, 2), (2, 0)]);
        assert!(matches!(RootedTree::new(&cycle, VertexId(0)), Err(AnalyzerError::NotATree)));
    }
}
