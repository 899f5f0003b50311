//! Turning a crossing configuration into a drawing.
//!
//! Every crossing is replaced by a wheel (hub plus a 4-cycle rim) and the
//! four half-segments meeting there are attached to consecutive rim
//! vertices in the order a-in, b-in, a-out, b-out. A wheel has a unique
//! embedding up to reflection, so any plane embedding of the result
//! contracts back to a planarization in which every crossing alternates.

use super::{Crossing, Drawing, End, NodeRef, SegmentEnd};
use crate::graph::{EdgeId, WeightedMultigraph};
use crate::planarity::planar_embedding;
use std::collections::{BTreeMap, HashMap};
use thiserror::Error;

/// Which edge pairs cross, and in which order the crossings appear along
/// each edge.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CrossingConfig {
    pub pairs: Vec<(EdgeId, EdgeId)>,
    /// Pair indices along an edge from its `u` end to its `v` end. Edges
    /// without an entry use the order of `pairs`.
    pub orders: BTreeMap<EdgeId, Vec<usize>>,
}

impl CrossingConfig {
    pub fn from_pairs(pairs: Vec<(EdgeId, EdgeId)>) -> Self {
        CrossingConfig { pairs, orders: BTreeMap::new() }
    }

    pub fn add(&mut self, a: EdgeId, b: EdgeId) -> usize {
        self.pairs.push((a, b));
        self.pairs.len() - 1
    }

    /// Pair indices involving `e`, in listing order.
    pub fn pairs_on(&self, e: EdgeId) -> Vec<usize> {
        (0..self.pairs.len())
            .filter(|&i| self.pairs[i].0 == e || self.pairs[i].1 == e)
            .collect()
    }

    /// The crossing sequence along `e`.
    pub fn sequence(&self, e: EdgeId) -> Vec<usize> {
        self.orders.get(&e).cloned().unwrap_or_else(|| self.pairs_on(e))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RealizeError {
    #[error("pair {0} refers to an unknown edge or crosses an edge with itself")]
    BadPair(usize),
    #[error("order given for edge {0} is not a permutation of its crossings")]
    BadOrder(EdgeId),
    #[error("no plane drawing has these crossings in this order")]
    NotPlanar,
    #[error("realized drawing is invalid: {0}")]
    Invalid(super::Violation),
}

pub fn realize(g: &WeightedMultigraph, config: &CrossingConfig) -> Result<Drawing, RealizeError> {
    for (i, &(a, b)) in config.pairs.iter().enumerate() {
        if a == b || g.edge(a).is_err() || g.edge(b).is_err() {
            return Err(RealizeError::BadPair(i));
        }
    }
    let mut sequences: BTreeMap<EdgeId, Vec<usize>> = BTreeMap::new();
    for e in g.edges() {
        let seq = config.sequence(e.id);
        let mut sorted = seq.clone();
        sorted.sort_unstable();
        if sorted != config.pairs_on(e.id) {
            return Err(RealizeError::BadOrder(e.id));
        }
        sequences.insert(e.id, seq);
    }
    let position = |e: EdgeId, pair: usize| sequences[&e].iter().position(|&p| p == pair).unwrap() as u32;
    let crossings: Vec<Crossing> = config
        .pairs
        .iter()
        .enumerate()
        .map(|(i, &(a, b))| Crossing { a, sa: position(a, i), b, sb: position(b, i) })
        .collect();

    let nv = g.vertex_count();
    let hub = |c: usize| nv + 5 * c;
    let rim = |c: usize, j: usize| nv + 5 * c + 1 + j;
    let node_count = nv + 5 * crossings.len();
    let mut edges = Vec::new();
    for c in 0..crossings.len() {
        for j in 0..4 {
            edges.push((hub(c), rim(c, j)));
            edges.push((rim(c, j), rim(c, (j + 1) % 4)));
        }
    }
    // Gadget node where a segment end lies, and the segment end itself.
    let mut owner: HashMap<(usize, usize), (SegmentEnd, SegmentEnd)> = HashMap::new();
    let mut rim_end: HashMap<usize, SegmentEnd> = HashMap::new();
    for e in g.edges() {
        let seq = &sequences[&e.id];
        let attach = |s: usize, end: End| -> usize {
            // Node at the `end` of segment `s`.
            let k = match end {
                End::Tail => s,
                End::Head => s + 1,
            };
            if k == 0 {
                g.vertex_index(e.u).unwrap()
            } else if k == seq.len() + 1 {
                g.vertex_index(e.v).unwrap()
            } else {
                let c = seq[k - 1];
                let is_a = crossings[c].a == e.id;
                let j = match (is_a, end) {
                    (true, End::Head) => 0,
                    (false, End::Head) => 1,
                    (true, End::Tail) => 2,
                    (false, End::Tail) => 3,
                };
                rim(c, j)
            }
        };
        for s in 0..=seq.len() {
            let (p, q) = (attach(s, End::Tail), attach(s, End::Head));
            let tail = SegmentEnd::new(e.id, s as u32, End::Tail);
            let head = SegmentEnd::new(e.id, s as u32, End::Head);
            edges.push((p, q));
            owner.insert((p, q), (tail, head));
            owner.insert((q, p), (head, tail));
            if p >= nv {
                rim_end.insert(p, tail);
            }
            if q >= nv {
                rim_end.insert(q, head);
            }
        }
    }
    let rot = planar_embedding(node_count, &edges).ok_or(RealizeError::NotPlanar)?;

    let mut rotation = BTreeMap::new();
    for (i, v) in g.vertex_ids().enumerate() {
        let ends = rot[i].iter().map(|&w| owner[&(i, w)].0).collect();
        rotation.insert(NodeRef::Vertex(v), ends);
    }
    for c in 0..crossings.len() {
        let ends = rot[hub(c)].iter().map(|r| rim_end[r]).collect();
        rotation.insert(NodeRef::Crossing(c), ends);
    }
    let d = Drawing { graph: g.clone(), rotation, crossings };
    d.verify().map_err(RealizeError::Invalid)?;
    Ok(d)
}

fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        v.reverse();
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Tries every combination of per-edge crossing orders (edges in id order,
/// permutations in lexicographic order) and returns the first that
/// realizes, together with the orders used.
pub fn search_orders(
    g: &WeightedMultigraph,
    pairs: &[(EdgeId, EdgeId)],
    limit: usize,
) -> Option<(Drawing, CrossingConfig)> {
    let mut config = CrossingConfig::from_pairs(pairs.to_vec());
    let busy: Vec<EdgeId> = g
        .edges()
        .iter()
        .map(|e| e.id)
        .filter(|&e| config.pairs_on(e).len() >= 2)
        .collect();
    for &e in &busy {
        config.orders.insert(e, config.pairs_on(e));
    }
    for _ in 0..limit {
        if let Ok(d) = realize(g, &config) {
            return Some((d, config));
        }
        // Odometer over the per-edge permutations.
        let mut advanced = false;
        for &e in &busy {
            if next_permutation(config.orders.get_mut(&e).unwrap()) {
                advanced = true;
                break;
            }
        }
        if !advanced {
            return None;
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{named, VertexId};

    #[test]
    fn k33_with_one_crossing() {
        let g = named::k33();
        let e = |a: &str, b: &str| g.edge_by_labels(a, b).unwrap();
        let config = CrossingConfig::from_pairs(vec![(e("a0", "b1"), e("a1", "b0"))]);
        let d = realize(&g, &config).unwrap();
        assert_eq!(d.crossing_count().unwrap().total, 1);
    }

    #[test]
    fn k5_without_crossings_fails() {
        let g = named::complete(5);
        assert_eq!(realize(&g, &CrossingConfig::default()), Err(RealizeError::NotPlanar));
    }

    #[test]
    fn orders_must_be_permutations() {
        let g = named::complete(4);
        let a = g.edge_between(VertexId(0), VertexId(2)).unwrap();
        let b = g.edge_between(VertexId(1), VertexId(3)).unwrap();
        let mut config = CrossingConfig::from_pairs(vec![(a, b)]);
        config.orders.insert(a, vec![]);
        assert_eq!(realize(&g, &config), Err(RealizeError::BadOrder(a)));
        assert_eq!(
            realize(&g, &CrossingConfig::from_pairs(vec![(a, a)])),
            Err(RealizeError::BadPair(0))
        );
    }

    #[test]
    fn permutations_enumerate_all() {
        let mut v = vec![0, 1, 2];
        let mut count = 1;
        while next_permutation(&mut v) {
            count += 1;
        }
        assert_eq!(count, 6);
    }
}
