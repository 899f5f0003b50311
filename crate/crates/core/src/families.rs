//! Generators for the 13-crossing-critical families and their zip chains.
//!
//! Vertex labels follow the usual names: `x`, `u1`..`u5`, `v1`..`v5`, and
//! `w1^i`, `w4^i` for the wedge tips. The shared wedge vertices are
//! `u5 = w2^1`, `w3^i = w2^(i+1)` for `i < k` and `w3^k = v5`; the chain
//! vertices are labelled `w3^i` for `i = 1..k-1`.

use crate::graph::{named, GraphError, VertexId, WeightedMultigraph};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("k must be at least 2 (got {0}); ccg13 with one wedge has fewer than 13 crossings")]
    KTooSmall(usize),
    #[error("c must be at least 13 (got {0})")]
    CTooSmall(usize),
    #[error("i must satisfy 1 <= i and 13*i <= c (got c={c}, i={i})")]
    BadCopyCount { c: usize, i: usize },
    #[error("vertex {vertex} has incidence profile {profile:?}, expected two 4-thick edges and one simple edge")]
    NotExpandable { vertex: VertexId, profile: Vec<u32> },
    #[error("expansion targets do not match the edges at {0}")]
    ExpansionTargets(VertexId),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "lowercase")]
pub enum FamilySpec {
    Ccg13 { k: usize },
    Ccgi13 { k: usize },
    Gcd { c: usize, d: usize },
    Gcdi { c: usize, d: usize, i: usize },
}

impl FamilySpec {
    pub fn generate(&self) -> Result<WeightedMultigraph, FamilyError> {
        match *self {
            FamilySpec::Ccg13 { k } => generate_ccg13k(k),
            FamilySpec::Ccgi13 { k } => generate_ccgi13k(k),
            FamilySpec::Gcd { c, d } => generate_g_c_d(c, d),
            FamilySpec::Gcdi { c, d, i } => generate_g_c_d_i(c, d, i),
        }
    }
}

/// Label of the wedge vertex `w_j^i` in ccg13k, resolving identifications.
pub fn wedge_label(j: usize, i: usize, k: usize) -> String {
    match j {
        2 if i == 1 => "u5".into(),
        2 => format!("w3^{}", i - 1),
        3 if i == k => "v5".into(),
        _ => format!("w{j}^{i}"),
    }
}

pub fn generate_ccg13k(k: usize) -> Result<WeightedMultigraph, FamilyError> {
    if k < 2 {
        return Err(FamilyError::KTooSmall(k));
    }
    let mut g = WeightedMultigraph::new();
    g.add_vertex(Some("x"));
    for side in ["u", "v"] {
        for i in 1..=5 {
            g.add_vertex(Some(&format!("{side}{i}")));
        }
    }
    for i in 1..=k {
        g.add_vertex(Some(&format!("w1^{i}")));
        g.add_vertex(Some(&format!("w4^{i}")));
        if i < k {
            g.add_vertex(Some(&format!("w3^{i}")));
        }
    }
    let mut edge = |a: &str, b: &str, t: u32| -> Result<(), FamilyError> {
        let (u, v) = (g.vertex_by_label(a)?, g.vertex_by_label(b)?);
        g.add_edge(u, v, t)?;
        Ok(())
    };
    for side in ["u", "v"] {
        let ring = ["x".to_string()]
            .into_iter()
            .chain((1..=5).map(|i| format!("{side}{i}")))
            .collect::<Vec<_>>();
        for (idx, t) in [7, 5, 4, 4, 4, 1].into_iter().enumerate() {
            edge(&ring[idx], &ring[(idx + 1) % 6], t)?;
        }
    }
    edge("u2", "v3", 1)?;
    edge("u3", "v2", 1)?;
    edge("u1", "v4", 2)?;
    edge("u4", "v1", 2)?;
    for i in 1..=k {
        let w = |j| wedge_label(j, i, k);
        edge("x", &w(1), 1)?;
        edge("x", &w(4), 1)?;
        edge(&w(1), &w(4), 1)?;
        edge(&w(2), &w(3), 1)?;
        edge(&w(1), &w(2), 2)?;
        edge(&w(3), &w(4), 2)?;
    }
    Ok(g)
}

/// Replaces `s` (two 4-thick edges to `t1`, `t2` and a simple edge to `t3`)
/// by `s^1`, `s^2`, `s^3` with edges `s^1 t1` (4), `s^2 t2` (4), `s^1 s^2`
/// (3) and simple edges `s^1 s^3`, `s^2 s^3`, `s^3 t3`. New vertices take
/// fresh ids and labels derived from the label of `s`.
pub fn expansion_4to3(
    g: &WeightedMultigraph,
    s: VertexId,
    t1: VertexId,
    t2: VertexId,
    t3: VertexId,
) -> Result<WeightedMultigraph, FamilyError> {
    let profile = g.incidence_profile(s)?;
    if profile.thicknesses != [4, 4, 1] {
        return Err(FamilyError::NotExpandable { vertex: s, profile: profile.thicknesses });
    }
    let thick = |t| g.edge_between(s, t).and_then(|e| g.edge(e).ok()).map(|e| e.thickness);
    if thick(t1) != Some(4) || thick(t2) != Some(4) || thick(t3) != Some(1) || t1 == t2 {
        return Err(FamilyError::ExpansionTargets(s));
    }
    let base = g.display_name(s);
    let mut h = g.remove_vertex(s)?;
    let s1 = h.add_vertex(Some(&format!("{base}^1")));
    let s2 = h.add_vertex(Some(&format!("{base}^2")));
    let s3 = h.add_vertex(Some(&format!("{base}^3")));
    h.add_edge(s1, t1, 4)?;
    h.add_edge(s2, t2, 4)?;
    h.add_edge(s1, s2, 3)?;
    h.add_edge(s1, s3, 1)?;
    h.add_edge(s2, s3, 1)?;
    h.add_edge(s3, t3, 1)?;
    Ok(h)
}

/// Expansion of the vertex labelled `s` with targets given by label.
pub fn expand_by_labels(
    g: &WeightedMultigraph,
    s: &str,
    t1: &str,
    t2: &str,
    t3: &str,
) -> Result<WeightedMultigraph, FamilyError> {
    let l = |name| g.vertex_by_label(name);
    expansion_4to3(g, l(s)?, l(t1)?, l(t2)?, l(t3)?)
}

/// ccg13k with `v3` and then `u3` expanded; the degree-3 vertices are
/// `v3^3` and `u3^3`.
pub fn generate_ccgi13k(k: usize) -> Result<WeightedMultigraph, FamilyError> {
    let g = generate_ccg13k(k)?;
    let g = expand_by_labels(&g, "v3", "v2", "v4", "u2")?;
    expand_by_labels(&g, "u3", "u2", "u4", "v2")
}

/// Wedge count realising maximum degree at least `d`.
pub fn k_for_degree(d: usize) -> usize {
    (d / 2).max(2)
}

fn prefixed(g: &WeightedMultigraph, prefix: &str) -> WeightedMultigraph {
    g.map_labels(|l| l.map(|l| format!("{prefix}{l}")))
}

/// Builds a zip chain starting from `first` (free zip vertex `free`).
/// Each further block is zipped at its `entry` vertex; its `exit` vertex
/// becomes the next free vertex.
fn zip_chain(
    first: WeightedMultigraph,
    free: &str,
    blocks: impl IntoIterator<Item = (WeightedMultigraph, String, String)>,
) -> Result<WeightedMultigraph, FamilyError> {
    let mut g = first;
    let mut free = free.to_string();
    for (block, entry, exit) in blocks {
        let v1 = g.vertex_by_label(&free)?;
        let v2 = block.vertex_by_label(&entry)?;
        g = WeightedMultigraph::zip_product_sorted(&g, v1, &block, v2)?;
        free = exit;
    }
    Ok(g)
}

fn k33_block(index: usize) -> (WeightedMultigraph, String, String) {
    let p = format!("k{index}.");
    (prefixed(&named::k33(), &p), format!("{p}a0"), format!("{p}a1"))
}

/// ccgi13 with `k = k_for_degree(d)`, followed by a chain of `c - 13`
/// copies of K3,3. The first zip uses `v3^3`; later zips use a vertex of
/// the previous K3,3 copy.
pub fn generate_g_c_d(c: usize, d: usize) -> Result<WeightedMultigraph, FamilyError> {
    if c < 13 {
        return Err(FamilyError::CTooSmall(c));
    }
    let base = generate_ccgi13k(k_for_degree(d))?;
    zip_chain(base, "v3^3", (1..=c - 13).map(k33_block))
}

/// `i` copies of ccgi13 zipped in a chain (copy `j` at `v3^3` to copy
/// `j+1` at `u3^3`), then `c - 13 i` copies of K3,3. Copies after the first
/// carry the label prefix `g<j>.`, K3,3 copies `k<j>.`.
pub fn generate_g_c_d_i(c: usize, d: usize, i: usize) -> Result<WeightedMultigraph, FamilyError> {
    if i == 0 || 13 * i > c {
        return Err(FamilyError::BadCopyCount { c, i });
    }
    let base = generate_ccgi13k(k_for_degree(d))?;
    let copies = (2..=i).map(|j| {
        let p = format!("g{j}.");
        (prefixed(&base, &p), format!("{p}u3^3"), format!("{p}v3^3"))
    });
    let g = zip_chain(base.clone(), "v3^3", copies)?;
    let free = if i == 1 { "v3^3".to_string() } else { format!("g{i}.v3^3") };
    zip_chain(g, &free, (1..=c - 13 * i).map(k33_block))
}

/// Image of a label under the automorphism exchanging `u_i` and `v_i`
/// (wedge `i` goes to wedge `k + 1 - i`, `w1` and `w4` swap, and so do
/// `w2` and `w3`). Works for expanded labels like `v3^2`.
pub fn mirror_label(label: &str, k: usize) -> Option<String> {
    if label == "x" {
        return Some(label.into());
    }
    if let Some(rest) = label.strip_prefix('u') {
        return Some(format!("v{rest}"));
    }
    if let Some(rest) = label.strip_prefix('v') {
        return Some(format!("u{rest}"));
    }
    let rest = label.strip_prefix('w')?;
    let (j, i) = rest.split_once('^')?;
    let (j, i): (usize, usize) = (j.parse().ok()?, i.parse().ok()?);
    if i == 0 || i > k {
        return None;
    }
    match j {
        1 => Some(format!("w4^{}", k + 1 - i)),
        4 => Some(format!("w1^{}", k + 1 - i)),
        // Chain vertex w3^i = w2^(i+1) maps to w3^(k-i).
        3 if i < k => Some(format!("w3^{}", k - i)),
        _ => None,
    }
}

/// Number of wedges of a ccg13-derived graph, read off its labels.
pub fn wedge_count(g: &WeightedMultigraph) -> usize {
    g.vertices()
        .iter()
        .filter(|v| v.label.as_deref().is_some_and(|l| l.starts_with("w1^")))
        .count()
}

/// The mirror automorphism as a vertex map.
pub fn mirror_map(g: &WeightedMultigraph) -> Result<BTreeMap<VertexId, VertexId>, GraphError> {
    let k = wedge_count(g);
    let mut map = BTreeMap::new();
    for v in g.vertices() {
        let label = v.label.as_deref().ok_or_else(|| GraphError::UnknownLabel(format!("#{}", v.id.0)))?;
        let image = mirror_label(label, k).ok_or_else(|| GraphError::UnknownLabel(label.into()))?;
        map.insert(v.id, g.vertex_by_label(&image)?);
    }
    Ok(map)
}
