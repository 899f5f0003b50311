//! Figure drawings of ccg13k and the drop drawings built from them.
//!
//! A template lists which edge pairs cross and, for edges crossed more
//! than once, the order of the crossings. The rotation system is then
//! recovered by [`realize`], which leaves all wedges outside the listed
//! pairs crossing-free.

use super::{realize, CrossingConfig, Drawing, RealizeError};
use crate::families::{generate_ccg13k, generate_ccgi13k, mirror_map, wedge_label, FamilyError};
use crate::graph::{EdgeId, GraphError, WeightedMultigraph};
use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Figure {
    /// The 13-crossing drawing with all wedges in a crossing-free strip.
    Fig2,
    /// `u4v1` rerouted over the top, crossing only `v4v5`.
    Fig2DottedA,
    /// `u4v1` rerouted through the last wedge, crossing `xv5`.
    Fig2DottedB,
    /// The right-hand side flipped: `xu1` crosses two edges of the last wedge.
    Fig4a,
    /// As [`Figure::Fig4a`], with the crossings moved to `u1u2` and `u1v4`.
    Fig4aShifted,
    /// `v2v3` crossing `u3u4` once.
    Fig4b,
    /// Wedge `i` split open, its three simple edges crossing the blue edges.
    Fig5a,
    /// Wedge `i` split open with `w1^i` moved, `w1^iw2^i` and `w2^iw3^i`
    /// crossing every blue edge.
    Fig5b,
    /// [`Figure::Fig2`] on ccgi13k.
    Expanded,
}

impl Figure {
    pub const ALL: [Figure; 9] = [
        Figure::Fig2,
        Figure::Fig2DottedA,
        Figure::Fig2DottedB,
        Figure::Fig4a,
        Figure::Fig4aShifted,
        Figure::Fig4b,
        Figure::Fig5a,
        Figure::Fig5b,
        Figure::Expanded,
    ];

    pub fn needs_wedge(self) -> bool {
        matches!(self, Figure::Fig5a | Figure::Fig5b)
    }

    /// Crossing total of the drawing as drawn in the figure.
    pub fn expected_total(self) -> u64 {
        match self {
            Figure::Fig4a | Figure::Fig4aShifted => 14,
            Figure::Fig4b => 16,
            Figure::Fig5b => 18,
            _ => 13,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Figure::Fig2 => "FIG2",
            Figure::Fig2DottedA => "FIG2_DOTTED_A",
            Figure::Fig2DottedB => "FIG2_DOTTED_B",
            Figure::Fig4a => "FIG4A",
            Figure::Fig4aShifted => "FIG4A_SHIFTED",
            Figure::Fig4b => "FIG4B",
            Figure::Fig5a => "FIG5A",
            Figure::Fig5b => "FIG5B",
            Figure::Expanded => "EXPANDED",
        }
    }
}

impl fmt::Display for Figure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Figure {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let up = s.to_ascii_uppercase().replace('-', "_");
        Figure::ALL
            .into_iter()
            .find(|f| f.name() == up)
            .ok_or_else(|| format!("unknown figure {s:?}"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DrawingTemplate {
    pub figure: Figure,
    pub k: usize,
    /// Wedge index for the wedge figures.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub i: Option<usize>,
    /// Apply the automorphism exchanging `u` and `v`.
    #[serde(default)]
    pub mirror: bool,
}

impl DrawingTemplate {
    pub fn new(figure: Figure, k: usize) -> Self {
        DrawingTemplate { figure, k, i: None, mirror: false }
    }

    pub fn wedge(figure: Figure, k: usize, i: usize) -> Self {
        DrawingTemplate { figure, k, i: Some(i), mirror: false }
    }

    pub fn mirrored(self) -> Self {
        DrawingTemplate { mirror: !self.mirror, ..self }
    }

    pub fn build(&self) -> Result<Drawing, TemplateError> {
        template_drawing(self)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TemplateError {
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("figure {0} needs a wedge index 1..=k")]
    WedgeIndex(Figure),
    #[error("copy {copy} of edge {edge} does not exist (thickness {thickness})")]
    Copy { edge: EdgeId, copy: u32, thickness: u32 },
    #[error("template could not be realized: {0}")]
    Realize(#[from] RealizeError),
    #[error("mirroring failed: {0}")]
    Mirror(#[from] super::RelabelError),
}

/// An edge named by its end labels; crossing orders along it run from the
/// first to the second.
type Named = (String, String);

fn named(a: impl Into<String>, b: impl Into<String>) -> Named {
    (a.into(), b.into())
}

struct Layout {
    pairs: Vec<(Named, Named)>,
    orders: Vec<(Named, Vec<Named>)>,
}

fn blue() -> [Named; 4] {
    [named("u1", "v4"), named("u2", "v3"), named("u3", "v2"), named("u4", "v1")]
}

/// All pairs among `a` crossing all of `b`.
fn product(a: &[Named], b: &[Named]) -> Vec<(Named, Named)> {
    a.iter().flat_map(|x| b.iter().map(move |y| (x.clone(), y.clone()))).collect()
}

fn layout(t: &DrawingTemplate) -> Layout {
    let k = t.k;
    let w = |j: usize, i: usize| wedge_label(j, i, k);
    let [b14, b23, b32, b41] = blue();
    let fig2_pairs = vec![
        (b14.clone(), b41.clone()),
        (b14.clone(), b23.clone()),
        (b14.clone(), b32.clone()),
        (b41.clone(), b23.clone()),
        (b41.clone(), b32.clone()),
        (b23.clone(), b32.clone()),
    ];
    let fig2_orders = vec![
        (b14.clone(), vec![b23.clone(), b32.clone(), b41.clone()]),
        (b41.clone(), vec![b14.clone(), b23.clone(), b32.clone()]),
        (b23.clone(), vec![b14.clone(), b32.clone(), b41.clone()]),
        (b32.clone(), vec![b14.clone(), b23.clone(), b41.clone()]),
    ];
    match t.figure {
        Figure::Fig2 => Layout { pairs: fig2_pairs, orders: fig2_orders },
        Figure::Fig2DottedA | Figure::Fig2DottedB => {
            let mut pairs: Vec<(Named, Named)> =
                fig2_pairs.into_iter().filter(|(a, b)| *a != b41 && *b != b41).collect();
            let mut orders = vec![
                (b14.clone(), vec![b23.clone(), b32.clone()]),
                (b23.clone(), vec![b14.clone(), b32.clone()]),
                (b32.clone(), vec![b14.clone(), b23.clone()]),
            ];
            if t.figure == Figure::Fig2DottedA {
                pairs.push((b41.clone(), named("v4", "v5")));
            } else {
                let route = vec![
                    named(w(2, k), w(3, k)),
                    named(w(1, k), w(4, k)),
                    named("x", w(4, k)),
                    named("x", "v5"),
                ];
                pairs.extend(route.iter().map(|e| (b41.clone(), e.clone())));
                orders.push((b41.clone(), route));
            }
            Layout { pairs, orders }
        }
        Figure::Fig4a | Figure::Fig4aShifted => {
            let wedge = [named(w(1, k), w(4, k)), named(w(2, k), w(3, k))];
            let crossed = if t.figure == Figure::Fig4a {
                vec![named("x", "u1")]
            } else {
                vec![named("u1", "u2"), named("u1", "v4")]
            };
            let orders = crossed.iter().map(|e| (e.clone(), wedge.to_vec())).collect();
            Layout { pairs: product(&crossed, &wedge), orders }
        }
        Figure::Fig4b => Layout { pairs: vec![(named("v2", "v3"), named("u3", "u4"))], orders: vec![] },
        Figure::Fig5a => {
            let i = t.i.unwrap_or(1);
            let (x1, x23, x14) = (named("x", w(1, i)), named(w(2, i), w(3, i)), named(w(1, i), w(4, i)));
            let mut pairs = product(&[x14.clone(), x23.clone()], &blue());
            pairs.push((x1.clone(), x23.clone()));
            let mut orders: Vec<(Named, Vec<Named>)> =
                blue().iter().map(|b| (b.clone(), vec![x14.clone(), x23.clone()])).collect();
            orders.push((x14, vec![b41.clone(), b32.clone(), b23.clone(), b14.clone()]));
            orders.push((x23, vec![x1, b41, b32, b23, b14]));
            Layout { pairs, orders }
        }
        Figure::Fig5b => {
            let i = t.i.unwrap_or(1);
            let (x12, x23) = (named(w(1, i), w(2, i)), named(w(2, i), w(3, i)));
            let mut orders: Vec<(Named, Vec<Named>)> =
                blue().iter().map(|b| (b.clone(), vec![x12.clone(), x23.clone()])).collect();
            orders.push((x12.clone(), blue().to_vec()));
            orders.push((x23.clone(), vec![b41, b32, b23, b14]));
            Layout { pairs: product(&[x12, x23], &blue()), orders }
        }
        Figure::Expanded => {
            let rename = |e: &Named| match (e.0.as_str(), e.1.as_str()) {
                ("u2", "v3") => named("u2", "v3^3"),
                ("u3", "v2") => named("u3^3", "v2"),
                _ => e.clone(),
            };
            Layout {
                pairs: fig2_pairs.iter().map(|(a, b)| (rename(a), rename(b))).collect(),
                orders: [
                    (&b14, [&b23, &b32, &b41]),
                    (&b41, [&b14, &b32, &b23]),
                    (&b23, [&b14, &b41, &b32]),
                    (&b32, [&b14, &b41, &b23]),
                ]
                .iter()
                .map(|(e, list)| (rename(e), list.iter().map(|p| rename(p)).collect()))
                .collect(),
            }
        }
    }
}

fn edge_of(g: &WeightedMultigraph, e: &Named) -> Result<EdgeId, GraphError> {
    g.edge_by_labels(&e.0, &e.1)
}

/// Graph and crossing configuration of a template (before mirroring).
pub fn template_config(t: &DrawingTemplate) -> Result<(WeightedMultigraph, CrossingConfig), TemplateError> {
    let g = match t.figure {
        Figure::Expanded => generate_ccgi13k(t.k)?,
        _ => generate_ccg13k(t.k)?,
    };
    if t.figure.needs_wedge() && !t.i.is_some_and(|i| (1..=t.k).contains(&i)) {
        return Err(TemplateError::WedgeIndex(t.figure));
    }
    let lay = layout(t);
    let mut config = CrossingConfig::default();
    for (a, b) in &lay.pairs {
        config.add(edge_of(&g, a)?, edge_of(&g, b)?);
    }
    for (e, partners) in &lay.orders {
        let id = edge_of(&g, e)?;
        let mut order = Vec::new();
        for p in partners {
            let pid = edge_of(&g, p)?;
            let idx = config
                .pairs
                .iter()
                .position(|&(a, b)| (a, b) == (id, pid) || (a, b) == (pid, id))
                .expect("ordered partner is a crossing pair");
            order.push(idx);
        }
        if g.label(g.edge(id)?.u) != Some(e.0.as_str()) {
            order.reverse();
        }
        config.orders.insert(id, order);
    }
    Ok((g, config))
}

pub fn template_drawing(t: &DrawingTemplate) -> Result<Drawing, TemplateError> {
    let (g, config) = template_config(t)?;
    let d = realize(&g, &config)?;
    if t.mirror {
        let map = mirror_map(&g)?;
        return Ok(d.relabel(&g, &map)?);
    }
    Ok(d)
}

/// The 13-crossing drawing of ccg13k.
pub fn canonical_drawing(k: usize) -> Result<Drawing, TemplateError> {
    template_drawing(&DrawingTemplate::new(Figure::Fig2, k))
}

/// The 13-crossing drawing of ccgi13k.
pub fn expanded_drawing(k: usize) -> Result<Drawing, TemplateError> {
    template_drawing(&DrawingTemplate::new(Figure::Expanded, k))
}

/// Edge classes of ccg13k by the drawing that shows their criticality.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum EdgeClass {
    /// `u1v4`, `u2v3`, `u3v2`, `u4v1`.
    Blue,
    /// `xv5`, `v4v5` and their mirrors.
    Rerouted,
    /// `xu1`, `u1u2` and their mirrors.
    Flipped,
    /// `v2v3`, `u3u4` and their mirrors.
    Crossed,
    /// `xw1^i`, `w2^iw3^i`, `w1^iw4^i` and `xw4^i`.
    WedgeSplit,
    /// `w1^iw2^i` and `w3^iw4^i`.
    WedgeMoved,
}

/// The class of an edge of ccg13k and the template whose drawing drops
/// below 13 crossings when one copy of that edge is deleted.
pub fn edge_class(
    g: &WeightedMultigraph,
    k: usize,
    e: EdgeId,
) -> Result<(EdgeClass, DrawingTemplate), TemplateError> {
    let edge = g.edge(e)?;
    let (a, b) = (g.display_name(edge.u), g.display_name(edge.v));
    let mut ends = [a.as_str(), b.as_str()];
    ends.sort_unstable();
    let t = |f| DrawingTemplate::new(f, k);
    let found = match ends {
        ["u1", "v4"] | ["u2", "v3"] | ["u3", "v2"] | ["u4", "v1"] => Some((EdgeClass::Blue, t(Figure::Fig2))),
        ["v5", "x"] => Some((EdgeClass::Rerouted, t(Figure::Fig2DottedB))),
        ["v4", "v5"] => Some((EdgeClass::Rerouted, t(Figure::Fig2DottedA))),
        ["u5", "x"] => Some((EdgeClass::Rerouted, t(Figure::Fig2DottedB).mirrored())),
        ["u4", "u5"] => Some((EdgeClass::Rerouted, t(Figure::Fig2DottedA).mirrored())),
        ["u1", "x"] => Some((EdgeClass::Flipped, t(Figure::Fig4a))),
        ["u1", "u2"] => Some((EdgeClass::Flipped, t(Figure::Fig4aShifted))),
        ["v1", "x"] => Some((EdgeClass::Flipped, t(Figure::Fig4a).mirrored())),
        ["v1", "v2"] => Some((EdgeClass::Flipped, t(Figure::Fig4aShifted).mirrored())),
        ["v2", "v3"] | ["u3", "u4"] => Some((EdgeClass::Crossed, t(Figure::Fig4b))),
        ["u2", "u3"] | ["v3", "v4"] => Some((EdgeClass::Crossed, t(Figure::Fig4b).mirrored())),
        _ => None,
    };
    if let Some(found) = found {
        return Ok(found);
    }
    for i in 1..=k {
        let w = |j| wedge_label(j, i, k);
        let is = |p: &str, q: &str| (a == p && b == q) || (a == q && b == p);
        let split = DrawingTemplate::wedge(Figure::Fig5a, k, i);
        let moved = DrawingTemplate::wedge(Figure::Fig5b, k, i);
        let mirror_split = DrawingTemplate::wedge(Figure::Fig5a, k, k + 1 - i).mirrored();
        let mirror_moved = DrawingTemplate::wedge(Figure::Fig5b, k, k + 1 - i).mirrored();
        if is("x", &w(1)) || is(&w(2), &w(3)) || is(&w(1), &w(4)) {
            return Ok((EdgeClass::WedgeSplit, split));
        }
        if is("x", &w(4)) {
            return Ok((EdgeClass::WedgeSplit, mirror_split));
        }
        if is(&w(1), &w(2)) {
            return Ok((EdgeClass::WedgeMoved, moved));
        }
        if is(&w(3), &w(4)) {
            return Ok((EdgeClass::WedgeMoved, mirror_moved));
        }
    }
    Err(GraphError::UnknownEdge(e).into())
}

/// A drawing of ccg13k with one copy of `e` deleted, taken from the
/// template of the edge's class.
pub fn drop_drawing(k: usize, e: EdgeId, copy: u32) -> Result<Drawing, TemplateError> {
    let g = generate_ccg13k(k)?;
    let thickness = g.edge(e)?.thickness;
    if copy >= thickness {
        return Err(TemplateError::Copy { edge: e, copy, thickness });
    }
    let (_, template) = edge_class(&g, k, e)?;
    Ok(template_drawing(&template)?.delete_one_copy(e)?)
}
