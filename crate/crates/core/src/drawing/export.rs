//! SVG and DOT renderings of a drawing's planarization.

use super::{Drawing, NodeRef};
use std::fmt::Write;

const SIZE: f64 = 600.0;
const MARGIN: f64 = 30.0;

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

/// Schematic straight-line rendering: the planarization is laid out by
/// barycentric placement inside its outer face. Each crossing of a
/// `t1`-thick and a `t2`-thick edge is marked by `t1 * t2` circles of class
/// `crossing-marker`, so the marker count equals the crossing total.
pub fn export_svg(d: &Drawing) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    );
    let Ok(p) = d.planarization() else {
        out.push_str("</svg>\n");
        return out;
    };
    let pos = p.plane.tutte_layout();
    let scale = (SIZE - 2.0 * MARGIN) / 2.0;
    let at = |i: usize| (SIZE / 2.0 + pos[i].0 * scale, SIZE / 2.0 - pos[i].1 * scale);
    for (idx, &(a, b)) in p.plane.edges.iter().enumerate() {
        let (e, _) = p.segments[idx];
        let t = d.graph.edge(e).map(|e| e.thickness).unwrap_or(1);
        let ((x1, y1), (x2, y2)) = (at(a), at(b));
        let _ = writeln!(
            out,
            r#"  <line class="segment" data-edge="{}" x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}" stroke="black" stroke-width="{}"/>"#,
            e.0,
            t
        );
    }
    for (i, node) in p.nodes.iter().enumerate() {
        let (x, y) = at(i);
        match node {
            NodeRef::Vertex(v) => {
                let _ = writeln!(
                    out,
                    r#"  <circle class="vertex" cx="{x:.2}" cy="{y:.2}" r="6" fill="white" stroke="black"/>"#
                );
                let _ = writeln!(
                    out,
                    r#"  <text x="{:.2}" y="{:.2}" font-size="11">{}</text>"#,
                    x + 7.0,
                    y - 7.0,
                    escape(&d.graph.display_name(*v))
                );
            }
            NodeRef::Crossing(c) => {
                let cr = d.crossings[*c];
                let ta = d.graph.edge(cr.a).map(|e| e.thickness).unwrap_or(1);
                let tb = d.graph.edge(cr.b).map(|e| e.thickness).unwrap_or(1);
                for m in 0..ta * tb {
                    let _ = writeln!(
                        out,
                        r#"  <circle class="crossing-marker" data-crossing="{c}" cx="{:.2}" cy="{y:.2}" r="3" fill="red"/>"#,
                        x + 2.0 * m as f64
                    );
                }
            }
        }
    }
    out.push_str("</svg>\n");
    out
}

/// DOT text of the planarization; crossings are point-shaped nodes.
pub fn export_dot(d: &Drawing) -> String {
    let mut out = String::from("graph drawing {\n");
    let Ok(p) = d.planarization() else {
        out.push_str("}\n");
        return out;
    };
    for node in &p.nodes {
        match node {
            NodeRef::Vertex(v) => {
                let _ = writeln!(out, "  {node} [label=\"{}\"];", escape(&d.graph.display_name(*v)));
            }
            NodeRef::Crossing(_) => {
                let _ = writeln!(out, "  {node} [shape=point];");
            }
        }
    }
    for (idx, &(a, b)) in p.plane.edges.iter().enumerate() {
        let (e, s) = p.segments[idx];
        let t = d.graph.edge(e).map(|e| e.thickness).unwrap_or(1);
        let _ = writeln!(
            out,
            "  {} -- {} [label=\"{}\", penwidth={t}, comment=\"edge {} segment {s}\"];",
            p.nodes[a], p.nodes[b], t, e.0
        );
    }
    out.push_str("}\n");
    out
}
