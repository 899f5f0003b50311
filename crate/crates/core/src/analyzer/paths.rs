use super::AnalyzerError;
use crate::graph::{VertexId, WeightedMultigraph};
use rustworkx_core::petgraph::algo::ford_fulkerson;
use rustworkx_core::petgraph::graph::DiGraph;

/// Maximum number of internally vertex-disjoint `u`-`v` paths. Every copy
/// of a thick edge is its own channel, while vertices other than `u` and
/// `v` can be used by one path only.
pub fn count_internally_disjoint_paths(g: &WeightedMultigraph, u: VertexId, v: VertexId) -> Result<u64, AnalyzerError> {
    if u == v {
        return Err(AnalyzerError::Precondition("endpoints must differ".into()));
    }
    let (iu, iv) = (g.vertex_index(u)?, g.vertex_index(v)?);
    let n = g.vertex_count();
    let unlimited = g.multiplicity() + 1;
    let mut net = DiGraph::<(), u64>::with_capacity(2 * n, n + 2 * g.edge_count());
    let nodes: Vec<_> = (0..2 * n).map(|_| net.add_node(())).collect();
    // Vertex i enters at 2i and leaves from 2i + 1.
    for i in 0..n {
        let cap = if i == iu || i == iv { unlimited } else { 1 };
        net.add_edge(nodes[2 * i], nodes[2 * i + 1], cap);
    }
    for (e, (a, b)) in g.edges().iter().zip(g.index_edges()) {
        let t = e.thickness as u64;
        net.add_edge(nodes[2 * a + 1], nodes[2 * b], t);
        net.add_edge(nodes[2 * b + 1], nodes[2 * a], t);
    }
    let (flow, _) = ford_fulkerson(&net, nodes[2 * iu + 1], nodes[2 * iv]);
    Ok(flow)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    #[test]
    fn complete_graphs() {
        let k4 = named::complete(4);
        assert_eq!(count_internally_disjoint_paths(&k4, VertexId(0), VertexId(3)), Ok(3));
        let k33 = named::k33();
        assert_eq!(count_internally_disjoint_paths(&k33, VertexId(0), VertexId(3)), Ok(3));
        assert_eq!(count_internally_disjoint_paths(&k33, VertexId(0), VertexId(1)), Ok(3));
    }

    #[test]
    fn thick_direct_edge_counts_each_copy() {
        let g = named::cycle(4).with_thickness(crate::graph::EdgeId(0), 5).unwrap();
        assert_eq!(count_internally_disjoint_paths(&g, VertexId(0), VertexId(1)), Ok(6));
    }
}
