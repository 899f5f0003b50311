use super::plane::PlaneView;
use super::AnalyzerError;
use crate::drawing::NodeRef;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NestResult {
    pub depth: usize,
    /// The cycles of a deepest nest, innermost first, each starting at `w`.
    pub cycles: Vec<Vec<NodeRef>>,
    pub cycles_examined: usize,
}

/// Path extensions allowed per unit of cycle budget.
const STEPS_PER_CYCLE: usize = 64;

/// Simple cycles through `w` as node lists starting at `w`, one per
/// direction pair.
fn cycles_through(view: &PlaneView, w: usize, budget: usize) -> Result<Vec<Vec<usize>>, AnalyzerError> {
    let mut out = Vec::new();
    let mut steps = budget.saturating_mul(STEPS_PER_CYCLE);
    let mut path = vec![w];
    let mut on_path = vec![false; view.plane.node_count];
    on_path[w] = true;
    fn extend(
        view: &PlaneView,
        w: usize,
        path: &mut Vec<usize>,
        on_path: &mut Vec<bool>,
        out: &mut Vec<Vec<usize>>,
        steps: &mut usize,
        budget: usize,
    ) -> Result<(), AnalyzerError> {
        let end = *path.last().unwrap();
        let next: BTreeSet<usize> = view.neighbours(end).collect();
        for x in next {
            if x == w && path.len() >= 3 && path[1] < end {
                if out.len() == budget {
                    return Err(AnalyzerError::CycleBudget(budget));
                }
                out.push(path.clone());
            } else if !on_path[x] {
                if *steps == 0 {
                    return Err(AnalyzerError::CycleBudget(budget));
                }
                *steps -= 1;
                on_path[x] = true;
                path.push(x);
                extend(view, w, path, on_path, out, steps, budget)?;
                path.pop();
                on_path[x] = false;
            }
        }
        Ok(())
    }
    extend(view, w, &mut path, &mut on_path, &mut out, &mut steps, budget)?;
    Ok(out)
}

/// Depth of the deepest 1-nest at `w`: cycles through `w`, each drawn in
/// the closed disk of the next and meeting it only in `w`. At most
/// `cycle_budget` cycles through `w` are examined, and the search for them
/// extends at most `64 * cycle_budget` paths.
pub fn one_nest_depth(view: &PlaneView, w: NodeRef, cycle_budget: usize) -> Result<NestResult, AnalyzerError> {
    let wi = view.node(w)?;
    let cycles = cycles_through(view, wi, cycle_budget)?;
    let examined = cycles.len();
    let mut items: Vec<(Vec<usize>, BTreeSet<usize>, BTreeSet<usize>)> = Vec::new();
    for c in cycles {
        let (nodes, _) = view.closed_disk(&c)?;
        let vs: BTreeSet<usize> = c.iter().copied().collect();
        items.push((c, vs, nodes));
    }
    items.sort_by_key(|(_, _, disk)| disk.len());
    let within = |inner: usize, outer: usize| {
        let (_, iv, _) = &items[inner];
        let (_, ov, disk) = &items[outer];
        iv.is_subset(disk) && iv.intersection(ov).count() == 1
    };
    let mut depth = vec![1usize; items.len()];
    let mut prev = vec![None; items.len()];
    for i in 0..items.len() {
        for j in 0..i {
            if items[j].2.len() < items[i].2.len() && within(j, i) && depth[j] + 1 > depth[i] {
                depth[i] = depth[j] + 1;
                prev[i] = Some(j);
            }
        }
    }
    let Some(top) = (0..items.len()).max_by_key(|&i| (depth[i], std::cmp::Reverse(i))) else {
        return Ok(NestResult { depth: 0, cycles: vec![], cycles_examined: examined });
    };
    let mut chain = vec![top];
    while let Some(p) = prev[*chain.last().unwrap()] {
        chain.push(p);
    }
    chain.reverse();
    debug_assert!(chain.iter().enumerate().all(|(a, &i)| chain[a + 1..].iter().all(|&j| within(i, j))));
    let cycles = chain.iter().map(|&i| items[i].0.iter().map(|&v| view.nodes[v]).collect()).collect();
    Ok(NestResult { depth: depth[top], cycles, cycles_examined: examined })
}
