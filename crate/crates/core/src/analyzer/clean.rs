use super::plane::PlaneView;
use super::{AnalyzerError, Comb};
use crate::drawing::NodeRef;
use std::collections::BTreeSet;

/// Tooth subsets tried before giving up.
const SUBSET_LIMIT: usize = 1 << 20;

/// Checks the comb-on-path preconditions and returns the face of the whole
/// graph whose boundary holds `q`, with a dart of `q` on it.
fn host_face(view: &PlaneView, q: &[NodeRef], comb: &Comb<NodeRef>) -> Result<(usize, usize), AnalyzerError> {
    let bad = |msg: &str| AnalyzerError::Precondition(msg.into());
    if q.len() < 2 {
        return Err(bad("Q must have at least one edge"));
    }
    let qi = view.path(q)?;
    if qi.iter().collect::<BTreeSet<_>>().len() != qi.len() {
        return Err(bad("Q repeats a node"));
    }
    view.path(&comb.spine)?;
    for p in &comb.tooth_paths {
        view.path(p)?;
    }
    if !comb.is_well_formed() {
        return Err(bad("not a comb"));
    }
    let q_set: BTreeSet<NodeRef> = q.iter().copied().collect();
    let teeth: BTreeSet<NodeRef> = comb.teeth.iter().copied().collect();
    if !teeth.is_subset(&q_set) || comb.nodes().intersection(&q_set).copied().collect::<BTreeSet<_>>() != teeth {
        return Err(bad("teeth must lie on Q and the comb must otherwise avoid Q"));
    }
    let faces = view.faces();
    let darts: Vec<Vec<usize>> = qi
        .windows(2)
        .map(|w| {
            let e = view.edge_between(w[0], w[1]).unwrap();
            vec![2 * e, 2 * e + 1]
        })
        .collect();
    let candidates: Vec<usize> = (0..faces.count())
        .filter(|&f| darts.iter().all(|ds| ds.iter().any(|&d| faces.face_of[d] == f)))
        .collect();
    let face = if candidates.contains(&view.outer_face()) {
        view.outer_face()
    } else {
        *candidates.first().ok_or_else(|| bad("Q is not on the boundary of a single face"))?
    };
    let dart = *darts[0].iter().find(|&&d| faces.face_of[d] == face).unwrap();
    Ok((face, dart))
}

fn clean_with(view: &PlaneView, q: &[NodeRef], comb: &Comb<NodeRef>, dart: usize) -> Result<bool, AnalyzerError> {
    let qi = view.path(q)?;
    let spine = view.path(&comb.spine)?;
    let mut keep = view.walk_edges(&qi);
    keep.extend(view.walk_edges(&spine));
    for p in &comb.tooth_paths {
        keep.extend(view.walk_edges(&view.path(p)?));
    }
    let (sub, old) = view.plane.edge_subgraph(&keep);
    let new_of = |e: usize| old.iter().position(|&o| o == e);
    let start = 2 * new_of(dart / 2).unwrap() + dart % 2;
    let faces = sub.faces();
    let outer = faces.face_of[start];
    let on_outer = |e: usize| {
        let n = new_of(e).unwrap();
        faces.face_of[2 * n] == outer || faces.face_of[2 * n + 1] == outer
    };
    let boundary: BTreeSet<usize> = faces.darts[outer].iter().map(|&d| sub.tail(d)).collect();
    let path_on_outer = |p: &[usize]| {
        if p.len() == 1 {
            boundary.contains(&p[0])
        } else {
            view.walk_edges(p).into_iter().all(on_outer)
        }
    };
    Ok(path_on_outer(&qi) && path_on_outer(&spine))
}

/// Whether `q` and the spine of `comb` both lie on the outer face of the
/// subdrawing formed by the comb and `q`. The outer face is the one
/// containing the face of the whole drawing that `q` bounds.
pub fn is_q_clean(view: &PlaneView, q: &[NodeRef], comb: &Comb<NodeRef>) -> Result<bool, AnalyzerError> {
    let (_, dart) = host_face(view, q, comb)?;
    clean_with(view, q, comb, dart)
}

/// A Q-clean subcomb with at least `k` teeth: the comb itself when it is
/// clean, otherwise the first clean `k`-tooth subcomb in lexicographic
/// order of tooth indices. Combs with at least `3k - 1` teeth always have
/// one.
pub fn q_clean_subcomb(
    view: &PlaneView,
    q: &[NodeRef],
    comb: &Comb<NodeRef>,
    k: usize,
) -> Result<Option<Comb<NodeRef>>, AnalyzerError> {
    let (_, dart) = host_face(view, q, comb)?;
    let m = comb.teeth_count();
    if k == 0 || m < k {
        return Ok(None);
    }
    if clean_with(view, q, comb, dart)? {
        return Ok(Some(comb.clone()));
    }
    let mut pick: Vec<usize> = (0..k).collect();
    for _ in 0..SUBSET_LIMIT {
        let sub = comb.subcomb(&pick);
        if clean_with(view, q, &sub, dart)? {
            return Ok(Some(sub));
        }
        // Next k-subset of 0..m.
        let Some(i) = (0..k).rev().find(|&i| pick[i] < m - k + i) else {
            return Ok(None);
        };
        pick[i] += 1;
        for j in i + 1..k {
            pick[j] = pick[j - 1] + 1;
        }
    }
    Err(AnalyzerError::Precondition(format!("more than {SUBSET_LIMIT} tooth subsets")))
}
