use crosscrit::graph::named;
use crosscrit::solver::{
    cr_decision, cr_exact, cr_oracle_bruteforce, criticality_check, Decision, EdgeOutcome,
    SolveBudget, SolveError,
};
use crosscrit::{VertexId, WeightedMultigraph};
use proptest::prelude::*;

fn cr(g: &WeightedMultigraph) -> u64 {
    let res = cr_exact(g, &SolveBudget::unlimited()).unwrap();
    let count = res.witness.crossing_count().unwrap();
    assert!(res.witness.is_valid());
    assert_eq!(count.total, res.cr);
    res.cr
}

fn decide(g: &WeightedMultigraph, k: u64) -> Decision {
    cr_decision(g, k, &SolveBudget::unlimited()).unwrap().0
}

#[test]
fn anchor_values() {
    assert_eq!(cr(&named::complete(5)), 1);
    assert_eq!(cr(&named::k33()), 1);
    assert_eq!(cr(&named::complete(6)), 3);
    assert_eq!(cr(&named::petersen()), 2);
    assert_eq!(cr(&named::c3_box_c3()), 3);
    assert_eq!(cr(&named::path(6)), 0);
    assert_eq!(cr(&named::prism()), 0);
}

#[test]
fn oracle_agrees_on_anchors() {
    assert_eq!(cr_oracle_bruteforce(&named::complete(6)), Ok(3));
    assert_eq!(cr_oracle_bruteforce(&named::petersen()), Ok(2));
}

#[test]
fn decisions() {
    let k5 = named::complete(5);
    assert_eq!(decide(&k5, 0), Decision::No);
    assert!(matches!(decide(&k5, 1), Decision::Yes(_)));
    let grid = named::c3_box_c3();
    assert_eq!(decide(&grid, 2), Decision::No);
    match decide(&grid, 3) {
        Decision::Yes(d) => assert!(d.crossing_count().unwrap().total <= 3),
        other => panic!("expected a drawing, got {other:?}"),
    }
}

#[test]
fn parallel_search_agrees() {
    let budget = SolveBudget::unlimited().with_threads(4);
    for g in [named::complete(6), named::petersen(), named::k33()] {
        let res = cr_exact(&g, &budget).unwrap();
        assert_eq!(res.cr, cr(&g));
        assert!(res.witness.is_valid());
    }
}

#[test]
fn seed_caps_the_search() {
    let g = named::complete(5);
    let seed = cr_exact(&g, &SolveBudget::unlimited()).unwrap().witness;
    let budget = SolveBudget { seed: Some(seed), ..SolveBudget::unlimited() };
    assert_eq!(cr_exact(&g, &budget).unwrap().cr, 1);
    let wrong = SolveBudget { seed: Some(cr_exact(&named::k33(), &SolveBudget::unlimited()).unwrap().witness), ..SolveBudget::unlimited() };
    assert_eq!(cr_exact(&g, &wrong), Err(SolveError::BadSeed));
}

#[test]
fn thick_edges_weigh_crossings() {
    // Every edge of K5 doubled: each crossing costs 4.
    let mut g = named::complete(5);
    for e in g.edges().to_vec() {
        g = g.with_thickness(e.id, 2).unwrap();
    }
    assert_eq!(cr(&g), 4);
}

#[test]
fn k5_is_one_critical() {
    let report = criticality_check(&named::complete(5), 1, &SolveBudget::unlimited()).unwrap();
    assert!(report.critical);
    assert_eq!(report.lower_bound_holds, Some(true));
    assert_eq!(report.edges.len(), 10);
}

#[test]
fn grid_is_two_critical() {
    let report = criticality_check(&named::c3_box_c3(), 2, &SolveBudget::unlimited()).unwrap();
    assert!(report.critical);
    for r in &report.edges {
        match &r.outcome {
            EdgeOutcome::Drops { witness } => assert!(witness.crossing_count().unwrap().total <= 1),
            other => panic!("edge {} did not drop: {other:?}", r.name),
        }
    }
}

#[test]
fn pendant_edge_is_not_critical() {
    let mut g = named::complete(5);
    let leaf = g.add_vertex(None);
    let pendant = g.add_edge(VertexId(0), leaf, 1).unwrap();
    let report = criticality_check(&g, 1, &SolveBudget::unlimited()).unwrap();
    assert!(!report.critical);
    assert_eq!(report.lower_bound_holds, Some(true));
    let r = report.edges.iter().find(|r| r.edge == pendant).unwrap();
    assert_eq!(r.outcome, EdgeOutcome::Keeps);
}

#[test]
fn zip_of_two_k33_has_two_crossings() {
    let g = WeightedMultigraph::zip_product_sorted(&named::k33(), VertexId(0), &named::k33(), VertexId(0)).unwrap();
    assert_eq!(cr(&g), 2);
}

fn random_graph(max_n: usize, max_m: usize, max_t: u32) -> impl Strategy<Value = WeightedMultigraph> {
    // Dense graphs half of the time, so that many are non-planar.
    prop_oneof![2..=max_n, (max_n - 2).max(2)..=max_n]
        .prop_flat_map(move |n| {
            let tree = (1..n).map(|i| 0..i).collect::<Vec<_>>();
            let extra = proptest::collection::vec((0..n, 0..n), 0..=3 * max_m);
            let thick = proptest::collection::vec(1..=max_t, max_m);
            (Just(n), tree, extra, thick)
        })
        .prop_map(move |(n, tree, extra, thick)| {
            let mut pairs: Vec<(usize, usize)> = tree.iter().enumerate().map(|(i, &p)| (p, i + 1)).collect();
            for (a, b) in extra {
                let key = (a.min(b), a.max(b));
                if a != b && pairs.len() < max_m && !pairs.iter().any(|&(x, y)| (x.min(y), x.max(y)) == key) {
                    pairs.push(key);
                }
            }
            let mut g = WeightedMultigraph::from_edge_list(n, &pairs).unwrap();
            for (e, t) in g.edges().to_vec().into_iter().zip(thick) {
                g = g.with_thickness(e.id, t).unwrap();
            }
            g
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn solver_matches_oracle(g in random_graph(7, 12, 3)) {
        let exact = cr(&g);
        prop_assert_eq!(cr_oracle_bruteforce(&g).unwrap(), exact);
    }

    #[test]
    fn deleting_a_copy_never_raises_cr(g in random_graph(7, 12, 3), pick in any::<prop::sample::Index>()) {
        let e = g.edges()[pick.index(g.edge_count())].id;
        let h = g.delete_one_copy(e).unwrap();
        if h.is_connected() {
            prop_assert!(cr(&h) <= cr(&g));
        }
    }
}

fn zip_candidates() -> Vec<WeightedMultigraph> {
    vec![named::k33(), named::complete(4), named::prism()]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn zip_adds_crossing_numbers(a in 0usize..3, b in 0usize..3, va in 0u32..4, vb in 0u32..4) {
        let (g1, g2) = (&zip_candidates()[a], &zip_candidates()[b]);
        let z = WeightedMultigraph::zip_product_sorted(g1, VertexId(va), g2, VertexId(vb)).unwrap();
        prop_assert_eq!(cr(&z), cr(g1) + cr(g2));
    }
}
