//! One line per acceptance criterion; exits non-zero if any fails.

mod common;

use common::*;
use crosscrit::analyzer::{
    all_pairs_intersect, binary_minor_depth, bound_leaves_threshold, c_bridge_decomposition, find_comb,
    is_leaf_comb, is_q_clean, leaf_count, one_nest_depth, path_systems, q_clean_subcomb, verify_fan_grid, RootedTree,
};
use crosscrit::drawing::{
    canonical_drawing, drop_drawing, edge_class, expanded_drawing, wedge_contraction, Drawing, DrawingTemplate, EdgeClass,
    Figure,
};
use crosscrit::families::{generate_ccg13k, generate_ccgi13k, mirror_map, wedge_count};
use crosscrit::graph::named;
use crosscrit::solver::{cr_exact, cr_oracle_bruteforce, criticality_check, SolveBudget};
use crosscrit::{VertexId, WeightedMultigraph};
use num_bigint::BigUint;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use std::collections::{BTreeMap, BTreeSet};
use std::time::{Duration, Instant};

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn total(d: &Drawing) -> Result<u64, String> {
    d.crossing_count().map(|c| c.total).map_err(|e| e.to_string())
}

fn within(start: Instant, limit: Duration, what: &str) -> Result<(), String> {
    let t = start.elapsed();
    ensure!(t <= limit, "{what} took {t:?}, limit {limit:?}");
    Ok(())
}

fn canonical_drawings() -> Outcome {
    for k in 2..=10 {
        let start = Instant::now();
        let d = canonical_drawing(k).map_err(|e| e.to_string())?;
        d.verify().map_err(|e| format!("k={k}: {e}"))?;
        ensure!(d.graph == generate_ccg13k(k).unwrap(), "k={k}: wrong graph");
        let t = total(&d)?;
        ensure!(t == 13, "k={k}: total {t}");
        within(start, Duration::from_secs(1), &format!("k={k}"))?;
    }
    Ok("k = 2..10 valid with 13 crossings".into())
}

fn criticality_certificates() -> Outcome {
    let start = Instant::now();
    let mut copies = 0;
    for k in 2..=5 {
        let g = generate_ccg13k(k).unwrap();
        let mirror = mirror_map(&g).map_err(|e| e.to_string())?;
        let mut classes: BTreeMap<EdgeClass, usize> = BTreeMap::new();
        for e in g.edges() {
            let (class, _) = edge_class(&g, k, e.id).map_err(|err| format!("k={k} {}: {err}", g.edge_name(e.id)))?;
            let image = g.edge_between(mirror[&e.u], mirror[&e.v]).ok_or("mirror image missing")?;
            let (image_class, _) = edge_class(&g, k, image).map_err(|err| err.to_string())?;
            ensure!(image_class == class, "k={k}: {} and its mirror differ in class", g.edge_name(e.id));
            *classes.entry(class).or_default() += 1;
            for copy in 0..e.thickness {
                let d = drop_drawing(k, e.id, copy).map_err(|err| err.to_string())?;
                d.verify().map_err(|err| format!("k={k} {} copy {copy}: {err}", g.edge_name(e.id)))?;
                ensure!(d.graph == g.delete_one_copy(e.id).unwrap(), "k={k}: drop drawing of the wrong graph");
                let t = total(&d)?;
                ensure!(t <= 12, "k={k} {} copy {copy}: {t} crossings", g.edge_name(e.id));
                copies += 1;
            }
        }
        ensure!(classes.values().sum::<usize>() == g.edge_count(), "k={k}: classes do not cover the edges");
        ensure!(classes.len() == 6, "k={k}: {} classes", classes.len());
    }
    within(start, Duration::from_secs(30), "certificates")?;
    Ok(format!("{copies} edge copies over k = 2..5, all <= 12"))
}

fn figure_totals() -> Outcome {
    for k in 2..=4 {
        for (figure, expected) in [(Figure::Fig4a, 14), (Figure::Fig4b, 16), (Figure::Fig5a, 13), (Figure::Fig5b, 18)] {
            let indices: Vec<Option<usize>> = if figure.needs_wedge() { (1..=k).map(Some).collect() } else { vec![None] };
            for i in indices {
                let d = DrawingTemplate { figure, k, i, mirror: false }.build().map_err(|e| e.to_string())?;
                d.verify().map_err(|e| format!("{figure} k={k}: {e}"))?;
                let t = total(&d)?;
                ensure!(t == expected, "{figure} k={k} i={i:?}: {t}, expected {expected}");
            }
        }
    }
    Ok("4a = 14, 4b = 16, 5a = 13, 5b = 18".into())
}

fn solve(g: &WeightedMultigraph) -> Result<u64, String> {
    cr_exact(g, &SolveBudget::unlimited()).map(|r| r.cr).map_err(|e| e.to_string())
}

fn solver_anchors() -> Outcome {
    let cases = [
        ("K5", named::complete(5), 1),
        ("K3,3", named::k33(), 1),
        ("K6", named::complete(6), 3),
        ("Petersen", named::petersen(), 2),
        ("C3xC3", named::c3_box_c3(), 3),
    ];
    let mut parts = Vec::new();
    for (name, g, expected) in cases {
        let start = Instant::now();
        let cr = solve(&g)?;
        ensure!(cr == expected, "cr({name}) = {cr}, expected {expected}");
        within(start, Duration::from_secs(60), name)?;
        parts.push(format!("{name} {cr}"));
    }
    for (name, g) in [("K6", named::complete(6)), ("Petersen", named::petersen())] {
        let o = cr_oracle_bruteforce(&g).map_err(|e| e.to_string())?;
        ensure!(o == solve(&g)?, "oracle disagrees on {name}: {o}");
    }
    Ok(parts.join(", "))
}

fn grid_two_critical() -> Outcome {
    let start = Instant::now();
    let report = criticality_check(&named::c3_box_c3(), 2, &SolveBudget::unlimited()).map_err(|e| e.to_string())?;
    ensure!(report.lower_bound_holds == Some(true), "cr(C3xC3) >= 2 not established");
    ensure!(report.critical, "some edge deletion keeps 2 crossings");
    within(start, Duration::from_secs(600), "criticality check")?;
    Ok(format!("{} edges each drop to <= 1", report.edges.len()))
}

fn zip_additivity() -> Outcome {
    let start = Instant::now();
    let k33 = named::k33();
    let z = WeightedMultigraph::zip_product_sorted(&k33, VertexId(0), &k33, VertexId(0)).map_err(|e| e.to_string())?;
    let cr = solve(&z)?;
    ensure!(cr == 2, "cr = {cr}");
    within(start, Duration::from_secs(300), "zip")?;
    Ok("cr(K3,3 zip K3,3) = 2".into())
}

fn expansion() -> Outcome {
    for k in 2..=5 {
        let d = expanded_drawing(k).map_err(|e| e.to_string())?;
        d.verify().map_err(|e| format!("k={k}: {e}"))?;
        ensure!(d.graph == generate_ccgi13k(k).unwrap(), "k={k}: wrong graph");
        let t = total(&d)?;
        ensure!(t == 13, "k={k}: {t}");
    }
    Ok("k = 2..5 valid with 13 crossings".into())
}

fn contraction() -> Outcome {
    let mut runs = 0;
    for k in 3..=6 {
        let d = canonical_drawing(k).map_err(|e| e.to_string())?;
        for i in 1..k {
            let c = wedge_contraction(&d, i).map_err(|e| format!("k={k} i={i}: {e}"))?;
            c.verify().map_err(|e| format!("k={k} i={i}: {e}"))?;
            ensure!(wedge_count(&c.graph) == k - 1, "k={k} i={i}: {} wedges", wedge_count(&c.graph));
            ensure!(c.graph == generate_ccg13k(k - 1).unwrap(), "k={k} i={i}: not ccg13 with k-1 wedges");
            let t = total(&c)?;
            ensure!(t <= 13, "k={k} i={i}: {t}");
            runs += 1;
        }
    }
    Ok(format!("{runs} contractions, all valid with <= 13"))
}

fn random_connected(rng: &mut StdRng) -> WeightedMultigraph {
    let n = if rng.random_bool(0.75) { rng.random_range(5..=7) } else { rng.random_range(2..=7) };
    let mut g = WeightedMultigraph::from_edge_list(n, &[]).unwrap();
    for v in 1..n {
        let u = rng.random_range(0..v);
        g.add_edge(VertexId(u as u32), VertexId(v as u32), rng.random_range(1..=3)).unwrap();
    }
    let most = (n * (n - 1) / 2).min(12);
    let target = if rng.random_bool(0.75) { most } else { rng.random_range(n - 1..=most) };
    while g.edge_count() < target {
        let (a, b) = (rng.random_range(0..n) as u32, rng.random_range(0..n) as u32);
        if a != b && g.edge_between(VertexId(a), VertexId(b)).is_none() {
            g.add_edge(VertexId(a), VertexId(b), rng.random_range(1..=3)).unwrap();
        }
    }
    g
}

fn solver_matches_oracle() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let mut crossing = 0;
    let mut max_cr = 0;
    for case in 0..100 {
        let g = random_connected(&mut rng);
        let s = solve(&g)?;
        let o = cr_oracle_bruteforce(&g).map_err(|e| e.to_string())?;
        ensure!(s == o, "case {case}: solver {s}, oracle {o} on {}", serde_json::to_string(&g).unwrap());
        max_cr = max_cr.max(s);
        crossing += (s > 0) as usize;
    }
    Ok(format!("100 random graphs, zero mismatches ({crossing} non-planar, max cr {max_cr})"))
}

fn random_tree(rng: &mut StdRng) -> RootedTree {
    let n = rng.random_range(1..80);
    let parents: Vec<usize> = (1..n).map(|i| rng.random_range(0..i)).collect();
    let root = rng.random_range(0..n) as u32;
    RootedTree::new(&tree_from_parents(&parents), VertexId(root)).unwrap()
}

fn thresholds() -> Outcome {
    ensure!(bound_leaves_threshold(3, 1, 2) == BigUint::from(3u32), "f(3,1,2)");
    ensure!(bound_leaves_threshold(2, 2, 3) == BigUint::from(4u32), "f(2,2,3)");
    for d in 1..=6 {
        for x in 0..=6 {
            ensure!(bound_leaves_threshold(d, x, 1) == BigUint::from(1u32), "f({d},{x},1) != 1");
            ensure!(bound_leaves_threshold(d, 0, x + 1) == BigUint::from(1u32), "f({d},0,{}) != 1", x + 1);
        }
    }
    let mut rng = StdRng::seed_from_u64(36);
    for case in 0..500 {
        let t = random_tree(&mut rng);
        let d = t.max_degree().max(1) as u64;
        let b = binary_minor_depth(&t) as u64;
        let k = t.max_branching_on_path() as u64 + 1;
        let bound = bound_leaves_threshold(d, b, k);
        ensure!(BigUint::from(leaf_count(&t)) <= bound, "tree {case}: {} leaves > {bound}", leaf_count(&t));
    }
    Ok("hand values, base cases and 500 random trees".into())
}

fn structure_suite() -> Outcome {
    // Binary-minor depth against the rooted-minor oracle.
    for depth in 0..6 {
        let t = RootedTree::new(&complete_binary(depth), VertexId(0)).unwrap();
        ensure!(binary_minor_depth(&t) == depth, "complete binary tree of depth {depth}");
    }
    let mut rng = StdRng::seed_from_u64(37);
    let mut combs = 0;
    for case in 0..300 {
        let t = random_tree(&mut rng);
        ensure!(binary_minor_depth(&t) == minor_depth_oracle(&t), "tree {case}: binary-minor depth");
        // Trees above the leaf threshold have combs.
        let d = t.max_degree().max(1) as u64;
        let b = binary_minor_depth(&t) as u64;
        let leaves = BigUint::from(leaf_count(&t));
        let mut k = 1;
        while leaves > bound_leaves_threshold(d, b, k as u64) {
            let comb = find_comb(&t, k).ok_or(format!("tree {case}: no comb with {k} teeth"))?;
            ensure!(is_leaf_comb(&t, &comb) && comb.teeth_count() == k, "tree {case}: bad comb");
            combs += 1;
            k += 1;
        }
    }
    ensure!(combs > 0, "no tree exceeded a threshold");

    // Clean subcombs from 3k - 1 teeth.
    for k in 2..=5 {
        let (f, q, comb) = alternating_comb(3 * k - 1);
        let view = f.view();
        let sub = q_clean_subcomb(&view, &q, &comb, k).map_err(|e| e.to_string())?.ok_or(format!("k={k}: none"))?;
        ensure!(sub.teeth_count() >= k && is_q_clean(&view, &q, &sub) == Ok(true), "k={k}: subcomb not clean");
    }

    // The 2x3 fan-grid and square grids with crossing path systems.
    let f = figure_one();
    let fg = figure_one_grid(&f);
    ensure!(verify_fan_grid(&f.view(), &fg) == Ok(true), "figure fan-grid rejected");
    let (rays, rows) = path_systems(&fg);
    ensure!(rays.len() == 3 && rows.len() == 2, "figure fan-grid shape");
    let mut broken = fg;
    broken.rows[1] = f.ns(&["c1", "c2", "b6", "d3", "b7", "b3", "b4", "b5"]);
    ensure!(verify_fan_grid(&f.view(), &broken) == Ok(false), "overlapping rows accepted");
    for p in 0..4 {
        let (f, fg) = grid_fixture(p + 1, p + 1);
        ensure!(verify_fan_grid(&f.view(), &fg) == Ok(true), "({0} x {0}) grid rejected", p + 1);
        let (rays, rows) = path_systems(&fg);
        ensure!(all_pairs_intersect(&rays, &rows), "({0} x {0}) path systems miss", p + 1);
    }

    // Concentric 1-nests.
    for m in 1..=6 {
        let f = concentric(m);
        let res = one_nest_depth(&f.view(), f.n("w"), 1000).map_err(|e| e.to_string())?;
        ensure!(res.depth == m, "nest of {m} cycles has depth {}", res.depth);
    }

    // Nested chords form a chain.
    let g = cycle_with(8, &[(1, 7), (2, 6), (3, 5)]);
    let (cycle, segments) = unit_segments(8);
    let dec = c_bridge_decomposition(&g, &cycle, &segments).map_err(|e| e.to_string())?;
    ensure!(dec.longest_chain.len() == 3, "chain of {}", dec.longest_chain.len());
    let js: Vec<BTreeSet<usize>> = dec.longest_chain.iter().map(|&i| dec.bridges[i].j.clone()).collect();
    ensure!(js == vec![BTreeSet::from([3, 5]), BTreeSet::from([2, 6]), BTreeSet::from([1, 7])], "chain order {js:?}");
    Ok(format!("depths, {combs} combs, clean subcombs, fan-grid, nests and chains"))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 11] = [
        ("canonical drawings", canonical_drawings),
        ("criticality certificates", criticality_certificates),
        ("figure totals", figure_totals),
        ("solver anchors", solver_anchors),
        ("2-criticality of C3xC3", grid_two_critical),
        ("zip additivity", zip_additivity),
        ("expansion preservation", expansion),
        ("wedge contraction", contraction),
        ("solver vs oracle", solver_matches_oracle),
        ("threshold formulas", thresholds),
        ("structure suite", structure_suite),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail} ({secs:.2} s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why} ({secs:.2} s)", i + 1);
            }
        }
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
