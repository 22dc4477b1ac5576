//! Acceptance suite. Each test covers one criterion end to end, prints a
//! pass line with its measured runtime, and enforces the stated time
//! budget. Zero mismatches are tolerated anywhere.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};
use wheelkit::coloring::{color3, color3_traced, color4_long, verify_coloring, Coloring};
use wheelkit::connectivity::{
    essential_edges, extend_2cut_block, extend_3sep, fragments_and_ends, is_minimally_3_connected,
    kappa,
};
use wheelkit::cycle3::{
    cycle_or_splitter, verify_cycle_through, verify_splitter, CycleOrSplitter, Splitter,
};
use wheelkit::graph::{blocks, two_connectivity_defect, Graph};
use wheelkit::oracle::{
    alpha_omega, brute_contains_subgraph, brute_cycle_through, brute_isomorphic, brute_wheel,
    chromatic_number, OracleBudget,
};
use wheelkit::structure::{disjoint_twin_pairs, reduction_step, twin_pairs};
use wheelkit::wheels::{classify, find_long_wheel, find_wheel, wheel_centers, WheelWitness};
use wheelkit::zoo::{all_labeled_graphs, fixture, make_wheel_free, random_graph, Fixture};

fn finish(criterion: &str, detail: String, started: Instant, budget_secs: u64) {
    let elapsed = started.elapsed();
    println!("acceptance {criterion}: PASS ({detail}) in {elapsed:.2?}");
    assert!(
        elapsed < Duration::from_secs(budget_secs),
        "{criterion} exceeded its {budget_secs}s budget: {elapsed:?}"
    );
}

/// Seeded generator matching the wheel-detector criterion: 500 graphs,
/// 6 <= n <= 10, p cycling {0.2, 0.4, 0.6}.
fn random_suite() -> Vec<Graph> {
    let ps = [0.2, 0.4, 0.6];
    (0..500u64)
        .map(|seed| {
            let n = 6 + (seed % 5) as usize;
            let p = ps[(seed / 5) as usize % 3];
            random_graph(n, p, seed).unwrap()
        })
        .collect()
}

/// Seeded wheel-free generator suite: 1000 outputs, all within 60
/// vertices.
fn wheel_free_suite() -> Vec<Graph> {
    let ps = [0.2, 0.35, 0.5];
    (0..1000u64)
        .map(|seed| {
            let n = 4 + (seed % 8) as usize;
            let p = ps[(seed / 8) as usize % 3];
            let base = random_graph(n, p, seed).unwrap();
            let g = make_wheel_free(&base, seed ^ 0x5eed);
            assert!(g.n() <= 60, "generated graph too large: {}", g.n());
            g
        })
        .collect()
}

/// Three K33's glued along two edges of the middle one: wheel-free with
/// connectivity 2 and two four-vertex ends.
fn glued_k33_chain() -> Graph {
    let mut edges: BTreeSet<(usize, usize)> = BTreeSet::new();
    for (part1, part2, skip) in [
        ([0usize, 1, 2], [3usize, 4, 5], None),
        ([0, 6, 7], [3, 8, 9], Some((0, 3))),
        ([1, 10, 11], [4, 12, 13], Some((1, 4))),
    ] {
        for &a in &part1 {
            for &b in &part2 {
                if skip != Some((a, b)) {
                    edges.insert((a.min(b), a.max(b)));
                }
            }
        }
    }
    let edges: Vec<(usize, usize)> = edges.into_iter().collect();
    Graph::from_edges(14, &edges).unwrap()
}

fn fixture_graphs() -> Vec<Graph> {
    let named = [
        Fixture::K4,
        Fixture::K33,
        Fixture::K33MinusE,
        Fixture::Diamond,
        Fixture::Cube,
        Fixture::Petersen,
        Fixture::RamseyR35,
        Fixture::GluedK33Pair,
        Fixture::TwinLadder,
        Fixture::Cycle(3),
        Fixture::Cycle(5),
        Fixture::Cycle(8),
        Fixture::Theta(2, 2, 2),
        Fixture::Theta(3, 3, 3),
        Fixture::Theta(2, 3, 4),
        Fixture::Theta(1, 2, 2),
    ];
    let mut graphs: Vec<Graph> = named.into_iter().map(|f| fixture(f).unwrap()).collect();
    graphs.push(glued_k33_chain());
    graphs
}

/// The shared corpus for the property-suite criteria: fixtures, every
/// labeled graph on up to 5 vertices, seeded random graphs, and a slice
/// of the wheel-free generator output.
fn corpus() -> Vec<Graph> {
    let mut out = fixture_graphs();
    for n in 1..=5 {
        out.extend(all_labeled_graphs(n).unwrap());
    }
    out.extend(random_suite().into_iter().step_by(5));
    out.extend(wheel_free_suite().into_iter().step_by(20));
    out
}

#[test]
fn criterion_1_cycle_through_three_soundness() {
    let started = Instant::now();
    let budget = OracleBudget::cycles();
    let mut graphs = 0u64;
    let mut queries = 0u64;
    for n in 3..=6usize {
        for g in all_labeled_graphs(n).unwrap() {
            if two_connectivity_defect(&g).is_some() {
                continue;
            }
            graphs += 1;
            for x in 0..n {
                for y in x + 1..n {
                    for z in y + 1..n {
                        queries += 1;
                        let expect = brute_cycle_through(&g, x, y, z, &budget).unwrap();
                        match cycle_or_splitter(&g, x, y, z).unwrap() {
                            CycleOrSplitter::Cycle(c) => {
                                assert!(expect.is_some(), "false cycle on {g:?} {x},{y},{z}");
                                assert!(
                                    verify_cycle_through(&g, c.vertices(), &[x, y, z]).is_empty(),
                                    "bad cycle certificate on {g:?} {x},{y},{z}"
                                );
                            }
                            CycleOrSplitter::Splitter(s) => {
                                assert!(expect.is_none(), "missed cycle on {g:?} {x},{y},{z}");
                                assert!(
                                    verify_splitter(&g, x, y, z, &s).is_empty(),
                                    "bad splitter certificate on {g:?} {x},{y},{z}"
                                );
                            }
                        }
                    }
                }
            }
        }
    }
    finish(
        "1 (cycle-through-three soundness)",
        format!("{graphs} two-connected graphs, {queries} triples"),
        started,
        60,
    );
}

#[test]
fn criterion_2_wheel_detector_equivalence() {
    let started = Instant::now();
    let budget = OracleBudget::cycles();
    let mut count = 0u64;
    for n in 1..=5usize {
        for g in all_labeled_graphs(n).unwrap() {
            count += 1;
            let ours = find_wheel(&g);
            let brute = brute_wheel(&g, &budget).unwrap();
            assert_eq!(ours.is_some(), brute.is_some(), "disagreement on {g:?}");
            if let Some(w) = ours {
                assert!(w.verify(&g, 3).is_empty(), "bad witness on {g:?}");
            }
        }
    }
    for g in random_suite() {
        count += 1;
        let ours = find_wheel(&g);
        let brute = brute_wheel(&g, &budget).unwrap();
        assert_eq!(ours.is_some(), brute.is_some(), "disagreement on {g:?}");
        if let Some(w) = ours {
            assert!(w.verify(&g, 3).is_empty(), "bad witness on {g:?}");
        }
    }
    finish("2 (wheel-detector equivalence)", format!("{count} graphs"), started, 120);
}

#[test]
fn criterion_3_ramsey_circulant_numbers() {
    let started = Instant::now();
    let g = fixture(Fixture::RamseyR35).unwrap();
    assert_eq!(g.n(), 13);
    let budget = OracleBudget::chromatic();
    assert_eq!(alpha_omega(&g, &budget).unwrap(), (4, 2));
    assert_eq!(chromatic_number(&g, &budget).unwrap(), 4);
    let w = find_wheel(&g).expect("the circulant contains wheels");
    assert!(w.verify(&g, 3).is_empty());
    let (k, _) = kappa(&g).unwrap();
    assert_eq!(k, 4);
    finish(
        "3 (Ramsey circulant numbers)",
        "n=13, alpha=4, omega=2, chi=4, wheel witness, kappa=4".to_string(),
        started,
        60,
    );
}

#[test]
fn criterion_4_three_colorability() {
    let started = Instant::now();
    let mut colored = 0u64;
    for g in wheel_free_suite() {
        let (c, trace) = color3_traced(&g).unwrap_or_else(|e| panic!("{e} on {g:?}"));
        assert!(verify_coloring(&g, &c, 3).is_empty(), "improper coloring on {g:?}");
        assert_eq!(trace.len(), g.n().saturating_sub(1), "peel length on {g:?}");
        colored += 1;
    }
    // every wheel-free graph the other exhaustive criteria touch
    for n in 1..=5usize {
        for g in all_labeled_graphs(n).unwrap() {
            if find_wheel(&g).is_none() {
                let c = color3(&g).unwrap_or_else(|e| panic!("{e} on {g:?}"));
                assert!(verify_coloring(&g, &c, 3).is_empty(), "improper coloring on {g:?}");
                colored += 1;
            }
        }
    }
    for g in all_labeled_graphs(6).unwrap() {
        if two_connectivity_defect(&g).is_none() && find_wheel(&g).is_none() {
            let c = color3(&g).unwrap_or_else(|e| panic!("{e} on {g:?}"));
            assert!(verify_coloring(&g, &c, 3).is_empty(), "improper coloring on {g:?}");
            colored += 1;
        }
    }
    for g in random_suite() {
        if find_wheel(&g).is_none() {
            let c = color3(&g).unwrap_or_else(|e| panic!("{e} on {g:?}"));
            assert!(verify_coloring(&g, &c, 3).is_empty(), "improper coloring on {g:?}");
            colored += 1;
        }
    }
    finish("4 (three-colorability)", format!("{colored} wheel-free graphs colored"), started, 120);
}

#[test]
fn criterion_5_reduction_trichotomy() {
    let started = Instant::now();
    let mut checked = 0u64;
    for g in corpus() {
        if g.n() < 2 || find_wheel(&g).is_some() {
            continue;
        }
        let outcome = reduction_step(&g).unwrap();
        assert!(
            outcome.is_trichotomy(),
            "wheel-free graph without a trichotomy outcome: {g:?} -> {outcome:?}"
        );
        assert!(outcome.verify(&g), "outcome fails re-verification on {g:?}");
        checked += 1;
    }
    finish("5 (reduction trichotomy)", format!("{checked} wheel-free graphs"), started, 120);
}

#[test]
fn criterion_6_connectivity_theorem_suite() {
    let started = Instant::now();
    let _budget = OracleBudget::cycles();
    let mut stats = [0u64; 5];
    for g in corpus() {
        let n = g.n();
        if n == 0 {
            continue;
        }
        let (kap, _) = kappa(&g).unwrap();
        let needs_w = kap >= 3 || n <= 12;
        let centers = if needs_w { wheel_centers(&g) } else { Vec::new() };
        let cls = classify(&g);

        if kap == 3 && cls.is_almost_wheel_free() {
            // (a) minimally 3-connected
            assert!(is_minimally_3_connected(&g), "(a) fails on {g:?}");
            stats[0] += 1;
            // (b) Mader's degree-3 count
            let deg3 = (0..n).filter(|&v| g.degree(v) == 3).count();
            let bound = (2 * n + 2).div_ceil(5);
            assert!(deg3 >= bound, "(b) fails on {g:?}: {deg3} < {bound}");
            stats[1] += 1;
        }
        // (c) wheel-free graphs keep two low-degree vertices
        if n >= 2 && cls.is_wheel_free() {
            let low = (0..n).filter(|&v| g.degree(v) <= 3).count();
            assert!(low >= 2, "(c) fails on {g:?}");
            stats[2] += 1;
        }
        // (d) 4-connected graphs have wheels centered everywhere
        if kap >= 4 && n <= 10 {
            assert_eq!(centers, (0..n).collect::<Vec<_>>(), "(d) fails on {g:?}");
            stats[3] += 1;
        }
        // (e) non-essential edges of 3-connected graphs join wheel centers
        if kap == 3 {
            let essential: BTreeSet<(usize, usize)> = essential_edges(&g).into_iter().collect();
            for (u, v) in g.edges() {
                if !essential.contains(&(u, v)) {
                    assert!(
                        centers.contains(&u) && centers.contains(&v),
                        "(e) fails on {g:?} at edge {u} {v}"
                    );
                }
            }
            stats[4] += 1;
        }
    }
    // (d) needs real 4-connected samples beyond complete fixtures
    let mut dense = 0u64;
    for seed in 0..80u64 {
        let n = 6 + (seed % 5) as usize;
        let g = random_graph(n, 0.8, 0xd0 + seed).unwrap();
        let (kap, _) = kappa(&g).unwrap();
        if kap >= 4 {
            assert_eq!(wheel_centers(&g), (0..n).collect::<Vec<_>>(), "(d) fails on {g:?}");
            dense += 1;
        }
    }
    assert!(dense >= 10, "sampling produced too few 4-connected graphs: {dense}");
    stats[3] += dense;
    finish(
        "6 (connectivity theorem suite)",
        format!(
            "(a) {} (b) {} (c) {} (d) {} (e) {}",
            stats[0], stats[1], stats[2], stats[3], stats[4]
        ),
        started,
        120,
    );
}

#[test]
fn criterion_7_twin_lemma_suite() {
    let started = Instant::now();
    let budget = OracleBudget::cycles();
    let k33 = fixture(Fixture::K33).unwrap();
    let k33_minus_e = fixture(Fixture::K33MinusE).unwrap();
    let mut awf3 = 0u64;
    let mut blocks_checked = 0u64;
    for g in corpus() {
        let n = g.n();
        if n == 0 || n > 14 {
            continue;
        }
        let (kap, _) = kappa(&g).unwrap();
        let cls = classify(&g);

        if kap >= 3 && cls.is_almost_wheel_free() {
            awf3 += 1;
            // triangle-free
            for u in 0..n {
                for &v in g.neighbors(u) {
                    for &w in g.neighbors(v) {
                        assert!(
                            u == w || !g.has_edge(u, w) || !(u < v && v < w),
                            "triangle {u} {v} {w} in {g:?}"
                        );
                    }
                }
            }
            // K33-minus-an-edge subgraph forces K33 itself
            if brute_contains_subgraph(&g, &k33_minus_e, &budget).unwrap().is_some() {
                assert!(brute_isomorphic(&g, &k33, &budget).unwrap(), "k33-e lemma fails on {g:?}");
            }
            // three common neighbors force twins
            let pairs = twin_pairs(&g);
            for a in 0..n {
                for b in a + 1..n {
                    let common = g
                        .neighbors(a)
                        .iter()
                        .filter(|w| g.neighbors(b).contains(w))
                        .count();
                    if common >= 3 {
                        assert!(
                            pairs.iter().any(|p| (p.0, p.1) == (a, b)),
                            "common-neighbor pair {a},{b} not twins in {g:?}"
                        );
                    }
                }
            }
            // two disjoint twin pairs exist
            let (p, q) = disjoint_twin_pairs(&g)
                .unwrap_or_else(|| panic!("no disjoint twin pairs in {g:?}"));
            assert!(p.verify(&g) && q.verify(&g));
            // every fragment extension stays 3-connected and almost
            // wheel-free
            if let Ok(frags) = fragments_and_ends(&g) {
                for f in frags {
                    if f.neighborhood.len() == 3 {
                        let ext = extend_3sep(&g, &f.vertices).unwrap();
                        let (ek, _) = kappa(&ext.graph).unwrap();
                        assert!(ek >= 3, "extension lost 3-connectivity on {g:?}");
                        assert!(
                            classify(&ext.graph).is_almost_wheel_free(),
                            "extension not almost wheel-free on {g:?}"
                        );
                    }
                }
            }
        }

        // 2-cut extension: wheel-free graphs of connectivity 2
        if kap == 2 && cls.is_wheel_free() && n <= 14 {
            if let Ok(frags) = fragments_and_ends(&g) {
                for f in frags.iter().filter(|f| f.is_end && f.vertices.len() >= 2) {
                    let ext = extend_2cut_block(&g, &f.vertices).unwrap();
                    let (ek, _) = kappa(&ext.graph).unwrap();
                    assert!(ek >= 3, "2-cut extension not 3-connected on {g:?}");
                    let w = wheel_centers(&ext.graph);
                    assert!(
                        w.iter().all(|&c| c == ext.a || c == ext.b),
                        "2-cut extension centers {w:?} escape the cut pair on {g:?}"
                    );
                    blocks_checked += 1;
                }
            }
        }
    }
    assert!(awf3 >= 1, "corpus lost its 3-connected almost-wheel-free graphs");
    assert!(blocks_checked >= 1, "corpus lost its 2-cut wheel-free ends");
    finish(
        "7 (twin lemma suite)",
        format!("{awf3} almost-wheel-free 3-connected graphs, {blocks_checked} 2-cut extensions"),
        started,
        120,
    );
}

#[test]
fn criterion_8_long_wheel_suite() {
    let started = Instant::now();
    let k4 = fixture(Fixture::K4).unwrap();
    let budget = OracleBudget::cycles();
    let mut colored = 0u64;
    for g in corpus() {
        if find_long_wheel(&g).is_some() {
            continue;
        }
        let c = color4_long(&g).unwrap_or_else(|e| panic!("{e} on {g:?}"));
        assert!(verify_coloring(&g, &c, 4).is_empty(), "improper 4-coloring on {g:?}");
        colored += 1;
        // every block is wheel-free or a K4
        for b in blocks(&g).blocks {
            let (bg, _) = g.induced(&b.vertices);
            let ok = find_wheel(&bg).is_none()
                || (bg.n() == 4 && brute_isomorphic(&bg, &k4, &budget).unwrap());
            assert!(ok, "block {b:?} of {g:?} is neither wheel-free nor K4");
        }
    }
    finish("8 (long-wheel-free suite)", format!("{colored} graphs 4-colored"), started, 120);
}

// ---------------------------------------------------------------------------
// Criterion 9: certificate fuzzing
// ---------------------------------------------------------------------------

struct Lcg(u64);

impl Lcg {
    fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        self.0 >> 33
    }

    fn pick(&mut self, n: usize) -> usize {
        (self.next() % n as u64) as usize
    }
}

fn splitter_pool() -> Vec<(Graph, usize, usize, usize, Splitter)> {
    let mut pool = Vec::new();
    for f in [Fixture::Theta(2, 2, 2), Fixture::Theta(3, 3, 3), Fixture::Theta(2, 3, 4), Fixture::Theta(1, 2, 2)] {
        let g = fixture(f).unwrap();
        'next: for x in 0..g.n() {
            for y in x + 1..g.n() {
                for z in y + 1..g.n() {
                    if let Ok(CycleOrSplitter::Splitter(s)) = cycle_or_splitter(&g, x, y, z) {
                        pool.push((g.clone(), x, y, z, s));
                        break 'next;
                    }
                }
            }
        }
    }
    for g in all_labeled_graphs(5).unwrap() {
        if two_connectivity_defect(&g).is_some() {
            continue;
        }
        for x in 0..5 {
            for y in x + 1..5 {
                for z in y + 1..5 {
                    if let Ok(CycleOrSplitter::Splitter(s)) = cycle_or_splitter(&g, x, y, z) {
                        pool.push((g.clone(), x, y, z, s));
                    }
                }
            }
        }
    }
    pool
}

fn wheel_pool() -> Vec<(Graph, WheelWitness)> {
    let mut pool = Vec::new();
    for f in [Fixture::K4, Fixture::Cube, Fixture::RamseyR35] {
        let g = fixture(f).unwrap();
        let w = find_wheel(&g).unwrap();
        pool.push((g, w));
    }
    for seed in 100..130u64 {
        let g = random_graph(6 + (seed % 4) as usize, 0.6, seed).unwrap();
        if let Some(w) = find_wheel(&g) {
            pool.push((g, w));
        }
    }
    pool
}

fn coloring_pool() -> Vec<(Graph, Coloring)> {
    let mut pool = Vec::new();
    for seed in 0..30u64 {
        let base = random_graph(6 + (seed % 4) as usize, 0.4, seed).unwrap();
        let g = make_wheel_free(&base, seed);
        if g.edge_count() == 0 {
            continue;
        }
        let c = color3(&g).unwrap();
        pool.push((g, c));
    }
    let k4 = fixture(Fixture::K4).unwrap();
    let c = color4_long(&k4).unwrap();
    pool.push((k4, c));
    pool
}

#[test]
fn criterion_9_certificate_fuzzing() {
    let started = Instant::now();
    let splitters = splitter_pool();
    let wheels = wheel_pool();
    let colorings = coloring_pool();
    assert!(splitters.len() >= 5 && wheels.len() >= 5 && colorings.len() >= 5);
    let mut rng = Lcg(0xf22f);
    let mut rejected = 0u64;
    for trial in 0..10_000u64 {
        match trial % 3 {
            0 => {
                let (g, x, y, z, s) = &splitters[rng.pick(splitters.len())];
                let mut bad = s.clone();
                match rng.pick(5) {
                    0 => bad.a.push(bad.x_comp[0]),
                    1 => std::mem::swap(&mut bad.x_comp, &mut bad.y_comp),
                    2 => bad.x_comp.retain(|&v| v != *x),
                    3 => bad.anchors.x_a = bad.anchors.x_b,
                    _ => bad.b.push(g.n() + 7),
                }
                let viols = verify_splitter(g, *x, *y, *z, &bad);
                assert!(!viols.is_empty(), "silent accept of mutated splitter {bad:?} on {g:?}");
                rejected += 1;
            }
            1 => {
                let (g, w) = &wheels[rng.pick(wheels.len())];
                let mut bad = w.clone();
                match rng.pick(4) {
                    0 => bad.center = bad.rim.vertices()[0],
                    1 => {
                        let mut verts = bad.rim.vertices().to_vec();
                        verts.push(verts[0]);
                        bad.rim = serde_json::from_value(serde_json::json!(verts)).unwrap();
                    }
                    2 => {
                        let off = (0..g.n()).find(|&v| v != bad.center && !g.has_edge(bad.center, v));
                        match off {
                            Some(v) => bad.spokes.push(v),
                            None => bad.spokes.push(g.n() + 3),
                        }
                    }
                    _ => {
                        let verts = bad.rim.vertices()[..2].to_vec();
                        bad.rim = serde_json::from_value(serde_json::json!(verts)).unwrap();
                    }
                }
                let viols = bad.verify(g, 3);
                assert!(!viols.is_empty(), "silent accept of mutated wheel {bad:?} on {g:?}");
                rejected += 1;
            }
            _ => {
                let (g, c) = &colorings[rng.pick(colorings.len())];
                let mut bad = c.clone();
                match rng.pick(3) {
                    0 => {
                        let (u, v) = g.edges().nth(rng.pick(g.edge_count())).unwrap();
                        bad.colors[u] = bad.colors[v];
                    }
                    1 => {
                        let v = rng.pick(g.n());
                        bad.colors[v] = bad.max + 1 + rng.pick(3);
                    }
                    _ => {
                        bad.colors.pop();
                    }
                }
                let viols = verify_coloring(g, &bad, bad.max);
                assert!(!viols.is_empty(), "silent accept of mutated coloring {bad:?} on {g:?}");
                rejected += 1;
            }
        }
    }
    assert_eq!(rejected, 10_000);
    finish("9 (certificate fuzzing)", format!("{rejected} mutants rejected"), started, 120);
}
