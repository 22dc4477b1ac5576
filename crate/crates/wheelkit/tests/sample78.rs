// Randomized spot check at n = 7..8 while developing:
//   cargo test -p wheelkit --test sample78 -- --ignored
use wheelkit::cycle3::{cycle_or_splitter, verify_splitter, CycleOrSplitter};
use wheelkit::graph::{two_connectivity_defect, Graph};
use wheelkit::oracle::{brute_cycle_through, OracleBudget};

fn lcg(state: &mut u64) -> u64 {
    *state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
    *state >> 33
}

#[test]
#[ignore]
fn sampled_n7_n8() {
    let budget = OracleBudget::cycles();
    let mut rng = 0xabcdef123456u64;
    let mut tested = 0u64;
    let mut splitters = 0u64;
    for trial in 0..60000u64 {
        let n = 7 + (trial % 2) as usize;
        let bits = n * (n - 1) / 2;
        // skew sparse so splitters appear
        let density = 20 + (lcg(&mut rng) % 40) as u32;
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if (lcg(&mut rng) % 100) < density as u64 {
                    edges.push((u, v));
                }
            }
        }
        let _ = bits;
        let g = Graph::from_edges(n, &edges).unwrap();
        if two_connectivity_defect(&g).is_some() {
            continue;
        }
        tested += 1;
        for x in 0..n {
            for y in x + 1..n {
                for z in y + 1..n {
                    let expect = brute_cycle_through(&g, x, y, z, &budget).unwrap();
                    match cycle_or_splitter(&g, x, y, z).unwrap() {
                        CycleOrSplitter::Cycle(c) => {
                            assert!(expect.is_some(), "false cycle on {g:?} {x},{y},{z}");
                            c.validate(&g).unwrap();
                            assert!([x, y, z].iter().all(|&v| c.contains(v)));
                        }
                        CycleOrSplitter::Splitter(s) => {
                            assert!(expect.is_none(), "missed cycle on {g:?} {x},{y},{z}: {s:?}");
                            assert!(verify_splitter(&g, x, y, z, &s).is_empty());
                            splitters += 1;
                        }
                    }
                }
            }
        }
    }
    println!("2-connected samples: {tested}, splitter answers: {splitters}");
}
