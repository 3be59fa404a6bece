//! Grows the mutation tree from admissible roots and reports whether every node stays
//! admissible.
//!
//!     cargo run --release --example positivity_propagation -- 5

use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sp2sigma::cluster::TorusSeed;
use sp2sigma::literal::parse_triple;
use sp2sigma::markov::{enumerate_tree, is_admissible, MarkovTriple, TreePolicy};
use sp2sigma::ring::{Ring, RingValue};
use sp2sigma::sp2::random_unit;

fn main() {
    let depth: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(5);
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut roots = Vec::new();
    for (spec, seed) in [
        ("int", "[1, 1, 1]"),
        ("complex-conj", "[1, i, -i]"),
        ("dual:conj", "[1, 1 + eps, 1 - eps]"),
        ("group:Z5:int", "[Z, 1 - Z + Z^2, 1 + Z - Z^3]"),
        ("mat:2:laurent:t:int", "[Id, [[1, t], [0, 1]], [[1, -t], [0, 1]]]"),
    ] {
        let r = Ring::parse(spec).unwrap();
        roots.push(MarkovTriple::from_array(parse_triple(&r, seed).unwrap()).unwrap());
    }
    for spec in ["mat:2:int", "mat:3:int", "group:Z4:int", "dual:triv"] {
        let r = Ring::parse(spec).unwrap();
        // (1, B, B⁻¹) moved by a gauge change at the marked point.
        let b = random_unit(&r, &mut rng);
        let t = MarkovTriple::new(RingValue::one(&r), b.clone(), b.inverse().unwrap()).unwrap();
        let g = random_unit(&r, &mut rng);
        roots.push(TorusSeed::new(t).rescale_vertex(&g).unwrap().triple().clone());
    }

    for root in roots {
        let t0 = Instant::now();
        if !is_admissible(&root).admissible {
            println!("{:<22} root {root} is not admissible", root.ring().spec());
            continue;
        }
        let tree = enumerate_tree(&root, depth, TreePolicy::default()).unwrap();
        let bad = tree.nodes.iter().filter(|n| !n.admissible()).count();
        println!(
            "{:<22} {} nodes, {} not admissible, F = {}  ({:.2?})",
            root.ring().spec(),
            tree.nodes.len(),
            bad,
            tree.f0,
            t0.elapsed()
        );
    }
}
