//! Real parts and ε-shadows along the dual-number Markov tree.
//!
//!     cargo run --example dual_shadows -- "[1, 1 + eps, 1 + eps]" 8 169

use std::collections::BTreeMap;

use num_rational::BigRational;
use sp2sigma::literal::parse_triple;
use sp2sigma::markov::{dual_split_mutate, enumerate_tree, MarkovTriple, TreePolicy};
use sp2sigma::ring::Ring;

fn main() {
    let mut args = std::env::args().skip(1);
    let seed = args.next().unwrap_or_else(|| "[1, 1 + eps, 1 + eps]".into());
    let depth: usize = args.next().and_then(|a| a.parse().ok()).unwrap_or(8);
    let real: i64 = args.next().and_then(|a| a.parse().ok()).unwrap_or(169);

    let ring = Ring::parse("dual:triv").unwrap();
    let root = MarkovTriple::from_array(parse_triple(&ring, &seed).unwrap()).unwrap();
    let tree = enumerate_tree(&root, depth, TreePolicy::default()).unwrap();

    // shadow -> shortest word where it shows up
    let mut shadows: BTreeMap<BigRational, String> = BTreeMap::new();
    for node in &tree.nodes {
        let Some(t) = &node.triple else { continue };
        for x in t.entries() {
            let (a, da) = x.dual_parts().unwrap();
            if a.as_rational() == Some(BigRational::from_integer(real.into())) {
                shadows.entry(da.as_rational().unwrap()).or_insert_with(|| node.word_string());
            }
        }
    }
    println!("root {root}, depth {depth}, F = {}", tree.f0);
    for (s, w) in &shadows {
        println!("  {real} + ({s})ε   first at word {w:?}");
    }

    // The closed-form split rule agrees with plain mutation along the first few levels.
    let split_ok = tree
        .nodes
        .iter()
        .filter(|n| n.word.len() < 4)
        .filter_map(|n| n.triple.as_ref())
        .all(|t| (0..3).all(|p| dual_split_mutate(t, p).map(|s| s.agree()).unwrap_or(false)));
    println!("split rule agrees with mutation to depth 4: {split_ok}");
}
