//! Word-indexed mutation tree over any ring, with the Markov function and admissibility.
//!
//!     cargo run --example markov_tree -- int "[1,1,1]" 4
//!     cargo run --example markov_tree -- complex-conj "[1, i, -i]" 2

use sp2sigma::literal::parse_triple;
use sp2sigma::markov::{enumerate_tree, MarkovTriple, TreePolicy};
use sp2sigma::ring::Ring;

fn main() {
    let mut args = std::env::args().skip(1);
    let ring = Ring::parse(&args.next().unwrap_or_else(|| "int".into())).unwrap();
    let seed = args.next().unwrap_or_else(|| "[1,1,1]".into());
    let depth: usize = args.next().and_then(|a| a.parse().ok()).unwrap_or(4);

    let root = MarkovTriple::from_array(parse_triple(&ring, &seed).unwrap()).unwrap();
    let tree = match enumerate_tree(&root, depth, TreePolicy { dedup: true }) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("{root}: {e}");
            std::process::exit(1);
        }
    };
    println!("root {root} over {}, F = {}", ring.spec(), tree.f0);
    for node in &tree.nodes {
        let word = if node.word.is_empty() { "·".to_string() } else { node.word_string() };
        match &node.triple {
            Some(t) => println!("{word:>8}  {t}{}", if node.admissible() { "" } else { "  not admissible" }),
            None => println!("{word:>8}  {}", node.failure.as_deref().unwrap_or("")),
        }
    }
}
