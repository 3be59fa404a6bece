//! Deformations of the Markov numbers 2 and 5 in ℤ[ℤ/5]: tree entries whose
//! augmentation Z ↦ 1 is the classical number, matched against the known list.
//!
//!     cargo run --example z5_deformations -- 2

use sp2sigma::literal::parse_triple;
use sp2sigma::markov::{deformation_scan, markov_function, match_rows, MarkovTriple, Z5_DEFORMATIONS};
use sp2sigma::ring::{Ring, RingValue};

fn main() {
    let depth: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(2);
    let ring = Ring::parse("group:Z5:int").unwrap();
    let root = MarkovTriple::from_array(parse_triple(&ring, "[Z, 1 - Z + Z^2, 1 + Z - Z^3]").unwrap()).unwrap();
    println!("root {root}, F = {}", markov_function(&root).unwrap());

    let hits = deformation_scan(&root, depth, &[2, 5]).unwrap();
    println!("{} entries over 2 or 5 up to depth {depth}", hits.len());
    let rows: Vec<RingValue> = Z5_DEFORMATIONS.iter().map(|(_, c)| RingValue::group_coeffs(&ring, c).unwrap()).collect();
    for ((m, c), found) in Z5_DEFORMATIONS.iter().zip(match_rows(&hits, &rows)) {
        match found {
            Some((h, sigma)) => println!(
                "{m}: {c:?}  word {:?} slot {}{}",
                h.word.iter().map(|d| d.to_string()).collect::<String>(),
                h.slot,
                if sigma { " (as σ)" } else { "" }
            ),
            None => println!("{m}: {c:?}  not reached"),
        }
    }
}
