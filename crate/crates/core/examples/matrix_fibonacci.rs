//! Fibonacci branch with one slot frozen: the linear recurrence against alternating
//! mutation, over 2×2 matrices of Laurent polynomials.
//!
//!     cargo run --example matrix_fibonacci -- "[Id, [[1, t], [0, 1]], [[1, -t], [0, 1]]]" 0 6

use sp2sigma::literal::parse_triple;
use sp2sigma::markov::{fibonacci_branch, MarkovTriple};
use sp2sigma::ring::Ring;

fn main() {
    let mut args = std::env::args().skip(1);
    let seed = args.next().unwrap_or_else(|| "[Id, [[1, t], [0, 1]], [[1, -t], [0, 1]]]".into());
    let slot: usize = args.next().and_then(|a| a.parse().ok()).unwrap_or(0);
    let n: usize = args.next().and_then(|a| a.parse().ok()).unwrap_or(6);

    let ring = Ring::parse("mat:2:laurent:t:int").unwrap();
    let t = MarkovTriple::from_array(parse_triple(&ring, &seed).unwrap()).unwrap();
    let b = fibonacci_branch(&t, slot, n).unwrap();
    println!("frozen slot {slot}, Φ = {}", b.phi);
    for (k, (r, x)) in b.recurrence.iter().zip(&b.mutation).enumerate() {
        println!("x{:<2} {r}{}", k as i64 - 1, if r == x { "" } else { "   ≠ mutation" });
    }
    println!("with arc orientation restored:");
    for x in b.oriented_terms() {
        println!("    {x}");
    }
    println!("recurrence = mutation {}, Φ invariant {}", b.agree(), b.phi_invariant);
}
