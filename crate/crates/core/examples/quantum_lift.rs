//! Lifts sampled symplectic matrices to the q-ring and checks the quantum relations.
//!
//!     cargo run --example quantum_lift -- int 5

use sp2sigma::quantum::*;
use sp2sigma::ring::Ring;
use sp2sigma::sp2::random_symplectic;

fn main() {
    let mut args = std::env::args().skip(1);
    let base = Ring::parse(&args.next().unwrap_or_else(|| "int".into())).unwrap();
    let count: u64 = args.next().and_then(|a| a.parse().ok()).unwrap_or(5);
    println!("q-ring of {}: {}", base.spec(), qring(&base).spec());
    for seed in 0..count {
        let m = random_symplectic(&base, seed, 3);
        let q = lift_to_quantum(&m);
        let rep = quantum_symplectic_report(&q);
        println!("{m}");
        println!("  lift {q}");
        println!(
            "  quantum symplectic {}, Δ_q = {}, preserves the quantum plane {}, s = 1 matches {}",
            rep.is_full,
            quantum_det(&q),
            preserves_quantum_plane(&q),
            specialization_matches(&q).unwrap()
        );
    }
}
