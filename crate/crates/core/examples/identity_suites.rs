//! Seeded identity runs over every test ring, one summary line per check.
//!
//!     cargo run --release --example identity_suites -- 100 7

use std::time::Instant;

use sp2sigma::ring::Ring;
use sp2sigma::suites::identity_suite;

const RINGS: [&str; 7] = ["int", "rat", "complex-conj", "dual:conj", "mat:2:int", "mat:3:int", "group:Z5:int"];

fn main() {
    let mut args = std::env::args().skip(1);
    let count = args.next().and_then(|a| a.parse().ok()).unwrap_or(100);
    let seed = args.next().and_then(|a| a.parse().ok()).unwrap_or(7);
    for spec in RINGS {
        let ring = Ring::parse(spec).unwrap();
        let t = Instant::now();
        let report = identity_suite(&ring, count, seed);
        println!("{spec}  ({:.2?})", t.elapsed());
        for c in &report.checks {
            match &c.first_failure {
                None => println!("  {:<28} ok   {}/{}", c.name, c.samples, c.samples),
                Some((i, msg)) => {
                    println!("  {:<28} FAIL {}/{}  first at sample {i}: {msg}", c.name, c.failures, c.samples)
                }
            }
        }
    }
}
