//! Mutation of unit-argument complex triples in polar form, checked against exact
//! mutation in ℤ[ℤ/n] and, for quarter turns, in ℤ[i].
//!
//!     cargo run --example complex_split -- 8 3

use num_bigint::BigInt;
use num_rational::BigRational;
use sp2sigma::markov::{args_balanced, complex_polar_mutate, group_oracle_mutate, polar_to_complex, Polar};
use sp2sigma::ring::Ring;

fn main() {
    let mut args = std::env::args().skip(1);
    let n: i64 = args.next().and_then(|a| a.parse().ok()).unwrap_or(8);
    let depth: usize = args.next().and_then(|a| a.parse().ok()).unwrap_or(3);
    let group = Ring::parse(&format!("group:Z{n}:int")).unwrap();
    let complex = Ring::parse("complex-conj").unwrap();
    let q = |k: i64| BigRational::new(BigInt::from(k), BigInt::from(n));
    let one = BigRational::from_integer(1.into());

    // (1, e^{2πi/n}, e^{-2πi/n})
    let root = [Polar::new(one.clone(), q(0)), Polar::new(one.clone(), q(1)), Polar::new(one, q(-1))];
    let mut level = vec![(String::new(), root)];
    let mut checked = 0;
    for _ in 0..depth {
        let mut next = Vec::new();
        for (word, t) in &level {
            for p in 0..3 {
                let a = complex_polar_mutate(t, p).unwrap();
                assert_eq!(a, group_oracle_mutate(&group, t, p).unwrap(), "split rule vs ℤ[ℤ/{n}] at {word}{p}");
                assert!(args_balanced(&a));
                checked += 1;
                next.push((format!("{word}{p}"), a));
            }
        }
        level = next;
    }
    println!("{checked} polar mutations agree with ℤ[ℤ/{n}]; deepest level:");
    for (word, t) in level.iter().take(9) {
        let shown: Vec<String> = t
            .iter()
            .map(|x| polar_to_complex(&complex, x).map(|v| v.to_string()).unwrap_or_else(|_| x.to_string()))
            .collect();
        println!("  {word:>5}  ({})", shown.join(", "));
    }
}
