//! Symplectic checks, σ-determinants and identity residuals for one 2×2 matrix.
//!
//!     cargo run --example sp2_report -- complex-conj "[[i, i], [0, i]]"

use sp2sigma::literal::parse_mat2;
use sp2sigma::ring::Ring;
use sp2sigma::sp2::*;

fn main() {
    let mut args = std::env::args().skip(1);
    let ring = Ring::parse(&args.next().unwrap_or_else(|| "complex-conj".into())).unwrap();
    let text = args.next().unwrap_or_else(|| "[[i, i], [0, i]]".into());
    let m = Mat2::from_array(parse_mat2(&ring, &text).unwrap()).unwrap();

    let rep = symplectic_report(&m);
    println!("M = {m} over {}", ring.spec());
    println!("left {}  right {}  full {}", rep.is_left, rep.is_right, rep.is_full);
    println!("det_l = {}   det_r = {}", det_l(&m), det_r(&m));
    println!("tr M = {}   tr σ(M) = {}", trace(&m), trace_sigma(&m));
    println!("Adj(M) = {}", adjugate(&m));
    println!("Cayley–Hamilton residual {}", cayley_hamilton_residual(&m));
    if rep.is_full {
        println!("symplectic Cayley–Hamilton residual {}", cayley_hamilton_symplectic_residual(&m));
        for k in 1..=4 {
            match chebyshev_trace_residual(&m, k) {
                Ok(r) => println!("  Chebyshev k = {k}: residual {r}"),
                Err(e) => println!("  Chebyshev k = {k}: {e}"),
            }
        }
    }
}
