//! The square seed of a symplectic matrix: extraction, the diagonal flip, φ, monodromy
//! and multiplication by amalgamation.
//!
//!     cargo run --example square_seed -- int "[[2,1],[1,1]]" "[[1,1],[1,2]]"

use sp2sigma::cluster::*;
use sp2sigma::literal::parse_mat2;
use sp2sigma::ring::Ring;
use sp2sigma::sp2::Mat2;

fn main() {
    let mut args = std::env::args().skip(1);
    let ring = Ring::parse(&args.next().unwrap_or_else(|| "int".into())).unwrap();
    let mat = |s: String| Mat2::from_array(parse_mat2(&ring, &s).unwrap()).unwrap();
    let m = mat(args.next().unwrap_or_else(|| "[[2,1],[1,1]]".into()));
    let n = mat(args.next().unwrap_or_else(|| "[[1,1],[1,2]]".into()));

    let s = seed_from_matrix(&m).unwrap();
    println!("seed of {m}:");
    for ((i, j), v) in s.edges() {
        println!("  Δ{i}{j} = {v}{}", if s.is_frozen(*i, *j) { "  (frozen)" } else { "" });
    }
    println!("extracted back: {}", extract_matrix(&s, [1, 2, 3, 4]).unwrap());

    let f = s.mutate_edge(1, 3).unwrap();
    println!("after flipping 13: Δ24 = {}", f.value(2, 4).unwrap());
    println!("φ_R {} → {}", phi_r(&s).unwrap(), phi_r(&f).unwrap());
    println!("φ_L {} → {}", phi_l(&s).unwrap(), phi_l(&f).unwrap());
    println!("monodromy {}", monodromy(&s, &MonodromyPath::canonical_square()).unwrap());

    let (_, p) = amalgamate_multiply(&m, &n).unwrap();
    println!("amalgamated {m}·{n} = {p} (direct product {})", &m * &n);
}
