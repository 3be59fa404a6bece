use std::collections::BTreeSet;

use num_rational::BigRational;

use super::*;
use crate::literal::{parse_triple, parse_value};
use crate::ring::{Ring, RingValue};

fn ring(s: &str) -> Ring {
    Ring::parse(s).unwrap()
}

fn triple(r: &Ring, s: &str) -> MarkovTriple {
    MarkovTriple::from_array(parse_triple(r, s).unwrap()).unwrap()
}

fn v(r: &Ring, s: &str) -> RingValue {
    parse_value(r, s).unwrap()
}

fn ints(t: &MarkovTriple) -> Vec<i64> {
    t.entries().iter().map(|x| x.as_rational().unwrap().to_integer().try_into().unwrap()).collect()
}

#[test]
fn classical_function_and_mutation() {
    let z = Ring::int();
    let one = MarkovTriple::unit(&z);
    assert_eq!(markov_function(&one).unwrap(), RingValue::from_int(&z, 6));
    assert_eq!(torus_angles(&one).unwrap().to_vec(), vec![RingValue::one(&z); 6]);
    let t = mutate(&one, 0).unwrap();
    assert_eq!(ints(&t), vec![2, 1, 1]);
    let mut u = ints(&mutate(&t, 1).unwrap());
    u.sort();
    assert_eq!(u, vec![1, 2, 5]);
}

#[test]
fn double_flip_over_integers_is_identity() {
    let z = Ring::int();
    let t = triple(&z, "[2, 5, 29]");
    let back = mutate(&mutate(&t, 0).unwrap(), 0).unwrap();
    assert_eq!(back, t);
}

#[test]
fn group_ring_goldens() {
    let r = ring("group:Z5:int");
    let t = triple(&r, "[Z, 1 - Z + Z^2, 1 + Z - Z^3]");
    assert_eq!(markov_function(&t).unwrap(), v(&r, "14 - 2Z - 2Z^2 - 2Z^3 - 2Z^4"));
    let angles: BTreeSet<String> = torus_angles(&t).unwrap().iter().map(|a| a.to_string()).collect();
    let expected: BTreeSet<String> =
        ["1", "3 - 2Z + Z^2 + Z^3 - 2Z^4", "3 + Z - 2Z^2 - 2Z^3 + Z^4"].iter().map(|s| v(&r, s).to_string()).collect();
    assert_eq!(angles, expected);
    assert!(is_admissible(&t).admissible);
}

#[test]
fn matrix_markov_function() {
    let r = ring("mat:2:laurent:t:int");
    let bt = v(&r, "[[1, t], [0, 1]]");
    let t = MarkovTriple::new(RingValue::one(&r), bt.clone(), bt.inverse().unwrap()).unwrap();
    assert_eq!(markov_function(&t).unwrap(), v(&r, "[[6 + 2t^2, 0], [0, 6 + 2t^2]]"));
    assert!(is_admissible(&t).admissible);
    let d = v(&r, "[[t, 0], [0, t^-1]]");
    let t = MarkovTriple::new(RingValue::one(&r), d.clone(), d.inverse().unwrap()).unwrap();
    let f = v(&r, "2t^-2 + 2 + 2t^2");
    assert_eq!(markov_function(&t).unwrap(), f);
}

#[test]
fn dual_function_values() {
    let triv = ring("dual:triv");
    let t = triple(&triv, "[1 + 2ε, 1 - 5ε, 1 + 7ε]");
    assert_eq!(markov_function(&t).unwrap(), v(&triv, "6 - 8ε"));
    let conj = ring("dual:conj");
    let t = triple(&conj, "[1 + 2ε, 1 - 5ε, 1 + 3ε]");
    assert_eq!(markov_function(&t).unwrap(), v(&conj, "6"));
    assert!(torus_angles(&t).unwrap().iter().all(RingValue::is_one));
    let off = triple(&conj, "[1 + ε, 1, 1]");
    assert_eq!(markov_function(&off).unwrap(), v(&conj, "6 + 6ε"));
}

#[test]
fn admissibility_rejects_one_one_i() {
    let c = ring("complex-conj");
    let bad = triple(&c, "[1, 1, i]");
    let rep = is_admissible(&bad);
    assert!(!rep.admissible);
    assert!(rep.sigma_fixed.iter().any(|f| !f));
    assert!(is_admissible(&triple(&c, "[1, i, -i]")).admissible);
    // Mutating anyway at the first slot hits zero.
    assert!(matches!(mutate(&bad, 0), Err(MarkovError::MutationNotInvertible(0))));
}

#[test]
fn inverse_triples_are_admissible() {
    let r = ring("mat:2:int");
    let b = v(&r, "[[2, 1], [1, 1]]");
    let t = MarkovTriple::new(RingValue::one(&r), b.clone(), b.inverse().unwrap()).unwrap();
    assert!(is_admissible(&t).admissible);
    let not_unit = triple(&Ring::int(), "[2, 1, 1]");
    let rep = is_admissible(&not_unit);
    assert!(!rep.admissible && rep.units == [false, true, true]);
    assert!(node_admissible(&not_unit, &crate::ring::PositivityCone::default()).admissible);
}

#[test]
fn classical_tree_values() {
    let tree = enumerate_tree(&MarkovTriple::unit(&Ring::int()), 4, TreePolicy::default()).unwrap();
    let vals: BTreeSet<i64> = tree.values().map(|x| x.as_rational().unwrap().to_integer().try_into().unwrap()).collect();
    for k in [1, 2, 5, 13, 29, 34] {
        assert!(vals.contains(&k), "{k}");
    }
    assert_eq!(tree.nodes.len(), 1 + 3 + 6 + 12 + 24);
    assert!(tree.nodes.windows(2).all(|w| w[0].word < w[1].word));
    assert!(tree.nodes.iter().all(|n| n.markov_value.as_ref() == Some(&tree.f0)));
    let dedup = enumerate_tree(&MarkovTriple::unit(&Ring::int()), 4, TreePolicy { dedup: true }).unwrap();
    // Backtracking is already excluded, so over ℤ every ordered triple is new.
    assert_eq!(dedup.nodes.len(), tree.nodes.len());
}

#[test]
fn rotated_convention_gives_the_same_values() {
    let r = ring("group:Z5:int");
    let root = triple(&r, "[Z, 1 - Z + Z^2, 1 + Z - Z^3]");
    let mut a = BTreeSet::new();
    let mut b = BTreeSet::new();
    let mut fa = vec![root.clone()];
    let mut fb = vec![root];
    for _ in 0..3 {
        fa = fa.iter().flat_map(|t| (0..3).map(move |p| mutate(t, p).unwrap())).collect();
        fb = fb.iter().flat_map(|t| (0..3).map(move |p| mutate_rotated(t, p).unwrap())).collect();
        let canon = |x: &RingValue| std::cmp::min(x.to_string(), x.sigma().to_string());
        a.extend(fa.iter().flat_map(|t| t.entries().iter().map(canon)));
        b.extend(fb.iter().flat_map(|t| t.entries().iter().map(canon)));
    }
    assert_eq!(a, b);
}

#[test]
fn fibonacci_classical() {
    let z = Ring::int();
    let t = triple(&z, "[2, 1, 1]");
    let br = fibonacci_branch(&t, 1, 6).unwrap();
    assert_eq!(br.phi, RingValue::from_int(&z, 3));
    let seq: Vec<i64> = br.recurrence.iter().map(|x| x.as_rational().unwrap().to_integer().try_into().unwrap()).collect();
    assert_eq!(seq, vec![1, 2, 5, 13, 34, 89]);
    assert!(br.agree() && br.phi_invariant);
    let br = fibonacci_branch(&MarkovTriple::unit(&z), 0, 5).unwrap();
    assert_eq!(br.phi, RingValue::from_int(&z, 3));
    assert_eq!(br.recurrence.last().unwrap(), &RingValue::from_int(&z, 13));
    assert_eq!(default_frozen_slot(&t), Some(1));
}

#[test]
fn fibonacci_matrix_branch_matches_display() {
    let r = ring("mat:2:laurent:t:int");
    let bt = v(&r, "[[1, t], [0, 1]]");
    let t = MarkovTriple::new(RingValue::one(&r), bt.clone(), bt.inverse().unwrap()).unwrap();
    let br = fibonacci_branch(&t, 0, 5).unwrap();
    assert!(br.agree() && br.phi_invariant);
    let shown = br.oriented_terms();
    assert_eq!(shown[0], bt);
    assert_eq!(shown[2], v(&r, "[[t^2 + 2, -t], [-t^3 - 3t, t^2 + 2]]"));
    assert_eq!(shown[3], v(&r, "[[t^4 + 5t^2 + 5, -t^5 - 6t^3 - 8t], [-t^3 - 3t, t^4 + 5t^2 + 5]]"));
    assert_eq!(
        shown[4],
        v(&r, "[[t^6 + 8t^4 + 19t^2 + 13, -t^5 - 6t^3 - 8t], [-t^7 - 9t^5 - 25t^3 - 21t, t^6 + 8t^4 + 19t^2 + 13]]")
    );
}

#[test]
fn fibonacci_needs_sigma_fixed_frozen_entry() {
    let c = ring("complex-conj");
    let t = triple(&c, "[1, i, -i]");
    assert_eq!(fibonacci_branch(&t, 1, 4).unwrap_err(), MarkovError::CNotSigmaFixed);
}

#[test]
fn matrix_alternate_path() {
    let r = ring("mat:2:laurent:t:int");
    let bt = v(&r, "[[1, t], [0, 1]]");
    let mut t = MarkovTriple::new(RingValue::one(&r), bt.clone(), bt.inverse().unwrap()).unwrap();
    let want = [
        "[[2, 2t], [-2t, 2]]",
        "[[5, -4t], [4t^3 + 11t, 5]]",
        "[[-16t^4 - 32t^2 + 29, -16t^3 - 52t], [36t^3 + 93t, -16t^4 - 32t^2 + 29]]",
    ];
    for (p, w) in [0, 1, 0].into_iter().zip(want) {
        t = mutate(&t, p).unwrap();
        assert_eq!(t.get(p), &v(&r, w));
    }
}

#[test]
fn polar_rule_examples() {
    let q = |n: i64, d: i64| BigRational::new(n.into(), d.into());
    let root = [Polar::from_ints(1, 0, 1), Polar::from_ints(1, 1, 4), Polar::from_ints(1, -1, 4)];
    let m = complex_polar_mutate(&root, 0).unwrap();
    assert_eq!(m[0], Polar::new(q(2, 1), q(1, 2)));
    let r3 = [Polar::from_ints(1, 0, 1), Polar::from_ints(1, 1, 3), Polar::from_ints(1, 2, 3)];
    let m = complex_polar_mutate(&r3, 0).unwrap();
    assert_eq!(m[0], Polar::new(q(2, 1), q(-1, 3)));
    assert_eq!(m, group_oracle_mutate(&ring("group:Z3:int"), &r3, 0).unwrap());
    let flat = [Polar::from_ints(1, 0, 1), Polar::from_ints(2, 0, 1), Polar::from_ints(5, 0, 1)];
    assert_eq!(complex_polar_mutate(&flat, 0).unwrap()[0], Polar::from_ints(29, 0, 1));
}

#[test]
fn complex_neighbors_of_fourth_roots() {
    let c = ring("complex-conj");
    let root = triple(&c, "[1, i, -i]");
    let n0 = mutate(&root, 0).unwrap();
    assert_eq!(n0, triple(&c, "[-2, -i, -i]"));
    let n1 = mutate(&root, 1).unwrap().rotated(1);
    assert_eq!(n1, triple(&c, "[-2i, 1, i]"));
}

#[test]
fn dual_closed_forms() {
    let triv = ring("dual:triv");
    let s = dual_split_mutate(&triple(&triv, "[1, 1 + ε, 1 - ε]"), 0).unwrap();
    assert!(s.agree());
    assert_eq!(s.mutated.get(0), &v(&triv, "2"));
    let s = dual_split_mutate(&triple(&triv, "[2 + 3ε, 5 - ε, 29 + 4ε]"), 1).unwrap();
    assert!(s.agree());
    let conj = ring("dual:conj");
    let s = dual_split_mutate(&triple(&conj, "[1, 1 + ε, 1 - ε]"), 0).unwrap();
    assert!(s.agree());
    assert_eq!(s.mutated.get(0), &v(&conj, "2 + 4ε"));
    assert_eq!(
        dual_split_mutate(&triple(&conj, "[1 + ε, 1, 1]"), 0).unwrap_err(),
        MarkovError::ShadowConstraintViolated
    );
}

#[test]
fn tree_json_shape() {
    let tree = enumerate_tree(&MarkovTriple::unit(&Ring::int()), 1, TreePolicy::default()).unwrap();
    let j = tree.to_json();
    let keys: Vec<&String> = j.as_object().unwrap().keys().collect();
    assert_eq!(keys, ["ring", "root", "F0", "nodes"]);
    assert_eq!(j["nodes"][1]["word"], "0");
    assert_eq!(j["nodes"][1]["triple"], serde_json::json!(["2", "1", "1"]));
}
