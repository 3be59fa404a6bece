use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::literal::{parse_mat2, parse_value};
use crate::markov::MarkovTriple;
use crate::ring::{Ring, RingValue};
use crate::sp2::{random_symplectic_invertible, Mat2};

fn ring(s: &str) -> Ring {
    Ring::parse(s).unwrap()
}

fn m(r: &Ring, text: &str) -> Mat2 {
    Mat2::from_array(parse_mat2(r, text).unwrap()).unwrap()
}

fn q(r: &Ring, s: &str) -> RingValue {
    parse_value(r, s).unwrap()
}

#[test]
fn square_seed_of_a_small_integer_matrix() {
    let z = Ring::int();
    let mm = m(&z, "[[2, 1], [1, 1]]");
    let s = seed_from_matrix(&mm).unwrap();
    assert_eq!(s.value(1, 3).unwrap(), q(&z, "2"));
    assert_eq!(s.value(1, 4).unwrap(), q(&z, "1"));
    assert_eq!(s.angle(3, 1, 2).unwrap(), q(&z, "1/2"));
    assert!(s.triangle_conditions_hold());
    assert_eq!(extract_matrix(&s, [1, 2, 3, 4]).unwrap(), mm);
    assert_eq!(phi_r(&s).unwrap(), q(&z, "3"));
    assert_eq!(phi_l(&s).unwrap(), q(&z, "3"));
    let s = seed_from_matrix(&m(&z, "[[1, 1], [1, 2]]")).unwrap();
    assert_eq!(phi_r(&s).unwrap(), q(&z, "3"));
}

#[test]
fn square_seed_errors() {
    let z = Ring::int();
    assert_eq!(seed_from_matrix(&m(&z, "[[1, 0], [1, 1]]")).unwrap_err(), ClusterError::EntryNotInvertible('B'));
    assert_eq!(seed_from_matrix(&m(&z, "[[1, 1], [1, 1]]")).unwrap_err(), ClusterError::NotSymplectic);
    let s = seed_from_matrix(&m(&z, "[[2, 1], [1, 1]]")).unwrap();
    assert_eq!(s.mutate_edge(1, 2).unwrap_err(), ClusterError::FrozenEdge(1, 2));
    assert!(matches!(s.value(2, 4), Err(ClusterError::MissingEdge(..))));
}

#[test]
fn flipping_the_diagonal_recovers_d() {
    let z = Ring::int();
    let mm = m(&z, "[[2, 1], [1, 1]]");
    let s = seed_from_matrix(&mm).unwrap().mutate_edge(1, 3).unwrap();
    assert_eq!(s.value(2, 4).unwrap(), mm.d);
    assert!(s.triangle_conditions_hold());
    let back = s.mutate_edge(2, 4).unwrap();
    assert_eq!(back.value(1, 3).unwrap(), mm.a);
}

#[test]
fn amalgamation_multiplies() {
    let z = Ring::int();
    let mm = m(&z, "[[2, 1], [1, 1]]");
    let nn = m(&z, "[[1, 1], [1, 2]]");
    let (seed, p) = amalgamate_multiply(&mm, &nn).unwrap();
    assert_eq!(p, m(&z, "[[3, 4], [2, 3]]"));
    assert!(seed.triangle_conditions_hold());
    let (_, sq) = amalgamate_multiply(&mm, &mm).unwrap();
    assert_eq!(sq, m(&z, "[[5, 3], [3, 2]]"));
}

#[test]
fn half_turn() {
    let z = Ring::int();
    let s = seed_from_matrix(&m(&z, "[[2, 1], [1, 1]]")).unwrap();
    let r = rotate_180(&s).unwrap();
    assert_eq!(rotate_180(&r).unwrap().edges(), s.edges());
    let c = ring("complex-conj");
    let mm = random_symplectic_invertible(&c, &mut ChaCha8Rng::seed_from_u64(3), 6);
    let turned = rotate_180(&seed_from_matrix(&mm).unwrap()).unwrap();
    let expected = Mat2::new(mm.a.sigma(), mm.c.sigma(), mm.b.sigma(), mm.d.sigma()).unwrap();
    assert_eq!(extract_matrix(&turned, [1, 2, 3, 4]).unwrap(), expected);
}

#[test]
fn monodromy_of_the_canonical_path() {
    let z = Ring::int();
    let mm = m(&z, "[[2, 1], [1, 1]]");
    let s = seed_from_matrix(&mm).unwrap();
    assert_eq!(monodromy(&s, &MonodromyPath::canonical_square()).unwrap(), mm);
    assert_eq!(monodromy(&s, &MonodromyPath::default()).unwrap(), Mat2::identity(&z));
    let mut there_and_back = MonodromyPath::canonical_square().0;
    there_and_back.extend(MonodromyPath::canonical_square().0.iter().rev().map(|st| Step { reversed: true, ..*st }));
    assert_eq!(monodromy(&s, &MonodromyPath(there_and_back)).unwrap(), Mat2::identity(&z));
    let broken = MonodromyPath(vec![
        Step::forward(Token::Short { vertex: 2, from: 1, to: 3 }),
        Step::forward(Token::Long { i: 1, j: 3 }),
    ]);
    assert_eq!(monodromy(&s, &broken).unwrap_err(), ClusterError::Disconnected(1));
}

#[test]
fn vertex_rescaling() {
    let z = Ring::int();
    let s = seed_from_matrix(&m(&z, "[[2, 1], [1, 1]]")).unwrap();
    assert_eq!(s.rescale_vertex(1, &RingValue::one(&z)).unwrap(), s);
    let t = TorusSeed::unit(&z);
    let scaled = t.rescale_vertex(&q(&z, "2")).unwrap();
    assert_eq!(scaled.vertex_angle_sum().unwrap(), q(&z, "24"));
    let g = ring("group:Z5:int");
    let root = MarkovTriple::from_array(crate::literal::parse_triple(&g, "[Z, 1 - Z + Z^2, 1 + Z - Z^3]").unwrap())
        .unwrap();
    let t = TorusSeed::new(root);
    let f = t.vertex_angle_sum().unwrap();
    assert_eq!(t.rescale_vertex(&q(&g, "Z")).unwrap().vertex_angle_sum().unwrap(), f);
}

#[test]
fn torus_flip_and_json() {
    let z = Ring::int();
    let t = TorusSeed::unit(&z).mutate_edge(0).unwrap();
    assert_eq!(t.triple().get(0), &q(&z, "2"));
    let j = t.to_json();
    assert_eq!(j["edges"]["0-0/A"], "2");
    assert_eq!(TorusSeed::from_json(&j).unwrap(), t);
}

#[test]
fn seed_json_round_trip() {
    let r = ring("mat:2:rat");
    let mm = random_symplectic_invertible(&r, &mut ChaCha8Rng::seed_from_u64(11), 5);
    let s = seed_from_matrix(&mm).unwrap().mutate_edge(1, 3).unwrap();
    let back = ClusterSeed::from_json(&s.to_json()).unwrap();
    assert_eq!(back, s);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn square_invariants_over_matrices(seed in any::<u64>()) {
        let r = ring("mat:2:rat");
        let mm = random_symplectic_invertible(&r, &mut ChaCha8Rng::seed_from_u64(seed), 4);
        let s = seed_from_matrix(&mm).unwrap();
        let a_inv = mm.a.inverse().unwrap();
        let c_inv = mm.c.inverse().unwrap();
        let b_inv = mm.b.inverse().unwrap();
        prop_assert_eq!(phi_r(&s).unwrap(), &mm.a * &c_inv + &c_inv * &mm.d);
        prop_assert_eq!(phi_l(&s).unwrap(), &mm.d * &b_inv + &b_inv * &mm.a);
        prop_assert_eq!(monodromy(&s, &MonodromyPath::canonical_square()).unwrap(), mm.clone());
        let f = s.mutate_edge(1, 3).unwrap();
        prop_assert!(f.triangle_conditions_hold());
        prop_assert_eq!(f.value(2, 4).unwrap(), &mm.c * &a_inv * &mm.b + a_inv.sigma());
        for v in 1..=4 {
            prop_assert_eq!(f.vertex_angle_sum(v).unwrap(), s.vertex_angle_sum(v).unwrap());
        }
        prop_assert_eq!(f.mutate_edge(2, 4).unwrap().value(1, 3).unwrap(), mm.a.clone());
    }
}
